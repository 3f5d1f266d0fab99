//! The ten acceptance criteria. Each test prints one `PASS`/`FAIL` line and
//! enforces its runtime bound. Run with
//! `cargo test -p qh-toeplitz --test acceptance -- --nocapture --test-threads 1`
//! to see the report in order.

mod common;

use std::time::{Duration, Instant};

use qh_toeplitz::algebra::{rat, rat_int};
use qh_toeplitz::commutant::{
    candidate_from_f, check_eq22, convolution_constant, solve_commutant_with,
    solve_convolution_equation, system_s_matrix, uniqueness_report, Ansatz,
};
use qh_toeplitz::mellin::{mellin_transform, vanishing_on_sequence};
use qh_toeplitz::operators::check_commute_range;
use qh_toeplitz::quadrature::{validate_lemma2, QuadratureConfig};
use qh_toeplitz::symbols::mellin_convolve;
use qh_toeplitz::{parse_symbol, Polynomial, QHSymbol, RadialSymbol, RationalFunction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ORACLE_TOLERANCE: f64 = 1e-9;

/// Runs `body`, prints the verdict line and fails on error or overrun.
fn criterion(n: u32, name: &str, limit_secs: u64, body: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_secs);
    let verdict = match &outcome {
        Ok(_) if elapsed >= limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
        Ok(detail) => Ok(detail.clone()),
        Err(e) => Err(e.clone()),
    };
    match verdict {
        Ok(detail) => println!("PASS [{n:>2}] {name} ({elapsed:.2?}): {detail}"),
        Err(e) => {
            println!("FAIL [{n:>2}] {name} ({elapsed:.2?}): {e}");
            panic!("criterion {n} failed: {e}");
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn radial(s: &str) -> RadialSymbol {
    parse_symbol(s).unwrap().radial
}

#[test]
fn c01_mellin_monomial_law() {
    criterion(1, "Mellin monomial law", 1, || {
        for n in 0..=20i64 {
            let got = mellin_transform(&RadialSymbol::power(n).unwrap());
            let want =
                RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[n, 1])).unwrap();
            ensure(got == want, || format!("n = {n}: got {got}"))?;
        }
        Ok("r^n -> 1/(z+n) for n = 0..20".into())
    });
}

#[test]
fn c02_convolution_multiplicativity() {
    criterion(2, "Convolution multiplicativity", 5, || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
        for i in 0..200 {
            let f = common::random_log_free(&mut rng);
            let g = common::random_log_free(&mut rng);
            let conv = mellin_convolve(&f, &g).map_err(|e| e.to_string())?;
            let lhs = mellin_transform(&conv);
            let rhs = &mellin_transform(&f) * &mellin_transform(&g);
            ensure(lhs == rhs, || format!("pair {i}: f = {f}, g = {g}"))?;
        }
        Ok("200 random pairs, exact".into())
    });
}

#[test]
fn c03_basis_action_oracle_agreement() {
    criterion(3, "Basis action vs quadrature oracle", 30, || {
        let cfg = QuadratureConfig::default();
        let exponents = [rat_int(-1), rat(-1, 2), rat_int(1), rat_int(2), rat_int(3)];
        let mut worst = (0.0f64, String::new());
        for p in -3..=3i64 {
            for e in &exponents {
                let f = QHSymbol::new(p, RadialSymbol::monomial(rat_int(1), e.clone()).unwrap());
                let rep = validate_lemma2(&f, 10, &cfg).map_err(|e| e.to_string())?;
                if rep.max_abs_dev > worst.0 || worst.1.is_empty() {
                    worst = (rep.max_abs_dev, format!("{f} at {}", rep.worst_index));
                }
            }
        }
        ensure(worst.0 <= ORACLE_TOLERANCE, || {
            format!("max deviation {:.3e} at {}", worst.0, worst.1)
        })?;
        Ok(format!(
            "35 symbols, kmax 10, max deviation {:.2e} ({})",
            worst.0, worst.1
        ))
    });
}

#[test]
fn c04_analytic_anchor() {
    criterion(4, "Analytic anchor commutes", 2, || {
        let f = parse_symbol("E(-1)*r^(1)").unwrap();
        let g = parse_symbol("E(1)*r^(-1)").unwrap();
        let rep = check_commute_range(&f, &g, 500).map_err(|e| e.to_string())?;
        ensure(rep.commutes, || format!("fails at {}", rep.failures[0].vec))?;
        Ok("E(-1)*r^(1) and E(1)*r^(-1) commute for |index| <= 500".into())
    });
}

#[test]
fn c05_convolution_equation_family() {
    criterion(5, "Convolution equation family", 2, || {
        let c = convolution_constant();
        let target = RadialSymbol::monomial(c.clone(), rat_int(-1))
            .unwrap()
            .sub(&RadialSymbol::monomial(c, rat_int(1)).unwrap());
        for a in [-1i64, 0, 1, 2, 3, 4, 5, 6] {
            let psi = RadialSymbol::power(a).unwrap();
            let phi = solve_convolution_equation(1, &psi).map_err(|e| e.to_string())?;
            let want = RadialSymbol::from_coefficients(
                &[rat_int(-1), rat_int(1)],
                &[rat(a + 1, 2), rat(-(a - 1), 2)],
            )
            .unwrap();
            ensure(phi == want, || {
                format!("alpha = {a}: got {phi}, want {want}")
            })?;
            let conv = mellin_convolve(&phi, &psi).map_err(|e| e.to_string())?;
            ensure(conv == target, || {
                format!("alpha = {a}: convolution {conv}")
            })?;
        }
        Ok("alpha in {-1..6}, phi * r^alpha = (r^(-1) - r)/2".into())
    });
}

#[test]
fn c06_candidate_matches_convolution_solution() {
    criterion(6, "F-candidate vs convolution solution", 2, || {
        for m in 0..=8u32 {
            let cand = candidate_from_f(1, 1, m)
                .symbol()
                .map_err(|e| e.to_string())?;
            let psi = RadialSymbol::power(2 * m as i64 + 1).unwrap();
            let phi = solve_convolution_equation(1, &psi).map_err(|e| e.to_string())?;
            ensure(cand.proportional_to(&phi), || {
                format!("m = {m}: {cand} vs {phi}")
            })?;
        }
        Ok("m = 0..8 proportional".into())
    });
}

#[test]
fn c07_exact_kernel_anchors() {
    criterion(7, "Exact kernel anchors", 5, || {
        let r = solve_commutant_with(1, 1, 0, 1000).map_err(|e| e.to_string())?;
        ensure(r.kernel == vec![radial("r^(-1)")], || {
            format!("(1,1,0): {:?}", r.kernel)
        })?;
        ensure(r.kernel_verified, || {
            "(1,1,0) kernel fails commutation".into()
        })?;

        let r = solve_commutant_with(1, 1, 1, 1000).map_err(|e| e.to_string())?;
        ensure(r.kernel == vec![radial("2*r^(-1) - r^(1)")], || {
            format!("(1,1,1): {:?}", r.kernel)
        })?;
        let f = QHSymbol::new(1, r.kernel[0].clone());
        let g = QHSymbol::new(-1, RadialSymbol::power(3).unwrap());
        let rep = check_commute_range(&f, &g, 1000).map_err(|e| e.to_string())?;
        ensure(rep.commutes, || {
            format!("(1,1,1) fails at {}", rep.failures[0].vec)
        })?;

        let r = solve_commutant_with(1, 3, 1, 1000).map_err(|e| e.to_string())?;
        ensure(r.kernel.is_empty(), || format!("(1,3,1): {:?}", r.kernel))?;
        Ok("span{r^(-1)}, span{2r^(-1) - r} (kmax 1000), trivial".into())
    });
}

#[test]
fn c08_consistency_obstruction() {
    criterion(8, "Consistency identity obstruction", 1, || {
        let got = check_eq22(2, 1, 3);
        ensure(got == vec![0], || format!("(2,1,3): {got:?}"))?;
        for p in 2..=4 {
            for s in 1..=2 {
                let got = check_eq22(p, s, s);
                ensure(got.is_empty(), || format!("({p},{s},{s}): {got:?}"))?;
            }
        }
        Ok("(2,1,3) fails at k = 0; n = s passes".into())
    });
}

#[test]
fn c09_uniqueness_grid() {
    criterion(9, "Uniqueness grid", 10, || {
        let mut report = Vec::new();
        let mut findings = Vec::new();
        for s in 1..=3u32 {
            for m in 0..=3u32 {
                let n = (2 * m + 1) * s;
                let ansatz = Ansatz::from_ints(
                    &(0..=m as i64)
                        .map(|j| 2 * j * s as i64 - 1)
                        .collect::<Vec<_>>(),
                )
                .unwrap();
                let psi = RadialSymbol::power(n as i64).unwrap();
                let u = uniqueness_report(1, s, &psi, &ansatz).map_err(|e| e.to_string())?;
                ensure(u.dimension <= 1, || {
                    format!("(s={s}, m={m}) dimension {}", u.dimension)
                })?;
                let rank = system_s_matrix(s, m).rank();
                report.push(format!("s={s},m={m}:dim{},rankS{rank}", u.dimension));
                // the positive branch claims a nontrivial kernel and rank s when s <= m+1
                let positive_branch = s <= m + 1;
                let mut why = Vec::new();
                if positive_branch != (u.dimension == 1) {
                    why.push(format!("kernel dimension {}", u.dimension));
                }
                if positive_branch && rank < s as usize {
                    why.push(format!("system S rank {rank} < {s}"));
                }
                if !why.is_empty() {
                    findings.push(format!("(s={s}, m={m}): {}", why.join(", ")));
                }
            }
        }
        for f in &findings {
            println!("     finding {f}");
        }
        Ok(format!(
            "all dimensions <= 1 [{}]; {} finding(s)",
            report.join(" "),
            findings.len()
        ))
    });
}

#[test]
fn c10_vanishing_on_sequence() {
    criterion(10, "Vanishing on a sequence", 1, || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
        for i in 0..100 {
            let f = common::random_nonzero_rf(&mut rng);
            let p = rng.gen_range(1..=20);
            let n0 = rng.gen_range(-20..=20);
            ensure(!vanishing_on_sequence(&f, p, n0), || {
                format!("case {i}: {f}")
            })?;
            // witness: a nonzero value among the first deg(num) + deg(den) + 1 sample points
            let budget = f.num().degree().unwrap_or(0) + f.den().degree().unwrap_or(0) + 1;
            let witness = (0..=budget as i64).any(|k| {
                f.eval(&rat_int(p as i64 * k + n0))
                    .map(|v| v != rat_int(0))
                    .unwrap_or(false)
            });
            ensure(witness, || format!("case {i}: no nonzero sample for {f}"))?;
        }
        ensure(
            vanishing_on_sequence(&RationalFunction::zero(), 3, 2),
            || "zero function not reported as vanishing".into(),
        )?;
        Ok("100 nonzero functions false, zero true".into())
    });
}
