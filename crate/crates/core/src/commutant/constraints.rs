//! Linear constraints on an unknown radial symbol forced by commutation.
//!
//! Fix `T_f = T_{e^{ipθ}φ}` with `φ = Σ c_j r^{e_j}` unknown and
//! `T_g = T_{e^{-isθ}ψ}` known. On each basis vector both `T_f T_g` and
//! `T_g T_f` land on the same monomial, so commutation is one scalar
//! equation per basis vector, linear in the `c_j`.
//!
//! Both compositions are built symbolically in `k` along the families
//! `z^k` (`k ≥ 0`) and `z̄^k` (`k ≥ 1`). Past the last index at which any
//! intermediate index changes sign the branch choices are fixed and each
//! equation is a rational identity in `k`; it holds for infinitely many
//! integers iff it holds identically, so after clearing denominators every
//! power of `k` contributes one exact row. Below that point each `k` gives
//! one row.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{
    rat_int, rational_roots, ExactMatrix, Polynomial, Rational, RationalFunction,
};
use crate::error::{Error, Result};
use crate::mellin::mellin_transform;
use crate::operators::{branch_image, Affine, BasisVector};
use crate::symbols::RadialSymbol;

/// Sorted, pairwise distinct, admissible exponents `e_j` of the unknown
/// `φ = Σ c_j r^{e_j}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ansatz {
    exponents: Vec<Rational>,
}

impl Ansatz {
    pub fn new(mut exponents: Vec<Rational>) -> Result<Self> {
        exponents.sort();
        if exponents.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(
                "ansatz exponents must be distinct".into(),
            ));
        }
        for e in &exponents {
            if *e <= rat_int(-2) {
                return Err(Error::InadmissibleExponent {
                    exponent: e.clone(),
                });
            }
        }
        Ok(Ansatz { exponents })
    }

    pub fn from_ints(exponents: &[i64]) -> Result<Self> {
        Self::new(exponents.iter().map(|&e| rat_int(e)).collect())
    }

    pub fn exponents(&self) -> &[Rational] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn symbol(&self, coeffs: &[Rational]) -> RadialSymbol {
        RadialSymbol::from_coefficients(&self.exponents, coeffs).expect("admissible ansatz")
    }

    /// Coefficients of `phi` on the ansatz, or `None` if `phi` has a term
    /// outside it.
    pub fn coordinates(&self, phi: &RadialSymbol) -> Option<Vec<Rational>> {
        let inside = phi
            .terms()
            .iter()
            .all(|t| t.log_power == 0 && self.exponents.contains(&t.exponent));
        inside.then(|| {
            self.exponents
                .iter()
                .map(|e| phi.coefficient_of(e))
                .collect()
        })
    }
}

/// The equation families obtained from commutation of a degree `p > 0` and
/// a degree `-s < 0` operator, labelled by the basis vectors they come from:
/// `z^k` gives `HoloLow` (`k + p < s`), `HoloMid` (`s - p ≤ k < s`), `HoloTail`
/// (`k ≥ s`); `z̄^k` gives `AntiLow` (`k + s < p`), `AntiMid` (`p - s ≤ k < p`),
/// `AntiTail` (`k ≥ p`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum IdentityFamily {
    AntiLow,
    HoloLow,
    HoloMid,
    AntiMid,
    HoloTail,
    AntiTail,
}

impl IdentityFamily {
    pub fn classify(p: i64, s: i64, v: BasisVector) -> Self {
        let k = v.power() as i64;
        if !v.is_conjugate() {
            if k >= s {
                IdentityFamily::HoloTail
            } else if k + p >= s {
                IdentityFamily::HoloMid
            } else {
                IdentityFamily::HoloLow
            }
        } else if k >= p {
            IdentityFamily::AntiTail
        } else if k + s >= p {
            IdentityFamily::AntiMid
        } else {
            IdentityFamily::AntiLow
        }
    }
}

impl fmt::Display for IdentityFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentityFamily::AntiLow => "zbar-low",
            IdentityFamily::HoloLow => "z-low",
            IdentityFamily::HoloMid => "z-mid",
            IdentityFamily::AntiMid => "zbar-mid",
            IdentityFamily::HoloTail => "z-tail",
            IdentityFamily::AntiTail => "zbar-tail",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RowTag {
    /// Commutation at one basis vector.
    Finite {
        family: IdentityFamily,
        vec: BasisVector,
    },
    /// Coefficient of `k^power` in the cleared identity for the tail of a
    /// family.
    Tail {
        family: IdentityFamily,
        conjugate: bool,
        start: i64,
        power: usize,
    },
}

impl fmt::Display for RowTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowTag::Finite { family, vec } => write!(f, "{family} at {vec}"),
            RowTag::Tail {
                family,
                conjugate,
                start,
                power,
            } => {
                let base = if *conjugate { "zbar" } else { "z" };
                write!(
                    f,
                    "{family} on {base}^k, k >= {start}: coefficient of k^{power}"
                )
            }
        }
    }
}

/// The identity `Σ_j c_j · coeffs[j](k) = 0` for all `k ≥ start` on one
/// family.
#[derive(Clone, PartialEq, Debug)]
pub struct TailIdentity {
    pub family: IdentityFamily,
    pub conjugate: bool,
    pub start: i64,
    /// One rational function of `k` per ansatz exponent.
    pub coeffs: Vec<RationalFunction>,
}

impl TailIdentity {
    pub fn row_at(&self, k: i64) -> Result<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.eval(&rat_int(k))).collect()
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct ConstraintSystem {
    pub p: i64,
    pub s: i64,
    pub ansatz: Ansatz,
    pub matrix: ExactMatrix,
    pub tags: Vec<RowTag>,
    pub tails: Vec<TailIdentity>,
}

impl ConstraintSystem {
    /// The commutation equation at basis vector `v`, from the finite rows or
    /// by evaluating a tail identity.
    pub fn row_for(&self, v: BasisVector) -> Option<Vec<Rational>> {
        for (i, tag) in self.tags.iter().enumerate() {
            if let RowTag::Finite { vec, .. } = tag {
                if *vec == v {
                    return Some(self.matrix.row(i).to_vec());
                }
            }
        }
        let k = v.power() as i64;
        self.tails
            .iter()
            .find(|t| t.conjugate == v.is_conjugate() && k >= t.start)
            .and_then(|t| t.row_at(k).ok())
    }

    pub fn finite_rows(&self) -> impl Iterator<Item = (&RowTag, &[Rational])> {
        self.tags
            .iter()
            .enumerate()
            .filter(|(_, t)| matches!(t, RowTag::Finite { .. }))
            .map(|(i, t)| (t, self.matrix.row(i)))
    }
}

/// One composition path: product of the two branch weights and the points
/// where `φ̂` and `ψ̂` are evaluated. `φ̂(x)` expands on the ansatz as
/// `[1/(x + e_j)]_j`.
struct Composition {
    factor: Polynomial,
    phi_point: Affine,
    psi_point: Affine,
}

/// `T_f T_g` (g applied first) and `T_g T_f` on the family `index(k)`, with
/// branches decided at `k_decide`.
fn compositions(p: i64, s: i64, index: Affine, k_decide: i64) -> (Composition, Composition) {
    let (d_phi, d_psi) = (p, -s);
    let g1 = branch_image(d_psi, index, k_decide);
    let f2 = branch_image(d_phi, g1.out, k_decide);
    let f1 = branch_image(d_phi, index, k_decide);
    let g2 = branch_image(d_psi, f1.out, k_decide);
    (
        Composition {
            factor: &g1.factor.to_poly() * &f2.factor.to_poly(),
            phi_point: f2.point,
            psi_point: g1.point,
        },
        Composition {
            factor: &f1.factor.to_poly() * &g2.factor.to_poly(),
            phi_point: f1.point,
            psi_point: g2.point,
        },
    )
}

fn finite_row(
    p: i64,
    s: i64,
    psi_hat: &RationalFunction,
    ansatz: &Ansatz,
    v: BasisVector,
) -> Result<Vec<Rational>> {
    let index = Affine::constant(v.index());
    let (a, b) = compositions(p, s, index, 0);
    let side = |c: &Composition| -> Result<Vec<Rational>> {
        let scalar =
            c.factor.eval(&Rational::zero()) * psi_hat.eval(&rat_int(c.psi_point.eval(0)))?;
        let x = rat_int(c.phi_point.eval(0));
        ansatz
            .exponents()
            .iter()
            .map(|e| {
                let d = &x + e;
                if d.is_zero() {
                    Err(Error::PoleAtEvaluation { point: x.clone() })
                } else {
                    Ok(&scalar / d)
                }
            })
            .collect()
    };
    let (ra, rb) = (side(&a)?, side(&b)?);
    Ok(ra.into_iter().zip(rb).map(|(x, y)| x - y).collect())
}

fn affine_rf(f: &RationalFunction, at: Affine) -> RationalFunction {
    if at.slope == 0 {
        // a pole here is caught by the pole scan
        f.eval(&rat_int(at.offset))
            .map(RationalFunction::constant)
            .unwrap_or_else(|_| RationalFunction::zero())
    } else {
        f.compose_affine(&rat_int(at.slope), &rat_int(at.offset))
    }
}

/// Fails if `at(k) ∈ poles` for some integer `k ≥ start`.
fn scan_poles(poles: &[Rational], at: Affine, start: i64) -> Result<()> {
    for pole in poles {
        let hit = if at.slope == 0 {
            rat_int(at.offset) == *pole
        } else {
            let k = (pole - rat_int(at.offset)) / rat_int(at.slope);
            k.is_integer() && k >= rat_int(start)
        };
        if hit {
            return Err(Error::PoleAtEvaluation {
                point: pole.clone(),
            });
        }
    }
    Ok(())
}

fn tail_identity(
    p: i64,
    s: i64,
    psi_hat: &RationalFunction,
    psi_poles: &[Rational],
    ansatz: &Ansatz,
    conjugate: bool,
    start: i64,
) -> Result<TailIdentity> {
    let sigma = if conjugate { -1 } else { 1 };
    let index = Affine::new(sigma, 0);
    let (a, b) = compositions(p, s, index, start + 1);
    let phi_poles: Vec<Rational> = ansatz.exponents().iter().map(|e| -e.clone()).collect();
    for c in [&a, &b] {
        scan_poles(psi_poles, c.psi_point, start)?;
        scan_poles(&phi_poles, c.phi_point, start)?;
    }
    let side = |c: &Composition, e: &Rational| -> RationalFunction {
        let factor = RationalFunction::from_poly(c.factor.clone());
        let psi = affine_rf(psi_hat, c.psi_point);
        let phi_den = &c.phi_point.to_poly() + &Polynomial::constant(e.clone());
        let phi = RationalFunction::new(Polynomial::one(), phi_den).expect("nonzero affine");
        &(&factor * &psi) * &phi
    };
    let coeffs = ansatz
        .exponents()
        .iter()
        .map(|e| &side(&a, e) - &side(&b, e))
        .collect();
    let v = BasisVector::from_index(sigma * start);
    Ok(TailIdentity {
        family: IdentityFamily::classify(p, s, v),
        conjugate,
        start,
        coeffs,
    })
}

/// Clears denominators of a tail identity and returns one row per power of
/// `k`.
fn tail_rows(t: &TailIdentity) -> Vec<Vec<Rational>> {
    let den = t.coeffs.iter().fold(Polynomial::one(), |acc, c| {
        let g = acc.gcd(c.den());
        (&acc * c.den()).div_rem(&g).0
    });
    let nums: Vec<Polynomial> = t
        .coeffs
        .iter()
        .map(|c| &c.num().clone() * &den.div_rem(c.den()).0)
        .collect();
    let top = nums.iter().filter_map(Polynomial::degree).max();
    match top {
        None => vec![vec![Rational::zero(); t.coeffs.len()]],
        Some(d) => (0..=d)
            .map(|i| nums.iter().map(|n| n.coeff(i)).collect())
            .collect(),
    }
}

/// Exact constraints on `φ` (over `ansatz`) for `T_{e^{ipθ}φ}` to commute
/// with `T_{e^{-isθ}ψ}`.
pub fn generate_constraints(
    p: u32,
    s: u32,
    psi: &RadialSymbol,
    ansatz: &Ansatz,
) -> Result<ConstraintSystem> {
    if p == 0 || s == 0 {
        return Err(Error::InvalidInput("p and s must be positive".into()));
    }
    let (p, s) = (p as i64, s as i64);
    let psi_hat = mellin_transform(psi);
    let psi_poles: Vec<Rational> = if psi_hat.is_zero() {
        Vec::new()
    } else {
        rational_roots(psi_hat.den())?
            .0
            .into_iter()
            .map(|(r, _)| r)
            .collect()
    };

    let mut rows = Vec::new();
    let mut tags = Vec::new();
    let mut tails = Vec::new();

    for conjugate in [false, true] {
        let sigma = if conjugate { -1 } else { 1 };
        let first = if conjugate { 1 } else { 0 };
        let shifts = [0, p, -s, p - s];
        let start = shifts.iter().map(|c| -sigma * c).max().unwrap().max(first);
        for k in first..start {
            let v = BasisVector::from_index(sigma * k);
            rows.push(finite_row(p, s, &psi_hat, ansatz, v)?);
            tags.push(RowTag::Finite {
                family: IdentityFamily::classify(p, s, v),
                vec: v,
            });
        }
        let tail = tail_identity(p, s, &psi_hat, &psi_poles, ansatz, conjugate, start)?;
        for (power, row) in tail_rows(&tail).into_iter().enumerate() {
            rows.push(row);
            tags.push(RowTag::Tail {
                family: tail.family,
                conjugate,
                start,
                power,
            });
        }
        tails.push(tail);
    }

    Ok(ConstraintSystem {
        p,
        s,
        ansatz: ansatz.clone(),
        matrix: ExactMatrix::from_rows(ansatz.len(), rows),
        tags,
        tails,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::kernel_basis;
    use crate::operators::check_commute_range;
    use crate::symbols::{parse_symbol, QHSymbol};

    fn kernel_symbols(sys: &ConstraintSystem) -> Vec<RadialSymbol> {
        kernel_basis(&sys.matrix)
            .iter()
            .map(|v| sys.ansatz.symbol(v).primitive())
            .collect()
    }

    #[test]
    fn analytic_pair_kernel() {
        let sys = generate_constraints(
            1,
            1,
            &RadialSymbol::power(1).unwrap(),
            &Ansatz::from_ints(&[-1]).unwrap(),
        )
        .unwrap();
        assert!(sys.matrix.rank() == 0);
        assert_eq!(kernel_symbols(&sys), vec![RadialSymbol::power(-1).unwrap()]);
    }

    #[test]
    fn cubic_partner() {
        let sys = generate_constraints(
            1,
            1,
            &RadialSymbol::power(3).unwrap(),
            &Ansatz::from_ints(&[-1, 1]).unwrap(),
        )
        .unwrap();
        let k = kernel_symbols(&sys);
        assert_eq!(k, vec![parse_symbol("2*r^(-1) - r^(1)").unwrap().radial]);
        let rep = check_commute_range(
            &QHSymbol::new(1, k[0].clone()),
            &QHSymbol::new(-1, RadialSymbol::power(3).unwrap()),
            500,
        )
        .unwrap();
        assert!(rep.commutes);
    }

    #[test]
    fn s_larger_than_m_plus_one_is_trivial() {
        let sys = generate_constraints(
            1,
            3,
            &RadialSymbol::power(9).unwrap(),
            &Ansatz::from_ints(&[-1, 5]).unwrap(),
        )
        .unwrap();
        assert!(kernel_basis(&sys.matrix).is_empty());
    }

    #[test]
    fn tags_follow_families() {
        let sys = generate_constraints(
            2,
            3,
            &RadialSymbol::power(1).unwrap(),
            &Ansatz::from_ints(&[0, 1]).unwrap(),
        )
        .unwrap();
        let finite: Vec<String> = sys.finite_rows().map(|(t, _)| t.to_string()).collect();
        assert_eq!(
            finite,
            [
                "z-low at z^0",
                "z-mid at z^1",
                "z-mid at z^2",
                "zbar-mid at zbar^1"
            ]
        );
        assert_eq!(sys.tails[0].family, IdentityFamily::HoloTail);
        assert_eq!(sys.tails[0].start, 3);
        assert_eq!(sys.tails[1].family, IdentityFamily::AntiTail);
        assert_eq!(sys.tails[1].start, 2);
    }

    #[test]
    fn rows_match_direct_commutators() {
        // the row at v applied to c equals lhs - rhs of the commutator at v
        let psi = parse_symbol("r^(2) + 3*r^(1/2)").unwrap().radial;
        let ansatz = Ansatz::new(vec![
            rat_int(-1),
            Rational::new(1.into(), 3.into()),
            rat_int(2),
        ])
        .unwrap();
        let sys = generate_constraints(2, 1, &psi, &ansatz).unwrap();
        let c = [rat_int(2), rat_int(-5), Rational::new(7.into(), 2.into())];
        let phi = ansatz.symbol(&c);
        let f = QHSymbol::new(2, phi);
        let g = QHSymbol::new(-1, psi);
        for v in crate::operators::sweep_order(12) {
            let row = sys.row_for(v).unwrap();
            let lhs: Rational = row.iter().zip(&c).map(|(a, b)| a * b).sum();
            let (x, y) = crate::operators::commutator_coefficient(&f, &g, v).unwrap();
            assert_eq!(lhs, &x.coeff - &y.coeff, "at {v}");
        }
    }

    #[test]
    fn ansatz_validation() {
        assert!(Ansatz::from_ints(&[1, 1]).is_err());
        assert!(matches!(
            Ansatz::from_ints(&[-2, 1]),
            Err(Error::InadmissibleExponent { .. })
        ));
        assert_eq!(
            Ansatz::from_ints(&[3, -1]).unwrap().exponents()[0],
            rat_int(-1)
        );
    }
}
