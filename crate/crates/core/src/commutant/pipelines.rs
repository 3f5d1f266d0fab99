use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::constraints::{generate_constraints, Ansatz, ConstraintSystem};
use crate::algebra::{
    kernel_basis, rat, rat_int, rf_partial_fractions, ExactMatrix, Rational, RationalFunction,
};
use crate::error::{Error, Result};
use crate::mellin::{build_f_thm2, inverse_mellin, mellin_transform};
use crate::operators::check_commute_range;
use crate::symbols::{
    classify_boundedness, mellin_convolve, BoundednessClass, QHSymbol, RadialSymbol,
};

/// Default sweep used to re-verify kernel members by direct commutation.
pub const DEFAULT_VERIFY_KMAX: u32 = 64;

/// `Σ a_j r^{2js - p}` read off the partial fractions `F(z) = Σ a_j/(z + 2js)`.
/// Terms are kept even when the exponent is inadmissible so the caller can
/// see them.
#[derive(Clone, PartialEq, Debug)]
pub struct FCandidate {
    pub p: u32,
    pub s: u32,
    pub m: u32,
    /// `(exponent, coefficient)`, increasing exponent.
    pub terms: Vec<(Rational, Rational)>,
    pub diagnostics: Vec<String>,
}

impl FCandidate {
    /// The candidate as a symbol in primitive normalization.
    pub fn symbol(&self) -> Result<RadialSymbol> {
        let exps: Vec<Rational> = self.terms.iter().map(|t| t.0.clone()).collect();
        let coeffs: Vec<Rational> = self.terms.iter().map(|t| t.1.clone()).collect();
        Ok(RadialSymbol::from_coefficients(&exps, &coeffs)?.primitive())
    }
}

pub fn candidate_from_f(p: u32, s: u32, m: u32) -> FCandidate {
    let f = build_f_thm2(p, s, m);
    let pf = rf_partial_fractions(&f).expect("F splits over the rationals");
    let mut terms: Vec<(Rational, Rational)> = pf
        .terms
        .iter()
        .map(|t| {
            debug_assert_eq!(t.multiplicity, 1);
            (-&t.pole - rat_int(p as i64), t.coefficient.clone())
        })
        .collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let mut diagnostics = Vec::new();
    diagnostics.push(format!("F(z) = {f}; partial fractions {pf}"));
    let cancelled = (m as usize + 1) - terms.len();
    if cancelled > 0 {
        diagnostics.push(format!("{cancelled} pole(s) of the Gamma ratio cancel"));
    }
    for (e, _) in &terms {
        if *e <= rat_int(-2) {
            diagnostics.push(format!(
                "exponent {e} is not integrable on the disk; the candidate is formal only (needs p = 1)"
            ));
        }
    }
    FCandidate {
        p,
        s,
        m,
        terms,
        diagnostics,
    }
}

/// The `s × (m+1)` matrix with entries
/// `(k+2)/(2k+2js+2) - (s-k+1)/(2s-2k+2js)`, `0 ≤ k < s`, `0 ≤ j ≤ m`.
pub fn system_s_matrix(s: u32, m: u32) -> ExactMatrix {
    assert!(s >= 1);
    let s = s as i64;
    let rows = (0..s)
        .map(|k| {
            (0..=m as i64)
                .map(|j| {
                    rat(k + 2, 2 * k + 2 * j * s + 2) - rat(s - k + 1, 2 * s - 2 * k + 2 * j * s)
                })
                .collect()
        })
        .collect();
    ExactMatrix::from_rows(m as usize + 1, rows)
}

/// Values of `k` in `[0, p - s)` where
/// `(2k+2s+2)/(2k+s+n+2) ≠ (2p-2k+2)/(2p-2k-s+n+2)`.
pub fn check_eq22(p: u32, s: u32, n: u32) -> Vec<u32> {
    let (p, s, n) = (p as i64, s as i64, n as i64);
    (0..(p - s).max(0))
        .filter(|&k| {
            rat(2 * k + 2 * s + 2, 2 * k + s + n + 2)
                != rat(2 * p - 2 * k + 2, 2 * p - 2 * k - s + n + 2)
        })
        .map(|k| k as u32)
        .collect()
}

/// Normalization of `φ ∗ ψ = C(r^{-1} - r)`.
pub fn convolution_constant() -> Rational {
    rat(1, 2)
}

/// Solves `φ ∗ ψ = ½(r^{-1} - r)` for `φ` given a monomial `ψ = c·r^α`, via
/// `φ̂ = ½(1/(z-1) - 1/(z+1)) / ψ̂`. Only `p = 1` admits a solution.
pub fn solve_convolution_equation(p: u32, psi: &RadialSymbol) -> Result<RadialSymbol> {
    if p != 1 {
        return Err(Error::NoAdmissibleSolution(format!(
            "degree p = {p}: r^(-{p}) - r^({p}) is not integrable unless p = 1"
        )));
    }
    if psi.as_monomial().is_none() {
        return Err(Error::InvalidInput(
            "psi must be a single log-free monomial".into(),
        ));
    }
    let c = convolution_constant();
    let target = RadialSymbol::monomial(c.clone(), rat_int(-1))?
        .sub(&RadialSymbol::monomial(c, rat_int(1))?);
    let phi_hat = mellin_transform(&target).checked_div(&mellin_transform(psi))?;
    let phi = inverse_mellin(&phi_hat).map_err(|e| Error::NoAdmissibleSolution(e.to_string()))?;
    if mellin_convolve(&phi, psi)? != target {
        return Err(Error::NoAdmissibleSolution(format!(
            "{phi} does not reproduce the convolution identity"
        )));
    }
    Ok(phi)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct UniquenessReport {
    pub dimension: usize,
    /// Dimension ≥ 2: more than one independent commuting symbol.
    pub contradiction: bool,
}

pub fn uniqueness_report(
    p: u32,
    s: u32,
    psi: &RadialSymbol,
    ansatz: &Ansatz,
) -> Result<UniquenessReport> {
    if psi.is_zero() {
        return Err(Error::InvalidInput("psi must be nonzero".into()));
    }
    let sys = generate_constraints(p, s, psi, ansatz)?;
    let dimension = kernel_basis(&sys.matrix).len();
    Ok(UniquenessReport {
        dimension,
        contradiction: dimension >= 2,
    })
}

#[derive(Clone, PartialEq, Debug)]
pub struct CommutantResult {
    pub p: u32,
    pub s: u32,
    pub m: u32,
    pub n: u32,
    pub ansatz: Ansatz,
    pub system: ConstraintSystem,
    /// Reduced-echelon kernel basis over the ansatz.
    pub kernel_vectors: Vec<Vec<Rational>>,
    /// The kernel basis as symbols, in primitive normalization.
    pub kernel: Vec<RadialSymbol>,
    pub boundedness: Vec<BoundednessClass>,
    pub candidate: Option<RadialSymbol>,
    pub candidate_consistent: bool,
    pub verified_kmax: u32,
    pub kernel_verified: bool,
    pub diagnostics: Vec<String>,
}

pub fn solve_commutant(p: u32, s: u32, m: u32) -> Result<CommutantResult> {
    solve_commutant_with(p, s, m, DEFAULT_VERIFY_KMAX)
}

/// Commutant of `T_{e^{-isθ} r^n}`, `n = (2m+1)s`, among degree-`p`
/// symbols `Σ_j c_j r^{2js-p}`.
pub fn solve_commutant_with(p: u32, s: u32, m: u32, verify_kmax: u32) -> Result<CommutantResult> {
    if p == 0 || s == 0 {
        return Err(Error::InvalidInput("p and s must be positive".into()));
    }
    let n = (2 * m + 1) * s;
    let mut diagnostics = vec![format!("n = (2m+1)s = {n}")];

    let mut exps = Vec::new();
    for j in 0..=m as i64 {
        let e = rat_int(2 * j * s as i64 - p as i64);
        if e <= rat_int(-2) {
            diagnostics.push(format!("dropped inadmissible ansatz exponent {e}"));
        } else {
            exps.push(e);
        }
    }
    if p != 1 {
        diagnostics.push(format!(
            "leading term r^(-{p}) needs p = 1 to be integrable; p = {p}"
        ));
    }
    let ansatz = Ansatz::new(exps)?;
    let psi = RadialSymbol::power(n as i64)?;
    let system = generate_constraints(p, s, &psi, &ansatz)?;
    let kernel_vectors = kernel_basis(&system.matrix);
    let kernel: Vec<RadialSymbol> = kernel_vectors
        .iter()
        .map(|v| ansatz.symbol(v).primitive())
        .collect();
    diagnostics.push(format!(
        "{} constraint rows, rank {}, kernel dimension {}",
        system.matrix.rows(),
        system.matrix.rank(),
        kernel.len()
    ));

    let boundedness = kernel
        .iter()
        .map(classify_boundedness)
        .collect::<Result<Vec<_>>>()?;

    let g = QHSymbol::new(-(s as i64), psi.clone());
    let mut kernel_verified = true;
    for phi in &kernel {
        let rep = check_commute_range(&QHSymbol::new(p as i64, phi.clone()), &g, verify_kmax)?;
        if !rep.commutes {
            kernel_verified = false;
            diagnostics.push(format!(
                "kernel member {phi} fails direct commutation at {}",
                rep.failures[0].vec
            ));
        }
    }

    let fc = candidate_from_f(p, s, m);
    diagnostics.extend(fc.diagnostics.iter().cloned());
    let candidate = fc.symbol().ok();
    let candidate_consistent = match &candidate {
        Some(c) => in_span(&ansatz, &kernel_vectors, c),
        None => false,
    };
    if let Some(c) = &candidate {
        diagnostics.push(format!(
            "F-candidate {c} {} the kernel span",
            if candidate_consistent {
                "lies in"
            } else {
                "is not in"
            }
        ));
        if !candidate_consistent {
            if let Some(coords) = ansatz.coordinates(c) {
                if p == 1 {
                    let residual = system_s_matrix(s, m).mul_vec(&coords);
                    if residual.iter().any(|x| !x.is_zero()) {
                        diagnostics.push(format!(
                            "F-candidate violates system S: residual [{}]",
                            join(&residual)
                        ));
                    }
                }
            }
        }
    }

    if p == 1 {
        let a = system_s_matrix(s, m);
        let rank = a.rank();
        diagnostics.push(format!("system S is {s}x{}, rank {rank}", m + 1));
        if s <= m + 1 && rank < s as usize {
            diagnostics.push(format!(
                "finding: system S has rank {rank} < s = {s}, its rows are linearly dependent"
            ));
        }
    }

    if p < s {
        let nontrivial_expected = s <= m + 1;
        if nontrivial_expected != !kernel.is_empty() {
            diagnostics.push(format!(
                "finding: stated conclusion for p < s predicts a {} kernel for s {} m+1, exact kernel has dimension {}",
                if nontrivial_expected { "nontrivial" } else { "trivial" },
                if nontrivial_expected { "<=" } else { ">" },
                kernel.len()
            ));
        }
    } else if !kernel.is_empty() && !(p == 1 && s == 1) {
        diagnostics.push(format!(
            "finding: nontrivial kernel with p >= s but (p, s) = ({p}, {s}) != (1, 1)"
        ));
    }
    if p > s {
        let bad = check_eq22(p, s, n);
        if !bad.is_empty() {
            diagnostics.push(format!("consistency family fails at k = {bad:?}"));
        }
    }

    Ok(CommutantResult {
        p,
        s,
        m,
        n,
        ansatz,
        system,
        kernel_vectors,
        kernel,
        boundedness,
        candidate,
        candidate_consistent,
        verified_kmax: verify_kmax,
        kernel_verified,
        diagnostics,
    })
}

fn join(v: &[Rational]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn in_span(ansatz: &Ansatz, basis: &[Vec<Rational>], phi: &RadialSymbol) -> bool {
    let Some(coords) = ansatz.coordinates(phi) else {
        return false;
    };
    if coords.iter().all(Zero::is_zero) || basis.is_empty() {
        return false;
    }
    let mut rows = basis.to_vec();
    let before = ExactMatrix::from_rows(ansatz.len(), rows.clone()).rank();
    rows.push(coords);
    ExactMatrix::from_rows(ansatz.len(), rows).rank() == before
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CommutantResultJson {
    pub ansatz: Vec<String>,
    pub kernel: Vec<String>,
    pub candidate: Option<String>,
    pub consistent: bool,
    pub diagnostics: Vec<String>,
    pub boundedness: Vec<BoundednessClass>,
}

impl CommutantResult {
    pub fn to_json(&self) -> CommutantResultJson {
        CommutantResultJson {
            ansatz: self
                .ansatz
                .exponents()
                .iter()
                .map(|e| e.to_string())
                .collect(),
            kernel: self.kernel.iter().map(|k| k.to_string()).collect(),
            candidate: self.candidate.as_ref().map(|c| c.to_string()),
            consistent: self.candidate_consistent,
            diagnostics: self.diagnostics.clone(),
            boundedness: self.boundedness.clone(),
        }
    }
}

/// `(r^p φ)^(z)` for a candidate, i.e. `φ̂(z + p)`; handy for comparing
/// against `C·F(z)`.
pub fn shifted_transform(phi: &RadialSymbol, p: u32) -> RationalFunction {
    mellin_transform(phi).compose_affine(&Rational::one(), &rat_int(p as i64))
}
