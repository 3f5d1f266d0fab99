//! Action of quasihomogeneous Toeplitz operators on the harmonic basis.
//!
//! `T_{e^{ipθ}φ}` maps each basis monomial to a rational multiple of one
//! basis monomial:
//!
//! ```text
//! z^k  ↦ (2k+2p+2) φ̂(2k+p+2) z^{k+p}       if k ≥ -p
//!      ↦ (-2k-2p+2) φ̂(-p+2) z̄^{-k-p}       if k < -p
//! z̄^k  ↦ (2k-2p+2) φ̂(2k-p+2) z̄^{k-p}       if k ≥ p
//!      ↦ (2p-2k+2) φ̂(p+2) z^{p-k}           if k < p
//! ```
//!
//! In terms of the signed index `ι` (`ι(z^k) = k`, `ι(z̄^k) = -k`) every
//! branch sends `ι` to `ι + p`.

use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{rat_int, Polynomial, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::mellin::mellin_transform;
use crate::symbols::QHSymbol;

/// Harmonic basis monomial by signed index: `ι ≥ 0` is `z^ι`, `ι < 0` is
/// `z̄^{-ι}`. The constant is always `ι = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BasisVector(i64);

impl BasisVector {
    pub fn from_index(index: i64) -> Self {
        BasisVector(index)
    }

    pub fn z(k: u32) -> Self {
        BasisVector(k as i64)
    }

    pub fn zbar(k: u32) -> Self {
        BasisVector(-(k as i64))
    }

    pub fn index(self) -> i64 {
        self.0
    }

    /// Power of `z` or `z̄`.
    pub fn power(self) -> u64 {
        self.0.unsigned_abs()
    }

    pub fn is_conjugate(self) -> bool {
        self.0 < 0
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 0 {
            write!(f, "zbar^{}", -self.0)
        } else {
            write!(f, "z^{}", self.0)
        }
    }
}

impl FromStr for BasisVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Syntax {
            position: 0,
            message: format!("expected z^k or zbar^k, got {s:?}"),
        };
        let (conj, rest) = if let Some(r) = s.strip_prefix("zbar^") {
            (true, r)
        } else if let Some(r) = s.strip_prefix("z^") {
            (false, r)
        } else {
            return Err(bad());
        };
        let k: u32 = rest.trim().parse().map_err(|_| bad())?;
        Ok(if conj {
            BasisVector::zbar(k)
        } else {
            BasisVector::z(k)
        })
    }
}

/// `coeff · vec`. All zero multiples compare equal.
#[derive(Clone, Debug, Eq)]
pub struct ScaledBasisVector {
    pub coeff: Rational,
    pub vec: BasisVector,
}

impl PartialEq for ScaledBasisVector {
    fn eq(&self, other: &Self) -> bool {
        self.coeff == other.coeff && (self.coeff.is_zero() || self.vec == other.vec)
    }
}

impl fmt::Display for ScaledBasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{}", self.coeff, self.vec)
    }
}

/// Integer affine form `slope·k + offset`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Affine {
    pub slope: i64,
    pub offset: i64,
}

impl Affine {
    pub fn new(slope: i64, offset: i64) -> Self {
        Affine { slope, offset }
    }

    pub fn constant(c: i64) -> Self {
        Affine::new(0, c)
    }

    pub fn eval(self, k: i64) -> i64 {
        self.slope * k + self.offset
    }

    fn scale_shift(self, a: i64, b: i64) -> Self {
        Affine::new(a * self.slope, a * self.offset + b)
    }

    pub fn to_poly(self) -> Polynomial {
        Polynomial::from_ints(&[self.offset, self.slope])
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ShiftBranch {
    /// `z^k`, `k ≥ -p`.
    HoloShift,
    /// `z^k`, `k < -p`.
    HoloFold,
    /// `z̄^k`, `k ≥ p`.
    AntiShift,
    /// `z̄^k`, `k < p`.
    AntiFold,
}

/// One branch of the basis action, with the input index, the weight factor,
/// the Mellin evaluation point and the output index all affine in `k`.
#[derive(Clone, Copy, Debug)]
pub struct BranchImage {
    pub branch: ShiftBranch,
    pub factor: Affine,
    pub point: Affine,
    pub out: Affine,
}

/// Selects the branch for a degree-`degree` symbol acting on the basis
/// vector with signed index `index(k)`, decided at the given `k`.
pub fn branch_image(degree: i64, index: Affine, k: i64) -> BranchImage {
    let d = degree;
    let v = index.eval(k);
    if v >= 0 {
        let kk = index;
        if v >= -d {
            BranchImage {
                branch: ShiftBranch::HoloShift,
                factor: kk.scale_shift(2, 2 * d + 2),
                point: kk.scale_shift(2, d + 2),
                out: kk.scale_shift(1, d),
            }
        } else {
            BranchImage {
                branch: ShiftBranch::HoloFold,
                factor: kk.scale_shift(-2, -2 * d + 2),
                point: Affine::constant(-d + 2),
                out: kk.scale_shift(1, d),
            }
        }
    } else {
        let kk = index.scale_shift(-1, 0);
        if -v >= d {
            BranchImage {
                branch: ShiftBranch::AntiShift,
                factor: kk.scale_shift(2, -2 * d + 2),
                point: kk.scale_shift(2, -d + 2),
                out: index.scale_shift(1, d),
            }
        } else {
            BranchImage {
                branch: ShiftBranch::AntiFold,
                factor: kk.scale_shift(-2, 2 * d + 2),
                point: Affine::constant(d + 2),
                out: index.scale_shift(1, d),
            }
        }
    }
}

/// A quasihomogeneous Toeplitz operator with its symbol's Mellin transform
/// computed once.
#[derive(Clone, Debug)]
pub struct QhOperator {
    symbol: QHSymbol,
    transform: RationalFunction,
}

impl QhOperator {
    pub fn new(symbol: &QHSymbol) -> Self {
        QhOperator {
            transform: mellin_transform(&symbol.radial),
            symbol: symbol.clone(),
        }
    }

    pub fn symbol(&self) -> &QHSymbol {
        &self.symbol
    }

    pub fn degree(&self) -> i64 {
        self.symbol.degree
    }

    pub fn transform(&self) -> &RationalFunction {
        &self.transform
    }

    pub fn apply(&self, v: BasisVector) -> Result<ScaledBasisVector> {
        let img = branch_image(self.degree(), Affine::constant(v.index()), 0);
        let weight = self.transform.eval(&rat_int(img.point.eval(0)))?;
        Ok(ScaledBasisVector {
            coeff: rat_int(img.factor.eval(0)) * weight,
            vec: BasisVector(img.out.eval(0)),
        })
    }

    /// Applies to a scaled vector, keeping the scale.
    pub fn apply_scaled(&self, v: &ScaledBasisVector) -> Result<ScaledBasisVector> {
        let img = self.apply(v.vec)?;
        Ok(ScaledBasisVector {
            coeff: img.coeff * &v.coeff,
            vec: img.vec,
        })
    }
}

pub fn apply_qh(f: &QHSymbol, v: BasisVector) -> Result<ScaledBasisVector> {
    QhOperator::new(f).apply(v)
}

/// `(T_f T_g v, T_g T_f v)`.
pub fn commutator_coefficient(
    f: &QHSymbol,
    g: &QHSymbol,
    v: BasisVector,
) -> Result<(ScaledBasisVector, ScaledBasisVector)> {
    let (tf, tg) = (QhOperator::new(f), QhOperator::new(g));
    compose_pair(&tf, &tg, v)
}

fn compose_pair(
    tf: &QhOperator,
    tg: &QhOperator,
    v: BasisVector,
) -> Result<(ScaledBasisVector, ScaledBasisVector)> {
    let fg = tf.apply_scaled(&tg.apply(v)?)?;
    let gf = tg.apply_scaled(&tf.apply(v)?)?;
    Ok((fg, gf))
}

#[derive(Clone, PartialEq, Debug)]
pub struct CommutatorFailure {
    pub vec: BasisVector,
    pub lhs: ScaledBasisVector,
    pub rhs: ScaledBasisVector,
}

#[derive(Clone, PartialEq, Debug)]
pub struct CommutatorReport {
    pub kmax: u32,
    /// In increasing `|ι|` order, `z^k` before `z̄^k`.
    pub failures: Vec<CommutatorFailure>,
    pub commutes: bool,
}

/// Basis vectors with `|ι| ≤ kmax`, ordered `z^0, z^1, z̄^1, z^2, z̄^2, …`.
pub fn sweep_order(kmax: u32) -> impl Iterator<Item = BasisVector> {
    std::iter::once(BasisVector(0))
        .chain((1..=kmax as i64).flat_map(|k| [BasisVector(k), BasisVector(-k)]))
}

/// Exact commutation test of `T_f` and `T_g` on every basis vector with
/// `|ι| ≤ kmax`.
pub fn check_commute_range(f: &QHSymbol, g: &QHSymbol, kmax: u32) -> Result<CommutatorReport> {
    let (tf, tg) = (QhOperator::new(f), QhOperator::new(g));
    let mut failures = Vec::new();
    for v in sweep_order(kmax) {
        let (lhs, rhs) = compose_pair(&tf, &tg, v)?;
        if lhs != rhs {
            failures.push(CommutatorFailure { vec: v, lhs, rhs });
        }
    }
    Ok(CommutatorReport {
        kmax,
        commutes: failures.is_empty(),
        failures,
    })
}

#[derive(Clone, PartialEq, Debug)]
pub struct MatrixEntry {
    pub from: BasisVector,
    pub to: BasisVector,
    pub coeff: Rational,
}

/// Truncation of `T_f` to `span{z^0..z^kmax, z̄^1..z̄^kmax}`.
#[derive(Clone, PartialEq, Debug)]
pub struct OperatorMatrix {
    pub kmax: u32,
    pub degree: i64,
    /// Nonzero entries, one per column at most, in basis order of `from`.
    pub entries: Vec<MatrixEntry>,
    /// Columns whose image falls outside the truncation.
    pub out_of_range: Vec<BasisVector>,
}

/// Basis order `[z^0, z^1, …, z^kmax, z̄^1, …, z̄^kmax]`.
pub fn matrix_basis(kmax: u32) -> Vec<BasisVector> {
    (0..=kmax)
        .map(BasisVector::z)
        .chain((1..=kmax).map(BasisVector::zbar))
        .collect()
}

pub fn operator_matrix(f: &QHSymbol, kmax: u32) -> Result<OperatorMatrix> {
    let op = QhOperator::new(f);
    let mut entries = Vec::new();
    let mut out_of_range = Vec::new();
    for from in matrix_basis(kmax) {
        let img = op.apply(from)?;
        if img.coeff.is_zero() {
            continue;
        }
        if img.vec.power() > kmax as u64 {
            out_of_range.push(from);
        } else {
            entries.push(MatrixEntry {
                from,
                to: img.vec,
                coeff: img.coeff,
            });
        }
    }
    Ok(OperatorMatrix {
        kmax,
        degree: f.degree,
        entries,
        out_of_range,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MatrixEntryJson {
    pub from: String,
    pub to: String,
    pub coeff: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OperatorMatrixJson {
    pub kmax: u32,
    pub degree: i64,
    pub entries: Vec<MatrixEntryJson>,
    pub out_of_range: Vec<String>,
}

impl OperatorMatrix {
    pub fn to_json(&self) -> OperatorMatrixJson {
        OperatorMatrixJson {
            kmax: self.kmax,
            degree: self.degree,
            entries: self
                .entries
                .iter()
                .map(|e| MatrixEntryJson {
                    from: e.from.to_string(),
                    to: e.to.to_string(),
                    coeff: e.coeff.to_string(),
                })
                .collect(),
            out_of_range: self.out_of_range.iter().map(|v| v.to_string()).collect(),
        }
    }

    /// Dense floating-point rendering in [`matrix_basis`] order, mainly for
    /// display.
    pub fn to_dense_f64(&self) -> Vec<Vec<f64>> {
        let basis = matrix_basis(self.kmax);
        let pos = |v: BasisVector| basis.iter().position(|b| *b == v).expect("in basis");
        let n = basis.len();
        let mut m = vec![vec![0.0; n]; n];
        for e in &self.entries {
            m[pos(e.to)][pos(e.from)] = e.coeff.to_f64().unwrap_or(f64::NAN);
        }
        m
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CommutatorFailureJson {
    pub index: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CommutatorReportJson {
    pub kmax: u32,
    pub commutes: bool,
    pub failures: Vec<CommutatorFailureJson>,
}

impl CommutatorReport {
    pub fn to_json(&self) -> CommutatorReportJson {
        CommutatorReportJson {
            kmax: self.kmax,
            commutes: self.commutes,
            failures: self
                .failures
                .iter()
                .map(|f| CommutatorFailureJson {
                    index: f.vec.to_string(),
                    lhs: f.lhs.to_string(),
                    rhs: f.rhs.to_string(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::symbols::parse_symbol;

    fn qh(s: &str) -> QHSymbol {
        parse_symbol(s).unwrap()
    }

    fn sv(c: Rational, v: BasisVector) -> ScaledBasisVector {
        ScaledBasisVector { coeff: c, vec: v }
    }

    #[test]
    fn identity_symbol() {
        for v in sweep_order(6) {
            assert_eq!(apply_qh(&qh("1"), v).unwrap(), sv(rat_int(1), v));
        }
    }

    #[test]
    fn branch_examples() {
        assert_eq!(
            apply_qh(&qh("E(1)*r^(1)"), BasisVector::z(0)).unwrap(),
            sv(rat_int(1), BasisVector::z(1))
        );
        assert_eq!(
            apply_qh(&qh("E(1)*r^(-1)"), BasisVector::zbar(1)).unwrap(),
            sv(rat_int(1), BasisVector::z(0))
        );
        assert_eq!(
            apply_qh(&qh("E(-1)*r^(3)"), BasisVector::z(1)).unwrap(),
            sv(rat(1, 3), BasisVector::z(0))
        );
    }

    #[test]
    fn all_four_branches() {
        // E(-3)·r^2 on z^1: k < -p → (-2-(-6)+2) φ̂(5) z̄^2 = 6/7 z̄^2
        let f = qh("E(-3)*r^(2)");
        let img = branch_image(-3, Affine::constant(1), 0);
        assert_eq!(img.branch, ShiftBranch::HoloFold);
        assert_eq!(
            apply_qh(&f, BasisVector::z(1)).unwrap(),
            sv(rat(6, 7), BasisVector::zbar(2))
        );
        // E(2)·r^2 on z̄^1: k < p → (4-2+2) φ̂(4) z^1 = 4/6
        let img = branch_image(2, Affine::constant(-1), 0);
        assert_eq!(img.branch, ShiftBranch::AntiFold);
        assert_eq!(
            apply_qh(&qh("E(2)*r^(2)"), BasisVector::zbar(1)).unwrap(),
            sv(rat(2, 3), BasisVector::z(1))
        );
        // E(1) on z̄^3: k ≥ p → (6-2+2) φ̂(7) z̄^2
        let img = branch_image(1, Affine::constant(-3), 0);
        assert_eq!(img.branch, ShiftBranch::AntiShift);
        assert_eq!(
            apply_qh(&qh("E(1)*r^(1)"), BasisVector::zbar(3)).unwrap(),
            sv(rat(6, 8), BasisVector::zbar(2))
        );
    }

    #[test]
    fn branch_boundary_agrees_with_uniform_formula() {
        // coefficient = (2|ι+p|+2) φ̂(|ι|+|ι+p|+2) in every branch
        let f = qh("E(2)*(r^(1/2) + 3*r^(-1))");
        let op = QhOperator::new(&f);
        for v in sweep_order(8) {
            let i = v.index();
            let o = i + 2;
            let expect = rat_int(2 * o.abs() + 2)
                * op.transform()
                    .eval(&rat_int(i.abs() + o.abs() + 2))
                    .unwrap();
            let got = op.apply(v).unwrap();
            assert_eq!(got.coeff, expect, "at {v}");
            assert_eq!(got.vec.index(), o);
        }
    }

    #[test]
    fn commutator_examples() {
        let f = qh("E(1)*r^(1)");
        let (a, b) = commutator_coefficient(&f, &f, BasisVector::z(3)).unwrap();
        assert_eq!(a, b);

        let (a, b) =
            commutator_coefficient(&qh("E(-1)*r^(1)"), &qh("E(1)*r^(-1)"), BasisVector::z(0))
                .unwrap();
        assert_eq!(a, sv(rat_int(1), BasisVector::z(0)));
        assert_eq!(b, sv(rat_int(1), BasisVector::z(0)));

        let (a, b) =
            commutator_coefficient(&qh("E(-1)*r^(3)"), &qh("E(1)*r^(-1)"), BasisVector::z(1))
                .unwrap();
        assert_eq!(a.vec, b.vec);
        assert_ne!(a.coeff, b.coeff);
    }

    #[test]
    fn commute_ranges() {
        let rep =
            check_commute_range(&qh("E(-1)*r^(3)"), &qh("E(1)*(2*r^(-1) - r^(1))"), 200).unwrap();
        assert!(rep.commutes);
        let rep = check_commute_range(&qh("E(-1)*r^(3)"), &qh("E(1)*r^(-1)"), 10).unwrap();
        assert!(!rep.commutes);
        assert_eq!(rep.failures[0].vec, BasisVector::z(1));
    }

    #[test]
    fn matrices() {
        let m = operator_matrix(&qh("1"), 3).unwrap();
        assert_eq!(m.entries.len(), 7);
        assert!(m
            .entries
            .iter()
            .all(|e| e.from == e.to && e.coeff == rat_int(1)));
        assert!(m.out_of_range.is_empty());

        let m = operator_matrix(&qh("E(1)*r^(1)"), 2).unwrap();
        // z^k -> z^{k+1} with weight 1, zbar^k -> zbar^{k-1} with weight k/(k+1)
        for e in &m.entries {
            let k = e.from.index();
            let w = if k >= 0 { rat_int(1) } else { rat(-k, 1 - k) };
            assert_eq!(e.coeff, w, "{}", e.from);
        }
        assert!(m.entries.iter().all(|e| e.to.index() == e.from.index() + 1));
        assert_eq!(m.out_of_range, vec![BasisVector::z(2)]);

        let m = operator_matrix(&qh("E(2)*r^(2)"), 2).unwrap();
        assert_eq!(
            m.entries[0],
            MatrixEntry {
                from: BasisVector::z(0),
                to: BasisVector::z(2),
                coeff: rat_int(1)
            }
        );
        assert_eq!(m.out_of_range, vec![BasisVector::z(1), BasisVector::z(2)]);
    }

    #[test]
    fn basis_vector_text() {
        assert_eq!("zbar^0".parse::<BasisVector>().unwrap(), BasisVector::z(0));
        assert_eq!(
            "zbar^4".parse::<BasisVector>().unwrap().to_string(),
            "zbar^4"
        );
        assert!("w^2".parse::<BasisVector>().is_err());
    }
}
