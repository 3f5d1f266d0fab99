//! Floating-point oracle for the exact engine.
//!
//! Everything here integrates the symbol pointwise; no transform or branch
//! formula from the exact side is used, so agreement between the two is a
//! real check.
//!
//! Integrals over `[0, 1]` use the tanh-sinh rule with
//! `r = 1/(1 + e^{-2u})`, `u = (π/2) sinh t`. In these variables
//! `ln(1/r) = log(1 + e^{-2u})` and `dr = 2 r (1 - r) du`, both computed
//! without cancellation, which keeps the `r → 0` singularities
//! `r^α ln(1/r)^ℓ` (`α > -2` after the measure factor) harmless.

use std::f64::consts::PI;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::operators::{apply_qh, sweep_order, BasisVector};
use crate::symbols::{QHSymbol, RadialSymbol};

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct QuadratureConfig {
    pub target_abs_tol: f64,
    pub max_refinements: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            target_abs_tol: 1e-12,
            max_refinements: 16,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.target_abs_tol.is_nan() || self.target_abs_tol <= 0.0 || self.max_refinements < 1 {
            return Err(Error::InvalidInput(format!(
                "bad quadrature config {self:?}"
            )));
        }
        Ok(())
    }
}

const T_MAX: f64 = 6.5;

fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// `∫₀¹ g dr` where `g` is given as a function of `ln(1/r)` already
/// multiplied by `r`, i.e. `h(L) = r·g(r)` with `L = ln(1/r)`.
fn tanh_sinh<F: Fn(f64) -> f64>(h: F, cfg: &QuadratureConfig) -> Result<f64> {
    cfg.validate()?;
    // node contribution: h(L) · (1 - r) · π cosh t
    let node = |t: f64| -> f64 {
        let u = 0.5 * PI * t.sinh();
        let log_inv_r = softplus(-2.0 * u);
        let one_minus_r = 1.0 / (1.0 + (2.0 * u).exp());
        if one_minus_r == 0.0 {
            return 0.0;
        }
        let v = h(log_inv_r) * one_minus_r * PI * t.cosh();
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };

    let mut step = 1.0;
    let n0 = (T_MAX / step) as i64;
    let mut sum = node(0.0);
    let mut abs_sum = sum.abs();
    for i in 1..=n0 {
        let t = i as f64 * step;
        let (a, b) = (node(t), node(-t));
        sum += a + b;
        abs_sum += a.abs() + b.abs();
    }
    let mut estimate = sum * step;
    let mut error = f64::INFINITY;
    for level in 1..=cfg.max_refinements {
        step *= 0.5;
        // only the odd multiples of the new step are new nodes
        let n = (T_MAX / step) as i64;
        let mut i = 1;
        while i <= n {
            let t = i as f64 * step;
            let (a, b) = (node(t), node(-t));
            sum += a + b;
            abs_sum += a.abs() + b.abs();
            i += 2;
        }
        let next = sum * step;
        error = (next - estimate).abs();
        estimate = next;
        let noise = 64.0 * f64::EPSILON * abs_sum * step;
        if level >= 3 && error <= cfg.target_abs_tol.max(noise) {
            return Ok(estimate);
        }
    }
    Err(Error::QuadratureFailure {
        estimate,
        error_estimate: error,
        levels: cfg.max_refinements,
    })
}

/// `r^{shift} · φ(r) · r` as a function of `L = ln(1/r)`, evaluated term by
/// term in log space so that large negative powers never overflow.
fn weighted_radial(phi: &RadialSymbol, shift: f64) -> impl Fn(f64) -> f64 + '_ {
    let terms: Vec<(f64, f64, i32)> = phi
        .terms()
        .iter()
        .map(|t| {
            (
                t.coeff.to_f64().unwrap_or(f64::NAN),
                t.exponent.to_f64().unwrap_or(f64::NAN),
                t.log_power as i32,
            )
        })
        .collect();
    move |log_inv_r: f64| {
        terms
            .iter()
            .map(|&(c, a, l)| c * (-(a + shift + 1.0) * log_inv_r).exp() * log_inv_r.powi(l))
            .sum()
    }
}

/// `∫₀¹ φ(r) r^{z-1} dr` by quadrature.
pub fn mellin_numeric(phi: &RadialSymbol, z: &Rational, cfg: &QuadratureConfig) -> Result<f64> {
    if let Some(min) = phi.min_exponent() {
        if z + min <= Rational::from_integer(0.into()) {
            return Err(Error::InvalidInput(format!(
                "z = {z} is not in the convergence half-plane (needs z > {})",
                -min
            )));
        }
    }
    let zf = z.to_f64().unwrap_or(f64::NAN);
    tanh_sinh(weighted_radial(phi, zf - 1.0), cfg)
}

/// `⟨f·u, e⟩ / ⟨e, e⟩` with `dA` normalized so that `‖zⁿ‖² = 1/(n+1)`.
///
/// The angular integral is done by hand: it vanishes unless
/// `ι(target) = ι(u) + p`, in which case both inner products reduce to
/// `2∫₀¹ (radial part) r dr`.
pub fn projection_coefficient(
    f: &QHSymbol,
    u: BasisVector,
    target: BasisVector,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    if target.index() != u.index() + f.degree {
        return Ok(0.0);
    }
    let (a, b) = (u.power() as f64, target.power() as f64);
    // the area element contributes one more power of r
    let num = 2.0 * tanh_sinh(weighted_radial(&f.radial, a + b + 1.0), cfg)?;
    let den = 2.0 * tanh_sinh(weighted_radial(&RadialSymbol::one(), 2.0 * b + 1.0), cfg)?;
    Ok(num / den)
}

#[derive(Clone, PartialEq, Debug)]
pub struct ProjectionReport {
    pub kmax: u32,
    pub max_abs_dev: f64,
    pub worst_index: BasisVector,
    /// `(basis vector, exact coefficient, quadrature coefficient)`.
    pub samples: Vec<(BasisVector, f64, f64)>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ProjectionReportJson {
    pub kmax: u32,
    pub max_abs_dev: f64,
    pub worst_index: String,
}

impl ProjectionReport {
    pub fn to_json(&self) -> ProjectionReportJson {
        ProjectionReportJson {
            kmax: self.kmax,
            max_abs_dev: self.max_abs_dev,
            worst_index: self.worst_index.to_string(),
        }
    }
}

/// Compares the exact basis action with direct projection for every
/// `|ι| ≤ kmax`.
pub fn validate_lemma2(
    f: &QHSymbol,
    kmax: u32,
    cfg: &QuadratureConfig,
) -> Result<ProjectionReport> {
    let mut out = ProjectionReport {
        kmax,
        max_abs_dev: 0.0,
        worst_index: BasisVector::z(0),
        samples: Vec::new(),
    };
    for v in sweep_order(kmax) {
        let exact = apply_qh(f, v)?;
        let exact_f = exact.coeff.to_f64().unwrap_or(f64::NAN);
        let numeric = projection_coefficient(f, v, exact.vec, cfg)?;
        let dev = (exact_f - numeric).abs();
        if dev > out.max_abs_dev || dev.is_nan() {
            out.max_abs_dev = dev;
            out.worst_index = v;
        }
        out.samples.push((v, exact_f, numeric));
    }
    Ok(out)
}
