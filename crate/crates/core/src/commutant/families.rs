//! The six commutation identities written out by hand, used only to
//! cross-check the rows produced by [`generate_constraints`].
//!
//! With `φ̂` expanded on the ansatz, each identity `LHS = RHS` becomes the
//! row `LHS - RHS`. Two families are written with a common factor removed:
//! `zbar-low` does not involve `φ` and is the commutation equation divided by
//! `φ̂(p+2)`, and `z-low` is divided by `ψ̂(s+2)`. Those factors are put back
//! before comparing, so a vanishing factor does not show up as a mismatch.
//!
//! [`generate_constraints`]: super::generate_constraints

use num_traits::Zero;

use super::constraints::{Ansatz, ConstraintSystem, IdentityFamily};
use crate::algebra::{rat_int, ExactMatrix, Rational};
use crate::error::{Error, Result};
use crate::mellin::mellin_transform;
use crate::operators::BasisVector;
use crate::symbols::RadialSymbol;

/// Inclusive `k` range of a family, `None` upper bound for unbounded, or
/// `None` overall when the family does not occur for this `(p, s)`.
pub fn family_range(family: IdentityFamily, p: i64, s: i64) -> Option<(i64, Option<i64>)> {
    match family {
        IdentityFamily::HoloLow => (p <= s).then_some((0, Some(s - p))),
        IdentityFamily::AntiLow => (p > s).then_some((0, Some(p - s))),
        IdentityFamily::HoloMid => Some(((s - p).max(0), Some(s - 1))),
        IdentityFamily::AntiMid => Some(((p - s).max(0), Some(p - 1))),
        IdentityFamily::HoloTail => Some((s, None)),
        IdentityFamily::AntiTail => Some((p, None)),
    }
}

/// Basis vector whose commutation equation a family member comes from.
pub fn family_vector(family: IdentityFamily, k: i64) -> BasisVector {
    match family {
        IdentityFamily::HoloLow | IdentityFamily::HoloMid | IdentityFamily::HoloTail => {
            BasisVector::from_index(k)
        }
        _ => BasisVector::from_index(-k),
    }
}

/// `LHS - RHS` of the written-out identity at `k`, as a row over the ansatz.
pub fn written_row(
    family: IdentityFamily,
    k: i64,
    p: i64,
    s: i64,
    psi: &RadialSymbol,
    ansatz: &Ansatz,
) -> Result<Vec<Rational>> {
    let psi_hat = mellin_transform(psi);
    let psi_at = |x: i64| psi_hat.eval(&rat_int(x));
    let phi_at = |x: i64| -> Result<Vec<Rational>> {
        ansatz
            .exponents()
            .iter()
            .map(|e| {
                let d = rat_int(x) + e;
                if d.is_zero() {
                    Err(Error::PoleAtEvaluation { point: rat_int(x) })
                } else {
                    Ok(d.recip())
                }
            })
            .collect()
    };
    let q = rat_int;
    // a·φ̂(x) - b·φ̂(y)
    let combo = |a: Rational, x: i64, b: Rational, y: i64| -> Result<Vec<Rational>> {
        Ok(phi_at(x)?
            .into_iter()
            .zip(phi_at(y)?)
            .map(|(u, v)| &a * u - &b * v)
            .collect())
    };
    match family {
        IdentityFamily::HoloLow => {
            let common = psi_at(s + 2)?;
            let row = combo(
                q(k + p + 1),
                2 * k + p + 2,
                q(s - k + 1),
                2 * s - 2 * k - p + 2,
            )?;
            Ok(row.into_iter().map(|u| u * &common).collect())
        }
        IdentityFamily::AntiLow => {
            let scalar = q(k + s + 1) * psi_at(2 * k + s + 2)?
                - q(p - k + 1) * psi_at(2 * p - 2 * k - s + 2)?;
            Ok(phi_at(p + 2)?.into_iter().map(|u| u * &scalar).collect())
        }
        IdentityFamily::HoloMid => combo(
            q(k + p + 1) * psi_at(2 * k + 2 * p - s + 2)?,
            2 * k + p + 2,
            q(s - k + 1) * psi_at(s + 2)?,
            p + 2,
        ),
        IdentityFamily::AntiMid => combo(
            q(k + s + 1) * psi_at(2 * k + s + 2)?,
            2 * k + 2 * s - p + 2,
            q(p - k + 1) * psi_at(s + 2)?,
            p + 2,
        ),
        IdentityFamily::HoloTail => combo(
            q(k + p + 1) * psi_at(2 * k + 2 * p - s + 2)?,
            2 * k + p + 2,
            q(k - s + 1) * psi_at(2 * k - s + 2)?,
            2 * k - 2 * s + p + 2,
        ),
        IdentityFamily::AntiTail => combo(
            q(k - p + 1) * psi_at(2 * k - 2 * p + s + 2)?,
            2 * k - p + 2,
            q(k + s + 1) * psi_at(2 * k + s + 2)?,
            2 * k + 2 * s - p + 2,
        ),
    }
}

/// Both zero, or both nonzero and proportional.
pub fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    let za = a.iter().all(Zero::is_zero);
    let zb = b.iter().all(Zero::is_zero);
    if za || zb {
        return za && zb;
    }
    ExactMatrix::from_rows(a.len(), vec![a.to_vec(), b.to_vec()]).rank() == 1
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FamilyCrossCheck {
    pub checked: usize,
    pub mismatches: Vec<(IdentityFamily, i64)>,
}

impl FamilyCrossCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares every family member on its stated range (unbounded ranges cut at
/// `k_limit`) with the generated equation at the corresponding basis vector.
pub fn cross_check_families(
    system: &ConstraintSystem,
    psi: &RadialSymbol,
    k_limit: i64,
) -> Result<FamilyCrossCheck> {
    let (p, s) = (system.p, system.s);
    let mut out = FamilyCrossCheck::default();
    for family in [
        IdentityFamily::AntiLow,
        IdentityFamily::HoloLow,
        IdentityFamily::HoloMid,
        IdentityFamily::AntiMid,
        IdentityFamily::HoloTail,
        IdentityFamily::AntiTail,
    ] {
        let Some((lo, hi)) = family_range(family, p, s) else {
            continue;
        };
        let hi = hi.unwrap_or(k_limit).min(k_limit);
        for k in lo..=hi {
            let quoted = written_row(family, k, p, s, psi, &system.ansatz)?;
            let generated = system.row_for(family_vector(family, k));
            out.checked += 1;
            match generated {
                Some(g) if proportional(&g, &quoted) => {}
                _ => out.mismatches.push((family, k)),
            }
        }
    }
    Ok(out)
}
