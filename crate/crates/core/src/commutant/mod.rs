//! Exact search for radial symbols `φ` such that `T_{e^{ipθ}φ}` commutes
//! with a fixed quasi-homogeneous Toeplitz operator `T_{e^{-isθ}ψ}`.
//!
//! The commutation equations on every basis vector are linear in `φ̂`
//! evaluated at finitely many affine points. With `φ` restricted to a finite
//! ansatz of monomials, they become a rational matrix whose kernel is the
//! commutant inside the ansatz.

mod constraints;
mod families;
mod pipelines;

pub use constraints::{
    generate_constraints, Ansatz, ConstraintSystem, IdentityFamily, RowTag, TailIdentity,
};
pub use families::{
    cross_check_families, family_range, family_vector, proportional, written_row, FamilyCrossCheck,
};
pub use pipelines::{
    candidate_from_f, check_eq22, convolution_constant, shifted_transform, solve_commutant,
    solve_commutant_with, solve_convolution_equation, system_s_matrix, uniqueness_report,
    CommutantResult, CommutantResultJson, FCandidate, UniquenessReport, DEFAULT_VERIFY_KMAX,
};
