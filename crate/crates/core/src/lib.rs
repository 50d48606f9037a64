//! Exact computation of the structure at infinity of polynomial matrices.
//!
//! For a nonsingular polynomial matrix `L` the crate builds the finite
//! dimensional module `U^L = Im ρ^L`, `ρ^L x = L π₊ L⁻¹ x`, over the ring of
//! proper rational functions, together with its homomorphisms, the duality
//! with `U^(Lᵀ)`, and realizations of polynomial transfer matrices on it.
//! Arithmetic is exact over the rationals or a prime field.

pub mod corpus;
pub mod error;
pub mod hom;
pub mod infinity;
pub mod matrix;
pub mod realization;
pub mod scalar;
pub mod umodule;

pub use error::{Error, Result};
pub use hom::{
    alt_condition_check, apply_hom, check_intertwining, complete_intertwiner, dual_intertwiner, exists_injective,
    exists_surjective, hom_matrix, hom_space_oracle, injectivity_certificate, is_injective, is_surjective,
    kernel_inclusion_check, left_coprime, surjectivity_certificate, CompletionResult, CoprimeCertificate,
    Intertwiner,
};
pub use infinity::{
    dim_ul, finite_structure_at_zero, infinite_elementary_divisors, minor_valuation_profile, smith_at_infinity,
    smith_at_infinity_with, PivotRule, SigmaFactorization, SigmaProfile,
};
pub use matrix::{KMatrix, Matrix, PolyMatrix, RatMatrix};
pub use realization::{canonical_split, polynomial_part_coeffs, realize_plus, verify_markov, GssRealization, Rlz2};
pub use scalar::{is_prime, with_prime, Causality, Delta, Field, Gf, GfContext, Poly, RatFun, Rational, Ring, Scalar};
pub use umodule::{gram_matrix, kernel_member, pairing, rho, rho_e, UBasis, UElement, UHost};
