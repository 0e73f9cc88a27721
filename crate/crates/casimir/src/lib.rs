//! Exact Casimir eigenvalues for su(N) representations.
//!
//! This crate computes quadratic Casimir eigenvalues of su(N) highest-weight
//! representations in exact rational arithmetic, models *stable sequences*
//! of representations (fixed first and last Dynkin labels, zeros in
//! between), and checks the criterion tying the two together: the eigenvalue
//! of a stable sequence, as a function of N, has no 1/N term exactly when
//! the head and tail Young diagrams have equal area. Constituents of tensor
//! powers of the adjoint all satisfy the criterion, which the
//! [`tensor::verify_ad_power`] pipeline verifies constituent by constituent.
//!
//! ```
//! use casimir::{casimir_direct, casimir_stable, DynkinLabels, StableRep};
//!
//! // Direct route: (lambda, lambda) + 2 (lambda, rho) for su(4).
//! let fundamental = DynkinLabels::fundamental(4)?;
//! assert_eq!(casimir_direct(&fundamental).to_string(), "15/4");
//!
//! // Closed form in N for the adjoint sequence: C(N) = 2N, linear.
//! let adjoint = StableRep::adjoint();
//! let poly = casimir_stable(&adjoint);
//! assert_eq!(poly.to_string(), "2*N");
//! assert!(poly.is_linear() && adjoint.is_balanced());
//! # Ok::<(), casimir::Error>(())
//! ```
//!
//! The `book/` directory of the repository holds a guide built with mdbook;
//! its chapters are mirrored in [`guide`] so every code sample runs as a
//! doc-test.

pub mod error;
pub mod gram;
pub mod guide;
pub mod poly;
pub mod rational;
pub mod tensor;
pub mod universal;
pub mod young;

pub use error::Error;
pub use gram::{casimir_direct, gram_entry, weyl_row_sum};
pub use poly::{casimir_stable, CasimirPoly};
pub use rational::Rational;
pub use tensor::{
    ad_power_decompose, ad_power_decompose_with_cap, adjoint_weights, dimension,
    oracle_decompose, stable_constituents, tensor_with_adjoint, verify_ad_power,
    verify_ad_power_with_cap, verify_decomposition, weight_system, ConstituentCheck,
    ConstituentFinding, Decomposition, VerificationReport, Weight, DEFAULT_SUMMAND_CAP,
    ORACLE_DIMENSION_GUARD,
};
pub use universal::{universal_form, vogel_su, UniversalCoeffs, VogelPoint};
pub use young::{extract_stable, DynkinLabels, StableRep};
