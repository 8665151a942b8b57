//! Exact enumerative invariants of linear series on general curves.
//!
//! Everything here is computed in exact arithmetic (arbitrary-precision
//! integers and reduced rationals); there is no floating point anywhere.
//! The main objects:
//!
//! * classical and adjusted Castelnuovo numbers — counts of linear series
//!   with prescribed vanishing when the (adjusted) Brill-Noether number is 0
//!   ([`castelnuovo_number`], [`adjusted_castelnuovo`]);
//! * pointed Castelnuovo numbers — counts of linear series with prescribed
//!   ramification at one moving point when the adjusted Brill-Noether number
//!   is -1, computed by three mutually independent formulas
//!   ([`pointed_count`], [`pointed_via_det`], [`pointed_via_sym`]) plus
//!   closed forms for pencils, ordinary cusps and the generic-ramification
//!   case ([`pencil_count`], [`cusp_count`], [`plucker_count`]);
//! * divisor classes on the moduli space of 1-pointed stable curves spanned
//!   by the Brill-Noether and Weierstrass classes ([`bn_class`], [`w_class`],
//!   [`mu_nu`], [`pointed_class`]);
//! * codimension-two intersection numbers with reducible test surfaces
//!   ([`surface_intersection`], [`proportionality_report`]).
//!
//! Count-valued operations are generic over an integer scalar implementing
//! [`Scalar`]; the crate-root aliases [`ExactInt`] / [`ExactRat`] are the
//! arbitrary-precision instantiation that is exact at any magnitude arising
//! here (factorials up to 64! and beyond). `i64`/`i128` impls exist for
//! callers that can bound their magnitudes.

#![forbid(unsafe_code)]

pub mod bn;
pub mod brackets;
pub mod castelnuovo;
pub mod codim2;
pub mod divisor;
mod error;
pub mod numeric;
pub mod pointed;
pub mod report;
pub mod verify;

pub use bn::{
    complement, eh_exists, enumerate_sequences, rho, rho_adjusted, BnInput, VanishingSeq,
};
pub use brackets::{
    det_bracket, eval_p, f_bracket, h_bracket_explicit, lemma_antisymmetry_check,
    lemma_example_check, pointed_via_det, pointed_via_sym, SymPolyValues,
};
pub use castelnuovo::{adjusted_castelnuovo, castelnuovo_number};
pub use codim2::{
    proportionality_report, surface_intersection, IntersectionTerm, SurfaceIntersection,
};
pub use divisor::{bn_class, mu_nu, pointed_class, test_curve_consistency, w_class, DivisorClass};
pub use error::Error;
pub use numeric::{
    elementary_symmetric, factorial, factorial_det, inv_factorial, Factorials, Scalar,
    DEFAULT_FACTORIAL_BOUND,
};
pub use pointed::{cusp_count, pencil_count, plucker_count, pointed_count};
pub use report::{CaseFailure, VerifyReport};
pub use verify::{run_suite, SweepParams, DEFAULT_SEED, SUITE_NAMES};

/// Arbitrary-precision integer scalar; exact at every magnitude used here.
pub type ExactInt = num_bigint::BigInt;
/// Exact rational scalar over [`ExactInt`], always kept in reduced form.
pub type ExactRat = num_rational::Ratio<ExactInt>;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
