//! Exact verification engine for cyclotomic q-supercongruences.
//!
//! Everything is computed over Z[q] with arbitrary-precision coefficients;
//! congruences modulo products of cyclotomic polynomials are decided by
//! Φ_d-adic valuations of reduced differences.

pub mod arith;
pub mod congruence;
pub mod cyclotomic;
pub mod error;
pub mod euler;
pub mod lehmer;
pub mod qcomb;
pub mod series;
pub mod theorems;

pub use arith::{Integer, LaurentPoly, Poly, QExpr, Rational};
pub use congruence::{check_congruence, check_int_congruence, CycloModulus, Status, Verdict};
pub use error::ArithError;
