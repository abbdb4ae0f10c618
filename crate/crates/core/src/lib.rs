//! Exact computational algebra for the generalized Temperley–Lieb algebras
//! `TL(E_n)`, `n >= 6`.
//!
//! The crate provides:
//!
//! * combinatorics of the Coxeter system of type `E_n`: words, heaps,
//!   canonical forms and enumeration of fully commutative elements
//!   ([`coxeter`]);
//! * exact monomial-basis arithmetic in `TL(E_n)`, the `a`-function and the
//!   classification of commuting vertex subsets ([`algebra`]);
//! * evaluation of arbitrary traces from their base values, the Markov trace
//!   and the non-recursive `mu` coefficients ([`trace`]);
//! * the pillar-diagram calculus: composition, reduction, trace closure and
//!   the diagrammatic trace ([`diagram`]);
//! * a brute-force Kazhdan–Lusztig oracle used for cross-validation
//!   ([`oracle`]);
//! * the named verification suites shared by the CLI and the acceptance
//!   tests ([`verify`]).
//!
//! All arithmetic is exact: scalars are integer Laurent polynomials in `v`,
//! and trace values are carried as integer exponents of `delta = v + v^-1`.

pub mod algebra;
pub mod coxeter;
pub mod diagram;
pub mod error;
pub mod oracle;
pub mod trace;
pub mod verify;

mod bits;

pub use error::Error;

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
