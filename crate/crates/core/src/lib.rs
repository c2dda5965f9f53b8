//! Crosscap numbers of torus knots, computed exactly.
//!
//! The crosscap number (non-orientable genus) of a torus knot is the
//! Bredon–Wood genus `N(x, y)` of a lens space determined by the knot's
//! parameters. This crate provides:
//!
//! * [`arith`]: arbitrary-precision integer and rational helpers;
//! * [`cf`]: continued fractions, generalized brackets and convergents;
//! * [`bredon_wood`]: the skip-sum `Σ(x/y)`, `N(x, y)`, and the
//!   step-reduction oracle;
//! * [`knot`]: torus-knot normalization, type A/B classification, crosscap
//!   numbers, boundary slopes and the `K_A`/`K_B` split;
//! * [`verify`]: exhaustive sweeps checking the identities the crosscap
//!   formulas rest on.
//!
//! ```
//! use tkc_core::knot::TorusKnot;
//!
//! let k = TorusKnot::from_i64(25, 9).unwrap();
//! assert_eq!(k.crosscap(), 5.into());
//! assert_eq!(k.boundary_slope(), 226.into());
//! ```

pub mod arith;
pub mod bredon_wood;
pub mod cf;
pub mod error;
pub mod exec;
pub mod knot;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
