//! Exact μ-bases of univariate polynomial vectors over the rationals and
//! prime fields.
//!
//! Given `a = [a_1, ..., a_n]` with entries in `K[s]`, a μ-basis is a set of
//! `n - 1` syzygies (vectors `h` with `a . h = 0`) that generates the syzygy
//! module and has linearly independent leading vectors. [`compute_mu_basis`]
//! finds one by a partial row-echelon reduction of the block-shifted
//! coefficient matrix of `a`; [`sg_mu_basis`] is an independent
//! degree-lowering algorithm used for cross-checks and benchmarks.
//!
//! ```
//! use mubasis::{compute_mu_basis, InputVector, Rationals};
//!
//! let a = InputVector::from_i64s(
//!     Rationals,
//!     &[&[1, 0, 1, 0, 1], &[1, 0, 0, 1, 1], &[1, 0, 0, 0, 1]],
//! )
//! .unwrap();
//! let m = compute_mu_basis(&a).unwrap();
//! assert_eq!(m.finite_degrees(), Some(vec![1, 3]));
//! ```

pub mod arith;
pub mod basis;
pub mod bench;
pub mod cli;
pub mod error;
pub mod hhk;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod sg;
pub mod structmat;
pub mod verify;

pub use arith::{Field, FieldScalar, FieldSpec, PrimeField, Rationals};
pub use basis::MuBasisMatrix;
pub use error::{Error, Result};
pub use hhk::{compute_mu_basis, compute_mu_basis_traced, predict_degrees};
pub use poly::{gcd, Degree, InputVector, PolyVector, Polynomial};
pub use sg::sg_mu_basis;
pub use structmat::{CoeffMatrix, FlatVector};
pub use verify::{gcd_via_mubasis, outer_product, verify_all, CheckReport};
