//! Exact computation in linear algebraic matrix monoids.
//!
//! `eggbox` works with monoids `M` that are linear subspaces of the n-by-n
//! matrices, closed under multiplication and containing the identity. Every
//! scalar is a Gaussian rational (a complex number with rational real and
//! imaginary parts), so ranks, kernels, and dimensions are computed exactly:
//! a reported dimension is a certificate, not an estimate.
//!
//! What the crate can do:
//!
//! * decide Green's relations L, R, H, D between elements of `M`
//!   ([`green`]), using the characterization by row spaces and null spaces
//!   valid in regular matrix monoids;
//! * construct and sample idempotents, and walk their conjugation orbits
//!   inside L-, R-, and D-classes ([`idempotent`]);
//! * compute the dimensions of the unit group, the centralizer groups of an
//!   idempotent, and the orbit manifolds of idempotents and of their range
//!   and null subspaces, all through exact kernel computations on the linear
//!   span of `M` ([`lie`]);
//! * manipulate points of Grassmannians as canonical row-reduced subspaces
//!   ([`grassmann`]).
//!
//! The central identity the dimension engine verifies, for every idempotent
//! `e` in every supported monoid, is
//!
//! ```text
//! dim E(D_e) = dim E(L_e) + dim E(R_e)
//! ```
//!
//! together with the matching of idempotent-orbit dimensions with the
//! Grassmannian orbit dimensions of the range and null space of `e`.
//!
//! The `examples/` directory demonstrates each capability; the `eggbox`
//! binary exposes the same operations as batch subcommands over JSON files.

pub mod cli;
pub mod error;
pub mod exact;
pub mod grassmann;
pub mod green;
pub mod idempotent;
pub mod lie;
pub mod linalg;
pub mod monoid;
pub mod sampling;
pub mod suite;

pub use error::Error;
pub use exact::Scalar;
pub use grassmann::Subspace;
pub use idempotent::IdempotentPoint;
pub use lie::DimensionReport;
pub use linalg::Matrix;
pub use monoid::{MonoidElement, MonoidFamily};
