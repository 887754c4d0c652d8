//! Convex geometry of diagonal transformations.
//!
//! This crate implements the computational side of the diagonal Minkowski
//! machinery: support functions of origin-symmetric convex bodies and their
//! Hadamard (diagonal) transforms, K-transforms of discrete signed sphere
//! measures, exact zonoid-equivalence and D-universality decision procedures,
//! surface-area-measure/mixed-volume transforms, and the correspondence
//! between diagonally scaled `ℓ_p`-balls (`D_p`-balls) and one-sided strictly
//! stable laws, with reproducible samplers and statistical verifiers.
//!
//! All values are immutable; every operation is a pure function and safe to
//! call concurrently. Randomized routines take an explicit RNG so that a
//! fixed seed reproduces the exact output stream.

pub mod bodies;
pub mod error;
pub mod grid;
pub mod measures;
pub mod nnls;
pub mod stable;
pub mod transforms;
pub mod universality;

pub(crate) mod vecs;

pub use bodies::{canonical_zonotope, diag_body, hadamard, ConvexBody, Zonotope};
pub use error::{Error, Result};
pub use grid::{DirectionGrid, GridScheme};
pub use measures::{DiscreteRandomVector, RvAtom, SphereAtom, SphereMeasure};

pub use transforms::TransformMatrix;


/// Absolute tolerance for "is this coordinate zero" tests on user-provided
/// rationals (sphere atoms, sign patterns, `A_E` membership).
pub const ZERO_TOL: f64 = 1e-12;

/// Default canonical-form tolerance for exact zonotope comparisons.
pub const CANONICAL_TOL: f64 = 1e-9;

/// Default relative tolerance for sampled support-function comparisons.
pub const SAMPLED_TOL: f64 = 1e-9;

/// Construct the deterministic, reproducible RNG used across the crate.
pub fn seeded_rng(seed: u64) -> rand_chacha::ChaCha12Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha12Rng::seed_from_u64(seed)
}
