//! Exact computation of Ehrhart δ-polynomials of Lawrence polytopes.
//!
//! Given a configuration of nonzero integer vectors that generate a lattice,
//! this crate computes the δ-polynomial (h*-polynomial) of the associated
//! Lawrence polytope by three independent routes and cross-checks them:
//!
//! 1. a matroid formula summing box-point counts against matroid h-vectors,
//! 2. the same sum with bounded-cell h-vectors of a simple hyperplane
//!    arrangement in place of the matroid h-vectors,
//! 3. brute-force lattice-point counting of dilates.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals
//! throughout, no floating point anywhere.

pub mod arrangement;
pub mod boxlattice;
pub mod config;
pub mod ehrhart;
pub mod error;
pub mod feas;
pub mod matrix;
pub mod matroid;
pub mod poly;
pub mod report;
pub mod verify;

pub use config::Config;
pub use error::Error;
pub use feas::{LinearSystem, RatVector};
pub use matrix::IntMatrix;
pub use poly::IntPolynomial;

/// Enumeration guards shared by the subset, sign-vector, and dilate-fiber
/// enumerations. Defaults keep desk-scale runs predictable; each bound is
/// overridable from the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Maximum number of vectors for matroid subset enumeration (2^n subsets).
    pub max_subsets: usize,
    /// Maximum number of hyperplanes for sign-vector enumeration (3^n cells).
    pub max_signvectors: usize,
    /// Maximum size of the (m+1)^n fiber enumeration for dilate counting.
    pub max_dilate_fibers: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_subsets: 16,
            max_signvectors: 12,
            max_dilate_fibers: 10_000_000,
        }
    }
}
