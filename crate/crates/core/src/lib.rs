//! Tutte-like bivariate polynomials of rooted trees and V-posets.
//!
//! A V-poset is built from the empty poset by disjoint unions and by adding
//! a new greatest or least element; equivalently it contains neither the
//! N-poset nor the bowtie as an induced subposet. The polynomial `P` is
//! defined by the recursion along such a construction and agrees with a sum
//! over maximal antichains, which is where its combinatorial evaluations
//! (antichains, maximal antichains, cutsets) come from.
//!
//! * [`polynomial`]: exact sparse polynomials in `x`, `y`.
//! * [`tree`]: rooted trees, `P` by recursion and by deletion-contraction,
//!   antichain expansions, brute-force counters, exhaustive generation.
//! * [`poset`]: finite posets, V-poset recognition, basic elements, the
//!   poset polynomial and its oracles, isomorphism.
//! * [`enumeration`]: counting V-posets exactly and asymptotically.

pub mod enumeration;
pub mod evaluations;
pub mod polynomial;
pub mod poset;
pub mod tree;

pub use evaluations::Evaluations;
pub use polynomial::BivariatePoly;
pub use poset::Poset;
pub use tree::RootedTree;

use thiserror::Error;

/// Largest ground set handed to exhaustive subset enumeration.
pub const ORACLE_BOUND: usize = 20;

/// Raised by brute-force routines whose input is too large to enumerate.
#[derive(Debug, Clone, Copy, Error, PartialEq, Eq)]
#[error("input of size {size} exceeds the exhaustive-search bound {bound}")]
pub struct BoundExceeded {
    pub size: usize,
    pub bound: usize,
}

pub(crate) fn check_bound(size: usize, bound: usize) -> Result<(), BoundExceeded> {
    if size > bound {
        Err(BoundExceeded { size, bound })
    } else {
        Ok(())
    }
}
