//! Exact arithmetic for Euclidean numerosities of finitary point sets.
//!
//! A *point set* is a set of finite tuples of naturals; a *finitary* one
//! contains only finitely many tuples over each finite alphabet `{0..n}`.
//! This crate builds, entirely in exact integer/rational arithmetic:
//!
//! - the tuple/monomial combinatorics underlying characteristic series
//!   ([`combinatorics`]),
//! - a closed expression language for finitary point sets with computable
//!   finitary-bound certificates and exact finite restrictions ([`pointset`]),
//! - truncated formal power series with characteristic-series laws,
//!   squarefree projection and inclusion–exclusion inversion ([`series`]),
//! - memoized counting functions and chains of finite supports ([`counting`]),
//! - an ordered semiring of numerosities whose comparisons are delegated to a
//!   pluggable ultrafilter oracle ([`numerosity`]),
//! - an executable harness for the Euclidean axioms ([`axioms`]).
//!
//! The crate is `no_std` (with `alloc`); all IO, the expression DSL and the
//! CLI live in the companion `numerosity-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod axioms;
pub mod catalog;
pub mod combinatorics;
pub mod counting;
pub mod numerosity;
pub mod pointset;
pub mod series;

pub use combinatorics::{FiniteSupport, Monomial, Tuple};
pub use counting::{Chain, CountingFunction};
pub use numerosity::{Comparison, EventualSignOracle, Numerosity, UltrafilterOracle};
pub use pointset::{FinitePointSet, PointSetExpr};
pub use series::{Assignment, TruncatedSeries, TruncationWindow};
