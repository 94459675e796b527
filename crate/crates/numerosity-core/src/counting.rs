//! Counting functions `F ↦ |X_F|` and chains of finite supports.
//!
//! A [`Chain`] is a strictly increasing sequence `H_0 ⊂ H_1 ⊂ ⋯` of finite
//! supports with `|H_k| = k+1`, given by an injective reordering of ℕ: an
//! explicit prefix followed by the remaining naturals in increasing order.
//! The identity chain is `F_k = {0..k}`. Every natural occurs eventually,
//! which is what comparison oracles rely on for fineness.
//!
//! Counting goes through restriction (cheaper); the characteristic-series
//! evaluation `S_X(x_F)` is kept as an independent cross-check oracle in
//! the tests.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use thiserror::Error;

use crate::combinatorics::FiniteSupport;
use crate::pointset::{PointSetExpr, ValidationError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountingError {
    #[error("chain prefix repeats the value {value}")]
    DuplicateInPrefix { value: u64 },
    #[error("entry {index} has cardinality {got}, expected {expected}")]
    NotSigmaIndexed {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

/// An injective reordering of ℕ, materialized on demand: the explicit
/// prefix first, then all remaining naturals in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    prefix: Vec<u64>,
}

impl Chain {
    /// The identity chain `F_k = {0..k}`.
    pub fn identity() -> Self {
        Chain { prefix: Vec::new() }
    }

    /// A chain reordered by the given injective prefix. Redundant trailing
    /// prefix entries (those the default continuation would produce anyway)
    /// are stripped, so equal reorderings compare equal.
    pub fn with_prefix(prefix: Vec<u64>) -> Result<Self, CountingError> {
        let mut seen = FiniteSupport::empty();
        for &value in &prefix {
            if seen.contains(value) {
                return Err(CountingError::DuplicateInPrefix { value });
            }
            seen.insert(value);
        }
        let mut prefix = prefix;
        while let Some(&last) = prefix.last() {
            let earlier = FiniteSupport::from_iter(prefix[..prefix.len() - 1].iter().copied());
            let next_default = (0..).find(|v| !earlier.contains(*v)).unwrap();
            if last == next_default {
                prefix.pop();
            } else {
                break;
            }
        }
        Ok(Chain { prefix })
    }

    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    /// The `i`-th value of the reordering.
    pub fn value(&self, i: usize) -> u64 {
        if let Some(&v) = self.prefix.get(i) {
            return v;
        }
        let mut remaining = i - self.prefix.len();
        let in_prefix = FiniteSupport::from_iter(self.prefix.iter().copied());
        let mut candidate = 0u64;
        loop {
            if !in_prefix.contains(candidate) {
                if remaining == 0 {
                    return candidate;
                }
                remaining -= 1;
            }
            candidate += 1;
        }
    }

    /// `H_k = {π(0), …, π(k)}`, of cardinality `k+1`.
    pub fn support_at(&self, k: usize) -> FiniteSupport {
        FiniteSupport::from_iter((0..=k).map(|i| self.value(i)))
    }
}

/// A memoized counting function for one source expression. Cached values
/// are deterministic (`|restrict(source, F)|`), so recomputation is benign;
/// the cache is owned and mutated only through `&mut self`, which keeps
/// concurrent use race-free by construction (clone per thread if needed).
#[derive(Debug, Clone)]
pub struct CountingFunction {
    source: PointSetExpr,
    cache: BTreeMap<FiniteSupport, u64>,
}

impl CountingFunction {
    pub fn new(source: PointSetExpr) -> Result<Self, CountingError> {
        source.validate()?;
        Ok(CountingFunction {
            source,
            cache: BTreeMap::new(),
        })
    }

    pub fn source(&self) -> &PointSetExpr {
        &self.source
    }

    /// `|X_F|`, cached per support.
    pub fn count(&mut self, f: &FiniteSupport) -> u64 {
        if let Some(&cached) = self.cache.get(f) {
            return cached;
        }
        let value = self
            .source
            .restrict(f)
            .expect("validated at construction")
            .len() as u64;
        self.cache.insert(f.clone(), value);
        value
    }

    /// Counts along the chain: entry `k` is `count(H_k)`, for `k ≤ horizon`.
    /// Nondecreasing because restriction is monotone.
    pub fn counting_sequence(&mut self, chain: &Chain, horizon: usize) -> Vec<u64> {
        (0..=horizon)
            .map(|k| {
                let f = chain.support_at(k);
                self.count(&f)
            })
            .collect()
    }
}

/// One-shot counting without keeping a cache around.
pub fn count(expr: &PointSetExpr, f: &FiniteSupport) -> Result<u64, CountingError> {
    Ok(expr.restrict(f)?.len() as u64)
}

/// Transports a support-indexed sequence to a ℕ-indexed one along
/// `σ(F) = |F|`: entry `n` is the value at the unique chain element of
/// cardinality `n+1`. Chains here always satisfy `|H_k| = k+1`, so this is
/// a checked re-indexing.
pub fn sigma_transport<T: Clone>(
    entries: &[(FiniteSupport, T)],
) -> Result<Vec<T>, CountingError> {
    for (index, (support, _)) in entries.iter().enumerate() {
        if support.len() != index + 1 {
            return Err(CountingError::NotSigmaIndexed {
                index,
                got: support.len(),
                expected: index + 1,
            });
        }
    }
    Ok(entries.iter().map(|(_, v)| v.clone()).collect())
}
