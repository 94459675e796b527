//! The ordered semiring of numerosities.
//!
//! A numerosity is represented by its counting sequence along a chain of
//! finite supports, together with the source expression when one is known.
//! Arithmetic is pointwise and exact; comparison classifies the difference
//! sequence through a pluggable [`UltrafilterOracle`].
//!
//! A genuine ultrafilter decides every comparison (trichotomy), but no
//! computable total oracle exists, so oracles may answer `Undecided`. The
//! default [`EventualSignOracle`] commits to a sign class only when it is
//! uncontested on a stabilization window at the end of the horizon; the
//! sum of evens and odds is decided, evens versus odds is honestly not.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::combinatorics::{FiniteSupport, Tuple};
use crate::counting::{Chain, CountingError, CountingFunction};
use crate::pointset::{PointSetExpr, ValidationError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumerosityError {
    #[error("operands live on different chains")]
    ChainMismatch,
    #[error("operands have different horizons ({left} vs {right})")]
    HorizonMismatch { left: usize, right: usize },
    #[error("counting sequence decreases at index {index}")]
    NotMonotone { index: usize },
    #[error("difference is negative at index {index}; the subset precondition fails")]
    NegativeDifference { index: usize },
    #[error("sources are not multipliable; collision witness {collision}")]
    NotMultipliable { collision: Tuple },
    #[error("counts differ at chain index {index}: {left} vs {right}")]
    CountMismatch {
        index: usize,
        left: u64,
        right: u64,
    },
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Counting(#[from] CountingError),
    #[error(transparent)]
    Combinatorics(#[from] crate::combinatorics::CombinatoricsError),
}

/// Verdict of a comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    Undecided,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Comparison::Less => "LESS",
            Comparison::Equal => "EQUAL",
            Comparison::Greater => "GREATER",
            Comparison::Undecided => "UNDECIDED",
        };
        write!(f, "{s}")
    }
}

/// A comparison together with the witnessing tail index when decided: the
/// start of the maximal suffix on which the difference keeps the decided
/// sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompareResult {
    pub relation: Comparison,
    pub tail: Option<usize>,
}

/// Sign classification of an integer sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Negative { tail: usize },
    Zero { tail: usize },
    Positive { tail: usize },
    Undecided,
}

/// Decides which sign class of a difference sequence is "large". Oracles
/// must be deterministic, and must treat every cofinite index set as large
/// (the fineness surrogate: along a chain every cone `{F : n ∈ F}` is
/// eventually entered, so eventually-constant signs must be committed to).
pub trait UltrafilterOracle {
    fn classify(&self, diff: &[i128]) -> Classification;
}

/// The default oracle: commit to a sign class iff it holds on the whole
/// stabilization window `[K−W, K]` at the end of the horizon, with no other
/// class occurring there; otherwise answer `Undecided`.
#[derive(Debug, Clone, Copy)]
pub struct EventualSignOracle {
    window: usize,
}

impl EventualSignOracle {
    pub const DEFAULT_WINDOW: usize = 16;

    pub fn new(window: usize) -> Self {
        EventualSignOracle { window }
    }
}

impl Default for EventualSignOracle {
    fn default() -> Self {
        EventualSignOracle::new(Self::DEFAULT_WINDOW)
    }
}

impl UltrafilterOracle for EventualSignOracle {
    fn classify(&self, diff: &[i128]) -> Classification {
        let Some(&last) = diff.last() else {
            return Classification::Undecided;
        };
        let horizon = diff.len() - 1;
        let lo = horizon.saturating_sub(self.window);
        let class = last.signum();
        if diff[lo..].iter().any(|d| d.signum() != class) {
            return Classification::Undecided;
        }
        // witnessing tail: extend the constant-sign suffix as far back as
        // it goes
        let mut tail = lo;
        while tail > 0 && diff[tail - 1].signum() == class {
            tail -= 1;
        }
        match class {
            0 => Classification::Zero { tail },
            1 => Classification::Positive { tail },
            _ => Classification::Negative { tail },
        }
    }
}

/// A counting function interpreted modulo an ultrafilter oracle: the
/// sequence of counts along a chain, up to a horizon.
#[derive(Debug, Clone)]
pub struct Numerosity {
    sequence: Vec<u64>,
    chain: Chain,
    source: Option<PointSetExpr>,
}

impl Numerosity {
    /// The numerosity of a point set along a chain.
    pub fn of(
        expr: &PointSetExpr,
        chain: &Chain,
        horizon: usize,
    ) -> Result<Self, NumerosityError> {
        let mut counting = CountingFunction::new(expr.clone())?;
        let sequence = counting.counting_sequence(chain, horizon);
        Numerosity::from_sequence(sequence, chain.clone(), Some(expr.clone()))
    }

    /// Wraps an explicit counting sequence; it must be nondecreasing.
    pub fn from_sequence(
        sequence: Vec<u64>,
        chain: Chain,
        source: Option<PointSetExpr>,
    ) -> Result<Self, NumerosityError> {
        for i in 1..sequence.len() {
            if sequence[i] < sequence[i - 1] {
                return Err(NumerosityError::NotMonotone { index: i });
            }
        }
        Ok(Numerosity {
            sequence,
            chain,
            source,
        })
    }

    /// `0 = n(∅)`.
    pub fn zero(chain: &Chain, horizon: usize) -> Self {
        Numerosity {
            sequence: alloc::vec![0; horizon + 1],
            chain: chain.clone(),
            source: Some(PointSetExpr::Finite(crate::pointset::FinitePointSet::empty())),
        }
    }

    /// `1 = n({(π(0))})`, a singleton present in every `H_k` of the chain.
    pub fn one(chain: &Chain, horizon: usize) -> Self {
        Numerosity {
            sequence: alloc::vec![1; horizon + 1],
            chain: chain.clone(),
            source: Some(PointSetExpr::singleton(&[chain.value(0)])),
        }
    }

    pub fn sequence(&self) -> &[u64] {
        &self.sequence
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn horizon(&self) -> usize {
        self.sequence.len().saturating_sub(1)
    }

    pub fn source(&self) -> Option<&PointSetExpr> {
        self.source.as_ref()
    }

    fn require_compatible(&self, other: &Numerosity) -> Result<(), NumerosityError> {
        if self.chain != other.chain {
            return Err(NumerosityError::ChainMismatch);
        }
        if self.sequence.len() != other.sequence.len() {
            return Err(NumerosityError::HorizonMismatch {
                left: self.horizon(),
                right: other.horizon(),
            });
        }
        Ok(())
    }

    /// The difference sequence `count_x(k) − count_y(k)`.
    pub fn difference(&self, other: &Numerosity) -> Result<Vec<i128>, NumerosityError> {
        self.require_compatible(other)?;
        Ok(self
            .sequence
            .iter()
            .zip(&other.sequence)
            .map(|(&a, &b)| i128::from(a) - i128::from(b))
            .collect())
    }

    /// Compares through the oracle. An identically zero difference is Equal
    /// no matter the oracle.
    pub fn compare(
        &self,
        other: &Numerosity,
        oracle: &dyn UltrafilterOracle,
    ) -> Result<CompareResult, NumerosityError> {
        let diff = self.difference(other)?;
        if diff.iter().all(|&d| d == 0) {
            return Ok(CompareResult {
                relation: Comparison::Equal,
                tail: Some(0),
            });
        }
        Ok(match oracle.classify(&diff) {
            Classification::Negative { tail } => CompareResult {
                relation: Comparison::Less,
                tail: Some(tail),
            },
            Classification::Zero { tail } => CompareResult {
                relation: Comparison::Equal,
                tail: Some(tail),
            },
            Classification::Positive { tail } => CompareResult {
                relation: Comparison::Greater,
                tail: Some(tail),
            },
            Classification::Undecided => CompareResult {
                relation: Comparison::Undecided,
                tail: None,
            },
        })
    }

    /// Pointwise sum. When both sources are known and their restrictions
    /// are disjoint on every `H_k` up to the horizon, the sum is literally
    /// the counting function of the union; otherwise the sum is abstract
    /// (it is still a numerosity, realized by disjoint shifted copies).
    pub fn add(&self, other: &Numerosity) -> Result<Numerosity, NumerosityError> {
        self.require_compatible(other)?;
        let sequence = self
            .sequence
            .iter()
            .zip(&other.sequence)
            .map(|(&a, &b)| a.checked_add(b).expect("count overflow"))
            .collect();
        let source = match (&self.source, &other.source) {
            (Some(x), Some(y))
                if self.within_proof_budget(other) && self.disjoint_on_chain(x, y)? =>
            {
                Some(PointSetExpr::union(x.clone(), y.clone()))
            }
            _ => None,
        };
        Numerosity::from_sequence(sequence, self.chain.clone(), source)
    }

    /// Materializing restrictions to decide disjointness is only worth it
    /// at desk scale; past this many elements the relation is left
    /// unproven and the result stays abstract, which is always sound.
    const PROOF_BUDGET: u64 = 100_000;

    fn within_proof_budget(&self, other: &Numerosity) -> bool {
        let a = self.sequence.last().copied().unwrap_or(0);
        let b = other.sequence.last().copied().unwrap_or(0);
        a.saturating_add(b) <= Self::PROOF_BUDGET
    }

    fn disjoint_on_chain(
        &self,
        x: &PointSetExpr,
        y: &PointSetExpr,
    ) -> Result<bool, NumerosityError> {
        // different uniform arities can never share a tuple
        if let (Some(a), Some(b)) = (x.uniform_arity(), y.uniform_arity()) {
            if a != b && a != 0 && b != 0 {
                return Ok(true);
            }
        }
        for k in 0..self.sequence.len() {
            let f = self.chain.support_at(k);
            if !x.restrict(&f)?.is_disjoint(&y.restrict(&f)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Pointwise product. Requires the sources multipliable — structurally,
    /// or with no concatenation collision on any `H_k` up to the horizon. A
    /// proved collision is an error carrying the witness.
    pub fn mul(&self, other: &Numerosity) -> Result<Numerosity, NumerosityError> {
        self.require_compatible(other)?;
        let mut product_source = None;
        if let (Some(x), Some(y)) = (&self.source, &other.source) {
            // uniform arity on either side splits every concatenation
            // uniquely; otherwise look for a collision on each H_k
            if x.uniform_arity().is_none() && y.uniform_arity().is_none() {
                for k in 0..self.sequence.len() {
                    let f = self.chain.support_at(k);
                    if let Some(collision) = first_collision(x, y, &f)? {
                        return Err(NumerosityError::NotMultipliable { collision });
                    }
                }
            }
            product_source = Some(PointSetExpr::product(x.clone(), y.clone()));
        }
        let sequence = self
            .sequence
            .iter()
            .zip(&other.sequence)
            .map(|(&a, &b)| a.checked_mul(b).expect("count overflow"))
            .collect();
        Numerosity::from_sequence(sequence, self.chain.clone(), product_source)
    }

    /// Pointwise difference of a numerosity and one of a subset: negative
    /// entries signal that the subset precondition was violated.
    pub fn sub_partial(&self, part: &Numerosity) -> Result<Numerosity, NumerosityError> {
        self.require_compatible(part)?;
        let mut sequence = Vec::with_capacity(self.sequence.len());
        for (index, (&c, &a)) in self.sequence.iter().zip(&part.sequence).enumerate() {
            if a > c {
                return Err(NumerosityError::NegativeDifference { index });
            }
            sequence.push(c - a);
        }
        let source = match (&self.source, &part.source) {
            (Some(c), Some(a))
                if self.within_proof_budget(part) && self.subset_on_chain(a, c)? =>
            {
                Some(PointSetExpr::difference(c.clone(), a.clone()))
            }
            _ => None,
        };
        Numerosity::from_sequence(sequence, self.chain.clone(), source)
    }

    fn subset_on_chain(
        &self,
        small: &PointSetExpr,
        big: &PointSetExpr,
    ) -> Result<bool, NumerosityError> {
        for k in 0..self.sequence.len() {
            let f = self.chain.support_at(k);
            let inside = big.restrict(&f)?;
            if !small.restrict(&f)?.iter().all(|t| inside.contains(t)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn first_collision(
    x: &PointSetExpr,
    y: &PointSetExpr,
    f: &FiniteSupport,
) -> Result<Option<Tuple>, NumerosityError> {
    let left = x.restrict(f)?;
    let right = y.restrict(f)?;
    let mut seen = alloc::collections::BTreeSet::new();
    for a in left.iter() {
        for b in right.iter() {
            let joined = a.concat(b);
            if !seen.insert(joined.clone()) {
                return Ok(Some(joined));
            }
        }
    }
    Ok(None)
}

/// Outcome of the finite approximation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FapOutcome {
    /// `|X_F| ≤ |Y_F|` for every `F ⊆ {0..k}`; certifies `n(X) ≤ n(Y)`
    /// under every gauge ultrafilter, at window scale.
    Holds,
    Fails { witness: FiniteSupport },
}

/// Checks `|X_F| ≤ |Y_F|` over *all* subsets `F ⊆ {0..k}` (not only the
/// chain), reporting the first counterexample in canonical subset order.
pub fn fap_check(
    x: &PointSetExpr,
    y: &PointSetExpr,
    k: u64,
) -> Result<FapOutcome, NumerosityError> {
    x.validate()?;
    y.validate()?;
    let full = FiniteSupport::initial_segment(k);
    for f in full.subsets()? {
        let cx = x.restrict(&f)?.len();
        let cy = y.restrict(&f)?.len();
        if cx > cy {
            return Ok(FapOutcome::Fails { witness: f });
        }
    }
    Ok(FapOutcome::Holds)
}

/// An explicit bijection `τ` between two restrictions, built layer by
/// layer along a chain so that `τ[X_{H_k}] = Y_{H_k}` for every `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceTable {
    pairs: Vec<(Tuple, Tuple)>,
}

impl CongruenceTable {
    pub fn pairs(&self) -> &[(Tuple, Tuple)] {
        &self.pairs
    }

    pub fn image_of(&self, tuple: &Tuple) -> Option<&Tuple> {
        self.pairs
            .binary_search_by(|(a, _)| a.cmp(tuple))
            .ok()
            .map(|i| &self.pairs[i].1)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Glues disjoint layer bijections `X_{H_{k}}∖X_{H_{k−1}} → Y_{H_{k}}∖Y_{H_{k−1}}`
/// into a bijection on `X_{H_K}`, pairing new elements in canonical order.
/// Fails with the first chain index at which the counts differ.
pub fn build_congruence(
    x: &PointSetExpr,
    y: &PointSetExpr,
    chain: &Chain,
    horizon: usize,
) -> Result<CongruenceTable, NumerosityError> {
    x.validate()?;
    y.validate()?;
    let mut pairs: Vec<(Tuple, Tuple)> = Vec::new();
    let mut prev_x = crate::pointset::FinitePointSet::empty();
    let mut prev_y = crate::pointset::FinitePointSet::empty();
    for k in 0..=horizon {
        let f = chain.support_at(k);
        let cur_x = x.restrict(&f)?;
        let cur_y = y.restrict(&f)?;
        if cur_x.len() != cur_y.len() {
            return Err(NumerosityError::CountMismatch {
                index: k,
                left: cur_x.len() as u64,
                right: cur_y.len() as u64,
            });
        }
        let new_x: Vec<&Tuple> = cur_x.iter().filter(|t| !prev_x.contains(t)).collect();
        let new_y: Vec<&Tuple> = cur_y.iter().filter(|t| !prev_y.contains(t)).collect();
        // equal totals and equal previous layers force equal layer sizes
        debug_assert_eq!(new_x.len(), new_y.len());
        pairs.extend(
            new_x
                .into_iter()
                .cloned()
                .zip(new_y.into_iter().cloned()),
        );
        prev_x = cur_x;
        prev_y = cur_y;
    }
    pairs.sort_by(|(a, _), (b, _)| a.cmp(b));
    Ok(CongruenceTable { pairs })
}
