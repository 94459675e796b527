//! Finitary point sets as a closed expression language.
//!
//! Infinite sets enter only through a fixed constructor catalog for which a
//! finitary-bound certificate is derivable structurally: for every alphabet
//! `{0..n}` there is a length bound `h` with `X ∩ {0..n}^k = ∅` for all
//! `k > h`. Arbitrary predicates are rejected by construction — a set like
//! `{(n), (n,n), (n,n,n), …}` is simply not expressible, which is what makes
//! the unit principle `A×{n} ≈ A` consistent.
//!
//! Products are concatenation products: `A×B = {(a₁,…,a_k,b₁,…,b_h)}`. A
//! pair is *multipliable* when distinct pairs have distinct concatenations;
//! this is only semi-decidable in general, so [`is_multipliable`] is
//! three-valued with structural shortcuts for uniform-arity factors.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::combinatorics::{FiniteSupport, Tuple};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("arity must be at least 1 in `{at}`")]
    ZeroArity { at: String },
    #[error("affine map slope must be at least 1 in `{at}`")]
    ZeroSlope { at: String },
    #[error("permutation spec for arity {arity} is not a bijection in `{at}`")]
    BadPermutation { arity: u32, at: String },
}

/// A strictly increasing map ℕ → ℕ from a fixed catalog; its image is a
/// one-dimensional point set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonotoneMap {
    /// `n ↦ a·n + b` with `a ≥ 1`.
    Affine { slope: u64, offset: u64 },
    /// `n ↦ n²`.
    Squares,
}

impl MonotoneMap {
    pub fn evens() -> Self {
        MonotoneMap::Affine { slope: 2, offset: 0 }
    }

    pub fn odds() -> Self {
        MonotoneMap::Affine { slope: 2, offset: 1 }
    }

    /// Membership of `value` in the image.
    pub fn contains(&self, value: u64) -> bool {
        match *self {
            MonotoneMap::Affine { slope, offset } => {
                value >= offset && (value - offset).is_multiple_of(slope)
            }
            MonotoneMap::Squares => {
                let r = value.isqrt();
                r * r == value
            }
        }
    }
}

/// Per-arity position permutations: tuples of a listed arity are
/// rearranged by that arity's permutation, all other tuples pass through
/// unchanged. Position permutations are injective on any point set and
/// preserve the support of every tuple.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PermutationSpec {
    by_arity: BTreeMap<u32, Vec<u32>>,
}

impl PermutationSpec {
    pub fn identity() -> Self {
        PermutationSpec::default()
    }

    pub fn with_arity(mut self, arity: u32, positions: Vec<u32>) -> Self {
        self.by_arity.insert(arity, positions);
        self
    }

    pub fn arities(&self) -> impl Iterator<Item = (u32, &[u32])> {
        self.by_arity.iter().map(|(&a, p)| (a, p.as_slice()))
    }

    /// Each listed arity must get a bijection of `{0..arity-1}`.
    pub fn check(&self) -> Result<(), u32> {
        for (&arity, positions) in &self.by_arity {
            if positions.len() != arity as usize {
                return Err(arity);
            }
            let mut seen = alloc::vec![false; arity as usize];
            for &p in positions {
                if p >= arity || seen[p as usize] {
                    return Err(arity);
                }
                seen[p as usize] = true;
            }
        }
        Ok(())
    }

    /// `T(x)[i] = x[π(i)]` for the permutation of `x`'s arity, if any.
    pub fn apply(&self, tuple: &Tuple) -> Tuple {
        match self.by_arity.get(&(tuple.len() as u32)) {
            None => tuple.clone(),
            Some(positions) => {
                let entries = positions
                    .iter()
                    .map(|&p| tuple.entries()[p as usize])
                    .collect();
                Tuple::new(entries).expect("permutation preserves length")
            }
        }
    }
}

/// A finite set of tuples in canonical (length, then lexicographic) order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FinitePointSet {
    tuples: Vec<Tuple>,
}

impl FinitePointSet {
    pub fn empty() -> Self {
        FinitePointSet::default()
    }

    pub fn from_tuples<I: IntoIterator<Item = Tuple>>(tuples: I) -> Self {
        let mut tuples: Vec<Tuple> = tuples.into_iter().collect();
        tuples.sort();
        tuples.dedup();
        FinitePointSet { tuples }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Tuple> {
        self.tuples.iter()
    }

    pub fn contains(&self, tuple: &Tuple) -> bool {
        self.tuples.binary_search(tuple).is_ok()
    }

    pub fn union(&self, other: &FinitePointSet) -> FinitePointSet {
        FinitePointSet::from_tuples(self.tuples.iter().chain(other.tuples.iter()).cloned())
    }

    pub fn intersection(&self, other: &FinitePointSet) -> FinitePointSet {
        FinitePointSet {
            tuples: self
                .tuples
                .iter()
                .filter(|t| other.contains(t))
                .cloned()
                .collect(),
        }
    }

    pub fn difference(&self, other: &FinitePointSet) -> FinitePointSet {
        FinitePointSet {
            tuples: self
                .tuples
                .iter()
                .filter(|t| !other.contains(t))
                .cloned()
                .collect(),
        }
    }

    pub fn is_disjoint(&self, other: &FinitePointSet) -> bool {
        self.tuples.iter().all(|t| !other.contains(t))
    }
}

impl fmt::Display for FinitePointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, t) in self.tuples.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "}}")
    }
}

/// Closed expression describing a (possibly infinite) finitary point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointSetExpr {
    /// An explicit finite set.
    Finite(FinitePointSet),
    /// `ℕ^d`, all tuples of arity `d ≥ 1`.
    FullSpace(u32),
    /// `{(n,…,n) : n ∈ ℕ}` with `d ≥ 1` copies.
    Diagonal(u32),
    /// Image of a strictly increasing map, as 1-tuples.
    MonotoneImage(MonotoneMap),
    Union(Box<PointSetExpr>, Box<PointSetExpr>),
    Intersection(Box<PointSetExpr>, Box<PointSetExpr>),
    Difference(Box<PointSetExpr>, Box<PointSetExpr>),
    /// Concatenation product `A×B`.
    Product(Box<PointSetExpr>, Box<PointSetExpr>),
    /// Image under per-arity position permutations.
    Permute(Box<PointSetExpr>, PermutationSpec),
    /// `A×{m}^h×{n}^k`: `h` copies of `m` then `k` copies of `n` appended.
    ShiftedCopy {
        base: Box<PointSetExpr>,
        m: u64,
        h: u32,
        n: u64,
        k: u32,
    },
}

/// Three-valued multipliability verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multipliability {
    Multipliable,
    /// A concatenation produced by two distinct pairs.
    NotMultipliable { collision: Tuple },
    /// No collision found on `F_0 ⊂ … ⊂ F_horizon`; undetermined beyond.
    Unknown { horizon: u64 },
}

impl PointSetExpr {
    pub fn union(a: PointSetExpr, b: PointSetExpr) -> PointSetExpr {
        PointSetExpr::Union(Box::new(a), Box::new(b))
    }

    pub fn intersection(a: PointSetExpr, b: PointSetExpr) -> PointSetExpr {
        PointSetExpr::Intersection(Box::new(a), Box::new(b))
    }

    pub fn difference(a: PointSetExpr, b: PointSetExpr) -> PointSetExpr {
        PointSetExpr::Difference(Box::new(a), Box::new(b))
    }

    pub fn product(a: PointSetExpr, b: PointSetExpr) -> PointSetExpr {
        PointSetExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn singleton(entries: &[u64]) -> PointSetExpr {
        PointSetExpr::Finite(FinitePointSet::from_tuples([
            Tuple::new(entries.to_vec()).expect("nonempty")
        ]))
    }

    /// The expression `A×{m}^h×{n}^k`.
    pub fn shifted_copy(base: PointSetExpr, m: u64, h: u32, n: u64, k: u32) -> PointSetExpr {
        PointSetExpr::ShiftedCopy {
            base: Box::new(base),
            m,
            h,
            n,
            k,
        }
    }

    /// The image expression `T[X]` for a per-arity position permutation.
    pub fn permute_transform(
        base: PointSetExpr,
        spec: PermutationSpec,
    ) -> Result<PointSetExpr, ValidationError> {
        if let Err(arity) = spec.check() {
            return Err(ValidationError::BadPermutation {
                arity,
                at: format!("{base}"),
            });
        }
        Ok(PointSetExpr::Permute(Box::new(base), spec))
    }

    /// Derives the finitary certificate for the whole expression, rejecting
    /// with the failing sub-expression identified.
    pub fn validate(&self) -> Result<(), ValidationError> {
        match self {
            PointSetExpr::Finite(_) => Ok(()),
            PointSetExpr::FullSpace(d) | PointSetExpr::Diagonal(d) => {
                if *d == 0 {
                    Err(ValidationError::ZeroArity { at: format!("{self}") })
                } else {
                    Ok(())
                }
            }
            PointSetExpr::MonotoneImage(map) => match map {
                MonotoneMap::Affine { slope, .. } if *slope == 0 => {
                    Err(ValidationError::ZeroSlope { at: format!("{self}") })
                }
                _ => Ok(()),
            },
            PointSetExpr::Union(a, b)
            | PointSetExpr::Intersection(a, b)
            | PointSetExpr::Difference(a, b)
            | PointSetExpr::Product(a, b) => {
                a.validate()?;
                b.validate()
            }
            PointSetExpr::Permute(a, spec) => {
                a.validate()?;
                spec.check().map_err(|arity| ValidationError::BadPermutation {
                    arity,
                    at: format!("{self}"),
                })
            }
            PointSetExpr::ShiftedCopy { base, .. } => base.validate(),
        }
    }

    /// The certified length bound: `X ∩ {0..n}^k = ∅` for every `k`
    /// exceeding `bound(n)`.
    pub fn bound(&self, n: u64) -> u32 {
        match self {
            PointSetExpr::Finite(set) => set
                .iter()
                .filter(|t| t.entries().iter().all(|&e| e <= n))
                .map(|t| t.len() as u32)
                .max()
                .unwrap_or(0),
            PointSetExpr::FullSpace(d) | PointSetExpr::Diagonal(d) => *d,
            PointSetExpr::MonotoneImage(_) => 1,
            PointSetExpr::Union(a, b) => a.bound(n).max(b.bound(n)),
            PointSetExpr::Intersection(a, b) => a.bound(n).min(b.bound(n)),
            PointSetExpr::Difference(a, _) => a.bound(n),
            PointSetExpr::Product(a, b) => a.bound(n) + b.bound(n),
            PointSetExpr::Permute(a, _) => a.bound(n),
            PointSetExpr::ShiftedCopy { base, m, h, n: v, k } => {
                if *m > n && *h > 0 || *v > n && *k > 0 {
                    0
                } else {
                    base.bound(n) + h + k
                }
            }
        }
    }

    /// The exact restriction `X_F = X ∩ ⋃_k F^k`: every tuple of `X` all of
    /// whose components lie in `F`. Finite by the certificate.
    pub fn restrict(&self, support: &FiniteSupport) -> Result<FinitePointSet, ValidationError> {
        self.validate()?;
        Ok(self.restrict_unchecked(support))
    }

    fn restrict_unchecked(&self, support: &FiniteSupport) -> FinitePointSet {
        match self {
            PointSetExpr::Finite(set) => FinitePointSet {
                tuples: set
                    .iter()
                    .filter(|t| t.supported_by(support))
                    .cloned()
                    .collect(),
            },
            PointSetExpr::FullSpace(d) => FinitePointSet {
                tuples: crate::combinatorics::tuples_over(support, *d as usize),
            },
            PointSetExpr::Diagonal(d) => FinitePointSet::from_tuples(support.iter().map(|v| {
                Tuple::new(alloc::vec![v; *d as usize]).expect("arity ≥ 1")
            })),
            PointSetExpr::MonotoneImage(map) => FinitePointSet::from_tuples(
                support
                    .iter()
                    .filter(|&v| map.contains(v))
                    .map(|v| Tuple::new(alloc::vec![v]).expect("nonempty")),
            ),
            PointSetExpr::Union(a, b) => a
                .restrict_unchecked(support)
                .union(&b.restrict_unchecked(support)),
            PointSetExpr::Intersection(a, b) => a
                .restrict_unchecked(support)
                .intersection(&b.restrict_unchecked(support)),
            PointSetExpr::Difference(a, b) => a
                .restrict_unchecked(support)
                .difference(&b.restrict_unchecked(support)),
            PointSetExpr::Product(a, b) => {
                let left = a.restrict_unchecked(support);
                let right = b.restrict_unchecked(support);
                FinitePointSet::from_tuples(
                    left.iter()
                        .flat_map(|x| right.iter().map(move |y| x.concat(y))),
                )
            }
            PointSetExpr::Permute(a, spec) => FinitePointSet::from_tuples(
                a.restrict_unchecked(support).iter().map(|t| spec.apply(t)),
            ),
            PointSetExpr::ShiftedCopy { base, m, h, n, k } => {
                if (*h > 0 && !support.contains(*m)) || (*k > 0 && !support.contains(*n)) {
                    return FinitePointSet::empty();
                }
                let mut suffix = alloc::vec![*m; *h as usize];
                suffix.extend(core::iter::repeat_n(*n, *k as usize));
                FinitePointSet::from_tuples(base.restrict_unchecked(support).iter().map(|t| {
                    let mut entries = t.entries().to_vec();
                    entries.extend_from_slice(&suffix);
                    Tuple::new(entries).expect("nonempty")
                }))
            }
        }
    }

    /// Arity shared by all tuples of the set, when that is structurally
    /// evident. `None` means "mixed or not determined structurally".
    pub fn uniform_arity(&self) -> Option<u32> {
        match self {
            PointSetExpr::Finite(set) => {
                let mut lengths = set.iter().map(|t| t.len() as u32);
                match lengths.next() {
                    None => Some(0), // empty set: trivially uniform
                    Some(first) => lengths.all(|l| l == first).then_some(first),
                }
            }
            PointSetExpr::FullSpace(d) | PointSetExpr::Diagonal(d) => Some(*d),
            PointSetExpr::MonotoneImage(_) => Some(1),
            PointSetExpr::Union(a, b) => match (a.uniform_arity(), b.uniform_arity()) {
                (Some(x), Some(y)) if x == y => Some(x),
                (Some(0), other) => other,
                (other, Some(0)) => other,
                _ => None,
            },
            // subsets of a uniform-arity set are uniform
            PointSetExpr::Intersection(a, b) => a.uniform_arity().or(b.uniform_arity()),
            PointSetExpr::Difference(a, _) => a.uniform_arity(),
            PointSetExpr::Product(a, b) => Some(a.uniform_arity()? + b.uniform_arity()?),
            PointSetExpr::Permute(a, _) => a.uniform_arity(),
            PointSetExpr::ShiftedCopy { base, h, k, .. } => {
                base.uniform_arity().map(|d| d + h + k)
            }
        }
    }

    /// Whether concatenation is injective on `X_F × Y_F`. Since a
    /// concatenated tuple has all components in `F` exactly when both parts
    /// do, multipliability of `X` and `Y` is equivalent to this holding for
    /// every `F` in a cofinal chain.
    pub fn is_multipliable_on(
        &self,
        other: &PointSetExpr,
        support: &FiniteSupport,
    ) -> Result<bool, ValidationError> {
        Ok(self.collision_on(other, support)?.is_none())
    }

    fn collision_on(
        &self,
        other: &PointSetExpr,
        support: &FiniteSupport,
    ) -> Result<Option<Tuple>, ValidationError> {
        let left = self.restrict(support)?;
        let right = other.restrict(support)?;
        let mut seen: BTreeMap<Tuple, ()> = BTreeMap::new();
        for x in left.iter() {
            for y in right.iter() {
                let joined = x.concat(y);
                if seen.insert(joined.clone(), ()).is_some() {
                    return Ok(Some(joined));
                }
            }
        }
        Ok(None)
    }

    /// Semi-decision of multipliability: structurally true when either
    /// factor has uniform arity (the split point of any concatenation is
    /// then determined), otherwise sampled along `F_k = {0..k}` up to the
    /// horizon.
    pub fn is_multipliable(
        &self,
        other: &PointSetExpr,
        horizon: u64,
    ) -> Result<Multipliability, ValidationError> {
        self.validate()?;
        other.validate()?;
        if self.uniform_arity().is_some() || other.uniform_arity().is_some() {
            return Ok(Multipliability::Multipliable);
        }
        for k in 0..=horizon {
            let f = FiniteSupport::initial_segment(k);
            if let Some(collision) = self.collision_on(other, &f)? {
                return Ok(Multipliability::NotMultipliable { collision });
            }
        }
        Ok(Multipliability::Unknown { horizon })
    }
}

impl fmt::Display for PointSetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // precedence: '*' binds tighter than '|' '&' '\'
        fn atom(e: &PointSetExpr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match e {
                PointSetExpr::Union(..)
                | PointSetExpr::Intersection(..)
                | PointSetExpr::Difference(..)
                | PointSetExpr::Product(..) => write!(f, "({e})"),
                _ => write!(f, "{e}"),
            }
        }
        fn term(e: &PointSetExpr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match e {
                PointSetExpr::Union(..)
                | PointSetExpr::Intersection(..)
                | PointSetExpr::Difference(..) => write!(f, "({e})"),
                _ => write!(f, "{e}"),
            }
        }
        match self {
            PointSetExpr::Finite(set) => write!(f, "{set}"),
            PointSetExpr::FullSpace(d) => write!(f, "N^{d}"),
            PointSetExpr::Diagonal(d) => write!(f, "diag({d})"),
            PointSetExpr::MonotoneImage(map) => match map {
                MonotoneMap::Affine { slope: 2, offset: 0 } => write!(f, "evens"),
                MonotoneMap::Affine { slope: 2, offset: 1 } => write!(f, "odds"),
                MonotoneMap::Affine { slope, offset } => write!(f, "affine({slope},{offset})"),
                MonotoneMap::Squares => write!(f, "squares"),
            },
            PointSetExpr::Union(a, b) => {
                term(a, f)?;
                write!(f, " | ")?;
                term(b, f)
            }
            PointSetExpr::Intersection(a, b) => {
                term(a, f)?;
                write!(f, " & ")?;
                term(b, f)
            }
            PointSetExpr::Difference(a, b) => {
                term(a, f)?;
                write!(f, " \\ ")?;
                term(b, f)
            }
            PointSetExpr::Product(a, b) => {
                atom(a, f)?;
                write!(f, " * ")?;
                atom(b, f)
            }
            PointSetExpr::Permute(a, spec) => {
                write!(f, "perm({a}, ")?;
                for (i, (arity, positions)) in spec.arities().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{arity}:")?;
                    for (j, p) in positions.iter().enumerate() {
                        if j > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{p}")?;
                    }
                }
                write!(f, ")")
            }
            PointSetExpr::ShiftedCopy { base, m, h, n, k } => {
                write!(f, "copy({base},{m},{h},{n},{k})")
            }
        }
    }
}
