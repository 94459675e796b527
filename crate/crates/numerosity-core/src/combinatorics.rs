//! Tuples, finite supports, monomials, and the exact multiplicity
//! combinatorics shared by every other module.
//!
//! A tuple `x = (x_1, …, x_k)` over ℕ is mapped to the monomial
//! `t_x = ∏ t_i^{a_i}` where `a_i` counts the occurrences of `i` in `x`.
//! The number of distinct tuples realizing a given monomial is the
//! multinomial `k!/∏ a_i!`; it bounds every characteristic-series
//! coefficient, so it is computed with arbitrary-precision integers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

/// Default cap on `|F|` for power-set enumeration (2^|F| subsets).
pub const SUBSET_ENUM_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("no tuple has length zero")]
    ZeroDegree,
    #[error("support too large for subset enumeration ({len} > {limit})")]
    SupportTooLarge { len: usize, limit: usize },
    #[error("a tuple must have at least one entry")]
    EmptyTuple,
}

/// A finite ordered sequence of naturals, length ≥ 1.
///
/// Tuples are ordered length-first, then lexicographically; this is the
/// canonical order used for every materialized point set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tuple {
    entries: Vec<u64>,
}

impl Tuple {
    pub fn new(entries: Vec<u64>) -> Result<Self, CombinatoricsError> {
        if entries.is_empty() {
            return Err(CombinatoricsError::EmptyTuple);
        }
        Ok(Tuple { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length ≥ 1 by construction
    }

    /// Concatenation, identifying `A×B` with tuple concatenation.
    pub fn concat(&self, other: &Tuple) -> Tuple {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Tuple { entries }
    }

    /// True iff every entry lies in `support`.
    pub fn supported_by(&self, support: &FiniteSupport) -> bool {
        self.entries.iter().all(|e| support.contains(*e))
    }

    /// The set of distinct entries.
    pub fn support(&self) -> FiniteSupport {
        FiniteSupport::from_iter(self.entries.iter().copied())
    }
}

impl PartialOrd for Tuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tuple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A finite set of naturals in canonical form: sorted ascending, no
/// duplicates. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FiniteSupport {
    elements: Vec<u64>,
}

impl FiniteSupport {
    pub fn empty() -> Self {
        FiniteSupport::default()
    }

    /// The initial segment `{0, …, n}`.
    pub fn initial_segment(n: u64) -> Self {
        FiniteSupport {
            elements: (0..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, value: u64) -> bool {
        self.elements.binary_search(&value).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().copied()
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn max_element(&self) -> Option<u64> {
        self.elements.last().copied()
    }

    pub fn is_subset_of(&self, other: &FiniteSupport) -> bool {
        self.elements.iter().all(|e| other.contains(*e))
    }

    pub fn union(&self, other: &FiniteSupport) -> FiniteSupport {
        FiniteSupport::from_iter(self.iter().chain(other.iter()))
    }

    pub fn insert(&mut self, value: u64) {
        if let Err(pos) = self.elements.binary_search(&value) {
            self.elements.insert(pos, value);
        }
    }

    /// All `2^|F|` subsets exactly once, ordered by size then
    /// lexicographically, under the default enumeration limit.
    pub fn subsets(&self) -> Result<SubsetIter<'_>, CombinatoricsError> {
        self.subsets_with_limit(SUBSET_ENUM_LIMIT)
    }

    pub fn subsets_with_limit(&self, limit: usize) -> Result<SubsetIter<'_>, CombinatoricsError> {
        if self.len() > limit {
            return Err(CombinatoricsError::SupportTooLarge {
                len: self.len(),
                limit,
            });
        }
        Ok(SubsetIter {
            elements: &self.elements,
            size: 0,
            indices: Vec::new(),
            done: false,
        })
    }
}

impl FromIterator<u64> for FiniteSupport {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let mut elements: Vec<u64> = iter.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        FiniteSupport { elements }
    }
}

impl fmt::Display for FiniteSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Enumerates subsets by size, lexicographically within each size.
pub struct SubsetIter<'a> {
    elements: &'a [u64],
    size: usize,
    indices: Vec<usize>,
    done: bool,
}

impl<'a> Iterator for SubsetIter<'a> {
    type Item = FiniteSupport;

    fn next(&mut self) -> Option<FiniteSupport> {
        if self.done {
            return None;
        }
        if self.size == 0 {
            self.size = 1;
            self.indices = (0..1.min(self.elements.len())).collect();
            if self.elements.is_empty() {
                self.done = true;
            }
            return Some(FiniteSupport::empty());
        }
        if self.size > self.elements.len() {
            self.done = true;
            return None;
        }
        let n = self.elements.len();
        let k = self.size;
        let subset = FiniteSupport {
            elements: self.indices.iter().map(|&i| self.elements[i]).collect(),
        };
        // advance to the next k-combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                // exhausted size k, move to size k+1
                self.size += 1;
                self.indices = (0..self.size.min(n)).collect();
                if self.size > n {
                    self.done = true;
                }
                break;
            }
            i -= 1;
            if self.indices[i] < n - (k - i) {
                self.indices[i] += 1;
                for j in i + 1..k {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
                break;
            }
        }
        Some(subset)
    }
}

/// An exponent vector with finite support: a sparse map variable → positive
/// exponent. The constant monomial is the empty map.
///
/// Ordering is (degree, support, exponents), the canonical monomial order
/// used by series text form and coefficient maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exponents: BTreeMap<u64, u32>,
}

impl Monomial {
    /// The constant monomial `1`.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Builds from (variable, exponent) pairs; zero exponents are dropped,
    /// duplicate variables accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u32)>>(pairs: I) -> Self {
        let mut exponents: BTreeMap<u64, u32> = BTreeMap::new();
        for (var, exp) in pairs {
            if exp > 0 {
                *exponents.entry(var).or_insert(0) += exp;
            }
        }
        Monomial { exponents }
    }

    /// The monomial `t_x` of a tuple: exponent of `i` = occurrences of `i`.
    pub fn of_tuple(tuple: &Tuple) -> Self {
        Monomial::from_pairs(tuple.entries().iter().map(|&e| (e, 1)))
    }

    pub fn is_constant(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exponents.values().map(|&e| u64::from(e)).sum()
    }

    pub fn exponent(&self, var: u64) -> u32 {
        self.exponents.get(&var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.exponents.iter().map(|(&v, &e)| (v, e))
    }

    pub fn support(&self) -> FiniteSupport {
        FiniteSupport::from_iter(self.exponents.keys().copied())
    }

    pub fn max_exponent(&self) -> u32 {
        self.exponents.values().copied().max().unwrap_or(0)
    }

    /// Exponent-wise product `t^a · t^b = t^{a+b}`.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (&var, &exp) in &other.exponents {
            *exponents.entry(var).or_insert(0) += exp;
        }
        Monomial { exponents }
    }

    /// The squarefree projection `t^a ↦ t_{supp(a)}`: all exponents become 1.
    pub fn squarefree(&self) -> Monomial {
        Monomial {
            exponents: self.exponents.keys().map(|&v| (v, 1)).collect(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.values().all(|&e| e == 1)
    }

    /// The squarefree monomial `t_F = ∏_{n∈F} t_n`.
    pub fn indicator(support: &FiniteSupport) -> Monomial {
        Monomial {
            exponents: support.iter().map(|v| (v, 1)).collect(),
        }
    }

    /// Number of distinct tuples `x` with `t_x` equal to this monomial:
    /// the multinomial `k!/∏ a_i!` with `k` the degree.
    ///
    /// The constant monomial is an error: no tuple has length zero.
    pub fn tuple_count(&self) -> Result<BigUint, CombinatoricsError> {
        if self.is_constant() {
            return Err(CombinatoricsError::ZeroDegree);
        }
        // ∏_i C(s_i, a_i) with s_i the running sum of exponents equals
        // k!/∏ a_i! without any intermediate factorial blowup.
        let mut count = BigUint::one();
        let mut placed: u64 = 0;
        for &exp in self.exponents.values() {
            placed += u64::from(exp);
            count *= num_integer::binomial(BigUint::from(placed), BigUint::from(u64::from(exp)));
        }
        Ok(count)
    }

    /// Capacity of this monomial in a characteristic series: `tuple_count`
    /// for positive degree, zero for the constant (no set realizes a
    /// constant term because tuples are nonempty).
    pub fn char_capacity(&self) -> BigUint {
        if self.is_constant() {
            BigUint::ZERO
        } else {
            self.tuple_count().expect("nonconstant monomial")
        }
    }

    /// Weight `(Σ a_i)!/∏ a_i!` used by the coefficient-bound certificate;
    /// the constant monomial weighs 1 (`0! = 1`).
    pub fn bound_weight(&self) -> BigUint {
        if self.is_constant() {
            BigUint::one()
        } else {
            self.tuple_count().expect("nonconstant monomial")
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| {
                let lhs: Vec<u64> = self.exponents.keys().copied().collect();
                let rhs: Vec<u64> = other.exponents.keys().copied().collect();
                lhs.cmp(&rhs)
            })
            .then_with(|| {
                let lhs: Vec<u32> = self.exponents.values().copied().collect();
                let rhs: Vec<u32> = other.exponents.values().copied().collect();
                lhs.cmp(&rhs)
            })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        for (i, (&var, &exp)) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if exp == 1 {
                write!(f, "t{var}")?;
            } else {
                write!(f, "t{var}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// All tuples of length `len` over the given support, in canonical order.
/// Intended for desk-scale brute force; `|support|^len` tuples.
pub fn tuples_over(support: &FiniteSupport, len: usize) -> Vec<Tuple> {
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    let elems = support.elements();
    if elems.is_empty() {
        return out;
    }
    let mut idx = alloc::vec![0usize; len];
    loop {
        out.push(Tuple {
            entries: idx.iter().map(|&i| elems[i]).collect(),
        });
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] + 1 < elems.len() {
                idx[pos] += 1;
                for slot in idx.iter_mut().skip(pos + 1) {
                    *slot = 0;
                }
                break;
            }
        }
    }
}
