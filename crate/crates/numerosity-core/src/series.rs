//! Truncated formal power series with exact integer coefficients.
//!
//! A [`TruncationWindow`] is a finite view of the ring of bounded series in
//! countably many indeterminates: a finite variable support together with a
//! per-variable exponent cap. Per-variable caps (rather than a total-degree
//! cap) make the window of a product closed exactly: a product coefficient
//! at `t^a` depends only on monomials dividing `t^a`.
//!
//! The characteristic series of a point set `X` is `S_X = Σ_{x∈X} t_x`; its
//! laws (`S_X+S_Y = S_{X∪Y}+S_{X∩Y}`, `S_X−S_Y = S_{X∖Y}`,
//! `S_X·S_Y = S_{X×Y}` for multipliable pairs) hold coefficient-exactly at
//! window scale. A series with non-negative coefficients is characteristic
//! iff each coefficient is at most the number of tuples realizing its
//! monomial.
//!
//! Evaluation at the 0–1 assignment `x_F` yields the counting map:
//! `S_X(x_F) = |X_F|`. Inclusion–exclusion over the subset lattice inverts
//! it; the kernel of the counting map at window scale consists of the
//! series whose squarefree projection vanishes.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::combinatorics::{CombinatoricsError, FiniteSupport, Monomial};
use crate::pointset::{PointSetExpr, ValidationError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("window mismatch: {left} vs {right}")]
    WindowMismatch { left: String, right: String },
    #[error("monomial {monomial} lies outside the window {window}")]
    OutsideWindow { monomial: String, window: String },
    #[error("variable t{var} is outside the window support")]
    VariableOutsideWindow { var: u64 },
    #[error("degree cap must be at least 1")]
    ZeroDegreeCap,
    #[error("assignment value for t{var} is negative")]
    NegativeAssignment { var: u64 },
    #[error("negative coefficient at {monomial}")]
    NegativeCoefficient { monomial: String },
    #[error("missing bound certificate")]
    MissingBound,
    #[error("coefficient at {monomial} violates the bound certificate b={bound}")]
    BoundViolated { monomial: String, bound: BigUint },
    #[error("missing value for subset {subset}")]
    MissingSubsetValue { subset: FiniteSupport },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

/// A finite truncation: variable support plus per-variable exponent cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationWindow {
    support: FiniteSupport,
    degree_cap: u32,
}

impl TruncationWindow {
    pub fn new(support: FiniteSupport, degree_cap: u32) -> Result<Self, SeriesError> {
        if degree_cap == 0 {
            return Err(SeriesError::ZeroDegreeCap);
        }
        Ok(TruncationWindow { support, degree_cap })
    }

    pub fn support(&self) -> &FiniteSupport {
        &self.support
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn admits(&self, monomial: &Monomial) -> bool {
        monomial.support().is_subset_of(&self.support)
            && monomial.max_exponent() <= self.degree_cap
    }
}

impl fmt::Display for TruncationWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, cap {})", self.support, self.degree_cap)
    }
}

/// A finite-support assignment of non-negative rationals to variables;
/// variables outside the map read 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    values: BTreeMap<u64, BigRational>,
}

impl Assignment {
    pub fn new(values: BTreeMap<u64, BigRational>) -> Result<Self, SeriesError> {
        for (&var, v) in &values {
            if v.is_negative() {
                return Err(SeriesError::NegativeAssignment { var });
            }
        }
        Ok(Assignment { values })
    }

    /// The 0–1 assignment `x_F`: 1 exactly on the members of `F`.
    pub fn indicator(support: &FiniteSupport) -> Self {
        Assignment {
            values: support.iter().map(|v| (v, BigRational::one())).collect(),
        }
    }

    pub fn support(&self) -> FiniteSupport {
        FiniteSupport::from_iter(self.values.keys().copied())
    }

    pub fn value(&self, var: u64) -> BigRational {
        self.values.get(&var).cloned().unwrap_or_else(BigRational::zero)
    }
}

/// An integer-coefficient series truncated to a window, with an optional
/// membership certificate `b`: `|n_a| ≤ b·(Σa_i)!/∏a_i!` for every
/// coefficient.
///
/// Equality is window plus coefficients; the certificate is metadata and
/// does not distinguish series.
#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    window: TruncationWindow,
    coeffs: BTreeMap<Monomial, BigInt>,
    bound_b: Option<BigUint>,
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.window == other.window && self.coeffs == other.coeffs
    }
}

impl Eq for TruncatedSeries {}

impl TruncatedSeries {
    pub fn zero(window: TruncationWindow) -> Self {
        TruncatedSeries {
            window,
            coeffs: BTreeMap::new(),
            bound_b: None,
        }
    }

    pub fn from_coeffs(
        window: TruncationWindow,
        coeffs: BTreeMap<Monomial, BigInt>,
    ) -> Result<Self, SeriesError> {
        for monomial in coeffs.keys() {
            if !window.admits(monomial) {
                return Err(SeriesError::OutsideWindow {
                    monomial: alloc::format!("{monomial}"),
                    window: alloc::format!("{window}"),
                });
            }
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(TruncatedSeries {
            window,
            coeffs,
            bound_b: None,
        })
    }

    /// Attaches a verified bound certificate.
    pub fn with_bound(mut self, bound: BigUint) -> Result<Self, SeriesError> {
        for (monomial, coeff) in &self.coeffs {
            if coeff.magnitude() > &(&bound * monomial.bound_weight()) {
                return Err(SeriesError::BoundViolated {
                    monomial: alloc::format!("{monomial}"),
                    bound,
                });
            }
        }
        self.bound_b = Some(bound);
        Ok(self)
    }

    /// The least valid certificate: `max_a ⌈|n_a| / weight(a)⌉` (and at
    /// least 1, certificates being positive).
    pub fn tightest_bound(&self) -> BigUint {
        let mut best = BigUint::one();
        for (monomial, coeff) in &self.coeffs {
            let weight = monomial.bound_weight();
            let need = (coeff.magnitude() + &weight - BigUint::one()) / &weight;
            best = best.max(need);
        }
        best
    }

    pub fn window(&self) -> &TruncationWindow {
        &self.window
    }

    pub fn bound(&self) -> Option<&BigUint> {
        self.bound_b.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> BigInt {
        self.coeffs.get(monomial).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// The characteristic series of `X` at the window: the coefficient of
    /// `t^a` counts the tuples of `X` restricted to the window support whose
    /// monomial is `t^a`; monomials beyond the cap are dropped. The empty
    /// set yields the zero series. Characteristic series satisfy the bound
    /// certificate with `b = 1`.
    pub fn characteristic(
        expr: &PointSetExpr,
        window: TruncationWindow,
    ) -> Result<Self, SeriesError> {
        let restricted = expr.restrict(window.support())?;
        let mut coeffs: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for tuple in restricted.iter() {
            let monomial = Monomial::of_tuple(tuple);
            if monomial.max_exponent() <= window.degree_cap() {
                *coeffs.entry(monomial).or_insert_with(BigInt::zero) += 1;
            }
        }
        TruncatedSeries::from_coeffs(window, coeffs)?.with_bound(BigUint::one())
    }

    fn require_same_window(&self, other: &TruncatedSeries) -> Result<(), SeriesError> {
        if self.window != other.window {
            return Err(SeriesError::WindowMismatch {
                left: alloc::format!("{}", self.window),
                right: alloc::format!("{}", other.window),
            });
        }
        Ok(())
    }

    /// Coefficient-wise sum; windows must be identical. Bound certificates
    /// add when both operands carry one.
    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.require_same_window(other)?;
        let mut coeffs = self.coeffs.clone();
        for (monomial, coeff) in &other.coeffs {
            let entry = coeffs.entry(monomial.clone()).or_insert_with(BigInt::zero);
            *entry += coeff;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(TruncatedSeries {
            window: self.window.clone(),
            coeffs,
            bound_b: match (&self.bound_b, &other.bound_b) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            },
        })
    }

    /// Coefficient-wise difference; windows must be identical.
    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.require_same_window(other)?;
        let mut coeffs = self.coeffs.clone();
        for (monomial, coeff) in &other.coeffs {
            let entry = coeffs.entry(monomial.clone()).or_insert_with(BigInt::zero);
            *entry -= coeff;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(TruncatedSeries {
            window: self.window.clone(),
            coeffs,
            bound_b: match (&self.bound_b, &other.bound_b) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            },
        })
    }

    /// Convolution product. Supports must agree; the result cap is the sum
    /// of the operand caps, which makes the truncation exact: a coefficient
    /// at `t^a` only receives contributions from divisors of `t^a`.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        if self.window.support() != other.window.support() {
            return Err(SeriesError::WindowMismatch {
                left: alloc::format!("{}", self.window),
                right: alloc::format!("{}", other.window),
            });
        }
        let window = TruncationWindow::new(
            self.window.support().clone(),
            self.window.degree_cap() + other.window.degree_cap(),
        )?;
        let mut coeffs: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.coeffs {
            for (mb, cb) in &other.coeffs {
                let entry = coeffs.entry(ma.mul(mb)).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        let product = TruncatedSeries {
            window,
            coeffs,
            bound_b: None,
        };
        let bound = product.tightest_bound();
        product.with_bound(bound)
    }

    /// Exact rational value `Σ_a n_a ∏ v(i)^{a_i}`; the assignment may only
    /// mention window variables.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<BigRational, SeriesError> {
        for var in assignment.support().iter() {
            if !self.window.support().contains(var) {
                return Err(SeriesError::VariableOutsideWindow { var });
            }
        }
        let mut total = BigRational::zero();
        'monomials: for (monomial, coeff) in &self.coeffs {
            let mut term = BigRational::from(coeff.clone());
            for (var, exp) in monomial.exponents() {
                let value = assignment.value(var);
                if value.is_zero() {
                    continue 'monomials;
                }
                term *= value.pow(exp as i32);
            }
            total += term;
        }
        Ok(total)
    }

    /// Integer value at the 0–1 assignment `x_F`: the sum of the
    /// coefficients of the monomials supported inside `F`.
    pub fn eval_indicator(&self, f: &FiniteSupport) -> Result<BigInt, SeriesError> {
        for var in f.iter() {
            if !self.window.support().contains(var) {
                return Err(SeriesError::VariableOutsideWindow { var });
            }
        }
        let mut total = BigInt::zero();
        for (monomial, coeff) in &self.coeffs {
            if monomial.support().is_subset_of(f) {
                total += coeff;
            }
        }
        Ok(total)
    }

    /// The associated squarefree series: each monomial is replaced by the
    /// squarefree monomial on its support and coefficients are summed. The
    /// result lives in the degree-cap-1 window on the same support.
    pub fn squarefree(&self) -> TruncatedSeries {
        let mut coeffs: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (monomial, coeff) in &self.coeffs {
            let entry = coeffs
                .entry(monomial.squarefree())
                .or_insert_with(BigInt::zero);
            *entry += coeff;
        }
        coeffs.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            window: TruncationWindow {
                support: self.window.support().clone(),
                degree_cap: 1,
            },
            coeffs,
            bound_b: None,
        }
    }

    /// True iff the series is realizable as `S_X` for some point set: all
    /// coefficients non-negative and at most the tuple count of their
    /// monomial (a nonzero constant term is never realizable, tuples being
    /// nonempty).
    pub fn is_characteristic(&self) -> bool {
        self.coeffs.iter().all(|(monomial, coeff)| {
            !coeff.is_negative() && coeff.magnitude() <= &monomial.char_capacity()
        })
    }

    /// Splits a non-negative series into a constant plus at most `b`
    /// characteristic layers, by greedy capacity filling: layer `i` takes
    /// `min(remaining, capacity)` of every monomial.
    pub fn decompose_positive(&self) -> Result<(BigUint, Vec<TruncatedSeries>), SeriesError> {
        let bound = self.bound_b.clone().ok_or(SeriesError::MissingBound)?;
        for (monomial, coeff) in &self.coeffs {
            if coeff.is_negative() {
                return Err(SeriesError::NegativeCoefficient {
                    monomial: alloc::format!("{monomial}"),
                });
            }
        }
        let constant = self.coefficient(&Monomial::one()).magnitude().clone();
        let mut remaining: BTreeMap<Monomial, BigUint> = self
            .coeffs
            .iter()
            .filter(|(m, _)| !m.is_constant())
            .map(|(m, c)| (m.clone(), c.magnitude().clone()))
            .collect();
        let mut layers = Vec::new();
        while remaining.values().any(|r| !r.is_zero()) {
            let mut layer: BTreeMap<Monomial, BigInt> = BTreeMap::new();
            for (monomial, rem) in remaining.iter_mut() {
                if rem.is_zero() {
                    continue;
                }
                let take = monomial.char_capacity().min(rem.clone());
                *rem -= &take;
                layer.insert(monomial.clone(), BigInt::from(take));
            }
            layers.push(
                TruncatedSeries::from_coeffs(self.window.clone(), layer)?
                    .with_bound(BigUint::one())?,
            );
        }
        if BigUint::from(layers.len()) > bound {
            // more layers than the certificate allows: the certificate lied
            return Err(SeriesError::BoundViolated {
                monomial: String::new(),
                bound,
            });
        }
        Ok((constant, layers))
    }

    /// Membership in the ideal generated by `{t_n − 1 : n ∈ support}` within
    /// the polynomial ring on the window variables: the kernel of evaluation
    /// at all-ones, i.e. a vanishing coefficient sum.
    pub fn in_i0_poly(&self) -> bool {
        let total: BigInt = self.coeffs.values().sum();
        total.is_zero()
    }

    /// Window-level membership in the kernel of the counting map: the
    /// squarefree projection vanishes, equivalently `S(x_F) = 0` for every
    /// `F` inside the window support. Both characterizations are evaluated
    /// when the support is small enough to enumerate.
    pub fn in_i1_window(&self) -> bool {
        let squarefree_zero = self.squarefree().is_zero();
        if let Ok(subsets) = self.window.support().subsets() {
            let mut all_zero = true;
            for f in subsets {
                if !self.eval_indicator(&f).expect("subset of support").is_zero() {
                    all_zero = false;
                    break;
                }
            }
            return squarefree_zero && all_zero;
        }
        squarefree_zero
    }

    /// Parses the canonical text form, inferring the smallest window that
    /// admits every monomial.
    pub fn parse(text: &str) -> Result<TruncatedSeries, SeriesError> {
        let coeffs = text::parse_terms(text)?;
        let mut support = FiniteSupport::empty();
        let mut cap = 1;
        for monomial in coeffs.keys() {
            support = support.union(&monomial.support());
            cap = cap.max(monomial.max_exponent());
        }
        TruncatedSeries::from_coeffs(TruncationWindow::new(support, cap)?, coeffs)
    }

    /// Parses the canonical text form into the given window.
    pub fn parse_in_window(
        text: &str,
        window: TruncationWindow,
    ) -> Result<TruncatedSeries, SeriesError> {
        TruncatedSeries::from_coeffs(window, text::parse_terms(text)?)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (monomial, coeff)) in self.coeffs.iter().enumerate() {
            let negative = coeff.sign() == Sign::Minus;
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = coeff.magnitude();
            if monomial.is_constant() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{monomial}")?;
            } else {
                write!(f, "{magnitude}*{monomial}")?;
            }
        }
        Ok(())
    }
}

/// Inclusion–exclusion inversion on the subset lattice of `F`:
/// `n_E = Σ_{E'⊆E} (−1)^{|E∖E'|} g(E')`. The zeta transform
/// [`subset_sums`] is its exact inverse.
pub fn mobius_invert(
    g: &BTreeMap<FiniteSupport, BigInt>,
    f: &FiniteSupport,
) -> Result<BTreeMap<FiniteSupport, BigInt>, SeriesError> {
    lattice_transform(g, f, true)
}

/// Subset summation (the zeta transform): `g(E) = Σ_{E'⊆E} n_{E'}`.
pub fn subset_sums(
    n: &BTreeMap<FiniteSupport, BigInt>,
    f: &FiniteSupport,
) -> Result<BTreeMap<FiniteSupport, BigInt>, SeriesError> {
    lattice_transform(n, f, false)
}

fn lattice_transform(
    input: &BTreeMap<FiniteSupport, BigInt>,
    f: &FiniteSupport,
    invert: bool,
) -> Result<BTreeMap<FiniteSupport, BigInt>, SeriesError> {
    let subsets: Vec<FiniteSupport> = f.subsets()?.collect();
    let elems = f.elements();
    let n = elems.len();
    // bitmask-indexed table; bit i stands for elems[i]
    let mut table: Vec<BigInt> = Vec::with_capacity(1 << n);
    for mask in 0..(1usize << n) {
        let subset = support_of_mask(elems, mask);
        let value = input
            .get(&subset)
            .cloned()
            .ok_or(SeriesError::MissingSubsetValue { subset })?;
        table.push(value);
    }
    for bit in 0..n {
        let b = 1usize << bit;
        for mask in 0..(1usize << n) {
            if mask & b != 0 {
                let lower = table[mask ^ b].clone();
                if invert {
                    table[mask] -= lower;
                } else {
                    table[mask] += lower;
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    for subset in subsets {
        let mask = mask_of_support(elems, &subset);
        out.insert(subset, table[mask].clone());
    }
    Ok(out)
}

fn support_of_mask(elems: &[u64], mask: usize) -> FiniteSupport {
    FiniteSupport::from_iter(
        elems
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e),
    )
}

fn mask_of_support(elems: &[u64], subset: &FiniteSupport) -> usize {
    let mut mask = 0usize;
    for (i, &e) in elems.iter().enumerate() {
        if subset.contains(e) {
            mask |= 1 << i;
        }
    }
    mask
}

mod text {
    //! Parser for the canonical series text form:
    //! terms `coef*t<i>^<e>*…` joined by `+`/`-`, e.g. `t0^2 - 2*t0*t1 + 3`.

    use super::*;

    struct Cursor<'a> {
        bytes: &'a [u8],
        pos: usize,
    }

    impl<'a> Cursor<'a> {
        fn skip_ws(&mut self) {
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }

        fn peek(&self) -> Option<u8> {
            self.bytes.get(self.pos).copied()
        }

        fn error(&self, msg: &str) -> SeriesError {
            SeriesError::Parse {
                pos: self.pos,
                msg: String::from(msg),
            }
        }

        fn integer(&mut self) -> Result<u64, SeriesError> {
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if self.pos == start {
                return Err(self.error("expected an integer"));
            }
            core::str::from_utf8(&self.bytes[start..self.pos])
                .ok()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| self.error("integer out of range"))
        }

        fn big_integer(&mut self) -> Result<BigUint, SeriesError> {
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if self.pos == start {
                return Err(self.error("expected an integer"));
            }
            core::str::from_utf8(&self.bytes[start..self.pos])
                .ok()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| self.error("malformed integer"))
        }
    }

    pub(super) fn parse_terms(input: &str) -> Result<BTreeMap<Monomial, BigInt>, SeriesError> {
        let mut cur = Cursor {
            bytes: input.as_bytes(),
            pos: 0,
        };
        let mut coeffs: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        cur.skip_ws();
        if cur.peek().is_none() {
            return Err(cur.error("empty series text"));
        }
        let mut negative = false;
        if cur.peek() == Some(b'-') {
            negative = true;
            cur.pos += 1;
        }
        loop {
            cur.skip_ws();
            let (monomial, magnitude) = term(&mut cur)?;
            let mut value = BigInt::from(magnitude);
            if negative {
                value = -value;
            }
            let entry = coeffs.entry(monomial).or_insert_with(BigInt::zero);
            *entry += value;
            cur.skip_ws();
            match cur.peek() {
                None => break,
                Some(b'+') => {
                    negative = false;
                    cur.pos += 1;
                }
                Some(b'-') => {
                    negative = true;
                    cur.pos += 1;
                }
                Some(_) => return Err(cur.error("expected '+', '-' or end of input")),
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(coeffs)
    }

    /// `term := int ('*' factors)? | factors`; a bare integer is a constant
    /// term, `0` included (it cancels to nothing).
    fn term(cur: &mut Cursor<'_>) -> Result<(Monomial, BigUint), SeriesError> {
        cur.skip_ws();
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coefficient = cur.big_integer()?;
                cur.skip_ws();
                if cur.peek() == Some(b'*') {
                    cur.pos += 1;
                    let monomial = factors(cur)?;
                    Ok((monomial, coefficient))
                } else {
                    Ok((Monomial::one(), coefficient))
                }
            }
            Some(b't') => Ok((factors(cur)?, BigUint::one())),
            _ => Err(cur.error("expected a coefficient or a variable")),
        }
    }

    /// `factors := 't' int ('^' int)? ('*' 't' int ('^' int)?)*`
    fn factors(cur: &mut Cursor<'_>) -> Result<Monomial, SeriesError> {
        let mut pairs: Vec<(u64, u32)> = Vec::new();
        loop {
            cur.skip_ws();
            if cur.peek() != Some(b't') {
                return Err(cur.error("expected a variable like t3"));
            }
            cur.pos += 1;
            let var = cur.integer()?;
            let mut exp = 1u32;
            if cur.peek() == Some(b'^') {
                cur.pos += 1;
                let e = cur.integer()?;
                exp = u32::try_from(e).map_err(|_| cur.error("exponent out of range"))?;
                if exp == 0 {
                    return Err(cur.error("exponents in canonical form are positive"));
                }
            }
            pairs.push((var, exp));
            cur.skip_ws();
            if cur.peek() == Some(b'*') {
                cur.pos += 1;
            } else {
                break;
            }
        }
        Ok(Monomial::from_pairs(pairs))
    }
}
