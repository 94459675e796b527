//! Executable checks for the Euclidean principles, over explicit operands.
//!
//! Each check produces an [`AxiomReport`] with a three-way verdict: `Pass`,
//! `Fail` with a concrete witness (a support, a chain index, or a tuple
//! collision), or `Undecided` when a comparison oracle cannot commit.
//! Precondition violations (non-disjoint summands, non-multipliable
//! factors, copies below the certificate bound) are errors, not verdicts.
//!
//! Two scales are involved: comparisons run along a chain up to
//! `horizon`, while the exhaustive "for every F" assertions (unit and
//! transformation principles, copy disjointness) enumerate all subsets of
//! `{0..subset_max}`. Trichotomy is checked as "at most one outcome,
//! undecided only on oscillating differences": a total trichotomy needs a
//! genuine ultrafilter, which no terminating oracle provides.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::combinatorics::{CombinatoricsError, FiniteSupport, Tuple};
use crate::counting::{Chain, CountingError};
use crate::numerosity::{Comparison, Numerosity, NumerosityError, UltrafilterOracle};
use crate::pointset::{FinitePointSet, PermutationSpec, PointSetExpr, ValidationError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AxiomError {
    #[error("summands are not disjoint on {at}")]
    NotDisjoint { at: FiniteSupport },
    #[error("inclusion fails on {at}")]
    NotIncluded { at: FiniteSupport },
    #[error("copy exponents h+k must reach {required} and m must differ from n")]
    CopyBelowBound { required: u32 },
    #[error(transparent)]
    Numerosity(#[from] NumerosityError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Counting(#[from] CountingError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}

/// Concrete evidence carried by a `Fail` verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Support(FiniteSupport),
    ChainIndex(usize),
    Collision(Tuple),
    Note(String),
}

impl core::fmt::Display for Witness {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Witness::Support(s) => write!(f, "F={s}"),
            Witness::ChainIndex(k) => write!(f, "k={k}"),
            Witness::Collision(t) => write!(f, "collision {t}"),
            Witness::Note(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
    Undecided,
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(w) => write!(f, "fail({w})"),
            Verdict::Undecided => write!(f, "undecided"),
        }
    }
}

/// Outcome of one principle check. `millis` is filled in by the harness
/// runner; the checks themselves do not measure time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: &'static str,
    pub operands: Vec<String>,
    pub horizon: usize,
    pub verdict: Verdict,
    pub millis: u64,
}

impl AxiomReport {
    fn new(axiom: &'static str, operands: Vec<String>, horizon: usize, verdict: Verdict) -> Self {
        AxiomReport {
            axiom,
            operands,
            horizon,
            verdict,
        millis: 0,
        }
    }
}

/// Scales shared by all checks.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    /// Chain for comparisons.
    pub chain: Chain,
    /// Last chain index used in comparisons.
    pub horizon: usize,
    /// Exhaustive subset assertions range over all `F ⊆ {0..subset_max}`.
    pub subset_max: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            chain: Chain::identity(),
            horizon: 64,
            subset_max: 8,
        }
    }
}

impl CheckConfig {
    fn numerosity(&self, expr: &PointSetExpr) -> Result<Numerosity, AxiomError> {
        Ok(Numerosity::of(expr, &self.chain, self.horizon)?)
    }

    fn subsets(&self) -> Result<Vec<FiniteSupport>, AxiomError> {
        Ok(FiniteSupport::initial_segment(self.subset_max)
            .subsets()?
            .collect())
    }
}

fn first_divergence(a: &Numerosity, b: &Numerosity) -> usize {
    a.sequence()
        .iter()
        .zip(b.sequence())
        .position(|(x, y)| x != y)
        .unwrap_or(0)
}

/// `A ≈ B ⇔ A∖B ≈ B∖A`: the two comparisons must agree whenever both are
/// decided.
pub fn check_ap(
    x: &PointSetExpr,
    y: &PointSetExpr,
    oracle: &dyn UltrafilterOracle,
    config: &CheckConfig,
) -> Result<AxiomReport, AxiomError> {
    let operands = alloc::vec![x.to_string(), y.to_string()];
    let nx = config.numerosity(x)?;
    let ny = config.numerosity(y)?;
    let nxy = config.numerosity(&PointSetExpr::difference(x.clone(), y.clone()))?;
    let nyx = config.numerosity(&PointSetExpr::difference(y.clone(), x.clone()))?;
    let whole = nx.compare(&ny, oracle)?;
    let parts = nxy.compare(&nyx, oracle)?;
    let verdict = match (whole.relation, parts.relation) {
        (Comparison::Undecided, _) | (_, Comparison::Undecided) => Verdict::Undecided,
        (a, b) if a == b => Verdict::Pass,
        _ => {
            // the two difference sequences are identical in theory;
            // disagreement pinpoints where they diverge
            let d1 = nx.difference(&ny)?;
            let d2 = nxy.difference(&nyx)?;
            let k = d1.iter().zip(&d2).position(|(a, b)| a != b).unwrap_or(0);
            Verdict::Fail(Witness::ChainIndex(k))
        }
    };
    Ok(AxiomReport::new("AP", operands, config.horizon, verdict))
}

/// Sum principle: disjoint `A,B` and `A',B'` with `A ≈ A'`, `B ≈ B'` give
/// `A∪B ≈ A'∪B'`. Disjointness is a precondition, verified on every `H_k`.
pub fn check_sp(
    a: &PointSetExpr,
    a2: &PointSetExpr,
    b: &PointSetExpr,
    b2: &PointSetExpr,
    oracle: &dyn UltrafilterOracle,
    config: &CheckConfig,
) -> Result<AxiomReport, AxiomError> {
    let operands = alloc::vec![
        a.to_string(),
        a2.to_string(),
        b.to_string(),
        b2.to_string(),
    ];
    for k in 0..=config.horizon {
        let f = config.chain.support_at(k);
        for (left, right) in [(a, b), (a2, b2)] {
            if !left.restrict(&f)?.is_disjoint(&right.restrict(&f)?) {
                return Err(AxiomError::NotDisjoint { at: f });
            }
        }
    }
    let premise_a = config.numerosity(a)?.compare(&config.numerosity(a2)?, oracle)?;
    let premise_b = config.numerosity(b)?.compare(&config.numerosity(b2)?, oracle)?;
    let verdict = match (premise_a.relation, premise_b.relation) {
        (Comparison::Undecided, _) | (_, Comparison::Undecided) => Verdict::Undecided,
        (Comparison::Equal, Comparison::Equal) => {
            let union = config.numerosity(&PointSetExpr::union(a.clone(), b.clone()))?;
            let union2 = config.numerosity(&PointSetExpr::union(a2.clone(), b2.clone()))?;
            match union.compare(&union2, oracle)?.relation {
                Comparison::Equal => Verdict::Pass,
                Comparison::Undecided => Verdict::Undecided,
                _ => Verdict::Fail(Witness::ChainIndex(first_divergence(&union, &union2))),
            }
        }
        // premises fail: the implication holds vacuously
        _ => Verdict::Pass,
    };
    Ok(AxiomReport::new("SP", operands, config.horizon, verdict))
}

/// Difference principle: `A ⊆ C`, `A' ⊆ C'`, `A ≈ A'`, `C ≈ C'` give
/// `C∖A ≈ C'∖A'`. Inclusion is a precondition, verified on every `H_k`.
pub fn check_dp(
    a: &PointSetExpr,
    a2: &PointSetExpr,
    c: &PointSetExpr,
    c2: &PointSetExpr,
    oracle: &dyn UltrafilterOracle,
    config: &CheckConfig,
) -> Result<AxiomReport, AxiomError> {
    let operands = alloc::vec![
        a.to_string(),
        a2.to_string(),
        c.to_string(),
        c2.to_string(),
    ];
    for k in 0..=config.horizon {
        let f = config.chain.support_at(k);
        for (small, big) in [(a, c), (a2, c2)] {
            let inside = big.restrict(&f)?;
            if !small.restrict(&f)?.iter().all(|t| inside.contains(t)) {
                return Err(AxiomError::NotIncluded { at: f });
            }
        }
    }
    let premise_a = config.numerosity(a)?.compare(&config.numerosity(a2)?, oracle)?;
    let premise_c = config.numerosity(c)?.compare(&config.numerosity(c2)?, oracle)?;
    let verdict = match (premise_a.relation, premise_c.relation) {
        (Comparison::Undecided, _) | (_, Comparison::Undecided) => Verdict::Undecided,
        (Comparison::Equal, Comparison::Equal) => {
            let rest = config.numerosity(&PointSetExpr::difference(c.clone(), a.clone()))?;
            let rest2 = config.numerosity(&PointSetExpr::difference(c2.clone(), a2.clone()))?;
            match rest.compare(&rest2, oracle)?.relation {
                Comparison::Equal => Verdict::Pass,
                Comparison::Undecided => Verdict::Undecided,
                _ => Verdict::Fail(Witness::ChainIndex(first_divergence(&rest, &rest2))),
            }
        }
        _ => Verdict::Pass,
    };
    Ok(AxiomReport::new("DP", operands, config.horizon, verdict))
}

/// Unit principle: `A×{(n)}` has exactly the counts of `A` on every `F`
/// containing `n` (and count 0 on every `F` missing `n`), plus Equal along
/// the chain once it contains `n`.
pub fn check_up(
    a: &PointSetExpr,
    n: u64,
    oracle: &dyn UltrafilterOracle,
    config: &CheckConfig,
) -> Result<AxiomReport, AxiomError> {
    let operands = alloc::vec![a.to_string(), format!("n={n}")];
    let unit = PointSetExpr::product(a.clone(), PointSetExpr::singleton(&[n]));
    for f in config.subsets()? {
        let with_unit = unit.restrict(&f)?.len();
        let expected = if f.contains(n) { a.restrict(&f)?.len() } else { 0 };
        if with_unit != expected {
            return Ok(AxiomReport::new(
                "UP",
                operands,
                config.horizon,
                Verdict::Fail(Witness::Support(f)),
            ));
        }
    }
    let verdict = match config
        .numerosity(&unit)?
        .compare(&config.numerosity(a)?, oracle)?
        .relation
    {
        Comparison::Equal => Verdict::Pass,
        Comparison::Undecided => Verdict::Undecided,
        _ => Verdict::Fail(Witness::ChainIndex(config.horizon)),
    };
    Ok(AxiomReport::new("UP", operands, config.horizon, verdict))
}

/// Transformation principle, in its support-preserving form: a per-arity
/// position permutation leaves every count `|X_F|` unchanged — exactly, for
/// every `F`, not merely eventually.
pub fn check_tp_np(
    x: &PointSetExpr,
    spec: &PermutationSpec,
    config: &CheckConfig,
) -> Result<AxiomReport, AxiomError> {
    let transformed = PointSetExpr::permute_transform(x.clone(), spec.clone())?;
    let operands = alloc::vec![x.to_string(), transformed.to_string()];
    for f in config.subsets()? {
        if transformed.restrict(&f)?.len() != x.restrict(&f)?.len() {
            return Ok(AxiomReport::new(
                "TP/NP",
                operands,
                config.horizon,
                Verdict::Fail(Witness::Support(f)),
            ));
        }
    }
    Ok(AxiomReport::new(
        "TP/NP",
        operands,
        config.horizon,
        Verdict::Pass,
    ))
}

/// Product principle: multipliable pairs with `X ≈ X'`, `Y ≈ Y'` give
/// `X×Y ≈ X'×Y'`. Non-multipliable operands are a precondition error
/// carrying the collision.
pub fn check_pp(
    x: &PointSetExpr,
    x2: &PointSetExpr,
    y: &PointSetExpr,
    y2: &PointSetExpr,
    oracle: &dyn UltrafilterOracle,
    config: &CheckConfig,
) -> Result<AxiomReport, AxiomError> {
    let operands = alloc::vec![
        x.to_string(),
        x2.to_string(),
        y.to_string(),
        y2.to_string(),
    ];
    let premise_x = config.numerosity(x)?.compare(&config.numerosity(x2)?, oracle)?;
    let premise_y = config.numerosity(y)?.compare(&config.numerosity(y2)?, oracle)?;
    // products go through Numerosity::mul, which enforces multipliability
    // on every H_k and surfaces collisions as errors
    let product = config.numerosity(x)?.mul(&config.numerosity(y)?)?;
    let product2 = config.numerosity(x2)?.mul(&config.numerosity(y2)?)?;
    let verdict = match (premise_x.relation, premise_y.relation) {
        (Comparison::Undecided, _) | (_, Comparison::Undecided) => Verdict::Undecided,
        (Comparison::Equal, Comparison::Equal) => {
            match product.compare(&product2, oracle)?.relation {
                Comparison::Equal => Verdict::Pass,
                Comparison::Undecided => Verdict::Undecided,
                _ => Verdict::Fail(Witness::ChainIndex(first_divergence(&product, &product2))),
            }
        }
        _ => Verdict::Pass,
    };
    Ok(AxiomReport::new("PP", operands, config.horizon, verdict))
}

/// Finite sets are equinumerous exactly when they have the same number of
/// elements, and every infinite catalog set exceeds every finite one.
/// Operand sets are drawn from a seeded generator for reproducibility.
pub fn check_finite_agreement(
    max_size: usize,
    seed: u64,
    oracle: &dyn UltrafilterOracle,
    config: &CheckConfig,
) -> Result<AxiomReport, AxiomError> {
    let operands = alloc::vec![format!("sizes ≤ {max_size}"), format!("seed {seed:#x}")];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets: Vec<FinitePointSet> = alloc::vec![FinitePointSet::empty()];
    for _ in 0..8 {
        let size = rng.gen_range(0..=max_size);
        let mut tuples = Vec::new();
        while tuples.len() < size {
            let arity = rng.gen_range(1..=3usize);
            let entries: Vec<u64> = (0..arity).map(|_| rng.gen_range(0..=8u64)).collect();
            let t = Tuple::new(entries).expect("arity ≥ 1");
            if !tuples.contains(&t) {
                tuples.push(t);
            }
        }
        sets.push(FinitePointSet::from_tuples(tuples));
    }
    for left in &sets {
        for right in &sets {
            let nl = config.numerosity(&PointSetExpr::Finite(left.clone()))?;
            let nr = config.numerosity(&PointSetExpr::Finite(right.clone()))?;
            let relation = nl.compare(&nr, oracle)?.relation;
            let expected = match left.len().cmp(&right.len()) {
                core::cmp::Ordering::Less => Comparison::Less,
                core::cmp::Ordering::Equal => Comparison::Equal,
                core::cmp::Ordering::Greater => Comparison::Greater,
            };
            if relation != expected {
                return Ok(AxiomReport::new(
                    "FIN",
                    operands,
                    config.horizon,
                    Verdict::Fail(Witness::Note(format!(
                        "|{left}| vs |{right}|: got {relation}, expected {expected}"
                    ))),
                ));
            }
        }
    }
    // every infinite catalog set strictly exceeds every finite set
    for (name, infinite) in crate::catalog::standard() {
        if matches!(infinite, PointSetExpr::Finite(_)) {
            continue;
        }
        let ninf = config.numerosity(&infinite)?;
        for set in &sets {
            if set.len() == 3 || set.is_empty() {
                let nfin = config.numerosity(&PointSetExpr::Finite(set.clone()))?;
                if nfin.compare(&ninf, oracle)?.relation != Comparison::Less {
                    return Ok(AxiomReport::new(
                        "FIN",
                        operands,
                        config.horizon,
                        Verdict::Fail(Witness::Note(format!("{set} not below {name}"))),
                    ));
                }
            }
        }
    }
    Ok(AxiomReport::new(
        "FIN",
        operands,
        config.horizon,
        Verdict::Pass,
    ))
}

/// Disjoint equinumerous copies `A×{m}^h×{n}^{k+i}`: with `m ≠ n` and
/// `h+k` past the certificate bound, the copies and `A` have pairwise
/// disjoint restrictions on every checked `F`, each copy counts exactly
/// like `A` on every `F ⊇ {m,n}`, and each compares Equal along the chain.
#[allow(clippy::too_many_arguments)]
pub fn check_copy(
    a: &PointSetExpr,
    m: u64,
    h: u32,
    n: u64,
    k: u32,
    copies: u32,
    oracle: &dyn UltrafilterOracle,
    config: &CheckConfig,
) -> Result<AxiomReport, AxiomError> {
    let operands = alloc::vec![
        a.to_string(),
        format!("m={m}"),
        format!("h={h}"),
        format!("n={n}"),
        format!("k={k}"),
        format!("copies={copies}"),
    ];
    a.validate()?;
    // restrictions of A over {0..subset_max} have length ≤ bound; a copy
    // tuple is strictly longer whenever h+k reaches it
    let required = a.bound(config.subset_max.max(m).max(n));
    if h + k < required || m == n || h == 0 {
        return Err(AxiomError::CopyBelowBound { required });
    }
    let copy_exprs: Vec<PointSetExpr> = (0..copies)
        .map(|i| PointSetExpr::shifted_copy(a.clone(), m, h, n, k + i))
        .collect();
    for f in config.subsets()? {
        let base = a.restrict(&f)?;
        let restricted: Vec<FinitePointSet> = copy_exprs
            .iter()
            .map(|c| c.restrict(&f))
            .collect::<Result<_, _>>()?;
        for (i, left) in restricted.iter().enumerate() {
            if !left.is_disjoint(&base) {
                return Ok(AxiomReport::new(
                    "COPY",
                    operands,
                    config.horizon,
                    Verdict::Fail(Witness::Support(f)),
                ));
            }
            for right in &restricted[i + 1..] {
                if !left.is_disjoint(right) {
                    return Ok(AxiomReport::new(
                        "COPY",
                        operands,
                        config.horizon,
                        Verdict::Fail(Witness::Support(f)),
                    ));
                }
            }
            let expected = if f.contains(m) && f.contains(n) {
                base.len()
            } else {
                0
            };
            if left.len() != expected {
                return Ok(AxiomReport::new(
                    "COPY",
                    operands,
                    config.horizon,
                    Verdict::Fail(Witness::Support(f)),
                ));
            }
        }
    }
    let na = config.numerosity(a)?;
    for copy in &copy_exprs {
        match config.numerosity(copy)?.compare(&na, oracle)?.relation {
            Comparison::Equal => {}
            Comparison::Undecided => {
                return Ok(AxiomReport::new(
                    "COPY",
                    operands,
                    config.horizon,
                    Verdict::Undecided,
                ))
            }
            _ => {
                return Ok(AxiomReport::new(
                    "COPY",
                    operands,
                    config.horizon,
                    Verdict::Fail(Witness::ChainIndex(config.horizon)),
                ))
            }
        }
    }
    Ok(AxiomReport::new(
        "COPY",
        operands,
        config.horizon,
        Verdict::Pass,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::numerosity::EventualSignOracle;
    use alloc::vec;

    fn oracle() -> EventualSignOracle {
        EventualSignOracle::default()
    }

    fn config() -> CheckConfig {
        CheckConfig::default()
    }

    #[test]
    fn ap_agreement() {
        // equal sets: both sides Equal
        let r = check_ap(&catalog::evens(), &catalog::evens(), &oracle(), &config()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        // strictly comparable: both sides non-Equal, same direction
        let r = check_ap(
            &PointSetExpr::FullSpace(2),
            &catalog::naturals(),
            &oracle(),
            &config(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        // decorated evens/odds: the comparison oscillates, honestly undecided
        let x = PointSetExpr::union(catalog::evens(), PointSetExpr::singleton(&[1]));
        let y = PointSetExpr::union(catalog::odds(), PointSetExpr::singleton(&[0]));
        let r = check_ap(&x, &y, &oracle(), &config()).unwrap();
        assert_eq!(r.verdict, Verdict::Undecided);
    }

    #[test]
    fn sp_and_dp() {
        // SP with shifted copies forcing disjointness
        let evens2 = PointSetExpr::shifted_copy(catalog::evens(), 0, 2, 1, 2);
        let odds2 = PointSetExpr::shifted_copy(catalog::odds(), 0, 3, 1, 3);
        let r = check_sp(
            &catalog::evens(),
            &evens2,
            &catalog::odds(),
            &odds2,
            &oracle(),
            &config(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        // degenerate A = ∅ reduces SP to the premise on B alone
        let empty = PointSetExpr::Finite(FinitePointSet::empty());
        let r = check_sp(
            &empty,
            &empty,
            &catalog::squares(),
            &catalog::squares(),
            &oracle(),
            &config(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        // overlapping summands violate the SP precondition
        let e = check_sp(
            &catalog::evens(),
            &catalog::evens(),
            &catalog::evens(),
            &catalog::evens(),
            &oracle(),
            &config(),
        );
        assert!(matches!(e, Err(AxiomError::NotDisjoint { .. })));

        // DP: N and diag(2) inside their union
        let container = PointSetExpr::union(catalog::naturals(), PointSetExpr::Diagonal(2));
        let r = check_dp(
            &catalog::naturals(),
            &PointSetExpr::Diagonal(2),
            &container,
            &container,
            &oracle(),
            &config(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        // inclusion violations surface as precondition errors
        let e = check_dp(
            &catalog::naturals(),
            &catalog::naturals(),
            &catalog::evens(),
            &catalog::evens(),
            &oracle(),
            &config(),
        );
        assert!(matches!(e, Err(AxiomError::NotIncluded { .. })));
    }

    #[test]
    fn up_exactness() {
        let r = check_up(&catalog::naturals(), 0, &oracle(), &config()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let r = check_up(&PointSetExpr::Diagonal(2), 3, &oracle(), &config()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn tp_np_exactness() {
        let r = check_tp_np(
            &PointSetExpr::FullSpace(3),
            &PermutationSpec::identity().with_arity(3, vec![2, 1, 0]),
            &config(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        // swapping the diagonal is the identity on it
        let r = check_tp_np(
            &PointSetExpr::Diagonal(2),
            &PermutationSpec::identity().with_arity(2, vec![1, 0]),
            &config(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        let e = check_tp_np(
            &PointSetExpr::FullSpace(2),
            &PermutationSpec::identity().with_arity(2, vec![0, 0]),
            &config(),
        );
        assert!(matches!(e, Err(AxiomError::Validation(_))));
    }

    #[test]
    fn pp_products() {
        let r = check_pp(
            &catalog::naturals(),
            &PointSetExpr::Diagonal(2),
            &catalog::naturals(),
            &PointSetExpr::Diagonal(2),
            &oracle(),
            &config(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        // the collision pair is a precondition error with its witness
        let x = PointSetExpr::Finite(FinitePointSet::from_tuples([
            Tuple::new(vec![1, 2]).unwrap(),
            Tuple::new(vec![1, 2, 3]).unwrap(),
        ]));
        let y = PointSetExpr::Finite(FinitePointSet::from_tuples([
            Tuple::new(vec![3, 4, 5]).unwrap(),
            Tuple::new(vec![4, 5]).unwrap(),
        ]));
        match check_pp(&x, &x, &y, &y, &oracle(), &config()) {
            Err(AxiomError::Numerosity(NumerosityError::NotMultipliable { collision })) => {
                assert_eq!(collision, Tuple::new(vec![1, 2, 3, 4, 5]).unwrap());
            }
            other => panic!("expected collision error, got {other:?}"),
        }
    }

    #[test]
    fn finite_agreement() {
        let r = check_finite_agreement(3, 0x5eed, &oracle(), &config()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn copies_are_disjoint_and_equal() {
        let r = check_copy(&catalog::naturals(), 1, 2, 2, 2, 3, &oracle(), &config()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        // below the certificate bound the precondition is refused, and for
        // good reason: such copies can really meet the base set
        let a = PointSetExpr::Finite(FinitePointSet::from_tuples([
            Tuple::new(vec![1]).unwrap(),
            Tuple::new(vec![1, 2]).unwrap(),
        ]));
        let e = check_copy(&a, 2, 1, 3, 0, 1, &oracle(), &config());
        assert!(matches!(e, Err(AxiomError::CopyBelowBound { .. })));
        let low_copy = PointSetExpr::shifted_copy(a.clone(), 2, 1, 3, 0);
        let f = FiniteSupport::from_iter([1, 2, 3]);
        assert!(!low_copy
            .restrict(&f)
            .unwrap()
            .is_disjoint(&a.restrict(&f).unwrap()));
    }

    #[test]
    fn failed_verdicts_replay_from_their_witness() {
        // fabricate a UP-style failure by checking a deliberately wrong
        // expectation: evens vs odds counts differ at F = {1}
        let f = FiniteSupport::from_iter([1]);
        let evens = catalog::evens().restrict(&f).unwrap().len();
        let odds = catalog::odds().restrict(&f).unwrap().len();
        assert_ne!(evens, odds); // the single-witness recheck fails
    }
}
