//! Executable order-theoretic predicates over encoded relations and families of sets.
//!
//! Each predicate has a `check_*` form returning the violated clause with a witness, and a
//! boolean form. Definitions that are only meaningful on nonempty inputs (maximal members,
//! maximal elements, bounds) reject empty inputs with an error instead of holding vacuously.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hfs::HfSet;

/// A set of sets.
pub type Family = HfSet;

/// A relation: a set whose members all decode as ordered pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinRel(HfSet);

impl BinRel {
    pub fn new(pairs: HfSet) -> Result<Self> {
        if pairs.is_relation() {
            Ok(Self(pairs))
        } else {
            Err(Error::NotARelation(pairs))
        }
    }

    pub fn empty() -> Self {
        Self(HfSet::empty())
    }

    pub fn from_pairs<I: IntoIterator<Item = (HfSet, HfSet)>>(pairs: I) -> Self {
        Self(
            pairs
                .into_iter()
                .map(|(a, b)| HfSet::ordered_pair(a, b))
                .collect(),
        )
    }

    /// `{⟨a, b⟩ ∈ X × X : rel(a, b)}`.
    pub fn from_fn(carrier: &HfSet, mut rel: impl FnMut(&HfSet, &HfSet) -> bool) -> Self {
        let mut pairs = Vec::new();
        for a in carrier.iter() {
            for b in carrier.iter() {
                if rel(a, b) {
                    pairs.push(HfSet::ordered_pair(a.clone(), b.clone()));
                }
            }
        }
        Self(HfSet::from_members(pairs))
    }

    pub fn identity(carrier: &HfSet) -> Self {
        Self::from_fn(carrier, |a, b| a == b)
    }

    /// Set inclusion restricted to `carrier`.
    pub fn inclusion(carrier: &HfSet) -> Self {
        Self::from_fn(carrier, |a, b| a.is_subset(b))
    }

    pub fn related(&self, x: &HfSet, y: &HfSet) -> bool {
        self.0.contains(&HfSet::ordered_pair(x.clone(), y.clone()))
    }

    /// `le ∩ (A × A)`.
    pub fn restrict(&self, a: &HfSet) -> BinRel {
        Self(HfSet::from_sorted(
            self.0
                .iter()
                .filter(|z| {
                    let (x, y) = z.as_pair().expect("relation members are pairs");
                    a.contains(x) && a.contains(y)
                })
                .cloned()
                .collect(),
        ))
    }

    pub fn pairs(&self) -> Vec<(HfSet, HfSet)> {
        self.0.pairs().expect("relation members are pairs")
    }

    pub fn as_set(&self) -> &HfSet {
        &self.0
    }

    pub fn into_set(self) -> HfSet {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Debug for BinRel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set()
            .entries(self.pairs().iter().map(|(a, b)| format!("{a}≤{b}")))
            .finish()
    }
}

impl Serialize for BinRel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// A violated clause together with the elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: &'static str,
    pub witness: Vec<HfSet>,
}

pub type Check = std::result::Result<(), Violation>;

fn violated(clause: &'static str, witness: Vec<HfSet>) -> Check {
    Err(Violation { clause, witness })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extreme {
    Max,
    Min,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Upper,
    Lower,
}

/// `x le y`.
pub fn rrelation(x: &HfSet, le: &BinRel, y: &HfSet) -> bool {
    le.related(x, y)
}

// -------------------- choice functions -------------------- //

pub fn check_choice_function(eps: &HfSet, base: &HfSet) -> Check {
    if !eps.is_function() {
        return violated("is a function", vec![eps.clone()]);
    }
    let pairs = eps.pairs().expect("functions are relations");
    let domain: HfSet = pairs.iter().map(|(a, _)| a.clone()).collect();
    // dom(ε) = pow(X) ∼ [∅], without materializing pow(X).
    if let Some(a) = domain.iter().find(|a| a.is_empty() || !a.is_subset(base)) {
        return violated("dom = pow(X) ∼ [∅]", vec![a.clone()]);
    }
    let expected = (1usize << base.len()) - 1;
    if domain.len() != expected {
        let missing = base.subsets().find(|s| !s.is_empty() && !domain.contains(s));
        return violated("dom = pow(X) ∼ [∅]", missing.into_iter().collect());
    }
    for (a, v) in &pairs {
        if !base.contains(v) {
            return violated("ran ⊆ X", vec![v.clone()]);
        }
        if !a.contains(v) {
            return violated("ε(A) ∈ A", vec![a.clone(), v.clone()]);
        }
    }
    Ok(())
}

pub fn is_choice_function(eps: &HfSet, base: &HfSet) -> bool {
    check_choice_function(eps, base).is_ok()
}

// -------------------- families -------------------- //

/// Maximal (no member properly contains `set`) or minimal member of a nonempty family.
pub fn extreme_member(kind: Extreme, set: &HfSet, family: &Family) -> Result<bool> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(family.contains(set)
        && family.iter().all(|e| match kind {
            Extreme::Max => !set.is_proper_subset(e),
            Extreme::Min => !e.is_proper_subset(set),
        }))
}

pub fn check_nest(n: &Family) -> Check {
    let ms = n.members();
    for (i, x) in ms.iter().enumerate() {
        for y in &ms[i + 1..] {
            if !x.is_subset(y) && !y.is_subset(x) {
                return violated("x ⊆ y or y ⊆ x", vec![x.clone(), y.clone()]);
            }
        }
    }
    Ok(())
}

pub fn is_nest(n: &Family) -> bool {
    check_nest(n).is_ok()
}

/// Every subfamily of `g` that is a nest, the empty nest included.
pub fn nests_within(g: &Family) -> Vec<Family> {
    // Along a nest sorted by cardinality each member strictly contains the previous one.
    let ms = g.members();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn go(ms: &[HfSet], stack: &mut Vec<usize>, from: usize, out: &mut Vec<Family>) {
        out.push(stack.iter().map(|&i| ms[i].clone()).collect());
        for j in from..ms.len() {
            if stack.last().is_none_or(|&i| ms[i].is_proper_subset(&ms[j])) {
                stack.push(j);
                go(ms, stack, j + 1, out);
                stack.pop();
            }
        }
    }
    go(ms, &mut stack, 0, &mut out);
    out
}

/// Largest pool for which the finite-character quantifier is expanded.
pub const FINITE_CHARACTER_POOL_LIMIT: usize = 16;

/// Finite character, checked literally against a finite candidate pool.
///
/// Condition (1): every subset of a member is a member (all subsets are finite here).
/// Condition (2): for every `F ⊆ ⋃f ∪ ambient`, if every subset of `F` is a member then `F` is.
pub fn check_finite_character(f: &Family, ambient: &HfSet) -> Result<Check> {
    for member in f.iter() {
        if member.len() >= FINITE_CHARACTER_POOL_LIMIT {
            return Err(Error::SizeGuardExceeded {
                what: "finite-character member",
                size: member.len(),
                limit: FINITE_CHARACTER_POOL_LIMIT,
            });
        }
        if let Some(sub) = member.subsets().find(|s| !f.contains(s)) {
            return Ok(violated(
                "(1) every finite subclass of a member belongs to f",
                vec![member.clone(), sub],
            ));
        }
    }
    let pool = f.big_union().union(ambient);
    if pool.len() > FINITE_CHARACTER_POOL_LIMIT {
        return Err(Error::SizeGuardExceeded {
            what: "finite-character candidate pool",
            size: pool.len(),
            limit: FINITE_CHARACTER_POOL_LIMIT,
        });
    }
    for candidate in pool.subsets() {
        if !f.contains(&candidate) && candidate.subsets().all(|s| f.contains(&s)) {
            return Ok(violated(
                "(2) a set whose finite subclasses all belong to f belongs to f",
                vec![candidate],
            ));
        }
    }
    Ok(Ok(()))
}

pub fn is_finite_character(f: &Family, ambient: &HfSet) -> Result<bool> {
    Ok(check_finite_character(f, ambient)?.is_ok())
}

/// Downward closure and closure under unions of nests, for a nonempty family of finite
/// character.
pub fn check_finite_char_properties(f: &Family) -> Result<Check> {
    if f.is_empty() {
        return Err(Error::PreconditionFailed("family is empty".into()));
    }
    if let Err(v) = check_finite_character(f, &HfSet::empty())? {
        return Err(Error::PreconditionFailed(format!(
            "not of finite character: {}",
            v.clause
        )));
    }
    for a in f.iter() {
        for b in a.subsets() {
            if !f.contains(&b) {
                return Ok(violated("A ∈ f ∧ B ⊆ A ⟹ B ∈ f", vec![a.clone(), b]));
            }
        }
    }
    for g in nests_within(f) {
        if !f.contains(&g.big_union()) {
            return Ok(violated("g ⊆ f nest ⟹ ⋃g ∈ f", vec![g]));
        }
    }
    Ok(Ok(()))
}

pub fn finite_char_properties(f: &Family) -> Result<bool> {
    Ok(check_finite_char_properties(f)?.is_ok())
}

// -------------------- relations -------------------- //

pub fn check_partial_order(le: &BinRel, carrier: &HfSet) -> Check {
    for (a, b) in le.pairs() {
        if !carrier.contains(&a) || !carrier.contains(&b) {
            return violated("le ⊆ X × X", vec![a, b]);
        }
    }
    check_reflexive(le, carrier)?;
    check_antisymmetric(le, carrier)?;
    check_transitive(le, carrier)
}

pub fn check_reflexive(le: &BinRel, carrier: &HfSet) -> Check {
    match carrier.iter().find(|a| !le.related(a, a)) {
        Some(a) => violated("reflexivity", vec![a.clone()]),
        None => Ok(()),
    }
}

pub fn check_antisymmetric(le: &BinRel, carrier: &HfSet) -> Check {
    for (a, b) in le.pairs() {
        if a != b && carrier.contains(&a) && carrier.contains(&b) && le.related(&b, &a) {
            return violated("antisymmetry", vec![a, b]);
        }
    }
    Ok(())
}

pub fn check_transitive(le: &BinRel, carrier: &HfSet) -> Check {
    let pairs = le.pairs();
    for (a, b) in &pairs {
        for (b2, c) in &pairs {
            if b == b2 && [a, b, c].iter().all(|x| carrier.contains(x)) && !le.related(a, c) {
                return violated("transitivity", vec![a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    Ok(())
}

/// Per-clause outcome of the partial-order test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PartialOrderReport {
    pub within_carrier: bool,
    pub reflexive: bool,
    pub antisymmetric: bool,
    pub transitive: bool,
}

impl PartialOrderReport {
    pub fn holds(&self) -> bool {
        self.within_carrier && self.reflexive && self.antisymmetric && self.transitive
    }
}

pub fn partial_order_report(le: &BinRel, carrier: &HfSet) -> PartialOrderReport {
    PartialOrderReport {
        within_carrier: le
            .pairs()
            .iter()
            .all(|(a, b)| carrier.contains(a) && carrier.contains(b)),
        reflexive: check_reflexive(le, carrier).is_ok(),
        antisymmetric: check_antisymmetric(le, carrier).is_ok(),
        transitive: check_transitive(le, carrier).is_ok(),
    }
}

pub fn is_partial_order(le: &BinRel, carrier: &HfSet) -> bool {
    check_partial_order(le, carrier).is_ok()
}

fn require_partial_order(le: &BinRel, carrier: &HfSet) -> Result<()> {
    check_partial_order(le, carrier).map_err(|v| Error::NotAPartialOrder(v.clause.to_string()))
}

/// Upper (lower) bound of `a` in the poset `(X, le)`; `X` must be nonempty.
pub fn is_bound(kind: Bound, x: &HfSet, a: &HfSet, carrier: &HfSet, le: &BinRel) -> Result<bool> {
    require_partial_order(le, carrier)?;
    if carrier.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    Ok(carrier.contains(x)
        && a.is_subset(carrier)
        && a.iter().all(|y| match kind {
            Bound::Upper => le.related(y, x),
            Bound::Lower => le.related(x, y),
        }))
}

/// Maximal (minimal) element of a nonempty `X`: nothing strictly above (below) it.
pub fn extreme_element(kind: Extreme, x: &HfSet, carrier: &HfSet, le: &BinRel) -> Result<bool> {
    if carrier.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    Ok(carrier.contains(x)
        && carrier.iter().all(|y| {
            y == x
                || match kind {
                    Extreme::Max => !le.related(x, y),
                    Extreme::Min => !le.related(y, x),
                }
        }))
}

pub fn check_total_order(le: &BinRel, carrier: &HfSet) -> Check {
    check_partial_order(le, carrier)?;
    let ms = carrier.members();
    for (i, a) in ms.iter().enumerate() {
        for b in &ms[i + 1..] {
            if !le.related(a, b) && !le.related(b, a) {
                return violated("connex", vec![a.clone(), b.clone()]);
            }
        }
    }
    Ok(())
}

pub fn is_total_order(le: &BinRel, carrier: &HfSet) -> bool {
    check_total_order(le, carrier).is_ok()
}

/// `A` is a nonempty subset of `X` totally ordered by `le ∩ (A × A)`.
pub fn check_chain(a: &HfSet, carrier: &HfSet, le: &BinRel) -> Result<Check> {
    require_partial_order(le, carrier)?;
    if !a.is_subset(carrier) {
        return Ok(violated("A ⊆ X", vec![a.clone()]));
    }
    if a.is_empty() {
        return Ok(violated("A ≠ ∅", vec![]));
    }
    Ok(check_total_order(&le.restrict(a), a))
}

pub fn is_chain(a: &HfSet, carrier: &HfSet, le: &BinRel) -> Result<bool> {
    Ok(check_chain(a, carrier, le)?.is_ok())
}

/// Every nonempty chain of a partial order, the subsets of `X` on which `le` is total.
pub fn chains(carrier: &HfSet, le: &BinRel) -> Vec<HfSet> {
    // Sorting by down-set size gives a linear extension; along it a chain is increasing.
    let mut order: Vec<&HfSet> = carrier.iter().collect();
    order.sort_by_key(|x| carrier.iter().filter(|y| le.related(y, x)).count());
    let mut out = Vec::new();
    fn go<'a>(
        order: &[&'a HfSet],
        le: &BinRel,
        stack: &mut Vec<&'a HfSet>,
        from: usize,
        out: &mut Vec<HfSet>,
    ) {
        for j in from..order.len() {
            if stack.last().is_none_or(|last| le.related(last, order[j])) {
                stack.push(order[j]);
                out.push(stack.iter().map(|x| (*x).clone()).collect());
                go(order, le, stack, j + 1, out);
                stack.pop();
            }
        }
    }
    go(&order, le, &mut Vec::new(), 0, &mut out);
    out
}

/// Largest carrier whose subsets are enumerated by the well-order test.
pub const WELL_ORDER_CARRIER_LIMIT: usize = 20;

pub fn check_well_order(le: &BinRel, carrier: &HfSet) -> Check {
    check_total_order(le, carrier)?;
    assert!(
        carrier.len() <= WELL_ORDER_CARRIER_LIMIT,
        "well-order test over {} elements",
        carrier.len()
    );
    for sub in carrier.subsets().filter(|s| !s.is_empty()) {
        let has_min = sub
            .iter()
            .any(|z| extreme_element(Extreme::Min, z, &sub, le).expect("subset is nonempty"));
        if !has_min {
            return violated("every nonempty subset has a least element", vec![sub]);
        }
    }
    Ok(())
}

pub fn is_well_order(le: &BinRel, carrier: &HfSet) -> bool {
    check_well_order(le, carrier).is_ok()
}

pub fn require_well_order(le: &BinRel, carrier: &HfSet) -> Result<()> {
    check_well_order(le, carrier).map_err(|v| Error::NotAWellOrder(v.clause.to_string()))
}

/// `Y ⊆ X` and downward closed under the well order `le`.
pub fn check_initial_segment(y: &HfSet, carrier: &HfSet, le: &BinRel) -> Result<Check> {
    require_well_order(le, carrier)?;
    if !y.is_subset(carrier) {
        return Ok(violated("Y ⊆ X", vec![y.clone()]));
    }
    for v in y.iter() {
        for u in carrier.iter() {
            if le.related(u, v) && !y.contains(u) {
                return Ok(violated("u ≤ v ∧ v ∈ Y ⟹ u ∈ Y", vec![u.clone(), v.clone()]));
            }
        }
    }
    Ok(Ok(()))
}

pub fn is_initial_segment(y: &HfSet, carrier: &HfSet, le: &BinRel) -> Result<bool> {
    Ok(check_initial_segment(y, carrier, le)?.is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: usize) -> HfSet {
        HfSet::numeral(k)
    }

    fn set(items: &[HfSet]) -> HfSet {
        HfSet::from_members(items.iter().cloned())
    }

    /// Numeric order on the numeral `k`.
    fn leq(k: usize) -> BinRel {
        BinRel::from_fn(&n(k), |a, b| a.is_subset(b))
    }

    #[test]
    fn rrelation_examples() {
        assert!(rrelation(&n(0), &leq(3), &n(2)));
        assert!(!rrelation(&n(2), &leq(3), &n(0)));
        assert!(!rrelation(&n(0), &BinRel::empty(), &n(0)));
    }

    #[test]
    fn choice_function_examples() {
        // min under numeric order on 2
        let eps = BinRel::from_pairs([(set(&[n(0)]), n(0)), (set(&[n(1)]), n(1)), (n(2), n(0))]);
        assert!(is_choice_function(eps.as_set(), &n(2)));
        assert!(is_choice_function(&HfSet::empty(), &HfSet::empty()));
        let bad = BinRel::from_pairs([(set(&[n(0)]), n(0)), (set(&[n(1)]), n(0)), (n(2), n(0))]);
        let v = check_choice_function(bad.as_set(), &n(2)).unwrap_err();
        assert_eq!(v.clause, "ε(A) ∈ A");
        let partial = BinRel::from_pairs([(set(&[n(0)]), n(0))]);
        assert!(!is_choice_function(partial.as_set(), &n(2)));
    }

    #[test]
    fn extreme_member_examples() {
        let p2 = n(2).power_set();
        assert!(extreme_member(Extreme::Max, &n(2), &p2).unwrap());
        assert!(!extreme_member(Extreme::Max, &n(1), &p2).unwrap());
        assert!(extreme_member(Extreme::Min, &HfSet::empty(), &p2).unwrap());
        assert_eq!(
            extreme_member(Extreme::Max, &n(0), &HfSet::empty()),
            Err(Error::EmptyFamily)
        );
    }

    #[test]
    fn nest_examples() {
        assert!(is_nest(&n(3)));
        assert!(!is_nest(&set(&[set(&[n(0)]), set(&[n(1)])])));
        assert!(is_nest(&HfSet::empty()));
        // nests in pow(2): ∅, 4 singletons, 5 two-element chains, 2 three-element chains
        assert_eq!(nests_within(&n(2).power_set()).len(), 12);
        assert!(nests_within(&n(2).power_set()).iter().all(is_nest));
    }

    #[test]
    fn finite_character_examples() {
        assert!(is_finite_character(&n(2).power_set(), &HfSet::empty()).unwrap());
        let v = check_finite_character(&set(&[set(&[n(0)])]), &HfSet::empty())
            .unwrap()
            .unwrap_err();
        assert!(v.clause.starts_with("(1)"));
        assert!(is_finite_character(&HfSet::empty(), &n(3)).unwrap());
        // {∅, {0}} is downward closed but misses nothing it should contain.
        assert!(is_finite_character(&n(2), &n(2)).unwrap());
    }

    #[test]
    fn finite_char_property_examples() {
        assert!(finite_char_properties(&n(2).power_set()).unwrap());
        assert!(finite_char_properties(&n(1)).unwrap());
        assert!(matches!(
            finite_char_properties(&set(&[set(&[n(0)])])),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(matches!(
            finite_char_properties(&HfSet::empty()),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn partial_order_examples() {
        let p1 = n(1).power_set();
        assert!(is_partial_order(&BinRel::inclusion(&p1), &p1));
        assert!(is_partial_order(&leq(3), &n(3)));
        let missing = BinRel::new(leq(3).as_set().without(&HfSet::ordered_pair(n(1), n(1)))).unwrap();
        let report = partial_order_report(&missing, &n(3));
        assert!(!report.reflexive && report.antisymmetric && report.transitive);
        assert_eq!(
            check_partial_order(&missing, &n(3)).unwrap_err().witness,
            vec![n(1)]
        );
    }

    #[test]
    fn bound_examples() {
        let (x, le) = (n(3), leq(3));
        assert!(is_bound(Bound::Upper, &n(1), &n(2), &x, &le).unwrap());
        assert!(!is_bound(Bound::Upper, &n(0), &n(2), &x, &le).unwrap());
        assert!(is_bound(Bound::Lower, &n(0), &n(2), &x, &le).unwrap());
        assert!(matches!(
            is_bound(Bound::Upper, &n(0), &n(2), &x, &BinRel::empty()),
            Err(Error::NotAPartialOrder(_))
        ));
        assert_eq!(
            is_bound(Bound::Upper, &n(0), &n(0), &n(0), &BinRel::empty()),
            Err(Error::EmptyCarrier)
        );
    }

    #[test]
    fn extreme_element_examples() {
        assert!(extreme_element(Extreme::Max, &n(2), &n(3), &leq(3)).unwrap());
        assert!(extreme_element(Extreme::Min, &n(0), &n(3), &leq(3)).unwrap());
        assert!(!extreme_element(Extreme::Max, &n(1), &n(3), &leq(3)).unwrap());
        let id = BinRel::identity(&n(2));
        assert!(extreme_element(Extreme::Max, &n(0), &n(2), &id).unwrap());
        assert!(extreme_element(Extreme::Max, &n(1), &n(2), &id).unwrap());
        assert_eq!(
            extreme_element(Extreme::Max, &n(0), &HfSet::empty(), &id),
            Err(Error::EmptyCarrier)
        );
    }

    #[test]
    fn total_order_examples() {
        assert!(is_total_order(&leq(3), &n(3)));
        let p2 = n(2).power_set();
        let v = check_total_order(&BinRel::inclusion(&p2), &p2).unwrap_err();
        assert_eq!(v.clause, "connex");
        assert_eq!(v.witness, vec![set(&[n(0)]), set(&[n(1)])]);
        assert!(!is_total_order(&BinRel::identity(&n(2)), &n(2)));
    }

    #[test]
    fn chain_examples() {
        let p2 = n(2).power_set();
        let inc = BinRel::inclusion(&p2);
        assert!(is_chain(&set(&[HfSet::empty(), n(2)]), &p2, &inc).unwrap());
        assert!(!is_chain(&set(&[set(&[n(0)]), set(&[n(1)])]), &p2, &inc).unwrap());
        assert!(!is_chain(&HfSet::empty(), &p2, &inc).unwrap());
        // chains of pow(2) under ⊆: the nonempty nests
        assert_eq!(chains(&p2, &inc).len(), 11);
    }

    #[test]
    fn well_order_examples() {
        assert!(is_well_order(&leq(3), &n(3)));
        assert!(!is_well_order(&BinRel::identity(&n(2)), &n(2)));
        assert!(is_well_order(&BinRel::empty(), &HfSet::empty()));
        // reversed numeric order is still total, hence a well order on a finite carrier
        let rev = BinRel::from_fn(&n(3), |a, b| b.is_subset(a));
        assert!(is_well_order(&rev, &n(3)));
    }

    #[test]
    fn initial_segment_examples() {
        assert!(is_initial_segment(&n(1), &n(2), &leq(2)).unwrap());
        assert!(!is_initial_segment(&set(&[n(1)]), &n(2), &leq(2)).unwrap());
        assert!(is_initial_segment(&n(2), &n(2), &leq(2)).unwrap());
        assert!(matches!(
            is_initial_segment(&n(1), &n(2), &BinRel::identity(&n(2))),
            Err(Error::NotAWellOrder(_))
        ));
    }
}
