//! Hereditarily finite sets in canonical form.
//!
//! Every [`HfSet`] stores its members deduplicated and sorted by the canonical total order
//! (cardinality first, then lexicographic on the sorted member lists). Two values are equal
//! exactly when they have the same extension, so structural equality *is* extensional equality.
//!
//! In the finite model every class is a set: there is no universe class and `⋂∅` is an error.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};

/// Highest rank whose cumulative level `V_k` is ever materialized (`|V_5| = 65536`).
pub const MAX_MATERIALIZABLE_RANK: usize = 5;
/// Default cap for [`rank_universe`].
pub const DEFAULT_RANK_CAP: usize = 4;

/// A hereditarily finite set.
///
/// ## Invariants
///
/// - Members are pairwise distinct and sorted ascending by [`Ord`].
/// - Membership is well-founded; values are built bottom-up so no set can reach itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HfSet(Arc<[HfSet]>);

impl Ord for HfSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for HfSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for HfSet {
    fn default() -> Self {
        Self::empty()
    }
}

/// An arbitrarily nested finite collection, possibly with duplicates and in any order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawSet(pub Vec<RawSet>);

impl RawSet {
    pub fn new(members: Vec<RawSet>) -> Self {
        Self(members)
    }
}

/// Canonicalizes a raw nested collection.
pub fn canon(raw: &RawSet) -> HfSet {
    HfSet::from_members(raw.0.iter().map(canon))
}

impl From<&RawSet> for HfSet {
    fn from(raw: &RawSet) -> Self {
        canon(raw)
    }
}

impl FromIterator<HfSet> for HfSet {
    fn from_iter<I: IntoIterator<Item = HfSet>>(iter: I) -> Self {
        Self::from_members(iter)
    }
}

impl HfSet {
    pub fn empty() -> Self {
        Self(Arc::from(Vec::new()))
    }

    /// Builds a set from members in any order, removing duplicates.
    pub fn from_members<I: IntoIterator<Item = HfSet>>(members: I) -> Self {
        let mut v: Vec<HfSet> = members.into_iter().collect();
        v.sort();
        v.dedup();
        Self(Arc::from(v))
    }

    /// `v` must already be strictly ascending.
    pub(crate) fn from_sorted(v: Vec<HfSet>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Self(Arc::from(v))
    }

    /// The von Neumann numeral `n = {0, …, n-1}`.
    pub fn numeral(n: usize) -> Self {
        let mut members = Vec::with_capacity(n);
        for _ in 0..n {
            let next = Self::from_sorted(members.clone());
            members.push(next);
        }
        Self::from_sorted(members)
    }

    /// Returns `Some(n)` when this set is the numeral `n`.
    pub fn as_numeral(&self) -> Option<usize> {
        // Numerals are ordered by cardinality, so numeral k must sit at index k.
        self.0
            .iter()
            .enumerate()
            .all(|(i, m)| m.len() == i && m.as_numeral() == Some(i))
            .then_some(self.len())
    }

    pub fn members(&self) -> &[HfSet] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HfSet> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `x ∈ self`.
    pub fn contains(&self, x: &HfSet) -> bool {
        self.0.binary_search(x).is_ok()
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &HfSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        // Both lists are sorted: a single merge pass suffices.
        let mut it = other.0.iter();
        'outer: for a in self.0.iter() {
            for b in it.by_ref() {
                match a.cmp(b) {
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => continue,
                    Ordering::Less => return false,
                }
            }
            return false;
        }
        true
    }

    /// `self ⊊ other`.
    pub fn is_proper_subset(&self, other: &HfSet) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    pub fn union(&self, other: &HfSet) -> HfSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(a[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self::from_sorted(out)
    }

    pub fn intersection(&self, other: &HfSet) -> HfSet {
        Self::from_sorted(self.0.iter().filter(|x| other.contains(x)).cloned().collect())
    }

    /// `self ∼ other`.
    pub fn difference(&self, other: &HfSet) -> HfSet {
        Self::from_sorted(self.0.iter().filter(|x| !other.contains(x)).cloned().collect())
    }

    /// `self ∪ {x}`.
    pub fn with(&self, x: HfSet) -> HfSet {
        if self.contains(&x) {
            return self.clone();
        }
        self.union(&Self::singleton(x))
    }

    /// `self ∼ {x}`.
    pub fn without(&self, x: &HfSet) -> HfSet {
        Self::from_sorted(self.0.iter().filter(|m| *m != x).cloned().collect())
    }

    pub fn is_disjoint(&self, other: &HfSet) -> bool {
        self.0.iter().all(|x| !other.contains(x))
    }

    /// All subsets of `self`; `|pow(x)| = 2^|x|`.
    pub fn power_set(&self) -> HfSet {
        let n = self.len();
        assert!(n < usize::BITS as usize, "power set of a {n}-element set");
        HfSet::from_members(self.subsets())
    }

    /// Iterates the subsets of `self` in bitmask order (not canonical order).
    pub fn subsets(&self) -> impl Iterator<Item = HfSet> + '_ {
        let n = self.len();
        (0..1usize << n).map(move |mask| self.subset_by_mask(mask))
    }

    pub(crate) fn subset_by_mask(&self, mask: usize) -> HfSet {
        // Picking a subsequence of a sorted list keeps it sorted.
        Self::from_sorted(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, m)| m.clone())
                .collect(),
        )
    }

    /// `[x]`.
    pub fn singleton(x: HfSet) -> HfSet {
        Self::from_sorted(vec![x])
    }

    /// `[x | y]`.
    pub fn unordered_pair(x: HfSet, y: HfSet) -> HfSet {
        Self::from_members([x, y])
    }

    /// Kuratowski pair `{{x}, {x, y}}`.
    pub fn ordered_pair(x: HfSet, y: HfSet) -> HfSet {
        let sx = Self::singleton(x.clone());
        Self::unordered_pair(sx, Self::unordered_pair(x, y))
    }

    /// Decodes a Kuratowski pair.
    pub fn as_pair(&self) -> Option<(&HfSet, &HfSet)> {
        match &self.0[..] {
            // {{x}} = (x, x)
            [only] if only.len() == 1 => Some((&only.0[0], &only.0[0])),
            // Sorted by cardinality, so the singleton {x} comes first.
            [single, double] if single.len() == 1 && double.len() == 2 => {
                let x = &single.0[0];
                match &double.0[..] {
                    [a, b] if a == x => Some((x, b)),
                    [a, b] if b == x => Some((x, a)),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    pub fn is_pair(&self) -> bool {
        self.as_pair().is_some()
    }

    pub fn fst(&self) -> Result<HfSet> {
        self.as_pair()
            .map(|(x, _)| x.clone())
            .ok_or_else(|| Error::NotAPair(self.clone()))
    }

    pub fn snd(&self) -> Result<HfSet> {
        self.as_pair()
            .map(|(_, y)| y.clone())
            .ok_or_else(|| Error::NotAPair(self.clone()))
    }

    /// `⋃self`.
    pub fn big_union(&self) -> HfSet {
        HfSet::from_members(self.0.iter().flat_map(|m| m.0.iter().cloned()))
    }

    /// `⋂self`; the empty family has no finite intersection.
    pub fn big_intersection(&self) -> Result<HfSet> {
        let (first, rest) = self.0.split_first().ok_or(Error::EmptyIntersection)?;
        Ok(rest.iter().fold(first.clone(), |acc, m| acc.intersection(m)))
    }

    /// `self × other`.
    pub fn cartesian(&self, other: &HfSet) -> HfSet {
        HfSet::from_members(self.0.iter().flat_map(|a| {
            other
                .0
                .iter()
                .map(move |b| HfSet::ordered_pair(a.clone(), b.clone()))
        }))
    }

    /// Decodes every member as a pair.
    pub fn pairs(&self) -> Result<Vec<(HfSet, HfSet)>> {
        self.0
            .iter()
            .map(|z| {
                z.as_pair()
                    .map(|(a, b)| (a.clone(), b.clone()))
                    .ok_or_else(|| Error::NotARelation(self.clone()))
            })
            .collect()
    }

    pub fn is_relation(&self) -> bool {
        self.0.iter().all(HfSet::is_pair)
    }

    /// A relation in which no first coordinate has two images.
    pub fn is_function(&self) -> bool {
        match self.pairs() {
            Ok(mut ps) => {
                ps.sort();
                ps.windows(2).all(|w| w[0].0 != w[1].0)
            }
            Err(_) => false,
        }
    }

    pub fn domain(&self) -> Result<HfSet> {
        Ok(self.pairs()?.into_iter().map(|(a, _)| a).collect())
    }

    pub fn range(&self) -> Result<HfSet> {
        Ok(self.pairs()?.into_iter().map(|(_, b)| b).collect())
    }

    /// `f[x]`.
    pub fn value(&self, x: &HfSet) -> Result<HfSet> {
        let mut images = self.pairs()?.into_iter().filter(|(a, _)| a == x).map(|(_, b)| b);
        let first = images.next().ok_or_else(|| Error::OutsideDomain(x.clone()))?;
        if images.next().is_some() {
            return Err(Error::NotAFunction(x.clone()));
        }
        Ok(first)
    }

    /// A member `y ∈ self` with `self ∩ y = ∅`.
    pub fn regularity_witness(&self) -> Result<HfSet> {
        self.0
            .iter()
            .find(|y| y.is_disjoint(self))
            .cloned()
            .ok_or(if self.is_empty() {
                Error::EmptyInput
            } else {
                Error::Invariant(format!("{self} has no ∈-minimal member"))
            })
    }

    /// Compact JSON: nested arrays in canonical order.
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        self.write_json(&mut s);
        s
    }

    fn write_json(&self, out: &mut String) {
        out.push('[');
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            m.write_json(out);
        }
        out.push(']');
    }

    /// Parses the JSON encoding.
    ///
    /// In lenient mode members may appear in any order or repeated, and a non-negative integer
    /// stands for the corresponding numeral. In strict mode only canonical nested arrays are
    /// accepted.
    pub fn from_json(text: &str, strict: bool) -> Result<HfSet> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_value(&value, strict)
    }

    pub fn from_value(value: &Value, strict: bool) -> Result<HfSet> {
        match value {
            Value::Array(items) => {
                let members = items
                    .iter()
                    .map(|v| Self::from_value(v, strict))
                    .collect::<Result<Vec<_>>>()?;
                if strict {
                    if let Some(w) = members.windows(2).find(|w| w[0] >= w[1]) {
                        return Err(Error::NonCanonical(if w[0] == w[1] {
                            format!("duplicate member {}", w[0].to_json())
                        } else {
                            format!("{} listed before {}", w[0].to_json(), w[1].to_json())
                        }));
                    }
                    Ok(Self::from_sorted(members))
                } else {
                    Ok(Self::from_members(members))
                }
            }
            Value::Number(n) if !strict => {
                let n = n
                    .as_u64()
                    .filter(|&n| n <= 64)
                    .ok_or_else(|| Error::Parse(format!("numeral {n} out of range 0..=64")))?;
                Ok(Self::numeral(n as usize))
            }
            Value::Number(_) => Err(Error::NonCanonical("numeral shorthand in strict mode".into())),
            other => Err(Error::Parse(format!("expected an array, found {other}"))),
        }
    }

    pub fn to_value(&self) -> Value {
        Value::Array(self.0.iter().map(HfSet::to_value).collect())
    }
}

impl Serialize for HfSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for m in self.0.iter() {
            seq.serialize_element(m)?;
        }
        seq.end()
    }
}

/// Numerals print as digits, everything else as braces; the output parses back in the
/// classifier language.
impl fmt::Display for HfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_numeral() {
            return write!(f, "{n}");
        }
        f.write_str("{")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for HfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
    Difference,
}

pub fn set_algebra(op: SetOp, x: &HfSet, y: &HfSet) -> HfSet {
    match op {
        SetOp::Union => x.union(y),
        SetOp::Intersection => x.intersection(y),
        SetOp::Difference => x.difference(y),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    Singleton,
    Unordered,
    Ordered,
}

pub fn pairing(kind: Pairing, x: HfSet, y: Option<HfSet>) -> Result<HfSet> {
    let need = || Error::PreconditionFailed("pairing needs a second component".into());
    Ok(match kind {
        Pairing::Singleton => HfSet::singleton(x),
        Pairing::Unordered => HfSet::unordered_pair(x, y.ok_or_else(need)?),
        Pairing::Ordered => HfSet::ordered_pair(x, y.ok_or_else(need)?),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    First,
    Second,
}

pub fn projection(kind: Projection, z: &HfSet) -> Result<HfSet> {
    match kind {
        Projection::First => z.fst(),
        Projection::Second => z.snd(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Aggregate {
    BigUnion,
    BigIntersection,
}

pub fn aggregate(kind: Aggregate, x: &HfSet) -> Result<HfSet> {
    match kind {
        Aggregate::BigUnion => Ok(x.big_union()),
        Aggregate::BigIntersection => x.big_intersection(),
    }
}

/// Results of the function predicates for one relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionView {
    pub is_function: bool,
    pub domain: HfSet,
    pub range: HfSet,
}

pub fn function_suite(f: &HfSet) -> Result<FunctionView> {
    Ok(FunctionView {
        is_function: f.is_function(),
        domain: f.domain()?,
        range: f.range()?,
    })
}

/// `V_k` with the default cap.
pub fn rank_universe(k: usize) -> Result<HfSet> {
    rank_universe_capped(k, DEFAULT_RANK_CAP)
}

/// `V_0 = ∅`, `V_{i+1} = pow(V_i)`.
pub fn rank_universe_capped(k: usize, cap: usize) -> Result<HfSet> {
    let cap = cap.min(MAX_MATERIALIZABLE_RANK);
    if k > cap {
        return Err(Error::RankTooLarge { rank: k, cap });
    }
    Ok((0..k).fold(HfSet::empty(), |v, _| v.power_set()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: usize) -> HfSet {
        HfSet::numeral(k)
    }

    fn raw(members: Vec<RawSet>) -> RawSet {
        RawSet(members)
    }

    #[test]
    fn canon_dedups_and_sorts() {
        let e = || raw(vec![]);
        assert_eq!(canon(&raw(vec![e(), e()])), n(1));
        assert_eq!(canon(&raw(vec![raw(vec![e()]), e()])), n(2));
        assert_eq!(canon(&raw(vec![raw(vec![e()]), e()])).members(), &[n(0), n(1)]);
        let once = canon(&raw(vec![raw(vec![e(), e()]), e(), raw(vec![e()])]));
        assert_eq!(HfSet::from_members(once.members().to_vec()), once);
    }

    #[test]
    fn membership_and_subsets() {
        assert!(n(1).contains(&n(0)));
        assert!(!n(0).contains(&n(0)));
        assert!(n(2).contains(&n(1)));
        assert!(n(1).is_subset(&n(2)));
        assert!(n(2).is_subset(&n(2)));
        assert!(!n(2).is_proper_subset(&n(2)));
        for x in rank_universe(3).unwrap().iter() {
            assert!(HfSet::empty().is_subset(x));
        }
        let s1 = HfSet::singleton(n(1));
        assert!(!s1.is_subset(&n(1)));
    }

    #[test]
    fn algebra_examples() {
        assert_eq!(n(1).union(&HfSet::singleton(n(1))), n(2));
        assert_eq!(n(2).intersection(&n(1)), n(1));
        assert_eq!(n(2).difference(&n(1)), HfSet::singleton(n(1)));
    }

    #[test]
    fn power_set_examples() {
        assert_eq!(HfSet::empty().power_set(), n(1));
        assert_eq!(n(1).power_set(), n(2));
        assert_eq!(n(2).power_set().len(), 4);
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(HfSet::singleton(n(0)), n(1));
        assert_eq!(HfSet::unordered_pair(n(0), n(1)), n(2));
        let p = HfSet::ordered_pair(n(0), n(1));
        assert_eq!(p, HfSet::from_members([n(1), n(2)]));
        assert_eq!(p.fst().unwrap(), n(0));
        assert_eq!(HfSet::ordered_pair(n(2), n(2)).snd().unwrap(), n(2));
        assert_eq!(n(3).fst(), Err(Error::NotAPair(n(3))));
        assert!(pairing(Pairing::Unordered, n(0), None).is_err());
    }

    #[test]
    fn aggregate_examples() {
        assert_eq!(n(2).big_union(), n(1));
        assert_eq!(n(2).power_set().big_union(), n(2));
        assert_eq!(
            HfSet::from_members([n(1), n(2)]).big_intersection().unwrap(),
            n(1)
        );
        assert_eq!(HfSet::empty().big_intersection(), Err(Error::EmptyIntersection));
    }

    #[test]
    fn cartesian_examples() {
        assert_eq!(
            n(1).cartesian(&n(1)),
            HfSet::singleton(HfSet::ordered_pair(n(0), n(0)))
        );
        assert!(HfSet::empty().cartesian(&n(2)).is_empty());
        assert_eq!(n(2).cartesian(&n(3)).len(), 6);
    }

    #[test]
    fn function_examples() {
        let f = HfSet::from_members([HfSet::ordered_pair(n(0), n(1)), HfSet::ordered_pair(n(1), n(1))]);
        let view = function_suite(&f).unwrap();
        assert!(view.is_function);
        assert_eq!(view.domain, n(2));
        assert_eq!(view.range, HfSet::singleton(n(1)));
        assert_eq!(f.value(&n(0)).unwrap(), n(1));
        assert_eq!(f.value(&n(2)), Err(Error::OutsideDomain(n(2))));
        let g = HfSet::from_members([HfSet::ordered_pair(n(0), n(0)), HfSet::ordered_pair(n(0), n(1))]);
        assert!(!g.is_function());
        assert_eq!(g.value(&n(0)), Err(Error::NotAFunction(n(0))));
        assert!(matches!(n(3).domain(), Err(Error::NotARelation(_))));
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(n(2).regularity_witness().unwrap(), n(0));
        let s = HfSet::singleton(n(1));
        assert_eq!(s.regularity_witness().unwrap(), n(1));
        assert_eq!(HfSet::empty().regularity_witness(), Err(Error::EmptyInput));
    }

    #[test]
    fn rank_universe_examples() {
        assert_eq!(rank_universe(1).unwrap(), n(1));
        assert_eq!(rank_universe(2).unwrap(), n(2));
        assert_eq!(rank_universe(4).unwrap().len(), 16);
        assert_eq!(rank_universe(5), Err(Error::RankTooLarge { rank: 5, cap: 4 }));
        assert_eq!(rank_universe_capped(5, 5).unwrap().len(), 65536);
    }

    #[test]
    fn json_encoding() {
        assert_eq!(n(2).to_json(), "[[],[[]]]");
        assert_eq!(HfSet::from_json("[[],[[]]]", true).unwrap(), n(2));
        assert!(matches!(
            HfSet::from_json("[[],[]]", true),
            Err(Error::NonCanonical(_))
        ));
        assert_eq!(HfSet::from_json("[[],[]]", false).unwrap(), n(1));
        assert!(matches!(
            HfSet::from_json("[[[]],[]]", true),
            Err(Error::NonCanonical(_))
        ));
        assert_eq!(
            HfSet::from_json("[2, 0]", false).unwrap(),
            HfSet::from_members([n(0), n(2)])
        );
        assert!(matches!(HfSet::from_json("{}", false), Err(Error::Parse(_))));
        assert_eq!(serde_json::to_string(&n(2)).unwrap(), "[[],[[]]]");
    }

    #[test]
    fn numerals_display() {
        assert_eq!(n(3).to_string(), "3");
        assert_eq!(HfSet::singleton(n(1)).to_string(), "{1}");
        assert_eq!(n(4).as_numeral(), Some(4));
        assert_eq!(HfSet::singleton(n(1)).as_numeral(), None);
    }

    #[test]
    fn canonical_order_is_cardinality_first() {
        let v3 = rank_universe(3).unwrap();
        let ms = v3.members();
        assert!(ms.windows(2).all(|w| w[0].len() <= w[1].len()));
        assert_eq!(ms[0], n(0));
        assert_eq!(ms[1], n(1));
        assert_eq!(ms[2], HfSet::singleton(n(1)));
        assert_eq!(ms[3], n(2));
    }
}
