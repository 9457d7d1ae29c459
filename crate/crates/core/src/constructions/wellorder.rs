use super::{zorn_maximal_element, Guards, ZornOutcome};
use crate::choice::Choice;
use crate::error::{Error, Result};
use crate::hfs::HfSet;
use crate::order::{chains, is_initial_segment, is_well_order, require_well_order, BinRel};

/// A set of encoded pairs `⟨Y, ≤⟩` with `≤` a relation on `Y`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OrderedPairFamily(HfSet);

impl OrderedPairFamily {
    pub fn new(members: HfSet) -> Result<Self> {
        for m in members.iter() {
            let (y, le) = m.as_pair().ok_or_else(|| Error::NotAPair(m.clone()))?;
            let le = BinRel::new(le.clone())?;
            if le.pairs().iter().any(|(a, b)| !y.contains(a) || !y.contains(b)) {
                return Err(Error::MalformedInstance(format!(
                    "{m}: relation leaves its carrier"
                )));
            }
        }
        Ok(Self(members))
    }

    pub fn from_pairs<I: IntoIterator<Item = (HfSet, BinRel)>>(pairs: I) -> Self {
        Self(
            pairs
                .into_iter()
                .map(|(y, le)| HfSet::ordered_pair(y, le.into_set()))
                .collect(),
        )
    }

    pub fn as_set(&self) -> &HfSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn decode(m: &HfSet) -> (HfSet, BinRel) {
        let (y, le) = m.as_pair().expect("member of an ordered-pair family");
        (y.clone(), BinRel::new(le.clone()).expect("validated relation"))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (HfSet, BinRel)> + '_ {
        self.0.iter().map(Self::decode)
    }

    pub fn is_subfamily(&self, other: &OrderedPairFamily) -> bool {
        self.0.is_subset(&other.0)
    }
}

fn guard_en_l(x: &HfSet, guards: &Guards) -> Result<()> {
    if x.len() > guards.en_l {
        return Err(Error::SizeGuardExceeded {
            what: "L (well-ordered subsets)",
            size: x.len(),
            limit: guards.en_l,
        });
    }
    Ok(())
}

/// `L`: every `⟨Y, ≤⟩` with `Y` a nonempty subset of `X` and `≤` a well order on `Y`, found by
/// testing every relation on every such `Y`.
pub fn en_l(x: &HfSet, guards: &Guards) -> Result<OrderedPairFamily> {
    guard_en_l(x, guards)?;
    let mut out = Vec::new();
    for y in x.subsets().filter(|y| !y.is_empty()) {
        let square = y.cartesian(&y);
        for rel in square.subsets() {
            let le = BinRel::new(rel).expect("subset of a product");
            if is_well_order(&le, &y) {
                out.push((y.clone(), le));
            }
        }
    }
    Ok(OrderedPairFamily::from_pairs(out))
}

/// `≺` on `L`: `Y₁ ⊆ Y₂`, the orders agree on `Y₁`, and `Y₁` is an initial segment of `Y₂`.
pub fn lee(l: &OrderedPairFamily) -> BinRel {
    BinRel::from_fn(l.as_set(), |p1, p2| {
        let (y1, le1) = OrderedPairFamily::decode(p1);
        let (y2, le2) = OrderedPairFamily::decode(p2);
        y1.is_subset(&y2)
            && y1
                .iter()
                .all(|a| y1.iter().all(|b| le1.related(a, b) == le2.related(a, b)))
            && is_initial_segment(&y1, &y2, &le2).unwrap_or(false)
    })
}

/// Every chain of `(L, ≺)`, as subfamilies of `L`.
pub fn chains_of_l(l: &OrderedPairFamily, order: &BinRel) -> Vec<OrderedPairFamily> {
    chains(l.as_set(), order)
        .into_iter()
        .map(OrderedPairFamily)
        .collect()
}

/// `Z = ⋃{Y : ⟨Y, ≤⟩ ∈ K}`.
pub fn en_z(k: &OrderedPairFamily) -> HfSet {
    k.pairs().fold(HfSet::empty(), |acc, (y, _)| acc.union(&y))
}

/// `u ≦ v` iff some `⟨Y, ≤⟩ ∈ K` has `u, v ∈ Y` and `u ≤ v`.
pub fn leeq(k: &OrderedPairFamily) -> BinRel {
    let rel = k.pairs().fold(HfSet::empty(), |acc, (y, le)| {
        let inside: HfSet = le
            .pairs()
            .into_iter()
            .filter(|(u, v)| y.contains(u) && y.contains(v))
            .map(|(u, v)| HfSet::ordered_pair(u, v))
            .collect();
        acc.union(&inside)
    });
    BinRel::new(rel).expect("union of relations")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WoKind {
    L,
    Lee,
    Z,
    Leeq,
}

/// One of `L`, `≺`, `Z(K)`, `≦(K)` over `X`, as a raw set.
pub fn wellorder_machinery(
    kind: WoKind,
    x: &HfSet,
    k: Option<&OrderedPairFamily>,
    guards: &Guards,
) -> Result<HfSet> {
    let l = en_l(x, guards)?;
    let sub = || -> Result<&OrderedPairFamily> {
        let k = k.ok_or_else(|| Error::MalformedInstance("K is required".into()))?;
        if !k.is_subfamily(&l) {
            return Err(Error::NotASubfamily(k.as_set().clone()));
        }
        Ok(k)
    };
    Ok(match kind {
        WoKind::L => l.as_set().clone(),
        WoKind::Lee => lee(&l).into_set(),
        WoKind::Z => en_z(sub()?),
        WoKind::Leeq => leeq(sub()?).into_set(),
    })
}

/// `⋖` on `Y ∪ {x}`: `≤` on `Y`, with `x` placed above everything.
pub fn extend_by_point(y: &HfSet, le: &BinRel, x: &HfSet) -> BinRel {
    let above = y
        .with(x.clone())
        .iter()
        .map(|u| HfSet::ordered_pair(u.clone(), x.clone()))
        .collect::<HfSet>();
    BinRel::new(le.as_set().union(&above)).expect("pairs only")
}

/// A well order on `X`: a maximal element `⟨Y, ≤⟩` of `(L, ≺)` by Zorn's lemma, with the
/// one-point extension ruling out `Y ≠ X`.
pub fn wellorder_construct(x: &HfSet, guards: &Guards, chooser: &dyn Choice) -> Result<BinRel> {
    if x.is_empty() {
        return Ok(BinRel::empty());
    }
    let l = en_l(x, guards)?;
    let order = lee(&l);
    let top = match zorn_maximal_element(l.as_set(), &order, chooser)? {
        ZornOutcome::Maximal(p) => p,
        ZornOutcome::Vacuous => return Err(Error::Invariant("L is empty for nonempty X".into())),
    };
    let (y, le) = OrderedPairFamily::decode(&top);
    if let Some(extra) = x.difference(&y).iter().next() {
        let wider = extend_by_point(&y, &le, extra);
        let p = HfSet::ordered_pair(y.with(extra.clone()), wider.into_set());
        let contradiction = l.as_set().contains(&p) && order.related(&top, &p) && p != top;
        return Err(Error::Invariant(if contradiction {
            format!("maximal {top} extends to {p}")
        } else {
            format!("maximal {top} misses {extra}")
        }));
    }
    require_well_order(&le, x).map_err(|e| Error::Invariant(e.to_string()))?;
    Ok(le)
}

/// The canonical order on `X`; the reference well order.
pub fn canonical_wellorder(x: &HfSet) -> BinRel {
    BinRel::from_fn(x, |a, b| a <= b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::choice::ChoicePolicy;
    use crate::order::is_partial_order;

    fn n(k: usize) -> HfSet {
        HfSet::numeral(k)
    }

    #[test]
    fn machinery_examples() {
        let g = Guards::default();
        let l1 = en_l(&n(1), &g).unwrap();
        assert_eq!(l1.len(), 1);
        let only = HfSet::ordered_pair(n(1), HfSet::singleton(HfSet::ordered_pair(n(0), n(0))));
        assert_eq!(l1.as_set(), &HfSet::singleton(only));
        assert_eq!(
            wellorder_machinery(WoKind::Z, &n(1), Some(&l1), &g).unwrap(),
            n(1)
        );
        assert_eq!(
            wellorder_machinery(WoKind::Leeq, &n(1), Some(&l1), &g).unwrap(),
            HfSet::singleton(HfSet::ordered_pair(n(0), n(0)))
        );
        // 3 + 3·2 + 6 well-ordered nonempty subsets of a 3-element set
        let l3 = en_l(&n(3), &g).unwrap();
        assert_eq!(l3.len(), 15);
        assert!(is_partial_order(&lee(&l3), l3.as_set()));
        assert!(matches!(en_l(&n(4), &g), Err(Error::SizeGuardExceeded { .. })));
        let stranger = OrderedPairFamily::from_pairs([(n(2), BinRel::identity(&n(2)))]);
        assert!(matches!(
            wellorder_machinery(WoKind::Z, &n(2), Some(&stranger), &g),
            Err(Error::NotASubfamily(_))
        ));
    }

    #[test]
    fn construct_examples() {
        let g = Guards::default();
        for k in 0..=3 {
            for p in [ChoicePolicy::Canonical, ChoicePolicy::Seeded(k as u64)] {
                let le = wellorder_construct(&n(k), &g, &p).unwrap();
                assert!(is_well_order(&le, &n(k)));
            }
        }
        assert!(is_well_order(&canonical_wellorder(&n(3)), &n(3)));
    }

    #[test]
    fn extension_is_strictly_above() {
        let g = Guards::default();
        let l = en_l(&n(2), &g).unwrap();
        let order = lee(&l);
        let y = HfSet::singleton(n(1));
        let le = BinRel::identity(&y);
        let wider = extend_by_point(&y, &le, &n(0));
        let lo = HfSet::ordered_pair(y.clone(), le.into_set());
        let hi = HfSet::ordered_pair(n(2), wider.into_set());
        assert!(l.as_set().contains(&hi));
        assert!(order.related(&lo, &hi));
    }
}
