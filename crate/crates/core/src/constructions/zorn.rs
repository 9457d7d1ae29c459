use super::maximal_principle_member;
use crate::choice::Choice;
use crate::error::{Error, Result};
use crate::hfs::HfSet;
use crate::order::{chains, check_partial_order, extreme_element, is_bound, BinRel, Bound, Extreme};

/// `F_x = {u ∈ X : u ≤ x}`.
pub fn lower_set(carrier: &HfSet, le: &BinRel, x: &HfSet) -> HfSet {
    HfSet::from_sorted(carrier.iter().filter(|u| le.related(u, x)).cloned().collect())
}

/// `{F_a : a ∈ A}`.
pub fn lower_sets(carrier: &HfSet, a: &HfSet, le: &BinRel) -> HfSet {
    a.iter().map(|x| lower_set(carrier, le, x)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZornArg {
    Element(HfSet),
    All,
}

/// `F_x` for one element, or `{F_x : x ∈ X}`.
pub fn zorn_family(arg: &ZornArg, carrier: &HfSet, le: &BinRel) -> Result<HfSet> {
    check_partial_order(le, carrier).map_err(|v| Error::NotAPartialOrder(v.clause.to_string()))?;
    Ok(match arg {
        ZornArg::Element(x) => lower_set(carrier, le, x),
        ZornArg::All => lower_sets(carrier, carrier, le),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "outcome", content = "element", rename_all = "snake_case")]
pub enum ZornOutcome {
    /// `X = ∅`: the conclusion holds vacuously.
    Vacuous,
    Maximal(HfSet),
}

impl ZornOutcome {
    pub fn element(&self) -> Option<&HfSet> {
        match self {
            ZornOutcome::Vacuous => None,
            ZornOutcome::Maximal(v) => Some(v),
        }
    }
}

/// Every chain of `(X, ≤)` has an upper bound in `X`.
pub fn check_chain_bounds(carrier: &HfSet, le: &BinRel) -> Result<()> {
    for chain in chains(carrier, le) {
        let mut bounded = false;
        for y in carrier.iter() {
            if is_bound(Bound::Upper, y, &chain, carrier, le)? {
                bounded = true;
                break;
            }
        }
        if !bounded {
            return Err(Error::HypothesisFails(chain));
        }
    }
    Ok(())
}

/// A maximal element of a poset whose chains are bounded: a maximal member `F_v` of
/// `{F_x : x ∈ X}` from the maximal principle, read back as `v`.
pub fn zorn_maximal_element(carrier: &HfSet, le: &BinRel, chooser: &dyn Choice) -> Result<ZornOutcome> {
    check_partial_order(le, carrier).map_err(|v| Error::NotAPartialOrder(v.clause.to_string()))?;
    if carrier.is_empty() {
        return Ok(ZornOutcome::Vacuous);
    }
    check_chain_bounds(carrier, le)?;
    let ff = lower_sets(carrier, carrier, le);
    let m = maximal_principle_member(&ff, chooser)?;
    let mut preimage = carrier.iter().filter(|v| lower_set(carrier, le, v) == m);
    let v = preimage
        .next()
        .cloned()
        .ok_or_else(|| Error::Invariant(format!("{m} is not of the form F_v")))?;
    if preimage.next().is_some() {
        return Err(Error::Invariant(format!("{m} is F_v for two distinct v")));
    }
    if !extreme_element(Extreme::Max, &v, carrier, le)? {
        return Err(Error::Invariant(format!("{v} is not a maximal element")));
    }
    Ok(ZornOutcome::Maximal(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::choice::ChoicePolicy;

    fn n(k: usize) -> HfSet {
        HfSet::numeral(k)
    }

    fn leq(k: usize) -> BinRel {
        BinRel::from_fn(&n(k), |a, b| a.is_subset(b))
    }

    #[test]
    fn lower_set_examples() {
        assert_eq!(
            zorn_family(&ZornArg::Element(n(1)), &n(3), &leq(3)).unwrap(),
            n(2)
        );
        assert_eq!(
            zorn_family(&ZornArg::Element(n(0)), &n(3), &leq(3)).unwrap(),
            n(1)
        );
        assert_eq!(
            zorn_family(&ZornArg::All, &n(3), &leq(3)).unwrap(),
            HfSet::from_members([n(1), n(2), n(3)])
        );
        assert!(matches!(
            zorn_family(&ZornArg::All, &n(2), &BinRel::empty()),
            Err(Error::NotAPartialOrder(_))
        ));
    }

    #[test]
    fn zorn_examples() {
        let c = ChoicePolicy::Canonical;
        assert_eq!(
            zorn_maximal_element(&n(3), &leq(3), &c).unwrap(),
            ZornOutcome::Maximal(n(2))
        );
        let id = BinRel::identity(&n(2));
        for seed in 0..6 {
            let v = zorn_maximal_element(&n(2), &id, &ChoicePolicy::Seeded(seed)).unwrap();
            assert!(matches!(v, ZornOutcome::Maximal(ref x) if *x == n(0) || *x == n(1)));
        }
        assert_eq!(
            zorn_maximal_element(&HfSet::empty(), &BinRel::empty(), &c).unwrap(),
            ZornOutcome::Vacuous
        );
    }
}
