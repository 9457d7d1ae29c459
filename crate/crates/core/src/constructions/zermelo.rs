use super::{maximal_principle_member, Guards};
use crate::choice::Choice;
use crate::error::{Error, Result};
use crate::hfs::HfSet;
use crate::order::Family;

/// `∅ ∉ A` and distinct members of `A` are disjoint.
pub fn check_disjoint_family(a: &Family) -> Result<()> {
    if a.contains(&HfSet::empty()) {
        return Err(Error::EmptyMemberPresent);
    }
    let ms = a.members();
    for (i, x) in ms.iter().enumerate() {
        if let Some(y) = ms[i + 1..].iter().find(|y| !x.is_disjoint(y)) {
            return Err(Error::NotDisjoint(x.clone(), y.clone()));
        }
    }
    Ok(())
}

/// `T_B`: the `K ⊆ ⋃A` missing every `D ∈ A ∖ B` and meeting every `D ∈ B` in one point.
pub fn en_tb(b: &Family, a: &Family) -> HfSet {
    let points = a.big_union();
    let rest = a.difference(b);
    points
        .subsets()
        .filter(|k| rest.iter().all(|d| d.is_disjoint(k)) && b.iter().all(|d| d.intersection(k).len() == 1))
        .collect()
}

/// `T = {K : ∃B ⊆ A, K ∈ T_B}`, enumerated literally.
pub fn en_t(a: &Family, guards: &Guards) -> Result<HfSet> {
    let points = a.big_union().len();
    if points > guards.en_t_atoms {
        return Err(Error::SizeGuardExceeded {
            what: "literal T (points of ⋃A)",
            size: points,
            limit: guards.en_t_atoms,
        });
    }
    let mut out = HfSet::empty();
    for b in a.subsets() {
        out = out.union(&en_tb(&b, a));
    }
    Ok(out)
}

/// `T` for a disjoint family, built directly: pick at most one point from each member.
pub fn partial_transversals(a: &Family, guards: &Guards) -> Result<HfSet> {
    let size = a
        .iter()
        .try_fold(1usize, |acc, d| acc.checked_mul(d.len() + 1))
        .filter(|&s| s <= guards.transversals);
    let Some(_) = size else {
        return Err(Error::SizeGuardExceeded {
            what: "partial transversals",
            size: a.iter().map(|d| d.len() + 1).fold(1usize, usize::saturating_mul),
            limit: guards.transversals,
        });
    };
    let mut acc = vec![HfSet::empty()];
    for d in a.iter() {
        let mut next = Vec::with_capacity(acc.len() * (d.len() + 1));
        for k in &acc {
            next.push(k.clone());
            next.extend(d.iter().map(|x| k.with(x.clone())));
        }
        acc = next;
    }
    Ok(HfSet::from_members(acc))
}

/// A set meeting every member of a disjoint ∅-free family in exactly one point: a maximal
/// member of the partial transversals, via the maximal principle.
pub fn zermelo_transversal(a: &Family, chooser: &dyn Choice, guards: &Guards) -> Result<HfSet> {
    check_disjoint_family(a)?;
    let t = partial_transversals(a, guards)?;
    let c = maximal_principle_member(&t, chooser)?;
    if let Some(d) = a.iter().find(|d| d.intersection(&c).len() != 1) {
        return Err(Error::Invariant(format!("{d} ∩ {c} is not a singleton")));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::choice::ChoicePolicy;

    fn n(k: usize) -> HfSet {
        HfSet::numeral(k)
    }

    fn set(items: &[HfSet]) -> HfSet {
        HfSet::from_members(items.iter().cloned())
    }

    #[test]
    fn transversal_examples() {
        let g = Guards::default();
        let a = set(&[set(&[n(0)]), set(&[n(1), n(2)])]);
        let c = zermelo_transversal(&a, &ChoicePolicy::Canonical, &g).unwrap();
        assert!(c == set(&[n(0), n(1)]) || c == set(&[n(0), n(2)]));
        for seed in 0..5 {
            let c = zermelo_transversal(&a, &ChoicePolicy::Seeded(seed), &g).unwrap();
            assert!(a.iter().all(|d| d.intersection(&c).len() == 1));
        }
        assert_eq!(
            zermelo_transversal(&HfSet::empty(), &ChoicePolicy::Canonical, &g).unwrap(),
            HfSet::empty()
        );
        assert_eq!(
            zermelo_transversal(&n(1), &ChoicePolicy::Canonical, &g),
            Err(Error::EmptyMemberPresent)
        );
        assert!(matches!(
            zermelo_transversal(&set(&[n(1), n(2)]), &ChoicePolicy::Canonical, &g),
            Err(Error::NotDisjoint(_, _))
        ));
    }

    #[test]
    fn direct_t_matches_literal_t() {
        let g = Guards::default();
        let a = set(&[set(&[n(0)]), set(&[n(1), n(2)])]);
        let t = partial_transversals(&a, &g).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(en_t(&a, &g).unwrap(), t);
        assert_eq!(en_tb(&HfSet::empty(), &a), n(1));
    }

    #[test]
    fn guard_trips_before_blowup() {
        let g = Guards {
            transversals: 5,
            ..Guards::default()
        };
        let a = set(&[set(&[n(0)]), set(&[n(1), n(2)])]);
        assert!(matches!(
            partial_transversals(&a, &g),
            Err(Error::SizeGuardExceeded { .. })
        ));
    }
}
