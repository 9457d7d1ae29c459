use super::{tukey_on, Anchored, NestsIn};
use crate::choice::Choice;
use crate::error::{Error, Result};
use crate::hfs::HfSet;
use crate::order::{extreme_member, is_nest, nests_within, Extreme, Family};

/// Largest family on which the maximal principle's hypothesis is checked nest by nest.
pub const MAX_PRINCIPLE_HYPOTHESIS_LIMIT: usize = 16;

/// A maximal nest in `A` containing the nest `N`, found as a maximal member of
/// `{F ∈ nests(A) : F ∪ N ∈ nests(A)}`.
pub fn hausdorff_extend_nest(a: &Family, n: &Family, chooser: &dyn Choice) -> Result<Family> {
    if !n.is_subset(a) {
        return Err(Error::NotASubfamily(n.clone()));
    }
    if !is_nest(n) {
        return Err(Error::NotANest(n.clone()));
    }
    let system = Anchored {
        inner: NestsIn(a.clone()),
        anchor: n.clone(),
    };
    let u = tukey_on(&system, chooser)?.maximal;
    if !n.is_subset(&u) {
        return Err(Error::Invariant(format!("maximal nest {u} does not contain {n}")));
    }
    // Nests are downward closed, so a one-point check settles maximality.
    if let Some(x) = a
        .iter()
        .find(|x| !u.contains(x) && is_nest(&u.with((*x).clone())))
    {
        return Err(Error::Invariant(format!("nest {u} extends by {x}")));
    }
    Ok(u)
}

/// A maximal nest in `A`, extending the empty nest.
pub fn hausdorff_maximal_nest(a: &Family, chooser: &dyn Choice) -> Result<Family> {
    hausdorff_extend_nest(a, &HfSet::empty(), chooser)
}

/// Every nest in `A` has a member of `A` containing all of its members.
pub fn check_maximal_principle_hypothesis(a: &Family) -> Result<()> {
    if a.len() > MAX_PRINCIPLE_HYPOTHESIS_LIMIT {
        return Err(Error::SizeGuardExceeded {
            what: "maximal-principle hypothesis sweep",
            size: a.len(),
            limit: MAX_PRINCIPLE_HYPOTHESIS_LIMIT,
        });
    }
    for n in nests_within(a) {
        let top = n.big_union();
        if !a.iter().any(|m| top.is_subset(m)) {
            return Err(Error::HypothesisFails(n));
        }
    }
    Ok(())
}

/// A maximal member of `A`: take a maximal nest `u`, then the first member of `A` containing
/// every member of `u`.
///
/// The hypothesis is swept exhaustively for families up to
/// [`MAX_PRINCIPLE_HYPOTHESIS_LIMIT`] members; beyond that only the result is checked.
pub fn maximal_principle_member(a: &Family, chooser: &dyn Choice) -> Result<HfSet> {
    if a.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if a.len() <= MAX_PRINCIPLE_HYPOTHESIS_LIMIT {
        check_maximal_principle_hypothesis(a)?;
    }
    let u = hausdorff_maximal_nest(a, chooser)?;
    let top = u.big_union();
    let m = a
        .iter()
        .find(|m| top.is_subset(m))
        .cloned()
        .ok_or_else(|| Error::HypothesisFails(u.clone()))?;
    if !extreme_member(Extreme::Max, &m, a)? {
        return Err(Error::Invariant(format!("{m} is not a maximal member")));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::choice::ChoicePolicy;

    fn n(k: usize) -> HfSet {
        HfSet::numeral(k)
    }

    fn s(k: usize) -> HfSet {
        HfSet::singleton(n(k))
    }

    fn set(items: &[HfSet]) -> HfSet {
        HfSet::from_members(items.iter().cloned())
    }

    #[test]
    fn hausdorff_examples() {
        let c = ChoicePolicy::Canonical;
        let a = set(&[HfSet::empty(), s(0), s(1)]);
        let u = hausdorff_extend_nest(&a, &set(&[HfSet::empty()]), &c).unwrap();
        assert_eq!(u, set(&[HfSet::empty(), s(0)]));
        // every maximal nest in A has two members
        let u = hausdorff_maximal_nest(&a, &c).unwrap();
        assert!(is_nest(&u) && u.len() == 2);
        assert_eq!(
            hausdorff_extend_nest(&a, &set(&[s(0), s(1)]), &c),
            Err(Error::NotANest(set(&[s(0), s(1)])))
        );
        assert_eq!(
            hausdorff_extend_nest(&a, &set(&[n(2)]), &c),
            Err(Error::NotASubfamily(set(&[n(2)])))
        );
        assert_eq!(
            hausdorff_maximal_nest(&HfSet::empty(), &c).unwrap(),
            HfSet::empty()
        );
    }

    #[test]
    fn maximal_principle_examples() {
        let c = ChoicePolicy::Canonical;
        assert_eq!(maximal_principle_member(&n(2).power_set(), &c).unwrap(), n(2));
        for seed in 0..6 {
            let m = maximal_principle_member(&set(&[s(0), s(1)]), &ChoicePolicy::Seeded(seed)).unwrap();
            assert!(m == s(0) || m == s(1));
        }
        assert_eq!(
            maximal_principle_member(&HfSet::empty(), &c),
            Err(Error::EmptyFamily)
        );
    }

    #[test]
    fn hypothesis_holds_on_every_small_family() {
        // A finite nonempty nest contains its largest member, and the empty nest is bounded
        // by any member, so only the empty family violates the hypothesis.
        for a in n(2).power_set().power_set().subsets() {
            let expected = if a.is_empty() {
                Err(Error::HypothesisFails(HfSet::empty()))
            } else {
                Ok(())
            };
            assert_eq!(check_maximal_principle_hypothesis(&a), expected, "{a}");
        }
    }
}
