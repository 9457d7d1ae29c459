use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use serde::Serialize;

use super::SetSystem;
use crate::choice::{Choice, ChoiceFn, ChoicePolicy};
use crate::error::{Error, Result};
use crate::hfs::HfSet;
use crate::order::{check_finite_character, extreme_member, is_nest, nests_within, Extreme, Family};

/// Largest family for which the least t-subclass is also computed as a literal intersection.
pub const LITERAL_T_SUBCLASS_LIMIT: usize = 10;

/// One application of χ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiStep {
    pub from: HfSet,
    pub to: HfSet,
}

/// χ over a fixed family and chooser, with `⋃f` computed once.
pub struct Tukey<'a> {
    system: &'a dyn SetSystem,
    points: HfSet,
    chooser: &'a dyn Choice,
}

impl<'a> Tukey<'a> {
    pub fn new(system: &'a dyn SetSystem, chooser: &'a dyn Choice) -> Self {
        Self {
            points: system.carrier(),
            system,
            chooser,
        }
    }

    /// `F′ = {x ∈ ⋃f : F ∪ {x} ∈ f}`.
    pub fn frontier(&self, f: &HfSet) -> HfSet {
        HfSet::from_sorted(
            self.points
                .iter()
                .filter(|x| self.system.contains(&f.with((*x).clone())))
                .cloned()
                .collect(),
        )
    }

    /// `χ(F)`: `F` itself when `F′ ∖ F` is empty, otherwise `F` plus the chosen point of it.
    pub fn chi(&self, f: &HfSet) -> Result<HfSet> {
        if !self.system.contains(f) {
            return Err(Error::NotAMember(f.clone()));
        }
        let fresh = self.frontier(f).difference(f);
        if fresh.is_empty() {
            return Ok(f.clone());
        }
        let picked = self.chooser.choose(&fresh)?;
        if !fresh.contains(&picked) {
            return Err(Error::NotAChoiceFunction(format!(
                "picked {picked} outside {fresh}"
            )));
        }
        Ok(f.with(picked))
    }

    /// Closure of `{∅}` under χ and unions of nests: the least t-subclass.
    pub fn least_t_subclass(&self) -> Result<TukeyState> {
        let empty = HfSet::empty();
        if !self.system.contains(&empty) {
            return Err(Error::PreconditionFailed(
                "∅ is not a member of the family".into(),
            ));
        }
        let mut g: BTreeMap<HfSet, Option<HfSet>> = BTreeMap::from([(empty, None)]);
        let mut trace = Vec::new();
        loop {
            let mut grew = false;
            let pending: Vec<HfSet> = g
                .iter()
                .filter(|(_, c)| c.is_none())
                .map(|(k, _)| k.clone())
                .collect();
            for f in pending {
                let to = self.chi(&f)?;
                trace.push(ChiStep {
                    from: f.clone(),
                    to: to.clone(),
                });
                g.insert(f, Some(to.clone()));
                if let Entry::Vacant(e) = g.entry(to) {
                    e.insert(None);
                    grew = true;
                }
            }
            // A nest's union is its largest member, so only a non-nest g can grow here.
            let current: HfSet = g.keys().cloned().collect();
            if !is_nest(&current) {
                for n in nests_within(&current) {
                    let u = n.big_union();
                    if let Entry::Vacant(e) = g.entry(u) {
                        if !self.system.contains(e.key()) {
                            return Err(Error::Invariant(format!(
                                "union of nest {n} is not a member of the family"
                            )));
                        }
                        e.insert(None);
                        grew = true;
                    }
                }
            }
            if !grew && g.values().all(Option::is_some) {
                break;
            }
        }
        let chi_of: BTreeMap<HfSet, HfSet> = g.into_iter().map(|(k, v)| (k, v.expect("closed"))).collect();
        let f0: HfSet = chi_of.keys().cloned().collect();
        let maximal = f0.big_union();
        Ok(TukeyState {
            f0,
            chi_of,
            trace,
            maximal,
        })
    }

    /// Runs the whole argument: f′0, then `M = ⋃f′0` with `M ∈ f` and `χ(M) = M`.
    pub fn run(&self) -> Result<TukeyState> {
        let state = self.least_t_subclass()?;
        let m = &state.maximal;
        if !self.system.contains(m) {
            return Err(Error::Invariant(format!("⋃f′0 = {m} is not a member of f")));
        }
        if self.chi(m)? != *m {
            return Err(Error::Invariant(format!("χ(⋃f′0) ≠ ⋃f′0 at {m}")));
        }
        Ok(state)
    }
}

/// The outcome of Tukey's construction: f′0, χ restricted to it, and `⋃f′0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TukeyState {
    pub f0: Family,
    #[serde(skip)]
    pub chi_of: BTreeMap<HfSet, HfSet>,
    pub trace: Vec<ChiStep>,
    pub maximal: HfSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TukeyAux {
    Mu,
    F1,
    Upsilon,
}

impl TukeyState {
    fn chi_in_f0(&self, d: &HfSet) -> Result<&HfSet> {
        self.chi_of.get(d).ok_or_else(|| Error::NotAMember(d.clone()))
    }

    /// `μ(C) = {A ∈ f′0 : A ⊆ C ∨ C ⊆ A}`.
    pub fn mu(&self, c: &HfSet) -> Result<Family> {
        if !self.f0.contains(c) {
            return Err(Error::NotAMember(c.clone()));
        }
        Ok(self
            .f0
            .iter()
            .filter(|a| a.is_subset(c) || c.is_subset(a))
            .cloned()
            .collect())
    }

    /// `f′1 = {C ∈ f′0 : μ(C) = f′0}`.
    pub fn f1(&self) -> Family {
        self.f0
            .iter()
            .filter(|c| self.mu(c).expect("member of f′0") == self.f0)
            .cloned()
            .collect()
    }

    /// `υ(D) = {A ∈ f′0 : A ⊆ D ∨ χ(D) ⊆ A}` for `D ∈ f′1`.
    pub fn upsilon(&self, d: &HfSet) -> Result<Family> {
        if !self.f1().contains(d) {
            return Err(Error::NotAMember(d.clone()));
        }
        let chi_d = self.chi_in_f0(d)?;
        Ok(self
            .f0
            .iter()
            .filter(|a| a.is_subset(d) || chi_d.is_subset(a))
            .cloned()
            .collect())
    }

    pub fn chi(&self, d: &HfSet) -> Result<HfSet> {
        self.chi_in_f0(d).cloned()
    }
}

pub fn tukey_auxiliary(kind: TukeyAux, arg: &HfSet, state: &TukeyState) -> Result<Family> {
    match kind {
        TukeyAux::Mu => state.mu(arg),
        TukeyAux::F1 => Ok(state.f1()),
        TukeyAux::Upsilon => state.upsilon(arg),
    }
}

/// `En_F′` over an explicit family.
pub fn frontier(f: &HfSet, family: &Family) -> HfSet {
    Tukey::new(family, &ChoicePolicy::Canonical).frontier(f)
}

/// χ over an explicit family, with a tabulated choice function of `⋃f`.
pub fn chi(f: &HfSet, family: &Family, c: &ChoiceFn) -> Result<HfSet> {
    let points = family.big_union();
    if c.base() != &points {
        return Err(Error::NotAChoiceFunction(format!(
            "defined over {} rather than ⋃f = {points}",
            c.base()
        )));
    }
    Tukey::new(family, c).chi(f)
}

/// t-subclass test, with the nest-union clause checked over every subfamily of `g`.
pub fn is_t_subclass(g: &Family, family: &dyn SetSystem, c: &dyn Choice) -> bool {
    let t = Tukey::new(family, c);
    g.iter().all(|x| family.contains(x))
        && g.contains(&HfSet::empty())
        && g.iter().all(|x| t.chi(x).is_ok_and(|y| g.contains(&y)))
        && nests_within(g).iter().all(|n| g.contains(&n.big_union()))
}

fn require_tukey_hypothesis(family: &Family) -> Result<()> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    match check_finite_character(family, &HfSet::empty())? {
        Ok(()) => Ok(()),
        Err(v) => Err(Error::NotFiniteCharacter(v.clause.to_string())),
    }
}

/// f′0 by closure. Requires a nonempty family of finite character.
pub fn least_t_subclass(family: &Family, c: &dyn Choice) -> Result<Family> {
    require_tukey_hypothesis(family).map_err(|e| Error::PreconditionFailed(e.to_string()))?;
    Ok(Tukey::new(family, c).least_t_subclass()?.f0)
}

/// f′0 as the intersection of every t-subclass among the subfamilies of `f`.
pub fn least_t_subclass_literal(family: &Family, c: &dyn Choice) -> Result<Family> {
    if family.len() > LITERAL_T_SUBCLASS_LIMIT {
        return Err(Error::SizeGuardExceeded {
            what: "literal t-subclass intersection",
            size: family.len(),
            limit: LITERAL_T_SUBCLASS_LIMIT,
        });
    }
    let mut meet = family.clone();
    for g in family.subsets() {
        if is_t_subclass(&g, family, c) {
            meet = meet.intersection(&g);
        }
    }
    Ok(meet)
}

/// Tukey's construction on an implicit system. The caller vouches for finite character.
pub fn tukey_on(system: &dyn SetSystem, c: &dyn Choice) -> Result<TukeyState> {
    Tukey::new(system, c).run()
}

/// Tukey's construction on an explicit family, checking the hypothesis and the maximality of
/// the result.
pub fn tukey_with(family: &Family, c: &dyn Choice) -> Result<TukeyState> {
    require_tukey_hypothesis(family)?;
    let state = tukey_on(family, c)?;
    if !extreme_member(Extreme::Max, &state.maximal, family)? {
        return Err(Error::Invariant(format!(
            "{} is not a maximal member",
            state.maximal
        )));
    }
    Ok(state)
}

/// A maximal member of a nonempty family of finite character, using the canonical chooser.
pub fn tukey_maximal_member(family: &Family) -> Result<HfSet> {
    Ok(tukey_with(family, &ChoicePolicy::Canonical)?.maximal)
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

    fn s(k: usize) -> HfSet {
        HfSet::singleton(n(k))
    }

    #[test]
    fn frontier_examples() {
        let p2 = n(2).power_set();
        assert_eq!(frontier(&n(1), &p2), n(2));
        assert_eq!(frontier(&HfSet::empty(), &n(1)), HfSet::empty());
        assert_eq!(frontier(&s(0), &set(&[HfSet::empty(), s(0), s(1)])), s(0));
    }

    #[test]
    fn chi_examples() {
        let p2 = n(2).power_set();
        let c = ChoiceFn::tabulate(&n(2), &ChoicePolicy::Canonical).unwrap();
        assert_eq!(chi(&HfSet::empty(), &p2, &c).unwrap(), s(0));
        assert_eq!(chi(&n(2), &p2, &c).unwrap(), n(2));
        assert_eq!(chi(&n(3), &p2, &c), Err(Error::NotAMember(n(3))));
        let wrong = ChoiceFn::tabulate(&n(1), &ChoicePolicy::Canonical).unwrap();
        assert!(matches!(
            chi(&n(1), &p2, &wrong),
            Err(Error::NotAChoiceFunction(_))
        ));
    }

    #[test]
    fn t_subclass_examples() {
        let p2 = n(2).power_set();
        let c = ChoicePolicy::Canonical;
        assert!(is_t_subclass(&p2, &p2, &c));
        let f0 = least_t_subclass(&p2, &c).unwrap();
        assert_eq!(f0, set(&[HfSet::empty(), n(1), n(2)]));
        assert!(is_t_subclass(&f0, &p2, &c));
        assert!(!is_t_subclass(&p2.without(&HfSet::empty()), &p2, &c));
        assert_eq!(least_t_subclass_literal(&p2, &c).unwrap(), f0);
        assert_eq!(least_t_subclass(&n(1), &c).unwrap(), n(1));
        assert!(matches!(
            least_t_subclass(&HfSet::empty(), &c),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn auxiliary_classes() {
        let state = tukey_with(&n(2).power_set(), &ChoicePolicy::Canonical).unwrap();
        assert_eq!(state.mu(&n(1)).unwrap(), state.f0);
        assert_eq!(state.f1(), state.f0);
        assert_eq!(state.upsilon(&n(1)).unwrap(), state.f0);
        assert_eq!(state.mu(&s(1)), Err(Error::NotAMember(s(1))));
    }

    #[test]
    fn maximal_member_examples() {
        assert_eq!(tukey_maximal_member(&n(2).power_set()).unwrap(), n(2));
        assert_eq!(tukey_maximal_member(&n(1)).unwrap(), HfSet::empty());
        assert_eq!(tukey_maximal_member(&HfSet::empty()), Err(Error::EmptyFamily));
        assert!(matches!(
            tukey_maximal_member(&set(&[s(0)])),
            Err(Error::NotFiniteCharacter(_))
        ));
        // two incomparable maximal members; the seed decides which one
        let f = set(&[HfSet::empty(), s(0), s(1)]);
        for seed in 0..8 {
            let m = tukey_with(&f, &ChoicePolicy::Seeded(seed)).unwrap().maximal;
            assert!(m == s(0) || m == s(1));
        }
    }
}
