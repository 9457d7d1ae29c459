//! The constructive route through the choice principles: Tukey's lemma, the Hausdorff and
//! maximal principles, Zermelo's postulate, Zorn's lemma, the well-ordering theorem, and choice
//! functions rebuilt from the last two.
//!
//! Every construction takes a [`Choice`](crate::choice::Choice) so that it can be rerun with a
//! different chooser; none of the postconditions depend on which member gets picked.

mod ac;
mod lemmas;
mod maximal;
mod tukey;
mod wellorder;
mod zermelo;
mod zorn;

pub use ac::{choice_from_wellorder, choice_from_zermelo};
pub use lemmas::{verify_lemma, LemmaId, LemmaInstance, LemmaVerdict, Shape as LemmaShape};
pub use maximal::{
    check_maximal_principle_hypothesis, hausdorff_extend_nest, hausdorff_maximal_nest,
    maximal_principle_member, MAX_PRINCIPLE_HYPOTHESIS_LIMIT,
};
pub use tukey::{
    chi, frontier, is_t_subclass, least_t_subclass, least_t_subclass_literal, tukey_auxiliary,
    tukey_maximal_member, tukey_on, tukey_with, ChiStep, Tukey, TukeyAux, TukeyState,
    LITERAL_T_SUBCLASS_LIMIT,
};
pub use wellorder::{
    canonical_wellorder, chains_of_l, en_l, en_z, extend_by_point, lee, leeq, wellorder_construct,
    wellorder_machinery, OrderedPairFamily, WoKind,
};
pub use zermelo::{check_disjoint_family, en_t, en_tb, partial_transversals, zermelo_transversal};
pub use zorn::{
    check_chain_bounds, lower_set, lower_sets, zorn_family, zorn_maximal_element, ZornArg, ZornOutcome,
};

use crate::hfs::HfSet;
use crate::order::is_nest;

/// Size limits for the super-exponential constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Guards {
    /// Largest `X` for which `L` (all well-ordered nonempty subsets) is enumerated.
    pub en_l: usize,
    /// Largest `⋃A` for which the literal `T` is enumerated subset by subset.
    pub en_t_atoms: usize,
    /// Largest `∏(|D| + 1)` for which the partial transversals are materialized.
    pub transversals: usize,
    /// Largest `X` accepted by the choice-from-Zermelo pipeline.
    pub ac_zermelo: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Self {
            en_l: 3,
            en_t_atoms: 3,
            transversals: 4096,
            ac_zermelo: 3,
        }
    }
}

/// A family of sets that can answer membership without being listed.
pub trait SetSystem {
    fn contains(&self, s: &HfSet) -> bool;
    /// `⋃f`, the points a member can be extended by.
    fn carrier(&self) -> HfSet;
}

impl SetSystem for HfSet {
    fn contains(&self, s: &HfSet) -> bool {
        HfSet::contains(self, s)
    }

    fn carrier(&self) -> HfSet {
        self.big_union()
    }
}

impl<S: SetSystem + ?Sized> SetSystem for &S {
    fn contains(&self, s: &HfSet) -> bool {
        (**self).contains(s)
    }

    fn carrier(&self) -> HfSet {
        (**self).carrier()
    }
}

/// `{n : n ⊆ A ∧ Nest n}`.
#[derive(Clone, Debug)]
pub struct NestsIn(pub HfSet);

impl SetSystem for NestsIn {
    fn contains(&self, n: &HfSet) -> bool {
        n.is_subset(&self.0) && is_nest(n)
    }

    fn carrier(&self) -> HfSet {
        // every singleton is a nest
        self.0.clone()
    }
}

/// `{F ∈ f : F ∪ A ∈ f}`, whose maximal members contain `A`.
#[derive(Clone, Debug)]
pub struct Anchored<S> {
    pub inner: S,
    pub anchor: HfSet,
}

impl<S: SetSystem> SetSystem for Anchored<S> {
    fn contains(&self, s: &HfSet) -> bool {
        self.inner.contains(s) && self.inner.contains(&s.union(&self.anchor))
    }

    fn carrier(&self) -> HfSet {
        // For downward-closed `f`, x lies in some member iff {x} does.
        HfSet::from_sorted(
            self.inner
                .carrier()
                .iter()
                .filter(|x| self.contains(&HfSet::singleton((*x).clone())))
                .cloned()
                .collect(),
        )
    }
}

/// Lists an implicit system by testing every subset of its carrier.
pub fn materialize(system: &dyn SetSystem, limit: usize) -> crate::Result<HfSet> {
    let carrier = system.carrier();
    if carrier.len() > limit {
        return Err(crate::Error::SizeGuardExceeded {
            what: "set system carrier",
            size: carrier.len(),
            limit,
        });
    }
    Ok(carrier.subsets().filter(|s| system.contains(s)).collect())
}
