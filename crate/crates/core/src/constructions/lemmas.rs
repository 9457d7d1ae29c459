use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{
    chains_of_l, en_l, en_z, is_t_subclass, least_t_subclass_literal, lee, leeq, lower_set, lower_sets,
    materialize, tukey_on, tukey_with, Anchored, Guards, NestsIn, Tukey, TukeyState,
    LITERAL_T_SUBCLASS_LIMIT,
};
use crate::choice::Choice;
use crate::error::{Error, Result};
use crate::hfs::HfSet;
use crate::order::{
    check_finite_char_properties, check_finite_character, check_partial_order, extreme_element,
    extreme_member, is_bound, is_chain, is_nest, is_well_order, nests_within, BinRel, Bound, Extreme,
    FINITE_CHARACTER_POOL_LIMIT,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    PropertyX,
    PropertyF0,
    PropertyFinChar,
    T1,
    T2,
    T3,
    T4,
    H1,
    H2,
    Z1,
    Z2,
    Z3,
    W1,
    W2,
    W3,
    PropertyFF,
}

impl LemmaId {
    pub const ALL: [LemmaId; 16] = [
        LemmaId::PropertyX,
        LemmaId::PropertyF0,
        LemmaId::PropertyFinChar,
        LemmaId::T1,
        LemmaId::T2,
        LemmaId::T3,
        LemmaId::T4,
        LemmaId::H1,
        LemmaId::H2,
        LemmaId::Z1,
        LemmaId::Z2,
        LemmaId::Z3,
        LemmaId::W1,
        LemmaId::W2,
        LemmaId::W3,
        LemmaId::PropertyFF,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::PropertyX => "Property_x",
            LemmaId::PropertyF0 => "Property_f'0",
            LemmaId::PropertyFinChar => "Property_FinChar",
            LemmaId::T1 => "LemmaT1",
            LemmaId::T2 => "LemmaT2",
            LemmaId::T3 => "LemmaT3",
            LemmaId::T4 => "LemmaT4",
            LemmaId::H1 => "LemmaH1",
            LemmaId::H2 => "LemmaH2",
            LemmaId::Z1 => "LemmaZ1",
            LemmaId::Z2 => "LemmaZ2",
            LemmaId::Z3 => "LemmaZ3",
            LemmaId::W1 => "LemmaW1",
            LemmaId::W2 => "LemmaW2",
            LemmaId::W3 => "LemmaW3",
            LemmaId::PropertyFF => "Property_FF",
        }
    }

    /// What the instance has to supply.
    pub fn shape(self) -> Shape {
        match self {
            LemmaId::PropertyX
            | LemmaId::PropertyF0
            | LemmaId::PropertyFinChar
            | LemmaId::T1
            | LemmaId::T2
            | LemmaId::T3
            | LemmaId::T4
            | LemmaId::H1 => Shape::FiniteCharacterFamily,
            LemmaId::H2 => Shape::AnyFamily,
            LemmaId::Z1 | LemmaId::Z2 | LemmaId::Z3 | LemmaId::PropertyFF => Shape::Poset,
            LemmaId::W1 | LemmaId::W2 | LemmaId::W3 => Shape::Carrier,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    FiniteCharacterFamily,
    AnyFamily,
    Poset,
    Carrier,
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for LemmaId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .trim()
            .replace('′', "'")
            .chars()
            .filter(|c| *c != '_')
            .flat_map(char::to_lowercase)
            .collect();
        LemmaId::ALL
            .into_iter()
            .find(|id| {
                let name: String = id
                    .name()
                    .chars()
                    .filter(|c| *c != '_')
                    .flat_map(char::to_lowercase)
                    .collect();
                name == key || name.strip_prefix("lemma") == Some(key.as_str())
            })
            .ok_or_else(|| Error::UnknownLemma(s.to_string()))
    }
}

/// Arguments for a lemma check. Optional fields narrow the sweep to one value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaInstance {
    pub family: Option<HfSet>,
    pub set: Option<HfSet>,
    pub carrier: Option<HfSet>,
    pub relation: Option<BinRel>,
    pub subset: Option<HfSet>,
    pub element: Option<HfSet>,
}

impl LemmaInstance {
    pub fn family(f: HfSet) -> Self {
        Self {
            family: Some(f),
            ..Self::default()
        }
    }

    pub fn poset(carrier: HfSet, le: BinRel) -> Self {
        Self {
            carrier: Some(carrier),
            relation: Some(le),
            ..Self::default()
        }
    }

    pub fn carrier(x: HfSet) -> Self {
        Self {
            carrier: Some(x),
            ..Self::default()
        }
    }

    pub fn with_set(mut self, s: HfSet) -> Self {
        self.set = Some(s);
        self
    }

    pub fn with_subset(mut self, s: HfSet) -> Self {
        self.subset = Some(s);
        self
    }

    pub fn with_element(mut self, s: HfSet) -> Self {
        self.element = Some(s);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaVerdict {
    pub lemma: LemmaId,
    pub holds: bool,
    /// Number of individual cases examined.
    pub checked: usize,
    pub counterexample: Option<String>,
}

struct Tally {
    checked: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            checked: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn verdict(self, lemma: LemmaId) -> LemmaVerdict {
        LemmaVerdict {
            lemma,
            holds: self.failure.is_none(),
            checked: self.checked,
            counterexample: self.failure,
        }
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedInstance(msg.into())
}

fn need<'a, T>(field: &'a Option<T>, name: &str) -> Result<&'a T> {
    field
        .as_ref()
        .ok_or_else(|| malformed(format!("missing `{name}`")))
}

fn finite_character_family(inst: &LemmaInstance) -> Result<&HfSet> {
    let f = need(&inst.family, "family")?;
    if f.is_empty() {
        return Err(malformed("family is empty"));
    }
    if let Err(v) = check_finite_character(f, &HfSet::empty())? {
        return Err(malformed(format!(
            "family is not of finite character: {}",
            v.clause
        )));
    }
    Ok(f)
}

fn poset(inst: &LemmaInstance) -> Result<(&HfSet, &BinRel)> {
    let x = need(&inst.carrier, "carrier")?;
    let le = need(&inst.relation, "relation")?;
    check_partial_order(le, x).map_err(|v| malformed(format!("not a partial order: {}", v.clause)))?;
    Ok((x, le))
}

/// The chosen members of `pool`, or all of them.
fn focus(pick: &Option<HfSet>, pool: &HfSet, name: &str) -> Result<Vec<HfSet>> {
    match pick {
        Some(v) if pool.contains(v) => Ok(vec![v.clone()]),
        Some(v) => Err(malformed(format!("`{name}` {v} is not in {pool}"))),
        None => Ok(pool.members().to_vec()),
    }
}

fn subsets_focus(pick: &Option<HfSet>, x: &HfSet) -> Result<Vec<HfSet>> {
    match pick {
        Some(a) if a.is_subset(x) => Ok(vec![a.clone()]),
        Some(a) => Err(malformed(format!("`subset` {a} is not a subset of {x}"))),
        None => Ok(x.subsets().collect()),
    }
}

/// Checks one named lemma on one instance, exhaustively over whatever the instance leaves open.
pub fn verify_lemma(
    id: LemmaId,
    inst: &LemmaInstance,
    chooser: &dyn Choice,
    guards: &Guards,
) -> Result<LemmaVerdict> {
    let mut t = Tally::new();
    match id.shape() {
        Shape::FiniteCharacterFamily => {
            let f = finite_character_family(inst)?;
            family_lemma(id, f, inst, chooser, &mut t)?;
        }
        Shape::AnyFamily => {
            let a = need(&inst.family, "family")?;
            if a.len() > FINITE_CHARACTER_POOL_LIMIT {
                return Err(Error::SizeGuardExceeded {
                    what: "nests in A",
                    size: a.len(),
                    limit: FINITE_CHARACTER_POOL_LIMIT,
                });
            }
            let nests = materialize(&NestsIn(a.clone()), FINITE_CHARACTER_POOL_LIMIT)?;
            let listed: HfSet = nests_within(a).into_iter().collect();
            t.check(nests == listed, || format!("nest enumeration disagrees on {a}"));
            let fc = check_finite_character(&nests, a)?;
            t.check(fc.is_ok(), || format!("nests in {a}: {:?}", fc.err()));
        }
        Shape::Poset => {
            let (x, le) = poset(inst)?;
            poset_lemma(id, x, le, inst, &mut t)?;
        }
        Shape::Carrier => {
            let x = need(&inst.carrier, "carrier")?;
            carrier_lemma(id, x, guards, &mut t)?;
        }
    }
    Ok(t.verdict(id))
}

fn family_lemma(
    id: LemmaId,
    f: &HfSet,
    inst: &LemmaInstance,
    chooser: &dyn Choice,
    t: &mut Tally,
) -> Result<()> {
    let tukey = Tukey::new(f, chooser);
    let state: TukeyState = tukey_with(f, chooser).map_err(|e| malformed(e.to_string()))?;
    match id {
        LemmaId::PropertyX => {
            for x in focus(&inst.set, f, "set")? {
                let y = tukey.chi(&x)?;
                t.check(x.is_subset(&y), || format!("{x} ⊄ χ({x}) = {y}"));
                t.check(y == x || y.len() == x.len() + 1, || {
                    format!("χ({x}) = {y} grew by more than one")
                });
            }
        }
        LemmaId::PropertyF0 => {
            let f0 = &state.f0;
            t.check(is_t_subclass(f0, f, chooser), || {
                format!("f′0 = {f0} is not a t-subclass")
            });
            if f.len() <= LITERAL_T_SUBCLASS_LIMIT {
                for g in f.subsets().filter(|g| is_t_subclass(g, f, chooser)) {
                    t.check(f0.is_subset(&g), || format!("f′0 ⊄ t-subclass {g}"));
                }
                let literal = least_t_subclass_literal(f, chooser)?;
                t.check(&literal == f0, || {
                    format!("closure {f0} ≠ intersection {literal}")
                });
            } else {
                t.check(f0.is_subset(f), || "f′0 ⊄ f".to_string());
            }
        }
        LemmaId::PropertyFinChar => {
            let r = check_finite_char_properties(f)?;
            t.check(r.is_ok(), || format!("{:?}", r.err()));
        }
        LemmaId::T1 => {
            for d in focus(&inst.set, &state.f1(), "set")? {
                let v = state.upsilon(&d)?;
                t.check(is_t_subclass(&v, f, chooser), || {
                    format!("υ({d}) = {v} is not a t-subclass")
                });
            }
        }
        LemmaId::T2 => {
            let f1 = state.f1();
            for d in focus(&inst.set, &f1, "set")? {
                let x = state.chi(&d)?;
                t.check(f1.contains(&x), || format!("χ({d}) = {x} ∉ f′1"));
            }
        }
        LemmaId::T3 => {
            t.check(is_nest(&state.f0), || format!("f′0 = {} is not a nest", state.f0));
            t.check(state.f1() == state.f0, || "f′1 ≠ f′0".to_string());
        }
        LemmaId::T4 => {
            let m = &state.maximal;
            t.check(f.contains(m), || format!("⋃f′0 = {m} ∉ f"));
            let y = tukey.chi(m)?;
            t.check(&y == m, || format!("χ({m}) = {y}"));
        }
        LemmaId::H1 => {
            for a in focus(&inst.set, f, "set")? {
                let anchored = Anchored {
                    inner: f,
                    anchor: a.clone(),
                };
                let f1: HfSet = f.iter().filter(|x| f.contains(&x.union(&a))).cloned().collect();
                let fc = check_finite_character(&f1, &HfSet::empty())?;
                t.check(fc.is_ok(), || format!("En_f1 for {a} is not of finite character"));
                let m = tukey_on(&anchored, chooser)?.maximal;
                t.check(extreme_member(Extreme::Max, &m, f)? && a.is_subset(&m), || {
                    format!("{m} is not a maximal member containing {a}")
                });
            }
        }
        _ => unreachable!("not a family lemma"),
    }
    Ok(())
}

fn poset_lemma(id: LemmaId, x: &HfSet, le: &BinRel, inst: &LemmaInstance, t: &mut Tally) -> Result<()> {
    let ff_x = lower_sets(x, x, le);
    match id {
        LemmaId::Z1 => {
            for a in subsets_focus(&inst.subset, x)? {
                let ff_a = lower_sets(x, &a, le);
                let lhs = is_chain(&a, x, le)?;
                let rhs = ff_a.is_subset(&ff_x) && is_nest(&ff_a) && !a.is_empty();
                t.check(lhs == rhs, || format!("A = {a}: chain {lhs}, nest side {rhs}"));
            }
        }
        LemmaId::Z2 => {
            if x.is_empty() {
                return Err(malformed("X is empty"));
            }
            for a in subsets_focus(&inst.subset, x)? {
                for y in focus(&inst.element, x, "element")? {
                    if is_bound(Bound::Upper, &y, &a, x, le)? {
                        let fy = lower_set(x, le, &y);
                        let ff_a = lower_sets(x, &a, le);
                        t.check(ff_a.iter().all(|m| m.is_subset(&fy)), || {
                            format!("bound {y} of {a}: some F_a ⊄ F_y = {fy}")
                        });
                    }
                }
            }
        }
        LemmaId::Z3 => {
            if x.is_empty() {
                return Err(malformed("X is empty"));
            }
            for y in focus(&inst.element, x, "element")? {
                let lhs = extreme_element(Extreme::Max, &y, x, le)?;
                let rhs = extreme_member(Extreme::Max, &lower_set(x, le, &y), &ff_x)?;
                t.check(lhs == rhs, || {
                    format!("y = {y}: maximal element {lhs}, F_y maximal {rhs}")
                });
            }
        }
        LemmaId::PropertyFF => {
            for a in x.iter() {
                for b in x.iter() {
                    let same = lower_set(x, le, a) == lower_set(x, le, b);
                    t.check(!same || a == b, || format!("F_{a} = F_{b} with {a} ≠ {b}"));
                }
            }
        }
        _ => unreachable!("not a poset lemma"),
    }
    Ok(())
}

fn carrier_lemma(id: LemmaId, x: &HfSet, guards: &Guards, t: &mut Tally) -> Result<()> {
    let l = en_l(x, guards)?;
    let order = lee(&l);
    match id {
        LemmaId::W1 => {
            let r = check_partial_order(&order, l.as_set());
            t.check(r.is_ok(), || format!("≺ on L: {:?}", r.err()));
        }
        LemmaId::W2 | LemmaId::W3 => {
            for k in chains_of_l(&l, &order) {
                let z = en_z(&k);
                let le = leeq(&k);
                if id == LemmaId::W2 {
                    t.check(is_well_order(&le, &z), || {
                        format!("≦ is not a well order on Z = {z}")
                    });
                } else {
                    let top = HfSet::ordered_pair(z.clone(), le.into_set());
                    let bound = l.as_set().contains(&top)
                        && is_bound(Bound::Upper, &top, k.as_set(), l.as_set(), &order)?;
                    t.check(bound, || format!("⟨Z, ≦⟩ = {top} does not bound {}", k.as_set()));
                }
            }
        }
        _ => unreachable!("not a carrier lemma"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::choice::ChoicePolicy;

    fn n(k: usize) -> HfSet {
        HfSet::numeral(k)
    }

    #[test]
    fn ids_parse() {
        assert_eq!("Property_x".parse::<LemmaId>().unwrap(), LemmaId::PropertyX);
        assert_eq!("Property_f′0".parse::<LemmaId>().unwrap(), LemmaId::PropertyF0);
        assert_eq!("Property_f'0".parse::<LemmaId>().unwrap(), LemmaId::PropertyF0);
        assert_eq!("LemmaZ3".parse::<LemmaId>().unwrap(), LemmaId::Z3);
        assert_eq!("w2".parse::<LemmaId>().unwrap(), LemmaId::W2);
        assert_eq!(
            "LemmaT9".parse::<LemmaId>(),
            Err(Error::UnknownLemma("LemmaT9".into()))
        );
        for id in LemmaId::ALL {
            assert_eq!(id.name().parse::<LemmaId>().unwrap(), id);
        }
    }

    #[test]
    fn spec_examples() {
        let c = ChoicePolicy::Canonical;
        let g = Guards::default();
        let p2 = n(2).power_set();
        let v = verify_lemma(
            LemmaId::PropertyX,
            &LemmaInstance::family(p2).with_set(n(1)),
            &c,
            &g,
        )
        .unwrap();
        assert!(v.holds && v.checked == 2);
        let le = BinRel::from_fn(&n(3), |a, b| a.is_subset(b));
        let v = verify_lemma(
            LemmaId::Z3,
            &LemmaInstance::poset(n(3), le).with_element(n(2)),
            &c,
            &g,
        )
        .unwrap();
        assert!(v.holds);
        assert!(matches!(
            verify_lemma(LemmaId::T1, &LemmaInstance::default(), &c, &g),
            Err(Error::MalformedInstance(_))
        ));
    }

    #[test]
    fn every_lemma_on_a_sample() {
        let c = ChoicePolicy::Seeded(11);
        let g = Guards::default();
        let le = BinRel::from_fn(&n(3), |a, b| a.is_subset(b));
        for id in LemmaId::ALL {
            let inst = match id.shape() {
                Shape::FiniteCharacterFamily | Shape::AnyFamily => LemmaInstance::family(n(2).power_set()),
                Shape::Poset => LemmaInstance::poset(n(3), le.clone()),
                Shape::Carrier => LemmaInstance::carrier(n(2)),
            };
            let v = verify_lemma(id, &inst, &c, &g).unwrap();
            assert!(v.holds, "{id}: {:?}", v.counterexample);
            assert!(v.checked > 0, "{id} checked nothing");
        }
    }
}
