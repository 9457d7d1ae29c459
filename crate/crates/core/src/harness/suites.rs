use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::corpus::{scheme_corpus, DEFAULT_CORPUS_SEED};
use super::enumerate::{carriers, disjoint_families, downsets, families, posets};
use super::{oracle, Clauses, Run, SuiteName, SuiteParams};
use crate::choice::{Choice, ChoiceFn, ChoicePolicy};
use crate::classifier::{check_scheme, parse_formula, Universe};
use crate::constructions::{
    choice_from_wellorder, choice_from_zermelo, en_l, en_t, extend_by_point, hausdorff_extend_nest,
    hausdorff_maximal_nest, least_t_subclass_literal, lee, lower_set, lower_sets, maximal_principle_member,
    partial_transversals, tukey_with, verify_lemma, wellorder_construct, zermelo_transversal,
    zorn_maximal_element, Guards, LemmaId, LemmaInstance, LemmaShape, OrderedPairFamily, Tukey, ZornOutcome,
    LITERAL_T_SUBCLASS_LIMIT,
};
use crate::error::{Error, Result};
use crate::hfs::{rank_universe, HfSet};
use crate::order::{extreme_member, is_choice_function, is_nest, is_well_order, Extreme};

pub(super) fn run(name: SuiteName, p: &SuiteParams) -> Result<(Run, Value)> {
    let c = &p.choice;
    let g = &p.guards;
    match name {
        SuiteName::Axioms => Ok((axioms()?, json!({}))),
        SuiteName::Scheme => {
            let n = p.n.unwrap_or(500);
            Ok((scheme(n)?, json!({ "n": n, "depth": 3, "rank": 3 })))
        }
        SuiteName::Tukey => {
            let atoms = p.atoms.unwrap_or(3);
            Ok((tukey(atoms, c)?, json!({ "atoms": atoms })))
        }
        SuiteName::Hausdorff => {
            let atoms = p.atoms.unwrap_or(3);
            Ok((hausdorff(atoms, c)?, json!({ "atoms": atoms })))
        }
        SuiteName::MaxPrinciple => {
            let atoms = p.atoms.unwrap_or(3);
            Ok((max_principle(atoms, c)?, json!({ "atoms": atoms })))
        }
        SuiteName::Zermelo => {
            let atoms = p.atoms.unwrap_or(3);
            Ok((zermelo(atoms, c, g)?, json!({ "atoms": atoms })))
        }
        SuiteName::Zorn => {
            let n = p.n.unwrap_or(4);
            Ok((zorn(n, c)?, json!({ "n": n })))
        }
        SuiteName::WellOrder => {
            let n = p.n.unwrap_or(3);
            Ok((wellorder(n, c, g)?, json!({ "n": n })))
        }
        SuiteName::Ac => {
            let n = p.n.unwrap_or(3);
            Ok((ac(n, c, g)?, json!({ "n": n })))
        }
        SuiteName::Lemmas => {
            let atoms = p.atoms.unwrap_or(2);
            let n = p.n.unwrap_or(3);
            Ok((lemmas(atoms, n, c, g)?, json!({ "atoms": atoms, "n": n })))
        }
        SuiteName::Equivalence => {
            let n = p.n.unwrap_or(3);
            Ok((equivalence(n, c, g)?, json!({ "n": n })))
        }
    }
}

fn axioms() -> Result<Run> {
    let mut run = Run::default();
    let v3 = rank_universe(3)?;

    for x in v3.iter() {
        for y in v3.iter() {
            let same_members = v3.iter().all(|z| x.contains(z) == y.contains(z));
            let mut c = Clauses::default();
            c.ensure(same_members == (x == y), "extensionality");
            run.record(format_args!("({x}, {y})"), c.done());
        }
    }

    let sized = (0..=5).map(HfSet::numeral).chain(v3.iter().cloned());
    for x in sized {
        let p = x.power_set();
        let mut c = Clauses::default();
        c.ensure(p.len() == 1 << x.len(), "|pow(x)| = 2^|x|");
        c.ensure(p.iter().all(|s| s.is_subset(&x)), "pow(x) ⊆ subsets of x");
        c.ensure(p.big_union() == x, "⋃pow(x) = x");
        run.record(format_args!("pow({x})"), c.done());
    }

    let mut seen: BTreeMap<HfSet, (HfSet, HfSet)> = BTreeMap::new();
    for a in v3.iter() {
        for b in v3.iter() {
            let z = HfSet::ordered_pair(a.clone(), b.clone());
            let mut c = Clauses::default();
            c.ensure(
                z.fst().ok().as_ref() == Some(a) && z.snd().ok().as_ref() == Some(b),
                "projections",
            );
            if let Some((a2, b2)) = seen.insert(z, (a.clone(), b.clone())) {
                c.ensure(false, format!("pair collides with ⟨{a2}, {b2}⟩"));
            }
            run.record(format_args!("⟨{a}, {b}⟩"), c.done());
        }
    }

    let v2 = rank_universe(2)?.power_set();
    for x in v2.iter() {
        for y in v2.iter() {
            for z in v2.iter() {
                let mut c = Clauses::default();
                c.ensure(
                    x.union(y) == y.union(x) && x.intersection(y) == y.intersection(x),
                    "commutativity",
                );
                c.ensure(x.union(&y.union(z)) == x.union(y).union(z), "∪ associativity");
                c.ensure(
                    x.intersection(&y.intersection(z)) == x.intersection(y).intersection(z),
                    "∩ associativity",
                );
                c.ensure(x.difference(x).is_empty(), "x ∼ x = ∅");
                c.ensure(
                    x.intersection(&y.union(z)) == x.intersection(y).union(&x.intersection(z)),
                    "distributivity",
                );
                run.record(format_args!("({x}, {y}, {z})"), c.done());
            }
        }
    }

    // Every nonempty set of members of V_4, i.e. 2^16 − 1 sets.
    let v4 = rank_universe(4)?;
    for x in v4.subsets().filter(|x| !x.is_empty()) {
        let ok = x
            .regularity_witness()
            .is_ok_and(|w| x.contains(&w) && w.is_disjoint(&x));
        run.record(&x, Ok(if ok { vec![] } else { vec!["regularity".into()] }));
    }
    Ok(run)
}

fn scheme(n: usize) -> Result<Run> {
    let mut run = Run::default();
    let u = Universe::rank(3)?;
    for f in scheme_corpus(n, 3, DEFAULT_CORPUS_SEED) {
        let mut c = Clauses::default();
        c.ensure(f.depth() <= 3, "depth ≤ 3");
        c.ensure(
            parse_formula(&f.to_string()).as_ref() == Ok(&f),
            "print/parse round trip",
        );
        match check_scheme(&f, &u) {
            Ok(ok) => c.ensure(ok, "b ∈ {x : F(x)} ⟺ F(b)"),
            Err(e) => c.ensure(false, format!("error: {e}")),
        }
        run.record(&f, c.done());
    }
    Ok(run)
}

fn tukey(atoms: usize, chooser: &dyn Choice) -> Result<Run> {
    let mut run = Run::default();
    for f in downsets(atoms)? {
        if f.is_empty() {
            run.expect_error(&f, tukey_with(&f, chooser), |e| *e == Error::EmptyFamily);
            continue;
        }
        run.record(
            &f,
            (|| {
                let state = tukey_with(&f, chooser)?;
                let m = &state.maximal;
                let mut c = Clauses::default();
                c.ensure(extreme_member(Extreme::Max, m, &f)?, "MaxMember(M, f)");
                c.ensure(Tukey::new(&f, chooser).chi(m)? == *m, "χ(⋃f′0) = ⋃f′0");
                c.ensure(f.contains(m), "⋃f′0 ∈ f");
                c.ensure(is_nest(&state.f0), "f′0 is a nest");
                c.ensure(
                    oracle::maximal_members(&f).contains(m),
                    "agrees with brute-force maxima",
                );
                if f.len() <= LITERAL_T_SUBCLASS_LIMIT {
                    c.ensure(
                        least_t_subclass_literal(&f, chooser)? == state.f0,
                        "closure = intersection",
                    );
                }
                c.done()
            })(),
        );
    }
    Ok(run)
}

fn hausdorff(atoms: usize, chooser: &dyn Choice) -> Result<Run> {
    let mut run = Run::default();
    for a in families(atoms)? {
        let all = oracle::nests(&a);
        for n in &all {
            run.record(
                format_args!("A = {a}, N = {n}"),
                (|| {
                    let u = hausdorff_extend_nest(&a, n, chooser)?;
                    let mut c = Clauses::default();
                    c.ensure(is_nest(&u) && u.is_subset(&a), "u is a nest in A");
                    c.ensure(n.is_subset(&u), "N ⊆ u");
                    c.ensure(
                        !all.iter().any(|w| u.is_proper_subset(w)),
                        "no nest in A extends u",
                    );
                    c.done()
                })(),
            );
        }
        if !is_nest(&a) {
            run.expect_error(
                format_args!("A = {a}, N = A"),
                hausdorff_extend_nest(&a, &a, chooser),
                |e| matches!(e, Error::NotANest(_)),
            );
        }
    }
    Ok(run)
}

fn max_principle(atoms: usize, chooser: &dyn Choice) -> Result<Run> {
    let mut run = Run::default();
    for a in families(atoms)? {
        if a.is_empty() {
            run.expect_error(&a, maximal_principle_member(&a, chooser), |e| {
                *e == Error::EmptyFamily
            });
            continue;
        }
        run.record(
            &a,
            (|| {
                let m = maximal_principle_member(&a, chooser)?;
                let mut c = Clauses::default();
                c.ensure(
                    oracle::maximal_members(&a).contains(&m),
                    "M is a brute-force maximal member",
                );
                c.done()
            })(),
        );
    }
    Ok(run)
}

fn zermelo(atoms: usize, chooser: &dyn Choice, guards: &Guards) -> Result<Run> {
    let mut run = Run::default();
    let literal_guards = Guards {
        en_t_atoms: guards.en_t_atoms.max(atoms),
        ..*guards
    };
    for a in disjoint_families(atoms)? {
        if a.contains(&HfSet::empty()) {
            run.expect_error(&a, zermelo_transversal(&a, chooser, guards), |e| {
                *e == Error::EmptyMemberPresent
            });
            continue;
        }
        run.record(
            &a,
            (|| {
                let c_set = zermelo_transversal(&a, chooser, guards)?;
                let mut c = Clauses::default();
                c.ensure(
                    oracle::is_transversal(&c_set, &a),
                    "D ∩ C is a singleton for every D",
                );
                c.ensure(c_set.is_subset(&a.big_union()), "C ⊆ ⋃A");
                c.ensure(
                    partial_transversals(&a, guards)? == en_t(&a, &literal_guards)?,
                    "T matches En_T",
                );
                c.done()
            })(),
        );
    }
    Ok(run)
}

fn zorn(n: usize, chooser: &dyn Choice) -> Result<Run> {
    let mut run = Run::default();
    for (x, le) in posets(n)? {
        run.record(
            format_args!("{le:?}"),
            (|| {
                let mut c = Clauses::default();
                let brute = oracle::maximal_elements(&x, &le);
                match zorn_maximal_element(&x, &le, chooser)? {
                    ZornOutcome::Vacuous => c.ensure(x.is_empty(), "vacuous only on the empty carrier"),
                    ZornOutcome::Maximal(v) => {
                        c.ensure(brute.contains(&v), "v is a brute-force maximal element");
                        let ff = lower_sets(&x, &x, &le);
                        let mut via_ff = Vec::new();
                        for y in x.iter() {
                            if extreme_member(Extreme::Max, &lower_set(&x, &le, y), &ff)? {
                                via_ff.push(y.clone());
                            }
                        }
                        c.ensure(via_ff == brute, "maximal elements via F_y equal brute force");
                    }
                }
                c.done()
            })(),
        );
    }
    Ok(run)
}

fn wellorder(n: usize, chooser: &dyn Choice, guards: &Guards) -> Result<Run> {
    let mut run = Run::default();
    for x in carriers(n) {
        run.record(
            &x,
            (|| {
                let le = wellorder_construct(&x, guards, chooser)?;
                let reference = crate::constructions::canonical_wellorder(&x);
                let mut c = Clauses::default();
                c.ensure(is_well_order(&le, &x), "WellOrder(le, X)");
                c.ensure(is_well_order(&reference, &x), "reference order is a well order");
                c.ensure(le.len() == reference.len(), "same size as the reference order");
                if !x.is_empty() {
                    let l = en_l(&x, guards)?;
                    let order = lee(&l);
                    for p in l.as_set().iter() {
                        let (y, yle) = OrderedPairFamily::decode(p);
                        for extra in x.difference(&y).iter() {
                            let wider = extend_by_point(&y, &yle, extra);
                            let q = HfSet::ordered_pair(y.with(extra.clone()), wider.into_set());
                            c.ensure(
                                l.as_set().contains(&q) && order.related(p, &q) && *p != q,
                                format!("{p} does not extend by {extra}"),
                            );
                        }
                    }
                }
                c.done()
            })(),
        );
    }
    Ok(run)
}

fn check_choice(c: &mut Clauses, label: &str, eps: &ChoiceFn, x: &HfSet) {
    c.ensure(
        is_choice_function(eps.table(), x),
        format!("{label}: Choice_Function ε X"),
    );
    c.ensure(
        eps.domain_size() == (1 << x.len()) - 1,
        format!("{label}: |dom ε| = 2^|X| − 1"),
    );
}

fn ac(n: usize, chooser: &dyn Choice, guards: &Guards) -> Result<Run> {
    let mut run = Run::default();
    for x in carriers(n) {
        run.record(
            &x,
            (|| {
                let mut c = Clauses::default();
                let le = wellorder_construct(&x, guards, chooser)?;
                check_choice(&mut c, "well order", &choice_from_wellorder(&x, &le)?, &x);
                check_choice(&mut c, "Zermelo", &choice_from_zermelo(&x, chooser, guards)?, &x);
                c.done()
            })(),
        );
    }
    Ok(run)
}

fn lemmas(atoms: usize, n: usize, chooser: &dyn Choice, guards: &Guards) -> Result<Run> {
    let mut run = Run::default();
    let fc: Vec<HfSet> = downsets(atoms)?;
    let fams = families(atoms)?;
    let mut orders = Vec::new();
    for k in 0..=n {
        orders.extend(posets(k)?);
    }
    let xs = carriers(n);
    for id in LemmaId::ALL {
        let instances: Vec<LemmaInstance> = match id.shape() {
            LemmaShape::FiniteCharacterFamily => fc.iter().cloned().map(LemmaInstance::family).collect(),
            LemmaShape::AnyFamily => fams.iter().cloned().map(LemmaInstance::family).collect(),
            LemmaShape::Poset => orders
                .iter()
                .map(|(x, le)| LemmaInstance::poset(x.clone(), le.clone()))
                .collect(),
            LemmaShape::Carrier => xs.iter().cloned().map(LemmaInstance::carrier).collect(),
        };
        for inst in instances {
            let label = format!("{id} {}", describe(&inst));
            let outcome = verify_lemma(id, &inst, chooser, guards);
            let inadmissible = match id.shape() {
                LemmaShape::FiniteCharacterFamily => inst.family.as_ref().is_some_and(HfSet::is_empty),
                LemmaShape::Poset => {
                    matches!(id, LemmaId::Z2 | LemmaId::Z3)
                        && inst.carrier.as_ref().is_some_and(HfSet::is_empty)
                }
                _ => false,
            };
            if inadmissible {
                run.expect_error(label, outcome, |e| matches!(e, Error::MalformedInstance(_)));
                continue;
            }
            run.record(label, outcome.map(|v| v.counterexample.into_iter().collect()));
        }
    }
    Ok(run)
}

fn describe(inst: &LemmaInstance) -> String {
    let mut parts = Vec::new();
    if let Some(f) = &inst.family {
        parts.push(format!("f = {f}"));
    }
    if let Some(x) = &inst.carrier {
        parts.push(format!("X = {x}"));
    }
    if let Some(le) = &inst.relation {
        parts.push(format!("≤ = {le:?}"));
    }
    parts.join(", ")
}

/// AC → Tukey → Hausdorff → maximal principle → {Zermelo, Zorn → well order} → AC.
fn equivalence(n: usize, policy: &ChoicePolicy, guards: &Guards) -> Result<Run> {
    let mut run = Run::default();
    for x in carriers(n) {
        run.record(
            &x,
            (|| {
                let mut c = Clauses::default();
                let p = x.power_set();
                let eps0 = ChoiceFn::tabulate(&x, policy)?;
                check_choice(&mut c, "AC", &eps0, &x);

                let m = tukey_with(&p, &eps0)?.maximal;
                c.ensure(m == x, "Tukey: X is the maximal member of pow(X)");

                let u = hausdorff_maximal_nest(&p, policy)?;
                c.ensure(
                    is_nest(&u) && u.len() == x.len() + 1,
                    "Hausdorff: maximal nest has |X| + 1 members",
                );

                let top = maximal_principle_member(&p, policy)?;
                c.ensure(top == x, "maximal principle: X");

                let eps_z = choice_from_zermelo(&x, policy, guards)?;
                check_choice(&mut c, "Zermelo", &eps_z, &x);

                let le = wellorder_construct(&x, guards, policy)?;
                c.ensure(is_well_order(&le, &x), "Zorn → well order");
                let eps_w = choice_from_wellorder(&x, &le)?;
                check_choice(&mut c, "well order", &eps_w, &x);

                // Close the loop: the recovered choice functions drive Tukey again.
                for (label, eps) in [("Zermelo", &eps_z), ("well order", &eps_w)] {
                    c.ensure(
                        tukey_with(&p, eps)?.maximal == x,
                        format!("Tukey driven by the {label} ε"),
                    );
                }
                c.done()
            })(),
        );
    }
    Ok(run)
}
