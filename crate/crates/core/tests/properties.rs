use proptest::prelude::*;

use mklab::choice::ChoiceFn;
use mklab::choice::ChoicePolicy;
use mklab::classifier::{comprehend, parse_formula, BinaryOp, Binder, Env, Formula, Term, UnaryOp, Universe};
use mklab::constructions::{chi, lower_set, lower_sets, verify_lemma, Guards, LemmaId, LemmaInstance};
use mklab::harness::enumerate::{downsets, families, posets};
use mklab::harness::oracle;
use mklab::order::{
    extreme_element, extreme_member, is_chain, is_finite_character, is_nest, is_total_order, is_well_order,
    BinRel, Extreme,
};
use mklab::HfSet;

fn hfset() -> impl Strategy<Value = HfSet> {
    let leaf = Just(HfSet::empty());
    leaf.prop_recursive(4, 24, 4, |inner| {
        prop::collection::vec(inner, 0..4).prop_map(HfSet::from_members)
    })
}

fn small_set() -> impl Strategy<Value = HfSet> {
    prop::collection::vec(0usize..7, 0..7).prop_map(|v| v.into_iter().map(HfSet::numeral).collect())
}

const NAMES: [&str; 4] = ["x", "y", "z", "w"];

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        prop::sample::select(&NAMES[..]).prop_map(Term::var),
        (0usize..4).prop_map(|n| Term::Lit(HfSet::numeral(n))),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (
                prop::sample::select(vec![UnaryOp::Power, UnaryOp::Singleton, UnaryOp::BigUnion]),
                inner.clone()
            )
                .prop_map(|(op, t)| Term::unary(op, t)),
            (
                prop::sample::select(vec![
                    BinaryOp::Union,
                    BinaryOp::Intersection,
                    BinaryOp::Difference,
                    BinaryOp::OrderedPair,
                    BinaryOp::UnorderedPair,
                ]),
                inner.clone(),
                inner.clone()
            )
                .prop_map(|(op, a, b)| Term::binary(op, a, b)),
            prop::collection::vec(inner, 1..3).prop_map(Term::set),
        ]
    })
}

fn formula() -> impl Strategy<Value = Formula> {
    let atom = prop_oneof![
        (term(), term()).prop_map(|(a, b)| Formula::In(a, b)),
        (term(), term()).prop_map(|(a, b)| Formula::Eq(a, b)),
    ];
    atom.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::iff(a, b)),
            (prop::sample::select(&NAMES[..]), inner.clone()).prop_map(|(v, f)| Formula::forall(v, f)),
            (prop::sample::select(&NAMES[..]), inner).prop_map(|(v, f)| Formula::exists(v, f)),
        ]
    })
}

/// Quantifier-free bodies in `x` only.
fn qf_body() -> impl Strategy<Value = Formula> {
    let t = prop_oneof![
        Just(Term::var("x")),
        (0usize..4).prop_map(|n| Term::Lit(HfSet::numeral(n))),
        Just(Term::unary(UnaryOp::BigUnion, Term::var("x"))),
        Just(Term::unary(UnaryOp::Singleton, Term::var("x"))),
    ];
    let atom = prop_oneof![
        (t.clone(), t.clone()).prop_map(|(a, b)| Formula::In(a, b)),
        (t.clone(), t).prop_map(|(a, b)| Formula::Eq(a, b)),
    ];
    atom.prop_recursive(2, 8, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::or(a, b)),
        ]
    })
}

proptest! {
    #[test]
    fn json_round_trip(x in hfset()) {
        prop_assert_eq!(HfSet::from_json(&x.to_json(), true).unwrap(), x.clone());
        prop_assert_eq!(HfSet::from_json(&x.to_json(), false).unwrap(), x);
    }

    #[test]
    fn extensionality_ignores_order_and_repeats(x in hfset()) {
        let mut members: Vec<HfSet> = x.members().to_vec();
        members.reverse();
        members.extend(x.members().iter().cloned());
        prop_assert_eq!(HfSet::from_members(members), x);
    }

    #[test]
    fn power_set_size_and_union(x in small_set()) {
        let p = x.power_set();
        prop_assert_eq!(p.len(), 1usize << x.len());
        prop_assert_eq!(p.big_union(), x);
    }

    #[test]
    fn pairing_is_injective(a in hfset(), b in hfset(), c in hfset(), d in hfset()) {
        let ab = HfSet::ordered_pair(a.clone(), b.clone());
        prop_assert_eq!(ab.fst().unwrap(), a.clone());
        prop_assert_eq!(ab.snd().unwrap(), b.clone());
        prop_assert_eq!(ab == HfSet::ordered_pair(c.clone(), d.clone()), a == c && b == d);
    }

    #[test]
    fn regularity(x in hfset()) {
        prop_assume!(!x.is_empty());
        let w = x.regularity_witness().unwrap();
        prop_assert!(x.contains(&w) && w.is_disjoint(&x));
    }

    #[test]
    fn print_parse_round_trip(f in formula()) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn comprehension_is_monotone_in_the_universe(body in qf_body(), k in 1usize..4) {
        let small = Universe::rank(k).unwrap();
        let large = Universe::rank(k + 1).unwrap();
        let x = Binder::Single("x".into());
        let env = Env::new();
        let lo = comprehend(&x, &body, &env, &small).unwrap();
        let hi = comprehend(&x, &body, &env, &large).unwrap();
        prop_assert_eq!(lo, hi.intersection(&rank(k)));
    }
}

fn rank(k: usize) -> HfSet {
    mklab::hfs::rank_universe(k).unwrap()
}

/// Property_x and the growth dichotomy, over every nonempty downset of a 3-atom universe.
#[test]
fn chi_grows_by_at_most_one_point() {
    for f in downsets(3).unwrap().into_iter().filter(|f| !f.is_empty()) {
        let c = ChoiceFn::tabulate(&f.big_union(), &ChoicePolicy::Canonical).unwrap();
        for a in f.iter() {
            let b = chi(a, &f, &c).unwrap();
            assert!(a.is_subset(&b), "{a} ⊄ χ({a}) in {f}");
            assert!(b == *a || b.len() == a.len() + 1, "χ({a}) = {b} in {f}");
        }
    }
}

#[test]
fn finite_character_is_downward_closure() {
    let ambient = HfSet::numeral(3);
    for f in families(3).unwrap() {
        let closed = f.iter().all(|m| m.subsets().all(|s| f.contains(&s)));
        assert_eq!(is_finite_character(&f, &ambient).unwrap(), closed, "{f}");
    }
}

/// Every relation on carriers of size ≤ 3.
fn all_relations(n: usize) -> impl Iterator<Item = (HfSet, BinRel)> {
    let x = HfSet::numeral(n);
    let cells: Vec<(HfSet, HfSet)> = x
        .iter()
        .flat_map(|a| x.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    (0u32..1 << cells.len()).map(move |mask| {
        let chosen = cells
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p.clone());
        (x.clone(), BinRel::from_pairs(chosen))
    })
}

#[test]
fn finite_well_orders_are_total_orders() {
    for n in 0..=3 {
        for (x, le) in all_relations(n) {
            assert_eq!(is_well_order(&le, &x), is_total_order(&le, &x), "{le:?}");
        }
    }
}

#[test]
fn chains_are_nests_of_lower_sets() {
    for n in 0..=3 {
        for (x, le) in posets(n).unwrap() {
            let ff = lower_sets(&x, &x, &le);
            for a in x.subsets().filter(|a| !a.is_empty()) {
                let fa = lower_sets(&x, &a, &le);
                let bridge = fa.is_subset(&ff) && is_nest(&fa);
                assert_eq!(is_chain(&a, &x, &le).unwrap(), bridge, "{a} in {le:?}");
            }
            for y in x.iter() {
                let as_element = extreme_element(Extreme::Max, y, &x, &le).unwrap();
                let as_member = extreme_member(Extreme::Max, &lower_set(&x, &le, y), &ff).unwrap();
                assert_eq!(as_element, as_member, "{y} in {le:?}");
            }
            // F_a = F_b forces a = b.
            assert_eq!(ff.len(), x.len());
        }
    }
}

#[test]
fn vacuity_is_an_error() {
    assert!(extreme_member(Extreme::Max, &HfSet::empty(), &HfSet::empty()).is_err());
    assert!(extreme_element(Extreme::Min, &HfSet::empty(), &HfSet::empty(), &BinRel::empty()).is_err());
}

#[test]
fn lemma_t4_agrees_with_brute_force() {
    let g = Guards::default();
    for f in downsets(3).unwrap().into_iter().filter(|f| !f.is_empty()) {
        let m = mklab::constructions::tukey_maximal_member(&f).unwrap();
        assert!(oracle::maximal_members(&f).contains(&m));
        let v = verify_lemma(
            LemmaId::T4,
            &LemmaInstance::family(f.clone()),
            &ChoicePolicy::Canonical,
            &g,
        )
        .unwrap();
        assert!(v.holds, "{v:?}");
    }
}
