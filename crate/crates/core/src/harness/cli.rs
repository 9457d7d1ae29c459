//! What the `mk` subcommands compute. The binary only parses flags and prints.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Map, Value};

use super::oracle;
use crate::choice::{ChoiceFn, ChoicePolicy};
use crate::classifier::{eval_formula, eval_term, parse, Env, Expr, Universe};
use crate::constructions::{
    choice_from_wellorder, choice_from_zermelo, hausdorff_extend_nest, maximal_principle_member, tukey_with,
    wellorder_construct, zermelo_transversal, zorn_maximal_element, Guards,
};
use crate::error::{Error, Result};
use crate::hfs::HfSet;
use crate::order::{self, BinRel, Bound, Check, Extreme};

pub const DEFAULT_EVAL_RANK: usize = 4;

/// `name=JSON`, as given to `--env`.
pub fn parse_binding(text: &str) -> Result<(String, HfSet)> {
    let (name, json) = text
        .split_once('=')
        .ok_or_else(|| Error::Usage(format!("expected name=JSON, got `{text}`")))?;
    Ok((name.trim().to_string(), HfSet::from_json(json, false)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluated {
    Value(HfSet),
    Truth(bool),
}

pub fn eval(text: &str, bindings: &[(String, HfSet)], rank: usize) -> Result<Evaluated> {
    let u = Universe::rank(rank)?;
    let mut env = Env::new();
    for (name, v) in bindings {
        env.bind(name.clone(), v.clone());
    }
    Ok(match parse(text)? {
        Expr::Term(t) => Evaluated::Value(eval_term(&t, &env, &u)?),
        Expr::Formula(f) => Evaluated::Truth(eval_formula(&f, &env, &u)?),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Checked {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<HfSet>>,
}

impl Checked {
    fn from_check(c: Check) -> Self {
        match c {
            Ok(()) => Self::yes(),
            Err(v) => Self::no(v.clause, v.witness),
        }
    }

    fn yes() -> Self {
        Self {
            holds: true,
            clause: None,
            witness: None,
        }
    }

    fn no(clause: &str, witness: Vec<HfSet>) -> Self {
        Self {
            holds: false,
            clause: Some(clause.to_string()),
            witness: Some(witness),
        }
    }
}

pub const PREDICATES: [&str; 13] = [
    "choice_function",
    "extreme_member",
    "nest",
    "finite_character",
    "finite_char_properties",
    "partial_order",
    "bound",
    "extreme_element",
    "total_order",
    "chain",
    "well_order",
    "initial_segment",
    "rrelation",
];

struct Args<'a>(&'a Map<String, Value>);

impl Args<'_> {
    fn raw(&self, key: &str) -> Result<&Value> {
        self.0
            .get(key)
            .ok_or_else(|| Error::MalformedInstance(format!("missing argument `{key}`")))
    }

    fn set(&self, key: &str) -> Result<HfSet> {
        HfSet::from_value(self.raw(key)?, false)
    }

    fn set_or_empty(&self, key: &str) -> Result<HfSet> {
        match self.0.get(key) {
            Some(v) => HfSet::from_value(v, false),
            None => Ok(HfSet::empty()),
        }
    }

    /// A relation is a list of `[a, b]` pairs.
    fn rel(&self, key: &str) -> Result<BinRel> {
        relation_from_value(self.raw(key)?)
    }

    fn word(&self, key: &str) -> Result<&str> {
        self.raw(key)?
            .as_str()
            .ok_or_else(|| Error::MalformedInstance(format!("`{key}` must be a string")))
    }

    fn extreme(&self) -> Result<Extreme> {
        match self.word("kind")? {
            "max" => Ok(Extreme::Max),
            "min" => Ok(Extreme::Min),
            k => Err(Error::MalformedInstance(format!("kind `{k}` is not max or min"))),
        }
    }
}

pub fn relation_from_value(v: &Value) -> Result<BinRel> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::MalformedInstance("a relation is a list of [a, b] pairs".into()))?;
    let pairs = items
        .iter()
        .map(|p| match p.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok((HfSet::from_value(a, false)?, HfSet::from_value(b, false)?)),
            _ => Err(Error::MalformedInstance(format!("{p} is not an [a, b] pair"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BinRel::from_pairs(pairs))
}

pub fn relation_to_value(le: &BinRel) -> Value {
    Value::Array(le.pairs().iter().map(|(a, b)| json!([a, b])).collect())
}

/// Runs one order-theory predicate on named JSON arguments.
pub fn check(predicate: &str, args: &Value) -> Result<Checked> {
    let map = args
        .as_object()
        .ok_or_else(|| Error::MalformedInstance("--args must be a JSON object".into()))?;
    let a = Args(map);
    Ok(match predicate {
        "choice_function" => {
            Checked::from_check(order::check_choice_function(&a.set("eps")?, &a.set("base")?))
        }
        "extreme_member" => {
            let (kind, s, f) = (a.extreme()?, a.set("set")?, a.set("family")?);
            if order::extreme_member(kind, &s, &f)? {
                Checked::yes()
            } else if !f.contains(&s) {
                Checked::no("set ∉ family", vec![s])
            } else {
                let beats = |m: &&HfSet| match kind {
                    Extreme::Max => s.is_proper_subset(m),
                    Extreme::Min => m.is_proper_subset(&s),
                };
                Checked::no(
                    "strictly beaten by a member",
                    f.iter().filter(beats).take(1).cloned().collect(),
                )
            }
        }
        "nest" => Checked::from_check(order::check_nest(&a.set("family")?)),
        "finite_character" => Checked::from_check(order::check_finite_character(
            &a.set("family")?,
            &a.set_or_empty("ambient")?,
        )?),
        "finite_char_properties" => {
            Checked::from_check(order::check_finite_char_properties(&a.set("family")?)?)
        }
        "partial_order" => Checked::from_check(order::check_partial_order(&a.rel("le")?, &a.set("carrier")?)),
        "total_order" => Checked::from_check(order::check_total_order(&a.rel("le")?, &a.set("carrier")?)),
        "well_order" => Checked::from_check(order::check_well_order(&a.rel("le")?, &a.set("carrier")?)),
        "chain" => Checked::from_check(order::check_chain(
            &a.set("a")?,
            &a.set("carrier")?,
            &a.rel("le")?,
        )?),
        "initial_segment" => Checked::from_check(order::check_initial_segment(
            &a.set("y")?,
            &a.set("carrier")?,
            &a.rel("le")?,
        )?),
        "bound" => {
            let kind = match a.word("kind")? {
                "upper" => Bound::Upper,
                "lower" => Bound::Lower,
                k => {
                    return Err(Error::MalformedInstance(format!(
                        "kind `{k}` is not upper or lower"
                    )))
                }
            };
            let (x, s, carrier, le) = (a.set("x")?, a.set("a")?, a.set("carrier")?, a.rel("le")?);
            if order::is_bound(kind, &x, &s, &carrier, &le)? {
                Checked::yes()
            } else if !carrier.contains(&x) {
                Checked::no("x ∉ X", vec![x])
            } else {
                let off = s.iter().find(|y| match kind {
                    Bound::Upper => !le.related(y, &x),
                    Bound::Lower => !le.related(&x, y),
                });
                Checked::no("not comparable as required", off.into_iter().cloned().collect())
            }
        }
        "extreme_element" => {
            let (kind, x, carrier, le) = (a.extreme()?, a.set("x")?, a.set("carrier")?, a.rel("le")?);
            if order::extreme_element(kind, &x, &carrier, &le)? {
                Checked::yes()
            } else if !carrier.contains(&x) {
                Checked::no("x ∉ X", vec![x])
            } else {
                let beats = |y: &&HfSet| {
                    **y != x
                        && match kind {
                            Extreme::Max => le.related(&x, y),
                            Extreme::Min => le.related(y, &x),
                        }
                };
                Checked::no(
                    "strictly beaten by an element",
                    carrier.iter().filter(beats).take(1).cloned().collect(),
                )
            }
        }
        "rrelation" => {
            let (x, y) = (a.set("x")?, a.set("y")?);
            if order::rrelation(&x, &a.rel("le")?, &y) {
                Checked::yes()
            } else {
                Checked::no("⟨x, y⟩ ∉ le", vec![x, y])
            }
        }
        other => {
            return Err(Error::Usage(format!(
                "unknown predicate `{other}` (one of {})",
                PREDICATES.join(", ")
            )))
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DemoKind {
    Tukey,
    Hausdorff,
    MaxPrinciple,
    Zermelo,
    Zorn,
    WellOrder,
    AcFromZermelo,
    AcFromWo,
}

impl DemoKind {
    pub const ALL: [DemoKind; 8] = [
        DemoKind::Tukey,
        DemoKind::Hausdorff,
        DemoKind::MaxPrinciple,
        DemoKind::Zermelo,
        DemoKind::Zorn,
        DemoKind::WellOrder,
        DemoKind::AcFromZermelo,
        DemoKind::AcFromWo,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DemoKind::Tukey => "tukey",
            DemoKind::Hausdorff => "hausdorff",
            DemoKind::MaxPrinciple => "maxprinciple",
            DemoKind::Zermelo => "zermelo",
            DemoKind::Zorn => "zorn",
            DemoKind::WellOrder => "wellorder",
            DemoKind::AcFromZermelo => "ac-from-zermelo",
            DemoKind::AcFromWo => "ac-from-wo",
        }
    }

    /// The guard that `--guard` overrides for this demo.
    fn apply_guard(self, guards: &mut Guards, k: usize) {
        match self {
            DemoKind::Zermelo => guards.transversals = k,
            DemoKind::WellOrder | DemoKind::AcFromWo => guards.en_l = k,
            DemoKind::AcFromZermelo => guards.ac_zermelo = k,
            _ => {}
        }
    }
}

impl fmt::Display for DemoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DemoKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DemoKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Usage(format!("unknown demo `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Postcondition {
    pub clause: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Demo {
    pub demo: String,
    pub choice: String,
    pub result: Value,
    pub postconditions: Vec<Postcondition>,
}

impl Demo {
    pub fn verified(&self) -> bool {
        self.postconditions.iter().all(|p| p.holds)
    }
}

#[derive(Default)]
struct Posts(Vec<Postcondition>);

impl Posts {
    fn add(&mut self, clause: &str, holds: bool) {
        self.0.push(Postcondition {
            clause: clause.to_string(),
            holds,
        });
    }
}

/// Input is either the bare set or an object with the named field.
fn field(input: &Value, key: &str) -> Result<HfSet> {
    match input {
        Value::Object(m) => Args(m).set(key),
        v => HfSet::from_value(v, false),
    }
}

fn poset_input(input: &Value) -> Result<(HfSet, BinRel)> {
    let m = input
        .as_object()
        .ok_or_else(|| Error::MalformedInstance("expected {\"carrier\": …, \"le\": […]}".into()))?;
    let a = Args(m);
    Ok((a.set("carrier")?, a.rel("le")?))
}

fn choice_fn_value(eps: &ChoiceFn) -> Value {
    let pairs = eps.table().iter().map(|p| {
        let (a, e) = (
            p.fst().expect("table entries are pairs"),
            p.snd().expect("table entries are pairs"),
        );
        json!({ "set": a, "choice": e })
    });
    Value::Array(pairs.collect())
}

fn post_choice(posts: &mut Posts, eps: &ChoiceFn, x: &HfSet) {
    posts.add("Choice_Function ε X", order::is_choice_function(eps.table(), x));
    posts.add("|dom ε| = 2^|X| − 1", eps.domain_size() + 1 == 1 << x.len());
}

pub fn demo(kind: DemoKind, input: &Value, choice: &ChoicePolicy, guard: Option<usize>) -> Result<Demo> {
    let mut guards = Guards::default();
    if let Some(k) = guard {
        kind.apply_guard(&mut guards, k);
    }
    let mut posts = Posts::default();
    let result = match kind {
        DemoKind::Tukey => {
            let f = field(input, "family")?;
            let state = tukey_with(&f, choice)?;
            posts.add(
                "MaxMember(⋃f′0, f)",
                order::extreme_member(Extreme::Max, &state.maximal, &f)?,
            );
            posts.add("f′0 is a nest", order::is_nest(&state.f0));
            posts.add(
                "brute-force maximal",
                oracle::maximal_members(&f).contains(&state.maximal),
            );
            serde_json::to_value(&state).expect("serializable")
        }
        DemoKind::Hausdorff => {
            let a = field(input, "family")?;
            let n = match input {
                Value::Object(m) => Args(m).set_or_empty("nest")?,
                _ => HfSet::empty(),
            };
            let u = hausdorff_extend_nest(&a, &n, choice)?;
            posts.add("u is a nest", order::is_nest(&u));
            posts.add("N ⊆ u ⊆ A", n.is_subset(&u) && u.is_subset(&a));
            posts.add(
                "no nest in A strictly extends u",
                !oracle::nests(&a).iter().any(|w| u.is_proper_subset(w)),
            );
            json!({ "nest": u })
        }
        DemoKind::MaxPrinciple => {
            let a = field(input, "family")?;
            let m = maximal_principle_member(&a, choice)?;
            posts.add("MaxMember(M, A)", order::extreme_member(Extreme::Max, &m, &a)?);
            json!({ "member": m })
        }
        DemoKind::Zermelo => {
            let a = field(input, "family")?;
            let c = zermelo_transversal(&a, choice, &guards)?;
            posts.add(
                "D ∩ C is a singleton for every D ∈ A",
                oracle::is_transversal(&c, &a),
            );
            posts.add("C ⊆ ⋃A", c.is_subset(&a.big_union()));
            json!({ "transversal": c })
        }
        DemoKind::Zorn => {
            let (x, le) = poset_input(input)?;
            let out = zorn_maximal_element(&x, &le, choice)?;
            match out.element() {
                Some(v) => posts.add(
                    "MaxElement(v, X, le)",
                    order::extreme_element(Extreme::Max, v, &x, &le)?,
                ),
                None => posts.add("X = ∅", x.is_empty()),
            }
            serde_json::to_value(&out).expect("serializable")
        }
        DemoKind::WellOrder => {
            let x = field(input, "carrier")?;
            let le = wellorder_construct(&x, &guards, choice)?;
            posts.add("WellOrder(le, X)", order::is_well_order(&le, &x));
            json!({ "le": relation_to_value(&le) })
        }
        DemoKind::AcFromZermelo => {
            let x = field(input, "carrier")?;
            let eps = choice_from_zermelo(&x, choice, &guards)?;
            post_choice(&mut posts, &eps, &x);
            json!({ "epsilon": choice_fn_value(&eps) })
        }
        DemoKind::AcFromWo => {
            let (x, le) = match input {
                Value::Object(m) if m.contains_key("le") => poset_input(input)?,
                _ => {
                    let x = field(input, "carrier")?;
                    let le = wellorder_construct(&x, &guards, choice)?;
                    (x, le)
                }
            };
            let eps = choice_from_wellorder(&x, &le)?;
            post_choice(&mut posts, &eps, &x);
            json!({ "le": relation_to_value(&le), "epsilon": choice_fn_value(&eps) })
        }
    };
    Ok(Demo {
        demo: kind.to_string(),
        choice: choice.to_string(),
        result,
        postconditions: posts.0,
    })
}
