//! The classifier language: terms built from the set operations, first-order formulas over
//! `∈` and `=`, and the class-builder forms `{x : F}` and `{(u, v) : F}`.
//!
//! Quantifiers and class builders range over a finite [`Universe`] carrier, so every formula
//! is decidable.

use std::collections::BTreeSet;
use std::fmt;

use crate::hfs::HfSet;

mod eval;
mod parser;

pub use eval::{check_scheme, comprehend, eval_formula, eval_term, Binder, Env, Universe};
pub use parser::{parse, parse_formula, parse_term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnaryOp {
    Power,
    Singleton,
    First,
    Second,
    BigUnion,
    BigIntersection,
    Domain,
    Range,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Union,
    Intersection,
    Difference,
    Cartesian,
    UnorderedPair,
    OrderedPair,
    /// `f[x]`
    Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Lit(HfSet),
    /// `{t1, …, tn}` with at least one non-literal item; all-literal braces parse as [`Term::Lit`].
    Set(Vec<Term>),
    Unary(UnaryOp, Box<Term>),
    Binary(BinaryOp, Box<Term>, Box<Term>),
    Class {
        var: String,
        body: Box<Formula>,
    },
    PairClass {
        first: String,
        second: String,
        body: Box<Formula>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    In(Term, Term),
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

/// Result of [`parse`]: either sort.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Term(Term),
    Formula(Formula),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn unary(op: UnaryOp, t: Term) -> Term {
        Term::Unary(op, Box::new(t))
    }

    pub fn binary(op: BinaryOp, a: Term, b: Term) -> Term {
        Term::Binary(op, Box::new(a), Box::new(b))
    }

    /// Brace enumeration, folded to a literal when every item is one.
    pub fn set(items: Vec<Term>) -> Term {
        if items.iter().all(|t| matches!(t, Term::Lit(_))) {
            Term::Lit(
                items
                    .into_iter()
                    .map(|t| match t {
                        Term::Lit(s) => s,
                        _ => unreachable!(),
                    })
                    .collect(),
            )
        } else {
            Term::Set(items)
        }
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                if !bound.contains(v) {
                    out.insert(v.clone());
                }
            }
            Term::Lit(_) => {}
            Term::Set(items) => items.iter().for_each(|t| t.collect_free(bound, out)),
            Term::Unary(_, t) => t.collect_free(bound, out),
            Term::Binary(_, a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Term::Class { var, body } => {
                bound.push(var.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
            Term::PairClass { first, second, body } => {
                bound.push(first.clone());
                bound.push(second.clone());
                body.collect_free(bound, out);
                bound.truncate(bound.len() - 2);
            }
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    /// Replaces free occurrences of `name` by a literal.
    pub fn substitute(&self, name: &str, value: &HfSet) -> Term {
        match self {
            Term::Var(v) if v == name => Term::Lit(value.clone()),
            Term::Var(_) | Term::Lit(_) => self.clone(),
            Term::Set(items) => Term::Set(items.iter().map(|t| t.substitute(name, value)).collect()),
            Term::Unary(op, t) => Term::unary(*op, t.substitute(name, value)),
            Term::Binary(op, a, b) => Term::binary(*op, a.substitute(name, value), b.substitute(name, value)),
            Term::Class { var, .. } if var == name => self.clone(),
            Term::Class { var, body } => Term::Class {
                var: var.clone(),
                body: Box::new(body.substitute(name, value)),
            },
            Term::PairClass { first, second, .. } if first == name || second == name => self.clone(),
            Term::PairClass { first, second, body } => Term::PairClass {
                first: first.clone(),
                second: second.clone(),
                body: Box::new(body.substitute(name, value)),
            },
        }
    }
}

impl Formula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn forall(v: &str, f: Formula) -> Formula {
        Formula::Forall(v.to_string(), Box::new(f))
    }

    pub fn exists(v: &str, f: Formula) -> Formula {
        Formula::Exists(v.to_string(), Box::new(f))
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::In(a, b) | Formula::Eq(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                bound.push(v.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    /// `F[name := value]`, leaving bound occurrences alone.
    pub fn substitute(&self, name: &str, value: &HfSet) -> Formula {
        let sub = |f: &Formula| Box::new(f.substitute(name, value));
        match self {
            Formula::In(a, b) => Formula::In(a.substitute(name, value), b.substitute(name, value)),
            Formula::Eq(a, b) => Formula::Eq(a.substitute(name, value), b.substitute(name, value)),
            Formula::Not(f) => Formula::Not(sub(f)),
            Formula::And(a, b) => Formula::And(sub(a), sub(b)),
            Formula::Or(a, b) => Formula::Or(sub(a), sub(b)),
            Formula::Implies(a, b) => Formula::Implies(sub(a), sub(b)),
            Formula::Iff(a, b) => Formula::Iff(sub(a), sub(b)),
            Formula::Forall(v, _) | Formula::Exists(v, _) if v == name => self.clone(),
            Formula::Forall(v, f) => Formula::Forall(v.clone(), sub(f)),
            Formula::Exists(v, f) => Formula::Exists(v.clone(), sub(f)),
        }
    }

    /// Nesting depth of connectives and quantifiers; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::In(..) | Formula::Eq(..) => 0,
            Formula::Not(f) | Formula::Forall(_, f) | Formula::Exists(_, f) => 1 + f.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::In(a, b) | Formula::Eq(a, b) => !a.has_class() && !b.has_class(),
            Formula::Not(f) => f.is_quantifier_free(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.is_quantifier_free() && b.is_quantifier_free()
            }
            Formula::Forall(..) | Formula::Exists(..) => false,
        }
    }
}

impl Term {
    fn has_class(&self) -> bool {
        match self {
            Term::Var(_) | Term::Lit(_) => false,
            Term::Set(items) => items.iter().any(Term::has_class),
            Term::Unary(_, t) => t.has_class(),
            Term::Binary(_, a, b) => a.has_class() || b.has_class(),
            Term::Class { .. } | Term::PairClass { .. } => true,
        }
    }
}

// -------------------- printing -------------------- //
//
// Output is fully parenthesized so that `parse(print(ast)) == ast`.

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Lit(s) => write!(f, "{s}"),
            Term::Set(items) => {
                f.write_str("{")?;
                for (i, t) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str("}")
            }
            Term::Unary(UnaryOp::Singleton, t) => write!(f, "[{t}]"),
            Term::Unary(op, t) => {
                let name = match op {
                    UnaryOp::Power => "pow",
                    UnaryOp::First => "fst",
                    UnaryOp::Second => "snd",
                    UnaryOp::BigUnion => "bigcup",
                    UnaryOp::BigIntersection => "bigcap",
                    UnaryOp::Domain => "dom",
                    UnaryOp::Range => "ran",
                    UnaryOp::Singleton => unreachable!(),
                };
                write!(f, "{name}({t})")
            }
            Term::Binary(BinaryOp::UnorderedPair, a, b) => write!(f, "[{a} | {b}]"),
            Term::Binary(BinaryOp::OrderedPair, a, b) => write!(f, "[{a}, {b}]"),
            Term::Binary(BinaryOp::Value, a, b) => write!(f, "({a})[{b}]"),
            Term::Binary(op, a, b) => {
                let sym = match op {
                    BinaryOp::Union => "∪",
                    BinaryOp::Intersection => "∩",
                    BinaryOp::Difference => "∖",
                    BinaryOp::Cartesian => "×",
                    _ => unreachable!(),
                };
                write!(f, "({a} {sym} {b})")
            }
            Term::Class { var, body } => write!(f, "{{{var} : {body}}}"),
            Term::PairClass { first, second, body } => write!(f, "{{({first}, {second}) : {body}}}"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::In(a, b) => write!(f, "{a} ∈ {b}"),
            Formula::Eq(a, b) => write!(f, "{a} = {b}"),
            Formula::Not(g) => write!(f, "~({g})"),
            Formula::And(a, b) => write!(f, "({a} /\\ {b})"),
            Formula::Or(a, b) => write!(f, "({a} \\/ {b})"),
            Formula::Implies(a, b) => write!(f, "({a} -> {b})"),
            Formula::Iff(a, b) => write!(f, "({a} <-> {b})"),
            Formula::Forall(v, g) => write!(f, "(forall {v}. {g})"),
            Formula::Exists(v, g) => write!(f, "(exists {v}. {g})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Term(t) => t.fmt(f),
            Expr::Formula(g) => g.fmt(f),
        }
    }
}
