use std::collections::BTreeMap;

use super::{BinaryOp, Formula, Term, UnaryOp};
use crate::error::{Error, Result};
use crate::hfs::{rank_universe_capped, HfSet, DEFAULT_RANK_CAP};

/// Variable assignment. Binding a name twice replaces the earlier value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Env(BTreeMap<String, HfSet>);

impl Env {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, name: impl Into<String>, value: HfSet) -> &mut Self {
        self.0.insert(name.into(), value);
        self
    }

    pub fn with(mut self, name: impl Into<String>, value: HfSet) -> Self {
        self.bind(name, value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&HfSet> {
        self.0.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &HfSet)> {
        self.0.iter()
    }
}

/// The finite domain that quantifiers and class builders range over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    pub carrier: HfSet,
    /// Set when the carrier is a cumulative level `V_k`.
    pub rank: Option<usize>,
}

impl Universe {
    /// `V_k`, subject to the default rank cap.
    pub fn rank(k: usize) -> Result<Self> {
        Self::rank_capped(k, DEFAULT_RANK_CAP)
    }

    pub fn rank_capped(k: usize, cap: usize) -> Result<Self> {
        Ok(Self {
            carrier: rank_universe_capped(k, cap)?,
            rank: Some(k),
        })
    }

    pub fn of(carrier: HfSet) -> Self {
        Self { carrier, rank: None }
    }
}

/// Which variables a class builder binds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Binder {
    Single(String),
    Pair(String, String),
}

/// Evaluation scope: the caller's environment plus a stack of bound variables.
struct Scope<'a> {
    env: &'a Env,
    universe: &'a Universe,
    locals: Vec<(String, HfSet)>,
}

impl Scope<'_> {
    fn lookup(&self, name: &str) -> Result<HfSet> {
        self.locals
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.clone())
            .or_else(|| self.env.get(name).cloned())
            .ok_or_else(|| Error::UnboundVariable(name.to_string()))
    }

    fn with_local<T>(&mut self, name: &str, value: HfSet, f: impl FnOnce(&mut Self) -> T) -> T {
        self.locals.push((name.to_string(), value));
        let out = f(self);
        self.locals.pop();
        out
    }

    fn term(&mut self, t: &Term) -> Result<HfSet> {
        Ok(match t {
            Term::Var(v) => self.lookup(v)?,
            Term::Lit(s) => s.clone(),
            Term::Set(items) => items.iter().map(|i| self.term(i)).collect::<Result<HfSet>>()?,
            Term::Unary(op, a) => {
                let a = self.term(a)?;
                match op {
                    UnaryOp::Power => {
                        if a.len() > 16 {
                            return Err(Error::SizeGuardExceeded {
                                what: "power set",
                                size: a.len(),
                                limit: 16,
                            });
                        }
                        a.power_set()
                    }
                    UnaryOp::Singleton => HfSet::singleton(a),
                    UnaryOp::First => a.fst()?,
                    UnaryOp::Second => a.snd()?,
                    UnaryOp::BigUnion => a.big_union(),
                    UnaryOp::BigIntersection => a.big_intersection()?,
                    UnaryOp::Domain => a.domain()?,
                    UnaryOp::Range => a.range()?,
                }
            }
            Term::Binary(op, a, b) => {
                let (a, b) = (self.term(a)?, self.term(b)?);
                match op {
                    BinaryOp::Union => a.union(&b),
                    BinaryOp::Intersection => a.intersection(&b),
                    BinaryOp::Difference => a.difference(&b),
                    BinaryOp::Cartesian => a.cartesian(&b),
                    BinaryOp::UnorderedPair => HfSet::unordered_pair(a, b),
                    BinaryOp::OrderedPair => HfSet::ordered_pair(a, b),
                    BinaryOp::Value => a.value(&b)?,
                }
            }
            Term::Class { var, body } => self.class(&Binder::Single(var.clone()), body)?,
            Term::PairClass { first, second, body } => {
                self.class(&Binder::Pair(first.clone(), second.clone()), body)?
            }
        })
    }

    fn class(&mut self, binder: &Binder, body: &Formula) -> Result<HfSet> {
        let carrier = self.universe.carrier.clone();
        let mut out = Vec::new();
        match binder {
            Binder::Single(v) => {
                for b in carrier.iter() {
                    if self.with_local(v, b.clone(), |s| s.formula(body))? {
                        out.push(b.clone());
                    }
                }
            }
            Binder::Pair(u, v) => {
                for a in carrier.iter() {
                    for b in carrier.iter() {
                        let holds = self
                            .with_local(u, a.clone(), |s| s.with_local(v, b.clone(), |s| s.formula(body)))?;
                        if holds {
                            out.push(HfSet::ordered_pair(a.clone(), b.clone()));
                        }
                    }
                }
            }
        }
        Ok(HfSet::from_members(out))
    }

    fn formula(&mut self, f: &Formula) -> Result<bool> {
        Ok(match f {
            Formula::In(a, b) => {
                let a = self.term(a)?;
                self.term(b)?.contains(&a)
            }
            Formula::Eq(a, b) => self.term(a)? == self.term(b)?,
            Formula::Not(g) => !self.formula(g)?,
            Formula::And(a, b) => self.formula(a)? && self.formula(b)?,
            Formula::Or(a, b) => self.formula(a)? || self.formula(b)?,
            Formula::Implies(a, b) => !self.formula(a)? || self.formula(b)?,
            Formula::Iff(a, b) => self.formula(a)? == self.formula(b)?,
            Formula::Forall(v, g) => {
                let carrier = self.universe.carrier.clone();
                for b in carrier.iter() {
                    if !self.with_local(v, b.clone(), |s| s.formula(g))? {
                        return Ok(false);
                    }
                }
                true
            }
            Formula::Exists(v, g) => {
                let carrier = self.universe.carrier.clone();
                for b in carrier.iter() {
                    if self.with_local(v, b.clone(), |s| s.formula(g))? {
                        return Ok(true);
                    }
                }
                false
            }
        })
    }
}

fn scope<'a>(env: &'a Env, universe: &'a Universe) -> Scope<'a> {
    Scope {
        env,
        universe,
        locals: Vec::new(),
    }
}

pub fn eval_term(t: &Term, env: &Env, u: &Universe) -> Result<HfSet> {
    scope(env, u).term(t)
}

pub fn eval_formula(f: &Formula, env: &Env, u: &Universe) -> Result<bool> {
    scope(env, u).formula(f)
}

/// `{b ∈ carrier : F(b)}`, or the encoded pairs `⟨a, b⟩` over `carrier²` satisfying `F(a, b)`.
pub fn comprehend(binder: &Binder, body: &Formula, env: &Env, u: &Universe) -> Result<HfSet> {
    scope(env, u).class(binder, body)
}

/// Checks the classification scheme for `body` over every carrier element `b`:
/// `b ∈ {x : F(x)}` iff `F(b)`.
///
/// The right-hand side is computed by literal substitution `F[x := b]` under an empty
/// environment, independent of the environment-binding route used by [`comprehend`].
pub fn check_scheme(body: &Formula, u: &Universe) -> Result<bool> {
    let free: Vec<String> = body.free_vars().into_iter().collect();
    let var = match free.as_slice() {
        [] => "x".to_string(),
        [v] => v.clone(),
        _ => return Err(Error::TooManyFreeVariables(free)),
    };
    let class = comprehend(&Binder::Single(var.clone()), body, &Env::new(), u)?;
    for b in u.carrier.iter() {
        let lhs = class.contains(b);
        let rhs = eval_formula(&body.substitute(&var, b), &Env::new(), u)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::super::{parse_formula, parse_term};
    use super::*;

    fn n(k: usize) -> HfSet {
        HfSet::numeral(k)
    }

    #[test]
    fn term_examples() {
        let env = Env::new().with("A", n(2));
        let u = Universe::rank(2).unwrap();
        assert_eq!(
            eval_term(&parse_term("A ∪ [A]").unwrap(), &env, &u).unwrap(),
            n(3)
        );
        assert_eq!(eval_term(&parse_term("pow(∅)").unwrap(), &env, &u).unwrap(), n(1));
        assert_eq!(
            eval_term(&parse_term("B").unwrap(), &env, &u),
            Err(Error::UnboundVariable("B".into()))
        );
        assert_eq!(
            eval_term(&parse_term("fst(3)").unwrap(), &env, &u),
            Err(Error::NotAPair(n(3)))
        );
    }

    #[test]
    fn formula_examples() {
        let env = Env::new();
        for k in 0..=3 {
            let u = Universe::rank(k).unwrap();
            assert!(eval_formula(&parse_formula("0 ∈ 2").unwrap(), &env, &u).unwrap());
            assert!(eval_formula(&parse_formula("forall x (x ∈ 1 -> x = ∅)").unwrap(), &env, &u).unwrap());
            assert!(!eval_formula(&parse_formula("exists x (x ∈ ∅)").unwrap(), &env, &u).unwrap());
        }
    }

    #[test]
    fn comprehension_examples() {
        let u = Universe::rank(2).unwrap();
        let env = Env::new();
        let x = Binder::Single("x".into());
        assert_eq!(
            comprehend(&x, &parse_formula("x ∈ 2").unwrap(), &env, &u).unwrap(),
            n(2)
        );
        assert!(comprehend(&x, &parse_formula("~ x = x").unwrap(), &env, &u)
            .unwrap()
            .is_empty());
        let uv = Binder::Pair("u".into(), "v".into());
        assert_eq!(
            comprehend(&uv, &parse_formula("u ∈ v").unwrap(), &env, &u).unwrap(),
            HfSet::singleton(HfSet::ordered_pair(n(0), n(1)))
        );
        // The same thing through the term syntax.
        assert_eq!(
            eval_term(&parse_term("{(u,v) : u ∈ v}").unwrap(), &env, &u).unwrap(),
            HfSet::singleton(HfSet::ordered_pair(n(0), n(1)))
        );
    }

    #[test]
    fn scheme_examples() {
        let u3 = Universe::rank(3).unwrap();
        assert!(check_scheme(&parse_formula("x ∈ 2").unwrap(), &u3).unwrap());
        assert!(check_scheme(&parse_formula("x = x").unwrap(), &u3).unwrap());
        assert!(check_scheme(&parse_formula("~ x = x").unwrap(), &u3).unwrap());
        assert!(matches!(
            check_scheme(&parse_formula("x ∈ y").unwrap(), &u3),
            Err(Error::TooManyFreeVariables(_))
        ));
    }

    #[test]
    fn inner_binders_shadow_outer() {
        let u = Universe::rank(2).unwrap();
        let env = Env::new().with("x", n(5));
        let f = parse_formula("(exists x (x = 0)) /\\ x = 5").unwrap();
        assert!(eval_formula(&f, &env, &u).unwrap());
        let sub = f.substitute("x", &n(1));
        assert_eq!(sub.free_vars().len(), 0);
        assert!(!eval_formula(&sub, &Env::new(), &u).unwrap());
    }
}
