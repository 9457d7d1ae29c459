//! Seeded generator of one-variable formulas for the classification-scheme sweep.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classifier::{BinaryOp, Formula, Term, UnaryOp};
use crate::hfs::HfSet;

pub const DEFAULT_CORPUS_SEED: u64 = 0x5eed;

/// `count` formulas of depth at most `max_depth` whose only free variable (if any) is `x`.
pub fn scheme_corpus(count: usize, max_depth: usize, seed: u64) -> Vec<Formula> {
    let mut g = Gen {
        rng: ChaCha8Rng::seed_from_u64(seed),
        fresh: 0,
    };
    (0..count)
        .map(|_| {
            let depth = g.rng.gen_range(0..=max_depth);
            g.formula(depth, &mut vec!["x".to_string()])
        })
        .collect()
}

struct Gen {
    rng: ChaCha8Rng,
    fresh: usize,
}

impl Gen {
    fn name(&mut self, scope: &[String]) -> String {
        // Now and then rebind a visible name to exercise shadowing.
        if self.rng.gen_bool(0.2) {
            if let Some(v) = scope.choose(&mut self.rng) {
                return v.clone();
            }
        }
        self.fresh += 1;
        format!("y{}", self.fresh % 4)
    }

    fn literal(&mut self) -> HfSet {
        let pool = HfSet::numeral(2).power_set();
        pool.members()[self.rng.gen_range(0..pool.len())].clone()
    }

    fn leaf(&mut self, scope: &[String]) -> Term {
        if self.rng.gen_bool(0.65) {
            Term::var(scope.choose(&mut self.rng).expect("x is always in scope"))
        } else {
            Term::Lit(self.literal())
        }
    }

    fn term(&mut self, budget: usize, scope: &mut Vec<String>) -> Term {
        if budget == 0 || self.rng.gen_bool(0.45) {
            return self.leaf(scope);
        }
        match self.rng.gen_range(0..9) {
            0 => Term::unary(UnaryOp::Power, self.leaf(scope)),
            1 => Term::unary(UnaryOp::Singleton, self.term(budget - 1, scope)),
            2 => Term::unary(UnaryOp::BigUnion, self.term(budget - 1, scope)),
            3..=6 => {
                let op = *[
                    BinaryOp::Union,
                    BinaryOp::Intersection,
                    BinaryOp::Difference,
                    BinaryOp::UnorderedPair,
                    BinaryOp::OrderedPair,
                ]
                .choose(&mut self.rng)
                .expect("nonempty");
                let a = self.term(budget - 1, scope);
                let b = self.term(budget - 1, scope);
                Term::binary(op, a, b)
            }
            7 => {
                let a = self.leaf(scope);
                let b = self.term(budget - 1, scope);
                Term::set(vec![a, b])
            }
            _ => {
                let v = self.name(scope);
                scope.push(v.clone());
                let body = self.atom(0, scope);
                scope.pop();
                Term::Class {
                    var: v,
                    body: Box::new(body),
                }
            }
        }
    }

    fn atom(&mut self, budget: usize, scope: &mut Vec<String>) -> Formula {
        let a = self.term(budget, scope);
        let b = self.term(budget, scope);
        if self.rng.gen_bool(0.7) {
            Formula::In(a, b)
        } else {
            Formula::Eq(a, b)
        }
    }

    fn formula(&mut self, depth: usize, scope: &mut Vec<String>) -> Formula {
        if depth == 0 {
            return self.atom(2, scope);
        }
        match self.rng.gen_range(0..7) {
            0 => Formula::not(self.formula(depth - 1, scope)),
            1..=4 => {
                let a = self.formula(depth - 1, scope);
                let sub = self.rng.gen_range(0..depth);
                let b = self.formula(sub, scope);
                match self.rng.gen_range(0..4) {
                    0 => Formula::and(a, b),
                    1 => Formula::or(a, b),
                    2 => Formula::implies(a, b),
                    _ => Formula::iff(a, b),
                }
            }
            k => {
                let v = self.name(scope);
                scope.push(v.clone());
                let body = self.formula(depth - 1, scope);
                scope.pop();
                if k == 5 {
                    Formula::forall(&v, body)
                } else {
                    Formula::exists(&v, body)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shape() {
        let c = scheme_corpus(200, 3, 1);
        assert_eq!(c.len(), 200);
        for f in &c {
            assert!(f.depth() <= 3, "{f}");
            assert!(f.free_vars().iter().all(|v| v == "x"), "{f}");
        }
        assert_eq!(c, scheme_corpus(200, 3, 1));
        assert!(c.iter().any(|f| !f.is_quantifier_free()));
    }
}
