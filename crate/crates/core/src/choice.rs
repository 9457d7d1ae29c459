//! Choice functions: materialized tables and the lazy choosers used to drive constructions.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hfs::HfSet;
use crate::order::check_choice_function;

/// Something that picks a member out of any nonempty set it is asked about.
pub trait Choice {
    fn choose(&self, a: &HfSet) -> Result<HfSet>;
}

impl<C: Choice + ?Sized> Choice for &C {
    fn choose(&self, a: &HfSet) -> Result<HfSet> {
        (**self).choose(a)
    }
}

/// How a construction should pick: the canonical least member, or a seeded pseudo-random one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ChoicePolicy {
    #[default]
    Canonical,
    Seeded(u64),
}

impl Choice for ChoicePolicy {
    fn choose(&self, a: &HfSet) -> Result<HfSet> {
        if a.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(match self {
            ChoicePolicy::Canonical => a.members()[0].clone(),
            ChoicePolicy::Seeded(seed) => {
                // Seeded per argument, so the chooser is a function of `a` and not of call order.
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fingerprint(a));
                a.members()[rng.gen_range(0..a.len())].clone()
            }
        })
    }
}

impl fmt::Display for ChoicePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChoicePolicy::Canonical => f.write_str("canonical"),
            ChoicePolicy::Seeded(s) => write!(f, "seed:{s}"),
        }
    }
}

impl FromStr for ChoicePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "canonical" | "min" => Ok(ChoicePolicy::Canonical),
            other => other
                .strip_prefix("seed:")
                .and_then(|n| n.trim().parse().ok())
                .map(ChoicePolicy::Seeded)
                .ok_or_else(|| Error::Usage(format!("unknown choice policy `{other}`"))),
        }
    }
}

impl Serialize for ChoicePolicy {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// FNV-1a over the canonical JSON encoding.
pub fn fingerprint(a: &HfSet) -> u64 {
    a.to_json().bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

/// A choice function of `base`, stored as its table of pairs `⟨A, ε(A)⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChoiceFn {
    table: HfSet,
    base: HfSet,
}

/// Largest base whose full table is built eagerly.
pub const CHOICE_TABLE_LIMIT: usize = 12;

impl ChoiceFn {
    pub fn new(table: HfSet, base: HfSet) -> Result<Self> {
        check_choice_function(&table, &base).map_err(|v| {
            let witness: Vec<String> = v.witness.iter().map(ToString::to_string).collect();
            Error::NotAChoiceFunction(format!("{} fails at [{}]", v.clause, witness.join(", ")))
        })?;
        Ok(Self { table, base })
    }

    /// Tabulates `chooser` over every nonempty subset of `base`.
    pub fn tabulate(base: &HfSet, chooser: &dyn Choice) -> Result<Self> {
        if base.len() > CHOICE_TABLE_LIMIT {
            return Err(Error::SizeGuardExceeded {
                what: "choice table base",
                size: base.len(),
                limit: CHOICE_TABLE_LIMIT,
            });
        }
        let table = base
            .subsets()
            .filter(|a| !a.is_empty())
            .map(|a| {
                let v = chooser.choose(&a)?;
                Ok(HfSet::ordered_pair(a, v))
            })
            .collect::<Result<HfSet>>()?;
        Self::new(table, base.clone())
    }

    pub fn table(&self) -> &HfSet {
        &self.table
    }

    pub fn base(&self) -> &HfSet {
        &self.base
    }

    pub fn domain_size(&self) -> usize {
        self.table.len()
    }

    pub fn apply(&self, a: &HfSet) -> Result<HfSet> {
        self.table.value(a)
    }
}

impl Choice for ChoiceFn {
    fn choose(&self, a: &HfSet) -> Result<HfSet> {
        self.apply(a)
    }
}
