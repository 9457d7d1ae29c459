//! Theorem suites over every small instance, with JSON reports.

pub mod cli;
pub mod corpus;
pub mod enumerate;
pub mod oracle;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::choice::ChoicePolicy;
use crate::constructions::Guards;
use crate::error::{Error, Result};

pub use enumerate::{enumerate, EnumKind, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteName {
    Axioms,
    Scheme,
    Tukey,
    Hausdorff,
    MaxPrinciple,
    Zermelo,
    Zorn,
    WellOrder,
    Ac,
    Lemmas,
    Equivalence,
}

impl SuiteName {
    pub const ALL: [SuiteName; 11] = [
        SuiteName::Axioms,
        SuiteName::Scheme,
        SuiteName::Tukey,
        SuiteName::Hausdorff,
        SuiteName::MaxPrinciple,
        SuiteName::Zermelo,
        SuiteName::Zorn,
        SuiteName::WellOrder,
        SuiteName::Ac,
        SuiteName::Lemmas,
        SuiteName::Equivalence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Axioms => "axioms",
            SuiteName::Scheme => "scheme",
            SuiteName::Tukey => "tukey",
            SuiteName::Hausdorff => "hausdorff",
            SuiteName::MaxPrinciple => "maxprinciple",
            SuiteName::Zermelo => "zermelo",
            SuiteName::Zorn => "zorn",
            SuiteName::WellOrder => "wellorder",
            SuiteName::Ac => "ac",
            SuiteName::Lemmas => "lemmas",
            SuiteName::Equivalence => "equivalence",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite `{s}`")))
    }
}

/// Knobs for a suite run. `None` picks the suite's own default size.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteParams {
    pub n: Option<usize>,
    pub atoms: Option<usize>,
    pub choice: ChoicePolicy,
    pub guards: Guards,
    /// Leave `millis` at zero so that reports are byte-for-byte reproducible.
    pub no_timing: bool,
}

impl SuiteParams {
    pub fn with_choice(choice: ChoicePolicy) -> Self {
        Self {
            choice,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub clause: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: Value,
    pub instances: usize,
    pub expected_errors: usize,
    pub failures: Vec<Failure>,
    pub millis: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Instances that were actually checked, as opposed to rejected up front.
    pub fn checked(&self) -> usize {
        self.instances - self.expected_errors
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Tally of one suite run.
#[derive(Default)]
pub(crate) struct Run {
    instances: usize,
    expected_errors: usize,
    failures: Vec<Failure>,
}

impl Run {
    /// One instance whose check produced the listed violated clauses (none means it passed).
    pub(crate) fn record(&mut self, instance: impl fmt::Display, outcome: Result<Vec<String>>) {
        self.instances += 1;
        let clauses = match outcome {
            Ok(c) => c,
            Err(e) => vec![format!("error: {e}")],
        };
        let instance = instance.to_string();
        self.failures.extend(clauses.into_iter().map(|clause| Failure {
            instance: instance.clone(),
            clause,
        }));
    }

    /// One instance that must be rejected with an error satisfying `expected`.
    pub(crate) fn expect_error<T>(
        &mut self,
        instance: impl fmt::Display,
        outcome: Result<T>,
        expected: impl FnOnce(&Error) -> bool,
    ) {
        self.instances += 1;
        match outcome {
            Err(e) if expected(&e) => self.expected_errors += 1,
            Err(e) => self.failures.push(Failure {
                instance: instance.to_string(),
                clause: format!("wrong error: {e}"),
            }),
            Ok(_) => self.failures.push(Failure {
                instance: instance.to_string(),
                clause: "expected a precondition error".into(),
            }),
        }
    }
}

/// Collects violated clauses for one instance.
#[derive(Default)]
pub(crate) struct Clauses(Vec<String>);

impl Clauses {
    pub(crate) fn ensure(&mut self, ok: bool, clause: impl Into<String>) {
        if !ok {
            self.0.push(clause.into());
        }
    }

    pub(crate) fn done(self) -> Result<Vec<String>> {
        Ok(self.0)
    }
}

pub fn run_suite(name: SuiteName, params: &SuiteParams) -> Result<Report> {
    let start = Instant::now();
    let (run, sizes) = suites::run(name, params)?;
    let millis = if params.no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    };
    let mut p = json!({ "choice": params.choice.to_string() });
    if let (Value::Object(map), Value::Object(extra)) = (&mut p, sizes) {
        map.extend(extra);
    }
    Ok(Report {
        suite: name.to_string(),
        params: p,
        instances: run.instances,
        expected_errors: run.expected_errors,
        failures: run.failures,
        millis,
    })
}
