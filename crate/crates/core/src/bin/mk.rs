use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use mklab::choice::ChoicePolicy;
use mklab::harness::cli::{self, DemoKind, Evaluated, DEFAULT_EVAL_RANK};
use mklab::harness::{run_suite, SuiteName, SuiteParams};
use mklab::Error;

#[derive(Parser)]
#[command(
    name = "mk",
    about = "Finite-model lab for Morse-Kelley set theory and the axiom of choice"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a term (prints its JSON value) or a formula (prints true/false).
    Eval {
        expr: String,
        /// Bind a free variable: name=JSON. Repeatable.
        #[arg(long = "env", value_name = "NAME=JSON")]
        env: Vec<String>,
        /// Quantifiers and comprehensions range over V_k.
        #[arg(long = "universe-rank", alias = "rank", default_value_t = DEFAULT_EVAL_RANK)]
        rank: usize,
    },
    /// Run an order-theory predicate; prints the verdict and a witness when it fails.
    Check {
        predicate: String,
        #[arg(long, value_name = "JSON")]
        args: String,
    },
    /// Run one construction and verify its postconditions.
    Demo {
        kind: DemoKind,
        #[arg(long, value_name = "JSON")]
        input: String,
        #[arg(long, default_value = "canonical")]
        choice: ChoicePolicy,
        /// Override the size guard of this construction.
        #[arg(long)]
        guard: Option<usize>,
    },
    /// Run a theorem suite over every small instance.
    Suite {
        name: SuiteName,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        atoms: Option<usize>,
        #[arg(long, default_value = "canonical")]
        choice: ChoicePolicy,
        /// Also write the report to this file.
        #[arg(long, value_name = "PATH")]
        json: Option<String>,
        /// Report millis as 0 so that reruns are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
}

fn parse_json(text: &str) -> Result<Value, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

// A closed pipe (e.g. `| head`) is not an error worth a panic.
fn emit(text: impl std::fmt::Display) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}

/// `Ok(true)` is exit 0, `Ok(false)` is exit 1.
fn run(cmd: Cmd) -> Result<bool, Error> {
    match cmd {
        Cmd::Eval { expr, env, rank } => {
            let bindings = env
                .iter()
                .map(|b| cli::parse_binding(b))
                .collect::<Result<Vec<_>, _>>()?;
            match cli::eval(&expr, &bindings, rank)? {
                Evaluated::Value(v) => {
                    emit(v.to_json());
                    Ok(true)
                }
                Evaluated::Truth(b) => {
                    emit(b);
                    Ok(b)
                }
            }
        }
        Cmd::Check { predicate, args } => {
            let verdict = cli::check(&predicate, &parse_json(&args)?)?;
            emit(pretty(&verdict));
            Ok(verdict.holds)
        }
        Cmd::Demo {
            kind,
            input,
            choice,
            guard,
        } => {
            let d = cli::demo(kind, &parse_json(&input)?, &choice, guard)?;
            emit(pretty(&d));
            Ok(d.verified())
        }
        Cmd::Suite {
            name,
            n,
            atoms,
            choice,
            json,
            no_timing,
        } => {
            let params = SuiteParams {
                n,
                atoms,
                choice,
                no_timing,
                ..SuiteParams::default()
            };
            let report = run_suite(name, &params)?;
            let text = report.to_json();
            if let Some(path) = json {
                fs::write(&path, format!("{text}\n")).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            }
            emit(&text);
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("mk: {e}");
            ExitCode::from(2)
        }
    }
}
