//! The classifier language: parse, print, evaluate over V_k, and the scheme check.

use mklab::classifier::{check_scheme, eval_formula, eval_term, parse_formula, parse_term, Env, Universe};
use mklab::{HfSet, Result};

fn main() -> Result<()> {
    let u = Universe::rank(3)?;
    let env = Env::new().with("a", HfSet::numeral(2));

    for text in [
        "a \\cup {a}",
        "{x : x ∈ a}",
        "{(u, v) : u ∈ v /\\ v ∈ a}",
        "pow(a) \\setminus {0}",
    ] {
        let t = parse_term(text)?;
        println!("{t}  =>  {}", eval_term(&t, &env, &u)?);
    }

    for text in [
        "forall x (x ∈ a -> x ∈ pow(a))",
        "exists y (a ∈ y /\\ ~ y = a)",
        "0 = {}",
    ] {
        let f = parse_formula(text)?;
        println!("{f}  =>  {}", eval_formula(&f, &env, &u)?);
    }

    // b ∈ {x : F(x)} iff F(b), for every b of the universe.
    let body = parse_formula("exists y (y ∈ x /\\ ~ y = 0)")?;
    println!("scheme holds for `{body}` over V_3: {}", check_scheme(&body, &u)?);
    Ok(())
}
