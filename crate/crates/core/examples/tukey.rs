//! Tukey's lemma: a maximal member of a family of finite character, via f′0.

use mklab::choice::ChoicePolicy;
use mklab::constructions::tukey_with;
use mklab::{HfSet, Result};

fn main() -> Result<()> {
    // Everything below {0, 1} or {2}: downward closed, hence of finite character.
    let f = HfSet::from_json("[[], [0], [1], [0, 1], [2]]", false)?;
    for choice in [ChoicePolicy::Canonical, ChoicePolicy::Seeded(7)] {
        let s = tukey_with(&f, &choice)?;
        println!("[{choice}] f′0 = {}", s.f0);
        for step in &s.trace {
            println!("    χ({}) = {}", step.from, step.to);
        }
        println!("    maximal member ⋃f′0 = {}", s.maximal);
    }
    Ok(())
}
