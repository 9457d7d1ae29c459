//! Maximal principle: a family whose nests are bounded in it has a maximal member.

use mklab::choice::ChoicePolicy;
use mklab::constructions::maximal_principle_member;
use mklab::{Error, HfSet, Result};

fn main() -> Result<()> {
    let a = HfSet::from_json("[[0], [1], [0, 2], [1, 2]]", false)?;
    for choice in [ChoicePolicy::Canonical, ChoicePolicy::Seeded(3)] {
        println!(
            "[{choice}] maximal member of {a}: {}",
            maximal_principle_member(&a, &choice)?
        );
    }
    let empty = maximal_principle_member(&HfSet::empty(), &ChoicePolicy::Canonical);
    assert!(matches!(empty, Err(Error::EmptyFamily)));
    println!("empty family: {}", empty.unwrap_err());
    Ok(())
}
