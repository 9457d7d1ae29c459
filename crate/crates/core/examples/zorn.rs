//! Zorn's lemma on a small poset, through the family of lower sets.

use mklab::choice::ChoicePolicy;
use mklab::constructions::{lower_sets, zorn_maximal_element};
use mklab::order::BinRel;
use mklab::{HfSet, Result};

fn main() -> Result<()> {
    // 0 below 1 and 2; 1 and 2 incomparable; 3 isolated.
    let x = HfSet::numeral(4);
    let le = BinRel::from_fn(&x, |a, b| {
        a == b || (a.is_empty() && b.as_numeral().is_some_and(|k| k < 3))
    });
    println!("≤ = {le:?}");
    println!("lower sets: {}", lower_sets(&x, &x, &le));
    for seed in 0..4 {
        let c = ChoicePolicy::Seeded(seed);
        println!("[{c}] {:?}", zorn_maximal_element(&x, &le, &c)?);
    }
    println!(
        "empty poset: {:?}",
        zorn_maximal_element(&HfSet::empty(), &BinRel::empty(), &ChoicePolicy::Canonical)?
    );
    Ok(())
}
