//! Zermelo's postulate: a disjoint family of nonempty sets has a transversal.

use mklab::choice::ChoicePolicy;
use mklab::constructions::{partial_transversals, zermelo_transversal, Guards};
use mklab::{HfSet, Result};

fn main() -> Result<()> {
    let g = Guards::default();
    let a = HfSet::from_json("[[0], [1, 2], [3, 4, 5]]", false)?;
    println!(
        "A = {a}, {} partial transversals",
        partial_transversals(&a, &g)?.len()
    );
    for choice in [ChoicePolicy::Canonical, ChoicePolicy::Seeded(11)] {
        println!(
            "[{choice}] transversal: {}",
            zermelo_transversal(&a, &choice, &g)?
        );
    }
    let with_empty = HfSet::from_json("[[], [1]]", false)?;
    println!(
        "{with_empty}: {}",
        zermelo_transversal(&with_empty, &ChoicePolicy::Canonical, &g).unwrap_err()
    );
    Ok(())
}
