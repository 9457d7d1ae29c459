//! Hausdorff's maximal principle: every nest extends to a maximal one.

use mklab::choice::ChoicePolicy;
use mklab::constructions::{hausdorff_extend_nest, hausdorff_maximal_nest};
use mklab::{HfSet, Result};

fn main() -> Result<()> {
    let a = HfSet::from_json("[[0], [1], [0, 1], [2], [0, 1, 2]]", false)?;
    let c = ChoicePolicy::Canonical;
    println!("A = {a}");
    println!("maximal nest from ∅: {}", hausdorff_maximal_nest(&a, &c)?);
    let n = HfSet::from_json("[[2]]", false)?;
    println!("maximal nest from {n}: {}", hausdorff_extend_nest(&a, &n, &c)?);
    let bad = HfSet::from_json("[[0], [1]]", false)?;
    println!(
        "{bad} is not a nest: {}",
        hausdorff_extend_nest(&a, &bad, &c).unwrap_err()
    );
    Ok(())
}
