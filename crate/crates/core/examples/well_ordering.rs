//! The well-ordering theorem: Zorn on the well-ordered subsets (L, ≺).

use mklab::choice::ChoicePolicy;
use mklab::constructions::{en_l, lee, wellorder_construct, Guards};
use mklab::order::is_well_order;
use mklab::{HfSet, Result};

fn main() -> Result<()> {
    let g = Guards::default();
    let x = HfSet::from_json("[0, 1, [1]]", false)?;
    let l = en_l(&x, &g)?;
    println!("X = {x}: |L| = {}, |≺| = {}", l.len(), lee(&l).len());
    for choice in [ChoicePolicy::Canonical, ChoicePolicy::Seeded(5)] {
        let le = wellorder_construct(&x, &g, &choice)?;
        println!("[{choice}] {le:?} well order: {}", is_well_order(&le, &x));
    }
    let four = HfSet::numeral(4);
    println!(
        "|X| = 4: {}",
        wellorder_construct(&four, &g, &ChoicePolicy::Canonical).unwrap_err()
    );
    Ok(())
}
