//! The order-theory predicates, with the clause and witness of each failure.

use mklab::order::{
    check_finite_character, check_nest, check_total_order, check_well_order, extreme_element, extreme_member,
    is_chain, is_initial_segment, BinRel, Extreme,
};
use mklab::{HfSet, Result};

fn main() -> Result<()> {
    let n = HfSet::numeral;
    let x = n(3);
    let le = BinRel::from_fn(&x, |a, b| a.is_subset(b));
    println!("≤ on 3 by inclusion: {le:?}");
    println!("well order: {:?}", check_well_order(&le, &x));
    println!("0 is least: {}", extreme_element(Extreme::Min, &n(0), &x, &le)?);
    println!(
        "{{0, 2}} is a chain: {}",
        is_chain(&HfSet::from_members([n(0), n(2)]), &x, &le)?
    );
    println!(
        "{{0, 1}} is an initial segment: {}",
        is_initial_segment(&n(2), &x, &le)?
    );

    let discrete = BinRel::identity(&x);
    println!("identity on 3 is total: {:?}", check_total_order(&discrete, &x));

    let fam = HfSet::from_members([n(0), HfSet::singleton(n(1)), n(2)]);
    println!("nest {fam}: {:?}", check_nest(&fam));
    println!(
        "2 is the largest member: {}",
        extreme_member(Extreme::Max, &n(2), &fam)?
    );
    println!("finite character: {:?}", check_finite_character(&fam, &n(2))?);
    Ok(())
}
