//! Around the cycle: a choice function drives Tukey, and choice functions come back out of
//! Zermelo's postulate and out of a well order.

use mklab::choice::{ChoiceFn, ChoicePolicy};
use mklab::constructions::{
    choice_from_wellorder, choice_from_zermelo, tukey_with, wellorder_construct, Guards,
};
use mklab::order::is_choice_function;
use mklab::{HfSet, Result};

fn show(label: &str, eps: &ChoiceFn) {
    println!(
        "{label}: {} entries, valid = {}",
        eps.domain_size(),
        is_choice_function(eps.table(), eps.base())
    );
    for p in eps.table().iter() {
        println!("    ε({}) = {}", p.fst().unwrap(), p.snd().unwrap());
    }
}

fn main() -> Result<()> {
    let g = Guards::default();
    let x = HfSet::numeral(3);
    let seeded = ChoicePolicy::Seeded(42);

    let eps0 = ChoiceFn::tabulate(&x, &seeded)?;
    show("AC (seeded)", &eps0);
    println!(
        "Tukey on pow(X) with it: {}",
        tukey_with(&x.power_set(), &eps0)?.maximal
    );

    let eps_z = choice_from_zermelo(&x, &seeded, &g)?;
    show("from Zermelo", &eps_z);

    let le = wellorder_construct(&x, &g, &seeded)?;
    let eps_w = choice_from_wellorder(&x, &le)?;
    show("from the well order", &eps_w);

    println!(
        "Tukey again, driven by ε_w: {}",
        tukey_with(&x.power_set(), &eps_w)?.maximal
    );
    Ok(())
}
