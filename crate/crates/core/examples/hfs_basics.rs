//! Canonical hereditarily finite sets: numerals, pairs, power sets, JSON.

use mklab::hfs::rank_universe;
use mklab::{HfSet, Result};

fn main() -> Result<()> {
    let three = HfSet::numeral(3);
    println!("3 = {three} = {}", three.to_json());

    let p = HfSet::ordered_pair(HfSet::numeral(1), HfSet::numeral(2));
    println!("⟨1, 2⟩ = {p}, fst = {}, snd = {}", p.fst()?, p.snd()?);

    let pow = three.power_set();
    println!("|pow(3)| = {}, ⋃pow(3) = {}", pow.len(), pow.big_union());

    for k in 0..=4 {
        println!("|V_{k}| = {}", rank_universe(k)?.len());
    }

    // Lenient JSON: any order, repeats, numeral shorthand. Strict JSON is canonical only.
    let loose = HfSet::from_json("[2, [], 1, 1]", false)?;
    println!("lenient [2, [], 1, 1] = {loose}");
    println!(
        "strict [[],[]] -> {:?}",
        HfSet::from_json("[[],[]]", true).unwrap_err()
    );

    let x = HfSet::from_members([HfSet::numeral(2), HfSet::singleton(HfSet::numeral(2))]);
    println!("regularity witness of {x}: {}", x.regularity_witness()?);
    Ok(())
}
