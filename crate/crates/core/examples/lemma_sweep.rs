//! Every named lemma on a few instances, then the full suites with their tallies.

use mklab::choice::ChoicePolicy;
use mklab::constructions::{verify_lemma, Guards, LemmaId, LemmaInstance, LemmaShape};
use mklab::harness::enumerate::posets;
use mklab::harness::{run_suite, SuiteName, SuiteParams};
use mklab::{HfSet, Result};

fn main() -> Result<()> {
    let c = ChoicePolicy::Canonical;
    let g = Guards::default();
    let (x, le) = posets(3)?.swap_remove(7);
    for id in LemmaId::ALL {
        let inst = match id.shape() {
            LemmaShape::FiniteCharacterFamily => LemmaInstance::family(HfSet::numeral(2).power_set()),
            LemmaShape::AnyFamily => LemmaInstance::family(HfSet::from_json("[[0], [1], [0, 2]]", false)?),
            LemmaShape::Poset => LemmaInstance::poset(x.clone(), le.clone()),
            LemmaShape::Carrier => LemmaInstance::carrier(HfSet::numeral(2)),
        };
        let v = verify_lemma(id, &inst, &c, &g)?;
        println!("{:<18} holds = {} over {} cases", id.name(), v.holds, v.checked);
    }

    println!();
    for name in SuiteName::ALL {
        let r = run_suite(name, &SuiteParams::default())?;
        println!(
            "{:<13} {:>6} instances {:>3} expected errors {:>2} failures {:>5} ms",
            name.as_str(),
            r.instances,
            r.expected_errors,
            r.failures.len(),
            r.millis
        );
    }
    Ok(())
}
