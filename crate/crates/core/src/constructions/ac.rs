use super::{zermelo_transversal, Guards};
use crate::choice::{Choice, ChoiceFn};
use crate::error::{Error, Result};
use crate::hfs::HfSet;
use crate::order::{extreme_element, require_well_order, BinRel, Extreme};

/// A choice function of `X` from a transversal of `{A × {A} : A ∈ pow(X) ∖ {∅}}`:
/// `ε(A) = fst(⋂((A × {A}) ∩ D))`.
pub fn choice_from_zermelo(x: &HfSet, chooser: &dyn Choice, guards: &Guards) -> Result<ChoiceFn> {
    if x.len() > guards.ac_zermelo {
        return Err(Error::SizeGuardExceeded {
            what: "choice from Zermelo (|X|)",
            size: x.len(),
            limit: guards.ac_zermelo,
        });
    }
    let tilde: Vec<HfSet> = x.subsets().filter(|a| !a.is_empty()).collect();
    let tag = |a: &HfSet| a.cartesian(&HfSet::singleton(a.clone()));
    let p: HfSet = tilde.iter().map(tag).collect();
    let d = zermelo_transversal(&p, chooser, guards)?;
    let table = tilde
        .iter()
        .map(|a| {
            let hit = tag(a).intersection(&d).big_intersection()?;
            Ok(HfSet::ordered_pair(a.clone(), hit.fst()?))
        })
        .collect::<Result<HfSet>>()?;
    ChoiceFn::new(table, x.clone()).map_err(|e| Error::Invariant(e.to_string()))
}

/// `ε(A)` = the least element of `A` under a well order of `X`.
pub fn choice_from_wellorder(x: &HfSet, le: &BinRel) -> Result<ChoiceFn> {
    require_well_order(le, x)?;
    let table = x
        .subsets()
        .filter(|a| !a.is_empty())
        .map(|a| {
            let restricted = le.restrict(&a);
            let mut least = None;
            for z in a.iter() {
                if extreme_element(Extreme::Min, z, &a, &restricted)? {
                    least = Some(z.clone());
                    break;
                }
            }
            let z = least.ok_or_else(|| Error::Invariant(format!("{a} has no least element")))?;
            Ok(HfSet::ordered_pair(a, z))
        })
        .collect::<Result<HfSet>>()?;
    ChoiceFn::new(table, x.clone()).map_err(|e| Error::Invariant(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::choice::ChoicePolicy;
    use crate::constructions::wellorder_construct;
    use crate::order::is_choice_function;

    fn n(k: usize) -> HfSet {
        HfSet::numeral(k)
    }

    #[test]
    fn from_zermelo_examples() {
        let g = Guards::default();
        let c = ChoicePolicy::Canonical;
        let eps = choice_from_zermelo(&n(2), &c, &g).unwrap();
        assert_eq!(eps.domain_size(), 3);
        assert!(is_choice_function(eps.table(), &n(2)));
        assert_eq!(
            choice_from_zermelo(&HfSet::empty(), &c, &g)
                .unwrap()
                .domain_size(),
            0
        );
        let one = choice_from_zermelo(&n(1), &c, &g).unwrap();
        assert_eq!(one.apply(&n(1)).unwrap(), n(0));
        let eps3 = choice_from_zermelo(&n(3), &ChoicePolicy::Seeded(5), &g).unwrap();
        assert_eq!(eps3.domain_size(), 7);
        assert!(matches!(
            choice_from_zermelo(&n(4), &c, &g),
            Err(Error::SizeGuardExceeded { .. })
        ));
    }

    #[test]
    fn from_wellorder_examples() {
        let le = BinRel::from_fn(&n(2), |a, b| a.is_subset(b));
        let eps = choice_from_wellorder(&n(2), &le).unwrap();
        assert_eq!(eps.apply(&n(2)).unwrap(), n(0));
        assert_eq!(eps.apply(&HfSet::singleton(n(1))).unwrap(), n(1));
        assert_eq!(
            choice_from_wellorder(&HfSet::empty(), &BinRel::empty())
                .unwrap()
                .domain_size(),
            0
        );
        let le3 = wellorder_construct(&n(3), &Guards::default(), &ChoicePolicy::Canonical).unwrap();
        let eps3 = choice_from_wellorder(&n(3), &le3).unwrap();
        assert_eq!(eps3.domain_size(), 7);
        assert!(is_choice_function(eps3.table(), &n(3)));
        assert!(matches!(
            choice_from_wellorder(&n(2), &BinRel::identity(&n(2))),
            Err(Error::NotAWellOrder(_))
        ));
    }
}
