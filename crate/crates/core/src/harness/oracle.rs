//! Brute-force reference answers, written without the order-theory predicates they check.

use crate::hfs::HfSet;
use crate::order::BinRel;

/// Members of `f` not properly contained in another member.
pub fn maximal_members(f: &HfSet) -> Vec<HfSet> {
    f.iter()
        .filter(|a| !f.iter().any(|b| b != *a && a.iter().all(|x| b.contains(x))))
        .cloned()
        .collect()
}

/// Elements of `X` with nothing strictly above them.
pub fn maximal_elements(x: &HfSet, le: &BinRel) -> Vec<HfSet> {
    let pairs = le.pairs();
    x.iter()
        .filter(|v| !pairs.iter().any(|(a, b)| a == *v && b != *v))
        .cloned()
        .collect()
}

/// Every nest inside `a` (including the empty one), by subset filtering.
pub fn nests(a: &HfSet) -> Vec<HfSet> {
    a.subsets()
        .filter(|n| {
            n.iter().all(|p| {
                n.iter()
                    .all(|q| p.iter().all(|x| q.contains(x)) || q.iter().all(|x| p.contains(x)))
            })
        })
        .collect()
}

/// `C` meets every member of `A` in exactly one point.
pub fn is_transversal(c: &HfSet, a: &HfSet) -> bool {
    a.iter().all(|d| d.iter().filter(|x| c.contains(x)).count() == 1)
}
