//! Exhaustive, duplicate-free enumeration of small structures in a fixed order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hfs::HfSet;
use crate::order::{is_nest, is_partial_order, BinRel};

pub const POSET_LIMIT: usize = 4;
pub const ATOM_LIMIT: usize = 3;
pub const TOTAL_ORDER_LIMIT: usize = 6;

fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::SizeGuardExceeded { what, size, limit });
    }
    Ok(())
}

/// Every partial order on the numeral `n`, i.e. on `{0, …, n−1}`.
pub fn posets(n: usize) -> Result<Vec<(HfSet, BinRel)>> {
    guard("poset carrier", n, POSET_LIMIT)?;
    let x = HfSet::numeral(n);
    let diagonal = BinRel::identity(&x).into_set();
    let off: Vec<HfSet> = x
        .iter()
        .flat_map(|a| {
            x.iter()
                .filter(move |b| *b != a)
                .map(move |b| HfSet::ordered_pair(a.clone(), b.clone()))
        })
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << off.len()) {
        let chosen = off
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p.clone());
        let le = BinRel::new(diagonal.union(&HfSet::from_members(chosen))).expect("pairs");
        if is_partial_order(&le, &x) {
            out.push((x.clone(), le));
        }
    }
    Ok(out)
}

/// Every total order on the numeral `n`, one per permutation.
pub fn total_orders(n: usize) -> Result<Vec<(HfSet, BinRel)>> {
    guard("total-order carrier", n, TOTAL_ORDER_LIMIT)?;
    let x = HfSet::numeral(n);
    let mut perms = Vec::new();
    permutations(&mut (0..n).collect(), 0, &mut perms);
    Ok(perms
        .into_iter()
        .map(|p| {
            let rank = |s: &HfSet| p.iter().position(|&i| i == s.as_numeral().expect("numeral"));
            (x.clone(), BinRel::from_fn(&x, |a, b| rank(a) <= rank(b)))
        })
        .collect())
}

fn permutations(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Every family of subsets of the numeral `atoms`.
pub fn families(atoms: usize) -> Result<Vec<HfSet>> {
    guard("family atoms", atoms, ATOM_LIMIT)?;
    Ok(HfSet::numeral(atoms).power_set().subsets().collect())
}

/// Families closed under taking subsets.
pub fn downsets(atoms: usize) -> Result<Vec<HfSet>> {
    Ok(families(atoms)?
        .into_iter()
        .filter(|f| f.iter().all(|m| m.subsets().all(|s| f.contains(&s))))
        .collect())
}

pub fn nests(atoms: usize) -> Result<Vec<HfSet>> {
    Ok(families(atoms)?.into_iter().filter(is_nest).collect())
}

/// Families whose distinct members are disjoint. The empty set may be a member.
pub fn disjoint_families(atoms: usize) -> Result<Vec<HfSet>> {
    Ok(families(atoms)?
        .into_iter()
        .filter(|f| {
            let ms = f.members();
            ms.iter()
                .enumerate()
                .all(|(i, a)| ms[i + 1..].iter().all(|b| a.is_disjoint(b)))
        })
        .collect())
}

/// The four sets of `V_2`, used as a pool of points for carriers.
pub fn point_pool() -> HfSet {
    HfSet::numeral(2).power_set()
}

/// Every subset of [`point_pool`] with at most `max` points.
pub fn carriers(max: usize) -> Vec<HfSet> {
    let mut out: Vec<HfSet> = point_pool().subsets().filter(|x| x.len() <= max).collect();
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumKind {
    Posets,
    TotalOrders,
    Downsets,
    Families,
    Nests,
    DisjointFamilies,
}

impl FromStr for EnumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "posets" => EnumKind::Posets,
            "totalorders" => EnumKind::TotalOrders,
            "downsets" => EnumKind::Downsets,
            "families" => EnumKind::Families,
            "nests" => EnumKind::Nests,
            "disjoint_families" => EnumKind::DisjointFamilies,
            other => return Err(Error::Usage(format!("unknown structure kind `{other}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Instance {
    Order { carrier: HfSet, relation: BinRel },
    Family(HfSet),
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Order { carrier, relation } => write!(f, "({carrier}, {relation:?})"),
            Instance::Family(s) => write!(f, "{s}"),
        }
    }
}

pub fn enumerate(kind: EnumKind, n: usize) -> Result<Vec<Instance>> {
    let orders = |v: Vec<(HfSet, BinRel)>| {
        v.into_iter()
            .map(|(carrier, relation)| Instance::Order { carrier, relation })
            .collect()
    };
    let fams = |v: Vec<HfSet>| v.into_iter().map(Instance::Family).collect();
    Ok(match kind {
        EnumKind::Posets => orders(posets(n)?),
        EnumKind::TotalOrders => orders(total_orders(n)?),
        EnumKind::Downsets => fams(downsets(n)?),
        EnumKind::Families => fams(families(n)?),
        EnumKind::Nests => fams(nests(n)?),
        EnumKind::DisjointFamilies => fams(disjoint_families(n)?),
    })
}
