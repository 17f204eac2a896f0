//! Subgroups of a small finite group, by closure, with conjugacy classes.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::GroupData;
use crate::error::{Error, Result};

/// Default ceiling on the group order for exhaustive enumeration.
pub const SUBGROUP_BOUND: usize = 16;

/// Every subgroup, sorted by order and then by element set, together with
/// the partition into conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subgroups {
    pub all: Vec<Vec<usize>>,
    /// Conjugacy class index of each entry of `all`.
    pub class_of: Vec<usize>,
    /// Index into `all` of the first member of each conjugacy class.
    pub representatives: Vec<usize>,
}

impl Subgroups {
    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn conjugacy_classes(&self) -> usize {
        self.representatives.len()
    }
}

pub fn subgroups(grp: &GroupData) -> Result<Subgroups> {
    subgroups_bounded(grp, SUBGROUP_BOUND)
}

/// Breadth-first search: each subgroup is reached from a smaller one by
/// adjoining one element and closing up.
pub fn subgroups_bounded(grp: &GroupData, bound: usize) -> Result<Subgroups> {
    if grp.order() > bound {
        return Err(Error::GroupTooLarge { order: grp.order(), bound });
    }
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let trivial = vec![grp.identity()];
    seen.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for sub in &frontier {
            for g in grp.elements().filter(|g| !sub.contains(g)) {
                let mut gens = sub.clone();
                gens.push(g);
                let closed = closure(grp, &gens);
                if seen.insert(closed.clone()) {
                    next.push(closed);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<Vec<usize>> = seen.into_iter().collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let mut class_of = vec![usize::MAX; all.len()];
    let mut representatives = Vec::new();
    for i in 0..all.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let class = representatives.len();
        representatives.push(i);
        for h in grp.elements() {
            let conj = conjugate_set(grp, &all[i], h);
            let j = all.iter().position(|s| *s == conj).expect("conjugates of subgroups are subgroups");
            class_of[j] = class;
        }
    }
    Ok(Subgroups { all, class_of, representatives })
}

/// Sorted closure of `gens` under multiplication.
pub fn closure(grp: &GroupData, gens: &[usize]) -> Vec<usize> {
    let mut out = vec![grp.identity()];
    let mut i = 0;
    while i < out.len() {
        for &g in gens {
            let y = grp.mul(out[i], g);
            if !out.contains(&y) {
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

fn conjugate_set(grp: &GroupData, set: &[usize], h: usize) -> Vec<usize> {
    let mut out: Vec<usize> = set.iter().map(|&x| grp.mul(grp.mul(h, x), grp.inv(h))).collect();
    out.sort_unstable();
    out
}

/// Checks that `elements` is a subgroup of `grp`.
pub fn validate_subgroup(grp: &GroupData, elements: &[usize]) -> Result<()> {
    if elements.is_empty() || elements.iter().any(|&x| x >= grp.order()) {
        return Err(Error::InvalidGroup("subgroup elements out of range".into()));
    }
    let set: BTreeSet<usize> = elements.iter().copied().collect();
    if set.len() != elements.len() {
        return Err(Error::InvalidGroup("repeated subgroup element".into()));
    }
    for &a in elements {
        for &b in elements {
            if !set.contains(&grp.mul(a, b)) {
                return Err(Error::InvalidGroup(format!(
                    "{}·{} leaves the subset",
                    grp.name(a),
                    grp.name(b)
                )));
            }
        }
    }
    Ok(())
}
