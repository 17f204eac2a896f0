//! Subgroups, Schur multipliers and the count of simple transitive
//! birepresentations with apex `J_0`.
//!
//! `H²(K, k^×)` is computed as `H³(K, ℤ)` from the integral bar complex, the
//! identification valid over an algebraically closed field whose
//! characteristic does not divide `|K|`.

mod bar;
mod smith;
mod subgroups;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

pub use bar::{bar_h3_certified, bar_h3_integral, coboundary, composite_vanishes, BarComputation, SubgroupTable, BAR_BOUND, CERTIFICATE_PRIME};
pub use smith::{smith_normal_form, IntMatrix, SmithForm};
pub use subgroups::{closure, subgroups, subgroups_bounded, validate_subgroup, Subgroups, SUBGROUP_BOUND};

use crate::algebra::GroupData;
use crate::error::{Error, Result};
use crate::field::prime_factors;

/// `⊕ ℤ/d_i` with `d_1 | d_2 | …` and every `d_i > 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AbelianInvariants {
    pub divisors: Vec<u64>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Normal form of `⊕ ℤ/n_i` for arbitrary positive `n_i`.
    pub fn from_cyclic(orders: &[u64]) -> Self {
        let mut primary: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &n in orders {
            let mut rest = n;
            for p in prime_factors(n) {
                let mut q = 1;
                while rest % p == 0 {
                    rest /= p;
                    q *= p;
                }
                primary.entry(p).or_default().push(q);
            }
        }
        let length = primary.values().map(Vec::len).max().unwrap_or(0);
        let mut divisors = vec![1u64; length];
        for powers in primary.values_mut() {
            powers.sort_unstable();
            // Largest powers go to the last invariant factor.
            for (slot, q) in divisors.iter_mut().rev().zip(powers.iter().rev()) {
                *slot *= q;
            }
        }
        Self { divisors }
    }

    pub fn order(&self) -> u64 {
        self.divisors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.divisors.is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.divisors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.divisors.iter().map(|d| format!("Z/{d}")).collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Invariant factors of an abelian subgroup, from counting solutions of
/// `x^{p^j} = 1`.
pub fn abelian_invariants(grp: &GroupData, elements: &[usize]) -> Result<AbelianInvariants> {
    validate_subgroup(grp, elements)?;
    if let Some((a, b)) = elements
        .iter()
        .flat_map(|&a| elements.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| grp.mul(a, b) != grp.mul(b, a))
    {
        return Err(Error::NotAbelian(format!("{} and {} do not commute", grp.name(a), grp.name(b))));
    }
    let mut factors = Vec::new();
    for p in prime_factors(elements.len() as u64) {
        let p = p as usize;
        let mut log_prev = 0;
        let mut q = p;
        loop {
            let count = elements.iter().filter(|&&x| grp.power(x, q) == grp.identity()).count();
            let log = ilog(count, p);
            if log == log_prev {
                break;
            }
            // `log − log_prev` cyclic factors have order at least `q`.
            factors.extend(std::iter::repeat_n(q as u64, log - log_prev));
            log_prev = log;
            q *= p;
        }
    }
    // `factors` holds, for each prime power q, one entry per cyclic factor
    // of order at least q.
    Ok(AbelianInvariants::from_cyclic(&primary_from_staircase(&factors)))
}

fn ilog(mut n: usize, p: usize) -> usize {
    let mut k = 0;
    while n > 1 {
        n /= p;
        k += 1;
    }
    k
}

/// Turns "at least `q`" counts into the actual prime-power orders.
fn primary_from_staircase(thresholds: &[u64]) -> Vec<u64> {
    let mut by_prime: BTreeMap<u64, BTreeMap<u64, usize>> = BTreeMap::new();
    for &q in thresholds {
        let p = prime_factors(q)[0];
        *by_prime.entry(p).or_default().entry(q).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    for levels in by_prime.values() {
        let qs: Vec<(u64, usize)> = levels.iter().map(|(&q, &c)| (q, c)).collect();
        for (i, &(q, c)) in qs.iter().enumerate() {
            let above = qs.get(i + 1).map_or(0, |&(_, c2)| c2);
            out.extend(std::iter::repeat_n(q, c - above));
        }
    }
    out
}

/// `⊕_{i<j} ℤ/gcd(n_i, n_j)` for `⊕ ℤ/n_i`.
pub fn multiplier_of_cyclic(orders: &[u64]) -> AbelianInvariants {
    let mut pieces = Vec::new();
    for i in 0..orders.len() {
        for j in i + 1..orders.len() {
            pieces.push(num_integer::gcd(orders[i], orders[j]));
        }
    }
    AbelianInvariants::from_cyclic(&pieces)
}

/// The closed form for the Schur multiplier of an abelian subgroup.
pub fn abelian_multiplier_formula(grp: &GroupData, elements: &[usize]) -> Result<AbelianInvariants> {
    Ok(multiplier_of_cyclic(&abelian_invariants(grp, elements)?.divisors))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Apex {
    /// The two-sided cell of the identity.
    J1,
    /// The cell of the projective bimodules.
    J0,
}

impl fmt::Display for Apex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Apex::J1 => "J_1",
            Apex::J0 => "J_0",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationEntry {
    pub apex: Apex,
    /// Element indices of `K`; the whole group for the apex-`J_1` entry.
    pub subgroup: Vec<usize>,
    /// Index of `ω` among the `|H²(K, k^×)|` classes, from 0.
    pub cocycle: usize,
    pub conjugacy_class: Option<usize>,
}

/// One subgroup and its multiplier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupMultiplier {
    pub elements: Vec<usize>,
    pub names: Vec<String>,
    pub conjugacy_class: usize,
    pub multiplier: AbelianInvariants,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub entries: Vec<ClassificationEntry>,
    pub subgroups: Vec<SubgroupMultiplier>,
    /// Pairs `(K, ω)` with `K` running over all subgroups.
    pub apex_zero_by_subgroup: usize,
    /// The same sum with `K` running over conjugacy class representatives
    /// only, and `ω` not identified under the normalizer.
    pub apex_zero_by_conjugacy_class: usize,
    /// `1 + apex_zero_by_subgroup`.
    pub total: usize,
    /// Set when the working characteristic divides a multiplier order.
    pub characteristic_warning: Option<String>,
}

/// One apex-`J_1` entry and one apex-`J_0` entry per pair `(K, ω)`.
///
/// Counts are those over an algebraically closed field of characteristic
/// zero; `characteristic` only adds a warning when it would kill part of
/// some `H²(K, k^×)`.
pub fn classify(grp: &GroupData, characteristic: Option<u64>) -> Result<Classification> {
    let subs = subgroups(grp)?;
    let mut entries = vec![ClassificationEntry {
        apex: Apex::J1,
        subgroup: grp.elements().collect(),
        cocycle: 0,
        conjugacy_class: None,
    }];
    let mut multipliers = Vec::with_capacity(subs.len());
    for (i, k) in subs.all.iter().enumerate() {
        let h2 = bar_h3_integral(grp, k)?;
        for w in 0..h2.order() as usize {
            entries.push(ClassificationEntry {
                apex: Apex::J0,
                subgroup: k.clone(),
                cocycle: w,
                conjugacy_class: Some(subs.class_of[i]),
            });
        }
        multipliers.push(SubgroupMultiplier {
            elements: k.clone(),
            names: k.iter().map(|&g| grp.name(g).to_string()).collect(),
            conjugacy_class: subs.class_of[i],
            multiplier: h2,
        });
    }
    let apex_zero_by_subgroup = entries.len() - 1;
    let apex_zero_by_conjugacy_class =
        subs.representatives.iter().map(|&i| multipliers[i].multiplier.order() as usize).sum();
    let characteristic_warning = characteristic.and_then(|p| {
        let hit: Vec<String> = multipliers
            .iter()
            .filter(|m| m.multiplier.order() % p == 0)
            .map(|m| format!("{{{}}}", m.names.join(",")))
            .collect();
        (!hit.is_empty()).then(|| {
            format!("characteristic {p} divides the multiplier of {}; counts are for characteristic zero", hit.join(" "))
        })
    });
    Ok(Classification {
        total: entries.len(),
        entries,
        subgroups: multipliers,
        apex_zero_by_subgroup,
        apex_zero_by_conjugacy_class,
        characteristic_warning,
    })
}
