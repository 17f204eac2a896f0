//! Equivariant structures `α_g : M → M^g` with `α_g α_h = α_{gh}`.
//!
//! Construction goes through the induced object `Θ(M) = ⊕_g M^g`, which
//! carries the relabeling structure and contains `M` as a bimodule summand
//! whenever `M ≅ M^g` for all `g`. An equivariant summand of `Θ(M)` whose
//! underlying bimodule is `M` transports its structure back along an
//! isomorphism.

use super::decompose::{decompose, group_classes, indecomposables_iso, split_rep, Rep};
use super::hom::find_isomorphism;
use super::Bimodule;
use crate::algebra::{Algebra, AlgebraAction, GroupData};
use crate::error::Result;
use crate::matrix::Mat;
use crate::report::ValidationReport;

/// Why a bimodule carries no equivariant structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotEquivariant {
    /// `M^g` is not isomorphic to `M`.
    NotInvariant { g: usize },
    /// `M` is invariant but no equivariant summand of `Θ(M)` has `M` as its
    /// underlying bimodule.
    Obstructed,
}

impl std::fmt::Display for NotEquivariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::NotInvariant { g } => write!(f, "M^g is not isomorphic to M for group element {g}"),
            Self::Obstructed => write!(f, "invariant but not equivariant"),
        }
    }
}

/// Maps `α_g : M → M^g` for the elements `g` of a subgroup.
#[derive(Clone, Debug)]
pub struct EquivariantStructure {
    /// Subgroup elements, in the order of `alphas`.
    pub elements: Vec<usize>,
    pub alphas: Vec<Mat>,
}

impl EquivariantStructure {
    pub fn alpha(&self, g: usize) -> Option<&Mat> {
        self.elements.iter().position(|&x| x == g).map(|i| &self.alphas[i])
    }

    pub fn verify(&self, alg: &Algebra, act: &AlgebraAction, grp: &GroupData, m: &Bimodule) -> ValidationReport {
        let mut report = ValidationReport::new();
        if self.alphas.len() != self.elements.len() {
            report.fail("structure size", format!("{} maps for {} elements", self.alphas.len(), self.elements.len()));
            return report;
        }
        let closed = self.elements.iter().all(|&g| {
            self.elements.iter().all(|&h| self.elements.contains(&grp.mul(g, h)))
        });
        report.record("elements form a subgroup", (!closed).then(|| "not closed under multiplication".to_string()));
        if !closed {
            return report;
        }
        let bad_morphism = self
            .elements
            .iter()
            .zip(&self.alphas)
            .find(|(&g, a)| !m.is_morphism(&m.twist(alg, act, g), a));
        report.record(
            "α_g is a bimodule map M → M^g",
            bad_morphism.map(|(&g, _)| format!("fails for g = {}", grp.name(g))),
        );
        let unit = match self.alpha(grp.identity()) {
            Some(a) if a.is_identity() => None,
            _ => Some("α_1 is not the identity".to_string()),
        };
        report.record("unital", unit);
        let mut witness = None;
        'outer: for (&g, ag) in self.elements.iter().zip(&self.alphas) {
            for (&h, ah) in self.elements.iter().zip(&self.alphas) {
                let gh = grp.mul(g, h);
                if self.alpha(gh).is_none_or(|a| ag.mul(ah) != *a) {
                    witness = Some(format!("α_{} α_{} ≠ α_{}", grp.name(g), grp.name(h), grp.name(gh)));
                    break 'outer;
                }
            }
        }
        report.record("multiplicative", witness);
        report
    }
}

/// `Θ(M) = ⊕_g M^g`, block `g` at offset `g·dim M`.
pub fn theta_carrier(alg: &Algebra, act: &AlgebraAction, grp: &GroupData, m: &Bimodule) -> Bimodule {
    let all: Vec<usize> = grp.elements().collect();
    theta_carrier_over(alg, act, &all, m)
}

/// `⊕_{h ∈ H} M^h` for the listed elements of `H`, in list order.
pub fn theta_carrier_over(alg: &Algebra, act: &AlgebraAction, elements: &[usize], m: &Bimodule) -> Bimodule {
    let twists: Vec<Bimodule> = elements.iter().map(|&g| m.twist(alg, act, g)).collect();
    Bimodule::direct_sum(alg, &twists.iter().collect::<Vec<_>>())
}

/// Relabeling maps on `Θ(M)`: `α_k` carries block `h` to block `hk⁻¹` by the identity.
pub fn relabel_structure(alg: &Algebra, grp: &GroupData, dim: usize) -> Vec<Mat> {
    let all: Vec<usize> = grp.elements().collect();
    relabel_structure_over(alg, grp, &all, dim)
}

/// Relabeling maps on `⊕_{h ∈ H} M^h`, one per listed element.
pub fn relabel_structure_over(alg: &Algebra, grp: &GroupData, elements: &[usize], dim: usize) -> Vec<Mat> {
    let f = alg.field();
    let n = elements.len();
    let pos = |g: usize| elements.iter().position(|&x| x == g).expect("closed subgroup");
    let id = Mat::identity(f, dim);
    elements
        .iter()
        .map(|&k| {
            let mut a = Mat::zeros(f, n * dim, n * dim);
            for (i, &h) in elements.iter().enumerate() {
                let dst = pos(grp.mul(h, grp.inv(k)));
                a.set_block(dst * dim, i * dim, &id);
            }
            a
        })
        .collect()
}

/// Finds an equivariant structure on `M` for the whole group, or the reason
/// none exists.
///
/// The outer error reports failures of the underlying linear algebra (for
/// instance a field too small to split endomorphism algebras).
pub fn equivariant_structure(
    alg: &Algebra,
    act: &AlgebraAction,
    grp: &GroupData,
    m: &Bimodule,
) -> Result<std::result::Result<EquivariantStructure, NotEquivariant>> {
    let all: Vec<usize> = grp.elements().collect();
    equivariant_structure_over(alg, act, grp, &all, m)
}

/// Same as [`equivariant_structure`], restricted to a subgroup.
pub fn equivariant_structure_over(
    alg: &Algebra,
    act: &AlgebraAction,
    grp: &GroupData,
    elements: &[usize],
    m: &Bimodule,
) -> Result<std::result::Result<EquivariantStructure, NotEquivariant>> {
    let f = alg.field();
    let d = m.dim();
    let elements = elements.to_vec();
    if d == 0 {
        let alphas = elements.iter().map(|_| Mat::zeros(f, 0, 0)).collect();
        return Ok(Ok(EquivariantStructure { elements, alphas }));
    }
    for &g in &elements {
        if find_isomorphism(alg, m, &m.twist(alg, act, g)).is_none() {
            return Ok(Err(NotEquivariant::NotInvariant { g }));
        }
    }
    let theta = Rep {
        bimod: theta_carrier_over(alg, act, &elements, m),
        extra: relabel_structure_over(alg, grp, &elements, d),
    };
    let classes = group_classes(alg, split_rep(alg, &theta)?);

    // Underlying bimodule multiplicities of each equivariant class, in the
    // coordinates of M's own indecomposable classes.
    let target = decompose(alg, m)?;
    let mut profiles = Vec::with_capacity(classes.len());
    for class in &classes {
        let pieces = decompose(alg, &class.rep.bimod)?;
        let mut profile = vec![0usize; target.summands.len()];
        let mut usable = true;
        for s in &pieces.summands {
            let rep = Rep::plain(s.module.clone());
            match target
                .summands
                .iter()
                .position(|t| indecomposables_iso(alg, &rep, &Rep::plain(t.module.clone())).is_some())
            {
                Some(k) => profile[k] += s.multiplicity,
                None => usable = false,
            }
        }
        profiles.push(usable.then_some(profile));
    }
    let goal: Vec<usize> = target.summands.iter().map(|s| s.multiplicity).collect();
    let limits: Vec<usize> = classes.iter().map(|c| c.copies.len()).collect();
    let Some(counts) = choose_counts(&profiles, &limits, &goal) else {
        return Ok(Err(NotEquivariant::Obstructed));
    };

    // Span of the chosen copies inside Θ(M).
    let mut cols: Option<Mat> = None;
    for (class, &count) in classes.iter().zip(&counts) {
        for (incl, iso) in class.copies.iter().take(count) {
            let block = incl.mul(iso);
            cols = Some(match cols {
                Some(c) => c.hstack(&block),
                None => block,
            });
        }
    }
    let span = cols.expect("M is nonzero");
    let (sub, _) = theta.restrict(alg, &span);
    let Some(phi) = find_isomorphism(alg, m, &sub.bimod) else {
        return Ok(Err(NotEquivariant::Obstructed));
    };
    let phi_inv = phi.inverse().expect("isomorphism");
    let alphas = sub.extra.iter().map(|a| phi_inv.mul(&a.mul(&phi))).collect();
    Ok(Ok(EquivariantStructure { elements, alphas }))
}

/// Bounded counts `c_i ≤ limits_i` with `Σ c_i·profile_i = goal`.
fn choose_counts(profiles: &[Option<Vec<usize>>], limits: &[usize], goal: &[usize]) -> Option<Vec<usize>> {
    fn go(
        i: usize,
        profiles: &[Option<Vec<usize>>],
        limits: &[usize],
        remaining: &mut Vec<usize>,
        counts: &mut Vec<usize>,
    ) -> bool {
        if remaining.iter().all(|&r| r == 0) {
            return true;
        }
        if i == profiles.len() {
            return false;
        }
        let Some(p) = &profiles[i] else {
            return go(i + 1, profiles, limits, remaining, counts);
        };
        let mut taken = 0;
        loop {
            if go(i + 1, profiles, limits, remaining, counts) {
                return true;
            }
            if taken == limits[i] || p.iter().zip(remaining.iter()).any(|(&a, &r)| a > r) || p.iter().all(|&a| a == 0) {
                break;
            }
            for (r, &a) in remaining.iter_mut().zip(p) {
                *r -= a;
            }
            taken += 1;
            counts[i] = taken;
        }
        for (r, &a) in remaining.iter_mut().zip(p) {
            *r += a * taken;
        }
        counts[i] = 0;
        false
    }
    let mut remaining = goal.to_vec();
    let mut counts = vec![0; profiles.len()];
    go(0, profiles, limits, &mut remaining, &mut counts).then_some(counts)
}
