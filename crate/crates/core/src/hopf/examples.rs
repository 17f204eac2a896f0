//! Standard covering-quiver Hopf algebras.
//!
//! The bimodule structures on arrows are the usual choices for Taft algebras;
//! they are inputs, not derived data.

use super::{covering_quiver, monomial_relations, WeightData};
use crate::algebra::{build_algebra, Algebra, AlgebraPresentation, GroupData};
use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Clone, Debug)]
pub struct CoveringExample {
    pub name: String,
    pub algebra: Algebra,
    pub weights: WeightData,
}

/// `kQ/I` on the covering quiver of `wd`, with all paths of length `n` in `I`.
pub fn covering_algebra(field: PrimeField, wd: &WeightData, n: usize) -> Result<Algebra> {
    let quiver = covering_quiver(&wd.group, &wd.weights)?;
    let relations = monomial_relations(&quiver, n);
    build_algebra(&AlgebraPresentation { field, quiver, relations, nilpotency_bound: n.max(2) })
}

/// Taft algebra of dimension `n²`: `G = ℤ/n`, one weight `w`, `χ(w) = q`
/// for the smallest primitive `n`-th root of unity `q`.
pub fn taft(field: PrimeField, n: usize) -> Result<CoveringExample> {
    let p = field.characteristic();
    let q = (2..p)
        .find(|&x| exact_order(field, x) == n as u64)
        .ok_or_else(|| Error::NonSplitField(format!("no primitive {n}-th root of unity mod {p}")))?;
    let grp = GroupData::cyclic(n);
    let chars = vec![(0..n).map(|k| field.pow(q, k as u64) as i64).collect::<Vec<_>>()];
    let wd = WeightData::with_characters(grp, vec![1], &chars)?;
    let algebra = covering_algebra(field, &wd, n)?;
    Ok(CoveringExample { name: format!("taft{n}"), algebra, weights: wd })
}

/// Sweedler's four-dimensional Hopf algebra.
pub fn sweedler(field: PrimeField) -> Result<CoveringExample> {
    let mut ex = taft(field, 2)?;
    ex.name = "sweedler".into();
    Ok(ex)
}

/// The algebra `k^G` of functions on `G`: no arrows.
pub fn function_algebra(field: PrimeField, grp: GroupData) -> Result<CoveringExample> {
    let wd = WeightData::discrete(grp);
    let algebra = covering_algebra(field, &wd, 2)?;
    Ok(CoveringExample { name: format!("functions on a group of order {}", wd.group.order()), algebra, weights: wd })
}

/// The one-dimensional Hopf algebra `k`.
pub fn trivial(field: PrimeField) -> Result<CoveringExample> {
    let mut ex = function_algebra(field, GroupData::trivial())?;
    ex.name = "trivial".into();
    Ok(ex)
}

fn exact_order(field: PrimeField, x: u64) -> u64 {
    let mut k = 1;
    let mut y = x;
    while y != 1 {
        y = field.mul(y, x);
        k += 1;
    }
    k
}
