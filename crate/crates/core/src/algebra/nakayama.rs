//! Socles, self-injectivity and the Nakayama permutation.

use super::Algebra;
use crate::error::{Error, Result};
use crate::matrix::Mat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfInjectivity {
    pub injective: bool,
    /// `nu[v]` for each vertex, when self-injective.
    pub nu: Option<Vec<usize>>,
    /// A vertex whose projective fails the socle test.
    pub failing_vertex: Option<usize>,
}

/// Socle of a one-sided projective, given by the basis elements spanning it.
/// `right` selects `x ↦ x·α`, otherwise `x ↦ α·x`.
fn socle(alg: &Algebra, support: &[usize], right: bool) -> Mat {
    let f = alg.field();
    let n = support.len();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for a in 0..alg.num_arrows() {
        let alpha = alg.unit_vector(alg.arrow_element(a));
        let op = if right { alg.right_mult(&alpha) } else { alg.left_mult(&alpha) };
        for r in 0..alg.dim() {
            rows.push(support.iter().map(|&c| op.get(r, c)).collect());
        }
    }
    if rows.is_empty() {
        return Mat::identity(f, n);
    }
    let m = Mat::from_fn(f, rows.len(), n, |r, c| rows[r][c]);
    m.nullspace()
}

/// The unique vertex of `blocks` supporting a one-dimensional socle.
fn socle_vertex(alg: &Algebra, support: &[usize], right: bool) -> Option<usize> {
    let soc = socle(alg, support, right);
    if soc.cols() != 1 {
        return None;
    }
    let vertex_of = |i: usize| if right { alg.right_vertex(i) } else { alg.left_vertex(i) };
    let mut vs: Vec<usize> =
        (0..support.len()).filter(|&r| soc.get(r, 0) != 0).map(|r| vertex_of(support[r])).collect();
    vs.dedup();
    (vs.len() == 1).then(|| vs[0])
}

pub fn is_self_injective(alg: &Algebra) -> SelfInjectivity {
    let nv = alg.num_vertices();
    let mut nu = Vec::with_capacity(nv);
    for v in 0..nv {
        match socle_vertex(alg, &alg.right_projective_basis(v), true) {
            Some(w) => nu.push(w),
            None => return SelfInjectivity { injective: false, nu: None, failing_vertex: Some(v) },
        }
    }
    let mut seen = vec![false; nv];
    for (v, &w) in nu.iter().enumerate() {
        if std::mem::replace(&mut seen[w], true) {
            return SelfInjectivity { injective: false, nu: None, failing_vertex: Some(v) };
        }
    }
    // Left projectives must have simple socles matching the same permutation.
    for v in 0..nv {
        let w = nu[v];
        if socle_vertex(alg, &alg.left_projective_basis(w), false) != Some(v) {
            return SelfInjectivity { injective: false, nu: None, failing_vertex: Some(v) };
        }
    }
    SelfInjectivity { injective: true, nu: Some(nu), failing_vertex: None }
}

/// `ν(v)` with `soc(e_v A) ⊆ e_v A e_{ν(v)}`, so `D(e_v A) ≅ A e_{ν(v)}`.
pub fn nakayama_permutation(alg: &Algebra) -> Result<Vec<usize>> {
    let si = is_self_injective(alg);
    match si.nu {
        Some(nu) => Ok(nu),
        None => {
            let v = si.failing_vertex.unwrap_or(0);
            Err(Error::NotSelfInjective(format!(
                "projective at vertex {} is not injective",
                alg.quiver().vertices()[v]
            )))
        }
    }
}
