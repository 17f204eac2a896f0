//! Hom spaces as solutions of sparse intertwiner systems.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::tensor::sparse_columns;
use super::{decompose, Bimodule, LeftModule};
use crate::algebra::Algebra;
use crate::field::PrimeField;
use crate::matrix::Mat;
use crate::sparse::Echelon;

/// One condition `T·src = dst·T` on an unknown map `T`.
pub struct Intertwining<'a> {
    pub src: &'a Mat,
    pub dst: &'a Mat,
}

/// Basis of all `T` (`dst_labels.len() × src_labels.len()`) supported on
/// label-matching entries and satisfying every condition.
pub fn intertwiners<L: PartialEq>(
    field: PrimeField,
    src_labels: &[L],
    dst_labels: &[L],
    conditions: &[Intertwining<'_>],
) -> Vec<Mat> {
    let (n, m) = (dst_labels.len(), src_labels.len());
    let mut unknown = vec![usize::MAX; n * m];
    let mut unknowns = Vec::new();
    for r in 0..n {
        for c in 0..m {
            if dst_labels[r] == src_labels[c] {
                unknown[r * m + c] = unknowns.len();
                unknowns.push((r, c));
            }
        }
    }
    if unknowns.is_empty() {
        return Vec::new();
    }
    let mut ech = Echelon::new(field, unknowns.len());
    for cond in conditions {
        // (T·S)[r][c] = Σ_k T[r][k] S[k][c];  (D·T)[r][c] = Σ_k D[r][k] T[k][c].
        let s_rows: Vec<Vec<(usize, u64)>> = sparse_columns(&cond.src.transpose());
        let d_cols = sparse_columns(cond.dst);
        let mut eqs: HashMap<(usize, usize), Vec<(usize, u64)>> = HashMap::new();
        for (u, &(r, k)) in unknowns.iter().enumerate() {
            for &(c, s) in &s_rows[k] {
                eqs.entry((r, c)).or_default().push((u, s));
            }
        }
        for (u, &(k, c)) in unknowns.iter().enumerate() {
            for &(r, d) in &d_cols[k] {
                eqs.entry((r, c)).or_default().push((u, field.neg(d)));
            }
        }
        let mut keys: Vec<(usize, usize)> = eqs.keys().copied().collect();
        keys.sort_unstable();
        for key in keys {
            ech.insert(&eqs[&key]);
        }
    }
    ech.nullspace()
        .into_iter()
        .map(|v| {
            let mut t = Mat::zeros(field, n, m);
            for (u, x) in v {
                let (r, c) = unknowns[u];
                t.set(r, c, x);
            }
            t
        })
        .collect()
}

fn arrow_conditions<'a>(alg: &Algebra, src: &'a [Mat], dst: &'a [Mat], out: &mut Vec<Intertwining<'a>>) {
    let nv = alg.num_vertices();
    for g in nv..alg.num_generators() {
        out.push(Intertwining { src: &src[g], dst: &dst[g] });
    }
}

/// Basis of `Hom_{A-A}(M, N)`.
pub fn hom_space(alg: &Algebra, m: &Bimodule, n: &Bimodule) -> Vec<Mat> {
    let mut conds = Vec::new();
    arrow_conditions(alg, m.left_generators(), n.left_generators(), &mut conds);
    arrow_conditions(alg, m.right_generators(), n.right_generators(), &mut conds);
    intertwiners(alg.field(), m.blocks(), n.blocks(), &conds)
}

/// Basis of `Hom_A(M, N)` for left modules.
pub fn hom_space_left(alg: &Algebra, m: &LeftModule, n: &LeftModule) -> Vec<Mat> {
    let mut conds = Vec::new();
    arrow_conditions(alg, m.generator_actions(), n.generator_actions(), &mut conds);
    intertwiners(alg.field(), m.vertices(), n.vertices(), &conds)
}

/// Random combination of `basis` with coefficients from a seeded stream.
pub(crate) fn random_combination(field: PrimeField, basis: &[Mat], rng: &mut ChaCha8Rng) -> Mat {
    let mut out = Mat::zeros(field, basis[0].rows(), basis[0].cols());
    for b in basis {
        let c = rng.gen_range(0..field.characteristic());
        out.add_scaled(b, c);
    }
    out
}

/// An invertible element of a hom space, searched deterministically.
pub(crate) fn find_invertible(field: PrimeField, basis: &[Mat], tries: usize) -> Option<Mat> {
    if basis.is_empty() {
        return None;
    }
    if let Some(b) = basis.iter().find(|b| b.is_invertible()) {
        return Some(b.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..tries).map(|_| random_combination(field, basis, &mut rng)).find(Mat::is_invertible)
}

/// An isomorphism `M → N`, if one exists.
///
/// Random combinations of hom-space elements are tried first; if none is
/// invertible the answer is settled by comparing Krull–Schmidt decompositions.
pub fn find_isomorphism(alg: &Algebra, m: &Bimodule, n: &Bimodule) -> Option<Mat> {
    if m.dim() != n.dim() || m.dimension_matrix(alg) != n.dimension_matrix(alg) {
        return None;
    }
    if m.dim() == 0 {
        return Some(Mat::zeros(alg.field(), 0, 0));
    }
    let homs = hom_space(alg, m, n);
    if let Some(t) = find_invertible(alg.field(), &homs, 48) {
        return Some(t);
    }
    decompose::isomorphism_via_decomposition(alg, m, n)
}

pub fn is_isomorphic(alg: &Algebra, m: &Bimodule, n: &Bimodule) -> bool {
    find_isomorphism(alg, m, n).is_some()
}

pub fn is_isomorphic_left(alg: &Algebra, m: &LeftModule, n: &LeftModule) -> bool {
    if m.dim() != n.dim() {
        return false;
    }
    let homs = hom_space_left(alg, m, n);
    find_invertible(alg.field(), &homs, 48).is_some()
}
