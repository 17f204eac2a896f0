//! Basic algebras kQ/I with explicit bases and structure constants.

mod action;
mod group;
mod nakayama;
mod quiver;

use std::collections::HashMap;

pub use action::{check_action, AlgebraAction};
pub use group::GroupData;
pub use nakayama::{is_self_injective, nakayama_permutation, SelfInjectivity};
pub use quiver::{Arrow, Path, Quiver};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Mat;
use crate::sparse::{Echelon, Quotient, SparseVec};

/// A linear combination of paths with coefficients in the field.
pub type PathCombination = Vec<(u64, Path)>;

#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub field: PrimeField,
    pub quiver: Quiver,
    pub relations: Vec<PathCombination>,
    pub nilpotency_bound: usize,
}

/// A finite-dimensional algebra `kQ/I` with a basis of path classes.
///
/// Generators are indexed vertices first, then arrows; module actions are
/// stored per generator and extended along paths.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: PrimeField,
    quiver: Quiver,
    basis: Vec<Path>,
    mult: Vec<SparseVec>,
    vertex_basis: Vec<usize>,
    arrow_basis: Vec<usize>,
    relations: Vec<PathCombination>,
}

pub fn build_algebra(pres: &AlgebraPresentation) -> Result<Algebra> {
    let f = pres.field;
    let q = &pres.quiver;
    let bound = pres.nilpotency_bound;
    if bound < 2 {
        return Err(Error::NonAdmissibleIdeal {
            relation: 0,
            reason: format!("nilpotency bound {bound} is below 2"),
        });
    }
    for (ri, rel) in pres.relations.iter().enumerate() {
        let terms: Vec<&(u64, Path)> = rel.iter().filter(|(c, _)| c % f.characteristic() != 0).collect();
        if terms.is_empty() {
            continue;
        }
        let (s, t) = (terms[0].1.source, q.target(&terms[0].1));
        for (_, p) in &terms {
            if p.len() < 2 {
                return Err(Error::NonAdmissibleIdeal {
                    relation: ri,
                    reason: format!("term {} has length {}", q.path_label(p), p.len()),
                });
            }
            if p.source != s || q.target(p) != t {
                return Err(Error::NonAdmissibleIdeal {
                    relation: ri,
                    reason: "terms do not share source and target".into(),
                });
            }
        }
    }

    // All paths of length ≤ N, sorted.
    let mut by_len: Vec<Vec<Path>> = vec![(0..q.num_vertices()).map(Path::trivial).collect()];
    for len in 1..=bound {
        let mut next = Vec::new();
        for p in &by_len[len - 1] {
            let end = q.target(p);
            for (ai, a) in q.arrows().iter().enumerate() {
                if a.source == end {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path { source: p.source, arrows });
                }
            }
        }
        by_len.push(next);
    }
    let mut paths: Vec<Path> = by_len.into_iter().flatten().collect();
    paths.sort_by(|a, b| q.path_cmp(a, b));
    let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let total = paths.len();
    // Columns run from the largest path down, so elimination keeps small paths as normal forms.
    let col = |i: usize| total - 1 - i;

    let mut ideal = Echelon::new(f, total);
    for rel in &pres.relations {
        let Some((_, first)) = rel.first() else { continue };
        let (s, t) = (first.source, q.target(first));
        let min_len = rel.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
        for u in paths.iter().filter(|u| u.source == t) {
            for v in paths.iter().filter(|v| q.target(v) == s) {
                if u.len() + v.len() + min_len > bound {
                    continue;
                }
                let mut row = Vec::new();
                for (c, p) in rel {
                    if v.len() + p.len() + u.len() > bound {
                        continue;
                    }
                    let mut arrows = v.arrows.clone();
                    arrows.extend_from_slice(&p.arrows);
                    arrows.extend_from_slice(&u.arrows);
                    let src = if v.is_empty() { p.source } else { v.source };
                    let prod = Path { source: src, arrows };
                    row.push((col(index[&prod]), f.from_u64(*c)));
                }
                ideal.insert(&row);
            }
        }
    }
    let quotient = Quotient::new(ideal);
    for (i, p) in paths.iter().enumerate() {
        if p.len() == bound && quotient.coordinate_of(col(i)).is_some() {
            return Err(Error::InconsistentBound { bound, path: q.path_label(p) });
        }
    }
    // Quotient coordinates are in column order; basis wants ascending path order.
    let reps = quotient.representatives();
    let basis_paths: Vec<usize> = reps.iter().rev().map(|&c| total - 1 - c).collect();
    let basis: Vec<Path> = basis_paths.iter().map(|&i| paths[i].clone()).collect();
    let dim = basis.len();
    let to_basis = |coords: Vec<u64>| -> SparseVec {
        let k = coords.len();
        coords
            .into_iter()
            .enumerate()
            .filter(|(_, x)| *x != 0)
            .map(|(j, x)| (k - 1 - j, x))
            .rev()
            .collect()
    };
    let reduce_path = |p: &Path| -> SparseVec {
        if p.len() >= bound {
            return Vec::new();
        }
        to_basis(quotient.project(&[(col(index[p]), 1)]))
    };

    let mut mult = vec![Vec::new(); dim * dim];
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            // a·b traverses b first.
            if q.target(b) != a.source {
                continue;
            }
            let mut arrows = b.arrows.clone();
            arrows.extend_from_slice(&a.arrows);
            let prod = Path { source: b.source, arrows };
            mult[i * dim + j] = reduce_path(&prod);
        }
    }
    let position = |p: &Path| basis.iter().position(|b| b == p);
    let vertex_basis = (0..q.num_vertices())
        .map(|v| position(&Path::trivial(v)).expect("vertices survive"))
        .collect();
    let arrow_basis = (0..q.num_arrows())
        .map(|a| position(&Path { source: q.arrows()[a].source, arrows: vec![a] }).expect("arrows survive"))
        .collect();
    Ok(Algebra {
        field: f,
        quiver: q.clone(),
        basis,
        mult,
        vertex_basis,
        arrow_basis,
        relations: pres.relations.clone(),
    })
}

impl Algebra {
    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The defining relations, as given.
    pub fn relations(&self) -> &[PathCombination] {
        &self.relations
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn num_arrows(&self) -> usize {
        self.quiver.num_arrows()
    }

    /// Vertices then arrows.
    pub fn num_generators(&self) -> usize {
        self.num_vertices() + self.num_arrows()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_label(&self, i: usize) -> String {
        self.quiver.path_label(&self.basis[i])
    }

    pub fn vertex_element(&self, v: usize) -> usize {
        self.vertex_basis[v]
    }

    pub fn arrow_element(&self, a: usize) -> usize {
        self.arrow_basis[a]
    }

    pub fn generator_element(&self, g: usize) -> usize {
        if g < self.num_vertices() {
            self.vertex_basis[g]
        } else {
            self.arrow_basis[g - self.num_vertices()]
        }
    }

    /// Vertex `t` with `e_t · b = b`.
    pub fn left_vertex(&self, i: usize) -> usize {
        self.quiver.target(&self.basis[i])
    }

    /// Vertex `s` with `b · e_s = b`.
    pub fn right_vertex(&self, i: usize) -> usize {
        self.basis[i].source
    }

    pub fn path_length(&self, i: usize) -> usize {
        self.basis[i].len()
    }

    /// Generators whose ordered product is basis element `i`, first factor applied first.
    pub fn factorization(&self, i: usize) -> Vec<usize> {
        let p = &self.basis[i];
        if p.is_empty() {
            vec![p.source]
        } else {
            p.arrows.iter().map(|&a| self.num_vertices() + a).collect()
        }
    }

    #[inline]
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim() + j]
    }

    pub fn unit_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.dim()];
        for &e in &self.vertex_basis {
            v[e] = 1;
        }
        v
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.dim()]
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let f = self.field;
        let mut out = vec![0; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in self.mul_basis(i, j) {
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &[u64]) -> Mat {
        let n = self.dim();
        let cols: Vec<Vec<u64>> = (0..n).map(|j| self.mul(x, &self.unit_vector(j))).collect();
        Mat::from_columns(self.field, n, &cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult(&self, x: &[u64]) -> Mat {
        let n = self.dim();
        let cols: Vec<Vec<u64>> = (0..n).map(|j| self.mul(&self.unit_vector(j), x)).collect();
        Mat::from_columns(self.field, n, &cols)
    }

    /// First triple violating associativity, if any.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            let ei = self.unit_vector(i);
            for j in 0..n {
                let ij = self.mul(&ei, &self.unit_vector(j));
                for k in 0..n {
                    let ek = self.unit_vector(k);
                    let lhs = self.mul(&ij, &ek);
                    let rhs = self.mul(&ei, &self.mul(&self.unit_vector(j), &ek));
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `dim e_t A e_s`, indexed `[t][s]`.
    pub fn block_dims(&self) -> Vec<Vec<usize>> {
        let nv = self.num_vertices();
        let mut d = vec![vec![0; nv]; nv];
        for i in 0..self.dim() {
            d[self.left_vertex(i)][self.right_vertex(i)] += 1;
        }
        d
    }

    /// Left action of basis element `i` from per-generator matrices.
    pub fn left_basis_action(&self, gens: &[Mat], i: usize) -> Mat {
        let fac = self.factorization(i);
        let mut m = gens[fac[0]].clone();
        for &g in &fac[1..] {
            m = gens[g].mul(&m);
        }
        m
    }

    /// Right action of basis element `i`; `m·(α₂α₁) = (m·α₂)·α₁`.
    pub fn right_basis_action(&self, gens: &[Mat], i: usize) -> Mat {
        let fac = self.factorization(i);
        let mut m = gens[fac[0]].clone();
        for &g in &fac[1..] {
            m = m.mul(&gens[g]);
        }
        m
    }

    /// Left action of a general element.
    pub fn left_action_of(&self, gens: &[Mat], x: &[u64], n: usize) -> Mat {
        let mut out = Mat::zeros(self.field, n, n);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                out.add_scaled(&self.left_basis_action(gens, i), c);
            }
        }
        out
    }

    pub fn right_action_of(&self, gens: &[Mat], x: &[u64], n: usize) -> Mat {
        let mut out = Mat::zeros(self.field, n, n);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                out.add_scaled(&self.right_basis_action(gens, i), c);
            }
        }
        out
    }

    /// Basis elements lying in `e_t A e_s`.
    pub fn block(&self, t: usize, s: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.left_vertex(i) == t && self.right_vertex(i) == s).collect()
    }

    /// Basis of `A e_s` (paths starting at `s`).
    pub fn left_projective_basis(&self, s: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.right_vertex(i) == s).collect()
    }

    /// Basis of `e_t A` (paths ending at `t`).
    pub fn right_projective_basis(&self, t: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.left_vertex(i) == t).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(257).unwrap()
    }

    #[test]
    fn truncated_loop() {
        let q = Quiver::new(
            vec!["v".into()],
            vec![Arrow { name: "x".into(), source: 0, target: 0 }],
        )
        .unwrap();
        let xx = q.path(&[0, 0]).unwrap();
        let alg = build_algebra(&AlgebraPresentation {
            field: f(),
            quiver: q,
            relations: vec![vec![(1, xx)]],
            nilpotency_bound: 2,
        })
        .unwrap();
        assert_eq!(alg.dim(), 2);
        let x = alg.arrow_element(0);
        assert!(alg.mul_basis(x, x).is_empty());
    }

    #[test]
    fn short_relation_rejected() {
        let q = Quiver::new(
            vec!["v".into()],
            vec![Arrow { name: "x".into(), source: 0, target: 0 }],
        )
        .unwrap();
        let x = q.path(&[0]).unwrap();
        let err = build_algebra(&AlgebraPresentation {
            field: f(),
            quiver: q,
            relations: vec![vec![(1, x)]],
            nilpotency_bound: 2,
        })
        .unwrap_err();
        assert!(matches!(err, Error::NonAdmissibleIdeal { .. }));
    }

    #[test]
    fn bound_too_small() {
        let q = Quiver::new(
            vec!["v".into()],
            vec![Arrow { name: "x".into(), source: 0, target: 0 }],
        )
        .unwrap();
        let x3 = q.path(&[0, 0, 0]).unwrap();
        let err = build_algebra(&AlgebraPresentation {
            field: f(),
            quiver: q,
            relations: vec![vec![(1, x3)]],
            nilpotency_bound: 2,
        })
        .unwrap_err();
        assert!(matches!(err, Error::InconsistentBound { .. }));
    }
}
