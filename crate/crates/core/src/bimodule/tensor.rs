//! Tensor products over the algebra as explicit coequalizers.
//!
//! The ambient space is `⊕_v M e_v ⊗ e_v N`, i.e. the pairs of basis vectors
//! whose inner vertices agree, listed in lexicographic order. Relations
//! `m·α ⊗ n − m ⊗ α·n` come from arrows only. The quotient basis is the set of
//! free columns of the fully reduced relation echelon, so two coequalizers
//! with the same relation space (for instance `(M⊗N)^g` and `M^g⊗N^g`) get
//! identical coordinates.

use super::{Bimodule, LeftModule};
use crate::algebra::Algebra;
use crate::matrix::Mat;
use crate::sparse::{Echelon, Quotient};

pub(crate) fn sparse_columns(m: &Mat) -> Vec<Vec<(usize, u64)>> {
    let mut cols = vec![Vec::new(); m.cols()];
    for r in 0..m.rows() {
        for (c, &v) in m.row(r).iter().enumerate() {
            if v != 0 {
                cols[c].push((r, v));
            }
        }
    }
    cols
}

#[derive(Clone, Debug)]
pub struct TensorQuotient {
    m_dim: usize,
    n_dim: usize,
    pair_index: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    quotient: Quotient,
}

impl TensorQuotient {
    /// Coequalizer of a right action on `M` and a left action on `N`, both
    /// given per generator, with vertex labels of adapted bases.
    pub fn new(
        alg: &Algebra,
        m_right: &[Mat],
        m_vertex: &[usize],
        n_left: &[Mat],
        n_vertex: &[usize],
    ) -> Self {
        let f = alg.field();
        let (md, nd) = (m_vertex.len(), n_vertex.len());
        let mut pair_index = vec![usize::MAX; md * nd];
        let mut pairs = Vec::new();
        for i in 0..md {
            for j in 0..nd {
                if m_vertex[i] == n_vertex[j] {
                    pair_index[i * nd + j] = pairs.len();
                    pairs.push((i, j));
                }
            }
        }
        let mut ech = Echelon::new(f, pairs.len());
        let nv = alg.num_vertices();
        for a in 0..alg.num_arrows() {
            let arrow = &alg.quiver().arrows()[a];
            let r_cols = sparse_columns(&m_right[nv + a]);
            let l_cols = sparse_columns(&n_left[nv + a]);
            for i in (0..md).filter(|&i| m_vertex[i] == arrow.target) {
                for j in (0..nd).filter(|&j| n_vertex[j] == arrow.source) {
                    let mut row = Vec::new();
                    for &(i2, c) in &r_cols[i] {
                        let k = pair_index[i2 * nd + j];
                        if k != usize::MAX {
                            row.push((k, c));
                        }
                    }
                    for &(j2, c) in &l_cols[j] {
                        let k = pair_index[i * nd + j2];
                        if k != usize::MAX {
                            row.push((k, f.neg(c)));
                        }
                    }
                    if !row.is_empty() {
                        ech.insert(&row);
                    }
                }
            }
        }
        Self { m_dim: md, n_dim: nd, pair_index, pairs, quotient: Quotient::new(ech) }
    }

    pub fn for_bimodules(alg: &Algebra, m: &Bimodule, n: &Bimodule) -> Self {
        Self::new(alg, m.right_generators(), &m.right_vertices(), n.left_generators(), &n.left_vertices())
    }

    /// `M ⊗_A N` for a bimodule `M` and a left module `N`.
    pub fn for_left_module(alg: &Algebra, m: &Bimodule, n: &LeftModule) -> Self {
        Self::new(alg, m.right_generators(), &m.right_vertices(), n.generator_actions(), n.vertices())
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn factor_dims(&self) -> (usize, usize) {
        (self.m_dim, self.n_dim)
    }

    /// The pair `(i, j)` whose class `m_i ⊗ n_j` is basis vector `k`.
    pub fn representative(&self, k: usize) -> (usize, usize) {
        self.pairs[self.quotient.representative(k)]
    }

    /// Coordinates of `Σ c·(m_i ⊗ n_j)`.
    pub fn project(&self, terms: impl IntoIterator<Item = ((usize, usize), u64)>) -> Vec<u64> {
        let mut sparse = Vec::new();
        for ((i, j), c) in terms {
            let k = self.pair_index[i * self.n_dim + j];
            if k != usize::MAX && c != 0 {
                sparse.push((k, c));
            }
        }
        self.quotient.project(&sparse)
    }

    pub fn project_pair(&self, i: usize, j: usize) -> Vec<u64> {
        self.project([((i, j), 1)])
    }

    /// Matrix of `u ⊗ v` from `src` to `self`.
    pub fn induced_map(&self, src: &TensorQuotient, u: &Mat, v: &Mat) -> Mat {
        let f = u.field();
        let uc = sparse_columns(u);
        let vc = sparse_columns(v);
        let cols: Vec<Vec<u64>> = (0..src.dim())
            .map(|k| {
                let (i, j) = src.representative(k);
                let mut terms = Vec::new();
                for &(i2, a) in &uc[i] {
                    for &(j2, b) in &vc[j] {
                        terms.push(((i2, j2), f.mul(a, b)));
                    }
                }
                self.project(terms)
            })
            .collect();
        Mat::from_columns(f, self.dim(), &cols)
    }

    /// Left action on the quotient induced by an operator on the left factor.
    pub fn left_operator(&self, op: &Mat) -> Mat {
        let f = op.field();
        let id = Mat::identity(f, self.n_dim);
        self.induced_map(self, op, &id)
    }

    /// Right action on the quotient induced by an operator on the right factor.
    pub fn right_operator(&self, op: &Mat) -> Mat {
        let f = op.field();
        let id = Mat::identity(f, self.m_dim);
        self.induced_map(self, &id, op)
    }
}

/// `M ⊗_A N` with its coequalizer data.
pub fn tensor_over_a(alg: &Algebra, m: &Bimodule, n: &Bimodule) -> (Bimodule, TensorQuotient) {
    let tq = TensorQuotient::for_bimodules(alg, m, n);
    if tq.dim() == 0 {
        return (Bimodule::zero(alg), tq);
    }
    let left = m.left_generators().iter().map(|a| tq.left_operator(a)).collect();
    let right = n.right_generators().iter().map(|a| tq.right_operator(a)).collect();
    let bimod = Bimodule::new(alg, left, right).expect("tensor product of adapted bimodules is adapted");
    (bimod, tq)
}

/// `M ⊗_A N` for a bimodule and a left module, as a left module.
pub fn tensor_with_left_module(alg: &Algebra, m: &Bimodule, n: &LeftModule) -> (LeftModule, TensorQuotient) {
    let tq = TensorQuotient::for_left_module(alg, m, n);
    if tq.dim() == 0 {
        return (LeftModule::zero(alg), tq);
    }
    let action = m.left_generators().iter().map(|a| tq.left_operator(a)).collect();
    (LeftModule::new(alg, action).expect("adapted"), tq)
}

/// `[[k⊗m]⊗n] ↦ [k⊗[m⊗n]]`.
pub fn associator(
    km: &TensorQuotient,
    km_n: &TensorQuotient,
    mn: &TensorQuotient,
    k_mn: &TensorQuotient,
    field: crate::field::PrimeField,
) -> Mat {
    let cols: Vec<Vec<u64>> = (0..km_n.dim())
        .map(|b| {
            let (p, n) = km_n.representative(b);
            let (k, m) = km.representative(p);
            let inner = mn.project_pair(m, n);
            k_mn.project(inner.iter().enumerate().map(|(q, &c)| ((k, q), c)))
        })
        .collect();
    Mat::from_columns(field, k_mn.dim(), &cols)
}

/// `A ⊗_A M → M`, `a⊗m ↦ a·m`; the first factor must be the regular bimodule.
pub fn left_unitor(alg: &Algebra, tq: &TensorQuotient, m: &Bimodule) -> Mat {
    let cols: Vec<Vec<u64>> = (0..tq.dim())
        .map(|k| {
            let (a, j) = tq.representative(k);
            m.left_basis_action(alg, a).column(j)
        })
        .collect();
    Mat::from_columns(alg.field(), m.dim(), &cols)
}

/// `M ⊗_A A → M`, `m⊗a ↦ m·a`; the second factor must be the regular bimodule.
pub fn right_unitor(alg: &Algebra, tq: &TensorQuotient, m: &Bimodule) -> Mat {
    let cols: Vec<Vec<u64>> = (0..tq.dim())
        .map(|k| {
            let (i, a) = tq.representative(k);
            m.right_basis_action(alg, a).column(i)
        })
        .collect();
    Mat::from_columns(alg.field(), m.dim(), &cols)
}
