//! Finite-dimensional left modules and bimodules over a basic algebra.
//!
//! Actions are stored per algebra generator (vertices, then arrows). Every
//! module keeps an adapted basis: each basis vector lies in a single
//! `e_a M` (left modules) or `e_a M e_b` (bimodules). Constructors maintain
//! this, and the tensor and hom engines rely on it.

mod decompose;
mod equivariant;
mod hom;
mod tensor;

pub use decompose::{
    certify_local, decompose, dickson_radical, fitting_split, lift_idempotent, Decomposition,
    Summand,
};
pub(crate) use decompose::{group_classes, split_rep, Rep};
pub use equivariant::{
    equivariant_structure, equivariant_structure_over, relabel_structure, relabel_structure_over, theta_carrier,
    theta_carrier_over, EquivariantStructure, NotEquivariant,
};
pub use hom::{
    find_isomorphism, hom_space, hom_space_left, intertwiners, is_isomorphic, is_isomorphic_left,
    Intertwining,
};
pub use tensor::{associator, left_unitor, right_unitor, tensor_over_a, tensor_with_left_module, TensorQuotient};

use std::collections::BTreeMap;

use crate::algebra::{Algebra, AlgebraAction};
use crate::error::{Error, Result};
use crate::matrix::Mat;

/// A bimodule map is just its matrix, `dim N × dim M`.
pub type BimoduleMap = Mat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    dim: usize,
    action: Vec<Mat>,
    vertex: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    dim: usize,
    left: Vec<Mat>,
    right: Vec<Mat>,
    blocks: Vec<(usize, usize)>,
}

/// The vertex `v` with `E_v x = x`, for diagonal 0/1 idempotent matrices `E`.
pub(crate) fn detect_vertices(idempotents: &[Mat], dim: usize) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut found = None;
        for (v, e) in idempotents.iter().enumerate() {
            let col = e.column(j);
            let unit = col.iter().enumerate().all(|(i, &x)| x == u64::from(i == j));
            let zero = col.iter().all(|&x| x == 0);
            match (unit, zero) {
                (true, _) if found.is_none() => found = Some(v),
                (false, true) => {}
                _ => return None,
            }
        }
        out.push(found?);
    }
    Some(out)
}

/// Columns of `span` regrouped so each basis vector has a single label.
///
/// Requires that the span is a sum of its label components, which holds
/// for submodules since idempotents act by coordinate projections.
pub(crate) fn adapted_basis<L: Ord + Copy>(labels: &[L], span: &Mat) -> Mat {
    let f = span.field();
    let mut groups: BTreeMap<L, Vec<usize>> = BTreeMap::new();
    for (i, &l) in labels.iter().enumerate() {
        groups.entry(l).or_default().push(i);
    }
    let mut cols: Vec<Vec<u64>> = Vec::new();
    for idx in groups.values() {
        let sub = span.submatrix(idx, &(0..span.cols()).collect::<Vec<_>>());
        let basis = sub.column_basis();
        for c in 0..basis.cols() {
            let mut v = vec![0u64; span.rows()];
            for (k, &i) in idx.iter().enumerate() {
                v[i] = basis.get(k, c);
            }
            cols.push(v);
        }
    }
    // Sort vectors by their leading coordinate for a stable order.
    cols.sort_by_key(|v| v.iter().position(|&x| x != 0));
    Mat::from_columns(f, span.rows(), &cols)
}

/// Coordinate vectors completing an adapted basis of a subspace, chosen greedily.
pub(crate) fn adapted_complement<L: Ord + Copy>(labels: &[L], sub: &Mat) -> Mat {
    let f = sub.field();
    let n = sub.rows();
    let mut current = sub.clone();
    let mut rank = current.rank();
    let mut cols = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (labels[i], i));
    for i in order {
        let mut e = vec![0u64; n];
        e[i] = 1;
        let trial = current.hstack(&Mat::from_columns(f, n, &[e.clone()]));
        let r = trial.rank();
        if r > rank {
            current = trial;
            rank = r;
            cols.push(e);
        }
    }
    cols.sort_by_key(|v| v.iter().position(|&x| x != 0));
    Mat::from_columns(f, n, &cols)
}

fn restricted_mult(alg: &Algebra, x: usize, support: &[usize], left: bool) -> Mat {
    let pos: BTreeMap<usize, usize> = support.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut m = Mat::zeros(alg.field(), support.len(), support.len());
    for (c, &j) in support.iter().enumerate() {
        let prod = if left { alg.mul_basis(x, j) } else { alg.mul_basis(j, x) };
        for &(k, v) in prod {
            let r = *pos.get(&k).expect("one-sided ideal is closed");
            m.set(r, c, v);
        }
    }
    m
}

impl LeftModule {
    pub fn new(alg: &Algebra, action: Vec<Mat>) -> Result<Self> {
        let dim = action.first().map_or(0, Mat::rows);
        if action.len() != alg.num_generators() || action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("left module action has the wrong shape".into()));
        }
        let vertex = detect_vertices(&action[..alg.num_vertices()], dim)
            .ok_or_else(|| Error::DimensionMismatch("basis is not adapted to the vertex idempotents".into()))?;
        Ok(Self { dim, action, vertex })
    }

    pub fn zero(alg: &Algebra) -> Self {
        let z = Mat::zeros(alg.field(), 0, 0);
        Self { dim: 0, action: vec![z; alg.num_generators()], vertex: Vec::new() }
    }

    pub fn regular(alg: &Algebra) -> Self {
        let all: Vec<usize> = (0..alg.dim()).collect();
        Self::on_basis_subset(alg, &all)
    }

    /// `A e_v`, spanned by paths starting at `v`.
    pub fn projective(alg: &Algebra, v: usize) -> Self {
        Self::on_basis_subset(alg, &alg.left_projective_basis(v))
    }

    fn on_basis_subset(alg: &Algebra, support: &[usize]) -> Self {
        let action = (0..alg.num_generators())
            .map(|g| restricted_mult(alg, alg.generator_element(g), support, true))
            .collect();
        let vertex = support.iter().map(|&i| alg.left_vertex(i)).collect();
        Self { dim: support.len(), action, vertex }
    }

    /// One-dimensional simple module at vertex `v`.
    pub fn simple(alg: &Algebra, v: usize) -> Self {
        let f = alg.field();
        let action = (0..alg.num_generators())
            .map(|g| Mat::scalar(f, 1, u64::from(g == v)))
            .collect();
        Self { dim: 1, action, vertex: vec![v] }
    }

    pub fn direct_sum(alg: &Algebra, parts: &[&LeftModule]) -> Self {
        let f = alg.field();
        let action = (0..alg.num_generators())
            .map(|g| Mat::block_diag(f, &parts.iter().map(|m| m.action[g].clone()).collect::<Vec<_>>()))
            .collect();
        let vertex = parts.iter().flat_map(|m| m.vertex.iter().copied()).collect();
        Self { dim: parts.iter().map(|m| m.dim).sum(), action, vertex }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_actions(&self) -> &[Mat] {
        &self.action
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertex
    }

    pub fn basis_action(&self, alg: &Algebra, i: usize) -> Mat {
        alg.left_basis_action(&self.action, i)
    }

    pub fn action_of(&self, alg: &Algebra, x: &[u64]) -> Mat {
        alg.left_action_of(&self.action, x, self.dim)
    }

    /// Full module-axiom check on basis products; `None` when valid.
    pub fn validate(&self, alg: &Algebra) -> Option<String> {
        let acts: Vec<Mat> = (0..alg.dim()).map(|i| self.basis_action(alg, i)).collect();
        if alg.left_action_of(&self.action, &alg.one(), self.dim) != Mat::identity(alg.field(), self.dim) {
            return Some("unit does not act as the identity".into());
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let mut expect = Mat::zeros(alg.field(), self.dim, self.dim);
                for &(k, c) in alg.mul_basis(i, j) {
                    expect.add_scaled(&acts[k], c);
                }
                if acts[i].mul(&acts[j]) != expect {
                    return Some(format!("action fails on ({}, {})", alg.basis_label(i), alg.basis_label(j)));
                }
            }
        }
        None
    }

    /// Submodule spanned by the columns of `span`, with its inclusion map.
    pub fn restrict(&self, alg: &Algebra, span: &Mat) -> (LeftModule, Mat) {
        let basis = adapted_basis(&self.vertex, span);
        let module = self.transport(alg, &basis);
        (module, basis)
    }

    fn transport(&self, alg: &Algebra, basis: &Mat) -> LeftModule {
        let f = alg.field();
        if basis.cols() == 0 {
            return LeftModule::zero(alg);
        }
        let c = basis.left_inverse().expect("independent columns");
        let action = self.action.iter().map(|a| c.mul(&a.mul(basis))).collect();
        let vertex = (0..basis.cols())
            .map(|k| {
                let i = (0..basis.rows()).find(|&i| basis.get(i, k) != 0).unwrap();
                self.vertex[i]
            })
            .collect();
        let _ = f;
        LeftModule { dim: basis.cols(), action, vertex }
    }

    /// Quotient by the submodule spanned by `span`, with the projection map.
    pub fn quotient(&self, alg: &Algebra, span: &Mat) -> (LeftModule, Mat) {
        let f = alg.field();
        let sub = adapted_basis(&self.vertex, span);
        let comp = adapted_complement(&self.vertex, &sub);
        let full = sub.hstack(&comp);
        let inv = full.inverse().expect("basis of the ambient space");
        let proj = inv.block(sub.cols(), 0, comp.cols(), self.dim);
        let action = self.action.iter().map(|a| proj.mul(&a.mul(&comp))).collect();
        let vertex = (0..comp.cols())
            .map(|k| {
                let i = (0..comp.rows()).find(|&i| comp.get(i, k) != 0).unwrap();
                self.vertex[i]
            })
            .collect();
        let _ = f;
        (LeftModule { dim: comp.cols(), action, vertex }, proj)
    }
}

impl Bimodule {
    pub fn new(alg: &Algebra, left: Vec<Mat>, right: Vec<Mat>) -> Result<Self> {
        let dim = left.first().map_or(0, Mat::rows);
        let ng = alg.num_generators();
        if left.len() != ng
            || right.len() != ng
            || left.iter().chain(&right).any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(Error::DimensionMismatch("bimodule action has the wrong shape".into()));
        }
        let nv = alg.num_vertices();
        let lv = detect_vertices(&left[..nv], dim);
        let rv = detect_vertices(&right[..nv], dim);
        let (Some(lv), Some(rv)) = (lv, rv) else {
            return Err(Error::DimensionMismatch("basis is not adapted to the vertex idempotents".into()));
        };
        let blocks = lv.into_iter().zip(rv).collect();
        Ok(Self { dim, left, right, blocks })
    }

    pub fn zero(alg: &Algebra) -> Self {
        let z = Mat::zeros(alg.field(), 0, 0);
        let ng = alg.num_generators();
        Self { dim: 0, left: vec![z.clone(); ng], right: vec![z; ng], blocks: Vec::new() }
    }

    pub fn regular(alg: &Algebra) -> Self {
        let all: Vec<usize> = (0..alg.dim()).collect();
        let left = (0..alg.num_generators())
            .map(|g| restricted_mult(alg, alg.generator_element(g), &all, true))
            .collect();
        let right = (0..alg.num_generators())
            .map(|g| restricted_mult(alg, alg.generator_element(g), &all, false))
            .collect();
        let blocks = (0..alg.dim()).map(|i| (alg.left_vertex(i), alg.right_vertex(i))).collect();
        Self { dim: alg.dim(), left, right, blocks }
    }

    /// `A e_a ⊗_k e_b A`, basis ordered with the left factor slow.
    pub fn free(alg: &Algebra, a: usize, b: usize) -> Self {
        let f = alg.field();
        let xs = alg.left_projective_basis(a);
        let ys = alg.right_projective_basis(b);
        let ix = Mat::identity(f, xs.len());
        let iy = Mat::identity(f, ys.len());
        let left = (0..alg.num_generators())
            .map(|g| restricted_mult(alg, alg.generator_element(g), &xs, true).kron(&iy))
            .collect();
        let right = (0..alg.num_generators())
            .map(|g| ix.kron(&restricted_mult(alg, alg.generator_element(g), &ys, false)))
            .collect();
        let blocks = xs
            .iter()
            .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
            .map(|(x, y)| (alg.left_vertex(x), alg.right_vertex(y)))
            .collect();
        Self { dim: xs.len() * ys.len(), left, right, blocks }
    }

    /// `M ⊗_k N` with `M` acted on from the left and `N` from the right.
    pub fn outer_tensor(alg: &Algebra, m: &LeftModule, n: &RightModule) -> Self {
        let f = alg.field();
        let im = Mat::identity(f, m.dim());
        let in_ = Mat::identity(f, n.dim());
        let left = m.generator_actions().iter().map(|a| a.kron(&in_)).collect();
        let right = n.action.iter().map(|a| im.kron(a)).collect();
        let blocks = m
            .vertices()
            .iter()
            .flat_map(|&x| n.vertex.iter().map(move |&y| (x, y)))
            .collect();
        Self { dim: m.dim() * n.dim(), left, right, blocks }
    }

    /// `M ⊗_k N` for bimodules with the outer actions.
    pub fn tensor_over_k(alg: &Algebra, m: &Bimodule, n: &Bimodule) -> Self {
        let f = alg.field();
        let im = Mat::identity(f, m.dim);
        let in_ = Mat::identity(f, n.dim);
        let left = m.left.iter().map(|a| a.kron(&in_)).collect();
        let right = n.right.iter().map(|a| im.kron(a)).collect();
        let blocks = m
            .blocks
            .iter()
            .flat_map(|&(a, _)| n.blocks.iter().map(move |&(_, b)| (a, b)))
            .collect();
        Self { dim: m.dim * n.dim, left, right, blocks }
    }

    pub fn direct_sum(alg: &Algebra, parts: &[&Bimodule]) -> Self {
        let f = alg.field();
        let ng = alg.num_generators();
        let cat = |side: &dyn Fn(&Bimodule) -> &Vec<Mat>| -> Vec<Mat> {
            (0..ng)
                .map(|g| Mat::block_diag(f, &parts.iter().map(|m| side(m)[g].clone()).collect::<Vec<_>>()))
                .collect()
        };
        let left = cat(&|m| &m.left);
        let right = cat(&|m| &m.right);
        let blocks = parts.iter().flat_map(|m| m.blocks.iter().copied()).collect();
        Self { dim: parts.iter().map(|m| m.dim).sum(), left, right, blocks }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_generators(&self) -> &[Mat] {
        &self.left
    }

    pub fn right_generators(&self) -> &[Mat] {
        &self.right
    }

    /// `(left vertex, right vertex)` of each basis vector.
    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn left_vertices(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.0).collect()
    }

    pub fn right_vertices(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.1).collect()
    }

    /// `dim e_a M e_b`, indexed `[a][b]`.
    pub fn dimension_matrix(&self, alg: &Algebra) -> Vec<Vec<usize>> {
        let nv = alg.num_vertices();
        let mut d = vec![vec![0; nv]; nv];
        for &(a, b) in &self.blocks {
            d[a][b] += 1;
        }
        d
    }

    pub fn left_basis_action(&self, alg: &Algebra, i: usize) -> Mat {
        alg.left_basis_action(&self.left, i)
    }

    pub fn right_basis_action(&self, alg: &Algebra, i: usize) -> Mat {
        alg.right_basis_action(&self.right, i)
    }

    pub fn left_action_of(&self, alg: &Algebra, x: &[u64]) -> Mat {
        alg.left_action_of(&self.left, x, self.dim)
    }

    pub fn right_action_of(&self, alg: &Algebra, x: &[u64]) -> Mat {
        alg.right_action_of(&self.right, x, self.dim)
    }

    /// Full bimodule-axiom check; `None` when valid.
    pub fn validate(&self, alg: &Algebra) -> Option<String> {
        let f = alg.field();
        let ls: Vec<Mat> = (0..alg.dim()).map(|i| self.left_basis_action(alg, i)).collect();
        let rs: Vec<Mat> = (0..alg.dim()).map(|i| self.right_basis_action(alg, i)).collect();
        let id = Mat::identity(f, self.dim);
        if alg.left_action_of(&self.left, &alg.one(), self.dim) != id
            || alg.right_action_of(&self.right, &alg.one(), self.dim) != id
        {
            return Some("unit does not act as the identity".into());
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let mut expect = Mat::zeros(f, self.dim, self.dim);
                for &(k, c) in alg.mul_basis(i, j) {
                    expect.add_scaled(&ls[k], c);
                }
                if ls[i].mul(&ls[j]) != expect {
                    return Some(format!("left action fails on ({}, {})", alg.basis_label(i), alg.basis_label(j)));
                }
                let mut expect = Mat::zeros(f, self.dim, self.dim);
                for &(k, c) in alg.mul_basis(i, j) {
                    expect.add_scaled(&rs[k], c);
                }
                // m·(xy) = (m·x)·y, so R_{xy} = R_y R_x.
                if rs[j].mul(&rs[i]) != expect {
                    return Some(format!("right action fails on ({}, {})", alg.basis_label(i), alg.basis_label(j)));
                }
                if ls[i].mul(&rs[j]) != rs[j].mul(&ls[i]) {
                    return Some(format!("actions of {} and {} do not commute", alg.basis_label(i), alg.basis_label(j)));
                }
            }
        }
        None
    }

    /// `M^g`: both actions precomposed with the automorphism `g`.
    pub fn twist(&self, alg: &Algebra, act: &AlgebraAction, g: usize) -> Self {
        let f = alg.field();
        let mut left = Vec::with_capacity(alg.num_generators());
        let mut right = Vec::with_capacity(alg.num_generators());
        let lb: Vec<Mat> = (0..alg.dim()).map(|i| self.left_basis_action(alg, i)).collect();
        let rb: Vec<Mat> = (0..alg.dim()).map(|i| self.right_basis_action(alg, i)).collect();
        for gen in 0..alg.num_generators() {
            let image = act.matrix(g).column(alg.generator_element(gen));
            let mut l = Mat::zeros(f, self.dim, self.dim);
            let mut r = Mat::zeros(f, self.dim, self.dim);
            for (i, &c) in image.iter().enumerate() {
                if c != 0 {
                    l.add_scaled(&lb[i], c);
                    r.add_scaled(&rb[i], c);
                }
            }
            left.push(l);
            right.push(r);
        }
        Bimodule::new(alg, left, right).expect("twist of an adapted bimodule is adapted")
    }

    /// Sub-bimodule spanned by the columns of `span`, with its inclusion map.
    pub fn restrict(&self, alg: &Algebra, span: &Mat) -> (Bimodule, Mat) {
        let basis = adapted_basis(&self.blocks, span);
        (self.transport(alg, &basis), basis)
    }

    /// Actions transported to the span of `basis`, which must be adapted and stable.
    pub(crate) fn transport(&self, alg: &Algebra, basis: &Mat) -> Bimodule {
        if basis.cols() == 0 {
            return Bimodule::zero(alg);
        }
        let c = basis.left_inverse().expect("independent columns");
        let left = self.left.iter().map(|a| c.mul(&a.mul(basis))).collect();
        let right = self.right.iter().map(|a| c.mul(&a.mul(basis))).collect();
        let blocks = (0..basis.cols())
            .map(|k| {
                let i = (0..basis.rows()).find(|&i| basis.get(i, k) != 0).unwrap();
                self.blocks[i]
            })
            .collect();
        Bimodule { dim: basis.cols(), left, right, blocks }
    }

    /// Conjugates by an invertible map `p: M → M'` in an adapted target basis.
    pub fn conjugate(&self, p: &Mat, blocks: Vec<(usize, usize)>) -> Bimodule {
        let pinv = p.inverse().expect("invertible change of basis");
        let left = self.left.iter().map(|a| p.mul(&a.mul(&pinv))).collect();
        let right = self.right.iter().map(|a| p.mul(&a.mul(&pinv))).collect();
        Bimodule { dim: self.dim, left, right, blocks }
    }

    /// Quotient by the sub-bimodule spanned by `span`, with the projection.
    pub fn quotient(&self, alg: &Algebra, span: &Mat) -> (Bimodule, Mat) {
        let sub = adapted_basis(&self.blocks, span);
        let comp = adapted_complement(&self.blocks, &sub);
        let full = sub.hstack(&comp);
        let inv = full.inverse().expect("basis of the ambient space");
        let proj = inv.block(sub.cols(), 0, comp.cols(), self.dim);
        let left = self.left.iter().map(|a| proj.mul(&a.mul(&comp))).collect();
        let right = self.right.iter().map(|a| proj.mul(&a.mul(&comp))).collect();
        let blocks = (0..comp.cols())
            .map(|k| {
                let i = (0..comp.rows()).find(|&i| comp.get(i, k) != 0).unwrap();
                self.blocks[i]
            })
            .collect();
        let _ = alg;
        (Bimodule { dim: comp.cols(), left, right, blocks }, proj)
    }

    /// Checks `T·L_M(x) = L_N(x)·T` and the right-hand analogue on generators.
    pub fn is_morphism(&self, other: &Bimodule, t: &Mat) -> bool {
        t.rows() == other.dim
            && t.cols() == self.dim
            && self.left.iter().zip(&other.left).all(|(a, b)| t.mul(a) == b.mul(t))
            && self.right.iter().zip(&other.right).all(|(a, b)| t.mul(a) == b.mul(t))
    }
}

/// A right module, used as the right factor of outer tensor products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    dim: usize,
    action: Vec<Mat>,
    vertex: Vec<usize>,
}

impl RightModule {
    /// `e_v A`, spanned by paths ending at `v`.
    pub fn projective(alg: &Algebra, v: usize) -> Self {
        let support = alg.right_projective_basis(v);
        let action = (0..alg.num_generators())
            .map(|g| restricted_mult(alg, alg.generator_element(g), &support, false))
            .collect();
        let vertex = support.iter().map(|&i| alg.right_vertex(i)).collect();
        Self { dim: support.len(), action, vertex }
    }

    pub fn regular(alg: &Algebra) -> Self {
        let all: Vec<usize> = (0..alg.dim()).collect();
        let action = (0..alg.num_generators())
            .map(|g| restricted_mult(alg, alg.generator_element(g), &all, false))
            .collect();
        let vertex = (0..alg.dim()).map(|i| alg.right_vertex(i)).collect();
        Self { dim: alg.dim(), action, vertex }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_actions(&self) -> &[Mat] {
        &self.action
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertex
    }
}
