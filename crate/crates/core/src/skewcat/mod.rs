//! The skew category: bimodules with `G`-graded morphism spaces
//! `⊕_g Hom(M, N^g)`, its idempotent completion, the tensor product `⊗^G`
//! and the embedding `Θ` back into bimodules.

mod idempotents;
mod suite;
mod tensor;
mod theta;

use std::collections::BTreeMap;

pub use idempotents::{group_idempotents, GroupIdempotent};
pub use suite::theta_suite;
pub use tensor::{asymmetry_isomorphism, SkewTensor};
pub use theta::{check_1_full_embedding, ThetaImage};

use crate::algebra::{Algebra, AlgebraAction, GroupData};
use crate::bimodule::{find_isomorphism, hom_space, Bimodule};
use crate::field::PrimeField;
use crate::matrix::Mat;

/// A morphism `M → N` of the skew category: one bimodule map `M → N^g`
/// per degree `g`, zero components omitted.
#[derive(Clone, Debug)]
pub struct SkewHom {
    pub rows: usize,
    pub cols: usize,
    pub components: BTreeMap<usize, Mat>,
}

impl PartialEq for SkewHom {
    fn eq(&self, other: &Self) -> bool {
        let nonzero = |h: &SkewHom| -> Vec<(usize, Mat)> {
            h.components.iter().filter(|(_, m)| !m.is_zero()).map(|(&g, m)| (g, m.clone())).collect()
        };
        self.rows == other.rows && self.cols == other.cols && nonzero(self) == nonzero(other)
    }
}

impl SkewHom {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, components: BTreeMap::new() }
    }

    /// A single component in degree `g`.
    pub fn pure(g: usize, m: Mat) -> Self {
        let mut components = BTreeMap::new();
        let (rows, cols) = (m.rows(), m.cols());
        components.insert(g, m);
        Self { rows, cols, components }
    }

    pub fn identity(field: PrimeField, grp: &GroupData, dim: usize) -> Self {
        Self::pure(grp.identity(), Mat::identity(field, dim))
    }

    pub fn component(&self, g: usize) -> Option<&Mat> {
        self.components.get(&g)
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(Mat::is_zero)
    }

    pub fn add_component(&mut self, g: usize, m: &Mat, c: u64) {
        match self.components.get_mut(&g) {
            Some(x) => x.add_scaled(m, c),
            None => {
                self.components.insert(g, m.scale(c));
            }
        }
    }

    pub fn add(&self, other: &SkewHom) -> SkewHom {
        let mut out = self.clone();
        for (&g, m) in &other.components {
            out.add_component(g, m, 1);
        }
        out
    }

    pub fn scale(&self, c: u64) -> SkewHom {
        let components = self.components.iter().map(|(&g, m)| (g, m.scale(c))).collect();
        SkewHom { rows: self.rows, cols: self.cols, components }
    }
}

/// The algebra, group and action the skew category is built from.
#[derive(Clone, Copy, Debug)]
pub struct SkewCategory<'a> {
    pub alg: &'a Algebra,
    pub act: &'a AlgebraAction,
    pub grp: &'a GroupData,
}

/// An object of the idempotent completion: a bimodule with an idempotent.
#[derive(Clone, Debug)]
pub struct SkewObject {
    pub carrier: Bimodule,
    pub idem: SkewHom,
}

impl<'a> SkewCategory<'a> {
    pub fn new(alg: &'a Algebra, act: &'a AlgebraAction, grp: &'a GroupData) -> Self {
        Self { alg, act, grp }
    }

    pub fn field(&self) -> PrimeField {
        self.alg.field()
    }

    /// `(ψ∘φ)_s = Σ_g (ψ_{sg⁻¹})^g ∘ φ_g`; twisting leaves matrices unchanged.
    pub fn compose(&self, psi: &SkewHom, phi: &SkewHom) -> SkewHom {
        let mut out = SkewHom::zero(psi.rows, phi.cols);
        for (&g, pg) in &phi.components {
            for (&h, ph) in &psi.components {
                out.add_component(self.grp.mul(h, g), &ph.mul(pg), 1);
            }
        }
        out
    }

    pub fn identity(&self, dim: usize) -> SkewHom {
        SkewHom::identity(self.field(), self.grp, dim)
    }

    /// The object `(M, id)`.
    pub fn plain(&self, m: Bimodule) -> SkewObject {
        let idem = self.identity(m.dim());
        SkewObject { carrier: m, idem }
    }

    /// Whether every component of `f` is a bimodule map `M → N^g`.
    pub fn is_morphism(&self, m: &Bimodule, n: &Bimodule, f: &SkewHom) -> bool {
        f.rows == n.dim()
            && f.cols == m.dim()
            && f.components.iter().all(|(&g, c)| m.is_morphism(&n.twist(self.alg, self.act, g), c))
    }

    /// Basis of `Hom(M, N)`: pure-degree maps over all degrees.
    pub fn hom_basis(&self, m: &Bimodule, n: &Bimodule) -> Vec<SkewHom> {
        let mut out = Vec::new();
        for g in self.grp.elements() {
            for b in hom_space(self.alg, m, &n.twist(self.alg, self.act, g)) {
                out.push(SkewHom::pure(g, b));
            }
        }
        out
    }

    /// `G_M = {g : M ≅ M^g}`.
    pub fn stabilizer(&self, m: &Bimodule) -> Vec<usize> {
        self.grp
            .elements()
            .filter(|&g| find_isomorphism(self.alg, m, &m.twist(self.alg, self.act, g)).is_some())
            .collect()
    }

    /// The idempotent `ε_l = (λ_l(g)/|G_M| · α_g)_{g ∈ G_M}`.
    pub fn idempotent_hom(&self, idem: &GroupIdempotent, alphas: &crate::bimodule::EquivariantStructure) -> SkewHom {
        let f = self.field();
        let inv = f.inv(f.from_usize(idem.elements.len()));
        let dim = alphas.alphas.first().map_or(0, Mat::rows);
        let mut out = SkewHom::zero(dim, dim);
        for (&g, &l) in idem.elements.iter().zip(&idem.lambda) {
            if l != 0 {
                let a = alphas.alpha(g).expect("structure covers the stabilizer");
                out.add_component(g, a, f.mul(l, inv));
            }
        }
        out
    }

    /// `π_1 = (1/|G|) Σ_g g` on the regular bimodule, with `α_g` the automorphism matrices.
    pub fn unit_idempotent(&self) -> SkewHom {
        let f = self.field();
        let inv = f.inv(f.from_usize(self.grp.order()));
        let d = self.alg.dim();
        let mut out = SkewHom::zero(d, d);
        for g in self.grp.elements() {
            out.add_component(g, self.act.matrix(g), inv);
        }
        out
    }

    /// The unit object `(A, π_1)`.
    pub fn unit_object(&self) -> SkewObject {
        SkewObject { carrier: Bimodule::regular(self.alg), idem: self.unit_idempotent() }
    }
}
