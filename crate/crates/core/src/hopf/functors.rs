//! The restriction functor `Φ`, its left adjoint `Γ = B ⊗_A −`, and the
//! structure maps relating them.
//!
//! `B = A ⊗ A^op` uses the basis `b_i ⊗ b_j` at index `i·d + j`. Its outer
//! bimodule structure is `x·(b⊗c)·y = xb ⊗ cy`; the twisted right action is
//! `(b⊗c)·a = Σ b a₁ ⊗ S(a₂) c`.

use super::HopfData;
use crate::bimodule::{detect_vertices, Bimodule, LeftModule, TensorQuotient};
use crate::matrix::Mat;

/// `B` with its outer actions and its `φ`-twisted right action, per generator.
#[derive(Clone, Debug)]
pub struct PhiBimodule {
    pub outer_left: Vec<Mat>,
    pub outer_right: Vec<Mat>,
    pub phi_right: Vec<Mat>,
    pub phi_right_vertex: Vec<usize>,
}

impl PhiBimodule {
    pub(crate) fn new(hd: &HopfData) -> Self {
        let alg = &hd.algebra;
        let f = alg.field();
        let d = alg.dim();
        let id = Mat::identity(f, d);
        let lmul: Vec<Mat> = (0..d).map(|i| alg.left_mult(&alg.unit_vector(i))).collect();
        let rmul: Vec<Mat> = (0..d).map(|i| alg.right_mult(&alg.unit_vector(i))).collect();
        let phi = hd.phi();
        let mut outer_left = Vec::new();
        let mut outer_right = Vec::new();
        let mut phi_right = Vec::new();
        for g in 0..alg.num_generators() {
            let x = alg.generator_element(g);
            outer_left.push(lmul[x].kron(&id));
            outer_right.push(id.kron(&rmul[x]));
            let mut op = Mat::zeros(f, d * d, d * d);
            for (idx, &c) in phi.column(x).iter().enumerate() {
                if c != 0 {
                    op.add_scaled(&rmul[idx / d].kron(&lmul[idx % d]), c);
                }
            }
            phi_right.push(op);
        }
        let phi_right_vertex =
            detect_vertices(&phi_right[..alg.num_vertices()], d * d).expect("tensor basis is adapted to the φ-action");
        Self { outer_left, outer_right, phi_right, phi_right_vertex }
    }
}

/// `Γ(M)` together with the coequalizer presenting it.
#[derive(Clone, Debug)]
pub struct GammaImage {
    pub bimodule: Bimodule,
    pub quotient: TensorQuotient,
}

impl GammaImage {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
}

/// `Γ(M) = B_{·A} ⊗_A M`.
pub fn gamma_functor(hd: &HopfData, m: &LeftModule) -> GammaImage {
    let alg = &hd.algebra;
    let b = hd.b_structure();
    let quotient = TensorQuotient::new(alg, &b.phi_right, &b.phi_right_vertex, m.generator_actions(), m.vertices());
    if quotient.dim() == 0 {
        return GammaImage { bimodule: Bimodule::zero(alg), quotient };
    }
    let left = b.outer_left.iter().map(|op| quotient.left_operator(op)).collect();
    let right = b.outer_right.iter().map(|op| quotient.left_operator(op)).collect();
    let bimodule = Bimodule::new(alg, left, right).expect("outer actions preserve the adapted basis");
    GammaImage { bimodule, quotient }
}

/// `Γ(u)` for a module map `u : M → N`.
pub fn gamma_map(hd: &HopfData, src: &GammaImage, dst: &GammaImage, u: &Mat) -> Mat {
    let d = hd.dim();
    let id = Mat::identity(hd.algebra.field(), d * d);
    dst.quotient.induced_map(&src.quotient, &id, u)
}

/// `Φ(M)`: `a·m = Σ a₁ m S(a₂)`.
pub fn phi_functor(hd: &HopfData, m: &Bimodule) -> LeftModule {
    let alg = &hd.algebra;
    if m.dim() == 0 {
        return LeftModule::zero(alg);
    }
    let f = alg.field();
    let d = alg.dim();
    let ls: Vec<Mat> = (0..d).map(|i| m.left_basis_action(alg, i)).collect();
    let rs: Vec<Mat> = (0..d).map(|i| m.right_basis_action(alg, i)).collect();
    let phi = hd.phi();
    let action = (0..alg.num_generators())
        .map(|g| {
            let x = alg.generator_element(g);
            let mut op = Mat::zeros(f, m.dim(), m.dim());
            for (idx, &c) in phi.column(x).iter().enumerate() {
                if c != 0 {
                    op.add_scaled(&ls[idx / d].mul(&rs[idx % d]), c);
                }
            }
            op
        })
        .collect();
    LeftModule::new(alg, action).expect("twisted action preserves the block basis")
}

/// `M ⊗_k N` with `a·(m⊗n) = Δ(a)(m⊗n)`; basis `m_i ⊗ n_j` at index `i·dim N + j`.
pub fn module_tensor(hd: &HopfData, m: &LeftModule, n: &LeftModule) -> LeftModule {
    let alg = &hd.algebra;
    if m.dim() == 0 || n.dim() == 0 {
        return LeftModule::zero(alg);
    }
    let f = alg.field();
    let d = alg.dim();
    let ms: Vec<Mat> = (0..d).map(|i| m.basis_action(alg, i)).collect();
    let ns: Vec<Mat> = (0..d).map(|i| n.basis_action(alg, i)).collect();
    let size = m.dim() * n.dim();
    let action = (0..alg.num_generators())
        .map(|g| {
            let x = alg.generator_element(g);
            let mut op = Mat::zeros(f, size, size);
            for (idx, &c) in hd.delta.column(x).iter().enumerate() {
                if c != 0 {
                    op.add_scaled(&ms[idx / d].kron(&ns[idx % d]), c);
                }
            }
            op
        })
        .collect();
    LeftModule::new(alg, action).expect("coproduct of idempotents is diagonal")
}

/// `L_1 = k v` with `a·v = ε(a) v`.
pub fn trivial_module(hd: &HopfData) -> LeftModule {
    let alg = &hd.algebra;
    let f = alg.field();
    let action = (0..alg.num_generators())
        .map(|g| Mat::scalar(f, 1, hd.counit[alg.generator_element(g)]))
        .collect();
    LeftModule::new(alg, action).expect("counit is an algebra map")
}

/// `κ : Φ(M) ⊗_k Φ(N) → Φ(M ⊗_A N)`, the canonical projection.
pub fn kappa(tq: &TensorQuotient, field: crate::field::PrimeField) -> Mat {
    let (md, nd) = tq.factor_dims();
    let cols: Vec<Vec<u64>> = (0..md * nd).map(|k| tq.project_pair(k / nd, k % nd)).collect();
    Mat::from_columns(field, tq.dim(), &cols)
}

/// `ξ : L_1 → Φ(A)`, `v ↦ 1`.
pub fn xi(hd: &HopfData) -> Mat {
    let alg = &hd.algebra;
    Mat::from_columns(alg.field(), alg.dim(), &[alg.one()])
}

fn one_tensor_one(hd: &HopfData) -> Vec<usize> {
    let alg = &hd.algebra;
    let d = alg.dim();
    let vs: Vec<usize> = (0..alg.num_vertices()).map(|v| alg.vertex_element(v)).collect();
    vs.iter().flat_map(|&u| vs.iter().map(move |&v| u * d + v)).collect()
}

/// Unit `σ_X : X → ΦΓ(X)`, `x ↦ (1⊗1) ⊗ x`.
pub fn sigma(hd: &HopfData, x: &LeftModule, gx: &GammaImage) -> Mat {
    let ones = one_tensor_one(hd);
    let cols: Vec<Vec<u64>> =
        (0..x.dim()).map(|j| gx.quotient.project(ones.iter().map(|&b| ((b, j), 1)))).collect();
    Mat::from_columns(hd.algebra.field(), gx.dim(), &cols)
}

/// Counit `τ_M : ΓΦ(M) → M`, `(b⊗c) ⊗ m ↦ b m c`.
pub fn tau(hd: &HopfData, m: &Bimodule, gphi: &GammaImage) -> Mat {
    let alg = &hd.algebra;
    let d = alg.dim();
    let ls: Vec<Mat> = (0..d).map(|i| m.left_basis_action(alg, i)).collect();
    let rs: Vec<Mat> = (0..d).map(|i| m.right_basis_action(alg, i)).collect();
    let cols: Vec<Vec<u64>> = (0..gphi.dim())
        .map(|k| {
            let (bc, j) = gphi.quotient.representative(k);
            let mut e = vec![0; m.dim()];
            e[j] = 1;
            ls[bc / d].mul_vec(&rs[bc % d].mul_vec(&e))
        })
        .collect();
    Mat::from_columns(alg.field(), m.dim(), &cols)
}

/// `ζ : Γ(L_1) → A`, `(b⊗c) ⊗ v ↦ bc`.
pub fn zeta(hd: &HopfData, gl: &GammaImage) -> Mat {
    let alg = &hd.algebra;
    let d = alg.dim();
    let cols: Vec<Vec<u64>> = (0..gl.dim())
        .map(|k| {
            let (bc, _) = gl.quotient.representative(k);
            alg.mul(&alg.unit_vector(bc / d), &alg.unit_vector(bc % d))
        })
        .collect();
    Mat::from_columns(alg.field(), d, &cols)
}

/// `γ_{X,Y} : Γ(X ⊗ Y) → Γ(X) ⊗_A Γ(Y)`, evaluated on classes as
/// `(b⊗c) ⊗ (x⊗y) ↦ ((b⊗1) ⊗ x) ⊗ ((1⊗c) ⊗ y)`.
///
/// This is the composite `τ ∘ Γ(κ) ∘ Γ(σ ⊗ σ)` read off on representatives.
pub fn gamma_comparison(
    hd: &HopfData,
    y_dim: usize,
    gx: &GammaImage,
    gy: &GammaImage,
    gxy: &GammaImage,
    out: &TensorQuotient,
) -> Mat {
    let alg = &hd.algebra;
    let f = alg.field();
    let d = alg.dim();
    let vs: Vec<usize> = (0..alg.num_vertices()).map(|v| alg.vertex_element(v)).collect();
    let cols: Vec<Vec<u64>> = (0..gxy.dim())
        .map(|k| {
            let (bc, xy) = gxy.quotient.representative(k);
            let (b, c) = (bc / d, bc % d);
            let (ix, iy) = (xy / y_dim, xy % y_dim);
            let left = gx.quotient.project(vs.iter().map(|&v| ((b * d + v, ix), 1)));
            let right = gy.quotient.project(vs.iter().map(|&v| ((v * d + c, iy), 1)));
            let mut terms = Vec::new();
            for (i, &p) in left.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                for (j, &q) in right.iter().enumerate() {
                    if q != 0 {
                        terms.push(((i, j), f.mul(p, q)));
                    }
                }
            }
            out.project(terms)
        })
        .collect();
    Mat::from_columns(f, out.dim(), &cols)
}
