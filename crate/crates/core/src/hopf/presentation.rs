//! Projective presentations and the equivariant structure they induce on `Γ`.

use super::functors::{gamma_functor, gamma_map};
use super::HopfData;
use crate::algebra::Algebra;
use crate::bimodule::{adapted_complement, EquivariantStructure, LeftModule};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::report::ValidationReport;

/// `P1 → P0 → M → 0` with `P0`, `P1` sums of indecomposable projectives.
#[derive(Clone, Debug)]
pub struct ProjectivePresentation {
    /// Vertex of each summand `A e_v` of `P0`.
    pub tops: Vec<usize>,
    pub p0: LeftModule,
    /// `P0 → M`.
    pub cover: Mat,
    pub p1_tops: Vec<usize>,
    pub p1: LeftModule,
    /// `P1 → P0`.
    pub differential: Mat,
}

/// Projective cover of `M`, lifting a basis of `M / rad M`.
///
/// Summands come in the order of the top basis, which is sorted by vertex.
pub fn projective_cover(alg: &Algebra, m: &LeftModule) -> Result<(Vec<usize>, LeftModule, Mat)> {
    let f = alg.field();
    if m.dim() == 0 {
        return Ok((Vec::new(), LeftModule::zero(alg), Mat::zeros(f, 0, 0)));
    }
    let nv = alg.num_vertices();
    let mut rad = Mat::zeros(f, m.dim(), 0);
    for a in 0..alg.num_arrows() {
        rad = rad.hstack(&m.generator_actions()[nv + a]);
    }
    let rad = rad.column_basis();
    let top = adapted_complement(m.vertices(), &rad);
    let mut tops = Vec::with_capacity(top.cols());
    let mut parts = Vec::with_capacity(top.cols());
    let mut cols: Vec<Vec<u64>> = Vec::new();
    for t in 0..top.cols() {
        let vec = top.column(t);
        let i = vec.iter().position(|&x| x != 0).expect("nonzero coordinate vector");
        let v = m.vertices()[i];
        tops.push(v);
        for p in alg.left_projective_basis(v) {
            cols.push(m.basis_action(alg, p).mul_vec(&vec));
        }
        parts.push(LeftModule::projective(alg, v));
    }
    let p0 = LeftModule::direct_sum(alg, &parts.iter().collect::<Vec<_>>());
    let cover = Mat::from_columns(f, m.dim(), &cols);
    if cover.rank() != m.dim() {
        return Err(Error::PresentationFailure("lifted top does not generate the module".into()));
    }
    if let Some(w) = p0.validate(alg) {
        return Err(Error::PresentationFailure(w));
    }
    Ok((tops, p0, cover))
}

pub fn projective_presentation(alg: &Algebra, m: &LeftModule) -> Result<ProjectivePresentation> {
    let f = alg.field();
    let (tops, p0, cover) = projective_cover(alg, m)?;
    let kernel = cover.nullspace();
    let (p1_tops, p1, differential) = if kernel.cols() == 0 {
        (Vec::new(), LeftModule::zero(alg), Mat::zeros(f, p0.dim(), 0))
    } else {
        let (k, incl) = p0.restrict(alg, &kernel);
        let (t1, p1, c1) = projective_cover(alg, &k)?;
        (t1, p1, incl.mul(&c1))
    };
    if m.dim() > 0 && !cover.mul(&differential).is_zero() {
        return Err(Error::PresentationFailure("composite P1 → P0 → M is nonzero".into()));
    }
    if differential.rank() != kernel.cols() {
        return Err(Error::PresentationFailure("P1 does not cover the kernel".into()));
    }
    Ok(ProjectivePresentation { tops, p0, cover, p1_tops, p1, differential })
}

/// `α_k` on `Γ(N)` induced by `k⊗k` on `B`.
fn relabeling(hd: &HopfData, gn: &super::GammaImage, n_dim: usize, k: usize) -> Mat {
    let f = hd.algebra.field();
    let kk = hd.action.matrix(k).kron(hd.action.matrix(k));
    gn.quotient.induced_map(&gn.quotient, &kk, &Mat::identity(f, n_dim))
}

/// Equivariant structure on `Γ(M)` transported from the relabeling structure
/// on `Γ(P0)` through a projective presentation.
///
/// The report records equivariance of `Γ` of the presentation maps, agreement
/// with the structure induced directly by `k⊗k`, and the structure axioms.
pub fn equivariant_gamma(hd: &HopfData, m: &LeftModule) -> Result<(EquivariantStructure, ValidationReport)> {
    let alg = &hd.algebra;
    let f = alg.field();
    let grp = hd.group();
    let elements: Vec<usize> = grp.elements().collect();
    let mut report = ValidationReport::new();
    if m.dim() == 0 {
        let alphas = elements.iter().map(|_| Mat::zeros(f, 0, 0)).collect();
        report.pass("zero module");
        return Ok((EquivariantStructure { elements, alphas }, report));
    }
    let pres = projective_presentation(alg, m)?;
    let gm = gamma_functor(hd, m);
    let g0 = gamma_functor(hd, &pres.p0);
    let g1 = gamma_functor(hd, &pres.p1);
    let g_cover = gamma_map(hd, &g0, &gm, &pres.cover);
    let g_diff = gamma_map(hd, &g1, &g0, &pres.differential);
    let section = g_cover
        .solve(&Mat::identity(f, gm.dim()))
        .ok_or_else(|| Error::PresentationFailure("Γ of the cover is not surjective".into()))?;

    let mut alphas = Vec::with_capacity(elements.len());
    let mut diff_witness = None;
    let mut direct_witness = None;
    let mut relabel_witness = None;
    for &k in &elements {
        let a0 = relabeling(hd, &g0, pres.p0.dim(), k);
        let a1 = relabeling(hd, &g1, pres.p1.dim(), k);
        if relabel_witness.is_none() && !is_monomial(&a0) {
            relabel_witness = Some(format!("α_{} on Γ(P0) is not a relabeling", grp.name(k)));
        }
        if diff_witness.is_none() && g_diff.mul(&a1) != a0.mul(&g_diff) {
            diff_witness = Some(format!("Γ(P1 → P0) fails for {}", grp.name(k)));
        }
        let transported = g_cover.mul(&a0).mul(&section);
        if diff_witness.is_none() && g_cover.mul(&a0) != transported.mul(&g_cover) {
            diff_witness = Some(format!("Γ(P0 → M) fails for {}", grp.name(k)));
        }
        if direct_witness.is_none() && transported != relabeling(hd, &gm, m.dim(), k) {
            direct_witness = Some(format!("disagreement at {}", grp.name(k)));
        }
        alphas.push(transported);
    }
    report.record("projective structure is a relabeling", relabel_witness);
    report.record("Γ of presentation maps is equivariant", diff_witness);
    report.record("agrees with the structure induced by k⊗k", direct_witness);
    let structure = EquivariantStructure { elements, alphas };
    report.extend("Γ(M): ", structure.verify(alg, &hd.action, grp, &gm.bimodule));
    Ok((structure, report))
}

/// Each column has exactly one nonzero entry.
fn is_monomial(m: &Mat) -> bool {
    (0..m.cols()).all(|c| m.column(c).iter().filter(|&&x| x != 0).count() == 1)
}
