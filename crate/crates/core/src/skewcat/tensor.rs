//! `M ⊗^G N = ⊕_g M^g ⊗_A N`, its action on morphisms, and the unit object.
//!
//! Summand `u` of `(M' ⊗^G N')^h` has the same coordinates as
//! `M'^{uh} ⊗_A N'^h`, because tensor quotients are stored in reduced
//! echelon form and twisting only reindexes the relations. Every map below
//! is therefore a plain block matrix.

use super::{GroupIdempotent, SkewCategory, SkewHom, SkewObject};
use crate::bimodule::{right_unitor, tensor_over_a, Bimodule, EquivariantStructure, TensorQuotient};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::report::ValidationReport;

/// The carrier of `M ⊗^G N` with one tensor quotient per group element.
#[derive(Clone, Debug)]
pub struct SkewTensor {
    pub object: SkewObject,
    /// `parts[u]` presents `M^u ⊗_A N`.
    pub parts: Vec<TensorQuotient>,
    /// `M^u ⊗_A N` as bimodules.
    pub summands: Vec<Bimodule>,
    pub offsets: Vec<usize>,
}

impl SkewTensor {
    pub fn dim(&self) -> usize {
        self.object.carrier.dim()
    }
}

impl SkewCategory<'_> {
    /// `⊕_u M^u ⊗_A N` with the identity idempotent.
    pub fn tensor_carrier(&self, m: &Bimodule, n: &Bimodule) -> SkewTensor {
        let mut parts = Vec::with_capacity(self.grp.order());
        let mut mods = Vec::with_capacity(self.grp.order());
        let mut offsets = Vec::with_capacity(self.grp.order());
        let mut offset = 0;
        for u in self.grp.elements() {
            let (b, tq) = tensor_over_a(self.alg, &m.twist(self.alg, self.act, u), n);
            offsets.push(offset);
            offset += tq.dim();
            parts.push(tq);
            mods.push(b);
        }
        let carrier = Bimodule::direct_sum(self.alg, &mods.iter().collect::<Vec<_>>());
        SkewTensor { object: self.plain(carrier), parts, summands: mods, offsets }
    }

    /// `φ ⊗^G ψ` between tensor carriers.
    ///
    /// Degree `h` sends summand `k` to summand `u` by `(φ_{uhk⁻¹})^k ⊗ ψ_h`.
    pub fn tensor_homs(&self, src: &SkewTensor, dst: &SkewTensor, phi: &SkewHom, psi: &SkewHom) -> SkewHom {
        let f = self.field();
        let grp = self.grp;
        let mut out = SkewHom::zero(dst.dim(), src.dim());
        for (&h, psi_h) in &psi.components {
            let mut block = Mat::zeros(f, dst.dim(), src.dim());
            let mut any = false;
            for (&g, phi_g) in &phi.components {
                for k in grp.elements() {
                    // g = u h k⁻¹
                    let u = grp.mul(grp.mul(g, k), grp.inv(h));
                    let piece = dst.parts[u].induced_map(&src.parts[k], phi_g, psi_h);
                    if !piece.is_zero() {
                        block.set_block(dst.offsets[u], src.offsets[k], &piece);
                        any = true;
                    }
                }
            }
            if any {
                out.add_component(h, &block, 1);
            }
        }
        out
    }

    /// `(M, e) ⊗^G (N, f)`; fails if `e ⊗^G f` is not idempotent.
    pub fn tensor(&self, x: &SkewObject, y: &SkewObject) -> Result<SkewTensor> {
        let mut t = self.tensor_carrier(&x.carrier, &y.carrier);
        let idem = self.tensor_homs(&t, &t, &x.idem, &y.idem);
        if self.compose(&idem, &idem) != idem {
            return Err(Error::DimensionMismatch("tensor of idempotents is not idempotent".into()));
        }
        t.object.idem = idem;
        Ok(t)
    }

    /// Checks `(M, ε) ⊗^G (A, π_1) ≅ (M, ε) ≅ (A, π_1) ⊗^G (M, ε)` with the
    /// explicit mutually inverse maps.
    pub fn verify_unitors(
        &self,
        m: &Bimodule,
        alphas: &EquivariantStructure,
        idem: &GroupIdempotent,
    ) -> ValidationReport {
        let mut report = ValidationReport::new();
        let eps = self.idempotent_hom(idem, alphas);
        report.record(
            "ε is an idempotent endomorphism",
            (!self.is_morphism(m, m, &eps) || self.compose(&eps, &eps) != eps).then(|| "ε fails".to_string()),
        );
        let regular = Bimodule::regular(self.alg);
        let pi = self.unit_idempotent();

        let right = self.tensor_carrier(m, &regular);
        let right_idem = self.tensor_homs(&right, &right, &eps, &pi);
        let (phi, psi) = self.right_unitor_maps(m, alphas, idem, &right);
        self.record_pair(&mut report, "right", m, &right, &eps, &right_idem, &phi, &psi);

        let left = self.tensor_carrier(&regular, m);
        let left_idem = self.tensor_homs(&left, &left, &pi, &eps);
        let (phi, psi) = self.left_unitor_maps(m, alphas, idem, &left);
        self.record_pair(&mut report, "left", m, &left, &eps, &left_idem, &phi, &psi);
        report
    }

    #[allow(clippy::too_many_arguments)]
    fn record_pair(
        &self,
        report: &mut ValidationReport,
        side: &str,
        m: &Bimodule,
        t: &SkewTensor,
        eps: &SkewHom,
        t_idem: &SkewHom,
        phi: &SkewHom,
        psi: &SkewHom,
    ) {
        let c = &t.object.carrier;
        let morphisms = self.is_morphism(m, c, phi) && self.is_morphism(c, m, psi);
        report.record(
            format!("{side} unitor maps are morphisms"),
            (!morphisms).then(|| "a component is not a bimodule map".to_string()),
        );
        report.record(
            format!("{side} unitor: ψ∘φ = ε"),
            (self.compose(psi, phi) != *eps).then(|| "composite differs from ε".to_string()),
        );
        report.record(
            format!("{side} unitor: φ∘ψ = tensor idempotent"),
            (self.compose(phi, psi) != *t_idem).then(|| "composite differs from the tensor idempotent".to_string()),
        );
    }

    /// `φ_t(m) = Σ_s λ(s)/(|G_M||G|) · [α_s(m) ⊗ 1]` in summand `st⁻¹`, and
    /// `ψ_h = λ(hg⁻¹)/|G_M| · α_{hg⁻¹} ∘ ρ` on summand `g`.
    fn right_unitor_maps(
        &self,
        m: &Bimodule,
        alphas: &EquivariantStructure,
        idem: &GroupIdempotent,
        t: &SkewTensor,
    ) -> (SkewHom, SkewHom) {
        let f = self.field();
        let grp = self.grp;
        let order_h = f.from_usize(idem.elements.len());
        let c = f.inv(f.mul(order_h, f.from_usize(grp.order())));
        let one: Vec<usize> = (0..self.alg.num_vertices()).map(|v| self.alg.vertex_element(v)).collect();
        let mut phi = SkewHom::zero(t.dim(), m.dim());
        for tt in grp.elements() {
            let mut block = Mat::zeros(f, t.dim(), m.dim());
            for (&s, &l) in idem.elements.iter().zip(&idem.lambda) {
                if l == 0 {
                    continue;
                }
                let alpha = alphas.alpha(s).expect("structure covers the stabilizer");
                let u = grp.mul(s, grp.inv(tt));
                let scale = f.mul(c, l);
                for j in 0..m.dim() {
                    let col = alpha.column(j);
                    let terms = col
                        .iter()
                        .enumerate()
                        .filter(|(_, &x)| x != 0)
                        .flat_map(|(i, &x)| one.iter().map(move |&e| ((i, e), f.mul(x, scale))));
                    let v = t.parts[u].project(terms.collect::<Vec<_>>());
                    for (r, &x) in v.iter().enumerate() {
                        block.add_at(t.offsets[u] + r, j, x);
                    }
                }
            }
            phi.add_component(tt, &block, 1);
        }

        let c2 = f.inv(order_h);
        let rho: Vec<Mat> = grp
            .elements()
            .map(|g| right_unitor(self.alg, &t.parts[g], &m.twist(self.alg, self.act, g)))
            .collect();
        let mut psi = SkewHom::zero(m.dim(), t.dim());
        for h in grp.elements() {
            let mut block = Mat::zeros(f, m.dim(), t.dim());
            for g in grp.elements() {
                let x = grp.mul(h, grp.inv(g));
                let Some(i) = idem.elements.iter().position(|&e| e == x) else { continue };
                let alpha = alphas.alpha(x).expect("structure covers the stabilizer");
                let piece = alpha.mul(&rho[g]).scale(f.mul(c2, idem.lambda[i]));
                block.set_block(0, t.offsets[g], &piece);
            }
            psi.add_component(h, &block, 1);
        }
        (phi, psi)
    }

    /// `φ'_t(m) = λ(t)/(|G_M||G|) · [1 ⊗ α_t(m)]` in every summand, and
    /// `ψ'_h(a ⊗ m) = λ(h)/|G_M| · α_h(g⁻¹(a)·m)` on summand `g`.
    fn left_unitor_maps(
        &self,
        m: &Bimodule,
        alphas: &EquivariantStructure,
        idem: &GroupIdempotent,
        t: &SkewTensor,
    ) -> (SkewHom, SkewHom) {
        let f = self.field();
        let grp = self.grp;
        let order_h = f.from_usize(idem.elements.len());
        let c = f.inv(f.mul(order_h, f.from_usize(grp.order())));
        let one: Vec<usize> = (0..self.alg.num_vertices()).map(|v| self.alg.vertex_element(v)).collect();
        let mut phi = SkewHom::zero(t.dim(), m.dim());
        let mut psi = SkewHom::zero(m.dim(), t.dim());
        for (&s, &l) in idem.elements.iter().zip(&idem.lambda) {
            if l == 0 {
                continue;
            }
            let alpha = alphas.alpha(s).expect("structure covers the stabilizer");
            let mut block = Mat::zeros(f, t.dim(), m.dim());
            let scale = f.mul(c, l);
            for u in grp.elements() {
                for j in 0..m.dim() {
                    let col = alpha.column(j);
                    let terms: Vec<_> = col
                        .iter()
                        .enumerate()
                        .filter(|(_, &x)| x != 0)
                        .flat_map(|(i, &x)| one.iter().map(move |&e| ((e, i), f.mul(x, scale))))
                        .collect();
                    let v = t.parts[u].project(terms);
                    for (r, &x) in v.iter().enumerate() {
                        block.add_at(t.offsets[u] + r, j, x);
                    }
                }
            }
            phi.add_component(s, &block, 1);

            let scale = f.mul(f.inv(order_h), l);
            let mut block = Mat::zeros(f, m.dim(), t.dim());
            for g in grp.elements() {
                let back = self.act.matrix(grp.inv(g));
                for k in 0..t.parts[g].dim() {
                    let (a, j) = t.parts[g].representative(k);
                    let y = back.column(a);
                    let z = m.left_action_of(self.alg, &y).column(j);
                    let w = alpha.mul_vec(&z);
                    for (r, &x) in w.iter().enumerate() {
                        block.add_at(r, t.offsets[g] + k, f.mul(x, scale));
                    }
                }
            }
            psi.add_component(s, &block, 1);
        }
        (phi, psi)
    }
}

/// `⊕_g M^g ⊗_A N ≅ ⊕_g M ⊗_A N^{g⁻¹}` in the skew category: summand `g`
/// goes to summand `g` in degree `g`, with identity coordinates.
pub fn asymmetry_isomorphism(cat: &SkewCategory<'_>, m: &Bimodule, n: &Bimodule) -> ValidationReport {
    let (alg, act, grp) = (cat.alg, cat.act, cat.grp);
    let f = cat.field();
    let mut report = ValidationReport::new();
    let lhs = cat.tensor_carrier(m, n);
    let mut rhs_parts = Vec::new();
    let mut rhs_tq = Vec::new();
    for g in grp.elements() {
        let (b, tq) = tensor_over_a(alg, m, &n.twist(alg, act, grp.inv(g)));
        rhs_parts.push(b);
        rhs_tq.push(tq);
    }
    let dims_match = lhs.parts.iter().zip(&rhs_tq).all(|(a, b)| a.dim() == b.dim());
    report.record("summand dimensions agree", (!dims_match).then(|| "dimension mismatch".to_string()));
    if !dims_match {
        return report;
    }
    let mut witness = None;
    for g in grp.elements() {
        let twisted = rhs_parts[g].twist(alg, act, g);
        let id = Mat::identity(f, lhs.parts[g].dim());
        if !lhs.summands[g].is_morphism(&twisted, &id) {
            witness = Some(format!("identity is not a bimodule map at {}", grp.name(g)));
            break;
        }
    }
    report.record("identity coordinates are bimodule isomorphisms", witness);

    let rhs = Bimodule::direct_sum(alg, &rhs_parts.iter().collect::<Vec<_>>());
    let d = lhs.dim();
    let mut forward = SkewHom::zero(d, d);
    let mut backward = SkewHom::zero(d, d);
    for g in grp.elements() {
        let mut block = Mat::zeros(f, d, d);
        block.set_block(lhs.offsets[g], lhs.offsets[g], &Mat::identity(f, lhs.parts[g].dim()));
        forward.add_component(g, &block, 1);
        backward.add_component(grp.inv(g), &block, 1);
    }
    let ok = cat.is_morphism(&lhs.object.carrier, &rhs, &forward) && cat.is_morphism(&rhs, &lhs.object.carrier, &backward);
    report.record("both directions are skew morphisms", (!ok).then(|| "component fails".to_string()));
    let id = cat.identity(d);
    let inverse = cat.compose(&backward, &forward) == id && cat.compose(&forward, &backward) == id;
    report.record("mutually inverse", (!inverse).then(|| "composites are not identities".to_string()));
    report
}
