//! `Θ : X_A → A-bimodules`, `M ↦ ⊕_g M^g`, `f ↦ (f_{hg⁻¹})_{h,g}`, and the
//! checks built on it.

use super::{SkewCategory, SkewHom, SkewObject, SkewTensor};
use crate::bimodule::{
    dickson_radical, equivariant_structure_over, find_isomorphism, relabel_structure, tensor_over_a, theta_carrier,
    Bimodule, EquivariantStructure, LeftModule,
};
use crate::error::Result;
use crate::hopf::{gamma_functor, HopfData};
use crate::matrix::Mat;
use crate::report::ValidationReport;

/// `Θ(e)Θ(M)` with its inclusion into `Θ(M)` and the induced relabeling structure.
#[derive(Clone, Debug)]
pub struct ThetaImage {
    pub full: Bimodule,
    /// `Θ(e)` on `Θ(M)`.
    pub idem: Mat,
    pub image: Bimodule,
    pub inclusion: Mat,
    /// Left inverse of `inclusion` vanishing on the kernel of `Θ(e)`.
    pub retraction: Mat,
    pub structure: EquivariantStructure,
}

impl SkewCategory<'_> {
    /// Block `(h, g)` of `Θ(f)` is `f_{hg⁻¹}`.
    pub fn theta_map(&self, f: &SkewHom) -> Mat {
        let n = self.grp.order();
        let mut out = Mat::zeros(self.field(), n * f.rows, n * f.cols);
        for (&x, c) in &f.components {
            for g in self.grp.elements() {
                let h = self.grp.mul(x, g);
                out.set_block(h * f.rows, g * f.cols, c);
            }
        }
        out
    }

    pub fn theta(&self, x: &SkewObject) -> ThetaImage {
        let f = self.field();
        let full = theta_carrier(self.alg, self.act, self.grp, &x.carrier);
        let idem = self.theta_map(&x.idem);
        let (image, inclusion) = full.restrict(self.alg, &idem.column_basis());
        let retraction = match inclusion.left_inverse() {
            Some(l) => l.mul(&idem),
            None => Mat::zeros(f, 0, full.dim()),
        };
        let elements: Vec<usize> = self.grp.elements().collect();
        let alphas = relabel_structure(self.alg, self.grp, x.carrier.dim())
            .iter()
            .map(|a| retraction.mul(&a.mul(&inclusion)))
            .collect();
        ThetaImage { full, idem, image, inclusion, retraction, structure: EquivariantStructure { elements, alphas } }
    }

    /// `J : Θ(M) ⊗_A Θ(N) → Θ(M ⊗^G N)`: `(k, m) ⊗ (h, n)` goes to block
    /// `h`, summand `kh⁻¹`, class `m ⊗ n`.
    pub fn monoidal_witness(&self, m: &Bimodule, n: &Bimodule, t: &SkewTensor) -> (Bimodule, crate::bimodule::TensorQuotient, Mat) {
        let grp = self.grp;
        let tm = theta_carrier(self.alg, self.act, grp, m);
        let tn = theta_carrier(self.alg, self.act, grp, n);
        let (src, tq) = tensor_over_a(self.alg, &tm, &tn);
        let (dm, dn, dt) = (m.dim(), n.dim(), t.dim());
        let cols: Vec<Vec<u64>> = (0..tq.dim())
            .map(|c| {
                let (i, j) = tq.representative(c);
                let (k, h) = (i / dm, j / dn);
                let g = grp.mul(k, grp.inv(h));
                let v = t.parts[g].project_pair(i % dm, j % dn);
                let mut col = vec![0; grp.order() * dt];
                col[h * dt + t.offsets[g]..h * dt + t.offsets[g] + v.len()].copy_from_slice(&v);
                col
            })
            .collect();
        let j = Mat::from_columns(self.field(), grp.order() * dt, &cols);
        (src, tq, j)
    }

    /// `J_{M,N}` is a bimodule isomorphism intertwining `Θ(e) ⊗ Θ(f)` with `Θ(e ⊗^G f)`.
    pub fn check_theta_monoidal(&self, x: &SkewObject, y: &SkewObject) -> Result<ValidationReport> {
        let mut report = ValidationReport::new();
        let t = self.tensor(x, y)?;
        let (src, tq, j) = self.monoidal_witness(&x.carrier, &y.carrier, &t);
        let target = theta_carrier(self.alg, self.act, self.grp, &t.object.carrier);
        report.record("J is a bimodule map", (!src.is_morphism(&target, &j)).then(|| "J fails".to_string()));
        report.record("J is invertible", (!j.is_invertible()).then(|| format!("rank {} of {}", j.rank(), j.cols())));
        let lhs = j.mul(&tq.induced_map(&tq, &self.theta_map(&x.idem), &self.theta_map(&y.idem)));
        let rhs = self.theta_map(&t.object.idem).mul(&j);
        report.record("J intertwines the idempotents", (lhs != rhs).then(|| "square fails".to_string()));
        Ok(report)
    }

    /// Unitality, associativity and functoriality of `Θ` on hom bases between
    /// the given objects.
    pub fn check_composition(&self, objects: &[Bimodule]) -> ValidationReport {
        let mut report = ValidationReport::new();
        let n = objects.len();
        let bases: Vec<Vec<Vec<SkewHom>>> = (0..n)
            .map(|a| (0..n).map(|b| self.hom_basis(&objects[a], &objects[b])).collect())
            .collect();
        let mut unit = None;
        let mut functor = None;
        for a in 0..n {
            for b in 0..n {
                for f in &bases[a][b] {
                    let ok = self.compose(f, &self.identity(objects[a].dim())) == *f
                        && self.compose(&self.identity(objects[b].dim()), f) == *f;
                    if unit.is_none() && !ok {
                        unit = Some(format!("objects {a} → {b}"));
                    }
                    for c in 0..n {
                        for g in &bases[b][c] {
                            let gf = self.compose(g, f);
                            if functor.is_none()
                                && (!self.is_morphism(&objects[a], &objects[c], &gf)
                                    || self.theta_map(&gf) != self.theta_map(g).mul(&self.theta_map(f)))
                            {
                                functor = Some(format!("objects {a} → {b} → {c}"));
                            }
                        }
                    }
                }
            }
        }
        report.record("composition is unital", unit);
        report.record("Θ preserves composition", functor);

        let mut assoc = None;
        'outer: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        for f in &bases[a][b] {
                            for g in &bases[b][c] {
                                let gf = self.compose(g, f);
                                for h in &bases[c][d] {
                                    if self.compose(h, &gf) != self.compose(&self.compose(h, g), f) {
                                        assoc = Some(format!("objects {a} → {b} → {c} → {d}"));
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        report.record("composition is associative", assoc);
        report
    }

    /// `End(M)/Rad ≅ k[G_M]` for an indecomposable bimodule `M`.
    ///
    /// The endomorphism algebra is realized faithfully through `Θ`; the images
    /// of the equivariant maps `α_g` must form a basis modulo the radical and
    /// multiply like the group.
    pub fn check_end_mod_rad(&self, m: &Bimodule) -> Result<ValidationReport> {
        let f = self.field();
        let mut report = ValidationReport::new();
        let stab = self.stabilizer(m);
        let basis: Vec<Mat> = self.hom_basis(m, m).iter().map(|b| self.theta_map(b)).collect();
        let rad = dickson_radical(f, &basis)?;
        let quotient = basis.len() - rad.len();
        report.record(
            "dim End/Rad = |G_M|",
            (quotient != stab.len()).then(|| format!("{quotient} versus {}", stab.len())),
        );
        let structure = match equivariant_structure_over(self.alg, self.act, self.grp, &stab, m)? {
            Ok(s) => s,
            Err(e) => {
                report.fail("stabilizer acts equivariantly", e.to_string());
                return Ok(report);
            }
        };
        let alphas: Vec<Mat> = stab
            .iter()
            .map(|&g| self.theta_map(&SkewHom::pure(g, structure.alpha(g).expect("stabilizer element").clone())))
            .collect();
        let flat = |ms: &[Mat]| -> Mat {
            let cols: Vec<Vec<u64>> = ms.iter().map(|x| (0..x.rows()).flat_map(|r| x.row(r).to_vec()).collect()).collect();
            Mat::from_columns(f, basis[0].rows() * basis[0].cols(), &cols)
        };
        let mut all = rad.clone();
        all.extend(alphas.iter().cloned());
        let independent = flat(&all).rank() == rad.len() + stab.len();
        report.record(
            "stabilizer maps span End/Rad",
            (!independent).then(|| "dependent modulo the radical".to_string()),
        );
        let mut witness = None;
        for (i, &g) in stab.iter().enumerate() {
            for (j, &h) in stab.iter().enumerate() {
                let k = stab.iter().position(|&x| x == self.grp.mul(g, h)).expect("subgroup");
                if alphas[i].mul(&alphas[j]) != alphas[k] {
                    witness = Some(format!("{} · {}", self.grp.name(g), self.grp.name(h)));
                }
            }
        }
        report.record("stabilizer maps multiply like the group", witness);
        Ok(report)
    }
}

/// Γ-images of the indecomposable modules `L_1` and `A e_g` match the
/// Θ-images of `(A, π_1)` and `A e_g ⊗ e_1 A` up to bimodule isomorphism.
pub fn check_1_full_embedding(hd: &HopfData) -> Result<ValidationReport> {
    let alg = &hd.algebra;
    let grp = hd.group();
    let cat = SkewCategory::new(alg, &hd.action, grp);
    let one = grp.identity();
    let mut report = ValidationReport::new();

    let mut gammas = vec![("Γ(L_1)".to_string(), gamma_functor(hd, &LeftModule::simple(alg, one)).bimodule)];
    let mut thetas = vec![("Θ(A, π_1)".to_string(), cat.theta(&cat.unit_object()).image)];
    for g in grp.elements() {
        let name = grp.name(g);
        gammas.push((format!("Γ(Ae_{name})"), gamma_functor(hd, &LeftModule::projective(alg, g)).bimodule));
        thetas.push((format!("Θ(Ae_{name}⊗e_1A)"), cat.theta(&cat.plain(Bimodule::free(alg, g, one))).image));
    }
    let regular = Bimodule::regular(alg);
    report.record(
        "Θ(A, π_1) ≅ A",
        find_isomorphism(alg, &thetas[0].1, &regular).is_none().then(|| "not isomorphic".to_string()),
    );
    let mut used = vec![false; thetas.len()];
    let mut witness = None;
    for (name, gm) in &gammas {
        let hit = thetas
            .iter()
            .enumerate()
            .find(|(k, (_, tm))| !used[*k] && tm.dim() == gm.dim() && find_isomorphism(alg, gm, tm).is_some());
        match hit {
            Some((k, (tname, _))) => {
                used[k] = true;
                report.note(name.clone(), format!("≅ {tname}"));
            }
            None => {
                witness.get_or_insert_with(|| format!("{name} matches no Θ-image"));
            }
        }
    }
    report.record("Γ-images and Θ-images coincide", witness);
    Ok(report)
}
