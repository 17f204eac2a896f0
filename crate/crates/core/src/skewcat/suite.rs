//! Bundled checks of the skew category and of `Θ` on the generating objects.

use super::{check_1_full_embedding, group_idempotents, SkewCategory, SkewHom, SkewObject};
use crate::bimodule::{equivariant_structure, equivariant_structure_over, find_isomorphism, Bimodule};
use crate::error::Result;
use crate::hopf::HopfData;
use crate::report::ValidationReport;

impl SkewCategory<'_> {
    /// `A` and `⊕_h A e_h ⊗ e_h A`, the objects the unitors are tested on.
    pub fn unitor_objects(&self) -> Vec<(String, Bimodule)> {
        let pieces: Vec<Bimodule> = self.grp.elements().map(|h| Bimodule::free(self.alg, h, h)).collect();
        vec![
            ("A".into(), Bimodule::regular(self.alg)),
            ("⊕ Ae_h⊗e_hA".into(), Bimodule::direct_sum(self.alg, &pieces.iter().collect::<Vec<_>>())),
        ]
    }

    /// `(A, π_1)` and `(A e_g ⊗ e_1 A, id)` for every `g`.
    pub fn generator_objects(&self) -> Vec<(String, SkewObject)> {
        let one = self.grp.identity();
        let mut out = vec![("(A, π_1)".to_string(), self.unit_object())];
        for g in self.grp.elements() {
            out.push((format!("Ae_{}⊗e_1A", self.grp.name(g)), self.plain(Bimodule::free(self.alg, g, one))));
        }
        out
    }

    /// Orthogonality and completeness of the `ε_l` on `m`, and both unitors
    /// for each of them.
    pub fn check_idempotents_and_unitors(&self, name: &str, m: &Bimodule) -> Result<ValidationReport> {
        let mut report = ValidationReport::new();
        let stab = self.stabilizer(m);
        let structure = match equivariant_structure_over(self.alg, self.act, self.grp, &stab, m)? {
            Ok(s) => s,
            Err(e) => {
                report.fail(format!("{name}: stabilizer acts equivariantly"), e.to_string());
                return Ok(report);
            }
        };
        let idems = group_idempotents(self.field(), self.grp, &stab)?;
        let homs: Vec<SkewHom> = idems.iter().map(|e| self.idempotent_hom(e, &structure)).collect();
        let mut witness = None;
        let mut total = SkewHom::zero(m.dim(), m.dim());
        for (i, a) in homs.iter().enumerate() {
            total = total.add(a);
            for (j, b) in homs.iter().enumerate() {
                let prod = self.compose(a, b);
                let ok = if i == j { prod == *a } else { prod.is_zero() };
                if !ok && witness.is_none() {
                    witness = Some(format!("ε_{} ∘ ε_{}", i + 1, j + 1));
                }
            }
        }
        report.record(format!("{name}: ε_l are orthogonal idempotents ({})", homs.len()), witness);
        report.record(
            format!("{name}: Σ ε_l = id"),
            (total != self.identity(m.dim())).then(|| "sum differs from the identity".to_string()),
        );
        for idem in &idems {
            report.extend(&format!("{name}, l = {}: ", idem.label), self.verify_unitors(m, &structure, idem));
        }
        Ok(report)
    }

    /// Composition laws, idempotents and unitors.
    pub fn skew_category_suite(&self) -> Result<ValidationReport> {
        let mut report = ValidationReport::new();
        let one = self.grp.identity();
        let generators = vec![Bimodule::regular(self.alg), Bimodule::free(self.alg, one, one)];
        report.extend("composition: ", self.check_composition(&generators));
        for (name, m) in self.unitor_objects() {
            report.extend("", self.check_idempotents_and_unitors(&name, &m)?);
        }
        Ok(report)
    }
}

/// `Θ` on the generating objects: monoidal witnesses, equivariance of the
/// images, and the comparison with `Γ`.
pub fn theta_suite(hd: &HopfData) -> Result<ValidationReport> {
    let alg = &hd.algebra;
    let grp = hd.group();
    let cat = SkewCategory::new(alg, &hd.action, grp);
    let mut report = ValidationReport::new();
    let objects = cat.generator_objects();

    let regular = Bimodule::regular(alg);
    let unit = cat.theta(&cat.unit_object()).image;
    report.record(
        "Θ(A, π_1) ≅ A",
        find_isomorphism(alg, &unit, &regular).is_none().then(|| "not isomorphic".to_string()),
    );

    let mut bad = None;
    for (name, x) in &objects {
        let image = cat.theta(x).image;
        if let Err(e) = equivariant_structure(alg, &hd.action, grp, &image)? {
            bad.get_or_insert_with(|| format!("Θ({name}): {e}"));
        }
    }
    report.record(format!("Θ-images are equivariant ({})", objects.len()), bad);

    let mut monoidal = ValidationReport::new();
    for (a, x) in &objects {
        for (b, y) in &objects {
            monoidal.extend(&format!("J[{a}, {b}] "), cat.check_theta_monoidal(x, y)?);
        }
    }
    let failures: Vec<String> = monoidal.failures().map(|c| c.name.clone()).collect();
    report.record(
        format!("J_{{M,N}} invertible and compatible on {} generator pairs", objects.len() * objects.len()),
        failures.first().cloned(),
    );
    report.extend("1-fullness: ", check_1_full_embedding(hd)?);
    Ok(report)
}
