//! Hopf algebras on covering quivers, and the passage between modules and
//! bimodules through `B = A ⊗ A^op`.
//!
//! Vertices of a covering quiver are the group elements (vertex index equals
//! group element index) and the arrow `a_{i,g}` has index `i·|G| + g`.

pub mod examples;
mod functors;
mod monoidal;
mod presentation;

use std::sync::OnceLock;

pub use functors::{
    gamma_comparison, gamma_functor, gamma_map, kappa, module_tensor, phi_functor, sigma, tau, trivial_module, xi,
    zeta, GammaImage, PhiBimodule,
};
pub use monoidal::verify_gamma_monoidal;
pub use presentation::{equivariant_gamma, projective_cover, projective_presentation, ProjectivePresentation};

use crate::algebra::{Algebra, AlgebraAction, Arrow, Path, Quiver};
use crate::algebra::GroupData;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Mat;
use crate::report::ValidationReport;

/// A combination of arrows, `(arrow index, integer coefficient)`.
pub type ArrowCombination = Vec<(usize, i64)>;

/// Weights of a covering quiver and the kG-bimodule structure on its arrows.
#[derive(Clone, Debug)]
pub struct WeightData {
    pub group: GroupData,
    pub weights: Vec<usize>,
    /// `left[h][a]` expands `h·a`.
    pub left: Vec<Vec<ArrowCombination>>,
    /// `right[h][a]` expands `a·h`.
    pub right: Vec<Vec<ArrowCombination>>,
    /// Scalar in front of the antipode on arrows; `-1` gives a Hopf algebra.
    pub antipode_sign: i64,
}

impl WeightData {
    /// Structure `h·a_{i,g} = χ_i(h) a_{i,hg}`, `a_{i,g}·h = a_{j,gh}` with
    /// `w_j = h⁻¹ w_i h`; `characters[i][h]` gives `χ_i(h)`.
    pub fn with_characters(group: GroupData, weights: Vec<usize>, characters: &[Vec<i64>]) -> Result<Self> {
        let n = group.order();
        let r = weights.len();
        if characters.len() != r || characters.iter().any(|c| c.len() != n) {
            return Err(Error::DimensionMismatch("one character value per weight and group element".into()));
        }
        let perms = conjugation_permutations(&group, &weights)?;
        let mut left = vec![vec![Vec::new(); r * n]; n];
        let mut right = vec![vec![Vec::new(); r * n]; n];
        for h in 0..n {
            for i in 0..r {
                for g in 0..n {
                    left[h][i * n + g] = vec![(i * n + group.mul(h, g), characters[i][h])];
                    right[h][i * n + g] = vec![(perms[h][i] * n + group.mul(g, h), 1)];
                }
            }
        }
        Ok(Self { group, weights, left, right, antipode_sign: -1 })
    }

    /// Weight data without arrows; the covering quiver is discrete.
    pub fn discrete(group: GroupData) -> Self {
        let n = group.order();
        Self { group, weights: Vec::new(), left: vec![Vec::new(); n], right: vec![Vec::new(); n], antipode_sign: -1 }
    }

    pub fn num_arrows(&self) -> usize {
        self.weights.len() * self.group.order()
    }

    /// `(i, g)` for arrow index `a`.
    pub fn arrow_label(&self, a: usize) -> (usize, usize) {
        (a / self.group.order(), a % self.group.order())
    }

    fn endpoints(&self, a: usize) -> (usize, usize) {
        let grp = &self.group;
        let (i, g) = self.arrow_label(a);
        let gi = grp.inv(g);
        (gi, grp.mul(self.weights[i], gi))
    }

    /// Checks the bimodule axioms on arrows and the endpoint constraint.
    pub fn validate(&self, field: PrimeField) -> ValidationReport {
        let mut report = ValidationReport::new();
        let grp = &self.group;
        let n = grp.order();
        let na = self.num_arrows();
        let shape = self.left.len() == n
            && self.right.len() == n
            && self.left.iter().chain(&self.right).all(|row| row.len() == na)
            && self.left.iter().chain(&self.right).flatten().flatten().all(|&(b, _)| b < na);
        report.record("bimodule structure shape", (!shape).then(|| "tables do not match the arrows".to_string()));
        if !shape {
            return report;
        }
        let apply = |table: &Vec<ArrowCombination>, x: &[(usize, i64)]| -> Vec<(usize, i64)> {
            let mut out: Vec<u64> = vec![0; na];
            for &(a, c) in x {
                for &(b, d) in &table[a] {
                    out[b] = field.add(out[b], field.mul(field.from_i64(c), field.from_i64(d)));
                }
            }
            out.into_iter().enumerate().filter(|(_, c)| *c != 0).map(|(b, c)| (b, c as i64)).collect()
        };
        let unit = (0..na).find(|&a| {
            apply(&self.left[grp.identity()], &[(a, 1)]) != vec![(a, 1)]
                || apply(&self.right[grp.identity()], &[(a, 1)]) != vec![(a, 1)]
        });
        report.record("identity acts trivially", unit.map(|a| format!("arrow {a}")));
        let mut witness = None;
        'outer: for h in 0..n {
            for k in 0..n {
                for a in 0..na {
                    let x = [(a, 1)];
                    let hk = grp.mul(h, k);
                    if apply(&self.left[h], &apply(&self.left[k], &x)) != apply(&self.left[hk], &x) {
                        witness = Some(format!("left action at ({}, {}) on arrow {a}", grp.name(h), grp.name(k)));
                        break 'outer;
                    }
                    if apply(&self.right[k], &apply(&self.right[h], &x)) != apply(&self.right[hk], &x) {
                        witness = Some(format!("right action at ({}, {}) on arrow {a}", grp.name(h), grp.name(k)));
                        break 'outer;
                    }
                    if apply(&self.right[k], &apply(&self.left[h], &x)) != apply(&self.left[h], &apply(&self.right[k], &x))
                    {
                        witness = Some(format!("actions of {} and {} do not commute", grp.name(h), grp.name(k)));
                        break 'outer;
                    }
                }
            }
        }
        report.record("kG-bimodule axioms", witness);
        let mut bad = None;
        'span: for h in 0..n {
            for a in 0..na {
                let (s, t) = self.endpoints(a);
                let hi = grp.inv(h);
                let expect_left = (grp.mul(s, hi), grp.mul(t, hi));
                let expect_right = (grp.mul(hi, s), grp.mul(hi, t));
                let off = |table: &Vec<ArrowCombination>, want: (usize, usize)| {
                    table[a].iter().any(|&(b, c)| c != 0 && self.endpoints(b) != want)
                };
                if off(&self.left[h], expect_left) || off(&self.right[h], expect_right) {
                    bad = Some(format!("arrow {a} under {}", grp.name(h)));
                    break 'span;
                }
            }
        }
        report.record("images lie between the expected vertices", bad);
        report
    }
}

/// For each `h`, the permutation `i ↦ j` with `w_j = h⁻¹ w_i h`, matching
/// repeated weights in order of occurrence.
fn conjugation_permutations(grp: &GroupData, weights: &[usize]) -> Result<Vec<Vec<usize>>> {
    let mut perms = Vec::with_capacity(grp.order());
    for h in grp.elements() {
        let mut used = vec![false; weights.len()];
        let mut perm = Vec::with_capacity(weights.len());
        for &w in weights {
            let target = grp.mul(grp.inv(h), grp.mul(w, h));
            let j = (0..weights.len()).find(|&j| !used[j] && weights[j] == target).ok_or_else(|| {
                Error::WeightNotClosed(format!(
                    "conjugating {} by {} leaves the weight sequence",
                    grp.name(w),
                    grp.name(h)
                ))
            })?;
            used[j] = true;
            perm.push(j);
        }
        perms.push(perm);
    }
    Ok(perms)
}

/// Vertices `e_g` for `g ∈ G` and arrows `a_{i,g} : e_{g⁻¹} → e_{w_i g⁻¹}`.
pub fn covering_quiver(grp: &GroupData, weights: &[usize]) -> Result<Quiver> {
    if let Some(&w) = weights.iter().find(|&&w| w >= grp.order()) {
        return Err(Error::WeightNotClosed(format!("weight index {w} is not a group element")));
    }
    conjugation_permutations(grp, weights)?;
    let vertices = grp.names().to_vec();
    let mut arrows = Vec::with_capacity(weights.len() * grp.order());
    for (i, &w) in weights.iter().enumerate() {
        for g in grp.elements() {
            let gi = grp.inv(g);
            arrows.push(Arrow { name: format!("a{}_{}", i + 1, grp.name(g)), source: gi, target: grp.mul(w, gi) });
        }
    }
    Quiver::new(vertices, arrows)
}

/// Comultiplication, counit and antipode on the basis of a covering algebra.
#[derive(Debug)]
pub struct HopfData {
    pub algebra: Algebra,
    pub weights: WeightData,
    /// `Δ` as a `d² × d` matrix; column `i` is `Δ(b_i)` in the basis `b_p ⊗ b_q` (index `p·d + q`).
    pub delta: Mat,
    pub counit: Vec<u64>,
    pub antipode: Mat,
    /// The group acting by `x ↦ h·x`.
    pub action: AlgebraAction,
    b_structure: OnceLock<PhiBimodule>,
}

impl Clone for HopfData {
    fn clone(&self) -> Self {
        Self {
            algebra: self.algebra.clone(),
            weights: self.weights.clone(),
            delta: self.delta.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            action: self.action.clone(),
            b_structure: OnceLock::new(),
        }
    }
}

impl HopfData {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn group(&self) -> &GroupData {
        &self.weights.group
    }

    /// `Δ(x)` as a `d²` vector.
    pub fn coproduct(&self, x: &[u64]) -> Vec<u64> {
        self.delta.mul_vec(x)
    }

    pub fn counit_of(&self, x: &[u64]) -> u64 {
        let f = self.algebra.field();
        x.iter().zip(&self.counit).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    /// `φ = (id ⊗ S)∘Δ` as a `d² × d` matrix.
    pub fn phi(&self) -> Mat {
        let id = Mat::identity(self.algebra.field(), self.dim());
        id.kron(&self.antipode).mul(&self.delta)
    }

    /// `B` with its outer and `φ`-twisted actions, built on first use.
    pub fn b_structure(&self) -> &PhiBimodule {
        self.b_structure.get_or_init(|| PhiBimodule::new(self))
    }
}

/// Multiplication `A ⊗ A → A` as a `d × d²` matrix.
pub fn multiplication_matrix(alg: &Algebra) -> Mat {
    let d = alg.dim();
    let mut m = Mat::zeros(alg.field(), d, d * d);
    for p in 0..d {
        for q in 0..d {
            for &(k, c) in alg.mul_basis(p, q) {
                m.set(k, p * d + q, c);
            }
        }
    }
    m
}

/// Product in `A ⊗ A`, `(x⊗y)(x'⊗y') = xx' ⊗ yy'`.
pub fn tensor_product_mul(alg: &Algebra, u: &[u64], v: &[u64]) -> Vec<u64> {
    let f = alg.field();
    let d = alg.dim();
    let mut out = vec![0; d * d];
    for (i, &a) in u.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let (p, q) = (i / d, i % d);
        for (j, &b) in v.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let (r, s) = (j / d, j % d);
            let ab = f.mul(a, b);
            for &(k, c) in alg.mul_basis(p, r) {
                for &(l, e) in alg.mul_basis(q, s) {
                    let idx = k * d + l;
                    out[idx] = f.add(out[idx], f.mul(ab, f.mul(c, e)));
                }
            }
        }
    }
    out
}

/// Images of the generators (vertices, then arrows) under `Δ`, `ε`, `S`.
struct GeneratorImages {
    delta: Vec<Vec<u64>>,
    counit: Vec<u64>,
    antipode: Vec<Vec<u64>>,
}

/// The algebra element `Σ c·a` for a combination of arrows.
pub fn arrow_vector(alg: &Algebra, comb: &[(usize, i64)]) -> Vec<u64> {
    let f = alg.field();
    let mut v = alg.zero();
    for &(b, c) in comb {
        let k = alg.arrow_element(b);
        v[k] = f.add(v[k], f.from_i64(c));
    }
    v
}

fn generator_images(alg: &Algebra, wd: &WeightData) -> GeneratorImages {
    let f = alg.field();
    let grp = &wd.group;
    let d = alg.dim();
    let n = grp.order();
    let vb = |g: usize| alg.vertex_element(g);
    let mut delta = Vec::with_capacity(alg.num_generators());
    let mut counit = Vec::with_capacity(alg.num_generators());
    let mut antipode = Vec::with_capacity(alg.num_generators());
    for g in 0..n {
        let mut dv = vec![0; d * d];
        for h in 0..n {
            dv[vb(grp.mul(g, h)) * d + vb(grp.inv(h))] = 1;
        }
        delta.push(dv);
        counit.push(u64::from(g == grp.identity()));
        antipode.push(alg.unit_vector(vb(grp.inv(g))));
    }
    for a in 0..wd.num_arrows() {
        let mut dv = vec![0; d * d];
        for h in 0..n {
            let ha = arrow_vector(alg, &wd.left[h][a]);
            let ah = arrow_vector(alg, &wd.right[h][a]);
            for k in 0..d {
                let i = k * d + vb(h);
                dv[i] = f.add(dv[i], ha[k]);
                let j = vb(h) * d + k;
                dv[j] = f.add(dv[j], ah[k]);
            }
        }
        delta.push(dv);
        counit.push(0);
        // S(a_{i,g}) = sign · (w_i g⁻¹)·a_{i,g}·g⁻¹.
        let (i, g) = wd.arrow_label(a);
        let gi = grp.inv(g);
        let lh = grp.mul(wd.weights[i], gi);
        let mut acc: Vec<i64> = vec![0; wd.num_arrows()];
        for &(b, c) in &wd.left[lh][a] {
            for &(e, c2) in &wd.right[gi][b] {
                acc[e] += c * c2 * wd.antipode_sign;
            }
        }
        let comb: Vec<(usize, i64)> = acc.into_iter().enumerate().filter(|(_, c)| *c != 0).collect();
        antipode.push(arrow_vector(alg, &comb));
    }
    GeneratorImages { delta, counit, antipode }
}

impl GeneratorImages {
    /// `Δ`, `ε`, `S` of a path of the free path algebra.
    fn of_path(&self, alg: &Algebra, p: &Path) -> (Vec<u64>, u64, Vec<u64>) {
        let f = alg.field();
        let nv = alg.num_vertices();
        if p.is_empty() {
            return (self.delta[p.source].clone(), self.counit[p.source], self.antipode[p.source].clone());
        }
        let gens: Vec<usize> = p.arrows.iter().map(|&a| nv + a).collect();
        let mut delta = self.delta[gens[0]].clone();
        let mut eps = self.counit[gens[0]];
        let mut s = self.antipode[gens[0]].clone();
        for &g in &gens[1..] {
            delta = tensor_product_mul(alg, &self.delta[g], &delta);
            eps = f.mul(eps, self.counit[g]);
            s = alg.mul(&s, &self.antipode[g]);
        }
        (delta, eps, s)
    }
}

/// Builds `Δ`, `ε`, `S` from the weight data and checks every Hopf axiom on
/// the basis.
///
/// Fails with `NotHopfIdeal` when a relation is not sent to zero by one of
/// the three maps; axiom failures are recorded in the report.
pub fn hopf_structure(alg: &Algebra, wd: &WeightData) -> Result<(HopfData, ValidationReport)> {
    let f = alg.field();
    let grp = &wd.group;
    let expected = covering_quiver(grp, &wd.weights)?;
    let same_shape = expected.num_vertices() == alg.num_vertices()
        && expected.num_arrows() == alg.num_arrows()
        && expected
            .arrows()
            .iter()
            .zip(alg.quiver().arrows())
            .all(|(a, b)| a.source == b.source && a.target == b.target);
    if !same_shape {
        return Err(Error::InvalidQuiver("algebra is not built on the covering quiver of the weight data".into()));
    }
    let mut report = ValidationReport::new();
    report.extend("weights: ", wd.validate(f));

    let images = generator_images(alg, wd);
    for (ri, rel) in alg.relations().iter().enumerate() {
        let d = alg.dim();
        let mut delta = vec![0; d * d];
        let mut eps = 0;
        let mut s = alg.zero();
        for (c, p) in rel {
            let c = f.from_u64(*c);
            let (dp, ep, sp) = images.of_path(alg, p);
            for (x, y) in delta.iter_mut().zip(&dp) {
                *x = f.add(*x, f.mul(c, *y));
            }
            eps = f.add(eps, f.mul(c, ep));
            for (x, y) in s.iter_mut().zip(&sp) {
                *x = f.add(*x, f.mul(c, *y));
            }
        }
        let label = || {
            rel.iter()
                .map(|(c, p)| format!("{}·{}", f.display(*c), alg.quiver().path_label(p)))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        if delta.iter().any(|&x| x != 0) {
            return Err(Error::NotHopfIdeal(format!("#{ri} ({}) under the comultiplication", label())));
        }
        if eps != 0 {
            return Err(Error::NotHopfIdeal(format!("#{ri} ({}) under the counit", label())));
        }
        if s.iter().any(|&x| x != 0) {
            return Err(Error::NotHopfIdeal(format!("#{ri} ({}) under the antipode", label())));
        }
    }

    let d = alg.dim();
    let mut delta_cols = Vec::with_capacity(d);
    let mut counit = Vec::with_capacity(d);
    let mut s_cols = Vec::with_capacity(d);
    for b in alg.basis() {
        let (dp, ep, sp) = images.of_path(alg, b);
        delta_cols.push(dp);
        counit.push(ep);
        s_cols.push(sp);
    }
    let delta = Mat::from_columns(f, d * d, &delta_cols);
    let antipode = Mat::from_columns(f, d, &s_cols);

    let act_images: Vec<Vec<Vec<u64>>> = grp
        .elements()
        .map(|h| {
            let mut imgs: Vec<Vec<u64>> =
                grp.elements().map(|g| alg.unit_vector(alg.vertex_element(grp.mul(g, grp.inv(h))))).collect();
            for a in 0..wd.num_arrows() {
                imgs.push(arrow_vector(alg, &wd.left[h][a]));
            }
            imgs
        })
        .collect();
    let action = AlgebraAction::from_generator_images(alg, &act_images);

    let hd = HopfData {
        algebra: alg.clone(),
        weights: wd.clone(),
        delta,
        counit,
        antipode,
        action,
        b_structure: OnceLock::new(),
    };
    report.extend("", check_axioms(&hd));
    Ok((hd, report))
}

/// Exhaustive checks of the bialgebra and antipode axioms on the basis.
pub fn check_axioms(hd: &HopfData) -> ValidationReport {
    let alg = &hd.algebra;
    let f = alg.field();
    let d = alg.dim();
    let mut report = ValidationReport::new();
    let one = alg.one();
    let label = |i: usize| alg.basis_label(i);

    let one_one = {
        let mut v = vec![0; d * d];
        for (p, &a) in one.iter().enumerate() {
            for (q, &b) in one.iter().enumerate() {
                v[p * d + q] = f.mul(a, b);
            }
        }
        v
    };
    let mut w_delta = (hd.coproduct(&one) != one_one).then(|| "Δ(1) ≠ 1⊗1".to_string());
    let mut w_eps = (hd.counit_of(&one) != 1).then(|| "ε(1) ≠ 1".to_string());
    let mut w_s = (hd.antipode.mul_vec(&one) != one).then(|| "S(1) ≠ 1".to_string());
    for i in 0..d {
        for j in 0..d {
            let ei = alg.unit_vector(i);
            let ej = alg.unit_vector(j);
            let prod = alg.mul(&ei, &ej);
            if w_delta.is_none()
                && hd.coproduct(&prod) != tensor_product_mul(alg, &hd.delta.column(i), &hd.delta.column(j))
            {
                w_delta = Some(format!("Δ({}·{})", label(i), label(j)));
            }
            if w_eps.is_none() && hd.counit_of(&prod) != f.mul(hd.counit[i], hd.counit[j]) {
                w_eps = Some(format!("ε({}·{})", label(i), label(j)));
            }
            if w_s.is_none() && hd.antipode.mul_vec(&prod) != alg.mul(&hd.antipode.column(j), &hd.antipode.column(i)) {
                w_s = Some(format!("S({}·{})", label(i), label(j)));
            }
        }
    }
    report.record("Δ is an algebra map", w_delta);
    report.record("ε is an algebra map", w_eps);
    if w_s.is_none() && !hd.antipode.is_invertible() {
        w_s = Some("S is not bijective".into());
    }
    report.record("S is an anti-automorphism", w_s);

    let id = Mat::identity(f, d);
    let lhs = hd.delta.kron(&id).mul(&hd.delta);
    let rhs = id.kron(&hd.delta).mul(&hd.delta);
    report.record("coassociativity", first_column_difference(&lhs, &rhs).map(|c| format!("on {}", label(c))));

    let eps_row = Mat::from_fn(f, 1, d, |_, c| hd.counit[c]);
    let left_counit = eps_row.kron(&id).mul(&hd.delta);
    let right_counit = id.kron(&eps_row).mul(&hd.delta);
    let counit_fail = first_column_difference(&left_counit, &id).or_else(|| first_column_difference(&right_counit, &id));
    report.record("counit axiom", counit_fail.map(|c| format!("on {}", label(c))));

    let m = multiplication_matrix(alg);
    let unit_eps = Mat::from_fn(f, d, d, |r, c| f.mul(one[r], hd.counit[c]));
    let left_s = m.mul(&hd.antipode.kron(&id)).mul(&hd.delta);
    let right_s = m.mul(&id.kron(&hd.antipode)).mul(&hd.delta);
    let antipode_fail = first_column_difference(&left_s, &unit_eps).or_else(|| first_column_difference(&right_s, &unit_eps));
    report.record("antipode axiom", antipode_fail.map(|c| format!("on {}", label(c))));
    report
}

fn first_column_difference(a: &Mat, b: &Mat) -> Option<usize> {
    (0..a.cols()).find(|&c| a.column(c) != b.column(c))
}

/// The maps showing `A ⊗ A` is free as a right `A`-module, and the bases they give.
#[derive(Clone, Debug)]
pub struct BasisMaps {
    /// `a⊗b ↦ Σ a₁ ⊗ a₂b`.
    pub f: Mat,
    /// `a⊗b ↦ Σ a₁ ⊗ S(a₂)b`.
    pub g: Mat,
    /// Columns `Σ a₁ ⊗ b·S(a₂)`.
    pub twisted: Mat,
    pub report: ValidationReport,
}

pub fn check_basis_maps(hd: &HopfData) -> BasisMaps {
    let alg = &hd.algebra;
    let fld = alg.field();
    let d = alg.dim();
    let id = Mat::identity(fld, d);
    let m = multiplication_matrix(alg);
    let delta_id = hd.delta.kron(&id);
    let id_m = id.kron(&m);
    let f = id_m.mul(&delta_id);
    let g = id_m.mul(&id.kron(&hd.antipode).kron(&id)).mul(&delta_id);
    let mut twisted = Mat::zeros(fld, d * d, d * d);
    for a in 0..d {
        let da = hd.delta.column(a);
        for b in 0..d {
            let mut col = vec![0; d * d];
            for (idx, &c) in da.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (p, q) = (idx / d, idx % d);
                let right = alg.mul(&alg.unit_vector(b), &hd.antipode.column(q));
                for (r, &x) in right.iter().enumerate() {
                    col[p * d + r] = fld.add(col[p * d + r], fld.mul(c, x));
                }
            }
            for (r, &x) in col.iter().enumerate() {
                twisted.set(r, a * d + b, x);
            }
        }
    }
    let mut report = ValidationReport::new();
    report.record("f·g = id", (!f.mul(&g).is_identity()).then(|| "f·g differs from the identity".to_string()));
    report.record("g·f = id", (!g.mul(&f).is_identity()).then(|| "g·f differs from the identity".to_string()));
    for (name, basis) in [("basis Σ a₁⊗a₂b", &f), ("basis Σ a₁⊗S(a₂)b", &g), ("basis Σ a₁⊗bS(a₂)", &twisted)] {
        let r = basis.rank();
        report.record(name, (r != d * d).then(|| format!("rank {r} < {}", d * d)));
    }
    BasisMaps { f, g, twisted, report }
}

/// All paths of length `n` in `q`, each as a monomial relation.
pub fn monomial_relations(q: &Quiver, n: usize) -> Vec<crate::algebra::PathCombination> {
    let mut paths: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &paths {
            let end = q.target(p);
            for (ai, a) in q.arrows().iter().enumerate() {
                if a.source == end {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path { source: p.source, arrows });
                }
            }
        }
        paths = next;
    }
    paths.into_iter().map(|p| vec![(1, p)]).collect()
}
