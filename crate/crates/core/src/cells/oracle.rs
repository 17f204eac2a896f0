//! Bimodule computations that the symbolic calculus is checked against.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{CellContext, Config, FormalMorph, Side, SymClass};
use crate::bimodule::{
    decompose, find_isomorphism, hom_space_left, tensor_over_a, tensor_with_left_module, theta_carrier, Bimodule,
    LeftModule,
};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::report::ValidationReport;
use crate::skewcat::{SkewCategory, SkewObject};

impl CellContext {
    fn skew(&self) -> SkewCategory<'_> {
        SkewCategory::new(&self.algebra, &self.action, &self.group)
    }

    /// `A` as a bimodule over the working algebra.
    pub fn identity_bimodule(&self) -> Bimodule {
        let regular = Bimodule::regular(&self.algebra);
        match self.config {
            Config::Plain => regular,
            Config::Tilde => {
                let f = self.algebra.field();
                let n = self.group.order();
                let cols: Vec<usize> =
                    (0..self.algebra.dim()).filter(|&i| self.algebra.left_vertex(i) < n).collect();
                let span = Mat::identity(f, self.algebra.dim()).select_columns(&cols);
                regular.restrict(&self.algebra, &span).0
            }
        }
    }

    /// `Â ê_g ⊗ ê_1 Â` for a projective class.
    pub fn representative(&self, c: &SymClass) -> Bimodule {
        match *c {
            SymClass::Identity => self.identity_bimodule(),
            SymClass::Proj { left, right, g } => {
                Bimodule::free(&self.algebra, self.vertex(left, g), self.vertex(right, self.group.identity()))
            }
        }
    }

    /// The bimodule `Θ` assigns to a class; `Θ(A, π_1)` is `A` itself.
    pub fn theta_of(&self, c: &SymClass) -> Bimodule {
        match c {
            SymClass::Identity => self.identity_bimodule(),
            SymClass::Proj { .. } => theta_carrier(&self.algebra, &self.action, &self.group, &self.representative(c)),
        }
    }

    fn skew_object(&self, c: &SymClass) -> SkewObject {
        let cat = self.skew();
        match c {
            SymClass::Identity if self.config == Config::Plain => cat.unit_object(),
            _ => cat.plain(self.representative(c)),
        }
    }

    fn side_of(&self, v: usize) -> (Side, usize) {
        let n = self.group.order();
        if v < n {
            (Side::One, v)
        } else {
            (Side::Zero, v - n)
        }
    }
}

/// Decomposes `Θ(a) ⊗ Θ(b)` and reads off class multiplicities: copies of
/// `A`, and copies of `Â ê_x ⊗ ê_1 Â`.
pub fn tensor_oracle(ctx: &CellContext, a: &SymClass, b: &SymClass) -> Result<FormalMorph> {
    let mut out = FormalMorph::default();
    if a.right_side() != b.left_side() {
        return Ok(out);
    }
    let alg = &ctx.algebra;
    let (prod, _) = tensor_over_a(alg, &ctx.theta_of(a), &ctx.theta_of(b));
    if prod.dim() == 0 {
        return Ok(out);
    }
    let identity = ctx.identity_bimodule();
    let one = ctx.group.identity();
    let blocks = alg.block_dims();
    let nv = alg.num_vertices();
    for s in decompose(alg, &prod)?.summands {
        if s.module.dim() == identity.dim() && find_isomorphism(alg, &s.module, &identity).is_some() {
            out.add(SymClass::Identity, s.multiplicity);
            continue;
        }
        let dm = s.module.dimension_matrix(alg);
        let found = (0..nv).flat_map(|x| (0..nv).map(move |y| (x, y))).find(|&(x, y)| {
            (0..nv).all(|p| (0..nv).all(|q| dm[p][q] == blocks[p][x] * blocks[y][q]))
                && find_isomorphism(alg, &s.module, &Bimodule::free(alg, x, y)).is_some()
        });
        let Some((x, y)) = found else {
            return Err(Error::DimensionMismatch("a summand is neither A nor projective".into()));
        };
        let (ls, gx) = ctx.side_of(x);
        let (rs, gy) = ctx.side_of(y);
        if gy == one {
            out.add(SymClass::Proj { left: ls, right: rs, g: gx }, s.multiplicity);
        }
    }
    Ok(out)
}

/// Symbolic products agree with the oracle on every listed pair, or on all
/// pairs of classes when none are given.
pub fn check_oracle(ctx: &CellContext, pairs: Option<&[(SymClass, SymClass)]>) -> Result<ValidationReport> {
    let classes = ctx.classes();
    let all: Vec<(SymClass, SymClass)> =
        classes.iter().flat_map(|a| classes.iter().map(move |b| (*a, *b))).collect();
    let pairs = pairs.unwrap_or(&all);
    let mut report = ValidationReport::new();
    // Over a semisimple algebra the unit is itself projective, so `1` and the
    // projective class at the identity name the same bimodule.
    let unit_class = SymClass::proj(ctx.group.identity());
    let identity = ctx.identity_bimodule();
    let merged = identity.dim() == ctx.theta_of(&unit_class).dim()
        && find_isomorphism(&ctx.algebra, &identity, &ctx.theta_of(&unit_class)).is_some();
    if merged {
        report.note("unit is projective", format!("1 and {} are identified", ctx.label(&unit_class)));
    }
    let canon = |x: FormalMorph| -> FormalMorph {
        if !merged {
            return x;
        }
        let mut out = FormalMorph::default();
        for (c, k) in x.0 {
            out.add(if c == SymClass::Identity { unit_class } else { c }, k);
        }
        out
    };
    let mut witness = None;
    for (a, b) in pairs {
        let sym = canon(ctx.tensor_symbolic(a, b).unwrap_or_default());
        let oracle = canon(tensor_oracle(ctx, a, b)?);
        if sym != oracle && witness.is_none() {
            witness = Some(format!("{} ⊗ {}", ctx.label(a), ctx.label(b)));
        }
    }
    report.record(format!("symbolic products match decompositions ({} pairs)", pairs.len()), witness);
    Ok(report)
}

/// `dim Hom(Θ(x) ⊗ M, N) = dim Hom(M, Θ(x*) ⊗ N)` for every class `x` and
/// at least `min_pairs` sampled pairs of left modules.
pub fn check_adjunctions(ctx: &CellContext, seed: u64, min_pairs: usize) -> Result<ValidationReport> {
    let alg = &ctx.algebra;
    let nv = alg.num_vertices();
    let mut modules: Vec<LeftModule> = (0..nv).map(|v| LeftModule::simple(alg, v)).collect();
    modules.extend((0..nv).map(|v| LeftModule::projective(alg, v)));
    modules.push(LeftModule::direct_sum(alg, &[&modules[0], &modules[2 * nv - 1]]));
    let mut pairs: Vec<(usize, usize)> =
        (0..modules.len()).flat_map(|i| (0..modules.len()).map(move |j| (i, j))).collect();
    let keep = min_pairs.max(20).min(pairs.len());
    pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    pairs.truncate(keep);
    pairs.sort_unstable();

    let mut report = ValidationReport::new();
    report.extend("", ctx.check_nakayama_shift()?);
    let mut witness = None;
    for x in ctx.classes() {
        let y = ctx.right_adjoint(&x)?;
        let tx = ctx.theta_of(&x);
        let ty = ctx.theta_of(&y);
        let left: Vec<LeftModule> = modules.iter().map(|m| tensor_with_left_module(alg, &tx, m).0).collect();
        let right: Vec<LeftModule> = modules.iter().map(|m| tensor_with_left_module(alg, &ty, m).0).collect();
        for &(i, j) in &pairs {
            let a = hom_space_left(alg, &left[i], &modules[j]).len();
            let b = hom_space_left(alg, &modules[i], &right[j]).len();
            if a != b && witness.is_none() {
                witness = Some(format!("{} ⊣ {}: {a} ≠ {b} on pair ({i}, {j})", ctx.label(&x), ctx.label(&y)));
            }
        }
    }
    report.record(format!("hom dimensions match over {} module pairs", pairs.len()), witness);
    Ok(report)
}

/// For every nonzero basis 2-morphism `f` between the generating classes,
/// `id_{A⊗A} ⊗ f ⊗ id_{A⊗A}` restricts to an invertible map between copies of
/// some `A e_a ⊗ e_b A`, through explicit inclusion and coordinate retraction.
pub fn check_h0_simplicity(ctx: &CellContext) -> Result<ValidationReport> {
    let alg = &ctx.algebra;
    let cat = ctx.skew();
    let d = alg.dim();
    let regular = Bimodule::regular(alg);
    let mut objects = vec![SymClass::Identity];
    objects.extend(ctx.group.elements().map(SymClass::proj));
    let images: Vec<_> = objects.iter().map(|c| (ctx.skew_object(c), cat.theta(&ctx.skew_object(c)))).collect();
    let sandwiched: Vec<Bimodule> = images
        .iter()
        .map(|(_, t)| Bimodule::tensor_over_k(alg, &Bimodule::tensor_over_k(alg, &regular, &t.image), &regular))
        .collect();

    let mut report = ValidationReport::new();
    let mut tested = 0;
    let mut witness = None;
    for (xi, (x, tx)) in images.iter().enumerate() {
        for (yi, (y, ty)) in images.iter().enumerate() {
            for b in cat.hom_basis(&x.carrier, &y.carrier) {
                let f = cat.compose(&y.idem, &cat.compose(&b, &x.idem));
                let map = ty.retraction.mul(&cat.theta_map(&f)).mul(&tx.inclusion);
                if map.is_zero() {
                    continue;
                }
                tested += 1;
                let s = Mat::identity(alg.field(), d).kron(&map).kron(&Mat::identity(alg.field(), d));
                if !sandwiched[xi].is_morphism(&sandwiched[yi], &s) {
                    witness.get_or_insert_with(|| "sandwich is not a bimodule map".to_string());
                    continue;
                }
                if split_identity(ctx, &sandwiched[xi], &sandwiched[yi], &map, &s).is_none() {
                    witness.get_or_insert_with(|| {
                        format!("no split identity for a map {} → {}", ctx.label(&objects[xi]), ctx.label(&objects[yi]))
                    });
                }
            }
        }
    }
    report.record(format!("every nonzero 2-morphism sandwiches to a split identity ({tested} maps)"), witness);
    Ok(report)
}

/// Finds `(a, b, i, j)` with `π ∘ s ∘ ι` invertible, where `ι` includes
/// `A e_a ⊗ m_j ⊗ e_b A` and `π` reads the coefficient of `n_i`.
fn split_identity(ctx: &CellContext, src: &Bimodule, dst: &Bimodule, map: &Mat, s: &Mat) -> Option<(usize, usize)> {
    let alg = &ctx.algebra;
    let f = alg.field();
    let d = alg.dim();
    let (dn, dm) = (map.rows(), map.cols());
    for a in 0..alg.num_vertices() {
        for b in 0..alg.num_vertices() {
            let free = Bimodule::free(alg, a, b);
            let left = alg.left_projective_basis(a);
            let right = alg.right_projective_basis(b);
            for j in 0..dm {
                let cols: Vec<usize> =
                    left.iter().flat_map(|&p| right.iter().map(move |&q| (p * dm + j) * d + q)).collect();
                let incl = Mat::identity(f, src.dim()).select_columns(&cols);
                if !free.is_morphism(src, &incl) {
                    continue;
                }
                let image = s.mul(&incl);
                for i in 0..dn {
                    let rows: Vec<usize> =
                        left.iter().flat_map(|&p| right.iter().map(move |&q| (p * dn + i) * d + q)).collect();
                    let proj = Mat::identity(f, dst.dim()).select_columns(&rows).transpose();
                    if proj.mul(&image).is_invertible() && dst.is_morphism(&free, &proj) {
                        return Some((i, j));
                    }
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct VecGReport {
    /// `fusion[g][h]` is the class of `S00(g) ⊗ S00(h)`.
    pub fusion: Vec<Vec<usize>>,
    pub report: ValidationReport,
}

/// Fusion of the `A_0`-classes is the group law, and their endomorphism
/// algebras are one-dimensional.
pub fn check_vec_g(ctx: &CellContext) -> Result<VecGReport> {
    if ctx.config != Config::Tilde {
        return Err(Error::DimensionMismatch("the A_0 classes need the tilde configuration".into()));
    }
    let cat = ctx.skew();
    let grp = &ctx.group;
    let (alg, act) = (&ctx.algebra, &ctx.action);
    let class = |g| SymClass::Proj { left: Side::Zero, right: Side::Zero, g };
    let reps: Vec<Bimodule> = grp.elements().map(|g| ctx.representative(&class(g))).collect();
    let thetas: Vec<Bimodule> = reps.iter().map(|m| theta_carrier(alg, act, grp, m)).collect();
    let mut report = ValidationReport::new();
    let mut fusion = vec![vec![usize::MAX; grp.order()]; grp.order()];
    let mut witness = None;
    for g in grp.elements() {
        for h in grp.elements() {
            let t = cat.tensor_carrier(&reps[g], &reps[h]);
            let tt = theta_carrier(alg, act, grp, &t.object.carrier);
            if let Some(c) = thetas.iter().position(|x| x.dim() == tt.dim() && find_isomorphism(alg, &tt, x).is_some()) {
                fusion[g][h] = c;
            }
            if fusion[g][h] != grp.mul(g, h) && witness.is_none() {
                witness = Some(format!("{} ⊗ {}", grp.name(g), grp.name(h)));
            }
        }
    }
    report.record("fusion rule is the group law", witness);
    let big = grp.elements().find(|&g| cat.hom_basis(&reps[g], &reps[g]).len() != 1);
    report.record("endomorphism algebras are one-dimensional", big.map(|g| format!("at {}", grp.name(g))));
    Ok(VecGReport { fusion, report })
}
