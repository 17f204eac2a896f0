//! Krull–Schmidt decomposition by Fitting splitting.
//!
//! An endomorphism `x` with two eigenvalues, or with one eigenvalue `λ` and
//! `x − λ` not nilpotent, splits the module as `ker (x−λ)^n ⊕ im (x−λ)^n`.
//! When no sampled endomorphism splits, locality of the endomorphism algebra
//! is certified by exhibiting `End = k·1 ⊕ J` with `J` a nilpotent ideal.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::hom::{intertwiners, random_combination, Intertwining};
use super::{adapted_basis, Bimodule};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Mat;
use crate::poly;
use crate::sparse::Echelon;

/// A bimodule with extra operators its endomorphisms must commute with.
///
/// Extra operators model additional structure, for instance the relabeling
/// maps of an equivariant bimodule.
#[derive(Clone, Debug)]
pub(crate) struct Rep {
    pub bimod: Bimodule,
    pub extra: Vec<Mat>,
}

impl Rep {
    pub fn plain(bimod: Bimodule) -> Self {
        Self { bimod, extra: Vec::new() }
    }

    pub fn restrict(&self, alg: &Algebra, span: &Mat) -> (Rep, Mat) {
        let basis = adapted_basis(self.bimod.blocks(), span);
        let bimod = self.bimod.transport(alg, &basis);
        let c = if basis.cols() > 0 { basis.left_inverse() } else { None };
        let extra = match c {
            Some(c) => self.extra.iter().map(|x| c.mul(&x.mul(&basis))).collect(),
            None => self.extra.iter().map(|_| Mat::zeros(alg.field(), 0, 0)).collect(),
        };
        (Rep { bimod, extra }, basis)
    }
}

pub(crate) fn rep_homs(alg: &Algebra, a: &Rep, b: &Rep) -> Vec<Mat> {
    let nv = alg.num_vertices();
    let mut conds = Vec::new();
    for g in nv..alg.num_generators() {
        conds.push(Intertwining { src: &a.bimod.left_generators()[g], dst: &b.bimod.left_generators()[g] });
        conds.push(Intertwining { src: &a.bimod.right_generators()[g], dst: &b.bimod.right_generators()[g] });
    }
    for (x, y) in a.extra.iter().zip(&b.extra) {
        conds.push(Intertwining { src: x, dst: y });
    }
    intertwiners(alg.field(), a.bimod.blocks(), b.bimod.blocks(), &conds)
}

/// Splits along the Fitting decomposition of `x` if it is not scalar plus nilpotent.
///
/// Returns `(kernel, image)` spans of `(x − λ)^n`.
pub fn fitting_split(x: &Mat) -> Option<(Mat, Mat)> {
    let f = x.field();
    let n = x.rows();
    let roots = poly::roots(f, &x.charpoly());
    let lambda = *roots.first()?;
    let y = x.sub(&Mat::scalar(f, n, lambda));
    if roots.len() == 1 && y.is_nilpotent() {
        return None;
    }
    let yn = y.pow(n as u64);
    let ker = yn.nullspace();
    let im = yn.column_basis();
    (ker.cols() > 0 && im.cols() > 0).then_some((ker, im))
}

/// Certifies that the span of `basis` (containing the identity) is a local
/// algebra with residue field `k`. Returns the nilpotent ideal `J` on success.
pub fn certify_local(field: PrimeField, basis: &[Mat]) -> Option<Vec<Mat>> {
    let Some(first) = basis.first() else { return Some(Vec::new()) };
    let n = first.rows();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut j = Vec::new();
    for b in basis {
        let roots = poly::roots(field, &b.charpoly());
        let lambda = match roots.as_slice() {
            [l] => *l,
            _ => return None,
        };
        let y = b.sub(&Mat::scalar(field, n, lambda));
        if !y.is_nilpotent() {
            return None;
        }
        j.push(y);
    }
    let flat = |m: &Mat| -> Vec<(usize, u64)> {
        (0..n * n).filter_map(|k| {
            let v = m.get(k / n, k % n);
            (v != 0).then_some((k, v))
        }).collect()
    };
    let mut span = Echelon::new(field, n * n);
    let mut jbasis = Vec::new();
    for y in &j {
        if span.insert(&flat(y)) {
            jbasis.push(y.clone());
        }
    }
    // k·1 ⊕ J must be everything.
    if span.contains(&flat(&Mat::identity(field, n))) || jbasis.len() + 1 != basis.len() {
        return None;
    }
    // J·J ⊆ J, and the powers of J reach zero.
    let mut power = jbasis.clone();
    for _ in 0..=n {
        let mut next = Echelon::new(field, n * n);
        let mut next_basis = Vec::new();
        for a in &power {
            for b in &jbasis {
                let p = a.mul(b);
                if !span.contains(&flat(&p)) {
                    return None;
                }
                if next.insert(&flat(&p)) {
                    next_basis.push(p);
                }
            }
        }
        if next_basis.is_empty() {
            return Some(jbasis);
        }
        power = next_basis;
    }
    None
}

fn candidates(field: PrimeField, basis: &[Mat], seed: u64) -> impl Iterator<Item = Mat> + '_ {
    let pairs = basis.len().min(6);
    let singles = basis.iter().cloned();
    let sums = (0..pairs).flat_map(move |i| (i + 1..pairs).map(move |j| basis[i].add(&basis[j])));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let randoms = (0..12).map(move |_| random_combination(field, basis, &mut rng));
    singles.chain(sums).chain(randoms)
}

/// Splits `rep` into indecomposables, returning each with its inclusion map.
pub(crate) fn split_rep(alg: &Algebra, rep: &Rep) -> Result<Vec<(Rep, Mat)>> {
    let f = alg.field();
    let mut out = Vec::new();
    let mut stack = vec![(rep.clone(), Mat::identity(f, rep.bimod.dim()))];
    while let Some((r, incl)) = stack.pop() {
        if r.bimod.dim() == 0 {
            continue;
        }
        let ends = rep_homs(alg, &r, &r);
        let mut split = None;
        for x in candidates(f, &ends, 0xdec0) {
            if let Some(s) = fitting_split(&x) {
                split = Some(s);
                break;
            }
        }
        match split {
            Some((ker, im)) => {
                let (a, ia) = r.restrict(alg, &ker);
                let (b, ib) = r.restrict(alg, &im);
                stack.push((b, incl.mul(&ib)));
                stack.push((a, incl.mul(&ia)));
            }
            None => {
                if certify_local(f, &ends).is_none() {
                    return Err(Error::NonSplitField(format!(
                        "endomorphism algebra of a {}-dimensional summand neither splits nor is local",
                        r.bimod.dim()
                    )));
                }
                out.push((r, incl));
            }
        }
    }
    Ok(out)
}

/// Iso test for indecomposables: some `g∘f` is not nilpotent.
pub(crate) fn indecomposables_iso(alg: &Algebra, a: &Rep, b: &Rep) -> Option<Mat> {
    if a.bimod.dim() != b.bimod.dim() || a.bimod.dimension_matrix(alg) != b.bimod.dimension_matrix(alg) {
        return None;
    }
    let fs = rep_homs(alg, a, b);
    if fs.is_empty() {
        return None;
    }
    let gs = rep_homs(alg, b, a);
    for f in &fs {
        for g in &gs {
            if !g.mul(f).is_nilpotent() {
                return Some(f.clone());
            }
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Bimodule,
    pub multiplicity: usize,
    /// Inclusions `module → M`, one per copy.
    pub inclusions: Vec<Mat>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
}

impl Decomposition {
    pub fn total_multiplicity(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }
}

pub(crate) struct RepClass {
    pub rep: Rep,
    pub copies: Vec<(Mat, Mat)>,
}

/// Groups indecomposable pieces into isomorphism classes. Each copy stores
/// its inclusion and an isomorphism from the class representative.
pub(crate) fn group_classes(alg: &Algebra, pieces: Vec<(Rep, Mat)>) -> Vec<RepClass> {
    let mut classes: Vec<RepClass> = Vec::new();
    for (r, incl) in pieces {
        let hit = classes.iter().position(|c| c.rep.bimod.dim() == r.bimod.dim())
            .and_then(|_| {
                classes.iter().enumerate().find_map(|(k, c)| indecomposables_iso(alg, &c.rep, &r).map(|iso| (k, iso)))
            });
        match hit {
            Some((k, iso)) => classes[k].copies.push((incl, iso)),
            None => {
                let id = Mat::identity(alg.field(), r.bimod.dim());
                classes.push(RepClass { rep: r, copies: vec![(incl, id)] });
            }
        }
    }
    classes
}

/// Krull–Schmidt decomposition of a bimodule.
pub fn decompose(alg: &Algebra, m: &Bimodule) -> Result<Decomposition> {
    let pieces = split_rep(alg, &Rep::plain(m.clone()))?;
    let classes = group_classes(alg, pieces);
    Ok(Decomposition {
        summands: classes
            .into_iter()
            .map(|c| Summand {
                module: c.rep.bimod,
                multiplicity: c.copies.len(),
                inclusions: c.copies.iter().map(|(incl, iso)| incl.mul(iso)).collect(),
            })
            .collect(),
    })
}

/// Builds `M → N` from matching decompositions, or `None` if they differ.
pub(crate) fn isomorphism_via_decomposition(alg: &Algebra, m: &Bimodule, n: &Bimodule) -> Option<Mat> {
    let dm = decompose(alg, m).ok()?;
    let dn = decompose(alg, n).ok()?;
    if dm.summands.len() != dn.summands.len() {
        return None;
    }
    // Columns of `src` are images of summand bases in M; `dst` likewise in N.
    let mut src_cols = Vec::new();
    let mut dst_cols = Vec::new();
    let mut used = vec![false; dn.summands.len()];
    for s in &dm.summands {
        let a = Rep::plain(s.module.clone());
        let (k, iso) = dn.summands.iter().enumerate().find_map(|(k, t)| {
            if used[k] || t.multiplicity != s.multiplicity {
                return None;
            }
            indecomposables_iso(alg, &a, &Rep::plain(t.module.clone())).map(|iso| (k, iso))
        })?;
        used[k] = true;
        for (im, in_) in s.inclusions.iter().zip(&dn.summands[k].inclusions) {
            src_cols.push(im.clone());
            dst_cols.push(in_.mul(&iso));
        }
    }
    let cat = |v: &[Mat]| v.iter().skip(1).fold(v[0].clone(), |acc, x| acc.hstack(x));
    let p = cat(&src_cols);
    let q = cat(&dst_cols);
    Some(q.mul(&p.inverse()?))
}

/// Radical of a matrix algebra by the trace-form criterion.
///
/// Valid when the characteristic exceeds the algebra's dimension; returns the
/// radical as a list of matrices spanning it.
pub fn dickson_radical(field: PrimeField, basis: &[Mat]) -> Result<Vec<Mat>> {
    let d = basis.len();
    if d == 0 {
        return Ok(Vec::new());
    }
    if field.characteristic() as usize <= d {
        return Err(Error::CharTooSmall { p: field.characteristic(), dim: d });
    }
    let coords = structure_constants(field, basis)?;
    // tr L_{b_k} = Σ_j c_{k j}^j
    let tr_l: Vec<u64> = (0..d)
        .map(|k| (0..d).fold(0, |acc, j| field.add(acc, coords[k][j][j])))
        .collect();
    let gram = Mat::from_fn(field, d, d, |i, j| {
        (0..d).fold(0, |acc, k| field.add(acc, field.mul(coords[i][j][k], tr_l[k])))
    });
    let null = gram.transpose().nullspace();
    Ok((0..null.cols())
        .map(|c| {
            let mut m = Mat::zeros(field, basis[0].rows(), basis[0].cols());
            for (i, b) in basis.iter().enumerate() {
                m.add_scaled(b, null.get(i, c));
            }
            m
        })
        .collect())
}

/// `c[i][j][k]` with `b_i b_j = Σ_k c[i][j][k] b_k`.
pub(crate) fn structure_constants(field: PrimeField, basis: &[Mat]) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let (r, c) = (basis[0].rows(), basis[0].cols());
    let flat = Mat::from_fn(field, r * c, d, |k, i| basis[i].get(k / c, k % c));
    let left = flat
        .left_inverse()
        .ok_or_else(|| Error::DimensionMismatch("algebra basis is not independent".into()))?;
    let mut out = vec![vec![vec![0; d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            let p = basis[i].mul(&basis[j]);
            let v: Vec<u64> = (0..r * c).map(|k| p.get(k / c, k % c)).collect();
            let x = left.mul_vec(&v);
            if flat.mul_vec(&x) != v {
                return Err(Error::DimensionMismatch("span is not closed under products".into()));
            }
            out[i][j] = x;
        }
    }
    Ok(out)
}

/// Iterates `e ↦ 3e² − 2e³` until idempotent.
pub fn lift_idempotent(e: &Mat) -> Mat {
    let f = e.field();
    let mut x = e.clone();
    for _ in 0..64 {
        let x2 = x.mul(&x);
        if x2 == x {
            return x;
        }
        let x3 = x2.mul(&x);
        x = x2.scale(3).sub(&x3.scale(2));
    }
    let _ = f;
    x
}
