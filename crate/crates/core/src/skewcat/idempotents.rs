//! Primitive idempotents of the group algebra of a stabilizer.
//!
//! Abelian subgroups use characters, found by assigning roots of unity to a
//! generating set. Nonabelian ones split the regular representation with the
//! decomposition engine and read off the components of `1`.

use crate::algebra::GroupData;
use crate::bimodule::{group_classes, split_rep, Bimodule, Rep};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Mat;

/// `ε = (1/|H|) Σ_g λ(g)·g` in `k[H]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupIdempotent {
    /// Position in the list, starting at 1; label 1 is the trivial character.
    pub label: usize,
    pub elements: Vec<usize>,
    pub lambda: Vec<u64>,
}

impl GroupIdempotent {
    /// Coefficients `λ(g)/|H|`.
    pub fn coefficients(&self, field: PrimeField) -> Vec<u64> {
        let inv = field.inv(field.from_usize(self.elements.len()));
        self.lambda.iter().map(|&l| field.mul(l, inv)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.lambda.iter().all(|&l| l == 1)
    }
}

/// A complete set of orthogonal primitive idempotents of `k[H]`, trivial first.
pub fn group_idempotents(field: PrimeField, grp: &GroupData, elements: &[usize]) -> Result<Vec<GroupIdempotent>> {
    let n = elements.len();
    if n == 0 || !elements.contains(&grp.identity()) {
        return Err(Error::InvalidGroup("subgroup must contain the identity".into()));
    }
    if elements.iter().any(|&a| elements.iter().any(|&b| !elements.contains(&grp.mul(a, b)))) {
        return Err(Error::InvalidGroup("elements are not closed under multiplication".into()));
    }
    if (n as u64).is_multiple_of(field.characteristic()) {
        return Err(Error::CharTooSmall { p: field.characteristic(), dim: n });
    }
    let abelian = elements.iter().all(|&a| elements.iter().all(|&b| grp.mul(a, b) == grp.mul(b, a)));
    let coefficient_lists = if abelian {
        character_idempotents(field, grp, elements)?
    } else {
        regular_idempotents(field, grp, elements)?
    };
    let scale = field.from_usize(n);
    let mut out: Vec<GroupIdempotent> = coefficient_lists
        .into_iter()
        .map(|c| GroupIdempotent {
            label: 0,
            elements: elements.to_vec(),
            lambda: c.iter().map(|&x| field.mul(x, scale)).collect(),
        })
        .collect();
    out.sort_by_key(|e| !e.is_trivial());
    for (i, e) in out.iter_mut().enumerate() {
        e.label = i + 1;
    }
    check_complete(field, grp, &out)?;
    Ok(out)
}

/// Product in `k[H]`, coefficients indexed like `elements`.
pub(crate) fn convolve(field: PrimeField, grp: &GroupData, elements: &[usize], a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; elements.len()];
    for (i, &x) in elements.iter().enumerate() {
        if a[i] == 0 {
            continue;
        }
        for (j, &y) in elements.iter().enumerate() {
            if b[j] == 0 {
                continue;
            }
            let k = elements.iter().position(|&z| z == grp.mul(x, y)).expect("closed subgroup");
            out[k] = field.add(out[k], field.mul(a[i], b[j]));
        }
    }
    out
}

fn check_complete(field: PrimeField, grp: &GroupData, idems: &[GroupIdempotent]) -> Result<()> {
    let elements = &idems[0].elements;
    let coeffs: Vec<Vec<u64>> = idems.iter().map(|e| e.coefficients(field)).collect();
    let mut total = vec![0; elements.len()];
    for (i, a) in coeffs.iter().enumerate() {
        for (x, &c) in total.iter_mut().zip(a) {
            *x = field.add(*x, c);
        }
        for (j, b) in coeffs.iter().enumerate() {
            let prod = convolve(field, grp, elements, a, b);
            let expected = if i == j { a.clone() } else { vec![0; elements.len()] };
            if prod != expected {
                return Err(Error::NonSplitField(format!("idempotents {} and {} are not orthogonal", i + 1, j + 1)));
            }
        }
    }
    let unit: Vec<u64> = elements.iter().map(|&g| u64::from(g == grp.identity())).collect();
    if total != unit {
        return Err(Error::NonSplitField("idempotents do not sum to 1".into()));
    }
    Ok(())
}

/// `e_χ = (1/|H|) Σ χ(g⁻¹) g` for every character `χ : H → k^×`.
fn character_idempotents(field: PrimeField, grp: &GroupData, elements: &[usize]) -> Result<Vec<Vec<u64>>> {
    let n = elements.len();
    let pos = |g: usize| elements.iter().position(|&x| x == g).expect("closed subgroup");
    let mut gens: Vec<usize> = Vec::new();
    let mut generated = vec![grp.identity()];
    for &g in elements {
        if !generated.contains(&g) {
            gens.push(g);
            generated = closure(grp, &gens);
        }
    }
    let mut roots = Vec::with_capacity(gens.len());
    for &g in &gens {
        let order = grp.element_order(g) as u64;
        let z = field.root_of_unity(order).ok_or_else(|| {
            Error::NonSplitField(format!("no primitive {order}-th root of unity mod {}", field.characteristic()))
        })?;
        roots.push((0..order).map(|j| field.pow(z, j)).collect::<Vec<_>>());
    }

    let mut chars = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<u64> = choice.iter().zip(&roots).map(|(&c, r)| r[c]).collect();
        if let Some(chi) = extend_character(field, grp, elements, &gens, &images) {
            chars.push(chi);
        }
        // Odometer over root choices.
        let mut k = 0;
        while k < choice.len() {
            choice[k] += 1;
            if choice[k] < roots[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
    }
    if chars.len() != n {
        return Err(Error::NonSplitField(format!("found {} characters for a group of order {n}", chars.len())));
    }
    let inv = field.inv(field.from_usize(n));
    Ok(chars
        .into_iter()
        .map(|chi| elements.iter().map(|&g| field.mul(chi[pos(grp.inv(g))], inv)).collect())
        .collect())
}

/// The homomorphism with the given generator images, if well defined.
fn extend_character(
    field: PrimeField,
    grp: &GroupData,
    elements: &[usize],
    gens: &[usize],
    images: &[u64],
) -> Option<Vec<u64>> {
    let pos = |g: usize| elements.iter().position(|&x| x == g).expect("closed subgroup");
    let mut value: Vec<Option<u64>> = vec![None; elements.len()];
    value[pos(grp.identity())] = Some(1);
    let mut queue = vec![grp.identity()];
    while let Some(x) = queue.pop() {
        let vx = value[pos(x)].expect("queued elements have values");
        for (&g, &c) in gens.iter().zip(images) {
            let y = grp.mul(x, g);
            let vy = field.mul(vx, c);
            match value[pos(y)] {
                Some(v) if v != vy => return None,
                Some(_) => {}
                None => {
                    value[pos(y)] = Some(vy);
                    queue.push(y);
                }
            }
        }
    }
    value.into_iter().collect()
}

fn closure(grp: &GroupData, gens: &[usize]) -> Vec<usize> {
    let mut out = vec![grp.identity()];
    let mut i = 0;
    while i < out.len() {
        for &g in gens {
            let y = grp.mul(out[i], g);
            if !out.contains(&y) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// Splits `k[H]` as a left module over itself and returns the components of `1`.
fn regular_idempotents(field: PrimeField, grp: &GroupData, elements: &[usize]) -> Result<Vec<Vec<u64>>> {
    let n = elements.len();
    let pos = |g: usize| elements.iter().position(|&x| x == g).expect("closed subgroup");
    let point = crate::hopf::examples::trivial(field)?.algebra;
    let id = Mat::identity(field, n);
    let carrier = Bimodule::new(&point, vec![id.clone()], vec![id])?;
    let left_mult: Vec<Mat> = elements
        .iter()
        .map(|&h| {
            let mut m = Mat::zeros(field, n, n);
            for (j, &g) in elements.iter().enumerate() {
                m.set(pos(grp.mul(h, g)), j, 1);
            }
            m
        })
        .collect();
    let pieces = split_rep(&point, &Rep { bimod: carrier, extra: left_mult })?;

    // Over a splitting field each simple appears as often as its dimension.
    for class in group_classes(&point, pieces.clone()) {
        if class.copies.len() != class.rep.bimod.dim() {
            return Err(Error::NonSplitField(format!(
                "group algebra of order {n} does not split mod {}",
                field.characteristic()
            )));
        }
    }
    let incl = pieces.iter().skip(1).fold(pieces[0].1.clone(), |acc, (_, m)| acc.hstack(m));
    let coords = incl
        .inverse()
        .ok_or_else(|| Error::DimensionMismatch("summands do not span the group algebra".into()))?
        .mul_vec(&(0..n).map(|i| u64::from(elements[i] == grp.identity())).collect::<Vec<_>>());
    let mut out = Vec::with_capacity(pieces.len());
    let mut offset = 0;
    for (_, m) in &pieces {
        let part = &coords[offset..offset + m.cols()];
        out.push(m.mul_vec(part));
        offset += m.cols();
    }
    Ok(out)
}
