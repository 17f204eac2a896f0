//! Group actions on algebras by automorphisms.

use super::{Algebra, GroupData};
use crate::matrix::Mat;
use crate::report::ValidationReport;

/// One automorphism matrix per group element, in the basis of the algebra.
#[derive(Clone, Debug)]
pub struct AlgebraAction {
    matrices: Vec<Mat>,
}

impl AlgebraAction {
    pub fn new(matrices: Vec<Mat>) -> Self {
        Self { matrices }
    }

    pub fn trivial(alg: &Algebra, order: usize) -> Self {
        Self { matrices: vec![Mat::identity(alg.field(), alg.dim()); order] }
    }

    /// Extends images of generators (vertices, then arrows) multiplicatively.
    pub fn from_generator_images(alg: &Algebra, images: &[Vec<Vec<u64>>]) -> Self {
        let matrices = images
            .iter()
            .map(|gen_images| {
                let cols: Vec<Vec<u64>> = (0..alg.dim())
                    .map(|i| {
                        let fac = alg.factorization(i);
                        let mut x = gen_images[fac[0]].clone();
                        for &g in &fac[1..] {
                            x = alg.mul(&gen_images[g], &x);
                        }
                        x
                    })
                    .collect();
                Mat::from_columns(alg.field(), alg.dim(), &cols)
            })
            .collect();
        Self { matrices }
    }

    pub fn matrix(&self, g: usize) -> &Mat {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[Mat] {
        &self.matrices
    }

    pub fn order(&self) -> usize {
        self.matrices.len()
    }

    pub fn apply(&self, g: usize, x: &[u64]) -> Vec<u64> {
        self.matrices[g].mul_vec(x)
    }

    /// Image of vertex `v` under `g`, if `g` permutes the vertex idempotents.
    pub fn vertex_image(&self, alg: &Algebra, g: usize, v: usize) -> Option<usize> {
        let img = self.matrices[g].column(alg.vertex_element(v));
        let nz: Vec<usize> = (0..img.len()).filter(|&i| img[i] != 0).collect();
        match nz.as_slice() {
            [i] if img[*i] == 1 && alg.path_length(*i) == 0 => Some(alg.right_vertex(*i)),
            _ => None,
        }
    }
}

/// Validates the automorphism, composition and idempotent-relabeling laws.
///
/// With `labels`, vertex `v` is read as the idempotent `e_g` of copy `c`
/// where `labels[v] = (c, g)`, and `h` must send it to `e_{g h⁻¹}` in the same
/// copy. This makes the action free and transitive on each copy.
pub fn check_action(
    alg: &Algebra,
    grp: &GroupData,
    act: &AlgebraAction,
    labels: Option<&[(usize, usize)]>,
) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let n = alg.dim();
    if act.order() != grp.order() {
        rep.fail("action size", format!("{} matrices for a group of order {}", act.order(), grp.order()));
        return rep;
    }
    if let Some(g) = act.matrices.iter().position(|m| m.rows() != n || m.cols() != n) {
        rep.fail("matrix shape", format!("matrix for {} is not {n}x{n}", grp.name(g)));
        return rep;
    }
    let one = alg.one();
    for g in grp.elements() {
        let m = act.matrix(g);
        let mut witness = None;
        'outer: for a in 0..n {
            let ga = m.column(a);
            for b in 0..n {
                let lhs = m.mul_vec(&alg.mul(&alg.unit_vector(a), &alg.unit_vector(b)));
                let rhs = alg.mul(&ga, &m.column(b));
                if lhs != rhs {
                    witness = Some(format!(
                        "automorphism violated at ({}, {}) for {}",
                        alg.basis_label(a),
                        alg.basis_label(b),
                        grp.name(g)
                    ));
                    break 'outer;
                }
            }
        }
        rep.record(format!("multiplicative[{}]", grp.name(g)), witness);
        rep.record(
            format!("unital[{}]", grp.name(g)),
            (m.mul_vec(&one) != one).then(|| format!("{} does not fix 1", grp.name(g))),
        );
    }
    let mut comp = None;
    'comp: for g in grp.elements() {
        for h in grp.elements() {
            if act.matrix(g).mul(act.matrix(h)) != *act.matrix(grp.mul(g, h)) {
                comp = Some(format!("matrix({})·matrix({}) ≠ matrix of product", grp.name(g), grp.name(h)));
                break 'comp;
            }
        }
    }
    rep.record("composition", comp);
    if let Some(labels) = labels {
        let mut bad = None;
        'lab: for h in grp.elements() {
            for v in 0..alg.num_vertices() {
                let (copy, g) = labels[v];
                let expected_label = grp.mul(g, grp.inv(h));
                let ok = act
                    .vertex_image(alg, h, v)
                    .is_some_and(|w| labels[w] == (copy, expected_label));
                if !ok {
                    bad = Some(format!(
                        "{} does not send e_{} to e_{}",
                        grp.name(h),
                        alg.quiver().vertices()[v],
                        grp.name(expected_label)
                    ));
                    break 'lab;
                }
            }
        }
        rep.record("regular on idempotents", bad);
    }
    rep
}
