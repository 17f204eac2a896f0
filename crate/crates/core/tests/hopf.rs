mod common;

use hcell_core::algebra::GroupData;
use hcell_core::bimodule::{find_isomorphism, Bimodule, LeftModule};
use hcell_core::hopf::{
    arrow_vector, check_axioms, check_basis_maps, covering_quiver, examples, gamma_functor, hopf_structure,
    trivial_module, verify_gamma_monoidal, HopfData,
};
use hcell_core::Error;

/// `x ⊗ y` in the basis `b_p ⊗ b_q` at index `p·d + q`.
fn tensor(hd: &HopfData, x: &[u64], y: &[u64]) -> Vec<u64> {
    let f = hd.algebra.field();
    let d = hd.dim();
    let mut out = vec![0; d * d];
    for (p, &a) in x.iter().enumerate() {
        for (q, &b) in y.iter().enumerate() {
            out[p * d + q] = f.add(out[p * d + q], f.mul(a, b));
        }
    }
    out
}

fn add_into(hd: &HopfData, acc: &mut [u64], v: &[u64]) {
    let f = hd.algebra.field();
    for (a, &b) in acc.iter_mut().zip(v) {
        *a = f.add(*a, b);
    }
}

fn vertex(hd: &HopfData, g: usize) -> Vec<u64> {
    hd.algebra.unit_vector(hd.algebra.vertex_element(g))
}

fn arrow(hd: &HopfData, a: usize) -> Vec<u64> {
    hd.algebra.unit_vector(hd.algebra.arrow_element(a))
}

/// `h·x` and `x·h` on arrows, read off the bimodule tables.
fn left_act(hd: &HopfData, h: usize, a: usize) -> Vec<u64> {
    arrow_vector(&hd.algebra, &hd.weights.left[h][a])
}

fn right_act_vec(hd: &HopfData, x: &[u64], h: usize) -> Vec<u64> {
    let f = hd.algebra.field();
    let mut out = hd.algebra.zero();
    for a in 0..hd.weights.num_arrows() {
        let c = x[hd.algebra.arrow_element(a)];
        if c != 0 {
            let img = arrow_vector(&hd.algebra, &hd.weights.right[h][a]);
            for (o, &v) in out.iter_mut().zip(&img) {
                *o = f.add(*o, f.mul(c, v));
            }
        }
    }
    out
}

#[test]
fn vertex_structure_maps() {
    for hd in [common::sweedler(), common::taft3(), common::function_algebra(7, GroupData::symmetric3())] {
        let grp = hd.group().clone();
        for g in grp.elements() {
            let eg = vertex(&hd, g);
            assert_eq!(hd.counit_of(&eg), u64::from(g == grp.identity()));
            assert_eq!(hd.antipode.mul_vec(&eg), vertex(&hd, grp.inv(g)));
            let mut expected = vec![0; hd.dim() * hd.dim()];
            for h in grp.elements() {
                add_into(&hd, &mut expected, &tensor(&hd, &vertex(&hd, grp.mul(g, h)), &vertex(&hd, grp.inv(h))));
            }
            assert_eq!(hd.coproduct(&eg), expected, "Δ(e_{})", grp.name(g));
        }
    }
}

#[test]
fn arrow_structure_maps() {
    for hd in [common::sweedler(), common::taft3()] {
        let grp = hd.group().clone();
        let f = hd.algebra.field();
        for a in 0..hd.weights.num_arrows() {
            let (i, g) = hd.weights.arrow_label(a);
            let x = arrow(&hd, a);
            assert_eq!(hd.counit_of(&x), 0);

            let gi = grp.inv(g);
            let h = grp.mul(hd.weights.weights[i], gi);
            let s: Vec<u64> = right_act_vec(&hd, &left_act(&hd, h, a), gi).iter().map(|&v| f.neg(v)).collect();
            assert_eq!(hd.antipode.mul_vec(&x), s, "S({})", hd.algebra.basis_label(hd.algebra.arrow_element(a)));

            let mut expected = vec![0; hd.dim() * hd.dim()];
            for h in grp.elements() {
                add_into(&hd, &mut expected, &tensor(&hd, &left_act(&hd, h, a), &vertex(&hd, h)));
                add_into(&hd, &mut expected, &tensor(&hd, &vertex(&hd, h), &right_act_vec(&hd, &x, h)));
            }
            assert_eq!(hd.coproduct(&x), expected);
        }
    }
}

#[test]
fn antipode_sandwich() {
    // S(a_{i,g}) lies in e_g A e_{g w_i⁻¹}.
    let hd = common::taft3();
    let grp = hd.group().clone();
    let alg = &hd.algebra;
    for a in 0..hd.weights.num_arrows() {
        let (i, g) = hd.weights.arrow_label(a);
        let s = hd.antipode.mul_vec(&arrow(&hd, a));
        let right = grp.mul(g, grp.inv(hd.weights.weights[i]));
        assert_eq!(alg.mul(&alg.mul(&vertex(&hd, g), &s), &vertex(&hd, right)), s);
        assert_ne!(s, alg.zero());
    }
}

#[test]
fn axioms_hold_on_examples() {
    for hd in [common::trivial(), common::sweedler(), common::taft3()] {
        let report = check_axioms(&hd);
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn wrong_antipode_sign_fails() {
    let mut ex = examples::sweedler(common::field(257)).unwrap();
    ex.weights.antipode_sign = 1;
    let (_, report) = hopf_structure(&ex.algebra, &ex.weights).unwrap();
    assert!(!report.passed());
    assert!(report.failures().any(|c| c.name.contains("antipode")));
}

#[test]
fn weights_must_be_closed_under_conjugation() {
    let s3 = GroupData::symmetric3();
    let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
    assert!(matches!(covering_quiver(&s3, &[t]), Err(Error::WeightNotClosed(_))));
    assert!(matches!(covering_quiver(&s3, &[17]), Err(Error::WeightNotClosed(_))));
    let class: Vec<usize> = s3.elements().filter(|&g| s3.element_order(g) == 2).collect();
    assert_eq!(covering_quiver(&s3, &class).unwrap().num_arrows(), 18);
}

#[test]
fn basis_maps_are_inverse() {
    for hd in [common::sweedler(), common::taft3()] {
        let maps = check_basis_maps(&hd);
        assert!(maps.report.passed(), "{:?}", maps.report.failures().collect::<Vec<_>>());
        assert!(maps.f.mul(&maps.g).is_identity());
    }
}

#[test]
fn gamma_on_regular_and_trivial() {
    for hd in [common::sweedler(), common::taft3()] {
        let alg = &hd.algebra;
        let d = hd.dim();
        assert_eq!(gamma_functor(&hd, &LeftModule::regular(alg)).dim(), d * d);
        let unit = gamma_functor(&hd, &trivial_module(&hd));
        assert_eq!(unit.dim(), d);
        assert!(find_isomorphism(alg, &unit.bimodule, &Bimodule::regular(alg)).is_some());
    }
}

#[test]
fn gamma_is_monoidal() {
    for hd in [common::sweedler(), common::taft3()] {
        let report = verify_gamma_monoidal(&hd);
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }
}
