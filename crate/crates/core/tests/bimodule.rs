mod common;

use hcell_core::bimodule::{
    decompose, equivariant_structure, find_isomorphism, hom_space, tensor_over_a, tensor_with_left_module, Bimodule,
    LeftModule,
};
use hcell_core::Mat;
use proptest::prelude::*;

/// `dim Z(A)`: the kernel of `x ↦ (x·b − b·x)_b` over all basis elements `b`.
fn center_dim(alg: &hcell_core::algebra::Algebra) -> usize {
    let d = alg.dim();
    let mut stacked = Mat::zeros(alg.field(), 0, d);
    for i in 0..d {
        let b = alg.unit_vector(i);
        stacked = stacked.vstack(&alg.right_mult(&b).sub(&alg.left_mult(&b)));
    }
    d - stacked.rank()
}

#[test]
fn endomorphisms_of_the_regular_bimodule_are_the_center() {
    for hd in [common::trivial(), common::sweedler(), common::taft3()] {
        let alg = &hd.algebra;
        let a = Bimodule::regular(alg);
        assert_eq!(hom_space(alg, &a, &a).len(), center_dim(alg));
    }
}

#[test]
fn free_bimodule_dimension() {
    let hd = common::taft3();
    let alg = &hd.algebra;
    let blocks = alg.block_dims();
    let col = |x: usize| (0..3).map(|t| blocks[t][x]).sum::<usize>();
    let row = |y: usize| blocks[y].iter().sum::<usize>();
    for x in 0..3 {
        for y in 0..3 {
            let m = Bimodule::free(alg, x, y);
            assert_eq!(m.dim(), col(x) * row(y));
            assert!(m.validate(alg).is_none());
        }
    }
}

#[test]
fn regular_bimodule_is_a_unit() {
    let hd = common::sweedler();
    let alg = &hd.algebra;
    let a = Bimodule::regular(alg);
    for m in [Bimodule::free(alg, 0, 1), a.clone(), Bimodule::direct_sum(alg, &[&a, &Bimodule::free(alg, 1, 1)])] {
        let (left, _) = tensor_over_a(alg, &a, &m);
        let (right, _) = tensor_over_a(alg, &m, &a);
        assert!(find_isomorphism(alg, &left, &m).is_some());
        assert!(find_isomorphism(alg, &right, &m).is_some());
    }
    let p = LeftModule::projective(alg, 1);
    let (q, _) = tensor_with_left_module(alg, &a, &p);
    assert_eq!(q.dim(), p.dim());
}

#[test]
fn twisting_moves_free_bimodules() {
    // In M^g the idempotent e_v acts as e_{v g⁻¹}, so the generator of
    // A e_x ⊗ e_y A sits at (xg, yg).
    let hd = common::taft3();
    let alg = &hd.algebra;
    let grp = hd.group();
    for g in grp.elements() {
        for x in 0..3 {
            for y in 0..3 {
                let tw = Bimodule::free(alg, x, y).twist(alg, &hd.action, g);
                let target = Bimodule::free(alg, grp.mul(x, g), grp.mul(y, g));
                assert!(find_isomorphism(alg, &tw, &target).is_some(), "g={g} x={x} y={y}");
            }
        }
    }
}

#[test]
fn twists_compose() {
    let hd = common::taft3();
    let alg = &hd.algebra;
    let grp = hd.group();
    let m = Bimodule::direct_sum(alg, &[&Bimodule::regular(alg), &Bimodule::free(alg, 0, 2)]);
    for g in grp.elements() {
        for h in grp.elements() {
            let twice = m.twist(alg, &hd.action, g).twist(alg, &hd.action, h);
            let once = m.twist(alg, &hd.action, grp.mul(g, h));
            assert!(find_isomorphism(alg, &twice, &once).is_some());
        }
    }
}

#[test]
fn outer_square_splits_into_free_pieces() {
    let hd = common::sweedler();
    let alg = &hd.algebra;
    let a = Bimodule::regular(alg);
    let sq = Bimodule::tensor_over_k(alg, &a, &a);
    assert_eq!(sq.dim(), 16);
    let dec = decompose(alg, &sq).unwrap();
    assert_eq!(dec.summands.len(), 4);
    assert!(dec.summands.iter().all(|s| s.multiplicity == 1 && s.module.dim() == 4));
    for x in 0..2 {
        for y in 0..2 {
            let free = Bimodule::free(alg, x, y);
            assert_eq!(dec.summands.iter().filter(|s| find_isomorphism(alg, &s.module, &free).is_some()).count(), 1);
        }
    }
}

#[test]
fn regular_bimodule_is_indecomposable_and_equivariant() {
    let hd = common::taft3();
    let alg = &hd.algebra;
    let a = Bimodule::regular(alg);
    let dec = decompose(alg, &a).unwrap();
    assert_eq!(dec.total_multiplicity(), 1);
    let eq = equivariant_structure(alg, &hd.action, hd.group(), &a).unwrap().unwrap();
    assert!(eq.verify(alg, &hd.action, hd.group(), &a).passed());
    // A free bimodule moves under every nontrivial twist.
    assert!(equivariant_structure(alg, &hd.action, hd.group(), &Bimodule::free(alg, 0, 0)).unwrap().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn free_tensor_formula(x in 0usize..3, y in 0usize..3, z in 0usize..3, w in 0usize..3) {
        // (A e_x ⊗ e_y A) ⊗_A (A e_z ⊗ e_w A) ≅ (A e_x ⊗ e_w A)^{dim e_y A e_z}
        let hd = common::taft3();
        let alg = &hd.algebra;
        let (t, _) = tensor_over_a(alg, &Bimodule::free(alg, x, y), &Bimodule::free(alg, z, w));
        let k = alg.block_dims()[y][z];
        let free = Bimodule::free(alg, x, w);
        prop_assert_eq!(t.dim(), k * free.dim());
        let parts: Vec<&Bimodule> = std::iter::repeat_n(&free, k).collect();
        let expected = if k == 0 { Bimodule::zero(alg) } else { Bimodule::direct_sum(alg, &parts) };
        prop_assert!(find_isomorphism(alg, &t, &expected).is_some());
    }

    #[test]
    fn hom_space_elements_are_morphisms(x in 0usize..2, y in 0usize..2) {
        let hd = common::sweedler();
        let alg = &hd.algebra;
        let m = Bimodule::free(alg, x, y);
        let n = Bimodule::direct_sum(alg, &[&Bimodule::regular(alg), &m]);
        let homs = hom_space(alg, &m, &n);
        prop_assert!(!homs.is_empty());
        for f in &homs {
            prop_assert!(m.is_morphism(&n, f));
        }
    }
}
