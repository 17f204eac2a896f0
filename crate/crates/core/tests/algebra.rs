mod common;

use hcell_core::algebra::{build_algebra, is_self_injective, nakayama_permutation, AlgebraPresentation, GroupData, Path, Quiver, Arrow};
use hcell_core::hopf::examples;
use hcell_core::Error;
use proptest::prelude::*;

/// End vertex of a path, walked arrow by arrow.
fn end_of(q: &Quiver, p: &Path) -> usize {
    p.arrows.iter().fold(p.source, |v, &a| {
        assert_eq!(q.arrows()[a].source, v, "path is not composable");
        q.arrows()[a].target
    })
}

/// Paths of length below `n` in a quiver, counted by walking arrows.
fn count_short_paths(q: &Quiver, n: usize) -> usize {
    let mut layer: Vec<usize> = (0..q.num_vertices()).collect();
    let mut total = layer.len();
    for _ in 1..n {
        layer = layer
            .iter()
            .flat_map(|&v| q.arrows().iter().filter(move |a| a.source == v).map(|a| a.target))
            .collect();
        total += layer.len();
    }
    total
}

#[test]
fn taft_dimensions_match_path_count() {
    for (n, p) in [(2, 257), (3, 7), (4, 13), (5, 11)] {
        let ex = examples::taft(common::field(p), n).unwrap();
        let q = ex.algebra.quiver();
        assert_eq!(q.num_vertices(), n);
        assert_eq!(q.num_arrows(), n);
        assert_eq!(ex.algebra.dim(), count_short_paths(q, n));
        assert_eq!(ex.algebra.dim(), n * n);
    }
}

#[test]
fn products_are_concatenations() {
    let hd = common::taft3();
    let alg = &hd.algebra;
    let q = alg.quiver();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let (bi, bj) = (&alg.basis()[i], &alg.basis()[j]);
            let mut expected = alg.zero();
            if end_of(q, bj) == bi.source && bj.arrows.len() + bi.arrows.len() < 3 {
                let cat = Path { source: bj.source, arrows: [bj.arrows.clone(), bi.arrows.clone()].concat() };
                let k = alg.basis().iter().position(|b| *b == cat).expect("concatenation is a basis path");
                expected[k] = 1;
            }
            let got = alg.mul(&alg.unit_vector(i), &alg.unit_vector(j));
            assert_eq!(got, expected, "{} · {}", alg.basis_label(i), alg.basis_label(j));
        }
    }
}

#[test]
fn block_dims_count_paths_by_endpoints() {
    let hd = common::taft3();
    let alg = &hd.algebra;
    let mut expected = vec![vec![0; 3]; 3];
    for p in alg.basis() {
        expected[end_of(alg.quiver(), p)][p.source] += 1;
    }
    assert_eq!(alg.block_dims(), expected);
}

#[test]
fn unit_is_sum_of_vertices() {
    let hd = common::sweedler();
    let alg = &hd.algebra;
    for i in 0..alg.dim() {
        let x = alg.unit_vector(i);
        assert_eq!(alg.mul(&alg.one(), &x), x);
        assert_eq!(alg.mul(&x, &alg.one()), x);
    }
    assert!(alg.associativity_violation().is_none());
}

#[test]
fn covering_algebras_are_self_injective() {
    for hd in [common::sweedler(), common::taft3()] {
        let n = hd.group().order();
        let si = is_self_injective(&hd.algebra);
        assert!(si.injective);
        let nu = nakayama_permutation(&hd.algebra).unwrap();
        let mut sorted = nu.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..n).collect::<Vec<_>>());
    }
}

fn linear_a2(bound: usize) -> AlgebraPresentation {
    let quiver = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![Arrow { name: "x".into(), source: 0, target: 1 }],
    )
    .unwrap();
    AlgebraPresentation { field: common::field(5), quiver, relations: vec![], nilpotency_bound: bound }
}

#[test]
fn path_algebra_of_a2_is_not_self_injective() {
    let alg = build_algebra(&linear_a2(2)).unwrap();
    assert_eq!(alg.dim(), 3);
    let si = is_self_injective(&alg);
    assert!(!si.injective);
    assert!(si.nu.is_none());
    assert!(matches!(nakayama_permutation(&alg), Err(Error::NotSelfInjective(_))));
}

#[test]
fn short_relations_are_rejected() {
    let mut pres = linear_a2(2);
    pres.relations = vec![vec![(1, Path { source: 0, arrows: vec![0] })]];
    assert!(matches!(build_algebra(&pres), Err(Error::NonAdmissibleIdeal { relation: 0, .. })));
    pres.relations.clear();
    pres.nilpotency_bound = 1;
    assert!(matches!(build_algebra(&pres), Err(Error::NonAdmissibleIdeal { .. })));
}

#[test]
fn non_associative_table_names_a_triple() {
    let names = vec!["1".into(), "a".into(), "b".into()];
    // A Latin square with identity that is not a group.
    let table = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]];
    let err = GroupData::from_table(names, table).unwrap_err();
    assert!(matches!(&err, Error::InvalidGroup(m) if m.contains("associativity fails on (")), "{err}");
}

#[test]
fn group_constructors() {
    let s3 = GroupData::symmetric3();
    assert_eq!(s3.order(), 6);
    assert!(!s3.is_abelian());
    assert_eq!(s3.exponent(), 6);
    let v4 = GroupData::klein_four();
    assert!(v4.is_abelian());
    assert!(v4.elements().all(|g| v4.element_order(g) <= 2));
    let z6 = GroupData::cyclic(6);
    assert_eq!(z6.elements().filter(|&g| z6.element_order(g) == 6).count(), 2);
    for g in s3.elements() {
        assert_eq!(s3.mul(g, s3.inv(g)), s3.identity());
    }
}

proptest! {
    #[test]
    fn multiplication_is_associative(
        x in prop::collection::vec(0u64..7, 9),
        y in prop::collection::vec(0u64..7, 9),
        z in prop::collection::vec(0u64..7, 9),
    ) {
        let hd = common::taft3();
        let alg = &hd.algebra;
        prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
    }

    #[test]
    fn left_mult_matrices_compose(
        x in prop::collection::vec(0u64..7, 9),
        y in prop::collection::vec(0u64..7, 9),
    ) {
        let hd = common::taft3();
        let alg = &hd.algebra;
        prop_assert_eq!(alg.left_mult(&x).mul(&alg.left_mult(&y)), alg.left_mult(&alg.mul(&x, &y)));
        prop_assert_eq!(alg.right_mult(&y).mul(&alg.right_mult(&x)), alg.right_mult(&alg.mul(&x, &y)));
    }
}
