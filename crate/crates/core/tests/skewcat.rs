mod common;

use hcell_core::algebra::GroupData;
use hcell_core::bimodule::Bimodule;
use hcell_core::cohomology::subgroups;
use hcell_core::hopf::HopfData;
use hcell_core::skewcat::{check_1_full_embedding, group_idempotents, theta_suite, SkewCategory, SkewHom};
use hcell_core::{Error, PrimeField};
use proptest::prelude::*;

fn category(hd: &HopfData) -> SkewCategory<'_> {
    SkewCategory::new(&hd.algebra, &hd.action, hd.group())
}

/// Product in `k[H]` with coefficients listed along `elements`.
fn group_algebra_mul(f: PrimeField, grp: &GroupData, elements: &[usize], a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; elements.len()];
    for (i, &x) in elements.iter().enumerate() {
        for (j, &y) in elements.iter().enumerate() {
            let k = elements.iter().position(|&z| z == grp.mul(x, y)).unwrap();
            out[k] = f.add(out[k], f.mul(a[i], b[j]));
        }
    }
    out
}

fn assert_complete_orthogonal(f: PrimeField, grp: &GroupData, elements: &[usize]) -> usize {
    let idems = group_idempotents(f, grp, elements).unwrap();
    let coeffs: Vec<Vec<u64>> = idems.iter().map(|e| e.coefficients(f)).collect();
    let mut total = vec![0; elements.len()];
    for (i, a) in coeffs.iter().enumerate() {
        for (j, b) in coeffs.iter().enumerate() {
            let prod = group_algebra_mul(f, grp, elements, a, b);
            if i == j {
                assert_eq!(&prod, a, "idempotent {}", i + 1);
            } else {
                assert!(prod.iter().all(|&x| x == 0), "{} and {} are not orthogonal", i + 1, j + 1);
            }
        }
        for (t, &x) in total.iter_mut().zip(a) {
            *t = f.add(*t, x);
        }
    }
    let one: Vec<u64> = elements.iter().map(|&g| u64::from(g == grp.identity())).collect();
    assert_eq!(total, one);
    assert!(idems[0].is_trivial());
    assert!(idems[0].lambda.iter().all(|&l| l == 1));
    idems.len()
}

#[test]
fn idempotent_counts() {
    let f = common::field(7);
    let z3 = GroupData::cyclic(3);
    assert_eq!(assert_complete_orthogonal(f, &z3, &[0, 1, 2]), 3);
    let s3 = GroupData::symmetric3();
    let all: Vec<usize> = s3.elements().collect();
    // 1 + 1 + 2: the two-dimensional irreducible needs two primitive idempotents.
    assert_eq!(assert_complete_orthogonal(f, &s3, &all), 4);
    let v4 = GroupData::klein_four();
    assert_eq!(assert_complete_orthogonal(common::field(3), &v4, &[0, 1, 2, 3]), 4);
}

#[test]
fn idempotent_errors() {
    let z7 = GroupData::cyclic(7);
    let all: Vec<usize> = z7.elements().collect();
    assert!(matches!(group_idempotents(common::field(7), &z7, &all), Err(Error::CharTooSmall { p: 7, dim: 7 })));
    let z3 = GroupData::cyclic(3);
    assert!(matches!(group_idempotents(common::field(5), &z3, &[0, 1, 2]), Err(Error::NonSplitField(_))));
    assert!(matches!(group_idempotents(common::field(7), &z3, &[0, 1]), Err(Error::InvalidGroup(_))));
}

#[test]
fn stabilizers() {
    let hd = common::sweedler();
    let cat = category(&hd);
    let alg = &hd.algebra;
    assert_eq!(cat.stabilizer(&Bimodule::regular(alg)), vec![0, 1]);
    assert_eq!(cat.stabilizer(&Bimodule::free(alg, 0, 0)), vec![hd.group().identity()]);
    let pair = Bimodule::direct_sum(alg, &[&Bimodule::free(alg, 0, 0), &Bimodule::free(alg, 1, 1)]);
    assert_eq!(cat.stabilizer(&pair), vec![0, 1]);
}

#[test]
fn skew_category_suites_pass() {
    for hd in [common::sweedler(), common::taft3()] {
        let report = category(&hd).skew_category_suite().unwrap();
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn theta_suites_pass() {
    for hd in [common::sweedler(), common::taft3()] {
        let report = theta_suite(&hd).unwrap();
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        assert!(check_1_full_embedding(&hd).unwrap().passed());
    }
}

#[test]
fn unit_idempotent_is_idempotent() {
    let hd = common::taft3();
    let cat = category(&hd);
    let pi = cat.unit_idempotent();
    assert_eq!(cat.compose(&pi, &pi), pi);
    assert!(cat.is_morphism(&Bimodule::regular(&hd.algebra), &Bimodule::regular(&hd.algebra), &pi));
}

fn combination(f: PrimeField, basis: &[SkewHom], coeffs: &[u64], rows: usize, cols: usize) -> SkewHom {
    basis.iter().zip(coeffs.iter().cycle()).fold(SkewHom::zero(rows, cols), |acc, (b, &c)| acc.add(&b.scale(f.from_u64(c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn composition_is_associative(
        objs in prop::collection::vec(0usize..3, 4),
        coeffs in prop::collection::vec(0u64..5, 12),
    ) {
        let hd = common::sweedler();
        let cat = category(&hd);
        let alg = &hd.algebra;
        let f = alg.field();
        let pool = [Bimodule::regular(alg), Bimodule::free(alg, 0, 0), Bimodule::free(alg, 1, 0)];
        let m: Vec<&Bimodule> = objs.iter().map(|&i| &pool[i]).collect();
        let mk = |a: &Bimodule, b: &Bimodule, shift: usize| {
            let basis = cat.hom_basis(a, b);
            combination(f, &basis, &coeffs[shift..shift + 4], b.dim(), a.dim())
        };
        let phi = mk(m[0], m[1], 0);
        let psi = mk(m[1], m[2], 4);
        let chi = mk(m[2], m[3], 8);
        let left = cat.compose(&chi, &cat.compose(&psi, &phi));
        let right = cat.compose(&cat.compose(&chi, &psi), &phi);
        prop_assert!(cat.is_morphism(m[0], m[3], &left));
        prop_assert_eq!(left, right);
        let id = cat.identity(m[0].dim());
        prop_assert_eq!(cat.compose(&phi, &id), phi);
    }

    #[test]
    fn subgroup_idempotents_are_complete(choice in 0usize..3, which in 0usize..16, p in prop::sample::select(vec![7u64, 13, 31, 37])) {
        let grp = [GroupData::symmetric3(), GroupData::cyclic(6), GroupData::klein_four()][choice].clone();
        let subs = subgroups(&grp).unwrap();
        let k = &subs.all[which % subs.len()];
        let f = common::field(p);
        // Abelian subgroups need enough roots of unity; skip the fields that lack them.
        match group_idempotents(f, &grp, k) {
            Err(Error::NonSplitField(_)) => {}
            Err(e) => prop_assert!(false, "{e}"),
            Ok(_) => { assert_complete_orthogonal(f, &grp, k); }
        }
    }
}
