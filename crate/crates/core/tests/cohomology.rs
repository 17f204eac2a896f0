mod common;

use std::collections::BTreeSet;

use hcell_core::algebra::GroupData;
use hcell_core::cohomology::{
    abelian_invariants, abelian_multiplier_formula, bar_h3_certified, bar_h3_integral, classify, coboundary,
    composite_vanishes, multiplier_of_cyclic, smith_normal_form, subgroups, AbelianInvariants, Apex, IntMatrix,
    SubgroupTable,
};
use hcell_core::Error;
use num_bigint::BigInt;
use proptest::prelude::*;

/// Every subset containing the identity and closed under products.
fn brute_force_subgroups(grp: &GroupData) -> BTreeSet<Vec<usize>> {
    let n = grp.order();
    (0u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| s.contains(&grp.identity()))
        .filter(|s| s.iter().all(|&a| s.iter().all(|&b| s.contains(&grp.mul(a, b)))))
        .collect()
}

fn conjugacy_class_count(grp: &GroupData, subs: &BTreeSet<Vec<usize>>) -> usize {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut classes = 0;
    for s in subs {
        if seen.contains(s) {
            continue;
        }
        classes += 1;
        for g in grp.elements() {
            let mut c: Vec<usize> = s.iter().map(|&x| grp.mul(grp.mul(g, x), grp.inv(g))).collect();
            c.sort_unstable();
            seen.insert(c);
        }
    }
    classes
}

/// Rank mod `p` of the inhomogeneous coboundary `C^n → C^{n+1}` with
/// trivial coefficients, built straight from the face formula.
fn coboundary_rank_mod(grp: &GroupData, n: usize, p: i64) -> usize {
    let k = grp.order();
    let encode = |t: &[usize]| t.iter().fold(0, |acc, &g| acc * k + g);
    let rows = k.pow(n as u32 + 1);
    let mut m: Vec<Vec<i64>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut t = vec![0; n + 1];
        let mut x = r;
        for slot in t.iter_mut().rev() {
            *slot = x % k;
            x /= k;
        }
        let mut row = vec![0i64; k.pow(n as u32)];
        row[encode(&t[1..])] += 1;
        for i in 1..=n {
            let mut face = t[..i - 1].to_vec();
            face.push(grp.mul(t[i - 1], t[i]));
            face.extend_from_slice(&t[i + 1..]);
            row[encode(&face)] += if i % 2 == 0 { 1 } else { -1 };
        }
        row[encode(&t[..n])] += if (n + 1).is_multiple_of(2) { 1 } else { -1 };
        m.push(row.into_iter().map(|v| v.rem_euclid(p)).collect());
    }
    rank_mod(m, p)
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn rank_mod(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        let pivot_row: Vec<i64> = m[rank].iter().map(|&v| v * inv % p).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    rank
}

#[test]
fn subgroup_lattices_match_brute_force() {
    for (name, grp) in common::small_groups() {
        let subs = subgroups(&grp).unwrap();
        let brute = brute_force_subgroups(&grp);
        let found: BTreeSet<Vec<usize>> = subs.all.iter().cloned().collect();
        assert_eq!(found, brute, "{name}");
        assert_eq!(subs.len(), brute.len());
        assert_eq!(subs.conjugacy_classes(), conjugacy_class_count(&grp, &brute), "{name}");
    }
    assert_eq!(subgroups(&GroupData::cyclic(2)).unwrap().len(), 2);
    assert_eq!(subgroups(&GroupData::klein_four()).unwrap().len(), 5);
    let s3 = subgroups(&GroupData::symmetric3()).unwrap();
    assert_eq!((s3.len(), s3.conjugacy_classes()), (6, 4));
}

#[test]
fn bar_torsion_has_the_right_p_ranks() {
    // By universal coefficients, the p-rank of H³(K, ℤ) is
    // dim H²(K, F_p) − dim H¹(K, F_p) = |K|² − |K| − rank_p d².
    for (name, grp) in common::small_groups() {
        let all: Vec<usize> = grp.elements().collect();
        let h3 = bar_h3_integral(&grp, &all).unwrap();
        let n = grp.order();
        for p in [2i64, 3, 5, 7] {
            let expected = n * n - n - coboundary_rank_mod(&grp, 2, p);
            let got = h3.divisors.iter().filter(|&&d| d % p as u64 == 0).count();
            assert_eq!(got, expected, "{name} at p = {p}");
        }
    }
}

#[test]
fn bar_matches_the_abelian_closed_form() {
    // ⊕ ℤ/n_i has multiplier ⊕_{i<j} ℤ/gcd(n_i, n_j).
    let cases: [(&str, &[u64]); 5] =
        [("Z2xZ2", &[2]), ("Z2xZ4", &[2]), ("Z2xZ2xZ2", &[2, 2, 2]), ("Z6", &[]), ("Z8", &[])];
    let groups = common::small_groups();
    for (name, expected) in cases {
        let grp = &groups.iter().find(|(n, _)| *n == name).unwrap().1;
        let all: Vec<usize> = grp.elements().collect();
        assert_eq!(bar_h3_integral(grp, &all).unwrap().divisors, expected, "{name}");
    }
    for (name, grp) in groups.iter().filter(|(_, g)| g.is_abelian()) {
        let all: Vec<usize> = grp.elements().collect();
        assert_eq!(bar_h3_integral(grp, &all).unwrap(), abelian_multiplier_formula(grp, &all).unwrap(), "{name}");
    }
}

#[test]
fn nonabelian_multipliers() {
    let groups = common::small_groups();
    let get = |name: &str| groups.iter().find(|(n, _)| *n == name).unwrap().1.clone();
    for (name, order) in [("S3", 1), ("Q8", 1), ("D4", 2)] {
        let grp = get(name);
        let all: Vec<usize> = grp.elements().collect();
        let bar = bar_h3_certified(&grp, &all).unwrap();
        assert!(bar.report.passed());
        assert_eq!(bar.invariants.order(), order, "{name}");
        let n = grp.order();
        assert_eq!(bar.cochain_dims, [n * n, n * n * n, n * n * n * n]);
        assert_eq!(bar.rank_d3_mod_p, n * n * n - bar.rank_d2);
    }
}

#[test]
fn coboundaries_compose_to_zero() {
    for (name, grp) in common::small_groups().into_iter().filter(|(_, g)| g.order() <= 6) {
        let all: Vec<usize> = grp.elements().collect();
        let table = SubgroupTable::new(&grp, &all).unwrap();
        for n in 0..3 {
            assert!(composite_vanishes(&coboundary(&table, n + 1), &coboundary(&table, n)), "{name} degree {n}");
        }
    }
}

#[test]
fn cyclic_decomposition() {
    assert_eq!(AbelianInvariants::from_cyclic(&[4, 6]).divisors, vec![2, 12]);
    assert_eq!(AbelianInvariants::from_cyclic(&[2, 3]).divisors, vec![6]);
    assert_eq!(AbelianInvariants::from_cyclic(&[1, 1]), AbelianInvariants::trivial());
    assert_eq!(multiplier_of_cyclic(&[4, 6]).divisors, vec![2]);
    assert_eq!(AbelianInvariants::from_cyclic(&[2, 2]).to_string(), "Z/2 ⊕ Z/2");
    assert_eq!(AbelianInvariants::trivial().to_string(), "0");
    let z2z4 = GroupData::cyclic(2).product(&GroupData::cyclic(4));
    let all: Vec<usize> = z2z4.elements().collect();
    assert_eq!(abelian_invariants(&z2z4, &all).unwrap().divisors, vec![2, 4]);
}

#[test]
fn classification_counts() {
    // J_1 contributes one entry; J_0 one per pair (K, ω).
    let z2 = classify(&GroupData::cyclic(2), None).unwrap();
    assert_eq!((z2.apex_zero_by_subgroup, z2.total), (2, 3));
    // {1}, three copies of ℤ/2, and V_4 with multiplier ℤ/2.
    let v4 = classify(&GroupData::klein_four(), None).unwrap();
    assert_eq!((v4.apex_zero_by_subgroup, v4.apex_zero_by_conjugacy_class, v4.total), (6, 6, 7));
    // Six subgroups in four conjugacy classes, all with trivial multiplier.
    let s3 = classify(&GroupData::symmetric3(), None).unwrap();
    assert_eq!((s3.apex_zero_by_subgroup, s3.apex_zero_by_conjugacy_class, s3.total), (6, 4, 7));
    assert_eq!(s3.entries.iter().filter(|e| e.apex == Apex::J1).count(), 1);
    assert_eq!(s3.entries.len(), s3.total);
    assert!(v4.characteristic_warning.is_none());
    assert!(classify(&GroupData::klein_four(), Some(2)).unwrap().characteristic_warning.is_some());
    assert!(classify(&GroupData::klein_four(), Some(7)).unwrap().characteristic_warning.is_none());
}

#[test]
fn size_errors() {
    assert!(matches!(subgroups(&GroupData::cyclic(17)), Err(Error::GroupTooLarge { order: 17, .. })));
    let z9 = GroupData::cyclic(9);
    let all: Vec<usize> = z9.elements().collect();
    assert!(matches!(bar_h3_integral(&z9, &all), Err(Error::SizeBound { order: 9, .. })));
    let s3 = GroupData::symmetric3();
    let all: Vec<usize> = s3.elements().collect();
    assert!(matches!(abelian_invariants(&s3, &all), Err(Error::NotAbelian(_))));
    let three = s3.elements().find(|&g| s3.element_order(g) == 3).unwrap();
    assert!(bar_h3_integral(&s3, &[s3.identity(), three]).is_err());
}

fn to_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

/// Determinant by fraction-free elimination.
fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(s) = (k + 1..n).find(|&r| m[r][k] != 0) else { return 0 };
            m.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

proptest! {
    #[test]
    fn smith_form_is_valid(rows in (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-20i64..=20, c), r))) {
        let input = to_matrix(&rows);
        let snf = smith_normal_form(&input);
        prop_assert!(snf.verify(&input));
        for w in snf.divisors.windows(2) {
            prop_assert!(&w[1] % &w[0] == BigInt::from(0));
        }
        prop_assert!(snf.divisors.iter().all(|d| *d > BigInt::from(0)));
        let p = 1_000_000_007i64;
        let reduced: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|v| v.rem_euclid(p)).collect()).collect();
        prop_assert_eq!(snf.rank(), rank_mod(reduced, p));
    }

    #[test]
    fn smith_divisors_multiply_to_determinant(rows in (1usize..6).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))) {
        let snf = smith_normal_form(&to_matrix(&rows));
        let det = bareiss_det(rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect());
        let product: BigInt = if snf.rank() == rows.len() { snf.divisors.iter().product() } else { BigInt::from(0) };
        prop_assert_eq!(product, BigInt::from(det.abs()));
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classification_grows_with_the_group(choice in 0usize..14, which in 0usize..32) {
        let groups = common::small_groups();
        let grp = &groups[choice].1;
        let subs = subgroups(grp).unwrap();
        let k = &subs.all[which % subs.len()];
        let sub = common::subgroup_as_group(grp, k);
        let small = classify(&sub, None).unwrap();
        let big = classify(grp, None).unwrap();
        prop_assert!(small.apex_zero_by_subgroup <= big.apex_zero_by_subgroup);
        prop_assert_eq!(small.total, 1 + small.apex_zero_by_subgroup);
    }
}
