#![allow(dead_code)]

use hcell_core::algebra::GroupData;
use hcell_core::hopf::{self, examples, HopfData};
use hcell_core::PrimeField;

pub fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn build(ex: examples::CoveringExample) -> HopfData {
    let (hd, report) = hopf::hopf_structure(&ex.algebra, &ex.weights).unwrap();
    assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    hd
}

pub fn trivial() -> HopfData {
    build(examples::trivial(field(257)).unwrap())
}

pub fn sweedler() -> HopfData {
    build(examples::sweedler(field(257)).unwrap())
}

pub fn taft3() -> HopfData {
    build(examples::taft(field(7), 3).unwrap())
}

pub fn function_algebra(p: u64, grp: GroupData) -> HopfData {
    build(examples::function_algebra(field(p), grp).unwrap())
}

/// `D_4` as symmetries of a square, and the quaternion group, by permutations.
pub fn dihedral8() -> GroupData {
    GroupData::from_permutations(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
}

pub fn quaternion8() -> GroupData {
    GroupData::from_permutations(&[vec![1, 2, 3, 0, 5, 6, 7, 4], vec![4, 7, 6, 5, 2, 1, 0, 3]])
}

/// Every group of order at most 8 that the bar complex handles, by name.
pub fn small_groups() -> Vec<(&'static str, GroupData)> {
    let c = GroupData::cyclic;
    vec![
        ("1", GroupData::trivial()),
        ("Z2", c(2)),
        ("Z3", c(3)),
        ("Z4", c(4)),
        ("Z2xZ2", GroupData::klein_four()),
        ("Z5", c(5)),
        ("Z6", c(6)),
        ("S3", GroupData::symmetric3()),
        ("Z7", c(7)),
        ("Z8", c(8)),
        ("Z2xZ4", c(2).product(&c(4))),
        ("Z2xZ2xZ2", GroupData::klein_four().product(&c(2))),
        ("D4", dihedral8()),
        ("Q8", quaternion8()),
    ]
}

/// A subgroup as a group in its own right.
pub fn subgroup_as_group(grp: &GroupData, elements: &[usize]) -> GroupData {
    let pos = |g: usize| elements.iter().position(|&x| x == g).unwrap();
    let names = elements.iter().map(|&g| grp.name(g).to_string()).collect();
    let table = elements.iter().map(|&a| elements.iter().map(|&b| pos(grp.mul(a, b))).collect()).collect();
    GroupData::from_table(names, table).unwrap()
}
