mod common;

use std::collections::BTreeSet;

use hcell_core::algebra::{nakayama_permutation, AlgebraAction, GroupData};
use hcell_core::cells::{
    check_adjunctions, check_h0_simplicity, check_oracle, check_vec_g, CellContext, Config, FormalMorph, Side, SymClass,
};
use hcell_core::hopf::HopfData;
use hcell_core::Error;
use proptest::prelude::*;

fn context(hd: &HopfData, config: Config) -> CellContext {
    CellContext::new(config, &hd.algebra, &hd.action, hd.group()).unwrap()
}

type Partition = BTreeSet<BTreeSet<SymClass>>;

fn partition(ctx: &CellContext, cells: &[Vec<usize>]) -> Partition {
    let classes = ctx.classes();
    cells.iter().map(|c| c.iter().map(|&i| classes[i]).collect()).collect()
}

/// Union of the listed `S_{ij}` families, plus optionally the identity.
fn family(grp: &GroupData, sides: &[(Side, Side)]) -> BTreeSet<SymClass> {
    sides
        .iter()
        .flat_map(|&(left, right)| grp.elements().map(move |g| SymClass::Proj { left, right, g }))
        .collect()
}

fn identity_cell() -> BTreeSet<SymClass> {
    BTreeSet::from([SymClass::Identity])
}

use Side::{One, Zero};

#[test]
fn plain_cells_are_identity_and_the_rest() {
    for hd in [common::sweedler(), common::taft3()] {
        let ctx = context(&hd, Config::Plain);
        let s = ctx.cell_structure();
        assert!(s.check().passed());
        let expected: Partition = [identity_cell(), family(hd.group(), &[(One, One)])].into();
        for cells in [&s.left_cells, &s.right_cells, &s.two_sided_cells, &s.h_cells] {
            assert_eq!(partition(&ctx, cells), expected);
        }
        let id = s.two_sided_cells.iter().position(|c| c == &vec![0]).unwrap();
        assert!(s.strictly_below(id, 1 - id));
    }
}

#[test]
fn tilde_cells() {
    for hd in [common::sweedler(), common::taft3()] {
        let grp = hd.group();
        let ctx = context(&hd, Config::Tilde);
        let s = ctx.cell_structure();
        assert!(s.check().passed());
        let all = family(grp, &[(One, One), (One, Zero), (Zero, One), (Zero, Zero)]);
        assert_eq!(partition(&ctx, &s.two_sided_cells), Partition::from([identity_cell(), all]));
        let left: Partition =
            [identity_cell(), family(grp, &[(One, Zero), (Zero, Zero)]), family(grp, &[(One, One), (Zero, One)])].into();
        assert_eq!(partition(&ctx, &s.left_cells), left);
        let right: Partition =
            [identity_cell(), family(grp, &[(Zero, One), (Zero, Zero)]), family(grp, &[(One, One), (One, Zero)])].into();
        assert_eq!(partition(&ctx, &s.right_cells), right);
        let mut h: Partition = [(One, One), (One, Zero), (Zero, One), (Zero, Zero)]
            .iter()
            .map(|&p| family(grp, &[p]))
            .collect();
        h.insert(identity_cell());
        assert_eq!(partition(&ctx, &s.h_cells), h);
    }
}

#[test]
fn nakayama_is_a_right_translation() {
    for hd in [common::sweedler(), common::taft3()] {
        let grp = hd.group();
        let nu = nakayama_permutation(&hd.algebra).unwrap();
        for g in grp.elements() {
            assert_eq!(nu[g], grp.mul(nu[grp.identity()], g));
        }
        let ctx = context(&hd, Config::Tilde);
        assert!(ctx.check_nakayama_shift().unwrap().passed());
    }
}

#[test]
fn right_adjoints() {
    for hd in [common::sweedler(), common::taft3()] {
        let grp = hd.group();
        let ctx = context(&hd, Config::Tilde);
        let nu1 = ctx.nakayama().unwrap()[grp.identity()];
        assert_eq!(ctx.right_adjoint(&SymClass::Identity).unwrap(), SymClass::Identity);
        for g in grp.elements() {
            let gi = grp.inv(g);
            let shifted = grp.mul(nu1, gi);
            let cases = [
                ((One, One), SymClass::Proj { left: One, right: One, g: shifted }),
                ((Zero, One), SymClass::Proj { left: One, right: Zero, g: shifted }),
                ((One, Zero), SymClass::Proj { left: Zero, right: One, g: gi }),
                ((Zero, Zero), SymClass::Proj { left: Zero, right: Zero, g: gi }),
            ];
            for ((left, right), expected) in cases {
                let x = SymClass::Proj { left, right, g };
                assert_eq!(ctx.right_adjoint(&x).unwrap(), expected, "{}", ctx.label(&x));
            }
        }
    }
}

#[test]
fn adjunctions_hold_on_modules() {
    for hd in [common::sweedler(), common::taft3()] {
        for config in [Config::Plain, Config::Tilde] {
            let ctx = context(&hd, config);
            let report = check_adjunctions(&ctx, 0, 20).unwrap();
            assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        }
    }
}

#[test]
fn symbolic_products_match_bimodule_tensors() {
    for hd in [common::trivial(), common::sweedler(), common::taft3()] {
        for config in [Config::Plain, Config::Tilde] {
            let ctx = context(&hd, config);
            let report = check_oracle(&ctx, None).unwrap();
            assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        }
    }
}

#[test]
fn h0_simplicity_on_sweedler() {
    let hd = common::sweedler();
    let report = check_h0_simplicity(&context(&hd, Config::Plain)).unwrap();
    assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
}

#[test]
fn zero_classes_fuse_like_the_group() {
    for grp in [GroupData::cyclic(2), GroupData::cyclic(3)] {
        let hd = common::function_algebra(7, grp.clone());
        let out = check_vec_g(&context(&hd, Config::Tilde)).unwrap();
        assert!(out.report.passed());
        for g in grp.elements() {
            for h in grp.elements() {
                assert_eq!(out.fusion[g][h], grp.mul(g, h));
            }
        }
    }
    let hd = common::taft3();
    let out = check_vec_g(&context(&hd, Config::Tilde)).unwrap();
    assert!(out.report.passed());
    assert!(matches!(check_vec_g(&context(&hd, Config::Plain)), Err(Error::DimensionMismatch(_))));
}

#[test]
fn cell_modules_are_consistent() {
    let hd = common::sweedler();
    for config in [Config::Plain, Config::Tilde] {
        let ctx = context(&hd, config);
        let s = ctx.cell_structure();
        for cell in &s.left_cells {
            let module = ctx.cell_module(&s.cell_classes(cell));
            assert!(ctx.check_cell_module(&module).passed());
        }
    }
}

#[test]
fn non_regular_action_is_rejected() {
    let hd = common::sweedler();
    let trivial = AlgebraAction::trivial(&hd.algebra, 2);
    let err = CellContext::new(Config::Plain, &hd.algebra, &trivial, hd.group()).unwrap_err();
    assert!(matches!(err, Error::InvalidGroup(_)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symbolic_tensor_is_associative(i in 0usize..13, j in 0usize..13, k in 0usize..13, m in 1usize..3) {
        let hd = common::taft3();
        let ctx = context(&hd, Config::Tilde);
        let classes = ctx.classes();
        let a = FormalMorph::single(classes[i]);
        let mut b = FormalMorph::single(classes[j]);
        b.add(classes[(j + 4) % 13], m);
        let c = FormalMorph::single(classes[k]);
        let left = ctx.tensor_formal(&ctx.tensor_formal(&a, &b), &c);
        let right = ctx.tensor_formal(&a, &ctx.tensor_formal(&b, &c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_neutral(i in 0usize..13) {
        let hd = common::taft3();
        let ctx = context(&hd, Config::Tilde);
        let x = ctx.classes()[i];
        // The identity lives on the `A` object, so only `1`-sides compose with it.
        let expect = |side: Side| (side == One).then(|| FormalMorph::single(x));
        prop_assert_eq!(ctx.tensor_symbolic(&SymClass::Identity, &x), expect(x.left_side()));
        prop_assert_eq!(ctx.tensor_symbolic(&x, &SymClass::Identity), expect(x.right_side()));
    }
}
