//! One line per acceptance criterion; exits nonzero when any fails.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hcell_cli::{parse_spec, run, Command, Flags, Spec};
use hcell_core::algebra::GroupData;
use hcell_core::cells::{
    check_adjunctions, check_h0_simplicity, check_oracle, check_vec_g, CellContext, Config, Side, SymClass,
};
use hcell_core::cohomology::{abelian_multiplier_formula, bar_h3_integral, classify};
use hcell_core::hopf::{check_basis_maps, examples, hopf_structure, verify_gamma_monoidal, HopfData};
use hcell_core::skewcat::{theta_suite, SkewCategory};
use hcell_core::{PrimeField, ValidationReport};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fixture(name: &str) -> Spec {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"));
    parse_spec(&path).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn hopf(spec: &Spec) -> Result<&HopfData, String> {
    spec.hopf.as_ref().ok_or_else(|| format!("{} has no Hopf structure", spec.name))
}

fn ensure(report: &ValidationReport, what: &str) -> Outcome {
    match report.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{what}: {} ({})", c.name, c.witness.clone().unwrap_or_default())),
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Outcome {
    let spent = start.elapsed();
    if spent > limit {
        return Err(format!("{what} took {spent:.1?}, over {limit:?}"));
    }
    Ok(())
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn hopf_axioms() -> Outcome {
    let start = Instant::now();
    for name in ["sweedler", "taft3"] {
        let spec = fixture(name);
        hopf(&spec)?;
        let report = run(Command::CheckHopf, Some(&spec), &Flags::default()).map_err(err)?;
        if !report.passed() {
            return Err(format!("{name}: {:?}", report.failures().next()));
        }
    }
    let bad = fixture("sweedler_bad_antipode");
    let report = run(Command::CheckHopf, Some(&bad), &Flags::default()).map_err(err)?;
    let witnessed = report.failures().any(|(_, c)| c.name.contains("antipode") && c.witness.is_some());
    if report.passed() || !witnessed {
        return Err("the negative control was not rejected with a witness".into());
    }
    within(start, Duration::from_secs(5), "the axiom suite")
}

fn fixture_names() -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut names: Vec<String> = std::fs::read_dir(dir)
        .expect("fixtures directory")
        .filter_map(|e| {
            let path = e.ok()?.path();
            let stem = path.file_stem()?.to_string_lossy().into_owned();
            (path.extension()? == "json").then_some(stem)
        })
        .collect();
    names.sort();
    names
}

/// Every Hopf fixture except the negative control, and `k^G` for the group-only ones.
fn basis_maps() -> Outcome {
    for name in fixture_names().into_iter().filter(|n| n != "sweedler_bad_antipode") {
        let spec = fixture(&name);
        let built;
        let hd = match &spec.hopf {
            Some(hd) => hd,
            None => {
                let field = PrimeField::new(spec.field.characteristic()).map_err(err)?;
                let ex = examples::function_algebra(field, spec.group.clone()).map_err(err)?;
                built = hopf_structure(&ex.algebra, &ex.weights).map_err(err)?.0;
                &built
            }
        };
        let maps = check_basis_maps(hd);
        ensure(&maps.report, &name)?;
        if !maps.f.mul(&maps.g).is_identity() || !maps.g.mul(&maps.f).is_identity() {
            return Err(format!("{name}: f and g are not inverse"));
        }
    }
    Ok(())
}

fn gamma_embedding() -> Outcome {
    let start = Instant::now();
    for name in ["sweedler", "taft3"] {
        let spec = fixture(name);
        let report = verify_gamma_monoidal(hopf(&spec)?);
        ensure(&report, name)?;
        for needed in ["ζ: bijective", "γ_{A,A}: ", "presentations: "] {
            if !report.checks.iter().any(|c| c.name.starts_with(needed)) {
                return Err(format!("{name}: no check named {needed}"));
            }
        }
    }
    within(start, Duration::from_secs(30), "the Γ checks")
}

fn skew_suite() -> Outcome {
    for name in ["sweedler", "taft3"] {
        let spec = fixture(name);
        let hd = hopf(&spec)?;
        let cat = SkewCategory::new(&hd.algebra, &hd.action, hd.group());
        ensure(&cat.skew_category_suite().map_err(err)?, name)?;
    }
    Ok(())
}

fn theta() -> Outcome {
    for name in ["sweedler", "taft3"] {
        let spec = fixture(name);
        ensure(&theta_suite(hopf(&spec)?).map_err(err)?, name)?;
    }
    Ok(())
}

fn context(spec: &Spec, config: Config) -> Result<CellContext, String> {
    let hd = hopf(spec)?;
    CellContext::new(config, &hd.algebra, &hd.action, hd.group()).map_err(err)
}

fn cell_structure() -> Outcome {
    for name in ["sweedler", "taft3"] {
        let spec = fixture(name);
        let n = spec.group.order();
        let plain = context(&spec, Config::Plain)?;
        let s = plain.cell_structure();
        let sizes: Vec<usize> = s.h_cells.iter().map(Vec::len).collect();
        if s.two_sided_cells.len() != 2 || s.h_cells.len() != 2 || !sizes.contains(&n) || !sizes.contains(&1) {
            return Err(format!("{name}: plain cells {:?}", s.two_sided_cells));
        }
        let tilde = context(&spec, Config::Tilde)?;
        let t = tilde.cell_structure();
        let classes = &t.classes;
        // Left cells are cut out by the right side, right cells by the left side.
        let uniform = |cells: &[Vec<usize>], side: fn(&SymClass) -> Side| {
            cells.iter().all(|c| c.iter().all(|&i| side(&classes[i]) == side(&classes[c[0]])))
        };
        let ok = t.two_sided_cells.len() == 2
            && t.left_cells.len() == 3
            && t.right_cells.len() == 3
            && t.h_cells.len() == 5
            && uniform(&t.left_cells, SymClass::right_side)
            && uniform(&t.right_cells, SymClass::left_side)
            && t.h_cells.iter().filter(|c| c.len() == n).count() == 4;
        if !ok {
            return Err(format!("{name}: tilde cells do not split into the four families"));
        }
        for ctx in [&plain, &tilde] {
            ensure(&check_oracle(ctx, None).map_err(err)?, name)?;
        }
    }
    Ok(())
}

fn adjunctions() -> Outcome {
    use Side::{One, Zero};
    for name in ["sweedler", "taft3"] {
        let spec = fixture(name);
        let grp = &spec.group;
        let ctx = context(&spec, Config::Tilde)?;
        let nu = ctx.nakayama().map_err(err)?.to_vec();
        let nu1 = nu[grp.identity()];
        for g in grp.elements() {
            if nu[g] != grp.mul(nu1, g) {
                return Err(format!("{name}: ν({}) is not ν(1)·{}", grp.name(g), grp.name(g)));
            }
            let gi = grp.inv(g);
            let expected = [
                ((One, One), (One, One, grp.mul(nu1, gi))),
                ((Zero, One), (One, Zero, grp.mul(nu1, gi))),
                ((One, Zero), (Zero, One, gi)),
                ((Zero, Zero), (Zero, Zero, gi)),
            ];
            for ((left, right), (l2, r2, h)) in expected {
                let x = SymClass::Proj { left, right, g };
                if ctx.right_adjoint(&x).map_err(err)? != (SymClass::Proj { left: l2, right: r2, g: h }) {
                    return Err(format!("{name}: wrong adjoint of {}", ctx.label(&x)));
                }
            }
        }
        for config in [Config::Plain, Config::Tilde] {
            ensure(&check_adjunctions(&context(&spec, config)?, 0, 20).map_err(err)?, name)?;
        }
    }
    Ok(())
}

fn h0_simplicity() -> Outcome {
    let spec = fixture("sweedler");
    ensure(&check_h0_simplicity(&context(&spec, Config::Plain)?).map_err(err)?, "sweedler")
}

fn vec_g() -> Outcome {
    for name in ["z2", "z3"] {
        let spec = fixture(name);
        let grp = spec.group.clone();
        let field = PrimeField::new(spec.field.characteristic()).map_err(err)?;
        let ex = examples::function_algebra(field, grp.clone()).map_err(err)?;
        let (hd, _) = hopf_structure(&ex.algebra, &ex.weights).map_err(err)?;
        let ctx = CellContext::new(Config::Tilde, &hd.algebra, &hd.action, &grp).map_err(err)?;
        let out = check_vec_g(&ctx).map_err(err)?;
        ensure(&out.report, name)?;
        for g in grp.elements() {
            for h in grp.elements() {
                if out.fusion[g][h] != grp.mul(g, h) {
                    return Err(format!("{name}: fusion of {} and {}", grp.name(g), grp.name(h)));
                }
            }
        }
    }
    Ok(())
}

fn classification() -> Outcome {
    let start = Instant::now();
    for (name, grp, total, apex_zero) in [
        ("trivial", GroupData::trivial(), 2, 1),
        ("Z/2", GroupData::cyclic(2), 3, 2),
        ("Klein four", GroupData::klein_four(), 7, 6),
    ] {
        let c = classify(&grp, None).map_err(err)?;
        if c.total != total || c.apex_zero_by_subgroup != apex_zero {
            return Err(format!("{name}: {} entries, {} with apex J_0", c.total, c.apex_zero_by_subgroup));
        }
    }
    let c = |n| GroupData::cyclic(n);
    let abelian = [
        c(1),
        c(2),
        c(3),
        c(4),
        GroupData::klein_four(),
        c(5),
        c(6),
        c(7),
        c(8),
        c(2).product(&c(4)),
        GroupData::klein_four().product(&c(2)),
    ];
    for grp in &abelian {
        let all: Vec<usize> = grp.elements().collect();
        let bar = bar_h3_integral(grp, &all).map_err(err)?;
        let formula = abelian_multiplier_formula(grp, &all).map_err(err)?;
        if bar != formula {
            return Err(format!("order {}: bar gives {bar}, closed form {formula}", grp.order()));
        }
    }
    let s3 = GroupData::symmetric3();
    let all: Vec<usize> = s3.elements().collect();
    if !bar_h3_integral(&s3, &all).map_err(err)?.is_trivial() {
        return Err("S_3 has a nontrivial multiplier".into());
    }
    within(start, Duration::from_secs(60), "the classification checks")
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Hopf axioms", hopf_axioms),
        ("free basis maps", basis_maps),
        ("Γ embedding", gamma_embedding),
        ("skew category", skew_suite),
        ("Θ", theta),
        ("cell structure", cell_structure),
        ("adjunctions", adjunctions),
        ("H_0 simplicity", h0_simplicity),
        ("Vec_G", vec_g),
        ("classification", classification),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
