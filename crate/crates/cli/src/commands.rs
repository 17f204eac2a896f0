//! One pipeline per subcommand.

use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;
use hcell_core::algebra::{Algebra, AlgebraAction, GroupData};
use hcell_core::cells::{self, CellContext, CellStructure, Config};
use hcell_core::cohomology::{
    abelian_multiplier_formula, bar_h3_certified, classify, subgroups, Apex,
};
use hcell_core::hopf::{self, check_basis_maps, examples, verify_gamma_monoidal, HopfData};
use hcell_core::skewcat::{theta_suite, SkewCategory};
use hcell_core::ValidationReport;

use crate::report::Report;
use crate::spec::Spec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    CheckHopf,
    VerifyGamma,
    Cells,
    Adjoints,
    Classify,
    Schur,
    H0Simple,
    VecG,
    EmbedCheck,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckHopf => "check-hopf",
            Command::VerifyGamma => "verify-gamma",
            Command::Cells => "cells",
            Command::Adjoints => "adjoints",
            Command::Classify => "classify",
            Command::Schur => "schur",
            Command::H0Simple => "h0-simple",
            Command::VecG => "vec-g",
            Command::EmbedCheck => "embed-check",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Flags {
    pub tilde: bool,
    pub seed: u64,
    /// Group-only spec overriding the group of the main spec.
    pub group: Option<Spec>,
}

/// Runs `command` on `spec`; errors mean the input cannot support the
/// command, while failed checks are recorded in the report.
pub fn run(command: Command, spec: Option<&Spec>, flags: &Flags) -> Result<Report> {
    let source = flags.group.as_ref().or(spec).ok_or_else(|| anyhow!("no spec file given"))?;
    let mut report = Report::new(command.name(), source.name.clone());
    match command {
        Command::CheckHopf => check_hopf(&mut report, require(spec)?)?,
        Command::VerifyGamma => {
            let hd = hopf_data(require(spec)?)?;
            report.section("Γ is a strong pseudofunctor", Vec::new(), verify_gamma_monoidal(hd));
        }
        Command::EmbedCheck => embed_check(&mut report, require(spec)?)?,
        Command::Cells => cells_command(&mut report, require(spec)?, flags)?,
        Command::Adjoints => adjoints(&mut report, require(spec)?, flags)?,
        Command::H0Simple => {
            let ctx = context(require(spec)?, Config::Plain)?;
            report.section("H_0 simplicity", Vec::new(), cells::check_h0_simplicity(&ctx)?);
        }
        Command::VecG => vec_g(&mut report, source)?,
        Command::Classify => classify_command(&mut report, source)?,
        Command::Schur => schur(&mut report, source)?,
    }
    Ok(report)
}

fn require(spec: Option<&Spec>) -> Result<&Spec> {
    spec.ok_or_else(|| anyhow!("this command needs a spec file"))
}

fn hopf_data(spec: &Spec) -> Result<&HopfData> {
    spec.hopf.as_ref().ok_or_else(|| anyhow!("{} has no hopf block", spec.name))
}

fn algebra_and_action(spec: &Spec) -> Result<(&Algebra, &AlgebraAction)> {
    match (&spec.algebra, &spec.action) {
        (Some(a), Some(act)) => Ok((a, act)),
        (None, _) => bail!("{} describes no algebra", spec.name),
        (_, None) => bail!("{} has neither an action nor a hopf block", spec.name),
    }
}

fn context(spec: &Spec, config: Config) -> Result<CellContext> {
    let (alg, act) = algebra_and_action(spec)?;
    CellContext::new(config, alg, act, &spec.group).with_context(|| format!("building the cell context for {}", spec.name))
}

fn check_hopf(report: &mut Report, spec: &Spec) -> Result<()> {
    let hd = hopf_data(spec)?;
    let axioms = spec.hopf_report.clone().unwrap_or_default();
    let lines = vec![
        format!("dimension {} over F_{}", hd.dim(), spec.field.characteristic()),
        format!("group of order {}, {} weight(s)", hd.group().order(), hd.weights.weights.len()),
    ];
    report.section("Hopf axioms", lines, axioms);
    report.section("free basis maps", Vec::new(), check_basis_maps(hd).report);
    Ok(())
}

fn embed_check(report: &mut Report, spec: &Spec) -> Result<()> {
    let hd = hopf_data(spec)?;
    let cat = SkewCategory::new(&hd.algebra, &hd.action, hd.group());
    report.section("skew category", Vec::new(), cat.skew_category_suite()?);
    report.section("Θ", Vec::new(), theta_suite(hd)?);
    Ok(())
}

fn cell_lines(ctx: &CellContext, cs: &CellStructure) -> (Vec<String>, serde_json::Value) {
    let names = |cells: &[Vec<usize>]| -> Vec<Vec<String>> {
        cells.iter().map(|c| c.iter().map(|&i| ctx.label(&cs.classes[i])).collect()).collect()
    };
    let show = |cells: &[Vec<usize>]| -> String {
        names(cells).iter().map(|c| format!("{{{}}}", c.join(", "))).collect::<Vec<_>>().join(" ")
    };
    let lines = vec![
        format!("{} two-sided cells: {}", cs.two_sided_cells.len(), show(&cs.two_sided_cells)),
        format!("{} left cells: {}", cs.left_cells.len(), show(&cs.left_cells)),
        format!("{} right cells: {}", cs.right_cells.len(), show(&cs.right_cells)),
        format!("{} H-cells: {}", cs.h_cells.len(), show(&cs.h_cells)),
    ];
    let data = serde_json::json!({
        "two_sided": names(&cs.two_sided_cells),
        "left": names(&cs.left_cells),
        "right": names(&cs.right_cells),
        "h": names(&cs.h_cells),
    });
    (lines, data)
}

fn cells_command(report: &mut Report, spec: &Spec, flags: &Flags) -> Result<()> {
    let config = if flags.tilde { Config::Tilde } else { Config::Plain };
    let ctx = context(spec, config)?;
    let cs = ctx.cell_structure();
    let (mut lines, data) = cell_lines(&ctx, &cs);
    let one = ctx.group.identity();
    let h0 = cs.h_cells.iter().find(|c| c.iter().any(|&i| cs.classes[i] == cells::SymClass::proj(one)));
    if let Some(h) = h0 {
        lines.push(format!("H_0 has {} classes", h.len()));
    }
    report.data("cells", data);
    report.section("cell structure", lines, cs.check());
    report.section("symbolic products", Vec::new(), cells::check_oracle(&ctx, None)?);
    let mut modules = ValidationReport::new();
    for l in &cs.left_cells {
        let m = ctx.cell_module(&cs.cell_classes(l));
        let label = l.iter().map(|&i| ctx.label(&cs.classes[i])).collect::<Vec<_>>().join(",");
        modules.extend(&format!("{{{label}}}: "), ctx.check_cell_module(&m));
    }
    report.section("cell birepresentations", Vec::new(), modules);
    Ok(())
}

fn adjoints(report: &mut Report, spec: &Spec, flags: &Flags) -> Result<()> {
    let config = if flags.tilde { Config::Tilde } else { Config::Plain };
    let ctx = context(spec, config)?;
    let mut lines = Vec::new();
    let mut table = Vec::new();
    for c in ctx.classes() {
        let r = ctx.right_adjoint(&c)?;
        lines.push(format!("{} ⊣ {}", ctx.label(&c), ctx.label(&r)));
        table.push((ctx.label(&c), ctx.label(&r)));
    }
    let nu: Vec<String> = ctx.nakayama()?.iter().map(|&v| ctx.group.name(v).to_string()).collect();
    lines.push(format!("Nakayama permutation: {}", nu.join(" ")));
    report.data("right_adjoints", table);
    report.section("adjunctions", lines, cells::check_adjunctions(&ctx, flags.seed, 20)?);
    Ok(())
}

fn vec_g(report: &mut Report, spec: &Spec) -> Result<()> {
    // Group-only specs run over the function algebra of the group.
    let owned;
    let (alg, act) = match (&spec.algebra, &spec.action) {
        (Some(a), Some(act)) => (a, act),
        _ => {
            let ex = examples::function_algebra(spec.field, spec.group.clone())?;
            let (hd, _) = hopf::hopf_structure(&ex.algebra, &ex.weights)?;
            owned = hd;
            (&owned.algebra, &owned.action)
        }
    };
    let ctx = CellContext::new(Config::Tilde, alg, act, &spec.group)?;
    let v = cells::check_vec_g(&ctx)?;
    let grp = &spec.group;
    let lines = v
        .fusion
        .iter()
        .enumerate()
        .map(|(g, row)| {
            let cells: Vec<&str> = row.iter().map(|&k| if k < grp.order() { grp.name(k) } else { "?" }).collect();
            format!("{} | {}", grp.name(g), cells.join(" "))
        })
        .collect();
    report.data("fusion", &v.fusion);
    report.section("fusion of H_00", lines, v.report);
    Ok(())
}

fn subgroup_label(grp: &GroupData, k: &[usize]) -> String {
    format!("{{{}}}", k.iter().map(|&g| grp.name(g)).collect::<Vec<_>>().join(","))
}

fn classify_command(report: &mut Report, spec: &Spec) -> Result<()> {
    let grp = &spec.group;
    let c = classify(grp, Some(spec.field.characteristic()))?;
    let mut lines = Vec::new();
    for s in &c.subgroups {
        lines.push(format!(
            "K = {} (class {}): H²(K, k*) = {}",
            subgroup_label(grp, &s.elements),
            s.conjugacy_class,
            s.multiplier
        ));
    }
    lines.push(format!("apex J_0, K over all subgroups: {}", c.apex_zero_by_subgroup));
    lines.push(format!("apex J_0, K up to conjugacy: {}", c.apex_zero_by_conjugacy_class));
    lines.push("apex J_1: 1".to_string());
    lines.push(format!("total: {}", c.total));
    if let Some(w) = &c.characteristic_warning {
        lines.push(format!("note: {w}"));
    }
    let mut checks = ValidationReport::new();
    let j0 = c.entries.iter().filter(|e| e.apex == Apex::J0).count();
    let sum: u64 = c.subgroups.iter().map(|s| s.multiplier.order()).sum();
    checks.record(
        "apex J_0 entries = Σ_K |H²(K, k*)|",
        (j0 as u64 != sum).then(|| format!("{j0} entries, sum {sum}")),
    );
    checks.record(
        "exactly one apex J_1 entry",
        (c.entries.iter().filter(|e| e.apex == Apex::J1).count() != 1).then(|| "count differs".to_string()),
    );
    report.data("classification", &c);
    report.section("simple transitive birepresentations", lines, checks);
    Ok(())
}

fn schur(report: &mut Report, spec: &Spec) -> Result<()> {
    let grp = &spec.group;
    let subs = subgroups(grp)?;
    let mut lines = Vec::new();
    let mut checks = ValidationReport::new();
    for k in &subs.all {
        let label = subgroup_label(grp, k);
        let comp = bar_h3_certified(grp, k)?;
        checks.extend(&format!("{label}: "), comp.report.clone());
        let formula = abelian_multiplier_formula(grp, k);
        match &formula {
            Ok(f) => checks.record(
                format!("{label}: bar complex agrees with the abelian formula"),
                (*f != comp.invariants).then(|| format!("bar {} versus formula {f}", comp.invariants)),
            ),
            Err(_) => checks.skip(format!("{label}: abelian formula"), "not abelian"),
        }
        lines.push(format!("K = {label}: H³(K, Z) = {}", comp.invariants));
    }
    report.section("Schur multipliers", lines, checks);
    Ok(())
}
