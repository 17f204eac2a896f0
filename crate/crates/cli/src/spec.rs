//! JSON problem descriptions and their validation.
//!
//! A spec always carries a field and a group. The quiver, relations, action
//! and Hopf blocks are optional; group-only specs serve the classification
//! commands. Arrow tables are square matrices indexed by arrow position:
//! entry `[a][b]` is the coefficient of arrow `b` in the image of arrow `a`.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path as FsPath;

use hcell_core::algebra::{build_algebra, check_action, Algebra, AlgebraAction, AlgebraPresentation, Arrow, GroupData, Quiver};
use hcell_core::hopf::{arrow_vector, hopf_structure, ArrowCombination, HopfData, WeightData};
use hcell_core::{PrimeField, ValidationReport};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("semantic error at {path}: {message}")]
    Semantic { path: String, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

fn semantic(path: impl Into<String>, message: impl ToString) -> SpecError {
    SpecError::Semantic { path: path.into(), message: message.to_string() }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(default)]
    pub name: Option<String>,
    pub field: FieldBlock,
    pub group: GroupBlock,
    #[serde(default)]
    pub quiver: Option<QuiverBlock>,
    #[serde(default)]
    pub relations: Vec<Vec<Term>>,
    #[serde(default)]
    pub nilpotency_bound: Option<usize>,
    #[serde(default)]
    pub action: Option<Vec<ActionBlock>>,
    #[serde(default)]
    pub hopf: Option<HopfBlock>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FieldBlock {
    pub char: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GroupBlock {
    pub elements: Vec<String>,
    /// `table[i][j]` names the product `elements[i]·elements[j]`.
    pub table: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct QuiverBlock {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowBlock>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ArrowBlock {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// `coeff` times the path through `arrows`, listed in the order traversed.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub coeff: i64,
    pub arrows: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ActionBlock {
    pub element: String,
    /// Image of each vertex, in quiver order.
    pub vertex_perm: Vec<String>,
    pub arrows: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct HopfBlock {
    pub weights: Vec<String>,
    pub bimodule_structure: BimoduleStructure,
    #[serde(default = "minus_one")]
    pub antipode_sign: i64,
}

fn minus_one() -> i64 {
    -1
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BimoduleStructure {
    /// `h·a_{i,g} = χ_i(h) a_{i,hg}`; one row of values per weight, in group order.
    Characters { values: Vec<Vec<i64>> },
    /// Explicit arrow tables for `h·a` and `a·h`.
    Tables { left: Vec<ArrowTable>, right: Vec<ArrowTable> },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ArrowTable {
    pub element: String,
    pub arrows: Vec<Vec<i64>>,
}

/// A validated spec with its algebraic data built.
#[derive(Clone, Debug)]
pub struct Spec {
    pub name: String,
    pub file: SpecFile,
    pub field: PrimeField,
    pub group: GroupData,
    pub algebra: Option<Algebra>,
    pub action: Option<AlgebraAction>,
    pub hopf: Option<HopfData>,
    /// Axiom checks gathered while building the Hopf structure.
    pub hopf_report: Option<ValidationReport>,
}

pub fn parse_spec(path: &FsPath) -> Result<Spec, SpecError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| SpecError::Io { path: path.display().to_string(), message: e.to_string() })?;
    let fallback = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    parse_spec_str(&text, &fallback)
}

pub fn parse_spec_str(text: &str, fallback_name: &str) -> Result<Spec, SpecError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: SpecFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        SpecError::Schema { path, message: e.into_inner().to_string() }
    })?;
    build(file, fallback_name)
}

fn build(file: SpecFile, fallback_name: &str) -> Result<Spec, SpecError> {
    let name = file.name.clone().unwrap_or_else(|| fallback_name.to_string());
    let field = PrimeField::new(file.field.char).map_err(|e| semantic("field.char", e))?;
    let group = build_group(&file.group)?;

    let algebra = match &file.quiver {
        Some(q) => Some(build_quiver_algebra(&file, q, field)?),
        None => {
            if !file.relations.is_empty() || file.action.is_some() || file.hopf.is_some() {
                return Err(semantic("quiver", "relations, action and hopf blocks need a quiver"));
            }
            None
        }
    };

    let explicit = match (&file.action, &algebra) {
        (Some(blocks), Some(alg)) => Some(build_action(blocks, alg, &group)?),
        _ => None,
    };

    let (hopf, hopf_report) = match (&file.hopf, &algebra) {
        (Some(h), Some(alg)) => {
            let wd = build_weights(h, alg, &group)?;
            let (hd, report) = hopf_structure(alg, &wd).map_err(|e| semantic("hopf", e))?;
            (Some(hd), Some(report))
        }
        _ => (None, None),
    };

    let action = match (explicit, &hopf) {
        (Some(a), Some(hd)) => {
            if a.matrices() != hd.action.matrices() {
                return Err(semantic("action", "the action block disagrees with the action induced by the hopf block"));
            }
            Some(a)
        }
        (Some(a), None) => Some(a),
        (None, Some(hd)) => Some(hd.action.clone()),
        (None, None) => None,
    };

    Ok(Spec { name, file, field, group, algebra, action, hopf, hopf_report })
}

fn index_map(names: &[String], path: &str) -> Result<BTreeMap<String, usize>, SpecError> {
    let mut out = BTreeMap::new();
    for (i, n) in names.iter().enumerate() {
        if out.insert(n.clone(), i).is_some() {
            return Err(semantic(format!("{path}[{i}]"), format!("duplicate name {n:?}")));
        }
    }
    Ok(out)
}

fn lookup(map: &BTreeMap<String, usize>, name: &str, path: String) -> Result<usize, SpecError> {
    map.get(name).copied().ok_or_else(|| semantic(path, format!("unknown name {name:?}")))
}

fn build_group(g: &GroupBlock) -> Result<GroupData, SpecError> {
    let idx = index_map(&g.elements, "group.elements")?;
    let n = g.elements.len();
    if g.table.len() != n {
        return Err(semantic("group.table", format!("expected {n} rows, found {}", g.table.len())));
    }
    let mut table = Vec::with_capacity(n);
    for (i, row) in g.table.iter().enumerate() {
        if row.len() != n {
            return Err(semantic(format!("group.table[{i}]"), format!("expected {n} entries, found {}", row.len())));
        }
        let mut out = Vec::with_capacity(n);
        for (j, x) in row.iter().enumerate() {
            out.push(lookup(&idx, x, format!("group.table[{i}][{j}]"))?);
        }
        table.push(out);
    }
    GroupData::from_table(g.elements.clone(), table).map_err(|e| semantic("group.table", e))
}

fn build_quiver_algebra(file: &SpecFile, q: &QuiverBlock, field: PrimeField) -> Result<Algebra, SpecError> {
    let vidx = index_map(&q.vertices, "quiver.vertices")?;
    let names: Vec<String> = q.arrows.iter().map(|a| a.name.clone()).collect();
    let aidx = index_map(&names, "quiver.arrows")?;
    let mut arrows = Vec::with_capacity(q.arrows.len());
    for (i, a) in q.arrows.iter().enumerate() {
        arrows.push(Arrow {
            name: a.name.clone(),
            source: lookup(&vidx, &a.source, format!("quiver.arrows[{i}].source"))?,
            target: lookup(&vidx, &a.target, format!("quiver.arrows[{i}].target"))?,
        });
    }
    let quiver = Quiver::new(q.vertices.clone(), arrows).map_err(|e| semantic("quiver", e))?;
    let mut relations = Vec::with_capacity(file.relations.len());
    for (r, rel) in file.relations.iter().enumerate() {
        let mut comb = Vec::with_capacity(rel.len());
        for (t, term) in rel.iter().enumerate() {
            let path = format!("relations[{r}][{t}]");
            if term.arrows.is_empty() {
                return Err(semantic(path, "relations are combinations of paths of positive length"));
            }
            let ids = term
                .arrows
                .iter()
                .enumerate()
                .map(|(k, a)| lookup(&aidx, a, format!("{path}.arrows[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let p = quiver.path(&ids).map_err(|e| semantic(path, e))?;
            comb.push((field.from_i64(term.coeff), p));
        }
        relations.push(comb);
    }
    let bound = file.nilpotency_bound.ok_or_else(|| semantic("nilpotency_bound", "required with a quiver"))?;
    build_algebra(&AlgebraPresentation { field, quiver, relations, nilpotency_bound: bound })
        .map_err(|e| semantic("relations", e))
}

fn arrow_rows(m: &[Vec<i64>], na: usize, path: &str) -> Result<Vec<ArrowCombination>, SpecError> {
    if m.len() != na || m.iter().any(|r| r.len() != na) {
        return Err(semantic(path, format!("arrow table must be {na}x{na}")));
    }
    Ok(m.iter().map(|row| row.iter().enumerate().filter(|(_, &c)| c != 0).map(|(b, &c)| (b, c)).collect()).collect())
}

/// One entry per group element, each exactly once, returned in group order.
fn per_element<'a, T>(
    items: &'a [T],
    element: impl Fn(&T) -> &str,
    grp: &GroupData,
    path: &str,
) -> Result<Vec<&'a T>, SpecError> {
    let mut slots: Vec<Option<&T>> = vec![None; grp.order()];
    for (i, it) in items.iter().enumerate() {
        let g = grp
            .index_of(element(it))
            .ok_or_else(|| semantic(format!("{path}[{i}].element"), format!("unknown element {:?}", element(it))))?;
        if slots[g].replace(it).is_some() {
            return Err(semantic(format!("{path}[{i}].element"), format!("{} listed twice", grp.name(g))));
        }
    }
    let seen: BTreeSet<usize> = (0..grp.order()).filter(|&g| slots[g].is_some()).collect();
    if let Some(g) = grp.elements().find(|g| !seen.contains(g)) {
        return Err(semantic(path, format!("no entry for {}", grp.name(g))));
    }
    Ok(slots.into_iter().map(|s| s.expect("every element present")).collect())
}

fn build_action(blocks: &[ActionBlock], alg: &Algebra, grp: &GroupData) -> Result<AlgebraAction, SpecError> {
    let ordered = per_element(blocks, |b| b.element.as_str(), grp, "action")?;
    let vidx = index_map(alg.quiver().vertices(), "quiver.vertices")?;
    let na = alg.num_arrows();
    let mut images = Vec::with_capacity(grp.order());
    for (g, b) in ordered.iter().enumerate() {
        let path = format!("action[{}]", grp.name(g));
        if b.vertex_perm.len() != alg.num_vertices() {
            return Err(semantic(format!("{path}.vertex_perm"), "one image per vertex"));
        }
        let mut gens = Vec::with_capacity(alg.num_generators());
        for (v, w) in b.vertex_perm.iter().enumerate() {
            let w = lookup(&vidx, w, format!("{path}.vertex_perm[{v}]"))?;
            gens.push(alg.unit_vector(alg.vertex_element(w)));
        }
        for row in arrow_rows(&b.arrows, na, &format!("{path}.arrows"))? {
            gens.push(arrow_vector(alg, &row));
        }
        images.push(gens);
    }
    let act = AlgebraAction::from_generator_images(alg, &images);
    let report = check_action(alg, grp, &act, None);
    if let Some(c) = report.failures().next() {
        return Err(semantic("action", format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    Ok(act)
}

fn build_weights(h: &HopfBlock, alg: &Algebra, grp: &GroupData) -> Result<WeightData, SpecError> {
    let weights = h
        .weights
        .iter()
        .enumerate()
        .map(|(i, w)| grp.index_of(w).ok_or_else(|| semantic(format!("hopf.weights[{i}]"), format!("unknown element {w:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut wd = match &h.bimodule_structure {
        BimoduleStructure::Characters { values } => {
            WeightData::with_characters(grp.clone(), weights, values).map_err(|e| semantic("hopf.bimodule_structure", e))?
        }
        BimoduleStructure::Tables { left, right } => {
            let na = alg.num_arrows();
            let side = |tables: &[ArrowTable], key: &str| -> Result<Vec<Vec<ArrowCombination>>, SpecError> {
                let path = format!("hopf.bimodule_structure.{key}");
                per_element(tables, |t| t.element.as_str(), grp, &path)?
                    .into_iter()
                    .enumerate()
                    .map(|(g, t)| arrow_rows(&t.arrows, na, &format!("{path}[{}]", grp.name(g))))
                    .collect()
            };
            WeightData { group: grp.clone(), weights, left: side(left, "left")?, right: side(right, "right")?, antipode_sign: -1 }
        }
    };
    wd.antipode_sign = h.antipode_sign;
    Ok(wd)
}
