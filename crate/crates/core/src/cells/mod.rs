//! Indecomposable 1-morphisms as symbols, their products, cells and adjoints.
//!
//! The plain setting has the identity and the classes `A e_g ⊗ e_1 A`. The
//! extended setting works over `Â = A × A_0` with `A_0 = kQ_0` and adds the
//! mixed classes whose factors come from `A_0`. Products are read off the
//! block dimensions `dim ê_k Â ê_h`; the bimodule engine is only an oracle.

mod hat;
mod oracle;

use std::collections::BTreeMap;

use serde::Serialize;

pub use hat::hat_algebra;
pub use oracle::{check_adjunctions, check_h0_simplicity, check_oracle, check_vec_g, tensor_oracle, VecGReport};

use crate::algebra::{is_self_injective, Algebra, AlgebraAction, GroupData};
use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// Which factor of `Â` a tensor factor comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    /// The semisimple factor `A_0`.
    Zero,
    /// `A` itself.
    One,
}

impl Side {
    fn digit(self) -> char {
        match self {
            Side::Zero => '0',
            Side::One => '1',
        }
    }
}

/// An isomorphism class of indecomposable 1-morphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SymClass {
    /// The unit `(A, π_1)`.
    Identity,
    /// `Â ê_g ⊗ ê_1 Â` with the given factor sides.
    Proj { left: Side, right: Side, g: usize },
}

impl SymClass {
    pub fn proj(g: usize) -> Self {
        SymClass::Proj { left: Side::One, right: Side::One, g }
    }

    pub fn left_side(&self) -> Side {
        match self {
            SymClass::Identity => Side::One,
            SymClass::Proj { left, .. } => *left,
        }
    }

    pub fn right_side(&self) -> Side {
        match self {
            SymClass::Identity => Side::One,
            SymClass::Proj { right, .. } => *right,
        }
    }
}

/// A formal non-negative combination of classes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FormalMorph(pub BTreeMap<SymClass, usize>);

impl FormalMorph {
    pub fn single(c: SymClass) -> Self {
        let mut m = BTreeMap::new();
        m.insert(c, 1);
        Self(m)
    }

    pub fn add(&mut self, c: SymClass, k: usize) {
        if k > 0 {
            *self.0.entry(c).or_insert(0) += k;
        }
    }

    pub fn multiplicity(&self, c: &SymClass) -> usize {
        self.0.get(c).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &SymClass> {
        self.0.keys()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Config {
    Plain,
    Tilde,
}

/// The algebra the classes live over, with its group action.
///
/// In the tilde configuration `algebra` is `Â`, whose vertices are those of
/// `A` followed by one `A_0` vertex per group element.
#[derive(Clone, Debug)]
pub struct CellContext {
    pub config: Config,
    pub group: GroupData,
    pub base: Algebra,
    pub algebra: Algebra,
    pub action: AlgebraAction,
    blocks: Vec<Vec<usize>>,
    nakayama: Option<Vec<usize>>,
}

impl CellContext {
    /// Vertices of `alg` must be indexed by group elements with `h` sending
    /// `e_g` to `e_{gh⁻¹}`.
    pub fn new(config: Config, alg: &Algebra, act: &AlgebraAction, grp: &GroupData) -> Result<Self> {
        let n = grp.order();
        if alg.num_vertices() != n {
            return Err(Error::InvalidGroup(format!("{} vertices for a group of order {n}", alg.num_vertices())));
        }
        for h in grp.elements() {
            for g in grp.elements() {
                if act.vertex_image(alg, h, g) != Some(grp.mul(g, grp.inv(h))) {
                    return Err(Error::InvalidGroup("the action on vertices is not the regular one".into()));
                }
            }
        }
        let (algebra, action) = match config {
            Config::Plain => (alg.clone(), act.clone()),
            Config::Tilde => hat_algebra(alg, act, grp)?,
        };
        let blocks = algebra.block_dims();
        let nakayama = is_self_injective(alg).nu;
        Ok(Self { config, group: grp.clone(), base: alg.clone(), algebra, action, blocks, nakayama })
    }

    pub fn vertex(&self, side: Side, g: usize) -> usize {
        match side {
            Side::One => g,
            Side::Zero => self.group.order() + g,
        }
    }

    pub fn classes(&self) -> Vec<SymClass> {
        let sides: &[Side] = match self.config {
            Config::Plain => &[Side::One],
            Config::Tilde => &[Side::One, Side::Zero],
        };
        let mut out = vec![SymClass::Identity];
        for &left in sides {
            for &right in sides {
                out.extend(self.group.elements().map(|g| SymClass::Proj { left, right, g }));
            }
        }
        out
    }

    pub fn label(&self, c: &SymClass) -> String {
        match (c, self.config) {
            (SymClass::Identity, _) => "1".into(),
            (SymClass::Proj { g, .. }, Config::Plain) => format!("P({})", self.group.name(*g)),
            (SymClass::Proj { left, right, g }, Config::Tilde) => {
                format!("S{}{}({})", left.digit(), right.digit(), self.group.name(*g))
            }
        }
    }

    /// `a ⊗ b`, or `None` when the middle factors differ.
    ///
    /// `P(i,j,g) ⊗ P(j,l,h) = Σ_k dim(ê_k Â_j ê_h) · P(i,l,gk)`.
    pub fn tensor_symbolic(&self, a: &SymClass, b: &SymClass) -> Option<FormalMorph> {
        if a.right_side() != b.left_side() {
            return None;
        }
        match (a, b) {
            (SymClass::Identity, x) | (x, SymClass::Identity) => Some(FormalMorph::single(*x)),
            (SymClass::Proj { left, right, g }, SymClass::Proj { right: r2, g: h, .. }) => {
                let mut out = FormalMorph::default();
                for k in self.group.elements() {
                    let mult = self.blocks[self.vertex(*right, k)][self.vertex(*right, *h)];
                    out.add(SymClass::Proj { left: *left, right: *r2, g: self.group.mul(*g, k) }, mult);
                }
                Some(out)
            }
        }
    }

    /// Linear extension of [`Self::tensor_symbolic`]; incomposable pairs contribute nothing.
    pub fn tensor_formal(&self, a: &FormalMorph, b: &FormalMorph) -> FormalMorph {
        let mut out = FormalMorph::default();
        for (x, &m) in &a.0 {
            for (y, &n) in &b.0 {
                if let Some(p) = self.tensor_symbolic(x, y) {
                    for (z, &k) in &p.0 {
                        out.add(*z, m * n * k);
                    }
                }
            }
        }
        out
    }

    pub fn nakayama(&self) -> Result<&[usize]> {
        self.nakayama.as_deref().ok_or_else(|| Error::NotSelfInjective("the algebra is not self-injective".into()))
    }

    /// The right adjoint class, from `ν(1)`.
    pub fn right_adjoint(&self, x: &SymClass) -> Result<SymClass> {
        let grp = &self.group;
        let nu1 = self.nakayama()?[grp.identity()];
        Ok(match *x {
            SymClass::Identity => SymClass::Identity,
            SymClass::Proj { left, right, g } => {
                let gi = grp.inv(g);
                let shifted = grp.mul(nu1, gi);
                match (left, right) {
                    (Side::One, Side::One) => SymClass::Proj { left, right, g: shifted },
                    (Side::Zero, Side::One) => SymClass::Proj { left: Side::One, right: Side::Zero, g: shifted },
                    (Side::One, Side::Zero) => SymClass::Proj { left: Side::Zero, right: Side::One, g: gi },
                    (Side::Zero, Side::Zero) => SymClass::Proj { left, right, g: gi },
                }
            }
        })
    }

    /// `ν(g) = ν(1)g` for all `g`, and the double adjoint on every class.
    pub fn check_nakayama_shift(&self) -> Result<ValidationReport> {
        let grp = &self.group;
        let nu = self.nakayama()?;
        let mut report = ValidationReport::new();
        let bad = grp.elements().find(|&g| nu[g] != grp.mul(nu[grp.identity()], g));
        report.record("ν(g) = ν(1)g", bad.map(|g| format!("fails at {}", grp.name(g))));
        let nu1 = nu[grp.identity()];
        let central = grp.elements().all(|g| grp.mul(nu1, g) == grp.mul(g, nu1));
        let involutive = grp.mul(nu1, nu1) == grp.identity() && central;
        // Mixed classes pick up ν(1) once per round trip; the others return
        // home exactly when ν(1) is central of order at most two.
        let mut moved = Vec::new();
        let mut mixed = Vec::new();
        for c in self.classes() {
            let twice = self.right_adjoint(&self.right_adjoint(&c)?)?;
            if twice != c {
                let entry = format!("{} ↦ {}", self.label(&c), self.label(&twice));
                if c.left_side() == c.right_side() {
                    moved.push(entry);
                } else {
                    mixed.push(entry);
                }
            }
        }
        if involutive {
            report.record("double adjoint fixes S11 and S00 classes", (!moved.is_empty()).then(|| moved.join(", ")));
        } else {
            report.note("double adjoint shift", if moved.is_empty() { "none".into() } else { moved.join(", ") });
        }
        if !mixed.is_empty() {
            report.note("double adjoint shift on mixed classes", mixed.join(", "));
        }
        Ok(report)
    }

    pub fn cell_structure(&self) -> CellStructure {
        let classes = self.classes();
        let n = classes.len();
        let mut left = vec![vec![false; n]; n];
        let mut right = vec![vec![false; n]; n];
        for (i, x) in classes.iter().enumerate() {
            left[i][i] = true;
            right[i][i] = true;
            for z in &classes {
                if let Some(p) = self.tensor_symbolic(z, x) {
                    for y in p.support() {
                        left[i][index_of(&classes, y)] = true;
                    }
                }
                if let Some(p) = self.tensor_symbolic(x, z) {
                    for y in p.support() {
                        right[i][index_of(&classes, y)] = true;
                    }
                }
            }
        }
        let mut two = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                two[i][j] = left[i][j] || right[i][j];
            }
        }
        let left = transitive_closure(left);
        let right = transitive_closure(right);
        let two = transitive_closure(two);
        let left_cells = components(&left);
        let right_cells = components(&right);
        let two_sided_cells = components(&two);
        let mut h_cells = Vec::new();
        for l in &left_cells {
            for r in &right_cells {
                let both: Vec<usize> = l.iter().copied().filter(|x| r.contains(x)).collect();
                if !both.is_empty() {
                    h_cells.push(both);
                }
            }
        }
        h_cells.sort();
        CellStructure { classes, left, right, two_sided: two, left_cells, right_cells, two_sided_cells, h_cells }
    }

    /// Matrices `[mult of c' in x ⊗ c]` over a left cell, one per class `x`.
    pub fn cell_module(&self, cell: &[SymClass]) -> CellModule {
        let matrices = self
            .classes()
            .into_iter()
            .map(|x| {
                let m = cell
                    .iter()
                    .map(|c2| {
                        cell.iter()
                            .map(|c| self.tensor_symbolic(&x, c).map_or(0, |p| p.multiplicity(c2)))
                            .collect()
                    })
                    .collect();
                (x, m)
            })
            .collect();
        CellModule { cell: cell.to_vec(), matrices }
    }

    /// Each cell-module matrix of `x ⊗ y` is the product of those of `x` and `y`.
    pub fn check_cell_module(&self, module: &CellModule) -> ValidationReport {
        let mut report = ValidationReport::new();
        let k = module.cell.len();
        let matrix_of = |f: &FormalMorph| -> Vec<Vec<usize>> {
            let mut out = vec![vec![0; k]; k];
            for (z, &m) in &f.0 {
                let mz = &module.matrices.iter().find(|(c, _)| c == z).expect("class listed").1;
                for r in 0..k {
                    for c in 0..k {
                        out[r][c] += m * mz[r][c];
                    }
                }
            }
            out
        };
        let mut witness = None;
        for (x, mx) in &module.matrices {
            for (y, my) in &module.matrices {
                let xy = self.tensor_symbolic(x, y).unwrap_or_default();
                let product: Vec<Vec<usize>> = (0..k)
                    .map(|r| (0..k).map(|c| (0..k).map(|j| mx[r][j] * my[j][c]).sum()).collect())
                    .collect();
                // Classes outside the cell's two-sided ideal act by zero on it.
                if matrix_of(&xy) != product && witness.is_none() {
                    witness = Some(format!("{} ⊗ {}", self.label(x), self.label(y)));
                }
            }
        }
        report.record("cell module respects products", witness);
        report
    }
}

/// Preorders as reachability matrices (`[x][y]`: `y` is reachable from `x`)
/// and the resulting cells, as indices into `classes`.
#[derive(Clone, Debug, Serialize)]
pub struct CellStructure {
    pub classes: Vec<SymClass>,
    pub left: Vec<Vec<bool>>,
    pub right: Vec<Vec<bool>>,
    pub two_sided: Vec<Vec<bool>>,
    pub left_cells: Vec<Vec<usize>>,
    pub right_cells: Vec<Vec<usize>>,
    pub two_sided_cells: Vec<Vec<usize>>,
    pub h_cells: Vec<Vec<usize>>,
}

impl CellStructure {
    pub fn cell_classes(&self, cell: &[usize]) -> Vec<SymClass> {
        cell.iter().map(|&i| self.classes[i]).collect()
    }

    /// Cells partition the classes, and each two-sided cell is a union of ℋ-cells.
    pub fn check(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let n = self.classes.len();
        for (name, cells) in [
            ("left cells partition", &self.left_cells),
            ("right cells partition", &self.right_cells),
            ("two-sided cells partition", &self.two_sided_cells),
            ("ℋ-cells partition", &self.h_cells),
        ] {
            let mut seen = vec![0; n];
            for c in cells {
                for &i in c {
                    seen[i] += 1;
                }
            }
            report.record(name, seen.iter().any(|&s| s != 1).then(|| "a class is missing or repeated".to_string()));
        }
        let unions = self
            .two_sided_cells
            .iter()
            .all(|j| self.h_cells.iter().all(|h| h.iter().all(|x| j.contains(x)) || h.iter().all(|x| !j.contains(x))));
        report.record("two-sided cells are unions of ℋ-cells", (!unions).then(|| "an ℋ-cell straddles".to_string()));
        report
    }

    /// Whether two-sided cell `a` lies strictly below `b`.
    pub fn strictly_below(&self, a: usize, b: usize) -> bool {
        let x = self.two_sided_cells[a][0];
        let y = self.two_sided_cells[b][0];
        self.two_sided[x][y] && !self.two_sided[y][x]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CellModule {
    pub cell: Vec<SymClass>,
    pub matrices: Vec<(SymClass, Vec<Vec<usize>>)>,
}

fn index_of(classes: &[SymClass], c: &SymClass) -> usize {
    classes.iter().position(|x| x == c).expect("products stay among the listed classes")
}

fn transitive_closure(mut r: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    let n = r.len();
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

/// Classes of mutual reachability, each sorted, ordered by first member.
fn components(r: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = r.len();
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        let comp: Vec<usize> = (0..n).filter(|&j| r[i][j] && r[j][i]).collect();
        for &j in &comp {
            assigned[j] = true;
        }
        out.push(comp);
    }
    out
}
