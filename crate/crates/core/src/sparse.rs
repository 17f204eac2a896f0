//! Incremental sparse row reduction.
//!
//! Used for large, very sparse linear systems: coequalizer relations of
//! tensor products and intertwiner equations of hom spaces. Once finished,
//! the echelon is fully reduced, so the set of free columns and the reduced
//! form of any vector depend only on the row space, never on insertion order.

use crate::field::PrimeField;

pub type SparseVec = Vec<(usize, u64)>;

#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
    reduced: bool,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Self { field, ncols, rows: Vec::new(), pivot_row: vec![None; ncols], reduced: true }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Reduces `dense` in place against the current rows (ascending sweep).
    fn sweep(&self, dense: &mut [u64]) {
        let f = self.field;
        for c in 0..self.ncols {
            let v = dense[c];
            if v == 0 {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let neg = f.neg(v);
                for &(j, x) in &self.rows[r] {
                    dense[j] = f.add(dense[j], f.mul(neg, x));
                }
            }
        }
    }

    /// Adds a vector to the row space. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: &[(usize, u64)]) -> bool {
        let mut dense = vec![0u64; self.ncols];
        for &(j, x) in v {
            dense[j] = self.field.add(dense[j], x);
        }
        self.insert_dense(dense)
    }

    pub fn insert_dense(&mut self, mut dense: Vec<u64>) -> bool {
        self.sweep(&mut dense);
        let Some(lead) = dense.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(dense[lead]);
        let row: SparseVec = dense
            .iter()
            .enumerate()
            .skip(lead)
            .filter(|(_, &x)| x != 0)
            .map(|(j, &x)| (j, f.mul(x, inv)))
            .collect();
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(row);
        self.reduced = false;
        true
    }

    /// Back-substitutes so no row has a nonzero entry in another row's pivot column.
    pub fn finish(&mut self) {
        if self.reduced {
            return;
        }
        let f = self.field;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r][0].0));
        let mut dense = vec![0u64; self.ncols];
        for &r in &order {
            let pivot = self.rows[r][0].0;
            if self.rows[r].iter().skip(1).all(|&(j, _)| self.pivot_row[j].is_none()) {
                continue;
            }
            for &(j, x) in &self.rows[r] {
                dense[j] = x;
            }
            for c in pivot + 1..self.ncols {
                let v = dense[c];
                if v == 0 {
                    continue;
                }
                if let Some(pr) = self.pivot_row[c] {
                    let neg = f.neg(v);
                    for &(j, x) in &self.rows[pr] {
                        dense[j] = f.add(dense[j], f.mul(neg, x));
                    }
                }
            }
            let row: SparseVec = (pivot..self.ncols)
                .filter(|&j| dense[j] != 0)
                .map(|j| (j, dense[j]))
                .collect();
            for &(j, _) in &row {
                dense[j] = 0;
            }
            self.rows[r] = row;
        }
        self.reduced = true;
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    /// Reduced form of `dense`; entries survive only on free columns.
    pub fn reduce(&self, dense: &mut [u64]) {
        debug_assert!(self.reduced, "echelon must be finished before reducing");
        let f = self.field;
        let touched: Vec<(usize, u64)> = dense
            .iter()
            .enumerate()
            .filter(|(c, &v)| v != 0 && self.pivot_row[*c].is_some())
            .map(|(c, &v)| (c, v))
            .collect();
        for (c, v) in touched {
            let r = self.pivot_row[c].unwrap();
            let neg = f.neg(v);
            for &(j, x) in &self.rows[r] {
                dense[j] = f.add(dense[j], f.mul(neg, x));
            }
        }
    }

    pub fn contains(&self, v: &[(usize, u64)]) -> bool {
        let mut dense = vec![0u64; self.ncols];
        for &(j, x) in v {
            dense[j] = self.field.add(dense[j], x);
        }
        self.sweep(&mut dense);
        dense.iter().all(|&x| x == 0)
    }

    /// Basis of the solution space of `row · x = 0` for all rows, one sparse
    /// vector per free column.
    pub fn nullspace(&mut self) -> Vec<SparseVec> {
        self.finish();
        let f = self.field;
        let free = self.free_columns();
        let mut col_index = vec![usize::MAX; self.ncols];
        for (k, &c) in free.iter().enumerate() {
            col_index[c] = k;
        }
        let mut out: Vec<SparseVec> = free.iter().map(|&c| vec![(c, 1)]).collect();
        for row in &self.rows {
            let pivot = row[0].0;
            for &(j, x) in row.iter().skip(1) {
                let k = col_index[j];
                debug_assert!(k != usize::MAX);
                out[k].push((pivot, f.neg(x)));
            }
        }
        for v in &mut out {
            v.sort_unstable_by_key(|e| e.0);
        }
        out
    }
}

/// A quotient of `F^n` by the span of a relation set, with coordinates on
/// the free columns of the reduced echelon form.
#[derive(Clone, Debug)]
pub struct Quotient {
    echelon: Echelon,
    basis: Vec<usize>,
    coord: Vec<Option<usize>>,
}

impl Quotient {
    pub fn new(mut echelon: Echelon) -> Self {
        echelon.finish();
        let basis = echelon.free_columns();
        let mut coord = vec![None; echelon.ncols()];
        for (k, &c) in basis.iter().enumerate() {
            coord[c] = Some(k);
        }
        Self { echelon, basis, coord }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.echelon.ncols()
    }

    /// Ambient column representing quotient basis vector `k`.
    pub fn representative(&self, k: usize) -> usize {
        self.basis[k]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.basis
    }

    /// Quotient coordinates of an ambient vector given in dense form.
    pub fn project_dense(&self, mut dense: Vec<u64>) -> Vec<u64> {
        self.echelon.reduce(&mut dense);
        self.basis.iter().map(|&c| dense[c]).collect()
    }

    pub fn project(&self, v: &[(usize, u64)]) -> Vec<u64> {
        let f = self.echelon.field;
        let mut dense = vec![0u64; self.ambient_dim()];
        for &(j, x) in v {
            dense[j] = f.add(dense[j], x);
        }
        self.project_dense(dense)
    }

    /// Coordinate of ambient column `c` if it is itself a basis vector.
    pub fn coordinate_of(&self, c: usize) -> Option<usize> {
        self.coord[c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_is_order_independent() {
        let f = PrimeField::new(11).unwrap();
        let rels = [vec![(0, 1), (2, 10)], vec![(1, 1), (2, 1)], vec![(0, 2), (1, 2)]];
        let mut a = Echelon::new(f, 4);
        for r in &rels {
            a.insert(r);
        }
        let mut b = Echelon::new(f, 4);
        for r in rels.iter().rev() {
            b.insert(r);
        }
        let qa = Quotient::new(a);
        let qb = Quotient::new(b);
        assert_eq!(qa.representatives(), qb.representatives());
        let v = vec![(0, 3), (1, 5), (3, 2)];
        assert_eq!(qa.project(&v), qb.project(&v));
    }

    #[test]
    fn nullspace_solves() {
        let f = PrimeField::new(7).unwrap();
        let mut e = Echelon::new(f, 3);
        e.insert(&[(0, 1), (1, 2)]);
        e.insert(&[(1, 1), (2, 3)]);
        let ns = e.nullspace();
        assert_eq!(ns.len(), 1);
        let x = &ns[0];
        let dot = |row: &[(usize, u64)]| {
            row.iter().fold(0, |acc, &(j, c)| {
                let xv = x.iter().find(|e| e.0 == j).map_or(0, |e| e.1);
                f.add(acc, f.mul(c, xv))
            })
        };
        assert_eq!(dot(&[(0, 1), (1, 2)]), 0);
        assert_eq!(dot(&[(1, 1), (2, 3)]), 0);
    }
}
