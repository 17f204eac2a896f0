//! Dense matrices over a prime field.

use std::fmt;

use crate::field::PrimeField;

/// Row-major dense matrix. Column `j` is the image of the `j`-th basis vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over F_{}", self.rows, self.cols, self.field.characteristic())?;
        for r in 0..self.rows.min(12) {
            let row: Vec<String> =
                self.row(r).iter().take(12).map(|&x| self.field.display(x)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Result of Gauss–Jordan elimination.
pub struct Rref {
    pub reduced: Mat,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(field: PrimeField, n: usize, c: u64) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u64,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c) % field.characteristic());
            }
        }
        Self { field, rows, cols, data }
    }

    /// Builds from signed integer rows, reducing modulo p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Self::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.data[i * columns.len() + j] = v;
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, v: u64) {
        let i = r * self.cols + c;
        self.data[i] = self.field.add(self.data[i], v);
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|r| (0..self.cols).all(|c| self.get(r, c) == u64::from(r == c)))
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|&&x| x != 0).count()
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = self.field.characteristic();
        let n = other.cols;
        let mut out = Mat::zeros(self.field, self.rows, n);
        // Products are below (p-1)^2, so this many fit in a u64 before reducing.
        let batch = ((u64::MAX / ((p - 1) * (p - 1))).saturating_sub(1)).max(1) as usize;
        let mut acc = vec![0u64; n];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut pending = 0usize;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (x, &b) in acc.iter_mut().zip(brow) {
                    *x += a * b;
                }
                pending += 1;
                if pending >= batch {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 1;
                }
            }
            let dst = &mut out.data[i * n..(i + 1) * n];
            for (d, &x) in dst.iter_mut().zip(&acc) {
                *d = x % p;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let p = self.field.characteristic();
        (0..self.rows)
            .map(|r| {
                let mut acc: u128 = 0;
                for (a, b) in self.row(r).iter().zip(v) {
                    acc += (*a as u128) * (*b as u128);
                }
                (acc % p as u128) as u64
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u64) -> Mat {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn add_scaled(&mut self, other: &Mat, c: u64) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(b, c));
        }
    }

    pub fn neg(&self) -> Mat {
        self.scale(self.field.neg(1))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    /// Kronecker product, with `self` indexing the slow coordinate.
    pub fn kron(&self, other: &Mat) -> Mat {
        let f = self.field;
        Mat::from_fn(f, self.rows * other.rows, self.cols * other.cols, |r, c| {
            f.mul(
                self.get(r / other.rows, c / other.cols),
                other.get(r % other.rows, c % other.cols),
            )
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_fn(self.field, rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]))
    }

    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]))
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                other.get(r, c - self.cols)
            }
        })
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(field: PrimeField, blocks: &[Mat]) -> Mat {
        let rows = blocks.iter().map(Mat::rows).sum();
        let cols = blocks.iter().map(Mat::cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        for r in 0..block.rows {
            let src = block.row(r);
            let start = (r0 + r) * self.cols + c0;
            self.data[start..start + block.cols].copy_from_slice(src);
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        Mat::from_fn(self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c))
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert!(self.is_square());
        let mut acc = Mat::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> u64 {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }

    /// Reduced row echelon form with pivot columns in increasing order.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(piv, row);
            let inv = f.inv(m.get(row, col));
            m.scale_row(row, inv);
            for r in 0..m.rows {
                if r != row {
                    let c = m.get(r, col);
                    if c != 0 {
                        m.row_axpy(r, row, f.neg(c));
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, c: u64) {
        let f = self.field;
        for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *x = f.mul(*x, c);
        }
    }

    /// row[dst] += c * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, c: u64) {
        let f = self.field;
        let n = self.cols;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * n);
            (&mut lo[dst * n..(dst + 1) * n], &hi[..n])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * n);
            (&mut hi[..n], &lo[src * n..(src + 1) * n])
        };
        for (x, &y) in a.iter_mut().zip(b) {
            if y != 0 {
                *x = f.add(*x, f.mul(c, y));
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel, as the columns of the returned matrix.
    pub fn nullspace(&self) -> Mat {
        let f = self.field;
        let Rref { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, f.neg(reduced.get(r, fc)));
            }
        }
        out
    }

    /// Indices of a maximal independent set of columns (greedy from the left).
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// Columns forming a basis of the column space.
    pub fn column_basis(&self) -> Mat {
        let piv = self.independent_columns();
        self.select_columns(&piv)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(self.field, n));
        let Rref { reduced, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(reduced.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Some `X` with `self * X = rhs`, if one exists.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows);
        let f = self.field;
        let aug = self.hstack(rhs);
        let Rref { reduced, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(f, self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, reduced.get(r, self.cols + c));
            }
        }
        Some(x)
    }

    /// A left inverse `C` with `C * self = I`, for a matrix of full column rank.
    pub fn left_inverse(&self) -> Option<Mat> {
        let t = self.transpose();
        let piv = t.independent_columns();
        if piv.len() != self.cols {
            return None;
        }
        let square = self.submatrix(&piv, &(0..self.cols).collect::<Vec<_>>());
        let inv = square.inverse()?;
        let mut out = Mat::zeros(self.field, self.cols, self.rows);
        for (k, &r) in piv.iter().enumerate() {
            for i in 0..self.cols {
                out.set(i, r, inv.get(i, k));
            }
        }
        Some(out)
    }

    pub fn is_nilpotent(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let mut m = self.clone();
        let mut rank = m.rank();
        loop {
            if rank == 0 {
                return true;
            }
            m = m.mul(self);
            let next = m.rank();
            if next == rank {
                return false;
            }
            rank = next;
        }
    }

    /// Characteristic polynomial `det(t - self)`, coefficients low to high.
    pub fn charpoly(&self) -> Vec<u64> {
        assert!(self.is_square());
        let f = self.field;
        let n = self.rows;
        let h = self.hessenberg();
        // p_k = char poly of leading k×k block of the Hessenberg form.
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 1..=n {
            let hk = h.get(k - 1, k - 1);
            // (t - h_kk) p_{k-1}
            let prev = &polys[k - 1];
            let mut cur = vec![0u64; k + 1];
            for (i, &c) in prev.iter().enumerate() {
                cur[i + 1] = f.add(cur[i + 1], c);
                cur[i] = f.sub(cur[i], f.mul(hk, c));
            }
            let mut prod = 1u64;
            for i in 1..k {
                prod = f.mul(prod, h.get(k - i, k - i - 1));
                let coeff = f.mul(prod, h.get(k - i - 1, k - 1));
                if coeff == 0 {
                    continue;
                }
                for (j, &c) in polys[k - i - 1].iter().enumerate() {
                    cur[j] = f.sub(cur[j], f.mul(coeff, c));
                }
            }
            polys.push(cur);
        }
        polys.pop().unwrap()
    }

    fn hessenberg(&self) -> Mat {
        let f = self.field;
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h.get(i, m - 1) != 0) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let inv = f.inv(h.get(m, m - 1));
            for i in m + 1..n {
                let u = f.mul(h.get(i, m - 1), inv);
                if u == 0 {
                    continue;
                }
                h.row_axpy(i, m, f.neg(u));
                for r in 0..n {
                    let v = f.add(h.get(r, m), f.mul(u, h.get(r, i)));
                    h.set(r, m, v);
                }
            }
        }
        h
    }

    /// Evaluates a polynomial (low to high coefficients) at this matrix.
    pub fn eval_poly(&self, coeffs: &[u64]) -> Mat {
        let n = self.rows;
        let mut acc = Mat::zeros(self.field, n, n);
        for &c in coeffs.iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                acc.add_at(i, i, c);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn inverse_and_solve() {
        let f = f7();
        let a = Mat::from_rows(f, &[vec![1, 2], vec![3, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let b = Mat::from_rows(f, &[vec![1], vec![0]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
    }

    #[test]
    fn nullspace_dimension() {
        let f = f7();
        let a = Mat::from_rows(f, &[vec![1, 2, 3], vec![2, 4, 6]]);
        let k = a.nullspace();
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn charpoly_matches_cayley_hamilton() {
        let f = PrimeField::new(257).unwrap();
        let a = Mat::from_fn(f, 5, 5, |r, c| ((r * 7 + c * 3 + r * c) % 11) as u64);
        let cp = a.charpoly();
        assert_eq!(cp.len(), 6);
        assert_eq!(cp[5], 1);
        assert!(a.eval_poly(&cp).is_zero());
    }

    #[test]
    fn left_inverse_recovers_coordinates() {
        let f = f7();
        let s = Mat::from_rows(f, &[vec![1, 0], vec![2, 1], vec![0, 3]]);
        let c = s.left_inverse().unwrap();
        assert!(c.mul(&s).is_identity());
    }

    #[test]
    fn nilpotency() {
        let f = f7();
        let n = Mat::from_rows(f, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert!(n.is_nilpotent());
        assert!(!Mat::identity(f, 2).is_nilpotent());
    }
}
