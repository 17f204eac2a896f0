//! Smith normal form over the integers with explicit transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense integer matrix as a list of rows.
pub type IntMatrix = Vec<Vec<BigInt>>;

/// `left · input · right = diagonal`, with `left` and `right` products of
/// elementary integer operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub diagonal: IntMatrix,
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub divisors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// Recomputes `left · input · right` and compares it with `diagonal`.
    pub fn verify(&self, input: &IntMatrix) -> bool {
        mul(&mul(&self.left, input), &self.right) == self.diagonal
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

/// Product that skips zero entries of the left factor.
pub fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![BigInt::zero(); cols];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(&b[k]) {
                    if !y.is_zero() {
                        *o += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

/// Smallest nonzero entry in absolute value with both indices at least `t`.
fn min_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in d.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < d[bi][bj].abs()) {
                best = Some((i, j));
                if x.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn add_row_multiple(m: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    let (src, dst) = if source < target {
        let (lo, hi) = m.split_at_mut(target);
        (&lo[source], &mut hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(source);
        (&hi[0], &mut lo[target])
    };
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += q * s;
        }
    }
}

fn add_col_multiple(m: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    for row in m.iter_mut() {
        if !row[source].is_zero() {
            let v = q * &row[source];
            row[target] += v;
        }
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Minimal-pivot elimination with full reduction of each pivot row and
/// column, then a divisibility fix-up before moving on.
pub fn smith_normal_form(input: &IntMatrix) -> SmithForm {
    let rows = input.len();
    let cols = input.first().map_or(0, Vec::len);
    let mut d = input.clone();
    let mut left = identity(rows);
    let mut right = identity(cols);
    let mut divisors = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let Some((i, j)) = min_pivot(&d, t) else {
                return finish(left, right, d, divisors);
            };
            d.swap(t, i);
            left.swap(t, i);
            swap_cols(&mut d, t, j);
            swap_cols(&mut right, t, j);

            let mut clean = true;
            for i in t + 1..rows {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = -d[i][t].div_floor(&d[t][t]);
                add_row_multiple(&mut d, i, t, &q);
                add_row_multiple(&mut left, i, t, &q);
                clean &= d[i][t].is_zero();
            }
            for j in t + 1..cols {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = -d[t][j].div_floor(&d[t][t]);
                add_col_multiple(&mut d, j, t, &q);
                add_col_multiple(&mut right, j, t, &q);
                clean &= d[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // A remaining entry not divisible by the pivot is pulled into row t.
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[i][j].is_multiple_of(&d[t][t])));
            if let Some(i) = bad {
                let one = BigInt::one();
                add_row_multiple(&mut d, t, i, &one);
                add_row_multiple(&mut left, t, i, &one);
                continue;
            }
            if d[t][t].is_negative() {
                for x in d[t].iter_mut().chain(left[t].iter_mut()) {
                    *x = -&*x;
                }
            }
            divisors.push(d[t][t].clone());
            break;
        }
    }
    finish(left, right, d, divisors)
}

fn finish(left: IntMatrix, right: IntMatrix, diagonal: IntMatrix, divisors: Vec<BigInt>) -> SmithForm {
    SmithForm { left, right, diagonal, divisors }
}
