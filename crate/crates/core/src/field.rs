//! Prime fields with word-sized residues.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime field F_p for an odd prime `p < 2^31`.
///
/// Elements are plain `u64` residues in `0..p`; the field value only carries
/// the modulus so that every matrix and module knows where it lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::UnsupportedField(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero, which is always a logic error here.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    #[inline]
    pub fn div(&self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn from_u64(&self, v: u64) -> u64 {
        v % self.p
    }

    /// Integer `n` reduced into the field.
    pub fn from_usize(&self, n: usize) -> u64 {
        (n as u64) % self.p
    }

    /// Residue printed in the balanced range, so `p - 1` shows as `-1`.
    pub fn display(&self, a: u64) -> String {
        if a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }

    /// A primitive `n`-th root of unity, if `n` divides `p - 1`.
    pub fn root_of_unity(&self, n: u64) -> Option<u64> {
        if n == 0 || !(self.p - 1).is_multiple_of(n) {
            return None;
        }
        let g = self.primitive_root();
        Some(self.pow(g, (self.p - 1) / n))
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let order = self.p - 1;
        let factors = prime_factors(order);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, order / q) != 1))
            .unwrap_or(1)
    }

    /// Square-and-multiply check for `n`-th powers, valid for `n | p - 1`.
    pub fn nth_root(&self, a: u64, n: u64) -> Option<u64> {
        if a == 0 {
            return Some(0);
        }
        (1..self.p).find(|&x| self.pow(x, n) == a)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 4 * max_dim`.
///
/// Such a prime contains all `exponent`-th roots of unity, so group algebras
/// of groups with that exponent split.
pub fn suggest_prime(exponent: u64, max_dim: u64) -> u64 {
    let exponent = exponent.max(1);
    let mut p = 4 * max_dim + 1;
    loop {
        if p > 2 && (p - 1).is_multiple_of(exponent) && is_prime(p) {
            return p;
        }
        p += 1;
    }
}
