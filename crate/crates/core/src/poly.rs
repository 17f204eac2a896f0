//! Univariate polynomials over F_p, enough to find roots.
//!
//! Coefficient vectors run from the constant term upward and carry no
//! trailing zeros after `trim`.

use crate::field::PrimeField;

pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&x| x != 0)
}

pub fn mul(f: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

pub fn sub(f: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(out)
}

pub fn rem(f: PrimeField, a: &[u64], m: &[u64]) -> Vec<u64> {
    let dm = degree(m).expect("division by zero polynomial");
    let lead_inv = f.inv(m[dm]);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        let shift = dr - dm;
        for (i, &x) in m.iter().enumerate().take(dm + 1) {
            r[i + shift] = f.sub(r[i + shift], f.mul(c, x));
        }
        r = trim(r);
    }
    r
}

pub fn monic(f: PrimeField, a: &[u64]) -> Vec<u64> {
    let a = trim(a.to_vec());
    match a.last() {
        None => a,
        Some(&lead) => {
            let inv = f.inv(lead);
            a.iter().map(|&x| f.mul(x, inv)).collect()
        }
    }
}

pub fn gcd(f: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// `base^e mod m`.
pub fn powmod(f: PrimeField, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &b), m);
        }
        e >>= 1;
        if e > 0 {
            b = rem(f, &mul(f, &b, &b), m);
        }
    }
    acc
}

fn div_exact(f: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let db = degree(b).unwrap();
    let inv = f.inv(b[db]);
    let mut r = trim(a.to_vec());
    let mut q = vec![0u64; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], inv);
        q[dr - db] = c;
        for (i, &x) in b.iter().enumerate().take(db + 1) {
            r[i + dr - db] = f.sub(r[i + dr - db], f.mul(c, x));
        }
        r = trim(r);
    }
    trim(q)
}

/// Distinct roots in F_p, sorted ascending.
pub fn roots(f: PrimeField, a: &[u64]) -> Vec<u64> {
    let a = monic(f, a);
    if degree(&a).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let p = f.characteristic();
    // Split off the product of (t - r) over all roots r.
    let xp = powmod(f, &[0, 1], p, &a);
    let split = gcd(f, &a, &sub(f, &xp, &[0, 1]));
    let mut out = Vec::new();
    let mut stack = vec![split];
    let mut shift = 0u64;
    while let Some(g) = stack.pop() {
        match degree(&g) {
            None | Some(0) => {}
            Some(1) => out.push(f.neg(g[0])),
            Some(_) => {
                // Equal-degree splitting with (t + s)^((p-1)/2) - 1, s deterministic.
                loop {
                    shift += 1;
                    let h = powmod(f, &[shift % p, 1], (p - 1) / 2, &g);
                    let d = gcd(f, &g, &sub(f, &h, &[1]));
                    let dd = degree(&d).unwrap_or(0);
                    if dd > 0 && dd < degree(&g).unwrap() {
                        let other = div_exact(f, &g, &d);
                        stack.push(monic(f, &other));
                        stack.push(d);
                        break;
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_all_roots() {
        let f = PrimeField::new(257).unwrap();
        // (t-3)(t-5)(t-200)^2 (t^2 + 1 has roots since 257 ≡ 1 mod 4)
        let mut poly = vec![1u64];
        for r in [3u64, 5, 200, 200] {
            poly = mul(f, &poly, &[f.neg(r), 1]);
        }
        poly = mul(f, &poly, &[1, 0, 1]);
        let rs = roots(f, &poly);
        let i = f.root_of_unity(4).unwrap();
        let mut expect = vec![3, 5, 200, i, f.neg(i)];
        expect.sort_unstable();
        assert_eq!(rs, expect);
    }

    #[test]
    fn irreducible_has_no_roots() {
        let f = PrimeField::new(7).unwrap();
        // t^2 + 1 is irreducible mod 7
        assert!(roots(f, &[1, 0, 1]).is_empty());
    }
}
