//! Finite groups given by multiplication tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group with elements `0..order`; `table[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupData {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupData {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidGroup("the empty group is not allowed".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGroup(format!("table must be {n}x{n}")));
        }
        if let Some((a, b)) = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| table[a][b] >= n)
        {
            return Err(Error::InvalidGroup(format!(
                "product of {} and {} is out of range",
                names[a], names[b]
            )));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails on ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("{} has no inverse", names[a])))?;
            inverse.push(inv);
        }
        Ok(Self { names, table, identity, inverse })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// ℤ/n with generator named `w` (and `1` for the identity).
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "w".to_string(),
                _ => format!("w{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(names, table).expect("cyclic table is a group")
    }

    /// Direct product; element `(a, b)` has index `a * |H| + b`.
    pub fn product(&self, other: &GroupData) -> Self {
        let m = other.order();
        let n = self.order() * m;
        let names = (0..n)
            .map(|k| format!("({},{})", self.names[k / m], other.names[k % m]))
            .collect();
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        Self::from_table(names, table).expect("product of groups is a group")
    }

    /// Group generated by permutations of `0..degree`, elements sorted.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Self {
        let degree = generators.first().map_or(0, Vec::len);
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id];
        let mut frontier = 0;
        while frontier < elems.len() {
            let x = elems[frontier].clone();
            frontier += 1;
            for g in generators {
                let y: Vec<usize> = (0..degree).map(|i| g[x[i]]).collect();
                if !elems.contains(&y) {
                    elems.push(y);
                }
            }
        }
        elems.sort();
        let idx = |p: &Vec<usize>| elems.iter().position(|q| q == p).unwrap();
        let names = elems
            .iter()
            .map(|p| p.iter().map(|i| (i + 1).to_string()).collect::<String>())
            .collect();
        // (a·b)(i) = a(b(i)): apply b first.
        let table = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| idx(&(0..degree).map(|i| a[b[i]]).collect()))
                    .collect()
            })
            .collect();
        Self::from_table(names, table).expect("permutation group")
    }

    pub fn symmetric3() -> Self {
        Self::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]])
    }

    pub fn klein_four() -> Self {
        Self::cyclic(2).product(&Self::cyclic(2))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order()
    }

    /// g h g⁻¹
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_associative() {
        // A Latin square with identity 0 that is not associative.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let names = (0..5).map(|i| i.to_string()).collect();
        let err = GroupData::from_table(names, t).unwrap_err();
        assert!(err.to_string().contains("associativity"));
    }

    #[test]
    fn standard_groups() {
        let s3 = GroupData::symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.exponent(), 6);
        let v = GroupData::klein_four();
        assert!(v.is_abelian());
        assert_eq!(v.exponent(), 2);
        assert_eq!(GroupData::cyclic(3).inv(1), 2);
    }
}
