//! Finite groups as explicit multiplication tables.
//!
//! Elements are dense indices `0..n`. Every constructor in this module puts
//! the identity at index 0; [`FiniteGroup::from_table`] accepts any table and
//! locates the identity itself.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Serialize)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    names: Option<Vec<String>>,
}

/// Element names are cosmetic and ignored.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish()
    }
}

impl FiniteGroup {
    /// The cyclic group `Z_n` with `i * j = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let table = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i + j) % n))
            .collect();
        let inverses = (0..n).map(|i| (n - i) % n).collect();
        Ok(FiniteGroup {
            order: n,
            table,
            identity: 0,
            inverses,
            names: Some((0..n).map(|i| i.to_string()).collect()),
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("order 1 is valid")
    }

    /// Componentwise product. The pair `(i_a, i_b)` is stored at index
    /// `i_a * |b| + i_b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        let mut table = vec![0; n * n];
        for x in 0..n {
            let (xa, xb) = (x / nb, x % nb);
            for y in 0..n {
                let (ya, yb) = (y / nb, y % nb);
                table[x * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
            }
        }
        let inverses = (0..n)
            .map(|x| a.inv(x / nb) * nb + b.inv(x % nb))
            .collect();
        let names = (0..n)
            .map(|x| format!("({},{})", a.name(x / nb), b.name(x % nb)))
            .collect();
        FiniteGroup {
            order: n,
            table,
            identity: a.identity * nb + b.identity,
            inverses,
            names: Some(names),
        }
    }

    /// `Z2 x Z2`, elements indexed `g0 * 2 + g1`.
    pub fn z2xz2() -> Self {
        let z2 = Self::cyclic(2).expect("order 2 is valid");
        Self::direct_product(&z2, &z2)
    }

    /// Validate a multiplication table and build the group.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::TableShape {
                    row: i,
                    len: row.len(),
                    order: n,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::TableOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        order: n,
                    });
                }
                table.push(v);
            }
        }
        let m = |i: usize, j: usize| table[i * n + j];
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| m(e, i) == i && m(i, e) == i))
            .ok_or(Error::NoIdentity)?;
        let mut inverses = Vec::with_capacity(n);
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| m(i, j) == identity && m(j, i) == identity)
                .ok_or(Error::NoInverse(i))?;
            inverses.push(inv);
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if m(m(i, j), k) != m(i, m(j, k)) {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            table,
            identity,
            inverses,
            names: None,
        })
    }

    /// Parse `Z<n>` or products such as `Z2xZ2xZ3`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec.is_empty() {
            return Err(Error::Parse("empty group spec".into()));
        }
        let mut acc: Option<FiniteGroup> = None;
        for factor in spec.split(['x', 'X']) {
            let digits = factor
                .strip_prefix('Z')
                .or_else(|| factor.strip_prefix('z'))
                .ok_or_else(|| Error::Parse(format!("bad group factor `{factor}`")))?;
            let n: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad cyclic order `{digits}`")))?;
            let g = Self::cyclic(n)?;
            acc = Some(match acc {
                None => g,
                Some(prev) => Self::direct_product(&prev, &g),
            });
        }
        Ok(acc.expect("split yields at least one factor"))
    }

    /// Parse the text table format: first line `n`, then `n` rows of `n`
    /// whitespace-separated indices.
    pub fn from_table_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("missing order line".into()))?
            .parse()
            .map_err(|_| Error::Parse("bad order line".into()))?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("table has too few rows".into()))?;
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad table entry `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Self::from_table(&rows)
    }

    pub fn to_table_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|j| self.mul(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `a^{-1} b`, the ubiquitous argument pattern of the cocycle tensors.
    #[inline]
    pub fn ldiv(&self, a: usize, b: usize) -> usize {
        self.mul(self.inv(a), b)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(names) => names[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a >= self.order {
            return Err(Error::ElementOutOfRange {
                element: a,
                order: self.order,
            });
        }
        Ok(())
    }

    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        if subset.iter().any(|&a| a >= self.order) || !subset.contains(&self.identity) {
            return false;
        }
        subset.iter().all(|&a| {
            subset.contains(&self.inv(a)) && subset.iter().all(|&b| subset.contains(&self.mul(a, b)))
        })
    }

    /// The subgroup on `subset` as a standalone group (identity relabelled to
    /// 0, remaining elements in increasing order) together with the embedding
    /// into `self`.
    pub fn subgroup(&self, subset: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let mut elems: Vec<usize> = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if !self.is_subgroup(&elems) {
            return Err(Error::NotSubgroup(elems));
        }
        elems.retain(|&a| a != self.identity);
        elems.insert(0, self.identity);
        let pos = |a: usize| elems.iter().position(|&x| x == a).expect("closed");
        let rows: Vec<Vec<usize>> = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        let mut sub = FiniteGroup::from_table(&rows)?;
        sub.names = Some(elems.iter().map(|&a| self.name(a)).collect());
        Ok((sub, elems))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_small_cases() {
        assert!(matches!(FiniteGroup::cyclic(0), Err(Error::InvalidOrder(0))));
        assert_eq!(FiniteGroup::cyclic(1).unwrap().table_rows(), vec![vec![0]]);
        assert_eq!(
            FiniteGroup::cyclic(2).unwrap().table_rows(),
            vec![vec![0, 1], vec![1, 0]]
        );
        let z3 = FiniteGroup::cyclic(3).unwrap();
        for a in 1..3 {
            assert_ne!(z3.inv(a), a);
        }
    }

    #[test]
    fn product_encoding() {
        let v = FiniteGroup::z2xz2();
        assert_eq!(v.order(), 4);
        assert!(v.elements().all(|a| v.inv(a) == a));
        // a = (1,0) at index 2, b = (0,1) at index 1
        assert_eq!(v.mul(2, 1), 3);
        assert_eq!(v.name(2), "(1,0)");

        let g = FiniteGroup::cyclic(5).unwrap();
        let t = FiniteGroup::direct_product(&FiniteGroup::trivial(), &g);
        assert_eq!(t.table_rows(), g.table_rows());
    }

    #[test]
    fn z2_times_z3_is_z6() {
        let g = FiniteGroup::direct_product(
            &FiniteGroup::cyclic(2).unwrap(),
            &FiniteGroup::cyclic(3).unwrap(),
        );
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        // brute-force search for a generator, then check phi(k) = gen^k is an isomorphism from Z6
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let power = |x: usize, k: usize| (0..k).fold(g.identity(), |acc, _| g.mul(acc, x));
        let iso = g.elements().find_map(|x| {
            let phi: Vec<usize> = (0..6).map(|k| power(x, k)).collect();
            let bijective = {
                let mut s = phi.clone();
                s.sort_unstable();
                s.dedup();
                s.len() == 6
            };
            let hom = z6
                .elements()
                .all(|i| z6.elements().all(|j| phi[z6.mul(i, j)] == g.mul(phi[i], phi[j])));
            (bijective && hom).then_some(phi)
        });
        assert!(iso.is_some());
    }

    #[test]
    fn from_table_errors() {
        assert_eq!(
            FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap().table_rows(),
            FiniteGroup::cyclic(2).unwrap().table_rows()
        );
        assert_eq!(
            FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]]),
            Err(Error::NoInverse(1))
        );
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 1], vec![1, 2]]),
            Err(Error::TableOutOfRange { row: 1, col: 1, .. })
        ));
        // a Latin square of order 5 with identity and involutions only: a loop, not a group
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(&rows),
            Err(Error::NotAssociative(..))
        ));
    }

    #[test]
    fn invariants_for_constructors() {
        let groups = [
            FiniteGroup::trivial(),
            FiniteGroup::cyclic(4).unwrap(),
            FiniteGroup::z2xz2(),
            FiniteGroup::from_spec("Z2xZ3").unwrap(),
        ];
        for g in &groups {
            for i in g.elements() {
                for j in g.elements() {
                    assert_eq!(g.inv(g.mul(i, j)), g.mul(g.inv(j), g.inv(i)));
                }
            }
            let rebuilt = FiniteGroup::from_table(&g.table_rows()).unwrap();
            assert_eq!(rebuilt.table_rows(), g.table_rows());
            assert_eq!(rebuilt.identity(), g.identity());
        }
    }

    #[test]
    fn spec_and_text_formats() {
        assert_eq!(FiniteGroup::from_spec("Z2xZ2").unwrap(), FiniteGroup::z2xz2());
        assert!(FiniteGroup::from_spec("Q8").is_err());
        assert!(FiniteGroup::from_spec("Z0").is_err());
        let g = FiniteGroup::cyclic(3).unwrap();
        let parsed = FiniteGroup::from_table_text(&g.to_table_text()).unwrap();
        assert_eq!(parsed.table_rows(), g.table_rows());
    }

    #[test]
    fn subgroups() {
        let v = FiniteGroup::z2xz2();
        let (h, emb) = v.subgroup(&[1, 0]).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(emb, vec![0, 1]);
        assert!(v.subgroup(&[0, 1, 2]).is_err());
    }
}
