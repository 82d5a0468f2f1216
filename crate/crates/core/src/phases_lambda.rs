//! Symmetric phases under an anomalous symmetry: G-sets of ground states and
//! the mixed cocycle equation `δ_X Λ = ω`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::cochain::Cochain;
use crate::cohomology::{coboundary_equivalent, default_search_modulus};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::guard;
use crate::snf::ModSmith;

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GSet {
    group: FiniteGroup,
    size: usize,
    /// `action[g·size + x] = g·x`.
    action: Vec<usize>,
}

impl GSet {
    pub fn new(group: &FiniteGroup, size: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidAction("empty set".into()));
        }
        let action: Vec<usize> = (0..group.order())
            .flat_map(|g| (0..size).map(move |x| (g, x)))
            .map(|(g, x)| f(g, x))
            .collect();
        let s = GSet {
            group: group.clone(),
            size,
            action,
        };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        let g = &self.group;
        for x in 0..self.size {
            if self.act(g.identity(), x) != x {
                return Err(Error::InvalidAction(format!("identity moves {x}")));
            }
        }
        if let Some(&y) = self.action.iter().find(|&&y| y >= self.size) {
            return Err(Error::InvalidAction(format!("image {y} outside the set")));
        }
        for a in g.elements() {
            for b in g.elements() {
                for x in 0..self.size {
                    if self.act(a, self.act(b, x)) != self.act(g.mul(a, b), x) {
                        return Err(Error::InvalidAction(format!(
                            "{}·({}·{x}) ≠ ({}{})·{x}",
                            g.name(a),
                            g.name(b),
                            g.name(a),
                            g.name(b)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// One point, fixed by everything.
    pub fn trivial(group: &FiniteGroup) -> Self {
        GSet::new(group, 1, |_, _| 0).expect("trivial action")
    }

    /// Left cosets `G/H`, numbered by first appearance; `0` is `H` itself.
    pub fn transitive(group: &FiniteGroup, subgroup: &[usize]) -> Result<Self> {
        let (_, h) = group.subgroup(subgroup)?;
        let coset = |g: usize| {
            let mut c: Vec<usize> = h.iter().map(|&x| group.mul(g, x)).collect();
            c.sort_unstable();
            c
        };
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        let mut label = vec![0; group.order()];
        for g in group.elements() {
            let c = coset(g);
            label[g] = match cosets.iter().position(|d| *d == c) {
                Some(i) => i,
                None => {
                    cosets.push(c);
                    cosets.len() - 1
                }
            };
        }
        let reps: Vec<usize> = cosets.iter().map(|c| c[0]).collect();
        GSet::new(group, cosets.len(), |g, x| label[group.mul(g, reps[x])])
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g * self.size + x]
    }

    pub fn stabilizer(&self, x: usize) -> Vec<usize> {
        self.group.elements().filter(|&g| self.act(g, x) == x).collect()
    }

    /// The same action with point `x` renamed `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut inv = vec![usize::MAX; self.size];
        for (x, &p) in perm.iter().enumerate() {
            if p >= self.size || inv[p] != usize::MAX {
                return Err(Error::InvalidAction("relabeling is not a permutation".into()));
            }
            inv[p] = x;
        }
        if perm.len() != self.size {
            return Err(Error::InvalidAction("relabeling is not a permutation".into()));
        }
        GSet::new(&self.group, self.size, |g, y| perm[self.act(g, inv[y])])
    }

    /// `size N` followed by one line `g: g·0 g·1 …` per element; `#` comments.
    pub fn to_text(&self) -> String {
        let mut s = format!("size {}\n", self.size);
        for g in self.group.elements() {
            let row: Vec<String> = (0..self.size).map(|x| self.act(g, x).to_string()).collect();
            s.push_str(&format!("{g}: {}\n", row.join(" ")));
        }
        s
    }

    pub fn from_text(group: &FiniteGroup, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let head = lines.next().ok_or_else(|| Error::Parse("empty G-set file".into()))?;
        let size = head
            .strip_prefix("size")
            .and_then(|s| s.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("expected `size N`, got `{head}`")))?;
        let mut rows: Vec<Option<Vec<usize>>> = vec![None; group.order()];
        for line in lines {
            let (g, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `g: images`, got `{line}`")))?;
            let g: usize = g
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad element `{g}`")))?;
            group.check_element(g)?;
            let row = rest
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad point `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            if row.len() != size {
                return Err(Error::Parse(format!("row {g} has {} images, expected {size}", row.len())));
            }
            rows[g] = Some(row);
        }
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(g, r)| r.ok_or_else(|| Error::Parse(format!("missing row for element {g}"))))
            .collect::<Result<Vec<_>>>()?;
        GSet::new(group, size, |g, x| rows[g][x])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LambdaField {
    gset: GSet,
    modulus: u64,
    /// Indexed by `((g·n + h)·n + k)·|X| + x`.
    values: Vec<u64>,
}

impl LambdaField {
    pub fn zero(gset: &GSet, modulus: u64) -> Self {
        let n = gset.group.order();
        LambdaField {
            gset: gset.clone(),
            modulus,
            values: vec![0; n * n * n * gset.size],
        }
    }

    pub fn from_values(gset: &GSet, modulus: u64, values: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut l = Self::zero(gset, modulus);
        let values: Vec<i64> = values.into_iter().collect();
        if values.len() != l.values.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for a field of {} entries",
                values.len(),
                l.values.len()
            )));
        }
        for (d, v) in l.values.iter_mut().zip(values) {
            *d = v.rem_euclid(modulus as i64) as u64;
        }
        Ok(l)
    }

    pub fn gset(&self) -> &GSet {
        &self.gset
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    fn index(&self, g: usize, h: usize, k: usize, x: usize) -> usize {
        let n = self.gset.group.order();
        ((g * n + h) * n + k) * self.gset.size + x
    }

    pub fn get(&self, g: usize, h: usize, k: usize, x: usize) -> u64 {
        self.values[self.index(g, h, k, x)]
    }

    pub fn set(&mut self, g: usize, h: usize, k: usize, x: usize, v: i64) {
        let i = self.index(g, h, k, x);
        self.values[i] = v.rem_euclid(self.modulus as i64) as u64;
    }

    /// `Λ(g,h,k,x) + β(g,hk,x) + β(h,k,x) − β(gh,k,x) − β(g,h,kx)`, with
    /// `β` indexed by `(g·n + h)·|X| + x`.
    pub fn shifted(&self, beta: &[i64]) -> Result<Self> {
        let (g, x) = (&self.gset.group, &self.gset);
        let (n, sz) = (g.order(), x.size);
        if beta.len() != n * n * sz {
            return Err(Error::DimensionMismatch(format!("β has {} entries, expected {}", beta.len(), n * n * sz)));
        }
        let b = |a: usize, c: usize, y: usize| beta[(a * n + c) * sz + y];
        let mut out = self.clone();
        for (i, v) in self.values.iter().enumerate() {
            let (a, c, k, y) = (i / (n * n * sz), (i / (n * sz)) % n, (i / sz) % n, i % sz);
            let d = b(a, g.mul(c, k), y) + b(c, k, y) - b(g.mul(a, c), k, y) - b(a, c, x.act(k, y));
            out.values[i] = (*v as i64 + d).rem_euclid(self.modulus as i64) as u64;
        }
        Ok(out)
    }

    /// Nonzero entries as `(g, h, k, x, value)`.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize, usize, u64)> {
        let (n, sz) = (self.gset.group.order(), self.gset.size);
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (i / (n * n * sz), (i / (n * sz)) % n, (i / sz) % n, i % sz, v))
            .collect()
    }
}

fn check_omega(w: &Cochain, group: &FiniteGroup, modulus: u64) -> Result<Cochain> {
    if w.level() != 4 {
        return Err(Error::InvalidLevel(w.level()));
    }
    if w.group() != group {
        return Err(Error::CochainMismatch("ω lives on a different group".into()));
    }
    if modulus % w.modulus() != 0 {
        return Err(Error::ModulusMismatch(modulus, w.modulus()));
    }
    w.lift(modulus)
}

/// `Λ(g,h,k,l·x) + Λ(g,hk,l,x) + Λ(h,k,l,x) − Λ(g,h,kl,x) − Λ(gh,k,l,x) − ω(g,h,k,l)`
/// for every `(g,h,k,l,x)`, indexed `(((g·n + h)·n + k)·n + l)·|X| + x`.
pub fn mixed_residual(lambda: &LambdaField, w: &Cochain) -> Result<Vec<u64>> {
    let x = &lambda.gset;
    let g = &x.group;
    let w = check_omega(w, g, lambda.modulus)?;
    let m = lambda.modulus as i64;
    let n = g.order();
    let l = |a, b, c, y| lambda.get(a, b, c, y) as i64;
    let mut out = Vec::with_capacity(n.pow(4) * x.size);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let om = w.get(&[a, b, c, d]) as i64;
                    for y in 0..x.size {
                        let r = l(a, b, c, x.act(d, y)) + l(a, g.mul(b, c), d, y) + l(b, c, d, y)
                            - l(a, b, g.mul(c, d), y)
                            - l(g.mul(a, b), c, d, y)
                            - om;
                        out.push(r.rem_euclid(m) as u64);
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn verify_mixed_cocycle(lambda: &LambdaField, w: &Cochain) -> Result<bool> {
    Ok(mixed_residual(lambda, w)?.iter().all(|&r| r == 0))
}

/// Coefficients of `Λ ↦ δ_X Λ`; rows `(g,h,k,l,x)`, columns `(g,h,k,x)`.
fn mixed_matrix(x: &GSet) -> (Vec<Vec<i64>>, usize) {
    let g = &x.group;
    let (n, sz) = (g.order(), x.size);
    let col = |a: usize, b: usize, c: usize, y: usize| ((a * n + b) * n + c) * sz + y;
    let ncols = n * n * n * sz;
    let mut rows = Vec::with_capacity(n.pow(4) * sz);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for y in 0..sz {
                        let mut r = vec![0i64; ncols];
                        r[col(a, b, c, x.act(d, y))] += 1;
                        r[col(a, g.mul(b, c), d, y)] += 1;
                        r[col(b, c, d, y)] += 1;
                        r[col(a, b, g.mul(c, d), y)] -= 1;
                        r[col(g.mul(a, b), c, d, y)] -= 1;
                        rows.push(r);
                    }
                }
            }
        }
    }
    (rows, ncols)
}

/// Coefficients of `β ↦` the shift in [`LambdaField::shifted`].
fn freedom_matrix(x: &GSet) -> (Vec<Vec<i64>>, usize) {
    let g = &x.group;
    let (n, sz) = (g.order(), x.size);
    let col = |a: usize, b: usize, y: usize| (a * n + b) * sz + y;
    let ncols = n * n * sz;
    let mut rows = Vec::with_capacity(n.pow(3) * sz);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for y in 0..sz {
                    let mut r = vec![0i64; ncols];
                    r[col(a, g.mul(b, c), y)] += 1;
                    r[col(b, c, y)] += 1;
                    r[col(g.mul(a, b), c, y)] -= 1;
                    r[col(a, b, x.act(c, y))] -= 1;
                    rows.push(r);
                }
            }
        }
    }
    (rows, ncols)
}

#[derive(Clone, Debug)]
pub struct LambdaSolution {
    pub modulus: u64,
    pub representative: Option<LambdaField>,
    /// Number of solutions over `ℤ_L` (zero when unsolvable).
    pub solutions: BigUint,
    /// Size of the image of the β freedom.
    pub freedom_image: BigUint,
    /// Equivalence classes of solutions at this modulus.
    pub classes: BigUint,
}

impl LambdaSolution {
    pub fn solvable(&self) -> bool {
        self.representative.is_some()
    }
}

pub fn solve_lambda(w: &Cochain, x: &GSet, modulus: u64) -> Result<LambdaSolution> {
    let g = x.group();
    let wl = check_omega(w, g, modulus)?;
    let (a, ncols) = mixed_matrix(x);
    guard::check("mixed cocycle system", (a.len() as u128) * (ncols as u128), guard::SNF_ENTRIES)?;
    let system = ModSmith::new(&a, ncols, modulus);
    let b: Vec<i64> = (0..a.len())
        .map(|i| wl.values()[i / x.size()] as i64)
        .collect();
    let (f, fcols) = freedom_matrix(x);
    let freedom_image = ModSmith::new(&f, fcols, modulus).image_size();
    let Some(sol) = system.solve(&b) else {
        return Ok(LambdaSolution {
            modulus,
            representative: None,
            solutions: BigUint::zero(),
            freedom_image,
            classes: BigUint::zero(),
        });
    };
    let rep = LambdaField::from_values(x, modulus, sol)?;
    if !verify_mixed_cocycle(&rep, w)? {
        return Err(Error::Internal("solver output violates the mixed cocycle equation".into()));
    }
    let solutions = system.kernel_size();
    let (classes, rem) = solutions.div_rem(&freedom_image);
    if !rem.is_zero() {
        return Err(Error::Internal("β image does not divide the solution space".into()));
    }
    Ok(LambdaSolution {
        modulus,
        representative: Some(rep),
        solutions,
        freedom_image,
        classes,
    })
}

/// Whether `ω` forbids a symmetric state with a unique ground state. The
/// mixed solver with one point and the coboundary test must agree.
pub fn anomaly_obstruction(w: &Cochain) -> Result<bool> {
    if !w.is_cocycle() {
        return Err(Error::NotCocycle(w.cocycle_violation().unwrap_or_default()));
    }
    let g = w.group();
    let point = GSet::trivial(g);
    let mut unsolvable = Vec::new();
    for factor in [2, 4] {
        let l = num_integer::lcm(w.modulus(), factor * g.order() as u64);
        unsolvable.push(!solve_lambda(w, &point, l)?.solvable());
    }
    let search = default_search_modulus(g, w.modulus(), 1);
    let zero = Cochain::zero(g, 4, 1);
    let nontrivial = coboundary_equivalent(w, &zero, search)?.is_none();
    if unsolvable.iter().any(|&u| u != nontrivial) {
        return Err(Error::Internal(format!(
            "mixed solver (unsolvable at 2|G|, 4|G|: {unsolvable:?}) disagrees with coboundary test (nontrivial: {nontrivial})"
        )));
    }
    Ok(nontrivial)
}

#[derive(Clone, Debug)]
pub struct Restriction {
    pub subgroup: FiniteGroup,
    /// `embedding[i]` is the element of the full group for subgroup index `i`.
    pub embedding: Vec<usize>,
    pub trivialization: Cochain,
    pub cochain: Cochain,
    pub is_cocycle: bool,
}

/// `ω` pulled back to the subgroup.
pub fn restrict_omega(w: &Cochain, sub: &FiniteGroup, embedding: &[usize]) -> Cochain {
    Cochain::from_fn(sub, w.level(), w.modulus(), |a| {
        let full: Vec<usize> = a.iter().map(|&i| embedding[i]).collect();
        w.get(&full) as i64
    })
}

/// `Λ̃(g,h,k) = Λ(g,h,k,x) − α(g,h,k)` on an unbroken subgroup `H` fixing `x`,
/// with `δα = ω|_H`. Without `alpha` a trivialization is searched for.
pub fn restrict_to_unbroken(
    lambda: &LambdaField,
    w: &Cochain,
    subgroup: &[usize],
    x: usize,
    alpha: Option<&Cochain>,
) -> Result<Restriction> {
    let gset = lambda.gset();
    let g = gset.group();
    let (sub, embedding) = g.subgroup(subgroup)?;
    if x >= gset.size() {
        return Err(Error::InvalidAction(format!("point {x} outside the set")));
    }
    if let Some(&h) = embedding.iter().find(|&&h| gset.act(h, x) != x) {
        return Err(Error::NotFixed { x, element: h });
    }
    let w_h = restrict_omega(w, &sub, &embedding);
    let alpha = match alpha {
        Some(a) => {
            if a.group() != &sub || a.level() != 3 {
                return Err(Error::CochainMismatch("α must be a 3-cochain on the subgroup".into()));
            }
            let m = num_integer::lcm(a.modulus(), w.modulus());
            if a.coboundary().lift(m)? != w_h.lift(m)? {
                let v = a.coboundary().lift(m)?.sub(&w_h.lift(m)?)?;
                let idx = v.values().iter().position(|&e| e != 0).unwrap_or(0);
                return Err(Error::NotTrivializing(v.decode(idx)));
            }
            a.clone()
        }
        None => {
            let search = default_search_modulus(&sub, lambda.modulus(), w.modulus());
            coboundary_equivalent(&w_h, &Cochain::zero(&sub, 4, 1), search)?
                .ok_or_else(|| Error::NotTrivializing(Vec::new()))?
        }
    };
    let m = num_integer::lcm(lambda.modulus(), alpha.modulus());
    let (sl, sa) = ((m / lambda.modulus()) as i64, (m / alpha.modulus()) as i64);
    let cochain = Cochain::from_fn(&sub, 3, m, |a| {
        let (p, q, r) = (embedding[a[0]], embedding[a[1]], embedding[a[2]]);
        lambda.get(p, q, r, x) as i64 * sl - alpha.get(a) as i64 * sa
    });
    let is_cocycle = cochain.is_cocycle();
    Ok(Restriction {
        subgroup: sub,
        embedding,
        trivialization: alpha,
        cochain,
        is_cocycle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::zxz_four_cocycle;
    use crate::cohomology::cohomology_group;
    use crate::verdict::tuples;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const B: usize = 1;

    /// Classes of `δλ = 0` modulo `δβ` for `|X| = 1`, by enumeration.
    fn brute_classes(g: &FiniteGroup, l: u64) -> usize {
        let n = g.order();
        let cocycles: Vec<Vec<u64>> = tuples(l as usize, n * n * n)
            .map(|v| v.into_iter().map(|e| e as u64).collect::<Vec<_>>())
            .filter(|v| Cochain::from_values(g, 3, l, v.iter().map(|&e| e as i64).collect()).unwrap().is_cocycle())
            .collect();
        let boundaries: std::collections::HashSet<Vec<u64>> = tuples(l as usize, n * n)
            .map(|b| {
                Cochain::from_values(g, 2, l, b.into_iter().map(|e| e as i64).collect())
                    .unwrap()
                    .coboundary()
                    .values()
                    .to_vec()
            })
            .collect();
        cocycles.len() / boundaries.len()
    }

    #[test]
    fn gsets() {
        let g = FiniteGroup::z2xz2();
        let x = GSet::transitive(&g, &[0, B]).unwrap();
        assert_eq!(x.size(), 2);
        assert_eq!(x.stabilizer(0), vec![0, B]);
        assert_eq!(GSet::from_text(&g, &x.to_text()).unwrap(), x);
        assert!(GSet::new(&g, 2, |a, y| if a == 2 { 1 - y } else { y }).is_err());
        assert!(GSet::from_text(&g, "size 2\n0: 0 1\n").is_err());
        assert!(GSet::transitive(&g, &[0, 2, 1]).is_err());
        let r = x.relabel(&[1, 0]).unwrap();
        assert_eq!(r.stabilizer(1), vec![0, B]);
    }

    #[test]
    fn residual_examples() {
        let g = FiniteGroup::z2xz2();
        let p = GSet::trivial(&g);
        assert!(verify_mixed_cocycle(&LambdaField::zero(&p, 2), &Cochain::zero(&g, 4, 2)).unwrap());
        let w = zxz_four_cocycle(1, 1);
        let r = mixed_residual(&LambdaField::zero(&p, 2), &w).unwrap();
        assert_eq!(r, w.neg().values());
        assert!(mixed_residual(&LambdaField::zero(&p, 3), &w).is_err());
    }

    #[test]
    fn z2_classes_match_enumeration_and_cohomology() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let s = solve_lambda(&Cochain::zero(&z2, 4, 1), &GSet::trivial(&z2), 4).unwrap();
        assert_eq!(s.classes, BigUint::from(brute_classes(&z2, 4)));
        assert_eq!(s.classes, BigUint::from(2u32));
        assert_eq!(cohomology_group(&z2, 3).unwrap().len(), 1);
        let t = FiniteGroup::trivial();
        let s = solve_lambda(&Cochain::zero(&t, 4, 1), &GSet::trivial(&t), 6).unwrap();
        assert_eq!(s.classes, BigUint::from(1u32));
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let s = solve_lambda(&Cochain::zero(&z3, 4, 1), &GSet::trivial(&z3), 3).unwrap();
        assert_eq!(s.classes, BigUint::from(3u32));
    }

    #[test]
    fn anomalous_cocycles_admit_no_single_state() {
        let g = FiniteGroup::z2xz2();
        let p = GSet::trivial(&g);
        for (p0, p1) in [(1, 0), (0, 1), (1, 1)] {
            let w = zxz_four_cocycle(p0, p1);
            for l in [4, 8, 16] {
                assert!(!solve_lambda(&w, &p, l).unwrap().solvable());
            }
            assert!(anomaly_obstruction(&w).unwrap());
        }
        assert!(!anomaly_obstruction(&zxz_four_cocycle(0, 0)).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let beta = Cochain::random(&g, 3, 8, &mut rng);
        assert!(!anomaly_obstruction(&beta.coboundary()).unwrap());
    }

    #[test]
    fn freedom_preserves_solutions() {
        let g = FiniteGroup::z2xz2();
        let w = zxz_four_cocycle(1, 0);
        let x = GSet::transitive(&g, &[0, B]).unwrap();
        let s = solve_lambda(&w, &x, 4).unwrap();
        let rep = s.representative.clone().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let beta: Vec<i64> = (0..32).map(|_| rng.gen_range(0..4)).collect();
            assert!(verify_mixed_cocycle(&rep.shifted(&beta).unwrap(), &w).unwrap());
        }
        let mut bad = rep.clone();
        bad.set(1, 2, 3, 0, rep.get(1, 2, 3, 0) as i64 + 1);
        assert!(!verify_mixed_cocycle(&bad, &w).unwrap());
        let y = x.relabel(&[1, 0]).unwrap();
        assert_eq!(solve_lambda(&w, &y, 4).unwrap().classes, s.classes);
    }

    #[test]
    fn unbroken_subgroup_restriction() {
        let g = FiniteGroup::z2xz2();
        let w = zxz_four_cocycle(1, 0);
        let x = GSet::transitive(&g, &[0, B]).unwrap();
        let (sub, emb) = g.subgroup(&[0, B]).unwrap();
        assert!(restrict_omega(&w, &sub, &emb).is_zero());
        let s = solve_lambda(&w, &x, 8).unwrap();
        assert!(s.solvable());
        let rep = s.representative.unwrap();
        let r = restrict_to_unbroken(&rep, &w, &[0, B], 0, None).unwrap();
        assert!(r.is_cocycle);
        assert_eq!(r.subgroup.order(), 2);
        let t = restrict_to_unbroken(&rep, &w, &[0], 1, None).unwrap();
        assert!(t.is_cocycle);
        assert!(matches!(
            restrict_to_unbroken(&rep, &w, &[0, 2], 0, None),
            Err(Error::NotFixed { .. })
        ));
        let mut bad = rep.clone();
        bad.set(B, B, B, 0, rep.get(B, B, B, 0) as i64 + 1);
        assert!(!restrict_to_unbroken(&bad, &w, &[0, B], 0, None).unwrap().is_cocycle);
        let wrong = Cochain::from_fn(&sub, 3, 4, |a| (a == [1, 1, 1]) as i64);
        assert!(matches!(
            restrict_to_unbroken(&rep, &w, &[0, B], 0, Some(&wrong)),
            Err(Error::NotTrivializing(_))
        ));
    }
}
