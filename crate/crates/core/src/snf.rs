//! Smith normal form over the integers and over `Z/L`, and linear solving
//! modulo `L` on top of it.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The arithmetic the elimination needs. `None` signals overflow.
trait Ring {
    type E: Clone;
    fn from_i64(&self, v: i64) -> Self::E;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn is_unit(&self, a: &Self::E) -> bool;
    fn abs_lt(&self, a: &Self::E, b: &Self::E) -> bool;
    /// `a - q·b`
    fn sub_mul(&self, a: &Self::E, q: &Self::E, b: &Self::E) -> Option<Self::E>;
    fn lin(&self, x: &Self::E, a: &Self::E, y: &Self::E, b: &Self::E) -> Option<Self::E>;
    fn quot(&self, a: &Self::E, p: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn is_negative(&self, a: &Self::E) -> bool;
    fn divides(&self, a: &Self::E, b: &Self::E) -> bool;
    /// `(g, x, y)` with `a·x + b·y = g`, plus `a/g` and `b/g`.
    fn bezout(&self, a: &Self::E, b: &Self::E) -> Option<[Self::E; 5]>;
}

struct I128Ring;

impl Ring for I128Ring {
    type E = i128;
    fn from_i64(&self, v: i64) -> i128 {
        v as i128
    }
    fn zero(&self) -> i128 {
        0
    }
    fn one(&self) -> i128 {
        1
    }
    fn is_zero(&self, a: &i128) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &i128) -> bool {
        a.abs() == 1
    }
    fn abs_lt(&self, a: &i128, b: &i128) -> bool {
        a.unsigned_abs() < b.unsigned_abs()
    }
    fn sub_mul(&self, a: &i128, q: &i128, b: &i128) -> Option<i128> {
        a.checked_sub(q.checked_mul(*b)?)
    }
    fn lin(&self, x: &i128, a: &i128, y: &i128, b: &i128) -> Option<i128> {
        x.checked_mul(*a)?.checked_add(y.checked_mul(*b)?)
    }
    fn quot(&self, a: &i128, p: &i128) -> i128 {
        a / p
    }
    fn neg(&self, a: &i128) -> i128 {
        -a
    }
    fn is_negative(&self, a: &i128) -> bool {
        *a < 0
    }
    fn divides(&self, a: &i128, b: &i128) -> bool {
        *a != 0 && b % a == 0
    }
    fn bezout(&self, a: &i128, b: &i128) -> Option<[i128; 5]> {
        let e = a.extended_gcd(b);
        let g = e.gcd;
        Some([g, e.x, e.y, a / g, b / g])
    }
}

struct BigRing;

impl Ring for BigRing {
    type E = BigInt;
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
    fn abs_lt(&self, a: &BigInt, b: &BigInt) -> bool {
        a.magnitude() < b.magnitude()
    }
    fn sub_mul(&self, a: &BigInt, q: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a - q * b)
    }
    fn lin(&self, x: &BigInt, a: &BigInt, y: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(x * a + y * b)
    }
    fn quot(&self, a: &BigInt, p: &BigInt) -> BigInt {
        a / p
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_negative(&self, a: &BigInt) -> bool {
        a.is_negative()
    }
    fn divides(&self, a: &BigInt, b: &BigInt) -> bool {
        !a.is_zero() && (b % a).is_zero()
    }
    fn bezout(&self, a: &BigInt, b: &BigInt) -> Option<[BigInt; 5]> {
        let e = a.extended_gcd(b);
        let g = e.gcd;
        Some([g.clone(), e.x, e.y, a / &g, b / &g])
    }
}

/// Residues `0..L`. Every operation is a ring operation followed by reduction,
/// so transforms stay invertible modulo `L`.
struct ModRing(i128);

impl ModRing {
    fn r(&self, v: i128) -> i128 {
        v.rem_euclid(self.0)
    }
}

impl Ring for ModRing {
    type E = i128;
    fn from_i64(&self, v: i64) -> i128 {
        self.r(v as i128)
    }
    fn zero(&self) -> i128 {
        0
    }
    fn one(&self) -> i128 {
        self.r(1)
    }
    fn is_zero(&self, a: &i128) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &i128) -> bool {
        *a == 1
    }
    fn abs_lt(&self, a: &i128, b: &i128) -> bool {
        a < b
    }
    fn sub_mul(&self, a: &i128, q: &i128, b: &i128) -> Option<i128> {
        Some(self.r(a - self.r(q * b)))
    }
    fn lin(&self, x: &i128, a: &i128, y: &i128, b: &i128) -> Option<i128> {
        Some(self.r(self.r(x * a) + self.r(y * b)))
    }
    fn quot(&self, a: &i128, p: &i128) -> i128 {
        a / p
    }
    fn neg(&self, a: &i128) -> i128 {
        self.r(-a)
    }
    fn is_negative(&self, _: &i128) -> bool {
        false
    }
    fn divides(&self, _: &i128, _: &i128) -> bool {
        // divisibility of the diagonal is not needed modulo L
        true
    }
    fn bezout(&self, a: &i128, b: &i128) -> Option<[i128; 5]> {
        let e = a.extended_gcd(b);
        let g = e.gcd;
        Some([g, self.r(e.x), self.r(e.y), a / g, b / g])
    }
}

struct Elim<E> {
    diag: Vec<E>,
    left: Option<Vec<Vec<E>>>,
    right: Option<Vec<Vec<E>>>,
}

fn identity<R: Ring>(r: &R, n: usize) -> Vec<Vec<R::E>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { r.one() } else { r.zero() }).collect())
        .collect()
}

fn row_sub<R: Ring>(r: &R, m: &mut [Vec<R::E>], dst: usize, q: &R::E, src: usize, from: usize) -> Option<()> {
    let (a, b) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for j in from..a.len() {
        if !r.is_zero(&b[j]) {
            a[j] = r.sub_mul(&a[j], q, &b[j])?;
        }
    }
    Some(())
}

fn col_sub<R: Ring>(r: &R, m: &mut [Vec<R::E>], dst: usize, q: &R::E, src: usize, from: usize) -> Option<()> {
    for row in m.iter_mut().skip(from) {
        if !r.is_zero(&row[src]) {
            row[dst] = r.sub_mul(&row[dst], q, &row[src])?;
        }
    }
    Some(())
}

fn eliminate<R: Ring>(r: &R, input: &[Vec<i64>], ncols: usize, track: bool) -> Option<Elim<R::E>> {
    let nrows = input.len();
    let mut a: Vec<Vec<R::E>> = input
        .iter()
        .map(|row| row.iter().map(|&v| r.from_i64(v)).collect())
        .collect();
    let mut u = track.then(|| identity(r, nrows));
    let mut v = track.then(|| identity(r, ncols));
    let steps = nrows.min(ncols);
    let mut rank = 0;
    'outer: for t in 0..steps {
        loop {
            // smallest nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            'search: for (i, row) in a.iter().enumerate().skip(t) {
                for (j, e) in row.iter().enumerate().skip(t) {
                    if r.is_zero(e) {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if !r.abs_lt(e, &a[bi][bj]) => {}
                        _ => {
                            best = Some((i, j));
                            if r.is_unit(e) {
                                break 'search;
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'outer };
            if pi != t {
                a.swap(pi, t);
                if let Some(u) = u.as_mut() {
                    u.swap(pi, t);
                }
            }
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(pj, t);
                }
                if let Some(v) = v.as_mut() {
                    for row in v.iter_mut() {
                        row.swap(pj, t);
                    }
                }
            }
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..nrows {
                if r.is_zero(&a[i][t]) {
                    continue;
                }
                let q = r.quot(&a[i][t], &p);
                row_sub(r, &mut a, i, &q, t, t)?;
                if let Some(u) = u.as_mut() {
                    row_sub(r, u, i, &q, t, 0)?;
                }
                clean &= r.is_zero(&a[i][t]);
            }
            for j in t + 1..ncols {
                if r.is_zero(&a[t][j]) {
                    continue;
                }
                let q = r.quot(&a[t][j], &p);
                col_sub(r, &mut a, j, &q, t, t)?;
                if let Some(v) = v.as_mut() {
                    col_sub(r, v, j, &q, t, 0)?;
                }
                clean &= r.is_zero(&a[t][j]);
            }
            if clean {
                break;
            }
        }
        if r.is_negative(&a[t][t]) {
            a[t][t] = r.neg(&a[t][t]);
            if let Some(u) = u.as_mut() {
                for e in u[t].iter_mut() {
                    *e = r.neg(e);
                }
            }
        }
        rank = t + 1;
    }
    let mut diag: Vec<R::E> = (0..steps).map(|t| a[t][t].clone()).collect();

    for i in 0..rank {
        for j in i + 1..rank {
            if r.divides(&diag[i], &diag[j]) {
                continue;
            }
            let [g, x, y, ag, bg] = r.bezout(&diag[i], &diag[j])?;
            let b = diag[j].clone();
            // col_i += col_j, rows (i,j) ← [[x,y],[-b/g,a/g]], col_j -= (y·b/g)·col_i
            let s = r.lin(&y, &b, &r.zero(), &r.zero())?;
            let s = r.quot(&s, &g);
            let lcm = r.lin(&ag, &b, &r.zero(), &r.zero())?;
            diag[i] = g;
            diag[j] = lcm;
            if let Some(v) = v.as_mut() {
                let minus_one = r.neg(&r.one());
                for row in v.iter_mut() {
                    row[i] = r.sub_mul(&row[i], &minus_one, &row[j])?;
                }
                for row in v.iter_mut() {
                    row[j] = r.sub_mul(&row[j], &s, &row[i])?;
                }
            }
            if let Some(u) = u.as_mut() {
                let nbg = r.neg(&bg);
                for c in 0..nrows {
                    let ui = u[i][c].clone();
                    let uj = u[j][c].clone();
                    u[i][c] = r.lin(&x, &ui, &y, &uj)?;
                    u[j][c] = r.lin(&nbg, &ui, &ag, &uj)?;
                }
            }
        }
    }
    Some(Elim {
        diag,
        left: u,
        right: v,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// `min(rows, cols)` entries, nonzero ones first, each dividing the next.
    pub diagonal: Vec<BigInt>,
    pub left: Vec<Vec<BigInt>>,
    pub right: Vec<Vec<BigInt>>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| !d.is_zero()).count()
    }

    pub fn nonzero(&self) -> &[BigInt] {
        &self.diagonal[..self.rank()]
    }
}

fn to_big(v: Vec<Vec<i128>>) -> Vec<Vec<BigInt>> {
    v.into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect()
}

/// `left · m · right = diag(d)` with unimodular transforms.
pub fn smith_normal_form(m: &[Vec<i64>], ncols: usize) -> SmithForm {
    assert!(m.iter().all(|row| row.len() == ncols));
    match eliminate(&I128Ring, m, ncols, true) {
        Some(e) => SmithForm {
            diagonal: e.diag.into_iter().map(BigInt::from).collect(),
            left: to_big(e.left.expect("tracked")),
            right: to_big(e.right.expect("tracked")),
        },
        None => {
            let e = eliminate(&BigRing, m, ncols, true).expect("big integers never overflow");
            SmithForm {
                diagonal: e.diag,
                left: e.left.expect("tracked"),
                right: e.right.expect("tracked"),
            }
        }
    }
}

/// Diagonal of the Smith normal form without tracking transforms.
pub fn smith_diagonal(m: &[Vec<i64>], ncols: usize) -> Vec<BigInt> {
    assert!(m.iter().all(|row| row.len() == ncols));
    match eliminate(&I128Ring, m, ncols, false) {
        Some(e) => e.diag.into_iter().map(BigInt::from).collect(),
        None => eliminate(&BigRing, m, ncols, false)
            .expect("big integers never overflow")
            .diag,
    }
}

/// Smith decomposition of a matrix over `Z/L`.
#[derive(Clone, Debug)]
pub struct ModSmith {
    pub modulus: u64,
    pub rows: usize,
    pub cols: usize,
    diag: Vec<i128>,
    left: Vec<Vec<i128>>,
    right: Vec<Vec<i128>>,
}

impl ModSmith {
    pub fn new(m: &[Vec<i64>], ncols: usize, modulus: u64) -> Self {
        assert!(modulus > 0);
        assert!(m.iter().all(|row| row.len() == ncols));
        let ring = ModRing(modulus as i128);
        let e = eliminate(&ring, m, ncols, true).expect("residues never overflow");
        ModSmith {
            modulus,
            rows: m.len(),
            cols: ncols,
            diag: e.diag,
            left: e.left.expect("tracked"),
            right: e.right.expect("tracked"),
        }
    }

    /// `gcd(d_j, L)` for every unknown, `L` where `d_j` vanishes.
    fn column_gcds(&self) -> Vec<u64> {
        let l = self.modulus as i128;
        (0..self.cols)
            .map(|j| self.diag.get(j).map_or(l, |d| d.gcd(&l)) as u64)
            .collect()
    }

    /// Number of solutions of `m·x ≡ 0 (mod L)`.
    pub fn kernel_size(&self) -> BigUint {
        self.column_gcds()
            .into_iter()
            .fold(BigUint::one(), |acc, g| acc * BigUint::from(g))
    }

    /// Size of the image of `x ↦ m·x` in `(Z/L)^rows`.
    pub fn image_size(&self) -> BigUint {
        let l = self.modulus;
        self.column_gcds()
            .into_iter()
            .fold(BigUint::one(), |acc, g| acc * BigUint::from(l / g))
    }

    /// One solution of `m·x ≡ b (mod L)`, or `None`.
    pub fn solve(&self, b: &[i64]) -> Option<Vec<i64>> {
        assert_eq!(b.len(), self.rows);
        let l = self.modulus as i128;
        let c: Vec<i128> = self
            .left
            .iter()
            .map(|row| {
                row.iter()
                    .zip(b)
                    .fold(0i128, |acc, (u, &bi)| (acc + u * (bi as i128).rem_euclid(l)) % l)
            })
            .collect();
        let mut y = vec![0i128; self.cols];
        for (i, &ci) in c.iter().enumerate() {
            let d = self.diag.get(i).copied().unwrap_or(0);
            if i >= self.cols || d == 0 {
                if ci != 0 {
                    return None;
                }
                continue;
            }
            let g = d.gcd(&l);
            if ci % g != 0 {
                return None;
            }
            let lg = l / g;
            let inv = mod_inverse(d / g, lg).expect("d/g is a unit modulo L/g");
            y[i] = ((ci / g) % lg * inv) % lg;
        }
        let x = self
            .right
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&y)
                    .fold(0i128, |acc, (v, yj)| (acc + v * yj) % l) as i64
            })
            .collect();
        Some(x)
    }
}

fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    if m == 1 {
        return Some(0);
    }
    let e = a.rem_euclid(m).extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

/// Multiply `m·x` modulo `L`.
pub fn mat_vec_mod(m: &[Vec<i64>], x: &[i64], modulus: u64) -> Vec<i64> {
    let l = modulus as i128;
    m.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(0i128, |acc, (&a, &b)| (acc + a as i128 * b as i128).rem_euclid(l)) as i64
        })
        .collect()
}

pub fn biguint_to_u128(v: &BigUint) -> Option<u128> {
    v.to_u128()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let k = b.len();
        let n = if k == 0 { 0 } else { b[0].len() };
        a.iter()
            .map(|row| {
                (0..n)
                    .map(|j| (0..k).map(|t| &row[t] * &b[t][j]).sum())
                    .collect()
            })
            .collect()
    }

    fn big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    fn check(m: &[Vec<i64>], ncols: usize) -> SmithForm {
        let s = smith_normal_form(m, ncols);
        let d = mul(&mul(&s.left, &big(m)), &s.right);
        for (i, row) in d.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if i == j {
                    assert_eq!(e, &s.diagonal[i]);
                } else {
                    assert!(e.is_zero(), "off-diagonal entry at ({i},{j})");
                }
            }
        }
        let r = s.rank();
        for w in s.diagonal[..r].windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        assert!(s.diagonal[r..].iter().all(Zero::is_zero));
        assert_eq!(smith_diagonal(m, ncols), s.diagonal);
        s
    }

    #[test]
    fn basic_forms() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(check(&id, 3).diagonal, vec![BigInt::from(1); 3]);
        let s = check(&[vec![2, 4], vec![6, 8]], 2);
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
        let z = check(&[vec![0, 0], vec![0, 0], vec![0, 0]], 2);
        assert_eq!(z.rank(), 0);
        assert_eq!(check(&[vec![2, 0], vec![0, 3]], 2).diagonal, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..6);
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-9..10)).collect())
                .collect();
            check(&m, cols);
        }
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big_v = i64::MAX / 3;
        let m = vec![vec![big_v, big_v - 1, 7], vec![big_v - 2, big_v, 5], vec![3, big_v - 5, big_v]];
        check(&m, 3);
    }

    // brute force over all x in (Z/L)^n
    #[test]
    fn mod_solver_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let l: u64 = [2, 4, 6, 8][rng.gen_range(0..4)];
            let rows = rng.gen_range(1..4);
            let cols = rng.gen_range(1..4);
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-5..6)).collect())
                .collect();
            let s = ModSmith::new(&m, cols, l);
            let mut kernel = 0u64;
            let mut images = std::collections::HashSet::new();
            let total = l.pow(cols as u32);
            for code in 0..total {
                let mut x = vec![0i64; cols];
                let mut c = code;
                for xi in x.iter_mut() {
                    *xi = (c % l) as i64;
                    c /= l;
                }
                let y = mat_vec_mod(&m, &x, l);
                if y.iter().all(|&v| v == 0) {
                    kernel += 1;
                }
                images.insert(y);
            }
            assert_eq!(s.kernel_size(), BigUint::from(kernel));
            assert_eq!(s.image_size(), BigUint::from(images.len()));
            for _ in 0..5 {
                let b: Vec<i64> = (0..rows).map(|_| rng.gen_range(0..l as i64)).collect();
                match s.solve(&b) {
                    Some(x) => assert_eq!(mat_vec_mod(&m, &x, l), b),
                    None => assert!(!images.contains(&b)),
                }
            }
        }
    }
}
