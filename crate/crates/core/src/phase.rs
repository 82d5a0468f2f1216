//! Exact roots of unity and integer combinations of them.

use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

/// `exp(2πi·num/modulus)`, with `num` reduced into `0..modulus`.
///
/// Equality is structural; two phases written at different moduli compare
/// equal under [`PhaseInt::same_value`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PhaseInt {
    num: u64,
    modulus: u64,
}

impl PhaseInt {
    pub fn new(num: i64, modulus: u64) -> Self {
        assert!(modulus > 0, "phase modulus must be positive");
        PhaseInt {
            num: num.rem_euclid(modulus as i64) as u64,
            modulus,
        }
    }

    pub fn one(modulus: u64) -> Self {
        Self::new(0, modulus)
    }

    #[inline]
    pub fn num(self) -> u64 {
        self.num
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_one(self) -> bool {
        self.num == 0
    }

    /// Rewrite at modulus `m`, which must be a multiple of the current one.
    pub fn lift(self, m: u64) -> Self {
        assert!(m % self.modulus == 0, "cannot lift {self} to modulus {m}");
        PhaseInt {
            num: self.num * (m / self.modulus),
            modulus: m,
        }
    }

    /// Product, written at the lcm of the two moduli.
    pub fn mul(self, other: PhaseInt) -> Self {
        let m = self.modulus.lcm(&other.modulus);
        let (a, b) = (self.lift(m), other.lift(m));
        PhaseInt {
            num: (a.num + b.num) % m,
            modulus: m,
        }
    }

    pub fn inv(self) -> Self {
        PhaseInt {
            num: (self.modulus - self.num) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn conj(self) -> Self {
        self.inv()
    }

    pub fn pow(self, k: i64) -> Self {
        let m = self.modulus as i128;
        PhaseInt::new(((self.num as i128 * k as i128).rem_euclid(m)) as i64, self.modulus)
    }

    pub fn same_value(self, other: PhaseInt) -> bool {
        self.num as u128 * other.modulus as u128 == other.num as u128 * self.modulus as u128
    }

    /// Smallest modulus representing the same value.
    pub fn reduced(self) -> Self {
        let g = self.num.gcd(&self.modulus);
        PhaseInt {
            num: self.num / g,
            modulus: self.modulus / g,
        }
    }

    pub fn to_complex(self) -> Complex64 {
        let theta = std::f64::consts::TAU * self.num as f64 / self.modulus as f64;
        Complex64::from_polar(1.0, theta)
    }
}

impl fmt::Display for PhaseInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.modulus)
    }
}

/// An element of `Z[ζ_L]`: coefficient `coeffs[k]` multiplies `ζ_L^k`.
#[derive(Clone, Debug)]
pub struct Amplitude {
    modulus: u64,
    coeffs: Vec<i64>,
}

impl Amplitude {
    pub fn zero(modulus: u64) -> Self {
        assert!(modulus > 0);
        Amplitude {
            modulus,
            coeffs: vec![0; modulus as usize],
        }
    }

    pub fn from_phase(p: PhaseInt) -> Self {
        let mut a = Self::zero(p.modulus);
        a.coeffs[p.num as usize] = 1;
        a
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn lift(&self, m: u64) -> Self {
        assert!(m % self.modulus == 0);
        let step = (m / self.modulus) as usize;
        let mut out = Self::zero(m);
        for (k, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[k * step] = c;
        }
        out
    }

    pub fn add_phase(&mut self, coeff: i64, p: PhaseInt) {
        if self.modulus % p.modulus != 0 {
            *self = self.lift(self.modulus.lcm(&p.modulus));
        }
        let p = p.lift(self.modulus);
        self.coeffs[p.num as usize] += coeff;
    }

    pub fn add(&mut self, other: &Amplitude) {
        let m = self.modulus.lcm(&other.modulus);
        if m != self.modulus {
            *self = self.lift(m);
        }
        let o = other.lift(m);
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            *a += b;
        }
    }

    pub fn mul_phase(&self, p: PhaseInt) -> Self {
        let m = self.modulus.lcm(&p.modulus);
        let base = self.lift(m);
        let shift = p.lift(m).num as usize;
        let mut out = Self::zero(m);
        let n = m as usize;
        for (k, &c) in base.coeffs.iter().enumerate() {
            out.coeffs[(k + shift) % n] += c;
        }
        out
    }

    /// Canonical residue modulo the cyclotomic polynomial `Φ_L`.
    pub fn canonical(&self) -> Vec<i64> {
        let phi = cyclotomic(self.modulus as usize);
        poly_rem(&self.coeffs, &phi)
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().iter().all(|&c| c == 0)
    }

    pub fn eq_value(&self, other: &Amplitude) -> bool {
        let m = self.modulus.lcm(&other.modulus);
        let mut d = self.lift(m);
        let neg = Amplitude {
            modulus: m,
            coeffs: other.lift(m).coeffs.iter().map(|c| -c).collect(),
        };
        d.add(&neg);
        d.is_zero()
    }

    /// `Some((c, ζ^k))` when the amplitude equals a single integer multiple
    /// of a root of unity.
    pub fn as_monomial(&self) -> Option<(i64, PhaseInt)> {
        if self.is_zero() {
            return None;
        }
        for k in 0..self.modulus {
            let p = PhaseInt::new(k as i64, self.modulus);
            let rotated = self.mul_phase(p.inv());
            let canon = rotated.canonical();
            if canon.iter().skip(1).all(|&c| c == 0) {
                return Some((canon[0], p));
            }
        }
        None
    }

    pub fn to_complex(&self) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| PhaseInt::new(k as i64, self.modulus).to_complex() * c as f64)
            .sum()
    }
}

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: usize) -> Vec<i64> {
    assert!(n > 0);
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(&num, &cyclotomic(d));
        }
    }
    num
}

fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let (q, r) = poly_divmod(a, b);
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

// b must be monic
fn poly_divmod(a: &[i64], b: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let db = b.len() - 1;
    assert_eq!(b[db], 1);
    let mut r = a.to_vec();
    if r.len() <= db {
        r.resize(db, 0);
        return (vec![0], r);
    }
    let mut q = vec![0i64; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i];
        if c != 0 {
            q[i - db] = c;
            for j in 0..=db {
                r[i - db + j] -= c * b[j];
            }
        }
    }
    r.truncate(db);
    (q, r)
}

fn poly_rem(a: &[i64], b: &[i64]) -> Vec<i64> {
    poly_divmod(a, b).1
}
