//! Inhomogeneous cochains `Gⁿ → Z_L` and the bar coboundary.

use std::fmt::Write as _;

use rand::Rng;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::phase::PhaseInt;

/// Values are stored flat, first argument most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    group: FiniteGroup,
    level: usize,
    modulus: u64,
    values: Vec<u64>,
}

impl Cochain {
    pub fn zero(group: &FiniteGroup, level: usize, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Cochain {
            group: group.clone(),
            level,
            modulus,
            values: vec![0; group.order().pow(level as u32)],
        }
    }

    pub fn from_fn(
        group: &FiniteGroup,
        level: usize,
        modulus: u64,
        mut f: impl FnMut(&[usize]) -> i64,
    ) -> Self {
        let mut c = Self::zero(group, level, modulus);
        let mut args = vec![0; level];
        for idx in 0..c.values.len() {
            c.decode_into(idx, &mut args);
            c.values[idx] = f(&args).rem_euclid(modulus as i64) as u64;
        }
        c
    }

    pub fn from_values(
        group: &FiniteGroup,
        level: usize,
        modulus: u64,
        values: Vec<i64>,
    ) -> Result<Self> {
        let expected = group.order().pow(level as u32);
        if values.len() != expected {
            return Err(Error::CochainMismatch(format!(
                "expected {expected} values, got {}",
                values.len()
            )));
        }
        Ok(Cochain {
            group: group.clone(),
            level,
            modulus,
            values: values
                .into_iter()
                .map(|v| v.rem_euclid(modulus as i64) as u64)
                .collect(),
        })
    }

    pub fn random<R: Rng + ?Sized>(
        group: &FiniteGroup,
        level: usize,
        modulus: u64,
        rng: &mut R,
    ) -> Self {
        let mut c = Self::zero(group, level, modulus);
        for v in &mut c.values {
            *v = rng.gen_range(0..modulus);
        }
        c
    }

    /// Random cochain vanishing on identity-containing tuples.
    pub fn random_normalized<R: Rng + ?Sized>(
        group: &FiniteGroup,
        level: usize,
        modulus: u64,
        rng: &mut R,
    ) -> Self {
        let e = group.identity();
        Self::from_fn(group, level, modulus, |args| {
            if args.contains(&e) {
                0
            } else {
                rng.gen_range(0..modulus) as i64
            }
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn index(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.level);
        let n = self.group.order();
        args.iter().fold(0, |acc, &a| acc * n + a)
    }

    pub fn decode_into(&self, mut idx: usize, args: &mut [usize]) {
        let n = self.group.order();
        for slot in args.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
    }

    pub fn decode(&self, idx: usize) -> Vec<usize> {
        let mut args = vec![0; self.level];
        self.decode_into(idx, &mut args);
        args
    }

    #[inline]
    pub fn get(&self, args: &[usize]) -> u64 {
        self.values[self.index(args)]
    }

    #[inline]
    pub fn phase(&self, args: &[usize]) -> PhaseInt {
        PhaseInt::new(self.get(args) as i64, self.modulus)
    }

    pub fn set(&mut self, args: &[usize], value: i64) {
        let i = self.index(args);
        self.values[i] = value.rem_euclid(self.modulus as i64) as u64;
    }

    /// Multiply exponents so the same phases are written at modulus `m`.
    pub fn lift(&self, m: u64) -> Result<Self> {
        if m % self.modulus != 0 {
            return Err(Error::ModulusIncompatible {
                search: m,
                a: self.modulus,
                b: self.modulus,
            });
        }
        let f = m / self.modulus;
        Ok(Cochain {
            group: self.group.clone(),
            level: self.level,
            modulus: m,
            values: self.values.iter().map(|v| v * f).collect(),
        })
    }

    fn check_compatible(&self, other: &Cochain) -> Result<()> {
        if self.group != other.group || self.level != other.level {
            return Err(Error::CochainMismatch(format!(
                "level {} over order {} vs level {} over order {}",
                self.level,
                self.group.order(),
                other.level,
                other.group.order()
            )));
        }
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Self> {
        self.check_compatible(other)?;
        let m = self.modulus;
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&other.values) {
            *a = (*a + b) % m;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let m = self.modulus;
        let mut out = self.clone();
        for v in &mut out.values {
            *v = (m - *v) % m;
        }
        out
    }

    pub fn sub(&self, other: &Cochain) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// The bar coboundary `δc`.
    pub fn coboundary(&self) -> Cochain {
        let n = self.level;
        let g = &self.group;
        let m = self.modulus as i64;
        let mut out = Cochain::zero(g, n + 1, self.modulus);
        let mut args = vec![0; n + 1];
        let mut buf = vec![0; n];
        for idx in 0..out.values.len() {
            out.decode_into(idx, &mut args);
            out.values[idx] = coboundary_at(self, &args, &mut buf).rem_euclid(m) as u64;
        }
        out
    }

    /// First tuple at which `δc` is nonzero.
    pub fn cocycle_violation(&self) -> Option<Vec<usize>> {
        let n = self.level;
        let m = self.modulus as i64;
        let total = self.group.order().pow(n as u32 + 1);
        let mut args = vec![0; n + 1];
        let mut buf = vec![0; n];
        let probe = Cochain {
            group: self.group.clone(),
            level: n + 1,
            modulus: self.modulus,
            values: Vec::new(),
        };
        for idx in 0..total {
            probe.decode_into(idx, &mut args);
            if coboundary_at(self, &args, &mut buf).rem_euclid(m) != 0 {
                return Some(args);
            }
        }
        None
    }

    pub fn is_cocycle(&self) -> bool {
        self.cocycle_violation().is_none()
    }

    pub fn normalization_violation(&self) -> Option<Vec<usize>> {
        let e = self.group.identity();
        let mut args = vec![0; self.level];
        for idx in 0..self.values.len() {
            if self.values[idx] != 0 {
                self.decode_into(idx, &mut args);
                if args.contains(&e) {
                    return Some(args);
                }
            }
        }
        None
    }

    pub fn is_normalized(&self) -> bool {
        self.normalization_violation().is_none()
    }

    /// Text form: a header line then `g1 .. gn -> k` for every nonzero entry.
    pub fn to_text(&self, group_spec: &str) -> String {
        let mut out = format!(
            "group={group_spec} level={} modulus={}\n",
            self.level, self.modulus
        );
        for (idx, &v) in self.values.iter().enumerate() {
            if v != 0 {
                let args: Vec<String> = self.decode(idx).iter().map(|a| a.to_string()).collect();
                let _ = writeln!(out, "{} -> {v}", args.join(" "));
            }
        }
        out
    }

    /// Parse the text form. The header's group string is resolved by
    /// `resolve`, which lets callers support table files as well as specs.
    pub fn from_text(
        text: &str,
        resolve: impl FnOnce(&str) -> Result<FiniteGroup>,
    ) -> Result<(String, Cochain)> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing cochain header".into()))?;
        let (mut spec, mut level, mut modulus) = (None, None, None);
        for field in header.split_whitespace() {
            let (key, val) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header field `{field}`")))?;
            match key {
                "group" => spec = Some(val.to_string()),
                "level" => level = val.parse::<usize>().ok(),
                "modulus" => modulus = val.parse::<u64>().ok().filter(|&m| m > 0),
                _ => return Err(Error::Parse(format!("unknown header key `{key}`"))),
            }
        }
        let spec = spec.ok_or_else(|| Error::Parse("header lacks group=".into()))?;
        let level = level.ok_or_else(|| Error::Parse("header lacks a valid level=".into()))?;
        let modulus =
            modulus.ok_or_else(|| Error::Parse("header lacks a valid modulus=".into()))?;
        let group = resolve(&spec)?;
        let mut c = Cochain::zero(&group, level, modulus);
        for line in lines {
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("missing `->` in `{line}`")))?;
            let args = lhs
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad element `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if args.len() != level {
                return Err(Error::Parse(format!(
                    "`{line}` has {} arguments, expected {level}",
                    args.len()
                )));
            }
            for &a in &args {
                group.check_element(a)?;
            }
            let k: i64 = rhs
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{line}`")))?;
            c.set(&args, k);
        }
        Ok((spec, c))
    }
}

fn coboundary_at(c: &Cochain, args: &[usize], buf: &mut [usize]) -> i64 {
    let n = c.level;
    let g = &c.group;
    let mut acc = c.get(&args[1..]) as i64;
    for i in 0..n {
        // merge args[i] and args[i+1]
        buf[..i].copy_from_slice(&args[..i]);
        buf[i] = g.mul(args[i], args[i + 1]);
        buf[i + 1..].copy_from_slice(&args[i + 2..]);
        let v = c.get(buf) as i64;
        if i % 2 == 0 {
            acc -= v;
        } else {
            acc += v;
        }
    }
    let last = c.get(&args[..n]) as i64;
    if (n + 1) % 2 == 0 {
        acc += last;
    } else {
        acc -= last;
    }
    acc
}

/// The ℤ₂×ℤ₂ 4-cocycle with exponent `p0·g0h1k1l1 + p1·g1h0k0l0 (mod 2)`.
pub fn zxz_four_cocycle(p0: u8, p1: u8) -> Cochain {
    let group = FiniteGroup::z2xz2();
    let (p0, p1) = ((p0 & 1) as i64, (p1 & 1) as i64);
    Cochain::from_fn(&group, 4, 2, |x| {
        let c = |i: usize, bit: usize| ((x[i] >> (1 - bit)) & 1) as i64;
        p0 * c(0, 0) * c(1, 1) * c(2, 1) * c(3, 1) + p1 * c(0, 1) * c(1, 0) * c(2, 0) * c(3, 0)
    })
}

/// On `Z_n × Z_n` (index `g0·n + g1`): exponent `p·g0·h1·c(k1,l1) (mod n)`
/// with `c` the carry of `k1 + l1` past `n`.
pub fn carry_four_cocycle(n: usize, p: i64) -> Cochain {
    let group = FiniteGroup::direct_product(
        &FiniteGroup::cyclic(n).expect("positive order"),
        &FiniteGroup::cyclic(n).expect("positive order"),
    );
    Cochain::from_fn(&group, 4, n as u64, |x| {
        let (g0, h1, k1, l1) = (x[0] / n, x[1] % n, x[2] % n, x[3] % n);
        p * (g0 * h1) as i64 * ((k1 + l1 >= n) as i64)
    })
}

/// On `Z_n`: exponent `p·a·c(b,c) (mod n)` with `c` the carry of `b + c`
/// past `n`. For `n = 2` this is `(-1)^{abc}`.
pub fn carry_three_cocycle(n: usize, p: i64) -> Cochain {
    let group = FiniteGroup::cyclic(n).expect("positive order");
    Cochain::from_fn(&group, 3, n as u64, |x| p * x[0] as i64 * ((x[1] + x[2] >= n) as i64))
}
