//! Dense complex tensors with named axes.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::guard;

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    axes: Vec<(String, usize)>,
    data: Vec<Complex64>,
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

fn check_axes(axes: &[(String, usize)]) -> Result<()> {
    let mut seen = HashSet::new();
    for (name, _) in axes {
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateAxis(name.clone()));
        }
    }
    Ok(())
}

fn owned_axes(axes: &[(&str, usize)]) -> Vec<(String, usize)> {
    axes.iter().map(|&(n, d)| (n.to_string(), d)).collect()
}

impl Tensor {
    pub fn new(axes: &[(&str, usize)], data: Vec<Complex64>) -> Result<Self> {
        let axes = owned_axes(axes);
        check_axes(&axes)?;
        let size: usize = axes.iter().map(|a| a.1).product();
        if size != data.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for {size} slots",
                data.len()
            )));
        }
        Ok(Tensor { axes, data })
    }

    pub fn zeros(axes: &[(&str, usize)]) -> Result<Self> {
        let size = axes.iter().map(|a| a.1).product();
        Self::new(axes, vec![Complex64::new(0.0, 0.0); size])
    }

    pub fn from_fn(axes: &[(&str, usize)], mut f: impl FnMut(&[usize]) -> Complex64) -> Result<Self> {
        let mut t = Self::zeros(axes)?;
        let dims = t.dims();
        let mut idx = vec![0; dims.len()];
        for flat in 0..t.data.len() {
            let mut c = flat;
            for k in (0..dims.len()).rev() {
                idx[k] = c % dims[k];
                c /= dims[k];
            }
            t.data[flat] = f(&idx);
        }
        Ok(t)
    }

    pub fn scalar(v: Complex64) -> Self {
        Tensor {
            axes: Vec::new(),
            data: vec![v],
        }
    }

    pub fn axes(&self) -> &[(String, usize)] {
        &self.axes
    }

    pub fn dims(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.1).collect()
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn axis(&self, name: &str) -> Result<usize> {
        self.axes
            .iter()
            .position(|a| a.0 == name)
            .ok_or_else(|| Error::UnknownAxis(name.to_string()))
    }

    fn offset(&self, idx: &[usize]) -> usize {
        idx.iter()
            .zip(&self.axes)
            .fold(0, |acc, (&i, (_, d))| acc * d + i)
    }

    pub fn get(&self, idx: &[usize]) -> Complex64 {
        self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Complex64) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    pub fn rename(mut self, from: &str, to: &str) -> Result<Self> {
        let i = self.axis(from)?;
        self.axes[i].0 = to.to_string();
        check_axes(&self.axes)?;
        Ok(self)
    }

    /// Reorder axes to the given name order.
    pub fn permute(&self, order: &[&str]) -> Result<Self> {
        if order.len() != self.axes.len() {
            return Err(Error::DimensionMismatch(format!(
                "permutation of {} axes given {} names",
                self.axes.len(),
                order.len()
            )));
        }
        let perm = order
            .iter()
            .map(|n| self.axis(n))
            .collect::<Result<Vec<_>>>()?;
        let axes: Vec<(String, usize)> = perm.iter().map(|&p| self.axes[p].clone()).collect();
        check_axes(&axes)?;
        let old_strides = strides(&self.dims());
        let dims: Vec<usize> = axes.iter().map(|a| a.1).collect();
        let mut data = Vec::with_capacity(self.data.len());
        let mut idx = vec![0; dims.len()];
        for _ in 0..self.data.len() {
            let src: usize = idx.iter().zip(&perm).map(|(&i, &p)| i * old_strides[p]).sum();
            data.push(self.data[src]);
            for k in (0..dims.len()).rev() {
                idx[k] += 1;
                if idx[k] < dims[k] {
                    break;
                }
                idx[k] = 0;
            }
        }
        Ok(Tensor { axes, data })
    }

    /// Contract `self` with `other` over the given axis pairs. The result
    /// keeps the free axes of `self`, then those of `other`.
    pub fn contract(&self, other: &Tensor, pairs: &[(&str, &str)]) -> Result<Tensor> {
        let mut ia = Vec::new();
        let mut ib = Vec::new();
        for &(x, y) in pairs {
            let (i, j) = (self.axis(x)?, other.axis(y)?);
            if self.axes[i].1 != other.axes[j].1 {
                return Err(Error::DimensionMismatch(format!(
                    "axis {x} has dimension {} but {y} has {}",
                    self.axes[i].1, other.axes[j].1
                )));
            }
            ia.push(i);
            ib.push(j);
        }
        let free_a: Vec<usize> = (0..self.axes.len()).filter(|i| !ia.contains(i)).collect();
        let free_b: Vec<usize> = (0..other.axes.len()).filter(|j| !ib.contains(j)).collect();
        let out_axes: Vec<(String, usize)> = free_a
            .iter()
            .map(|&i| self.axes[i].clone())
            .chain(free_b.iter().map(|&j| other.axes[j].clone()))
            .collect();
        check_axes(&out_axes)?;

        let names = |t: &Tensor, v: &[usize]| -> Vec<String> { v.iter().map(|&i| t.axes[i].0.clone()).collect() };
        let order_a: Vec<String> = names(self, &free_a).into_iter().chain(names(self, &ia)).collect();
        let order_b: Vec<String> = names(other, &ib).into_iter().chain(names(other, &free_b)).collect();
        let pa = self.permute(&order_a.iter().map(String::as_str).collect::<Vec<_>>())?;
        let pb = other.permute(&order_b.iter().map(String::as_str).collect::<Vec<_>>())?;
        let m: usize = free_a.iter().map(|&i| self.axes[i].1).product();
        let k: usize = ia.iter().map(|&i| self.axes[i].1).product();
        let n: usize = free_b.iter().map(|&j| other.axes[j].1).product();
        let mut data = vec![Complex64::new(0.0, 0.0); m * n];
        for r in 0..m {
            for t in 0..k {
                let x = pa.data[r * k + t];
                if x == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let row = &pb.data[t * n..(t + 1) * n];
                for (out, y) in data[r * n..(r + 1) * n].iter_mut().zip(row) {
                    *out += x * y;
                }
            }
        }
        Ok(Tensor { axes: out_axes, data })
    }

    /// Sum over the diagonal of two axes of the same tensor.
    pub fn trace(&self, x: &str, y: &str) -> Result<Tensor> {
        let (i, j) = (self.axis(x)?, self.axis(y)?);
        if i == j {
            return Err(Error::DuplicateAxis(x.to_string()));
        }
        let d = self.axes[i].1;
        if d != self.axes[j].1 {
            return Err(Error::DimensionMismatch(format!("{x} vs {y}")));
        }
        let delta = Tensor::from_fn(&[("__t0", d), ("__t1", d)], |ix| {
            Complex64::new(if ix[0] == ix[1] { 1.0 } else { 0.0 }, 0.0)
        })?;
        self.contract(&delta, &[(x, "__t0"), (y, "__t1")])
    }

    pub fn conj(mut self) -> Self {
        for v in &mut self.data {
            *v = v.conj();
        }
        self
    }

    pub fn scale(mut self, s: Complex64) -> Self {
        for v in &mut self.data {
            *v *= s;
        }
        self
    }

    pub fn max_abs_diff(&self, other: &Tensor) -> Option<f64> {
        if self.axes != other.axes {
            return None;
        }
        Some(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max),
        )
    }

    /// Flat text: one header line `name:dim ...`, then one `re im` per entry.
    pub fn to_text(&self) -> String {
        let header: Vec<String> = self.axes.iter().map(|(n, d)| format!("{n}:{d}")).collect();
        let mut out = header.join(" ");
        out.push('\n');
        for v in &self.data {
            let _ = writeln!(out, "{:.12} {:.12}", v.re, v.im);
        }
        out
    }
}

/// Same axes (names, order, dimensions) and entries within `tol`.
pub fn allclose(a: &Tensor, b: &Tensor, tol: f64) -> bool {
    a.max_abs_diff(b).is_some_and(|d| d <= tol)
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// `L_x` with axes `(out, in)`: entry 1 at `(x·r, r)`.
pub fn left_regular(g: &FiniteGroup, x: usize) -> Tensor {
    let n = g.order();
    Tensor::from_fn(&[("out", n), ("in", n)], |ix| if ix[0] == g.mul(x, ix[1]) { one() } else { zero() })
        .expect("fixed axes")
}

/// `Σ_r |r, r⟩` over axes `(left, right)`.
pub fn max_entangled_pair(g: &FiniteGroup) -> Tensor {
    let n = g.order();
    Tensor::from_fn(&[("left", n), ("right", n)], |ix| if ix[0] == ix[1] { one() } else { zero() })
        .expect("fixed axes")
}

pub fn identity_matrix(n: usize) -> Tensor {
    Tensor::from_fn(&[("out", n), ("in", n)], |ix| if ix[0] == ix[1] { one() } else { zero() })
        .expect("fixed axes")
}

/// Refuse dense objects larger than the densification guard.
pub fn check_dense(what: &str, dim: u128) -> Result<()> {
    guard::check(what, dim, guard::DENSE_DIM)
}
