//! Operators that send each group-valued configuration to at most one other
//! configuration, times an exact phase.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::guard;
use crate::phase::PhaseInt;
use crate::tensor::{check_dense, Tensor};

pub type Image = Option<(Vec<usize>, PhaseInt)>;
type Action = Arc<dyn Fn(&[usize]) -> Image + Send + Sync>;

#[derive(Clone)]
enum Repr {
    Func(Action),
    Table(Arc<Vec<Option<(usize, PhaseInt)>>>),
}

/// A monomial operator on `dim^{sites}` basis states. The image `None`
/// annihilates a configuration; unitary maps never do.
#[derive(Clone)]
pub struct BasisMap {
    sites: Vec<String>,
    dim: usize,
    repr: Repr,
}

impl std::fmt::Debug for BasisMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BasisMap")
            .field("sites", &self.sites.len())
            .field("dim", &self.dim)
            .finish()
    }
}

pub fn encode(cfg: &[usize], dim: usize) -> usize {
    cfg.iter().fold(0, |acc, &c| acc * dim + c)
}

pub fn decode(mut idx: usize, dim: usize, n: usize) -> Vec<usize> {
    let mut cfg = vec![0; n];
    for slot in cfg.iter_mut().rev() {
        *slot = idx % dim;
        idx /= dim;
    }
    cfg
}

impl BasisMap {
    pub fn from_fn(
        sites: Vec<String>,
        dim: usize,
        f: impl Fn(&[usize]) -> Image + Send + Sync + 'static,
    ) -> Self {
        BasisMap {
            sites,
            dim,
            repr: Repr::Func(Arc::new(f)),
        }
    }

    pub fn identity(sites: Vec<String>, dim: usize) -> Self {
        Self::from_fn(sites, dim, |c| Some((c.to_vec(), PhaseInt::one(1))))
    }

    /// `L_x` on every site.
    pub fn left_regular(g: &FiniteGroup, sites: Vec<String>, x: usize) -> Self {
        let g = g.clone();
        let dim = g.order();
        Self::from_fn(sites, dim, move |c| {
            Some((c.iter().map(|&r| g.mul(x, r)).collect(), PhaseInt::one(1)))
        })
    }

    pub fn sites(&self) -> &[String] {
        &self.sites
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn configs(&self) -> u128 {
        guard::pow(self.dim, self.sites.len())
    }

    pub fn apply_config(&self, cfg: &[usize]) -> Image {
        match &self.repr {
            Repr::Func(f) => f(cfg),
            Repr::Table(t) => t[encode(cfg, self.dim)]
                .map(|(j, p)| (decode(j, self.dim, self.sites.len()), p)),
        }
    }

    fn check_same_sites(&self, other: &BasisMap) -> Result<()> {
        if self.sites != other.sites || self.dim != other.dim {
            return Err(Error::SiteMismatch(format!(
                "{} sites of dimension {} vs {} sites of dimension {}",
                self.sites.len(),
                self.dim,
                other.sites.len(),
                other.dim
            )));
        }
        Ok(())
    }

    /// Evaluate on every configuration and store the result.
    pub fn tabulate(&self) -> Result<BasisMap> {
        if let Repr::Table(_) = self.repr {
            return Ok(self.clone());
        }
        let total = self.configs();
        guard::check("basis map tabulation", total, guard::EXHAUSTIVE_CONFIGS)?;
        let n = self.sites.len();
        let table = (0..total as usize)
            .map(|i| {
                self.apply_config(&decode(i, self.dim, n))
                    .map(|(c, p)| (encode(&c, self.dim), p))
            })
            .collect();
        Ok(BasisMap {
            sites: self.sites.clone(),
            dim: self.dim,
            repr: Repr::Table(Arc::new(table)),
        })
    }

    /// `a ∘ b`: apply `b` first.
    pub fn compose(a: &BasisMap, b: &BasisMap) -> Result<BasisMap> {
        a.check_same_sites(b)?;
        let (a2, b2) = (a.clone(), b.clone());
        Ok(Self::from_fn(a.sites.clone(), a.dim, move |c| {
            let (c1, p1) = b2.apply_config(c)?;
            let (c2, p2) = a2.apply_config(&c1)?;
            Some((c2, p1.mul(p2)))
        }))
    }

    /// Inverse permutation with conjugated phases. Fails unless the map is
    /// injective on its support.
    pub fn dagger(&self) -> Result<BasisMap> {
        let t = self.tabulate()?;
        let Repr::Table(table) = &t.repr else {
            unreachable!()
        };
        let mut inv = vec![None; table.len()];
        for (i, e) in table.iter().enumerate() {
            if let Some((j, p)) = e {
                if inv[*j].is_some() {
                    return Err(Error::Internal(format!(
                        "configuration {} has two preimages",
                        j
                    )));
                }
                inv[*j] = Some((i, p.conj()));
            }
        }
        Ok(BasisMap {
            sites: self.sites.clone(),
            dim: self.dim,
            repr: Repr::Table(Arc::new(inv)),
        })
    }

    /// First configuration on which the two maps differ, compared exactly
    /// up to the modulus in which each phase is written.
    pub fn first_difference(a: &BasisMap, b: &BasisMap) -> Result<Option<Vec<usize>>> {
        a.check_same_sites(b)?;
        let total = a.configs();
        guard::check("basis map comparison", total, guard::EXHAUSTIVE_CONFIGS)?;
        let n = a.sites.len();
        for i in 0..total as usize {
            let c = decode(i, a.dim, n);
            let same = match (a.apply_config(&c), b.apply_config(&c)) {
                (None, None) => true,
                (Some((x, p)), Some((y, q))) => x == y && p.same_value(q),
                _ => false,
            };
            if !same {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }

    pub fn equal_maps(a: &BasisMap, b: &BasisMap) -> Result<bool> {
        Ok(Self::first_difference(a, b)?.is_none())
    }

    /// Total and injective: a unitary generalized permutation.
    pub fn is_unitary(&self) -> Result<bool> {
        let t = self.tabulate()?;
        let Repr::Table(table) = &t.repr else {
            unreachable!()
        };
        let mut hit = vec![false; table.len()];
        for e in table.iter() {
            match e {
                None => return Ok(false),
                Some((j, _)) => {
                    if std::mem::replace(&mut hit[*j], true) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn to_dense(&self) -> Result<Tensor> {
        let total = self.configs();
        check_dense("dense basis map", total)?;
        let n = total as usize;
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            let c = decode(i, self.dim, self.sites.len());
            if let Some((c2, p)) = self.apply_config(&c) {
                data[encode(&c2, self.dim) * n + i] = p.to_complex();
            }
        }
        Tensor::new(&[("out", n), ("in", n)], data)
    }

    /// Recover a monomial map from a dense `(out, in)` matrix whose nonzero
    /// entries are `modulus`-th roots of unity.
    pub fn from_dense(t: &Tensor, sites: Vec<String>, dim: usize, modulus: u64, tol: f64) -> Result<BasisMap> {
        let n = guard::pow(dim, sites.len()) as usize;
        if t.dims() != vec![n, n] {
            return Err(Error::DimensionMismatch(format!("expected a {n}x{n} matrix")));
        }
        let mut table = vec![None; n];
        for (i, slot) in table.iter_mut().enumerate() {
            for j in 0..n {
                let v = t.data()[j * n + i];
                if v.norm() <= tol {
                    continue;
                }
                if slot.is_some() {
                    return Err(Error::Internal(format!("column {i} has two nonzero entries")));
                }
                let k = (v.arg() / std::f64::consts::TAU * modulus as f64).round() as i64;
                let p = PhaseInt::new(k, modulus);
                if (p.to_complex() - v).norm() > tol {
                    return Err(Error::Internal(format!("entry ({j},{i}) is not a root of unity of order {modulus}")));
                }
                *slot = Some((j, p));
            }
        }
        Ok(BasisMap {
            sites,
            dim,
            repr: Repr::Table(Arc::new(table)),
        })
    }
}
