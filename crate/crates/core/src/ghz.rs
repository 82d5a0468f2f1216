//! States written as finite sums of computational-basis product states.

use std::collections::BTreeMap;

use crate::basis_map::BasisMap;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::guard;
use crate::phase::{Amplitude, PhaseInt};

#[derive(Clone, Debug)]
pub struct Term {
    pub label: Vec<usize>,
    pub amplitude: Amplitude,
}

/// Terms are keyed by configuration, so no configuration appears twice.
#[derive(Clone, Debug)]
pub struct GhzSum {
    sites: Vec<String>,
    dim: usize,
    terms: BTreeMap<Vec<usize>, Term>,
}

impl GhzSum {
    pub fn empty(sites: Vec<String>, dim: usize) -> Self {
        GhzSum {
            sites,
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// Build from `(label, phase, configuration)` triples, merging repeats.
    pub fn from_terms(
        sites: Vec<String>,
        dim: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, PhaseInt, Vec<usize>)>,
    ) -> Result<Self> {
        let mut s = Self::empty(sites, dim);
        for (label, phase, cfg) in terms {
            s.push(label, Amplitude::from_phase(phase), cfg)?;
        }
        s.prune();
        Ok(s)
    }

    fn push(&mut self, label: Vec<usize>, amp: Amplitude, cfg: Vec<usize>) -> Result<()> {
        if cfg.len() != self.sites.len() || cfg.iter().any(|&c| c >= self.dim) {
            return Err(Error::SiteMismatch(format!(
                "configuration of length {} for {} sites",
                cfg.len(),
                self.sites.len()
            )));
        }
        match self.terms.get_mut(&cfg) {
            Some(t) => t.amplitude.add(&amp),
            None => {
                self.terms.insert(
                    cfg,
                    Term {
                        label,
                        amplitude: amp,
                    },
                );
                guard::check("product terms", self.terms.len() as u128, guard::GHZ_TERMS)?;
            }
        }
        Ok(())
    }

    fn prune(&mut self) {
        self.terms.retain(|_, t| !t.amplitude.is_zero());
    }

    pub fn sites(&self) -> &[String] {
        &self.sites
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Term)> {
        self.terms.iter()
    }

    pub fn amplitude(&self, cfg: &[usize]) -> Option<&Amplitude> {
        self.terms.get(cfg).map(|t| &t.amplitude)
    }

    pub fn apply(&self, map: &BasisMap) -> Result<GhzSum> {
        if map.sites() != self.sites.as_slice() || map.dim() != self.dim {
            return Err(Error::SiteMismatch(
                "operator and state live on different sites".into(),
            ));
        }
        let mut out = Self::empty(self.sites.clone(), self.dim);
        for (cfg, t) in &self.terms {
            if let Some((c2, p)) = map.apply_config(cfg) {
                out.push(t.label.clone(), t.amplitude.mul_phase(p), c2)?;
            }
        }
        out.prune();
        Ok(out)
    }

    /// Exact equality of states: same support and equal amplitudes.
    pub fn same_state(&self, other: &GhzSum) -> bool {
        self.sites == other.sites
            && self.dim == other.dim
            && self.terms.len() == other.terms.len()
            && self.terms.iter().all(|(c, t)| {
                other
                    .terms
                    .get(c)
                    .is_some_and(|u| t.amplitude.eq_value(&u.amplitude))
            })
    }

    /// First configuration at which the states disagree.
    pub fn first_difference(&self, other: &GhzSum) -> Option<Vec<usize>> {
        for (c, t) in &self.terms {
            match other.terms.get(c) {
                Some(u) if t.amplitude.eq_value(&u.amplitude) => {}
                _ => return Some(c.clone()),
            }
        }
        other
            .terms
            .keys()
            .find(|c| !self.terms.contains_key(*c))
            .cloned()
    }
}

/// `Σ_r |r, …, r⟩` on `parties` sites.
pub fn ghz(g: &FiniteGroup, parties: usize) -> Result<GhzSum> {
    let sites = (0..parties).map(|i| format!("p{i}")).collect();
    GhzSum::from_terms(
        sites,
        g.order(),
        g.elements().map(|r| (vec![r], PhaseInt::one(1), vec![r; parties])),
    )
}
