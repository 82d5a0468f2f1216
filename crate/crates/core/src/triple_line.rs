//! Triple-line tensors in the reduced label parametrization: each tensor is a
//! phase weight on group labels, with its delta structure implicit.
//!
//! Label conventions. A site carries three corner labels `(k1, k2, k3)` read
//! along the branching order of its vertex. A fusion tensor `F_{g,h}` sends
//! the transversal label `k` to `(k, hk, ghk)` and carries the chain weight
//! `ω(g, h, r, r⁻¹s)` between consecutive chain labels `r, s`. Associators
//! `R_{g,h,k}` weigh a chain label `t` by `ω(g, h, k, t)`.

use num_complex::Complex64;

use crate::basis_map::BasisMap;
use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::ghz::GhzSum;
use crate::group::FiniteGroup;
use crate::guard;
use crate::lattice::TriTorus;
use crate::phase::PhaseInt;
use crate::tensor::{allclose, Tensor, DEFAULT_TOL};
use crate::tnu::phase_exponent;
use crate::verdict::{sweep, tuples, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    fn sign(self) -> i64 {
        match self {
            Orientation::Up => 1,
            Orientation::Down => -1,
        }
    }
}

fn require_normalized(w: &Cochain) -> Result<()> {
    if w.level() != 4 {
        return Err(Error::InvalidLevel(w.level()));
    }
    match w.normalization_violation() {
        Some(t) => Err(Error::NotNormalized(t)),
        None => Ok(()),
    }
}

#[derive(Clone, Debug)]
pub struct TripleLineSite {
    pub group: FiniteGroup,
    pub g: usize,
    pub orientation: Orientation,
    /// Indexed by `(k1·n + k2)·n + k3`. `None` marks a zeroed entry.
    pub weight: Vec<Option<PhaseInt>>,
}

impl TripleLineSite {
    pub fn weight_at(&self, k: [usize; 3]) -> Option<PhaseInt> {
        let n = self.group.order();
        self.weight[(k[0] * n + k[1]) * n + k[2]]
    }
}

pub fn build_site(w: &Cochain, g: usize, orientation: Orientation) -> Result<TripleLineSite> {
    require_normalized(w)?;
    let grp = w.group();
    grp.check_element(g)?;
    let m = w.modulus();
    let weight = tuples(grp.order(), 3)
        .map(|k| {
            let e = w.get(&[g, k[0], grp.ldiv(k[0], k[1]), grp.ldiv(k[1], k[2])]) as i64;
            Some(PhaseInt::new(orientation.sign() * e, m))
        })
        .collect();
    Ok(TripleLineSite {
        group: grp.clone(),
        g,
        orientation,
        weight,
    })
}

/// `f(g,h; r,s) = ω(g, h, r, r⁻¹s)`.
fn chain(w: &Cochain, g: usize, h: usize, r: usize, s: usize) -> i64 {
    w.get(&[g, h, r, w.group().ldiv(r, s)]) as i64
}

#[derive(Clone, Debug)]
pub struct FusionTensor {
    pub g: usize,
    pub h: usize,
    /// Indexed by `r·n + s`.
    pub chain_weight: Vec<PhaseInt>,
}

pub fn build_fusion(w: &Cochain, g: usize, h: usize) -> FusionTensor {
    let n = w.group().order();
    FusionTensor {
        g,
        h,
        chain_weight: tuples(n, 2)
            .map(|x| PhaseInt::new(chain(w, g, h, x[0], x[1]), w.modulus()))
            .collect(),
    }
}

#[derive(Clone, Debug)]
pub struct AssociatorTensor {
    pub g: usize,
    pub h: usize,
    pub k: usize,
    pub inverse: bool,
    pub weight: Vec<PhaseInt>,
}

pub fn build_associator(w: &Cochain, g: usize, h: usize, k: usize, inverse: bool) -> AssociatorTensor {
    let sign = if inverse { -1 } else { 1 };
    AssociatorTensor {
        g,
        h,
        k,
        inverse,
        weight: w
            .group()
            .elements()
            .map(|t| PhaseInt::new(sign * w.get(&[g, h, k, t]) as i64, w.modulus()))
            .collect(),
    }
}

/// `T_g T_h = T_{gh}` up to the three fusion corner factors, for every
/// `(k1,k2,k3)` and both orientations. Witness `[k1, k2, k3, orientation]`.
pub fn verify_product_relation(w: &Cochain, g: usize, h: usize) -> Result<Verdict> {
    let grp = w.group();
    let m = w.modulus() as i64;
    let mut out = Verdict::pass(0);
    for (o_idx, o) in [Orientation::Up, Orientation::Down].into_iter().enumerate() {
        let tg = build_site(w, g, o)?;
        let th = build_site(w, h, o)?;
        let tgh = build_site(w, grp.mul(g, h), o)?;
        let v = sweep(tuples(grp.order(), 3), |k| {
            let k = [k[0], k[1], k[2]];
            let hk = [grp.mul(h, k[0]), grp.mul(h, k[1]), grp.mul(h, k[2])];
            let lhs = th.weight_at(k)?.num() as i64 + tg.weight_at(hk)?.num() as i64;
            let corners = chain(w, g, h, k[0], k[1]) + chain(w, g, h, k[1], k[2]) - chain(w, g, h, k[0], k[2]);
            let rhs = tgh.weight_at(k)?.num() as i64 + o.sign() * corners;
            ((lhs - rhs).rem_euclid(m) != 0).then(|| format!("product relation fails, orientation {o_idx}"))
        });
        if !v.passed {
            let mut wit = v.witness.clone().unwrap_or_default();
            wit.push(o_idx);
            return Ok(Verdict { witness: Some(wit), ..v });
        }
        out = out.and(v);
    }
    Ok(out)
}

/// Dense `F_{g,h}`: inputs `(k, r, s)`, outputs `(k0, k1, k2, ro, so)`.
pub fn fusion_dense(w: &Cochain, g: usize, h: usize) -> Result<Tensor> {
    let grp = w.group();
    let n = grp.order();
    let d = [
        ("k0", n),
        ("k1", n),
        ("k2", n),
        ("ro", n),
        ("so", n),
        ("k", n),
        ("r", n),
        ("s", n),
    ];
    Tensor::from_fn(&d, |ix| {
        let (k0, k1, k2, ro, so, k, r, s) = (ix[0], ix[1], ix[2], ix[3], ix[4], ix[5], ix[6], ix[7]);
        let hit = k0 == k && k1 == grp.mul(h, k) && k2 == grp.mul(g, grp.mul(h, k)) && ro == r && so == s;
        if hit {
            PhaseInt::new(chain(w, g, h, r, s), w.modulus()).to_complex()
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// `F_{k,l}† F_{g,h} = δ_{g,k} δ_{h,l} 𝟙` by dense contraction over the
/// transversal and chain outputs. Witness `[g, h, k, l]`.
pub fn verify_fusion_orthogonality(w: &Cochain) -> Result<Verdict> {
    let grp = w.group();
    let n = grp.order();
    guard::check("fusion tensor entries", guard::pow(n, 8), guard::DENSE_DIM * guard::DENSE_DIM)?;
    let dense: Vec<Tensor> = tuples(n, 2)
        .map(|p| fusion_dense(w, p[0], p[1]))
        .collect::<Result<_>>()?;
    let outs = [("k0", "k0"), ("k1", "k1"), ("k2", "k2"), ("ro", "ro"), ("so", "so")];
    let id = Tensor::from_fn(
        &[("k'", n), ("r'", n), ("s'", n), ("k", n), ("r", n), ("s", n)],
        |ix| Complex64::new((ix[0] == ix[3] && ix[1] == ix[4] && ix[2] == ix[5]) as u8 as f64, 0.0),
    )?;
    let zero = Tensor::zeros(&[("k'", n), ("r'", n), ("s'", n), ("k", n), ("r", n), ("s", n)])?;
    let mut checked = 0;
    for (i, fa) in dense.iter().enumerate() {
        for (j, fb) in dense.iter().enumerate() {
            let bra = fb
                .clone()
                .conj()
                .rename("k", "k'")?
                .rename("r", "r'")?
                .rename("s", "s'")?;
            let prod = bra.contract(fa, &outs)?;
            checked += 1;
            let expect = if i == j { &id } else { &zero };
            if !allclose(&prod, expect, DEFAULT_TOL) {
                return Ok(Verdict::fail(
                    checked,
                    vec![i / n, i % n, j / n, j % n],
                    "fusion tensors are not orthogonal",
                ));
            }
        }
    }
    Ok(Verdict::pass(checked))
}

/// For every chain segment `(r, s)`:
/// `f(g,h; kr,ks) + f(gh,k; r,s) = f(h,k; r,s) + f(g,hk; r,s) + R(s) − R(r)`,
/// and `R̃ R = 𝟙` pointwise. Witness `[r, s]`.
pub fn verify_associator_relation(w: &Cochain, g: usize, h: usize, k: usize) -> Verdict {
    let grp = w.group();
    let m = w.modulus() as i64;
    let r_fwd = build_associator(w, g, h, k, false);
    let r_inv = build_associator(w, g, h, k, true);
    let inverse = sweep(grp.elements().map(|t| vec![t]), |t| {
        (!r_fwd.weight[t[0]].mul(r_inv.weight[t[0]]).is_one()).then(|| "left inverse fails".to_string())
    });
    let relation = sweep(tuples(grp.order(), 2), |x| {
        let (r, s) = (x[0], x[1]);
        let lhs = chain(w, g, h, grp.mul(k, r), grp.mul(k, s)) + chain(w, grp.mul(g, h), k, r, s);
        let rhs = chain(w, h, k, r, s)
            + chain(w, g, grp.mul(h, k), r, s)
            + r_fwd.weight[s].num() as i64
            - r_fwd.weight[r].num() as i64;
        ((lhs - rhs).rem_euclid(m) != 0).then(|| "associator relation fails".to_string())
    });
    relation.and(inverse)
}

/// One vertical ring of `N` fusion tensors `F_{g,h}` whose chain labels are
/// left-translated by `shift`. Axes `in{i}`, `out{i}`.
fn fusion_ring(w: &Cochain, g: usize, h: usize, shift: usize, len: usize) -> Result<Tensor> {
    let grp = w.group();
    let n = grp.order();
    let site = |i: usize| -> Result<Tensor> {
        let (a_in, a_out, bl, br) = (format!("in{i}"), format!("out{i}"), format!("b{i}"), format!("b{}", i + 1));
        Tensor::from_fn(&[(&a_in, n), (&a_out, n), (&bl, n), (&br, n)], |ix| {
            if ix[0] != ix[1] || ix[2] != grp.mul(shift, ix[0]) {
                return Complex64::new(0.0, 0.0);
            }
            PhaseInt::new(chain(w, g, h, ix[2], ix[3]), w.modulus()).to_complex()
        })
    };
    let mut ring = site(0)?;
    for i in 1..len {
        let b = format!("b{i}");
        ring = ring.contract(&site(i)?, &[(&b, &b)])?;
    }
    ring.trace("b0", &format!("b{len}"))
}

/// Apply `first`, then `second`, both with axes `in{i}`/`out{i}`.
fn then(first: &Tensor, second: &Tensor, len: usize) -> Result<Tensor> {
    let mut a = first.clone();
    let mut b = second.clone();
    for i in 0..len {
        a = a.rename(&format!("out{i}"), &format!("m{i}"))?;
        b = b.rename(&format!("in{i}"), &format!("m{i}"))?;
    }
    let names: Vec<String> = (0..len).map(|i| format!("m{i}")).collect();
    let pairs: Vec<(&str, &str)> = names.iter().map(|s| (s.as_str(), s.as_str())).collect();
    a.contract(&b, &pairs)
}

/// Both fusion orders around a periodic ring agree exactly:
/// `F_{gh,k} · F_{g,h}[k·] = F_{g,hk} · F_{h,k}`.
pub fn verify_fusion_associativity_ring(w: &Cochain, g: usize, h: usize, k: usize, len: usize) -> Result<Verdict> {
    if len == 0 {
        return Err(Error::InvalidLattice("ring of length 0".into()));
    }
    let grp = w.group();
    guard::check("ring dimension", guard::pow(grp.order(), len), guard::DENSE_DIM)?;
    let lhs = then(&fusion_ring(w, g, h, k, len)?, &fusion_ring(w, grp.mul(g, h), k, 0, len)?, len)?;
    let rhs = then(&fusion_ring(w, h, k, 0, len)?, &fusion_ring(w, g, grp.mul(h, k), 0, len)?, len)?;
    let order: Vec<String> = lhs.axes().iter().map(|a| a.0.clone()).collect();
    let rhs = rhs.permute(&order.iter().map(String::as_str).collect::<Vec<_>>())?;
    let diff = lhs.max_abs_diff(&rhs).unwrap_or(f64::INFINITY);
    Ok(if diff <= DEFAULT_TOL {
        Verdict::pass(1)
    } else {
        Verdict::fail(1, vec![g, h, k, len], format!("ring contractions differ by {diff:.3e}"))
    })
}

/// Five associators around the bipyramid; the contraction must not depend on
/// the chain label and then equals `ω(g,h,k,l)`. With `rescale = Some(α)`
/// every associator is multiplied by `α(g,h,k)`.
pub fn extract_pentagon_scalar(w: &Cochain, rescale: Option<&Cochain>, q: [usize; 4]) -> Result<PhaseInt> {
    let grp = w.group();
    let modulus = match rescale {
        Some(a) => num_integer::lcm(w.modulus(), a.modulus()),
        None => w.modulus(),
    };
    let lift_w = modulus / w.modulus();
    let r = |g: usize, h: usize, k: usize, t: usize| -> i64 {
        let base = (w.get(&[g, h, k, t]) * lift_w) as i64;
        base + rescale.map_or(0, |a| (a.get(&[g, h, k]) * (modulus / a.modulus())) as i64)
    };
    let [g, h, k, l] = q;
    let value = |t: usize| -> i64 {
        let v = r(g, grp.mul(h, k), l, t) - r(grp.mul(g, h), k, l, t) + r(g, h, k, grp.mul(l, t))
            - r(g, h, grp.mul(k, l), t)
            + r(h, k, l, t);
        v.rem_euclid(modulus as i64)
    };
    let first = value(grp.identity());
    for t in grp.elements() {
        let v = value(t);
        if v != first {
            return Err(Error::NonConstant {
                first: vec![grp.identity()],
                first_value: first as u64,
                second: vec![t],
                second_value: v as u64,
            });
        }
    }
    Ok(PhaseInt::new(first, modulus))
}

/// Sub-sites of the hexagonal network dual to `lattice`: one per triangle
/// corner, listed as `(triangle, corner)`, with the vertex it surrounds.
fn hex_subsites(lattice: &TriTorus) -> Vec<(usize, usize, usize)> {
    lattice
        .up
        .iter()
        .chain(&lattice.down)
        .enumerate()
        .flat_map(|(t, tri)| (0..3).map(move |c| (t, c, tri[c])))
        .collect()
}

/// Plaquette labels of a sub-site configuration, if every plaquette's
/// sub-sites agree.
fn plaquette_labels(subsites: &[(usize, usize, usize)], nverts: usize, cfg: &[usize]) -> Option<Vec<usize>> {
    let mut labels = vec![None; nverts];
    for (&(_, _, v), &x) in subsites.iter().zip(cfg) {
        match labels[v] {
            None => labels[v] = Some(x),
            Some(y) if y != x => return None,
            _ => {}
        }
    }
    labels.into_iter().collect()
}

/// `O_g` on the hexagonal network: left multiplication with the triangle
/// phases on plaquette-correlated configurations, zero elsewhere.
pub fn hex_operator(w: &Cochain, g: usize, lattice: &TriTorus) -> Result<BasisMap> {
    require_normalized(w)?;
    let subsites = hex_subsites(lattice);
    let names = subsites.iter().map(|(t, c, _)| format!("t{t}c{c}")).collect();
    let (w2, lat, nverts) = (w.clone(), lattice.clone(), lattice.vertex_count());
    Ok(BasisMap::from_fn(names, w.group().order(), move |cfg| {
        let r = plaquette_labels(&subsites, nverts, cfg)?;
        let grp = w2.group();
        let out = cfg.iter().map(|&x| grp.mul(g, x)).collect();
        Some((out, PhaseInt::new(phase_exponent(&w2, g, &lat, &r), w2.modulus())))
    }))
}

/// Components of the sub-sites linked by the maximally entangled pairs on
/// hexagon edges: the two corners at `u` of two triangles sharing edge `uv`.
fn pair_components(lattice: &TriTorus) -> Vec<usize> {
    let subsites = hex_subsites(lattice);
    let mut parent: Vec<usize> = (0..subsites.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let tris: Vec<[usize; 3]> = lattice.up.iter().chain(&lattice.down).copied().collect();
    let edges = |t: &[usize; 3]| [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])];
    let ups = lattice.up.len();
    for a in 0..ups {
        for b in ups..tris.len() {
            for (u, v) in edges(&tris[a]) {
                if edges(&tris[b]).iter().any(|&(x, y)| (x, y) == (u, v) || (x, y) == (v, u)) {
                    for vert in [u, v] {
                        for ca in (0..3).filter(|&c| tris[a][c] == vert) {
                            for cb in (0..3).filter(|&c| tris[b][c] == vert) {
                                let (i, j) = (find(&mut parent, 3 * a + ca), find(&mut parent, 3 * b + cb));
                                parent[i] = j;
                            }
                        }
                    }
                }
            }
        }
    }
    (0..subsites.len()).map(|i| find(&mut parent, i)).collect()
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ProjectorReport {
    pub verdict: Verdict,
    pub rank: u128,
    pub plaquettes: usize,
}

/// `O₁` on the hexagonal network dual to `lattice`; see [`ProjectorReport`].
/// Checks that `O₁` is a diagonal 0/1 projector equal to the product of
/// per-plaquette projectors `Σ_k |k…k⟩⟨k…k|`, that it fixes the state `|Ψ⟩`
/// built from the edge pairs, that `O₁² = O₁`, and that `O_{g⁻¹} O_g = O₁`.
pub fn verify_identity_projector(w: &Cochain, lattice: &TriTorus) -> Result<ProjectorReport> {
    let grp = w.group();
    let n = grp.order();
    let o1 = hex_operator(w, grp.identity(), lattice)?.tabulate()?;
    let sites = o1.sites().to_vec();
    let subsites = hex_subsites(lattice);

    let diagonal = sweep(tuples(n, sites.len()), |cfg| match o1.apply_config(cfg) {
        None => None,
        Some((c, p)) => (c != cfg || !p.is_one()).then(|| "O_1 is not a diagonal 0/1 matrix".to_string()),
    });

    let comps = pair_components(lattice);
    let mut roots = comps.clone();
    roots.sort_unstable();
    roots.dedup();
    let plaquettes = roots.len();
    let per_plaquette = BasisMap::from_fn(sites.clone(), n, move |cfg| {
        let mut label = vec![None; subsites.len()];
        for (i, &x) in cfg.iter().enumerate() {
            match label[comps[i]] {
                None => label[comps[i]] = Some(x),
                Some(y) if y != x => return None,
                _ => {}
            }
        }
        Some((cfg.to_vec(), PhaseInt::one(1)))
    });
    let product = match BasisMap::first_difference(&o1, &per_plaquette)? {
        None => Verdict::pass(o1.configs() as u64),
        Some(c) => Verdict::fail(o1.configs() as u64, c, "O_1 differs from the plaquette projectors"),
    };
    let comps = pair_components(lattice);
    let psi_terms = tuples(n, plaquettes).map(|lab| {
        let cfg: Vec<usize> = comps
            .iter()
            .map(|c| lab[roots.binary_search(c).expect("root")])
            .collect();
        (lab, PhaseInt::one(1), cfg)
    });
    let psi = GhzSum::from_terms(sites.clone(), n, psi_terms)?;
    let fixed = if psi.apply(&o1)?.same_state(&psi) {
        Verdict::pass(psi.len() as u64)
    } else {
        Verdict::fail(psi.len() as u64, vec![], "O_1 does not fix the edge-pair state")
    };
    let square = match BasisMap::first_difference(&BasisMap::compose(&o1, &o1)?, &o1)? {
        None => Verdict::pass(1),
        Some(c) => Verdict::fail(1, c, "O_1 is not idempotent"),
    };
    let mut inverse = Verdict::pass(0);
    for g in grp.elements() {
        let og = hex_operator(w, g, lattice)?;
        let ogi = hex_operator(w, grp.inv(g), lattice)?;
        let v = match BasisMap::first_difference(&BasisMap::compose(&ogi, &og)?, &o1)? {
            None => Verdict::pass(1),
            Some(c) => Verdict::fail(1, c, format!("O_g^-1 O_g differs from O_1 at g = {g}")),
        };
        inverse = inverse.and(v);
    }
    Ok(ProjectorReport {
        verdict: diagonal.and(product).and(fixed).and(square).and(inverse),
        rank: guard::pow(n, plaquettes),
        plaquettes,
    })
}

/// Injectivity of `(k1,k2,k3) ↦ ((k1,gk1),(k2,gk2),(k3,gk3))` weighted by the
/// site phases. A zeroed weight kills a column and is reported.
pub fn verify_left_invertible(site: &TripleLineSite) -> Verdict {
    let grp = &site.group;
    let n = grp.order();
    if let Some(k) = tuples(n, 3).find(|k| site.weight_at([k[0], k[1], k[2]]).is_none()) {
        return Verdict::fail(0, k, "zero weight: column annihilated");
    }
    let mut seen = std::collections::HashSet::new();
    sweep(tuples(n, 3), |k| {
        let image: Vec<(usize, usize)> = k.iter().map(|&x| (x, grp.mul(site.g, x))).collect();
        (!seen.insert(image)).then(|| "two virtual labels share a physical image".to_string())
    })
}
