//! The symmetry operator `U_g` on a triangular torus: left multiplication on
//! every vertex dressed with a phase collected from the triangles.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::basis_map::BasisMap;
use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::guard;
use crate::lattice::TriTorus;
use crate::phase::PhaseInt;
use crate::verdict::{sweep, tuples, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sample { count: usize, seed: u64 },
}

/// Exponent of `ω(g, r1, r1⁻¹r2, r2⁻¹r3)`.
pub fn triangle_exponent(w: &Cochain, g: usize, r: [usize; 3]) -> i64 {
    let grp = w.group();
    w.get(&[g, r[0], grp.ldiv(r[0], r[1]), grp.ldiv(r[1], r[2])]) as i64
}

/// Exponent of `Φ_g(config)`: up triangles count with `+`, down with `−`.
pub fn phase_exponent(w: &Cochain, g: usize, lattice: &TriTorus, config: &[usize]) -> i64 {
    let at = |t: &[usize; 3]| [config[t[0]], config[t[1]], config[t[2]]];
    let up: i64 = lattice.up.iter().map(|t| triangle_exponent(w, g, at(t))).sum();
    let down: i64 = lattice.down.iter().map(|t| triangle_exponent(w, g, at(t))).sum();
    (up - down).rem_euclid(w.modulus() as i64)
}

pub fn tnu_phase(w: &Cochain, g: usize, lattice: &TriTorus, config: &[usize]) -> PhaseInt {
    PhaseInt::new(phase_exponent(w, g, lattice, config), w.modulus())
}

fn require_normalized_cocycle(w: &Cochain) -> Result<()> {
    if w.level() != 4 {
        return Err(Error::InvalidLevel(w.level()));
    }
    if let Some(t) = w.normalization_violation() {
        return Err(Error::NotNormalized(t));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct TnuOperator {
    pub omega: Cochain,
    pub g: usize,
    pub lattice: TriTorus,
}

impl TnuOperator {
    pub fn new(w: &Cochain, g: usize, lattice: &TriTorus) -> Result<Self> {
        require_normalized_cocycle(w)?;
        w.group().check_element(g)?;
        Ok(TnuOperator {
            omega: w.clone(),
            g,
            lattice: lattice.clone(),
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.omega.group()
    }

    pub fn site_names(&self) -> Vec<String> {
        (0..self.lattice.vertex_count()).map(|v| format!("v{v}")).collect()
    }

    pub fn to_basis_map(&self) -> BasisMap {
        let op = self.clone();
        BasisMap::from_fn(self.site_names(), self.group().order(), move |c| {
            let grp = op.group();
            let out = c.iter().map(|&r| grp.mul(op.g, r)).collect();
            Some((out, tnu_phase(&op.omega, op.g, &op.lattice, c)))
        })
    }
}

pub fn build_tnu(w: &Cochain, g: usize, lattice: &TriTorus) -> Result<BasisMap> {
    Ok(TnuOperator::new(w, g, lattice)?.to_basis_map())
}

fn configs(group: &FiniteGroup, lattice: &TriTorus, mode: Mode) -> Result<Box<dyn Iterator<Item = Vec<usize>>>> {
    let n = group.order();
    let v = lattice.vertex_count();
    Ok(match mode {
        Mode::Exhaustive => {
            guard::check("exhaustive configurations", guard::pow(n, v), guard::EXHAUSTIVE_CONFIGS)?;
            Box::new(tuples(n, v))
        }
        Mode::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Box::new((0..count).map(move |_| (0..v).map(|_| rng.gen_range(0..n)).collect()))
        }
    })
}

/// `Φ_g(h·r) + Φ_h(r) = Φ_{gh}(r)` for all pairs and configurations. The
/// witness is `[g, h, r...]`.
pub fn verify_group_law(lattice: &TriTorus, w: &Cochain, mode: Mode) -> Result<Verdict> {
    require_normalized_cocycle(w)?;
    let grp = w.group();
    let m = w.modulus() as i64;
    let mut total = Verdict::pass(0);
    for cfg in configs(grp, lattice, mode)? {
        let v = sweep(tuples(grp.order(), 2), |p| {
            let (g, h) = (p[0], p[1]);
            let moved: Vec<usize> = cfg.iter().map(|&r| grp.mul(h, r)).collect();
            let lhs = phase_exponent(w, g, lattice, &moved) + phase_exponent(w, h, lattice, &cfg);
            let rhs = phase_exponent(w, grp.mul(g, h), lattice, &cfg);
            ((lhs - rhs).rem_euclid(m) != 0).then(|| "group law violated".to_string())
        });
        if !v.passed {
            let mut wit = v.witness.clone().unwrap_or_default();
            wit.extend_from_slice(&cfg);
            return Ok(Verdict {
                witness: Some(wit),
                checked: total.checked + v.checked,
                ..v
            });
        }
        total.checked += v.checked;
    }
    Ok(total)
}

/// `(w_g)_{r,s}` rearrangement of the cocycle condition, for every `(g,r,s,t)`.
pub fn verify_w_identity(w: &Cochain) -> Verdict {
    let grp = w.group();
    let m = w.modulus() as i64;
    let e = |a: &[usize]| w.get(a) as i64;
    sweep(tuples(grp.order(), 4), |x| {
        let (g, r, s, t) = (x[0], x[1], x[2], x[3]);
        let gi = grp.inv(g);
        let lhs = -e(&[g, grp.mul(gi, r), grp.ldiv(r, s), grp.ldiv(s, t)]);
        let rhs = e(&[gi, r, grp.ldiv(r, s), grp.ldiv(s, t)]) + e(&[g, gi, r, grp.ldiv(r, t)])
            - e(&[g, gi, s, grp.ldiv(s, t)])
            - e(&[g, gi, r, grp.ldiv(r, s)]);
        ((lhs - rhs).rem_euclid(m) != 0).then(|| "gauge rearrangement fails".to_string())
    })
}

/// `U_g† = U_{g⁻¹}` and `U_g` a unitary generalized permutation.
pub fn verify_unitarity(lattice: &TriTorus, w: &Cochain, g: usize) -> Result<Verdict> {
    let u = build_tnu(w, g, lattice)?;
    let inv = build_tnu(w, w.group().inv(g), lattice)?;
    if !u.is_unitary()? {
        return Ok(Verdict::fail(0, vec![g], "not a generalized permutation"));
    }
    let configs = u.configs() as u64;
    if let Some(c) = BasisMap::first_difference(&u.dagger()?, &inv)? {
        return Ok(Verdict::fail(configs, c, "dagger differs from inverse element"));
    }
    Ok(Verdict::pass(configs).and(verify_w_identity(w)))
}

/// Directed-edge coefficients of the fusion corner terms summed over all
/// triangles; every coefficient vanishes when the orientations pair up.
pub fn corner_edge_balance(lattice: &TriTorus) -> HashMap<(usize, usize), i64> {
    let mut coeff: HashMap<(usize, usize), i64> = HashMap::new();
    for (tris, sign) in [(&lattice.up, 1), (&lattice.down, -1)] {
        for t in tris {
            *coeff.entry((t[0], t[1])).or_default() += sign;
            *coeff.entry((t[1], t[2])).or_default() += sign;
            *coeff.entry((t[0], t[2])).or_default() -= sign;
        }
    }
    coeff.retain(|_, c| *c != 0);
    coeff
}

/// `ω(g,hr,r⁻¹s,s⁻¹t) ω(h,r,r⁻¹s,s⁻¹t) ω(g,h,r,r⁻¹t) / (ω(g,h,r,r⁻¹s) ω(g,h,s,s⁻¹t))
/// = ω(gh,r,r⁻¹s,s⁻¹t)`. `drop_middle` removes `ω(g,h,r,r⁻¹t)` as a control.
pub fn verify_corner_reduction(w: &Cochain, g: usize, h: usize, drop_middle: bool) -> Verdict {
    let grp = w.group();
    let m = w.modulus() as i64;
    let e = |a: &[usize]| w.get(a) as i64;
    sweep(tuples(grp.order(), 3), |x| {
        let (r, s, t) = (x[0], x[1], x[2]);
        let (rs, st, rt) = (grp.ldiv(r, s), grp.ldiv(s, t), grp.ldiv(r, t));
        let middle = if drop_middle { 0 } else { e(&[g, h, r, rt]) };
        let lhs = e(&[g, grp.mul(h, r), rs, st]) + e(&[h, r, rs, st]) + middle
            - e(&[g, h, r, rs])
            - e(&[g, h, s, st]);
        let rhs = e(&[grp.mul(g, h), r, rs, st]);
        ((lhs - rhs).rem_euclid(m) != 0).then(|| "three-factor reduction fails".to_string())
    })
}

/// Corner terms cancel in pairs on the lattice, their total vanishes on
/// every configuration, and each triangle obeys the three-factor reduction.
pub fn verify_boundary_fusion(w: &Cochain, g: usize, h: usize, lattice: &TriTorus, mode: Mode) -> Result<Verdict> {
    let grp = w.group();
    let unbalanced = corner_edge_balance(lattice);
    if let Some((&(a, b), _)) = unbalanced.iter().min() {
        return Ok(Verdict::fail(0, vec![a, b], "corner terms on this edge do not pair"));
    }
    let m = w.modulus() as i64;
    let f = |r: usize, s: usize| w.get(&[g, h, r, grp.ldiv(r, s)]) as i64;
    let corner = |c: [usize; 3]| f(c[0], c[1]) + f(c[1], c[2]) - f(c[0], c[2]);
    let paired = sweep(configs(grp, lattice, mode)?, |cfg| {
        let at = |t: &[usize; 3]| [cfg[t[0]], cfg[t[1]], cfg[t[2]]];
        let up: i64 = lattice.up.iter().map(|t| corner(at(t))).sum();
        let down: i64 = lattice.down.iter().map(|t| corner(at(t))).sum();
        ((up - down).rem_euclid(m) != 0).then(|| "corner phases survive on the torus".to_string())
    });
    Ok(paired.and(verify_corner_reduction(w, g, h, false)))
}

/// Vertex weight `ω(g, h, h⁻¹k, k⁻¹l)` of the plaquette realization.
pub fn plaquette_vertex_weight(w: &Cochain, g: usize, h: usize, k: usize, l: usize) -> PhaseInt {
    let grp = w.group();
    w.phase(&[g, h, grp.ldiv(h, k), grp.ldiv(k, l)])
}

/// Around `v(1,1)` of a 3×3 torus, the signed vertex weights of the six
/// adjacent triangles reproduce their triangle phases for every labelling.
pub fn verify_plaquette_consistency(w: &Cochain, g: usize) -> Result<Verdict> {
    let lattice = TriTorus::new(3, 3)?;
    let center = lattice.vertex(1, 1);
    let tris = lattice.triangles_at(center);
    let mut verts: Vec<usize> = tris.iter().flat_map(|(_, t)| t.iter().copied()).collect();
    verts.sort_unstable();
    verts.dedup();
    let grp = w.group();
    let m = w.modulus() as i64;
    let mut config = vec![grp.identity(); lattice.vertex_count()];
    Ok(sweep(tuples(grp.order(), verts.len()), |labels| {
        for (&v, &x) in verts.iter().zip(labels) {
            config[v] = x;
        }
        let mut from_weights = 0i64;
        let mut from_triangles = 0i64;
        for (up, t) in &tris {
            let sign = if *up { 1 } else { -1 };
            let p = plaquette_vertex_weight(w, g, config[t[0]], config[t[1]], config[t[2]]);
            from_weights += sign * p.num() as i64;
            from_triangles += sign * triangle_exponent(w, g, [config[t[0]], config[t[1]], config[t[2]]]);
        }
        ((from_weights - from_triangles).rem_euclid(m) != 0).then(|| "plaquette weight mismatch".to_string())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::{carry_four_cocycle, zxz_four_cocycle};
    use crate::lattice::DownOrder;

    const A: usize = 2;
    const B: usize = 1;

    #[test]
    fn gate_value() {
        let w = zxz_four_cocycle(1, 1);
        assert_eq!(triangle_exponent(&w, A, [B, 0, B]), 1);
        assert_eq!(triangle_exponent(&w, 0, [B, 3, A]), 0);
    }

    #[test]
    fn trivial_cocycle_gives_bare_permutation() {
        let g = FiniteGroup::z2xz2();
        let w = Cochain::zero(&g, 4, 2);
        let lat = TriTorus::new(2, 2).unwrap();
        for x in g.elements() {
            let u = build_tnu(&w, x, &lat).unwrap();
            let l = BasisMap::left_regular(&g, u.sites().to_vec(), x);
            assert!(BasisMap::equal_maps(&u, &l).unwrap());
        }
        let id = build_tnu(&zxz_four_cocycle(1, 1), 0, &lat).unwrap();
        assert!(BasisMap::equal_maps(&id, &BasisMap::identity(id.sites().to_vec(), 4)).unwrap());
    }

    #[test]
    fn group_law_small_tori() {
        let lat = TriTorus::new(2, 2).unwrap();
        for (p0, p1) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let w = zxz_four_cocycle(p0, p1);
            assert!(verify_group_law(&lat, &w, Mode::Exhaustive).unwrap().passed);
        }
        let big = TriTorus::new(3, 3).unwrap();
        let v = verify_group_law(&big, &zxz_four_cocycle(1, 1), Mode::Sample { count: 200, seed: 1 }).unwrap();
        assert!(v.passed);
    }

    #[test]
    fn skewed_order_breaks_group_law() {
        let lat = TriTorus::with_order(2, 2, DownOrder::Skewed).unwrap();
        assert!(!corner_edge_balance(&lat).is_empty());
        let w = carry_four_cocycle(3, 1);
        let v = verify_group_law(&lat, &w, Mode::Exhaustive).unwrap();
        assert!(!v.passed);
        let ok = TriTorus::new(2, 2).unwrap();
        assert!(verify_group_law(&ok, &w, Mode::Exhaustive).unwrap().passed);
    }

    #[test]
    fn unitarity_and_gauge() {
        let lat = TriTorus::new(2, 2).unwrap();
        let w = zxz_four_cocycle(1, 1);
        for g in 0..4 {
            assert!(verify_unitarity(&lat, &w, g).unwrap().passed);
        }
    }

    #[test]
    fn boundary_fusion_and_control() {
        let w = zxz_four_cocycle(1, 0);
        let lat = TriTorus::new(3, 3).unwrap();
        for g in 0..4 {
            for h in 0..4 {
                let v = verify_boundary_fusion(&w, g, h, &lat, Mode::Sample { count: 50, seed: 3 }).unwrap();
                assert!(v.passed, "{g} {h}");
            }
        }
        let failing = (0..16).any(|i| !verify_corner_reduction(&w, i / 4, i % 4, true).passed);
        assert!(failing);
    }

    #[test]
    fn plaquette_weights() {
        let w = zxz_four_cocycle(1, 1);
        assert!(plaquette_vertex_weight(&w, 0, B, A, 3).is_one());
        // ω(a, 1, b, b⁻¹ab) = ω(a,1,b,a): identity argument
        assert!(plaquette_vertex_weight(&w, A, 0, B, 3).is_one());
        assert!(verify_plaquette_consistency(&w, A).unwrap().passed);
    }

    #[test]
    fn rejects_unnormalized() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let w = Cochain::from_fn(&g, 4, 2, |_| 1);
        assert!(matches!(build_tnu(&w, 1, &TriTorus::new(1, 1).unwrap()), Err(Error::NotNormalized(_))));
    }
}
