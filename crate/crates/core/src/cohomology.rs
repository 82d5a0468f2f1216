//! Coboundary equivalence, normalization and cohomology groups.

use num_bigint::BigInt;
use num_traits::One;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::guard;
use crate::snf::{smith_diagonal, ModSmith};

/// Tuples of length `n`, first coordinate most significant. With
/// `normalized`, tuples containing the identity are left out.
fn basis(g: &FiniteGroup, n: usize, normalized: bool) -> (Vec<Vec<usize>>, Vec<Option<usize>>) {
    let order = g.order();
    let total = order.pow(n as u32);
    let mut tuples = Vec::new();
    let mut lookup = vec![None; total];
    let mut args = vec![0; n];
    for (idx, slot) in lookup.iter_mut().enumerate() {
        let mut c = idx;
        for a in args.iter_mut().rev() {
            *a = c % order;
            c /= order;
        }
        if normalized && args.contains(&g.identity()) {
            continue;
        }
        *slot = Some(tuples.len());
        tuples.push(args.clone());
    }
    (tuples, lookup)
}

fn flat(g: &FiniteGroup, args: &[usize]) -> usize {
    args.iter().fold(0, |acc, &a| acc * g.order() + a)
}

/// Integer matrix of `δ : Cⁿ → Cⁿ⁺¹`, rows indexed by `(n+1)`-tuples.
pub fn coboundary_matrix(g: &FiniteGroup, n: usize, normalized: bool) -> (Vec<Vec<i64>>, usize) {
    let (rows, _) = basis(g, n + 1, normalized);
    let (cols, lookup) = basis(g, n, normalized);
    let mut m = vec![vec![0i64; cols.len()]; rows.len()];
    let mut buf = vec![0; n];
    for (r, x) in rows.iter().enumerate() {
        let mut add = |t: &[usize], s: i64| {
            if let Some(c) = lookup[flat(g, t)] {
                m[r][c] += s;
            }
        };
        add(&x[1..], 1);
        for i in 0..n {
            buf[..i].copy_from_slice(&x[..i]);
            buf[i] = g.mul(x[i], x[i + 1]);
            buf[i + 1..].copy_from_slice(&x[i + 2..]);
            add(&buf, if i % 2 == 0 { -1 } else { 1 });
        }
        add(&x[..n], if (n + 1) % 2 == 0 { 1 } else { -1 });
    }
    (m, cols.len())
}

/// Invariant factors of `Hⁿ(G, U(1)) ≅ Hⁿ⁺¹(G, Z)`, each greater than one.
pub fn cohomology_group(g: &FiniteGroup, n: usize) -> Result<Vec<BigInt>> {
    if n == 0 {
        return Err(Error::InvalidLevel(0));
    }
    let k = g.order() - 1;
    let rows = guard::pow(k, n + 2);
    let cols = guard::pow(k, n + 1);
    guard::check(
        &format!("normalized coboundary matrix {rows}x{cols}"),
        rows.saturating_mul(cols),
        guard::SNF_ENTRIES,
    )?;
    if k == 0 {
        return Ok(Vec::new());
    }
    let (dn, cn) = coboundary_matrix(g, n, true);
    let (dn1, cn1) = coboundary_matrix(g, n + 1, true);
    let d = smith_diagonal(&dn, cn);
    let d1 = smith_diagonal(&dn1, cn1);
    let rank = |v: &[BigInt]| v.iter().filter(|x| !num_traits::Zero::is_zero(*x)).count();
    if rank(&d) + rank(&d1) != cn1 {
        return Err(Error::Internal(format!(
            "ranks {} + {} do not span {} cochains",
            rank(&d),
            rank(&d1),
            cn1
        )));
    }
    Ok(d
        .into_iter()
        .filter(|x| !num_traits::Zero::is_zero(x) && !x.is_one())
        .collect())
}

/// Default search modulus for coboundary equivalence.
pub fn default_search_modulus(g: &FiniteGroup, a: u64, b: u64) -> u64 {
    use num_integer::Integer;
    let base = a.lcm(&b);
    base.lcm(&(2 * g.order() as u64))
}

/// An `α` over `Z_{L_search}` with `δα = c1 − c2`, if one exists.
pub fn coboundary_equivalent(c1: &Cochain, c2: &Cochain, search: u64) -> Result<Option<Cochain>> {
    if c1.group() != c2.group() || c1.level() != c2.level() {
        return Err(Error::CochainMismatch(
            "cochains differ in group or level".into(),
        ));
    }
    if search == 0 || search % c1.modulus() != 0 || search % c2.modulus() != 0 {
        return Err(Error::ModulusIncompatible {
            search,
            a: c1.modulus(),
            b: c2.modulus(),
        });
    }
    let n = c1.level();
    if n == 0 {
        return Err(Error::InvalidLevel(0));
    }
    let g = c1.group();
    let diff = c1.lift(search)?.sub(&c2.lift(search)?)?;
    if diff.is_zero() {
        return Ok(Some(Cochain::zero(g, n - 1, search)));
    }
    let (m, ncols) = coboundary_matrix(g, n - 1, false);
    guard::check(
        "coboundary system",
        (m.len() as u128) * (ncols as u128),
        guard::SNF_ENTRIES,
    )?;
    let s = ModSmith::new(&m, ncols, search);
    let b: Vec<i64> = diff.values().iter().map(|&v| v as i64).collect();
    match s.solve(&b) {
        Some(x) => {
            let alpha = Cochain::from_values(g, n - 1, search, x)?;
            debug_assert_eq!(alpha.coboundary(), diff);
            Ok(Some(alpha))
        }
        None => Ok(None),
    }
}

/// `(c − δα, α)` with `c − δα` normalized.
pub fn normalize_cocycle(c: &Cochain) -> Result<(Cochain, Cochain)> {
    if let Some(t) = c.cocycle_violation() {
        return Err(Error::NotCocycle(t));
    }
    let n = c.level();
    let g = c.group();
    if n == 0 || c.is_normalized() {
        let lvl = n.saturating_sub(1);
        return Ok((c.clone(), Cochain::zero(g, lvl, c.modulus())));
    }
    let (full, ncols) = coboundary_matrix(g, n - 1, false);
    let e = g.identity();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut args = vec![0; n];
    for (idx, row) in full.into_iter().enumerate() {
        c.decode_into(idx, &mut args);
        if args.contains(&e) {
            rows.push(row);
            rhs.push(idx);
        }
    }
    for modulus in [c.modulus(), 2 * c.modulus()] {
        let lifted = c.lift(modulus)?;
        let b: Vec<i64> = rhs.iter().map(|&i| lifted.values()[i] as i64).collect();
        let s = ModSmith::new(&rows, ncols, modulus);
        if let Some(x) = s.solve(&b) {
            let alpha = Cochain::from_values(g, n - 1, modulus, x)?;
            let out = lifted.sub(&alpha.coboundary())?;
            debug_assert!(out.is_normalized() && out.is_cocycle());
            return Ok((out, alpha));
        }
    }
    Err(Error::SolveFailed(format!(
        "no normalizing cochain at modulus {} or {}",
        c.modulus(),
        2 * c.modulus()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::zxz_four_cocycle;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn factors(v: &[u64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_groups() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(cohomology_group(&z2, 3).unwrap(), factors(&[2]));
        assert_eq!(cohomology_group(&z2, 4).unwrap(), factors(&[]));
        assert_eq!(cohomology_group(&z2, 1).unwrap(), factors(&[2]));
        let z3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(cohomology_group(&z3, 3).unwrap(), factors(&[3]));
        assert_eq!(cohomology_group(&FiniteGroup::trivial(), 4).unwrap(), factors(&[]));
        assert_eq!(cohomology_group(&z2, 0), Err(Error::InvalidLevel(0)));
        let v = FiniteGroup::z2xz2();
        assert_eq!(cohomology_group(&v, 2).unwrap(), factors(&[2]));
        assert_eq!(cohomology_group(&v, 3).unwrap(), factors(&[2, 2, 2]));
    }

    #[test]
    fn klein_four_degree_four() {
        let v = FiniteGroup::z2xz2();
        assert_eq!(cohomology_group(&v, 4).unwrap(), factors(&[2, 2]));
        for (i, a) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
            for b in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().skip(i + 1) {
                let (wa, wb) = (zxz_four_cocycle(a.0, a.1), zxz_four_cocycle(b.0, b.1));
                for l in [4, 8] {
                    assert!(coboundary_equivalent(&wa, &wb, l).unwrap().is_none());
                }
            }
        }
    }

    #[test]
    fn guard_trips() {
        let g = FiniteGroup::cyclic(11).unwrap();
        assert!(matches!(cohomology_group(&g, 4), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn equivalence_witnesses() {
        let w = zxz_four_cocycle(1, 1);
        let a = coboundary_equivalent(&w, &w, 2).unwrap().unwrap();
        assert!(a.is_zero());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let beta = Cochain::random(w.group(), 3, 4, &mut rng);
        let shifted = w.lift(4).unwrap().add(&beta.coboundary()).unwrap();
        let alpha = coboundary_equivalent(&shifted, &w, 4).unwrap().unwrap();
        assert_eq!(alpha.coboundary(), shifted.sub(&w.lift(4).unwrap()).unwrap());
        assert!(matches!(
            coboundary_equivalent(&w, &shifted, 6),
            Err(Error::ModulusIncompatible { .. })
        ));
    }

    #[test]
    fn normalizing() {
        let w = zxz_four_cocycle(1, 1);
        let (n, a) = normalize_cocycle(&w).unwrap();
        assert_eq!(n, w);
        assert!(a.is_zero());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let beta = Cochain::random(w.group(), 3, 2, &mut rng);
        assert!(!beta.is_normalized());
        let shifted = w.add(&beta.coboundary()).unwrap();
        let (n, a) = normalize_cocycle(&shifted).unwrap();
        assert!(n.is_normalized() && n.is_cocycle());
        assert_eq!(n, shifted.lift(n.modulus()).unwrap().sub(&a.coboundary()).unwrap());
        assert!(coboundary_equivalent(&n, &w, 4).unwrap().is_some());
    }
}
