use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use atn::basis_map::BasisMap;
use atn::cohomology::coboundary_equivalent;
use atn::lattice::TriTorus;
use atn::phases_lambda::{solve_lambda, verify_mixed_cocycle, GSet};
use atn::tnu::{self, Mode};
use atn::verdict::tuples;
use atn::{carry_three_cocycle, spt2d, spt3d, triple_line, zxz_four_cocycle, Cochain, FiniteGroup};

const SPECS: [&str; 6] = ["Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z2xZ3"];

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `zxz(p0,p1)` lifted to modulus 4 plus a random normalized coboundary.
fn shifted_zxz(p0: u8, p1: u8, seed: u64) -> Cochain {
    let w = zxz_four_cocycle(p0, p1).lift(4).unwrap();
    let b = Cochain::random_normalized(w.group(), 3, 4, &mut rng(seed));
    w.add(&b.coboundary()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn inverse_of_product(spec in prop::sample::select(&SPECS[..])) {
        let g = FiniteGroup::from_spec(spec).unwrap();
        for a in g.elements() {
            for b in g.elements() {
                prop_assert_eq!(g.inv(g.mul(a, b)), g.mul(g.inv(b), g.inv(a)));
            }
        }
        prop_assert!(FiniteGroup::from_table(&g.table_rows()).unwrap() == g);
    }

    #[test]
    fn coboundary_squares_to_zero(spec in prop::sample::select(&["Z2", "Z3", "Z2xZ2"][..]), level in 1usize..=3, m in 2u64..7, seed: u64) {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let c = Cochain::random(&g, level, m, &mut rng(seed));
        prop_assert!(c.coboundary().coboundary().is_zero());
    }

    #[test]
    fn equivalence_reflexive_symmetric(p0 in 0u8..2, p1 in 0u8..2, seed: u64) {
        let w = zxz_four_cocycle(p0, p1).lift(4).unwrap();
        let alpha = Cochain::random(w.group(), 3, 4, &mut rng(seed));
        let v = w.add(&alpha.coboundary()).unwrap();
        prop_assert!(coboundary_equivalent(&w, &w, 4).unwrap().is_some());
        for (a, b) in [(&w, &v), (&v, &w)] {
            let wit = coboundary_equivalent(a, b, 4).unwrap();
            prop_assert!(wit.is_some());
            let d = a.sub(b).unwrap();
            prop_assert_eq!(wit.unwrap().coboundary().lift(4).unwrap(), d);
        }
    }

    #[test]
    fn left_regular_homomorphism(spec in prop::sample::select(&["Z2", "Z3", "Z2xZ2"][..])) {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let names = vec!["a".to_string(), "b".to_string()];
        for x in g.elements() {
            for y in g.elements() {
                let prod = BasisMap::compose(&BasisMap::left_regular(&g, names.clone(), x), &BasisMap::left_regular(&g, names.clone(), y)).unwrap();
                prop_assert!(BasisMap::equal_maps(&prod, &BasisMap::left_regular(&g, names.clone(), g.mul(x, y))).unwrap());
            }
        }
    }

    #[test]
    fn pentagon_rescaling_shifts_by_coboundary(p0 in 0u8..2, p1 in 0u8..2, seed: u64) {
        let w = zxz_four_cocycle(p0, p1);
        let alpha = Cochain::random(w.group(), 3, 4, &mut rng(seed));
        let d = alpha.coboundary();
        for q in tuples(4, 4) {
            let q = [q[0], q[1], q[2], q[3]];
            let got = triple_line::extract_pentagon_scalar(&w, Some(&alpha), q).unwrap();
            prop_assert_eq!(got.num() as i64, (2 * w.get(&q) as i64 + d.get(&q) as i64) % 4);
        }
    }

    #[test]
    fn triple_line_under_coboundary_shift(p0 in 0u8..2, p1 in 0u8..2, seed: u64) {
        let w = shifted_zxz(p0, p1, seed);
        prop_assert!(triple_line::verify_fusion_orthogonality(&w).unwrap().passed);
        for q in tuples(4, 3) {
            prop_assert!(triple_line::verify_associator_relation(&w, q[0], q[1], q[2]).passed);
        }
        for q in tuples(4, 4) {
            let q = [q[0], q[1], q[2], q[3]];
            prop_assert!(triple_line::extract_pentagon_scalar(&w, None, q).unwrap().same_value(w.phase(&q)));
        }
    }

    #[test]
    fn tnu_group_law_sampled(p0 in 0u8..2, p1 in 0u8..2, seed: u64) {
        let w = shifted_zxz(p0, p1, seed);
        let lat = TriTorus::new(3, 3).unwrap();
        let mode = Mode::Sample { count: 200, seed };
        prop_assert!(tnu::verify_group_law(&lat, &w, mode).unwrap().passed);
    }

    #[test]
    fn beta_shift_closure(seed: u64) {
        let w = zxz_four_cocycle(1, 0);
        let x = GSet::transitive(w.group(), &[0, 1]).unwrap();
        let sol = solve_lambda(&w, &x, 8).unwrap();
        let lambda = sol.representative.unwrap();
        let mut r = rng(seed);
        let beta: Vec<i64> = (0..16 * x.size()).map(|_| r.gen_range(0..8)).collect();
        prop_assert!(verify_mixed_cocycle(&lambda.shifted(&beta).unwrap(), &w).unwrap());
    }

    #[test]
    fn classes_invariant_under_relabeling(seed: u64, which in 0usize..3) {
        let g = FiniteGroup::z2xz2();
        let h: &[usize] = [&[0][..], &[0, 1][..], &[0, 2][..]][which];
        let x = GSet::transitive(&g, h).unwrap();
        let mut perm: Vec<usize> = (0..x.size()).collect();
        let mut r = rng(seed);
        for i in (1..perm.len()).rev() {
            perm.swap(i, r.gen_range(0..=i));
        }
        let y = x.relabel(&perm).unwrap();
        let w = zxz_four_cocycle(0, 0);
        prop_assert_eq!(solve_lambda(&w, &x, 4).unwrap().classes, solve_lambda(&w, &y, 4).unwrap().classes);
    }

    #[test]
    fn point_solver_matches_coboundary_test(p0 in 0u8..2, p1 in 0u8..2, seed: u64) {
        let w = shifted_zxz(p0, p1, seed).lift(8).unwrap();
        let point = GSet::trivial(w.group());
        let solvable = solve_lambda(&w, &point, 8).unwrap().solvable();
        let zero = Cochain::zero(w.group(), 4, 1);
        let trivial = coboundary_equivalent(&w, &zero, 8).unwrap().is_some();
        prop_assert_eq!(solvable, trivial);
        prop_assert_eq!(solvable, (p0, p1) == (0, 0));
    }

    #[test]
    fn chessboard_invariance_under_shift(p in 0i64..2, seed: u64) {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let w = carry_three_cocycle(2, p).lift(4).unwrap();
        let b = Cochain::random_normalized(&z2, 2, 4, &mut rng(seed));
        let w = w.add(&b.coboundary()).unwrap();
        prop_assert!(spt2d::verify_global_symmetry_2d(&w, 2, 4).unwrap().passed);
        prop_assert!(spt2d::verify_mpu_group_law(&w, 3).unwrap().passed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn pushing_3d_under_shift(p0 in 0u8..2, p1 in 0u8..2, seed: u64) {
        let w = shifted_zxz(p0, p1, seed);
        prop_assert!(spt3d::verify_local_pushing_3d(&w).unwrap().passed);
        prop_assert!(spt3d::verify_onsite_unitarity_3d(&w).unwrap().passed);
    }
}
