use atn::lattice::{DownOrder, TriTorus};
use atn::tnu::{self, Mode};
use atn::{carry_four_cocycle, zxz_four_cocycle};

fn main() -> atn::Result<()> {
    let w = zxz_four_cocycle(1, 1);
    let lat = TriTorus::new(2, 2)?;
    let ex = tnu::verify_group_law(&lat, &w, Mode::Exhaustive)?;
    println!("2x2 exhaustive group law: {} ({} cases)", ex.passed, ex.checked);

    let big = TriTorus::new(3, 3)?;
    let s = tnu::verify_group_law(&big, &w, Mode::Sample { count: 2000, seed: 1 })?;
    println!("3x3 sampled group law: {} ({} cases)", s.passed, s.checked);

    let u = tnu::build_tnu(&w, 3, &lat)?;
    println!("U_ab unitary: {}", u.is_unitary()?);
    println!("boundary fusion (a,b): {}", tnu::verify_boundary_fusion(&w, 2, 1, &lat, Mode::Exhaustive)?.passed);

    // a down-triangle order that is not a branching structure breaks the law on Z3xZ3
    let w3 = carry_four_cocycle(3, 1);
    let skew = TriTorus::with_order(2, 2, DownOrder::Skewed)?;
    let v = tnu::verify_group_law(&skew, &w3, Mode::Sample { count: 200, seed: 0 })?;
    println!("Z3xZ3 skewed order: passed={} witness={:?}", v.passed, v.witness);
    Ok(())
}
