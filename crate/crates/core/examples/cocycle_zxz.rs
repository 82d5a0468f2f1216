//! The four ℤ₂×ℤ₂ 4-cocycles: check the cocycle condition, then shift one by
//! a random coboundary and confirm it stays in its class.

use atn::cohomology::coboundary_equivalent;
use atn::{zxz_four_cocycle, Cochain};
use rand::SeedableRng;

fn main() -> atn::Result<()> {
    for (p0, p1) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        let w = zxz_four_cocycle(p0, p1);
        let nonzero = w.values().iter().filter(|&&v| v != 0).count();
        println!("zxz({p0},{p1}): cocycle={} normalized={} nonzero entries={nonzero}", w.is_cocycle(), w.is_normalized());
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let w = zxz_four_cocycle(1, 1).lift(4)?;
    let alpha = Cochain::random_normalized(w.group(), 3, 4, &mut rng);
    let shifted = w.add(&alpha.coboundary())?;
    let same = coboundary_equivalent(&w, &shifted, 4)?.is_some();
    let other = coboundary_equivalent(&w, &zxz_four_cocycle(1, 0).lift(4)?, 4)?.is_some();
    println!("zxz(1,1) ~ zxz(1,1)+δα: {same}");
    println!("zxz(1,1) ~ zxz(1,0): {other}");
    print!("{}", zxz_four_cocycle(1, 0).to_text("Z2xZ2"));
    Ok(())
}
