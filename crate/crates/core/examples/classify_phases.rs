//! Which (2+1)D symmetric phases does a ℤ₂×ℤ₂ anomaly allow?

use atn::phases_lambda::{anomaly_obstruction, restrict_to_unbroken, solve_lambda, GSet};
use atn::zxz_four_cocycle;

fn main() -> atn::Result<()> {
    for (p0, p1) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        let w = zxz_four_cocycle(p0, p1);
        println!("zxz({p0},{p1}) obstructs a unique symmetric ground state: {}", anomaly_obstruction(&w)?);
    }

    let w = zxz_four_cocycle(1, 0);
    for (name, h) in [("{1}", vec![0]), ("{1,b}", vec![0, 1]), ("{1,a}", vec![0, 2]), ("G", vec![0, 1, 2, 3])] {
        let x = GSet::transitive(w.group(), &h)?;
        let s = solve_lambda(&w, &x, 8)?;
        print!("X = G/{name:<5} |X|={}  solvable={:<5} classes={}", x.size(), s.solvable(), s.classes);
        if let (Some(l), true) = (&s.representative, h.len() > 1) {
            let r = restrict_to_unbroken(l, &w, &h, 0, None)?;
            print!("  restriction to H is a 3-cocycle: {}", r.is_cocycle);
        }
        println!();
    }
    Ok(())
}
