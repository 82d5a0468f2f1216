//! Push the octahedral on-site unitary through six plaquette GHZ states and
//! compare with the truncated-octahedron operator on the virtual legs.

use atn::spt3d::{self, Control};
use atn::zxz_four_cocycle;

fn main() -> atn::Result<()> {
    for (p0, p1) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        let w = zxz_four_cocycle(p0, p1);
        let v = spt3d::verify_local_pushing_3d(&w)?;
        let swapped = spt3d::verify_local_pushing_3d_with(&w, Control::SwapHexagon(0))?;
        println!(
            "zxz({p0},{p1}): push-through {} over {} terms; swapped hexagon 0 -> {}",
            v.passed, v.checked, swapped.passed
        );
    }
    let o = spt3d::build_o_g(&zxz_four_cocycle(1, 1), 3)?;
    let daggers = o.legs.iter().filter(|l| l.2 == spt3d::LegOp::LDagger).count();
    println!("o_ab: {} legs, {daggers} of them L^†", o.legs.len());

    match spt3d::verify_global_symmetry_3d_minimal(&zxz_four_cocycle(1, 1))? {
        spt3d::GlobalCheck::Checked { verdict } => println!("2x2x2 global: {}", verdict.passed),
        spt3d::GlobalCheck::Skipped { reason } => println!("2x2x2 global skipped: {reason}"),
    }
    Ok(())
}
