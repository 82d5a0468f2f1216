use atn::carry_three_cocycle;
use atn::spt2d::{self, Corners};

fn main() -> atn::Result<()> {
    let w = carry_three_cocycle(2, 1);
    println!("MPU group law N=4: {}", spt2d::verify_mpu_group_law(&w, 4)?.passed);
    for (lx, ly) in [(2, 2), (2, 4), (4, 4)] {
        let v = spt2d::verify_global_symmetry_2d(&w, lx, ly)?;
        println!("{lx}x{ly} chessboard invariant: {} ({} terms)", v.passed, v.checked);
    }
    let push = spt2d::verify_virtual_pushing_2d(&w)?;
    println!("push-through={} O'={} growth={}", push.push_through.passed, push.boundary_projector.passed, push.growth.passed);

    let w3 = carry_three_cocycle(3, 1);
    let board = spt2d::build_chessboard_state(w3.group(), 4, 4)?;
    let opposite = vec![Corners::Opposite; board.sites.len()];
    let v = spt2d::verify_global_symmetry_with(&w3, &board, &opposite)?;
    println!("Z3, opposite-corner placement: invariant={}", v.passed);
    Ok(())
}
