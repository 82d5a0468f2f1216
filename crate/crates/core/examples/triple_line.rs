//! Triple-line site tensors for ℤ₂×ℤ₂ with ω = zxz(1,1): local relations,
//! and the pentagon contraction that gives ω back.

use atn::lattice::TriTorus;
use atn::triple_line::{self, Orientation};
use atn::zxz_four_cocycle;

fn main() -> atn::Result<()> {
    let w = zxz_four_cocycle(1, 1);
    let site = triple_line::build_site(&w, 2, Orientation::Up)?;
    let phases = site.weight.iter().filter(|p| matches!(p, Some(p) if !p.is_one())).count();
    println!("T_a (up): {} virtual labels, {phases} carry -1", site.weight.len());

    let mut ok = true;
    for g in 0..4 {
        for h in 0..4 {
            ok &= triple_line::verify_product_relation(&w, g, h)?.passed;
            for k in 0..4 {
                ok &= triple_line::verify_associator_relation(&w, g, h, k).passed;
            }
        }
    }
    println!("product and associator relations: {ok}");
    println!("fusion orthogonality: {}", triple_line::verify_fusion_orthogonality(&w)?.passed);

    let q = [2, 1, 1, 1];
    let got = triple_line::extract_pentagon_scalar(&w, None, q)?;
    println!("pentagon at {q:?}: {} (ω = {})", got.to_complex(), w.phase(&q).to_complex());

    let p = triple_line::verify_identity_projector(&w, &TriTorus::new(1, 1)?)?;
    println!("O_1 on the 1x1 network: projector={} rank={}", p.verdict.passed, p.rank);
    Ok(())
}
