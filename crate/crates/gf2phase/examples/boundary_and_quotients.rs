//! Defect degrees, the boundary quotient, and the obstruction object.
//!
//! Run with: cargo run --example boundary_and_quotients

use gf2phase::gf2lin::BitVec;
use gf2phase::heisenberg::{heisenberg_phase, HeisenbergSpec, PhasePoint};
use gf2phase::phase::{boundary_quotient, obstruction_object, ObstructionObject};

fn main() {
    let spec = HeisenbergSpec::new(1, 2);
    let p = heisenberg_phase(&spec);

    // defect degrees of a few elements
    println!("defect degrees in the k=2 flagship:");
    println!("  unit           -> {}", p.defect_degree(p.unit()));
    let w = PhasePoint::from_index(&spec, 1).scale_u();
    let mut g = BitVec::unit(p.dim(), w.index(&spec));
    g.xor_assign(p.unit());
    println!("  D(uw) - 1      -> {}", p.defect_degree(&g));
    let sq = p.mul(&g, &g);
    println!("  (D(uw) - 1)^2  -> {} (zero: {})", p.defect_degree(&sq), sq.is_zero());
    println!("  zero element   -> {}", p.defect_degree(&BitVec::zero(p.dim())));

    // the boundary quotient is a strong phase of dimension 8
    let (q, proj) = boundary_quotient(&p);
    println!(
        "\nboundary quotient: dim {} -> {}, strong: {}",
        p.dim(),
        q.dim(),
        q.is_strong()
    );
    println!(
        "projection kills the boundary generator: {}",
        proj.apply(&g).is_zero()
    );

    // the obstruction object is the first layer quotient F[1]/F[2]
    match obstruction_object(&p) {
        ObstructionObject::Layer { layer, dim, .. } => {
            println!("obstruction object: layer {layer}, dimension {dim}")
        }
        ObstructionObject::Zero => println!("obstruction object: zero"),
    }
    let r = heisenberg_phase(&HeisenbergSpec::new(1, 1));
    println!(
        "obstruction of the strong k=1 phase is zero: {}",
        obstruction_object(&r).is_zero()
    );
}
