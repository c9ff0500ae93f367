//! Construct Heisenberg-type phases over F2[u]/(u^k) and inspect their
//! structure: dimensions, boundary ideal, filtration layers, depth.
//!
//! Run with: cargo run --example build_flagship

use gf2phase::heisenberg::{heisenberg_phase, HeisenbergSpec};

fn main() {
    for spec in [
        HeisenbergSpec::new(1, 1),
        HeisenbergSpec::new(1, 2),
        HeisenbergSpec::polarized(1, 1),
        HeisenbergSpec::polarized(1, 2),
    ] {
        let p = heisenberg_phase(&spec);
        println!(
            "heisenberg n={} k={} cocycle={}: dim {}, layers {:?}, depth {}, {}",
            spec.n,
            spec.k,
            spec.cocycle,
            p.dim(),
            p.layer_dims(),
            p.boundary_depth(),
            p.dichotomy()
        );
    }

    // a closer look at the weak flagship
    let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
    println!("\nflagship k=2 basis labels (first 8):");
    for label in p.labels().iter().take(8) {
        println!("  {label}");
    }
    println!("boundary ideal dimension: {}", p.boundary_ideal().dim());
    println!(
        "every basis element squares to the unit: {}",
        (0..p.dim()).all(|i| {
            let e = gf2phase::gf2lin::BitVec::unit(p.dim(), i);
            &p.mul(&e, &e) == p.unit()
        })
    );
}
