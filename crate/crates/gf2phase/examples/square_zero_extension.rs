//! Adjoin a central square-zero ideal to a phase: the representation
//! theory cannot see the difference, the boundary layer can.
//!
//! Run with: cargo run --example square_zero_extension

use gf2phase::budget::Budget;
use gf2phase::filtrep::{enumerate_reps, rep_counts_by_mdim};
use gf2phase::heisenberg::{heisenberg_phase, HeisenbergSpec};
use gf2phase::phase::{boundary_quotient, iso_search, square_zero_extend, validate_phase};

fn main() {
    let r = heisenberg_phase(&HeisenbergSpec::new(1, 1));
    let r_ext = square_zero_extend(&r, 1, None).unwrap();
    println!(
        "strong phase R: dim {}, depth {}; extension: dim {}, depth {}",
        r.dim(),
        r.boundary_depth(),
        r_ext.dim(),
        r_ext.boundary_depth()
    );
    println!(
        "extension validates: {}",
        validate_phase(&r_ext).is_valid()
    );
    println!(
        "recorded island witness of dimension {:?}",
        r_ext.witness_island().map(|s| s.dim())
    );

    // identical representation counts, different boundary structure
    let budget = Budget::default();
    let counts_r = rep_counts_by_mdim(&enumerate_reps(&r, 2, &budget).unwrap(), 2);
    let counts_ext = rep_counts_by_mdim(&enumerate_reps(&r_ext, 2, &budget).unwrap(), 2);
    println!("rep counts (mdim 1, 2): R {counts_r:?} vs extension {counts_ext:?}");
    println!(
        "boundary layers: {} vs {}",
        r.boundary_ideal().dim(),
        r_ext.boundary_ideal().dim()
    );

    // collapsing the extension returns the strong base, certifiably
    let (q, _) = boundary_quotient(&r_ext);
    let outcome = iso_search(&q, &r, &budget);
    println!("quotient of the extension vs R: {}", outcome.verdict());

    // the weak flagship gains exactly b_dim in its boundary layer
    let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
    for b in [1usize, 2] {
        let ext = square_zero_extend(&p, b, None).unwrap();
        println!(
            "flagship extension b_dim={b}: boundary {} -> {}",
            p.boundary_ideal().dim(),
            ext.boundary_ideal().dim()
        );
    }
}
