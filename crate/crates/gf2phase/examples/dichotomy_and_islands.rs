//! The strong/weak dichotomy, rigidity islands, local reconstruction, and
//! the complete-invariant comparison of two phases.
//!
//! Run with: cargo run --example dichotomy_and_islands

use gf2phase::budget::Budget;
use gf2phase::corpus::builtin;
use gf2phase::heisenberg::{heisenberg_phase, HeisenbergSpec};
use gf2phase::phase::{obstruction_object, rigidity_island, square_zero_extend, IslandOutcome};
use gf2phase::reconstruct::{
    dichotomy_classify, local_reconstruction_check, no_hidden_structure_check,
};

fn main() {
    let budget = Budget::default();
    println!("dichotomy across the corpus (with obstruction agreement):");
    for (name, p) in builtin() {
        println!(
            "  {name:<18} {:<8} obstruction zero: {}",
            dichotomy_classify(&p).to_string(),
            obstruction_object(&p).is_zero()
        );
    }

    // islands: the flagship loses 24 dimensions globally but reconstructs
    // exactly on its 8-dimensional island
    let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
    match rigidity_island(&p, &budget) {
        IslandOutcome::Found { dim, .. } => println!("\nflagship island: dim {dim}"),
        IslandOutcome::NoneWithinBudget => println!("\nflagship island: none within budget"),
    }
    let local = local_reconstruction_check(&p, &budget);
    println!(
        "local reconstruction: kernel {:?}, exact: {}",
        local.kernel_dim, local.exact
    );

    // the extension is distinguished from its base by the boundary layer
    // even though their representation counts agree
    let p_ext = square_zero_extend(&p, 1, None).unwrap();
    let report = no_hidden_structure_check(&p, &p_ext, &budget);
    println!(
        "\nP vs P_ext: rep counts {:?} vs {:?}, verdict: {}",
        report.rep_counts_p,
        report.rep_counts_q,
        report.verdict.name()
    );
    if let gf2phase::reconstruct::HiddenVerdict::Distinguished { invariant } = &report.verdict {
        println!("distinguishing invariant: {invariant}");
    }
}
