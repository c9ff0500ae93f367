//! Certified equivalence between phases: fast negatives from invariants,
//! witness search with certification, and honest "unknown" on budget
//! exhaustion.
//!
//! Run with: cargo run --example equivalence_search

use gf2phase::budget::Budget;
use gf2phase::heisenberg::{heisenberg_phase, HeisenbergSpec};
use gf2phase::phase::{
    boundary_quotient, dual_numbers, invariant_vector, iso_certify, iso_search, split_pair,
    IsoOutcome,
};

fn describe(label: &str, outcome: &IsoOutcome) {
    match outcome {
        IsoOutcome::Found(m) => {
            println!("{label}: equivalent (witness certified: {})", iso_certify(m).is_ok())
        }
        IsoOutcome::No { reason } => println!("{label}: no ({reason})"),
        IsoOutcome::Unknown { reason } => println!("{label}: unknown ({reason})"),
    }
}

fn main() {
    let budget = Budget::default();

    // the collapsed flagship is the k=1 phase in disguise
    let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
    let r = heisenberg_phase(&HeisenbergSpec::new(1, 1));
    let (q, _) = boundary_quotient(&p);
    describe("quotient(P) vs R", &iso_search(&q, &r, &budget));

    // the dual numbers and the split product share a dimension but nothing
    // else; the invariant vector separates them immediately
    let d = dual_numbers();
    let s = split_pair();
    println!(
        "\ninvariants of dual numbers: {:?}",
        invariant_vector(&d).layer_dims
    );
    println!("invariants of split pair:   {:?}", invariant_vector(&s).layer_dims);
    describe("dual numbers vs split pair", &iso_search(&d, &s, &budget));

    // a pair that needs backtracking: the noncommutative polarized phase
    // against the operator algebra rebuilt from its regular action, whose
    // canonical basis comes out reordered by group inverses. A zero budget
    // turns the findable witness into an honest unknown, never a false no.
    let pol = heisenberg_phase(&HeisenbergSpec::polarized(1, 1));
    let reg = gf2phase::filtrep::regular_rep(&pol);
    let rebuilt = gf2phase::reconstruct::reconstruct_phase(
        &[gf2phase::reconstruct::RawRep::from_filtered(&reg)],
        &budget,
    )
    .unwrap();
    describe(
        "\npolarized phase vs rebuilt operators",
        &iso_search(&pol, &rebuilt.phase, &budget),
    );
    describe(
        "polarized phase vs rebuilt operators at zero budget",
        &iso_search(&pol, &rebuilt.phase, &Budget::zero()),
    );
}
