//! Exhaustive enumeration of terminating representations, and the
//! restriction bijection that makes a phase and its square-zero extension
//! indistinguishable at the representation level.
//!
//! Run with: cargo run --example enumerate_representations

use gf2phase::budget::Budget;
use gf2phase::filtrep::{enumerate_reps, rep_counts_by_mdim};
use gf2phase::heisenberg::{heisenberg_phase, HeisenbergSpec};
use gf2phase::phase::square_zero_extend;

fn main() {
    let budget = Budget::default();
    let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
    let p_ext = square_zero_extend(&p, 1, None).unwrap();

    for maxdim in [1usize, 2, 3] {
        let reps_p = enumerate_reps(&p, maxdim, &budget).unwrap();
        let reps_ext = enumerate_reps(&p_ext, maxdim, &budget).unwrap();
        println!(
            "maxdim {maxdim}: counts P {:?} vs P_ext {:?}",
            rep_counts_by_mdim(&reps_p, maxdim),
            rep_counts_by_mdim(&reps_ext, maxdim),
        );
    }

    // the explicit bijection: the i-th rep of the extension restricts to
    // the i-th rep of the base, and the adjoined direction acts as zero
    let reps_p = enumerate_reps(&p, 2, &budget).unwrap();
    let reps_ext = enumerate_reps(&p_ext, 2, &budget).unwrap();
    let bijection = reps_p.len() == reps_ext.len()
        && reps_p.iter().zip(&reps_ext).all(|(rp, re)| {
            (0..p.dim()).all(|j| re.action[j] == rp.action[j])
                && re.action[p.dim()].is_zero()
        });
    println!("restriction bijection verified pairwise: {bijection}");

    // budget-zero enumeration refuses explicitly instead of guessing
    match enumerate_reps(&p, 2, &Budget::zero()) {
        Err(e) => println!("zero budget: {e}"),
        Ok(_) => unreachable!("zero budget cannot enumerate"),
    }
}
