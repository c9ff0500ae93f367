//! Validate every built-in phase against the axioms, then corrupt one
//! structure constant and watch the validator cite a concrete
//! counterexample.
//!
//! Run with: cargo run --example validate_corpus

use gf2phase::corpus::builtin;
use gf2phase::gf2lin::BitVec;
use gf2phase::phase::{validate_phase, AlgebraTable, Phase};

fn main() {
    for (name, p) in builtin() {
        let report = validate_phase(&p);
        println!(
            "{name:<18} dim {:>2}  layers {:?}  -> {}",
            p.dim(),
            p.layer_dims(),
            if report.is_valid() { "all axioms pass" } else { "INVALID" }
        );
    }

    // flip one bit of a product in the dual numbers: eps * eps becomes eps
    let (_, d) = builtin().swap_remove(1);
    let n = d.dim();
    let mut mul: Vec<BitVec> = (0..n * n)
        .map(|idx| d.mul_basis(idx / n, idx % n).clone())
        .collect();
    mul[1 * n + 1] = BitVec::from_ints(&[0, 1]);
    let corrupted = Phase::from_parts(
        AlgebraTable::new(d.labels().to_vec(), d.unit().clone(), mul),
        d.filtration().to_vec(),
        None,
    );
    println!("\nafter corrupting eps*eps in the dual numbers:");
    let report = validate_phase(&corrupted);
    print!("{}", report.summary());
}
