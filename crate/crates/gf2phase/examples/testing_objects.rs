//! Search for a testing object: a representation whose action separates
//! phase elements exactly modulo the boundary ideal, minimal among its own
//! subrepresentations, with a machine-checked certificate.
//!
//! Run with: cargo run --example testing_objects

use gf2phase::budget::Budget;
use gf2phase::filtrep::{phi_assemble, sub_rep, subrep_lattice, testing_object_search};
use gf2phase::heisenberg::{heisenberg_phase, HeisenbergSpec};

fn main() {
    let budget = Budget::default();
    let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
    let boundary = p.boundary_ideal().dim();

    let t = testing_object_search(&p, &budget).unwrap();
    println!(
        "testing object: mdim {}, kernel dim {} (= boundary {}), certified {}",
        t.rep.mdim, t.kernel_dim, boundary, t.certified
    );
    for check in &t.certificate.as_ref().unwrap().maximal_proper_subreps {
        println!(
            "  maximal proper subrep of dim {}: kernel dim {} -> fails separation: {}",
            check.dim, check.kernel_dim, check.fails_t1
        );
    }

    // dropping the testing object from a separating family strictly
    // enlarges the kernel
    let lattice = subrep_lattice(&t.rep, &budget).unwrap();
    let radical = lattice
        .iter()
        .filter(|s| !s.is_full())
        .max_by_key(|s| s.dim())
        .unwrap();
    let s = sub_rep(&t.rep, radical);
    let with_t = phi_assemble(&p, &[t.rep.clone(), s.clone()]).unwrap();
    let without_t = phi_assemble(&p, &[s]).unwrap();
    println!(
        "family kernel with T: {}, after dropping T: {} (strictly larger: {})",
        with_t.kernel.dim(),
        without_t.kernel.dim(),
        without_t.kernel.dim() > with_t.kernel.dim()
    );
}
