//! The on-disk formats: write a phase and a representation to JSON, read
//! them back bit-exactly, and show what a malformed file reports.
//!
//! Run with: cargo run --example phase_files

use gf2phase::fileio::{load_phase, load_rep, save_phase, save_rep, PhaseFile};
use gf2phase::filtrep::regular_rep;
use gf2phase::heisenberg::{heisenberg_phase, HeisenbergSpec};

fn main() {
    let dir = std::env::temp_dir().join("gf2phase_example_files");
    std::fs::create_dir_all(&dir).unwrap();

    let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
    let phase_path = dir.join("flagship.json");
    save_phase(&p, &phase_path).unwrap();
    let back = load_phase(&phase_path).unwrap();
    println!(
        "phase file round-trip bit-exact: {} ({} bytes)",
        back == p,
        std::fs::metadata(&phase_path).unwrap().len()
    );

    let rep = regular_rep(&p);
    let rep_path = dir.join("regular.json");
    save_rep(&p, &rep, &rep_path).unwrap();
    let (p2, rep2) = load_rep(&rep_path).unwrap();
    println!(
        "rep file round-trip bit-exact: {}",
        p2 == p && rep2 == rep
    );

    // a filtration layer stored out of canonical form is rejected on load
    let mut file = PhaseFile::from_phase(&p);
    file.filtration[1].swap(0, 1);
    match file.into_phase() {
        Err(e) => println!("non-canonical layer rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    std::fs::remove_dir_all(&dir).ok();
}
