//! The full flagship pipeline in one run: build the strong phase, the weak
//! phase and their extensions; validate; compare boundary layers and
//! Φ-kernels; enumerate representations with the restriction bijection;
//! search the testing object; check islands and the dichotomy.
//!
//! Run with: cargo run --example flagship_demo

use gf2phase::budget::Budget;
use gf2phase::cli::demo_flagship;

fn main() {
    let report = demo_flagship(1, 1, &Budget::default()).expect("demo should succeed");
    println!("{}", report.summary());

    let json = serde_json::to_string_pretty(&report).unwrap();
    let path = std::env::temp_dir().join("gf2phase_flagship_report.json");
    std::fs::write(&path, json + "\n").unwrap();
    println!("\nfull report written to {}", path.display());
}
