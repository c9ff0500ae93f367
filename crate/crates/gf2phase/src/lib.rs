//! Exact computation with finite filtered algebras over GF(2).
//!
//! The crate models *phases*: finite-dimensional unital associative
//! GF(2)-algebras equipped with a terminating descending chain of two-sided
//! nilpotent ideals (the defect filtration). It provides
//!
//! - bit-exact linear algebra over GF(2) and the coefficient rings
//!   F2[u]/(u^k) ([`gf2lin`]);
//! - construction, validation, quotients, square-zero extensions and
//!   equivalence search for phases ([`phase`]);
//! - the Heisenberg-type twisted group algebras over F2[u]/(u^k) and the
//!   strong/weak flagship family built from them ([`heisenberg`]);
//! - filtered representations, the evaluation map Φ into endomorphism
//!   algebras with its kernel/image analysis, exhaustive representation
//!   enumeration and testing-object search ([`filtrep`]);
//! - reconstruction of a phase from raw action data, the strong/weak
//!   dichotomy, rigidity-island checks and complete-invariant comparison
//!   ([`reconstruct`]).
//!
//! The `examples/` directory carries one runnable program per capability;
//! the thin `gf2phase` binary exposes the same operations as subcommands.
//! Start with `cargo run --example flagship_demo`.

pub mod budget;
pub mod cli;
pub mod corpus;
pub mod fileio;
pub mod filtrep;
pub mod gf2lin;
pub mod heisenberg;
pub mod phase;
pub mod reconstruct;
pub mod report;

pub use budget::Budget;
