//! Command-line surface: build, validate, transform and compare phases,
//! and run the flagship demo end to end.
//!
//! Exit status 0 on success, 1 on validation failure or malformed files
//! (naming the first violated invariant), 2 on usage errors. Output is
//! deterministic byte for byte for fixed inputs and flags.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::budget::Budget;
use crate::fileio::{
    load_phase, load_rep, save_json, save_phase, sniff_is_rep, RepFile,
};
use crate::filtrep::{
    enumerate_reps, phi_assemble, regular_rep, rep_counts_by_mdim, rep_validate, sub_rep,
    subrep_lattice, testing_object_search, FilteredRep,
};
use crate::heisenberg::{flagship_suite, heisenberg_phase, HeisenbergSpec};
use crate::phase::{
    boundary_quotient, invariant_vector, iso_search, obstruction_object, square_zero_extend,
    validate_phase, Phase,
};
use crate::reconstruct::{
    local_reconstruction_check, reconstruct_phase, RawRep,
};
use crate::report::{
    BoundaryComparison, DemoParams, DemoReport, DichotomyRow, FlagshipNotes, InvariantsReport,
    IslandReport, IsoWitnessReport, KernelReport, PhaseSummary, ReconstructReport, RepCountReport,
    RepCountRow, TestingObjectReport, SCHEMA_VERSION,
};

#[derive(Parser)]
#[command(
    name = "gf2phase",
    version,
    about = "Exact computation with finite filtered algebras over GF(2)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a phase from a spec string like heisenberg:n=1,k=2
    Build {
        spec: String,
        /// Write the phase file here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a phase or representation file
    Validate {
        file: PathBuf,
        /// Write the full validation report here
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print dimension, layer dimensions, depth and dichotomy verdict
    Invariants { file: PathBuf },
    /// Collapse the boundary ideal
    Quotient {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the projection matrix here
        #[arg(long)]
        projection: Option<PathBuf>,
    },
    /// Adjoin a central square-zero ideal
    Extend {
        file: PathBuf,
        #[arg(long)]
        bdim: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Representation operations
    Rep {
        #[command(subcommand)]
        cmd: RepCommand,
    },
    /// Rebuild a phase from representation files
    Reconstruct {
        #[arg(long, num_args = 1.., required = true)]
        reps: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Search for a minimal separating representation with certificate
    TestingObject {
        file: PathBuf,
        /// Write the testing object as a rep file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a certified equivalence between two phase files
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Write the witness report here
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Candidate-step budget for the search
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// End-to-end demonstrations
    Demo {
        #[command(subcommand)]
        cmd: DemoCommand,
    },
}

#[derive(Subcommand)]
enum RepCommand {
    /// The regular representation of the boundary quotient
    Regular {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively enumerate terminating representations
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        maxdim: usize,
        /// Write the full representation list here
        #[arg(long)]
        emit_reps: Option<PathBuf>,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Build, validate and compare the flagship family
    Flagship {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        bdim: usize,
        #[arg(long, default_value_t = 2)]
        maxdim: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// Write the consolidated JSON report here
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn budget_with(steps: u64, mdim_max: usize) -> Budget {
    Budget {
        iso_steps: steps,
        search_steps: steps,
        enum_steps: steps,
        lattice_cap: if steps == 0 { 0 } else { 10_000 },
        mdim_max,
        closure_products: steps,
    }
}

/// Entry point used by the binary and by tests. Returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn write_or_print_phase(p: &Phase, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => {
            save_phase(p, path).map_err(|e| e.to_string())?;
            println!("wrote {}", path.display());
            Ok(())
        }
        None => {
            let file = crate::fileio::PhaseFile::from_phase(p);
            println!(
                "{}",
                serde_json::to_string_pretty(&file).expect("serialization cannot fail")
            );
            Ok(())
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), String> {
    match cli.cmd {
        Command::Build { spec, out } => {
            let hspec: HeisenbergSpec = spec.parse()?;
            let p = heisenberg_phase(&hspec);
            println!(
                "built {}: dim {}, layers {:?}, {}",
                spec,
                p.dim(),
                p.layer_dims(),
                p.dichotomy()
            );
            write_or_print_phase(&p, &out)
        }
        Command::Validate { file, report } => cmd_validate(&file, report.as_deref()),
        Command::Invariants { file } => {
            let p = load_phase(&file).map_err(|e| e.to_string())?;
            let inv = invariant_vector(&p);
            let out = InvariantsReport {
                schema_version: SCHEMA_VERSION.to_string(),
                dim: p.dim(),
                layer_dims: p.layer_dims(),
                boundary_depth: p.boundary_depth(),
                dichotomy: p.dichotomy().to_string(),
                commutative: inv.commutative,
                center_dim: inv.center_dim,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("serialization cannot fail")
            );
            Ok(())
        }
        Command::Quotient {
            file,
            out,
            projection,
        } => {
            let p = load_phase(&file).map_err(|e| e.to_string())?;
            let (q, proj) = boundary_quotient(&p);
            println!(
                "quotient: dim {} -> {}, boundary dim {}",
                p.dim(),
                q.dim(),
                p.boundary_ideal().dim()
            );
            if let Some(path) = projection {
                #[derive(serde::Serialize)]
                struct Projection {
                    schema_version: String,
                    rows: usize,
                    cols: usize,
                    matrix: Vec<Vec<u8>>,
                }
                save_json(
                    &Projection {
                        schema_version: SCHEMA_VERSION.to_string(),
                        rows: proj.matrix.rows(),
                        cols: proj.matrix.cols(),
                        matrix: proj.matrix.to_ints(),
                    },
                    &path,
                )
                .map_err(|e| e.to_string())?;
                println!("wrote {}", path.display());
            }
            write_or_print_phase(&q, &out)
        }
        Command::Extend { file, bdim, out } => {
            let p = load_phase(&file).map_err(|e| e.to_string())?;
            let e = square_zero_extend(&p, bdim, None).map_err(|e| e.to_string())?;
            println!(
                "extension: dim {} -> {}, boundary {} -> {}",
                p.dim(),
                e.dim(),
                p.boundary_ideal().dim(),
                e.boundary_ideal().dim()
            );
            write_or_print_phase(&e, &out)
        }
        Command::Rep { cmd } => match cmd {
            RepCommand::Regular { file, out } => {
                let p = load_phase(&file).map_err(|e| e.to_string())?;
                let r = regular_rep(&p);
                println!("regular rep: mdim {}", r.mdim);
                if let Some(path) = out {
                    let rf = RepFile::from_rep(&p, &r, file.to_str().map(String::from));
                    save_json(&rf, &path).map_err(|e| e.to_string())?;
                    println!("wrote {}", path.display());
                }
                Ok(())
            }
            RepCommand::Enumerate {
                file,
                maxdim,
                emit_reps,
                budget,
            } => {
                let p = load_phase(&file).map_err(|e| e.to_string())?;
                let b = budget_with(budget, maxdim);
                let reps = enumerate_reps(&p, maxdim, &b).map_err(|e| e.to_string())?;
                let counts = rep_counts_by_mdim(&reps, maxdim);
                #[derive(serde::Serialize)]
                struct Counts {
                    schema_version: String,
                    mdim_max: usize,
                    counts: Vec<usize>,
                    total: usize,
                }
                println!(
                    "{}",
                    serde_json::to_string_pretty(&Counts {
                        schema_version: SCHEMA_VERSION.to_string(),
                        mdim_max: maxdim,
                        counts: counts.clone(),
                        total: reps.len(),
                    })
                    .expect("serialization cannot fail")
                );
                if let Some(path) = emit_reps {
                    let files: Vec<RepFile> = reps
                        .iter()
                        .map(|r| RepFile::from_rep(&p, r, file.to_str().map(String::from)))
                        .collect();
                    save_json(&files, &path).map_err(|e| e.to_string())?;
                    println!("wrote {}", path.display());
                }
                Ok(())
            }
        },
        Command::Reconstruct { reps, out, report } => {
            let mut raws = Vec::new();
            let mut names = Vec::new();
            for path in &reps {
                let (_, rep) = load_rep(path).map_err(|e| e.to_string())?;
                raws.push(RawRep::from_filtered(&rep));
                names.push(path.display().to_string());
            }
            let outcome =
                reconstruct_phase(&raws, &Budget::default()).map_err(|e| e.to_string())?;
            let rep_out = ReconstructReport {
                schema_version: SCHEMA_VERSION.to_string(),
                inputs: names,
                operator_algebra_dim: outcome.operator_algebra_dim,
                degree_one_ideal_dim: outcome.degree_one_ideal_dim,
                output_dim: outcome.phase.dim(),
                output_valid: validate_phase(&outcome.phase).is_valid(),
            };
            println!(
                "reconstructed: operator algebra dim {}, collapsed ideal dim {}, output dim {}",
                rep_out.operator_algebra_dim, rep_out.degree_one_ideal_dim, rep_out.output_dim
            );
            if let Some(path) = report {
                save_json(&rep_out, &path).map_err(|e| e.to_string())?;
                println!("wrote {}", path.display());
            }
            write_or_print_phase(&outcome.phase, &out)
        }
        Command::TestingObject { file, out } => {
            let p = load_phase(&file).map_err(|e| e.to_string())?;
            let t = testing_object_search(&p, &Budget::default()).map_err(|e| e.to_string())?;
            println!(
                "testing object: mdim {}, kernel dim {}, certified {}",
                t.rep.mdim, t.kernel_dim, t.certified
            );
            if let Some(cert) = &t.certificate {
                for c in &cert.maximal_proper_subreps {
                    println!(
                        "  maximal proper subrep dim {}: kernel {} (fails separation: {})",
                        c.dim, c.kernel_dim, c.fails_t1
                    );
                }
            }
            if let Some(path) = out {
                let rf = RepFile::from_rep(&p, &t.rep, file.to_str().map(String::from));
                save_json(&rf, &path).map_err(|e| e.to_string())?;
                println!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Iso {
            a,
            b,
            witness,
            budget,
        } => {
            let pa = load_phase(&a).map_err(|e| e.to_string())?;
            let pb = load_phase(&b).map_err(|e| e.to_string())?;
            let outcome = iso_search(&pa, &pb, &budget_with(budget, 2));
            let report = IsoWitnessReport::from_outcome(&outcome);
            println!(
                "iso: {}{}",
                report.verdict,
                report
                    .reason
                    .as_ref()
                    .map(|r| format!(" ({r})"))
                    .unwrap_or_default()
            );
            if let Some(path) = witness {
                save_json(&report, &path).map_err(|e| e.to_string())?;
                println!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Demo { cmd } => match cmd {
            DemoCommand::Flagship {
                n,
                bdim,
                maxdim,
                budget,
                report,
            } => {
                let b = budget_with(budget, maxdim);
                let demo = demo_flagship(n, bdim, &b)?;
                println!("{}", demo.summary());
                if let Some(path) = report {
                    save_json(&demo, &path).map_err(|e| e.to_string())?;
                    println!("wrote {}", path.display());
                }
                Ok(())
            }
        },
    }
}

fn cmd_validate(file: &Path, report_path: Option<&Path>) -> Result<(), String> {
    let is_rep = sniff_is_rep(file).map_err(|e| e.to_string())?;
    let report = if is_rep {
        let (p, r) = load_rep(file).map_err(|e| e.to_string())?;
        rep_validate(&p, &r)
    } else {
        let p = load_phase(file).map_err(|e| e.to_string())?;
        validate_phase(&p)
    };
    if let Some(path) = report_path {
        save_json(&report, path).map_err(|e| e.to_string())?;
    }
    print!("{}", report.summary());
    match report.first_failure() {
        None => {
            println!("valid");
            Ok(())
        }
        Some(first) => Err(format!(
            "invariant '{}' violated{}",
            first.name,
            first
                .witness
                .as_ref()
                .map(|w| format!(": {w}"))
                .unwrap_or_default()
        )),
    }
}

/// Verify the explicit restriction bijection between the enumerated reps of
/// an extension and of its base: same list length, and the i-th rep of the
/// extension acts exactly as the i-th rep of the base on the embedded basis
/// while the adjoined directions act as zero.
fn restriction_bijection_holds(
    base: &Phase,
    ext: &Phase,
    base_reps: &[FilteredRep],
    ext_reps: &[FilteredRep],
) -> bool {
    if base_reps.len() != ext_reps.len() {
        return false;
    }
    base_reps.iter().zip(ext_reps).all(|(rb, re)| {
        rb.mdim == re.mdim
            && (0..base.dim()).all(|j| re.action[j] == rb.action[j])
            && (base.dim()..ext.dim()).all(|j| re.action[j].is_zero())
    })
}

/// Run the whole flagship pipeline: build R, P and their extensions,
/// validate, compare boundary layers and Φ-kernels, enumerate reps with the
/// restriction bijection, search the testing object, check islands and the
/// dichotomy, and consolidate everything into one report. Budget shortfalls
/// surface as warnings and "unknown" verdicts, never as silent fallbacks.
pub fn demo_flagship(n: usize, b_dim: usize, budget: &Budget) -> Result<DemoReport, String> {
    let mut warnings = Vec::new();
    let suite = flagship_suite(n, b_dim, budget).map_err(|e| format!("flagship build: {e}"))?;
    let named = [
        ("R", &suite.r_strong),
        ("R_ext", &suite.r_ext),
        ("P", &suite.p_weak),
        ("P_ext", &suite.p_ext),
    ];

    let phases: Vec<PhaseSummary> = named
        .iter()
        .map(|(name, p)| PhaseSummary::new(name, p))
        .collect();

    // Φ-kernels against stored boundaries
    let mut kernels = Vec::new();
    let mut kernel_dim = std::collections::BTreeMap::new();
    for (name, p) in &named {
        let phi = phi_assemble(p, &[regular_rep(p)]).map_err(|e| format!("phi[{name}]: {e}"))?;
        kernel_dim.insert(*name, phi.kernel.dim());
        kernels.push(KernelReport {
            phase: name.to_string(),
            kernel_dim: phi.kernel.dim(),
            boundary_dim: p.boundary_ideal().dim(),
            kernel_equals_boundary: phi.kernel == p.boundary_ideal(),
        });
    }
    let kernel_gap = kernel_dim["P_ext"] - kernel_dim["P"];
    let boundary = BoundaryComparison {
        base_boundary_dim: suite.p_weak.boundary_ideal().dim(),
        ext_boundary_dim: suite.p_ext.boundary_ideal().dim(),
        strictly_larger: suite.p_ext.boundary_ideal().dim()
            > suite.p_weak.boundary_ideal().dim(),
        kernel_gap,
        gap_equals_bdim: kernel_gap == b_dim,
    };

    // representation counts and the restriction bijection, budget permitting
    let rep_counts = if budget.mdim_max == 0 {
        warnings.push("representation enumeration skipped: mdim budget is zero".to_string());
        RepCountReport {
            mdim_max: 0,
            per_mdim: None,
            pairs_agree: false,
            restriction_bijection_verified: false,
            refused: true,
        }
    } else {
        let enums: Result<Vec<Vec<FilteredRep>>, _> = named
            .iter()
            .map(|(_, p)| enumerate_reps(p, budget.mdim_max, budget))
            .collect();
        match enums {
            Ok(lists) => {
                let counts: Vec<Vec<usize>> = lists
                    .iter()
                    .map(|l| rep_counts_by_mdim(l, budget.mdim_max))
                    .collect();
                let rows: Vec<RepCountRow> = (0..budget.mdim_max)
                    .map(|i| RepCountRow {
                        mdim: i + 1,
                        r: counts[0][i],
                        r_ext: counts[1][i],
                        p: counts[2][i],
                        p_ext: counts[3][i],
                    })
                    .collect();
                let pairs_agree = counts[0] == counts[1] && counts[2] == counts[3];
                let bijection = restriction_bijection_holds(
                    &suite.r_strong,
                    &suite.r_ext,
                    &lists[0],
                    &lists[1],
                ) && restriction_bijection_holds(
                    &suite.p_weak,
                    &suite.p_ext,
                    &lists[2],
                    &lists[3],
                );
                RepCountReport {
                    mdim_max: budget.mdim_max,
                    per_mdim: Some(rows),
                    pairs_agree,
                    restriction_bijection_verified: bijection,
                    refused: false,
                }
            }
            Err(e) => {
                warnings.push(format!("representation enumeration refused: {e}"));
                RepCountReport {
                    mdim_max: budget.mdim_max,
                    per_mdim: None,
                    pairs_agree: false,
                    restriction_bijection_verified: false,
                    refused: true,
                }
            }
        }
    };

    // testing object on P, with the drop check over its certificate family
    let testing_object = match testing_object_search(&suite.p_weak, budget) {
        Ok(t) => {
            let drop_check = if t.certified {
                let boundary_dim = suite.p_weak.boundary_ideal().dim();
                let empty_grows = phi_assemble(&suite.p_weak, &[])
                    .map(|phi| phi.kernel.dim() > boundary_dim)
                    .unwrap_or(false);
                let family_grows = subrep_lattice(&t.rep, budget).ok().map(|lattice| {
                    lattice
                        .iter()
                        .filter(|s| !s.is_full() && !s.is_zero())
                        .all(|s| {
                            let sub = sub_rep(&t.rep, s);
                            let with = phi_assemble(
                                &suite.p_weak,
                                &[t.rep.clone(), sub.clone()],
                            );
                            let without = phi_assemble(&suite.p_weak, &[sub]);
                            match (with, without) {
                                (Ok(w), Ok(wo)) => {
                                    w.kernel.dim() == boundary_dim
                                        && wo.kernel.dim() > boundary_dim
                                }
                                _ => false,
                            }
                        })
                });
                Some(empty_grows && family_grows.unwrap_or(false))
            } else {
                warnings.push("testing object minimality certificate incomplete".to_string());
                None
            };
            Some(TestingObjectReport {
                mdim: t.rep.mdim,
                kernel_dim: t.kernel_dim,
                boundary_dim: suite.p_weak.boundary_ideal().dim(),
                certified: t.certified,
                maximal_subrep_checks: t
                    .certificate
                    .map(|c| c.maximal_proper_subreps)
                    .unwrap_or_default(),
                drop_strictly_enlarges: drop_check,
            })
        }
        Err(e) => {
            warnings.push(format!("testing object search failed: {e}"));
            None
        }
    };

    // islands and local reconstruction on the extension of R and on P
    let mut islands = Vec::new();
    for (name, p) in [("R_ext", &suite.r_ext), ("P", &suite.p_weak)] {
        let local = local_reconstruction_check(p, budget);
        islands.push(IslandReport {
            phase: name.to_string(),
            found: local.island_dim.is_some(),
            island_dim: local.island_dim,
            local_kernel_dim: local.kernel_dim,
            local_reconstruction_exact: local.exact,
            notes: local.notes.clone(),
        });
        if !local.exact {
            warnings.push(format!("local reconstruction on {name} not certified exact"));
        }
    }

    // dichotomy agreement with obstruction vanishing
    let dichotomy = named
        .iter()
        .map(|(name, p)| {
            let boundary_zero = p.boundary_ideal().is_zero();
            let obstruction_zero = obstruction_object(p).is_zero();
            let verdict = p.dichotomy();
            DichotomyRow {
                phase: name.to_string(),
                verdict: verdict.to_string(),
                boundary_zero,
                obstruction_zero,
                agree: (verdict == crate::phase::Dichotomy::Strong)
                    == (boundary_zero && obstruction_zero),
            }
        })
        .collect();

    // generator-level depth bookkeeping for P
    let p = &suite.p_weak;
    let spec = HeisenbergSpec::new(n, 2);
    let wc = spec.w_count();
    let mut gens = Vec::new();
    for w_idx in 0..wc {
        let uw = crate::heisenberg::PhasePoint::from_index(&spec, w_idx).scale_u();
        let mut g = crate::gf2lin::BitVec::unit(p.dim(), uw.index(&spec));
        g.xor_assign(p.unit());
        if !g.is_zero() {
            gens.push(g);
        }
    }
    let f2 = p.layer(2);
    let f3 = p.layer(3);
    let squares_zero = gens.iter().all(|g| p.mul(g, g).is_zero());
    let pairs_deeper = gens
        .iter()
        .all(|g| gens.iter().all(|h| f2.contains(&p.mul(g, h))));
    let triples_vanish = gens.iter().all(|g| {
        gens.iter()
            .all(|h| gens.iter().all(|k| f3.contains(&p.mul(&p.mul(g, h), k))))
    });
    let flagship_notes = FlagshipNotes {
        boundary_depth_ideal_powers: p.boundary_depth(),
        boundary_generators_square_zero: squares_zero,
        generator_pair_products_in_second_layer: pairs_deeper,
        generator_triple_products_vanish: triples_vanish,
    };

    let quotient_iso = IsoWitnessReport::from_outcome(&suite.quotient_iso);
    if quotient_iso.verdict != "equivalent" {
        warnings.push("quotient equivalence to the strong phase not certified".to_string());
    }

    Ok(DemoReport {
        schema_version: SCHEMA_VERSION.to_string(),
        params: DemoParams {
            n,
            b_dim,
            mdim_max: budget.mdim_max,
            budget_steps: budget.iso_steps,
        },
        phases,
        boundary,
        kernels,
        quotient_iso,
        rep_counts,
        testing_object,
        islands,
        dichotomy,
        flagship_notes,
        warnings,
    })
}
