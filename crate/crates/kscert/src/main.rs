use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kscert::catalog::{build_graph, enumerate_octads, enumerate_quadruples};
use kscert::engine::{search_assignment, ContextHypergraph, ParityCertificate};
use kscert::files;
use kscert::linalg::ExactVector;
use kscert::mermin::generate_defining_octads;
use kscert::merge_to_planes;
use kscert::reference;
use kscert::report::{run_verification, VerifyOptions};
use kscert::state_proof::{reduce_by_state, verify_proof};

/// Exact construction and verification of 8-dimensional parity
/// certificates for quantum contextuality.
#[derive(Parser)]
#[command(name = "kscert", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchTarget {
    /// The five defining octads (satisfiable).
    Defining,
    /// The 11-octad certificate contexts (unsatisfiable).
    Certificate,
    /// All 25 octads of the catalog (unsatisfiable).
    Catalog,
}

#[derive(Subcommand)]
enum Command {
    /// Build the defining bases for n qubits and write the ray and basis files.
    Generate {
        /// Number of qubits (the 8-dimensional configuration uses 3).
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..=6))]
        qubits: u32,
        /// Output directory for vectors.txt and bases.txt.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Enumerate all orthogonal octads of the 40-ray set.
    Octads {
        /// Write the catalog here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Census of excluded quadruples and their retained-octad selections.
    Quadruples {
        /// Write the selection list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every verification claim and emit the report.
    VerifyAll {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also write the report to this path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Diagnostic: drop one certificate column (1-11) first.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=11))]
        drop_octad: Option<u32>,
    },
    /// Merge co-occurring ray pairs of the certificate into rank-2 planes.
    Merge {
        /// Write the merged hypergraph here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce the certificate by a pure state and verify the proof.
    StateProof {
        /// The state as eight space-separated integers, e.g. "1 0 0 -1 0 -1 -1 0".
        state: String,
        /// Write the proof here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the assignment search on a context family.
    Search {
        #[arg(long, value_enum, default_value_t = SearchTarget::Certificate)]
        target: SearchTarget,
        /// Search a hypergraph exchange file instead of a built-in target.
        #[arg(long, conflicts_with = "target")]
        input: Option<PathBuf>,
    },
}

fn write_or_print(out: Option<&PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// The 40-ray instance: canonical rays, catalog, defining blocks, and the
/// certificate columns as catalog context indices.
struct Instance {
    rays: Vec<ExactVector>,
    octads: Vec<Vec<usize>>,
    blocks: Vec<Vec<usize>>,
    certificate: Vec<usize>,
    hypergraph: ContextHypergraph,
}

fn build_instance() -> Instance {
    let bases = generate_defining_octads(3).expect("three-qubit construction");
    let mut rays: Vec<ExactVector> = bases.iter().flat_map(|b| b.rays().cloned()).collect();
    rays.sort();
    rays.dedup();
    let blocks: Vec<Vec<usize>> = bases
        .iter()
        .map(|b| {
            b.rays()
                .map(|v| rays.binary_search(v).expect("ray catalogued"))
                .collect()
        })
        .collect();
    let graph = build_graph(rays.clone()).expect("distinct rays");
    let catalog = enumerate_octads(&graph);
    let certificate: Vec<usize> = reference::certificate_columns()
        .iter()
        .map(|col| {
            let ids: Vec<usize> = col
                .iter()
                .map(|v| rays.binary_search(v).expect("column ray catalogued"))
                .collect();
            catalog.position(&ids).expect("column octad catalogued")
        })
        .collect();
    let hypergraph = ContextHypergraph::from_ray_contexts(&rays, catalog.octads())
        .expect("catalog octads resolve identity");
    Instance {
        rays,
        octads: catalog.octads().to_vec(),
        blocks,
        certificate,
        hypergraph,
    }
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Generate { qubits, out } => {
            let bases = generate_defining_octads(qubits as usize)
                .map_err(|e| e.to_string())?;
            let mut rays: Vec<ExactVector> =
                bases.iter().flat_map(|b| b.rays().cloned()).collect();
            rays.sort();
            rays.dedup();
            let octads: Vec<Vec<usize>> = bases
                .iter()
                .map(|b| {
                    let mut ids: Vec<usize> = b
                        .rays()
                        .map(|v| rays.binary_search(v).expect("ray catalogued"))
                        .collect();
                    ids.sort_unstable();
                    ids
                })
                .collect();
            fs::create_dir_all(&out)
                .map_err(|e| format!("cannot create {}: {e}", out.display()))?;
            let vec_path = out.join("vectors.txt");
            let base_path = out.join("bases.txt");
            let header = format!("defining rays for {qubits} qubits");
            fs::write(&vec_path, files::write_vectors(&rays, &header))
                .map_err(|e| format!("cannot write {}: {e}", vec_path.display()))?;
            fs::write(&base_path, files::write_catalog(&rays, &octads))
                .map_err(|e| format!("cannot write {}: {e}", base_path.display()))?;
            println!(
                "wrote {} rays to {} and {} bases to {}",
                rays.len(),
                vec_path.display(),
                octads.len(),
                base_path.display()
            );
            Ok(true)
        }
        Command::Octads { out } => {
            let inst = build_instance();
            let text = files::write_catalog(&inst.rays, &inst.octads);
            write_or_print(out.as_ref(), &text)?;
            if out.is_some() {
                println!(
                    "catalog: {} octads over {} rays",
                    inst.octads.len(),
                    inst.rays.len()
                );
            }
            Ok(true)
        }
        Command::Quadruples { out } => {
            let inst = build_instance();
            let graph = build_graph(inst.rays.clone()).expect("distinct rays");
            let catalog = enumerate_octads(&graph);
            let census =
                enumerate_quadruples(&graph, &catalog, &inst.blocks, &inst.hypergraph)
                    .map_err(|e| e.to_string())?;
            let mut text = String::new();
            text.push_str(&format!(
                "# orthogonal quadruples: {}\n# in distinct defining octads: {}\n# retaining exactly 11 octads: {}\n# certificate grade: {}\n",
                census.orthogonal,
                census.orthogonal_distinct_blocks,
                census.selections.len(),
                census.certificate_grade,
            ));
            text.push_str("# columns: four excluded ray indices | distinct-blocks | certificate-valid\n");
            for sel in &census.selections {
                let ids: Vec<String> = sel.excluded.iter().map(usize::to_string).collect();
                text.push_str(&format!(
                    "{} | {} | {}\n",
                    ids.join(" "),
                    sel.distinct_blocks,
                    sel.certificate_valid
                ));
            }
            write_or_print(out.as_ref(), &text)?;
            if out.is_some() {
                println!(
                    "quadruples: {} orthogonal, {} selections, {} certificate grade",
                    census.orthogonal,
                    census.selections.len(),
                    census.certificate_grade
                );
            }
            Ok(true)
        }
        Command::VerifyAll {
            format,
            out,
            drop_octad,
        } => {
            let report = run_verification(&VerifyOptions {
                drop_column: drop_octad.map(|k| k as usize),
            });
            let rendered = match format {
                Format::Text => report.render_text(),
                Format::Json => report.to_json(),
            };
            if let Some(path) = &out {
                fs::write(path, &rendered)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            print!("{rendered}");
            Ok(report.all_passed())
        }
        Command::Merge { out } => {
            let inst = build_instance();
            let h_cert = inst
                .hypergraph
                .restrict(&inst.certificate)
                .expect("columns in range");
            let merged = match merge_to_planes(&h_cert, &reference::plane_spec()) {
                Ok(m) => m,
                Err(e) => {
                    eprintln!("merge failed: {e}");
                    return Ok(false);
                }
            };
            let text = files::write_hypergraph(&merged);
            write_or_print(out.as_ref(), &text)?;
            let hist = merged.rank_histogram();
            let summary = format!(
                "merged: {} projectors (rank histogram {:?}), {} contexts, search: {}",
                merged.projector_count(),
                hist,
                merged.context_count(),
                if search_assignment(&merged).is_none() {
                    "none"
                } else {
                    "assignment found"
                }
            );
            if out.is_some() {
                println!("{summary}");
            } else {
                eprintln!("{summary}");
            }
            let ok = merged.projector_count() == 30
                && hist.get(&1) == Some(&16)
                && hist.get(&2) == Some(&14);
            Ok(ok)
        }
        Command::StateProof { state, out } => {
            let inst = build_instance();
            let parsed: ExactVector = state
                .parse()
                .map_err(|e| format!("cannot parse state: {e}"))?;
            if inst.rays.binary_search(&parsed).is_err() {
                let candidates: Vec<String> =
                    inst.rays.iter().map(ExactVector::to_string).collect();
                return Err(format!(
                    "state [{parsed}] is not one of the 40 catalog rays; valid candidates:\n{}",
                    candidates.join("\n")
                ));
            }
            let contexts: Vec<Vec<ExactVector>> = inst
                .certificate
                .iter()
                .map(|&c| {
                    inst.octads[c]
                        .iter()
                        .map(|&v| inst.rays[v].clone())
                        .collect()
                })
                .collect();
            let proof = match reduce_by_state(&contexts, &parsed) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("reduction failed: {e}");
                    return Ok(false);
                }
            };
            let verdict = verify_proof(&proof);
            let mut text = files::write_proof(&proof);
            text.push_str(&format!(
                "# verdict: {}\n",
                if verdict.passed() { "pass" } else { "fail" }
            ));
            write_or_print(out.as_ref(), &text)?;
            let (ctxs, rays) = proof.shape();
            let summary = format!(
                "state proof: {ctxs} contexts, {rays} distinct rays, verdict {}",
                if verdict.passed() { "pass" } else { "fail" }
            );
            if out.is_some() {
                println!("{summary}");
            } else {
                eprintln!("{summary}");
            }
            for d in &verdict.defects {
                eprintln!("defect: {d}");
            }
            Ok(verdict.passed())
        }
        Command::Search { target, input } => {
            let h = match &input {
                Some(path) => {
                    let text = fs::read_to_string(path)
                        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                    files::parse_hypergraph(&text).map_err(|e| e.to_string())?
                }
                None => {
                    let inst = build_instance();
                    match target {
                        SearchTarget::Catalog => inst.hypergraph.clone(),
                        SearchTarget::Certificate => inst
                            .hypergraph
                            .restrict(&inst.certificate)
                            .expect("columns in range"),
                        SearchTarget::Defining => {
                            let graph =
                                build_graph(inst.rays.clone()).expect("distinct rays");
                            let catalog = enumerate_octads(&graph);
                            let ids: Vec<usize> = inst
                                .blocks
                                .iter()
                                .map(|b| catalog.position(b).expect("defining octad catalogued"))
                                .collect();
                            inst.hypergraph.restrict(&ids).expect("in range")
                        }
                    }
                }
            };
            match search_assignment(&h) {
                None => println!("assignment: none"),
                Some(a) => {
                    let chosen: Vec<String> = a
                        .values()
                        .iter()
                        .enumerate()
                        .filter(|(_, &v)| v)
                        .map(|(i, _)| i.to_string())
                        .collect();
                    println!("assignment: projectors {{{}}} take value 1", chosen.join(", "));
                    if !a.satisfies(&h) {
                        eprintln!("warning: assignment failed the sum-rule recheck");
                    }
                }
            }
            let cert = ParityCertificate::new((0..h.context_count()).collect());
            println!(
                "all-context parity certificate: {}",
                if kscert::is_valid_certificate(&h, &cert) {
                    "valid"
                } else {
                    "not valid"
                }
            );
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
