//! Command line front end: parse graph documents, run the classification,
//! unmixedness and oracle routes, decompose edge ideals, and drive the
//! cross-validation sweeps.
//!
//! Exit status 0 means the command completed (the verdict itself is
//! payload, never the status), 1 is a usage or input error, 2 means an
//! enumeration or oracle bound was exceeded. Payload goes to stdout,
//! diagnostics to stderr.

use edgecm_cli::document;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use edgecm::bits;
use edgecm::classifier::{classify, Certificate, Clause};
use edgecm::graph::GraphError;
use edgecm::harness::{conjecture_search, cross_validate, GraphFamily, InstanceSpec, OrientationPolicy};
use edgecm::oracle::{is_cohen_macaulay, polarize, CmWitness, FieldChoice, OracleError};
use edgecm::oriented::{OrientedGraph, UnmixedVerdict};

#[derive(Parser)]
#[command(name = "edgecm", version, about = "Cohen-Macaulayness of edge ideals of weighted oriented graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Girth-at-least-5 classification with a clause certificate.
    Classify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Unmixedness by the strong-vertex-cover criterion, with a witness.
    Unmixed {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Algebraic Cohen-Macaulayness oracle (polarization + homology).
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// Coefficient field: `q` for the rationals or `p:PRIME`.
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Irreducible decomposition and associated primes of the edge ideal.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Cross-validate all verdict routes over girth-at-least-5 families.
    Sweep {
        /// Largest vertex count of the enumerated underlying graphs.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Sample size; omit for the full orientation-weight expansion.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Weight alphabet, comma separated.
        #[arg(long, default_value = "1,2")]
        weights: String,
        #[arg(long)]
        json: bool,
    },
    /// Triangle-free exploration: compare the oriented verdict against
    /// underlying-CM plus unmixedness on cycles of the given lengths, or on
    /// all connected triangle-free graphs up to --max-n vertices.
    Conjecture {
        #[arg(long, default_value = "4,6", conflicts_with = "max_n")]
        lengths: String,
        /// Enumerate connected triangle-free graphs up to this size instead
        /// of using --lengths.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "1,2")]
        weights: String,
        #[arg(long)]
        json: bool,
    },
    /// DOT export of the underlying graph.
    Dot {
        #[arg(long)]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version through the same path.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("edgecm: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: 1, message: message.into() }
    }

    fn bound(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

fn load(path: &PathBuf) -> Result<OrientedGraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    document::parse_document(&text)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn parse_field(s: &str) -> Result<FieldChoice, CliError> {
    if s == "q" {
        return Ok(FieldChoice::Rationals);
    }
    if let Some(p) = s.strip_prefix("p:") {
        let p: u64 = p
            .parse()
            .map_err(|e| CliError::usage(format!("bad prime {p}: {e}")))?;
        return FieldChoice::prime(p).map_err(|e| CliError::usage(e.to_string()));
    }
    Err(CliError::usage(format!("unknown field {s:?}; use q or p:PRIME")))
}

fn parse_weights(s: &str) -> Result<Vec<u64>, CliError> {
    let ws: Result<Vec<u64>, _> = s.split(',').map(str::parse).collect();
    let ws = ws.map_err(|e| CliError::usage(format!("bad weight alphabet {s:?}: {e}")))?;
    if ws.is_empty() || ws.contains(&0) {
        return Err(CliError::usage("weight alphabet must be nonempty and positive"));
    }
    Ok(ws)
}

fn labels_of(d: &OrientedGraph, mask: u32) -> Vec<String> {
    bits::iter(mask).map(|v| d.underlying().label(v).to_string()).collect()
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { input, json } => {
            let d = load(&input)?.normalize();
            let c = classify(&d);
            if json {
                let payload = json!({
                    "labels": d.underlying().labels(),
                    "document": document::render_document(&d),
                    "classification": c,
                });
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            } else {
                print_certificate(&d, &c.certificate);
                match (&c.unmixedness_route, c.routes_agree()) {
                    (Some(route), Some(agree)) => {
                        println!(
                            "unmixedness route: graph {}, ideal {} => {}",
                            if route.graph_cohen_macaulay { "Cohen-Macaulay" } else { "not Cohen-Macaulay" },
                            if route.verdict.is_unmixed() { "unmixed" } else { "mixed" },
                            if agree { "routes agree" } else { "ROUTES DISAGREE" },
                        );
                    }
                    _ => println!("unmixedness route: not evaluated"),
                }
            }
            Ok(())
        }
        Command::Unmixed { input, json } => {
            let d = load(&input)?.normalize();
            let verdict = d.is_unmixed().map_err(|e| match e {
                GraphError::BoundExceeded { .. } => CliError::bound(e.to_string()),
            })?;
            if json {
                let payload = json!({
                    "labels": d.underlying().labels(),
                    "verdict": verdict,
                    "unmixed": verdict.is_unmixed(),
                });
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            } else {
                match &verdict {
                    UnmixedVerdict::Unmixed => println!("unmixed"),
                    UnmixedVerdict::NotWellCovered { smaller, larger } => println!(
                        "mixed: not well-covered; maximal independent sets {{{}}} and {{{}}} differ in size",
                        labels_of(&d, *smaller).join(","),
                        labels_of(&d, *larger).join(","),
                    ),
                    UnmixedVerdict::StrongCoverWitness { cover, l3 } => println!(
                        "mixed: strong cover {{{}}} with enclosed layer {{{}}}",
                        labels_of(&d, *cover).join(","),
                        labels_of(&d, *l3).join(","),
                    ),
                }
            }
            Ok(())
        }
        Command::Oracle { input, field, json } => {
            let d = load(&input)?.normalize();
            let field = parse_field(&field)?;
            let ideal = d.edge_ideal();
            let verdict = is_cohen_macaulay(&ideal, &field).map_err(|e| match e {
                OracleError::Complex(_) => CliError::bound(e.to_string()),
                other => CliError::usage(other.to_string()),
            })?;
            let (_, lineage) = polarize(&ideal);
            let name = |v: usize| {
                let (orig, copy) = lineage[v];
                let label = d.underlying().label(orig);
                if copy == 1 { label.to_string() } else { format!("{label}.{copy}") }
            };
            if json {
                let payload = json!({
                    "labels": d.underlying().labels(),
                    "field": field,
                    "verdict": verdict,
                });
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            } else {
                match &verdict.witness {
                    None => println!("Cohen-Macaulay"),
                    Some(CmWitness::NotPure { small_facet, large_facet }) => println!(
                        "not Cohen-Macaulay: complex not pure; facets {{{}}} vs {{{}}}",
                        small_facet.iter().map(|&v| name(v)).collect::<Vec<_>>().join(","),
                        large_facet.iter().map(|&v| name(v)).collect::<Vec<_>>().join(","),
                    ),
                    Some(CmWitness::Homology { face, dimension, rank }) => println!(
                        "not Cohen-Macaulay: link of {{{}}} has homology rank {rank} in dimension {dimension}",
                        face.iter().map(|&v| name(v)).collect::<Vec<_>>().join(","),
                    ),
                }
            }
            Ok(())
        }
        Command::Decompose { input, json } => {
            let d = load(&input)?.normalize();
            let ideal = d.edge_ideal();
            let name = |v: usize| d.underlying().label(v).to_string();
            let comps = ideal
                .irreducible_decomposition()
                .map_err(|e| CliError::usage(e.to_string()))?;
            let primes = ideal.associated_primes().expect("decomposable");
            let height = ideal.height().expect("decomposable");
            let unmixed = ideal.is_unmixed_ideal().expect("decomposable");
            if json {
                let payload = json!({
                    "labels": d.underlying().labels(),
                    "ideal": ideal.render(&name),
                    "components": comps.iter().map(|c| c.render(&name)).collect::<Vec<_>>(),
                    "associated_primes": primes
                        .iter()
                        .map(|p| p.iter().map(|&v| name(v)).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                    "height": height,
                    "unmixed": unmixed,
                });
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            } else {
                println!("edge ideal: {}", ideal.render(&name));
                println!(
                    "irreducible decomposition: {}",
                    comps.iter().map(|c| c.render(&name)).collect::<Vec<_>>().join(" ∩ ")
                );
                for p in &primes {
                    println!(
                        "associated prime: ({})",
                        p.iter().map(|&v| name(v)).collect::<Vec<_>>().join(", ")
                    );
                }
                println!("height: {height}");
                println!("unmixed: {unmixed}");
            }
            Ok(())
        }
        Command::Sweep { max_n, samples, seed, weights, json } => {
            let weight_alphabet = parse_weights(&weights)?;
            if max_n > 12 {
                return Err(CliError::bound(format!(
                    "sweep bound is 12 vertices, requested {max_n}"
                )));
            }
            let spec = InstanceSpec {
                family: GraphFamily::Connected { max_vertices: max_n, min_girth: Some(5) },
                orientations: match samples {
                    None => OrientationPolicy::All,
                    Some(count) => OrientationPolicy::Sampled { count },
                },
                weight_alphabet,
                seed,
            };
            eprintln!("sweeping girth>=5 connected graphs on up to {max_n} vertices");
            let report = cross_validate(&spec);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                print!("{report}");
            }
            Ok(())
        }
        Command::Conjecture { lengths, max_n, samples, seed, weights, json } => {
            let weight_alphabet = parse_weights(&weights)?;
            let family = match max_n {
                Some(n) => {
                    if n > 8 {
                        return Err(CliError::bound(format!(
                            "conjecture enumeration bound is 8 vertices, requested {n}"
                        )));
                    }
                    GraphFamily::Connected { max_vertices: n, min_girth: Some(4) }
                }
                None => {
                    let lengths: Result<Vec<usize>, _> =
                        lengths.split(',').map(str::parse).collect();
                    let lengths =
                        lengths.map_err(|e| CliError::usage(format!("bad lengths: {e}")))?;
                    if lengths.iter().any(|&l| !(3..=12).contains(&l)) {
                        return Err(CliError::usage("cycle lengths must lie in 3..=12"));
                    }
                    GraphFamily::Cycles { lengths }
                }
            };
            let spec = InstanceSpec {
                family,
                orientations: match samples {
                    None => OrientationPolicy::All,
                    Some(count) => OrientationPolicy::Sampled { count },
                },
                weight_alphabet,
                seed,
            };
            let report = conjecture_search(&spec);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                print!("{report}");
            }
            Ok(())
        }
        Command::Dot { input } => {
            let d = load(&input)?;
            let g = d.underlying();
            println!("graph {{");
            for v in 0..g.vertex_count() {
                println!("  \"{}\" [label=\"{} (w={})\"];", g.label(v), g.label(v), d.weight(v));
            }
            for (u, v) in g.edges() {
                println!("  \"{}\" -- \"{}\";", g.label(u), g.label(v));
            }
            println!("}}");
            Ok(())
        }
    }
}

fn print_certificate(d: &OrientedGraph, c: &Certificate) {
    let g = d.underlying();
    let name = |v: usize| g.label(v).to_string();
    match c {
        Certificate::CohenMacaulay { pendant_matching, basic_cycles } => {
            println!("verdict: Cohen-Macaulay");
            if !pendant_matching.is_empty() {
                println!(
                    "pendant matching: {}",
                    pendant_matching
                        .iter()
                        .map(|&(s, l)| format!("{}-{}", name(s), name(l)))
                        .collect::<Vec<_>>()
                        .join(", ")
                );
            }
            for cycle in basic_cycles {
                println!(
                    "basic 5-cycle: ({})",
                    cycle.iter().map(|&v| name(v)).collect::<Vec<_>>().join(", ")
                );
            }
        }
        Certificate::NotCohenMacaulay { clause } => {
            println!("verdict: not Cohen-Macaulay");
            match clause {
                Clause::PcPartition { failure } => println!("failed clause: {failure}"),
                Clause::PendantOrientation { support, leaf, inflow } => println!(
                    "failed clause: pendant support {} (weight > 1) receives an arc from {} but not from its leaf {}",
                    name(*support), name(*inflow), name(*leaf)
                ),
                Clause::CycleUnmixed { cycle } => println!(
                    "failed clause: basic 5-cycle ({}) has no reducible vertex",
                    cycle.iter().map(|&v| name(v)).collect::<Vec<_>>().join(", ")
                ),
                Clause::CycleDeletionUnmixed { cycle, vertex } => println!(
                    "failed clause: deleting {} from basic 5-cycle ({}) leaves a mixed oriented path",
                    name(*vertex),
                    cycle.iter().map(|&v| name(v)).collect::<Vec<_>>().join(", ")
                ),
                Clause::CycleInflow { cycle, vertex, inflow } => println!(
                    "failed clause: weighted vertex {} on basic 5-cycle ({}) receives an arc from {} outside the cycle but not from both cycle neighbors",
                    name(*vertex),
                    cycle.iter().map(|&v| name(v)).collect::<Vec<_>>().join(", "),
                    name(*inflow)
                ),
            }
        }
        Certificate::OutOfScope { short_cycle } => {
            println!(
                "verdict: out of scope (girth < 5); short cycle: ({})",
                short_cycle.iter().map(|&v| name(v)).collect::<Vec<_>>().join(", ")
            );
        }
    }
}
