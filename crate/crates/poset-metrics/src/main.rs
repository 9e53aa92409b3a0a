//! `posets` — CLI front end for the poset-metrics library.
//!
//! Exit codes: 0 success; 1 property violated or counterexample found;
//! 2 input error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use poset_metrics::enumerate::{canonical_code, enumerate_posets, PosetFilter};
use poset_metrics::error::PosetError;
use poset_metrics::families::{generate, FamilySpec};
use poset_metrics::io::{parse_poset, render_poset};
use poset_metrics::metrics::{
    chain_compatibility, distance, kinship, maximal_chains, triangle_violations, DistanceKind,
};
use poset_metrics::poset::Poset;
use poset_metrics::verify::{falsify_chain_compatibility, verify, PropositionId};

#[derive(Parser)]
#[command(name = "posets", version, about = "Distances and metrics on finite posets")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the structural report for a poset file.
    Check { file: PathBuf },
    /// Distance between two elements.
    Dist {
        file: PathBuf,
        #[arg(long)]
        kind: String,
        x: String,
        y: String,
    },
    /// Scan for triangle-inequality violations (exit 1 if any).
    Metric {
        file: PathBuf,
        #[arg(long)]
        kind: String,
    },
    /// List every maximal chain.
    Chains { file: PathBuf },
    /// Chain-compatibility verdict (exit 1 on violation).
    Compat {
        file: PathBuf,
        #[arg(long)]
        kind: String,
    },
    /// Write a generated family to a poset file (or stdout).
    Gen {
        family: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Override the seed of a random family spec.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Stream all posets on N elements up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Comma-separated predicates, `!` negates: e.g. `join_semilattice,!semimodular`.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        count_only: bool,
        /// Worker threads (0 = default, 1 = sequential). Output is identical for any value.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Run the proposition harness (exit 1 if witnesses are found).
    Verify {
        #[arg(long)]
        prop: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Degree of kinship in a tree order with ancestors upward.
    Kinship {
        file: PathBuf,
        #[arg(long)]
        method: String,
        ego: String,
        alter: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(violated) => {
            if violated {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(file: &PathBuf) -> Result<Poset, PosetError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| PosetError::InvalidParameter(format!("{}: {e}", file.display())))?;
    parse_poset(&text)
}

/// Ok(true) means "property violated", mapping to exit code 1.
fn run(cli: &Cli) -> Result<bool, PosetError> {
    match &cli.command {
        Command::Check { file } => {
            let report = load(file)?.structural_report();
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("elements:         {}", report.element_count);
                println!("cover edges:      {}", report.cover_edge_count);
                println!("connected:        {}", report.connected);
                println!("upper filtering:  {}", report.upper_filtering);
                println!("lower filtering:  {}", report.lower_filtering);
                println!("join semilattice: {}", report.join_semilattice);
                println!("lattice:          {}", report.lattice);
                println!("tree order:       {}", report.tree_order);
                println!("semimodular:      {}", report.semimodular);
                println!("jordan_dedekind:  {}", report.jordan_dedekind);
            }
            Ok(false)
        }
        Command::Dist { file, kind, x, y } => {
            let p = load(file)?;
            let kind: DistanceKind = kind.parse()?;
            let d = distance(&p, kind, p.element(x)?, p.element(y)?)?;
            if cli.json {
                println!("{}", json!({ "kind": kind.as_str(), "x": x, "y": y, "distance": d }));
            } else {
                println!("{d}");
            }
            Ok(false)
        }
        Command::Metric { file, kind } => {
            let p = load(file)?;
            let kind: DistanceKind = kind.parse()?;
            let violations = triangle_violations(&p, kind)?;
            if cli.json {
                let vs: Vec<_> = violations
                    .iter()
                    .map(|v| {
                        json!({
                            "x": p.name(v.x), "y": p.name(v.y), "z": p.name(v.z),
                            "lhs": v.lhs, "rhs": v.rhs,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "kind": kind.as_str(),
                        "is_metric": violations.is_empty(),
                        "violations": vs,
                    }))
                    .unwrap()
                );
            } else if violations.is_empty() {
                println!("{} is a metric on this poset", kind.as_str());
            } else {
                println!(
                    "{} violates the triangle inequality ({} ordered triples):",
                    kind.as_str(),
                    violations.len()
                );
                for v in &violations {
                    println!(
                        "  d({},{}) = {} > {} = d({},{}) + d({},{})",
                        p.name(v.x),
                        p.name(v.z),
                        v.lhs,
                        v.rhs,
                        p.name(v.x),
                        p.name(v.y),
                        p.name(v.y),
                        p.name(v.z)
                    );
                }
            }
            Ok(!violations.is_empty())
        }
        Command::Chains { file } => {
            let p = load(file)?;
            let chains = maximal_chains(&p);
            if cli.json {
                let cs: Vec<Vec<&str>> = chains
                    .iter()
                    .map(|c| c.iter().map(|&e| p.name(e)).collect())
                    .collect();
                println!("{}", serde_json::to_string_pretty(&json!({ "chains": cs })).unwrap());
            } else {
                for c in &chains {
                    let names: Vec<&str> = c.iter().map(|&e| p.name(e)).collect();
                    println!("{}", names.join(" < "));
                }
            }
            Ok(false)
        }
        Command::Compat { file, kind } => {
            let p = load(file)?;
            let kind: DistanceKind = kind.parse()?;
            let violation = chain_compatibility(&p, kind)?;
            if cli.json {
                let v = violation.as_ref().map(|v| {
                    json!({
                        "chain": v.chain.iter().map(|&e| p.name(e)).collect::<Vec<_>>(),
                        "i": v.i, "j": v.j,
                        "expected": v.expected, "actual": v.actual,
                    })
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "kind": kind.as_str(),
                        "chain_compatible": violation.is_none(),
                        "violation": v,
                    }))
                    .unwrap()
                );
            } else if let Some(v) = &violation {
                let names: Vec<&str> = v.chain.iter().map(|&e| p.name(e)).collect();
                println!(
                    "{} is not chain-compatible: on chain {}, d({},{}) = {} but the index distance is {}",
                    kind.as_str(),
                    names.join(" < "),
                    names[v.i],
                    names[v.j],
                    v.actual,
                    v.expected
                );
            } else {
                println!("{} is chain-compatible", kind.as_str());
            }
            Ok(violation.is_some())
        }
        Command::Gen { family, output, seed } => {
            let mut spec: FamilySpec = family.parse()?;
            if let Some(s) = seed {
                if let FamilySpec::Random { seed, .. } = &mut spec {
                    *seed = *s;
                }
            }
            let p = generate(&spec)?;
            let text = render_poset(&p);
            match output {
                Some(path) => std::fs::write(path, text)
                    .map_err(|e| PosetError::InvalidParameter(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(false)
        }
        Command::Enumerate { n, filter, count_only, jobs } => {
            let filter = match filter {
                Some(f) => f.parse()?,
                None => PosetFilter::empty(),
            };
            let posets = enumerate_posets(*n, &filter, *jobs)?;
            if *count_only {
                if cli.json {
                    println!("{}", json!({ "n": n, "count": posets.len() }));
                } else {
                    println!("{}", posets.len());
                }
            } else if cli.json {
                let items: Vec<_> = posets
                    .iter()
                    .map(|p| {
                        json!({
                            "elements": p.names(),
                            "covers": p
                                .cover_pairs()
                                .iter()
                                .map(|&(x, y)| [p.name(x), p.name(y)])
                                .collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "n": n,
                        "count": posets.len(),
                        "posets": items,
                    }))
                    .unwrap()
                );
            } else {
                for p in &posets {
                    println!("# {}", canonical_code(p).to_hex());
                    print!("{}", render_poset(p));
                    println!();
                }
            }
            Ok(false)
        }
        Command::Verify { prop, max_n, jobs } => {
            let prop: PropositionId = prop.parse()?;
            let report = verify(prop, *max_n, *jobs)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                let verdict = match (prop, report.holds) {
                    (PropositionId::ChebSearch, true) => "witness found",
                    (PropositionId::ChebSearch, false) => "no witness found",
                    (_, true) => "holds",
                    (_, false) => "FAILS",
                };
                println!(
                    "{} over all posets up to {} elements: {} (scanned {}, relevant {}, witnesses {})",
                    report.proposition,
                    report.n_max,
                    verdict,
                    report.scanned,
                    report.relevant,
                    report.witnesses.len()
                );
                for note in &report.notes {
                    println!("note: {note}");
                }
                for w in &report.witnesses {
                    let covers: Vec<String> = w
                        .poset
                        .cover_pairs()
                        .iter()
                        .map(|&(x, y)| format!("{} < {}", w.poset.name(x), w.poset.name(y)))
                        .collect();
                    println!("witness poset: {}", covers.join(", "));
                    println!("  detail: {}", serde_json::to_string(&w.detail).unwrap());
                }
                if prop == PropositionId::P2 && report.holds {
                    // show one representative falsifier for flavor when available
                    if let Some(f) = first_jd_falsifier(*max_n, *jobs) {
                        println!("note: {f}");
                    }
                }
            }
            let violated = match prop {
                PropositionId::ChebSearch => !report.witnesses.is_empty(),
                _ => !report.holds,
            };
            Ok(violated)
        }
        Command::Kinship { file, method, ego, alter } => {
            let p = load(file)?;
            let result = kinship(&p, p.element(ego)?, p.element(alter)?)?;
            let degree = match method.as_str() {
                "civil" => result.civil,
                "canon" => result.canon,
                other => {
                    return Err(PosetError::InvalidParameter(format!(
                        "unknown method `{other}` (expected civil or canon)"
                    )))
                }
            };
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "method": method,
                        "ego": ego,
                        "alter": alter,
                        "ancestor": result.ancestor,
                        "degree": degree,
                    })
                );
            } else {
                println!("{degree}");
            }
            Ok(false)
        }
    }
}

fn first_jd_falsifier(max_n: usize, jobs: usize) -> Option<String> {
    for n in 1..=max_n {
        for p in enumerate_posets(n, &PosetFilter::empty(), jobs).ok()? {
            if let Some(f) = falsify_chain_compatibility(&p) {
                let a: Vec<&str> = f.chain_short.iter().map(|&e| p.name(e)).collect();
                let b: Vec<&str> = f.chain_long.iter().map(|&e| p.name(e)).collect();
                return Some(format!(
                    "smallest Jordan-Dedekind failure: interval [{}, {}] carries maximal chains {} and {}",
                    p.name(f.lower),
                    p.name(f.upper),
                    a.join("<"),
                    b.join("<")
                ));
            }
        }
    }
    None
}
