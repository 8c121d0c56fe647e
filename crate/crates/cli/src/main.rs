//! Command-line front end: analyse, decompose and classify single graphs,
//! browse the catalog, generate cubic graphs and run theorem sweeps.
//!
//! Exit codes: 0 when every check passes, 1 when a verification or catalog
//! fact fails, 2 on usage or input errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use brickwork::brick::{classify_all, is_essentially_4ec_cubic, Mode};
use brickwork::graph::{catalog, from_graph6, from_json, to_graph6, Multigraph};
use brickwork::harness::{
    analyze, check_facts, generate_cubic, verify_theorem, Corpus, Dedup, TheoremId, VerifyOptions,
};
use brickwork::tightcut::{tight_cut_decomposition, Policy};
use brickwork::Error;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

/// Line to stdout; a closed pipe (e.g. `| head`) ends output quietly.
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "brickwork", version, about = "Bricks, braces and tight cuts of matching covered graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
    /// File holding one graph6 line or a JSON edge list.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Name of a catalog graph.
    #[arg(long)]
    catalog: Option<String>,
}

impl Input {
    fn load(&self) -> Result<Multigraph, Error> {
        if let Some(s) = &self.g6 {
            return from_graph6(s);
        }
        if let Some(name) = &self.catalog {
            return catalog::graph(name);
        }
        let path = self.file.as_ref().expect("clap requires one input");
        let text = fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            from_json(trimmed)
        } else {
            from_graph6(trimmed.lines().next().unwrap_or(""))
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Brick/brace verdict, decomposition, edge classes and census.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Tight cut decomposition tree.
    Decompose {
        #[command(flatten)]
        input: Input,
        /// `det` or `seed:N`.
        #[arg(long, default_value = "det")]
        policy: String,
        #[arg(long)]
        json: bool,
    },
    /// Class of every edge of a cubic brick.
    ClassifyEdges {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Sweep one statement over a corpus; JSON Lines on stdout.
    Verify {
        /// Statement id, e.g. T1.6 or P3.5-3.9.
        #[arg(long)]
        theorem: String,
        /// Orders of generated cubic graphs to include.
        #[arg(long, num_args = 1..)]
        n: Vec<usize>,
        /// Extra graph6 corpus file.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Seeded decomposition orders per graph for T1.1.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// List catalog graphs or show one with its checked facts.
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
    },
    /// Connected cubic graphs on N vertices in graph6.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &serde_json::Value) {
    out!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Analyze { input, json } => {
            let g = input.load()?;
            let a = analyze(&g)?;
            if json {
                print_json(&serde_json::to_value(&a).map_err(|e| Error::Json(e.to_string()))?);
            } else {
                out!("order {} size {}", a.order, a.size);
                out!("verdict {:?}", a.verdict);
                out!("matching covered {}", a.matching_covered);
                let opt = |v: Option<bool>| v.map_or("n/a".to_string(), |b| b.to_string());
                out!("bicritical {}", opt(a.bicritical));
                out!("b {}", a.b.map_or("n/a".into(), |b| b.to_string()));
                out!("essentially 4-edge-connected {}", opt(a.essentially_4ec));
                out!("near-bipartite {}", opt(a.near_bipartite));
                out!("snark {}", opt(a.snark));
                if let Some(r) = a.removable_edges {
                    out!("removable edges {r}");
                }
                if let Some(q) = a.quasi_b_invariant_edges {
                    out!("quasi-b-invariant edges {q}");
                }
            }
        }
        Command::Decompose {
            input,
            policy,
            json,
        } => {
            let g = input.load()?;
            let tree = tight_cut_decomposition(&g, policy.parse::<Policy>()?)?;
            if json {
                print_json(&tree.to_json());
            } else {
                out!("bricks {} braces {}", tree.brick_count(), tree.brace_count());
                for (leaf, verdict) in tree.leaves() {
                    out!("{verdict:?} {}", to_graph6(&leaf.underlying_simple())?);
                }
            }
        }
        Command::ClassifyEdges { input, json } => {
            let g = input.load()?;
            let mode = if is_essentially_4ec_cubic(&g) {
                Mode::Strict
            } else {
                Mode::Relaxed
            };
            let classes = classify_all(&g, mode)?;
            if json {
                print_json(&json!(classes.iter().map(|c| c.to_json(false)).collect::<Vec<_>>()));
            } else {
                for c in &classes {
                    let name = |v| g.label(v).map(str::to_string).unwrap_or(v.to_string());
                    let b = c.b_after_deletion().map_or(String::new(), |b| format!(" b={b}"));
                    out!(
                        "{} {}-{} {:?}{b}",
                        c.edge,
                        name(c.ends[0]),
                        name(c.ends[1]),
                        c.class.name()
                    );
                }
            }
        }
        Command::Verify {
            theorem,
            n,
            corpus,
            jobs,
            seed,
            samples,
        } => {
            let id: TheoremId = theorem.parse()?;
            let mut parts = Vec::new();
            for k in n {
                parts.push(Corpus::generated(k)?);
            }
            if let Some(path) = corpus {
                parts.push(Corpus::from_graph6_file(&path, Dedup::IsomorphismFree)?);
            }
            let Some(all) = parts.into_iter().reduce(Corpus::union) else {
                return Err(Error::Precondition("give --n or --corpus".into()));
            };
            let options = VerifyOptions {
                seed,
                jobs,
                policy_samples: samples,
                ..VerifyOptions::default()
            };
            let report = verify_theorem(id, &all, &options)?;
            out!("{}", report.to_json_lines().trim_end());
            if report.failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Catalog { action } => match action.unwrap_or(CatalogAction::List) {
            CatalogAction::List => {
                for name in catalog::NAMES {
                    let e = catalog::entry(name)?;
                    out!("{name}\t{}", e.description);
                }
            }
            CatalogAction::Show { name } => {
                let e = catalog::entry(&name)?;
                let checks = check_facts(&e);
                print_json(&json!({
                    "name": e.name,
                    "description": e.description,
                    "graph": brickwork::graph::GraphJson::from_graph(&e.graph),
                    "graph6": to_graph6(&e.graph)?,
                    "facts": checks,
                }));
                if checks.iter().any(|c| !c.holds) {
                    return Ok(ExitCode::from(1));
                }
            }
        },
        Command::Generate { n, out } => {
            let mut text = String::new();
            for g in generate_cubic(n)? {
                text.push_str(&to_graph6(&g)?);
                text.push('\n');
            }
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| Error::Io {
                    path: path.display().to_string(),
                    reason: e.to_string(),
                })?,
                None => std::io::stdout()
                    .write_all(text.as_bytes())
                    .map_err(|e| Error::Io {
                        path: "stdout".into(),
                        reason: e.to_string(),
                    })?,
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
