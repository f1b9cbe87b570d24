//! `abcgg` command-line front end.
//!
//! Exit codes: 0 on success, 2 on a usage error, 3 when a computation fails.

mod grid;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use abcgg::bounds::{self, BoundReport};
use abcgg::constructions::Anchored;
use abcgg::families::{default_grid, Family, Params};
use abcgg::io::{parse_edge_list, report_csv, report_json, serialize_edge_list};
use abcgg::random::{anchored_part, any_connected, rng};
use abcgg::verification::{census_check, verify_family, VerificationReport};
use abcgg::{compute, generate, Error, Graph, IndexKind};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde_json::{json, Map, Value};

use crate::grid::{family_grid, ParamRange};

#[derive(Parser)]
#[command(name = "abcgg", version, about = "ABC, ABC_GG and Wiener indices of graphs and graph families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute indices of an edge-list graph and print them as JSON
    Compute {
        /// Comma-separated subset of abc, abc_gg, wiener
        #[arg(long, default_value = "abc,abc_gg,wiener")]
        index: String,
        #[arg(long)]
        input: PathBuf,
    },
    /// Write one family member as an edge list
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        /// Defaults to standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check closed forms against direct computation over a parameter grid
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// abc, abc_gg, or all
        #[arg(long, default_value = "all")]
        index: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a bound on an input graph or on seeded random instances
    Bounds {
        #[arg(value_enum)]
        bound: BoundName,
        #[arg(long, default_value = "abc")]
        index: String,
        /// Graph for the deletion bounds; every edge (or vertex) is tried
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random instances when no input is given
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// Family name, e.g. spiro, para_hex, dendrimer_d3 (verify also accepts "all")
    #[arg(long)]
    family: String,
    #[arg(long)]
    m: Option<ParamRange>,
    #[arg(long)]
    n: Option<ParamRange>,
    #[arg(long)]
    q: Option<ParamRange>,
    #[arg(long)]
    h: Option<ParamRange>,
    #[arg(long)]
    k: Option<ParamRange>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundName {
    EdgeDeletion,
    VertexDeletion,
    Link,
    LinkGg,
    Chain,
    Bouquet,
    Circuit,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute { index, input } => cmd_compute(&index, &input),
        Command::Generate { family, output } => cmd_generate(&family, output.as_deref()),
        Command::Verify {
            family,
            index,
            format,
            output,
        } => cmd_verify(&family, &index, format, output.as_deref()),
        Command::Bounds {
            bound,
            index,
            input,
            seed,
            n,
            output,
        } => cmd_bounds(bound, &index, input.as_deref(), seed, n, output.as_deref()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("--input {}: {e}", path.display())))?;
    Ok(parse_edge_list(&text)?)
}

fn emit(output: Option<&Path>, text: &str) -> CliResult {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("--output {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Compute(format!("stdout: {e}")))
        }
    }
}

fn parse_indices(list: &str) -> CliResult<Vec<IndexKind>> {
    let mut out = Vec::new();
    for tok in list.split(',').filter(|t| !t.trim().is_empty()) {
        let kind: IndexKind = tok
            .parse()
            .map_err(|_| Failure::Usage(format!("--index: unknown index {tok:?}")))?;
        if !out.contains(&kind) {
            out.push(kind);
        }
    }
    if out.is_empty() {
        return Err(Failure::Usage("--index: no index given".into()));
    }
    Ok(out)
}

fn cmd_compute(index: &str, input: &Path) -> CliResult {
    let kinds = parse_indices(index)?;
    let g = read_graph(input)?;
    let mut obj = Map::new();
    for kind in kinds {
        let value = match kind {
            IndexKind::Wiener => abcgg::wiener(&g).map(Value::from),
            _ => compute::<f64>(&g, kind).map(Value::from),
        };
        let value = value.unwrap_or_else(|e| json!({ "error": e.to_string() }));
        obj.insert(kind.key().to_string(), value);
    }
    emit(None, &format!("{}\n", Value::Object(obj)))
}

fn parse_family(name: &str) -> CliResult<Family> {
    name.parse()
        .map_err(|_| Failure::Usage(format!("--family: unknown family {name:?}")))
}

fn single(range: Option<&ParamRange>, flag: &str) -> CliResult<Option<usize>> {
    match range {
        None => Ok(None),
        Some(r) => r
            .single()
            .map(Some)
            .ok_or_else(|| Failure::Usage(format!("--{flag}: generate takes a single value"))),
    }
}

fn cmd_generate(args: &FamilyArgs, output: Option<&Path>) -> CliResult {
    let family = parse_family(&args.family)?;
    let params = Params {
        m: single(args.m.as_ref(), "m")?,
        n: single(args.n.as_ref(), "n")?,
        q: single(args.q.as_ref(), "q")?,
        h: single(args.h.as_ref(), "h")?,
        k: single(args.k.as_ref(), "k")?,
    };
    let spec = family
        .with_params(&params)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let g = generate(&spec)?;
    let text = format!("# {spec}\n{}", serialize_edge_list(&g));
    emit(output, &text)
}

fn cmd_verify(args: &FamilyArgs, index: &str, format: Format, output: Option<&Path>) -> CliResult {
    let families = if args.family.eq_ignore_ascii_case("all") {
        Family::ALL.to_vec()
    } else {
        vec![parse_family(&args.family)?]
    };
    let kinds = if index.eq_ignore_ascii_case("all") {
        vec![IndexKind::Abc, IndexKind::AbcGg]
    } else {
        parse_indices(index)?
    };
    let mut report = VerificationReport::default();
    for family in families {
        let grid = if args.m.is_none() && args.n.is_none() && args.q.is_none() && args.h.is_none() && args.k.is_none() {
            default_grid(family)
        } else {
            family_grid(family, args).map_err(Failure::Usage)?
        };
        for &kind in &kinds {
            report.merge(verify_family(family, kind, &grid)?);
        }
        report.merge(census_check(family, &grid)?);
    }
    let text = match format {
        Format::Json => report_json(&report) + "\n",
        Format::Csv => report_csv(&report)?,
    };
    emit(output, &text)
}

fn report_value<T: serde::Serialize>(r: Result<BoundReport<f64>, Error>, target: T) -> Value {
    match r {
        Ok(rep) => json!({ "target": target, "report": rep }),
        Err(e) => json!({ "target": target, "not_applicable": e.to_string() }),
    }
}

fn cmd_bounds(
    bound: BoundName,
    index: &str,
    input: Option<&Path>,
    seed: u64,
    count: usize,
    output: Option<&Path>,
) -> CliResult {
    let kind = match parse_indices(index)?.as_slice() {
        [k @ (IndexKind::Abc | IndexKind::AbcGg)] => *k,
        _ => return Err(Failure::Usage("--index: bounds take exactly one of abc, abc_gg".into())),
    };
    let mut lines = Vec::new();
    let deletion = matches!(bound, BoundName::EdgeDeletion | BoundName::VertexDeletion);
    let graphs: Vec<Graph> = match input {
        Some(path) if deletion => vec![read_graph(path)?],
        Some(_) => {
            return Err(Failure::Usage(
                "--input is only accepted by edge-deletion and vertex-deletion".into(),
            ))
        }
        None => Vec::new(),
    };
    let mut r = rng(seed);
    if deletion {
        let graphs = if graphs.is_empty() {
            (0..count).map(|_| any_connected(&mut r, 4..=12)).collect()
        } else {
            graphs
        };
        for g in &graphs {
            if bound == BoundName::EdgeDeletion {
                for &e in g.edges() {
                    lines.push(report_value(bounds::edge_deletion_bound(g, e, kind), [e.0, e.1]));
                }
            } else {
                for v in 0..g.num_vertices() {
                    lines.push(report_value(bounds::vertex_deletion_bound(g, v, kind), v));
                }
            }
        }
    } else {
        for _ in 0..count {
            let min_parts = if bound == BoundName::Circuit { 3 } else { 2 };
            let k = r.gen_range(min_parts..=5);
            let parts: Vec<Anchored> = (0..k).map(|_| anchored_part(&mut r, 2..=6)).collect();
            let sizes: Vec<usize> = parts.iter().map(|p| p.graph.num_vertices()).collect();
            let result = match bound {
                BoundName::Link => bounds::link_bound(&parts, kind),
                BoundName::LinkGg => bounds::link_gg_counting_bound(&parts),
                BoundName::Chain => bounds::chain_gg_bound(&parts),
                BoundName::Bouquet => bounds::bouquet_gg_bound(&parts),
                BoundName::Circuit => bounds::circuit_bounds(&parts, kind),
                _ => unreachable!("deletion handled above"),
            };
            lines.push(report_value(result, sizes));
        }
    }
    let text: String = lines.iter().map(|v| format!("{v}\n")).collect();
    emit(output, &text)
}
