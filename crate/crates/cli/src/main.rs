//! `kecrit`: analyze graphs, verify the structural results over corpora,
//! generate corpora and write the example fixtures.
//!
//! Exit codes: 0 success, 1 a check reported a VIOLATION (or the engines
//! disagreed), 2 usage, input or limit error.

mod io;
mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kecrit_core::fixtures::Fixture;
use kecrit_core::format::{to_graph6, Format};
use kecrit_core::generate::{all_graphs, generate, GraphKind};
use kecrit_core::report::{analyze, AnalysisConfig, Engine};
use kecrit_core::suite::{SuiteConfig, DEFAULT_SEED};
use kecrit_core::Error;

use crate::io::{load_graphs, oracle_cap, write_output};
use crate::verify::Corpus;

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn from_core(e: Error) -> Self {
        let code = if matches!(e, Error::EngineMismatch { .. }) { 1 } else { 2 };
        Self { code, message: e.to_string() }
    }

    pub fn context(mut self, what: &str) -> Self {
        self.message = format!("{what}: {}", self.message);
        self
    }
}

#[derive(Parser)]
#[command(name = "kecrit", version, about = "Critical independent sets and König-Egerváry structure of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full invariant report of each input graph.
    Analyze(AnalyzeArgs),
    /// Run every structural check over a corpus; exits 1 on any VIOLATION.
    Verify(VerifyArgs),
    /// Write a corpus of graph6 lines.
    Gen(GenArgs),
    /// Write the example graphs as edge lists plus fixtures.g6.
    Fixtures(FixturesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    G6,
    Edges,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::G6 => Format::Graph6,
            FormatArg::Edges => Format::EdgeList,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Oracle,
    Poly,
    Both,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Oracle => Engine::Oracle,
            EngineArg::Poly => Engine::Poly,
            EngineArg::Both => Engine::Both,
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input file, or "-" for stdin.
    input: String,
    /// Input format; inferred from the extension or content when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[arg(long, value_enum, default_value = "both")]
    engine: EngineArg,
    #[arg(long)]
    json: bool,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Every labelled graph on exactly K vertices (K <= 7).
    #[arg(long = "all-n", value_name = "K", conflicts_with = "corpus")]
    all_n: Option<usize>,
    /// Corpus file (graph6 lines or one edge list), or "-" for stdin.
    #[arg(long, value_name = "PATH")]
    corpus: Option<String>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[arg(long)]
    json: bool,
    /// Include every per-graph report in the JSON output.
    #[arg(long)]
    per_graph: bool,
    /// Seed for sampled subfamilies.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Path,
    Cycle,
    Complete,
    #[value(name = "complete_bipartite", alias = "complete-bipartite")]
    CompleteBipartite,
    Gnp,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum, required_unless_present = "all_n")]
    kind: Option<KindArg>,
    /// Every labelled graph on exactly K vertices (K <= 7).
    #[arg(long = "all-n", value_name = "K", conflicts_with = "kind")]
    all_n: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Number of graphs; graph i of a G(n, p) corpus uses seed + i.
    #[arg(long, default_value_t = 1)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FixturesArgs {
    /// Target directory, created if missing.
    #[arg(default_value = ".")]
    dir: PathBuf,
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<u8, CliError> {
    let graphs = load_graphs(&args.input, args.format.map(Into::into))?;
    let cfg = AnalysisConfig { engine: args.engine.into(), max_oracle_n: oracle_cap()? };
    let reports = graphs
        .iter()
        .map(|g| analyze(g, &cfg).map_err(CliError::from_core))
        .collect::<Result<Vec<_>, _>>()?;
    let content = if args.json {
        let json = match reports.as_slice() {
            [single] => serde_json::to_string_pretty(single),
            many => serde_json::to_string_pretty(many),
        };
        json.expect("reports serialize") + "\n"
    } else if reports.len() == 1 {
        reports[0].to_text()
    } else {
        reports
            .iter()
            .enumerate()
            .map(|(i, r)| format!("# graph {i}\n{}", r.to_text()))
            .collect::<Vec<_>>()
            .join("\n")
    };
    write_output(args.output.as_deref(), &content)?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliError> {
    let corpus = match (args.all_n, &args.corpus) {
        (Some(k), None) => {
            all_graphs(k).map_err(CliError::from_core)?;
            Corpus::AllGraphs(k)
        }
        (None, Some(path)) => Corpus::Graphs(load_graphs(path, args.format.map(Into::into))?),
        _ => return Err(CliError::usage("verify needs exactly one of --all-n or --corpus")),
    };
    let cfg = SuiteConfig { seed: args.seed, max_n: oracle_cap()? };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return Err(CliError::usage("--jobs must be positive"));
        }
        pool = pool.num_threads(jobs);
    }
    let pool = pool.build().map_err(|e| CliError::usage(format!("thread pool: {e}")))?;
    let summary = pool.install(|| verify::verify(corpus, &cfg, args.per_graph))?;
    let content = if args.json {
        serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n"
    } else {
        summary.to_text()
    };
    write_output(args.output.as_deref(), &content)?;
    Ok(if summary.graphs_with_violations > 0 { 1 } else { 0 })
}

fn require<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::usage(format!("{kind} needs --{flag}")))
}

fn cmd_gen(args: GenArgs) -> Result<u8, CliError> {
    let mut lines = Vec::new();
    if let Some(k) = args.all_n {
        lines.extend(all_graphs(k).map_err(CliError::from_core)?.map(|g| to_graph6(&g)));
    } else {
        let kind = match args.kind.expect("clap requires kind without --all-n") {
            KindArg::Path => GraphKind::Path { n: require(args.n, "n", "path")? },
            KindArg::Cycle => GraphKind::Cycle { n: require(args.n, "n", "cycle")? },
            KindArg::Complete => GraphKind::Complete { n: require(args.n, "n", "complete")? },
            KindArg::CompleteBipartite => GraphKind::CompleteBipartite {
                a: require(args.a, "a", "complete_bipartite")?,
                b: require(args.b, "b", "complete_bipartite")?,
            },
            KindArg::Gnp => GraphKind::Gnp { n: require(args.n, "n", "gnp")?, p: require(args.p, "p", "gnp")? },
        };
        for i in 0..args.count {
            let g = generate(&kind, args.seed.wrapping_add(i)).map_err(CliError::from_core)?;
            lines.push(to_graph6(&g));
        }
    }
    let mut content = lines.join("\n");
    if !content.is_empty() {
        content.push('\n');
    }
    write_output(args.output.as_deref(), &content)?;
    Ok(0)
}

fn cmd_fixtures(args: FixturesArgs) -> Result<u8, CliError> {
    let io_err = |what: &PathBuf, e: std::io::Error| CliError::usage(format!("{}: {e}", what.display()));
    fs::create_dir_all(&args.dir).map_err(|e| io_err(&args.dir, e))?;
    let mut corpus = String::new();
    for f in Fixture::FILES {
        let path = args.dir.join(f.file_name());
        fs::write(&path, f.source()).map_err(|e| io_err(&path, e))?;
        println!("{}", path.display());
        corpus.push_str(&to_graph6(&f.graph()));
        corpus.push('\n');
    }
    let path = args.dir.join("fixtures.g6");
    fs::write(&path, corpus).map_err(|e| io_err(&path, e))?;
    println!("{}", path.display());
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Fixtures(a) => cmd_fixtures(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("kecrit: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
