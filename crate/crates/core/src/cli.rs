//! The `ntd` command line.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or help/version output |
//! | 1 | usage error: bad flags or parameters |
//! | 2 | an input file could not be read or parsed |
//! | 3 | a precondition failed: wrong graph class, isolated vertex, too large, not a certificate |
//! | 4 | internal error |
//! | 5 | `verify` ran and the certificate failed the check |

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::approx::{self, Augment};
use crate::error::{Error, Result};
use crate::generate::GenKind;
use crate::graph::{Graph, VertexSet};
use crate::io::{self, ResultDocument};
use crate::oracle::{self, OracleOptions};
use crate::pig;
use crate::reductions::gadget::{self, GadgetContract, GadgetSpec};
use crate::reductions::ReductionKind;
use crate::verify::{self, Kind};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;
pub const EXIT_REJECTED: i32 = 5;

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BadParams(_) => EXIT_USAGE,
        Error::Parse { .. } | Error::Io(_) | Error::IndexOutOfRange { .. } | Error::SelfLoop(_) | Error::DuplicateEdge(..) => {
            EXIT_PARSE
        }
        Error::EmptySet
        | Error::IsolatedVertexInInput(_)
        | Error::TooLarge { .. }
        | Error::Infeasible
        | Error::NotPendant(_)
        | Error::NotProperInterval
        | Error::Disconnected
        | Error::TooSmall { .. }
        | Error::NotNtd(_)
        | Error::NotDominating(_)
        | Error::DegreeTooHigh { .. } => EXIT_PRECONDITION,
        Error::NoConformingGadget(_) | Error::ChainViolated { .. } | Error::Internal(_) => EXIT_INTERNAL,
    }
}

#[derive(Parser, Debug)]
#[command(name = "ntd", version, about = "Neighborhood total domination toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph as an edge list.
    Gen {
        #[command(subcommand)]
        kind: GenCommand,
        /// Write to this file instead of stdout.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Compute a set and print a result document.
    Solve {
        #[arg(long, value_enum)]
        algo: Algo,
        input: PathBuf,
        /// Condition to optimize (exact only).
        #[arg(long, default_value = "ntd")]
        kind: Kind,
        /// Comma-separated 1-based vertices the set must contain (exact only).
        #[arg(long, value_delimiter = ',')]
        require: Vec<usize>,
        /// Print the solver trace to stderr (pig only).
        #[arg(long)]
        trace: bool,
        /// Vertex limit of the exhaustive search.
        #[arg(long, default_value_t = 24)]
        limit: usize,
        /// Use the literal augmentation rule (approx only).
        #[arg(long)]
        strict: bool,
    },
    /// Check a certificate against a graph.
    Verify {
        input: PathBuf,
        /// Result document or list of 1-based ids.
        certificate: PathBuf,
        #[arg(long, default_value = "ntd")]
        kind: Kind,
    },
    /// Build a reduction; writes the graph and a `.prov` sidecar.
    Reduce {
        #[arg(long)]
        kind: ReductionKind,
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Map a certificate of a reduction output back to the source graph.
    Extract {
        #[arg(long)]
        kind: ReductionKind,
        /// The source graph the reduction was built from.
        #[arg(long)]
        source: PathBuf,
        /// NTD-set of the reduction output.
        certificate: PathBuf,
    },
    /// Time the proper-interval solver across sizes and fit a line.
    Bench {
        #[arg(long, value_enum, default_value = "pig")]
        algo: BenchAlgo,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
    /// Search for the degree-3 construction gadgets.
    GadgetSearch {
        #[arg(long, value_enum, default_value = "all")]
        which: WhichGadget,
    },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    Complete { n: usize },
    RandomGnp { n: usize, p: f64, seed: u64 },
    RandomPig { n: usize, density: f64, seed: u64 },
    RandomSubcubic { n: usize, seed: u64 },
}

impl From<&GenCommand> for GenKind {
    fn from(cmd: &GenCommand) -> GenKind {
        match *cmd {
            GenCommand::Path { n } => GenKind::Path(n),
            GenCommand::Cycle { n } => GenKind::Cycle(n),
            GenCommand::Star { n } => GenKind::Star(n),
            GenCommand::Complete { n } => GenKind::Complete(n),
            GenCommand::RandomGnp { n, p, seed } => GenKind::RandomGnp { n, p, seed },
            GenCommand::RandomPig { n, density, seed } => GenKind::RandomPig { n, density, seed },
            GenCommand::RandomSubcubic { n, seed } => GenKind::RandomSubcubic { n, seed },
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algo {
    Exact,
    Pig,
    Approx,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BenchAlgo {
    Pig,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WhichGadget {
    Attachment,
    Split,
    All,
}

/// Runs the command line with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
        }
    };
    match dispatch(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_text(path: &Path) -> Result<String> {
    String::from_utf8(read(path)?).map_err(|_| Error::Io(format!("{}: not UTF-8", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(Error::from)
}

fn dispatch(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Gen { kind, output } => {
            let graph = GenKind::from(kind).generate()?;
            let text = io::serialize_graph(&graph);
            match output {
                Some(path) => write_file(path, &text)?,
                None => emit(out, &text)?,
            }
            Ok(0)
        }
        Command::Solve {
            algo,
            input,
            kind,
            require,
            trace,
            limit,
            strict,
        } => {
            let bytes = read(input)?;
            let graph = io::parse_graph(std::str::from_utf8(&bytes).map_err(|_| Error::Io("input is not UTF-8".into()))?)?;
            let start = Instant::now();
            let (name, set, check_kind) = match algo {
                Algo::Exact => {
                    let required = VertexSet::try_from_iter(graph.n(), require.iter().map(|&v| v.wrapping_sub(1)))
                        .map_err(|_| Error::BadParams("--require ids must lie in 1..=n".into()))?;
                    let options = OracleOptions::with_limit(*limit);
                    let (_, set) = oracle::exact_min_with_required(&graph, *kind, &required, &options)?;
                    ("exact", set, *kind)
                }
                Algo::Pig => {
                    let set = if graph.is_connected() {
                        let (set, steps) = pig::mntds_pig(&graph)?;
                        if *trace {
                            emit(err, &steps.to_string())?;
                        }
                        set
                    } else {
                        pig::mntds_pig_components(&graph)?
                    };
                    ("pig", set, Kind::Ntd)
                }
                Algo::Approx => {
                    let mode = if *strict { Augment::Literal } else { Augment::Covering };
                    let set = per_component(&graph, |g| Ok(approx::approx_ntds_with(g, mode)?.set))?;
                    ("approx", set, Kind::Ntd)
                }
            };
            let seconds = start.elapsed().as_secs_f64();
            let report = verify::check(&graph, &set, check_kind)?;
            let doc = ResultDocument::new(name, &bytes, &set, &report, seconds);
            emit(out, &doc.to_json())?;
            Ok(0)
        }
        Command::Verify {
            input,
            certificate,
            kind,
        } => {
            let graph = io::parse_graph(&read_text(input)?)?;
            let set = io::parse_certificate(&read_text(certificate)?, graph.n())?;
            let report = verify::check(&graph, &set, *kind)?;
            let status = io::VerifyStatus::from(&report);
            emit(out, &(serde_json::to_string(&status).expect("status serializes") + "\n"))?;
            Ok(if report.pass { 0 } else { EXIT_REJECTED })
        }
        Command::Reduce { kind, input, output } => {
            let source = io::parse_graph(&read_text(input)?)?;
            let artifact = kind.build(&source)?;
            write_file(output, &io::serialize_graph(&artifact.output))?;
            let mut sidecar = output.clone().into_os_string();
            sidecar.push(".prov");
            write_file(Path::new(&sidecar), &artifact.sidecar())?;
            let summary = ReduceSummary {
                kind: kind.name(),
                source_n: source.n(),
                output_n: artifact.output.n(),
                output_m: artifact.output.m(),
                relation: artifact.relation.to_string(),
            };
            emit(out, &(serde_json::to_string(&summary).expect("summary serializes") + "\n"))?;
            Ok(0)
        }
        Command::Extract {
            kind,
            source,
            certificate,
        } => {
            let source_bytes = read(source)?;
            let graph = io::parse_graph(&String::from_utf8_lossy(&source_bytes))?;
            let artifact = kind.build(&graph)?;
            let cert = io::parse_certificate(&read_text(certificate)?, artifact.output.n())?;
            let start = Instant::now();
            let set = kind.extract(&artifact, &cert)?;
            let seconds = start.elapsed().as_secs_f64();
            let report = verify::is_dominating(&graph, &set)?;
            let name = format!("extract-{}", kind.name());
            let doc = ResultDocument::new(&name, &source_bytes, &set, &report, seconds);
            emit(out, &doc.to_json())?;
            Ok(0)
        }
        Command::Bench {
            algo: BenchAlgo::Pig,
            sizes,
            seed,
            density,
            repeats,
        } => {
            let mut samples = Vec::new();
            emit(out, "n\tm\tseconds\tsize\n")?;
            for &n in sizes {
                let s = pig::mntds_pig_linear_bench(n, *density, *seed, *repeats)?;
                emit(out, &format!("{}\t{}\t{:.6}\t{}\n", s.n, s.m, s.seconds, s.solution_size))?;
                samples.push(s);
            }
            let points: Vec<(f64, f64)> = samples.iter().map(|s| ((s.n + s.m) as f64, s.seconds)).collect();
            if let Some(fit) = pig::fit_linear_relative(&points) {
                emit(
                    out,
                    &format!(
                        "# fit seconds = {:.3e} * (n+m) + {:.3e}; max relative residual {:.3}\n",
                        fit.slope,
                        fit.intercept,
                        fit.max_relative_residual()
                    ),
                )?;
                let residuals: Vec<String> = fit.relative_residuals.iter().map(|r| format!("{r:.3}")).collect();
                emit(out, &format!("# residuals {}\n", residuals.join(" ")))?;
            }
            if let Some(fit) = pig::fit_linear(&points) {
                emit(out, &format!("# ordinary least squares: max relative residual {:.3}\n", fit.max_relative_residual()))?;
            }
            Ok(0)
        }
        Command::GadgetSearch { which } => {
            let contracts = match which {
                WhichGadget::Attachment => vec![(GadgetContract::attachment(), GadgetSpec::attachment())],
                WhichGadget::Split => vec![(GadgetContract::split(), GadgetSpec::split())],
                WhichGadget::All => vec![
                    (GadgetContract::attachment(), GadgetSpec::attachment()),
                    (GadgetContract::split(), GadgetSpec::split()),
                ],
            };
            for (contract, canonical) in contracts {
                let found = gadget::gadget_search(&contract)?;
                let edges: Vec<String> = found.edge_names().iter().map(|(a, b)| format!("{a}-{b}")).collect();
                emit(
                    out,
                    &format!(
                        "{}: {} edges: {}{}\n",
                        contract.name,
                        found.edges.len(),
                        edges.join(" "),
                        if found == canonical { " (canonical)" } else { "" }
                    ),
                )?;
            }
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct ReduceSummary {
    kind: &'static str,
    source_n: usize,
    output_n: usize,
    output_m: usize,
    relation: String,
}

/// Applies `solve` to every component and merges the answers.
pub fn per_component(graph: &Graph, solve: impl Fn(&Graph) -> Result<VertexSet>) -> Result<VertexSet> {
    if let Some(v) = graph.isolated_vertex() {
        return Err(Error::IsolatedVertexInInput(v));
    }
    let mut result = VertexSet::new(graph.n());
    for component in graph.components() {
        let members = VertexSet::from_iter(graph.n(), component.iter().copied());
        let (sub, _) = graph.induced_subgraph(&members)?;
        for v in solve(&sub)?.iter() {
            result.insert(component[v]);
        }
    }
    Ok(result)
}
