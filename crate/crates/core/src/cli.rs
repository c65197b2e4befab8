//! Command-line front end. Each subcommand reads one input, calls the
//! library and prints its result; nothing is written to standard output
//! unless the command succeeds.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::complex::{
    barycentric_subdivision, complex_to_graph, independence_complex, parse_facets, parse_presentation, write_facets,
    SimplicialComplex, DEFAULT_ISO_BUDGET,
};
use crate::graph::{
    enumerate_graphs, parse_graph6_lines, parse_graphs, write_edge_list, write_graph6, Graph, GraphFormat,
    MAX_ENUM_ORDER,
};
use crate::homology::{reduced_homology, TietzeBudget};
use crate::psi::{psi, psi_trace, PsiMemo};
use crate::verify::{
    is_chordal, pipeline_presentation, scan, write_report, write_summary, PipelineOptions, ScanOptions, ScanOutcome,
};

#[derive(Parser, Debug)]
#[command(
    name = "indcomplex",
    version,
    about = "Independence complexes, the psi bound and connectivity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print psi of each input graph.
    Psi {
        #[command(flatten)]
        input: GraphInput,
        /// Also print the derivation tree.
        #[arg(long)]
        trace: bool,
    },
    /// Facet file of the independence complex of a graph.
    Indcomp {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Facet file of the barycentric subdivision of a complex.
    Sd {
        /// Facet file; standard input when absent or `-`.
        input: Option<PathBuf>,
    },
    /// Edge list of the graph whose independence complex is the
    /// barycentric subdivision of the given complex.
    Encode { input: Option<PathBuf> },
    /// Reduced integral homology of a complex, one line per dimension.
    Homology { input: Option<PathBuf> },
    /// Check the psi lower bound on each input graph and print a TSV report.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check the psi lower bound on many graphs in parallel.
    Scan {
        /// graph6 file, one graph per line; ignored with --max-n or --n.
        input: Option<PathBuf>,
        /// Scan every graph on 1 to N vertices.
        #[arg(long, value_name = "N", conflicts_with = "n", value_parser = clap::value_parser!(u8).range(1..=MAX_ENUM_ORDER as i64))]
        max_n: Option<u8>,
        /// Scan every graph on exactly N vertices.
        #[arg(long, value_name = "N", value_parser = clap::value_parser!(u8).range(1..=MAX_ENUM_ORDER as i64))]
        n: Option<u8>,
        /// Keep only chordal graphs.
        #[arg(long)]
        chordal_only: bool,
        /// Report malformed graph6 lines and carry on instead of failing.
        #[arg(long)]
        skip_malformed: bool,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        workers: u16,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a group presentation through the complex and graph encodings.
    Present {
        /// Presentation file: `gens <g>` then one relator per line.
        input: Option<PathBuf>,
        #[arg(long, default_value_t = TietzeBudget::default().steps, value_parser = positive)]
        tietze_budget: usize,
        /// Skip psi when the 2-complex has more faces than this.
        #[arg(long, default_value_t = PipelineOptions::default().psi_face_ceiling)]
        face_ceiling: usize,
        #[arg(long, default_value_t = DEFAULT_ISO_BUDGET, value_parser = positive)]
        iso_budget: usize,
    },
    /// Print one graph6 line per isomorphism class of graphs on N vertices.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=MAX_ENUM_ORDER as i64))]
        n: u8,
    },
}

#[derive(Args, Debug)]
pub struct GraphInput {
    /// Graph file; standard input when absent or `-`.
    pub input: Option<PathBuf>,
    /// Input format; detected from the content when absent.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    /// Tietze simplification steps allowed per fundamental group.
    #[arg(long, default_value_t = TietzeBudget::default().steps, value_parser = positive)]
    pub tietze_budget: usize,
    /// Write PREFIX.tsv and PREFIX.summary.txt instead of printing the TSV.
    #[arg(long, value_name = "PREFIX")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Graph6,
    Edges,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// How a command ended, besides its output.
enum Outcome {
    Done(String),
    /// The psi lower bound failed somewhere; the message goes to standard
    /// error.
    Violation(String),
}

pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli.command) {
        Ok(Outcome::Done(text)) => {
            let mut stdout = io::stdout().lock();
            match stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Ok(Outcome::Violation(message)) => {
            eprintln!("BOUND VIOLATION: {message}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display())),
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("cannot read standard input")?;
            Ok(s)
        }
    }
}

fn read_graphs(input: &GraphInput) -> Result<Vec<Graph>> {
    let text = read_input(input.input.as_deref())?;
    let format = input.format.map(|f| match f {
        FormatArg::Graph6 => GraphFormat::Graph6,
        FormatArg::Edges => GraphFormat::EdgeList,
    });
    let graphs = parse_graphs(&text, format)?;
    if graphs.is_empty() {
        bail!("no graph in input");
    }
    Ok(graphs)
}

fn read_complex(path: Option<&Path>) -> Result<SimplicialComplex> {
    Ok(parse_facets(&read_input(path)?)?)
}

fn execute(command: Command) -> Result<Outcome> {
    let mut out = String::new();
    match command {
        Command::Psi { input, trace } => {
            let memo = PsiMemo::new();
            for g in read_graphs(&input)? {
                if trace {
                    // the root line of the tree reads "psi = <value> ..."
                    write!(out, "{}", psi_trace(&g))?;
                } else {
                    writeln!(out, "psi = {}", psi(&g, &memo))?;
                }
            }
        }
        Command::Indcomp { input } => {
            let graphs = read_graphs(&input)?;
            if graphs.len() != 1 {
                bail!("expected one graph, found {}", graphs.len());
            }
            out = write_facets(&independence_complex(&graphs[0]));
        }
        Command::Sd { input } => out = write_facets(&barycentric_subdivision(&read_complex(input.as_deref())?)),
        Command::Encode { input } => out = write_edge_list(&complex_to_graph(&read_complex(input.as_deref())?)),
        Command::Homology { input } => out = reduced_homology(&read_complex(input.as_deref())?).to_string(),
        Command::Verify { input, run } => {
            let graphs = read_graphs(&input)?;
            return run_scan(&graphs, 1, &run);
        }
        Command::Scan {
            input,
            max_n,
            n,
            chordal_only,
            skip_malformed,
            workers,
            run,
        } => {
            let mut graphs = match (max_n, n) {
                (Some(max), _) => {
                    let mut all = Vec::new();
                    for k in 1..=max as usize {
                        all.extend(enumerate_graphs(k)?);
                    }
                    all
                }
                (None, Some(k)) => enumerate_graphs(k as usize)?,
                (None, None) => read_graph6_stream(&read_input(input.as_deref())?, skip_malformed)?,
            };
            if chordal_only {
                graphs.retain(is_chordal);
            }
            return run_scan(&graphs, workers as usize, &run);
        }
        Command::Present {
            input,
            tietze_budget,
            face_ceiling,
            iso_budget,
        } => {
            let p = parse_presentation(&read_input(input.as_deref())?)?;
            let opts = PipelineOptions {
                psi_face_ceiling: face_ceiling,
                tietze: TietzeBudget {
                    steps: tietze_budget,
                    ..TietzeBudget::default()
                },
                iso_budget,
            };
            let report = pipeline_presentation(&p, opts);
            if report.isomorphic == Some(false) {
                bail!("the independence complex of the encoding graph is not isomorphic to the subdivision");
            }
            if report.contradicts_lower_bound() {
                return Ok(Outcome::Violation(format!(
                    "psi is positive but the complex is not simply connected\n{report}"
                )));
            }
            out = report.to_string();
        }
        Command::Enumerate { n } => {
            for g in enumerate_graphs(n as usize)? {
                writeln!(out, "{}", write_graph6(&g))?;
            }
        }
    }
    Ok(Outcome::Done(out))
}

fn read_graph6_stream(text: &str, skip_malformed: bool) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for item in parse_graph6_lines(text) {
        match item {
            Ok((_, g)) => graphs.push(g),
            Err(e) if skip_malformed => eprintln!("skipping {e}"),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(graphs)
}

fn run_scan(graphs: &[Graph], workers: usize, run: &RunArgs) -> Result<Outcome> {
    let opts = ScanOptions {
        workers,
        tietze: TietzeBudget {
            steps: run.tietze_budget,
            ..TietzeBudget::default()
        },
    };
    let (outcome, violation) = match scan(graphs, opts) {
        Ok(o) => (o, None),
        Err(v) => {
            let message = v.to_string();
            (*v.outcome, Some(message))
        }
    };
    let (tsv, summary) = render(&outcome)?;
    eprint!("{summary}");
    eprintln!(
        "wall time: {:.3}s, psi memo hit rate: {:.1}%",
        outcome.wall_time.as_secs_f64(),
        100.0 * outcome.memo_hit_rate
    );
    let stdout_text = match &run.out {
        Some(prefix) => {
            let tsv_path = with_suffix(prefix, ".tsv");
            let summary_path = with_suffix(prefix, ".summary.txt");
            fs::write(&tsv_path, &tsv).with_context(|| format!("cannot write {}", tsv_path.display()))?;
            fs::write(&summary_path, &summary).with_context(|| format!("cannot write {}", summary_path.display()))?;
            String::new()
        }
        None => tsv,
    };
    Ok(match violation {
        Some(message) => Outcome::Violation(message),
        None => Outcome::Done(stdout_text),
    })
}

fn render(outcome: &ScanOutcome) -> Result<(String, String)> {
    let mut tsv = Vec::new();
    write_report(&outcome.reports, &mut tsv)?;
    let mut summary = Vec::new();
    write_summary(&outcome.summary, &outcome.reports, &mut summary)?;
    Ok((String::from_utf8(tsv)?, String::from_utf8(summary)?))
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}
