use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use netentropy::core::metrics::{metric_report, MetricReport};
use netentropy::core::spectral::{
    check_eigenvalue_bounds, default_tolerance, system_entropy, BoundReport, DEFAULT_ALPHA,
};
use netentropy::core::{Error as GraphError, Family, GeneratorSpec};
use netentropy::experiments::{self, ExperimentConfig, Status};
use netentropy::io::{read_edge_list, write_edge_list};
use netentropy::{exit, Error};

#[derive(Parser)]
#[command(name = "netentropy", version, about = "Network models, topology metrics and system entropy")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Ring,
    Er,
    Ws,
    Nw,
    Ba,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Ring => Family::RingLattice,
            FamilyArg::Er => Family::ErdosRenyi,
            FamilyArg::Ws => Family::WattsStrogatz,
            FamilyArg::Nw => Family::NewmanWattsRewire,
            FamilyArg::Ba => Family::BarabasiAlbert,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a model graph and write it as an edge list.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n0: Option<usize>,
        #[arg(long, env = "NETENTROPY_SEED", default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print APL, clustering, diameter and degree distribution as JSON.
    Metrics {
        #[arg(long = "in")]
        input: PathBuf,
        /// Measure the largest connected component instead of failing on
        /// disconnected input.
        #[arg(long)]
        largest_component: bool,
    },
    /// Print the normalized-Laplacian spectrum and system entropy as JSON.
    Entropy {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ALPHA)]
        alpha: f64,
        /// Eigenvalue clamping tolerance; defaults to 1e-9 * n.
        #[arg(long)]
        tol: Option<f64>,
        /// Omit the eigenvalue list for graphs larger than this.
        #[arg(long, default_value_t = 1000)]
        max_eigenvalues: usize,
    },
    /// Run an experiment from a TOML config and write CSV + verdict.json.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Serialize)]
struct MetricsOutput {
    largest_component: bool,
    #[serde(flatten)]
    report: MetricReport,
}

#[derive(Serialize)]
struct EntropyOutput {
    n: usize,
    edge_count: usize,
    connected: bool,
    alpha: f64,
    entropy: f64,
    trace_alpha: f64,
    bipartite: bool,
    lambda_max: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    eigenvalues: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<BoundReport>,
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Error> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Generate {
            family,
            n,
            p,
            k,
            m,
            n0,
            seed,
            out,
        } => {
            let spec = GeneratorSpec {
                family: family.into(),
                n,
                p,
                k,
                m,
                n0,
                seed,
            };
            let g = spec.generate()?;
            match out {
                Some(path) => {
                    let file = File::create(&path).map_err(|e| Error::IoAt {
                        path: path.display().to_string(),
                        source: e,
                    })?;
                    write_edge_list(&g, BufWriter::new(file))?;
                }
                None => write_edge_list(&g, std::io::stdout().lock())?,
            }
            Ok(exit::SUCCESS)
        }
        Command::Metrics {
            input,
            largest_component,
        } => {
            let list = read_edge_list(&input)?;
            let g = if largest_component {
                list.graph.largest_component().0
            } else {
                list.graph
            };
            let report = metric_report(&g)?;
            print_json(&MetricsOutput {
                largest_component,
                report,
            })?;
            Ok(exit::SUCCESS)
        }
        Command::Entropy {
            input,
            alpha,
            tol,
            max_eigenvalues,
        } => {
            let list = read_edge_list(&input)?;
            let g = &list.graph;
            let tol = tol.unwrap_or_else(|| default_tolerance(g.n()));
            let summary = system_entropy(g, alpha, tol).map_err(|e| match e {
                GraphError::IsolatedVertex(v) => Error::IsolatedVertex(list.ids[v].clone()),
                other => Error::Graph(other),
            })?;
            let connected = g.is_connected();
            let bounds = if connected && g.n() >= 2 {
                Some(check_eigenvalue_bounds(&summary, g.n(), true, tol)?)
            } else {
                None
            };
            print_json(&EntropyOutput {
                n: g.n(),
                edge_count: g.edge_count(),
                connected,
                alpha: summary.alpha,
                entropy: summary.entropy,
                trace_alpha: summary.trace_alpha,
                bipartite: summary.bipartite,
                lambda_max: summary.lambda_max,
                eigenvalues: (g.n() <= max_eigenvalues).then_some(summary.eigenvalues),
                bounds,
            })?;
            Ok(exit::SUCCESS)
        }
        Command::Experiment { config, out_dir } => {
            let cfg = ExperimentConfig::load(&config)?;
            let result = experiments::run(&cfg)?;
            result.write_to_dir(&out_dir)?;
            eprintln!(
                "{}: {:?} ({})",
                result.experiment, result.verdict.status, result.verdict.claim
            );
            Ok(match result.verdict.status {
                Status::Pass => exit::SUCCESS,
                Status::Fail => exit::VERDICT_FAIL,
                Status::Inconclusive => exit::VERDICT_INCONCLUSIVE,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
