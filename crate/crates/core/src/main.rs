use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use thinpos::driver::restart_rng;
use thinpos::error::IoError;
use thinpos::ingest::{knn_similarity_graph, load_edge_list, load_points, write_edge_list};
use thinpos::oracle::DEFAULT_LIMIT;
use thinpos::{
    generate, is_pinch_cluster_fast, run_multistart, Error, Graph, Oracle, Ordering, RunConfig,
    Thinner, VertexSet,
};

#[derive(Parser)]
#[command(name = "thinpos", version, about = "Graph clustering by thin position")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Points,
}

#[derive(clap::Args)]
struct Input {
    /// Input file.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
    /// Neighbors per point (points format).
    #[arg(long, default_value_t = 10)]
    k: usize,
    /// Gaussian kernel width (points format).
    #[arg(long, default_value_t = 1.0)]
    sigma: f64,
    /// Comparison tolerance override.
    #[arg(long)]
    eps: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Multistart thinning; prints a summary and writes a JSON report.
    Cluster {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 32)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run the exact oracle on each cluster (at most 16 vertices).
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        max_steps: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Thin one random ordering and print the width trajectory.
    Thin {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check whether a vertex set is a pinch cluster.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertex labels.
        #[arg(long, value_delimiter = ',')]
        set: Vec<String>,
    },
    /// Write a synthetic graph as an edge list.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Barbell {
        #[arg(long, default_value_t = 3)]
        m: usize,
    },
    Neck {
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        bridges: usize,
    },
    Chain {
        #[arg(long, default_value_t = 3)]
        t: usize,
    },
    Planted {
        #[arg(long, value_delimiter = ',', default_value = "10,10")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0.8)]
        p_in: f64,
        #[arg(long, default_value_t = 0.05)]
        p_out: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn open(path: &Path) -> Result<BufReader<File>, Error> {
    Ok(BufReader::new(File::open(path).map_err(IoError::from)?))
}

fn load(input: &Input) -> Result<Graph, Error> {
    let g = match input.format {
        Format::Edgelist => load_edge_list(open(&input.input)?)?,
        Format::Points => {
            let pts = load_points(open(&input.input)?)?;
            knn_similarity_graph(&pts, input.k, input.sigma)?
        }
    };
    Ok(match input.eps {
        Some(eps) => g.with_tolerance(eps),
        None => g,
    })
}

fn fmt_widths(w: &[f64], limit: usize) -> String {
    let mut parts: Vec<String> = w.iter().take(limit).map(|x| format!("{x}")).collect();
    if w.len() > limit {
        parts.push("...".into());
    }
    format!("({})", parts.join(", "))
}

fn run(cli: Cli) -> Result<(), Error> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Cluster {
            input,
            restarts,
            seed,
            oracle,
            max_steps,
            output,
        } => {
            let g = load(&input)?;
            let cfg = RunConfig {
                restarts,
                seed,
                epsilon: input.eps,
                oracle,
                max_steps,
            };
            let report = run_multistart(&g, &cfg)?;
            write!(out, "{}", report.summary()).map_err(IoError::from)?;
            if let Some(path) = output {
                let mut f = BufWriter::new(File::create(path).map_err(IoError::from)?);
                writeln!(f, "{}", report.to_json()).map_err(IoError::from)?;
            }
        }
        Command::Thin { input, seed } => {
            let g = load(&input)?;
            let start = Ordering::random(g.n(), &mut restart_rng(seed, 0));
            let mut th = Thinner::new(&g, start)?;
            let show = |th: &Thinner| fmt_widths(&th.arrangement().profile().width_vector().0, 12);
            writeln!(out, "step 0: width {}", show(&th)).map_err(IoError::from)?;
            while let Some(mv) = th.step()? {
                writeln!(
                    out,
                    "step {}: {:?} k={} -> {} on max [{}, {}]; width {}",
                    th.steps(),
                    mv.case,
                    mv.k,
                    mv.target,
                    mv.flat.0,
                    mv.flat.1,
                    show(&th)
                )
                .map_err(IoError::from)?;
            }
            let done = th.finish();
            writeln!(out, "final width {}", fmt_widths(&done.width_vector().0, usize::MAX))
                .map_err(IoError::from)?;
            let order: Vec<String> = done.ordering.vertices().iter().map(|&v| g.label(v)).collect();
            writeln!(out, "ordering {}", order.join(" ")).map_err(IoError::from)?;
        }
        Command::Verify { input, set } => {
            let g = load(&input)?;
            let mut members = Vec::new();
            for name in &set {
                let v = (0..g.n())
                    .find(|&v| g.label(v) == *name)
                    .ok_or_else(|| IoError::Invalid(format!("unknown vertex '{name}'")))?;
                members.push(v);
            }
            let a = VertexSet::from_vertices(&g, members);
            writeln!(out, "boundary {}", a.boundary()).map_err(IoError::from)?;
            writeln!(out, "fast check {}", is_pinch_cluster_fast(&g, &a)).map_err(IoError::from)?;
            if g.n() <= DEFAULT_LIMIT {
                let r = Oracle::default().report(&g, &a)?;
                writeln!(out, "pinch convex {}", r.convex).map_err(IoError::from)?;
                writeln!(out, "pinch concave {}", r.concave).map_err(IoError::from)?;
                writeln!(out, "pinch cluster {}", r.is_pinch_cluster()).map_err(IoError::from)?;
                if let Some(w) = r.witness {
                    let seq: Vec<String> = w.sequence.iter().map(|&v| g.label(v)).collect();
                    writeln!(out, "witness {:?} {}", w.direction, seq.join(" "))
                        .map_err(IoError::from)?;
                }
            } else {
                writeln!(out, "exact oracle skipped (N > {DEFAULT_LIMIT})").map_err(IoError::from)?;
            }
        }
        Command::Gen { kind, output } => {
            let g = match kind {
                GenKind::Barbell { m } => generate::barbell(m)?,
                GenKind::Neck { m, bridges } => generate::neck(m, bridges)?,
                GenKind::Chain { t } => generate::triangle_chain(t)?,
                GenKind::Planted {
                    sizes,
                    p_in,
                    p_out,
                    seed,
                } => generate::planted(&sizes, p_in, p_out, seed)?,
            };
            match output {
                Some(path) => {
                    let f = BufWriter::new(File::create(path).map_err(IoError::from)?);
                    write_edge_list(&g, f)?;
                }
                None => write_edge_list(&g, &mut out)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
