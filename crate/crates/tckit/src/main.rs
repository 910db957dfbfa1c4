use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tckit::battery::BatteryConfig;
use tckit::commands::{self, Format};

#[derive(Parser)]
#[command(name = "tckit", version, about = "Tree-cut decompositions, edge-tangles and immersions on small multigraphs")]
struct Cli {
    #[arg(long, value_enum, default_value = "human", env = "TCKIT_FORMAT", global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Human,
    Machine,
}

#[derive(Args)]
struct Bounds {
    #[arg(long, default_value_t = 4, env = "TCKIT_MAX_VERTICES")]
    max_vertices: usize,
    #[arg(long, default_value_t = 6, env = "TCKIT_MAX_EDGES")]
    max_edges: usize,
    /// Loops allowed per vertex.
    #[arg(long, default_value_t = 3, env = "TCKIT_LOOPS")]
    loops: usize,
    /// Parallel edges allowed per vertex pair.
    #[arg(long, default_value_t = 3, env = "TCKIT_PARALLEL_CAP")]
    parallel_cap: usize,
    /// Seed for the sampled properties.
    #[arg(long, default_value_t = 0, env = "TCKIT_SEED")]
    seed: u64,
}

impl Bounds {
    fn config(&self) -> BatteryConfig {
        BatteryConfig {
            max_vertices: self.max_vertices,
            max_edges: self.max_edges,
            loop_cap: self.loops,
            parallel_cap: self.parallel_cap,
            seed: self.seed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Torso-width, carving width, tree-cut width and largest tangle order,
    /// with the duality verdicts.
    Width {
        graph: PathBuf,
        /// Also report whether the graph is ξ-nice.
        #[arg(long, env = "TCKIT_XI")]
        xi: Option<usize>,
    },
    /// Write a θ-smooth decomposition.
    Smooth {
        graph: PathBuf,
        #[arg(long, default_value_t = 2, env = "TCKIT_THETA")]
        theta: usize,
        /// Starting decomposition (default: a single bag).
        #[arg(long)]
        start: Option<PathBuf>,
        /// Drop empty leaves and empty degree-2 nodes after each split.
        #[arg(long)]
        prune: bool,
        /// Write the decomposition here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Search for an immersion of H in G.
    Immerse { g: PathBuf, h: PathBuf },
    /// Run the property battery over the census.
    VerifyAll {
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Count immersion-free census graphs per edge count.
    CensusCount {
        h: PathBuf,
        /// Required edge-connectivity of blocks (default: max degree of H).
        #[arg(long)]
        degree: Option<usize>,
        #[command(flatten)]
        bounds: Bounds,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutputFormat::Human => Format::Human,
        OutputFormat::Machine => Format::Machine,
    };
    let mut output_path = None;
    let result = match &cli.command {
        Command::Width { graph, xi } => commands::width(graph, *xi, format),
        Command::Smooth { graph, theta, start, prune, output } => {
            output_path = output.clone();
            commands::smooth(graph, start.as_deref(), *theta, *prune)
        }
        Command::Immerse { g, h } => commands::immerse(g, h),
        Command::VerifyAll { bounds } => commands::verify_all(&bounds.config(), format),
        Command::CensusCount { h, degree, bounds } => commands::census_count(h, *degree, &bounds.config()),
    };
    match result {
        Ok(out) => {
            match output_path {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, &out.stdout) {
                        eprintln!("error: {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                    for l in out.stdout.lines().filter(|l| l.starts_with('#')) {
                        println!("{}", l.trim_start_matches("# "));
                    }
                }
                None => print!("{}", out.stdout),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
