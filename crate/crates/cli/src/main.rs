mod commands;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use planar_turan::patterns::PatternSpec;

use commands::{CliError, Report};

const PATTERN_HELP: &str = "Forbidden pattern: wheel:K, star:T, fan:T,R, conepath:T, \
cone:<graph6 of a linear forest> or g6:<graph6>";

/// Planar Turán numbers: constructions, exhaustive search and closed forms.
#[derive(Parser, Debug)]
#[command(name = "planar-turan", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Census and witness cache directory. Defaults to $PLANAR_TURAN_CACHE,
    /// then ./.planar-turan-cache.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Allow the 13- and 14-vertex censuses.
    #[arg(long, global = true)]
    expensive: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named family member and print it.
    Construct {
        /// Family or witness name, e.g. two-apex-cycle, star-ring, j-c-prime.
        #[arg(long)]
        family: String,
        /// Comma-separated integer parameters.
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::G6)]
        out: GraphFormat,
    },
    /// Decide whether a graph is free of a pattern. Exit 1 when it is not.
    Check {
        #[arg(long, help = PATTERN_HELP)]
        pattern: PatternSpec,
        /// graph6 string, or @FILE to read the first line of FILE.
        #[arg(long)]
        graph: String,
    },
    /// Generate the triangulation census on n vertices and store it in the cache.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Also write the census as graph6 lines to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive ex_P(n, H) over the census. Exit 3 when the budget runs out.
    Exact {
        #[arg(long)]
        n: usize,
        #[arg(long, help = PATTERN_HELP)]
        pattern: PatternSpec,
        /// Deepest number of deleted edges to try.
        #[arg(long)]
        budget: Option<usize>,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        /// Also print an extremal graph.
        #[arg(long)]
        witness: bool,
    },
    /// Closed-form value or bounds for ex_P(n, H).
    Formula {
        #[arg(long, help = PATTERN_HELP)]
        pattern: PatternSpec,
        #[arg(long)]
        n: usize,
    },
    /// Published upper bound for c4, c5, theta4, theta5, c6 or p9.
    Reference {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        n: usize,
    },
    /// Test the sufficient conditions for ex_P(n, H) = 3n - 6. Exit 1 when
    /// none applies.
    Classify {
        /// graph6 string, or @FILE.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        n: usize,
        /// Build the certifying triangulation and check it is H-free.
        #[arg(long)]
        verify: bool,
    },
    /// Re-run the checks behind one result and print a pass/fail table.
    VerifyTheorem {
        #[arg(long, value_enum)]
        id: verify::TheoremId,
        /// Largest host order used by the exhaustive checks.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    G6,
    Dot,
}

fn main() -> ExitCode {
    let wants_json = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if wants_json && e.use_stderr() {
                let err = CliError::Usage(e.to_string().trim().to_string());
                println!("{}", pretty(&err.to_json()));
                return ExitCode::from(2);
            }
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("cannot configure {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(Report { text, json, code }) => {
            if cli.json {
                println!("{}", pretty(&json));
            } else {
                print!("{text}");
            }
            ExitCode::from(code)
        }
        Err(err) => {
            if cli.json {
                println!("{}", pretty(&err.to_json()));
            } else {
                eprintln!("error: {err}");
            }
            ExitCode::from(err.code())
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}
