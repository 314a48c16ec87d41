use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use norphism_cli::{run_command, Command, Options, ProblemFile, Suite};
use norphism_core::Side;

/// Design problems, norphisms, and lower-bound propagation.
#[derive(Parser, Debug)]
#[command(name = "norphism", version)]
struct Cli {
    /// Problem file (JSON).
    #[arg(long, global = true)]
    problem: Option<PathBuf>,
    /// Map Boolean answers to exit status 0 (true) / 1 (false).
    #[arg(long, global = true)]
    exit_status: bool,
    /// Cell cap for design-problem enumeration.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Edge cap for materialized paths.
    #[arg(long, global = true)]
    path_cap: Option<usize>,
    /// Seed for the randomized parts of `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Pre,
    Post,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Pre => Side::Pre,
            SideArg::Post => Side::Post,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Axioms,
    Equivariance,
    Expansiveness,
    All,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Compose two design problems.
    Compose { d: String, e: String },
    /// Whether demand `f` is feasible through `d` with resources `r`.
    Feasible { f: String, d: String, r: String },
    /// Whether norphism `n` bans design problem `m`.
    BanCheck { n: String, m: String },
    /// Propagate a norphism through an attached design problem.
    Propagate {
        n: String,
        attach: String,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Build a norphism from a schema.
    Schema {
        #[command(subcommand)]
        kind: SchemaCmd,
    },
    /// Propagate a lower bound through a path given as comma-separated nodes.
    BoundPropagate {
        bound: String,
        attach: String,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// A* search using lower bounds as the heuristic.
    Astar {
        graph: String,
        from: String,
        to: String,
        #[arg(long, num_args = 0..)]
        bounds: Vec<String>,
    },
    /// Run the verification suites on the problem file.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
    /// Graphviz rendering of a poset, dp, norphism, or graph.
    ExportDot { entity: String },
    /// Print the file in canonical form.
    Canonicalize,
}

#[derive(Subcommand, Debug)]
enum SchemaCmd {
    /// Resource-limit schema over the named pools.
    ResourceLimit {
        #[arg(required = true)]
        pools: Vec<String>,
    },
}

fn command(cmd: Cmd) -> Command {
    match cmd {
        Cmd::Compose { d, e } => Command::Compose { d, e },
        Cmd::Feasible { f, d, r } => Command::Feasible { f, d, r },
        Cmd::BanCheck { n, m } => Command::BanCheck { n, m },
        Cmd::Propagate { n, attach, side } => Command::Propagate {
            n,
            attach,
            side: side.into(),
        },
        Cmd::Schema {
            kind: SchemaCmd::ResourceLimit { pools },
        } => Command::ResourceLimit { pools },
        Cmd::BoundPropagate { bound, attach, side } => Command::BoundPropagate {
            bound,
            attach: attach.split(',').map(|s| s.trim().to_owned()).collect(),
            side: side.into(),
        },
        Cmd::Astar { graph, from, to, bounds } => Command::Astar { graph, from, to, bounds },
        Cmd::Verify { suite } => Command::Verify {
            suite: match suite {
                SuiteArg::Axioms => Suite::Axioms,
                SuiteArg::Equivariance => Suite::Equivariance,
                SuiteArg::Expansiveness => Suite::Expansiveness,
                SuiteArg::All => Suite::All,
            },
        },
        Cmd::ExportDot { entity } => Command::ExportDot { entity },
        Cmd::Canonicalize => Command::Canonicalize,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Some(path) = cli.problem else {
        eprintln!("error: --problem FILE is required");
        return ExitCode::from(2);
    };
    let file = match ProblemFile::load(&path) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let defaults = Options::default();
    let opts = Options {
        cap: cli.cap.unwrap_or(defaults.cap),
        path_cap: cli.path_cap.unwrap_or(defaults.path_cap),
        seed: cli.seed,
    };
    match run_command(&file, &command(cli.command), &opts) {
        Ok(out) => {
            print!("{}", out.to_json());
            for d in &out.diagnostics {
                eprintln!("note: {d}");
            }
            match (cli.exit_status, out.answer) {
                (true, Some(false)) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
