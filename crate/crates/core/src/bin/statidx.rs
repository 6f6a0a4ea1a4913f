use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use status_indices::commands::{self, FamilyParams, ParamRange, Verdict, VerifyTarget, EXIT_INPUT};
use status_indices::families::DEFAULT_VERTEX_CAP;
use status_indices::verify::{Mode, DEFAULT_SEED};
use status_indices::Error;

#[derive(Parser)]
#[command(
    name = "statidx",
    version,
    about = "Status connectivity indices and co-indices of graphs"
)]
struct Cli {
    /// Worker threads for all-pairs BFS (results do not depend on it)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every index of an edge-list graph
    Compute {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write the canonical edge list of a family graph
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        max_vertices: usize,
    },
    /// Evaluate the closed forms of a family
    ClosedForm {
        #[command(flatten)]
        family: FamilyArgs,
        /// Report the published expressions instead of the corrected values
        #[arg(long)]
        as_printed: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        max_vertices: usize,
    },
    /// Check closed forms against generated graphs, or identities on a random corpus
    Verify {
        /// A family name, `grid` for the default grid, or `corpus` for random graphs
        #[arg(long)]
        family: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Corrected)]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Corpus size for `--family corpus`
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        max_vertices: usize,
    },
    /// Lower bounds on the status indices of the complement
    Bounds {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check the co-index identities, diameter-2 formulas and complement bounds
    Identities {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    family: String,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    n: Option<ParamRange>,
    #[arg(long)]
    p: Option<ParamRange>,
    #[arg(long)]
    q: Option<ParamRange>,
    #[arg(long)]
    k: Option<ParamRange>,
    #[arg(long)]
    t: Option<ParamRange>,
}

impl From<ParamArgs> for FamilyParams {
    fn from(a: ParamArgs) -> Self {
        FamilyParams {
            n: a.n,
            p: a.p,
            q: a.q,
            k: a.k,
            t: a.t,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Corrected,
    AsPrinted,
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })
}

fn plain(output: String) -> Verdict {
    Verdict {
        output,
        exit_code: 0,
    }
}

fn run(command: Command) -> Result<Verdict, Error> {
    match command {
        Command::Compute { path, json } => commands::compute(&read(&path)?, json).map(plain),
        Command::Generate {
            family,
            output,
            max_vertices,
        } => {
            let spec = commands::single_spec(&family.family, &family.params.into())?;
            let text = commands::generate(&spec, max_vertices)?;
            match output {
                Some(path) => {
                    fs::write(&path, text)
                        .map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?;
                    Ok(plain(String::new()))
                }
                None => Ok(plain(text)),
            }
        }
        Command::ClosedForm {
            family,
            as_printed,
            json,
            max_vertices,
        } => {
            let spec = commands::single_spec(&family.family, &family.params.into())?;
            commands::closed_form(&spec, as_printed, json, max_vertices).map(plain)
        }
        Command::Verify {
            family,
            params,
            mode,
            seed,
            count,
            json,
            max_vertices,
        } => {
            let target = match family.as_str() {
                "grid" => VerifyTarget::Grid,
                "corpus" => VerifyTarget::Corpus { count, seed },
                _ => VerifyTarget::Family(family, params.into()),
            };
            let mode = match mode {
                ModeArg::Corrected => Mode::Corrected,
                ModeArg::AsPrinted => Mode::AsPrinted,
            };
            commands::verify(&target, mode, json, max_vertices)
        }
        Command::Bounds { path, json } => commands::bounds(&read(&path)?, json).map(plain),
        Command::Identities { path, json } => {
            let label = path
                .file_stem()
                .map_or("graph".into(), |s| s.to_string_lossy().into_owned());
            commands::identities(&label, &read(&path)?, json)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.threads {
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| run(cli.command)),
            Err(e) => Err(Error::Precondition(format!("thread pool: {e}"))),
        },
        None => run(cli.command),
    };
    match result {
        Ok(v) => {
            print!("{}", v.output);
            ExitCode::from(v.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
