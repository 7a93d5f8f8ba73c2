use std::net::SocketAddr;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use goishi::cli::{self, CliError, TableFormat};
use goishi::{Convention, Position, SeedSpec, TableBuilder, DEFAULT_MAX_N};

#[derive(Parser)]
#[command(name = "goishi", version, about = "Exact analysis of linear two-player goishi hiroi")]
struct Args {
    /// Largest table side the command may build.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    G0,
    G1,
    Gm1,
    Gm1star,
}

impl From<Function> for SeedSpec {
    fn from(f: Function) -> Self {
        match f {
            Function::G0 => SeedSpec::G0,
            Function::G1 => SeedSpec::G1,
            Function::Gm1 => SeedSpec::GM1,
            Function::Gm1star => SeedSpec::GM1Star,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum Conv {
    Normal,
    Misere,
}

impl From<Conv> for Convention {
    fn from(c: Conv) -> Self {
        match c {
            Conv::Normal => Convention::Normal,
            Conv::Misere => Convention::Misere,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a value table, rows indexed by x and columns by y.
    Table {
        #[arg(long, value_enum)]
        function: Function,
        #[arg(long, default_value_t = 12)]
        size: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Add an index row and column (csv only).
        #[arg(long)]
        header: bool,
    },
    /// Classify the position (x, y, z) as P or N.
    Outcome {
        x: usize,
        y: usize,
        z: usize,
        #[arg(long, value_enum, default_value_t = Conv::Normal)]
        convention: Conv,
    },
    /// Print a winning move from (x, y, z), if there is one.
    BestMove {
        x: usize,
        y: usize,
        z: usize,
        #[arg(long, value_enum, default_value_t = Conv::Normal)]
        convention: Conv,
    },
    /// Run verification sweeps against the brute-force solvers and fixtures.
    Verify {
        #[arg(long, default_value_t = 25)]
        max: usize,
        /// Comma-separated: tables, theorems, closedform, symmetry, oracle-grundy, nim, or all.
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// Serve the JSON analysis API.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

fn run(args: Args) -> Result<ExitCode, CliError> {
    let builder = TableBuilder::with_max_n(args.max_n);
    match args.command {
        Command::Table {
            function,
            size,
            format,
            header,
        } => {
            let format = match format {
                Format::Csv => TableFormat::Csv,
                Format::Markdown => TableFormat::Markdown,
            };
            print!("{}", cli::cmd_table(&builder, function.into(), size, format, header)?);
        }
        Command::Outcome { x, y, z, convention } => {
            print!("{}", cli::cmd_outcome(&builder, Position::new(x, y, z), convention.into())?);
        }
        Command::BestMove { x, y, z, convention } => {
            print!("{}", cli::cmd_best_move(&builder, Position::new(x, y, z), convention.into())?);
        }
        Command::Verify { max, checks } => {
            let checks = cli::parse_checks(&checks)?;
            let passed = cli::cmd_verify(&builder, max, &checks, |report| println!("{report}"))?;
            if !passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Serve { port } => {
            let addr = SocketAddr::from(([0, 0, 0, 0], port));
            let runtime = tokio::runtime::Runtime::new().map_err(|e| CliError::Usage(e.to_string()))?;
            runtime
                .block_on(goishi::service::serve(addr, args.max_n))
                .map_err(|e| CliError::Usage(format!("server error: {e}")))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
