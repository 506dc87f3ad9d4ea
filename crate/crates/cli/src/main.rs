use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fuzzycover_cli::report::error_json;
use fuzzycover_cli::{execute, exit, CliError, Command, Format, Settings};

#[derive(Parser)]
#[command(
    name = "fuzzycover",
    version,
    about = "Fuzzy covering rough set models and precision-weighted TOPSIS"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// key=value settings file; flags take precedence
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Tolerance for reported order relations
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Worker threads (defaults to FUZZYCOVER_THREADS, then all cores)
    #[arg(long, global = true, env = "FUZZYCOVER_THREADS")]
    threads: Option<usize>,
    /// Write the report here instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Args, Default)]
struct Model {
    /// Aggregator: O2V, Om12, OmMV, OD, Om2, Tprod, Tmin
    #[arg(long)]
    agg: Option<String>,
    /// Logic family: overlap or tnorm
    #[arg(long)]
    logic: Option<String>,
    /// Model group (A1..M) or operator N<i>^C<j>
    #[arg(long)]
    model: Option<String>,
}

#[derive(Args)]
struct Input {
    /// CSV file: header row, one row per element, first column labels
    input: Option<PathBuf>,
    /// Require a member equal to 1 everywhere
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and validate a matrix or covering file
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Check aggregator axioms and residual adjointness on a grid
    Axioms {
        /// Aggregator name, or `all`
        #[arg(long)]
        agg: Option<String>,
        #[arg(long)]
        logic: Option<String>,
        /// Grid step
        #[arg(long)]
        grid: Option<f64>,
    },
    /// All 24 neighborhood operators, their grouping and order
    Neighborhoods {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        model: Model,
    },
    /// Lower and upper approximations under one model
    Approx {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        model: Model,
        /// Comma separated target set; defaults to every column
        #[arg(long)]
        target: Option<String>,
    },
    /// Rank alternatives
    Decide {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        model: Model,
        /// Cost attributes by name or 1-based index
        #[arg(long)]
        cost: Option<String>,
    },
    /// Rank under several models and correlate the rankings
    Compare {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        model: Model,
        /// Comma separated GROUP[:AGG] entries, or `all`
        #[arg(long)]
        models: Option<String>,
        #[arg(long)]
        cost: Option<String>,
    },
}

fn settings(cli: &Cli) -> (Command, Settings) {
    let mut s = Settings {
        tolerance: cli.tolerance,
        threads: cli.threads,
        output: cli.output.clone(),
        format: cli.format.map(|f| match f {
            Format::Json => "json".into(),
            Format::Csv => "csv".into(),
        }),
        ..Default::default()
    };
    let with_input = |s: &mut Settings, i: &Input| {
        s.input = i.input.clone();
        s.strict = i.strict.then_some(true);
    };
    let with_model = |s: &mut Settings, m: &Model| {
        s.agg = m.agg.clone();
        s.logic = m.logic.clone();
        s.model = m.model.clone();
    };
    let cmd = match &cli.command {
        Cmd::Validate { input } => {
            with_input(&mut s, input);
            Command::Validate
        }
        Cmd::Axioms { agg, logic, grid } => {
            s.agg = agg.clone();
            s.logic = logic.clone();
            s.grid = *grid;
            Command::Axioms
        }
        Cmd::Neighborhoods { input, model } => {
            with_input(&mut s, input);
            with_model(&mut s, model);
            Command::Neighborhoods
        }
        Cmd::Approx {
            input,
            model,
            target,
        } => {
            with_input(&mut s, input);
            with_model(&mut s, model);
            s.target = target.clone();
            Command::Approx
        }
        Cmd::Decide { input, model, cost } => {
            with_input(&mut s, input);
            with_model(&mut s, model);
            s.cost = cost.clone();
            Command::Decide
        }
        Cmd::Compare {
            input,
            model,
            models,
            cost,
        } => {
            with_input(&mut s, input);
            with_model(&mut s, model);
            s.models = models.clone();
            s.cost = cost.clone();
            Command::Compare
        }
    };
    (cmd, s)
}

type Rendered = (String, Option<PathBuf>, Option<CliError>);

fn run(cli: &Cli) -> Result<Rendered, (CliError, Format)> {
    let (cmd, flags) = settings(cli);
    let fallback = match &cli.config {
        Some(p) => Settings::read_file(p).map_err(|e| (e, Format::Json))?,
        None => Settings::default(),
    };
    let merged = flags.or(fallback);
    let cfg = merged.resolve().map_err(|e| (e, Format::Json))?;
    if let Some(n) = cfg.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| (CliError::Config(format!("thread pool: {e}")), cfg.format))?;
    }
    let out = execute(cmd, &cfg).map_err(|e| (e, cfg.format))?;
    Ok((
        out.report.render(cfg.format),
        cfg.output.clone(),
        out.failure,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, output, failure) = match run(&cli) {
        Ok(r) => r,
        Err((e, format)) => {
            eprintln!("error: {e}");
            if format == Format::Json {
                println!("{}", error_json(&e));
            }
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match output {
        Some(path) => {
            if let Err(source) = std::fs::write(&path, &text) {
                let e = CliError::Io { path, source };
                eprintln!("error: {e}");
                return ExitCode::from(exit::IO as u8);
            }
        }
        None => print!("{text}"),
    }
    match failure {
        Some(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        None => ExitCode::SUCCESS,
    }
}
