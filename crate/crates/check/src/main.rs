use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nikulin_check::export::lattice_json;
use nikulin_check::{
    builtin_claims, override_expected, render_canonical_json, render_report, run_claim_set, CheckError, Config, Format,
};
use nikulin_core::lattice::{e8_minus2, lambda_h, nikulin_lattice};

#[derive(Parser)]
#[command(name = "nikulin-check", version, about = "Evaluate the built-in claim catalogue and report")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate claims and write a report
    Run(RunArgs),
    /// Print the claim catalogue
    List,
    /// Print one of the model lattices as json
    Lattice {
        #[arg(value_enum)]
        name: LatticeName,
        /// genus for lambda
        #[arg(long, default_value_t = 2)]
        h: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeName {
    Nikulin,
    Lambda,
    E8m2,
}

#[derive(clap::Args)]
struct RunArgs {
    #[arg(long, default_value_t = 6)]
    max_genus: usize,
    #[arg(long, default_value_t = 100)]
    max_h: u32,
    /// only claims whose id starts with PREFIX
    #[arg(long, value_name = "PREFIX")]
    filter: Option<String>,
    /// json, csv or text
    #[arg(long, default_value = "json")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    fail_fast: bool,
    /// json without runtime_ms (the byte-stable form)
    #[arg(long)]
    canonical: bool,
    /// replace a claim's expected value, e.g. f2.beauville.g3=13
    #[arg(long = "override-expected", value_name = "ID=VALUE")]
    overrides: Vec<String>,
}

fn run(args: RunArgs) -> Result<u8, CheckError> {
    let format: Format = args.format.parse()?;
    if args.canonical && format != Format::Json {
        return Err(CheckError::Usage("--canonical only applies to json".into()));
    }
    let config = Config {
        max_g: args.max_genus,
        max_h: args.max_h,
        filter_prefix: args.filter,
        fail_fast: args.fail_fast,
    };
    config.validate()?;
    let mut claims = builtin_claims();
    for o in &args.overrides {
        let (id, value) = o
            .split_once('=')
            .ok_or_else(|| CheckError::Usage(format!("--override-expected wants ID=VALUE, got {o:?}")))?;
        override_expected(&mut claims, id, value)?;
    }
    let report = run_claim_set(claims, &config)?;
    let bytes = if args.canonical {
        render_canonical_json(&report)?
    } else {
        render_report(&report, format)?
    };
    match args.out {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().write_all(&bytes)?,
    }
    Ok(report.exit_code())
}

fn list() -> Result<u8, CheckError> {
    let claims = builtin_claims();
    let w = claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
    let lw = claims.iter().map(|c| c.paper_location.len()).max().unwrap_or(0);
    let mut out = std::io::stdout().lock();
    for c in &claims {
        writeln!(out, "{:<w$}  {:<lw$}  {}", c.id, c.paper_location, c.description)?;
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run(args),
        Command::List => list(),
        Command::Lattice { name, h } => (|| {
            let l = match name {
                LatticeName::Nikulin => nikulin_lattice()?,
                LatticeName::Lambda => lambda_h(h)?,
                LatticeName::E8m2 => e8_minus2()?,
            };
            std::io::stdout().write_all(&lattice_json(&l)?)?;
            Ok(0)
        })(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("nikulin-check: {e}");
            ExitCode::from(2)
        }
    }
}
