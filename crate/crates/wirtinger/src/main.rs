use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use wirtinger::config::{parse_suites, ConfigError, OutputFormat, Overrides, SuiteConfig};
use wirtinger::dump::{diff_variants, dump_generators};
use wirtinger::run_suite;
use wirtinger_core::lorentz::Variant;

#[derive(Parser)]
#[command(name = "wirtinger", version, about = "Verify operator realizations of Lorentz and SU(n) symmetry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a report.
    Verify(VerifyArgs),
    /// Print generator operators in text form.
    DumpGenerators {
        #[arg(long, default_value_t = 1)]
        n: u16,
        #[arg(long, default_value = "corrected")]
        variant: Variant,
    },
    /// Compare the printed and corrected commutation tables.
    DiffVariants {
        #[arg(long, default_value_t = 1)]
        n: u16,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// `key = value` file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Suite names, repeatable or comma separated.
    #[arg(long = "suite")]
    suites: Vec<String>,
    #[arg(long)]
    n: Option<u16>,
    #[arg(long)]
    sets: Option<u16>,
    #[arg(long)]
    lattice: Option<u16>,
    #[arg(long)]
    variant: Option<Variant>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long)]
    format: Option<OutputFormat>,
}

impl VerifyArgs {
    fn overrides(&self) -> Result<Overrides, ConfigError> {
        let suites = if self.suites.is_empty() {
            None
        } else {
            Some(self.suites.iter().map(|s| parse_suites(s)).collect::<Result<Vec<_>, _>>()?.concat())
        };
        Ok(Overrides {
            suites,
            n: self.n,
            sets: self.sets,
            lattice: self.lattice,
            variant: self.variant,
            seed: self.seed,
            tolerance: self.tolerance,
            format: self.format,
        })
    }
}

fn verify(args: VerifyArgs) -> Result<bool, Box<dyn std::error::Error>> {
    let file = match &args.config {
        Some(path) => Overrides::from_file(path)?,
        None => Overrides::default(),
    };
    let merged = args.overrides()?.over(file);
    let config = SuiteConfig::from_overrides(&merged)?;
    let report = run_suite(&config)?;
    match merged.format.unwrap_or_default() {
        OutputFormat::Text => print!("{}", report.to_text()),
        OutputFormat::Json => print!("{}", report.to_json()),
    }
    Ok(report.all_pass())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<bool, Box<dyn std::error::Error>> = match cli.command {
        Command::Verify(args) => verify(args),
        Command::DumpGenerators { n, variant } => dump_generators(n, variant).map(|s| {
            print!("{s}");
            true
        }).map_err(|e| e.to_string().into()),
        Command::DiffVariants { n, format } => diff_variants(n).map(|d| {
            match format {
                OutputFormat::Text => print!("{}", d.to_text()),
                OutputFormat::Json => print!("{}", d.to_json()),
            }
            true
        }).map_err(|e| e.to_string().into()),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
