use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lee_cayley::cli::{self, DecodeInput, RunReport};
use lee_cayley::code::ExportFormat;
use lee_cayley::spectral::ResidueFilter;

/// Quasi-perfect Lee codes from Cayley graphs over the Gaussian integers.
///
/// Exit codes: 0 = all checked claims hold, 1 = a verification failed,
/// 2 = usage or input error.
#[derive(Parser)]
#[command(name = "lee-cayley", version, about)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Emit the report as plain text (the default).
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the code for a prime: parity-check matrix, size, classification.
    Construct {
        #[arg(short = 'p', long)]
        prime: u64,
    },
    /// Classify every odd prime in a range and check the (2,3) family claim.
    Verify {
        /// Inclusive range, e.g. 7..50.
        #[arg(long, value_name = "A..B")]
        range: String,
    },
    /// Verify the three known 3-quasi-perfect generator sets (q = 13, 26, 41).
    Table1,
    /// Decode a word, or run seeded random-error trials.
    Decode {
        #[arg(short = 'p', long)]
        prime: u64,
        /// Comma-separated word of length n with entries in [0, p).
        #[arg(long, value_delimiter = ',', conflicts_with = "random_errors")]
        word: Option<Vec<u64>>,
        /// Lee-weight budget per random trial.
        #[arg(long, value_name = "K")]
        random_errors: Option<u64>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Character-sum spectrum of one prime, or a Ramanujan scan.
    Spectrum {
        #[arg(short = 'p', long, conflicts_with = "scan")]
        prime: Option<u64>,
        /// Scan all odd primes up to this limit.
        #[arg(long, value_name = "LIMIT")]
        scan: Option<u64>,
        /// Restrict the scan: all, <r>mod4 or <r>mod12, e.g. 3mod4.
        #[arg(long, default_value = "all")]
        filter: String,
        /// Include the large known-exception prime 541 in scans.
        #[arg(long)]
        extended: bool,
    },
    /// Point counts of the cubic curves for p = 1 (mod 4).
    Curves {
        #[arg(short = 'p', long)]
        prime: u64,
    },
    /// Print the parity-check matrix in csv or json form.
    Export {
        #[arg(short = 'p', long)]
        prime: u64,
        #[arg(long, default_value = "csv")]
        format: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output::Report(report)) => {
            let rendered = if cli.json {
                match serde_json::to_string_pretty(&report) {
                    Ok(s) => s,
                    Err(e) => return fail(&e.to_string()),
                }
            } else {
                cli::render_text(&report)
            };
            if let Err(e) = emit(&cli.out, &rendered) {
                return fail(&e);
            }
            if report.claims_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Output::Raw(text)) => {
            if let Err(e) = emit(&cli.out, &text) {
                return fail(&e);
            }
            ExitCode::SUCCESS
        }
        Err(message) => fail(&message),
    }
}

enum Output {
    Report(RunReport),
    Raw(String),
}

fn run(cli: &Cli) -> Result<Output, String> {
    let report = match &cli.command {
        Command::Construct { prime } => cli::construct(*prime),
        Command::Verify { range } => {
            let (lo, hi) = cli::parse_range(range).map_err(|e| e.to_string())?;
            cli::verify(lo, hi)
        }
        Command::Table1 => cli::table1(),
        Command::Decode {
            prime,
            word,
            random_errors,
            trials,
            seed,
        } => {
            let input = match (word, random_errors) {
                (Some(w), None) => DecodeInput::Word(w.clone()),
                (None, Some(k)) => DecodeInput::RandomErrors(*k),
                _ => return Err("decode needs exactly one of --word or --random-errors".into()),
            };
            cli::decode(*prime, input, *seed, *trials)
        }
        Command::Spectrum {
            prime,
            scan,
            filter,
            extended,
        } => {
            if prime.is_none() == scan.is_none() {
                return Err("spectrum needs exactly one of --prime or --scan".into());
            }
            let filter: ResidueFilter = filter.parse().map_err(|e: lee_cayley::Error| e.to_string())?;
            cli::spectrum_cmd(*prime, *scan, filter, *extended)
        }
        Command::Curves { prime } => cli::curves(*prime),
        Command::Export { prime, format } => {
            let format: ExportFormat = format.parse().map_err(|e: lee_cayley::Error| e.to_string())?;
            return cli::export(*prime, format)
                .map(Output::Raw)
                .map_err(|e| e.to_string());
        }
    };
    report.map(Output::Report).map_err(|e| e.to_string())
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            if !content.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn fail(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}
