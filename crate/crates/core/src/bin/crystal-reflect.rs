use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use crystal_reflect::verify::{self, VerifyConfig};
use crystal_reflect::{CartanData, Error};

#[derive(Parser)]
#[command(name = "crystal-reflect", version, about = "Saito reflections and string parameters in B(lambda)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Preset (A1, A2, A3, B2, G2, A1~), a JSON file, or inline {"gcm": ...}
    #[arg(long)]
    cartan: String,
    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep every member of B(lambda) against every reduced word
    Verify {
        #[command(flatten)]
        common: Common,
        /// Dominant weight in fundamental coordinates; repeat for several
        #[arg(long, required = true)]
        lambda: Vec<String>,
        /// Depth cap for B(lambda) (required for non-finite types)
        #[arg(long)]
        depth: Option<usize>,
        /// Longest reduced word to sweep (defaults to the longest element)
        #[arg(long)]
        max_word_len: Option<usize>,
        /// Worker threads
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print the full recursion trace for one element and one word
    Trace {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
        /// Lowering word of b, 1-based, e.g. "1,2" for f1 f2 u
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        b_word: String,
        /// Reduced word, 1-based
        #[arg(long)]
        word: String,
        /// Include canonical string data for every element
        #[arg(long)]
        verbose: bool,
    },
    /// List B(lambda) as JSON lines
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        depth: Option<usize>,
    },
}

enum Outcome {
    Ok,
    Failed,
}

fn writer(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn cartan(common: &Common) -> Result<CartanData, Error> {
    verify::load_cartan(&common.cartan)
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Verify { common, lambda, depth, max_word_len, jobs } => {
            let config = VerifyConfig {
                cartan_label: common.cartan.clone(),
                cartan: cartan(&common)?,
                lambdas: lambda.iter().map(|l| verify::parse_csv(l)).collect::<Result<_, _>>()?,
                depth,
                max_word_len,
            };
            let report = match jobs {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Error::Parse(e.to_string()))?
                    .install(|| verify::run_verify(&config))?,
                None => verify::run_verify(&config)?,
            };
            emit(&common.out, &[serde_json::to_string_pretty(&report).expect("serializable")]);
            eprintln!(
                "{} cases, {} failures, {} ms",
                report.cases,
                report.failures.len(),
                report.elapsed_ms
            );
            Ok(if report.passed() { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Trace { common, lambda, b_word, word, verbose } => {
            let c = cartan(&common)?;
            let trace = verify::trace_json(
                &c,
                &verify::parse_csv(&lambda)?,
                &verify::parse_csv(&b_word)?,
                &verify::parse_csv(&word)?,
                verbose,
            )?;
            let ok = trace["findings"].as_array().is_some_and(Vec::is_empty);
            emit(&common.out, &[serde_json::to_string_pretty(&trace).expect("serializable")]);
            Ok(if ok { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Enumerate { common, lambda, depth } => {
            let c = cartan(&common)?;
            let lines = verify::enumerate_lines(&c, &verify::parse_csv(&lambda)?, depth)?;
            emit(&common.out, &lines);
            Ok(Outcome::Ok)
        }
    }
}

fn emit(out: &Option<PathBuf>, lines: &[String]) {
    let result = writer(out).and_then(|mut w| {
        for line in lines {
            writeln!(w, "{line}")?;
        }
        w.flush()?;
        Ok(())
    });
    if let Err(e) = result {
        eprintln!("error: {e:#}");
        std::process::exit(2);
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            let detail = match &e {
                Error::NotMember { index, eps_star, bound } => serde_json::json!({
                    "error": "not-member",
                    "index": index + 1,
                    "eps_star": eps_star,
                    "bound": bound,
                }),
                other => serde_json::json!({ "error": other.to_string() }),
            };
            eprintln!("{detail}");
            ExitCode::from(2)
        }
    }
}
