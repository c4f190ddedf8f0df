use clap::{Args, Parser, Subcommand};
use leibniz::format::{bundled_corpus_dir, read_text, AlgebraFile, ExtensionFile, FormatError};
use leibniz::report::{analyze, classify_report, AnalyzeOptions, ReportDocument};
use leibniz::verify::verify_paper;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "leibniz", version, about = "Lie-relative invariants of finite-dimensional Leibniz algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Truncation degree for free-algebra computations.
    #[arg(long, global = true, default_value_t = 4)]
    degree: usize,
    /// Keep raising the degree (up to three steps) until homology stabilizes.
    #[arg(long, global = true)]
    sweep: bool,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    json_out: Option<PathBuf>,
    /// Fixture directory for verify-paper.
    #[arg(long, global = true, value_name = "DIR")]
    corpus: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra file and check the Leibniz identity.
    Validate { file: PathBuf },
    /// Compute series, centers, homology and the precise center.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        series: bool,
        #[arg(long)]
        centers: bool,
        #[arg(long, value_name = "D")]
        homology: Option<usize>,
        #[arg(long, value_name = "D")]
        precise_center: Option<usize>,
    },
    /// Classify the extension given by a surjection G -> Q.
    ClassifyExt { g: PathBuf, q: PathBuf, map: PathBuf },
    /// Run every check over the fixture corpus.
    VerifyPaper,
}

fn emit(doc: &ReportDocument, out: &Option<PathBuf>) -> Result<(), FormatError> {
    let text = doc.to_json();
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| FormatError::Io { path: path.display().to_string(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_INPUT)
}

fn run(cli: Cli) -> ExitCode {
    let g = cli.global;
    match cli.command {
        Command::Validate { file } => {
            let parsed = read_text(&file).and_then(|t| AlgebraFile::parse(&t)).and_then(|f| f.to_algebra_unchecked());
            let q = match parsed {
                Ok(q) => q,
                Err(e) => return input_error(e),
            };
            let violations = q.validate();
            if violations.is_empty() {
                println!("OK {} (dim {})", q.name(), q.dim());
                ExitCode::SUCCESS
            } else {
                for v in &violations {
                    println!("Leibniz identity fails at triple {v}");
                }
                ExitCode::from(EXIT_CHECK_FAILED)
            }
        }
        Command::Analyze { file, series, centers, homology, precise_center } => {
            let text = match read_text(&file) {
                Ok(t) => t,
                Err(e) => return input_error(e),
            };
            let q = match AlgebraFile::parse(&text).and_then(|f| f.to_algebra()) {
                Ok(q) => q,
                Err(e) => return input_error(e),
            };
            let nothing = !series && !centers && homology.is_none() && precise_center.is_none();
            let opts = if nothing {
                AnalyzeOptions { series: true, centers: true, homology: Some(g.degree), precise_center: Some(g.degree), sweep: g.sweep }
            } else {
                AnalyzeOptions { series, centers, homology, precise_center, sweep: g.sweep }
            };
            match analyze(&q, &text, &opts) {
                Ok(doc) => match emit(&doc, &g.json_out) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => input_error(e),
                },
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_CHECK_FAILED)
                }
            }
        }
        Command::ClassifyExt { g: gp, q: qp, map } => {
            let texts: Result<Vec<String>, FormatError> = [&gp, &qp, &map].iter().map(|p| read_text(p)).collect();
            let texts = match texts {
                Ok(t) => t,
                Err(e) => return input_error(e),
            };
            let built = AlgebraFile::parse(&texts[0]).and_then(|f| f.to_algebra()).and_then(|ga| {
                let qa = AlgebraFile::parse(&texts[1]).and_then(|f| f.to_algebra())?;
                ExtensionFile::parse(&texts[2])?.to_extension(&ga, &qa)
            });
            let e = match built {
                Ok(e) => e,
                Err(e) => return input_error(e),
            };
            let inputs: Vec<&str> = texts.iter().map(String::as_str).collect();
            match classify_report(&e, &inputs, g.degree, g.sweep) {
                Ok(doc) => match emit(&doc, &g.json_out) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => input_error(e),
                },
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_CHECK_FAILED)
                }
            }
        }
        Command::VerifyPaper => {
            let root = g.corpus.unwrap_or_else(bundled_corpus_dir);
            let report = match verify_paper(&root, g.degree) {
                Ok(r) => r,
                Err(e) => return input_error(e),
            };
            for line in report.lines() {
                println!("{line}");
            }
            for s in report.summary() {
                println!("criterion {}: {} passed, {} failed", s.criterion, s.passed, s.failed);
            }
            if let Some(path) = &g.json_out {
                if let Err(e) = emit(&report.document(), &Some(path.clone())) {
                    return input_error(e);
                }
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILED)
            }
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
