//! Command-line front end: normal forms, equality, certificate
//! generation, verification, and orbit search, with JSON payloads for
//! scripting.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 not equivalent, 4 search budget exhausted.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use braidcert::{
    conjugation_certificate, frame_equivalence_certificate, generator_conjugation_certificate,
    normal_form, orbit_search, replay, same_frame_certificate, verify_certificate, BraidWord,
    Certificate, Error, Factorization, FrameFactorization, VerifyOutcome,
};

#[derive(Parser)]
#[command(
    name = "braidcert",
    version,
    about = "Braid group computations with replayable Hurwitz-move certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of a word.
    Nf {
        /// Strand count.
        #[arg(long)]
        n: usize,
        /// Whitespace-separated signed generator indices.
        word: String,
    },
    /// Decide whether two words are equal in the braid group.
    Eq {
        #[arg(long)]
        n: usize,
        left: String,
        right: String,
    },
    /// Produce a Hurwitz-move certificate.
    Certify {
        #[arg(long, value_enum)]
        mode: CertifyMode,
        /// Strand count (one-conj and conj modes).
        #[arg(long)]
        n: Option<usize>,
        /// Generator index to conjugate by (one-conj mode).
        #[arg(long)]
        j: Option<usize>,
        /// Conjugator word (conj mode).
        #[arg(long)]
        conjugator: Option<String>,
        /// Frame factorization JSON file, `-` for stdin (same-frame, main).
        #[arg(long)]
        left: Option<PathBuf>,
        #[arg(long)]
        right: Option<PathBuf>,
    },
    /// Replay a certificate and compare against the target factorization.
    Verify {
        /// Factorization JSON file, `-` for stdin.
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Search for a certificate by bidirectional breadth-first search.
    Orbit {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_depth: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_states: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CertifyMode {
    /// Two factorizations over one frame.
    SameFrame,
    /// Conjugation of the standard factorization by one generator.
    OneConj,
    /// Conjugation of the standard factorization by an arbitrary braid.
    Conj,
    /// Any two full-twist factorizations over any two frames.
    Main,
}

enum CliError {
    Input(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn exit_code(err: &CliError) -> u8 {
    match err {
        CliError::Input(_) => 2,
        CliError::Lib(e) => match e {
            Error::NotEquivalent(_) => 3,
            Error::BudgetExhausted { .. } | Error::DepthExhausted { .. } => 4,
            Error::StageReplay { .. } | Error::Internal(_) => 1,
            _ => 2,
        },
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = read_input(path)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("invalid JSON in {}: {e}", path.display())))
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("serialization cannot fail")
    );
}

fn require<T>(opt: Option<T>, what: &str) -> Result<T, CliError> {
    opt.ok_or_else(|| CliError::Input(format!("missing required option {what}")))
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Nf { n, word } => {
            let word = BraidWord::parse(&word, n).map_err(CliError::Lib)?;
            let nf = normal_form(&word);
            println!("delta_power: {}", nf.delta_power());
            println!("factors: {}", nf.canonical_length());
            println!("witness: {}", nf.canonical_word().to_text());
            Ok(0)
        }
        Command::Eq { n, left, right } => {
            let left = BraidWord::parse(&left, n)?;
            let right = BraidWord::parse(&right, n)?;
            if braidcert::equal(&left, &right)? {
                println!("equal");
                Ok(0)
            } else {
                println!("not-equal");
                Ok(3)
            }
        }
        Command::Certify {
            mode,
            n,
            j,
            conjugator,
            left,
            right,
        } => {
            let cert = match mode {
                CertifyMode::SameFrame => {
                    let ff1: FrameFactorization = read_json(&require(left, "--left")?)?;
                    let ff2: FrameFactorization = read_json(&require(right, "--right")?)?;
                    same_frame_certificate(&ff1, &ff2)?
                }
                CertifyMode::OneConj => {
                    let n = require(n, "--n")?;
                    let j = require(j, "--j")?;
                    generator_conjugation_certificate(j, n)?
                }
                CertifyMode::Conj => {
                    let n = require(n, "--n")?;
                    let text = require(conjugator, "--conjugator")?;
                    let b = BraidWord::parse(&text, n)?;
                    conjugation_certificate(&b, n)?
                }
                CertifyMode::Main => {
                    let ff1: FrameFactorization = read_json(&require(left, "--left")?)?;
                    let ff2: FrameFactorization = read_json(&require(right, "--right")?)?;
                    frame_equivalence_certificate(&ff1, &ff2)?
                }
            };
            print_json(&cert);
            Ok(0)
        }
        Command::Verify {
            left,
            right,
            certificate,
        } => {
            let f1: Factorization = read_json(&left)?;
            let f2: Factorization = read_json(&right)?;
            let cert: Certificate = read_json(&certificate)?;
            match verify_certificate(&f1, &f2, &cert)? {
                VerifyOutcome::Verified => {
                    println!("ok");
                    Ok(0)
                }
                VerifyOutcome::EntryMismatch { index } => {
                    let replayed = replay(&f1, &cert)?;
                    println!("fail: first mismatch at entry {index}");
                    println!("  replayed: {}", replayed.entries()[index].to_text());
                    println!("  expected: {}", f2.entries()[index].to_text());
                    Ok(1)
                }
            }
        }
        Command::Orbit {
            left,
            right,
            max_depth,
            max_states,
        } => {
            let f1: Factorization = read_json(&left)?;
            let f2: Factorization = read_json(&right)?;
            match orbit_search(&f1, &f2, max_depth, max_states) {
                Ok(cert) => {
                    print_json(&cert);
                    Ok(0)
                }
                Err(Error::DepthExhausted { .. }) => {
                    println!("not-found");
                    Ok(4)
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            match &err {
                CliError::Input(msg) => eprintln!("error: {msg}"),
                CliError::Lib(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(exit_code(&err))
        }
    }
}
