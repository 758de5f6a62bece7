//! `antl` command line.

use std::process::ExitCode;

use antl_core::center::{central_generator, e_word, enumerate_basis, factorize};
use antl_core::embed::{embed_element, embed_word};
use antl_core::fock::{act_word, matrix_block};
use antl_core::normal_form::normalize;
use antl_core::{Config, Element, Rank, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::json;
use crate::verify::{self, Bounds, Suite};

#[derive(Debug, Parser)]
#[command(name = "antl", version, about = "Exact computations in affine nilTemperley-Lieb algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Rank N (number of generators), at least 3
    #[arg(long = "n")]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// A word given either with `--word` or positionally.
#[derive(Debug, Args)]
pub struct WordArg {
    /// Space- or comma-separated generator indices
    #[arg(long = "word", allow_hyphen_values = true)]
    pub flag: Option<String>,
    #[arg(value_name = "WORD", conflicts_with = "flag")]
    pub positional: Option<String>,
}

impl WordArg {
    fn text(&self) -> Option<&str> {
        self.flag.as_deref().or(self.positional.as_deref())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Relations,
    Center,
    Faithfulness,
    Psi,
    Basis,
    Embeddings,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form (blocks) of a monomial
    Normalize {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        word: WordArg,
    },
    /// Apply a monomial to a particle configuration
    Act {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        word: WordArg,
        /// Occupied circle sites, e.g. "5 0"
        #[arg(long)]
        config: String,
    },
    /// The k-particle block of a monomial or element
    Matrix {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        word: WordArg,
        /// An element such as "+1·[2 1 0] -1·[0]" instead of a word
        #[arg(long, conflicts_with_all = ["flag", "positional"])]
        element: Option<String>,
        #[arg(long)]
        k: usize,
    },
    /// The central generator t_k
    Center {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
    },
    /// The monomial e_IJ moving configuration J to configuration I
    EWord {
        #[command(flatten)]
        common: Common,
        /// Output configuration I (circle sites)
        #[arg(long = "i")]
        i_out: String,
        /// Input configuration J (circle sites)
        #[arg(long = "j")]
        i_in: String,
    },
    /// Basis label (k, l, I, J) of a nonzero monomial
    Factorize {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        word: WordArg,
    },
    /// Image of a monomial under the embedding into rank N+1
    Embed {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        word: WordArg,
        #[arg(long)]
        m: usize,
    },
    /// All basis labels with l <= ell-max and their words
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        ell_max: usize,
    },
    /// Run property suites exhaustively at small sizes
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

/// Domain errors (bad rank, bad index, zero monomial …) exit with 2, like
/// argument errors; a failing suite exits with 1.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Suite,
}

impl From<antl_core::Error> for Failure {
    fn from(e: antl_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn require_word(rank: Rank, w: &WordArg) -> Result<Word, Failure> {
    let text = w.text().ok_or_else(|| Failure::Usage("a word is required (--word or positional)".into()))?;
    Ok(Word::parse(rank, text)?)
}

fn max_len_from_env() -> Result<usize, Failure> {
    match std::env::var("ANTL_MAX_LEN") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("ANTL_MAX_LEN must be a number, got {v:?}"))),
        Err(_) => Ok(Bounds::default().max_len),
    }
}

/// Executes a parsed command and returns what it prints on stdout.
pub fn execute(cmd: &Command) -> Result<String, (String, Failure)> {
    let mut out = String::new();
    match execute_into(cmd, &mut out) {
        Ok(()) => Ok(out),
        Err(f) => Err((out, f)),
    }
}

fn emit<V: serde::Serialize>(
    out: &mut String,
    format: Format,
    text: impl FnOnce() -> String,
    value: impl FnOnce() -> V,
) {
    match format {
        Format::Text => out.push_str(&text()),
        Format::Json => out.push_str(&json::pretty(&value())),
    }
    out.push('\n');
}

fn execute_into(cmd: &Command, out: &mut String) -> Result<(), Failure> {
    match cmd {
        Command::Normalize { common, word } => {
            let rank = Rank::new(common.n)?;
            let nf = normalize(&require_word(rank, word)?);
            emit(out, common.format, || nf.to_string(), || json::normal_form(&nf));
        }
        Command::Act { common, word, config } => {
            let rank = Rank::new(common.n)?;
            let w = require_word(rank, word)?;
            let c = Config::parse_labels(rank, config)?;
            let result = act_word(&w, &c)?;
            emit(
                out,
                common.format,
                || match &result {
                    Some((p, img)) => format!("{p} · {img}"),
                    None => "0".into(),
                },
                || match &result {
                    Some((p, img)) => json!({"poly": json::poly_terms(p), "config": img.labels()}),
                    None => serde_json::Value::Null,
                },
            );
        }
        Command::Matrix { common, word, element, k } => {
            let rank = Rank::new(common.n)?;
            let e = match element {
                Some(text) => Element::parse(rank, text)?,
                None => Element::monomial(&require_word(rank, word)?),
            };
            let m = matrix_block(&e, *k)?;
            let text = m.to_string();
            emit(out, common.format, || text.trim_end().to_string(), || json::matrix_to_json(&m));
        }
        Command::Center { common, k } => {
            let rank = Rank::new(common.n)?;
            let t = central_generator(*k, rank)?;
            emit(out, common.format, || t.to_string(), || json::element(&t));
        }
        Command::EWord { common, i_out, i_in } => {
            let rank = Rank::new(common.n)?;
            let i = Config::parse_labels(rank, i_out)?;
            let j = Config::parse_labels(rank, i_in)?;
            let w = e_word(&i, &j)?;
            emit(out, common.format, || w.to_string(), || json!({"n": rank.get(), "word": w.letters()}));
        }
        Command::Factorize { common, word } => {
            let rank = Rank::new(common.n)?;
            let label = factorize(&require_word(rank, word)?)?;
            emit(out, common.format, || label.to_string(), || json::label(&label));
        }
        Command::Embed { common, word, m } => {
            let rank = Rank::new(common.n)?;
            let w = require_word(rank, word)?;
            let image = embed_word(*m, &w)?;
            let canonical = embed_element(*m, &Element::monomial(&w))?;
            emit(
                out,
                common.format,
                || image.to_string(),
                || json!({"n": rank.get() + 1, "word": image.letters(), "canonical": json::element(&canonical)}),
            );
        }
        Command::Enumerate { common, ell_max } => {
            let rank = Rank::new(common.n)?;
            let basis = enumerate_basis(rank, *ell_max)?;
            emit(
                out,
                common.format,
                || basis.iter().map(|(l, w)| format!("{l} : [{w}]")).collect::<Vec<_>>().join("\n"),
                || {
                    json!(basis
                        .iter()
                        .map(|(l, w)| json!({"label": json::label(l), "word": w.letters()}))
                        .collect::<Vec<_>>())
                },
            );
        }
        Command::Verify { common, suite } => {
            let rank = Rank::new(common.n)?;
            let bounds = Bounds { max_len: max_len_from_env()?, ..Bounds::default() };
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Relations => vec![Suite::Relations],
                SuiteArg::Center => vec![Suite::Center],
                SuiteArg::Faithfulness => vec![Suite::Faithfulness],
                SuiteArg::Psi => vec![Suite::Psi],
                SuiteArg::Basis => vec![Suite::Basis],
                SuiteArg::Embeddings => vec![Suite::Embeddings],
            };
            let checks: Vec<verify::Check> = suites.into_iter().flat_map(|s| verify::run(s, rank, bounds)).collect();
            let ok = checks.iter().all(|c| c.outcome.is_ok());
            emit(
                out,
                common.format,
                || {
                    checks
                        .iter()
                        .map(|c| match &c.outcome {
                            Ok(()) => format!("PASS {}: {}", c.suite, c.name),
                            Err(e) => format!("FAIL {}: {} ({e})", c.suite, c.name),
                        })
                        .collect::<Vec<_>>()
                        .join("\n")
                },
                || {
                    json!(checks
                        .iter()
                        .map(|c| json!({
                            "suite": c.suite.name(),
                            "check": c.name,
                            "passed": c.outcome.is_ok(),
                            "detail": c.outcome.as_ref().err(),
                        }))
                        .collect::<Vec<_>>())
                },
            );
            if !ok {
                return Err(Failure::Suite);
            }
        }
    }
    Ok(())
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, Failure::Suite)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err((out, Failure::Usage(msg))) => {
            print!("{out}");
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
