//! Front end for `lyndon-core`. [`run`] parses arguments, writes the
//! rendering to `out` and diagnostics to `err`, and returns the exit code:
//! 0 on success, 1 when a verification or cross-check fails, 2 on usage or
//! input errors.

pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use lyndon_core::lyndon::{
    first_lyndon_factor, is_lyndon_prefix_omega, is_lyndon_suffix_omega, last_lyndon_factor, lyndon_factorization,
};
use lyndon_core::omega::{omega_cmp, six_conditions};
use lyndon_core::oracle::{sweep, SweepSummary};
use lyndon_core::pstd::{left_cartesian_tree, prefix_standard_permutation};
use lyndon_core::tree::{left_lyndon_tree, right_lyndon_tree};
use lyndon_core::{Error, OrderedAlphabet, Word};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lyndon",
    version,
    about = "Lyndon words, ω-order comparison and Lyndon trees"
)]
pub struct Cli {
    /// Symbols in increasing order, e.g. "abc" or "cba". Defaults to the
    /// distinct input symbols in natural order ("ab" for verify).
    #[arg(long, global = true)]
    pub alphabet: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    #[value(alias = "json")]
    Structured,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TreeKind {
    Left,
    Right,
    Cartesian,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare u^ω with v^ω.
    Compare {
        u: String,
        v: String,
        /// Also print the six equivalent conditions.
        #[arg(long)]
        six: bool,
    },
    /// Lyndon factorization with its first and last factors.
    Factorize { w: String },
    /// Prefix standard permutation and its inverse.
    Pstd { w: String },
    /// Left or right Lyndon tree, or the left Cartesian tree, of a Lyndon word.
    Tree {
        w: String,
        #[arg(long, value_enum)]
        kind: TreeKind,
    },
    /// Exhaustive check of every word up to a length.
    Verify {
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Expected Lyndon word counts per length, comma-separated.
        #[arg(long, value_delimiter = ',')]
        expect_counts: Option<Vec<usize>>,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalError(_) | Error::UniquenessViolation { .. } => Failure::Check(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Check(format!("write failed: {e}"))
    }
}

type Outcome = Result<(), Failure>;

pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn execute(cli: &Cli, out: &mut impl Write) -> Outcome {
    let is_tree = matches!(cli.command, Command::Tree { .. });
    if cli.format == Format::Dot && !is_tree {
        return Err(Failure::Usage("--format dot is only available for tree".into()));
    }
    match &cli.command {
        Command::Compare { u, v, six } => {
            let alphabet = alphabet_for(cli, &[u, v])?;
            compare(cli.format, &alphabet.word(u)?, &alphabet.word(v)?, *six, out)
        }
        Command::Factorize { w } => factorize(cli.format, &alphabet_for(cli, &[w])?.word(w)?, out),
        Command::Pstd { w } => pstd(cli.format, &alphabet_for(cli, &[w])?.word(w)?, out),
        Command::Tree { w, kind } => tree(cli.format, &alphabet_for(cli, &[w])?.word(w)?, *kind, out),
        Command::Verify {
            max_len,
            jobs,
            expect_counts,
        } => {
            let alphabet = OrderedAlphabet::new(cli.alphabet.as_deref().unwrap_or("ab"))?;
            verify(cli.format, &alphabet, *max_len, *jobs, expect_counts.as_deref(), out)
        }
    }
}

fn alphabet_for(cli: &Cli, words: &[&String]) -> Result<Arc<OrderedAlphabet>, Failure> {
    match &cli.alphabet {
        Some(symbols) => Ok(OrderedAlphabet::new(symbols)?),
        None => {
            let all: String = words.iter().map(|w| w.as_str()).collect();
            if all.is_empty() {
                return Err(Error::EmptyWord.into());
            }
            Ok(OrderedAlphabet::natural(&all)?)
        }
    }
}

fn compare(format: Format, u: &Word, v: &Word, six: bool, out: &mut impl Write) -> Outcome {
    let c = omega_cmp(u, v)?;
    let conditions = if six { Some(six_conditions(u, v)?) } else { None };
    match format {
        Format::Structured => {
            let mut value = render::comparison_json(&c);
            if let Some(s) = &conditions {
                value["six_conditions"] = json!(s.as_array());
            }
            writeln!(out, "{value}")?;
        }
        _ => {
            writeln!(out, "{}", render::comparison_text(u, v, &c))?;
            if let Some(s) = &conditions {
                write!(out, "{}", render::six_conditions_text(s))?;
            }
        }
    }
    Ok(())
}

fn factorize(format: Format, w: &Word, out: &mut impl Write) -> Outcome {
    let f = lyndon_factorization(w)?;
    let mut problems = Vec::new();
    for factor in f.factors() {
        if !is_lyndon_suffix_omega(factor)? || !is_lyndon_prefix_omega(factor)? {
            problems.push(format!("factor {factor} fails the ω characterizations"));
        }
    }
    for pair in f.factors().windows(2) {
        if omega_cmp(&pair[0], &pair[1])?.is_less() {
            problems.push(format!("factors {} and {} increase", pair[0], pair[1]));
        }
    }
    let first = first_lyndon_factor(w)?;
    if &first != f.first() {
        problems.push(format!(
            "prefix scan gives first factor {first}, factorization gives {}",
            f.first()
        ));
    }
    let last = last_lyndon_factor(w)?;
    if &last != f.last() {
        problems.push(format!(
            "suffix scan gives last factor {last}, factorization gives {}",
            f.last()
        ));
    }
    match format {
        Format::Structured => {
            let factors: Vec<String> = f.factors().iter().map(Word::to_string).collect();
            let value = json!({ "factors": factors, "first": f.first().to_string(), "last": f.last().to_string() });
            writeln!(out, "{value}")?;
        }
        _ => {
            writeln!(out, "{f}")?;
            writeln!(out, "first: {}", f.first())?;
            writeln!(out, "last: {}", f.last())?;
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("cross-check failed: {}", problems.join("; "))))
    }
}

fn pstd(format: Format, w: &Word, out: &mut impl Write) -> Outcome {
    let p = prefix_standard_permutation(w)?;
    match format {
        Format::Structured => writeln!(out, "{}", json!({ "sigma": p.sigma, "inverse": p.inverse }))?,
        _ => {
            writeln!(out, "{}", render::permutation(&p.sigma))?;
            writeln!(out, "inverse: {}", render::permutation(&p.inverse))?;
        }
    }
    Ok(())
}

fn tree(format: Format, w: &Word, kind: TreeKind, out: &mut impl Write) -> Outcome {
    let t = match kind {
        TreeKind::Left => left_lyndon_tree(w)?,
        TreeKind::Right => right_lyndon_tree(w)?,
        TreeKind::Cartesian => left_cartesian_tree(w)?,
    };
    let counterpart = match kind {
        TreeKind::Left => Some(left_cartesian_tree(w)?),
        TreeKind::Cartesian => Some(left_lyndon_tree(w)?),
        TreeKind::Right => None,
    };
    let equal = counterpart.as_ref().map(|c| c == &t);
    match format {
        Format::Text => {
            writeln!(out, "{t}")?;
            if let Some(equal) = equal {
                let verdict = if equal { "equal" } else { "different" };
                writeln!(out, "left Lyndon tree and left Cartesian tree: {verdict}")?;
            }
        }
        Format::Structured => {
            let mut value = json!({ "tree": render::tree_json(&t) });
            if let Some(equal) = equal {
                value["trees_equal"] = json!(equal);
            }
            writeln!(out, "{value}")?;
        }
        Format::Dot => write!(out, "{}", render::tree_dot(&t))?,
    }
    match (equal, counterpart) {
        (Some(false), Some(c)) => Err(Failure::Check(format!(
            "left Lyndon tree and left Cartesian tree differ: {t} vs {c}"
        ))),
        _ => Ok(()),
    }
}

fn verify(
    format: Format,
    alphabet: &Arc<OrderedAlphabet>,
    max_len: usize,
    jobs: usize,
    expect_counts: Option<&[usize]>,
    out: &mut impl Write,
) -> Outcome {
    if max_len == 0 {
        return Err(Failure::Usage("--max-len must be at least 1".into()));
    }
    if jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let summary = sweep(alphabet, max_len, jobs)?;
    let counts_match = expect_counts.is_none_or(|expected| expected == summary.lyndon_per_length.as_slice());
    match format {
        Format::Structured => writeln!(out, "{}", verify_json(alphabet, max_len, &summary))?,
        _ => write!(out, "{}", verify_text(alphabet, max_len, &summary))?,
    }
    if let Some((name, word, detail)) = summary.first_failure() {
        return Err(Failure::Check(format!(
            "{} failures; first counterexample {word} in {name}: {detail}",
            summary.failures()
        )));
    }
    if !counts_match {
        let expected = expect_counts.unwrap_or_default();
        return Err(Failure::Check(format!(
            "Lyndon word counts {} differ from expected {}",
            csv(&summary.lyndon_per_length),
            csv(expected)
        )));
    }
    Ok(())
}

fn csv(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn verify_text(alphabet: &OrderedAlphabet, max_len: usize, summary: &SweepSummary) -> String {
    let symbols: String = alphabet.symbols().iter().collect();
    let mut text = format!(
        "alphabet {symbols}, lengths 1..={max_len}: {} words visited\n",
        summary.words_visited
    );
    let width = summary.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &summary.checks {
        text.push_str(&format!(
            "{:<width$}  passed {:>7}  failed {:>3}  n/a {:>7}\n",
            c.name, c.passed, c.failed, c.not_applicable
        ));
    }
    text.push_str(&format!(
        "lyndon words per length: {}\n",
        csv(&summary.lyndon_per_length)
    ));
    if summary.failures() == 0 {
        let total = summary.lyndon_total();
        let noun = if total == 1 { "word" } else { "words" };
        text.push_str(&format!("all checks pass; {total} Lyndon {noun} visited\n"));
    } else if let Some((name, word, detail)) = summary.first_failure() {
        text.push_str(&format!(
            "{} failures; first counterexample {word} in {name}: {detail}\n",
            summary.failures()
        ));
    }
    text
}

fn verify_json(alphabet: &OrderedAlphabet, max_len: usize, summary: &SweepSummary) -> serde_json::Value {
    let checks: Vec<_> = summary
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "passed": c.passed,
                "failed": c.failed,
                "not_applicable": c.not_applicable,
                "first_failure": c.first_failure.as_ref().map(|(w, d)| json!({ "word": w.to_string(), "detail": d })),
            })
        })
        .collect();
    json!({
        "alphabet": alphabet.symbols().iter().collect::<String>(),
        "max_len": max_len,
        "words_visited": summary.words_visited,
        "lyndon_per_length": summary.lyndon_per_length,
        "lyndon_total": summary.lyndon_total(),
        "checks": checks,
    })
}
