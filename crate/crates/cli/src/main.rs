//! `qtcat`: command-line front end for rational Dyck paths and `C(3, n)`.
//!
//! Exit codes: 0 success, 1 a verified property failed, 2 usage or validation error.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qt_catalan::verify::{self, Statistics, VerifyConfig};
use qt_catalan::{
    area, catalan3_closed_form, catalan_bruteforce, dinv, enumerate_paths, involution,
    lattice_rank_word, mark_from_path, omega, stat_triple, DyckPath, Error, MarkedRankWord,
    QtPolynomial, RankEntry, StatTriple,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "qtcat",
    version,
    about = "Rational (m,n)-Dyck paths and q,t-Catalan polynomials"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Closed,
}

#[derive(Subcommand)]
enum Command {
    /// List every (m,n)-Dyck path as a step word.
    Enumerate { m: usize, n: usize },
    /// Statistics of a path given as an N/E step word.
    Stats { path: String },
    /// Marked rank word of a (3,n)-path, or the unmarked word of L(3,n) with --lattice.
    Rankword {
        #[arg(required_unless_present = "lattice", conflicts_with = "lattice")]
        path: Option<String>,
        #[arg(long, value_name = "N")]
        lattice: Option<usize>,
    },
    /// Rebuild the rank word and path with (area, skips, dinv) = (A, S, D).
    Omega { a: usize, s: usize, d: usize },
    /// The q,t-Catalan polynomial C(m,n).
    Poly {
        m: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
    },
    /// Image of a (3,n)-path under the area/dinv involution.
    Bijection { path: String },
    /// The complementary (n,m)-path.
    Transpose { path: String },
    /// Run the exhaustive invariant suite.
    Verify {
        /// Largest n for the (3,n) checks.
        #[arg(long, default_value_t = 31)]
        max_n: usize,
        /// Largest m+n for the general (m,n) checks.
        #[arg(long, default_value_t = 16)]
        max_mn: usize,
        /// Replace dinv by dinv + 1 to exercise the failure path.
        #[arg(long, hide = true)]
        perturb_dinv: bool,
    },
}

enum Failure {
    Invalid(Error),
    Property,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

#[derive(Serialize)]
struct WordJson<'a> {
    n: usize,
    text: String,
    entries: &'a [RankEntry],
}

impl<'a> From<&'a MarkedRankWord> for WordJson<'a> {
    fn from(w: &'a MarkedRankWord) -> Self {
        WordJson {
            n: w.n(),
            text: w.to_string(),
            entries: w.entries(),
        }
    }
}

#[derive(Serialize)]
struct PathJson {
    path: String,
    east_heights: Vec<usize>,
}

impl From<&DyckPath> for PathJson {
    fn from(p: &DyckPath) -> Self {
        PathJson {
            path: p.steps(),
            east_heights: p.east_heights().to_vec(),
        }
    }
}

#[derive(Serialize)]
struct StatsJson<'a> {
    path: String,
    m: usize,
    n: usize,
    area: usize,
    dinv: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    skips: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank_word: Option<WordJson<'a>>,
}

fn json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("output serializes") + "\n"
}

fn parse(path: &str) -> Result<DyckPath, Error> {
    DyckPath::parse(path)
}

fn stats(path: &str, format: Format) -> Result<String, Failure> {
    let p = parse(path)?;
    let word = if p.m() == 3 {
        Some(mark_from_path(&p)?)
    } else {
        None
    };
    let skips = word.as_ref().map(MarkedRankWord::count_skips);
    let report = StatsJson {
        path: p.steps(),
        m: p.m(),
        n: p.n(),
        area: area(&p),
        dinv: dinv(&p),
        skips,
        rank_word: word.as_ref().map(WordJson::from),
    };
    if format == Format::Json {
        return Ok(json(&report));
    }
    let mut out = String::new();
    writeln!(out, "path: {}", report.path).unwrap();
    writeln!(out, "m: {}", report.m).unwrap();
    writeln!(out, "n: {}", report.n).unwrap();
    writeln!(out, "area: {}", report.area).unwrap();
    writeln!(out, "dinv: {}", report.dinv).unwrap();
    if let (Some(s), Some(w)) = (skips, &word) {
        writeln!(out, "skips: {s}").unwrap();
        writeln!(out, "rank_word: {w}").unwrap();
    }
    Ok(out)
}

fn word_output(w: &MarkedRankWord, format: Format) -> String {
    match format {
        Format::Json => json(&WordJson::from(w)),
        Format::Text => format!("{w}\n"),
    }
}

fn triple_json(t: StatTriple) -> serde_json::Value {
    serde_json::to_value(t).expect("triple serializes")
}

fn run(command: Command, format: Format) -> Result<String, Failure> {
    match command {
        Command::Enumerate { m, n } => {
            let paths: Vec<DyckPath> = enumerate_paths(m, n)?.collect();
            Ok(match format {
                Format::Json => json(&paths.iter().map(PathJson::from).collect::<Vec<_>>()),
                Format::Text => paths.iter().map(|p| format!("{p}\n")).collect(),
            })
        }
        Command::Stats { path } => stats(&path, format),
        Command::Rankword { path, lattice } => {
            let word = match (path, lattice) {
                (_, Some(n)) => lattice_rank_word(n)?,
                (Some(path), None) => mark_from_path(&parse(&path)?)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            Ok(word_output(&word, format))
        }
        Command::Omega { a, s, d } => {
            let word = omega(a, s, d)?;
            let p = word.to_path()?;
            Ok(match format {
                Format::Json => json(&serde_json::json!({
                    "triple": triple_json(StatTriple::new(a, s, d)),
                    "rank_word": WordJson::from(&word),
                    "path": PathJson::from(&p),
                })),
                Format::Text => format!("word: {word}\npath: {p}\n"),
            })
        }
        Command::Poly { m, n, method } => {
            let poly: QtPolynomial = match method {
                Method::Brute => catalan_bruteforce(m, n)?,
                Method::Closed if m != 3 => return Err(Error::UnsupportedM(m).into()),
                Method::Closed => catalan3_closed_form(n)?,
            };
            Ok(match format {
                Format::Json => json(&poly.terms()),
                Format::Text => format!("{poly}\n"),
            })
        }
        Command::Bijection { path } => {
            let p = parse(&path)?;
            let image = involution(&p)?;
            let (t, ti) = (stat_triple(&p)?, stat_triple(&image)?);
            Ok(match format {
                Format::Json => json(&serde_json::json!({
                    "path": p.steps(),
                    "triple": triple_json(t),
                    "image": image.steps(),
                    "image_triple": triple_json(ti),
                })),
                Format::Text => {
                    format!("path: {p}\ntriple: {t}\nimage: {image}\nimage_triple: {ti}\n")
                }
            })
        }
        Command::Transpose { path } => {
            let t = parse(&path)?.transpose();
            Ok(match format {
                Format::Json => json(&PathJson::from(&t)),
                Format::Text => format!("{t}\n"),
            })
        }
        Command::Verify {
            max_n,
            max_mn,
            perturb_dinv,
        } => verify_command(max_n, max_mn, perturb_dinv, format),
    }
}

fn verify_command(
    max_n: usize,
    max_mn: usize,
    perturb_dinv: bool,
    format: Format,
) -> Result<String, Failure> {
    let mut stats = Statistics::default();
    if perturb_dinv {
        stats.dinv = |p| dinv(p) + 1;
    }
    let report = verify::run(&VerifyConfig {
        max_n,
        max_mn,
        stats,
    });
    let out = match format {
        Format::Json => json(&serde_json::json!({
            "passed": report.passed(),
            "failed": report.failed(),
            "checks": report.checks,
        })),
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                match &c.counterexample {
                    None => writeln!(out, "PASS {} ({} cases)", c.name, c.cases),
                    Some(why) => writeln!(out, "FAIL {}: {why}", c.name),
                }
                .unwrap();
            }
            writeln!(
                out,
                "{} passed, {} failed",
                report.passed(),
                report.failed()
            )
            .unwrap();
            out
        }
    };
    print!("{out}");
    if let Some(first) = report.first_failure() {
        eprintln!(
            "error: {} failed: {}",
            first.name,
            first.counterexample.as_deref().unwrap_or_default()
        );
        return Err(Failure::Property);
    }
    Ok(String::new())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, cli.format) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Property) => ExitCode::from(1),
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
