use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use monideal::asymptotics::{self, Status, DEFAULT_K};
use monideal::corpus::Corpus;
use monideal::decomposition::{self, DEFAULT_REDUCTION_SEARCH};
use monideal::hilbert;
use monideal::io;
use monideal::resolution::{self, Caps};
use monideal::{Error, FieldChar, MonomialIdeal};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 3;

/// Invariants of monomial ideals and their powers.
#[derive(Parser, Debug)]
#[command(name = "monideal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest power in sweeps.
    #[arg(long = "K", global = true, default_value_t = DEFAULT_K,
          value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,

    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", global = true, default_value = "0", value_parser = parse_char)]
    field: FieldChar,

    /// Cap on the number of lcm lattice elements.
    #[arg(long, global = true)]
    max_lattice: Option<usize>,

    /// Cap on the number of minimal generators.
    #[arg(long, global = true)]
    max_gens: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Structured)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Structured,
    Tabular,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded Betti numbers of A/I.
    Betti { ideal: PathBuf },
    /// Hilbert numerator, dimension, height and multiplicity.
    Hilbert { ideal: PathBuf },
    /// e(A/I), E(I) and the Assh data behind them.
    Mult { ideal: PathBuf },
    /// Minimal primes and Assh(I).
    Decompose { ideal: PathBuf },
    /// Whether J is a reduction of I.
    Reduction {
        j: PathBuf,
        i: PathBuf,
        #[arg(long, default_value_t = DEFAULT_REDUCTION_SEARCH)]
        m_max: u32,
    },
    /// Multiplicity against the Betti bounds U(I), L(I).
    Bounds { ideal: PathBuf },
    /// Invariants of I^k for k = 1..K.
    Sweep { ideal: PathBuf },
    /// Check the asymptotic bound e(A/I^k) <= U(I^k).
    Verify { ideal: PathBuf },
    /// The bundled corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusAction {
    /// List entries with their tags.
    List {
        #[arg(long, default_value = "corpus")]
        dir: PathBuf,
    },
    /// Verify every entry and compare against its expected values.
    Verify {
        #[arg(long, default_value = "corpus")]
        dir: PathBuf,
    },
}

fn parse_char(s: &str) -> Result<FieldChar, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Report {
    structured: Value,
    tabular: String,
    code: u8,
}

impl Report {
    fn ok(structured: Value, tabular: String) -> Self {
        Report {
            structured,
            tabular,
            code: 0,
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_) | Error::Domain(_) | Error::ArityMismatch { .. } => EXIT_USAGE,
        Error::Resource { .. }
        | Error::Overflow
        | Error::NonStabilization { .. }
        | Error::FitFailure { .. }
        | Error::Internal(_) => EXIT_INCONCLUSIVE,
    }
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Pass => 0,
        Status::Violation => EXIT_VIOLATION,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn load(path: &Path, what: &str) -> monideal::Result<MonomialIdeal> {
    let parsed = io::read_ideal(path)?;
    if parsed.non_minimal_input {
        eprintln!(
            "warning: {}: generators are not minimal, using {}",
            path.display(),
            parsed.ideal
        );
    }
    parsed.ideal.require_proper_nonzero(what)?;
    Ok(parsed.ideal)
}

fn caps(cli: &Cli) -> Caps {
    let mut caps = Caps::default();
    if let Some(v) = cli.max_lattice {
        caps.max_lattice = v;
    }
    if let Some(v) = cli.max_gens {
        caps.max_gens = v;
    }
    caps
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn run(cli: &Cli) -> monideal::Result<Report> {
    let caps = caps(cli);
    let field = cli.field;
    match &cli.command {
        Command::Betti { ideal } => {
            let ideal = load(ideal, "betti")?;
            let table = resolution::betti_table(&ideal, field, &caps)?;
            Ok(Report::ok(to_value(&table.report()), table.to_string()))
        }
        Command::Hilbert { ideal } => {
            let ideal = load(ideal, "hilbert")?;
            let data = hilbert::hilbert_data(&ideal)?;
            let mut text = format!(
                "numerator: {}\ndim: {}\nheight: {}\ne: {}\n",
                data.numerator.display_poly(),
                data.d,
                data.c,
                data.e
            );
            if let Some(len) = data.length {
                let _ = writeln!(text, "length: {len}");
            }
            Ok(Report::ok(to_value(&data), text))
        }
        Command::Mult { ideal } => {
            let ideal = load(ideal, "mult")?;
            let e = hilbert::multiplicity(&ideal)?;
            let assh = decomposition::assh_data(&ideal)?;
            let mut text = format!("c: {}\ne: {e}\nE: {}\n", assh.height, assh.e_invariant);
            for entry in &assh.entries {
                let _ = writeln!(
                    text,
                    "{}: length {}, multiplicity {}",
                    entry.prime.display(ideal.ring()),
                    entry.local_length,
                    entry.local_multiplicity
                );
            }
            let value = json!({
                "c": assh.height,
                "e": e,
                "E": assh.e_invariant,
                "assh": to_value(&assh),
            });
            Ok(Report::ok(value, text))
        }
        Command::Decompose { ideal } => {
            let ideal = load(ideal, "decompose")?;
            let minimal = decomposition::minimal_primes(&ideal)?;
            let assh = decomposition::assh(&ideal)?;
            let names = |ps: &[decomposition::VariablePrime]| -> Vec<String> {
                ps.iter()
                    .map(|p| p.display(ideal.ring()).to_string())
                    .collect()
            };
            let (min_names, assh_names) = (names(&minimal), names(&assh));
            let text = format!(
                "minimal primes: {}\nAssh: {}\n",
                min_names.join(", "),
                assh_names.join(", ")
            );
            let value = json!({
                "minimalPrimes": min_names,
                "assh": assh_names,
                "height": assh.first().map_or(0, |p| p.height()),
            });
            Ok(Report::ok(value, text))
        }
        Command::Reduction { j, i, m_max } => {
            let j = load(j, "reduction")?;
            let i = load(i, "reduction")?;
            let outcome = decomposition::is_reduction(&j, &i, *m_max)?;
            let text = match outcome.witness {
                Some(m) => format!("reduction: true (m = {m})\n"),
                None => format!("reduction: false (no witness for m <= {m_max})\n"),
            };
            Ok(Report::ok(to_value(&outcome), text))
        }
        Command::Bounds { ideal } => {
            let ideal = load(ideal, "bounds")?;
            let data = hilbert::hilbert_data(&ideal)?;
            let table = resolution::betti_table(&ideal, field, &caps)?;
            let (upper, lower) = table.bounds(data.c)?;
            let e = monideal::Rational::from_integer(data.e.into());
            let holds = lower <= e && e <= upper;
            let text = format!(
                "c: {}\ne: {}\nU: {upper}\nL: {lower}\nM: {:?}\nm: {:?}\nL <= e <= U: {holds}\n",
                data.c,
                data.e,
                table.max_shifts(),
                table.min_shifts()
            );
            let value = json!({
                "fieldChar": field,
                "c": data.c,
                "e": data.e,
                "U": upper.to_string(),
                "L": lower.to_string(),
                "M": table.max_shifts(),
                "m": table.min_shifts(),
                "boundsHold": holds,
            });
            Ok(Report::ok(value, text))
        }
        Command::Sweep { ideal } => {
            let ideal = load(ideal, "sweep")?;
            let sweep = asymptotics::power_sweep(&ideal, cli.k, field, &caps)?;
            let mut text = format!(
                "c: {}\n k  gens  p  reg      e      U      L  e/U\n",
                sweep.c
            );
            for r in &sweep.records {
                let _ = writeln!(
                    text,
                    "{:>2} {:>5} {:>2} {:>4} {:>6} {:>6} {:>6}  {}",
                    r.k, r.num_gens, r.p, r.reg, r.e, r.upper, r.lower, r.ratio
                );
            }
            let mut code = 0;
            if let Some(t) = &sweep.truncated {
                let _ = writeln!(text, "truncated at k = {}: {}", t.k, t.error);
                code = EXIT_INCONCLUSIVE;
            }
            Ok(Report {
                structured: to_value(&sweep),
                tabular: text,
                code,
            })
        }
        Command::Verify { ideal } => {
            let ideal = load(ideal, "verify")?;
            let verdict = asymptotics::verify_theorem(&ideal, cli.k, field, &caps)?;
            let mut text = String::new();
            let _ = writeln!(text, "ideal: {ideal}");
            let _ = writeln!(text, "c: {}", verdict.c);
            if let Some(fit) = &verdict.fit {
                let _ = writeln!(
                    text,
                    "reg(I^k) = {}k + {} for k >= {} (validated: {})",
                    fit.q, fit.r, fit.k0, fit.validated
                );
            }
            if let Some(e) = verdict.e_invariant {
                let _ = writeln!(text, "E: {e}");
            }
            if let Some(l) = &verdict.limit {
                let _ = writeln!(text, "limit: {l}");
            }
            for note in &verdict.notes {
                let _ = writeln!(text, "note: {note}");
            }
            let _ = writeln!(text, "verdict: {}", status_name(verdict.verdict));
            Ok(Report {
                structured: to_value(&verdict),
                tabular: text,
                code: status_code(verdict.verdict),
            })
        }
        Command::Corpus { action } => match action {
            CorpusAction::List { dir } => {
                let corpus = Corpus::load(dir)?;
                let mut text = String::new();
                for e in &corpus.manifest.entries {
                    let _ = writeln!(text, "{:<24} {:<28} {}", e.name, e.file, e.tags.join(","));
                }
                Ok(Report::ok(to_value(&corpus.manifest), text))
            }
            CorpusAction::Verify { dir } => corpus_verify(dir, cli.k, field, &caps),
        },
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Violation => "VIOLATION",
        Status::Inconclusive => "INCONCLUSIVE",
    }
}

fn corpus_verify(dir: &Path, k: u32, field: FieldChar, caps: &Caps) -> monideal::Result<Report> {
    let corpus = Corpus::load(dir)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut code = 0;
    for entry in &corpus.manifest.entries {
        let check = corpus.check(entry, k, field, caps)?;
        let status = check.report.verdict;
        let entry_code = if !check.mismatches.is_empty() {
            EXIT_VIOLATION
        } else {
            status_code(status)
        };
        // A violation outranks an inconclusive result.
        code = match (code, entry_code) {
            (EXIT_VIOLATION, _) | (_, EXIT_VIOLATION) => EXIT_VIOLATION,
            (a, b) => a.max(b),
        };
        let limit = check.report.limit.as_ref().map(|l| l.to_string());
        let _ = writeln!(
            text,
            "{:<12} {:<24} limit {}",
            if check.passed() {
                "PASS"
            } else if entry_code == EXIT_VIOLATION {
                "FAIL"
            } else {
                status_name(status)
            },
            check.name,
            limit.as_deref().unwrap_or("-")
        );
        for m in &check.mismatches {
            let _ = writeln!(text, "  mismatch: {m}");
        }
        rows.push(json!({
            "name": check.name,
            "verdict": status,
            "limit": limit,
            "mismatches": check.mismatches,
        }));
    }
    Ok(Report {
        structured: json!({ "entries": rows }),
        tabular: text,
        code,
    })
}

fn emit(cli: &Cli, report: &Report) -> std::io::Result<()> {
    let body = match cli.format {
        Format::Structured => {
            serde_json::to_string_pretty(&report.structured).expect("plain data serializes") + "\n"
        }
        Format::Tabular => report.tabular.clone(),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            if let Err(err) = emit(&cli, &report) {
                eprintln!("error: cannot write report: {err}");
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(report.code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
