use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use regauto::oracle::oracle_containment;
use regauto::{
    check_containment, check_equivalent, check_unambiguous, check_universal, emptiness, CollapseRule,
    ContainmentOptions, ContainmentReport, DataWord, RegisterAutomaton, Unambiguity, Verdict,
};
use serde::Serialize;

use crate::document::load_automaton;
use crate::word::{format_word, parse_word};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "regauto", version, about = "Decide properties of register automata")]
struct Cli {
    /// Print a JSON result record instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct EngineArgs {
    /// Longest counterexample the witness search tries.
    #[arg(long, default_value_t = 8)]
    witness_cap: usize,
    /// Disable collapsing of indistinguishable valuations.
    #[arg(long)]
    no_collapse: bool,
    /// Give up after expanding this many abstract configurations.
    #[arg(long, default_value_t = 1_000_000)]
    node_budget: usize,
    /// Do not check that the right-hand automaton is unambiguous. UNSOUND
    /// when it is not.
    #[arg(long)]
    unsafe_skip_ura_check: bool,
}

impl EngineArgs {
    fn options(&self) -> ContainmentOptions {
        ContainmentOptions {
            witness_cap: self.witness_cap,
            collapse: if self.no_collapse {
                CollapseRule::Off
            } else {
                CollapseRule::Indistinguishable
            },
            node_budget: self.node_budget,
            skip_unambiguity_check: self.unsafe_skip_ura_check,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate an automaton document.
    Validate { file: PathBuf },
    /// Test whether a word is accepted.
    Member {
        file: PathBuf,
        /// Whitespace-separated `label:datum` letters.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Test whether the language is empty.
    Empty { file: PathBuf },
    /// Test whether every word has at most one accepting run.
    Unambiguous { file: PathBuf },
    /// Decide L(A) ⊆ L(B) for unambiguous B.
    Contains {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Decide whether an unambiguous automaton accepts every word.
    Universal {
        b: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Decide L(A) = L(B) for unambiguous A and B.
    Equivalent {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Search for a counterexample to L(A) ⊆ L(B) by enumerating words.
    OracleContains {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
}

/// Machine-readable result record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub verdict: &'static str,
    pub witness: Option<String>,
    pub witness_verified: Option<bool>,
    pub nodes_explored: Option<usize>,
    pub peak_valuations: Option<usize>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    holds: bool,
    #[serde(skip)]
    detail: Option<String>,
}

impl Outcome {
    fn new(holds: bool, verdict: &'static str) -> Self {
        Outcome {
            verdict,
            witness: None,
            witness_verified: None,
            nodes_explored: None,
            peak_valuations: None,
            elapsed_ms: 0,
            holds,
            detail: None,
        }
    }

    fn with_witness(mut self, w: Option<&DataWord>, verified: bool) -> Self {
        self.witness = w.map(format_word);
        self.witness_verified = Some(verified);
        self
    }

    fn with_report(mut self, r: &ContainmentReport) -> Self {
        self.nodes_explored = Some(r.nodes_explored);
        self.peak_valuations = Some(r.peak_valuations);
        self
    }

    fn render_text(&self) -> String {
        let mut out = self.verdict.to_string();
        if let Some(d) = &self.detail {
            out.push_str(&format!(" ({d})"));
        }
        out.push('\n');
        if let Some(w) = &self.witness {
            out.push_str(&format!("witness: \"{w}\""));
            if self.witness_verified == Some(true) {
                out.push_str(" (verified)");
            }
            out.push('\n');
        } else if self.witness_verified == Some(false) && !self.holds {
            out.push_str("witness: none found within the cap\n");
        }
        if let (Some(n), Some(p)) = (self.nodes_explored, self.peak_valuations) {
            out.push_str(&format!("nodes explored: {n}, peak valuations: {p}\n"));
        }
        out
    }
}

fn containment_outcome(r: &ContainmentReport, yes: &'static str, no: &'static str) -> Outcome {
    match &r.verdict {
        Verdict::Contained => Outcome::new(true, yes).with_report(r),
        Verdict::NotContained {
            witness,
            witness_verified,
            ..
        } => Outcome::new(false, no)
            .with_witness(witness.as_ref(), *witness_verified)
            .with_report(r),
    }
}

fn execute(command: &Command) -> Result<Outcome, String> {
    let load = |p: &PathBuf| load_automaton(p).map_err(|e| e.to_string());
    let engine = |e: regauto::Error| e.to_string();
    Ok(match command {
        Command::Validate { file } => {
            let aut = load(file)?;
            let mut o = Outcome::new(true, "valid");
            o.detail = Some(summary(&aut));
            o
        }
        Command::Member { file, word } => {
            let aut = load(file)?;
            let w = parse_word(word).map_err(|e| format!("--word: {e}"))?;
            if aut.membership(&w).map_err(engine)? {
                Outcome::new(true, "member")
            } else {
                Outcome::new(false, "not_member")
            }
        }
        Command::Empty { file } => match emptiness(&load(file)?) {
            None => Outcome::new(true, "empty"),
            Some(w) => Outcome::new(false, "nonempty").with_witness(Some(&w), true),
        },
        Command::Unambiguous { file } => match check_unambiguous(&load(file)?) {
            Unambiguity::Unambiguous => Outcome::new(true, "unambiguous"),
            Unambiguity::Ambiguous { witness } => Outcome::new(false, "ambiguous").with_witness(Some(&witness), true),
        },
        Command::Contains { a, b, engine: opts } => {
            let r = check_containment(&load(a)?, &load(b)?, &opts.options()).map_err(engine)?;
            containment_outcome(&r, "contained", "not_contained")
        }
        Command::Universal { b, engine: opts } => {
            let r = check_universal(&load(b)?, &opts.options()).map_err(engine)?;
            containment_outcome(&r, "universal", "not_universal")
        }
        Command::Equivalent { a, b, engine: opts } => {
            let (ab, ba) = check_equivalent(&load(a)?, &load(b)?, &opts.options()).map_err(engine)?;
            let failing = [(&ab, "L(A) ⊄ L(B)"), (&ba, "L(B) ⊄ L(A)")]
                .into_iter()
                .find(|(r, _)| !r.verdict.holds());
            let mut o = match failing {
                None => Outcome::new(true, "equivalent"),
                Some((r, side)) => {
                    let mut o = containment_outcome(r, "", "not_equivalent");
                    o.detail = Some(side.to_string());
                    o
                }
            };
            o.nodes_explored = Some(ab.nodes_explored + ba.nodes_explored);
            o.peak_valuations = Some(ab.peak_valuations.max(ba.peak_valuations));
            o
        }
        Command::OracleContains { a, b, max_len } => {
            match oracle_containment(&load(a)?, &load(b)?, *max_len).map_err(engine)? {
                None => {
                    let mut o = Outcome::new(true, "no_counterexample");
                    o.detail = Some(format!("words up to length {max_len}"));
                    o
                }
                Some(w) => Outcome::new(false, "not_contained").with_witness(Some(&w), true),
            }
        }
    })
}

fn summary(aut: &RegisterAutomaton) -> String {
    format!(
        "{} locations, {} edges, {} registers, {} symbols",
        aut.location_count(),
        aut.edges().len(),
        aut.register_count(),
        aut.alphabet().len()
    )
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_ERROR
            } else {
                let _ = write!(out, "{text}");
                EXIT_HOLDS
            };
        }
    };
    let start = Instant::now();
    let mut outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_ERROR;
        }
    };
    outcome.elapsed_ms = start.elapsed().as_millis() as u64;
    let written = if cli.json {
        writeln!(out, "{}", serde_json::to_string(&outcome).expect("outcome serializes"))
    } else {
        write!(out, "{}", outcome.render_text())
    };
    if written.is_err() {
        return EXIT_ERROR;
    }
    if outcome.holds {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

/// [`run`] on the process's standard streams.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
