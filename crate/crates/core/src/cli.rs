//! The `tbshift` command line. Every path prints one JSON document with
//! sorted keys; the exit code carries the verdict.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{error::ErrorKind, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::verify_flow;
use crate::classify::{centralizer, decide_conjugacy, CentralizerVerdict, Verdict};
use crate::error::Error;
use crate::io::TripletFile;
use crate::selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

/// Seed for the `malleability` command's random samples.
const FLOW_SEED: u64 = 0x60;
const FLOW_SAMPLES: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "tbshift", version, about = "Exact algebra for twisted Bernoulli shifts")]
pub struct Cli {
    /// Emit JSON (the only format; accepted for scripts).
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a triplet file.
    Validate { path: PathBuf },
    /// Group data of the centralizer.
    Centralizer {
        path: PathBuf,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Decide conjugacy of two triplets.
    Conjugate {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Nondegeneracy of the cocycle.
    Factor { path: PathBuf },
    /// The commutator bicharacter `μ*μ`.
    Bicharacter { path: PathBuf },
    /// Exact checks of the malleability flow for a finite triplet.
    Malleability { path: PathBuf },
    /// Run the property suites.
    Selftest {
        #[arg(long)]
        suite: Option<String>,
        /// Orders for the malleability suite (repeatable).
        #[arg(long = "q")]
        q: Vec<u64>,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code together with the text to print.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return (EXIT_OK, e.to_string());
        }
        Err(e) => {
            let v = json!({"ok": false, "error": "usage", "message": e.to_string().trim_end()});
            return (EXIT_INVALID, render(&v));
        }
    };
    let (code, v) = execute(&cli.command);
    (code, render(&v))
}

fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn error_json(e: &Error) -> Value {
    match e {
        Error::Invalid { violation, detail } => {
            json!({"ok": false, "violation": violation.as_str(), "detail": detail})
        }
        Error::Parse { path, msg } => json!({"ok": false, "error": "parse", "path": path, "message": msg}),
        Error::Io(io) => json!({"ok": false, "error": "io", "message": io.to_string()}),
        Error::Unsupported(_) | Error::Degenerate { .. } => {
            json!({"ok": false, "error": "unsupported", "message": e.to_string()})
        }
        other => json!({"ok": false, "error": "invalid", "message": other.to_string()}),
    }
}

fn load(path: &PathBuf) -> Result<TripletFile, (i32, Value)> {
    TripletFile::load(path).map_err(|e| (EXIT_INVALID, error_json(&e)))
}

/// Runs a parsed command.
pub fn execute(cmd: &Command) -> (i32, Value) {
    match dispatch(cmd) {
        Ok(out) | Err(out) => out,
    }
}

fn dispatch(cmd: &Command) -> Result<(i32, Value), (i32, Value)> {
    let fail = |e: Error| (EXIT_INVALID, error_json(&e));
    Ok(match cmd {
        Command::Validate { path } => {
            let f = load(path)?;
            let g = f.triplet.group();
            (EXIT_OK, json!({"ok": true, "label": f.label, "group": g.as_ref(), "order": g.order()}))
        }
        Command::Centralizer { path, bound } => {
            let f = load(path)?;
            let r = centralizer(&f.triplet, *bound).map_err(fail)?;
            let code = if r.verdict == CentralizerVerdict::Unknown { EXIT_UNKNOWN } else { EXIT_OK };
            (code, r.to_json())
        }
        Command::Conjugate { a, b, bound } => {
            let (fa, fb) = (load(a)?, load(b)?);
            let r = decide_conjugacy(&fa.triplet, &fb.triplet, *bound).map_err(fail)?;
            let code = match r.verdict {
                Verdict::Yes => EXIT_OK,
                Verdict::No => EXIT_NO,
                Verdict::Unknown => EXIT_UNKNOWN,
            };
            (code, r.to_json())
        }
        Command::Factor { path } => {
            let f = load(path)?;
            let v = match f.triplet.mu().degeneracy_witness() {
                None => json!({"nondegenerate": true}),
                Some(w) => json!({"nondegenerate": false, "witness_g": w}),
            };
            (EXIT_OK, v)
        }
        Command::Bicharacter { path } => {
            let f = load(path)?;
            (EXIT_OK, f.triplet.mu().star_bicharacter().to_json())
        }
        Command::Malleability { path } => {
            let f = load(path)?;
            let r = verify_flow(f.triplet.base(), FLOW_SEED, FLOW_SAMPLES).map_err(fail)?;
            let code = if r.ok { EXIT_OK } else { EXIT_NO };
            (
                code,
                json!({"ok": r.ok, "checked": r.checked, "counterexamples": r.counterexamples, "samples": FLOW_SAMPLES}),
            )
        }
        Command::Selftest { suite, q } => {
            let mut opts = selftest::Options::default();
            if !q.is_empty() {
                opts.qs = q.clone();
            }
            let r = selftest::run(suite.as_deref(), &opts).map_err(fail)?;
            (if r.ok { EXIT_OK } else { EXIT_NO }, r.to_json())
        }
    })
}
