//! The `amoeba` command line: one subcommand per operation plus `check`,
//! which runs the seeded verification suites.
//!
//! Exit status is 0 when every produced record passes, 1 when a record
//! fails, is infeasible or is not found (or the input violates an
//! operation's precondition), and 2 on usage and parse errors.

mod report;
mod suites;

use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

pub use report::{digest, Format, Outcome, Record, Report};
pub use suites::{run_suite, Suite};

use crate::amoeba::{
    app_witness, aprime_clauses, densify_aprime, densify_app, h_label, meet_same_stem, phi_embed, projection_search,
    LabelFn, MeetOutcome, ProjectionOutcome, StemCondition,
};
use crate::cantor::ClopenSet;
use crate::coding::{b_step, b_tail, cover_witness, enum_seq, seq_code, CohenSeq, FinSeq, FnRep};
use crate::text::ParseError;

#[derive(Parser, Debug)]
#[command(name = "amoeba", version, about = "Exact finite combinatorics around Amoeba forcing")]
struct Cli {
    /// Seed for the randomized suites; echoed in every report.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Depth bound: stem extensions in the hypothesis checks of `check aux`.
    #[arg(long, global = true)]
    depth: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Label rule: `v2` (2-adic valuation of i+1) or an FnRep.
    #[arg(long = "f", global = true, default_value = "v2")]
    f: LabelFn,
    /// Level budget for `project`.
    #[arg(long, global = true, default_value_t = 16)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical antichain of a clopen set.
    Canon { set: String },
    /// Exact measure of a clopen set.
    Measure { set: String },
    /// The stem condition of an amoeba set, stem depth from the freeze rule.
    Embed { set: String },
    /// A dense strengthening of a stem condition.
    Densify {
        cond: String,
        #[arg(long, value_enum, default_value_t = DensifyMode::Aprime)]
        mode: DensifyMode,
    },
    /// The A'' window of a stem condition.
    Window { cond: String },
    /// The Cohen label of an A'' condition.
    Label { cond: String },
    /// Meet of stem conditions sharing a stem.
    Meet {
        #[arg(required = true)]
        conds: Vec<String>,
    },
    /// Strengthen a condition until its label extends a target.
    Project { cond: String, target: String },
    /// The finite sequence with a given index.
    Enum { n: String },
    /// The index of a finite sequence.
    Code { seq: String },
    /// Covering witness for 2^ell ground reals below a Cohen condition.
    Cover {
        ell: usize,
        s: String,
        #[arg(required = true)]
        xs: Vec<String>,
    },
    /// The interval B^n_{x,y}.
    Bstep { x: String, y: String, n: usize },
    /// The union of B^k_{x,y} over n < k <= N.
    Btail { x: String, y: String, n: usize, big_n: usize },
    /// Run a verification suite.
    Check {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DensifyMode {
    Aprime,
    App,
}

/// Usage problems, rendered with the grammar of the offending argument.
struct UsageError(String);

fn usage(arg: &str, grammar: &str, e: impl std::fmt::Display) -> UsageError {
    UsageError(format!("error: invalid argument {arg:?}: {e}\nexpected {grammar}\n"))
}

const CLOPEN: &str = "a clopen set: comma-separated binary strings such as 00,010 (\"-\" for empty, \"e\" for the empty string)";
const STEM: &str = "a stem condition <depth>|<clopen set> such as 4|00,010 with measure below 1/2";
const FN: &str = "a function <table>;<tail> such as 1,2;const:0 or ;id+3";
const SEQ: &str = "a finite sequence of naturals such as 3,0,7 (\"()\" for empty)";

/// Read `@path` arguments from disk; pass everything else through.
fn arg_text(raw: &str) -> Result<String, UsageError> {
    match raw.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| UsageError(format!("error: cannot read {path}: {e}\n"))),
        None => Ok(raw.to_string()),
    }
}

fn parse_arg<T: FromStr<Err = ParseError>>(raw: &str, grammar: &str) -> Result<T, UsageError> {
    let text = arg_text(raw)?;
    text.parse().map_err(|e| usage(raw, grammar, e))
}

fn parse_clopen(raw: &str) -> Result<(ClopenSet, bool), UsageError> {
    let text = arg_text(raw)?;
    ClopenSet::parse_reporting(&text).map_err(|e| usage(raw, CLOPEN, e))
}

/// Run the command line `args` (without the program name). Returns the
/// exit status and everything that should be printed.
pub fn run<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("amoeba".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(Output::Report(report)) => (exit_code(&report), report.emit(cli.format)),
        Ok(Output::Single { line, report }) => {
            let text = match cli.format {
                Format::Text => format!("{line}\n"),
                Format::Json => report.emit(Format::Json),
            };
            (exit_code(&report), text)
        }
        Ok(Output::Domain(msg)) => (1, format!("error: {msg}\n")),
        Err(UsageError(msg)) => (2, msg),
    }
}

fn exit_code(report: &Report) -> i32 {
    if report.all_pass() {
        0
    } else {
        1
    }
}

enum Output {
    Report(Report),
    /// One operation: text mode prints only `line`.
    Single { line: String, report: Report },
    /// The input parsed but violates the operation's precondition.
    Domain(String),
}

struct OpResult {
    line: String,
    record: Record,
}

fn dispatch(cli: &Cli) -> Result<Output, UsageError> {
    if let Command::Check { suite } = &cli.command {
        let depth = cli.depth.unwrap_or(2);
        return Ok(Output::Report(run_suite(*suite, cli.seed, depth)));
    }
    match operation(cli)? {
        Ok(OpResult { line, record }) => {
            let mut report = Report::new(cli.seed);
            report.push(record);
            Ok(Output::Single { line, report })
        }
        Err(msg) => Ok(Output::Domain(msg)),
    }
}

fn operation(cli: &Cli) -> Result<Result<OpResult, String>, UsageError> {
    let args = command_inputs(&cli.command);
    let rec = |name: &str, outcome: Outcome| Record::new(name, &args, outcome);
    let done = |line: String, record: Record| Ok(Ok(OpResult { line, record }));
    match &cli.command {
        Command::Canon { set } => {
            let (s, canonical) = parse_clopen(set)?;
            done(s.to_string(), rec("canon", Outcome::Pass).with("set", &s).with("changed", !canonical))
        }
        Command::Measure { set } => {
            let (s, _) = parse_clopen(set)?;
            let m = s.measure();
            done(m.to_string(), rec("measure", Outcome::Pass).with("measure", m))
        }
        Command::Embed { set } => {
            let (s, _) = parse_clopen(set)?;
            match phi_embed(&s) {
                Ok(p) => done(p.to_string(), rec("embed", Outcome::Pass).with("condition", &p).with("stem_depth", p.stem_depth())),
                Err(e) => Ok(Err(e.to_string())),
            }
        }
        Command::Densify { cond, mode } => {
            let p: StemCondition = parse_arg(cond, STEM)?;
            match mode {
                DensifyMode::Aprime => {
                    let psi = match densify_aprime(&p) {
                        Ok(psi) => psi,
                        Err(e) => return Ok(Err(e.to_string())),
                    };
                    let clauses = aprime_clauses(&p, &psi).expect("densify succeeded on p");
                    let r = rec("densify", Outcome::from_bool(clauses.all()))
                        .with("set", &psi)
                        .with("measure", psi.measure())
                        .with("clauses", if clauses.all() { "1-4" } else { "violated" });
                    done(psi.to_string(), r)
                }
                DensifyMode::App => {
                    let q = densify_app(&p);
                    let n = app_witness(&q).map_or("none".to_string(), |w| w.n.to_string());
                    let r = rec("densify", Outcome::from_bool(n != "none")).with("condition", &q).with("window", n);
                    done(q.to_string(), r)
                }
            }
        }
        Command::Window { cond } => {
            let p: StemCondition = parse_arg(cond, STEM)?;
            match app_witness(&p) {
                Some(w) => {
                    let line = format!("n={} stem={} penult={} tail={}", w.n, w.stem_mass, w.penult_mass, w.tail_mass);
                    let r = rec("window", Outcome::Pass)
                        .with("n", w.n)
                        .with("stem_mass", &w.stem_mass)
                        .with("penult_mass", &w.penult_mass)
                        .with("tail_mass", &w.tail_mass);
                    done(line, r)
                }
                None => done("none".into(), rec("window", Outcome::Infeasible).with("n", "none")),
            }
        }
        Command::Label { cond } => {
            let p: StemCondition = parse_arg(cond, STEM)?;
            match h_label(&p, &cli.f) {
                Ok(l) => done(l.to_string(), rec("label", Outcome::Pass).with("label", &l).with("f", &cli.f)),
                Err(e) => Ok(Err(e.to_string())),
            }
        }
        Command::Meet { conds } => {
            let ps = conds.iter().map(|c| parse_arg::<StemCondition>(c, STEM)).collect::<Result<Vec<_>, _>>()?;
            match meet_same_stem(&ps) {
                Ok(MeetOutcome::Feasible(q)) => {
                    done(q.to_string(), rec("meet", Outcome::Pass).with("condition", &q).with("measure", q.phi().measure()))
                }
                Ok(MeetOutcome::Overshoot { excess }) => {
                    done(format!("infeasible: measure exceeds 1/2 by {excess}"), rec("meet", Outcome::Infeasible).with("excess", excess))
                }
                Ok(MeetOutcome::StemDisturbed { union }) => done(
                    format!("infeasible: the union {union} changes the stem"),
                    rec("meet", Outcome::Infeasible).with("union", union),
                ),
                Err(e) => Ok(Err(e.to_string())),
            }
        }
        Command::Project { cond, target } => {
            let p: StemCondition = parse_arg(cond, STEM)?;
            let t: CohenSeq = parse_arg(target, SEQ)?;
            match projection_search(&p, &t, &cli.f, cli.budget) {
                Ok(ProjectionOutcome::Found(q)) => {
                    let label = h_label(&q, &cli.f).expect("verified in A''");
                    done(q.to_string(), rec("project", Outcome::Pass).with("condition", &q).with("label", label))
                }
                Ok(ProjectionOutcome::NotFound { reason }) => {
                    done(format!("not found: {reason}"), rec("project", Outcome::NotFound).with("reason", reason))
                }
                Err(e) => Ok(Err(e.to_string())),
            }
        }
        Command::Enum { n } => {
            let text = arg_text(n)?;
            let n = BigUint::from_str(text.trim()).map_err(|e| usage(&text, "a natural number", e))?;
            let s = enum_seq(&n);
            done(s.to_string(), rec("enum", Outcome::Pass).with("seq", &s))
        }
        Command::Code { seq } => {
            let s: FinSeq = parse_arg(seq, SEQ)?;
            let c = seq_code(&s);
            done(c.to_string(), rec("code", Outcome::Pass).with("code", c))
        }
        Command::Cover { ell, s, xs } => {
            let s: CohenSeq = parse_arg(s, SEQ)?;
            let xs = xs.iter().map(|x| parse_arg::<FnRep>(x, FN)).collect::<Result<Vec<_>, _>>()?;
            match cover_witness(&xs, *ell, &s) {
                Ok(w) => {
                    let r = rec("cover", Outcome::Pass)
                        .with("separation", w.separation)
                        .with("tau", &w.tau)
                        .with("t", &w.t)
                        .with("union", &w.union);
                    done(w.t.to_string(), r)
                }
                Err(e) => Ok(Err(e.to_string())),
            }
        }
        Command::Bstep { x, y, n } => {
            let x: FnRep = parse_arg(x, FN)?;
            let y: FnRep = parse_arg(y, FN)?;
            match b_step(&x, &y, *n) {
                Ok(i) => done(i.to_string(), rec("bstep", Outcome::Pass).with("interval", &i).with("length", i.length())),
                Err(e) => Ok(Err(e.to_string())),
            }
        }
        Command::Btail { x, y, n, big_n } => {
            let x: FnRep = parse_arg(x, FN)?;
            let y: FnRep = parse_arg(y, FN)?;
            match b_tail(&x, &y, *n, *big_n) {
                Ok(u) => done(u.to_string(), rec("btail", Outcome::Pass).with("union", &u).with("length", u.length())),
                Err(e) => Ok(Err(e.to_string())),
            }
        }
        Command::Check { .. } => unreachable!("handled by dispatch"),
    }
}

/// The positional inputs of a command, joined for the digest.
fn command_inputs(c: &Command) -> String {
    let parts: Vec<String> = match c {
        Command::Canon { set } | Command::Measure { set } | Command::Embed { set } => vec![set.clone()],
        Command::Densify { cond, mode } => vec![cond.clone(), format!("{mode:?}")],
        Command::Window { cond } | Command::Label { cond } => vec![cond.clone()],
        Command::Meet { conds } => conds.clone(),
        Command::Project { cond, target } => vec![cond.clone(), target.clone()],
        Command::Enum { n } => vec![n.clone()],
        Command::Code { seq } => vec![seq.clone()],
        Command::Cover { ell, s, xs } => [ell.to_string(), s.clone()].into_iter().chain(xs.iter().cloned()).collect(),
        Command::Bstep { x, y, n } => vec![x.clone(), y.clone(), n.to_string()],
        Command::Btail { x, y, n, big_n } => vec![x.clone(), y.clone(), n.to_string(), big_n.to_string()],
        Command::Check { suite } => vec![format!("{suite:?}")],
    };
    parts.join(" ")
}
