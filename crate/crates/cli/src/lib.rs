//! Command-line checks, census, Hasse export and quotient demo.
//!
//! Every command renders its transcript into a string so that identical
//! arguments give byte-identical output. Exit status: `0` when every
//! expected property is confirmed, `1` on an unexpected witness, `2` on a
//! usage or validation error.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use semifield::algebra::{Carrier, Literal, Semifield};
use semifield::axioms::{
    cancellativity_probe, characteristic, check_semifield_axioms, torsion_sweep,
};
use semifield::census::finite_census;
use semifield::char_one::hasse_diagram;
use semifield::check::{default_sampling, Report, Sampling};
use semifield::instances::{make_instance, registry, Instance, InstanceDescriptor};
use semifield::quotient::{check_phi, check_retraction, FractionSemifield};
use semifield::{with_instance, Error};

const INSTANCE_HELP: &str = "\
Instances (name[:param]):
  boolean                   {0, 1} with 1 + 1 = 1            literals: 0 1
  fp:<p>                    prime field F_p                   literals: 0 .. p-1
  qplus                     positive rationals                literals: 0 3 2/5
  qplus-power:<k>           term-to-term (Q+)^k, default k=2  literals: 0 (1,2/3)
  tropical-z                max-plus integers                 literals: -inf -2 5
  zn-coordinatewise:<n>     Z^n with coordinatewise max       literals: -inf (1,-2)
  z2-lex                    Z^2 with lexicographic max        literals: -inf (1,-2)
  pos-rational-functions    ratios of nonnegative polynomials literals: 0 X+1 (X^2+1)/(2*X)
  dual-positive             a + b e with a > 0 (e^2 = 0)      literals: 0 2+3e 1/2-3/4e
  leading-term              q*X^k, max-degree addition        literals: 0 3 X 2*X^3 1/2*X^-1";

#[derive(Parser, Debug)]
#[command(name = "semifield", version, about = "Exact checks on semifields", after_help = INSTANCE_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Reproducibility knobs shared by the sampling commands.
#[derive(Args, Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub cases: usize,
    /// Characteristic probe bound.
    #[arg(long, default_value_t = 64)]
    pub bound: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            cases: 1000,
            bound: 64,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Axioms, characteristic, cancellation and torsion against the declared claims.
    Check {
        instance: String,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Bounded characteristic verdict.
    Char {
        instance: String,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Semifields of each order up to MAX_ORDER (at most 5), up to isomorphism.
    Census { max_order: u64 },
    /// Covering relation of the natural order of a characteristic-one instance.
    Hasse {
        instance: String,
        /// Inclusive integer range `a..b`, per coordinate.
        #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
        range: String,
    },
    /// Formal sums, fractions and the projection onto the base.
    Quotient {
        instance: String,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Registered instances with their declared claims.
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Confirmed = 0,
    Violation = 1,
    Usage = 2,
}

/// What a command produced: exit status, stdout and stderr text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        Outcome {
            status: Status::Usage,
            stdout: String::new(),
            stderr: message.into(),
        }
    }

    pub fn code(&self) -> i32 {
        self.status as i32
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome {
                    status: Status::Confirmed,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

pub fn run(command: &Command) -> Outcome {
    let result = match command {
        Command::Check { instance, config } => {
            instance_of(instance).and_then(|i| with_instance!(&i, |f| cmd_check(f, config)))
        }
        Command::Char { instance, config } => {
            instance_of(instance).and_then(|i| with_instance!(&i, |f| cmd_char(f, config)))
        }
        Command::Census { max_order } => cmd_census(*max_order),
        Command::Hasse { instance, range } => {
            instance_of(instance).and_then(|i| cmd_hasse(&i, range))
        }
        #[allow(clippy::clone_on_copy)]
        Command::Quotient { instance, config } => instance_of(instance)
            .and_then(|i| with_instance!(&i, |f| cmd_quotient(f.clone(), config))),
        Command::List => Ok(cmd_list()),
    };
    result.unwrap_or_else(|e| match e {
        Error::InconsistentInstance { .. } => Outcome {
            status: Status::Violation,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        _ => Outcome::usage(format!("error: {e}\n")),
    })
}

fn instance_of(s: &str) -> Result<Instance, Error> {
    make_instance(&InstanceDescriptor::parse(s)?)
}

fn confirmed(ok: bool, stdout: String) -> Outcome {
    Outcome {
        status: if ok {
            Status::Confirmed
        } else {
            Status::Violation
        },
        stdout,
        stderr: String::new(),
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn expectation(report: &Report, want_pass: bool) -> (bool, &'static str) {
    match (report.passed, want_pass) {
        (true, true) => (true, ""),
        (false, false) => (true, " (expected)"),
        (true, false) => (false, " (expected a witness)"),
        (false, true) => (false, " (unexpected)"),
    }
}

fn cmd_check<S: Semifield>(f: &S, config: &RunConfig) -> Result<Outcome, Error> {
    let claims = f.claims();
    let mut out = String::new();
    let mut ok = true;
    writeln!(out, "instance: {}", f.name()).unwrap();
    writeln!(
        out,
        "declared: char={} strict={} cancellative={}",
        claims.characteristic, claims.strict, claims.cancellative
    )
    .unwrap();

    let class = characteristic(f, config.bound)?;
    let agrees = class.agrees_with(claims.characteristic);
    ok &= agrees;
    writeln!(
        out,
        "characteristic: {class}{}",
        if agrees {
            ""
        } else {
            " (disagrees with declaration)"
        }
    )
    .unwrap();

    let axioms = check_semifield_axioms(
        f,
        &default_sampling(f, 3, config.cases, config.seed, config.cases),
    )?;
    ok &= axioms.passed;
    write!(out, "axioms: {axioms}").unwrap();
    match axioms.law() {
        Some(law) => writeln!(out, " law={law}").unwrap(),
        None => writeln!(out).unwrap(),
    }

    let cancel = cancellativity_probe(
        f,
        &default_sampling(f, 3, config.cases, config.seed, config.cases),
    )?;
    let (good, note) = expectation(&cancel, claims.cancellative);
    ok &= good;
    writeln!(out, "cancellation: {cancel}{note}").unwrap();

    let torsion = torsion_sweep(f, config.seed, 100, 50)?;
    if torsion.cases_run == 0 && torsion.passed {
        writeln!(out, "torsion: skipped (no element besides 0 and 1)").unwrap();
    } else if claims.strict {
        ok &= torsion.passed;
        writeln!(out, "torsion: {torsion}").unwrap();
    } else {
        writeln!(out, "torsion: {torsion} (informational, not strict)").unwrap();
    }

    writeln!(out, "verdict: {}", verdict(ok)).unwrap();
    Ok(confirmed(ok, out))
}

fn cmd_char<S: Semifield>(f: &S, config: &RunConfig) -> Result<Outcome, Error> {
    let class = characteristic(f, config.bound)?;
    Ok(confirmed(true, format!("{class}\n")))
}

fn cmd_census(max_order: u64) -> Result<Outcome, Error> {
    let mut out = String::new();
    for order in finite_census(max_order)? {
        writeln!(out, "{order}").unwrap();
    }
    Ok(confirmed(true, out))
}

fn parse_range(range: &str) -> Result<(i64, i64), Error> {
    let bad = || Error::Parse {
        input: range.to_string(),
        reason: "expected an inclusive range a..b with a <= b".into(),
    };
    let (a, b) = range.split_once("..").ok_or_else(bad)?;
    let (a, b): (i64, i64) = (
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    );
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn cmd_hasse(instance: &Instance, range: &str) -> Result<Outcome, Error> {
    let (lo, hi) = parse_range(range)?;
    let diagram = match instance {
        Instance::Boolean(f) => hasse_diagram(f, &[true])?,
        Instance::Tropical(f) => {
            let elements: Vec<_> = (lo..=hi).map(|n| Some(BigInt::from(n))).collect();
            hasse_diagram(f, &elements)?
        }
        Instance::Coordinatewise(f) | Instance::Lexicographic(f) => {
            let elements: Vec<_> = f
                .group()
                .box_elements(lo, hi)
                .into_iter()
                .map(Some)
                .collect();
            hasse_diagram(f, &elements)?
        }
        other => with_instance!(other, |f| hasse_diagram(f, &[f.one()]))?,
    };
    Ok(confirmed(true, diagram.to_string()))
}

/// Literals shown by the quotient demo: a pair for the collapse line and a
/// term list for the normal-form line.
fn demo_literals(name: &str) -> (&'static str, &'static [&'static str]) {
    match name {
        "qplus" => ("2", &["2", "3"]),
        "dual-positive" => ("1+e", &["1+e", "2+2e", "1"]),
        _ => ("X", &["X", "2*X", "1"]),
    }
}

fn cmd_quotient<S: Semifield + Literal + Clone>(
    f: S,
    config: &RunConfig,
) -> Result<Outcome, Error> {
    let base_claims = f.claims();
    let qf = FractionSemifield::new(f.clone())?;
    let l = qf.sums();
    let mut out = String::new();
    let mut ok = true;
    writeln!(out, "instance: {}", f.name()).unwrap();

    let (other, terms) = demo_literals(&f.name());
    let parsed: Vec<S::Elem> = terms.iter().map(|t| f.parse(t)).collect::<Result<_, _>>()?;
    let shown: Vec<String> = parsed.iter().map(|t| f.render(t)).collect();
    writeln!(
        out,
        "normal form: [{}] = {}",
        shown.join(", "),
        l.render(&l.normalize(&parsed))
    )
    .unwrap();

    let one = f.one();
    let y = f.parse(other)?;
    let split = qf.make(l.normalize(&[one.clone(), y.clone()]), l.one())?;
    let joined = qf.embed(&f.add(&one, &y));
    let same = qf.eq(&split, &joined);
    writeln!(
        out,
        "fractions: {} {} {} in Q(F); phi: {} and {}",
        qf.render(&split),
        if same { "=" } else { "!=" },
        qf.render(&joined),
        f.render(&qf.phi(&split)),
        f.render(&qf.phi(&joined))
    )
    .unwrap();

    for case in 0..3 {
        let mut rng = semifield::check::case_rng(config.seed, case);
        let a = qf.sample(&mut rng);
        writeln!(
            out,
            "sample {case}: {} -> phi = {}",
            qf.render(&a),
            f.render(&qf.phi(&a))
        )
        .unwrap();
    }

    let phi = check_phi(&qf, &Sampling::random(config.seed, config.cases))?;
    let retraction = check_retraction(&qf, &Sampling::random(config.seed, config.cases))?;
    let axioms = check_semifield_axioms(&qf, &Sampling::random(config.seed, config.cases))?;
    let quotient_cancel = cancellativity_probe(&qf, &Sampling::random(config.seed, config.cases))?;
    let base_cancel = cancellativity_probe(&f, &Sampling::random(config.seed, config.cases))?;
    let (base_ok, base_note) = expectation(&base_cancel, base_claims.cancellative);
    ok &= phi.passed && retraction.passed && axioms.passed && quotient_cancel.passed && base_ok;
    writeln!(out, "phi homomorphism: {phi}").unwrap();
    writeln!(out, "phi retraction: {retraction}").unwrap();
    writeln!(out, "axioms(Q(F)): {axioms}").unwrap();
    writeln!(out, "cancellation(Q(F)): {quotient_cancel}").unwrap();
    writeln!(out, "cancellation(base): {base_cancel}{base_note}").unwrap();
    writeln!(out, "verdict: {}", verdict(ok)).unwrap();
    Ok(confirmed(ok, out))
}

fn cmd_list() -> Outcome {
    let mut out = String::new();
    for d in registry() {
        writeln!(
            out,
            "{d} char={} strict={} cancellative={}",
            d.characteristic, d.strict, d.cancellative
        )
        .unwrap();
    }
    confirmed(true, out)
}
