//! Command-line front end for the `twistedchar` library.
//!
//! Exit codes: 0 on success, 1 when a check finds a counterexample or a
//! computation fails, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use twistedchar::exactnum::rational::{display_rational, format_rational, parse_rational};
use twistedchar::theorem::{
    self, block_det_identity_check, factorize_with_retries, kostant_value, norm_map,
    siegel_levi_check, sym_lambda_check, PowerKind, DEFAULT_HEIGHT, DEFAULT_MAX_RETRIES,
};
use twistedchar::verify::{
    random_invertible_matrix, random_rational_matrix, random_weight, stream_rng, sweep,
};
use twistedchar::weights::add_staircase;
use twistedchar::{
    twisted_character, verify_identity, MatrixTuple, Rational, TheoremError, TrialConfig,
    TwistedPoint, Weight,
};

pub const MAX_RETRIES_ENV: &str = "TWISTEDCHAR_MAX_RETRIES";

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "twistedchar",
    version,
    about = "Exact characters of GL_mn at twisted elements t.c_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Theta_lambda(t . c_n)
    Character {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Weight,
        /// Comma-separated rationals, e.g. 1,2/3,-4
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rationals)]
        t: RationalList,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Residue classes, factor weights and sign
    Factor {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        json: bool,
    },
    /// Check the factorization at random points, or run a sweep from a config file
    Verify {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "config")]
        lambda: Option<Weight>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, required_unless_present = "config")]
        n: Option<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON trial configuration; runs a multi-shape sweep
        #[arg(long, conflicts_with_all = ["lambda", "m", "n"])]
        config: Option<std::path::PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Theta_lambda(c_n) for random GL_n weights
    KostantScan {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
        hi: i64,
        #[arg(long)]
        json: bool,
    },
    /// Block determinant identity on random rational blocks
    BlockDet(RandomShape),
    /// Norm-map invariance under random twisted conjugation
    Norm(RandomShape),
    /// Sym^k or Lambda^k at t . c_n against the closed form
    SymLambda {
        #[arg(long)]
        kind: PowerKind,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rationals)]
        t: RationalList,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Sym^k(C^4m) at (t, 1/t) . c_2 against Sym^(k/2) at (t^2, t^-2)
    Siegel {
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rationals)]
        t: RationalList,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct Shape {
    #[arg(long, allow_hyphen_values = true)]
    lambda: Weight,
    /// Defaults to len(lambda) / n
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Args)]
struct RandomShape {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone)]
struct RationalList(Vec<Rational>);

fn parse_rationals(text: &str) -> Result<RationalList, String> {
    text.split(',')
        .map(|part| parse_rational(part.trim()).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()
        .map(RationalList)
}

/// Failure classes, mapped onto exit codes.
enum Failure {
    Usage(String),
    Compute(String),
}

impl From<TheoremError> for Failure {
    fn from(e: TheoremError) -> Self {
        Failure::Compute(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return e.exit_code();
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_COUNTEREXAMPLE
        }
    }
}

fn max_retries() -> Result<usize, Failure> {
    match std::env::var(MAX_RETRIES_ENV) {
        Err(_) => Ok(DEFAULT_MAX_RETRIES),
        Ok(value) => value
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| {
                Failure::Usage(format!(
                    "{MAX_RETRIES_ENV} must be a positive integer, got {value:?}"
                ))
            }),
    }
}

fn resolve_m(lambda: &Weight, m: Option<usize>, n: usize) -> Result<usize, Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    let m = match m {
        Some(m) => m,
        None if lambda.len().is_multiple_of(n) => lambda.len() / n,
        None => {
            return Err(Failure::Usage(format!(
                "--lambda has {} entries, not a multiple of --n {n}",
                lambda.len()
            )))
        }
    };
    if m == 0 || m * n != lambda.len() {
        return Err(Failure::Usage(format!(
            "--lambda has {} entries but --m {m} times --n {n} is {}",
            lambda.len(),
            m * n
        )));
    }
    Ok(m)
}

fn point(t: &RationalList, n: usize) -> Result<TwistedPoint, Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    TwistedPoint::from_rationals(&t.0, n).map_err(|e| Failure::Usage(format!("--t: {e}")))
}

fn rationals_json(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn print_json(stdout: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Compute(e.to_string()))?;
    writeln!(stdout, "{text}")?;
    Ok(())
}

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Character { lambda, t, n, json } => {
            let point = point(&t, n)?;
            if lambda.len() != point.m() * n {
                return Err(Failure::Usage(format!(
                    "--lambda has {} entries but --t times --n gives {}",
                    lambda.len(),
                    point.m() * n
                )));
            }
            let value = twisted_character(&lambda, &point)?;
            if json {
                print_json(
                    out,
                    &json!({ "lambda": lambda, "t": rationals_json(&t.0), "n": n, "value": value }),
                )?;
            } else {
                writeln!(out, "{value}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Factor { shape, json } => {
            let m = resolve_m(&shape.lambda, shape.m, shape.n)?;
            let result = factorize_with_retries(&shape.lambda, m, shape.n, max_retries()?)?;
            if json {
                print_json(out, &result)?;
            } else {
                write_factorization(out, &shape.lambda, m, shape.n, &result)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            lambda,
            m,
            n,
            trials,
            seed,
            config,
            json,
        } => {
            if let Some(path) = config {
                return run_sweep(out, &path, json);
            }
            let (lambda, n) = (
                lambda.expect("required by clap"),
                n.expect("required by clap"),
            );
            let m = resolve_m(&lambda, m, n)?;
            if trials == 0 {
                return Err(Failure::Usage("--trials must be positive".into()));
            }
            factorize_with_retries(&lambda, m, n, max_retries()?)?;
            let report = verify_identity(&lambda, m, n, trials, seed)?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                for (k, trial) in report.trials.iter().enumerate() {
                    writeln!(
                        out,
                        "trial {k}: t = ({})  lhs = {}  rhs = {}  {}",
                        trial
                            .t
                            .iter()
                            .map(display_rational)
                            .collect::<Vec<_>>()
                            .join(", "),
                        trial.lhs,
                        trial.rhs,
                        if trial.ok { "ok" } else { "MISMATCH" }
                    )?;
                }
                writeln!(
                    out,
                    "{}",
                    if report.passed() {
                        "verified"
                    } else {
                        "counterexample found"
                    }
                )?;
            }
            Ok(verdict(report.passed()))
        }
        Command::KostantScan {
            n,
            samples,
            seed,
            lo,
            hi,
            json,
        } => {
            if n == 0 {
                return Err(Failure::Usage("--n must be positive".into()));
            }
            if lo > hi {
                return Err(Failure::Usage("--lo must not exceed --hi".into()));
            }
            let mut rng = stream_rng(seed, 0);
            let mut rows = Vec::with_capacity(samples);
            let mut ok = true;
            for _ in 0..samples {
                let lambda = random_weight(n, lo, hi, &mut rng);
                let value = kostant_value(&lambda, n);
                let predicted = factorize_with_retries(&lambda, 1, n, max_retries()?)?;
                let expected = predicted.sign.map_or(0, |s| i64::from(s.as_i8()));
                let agrees = matches!(value, Ok(v) if v == expected);
                ok &= agrees;
                rows.push((lambda, value.map_err(|e| e.to_string()), agrees));
            }
            if json {
                let entries: Vec<_> = rows
                    .iter()
                    .map(|(lambda, value, agrees)| match value {
                        Ok(v) => json!({ "lambda": lambda, "value": v, "ok": agrees }),
                        Err(e) => json!({ "lambda": lambda, "error": e, "ok": false }),
                    })
                    .collect();
                print_json(out, &json!({ "n": n, "seed": seed, "samples": entries }))?;
            } else {
                writeln!(out, "{:<24} value", "lambda")?;
                for (lambda, value, agrees) in &rows {
                    let shown = match value {
                        Ok(v) => v.to_string(),
                        Err(e) => e.clone(),
                    };
                    let flag = if *agrees { "" } else { "  MISMATCH" };
                    writeln!(out, "{:<24} {shown:>5}{flag}", lambda.to_string())?;
                }
            }
            Ok(verdict(ok))
        }
        Command::BlockDet(shape) => {
            check_random_shape(&shape)?;
            let mut checks = Vec::with_capacity(shape.trials);
            for trial in 0..shape.trials {
                let mut rng = stream_rng(shape.seed, trial as u64);
                let xs: Vec<_> = (0..shape.n)
                    .map(|_| random_rational_matrix(shape.m, DEFAULT_HEIGHT, &mut rng))
                    .collect();
                checks.push(block_det_identity_check(&xs)?);
            }
            let ok = checks.iter().all(|c| c.holds());
            if shape.json {
                let entries: Vec<_> = checks
                    .iter()
                    .map(|c| json!({ "lhs": c.lhs, "rhs": c.rhs, "c": c.c, "ok": c.holds() }))
                    .collect();
                print_json(out, &entries)?;
            } else {
                if let Some(first) = checks.first() {
                    writeln!(out, "c = {}", first.c)?;
                }
                for (k, c) in checks.iter().enumerate() {
                    writeln!(
                        out,
                        "trial {k}: det = {}  c * prod det X_i = {}  {}",
                        c.lhs,
                        c.rhs,
                        if c.holds() { "ok" } else { "MISMATCH" }
                    )?;
                }
            }
            Ok(verdict(ok))
        }
        Command::Norm(shape) => {
            check_random_shape(&shape)?;
            let mut rows = Vec::with_capacity(shape.trials);
            for trial in 0..shape.trials {
                let mut rng = stream_rng(shape.seed, trial as u64);
                let g = MatrixTuple::new(
                    (0..shape.n)
                        .map(|_| random_rational_matrix(shape.m, DEFAULT_HEIGHT, &mut rng))
                        .collect(),
                )?;
                let h = MatrixTuple::new(
                    (0..shape.n)
                        .map(|_| random_invertible_matrix(shape.m, DEFAULT_HEIGHT, &mut rng))
                        .collect(),
                )?;
                let conjugated = theorem::twisted_conjugate(&g, &h)?;
                let before = norm_map(&g).char_poly().map_err(TheoremError::from)?;
                let after = norm_map(&conjugated)
                    .char_poly()
                    .map_err(TheoremError::from)?;
                rows.push((before.clone(), before == after));
            }
            let ok = rows.iter().all(|(_, same)| *same);
            if shape.json {
                let entries: Vec<_> = rows
                    .iter()
                    .map(|(cp, same)| json!({ "char_poly": cp, "ok": same }))
                    .collect();
                print_json(out, &entries)?;
            } else {
                for (k, (cp, same)) in rows.iter().enumerate() {
                    let coeffs: Vec<String> = cp.iter().map(ToString::to_string).collect();
                    writeln!(
                        out,
                        "trial {k}: char poly of Nm g (low degree first) = [{}]  {}",
                        coeffs.join(", "),
                        if *same { "invariant" } else { "CHANGED" }
                    )?;
                }
            }
            Ok(verdict(ok))
        }
        Command::SymLambda {
            kind,
            k,
            t,
            n,
            json,
        } => {
            let point = point(&t, n)?;
            if kind == PowerKind::Ext && k > point.m() * n {
                return Err(Failure::Usage(format!(
                    "--k {k} exceeds the dimension {}",
                    point.m() * n
                )));
            }
            let check = sym_lambda_check(kind, k, &point)?;
            write_closed_form(out, &check, json)
        }
        Command::Siegel { k, t, json } => {
            if t.0.iter().any(num_traits::Zero::is_zero) {
                return Err(Failure::Usage("--t entries must be nonzero".into()));
            }
            let check = siegel_levi_check(k, &t.0)?;
            write_closed_form(out, &check, json)
        }
    }
}

fn check_random_shape(shape: &RandomShape) -> Result<(), Failure> {
    if shape.m == 0 || shape.n == 0 {
        return Err(Failure::Usage("--m and --n must be positive".into()));
    }
    Ok(())
}

fn write_closed_form(out: &mut dyn Write, check: &theorem::ClosedFormCheck, json: bool) -> Outcome {
    if json {
        print_json(out, check)?;
    } else {
        writeln!(out, "character   = {}", check.twisted)?;
        writeln!(out, "closed form = {}", check.closed_form)?;
        writeln!(out, "{}", if check.ok { "agree" } else { "DISAGREE" })?;
    }
    Ok(verdict(check.ok))
}

fn run_sweep(out: &mut dyn Write, path: &std::path::Path, json: bool) -> Outcome {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("--config {}: {e}", path.display())))?;
    let config =
        TrialConfig::from_json(&text).map_err(|e| Failure::Usage(format!("--config: {e}")))?;
    let report = sweep(&config)?;
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(&report).map_err(|e| Failure::Compute(e.to_string()))?
        )?;
    } else {
        for entry in &report.entries {
            writeln!(
                out,
                "(m,n)=({},{}) lambda=({})  {}  {}",
                entry.m,
                entry.n,
                entry.lambda,
                if entry.report.factorization.vanishes {
                    "vanishes"
                } else {
                    "factors"
                },
                if entry.report.passed() {
                    "ok"
                } else {
                    "MISMATCH"
                }
            )?;
        }
        let failures = report.failures().count();
        writeln!(out, "{} weights, {failures} failures", report.entries.len())?;
    }
    Ok(verdict(report.passed()))
}

fn write_factorization(
    out: &mut dyn Write,
    lambda: &Weight,
    m: usize,
    n: usize,
    result: &twistedchar::FactorizationResult,
) -> Result<(), Failure> {
    let shifted: Vec<String> = add_staircase(lambda)
        .iter()
        .map(ToString::to_string)
        .collect();
    writeln!(out, "lambda         = ({lambda})")?;
    writeln!(out, "lambda + delta = ({})", shifted.join(","))?;
    for (i, class) in result.classes.classes().iter().enumerate() {
        let entries: Vec<String> = class.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "  class {i} mod {n}: {{{}}}  ({} of {m})",
            entries.join(", "),
            class.len()
        )?;
    }
    if result.vanishes {
        writeln!(
            out,
            "the residue classes are not all of size {m}; Theta(t.c_{n}) = 0"
        )?;
        return Ok(());
    }
    for (i, mu) in result.mus.iter().enumerate() {
        writeln!(out, "  mu_{i} = ({mu})")?;
    }
    let sign = result.sign.map_or("?".to_string(), |s| s.to_string());
    let factors: Vec<String> = (0..n).map(|i| format!("Theta_mu_{i}(t^{n})")).collect();
    writeln!(out, "sign = {sign}")?;
    writeln!(out, "Theta(t.c_{n}) = {sign} * {}", factors.join(" * "))?;
    Ok(())
}
