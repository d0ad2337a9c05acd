//! Command-line front end.
//!
//! Exit codes: 0 = verified, 1 = an assertion failed (a reproducer is
//! written), 2 = a theorem precondition was not met (the claim is vacuous,
//! not false), 3 = input error.

use crate::bounds::{self, lower_bounds};
use crate::error::Error;
use crate::format::{parse_set_auto, print_set, set_to_json};
use crate::generators;
use crate::oracle;
use crate::plot::plot_svg;
use crate::rational::{decimal_string, format_rational, parse_rational, Rational};
use crate::sets::{Interval, IntervalSet};
use crate::structure;
use crate::{density, torus};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};
use std::io::Read as _;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION_FAILED: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "sumsetlab",
    about = "Exact sumset computation, bounds and structure verification for unions of rational intervals"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the Minkowski sum A + B.
    Sum {
        /// Set A, e.g. "[0,1]" or "{0} U [1/10,9/10] U {1}"; "-" reads stdin.
        set_a: String,
        set_b: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Report measures, diameters, lower bounds, and the zone summary.
    Analyze {
        set_a: String,
        set_b: String,
        /// Also render every rational as a fixed-point decimal.
        #[arg(long)]
        decimal: bool,
    },
    /// Verify a structure theorem on the pair; exit status reflects the result.
    Verify {
        #[command(flatten)]
        args: VerifyArgs,
    },
    /// Generate one of the named families.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        /// Family parameters as JSON, e.g. '{"n":2,"m":2,"a1":"1/10","a2":"1/10"}'.
        #[arg(long, default_value = "{}")]
        params: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Render the g/h profile figure with zone spans as SVG.
    Plot {
        set_a: String,
        set_b: String,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Set A; ignored when --sweep is given.
    set_a: Option<String>,
    set_b: Option<String>,
    #[arg(long, value_enum)]
    theorem: Theorem,
    /// Extra parameters as JSON: {"m":1} for relaxed, {"x":"p/q"} or {"q":360} for lemma-mes.
    #[arg(long, default_value = "{}")]
    params: String,
    /// Verify over N random pairs instead of explicit sets.
    #[arg(long)]
    sweep: Option<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Where to write the reproducer on failure.
    #[arg(long, default_value = "sumsetlab-reproducer.json")]
    out: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Theorem {
    /// Continuous 3k−4 theorem.
    #[value(name = "3k4")]
    ThreeKFour,
    /// Multi-crossing relaxation.
    Relaxed,
    /// Large-density extremal decomposition.
    ExtremalLarge,
    /// Small-ratio extremal recognizer.
    ExtremalSmall,
    /// Gap-point measure inequalities.
    LemmaMes,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    FreimanLarge,
    Asymmetric,
    SmallExtremal,
    Random,
}

/// Runs the CLI on explicit arguments and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with success exits
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Precondition(_) => EXIT_PRECONDITION,
                Error::Parse { .. } => EXIT_INPUT,
                Error::Constraint(_) | Error::Invalid(_) => EXIT_ASSERTION_FAILED,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn dispatch(cmd: Command) -> crate::Result<i32> {
    match cmd {
        Command::Sum {
            set_a,
            set_b,
            format,
        } => cmd_sum(&set_a, &set_b, format),
        Command::Analyze {
            set_a,
            set_b,
            decimal,
        } => cmd_analyze(&set_a, &set_b, decimal),
        Command::Verify { args } => cmd_verify(args),
        Command::Generate {
            family,
            params,
            format,
        } => cmd_generate(family, &params, format),
        Command::Plot { set_a, set_b, out } => cmd_plot(&set_a, &set_b, out.as_deref()),
    }
}

fn read_set(arg: &str) -> crate::Result<IntervalSet> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Invalid(format!("stdin: {e}")))?;
        buf
    } else {
        arg.to_string()
    };
    parse_set_auto(&text)
}

fn rat_str(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn cmd_sum(sa: &str, sb: &str, format: Format) -> crate::Result<i32> {
    let a = read_set(sa)?;
    let b = read_set(sb)?;
    let s = a.minkowski_sum(&b)?;
    match format {
        Format::Text => println!("{}", print_set(&s)),
        Format::Json => println!(
            "{}",
            json!({"schema": 1, "sum": set_to_json(&s), "measure": rat_str(&s.measure())})
        ),
    }
    Ok(EXIT_OK)
}

fn cmd_analyze(sa: &str, sb: &str, decimal: bool) -> crate::Result<i32> {
    let a = read_set(sa)?;
    let b = read_set(sb)?;
    let report = lower_bounds(&a, &b)?;

    // zone machinery wants diam(B) <= diam(A)
    let (za, zb) = if a.normalize_to_zero()?.diameter()? >= b.normalize_to_zero()?.diameter()? {
        (a.normalize_to_zero()?, b.normalize_to_zero()?)
    } else {
        (b.normalize_to_zero()?, a.normalize_to_zero()?)
    };
    let zones = density::zone_partition(&za, &zb).ok();
    let split = torus::modular_split(&za, &zb).ok();

    let mut doc = json!({
        "schema": 1,
        "measures": {"lambda_a": rat_str(&report.lam_a), "lambda_b": rat_str(&report.lam_b),
                     "lambda_sum": rat_str(&report.lambda_sum)},
        "diameters": {"d_a": rat_str(&report.d_a), "d_b": rat_str(&report.d_b)},
        "delta": rat_str(&(&report.lam_a + &report.lam_b - &report.d_a)),
        "ruzsa": {"k": report.params.k, "delta": rat_str(&report.params.delta),
                  "ratio": rat_str(&report.params.ratio)},
        "k_a": report.k_a,
        "bounds": report.bounds.iter().map(|b| json!({
            "name": b.name,
            "value": rat_str(&b.value),
            "disjunct": b.disjunct.map(|d| format!("{d:?}")),
        })).collect::<Vec<_>>(),
        "binding": report.binding,
        "slack": rat_str(&report.slack),
    });
    if let Some(zp) = &zones {
        doc["zones"] = json!({
            "z1_measure": rat_str(&zp.z1.measure()),
            "z2_measure": rat_str(&zp.z2.measure()),
            "z3_measure": rat_str(&zp.z3.measure()),
            "m": zp.down_count,
        });
    }
    if let Some((l1, l2)) = &split {
        doc["modular_split"] = json!({"layer1": rat_str(l1), "layer2": rat_str(l2)});
    }
    if let Ok(di) = bounds::diam_bound_implications(&a, &b) {
        doc["diam_implication"] = json!({
            "hyp_kd": di.hyp_kd, "hyp_improved": di.hyp_improved,
            "margin": rat_str(&di.margin), "conclusion": di.conclusion,
        });
    }
    if decimal {
        doc["decimal"] = json!({
            "lambda_sum": decimal_string(&report.lambda_sum, 6),
            "slack": decimal_string(&report.slack, 6),
        });
    }
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    Ok(EXIT_OK)
}

struct VerifyOutcome {
    code: i32,
    detail: Value,
}

fn verify_pair(theorem: Theorem, a: &IntervalSet, b: &IntervalSet, params: &Value) -> VerifyOutcome {
    match theorem {
        Theorem::ThreeKFour => match structure::freiman_verify(a, b) {
            Ok(r) => {
                let detail = json!({
                    "hyp_i": r.hyp_i, "hyp_ii": r.hyp_ii, "swapped": r.swapped,
                    "e": rat_str(&r.e), "c": rat_str(&r.c),
                    "interval": format!("({}, {})", format_rational(r.interval.lo()), format_rational(r.interval.hi())),
                    "interval_length": rat_str(&r.i_length),
                    "diam_a_ok": r.diam_a_ok, "diam_a_slack": rat_str(&r.diam_a_slack),
                    "diam_b_ok": r.diam_b_ok, "diam_b_slack": rat_str(&r.diam_b_slack),
                    "interval_ok": r.interval_ok, "verified": r.verified,
                });
                let code = if !r.applicable() {
                    EXIT_PRECONDITION
                } else if r.verified {
                    EXIT_OK
                } else {
                    EXIT_ASSERTION_FAILED
                };
                VerifyOutcome { code, detail }
            }
            Err(e) => error_outcome(e),
        },
        Theorem::Relaxed => {
            let m = params.get("m").and_then(Value::as_u64).unwrap_or(1) as usize;
            match structure::relaxed_verify(a, b, m) {
                Ok(ivs) => VerifyOutcome {
                    code: EXIT_OK,
                    detail: json!({
                        "m": m,
                        "intervals": ivs.iter().map(|iv| iv.to_string()).collect::<Vec<_>>(),
                        "total_measure": rat_str(&ivs.iter().map(Interval::len).sum()),
                    }),
                },
                Err(e) => error_outcome(e),
            }
        }
        Theorem::ExtremalLarge => match structure::extremal_large_decompose(a, b) {
            Ok(d) => VerifyOutcome {
                code: EXIT_OK,
                detail: json!({
                    "variant": format!("{:?}", d.variant), "swapped": d.swapped,
                    "b": rat_str(&d.b), "c": rat_str(&d.c),
                    "interior": format!("({}, {})", format_rational(d.interior.lo()), format_rational(d.interior.hi())),
                    "a1": print_set(&d.a1), "a2": print_set(&d.a2),
                    "b1": print_set(&d.b1), "b2": print_set(&d.b2), "b_i": print_set(&d.b_i),
                    "c1": rat_str(&d.c1), "c2": rat_str(&d.c2),
                }),
            },
            Err(e) => error_outcome(e),
        },
        Theorem::ExtremalSmall => match structure::small_extremal_recognize(a, b) {
            Ok(s) => VerifyOutcome {
                code: EXIT_OK,
                detail: json!({
                    "k": s.k, "delta": rat_str(&s.delta),
                    "b1": rat_str(&s.b1), "b2": rat_str(&s.b2), "d_b": rat_str(&s.d_b),
                    "shift_a": rat_str(&s.shift_a), "shift_b": rat_str(&s.shift_b),
                }),
            },
            Err(e) => error_outcome(e),
        },
        Theorem::LemmaMes => verify_lemma_mes(a, b, params),
    }
}

fn verify_lemma_mes(a: &IntervalSet, b: &IntervalSet, params: &Value) -> VerifyOutcome {
    let xs: Vec<Rational> = if let Some(xv) = params.get("x").and_then(Value::as_str) {
        match parse_rational(xv) {
            Ok(x) => vec![x],
            Err(e) => return error_outcome(e),
        }
    } else {
        let q = params.get("q").and_then(Value::as_u64).unwrap_or(360);
        let scan = || -> crate::Result<Vec<Rational>> {
            let an = a.normalize_to_zero()?;
            let bn = b.normalize_to_zero()?;
            let s = an.minkowski_sum(&bn)?;
            let w = Interval::new(Rational::zero(), an.diameter()? + bn.diameter()?)?;
            oracle::gap_points(&s, &w, q)
        };
        match scan() {
            Ok(v) => v,
            Err(e) => return error_outcome(e),
        }
    };
    let an = match a.normalize_to_zero() {
        Ok(s) => s,
        Err(e) => return error_outcome(e),
    };
    let bn = match b.normalize_to_zero() {
        Ok(s) => s,
        Err(e) => return error_outcome(e),
    };
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for x in &xs {
        match structure::lemma_mes_check(&an, &bn, x) {
            Ok(o) => {
                if o.applicable {
                    checked += 1;
                    if !o.ok {
                        failures.push(format_rational(x));
                    }
                }
            }
            Err(e) => return error_outcome(e),
        }
    }
    let code = if !failures.is_empty() {
        EXIT_ASSERTION_FAILED
    } else if checked == 0 && !xs.is_empty() {
        EXIT_PRECONDITION
    } else {
        EXIT_OK
    };
    VerifyOutcome {
        code,
        detail: json!({"gap_points_checked": checked, "failures": failures}),
    }
}

fn error_outcome(e: Error) -> VerifyOutcome {
    let code = match &e {
        Error::Precondition(_) => EXIT_PRECONDITION,
        Error::Constraint(_) | Error::Invalid(_) => EXIT_ASSERTION_FAILED,
        _ => EXIT_INPUT,
    };
    VerifyOutcome {
        code,
        detail: json!({"error": e.to_string()}),
    }
}

fn cmd_verify(args: VerifyArgs) -> crate::Result<i32> {
    let params: Value = serde_json::from_str(&args.params).map_err(|e| Error::Parse {
        pos: 0,
        msg: format!("--params: {e}"),
    })?;

    if let Some(n) = args.sweep {
        return cmd_verify_sweep(&args, n, &params);
    }

    let (sa, sb) = match (&args.set_a, &args.set_b) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::Invalid(
                "verify needs SET_A and SET_B (or --sweep N)".into(),
            ))
        }
    };
    let a = read_set(sa)?;
    let b = read_set(sb)?;
    let outcome = verify_pair(args.theorem, &a, &b, &params);
    let doc = json!({
        "schema": 1,
        "theorem": format!("{:?}", args.theorem),
        "status": status_name(outcome.code),
        "detail": outcome.detail,
    });
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    if outcome.code == EXIT_ASSERTION_FAILED {
        write_reproducer(&args.out, args.theorem, &a, &b, &outcome.detail)?;
    }
    Ok(outcome.code)
}

fn cmd_verify_sweep(args: &VerifyArgs, n: u32, params: &Value) -> crate::Result<i32> {
    let denom_limit = denom_limit_from_env();
    let scale = Rational::from_integer(1.into());
    let density = Rational::new(1.into(), 2.into());
    let mut verified = 0u32;
    let mut vacuous = 0u32;
    let mut failed = Vec::new();
    for i in 0..n {
        let seed = args.seed.wrapping_add(u64::from(i));
        let a = generators::gen_random_with_limit(seed.wrapping_mul(2), 4, &scale, &density, denom_limit)?;
        let b = generators::gen_random_with_limit(
            seed.wrapping_mul(2).wrapping_add(1),
            4,
            &scale,
            &density,
            denom_limit,
        )?;
        let outcome = verify_pair(args.theorem, &a, &b, params);
        match outcome.code {
            EXIT_OK => verified += 1,
            EXIT_PRECONDITION => vacuous += 1,
            _ => {
                if failed.is_empty() {
                    write_reproducer(&args.out, args.theorem, &a, &b, &outcome.detail)?;
                }
                failed.push(json!({"seed": seed, "detail": outcome.detail}));
            }
        }
    }
    let code = if failed.is_empty() { EXIT_OK } else { EXIT_ASSERTION_FAILED };
    let doc = json!({
        "schema": 1,
        "theorem": format!("{:?}", args.theorem),
        "sweep": n, "seed": args.seed,
        "verified": verified, "precondition_not_met": vacuous,
        "failed": failed,
        "status": status_name(code),
    });
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    Ok(code)
}

fn status_name(code: i32) -> &'static str {
    match code {
        EXIT_OK => "verified",
        EXIT_PRECONDITION => "precondition-not-met",
        EXIT_ASSERTION_FAILED => "assertion-failed",
        _ => "input-error",
    }
}

fn write_reproducer(
    path: &PathBuf,
    theorem: Theorem,
    a: &IntervalSet,
    b: &IntervalSet,
    detail: &Value,
) -> crate::Result<()> {
    let doc = json!({
        "schema": 1,
        "theorem": format!("{theorem:?}"),
        "set_a": set_to_json(a),
        "set_b": set_to_json(b),
        "detail": detail,
    });
    std::fs::write(path, serde_json::to_string_pretty(&doc).unwrap())
        .map_err(|e| Error::Invalid(format!("cannot write reproducer {}: {e}", path.display())))?;
    eprintln!("reproducer written to {}", path.display());
    Ok(())
}

fn denom_limit_from_env() -> u64 {
    std::env::var("SUMSETLAB_DENOM_LIMIT")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&v| v >= 1)
        .unwrap_or(generators::DEFAULT_DENOM_LIMIT)
}

fn param_rat(params: &Value, key: &str) -> crate::Result<Rational> {
    let raw = params.get(key).ok_or_else(|| Error::Invalid(format!("missing parameter {key:?}")))?;
    match raw {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        _ => Err(Error::Invalid(format!("parameter {key:?} must be an integer or a \"p/q\" string"))),
    }
}

fn param_u64(params: &Value, key: &str, default: Option<u64>) -> crate::Result<u64> {
    match params.get(key) {
        Some(v) => v
            .as_u64()
            .ok_or_else(|| Error::Invalid(format!("parameter {key:?} must be a nonnegative integer"))),
        None => default.ok_or_else(|| Error::Invalid(format!("missing parameter {key:?}"))),
    }
}

fn emit_sets(sets: &[(&str, &IntervalSet)], check: &str, format: Format) {
    match format {
        Format::Text => {
            for (name, s) in sets {
                println!("{name} = {}", print_set(s));
            }
            println!("check: {check}");
        }
        Format::Json => {
            let mut doc = json!({"schema": 1, "check": check});
            for (name, s) in sets {
                doc[*name] = set_to_json(s);
            }
            println!("{doc}");
        }
    }
}

fn cmd_generate(family: Family, params: &str, format: Format) -> crate::Result<i32> {
    let p: Value = serde_json::from_str(params).map_err(|e| Error::Parse {
        pos: 0,
        msg: format!("--params: {e}"),
    })?;
    match family {
        Family::FreimanLarge => {
            let n = param_u64(&p, "n", None)? as u32;
            let m = param_u64(&p, "m", None)? as u32;
            let a1 = param_rat(&p, "a1")?;
            let a2 = param_rat(&p, "a2")?;
            let a = generators::gen_freiman_large(n, m, &a1, &a2)?;
            let s = a.minkowski_sum(&a)?;
            let check = format!(
                "lambda(A+A) = {} = 1 + lambda(A)",
                format_rational(&s.measure())
            );
            emit_sets(&[("A", &a)], &check, format);
        }
        Family::Asymmetric => {
            let av = param_rat(&p, "a")?;
            let bv = param_rat(&p, "b")?;
            let eps = param_rat(&p, "eps")?;
            let n = param_u64(&p, "n", None)? as u32;
            let (a, b, strict) = generators::gen_asymmetric(&av, &bv, &eps, n)?;
            let s = a.minkowski_sum(&b)?;
            let check = format!(
                "lambda(A+B) = {} = 1 + lambda(A); strict regime: {strict}",
                format_rational(&s.measure())
            );
            emit_sets(&[("A", &a), ("B", &b)], &check, format);
        }
        Family::SmallExtremal => {
            let k = param_u64(&p, "k", None)? as u32;
            let delta = param_rat(&p, "delta")?;
            let b1 = param_rat(&p, "b1")?;
            let b2 = param_rat(&p, "b2")?;
            let d_b = param_rat(&p, "d_b")?;
            let (a, b) = generators::gen_small_extremal(k, &delta, &b1, &b2, &d_b)?;
            let s = a.minkowski_sum(&b)?;
            let check = format!(
                "lambda(A+B) = {} = lambda(A) + (K+delta) lambda(B)",
                format_rational(&s.measure())
            );
            emit_sets(&[("A", &a), ("B", &b)], &check, format);
        }
        Family::Random => {
            let seed = param_u64(&p, "seed", Some(0))?;
            let count = param_u64(&p, "count", Some(4))? as u32;
            let scale = param_rat(&p, "scale").unwrap_or_else(|_| Rational::from_integer(1.into()));
            let density = param_rat(&p, "density")
                .unwrap_or_else(|_| Rational::new(1.into(), 2.into()));
            let s = generators::gen_random_with_limit(
                seed,
                count,
                &scale,
                &density,
                denom_limit_from_env(),
            )?;
            let check = format!("lambda = {}", format_rational(&s.measure()));
            emit_sets(&[("A", &s)], &check, format);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_plot(sa: &str, sb: &str, out: Option<&std::path::Path>) -> crate::Result<i32> {
    let a = read_set(sa)?;
    let b = read_set(sb)?;
    let svg = plot_svg(&a, &b)?;
    match out {
        Some(path) => std::fs::write(path, svg)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{svg}"),
    }
    Ok(EXIT_OK)
}
