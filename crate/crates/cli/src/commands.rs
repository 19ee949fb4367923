use std::io::Write;

use hk_core::{
    convergence_table, dp_bruteforce, dp_formula, eulerian_polynomial,
    eval_gaussian, mu_limit_with, sandwich_check, zigzag_coefficient, zigzag_number, ArgChoice,
    GaussianRational, LimitOptions, Rational, UpperChoice, SLOW_DIM,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::output::OutputRecord;
use crate::sieve::primes_in;
use crate::{Choice, Cli, CliError, Command, DpMethod, EvalPoint, Format, GlobalArgs, Upper};

/// Runs one command, writing data to `out` and warnings to `diag`.
pub fn run(cli: &Cli, out: &mut impl Write, diag: &mut impl Write) -> Result<(), CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Limit { d, verify_vanishing } => emit(g, out, cmd_limit(g, d, *verify_vanishing)?),
        Command::Dp { p, a, method } => {
            let rec = cmd_dp(g, *p, a, *method, diag)?;
            emit(g, out, rec.clone())?;
            if rec.results.get("match") == Some(&Value::Bool(false)) {
                return Err(CliError::Mismatch(format!(
                    "D_{p}({a:?}): formula {} but brute force {}",
                    rec.results["formula"], rec.results["brute"]
                )));
            }
            Ok(())
        }
        Command::E1 { p, d, upper } => emit(g, out, cmd_e1(g, *p, d, *upper, diag)?),
        Command::Converge {
            d,
            pmin,
            pmax,
            choice,
        } => cmd_converge(g, d, *pmin, *pmax, *choice, out),
        Command::Zigzag { n } => emit(g, out, cmd_zigzag(g, *n)),
        Command::Eulerian { n, eval } => emit(g, out, cmd_eulerian(*n, *eval)),
    }
}

fn emit(g: &GlobalArgs, out: &mut impl Write, rec: OutputRecord) -> Result<(), CliError> {
    match g.format {
        Format::Json => rec.write_json(out),
        Format::Csv => rec.write_csv(out),
    }
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(|x| json!(x.to_string())).collect())
}

fn warn_if_slow(g: &GlobalArgs, diag: &mut impl Write, dim: u128) -> Result<(), CliError> {
    if dim > SLOW_DIM as u128 && dim <= g.max_dim as u128 {
        writeln!(diag, "warning: quotient ring of dimension {dim}; rank computation will be slow")?;
    }
    Ok(())
}

pub fn cmd_limit(g: &GlobalArgs, d: &[u64], verify_vanishing: bool) -> Result<OutputRecord, CliError> {
    let res = mu_limit_with(d, LimitOptions { verify_vanishing })?;
    let mut rec = OutputRecord::new("limit");
    rec.input("d", json!(d));
    rec.rational("mu_limit", &res.mu_limit, g.decimal);
    rec.result("method", json!(res.method.tag()));
    let table: serde_json::Map<String, Value> = res
        .c_lambda_table
        .iter()
        .map(|(l, c)| (l.to_string(), json!(c.to_string())))
        .collect();
    rec.result("c_lambda", Value::Object(table));
    Ok(rec)
}

pub fn cmd_dp(
    g: &GlobalArgs,
    p: u64,
    a: &[u64],
    method: DpMethod,
    diag: &mut impl Write,
) -> Result<OutputRecord, CliError> {
    let mut rec = OutputRecord::new("dp");
    rec.input("p", json!(p));
    rec.input("a", json!(a));
    rec.input("method", json!(format!("{method:?}").to_lowercase()));

    let formula = match method {
        DpMethod::Formula | DpMethod::Both => Some(dp_formula(p, a)?),
        DpMethod::Brute => None,
    };
    let brute = match method {
        DpMethod::Brute | DpMethod::Both => {
            let dim: u128 = a.iter().skip(1).map(|&x| x as u128).product();
            warn_if_slow(g, diag, dim)?;
            Some(dp_bruteforce(p, a, g.max_dim)?)
        }
        DpMethod::Formula => None,
    };
    if let Some(f) = &formula {
        rec.result("formula", json!(f.to_string()));
    }
    if let Some(b) = brute {
        rec.result("brute", json!(b.to_string()));
    }
    if let (Some(f), Some(b)) = (&formula, brute) {
        rec.result("match", json!(*f == b.into()));
    }
    Ok(rec)
}

pub fn cmd_e1(
    g: &GlobalArgs,
    p: u64,
    d: &[u64],
    upper: Upper,
    diag: &mut impl Write,
) -> Result<OutputRecord, CliError> {
    let dim = (p as u128).checked_pow(d.len() as u32).unwrap_or(u128::MAX);
    warn_if_slow(g, diag, dim)?;
    let choice = match upper {
        Upper::Ceil => UpperChoice::Ceil,
        Upper::FloorPlusOne => UpperChoice::FloorPlusOne,
    };
    let report = sandwich_check(p, d, g.max_dim, choice)?;
    let e1 = report.e1;
    let mut rec = OutputRecord::new("e1");
    rec.input("p", json!(p));
    rec.input("d", json!(d));
    rec.result("e1", json!(e1.to_string()));
    let normalized = Rational::new(BigInt::from(e1), BigInt::from(p).pow(d.len() as u32 - 1));
    rec.rational("e1_over_p_pow_s_minus_1", &normalized, g.decimal);
    rec.result(
        "sandwich",
        json!({
            "u": report.u,
            "v": report.v,
            "lower": report.lower.to_string(),
            "upper": report.upper.to_string(),
            "holds": true,
        }),
    );
    Ok(rec)
}

pub fn cmd_converge(
    g: &GlobalArgs,
    d: &[u64],
    pmin: u64,
    pmax: u64,
    choice: Choice,
    out: &mut impl Write,
) -> Result<(), CliError> {
    if pmin > pmax {
        return Err(CliError::Usage(format!("--pmin {pmin} exceeds --pmax {pmax}")));
    }
    let primes = primes_in(pmin, pmax);
    let choice = match choice {
        Choice::Floor => ArgChoice::FloorParityUp,
        Choice::Ceil => ArgChoice::CeilParityDown,
    };
    let limit = hk_core::mu_limit(d)?.mu_limit;
    let rows = convergence_table(d, &primes, choice)?;
    let join = |a: &[u64]| a.iter().map(u64::to_string).collect::<Vec<_>>().join(",");

    match g.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["p", "a", "value", "gap", "p_times_gap"])?;
            for row in &rows {
                w.write_record([
                    row.p.to_string(),
                    join(&row.a),
                    row.value.to_string(),
                    row.gap.to_string(),
                    row.p_times_gap.to_string(),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Json => {
            let mut rec = OutputRecord::new("converge");
            rec.input("d", json!(d));
            rec.input("pmin", json!(pmin));
            rec.input("pmax", json!(pmax));
            rec.rational("mu_limit", &limit, g.decimal);
            let rows: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let mut obj = json!({
                        "p": row.p,
                        "a": row.a,
                        "value": row.value.to_string(),
                        "gap": row.gap.to_string(),
                        "p_times_gap": row.p_times_gap.to_string(),
                    });
                    if g.decimal {
                        obj["p_times_gap_decimal_approximate"] =
                            json!(crate::output::approximate(&row.p_times_gap, 12));
                    }
                    obj
                })
                .collect();
            rec.result("rows", Value::Array(rows));
            rec.write_json(out)
        }
    }
}

pub fn cmd_zigzag(g: &GlobalArgs, n: usize) -> OutputRecord {
    let mut rec = OutputRecord::new("zigzag");
    rec.input("n", json!(n));
    rec.result("coefficients", strings((0..=n).map(zigzag_coefficient)));
    rec.result("zigzag_numbers", strings((0..=n).map(zigzag_number)));
    if g.decimal {
        rec.rational("last_coefficient", &zigzag_coefficient(n), true);
    }
    rec
}

pub fn cmd_eulerian(n: usize, eval: Option<EvalPoint>) -> OutputRecord {
    let a = eulerian_polynomial(n);
    let mut rec = OutputRecord::new("eulerian");
    rec.input("n", json!(n));
    rec.result("coefficients", strings(a.coeffs()));
    if let Some(point) = eval {
        let (tag, z) = match point {
            EvalPoint::One => ("1", GaussianRational::from_integers(1, 0)),
            EvalPoint::MinusOne => ("-1", GaussianRational::from_integers(-1, 0)),
            EvalPoint::I => ("i", GaussianRational::i()),
        };
        rec.input("eval", json!(tag));
        let value = eval_gaussian(&a, &z);
        let text = if value.is_real() {
            value.re.to_string()
        } else {
            value.to_string()
        };
        rec.result("value", json!(text));
    }
    rec
}
