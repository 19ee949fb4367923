//! Machine-readable output records.
//!
//! Exact values are rendered as strings: integers in decimal, rationals as
//! `num/den` in lowest terms. Decimal approximations are opt-in and live in a
//! separate `decimal_approximate` map so they are never mistaken for the exact results.

use std::collections::BTreeMap;
use std::io::Write;

use hk_core::Rational;
use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use crate::CliError;

/// Significant digits in the `decimal` map.
pub const DECIMAL_DIGITS: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub decimal: Option<BTreeMap<String, String>>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            inputs: Map::new(),
            results: Map::new(),
            decimal: None,
        }
    }

    pub fn input(&mut self, key: &str, value: Value) {
        self.inputs.insert(key.to_string(), value);
    }

    pub fn result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    /// Records `value` exactly, and its approximation when `decimal` is on.
    pub fn rational(&mut self, key: &str, value: &Rational, decimal: bool) {
        self.result(key, json!(value.to_string()));
        if decimal {
            self.decimal
                .get_or_insert_with(BTreeMap::new)
                .insert(key.to_string(), approximate(value, DECIMAL_DIGITS));
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("command".into(), json!(self.command));
        obj.insert("inputs".into(), Value::Object(self.inputs.clone()));
        obj.insert("results".into(), Value::Object(self.results.clone()));
        if let Some(dec) = &self.decimal {
            let approx: Map<String, Value> =
                dec.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            obj.insert("decimal_approximate".into(), Value::Object(approx));
        }
        Value::Object(obj)
    }

    pub fn write_json(&self, out: &mut impl Write) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(&self.to_json())?;
        writeln!(out, "{text}")?;
        Ok(())
    }

    /// Two-column `field,value` listing; compound values are JSON-encoded.
    pub fn write_csv(&self, out: &mut impl Write) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["field", "value"])?;
        for (k, v) in &self.results {
            w.write_record([k.as_str(), &scalar_text(v)])?;
        }
        if let Some(dec) = &self.decimal {
            for (k, v) in dec {
                w.write_record([format!("{k}_decimal_approximate").as_str(), v])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// `value` rounded to `digits` significant digits, computed exactly.
pub fn approximate(value: &Rational, digits: usize) -> String {
    if value.is_zero() {
        return "0".into();
    }
    let neg = value.is_negative();
    let num = value.numer().abs();
    let den = value.denom().clone();
    let ten = BigInt::from(10);

    // exponent e with 10^e <= |value| < 10^(e+1)
    let mut e: i64 = num.to_string().len() as i64 - den.to_string().len() as i64;
    let scaled = |e: i64| -> Rational {
        if e >= 0 {
            Rational::new(num.clone(), &den * ten.pow(e as u32))
        } else {
            Rational::new(&num * ten.pow((-e) as u32), den.clone())
        }
    };
    let one = Rational::from_integer(1.into());
    while scaled(e) < one {
        e -= 1;
    }
    while scaled(e) >= Rational::from_integer(ten.clone()) {
        e += 1;
    }

    // round |value| * 10^(digits-1-e) to an integer, half away from zero
    let shift = digits as i64 - 1 - e;
    let big = if shift >= 0 {
        Rational::new(&num * ten.pow(shift as u32), den)
    } else {
        Rational::new(num, den * ten.pow((-shift) as u32))
    };
    let mut mantissa = big.round().to_integer();
    if mantissa.to_string().len() > digits {
        mantissa /= &ten;
        e += 1;
    }
    let mut s = mantissa.to_string();
    // drop trailing zeros of the mantissa
    while s.len() > 1 && s.ends_with('0') {
        s.pop();
    }
    let body = place_point(&s, e);
    if neg && mantissa.sign() != Sign::NoSign {
        format!("-{body}")
    } else {
        body
    }
}

fn place_point(digits: &str, e: i64) -> String {
    let n = digits.len() as i64;
    if !(-6..15).contains(&e) {
        let (head, tail) = digits.split_at(1);
        return if tail.is_empty() {
            format!("{head}e{e}")
        } else {
            format!("{head}.{tail}e{e}")
        };
    }
    if e < 0 {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
    } else if e + 1 >= n {
        format!("{}{}", digits, "0".repeat((e + 1 - n) as usize))
    } else {
        let (int, frac) = digits.split_at((e + 1) as usize);
        format!("{int}.{frac}")
    }
}
