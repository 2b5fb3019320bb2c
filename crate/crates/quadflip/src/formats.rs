//! JSON encodings. Integers are written as JSON numbers of any size; on
//! input, digit strings are accepted as well. Object keys come out sorted.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use quadflip_core::fano::{CodimReport, FanoDim, Regime, SodCounts};
use quadflip_core::hodge::{HodgeDiamond, HodgeError};
use quadflip_core::{Ledger, Motive, Verdict};
use serde_json::{json, Map, Number, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{0}` is missing")]
    Missing(&'static str),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Hodge(#[from] HodgeError),
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Field {
        field: field.into(),
        message: message.into(),
    }
}

/// A diamond read from JSON with its metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct DiamondFile {
    pub name: Option<String>,
    pub provenance: Option<String>,
    /// Only some entries are known (typically the `(p,p)` ones).
    pub partial: bool,
    /// Builtin name of the Fano scheme of lines, for obstruction checks.
    pub lines: Option<String>,
    pub expected_verdict: Option<Verdict>,
    pub diamond: HodgeDiamond,
}

pub fn big(v: &BigUint) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal digits"))
}

pub fn big_signed(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal digits"))
}

fn parse_big(v: &Value, field: &str) -> Result<BigUint, FormatError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(field_err(field, "expected a nonnegative integer")),
    };
    BigUint::from_str(&text).map_err(|_| field_err(field, format!("`{text}` is not a nonnegative integer")))
}

fn parse_u32(v: &Value, field: &str) -> Result<u32, FormatError> {
    v.as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| field_err(field, "expected a small nonnegative integer"))
}

pub fn parse_verdict(s: &str) -> Option<Verdict> {
    match s.to_ascii_uppercase().as_str() {
        "OBSTRUCTED" => Some(Verdict::Obstructed),
        "INCONCLUSIVE" => Some(Verdict::Inconclusive),
        _ => None,
    }
}

/// Reads `{"dim": n, "entries": [[p, q, h], ...], ...}`. With `validate`,
/// the table must have Hodge symmetry and Serre duality.
pub fn parse_diamond(text: &str, validate: bool) -> Result<DiamondFile, FormatError> {
    let v: Value = serde_json::from_str(text)?;
    let obj = v.as_object().ok_or_else(|| field_err("<root>", "expected an object"))?;
    let dim = parse_u32(obj.get("dim").ok_or(FormatError::Missing("dim"))?, "dim")?;
    let raw = obj
        .get("entries")
        .ok_or(FormatError::Missing("entries"))?
        .as_array()
        .ok_or_else(|| field_err("entries", "expected an array"))?;
    let mut entries = Vec::with_capacity(raw.len());
    for (i, e) in raw.iter().enumerate() {
        let f = format!("entries[{i}]");
        let triple = e
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| field_err(&f, "expected [p, q, value]"))?;
        entries.push((
            parse_u32(&triple[0], &f)?,
            parse_u32(&triple[1], &f)?,
            parse_big(&triple[2], &f)?,
        ));
    }
    let mut diamond = HodgeDiamond::from_entries(dim, entries)?;
    if validate {
        diamond = diamond.validate()?;
    }
    let string = |key: &'static str| -> Result<Option<String>, FormatError> {
        match obj.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(Value::String(s)) => Ok(Some(s.clone())),
            Some(_) => Err(field_err(key, "expected a string")),
        }
    };
    let expected_verdict = match string("expected_verdict")? {
        None => None,
        Some(s) => Some(
            parse_verdict(&s)
                .ok_or_else(|| field_err("expected_verdict", "expected OBSTRUCTED or INCONCLUSIVE"))?,
        ),
    };
    let partial = match obj.get("partial") {
        None => false,
        Some(Value::Bool(b)) => *b,
        Some(_) => return Err(field_err("partial", "expected a boolean")),
    };
    Ok(DiamondFile {
        name: string("name")?,
        provenance: string("provenance")?,
        partial,
        lines: string("lines")?,
        expected_verdict,
        diamond,
    })
}

pub fn diamond_to_json(d: &HodgeDiamond) -> Value {
    let entries: Vec<Value> = d
        .entries()
        .iter()
        .map(|(p, q, v)| json!([p, q, big(v)]))
        .collect();
    json!({
        "dim": d.dim(),
        "entries": entries,
        "column": d.column().iter().map(big).collect::<Vec<_>>(),
        "hh0": big(&d.hh0()),
        "euler": big_signed(&d.euler()),
    })
}

pub fn ledger_to_json(l: &Ledger) -> Value {
    let m: Map<String, Value> = l.iter().map(|(a, k)| (a.to_string(), big(k))).collect();
    Value::Object(m)
}

pub fn motive_to_json(m: &Motive) -> Value {
    let terms: Vec<Value> = m
        .terms()
        .map(|(mono, c)| {
            json!({
                "l": mono.l_power(),
                "atoms": mono.atoms(),
                "coeff": big_signed(c),
            })
        })
        .collect();
    json!({ "text": m.to_string(), "terms": terms })
}

pub fn fano_dim_to_json(d: &FanoDim) -> Value {
    let opt = |v: Option<u32>| v.map_or(Value::Null, |x| json!(x));
    match *d {
        FanoDim::Expected(v) => json!({ "expected": v, "empty": v < 0 }),
        FanoDim::Table(v) => json!({ "table": opt(v), "empty": v.is_none() }),
        FanoDim::Split { sigma, tau } => json!({
            "sigma": opt(sigma),
            "tau": opt(tau),
            "empty": sigma.is_none() && tau.is_none(),
        }),
    }
}

pub fn regime_name(r: Regime) -> String {
    r.to_string()
}

pub fn codim_report_to_json(r: &CodimReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "lhs": c.lhs, "rhs": c.rhs, "pass": c.pass() }))
        .collect();
    json!({
        "family": r.params.family.name(),
        "n": r.params.n,
        "k": r.params.k,
        "regime": regime_name(r.regime),
        "checks": checks,
        "pass": r.pass(),
    })
}

pub fn sod_counts_to_json(s: &SodCounts) -> Value {
    json!({
        "regime": regime_name(s.regime),
        "primary": ledger_to_json(&s.primary),
        "alternative": s.alternative.as_ref().map_or(Value::Null, ledger_to_json),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond_round_trip() {
        let text = r#"{"dim": 1, "entries": [[0,0,1],[1,0,"2"],[0,1,2],[1,1,1]]}"#;
        let f = parse_diamond(text, true).unwrap();
        assert_eq!(f.diamond, HodgeDiamond::curve(2));
        let back = diamond_to_json(&f.diamond).to_string();
        let again = parse_diamond(&back, true).unwrap();
        assert_eq!(again.diamond, f.diamond);
    }

    #[test]
    fn huge_entries() {
        let text = r#"{"dim": 0, "entries": [[0,0,123456789012345678901234567890]]}"#;
        let f = parse_diamond(text, true).unwrap();
        assert_eq!(f.diamond.hh0().to_string(), "123456789012345678901234567890");
        assert!(diamond_to_json(&f.diamond)
            .to_string()
            .contains("123456789012345678901234567890"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_diamond("{", true).is_err());
        assert!(parse_diamond(r#"{"entries": []}"#, true).is_err());
        assert!(parse_diamond(r#"{"dim": 1, "entries": [[0,0,-1]]}"#, true).is_err());
        assert!(parse_diamond(r#"{"dim": 1, "entries": [[2,0,1]]}"#, true).is_err());
        let asym = r#"{"dim": 1, "entries": [[0,0,1],[1,0,1],[1,1,1]]}"#;
        assert!(parse_diamond(asym, true).is_err());
        assert!(parse_diamond(asym, false).is_ok());
    }

    #[test]
    fn ledger_keys_sorted() {
        let l = Ledger::from_pairs([("Dpt", 26), ("DC", 8), ("DSym2C", 1)]);
        assert_eq!(ledger_to_json(&l).to_string(), r#"{"DC":8,"DSym2C":1,"Dpt":26}"#);
    }
}
