//! Text and JSON grammars for interval sets.
//!
//! Text: semicolon-, `U`- or `∪`-separated closed intervals with rational
//! endpoints, e.g. `"[0,1/5] U [9/10,1]"`; singletons as `"{1/2}"`; the empty
//! set as `"{}"`. JSON: `{"intervals": [["0","1/5"],["9/10","1"]]}` with
//! endpoints as `"p/q"` or exact decimal strings.

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::sets::{Interval, IntervalSet};
use serde_json::{json, Value};

/// Parses the text grammar. Errors carry the byte position of the offending
/// token.
pub fn parse_set(input: &str) -> Result<IntervalSet> {
    let mut raw = Vec::new();
    let mut pos = 0usize;
    let bytes = input.as_bytes();
    let n = bytes.len();

    let skip_ws = |pos: &mut usize| {
        while *pos < n && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };

    skip_ws(&mut pos);
    if pos >= n {
        return Err(err(pos, "empty input"));
    }
    loop {
        skip_ws(&mut pos);
        if pos >= n {
            return Err(err(pos, "expected an interval or singleton"));
        }
        match bytes[pos] {
            b'[' => {
                let close = input[pos..]
                    .find(']')
                    .map(|i| pos + i)
                    .ok_or_else(|| err(pos, "unterminated '['"))?;
                let body = &input[pos + 1..close];
                let (lo_s, hi_s) = body
                    .split_once(',')
                    .ok_or_else(|| err(pos, "expected '[lo,hi]'"))?;
                let lo = parse_rational(lo_s).map_err(|_| err(pos, "bad lower endpoint"))?;
                let hi = parse_rational(hi_s).map_err(|_| err(pos, "bad upper endpoint"))?;
                raw.push(Interval::new(lo, hi)?);
                pos = close + 1;
            }
            b'{' => {
                let close = input[pos..]
                    .find('}')
                    .map(|i| pos + i)
                    .ok_or_else(|| err(pos, "unterminated '{'"))?;
                let body = input[pos + 1..close].trim();
                if !body.is_empty() {
                    let x = parse_rational(body).map_err(|_| err(pos, "bad singleton"))?;
                    raw.push(Interval::singleton(x));
                }
                // "{}" alone is the empty set
                pos = close + 1;
            }
            _ => return Err(err(pos, "expected '[' or '{'")),
        }
        skip_ws(&mut pos);
        if pos >= n {
            break;
        }
        // separator: ';', 'U', 'u' or '∪'
        if bytes[pos] == b';' || bytes[pos] == b'U' || bytes[pos] == b'u' {
            pos += 1;
        } else if input[pos..].starts_with('\u{222a}') {
            pos += '\u{222a}'.len_utf8();
        } else {
            return Err(err(pos, "expected a separator ('U', '∪' or ';')"));
        }
    }
    Ok(IntervalSet::canonicalize(raw))
}

/// Prints in the canonical text form; `parse_set(print_set(s)) == s`.
pub fn print_set(s: &IntervalSet) -> String {
    s.to_string()
}

pub fn set_to_json(s: &IntervalSet) -> Value {
    json!({
        "intervals": s
            .parts()
            .iter()
            .map(|iv| json!([format_rational(iv.lo()), format_rational(iv.hi())]))
            .collect::<Vec<_>>()
    })
}

pub fn set_from_json(v: &Value) -> Result<IntervalSet> {
    let arr = v
        .get("intervals")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "expected {\"intervals\": [...]}".into(),
        })?;
    let mut raw = Vec::with_capacity(arr.len());
    for pair in arr {
        let ends = pair.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
            Error::Parse {
                pos: 0,
                msg: "each interval must be a [lo, hi] pair".into(),
            }
        })?;
        let ep = |v: &Value| -> Result<Rational> {
            match v {
                Value::String(s) => parse_rational(s),
                Value::Number(x) if x.is_i64() => {
                    Ok(Rational::from_integer(x.as_i64().unwrap().into()))
                }
                _ => Err(Error::Parse {
                    pos: 0,
                    msg: "endpoints must be strings or integers".into(),
                }),
            }
        };
        raw.push(Interval::new(ep(&ends[0])?, ep(&ends[1])?)?);
    }
    Ok(IntervalSet::canonicalize(raw))
}

/// Accepts either grammar: JSON if the input starts with `{"`-style object
/// containing `intervals`, text otherwise.
pub fn parse_set_auto(input: &str) -> Result<IntervalSet> {
    let t = input.trim_start();
    if t.starts_with('{') && t.contains("intervals") {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("bad JSON: {e}"),
        })?;
        set_from_json(&v)
    } else {
        parse_set(input)
    }
}
