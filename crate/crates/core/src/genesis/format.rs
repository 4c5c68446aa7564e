//! Basis files.
//!
//! Text format: `[[a b …][c d …]…]`, one bracketed row per generating vector.
//! Each file row becomes one basis column. Gaussian entries are written
//! `a+bi` / `a-bi`; the reader also accepts a plain pair `a b`.
//!
//! JSON format: `{"ring": "int"|"gaussian", "dim": d, "columns": [...]}` with
//! Gaussian entries as `[re, im]`. Numbers of any size are accepted, either
//! as JSON numbers or as strings.

use serde_json::{Map, Number, Value};

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::int::Int;
use crate::ring::{Ring, RingScalar};
use crate::vector::LatticeVector;

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Reads either format, choosing JSON when the text starts with `{`.
pub fn parse_basis_any(text: &str, ring: Ring) -> Result<Basis> {
    if text.trim_start().starts_with('{') {
        let b = parse_basis_json(text)?;
        if b.ring() != ring {
            return Err(Error::RingMismatch(ring, b.ring()));
        }
        Ok(b)
    } else {
        parse_basis_file(text, ring)
    }
}

/// Parses the bracketed text format.
pub fn parse_basis_file(text: &str, ring: Ring) -> Result<Basis> {
    let rows = bracket_rows(text)?;
    let d = rows.len();
    if d == 0 {
        return Err(perr("basis has no rows"));
    }
    let mut columns = Vec::with_capacity(d);
    for (r, tokens) in rows.iter().enumerate() {
        let entries = match ring {
            Ring::Integer => tokens
                .iter()
                .map(|t| parse_int(t).map(RingScalar::int))
                .collect::<Result<Vec<_>>>()?,
            Ring::GaussianInteger => gaussian_row(tokens)?,
        };
        if entries.len() != d {
            let kind = if r == 0 {
                "wrong entry count"
            } else {
                "ragged rows"
            };
            return Err(perr(format!(
                "{kind}: row {} has {} entries, expected {d}",
                r + 1,
                entries.len()
            )));
        }
        columns.push(LatticeVector::new(entries)?);
    }
    Basis::new(columns)
}

/// Splits `[[…][…]]` into whitespace-separated tokens per inner row.
fn bracket_rows(text: &str) -> Result<Vec<Vec<String>>> {
    let mut chars = text.chars().peekable();
    let skip_ws = |it: &mut std::iter::Peekable<std::str::Chars>| {
        while it.peek().is_some_and(|c| c.is_whitespace()) {
            it.next();
        }
    };
    skip_ws(&mut chars);
    if chars.next() != Some('[') {
        return Err(perr("malformed brackets: expected '[' at start"));
    }
    let mut rows = Vec::new();
    loop {
        skip_ws(&mut chars);
        match chars.next() {
            Some(']') => break,
            Some('[') => {
                let mut row = Vec::new();
                let mut tok = String::new();
                loop {
                    match chars.next() {
                        None => return Err(perr("malformed brackets: unterminated row")),
                        Some('[') => return Err(perr("malformed brackets: nested row")),
                        Some(c) if c == ']' || c.is_whitespace() => {
                            if !tok.is_empty() {
                                row.push(std::mem::take(&mut tok));
                            }
                            if c == ']' {
                                break;
                            }
                        }
                        Some(c) => tok.push(c),
                    }
                }
                rows.push(row);
            }
            Some(c) => return Err(perr(format!("malformed brackets: unexpected '{c}'"))),
            None => return Err(perr("malformed brackets: missing final ']'")),
        }
    }
    skip_ws(&mut chars);
    if let Some(c) = chars.next() {
        return Err(perr(format!("trailing input after basis: '{c}'")));
    }
    Ok(rows)
}

fn parse_int(t: &str) -> Result<Int> {
    t.parse()
        .map_err(|_| perr(format!("not an integer: '{t}'")))
}

fn gaussian_row(tokens: &[String]) -> Result<Vec<RingScalar>> {
    let mut out = Vec::new();
    let mut it = tokens.iter();
    while let Some(t) = it.next() {
        if t.ends_with('i') {
            out.push(parse_gaussian_token(t)?);
        } else {
            let im = it.next().ok_or_else(|| {
                perr(format!(
                    "Gaussian entry '{t}' is missing its imaginary part"
                ))
            })?;
            out.push(RingScalar::gaussian(parse_int(t)?, parse_int(im)?));
        }
    }
    Ok(out)
}

/// `a+bi`, `a-bi`, `bi`, `i`, `-i`.
pub fn parse_gaussian_token(t: &str) -> Result<RingScalar> {
    let body = t
        .strip_suffix('i')
        .ok_or_else(|| perr(format!("not a Gaussian integer: '{t}'")))?;
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(p) => (parse_int(&body[..p])?, &body[p..]),
        None => (Int::ZERO, body),
    };
    let im = match im {
        "" | "+" => Int::ONE,
        "-" => -Int::ONE,
        s => parse_int(s.strip_prefix('+').unwrap_or(s))?,
    };
    Ok(RingScalar::gaussian(re, im))
}

/// Canonical text form, one row per basis column, newline-terminated.
pub fn write_basis_file(b: &Basis) -> String {
    let mut out = String::from("[");
    for c in b.columns() {
        out.push('[');
        let cells: Vec<String> = c.entries().iter().map(entry_text).collect();
        out.push_str(&cells.join(" "));
        out.push(']');
    }
    out.push_str("]\n");
    out
}

fn entry_text(e: &RingScalar) -> String {
    match e.ring() {
        Ring::Integer => e.re().to_string(),
        Ring::GaussianInteger => {
            let sign = if e.im().signum() < 0 { '-' } else { '+' };
            format!("{}{}{}i", e.re(), sign, e.im().abs())
        }
    }
}

fn json_int(x: &Int) -> Value {
    Value::Number(
        x.to_string()
            .parse::<Number>()
            .expect("integers are valid JSON numbers"),
    )
}

fn int_from_json(v: &Value) -> Result<Int> {
    match v {
        Value::Number(n) => parse_int(&n.to_string()),
        Value::String(s) => parse_int(s),
        other => Err(perr(format!("expected an integer, got {other}"))),
    }
}

pub fn write_basis_json(b: &Basis) -> String {
    let columns: Vec<Value> = b
        .columns()
        .iter()
        .map(|c| {
            Value::Array(
                c.entries()
                    .iter()
                    .map(|e| match e.ring() {
                        Ring::Integer => json_int(e.re()),
                        Ring::GaussianInteger => {
                            Value::Array(vec![json_int(e.re()), json_int(e.im())])
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("ring".into(), Value::String(b.ring().name().into()));
    obj.insert("dim".into(), Value::from(b.dim()));
    obj.insert("columns".into(), Value::Array(columns));
    let mut s = Value::Object(obj).to_string();
    s.push('\n');
    s
}

pub fn parse_basis_json(text: &str) -> Result<Basis> {
    let v: Value = serde_json::from_str(text).map_err(|e| perr(format!("invalid JSON: {e}")))?;
    let ring: Ring = v
        .get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| perr("missing \"ring\""))?
        .parse()?;
    let cols = v
        .get("columns")
        .and_then(Value::as_array)
        .ok_or_else(|| perr("missing \"columns\""))?;
    let d = cols.len();
    if let Some(dim) = v.get("dim") {
        if dim.as_u64() != Some(d as u64) {
            return Err(perr(format!("\"dim\" is {dim} but there are {d} columns")));
        }
    }
    let mut columns = Vec::with_capacity(d);
    for c in cols {
        let c = c
            .as_array()
            .ok_or_else(|| perr("each column must be an array"))?;
        if c.len() != d {
            return Err(perr(format!(
                "column has {} entries, expected {d}",
                c.len()
            )));
        }
        let entries = c
            .iter()
            .map(|e| match ring {
                Ring::Integer => int_from_json(e).map(RingScalar::int),
                Ring::GaussianInteger => match e.as_array().map(Vec::as_slice) {
                    Some([re, im]) => {
                        Ok(RingScalar::gaussian(int_from_json(re)?, int_from_json(im)?))
                    }
                    _ => Err(perr("Gaussian entries must be [re, im] pairs")),
                },
            })
            .collect::<Result<Vec<_>>>()?;
        columns.push(LatticeVector::new(entries)?);
    }
    Basis::new(columns)
}

/// Parses a vector written as `(a, b, …)`, `[a b …]` or `a,b,…`.
pub fn parse_vector(text: &str, ring: Ring) -> Result<LatticeVector> {
    let inner = text
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    let tokens: Vec<String> = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(String::from)
        .collect();
    let entries = match ring {
        Ring::Integer => tokens
            .iter()
            .map(|t| parse_int(t).map(RingScalar::int))
            .collect::<Result<Vec<_>>>()?,
        Ring::GaussianInteger => gaussian_row(&tokens)?,
    };
    LatticeVector::new(entries)
}
