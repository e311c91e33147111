//! Matrix and trajectory argument parsing.

use std::io::Read;

use serde_json::Value;
use symgame::rational::parse_rational;
use symgame::{Error, PayoffMatrix, Rational};

/// Accepts `a,b;c,d`, the JSON form `{"payoff": [[a,b],[c,d]]}`, or `-` for stdin.
pub fn parse_matrix_arg(arg: &str) -> Result<PayoffMatrix, Error> {
    if arg.trim() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| parse_error("-", e.to_string()))?;
        return parse_matrix(&text);
    }
    parse_matrix(arg)
}

pub fn parse_matrix(text: &str) -> Result<PayoffMatrix, Error> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        parse_json_matrix(trimmed)
    } else {
        trimmed.parse()
    }
}

fn parse_error(token: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        token: token.to_string(),
        reason: reason.into(),
    }
}

fn json_entry(value: &Value) -> Result<Rational, Error> {
    match value {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        other => Err(parse_error(&other.to_string(), "payoff must be a number or string")),
    }
}

fn parse_json_matrix(text: &str) -> Result<PayoffMatrix, Error> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| parse_error(text, format!("invalid JSON: {e}")))?;
    let rows = value
        .get("payoff")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_error(text, "expected {\"payoff\": [[a,b],[c,d]]}"))?;
    if rows.len() != 2 {
        return Err(parse_error(text, "payoff must have 2 rows"));
    }
    let mut entries = Vec::with_capacity(4);
    for row in rows {
        let cells = row
            .as_array()
            .filter(|cells| cells.len() == 2)
            .ok_or_else(|| parse_error(&row.to_string(), "each row must have 2 entries"))?;
        for cell in cells {
            entries.push(json_entry(cell)?);
        }
    }
    let entries: [Rational; 4] = entries.try_into().expect("2x2");
    Ok(PayoffMatrix::from_entries(entries))
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectorySpec {
    pub start: PayoffMatrix,
    pub end: PayoffMatrix,
    pub samples: usize,
}

/// `"a,b;c,d;e,f;g,h;n"`: start matrix, end matrix, sample count.
pub fn parse_trajectory(text: &str) -> Result<TrajectorySpec, Error> {
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != 5 {
        return Err(parse_error(
            text,
            "expected P0;P1;n as 'a,b;c,d;e,f;g,h;n'",
        ));
    }
    let start = parse_matrix(&format!("{};{}", parts[0], parts[1]))?;
    let end = parse_matrix(&format!("{};{}", parts[2], parts[3]))?;
    let n_text = parts[4].trim();
    let samples: usize = n_text
        .parse()
        .map_err(|_| parse_error(n_text, "sample count must be a positive integer"))?;
    if samples < 2 {
        return Err(parse_error(n_text, "trajectory needs at least 2 samples"));
    }
    Ok(TrajectorySpec {
        start,
        end,
        samples,
    })
}

/// One matrix per non-empty line; `#` starts a comment.
pub fn parse_points_file(text: &str) -> Result<Vec<PayoffMatrix>, Error> {
    text.lines()
        .map(|line| line.split('#').next().unwrap_or("").trim())
        .filter(|line| !line.is_empty())
        .map(parse_matrix)
        .collect()
}
