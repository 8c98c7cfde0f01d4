//! Input documents: presentation and diagram text files.
//!
//! Presentation files:
//!
//! ```text
//! elements 6
//! interval 1 3
//! interval 3 5
//! interval 5 1
//! ```
//!
//! Diagram files:
//!
//! ```text
//! diagram
//! k 2
//! m 3
//! r 3
//! P NENENE
//! Q NENENE
//! ```
//!
//! `#` starts a comment; blank lines are ignored.  Emission is canonical:
//! parsing an emitted document and emitting again is byte-identical.
//! Element names in files are the canonical labels 1..n, so the source
//! label mapping is the identity.

use mpm::{Diagram, LatticePath, SigmaInterval, SigmaIntervalSystem};

use crate::CliError;

#[derive(Debug, Clone)]
pub enum InputDocument {
    Presentation(SigmaIntervalSystem),
    Diagram(Diagram),
}

pub fn parse_input(text: &str) -> Result<InputDocument, CliError> {
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if !line.is_empty() {
            lines.push((idx + 1, line));
        }
    }
    let Some(&(first_no, first)) = lines.first() else {
        return Err(CliError::input("empty input document"));
    };
    let mut words = first.split_whitespace();
    match words.next() {
        Some("elements") => parse_presentation(&lines),
        Some("diagram") => {
            if words.next().is_some() {
                return Err(CliError::input(format!(
                    "line {first_no}: unexpected tokens after 'diagram'"
                )));
            }
            parse_diagram(&lines[1..])
        }
        Some(other) => Err(CliError::input(format!(
            "line {first_no}: expected 'elements <n>' or 'diagram', found {other:?}"
        ))),
        None => unreachable!("blank lines are filtered"),
    }
}

fn parse_presentation(lines: &[(usize, &str)]) -> Result<InputDocument, CliError> {
    let mut n: Option<u32> = None;
    let mut intervals = Vec::new();
    for &(no, line) in lines {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("elements") => {
                if n.is_some() {
                    return Err(CliError::input(format!(
                        "line {no}: duplicate 'elements' line"
                    )));
                }
                let value = words
                    .next()
                    .ok_or_else(|| CliError::input(format!("line {no}: missing element count")))?;
                let count: u32 = value.parse().map_err(|_| {
                    CliError::input(format!("line {no}: invalid element count {value:?}"))
                })?;
                if count == 0 {
                    return Err(CliError::input(format!(
                        "line {no}: element count must be positive"
                    )));
                }
                if words.next().is_some() {
                    return Err(CliError::input(format!("line {no}: trailing tokens")));
                }
                n = Some(count);
            }
            Some("interval") => {
                let n = n.ok_or_else(|| {
                    CliError::input(format!("line {no}: 'interval' before 'elements'"))
                })?;
                let mut endpoint = |name: &str| -> Result<u32, CliError> {
                    let value = words.next().ok_or_else(|| {
                        CliError::input(format!("line {no}: missing {name} endpoint"))
                    })?;
                    let e: u32 = value.parse().map_err(|_| {
                        CliError::input(format!("line {no}: invalid endpoint {value:?}"))
                    })?;
                    if e == 0 || e > n {
                        return Err(CliError::input(format!(
                            "line {no}: interval endpoint {e} out of range 1..={n}"
                        )));
                    }
                    Ok(e)
                };
                let first = endpoint("first")?;
                let last = endpoint("last")?;
                if words.next().is_some() {
                    return Err(CliError::input(format!("line {no}: trailing tokens")));
                }
                intervals.push(SigmaInterval::new(first, last));
            }
            Some(other) => {
                return Err(CliError::input(format!(
                    "line {no}: unknown directive {other:?}"
                )))
            }
            None => unreachable!(),
        }
    }
    let n = n.ok_or_else(|| CliError::input("missing 'elements' line"))?;
    let sys = SigmaIntervalSystem::new(n, intervals).map_err(|e| CliError::input(e.to_string()))?;
    Ok(InputDocument::Presentation(sys))
}

fn parse_diagram(lines: &[(usize, &str)]) -> Result<InputDocument, CliError> {
    let mut k: Option<u32> = None;
    let mut m: Option<u32> = None;
    let mut r: Option<u32> = None;
    let mut p: Option<LatticePath> = None;
    let mut q: Option<LatticePath> = None;
    for &(no, line) in lines {
        let mut words = line.split_whitespace();
        let key = words.next().unwrap();
        match key {
            "k" | "m" | "r" => {
                let value = words.next().ok_or_else(|| {
                    CliError::input(format!("line {no}: missing value for {key}"))
                })?;
                let parsed: u32 = value.parse().map_err(|_| {
                    CliError::input(format!("line {no}: invalid value {value:?} for {key}"))
                })?;
                let slot = match key {
                    "k" => &mut k,
                    "m" => &mut m,
                    _ => &mut r,
                };
                if slot.replace(parsed).is_some() {
                    return Err(CliError::input(format!(
                        "line {no}: duplicate '{key}' line"
                    )));
                }
            }
            "P" | "Q" => {
                let word = words.next().unwrap_or("");
                let path = LatticePath::from_word(word)
                    .map_err(|e| CliError::input(format!("line {no}: {e}")))?;
                let slot = if key == "P" { &mut p } else { &mut q };
                if slot.replace(path).is_some() {
                    return Err(CliError::input(format!(
                        "line {no}: duplicate '{key}' line"
                    )));
                }
            }
            other => {
                return Err(CliError::input(format!(
                    "line {no}: unknown diagram field {other:?}"
                )))
            }
        }
        if words.next().is_some() {
            return Err(CliError::input(format!("line {no}: trailing tokens")));
        }
    }
    let field = |name: &str, v: Option<u32>| {
        v.ok_or_else(|| CliError::input(format!("missing '{name}' line")))
    };
    let k = field("k", k)?;
    let m = field("m", m)?;
    let r = field("r", r)?;
    let p = p.ok_or_else(|| CliError::input("missing 'P' line"))?;
    let q = q.ok_or_else(|| CliError::input("missing 'Q' line"))?;
    let d = Diagram::new(k, m, r, p, q).map_err(|e| CliError::input(e.to_string()))?;
    Ok(InputDocument::Diagram(d))
}

/// Canonical presentation emission: intervals sorted by endpoints.
pub fn emit_presentation(sys: &SigmaIntervalSystem) -> String {
    let mut out = format!("elements {}\n", sys.ground_size());
    let mut intervals = sys.intervals().to_vec();
    intervals.sort();
    for iv in intervals {
        out.push_str(&format!("interval {} {}\n", iv.first, iv.last));
    }
    out
}
