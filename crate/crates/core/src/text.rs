//! Plain-text ideal files and monomial expressions with named variables.
//!
//! ```text
//! ring: a b c d e f
//! gens: a*b, a*c, a*d, d*e, d*f
//! ```
//!
//! `monomial := term ('*' term)*`, `term := var ('^' positiveInt)?`, where a
//! variable is a letter followed by letters, digits or underscores. The single
//! token `1` denotes the unit monomial so that printed output always parses back.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// A parsed ideal file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDocument {
    pub variables: Vec<String>,
    pub ideal: MonomialIdeal,
    /// How many listed generators were dropped as redundant during minimalization.
    pub redundant: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses one monomial expression. `line` and `column` locate `text` in the
/// enclosing document for error messages (both 1-based).
pub fn parse_monomial_at(
    text: &str,
    variables: &[String],
    line: usize,
    column: usize,
) -> Result<Monomial> {
    let trimmed_start = text.len() - text.trim_start().len();
    let body = text.trim();
    let col0 = column + trimmed_start;
    if body.is_empty() {
        return Err(parse_error(line, col0, "empty monomial"));
    }
    if body == "1" {
        return Ok(Monomial::one(variables.len()));
    }
    let mut exponents = vec![0u32; variables.len()];
    let mut offset = 0;
    for term in body.split('*') {
        let lead = term.len() - term.trim_start().len();
        let term_col = col0 + offset + lead;
        offset += term.len() + 1;
        let term = term.trim();
        let (name, power) = match term.split_once('^') {
            Some((name, power)) => (name.trim(), Some(power.trim())),
            None => (term, None),
        };
        if name.is_empty() {
            return Err(parse_error(line, term_col, "missing variable"));
        }
        let Some(index) = variables.iter().position(|v| v == name) else {
            return Err(parse_error(
                line,
                term_col,
                format!("unknown variable `{name}`"),
            ));
        };
        let exponent = match power {
            None => 1,
            Some(p) => match p.parse::<u32>() {
                Ok(e) if e >= 1 && p.chars().all(|c| c.is_ascii_digit()) => e,
                _ => {
                    return Err(parse_error(
                        line,
                        term_col + name.len() + 1,
                        format!("malformed exponent `{p}`"),
                    ))
                }
            },
        };
        exponents[index] = exponents[index]
            .checked_add(exponent)
            .ok_or_else(|| parse_error(line, term_col, "exponent overflow"))?;
    }
    Ok(Monomial::from_exponents(exponents))
}

pub fn parse_monomial(text: &str, variables: &[String]) -> Result<Monomial> {
    parse_monomial_at(text, variables, 1, 1)
}

/// Parses a comma- and/or newline-separated list of monomials.
pub fn parse_monomial_list(text: &str, variables: &[String]) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let mut col = 1;
        for piece in line.split(',') {
            if !piece.trim().is_empty() {
                out.push(parse_monomial_at(piece, variables, ln + 1, col)?);
            }
            col += piece.len() + 1;
        }
    }
    Ok(out)
}

/// Strips `key:` from the start of `line`, returning the remainder and its
/// 1-based column.
fn strip_key<'a>(line: &'a str, key: &str) -> Option<(&'a str, usize)> {
    let rest = line.trim_start().strip_prefix(key)?;
    let rest = rest.trim_start().strip_prefix(':')?;
    Some((rest, line.len() - rest.len() + 1))
}

/// Parses a `ring:` line followed by a `gens:` line.
pub fn parse_ideal_file(text: &str) -> Result<IdealDocument> {
    let mut variables: Option<Vec<String>> = None;
    let mut gens: Option<Vec<Monomial>> = None;
    let mut last_line = 0;
    for (ln, line) in text.lines().enumerate() {
        let ln = ln + 1;
        last_line = ln;
        if line.trim().is_empty() {
            continue;
        }
        if let Some((rest, col)) = strip_key(line, "ring") {
            if variables.is_some() {
                return Err(parse_error(ln, 1, "duplicate `ring:` line"));
            }
            let mut names: Vec<String> = Vec::new();
            let mut offset = 0;
            for token in rest.split_whitespace() {
                let at = rest[offset..].find(token).expect("token of rest") + offset;
                offset = at + token.len();
                if !is_identifier(token) {
                    return Err(parse_error(
                        ln,
                        col + at,
                        format!("invalid variable name `{token}`"),
                    ));
                }
                if names.iter().any(|n| n == token) {
                    return Err(parse_error(
                        ln,
                        col + at,
                        format!("variable `{token}` declared twice"),
                    ));
                }
                names.push(token.to_string());
            }
            if names.is_empty() {
                return Err(parse_error(ln, col, "empty ring"));
            }
            variables = Some(names);
        } else if let Some((rest, col)) = strip_key(line, "gens") {
            let Some(names) = &variables else {
                return Err(parse_error(ln, 1, "`gens:` before `ring:`"));
            };
            if gens.is_some() {
                return Err(parse_error(ln, 1, "duplicate `gens:` line"));
            }
            let mut list = Vec::new();
            if !rest.trim().is_empty() {
                let mut c = col;
                for piece in rest.split(',') {
                    list.push(parse_monomial_at(piece, names, ln, c)?);
                    c += piece.len() + 1;
                }
            }
            gens = Some(list);
        } else {
            let lead = line.len() - line.trim_start().len();
            return Err(parse_error(ln, lead + 1, "expected `ring:` or `gens:`"));
        }
    }
    let Some(variables) = variables else {
        return Err(parse_error(last_line.max(1), 1, "missing `ring:` line"));
    };
    let Some(gens) = gens else {
        return Err(parse_error(last_line.max(1), 1, "missing `gens:` line"));
    };
    let listed = gens.len();
    let ideal = MonomialIdeal::new(variables.len(), gens)?;
    let redundant = listed - ideal.len();
    Ok(IdealDocument {
        variables,
        ideal,
        redundant,
    })
}

/// Formats `u` with the given variable names: `a*b^2*c`, or `1`.
pub fn format_monomial(u: &Monomial, variables: &[String]) -> String {
    if u.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (i, &e) in u.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(variables[i].clone()),
            _ => parts.push(format!("{}^{e}", variables[i])),
        }
    }
    parts.join("*")
}

/// Renders an ideal in the file format accepted by [`parse_ideal_file`].
pub fn format_ideal_file(ideal: &MonomialIdeal, variables: &[String]) -> String {
    let gens: Vec<String> = ideal
        .generators()
        .iter()
        .map(|g| format_monomial(g, variables))
        .collect();
    format!("ring: {}\ngens: {}\n", variables.join(" "), gens.join(", "))
}

/// `x1, ..., xn`.
pub fn default_variables(arity: usize) -> Vec<String> {
    (1..=arity).map(|i| format!("x{i}")).collect()
}
