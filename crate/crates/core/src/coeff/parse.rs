//! Parser for the text form produced by `Display for Coeff`.
//!
//! Grammar: `expr := laurent | "(" laurent ")" "/" "(" laurent ")"`, where a
//! laurent polynomial is a signed sum of terms `c`, `v`, `v^e`, `c*v`, `c*v^e`.

use super::Coeff;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse coefficient {input:?}: {reason}")]
pub struct ParseCoeffError {
    pub input: String,
    pub reason: String,
}

pub(crate) fn parse_coeff(s: &str) -> Result<Coeff, ParseCoeffError> {
    let err = |reason: &str| ParseCoeffError { input: s.to_string(), reason: reason.to_string() };
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(err("empty input"));
    }
    if let Some(rest) = t.strip_prefix('(') {
        let close = matching_paren(rest).ok_or_else(|| err("unbalanced parenthesis"))?;
        let num = parse_laurent(&rest[..close]).map_err(|r| err(&r))?;
        let after = &rest[close + 1..];
        if after.is_empty() {
            return Ok(num);
        }
        let den_src = after.strip_prefix('/').ok_or_else(|| err("expected '/' after numerator"))?;
        let den_src = den_src
            .strip_prefix('(')
            .and_then(|d| d.strip_suffix(')'))
            .unwrap_or(den_src);
        let den = parse_laurent(den_src).map_err(|r| err(&r))?;
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        return Ok(num / den);
    }
    parse_laurent(&t).map_err(|r| err(&r))
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 1usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_laurent(s: &str) -> Result<Coeff, String> {
    if s.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    let mut acc = Coeff::zero();
    for t in terms {
        acc = acc + parse_term(t)?;
    }
    Ok(acc)
}

fn parse_term(t: &str) -> Result<Coeff, String> {
    let (neg, body) = match t.as_bytes().first() {
        Some(b'-') => (true, &t[1..]),
        Some(b'+') => (false, &t[1..]),
        _ => (false, t),
    };
    if body.is_empty() {
        return Err(format!("dangling sign in {t:?}"));
    }
    let (coef, vpart) = match body.split_once('*') {
        Some((c, v)) => (c, Some(v)),
        None if body.starts_with('v') => ("1", Some(body)),
        None => (body, None),
    };
    let c: BigInt = coef.parse().map_err(|_| format!("bad integer {coef:?}"))?;
    let e: i64 = match vpart {
        None => 0,
        Some("v") => 1,
        Some(v) => {
            let exp = v.strip_prefix("v^").ok_or_else(|| format!("bad power {v:?}"))?;
            exp.parse().map_err(|_| format!("bad exponent {exp:?}"))?
        }
    };
    let c = if neg { -c } else { c };
    Ok(Coeff::from_bigint(c) * Coeff::v_pow(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_loose_forms() {
        let a: Coeff = "2*v^3 - v^-1 + 5".parse().unwrap();
        assert_eq!(a, Coeff::laurent(&[(3, 2), (-1, -1), (0, 5)]));
        let b: Coeff = "(v)/(1 + v^2)".parse().unwrap();
        assert_eq!(b, Coeff::v_pow(1) / Coeff::laurent(&[(0, 1), (2, 1)]));
        assert_eq!("-v".parse::<Coeff>().unwrap(), Coeff::term(-1, 1));
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<Coeff>().is_err());
        assert!("(v".parse::<Coeff>().is_err());
        assert!("x^2".parse::<Coeff>().is_err());
        assert!("(1)/(0)".parse::<Coeff>().is_err());
    }
}
