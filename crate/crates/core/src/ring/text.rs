//! Canonical textual form shared by every polynomial type: terms in
//! ascending exponent, `2v^-1`, `q^2`, unit coefficients elided, `0` for zero.

use std::fmt;

use super::RingError;

pub(crate) fn write_terms<I>(f: &mut fmt::Formatter<'_>, var: char, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (i64, i64)>,
{
    let mut first = true;
    for (e, c) in terms {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if c < 0 {
            f.write_str("-")?;
        } else if !first {
            f.write_str("+")?;
        }
        first = false;
        if e == 0 {
            write!(f, "{mag}")?;
            continue;
        }
        if mag != 1 {
            write!(f, "{mag}")?;
        }
        if e == 1 {
            write!(f, "{var}")?;
        } else {
            write!(f, "{var}^{e}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Parses `term ((+|-) term)*` where a term is `[digits][var[^[-]digits]]`.
/// Whitespace is ignored.
pub(crate) fn parse_terms(s: &str, var: char) -> Result<Vec<(i64, i64)>, RingError> {
    let err = |msg: &str| RingError::Parse(format!("{msg} in {s:?}"));
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(err("empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut i = 0;
    let read_uint = |i: &mut usize| -> Option<i64> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        if start == *i {
            return None;
        }
        chars[start..*i].iter().collect::<String>().parse().ok()
    };
    while i < chars.len() {
        let mut sign = 1i64;
        match chars[i] {
            '+' if !terms.is_empty() => i += 1,
            '-' => {
                sign = -1;
                i += 1;
            }
            _ if terms.is_empty() => {}
            _ => return Err(err("expected '+' or '-'")),
        }
        let start = i;
        let coeff = read_uint(&mut i);
        if start != i && coeff.is_none() {
            return Err(err("coefficient out of range"));
        }
        let mut exp = 0i64;
        let has_var = i < chars.len() && chars[i] == var;
        if has_var {
            i += 1;
            exp = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let neg = i < chars.len() && chars[i] == '-';
                if neg {
                    i += 1;
                }
                let e = read_uint(&mut i).ok_or_else(|| err("missing exponent"))?;
                exp = if neg { -e } else { e };
            }
        } else if coeff.is_none() {
            return Err(err("empty term"));
        }
        terms.push((exp, sign * coeff.unwrap_or(1)));
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_terms() {
        assert_eq!(
            parse_terms("v^-3 + 2v^-1 - 2v + v^3", 'v').unwrap(),
            vec![(-3, 1), (-1, 2), (1, -2), (3, 1)]
        );
        assert_eq!(parse_terms("-1", 'q').unwrap(), vec![(0, -1)]);
        assert_eq!(parse_terms("0", 'q').unwrap(), vec![(0, 0)]);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_terms("", 'v').is_err());
        assert!(parse_terms("v^", 'v').is_err());
        assert!(parse_terms("2q", 'v').is_err());
        assert!(parse_terms("1v2", 'v').is_err());
        assert!(parse_terms("+", 'v').is_err());
    }
}
