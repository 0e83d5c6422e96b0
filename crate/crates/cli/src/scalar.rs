use std::fmt;

use pseudofn::Complex64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarError {
    pub index: usize,
    pub token: String,
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coefficient {} (`{}`) is not of the form re, re+imi or imi", self.index, self.token)
    }
}

impl std::error::Error for ScalarError {}

/// Parses one of `1.5`, `-2`, `0+1i`, `1-0.5i`, `2i`, `-i`.
pub fn parse_complex(token: &str) -> Option<Complex64> {
    let t = token.trim();
    if t.is_empty() {
        return None;
    }
    let Some(body) = t.strip_suffix('i') else {
        return finite(t.parse().ok()?).map(|re| Complex64::new(re, 0.0));
    };
    // Split at the last sign that is not the leading one or part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (finite(body[..k].parse().ok()?)?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => finite(s.parse().ok()?)?,
    };
    Some(Complex64::new(re, im))
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

/// Comma-separated list of [`parse_complex`] tokens.
pub fn parse_complex_list(text: &str) -> Result<Vec<Complex64>, ScalarError> {
    text.split(',')
        .enumerate()
        .map(|(index, token)| {
            parse_complex(token).ok_or_else(|| ScalarError {
                index,
                token: token.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn parses_forms() {
        assert_eq!(parse_complex("1"), Some(c(1.0, 0.0)));
        assert_eq!(parse_complex("0+1i"), Some(c(0.0, 1.0)));
        assert_eq!(parse_complex("-1.5-0.25i"), Some(c(-1.5, -0.25)));
        assert_eq!(parse_complex("2i"), Some(c(0.0, 2.0)));
        assert_eq!(parse_complex("-i"), Some(c(0.0, -1.0)));
        assert_eq!(parse_complex("i"), Some(c(0.0, 1.0)));
        assert_eq!(parse_complex("1e-3+2E+1i"), Some(c(1e-3, 20.0)));
        assert_eq!(parse_complex(" 3 "), Some(c(3.0, 0.0)));
    }

    #[test]
    fn rejects_garbage() {
        for t in ["", "x", "1+", "1+2j", "1++2i", "inf", "nan+1i"] {
            assert_eq!(parse_complex(t), None, "{t}");
        }
    }

    #[test]
    fn list_reports_position() {
        assert_eq!(parse_complex_list("1,0+1i").unwrap(), vec![c(1.0, 0.0), c(0.0, 1.0)]);
        let err = parse_complex_list("1,oops,2").unwrap_err();
        assert_eq!(err.index, 1);
    }
}
