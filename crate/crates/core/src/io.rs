//! JSON file formats.
//!
//! * matrix: `{"rows": r, "cols": c, "entries": [[[re, im], ...], ...]}`
//! * group: `{"order": n, "table": [[...], ...]}` with `table[a][b] = a * b`
//! * group algebra element: `[[re, im], ...]`, one pair per group element
//! * Laurent element: `[[offset, re, im], ...]`
//!
//! Parse errors name the offending field, e.g. `entries[1][0]`.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groupalg::FiniteGroup;
use crate::laurent::LaurentElement;
use crate::pnorm::ComplexMatrix;

fn bad(field: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Format {
        field: field.into(),
        reason: reason.into(),
    }
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| bad("<document>", e.to_string()))
}

fn field<'a>(obj: &'a Value, name: &str) -> Result<&'a Value> {
    obj.as_object()
        .ok_or_else(|| bad("<document>", "expected an object"))?
        .get(name)
        .ok_or_else(|| bad(name, "missing"))
}

fn as_count(v: &Value, name: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| bad(name, "expected a nonnegative integer"))
}

fn as_array<'a>(v: &'a Value, name: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(name, "expected an array"))
}

fn as_real(v: &Value, name: &str) -> Result<f64> {
    let x = v.as_f64().ok_or_else(|| bad(name, "expected a number"))?;
    if !x.is_finite() {
        return Err(bad(name, "not finite"));
    }
    Ok(x)
}

fn as_complex(v: &Value, name: &str) -> Result<Complex64> {
    let pair = as_array(v, name)?;
    if pair.len() != 2 {
        return Err(bad(name, format!("expected [re, im], got {} numbers", pair.len())));
    }
    Ok(Complex64::new(
        as_real(&pair[0], &format!("{name}[0]"))?,
        as_real(&pair[1], &format!("{name}[1]"))?,
    ))
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let doc = parse_json(text)?;
    let rows = as_count(field(&doc, "rows")?, "rows")?;
    let cols = as_count(field(&doc, "cols")?, "cols")?;
    let entries = as_array(field(&doc, "entries")?, "entries")?;
    if entries.len() != rows {
        return Err(bad("entries", format!("expected {rows} rows, got {}", entries.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in entries.iter().enumerate() {
        let name = format!("entries[{i}]");
        let row = as_array(row, &name)?;
        if row.len() != cols {
            return Err(bad(name, format!("expected {cols} entries, got {}", row.len())));
        }
        for (j, z) in row.iter().enumerate() {
            data.push(as_complex(z, &format!("entries[{i}][{j}]"))?);
        }
    }
    ComplexMatrix::new(rows, cols, data).map_err(|e| bad("entries", e.to_string()))
}

pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().copied().map(complex_json).collect()))
        .collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": entries}).to_string()
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let doc = parse_json(text)?;
    let order = as_count(field(&doc, "order")?, "order")?;
    let rows = as_array(field(&doc, "table")?, "table")?;
    if rows.len() != order {
        return Err(bad("table", format!("expected {order} rows, got {}", rows.len())));
    }
    let mut table = Vec::with_capacity(order);
    for (a, row) in rows.iter().enumerate() {
        let name = format!("table[{a}]");
        let row = as_array(row, &name)?;
        if row.len() != order {
            return Err(bad(name, format!("expected {order} entries, got {}", row.len())));
        }
        let row = row
            .iter()
            .enumerate()
            .map(|(b, v)| {
                let name = format!("table[{a}][{b}]");
                let x = as_count(v, &name)?;
                if x >= order {
                    return Err(bad(name, format!("{x} is not an element of a group of order {order}")));
                }
                Ok(x)
            })
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    FiniteGroup::from_table(table).map_err(|e| bad("table", e.to_string()))
}

pub fn group_to_json(g: &FiniteGroup) -> String {
    json!({"order": g.order(), "table": g.table()}).to_string()
}

pub fn parse_element(text: &str) -> Result<Vec<Complex64>> {
    let doc = parse_json(text)?;
    as_array(&doc, "<document>")?
        .iter()
        .enumerate()
        .map(|(i, z)| as_complex(z, &format!("[{i}]")))
        .collect()
}

pub fn element_to_json(coeffs: &[Complex64]) -> String {
    Value::Array(coeffs.iter().copied().map(complex_json).collect()).to_string()
}

pub fn parse_laurent(text: &str) -> Result<LaurentElement> {
    let doc = parse_json(text)?;
    let terms = as_array(&doc, "<document>")?
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let name = format!("[{i}]");
            let t = as_array(t, &name)?;
            if t.len() != 3 {
                return Err(bad(name, format!("expected [offset, re, im], got {} numbers", t.len())));
            }
            let offset = t[0].as_i64().ok_or_else(|| bad(format!("[{i}][0]"), "expected an integer offset"))?;
            let re = as_real(&t[1], &format!("[{i}][1]"))?;
            let im = as_real(&t[2], &format!("[{i}][2]"))?;
            Ok((offset, Complex64::new(re, im)))
        })
        .collect::<Result<Vec<_>>>()?;
    LaurentElement::new(terms)
}

pub fn laurent_to_json(f: &LaurentElement) -> String {
    Value::Array(f.terms().map(|(n, z)| json!([n, z.re, z.im])).collect()).to_string()
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<ComplexMatrix> {
    parse_matrix(&fs::read_to_string(path)?)
}

pub fn read_group(path: impl AsRef<Path>) -> Result<FiniteGroup> {
    parse_group(&fs::read_to_string(path)?)
}

pub fn read_element(path: impl AsRef<Path>) -> Result<Vec<Complex64>> {
    parse_element(&fs::read_to_string(path)?)
}

pub fn read_laurent(path: impl AsRef<Path>) -> Result<LaurentElement> {
    parse_laurent(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field_of(e: Error) -> String {
        match e {
            Error::Format { field, .. } => field,
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn matrix_round_trip() {
        let m = ComplexMatrix::from_rows(vec![
            vec![Complex64::new(0.5, 0.5), Complex64::new(0.5, -0.5)],
            vec![Complex64::new(0.5, -0.5), Complex64::new(0.5, 0.5)],
        ])
        .unwrap();
        assert_eq!(parse_matrix(&matrix_to_json(&m)).unwrap(), m);
    }

    #[test]
    fn matrix_errors_name_the_field() {
        let ragged = r#"{"rows": 2, "cols": 2, "entries": [[[1,0],[0,0]], [[0,0]]]}"#;
        assert_eq!(field_of(parse_matrix(ragged).unwrap_err()), "entries[1]");
        let pair = r#"{"rows": 1, "cols": 1, "entries": [[[1,0,3]]]}"#;
        assert_eq!(field_of(parse_matrix(pair).unwrap_err()), "entries[0][0]");
        let text = r#"{"rows": 1, "cols": 1, "entries": [[["a",0]]]}"#;
        assert_eq!(field_of(parse_matrix(text).unwrap_err()), "entries[0][0][0]");
        assert_eq!(field_of(parse_matrix(r#"{"rows": 1}"#).unwrap_err()), "cols");
        assert_eq!(field_of(parse_matrix("[1").unwrap_err()), "<document>");
    }

    #[test]
    fn group_round_trip_and_errors() {
        let g = FiniteGroup::symmetric(3);
        let back = parse_group(&group_to_json(&g)).unwrap();
        assert_eq!(back.table(), g.table());
        let bad_entry = r#"{"order": 2, "table": [[0,1],[1,2]]}"#;
        assert_eq!(field_of(parse_group(bad_entry).unwrap_err()), "table[1][1]");
        let not_group = r#"{"order": 2, "table": [[0,1],[0,1]]}"#;
        assert_eq!(field_of(parse_group(not_group).unwrap_err()), "table");
    }

    #[test]
    fn element_and_laurent_round_trip() {
        let xs = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)];
        assert_eq!(parse_element(&element_to_json(&xs)).unwrap(), xs);
        let f = parse_laurent("[[-2, 1.5, 0], [3, 0, -1]]").unwrap();
        assert_eq!(f.support(), vec![-2, 3]);
        assert_eq!(parse_laurent(&laurent_to_json(&f)).unwrap(), f);
        assert_eq!(field_of(parse_laurent("[[0.5, 1, 0]]").unwrap_err()), "[0][0]");
    }
}
