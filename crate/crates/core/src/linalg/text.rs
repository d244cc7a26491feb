//! Matrix text format: a header line `p m n`, then `m` lines of `n` entries.
//!
//! Output puts single spaces between entries. Input accepts any whitespace,
//! `#` comment lines, and (for p ≤ 7) rows written as unseparated digit
//! strings such as `0110`.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Matrix;

pub fn format_matrix(m: &Matrix) -> String {
    let mut out = format!("{} {} {}\n", m.field().p(), m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(u8::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

pub(crate) fn parse_usize(tok: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::Parse(format!("expected a nonnegative integer, got {tok:?}")))
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let head: Vec<usize> = header.split_whitespace().map(parse_usize).collect::<Result<_>>()?;
    let [p, m, n] = head[..] else {
        return Err(Error::Parse(format!("matrix header must be `p m n`, got {header:?}")));
    };
    let field = PrimeField::new(p as u32)?;
    let body: Vec<&str> = lines.collect();
    let mut entries: Vec<u8> = Vec::with_capacity(m * n);
    let tokens: Vec<&str> = body.iter().flat_map(|l| l.split_whitespace()).collect();
    if tokens.len() == m * n {
        for t in tokens {
            entries.push(parse_usize(t)? as u8);
        }
    } else if p <= 7 && body.len() == m && body.iter().all(|l| l.len() == n && l.bytes().all(|b| b.is_ascii_digit())) {
        for l in &body {
            entries.extend(l.bytes().map(|b| b - b'0'));
        }
    } else {
        return Err(Error::Parse(format!(
            "expected {} entries, found {}",
            m * n,
            tokens.len()
        )));
    }
    Matrix::from_entries(field, m, n, entries)
}
