//! Tensor text format.
//!
//! Dense: a header `p d n₁ … n_d`, then the entries row-major separated by
//! whitespace. Sparse: the same header followed by the token `sparse`, then one
//! line `i₁ … i_d a` per nonzero entry with 1-based indices; unlisted entries
//! are zero. Several tensors in one file are separated by blank lines.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::text::{content_lines, parse_usize};
use crate::tensor::Tensor;

fn header(t: &Tensor) -> String {
    let dims: Vec<String> = t.dims().iter().map(usize::to_string).collect();
    format!("{} {} {}", t.field().p(), t.order(), dims.join(" "))
}

/// Canonical dense form: header, then one line per slice of the last axis
/// (i.e. rows of `n_d` entries).
pub fn format_tensor(t: &Tensor) -> String {
    let mut out = header(t);
    out.push('\n');
    let row_len = *t.dims().last().expect("order >= 1");
    for row in t.data().chunks(row_len) {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn format_tensor_sparse(t: &Tensor) -> String {
    let mut out = header(t);
    out.push_str(" sparse\n");
    for (o, &v) in t.data().iter().enumerate() {
        if v != 0 {
            let idx: Vec<String> = t.multi_index(o).iter().map(|i| (i + 1).to_string()).collect();
            out.push_str(&format!("{} {v}\n", idx.join(" ")));
        }
    }
    out
}

pub fn parse_tensor(text: &str) -> Result<Tensor> {
    let mut lines = content_lines(text);
    let head = lines.next().ok_or_else(|| Error::Parse("empty tensor file".into()))?;
    let mut toks: Vec<&str> = head.split_whitespace().collect();
    let sparse = toks.last() == Some(&"sparse");
    if sparse {
        toks.pop();
    }
    let nums: Vec<usize> = toks.iter().map(|t| parse_usize(t)).collect::<Result<_>>()?;
    if nums.len() < 2 || nums.len() != 2 + nums[1] {
        return Err(Error::Parse(format!("tensor header must be `p d n1 .. nd`, got {head:?}")));
    }
    let field = PrimeField::new(nums[0] as u32)?;
    let dims = &nums[2..];
    if sparse {
        let mut t = Tensor::zeros(field, dims)?;
        for line in lines {
            let vals: Vec<usize> = line.split_whitespace().map(parse_usize).collect::<Result<_>>()?;
            if vals.len() != dims.len() + 1 {
                return Err(Error::Parse(format!("sparse entry {line:?} needs {} numbers", dims.len() + 1)));
            }
            let (idx, a) = vals.split_at(dims.len());
            if idx.iter().zip(dims).any(|(&i, &n)| i == 0 || i > n) {
                return Err(Error::Index(format!("sparse index {idx:?} outside {dims:?} (1-based)")));
            }
            if a[0] >= field.size() {
                return Err(Error::Range {
                    value: a[0],
                    bound: field.size(),
                });
            }
            let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
            t.set(&zero_based, a[0] as u8);
        }
        Ok(t)
    } else {
        let entries: Vec<u8> = lines
            .flat_map(str::split_whitespace)
            .map(|tok| parse_usize(tok).map(|v| v.min(255) as u8))
            .collect::<Result<_>>()?;
        Tensor::from_entries(field, dims, entries)
    }
}

/// Parses one or more tensors separated by blank lines.
pub fn parse_tensors(text: &str) -> Result<Vec<Tensor>> {
    let mut blocks: Vec<String> = vec![String::new()];
    for line in text.lines() {
        let content = line.split('#').next().unwrap_or("").trim();
        if line.trim().is_empty() {
            if !blocks.last().expect("nonempty").trim().is_empty() {
                blocks.push(String::new());
            }
        } else if !content.is_empty() {
            let cur = blocks.last_mut().expect("nonempty");
            cur.push_str(content);
            cur.push('\n');
        }
    }
    blocks
        .iter()
        .filter(|b| !b.trim().is_empty())
        .map(|b| parse_tensor(b))
        .collect()
}
