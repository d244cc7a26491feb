//! Vector text format: a header `p kind d n` with kind `tensor` or `sym`,
//! then the coordinates in basis order separated by whitespace.

use super::{RepVector, Representation};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::text::{content_lines, parse_usize};

pub fn format_rep_vector(v: &RepVector) -> String {
    let (kind, d) = match v.rep {
        Representation::TensorPower(d) => ("tensor", d),
        Representation::SymPower(d) => ("sym", d),
    };
    let coords: Vec<String> = v.coords.iter().map(u8::to_string).collect();
    format!("{} {kind} {d} {}\n{}\n", v.field.p(), v.n, coords.join(" "))
}

pub fn parse_rep_vector(text: &str) -> Result<RepVector> {
    let mut lines = content_lines(text);
    let head = lines.next().ok_or_else(|| Error::Parse("empty vector file".into()))?;
    let toks: Vec<&str> = head.split_whitespace().collect();
    let [p, kind, d, n] = toks[..] else {
        return Err(Error::Parse(format!("vector header must be `p kind d n`, got {head:?}")));
    };
    let field = PrimeField::new(parse_usize(p)? as u32)?;
    let d = parse_usize(d)?;
    let rep = match kind {
        "tensor" => Representation::TensorPower(d),
        "sym" => Representation::SymPower(d),
        other => return Err(Error::Parse(format!("unknown representation kind {other:?}"))),
    };
    let coords: Vec<u8> = lines
        .flat_map(str::split_whitespace)
        .map(|t| parse_usize(t).map(|v| v.min(255) as u8))
        .collect::<Result<_>>()?;
    RepVector::new(field, rep, parse_usize(n)?, coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let k = PrimeField::new(3).unwrap();
        let v = RepVector::new(k, Representation::SymPower(2), 2, vec![1, 2, 0]).unwrap();
        let s = format_rep_vector(&v);
        assert_eq!(s, "3 sym 2 2\n1 2 0\n");
        assert_eq!(parse_rep_vector(&s).unwrap(), v);
        let w = parse_rep_vector("# e1 (x) e2\n2 tensor 2 2\n0 1\n0 0\n").unwrap();
        assert_eq!(w.coords, vec![0, 1, 0, 0]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_rep_vector("2 alt 2 2\n0"), Err(Error::Parse(_))));
        assert!(matches!(parse_rep_vector("2 sym 2 2\n0 1"), Err(Error::Shape(_))));
        assert!(matches!(parse_rep_vector("2 sym 2 1\n2"), Err(Error::Range { .. })));
        assert!(matches!(parse_rep_vector("2 sym 9 1\n1"), Err(Error::Range { .. })));
    }
}
