//! Line-oriented text format for Kronecker modules.
//!
//! ```text
//! # B(1) for three arrows
//! kron n=3 field=gf(5) dims=1,1
//! alpha 1
//! 1
//! alpha 2
//! 0
//! alpha 3
//! 0
//! ```
//!
//! After the header come `n` blocks `alpha i`, each holding `dims.1` rows of
//! `dims.0` entries. A block with no rows or no columns has no lines. `#`
//! starts a comment; blank lines are ignored. The canonical form written by
//! [`write_module_file`] has no comments and single spaces.

use std::fmt;

use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::kron::KroneckerModule;
use crate::linalg::Matrix;
use crate::{Error, Result};

/// A module over whichever field its file names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyModule {
    Prime(KroneckerModule<PrimeField>),
    Rational(KroneckerModule<Rationals>),
}

impl AnyModule {
    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyModule::Prime(m) => m.field().spec(),
            AnyModule::Rational(_) => FieldSpec::Rationals,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyModule::Prime(m) => m.n(),
            AnyModule::Rational(m) => m.n(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyModule::Prime(m) => write_module_file(m),
            AnyModule::Rational(m) => write_module_file(m),
        }
    }
}

impl fmt::Display for AnyModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn write_module_file<F: Field>(m: &KroneckerModule<F>) -> String {
    let f = m.field();
    let mut out = format!("kron n={} field={} dims={},{}\n", m.n(), f.spec(), m.dim1(), m.dim2());
    for (i, a) in m.alphas().iter().enumerate() {
        out.push_str(&format!("alpha {}\n", i + 1));
        if a.cols() == 0 {
            continue;
        }
        for r in 0..a.rows() {
            let row: Vec<String> = a.row(r).iter().map(|x| f.format(x)).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_module_file(text: &str) -> Result<AnyModule> {
    let lines = significant_lines(text);
    let (header, rest) = lines.split_first().ok_or_else(|| parse_error(1, 1, "empty module file"))?;
    let header = parse_header(header)?;
    match header.field {
        FieldSpec::Prime(p) => {
            let field = PrimeField::new(p).map_err(|e| parse_error(header.line, header.field_col, &e.to_string()))?;
            parse_body(&field, &header, rest).map(AnyModule::Prime)
        }
        FieldSpec::Rationals => parse_body(&Rationals, &header, rest).map(AnyModule::Rational),
    }
}

/// Parses a file whose field must be `field`.
pub fn parse_module_file_over<F: Field>(field: &F, text: &str) -> Result<KroneckerModule<F>> {
    let lines = significant_lines(text);
    let (header, rest) = lines.split_first().ok_or_else(|| parse_error(1, 1, "empty module file"))?;
    let header = parse_header(header)?;
    if header.field != field.spec() {
        return Err(parse_error(
            header.line,
            header.field_col,
            &format!("expected field {}, file declares {}", field.spec(), header.field),
        ));
    }
    parse_body(field, &header, rest)
}

/// Re-emits a module file in canonical form.
pub fn canonicalize(text: &str) -> Result<String> {
    parse_module_file(text).map(|m| m.to_text())
}

/// A token with its 1-based line and column.
#[derive(Clone, Debug)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

#[derive(Clone, Debug)]
struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn significant_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(k, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in content.char_indices().chain([(content.len(), ' ')]) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push(Token { text: &content[s..pos], column: content[..s].chars().count() + 1 });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(Line { number: k + 1, tokens })
        })
        .collect()
}

fn parse_error(line: usize, column: usize, message: &str) -> Error {
    Error::Parse { line, column, message: message.to_string() }
}

struct Header {
    line: usize,
    n: usize,
    field: FieldSpec,
    field_col: usize,
    dim1: usize,
    dim2: usize,
}

fn parse_header(line: &Line<'_>) -> Result<Header> {
    let err = |col: usize, msg: &str| parse_error(line.number, col, msg);
    let first = &line.tokens[0];
    if first.text != "kron" {
        return Err(err(first.column, "expected header `kron n=<int> field=<gf(p)|q> dims=<a>,<b>`"));
    }
    let (mut n, mut field, mut dims) = (None, None, None);
    for tok in &line.tokens[1..] {
        let (key, value) = tok
            .text
            .split_once('=')
            .ok_or_else(|| err(tok.column, &format!("expected key=value, got `{}`", tok.text)))?;
        let value_col = tok.column + key.chars().count() + 1;
        let duplicate = || err(tok.column, &format!("duplicate key `{key}`"));
        match key {
            "n" => {
                let v: usize = value.parse().map_err(|_| err(value_col, &format!("bad arrow count `{value}`")))?;
                if v == 0 {
                    return Err(err(value_col, "n must be positive"));
                }
                if n.replace(v).is_some() {
                    return Err(duplicate());
                }
            }
            "field" => {
                let v: FieldSpec = value.parse().map_err(|e: Error| err(value_col, &e.to_string()))?;
                if field.replace((v, value_col)).is_some() {
                    return Err(duplicate());
                }
            }
            "dims" => {
                let bad = || err(value_col, &format!("expected dims=<a>,<b>, got `{value}`"));
                let (a, b) = value.split_once(',').ok_or_else(bad)?;
                let a: usize = a.parse().map_err(|_| bad())?;
                let b: usize = b.parse().map_err(|_| bad())?;
                if dims.replace((a, b)).is_some() {
                    return Err(duplicate());
                }
            }
            _ => return Err(err(tok.column, &format!("unknown header key `{key}`"))),
        }
    }
    let end = line.tokens.last().map_or(1, |t| t.column + t.text.chars().count());
    let n = n.ok_or_else(|| err(end, "missing n=<int>"))?;
    let (field, field_col) = field.ok_or_else(|| err(end, "missing field=<gf(p)|q>"))?;
    let (dim1, dim2) = dims.ok_or_else(|| err(end, "missing dims=<a>,<b>"))?;
    Ok(Header { line: line.number, n, field, field_col, dim1, dim2 })
}

fn parse_body<F: Field>(field: &F, header: &Header, lines: &[Line<'_>]) -> Result<KroneckerModule<F>> {
    let rows_per_block = if header.dim1 == 0 { 0 } else { header.dim2 };
    let mut cursor = lines.iter();
    let mut alphas = Vec::with_capacity(header.n);
    let mut last_line = header.line;
    for i in 1..=header.n {
        let line = cursor.next().ok_or_else(|| parse_error(last_line + 1, 1, &format!("missing block `alpha {i}`")))?;
        let expected = format!("alpha {i}");
        let found: Vec<&str> = line.tokens.iter().map(|t| t.text).collect();
        if found != ["alpha", i.to_string().as_str()] {
            return Err(parse_error(
                line.number,
                line.tokens[0].column,
                &format!("expected `{expected}`, found `{}`", found.join(" ")),
            ));
        }
        last_line = line.number;
        let mut rows = Vec::with_capacity(rows_per_block);
        for r in 0..rows_per_block {
            let row_line = cursor.next().ok_or_else(|| {
                parse_error(last_line + 1, 1, &format!("alpha {i} needs {} rows, found {r}", header.dim2))
            })?;
            if row_line.tokens[0].text == "alpha" {
                return Err(parse_error(
                    row_line.number,
                    1,
                    &format!("alpha {i} needs {} rows, found {r}", header.dim2),
                ));
            }
            if row_line.tokens.len() != header.dim1 {
                let col = row_line.tokens.get(header.dim1).map_or(1, |t| t.column);
                return Err(parse_error(
                    row_line.number,
                    col,
                    &format!("row has {} entries, expected {}", row_line.tokens.len(), header.dim1),
                ));
            }
            let row = row_line
                .tokens
                .iter()
                .map(|t| field.parse(t.text).map_err(|m| parse_error(row_line.number, t.column, &m)))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
            last_line = row_line.number;
        }
        let matrix = if rows_per_block == 0 {
            Matrix::zeros(field, header.dim2, header.dim1)
        } else {
            Matrix::from_rows(field, header.dim1, rows)?
        };
        alphas.push(matrix);
    }
    if let Some(extra) = cursor.next() {
        return Err(parse_error(extra.number, extra.tokens[0].column, "unexpected content after the last block"));
    }
    KroneckerModule::new(field, header.n, header.dim1, header.dim2, alphas)
}

#[cfg(test)]
mod tests {
    use super::*;

    const B1: &str = "kron n=3 field=gf(5) dims=1,1\nalpha 1\n1\nalpha 2\n0\nalpha 3\n0\n";

    #[test]
    fn canonical_text_round_trips() {
        let m = parse_module_file(B1).unwrap();
        assert_eq!(m.to_text(), B1);
    }

    #[test]
    fn comments_and_spacing_are_canonicalized() {
        let noisy =
            "# a bristle\n  kron   dims=1,1 field=gf(5) n=3 # trailing\n\nalpha 1\n 1 \nalpha 2\n0\nalpha   3\n0";
        assert_eq!(canonicalize(noisy).unwrap(), B1);
    }

    #[test]
    fn simple_sink_has_empty_blocks() {
        let f = PrimeField::new(5).unwrap();
        let s2 = KroneckerModule::simple_sink(&f, 3);
        let text = write_module_file(&s2);
        assert_eq!(text, "kron n=3 field=gf(5) dims=0,1\nalpha 1\nalpha 2\nalpha 3\n");
        assert_eq!(parse_module_file(&text).unwrap(), AnyModule::Prime(s2));
    }

    #[test]
    fn shape_errors_point_at_the_line() {
        let text = "kron n=1 field=gf(5) dims=2,1\nalpha 1\n1\n";
        match parse_module_file(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn entry_errors_carry_the_column() {
        let text = "kron n=1 field=gf(5) dims=2,1\nalpha 1\n1   7\n";
        assert_eq!(
            parse_module_file(text),
            Err(Error::Parse { line: 3, column: 5, message: "entry 7 out of range [0, 5)".into() })
        );
        let rational = "kron n=1 field=q dims=1,1\nalpha 1\n2/4\n";
        assert!(matches!(parse_module_file(rational), Err(Error::Parse { line: 3, column: 1, .. })));
    }

    #[test]
    fn rationals_are_written_in_lowest_terms() {
        let text = "kron n=2 field=q dims=2,1\nalpha 1\n3/2 -1\nalpha 2\n0 1/7\n";
        assert_eq!(canonicalize(text).unwrap(), text);
    }

    #[test]
    fn header_errors() {
        assert!(matches!(parse_module_file(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_module_file("kron n=3 field=gf(4) dims=1,1"),
            Err(Error::Parse { line: 1, column: 16, .. })
        ));
        assert!(parse_module_file("kron n=3 dims=1,1").is_err());
        assert!(parse_module_file("kron n=1 n=1 field=q dims=0,0\nalpha 1").is_err());
        assert!(parse_module_file("module n=1 field=q dims=0,0\nalpha 1").is_err());
    }

    #[test]
    fn field_must_match_when_requested() {
        let f = PrimeField::new(7).unwrap();
        assert!(parse_module_file_over(&f, B1).is_err());
        let g = PrimeField::new(5).unwrap();
        assert_eq!(parse_module_file_over(&g, B1).unwrap().dims().d1, 1);
    }

    #[test]
    fn trailing_content_is_rejected() {
        let text = format!("{B1}alpha 4\n");
        assert!(matches!(parse_module_file(&text), Err(Error::Parse { line: 8, .. })));
    }
}
