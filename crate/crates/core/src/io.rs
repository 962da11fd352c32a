//! Plain-text formats.
//!
//! A Lie algebra document:
//!
//! ```text
//! liecyclic-lie 1
//! dim 3
//! basis e f h
//! brackets
//! 1 2 3 1/1
//! 1 3 1 -2/1
//! 2 3 2 2/1
//! end
//! ```
//!
//! Indices are 1-based. Each bracket line `i j k c` sets `C^k_{ij} = c`;
//! `i > j` lines are stored negated as `(j, i)`, `i = j` is rejected.
//! Matrix sections carry one line per nonzero entry:
//!
//! ```text
//! action 4
//! 1 2 4 -2/1
//! end
//! ```
//!
//! where `j i k c` sets `(M_j)^i_k = c`. Blank lines and `#` comments are
//! ignored. Values are written canonically as `p/q`.

use std::collections::BTreeMap;
use std::fmt;

use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::{format_q, parse_q, Q};

pub const LIE_HEADER: &str = "liecyclic-lie 1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagCode {
    Syntax,
    UnresolvedName,
    DimensionMismatch,
    InvalidValue,
}

impl DiagCode {
    pub fn code(self) -> &'static str {
        match self {
            Self::Syntax => "E100",
            Self::UnresolvedName => "E200",
            Self::DimensionMismatch => "E300",
            Self::InvalidValue => "E400",
        }
    }
}

/// Parse failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub col: usize,
    pub code: DiagCode,
    pub message: String,
}

impl Diagnostic {
    pub fn new(line: usize, col: usize, code: DiagCode, message: impl Into<String>) -> Self {
        Self { line, col, code, message: message.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {} {}", self.line, self.col, self.code.code(), self.message)
    }
}

impl std::error::Error for Diagnostic {}

/// A whitespace token with its 1-based column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Token<'a> {
    pub text: &'a str,
    pub col: usize,
}

/// A significant line split into tokens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    pub fn keyword(&self) -> &'a str {
        self.tokens[0].text
    }

    pub fn args(&self) -> &[Token<'a>] {
        &self.tokens[1..]
    }

    pub fn err(&self, col: usize, code: DiagCode, message: impl Into<String>) -> Diagnostic {
        Diagnostic::new(self.number, col, code, message)
    }

    pub fn end_col(&self) -> usize {
        self.tokens.last().map_or(1, |t| t.col + t.text.len())
    }

    /// Exactly `n` arguments.
    pub fn expect_args(&self, n: usize) -> Result<&[Token<'a>], Diagnostic> {
        let args = self.args();
        if args.len() != n {
            let col = args.get(n).map_or(self.end_col(), |t| t.col);
            return Err(self.err(col, DiagCode::Syntax, format!("`{}` takes {n} argument(s), found {}", self.keyword(), args.len())));
        }
        Ok(args)
    }
}

/// Splits a document into significant lines.
pub fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push(Token { text: &content[s..pos], col: content[..s].chars().count() + 1 });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
        })
        .collect()
}

pub fn parse_usize(line: &Line<'_>, tok: &Token<'_>) -> Result<usize, Diagnostic> {
    tok.text
        .parse()
        .map_err(|_| line.err(tok.col, DiagCode::Syntax, format!("expected a nonnegative integer, found `{}`", tok.text)))
}

pub fn parse_index(line: &Line<'_>, tok: &Token<'_>, bound: usize) -> Result<usize, Diagnostic> {
    let v = parse_usize(line, tok)?;
    if v == 0 || v > bound {
        return Err(line.err(tok.col, DiagCode::DimensionMismatch, format!("index {v} outside 1..={bound}")));
    }
    Ok(v - 1)
}

pub fn parse_value(line: &Line<'_>, tok: &Token<'_>) -> Result<Q, Diagnostic> {
    parse_q(tok.text).ok_or_else(|| line.err(tok.col, DiagCode::InvalidValue, format!("invalid rational `{}`", tok.text)))
}

/// Cursor over significant lines.
pub struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(text: &'a str) -> Self {
        let last_line = text.lines().count().max(1);
        Self { lines: lines(text), pos: 0, last_line }
    }

    pub fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    pub fn next_line(&mut self) -> Option<Line<'a>> {
        let l = self.lines.get(self.pos).cloned();
        self.pos += 1;
        l
    }

    pub fn eof_error(&self, what: &str) -> Diagnostic {
        Diagnostic::new(self.last_line, 1, DiagCode::Syntax, format!("unexpected end of input, expected {what}"))
    }

    pub fn expect_header(&mut self, header: &str) -> Result<(), Diagnostic> {
        let Some(line) = self.next_line() else { return Err(Diagnostic::new(1, 1, DiagCode::Syntax, format!("empty document, expected `{header}`"))) };
        let text: Vec<&str> = line.tokens.iter().map(|t| t.text).collect();
        if text.join(" ") != header {
            return Err(line.err(1, DiagCode::Syntax, format!("expected header `{header}`")));
        }
        Ok(())
    }
}

/// Entries `j i k value` until `end`, for `count` matrices of size `dim`.
pub fn parse_matrix_block(cur: &mut Cursor<'_>, count: usize, dim: usize) -> Result<Vec<Matrix<Q>>, Diagnostic> {
    let mut mats = vec![Matrix::zeros(dim, dim); count];
    let mut seen = BTreeMap::new();
    loop {
        let Some(line) = cur.next_line() else { return Err(cur.eof_error("`end`")) };
        if line.keyword() == "end" {
            line.expect_args(0)?;
            return Ok(mats);
        }
        if line.tokens.len() != 4 {
            return Err(line.err(line.tokens[0].col, DiagCode::Syntax, "matrix entries are `j i k value`"));
        }
        let t = &line.tokens;
        let j = parse_index(&line, &t[0], count)?;
        let i = parse_index(&line, &t[1], dim)?;
        let k = parse_index(&line, &t[2], dim)?;
        let v = parse_value(&line, &t[3])?;
        if seen.insert((j, i, k), line.number).is_some() {
            return Err(line.err(t[0].col, DiagCode::Syntax, "duplicate matrix entry"));
        }
        mats[j][(i, k)] = v;
    }
}

pub fn write_matrix_block(out: &mut String, keyword: &str, mats: &[Matrix<Q>]) {
    let dim = mats.first().map_or(0, Matrix::rows);
    out.push_str(&format!("{keyword} {dim}\n"));
    for (j, m) in mats.iter().enumerate() {
        for i in 0..m.rows() {
            for k in 0..m.cols() {
                if !num_traits::Zero::is_zero(&m[(i, k)]) {
                    out.push_str(&format!("{} {} {} {}\n", j + 1, i + 1, k + 1, format_q(&m[(i, k)])));
                }
            }
        }
    }
    out.push_str("end\n");
}

/// Body of a Lie document after the header: `dim`, optional `basis`, `brackets … end`.
pub fn parse_lie_body(cur: &mut Cursor<'_>) -> Result<LieAlgebra<Q>, Diagnostic> {
    let Some(line) = cur.next_line() else { return Err(cur.eof_error("`dim`")) };
    if line.keyword() != "dim" {
        return Err(line.err(1, DiagCode::Syntax, "expected `dim N`"));
    }
    let args = line.expect_args(1)?;
    let dim = parse_usize(&line, &args[0])?;
    if dim == 0 {
        return Err(line.err(args[0].col, DiagCode::InvalidValue, "dimension must be positive"));
    }
    let mut names: Vec<String> = (1..=dim).map(|i| format!("X{i}")).collect();
    let Some(mut line) = cur.next_line() else { return Err(cur.eof_error("`brackets`")) };
    if line.keyword() == "basis" {
        let args = line.args();
        if args.len() != dim {
            return Err(line.err(line.end_col(), DiagCode::DimensionMismatch, format!("{} basis names for dimension {dim}", args.len())));
        }
        names = args.iter().map(|t| t.text.to_string()).collect();
        line = match cur.next_line() {
            Some(l) => l,
            None => return Err(cur.eof_error("`brackets`")),
        };
    }
    if line.keyword() != "brackets" {
        return Err(line.err(1, DiagCode::Syntax, "expected `brackets`"));
    }
    line.expect_args(0)?;
    let mut entries: BTreeMap<(usize, usize, usize), Q> = BTreeMap::new();
    loop {
        let Some(line) = cur.next_line() else { return Err(cur.eof_error("`end`")) };
        if line.keyword() == "end" {
            line.expect_args(0)?;
            break;
        }
        if line.tokens.len() != 4 {
            return Err(line.err(line.tokens[0].col, DiagCode::Syntax, "bracket entries are `i j k value`"));
        }
        let t = &line.tokens;
        let i = parse_index(&line, &t[0], dim)?;
        let j = parse_index(&line, &t[1], dim)?;
        let k = parse_index(&line, &t[2], dim)?;
        let v = parse_value(&line, &t[3])?;
        if i == j {
            return Err(line.err(t[1].col, DiagCode::InvalidValue, "[X_i, X_i] is always zero"));
        }
        let key = if i < j { (i, j, k) } else { (j, i, k) };
        let v = if i < j { v } else { -v };
        if entries.insert(key, v).is_some() {
            return Err(line.err(t[0].col, DiagCode::Syntax, "duplicate bracket entry"));
        }
    }
    let lie = LieAlgebra::from_brackets(dim, entries.into_iter().map(|((i, j, k), v)| (i, j, k, v)))
        .map_err(|e| Diagnostic::new(line.number, 1, DiagCode::InvalidValue, e.to_string()))?;
    lie.with_names(names).map_err(|e| Diagnostic::new(line.number, 1, DiagCode::DimensionMismatch, e.to_string()))
}

pub fn parse_lie(text: &str) -> Result<LieAlgebra<Q>, Diagnostic> {
    let mut cur = Cursor::new(text);
    cur.expect_header(LIE_HEADER)?;
    let lie = parse_lie_body(&mut cur)?;
    if let Some(extra) = cur.next_line() {
        return Err(extra.err(1, DiagCode::Syntax, "trailing content after `end`"));
    }
    Ok(lie)
}

pub fn write_lie_body(out: &mut String, lie: &LieAlgebra<Q>) {
    out.push_str(&format!("dim {}\n", lie.dim()));
    out.push_str(&format!("basis {}\n", lie.names().join(" ")));
    out.push_str("brackets\n");
    for (&(i, j, k), v) in lie.constants() {
        if i < j {
            out.push_str(&format!("{} {} {} {}\n", i + 1, j + 1, k + 1, format_q(v)));
        }
    }
    out.push_str("end\n");
}

pub fn serialize_lie(lie: &LieAlgebra<Q>) -> String {
    let mut out = format!("{LIE_HEADER}\n");
    write_lie_body(&mut out, lie);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::builtin::*;

    #[test]
    fn lie_round_trip() {
        for g in [sl2::<Q>(), heisenberg(), nonabelian2(), abelian(3)] {
            let text = serialize_lie(&g);
            let parsed = parse_lie(&text).unwrap();
            assert!(parsed.same_constants(&g));
            assert_eq!(serialize_lie(&parsed), text);
        }
    }

    #[test]
    fn reversed_pairs_are_negated() {
        let text = "liecyclic-lie 1\ndim 3\nbrackets\n1 2 3 1\n3 1 1 2\n3 2 2 -2\nend\n";
        let g = parse_lie(text).unwrap();
        assert!(g.same_constants(&sl2()));
    }

    #[test]
    fn diagnostics_carry_positions() {
        let e = parse_lie("").unwrap_err();
        assert_eq!(e.code, DiagCode::Syntax);
        let e = parse_lie("liecyclic-lie 1\ndim 2\nbrackets\n1 3 1 1/1\nend\n").unwrap_err();
        assert_eq!((e.line, e.col, e.code), (4, 3, DiagCode::DimensionMismatch));
        let e = parse_lie("liecyclic-lie 1\ndim 2\nbrackets\n1 2 1 1/0\nend\n").unwrap_err();
        assert_eq!((e.line, e.col, e.code), (4, 7, DiagCode::InvalidValue));
        let e = parse_lie("liecyclic-lie 1\ndim 2\nbrackets\n1 1 1 1\nend\n").unwrap_err();
        assert_eq!(e.code, DiagCode::InvalidValue);
        let e = parse_lie("liecyclic-lie 1\ndim 2\nbrackets\n1 2 1 1\n").unwrap_err();
        assert_eq!(e.code, DiagCode::Syntax);
    }

    #[test]
    fn matrix_block_round_trip() {
        let mats = vec![Matrix::from_i64(&[&[0, 1], &[0, 0]]), Matrix::from_i64(&[&[3, 0], &[0, -1]])];
        let mut text = String::new();
        write_matrix_block(&mut text, "action", &mats);
        let mut cur = Cursor::new(&text);
        let head = cur.next_line().unwrap();
        assert_eq!(head.keyword(), "action");
        assert_eq!(parse_matrix_block(&mut cur, 2, 2).unwrap(), mats);
    }
}
