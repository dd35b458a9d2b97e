//! Plain-text code files.
//!
//! ```text
//! # comment lines start with '#'
//! q n w count
//! s_1 s_2 ... s_n
//! ...
//! ```
//!
//! `w` is `-` for codes without a constant weight (orthogonal arrays, for
//! instance). There must be exactly `count` word lines and the file must end
//! with a newline.

use std::path::Path;

use crate::error::{Error, Result};
use crate::space::{Code, Symbol, Word};

/// Canonical text of a code: header, then the words in sorted order.
pub fn write_code(c: &Code) -> String {
    let w = c.weight().map_or("-".to_string(), |w| w.to_string());
    let mut out = format!("{} {} {} {}\n", c.q(), c.n(), w, c.len());
    for x in c.words() {
        let cells: Vec<String> = x.symbols().iter().map(|s| s.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn field<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T> {
    token.parse().map_err(|_| parse_err(line, format!("{what} `{token}` is not a non-negative integer")))
}

pub fn parse_code(text: &str) -> Result<Code> {
    let total_lines = text.lines().count();
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(parse_err(total_lines, "missing trailing newline"));
    }
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(total_lines.max(1), "missing header"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let [q, n, w, count] = tokens[..] else {
        return Err(parse_err(hline, format!("header needs `q n w count`, got `{header}`")));
    };
    let q: u64 = field(q, hline, "alphabet size")?;
    let n: usize = field(n, hline, "length")?;
    let w: Option<usize> = if w == "-" { None } else { Some(field(w, hline, "weight")?) };
    let count: usize = field(count, hline, "count")?;

    let mut words = Vec::with_capacity(count.min(1 << 20));
    for (ln, body) in lines {
        if words.len() == count {
            return Err(parse_err(ln, format!("more than {count} word lines")));
        }
        let symbols: Vec<u64> =
            body.split_whitespace().map(|t| field(t, ln, "symbol")).collect::<Result<_>>()?;
        if symbols.len() != n {
            return Err(parse_err(ln, format!("expected {n} symbols, got {}", symbols.len())));
        }
        if let Some(s) = symbols.iter().find(|&&s| s >= q) {
            return Err(Error::InvariantViolation(format!("line {ln}: symbol {s} >= q={q} in `{body}`")));
        }
        let word = Word::from(symbols.iter().map(|&s| s as Symbol).collect::<Vec<_>>());
        if let Some(w) = w {
            if word.weight() != w {
                return Err(Error::InvariantViolation(format!("line {ln}: word {word} has weight {} not {w}", word.weight())));
            }
        }
        words.push(word);
    }
    if words.len() != count {
        return Err(parse_err(total_lines, format!("header promises {count} words, found {}", words.len())));
    }
    match w {
        Some(w) => Code::with_weight(n, q, w, words),
        None => Code::new(n, q, words),
    }
}

pub fn read_code_file(path: &Path) -> Result<Code> {
    parse_code(&std::fs::read_to_string(path)?)
}
