//! Text and JSON forms of the element types.
//!
//! Words print as concatenated letters with `^` for the empty word; codes as
//! `{w1,w2,...}` in dictionary order; tables as `[x1->y1,x2->y2,...]` with
//! the domain column in dictionary order; expansion elements as
//! `(TABLE ; {TABLE, TABLE, ...})` with the trace in canonical order.
//! Parsers ignore whitespace between tokens. JSON output mirrors the text
//! semantics field for field.

use serde_json::{json, Value};

use crate::decision::{GenLetter, GenWord};
use crate::error::Error;
use crate::expansion::ExpansionElem;
use crate::prefix_codes::MaximalPrefixCode;
use crate::riaut::{GroupElem, RiAutElem};
use crate::rihom::RiHomElem;
use crate::words::{Alphabet, Letter, Word};

pub fn parse_word(s: &str, alphabet: &Alphabet) -> Result<Word, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty word field; use ^".into()));
    }
    if s == "^" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::with_capacity(s.len());
    for c in s.chars() {
        if !c.is_ascii_lowercase() {
            return Err(Error::Parse(format!("invalid character {c:?} in word")));
        }
        let index = (c as u32) - ('a' as u32) + 1;
        if index > alphabet.size() {
            return Err(Error::Parse(format!(
                "letter {c:?} outside the first {} letters",
                alphabet.size()
            )));
        }
        letters.push(Letter::new(index));
    }
    Ok(Word::from_letters(letters))
}

/// Splits `s` on top-level occurrences of `sep` (commas inside nested
/// brackets do not split).
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '[' | '{' | '(' => depth += 1,
            ']' | '}' | ')' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn strip_delimiters<'a>(s: &'a str, open: char, close: char, what: &str) -> Result<&'a str, Error> {
    let s = s.trim();
    if !s.starts_with(open) || !s.ends_with(close) || s.len() < 2 {
        return Err(Error::Parse(format!(
            "expected {what} delimited by {open}...{close}, got {s:?}"
        )));
    }
    Ok(&s[open.len_utf8()..s.len() - close.len_utf8()])
}

pub fn parse_code(s: &str, alphabet: &Alphabet) -> Result<MaximalPrefixCode, Error> {
    let inner = strip_delimiters(s, '{', '}', "a code")?;
    let words = split_top_level(inner, ',')
        .into_iter()
        .map(|part| parse_word(part, alphabet))
        .collect::<Result<Vec<_>, _>>()?;
    MaximalPrefixCode::validate(*alphabet, words)
}

fn parse_pairs(s: &str, alphabet: &Alphabet) -> Result<Vec<(Word, Word)>, Error> {
    let inner = strip_delimiters(s, '[', ']', "a table")?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(inner, ',')
        .into_iter()
        .map(|entry| {
            let (x, y) = entry
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("table entry {entry:?} lacks ->")))?;
            Ok((parse_word(x, alphabet)?, parse_word(y, alphabet)?))
        })
        .collect()
}

pub fn parse_table(s: &str, alphabet: &Alphabet) -> Result<RiAutElem, Error> {
    let pairs = parse_pairs(s, alphabet)?;
    if pairs.is_empty() {
        return Err(Error::EmptyCode);
    }
    RiAutElem::from_pairs(*alphabet, pairs)
}

/// Parses a table that may be non-maximal, non-injective, or empty.
pub fn parse_rihom(s: &str, alphabet: &Alphabet) -> Result<RiHomElem, Error> {
    RiHomElem::from_pairs(*alphabet, parse_pairs(s, alphabet)?)
}

/// Parses a group element: a table that must already be maximally extended.
pub fn parse_group_elem(s: &str, alphabet: &Alphabet) -> Result<GroupElem, Error> {
    let table = parse_table(s, alphabet)?;
    let g = table.max_extend();
    if g.rep() != &table {
        return Err(Error::Parse(format!(
            "table {table} is not maximally extended (reduces to {})",
            g.rep()
        )));
    }
    Ok(g)
}

pub fn parse_expansion(s: &str, alphabet: &Alphabet) -> Result<ExpansionElem, Error> {
    let inner = strip_delimiters(s, '(', ')', "an expansion element")?;
    let parts = split_top_level(inner, ';');
    if parts.len() != 2 {
        return Err(Error::Parse(
            "expected (TABLE ; {TABLE, ...}) with a single top-level ;".into(),
        ));
    }
    let value = parse_group_elem(parts[0], alphabet)?;
    let set_inner = strip_delimiters(parts[1], '{', '}', "a trace set")?;
    let trace = split_top_level(set_inner, ',')
        .into_iter()
        .map(|part| parse_group_elem(part, alphabet))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ExpansionElem::new(value, trace))
}

/// Parses a word over a generating set: comma-separated 1-based indices,
/// each optionally suffixed with `'` for the inverse. `^` or the empty
/// string is the empty word.
pub fn parse_gen_word(s: &str) -> Result<GenWord, Error> {
    let s = s.trim();
    if s.is_empty() || s == "^" {
        return Ok(GenWord::default());
    }
    let letters = s
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (digits, inverse) = match tok.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            let index: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index {tok:?}")))?;
            if index == 0 {
                return Err(Error::Parse("generator indices are 1-based".into()));
            }
            Ok(GenLetter {
                index: index - 1,
                inverse,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GenWord(letters))
}

/// Parses a set of generator words separated by `;`.
pub fn parse_gen_word_set(s: &str) -> Result<Vec<GenWord>, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(parse_gen_word).collect()
}

/// Parses a generator file: one table per line, `#` starts a comment, blank
/// lines are ignored.
pub fn parse_generator_file(content: &str, alphabet: &Alphabet) -> Result<Vec<RiAutElem>, Error> {
    content
        .lines()
        .map(|line| match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        })
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(|line| parse_table(line, alphabet))
        .collect()
}

pub fn word_json(w: &Word) -> Value {
    json!(w.to_string())
}

pub fn code_json(c: &MaximalPrefixCode) -> Value {
    Value::Array(c.words().iter().map(word_json).collect())
}

pub fn table_json(t: &RiAutElem) -> Value {
    Value::Array(
        t.pairs()
            .iter()
            .map(|(x, y)| json!([x.to_string(), y.to_string()]))
            .collect(),
    )
}

pub fn rihom_json(t: &RiHomElem) -> Value {
    Value::Array(
        t.pairs()
            .iter()
            .map(|(x, y)| json!([x.to_string(), y.to_string()]))
            .collect(),
    )
}

pub fn expansion_json(e: &ExpansionElem) -> Value {
    json!({
        "value": table_json(e.value().rep()),
        "trace": Value::Array(e.trace().iter().map(|g| table_json(g.rep())).collect()),
    })
}
