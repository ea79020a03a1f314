//! Cursor over literal text, shared by the element, class, root-data and
//! configuration parsers. Columns are 0-based character offsets.

use crate::error::{Error, Result};
use crate::freegroup::{parse_tokens, Alphabet, FreeWord};

pub(crate) struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    pub fn new(text: &str) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    pub fn column(&self) -> usize {
        self.pos
    }

    pub fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        let found = match self.chars.get(self.pos) {
            Some(c) => format!(", found '{c}'"),
            None => ", found end of input".to_string(),
        };
        Error::parse(self.pos, format!("{}{found}", msg.into()))
    }

    pub fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos < self.chars.len() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(())
    }

    /// Raw text up to (not including) the first character in `stops`.
    /// Returns the text and the column where it starts.
    pub fn take_until(&mut self, stops: &[char]) -> (String, usize) {
        let start = self.pos;
        while self.pos < self.chars.len() && !stops.contains(&self.chars[self.pos]) {
            self.pos += 1;
        }
        (self.chars[start..self.pos].iter().collect(), start)
    }

    /// A word in `alphabet` running up to the first character in `stops`.
    pub fn word(&mut self, alphabet: Alphabet, stops: &[char]) -> Result<FreeWord> {
        let (text, col) = self.take_until(stops);
        word_at(alphabet, &text, col)
    }

    pub fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.chars.get(self.pos), Some('-' | '+')) {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer")
        })
    }

    pub fn float(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_digit() || matches!(c, '-' | '+' | '.' | 'e' | 'E'))
        {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        match text.parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(x),
            _ => {
                self.pos = start;
                Err(self.error("expected a finite decimal number"))
            }
        }
    }

    /// `n1,n2,...` with exactly `count` integers.
    pub fn int_list(&mut self, count: usize) -> Result<Vec<i64>> {
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            if i > 0 {
                self.expect(',')?;
            }
            out.push(self.int()?);
        }
        Ok(out)
    }
}

/// Parses a word whose text starts at column `col` of a larger literal.
pub(crate) fn word_at(alphabet: Alphabet, text: &str, col: usize) -> Result<FreeWord> {
    let tokens = parse_tokens(text, col)?;
    crate::freegroup::tokens_to_word(alphabet, &tokens)
}

/// Parses `head k1=v1 k2=v2 ...` where every key in `keys` appears exactly
/// once, in any order. A value runs until the next `key=` token, so word
/// values may contain spaces. Returns values (with their start columns) in
/// the order of `keys`.
pub(crate) fn keyed_fields(text: &str, head: &str, keys: &[&str]) -> Result<Vec<(String, usize)>> {
    let mut fields: Vec<Option<(String, usize)>> = vec![None; keys.len()];
    let mut current: Option<usize> = None;
    let mut seen_head = false;
    for (col, token) in tokens_with_columns(text) {
        if !seen_head {
            if token != head {
                return Err(Error::parse(col, format!("expected '{head}', found '{token}'")));
            }
            seen_head = true;
            continue;
        }
        if let Some((key, value)) = token.split_once('=') {
            let idx = keys.iter().position(|k| *k == key).ok_or_else(|| {
                Error::parse(col, format!("unknown field '{key}', expected one of {}", keys.join(", ")))
            })?;
            if fields[idx].is_some() {
                return Err(Error::parse(col, format!("field '{key}' given twice")));
            }
            fields[idx] = Some((value.to_string(), col + key.chars().count() + 1));
            current = Some(idx);
        } else {
            let idx = current
                .ok_or_else(|| Error::parse(col, format!("expected 'key=value', found '{token}'")))?;
            let field = fields[idx].as_mut().expect("current field is set");
            if field.0.is_empty() {
                field.1 = col;
            }
            // keep the original spacing so word columns stay accurate
            let pad = col.saturating_sub(field.1 + field.0.chars().count());
            field.0.push_str(&" ".repeat(pad.max(1)));
            field.0.push_str(token);
        }
    }
    if !seen_head {
        return Err(Error::parse(0, format!("expected '{head}'")));
    }
    let end = text.chars().count();
    fields
        .into_iter()
        .zip(keys)
        .map(|(f, k)| f.ok_or_else(|| Error::parse(end, format!("missing field '{k}='"))))
        .collect()
}

fn tokens_with_columns(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, c)) in text.char_indices().enumerate() {
        if c.is_whitespace() {
            if let Some((scol, sbyte)) = start.take() {
                out.push((scol, &text[sbyte..byte]));
            }
        } else if start.is_none() {
            start = Some((col, byte));
        }
    }
    if let Some((scol, sbyte)) = start {
        out.push((scol, &text[sbyte..]));
    }
    out
}

/// Parses `n1,n2,...` (exactly `count` integers) found at column `col`.
pub(crate) fn int_list_at(text: &str, col: usize, count: usize) -> Result<Vec<i64>> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != count {
        return Err(Error::parse(col, format!("expected {count} comma-separated integers, found '{text}'")));
    }
    let mut out = Vec::with_capacity(count);
    let mut offset = col;
    for p in parts {
        out.push(
            p.trim()
                .parse()
                .map_err(|_| Error::parse(offset, format!("expected an integer, found '{p}'")))?,
        );
        offset += p.chars().count() + 1;
    }
    Ok(out)
}

pub(crate) fn int_at(text: &str, col: usize) -> Result<i64> {
    text.trim()
        .parse()
        .map_err(|_| Error::parse(col, format!("expected an integer, found '{text}'")))
}
