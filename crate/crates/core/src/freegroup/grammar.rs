//! The word grammar: generator names optionally followed by `^<signed int>`,
//! separated by whitespace or simply juxtaposed (`uv^-1` reads as `u v^-1`).
//! A lone `1` denotes the identity.

use super::{Alphabet, FreeWord, Letter};
use crate::error::{Error, Result};

const NAMES: [char; 6] = ['u', 'v', 'B', 'x', 'y', 's'];

/// One `name^exp` token; `column` is the 0-based character offset of the name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordToken {
    pub name: char,
    pub exp: i64,
    pub column: usize,
}

/// Tokenizes `text`. Column numbers in errors are offset by `base`, so
/// callers parsing a fragment of a larger literal can report positions in
/// the original input.
pub fn parse_tokens(text: &str, base: usize) -> Result<Vec<WordToken>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || c == '*' || c == '.' {
            i += 1;
            continue;
        }
        if c == '1' {
            i += 1;
            continue;
        }
        if !NAMES.contains(&c) {
            return Err(Error::parse(base + i, format!("unexpected character '{c}'")));
        }
        let column = base + i;
        i += 1;
        let mut exp = 1i64;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let start = i;
            if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                i += 1;
            }
            let digits_start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if digits_start == i {
                return Err(Error::parse(base + start, "expected an integer exponent after '^'"));
            }
            let literal: String = chars[start..i].iter().collect();
            exp = literal
                .parse()
                .map_err(|_| Error::parse(base + start, format!("exponent '{literal}' out of range")))?;
        }
        if exp != 0 {
            out.push(WordToken { name: c, exp, column });
        }
    }
    Ok(out)
}

pub(crate) fn tokens_to_word(alphabet: Alphabet, tokens: &[WordToken]) -> Result<FreeWord> {
    let mut letters = Vec::new();
    for t in tokens {
        let g = alphabet.index_of(t.name).ok_or_else(|| {
            Error::parse(
                t.column,
                format!("generator '{}' is not in {}", t.name, alphabet),
            )
        })?;
        let n = usize::try_from(t.exp.unsigned_abs()).map_err(|_| Error::Overflow("exponent"))?;
        if n > super::max_word_len() {
            return Err(Error::WordTooLong {
                len: n,
                limit: super::max_word_len(),
            });
        }
        letters.extend(std::iter::repeat_n(Letter::new(g, t.exp < 0), n));
    }
    FreeWord::reduce(alphabet, letters)
}
