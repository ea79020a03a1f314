//! Cyclic words: conjugacy testing and primitive roots.

use super::{FreeWord, Letter};
use crate::error::{Error, Result};

/// KMP failure function: `pi[i]` is the length of the longest proper border
/// of `s[..=i]`.
fn prefix_function(s: &[Letter]) -> Vec<usize> {
    let mut pi = vec![0; s.len()];
    for i in 1..s.len() {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    pi
}

/// First occurrence of `needle` in `hay`.
pub(crate) fn kmp_find(hay: &[Letter], needle: &[Letter]) -> Option<usize> {
    if needle.is_empty() {
        return Some(0);
    }
    let pi = prefix_function(needle);
    let mut k = 0;
    for (i, &c) in hay.iter().enumerate() {
        while k > 0 && c != needle[k] {
            k = pi[k - 1];
        }
        if c == needle[k] {
            k += 1;
        }
        if k == needle.len() {
            return Some(i + 1 - k);
        }
    }
    None
}

/// Splits `w = c · q · c⁻¹` with `q` cyclically reduced. Returns `(c, q)`.
pub fn cyclic_reduce(w: &FreeWord) -> (FreeWord, FreeWord) {
    let l = w.letters();
    let (mut i, mut j) = (0usize, l.len());
    while j > i + 1 && l[i].cancels(l[j - 1]) {
        i += 1;
        j -= 1;
    }
    (w.slice(0..i), w.slice(i..j))
}

/// Returns some `g` with `g · a · g⁻¹ = b`, or `None` if `a` and `b` are not
/// conjugate.
pub fn are_conjugate(a: &FreeWord, b: &FreeWord) -> Result<Option<FreeWord>> {
    a.same_alphabet(b)?;
    let (c1, q1) = cyclic_reduce(a);
    let (c2, q2) = cyclic_reduce(b);
    if q1.len() != q2.len() {
        return Ok(None);
    }
    let doubled: Vec<Letter> = q1.letters().iter().chain(q1.letters()).copied().collect();
    let Some(k) = kmp_find(&doubled, q2.letters()) else {
        return Ok(None);
    };
    // q2 = p⁻¹ q1 p with p = q1[..k]
    let p = q1.slice(0..k.min(q1.len()));
    let g = FreeWord::product(a.alphabet(), [&c2, &p.inverse(), &c1.inverse()])?;
    if a.conjugate_by(&g)? != *b {
        return Err(Error::internal(format!(
            "conjugacy witness {g} fails to conjugate {a} to {b}"
        )));
    }
    Ok(Some(g))
}

/// `w = root^exponent` with `root` not a proper power and `exponent >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveRoot {
    pub root: FreeWord,
    pub exponent: i64,
}

pub fn primitive_root(w: &FreeWord) -> Result<PrimitiveRoot> {
    if w.is_identity() {
        return Err(Error::domain("the identity has no primitive root"));
    }
    let (c, q) = cyclic_reduce(w);
    let n = q.len();
    let pi = prefix_function(q.letters());
    let p = n - pi[n - 1];
    let period = if n % p == 0 { p } else { n };
    let root = FreeWord::product(w.alphabet(), [&c, &q.slice(0..period), &c.inverse()])?;
    Ok(PrimitiveRoot {
        root,
        exponent: (n / period) as i64,
    })
}

pub fn commute(a: &FreeWord, b: &FreeWord) -> Result<bool> {
    Ok(a.multiply(b)? == b.multiply(a)?)
}
