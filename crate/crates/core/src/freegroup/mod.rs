//! Words in free groups of rank two and three.
//!
//! A [`FreeWord`] is always freely reduced. Every operation that can make a
//! word longer checks the result against a process-wide length limit (see
//! [`set_max_word_len`]), so runaway automorphism actions surface as
//! [`Error::WordTooLong`] instead of exhausting memory.

pub(crate) mod cyclic;
mod grammar;

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

pub use cyclic::{are_conjugate, commute, cyclic_reduce, primitive_root, PrimitiveRoot};
pub use grammar::{parse_tokens, WordToken};
pub(crate) use grammar::tokens_to_word;

use crate::error::{checked, Error, Result};

pub const DEFAULT_MAX_WORD_LEN: usize = 100_000;

static MAX_WORD_LEN: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_WORD_LEN);

/// Sets the maximum number of letters a word may have. Applies process-wide.
pub fn set_max_word_len(limit: usize) {
    MAX_WORD_LEN.store(limit, Ordering::Relaxed);
}

pub fn max_word_len() -> usize {
    MAX_WORD_LEN.load(Ordering::Relaxed)
}

fn check_len(len: usize) -> Result<()> {
    let limit = max_word_len();
    if len > limit {
        Err(Error::WordTooLong { len, limit })
    } else {
        Ok(())
    }
}

/// The generating sets that occur: `F2(u,v)`, `F3(u,v,B)` and `F2(x,y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    Uv,
    Uvb,
    Xy,
}

impl Alphabet {
    pub fn names(self) -> &'static [char] {
        match self {
            Alphabet::Uv => &['u', 'v'],
            Alphabet::Uvb => &['u', 'v', 'B'],
            Alphabet::Xy => &['x', 'y'],
        }
    }

    pub fn rank(self) -> usize {
        self.names().len()
    }

    pub fn index_of(self, name: char) -> Option<u8> {
        self.names().iter().position(|&c| c == name).map(|i| i as u8)
    }

    /// Smallest alphabet containing every generator name in `names`.
    pub fn infer(names: impl IntoIterator<Item = char>) -> Option<Alphabet> {
        let mut has_b = false;
        let mut has_uv = false;
        let mut has_xy = false;
        for c in names {
            match c {
                'u' | 'v' => has_uv = true,
                'B' => has_b = true,
                'x' | 'y' => has_xy = true,
                _ => return None,
            }
        }
        match (has_uv || has_b, has_xy) {
            (true, true) => None,
            (false, true) => Some(Alphabet::Xy),
            _ if has_b => Some(Alphabet::Uvb),
            _ => Some(Alphabet::Uv),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.names().iter().map(|c| c.to_string()).collect();
        write!(f, "F{}({})", self.rank(), names.join(","))
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: u8,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(generator: u8, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// Ordering key in which all positive letters precede all negative ones:
    /// `u < v < B < u^-1 < v^-1 < B^-1`.
    pub(crate) fn order_key(self) -> (bool, u8) {
        (self.inverse, self.generator)
    }
}

/// Exponent sums `(|w|_u, |w|_v)`; also used for the `Z^2` lattice part of
/// pure braids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AbVector(pub i64, pub i64);

impl AbVector {
    pub const ZERO: AbVector = AbVector(0, 0);

    pub fn checked_add(self, o: AbVector) -> Result<AbVector> {
        Ok(AbVector(
            checked::add(self.0, o.0, "lattice sum")?,
            checked::add(self.1, o.1, "lattice sum")?,
        ))
    }

    pub fn checked_neg(self) -> Result<AbVector> {
        Ok(AbVector(
            checked::neg(self.0, "lattice negation")?,
            checked::neg(self.1, "lattice negation")?,
        ))
    }

    pub fn checked_scale(self, k: i64) -> Result<AbVector> {
        Ok(AbVector(
            checked::mul(self.0, k, "lattice scaling")?,
            checked::mul(self.1, k, "lattice scaling")?,
        ))
    }

    pub fn is_zero(self) -> bool {
        self == AbVector::ZERO
    }
}

impl fmt::Display for AbVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// A freely reduced word over one of the [`Alphabet`]s.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity(alphabet: Alphabet) -> Self {
        FreeWord {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce(alphabet: Alphabet, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let mut w = FreeWord::identity(alphabet);
        for l in letters {
            if usize::from(l.generator) >= alphabet.rank() {
                return Err(Error::LetterOutOfRange {
                    index: l.generator,
                    alphabet,
                });
            }
            w.push(l);
        }
        check_len(w.len())?;
        Ok(w)
    }

    /// The word `g^exp` for a single generator.
    pub fn generator_power(alphabet: Alphabet, generator: u8, exp: i64) -> Result<Self> {
        let n = usize::try_from(exp.unsigned_abs()).map_err(|_| Error::Overflow("exponent"))?;
        check_len(n)?;
        FreeWord::reduce(
            alphabet,
            std::iter::repeat_n(Letter::new(generator, exp < 0), n),
        )
    }

    /// Parses the shared word grammar, e.g. `u^2 v^-1 B`, within a fixed alphabet.
    pub fn parse_in(alphabet: Alphabet, text: &str) -> Result<Self> {
        let tokens = parse_tokens(text, 0)?;
        grammar::tokens_to_word(alphabet, &tokens)
    }

    /// Parses a word, choosing the smallest alphabet that contains its letters.
    pub fn parse(text: &str) -> Result<Self> {
        let tokens = parse_tokens(text, 0)?;
        let alphabet = Alphabet::infer(tokens.iter().map(|t| t.name))
            .ok_or_else(|| Error::parse(0, "word mixes {u,v,B} with {x,y} letters"))?;
        grammar::tokens_to_word(alphabet, &tokens)
    }

    fn push(&mut self, l: Letter) {
        match self.letters.last() {
            Some(&last) if last.cancels(l) => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Word length `ℓ(w)`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    fn same_alphabet(&self, other: &FreeWord) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet,
                right: other.alphabet,
            });
        }
        Ok(())
    }

    pub(crate) fn require(&self, alphabet: Alphabet) -> Result<()> {
        if self.alphabet != alphabet {
            return Err(Error::WrongAlphabet {
                expected: alphabet,
                found: self.alphabet,
            });
        }
        Ok(())
    }

    /// Subword by letter range. Subwords of reduced words are reduced.
    pub(crate) fn slice(&self, range: std::ops::Range<usize>) -> FreeWord {
        FreeWord {
            alphabet: self.alphabet,
            letters: self.letters[range].to_vec(),
        }
    }

    /// Concatenation without any cancellation check; callers guarantee the
    /// result is reduced.
    pub(crate) fn from_reduced(alphabet: Alphabet, letters: Vec<Letter>) -> FreeWord {
        debug_assert!(letters.windows(2).all(|p| !p[0].cancels(p[1])));
        FreeWord { alphabet, letters }
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        check_len(out.len())?;
        Ok(out)
    }

    /// Multiplies a sequence of words left to right.
    pub fn product<'a>(alphabet: Alphabet, words: impl IntoIterator<Item = &'a FreeWord>) -> Result<FreeWord> {
        let mut out = FreeWord::identity(alphabet);
        for w in words {
            out = out.multiply(w)?;
        }
        Ok(out)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            alphabet: self.alphabet,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Result<FreeWord> {
        if k == 0 || self.is_identity() {
            return Ok(FreeWord::identity(self.alphabet));
        }
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let n = k.unsigned_abs();
        // Words of length L have a cyclic core of length >= 1, so |w^n| >= n.
        if n > max_word_len() as u64 {
            return Err(Error::WordTooLong {
                len: usize::try_from(n).unwrap_or(usize::MAX),
                limit: max_word_len(),
            });
        }
        let mut out = FreeWord::identity(self.alphabet);
        for _ in 0..n {
            out = out.multiply(&base)?;
        }
        Ok(out)
    }

    /// `g · self · g⁻¹`
    pub fn conjugate_by(&self, g: &FreeWord) -> Result<FreeWord> {
        g.multiply(self)?.multiply(&g.inverse())
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> Result<FreeWord> {
        FreeWord::product(a.alphabet, [a, b, &a.inverse(), &b.inverse()])
    }

    /// Image under the homomorphism sending generator `i` to `images[i]`.
    /// The images may live in a different alphabet from `self`.
    pub fn substitute(&self, target: Alphabet, images: &[FreeWord]) -> Result<FreeWord> {
        if images.len() != self.alphabet.rank() {
            return Err(Error::internal(format!(
                "substitution for {} needs {} images, got {}",
                self.alphabet,
                self.alphabet.rank(),
                images.len()
            )));
        }
        let inverses: Vec<FreeWord> = images.iter().map(FreeWord::inverse).collect();
        let mut out = FreeWord::identity(target);
        for l in &self.letters {
            let img = if l.inverse {
                &inverses[usize::from(l.generator)]
            } else {
                &images[usize::from(l.generator)]
            };
            img.require(target)?;
            for &m in &img.letters {
                out.push(m);
            }
            check_len(out.len())?;
        }
        Ok(out)
    }

    /// The involution `u ↦ u⁻¹, v ↦ v⁻¹` of `F2(u,v)`: every letter changes
    /// sign, order is kept. Flipping signs cannot create cancellations.
    pub fn hat(&self) -> Result<FreeWord> {
        self.require(Alphabet::Uv)?;
        Ok(FreeWord {
            alphabet: self.alphabet,
            letters: self.letters.iter().map(|l| l.inv()).collect(),
        })
    }

    /// Exponent sum of one generator.
    pub fn exponent_sum(&self, generator: u8) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == generator)
            .map(|l| l.sign())
            .sum()
    }

    /// `Ab(w) = (|w|_u, |w|_v)` for words in `F2(u,v)`; for `F2(x,y)` the
    /// exponent sums of `x` and `y`.
    pub fn abelianize(&self) -> Result<AbVector> {
        if self.alphabet.rank() != 2 {
            return Err(Error::domain(format!(
                "abelianization to Z^2 needs a rank-two alphabet, got {}",
                self.alphabet
            )));
        }
        Ok(AbVector(self.exponent_sum(0), self.exponent_sum(1)))
    }

    /// Shortlex comparison with positive letters ordered before negative ones.
    pub(crate) fn shortlex_cmp(&self, other: &FreeWord) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            self.letters
                .iter()
                .map(|l| l.order_key())
                .cmp(other.letters.iter().map(|l| l.order_key()))
        })
    }
}

/// Every reduced word of length exactly `len`, in shortlex order
/// (`u < v < B < u^-1 < v^-1 < B^-1`).
pub fn reduced_words_of_length(alphabet: Alphabet, len: usize) -> Vec<FreeWord> {
    let mut sorted: Vec<Letter> = (0..alphabet.rank() as u8)
        .flat_map(|g| [Letter::new(g, false), Letter::new(g, true)])
        .collect();
    sorted.sort_by_key(|l| l.order_key());
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(len);
    fn go(
        alphabet: Alphabet,
        sorted: &[Letter],
        len: usize,
        stack: &mut Vec<Letter>,
        out: &mut Vec<FreeWord>,
    ) {
        if stack.len() == len {
            out.push(FreeWord::from_reduced(alphabet, stack.clone()));
            return;
        }
        for &l in sorted {
            if stack.last().is_some_and(|&p| p.cancels(l)) {
                continue;
            }
            stack.push(l);
            go(alphabet, sorted, len, stack, out);
            stack.pop();
        }
    }
    go(alphabet, &sorted, len, &mut stack, &mut out);
    out
}

/// Every reduced word of length at most `max_len`, in shortlex order.
pub fn reduced_words_up_to(alphabet: Alphabet, max_len: usize) -> Vec<FreeWord> {
    (0..=max_len)
        .flat_map(|n| reduced_words_of_length(alphabet, n))
        .collect()
}

impl fmt::Display for FreeWord {
    /// Canonical form with exponents coalesced: `u^2 v^-1`; identity is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let names = self.alphabet.names();
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i + 1;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let exp = (j - i) as i64 * l.sign();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let name = names[usize::from(l.generator)];
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i = j;
        }
        Ok(())
    }
}
