//! Helpers shared by the integration tests: seeded generators of random
//! elements and a naive conjugacy oracle independent of the library's.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torus_twovalued::braid::{B2Element, P2Element, PuncturedElement};
use torus_twovalued::classify::SplitMapClass;
use torus_twovalued::confmetric::{Configuration, TorusPoint};
use torus_twovalued::freegroup::{AbVector, Alphabet, FreeWord, Letter};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A reduced word of length exactly `len`, uniform among such words.
pub fn word_of_len(rng: &mut impl Rng, alphabet: Alphabet, len: usize) -> FreeWord {
    let rank = alphabet.rank() as u8;
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::new(rng.gen_range(0..rank), rng.gen_bool(0.5));
        if letters.last().is_some_and(|&p| p == l.inv()) {
            continue;
        }
        letters.push(l);
    }
    FreeWord::reduce(alphabet, letters).unwrap()
}

pub fn word_up_to(rng: &mut impl Rng, alphabet: Alphabet, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    word_of_len(rng, alphabet, len)
}

pub fn p2(rng: &mut impl Rng, max_len: usize) -> P2Element {
    let w = word_up_to(rng, Alphabet::Uv, max_len);
    P2Element::new(w, AbVector(rng.gen_range(-9..=9), rng.gen_range(-9..=9))).unwrap()
}

pub fn b2(rng: &mut impl Rng, max_len: usize) -> B2Element {
    B2Element::new(p2(rng, max_len), rng.gen_bool(0.5))
}

pub fn punctured(rng: &mut impl Rng, max_len: usize) -> PuncturedElement {
    PuncturedElement::new(
        word_up_to(rng, Alphabet::Uvb, max_len),
        word_up_to(rng, Alphabet::Xy, max_len),
    )
    .unwrap()
}

pub fn class(rng: &mut impl Rng, max_len: usize) -> SplitMapClass {
    let w = word_up_to(rng, Alphabet::Uv, max_len);
    let mut lattice = [0i64; 4];
    for x in &mut lattice {
        *x = rng.gen_range(-5..=5);
    }
    SplitMapClass::from_data(w, rng.gen_range(-3..=3), rng.gen_range(-3..=3), lattice).unwrap()
}

pub fn configuration(rng: &mut impl Rng, n: usize) -> Configuration {
    let points = (0..n)
        .map(|_| TorusPoint::new(rng.gen::<f64>(), rng.gen::<f64>()).unwrap())
        .collect();
    Configuration::new(points).unwrap()
}

/// Strips matching first/last letter pairs: `w = c q c⁻¹`, returns `q`.
fn naive_cyclic_core(letters: &[Letter]) -> &[Letter] {
    let mut s = letters;
    while s.len() >= 2 && s[0] == s[s.len() - 1].inv() {
        s = &s[1..s.len() - 1];
    }
    s
}

/// Conjugacy in a free group by comparing all rotations of the cyclic cores.
pub fn naive_conjugate(a: &FreeWord, b: &FreeWord) -> bool {
    let (p, q) = (naive_cyclic_core(a.letters()), naive_cyclic_core(b.letters()));
    if p.len() != q.len() {
        return false;
    }
    if p.is_empty() {
        return true;
    }
    (0..p.len()).any(|k| p[k..].iter().chain(&p[..k]).eq(q.iter()))
}
