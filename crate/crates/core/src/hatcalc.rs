//! Constructive solutions of the two hat equations in `F2(u,v)`:
//!
//! * `ab = b̂â` (with `ab` reduced) holds iff `a = (λ̂λ)^s λ̂` and
//!   `b = (λλ̂)^r λ` for some `λ, r, s`;
//! * `w` is conjugate to `ŵ` iff `w = (λλ̂)^l` for some `λ, l`.
//!
//! The solvers follow the length-reducing case analysis of the existence
//! proof. Every witness is checked by recomposition before it is returned.

use crate::error::{Error, Result};
use crate::freegroup::cyclic::kmp_find;
use crate::freegroup::{
    are_conjugate, cyclic_reduce, primitive_root, reduced_words_of_length, Alphabet, FreeWord,
};

/// `a = (λ̂λ)^s λ̂` and `b = (λλ̂)^r λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E1Witness {
    pub lambda: FreeWord,
    pub r: i64,
    pub s: i64,
}

impl E1Witness {
    /// Rebuilds `(a, b)`.
    pub fn recompose(&self) -> Result<(FreeWord, FreeWord)> {
        let lh = self.lambda.hat()?;
        let a = lh.multiply(&self.lambda)?.pow(self.s)?.multiply(&lh)?;
        let b = self.lambda.multiply(&lh)?.pow(self.r)?.multiply(&self.lambda)?;
        Ok((a, b))
    }
}

/// `w = (λλ̂)^l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E2Witness {
    pub lambda: FreeWord,
    pub l: i64,
}

impl E2Witness {
    pub fn recompose(&self) -> Result<FreeWord> {
        self.lambda.multiply(&self.lambda.hat()?)?.pow(self.l)
    }
}

/// Largest word length handed to the exhaustive fallback search.
pub const SEARCH_LIMIT: usize = 12;

/// Decides whether `w` is conjugate to `ŵ`, returning `w = (λλ̂)^l` if so.
pub fn is_hat_conjugate(w: &FreeWord) -> Result<Option<E2Witness>> {
    w.require(Alphabet::Uv)?;
    if !w.abelianize()?.is_zero() {
        return Ok(None);
    }
    if are_conjugate(w, &w.hat()?)?.is_none() {
        return Ok(None);
    }
    let witness = match e2(w, w.len() + 2) {
        Ok(wit) => wit,
        Err(Error::Internal(_)) if w.len() <= SEARCH_LIMIT => search_hat_decomposition(w)?
            .ok_or_else(|| Error::internal(format!("no hat decomposition found for {w}")))?,
        Err(e) => return Err(e),
    };
    if witness.recompose()? != *w {
        return Err(Error::internal(format!(
            "hat decomposition ({}, {}) does not recompose to {w}",
            witness.lambda, witness.l
        )));
    }
    Ok(Some(witness))
}

/// Solves `ab = b̂â`. Requires that `a·b` involves no cancellation.
pub fn solve_e1(a: &FreeWord, b: &FreeWord) -> Result<Option<E1Witness>> {
    a.require(Alphabet::Uv)?;
    b.require(Alphabet::Uv)?;
    if let (Some(&x), Some(y)) = (a.letters().last(), b.first()) {
        if x == y.inv() {
            return Err(Error::domain(format!(
                "the product of {a} and {b} is not reduced as written"
            )));
        }
    }
    let ab = a.multiply(b)?;
    if ab != b.hat()?.multiply(&a.hat()?)? {
        return Ok(None);
    }
    let witness = if a.is_identity() && b.is_identity() {
        E1Witness {
            lambda: FreeWord::identity(Alphabet::Uv),
            r: 0,
            s: 0,
        }
    } else {
        e1(a, b, a.len() + b.len() + 2)?
    };
    if witness.recompose()? != (a.clone(), b.clone()) {
        return Err(Error::internal(format!(
            "E1 witness ({}, {}, {}) does not recompose to ({a}, {b})",
            witness.lambda, witness.r, witness.s
        )));
    }
    Ok(Some(witness))
}

fn depth_exceeded() -> Error {
    Error::internal("hat decomposition recursion did not terminate")
}

/// Core of [`solve_e1`]: assumes `ab = b̂â` letter for letter, both non-empty.
fn e1(a: &FreeWord, b: &FreeWord, depth: usize) -> Result<E1Witness> {
    let depth = depth.checked_sub(1).ok_or_else(depth_exceeded)?;
    let (la, lb) = (a.len(), b.len());
    if la == 0 || lb == 0 {
        return Err(Error::internal(format!("degenerate E1 instance ({a}, {b})")));
    }
    if la == lb {
        return Ok(E1Witness {
            lambda: b.clone(),
            r: 0,
            s: 0,
        });
    }
    if la > lb {
        // (b̂, â) is an instance with the lengths exchanged
        let w = e1(&b.hat()?, &a.hat()?, depth)?;
        return Ok(E1Witness {
            lambda: w.lambda,
            r: w.s,
            s: w.r,
        });
    }
    let a_hat = a.hat()?;
    if 2 * la <= lb {
        // b = â b₁ â and â b₁ = b̂₁ a
        let b1 = b.slice(la..lb - la);
        if b1.is_identity() {
            return Err(Error::internal(format!("empty core in E1 instance ({a}, {b})")));
        }
        let w = e1(&a_hat, &b1, depth)?;
        return Ok(E1Witness {
            lambda: w.lambda.hat()?,
            r: 2 * w.s + w.r + 1,
            s: w.s,
        });
    }
    // b = â b₁ with â b₁ â⁻¹ = b̂₁, so b₁ = z^k with z conjugate to ẑ
    let b1 = b.slice(la..lb);
    let root = primitive_root(&b1)?;
    let z = root.root;
    let g = e2(&z, depth)?;
    let mu = match g.l {
        1 => g.lambda,
        -1 => g.lambda.hat()?.inverse(),
        l => {
            return Err(Error::internal(format!(
                "primitive word {z} decomposed with exponent {l}"
            )))
        }
    };
    let mu_hat = mu.hat()?;
    let x = mu_hat.inverse().multiply(&a_hat)?;
    let t = power_of(&x, &z)?;
    Ok(E1Witness {
        lambda: mu_hat,
        r: t + root.exponent,
        s: t,
    })
}

/// The exponent `t` with `x = z^t`, for primitive `z`.
fn power_of(x: &FreeWord, z: &FreeWord) -> Result<i64> {
    if x.is_identity() {
        return Ok(0);
    }
    let rx = primitive_root(x)?;
    if rx.root == *z {
        Ok(rx.exponent)
    } else if rx.root == z.inverse() {
        Ok(-rx.exponent)
    } else {
        Err(Error::internal(format!("{x} is not a power of {z}")))
    }
}

/// Core of [`is_hat_conjugate`]: assumes `w` is conjugate to `ŵ`.
fn e2(w: &FreeWord, depth: usize) -> Result<E2Witness> {
    let depth = depth.checked_sub(1).ok_or_else(depth_exceeded)?;
    if w.is_identity() {
        return Ok(E2Witness {
            lambda: FreeWord::identity(Alphabet::Uv),
            l: 0,
        });
    }
    let (c, q) = cyclic_reduce(w);
    let n = q.len();
    let q_hat = q.hat()?;
    // q̂ is a rotation of q: q = p·s and q̂ = s·p
    let doubled: Vec<_> = q.letters().iter().chain(q.letters()).copied().collect();
    let k = kmp_find(&doubled, q_hat.letters())
        .filter(|&k| k > 0 && k < n)
        .ok_or_else(|| Error::internal(format!("{q} is not a rotation of its hat")))?;
    let p = q.slice(0..k);
    let s = q.slice(k..n);
    let wit = e1(&s, &p, depth)?;
    let l = wit.r + wit.s + 1;
    let lambda = FreeWord::product(Alphabet::Uv, [&c, &wit.lambda, &c.hat()?.inverse()])?;
    Ok(E2Witness { lambda, l })
}

/// Exhaustive search for `w = (λλ̂)^l`: tries every reduced `λ` with
/// `ℓ(λ) <= ℓ(w)`, shortest first, then in letter order, skipping `λλ̂ = 1`.
/// Limited to `ℓ(w) <= SEARCH_LIMIT`.
pub fn search_hat_decomposition(w: &FreeWord) -> Result<Option<E2Witness>> {
    w.require(Alphabet::Uv)?;
    if w.len() > SEARCH_LIMIT {
        return Err(Error::domain(format!(
            "exhaustive search is limited to words of length at most {SEARCH_LIMIT}"
        )));
    }
    if w.is_identity() {
        return Ok(Some(E2Witness {
            lambda: FreeWord::identity(Alphabet::Uv),
            l: 0,
        }));
    }
    if !w.abelianize()?.is_zero() {
        return Ok(None);
    }
    let rw = primitive_root(w)?;
    let rw_inv = rw.root.inverse();
    for len in 1..=w.len() {
        for lambda in reduced_words_of_length(Alphabet::Uv, len) {
            let t = lambda.multiply(&lambda.hat()?)?;
            if t.is_identity() {
                continue;
            }
            let rt = primitive_root(&t)?;
            if rw.exponent % rt.exponent != 0 {
                continue;
            }
            let l = rw.exponent / rt.exponent;
            let l = if rt.root == rw.root {
                l
            } else if rt.root == rw_inv {
                -l
            } else {
                continue;
            };
            return Ok(Some(E2Witness { lambda, l }));
        }
    }
    Ok(None)
}
