use std::fmt;
use std::str::FromStr;

use super::{sigma_conj, GroupElement, P2Element};
use crate::error::{Error, Result};
use crate::literal::Cursor;

/// Element `g·σ^ε` of `B2(T²)` with `g` pure and `ε ∈ {0,1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct B2Element {
    pure: P2Element,
    swap: bool,
}

impl B2Element {
    pub fn new(pure: P2Element, swap: bool) -> Self {
        B2Element { pure, swap }
    }

    pub fn pure(g: P2Element) -> Self {
        B2Element { pure: g, swap: false }
    }

    pub fn sigma() -> Self {
        B2Element {
            pure: P2Element::identity(),
            swap: true,
        }
    }

    pub fn coset_rep(&self) -> &P2Element {
        &self.pure
    }

    /// Image in `S2`: 1 if the strings are exchanged.
    pub fn epsilon(&self) -> u8 {
        u8::from(self.swap)
    }
}

/// `(g₁σ^ε₁)(g₂σ^ε₂) = g₁·(σ^ε₁ g₂ σ^-ε₁)·σ^(ε₁+ε₂)`, with `σ² = [u,v⁻¹]`.
pub fn b2_mul(g: &B2Element, h: &B2Element) -> Result<B2Element> {
    let moved = if g.swap { sigma_conj(&h.pure)? } else { h.pure.clone() };
    let mut pure = g.pure.mul(&moved)?;
    if g.swap && h.swap {
        pure = pure.mul(&P2Element::sigma_squared())?;
    }
    Ok(B2Element {
        pure,
        swap: g.swap != h.swap,
    })
}

impl GroupElement for B2Element {
    fn identity() -> Self {
        B2Element::pure(P2Element::identity())
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        b2_mul(self, other)
    }

    /// `(gσ)⁻¹ = σ⁻² · σ g⁻¹ σ⁻¹ · σ`
    fn inverse(&self) -> Result<Self> {
        let inv = self.pure.inverse()?;
        if !self.swap {
            return Ok(B2Element::pure(inv));
        }
        let pure = P2Element::sigma_squared().inverse()?.mul(&sigma_conj(&inv)?)?;
        Ok(B2Element { pure, swap: true })
    }
}

impl fmt::Display for B2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} s^{}", self.pure, self.epsilon())
    }
}

impl B2Element {
    pub(crate) fn parse_cursor(cur: &mut Cursor) -> Result<Self> {
        let pure = P2Element::parse_cursor(cur)?;
        let swap = if cur.eat('s') {
            if cur.eat('^') {
                let col = cur.column();
                match cur.int()? {
                    0 => false,
                    1 => true,
                    _ => return Err(Error::parse(col, "the exponent of s must be 0 or 1")),
                }
            } else {
                true
            }
        } else {
            false
        };
        Ok(B2Element { pure, swap })
    }
}

impl FromStr for B2Element {
    type Err = Error;

    /// `(<word> ; <int>,<int>) s^<0|1>`; the `s` factor may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let g = Self::parse_cursor(&mut cur)?;
        cur.finish()?;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> B2Element {
        s.parse().unwrap()
    }

    #[test]
    fn sigma_squared_is_commutator() {
        let s = B2Element::sigma();
        assert_eq!(s.mul(&s).unwrap(), b("(u v^-1 u^-1 v ; 0,0) s^0"));
    }

    #[test]
    fn conjugating_u_by_sigma() {
        let s = B2Element::sigma();
        let u = b("(u ; 0,0)");
        let c = s.mul(&u).unwrap().mul(&s.inverse().unwrap()).unwrap();
        assert_eq!(c, b("(u v^-1 u^-1 v u^-1 ; 1,0) s^0"));
    }

    #[test]
    fn identity_is_neutral_and_inverse_works() {
        let h = b("(u^2 v ; 1,-1) s^1");
        assert_eq!(B2Element::identity().mul(&h).unwrap(), h);
        assert!(h.mul(&h.inverse().unwrap()).unwrap().is_identity());
        assert!(h.inverse().unwrap().mul(&h).unwrap().is_identity());
    }

    #[test]
    fn literal_forms() {
        assert_eq!(b("(u ; 0,0) s"), b("(u ; 0,0) s^1"));
        assert_eq!(b("(u ; 0,0)"), b("(u ; 0,0) s^0"));
        assert_eq!(b("(u ; 0,0) s").to_string(), "(u ; 0,0) s^1");
        assert!("(u ; 0,0) s^2".parse::<B2Element>().unwrap_err().is_parse());
    }
}
