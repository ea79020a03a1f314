use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::{GroupElement, P2Element};
use crate::error::{Error, Result};
use crate::freegroup::{AbVector, Alphabet, FreeWord, Letter};
use crate::literal::Cursor;

/// Element `k·t` of `P2(T²∖{1}) = F3(u,v,B) ⋊ F2(x,y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PuncturedElement {
    kernel: FreeWord,
    quotient: FreeWord,
}

/// Images of `u, v, B` under conjugation by `x`, `x⁻¹`, `y`, `y⁻¹`.
const ACTION_IMAGES: [[&str; 3]; 4] = [
    // x
    [
        "u",
        "u v u^-1 B^-1 u v^-1 u^-1 v",
        "u v^-1 u v u^-1 B u v^-1 u^-1 v u^-1",
    ],
    // x⁻¹
    ["u", "v u^-1 B u", "B^-1 u v^-1 u^-1 v u^-1 B u v^-1 u v u^-1 B"],
    // y
    ["u v u^-1 B u v^-1", "v", "u v u^-1 B u v^-1 u^-1"],
    // y⁻¹
    ["B^-1 u", "v", "B^-1 u v^-1 u^-1 B u v u^-1 B"],
];

fn action_images() -> &'static [Vec<FreeWord>; 4] {
    static IMAGES: OnceLock<[Vec<FreeWord>; 4]> = OnceLock::new();
    IMAGES.get_or_init(|| {
        ACTION_IMAGES.map(|row| {
            row.iter()
                .map(|s| FreeWord::parse_in(Alphabet::Uvb, s).expect("fixed action image"))
                .collect()
        })
    })
}

fn letter_images(l: Letter) -> &'static [FreeWord] {
    &action_images()[usize::from(l.generator) * 2 + usize::from(l.inverse)]
}

/// `t k t⁻¹` for `t ∈ F2(x,y)` and `k ∈ F3(u,v,B)`; the rightmost letter of
/// `t` acts first.
pub fn pp_act(t: &FreeWord, k: &FreeWord) -> Result<FreeWord> {
    t.require(Alphabet::Xy)?;
    k.require(Alphabet::Uvb)?;
    let mut out = k.clone();
    for &l in t.letters().iter().rev() {
        out = out.substitute(Alphabet::Uvb, letter_images(l))?;
    }
    Ok(out)
}

/// `(k₁,t₁)(k₂,t₂) = (k₁·(t₁ k₂ t₁⁻¹), t₁t₂)`
pub fn pp_mul(g: &PuncturedElement, h: &PuncturedElement) -> Result<PuncturedElement> {
    Ok(PuncturedElement {
        kernel: g.kernel.multiply(&pp_act(&g.quotient, &h.kernel)?)?,
        quotient: g.quotient.multiply(&h.quotient)?,
    })
}

/// Projection to `P2(T²)`: `B ↦ 1`, `x ↦ (1 ; 1,0)`, `y ↦ (1 ; 0,1)`.
pub fn alpha(g: &PuncturedElement) -> Result<P2Element> {
    let erase = [
        FreeWord::parse_in(Alphabet::Uv, "u")?,
        FreeWord::parse_in(Alphabet::Uv, "v")?,
        FreeWord::identity(Alphabet::Uv),
    ];
    let free = g.kernel.substitute(Alphabet::Uv, &erase)?;
    let t = g.quotient.abelianize()?;
    P2Element::new(free, AbVector(t.0, t.1))
}

/// `B₁₂ = B⁻¹ [u, v⁻¹]`
pub fn b12() -> PuncturedElement {
    PuncturedElement::kernel_only(
        FreeWord::parse_in(Alphabet::Uvb, "B^-1 u v^-1 u^-1 v").expect("fixed word"),
    )
    .expect("word in F3")
}

impl PuncturedElement {
    pub fn new(kernel: FreeWord, quotient: FreeWord) -> Result<Self> {
        kernel.require(Alphabet::Uvb)?;
        quotient.require(Alphabet::Xy)?;
        Ok(PuncturedElement { kernel, quotient })
    }

    pub fn kernel_only(kernel: FreeWord) -> Result<Self> {
        Self::new(kernel, FreeWord::identity(Alphabet::Xy))
    }

    pub fn quotient_only(quotient: FreeWord) -> Result<Self> {
        Self::new(FreeWord::identity(Alphabet::Uvb), quotient)
    }

    pub fn kernel_part(&self) -> &FreeWord {
        &self.kernel
    }

    pub fn quotient_part(&self) -> &FreeWord {
        &self.quotient
    }

    /// The generator named `name` (one of `u v B x y`).
    pub fn generator(name: char) -> Result<Self> {
        if let Some(g) = Alphabet::Uvb.index_of(name) {
            Self::kernel_only(FreeWord::generator_power(Alphabet::Uvb, g, 1)?)
        } else if let Some(g) = Alphabet::Xy.index_of(name) {
            Self::quotient_only(FreeWord::generator_power(Alphabet::Xy, g, 1)?)
        } else {
            Err(Error::domain(format!("'{name}' is not a generator of P2(T^2 - {{1}})")))
        }
    }

    /// Evaluates a word in the letters `u v B x y` in the group, e.g.
    /// `u^2 x y^-1` becomes `[u^2 | x y^-1]`.
    pub fn from_mixed_word(text: &str) -> Result<Self> {
        let tokens = crate::freegroup::parse_tokens(text, 0)?;
        let mut out = Self::identity();
        for t in tokens {
            let g = Self::generator(t.name).map_err(|_| {
                Error::parse(t.column, format!("'{}' is not one of u, v, B, x, y", t.name))
            })?;
            out = out.mul(&g.pow(t.exp)?)?;
        }
        Ok(out)
    }
}

impl GroupElement for PuncturedElement {
    fn identity() -> Self {
        PuncturedElement {
            kernel: FreeWord::identity(Alphabet::Uvb),
            quotient: FreeWord::identity(Alphabet::Xy),
        }
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        pp_mul(self, other)
    }

    /// `(k, t)⁻¹ = (t⁻¹ k⁻¹ t, t⁻¹)`
    fn inverse(&self) -> Result<Self> {
        let t_inv = self.quotient.inverse();
        Ok(PuncturedElement {
            kernel: pp_act(&t_inv, &self.kernel.inverse())?,
            quotient: t_inv,
        })
    }
}

impl fmt::Display for PuncturedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {}]", self.kernel, self.quotient)
    }
}

impl PuncturedElement {
    pub(crate) fn parse_cursor(cur: &mut Cursor) -> Result<Self> {
        cur.expect('[')?;
        let kernel = cur.word(Alphabet::Uvb, &['|', ']'])?;
        cur.expect('|')?;
        let quotient = cur.word(Alphabet::Xy, &[']'])?;
        cur.expect(']')?;
        Ok(PuncturedElement { kernel, quotient })
    }
}

impl FromStr for PuncturedElement {
    type Err = Error;

    /// `[<word over u,v,B> | <word over x,y>]`
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let g = Self::parse_cursor(&mut cur)?;
        cur.finish()?;
        Ok(g)
    }
}
