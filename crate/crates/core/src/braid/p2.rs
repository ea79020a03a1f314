use std::fmt;
use std::str::FromStr;

use super::GroupElement;
use crate::error::{Error, Result};
use crate::freegroup::{AbVector, Alphabet, FreeWord};
use crate::literal::Cursor;

/// Element `(w ; x,y)` of `P2(T²) = F2(u,v) × Z²`; the lattice part counts
/// the exponents of the central generators `x` and `y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct P2Element {
    free: FreeWord,
    lattice: AbVector,
}

impl P2Element {
    pub fn new(free: FreeWord, lattice: AbVector) -> Result<Self> {
        free.require(Alphabet::Uv)?;
        Ok(P2Element { free, lattice })
    }

    pub fn free_part(&self) -> &FreeWord {
        &self.free
    }

    pub fn lattice_part(&self) -> AbVector {
        self.lattice
    }

    pub fn u() -> Self {
        Self::gen(0)
    }

    pub fn v() -> Self {
        Self::gen(1)
    }

    pub fn x() -> Self {
        Self::lattice_only(AbVector(1, 0))
    }

    pub fn y() -> Self {
        Self::lattice_only(AbVector(0, 1))
    }

    pub fn lattice_only(z: AbVector) -> Self {
        P2Element {
            free: FreeWord::identity(Alphabet::Uv),
            lattice: z,
        }
    }

    pub fn from_free(free: FreeWord) -> Result<Self> {
        Self::new(free, AbVector::ZERO)
    }

    fn gen(g: u8) -> Self {
        P2Element {
            free: FreeWord::generator_power(Alphabet::Uv, g, 1).expect("single letter"),
            lattice: AbVector::ZERO,
        }
    }

    /// `[u, v⁻¹] = σ²`
    pub fn sigma_squared() -> Self {
        P2Element {
            free: FreeWord::parse_in(Alphabet::Uv, "u v^-1 u^-1 v").expect("fixed word"),
            lattice: AbVector::ZERO,
        }
    }
}

impl GroupElement for P2Element {
    fn identity() -> Self {
        Self::lattice_only(AbVector::ZERO)
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        p2_mul(self, other)
    }

    fn inverse(&self) -> Result<Self> {
        Ok(P2Element {
            free: self.free.inverse(),
            lattice: self.lattice.checked_neg()?,
        })
    }

    fn pow(&self, k: i64) -> Result<Self> {
        Ok(P2Element {
            free: self.free.pow(k)?,
            lattice: self.lattice.checked_scale(k)?,
        })
    }
}

/// Componentwise product.
pub fn p2_mul(g: &P2Element, h: &P2Element) -> Result<P2Element> {
    Ok(P2Element {
        free: g.free.multiply(&h.free)?,
        lattice: g.lattice.checked_add(h.lattice)?,
    })
}

/// `σ (w ; x,y) σ⁻¹ = (u v⁻¹ ŵ v u⁻¹ ; x + |w|_u, y + |w|_v)`.
pub fn sigma_conj(g: &P2Element) -> Result<P2Element> {
    let uv = FreeWord::parse_in(Alphabet::Uv, "u v^-1").expect("fixed word");
    let free = FreeWord::product(Alphabet::Uv, [&uv, &g.free.hat()?, &uv.inverse()])?;
    let lattice = g.lattice.checked_add(g.free.abelianize()?)?;
    Ok(P2Element { free, lattice })
}

impl fmt::Display for P2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ; {},{})", self.free, self.lattice.0, self.lattice.1)
    }
}

impl P2Element {
    pub(crate) fn parse_cursor(cur: &mut Cursor) -> Result<Self> {
        cur.expect('(')?;
        let free = cur.word(Alphabet::Uv, &[';', ')'])?;
        cur.expect(';')?;
        let xy = cur.int_list(2)?;
        cur.expect(')')?;
        Ok(P2Element {
            free,
            lattice: AbVector(xy[0], xy[1]),
        })
    }
}

impl FromStr for P2Element {
    type Err = Error;

    /// `(<word> ; <int>,<int>)`
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

    fn p(s: &str) -> P2Element {
        s.parse().unwrap()
    }

    #[test]
    fn componentwise_product() {
        assert_eq!(p("(u ; 1,0)").mul(&p("(v ; 0,1)")).unwrap(), p("(u v ; 1,1)"));
        let g = p("(u v^-1 ; 3,-2)");
        assert!(g.mul(&g.inverse().unwrap()).unwrap().is_identity());
        let (a, b) = (p("(u ; 5,7)"), p("(u^2 ; 0,0)"));
        assert!(a.commutes_with(&b).unwrap());
    }

    #[test]
    fn sigma_conjugation_examples() {
        assert_eq!(sigma_conj(&p("(u ; 0,0)")).unwrap(), p("(u v^-1 u^-1 v u^-1 ; 1,0)"));
        assert_eq!(sigma_conj(&p("(v ; 0,0)")).unwrap(), p("(u v^-1 u^-1 v v^-1 ; 0,1)"));
        assert_eq!(sigma_conj(&p("(1 ; 3,4)")).unwrap(), p("(1 ; 3,4)"));
    }

    #[test]
    fn literal_round_trip_and_errors() {
        let g = p("( u^2 v^-1 ;  -3 , 4 )");
        assert_eq!(g.to_string(), "(u^2 v^-1 ; -3,4)");
        assert_eq!(p(&g.to_string()), g);
        assert_eq!(p("(1 ; 0,0)").to_string(), "(1 ; 0,0)");
        let e = "(u ; 1)".parse::<P2Element>().unwrap_err();
        assert!(matches!(e, Error::Parse { column: 6, .. }), "{e}");
        let e = "(u x ; 1,1)".parse::<P2Element>().unwrap_err();
        assert!(matches!(e, Error::Parse { column: 3, .. }), "{e}");
    }
}
