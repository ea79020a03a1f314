//! Nielsen numbers, deformability and root-free lifts for split 2-valued
//! maps of the torus.

mod lift;

pub use lift::{
    can_deform_fixed_point_free, cyclic_special_target, lift_cyclic_special, lift_proportional, verify_lift,
    Certificate, Construction, DeformVerdict, PuncturedHom,
};

use std::fmt;
use std::str::FromStr;

use crate::classify::{parse_class_fields, SplitMapClass};
use crate::error::{checked, Error, Result};
use crate::freegroup::{AbVector, FreeWord};

/// `ĝ_#(e₁) = (w^r ; a′,b)`, `ĝ_#(e₂) = (w^s ; c,d′)`: the class of the map
/// whose roots correspond to the fixed points of a split map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootData {
    pub w: FreeWord,
    pub r: i64,
    pub s: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl RootData {
    /// Canonicalizes through [`SplitMapClass::from_data`].
    pub fn new(w: FreeWord, r: i64, s: i64, lattice: [i64; 4]) -> Result<Self> {
        let c = SplitMapClass::from_data(w, r, s, lattice)?;
        Ok(RootData {
            w: c.w().clone(),
            r: c.r(),
            s: c.s(),
            a: c.a(),
            b: c.b(),
            c: c.c(),
            d: c.d(),
        })
    }

    pub fn first(&self) -> AbVector {
        AbVector(self.a, self.b)
    }

    pub fn second(&self) -> AbVector {
        AbVector(self.c, self.d)
    }

    /// `((w^r ; a′,b), (w^s ; c,d′))`
    pub fn target(&self) -> Result<(crate::braid::P2Element, crate::braid::P2Element)> {
        use crate::braid::P2Element;
        Ok((
            P2Element::new(self.w.pow(self.r)?, self.first())?,
            P2Element::new(self.w.pow(self.s)?, self.second())?,
        ))
    }
}

impl fmt::Display for RootData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root w={} r={} s={} A={},{},{},{}",
            self.w, self.r, self.s, self.a, self.b, self.c, self.d
        )
    }
}

impl FromStr for RootData {
    type Err = Error;

    /// `root w=<word> r=<int> s=<int> A=a′,b,c,d′`
    fn from_str(text: &str) -> Result<Self> {
        let (w, r, s, lattice) = parse_class_fields(text, "root")?;
        RootData::new(w, r, s, lattice)
    }
}

pub fn fixed_to_root(c: &SplitMapClass) -> Result<RootData> {
    Ok(RootData {
        w: c.w().clone(),
        r: c.r(),
        s: c.s(),
        a: checked::sub(c.a(), 1, "root transform")?,
        b: c.b(),
        c: c.c(),
        d: checked::sub(c.d(), 1, "root transform")?,
    })
}

pub fn root_to_fixed(rd: &RootData) -> Result<SplitMapClass> {
    SplitMapClass::from_data(
        rd.w.clone(),
        rd.r,
        rd.s,
        [
            checked::add(rd.a, 1, "root transform")?,
            rd.b,
            rd.c,
            checked::add(rd.d, 1, "root transform")?,
        ],
    )
}

/// The numeric data the formulas below depend on: `(a,b,c,d)`, `(r,s)` and
/// `(m,n) = Ab(w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Invariants {
    pub lattice: [i64; 4],
    pub r: i64,
    pub s: i64,
    pub m: i64,
    pub n: i64,
}

impl Invariants {
    pub fn of(c: &SplitMapClass) -> Self {
        let ab = c.ab_w();
        Invariants {
            lattice: c.lattice(),
            r: c.r(),
            s: c.s(),
            m: ab.0,
            n: ab.1,
        }
    }

    /// `(a−1, b)` and `(c, d−1)`
    fn shifted(&self) -> Result<(AbVector, AbVector)> {
        let [a, b, c, d] = self.lattice;
        Ok((
            AbVector(checked::sub(a, 1, "nielsen")?, b),
            AbVector(c, checked::sub(d, 1, "nielsen")?),
        ))
    }
}

fn det(p: AbVector, q: AbVector) -> Result<i64> {
    checked::det(p.0, q.0, p.1, q.1, "determinant")
}

fn lin(k: i64, x: AbVector, y: AbVector) -> Result<AbVector> {
    x.checked_scale(k)?.checked_add(y)
}

/// `|det[[a−1, c], [b, d−1]]| + |det[[rm+a−1, sm+c], [rn+b, sn+d−1]]|`
pub fn nielsen_of(inv: &Invariants) -> Result<u64> {
    let (p, q) = inv.shifted()?;
    let mn = AbVector(inv.m, inv.n);
    let first = det(p, q)?.unsigned_abs();
    let second = det(lin(inv.r, mn, p)?, lin(inv.s, mn, q)?)?.unsigned_abs();
    first.checked_add(second).ok_or(Error::Overflow("nielsen"))
}

pub fn nielsen(c: &SplitMapClass) -> Result<u64> {
    nielsen_of(&Invariants::of(c))
}

/// Condition (a): `(a−1,b)`, `(c,d−1)` and `(m,n)` lie in a cyclic subgroup.
pub fn condition_a(inv: &Invariants) -> Result<bool> {
    let (p, q) = inv.shifted()?;
    let mn = AbVector(inv.m, inv.n);
    Ok(det(p, q)? == 0 && det(p, mn)? == 0 && det(q, mn)? == 0)
}

/// Condition (b): `s(a−1,b) = r(c,d−1)`.
pub fn condition_b(inv: &Invariants) -> Result<bool> {
    let (p, q) = inv.shifted()?;
    Ok(p.checked_scale(inv.s)? == q.checked_scale(inv.r)?)
}

/// Whether both branches can be deformed to be fixed point free. With
/// `(r,s) = (0,0)` the word is trivial and any exponents may represent it,
/// so condition (b) is read as collinearity of `(a−1,b)` and `(c,d−1)`.
pub fn individually_deformable_of(inv: &Invariants) -> Result<bool> {
    if inv.r == 0 && inv.s == 0 {
        let (p, q) = inv.shifted()?;
        return Ok(det(p, q)? == 0);
    }
    Ok(condition_a(inv)? || condition_b(inv)?)
}

pub fn individually_deformable(c: &SplitMapClass) -> Result<bool> {
    individually_deformable_of(&Invariants::of(c))
}
