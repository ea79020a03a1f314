//! Homotopy classes of split 2-valued maps of the torus.
//!
//! A split map is given by a commuting pair `α = (w^r ; a,b)`,
//! `β = (w^s ; c,d)` in `P2(T²)`. The stored data is canonical: `w` is
//! trivial or primitive, and of `w` and `w⁻¹` the shortlex-smaller one is
//! kept (signs of `r, s` adjusted accordingly).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::braid::P2Element;
use crate::error::{checked, Error, Result};
use crate::freegroup::{are_conjugate, commute, primitive_root, AbVector, Alphabet, FreeWord};
use crate::hatcalc::is_hat_conjugate;
use crate::literal::{int_at, int_list_at, keyed_fields, word_at};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitMapClass {
    w: FreeWord,
    r: i64,
    s: i64,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl SplitMapClass {
    /// Canonical class of the pair `((w^r ; a,b), (w^s ; c,d))` for any `w`.
    pub fn from_data(w: FreeWord, r: i64, s: i64, lattice: [i64; 4]) -> Result<Self> {
        w.require(Alphabet::Uv)?;
        let [a, b, c, d] = lattice;
        if w.is_identity() || (r == 0 && s == 0) {
            return Ok(SplitMapClass {
                w: FreeWord::identity(Alphabet::Uv),
                r: 0,
                s: 0,
                a,
                b,
                c,
                d,
            });
        }
        let root = primitive_root(&w)?;
        let (mut w, mut r, mut s) = (
            root.root,
            checked::mul(r, root.exponent, "class exponent")?,
            checked::mul(s, root.exponent, "class exponent")?,
        );
        let inv = w.inverse();
        if inv.shortlex_cmp(&w) == Ordering::Less {
            w = inv;
            r = checked::neg(r, "class exponent")?;
            s = checked::neg(s, "class exponent")?;
        }
        Ok(SplitMapClass { w, r, s, a, b, c, d })
    }

    pub fn w(&self) -> &FreeWord {
        &self.w
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `(a, b, c, d)`
    pub fn lattice(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// `(m, n) = Ab(w)`
    pub fn ab_w(&self) -> AbVector {
        self.w.abelianize().expect("w lies in F2(u,v)")
    }

    /// The representing pair `((w^r ; a,b), (w^s ; c,d))`.
    pub fn pair(&self) -> Result<(P2Element, P2Element)> {
        Ok((
            P2Element::new(self.w.pow(self.r)?, AbVector(self.a, self.b))?,
            P2Element::new(self.w.pow(self.s)?, AbVector(self.c, self.d))?,
        ))
    }
}

/// `x = root^k`, given that `x` commutes with the primitive word `root`.
fn power_of(root: &FreeWord, x: &FreeWord) -> Result<i64> {
    if x.is_identity() {
        return Ok(0);
    }
    let pr = primitive_root(x)?;
    if pr.root == *root {
        Ok(pr.exponent)
    } else if pr.root == root.inverse() {
        Ok(-pr.exponent)
    } else {
        Err(Error::internal(format!("{x} commutes with {root} but is not a power of it")))
    }
}

/// Canonical class of a commuting pair of `P2(T²)`.
pub fn canonical_pair(alpha: &P2Element, beta: &P2Element) -> Result<SplitMapClass> {
    let (f, g) = (alpha.free_part(), beta.free_part());
    if !commute(f, g)? {
        return Err(Error::domain(format!(
            "pair does not commute: {f} and {g} do not commute in F2, so ({alpha}, {beta}) does not define a map of T^2"
        )));
    }
    let (p, q) = (alpha.lattice_part(), beta.lattice_part());
    let lattice = [p.0, p.1, q.0, q.1];
    let base = if f.is_identity() { g } else { f };
    if base.is_identity() {
        return SplitMapClass::from_data(base.clone(), 0, 0, lattice);
    }
    let root = primitive_root(base)?.root;
    SplitMapClass::from_data(root.clone(), power_of(&root, f)?, power_of(&root, g)?, lattice)
}

/// Based equality: the originating pairs agree componentwise.
pub fn based_equal(p1: &(P2Element, P2Element), p2: &(P2Element, P2Element)) -> bool {
    p1 == p2
}

/// Equality of classes of maps into the ordered configuration space.
pub fn free_equal(c1: &SplitMapClass, c2: &SplitMapClass) -> Result<bool> {
    if c1.lattice() != c2.lattice() {
        return Ok(false);
    }
    match (c1.w.is_identity(), c2.w.is_identity()) {
        (true, true) => return Ok(true),
        (false, false) => {}
        _ => return Ok(false),
    }
    if (c1.r, c1.s) == (c2.r, c2.s) && are_conjugate(&c1.w, &c2.w)?.is_some() {
        return Ok(true);
    }
    let neg = (checked::neg(c2.r, "class exponent")?, checked::neg(c2.s, "class exponent")?);
    Ok((c1.r, c1.s) == neg && are_conjugate(&c1.w, &c2.w.inverse())?.is_some())
}

/// The class of the lift with the two strings exchanged.
pub fn swap_class(c: &SplitMapClass) -> Result<SplitMapClass> {
    let m = c.ab_w();
    let shift = |base: i64, k: i64, x: i64| checked::add(base, checked::mul(k, x, "swap shift")?, "swap shift");
    SplitMapClass::from_data(
        c.w.hat()?,
        c.r,
        c.s,
        [
            shift(c.a, c.r, m.0)?,
            shift(c.b, c.r, m.1)?,
            shift(c.c, c.s, m.0)?,
            shift(c.d, c.s, m.1)?,
        ],
    )
}

/// Equality of the underlying unordered (2-valued) classes.
pub fn unordered_equal(c1: &SplitMapClass, c2: &SplitMapClass) -> Result<bool> {
    Ok(free_equal(c1, c2)? || free_equal(c1, &swap_class(c2)?)?)
}

/// Whether the class coincides with its own swap, decided through the
/// `w = (λλ̂)^l` criterion rather than by comparing with [`swap_class`].
pub fn is_self_symmetric(c: &SplitMapClass) -> Result<bool> {
    if c.w.is_identity() {
        return Ok(true);
    }
    let m = c.ab_w();
    let shift_vanishes = m.is_zero() || (c.r == 0 && c.s == 0);
    Ok(shift_vanishes && is_hat_conjugate(&c.w)?.is_some())
}

impl fmt::Display for SplitMapClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "class w={} r={} s={} A={},{},{},{}",
            self.w, self.r, self.s, self.a, self.b, self.c, self.d
        )
    }
}

/// Fields of a `<head> w=<word> r=<int> s=<int> A=<int>,<int>,<int>,<int>`
/// literal.
pub(crate) fn parse_class_fields(text: &str, head: &str) -> Result<(FreeWord, i64, i64, [i64; 4])> {
    let f = keyed_fields(text, head, &["w", "r", "s", "A"])?;
    let w = word_at(Alphabet::Uv, &f[0].0, f[0].1)?;
    let r = int_at(&f[1].0, f[1].1)?;
    let s = int_at(&f[2].0, f[2].1)?;
    let l = int_list_at(&f[3].0, f[3].1, 4)?;
    Ok((w, r, s, [l[0], l[1], l[2], l[3]]))
}

impl FromStr for SplitMapClass {
    type Err = Error;

    /// `class w=<word> r=<int> s=<int> A=a,b,c,d`; non-canonical data is
    /// canonicalized.
    fn from_str(text: &str) -> Result<Self> {
        let (w, r, s, lattice) = parse_class_fields(text, "class")?;
        SplitMapClass::from_data(w, r, s, lattice)
    }
}
