use std::fmt;

use super::{condition_b, fixed_to_root, nielsen, Invariants, RootData};
use crate::braid::{alpha, GroupElement, P2Element, PuncturedElement};
use crate::classify::SplitMapClass;
use crate::error::{checked, Error, Result};
use crate::freegroup::{are_conjugate, AbVector, Alphabet, FreeWord};

/// A homomorphism `Z² → P2(T²∖{1})`, given by the images of `e₁` and `e₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuncturedHom {
    pub image_e1: PuncturedElement,
    pub image_e2: PuncturedElement,
}

impl fmt::Display for PuncturedHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e1 -> {} ; e2 -> {}", self.image_e1, self.image_e2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// Powers of one element `z` projecting to `(w^ℓ ; γ)`.
    Proportional { ell: i64, gamma: AbVector },
    /// `((u^p v^q)^{λ₃r}(x^p y^q)^{λ₁}, (u^p v^q)^{λ₃s}(x^p y^q)^{λ₂})`,
    /// conjugated by `conjugator` to reach the given `w`.
    CyclicSpecial {
        p: i64,
        q: i64,
        lambda: [i64; 3],
        conjugator: FreeWord,
    },
}

/// A root-free lift together with the pair it was checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub hom: PuncturedHom,
    pub target: (P2Element, P2Element),
    pub construction: Construction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeformVerdict {
    Yes(Box<Certificate>),
    No { nielsen: u64 },
    Unknown,
}

/// `F2(u,v) ↪ F3(u,v,B)`
fn embed(w: &FreeWord) -> Result<FreeWord> {
    w.require(Alphabet::Uv)?;
    let images = [
        FreeWord::generator_power(Alphabet::Uvb, 0, 1)?,
        FreeWord::generator_power(Alphabet::Uvb, 1, 1)?,
    ];
    w.substitute(Alphabet::Uvb, &images)
}

/// `x^i y^j`
fn lattice_word(z: AbVector) -> Result<FreeWord> {
    FreeWord::generator_power(Alphabet::Xy, 0, z.0)?.multiply(&FreeWord::generator_power(Alphabet::Xy, 1, z.1)?)
}

/// The element spelled `w x^i y^j`.
fn spelled(w: &FreeWord, z: AbVector) -> Result<PuncturedElement> {
    PuncturedElement::new(embed(w)?, lattice_word(z)?)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// `p ∈ {0,1}` or `q ∈ {0,1}`
fn admissible(p: i64, q: i64) -> bool {
    matches!(p, 0 | 1) || matches!(q, 0 | 1)
}

pub fn verify_lift(hom: &PuncturedHom, target: &(P2Element, P2Element)) -> Result<bool> {
    Ok(hom.image_e1.commutes_with(&hom.image_e2)?
        && alpha(&hom.image_e1)? == target.0
        && alpha(&hom.image_e2)? == target.1)
}

fn certify(hom: PuncturedHom, target: (P2Element, P2Element), construction: Construction) -> Result<Certificate> {
    if !verify_lift(&hom, &target)? {
        return Err(Error::internal(format!("lift {hom} does not verify against ({}, {})", target.0, target.1)));
    }
    Ok(Certificate {
        hom,
        target,
        construction,
    })
}

/// Root-free lift of root data satisfying `s(a′,b) = r(c,d′)`.
pub fn lift_proportional(rd: &RootData) -> Result<Certificate> {
    let (r, s) = (rd.r, rd.s);
    if r == 0 && s == 0 {
        return Err(Error::domain("lift requires (r,s) != (0,0)"));
    }
    let (first, second) = (rd.first(), rd.second());
    if first.checked_scale(s)? != second.checked_scale(r)? {
        return Err(Error::domain(format!(
            "condition (b): s(a',b)=r(c,d') violated: {s}*{first} != {r}*{second}"
        )));
    }
    let target = rd.target()?;
    let identity = PuncturedElement::identity();
    if r == 0 {
        let hom = PuncturedHom {
            image_e1: identity,
            image_e2: spelled(&rd.w.pow(s)?, second)?,
        };
        let construction = Construction::Proportional { ell: s.abs(), gamma: second.checked_scale(s.signum())? };
        return certify(hom, target, construction);
    }
    if s == 0 {
        let hom = PuncturedHom {
            image_e1: spelled(&rd.w.pow(r)?, first)?,
            image_e2: identity,
        };
        let construction = Construction::Proportional { ell: r.abs(), gamma: first.checked_scale(r.signum())? };
        return certify(hom, target, construction);
    }
    let ell = gcd(r.unsigned_abs(), s.unsigned_abs()) as i64;
    let (r1, s1) = (r / ell, s / ell);
    if first.0 % r1 != 0 || first.1 % r1 != 0 {
        return Err(Error::internal(format!("(l/r)(a',b) is not integral for {rd}")));
    }
    let gamma = AbVector(first.0 / r1, first.1 / r1);
    let z = spelled(&rd.w.pow(ell)?, gamma)?;
    let hom = PuncturedHom {
        image_e1: z.pow(r1)?,
        image_e2: z.pow(s1)?,
    };
    certify(hom, target, Construction::Proportional { ell, gamma })
}

/// `((u^p v^q)^{λ₃r} ; λ₁(p,q))` and `((u^p v^q)^{λ₃s} ; λ₂(p,q))`
pub fn cyclic_special_target(p: i64, q: i64, lambda: [i64; 3], r: i64, s: i64) -> Result<(P2Element, P2Element)> {
    let g = AbVector(p, q);
    let base = FreeWord::generator_power(Alphabet::Uv, 0, p)?.multiply(&FreeWord::generator_power(Alphabet::Uv, 1, q)?)?;
    let [l1, l2, l3] = lambda;
    Ok((
        P2Element::new(base.pow(checked::mul(l3, r, "lift exponent")?)?, g.checked_scale(l1)?)?,
        P2Element::new(base.pow(checked::mul(l3, s, "lift exponent")?)?, g.checked_scale(l2)?)?,
    ))
}

/// The lift `e₁ ↦ (u^p v^q)^{λ₃r}(x^p y^q)^{λ₁}`, `e₂ ↦ (u^p v^q)^{λ₃s}(x^p y^q)^{λ₂}`.
pub fn lift_cyclic_special(p: i64, q: i64, lambda: [i64; 3], r: i64, s: i64) -> Result<Certificate> {
    if !admissible(p, q) {
        return Err(Error::domain(format!(
            "generator ({p},{q}) is not of the form (0,q), (1,q), (p,0) or (p,1)"
        )));
    }
    let target = cyclic_special_target(p, q, lambda, r, s)?;
    let t = lattice_word(AbVector(p, q))?;
    let image = |u: &P2Element, l: i64| PuncturedElement::new(embed(u.free_part())?, t.pow(l)?);
    let hom = PuncturedHom {
        image_e1: image(&target.0, lambda[0])?,
        image_e2: image(&target.1, lambda[1])?,
    };
    let construction = Construction::CyclicSpecial {
        p,
        q,
        lambda,
        conjugator: FreeWord::identity(Alphabet::Uv),
    };
    certify(hom, target, construction)
}

/// The primitive `g` with every vector an integer multiple of it, together
/// with the multiples; `None` if the vectors are not collinear or all zero.
fn common_generator(vs: &[AbVector]) -> Option<(AbVector, Vec<i64>)> {
    let first = vs.iter().find(|v| !v.is_zero())?;
    let k = gcd(first.0.unsigned_abs(), first.1.unsigned_abs()) as i64;
    let g = AbVector(first.0 / k, first.1 / k);
    let coeffs = vs
        .iter()
        .map(|v| {
            let t = if g.0 != 0 { v.0 / g.0 } else { v.1 / g.1 };
            (AbVector(g.0 * t, g.1 * t) == *v).then_some(t)
        })
        .collect::<Option<Vec<_>>>()?;
    Some((g, coeffs))
}

/// Matches the class against the cyclic construction: `(a−1,b)`, `(c,d−1)`
/// and `Ab(w) = λ₃(p,q)` share an admissible generator `(p,q)` and `w` is
/// conjugate to `(u^p v^q)^{λ₃}`.
fn match_cyclic(c: &SplitMapClass, rd: &RootData) -> Result<Option<Certificate>> {
    let Some((g, coeffs)) = common_generator(&[rd.first(), rd.second(), c.ab_w()]) else {
        return Ok(None);
    };
    let (g, sign) = if admissible(g.0, g.1) {
        (g, 1)
    } else if admissible(-g.0, -g.1) {
        (AbVector(-g.0, -g.1), -1)
    } else {
        return Ok(None);
    };
    let lambda = [coeffs[0] * sign, coeffs[1] * sign, coeffs[2] * sign];
    let base = cyclic_special_target(g.0, g.1, [0, 0, lambda[2]], 1, 0)?.0;
    let Some(delta) = are_conjugate(base.free_part(), &rd.w)? else {
        return Ok(None);
    };
    let cert = lift_cyclic_special(g.0, g.1, lambda, rd.r, rd.s)?;
    let d = PuncturedElement::kernel_only(embed(&delta)?)?;
    let hom = PuncturedHom {
        image_e1: cert.hom.image_e1.conjugate_by(&d)?,
        image_e2: cert.hom.image_e2.conjugate_by(&d)?,
    };
    let construction = Construction::CyclicSpecial {
        p: g.0,
        q: g.1,
        lambda,
        conjugator: delta,
    };
    certify(hom, rd.target()?, construction).map(Some)
}

/// Decides whether the split 2-valued map of class `c` can be deformed to be
/// fixed point free, with a checked root-free lift when it can.
pub fn can_deform_fixed_point_free(c: &SplitMapClass) -> Result<DeformVerdict> {
    let n = nielsen(c)?;
    if n > 0 {
        return Ok(DeformVerdict::No { nielsen: n });
    }
    let rd = fixed_to_root(c)?;
    if rd.w.is_identity() {
        // Nielsen number zero makes (a′,b) and (c,d′) collinear; any
        // exponents (r,s) with s(a′,b) = r(c,d′) represent the trivial word.
        let (r, s) = match common_generator(&[rd.first(), rd.second()]) {
            Some((_, k)) => (k[0], k[1]),
            None => (1, 0),
        };
        let cert = lift_proportional(&RootData { r, s, ..rd.clone() })?;
        return Ok(DeformVerdict::Yes(Box::new(cert)));
    }
    if condition_b(&Invariants::of(c))? {
        return Ok(DeformVerdict::Yes(Box::new(lift_proportional(&rd)?)));
    }
    Ok(match match_cyclic(c, &rd)? {
        Some(cert) => DeformVerdict::Yes(Box::new(cert)),
        None => DeformVerdict::Unknown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::swap_class;

    fn pe(s: &str) -> PuncturedElement {
        PuncturedElement::from_mixed_word(s).unwrap()
    }

    fn cls(s: &str) -> SplitMapClass {
        s.parse().unwrap()
    }

    #[test]
    fn proportional_examples() {
        let rd: RootData = "root w=u r=2 s=4 A=1,0,2,0".parse().unwrap();
        let cert = lift_proportional(&rd).unwrap();
        assert_eq!(cert.hom.image_e1, pe("u^2 x"));
        assert_eq!(cert.hom.image_e2, pe("u^4 x^2"));
        assert_eq!(cert.construction, Construction::Proportional { ell: 2, gamma: AbVector(1, 0) });

        let rd: RootData = "root w=v r=0 s=1 A=0,0,2,3".parse().unwrap();
        let cert = lift_proportional(&rd).unwrap();
        assert!(cert.hom.image_e1.is_identity());
        assert_eq!(cert.hom.image_e2, pe("v x^2 y^3"));

        let rd: RootData = "root w=u r=1 s=1 A=1,0,0,1".parse().unwrap();
        assert!(matches!(lift_proportional(&rd), Err(Error::Domain(m)) if m.contains("condition (b)")));
    }

    #[test]
    fn proportional_with_negative_exponents() {
        let rd: RootData = "root w=u v^-1 r=-4 s=6 A=-2,4,3,-6".parse().unwrap();
        let cert = lift_proportional(&rd).unwrap();
        assert!(verify_lift(&cert.hom, &rd.target().unwrap()).unwrap());
    }

    #[test]
    fn cyclic_special_examples() {
        let cert = lift_cyclic_special(1, 2, [1, 0, 1], 1, 1).unwrap();
        assert_eq!(cert.hom.image_e1, pe("u v^2 x y^2"));
        assert_eq!(cert.hom.image_e2, pe("u v^2"));
        assert_eq!(alpha(&cert.hom.image_e1).unwrap(), "(u v^2 ; 1,2)".parse().unwrap());

        let cert = lift_cyclic_special(0, 3, [2, 1, 1], 1, 0).unwrap();
        assert_eq!(cert.hom.image_e1, pe("v^3 y^6"));
        assert_eq!(cert.hom.image_e2, pe("y^3"));

        assert!(matches!(lift_cyclic_special(2, 3, [1, 1, 1], 1, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn non_commuting_hom_fails_verification() {
        let hom = PuncturedHom {
            image_e1: pe("u"),
            image_e2: pe("v"),
        };
        let target = (P2Element::u(), P2Element::v());
        assert!(!verify_lift(&hom, &target).unwrap());
    }

    #[test]
    fn verdict_examples() {
        let c = cls("class w=u v^2 r=2 s=1 A=3,4,1,3");
        let DeformVerdict::Yes(cert) = can_deform_fixed_point_free(&c).unwrap() else {
            panic!("expected a certificate");
        };
        assert!(matches!(cert.construction, Construction::Proportional { .. }));
        assert!(verify_lift(&cert.hom, &fixed_to_root(&c).unwrap().target().unwrap()).unwrap());

        let c = cls("class w=u r=1 s=0 A=2,0,0,3");
        assert_eq!(can_deform_fixed_point_free(&c).unwrap(), DeformVerdict::No { nielsen: 6 });

        let c = cls("class w=u v^2 u v r=1 s=1 A=3,3,0,1");
        assert_eq!(can_deform_fixed_point_free(&c).unwrap(), DeformVerdict::Unknown);
    }

    #[test]
    fn cyclic_match_with_conjugated_word() {
        // (a−1,b) = (1,2), (c,d−1) = (0,0), Ab(w) = (1,2) but r ≠ s, so only
        // the cyclic construction applies.
        let c = cls("class w=v^2 u r=2 s=1 A=2,2,0,1");
        let DeformVerdict::Yes(cert) = can_deform_fixed_point_free(&c).unwrap() else {
            panic!("expected a certificate");
        };
        assert!(matches!(cert.construction, Construction::CyclicSpecial { p: 1, q: 2, .. }));
        assert!(verify_lift(&cert.hom, &fixed_to_root(&c).unwrap().target().unwrap()).unwrap());
        // the swapped lift reaches the same verdict
        let sw = swap_class(&c).unwrap();
        assert!(matches!(can_deform_fixed_point_free(&sw).unwrap(), DeformVerdict::Yes(_)));
    }

    #[test]
    fn trivial_word_with_zero_nielsen_number() {
        for lattice in [[3, 2, 3, 4], [1, 0, 0, 1], [1, 0, 4, 1]] {
            let c = SplitMapClass::from_data(FreeWord::identity(Alphabet::Uv), 0, 0, lattice).unwrap();
            let DeformVerdict::Yes(cert) = can_deform_fixed_point_free(&c).unwrap() else {
                panic!("expected a certificate for {c}");
            };
            assert!(verify_lift(&cert.hom, &fixed_to_root(&c).unwrap().target().unwrap()).unwrap());
        }
    }
}
