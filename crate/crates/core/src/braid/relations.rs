//! Evaluates every defining relation of the three presentations in the
//! normal-form arithmetic.

use std::collections::HashMap;
use std::fmt::Display;

use super::{alpha, b12, B2Element, GroupElement, P2Element, PuncturedElement};
use crate::error::{Error, Result};

/// Outcome of one relation `lhs = rhs`, with both sides in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub group: &'static str,
    pub relation: String,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
}

/// Named elements, and products of them written as `a b^-1 [c,d^-1] ...`.
struct Env<E> {
    names: HashMap<&'static str, E>,
}

impl<E: GroupElement + Display> Env<E> {
    fn new(gens: impl IntoIterator<Item = (&'static str, E)>) -> Self {
        Env {
            names: gens.into_iter().collect(),
        }
    }

    fn define(&mut self, name: &'static str, expr: &str) -> Result<()> {
        let value = self.eval(expr)?;
        self.names.insert(name, value);
        Ok(())
    }

    fn factor(&self, token: &str) -> Result<E> {
        if let Some(inner) = token.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| Error::internal(format!("bad commutator {token}")))?;
            return E::commutator(&self.factor(a)?, &self.factor(b)?);
        }
        let (name, exp) = match token.split_once('^') {
            Some((n, e)) => (
                n,
                e.parse::<i64>()
                    .map_err(|_| Error::internal(format!("bad exponent in {token}")))?,
            ),
            None => (token, 1),
        };
        self.names
            .get(name)
            .ok_or_else(|| Error::internal(format!("unknown generator {name}")))?
            .pow(exp)
    }

    fn eval(&self, expr: &str) -> Result<E> {
        let mut acc = E::identity();
        for token in expr.split_whitespace() {
            if token != "1" {
                acc = acc.mul(&self.factor(token)?)?;
            }
        }
        Ok(acc)
    }

    fn check(&self, group: &'static str, lhs: &str, rhs: &str) -> Result<RelationCheck> {
        let (l, r) = (self.eval(lhs)?, self.eval(rhs)?);
        Ok(RelationCheck {
            group,
            relation: format!("{lhs} = {rhs}"),
            passed: l == r,
            lhs: l.to_string(),
            rhs: r.to_string(),
        })
    }

    fn check_all(&self, group: &'static str, rels: &[(&str, &str)]) -> Result<Vec<RelationCheck>> {
        rels.iter().map(|(l, r)| self.check(group, l, r)).collect()
    }
}

const SEMIDIRECT: &[(&str, &str)] = &[
    ("x u x^-1", "u"),
    ("x v x^-1", "v [v^-1,u] B^-1 [u,v^-1]"),
    ("x B x^-1", "u [v^-1,u] B [u,v^-1] u^-1"),
    ("y u y^-1", "v [v^-1,u] B u v^-1"),
    ("y v y^-1", "v"),
    ("y B y^-1", "v [v^-1,u] B [u,v^-1] v^-1"),
    ("y B y^-1", "u v u^-1 B u v^-1 u^-1"),
    ("v [v^-1,u] B [u,v^-1] v^-1", "u v u^-1 B u v^-1 u^-1"),
];

const DERIVED: &[(&str, &str)] = &[
    ("x B12 x^-1", "B12"),
    ("y B12 y^-1", "B12"),
    ("y u y^-1", "v B12^-1 u v^-1"),
    ("x v x^-1", "u v u^-1 B12"),
    ("y^-1 u y", "B12 v^-1 u v"),
    ("x^-1 v x", "u^-1 v B12^-1 u"),
    ("x^-1 u x", "u"),
    ("y^-1 v y", "v"),
    ("x y^-1 x^-1 y u y^-1 x y x^-1", "B12^-1 [u,v^-1] u [v^-1,u] B12"),
    ("x y^-1 x^-1 y v y^-1 x y x^-1", "B12^-1 [u,v^-1] v [v^-1,u] B12"),
    ("Bp", "u^-1 x y^-1 v B12^-1 x^-1 u v^-1 y"),
    ("Bp", "[v^-1,u] B12 x y^-1 x^-1 y"),
    ("Bp", "[v^-1,u] B [P,Q]"),
];

const RHO_IDENTITIES: &[(&str, &str)] = &[
    ("r21^-1 r11 r21", "r11 B12^-1 r11 B12 r11^-1"),
    ("r21^-1 r12 r21", "r11 B12^-1 r11^-1 r12 B12^-1 r11 B12 r11^-1"),
    ("r22^-1 r11 r22", "r11 r12 B12 r12^-1"),
    ("r22^-1 r12 r22", "r12 B12^-1 r12 B12 r12^-1"),
    ("r21^-1 B12 r21", "r11 B12 r11^-1"),
    ("r22^-1 B12 r22", "r12 B12 r12^-1"),
];

const RHO: &[(&str, &str)] = &[
    ("r21 r11 r21^-1", "B12 r11 B12^-1"),
    ("r21 r12 r21^-1", "B12 r12 r11^-1 B12 r11 B12^-1"),
    ("r22 r11 r22^-1", "r11 B12^-1"),
    ("r22 r12 r22^-1", "B12 r12 B12^-1"),
    ("r21 B r21^-1", "B"),
    ("r22 B r22^-1", "B"),
    ("r21 B12 r21^-1", "B12 r11^-1 B12 r11 B12^-1"),
    ("r22 B12 r22^-1", "B12 r12^-1 B12 r12 B12^-1"),
    ("Bp r11 Bp^-1", "r11"),
    ("Bp r12 Bp^-1", "r12"),
    ("Bp B12 Bp^-1", "B12^-1 B^-1 B12 B B12"),
    ("Bp B Bp^-1", "B12^-1 B B12"),
    ("[r11,r12^-1]", "B B12"),
    ("[r21,r22^-1]", "B12 Bp"),
];

const PURE: &[(&str, &str)] = &[
    ("x u x^-1", "u"),
    ("y u y^-1", "u"),
    ("x v x^-1", "v"),
    ("y v y^-1", "v"),
    ("x y x^-1", "y"),
    ("u^-1 x y^-1 u v u^-1 x^-1 u v^-1 y", "1"),
];

const FULL: &[(&str, &str)] = &[
    ("x u x^-1", "u"),
    ("y u y^-1", "u"),
    ("x v x^-1", "v"),
    ("y v y^-1", "v"),
    ("x y x^-1", "y"),
    ("s^2", "[u,v^-1]"),
    ("s x s^-1", "x"),
    ("s y s^-1", "y"),
    ("s u s^-1", "[u,v^-1] u^-1 x"),
    ("s v s^-1", "[u,v^-1] v^-1 y"),
];

fn punctured_env() -> Result<Env<PuncturedElement>> {
    let mut env = Env::new(
        ["u", "v", "B", "x", "y"]
            .map(|n| (n, PuncturedElement::generator(n.chars().next().expect("name")).expect("generator"))),
    );
    env.names.insert("B12", b12());
    env.define("r11", "u")?;
    env.define("r12", "v")?;
    env.define("r21", "B12 u^-1 x")?;
    env.define("r22", "B12 v^-1 y")?;
    env.define("Bp", "B12^-1 [r21,r22^-1]")?;
    env.define("P", "B^-1 [u,v^-1] u^-1 x")?;
    env.define("Q", "y^-1 v [v^-1,u] B")?;
    Ok(env)
}

/// Runs every relation; a failure is reported, not raised.
pub fn check_relations() -> Result<Vec<RelationCheck>> {
    let pp = punctured_env()?;
    let mut out = pp.check_all("P2(T^2-{1}) as F3 x| F2", SEMIDIRECT)?;
    out.extend(pp.check_all("P2(T^2-{1}) derived", DERIVED)?);
    out.extend(pp.check_all("P2(T^2-{1}) rho identities", RHO_IDENTITIES)?);
    out.extend(pp.check_all("P2(T^2-{1}) rho presentation", RHO)?);

    let pure = Env::new([
        ("u", P2Element::u()),
        ("v", P2Element::v()),
        ("x", P2Element::x()),
        ("y", P2Element::y()),
    ]);
    out.extend(pure.check_all("P2(T^2)", PURE)?);
    let bp = pp.eval("Bp")?;
    let image = alpha(&bp)?;
    out.push(RelationCheck {
        group: "P2(T^2)",
        relation: "alpha(Bp) = 1".into(),
        passed: image.is_identity(),
        lhs: image.to_string(),
        rhs: P2Element::identity().to_string(),
    });

    let full = Env::new([
        ("u", B2Element::pure(P2Element::u())),
        ("v", B2Element::pure(P2Element::v())),
        ("x", B2Element::pure(P2Element::x())),
        ("y", B2Element::pure(P2Element::y())),
        ("s", B2Element::sigma()),
    ]);
    out.extend(full.check_all("B2(T^2)", FULL)?);
    Ok(out)
}

/// `B′ = B₁₂⁻¹ [ρ₂₁, ρ₂₂⁻¹]` written in the generators `u v B x y`.
pub fn b_prime() -> Result<PuncturedElement> {
    punctured_env()?.eval("Bp")
}
