//! Normal-form arithmetic in the braid groups of the torus.
//!
//! * [`P2Element`]: `P2(T²) ≅ F2(u,v) × Z²`, pairs `(w ; x,y)`.
//! * [`B2Element`]: `B2(T²)`, normal forms `g·σ^ε` with `g` pure.
//! * [`PuncturedElement`]: `P2(T²∖{1}) ≅ F3(u,v,B) ⋊ F2(x,y)`, pairs `[k | t]`.
//!
//! Equality of elements is equality of normal forms.

mod b2;
mod p2;
mod punctured;
mod relations;

pub use b2::{b2_mul, B2Element};
pub use p2::{p2_mul, sigma_conj, P2Element};
pub use punctured::{alpha, b12, pp_act, pp_mul, PuncturedElement};
pub use relations::{b_prime, check_relations, RelationCheck};

use crate::error::Result;

/// Group operations shared by the three normal forms.
pub trait GroupElement: Sized + Clone + PartialEq {
    fn identity() -> Self;

    fn mul(&self, other: &Self) -> Result<Self>;

    fn inverse(&self) -> Result<Self>;

    fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `self^k` by repeated squaring.
    fn pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = Self::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `g · self · g⁻¹`
    fn conjugate_by(&self, g: &Self) -> Result<Self> {
        g.mul(self)?.mul(&g.inverse()?)
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`
    fn commutator(a: &Self, b: &Self) -> Result<Self> {
        a.mul(b)?.mul(&a.inverse()?)?.mul(&b.inverse()?)
    }

    fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.mul(other)? == other.mul(self)?)
    }
}
