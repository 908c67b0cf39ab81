//! Integral binary quadratic forms `f2*x^2 + f1*x*y + f0*y^2`, their
//! classification by discriminant, and integer representations.
//!
//! The discriminant is `Δ = f1^2 - 4*f2*f0`; the scaled invariant `4δ = |Δ|`
//! is kept as an integer so every conic and matrix formula can be evaluated
//! with cleared denominators. A form is irreducible exactly when Δ is
//! nonzero and not a perfect square; irreducible forms are anisotropic, so
//! `f(x, y) = 0` only at the origin.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub(crate) fn big_rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// Exact test for a perfect square (floor square root, then re-multiply).
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// An integral binary quadratic form, stored as the coefficient triple
/// `(f2, f1, f0)` of `f2*x^2 + f1*x*y + f0*y^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Form {
    pub f2: BigInt,
    pub f1: BigInt,
    pub f0: BigInt,
}

/// Sign classification of a form by its discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormClass {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    Reducible,
    Degenerate,
}

impl FormClass {
    pub fn is_definite(self) -> bool {
        matches!(self, FormClass::PositiveDefinite | FormClass::NegativeDefinite)
    }
}

impl Form {
    pub fn new(f2: impl Into<BigInt>, f1: impl Into<BigInt>, f0: impl Into<BigInt>) -> Self {
        Form { f2: f2.into(), f1: f1.into(), f0: f0.into() }
    }

    /// `f(x, y)` evaluated exactly.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        (&self.f2 * x + &self.f1 * y) * x + &self.f0 * y * y
    }

    /// `f(x, y)` over exact rationals.
    pub fn eval_rational(&self, x: &BigRational, y: &BigRational) -> BigRational {
        (big_rat(&self.f2) * x + big_rat(&self.f1) * y) * x + big_rat(&self.f0) * y * y
    }

    /// Discriminant `Δ = f1^2 - 4*f2*f0`.
    pub fn discriminant(&self) -> BigInt {
        &self.f1 * &self.f1 - BigInt::from(4) * &self.f2 * &self.f0
    }

    /// The scaled invariant `4δ = |Δ|`, always kept as an integer.
    pub fn four_delta(&self) -> BigInt {
        self.discriminant().abs()
    }

    pub fn classify(&self) -> FormClass {
        let disc = self.discriminant();
        if disc.is_zero() {
            FormClass::Degenerate
        } else if disc.is_negative() {
            if self.f2.is_positive() {
                FormClass::PositiveDefinite
            } else {
                FormClass::NegativeDefinite
            }
        } else if is_perfect_square(&disc) {
            FormClass::Reducible
        } else {
            FormClass::Indefinite
        }
    }

    pub fn is_irreducible(&self) -> bool {
        !matches!(self.classify(), FormClass::Reducible | FormClass::Degenerate)
    }

    /// `gcd(f2, f1, f0) = 1`. Reported for diagnostics; no construction in
    /// this crate requires it.
    pub fn is_primitive(&self) -> bool {
        self.f2.gcd(&self.f1).gcd(&self.f0).is_one()
    }

    pub fn require_irreducible(&self) -> Result<(), Error> {
        match self.classify() {
            FormClass::Degenerate => Err(Error::DegenerateForm),
            FormClass::Reducible => Err(Error::ReducibleForm),
            _ => Ok(()),
        }
    }

    /// Doubled polarized bilinear form
    /// `S = 2*f2*u*x + f1*(u*y + v*x) + 2*f0*v*y` for `r1 = (x, y)`,
    /// `r2 = (u, v)`; symmetric in its two arguments, and `S(r, r) = 2h`.
    pub fn polar_sum(&self, r1: &Representation, r2: &Representation) -> BigInt {
        let (x, y) = (&r1.x, &r1.y);
        let (u, v) = (&r2.x, &r2.y);
        BigInt::from(2) * (&self.f2 * u * x + &self.f0 * v * y) + &self.f1 * (u * y + v * x)
    }

    /// The same bilinear form over rationals, for pairs of coordinate pairs.
    pub fn polar_rational(
        &self,
        a: (&BigRational, &BigRational),
        b: (&BigRational, &BigRational),
    ) -> BigRational {
        let two = big_rat(&BigInt::from(2));
        &two * big_rat(&self.f2) * a.0 * b.0
            + big_rat(&self.f1) * (a.0 * b.1 + a.1 * b.0)
            + &two * big_rat(&self.f0) * a.1 * b.1
    }

    /// Polynomial identity `S^2 - Δ*(u*y - v*x)^2 = 4*f(x,y)*f(u,v)`,
    /// checked exactly. Holds for every integer quadruple, whatever the
    /// values of the two pairs; it is the cleared-denominator statement
    /// that the transport point lands on the conic.
    pub fn check_composition_identity(&self, r1: &Representation, r2: &Representation) -> bool {
        let s = self.polar_sum(r1, r2);
        let cross = &r2.x * &r1.y - &r2.y * &r1.x;
        let lhs = &s * &s - self.discriminant() * &cross * &cross;
        let rhs = BigInt::from(4) * self.eval(&r1.x, &r1.y) * self.eval(&r2.x, &r2.y);
        lhs == rhs
    }
}

/// An integer point together with its value under the associated form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    pub x: BigInt,
    pub y: BigInt,
    pub h: BigInt,
}

impl Representation {
    /// Build a representation with `h = f(x, y)` computed from the form.
    pub fn new(f: &Form, x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        let x = x.into();
        let y = y.into();
        let h = f.eval(&x, &y);
        Representation { x, y, h }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn coords(&self) -> (BigInt, BigInt) {
        (self.x.clone(), self.y.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rep(f: &Form, x: i64, y: i64) -> Representation {
        Representation::new(f, x, y)
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Form::new(1, 0, 1).eval(&3.into(), &4.into()), 25.into());
        assert_eq!(Form::new(1, 0, 1).eval(&0.into(), &0.into()), 0.into());
        assert_eq!(Form::new(1, 1, -1).eval(&2.into(), &1.into()), 5.into());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(Form::new(1, 0, 1).discriminant(), (-4).into());
        assert_eq!(Form::new(1, 1, -1).discriminant(), 5.into());
        assert_eq!(Form::new(2, 2, 3).discriminant(), (-20).into());
        assert_eq!(Form::new(1, 1, -1).four_delta(), 5.into());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(Form::new(1, 0, 1).classify(), FormClass::PositiveDefinite);
        assert_eq!(Form::new(-1, 0, -1).classify(), FormClass::NegativeDefinite);
        assert_eq!(Form::new(1, 0, -2).classify(), FormClass::Indefinite);
        assert_eq!(Form::new(1, 0, -1).classify(), FormClass::Reducible);
        assert_eq!(Form::new(1, 2, 1).classify(), FormClass::Degenerate);
    }

    #[test]
    fn primitivity() {
        assert!(Form::new(1, 0, 1).is_primitive());
        assert!(!Form::new(2, 0, 2).is_primitive());
        assert!(Form::new(2, 0, 2).is_irreducible());
    }

    #[test]
    fn polar_sum_examples() {
        let f = Form::new(1, 0, 1);
        assert_eq!(f.polar_sum(&rep(&f, 1, 2), &rep(&f, 2, 1)), 8.into());
        let g = Form::new(1, 0, -2);
        assert_eq!(g.polar_sum(&rep(&g, 1, 0), &rep(&g, 3, 2)), 6.into());
        assert_eq!(g.polar_sum(&rep(&g, 5, -7), &rep(&g, 0, 0)), 0.into());
    }

    #[test]
    fn composition_identity_examples() {
        let f = Form::new(1, 0, 1);
        assert!(f.check_composition_identity(&rep(&f, 1, 2), &rep(&f, 2, 1)));
        let g = Form::new(1, 0, -2);
        assert!(g.check_composition_identity(&rep(&g, 1, 0), &rep(&g, 3, 2)));
        assert!(g.check_composition_identity(&rep(&g, 9, -4), &rep(&g, 0, 0)));
    }

    #[test]
    fn irreducible_forms_are_anisotropic() {
        for f in [Form::new(1, 0, 1), Form::new(1, 1, -1), Form::new(2, 1, 3), Form::new(2, 0, 2)] {
            for x in -50i64..=50 {
                for y in -50i64..=50 {
                    if f.eval(&x.into(), &y.into()).is_zero() {
                        assert_eq!((x, y), (0, 0), "{f:?} vanishes at ({x}, {y})");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn composition_identity_is_universal(
            f2 in -1_000_000_000i64..=1_000_000_000,
            f1 in -1_000_000_000i64..=1_000_000_000,
            f0 in -1_000_000_000i64..=1_000_000_000,
            x in -1_000_000_000i64..=1_000_000_000,
            y in -1_000_000_000i64..=1_000_000_000,
            u in -1_000_000_000i64..=1_000_000_000,
            v in -1_000_000_000i64..=1_000_000_000,
        ) {
            let f = Form::new(f2, f1, f0);
            prop_assert!(f.check_composition_identity(&rep(&f, x, y), &rep(&f, u, v)));
        }

        #[test]
        fn classify_is_total_and_consistent(
            f2 in -10_000i64..=10_000,
            f1 in -10_000i64..=10_000,
            f0 in -10_000i64..=10_000,
        ) {
            let f = Form::new(f2, f1, f0);
            let d = f.discriminant();
            match f.classify() {
                FormClass::PositiveDefinite => prop_assert!(d.is_negative() && f.f2.is_positive()),
                FormClass::NegativeDefinite => prop_assert!(d.is_negative() && f.f2.is_negative()),
                FormClass::Indefinite => prop_assert!(d.is_positive() && !is_perfect_square(&d)),
                FormClass::Reducible => prop_assert!(!d.is_zero() && is_perfect_square(&d)),
                FormClass::Degenerate => prop_assert!(d.is_zero()),
            }
        }
    }
}
