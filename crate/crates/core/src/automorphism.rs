//! Exact 2×2 rational matrices acting on column pairs, and the special
//! (determinant 1) automorphisms of a form built from conic points.
//!
//! For a definite form the matrix at conic point `(c, w)` is
//!
//! ```text
//! [ c + f1*w/2    f0*w      ]
//! [ -f2*w         c - f1*w/2 ]
//! ```
//!
//! and for an indefinite form the signs of the off-diagonal `w` terms flip:
//!
//! ```text
//! [ c - f1*w/2    -f0*w     ]
//! [ f2*w          c + f1*w/2 ]
//! ```
//!
//! Both have determinant `c² + ε*δ*w² = 1` exactly, and conjugating the
//! coordinate action by either matrix fixes the form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::conic::{on_conic, ConicKind, ConicPoint};
use crate::error::Error;
use crate::form::{big_rat, Form};

/// Row-major 2×2 matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    pub t1: BigRational,
    pub t2: BigRational,
    pub t3: BigRational,
    pub t4: BigRational,
}

impl RationalMatrix {
    pub fn new(t1: BigRational, t2: BigRational, t3: BigRational, t4: BigRational) -> Self {
        RationalMatrix { t1, t2, t3, t4 }
    }

    pub fn identity() -> Self {
        RationalMatrix::new(
            BigRational::one(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::one(),
        )
    }

    pub fn is_identity(&self) -> bool {
        *self == RationalMatrix::identity()
    }

    pub fn det(&self) -> BigRational {
        &self.t1 * &self.t4 - &self.t2 * &self.t3
    }

    /// Matrix product `self · rhs` (apply `rhs` first, then `self`).
    pub fn compose(&self, rhs: &RationalMatrix) -> RationalMatrix {
        RationalMatrix::new(
            &self.t1 * &rhs.t1 + &self.t2 * &rhs.t3,
            &self.t1 * &rhs.t2 + &self.t2 * &rhs.t4,
            &self.t3 * &rhs.t1 + &self.t4 * &rhs.t3,
            &self.t3 * &rhs.t2 + &self.t4 * &rhs.t4,
        )
    }

    pub fn invert(&self) -> Result<RationalMatrix, Error> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        Ok(RationalMatrix::new(
            &self.t4 / &det,
            -(&self.t2 / &det),
            -(&self.t3 / &det),
            &self.t1 / &det,
        ))
    }

    /// Column action `(t1*x + t2*y, t3*x + t4*y)`.
    pub fn apply(&self, x: &BigRational, y: &BigRational) -> (BigRational, BigRational) {
        (&self.t1 * x + &self.t2 * y, &self.t3 * x + &self.t4 * y)
    }

    pub fn apply_int(&self, x: &BigInt, y: &BigInt) -> (BigRational, BigRational) {
        self.apply(&big_rat(x), &big_rat(y))
    }
}

/// Special automorphism of `f` at a point of its conic. The conic kind must
/// match the form class and the point must lie on the conic for `4δ = |Δ|`.
pub fn from_conic_point(f: &Form, pt: &ConicPoint) -> Result<RationalMatrix, Error> {
    let kind = ConicKind::for_form(f)?;
    if pt.kind != kind {
        return Err(Error::ConicMismatch);
    }
    if !on_conic(pt, &f.four_delta()) {
        return Err(Error::NotOnConic);
    }
    let half_f1w = BigRational::new(&f.f1 * pt.w.numer(), BigInt::from(2) * pt.w.denom());
    let f0w = big_rat(&f.f0) * &pt.w;
    let f2w = big_rat(&f.f2) * &pt.w;
    Ok(match kind {
        ConicKind::Ellipse => {
            RationalMatrix::new(&pt.c + &half_f1w, f0w, -f2w, &pt.c - &half_f1w)
        }
        ConicKind::Hyperbola => {
            RationalMatrix::new(&pt.c - &half_f1w, -f0w, f2w, &pt.c + &half_f1w)
        }
    })
}

/// Read the conic point back off a special automorphism produced by
/// [`from_conic_point`]; fails with [`Error::NotOnConic`] for matrices not
/// of that family (reflections included).
pub fn to_conic_point(f: &Form, t: &RationalMatrix) -> Result<ConicPoint, Error> {
    let kind = ConicKind::for_form(f)?;
    let c = (&t.t1 + &t.t4) / big_rat(&BigInt::from(2));
    // f0 ≠ 0 for irreducible forms, so the second column determines w
    let w = match kind {
        ConicKind::Ellipse => &t.t2 / big_rat(&f.f0),
        ConicKind::Hyperbola => -(&t.t2 / big_rat(&f.f0)),
    };
    let pt = ConicPoint::new(c, w, kind);
    if from_conic_point(f, &pt)? != *t {
        return Err(Error::NotOnConic);
    }
    Ok(pt)
}

/// Expand `f(t1*x + t2*y, t3*x + t4*y)` symbolically and compare the three
/// coefficients against `f` over exact rationals.
pub fn is_automorphism(f: &Form, t: &RationalMatrix) -> bool {
    let (f2, f1, f0) = (big_rat(&f.f2), big_rat(&f.f1), big_rat(&f.f0));
    let two = big_rat(&BigInt::from(2));
    let coeff_x2 = &f2 * &t.t1 * &t.t1 + &f1 * &t.t1 * &t.t3 + &f0 * &t.t3 * &t.t3;
    let coeff_xy = &two * &f2 * &t.t1 * &t.t2
        + &f1 * (&t.t1 * &t.t4 + &t.t2 * &t.t3)
        + &two * &f0 * &t.t3 * &t.t4;
    let coeff_y2 = &f2 * &t.t2 * &t.t2 + &f1 * &t.t2 * &t.t4 + &f0 * &t.t4 * &t.t4;
    coeff_x2 == f2 && coeff_xy == f1 && coeff_y2 == f0
}
