//! Rational points on the conic `x^2 + ε*δ*y^2 = 1` attached to a form
//! with `|Δ| = 4δ`: ε = +1 (an ellipse) for definite forms, ε = −1 (a
//! hyperbola) for indefinite ones. These points index the special rational
//! automorphisms of the form.
//!
//! Every rational point is reached by the chord through the base point
//! `(1, 0)` with rational slope; writing the slope as a reduced fraction
//! gives the integer parametrization
//!
//! ```text
//! ellipse:   ( (δp² − q²)/(δp² + q²),  2pq/(δp² + q²) )
//! hyperbola: ( (δp² + q²)/(δp² − q²),  2pq/(δp² − q²) )
//! ```
//!
//! evaluated here with cleared denominators through the integer `4δ`. On
//! the ellipse the printed point sits at chord slope `−p/q` (the chord
//! substitution produces `−2pq` where the display has `+2pq`; the two
//! parametrize the same set under `p ↦ −p`). [`slope_of_point`] folds that
//! sign in so it is an exact inverse of [`param_point`]. On the hyperbola
//! the printed point sits at chord slope `+p/q` and no adjustment is
//! needed.
//!
//! The base point itself is not hit by any finite chord slope; it is
//! assigned the extended parameter `(p, q) = (1, 0)`, which the formulas
//! above send to `(1, 0)` without any special case.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::form::{Form, FormClass};

/// Which conic carries the special automorphisms: ε = +1 or ε = −1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConicKind {
    Ellipse,
    Hyperbola,
}

impl ConicKind {
    /// The sign ε in `x^2 + ε*δ*y^2 = 1`.
    pub fn epsilon(self) -> i32 {
        match self {
            ConicKind::Ellipse => 1,
            ConicKind::Hyperbola => -1,
        }
    }

    /// Conic kind matching the class of an irreducible form.
    pub fn for_form(f: &Form) -> Result<ConicKind, Error> {
        match f.classify() {
            FormClass::PositiveDefinite | FormClass::NegativeDefinite => Ok(ConicKind::Ellipse),
            FormClass::Indefinite => Ok(ConicKind::Hyperbola),
            FormClass::Reducible => Err(Error::ReducibleForm),
            FormClass::Degenerate => Err(Error::DegenerateForm),
        }
    }
}

/// Exact rational point `(c, w)` on the conic of the given kind; membership
/// means `4c² + ε(4δ)w² = 4` with all denominators cleared.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConicPoint {
    pub c: BigRational,
    pub w: BigRational,
    pub kind: ConicKind,
}

impl ConicPoint {
    pub fn new(c: BigRational, w: BigRational, kind: ConicKind) -> Self {
        ConicPoint { c, w, kind }
    }

    /// The base point `(1, 0)`, on both conics for every δ.
    pub fn base(kind: ConicKind) -> Self {
        ConicPoint::new(BigRational::one(), BigRational::zero(), kind)
    }

    pub fn is_base(&self) -> bool {
        self.c.is_one() && self.w.is_zero()
    }
}

/// Reduced chord-slope parameter `p/q` with `q ≥ 0`, not both zero;
/// `(1, 0)` is the extended parameter standing in for the base point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlopeParam {
    p: BigInt,
    q: BigInt,
}

impl SlopeParam {
    /// Normalize to the canonical representative: divide out the gcd, make
    /// `q ≥ 0`, and collapse `q = 0` to the extended parameter `(1, 0)`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, Error> {
        let mut p = p.into();
        let mut q = q.into();
        if p.is_zero() && q.is_zero() {
            return Err(Error::InvalidInput("slope parameter (0, 0) is not allowed".into()));
        }
        let g = p.gcd(&q);
        p /= &g;
        q /= &g;
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        if q.is_zero() {
            p = BigInt::one();
        }
        Ok(SlopeParam { p, q })
    }

    /// The extended parameter `(1, 0)` for the base point.
    pub fn extended() -> Self {
        SlopeParam { p: BigInt::one(), q: BigInt::zero() }
    }

    pub fn is_extended(&self) -> bool {
        self.q.is_zero()
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }
}

/// Rational point of the conic at slope parameter `s`, computed with
/// cleared denominators from the integer `4δ`.
pub fn param_point(four_delta: &BigInt, kind: ConicKind, s: &SlopeParam) -> Result<ConicPoint, Error> {
    if !four_delta.is_positive() {
        return Err(Error::InvalidInput("4δ must be a positive integer".into()));
    }
    let dp2 = four_delta * s.p() * s.p();
    let q2x4 = BigInt::from(4) * s.q() * s.q();
    let (c_num, den) = match kind {
        ConicKind::Ellipse => (&dp2 - &q2x4, &dp2 + &q2x4),
        ConicKind::Hyperbola => (&dp2 + &q2x4, &dp2 - &q2x4),
    };
    if den.is_zero() {
        // δp² = q² requires δ to be a perfect square, which the invariant
        // |Δ| of an irreducible form never is.
        return Err(Error::DegenerateParameter);
    }
    let w_num = BigInt::from(8) * s.p() * s.q();
    Ok(ConicPoint::new(
        BigRational::new(c_num, den.clone()),
        BigRational::new(w_num, den),
        kind,
    ))
}

/// Inverse of [`param_point`]: the reduced slope parameter of the chord
/// joining `(1, 0)` to `pt`, normalized so the round trip is exact.
pub fn slope_of_point(pt: &ConicPoint) -> Result<SlopeParam, Error> {
    if pt.c.is_one() {
        return Err(Error::BasePoint);
    }
    let m = &pt.w / (&pt.c - BigRational::one());
    let (a, b) = (m.numer().clone(), m.denom().clone());
    match pt.kind {
        ConicKind::Ellipse => SlopeParam::new(-a, b),
        ConicKind::Hyperbola => SlopeParam::new(a, b),
    }
}

/// Exact membership test `4c² + ε(4δ)w² = 4`.
pub fn on_conic(pt: &ConicPoint, four_delta: &BigInt) -> bool {
    let four = BigRational::from_integer(4.into());
    let c_term = &four * &pt.c * &pt.c;
    let w_term = BigRational::from_integer(four_delta.clone()) * &pt.w * &pt.w;
    match pt.kind {
        ConicKind::Ellipse => c_term + w_term == four,
        ConicKind::Hyperbola => c_term - w_term == four,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn slope(p: i64, q: i64) -> SlopeParam {
        SlopeParam::new(p, q).unwrap()
    }

    #[test]
    fn param_point_examples() {
        let pt = param_point(&4.into(), ConicKind::Ellipse, &slope(3, 1)).unwrap();
        assert_eq!(pt.c, ratio(4, 5));
        assert_eq!(pt.w, ratio(3, 5));

        let pt = param_point(&8.into(), ConicKind::Hyperbola, &slope(1, 1)).unwrap();
        assert_eq!(pt.c, ratio(3, 1));
        assert_eq!(pt.w, ratio(2, 1));

        for fd in [3i64, 4, 5, 20] {
            let pt = param_point(&fd.into(), ConicKind::Ellipse, &slope(0, 1)).unwrap();
            assert_eq!((pt.c, pt.w), (ratio(-1, 1), ratio(0, 1)));
        }
    }

    #[test]
    fn extended_parameter_gives_base_point() {
        for kind in [ConicKind::Ellipse, ConicKind::Hyperbola] {
            let pt = param_point(&5.into(), kind, &SlopeParam::extended()).unwrap();
            assert!(pt.is_base());
        }
        // (-1, 0) normalizes to the canonical extended parameter
        assert_eq!(slope(-1, 0), SlopeParam::extended());
        assert_eq!(slope(7, 0), SlopeParam::extended());
    }

    #[test]
    fn slope_of_point_examples() {
        let pt = ConicPoint::new(ratio(4, 5), ratio(3, 5), ConicKind::Ellipse);
        assert_eq!(slope_of_point(&pt).unwrap(), slope(3, 1));

        let pt = ConicPoint::new(ratio(-1, 1), ratio(0, 1), ConicKind::Ellipse);
        assert_eq!(slope_of_point(&pt).unwrap(), slope(0, 1));

        let pt = ConicPoint::new(ratio(3, 1), ratio(2, 1), ConicKind::Hyperbola);
        assert_eq!(slope_of_point(&pt).unwrap(), slope(1, 1));

        assert_eq!(
            slope_of_point(&ConicPoint::base(ConicKind::Ellipse)),
            Err(Error::BasePoint)
        );
    }

    #[test]
    fn on_conic_examples() {
        let pt = ConicPoint::new(ratio(4, 5), ratio(3, 5), ConicKind::Ellipse);
        assert!(on_conic(&pt, &4.into()));
        let pt = ConicPoint::new(ratio(3, 1), ratio(2, 1), ConicKind::Hyperbola);
        assert!(on_conic(&pt, &8.into()));
        let pt = ConicPoint::new(ratio(1, 1), ratio(1, 1), ConicKind::Ellipse);
        assert!(!on_conic(&pt, &4.into()));
    }

    #[test]
    fn hyperbola_degenerate_parameter() {
        // 4δ = 4 is the only listed invariant with square δ
        assert_eq!(
            param_point(&4.into(), ConicKind::Hyperbola, &slope(1, 1)),
            Err(Error::DegenerateParameter)
        );
    }

    #[test]
    fn round_trip_on_small_grid() {
        for fd in [3i64, 4, 5, 7, 8, 11, 12, 20] {
            let fd = BigInt::from(fd);
            for p in -12i64..=12 {
                for q in 0i64..=12 {
                    if (p, q) == (0, 0) || BigInt::from(p).gcd(&q.into()) != BigInt::one() {
                        continue;
                    }
                    let s = slope(p, q);
                    for kind in [ConicKind::Ellipse, ConicKind::Hyperbola] {
                        match param_point(&fd, kind, &s) {
                            Err(Error::DegenerateParameter) => {
                                assert_eq!(&fd * p * p, BigInt::from(4) * q * q);
                            }
                            Err(e) => panic!("unexpected error {e}"),
                            Ok(pt) => {
                                assert!(on_conic(&pt, &fd), "4δ={fd} {kind:?} ({p},{q})");
                                if s.is_extended() {
                                    assert!(pt.is_base());
                                } else {
                                    assert_eq!(slope_of_point(&pt).unwrap(), s);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
