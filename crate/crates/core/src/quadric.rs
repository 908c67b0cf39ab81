//! Rational lines on the quadric surface `X_f : f(x1, x2) = f(x3, x4)`.
//!
//! For an automorphism `T` of `f`, the graph plane `{(v, T·v)}` lies inside
//! `X_f`. Through a nonzero rational point `P = (p, p')` the transporter
//! carrying `p` to `p'` exists because `f(p) = f(p') ≠ 0` (irreducible
//! forms are anisotropic), so the line through `P` in direction `(d, T·d)`
//! stays on the quadric for any `d`; the canonical choice `d = (1, 0)`
//! makes the output reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::form::{Form, Representation};
use crate::transporter::transport;

/// Exact rational point with `f(x1, x2) = f(x3, x4)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricPoint {
    pub x1: BigRational,
    pub x2: BigRational,
    pub x3: BigRational,
    pub x4: BigRational,
}

impl QuadricPoint {
    pub fn new(x1: BigRational, x2: BigRational, x3: BigRational, x4: BigRational) -> Self {
        QuadricPoint { x1, x2, x3, x4 }
    }

    pub fn from_integers(
        x1: impl Into<BigInt>,
        x2: impl Into<BigInt>,
        x3: impl Into<BigInt>,
        x4: impl Into<BigInt>,
    ) -> Self {
        QuadricPoint::new(
            BigRational::from_integer(x1.into()),
            BigRational::from_integer(x2.into()),
            BigRational::from_integer(x3.into()),
            BigRational::from_integer(x4.into()),
        )
    }

    pub fn coords(&self) -> [&BigRational; 4] {
        [&self.x1, &self.x2, &self.x3, &self.x4]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }
}

/// A line `base + s·direction` whose difference polynomial
/// `f(first pair) − f(second pair)` vanishes identically in `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalLine {
    pub base: QuadricPoint,
    pub direction: [BigRational; 4],
}

/// The rational line through `P` contained in `X_f`, with direction
/// `(d, T·d)` for `d = (1, 0)` and `T` the transporter between the two
/// halves of `P` (cleared to integers; `f` is homogeneous, so membership
/// and the transporter are scale-invariant).
pub fn line_through(f: &Form, p: &QuadricPoint) -> Result<RationalLine, Error> {
    f.require_irreducible()?;
    if p.is_zero() {
        return Err(Error::ZeroPoint);
    }
    if f.eval_rational(&p.x1, &p.x2) != f.eval_rational(&p.x3, &p.x4) {
        return Err(Error::NotOnQuadric);
    }
    let scale = p
        .coords()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let cleared: Vec<BigInt> = p
        .coords()
        .iter()
        .map(|c| c.numer() * (&scale / c.denom()))
        .collect();
    let r1 = Representation::new(f, cleared[0].clone(), cleared[1].clone());
    let r2 = Representation::new(f, cleared[2].clone(), cleared[3].clone());
    let t = transport(f, &r1, &r2)?;
    let direction = [
        BigRational::one(),
        BigRational::zero(),
        t.matrix.t1.clone(),
        t.matrix.t3.clone(),
    ];
    Ok(RationalLine { base: p.clone(), direction })
}

/// Certificate check: expand `f(base₁₂ + s·dir₁₂) − f(base₃₄ + s·dir₃₄)`
/// and test that the `s⁰`, `s¹`, and `s²` coefficients all vanish exactly.
pub fn verify_line(f: &Form, line: &RationalLine) -> bool {
    let b = &line.base;
    let d = &line.direction;
    let constant = f.eval_rational(&b.x1, &b.x2) - f.eval_rational(&b.x3, &b.x4);
    let linear = f.polar_rational((&b.x1, &b.x2), (&d[0], &d[1]))
        - f.polar_rational((&b.x3, &b.x4), (&d[2], &d[3]));
    let quadratic = f.eval_rational(&d[0], &d[1]) - f.eval_rational(&d[2], &d[3]);
    constant.is_zero() && linear.is_zero() && quadratic.is_zero()
}
