//! Wire formats shared by the CLI and bindings.
//!
//! Rationals render as reduced `"num/den"` strings with positive
//! denominator, shortened to the plain integer string when the denominator
//! is 1. Integers render as JSON numbers when they fit in 64 bits and as
//! decimal strings otherwise. Forms travel as the coefficient triple
//! `[f2, f1, f0]`, both in JSON and in the comma-separated `--form` flag.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::automorphism::{is_automorphism, RationalMatrix};
use crate::census::{landau_ratio, CensusResult, EssentialReport};
use crate::conic::ConicPoint;
use crate::error::Error;
use crate::form::{big_rat, Form, FormClass, Representation};
use crate::quadric::{verify_line, RationalLine};
use crate::transporter::TransportResult;

pub fn rational_str(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_value(r: &BigRational) -> Value {
    Value::String(rational_str(r))
}

pub fn integer_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

/// JSON number when the rational is an integer that fits, string otherwise.
pub fn rational_number_value(r: &BigRational) -> Value {
    if r.is_integer() {
        integer_value(r.numer())
    } else {
        Value::String(rational_str(r))
    }
}

pub fn parse_bigint(s: &str) -> Result<BigInt, Error> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("expected an integer, got {s:?}")))
}

/// Parse `"a/b"` or a plain integer; the denominator must be nonzero.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_bigint(s)?)),
        Some((num, den)) => {
            let num = parse_bigint(num)?;
            let den = parse_bigint(den)?;
            if den == BigInt::from(0) {
                return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

fn split_fixed<const N: usize>(s: &str, what: &str) -> Result<[String; N], Error> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != N {
        return Err(Error::InvalidInput(format!(
            "expected {N} comma-separated values for {what}, got {s:?}"
        )));
    }
    Ok(std::array::from_fn(|i| parts[i].to_string()))
}

/// Parse the `--form f2,f1,f0` coefficient triple.
pub fn parse_form(s: &str) -> Result<Form, Error> {
    let [f2, f1, f0] = split_fixed::<3>(s, "a form")?;
    Ok(Form::new(parse_bigint(&f2)?, parse_bigint(&f1)?, parse_bigint(&f0)?))
}

/// Parse an `x,y` integer pair.
pub fn parse_int_pair(s: &str) -> Result<(BigInt, BigInt), Error> {
    let [x, y] = split_fixed::<2>(s, "a pair")?;
    Ok((parse_bigint(&x)?, parse_bigint(&y)?))
}

/// Parse an `x1,x2,x3,x4` rational quadruple.
pub fn parse_rational_quad(s: &str) -> Result<[BigRational; 4], Error> {
    let [a, b, c, d] = split_fixed::<4>(s, "a point")?;
    Ok([
        parse_rational(&a)?,
        parse_rational(&b)?,
        parse_rational(&c)?,
        parse_rational(&d)?,
    ])
}

pub fn form_value(f: &Form) -> Value {
    Value::Array(vec![
        integer_value(&f.f2),
        integer_value(&f.f1),
        integer_value(&f.f0),
    ])
}

pub fn class_name(class: FormClass) -> &'static str {
    match class {
        FormClass::PositiveDefinite => "positive-definite",
        FormClass::NegativeDefinite => "negative-definite",
        FormClass::Indefinite => "indefinite",
        FormClass::Reducible => "reducible",
        FormClass::Degenerate => "degenerate",
    }
}

pub fn matrix_value(t: &RationalMatrix) -> Value {
    json!([
        [rational_value(&t.t1), rational_value(&t.t2)],
        [rational_value(&t.t3), rational_value(&t.t4)],
    ])
}

pub fn conic_point_value(pt: &ConicPoint) -> Value {
    json!({ "c": rational_value(&pt.c), "w": rational_value(&pt.w) })
}

pub fn representations_value(reps: &[Representation]) -> Value {
    Value::Array(
        reps.iter()
            .map(|r| Value::Array(vec![integer_value(&r.x), integer_value(&r.y)]))
            .collect(),
    )
}

/// Transport payload with recomputed certificate checks.
pub fn transport_value(
    f: &Form,
    r1: &Representation,
    r2: &Representation,
    t: &TransportResult,
) -> Value {
    let maps = t.matrix.apply_int(&r1.x, &r1.y) == (big_rat(&r2.x), big_rat(&r2.y));
    let preserves = is_automorphism(f, &t.matrix);
    let det_one = t.matrix.det() == BigRational::from_integer(1.into());
    json!({
        "matrix": matrix_value(&t.matrix),
        "conic_point": conic_point_value(&t.conic_point),
        "legacy_mn": [
            rational_number_value(&t.legacy_mn.0),
            rational_number_value(&t.legacy_mn.1),
        ],
        "checks": {
            "maps_r1_to_r2": maps,
            "preserves_form": preserves,
            "det_one": det_one,
        },
    })
}

pub fn census_summary_value(c: &CensusResult) -> Value {
    json!({
        "form": form_value(&c.form),
        "z": c.z,
        "box": c.box_bound,
        "count": c.count(),
        "ratio": landau_ratio(c).ok(),
    })
}

pub fn essential_report_value(r: &EssentialReport) -> Value {
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|fail| {
            json!({
                "h": integer_value(&fail.h),
                "from": [integer_value(&fail.from.0), integer_value(&fail.from.1)],
                "to": [integer_value(&fail.to.0), integer_value(&fail.to.1)],
                "reason": fail.reason,
            })
        })
        .collect();
    json!({
        "checked_values": r.checked_values,
        "pairs_checked": r.pairs_checked,
        "failures": failures,
    })
}

/// Line payload with its recomputed certificate bit.
pub fn line_value(f: &Form, line: &RationalLine) -> Value {
    let base: Vec<Value> = line.base.coords().iter().map(|c| rational_value(c)).collect();
    let direction: Vec<Value> = line.direction.iter().map(rational_value).collect();
    json!({
        "base": base,
        "direction": direction,
        "verified": verify_line(f, line),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn rational_rendering() {
        assert_eq!(rational_str(&BigRational::new(4.into(), 5.into())), "4/5");
        assert_eq!(rational_str(&BigRational::new((-3).into(), 5.into())), "-3/5");
        assert_eq!(rational_str(&BigRational::new(3.into(), (-5).into())), "-3/5");
        assert_eq!(rational_str(&BigRational::one()), "1");
    }

    #[test]
    fn rational_parsing_round_trips() {
        for s in ["4/5", "-3/5", "7", "0", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(rational_str(&r), s);
        }
        assert_eq!(parse_rational("6/4").unwrap(), parse_rational("3/2").unwrap());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn form_parsing() {
        let f = parse_form("1,0,-2").unwrap();
        assert_eq!(f, Form::new(1, 0, -2));
        assert!(parse_form("1,0").is_err());
        assert!(parse_form("1,0,a").is_err());
    }
}
