//! Representation enumeration and the census of representable values
//! `R_f(Z) = { h : f(x, y) = h for some integers x, y, |h| ≤ Z }`.
//!
//! Definite forms have finitely many representations per value; they are
//! enumerated exactly by ranging `y` over `|y| ≤ isqrt(4|f2 h| / |Δ|)` and
//! solving the remaining quadratic in `x`. Indefinite orbits are infinite,
//! so indefinite enumeration and censuses are truncated to a coordinate box
//! `|x|, |y| ≤ B` and documented as a lower bound on the true census.
//!
//! Census sweeps run over `i128` whenever coefficients and bounds make
//! overflow impossible, partitioned across threads by contiguous x-ranges;
//! the merged result is additive, so it is identical for every worker
//! count. Forms too large for the fast path fall back to a sequential
//! arbitrary-precision sweep.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::{self, Write};

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::automorphism::is_automorphism;
use crate::error::Error;
use crate::form::{big_rat, Form, FormClass, Representation};
use crate::transporter::transport;

/// Largest coordinate box accepted by the `i128` fast path.
const FAST_BOX: i64 = 1 << 30;

/// The set of representable values `|h| ≤ z` with lattice-point
/// multiplicities. For indefinite forms the sweep is truncated to
/// `box_bound` and the result is a lower bound on the true census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub form: Form,
    pub z: u64,
    pub box_bound: Option<u64>,
    pub include_zero: bool,
    pub values: BTreeSet<i64>,
    pub multiplicities: BTreeMap<i64, u64>,
}

impl CensusResult {
    pub fn count(&self) -> u64 {
        self.values.len() as u64
    }
}

/// One failed transport check; the list is expected to stay empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialFailure {
    pub h: BigInt,
    pub from: (BigInt, BigInt),
    pub to: (BigInt, BigInt),
    pub reason: String,
}

/// Outcome of checking that every ordered pair of equal-value
/// representations is connected by a verified transporter.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EssentialReport {
    pub checked_values: u64,
    pub pairs_checked: u64,
    pub failures: Vec<EssentialFailure>,
}

/// All integer representations of `h` by a definite form, sorted
/// lexicographically. `h` must share the sign of `f2` (or be zero).
pub fn enumerate_reps(f: &Form, h: &BigInt) -> Result<Vec<Representation>, Error> {
    if !f.classify().is_definite() {
        return Err(Error::WrongClass { expected: "a definite form" });
    }
    if !h.is_zero() && h.is_positive() != f.f2.is_positive() {
        return Err(Error::SignMismatch);
    }
    let four_delta = f.four_delta();
    let y_bound = (BigInt::from(4) * (&f.f2 * h).abs() / &four_delta).sqrt();
    let delta = f.discriminant();
    let four_f2_h = BigInt::from(4) * &f.f2 * h;
    let two_f2 = BigInt::from(2) * &f.f2;

    let mut out = Vec::new();
    let mut y = -y_bound.clone();
    while y <= y_bound {
        // solve f2 x² + f1 x y + (f0 y² − h) = 0 exactly
        let d = &delta * &y * &y + &four_f2_h;
        if !d.is_negative() {
            let s = d.sqrt();
            if &s * &s == d {
                let base = -(&f.f1 * &y);
                for root in [&base + &s, &base - &s] {
                    let (x, rem) = root.div_rem(&two_f2);
                    if rem.is_zero() {
                        out.push(Representation::new(f, x, y.clone()));
                    }
                    if s.is_zero() {
                        break;
                    }
                }
            }
        }
        y += 1;
    }
    out.sort_by(|a, b| a.x.cmp(&b.x).then_with(|| a.y.cmp(&b.y)));
    Ok(out)
}

enum BoxFilter<'a> {
    AbsAtMost(&'a BigInt),
    Equals(&'a BigInt),
}

/// All representations with `|x|, |y| ≤ box_bound` passing the filter; a
/// truncation of the (possibly infinite) solution set, in lexicographic
/// order.
fn collect_box_reps(f: &Form, box_bound: u64, filter: BoxFilter) -> Vec<Representation> {
    let mut out = Vec::new();
    if let Some((b, (c2, c1, c0))) = fast_box_params(f, box_bound) {
        let filter_i128 = match &filter {
            BoxFilter::AbsAtMost(z) => z.to_i128().map(|z| (z, false)),
            BoxFilter::Equals(h) => h.to_i128().map(|h| (h, true)),
        };
        let Some((bound, exact)) = filter_i128 else {
            // the filter value exceeds anything the box can produce
            return out;
        };
        for x in -b..=b {
            let xi = x as i128;
            let fx = c2 * xi * xi;
            let c1x = c1 * xi;
            for y in -b..=b {
                let yi = y as i128;
                let v = fx + c1x * yi + c0 * yi * yi;
                let keep = if exact { v == bound } else { v.abs() <= bound };
                if keep {
                    out.push(Representation::new(f, x, y));
                }
            }
        }
    } else {
        let b = BigInt::from(box_bound);
        let mut x = -b.clone();
        while x <= b {
            let mut y = -b.clone();
            while y <= b {
                let v = f.eval(&x, &y);
                let keep = match &filter {
                    BoxFilter::AbsAtMost(z) => &v.abs() <= z,
                    BoxFilter::Equals(h) => &v == *h,
                };
                if keep {
                    out.push(Representation::new(f, x.clone(), y.clone()));
                }
                y += 1;
            }
            x += 1;
        }
    }
    out.sort_by(|a, b| a.x.cmp(&b.x).then_with(|| a.y.cmp(&b.y)));
    out
}

/// All representations of `h` with `|x|, |y| ≤ box_bound`, sorted
/// lexicographically. Works for every form with any discriminant; for
/// indefinite forms this is a truncation, not the full solution set.
pub fn enumerate_reps_box(f: &Form, h: &BigInt, box_bound: u64) -> Vec<Representation> {
    collect_box_reps(f, box_bound, BoxFilter::Equals(h))
}

fn small_coeffs(f: &Form) -> Option<(i128, i128, i128)> {
    Some((
        f.f2.to_i64()? as i128,
        f.f1.to_i64()? as i128,
        f.f0.to_i64()? as i128,
    ))
}

fn fast_box_params(f: &Form, box_bound: u64) -> Option<(i64, (i128, i128, i128))> {
    if box_bound > FAST_BOX as u64 {
        return None;
    }
    Some((box_bound as i64, small_coeffs(f)?))
}

fn chunk_ranges(lo: i64, hi: i64, pieces: usize) -> Vec<(i64, i64)> {
    let len = (hi - lo + 1).max(0) as u64;
    let pieces = pieces.max(1) as u64;
    let step = len.div_ceil(pieces).max(1);
    let mut ranges = Vec::new();
    let mut start = lo;
    while start <= hi {
        let end = (start + step as i64 - 1).min(hi);
        ranges.push((start, end));
        start = end + 1;
    }
    ranges
}

fn merge_counts(parts: Vec<HashMap<i64, u64>>) -> BTreeMap<i64, u64> {
    let mut merged = BTreeMap::new();
    for part in parts {
        for (h, c) in part {
            *merged.entry(h).or_insert(0) += c;
        }
    }
    merged
}

/// Sweep the full region `|f| ≤ z` of a definite form, counting lattice
/// points per value.
fn definite_counts(f: &Form, z: u64, include_zero: bool) -> BTreeMap<i64, u64> {
    let neg = f.f2.is_negative();
    // positive definite companion: same lattice points, values negated
    let (g2, g1, g0) = if neg {
        (-&f.f2, -&f.f1, -&f.f0)
    } else {
        (f.f2.clone(), f.f1.clone(), f.f0.clone())
    };
    let four_delta = f.four_delta();
    let z_big = BigInt::from(z);
    let x_bound = (BigInt::from(4) * &g0 * &z_big / &four_delta).sqrt();
    let y_bound = (BigInt::from(4) * &g2 * &z_big / &four_delta).sqrt();

    let fast = (|| {
        let xb = x_bound.to_i64().filter(|&v| v <= FAST_BOX)?;
        let yb = y_bound.to_i64().filter(|&v| v <= FAST_BOX)?;
        let c2 = g2.to_i64()? as i128;
        let c1 = g1.to_i64()? as i128;
        let c0 = g0.to_i64()? as i128;
        let fd = four_delta.to_i128()?;
        let four_g0_z = (4 * c0).checked_mul(z as i128)?;
        Some((xb, yb, c2, c1, c0, fd, four_g0_z))
    })();

    match fast {
        Some((xb, yb, c2, c1, c0, fd, four_g0_z)) => {
            let pieces = rayon::current_num_threads() * 8;
            let parts: Vec<HashMap<i64, u64>> = chunk_ranges(-xb, xb, pieces)
                .into_par_iter()
                .map(|(start, end)| {
                    let mut counts = HashMap::new();
                    for x in start..=end {
                        let xi = x as i128;
                        let d = four_g0_z - fd * xi * xi;
                        if d < 0 {
                            continue;
                        }
                        let s = (d as u128).sqrt() as i128;
                        let b1 = c1 * xi;
                        let two_c0 = 2 * c0;
                        let lo = ((-b1 - s).div_euclid(two_c0) - 1).max(-(yb as i128) - 1);
                        let hi = ((-b1 + s).div_euclid(two_c0) + 1).min(yb as i128 + 1);
                        let fx = c2 * xi * xi;
                        let mut y = lo;
                        while y <= hi {
                            let v = fx + b1 * y + c0 * y * y;
                            if v <= z as i128 && (v > 0 || include_zero) {
                                let h = if neg { -(v as i64) } else { v as i64 };
                                *counts.entry(h).or_insert(0) += 1;
                            }
                            y += 1;
                        }
                    }
                    counts
                })
                .collect();
            merge_counts(parts)
        }
        None => {
            let mut counts = BTreeMap::new();
            let four_g0_z = BigInt::from(4) * &g0 * &z_big;
            let two_g0 = BigInt::from(2) * &g0;
            let mut x = -x_bound.clone();
            while x <= x_bound {
                let d = &four_g0_z - &four_delta * &x * &x;
                if !d.is_negative() {
                    let s = d.sqrt();
                    let b1 = &g1 * &x;
                    let lo = (-&b1 - &s).div_floor(&two_g0) - 1;
                    let hi = (-&b1 + &s).div_floor(&two_g0) + 1;
                    let fx = &g2 * &x * &x;
                    let mut y = lo;
                    while y <= hi {
                        let v: BigInt = &fx + &b1 * &y + &g0 * &y * &y;
                        if v <= z_big && (v.is_positive() || include_zero) {
                            let v = v.to_i64().expect("|value| ≤ z fits in i64");
                            let h = if neg { -v } else { v };
                            *counts.entry(h).or_insert(0) += 1;
                        }
                        y += 1;
                    }
                }
                x += 1;
            }
            counts
        }
    }
}

/// Sweep `|x|, |y| ≤ box_bound`, counting lattice points per value with
/// `|value| ≤ z`.
fn box_counts(f: &Form, z: u64, box_bound: u64, include_zero: bool) -> BTreeMap<i64, u64> {
    if let Some((b, (c2, c1, c0))) = fast_box_params(f, box_bound) {
        let pieces = rayon::current_num_threads() * 8;
        let parts: Vec<HashMap<i64, u64>> = chunk_ranges(-b, b, pieces)
            .into_par_iter()
            .map(|(start, end)| {
                let mut counts = HashMap::new();
                for x in start..=end {
                    let xi = x as i128;
                    let fx = c2 * xi * xi;
                    let c1x = c1 * xi;
                    for y in -b..=b {
                        let yi = y as i128;
                        let v = fx + c1x * yi + c0 * yi * yi;
                        if v.unsigned_abs() <= z as u128 && (v != 0 || include_zero) {
                            *counts.entry(v as i64).or_insert(0) += 1;
                        }
                    }
                }
                counts
            })
            .collect();
        merge_counts(parts)
    } else {
        let mut counts = BTreeMap::new();
        let z_big = BigInt::from(z);
        let b = BigInt::from(box_bound);
        let mut x = -b.clone();
        while x <= b {
            let mut y = -b.clone();
            while y <= b {
                let v = f.eval(&x, &y);
                if v.abs() <= z_big && (!v.is_zero() || include_zero) {
                    let h = v.to_i64().expect("|value| ≤ z fits in i64");
                    *counts.entry(h).or_insert(0) += 1;
                }
                y += 1;
            }
            x += 1;
        }
        counts
    }
}

/// The census of representable values `|h| ≤ z`. Definite forms are swept
/// completely; other forms require `box_bound` and yield a box-truncated
/// lower bound. `h = 0` is recorded only when `include_zero` is set.
pub fn census(f: &Form, z: u64, box_bound: Option<u64>, include_zero: bool) -> Result<CensusResult, Error> {
    if z == 0 {
        return Err(Error::InvalidInput("census bound z must be at least 1".into()));
    }
    if z > i64::MAX as u64 {
        return Err(Error::InvalidInput("census bound z exceeds the supported range".into()));
    }
    let (multiplicities, used_box) = if f.classify().is_definite() {
        (definite_counts(f, z, include_zero), None)
    } else {
        let b = box_bound.ok_or(Error::MissingBox)?;
        (box_counts(f, z, b, include_zero), Some(b))
    };
    let values = multiplicities.keys().copied().collect();
    Ok(CensusResult {
        form: f.clone(),
        z,
        box_bound: used_box,
        include_zero,
        values,
        multiplicities,
    })
}

/// Representations of every representable nonzero `|h| ≤ z`, grouped by
/// value: complete sets for definite forms, box-truncated sets for
/// indefinite ones.
pub fn representations_by_value(
    f: &Form,
    z: u64,
    box_bound: Option<u64>,
) -> Result<BTreeMap<BigInt, Vec<Representation>>, Error> {
    f.require_irreducible()?;
    if z > i64::MAX as u64 {
        return Err(Error::InvalidInput("bound z exceeds the supported range".into()));
    }
    let mut groups: BTreeMap<BigInt, Vec<Representation>> = BTreeMap::new();
    if f.classify().is_definite() {
        let sign: BigInt = if f.f2.is_positive() { 1.into() } else { (-1).into() };
        for k in 1..=z {
            let h = &sign * BigInt::from(k);
            let reps = enumerate_reps(f, &h)?;
            if !reps.is_empty() {
                groups.insert(h, reps);
            }
        }
    } else {
        let b = box_bound.ok_or(Error::MissingBox)?;
        let z_big = BigInt::from(z);
        for rep in collect_box_reps(f, b, BoxFilter::AbsAtMost(&z_big)) {
            if !rep.h.is_zero() {
                groups.entry(rep.h.clone()).or_default().push(rep);
            }
        }
    }
    Ok(groups)
}

fn check_pair(f: &Form, r1: &Representation, r2: &Representation) -> Result<(), String> {
    let t = transport(f, r1, r2).map_err(|e| format!("transport failed: {e}"))?;
    if t.matrix.apply_int(&r1.x, &r1.y) != (big_rat(&r2.x), big_rat(&r2.y)) {
        return Err("matrix does not map r1 to r2".into());
    }
    if !is_automorphism(f, &t.matrix) {
        return Err("matrix does not preserve the form".into());
    }
    if !t.matrix.det().is_one() {
        return Err("determinant is not 1".into());
    }
    Ok(())
}

/// For every representable nonzero `|h| ≤ z`, transport every ordered pair
/// of representations and verify the result maps the pair, preserves the
/// form, and has determinant 1. The failure list is expected to be empty.
pub fn verify_essential(f: &Form, z: u64, box_bound: Option<u64>) -> Result<EssentialReport, Error> {
    let groups = representations_by_value(f, z, box_bound)?;
    let entries: Vec<(&BigInt, &Vec<Representation>)> = groups.iter().collect();
    let partials: Vec<EssentialReport> = entries
        .par_iter()
        .map(|(h, reps)| {
            let mut part = EssentialReport::default();
            if reps.len() >= 2 {
                part.checked_values = 1;
            }
            for r1 in reps.iter() {
                for r2 in reps.iter() {
                    part.pairs_checked += 1;
                    if let Err(reason) = check_pair(f, r1, r2) {
                        part.failures.push(EssentialFailure {
                            h: (*h).clone(),
                            from: r1.coords(),
                            to: r2.coords(),
                            reason,
                        });
                    }
                }
            }
            part
        })
        .collect();
    let mut report = EssentialReport::default();
    for part in partials {
        report.checked_values += part.checked_values;
        report.pairs_checked += part.pairs_checked;
        report.failures.extend(part.failures);
    }
    Ok(report)
}

/// Density diagnostic `count · sqrt(ln z) / z` for a positive definite
/// census with `z ≥ 100`; the one non-exact computation in the crate.
pub fn landau_ratio(c: &CensusResult) -> Result<f64, Error> {
    if c.form.classify() != FormClass::PositiveDefinite {
        return Err(Error::WrongClass { expected: "a positive definite form" });
    }
    if c.z < 100 {
        return Err(Error::WrongClass { expected: "a census with z ≥ 100" });
    }
    let z = c.z as f64;
    Ok(c.count() as f64 * z.ln().sqrt() / z)
}

/// Write the census as CSV over the full swept value range, one row per
/// candidate `h` with a 0/1 representability flag and, when requested, the
/// lattice-point multiplicity.
pub fn write_census_csv<W: Write>(c: &CensusResult, with_multiplicity: bool, out: &mut W) -> io::Result<()> {
    if with_multiplicity {
        writeln!(out, "h,representable,multiplicity")?;
    } else {
        writeln!(out, "h,representable")?;
    }
    let z = c.z as i64;
    let (lo, hi) = match c.form.classify() {
        FormClass::PositiveDefinite => (if c.include_zero { 0 } else { 1 }, z),
        FormClass::NegativeDefinite => (-z, if c.include_zero { 0 } else { -1 }),
        _ => (-z, z),
    };
    for h in lo..=hi {
        if h == 0 && !c.include_zero {
            continue;
        }
        let m = c.multiplicities.get(&h).copied().unwrap_or(0);
        if with_multiplicity {
            writeln!(out, "{h},{},{m}", u8::from(m > 0))?;
        } else {
            writeln!(out, "{h},{}", u8::from(m > 0))?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(reps: &[Representation]) -> Vec<(i64, i64)> {
        reps.iter()
            .map(|r| (r.x.to_i64().unwrap(), r.y.to_i64().unwrap()))
            .collect()
    }

    /// Independent brute-force solution set over a coordinate box.
    fn brute_force(f: &Form, h: i64, bound: i64) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for x in -bound..=bound {
            for y in -bound..=bound {
                if f.eval(&x.into(), &y.into()) == h.into() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    #[test]
    fn enumerate_reps_examples() {
        let f = Form::new(1, 0, 1);
        let reps = enumerate_reps(&f, &25.into()).unwrap();
        assert_eq!(reps.len(), 12);
        assert_eq!(pairs(&reps), brute_force(&f, 25, 6));

        assert!(enumerate_reps(&f, &3.into()).unwrap().is_empty());
        assert_eq!(pairs(&enumerate_reps(&f, &0.into()).unwrap()), vec![(0, 0)]);
    }

    #[test]
    fn enumerate_reps_negative_definite() {
        let f = Form::new(-1, 0, -1);
        let reps = enumerate_reps(&f, &(-25).into()).unwrap();
        assert_eq!(reps.len(), 12);
        assert_eq!(enumerate_reps(&f, &25.into()), Err(Error::SignMismatch));
    }

    #[test]
    fn enumerate_reps_cross_validated() {
        let forms = [Form::new(1, 0, 1), Form::new(2, 1, 3), Form::new(1, 1, 1), Form::new(1, 0, 5)];
        for f in &forms {
            for h in 0..=150i64 {
                let reps = enumerate_reps(f, &h.into()).unwrap();
                // every solution of these forms with h ≤ 150 has |x|, |y| ≤ 30
                assert_eq!(pairs(&reps), brute_force(f, h, 30), "{f:?} h={h}");
            }
        }
    }

    #[test]
    fn enumerate_reps_errors() {
        assert_eq!(
            enumerate_reps(&Form::new(1, 0, -2), &1.into()),
            Err(Error::WrongClass { expected: "a definite form" })
        );
        assert_eq!(enumerate_reps(&Form::new(1, 0, 1), &(-2).into()), Err(Error::SignMismatch));
    }

    #[test]
    fn enumerate_reps_box_pell() {
        let f = Form::new(1, 0, -2);
        let reps = enumerate_reps_box(&f, &1.into(), 20);
        assert_eq!(pairs(&reps), brute_force(&f, 1, 20));
        assert_eq!(reps.len(), 10);
        for want in [(1, 0), (-1, 0), (3, 2), (-3, -2), (17, 12), (-17, -12)] {
            assert!(pairs(&reps).contains(&want), "missing {want:?}");
        }

        let reps = enumerate_reps_box(&f, &(-1).into(), 10);
        assert_eq!(pairs(&reps), brute_force(&f, -1, 10));
        assert_eq!(reps.len(), 8);
        for want in [(1, 1), (-1, -1), (7, 5), (-7, -5)] {
            assert!(pairs(&reps).contains(&want), "missing {want:?}");
        }

        assert_eq!(pairs(&enumerate_reps_box(&f, &0.into(), 30)), vec![(0, 0)]);
    }

    /// Independent census oracle: mark every value of |f| ≤ z over a box
    /// large enough to contain the definite value region.
    fn sieve_oracle(f: &Form, z: i64, bound: i64) -> BTreeSet<i64> {
        let mut marked = BTreeSet::new();
        for x in -bound..=bound {
            for y in -bound..=bound {
                let v = f.eval(&x.into(), &y.into()).to_i64().unwrap();
                if v != 0 && v.abs() <= z {
                    marked.insert(v);
                }
            }
        }
        marked
    }

    #[test]
    fn census_sum_of_two_squares() {
        let f = Form::new(1, 0, 1);
        let c = census(&f, 100, None, false).unwrap();
        assert_eq!(c.count(), 43);
        assert_eq!(c.values, sieve_oracle(&f, 100, 10));

        let c = census(&f, 2, None, false).unwrap();
        assert_eq!(c.values.iter().copied().collect::<Vec<_>>(), vec![1, 2]);

        let with_zero = census(&f, 100, None, true).unwrap();
        assert_eq!(with_zero.count(), 44);
        assert!(with_zero.values.contains(&0));
        assert_eq!(with_zero.multiplicities[&0], 1);
    }

    #[test]
    fn census_multiplicities_match_enumeration() {
        let f = Form::new(1, 0, 1);
        let c = census(&f, 50, None, false).unwrap();
        for h in 1..=50i64 {
            let expected = enumerate_reps(&f, &h.into()).unwrap().len() as u64;
            assert_eq!(c.multiplicities.get(&h).copied().unwrap_or(0), expected, "h={h}");
        }
    }

    #[test]
    fn census_negative_definite_mirrors() {
        let plus = census(&Form::new(1, 0, 1), 100, None, false).unwrap();
        let minus = census(&Form::new(-1, 0, -1), 100, None, false).unwrap();
        let mirrored: BTreeSet<i64> = minus.values.iter().map(|h| -h).collect();
        assert_eq!(plus.values, mirrored);
    }

    #[test]
    fn census_indefinite_box() {
        let f = Form::new(1, 0, -2);
        let c = census(&f, 10, Some(100), false).unwrap();
        assert_eq!(c.values, sieve_oracle(&f, 10, 100));
        assert!(c.values.contains(&-1));
        assert!(c.values.contains(&1));
        assert!(c.values.contains(&2));
        assert!(c.values.contains(&-2));
        assert_eq!(c.box_bound, Some(100));

        assert_eq!(census(&f, 10, None, false), Err(Error::MissingBox));
    }

    #[test]
    fn census_is_deterministic_across_worker_counts() {
        let f = Form::new(2, 1, 3);
        let mut results = Vec::new();
        for threads in [1usize, 4] {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            results.push(pool.install(|| census(&f, 500, None, false).unwrap()));
        }
        assert_eq!(results[0], results[1]);
    }

    #[test]
    fn verify_essential_small_suites() {
        let report = verify_essential(&Form::new(1, 0, 1), 60, None).unwrap();
        assert!(report.failures.is_empty());
        assert!(report.checked_values > 0);
        assert!(report.pairs_checked > 0);

        let report = verify_essential(&Form::new(1, 1, -1), 40, Some(40)).unwrap();
        assert!(report.failures.is_empty());
        assert!(report.checked_values > 0);
    }

    #[test]
    fn verify_essential_imprimitive_forms() {
        // irreducible but imprimitive; the construction never uses
        // primitivity and the check stays clean
        let report = verify_essential(&Form::new(2, 0, 2), 80, None).unwrap();
        assert!(report.failures.is_empty());
        assert!(report.checked_values > 0);

        let report = verify_essential(&Form::new(2, 0, -4), 40, Some(40)).unwrap();
        assert!(report.failures.is_empty());
    }

    #[test]
    fn verify_essential_errors() {
        assert_eq!(
            verify_essential(&Form::new(1, 0, -1), 10, Some(10)),
            Err(Error::ReducibleForm)
        );
        assert_eq!(verify_essential(&Form::new(1, 0, -2), 10, None), Err(Error::MissingBox));
    }

    #[test]
    fn landau_ratio_requires_positive_definite() {
        let c = census(&Form::new(1, 0, -2), 100, Some(50), false).unwrap();
        assert!(matches!(landau_ratio(&c), Err(Error::WrongClass { .. })));

        let empty = CensusResult {
            form: Form::new(1, 0, 1),
            z: 100,
            box_bound: None,
            include_zero: false,
            values: BTreeSet::new(),
            multiplicities: BTreeMap::new(),
        };
        assert_eq!(landau_ratio(&empty).unwrap(), 0.0);

        let small = census(&Form::new(1, 0, 1), 50, None, false).unwrap();
        assert!(matches!(landau_ratio(&small), Err(Error::WrongClass { .. })));
    }

    #[test]
    fn csv_schema() {
        let c = census(&Form::new(1, 0, 1), 5, None, false).unwrap();
        let mut buf = Vec::new();
        write_census_csv(&c, true, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "h,representable,multiplicity");
        assert_eq!(lines[1], "1,1,4");
        assert_eq!(lines[2], "2,1,4");
        assert_eq!(lines[3], "3,0,0");
        assert_eq!(lines[4], "4,1,4");
        assert_eq!(lines[5], "5,1,8");

        let mut buf = Vec::new();
        write_census_csv(&c, false, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), "h,representable");
        assert_eq!(text.lines().count(), 6);
    }
}
