//! Sturm sequences over Q: real-root counting and isolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Polynomial;
use crate::error::{domain, Result};

/// Sturm sequence of the squarefree part of `f`.
pub fn sturm_sequence(f: &Polynomial) -> Result<Vec<Polynomial>> {
    if f.is_zero() {
        return Err(domain("Sturm sequence of the zero polynomial"));
    }
    let f = f.squarefree_part();
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1])?;
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    Ok(seq)
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign(q: &BigRational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn changes_at(seq: &[Polynomial], x: &BigRational) -> usize {
    sign_changes(seq.iter().map(|p| sign(&p.eval(x))))
}

fn changes_at_infinity(seq: &[Polynomial], positive: bool) -> usize {
    sign_changes(seq.iter().map(|p| {
        let s = sign(p.leading().unwrap());
        let odd = p.degree().unwrap() % 2 == 1;
        if !positive && odd {
            -s
        } else {
            s
        }
    }))
}

/// Number of distinct real roots of `f`.
pub fn sturm_count_real_roots(f: &Polynomial) -> Result<usize> {
    let seq = sturm_sequence(f)?;
    Ok(changes_at_infinity(&seq, false) - changes_at_infinity(&seq, true))
}

/// Cauchy bound: every root has absolute value below the returned integer.
pub fn root_bound(f: &Polynomial) -> BigRational {
    let lc = f.leading().unwrap().abs();
    let m = f
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lc)
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    BigRational::from_integer((m + BigRational::one()).ceil().to_integer())
}

/// Disjoint intervals `(lo, hi]`, each holding exactly one real root of `f`,
/// refined until `hi - lo <= width`. Ordered by increasing root.
pub fn isolate_real_roots(f: &Polynomial, width: &BigRational) -> Result<Vec<(BigRational, BigRational)>> {
    let seq = sturm_sequence(f)?;
    let sqf = &seq[0];
    let b = root_bound(sqf);
    let mut pending = vec![(-b.clone(), b)];
    let mut out = Vec::new();
    let two = BigRational::from_integer(BigInt::from(2));
    while let Some((lo, hi)) = pending.pop() {
        let count = changes_at(&seq, &lo) - changes_at(&seq, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 && &hi - &lo <= *width {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / &two;
        pending.push((lo, mid.clone()));
        pending.push((mid, hi));
    }
    out.sort();
    Ok(out)
}

/// Real roots as `f64`, isolated exactly and refined to width `2^-60`.
pub fn real_roots_f64(f: &Polynomial) -> Result<Vec<f64>> {
    use num_traits::ToPrimitive;
    let width = BigRational::new(BigInt::one(), BigInt::one() << 60);
    Ok(isolate_real_roots(f, &width)?
        .into_iter()
        .map(|(lo, hi)| ((lo + hi) / BigRational::from_integer(BigInt::from(2))).to_f64().unwrap())
        .collect())
}
