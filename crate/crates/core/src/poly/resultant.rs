//! Resultants by the fraction-free subresultant algorithm.
//!
//! Rational inputs are scaled to primitive integer polynomials first, so the
//! remainder sequence runs entirely in `Z[x]` with exact divisions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Polynomial;
use crate::error::{domain, Result};

fn deg(p: &[BigInt]) -> usize {
    p.len() - 1
}

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = q*b + r`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = deg(b);
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = deg(a) - db + 1;
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * bj;
        }
        r.pop();
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let scale = num_traits::pow(lb.clone(), steps);
        for c in r.iter_mut() {
            *c *= &scale;
        }
    }
    r
}

/// Resultant of two integer polynomials given as nonzero coefficient vectors.
pub(crate) fn resultant_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return BigInt::zero();
    }
    if deg(&a) == 0 {
        return num_traits::pow(a[0].clone(), deg(&b));
    }
    if deg(&b) == 0 {
        return num_traits::pow(b[0].clone(), deg(&a));
    }
    let ca = content(&a);
    let cb = content(&b);
    for c in a.iter_mut() {
        *c = &*c / &ca;
    }
    for c in b.iter_mut() {
        *c = &*c / &cb;
    }
    let t = num_traits::pow(ca, deg(&b)) * num_traits::pow(cb, deg(&a));
    let mut s = BigInt::one();
    if deg(&a) < deg(&b) {
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = deg(&a) - deg(&b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            s = -s;
        }
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return BigInt::zero();
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        a = b;
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a[deg(&a)].clone();
        // h <- h^(1-delta) * g^delta, exact in Z
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1)
        };
        if deg(&b) == 0 {
            let da = deg(&a);
            let lb = b[0].clone();
            let hh = if da == 0 {
                h
            } else {
                num_traits::pow(lb, da) / num_traits::pow(h, da - 1)
            };
            return s * t * hh;
        }
    }
}

/// Exact resultant of two rational polynomials.
///
/// Follows the convention `Res(f, g) = lc(f)^deg(g) * prod g(root of f)`;
/// the resultant with a zero polynomial is zero unless both are zero.
pub fn resultant(f: &Polynomial, g: &Polynomial) -> Result<BigRational> {
    if f.is_zero() && g.is_zero() {
        return Err(domain("resultant of two zero polynomials"));
    }
    if f.is_zero() || g.is_zero() {
        return Ok(BigRational::zero());
    }
    let (cf, pf) = f.primitive_part();
    let (cg, pg) = g.primitive_part();
    let df = f.degree().unwrap();
    let dg = g.degree().unwrap();
    let scale = num_traits::pow(cf, dg) * num_traits::pow(cg, df);
    Ok(scale * BigRational::from_integer(resultant_int(&pf, &pg)))
}

/// Discriminant `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &Polynomial) -> Result<BigRational> {
    let n = f
        .degree()
        .ok_or_else(|| domain("discriminant of the zero polynomial"))?;
    if n == 0 {
        return Err(domain("discriminant of a constant polynomial"));
    }
    if n == 1 {
        return Ok(BigRational::one());
    }
    let r = resultant(f, &f.derivative())?;
    let sign = if (n * (n - 1) / 2) % 2 == 1 { -1 } else { 1 };
    let d = r / f.leading().unwrap();
    Ok(if sign < 0 { -d } else { d })
}

/// Resultant by Euclid's algorithm over Q, used as an independent cross-check.
pub fn resultant_euclid(f: &Polynomial, g: &Polynomial) -> Result<BigRational> {
    if f.is_zero() && g.is_zero() {
        return Err(domain("resultant of two zero polynomials"));
    }
    if f.is_zero() || g.is_zero() {
        return Ok(BigRational::zero());
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut acc = BigRational::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if db == 0 {
            return Ok(acc * num_traits::pow(b.coeffs()[0].clone(), da));
        }
        if da == 0 {
            return Ok(acc * num_traits::pow(a.coeffs()[0].clone(), db));
        }
        // Res(a, b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
        let r = a.rem(&b)?;
        if r.is_zero() {
            return Ok(BigRational::zero());
        }
        let dr = r.degree().unwrap();
        if (da * db) % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(b.leading().unwrap().clone(), da - dr);
        a = b;
        b = r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn shifted_pair(r: usize) -> (Polynomial, Polynomial) {
        let f = Polynomial::x_pow_minus_one(r);
        let g = &Polynomial::from_ints(&[-1, 1]).pow(r as u32) - &Polynomial::one();
        (f, g)
    }

    #[test]
    fn small_values() {
        let (f, g) = shifted_pair(2);
        assert_eq!(resultant(&f, &g).unwrap(), rat(-3, 1));
        let (f, g) = shifted_pair(4);
        assert_eq!(resultant(&f, &g).unwrap(), rat(-375, 1));
        let (f, g) = shifted_pair(6);
        assert!(resultant(&f, &g).unwrap().is_zero());
    }

    // prod over r-th roots of unity z of ((z - 1)^r - 1), in floating point
    fn root_product(r: usize) -> f64 {
        use num_complex::Complex64;
        let mut acc = Complex64::new(1.0, 0.0);
        for k in 0..r {
            let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / r as f64);
            acc *= (z - 1.0).powu(r as u32) - 1.0;
        }
        acc.re
    }

    #[test]
    fn agrees_with_root_product() {
        for r in 1..=8 {
            let (f, g) = shifted_pair(r);
            let exact: f64 = num_traits::ToPrimitive::to_f64(&resultant(&f, &g).unwrap()).unwrap();
            let approx = root_product(r);
            assert!((exact - approx).abs() <= 1e-6 * approx.abs().max(1.0), "r = {r}");
            assert_eq!(resultant(&f, &g).unwrap(), resultant_euclid(&f, &g).unwrap());
        }
    }

    #[test]
    fn common_root_gives_zero() {
        let f = Polynomial::from_ints(&[-1, -1, 1]);
        assert!(resultant(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn constants_and_zero() {
        let f = Polynomial::from_ints(&[1, 0, 1]);
        assert_eq!(resultant(&f, &Polynomial::from_ints(&[3])).unwrap(), rat(9, 1));
        assert_eq!(resultant(&Polynomial::from_ints(&[3]), &f).unwrap(), rat(9, 1));
        assert!(resultant(&f, &Polynomial::zero()).unwrap().is_zero());
        assert!(resultant(&Polynomial::zero(), &Polynomial::zero()).is_err());
    }

    #[test]
    fn rational_scaling() {
        let f = Polynomial::new(vec![rat(1, 2), rat(1, 1)]); // x + 1/2
        let g = Polynomial::from_ints(&[0, 0, 1]); // x^2
        // g(-1/2) = 1/4
        assert_eq!(resultant(&f, &g).unwrap(), rat(1, 4));
        assert_eq!(resultant_euclid(&f, &g).unwrap(), rat(1, 4));
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&Polynomial::from_ints(&[-5, 0, 1])).unwrap(), rat(20, 1));
        assert_eq!(discriminant(&Polynomial::from_ints(&[-1, -1, 1])).unwrap(), rat(5, 1));
        // x^3 + x^2 - 2x - 1 has discriminant 49
        assert_eq!(discriminant(&Polynomial::from_ints(&[-1, -2, 1, 1])).unwrap(), rat(49, 1));
    }
}
