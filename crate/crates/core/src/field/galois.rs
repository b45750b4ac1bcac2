//! Deciding whether `Q[x]/(f)` is Galois by finding the roots of `f` inside it.
//!
//! At a prime `p` where `f` splits into distinct linear factors the roots are
//! lifted p-adically. An automorphism `theta -> g(theta)` permutes these
//! roots, so for each candidate permutation the coefficients of `g` are
//! interpolated mod `p^k`, rationally reconstructed, and the result is
//! checked exactly by `f(g(theta)) = 0` in the field.

use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{FieldElement, NumberField};
use crate::arith::{bigint_mod, primes_below};
use crate::error::Result;
use crate::poly::Polynomial;

/// Largest degree handled by the permutation search.
pub const MAX_GALOIS_DEGREE: usize = 8;
const PRIME_BOUND: u64 = 5000;
const PRECISION_BITS: u64 = 1024;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GaloisEvidence {
    /// `n` distinct roots `g(theta)` of `f`, each verified exactly.
    Galois { automorphisms: Vec<Polynomial>, split_prime: u64 },
    NotGalois { reason: String },
    Undetermined { reason: String },
}

impl GaloisEvidence {
    pub fn is_galois(&self) -> Option<bool> {
        match self {
            GaloisEvidence::Galois { .. } => Some(true),
            GaloisEvidence::NotGalois { .. } => Some(false),
            GaloisEvidence::Undetermined { .. } => None,
        }
    }
}

pub fn galois_test(field: &Arc<NumberField>) -> Result<GaloisEvidence> {
    let n = field.degree();
    if n == 1 {
        return Ok(GaloisEvidence::Galois { automorphisms: vec![Polynomial::x()], split_prime: 2 });
    }
    let (r1, _) = field.signature();
    if r1 != 0 && r1 != n {
        return Ok(GaloisEvidence::NotGalois {
            reason: format!("mixed signature: {r1} real embeddings out of {n}"),
        });
    }
    if n > MAX_GALOIS_DEGREE {
        return Ok(GaloisEvidence::Undetermined {
            reason: format!("degree {n} exceeds the search limit {MAX_GALOIS_DEGREE}"),
        });
    }
    let mut split_prime = None;
    for p in primes_below(PRIME_BOUND) {
        let fac = field.factor_mod(p)?;
        if fac.factors.iter().any(|(_, e)| *e > 1) {
            continue; // ramified or index divisor
        }
        let degs: Vec<usize> = fac.factors.iter().map(|(g, _)| g.degree().unwrap()).collect();
        if degs.iter().any(|&d| d != degs[0]) {
            return Ok(GaloisEvidence::NotGalois {
                reason: format!("factor degrees {degs:?} mod {p} are not all equal"),
            });
        }
        if degs[0] == 1 {
            split_prime = Some((p, fac));
            break;
        }
    }
    let Some((p, fac)) = split_prime else {
        return Ok(GaloisEvidence::Undetermined {
            reason: format!("no totally split prime below {PRIME_BOUND}"),
        });
    };
    let roots0: Vec<u64> = fac
        .factors
        .iter()
        .map(|(g, _)| (p - g.coeffs()[0]) % p)
        .collect();
    let k = (PRECISION_BITS as f64 / (p as f64).log2()).ceil() as u32 + 1;
    let modulus = num_traits::pow(BigInt::from(p), k as usize);
    let roots: Vec<BigInt> = roots0
        .iter()
        .map(|&r| hensel_lift(field.int_coeffs(), r, p, &modulus))
        .collect();
    let vinv = vandermonde_inverse(&roots, &modulus);

    let mut autos = Vec::new();
    for j in 0..n {
        let others: Vec<usize> = (0..n).filter(|&i| i != j).collect();
        for rest in others.iter().copied().permutations(n - 1) {
            let mut images = Vec::with_capacity(n);
            images.push(j);
            images.extend(rest);
            if let Some(g) = try_permutation(field, &vinv, &roots, &images, &modulus) {
                autos.push(g);
                break;
            }
        }
    }
    if autos.len() == n {
        autos.sort();
        Ok(GaloisEvidence::Galois { automorphisms: autos, split_prime: p })
    } else {
        Ok(GaloisEvidence::Undetermined {
            reason: format!("found {} of {n} roots of the defining polynomial in the field", autos.len()),
        })
    }
}

fn try_permutation(
    field: &Arc<NumberField>,
    vinv: &[Vec<BigInt>],
    roots: &[BigInt],
    images: &[usize],
    m: &BigInt,
) -> Option<Polynomial> {
    let n = roots.len();
    let mut coeffs = Vec::with_capacity(n);
    for row in vinv {
        let c = row
            .iter()
            .zip(images)
            .fold(BigInt::zero(), |acc, (v, &i)| acc + v * &roots[i])
            .mod_floor(m);
        coeffs.push(rational_reconstruction(&c, m)?);
    }
    let g = Polynomial::new(coeffs);
    let beta = FieldElement::from_polynomial(field, &g);
    let f = field.min_poly();
    let val = f
        .coeffs()
        .iter()
        .rev()
        .fold(FieldElement::zero(field), |acc, c| &(&acc * &beta) + &FieldElement::from_rational(field, c));
    val.is_zero().then_some(g)
}

fn eval_mod(f: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn inv_mod_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Newton lifting of a simple root mod `p` to a root mod `m = p^k`.
fn hensel_lift(f: &[BigInt], r: u64, p: u64, m: &BigInt) -> BigInt {
    let df: Vec<BigInt> = f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let mut x = BigInt::from(r);
    let mut prec = BigInt::from(p);
    while &prec < m {
        prec = (&prec * &prec).min(m.clone());
        let fx = eval_mod(f, &x, &prec);
        let dfx = eval_mod(&df, &x, &prec);
        x = (x - fx * inv_mod_big(&dfx, &prec)).mod_floor(&prec);
    }
    debug_assert!(bigint_mod(&x, p) == r);
    x
}

/// Inverse of the Vandermonde matrix `V[i][j] = r_i^j` mod `m`; the roots are distinct mod p.
fn vandermonde_inverse(roots: &[BigInt], m: &BigInt) -> Vec<Vec<BigInt>> {
    let n = roots.len();
    let mut a: Vec<Vec<BigInt>> = roots
        .iter()
        .map(|r| {
            let mut row = Vec::with_capacity(2 * n);
            let mut pw = BigInt::one();
            for _ in 0..n {
                row.push(pw.clone());
                pw = (pw * r).mod_floor(m);
            }
            row
        })
        .collect();
    for (i, row) in a.iter_mut().enumerate() {
        row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
    }
    for col in 0..n {
        // a pivot that is a unit mod p exists because V is invertible mod p
        let piv = (col..n)
            .find(|&r| a[r][col].gcd(m).is_one())
            .expect("invertible Vandermonde matrix");
        a.swap(col, piv);
        let inv = inv_mod_big(&a[col][col], m);
        for c in a[col].iter_mut() {
            *c = (&*c * &inv).mod_floor(m);
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, v) in row.iter_mut().zip(&pivot_row) {
                *c = (&*c - &factor * v).mod_floor(m);
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// `a / b` with `|a|, |b| <= sqrt(m / 2)` and `a = b u` mod `m`, if one exists.
fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn field(c: &[i64]) -> Arc<NumberField> {
        NumberField::new(Polynomial::from_ints(c)).unwrap()
    }

    #[test]
    fn reconstruction_roundtrip() {
        let m = num_traits::pow(BigInt::from(101), 20);
        let q = rat(-355, 113);
        let u = (q.numer() * inv_mod_big(q.denom(), &m)).mod_floor(&m);
        assert_eq!(rational_reconstruction(&u, &m), Some(q));
    }

    #[test]
    fn quadratic_fields_are_galois() {
        let ev = galois_test(&field(&[-1, -1, 1])).unwrap();
        match ev {
            GaloisEvidence::Galois { automorphisms, .. } => {
                assert_eq!(automorphisms.len(), 2);
                // theta -> 1 - theta
                assert!(automorphisms.contains(&Polynomial::from_ints(&[1, -1])));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cyclic_cubic_and_quintics() {
        assert_eq!(galois_test(&field(&[-1, -2, 1, 1])).unwrap().is_galois(), Some(true));
        assert_eq!(galois_test(&field(&[1, 3, -3, -4, 1, 1])).unwrap().is_galois(), Some(true));
        assert_eq!(
            galois_test(&field(&[-451, -990, -605, -110, 0, 1])).unwrap().is_galois(),
            Some(true)
        );
        assert_eq!(galois_test(&field(&[1; 5])).unwrap().is_galois(), Some(true));
    }

    #[test]
    fn pure_cubic_is_not_galois() {
        assert_eq!(galois_test(&field(&[-2, 0, 0, 1])).unwrap().is_galois(), Some(false));
        // discriminants 81 and 229
        assert_eq!(galois_test(&field(&[1, -3, 0, 1])).unwrap().is_galois(), Some(true));
        assert_eq!(galois_test(&field(&[-1, -4, 0, 1])).unwrap().is_galois(), Some(false));
    }
}
