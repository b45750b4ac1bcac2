//! Polynomials over a prime field and their factorization.
//!
//! Factorization runs squarefree decomposition, distinct-degree splitting and
//! Cantor-Zassenhaus equal-degree splitting. The equal-degree step draws its
//! random polynomials from a seeded ChaCha stream, so output is reproducible.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Polynomial;
use crate::arith::{self, inv_mod, mul_mod, rational_mod};
use crate::error::{domain, Result};

/// Seed used by [`factor_mod_p`] when no seed is configured.
pub const DEFAULT_SEED: u64 = 0x5eed_u64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModPolynomial {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl ModPolynomial {
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % modulus).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPolynomial { modulus, coeffs }
    }

    pub fn from_ints(modulus: u64, coeffs: &[i64]) -> Self {
        let m = modulus as i64;
        Self::new(modulus, coeffs.iter().map(|c| c.rem_euclid(m) as u64).collect())
    }

    /// Reduce a rational polynomial mod `p`; fails if a denominator is divisible by `p`.
    pub fn reduce(f: &Polynomial, p: u64) -> Result<Self> {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| rational_mod(c, p))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| domain(format!("denominator divisible by {p}")))?;
        Ok(Self::new(p, coeffs))
    }

    pub fn zero(modulus: u64) -> Self {
        Self::new(modulus, Vec::new())
    }

    pub fn one(modulus: u64) -> Self {
        Self::new(modulus, vec![1])
    }

    pub fn x(modulus: u64) -> Self {
        Self::new(modulus, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Lift to an integer polynomial with coefficients in `[0, p)`.
    pub fn lift(&self) -> Polynomial {
        Polynomial::from_bigints(
            &self
                .coeffs
                .iter()
                .map(|&c| num_bigint::BigInt::from(c))
                .collect::<Vec<_>>(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.modulus;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.modulus;
        Self::new(p, self.coeffs.iter().map(|&a| mul_mod(a, c, p)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.modulus).expect("nonzero leading coefficient"))
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            p,
            (0..n)
                .map(|i| {
                    (self.coeffs.get(i).copied().unwrap_or(0) + other.coeffs.get(i).copied().unwrap_or(0)) % p
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            p,
            (0..n)
                .map(|i| {
                    (self.coeffs.get(i).copied().unwrap_or(0) + p - other.coeffs.get(i).copied().unwrap_or(0)) % p
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.modulus);
        }
        let p = self.modulus;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Self::new(p, out)
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let p = self.modulus;
        let dd = divisor
            .degree()
            .ok_or_else(|| domain("division by the zero polynomial mod p"))?;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(p), self.clone()));
        }
        let inv = inv_mod(divisor.leading(), p).unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = mul_mod(rem[i], inv, p);
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = (rem[k] + p - mul_mod(c, d, p)) % p;
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(p, quot), Self::new(p, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).expect("nonzero divisor").1
    }

    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division mod p");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let p = self.modulus;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.modulus);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// For `f(x) = g(x^p)` returns `g`.
    fn pth_root(&self) -> Self {
        let p = self.modulus as usize;
        Self::new(self.modulus, self.coeffs.iter().step_by(p).copied().collect())
    }

    pub fn pow_u32(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.modulus), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for ModPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.lift(), self.modulus)
    }
}

/// Complete factorization of a polynomial over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationModP {
    pub modulus: u64,
    /// Leading coefficient of the input mod `p`.
    pub unit: u64,
    /// Monic irreducible factors with multiplicities, sorted by degree and then
    /// by ascending coefficient vector.
    pub factors: Vec<(ModPolynomial, u32)>,
}

impl FactorizationModP {
    /// Multiply the factorization back out.
    pub fn expand(&self) -> ModPolynomial {
        self.factors.iter().fold(
            ModPolynomial::new(self.modulus, vec![self.unit]),
            |acc, (g, e)| acc.mul(&g.pow_u32(*e)),
        )
    }

    /// `(multiplicity, degree)` pairs in factor order.
    pub fn pattern(&self) -> Vec<(u32, usize)> {
        self.factors
            .iter()
            .map(|(g, e)| (*e, g.degree().unwrap()))
            .collect()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factor `f` mod `p` with the default equal-degree seed.
pub fn factor_mod_p(f: &Polynomial, p: u64) -> Result<FactorizationModP> {
    factor_mod_p_seeded(f, p, DEFAULT_SEED)
}

pub fn factor_mod_p_seeded(f: &Polynomial, p: u64, seed: u64) -> Result<FactorizationModP> {
    if !arith::is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    if f.is_zero() {
        return Err(domain("cannot factor the zero polynomial"));
    }
    let fp = ModPolynomial::reduce(f, p)?;
    if fp.is_zero() {
        return Err(domain(format!("polynomial vanishes identically mod {p}")));
    }
    Ok(factor_mod(&fp, seed))
}

pub(crate) fn factor_mod(fp: &ModPolynomial, seed: u64) -> FactorizationModP {
    let p = fp.modulus();
    let unit = fp.leading();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(ModPolynomial, u32)> = Vec::new();
    for (sqf, mult) in squarefree_decomposition(&fp.monic()) {
        for (g, d) in distinct_degree(&sqf) {
            for h in equal_degree(&g, d, &mut rng) {
                factors.push((h, mult));
            }
        }
    }
    // merge equal factors that arrive from different squarefree layers
    factors.sort_by(|a, b| factor_order(&a.0, &b.0));
    let mut merged: Vec<(ModPolynomial, u32)> = Vec::new();
    for (g, e) in factors {
        match merged.last_mut() {
            Some((h, m)) if *h == g => *m += e,
            _ => merged.push((g, e)),
        }
    }
    FactorizationModP { modulus: p, unit, factors: merged }
}

fn factor_order(a: &ModPolynomial, b: &ModPolynomial) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Squarefree factorization of a monic polynomial over `F_p`.
fn squarefree_decomposition(f: &ModPolynomial) -> Vec<(ModPolynomial, u32)> {
    let p = f.modulus();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, e) in squarefree_decomposition(&f.pth_root()) {
            out.push((g, e * p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.exact_div(&c);
    let mut i = 1u32;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y);
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        for (g, e) in squarefree_decomposition(&c.pth_root().monic()) {
            out.push((g, e * p as u32));
        }
    }
    out
}

/// Splits a squarefree monic polynomial into products of irreducibles of equal degree.
fn distinct_degree(f: &ModPolynomial) -> Vec<(ModPolynomial, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = ModPolynomial::x(p);
    let pe = BigUint::from(p);
    let mut h = x.clone();
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&pe, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.exact_div(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if let Some(dr) = rest.degree() {
        if dr > 0 {
            out.push((rest, dr));
        }
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree `d`.
fn equal_degree(f: &ModPolynomial, d: usize, rng: &mut ChaCha8Rng) -> Vec<ModPolynomial> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.monic()];
    }
    let p = f.modulus();
    let q = arith::biguint_from_u64_pow(p, d as u32);
    loop {
        let a = ModPolynomial::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // absolute trace a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (&q - BigUint::one()) / BigUint::from(2u32);
            a.pow_mod(&e, f).sub(&ModPolynomial::one(p))
        };
        let g = f.gcd(&b);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.exact_div(&g), d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(coeffs: &[i64], p: u64) -> FactorizationModP {
        factor_mod_p(&Polynomial::from_ints(coeffs), p).unwrap()
    }

    #[test]
    fn cyclotomic_five_mod_five() {
        let f = fac(&[1, 1, 1, 1, 1], 5);
        assert_eq!(f.factors, vec![(ModPolynomial::new(5, vec![4, 1]), 4)]);
    }

    #[test]
    fn quintic_inert_at_two() {
        let f = fac(&[-451, -990, -605, -110, 0, 1], 2);
        assert!(f.is_irreducible());
        assert_eq!(f.factors[0].0, ModPolynomial::new(2, vec![1, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn x2_plus_1_mod_5() {
        let f = fac(&[1, 0, 1], 5);
        assert_eq!(
            f.factors,
            vec![
                (ModPolynomial::new(5, vec![2, 1]), 1),
                (ModPolynomial::new(5, vec![3, 1]), 1)
            ]
        );
    }

    #[test]
    fn septic_totally_ramified_at_53() {
        let f = fac(&[-11, 9, 129, 85, -65, -45, -1, 1], 53);
        assert_eq!(f.pattern(), vec![(7, 1)]);
        assert_eq!(f.factors[0].0, ModPolynomial::new(53, vec![15, 1]));
    }

    #[test]
    fn non_prime_modulus_rejected() {
        assert!(factor_mod_p(&Polynomial::from_ints(&[1, 1]), 9).is_err());
    }

    #[test]
    fn pth_power_inputs() {
        // (x^2+1)^2 * (x+1)^3 mod 2 and x^4 + x^2 + 1 = (x^2+x+1)^2 mod 2
        let f = fac(&[1, 0, 1, 0, 1], 2);
        assert_eq!(f.factors, vec![(ModPolynomial::new(2, vec![1, 1, 1]), 2)]);
        let g = ModPolynomial::from_ints(3, &[1, 0, 1])
            .pow_u32(3)
            .mul(&ModPolynomial::from_ints(3, &[1, 1]).pow_u32(4));
        let fg = factor_mod(&g, DEFAULT_SEED);
        assert_eq!(fg.expand(), g);
        assert_eq!(fg.pattern(), vec![(4, 1), (3, 2)]);
    }

    #[test]
    fn seeds_agree() {
        let f = Polynomial::from_ints(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let a = factor_mod_p_seeded(&f, 13, 1).unwrap();
        let b = factor_mod_p_seeded(&f, 13, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.factors.len(), 12);
    }
}
