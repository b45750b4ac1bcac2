//! Number fields `Q[x]/(f)` and their elements in the power basis.
//!
//! Elements are stored as an integer numerator vector over a common positive
//! denominator, kept in lowest terms, so equal elements have equal
//! representations and can be hashed directly.

pub mod galois;
pub mod splitting;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::primes_below;
use crate::error::{domain, precondition, Result};
use crate::poly::modp::DEFAULT_SEED;
use crate::poly::sturm::real_roots_f64;
use crate::poly::{factor_mod_p_seeded, resultant, sturm_count_real_roots, Polynomial};

pub use galois::{galois_test, GaloisEvidence};
pub use splitting::{InertTwo, SplittingCheck, SplittingReport, TotallyRamified};

/// How irreducibility of the defining polynomial was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IrreducibilityCertificate {
    /// Degree one.
    Linear,
    /// Irreducible modulo this prime.
    ModPrime(u64),
    /// No prime of irreducibility below the search bound; taken from the input.
    Asserted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldConfig {
    /// Seed for equal-degree splitting in every factorization mod p.
    pub seed: u64,
    /// Primes below this bound are tried as irreducibility witnesses.
    pub irreducibility_bound: u64,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig { seed: DEFAULT_SEED, irreducibility_bound: 1000 }
    }
}

#[derive(Debug)]
pub struct NumberField {
    min_poly: Polynomial,
    /// Integer coefficients of the defining polynomial, ascending, monic.
    f: Vec<BigInt>,
    certificate: IrreducibilityCertificate,
    config: FieldConfig,
    /// Power sums `Tr(theta^k)` for `k < n`.
    power_sums: Vec<BigInt>,
}

impl NumberField {
    /// Field defined by a monic irreducible integer polynomial, default configuration.
    pub fn new(min_poly: Polynomial) -> Result<Arc<Self>> {
        Self::with_config(min_poly, FieldConfig::default(), false)
    }

    /// With `assert_irreducible`, a polynomial without a prime of irreducibility
    /// below the configured bound is accepted on trust; the certificate records this.
    pub fn with_config(min_poly: Polynomial, config: FieldConfig, assert_irreducible: bool) -> Result<Arc<Self>> {
        let n = match min_poly.degree() {
            None | Some(0) => return Err(precondition("defining polynomial must have degree at least 1")),
            Some(n) => n,
        };
        if !min_poly.is_monic() {
            return Err(precondition(format!("defining polynomial {min_poly} is not monic")));
        }
        let f = min_poly
            .to_bigints()
            .ok_or_else(|| precondition(format!("defining polynomial {min_poly} has non-integer coefficients")))?;
        let certificate = if n == 1 {
            IrreducibilityCertificate::Linear
        } else {
            certify_irreducible(&min_poly, &config, assert_irreducible)?
        };
        let power_sums = newton_power_sums(&f);
        Ok(Arc::new(NumberField { min_poly, f, certificate, config, power_sums }))
    }

    pub fn min_poly(&self) -> &Polynomial {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.f.len() - 1
    }

    pub fn certificate(&self) -> IrreducibilityCertificate {
        self.certificate
    }

    pub fn config(&self) -> &FieldConfig {
        &self.config
    }

    /// `(r1, r2)`: real embeddings and pairs of complex embeddings.
    pub fn signature(&self) -> (usize, usize) {
        let r1 = sturm_count_real_roots(&self.min_poly).expect("nonzero defining polynomial");
        (r1, (self.degree() - r1) / 2)
    }

    pub fn is_totally_real(&self) -> bool {
        self.signature().0 == self.degree()
    }

    /// Real roots of the defining polynomial in increasing order, as `f64`.
    pub fn real_roots(&self) -> Vec<f64> {
        real_roots_f64(&self.min_poly).expect("nonzero defining polynomial")
    }

    pub fn discriminant(&self) -> BigInt {
        crate::poly::discriminant(&self.min_poly)
            .expect("nonconstant polynomial")
            .to_integer()
    }

    pub(crate) fn int_coeffs(&self) -> &[BigInt] {
        &self.f
    }
}

/// Newton's identities for a monic polynomial: `p_k = -k a_{n-k} - sum_{i<k} a_{n-k+i} p_i`.
fn newton_power_sums(f: &[BigInt]) -> Vec<BigInt> {
    let n = f.len() - 1;
    let a = |j: usize| &f[n - j]; // coefficient of x^(n-j)
    let mut p = vec![BigInt::from(n)];
    for k in 1..n {
        let mut s = -BigInt::from(k) * a(k);
        for i in 1..k {
            s -= a(i) * &p[k - i];
        }
        p.push(s);
    }
    p
}

fn certify_irreducible(f: &Polynomial, config: &FieldConfig, asserted: bool) -> Result<IrreducibilityCertificate> {
    let n = f.degree().unwrap();
    if !f.is_squarefree() {
        return Err(domain(format!("{f} has a repeated factor")));
    }
    if f.coeff(0).is_zero() {
        return Err(domain(format!("{f} is divisible by x")));
    }
    if let Some(r) = small_integer_root(f) {
        return Err(domain(format!("{f} has the rational root {r}")));
    }
    for p in primes_below(config.irreducibility_bound) {
        let fac = factor_mod_p_seeded(f, p, config.seed)?;
        if fac.is_irreducible() && fac.factors[0].0.degree() == Some(n) {
            return Ok(IrreducibilityCertificate::ModPrime(p));
        }
    }
    if asserted {
        Ok(IrreducibilityCertificate::Asserted)
    } else {
        Err(domain(format!(
            "no prime below {} certifies irreducibility of {f}; the record must assert it",
            config.irreducibility_bound
        )))
    }
}

/// An integer root dividing a constant term of moderate size.
fn small_integer_root(f: &Polynomial) -> Option<i64> {
    let c = f.coeff(0).to_integer().abs().to_u64()?;
    if c > 1_000_000_000_000 {
        return None;
    }
    let mut d = 1u64;
    while d * d <= c {
        if c % d == 0 {
            for q in [d, c / d] {
                for r in [q as i64, -(q as i64)] {
                    if f.eval(&BigRational::from_integer(r.into())).is_zero() {
                        return Some(r);
                    }
                }
            }
        }
        d += 1;
    }
    None
}

/// Upper bound `3 * 7^(3 r1 + 4 r2)` on the number of unit-equation solutions.
pub fn evertse_bound(r1: u32, r2: u32) -> BigUint {
    BigUint::from(3u32) * num_traits::pow(BigUint::from(7u32), (3 * r1 + 4 * r2) as usize)
}

/// An element `(num_0 + num_1 theta + ... ) / den` of a number field.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl FieldElement {
    fn from_parts(field: &Arc<NumberField>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert_eq!(num.len(), field.degree());
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -&*c);
        }
        let g = num.iter().fold(den.clone(), |acc, c| acc.gcd(c));
        if !g.is_one() && !g.is_zero() {
            num.iter_mut().for_each(|c| *c = &*c / &g);
            den /= &g;
        }
        if num.iter().all(Zero::is_zero) {
            den = BigInt::one();
        }
        FieldElement { field: field.clone(), num, den }
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        Self::from_int(field, 0)
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<NumberField>, c: i64) -> Self {
        Self::from_rational(field, &BigRational::from_integer(c.into()))
    }

    pub fn from_rational(field: &Arc<NumberField>, c: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); field.degree()];
        num[0] = c.numer().clone();
        Self::from_parts(field, num, c.denom().clone())
    }

    /// The generator `theta`, a root of the defining polynomial.
    pub fn theta(field: &Arc<NumberField>) -> Self {
        Self::from_polynomial(field, &Polynomial::x())
    }

    /// Power-basis coordinates; at most `degree` entries, missing ones are zero.
    pub fn from_coeffs(field: &Arc<NumberField>, coeffs: &[BigRational]) -> Result<Self> {
        if coeffs.len() > field.degree() {
            return Err(domain(format!(
                "{} coordinates given for a field of degree {}",
                coeffs.len(),
                field.degree()
            )));
        }
        Ok(Self::from_polynomial(field, &Polynomial::new(coeffs.to_vec())))
    }

    /// The class of `a(theta)` for an arbitrary rational polynomial `a`.
    pub fn from_polynomial(field: &Arc<NumberField>, a: &Polynomial) -> Self {
        let r = a.rem(&field.min_poly).expect("nonzero modulus");
        let den = r.denominator_lcm();
        let num = (0..field.degree())
            .map(|i| (r.coeff(i) * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        Self::from_parts(field, num, den)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.coeffs())
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The element as a rational number, if it lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(domain("inverse of zero"));
        }
        let (g, s, _) = self.to_polynomial().ext_gcd(&self.field.min_poly);
        debug_assert_eq!(g, Polynomial::one());
        Ok(Self::from_polynomial(&self.field, &s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Integer power; negative exponents require a nonzero element.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(&self.field);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = b.square();
            }
        }
        Ok(acc)
    }

    /// `N(alpha) = Res(f, a)` for `alpha = a(theta)` and monic `f`.
    pub fn norm(&self) -> BigRational {
        resultant(&self.field.min_poly, &self.to_polynomial()).expect("defining polynomial is nonzero")
    }

    pub fn trace(&self) -> BigRational {
        let t = self
            .num
            .iter()
            .zip(&self.field.power_sums)
            .fold(BigInt::zero(), |acc, (a, p)| acc + a * p);
        BigRational::new(t, self.den.clone())
    }

    /// Columns are the coordinates of `alpha * theta^j`.
    pub fn multiplication_matrix(&self) -> Vec<Vec<BigRational>> {
        let n = self.field.degree();
        let mut cols = Vec::with_capacity(n);
        let mut cur = self.clone();
        let theta = Self::theta(&self.field);
        for j in 0..n {
            cols.push(cur.coeffs());
            if j + 1 < n {
                cur = &cur * &theta;
            }
        }
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Characteristic polynomial of multiplication by `alpha`, by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> Polynomial {
        let a = self.multiplication_matrix();
        let n = a.len();
        let mut c = vec![BigRational::zero(); n + 1];
        c[n] = BigRational::one();
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = mat_mul(&a, &m);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += &c[n - k + 1];
            }
            m = next;
            let am = mat_mul(&a, &m);
            let tr = (0..n).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
            c[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
        }
        Polynomial::new(c)
    }

    /// Minimal polynomial over Q: the radical of the characteristic polynomial.
    pub fn min_poly(&self) -> Polynomial {
        self.char_poly().squarefree_part()
    }

    /// Integrality against the maximal order, via the characteristic polynomial.
    pub fn is_integral(&self) -> bool {
        self.den.is_one() || self.char_poly().is_integral()
    }

    pub fn is_unit(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let n = self.norm();
        n.abs().is_one() && self.is_integral()
    }

    /// Value at a real embedding `theta -> root`.
    pub fn embed(&self, root: f64) -> f64 {
        let v = self
            .num
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * root + c.to_f64().unwrap_or(f64::NAN));
        v / self.den.to_f64().unwrap_or(f64::NAN)
    }

    /// Reduction of the product polynomial mod the monic defining polynomial.
    fn mul_impl(&self, other: &Self) -> Self {
        let n = self.field.degree();
        let f = &self.field.f;
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        for d in (n..2 * n - 1).rev() {
            let c = std::mem::take(&mut prod[d]);
            if c.is_zero() {
                continue;
            }
            for k in 0..n {
                if !f[k].is_zero() {
                    prod[d - n + k] -= &c * &f[k];
                }
            }
        }
        prod.truncate(n);
        Self::from_parts(&self.field, prod, &self.den * &other.den)
    }

    fn add_impl(&self, other: &Self, sign: i32) -> Self {
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| {
                let l = a * &other.den;
                let r = b * &self.den;
                if sign > 0 {
                    l + r
                } else {
                    l - r
                }
            })
            .collect();
        Self::from_parts(&self.field, num, &self.den * &other.den)
    }
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

// Equality and hashing look at the reduced representation only; comparing
// elements of different fields is a logic error.
impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(Arc::ptr_eq(&self.field, &other.field) || self.field.min_poly == other.field.min_poly);
        self.den == other.den && self.num == other.num
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by coordinate vector, compared as rationals.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs().cmp(&other.coeffs())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({})", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_polynomial().to_string().replace('x', "t");
        write!(f, "{s}")
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.add_impl(rhs, 1)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.add_impl(rhs, -1)
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.mul_impl(rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}
