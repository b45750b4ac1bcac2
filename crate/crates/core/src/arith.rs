//! Small integer helpers shared across modules.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p`; `None` when `p | a`.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd_i64(a: i64, b: i64) -> u64 {
    a.unsigned_abs().gcd(&b.unsigned_abs())
}

pub fn primes_below(bound: u64) -> impl Iterator<Item = u64> {
    (2..bound).filter(|&n| is_prime(n))
}

/// Reduce an integer into `[0, p)`.
pub fn bigint_mod(a: &BigInt, p: u64) -> u64 {
    let r = a.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

/// Image of a rational in `F_p`, or `None` when the denominator is divisible by `p`.
pub fn rational_mod(q: &BigRational, p: u64) -> Option<u64> {
    let den = bigint_mod(q.denom(), p);
    let inv = inv_mod(den, p)?;
    Some(mul_mod(bigint_mod(q.numer(), p), inv, p))
}

/// 2-adic valuation of a nonzero integer.
pub fn v2(a: &BigInt) -> u64 {
    debug_assert!(!a.is_zero());
    a.trailing_zeros().unwrap_or(0)
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation(a: &BigInt, p: u64) -> u64 {
    debug_assert!(!a.is_zero());
    let p = BigInt::from(p);
    let mut a = a.clone();
    let mut v = 0;
    loop {
        let (q, r) = a.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        a = q;
        v += 1;
    }
}

/// `p`-adic valuation of a nonzero rational.
pub fn valuation_rational(q: &BigRational, p: u64) -> i64 {
    valuation(q.numer(), p) as i64 - valuation(q.denom(), p) as i64
}

pub fn isqrt_u64(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x.saturating_mul(x) > n {
        x -= 1;
    }
    while (x + 1).saturating_mul(x + 1) <= n {
        x += 1;
    }
    x
}

pub fn is_squarefree(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let n = d.unsigned_abs();
    let mut m = n;
    let mut q = 2u64;
    while q * q <= m {
        if m % q == 0 {
            m /= q;
            if m % q == 0 {
                return false;
            }
        }
        q += 1;
    }
    true
}

/// Prime factorization by trial division.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= n {
        if n % q == 0 {
            let mut e = 0;
            while n % q == 0 {
                n /= q;
                e += 1;
            }
            out.push((q, e));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Split a nonzero integer as `m^2 * d` with `d` squarefree; returns `d`.
pub fn squarefree_kernel(n: &BigInt) -> Option<i64> {
    let sign = if n.is_negative() { -1 } else { 1 };
    let a = n.abs().to_u64()?;
    let mut d: i64 = 1;
    for (p, e) in factor_u64(a) {
        if e % 2 == 1 {
            d *= p as i64;
        }
    }
    Some(sign * d)
}

pub fn big_pow(base: &BigInt, exp: u32) -> BigInt {
    num_traits::pow(base.clone(), exp as usize)
}

pub fn biguint_from_u64_pow(p: u64, d: u32) -> BigUint {
    num_traits::pow(BigUint::from(p), d as usize)
}

pub fn sign_of(a: &BigInt) -> i32 {
    match a.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

/// Parse `"a"` or `"a/b"` exactly; no floating-point forms are accepted.
pub fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("malformed rational {s:?}"))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
    }
}
