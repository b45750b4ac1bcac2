//! Cyclotomic polynomials of prime index and the minimal polynomial of
//! `zeta + zeta^-1`.

use num_rational::BigRational;
use num_traits::One;

use super::Polynomial;
use crate::arith::is_prime;
use crate::error::{domain, Result};

/// `1 + x + ... + x^(p-1)`.
pub fn cyclotomic_poly(p: u64) -> Result<Polynomial> {
    if !is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    Ok(Polynomial::new(vec![BigRational::one(); p as usize]))
}

/// Minimal polynomial of `zeta_p + zeta_p^-1`, degree `(p-1)/2`.
///
/// Writes `Phi_p(y) / y^m = 1 + sum_{k=1..m} (y^k + y^-k)` with `m = (p-1)/2`
/// and substitutes `y^k + y^-k = D_k(x)`, where `D_0 = 2`, `D_1 = x` and
/// `D_{k+1} = x D_k - D_{k-1}`.
pub fn real_cyclotomic_min_poly(p: u64) -> Result<Polynomial> {
    if !is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    if p < 5 {
        return Err(domain("real cyclotomic subfield needs p >= 5"));
    }
    let m = ((p - 1) / 2) as usize;
    let x = Polynomial::x();
    let mut prev = Polynomial::from_ints(&[2]);
    let mut cur = x.clone();
    let mut acc = &Polynomial::one() + &cur;
    for _ in 1..m {
        let next = &(&x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
        acc = &acc + &cur;
    }
    Ok(acc)
}
