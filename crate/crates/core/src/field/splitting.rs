//! Prime splitting read off from the defining polynomial mod p, certified by
//! Dedekind's criterion, plus the residue map at a totally ramified prime and
//! the valuation at an inert prime above 2.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{FieldElement, NumberField};
use crate::arith::{bigint_mod, inv_mod, is_prime, mul_mod, v2, valuation};
use crate::error::{domain, precondition, Result};
use crate::poly::{factor_mod_p_seeded, FactorizationModP, ModPolynomial};

/// Decomposition shape of `p O_F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingReport {
    pub prime: u64,
    /// True when `Z[theta]` is p-maximal, so the pattern is the true splitting.
    pub certified: bool,
    /// `(e, f)` pairs in the order of the factors of the defining polynomial mod p.
    pub pattern: Vec<(u32, usize)>,
}

impl SplittingReport {
    pub fn is_totally_ramified(&self, n: usize) -> bool {
        self.pattern == [(n as u32, 1)]
    }

    pub fn is_inert(&self, n: usize) -> bool {
        self.pattern == [(1, n)]
    }

    pub fn is_totally_split(&self, n: usize) -> bool {
        self.pattern.len() == n && self.pattern.iter().all(|&ef| ef == (1, 1))
    }
}

/// Answer to a yes/no splitting question; never true without certification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingCheck {
    pub holds: bool,
    pub warning: Option<String>,
    pub report: SplittingReport,
}

impl NumberField {
    pub fn factor_mod(&self, p: u64) -> Result<FactorizationModP> {
        factor_mod_p_seeded(self.min_poly(), p, self.config().seed)
    }

    /// Dedekind's criterion for `Z[theta]` at `p`.
    ///
    /// With `f = prod g_i^e_i` mod p, `g` the lifted radical and `h` a lift of
    /// `f / g`, the order is p-maximal iff `gcd(F, g, h) = 1` mod p where
    /// `F = (g h - f) / p`.
    pub fn dedekind_p_maximal(&self, p: u64) -> Result<bool> {
        if !is_prime(p) {
            return Err(domain(format!("{p} is not prime")));
        }
        let fac = self.factor_mod(p)?;
        Ok(dedekind_from_factorization(self, &fac))
    }

    pub fn splitting_type(&self, p: u64) -> Result<SplittingReport> {
        if !is_prime(p) {
            return Err(domain(format!("{p} is not prime")));
        }
        let fac = self.factor_mod(p)?;
        Ok(SplittingReport {
            prime: p,
            certified: dedekind_from_factorization(self, &fac),
            pattern: fac.pattern(),
        })
    }

    fn check(&self, p: u64, pred: impl Fn(&SplittingReport, usize) -> bool) -> Result<SplittingCheck> {
        let report = self.splitting_type(p)?;
        let warning = (!report.certified)
            .then(|| format!("uncertified: equation order not {p}-maximal"));
        Ok(SplittingCheck {
            holds: report.certified && pred(&report, self.degree()),
            warning,
            report,
        })
    }

    pub fn is_totally_ramified(&self, p: u64) -> Result<SplittingCheck> {
        self.check(p, SplittingReport::is_totally_ramified)
    }

    pub fn is_inert(&self, p: u64) -> Result<SplittingCheck> {
        self.check(p, SplittingReport::is_inert)
    }

    pub fn is_totally_split(&self, p: u64) -> Result<SplittingCheck> {
        self.check(p, SplittingReport::is_totally_split)
    }

    /// Residue map at the prime above a certified totally ramified `p`.
    pub fn totally_ramified(self: &Arc<Self>, p: u64) -> Result<TotallyRamified> {
        let check = self.is_totally_ramified(p)?;
        if !check.holds {
            return Err(precondition(match check.warning {
                Some(w) => format!("{p} not certified totally ramified ({w})"),
                None => format!("{p} is not totally ramified"),
            }));
        }
        let fac = self.factor_mod(p)?;
        let c = fac.factors[0].0.coeffs()[0];
        Ok(TotallyRamified { field: self.clone(), prime: p, root: (p - c) % p })
    }

    /// Valuation at `2 O_F` for a certified inert 2.
    pub fn inert_two(self: &Arc<Self>) -> Result<InertTwo> {
        let check = self.is_inert(2)?;
        if !check.holds {
            return Err(precondition(match check.warning {
                Some(w) => format!("2 not certified inert ({w})"),
                None => "2 is not inert".to_string(),
            }));
        }
        Ok(InertTwo { field: self.clone() })
    }
}

fn dedekind_from_factorization(field: &NumberField, fac: &FactorizationModP) -> bool {
    let p = fac.modulus;
    let fbar = ModPolynomial::new(
        p,
        field.int_coeffs().iter().map(|c| bigint_mod(c, p)).collect(),
    );
    let g = fac
        .factors
        .iter()
        .fold(ModPolynomial::one(p), |acc, (gi, _)| acc.mul(gi));
    let h = fbar.exact_div(&g);
    let lift = |m: &ModPolynomial| -> Vec<BigInt> { m.coeffs().iter().map(|&c| BigInt::from(c)).collect() };
    let (gl, hl) = (lift(&g), lift(&h));
    let f = field.int_coeffs();
    let mut diff = vec![BigInt::zero(); f.len()];
    for (i, a) in gl.iter().enumerate() {
        for (j, b) in hl.iter().enumerate() {
            diff[i + j] += a * b;
        }
    }
    let pb = BigInt::from(p);
    let big_f: Vec<u64> = diff
        .iter()
        .zip(f)
        .map(|(a, b)| {
            let d = a - b;
            debug_assert!((&d % &pb).is_zero());
            bigint_mod(&(d / &pb), p)
        })
        .collect();
    let big_f = ModPolynomial::new(p, big_f);
    big_f.gcd(&g).gcd(&h).degree() == Some(0)
}

/// The residue map `O_F -> F_p` at the unique prime above a totally ramified `p`.
#[derive(Clone, Debug)]
pub struct TotallyRamified {
    field: Arc<NumberField>,
    prime: u64,
    root: u64,
}

impl TotallyRamified {
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// `a` with `f = (x - a)^n` mod p; the image of `theta`.
    pub fn theta_residue(&self) -> u64 {
        self.root
    }

    /// Image of `alpha` under `theta -> a`; requires `p` prime to the denominator.
    pub fn residue(&self, alpha: &FieldElement) -> Result<u64> {
        debug_assert!(Arc::ptr_eq(&self.field, alpha.field()) || self.field.min_poly() == alpha.field().min_poly());
        let p = self.prime;
        let inv = inv_mod(bigint_mod(alpha.denominator(), p), p)
            .ok_or_else(|| domain(format!("element is not integral at the prime above {p}")))?;
        let v = alpha
            .numerators()
            .iter()
            .rev()
            .fold(0u64, |acc, c| (mul_mod(acc, self.root, p) + bigint_mod(c, p)) % p);
        Ok(mul_mod(v, inv, p))
    }
}

/// Valuation at `q = 2 O_F` when 2 is certified inert.
#[derive(Clone, Debug)]
pub struct InertTwo {
    field: Arc<NumberField>,
}

impl InertTwo {
    /// `v_q(alpha) = v_2(N(alpha)) / n`.
    pub fn ord(&self, alpha: &FieldElement) -> Result<i64> {
        if alpha.is_zero() {
            return Err(domain("valuation of zero"));
        }
        let norm = alpha.norm();
        let v = v2(norm.numer()) as i64 - v2(norm.denom()) as i64;
        let n = self.field.degree() as i64;
        if v % n != 0 {
            return Err(domain(format!("2-adic valuation {v} of the norm is not divisible by {n}")));
        }
        Ok(v / n)
    }

    /// Same valuation from the coordinates: with `Z[theta]` 2-maximal and
    /// `q = 2 O_F`, it is the least 2-adic valuation of a coordinate.
    pub fn ord_from_coords(&self, alpha: &FieldElement) -> Result<i64> {
        if alpha.is_zero() {
            return Err(domain("valuation of zero"));
        }
        let m = alpha
            .numerators()
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| v2(&c.abs()))
            .min()
            .unwrap();
        Ok(m as i64 - valuation(alpha.denominator(), 2) as i64)
    }
}

impl FieldElement {
    /// Residue at the prime above `p`, which must be certified totally ramified.
    pub fn residue_tot_ramified(&self, p: u64) -> Result<u64> {
        self.field().totally_ramified(p)?.residue(self)
    }

    /// Valuation at `2 O_F`, which must be certified prime.
    pub fn ord_at_inert_two(&self) -> Result<i64> {
        self.field().inert_two()?.ord(self)
    }
}
