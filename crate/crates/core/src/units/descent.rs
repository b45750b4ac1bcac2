//! Normalization and descent for S-unit solutions at an inert 2, and the
//! valuation conditions on them.

use serde::{Deserialize, Serialize};

use super::{SolutionKind, UnitEqSolution};
use crate::error::{domain, precondition, Result};
use crate::field::FieldElement;

/// An equivalent solution with `v(lambda) >= 0` and `v(mu) = 0`.
///
/// Negative valuations force `v(lambda) = v(mu) = -n`, and then
/// `(1/lambda, -mu/lambda)` has valuations `(n, 0)`. Otherwise one of the two
/// valuations is 0 and at most a swap is needed. The value `n` is unchanged.
pub fn normalize_solution(s: &UnitEqSolution) -> Result<UnitEqSolution> {
    let (vl, vm) = (s.v_lambda, s.v_mu);
    classify_valuation_pair(vl, vm)?;
    if vl < 0 {
        let inv = s.lambda.inverse()?;
        let mu = -&(&s.mu * &inv);
        return UnitEqSolution::new(inv, mu, s.kind, -vl, 0);
    }
    if vm > 0 {
        return UnitEqSolution::new(s.mu.clone(), s.lambda.clone(), s.kind, vm, vl);
    }
    Ok(s.clone())
}

/// `(lambda', mu') = ((1 + delta)^2 / 4 delta, -(1 - delta)^2 / 4 delta)`,
/// which sum to 1 for any nonzero `delta`.
pub fn descent_pair(delta: &FieldElement) -> Result<(FieldElement, FieldElement)> {
    let k = delta.field();
    let one = FieldElement::one(k);
    let four_delta = &FieldElement::from_int(k, 4) * delta;
    let inv = four_delta.inverse()?;
    let l1 = &one + delta;
    let l2 = &one - delta;
    Ok((&l1.square() * &inv, -&(&l2.square() * &inv)))
}

/// One descent step from a normalized solution with `v(lambda) = n >= 2` and
/// `mu = delta^2`.
///
/// `lambda = (1 + delta)(1 - delta)` and the factors sum to 2, so one has
/// valuation 1 and the other `n - 1`; the sign of `delta` is chosen so that
/// `1 + delta` carries `n - 1`. The result has `n' = 2n - 4`.
pub fn descent_step(s: &UnitEqSolution, delta: &FieldElement) -> Result<UnitEqSolution> {
    let q = s.lambda.field().inert_two()?;
    let n = q.ord(&s.lambda)?;
    if n < 2 {
        return Err(precondition(format!("descent needs v(lambda) >= 2, got {n}")));
    }
    if q.ord(&s.mu)? != 0 {
        return Err(precondition("descent needs a normalized solution"));
    }
    if delta.square() != s.mu {
        return Err(domain(format!("{delta} squared is not mu")));
    }
    if !delta.is_unit() {
        return Err(domain(format!("{delta} is not a unit")));
    }
    let one = FieldElement::one(delta.field());
    let (vp, vm) = (q.ord(&(&one + delta))?, q.ord(&(&one - delta))?);
    let delta = if (vp, vm) == (n - 1, 1) {
        delta.clone()
    } else if (vp, vm) == (1, n - 1) {
        -delta
    } else {
        return Err(domain(format!("valuations ({vp}, {vm}) of 1 +- delta do not split {n}")));
    };
    let (lambda, mu) = descent_pair(&delta)?;
    let (vl, vmu) = (q.ord(&lambda)?, q.ord(&mu)?);
    debug_assert_eq!((vl, vmu), (2 * n - 4, 0));
    UnitEqSolution::new(lambda, mu, SolutionKind::SUnit, vl, vmu)
}

/// Outcome of the two valuation conditions on an S-unit solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FsCheck {
    pub holds: bool,
    pub n_at_most_four: bool,
    pub product_one_mod_three: bool,
    pub detail: String,
}

/// `max(|v(lambda)|, |v(mu)|) <= 4` and `v(lambda mu) = 1 mod 3`.
pub fn check_fs_conditions(s: &UnitEqSolution) -> FsCheck {
    let n_ok = s.n_value <= 4;
    let sum = s.v_lambda + s.v_mu;
    let mod_ok = sum.rem_euclid(3) == 1;
    let mut failing = Vec::new();
    if !n_ok {
        failing.push(format!("n = {} exceeds 4", s.n_value));
    }
    if !mod_ok {
        failing.push(format!("v(lambda mu) = {sum} is not 1 mod 3"));
    }
    let detail = if failing.is_empty() {
        format!("n = {}, v(lambda mu) = {sum}", s.n_value)
    } else {
        failing.join("; ")
    };
    FsCheck { holds: n_ok && mod_ok, n_at_most_four: n_ok, product_one_mod_three: mod_ok, detail }
}

/// Valuation pairs allowed for solutions at an inert 2.
pub const ALLOWED_PAIRS: [(i64, i64); 6] = [(-4, -4), (-1, -1), (1, 0), (0, 1), (4, 0), (0, 4)];

/// Whether `(v(lambda), v(mu))` lies in the allowed set. Pairs that no
/// solution of `lambda + mu = 1` can have are rejected.
pub fn classify_valuation_pair(v_lambda: i64, v_mu: i64) -> Result<bool> {
    let inconsistent = (v_lambda.min(v_mu) < 0 && v_lambda != v_mu) || (v_lambda > 0 && v_mu > 0);
    if inconsistent {
        return Err(domain(format!("valuation pair ({v_lambda}, {v_mu}) is impossible when lambda + mu = 1")));
    }
    Ok(ALLOWED_PAIRS.contains(&(v_lambda, v_mu)))
}
