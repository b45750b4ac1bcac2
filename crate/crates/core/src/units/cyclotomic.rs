//! The solution `lambda = 2 + zeta + zeta^-1`, `mu = -1 - zeta - zeta^-1` in
//! `Q(zeta_p)` and the cyclotomic units of the real subfield.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::field::{FieldElement, NumberField};
use crate::poly::{cyclotomic_poly, real_cyclotomic_min_poly};

/// One exact identity and whether it held.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicReport {
    pub p: u64,
    pub lambda: String,
    pub mu: String,
    pub checks: Vec<IdentityCheck>,
}

impl CyclotomicReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Builds `Q(zeta_p)` and its real subfield and checks the identities exactly.
pub fn verify_cyclotomic_identities(p: u64) -> Result<CyclotomicReport> {
    let full = NumberField::new(cyclotomic_poly(p)?)?;
    if p < 5 {
        return Err(domain("the identities are stated for p >= 5"));
    }
    let zeta = FieldElement::theta(&full);
    let zinv = zeta.inverse()?;
    let one = FieldElement::one(&full);
    let two = FieldElement::from_int(&full, 2);
    let lambda = &(&two + &zeta) + &zinv;
    let mu = -&(&(&one + &zeta) + &zinv);
    let one_minus = |x: &FieldElement| &one - x;
    let mut checks = Vec::new();
    let mut push = |name: &str, holds: bool| checks.push(IdentityCheck { name: name.to_string(), holds });
    push("lambda + mu = 1", (&lambda + &mu).is_one());
    push("lambda is a unit", lambda.is_unit());
    push("mu is a unit", mu.is_unit());
    push(
        "mu (1 - zeta) = -zeta^-1 (1 - zeta^3)",
        &mu * &one_minus(&zeta) == -&(&zinv * &one_minus(&zeta.pow(3)?)),
    );
    push("lambda = (1 + zeta)(1 + zeta^-1)", lambda == &(&one + &zeta) * &(&one + &zinv));

    let real = NumberField::new(real_cyclotomic_min_poly(p)?)?;
    let theta = FieldElement::theta(&real);
    let rl = &FieldElement::from_int(&real, 2) + &theta;
    let rm = -&(&FieldElement::one(&real) + &theta);
    push("real subfield: lambda + mu = 1", (&rl + &rm).is_one());
    push("real subfield: lambda is a unit", rl.is_unit());
    push("real subfield: mu is a unit", rm.is_unit());
    Ok(CyclotomicReport { p, lambda: lambda.to_string(), mu: mu.to_string(), checks })
}

/// Units `u_a = (zeta^a - zeta^-a) / (zeta - zeta^-1)`, `2 <= a <= (p-1)/2`,
/// in `Q(zeta_p)^+ = Q[x]/(m)`, `x = zeta + zeta^-1`. They satisfy `u_1 = 1`,
/// `u_2 = x` and `u_{a+1} = x u_a - u_{a-1}`.
pub fn real_cyclotomic_units(field: &Arc<NumberField>, p: u64) -> Result<Vec<FieldElement>> {
    if field.min_poly() != &real_cyclotomic_min_poly(p)? {
        return Err(domain(format!("field is not presented as Q(zeta_{p})^+")));
    }
    let x = FieldElement::theta(field);
    let m = ((p - 1) / 2) as usize;
    let mut prev = FieldElement::one(field);
    let mut cur = x.clone();
    let mut out = Vec::with_capacity(m.saturating_sub(1));
    for _ in 2..=m {
        out.push(cur.clone());
        let next = &(&x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(out)
}
