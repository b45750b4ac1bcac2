//! Both sides of the ambiguous class number formula for `K = Q(sqrt d)` over Q.
//!
//! The left side counts ideal classes of K fixed by the nontrivial
//! automorphism, acting on forms as `(a, b, c) -> (a, -b, c)`. The right side
//! is `h_Q e(K/Q) / ([K:Q] [Z^x : Z^x cap N K^x])`, where `e(K/Q)` is the
//! product of ramification indices over all places, including the real place
//! when K is imaginary.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{factor_u64, is_squarefree};
use crate::error::{domain, Result};
use crate::quadratic::{minus_one_is_global_norm, FormClassGroup, Place, QuadraticField};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChevalleyReport {
    pub d: i64,
    pub disc: i64,
    pub lhs: u64,
    pub rhs: u64,
    pub e_product: u64,
    pub norm_index: u64,
    pub ramified_places: Vec<Place>,
}

impl ChevalleyReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Number of classes of `Cl(K)` fixed by conjugation.
///
/// For real K the ordinary class group is the quotient of the narrow one by
/// the class of `(-1, *, *)`, so a wide class is fixed when conjugation sends
/// one of its narrow members into the same orbit.
pub fn ambiguous_lhs(d: i64) -> Result<u64> {
    let k = QuadraticField::new(d)?;
    let group = FormClassGroup::new(k.disc())?;
    let wide = group.wide_classes();
    let mut fixed = 0;
    for orbit in &wide {
        let rep = group.representatives()[orbit[0]];
        let image = group.class_of(&rep.conjugate());
        if orbit.contains(&image) {
            fixed += 1;
        }
    }
    Ok(fixed)
}

/// Right side of the formula with its ingredients.
pub fn ambiguous_rhs(d: i64) -> Result<ChevalleyReport> {
    let k = QuadraticField::new(d)?;
    let disc = k.disc();
    let mut ramified: Vec<Place> = factor_u64(disc.unsigned_abs())
        .into_iter()
        .map(|(p, _)| Place::Finite(p))
        .collect();
    if d < 0 {
        ramified.push(Place::Infinite);
    }
    let e_product = 1u64 << ramified.len();
    let norm_index = if minus_one_is_global_norm(d) { 1 } else { 2 };
    let denom = 2 * norm_index;
    if e_product % denom != 0 {
        return Err(domain(format!("formula value {e_product}/{denom} is not an integer for d = {d}")));
    }
    Ok(ChevalleyReport {
        d,
        disc,
        lhs: 0,
        rhs: e_product / denom,
        e_product,
        norm_index,
        ramified_places: ramified,
    })
}

/// Both sides for one `d`.
pub fn chevalley_report(d: i64) -> Result<ChevalleyReport> {
    let mut r = ambiguous_rhs(d)?;
    r.lhs = ambiguous_lhs(d)?;
    Ok(r)
}

/// Reports for every squarefree `d` in `[dmin, dmax]` other than 0 and 1,
/// ordered by `|d|` and then by `d`.
pub fn chevalley_scan(dmin: i64, dmax: i64) -> Result<Vec<ChevalleyReport>> {
    if dmin > dmax {
        return Err(domain(format!("empty range [{dmin}, {dmax}]")));
    }
    let ds: Vec<i64> = (dmin..=dmax)
        .filter(|&d| d != 0 && d != 1 && is_squarefree(d))
        .collect();
    let mut reports = ds
        .par_iter()
        .map(|&d| chevalley_report(d))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|r| (r.d.unsigned_abs(), r.d));
    Ok(reports)
}
