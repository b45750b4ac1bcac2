//! The congruence `u^r = 1` at the prime above a totally ramified `p`, with
//! `r = gcd(2 h, p - 1)`, checked on the generators of a unit group.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::UnitGroupDesc;
use crate::arith::pow_mod;
use crate::error::Result;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "reason")]
pub enum CongruenceOutcome {
    Holds,
    Fails,
    Inconclusive(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceReport {
    pub prime: u64,
    pub r: u64,
    /// Residues of the torsion generator followed by the listed generators.
    pub residues: Vec<u64>,
    /// The same residues raised to `r`.
    pub powers: Vec<u64>,
    pub outcome: CongruenceOutcome,
}

/// Since the congruence is multiplicative it suffices to test the generators.
pub fn unit_congruence_check(group: &UnitGroupDesc, p: u64, class_number: u64) -> Result<CongruenceReport> {
    let r = (2 * class_number).gcd(&(p - 1));
    let inconclusive = |reason: String| CongruenceReport {
        prime: p,
        r,
        residues: vec![],
        powers: vec![],
        outcome: CongruenceOutcome::Inconclusive(reason),
    };
    let tr = match group.field().totally_ramified(p) {
        Ok(tr) => tr,
        Err(Error::Precondition(reason)) => return Ok(inconclusive(reason)),
        Err(e) => return Err(e),
    };
    let residues = std::iter::once(group.torsion())
        .chain(group.generators())
        .map(|u| tr.residue(u))
        .collect::<Result<Vec<_>>>()?;
    let powers: Vec<u64> = residues.iter().map(|&a| pow_mod(a, r, p)).collect();
    let outcome = if powers.iter().all(|&x| x == 1) {
        CongruenceOutcome::Holds
    } else {
        CongruenceOutcome::Fails
    };
    Ok(CongruenceReport { prime: p, r, residues, powers, outcome })
}
