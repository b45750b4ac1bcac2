//! Bounded search for solutions of `lambda + mu = 1` in units and in
//! `{q}`-units, `q = 2 O_F` for fields where 2 is inert.
//!
//! Searches are complete only within the exponent box they are given; every
//! returned pair is re-verified by exact arithmetic.

pub mod congruence;
pub mod cyclotomic;
pub mod descent;
pub mod enumerate;

use std::collections::HashSet;
use std::sync::Arc;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, precondition, Result};
use crate::field::{FieldElement, NumberField};

pub use congruence::{unit_congruence_check, CongruenceReport};
pub use cyclotomic::{real_cyclotomic_units, verify_cyclotomic_identities, CyclotomicReport};
pub use descent::{
    check_fs_conditions, classify_valuation_pair, descent_pair, descent_step, normalize_solution, FsCheck,
};
pub use enumerate::{box_size, enumerate_units};

/// Generators of a subgroup of `O_F^x`.
#[derive(Clone, Debug)]
pub struct UnitGroupDesc {
    field: Arc<NumberField>,
    torsion: FieldElement,
    generators: Vec<FieldElement>,
    inverses: Vec<FieldElement>,
    certified_fundamental: bool,
}

impl UnitGroupDesc {
    /// Rejects generators that are not units. The torsion generator defaults to -1.
    pub fn new(
        field: &Arc<NumberField>,
        torsion: Option<FieldElement>,
        generators: Vec<FieldElement>,
        certified_fundamental: bool,
    ) -> Result<Self> {
        let torsion = torsion.unwrap_or_else(|| FieldElement::from_int(field, -1));
        if !torsion.is_unit() {
            return Err(domain(format!("torsion generator {torsion} is not a unit")));
        }
        for (i, g) in generators.iter().enumerate() {
            if !g.is_unit() {
                return Err(domain(format!("generator {i} ({g}) is not a unit")));
            }
        }
        let inverses = generators
            .iter()
            .map(FieldElement::inverse)
            .collect::<Result<Vec<_>>>()?;
        Ok(UnitGroupDesc {
            field: field.clone(),
            torsion,
            generators,
            inverses,
            certified_fundamental,
        })
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn torsion(&self) -> &FieldElement {
        &self.torsion
    }

    pub fn generators(&self) -> &[FieldElement] {
        &self.generators
    }

    pub(crate) fn inverses(&self) -> &[FieldElement] {
        &self.inverses
    }

    pub fn certified_fundamental(&self) -> bool {
        self.certified_fundamental
    }

    pub(crate) fn torsion_times(&self, u: &FieldElement) -> FieldElement {
        if self.torsion == FieldElement::from_int(&self.field, -1) {
            -u
        } else {
            &self.torsion * u
        }
    }

    /// `prod u_i^e_i`.
    pub fn power_product(&self, exps: &[i64]) -> FieldElement {
        exps.iter()
            .zip(&self.generators)
            .fold(FieldElement::one(&self.field), |acc, (&e, g)| {
                &acc * &g.pow(e).expect("units are invertible")
            })
    }

    /// Real logarithmic embeddings `log |sigma_i(u)|` of the generators, one row
    /// per generator, at the real roots of the defining polynomial.
    pub fn log_embeddings(&self) -> Vec<Vec<f64>> {
        let roots = self.field.real_roots();
        self.generators
            .iter()
            .map(|g| roots.iter().map(|&r| g.embed(r).abs().ln()).collect())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolutionKind {
    Unit,
    SUnit,
}

/// A verified pair with `lambda + mu = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitEqSolution {
    pub lambda: FieldElement,
    pub mu: FieldElement,
    pub kind: SolutionKind,
    pub v_lambda: i64,
    pub v_mu: i64,
    pub n_value: u64,
}

impl UnitEqSolution {
    /// Checks `lambda + mu = 1` exactly and records the given valuations.
    pub fn new(lambda: FieldElement, mu: FieldElement, kind: SolutionKind, v_lambda: i64, v_mu: i64) -> Result<Self> {
        if !(&lambda + &mu).is_one() {
            return Err(domain(format!("{lambda} + {mu} is not 1")));
        }
        Ok(UnitEqSolution {
            lambda,
            mu,
            kind,
            v_lambda,
            v_mu,
            n_value: v_lambda.unsigned_abs().max(v_mu.unsigned_abs()),
        })
    }

    /// An S-unit solution with both valuations read off at the inert prime above 2.
    pub fn with_valuations(lambda: FieldElement, mu: FieldElement) -> Result<Self> {
        let q = lambda.field().inert_two()?;
        let (a, b) = (q.ord(&lambda)?, q.ord(&mu)?);
        Self::new(lambda, mu, SolutionKind::SUnit, a, b)
    }

    pub fn record(&self) -> SolutionRecord {
        let strs = |x: &FieldElement| x.coeffs().iter().map(BigRational::to_string).collect();
        SolutionRecord {
            lambda: strs(&self.lambda),
            mu: strs(&self.mu),
            kind: self.kind,
            v_lambda: self.v_lambda,
            v_mu: self.v_mu,
            n_value: self.n_value,
        }
    }
}

/// Serializable form of a solution, coordinates as exact rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub lambda: Vec<String>,
    pub mu: Vec<String>,
    pub kind: SolutionKind,
    pub v_lambda: i64,
    pub v_mu: i64,
    pub n_value: u64,
}

/// Solutions found in a box, with the data needed to interpret the count.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub bound: u32,
    pub k_bound: Option<u32>,
    pub units_enumerated: usize,
    /// Ordered pairs: `(lambda, mu)` and `(mu, lambda)` count separately.
    pub solutions: Vec<UnitEqSolution>,
}

/// All `(lambda, 1 - lambda)` with both in the box.
pub fn solve_unit_equation(group: &UnitGroupDesc, bound: u32) -> Result<SearchResult> {
    let units = enumerate_units(group, bound);
    let set: HashSet<&FieldElement> = units.iter().collect();
    let one = FieldElement::one(group.field());
    let mut solutions = units
        .par_iter()
        .filter_map(|l| {
            let mu = &one - l;
            set.contains(&mu).then(|| UnitEqSolution::new(l.clone(), mu, SolutionKind::Unit, 0, 0))
        })
        .collect::<Result<Vec<_>>>()?;
    solutions.sort_by(|a, b| a.lambda.cmp(&b.lambda));
    solutions.dedup();
    for s in &solutions {
        debug_assert!(s.lambda.is_unit() && s.mu.is_unit());
    }
    Ok(SearchResult { bound, k_bound: None, units_enumerated: units.len(), solutions })
}

/// All `(lambda, 1 - lambda)` with `lambda = 2^k u`, `mu = 2^l u'`, `u, u'` in
/// the box and `|k|, |l| <= k_bound`. Requires 2 to be certified inert.
pub fn solve_s_unit_equation(group: &UnitGroupDesc, bound: u32, k_bound: u32) -> Result<SearchResult> {
    let field = group.field();
    let q = field
        .inert_two()
        .map_err(|e| precondition(format!("S-unit search needs 2 inert: {e}")))?;
    let units = enumerate_units(group, bound);
    let set: HashSet<&FieldElement> = units.iter().collect();
    let one = FieldElement::one(field);
    let kb = k_bound as i64;
    let powers: Vec<(i64, FieldElement)> = (-kb..=kb)
        .map(|k| {
            let two = FieldElement::from_int(field, 2);
            (k, two.pow(k).expect("2 is invertible"))
        })
        .collect();
    let candidates: Vec<(i64, &FieldElement)> = powers.iter().flat_map(|(k, _)| units.iter().map(move |u| (*k, u))).collect();
    let mut solutions = candidates
        .par_iter()
        .filter_map(|&(k, u)| {
            let lambda = u * &powers[(k + kb) as usize].1;
            let mu = &one - &lambda;
            if mu.is_zero() {
                return None;
            }
            let v = q.ord_from_coords(&mu).ok()?;
            if v.abs() > kb {
                return None;
            }
            let unit_part = &mu * &powers[(kb - v) as usize].1;
            set.contains(&unit_part).then_some((lambda, mu))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .map(|(l, m)| UnitEqSolution::with_valuations(l, m))
        .collect::<Result<Vec<_>>>()?;
    solutions.sort_by(|a, b| a.lambda.cmp(&b.lambda));
    solutions.dedup();
    Ok(SearchResult { bound, k_bound: Some(k_bound), units_enumerated: units.len(), solutions })
}

/// A unit `delta` in the box with `delta^2 = mu`, if one is there.
pub fn find_square_root_unit(group: &UnitGroupDesc, bound: u32, mu: &FieldElement) -> Option<FieldElement> {
    enumerate_units(group, bound).into_iter().find(|d| &d.square() == mu)
}
