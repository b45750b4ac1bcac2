//! Report documents: a JSON form that round-trips and a plain text rendering.

use std::fmt::Write;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::chevalley::ChevalleyReport;
use crate::criteria::{CriterionReport, Verdict};
use crate::error::{Error, Result};
use crate::field::{evertse_bound, galois_test, GaloisEvidence, IrreducibilityCertificate, NumberField, SplittingReport};
use crate::record::FieldRecord;
use crate::units::{CyclotomicReport, SearchResult, SolutionKind, SolutionRecord};

/// Convention used when counting unit-equation solutions.
pub const COUNT_CONVENTION: &str =
    "ordered pairs: (lambda, mu) and (mu, lambda) are counted separately; lambda is keyed by its exact coordinates";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeSplitting {
    pub report: SplittingReport,
    pub totally_ramified: bool,
    pub inert: bool,
    pub totally_split: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldAnalysis {
    pub label: String,
    pub degree: usize,
    pub signature: (usize, usize),
    pub discriminant: String,
    pub irreducibility: IrreducibilityCertificate,
    pub evertse_bound: String,
    pub splitting: Vec<PrimeSplitting>,
    pub galois: Option<GaloisEvidence>,
}

/// Degree, signature, certified splitting at `primes`, and the Evertse bound.
pub fn analyze_field(rec: &FieldRecord, field: &Arc<NumberField>, primes: &[u64], with_galois: bool) -> Result<FieldAnalysis> {
    let n = field.degree();
    let (r1, r2) = field.signature();
    let splitting = primes
        .iter()
        .map(|&p| {
            let report = field.splitting_type(p)?;
            Ok(PrimeSplitting {
                totally_ramified: report.certified && report.is_totally_ramified(n),
                inert: report.certified && report.is_inert(n),
                totally_split: report.certified && report.is_totally_split(n),
                report,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FieldAnalysis {
        label: rec.label.clone(),
        degree: n,
        signature: (r1, r2),
        discriminant: field.discriminant().to_string(),
        irreducibility: field.certificate(),
        evertse_bound: evertse_bound(r1 as u32, r2 as u32).to_string(),
        splitting,
        galois: if with_galois { Some(galois_test(field)?) } else { None },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionListing {
    pub label: String,
    pub kind: SolutionKind,
    pub bound: u32,
    pub k_bound: Option<u32>,
    pub rank: usize,
    pub units_enumerated: usize,
    pub convention: String,
    pub count: usize,
    pub solutions: Vec<SolutionRecord>,
}

impl SolutionListing {
    pub fn new(label: &str, rank: usize, result: &SearchResult) -> Self {
        SolutionListing {
            label: label.to_string(),
            kind: if result.k_bound.is_some() { SolutionKind::SUnit } else { SolutionKind::Unit },
            bound: result.bound,
            k_bound: result.k_bound,
            rank,
            units_enumerated: result.units_enumerated,
            convention: COUNT_CONVENTION.to_string(),
            count: result.solutions.len(),
            solutions: result.solutions.iter().map(|s| s.record()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "items", rename_all = "snake_case")]
pub enum ReportDocument {
    Fields(Vec<FieldAnalysis>),
    Criteria(Vec<CriterionReport>),
    Solutions(Vec<SolutionListing>),
    Chevalley(Vec<ChevalleyReport>),
    Cyclotomic(Vec<CyclotomicReport>),
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("{}:{}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            ReportDocument::Fields(items) => items.iter().for_each(|a| field_text(&mut out, a)),
            ReportDocument::Criteria(items) => items.iter().for_each(|r| criterion_text(&mut out, r)),
            ReportDocument::Solutions(items) => items.iter().for_each(|s| solutions_text(&mut out, s)),
            ReportDocument::Chevalley(items) => chevalley_text(&mut out, items),
            ReportDocument::Cyclotomic(items) => items.iter().for_each(|c| cyclotomic_text(&mut out, c)),
        }
        out
    }
}

fn field_text(out: &mut String, a: &FieldAnalysis) {
    let _ = writeln!(out, "{}", a.label);
    let _ = writeln!(out, "  degree {}, signature ({}, {})", a.degree, a.signature.0, a.signature.1);
    let _ = writeln!(out, "  discriminant {}", a.discriminant);
    let _ = writeln!(out, "  irreducibility {:?}", a.irreducibility);
    let _ = writeln!(out, "  evertse bound {}", a.evertse_bound);
    for s in &a.splitting {
        let kind = if s.totally_ramified {
            "totally ramified"
        } else if s.inert {
            "inert"
        } else if s.totally_split {
            "totally split"
        } else {
            "other"
        };
        let cert = if s.report.certified { "certified" } else { "uncertified" };
        let _ = writeln!(out, "  p = {}: (e, f) = {:?}, {kind}, {cert}", s.report.prime, s.report.pattern);
    }
    if let Some(g) = &a.galois {
        let line = match g {
            GaloisEvidence::Galois { automorphisms, split_prime } => {
                format!("Galois, {} automorphisms verified (roots lifted at {split_prime})", automorphisms.len())
            }
            GaloisEvidence::NotGalois { reason } => format!("not Galois: {reason}"),
            GaloisEvidence::Undetermined { reason } => format!("undetermined: {reason}"),
        };
        let _ = writeln!(out, "  galois: {line}");
    }
}

fn criterion_text(out: &mut String, r: &CriterionReport) {
    let prime = r.prime.map(|p| format!(" p = {p}")).unwrap_or_default();
    let verdict = match &r.verdict {
        Verdict::Conclusive(s) => format!("CONCLUSIVE: {s}"),
        Verdict::Inconclusive(s) => format!("INCONCLUSIVE: {s}"),
        Verdict::Error(s) => format!("ERROR: {s}"),
    };
    let _ = writeln!(out, "{} {}{prime}: {verdict}", r.label, r.criterion);
    for e in &r.evidence {
        let _ = writeln!(out, "  [{:?}] {}: {}", e.status, e.hypothesis, e.witness);
    }
    for a in &r.assumptions {
        let _ = writeln!(out, "  assumes {a}");
    }
}

fn solutions_text(out: &mut String, s: &SolutionListing) {
    let k = s.k_bound.map(|k| format!(", |k| <= {k}")).unwrap_or_default();
    let _ = writeln!(
        out,
        "{}: {} solutions with exponents |e| <= {}{k} (rank {}, {} units enumerated)",
        s.label, s.count, s.bound, s.rank, s.units_enumerated
    );
    let _ = writeln!(out, "  counting {}", s.convention);
    let _ = writeln!(out, "  search is complete only within this box");
    for sol in &s.solutions {
        let v = match sol.kind {
            SolutionKind::SUnit => format!(" v = ({}, {})", sol.v_lambda, sol.v_mu),
            SolutionKind::Unit => String::new(),
        };
        let _ = writeln!(out, "  lambda = [{}], mu = [{}]{v}", sol.lambda.join(", "), sol.mu.join(", "));
    }
}

fn chevalley_text(out: &mut String, items: &[ChevalleyReport]) {
    let bad = items.iter().filter(|r| !r.holds()).count();
    let _ = writeln!(out, "{} fields, {bad} mismatches", items.len());
    let _ = writeln!(out, "{:>6} {:>6} {:>4} {:>4} {:>5} {:>4}  ramified", "d", "disc", "lhs", "rhs", "e", "idx");
    for r in items {
        let places: Vec<String> = r.ramified_places.iter().map(|p| p.to_string()).collect();
        let flag = if r.holds() { "" } else { "  MISMATCH" };
        let _ = writeln!(
            out,
            "{:>6} {:>6} {:>4} {:>4} {:>5} {:>4}  {}{flag}",
            r.d,
            r.disc,
            r.lhs,
            r.rhs,
            r.e_product,
            r.norm_index,
            places.join(",")
        );
    }
}

fn cyclotomic_text(out: &mut String, c: &CyclotomicReport) {
    let status = if c.all_hold() { "all identities hold" } else { "FAILED" };
    let _ = writeln!(out, "p = {}: {status}", c.p);
    let _ = writeln!(out, "  lambda = {}", c.lambda);
    let _ = writeln!(out, "  mu = {}", c.mu);
    for check in &c.checks {
        let _ = writeln!(out, "  [{}] {}", if check.holds { "ok" } else { "FAIL" }, check.name);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::chevalley_scan;
    use crate::criteria::theorem1_check;
    use crate::record::bundled_record;
    use crate::units::{solve_s_unit_equation, verify_cyclotomic_identities};

    fn round_trip(doc: &ReportDocument) {
        assert_eq!(&ReportDocument::from_json(&doc.to_json()).unwrap(), doc);
        assert!(!doc.to_text().is_empty());
    }

    #[test]
    fn documents_round_trip() {
        let rec = bundled_record("deg7-example").unwrap();
        let field = rec.field().unwrap();
        let a = analyze_field(&rec, &field, &[2, 53], false).unwrap();
        assert!(a.splitting[1].totally_ramified);
        assert!(a.galois.is_none());
        round_trip(&ReportDocument::Fields(vec![a]));
        round_trip(&ReportDocument::Criteria(vec![theorem1_check(&rec, 53)]));
        round_trip(&ReportDocument::Chevalley(chevalley_scan(-20, 20).unwrap()));
        round_trip(&ReportDocument::Cyclotomic(vec![verify_cyclotomic_identities(5).unwrap()]));
        let q5 = bundled_record("quadratic-5").unwrap();
        let k = q5.field().unwrap();
        let g = q5.unit_group(&k).unwrap().unwrap();
        let res = solve_s_unit_equation(&g, 2, 2).unwrap();
        let listing = SolutionListing::new(&q5.label, 1, &res);
        assert_eq!(listing.kind, SolutionKind::SUnit);
        round_trip(&ReportDocument::Solutions(vec![listing]));
    }

    #[test]
    fn malformed_document() {
        assert!(matches!(ReportDocument::from_json("{\"kind\":"), Err(Error::Parse { .. })));
    }
}
