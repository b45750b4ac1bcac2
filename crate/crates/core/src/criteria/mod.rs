//! Decision procedures for criteria guaranteeing that the unit equation has
//! no solutions in a field, or that the asymptotic Fermat's Last Theorem holds
//! over it. Each report lists every hypothesis with its status and witness.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{bigint_mod, is_prime, primes_below, squarefree_kernel};
use crate::error::{domain, precondition, Error, Result};
use crate::field::{galois_test, FieldElement, GaloisEvidence, NumberField, SplittingCheck};
use crate::poly::{discriminant, resultant, Polynomial};
use crate::quadratic::class_numbers;
use crate::record::FieldRecord;
use crate::units::{box_size, solve_unit_equation};

/// Primes below this bound dividing the discriminant are scanned when no prime is given.
pub const PRIME_SCAN_BOUND: u64 = 1000;
const WITNESS_BOUND: u32 = 2;
const WITNESS_BOX_LIMIT: u128 = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    Theorem1,
    Corollary1,
    Corollary2,
    Theorem2,
    Corollary3,
    Triantafillou,
    GaloisPExtension,
}

impl Criterion {
    pub const ALL: [Criterion; 7] = [
        Criterion::Theorem1,
        Criterion::Corollary1,
        Criterion::Corollary2,
        Criterion::Theorem2,
        Criterion::Corollary3,
        Criterion::Triantafillou,
        Criterion::GaloisPExtension,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Theorem1 => "theorem1",
            Criterion::Corollary1 => "corollary1",
            Criterion::Corollary2 => "corollary2",
            Criterion::Theorem2 => "theorem2",
            Criterion::Corollary3 => "corollary3",
            Criterion::Triantafillou => "triantafillou",
            Criterion::GaloisPExtension => "galois_p_extension",
        }
    }

    pub fn takes_prime(self) -> bool {
        matches!(
            self,
            Criterion::Theorem1 | Criterion::Corollary1 | Criterion::Corollary3 | Criterion::GaloisPExtension
        )
    }

    /// Runs the check; criteria without a prime ignore `p`.
    pub fn check(self, rec: &FieldRecord, p: u64) -> CriterionReport {
        match self {
            Criterion::Theorem1 => theorem1_check(rec, p),
            Criterion::Corollary1 => corollary1_check(rec, p),
            Criterion::Corollary2 => corollary2_check(rec),
            Criterion::Theorem2 => theorem2_check(rec),
            Criterion::Corollary3 => corollary3_check(rec, p),
            Criterion::Triantafillou => triantafillou_check(rec),
            Criterion::GaloisPExtension => galois_p_extension_check(rec, p),
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Criterion::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| domain(format!("unknown criterion {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "detail", rename_all = "snake_case")]
pub enum Verdict {
    Conclusive(String),
    Inconclusive(String),
    Error(String),
}

impl Verdict {
    pub fn is_conclusive(&self) -> bool {
        matches!(self, Verdict::Conclusive(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Holds, with any splitting certified.
    Satisfied,
    Failed,
    /// The factorization pattern does not certify the splitting.
    Uncertified,
    /// Taken as a standing assumption.
    Assumed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub hypothesis: String,
    pub status: Status,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub label: String,
    pub prime: Option<u64>,
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
    pub assumptions: Vec<String>,
}

struct Builder {
    report: CriterionReport,
}

impl Builder {
    fn new(criterion: Criterion, rec: &FieldRecord, prime: Option<u64>) -> Self {
        Builder {
            report: CriterionReport {
                criterion,
                label: rec.label.clone(),
                prime,
                verdict: Verdict::Inconclusive(String::new()),
                evidence: Vec::new(),
                assumptions: Vec::new(),
            },
        }
    }

    fn push(&mut self, hypothesis: impl Into<String>, status: Status, witness: impl Into<String>) {
        self.report.evidence.push(Evidence { hypothesis: hypothesis.into(), status, witness: witness.into() });
    }

    fn check(&mut self, hypothesis: impl Into<String>, ok: bool, witness: impl Into<String>) -> bool {
        self.push(hypothesis, if ok { Status::Satisfied } else { Status::Failed }, witness);
        ok
    }

    fn splitting(&mut self, hypothesis: impl Into<String>, c: &SplittingCheck) -> bool {
        let status = if c.holds {
            Status::Satisfied
        } else if !c.report.certified {
            Status::Uncertified
        } else {
            Status::Failed
        };
        let mut witness = format!("pattern (e, f) = {:?}", c.report.pattern);
        if let Some(w) = &c.warning {
            witness.push_str(&format!("; {w}"));
        }
        self.push(hypothesis, status, witness);
        c.holds
    }

    fn assume(&mut self, text: impl Into<String>) {
        self.report.assumptions.push(text.into());
    }

    fn ingest(&mut self, what: &str, rec: &FieldRecord) {
        let source = rec.provenance.as_deref().unwrap_or("no provenance");
        self.assume(format!("{what} ingested from record ({source})"));
    }

    /// Conclusive when every hypothesis is satisfied or assumed.
    fn conclude(mut self, statement: String) -> CriterionReport {
        let blocking: Vec<String> = self
            .report
            .evidence
            .iter()
            .filter(|e| matches!(e.status, Status::Failed | Status::Uncertified))
            .map(|e| match e.status {
                Status::Uncertified => format!("{} uncertified", e.hypothesis),
                _ => format!("{} fails", e.hypothesis),
            })
            .collect();
        self.report.verdict = if blocking.is_empty() {
            Verdict::Conclusive(statement)
        } else {
            Verdict::Inconclusive(blocking.join("; "))
        };
        self.report
    }

    fn run(mut self, body: impl FnOnce(&mut Builder) -> Result<String>) -> CriterionReport {
        match body(&mut self) {
            Ok(statement) => self.conclude(statement),
            Err(e) => {
                self.report.verdict = Verdict::Error(e.to_string());
                self.report
            }
        }
    }
}

const NO_SOLUTIONS: &str = "unit equation has no solutions";
const ASYMPTOTIC_FLT: &str = "asymptotic Fermat's Last Theorem holds over F";

/// `Res(X^r - 1, (X - 1)^r - 1)`.
pub fn resultant_value(r: u32) -> Result<BigInt> {
    if r == 0 {
        return Err(domain("r must be positive"));
    }
    let f = Polynomial::x_pow_minus_one(r as usize);
    let g = &Polynomial::from_ints(&[-1, 1]).pow(r) - &Polynomial::one();
    let v = resultant(&f, &g)?;
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}

/// Whether `Res(X^r - 1, (X - 1)^r - 1)` is nonzero mod `p`, for even `r > 0`.
pub fn resultant_criterion(r: u32, p: u64) -> Result<bool> {
    if r == 0 || r % 2 == 1 {
        return Err(domain(format!("r = {r} must be even and positive")));
    }
    if !is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    Ok(bigint_mod(&resultant_value(r)?, p) != 0)
}

fn require_prime(p: u64, min: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    if p < min {
        return Err(precondition(format!("p = {p} must be at least {min}")));
    }
    Ok(())
}

fn class_number(rec: &FieldRecord, b: &mut Builder) -> Result<u64> {
    let h = rec.class_number.ok_or_else(|| precondition(format!("record {} has no class number", rec.label)))?;
    b.ingest(&format!("h_F = {h}"), rec);
    Ok(h)
}

fn narrow_class_number(rec: &FieldRecord, b: &mut Builder) -> Result<u64> {
    let h = rec
        .narrow_class_number
        .ok_or_else(|| precondition(format!("record {} has no narrow class number", rec.label)))?;
    b.ingest(&format!("h_F+ = {h}"), rec);
    Ok(h)
}

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// For quadratic records the ingested invariants are recomputed; a mismatch is an error.
fn cross_check_quadratic(rec: &FieldRecord, field: &Arc<NumberField>, b: &mut Builder) -> Result<()> {
    if field.degree() != 2 {
        return Ok(());
    }
    let disc = discriminant(field.min_poly())?;
    let d = squarefree_kernel(&disc.to_integer())
        .ok_or_else(|| domain("discriminant too large for the quadratic oracle"))?;
    let inv = class_numbers(d)?;
    let mut notes = vec![format!("d = {d}, h = {}", inv.class_number)];
    if let Some(h) = rec.class_number {
        if h != inv.class_number as u64 {
            return Err(domain(format!("ingested h = {h} but forms give {}", inv.class_number)));
        }
    }
    if let Some(h) = rec.narrow_class_number {
        if h != inv.narrow_class_number as u64 {
            return Err(domain(format!("ingested h+ = {h} but forms give {}", inv.narrow_class_number)));
        }
    }
    notes.push(format!("h+ = {}", inv.narrow_class_number));
    if let (Some(eps), Some(gens)) = (&inv.fundamental_unit, rec.unit_elements(field)?) {
        if let [u] = gens.as_slice() {
            let e_inv = eps.inverse()?;
            let targets = [eps.char_poly(), e_inv.char_poly(), (-eps).char_poly(), (-&e_inv).char_poly()];
            if !targets.contains(&u.char_poly()) {
                return Err(domain(format!("ingested unit {u} is not a fundamental unit")));
            }
            notes.push("unit generator is fundamental".into());
        }
    }
    b.push("quadratic invariants recomputed", Status::Satisfied, notes.join(", "));
    Ok(())
}

fn totally_ramified(b: &mut Builder, field: &NumberField, p: u64) -> Result<bool> {
    let c = field.is_totally_ramified(p)?;
    Ok(b.splitting(format!("{p} totally ramified"), &c))
}

fn degree_gcd(b: &mut Builder, label: &str, n: u64, p: u64) -> bool {
    let half = (p - 1) / 2;
    let g = gcd(n, half);
    b.check(label, g == 1, format!("gcd({n}, {half}) = {g}"))
}

/// Totally ramified `p >= 3`, `gcd([F:Q], (p-1)/2) = 1` and
/// `Res(X^r - 1, (X - 1)^r - 1) != 0 mod p` with `r = gcd(2 h_F, p - 1)`.
pub fn theorem1_check(rec: &FieldRecord, p: u64) -> CriterionReport {
    Builder::new(Criterion::Theorem1, rec, Some(p)).run(|b| {
        require_prime(p, 3)?;
        let h = class_number(rec, b)?;
        let field = rec.field()?;
        cross_check_quadratic(rec, &field, b)?;
        totally_ramified(b, &field, p)?;
        degree_gcd(b, "(i) gcd([F:Q], (p-1)/2) = 1", field.degree() as u64, p);
        let r = gcd(2 * h, p - 1);
        let res = resultant_value(r as u32)?;
        let residue = bigint_mod(&res, p);
        b.check(
            "(ii) Res(X^r-1, (X-1)^r-1) != 0 mod p",
            residue != 0,
            format!("r = gcd({}, {}) = {r}, Res = {res}, residue {residue} mod {p}", 2 * h, p - 1),
        );
        Ok(NO_SOLUTIONS.into())
    })
}

/// Totally ramified `p >= 5` with `gcd([F:Q], (p-1)/2) = 1` and `gcd(2 h_F, p - 1) = 2`.
pub fn corollary1_check(rec: &FieldRecord, p: u64) -> CriterionReport {
    Builder::new(Criterion::Corollary1, rec, Some(p)).run(|b| {
        require_prime(p, 3)?;
        let h = class_number(rec, b)?;
        let field = rec.field()?;
        cross_check_quadratic(rec, &field, b)?;
        b.check("p >= 5", p >= 5, format!("p = {p}"));
        totally_ramified(b, &field, p)?;
        degree_gcd(b, "(i) gcd([F:Q], (p-1)/2) = 1", field.degree() as u64, p);
        let r = gcd(2 * h, p - 1);
        if b.check("(ii) gcd(2 h_F, p-1) = 2", r == 2, format!("gcd({}, {}) = {r}", 2 * h, p - 1)) && p >= 5 {
            let ok = resultant_criterion(2, p)?;
            b.check("Res(X^2-1, (X-1)^2-1) != 0 mod p", ok, format!("{} mod {p}", resultant_value(2)?));
        }
        Ok(NO_SOLUTIONS.into())
    })
}

/// 5 totally ramified with `h_F` and `[F:Q]` odd.
pub fn corollary2_check(rec: &FieldRecord) -> CriterionReport {
    Builder::new(Criterion::Corollary2, rec, Some(5)).run(|b| {
        let h = class_number(rec, b)?;
        let field = rec.field()?;
        cross_check_quadratic(rec, &field, b)?;
        totally_ramified(b, &field, 5)?;
        b.check("h_F odd", h % 2 == 1, format!("h_F = {h}"));
        let n = field.degree();
        b.check("[F:Q] odd", n % 2 == 1, format!("[F:Q] = {n}"));
        Ok(NO_SOLUTIONS.into())
    })
}

/// Totally real F with Eichler-Shimura, `h_F+` odd, 2 inert and no solutions
/// of the unit equation. The last condition is only accepted from another
/// conclusive criterion; a search can refute it but never establish it.
pub fn theorem2_check(rec: &FieldRecord) -> CriterionReport {
    Builder::new(Criterion::Theorem2, rec, None).run(|b| {
        let hp = narrow_class_number(rec, b)?;
        let field = rec.field()?;
        cross_check_quadratic(rec, &field, b)?;
        let (r1, r2) = field.signature();
        b.check("F totally real", field.is_totally_real(), format!("signature ({r1}, {r2})"));
        let n = field.degree();
        let mut statement = ASYMPTOTIC_FLT.to_string();
        if n % 2 == 1 {
            b.push("(i) Eichler-Shimura over F", Status::Satisfied, format!("known for totally real fields of odd degree; [F:Q] = {n}"));
        } else {
            b.push("(i) Eichler-Shimura over F", Status::Assumed, format!("[F:Q] = {n} is even"));
            b.assume("Eichler-Shimura conjecture over F");
            statement.push_str(", assuming Eichler-Shimura over F");
        }
        b.check("(ii) h_F+ odd", hp % 2 == 1, format!("h_F+ = {hp}"));
        let c = field.is_inert(2)?;
        b.splitting("(iii) 2 inert", &c);
        match establish_no_solutions(rec)? {
            Some(w) => b.push("(iv) unit equation has no solutions", Status::Satisfied, w),
            None => {
                let witness = search_witness(rec, &field)?
                    .unwrap_or_else(|| "not established by any conclusive criterion".to_string());
                b.push("(iv) unit equation has no solutions", Status::Failed, witness);
            }
        }
        Ok(statement)
    })
}

/// The first conclusive non-existence criterion, scanning candidate primes.
fn establish_no_solutions(rec: &FieldRecord) -> Result<Option<String>> {
    let t = triantafillou_check(rec);
    if t.verdict.is_conclusive() {
        return Ok(Some("triantafillou criterion".into()));
    }
    for p in candidate_primes(rec)? {
        for c in [Criterion::Theorem1, Criterion::GaloisPExtension] {
            if c == Criterion::Theorem1 && rec.class_number.is_none() {
                continue;
            }
            if c.check(rec, p).verdict.is_conclusive() {
                return Ok(Some(format!("{c} at p = {p}")));
            }
        }
    }
    Ok(None)
}

/// A solution from a small search over the ingested units, if any.
fn search_witness(rec: &FieldRecord, field: &Arc<NumberField>) -> Result<Option<String>> {
    let Some(group) = rec.unit_group(field)? else {
        return Ok(None);
    };
    if box_size(group.rank(), WITNESS_BOUND) > WITNESS_BOX_LIMIT {
        return Ok(None);
    }
    let found = solve_unit_equation(&group, WITNESS_BOUND)?;
    // Smallest coordinates first, so the witness is the simplest solution found.
    let height = |x: &FieldElement| -> BigInt {
        x.coeffs().iter().map(|c| c.numer().abs() + c.denom()).sum()
    };
    Ok(found
        .solutions
        .iter()
        .min_by_key(|s| {
            let negative = s.lambda.coeffs().iter().filter(|c| c.is_negative()).count();
            (height(&s.lambda) + height(&s.mu), negative)
        })
        .map(|s| format!("solution lambda = {}, mu = {} (search bound {WITNESS_BOUND})", s.lambda, s.mu)))
}

/// Totally ramified `p >= 5`, `gcd(h_F [F:Q], (p-1)/2) = 1`, `h_F+` and
/// `[F:Q]` odd and 2 inert, for totally real F.
pub fn corollary3_check(rec: &FieldRecord, p: u64) -> CriterionReport {
    Builder::new(Criterion::Corollary3, rec, Some(p)).run(|b| {
        require_prime(p, 3)?;
        let h = class_number(rec, b)?;
        let hp = narrow_class_number(rec, b)?;
        let field = rec.field()?;
        cross_check_quadratic(rec, &field, b)?;
        let (r1, r2) = field.signature();
        b.check("F totally real", field.is_totally_real(), format!("signature ({r1}, {r2})"));
        b.check("p >= 5", p >= 5, format!("p = {p}"));
        totally_ramified(b, &field, p)?;
        let n = field.degree() as u64;
        degree_gcd(b, "gcd(h_F [F:Q], (p-1)/2) = 1", h * n, p);
        b.check("h_F+ odd", hp % 2 == 1, format!("h_F+ = {hp}"));
        b.check("[F:Q] odd", n % 2 == 1, format!("[F:Q] = {n}"));
        let c = field.is_inert(2)?;
        b.splitting("2 inert", &c);
        Ok(ASYMPTOTIC_FLT.into())
    })
}

/// 3 totally split and `3` not dividing `[F:Q]`.
pub fn triantafillou_check(rec: &FieldRecord) -> CriterionReport {
    Builder::new(Criterion::Triantafillou, rec, Some(3)).run(|b| {
        let field = rec.field()?;
        let c = field.is_totally_split(3)?;
        b.splitting("3 totally split", &c);
        let n = field.degree();
        b.check("3 does not divide [F:Q]", n % 3 != 0, format!("[F:Q] = {n}"));
        Ok(NO_SOLUTIONS.into())
    })
}

/// F Galois of degree a power of `p >= 5`, with `p` totally ramified.
pub fn galois_p_extension_check(rec: &FieldRecord, p: u64) -> CriterionReport {
    Builder::new(Criterion::GaloisPExtension, rec, Some(p)).run(|b| {
        require_prime(p, 2)?;
        b.check("p >= 5", p >= 5, format!("p = {p}"));
        let field = rec.field()?;
        let n = field.degree() as u64;
        let mut m = n;
        while m > 1 && m % p == 0 {
            m /= p;
        }
        if !b.check("[F:Q] a power of p", n > 1 && m == 1, format!("[F:Q] = {n}")) {
            return Ok(NO_SOLUTIONS.into());
        }
        galois_evidence(rec, &field, b)?;
        totally_ramified(b, &field, p)?;
        Ok(NO_SOLUTIONS.into())
    })
}

fn galois_evidence(rec: &FieldRecord, field: &Arc<NumberField>, b: &mut Builder) -> Result<()> {
    let computed = galois_test(field)?;
    match (rec.galois, &computed) {
        (Some(claim), _) if computed.is_galois() == Some(!claim) => Err(domain(format!(
            "record says galois = {claim} but the root search says otherwise"
        ))),
        (_, GaloisEvidence::Galois { automorphisms, split_prime }) => {
            b.check(
                "F/Q Galois",
                true,
                format!("{} automorphisms verified exactly, roots lifted at {split_prime}", automorphisms.len()),
            );
            Ok(())
        }
        (_, GaloisEvidence::NotGalois { reason }) => {
            b.check("F/Q Galois", false, reason.clone());
            Ok(())
        }
        (Some(claim), GaloisEvidence::Undetermined { reason }) => {
            b.ingest(&format!("galois = {claim}"), rec);
            b.check("F/Q Galois", claim, format!("from record; root search undetermined: {reason}"));
            Ok(())
        }
        (None, GaloisEvidence::Undetermined { reason }) => {
            b.push("F/Q Galois", Status::Uncertified, reason.clone());
            Ok(())
        }
    }
}

/// Primes below the scan bound dividing the discriminant of the defining polynomial.
pub fn candidate_primes(rec: &FieldRecord) -> Result<Vec<u64>> {
    let disc = discriminant(&rec.polynomial())?.to_integer().abs();
    if disc.is_zero() {
        return Err(domain("defining polynomial has a repeated root"));
    }
    Ok(primes_below(PRIME_SCAN_BOUND)
        .filter(|&p| (&disc % BigInt::from(p)).is_zero())
        .collect())
}

/// Runs a prime-taking criterion at every candidate prime and keeps the first
/// conclusive report, or summarizes the failures.
pub fn scan_check(c: Criterion, rec: &FieldRecord) -> CriterionReport {
    let primes = match candidate_primes(rec) {
        Ok(ps) => ps.into_iter().filter(|&p| p >= 3).collect::<Vec<_>>(),
        Err(e) => {
            let mut b = Builder::new(c, rec, None);
            b.report.verdict = Verdict::Error(e.to_string());
            return b.report;
        }
    };
    let scope = format!(
        "prime chosen by scanning odd primes below {PRIME_SCAN_BOUND} dividing disc(min_poly): {primes:?}"
    );
    let mut b = Builder::new(c, rec, None);
    b.assume(scope.clone());
    for &p in &primes {
        let mut r = c.check(rec, p);
        match &r.verdict {
            Verdict::Conclusive(_) => {
                r.assumptions.push(scope);
                return r;
            }
            Verdict::Error(_) => {
                r.assumptions.push(scope);
                return r;
            }
            Verdict::Inconclusive(e) => b.push(format!("p = {p}"), Status::Failed, e.clone()),
        }
    }
    if primes.is_empty() {
        b.push("candidate prime", Status::Failed, "no odd prime below the scan bound divides the discriminant");
    }
    b.conclude(String::new())
}

/// Every selected criterion on every record, ordered by label and criterion.
pub fn check_records(records: &[FieldRecord], prime: Option<u64>, criteria: &[Criterion]) -> Vec<CriterionReport> {
    let mut jobs: Vec<(&FieldRecord, Criterion)> =
        records.iter().flat_map(|r| criteria.iter().map(move |&c| (r, c))).collect();
    jobs.sort_by(|a, b| (&a.0.label, a.1).cmp(&(&b.0.label, b.1)));
    jobs.par_iter()
        .map(|&(rec, c)| match (c.takes_prime(), prime) {
            (true, Some(p)) => c.check(rec, p),
            (true, None) => scan_check(c, rec),
            (false, _) => c.check(rec, 0),
        })
        .collect()
}

/// 0 when every report is conclusive, 2 if any is an error, 1 otherwise.
pub fn exit_code(reports: &[CriterionReport]) -> i32 {
    if reports.iter().any(|r| matches!(r.verdict, Verdict::Error(_))) {
        2
    } else if reports.iter().all(|r| r.verdict.is_conclusive()) {
        0
    } else {
        1
    }
}

impl CriterionReport {
    pub fn residue_of(&self, hypothesis_prefix: &str) -> Option<&str> {
        self.evidence
            .iter()
            .find(|e| e.hypothesis.starts_with(hypothesis_prefix))
            .map(|e| e.witness.as_str())
    }

    pub fn status_of(&self, hypothesis_prefix: &str) -> Option<Status> {
        self.evidence.iter().find(|e| e.hypothesis.starts_with(hypothesis_prefix)).map(|e| e.status)
    }
}
