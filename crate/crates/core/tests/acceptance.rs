//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so every line is printed; exits nonzero if any criterion fails.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use unitcrit_core::arith::{is_prime, rat};
use unitcrit_core::chevalley::chevalley_scan;
use unitcrit_core::criteria::{
    corollary1_check, corollary2_check, corollary3_check, galois_p_extension_check, theorem1_check, theorem2_check,
    Status, Verdict,
};
use unitcrit_core::poly::{resultant, Polynomial};
use unitcrit_core::quadratic::{class_numbers, forms::FormClassGroup, fundamental_unit, to_sqrt_basis, unit_norm_from_forms};
use unitcrit_core::record::{bundled_record, FieldRecord};
use unitcrit_core::report::COUNT_CONVENTION;
use unitcrit_core::units::{
    check_fs_conditions, classify_valuation_pair, descent_pair, descent_step, enumerate_units, normalize_solution,
    solve_s_unit_equation, solve_unit_equation, verify_cyclotomic_identities, UnitEqSolution, UnitGroupDesc,
};
use unitcrit_core::{FieldElement, NumberField};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(label: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed <= limit, format!("{label} took {elapsed:?}, limit {limit:?}"))
}

fn rec(label: &str) -> FieldRecord {
    bundled_record(label).expect("bundled record")
}

fn res_xr(r: u32) -> (BigRational, Duration) {
    let f = Polynomial::x_pow_minus_one(r as usize);
    let g = &Polynomial::from_ints(&[-1, 1]).pow(r) - &Polynomial::one();
    let t = Instant::now();
    let v = resultant(&f, &g).unwrap();
    (v, t.elapsed())
}

fn criterion_1() -> Outcome {
    let _ = res_xr(2);
    let (r2, t2) = res_xr(2);
    let (r4, t4) = res_xr(4);
    within("r = 2", t2, Duration::from_millis(1))?;
    within("r = 4", t4, Duration::from_millis(1))?;
    ensure(r4 == rat(-375, 1), format!("Res for r = 4 is {r4}, expected -375"))?;
    ensure(r2 == rat(3, 1), format!("Res for r = 2 is {r2}, expected 3"))?;
    Ok(format!("Res(r=2) = {r2}, Res(r=4) = {r4} ({t2:?}, {t4:?})"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let r = rec("deg7-example");
    ensure(r.class_number == Some(2), "h = 2 not ingested")?;
    let k = r.field().map_err(|e| e.to_string())?;
    ensure(k.signature() == (7, 0), format!("signature {:?}", k.signature()))?;
    let tr = k.is_totally_ramified(53).map_err(|e| e.to_string())?;
    ensure(tr.holds && tr.report.certified, "53 not certified totally ramified")?;
    let t1 = theorem1_check(&r, 53);
    ensure(t1.verdict.is_conclusive(), format!("theorem1 {:?}", t1.verdict))?;
    let w = t1.residue_of("(ii)").unwrap_or_default().to_string();
    ensure(w.contains("= 4,") && w.contains("residue 49 "), format!("witness {w}"))?;
    let c1 = corollary1_check(&r, 53);
    ensure(matches!(c1.verdict, Verdict::Inconclusive(_)), format!("corollary1 {:?}", c1.verdict))?;
    let el = start.elapsed();
    within("degree-7 checks", el, Duration::from_secs(1))?;
    Ok(format!("{w}; corollary1 inconclusive ({el:?})"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let r = rec("deg5-example");
    ensure((r.class_number, r.narrow_class_number) == (Some(5), Some(5)), "h, h+ not ingested")?;
    let k = r.field().map_err(|e| e.to_string())?;
    let tr = k.is_totally_ramified(5).map_err(|e| e.to_string())?;
    ensure(tr.holds && tr.report.certified, "5 not certified totally ramified")?;
    let inert = k.is_inert(2).map_err(|e| e.to_string())?;
    ensure(inert.holds && inert.report.certified, "2 not certified inert")?;
    for rep in [corollary2_check(&r), corollary3_check(&r, 5), theorem2_check(&r), galois_p_extension_check(&r, 5)] {
        ensure(rep.verdict.is_conclusive(), format!("{} {:?}", rep.criterion, rep.verdict))?;
    }
    let el = start.elapsed();
    within("degree-5 checks", el, Duration::from_secs(1))?;
    Ok(format!("corollary2, corollary3, theorem2, galois_p_extension conclusive ({el:?})"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    for p in [5, 7, 11, 13] {
        let rep = verify_cyclotomic_identities(p).map_err(|e| e.to_string())?;
        for name in ["lambda + mu = 1", "lambda is a unit", "mu is a unit"] {
            let c = rep.checks.iter().find(|c| c.name == name).expect("check present");
            ensure(c.holds, format!("p = {p}: {name}"))?;
        }
    }
    let el = start.elapsed();
    within("identities", el, Duration::from_secs(1))?;
    Ok(format!("p = 5, 7, 11, 13 ({el:?})"))
}

fn criterion_5() -> Outcome {
    let r = rec("real-cyclotomic-11");
    let k = r.field().map_err(|e| e.to_string())?;
    let g = r.unit_group(&k).map_err(|e| e.to_string())?.expect("generators");
    ensure(g.rank() == 4, format!("rank {}", g.rank()))?;
    let lambda = &FieldElement::from_int(&k, 2) + &FieldElement::theta(&k);
    let mut counts = Vec::new();
    let mut last = Duration::ZERO;
    for b in 1..=8 {
        let t = Instant::now();
        let res = solve_unit_equation(&g, b).map_err(|e| e.to_string())?;
        last = t.elapsed();
        if b == 4 {
            ensure(res.solutions.iter().any(|s| s.lambda == lambda), "2 + zeta + zeta^-1 missing at B = 4")?;
        }
        counts.push(res.solutions.len());
    }
    within("B = 8 search", last, Duration::from_secs(120))?;
    ensure(counts.windows(2).all(|w| w[0] <= w[1]), format!("counts not monotone: {counts:?}"))?;
    let stable = counts.windows(2).any(|w| w[0] == w[1] && w[0] == 570);
    ensure(stable, format!("counts {counts:?} do not stabilize at 570"))?;
    Ok(format!("counts B=1..8 {counts:?}, B=8 in {last:?}; {COUNT_CONVENTION}"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let reports = chevalley_scan(-300, 300).map_err(|e| e.to_string())?;
    let reports: Vec<_> = reports.into_iter().filter(|r| r.d.abs() >= 2).collect();
    let bad: Vec<i64> = reports.iter().filter(|r| !r.holds()).map(|r| r.d).collect();
    ensure(bad.is_empty(), format!("mismatches at {bad:?}"))?;
    let r34 = reports.iter().find(|r| r.d == 34).expect("d = 34 scanned");
    let (_, unit_norm) = fundamental_unit(34).map_err(|e| e.to_string())?;
    ensure(r34.norm_index == 1 && unit_norm == 1, "d = 34 norm distinction")?;
    let el = start.elapsed();
    within("scan", el, Duration::from_secs(30))?;
    Ok(format!("{} fields, 0 mismatches, d = 34: norm index 1, unit norm +1 ({el:?})", reports.len()))
}

fn criterion_7() -> Outcome {
    let h = |d| class_numbers(d).map_err(|e| e.to_string());
    ensure(h(-5)?.class_number == 2, "h(-5)")?;
    ensure(h(-23)?.class_number == 3, "h(-23)")?;
    let q5 = h(5)?;
    ensure(q5.class_number == 1, "h(5)")?;
    let eps = q5.fundamental_unit.clone().expect("unit");
    let nums = eps.numerators();
    let (x, y) = (nums[0].clone(), nums.get(1).cloned().unwrap_or_default());
    ensure(to_sqrt_basis(5, &x, &y) == (rat(1, 2), rat(1, 2)), "unit of Q(sqrt 5) is not (1 + sqrt 5)/2")?;
    ensure(q5.unit_norm == Some(-1) && eps.norm() == rat(-1, 1), "norm of (1 + sqrt 5)/2")?;
    let q3 = h(3)?;
    ensure((q3.class_number, q3.narrow_class_number) == (1, 2), "h(3), h+(3)")?;
    for d in [5, 3] {
        let g = FormClassGroup::new(if d == 5 { 5 } else { 12 }).map_err(|e| e.to_string())?;
        ensure(Some(unit_norm_from_forms(&g)) == h(d)?.unit_norm, format!("forms vs continued fraction at d = {d}"))?;
    }
    Ok("h(-5)=2, h(-23)=3, h(5)=1 with (1+sqrt 5)/2 of norm -1, h(3)=1, h+(3)=2".into())
}

/// `delta` with `v(1 + delta) = n - 1` and `v(1 - delta) = 1`, from powers of units.
fn conforming_delta(g: &UnitGroupDesc, units: &[FieldElement], n: i64) -> Option<FieldElement> {
    let q = g.field().inert_two().ok()?;
    let one = FieldElement::one(g.field());
    let m = (1i64 << g.field().degree()) - 1;
    for u in units {
        let mut w = u.pow(m).ok()?;
        for _ in 0..8 {
            for d in [w.clone(), -&w] {
                let (a, b) = (q.ord(&(&one + &d)).ok()?, q.ord(&(&one - &d)).ok()?);
                if (a, b) == (n - 1, 1) || (a, b) == (1, n - 1) {
                    return Some(d);
                }
            }
            w = w.square();
        }
    }
    None
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut pairs = 0;
    for label in ["quadratic-5", "quadratic-2", "quadratic-7", "real-cyclotomic-11"] {
        let r = rec(label);
        let k = r.field().map_err(|e| e.to_string())?;
        let g = r.unit_group(&k).map_err(|e| e.to_string())?.expect("generators");
        for _ in 0..100 {
            let exps: Vec<i64> = (0..g.rank()).map(|_| rng.gen_range(-3..=3)).collect();
            let mut d = g.power_product(&exps);
            if rng.gen_bool(0.5) {
                d = -&d;
            }
            let (l, m) = descent_pair(&d).map_err(|e| e.to_string())?;
            ensure((&l + &m).is_one(), format!("{label}: lambda' + mu' != 1 for delta = {d}"))?;
            pairs += 1;
        }
    }
    let mut steps = 0;
    for label in ["quadratic-5", "real-cyclotomic-7", "real-cyclotomic-11"] {
        let r = rec(label);
        let k = r.field().map_err(|e| e.to_string())?;
        let g = r.unit_group(&k).map_err(|e| e.to_string())?.expect("generators");
        let units = enumerate_units(&g, 1);
        for n in 2..=6 {
            let d = conforming_delta(&g, &units, n).ok_or(format!("{label}: no conforming delta for n = {n}"))?;
            let mu = d.square();
            let s = UnitEqSolution::with_valuations(&FieldElement::one(&k) - &mu, mu).map_err(|e| e.to_string())?;
            ensure(s.n_value == n as u64, format!("{label}: synthesized n = {}", s.n_value))?;
            let t = descent_step(&s, &d).map_err(|e| e.to_string())?;
            ensure((&t.lambda + &t.mu).is_one(), "descent output does not sum to 1")?;
            ensure(t.n_value == (2 * n - 4) as u64, format!("{label}: n = {n} gave n' = {}", t.n_value))?;
            steps += 1;
        }
    }
    let mut normalized = 0;
    for (label, b, kb) in [("quadratic-5", 3, 3), ("rational", 0, 4), ("real-cyclotomic-7", 1, 2)] {
        let r = rec(label);
        let k = r.field().map_err(|e| e.to_string())?;
        let g = r.unit_group(&k).map_err(|e| e.to_string())?.expect("generators");
        for s in solve_s_unit_equation(&g, b, kb).map_err(|e| e.to_string())?.solutions {
            let t = normalize_solution(&s).map_err(|e| e.to_string())?;
            ensure(t.n_value == s.n_value && t.v_lambda >= 0 && t.v_mu == 0, format!("{label}: normalize {s:?}"))?;
            normalized += 1;
        }
    }
    Ok(format!("{pairs} random deltas, {steps} descents with n' = 2n - 4, {normalized} normalizations"))
}

fn criterion_9() -> Outcome {
    let r = rec("quadratic-5");
    let rep = theorem2_check(&r);
    ensure(matches!(rep.verdict, Verdict::Inconclusive(_)), format!("theorem2 {:?}", rep.verdict))?;
    ensure(rep.status_of("(iv)") == Some(Status::Failed), "(iv) not refuted")?;
    let k = r.field().map_err(|e| e.to_string())?;
    let phi = FieldElement::theta(&k);
    let one = FieldElement::one(&k);
    let witness = rep.residue_of("(iv)").unwrap_or_default();
    ensure(
        witness.contains(&format!("lambda = {phi}, mu = {}", &one - &phi))
            || witness.contains(&format!("lambda = {}, mu = {phi}", &one - &phi)),
        format!("witness {witness}"),
    )?;
    let g = r.unit_group(&k).map_err(|e| e.to_string())?.expect("generators");
    let res = solve_s_unit_equation(&g, 3, 2).map_err(|e| e.to_string())?;
    // -1 - sqrt 5 = -2 phi
    let lambda = FieldElement::from_coeffs(&k, &[rat(0, 1), rat(-2, 1)]).unwrap();
    let s = res.solutions.iter().find(|s| s.lambda == lambda).ok_or("(-1 - sqrt 5, 2 + sqrt 5) not found")?;
    ensure((s.v_lambda, s.v_mu) == (1, 0), format!("valuations {:?}", (s.v_lambda, s.v_mu)))?;
    ensure(check_fs_conditions(s).holds, "conditions fail")?;
    ensure(classify_valuation_pair(1, 0) == Ok(true), "(1, 0) not allowed")?;
    Ok(format!("theorem2 inconclusive with {witness}; (1, 0) allowed"))
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Polynomial {
    let d = rng.gen_range(1..=max_deg);
    let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-6..=6)).collect();
    if c[d] == 0 {
        c[d] = 1;
    }
    Polynomial::from_ints(&c)
}

fn random_element(rng: &mut ChaCha8Rng, k: &std::sync::Arc<NumberField>) -> FieldElement {
    loop {
        let c: Vec<BigRational> = (0..k.degree())
            .map(|_| BigRational::new(BigInt::from(rng.gen_range(-9..=9)), BigInt::from(rng.gen_range(1..=4))))
            .collect();
        let x = FieldElement::from_coeffs(k, &c).unwrap();
        if !x.is_zero() {
            return x;
        }
    }
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    const CASES: usize = 1000;
    for _ in 0..CASES {
        let (f, g, h) = (random_poly(&mut rng, 4), random_poly(&mut rng, 4), random_poly(&mut rng, 3));
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let sign = if (m * n) % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        let fg = resultant(&f, &g).unwrap();
        ensure(fg == sign * resultant(&g, &f).unwrap(), format!("symmetry for {f}, {g}"))?;
        ensure(resultant(&f, &(&g * &h)).unwrap() == fg * resultant(&f, &h).unwrap(), "multiplicativity")?;
    }
    let k5 = rec("deg5-example").field().map_err(|e| e.to_string())?;
    let q = k5.inert_two().map_err(|e| e.to_string())?;
    for _ in 0..CASES {
        let (a, b) = (random_element(&mut rng, &k5), random_element(&mut rng, &k5));
        let ab = &a * &b;
        ensure(ab.norm() == a.norm() * b.norm(), "norm multiplicativity")?;
        let (va, vb) = (q.ord(&a).map_err(|e| e.to_string())?, q.ord(&b).map_err(|e| e.to_string())?);
        ensure(q.ord(&ab) == Ok(va + vb), "valuation additivity")?;
        ensure(q.ord_from_coords(&a) == Ok(va), "valuation routes disagree")?;
    }
    let fields: Vec<_> = ["deg7-example", "deg5-example", "real-cyclotomic-13", "quadratic-7"]
        .iter()
        .map(|l| rec(l).field().unwrap())
        .collect();
    for _ in 0..CASES {
        let k = &fields[rng.gen_range(0..fields.len())];
        let p = loop {
            let p = rng.gen_range(2..400u64);
            if is_prime(p) {
                break p;
            }
        };
        let s = k.splitting_type(p).map_err(|e| e.to_string())?;
        let sum: usize = s.pattern.iter().map(|&(e, f)| e as usize * f).sum();
        ensure(sum == k.degree(), format!("sum e f = {sum} at p = {p}"))?;
    }
    let mut groups = Vec::new();
    for d in [2i64, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29] {
        let (eps, _) = fundamental_unit(d).map_err(|e| e.to_string())?;
        groups.push(UnitGroupDesc::new(eps.field(), None, vec![eps.clone()], true).map_err(|e| e.to_string())?);
    }
    for _ in 0..CASES {
        let g = &groups[rng.gen_range(0..groups.len())];
        let b = rng.gen_range(0..5);
        let small: HashSet<_> = solve_unit_equation(g, b).unwrap().solutions.into_iter().map(|s| s.lambda).collect();
        let large: HashSet<_> = solve_unit_equation(g, b + 1).unwrap().solutions.into_iter().map(|s| s.lambda).collect();
        ensure(small.is_subset(&large), "search counts not monotone")?;
    }
    let el = start.elapsed();
    within("property suites", el, Duration::from_secs(60))?;
    Ok(format!("5 properties x {CASES} cases ({el:?})"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("resultant values", criterion_1),
        ("degree-7 example", criterion_2),
        ("degree-5 example", criterion_3),
        ("cyclotomic identities", criterion_4),
        ("Q(zeta_11)+ unit search", criterion_5),
        ("ambiguous class number scan", criterion_6),
        ("quadratic spot values", criterion_7),
        ("descent properties", criterion_8),
        ("Q(sqrt 5) negative control", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
