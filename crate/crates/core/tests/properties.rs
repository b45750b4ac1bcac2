use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use unitcrit_core::arith::{is_prime, rat};
use unitcrit_core::poly::{factor_mod_p, resultant, ModPolynomial, Polynomial};
use unitcrit_core::quadratic::forms::{reduce_definite, Form, FormClassGroup};
use unitcrit_core::quadratic::fundamental_unit;
use unitcrit_core::record::bundled_record;
use unitcrit_core::units::{
    box_size, descent_pair, enumerate_units, normalize_solution, solve_s_unit_equation, solve_unit_equation,
    UnitGroupDesc,
};
use unitcrit_core::{FieldElement, NumberField};

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(1000)
}

fn deg5() -> &'static Arc<NumberField> {
    static K: OnceLock<Arc<NumberField>> = OnceLock::new();
    K.get_or_init(|| bundled_record("deg5-example").unwrap().field().unwrap())
}

fn fields() -> &'static Vec<Arc<NumberField>> {
    static F: OnceLock<Vec<Arc<NumberField>>> = OnceLock::new();
    F.get_or_init(|| {
        ["deg7-example", "deg5-example", "real-cyclotomic-13", "quadratic-7", "rational"]
            .iter()
            .map(|l| bundled_record(l).unwrap().field().unwrap())
            .collect()
    })
}

fn groups(labels: &[&str]) -> Vec<UnitGroupDesc> {
    labels
        .iter()
        .map(|l| {
            let r = bundled_record(l).unwrap();
            r.unit_group(&r.field().unwrap()).unwrap().unwrap()
        })
        .collect()
}

fn cyclotomic_groups() -> &'static Vec<UnitGroupDesc> {
    static G: OnceLock<Vec<UnitGroupDesc>> = OnceLock::new();
    G.get_or_init(|| groups(&["quadratic-5", "real-cyclotomic-7", "real-cyclotomic-11"]))
}

fn quadratic_groups() -> &'static Vec<UnitGroupDesc> {
    static G: OnceLock<Vec<UnitGroupDesc>> = OnceLock::new();
    G.get_or_init(|| {
        [2i64, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 21, 29]
            .iter()
            .map(|&d| {
                let (eps, _) = fundamental_unit(d).unwrap();
                UnitGroupDesc::new(eps.field(), None, vec![eps.clone()], true).unwrap()
            })
            .collect()
    })
}

fn poly() -> impl Strategy<Value = Polynomial> {
    (prop::collection::vec(-7i64..=7, 1..=5), 1i64..=3).prop_map(|(mut c, lead)| {
        c.push(lead);
        Polynomial::from_ints(&c)
    })
}

fn element(k: &Arc<NumberField>, c: &[(i64, i64)]) -> FieldElement {
    let coeffs: Vec<BigRational> = c.iter().map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))).collect();
    FieldElement::from_coeffs(k, &coeffs[..k.degree()]).unwrap()
}

fn coords() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=4), 7)
}

fn prime() -> impl Strategy<Value = u64> {
    (2u64..500).prop_filter("prime", |&p| is_prime(p))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn resultant_swaps_with_sign(f in poly(), g in poly()) {
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let sign = if m * n % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        prop_assert_eq!(resultant(&f, &g).unwrap(), sign * resultant(&g, &f).unwrap());
    }

    #[test]
    fn resultant_is_multiplicative(f in poly(), g in poly(), h in poly()) {
        let lhs = resultant(&f, &(&g * &h)).unwrap();
        prop_assert_eq!(lhs, resultant(&f, &g).unwrap() * resultant(&f, &h).unwrap());
    }

    #[test]
    fn resultant_vanishes_on_common_factor(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(resultant(&(&f * &h), &(&g * &h)).unwrap(), rat(0, 1));
    }

    #[test]
    fn factorization_mod_p_expands(f in poly(), p in prime()) {
        let reduced = ModPolynomial::reduce(&f, p).unwrap();
        prop_assume!(!reduced.is_zero());
        let fac = factor_mod_p(&f, p).unwrap();
        prop_assert_eq!(fac.expand(), reduced.clone());
        let total: usize = fac.pattern().iter().map(|&(e, d)| e as usize * d).sum();
        prop_assert_eq!(Some(total), reduced.degree());
    }

    #[test]
    fn norm_is_multiplicative(a in coords(), b in coords()) {
        let k = deg5();
        let (x, y) = (element(k, &a), element(k, &b));
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn valuation_at_two_is_additive(a in coords(), b in coords()) {
        let k = deg5();
        let (x, y) = (element(k, &a), element(k, &b));
        prop_assume!(!x.is_zero() && !y.is_zero());
        let q = k.inert_two().unwrap();
        let (vx, vy) = (q.ord(&x).unwrap(), q.ord(&y).unwrap());
        prop_assert_eq!(q.ord(&(&x * &y)).unwrap(), vx + vy);
        prop_assert_eq!(q.ord_from_coords(&x).unwrap(), vx);
    }

    #[test]
    fn splitting_degrees_sum_to_n(i in 0usize..5, p in prime()) {
        let k = &fields()[i];
        let s = k.splitting_type(p).unwrap();
        let sum: usize = s.pattern.iter().map(|&(e, f)| e as usize * f).sum();
        prop_assert_eq!(sum, k.degree());
    }

    #[test]
    fn reduced_forms_keep_discriminant(a in 1i64..60, b in -60i64..60, c in 1i64..60) {
        let f = Form::new(a, b, c);
        prop_assume!(f.disc() < 0);
        let r = reduce_definite(&f);
        prop_assert_eq!(r.disc(), f.disc());
        prop_assert!(r.a <= f.a);
    }

    #[test]
    fn class_group_composition(d in 2i64..120, i in 0usize..64, j in 0usize..64, l in 0usize..64) {
        let disc = if d % 4 == 1 { -d } else { -4 * d };
        let Ok(g) = FormClassGroup::new(disc) else { return Ok(()) };
        let h = g.order();
        let (i, j, l) = (i % h, j % h, l % h);
        prop_assert_eq!(g.compose(g.compose(i, j), l), g.compose(i, g.compose(j, l)));
        prop_assert_eq!(g.compose(i, j), g.compose(j, i));
        prop_assert_eq!(g.compose(i, g.inverse(i)), g.identity());
    }

    #[test]
    fn power_product_inverts(i in 0usize..3, e in prop::collection::vec(-3i64..=3, 4)) {
        let g = &cyclotomic_groups()[i];
        let e = &e[..g.rank()];
        let neg: Vec<i64> = e.iter().map(|x| -x).collect();
        prop_assert!((&g.power_product(e) * &g.power_product(&neg)).is_one());
    }

    #[test]
    fn descent_pair_sums_to_one(i in 0usize..3, e in prop::collection::vec(-3i64..=3, 4), flip: bool) {
        let g = &cyclotomic_groups()[i];
        let mut d = g.power_product(&e[..g.rank()]);
        if flip {
            d = -&d;
        }
        let (l, m) = descent_pair(&d).unwrap();
        prop_assert!((&l + &m).is_one());
    }

    #[test]
    fn search_is_monotone(i in 0usize..13, b in 0u32..5) {
        let g = &quadratic_groups()[i];
        let small = solve_unit_equation(g, b).unwrap();
        let large = solve_unit_equation(g, b + 1).unwrap();
        let a: HashSet<_> = small.solutions.iter().map(|s| &s.lambda).collect();
        let c: HashSet<_> = large.solutions.iter().map(|s| &s.lambda).collect();
        prop_assert!(a.is_subset(&c));
        prop_assert_eq!(enumerate_units(g, b).len() as u128, box_size(g.rank(), b));
        for s in &large.solutions {
            prop_assert!((&s.lambda + &s.mu).is_one());
        }
    }

    #[test]
    fn normalization_preserves_n(b in 0u32..3, k in 0u32..4) {
        let g = &cyclotomic_groups()[0];
        for s in solve_s_unit_equation(g, b, k).unwrap().solutions {
            let t = normalize_solution(&s).unwrap();
            prop_assert_eq!(t.n_value, s.n_value);
            prop_assert!(t.v_lambda >= 0 && t.v_mu == 0);
            prop_assert!((&t.lambda + &t.mu).is_one());
        }
    }
}
