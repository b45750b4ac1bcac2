//! Primitive binary quadratic forms `a x^2 + b x y + c y^2` of fundamental
//! discriminant and their class groups.
//!
//! Negative discriminants use positive-definite reduced forms, one per class.
//! Positive discriminants use cycles of reduced indefinite forms under the
//! reduction operator `rho`; each cycle is one proper-equivalence (narrow)
//! class.

use std::collections::HashMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::isqrt_u64;
use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Form {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Form {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Form { a, b, c }
    }

    pub fn disc(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// Image under the nontrivial automorphism of the quadratic field.
    pub fn conjugate(&self) -> Form {
        Form::new(self.a, -self.b, self.c)
    }

    /// `(-a, b, -c)`, the form twisted by a generator of norm -1 in Q.
    pub fn negate(&self) -> Form {
        Form::new(-self.a, self.b, -self.c)
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }
}

impl std::fmt::Display for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// True for discriminants of quadratic fields.
pub fn is_fundamental(disc: i64) -> bool {
    use crate::arith::is_squarefree;
    match disc.rem_euclid(4) {
        1 => disc != 1 && is_squarefree(disc),
        0 => {
            let m = disc / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m)
        }
        _ => false,
    }
}

/// `x^2 + s x y + (s - D)/4 y^2` with `s = D mod 2`.
pub fn principal_form(disc: i64) -> Form {
    let s = disc.rem_euclid(2);
    Form::new(1, s, (s - disc) / 4)
}

fn isqrt_disc(disc: i64) -> i64 {
    isqrt_u64(disc as u64) as i64
}

/// Reduced positive-definite form: `|b| <= a <= c`, and `b >= 0` if `|b| = a` or `a = c`.
pub fn is_reduced_definite(f: &Form) -> bool {
    f.a > 0 && f.b.abs() <= f.a && f.a <= f.c && !((f.b.abs() == f.a || f.a == f.c) && f.b < 0)
}

pub fn reduce_definite(f: &Form) -> Form {
    debug_assert!(f.disc() < 0 && f.a > 0);
    let (mut a, mut b) = (f.a as i128, f.b as i128);
    let mut c: i128;
    let disc = f.disc() as i128;
    loop {
        // b into (-a, a]
        let two_a = 2 * a;
        let mut r = b.rem_euclid(two_a);
        if r > a {
            r -= two_a;
        }
        b = r;
        c = (b * b - disc) / (4 * a);
        if a > c {
            (a, b) = (c, -b);
            continue;
        }
        if a == c && b < 0 {
            b = -b;
        }
        return Form::new(a as i64, b as i64, c as i64);
    }
}

/// Reduced indefinite form: `0 < b < sqrt D` and `sqrt D - b < 2|a| < sqrt D + b`.
pub fn is_reduced_indefinite(f: &Form) -> bool {
    let d = f.disc() as i128;
    let (a, b) = ((f.a as i128).abs(), f.b as i128);
    if b <= 0 || b * b >= d || a == 0 {
        return false;
    }
    let lo = 2 * a + b; // sqrt D < 2|a| + b
    let hi = 2 * a - b; // 2|a| - b < sqrt D
    lo * lo > d && (hi < 0 || hi * hi < d)
}

/// Normalize `b` modulo `2|a|`, then set `c` from the discriminant.
fn normalize_indefinite(a: i128, b: i128, disc: i128, s: i128) -> Form {
    let m = 2 * a.abs();
    let b = if a * a < disc {
        // b in (s - 2|a|, s]
        s - (s - b).rem_euclid(m)
    } else {
        // b in (-|a|, |a|]
        let mut r = b.rem_euclid(m);
        if r > a.abs() {
            r -= m;
        }
        r
    };
    let c = (b * b - disc) / (4 * a);
    Form::new(a as i64, b as i64, c as i64)
}

/// The reduction operator `rho(a, b, c) = normalize(c, -b, a)`.
pub fn rho(f: &Form) -> Form {
    let disc = f.disc() as i128;
    let s = isqrt_disc(f.disc()) as i128;
    normalize_indefinite(f.c as i128, -(f.b as i128), disc, s)
}

pub fn reduce_indefinite(f: &Form) -> Form {
    debug_assert!(f.disc() > 0);
    let disc = f.disc() as i128;
    let s = isqrt_disc(f.disc()) as i128;
    let mut g = normalize_indefinite(f.a as i128, f.b as i128, disc, s);
    while !is_reduced_indefinite(&g) {
        g = rho(&g);
    }
    g
}

/// The `rho`-cycle through a reduced indefinite form.
pub fn cycle(f: &Form) -> Vec<Form> {
    debug_assert!(is_reduced_indefinite(f));
    let mut out = vec![*f];
    let mut g = rho(f);
    while g != *f {
        out.push(g);
        g = rho(&g);
    }
    out
}

/// Composition of two primitive forms of the same discriminant, unreduced.
///
/// With `e = gcd(a1, a2, (b1 + b2)/2) = u a1 + v a2 + w (b1 + b2)/2`, the
/// composite is `(a1 a2 / e^2, B, *)` where
/// `B = (u a1 b2 + v a2 b1 + w (b1 b2 + D)/2) / e` modulo `2 a1 a2 / e^2`.
pub fn compose_raw(f: &Form, g: &Form) -> Form {
    let disc = f.disc() as i128;
    debug_assert_eq!(f.disc(), g.disc());
    let (a1, b1) = (f.a as i128, f.b as i128);
    let (a2, b2) = (g.a as i128, g.b as i128);
    let s = (b1 + b2) / 2;
    let e1 = a1.extended_gcd(&a2);
    let e2 = e1.gcd.extended_gcd(&s);
    let e = e2.gcd;
    let (u, v, w) = (e2.x * e1.x, e2.x * e1.y, e2.y);
    debug_assert_eq!(u * a1 + v * a2 + w * s, e);
    let a3 = a1 * a2 / (e * e);
    let b = (u * a1 * b2 + v * a2 * b1 + w * (b1 * b2 + disc) / 2) / e;
    let m = 2 * a3.abs();
    let b3 = b.rem_euclid(m);
    let c3 = (b3 * b3 - disc) / (4 * a3);
    debug_assert_eq!(b3 * b3 - 4 * a3 * c3, disc);
    Form::new(a3 as i64, b3 as i64, c3 as i64)
}

/// All reduced forms of a fundamental discriminant, in increasing order.
pub fn reduced_forms(disc: i64) -> Result<Vec<Form>> {
    if !is_fundamental(disc) {
        return Err(domain(format!("{disc} is not a fundamental discriminant")));
    }
    let mut out = Vec::new();
    if disc < 0 {
        let amax = isqrt_u64((-disc / 3) as u64) as i64;
        for a in 1..=amax {
            for b in -a + 1..=a {
                let num = b * b - disc;
                if num % (4 * a) != 0 {
                    continue;
                }
                let f = Form::new(a, b, num / (4 * a));
                if is_reduced_definite(&f) && f.is_primitive() {
                    out.push(f);
                }
            }
        }
    } else {
        let s = isqrt_disc(disc);
        for b in 1..=s {
            let num = disc - b * b;
            if num % 4 != 0 {
                continue;
            }
            let m = num / 4; // = -a c > 0
            for a_abs in 1..=m {
                if m % a_abs != 0 {
                    continue;
                }
                for a in [a_abs, -a_abs] {
                    let f = Form::new(a, b, -m / a);
                    if is_reduced_indefinite(&f) && f.is_primitive() {
                        out.push(f);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Proper-equivalence class group of a fundamental discriminant.
#[derive(Clone, Debug)]
pub struct FormClassGroup {
    disc: i64,
    /// Canonical representative of each class: the least reduced form in it.
    reps: Vec<Form>,
    /// Every reduced form mapped to its class index.
    index: HashMap<Form, usize>,
    identity: usize,
}

impl FormClassGroup {
    pub fn new(disc: i64) -> Result<Self> {
        let forms = reduced_forms(disc)?;
        let mut index = HashMap::new();
        let mut reps = Vec::new();
        for f in &forms {
            if index.contains_key(f) {
                continue;
            }
            let members = if disc < 0 { vec![*f] } else { cycle(f) };
            // forms are visited in increasing order, so f is the least member
            for g in members {
                index.insert(g, reps.len());
            }
            reps.push(*f);
        }
        let mut group = FormClassGroup { disc, reps, index, identity: 0 };
        group.identity = group.class_of(&principal_form(disc));
        Ok(group)
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    /// Narrow class number for positive discriminants, class number otherwise.
    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[Form] {
        &self.reps
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn reduce(&self, f: &Form) -> Form {
        if self.disc < 0 {
            reduce_definite(f)
        } else {
            reduce_indefinite(f)
        }
    }

    /// Class index of any primitive form of this discriminant.
    pub fn class_of(&self, f: &Form) -> usize {
        debug_assert_eq!(f.disc(), self.disc);
        let r = self.reduce(f);
        *self
            .index
            .get(&r)
            .unwrap_or_else(|| panic!("reduced form {r} missing from the class table"))
    }

    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.class_of(&compose_raw(&self.reps[i], &self.reps[j]))
    }

    pub fn inverse(&self, i: usize) -> usize {
        let f = self.reps[i];
        self.class_of(&Form::new(f.a, -f.b, f.c))
    }

    /// Full composition table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n).map(|i| (0..n).map(|j| self.compose(i, j)).collect()).collect()
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != self.identity {
            cur = self.compose(cur, i);
            k += 1;
        }
        k
    }

    /// Classes `x` with `x^2 = 1`.
    pub fn two_torsion(&self) -> usize {
        (0..self.order())
            .filter(|&i| self.compose(i, i) == self.identity)
            .count()
    }

    /// Image of the class of `-1` times a class, realized by `(a,b,c) -> (-a,b,-c)`.
    pub fn negate_class(&self, i: usize) -> usize {
        self.class_of(&self.reps[i].negate())
    }

    /// Orbits of the narrow classes under `negate_class`: the ordinary classes.
    /// Each orbit lists its members in increasing index order.
    pub fn wide_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for i in 0..self.order() {
            if seen[i] {
                continue;
            }
            let j = if self.disc > 0 { self.negate_class(i) } else { i };
            seen[i] = true;
            seen[j] = true;
            let mut orbit = vec![i];
            if j != i {
                orbit.push(j);
            }
            orbit.sort();
            out.push(orbit);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_discriminants() {
        for d in [-3, -4, -7, -8, -20, -23, 5, 8, 12, 13, 136] {
            assert!(is_fundamental(d), "{d}");
        }
        for d in [-12, -16, 1, 4, 9, 20, 45, 2, 3] {
            assert!(!is_fundamental(d), "{d}");
        }
    }

    #[test]
    fn definite_reduced_forms() {
        assert_eq!(
            reduced_forms(-20).unwrap(),
            vec![Form::new(1, 0, 5), Form::new(2, 2, 3)]
        );
        assert_eq!(
            reduced_forms(-23).unwrap(),
            vec![Form::new(1, 1, 6), Form::new(2, -1, 3), Form::new(2, 1, 3)]
        );
        assert_eq!(reduced_forms(-4).unwrap(), vec![Form::new(1, 0, 1)]);
        assert!(reduced_forms(-12).is_err());
    }

    #[test]
    fn definite_reduction_is_idempotent_and_preserves_disc() {
        let f = Form::new(7, 13, 7);
        let r = reduce_definite(&f);
        assert_eq!(r.disc(), f.disc());
        assert!(is_reduced_definite(&r));
        assert_eq!(reduce_definite(&r), r);
    }

    #[test]
    fn indefinite_cycles() {
        // disc 12: two narrow classes, the principal cycle and its negative
        let g = FormClassGroup::new(12).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.wide_classes().len(), 1);
        // disc 5: one class
        let g = FormClassGroup::new(5).unwrap();
        assert_eq!(g.order(), 1);
        for f in reduced_forms(136).unwrap() {
            assert!(cycle(&f).iter().all(is_reduced_indefinite));
        }
    }

    #[test]
    fn class_numbers_of_small_discriminants() {
        let h = |d| FormClassGroup::new(d).unwrap().order();
        assert_eq!(h(-20), 2);
        assert_eq!(h(-23), 3);
        assert_eq!(h(-4), 1);
        assert_eq!(h(-3), 1);
        assert_eq!(h(-84), 4);
        assert_eq!(h(-47), 5);
        // narrow class numbers
        assert_eq!(h(12), 2);
        assert_eq!(h(136), 4); // d = 34: h = 2, h+ = 4
        assert_eq!(h(40), 2);
    }

    #[test]
    fn composition_in_disc_minus_23() {
        let g = FormClassGroup::new(-23).unwrap();
        let x = g.class_of(&Form::new(2, 1, 3));
        assert_eq!(g.element_order(x), 3);
        assert_eq!(g.compose(x, g.inverse(x)), g.identity());
        assert_eq!(g.two_torsion(), 1);
    }
}
