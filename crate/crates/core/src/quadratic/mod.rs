//! Quadratic fields computed from scratch: class groups from binary forms,
//! fundamental units from continued fractions, and the local norm test for -1.

pub mod forms;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factor_u64, is_squarefree, isqrt_u64, rat_int};
use crate::error::{domain, Result};
use crate::field::{FieldElement, NumberField};
use crate::poly::Polynomial;

pub use forms::{Form, FormClassGroup};

/// `Q(sqrt d)` with its ring of integers `Z[omega]`.
#[derive(Clone, Debug)]
pub struct QuadraticField {
    d: i64,
    disc: i64,
    field: Arc<NumberField>,
}

impl QuadraticField {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !is_squarefree(d) {
            return Err(domain(format!("{d} is not a squarefree integer other than 0 and 1")));
        }
        let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
        let field = NumberField::new(omega_min_poly(disc))?;
        Ok(QuadraticField { d, disc, field })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    /// The field `Q[x]/(m)` with `m` the minimal polynomial of `omega`.
    pub fn number_field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// `x + y omega` as a field element.
    pub fn element(&self, x: &BigInt, y: &BigInt) -> FieldElement {
        FieldElement::from_coeffs(
            &self.field,
            &[num_rational::BigRational::from_integer(x.clone()), num_rational::BigRational::from_integer(y.clone())],
        )
        .expect("two coordinates")
    }
}

/// Minimal polynomial of `omega = (s + sqrt D)/2`, `s = D mod 2`:
/// `x^2 - s x + (s - D)/4`.
pub fn omega_min_poly(disc: i64) -> Polynomial {
    let s = disc.rem_euclid(2);
    Polynomial::from_ints(&[(s - disc) / 4, -s, 1])
}

/// Fundamental unit `x + y omega > 1` and its norm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundamentalUnit {
    pub x: BigInt,
    pub y: BigInt,
    pub norm: i8,
    /// Period length of the continued fraction of `omega`.
    pub period: usize,
}

/// Continued fraction of `omega = (P0 + sqrt D)/Q0` with `P0 = s`, `Q0 = 2`.
///
/// The period ends at the first `k >= 1` with `Q_k = 2`; then
/// `eps = p_{l-1} - q_{l-1} conj(omega) = (p - q s) + q omega`, of norm `(-1)^l`.
pub fn fundamental_unit_cf(disc: i64) -> FundamentalUnit {
    debug_assert!(disc > 0);
    let s = disc.rem_euclid(2);
    let r = isqrt_u64(disc as u64) as i64;
    let (mut p_k, mut q_k) = (s, 2i64);
    // convergents p_{-1}/q_{-1} = 1/0, p_{-2}/q_{-2} = 0/1
    let (mut p_prev, mut p_cur) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q_cur) = (BigInt::one(), BigInt::zero());
    let mut k = 0usize;
    loop {
        debug_assert!(q_k > 0);
        let a = (p_k + r).div_euclid(q_k);
        let p_next = &p_cur * a + &p_prev;
        let q_next = &q_cur * a + &q_prev;
        p_prev = std::mem::replace(&mut p_cur, p_next);
        q_prev = std::mem::replace(&mut q_cur, q_next);
        let p_new = a * q_k - p_k;
        q_k = (disc - p_new * p_new) / q_k;
        p_k = p_new;
        k += 1;
        if q_k == 2 {
            let x = &p_cur - &q_cur * s;
            return FundamentalUnit {
                x,
                y: q_cur,
                norm: if k % 2 == 0 { 1 } else { -1 },
                period: k,
            };
        }
    }
}

/// Fundamental unit of `Q(sqrt d)`, `d > 1`, as an element of `Z[omega]`.
pub fn fundamental_unit(d: i64) -> Result<(FieldElement, i8)> {
    if d <= 1 {
        return Err(domain(format!("fundamental unit needs d > 1, got {d}")));
    }
    let k = QuadraticField::new(d)?;
    let u = fundamental_unit_cf(k.disc);
    Ok((k.element(&u.x, &u.y), u.norm))
}

/// Norm of the fundamental unit read from the forms: it is -1 exactly when
/// the negated principal form is properly equivalent to the principal form.
pub fn unit_norm_from_forms(group: &FormClassGroup) -> i8 {
    debug_assert!(group.disc() > 0);
    let p = forms::principal_form(group.disc());
    if group.class_of(&p.negate()) == group.class_of(&p) {
        -1
    } else {
        1
    }
}

#[derive(Clone, Debug)]
pub struct QuadraticInvariants {
    pub d: i64,
    pub disc: i64,
    pub class_number: usize,
    pub narrow_class_number: usize,
    /// Real fields only.
    pub fundamental_unit: Option<FieldElement>,
    pub unit_norm: Option<i8>,
}

pub fn class_numbers(d: i64) -> Result<QuadraticInvariants> {
    let k = QuadraticField::new(d)?;
    let group = FormClassGroup::new(k.disc)?;
    let narrow = group.order();
    let wide = group.wide_classes().len();
    let (unit, norm) = if d > 0 {
        let u = fundamental_unit_cf(k.disc);
        let from_forms = unit_norm_from_forms(&group);
        if from_forms != u.norm {
            return Err(domain(format!(
                "unit norm mismatch for d = {d}: continued fraction {}, forms {from_forms}",
                u.norm
            )));
        }
        (Some(k.element(&u.x, &u.y)), Some(u.norm))
    } else {
        (None, None)
    };
    Ok(QuadraticInvariants {
        d,
        disc: k.disc,
        class_number: wide,
        narrow_class_number: if d > 0 { narrow } else { wide },
        fundamental_unit: unit,
        unit_norm: norm,
    })
}

/// Places of Q, for local symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Place {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinite => write!(f, "inf"),
        }
    }
}

/// Hilbert symbol `(-1, d)_v` for squarefree `d`.
pub fn hilbert_minus_one(d: i64, place: Place) -> i8 {
    match place {
        Place::Infinite => {
            if d < 0 {
                -1
            } else {
                1
            }
        }
        Place::Finite(2) => {
            let mut odd = d;
            while odd % 2 == 0 {
                odd /= 2;
            }
            if odd.rem_euclid(4) == 1 {
                1
            } else {
                -1
            }
        }
        Place::Finite(q) => {
            if d.rem_euclid(q as i64) != 0 || q % 4 == 1 {
                1
            } else {
                -1
            }
        }
    }
}

/// Whether `-1` is a norm from `Q(sqrt d)`, i.e. `x^2 - d y^2 = -1` has a
/// rational solution, decided by the local symbols at 2, infinity and the
/// primes dividing `d`.
pub fn minus_one_is_global_norm(d: i64) -> bool {
    if d < 0 {
        return false;
    }
    let mut places = vec![Place::Infinite, Place::Finite(2)];
    places.extend(factor_u64(d.unsigned_abs()).into_iter().map(|(q, _)| Place::Finite(q)));
    places.iter().all(|&v| hilbert_minus_one(d, v) == 1)
}

/// Integral `x + y omega` as a rational pair in the basis `1, sqrt d`.
pub fn to_sqrt_basis(disc: i64, x: &BigInt, y: &BigInt) -> (num_rational::BigRational, num_rational::BigRational) {
    let s = disc.rem_euclid(2);
    let half = num_rational::BigRational::new(BigInt::one(), BigInt::from(2));
    // omega = s/2 + sqrt(D)/2, sqrt D = 2 sqrt d when D = 4d, else sqrt d
    let y = num_rational::BigRational::from_integer(y.clone());
    let rational = num_rational::BigRational::from_integer(x.clone()) + &y * rat_int(s) * &half;
    let irrational = if s == 1 { y * half } else { y };
    (rational, irrational)
}
