//! Enumeration of the exponent box `|e_i| <= B` by a reflected mixed-radix
//! Gray code, so consecutive units differ by one generator or its inverse.

use rayon::prelude::*;

use super::UnitGroupDesc;
use crate::field::FieldElement;

/// Units `t^s prod u_i^e_i`, `s in {0, 1}`, `|e_i| <= bound`.
///
/// The box is split along the last exponent; each slice is walked by the Gray
/// code on the remaining exponents. Output order is deterministic: slices in
/// increasing last exponent, and within a slice `u, t u` pairs in walk order.
pub fn enumerate_units(group: &UnitGroupDesc, bound: u32) -> Vec<FieldElement> {
    let r = group.rank();
    if r == 0 {
        return with_torsion(group, vec![FieldElement::one(group.field())]);
    }
    let b = bound as i64;
    let slices: Vec<Vec<FieldElement>> = (-b..=b)
        .into_par_iter()
        .map(|last| {
            let start = group.power_product(&start_exponents(r, b, last));
            with_torsion(group, walk(group, start, r - 1, b))
        })
        .collect();
    slices.into_iter().flatten().collect()
}

/// Box cardinality `2 (2B + 1)^r`.
pub fn box_size(rank: usize, bound: u32) -> u128 {
    2 * (2 * bound as u128 + 1).pow(rank as u32)
}

fn start_exponents(r: usize, b: i64, last: i64) -> Vec<i64> {
    let mut e = vec![-b; r];
    e[r - 1] = last;
    e
}

fn with_torsion(group: &UnitGroupDesc, units: Vec<FieldElement>) -> Vec<FieldElement> {
    let mut out = Vec::with_capacity(2 * units.len());
    for u in units {
        let t = group.torsion_times(&u);
        out.push(u);
        out.push(t);
    }
    out
}

/// Gray-code walk over the first `k` coordinates, all starting at `-b`.
fn walk(group: &UnitGroupDesc, start: FieldElement, k: usize, b: i64) -> Vec<FieldElement> {
    let mut out = Vec::new();
    let mut cur = start;
    let mut digits = vec![-b; k];
    let mut dir = vec![1i64; k];
    out.push(cur.clone());
    loop {
        let mut j = 0;
        while j < k && ((dir[j] > 0 && digits[j] == b) || (dir[j] < 0 && digits[j] == -b)) {
            dir[j] = -dir[j];
            j += 1;
        }
        if j == k {
            return out;
        }
        digits[j] += dir[j];
        cur = if dir[j] > 0 {
            &cur * &group.generators()[j]
        } else {
            &cur * &group.inverses()[j]
        };
        out.push(cur.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::NumberField;
    use crate::poly::Polynomial;
    use std::collections::HashSet;

    fn golden() -> UnitGroupDesc {
        let k = NumberField::new(Polynomial::from_ints(&[-1, -1, 1])).unwrap();
        let phi = FieldElement::theta(&k);
        UnitGroupDesc::new(&k, None, vec![phi], false).unwrap()
    }

    #[test]
    fn box_counts() {
        let g = golden();
        assert_eq!(enumerate_units(&g, 0).len(), 2);
        let one = enumerate_units(&g, 1);
        assert_eq!(one.len(), 6);
        let set: HashSet<_> = one.iter().cloned().collect();
        let phi = FieldElement::theta(g.field());
        assert!(set.contains(&phi));
        assert!(set.contains(&phi.inverse().unwrap()));
        assert!(set.contains(&-&phi));
        for b in 0..6 {
            let units = enumerate_units(&g, b);
            assert_eq!(units.len() as u128, box_size(1, b));
            let distinct: HashSet<_> = units.iter().collect();
            assert_eq!(distinct.len(), units.len());
        }
    }

    #[test]
    fn walk_matches_direct_powers() {
        let k = NumberField::new(Polynomial::from_ints(&[-1, -2, 1, 1])).unwrap();
        let t = FieldElement::theta(&k);
        let g = UnitGroupDesc::new(&k, None, vec![t.clone(), (&t + &FieldElement::one(&k))], false).unwrap();
        let units = enumerate_units(&g, 2);
        assert_eq!(units.len(), 50);
        let mut direct = HashSet::new();
        for a in -2..=2 {
            for b in -2..=2 {
                let u = g.power_product(&[a, b]);
                direct.insert(-&u);
                direct.insert(u);
            }
        }
        assert_eq!(units.into_iter().collect::<HashSet<_>>(), direct);
    }
}
