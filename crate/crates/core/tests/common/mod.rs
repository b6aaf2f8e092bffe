//! An independent model of the Grassmann algebra on four generators:
//! monomials are bitmasks, signs come from counting inversions. Shares no
//! code with the engine beyond the final comparison.

#![allow(dead_code)]

use std::collections::BTreeMap;

use bverify::{AlgebraElement, AlgebraSpec, Monomial};

/// Linear combination of bitmask monomials with integer coefficients.
pub type G = BTreeMap<u8, i64>;

pub fn mono(mask: u8) -> G {
    let mut g = G::new();
    g.insert(mask, 1);
    g
}

fn add_to(out: &mut G, mask: u8, c: i64) {
    let e = out.entry(mask).or_insert(0);
    *e += c;
    if *e == 0 {
        out.remove(&mask);
    }
}

pub fn add(a: &G, b: &G) -> G {
    let mut out = a.clone();
    for (&m, &c) in b {
        add_to(&mut out, m, c);
    }
    out
}

pub fn scale(a: &G, k: i64) -> G {
    a.iter()
        .filter(|&(_, &c)| c * k != 0)
        .map(|(&m, &c)| (m, c * k))
        .collect()
}

/// Sign of moving the generators of `b` past those of `a` into sorted
/// position: one factor of -1 per pair `i in a, j in b` with `i > j`.
fn merge_sign(a: u8, b: u8) -> i64 {
    let mut inversions = 0;
    for j in 0..4 {
        if b & (1 << j) != 0 {
            inversions += (a >> (j + 1)).count_ones();
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn mul(a: &G, b: &G) -> G {
    let mut out = G::new();
    for (&ma, &ca) in a {
        for (&mb, &cb) in b {
            if ma & mb == 0 {
                add_to(&mut out, ma | mb, merge_sign(ma, mb) * ca * cb);
            }
        }
    }
    out
}

pub fn degree(mask: u8) -> i64 {
    mask.count_ones() as i64
}

/// `(-1)^(mn)`.
pub fn chi(m: i64, n: i64) -> i64 {
    if (m * n).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Left partial derivative in generator `k` (0-based).
pub fn partial(k: u32, a: &G) -> G {
    let mut out = G::new();
    for (&m, &c) in a {
        if m & (1 << k) != 0 {
            let before = (m & ((1u8 << k) - 1)).count_ones();
            let sign = if before.is_multiple_of(2) { 1 } else { -1 };
            add_to(&mut out, m & !(1 << k), sign * c);
        }
    }
    out
}

/// `x1 . d3 . d2`.
pub fn d_odd(a: &G) -> G {
    mul(&mono(1), &partial(2, &partial(1, a)))
}

/// `d2 . d1`.
pub fn d_even(a: &G) -> G {
    partial(1, &partial(0, a))
}

/// `d2 . d1 + d4 . d3`.
pub fn d_bad(a: &G) -> G {
    add(&partial(1, &partial(0, a)), &partial(3, &partial(2, a)))
}

/// `E(ab) - E(a) b - chi(a,b) E(b) a + E(1) ab` on basis monomials.
pub fn omega2(e: &dyn Fn(&G) -> G, a: u8, b: u8) -> G {
    let (ga, gb) = (mono(a), mono(b));
    let ab = mul(&ga, &gb);
    let mut out = e(&ab);
    out = add(&out, &scale(&mul(&e(&ga), &gb), -1));
    out = add(&out, &scale(&mul(&e(&gb), &ga), -chi(degree(a), degree(b))));
    add(&out, &mul(&e(&mono(0)), &ab))
}

/// All 16 masks in the engine's basis order (length, then lexicographic).
pub fn masks_in_basis_order() -> Vec<u8> {
    let mut masks: Vec<u8> = (0..16).collect();
    masks.sort_by_key(|&m| {
        let idx: Vec<u32> = (0..4).filter(|i| m & (1 << i) != 0).collect();
        (idx.len(), idx)
    });
    masks
}

pub fn to_engine(spec: &AlgebraSpec, g: &G) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (&m, &c) in g {
        let idx: Vec<usize> = (0..4).filter(|i| m & (1 << i) != 0).collect();
        let mono = spec.monomial(idx).unwrap().unwrap();
        out.add_term(mono, spec.domain().from_int(c));
    }
    out
}

pub fn to_mask(m: &Monomial) -> u8 {
    m.indices().iter().fold(0u8, |acc, &i| acc | (1 << i))
}
