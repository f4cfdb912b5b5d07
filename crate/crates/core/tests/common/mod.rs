//! Brute-force reference implementations used to check the q-string
//! algorithms. Nothing here calls the library's combinatorics: strings are
//! recognised by trying every possible base, and decompositions come from
//! exhaustive partition search.
#![allow(dead_code)]

use num_traits::{One, Signed};
use qonsager_core::scalar::{int, ratio, Scalar};

/// A q-string as a bare `(ℓ, a)` pair.
pub type Str = (usize, Scalar);

pub fn power(q: &Scalar, e: i64) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..e.unsigned_abs() {
        acc *= q;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// `{a q^{2i-ℓ+1} : 0 ≤ i < ℓ}`, smallest exponent first.
pub fn elements(q: &Scalar, s: &Str) -> Vec<Scalar> {
    let l = s.0 as i64;
    (0..l).map(|i| &s.1 * power(q, 2 * i - l + 1)).collect()
}

fn sorted(mut v: Vec<Scalar>) -> Vec<Scalar> {
    v.sort();
    v
}

/// The string whose elements are exactly `items` (as a multiset), found by
/// letting each item play the role of the first element.
pub fn recognise(q: &Scalar, items: &[Scalar]) -> Option<Str> {
    let l = items.len();
    if l == 0 {
        return None;
    }
    let target = sorted(items.to_vec());
    for x in items {
        let candidate = (l, x * power(q, l as i64 - 1));
        if sorted(elements(q, &candidate)) == target {
            return Some(candidate);
        }
    }
    None
}

/// Adjacency straight from the definition: the set union is a q-string
/// strictly containing both.
pub fn adjacent(q: &Scalar, a: &Str, b: &Str) -> bool {
    let mut union = elements(q, a);
    for x in elements(q, b) {
        if !union.contains(&x) {
            union.push(x);
        }
    }
    union.len() > a.0 && union.len() > b.0 && recognise(q, &union).is_some()
}

pub fn general_position(q: &Scalar, list: &[Str]) -> bool {
    (0..list.len()).all(|i| (i + 1..list.len()).all(|j| !adjacent(q, &list[i], &list[j])))
}

pub fn flip(list: &[Str], signs: u32) -> Vec<Str> {
    list.iter()
        .enumerate()
        .map(|(i, (l, a))| {
            if signs >> i & 1 == 1 {
                (*l, a.recip())
            } else {
                (*l, a.clone())
            }
        })
        .collect()
}

pub fn strong_general_position(q: &Scalar, list: &[Str]) -> bool {
    (0..1u32 << list.len()).all(|signs| general_position(q, &flip(list, signs)))
}

pub fn canonical(list: &[Str]) -> Vec<Str> {
    let mut v = list.to_vec();
    v.sort();
    v
}

/// Equivalence by trying every inversion pattern on the left.
pub fn equivalent(a: &[Str], b: &[Str]) -> bool {
    let target = canonical(b);
    a.len() == b.len() && (0..1u32 << a.len()).any(|signs| canonical(&flip(a, signs)) == target)
}

/// Every way to split `items` into blocks accepted by `block`, each block
/// mapped to its string. Results are canonicalised and deduplicated.
fn partitions(items: &[Scalar], block: &dyn Fn(&[Scalar]) -> Option<Str>) -> Vec<Vec<Str>> {
    fn go(
        rest: &[Scalar],
        acc: &mut Vec<Str>,
        out: &mut Vec<Vec<Str>>,
        block: &dyn Fn(&[Scalar]) -> Option<Str>,
    ) {
        if rest.is_empty() {
            out.push(canonical(acc));
            return;
        }
        let others = &rest[1..];
        for mask in 0..1u32 << others.len() {
            let mut chosen = vec![rest[0].clone()];
            let mut left = Vec::new();
            for (i, x) in others.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    chosen.push(x.clone());
                } else {
                    left.push(x.clone());
                }
            }
            if let Some(s) = block(&chosen) {
                acc.push(s);
                go(&left, acc, out, block);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(items, &mut Vec::new(), &mut out, block);
    out.sort();
    out.dedup();
    out
}

/// All decompositions of `omega` into q-strings in general position.
pub fn gp_decompositions(q: &Scalar, omega: &[Scalar]) -> Vec<Vec<Str>> {
    partitions(omega, &|b| recognise(q, b))
        .into_iter()
        .filter(|p| general_position(q, p))
        .collect()
}

/// All `{Sᵢ}` strongly in general position with `Ω = ⋃ (Sᵢ ∪ Sᵢ⁻¹)`.
pub fn strong_symmetric_decompositions(q: &Scalar, omega: &[Scalar]) -> Vec<Vec<Str>> {
    let block = |b: &[Scalar]| -> Option<Str> {
        if !b.len().is_multiple_of(2) {
            return None;
        }
        let l = b.len() / 2;
        let target = sorted(b.to_vec());
        for x in b {
            let s = (l, x * power(q, l as i64 - 1));
            let mut both = elements(q, &s);
            both.extend(elements(q, &(l, s.1.recip())));
            if sorted(both) == target {
                return Some(s);
            }
        }
        None
    };
    partitions(omega, &block)
        .into_iter()
        .filter(|p| strong_general_position(q, p))
        .collect()
}

/// Bases `2^k` and `3·2^k` for `|k| ≤ reach`.
pub fn two_three_bases(reach: i64) -> Vec<Scalar> {
    let two = int(2);
    let mut out = Vec::new();
    for k in -reach..=reach {
        out.push(power(&two, k));
        out.push(int(3) * power(&two, k));
    }
    out
}

/// All multisets of size `1..=max` drawn from `values`.
pub fn multisets(values: &[Scalar], max: usize) -> Vec<Vec<Scalar>> {
    fn go(
        values: &[Scalar],
        start: usize,
        max: usize,
        acc: &mut Vec<Scalar>,
        out: &mut Vec<Vec<Scalar>>,
    ) {
        if !acc.is_empty() {
            out.push(acc.clone());
        }
        if acc.len() == max {
            return;
        }
        for i in start..values.len() {
            acc.push(values[i].clone());
            go(values, i, max, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(values, 0, max, &mut Vec::new(), &mut out);
    out
}

pub fn q_two() -> Scalar {
    int(2)
}

/// A handful of bases covering positive, negative and fractional values,
/// including the self-inverse cosets of `±1` and `±q`.
pub fn mixed_bases() -> Vec<Scalar> {
    vec![
        int(1),
        int(-1),
        int(2),
        int(-2),
        int(3),
        ratio(1, 3),
        int(4),
        ratio(1, 2),
        int(6),
        ratio(-3, 2),
    ]
}

pub fn abs_at_least_one(x: &Scalar) -> bool {
    x.abs() >= Scalar::one()
}
