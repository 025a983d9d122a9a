//! Independent reference implementations used only by tests.
//!
//! None of this touches the library's Pieri or raising-operator code: the
//! Pfaffian and determinant formulas work directly on polynomials in the
//! special classes, and the Pieri oracle is the horizontal-strip rule for
//! Schur Q-functions.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use isoschubert::{GiambelliPolynomial, Partition};

/// Integer polynomial in special classes; keys are degrees sorted descending,
/// with zero degrees dropped.
pub type Poly = BTreeMap<Vec<u32>, BigInt>;

fn key(mut degrees: Vec<u32>) -> Vec<u32> {
    degrees.retain(|&d| d > 0);
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees
}

pub fn add(into: &mut Poly, degrees: Vec<u32>, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let entry = into.entry(key(degrees)).or_default();
    *entry += c;
    if entry.is_zero() {
        into.retain(|_, v| !v.is_zero());
    }
}

pub fn generator(d: i64) -> Poly {
    let mut p = Poly::new();
    if d >= 0 {
        add(&mut p, vec![d as u32], BigInt::one());
    }
    p
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut degrees = ma.clone();
            degrees.extend_from_slice(mb);
            add(&mut out, degrees, ca * cb);
        }
    }
    out
}

pub fn scale(a: &Poly, s: &BigInt) -> Poly {
    let mut out = Poly::new();
    for (m, c) in a {
        add(&mut out, m.clone(), c * s);
    }
    out
}

pub fn sum(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (m, c) in b {
        add(&mut out, m.clone(), c.clone());
    }
    out
}

/// Converts a q-free library polynomial with integral coefficients.
pub fn from_library(poly: &GiambelliPolynomial) -> Poly {
    let mut out = Poly::new();
    for (m, c) in poly.iter() {
        assert_eq!(m.q, 0, "q in a classical polynomial: {poly}");
        let c = c.to_integer().unwrap_or_else(|| panic!("non-integral coefficient in {poly}"));
        add(&mut out, m.degrees.clone(), c);
    }
    out
}

/// `Q_{(a,b)} = Q_a Q_b + 2 Σ_{m=1}^{b} (−1)^m Q_{a+m} Q_{b−m}`.
fn q_pair(a: u32, b: u32) -> Poly {
    let mut out = mul(&generator(a as i64), &generator(b as i64));
    for m in 1..=b {
        let sign = if m % 2 == 1 { -2 } else { 2 };
        let term = mul(&generator((a + m) as i64), &generator((b - m) as i64));
        out = sum(&out, &scale(&term, &BigInt::from(sign)));
    }
    out
}

/// Pfaffian of the antisymmetric matrix with entries `Q_{(λ_i, λ_j)}`,
/// expanded along the first row.
fn pfaffian(parts: &[u32]) -> Poly {
    if parts.is_empty() {
        return generator(0);
    }
    let mut out = Poly::new();
    for j in 1..parts.len() {
        let rest: Vec<u32> = parts
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != 0 && i != j)
            .map(|(_, &x)| x)
            .collect();
        let sign = if j % 2 == 1 { 1 } else { -1 };
        let term = mul(&q_pair(parts[0], parts[j]), &pfaffian(&rest));
        out = sum(&out, &scale(&term, &BigInt::from(sign)));
    }
    out
}

/// Schur's Pfaffian formula for `Q_λ` (strict `λ`) as a polynomial in `Q_p`.
pub fn schur_q(lambda: &Partition) -> Poly {
    let mut parts = lambda.parts().to_vec();
    if parts.len() == 1 {
        return generator(parts[0] as i64);
    }
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    pfaffian(&parts)
}

/// `P_λ = 2^{−ℓ(λ)} Q_λ` rewritten in `P_p = Q_p / 2`.
pub fn schur_p(lambda: &Partition) -> Poly {
    let len = lambda.len();
    let mut out = Poly::new();
    for (m, c) in schur_q(lambda) {
        let c: BigInt = c << m.len();
        let divisor = BigInt::one() << len;
        assert!((&c % &divisor).is_zero(), "P-expansion of {lambda} is not integral");
        add(&mut out, m, c / divisor);
    }
    out
}

/// `det(σ_{λ_i + j − i})` by expansion over permutations.
pub fn jacobi_trudi(lambda: &Partition) -> Poly {
    let parts = lambda.parts();
    let len = parts.len();
    let mut out = Poly::new();
    let mut perm: Vec<usize> = (0..len).collect();
    permutations(&mut perm, 0, &mut |perm| {
        let mut term = generator(0);
        for (i, &j) in perm.iter().enumerate() {
            let d = parts[i] as i64 + j as i64 - i as i64;
            if d < 0 {
                return;
            }
            term = mul(&term, &generator(d));
        }
        let inversions = (0..len)
            .flat_map(|a| (a + 1..len).map(move |b| (a, b)))
            .filter(|&(a, b)| perm[a] > perm[b])
            .count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        out = sum(&out, &scale(&term, &BigInt::from(sign)));
    });
    out
}

fn permutations(perm: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == perm.len() {
        visit(perm);
        return;
    }
    for i in start..perm.len() {
        perm.swap(start, i);
        permutations(perm, start + 1, visit);
        perm.swap(start, i);
    }
}

/// Horizontal-strip Pieri rule for Q-functions: `P_λ Q_r = Σ 2^{a(μ/λ)} P_μ`
/// over strict `μ` interlacing `λ` with `μ_1 ≤ max_part`, where `a(μ/λ)`
/// counts columns `i` of the ordinary diagram holding a box of `μ/λ` while
/// column `i + 1` holds none.
///
/// Returns `(μ, a(μ/λ), ℓ(μ) − ℓ(λ))`. Hence `Q_λ Q_r` has exponent
/// `a − (ℓ(μ) − ℓ(λ))` and `P_λ P_r` has exponent `a − 1`.
pub fn q_pieri(lambda: &Partition, r: u32, max_part: u32) -> Vec<(Partition, u32, u32)> {
    let old = lambda.parts();
    let mut out = Vec::new();
    let mut current = Vec::new();
    interlace(old, r, max_part, 0, &mut current, &mut |mu| {
        let strip: Vec<u32> = skew_columns(old, mu);
        let a = strip.iter().filter(|&&c| !strip.contains(&(c + 1))).count() as u32;
        let mu_len = mu.iter().filter(|&&x| x > 0).count() as u32;
        let grown = mu_len - old.len() as u32;
        let mu = Partition::new(mu.to_vec()).expect("interlacing gives a partition");
        out.push((mu, a, grown));
    });
    out.sort();
    out
}

/// Columns of the boxes of `μ/λ`.
fn skew_columns(old: &[u32], mu: &[u32]) -> Vec<u32> {
    let mut cols = Vec::new();
    for (i, &m) in mu.iter().enumerate() {
        let l = old.get(i).copied().unwrap_or(0);
        cols.extend(l + 1..=m);
    }
    cols
}

/// Chooses `μ_{i+1} ∈ [λ_{i+1}, λ_i]` row by row, strictly decreasing.
fn interlace(old: &[u32], remaining: u32, max_part: u32, i: usize, mu: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if i > old.len() {
        if remaining == 0 {
            visit(mu);
        }
        return;
    }
    let low = old.get(i).copied().unwrap_or(0);
    let mut high = if i == 0 { max_part } else { old[i - 1] };
    if i > 0 {
        // strictness: μ_{i+1} < μ_i unless both vanish
        high = high.min(mu[i - 1].saturating_sub(1));
    }
    if high < low {
        return;
    }
    for value in low..=high.min(low + remaining) {
        mu.push(value);
        interlace(old, remaining - (value - low), max_part, i + 1, mu, visit);
        mu.pop();
    }
}
