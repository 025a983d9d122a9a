//! Raising-operator Giambelli polynomials.
//!
//! `R^λ m_λ` is expanded with the operator factors grouped by their second
//! index `j` and processed for `j = ℓ(λ)` down to `2`. Only factors `R_{ij}`
//! with second index `j` ever lower component `j`, and only factors with first
//! index `j` raise it, so once stage `j` has run component `j` is final: the
//! geometric series of a `C(λ)` pair stops as soon as component `j` would go
//! negative, and the finished component moves into an unordered multiset.
//! Within a stage the `A(λ)` factors `(1 − R_ij)` are applied first, then the
//! `C(λ)` factors `(1 − R_ij)/(1 + R_ij) = 1 + 2 Σ_{m≥1} (−1)^m R_ij^m`, each
//! in ascending `i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combination::write_terms;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::json::BigNum;
use crate::partition::{index_data, Family, Partition, SpaceContext};

/// Which special classes the generators stand for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorFamily {
    /// `σ_p` on IG.
    Sigma,
    /// Chern classes `c_p = δ_p τ_p` on OG.
    C,
    /// `τ_p` on OG.
    Tau,
}

impl GeneratorFamily {
    fn symbol(self) -> &'static str {
        match self {
            GeneratorFamily::Sigma => "s",
            GeneratorFamily::C => "c",
            GeneratorFamily::Tau => "t",
        }
    }
}

/// `q^q · Π σ_{d}` with the degrees stored in descending order, zeros dropped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GeneratorMonomial {
    pub q: u32,
    pub degrees: Vec<u32>,
}

impl GeneratorMonomial {
    pub fn new(mut degrees: Vec<u32>, q: u32) -> Self {
        degrees.retain(|&d| d > 0);
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        GeneratorMonomial { q, degrees }
    }

    pub fn one() -> Self {
        GeneratorMonomial::new(Vec::new(), 0)
    }

    pub fn degree(&self, q_degree: u32) -> u32 {
        self.degrees.iter().sum::<u32>() + self.q * q_degree
    }

    pub fn max_generator(&self) -> u32 {
        self.degrees.first().copied().unwrap_or(0)
    }
}

/// `Σ coeff · monomial` over a fixed generator family.
#[derive(Clone, PartialEq, Eq)]
pub struct GiambelliPolynomial {
    pub family: GeneratorFamily,
    terms: BTreeMap<GeneratorMonomial, Dyadic>,
}

impl GiambelliPolynomial {
    pub fn new(family: GeneratorFamily) -> Self {
        GiambelliPolynomial {
            family,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(family: GeneratorFamily) -> Self {
        let mut out = Self::new(family);
        out.add_term(GeneratorMonomial::one(), &Dyadic::one());
        out
    }

    pub fn add_term(&mut self, monomial: GeneratorMonomial, coeff: &Dyadic) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(monomial).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn coefficient(&self, monomial: &GeneratorMonomial) -> Dyadic {
        self.terms.get(monomial).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GeneratorMonomial, &Dyadic)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest generator degree occurring in any monomial.
    pub fn max_generator(&self) -> u32 {
        self.terms.keys().map(GeneratorMonomial::max_generator).max().unwrap_or(0)
    }

    pub fn is_q_free(&self) -> bool {
        self.terms.keys().all(|m| m.q == 0)
    }

    pub fn is_homogeneous(&self, q_degree: u32) -> bool {
        let mut degrees = self.terms.keys().map(|m| m.degree(q_degree));
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    /// Drops every monomial containing a generator of degree above `max_degree`.
    pub fn truncated(&self, max_degree: u32) -> GiambelliPolynomial {
        GiambelliPolynomial {
            family: self.family,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.max_generator() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn scaled_by_pow2(&self, e: i32, family: GeneratorFamily) -> GiambelliPolynomial {
        GiambelliPolynomial {
            family,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.shifted(e))).collect(),
        }
    }

    /// Rewrites a `c`-family polynomial in `τ` generators via `c_p = δ_p τ_p`.
    pub fn c_to_tau(&self, k: u32) -> Result<GiambelliPolynomial> {
        if self.family != GeneratorFamily::C {
            return Err(Error::Unsupported(format!(
                "c_to_tau expects c generators, got {:?}",
                self.family
            )));
        }
        let mut out = GiambelliPolynomial::new(GeneratorFamily::Tau);
        for (m, c) in &self.terms {
            let doubled = m.degrees.iter().filter(|&&d| d > k).count() as i32;
            out.add_term(m.clone(), &c.shifted(doubled));
        }
        Ok(out)
    }

    /// Rewrites a `τ`-family polynomial in `c` generators via `τ_p = c_p / δ_p`.
    pub fn tau_to_c(&self, k: u32) -> Result<GiambelliPolynomial> {
        if self.family != GeneratorFamily::Tau {
            return Err(Error::Unsupported(format!(
                "tau_to_c expects tau generators, got {:?}",
                self.family
            )));
        }
        let mut out = GiambelliPolynomial::new(GeneratorFamily::C);
        for (m, c) in &self.terms {
            let doubled = m.degrees.iter().filter(|&&d| d > k).count() as i32;
            out.add_term(m.clone(), &c.shifted(-doubled));
        }
        Ok(out)
    }
}

impl fmt::Display for GiambelliPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.family.symbol();
        write_terms(
            f,
            self.terms.iter().map(|(m, c)| {
                let mut factors: Vec<String> = Vec::new();
                match m.q {
                    0 => {}
                    1 => factors.push("q".into()),
                    e => factors.push(format!("q^{e}")),
                }
                factors.extend(m.degrees.iter().map(|d| format!("{sym}{d}")));
                (c.clone(), factors.join("*"))
            }),
        )
    }
}

impl fmt::Debug for GiambelliPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRecord {
    family: GeneratorFamily,
    terms: Vec<MonomialRecord>,
}

#[derive(Serialize, Deserialize)]
struct MonomialRecord {
    gens: Vec<u32>,
    q: u32,
    num: BigNum,
    den2: u32,
}

impl Serialize for GiambelliPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRecord {
            family: self.family,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| MonomialRecord {
                    gens: m.degrees.clone(),
                    q: m.q,
                    num: BigNum(c.numer().clone()),
                    den2: c.den2(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GiambelliPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let record = PolyRecord::deserialize(d)?;
        let mut out = GiambelliPolynomial::new(record.family);
        for t in record.terms {
            out.add_term(GeneratorMonomial::new(t.gens, t.q), &Dyadic::new(t.num.0, t.den2));
        }
        Ok(out)
    }
}

/// Expansion state: the still-active leading components (positional) and
/// the finished trailing components (sorted descending).
type State = (Vec<u32>, Vec<u32>);

/// The expansion of `R^λ m_λ` in the `σ` generators.
pub fn raising_expand(lambda: &Partition, k: u32) -> Result<GiambelliPolynomial> {
    let data = index_data(lambda, k)?;
    let len = lambda.len();
    let mut states: HashMap<State, BigInt> = HashMap::new();
    states.insert((lambda.parts().to_vec(), Vec::new()), BigInt::one());

    for j in (2..=len).rev() {
        let a_rows = (1..j).filter(|&i| !data.is_c_pair(i, j));
        let c_rows = (1..j).filter(|&i| data.is_c_pair(i, j));
        for i in a_rows {
            states = apply_factor(states, i - 1, j - 1, false);
        }
        for i in c_rows {
            states = apply_factor(states, i - 1, j - 1, true);
        }
        states = states
            .into_iter()
            .fold(HashMap::new(), |mut acc, ((mut active, mut done), c)| {
                let last = active.pop().expect("active component");
                finish(&mut done, last);
                merge(&mut acc, (active, done), c);
                acc
            });
    }

    let mut out = GiambelliPolynomial::new(GeneratorFamily::Sigma);
    for ((active, mut done), c) in states {
        for d in active {
            finish(&mut done, d);
        }
        out.add_term(GeneratorMonomial::new(done, 0), &Dyadic::from_int(c));
    }
    Ok(out)
}

fn finish(done: &mut Vec<u32>, d: u32) {
    if d > 0 {
        let pos = done.partition_point(|&x| x > d);
        done.insert(pos, d);
    }
}

fn merge(map: &mut HashMap<State, BigInt>, key: State, c: BigInt) {
    use std::collections::hash_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Applies `(1 − R_ij)` or, when `series`, `1 + 2 Σ_{m≥1} (−1)^m R_ij^m`
/// (0-based indices), dropping vectors whose component `j` would go negative.
fn apply_factor(states: HashMap<State, BigInt>, i: usize, j: usize, series: bool) -> HashMap<State, BigInt> {
    let mut out = HashMap::with_capacity(states.len() * 2);
    for ((active, done), c) in states {
        let top = active[j];
        let max_m = if series { top } else { top.min(1) };
        for m in 1..=max_m {
            let mut shifted = active.clone();
            shifted[i] += m;
            shifted[j] -= m;
            let coeff = if series {
                if m % 2 == 1 {
                    -(&c << 1usize)
                } else {
                    &c << 1usize
                }
            } else {
                -&c
            };
            merge(&mut out, (shifted, done.clone()), coeff);
        }
        merge(&mut out, (active, done), c);
    }
    out
}

/// The classical Giambelli polynomial for the family: `R^λ m_λ` in `σ`
/// for IG, and the `τ`-form of `2^{−ℓ_k(λ)} R^λ m_λ` for OG.
pub fn classical_giambelli(family: Family, lambda: &Partition, k: u32) -> Result<GiambelliPolynomial> {
    match family {
        Family::IG => raising_expand(lambda, k),
        Family::OG => Ok(giambelli_og(lambda, k)?.1),
    }
}

/// The OG Giambelli polynomial as `(c-form, τ-form)`.
pub fn giambelli_og(lambda: &Partition, k: u32) -> Result<(GiambelliPolynomial, GiambelliPolynomial)> {
    let expansion = raising_expand(lambda, k)?;
    let c_form = expansion.scaled_by_pow2(-(lambda.count_above(k) as i32), GeneratorFamily::C);
    let tau_form = c_form.c_to_tau(k)?;
    Ok((c_form, tau_form))
}

/// Quantum Giambelli polynomial for IG: the stable expansion with `σ_{n+k+1}`
/// replaced by `q/2` and every higher special class by zero.
pub fn quantum_giambelli_ig(lambda: &Partition, ctx: &SpaceContext) -> Result<GiambelliPolynomial> {
    if ctx.family != Family::IG {
        return Err(Error::WrongFamily { expected: "IG" });
    }
    ctx.check(lambda)?;
    let top = ctx.n + ctx.k + 1;
    let mut out = GiambelliPolynomial::new(GeneratorFamily::Sigma);
    for (m, c) in raising_expand(lambda, ctx.k)?.iter() {
        if m.max_generator() > top {
            continue;
        }
        let replaced = m.degrees.iter().filter(|&&d| d == top).count() as u32;
        let rest: Vec<u32> = m.degrees.iter().copied().filter(|&d| d != top).collect();
        out.add_term(GeneratorMonomial::new(rest, m.q + replaced), &c.shifted(-(replaced as i32)));
    }
    Ok(out)
}

/// Quantum Giambelli polynomial for OG: the classical `τ`-form with every
/// special class above `n + k` set to zero.
pub fn quantum_giambelli_og(lambda: &Partition, ctx: &SpaceContext) -> Result<GiambelliPolynomial> {
    if ctx.family != Family::OG {
        return Err(Error::WrongFamily { expected: "OG" });
    }
    ctx.check(lambda)?;
    Ok(giambelli_og(lambda, ctx.k)?.1.truncated(ctx.n + ctx.k))
}

/// The quantum Giambelli polynomial for either family.
pub fn quantum_giambelli(lambda: &Partition, ctx: &SpaceContext) -> Result<GiambelliPolynomial> {
    match ctx.family {
        Family::IG => quantum_giambelli_ig(lambda, ctx),
        Family::OG => quantum_giambelli_og(lambda, ctx),
    }
}
