//! Executable versions of the structural theorems, reported as JSON lines.
//!
//! Per-grid-point checks take a `(k, n)` pair; the global ones (stable
//! relations, index vectors, Pieri stability, small rings) take none.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combination::{QClass, QuantumCombination};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::giambelli::{classical_giambelli, raising_expand};
use crate::partition::{enumerate_p, index_data, k_strict_partitions, Family, Partition, SpaceContext};
use crate::pieri::{arrow_targets, stable_pieri};
use crate::ring::{
    recursion_closed_form, recursion_expand, stable_relation_value, PiMap, SchubertRing, StableRingHandle,
};

/// Seed for every randomized check, so reports are reproducible.
pub const DEFAULT_SEED: u64 = 0x5eed_2008;

/// One line of verification output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Partition>,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    pub fn new(check: &str) -> Self {
        CheckReport {
            check: check.to_string(),
            family: None,
            n: None,
            k: None,
            lambda: None,
            ok: true,
            detail: None,
        }
    }

    fn at(check: &str, family: Option<Family>, k: u32, n: Option<u32>) -> Self {
        CheckReport {
            family,
            k: Some(k),
            n,
            ..Self::new(check)
        }
    }

    fn lambda(mut self, lambda: &Partition) -> Self {
        self.lambda = Some(lambda.clone());
        self
    }

    /// Records the outcome; the first failure wins the `detail` slot.
    fn record(&mut self, outcome: Result<()>) {
        if let Err(e) = outcome {
            if self.ok {
                self.detail = Some(e.to_string());
            }
            self.ok = false;
        }
    }

    fn with(mut self, outcome: Result<()>) -> Self {
        self.record(outcome);
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.ok { "ok  " } else { "FAIL" })?;
        write!(f, " {}", self.check)?;
        if let Some(family) = self.family {
            write!(f, " {family}")?;
        }
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(lambda) = &self.lambda {
            write!(f, " λ={lambda}")?;
        }
        if let Some(detail) = &self.detail {
            write!(f, ": {detail}")?;
        }
        Ok(())
    }
}

/// A `(k, n)` grid point, written `k:n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub k: u32,
    pub n: u32,
}

impl GridPoint {
    pub fn context(&self, family: Family) -> Result<SpaceContext> {
        SpaceContext::new(family, self.n, self.k)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.k, self.n)
    }
}

impl FromStr for GridPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("grid point {s:?} is not of the form k:n"));
        let (k, n) = s.trim().split_once(':').ok_or_else(bad)?;
        let point = GridPoint {
            k: k.trim().parse().map_err(|_| bad())?,
            n: n.trim().parse().map_err(|_| bad())?,
        };
        SpaceContext::new(Family::IG, point.n, point.k)?;
        Ok(point)
    }
}

/// Parses `"0:2,0:3,1:2"`.
pub fn parse_grid(s: &str) -> Result<Vec<GridPoint>> {
    let points = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(GridPoint::from_str)
        .collect::<Result<Vec<_>>>()?;
    if points.is_empty() {
        return Err(Error::Parse("empty grid".into()));
    }
    Ok(points)
}

/// The acceptance grid.
pub fn default_grid() -> Vec<GridPoint> {
    [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5)]
        .into_iter()
        .map(|(k, n)| GridPoint { k, n })
        .collect()
}

fn expect_single(value: &QuantumCombination, lambda: &Partition, what: &str) -> Result<()> {
    if value.is_single(&QClass::classical(lambda.clone())) {
        Ok(())
    } else {
        Err(Error::Assertion(format!("{what} of {lambda} gave {value}")))
    }
}

/// `R^λ m_λ = σ_λ` (IG) or `2^{−ℓ_k(λ)} R^λ m_λ = τ_λ` (OG) for every
/// `λ ∈ P(k, n)`, both in the stable ring and in `H*` after truncating
/// generators above `n + k`. Also checks the `2n + 2k − 1` generator bound.
pub fn check_classical_giambelli(family: Family, point: GridPoint) -> Result<Vec<CheckReport>> {
    let ctx = point.context(family)?;
    let bounded = SchubertRing::classical(ctx);
    let mut out = Vec::new();
    for lambda in enumerate_p(point.k, point.n)? {
        let stable = SchubertRing::stable(StableRingHandle::new(family, point.k, lambda.weight()));
        let mut report = CheckReport::at("classical_giambelli", Some(family), point.k, Some(point.n)).lambda(&lambda);
        report.record((|| {
            let poly = classical_giambelli(family, &lambda, point.k)?;
            let bound = 2 * (point.n + point.k) - 1;
            if poly.max_generator() > bound {
                return Err(Error::Assertion(format!(
                    "Giambelli polynomial of {lambda} uses a generator above {bound}: {poly}"
                )));
            }
            let value = stable.evaluate_classical(&poly)?;
            if !value.is_single(&lambda) {
                return Err(Error::Assertion(format!("stable evaluation of {lambda} gave {value}")));
            }
            let value = bounded.evaluate_classical(&poly.truncated(ctx.max_special()))?;
            if !value.is_single(&lambda) {
                return Err(Error::Assertion(format!("evaluation of {lambda} in H* gave {value}")));
            }
            Ok(())
        })());
        out.push(report);
    }
    Ok(out)
}

/// The quantum Giambelli theorem for every `λ ∈ P(k, n)`.
pub fn check_quantum_giambelli(family: Family, point: GridPoint) -> Result<Vec<CheckReport>> {
    let ring = SchubertRing::quantum(point.context(family)?);
    Ok(enumerate_p(point.k, point.n)?
        .into_iter()
        .map(|lambda| {
            CheckReport::at("quantum_giambelli", Some(family), point.k, Some(point.n))
                .lambda(&lambda)
                .with(ring.schubert_class(&lambda).map(drop))
        })
        .collect())
}

/// `π(σ_λ) = σ_λ`: the stable Giambelli polynomial pushed through `π`
/// (or `π̃`) lands exactly on the Schubert class.
pub fn check_pi_consistency(family: Family, point: GridPoint) -> Result<Vec<CheckReport>> {
    let pi = PiMap::new(point.context(family)?);
    let mut out = Vec::new();
    for lambda in enumerate_p(point.k, point.n)? {
        let outcome = classical_giambelli(family, &lambda, point.k)
            .and_then(|poly| pi.apply(&poly))
            .and_then(|value| expect_single(&value, &lambda, "π of the stable Giambelli polynomial"));
        out.push(
            CheckReport::at("pi_consistency", Some(family), point.k, Some(point.n))
                .lambda(&lambda)
                .with(outcome),
        );
    }
    Ok(out)
}

/// `N(λ,μ) + ℓ_k(μ) = N′(λ,μ) + ℓ_k(λ) + [p > k]` over every classical
/// Pieri pair in `P(k, n)`.
pub fn check_ig_og_correspondence(point: GridPoint) -> Result<Vec<CheckReport>> {
    let ctx = point.context(Family::IG)?;
    let k = point.k;
    let mut out = Vec::new();
    for lambda in enumerate_p(k, point.n)? {
        let mut report = CheckReport::at("ig_og_correspondence", None, k, Some(point.n)).lambda(&lambda);
        for p in 1..=ctx.max_special() {
            let witnesses = match arrow_targets(&lambda, p, k, Some(ctx.rows()), Some(ctx.cols())) {
                Ok(w) => w,
                Err(e) => {
                    report.record(Err(e));
                    continue;
                }
            };
            for w in witnesses {
                let outcome = w.n_prime_exponent(&lambda, p, k).and_then(|n_prime| {
                    let lhs = w.n_exponent() + w.target.count_above(k);
                    let rhs = n_prime + lambda.count_above(k) + u32::from(p > k);
                    if lhs == rhs {
                        Ok(())
                    } else {
                        Err(Error::Assertion(format!(
                            "p={p}, μ={}: N + ℓ_k(μ) = {lhs} but N′ + ℓ_k(λ) + [p>k] = {rhs}",
                            w.target
                        )))
                    }
                });
                report.record(outcome);
            }
        }
        out.push(report);
    }
    Ok(out)
}

/// The recursion coefficients equal `(−1)^{p−λ_1} 2^{n(p,μ)}` whenever
/// `λ_1 ≥ ℓ(λ) + 2k − 1`; every expansion also reproduces `σ_λ`.
pub fn check_recursion_remark(point: GridPoint) -> Result<Vec<CheckReport>> {
    let k = point.k;
    let mut out = Vec::new();
    for lambda in enumerate_p(k, point.n)? {
        let mut report = CheckReport::at("recursion_remark", Some(Family::IG), k, Some(point.n)).lambda(&lambda);
        let handle = StableRingHandle::new(Family::IG, k, lambda.weight());
        report.record((|| {
            let expansion = recursion_expand(&handle, &lambda, lambda.weight())?;
            let value = expansion.evaluate(&SchubertRing::stable(handle))?;
            if !value.is_single(&lambda) {
                return Err(Error::Assertion(format!("recursion for {lambda} reproduces {value}")));
            }
            if lambda.first() as usize + 1 >= lambda.len() + 2 * k as usize {
                let closed = recursion_closed_form(k, &lambda)?;
                if closed != expansion {
                    return Err(Error::Assertion(format!(
                        "recursion {:?} differs from closed form {:?}",
                        expansion.coefficients, closed.coefficients
                    )));
                }
            }
            Ok(())
        })());
        out.push(report);
    }
    Ok(out)
}

/// Commutativity of `QH*` on all pairs and associativity on `triples`
/// sampled triples.
pub fn check_ring_axioms(family: Family, point: GridPoint, triples: usize, seed: u64) -> Result<Vec<CheckReport>> {
    let ctx = point.context(family)?;
    let ring = SchubertRing::quantum(ctx);
    let basis = enumerate_p(point.k, point.n)?;
    let single = |l: &Partition| QuantumCombination::single(QClass::classical(l.clone()), Dyadic::one());

    let mut commutative = CheckReport::at("commutativity", Some(family), point.k, Some(point.n));
    for (i, lambda) in basis.iter().enumerate() {
        for mu in &basis[i..] {
            commutative.record((|| {
                let (a, b) = (ring.multiply(lambda, mu)?, ring.multiply(mu, lambda)?);
                if a != b || !a.is_homogeneous(ctx.q_degree()) {
                    return Err(Error::Assertion(format!("{lambda}*{mu} = {a} but {mu}*{lambda} = {b}")));
                }
                Ok(())
            })());
        }
    }

    let mut associative = CheckReport::at("associativity", Some(family), point.k, Some(point.n));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (u64::from(point.k) << 32 | u64::from(point.n)));
    for _ in 0..triples {
        let pick = |rng: &mut ChaCha8Rng| basis.choose(rng).expect("P(k,n) is nonempty").clone();
        let (l, m, v) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        associative.record((|| {
            let left = ring.multiply_combinations(&ring.multiply(&l, &m)?, &single(&v))?;
            let right = ring.multiply_combinations(&single(&l), &ring.multiply(&m, &v)?)?;
            if left != right {
                return Err(Error::Assertion(format!("({l}*{m})*{v} = {left} but {l}*({m}*{v}) = {right}")));
            }
            Ok(())
        })());
    }
    Ok(vec![commutative, associative])
}

/// The quadratic relations vanish in the stable ring for `k < r ≤ max_r`.
pub fn check_stable_relations(family: Family, k: u32, max_r: u32) -> Vec<CheckReport> {
    (k + 1..=max_r)
        .map(|r| {
            let handle = StableRingHandle::new(family, k, 2 * r);
            let outcome = stable_relation_value(&handle, r).and_then(|value| {
                if value.is_zero() {
                    Ok(())
                } else {
                    Err(Error::Assertion(format!("relation r={r} evaluates to {value}")))
                }
            });
            let mut report = CheckReport::at("stable_relation", Some(family), k, None).with(outcome);
            report.detail.get_or_insert_with(|| format!("r={r}"));
            report
        })
        .collect()
}

/// For every k-strict `λ` with `|λ| ≤ max_weight`: `λ − c` weakly
/// decreasing, `λ + a` strictly decreasing, and the generator bound
/// `λ_1 + a_1 + λ_2 + a_2` (or exactly `λ_1` for one-row `λ`) on `R^λ m_λ`.
pub fn check_index_vectors(k: u32, max_weight: u32) -> Vec<CheckReport> {
    k_strict_partitions(k, max_weight, max_weight, max_weight)
        .into_iter()
        .map(|lambda| {
            let outcome = (|| {
                let data = index_data(&lambda, k)?;
                let parts = lambda.parts();
                let minus: Vec<i64> = parts.iter().zip(&data.c).map(|(&l, &c)| l as i64 - c as i64).collect();
                let plus: Vec<u32> = parts.iter().zip(&data.a).map(|(&l, &a)| l + a).collect();
                if minus.windows(2).any(|w| w[0] < w[1]) {
                    return Err(Error::Assertion(format!("λ − c = {minus:?} is not weakly decreasing")));
                }
                if plus.windows(2).any(|w| w[0] <= w[1]) {
                    return Err(Error::Assertion(format!("λ + a = {plus:?} is not strictly decreasing")));
                }
                let poly = raising_expand(&lambda, k)?;
                let top = poly.max_generator();
                let ok = match parts.len() {
                    0 => top == 0,
                    1 => top == parts[0] && poly.len() == 1,
                    _ => top <= plus[0] + plus[1],
                };
                if !ok {
                    return Err(Error::Assertion(format!(
                        "R^λ m_λ uses generator {top}; λ + a = {plus:?}"
                    )));
                }
                Ok(())
            })();
            CheckReport::at("index_vectors", None, k, None).lambda(&lambda).with(outcome)
        })
        .collect()
}

/// The stability lemma on `count` random instances: for
/// `ν_1 > max(λ_1, ℓ(λ) + 2k)`, the coefficient of `σ_ν` in `σ_p σ_λ`
/// equals that of `σ_{(ν_1+1, ν*)}` in `σ_{p+1} σ_λ`.
pub fn check_pieri_stability(count: usize, seed: u64) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(0..=3);
        let weight = rng.gen_range(0..=8);
        let lambdas: Vec<Partition> = k_strict_partitions(k, 8, 8, weight)
            .into_iter()
            .filter(|l| l.weight() == weight)
            .collect();
        let Some(lambda) = lambdas.choose(&mut rng).cloned() else { continue };
        let p = rng.gen_range(1..=8);
        let bound = lambda.first().max(lambda.len() as u32 + 2 * k);
        let (Ok(lower), Ok(upper)) = (
            stable_pieri(Family::IG, k, p, &lambda),
            stable_pieri(Family::IG, k, p + 1, &lambda),
        ) else {
            out.push(CheckReport::at("pieri_stability", Some(Family::IG), k, None).lambda(&lambda).with(Err(
                Error::Assertion(format!("stable Pieri failed for p={p}")),
            )));
            continue;
        };
        // candidates from both products, keyed by ν
        let mut candidates: Vec<Partition> = lower.iter().map(|(nu, _)| nu.clone()).collect();
        candidates.extend(upper.iter().filter_map(|(nu, _)| {
            let first = nu.first().checked_sub(1).filter(|&f| f >= nu.part(2))?;
            let shifted = nu.tail().with_first_row(first);
            (shifted.weight() == lambda.weight() + p && shifted.is_k_strict(k)).then_some(shifted)
        }));
        candidates.retain(|nu| nu.first() > bound);
        candidates.sort();
        candidates.dedup();
        let Some(nu) = candidates.choose(&mut rng).cloned() else { continue };
        let raised = nu.tail().with_first_row(nu.first() + 1);
        let (a, b) = (lower.coefficient(&nu), upper.coefficient(&raised));
        let outcome = if a == b {
            Ok(())
        } else {
            Err(Error::Assertion(format!(
                "p={p}, ν={nu}: coefficient {a} but {b} for {raised} at p+1"
            )))
        };
        let mut report = CheckReport::at("pieri_stability", Some(Family::IG), k, None).lambda(&lambda).with(outcome);
        report.detail.get_or_insert_with(|| format!("p={p}, ν={nu}, coefficient {a}"));
        out.push(report);
    }
    out
}

/// Small quantum rings known in closed form: `QH*(P³)` and `QH*(Q³)`.
pub fn check_known_rings() -> Vec<CheckReport> {
    let cases: [(Family, &[u32], &[u32], u32); 3] = [
        (Family::IG, &[1, 1, 1, 1], &[], 1),
        (Family::OG, &[3, 1], &[1], 1),
        (Family::OG, &[3, 3], &[], 2),
    ];
    cases
        .into_iter()
        .map(|(family, degrees, expected, q)| {
            let outcome = (|| {
                let ring = SchubertRing::quantum(SpaceContext::new(family, 2, 1)?);
                let value = ring.act_monomial(&Partition::empty(), degrees)?;
                let target = QClass::new(Partition::new(expected.to_vec())?, q);
                if value.is_single(&target) {
                    Ok(())
                } else {
                    Err(Error::Assertion(format!("product of {degrees:?} is {value}")))
                }
            })();
            let mut report = CheckReport::at("known_ring", Some(family), 1, Some(2)).with(outcome);
            report.detail.get_or_insert_with(|| format!("specials {degrees:?}"));
            report
        })
        .collect()
}

/// Every per-grid-point check for both families.
pub fn grid_point_suite(point: GridPoint, seed: u64) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for family in [Family::IG, Family::OG] {
        out.extend(check_classical_giambelli(family, point)?);
        out.extend(check_quantum_giambelli(family, point)?);
        out.extend(check_pi_consistency(family, point)?);
        out.extend(check_ring_axioms(family, point, 100, seed)?);
    }
    out.extend(check_ig_og_correspondence(point)?);
    out.extend(check_recursion_remark(point)?);
    Ok(out)
}

/// The checks that do not depend on a grid point.
pub fn global_suite(seed: u64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for family in [Family::IG, Family::OG] {
        for k in 0..=3 {
            out.extend(check_stable_relations(family, k, 8));
        }
    }
    for k in 0..=3 {
        out.extend(check_index_vectors(k, 12));
    }
    out.extend(check_pieri_stability(200, seed));
    out.extend(check_known_rings());
    out
}
