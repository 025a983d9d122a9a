//! Ring-level evaluation: polynomials in special classes are realized by
//! iterated Pieri multiplication in a bounded, quantum, or stable ring.
//!
//! Each ring memoizes Pieri products and partial monomial products behind
//! `RwLock`s, so a ring can be shared across threads.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combination::{ClassicalCombination, QClass, QuantumCombination};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::giambelli::{classical_giambelli, quantum_giambelli, GeneratorFamily, GiambelliPolynomial};
use crate::partition::{Family, Partition, SpaceContext};
use crate::pieri::{classical_pieri_terms, quantum_pieri_terms, stable_pieri_terms, PieriTerm};

/// The stable ring `IH(IG_k)` or `IH(OG_k)`, exact for classes of weight at
/// most `truncation_weight`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StableRingHandle {
    pub family: Family,
    pub k: u32,
    pub truncation_weight: u32,
}

impl StableRingHandle {
    pub fn new(family: Family, k: u32, truncation_weight: u32) -> Self {
        StableRingHandle {
            family,
            k,
            truncation_weight,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    /// `H*` of the Grassmannian.
    Classical(SpaceContext),
    /// Small quantum cohomology of the Grassmannian.
    Quantum(SpaceContext),
    Stable(StableRingHandle),
}

type Cache<K, V> = RwLock<HashMap<K, Arc<V>>>;

fn cached<K, V>(cache: &Cache<K, V>, key: &K, compute: impl FnOnce() -> Result<V>) -> Result<Arc<V>>
where
    K: Eq + Hash + Clone,
{
    if let Some(v) = cache.read().expect("cache lock").get(key) {
        return Ok(v.clone());
    }
    let value = Arc::new(compute()?);
    let mut guard = cache.write().expect("cache lock");
    Ok(guard.entry(key.clone()).or_insert(value).clone())
}

/// A Schubert-basis ring with memoized Pieri products.
pub struct SchubertRing {
    kind: RingKind,
    pieri: Cache<(u32, Partition), Vec<PieriTerm>>,
    actions: Cache<(Partition, Vec<u32>), QuantumCombination>,
    giambelli: Cache<Partition, GiambelliPolynomial>,
}

impl SchubertRing {
    pub fn new(kind: RingKind) -> Self {
        SchubertRing {
            kind,
            pieri: RwLock::default(),
            actions: RwLock::default(),
            giambelli: RwLock::default(),
        }
    }

    pub fn classical(ctx: SpaceContext) -> Self {
        Self::new(RingKind::Classical(ctx))
    }

    pub fn quantum(ctx: SpaceContext) -> Self {
        Self::new(RingKind::Quantum(ctx))
    }

    pub fn stable(handle: StableRingHandle) -> Self {
        Self::new(RingKind::Stable(handle))
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn family(&self) -> Family {
        match self.kind {
            RingKind::Classical(c) | RingKind::Quantum(c) => c.family,
            RingKind::Stable(h) => h.family,
        }
    }

    pub fn k(&self) -> u32 {
        match self.kind {
            RingKind::Classical(c) | RingKind::Quantum(c) => c.k,
            RingKind::Stable(h) => h.k,
        }
    }

    pub fn context(&self) -> Option<SpaceContext> {
        match self.kind {
            RingKind::Classical(c) | RingKind::Quantum(c) => Some(c),
            RingKind::Stable(_) => None,
        }
    }

    /// Degree of `q`; zero for rings without `q`.
    pub fn q_degree(&self) -> u32 {
        match self.kind {
            RingKind::Quantum(c) => c.q_degree(),
            _ => 0,
        }
    }

    /// Validates a basis class for this ring.
    pub fn check_class(&self, lambda: &Partition) -> Result<()> {
        match self.kind {
            RingKind::Classical(c) | RingKind::Quantum(c) => c.check(lambda),
            RingKind::Stable(h) => {
                lambda.check_k_strict(h.k)?;
                self.check_weight(lambda)
            }
        }
    }

    fn check_weight(&self, lambda: &Partition) -> Result<()> {
        if let RingKind::Stable(h) = self.kind {
            if lambda.weight() > h.truncation_weight {
                return Err(Error::TruncationExceeded {
                    partition: lambda.clone(),
                    weight: lambda.weight(),
                    limit: h.truncation_weight,
                });
            }
        }
        Ok(())
    }

    /// Pieri terms of `σ_p · σ_λ` (or `τ_p · τ_λ`).
    pub fn pieri(&self, p: u32, lambda: &Partition) -> Result<Arc<Vec<PieriTerm>>> {
        cached(&self.pieri, &(p, lambda.clone()), || match self.kind {
            RingKind::Classical(c) => classical_pieri_terms(&c, p, lambda),
            RingKind::Quantum(c) => quantum_pieri_terms(&c, p, lambda),
            RingKind::Stable(h) => {
                let terms = stable_pieri_terms(h.family, h.k, p, lambda)?;
                for t in &terms {
                    self.check_weight(&t.class.partition)?;
                }
                Ok(terms)
            }
        })
    }

    /// `σ_p · x`.
    pub fn special_times(&self, p: u32, x: &QuantumCombination) -> Result<QuantumCombination> {
        let mut out = QuantumCombination::new();
        for (class, c) in x.iter() {
            for t in self.pieri(p, &class.partition)?.iter() {
                let target = QClass::new(t.class.partition.clone(), t.class.q + class.q);
                out.add_term(target, &c.shifted(t.log2 as i32));
            }
        }
        Ok(out)
    }

    /// `σ_λ · σ_{d_1} ⋯ σ_{d_r}`, multiplying in the given order.
    pub fn act_monomial(&self, lambda: &Partition, degrees: &[u32]) -> Result<Arc<QuantumCombination>> {
        cached(&self.actions, &(lambda.clone(), degrees.to_vec()), || match degrees.split_last() {
            None => Ok(QuantumCombination::single(QClass::classical(lambda.clone()), Dyadic::one())),
            Some((&last, rest)) => {
                let prefix = self.act_monomial(lambda, rest)?;
                self.special_times(last, &prefix)
            }
        })
    }

    fn generators_for(&self, poly: &GiambelliPolynomial) -> Result<GiambelliPolynomial> {
        match (self.family(), poly.family) {
            (Family::IG, GeneratorFamily::Sigma) | (Family::OG, GeneratorFamily::Tau) => Ok(poly.clone()),
            (Family::OG, GeneratorFamily::C) => poly.c_to_tau(self.k()),
            (family, g) => Err(Error::Unsupported(format!(
                "{g:?} generators cannot be evaluated in an {family} ring"
            ))),
        }
    }

    /// `σ_λ · f` for a polynomial `f` in the special classes.
    pub fn act(&self, lambda: &Partition, poly: &GiambelliPolynomial) -> Result<QuantumCombination> {
        let poly = self.generators_for(poly)?;
        if let RingKind::Classical(c) | RingKind::Quantum(c) = self.kind {
            if poly.max_generator() > c.max_special() {
                return Err(Error::DegreeOutOfRange {
                    p: poly.max_generator(),
                    max: c.max_special(),
                });
            }
        }
        if !poly.is_q_free() && !matches!(self.kind, RingKind::Quantum(_)) {
            return Err(Error::Unsupported("q appears in a polynomial for a ring without q".into()));
        }
        let mut out = QuantumCombination::new();
        for (m, c) in poly.iter() {
            let product = self.act_monomial(lambda, &m.degrees)?;
            out.add_scaled(&product, c, m.q);
        }
        Ok(out)
    }

    /// Realizes `f(σ_1, σ_2, …)` in the Schubert basis.
    pub fn evaluate(&self, poly: &GiambelliPolynomial) -> Result<QuantumCombination> {
        self.act(&Partition::empty(), poly)
    }

    /// Evaluation in `H*` or the stable ring; the result must be integral.
    pub fn evaluate_classical(&self, poly: &GiambelliPolynomial) -> Result<ClassicalCombination> {
        if matches!(self.kind, RingKind::Quantum(_)) {
            return Err(Error::Unsupported("evaluate_classical needs a classical or stable ring".into()));
        }
        self.evaluate(poly)?.to_classical()
    }

    /// Evaluation in `QH*`; the result must be integral.
    pub fn evaluate_quantum(&self, poly: &GiambelliPolynomial) -> Result<QuantumCombination> {
        if !matches!(self.kind, RingKind::Quantum(_)) {
            return Err(Error::Unsupported("evaluate_quantum needs a quantum ring".into()));
        }
        let out = self.evaluate(poly)?;
        out.check_integral()?;
        Ok(out)
    }

    /// The Giambelli polynomial this ring uses to express `σ_μ`: the quantum
    /// formula in `QH*`, the classical one truncated at `n+k` in `H*`, and the
    /// full classical one in the stable ring.
    pub fn giambelli(&self, mu: &Partition) -> Result<Arc<GiambelliPolynomial>> {
        cached(&self.giambelli, mu, || match self.kind {
            RingKind::Quantum(c) => quantum_giambelli(mu, &c),
            RingKind::Classical(c) => {
                c.check(mu)?;
                Ok(classical_giambelli(c.family, mu, c.k)?.truncated(c.max_special()))
            }
            RingKind::Stable(h) => {
                self.check_weight(mu)?;
                classical_giambelli(h.family, mu, h.k)
            }
        })
    }

    /// The product `σ_λ · σ_μ`, integral and homogeneous.
    pub fn multiply(&self, lambda: &Partition, mu: &Partition) -> Result<QuantumCombination> {
        self.check_class(lambda)?;
        self.check_class(mu)?;
        let out = self.act(lambda, &*self.giambelli(mu)?)?;
        out.check_integral()?;
        Ok(out)
    }

    /// Bilinear extension of [`SchubertRing::multiply`].
    pub fn multiply_combinations(&self, x: &QuantumCombination, y: &QuantumCombination) -> Result<QuantumCombination> {
        let mut out = QuantumCombination::new();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let product = self.multiply(&a.partition, &b.partition)?;
                out.add_scaled(&product, &(ca * cb), a.q + b.q);
            }
        }
        Ok(out)
    }

    /// Evaluates the Giambelli polynomial of `λ` and asserts the result is `1·σ_λ`.
    ///
    /// In a quantum ring this is the quantum Giambelli theorem; in the
    /// classical and stable rings it is the classical Giambelli formula.
    pub fn schubert_class(&self, lambda: &Partition) -> Result<QuantumCombination> {
        self.check_class(lambda)?;
        let poly = self.giambelli(lambda)?;
        let value = self.evaluate(&poly)?;
        if !value.is_single(&QClass::classical(lambda.clone())) {
            return Err(Error::Assertion(format!(
                "Giambelli polynomial of {lambda} in {:?} evaluates to {value} (polynomial {poly})",
                self.kind
            )));
        }
        Ok(value)
    }
}

/// `σ_λ` via its quantum Giambelli polynomial; asserts the theorem.
pub fn schubert_quantum(lambda: &Partition, ctx: &SpaceContext) -> Result<QuantumCombination> {
    SchubertRing::quantum(*ctx).schubert_class(lambda)
}

/// The quantum product `σ_λ · σ_μ` in `QH*` of the given Grassmannian.
pub fn qh_multiply(ctx: &SpaceContext, lambda: &Partition, mu: &Partition) -> Result<QuantumCombination> {
    SchubertRing::quantum(*ctx).multiply(lambda, mu)
}

/// The ring homomorphism from the stable ring onto `QH*`: `π` for IG and `π̃`
/// for OG. Even high-degree values are forced by the quadratic relations and
/// memoized.
pub struct PiMap {
    ring: SchubertRing,
    ctx: SpaceContext,
    images: Cache<u32, QuantumCombination>,
}

impl PiMap {
    pub fn new(ctx: SpaceContext) -> Self {
        PiMap {
            ring: SchubertRing::quantum(ctx),
            ctx,
            images: RwLock::default(),
        }
    }

    pub fn ring(&self) -> &SchubertRing {
        &self.ring
    }

    /// The image of the special class of degree `i` (`i = 0` gives `1`).
    pub fn image(&self, i: u32) -> Result<Arc<QuantumCombination>> {
        cached(&self.images, &i, || self.compute_image(i))
    }

    fn compute_image(&self, i: u32) -> Result<QuantumCombination> {
        let top = self.ctx.max_special();
        if i == 0 {
            return Ok(QuantumCombination::unit());
        }
        if i <= top {
            return Ok(QuantumCombination::single(QClass::classical(Partition::row(i)), Dyadic::one()));
        }
        let forced_from = match self.ctx.family {
            Family::IG => {
                if i == top + 1 {
                    return Ok(QuantumCombination::single(QClass::new(Partition::empty(), 1), Dyadic::pow2(-1)));
                }
                2 * top + 1
            }
            Family::OG => 2 * top,
        };
        if i < forced_from || i % 2 == 1 {
            return Ok(QuantumCombination::new());
        }
        self.forced(i / 2)
    }

    /// Solves the degree-`2r` quadratic relation for the image of the class of degree `2r`.
    fn forced(&self, r: u32) -> Result<QuantumCombination> {
        let half = self.image(r)?;
        let mut sum = self.ring.multiply_combinations(&half, &half)?;
        for m in 1..r {
            let weight = relation_weight(self.ctx.family, self.ctx.k, r, m);
            let upper = self.image(r + m)?;
            let lower = self.image(r - m)?;
            if upper.is_zero() || lower.is_zero() {
                continue;
            }
            let product = self.ring.multiply_combinations(&upper, &lower)?;
            sum.add_scaled(&product, &weight, 0);
        }
        // the top term is w_r·σ_{2r} with w_r = ±2 (IG) or ±1 (OG)
        let top = relation_weight(self.ctx.family, self.ctx.k, r, r);
        let scale = match self.ctx.family {
            Family::IG => Dyadic::pow2(-1),
            Family::OG => Dyadic::one(),
        };
        Ok(sum.scaled(&if top.is_negative() { scale } else { -&scale }))
    }

    /// Applies the homomorphism to a polynomial in the stable generators.
    pub fn apply(&self, poly: &GiambelliPolynomial) -> Result<QuantumCombination> {
        let poly = match (self.ctx.family, poly.family) {
            (Family::IG, GeneratorFamily::Sigma) | (Family::OG, GeneratorFamily::Tau) => poly.clone(),
            (Family::OG, GeneratorFamily::C) => poly.c_to_tau(self.ctx.k)?,
            (family, g) => {
                return Err(Error::Unsupported(format!("{g:?} generators do not map from the {family} stable ring")))
            }
        };
        let top = self.ctx.max_special();
        let mut out = QuantumCombination::new();
        'monomials: for (m, c) in poly.iter() {
            let mut acc = QuantumCombination::unit();
            for &d in &m.degrees {
                acc = if d <= top {
                    self.ring.special_times(d, &acc)?
                } else {
                    let image = self.image(d)?;
                    if image.is_zero() {
                        continue 'monomials;
                    }
                    self.ring.multiply_combinations(&acc, &image)?
                };
            }
            out.add_scaled(&acc, c, m.q);
        }
        Ok(out)
    }
}

/// `π(σ_i)` for IG.
pub fn pi_image(ctx: &SpaceContext, i: u32) -> Result<QuantumCombination> {
    if ctx.family != Family::IG {
        return Err(Error::WrongFamily { expected: "IG" });
    }
    Ok((*PiMap::new(*ctx).image(i)?).clone())
}

/// `π̃(τ_i)` for OG.
pub fn pi_tilde_image(ctx: &SpaceContext, i: u32) -> Result<QuantumCombination> {
    if ctx.family != Family::OG {
        return Err(Error::WrongFamily { expected: "OG" });
    }
    Ok((*PiMap::new(*ctx).image(i)?).clone())
}

/// Coefficients `a_{p,μ}` with `σ_λ = Σ a_{p,μ} σ_p σ_μ`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RecursionExpansion {
    pub coefficients: BTreeMap<(u32, Partition), BigInt>,
}

impl RecursionExpansion {
    /// Substitutes back: `Σ a_{p,μ} σ_p σ_μ` in the given ring.
    pub fn evaluate(&self, ring: &SchubertRing) -> Result<ClassicalCombination> {
        let mut out = QuantumCombination::new();
        for ((p, mu), a) in &self.coefficients {
            let degrees: &[u32] = if *p == 0 { &[] } else { &[*p] };
            let product = ring.act_monomial(mu, degrees)?;
            out.add_scaled(&product, &Dyadic::from_int(a.clone()), 0);
        }
        out.to_classical()
    }
}

/// The elimination recursion for `σ_λ` in `IH(IG_k)`.
///
/// Expands `σ_{λ_1} σ_{λ*}` by stable Pieri, moves every term other than
/// `σ_λ` to the right-hand side, and repeats on those terms in order of
/// increasing first part.
pub fn recursion_expand(handle: &StableRingHandle, lambda: &Partition, degree_cap: u32) -> Result<RecursionExpansion> {
    if handle.family != Family::IG {
        return Err(Error::WrongFamily { expected: "IG" });
    }
    lambda.check_k_strict(handle.k)?;
    if degree_cap < lambda.weight() {
        return Err(Error::DegreeCapExceeded {
            partition: lambda.clone(),
            cap: degree_cap,
        });
    }
    let ring = SchubertRing::stable(StableRingHandle {
        truncation_weight: handle.truncation_weight.max(lambda.weight()),
        ..*handle
    });
    let mut out = RecursionExpansion::default();
    if lambda.is_empty() {
        out.coefficients.insert((0, Partition::empty()), BigInt::one());
        return Ok(out);
    }
    // keyed by (first part, partition) so the smallest first part pops first
    let mut pending: BTreeMap<(u32, Partition), BigInt> = BTreeMap::new();
    pending.insert((lambda.first(), lambda.clone()), BigInt::one());
    while let Some(((first, nu), c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        if first > degree_cap {
            return Err(Error::DegreeCapExceeded { partition: nu, cap: degree_cap });
        }
        let star = nu.tail();
        *out.coefficients.entry((first, star.clone())).or_default() += &c;
        if star.is_empty() {
            continue;
        }
        for t in ring.pieri(first, &star)?.iter() {
            let mu = &t.class.partition;
            if *mu == nu {
                if t.log2 != 0 {
                    return Err(Error::Assertion(format!(
                        "coefficient of {nu} in s{first}*s{star} is 2^{}",
                        t.log2
                    )));
                }
                continue;
            }
            if mu.first() <= first {
                return Err(Error::Assertion(format!(
                    "term {mu} of s{first}*s{star} does not raise the first part"
                )));
            }
            let entry = pending.entry((mu.first(), mu.clone())).or_default();
            *entry -= &c << t.log2 as usize;
        }
    }
    out.coefficients.retain(|_, a| !a.is_zero());
    Ok(out)
}

/// The closed form `a_{p,μ} = (−1)^{p−λ_1} 2^{n(p,μ)}` read off `σ_{λ_1} σ_{λ*}`.
pub fn recursion_closed_form(k: u32, lambda: &Partition) -> Result<RecursionExpansion> {
    lambda.check_k_strict(k)?;
    let mut out = RecursionExpansion::default();
    if lambda.len() <= 1 {
        out.coefficients.insert((lambda.first(), Partition::empty()), BigInt::one());
        return Ok(out);
    }
    for t in stable_pieri_terms(Family::IG, k, lambda.first(), &lambda.tail())? {
        let nu = t.class.partition;
        let magnitude = BigInt::one() << t.log2 as usize;
        let value = if (nu.first() - lambda.first()).is_multiple_of(2) {
            magnitude
        } else {
            -magnitude
        };
        out.coefficients.insert((nu.first(), nu.tail()), value);
    }
    Ok(out)
}

/// Coefficient of `σ_{r+i} σ_{r−i}` in the degree-`2r` quadratic relation:
/// `2(−1)^i` for IG and `(−1)^i δ_{r−i}` for OG.
///
/// The OG weights are those obtained from `c_r² + 2 Σ (−1)^i c_{r+i} c_{r−i}`
/// after substituting `c_p = δ_p τ_p` and dividing by `δ_r² = 4`.
pub fn relation_weight(family: Family, k: u32, r: u32, i: u32) -> Dyadic {
    let magnitude = match family {
        Family::IG => 2,
        Family::OG if r - i > k => 2,
        Family::OG => 1,
    };
    Dyadic::from(if i % 2 == 1 { -magnitude } else { magnitude })
}

/// Evaluates `σ_r² + Σ_{i=1}^{r} w_i σ_{r+i} σ_{r−i}` (weights from
/// [`relation_weight`]) in the stable ring and reports whether it vanishes.
pub fn stable_relation_check(handle: &StableRingHandle, r: u32) -> Result<bool> {
    Ok(stable_relation_value(handle, r)?.is_zero())
}

/// The value of the degree-`2r` quadratic relation in the stable ring.
pub fn stable_relation_value(handle: &StableRingHandle, r: u32) -> Result<ClassicalCombination> {
    if r <= handle.k {
        return Err(Error::Unsupported(format!(
            "the quadratic relation needs r > k (r = {r}, k = {})",
            handle.k
        )));
    }
    let ring = SchubertRing::stable(*handle);
    let mut sum = QuantumCombination::new();
    sum.add_scaled(&*ring.act_monomial(&Partition::row(r), &[r])?, &Dyadic::one(), 0);
    for i in 1..=r {
        let weight = relation_weight(handle.family, handle.k, r, i);
        let product = ring.act_monomial(&Partition::row(r - i), &[r + i])?;
        sum.add_scaled(&product, &weight, 0);
    }
    sum.to_classical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::giambelli::{raising_expand, GeneratorMonomial};
    use crate::partition::enumerate_p;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ctx(family: Family, n: u32, k: u32) -> SpaceContext {
        SpaceContext::new(family, n, k).unwrap()
    }

    fn poly(family: GeneratorFamily, terms: &[(&[u32], u32, i64)]) -> GiambelliPolynomial {
        let mut out = GiambelliPolynomial::new(family);
        for (gens, q, c) in terms {
            out.add_term(GeneratorMonomial::new(gens.to_vec(), *q), &Dyadic::from(*c));
        }
        out
    }

    fn single(lambda: &[u32], q: u32) -> QuantumCombination {
        QuantumCombination::single(QClass::new(p(lambda), q), Dyadic::one())
    }

    #[test]
    fn evaluate_classical_examples() {
        let ring = SchubertRing::classical(ctx(Family::IG, 3, 1));
        let f = poly(GeneratorFamily::Sigma, &[(&[2, 1], 0, 1), (&[3], 0, -1)]);
        assert!(ring.evaluate_classical(&f).unwrap().is_single(&p(&[2, 1])));
        let one = GiambelliPolynomial::one(GeneratorFamily::Sigma);
        assert!(ring.evaluate_classical(&one).unwrap().is_single(&p(&[])));

        let og31 = SchubertRing::classical(ctx(Family::OG, 3, 1));
        let t = poly(GeneratorFamily::Tau, &[(&[2, 1], 0, 1), (&[3], 0, -1)]);
        assert!(og31.evaluate_classical(&t).unwrap().is_single(&p(&[2, 1])));
        // (2,1) is outside P(1,2): on the quadric the same polynomial vanishes
        let og21 = SchubertRing::classical(ctx(Family::OG, 2, 1));
        assert!(og21.evaluate_classical(&t).unwrap().is_zero());

        let too_big = poly(GeneratorFamily::Sigma, &[(&[5], 0, 1)]);
        assert!(matches!(
            ring.evaluate_classical(&too_big),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn evaluate_quantum_examples() {
        let ring = SchubertRing::quantum(ctx(Family::IG, 3, 1));
        let f = poly(GeneratorFamily::Sigma, &[(&[4, 3], 0, 1), (&[2], 1, -1)]);
        assert_eq!(ring.evaluate_quantum(&f).unwrap(), single(&[4, 3], 0));

        let p3 = SchubertRing::quantum(ctx(Family::IG, 2, 1));
        let h4 = poly(GeneratorFamily::Sigma, &[(&[1, 1, 1, 1], 0, 1)]);
        assert_eq!(p3.evaluate_quantum(&h4).unwrap(), single(&[], 1));
        let one = GiambelliPolynomial::one(GeneratorFamily::Sigma);
        assert_eq!(p3.evaluate_quantum(&one).unwrap(), QuantumCombination::unit());
    }

    #[test]
    fn schubert_quantum_examples() {
        assert_eq!(schubert_quantum(&p(&[4, 3]), &ctx(Family::IG, 3, 1)).unwrap(), single(&[4, 3], 0));
        assert_eq!(schubert_quantum(&p(&[2, 1]), &ctx(Family::OG, 3, 1)).unwrap(), single(&[2, 1], 0));
        for c in [ctx(Family::IG, 3, 1), ctx(Family::OG, 2, 1)] {
            for q in 1..=c.max_special() {
                assert_eq!(schubert_quantum(&p(&[q]), &c).unwrap(), single(&[q], 0));
            }
        }
    }

    #[test]
    fn qh_multiply_examples() {
        assert_eq!(qh_multiply(&ctx(Family::IG, 2, 1), &p(&[3]), &p(&[1])).unwrap(), single(&[], 1));
        assert_eq!(qh_multiply(&ctx(Family::OG, 2, 1), &p(&[3]), &p(&[3])).unwrap(), single(&[], 2));
        let c = ctx(Family::IG, 3, 1);
        for lambda in enumerate_p(1, 3).unwrap() {
            assert_eq!(qh_multiply(&c, &lambda, &p(&[])).unwrap(), single(lambda.parts(), 0));
        }
    }

    #[test]
    fn pi_images() {
        let c = ctx(Family::IG, 3, 1);
        let half_q = QuantumCombination::single(QClass::new(p(&[]), 1), Dyadic::pow2(-1));
        assert_eq!(pi_image(&c, 5).unwrap(), half_q);
        assert!(pi_image(&c, 7).unwrap().is_zero());
        assert!(pi_image(&c, 9).unwrap().is_zero());
        assert_eq!(pi_image(&c, 3).unwrap(), single(&[3], 0));
        let forced = pi_image(&c, 10).unwrap();
        assert!(forced.is_homogeneous(c.q_degree()));
        assert!(forced.iter().all(|(cl, _)| cl.degree(c.q_degree()) == 10));

        let o = ctx(Family::OG, 2, 1);
        assert_eq!(pi_tilde_image(&o, 3).unwrap(), single(&[3], 0));
        assert!(pi_tilde_image(&o, 4).unwrap().is_zero());
        assert!(pi_tilde_image(&o, 5).unwrap().is_zero());
        let forced = pi_tilde_image(&o, 6).unwrap();
        assert!(forced.iter().all(|(cl, _)| cl.degree(o.q_degree()) == 6));
        assert!(pi_image(&o, 1).is_err());
    }

    #[test]
    fn pi_kills_quadratic_relations() {
        for (family, n, k) in [(Family::IG, 2, 1), (Family::IG, 3, 1), (Family::IG, 2, 0), (Family::OG, 2, 1), (Family::OG, 3, 1), (Family::OG, 3, 0)] {
            let c = ctx(family, n, k);
            let pi = PiMap::new(c);
            for r in k + 1..=2 * (n + k) + 2 {
                let mut relation = GiambelliPolynomial::new(match family {
                    Family::IG => GeneratorFamily::Sigma,
                    Family::OG => GeneratorFamily::Tau,
                });
                relation.add_term(GeneratorMonomial::new(vec![r, r], 0), &Dyadic::one());
                for i in 1..=r {
                    let w = relation_weight(family, k, r, i);
                    relation.add_term(GeneratorMonomial::new(vec![r + i, r - i], 0), &w);
                }
                let image = pi.apply(&relation).unwrap();
                assert!(image.is_zero(), "{family} n={n} k={k} r={r}: {image}");
            }
        }
    }

    #[test]
    fn recursion_examples() {
        let h = StableRingHandle::new(Family::IG, 0, 3);
        let r = recursion_expand(&h, &p(&[2, 1]), 3).unwrap();
        let expected: BTreeMap<_, _> = [((2, p(&[1])), BigInt::from(1)), ((3, p(&[])), BigInt::from(-2))].into();
        assert_eq!(r.coefficients, expected);
        for k in 0..3 {
            let h = StableRingHandle::new(Family::IG, k, 5);
            let r = recursion_expand(&h, &p(&[5]), 5).unwrap();
            assert_eq!(r.coefficients, [((5, p(&[])), BigInt::from(1))].into());
        }
        assert!(matches!(
            recursion_expand(&StableRingHandle::new(Family::IG, 0, 3), &p(&[2, 1]), 2),
            Err(Error::DegreeCapExceeded { .. })
        ));
    }

    #[test]
    fn recursion_reproduces_class() {
        for k in 0..3 {
            let h = StableRingHandle::new(Family::IG, k, 10);
            let ring = SchubertRing::stable(h);
            for lambda in crate::partition::k_strict_partitions(k, 4, 6, 9) {
                let r = recursion_expand(&h, &lambda, lambda.weight()).unwrap();
                assert!(r.evaluate(&ring).unwrap().is_single(&lambda), "{lambda} k={k}");
                for (p_, mu) in r.coefficients.keys() {
                    assert!(*p_ >= lambda.first() && *p_ <= lambda.weight().max(1));
                    assert!(mu.is_contained_in(&lambda.tail()), "{lambda}: {mu}");
                }
            }
        }
    }

    #[test]
    fn stable_relations_small() {
        assert!(stable_relation_check(&StableRingHandle::new(Family::IG, 0, 2), 1).unwrap());
        assert!(stable_relation_check(&StableRingHandle::new(Family::IG, 2, 6), 3).unwrap());
        assert!(stable_relation_check(&StableRingHandle::new(Family::OG, 1, 4), 2).unwrap());
        assert!(stable_relation_check(&StableRingHandle::new(Family::IG, 2, 6), 2).is_err());
        assert!(matches!(
            stable_relation_check(&StableRingHandle::new(Family::IG, 0, 3), 2),
            Err(Error::TruncationExceeded { .. })
        ));
    }

    #[test]
    fn stable_giambelli_small() {
        for family in [Family::IG, Family::OG] {
            for k in 0..3 {
                let ring = SchubertRing::stable(StableRingHandle::new(family, k, 9));
                for lambda in crate::partition::k_strict_partitions(k, 4, 9, 9) {
                    ring.schubert_class(&lambda).unwrap();
                }
            }
        }
        // σ_λ = R^λ m_λ in the stable ring directly
        let ring = SchubertRing::stable(StableRingHandle::new(Family::IG, 1, 7));
        let value = ring.evaluate_classical(&raising_expand(&p(&[4, 3]), 1).unwrap()).unwrap();
        assert!(value.is_single(&p(&[4, 3])));
    }
}
