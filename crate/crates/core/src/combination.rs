//! Finitely supported linear combinations of Schubert classes.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A basis element `q^q · σ_λ` of a quantum cohomology ring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct QClass {
    pub q: u32,
    pub partition: Partition,
}

impl QClass {
    pub fn new(partition: Partition, q: u32) -> Self {
        QClass { q, partition }
    }

    pub fn classical(partition: Partition) -> Self {
        QClass { q: 0, partition }
    }

    /// `|λ| + q·deg(q)`.
    pub fn degree(&self, q_degree: u32) -> u32 {
        self.partition.weight() + self.q * q_degree
    }
}

/// Integer combination `Σ c_λ σ_λ` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ClassicalCombination {
    terms: BTreeMap<Partition, BigInt>,
}

impl ClassicalCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::single(Partition::empty(), BigInt::one())
    }

    pub fn single(lambda: Partition, coeff: BigInt) -> Self {
        let mut out = Self::new();
        out.add_term(lambda, &coeff);
        out
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
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

    /// Whether the combination is exactly `1·σ_λ`.
    pub fn is_single(&self, lambda: &Partition) -> bool {
        self.terms.len() == 1 && self.terms.get(lambda).is_some_and(|c| c.is_one())
    }

    /// The common weight of all terms, if homogeneous and nonzero.
    pub fn weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(Partition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }
}

impl FromIterator<(Partition, BigInt)> for ClassicalCombination {
    fn from_iter<I: IntoIterator<Item = (Partition, BigInt)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (lambda, c) in iter {
            out.add_term(lambda, &c);
        }
        out
    }
}

impl fmt::Display for ClassicalCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms
                .iter()
                .map(|(l, c)| (Dyadic::from_int(c.clone()), class_label(l, 0))),
        )
    }
}

impl fmt::Debug for ClassicalCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dyadic combination `Σ c_{λ,e} q^e σ_λ` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QuantumCombination {
    terms: BTreeMap<QClass, Dyadic>,
}

impl QuantumCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::single(QClass::classical(Partition::empty()), Dyadic::one())
    }

    pub fn single(class: QClass, coeff: Dyadic) -> Self {
        let mut out = Self::new();
        out.add_term(class, &coeff);
        out
    }

    pub fn add_term(&mut self, class: QClass, coeff: &Dyadic) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(class) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += scale · q^q_shift · other`.
    pub fn add_scaled(&mut self, other: &QuantumCombination, scale: &Dyadic, q_shift: u32) {
        if scale.is_zero() {
            return;
        }
        for (class, c) in &other.terms {
            let shifted = QClass::new(class.partition.clone(), class.q + q_shift);
            self.add_term(shifted, &(c * scale));
        }
    }

    pub fn scaled(&self, scale: &Dyadic) -> QuantumCombination {
        let mut out = QuantumCombination::new();
        out.add_scaled(self, scale, 0);
        out
    }

    pub fn coefficient(&self, class: &QClass) -> Dyadic {
        self.terms.get(class).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&QClass, &Dyadic)> {
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

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Dyadic::is_integer)
    }

    /// Whether the combination is exactly `1·q^q σ_λ`.
    pub fn is_single(&self, class: &QClass) -> bool {
        self.terms.len() == 1 && self.terms.get(class).is_some_and(Dyadic::is_one)
    }

    /// Whether `|λ| + q·deg(q)` is constant over the terms.
    pub fn is_homogeneous(&self, q_degree: u32) -> bool {
        let mut degrees = self.terms.keys().map(|c| c.degree(q_degree));
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    /// The `q^0` part.
    pub fn classical_part(&self) -> QuantumCombination {
        QuantumCombination {
            terms: self
                .terms
                .iter()
                .filter(|(c, _)| c.q == 0)
                .map(|(c, v)| (c.clone(), v.clone()))
                .collect(),
        }
    }

    /// Conversion to an integer combination; fails on `q` terms or fractions.
    pub fn to_classical(&self) -> Result<ClassicalCombination> {
        let mut out = ClassicalCombination::new();
        for (class, c) in &self.terms {
            if class.q != 0 {
                return Err(Error::Assertion(format!(
                    "unexpected quantum term in classical result: {self}"
                )));
            }
            let c = c
                .to_integer()
                .ok_or_else(|| Error::NonIntegral(self.to_string()))?;
            out.add_term(class.partition.clone(), &c);
        }
        Ok(out)
    }

    pub fn check_integral(&self) -> Result<()> {
        if self.is_integral() {
            Ok(())
        } else {
            Err(Error::NonIntegral(self.to_string()))
        }
    }
}

impl From<&ClassicalCombination> for QuantumCombination {
    fn from(c: &ClassicalCombination) -> Self {
        let mut out = QuantumCombination::new();
        for (lambda, coeff) in c.iter() {
            out.add_term(QClass::classical(lambda.clone()), &Dyadic::from_int(coeff.clone()));
        }
        out
    }
}

impl fmt::Display for QuantumCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms
                .iter()
                .map(|(cl, c)| (c.clone(), class_label(&cl.partition, cl.q))),
        )
    }
}

impl fmt::Debug for QuantumCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn class_label(lambda: &Partition, q: u32) -> String {
    let mut s = String::new();
    match q {
        0 => {}
        1 => s.push_str("q*"),
        e => s.push_str(&format!("q^{e}*")),
    }
    s.push_str(&format!("s{lambda}"));
    s
}

/// Writes `c1*X1 + c2*X2 - …`, dropping unit coefficients; `0` when empty.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Dyadic, String)>,
) -> fmt::Result {
    let mut first = true;
    for (coeff, label) in terms {
        let negative = coeff.is_negative();
        let abs = coeff.abs();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        first = false;
        if label.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&label)?;
        } else {
            write!(f, "{abs}*{label}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// One `(partition, q, coefficient)` term in the JSON encoding of a combination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub lambda: Partition,
    pub q: u32,
    pub num: crate::json::BigNum,
    pub den2: u32,
}

impl QuantumCombination {
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(cl, c)| TermRecord {
                lambda: cl.partition.clone(),
                q: cl.q,
                num: crate::json::BigNum(c.numer().clone()),
                den2: c.den2(),
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Self {
        let mut out = QuantumCombination::new();
        for r in records {
            out.add_term(
                QClass::new(r.lambda.clone(), r.q),
                &Dyadic::new(r.num.0.clone(), r.den2),
            );
        }
        out
    }
}

impl ClassicalCombination {
    pub fn to_records(&self) -> Vec<TermRecord> {
        QuantumCombination::from(self).to_records()
    }
}
