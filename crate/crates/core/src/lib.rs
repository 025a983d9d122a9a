//! Exact Schubert calculus on the isotropic Grassmannians `IG(n−k, 2n)` and
//! `OG(n−k, 2n+1)`: Pieri rules, raising-operator and quantum Giambelli
//! formulas, and the stable rings they come from.

pub mod combination;
pub mod dyadic;
pub mod error;
pub mod giambelli;
pub mod json;
pub mod partition;
pub mod pieri;
pub mod ring;
pub mod verify;

pub use combination::{ClassicalCombination, QClass, QuantumCombination, TermRecord};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use giambelli::{
    classical_giambelli, giambelli_og, quantum_giambelli, quantum_giambelli_ig, quantum_giambelli_og,
    raising_expand, GeneratorFamily, GeneratorMonomial, GiambelliPolynomial,
};
pub use partition::{enumerate_p, Cell, Family, Partition, SpaceContext};
pub use pieri::{arrow_targets, classical_pieri, quantum_pieri_ig, quantum_pieri_og, stable_pieri, ArrowWitness, PieriTerm};
pub use ring::{
    pi_image, pi_tilde_image, qh_multiply, recursion_closed_form, recursion_expand, relation_weight, schubert_quantum,
    stable_relation_check, stable_relation_value, PiMap,
    RecursionExpansion, RingKind, SchubertRing, StableRingHandle,
};
