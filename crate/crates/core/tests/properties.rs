use proptest::prelude::*;

use isoschubert::{
    enumerate_p, giambelli_og, quantum_giambelli, relation_weight, ClassicalCombination, Dyadic, Family,
    GeneratorFamily, GeneratorMonomial, GiambelliPolynomial, PiMap, Partition, QClass, QuantumCombination,
    SchubertRing, SpaceContext,
};

fn contexts() -> impl Strategy<Value = SpaceContext> {
    let points = [(0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)];
    (prop::sample::select(points.to_vec()), prop::bool::ANY).prop_map(|((k, n), og)| {
        let family = if og { Family::OG } else { Family::IG };
        SpaceContext::new(family, n, k).unwrap()
    })
}

/// A context and `count` classes of `P(k, n)` (with repetition).
fn classes(count: usize) -> impl Strategy<Value = (SpaceContext, Vec<Partition>)> {
    contexts().prop_flat_map(move |ctx| {
        let basis = enumerate_p(ctx.k, ctx.n).unwrap();
        (Just(ctx), prop::collection::vec(prop::sample::select(basis), count))
    })
}

fn single(lambda: &Partition) -> QuantumCombination {
    QuantumCombination::single(QClass::classical(lambda.clone()), Dyadic::one())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn special_classes_commute((ctx, lambdas) in classes(1), p in 1u32..8, r in 1u32..8) {
        let (p, r) = (1 + p % ctx.max_special(), 1 + r % ctx.max_special());
        for ring in [SchubertRing::classical(ctx), SchubertRing::quantum(ctx)] {
            let lambda = &lambdas[0];
            let a = ring.act_monomial(lambda, &[p, r]).unwrap();
            let b = ring.act_monomial(lambda, &[r, p]).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn quantum_products_are_graded_and_integral((ctx, ls) in classes(2)) {
        let product = SchubertRing::quantum(ctx).multiply(&ls[0], &ls[1]).unwrap();
        prop_assert!(product.is_integral());
        for (class, c) in product.iter() {
            prop_assert_eq!(class.degree(ctx.q_degree()), ls[0].weight() + ls[1].weight());
            prop_assert!(ctx.contains(&class.partition));
            prop_assert!(!c.is_negative(), "negative structure constant in {}", product);
        }
    }

    #[test]
    fn q_free_products_match_classical((ctx, ls) in classes(2)) {
        prop_assume!(ls[0].weight() + ls[1].weight() < ctx.q_degree());
        let quantum = SchubertRing::quantum(ctx).multiply(&ls[0], &ls[1]).unwrap();
        let classical = SchubertRing::classical(ctx).multiply(&ls[0], &ls[1]).unwrap();
        prop_assert_eq!(quantum, classical);
    }

    #[test]
    fn classical_part_truncates((ctx, ls) in classes(2)) {
        // the q^0 part of a quantum product is the classical product
        let quantum = SchubertRing::quantum(ctx).multiply(&ls[0], &ls[1]).unwrap();
        let classical = SchubertRing::classical(ctx).multiply(&ls[0], &ls[1]).unwrap();
        prop_assert_eq!(quantum.classical_part(), classical);
    }

    #[test]
    fn pieri_coefficients_are_powers_of_two((ctx, ls) in classes(1), p in 1u32..8) {
        let p = 1 + p % ctx.max_special();
        for ring in [SchubertRing::classical(ctx), SchubertRing::quantum(ctx)] {
            for term in ring.pieri(p, &ls[0]).unwrap().iter() {
                prop_assert!(term.class.partition.is_k_strict(ctx.k));
                prop_assert_eq!(term.class.degree(ring.q_degree()), ls[0].weight() + p);
            }
        }
    }

    #[test]
    fn unit_is_neutral((ctx, ls) in classes(1)) {
        let ring = SchubertRing::quantum(ctx);
        prop_assert_eq!(ring.multiply(&ls[0], &Partition::empty()).unwrap(), single(&ls[0]));
        prop_assert_eq!(ring.multiply(&Partition::empty(), &ls[0]).unwrap(), single(&ls[0]));
    }

    #[test]
    fn quantum_giambelli_is_homogeneous((ctx, ls) in classes(1)) {
        let poly = quantum_giambelli(&ls[0], &ctx).unwrap();
        prop_assert!(poly.is_homogeneous(ctx.q_degree()));
        prop_assert!(poly.max_generator() <= ctx.max_special());
    }

    #[test]
    fn og_tau_form_rescales_to_c_form(k in 0u32..3, lambda in prop::collection::vec(1u32..7, 0..4)) {
        let mut parts = lambda;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Partition::new(parts).unwrap();
        prop_assume!(lambda.is_k_strict(k));
        let (c_form, tau_form) = giambelli_og(&lambda, k).unwrap();
        prop_assert_eq!(tau_form.family, GeneratorFamily::Tau);
        prop_assert_eq!(tau_form.tau_to_c(k).unwrap(), c_form.clone());
        let scale = Dyadic::pow2(lambda.count_above(k) as i32);
        for (m, c) in c_form.iter() {
            prop_assert!((&scale * c).is_integer(), "2^ℓ_k times {} is not integral", c);
            let delta: i32 = m.degrees.iter().map(|&d| i32::from(d > k)).sum();
            prop_assert_eq!(tau_form.coefficient(m), c.shifted(delta));
        }
    }

    #[test]
    fn pi_kills_quadratic_relations(ctx in contexts(), r in 1u32..12) {
        prop_assume!(r > ctx.k);
        let pi = PiMap::new(ctx);
        let family = match ctx.family {
            Family::IG => GeneratorFamily::Sigma,
            Family::OG => GeneratorFamily::Tau,
        };
        let mut relation = GiambelliPolynomial::new(family);
        relation.add_term(GeneratorMonomial::new(vec![r, r], 0), &Dyadic::one());
        for i in 1..=r {
            relation.add_term(GeneratorMonomial::new(vec![r + i, r - i], 0), &relation_weight(ctx.family, ctx.k, r, i));
        }
        let image = pi.apply(&relation).unwrap();
        prop_assert!(image.is_zero(), "relation r={} maps to {}", r, image);
    }
}

#[test]
fn classical_combination_round_trips_through_records() {
    let ctx = SpaceContext::new(Family::IG, 3, 1).unwrap();
    let ring = SchubertRing::quantum(ctx);
    let product = ring
        .multiply(&Partition::new(vec![4, 2]).unwrap(), &Partition::new(vec![3, 1]).unwrap())
        .unwrap();
    let json = serde_json::to_string(&product.to_records()).unwrap();
    let back: Vec<isoschubert::TermRecord> = serde_json::from_str(&json).unwrap();
    assert_eq!(QuantumCombination::from_records(&back), product);
    let classical: ClassicalCombination = [(Partition::row(2), 3.into())].into_iter().collect();
    assert_eq!(QuantumCombination::from_records(&classical.to_records()), QuantumCombination::from(&classical));
}
