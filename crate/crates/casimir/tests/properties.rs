//! Property tests for the algebraic identities the crate is built on.
//! Everything here is exact equality; there are no tolerances to hide behind.

use casimir::{
    casimir_direct, casimir_stable, dimension, extract_stable, gram_entry, oracle_decompose,
    tensor_with_adjoint, universal_form, vogel_su, weyl_row_sum, DynkinLabels, Rational,
    StableRep,
};
use num::BigInt;
use proptest::prelude::*;

fn stable_rep(max_k: usize, max_label: u32) -> impl Strategy<Value = StableRep> {
    (1..=max_k).prop_flat_map(move |k| {
        (
            proptest::collection::vec(0..=max_label, k),
            proptest::collection::vec(0..=max_label, k),
        )
            .prop_map(|(head, tail)| StableRep::new(head, tail).unwrap())
    })
}

fn dynkin_labels(max_n: usize, max_label: u32) -> impl Strategy<Value = DynkinLabels> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(0..=max_label, n - 1)
            .prop_map(move |labels| DynkinLabels::new(n, labels).unwrap())
    })
}

proptest! {
    // --- stable representations ---

    #[test]
    fn realize_extract_round_trip(rep in stable_rep(4, 3), pad in 0usize..10) {
        let n = 2 * rep.k() + 1 + pad;
        let labels = rep.realize(n).unwrap();
        prop_assert_eq!(extract_stable(&labels, rep.k()).unwrap(), rep);
    }

    #[test]
    fn canonicalization_is_idempotent_and_preserves_areas(
        k in 1usize..=5,
        raw in proptest::collection::vec((0u32..=3, 0u32..=3), 5),
    ) {
        let head: Vec<u32> = raw.iter().take(k).map(|p| p.0).collect();
        let tail: Vec<u32> = raw.iter().take(k).map(|p| p.1).collect();
        let raw_area = |v: &[u32]| -> i64 {
            v.iter().enumerate().map(|(i, &l)| (i as i64 + 1) * l as i64).sum()
        };
        let rep = StableRep::new(head.clone(), tail.clone()).unwrap();
        // Rebuilding from the canonical vectors changes nothing.
        let again = StableRep::new(rep.head().to_vec(), rep.tail().to_vec()).unwrap();
        prop_assert_eq!(&again, &rep);
        // Trimmed pairs are (0, 0), so the areas cannot move.
        prop_assert_eq!(rep.area_head(), raw_area(&head));
        prop_assert_eq!(rep.area_tail(), raw_area(&tail));
    }

    #[test]
    fn balance_survives_swap_and_round_trip(rep in stable_rep(4, 3), pad in 0usize..8) {
        prop_assert_eq!(rep.is_balanced(), rep.conjugate().is_balanced());
        let n = 2 * rep.k() + 1 + pad;
        let back = extract_stable(&rep.realize(n).unwrap(), rep.k()).unwrap();
        prop_assert_eq!(back.is_balanced(), rep.is_balanced());
    }

    // --- Gram matrix ---

    #[test]
    fn gram_symmetries(n in 2usize..=40, seed in any::<u64>()) {
        let i = (seed % (n as u64 - 1)) as usize + 1;
        let j = ((seed >> 16) % (n as u64 - 1)) as usize + 1;
        let f_ij = gram_entry(i, j, n).unwrap();
        prop_assert_eq!(&f_ij, &gram_entry(j, i, n).unwrap());
        prop_assert_eq!(&f_ij, &gram_entry(n - i, n - j, n).unwrap());
    }

    #[test]
    fn row_sum_identity(n in 2usize..=30) {
        for i in 1..n {
            let literal: Rational = (1..n).map(|j| gram_entry(i, j, n).unwrap()).sum();
            prop_assert_eq!(weyl_row_sum(i, n).unwrap(), literal);
        }
    }

    #[test]
    fn casimir_direct_is_positive_and_conjugation_invariant(
        labels in dynkin_labels(12, 4),
    ) {
        let c = casimir_direct(&labels);
        if labels.is_trivial() {
            prop_assert!(c.is_zero());
        } else {
            prop_assert!(!c.is_zero() && !c.is_negative());
        }
        prop_assert_eq!(c, casimir_direct(&labels.conjugate()));
    }

    // --- closed form vs direct route ---

    #[test]
    fn closed_form_matches_direct(rep in stable_rep(4, 3), pad in 0usize..16) {
        let n = (2 * rep.k() + 1 + pad).min(40);
        let poly = casimir_stable(&rep);
        let direct = casimir_direct(&rep.realize(n).unwrap());
        prop_assert_eq!(poly.evaluate(n).unwrap(), direct);
    }

    #[test]
    fn linearity_iff_balance(rep in stable_rep(5, 4)) {
        let poly = casimir_stable(&rep);
        prop_assert_eq!(poly.is_linear(), rep.is_balanced());
    }

    #[test]
    fn one_over_n_coefficient_is_minus_a_perfect_square(rep in stable_rep(5, 4)) {
        let poly = casimir_stable(&rep);
        let diff = rep.area_head() - rep.area_tail();
        prop_assert_eq!(-poly.am1(), Rational::from_integer(diff * diff));
    }

    #[test]
    fn closed_form_is_conjugation_invariant(rep in stable_rep(4, 4)) {
        let poly = casimir_stable(&rep);
        let swapped = casimir_stable(&rep.conjugate());
        prop_assert_eq!(poly, swapped);
    }

    #[test]
    fn leading_coefficient_is_total_area(rep in stable_rep(5, 4)) {
        let poly = casimir_stable(&rep);
        prop_assert_eq!(
            poly.a1(),
            &Rational::from_integer(rep.area_head() + rep.area_tail())
        );
    }

    // --- universal form ---

    #[test]
    fn universal_round_trip_on_linear_polys(rep in stable_rep(4, 3), n in 2usize..=30) {
        let poly = casimir_stable(&rep);
        prop_assert_eq!(universal_form(&poly).is_ok(), poly.is_linear());
        if let Ok(coeffs) = universal_form(&poly) {
            prop_assert_eq!(coeffs.contract(&vogel_su(n)), poly.evaluate(n).unwrap());
        }
    }

    // --- tensor decompositions ---

    #[test]
    fn tensor_checksum(labels in dynkin_labels(6, 2)) {
        let dec = tensor_with_adjoint(&labels);
        let n = labels.n();
        let expect = dimension(&labels) * BigInt::from(n * n - 1);
        prop_assert_eq!(dec.total_dimension(), expect);
    }

    #[test]
    fn tensor_conjugation_commutes(labels in dynkin_labels(6, 2)) {
        let dec = tensor_with_adjoint(&labels.conjugate());
        prop_assert_eq!(dec, tensor_with_adjoint(&labels).conjugate());
    }

    #[test]
    fn klimyk_agrees_with_brute_force(labels in dynkin_labels(4, 2)) {
        let n = labels.n();
        let adjoint = DynkinLabels::adjoint(n).unwrap();
        let oracle = oracle_decompose(&labels, &adjoint).unwrap();
        prop_assert_eq!(tensor_with_adjoint(&labels), oracle);
    }
}
