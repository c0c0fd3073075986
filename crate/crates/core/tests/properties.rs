use std::sync::Arc;

use monideal::resolution::{self, Caps};
use monideal::{hilbert, FieldChar, MonomialIdeal, Ring};
use proptest::prelude::*;

fn arb_ideal(max_n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::collection::vec(0..=max_exp, n), 1..=max_gens)
            .prop_filter_map("constant generator", move |gens| {
                if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
                    return None;
                }
                MonomialIdeal::from_exponents(Arc::new(Ring::with_vars(n)), gens).ok()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn betti_table_matches_taylor(i in arb_ideal(4, 6, 3)) {
        let caps = Caps::default();
        let fast = resolution::betti_table(&i, FieldChar::Zero, &caps).unwrap();
        let slow = resolution::taylor_betti_table(&i, FieldChar::Zero, &caps).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn betti_numbers_ignore_variable_order(i in arb_ideal(4, 6, 3), seed in any::<u64>()) {
        let n = i.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.rotate_left((seed % n as u64) as usize);
        if seed & 1 == 1 {
            perm.swap(0, n - 1);
        }
        let caps = Caps::default();
        let a = resolution::betti_table(&i, FieldChar::Zero, &caps).unwrap();
        let b = resolution::betti_table(&i.permute_vars(&perm).unwrap(), FieldChar::Zero, &caps).unwrap();
        prop_assert_eq!(a.entries().collect::<Vec<_>>(), b.entries().collect::<Vec<_>>());
    }

    // No torsion in the homology of complexes on at most four vertices.
    #[test]
    fn small_rings_are_characteristic_free(i in arb_ideal(4, 6, 3)) {
        let caps = Caps::default();
        let zero = resolution::betti_table(&i, FieldChar::Zero, &caps).unwrap();
        for p in [2, 3] {
            let modp = resolution::betti_table(&i, FieldChar::new(p).unwrap(), &caps).unwrap();
            prop_assert_eq!(zero.entries().collect::<Vec<_>>(), modp.entries().collect::<Vec<_>>());
        }
    }

    #[test]
    fn euler_characteristic_is_hilbert_numerator(i in arb_ideal(4, 5, 3)) {
        let table = resolution::betti_table(&i, FieldChar::Zero, &Caps::default()).unwrap();
        prop_assert_eq!(table.euler_numerator(), hilbert::hilbert_numerator(&i));
    }

    #[test]
    fn projective_dimension_at_least_height(i in arb_ideal(4, 6, 3)) {
        let table = resolution::betti_table(&i, FieldChar::Zero, &Caps::default()).unwrap();
        let c = hilbert::height(&i).unwrap();
        prop_assert!(table.projective_dimension() >= c);
        prop_assert!(table.projective_dimension() <= i.n());
    }
}
