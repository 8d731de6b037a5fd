//! Randomized round-trip properties complementing the exhaustive sweeps in
//! the unit tests.

use parkfn::classify::{is_nondecreasing, is_rational_pf};
use parkfn::lattice::{dyck_to_prefs, prefs_to_dyck};
use parkfn::simulate::{displacements, park};
use parkfn::tuple::{format_tuple, parse_tuple};
use proptest::prelude::*;

proptest! {
    #[test]
    fn tuple_format_parse_round_trip(t in proptest::collection::vec(1usize..100, 0..12)) {
        let s = format_tuple(&t);
        prop_assert_eq!(parse_tuple(&s).unwrap(), t);
    }

    #[test]
    fn dyck_round_trip_on_sorted_parking_functions(
        mut t in proptest::collection::vec(1usize..9, 1..6),
        extra in 0usize..4,
    ) {
        t.sort_unstable();
        let m = 8 + extra;
        prop_assume!(is_rational_pf(&t, m).unwrap());
        let word = prefs_to_dyck(&t, t.len(), m).unwrap();
        prop_assert_eq!(dyck_to_prefs(&word), t);
    }

    #[test]
    fn outcome_of_sorted_prefix_is_consistent(
        mut t in proptest::collection::vec(1usize..7, 1..7),
    ) {
        t.sort_unstable();
        prop_assume!(is_rational_pf(&t, 8).unwrap());
        prop_assert!(is_nondecreasing(&t));
        let outcome = park(&t, 8).unwrap().into_outcome().unwrap();
        let d = displacements(&t, &outcome).unwrap();
        // every car parks at or after its preference, within the street
        for (i, (&a, &di)) in t.iter().zip(&d).enumerate() {
            let spot = outcome.spot_of(i + 1).unwrap();
            prop_assert_eq!(spot, a + di);
            prop_assert!(spot <= 8);
        }
    }
}
