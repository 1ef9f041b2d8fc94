//! Property tests for the composition algebra and the format round trips.

use proptest::prelude::*;

use hyperlaw::enumeration::{random_table, SplitMix64};
use hyperlaw::fixtures;
use hyperlaw::format;
use hyperlaw::ideals::{is_ideal, IdealKind};
use hyperlaw::laws::{check_law, LawId};
use hyperlaw::naive;
use hyperlaw::table::{HyperTable, SubsetMask};

fn fixture(index: usize) -> HyperTable {
    let all = fixtures::all();
    all[index % all.len()].1.clone()
}

/// A non-empty mask within the order of table `t`.
fn mask_in(t: &HyperTable, bits: u32, fallback: usize) -> SubsetMask {
    let clipped = SubsetMask(bits).intersect(t.carrier());
    if clipped.is_empty() {
        SubsetMask::singleton(fallback % t.order())
    } else {
        clipped
    }
}

proptest! {
    #[test]
    fn compose_is_monotone(ix in 0usize..6, a in any::<u32>(), b in any::<u32>(),
                           extra_a in any::<u32>(), extra_b in any::<u32>(), f in 0usize..8) {
        let t = fixture(ix);
        let a = mask_in(&t, a, f);
        let b = mask_in(&t, b, f + 1);
        let bigger_a = a.union(mask_in(&t, extra_a, f + 2));
        let bigger_b = b.union(mask_in(&t, extra_b, f + 3));
        let small = t.compose(a, b).unwrap();
        let large = t.compose(bigger_a, bigger_b).unwrap();
        prop_assert!(small.is_subset_of(large));
    }

    #[test]
    fn compose_distributes_over_union(ix in 0usize..6, a in any::<u32>(), a2 in any::<u32>(),
                                      b in any::<u32>(), f in 0usize..8) {
        let t = fixture(ix);
        let a = mask_in(&t, a, f);
        let a2 = mask_in(&t, a2, f + 1);
        let b = mask_in(&t, b, f + 2);
        // in the left argument
        let joined = t.compose(a.union(a2), b).unwrap();
        let split = t.compose(a, b).unwrap().union(t.compose(a2, b).unwrap());
        prop_assert_eq!(joined, split);
        // and in the right argument
        let joined = t.compose(b, a.union(a2)).unwrap();
        let split = t.compose(b, a).unwrap().union(t.compose(b, a2).unwrap());
        prop_assert_eq!(joined, split);
    }

    #[test]
    fn singleton_composition_is_the_cell(ix in 0usize..6, i in 0usize..8, j in 0usize..8) {
        let t = fixture(ix);
        let (i, j) = (i % t.order(), j % t.order());
        let got = t
            .compose(SubsetMask::singleton(i), SubsetMask::singleton(j))
            .unwrap();
        prop_assert_eq!(got, t.cell(i, j));
    }

    #[test]
    fn compose_agrees_with_the_naive_double_loop(ix in 0usize..6, a in any::<u32>(),
                                                 b in any::<u32>(), f in 0usize..8) {
        let t = fixture(ix);
        let a = mask_in(&t, a, f);
        let b = mask_in(&t, b, f + 1);
        prop_assert_eq!(t.compose(a, b).unwrap(), naive::compose(&t, a, b));
    }

    #[test]
    fn law_verdicts_agree_with_naive_on_random_tables(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = SplitMix64::new(seed);
        let t = random_table(n, &mut rng);
        for law in LawId::ALL {
            prop_assert_eq!(check_law(&t, law), naive::check_law(&t, law));
        }
    }

    #[test]
    fn ideal_verdicts_agree_with_naive_on_random_tables(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = SplitMix64::new(seed);
        let t = random_table(n, &mut rng);
        for bits in 1..=t.carrier().0 {
            let a = SubsetMask(bits);
            for kind in IdealKind::ALL {
                prop_assert_eq!(is_ideal(&t, kind, a).unwrap(), naive::is_ideal(&t, kind, a));
            }
        }
    }

    #[test]
    fn formats_round_trip_random_tables(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = SplitMix64::new(seed);
        let t = random_table(n, &mut rng);
        let compact = format::serialize_compact(&t);
        prop_assert_eq!(format::parse(&compact).unwrap(), t.clone());
        let json = format::serialize_json(&t);
        prop_assert_eq!(format::parse(&json).unwrap(), t);
    }
}

#[test]
fn optimized_full_composition_matches_naive_on_all_fixtures() {
    for (id, t) in fixtures::all() {
        let h = t.carrier();
        assert_eq!(
            t.compose(h, h).unwrap(),
            naive::compose(&t, h, h),
            "H∘H on {id}"
        );
    }
}
