use gitquot_core::*;
use proptest::prelude::*;

/// A random tuple of some `I(r, n)` with `n` up to 40.
fn tuple() -> impl Strategy<Value = ColumnTuple> {
    (2usize..=40)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, r)| {
            (
                Just(n),
                Just(r),
                proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), r),
            )
        })
        .prop_map(|(n, r, entries)| Grassmannian::new(r, n).unwrap().tuple(entries).unwrap())
}

proptest! {
    #[test]
    fn shape_round_trip(w in tuple()) {
        prop_assert_eq!(from_partition(&to_partition(&w)), w);
    }

    #[test]
    fn word_recovers_tuple(w in tuple()) {
        let word = canonical_reduced_word(&w);
        prop_assert_eq!(word.len(), to_partition(&w).size());
        let perm = word_to_permutation(&word, w.n()).unwrap();
        prop_assert_eq!(perm.sorted_prefix(w.r()), w.entries().to_vec());
    }

    #[test]
    fn reflection_involution(w in tuple(), j in 1usize..40) {
        prop_assume!(j < w.n());
        let once = reflect_subset(j, &w).unwrap();
        prop_assert_eq!(reflect_subset(j, &once).unwrap(), w);
    }

    #[test]
    fn hook_routes_agree(w in tuple()) {
        let a = singular_components(&w);
        prop_assert_eq!(&a, &singular_components_via_runs(&w));
        let k = run_length(&to_partition(&w)).len();
        prop_assert_eq!(a.len(), k.saturating_sub(1));
    }

    #[test]
    fn criteria_agree_on_semistable_tuples(w in tuple()) {
        let ctx = w.context();
        prop_assume!(ctx.is_coprime());
        let report = analyze(&w, &ctx).unwrap();
        prop_assert_eq!(report.verdict == Verdict::Smooth,
            report.semistable_nonempty && report.criterion_components.holds);
    }
}
