use num_bigint::BigUint;
use olympiad_core::{
    angle_concurrency as geo, cablecar, deck_checker as deck, inequality as ineq,
    pebble_partition as pebbles, seeded_rng, separating_line as sep,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn partitions_are_valid(n in 1usize..12, seed in any::<u64>()) {
        let c = pebbles::random_coloring(n, &mut seeded_rng(seed));
        let p = pebbles::partition_pebbles(&c).unwrap();
        prop_assert!(pebbles::verify_partition(&c, &p).is_empty());
        prop_assert!(p.pile_a.contains(&1));
    }

    #[test]
    fn relabeling_colors_keeps_partition(n in 1usize..8, seed in any::<u64>(), shift in 1usize..5) {
        let c = pebbles::random_coloring(n, &mut seeded_rng(seed));
        let relabeled = pebbles::PebbleColoring::new(
            n,
            c.color_of().iter().map(|&x| (x + shift) % n).collect(),
        ).unwrap();
        let p = pebbles::partition_pebbles(&relabeled).unwrap();
        prop_assert!(pebbles::verify_partition(&c, &p).is_empty());
    }

    #[test]
    fn linked_pairs_match_components(n in 2usize..7, k_frac in 0.0f64..1.0, seed in any::<u64>()) {
        let k = 1 + ((n * n - 2) as f64 * k_frac) as usize;
        let config = cablecar::random_config(n, k, &mut seeded_rng(seed)).unwrap();
        prop_assert!(cablecar::validate_config(&config).is_empty());
        let graph = cablecar::station_graph(&config).unwrap();
        prop_assert_eq!(cablecar::linked_pairs(&config).unwrap(), graph.same_component_pairs());
        prop_assert_eq!(graph.component_count(), n * n - k);
    }

    #[test]
    fn common_link_above_threshold(n in 2usize..6, seed in any::<u64>()) {
        let k = n * n - n + 1;
        let mut rng = seeded_rng(seed);
        let a = cablecar::random_config(n, k, &mut rng).unwrap();
        let b = cablecar::random_config(n, k, &mut rng).unwrap();
        let (x, y) = cablecar::find_common_linked(&a, &b).unwrap().expect("a common pair");
        prop_assert!(x < y);
        prop_assert!(cablecar::linked_pairs(&a).unwrap().contains(&(x, y)));
        prop_assert!(cablecar::linked_pairs(&b).unwrap().contains(&(x, y)));
    }

    #[test]
    fn separation_survives_scaling(n in 2usize..120, seed in any::<u64>(), grid in any::<bool>(), factor in 1.0f64..4.0) {
        let mode = if grid { sep::GeneratorMode::JitteredGrid } else { sep::GeneratorMode::Rejection };
        let ps = sep::generate_min_dist_points(n, seed, mode).unwrap();
        for set in [ps.clone(), ps.scaled(factor).unwrap()] {
            let line = sep::separating_line(&set).unwrap();
            let report = sep::verify_separation(set.points(), &line);
            prop_assert!(report.valid, "{:?}", report);
            prop_assert!((report.margin - line.margin).abs() < 1e-9);
        }
    }

    #[test]
    fn deck_property_is_scale_invariant(values in prop::collection::vec(1u64..30, 2..5), c in 1u64..500) {
        let d = deck::Deck::from_u64s(&values).unwrap();
        let scaled = d.scaled(&BigUint::from(c)).unwrap();
        prop_assert_eq!(
            deck::deck_satisfies_property(&d).satisfies,
            deck::deck_satisfies_property(&scaled).satisfies
        );
        let normalized = deck::normalize_deck(&d);
        prop_assert_eq!(normalized.gcd(), BigUint::from(1u32));
        prop_assert_eq!(normalized.is_constant(), d.is_constant());
    }

    #[test]
    fn concurrency_is_scale_free(seed in any::<u64>(), s in 0.1f64..10.0) {
        let config = geo::sample_feasible(&mut seeded_rng(seed));
        let check = geo::check_theorem(&config.scaled(s), 1e-9 * s.max(1.0)).unwrap();
        prop_assert!(check.holds, "{:?}", check);
    }

    #[test]
    fn sampled_points_obey_the_chain(seed in any::<u64>()) {
        let p = ineq::sample_point(&mut seeded_rng(seed));
        let [a, b, c, d] = p.coords();
        prop_assert!(a >= b && b >= c && c >= d && d > 0.0);
        prop_assert!(ineq::lhs_value(&p) <= ineq::quadratic_bound(&p) * (1.0 + 1e-12));
        prop_assert!(ineq::quadratic_bound(&p) < 1.0);
    }

    #[test]
    fn expansions_agree_with_evaluation(r in -6i64..6, s in -6i64..6, t in -6i64..6, u in -6i64..6) {
        let (a, b, c, d) = (r + s + t + u, s + t + u, t + u, u);
        let lhs = (a + 2 * b + 3 * c + 4 * d) * (a * a + b * b + c * c + d * d);
        let rhs = (a + b + c + d).pow(3);
        prop_assert_eq!(ineq::expand_lhs().eval([r, s, t, u]), lhs.into());
        prop_assert_eq!(ineq::expand_rhs().eval([r, s, t, u]), rhs.into());
    }
}

#[test]
fn serde_round_trips() {
    let c = pebbles::random_coloring(3, &mut seeded_rng(1));
    let text = serde_json::to_string(&c).unwrap();
    assert_eq!(
        serde_json::from_str::<pebbles::PebbleColoring>(&text).unwrap(),
        c
    );

    let d: deck::Deck =
        serde_json::from_str(r#"{"values":[3,"123456789012345678901234567890",3]}"#).unwrap();
    assert_eq!(d.values()[0].to_string(), "123456789012345678901234567890");
    assert_eq!(
        serde_json::from_str::<deck::Deck>(&serde_json::to_string(&d).unwrap()).unwrap(),
        d
    );

    assert!(serde_json::from_str::<deck::Deck>(r#"{"values":[0,1]}"#).is_err());
    assert!(
        serde_json::from_str::<pebbles::PebbleColoring>(r#"{"n":1,"color_of":[0,0,0]}"#).is_err()
    );
    assert!(serde_json::from_str::<sep::PointSet>(r#"{"points":[[0,0],[0.2,0]]}"#).is_err());
}
