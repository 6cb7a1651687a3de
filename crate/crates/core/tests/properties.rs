mod common;

use proptest::prelude::*;

use orbcoh::cohomology::{cross_r_compare, duality_report, OrbCohomology};
use orbcoh::exact_math::int;
use orbcoh::groups::GroupSpec;
use orbcoh::presentations::{
    load_document, sphere_quotient_atlas, wps_circle_atlas, Document, EulerOracle, InputFormat,
    MissingPolicy, SectorAtlas, SphereQuotientPresentation, WpsCirclePresentation,
};
use orbcoh::ring::{CohClass, CupResult, OrbRing};

use common::{odd_sphere_betti, sphere_quotient_sectors};

type Presented = (Vec<u64>, Vec<Vec<i64>>, SectorAtlas);

fn sphere_quotient(max_order: u64, max_coords: usize) -> impl Strategy<Value = Presented> {
    (1..=max_coords, prop::collection::vec(2..=max_order, 1..=2))
        .prop_flat_map(|(coords, orders)| {
            let rows: Vec<_> = orders
                .iter()
                .map(|&n| prop::collection::vec(0..n as i64, coords))
                .collect();
            (Just(coords), Just(orders), rows)
        })
        .prop_filter_map("non-effective action", |(coords, orders, rows)| {
            let p = SphereQuotientPresentation::new(
                coords,
                GroupSpec::new(orders.clone()).ok()?,
                rows.clone(),
            )
            .ok()?;
            Some((orders, rows, sphere_quotient_atlas(&p).ok()?))
        })
}

fn weighted() -> impl Strategy<Value = SectorAtlas> {
    prop::collection::vec(1u64..=4, 2..=4).prop_filter_map("shared factor", |w| {
        wps_circle_atlas(&WpsCirclePresentation::new(w).ok()?).ok()
    })
}

fn any_atlas() -> impl Strategy<Value = SectorAtlas> {
    prop_oneof![sphere_quotient(6, 3).prop_map(|(_, _, a)| a), weighted()]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn duality_holds(atlas in any_atlas()) {
        let report = duality_report(&atlas).unwrap();
        prop_assert!(report.passed());
        let top = int(atlas.ambient_dim() as i64);
        prop_assert!(OrbCohomology::assemble(&atlas).total.is_symmetric_about(&top));
    }

    #[test]
    fn cross_r_holds(atlas in any_atlas()) {
        prop_assert!(cross_r_compare(&atlas).unwrap().passed());
    }

    #[test]
    fn raw_round_trip_is_lossless(atlas in any_atlas(), json in any::<bool>()) {
        let format = if json { InputFormat::Json } else { InputFormat::Toml };
        let text = Document::raw_from_atlas(&atlas).to_text(format);
        let back = load_document(&text, format).unwrap().to_atlas().unwrap();
        prop_assert_eq!(back, atlas);
    }

    #[test]
    fn total_dimension_matches_reference((orders, rows, atlas) in sphere_quotient(8, 4)) {
        // every sector of a sphere quotient is an odd sphere
        let expected: u64 = sphere_quotient_sectors(&orders, &rows)
            .iter()
            .map(|s| odd_sphere_betti(2 * s.fixed as i64 - 1).iter().map(|p| p.1).sum::<u64>())
            .sum();
        prop_assert_eq!(OrbCohomology::assemble(&atlas).total.total_dim(), expected);
    }

    #[test]
    fn three_point_is_cyclic(atlas in any_atlas(), picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let mut oracle = EulerOracle::empty();
        oracle.missing = MissingPolicy::Zero;
        let ring = OrbRing::new(&atlas, &oracle).unwrap();
        let n = ring.cohomology().len();
        let [a, b, c] = [0, 1, 2].map(|i| CohClass::basis(picks[i].index(n)));
        let abc = ring.three_point([&a, &b, &c]).unwrap().value();
        let bca = ring.three_point([&b, &c, &a]).unwrap().value();
        let cab = ring.three_point([&c, &a, &b]).unwrap().value();
        prop_assert_eq!(&abc, &bca);
        prop_assert_eq!(&abc, &cab);
    }

    #[test]
    fn pairing_is_symmetric(atlas in any_atlas(), picks in prop::collection::vec(any::<prop::sample::Index>(), 2)) {
        let ring = OrbRing::new(&atlas, &EulerOracle::empty()).unwrap();
        let n = ring.cohomology().len();
        let a = CohClass::basis(picks[0].index(n));
        let b = CohClass::basis(picks[1].index(n));
        prop_assert_eq!(ring.pairing(&a, &b).unwrap(), ring.pairing(&b, &a).unwrap());
    }

    #[test]
    fn unit_acts_trivially(atlas in any_atlas(), pick in any::<prop::sample::Index>()) {
        let ring = OrbRing::new(&atlas, &EulerOracle::empty()).unwrap();
        let unit = CohClass::basis(ring.unit());
        let x = CohClass::basis(pick.index(ring.cohomology().len()));
        match ring.cup(&unit, &x).unwrap() {
            CupResult::Class(c) => prop_assert_eq!(c, x),
            other => prop_assert!(false, "unit product undetermined: {:?}", other),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn small_sphere_quotient_rings_are_associative((_, _, atlas) in sphere_quotient(4, 2)) {
        let ring = OrbRing::new(&atlas, &EulerOracle::empty()).unwrap();
        let table = ring.structure_constants().unwrap();
        let report = table.associativity_check();
        prop_assert!(report.passed(), "{:?}", report.violations);
        prop_assert!(table.unit_law_failures(ring.unit()).is_empty());
        prop_assert!(table.degree_additivity_failures().is_empty());
    }
}
