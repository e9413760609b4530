//! Randomized checks of the chart-level lemmas.

use log_charts::{build_kummer_cover, verify_strictness_criterion, verify_torsor_selfproduct, ChartTriple};
use monoid_core::{AbelianGroupZ, AffineMonoidZ, Caps, MonoidMapZ};
use proptest::prelude::*;

fn caps() -> Caps {
    Caps::default()
}

#[test]
fn torsor_selfproduct_torsion_factors_frozen() {
    // Frozen oracle: the relation lattice of the self-amalgamation over ℕ²
    // is spanned by d·(e1−e3) and d·(e2−e4) in ℤ⁴; its Smith form is
    // diag(d, d), so the torsion must be [d, d].
    for (p, n, d) in [(2u32, 1u32, 2i64), (2, 2, 4), (3, 1, 3), (3, 2, 9)] {
        let v = verify_torsor_selfproduct::<i64>(p, n, &caps()).unwrap();
        assert!(v.result, "({p},{n}) expected torsion [{d},{d}]: {v:?}");
    }
}

fn random_sharp_saturated() -> impl Strategy<Value = AffineMonoidZ> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(dim, count)| {
        proptest::collection::vec(proptest::collection::vec(0i64..=2, dim), count).prop_map(
            move |gens| {
                let m = AffineMonoidZ::new(AbelianGroupZ::free(dim), gens).unwrap();
                m.saturate(&Caps::default()).unwrap().sharpen()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // the root-cover configuration always passes the strictness criterion
    #[test]
    fn root_cover_chart_is_strict(p in random_sharp_saturated(), n in 1u32..=4) {
        let caps = caps();
        let chart = {
            let id = MonoidMapZ::identity(&p, &caps).unwrap();
            ChartTriple::new(id, 2).unwrap()
        };
        let (cover, verdict) = build_kummer_cover(&chart, n, &caps).unwrap();
        prop_assert!(verdict.result);
        let leg = cover.chart_map.clone();
        let v = verify_strictness_criterion(&leg, &leg, &caps).unwrap();
        prop_assert!(v.result, "strictness failed for {:?}: {:?}", p, v);
    }
}
