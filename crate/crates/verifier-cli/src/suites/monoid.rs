//! The monoid-properties suite: worked examples of the exact monoid
//! operations plus the randomized algebraic laws.

use rand::Rng;
use serde_json::json;

use monoid_core::{
    monoid_isomorphic, pushout_fs, root_monoid, AffineMonoidZ, KummerVerdict, Mat, MonoidMapZ,
};

use crate::config::SuiteConfig;
use crate::report::CaseRecord;
use crate::suites::{capture, property_rng, random_monoid};

pub fn cases(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let caps = cfg.caps.monoid_caps();
    let norm = cfg.caps.element_norm;
    let n_cases = cfg.caps.random_cases;
    let mut out = Vec::new();

    out.push(capture(
        "examples/groupify",
        "groupification of worked monoids has the expected invariants",
        json!({}),
        || {
            let plane = AffineMonoidZ::free(2).groupify();
            let semi = AffineMonoidZ::numerical(&[2, 3]).groupify();
            let ok = plane.free_rank == 2
                && plane.torsion_factors.is_empty()
                && semi.free_rank == 1
                && semi.torsion_factors.is_empty();
            Ok((json!({ "plane_rank": plane.free_rank, "semigroup_rank": semi.free_rank }), ok))
        },
    ));

    out.push(capture(
        "examples/saturate-semigroup",
        "the numerical semigroup ⟨2,3⟩ saturates to ℕ",
        json!({}),
        || {
            let sat = AffineMonoidZ::numerical(&[2, 3])
                .saturate(&cfg.caps.monoid_caps())
                .map_err(|e| e.to_string())?;
            Ok((json!({ "generators": sat.gens() }), sat.gens() == [vec![1]]))
        },
    ));

    out.push(capture(
        "examples/kummer-root",
        "multiplication by n on ℕ is Kummer of exponent exactly n",
        json!({ "n": 3 }),
        || {
            let f = root_monoid(&AffineMonoidZ::free(1), 3, &caps).map_err(|e| e.to_string())?;
            let v = f.is_kummer(&caps).map_err(|e| e.to_string())?;
            Ok((json!({ "verdict": format!("{v:?}") }), v == KummerVerdict::Kummer { exponent: 3 }))
        },
    ));

    out.push(capture(
        "examples/kummer-diagonal-fails",
        "the diagonal ℕ → ℕ² is not Kummer (a coordinate axis escapes)",
        json!({}),
        || {
            let f = MonoidMapZ::new(
                AffineMonoidZ::free(1),
                AffineMonoidZ::free(2),
                Mat::from_rows(&[vec![1, 1]], 2),
                &caps,
            )
            .map_err(|e| e.to_string())?;
            let v = f.is_kummer(&caps).map_err(|e| e.to_string())?;
            Ok((
                json!({ "verdict": format!("{v:?}") }),
                matches!(v, KummerVerdict::NotKummer { .. }),
            ))
        },
    ));

    // randomized properties
    let mut rng = property_rng(cfg, 0x5a70);
    out.push(capture(
        "property/saturation-idempotent",
        "saturation is idempotent, extensive and fixes the groupification",
        json!({ "cases": n_cases }),
        || {
            let mut failures = 0;
            for _ in 0..n_cases {
                let m = random_monoid(&mut rng, norm, true);
                let sat = m.saturate(&caps).map_err(|e| e.to_string())?;
                if sat.saturate(&caps).map_err(|e| e.to_string())? != sat {
                    failures += 1;
                    continue;
                }
                if m.groupify() != sat.groupify() {
                    failures += 1;
                    continue;
                }
                for g in m.gens() {
                    if !sat.contains(g, &caps).map_err(|e| e.to_string())? {
                        failures += 1;
                        break;
                    }
                }
            }
            Ok((json!({ "failures": failures }), failures == 0))
        },
    ));

    let mut rng = property_rng(cfg, 0x5a71);
    out.push(capture(
        "property/sharpen-idempotent",
        "sharpening is idempotent and leaves a trivial unit group",
        json!({ "cases": n_cases }),
        || {
            let mut failures = 0;
            for _ in 0..n_cases {
                let mut m = random_monoid(&mut rng, norm, true);
                // sprinkle explicit units
                if !m.gens().is_empty() && rng.gen_bool(0.5) {
                    let mut gens = m.gens().to_vec();
                    let g = gens[0].clone();
                    gens.push(g.iter().map(|x| -x).collect());
                    m = AffineMonoidZ::new(m.ambient().clone(), gens).unwrap();
                }
                let sharp = m.sharpen();
                if !sharp.is_sharp() || sharp.sharpen() != sharp {
                    failures += 1;
                }
            }
            Ok((json!({ "failures": failures }), failures == 0))
        },
    ));

    let mut rng = property_rng(cfg, 0x5a72);
    out.push(capture(
        "property/pushout-symmetric",
        "the fine saturated pushout is symmetric up to isomorphism",
        json!({ "cases": n_cases }),
        || {
            let mut failures = 0;
            for _ in 0..n_cases {
                let k = rng.gen_range(1..=2usize);
                let n = rng.gen_range(1..=3u32);
                let q1 = AffineMonoidZ::free(k);
                let left = root_monoid(&q1, n, &caps).map_err(|e| e.to_string())?;
                let q3 = AffineMonoidZ::free(2);
                let rows: Vec<Vec<i64>> = (0..k)
                    .map(|_| (0..2).map(|_| rng.gen_range(0..=2i64)).collect())
                    .collect();
                let right = MonoidMapZ::new(q1.clone(), q3, Mat::from_rows(&rows, 2), &caps)
                    .map_err(|e| e.to_string())?;
                let a = pushout_fs(&left, &right, &caps).map_err(|e| e.to_string())?;
                let b = pushout_fs(&right, &left, &caps).map_err(|e| e.to_string())?;
                if !monoid_isomorphic(&a, &b, &caps).map_err(|e| e.to_string())?.is_isomorphic() {
                    failures += 1;
                }
            }
            Ok((json!({ "failures": failures }), failures == 0))
        },
    ));

    let mut rng = property_rng(cfg, 0x5a73);
    out.push(capture(
        "property/kummer-pushout-collapses",
        "a Kummer leg with divisible third-leg images collapses the sharpened pushout onto the third leg",
        json!({ "cases": n_cases }),
        || {
            let mut failures = 0;
            for _ in 0..n_cases {
                let k = rng.gen_range(1..=2usize);
                let n = rng.gen_range(2..=3u32);
                let q1 = AffineMonoidZ::free(k);
                let left = root_monoid(&q1, n, &caps).map_err(|e| e.to_string())?;
                let q3 = AffineMonoidZ::free(3);
                let rows: Vec<Vec<i64>> = (0..k)
                    .map(|_| (0..3).map(|_| n as i64 * rng.gen_range(0..=2i64)).collect())
                    .collect();
                let right = MonoidMapZ::new(q1.clone(), q3.clone(), Mat::from_rows(&rows, 3), &caps)
                    .map_err(|e| e.to_string())?;
                let push = pushout_fs(&left, &right, &caps).map_err(|e| e.to_string())?;
                let sharp = push.sharpen();
                if !monoid_isomorphic(&sharp, &q3, &caps)
                    .map_err(|e| e.to_string())?
                    .is_isomorphic()
                {
                    failures += 1;
                }
            }
            Ok((json!({ "failures": failures }), failures == 0))
        },
    ));

    let mut rng = property_rng(cfg, 0x5a74);
    out.push(capture(
        "property/root-cover-kummer",
        "degree-n root covers of sharp saturated monoids are Kummer with exponent dividing n",
        json!({ "cases": n_cases }),
        || {
            let mut failures = 0;
            for _ in 0..n_cases {
                let base = crate::suites::random_sharp_saturated(&mut rng, norm, &caps)
                    .map_err(|e| e.to_string())?;
                let n = rng.gen_range(1..=6u32);
                let cover = root_monoid(&base, n, &caps).map_err(|e| e.to_string())?;
                match cover.is_kummer(&caps).map_err(|e| e.to_string())? {
                    KummerVerdict::Kummer { exponent } if n % exponent == 0 => {}
                    _ => failures += 1,
                }
            }
            Ok((json!({ "failures": failures }), failures == 0))
        },
    ));

    out
}
