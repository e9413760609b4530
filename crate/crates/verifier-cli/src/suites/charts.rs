//! The chart-lemmas and torsor-selfproduct suites.

use rand::Rng;
use serde_json::json;

use log_charts::{
    build_kummer_cover, check_log_smooth_chart, stalk_sharp_pushout, verify_strictness_criterion,
    verify_torsor_selfproduct, ChartTriple,
};
use monoid_core::{monoid_isomorphic, root_monoid, AffineMonoidZ, Mat, MonoidMapZ};

use crate::config::SuiteConfig;
use crate::report::CaseRecord;
use crate::suites::{capture, property_rng, random_sharp_saturated};

pub fn chart_lemma_cases(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let caps = cfg.caps.monoid_caps();
    let norm = cfg.caps.element_norm;
    let mut out = Vec::new();

    for (key, mult, p, want) in [
        ("smooth/coprime", 3i64, 2u32, true),
        ("smooth/divisible", 2, 2, false),
        ("smooth/composite-coprime", 15, 2, true),
    ] {
        out.push(capture(
            &format!("chart/{key}"),
            "a chart is smooth iff kernel and cokernel torsion have order prime to the characteristic",
            json!({ "multiplier": mult, "char": p }),
            || {
                let m = AffineMonoidZ::free(1);
                let f = MonoidMapZ::new(m.clone(), m, Mat::from_rows(&[vec![mult]], 1), &caps)
                    .map_err(|e| e.to_string())?;
                let c = ChartTriple::new(f, p).map_err(|e| e.to_string())?;
                let v = check_log_smooth_chart(&c);
                Ok((
                    json!({ "condition": v.condition, "result": v.result, "witness": v.witness }),
                    v.result == want,
                ))
            },
        ));
    }

    out.push(capture(
        "chart/stalk-root-pushout",
        "the sharpened self-pushout of a root cover is the root monoid again",
        json!({}),
        || {
            let m = AffineMonoidZ::free(1);
            let leg = root_monoid(&m, 3, &caps).map_err(|e| e.to_string())?;
            let s = stalk_sharp_pushout(&leg, &leg, &caps).map_err(|e| e.to_string())?;
            let ok = monoid_isomorphic(&s, &m, &caps).map_err(|e| e.to_string())?.is_isomorphic();
            Ok((json!({ "sharp": s.is_sharp() }), ok && s.is_sharp()))
        },
    ));

    out.push(capture(
        "chart/strictness-mixed-roots",
        "2-divisibility in a degree-4 root makes the strictness criterion pass",
        json!({}),
        || {
            let base = AffineMonoidZ::free(1);
            let leg2 = root_monoid(&base, 2, &caps).map_err(|e| e.to_string())?;
            let leg4 = root_monoid(&base, 4, &caps).map_err(|e| e.to_string())?;
            let v = verify_strictness_criterion(&leg2, &leg4, &caps).map_err(|e| e.to_string())?;
            Ok((json!({ "verdict": v.result, "witness": v.witness }), v.result))
        },
    ));

    out.push(capture(
        "chart/strictness-identity-fails",
        "without divisibility the strictness hypotheses fail with a witness generator",
        json!({}),
        || {
            let base = AffineMonoidZ::free(2);
            let leg = root_monoid(&base, 2, &caps).map_err(|e| e.to_string())?;
            let id = MonoidMapZ::identity(&base, &caps).map_err(|e| e.to_string())?;
            let v = verify_strictness_criterion(&leg, &id, &caps).map_err(|e| e.to_string())?;
            Ok((
                json!({ "condition": v.condition, "result": v.result, "witness": v.witness }),
                !v.result,
            ))
        },
    ));

    // randomized: the root-cover configuration always satisfies the
    // criterion
    let mut rng = property_rng(cfg, 0xc4a7);
    let n_cases = cfg.caps.random_cases;
    out.push(capture(
        "property/root-cover-strictness",
        "building a Kummer cover and checking strictness on its own configuration passes",
        json!({ "cases": n_cases }),
        || {
            let mut failures = 0;
            for _ in 0..n_cases {
                let p = random_sharp_saturated(&mut rng, norm, &caps).map_err(|e| e.to_string())?;
                let n = rng.gen_range(1..=4u32);
                let chart = ChartTriple::new(
                    MonoidMapZ::identity(&p, &caps).map_err(|e| e.to_string())?,
                    2,
                )
                .map_err(|e| e.to_string())?;
                let (cover, verdict) =
                    build_kummer_cover(&chart, n, &caps).map_err(|e| e.to_string())?;
                if !verdict.result {
                    failures += 1;
                    continue;
                }
                let leg = cover.chart_map.clone();
                let v = verify_strictness_criterion(&leg, &leg, &caps).map_err(|e| e.to_string())?;
                if !v.result {
                    failures += 1;
                }
            }
            Ok((json!({ "failures": failures }), failures == 0))
        },
    ));

    out
}

pub fn torsor_cases(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let caps = cfg.caps.monoid_caps();
    let mut out = Vec::new();
    for &p in &cfg.primes {
        for n in 1..=cfg.max_n {
            out.push(capture(
                &format!("torsor/p{p}-n{n}"),
                "the self-amalgamation of ℕ² along multiplication by p^n is ℕ² ⊕ (ℤ/p^n)²",
                json!({ "p": p, "n": n }),
                || {
                    let v = verify_torsor_selfproduct::<i64>(p, n, &caps)
                        .map_err(|e| e.to_string())?;
                    Ok((
                        json!({ "condition": v.condition, "result": v.result, "witness": v.witness }),
                        v.result,
                    ))
                },
            ));
        }
    }
    out
}
