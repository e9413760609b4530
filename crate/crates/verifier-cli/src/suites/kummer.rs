//! The kummer-surjectivity, hom-tables and decomposition suites.

use serde_json::json;

use curve_cohomology::{picard_p_torsion, CurveParams};
use log_kummer::{
    hom_group_schemes, mu_p_decomposition_check, r1_sections, surjectivity_certificate,
    FiniteGroupSchemeTag,
};

use crate::config::SuiteConfig;
use crate::report::CaseRecord;
use crate::suites::capture;

pub fn surjectivity_cases(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let mut out = Vec::new();
    for &p in &cfg.primes {
        // one case per surjection index (i, j); the obstruction class is
        // independent of the level, which is itself asserted across n
        let max_n = cfg.max_n.max(1);
        for i in 0..p {
            for j in 0..p {
                if (i, j) == (0, 0) {
                    continue;
                }
                out.push(capture(
                    &format!("surjectivity/p{p}-i{i}-j{j}"),
                    "the surjection indexed (i, j) sends the boundary pair to a class that is not a p-th power, at every level",
                    json!({ "p": p, "i": i, "j": j, "levels": max_n }),
                    || {
                        let mut ok = true;
                        let mut orders = json!(null);
                        for n in 1..=max_n {
                            let c = surjectivity_certificate(p, n).map_err(|e| e.to_string())?;
                            let case = c
                                .cases
                                .iter()
                                .find(|c| c.i == i && c.j == j)
                                .expect("index pair is enumerated");
                            ok &= !case.is_pth_power;
                            orders = json!(case.class.boundary_orders());
                        }
                        Ok((
                            json!({
                                "check": "surjectivity-certificate",
                                "p": p,
                                "n": max_n,
                                "boundary_orders": orders,
                                "pass": ok,
                            }),
                            ok,
                        ))
                    },
                ));
            }
        }
    }
    out
}

pub fn hom_table_cases(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let mut out = Vec::new();
    for &p in &cfg.primes {
        out.push(capture(
            &format!("hom/mu-mu-p{p}"),
            "Hom(μ_p, μ_p) has order p, found by exhaustive Hopf search",
            json!({ "p": p }),
            || {
                let mu = FiniteGroupSchemeTag::mu(1, p);
                let h = hom_group_schemes(&mu, &mu).map_err(|e| e.to_string())?;
                Ok((
                    json!({
                        "check": "hom-mu-mu",
                        "p": p,
                        "order": h.order,
                        "group_invariant_factors": h.invariant_factors,
                        "generators": h.element_descriptions,
                    }),
                    h.order == p as u64,
                ))
            },
        ));
        out.push(capture(
            &format!("hom/mu-alpha-p{p}"),
            "Hom(μ_p, α_p) is trivial",
            json!({ "p": p }),
            || {
                let h = hom_group_schemes(
                    &FiniteGroupSchemeTag::mu(1, p),
                    &FiniteGroupSchemeTag::alpha_p(p),
                )
                .map_err(|e| e.to_string())?;
                Ok((json!({ "order": h.order }), h.order == 1))
            },
        ));
        out.push(capture(
            &format!("hom/mu-zp-p{p}"),
            "Hom(μ_p, ℤ/p) is trivial",
            json!({ "p": p }),
            || {
                let h = hom_group_schemes(
                    &FiniteGroupSchemeTag::mu(1, p),
                    &FiniteGroupSchemeTag::z_mod_p(p),
                )
                .map_err(|e| e.to_string())?;
                Ok((json!({ "order": h.order }), h.order == 1))
            },
        ));
        out.push(capture(
            &format!("hom/mu-tower-p{p}"),
            "Hom(μ_{p^m}, μ_p) has order p for m = 1, 2 (stabilization of the level tower)",
            json!({ "p": p }),
            || {
                let dst = FiniteGroupSchemeTag::mu(1, p);
                let h1 = hom_group_schemes(&FiniteGroupSchemeTag::mu(1, p), &dst)
                    .map_err(|e| e.to_string())?;
                let h2 = hom_group_schemes(&FiniteGroupSchemeTag::mu(2, p), &dst)
                    .map_err(|e| e.to_string())?;
                Ok((
                    json!({ "level_p": h1.order, "level_p2": h2.order }),
                    h1.order == p as u64 && h2.order == p as u64,
                ))
            },
        ));
        out.push(capture(
            &format!("r1/mu-p{p}"),
            "boundary sections for μ_p over three boundary points form (ℤ/p)³",
            json!({ "p": p, "boundary_points": 3 }),
            || {
                let r = r1_sections(&FiniteGroupSchemeTag::mu(1, p), 3)
                    .map_err(|e| e.to_string())?;
                Ok((
                    json!({
                        "check": "r1-sections-mu",
                        "p": p,
                        "group_invariant_factors": r.invariant_factors,
                        "stabilization": r.stabilization_checked,
                    }),
                    r.invariant_factors == vec![p as u64; 3]
                        && r.stabilization_checked == Some(true),
                ))
            },
        ));
        out.push(capture(
            &format!("r1/alpha-p{p}"),
            "boundary sections vanish for α_p",
            json!({ "p": p }),
            || {
                let r = r1_sections(&FiniteGroupSchemeTag::alpha_p(p), 3)
                    .map_err(|e| e.to_string())?;
                Ok((json!({ "factors": r.invariant_factors }), r.invariant_factors.is_empty()))
            },
        ));
        out.push(capture(
            &format!("r1/zp-p{p}"),
            "boundary sections vanish for ℤ/p",
            json!({ "p": p }),
            || {
                let r = r1_sections(&FiniteGroupSchemeTag::z_mod_p(p), 3)
                    .map_err(|e| e.to_string())?;
                Ok((json!({ "factors": r.invariant_factors }), r.invariant_factors.is_empty()))
            },
        ));
    }
    out
}

pub fn decomposition_cases(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let mut out = Vec::new();
    for &p in &cfg.primes {
        let qs = cfg.field_sizes_for(p);
        let q0 = qs.first().copied().unwrap_or(p);
        out.push(capture(
            &format!("decomposition/base-p{p}"),
            "the reduced curve has a rank-2 purely logarithmic part and no classical part",
            json!({ "p": p, "q": q0 }),
            || {
                let params = CurveParams::new(p, 0, q0).map_err(|e| e.to_string())?;
                let r = mu_p_decomposition_check(&params).map_err(|e| e.to_string())?;
                Ok((
                    json!({ "assembled_dim": r.assembled_dim, "picard": r.picard_invariant_factors }),
                    r.assembled_dim == 2 && r.pass,
                ))
            },
        ));
        for n in 1..=cfg.max_n {
            for &q in &qs {
                out.push(capture(
                    &format!("decomposition/p{p}-n{n}-q{q}"),
                    "the assembled dimension is the Picard p-kernel plus the rank-2 log part",
                    json!({ "p": p, "n": n, "q": q }),
                    || {
                        let params = CurveParams::new(p, n, q).map_err(|e| e.to_string())?;
                        let r = mu_p_decomposition_check(&params).map_err(|e| e.to_string())?;
                        let pic = picard_p_torsion(&params).map_err(|e| e.to_string())?;
                        let ok = r.pass
                            && r.assembled_dim == pic.len() + 2
                            && r.kummer_kernel_ok;
                        Ok((
                            json!({
                                "check": "mu-p-decomposition",
                                "p": p,
                                "n": n,
                                "q": q,
                                "group_invariant_factors": pic,
                                "assembled_dim": r.assembled_dim,
                                "pass": ok,
                            }),
                            ok,
                        ))
                    },
                ));
            }
        }
    }
    // the single-thickening case over F₂ is classically trivial
    out.push(capture(
        "decomposition/first-thickening-p2",
        "the double line over F₂ has trivial Picard p-torsion",
        json!({ "p": 2, "n": 1 }),
        || {
            let params = CurveParams::new(2, 1, 2).map_err(|e| e.to_string())?;
            let pic = picard_p_torsion(&params).map_err(|e| e.to_string())?;
            Ok((json!({ "factors": pic }), pic.is_empty()))
        },
    ));
    out
}
