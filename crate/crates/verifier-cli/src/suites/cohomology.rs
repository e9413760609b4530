//! The cohomology-fixedpoints suite: dimension agreement between the two
//! models, torus fixed-point vanishing, operator laws, truncated exp/log
//! identities and Frobenius kernels over the configured grid.

use rand::Rng;
use serde_json::json;

use curve_cohomology::cech::{
    cech_torus_matrix, frobenius_apply_over_r, r_mat_vec, transported_torus_matrix,
};
use curve_cohomology::groupring::GrElem;
use curve_cohomology::{
    cech_h1_thickened, fixed_classes, frobenius_operator, monomial_h1_basis,
    semilinear_kernel_dim, torus_action, truncated_exp, truncated_log, CurveError, CurveParams,
};

use crate::config::SuiteConfig;
use crate::report::CaseRecord;
use crate::suites::{capture, property_rng};

fn grid(cfg: &SuiteConfig) -> Vec<CurveParams> {
    let mut out = Vec::new();
    for &p in &cfg.primes {
        for n in 1..=cfg.max_n {
            for q in cfg.field_sizes_for(p) {
                if let Ok(params) = CurveParams::new(p, n, q) {
                    out.push(params);
                }
            }
        }
    }
    out
}

fn map_err(e: CurveError) -> String {
    match e {
        CurveError::ResourceCap(m) => format!("resource cap exceeded: {m}"),
        other => other.to_string(),
    }
}

fn random_root(rng: &mut rand_chacha::ChaCha8Rng, params: &CurveParams) -> GrElem {
    let gr = params.group_ring().expect("valid params");
    let d = params.d() as usize;
    let r = GrElem {
        c: (0..d).map(|_| rng.gen_range(0..params.q) as u16).collect(),
    };
    let tm1 = gr.sub(&gr.t(), &gr.one());
    gr.add(&gr.one(), &gr.mul(&tm1, &r))
}

pub fn cases(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let mut out = Vec::new();
    let grid = grid(cfg);

    for params in &grid {
        let (p, n, q) = (params.p, params.n, params.q);
        let d = params.d();
        out.push(capture(
            &format!("dim/p{p}-n{n}-q{q}"),
            "dim H¹ equals (p^n−1)(p^n−2)/2 in the monomial and the two-chart model",
            json!({ "p": p, "n": n, "q": q }),
            || {
                let mono = monomial_h1_basis(params);
                let cech =
                    cech_h1_thickened(params, cfg.caps.degree_window).map_err(map_err)?;
                let formula = ((d - 1) * (d - 2) / 2) as usize;
                let ok = mono.dim() == formula && cech.rank == formula;
                Ok((
                    json!({
                        "monomial": mono.dim(),
                        "cech": cech.rank,
                        "formula": formula,
                        "window": cech.window,
                    }),
                    ok,
                ))
            },
        ));

        if d >= 3 {
            out.push(capture(
                &format!("fixed/p{p}-n{n}-q{q}"),
                "the torus pairs (t,1) and (1,t) fix no nonzero class",
                json!({ "p": p, "n": n, "q": q }),
                || {
                    let gr = params.group_ring().map_err(map_err)?;
                    let space = monomial_h1_basis(params);
                    let pairs = vec![(gr.t(), gr.one()), (gr.one(), gr.t())];
                    let fixed = fixed_classes(&gr, &space, &pairs).map_err(map_err)?;
                    Ok((json!({ "fixed_dim": fixed.len() }), fixed.is_empty()))
                },
            ));
        }

        // the per-case record with every computed dimension for this curve
        out.push(capture(
            &format!("record/p{p}-n{n}-q{q}"),
            "per-curve record: H¹ dimension, Frobenius and Artin–Schreier kernels, fixed classes, Picard torsion",
            json!({ "p": p, "n": n, "q": q }),
            || {
                let op = frobenius_operator(params).map_err(map_err)?;
                let k0 = semilinear_kernel_dim(&op, 0);
                let k1 = semilinear_kernel_dim(&op, 1);
                let e = params.e() as usize;
                let gr = params.group_ring().map_err(map_err)?;
                let space = monomial_h1_basis(params);
                let fixed =
                    fixed_classes(&gr, &space, &[(gr.t(), gr.one()), (gr.one(), gr.t())])
                        .map_err(map_err)?;
                let pic = curve_cohomology::picard_p_torsion(params).map_err(map_err)?;
                // sanity: kernels bounded by the full space
                let ok = k0 <= op.dim * e && k1 <= op.dim * e;
                Ok((
                    json!({
                        "p": p,
                        "n": n,
                        "q": q,
                        "dim_h1": op.dim,
                        "dim_ker_F": k0,
                        "dim_ker_F_minus_1": k1,
                        "fixed_dim": fixed.len(),
                        "pic_p_torsion_factors": pic,
                    }),
                    ok,
                ))
            },
        ));
    }

    // frozen kernel values on the smallest curves
    out.push(capture(
        "frobenius-kernels/frozen",
        "kernel dimensions match the worked values: 0 at p^n=2, (1,0) at (3,1,3), (3,·) at (2,2,2)",
        json!({}),
        || {
            let p21 = CurveParams::new(2, 1, 2).map_err(map_err)?;
            let op = frobenius_operator(&p21).map_err(map_err)?;
            let a = semilinear_kernel_dim(&op, 0) == 0 && semilinear_kernel_dim(&op, 1) == 0;
            let p31 = CurveParams::new(3, 1, 3).map_err(map_err)?;
            let op = frobenius_operator(&p31).map_err(map_err)?;
            let b = semilinear_kernel_dim(&op, 0) == 1 && semilinear_kernel_dim(&op, 1) == 0;
            let p22 = CurveParams::new(2, 2, 2).map_err(map_err)?;
            let op = frobenius_operator(&p22).map_err(map_err)?;
            let c = semilinear_kernel_dim(&op, 0) == 3;
            Ok((json!({ "p21": a, "p31": b, "p22": c }), a && b && c))
        },
    ));

    // torus action laws, randomized on the largest small case
    let n_cases = cfg.caps.random_cases;
    let mut rng = property_rng(cfg, 0xc0de);
    out.push(capture(
        "property/torus-composition",
        "h_{(a,b)} ∘ h_{(c,d)} = h_{(ac,bd)} and inverses act by inverse pairs",
        json!({ "cases": n_cases }),
        || {
            let params = CurveParams::new(2, 2, 4).map_err(map_err)?;
            let gr = params.group_ring().map_err(map_err)?;
            let space = monomial_h1_basis(&params);
            let mut failures = 0;
            for _ in 0..n_cases {
                let a = random_root(&mut rng, &params);
                let b = random_root(&mut rng, &params);
                let c = random_root(&mut rng, &params);
                let dd = random_root(&mut rng, &params);
                let h1 = torus_action(&gr, &space, &a, &b).map_err(map_err)?;
                let h2 = torus_action(&gr, &space, &c, &dd).map_err(map_err)?;
                let lhs = h1.compose(&gr, &h2);
                let rhs = torus_action(&gr, &space, &gr.mul(&a, &c), &gr.mul(&b, &dd))
                    .map_err(map_err)?;
                if lhs != rhs {
                    failures += 1;
                    continue;
                }
                let inv = torus_action(
                    &gr,
                    &space,
                    &gr.root_inv(&a).map_err(map_err)?,
                    &gr.root_inv(&b).map_err(map_err)?,
                )
                .map_err(map_err)?;
                let id = torus_action(&gr, &space, &gr.one(), &gr.one()).map_err(map_err)?;
                if h1.compose(&gr, &inv) != id {
                    failures += 1;
                }
            }
            Ok((json!({ "failures": failures }), failures == 0))
        },
    ));

    let mut rng = property_rng(cfg, 0xf20b);
    out.push(capture(
        "property/frobenius-semilinear",
        "F(c·v) = c^p·F(v) on the two-chart model over F_9",
        json!({ "cases": n_cases }),
        || {
            let params = CurveParams::new(3, 2, 9).map_err(map_err)?;
            let op = frobenius_operator(&params).map_err(map_err)?;
            let f = &op.fq;
            let mut failures = 0;
            for _ in 0..n_cases {
                let c = rng.gen_range(0..f.q) as u16;
                let v: Vec<u16> = (0..op.dim).map(|_| rng.gen_range(0..f.q) as u16).collect();
                let cv: Vec<u16> = v.iter().map(|x| f.mul(c, *x)).collect();
                let lhs = op.apply(&cv);
                let rhs: Vec<u16> =
                    op.apply(&v).iter().map(|x| f.mul(f.frob(c), *x)).collect();
                if lhs != rhs {
                    failures += 1;
                }
            }
            Ok((json!({ "failures": failures }), failures == 0))
        },
    ));

    let mut rng = property_rng(cfg, 0xe9b1);
    out.push(capture(
        "property/frobenius-torus-equivariance",
        "F ∘ h_{(a,b)} = h_{(a^p,b^p)} ∘ F through the basis change, and the transported action is the substitution action",
        json!({ "cases": n_cases.min(64) }),
        || {
            let mut failures = 0;
            for (p, n) in [(2u32, 2u32), (3, 1)] {
                let params = CurveParams::new(p, n, p).map_err(map_err)?;
                let gr = params.group_ring().map_err(map_err)?;
                let op = frobenius_operator(&params).map_err(map_err)?;
                for _ in 0..n_cases.min(64) {
                    let a = random_root(&mut rng, &params);
                    let b = random_root(&mut rng, &params);
                    let h = transported_torus_matrix(&params, &a, &b).map_err(map_err)?;
                    let subst = cech_torus_matrix(&params, &a, &b).map_err(map_err)?;
                    if h != subst {
                        failures += 1;
                        continue;
                    }
                    let hp = transported_torus_matrix(
                        &params,
                        &gr.pow(&a, p as u64),
                        &gr.pow(&b, p as u64),
                    )
                    .map_err(map_err)?;
                    for j in 0..op.dim {
                        let mut e = vec![gr.zero(); op.dim];
                        e[j] = gr.one();
                        let lhs = frobenius_apply_over_r(&gr, &op, &r_mat_vec(&gr, &h, &e));
                        let rhs = r_mat_vec(&gr, &hp, &frobenius_apply_over_r(&gr, &op, &e));
                        if lhs != rhs {
                            failures += 1;
                            break;
                        }
                    }
                }
            }
            Ok((json!({ "failures": failures }), failures == 0))
        },
    ));

    // truncated exp/log laws per configured prime
    for &p in &cfg.primes {
        let mut rng = property_rng(cfg, 0xe070 + p as u64);
        out.push(capture(
            &format!("property/exp-log-p{p}"),
            "truncated exp is a homomorphism on the p-th-power-zero ideal and inverts the truncated log both ways",
            json!({ "p": p, "cases": n_cases }),
            || {
                let params = CurveParams::new(p, 1, p).map_err(map_err)?;
                let ring = params.truncated_ring().map_err(map_err)?;
                let d = params.d();
                let lo = d.div_ceil(p);
                let mut failures = 0;
                for _ in 0..n_cases {
                    let draw = |rng: &mut rand_chacha::ChaCha8Rng| {
                        let mut x = ring.zero();
                        for _ in 0..3 {
                            let i = rng.gen_range(lo..d.max(lo + 1));
                            let m = rng.gen_range(-2..=2i64);
                            let c = rng.gen_range(0..p) as u16;
                            x = ring.add(&x, &ring.monomial(m, i, c));
                        }
                        x
                    };
                    let x = draw(&mut rng);
                    let y = draw(&mut rng);
                    let ex = truncated_exp(&ring, &x).map_err(map_err)?;
                    let ey = truncated_exp(&ring, &y).map_err(map_err)?;
                    let exy = truncated_exp(&ring, &ring.add(&x, &y)).map_err(map_err)?;
                    if ring.mul(&ex, &ey) != exy {
                        failures += 1;
                        continue;
                    }
                    if truncated_log(&ring, &ex).map_err(map_err)? != x {
                        failures += 1;
                        continue;
                    }
                    let back = truncated_exp(&ring, &truncated_log(&ring, &ex).map_err(map_err)?)
                        .map_err(map_err)?;
                    if back != ex {
                        failures += 1;
                    }
                }
                Ok((json!({ "failures": failures }), failures == 0))
            },
        ));
    }

    out
}
