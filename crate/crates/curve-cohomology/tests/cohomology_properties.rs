//! Cross-model and randomized properties of the cohomology engine.

use curve_cohomology::cech::{
    cech_torus_matrix, frobenius_apply_over_r, r_mat_vec, transported_torus_matrix,
};
use curve_cohomology::groupring::GrElem;
use curve_cohomology::{
    cech_h1_thickened, fixed_classes, frobenius_operator, monomial_h1_basis,
    semilinear_kernel_dim, torus_action, truncated_exp, truncated_log, CurveParams,
};
use proptest::prelude::*;

#[test]
fn dimensions_agree_in_both_models() {
    for (p, n, q) in [
        (2u32, 1u32, 2u32),
        (2, 2, 2),
        (2, 2, 4),
        (3, 1, 3),
        (3, 1, 9),
        (2, 3, 2),
        (3, 2, 3),
    ] {
        let params = CurveParams::new(p, n, q).unwrap();
        let d = params.d() as usize;
        let mono = monomial_h1_basis(&params);
        let cech = cech_h1_thickened(&params, None).unwrap();
        let formula = (d - 1) * (d - 2) / 2;
        assert_eq!(mono.dim(), formula, "monomial ({p},{n},{q})");
        assert_eq!(cech.rank, formula, "cech ({p},{n},{q})");
    }
}

#[test]
fn fixed_classes_vanish_on_the_grid() {
    for (p, n, q) in [(3u32, 1u32, 3u32), (3, 1, 9), (2, 2, 2), (2, 2, 4), (3, 2, 3)] {
        let params = CurveParams::new(p, n, q).unwrap();
        let ring = params.group_ring().unwrap();
        let space = monomial_h1_basis(&params);
        let pairs = vec![(ring.t(), ring.one()), (ring.one(), ring.t())];
        let fixed = fixed_classes(&ring, &space, &pairs).unwrap();
        assert!(fixed.is_empty(), "({p},{n},{q})");
    }
}

#[test]
fn frobenius_kernel_dimensions() {
    // p=2, n=1: zero space
    let params = CurveParams::new(2, 1, 2).unwrap();
    let op = frobenius_operator(&params).unwrap();
    assert_eq!(semilinear_kernel_dim(&op, 0), 0);
    assert_eq!(semilinear_kernel_dim(&op, 1), 0);

    // p=3, n=1, q=3: F = 0 on a 1-dimensional space
    let params = CurveParams::new(3, 1, 3).unwrap();
    let op = frobenius_operator(&params).unwrap();
    assert_eq!(semilinear_kernel_dim(&op, 0), 1);
    assert_eq!(semilinear_kernel_dim(&op, 1), 0);

    // p=2, n=2, q=2: kernel dimension 3
    let params = CurveParams::new(2, 2, 2).unwrap();
    let op = frobenius_operator(&params).unwrap();
    assert_eq!(semilinear_kernel_dim(&op, 0), 3);
}

#[test]
fn frobenius_kernel_matches_brute_force_on_f2_cube() {
    // oracle: enumerate all 8 vectors of F₂³ and count the kernel directly
    let params = CurveParams::new(2, 2, 2).unwrap();
    let op = frobenius_operator(&params).unwrap();
    for shift in [0u32, 1] {
        let mut kernel = 0usize;
        for mask in 0..8u16 {
            let v: Vec<u16> = (0..3).map(|i| (mask >> i) & 1).collect();
            let mut image = op.apply(&v);
            if shift == 1 {
                for (w, x) in image.iter_mut().zip(&v) {
                    *w = op.fq.sub(*w, *x);
                }
            }
            if image.iter().all(|x| *x == 0) {
                kernel += 1;
            }
        }
        let dim = kernel.trailing_zeros() as usize; // kernel = 2^dim
        assert_eq!(dim, semilinear_kernel_dim(&op, shift), "shift {shift}");
    }
}

fn root_of_unity(params: &CurveParams, seed: &[u16]) -> GrElem {
    // 1 + (t−1)·r is always a d-th root of unity in characteristic p
    let gr = params.group_ring().unwrap();
    let d = params.d() as usize;
    let r = GrElem { c: (0..d).map(|i| seed.get(i).copied().unwrap_or(0) % params.q as u16).collect() };
    let t_minus_1 = gr.sub(&gr.t(), &gr.one());
    let a = gr.add(&gr.one(), &gr.mul(&t_minus_1, &r));
    assert!(gr.is_root_of_unity(&a));
    a
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn torus_action_composition_law(seed_a in proptest::collection::vec(0u16..4, 4),
                                    seed_b in proptest::collection::vec(0u16..4, 4),
                                    seed_c in proptest::collection::vec(0u16..4, 4),
                                    seed_d in proptest::collection::vec(0u16..4, 4)) {
        let params = CurveParams::new(2, 2, 4).unwrap();
        let gr = params.group_ring().unwrap();
        let space = monomial_h1_basis(&params);
        let a = root_of_unity(&params, &seed_a);
        let b = root_of_unity(&params, &seed_b);
        let c = root_of_unity(&params, &seed_c);
        let d = root_of_unity(&params, &seed_d);
        let h_ab = torus_action(&gr, &space, &a, &b).unwrap();
        let h_cd = torus_action(&gr, &space, &c, &d).unwrap();
        let lhs = h_ab.compose(&gr, &h_cd);
        let rhs = torus_action(&gr, &space, &gr.mul(&a, &c), &gr.mul(&b, &d)).unwrap();
        prop_assert_eq!(lhs, rhs);
        // invertibility: composing with (a⁻¹, b⁻¹) gives the identity
        let inv = torus_action(&gr, &space, &gr.root_inv(&a).unwrap(), &gr.root_inv(&b).unwrap()).unwrap();
        let id = torus_action(&gr, &space, &gr.one(), &gr.one()).unwrap();
        prop_assert_eq!(h_ab.compose(&gr, &inv), id);
    }

    #[test]
    fn frobenius_is_semilinear(coeff in 0u16..9, vec_seed in proptest::collection::vec(0u16..9, 28)) {
        let params = CurveParams::new(3, 2, 9).unwrap();
        let op = frobenius_operator(&params).unwrap();
        let f = &op.fq;
        let v: Vec<u16> = vec_seed.iter().take(op.dim).map(|x| x % f.q as u16).collect();
        let c = coeff % f.q as u16;
        let cv: Vec<u16> = v.iter().map(|x| f.mul(c, *x)).collect();
        let lhs = op.apply(&cv);
        let rhs: Vec<u16> = op.apply(&v).iter().map(|x| f.mul(f.frob(c), *x)).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn frobenius_commutes_with_the_transported_torus_action(
        seed_a in proptest::collection::vec(0u16..4, 4),
        seed_b in proptest::collection::vec(0u16..4, 4),
        which in 0usize..2,
    ) {
        // F ∘ h_{(a,b)} = h_{(a^p, b^p)} ∘ F on the Čech model, the torus
        // action transported from the monomial model through the basis
        // change
        let params = if which == 0 {
            CurveParams::new(2, 2, 2).unwrap()
        } else {
            CurveParams::new(3, 1, 3).unwrap()
        };
        let gr = params.group_ring().unwrap();
        let a = root_of_unity(&params, &seed_a);
        let b = root_of_unity(&params, &seed_b);
        let op = frobenius_operator(&params).unwrap();
        let h = transported_torus_matrix(&params, &a, &b).unwrap();
        let hp = transported_torus_matrix(
            &params,
            &gr.pow(&a, params.p as u64),
            &gr.pow(&b, params.p as u64),
        )
        .unwrap();
        // check on every basis vector
        for j in 0..op.dim {
            let mut e = vec![gr.zero(); op.dim];
            e[j] = gr.one();
            let lhs = frobenius_apply_over_r(&gr, &op, &r_mat_vec(&gr, &h, &e));
            let rhs = r_mat_vec(&gr, &hp, &frobenius_apply_over_r(&gr, &op, &e));
            prop_assert_eq!(lhs, rhs, "basis vector {}", j);
        }
    }

    #[test]
    fn substitution_action_equals_transport_on_random_roots(
        seed_a in proptest::collection::vec(0u16..4, 4),
        seed_b in proptest::collection::vec(0u16..4, 4),
    ) {
        let params = CurveParams::new(2, 2, 2).unwrap();
        let a = root_of_unity(&params, &seed_a);
        let b = root_of_unity(&params, &seed_b);
        let subst = cech_torus_matrix(&params, &a, &b).unwrap();
        let transported = transported_torus_matrix(&params, &a, &b).unwrap();
        prop_assert_eq!(subst, transported);
    }

    #[test]
    fn exp_log_laws_on_nilpotents(px in 0usize..3, coeffs in proptest::collection::vec((0u16..5, -2i64..=2), 6)) {
        let p = [2u32, 3, 5][px];
        let params = CurveParams::new(p, 1, p).unwrap();
        let ring = params.truncated_ring().unwrap();
        let d = params.d();
        // elements of the ideal (ε^{⌈d/p⌉}) have vanishing p-th power; at
        // n = 1 every positive ε-degree qualifies
        let lo = d.div_ceil(p);
        let build = |chunk: &[(u16, i64)]| {
            let mut x = ring.zero();
            for (k, &(c, m)) in chunk.iter().enumerate() {
                let i = lo + (k as u32 % (d - lo).max(1));
                x = ring.add(&x, &ring.monomial(m, i, c % params.q as u16));
            }
            x
        };
        let x = build(&coeffs[..3]);
        let y = build(&coeffs[3..]);
        let ex = truncated_exp(&ring, &x).unwrap();
        let ey = truncated_exp(&ring, &y).unwrap();
        // homomorphism
        let exy = truncated_exp(&ring, &ring.add(&x, &y)).unwrap();
        prop_assert_eq!(&ring.mul(&ex, &ey), &exy);
        // two-sided inversion
        prop_assert_eq!(truncated_log(&ring, &ex).unwrap(), x);
        prop_assert_eq!(truncated_exp(&ring, &truncated_log(&ring, &ex).unwrap()).unwrap(), ex);
    }
}
