//! The torsion part of the Picard group of the thickened line.
//!
//! A line bundle trivial on the reduction and on both charts is a unit
//! cocycle `u = 1 + w` on the overlap, `w` of positive ε-degree. Stripping
//! the parts restricted from either chart level by level in the
//! ε-filtration leaves a unique canonical representative supported on the
//! middle monomials, so the torsion subgroup `T_n = ker(Pic(X_n) → Pic(X_0))`
//! is carried by the same middle basis as `H¹(X_n, O)`. The thickening
//! steps `X_{k-1} ⊂ X_k` cut this filtration into blocks whose ideal
//! squares to zero in each step ring, where the truncated exponential
//! identifies the additive block `H¹` with the multiplicative classes.
//!
//! Multiplication by `p` acts on canonical representatives by
//! `(1+w)^p = 1 + w^p` — exactly the monomial `p`-power map — so the
//! invariant factors fall out of exact prime-field kernel ranks.

use crate::cech::{middle_basis, middle_project};
use crate::error::{CurveError, Result};
use crate::fq::{Fq, FqElem};
use crate::semilinear::fp_rank;
use crate::truncated::{TrRing, Truncated};
use crate::CurveParams;

/// Reduce a unit cocycle `u = 1 + w` (`w` of positive ε-degree) to its
/// canonical coefficients on the middle basis of the ring.
pub fn unit_normal_form(ring: &TrRing<Fq>, u: &Truncated<Fq>) -> Result<Vec<FqElem>> {
    let d = ring.eps_order;
    if u.terms.get(&(0, 0)).copied() != Some(1) {
        return Err(CurveError::InvalidParams(
            "unit cocycle must have constant term 1".into(),
        ));
    }
    if u.terms.keys().any(|&(m, i)| i == 0 && m != 0) {
        return Err(CurveError::InvalidParams(
            "unit cocycle must be 1 + (positive ε-degree)".into(),
        ));
    }
    let mut u = u.clone();
    for level in 1..d {
        let mut chart0 = ring.zero();
        let mut chart1 = ring.zero();
        for (&(m, i), v) in &u.terms {
            if i != level {
                continue;
            }
            if m >= 0 {
                chart0 = ring.add(&chart0, &ring.monomial(m, i, *v));
            } else if m <= -(i as i64) {
                chart1 = ring.add(&chart1, &ring.monomial(m, i, *v));
            }
        }
        if !chart0.is_zero() {
            u = ring.mul(&u, &ring.neumann_inverse_of_one_plus(&chart0));
        }
        if !chart1.is_zero() {
            u = ring.mul(&u, &ring.neumann_inverse_of_one_plus(&chart1));
        }
    }
    let w = ring.sub(&u, &ring.one());
    debug_assert!(
        w.terms.keys().all(|&(m, i)| i >= 1 && m < 0 && m > -(i as i64)),
        "reduction must leave only middle terms"
    );
    Ok(middle_project(ring, &middle_basis(d), &w))
}

/// Rebuild `1 + w` from canonical coefficients.
pub fn unit_from_coeffs(ring: &TrRing<Fq>, coeffs: &[FqElem]) -> Truncated<Fq> {
    let basis = middle_basis(ring.eps_order);
    let mut u = ring.one();
    for (&(m, i), c) in basis.iter().zip(coeffs) {
        u = ring.add(&u, &ring.monomial(m, i, *c));
    }
    u
}

/// The group law on canonical representatives.
pub fn unit_class_mul(
    ring: &TrRing<Fq>,
    a: &[FqElem],
    b: &[FqElem],
) -> Result<Vec<FqElem>> {
    let u = ring.mul(&unit_from_coeffs(ring, a), &unit_from_coeffs(ring, b));
    unit_normal_form(ring, &u)
}

/// Dimensions (over `F_q`) of the thickening-step blocks
/// `ker(T_k → T_{k-1})` for `k = 1..=n`: the middle monomials whose
/// ε-level lies in `[p^{k-1}, p^k)`.
pub fn thickening_step_dims(params: &CurveParams) -> Vec<usize> {
    let p = params.p;
    (1..=params.n)
        .map(|k| {
            let lo = p.pow(k - 1);
            let hi = p.pow(k);
            middle_basis(params.d())
                .iter()
                .filter(|&&(_, i)| i >= lo && i < hi)
                .count()
        })
        .collect()
}

/// Prime-field matrix of multiplication by `p^j` in canonical coordinates:
/// `(1+w)^{p^j} = 1 + w^{p^j}` sends the middle monomial `s^m ε^i` to
/// `s^{p^j m} ε^{p^j i}` (zero once the ε-degree leaves the ring) with the
/// coefficient raised to the `p^j`-th power.
fn mult_by_p_pow_matrix(fq: &Fq, d: u32, j: u32) -> Vec<Vec<u32>> {
    let basis = middle_basis(d);
    let e = fq.e as usize;
    let n = basis.len() * e;
    let pj = (fq.p as u64).pow(j);
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(n);
    for (bidx, &(m, i)) in basis.iter().enumerate() {
        let target = {
            let ti = (i as u64) * pj;
            if ti >= d as u64 {
                None
            } else {
                let tm = m * pj as i64;
                Some(
                    basis
                        .iter()
                        .position(|&(bm, bi)| bm == tm && bi as u64 == ti)
                        .expect("p-th powers of middle monomials stay middle"),
                )
            }
        };
        for k in 0..e {
            let mut col = vec![0u32; n];
            if let Some(t) = target {
                let beta = fq.from_coords(
                    &(0..e).map(|u| if u == k { 1 } else { 0 }).collect::<Vec<_>>(),
                );
                let w = fq.pow(beta, pj);
                for (l, digit) in fq.coords(w).into_iter().enumerate() {
                    col[t * e + l] = digit;
                }
            }
            let _ = bidx;
            cols.push(col);
        }
    }
    (0..n).map(|r| cols.iter().map(|c| c[r]).collect()).collect()
}

/// Invariant factors (ascending divisor chain of `p`-powers) of the torsion
/// subgroup of `Pic(X_n)` over `F_q` — equivalently of
/// `ker(Pic(X_n) → Pic(X_0))`, assembled along the thickening steps.
pub fn picard_p_torsion(params: &CurveParams) -> Result<Vec<u64>> {
    let fq = params.field()?;
    let d = params.d();
    let basis = middle_basis(d);
    let e = fq.e as usize;
    let total = basis.len() * e;
    if total == 0 {
        return Ok(Vec::new());
    }
    // log_p |ker ×p^j| for j = 0, 1, …
    let mut kernel_logs = vec![0usize];
    let mut j = 1;
    loop {
        let mat = mult_by_p_pow_matrix(&fq, d, j);
        let ker = total - fp_rank(fq.p, mat);
        kernel_logs.push(ker);
        if ker == total {
            break;
        }
        j += 1;
        if j > 64 {
            return Err(CurveError::ResourceCap("p-power exponent runaway".into()));
        }
    }
    // #factors with exponent ≥ j, then the multiset of exponents
    let jmax = kernel_logs.len() - 1;
    let ge: Vec<usize> = (1..=jmax).map(|j| kernel_logs[j] - kernel_logs[j - 1]).collect();
    let mut factors = Vec::new();
    for j in (1..=jmax).rev() {
        let count = ge[j - 1] - if j < jmax { ge[j] } else { 0 };
        for _ in 0..count {
            factors.push((params.p as u64).pow(j as u32));
        }
    }
    factors.sort_unstable();
    Ok(factors)
}

/// Brute-force oracle at tiny sizes: enumerate every canonical
/// representative, compute orders with the multiplicative group law, and
/// read off the invariant factors from the kernel sizes of `x ↦ p^j·x`.
pub fn brute_force_picard_invariants(params: &CurveParams) -> Result<Vec<u64>> {
    let fq = params.field()?;
    let ring = params.truncated_ring()?;
    let basis = middle_basis(params.d());
    let dim = basis.len();
    if dim == 0 {
        return Ok(Vec::new());
    }
    let q = fq.q as u64;
    let count = q.checked_pow(dim as u32).filter(|c| *c <= 4096).ok_or_else(|| {
        CurveError::ResourceCap("brute-force group too large".into())
    })?;
    let element = |mut idx: u64| -> Vec<FqElem> {
        let mut v = Vec::with_capacity(dim);
        for _ in 0..dim {
            v.push((idx % q) as FqElem);
            idx /= q;
        }
        v
    };
    let p = params.p as u64;
    let mut kernel_logs = vec![0usize];
    let mut j = 1u32;
    loop {
        let mut ker = 0u64;
        for idx in 0..count {
            let coeffs = element(idx);
            // (1+w)^{p^j} by honest ring exponentiation
            let u = unit_from_coeffs(&ring, &coeffs);
            let powed = ring.pow(&u, p.pow(j));
            let nf = unit_normal_form(&ring, &powed)?;
            if nf.iter().all(|c| *c == 0) {
                ker += 1;
            }
        }
        // ker is a power of q ≤ p^valuation
        let mut log = 0usize;
        let mut t = ker;
        while t > 1 {
            assert_eq!(t % p, 0, "kernel size must be a p-power");
            t /= p;
            log += 1;
        }
        kernel_logs.push(log);
        if ker == count {
            break;
        }
        j += 1;
    }
    let jmax = kernel_logs.len() - 1;
    let ge: Vec<usize> = (1..=jmax).map(|j| kernel_logs[j] - kernel_logs[j - 1]).collect();
    let mut factors = Vec::new();
    for j in (1..=jmax).rev() {
        let count = ge[j - 1] - if j < jmax { ge[j] } else { 0 };
        for _ in 0..count {
            factors.push(p.pow(j as u32));
        }
    }
    factors.sort_unstable();
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explog::truncated_exp;

    #[test]
    fn trivial_for_reduced_and_single_thickening() {
        // n = 0: reduced line
        let p0 = CurveParams::new(2, 0, 2).unwrap();
        assert!(picard_p_torsion(&p0).unwrap().is_empty());
        // p = 2, n = 1: the only step ideal has vanishing H¹
        let p1 = CurveParams::new(2, 1, 2).unwrap();
        assert!(picard_p_torsion(&p1).unwrap().is_empty());
        assert_eq!(thickening_step_dims(&p1), vec![0]);
    }

    #[test]
    fn two_two_two_is_elementary_of_rank_three() {
        let params = CurveParams::new(2, 2, 2).unwrap();
        assert_eq!(picard_p_torsion(&params).unwrap(), vec![2, 2, 2]);
        assert_eq!(thickening_step_dims(&params), vec![0, 3]);
    }

    #[test]
    fn brute_force_agrees_at_desk_scale() {
        for (p, n, q) in [(2, 2, 2), (3, 1, 3), (2, 2, 4), (2, 1, 4)] {
            let params = CurveParams::new(p, n, q).unwrap();
            assert_eq!(
                picard_p_torsion(&params).unwrap(),
                brute_force_picard_invariants(&params).unwrap(),
                "({p},{n},{q})"
            );
        }
    }

    #[test]
    fn deep_thickening_has_a_nonelementary_class() {
        // d = 9 over F₃: one middle monomial survives squaring... cubing:
        // (m,i) = (−1,2) ↦ (−3,6) stays middle, so one factor is 9
        let params = CurveParams::new(3, 2, 3).unwrap();
        let f = picard_p_torsion(&params).unwrap();
        assert_eq!(f.len(), 27);
        assert_eq!(f.iter().filter(|&&x| x == 9).count(), 1);
        assert_eq!(f.iter().filter(|&&x| x == 3).count(), 26);
    }

    #[test]
    fn normal_form_is_the_retraction_onto_middle_terms() {
        let params = CurveParams::new(2, 2, 2).unwrap();
        let ring = params.truncated_ring().unwrap();
        // u = (1 + s²ε)(1 + s⁻¹ε²): the chart-0 part strips away
        let u = ring.mul(
            &ring.add(&ring.one(), &ring.monomial(2, 1, 1)),
            &ring.add(&ring.one(), &ring.monomial(-1, 2, 1)),
        );
        let nf = unit_normal_form(&ring, &u).unwrap();
        // middle basis of d=4: (-1,2), (-2,3), (-1,3)
        assert_eq!(nf.len(), 3);
        assert_eq!(nf[0], 1);
    }

    #[test]
    fn exp_identifies_step_blocks_homomorphically() {
        // step k = 2 of d = 4, p = 2: block levels {2, 3}, block² = 0
        let params = CurveParams::new(2, 2, 2).unwrap();
        let ring = params.truncated_ring().unwrap();
        let x = ring.add(&ring.monomial(-1, 2, 1), &ring.monomial(-2, 3, 1));
        let y = ring.monomial(-1, 3, 1);
        let ex = truncated_exp(&ring, &x).unwrap();
        let ey = truncated_exp(&ring, &y).unwrap();
        let exy = truncated_exp(&ring, &ring.add(&x, &y)).unwrap();
        assert_eq!(ring.mul(&ex, &ey), exy);
        // the multiplicative class of exp(x) has the same block coefficients
        let nf = unit_normal_form(&ring, &ex).unwrap();
        assert_eq!(nf, vec![1, 1, 0]);
    }
}
