//! The two-chart Čech model of `H¹(X_n, O)`.
//!
//! The thickened line is covered by two affine charts with coordinates
//! `(s, ε)` and `(s' = 1/s, ε' = ε/s)`; sections on the overlap are Laurent
//! polynomials in `s` truncated at `ε^d`. The Čech `H¹` is the overlap
//! sections modulo restrictions from the two charts. In the monomial
//! coordinates `s^m ε^i` the two restriction images are spanned by the
//! monomials with `m ≥ 0` (first chart) and `m ≤ −i` (second chart), so the
//! quotient has the canonical "middle" basis `{s^m ε^i : −i < m < 0}` and
//! reduction to it is an exact projection.
//!
//! The identification with the monomial model is the residue pairing
//! against the dualizing sections of degree `d − 3`; its matrix has the
//! closed form computed in [`basis_change_matrix`].

use crate::error::{CurveError, Result};
use crate::fq::FqElem;
use crate::groupring::{GrElem, GroupRing};
use crate::monomial::monomial_h1_basis;
use crate::semilinear::{fq_invert, fq_rank, SemilinearOp};
use crate::truncated::{Coefficients, TrRing, Truncated};
use crate::CurveParams;

/// Canonical basis `(m, i)` of the Čech `H¹`, ordered by ε-degree then
/// `s`-degree.
pub fn middle_basis(d: u32) -> Vec<(i64, u32)> {
    let mut out = Vec::new();
    for i in 1..d {
        for m in -(i as i64 - 1)..0 {
            out.push((m, i));
        }
    }
    out.sort_unstable_by_key(|&(m, i)| (i, m));
    out
}

#[derive(Clone, Debug)]
pub struct CechH1 {
    pub params: CurveParams,
    pub basis: Vec<(i64, u32)>,
    pub rank: usize,
    pub window: i64,
}

fn window_rank(params: &CurveParams, w: i64) -> Result<usize> {
    let fq = params.field()?;
    let d = params.d();
    // coordinates of the windowed overlap space
    let mut coords = Vec::new();
    for i in 0..d {
        for m in -w..=w {
            coords.push((m, i));
        }
    }
    let index_of = |m: i64, i: u32| -> usize {
        let row = i as usize;
        let col = (m + w) as usize;
        row * (2 * w as usize + 1) + col
    };
    let total = coords.len();
    // spanning monomials of the two restriction images inside the window
    let mut rows: Vec<Vec<FqElem>> = Vec::new();
    for i in 0..d {
        for a in 0..=w {
            let mut r = vec![0; total];
            r[index_of(a, i)] = 1;
            rows.push(r);
        }
        // second chart: s'^j ε'^i = s^{-j-i} ε^i
        let mut j = 0i64;
        loop {
            let m = -j - i as i64;
            if m < -w {
                break;
            }
            let mut r = vec![0; total];
            r[index_of(m, i)] = 1;
            rows.push(r);
            j += 1;
        }
    }
    let image_rank = fq_rank(&fq, rows);
    Ok(total - image_rank)
}

/// Čech `H¹` of the thickened line, computed as an exact windowed quotient
/// with a rank-stability check certifying the window: the rank must not
/// move when the window grows.
pub fn cech_h1_thickened(params: &CurveParams, window: Option<i64>) -> Result<CechH1> {
    let d = params.d() as i64;
    let w = window.unwrap_or(2 * d + 2).max(d + 1);
    if w > 4096 {
        return Err(CurveError::ResourceCap(format!("window {w} out of desk scale")));
    }
    let rank = window_rank(params, w)?;
    let rank_grown = window_rank(params, w + 3)?;
    if rank != rank_grown {
        return Err(CurveError::ResourceCap(format!(
            "window {w} is not stable: rank {rank} vs {rank_grown}"
        )));
    }
    let basis = middle_basis(params.d());
    debug_assert_eq!(basis.len(), rank);
    Ok(CechH1 { params: *params, basis, rank, window: w })
}

/// Exact projection of an overlap section onto the middle basis: the terms
/// with `m ≥ 0` or `m ≤ −i` span the restriction images and are dropped.
pub fn middle_project<C: Coefficients>(
    ring: &TrRing<C>,
    basis: &[(i64, u32)],
    elem: &Truncated<C>,
) -> Vec<C::Elem> {
    let mut out: Vec<C::Elem> = vec![ring.coeffs.c_zero(); basis.len()];
    for (&(m, i), v) in &elem.terms {
        if i >= 1 && m < 0 && m > -(i as i64) {
            let pos = basis
                .iter()
                .position(|&(bm, bi)| bm == m && bi == i)
                .expect("middle monomial lies in the canonical basis");
            out[pos] = ring.coeffs.c_add(&out[pos], v);
        }
    }
    out
}

/// The Frobenius `g ↦ g^p` on overlap sections, reduced to the middle
/// basis: a `p`-semilinear operator.
pub fn frobenius_operator(params: &CurveParams) -> Result<SemilinearOp> {
    let cech = cech_h1_thickened(params, None)?;
    let fq = params.field()?;
    let ring = params.truncated_ring()?;
    let n = cech.rank;
    let mut mat = vec![vec![0; n]; n];
    for (j, &(m, i)) in cech.basis.iter().enumerate() {
        let mono = ring.monomial(m, i, 1);
        let image = ring.pow(&mono, params.p as u64);
        let col = middle_project(&ring, &cech.basis, &image);
        for (irow, v) in col.into_iter().enumerate() {
            mat[irow][j] = v;
        }
    }
    Ok(SemilinearOp { fq, dim: n, mat })
}

fn multinomial_mod_p(p: u32, b: u64, j: u64, k: u64) -> u32 {
    // b! / (j! k! (b-j-k)!) mod p via exact integer arithmetic (desk scale)
    if j + k > b {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    // C(b, j) * C(b-j, k)
    for t in 0..j {
        num *= (b - t) as u128;
        den *= (t + 1) as u128;
    }
    for t in 0..k {
        num *= (b - j - t) as u128;
        den *= (t + 1) as u128;
    }
    ((num / den) % p as u128) as u32
}

/// The residue pairing matrix from the Čech basis to the monomial basis:
/// entry for monomial `(x, y, z)` and Čech class `s^m ε^i` is the
/// coefficient of `s^{-1} ε^{d-1}` in `s^{x-1+m} (1 + ε − s)^{y-1} ε^i`,
/// which is `(−1)^k · (y−1)!/(j! k! (y−1−j−k)!)` with `j = d−1−i`,
/// `k = −x−m`. Rows are monomial basis elements, columns Čech classes.
pub fn basis_change_matrix(params: &CurveParams) -> Result<Vec<Vec<FqElem>>> {
    let fq = params.field()?;
    let d = params.d();
    let mono = monomial_h1_basis(params);
    let cech = middle_basis(d);
    let mut mat = vec![vec![0; cech.len()]; mono.basis.len()];
    for (r, &[x, y, _z]) in mono.basis.iter().enumerate() {
        for (c, &(m, i)) in cech.iter().enumerate() {
            let j = (d - 1 - i) as i64;
            let k = -(x as i64) - m;
            if j < 0 || k < 0 {
                continue;
            }
            let b = (y - 1) as u64;
            let coeff = multinomial_mod_p(params.p, b, j as u64, k as u64);
            if coeff == 0 {
                continue;
            }
            let mut v = fq.from_int(coeff as i64);
            if k % 2 == 1 {
                v = fq.neg(v);
            }
            mat[r][c] = v;
        }
    }
    Ok(mat)
}

/// Inverse of the basis change (the pairing is perfect, so this exists).
pub fn basis_change_inverse(params: &CurveParams) -> Result<Vec<Vec<FqElem>>> {
    let fq = params.field()?;
    let phi = basis_change_matrix(params)?;
    fq_invert(&fq, &phi).ok_or_else(|| {
        CurveError::InvalidParams("basis change matrix is singular".into())
    })
}

/// The torus action on the Čech model over the coefficient ring `R`,
/// computed by substitution: `s ↦ a·s`, `ε ↦ b·ε + (a−b)·s + (b−1)`,
/// then reduction to the middle basis. Column `j` is the image of basis
/// class `j`.
pub fn cech_torus_matrix(
    params: &CurveParams,
    a: &GrElem,
    b: &GrElem,
) -> Result<Vec<Vec<GrElem>>> {
    let gr = params.group_ring()?;
    for (name, s) in [("a", a), ("b", b)] {
        if !gr.is_root_of_unity(s) {
            return Err(CurveError::BadScalar(format!("{name} is not a d-th root of unity")));
        }
    }
    let ring = TrRing::new(gr.clone(), params.d());
    let basis = middle_basis(params.d());
    // ε ↦ b·ε + (a−b)·s + (b−1)
    let eps_image = {
        let t1 = ring.monomial(0, 1, b.clone());
        let t2 = ring.monomial(1, 0, gr.sub(a, b));
        let t3 = ring.monomial(0, 0, gr.sub(b, &gr.one()));
        ring.add(&ring.add(&t1, &t2), &t3)
    };
    let mut cols = Vec::with_capacity(basis.len());
    for &(m, i) in &basis {
        // (a·s)^m for negative m: a^m is a^{m mod d} since a^d = 1
        let a_m = gr.root_pow(a, m);
        let s_m = ring.monomial(m, 0, a_m);
        let image = ring.mul(&s_m, &ring.pow(&eps_image, i as u64));
        cols.push(middle_project(&ring, &basis, &image));
    }
    // transpose: mat[row][col]
    let n = basis.len();
    let mut mat = vec![vec![gr.zero(); n]; n];
    for (j, col) in cols.into_iter().enumerate() {
        for (i, v) in col.into_iter().enumerate() {
            mat[i][j] = v;
        }
    }
    Ok(mat)
}

/// Conjugate the diagonal monomial-model torus action into the Čech basis
/// via the basis change: `Φ⁻¹ · diag(a^{-x} b^{-y}) · Φ` over `R`.
pub fn transported_torus_matrix(
    params: &CurveParams,
    a: &GrElem,
    b: &GrElem,
) -> Result<Vec<Vec<GrElem>>> {
    let gr = params.group_ring()?;
    let space = monomial_h1_basis(params);
    let diag = crate::monomial::torus_action(&gr, &space, a, b)?;
    let phi = basis_change_matrix(params)?;
    let phi_inv = basis_change_inverse(params)?;
    let n = space.dim();
    let embed = |v: FqElem| gr.from_fq(v);
    // out = phi_inv · diag · phi
    let mut out = vec![vec![gr.zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = gr.zero();
            for k in 0..n {
                // (phi_inv)[i][k] · diag_k · phi[k][j]
                let t = gr.mul(&embed(phi_inv[i][k]), &diag.entries[k]);
                let t = gr.mul(&t, &embed(phi[k][j]));
                acc = gr.add(&acc, &t);
            }
            out[i][j] = acc;
        }
    }
    Ok(out)
}

/// Apply a matrix over `R` to a vector over `R`.
pub fn r_mat_vec(gr: &GroupRing, m: &[Vec<GrElem>], v: &[GrElem]) -> Vec<GrElem> {
    m.iter()
        .map(|row| {
            let mut acc = gr.zero();
            for (a, x) in row.iter().zip(v) {
                acc = gr.add(&acc, &gr.mul(a, x));
            }
            acc
        })
        .collect()
}

/// Apply the Frobenius semilinear operator over `R`: coefficients are
/// raised to the `p`-th power in `R` before the `F_p`-matrix acts.
pub fn frobenius_apply_over_r(
    gr: &GroupRing,
    op: &SemilinearOp,
    v: &[GrElem],
) -> Vec<GrElem> {
    let n = op.dim;
    let mut out = vec![gr.zero(); n];
    for (j, c) in v.iter().enumerate() {
        if gr.is_zero(c) {
            continue;
        }
        let cp = gr.frobenius(c);
        for i in 0..n {
            if op.mat[i][j] != 0 {
                let t = gr.mul(&cp, &gr.from_fq(op.mat[i][j]));
                out[i] = gr.add(&out[i], &t);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn middle_basis_counts() {
        assert!(middle_basis(2).is_empty());
        assert_eq!(middle_basis(3), vec![(-1, 2)]);
        assert_eq!(middle_basis(4), vec![(-1, 2), (-2, 3), (-1, 3)]);
        let d = 9;
        assert_eq!(middle_basis(d).len() as u32, (d - 1) * (d - 2) / 2);
    }

    #[test]
    fn cech_ranks_match_the_filtration_sum() {
        // Σ_{m=1}^{d-1} (m-1), the sum of the twisted line ranks
        for (p, n, q, want) in [(2, 1, 2, 0usize), (2, 2, 2, 3), (3, 1, 3, 1), (2, 2, 4, 3)] {
            let params = CurveParams::new(p, n, q).unwrap();
            let h1 = cech_h1_thickened(&params, None).unwrap();
            assert_eq!(h1.rank, want, "({p},{n},{q})");
            let d = params.d() as usize;
            let filtration: usize = (1..d).map(|m| m - 1).sum();
            assert_eq!(h1.rank, filtration);
        }
    }

    #[test]
    fn projection_keeps_only_middle_terms() {
        let params = CurveParams::new(2, 2, 2).unwrap();
        let ring = params.truncated_ring().unwrap();
        let basis = middle_basis(4);
        // s²ε (restriction from chart 0) + s⁻³ε² (chart 1: m ≤ −i) + s⁻¹ε²
        let elem = ring.add(
            &ring.add(&ring.monomial(2, 1, 1), &ring.monomial(-3, 2, 1)),
            &ring.monomial(-1, 2, 1),
        );
        let v = middle_project(&ring, &basis, &elem);
        assert_eq!(v, vec![1, 0, 0]);
    }

    #[test]
    fn frobenius_is_zero_at_3_1() {
        let params = CurveParams::new(3, 1, 3).unwrap();
        let op = frobenius_operator(&params).unwrap();
        assert_eq!(op.dim, 1);
        assert_eq!(op.mat, vec![vec![0]]);
    }

    #[test]
    fn frobenius_is_zero_at_2_2_but_not_at_3_2() {
        let params = CurveParams::new(2, 2, 2).unwrap();
        let op = frobenius_operator(&params).unwrap();
        assert!(op.mat.iter().all(|row| row.iter().all(|v| *v == 0)));

        let params = CurveParams::new(3, 2, 3).unwrap();
        let op = frobenius_operator(&params).unwrap();
        assert!(op.mat.iter().any(|row| row.iter().any(|v| *v != 0)));
    }

    #[test]
    fn basis_change_is_invertible() {
        for (p, n) in [(3u32, 1u32), (2, 2), (2, 3), (3, 2)] {
            let params = CurveParams::new(p, n, p).unwrap();
            assert!(basis_change_inverse(&params).is_ok(), "({p},{n})");
        }
    }

    #[test]
    fn basis_change_smallest_case_is_unit() {
        let params = CurveParams::new(3, 1, 3).unwrap();
        let phi = basis_change_matrix(&params).unwrap();
        assert_eq!(phi, vec![vec![1]]);
    }

    #[test]
    fn cech_torus_action_matches_transported_diagonal() {
        for (p, n) in [(3u32, 1u32), (2, 2)] {
            let params = CurveParams::new(p, n, p).unwrap();
            let gr = params.group_ring().unwrap();
            let t = gr.t();
            for (a, b) in [
                (t.clone(), gr.one()),
                (gr.one(), t.clone()),
                (t.clone(), t.clone()),
                (gr.pow(&t, 2), t.clone()),
            ] {
                let subst = cech_torus_matrix(&params, &a, &b).unwrap();
                let transported = transported_torus_matrix(&params, &a, &b).unwrap();
                assert_eq!(subst, transported, "({p},{n})");
            }
        }
    }

    #[test]
    fn window_instability_is_reported() {
        // a window below d+1 is clamped, so force a tiny explicit one by
        // checking the clamp keeps ranks correct instead
        let params = CurveParams::new(2, 2, 2).unwrap();
        let h1 = cech_h1_thickened(&params, Some(1)).unwrap();
        assert_eq!(h1.window, params.d() as i64 + 1);
        assert_eq!(h1.rank, 3);
    }
}
