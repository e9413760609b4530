//! Truncated exponential and logarithm on the nilpotent part of the
//! thickened coordinate ring: `exp(x) = Σ_{i<p} xⁱ/i!` and
//! `log(u) = Σ_{i=1}^{p-1} (−1)^{i+1} (u−1)ⁱ/i`, mutually inverse
//! homomorphisms between `{x : x^p = 0}` and `1 + {x : x^p = 0}`.

use crate::error::{CurveError, Result};
use crate::fq::Fq;
use crate::truncated::{TrRing, Truncated};

fn check_pth_power_zero(ring: &TrRing<Fq>, x: &Truncated<Fq>, what: &str) -> Result<()> {
    let p = ring.coeffs.p as u64;
    let xp = ring.pow(x, p);
    if !xp.is_zero() {
        return Err(CurveError::Nilpotency(format!(
            "{what}^{p} ≠ 0 (offending power has {} terms, lowest ε-degree {:?})",
            xp.terms.len(),
            xp.eps_degree_min()
        )));
    }
    Ok(())
}

/// `exp_{p-1}(x) = Σ_{i=0}^{p-1} xⁱ/i!`; requires `x^p = 0`.
pub fn truncated_exp(ring: &TrRing<Fq>, x: &Truncated<Fq>) -> Result<Truncated<Fq>> {
    check_pth_power_zero(ring, x, "exp argument")?;
    let fq = &ring.coeffs;
    let mut acc = ring.one();
    let mut pw = ring.one();
    let mut factorial = fq.one();
    for i in 1..fq.p {
        pw = ring.mul(&pw, x);
        factorial = fq.mul(factorial, fq.from_int(i as i64));
        let coeff = fq.inv(factorial)?;
        acc = ring.add(&acc, &ring.scale(&pw, &coeff));
    }
    Ok(acc)
}

/// `log_{p-1}(u) = Σ_{i=1}^{p-1} (−1)^{i+1} (u−1)ⁱ/i`; requires constant
/// term 1 and `(u−1)^p = 0`.
pub fn truncated_log(ring: &TrRing<Fq>, u: &Truncated<Fq>) -> Result<Truncated<Fq>> {
    let fq = &ring.coeffs;
    let w = ring.sub(u, &ring.one());
    if w.terms.contains_key(&(0, 0)) {
        return Err(CurveError::Nilpotency(
            "log argument must have constant term 1".into(),
        ));
    }
    check_pth_power_zero(ring, &w, "log argument minus one")?;
    let mut acc = ring.zero();
    let mut pw = ring.one();
    for i in 1..fq.p {
        pw = ring.mul(&pw, &w);
        let mut coeff = fq.inv(fq.from_int(i as i64))?;
        if i % 2 == 0 {
            coeff = fq.neg(coeff);
        }
        acc = ring.add(&acc, &ring.scale(&pw, &coeff));
    }
    Ok(acc)
}
