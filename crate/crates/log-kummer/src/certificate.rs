//! The surjectivity certificate: every surjection `μ_{p^n} × μ_{p^n} → μ_p`
//! is indexed by a pair `(i, j) ≠ (0, 0)` with `0 ≤ i, j ≤ p−1`; the
//! induced map on boundary sections sends the distinguished pair
//! `([t], [t−1])` to `i·[t] + j·[t−1]`, and the certificate checks that
//! none of these `p²−1` classes is a `p`-th power. A class that survives
//! every surjection forces the covering tower past level `p^n`, which is
//! the mechanical content of surjectivity at every level.

use curve_cohomology::{CurveError, Result};

use crate::units::{log_unit_classes, pth_power_test, LogUnitClass};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionCase {
    pub i: u32,
    pub j: u32,
    pub class: LogUnitClass,
    pub is_pth_power: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjectivityCertificate {
    pub p: u32,
    pub n: u32,
    pub cases: Vec<ObstructionCase>,
    /// true iff every case obstructs (is not a p-th power)
    pub passes: bool,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn surjectivity_certificate(p: u32, n: u32) -> Result<SurjectivityCertificate> {
    if !is_prime(p) {
        return Err(CurveError::InvalidParams(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(CurveError::InvalidParams("level n must be ≥ 1".into()));
    }
    let lattice = log_unit_classes();
    let mut cases = Vec::new();
    for i in 0..p {
        for j in 0..p {
            if (i, j) == (0, 0) {
                continue;
            }
            let class = lattice.power_map(i as i64, j as i64);
            cases.push(ObstructionCase {
                i,
                j,
                class,
                is_pth_power: pth_power_test(&class, p),
            });
        }
    }
    let passes = cases.iter().all(|c| !c.is_pth_power);
    Ok(SurjectivityCertificate { p, n, cases, passes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_has_three_obstructions() {
        let c = surjectivity_certificate(2, 1).unwrap();
        assert_eq!(c.cases.len(), 3);
        assert!(c.passes);
    }

    #[test]
    fn p3_level2_has_eight_obstructions() {
        let c = surjectivity_certificate(3, 2).unwrap();
        assert_eq!(c.cases.len(), 8);
        assert!(c.passes);
    }

    #[test]
    fn the_excluded_pair_would_fail() {
        // (i, j) = (0, 0) yields the constant class, a p-th power: the
        // certificate's precondition excludes it
        for p in [2, 3, 5] {
            assert!(pth_power_test(&log_unit_classes().power_map(0, 0), p));
        }
    }

    #[test]
    fn level_independence() {
        for p in [2, 3, 5] {
            let at_1 = surjectivity_certificate(p, 1).unwrap();
            let at_2 = surjectivity_certificate(p, 2).unwrap();
            assert_eq!(at_1.cases, at_2.cases);
            assert!(at_1.passes && at_2.passes);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(surjectivity_certificate(4, 1).is_err());
        assert!(surjectivity_certificate(3, 0).is_err());
    }
}
