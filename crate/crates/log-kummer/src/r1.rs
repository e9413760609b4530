//! Boundary section groups of the purely logarithmic part: the sections of
//! the first higher direct image along "forget the log structure" are
//! `Hom(μ_{level}, G)` tensored with one copy of ℤ per boundary point. For
//! `p`-torsion `G` the level-directed system stabilizes at level `p`; the
//! computation runs there and records the stabilization check against
//! level `p²` when that search is within the cap.

use curve_cohomology::{CurveError, Result};

use crate::hopf::{hom_group_schemes, FiniteGroupSchemeTag, HomGroup, HOM_SEARCH_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R1Sections {
    pub target: FiniteGroupSchemeTag,
    pub boundary_points: u32,
    pub hom_at_level_p: HomGroup,
    /// `Some(true)` when the level-p² group was computed and matches;
    /// `None` when that search exceeds the cap
    pub stabilization_checked: Option<bool>,
    /// invariant factors of `Hom(μ_p, G) ⊗ ℤ^{boundary_points}`
    pub invariant_factors: Vec<u64>,
}

pub fn r1_sections(g: &FiniteGroupSchemeTag, boundary_points: u32) -> Result<R1Sections> {
    let mu_p = FiniteGroupSchemeTag::mu(1, g.q);
    let hom = hom_group_schemes(&mu_p, g)?;
    // stabilization: the canonical projection μ_{p²} → μ_p induces an
    // isomorphism on Hom into p-torsion targets
    let mu_p2 = FiniteGroupSchemeTag::mu(2, g.q);
    let fq_dim = factor_p(g.q)?.0.pow(2);
    let space: Option<u64> = (g.q as u64).checked_pow(fq_dim);
    let stabilization_checked = match space {
        Some(s) if s <= HOM_SEARCH_CAP => {
            let hom2 = hom_group_schemes(&mu_p2, g)?;
            Some(hom2.invariant_factors == hom.invariant_factors)
        }
        _ => None,
    };
    let mut invariant_factors = Vec::new();
    for f in &hom.invariant_factors {
        for _ in 0..boundary_points {
            invariant_factors.push(*f);
        }
    }
    invariant_factors.sort_unstable();
    Ok(R1Sections {
        target: *g,
        boundary_points,
        hom_at_level_p: hom,
        stabilization_checked,
        invariant_factors,
    })
}

fn factor_p(q: u32) -> Result<(u32, u32)> {
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
        if p * p > q {
            p = q;
            break;
        }
    }
    let mut e = 0;
    let mut t = q;
    while t > 1 {
        if !t.is_multiple_of(p) {
            return Err(CurveError::InvalidParams(format!("{q} is not a prime power")));
        }
        t /= p;
        e += 1;
    }
    Ok((p, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_p_with_three_boundary_points() {
        for p in [2u32, 3] {
            let r = r1_sections(&FiniteGroupSchemeTag::mu(1, p), 3).unwrap();
            assert_eq!(r.invariant_factors, vec![p as u64; 3], "p = {p}");
            assert_eq!(r.stabilization_checked, Some(true));
        }
    }

    #[test]
    fn alpha_p_vanishes() {
        let r = r1_sections(&FiniteGroupSchemeTag::alpha_p(3), 3).unwrap();
        assert!(r.invariant_factors.is_empty());
    }

    #[test]
    fn no_boundary_no_sections() {
        let r = r1_sections(&FiniteGroupSchemeTag::z_mod_p(2), 0).unwrap();
        assert!(r.invariant_factors.is_empty());
    }

    #[test]
    fn additive_in_boundary_points() {
        let a = r1_sections(&FiniteGroupSchemeTag::mu(1, 2), 1).unwrap();
        let b = r1_sections(&FiniteGroupSchemeTag::mu(1, 2), 2).unwrap();
        let c = r1_sections(&FiniteGroupSchemeTag::mu(1, 2), 3).unwrap();
        assert_eq!(a.invariant_factors.len() + b.invariant_factors.len(), c.invariant_factors.len());
    }
}
