//! The monomial model of `H¹(X_n, O)`: inverse monomials
//! `1/(T₀^x T₁^y T₂^z)` with `x, y, z ≥ 1` and `x + y + z = p^n`, on which
//! the torus `μ_{p^n} × μ_{p^n}` acts diagonally by
//! `(a, b): e_{(x,y,z)} ↦ a^{-x} b^{-y} e_{(x,y,z)}`.

use crate::error::{CurveError, Result};
use crate::groupring::{GrElem, GroupRing};
use crate::CurveParams;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologySpace {
    pub params: CurveParams,
    /// all `(x, y, z)` with entries ≥ 1 summing to `p^n`, lexicographic
    pub basis: Vec<[u32; 3]>,
}

impl CohomologySpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Enumerate the monomial basis; its size is `(p^n−1)(p^n−2)/2`.
pub fn monomial_h1_basis(params: &CurveParams) -> CohomologySpace {
    let d = params.d();
    let mut basis = Vec::new();
    for x in 1..d {
        for y in 1..d {
            if x + y < d {
                basis.push([x, y, d - x - y]);
            }
        }
    }
    basis.sort_unstable();
    CohomologySpace { params: *params, basis }
}

/// A diagonal operator on the space tensored with the torus coefficient
/// ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagOperator {
    pub entries: Vec<GrElem>,
}

impl DiagOperator {
    pub fn apply(&self, ring: &GroupRing, v: &[GrElem]) -> Vec<GrElem> {
        self.entries.iter().zip(v).map(|(d, x)| ring.mul(d, x)).collect()
    }

    pub fn compose(&self, ring: &GroupRing, other: &DiagOperator) -> DiagOperator {
        DiagOperator {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| ring.mul(a, b))
                .collect(),
        }
    }
}

/// The torus action of a pair of `p^n`-th roots of unity: the basis
/// monomial `(x, y, z)` is scaled by `a^{-x} b^{-y}`. Rejects scalars that
/// are not units or not roots of unity of order dividing `p^n`.
pub fn torus_action(
    ring: &GroupRing,
    space: &CohomologySpace,
    a: &GrElem,
    b: &GrElem,
) -> Result<DiagOperator> {
    for (name, s) in [("a", a), ("b", b)] {
        if !ring.is_unit(s) {
            return Err(CurveError::BadScalar(format!("{name} is not a unit")));
        }
        if !ring.is_root_of_unity(s) {
            return Err(CurveError::BadScalar(format!(
                "{name}^d ≠ 1: not a root of unity of order dividing d"
            )));
        }
    }
    let entries = space
        .basis
        .iter()
        .map(|&[x, y, _]| {
            let ax = ring.root_pow(a, -(x as i64));
            let by = ring.root_pow(b, -(y as i64));
            ring.mul(&ax, &by)
        })
        .collect();
    Ok(DiagOperator { entries })
}

/// Indices of the basis monomials fixed by every listed pair `(a, b)`:
/// the fixed subspace of the coefficient-inclusion `F_q ⊂ R` is spanned by
/// exactly these monomials, since a constant `c` satisfies
/// `c·(a^{-x}b^{-y} − 1) = 0` iff `c = 0` or the scalar equals one.
pub fn fixed_classes(
    ring: &GroupRing,
    space: &CohomologySpace,
    pairs: &[(GrElem, GrElem)],
) -> Result<Vec<usize>> {
    let mut ops = Vec::new();
    for (a, b) in pairs {
        ops.push(torus_action(ring, space, a, b)?);
    }
    let one = ring.one();
    let mut fixed = Vec::new();
    'mono: for k in 0..space.dim() {
        for op in &ops {
            if op.entries[k] != one {
                continue 'mono;
            }
        }
        fixed.push(k);
    }
    Ok(fixed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fq::Fq;

    fn setup(p: u32, n: u32) -> (GroupRing, CohomologySpace) {
        let params = CurveParams::new(p, n, p).unwrap();
        let ring = GroupRing::new(Fq::new(p, 1).unwrap(), params.d() as usize);
        let space = monomial_h1_basis(&params);
        (ring, space)
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(setup(2, 1).1.basis, Vec::<[u32; 3]>::new());
        assert_eq!(setup(3, 1).1.basis, vec![[1, 1, 1]]);
        assert_eq!(setup(2, 2).1.basis, vec![[1, 1, 2], [1, 2, 1], [2, 1, 1]]);
        let d = 9u32;
        assert_eq!(setup(3, 2).1.dim() as u32, (d - 1) * (d - 2) / 2);
    }

    #[test]
    fn identity_pair_acts_trivially() {
        let (ring, space) = setup(3, 1);
        let op = torus_action(&ring, &space, &ring.one(), &ring.one()).unwrap();
        assert!(op.entries.iter().all(|e| *e == ring.one()));
        let fixed = fixed_classes(&ring, &space, &[(ring.one(), ring.one())]).unwrap();
        assert_eq!(fixed.len(), space.dim());
    }

    #[test]
    fn t_scales_the_single_class_by_t_squared() {
        // p=3, n=1, (a,b) = (t,1): (1,1,1) picks up t^{-1} = t²
        let (ring, space) = setup(3, 1);
        let op = torus_action(&ring, &space, &ring.t(), &ring.one()).unwrap();
        assert_eq!(op.entries[0], ring.pow(&ring.t(), 2));
    }

    #[test]
    fn exponents_mod_four() {
        // p=2, n=2, (a,b) = (t,1): (1,1,2) ↦ t³, (1,2,1) ↦ t³, (2,1,1) ↦ t²
        let (ring, space) = setup(2, 2);
        let op = torus_action(&ring, &space, &ring.t(), &ring.one()).unwrap();
        assert_eq!(space.basis, vec![[1, 1, 2], [1, 2, 1], [2, 1, 1]]);
        assert_eq!(op.entries[0], ring.pow(&ring.t(), 3));
        assert_eq!(op.entries[1], ring.pow(&ring.t(), 3));
        assert_eq!(op.entries[2], ring.pow(&ring.t(), 2));
    }

    #[test]
    fn fixed_classes_vanish_under_both_coordinates() {
        for (p, n) in [(3u32, 1u32), (2, 2)] {
            let (ring, space) = setup(p, n);
            let pairs = vec![(ring.t(), ring.one()), (ring.one(), ring.t())];
            let fixed = fixed_classes(&ring, &space, &pairs).unwrap();
            assert!(fixed.is_empty(), "({p},{n})");
        }
    }

    #[test]
    fn composition_law() {
        let (ring, space) = setup(2, 2);
        let t = ring.t();
        let t2 = ring.pow(&t, 2);
        let ab = torus_action(&ring, &space, &t, &t2).unwrap();
        let cd = torus_action(&ring, &space, &t2, &t).unwrap();
        let composed = ab.compose(&ring, &cd);
        let direct = torus_action(&ring, &space, &ring.mul(&t, &t2), &ring.mul(&t2, &t)).unwrap();
        assert_eq!(composed, direct);
    }

    #[test]
    fn rejects_non_roots() {
        let (ring, space) = setup(3, 1);
        // t + 1 has coefficient sum 2 ≠ 1: a unit but not a root of unity
        let bad = ring.add(&ring.t(), &ring.one());
        assert!(torus_action(&ring, &space, &bad, &ring.one()).is_err());
        // zero is not a unit
        assert!(torus_action(&ring, &space, &ring.zero(), &ring.one()).is_err());
    }
}
