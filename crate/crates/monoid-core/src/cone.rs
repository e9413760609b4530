//! Rational polyhedral cones with exact integer data: double description
//! (generators ↔ facets), lineality, extreme rays, placing triangulation,
//! and Hilbert bases of `cone ∩ ℤ^dim`.
//!
//! All cones are given by finitely many integer generators. The Hilbert
//! basis routine handles non-pointed and lower-dimensional cones by
//! restricting to the span and splitting off the lineality space first;
//! the pointed part is done by triangulating into simplicial subcones and
//! collecting fundamental-parallelepiped points, then filtering to the
//! irreducible elements.

use crate::error::{Caps, MonoidError, Result};
use crate::mat::{self, Mat};
use crate::scalar::LatticeInt;

/// Divide by the gcd of the entries, keeping the direction.
pub fn reduce_gcd<I: LatticeInt>(v: &[I]) -> Vec<I> {
    let mut g = I::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| *x / g).collect()
}

/// H-description `{x : e·x = 0 ∀e ∈ equalities, f·x ≥ 0 ∀f ∈ facets}`.
#[derive(Clone, Debug)]
pub struct HDesc<I> {
    pub dim: usize,
    pub equalities: Vec<Vec<I>>,
    pub facets: Vec<Vec<I>>,
}

impl<I: LatticeInt> HDesc<I> {
    pub fn contains(&self, x: &[I]) -> bool {
        self.equalities.iter().all(|e| mat::dot(e, x).is_zero())
            && self.facets.iter().all(|f| !mat::dot(f, x).is_negative())
    }

    /// Membership in the lineality space `C ∩ -C`.
    pub fn in_lineality(&self, x: &[I]) -> bool {
        self.equalities.iter().all(|e| mat::dot(e, x).is_zero())
            && self.facets.iter().all(|f| mat::dot(f, x).is_zero())
    }

    /// Canonical basis of the lineality lattice `C ∩ -C ∩ ℤ^dim`.
    pub fn lineality_lattice(&self) -> Vec<Vec<I>> {
        let mut normals: Vec<Vec<I>> = self.equalities.clone();
        normals.extend(self.facets.iter().cloned());
        if normals.is_empty() {
            return mat::Mat::<I>::identity(self.dim).rows_vec();
        }
        mat::kernel(&Mat::from_rows(&normals, self.dim).transpose())
    }

    /// A grading that is strictly positive on `C ∖ lineality` (the sum of
    /// the facet normals).
    pub fn positive_grading(&self) -> Vec<I> {
        let mut w = vec![I::zero(); self.dim];
        for f in &self.facets {
            w = mat::add_vec(&w, f);
        }
        w
    }
}

struct DdRay<I> {
    v: Vec<I>,
    active: u128,
}

/// V-description of the solution cone `{x : c·x ≥ 0 for all c}` by the
/// double description method: a lineality basis plus extreme rays.
pub fn solve_inequalities<I: LatticeInt>(
    dim: usize,
    constraints: &[Vec<I>],
) -> (Vec<Vec<I>>, Vec<Vec<I>>) {
    assert!(constraints.len() <= 128, "constraint count exceeds bitmask width");
    let mut lin: Vec<Vec<I>> = Mat::<I>::identity(dim).rows_vec();
    let mut rays: Vec<DdRay<I>> = Vec::new();
    let mut processed: u128 = 0;
    for (idx, c) in constraints.iter().enumerate() {
        if mat::is_zero_vec(c) {
            continue;
        }
        let bit = 1u128 << idx;
        if let Some(k) = lin.iter().position(|l| !mat::dot(c, l).is_zero()) {
            // a lineality direction crosses the hyperplane: project onto it
            let mut l0 = lin.remove(k);
            if mat::dot(c, &l0).is_negative() {
                l0 = mat::neg_vec(&l0);
            }
            let v0 = mat::dot(c, &l0);
            lin = lin
                .iter()
                .map(|l| reduce_gcd(&mat::sub_vec(&mat::scale(l, v0), &mat::scale(&l0, mat::dot(c, l)))))
                .collect();
            for r in rays.iter_mut() {
                let cr = mat::dot(c, &r.v);
                if !cr.is_zero() {
                    r.v = reduce_gcd(&mat::sub_vec(&mat::scale(&r.v, v0), &mat::scale(&l0, cr)));
                }
                r.active |= bit; // projected rays lie on the new hyperplane
            }
            rays.push(DdRay { v: reduce_gcd(&l0), active: processed });
        } else {
            let vals: Vec<I> = rays.iter().map(|r| mat::dot(c, &r.v)).collect();
            let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
            let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
            let mut new_rays: Vec<DdRay<I>> = Vec::new();
            for &ip in &pos {
                for &ineg in &neg {
                    let z = rays[ip].active & rays[ineg].active;
                    let adjacent = !(0..rays.len()).any(|k| {
                        k != ip && k != ineg && (z & !rays[k].active) == 0
                    });
                    if !adjacent {
                        continue;
                    }
                    let v = mat::sub_vec(
                        &mat::scale(&rays[ineg].v, vals[ip]),
                        &mat::scale(&rays[ip].v, vals[ineg]),
                    );
                    new_rays.push(DdRay { v: reduce_gcd(&v), active: z | bit });
                }
            }
            let mut kept: Vec<DdRay<I>> = Vec::new();
            for (i, r) in rays.drain(..).enumerate() {
                if vals[i].is_negative() {
                    continue;
                }
                let mut r = r;
                if vals[i].is_zero() {
                    r.active |= bit;
                }
                kept.push(r);
            }
            kept.extend(new_rays);
            rays = kept;
            // drop exact duplicates
            rays.sort_by(|a, b| a.v.cmp(&b.v));
            rays.dedup_by(|a, b| {
                if a.v == b.v {
                    b.active |= a.active;
                    true
                } else {
                    false
                }
            });
        }
        processed |= bit;
    }
    (lin, rays.into_iter().map(|r| r.v).collect())
}

/// H-description of `cone(gens)` via duality: the dual cone's lineality
/// gives the equalities, its extreme rays the facet normals.
pub fn hdesc_of_cone<I: LatticeInt>(dim: usize, gens: &[Vec<I>]) -> HDesc<I> {
    let nz: Vec<Vec<I>> = gens.iter().filter(|g| !mat::is_zero_vec(g)).cloned().collect();
    let (lin, rays) = solve_inequalities(dim, &nz);
    HDesc { dim, equalities: lin, facets: rays }
}

/// Extreme rays of a pointed cone, selected among the (primitive)
/// generators: a generator is extreme iff its minimal face is a line, i.e.
/// the equalities together with its active facets cut out a 1-dimensional
/// space.
pub fn extreme_rays<I: LatticeInt>(hd: &HDesc<I>, gens: &[Vec<I>]) -> Vec<Vec<I>> {
    let mut out: Vec<Vec<I>> = Vec::new();
    for g in gens {
        if mat::is_zero_vec(g) {
            continue;
        }
        let g = reduce_gcd(g);
        if out.contains(&g) {
            continue;
        }
        let mut active: Vec<Vec<I>> = hd
            .facets
            .iter()
            .filter(|f| mat::dot(f, &g).is_zero())
            .cloned()
            .collect();
        active.extend(hd.equalities.iter().cloned());
        if mat::rank(&active, hd.dim) == hd.dim - 1 {
            out.push(g);
        }
    }
    out.sort();
    out
}

/// Placing triangulation of a pointed cone spanned by `rays` (full rank in
/// the span); returns simplices as index sets into `rays`.
pub fn triangulate<I: LatticeInt>(dim: usize, rays: &[Vec<I>]) -> Vec<Vec<usize>> {
    let n = rays.len();
    assert!(n >= dim, "pointed cone needs at least dim extreme rays");
    // greedy independent start
    let mut start: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut trial: Vec<Vec<I>> = start.iter().map(|&k| rays[k].clone()).collect();
        trial.push(rays[i].clone());
        if mat::rank(&trial, dim) == trial.len() {
            start.push(i);
            if start.len() == dim {
                break;
            }
        }
    }
    assert_eq!(start.len(), dim, "cone is not full-dimensional");
    let mut simplices: Vec<Vec<usize>> = vec![start.clone()];
    let mut placed: Vec<usize> = start.clone();
    for idx in 0..n {
        if placed.contains(&idx) {
            continue;
        }
        let hull: Vec<Vec<I>> = placed.iter().map(|&k| rays[k].clone()).collect();
        let hd = hdesc_of_cone(dim, &hull);
        let visible: Vec<&Vec<I>> = hd
            .facets
            .iter()
            .filter(|f| mat::dot(f, &rays[idx]).is_negative())
            .collect();
        let mut news: Vec<Vec<usize>> = Vec::new();
        for s in &simplices {
            for drop in 0..s.len() {
                let face: Vec<usize> =
                    s.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &k)| k).collect();
                if visible
                    .iter()
                    .any(|f| face.iter().all(|&k| mat::dot(f, &rays[k]).is_zero()))
                {
                    let mut t = face.clone();
                    t.push(idx);
                    t.sort_unstable();
                    news.push(t);
                }
            }
        }
        news.sort();
        news.dedup();
        simplices.extend(news);
        placed.push(idx);
    }
    simplices.sort();
    simplices.dedup();
    simplices
}

// Small exact fractions for solving the simplex systems.
#[derive(Clone, Copy, Debug)]
struct Frac<I> {
    num: I,
    den: I, // > 0
}

impl<I: LatticeInt> Frac<I> {
    fn new(num: I, den: I) -> Self {
        assert!(!den.is_zero());
        let (mut num, mut den) = (num, den);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_zero() && !g.is_one() {
            num /= g;
            den /= g;
        }
        Frac { num, den }
    }
    fn from_int(v: I) -> Self {
        Frac { num: v, den: I::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn sub(&self, o: &Self) -> Self {
        Frac::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }
    fn mul(&self, o: &Self) -> Self {
        Frac::new(self.num * o.num, self.den * o.den)
    }
    fn div(&self, o: &Self) -> Self {
        Frac::new(self.num * o.den, self.den * o.num)
    }
    fn floor(&self) -> I {
        self.num.div_floor(&self.den)
    }
}

/// Solve `λ · m = y` over ℚ for square nonsingular `m`.
fn solve_rational<I: LatticeInt>(m: &Mat<I>, y: &[I]) -> Vec<Frac<I>> {
    let n = m.rows;
    // augmented [mᵀ | yᵀ] column-solve: work on columns as equations
    let mut a: Vec<Vec<Frac<I>>> = (0..n)
        .map(|j| {
            let mut row: Vec<Frac<I>> = (0..n).map(|i| Frac::from_int(m[(i, j)])).collect();
            row.push(Frac::from_int(y[j]));
            row
        })
        .collect();
    // gaussian elimination
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular simplex matrix");
        a.swap(col, piv);
        let p = a[col][col];
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].div(&p);
                for c in col..=n {
                    let t = a[r][c].sub(&factor.mul(&a[col][c]));
                    a[r][c] = t;
                }
            }
        }
    }
    (0..n).map(|r| a[r][n].div(&a[r][r])).collect()
}

/// Lattice points of the half-open fundamental parallelepiped
/// `{Σ λᵢ rᵢ : 0 ≤ λᵢ < 1}` of a simplicial cone (excluding the origin).
pub fn parallelepiped_points<I: LatticeInt>(
    dim: usize,
    simplex: &[Vec<I>],
    caps: &Caps,
) -> Result<Vec<Vec<I>>> {
    let r = Mat::from_rows(simplex, dim);
    let hn = mat::hnf(&r);
    assert_eq!(hn.pivots.len(), dim, "simplex rays are dependent");
    let mut index = I::one();
    for i in 0..dim {
        index *= hn.h[(i, i)];
    }
    let count = index.as_int() as u64;
    if count > caps.hilbert_candidates {
        return Err(MonoidError::ResourceCap {
            operation: "parallelepiped_points",
            detail: format!("parallelepiped of index {count}"),
            cap: caps.hilbert_candidates,
        });
    }
    if count == 1 {
        return Ok(Vec::new());
    }
    // coset representatives modulo the HNF basis: 0 ≤ y_i < h[i][i]
    let radices: Vec<i64> = (0..dim).map(|i| hn.h[(i, i)].as_int()).collect();
    let mut out = Vec::new();
    let mut counter = vec![0i64; dim];
    loop {
        let y: Vec<I> = counter.iter().map(|&v| I::from_int(v)).collect();
        if !mat::is_zero_vec(&y) {
            let lambda = solve_rational(&r, &y);
            let mut x = y.clone();
            for (i, l) in lambda.iter().enumerate() {
                let f = l.floor();
                if !f.is_zero() {
                    x = mat::sub_vec(&x, &mat::scale(simplex[i].as_slice(), f));
                }
            }
            if !mat::is_zero_vec(&x) {
                out.push(x);
            }
        }
        // increment mixed-radix counter
        let mut i = 0;
        loop {
            if i == dim {
                out.sort();
                out.dedup();
                return Ok(out);
            }
            counter[i] += 1;
            if counter[i] < radices[i] {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
    }
}

/// Hilbert data of `cone(gens) ∩ ℤ^dim`: the monoid is
/// `(±unit_directions + torsion-free lineality part) ⊕ ⟨positives⟩`.
#[derive(Clone, Debug)]
pub struct ConeHilbert<I> {
    /// basis of the lineality lattice (each direction invertible)
    pub unit_directions: Vec<Vec<I>>,
    /// Hilbert basis of the pointed part, lifted into `ℤ^dim`
    pub positives: Vec<Vec<I>>,
}

/// Hilbert basis of `cone(gens) ∩ ℤ^dim` (cone may be non-pointed or
/// lower-dimensional).
pub fn hilbert_basis<I: LatticeInt>(
    dim: usize,
    gens: &[Vec<I>],
    caps: &Caps,
) -> Result<ConeHilbert<I>> {
    let nz: Vec<Vec<I>> = gens
        .iter()
        .filter(|g| !mat::is_zero_vec(g))
        .map(|g| reduce_gcd(g))
        .collect();
    if nz.is_empty() {
        return Ok(ConeHilbert { unit_directions: Vec::new(), positives: Vec::new() });
    }
    // restrict to the saturated span lattice so the cone is full-dimensional
    let gen_mat = Mat::from_rows(&nz, dim);
    let orth = mat::kernel(&gen_mat.transpose());
    let span = if orth.is_empty() {
        Mat::<I>::identity(dim).rows_vec()
    } else {
        mat::kernel(&Mat::from_rows(&orth, dim).transpose())
    };
    if span.len() < dim {
        let lat = mat::Lattice::from_rows(&span, dim);
        let inner: Vec<Vec<I>> = nz
            .iter()
            .map(|g| lat.coords(g).expect("generator lies in saturated span"))
            .collect();
        let sub = hilbert_basis(span.len(), &inner, caps)?;
        let back = |v: &Vec<I>| -> Vec<I> {
            let mut out = vec![I::zero(); dim];
            for (c, b) in v.iter().zip(&lat.basis) {
                out = mat::add_vec(&out, &mat::scale(b, *c));
            }
            out
        };
        return Ok(ConeHilbert {
            unit_directions: sub.unit_directions.iter().map(&back).collect(),
            positives: sub.positives.iter().map(&back).collect(),
        });
    }
    // full-dimensional: split off lineality
    let hd = hdesc_of_cone(dim, &nz);
    let lin = hd.lineality_lattice();
    if !lin.is_empty() {
        let lin_mat = Mat::from_rows(&lin, dim);
        let f = mat::snf(&lin_mat);
        let l = f.rank;
        for i in 0..l {
            assert!(f.d[(i, i)].is_one(), "lineality lattice must be saturated");
        }
        let t_inv = mat::unimodular_inverse(&f.t);
        // y = x·t puts the lineality on the first l coordinates
        let proj = |x: &[I]| -> Vec<I> {
            let mut y = vec![I::zero(); dim];
            for (j, yj) in y.iter_mut().enumerate() {
                let mut acc = I::zero();
                for (i, xi) in x.iter().enumerate() {
                    acc += *xi * f.t[(i, j)];
                }
                *yj = acc;
            }
            y[l..].to_vec()
        };
        let lift = |z: &[I]| -> Vec<I> {
            let mut y = vec![I::zero(); dim];
            y[l..].copy_from_slice(z);
            let mut x = vec![I::zero(); dim];
            for (j, xj) in x.iter_mut().enumerate() {
                let mut acc = I::zero();
                for (i, yi) in y.iter().enumerate() {
                    acc += *yi * t_inv[(i, j)];
                }
                *xj = acc;
            }
            x
        };
        let projected: Vec<Vec<I>> = nz.iter().map(|g| proj(g)).collect();
        let sub = hilbert_basis(dim - l, &projected, caps)?;
        assert!(sub.unit_directions.is_empty(), "quotient by lineality is pointed");
        let mut positives: Vec<Vec<I>> = sub.positives.iter().map(|z| lift(z)).collect();
        for p in &positives {
            debug_assert!(hd.contains(p), "lift escaped the cone");
        }
        positives.sort();
        return Ok(ConeHilbert { unit_directions: lin, positives });
    }
    // pointed, full-dimensional
    assert!(hd.equalities.is_empty(), "full-dimensional cone has no equalities");
    let rays = extreme_rays(&hd, &nz);
    let simplices = triangulate(dim, &rays);
    let mut candidates: std::collections::BTreeSet<Vec<I>> = rays.iter().cloned().collect();
    let mut budget = caps.hilbert_candidates;
    for s in &simplices {
        let simplex: Vec<Vec<I>> = s.iter().map(|&k| rays[k].clone()).collect();
        let pts = parallelepiped_points(dim, &simplex, caps)?;
        if (pts.len() as u64) > budget {
            return Err(MonoidError::ResourceCap {
                operation: "hilbert_basis",
                detail: "total candidate count".into(),
                cap: caps.hilbert_candidates,
            });
        }
        budget -= pts.len() as u64;
        candidates.extend(pts);
    }
    let cand: Vec<Vec<I>> = candidates.into_iter().collect();
    let mut positives = Vec::new();
    for x in &cand {
        let reducible = cand.iter().any(|y| {
            y != x && {
                let diff = mat::sub_vec(x, y);
                !mat::is_zero_vec(&diff) && hd.contains(&diff)
            }
        });
        if !reducible {
            positives.push(x.clone());
        }
    }
    positives.sort();
    Ok(ConeHilbert { unit_directions: Vec::new(), positives })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn quadrant_hilbert_basis() {
        let hb = hilbert_basis(2, &[vec![1, 0], vec![0, 1]], &caps()).unwrap();
        assert!(hb.unit_directions.is_empty());
        assert_eq!(hb.positives, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn numerical_semigroup_saturates_to_n() {
        let hb = hilbert_basis(1, &[vec![2], vec![3]], &caps()).unwrap();
        assert_eq!(hb.positives, vec![vec![1]]);
    }

    #[test]
    fn halfplane_has_unit_direction() {
        // cone(e1, -e1, e2) = upper half plane
        let hb = hilbert_basis(2, &[vec![1, 0], vec![-1, 0], vec![0, 1]], &caps()).unwrap();
        assert_eq!(hb.unit_directions.len(), 1);
        assert_eq!(reduce_gcd(&hb.unit_directions[0]), vec![1, 0]);
        assert_eq!(hb.positives.len(), 1);
    }

    #[test]
    fn simplicial_with_interior_point() {
        // cone((1,0), (1,2)): index-2 parallelepiped contributes (1,1)
        let hb = hilbert_basis(2, &[vec![1, 0], vec![1, 2]], &caps()).unwrap();
        assert_eq!(hb.positives, vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn non_simplicial_cone() {
        // four rays of a square-based cone in ℚ³
        let gens = vec![vec![1, 0, 1], vec![0, 1, 1], vec![-1, 0, 1], vec![0, -1, 1]];
        let hb = hilbert_basis(3, &gens, &caps()).unwrap();
        assert!(hb.unit_directions.is_empty());
        let mut expect = gens.clone();
        expect.push(vec![0, 0, 1]);
        expect.sort();
        assert_eq!(hb.positives, expect);
    }

    #[test]
    fn hexagonal_cone_needs_the_center() {
        // cone over a unit hexagon at height 1: the Hilbert basis is the
        // six vertices plus the center of the hexagon
        let gens = vec![
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![-1, 1, 1],
            vec![-1, 0, 1],
            vec![0, -1, 1],
            vec![1, -1, 1],
        ];
        let hb = hilbert_basis(3, &gens, &caps()).unwrap();
        assert!(hb.unit_directions.is_empty());
        let mut expect = gens.clone();
        expect.push(vec![0, 0, 1]);
        expect.sort();
        assert_eq!(hb.positives, expect);
    }

    #[test]
    fn index_two_simplex_in_three_dimensions() {
        let gens = vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 2]];
        let hb = hilbert_basis(3, &gens, &caps()).unwrap();
        let mut expect = gens.clone();
        expect.push(vec![1, 1, 1]);
        expect.sort();
        assert_eq!(hb.positives, expect);
    }

    #[test]
    fn lower_dimensional_cone() {
        let hb = hilbert_basis(3, &[vec![2, 2, 0], vec![1, 1, 0]], &caps()).unwrap();
        assert_eq!(hb.positives, vec![vec![1, 1, 0]]);
    }

    #[test]
    fn whole_line_is_units() {
        let hb = hilbert_basis(1, &[vec![1], vec![-1]], &caps()).unwrap();
        assert_eq!(hb.unit_directions.len(), 1);
        assert!(hb.positives.is_empty());
    }

    #[test]
    fn extreme_rays_of_a_lower_dimensional_cone() {
        // cone((1,1,0), (0,1,0)) lives in the plane z = 0 inside ℚ³
        let gens = vec![vec![1, 1, 0], vec![0, 1, 0], vec![1, 2, 0]];
        let hd = hdesc_of_cone(3, &gens);
        assert_eq!(mat::rank(&hd.equalities, 3), 1);
        let rays = extreme_rays(&hd, &gens);
        assert_eq!(rays, vec![vec![0, 1, 0], vec![1, 1, 0]]);
    }

    #[test]
    fn facets_of_quadrant() {
        let hd = hdesc_of_cone(2, &[vec![1, 0], vec![0, 1]]);
        assert!(hd.equalities.is_empty());
        assert_eq!(hd.facets.len(), 2);
        assert!(hd.contains(&[3, 5]));
        assert!(!hd.contains(&[-1, 0]));
    }
}
