//! Finitely generated abelian groups in invariant-factor form, and the
//! presentation machinery: quotients of free groups by relation lattices,
//! quotients of one lattice by another, subgroup presentations.

use crate::error::{MonoidError, Result};
use crate::mat::{self, Lattice, Mat};
use crate::scalar::LatticeInt;

/// `ℤ^free_rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/dₖ` with `d₁ | d₂ | … | dₖ`, each `dᵢ ≥ 2`.
///
/// Elements are integer row vectors laid out `[free…, torsion…]`, torsion
/// coordinates reduced into `[0, dᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup<I> {
    pub free_rank: usize,
    pub torsion_factors: Vec<I>,
}

impl<I: LatticeInt> AbelianGroup<I> {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion_factors: Vec::new() }
    }

    pub fn new(free_rank: usize, torsion_factors: Vec<I>) -> Result<Self> {
        let two = I::from_int(2);
        for w in torsion_factors.windows(2) {
            if !w[1].is_multiple_of(&w[0]) {
                return Err(MonoidError::InvalidInput(format!(
                    "torsion factors not a divisor chain: {} ∤ {}",
                    w[0], w[1]
                )));
            }
        }
        if torsion_factors.iter().any(|d| *d < two) {
            return Err(MonoidError::InvalidInput(
                "torsion factors must be ≥ 2".into(),
            ));
        }
        Ok(AbelianGroup { free_rank, torsion_factors })
    }

    /// Number of coordinates of an element.
    pub fn arity(&self) -> usize {
        self.free_rank + self.torsion_factors.len()
    }

    pub fn zero(&self) -> Vec<I> {
        vec![I::zero(); self.arity()]
    }

    pub fn is_trivial(&self) -> bool {
        self.arity() == 0
    }

    /// `None` when the group is infinite.
    pub fn order(&self) -> Option<I> {
        if self.free_rank > 0 {
            return None;
        }
        let mut o = I::one();
        for d in &self.torsion_factors {
            o *= *d;
        }
        Some(o)
    }

    /// Exponent of the torsion part (1 when torsion-free).
    pub fn torsion_exponent(&self) -> I {
        self.torsion_factors.last().copied().unwrap_or_else(I::one)
    }

    pub fn reduce(&self, v: &[I]) -> Vec<I> {
        assert_eq!(v.len(), self.arity(), "element arity mismatch");
        let mut out = v.to_vec();
        for (k, d) in self.torsion_factors.iter().enumerate() {
            let j = self.free_rank + k;
            out[j] = out[j].mod_floor(d);
        }
        out
    }

    pub fn add(&self, a: &[I], b: &[I]) -> Vec<I> {
        self.reduce(&mat::add_vec(a, b))
    }

    pub fn neg(&self, a: &[I]) -> Vec<I> {
        self.reduce(&mat::neg_vec(a))
    }

    pub fn scale(&self, a: &[I], c: I) -> Vec<I> {
        self.reduce(&mat::scale(a, c))
    }

    pub fn free_part<'a>(&self, v: &'a [I]) -> &'a [I] {
        &v[..self.free_rank]
    }

    pub fn torsion_part<'a>(&self, v: &'a [I]) -> &'a [I] {
        &v[self.free_rank..]
    }

    /// Rows `dᵢ · e_{free_rank+i}` — the relation lattice of the
    /// presentation inside `ℤ^arity`.
    pub fn relation_rows(&self) -> Vec<Vec<I>> {
        let n = self.arity();
        self.torsion_factors
            .iter()
            .enumerate()
            .map(|(k, d)| {
                let mut r = vec![I::zero(); n];
                r[self.free_rank + k] = *d;
                r
            })
            .collect()
    }

    /// Direct sum, re-normalized to a divisor chain.
    pub fn direct_sum(&self, other: &AbelianGroup<I>) -> AbelianGroup<I> {
        let mut rows = Vec::new();
        let n = self.torsion_factors.len() + other.torsion_factors.len();
        for (k, d) in self.torsion_factors.iter().chain(&other.torsion_factors).enumerate() {
            let mut r = vec![I::zero(); n];
            r[k] = *d;
            rows.push(r);
        }
        let q = present_quotient(n, &rows);
        AbelianGroup {
            free_rank: self.free_rank + other.free_rank + q.group.free_rank,
            torsion_factors: q.group.torsion_factors,
        }
    }
}

/// Presentation of `ℤ^n / span(relations)` together with the coordinate map.
pub struct QuotientPresentation<I> {
    pub group: AbelianGroup<I>,
    /// column transform from the Smith form: `y = x · t`
    t: Mat<I>,
    /// columns of `y` that survive as free coordinates
    free_cols: Vec<usize>,
    /// columns of `y` that survive as torsion coordinates, with their factor
    torsion_cols: Vec<(usize, I)>,
}

impl<I: LatticeInt> QuotientPresentation<I> {
    /// Image of `x ∈ ℤ^n` in the quotient, in canonical coordinates.
    pub fn project(&self, x: &[I]) -> Vec<I> {
        assert_eq!(x.len(), self.t.rows);
        let mut y = vec![I::zero(); self.t.cols];
        for (j, yj) in y.iter_mut().enumerate() {
            let mut acc = I::zero();
            for (i, xi) in x.iter().enumerate() {
                acc += *xi * self.t[(i, j)];
            }
            *yj = acc;
        }
        let mut out = Vec::with_capacity(self.group.arity());
        for &j in &self.free_cols {
            out.push(y[j]);
        }
        for &(j, d) in &self.torsion_cols {
            out.push(y[j].mod_floor(&d));
        }
        out
    }
}

/// Present `ℤ^n / span(relations)` in invariant-factor form.
pub fn present_quotient<I: LatticeInt>(n: usize, relations: &[Vec<I>]) -> QuotientPresentation<I> {
    let rel = if relations.is_empty() {
        Mat::zero(1, n)
    } else {
        Mat::from_rows(relations, n)
    };
    let f = mat::snf(&rel);
    let mut torsion_cols = Vec::new();
    for i in 0..f.rank {
        let d = f.d[(i, i)];
        if d > I::one() {
            torsion_cols.push((i, d));
        }
    }
    let free_cols: Vec<usize> = (f.rank..n).collect();
    let group = AbelianGroup {
        free_rank: free_cols.len(),
        torsion_factors: torsion_cols.iter().map(|&(_, d)| d).collect(),
    };
    QuotientPresentation { group, t: f.t, free_cols, torsion_cols }
}

/// Isomorphism type of `span(big) / span(small)`; `small` must be a
/// sublattice of `big`.
pub fn lattice_quotient<I: LatticeInt>(
    big: &[Vec<I>],
    small: &[Vec<I>],
    cols: usize,
) -> Result<AbelianGroup<I>> {
    let big_lat = Lattice::from_rows(big, cols);
    let s = big_lat.rank();
    let mut coord_rows = Vec::new();
    for r in small {
        let c = big_lat.coords(r).ok_or_else(|| {
            MonoidError::InvalidInput("lattice_quotient: not a sublattice".into())
        })?;
        coord_rows.push(c);
    }
    Ok(present_quotient(s, &coord_rows).group)
}

/// Presentation of the subgroup of `ambient` generated by `gens`
/// (the groupification of the monoid they generate).
pub fn subgroup_presentation<I: LatticeInt>(
    ambient: &AbelianGroup<I>,
    gens: &[Vec<I>],
) -> AbelianGroup<I> {
    let n = ambient.arity();
    let mut big: Vec<Vec<I>> = gens.to_vec();
    big.extend(ambient.relation_rows());
    let small = ambient.relation_rows();
    if big.is_empty() {
        return AbelianGroup::free(0);
    }
    lattice_quotient(&big, &small, n).expect("relation rows lie in the generated lattice")
}

/// Subgroup of `ambient` (as reduced element set machinery): spanned by
/// `gens`; membership and canonical coset representatives.
#[derive(Clone, Debug)]
pub struct Subgroup<I> {
    pub ambient: AbelianGroup<I>,
    /// lattice in `ℤ^arity` containing the ambient relations
    pub lattice: Lattice<I>,
}

impl<I: LatticeInt> Subgroup<I> {
    pub fn new(ambient: &AbelianGroup<I>, gens: &[Vec<I>]) -> Self {
        let mut rows: Vec<Vec<I>> = gens.to_vec();
        rows.extend(ambient.relation_rows());
        Subgroup {
            ambient: ambient.clone(),
            lattice: Lattice::from_rows(&rows, ambient.arity()),
        }
    }

    pub fn contains(&self, v: &[I]) -> bool {
        self.lattice.contains(v)
    }

    pub fn presentation(&self) -> AbelianGroup<I> {
        lattice_quotient(
            &self.lattice.basis,
            &self.ambient.relation_rows(),
            self.ambient.arity(),
        )
        .expect("ambient relations lie in subgroup lattice")
    }
}
