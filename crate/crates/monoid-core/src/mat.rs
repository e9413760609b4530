//! Dense integer matrices with the normal forms the rest of the crate is
//! built on: row Hermite form (canonical lattice bases, solving), Smith
//! form with transforms (presentations of quotients), kernels and
//! intersections of row lattices.
//!
//! Conventions: vectors are row vectors, a lattice is the set of integer
//! combinations of the rows of a matrix, and a homomorphism given by a
//! matrix `M` acts as `x ↦ x · M`.

use crate::scalar::LatticeInt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<I> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<I>,
}

impl<I: std::fmt::Debug> std::fmt::Debug for Mat<I> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<I: LatticeInt> Mat<I> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![I::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = I::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<I>], cols: usize) -> Self {
        let mut m = Mat::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row arity mismatch");
            for (j, v) in r.iter().enumerate() {
                m[(i, j)] = *v;
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> &[I] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<I> {
        self.row(i).to_vec()
    }

    pub fn rows_vec(&self) -> Vec<Vec<I>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn transpose(&self) -> Mat<I> {
        let mut t = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat<I>) -> Mat<I> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = out[(i, j)] + a * other[(k, j)];
                    out[(i, j)] = t;
                }
            }
        }
        out
    }

    pub fn stack(top: &Mat<I>, bottom: &Mat<I>) -> Mat<I> {
        assert_eq!(top.cols, bottom.cols);
        let mut rows = top.rows_vec();
        rows.extend(bottom.rows_vec());
        Mat::from_rows(&rows, top.cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let t = self[(a, j)];
            self[(a, j)] = self[(b, j)];
            self[(b, j)] = t;
        }
    }

    /// row(a) += c * row(b)
    fn add_row_mul(&mut self, a: usize, b: usize, c: I) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = self[(a, j)] + c * self[(b, j)];
            self[(a, j)] = t;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            self[(a, j)] = -self[(a, j)];
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let t = self[(i, a)];
            self[(i, a)] = self[(i, b)];
            self[(i, b)] = t;
        }
    }

    fn add_col_mul(&mut self, a: usize, b: usize, c: I) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = self[(i, a)] + c * self[(i, b)];
            self[(i, a)] = t;
        }
    }

}

impl<I: LatticeInt> std::ops::Index<(usize, usize)> for Mat<I> {
    type Output = I;
    fn index(&self, (i, j): (usize, usize)) -> &I {
        &self.data[i * self.cols + j]
    }
}

impl<I: LatticeInt> std::ops::IndexMut<(usize, usize)> for Mat<I> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut I {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot<I: LatticeInt>(a: &[I], b: &[I]) -> I {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(I::zero(), |acc, (x, y)| acc + *x * *y)
}

pub fn scale<I: LatticeInt>(v: &[I], c: I) -> Vec<I> {
    v.iter().map(|x| *x * c).collect()
}

pub fn add_vec<I: LatticeInt>(a: &[I], b: &[I]) -> Vec<I> {
    a.iter().zip(b).map(|(x, y)| *x + *y).collect()
}

pub fn sub_vec<I: LatticeInt>(a: &[I], b: &[I]) -> Vec<I> {
    a.iter().zip(b).map(|(x, y)| *x - *y).collect()
}

pub fn neg_vec<I: LatticeInt>(a: &[I]) -> Vec<I> {
    a.iter().map(|x| -*x).collect()
}

pub fn is_zero_vec<I: LatticeInt>(a: &[I]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Divide out the gcd of the entries (sign normalized so the first nonzero
/// entry is positive). The zero vector is returned unchanged.
pub fn primitive<I: LatticeInt>(v: &[I]) -> Vec<I> {
    let mut g = I::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    let mut out: Vec<I> = v.iter().map(|x| *x / g).collect();
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            out = neg_vec(&out);
        }
    }
    out
}

/// Result of the row Hermite normal form: `u * a = h` with `u` unimodular,
/// `h` in canonical row echelon form (positive pivots, entries above a pivot
/// reduced into `[0, pivot)`), zero rows at the bottom.
pub struct Hnf<I> {
    pub h: Mat<I>,
    pub u: Mat<I>,
    /// pivot column of each nonzero row of `h`
    pub pivots: Vec<usize>,
}

pub fn hnf<I: LatticeInt>(a: &Mat<I>) -> Hnf<I> {
    let mut h = a.clone();
    let mut u = Mat::identity(a.rows);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for j in 0..h.cols {
        if r == h.rows {
            break;
        }
        // clear column j below row r down to a single pivot
        loop {
            let mut best: Option<usize> = None;
            for i in r..h.rows {
                if !h[(i, j)].is_zero() {
                    best = match best {
                        None => Some(i),
                        Some(b) => {
                            if h[(i, j)].abs() < h[(b, j)].abs() {
                                Some(i)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(r, b);
            u.swap_rows(r, b);
            let piv = h[(r, j)];
            let mut done = true;
            for i in (r + 1)..h.rows {
                if !h[(i, j)].is_zero() {
                    let q = h[(i, j)].div_floor(&piv);
                    h.add_row_mul(i, r, -q);
                    u.add_row_mul(i, r, -q);
                    if !h[(i, j)].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < h.rows && !h[(r, j)].is_zero() {
            if h[(r, j)].is_negative() {
                h.negate_row(r);
                u.negate_row(r);
            }
            let piv = h[(r, j)];
            for i in 0..r {
                let q = h[(i, j)].div_floor(&piv);
                h.add_row_mul(i, r, -q);
                u.add_row_mul(i, r, -q);
            }
            pivots.push(j);
            r += 1;
        }
    }
    Hnf { h, u, pivots }
}

/// Canonical basis of the lattice spanned by `rows` (nonzero HNF rows).
pub fn lattice_basis<I: LatticeInt>(rows: &[Vec<I>], cols: usize) -> Vec<Vec<I>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let hn = hnf(&Mat::from_rows(rows, cols));
    (0..hn.pivots.len()).map(|i| hn.h.row_vec(i)).collect()
}

pub fn rank<I: LatticeInt>(rows: &[Vec<I>], cols: usize) -> usize {
    lattice_basis(rows, cols).len()
}

/// Solve `x · basis_mat = v` over the integers, where the rows of
/// `basis_mat` are an echelon (HNF) basis. Returns the coefficient vector or
/// `None` when `v` is not in the lattice.
pub fn solve_in_basis<I: LatticeInt>(basis: &[Vec<I>], pivots: &[usize], v: &[I]) -> Option<Vec<I>> {
    let mut rem = v.to_vec();
    let mut coeffs = vec![I::zero(); basis.len()];
    for (i, &pj) in pivots.iter().enumerate() {
        let piv = basis[i][pj];
        if !rem[pj].is_multiple_of(&piv) {
            return None;
        }
        let c = rem[pj] / piv;
        if !c.is_zero() {
            rem = sub_vec(&rem, &scale(&basis[i], c));
        }
        coeffs[i] = c;
    }
    if is_zero_vec(&rem) {
        Some(coeffs)
    } else {
        None
    }
}

/// A lattice with its canonical basis and solve support.
#[derive(Clone, Debug)]
pub struct Lattice<I> {
    pub cols: usize,
    pub basis: Vec<Vec<I>>,
    pub pivots: Vec<usize>,
}

impl<I: LatticeInt> Lattice<I> {
    pub fn from_rows(rows: &[Vec<I>], cols: usize) -> Self {
        let hn = hnf(&Mat::from_rows(rows, cols));
        let basis: Vec<Vec<I>> = (0..hn.pivots.len()).map(|i| hn.h.row_vec(i)).collect();
        Lattice { cols, basis, pivots: hn.pivots }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[I]) -> bool {
        self.coords(v).is_some()
    }

    pub fn coords(&self, v: &[I]) -> Option<Vec<I>> {
        solve_in_basis(&self.basis, &self.pivots, v)
    }

    /// Inclusion test as sublattice.
    pub fn is_sublattice_of(&self, other: &Lattice<I>) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }
}

/// Kernel lattice of `x ↦ x · m` (canonical basis).
pub fn kernel<I: LatticeInt>(m: &Mat<I>) -> Vec<Vec<I>> {
    // HNF of [m | I]: rows whose m-part vanished carry the kernel in the
    // identity block.
    let n = m.rows;
    let mut aug = Mat::zero(n, m.cols + n);
    for i in 0..n {
        for j in 0..m.cols {
            aug[(i, j)] = m[(i, j)];
        }
        aug[(i, m.cols + i)] = I::one();
    }
    let hn = hnf(&aug);
    let mut out = Vec::new();
    for i in 0..n {
        let r = hn.h.row(i);
        if r[..m.cols].iter().all(|x| x.is_zero()) && !is_zero_vec(&r[m.cols..]) {
            out.push(r[m.cols..].to_vec());
        }
    }
    lattice_basis(&out, n)
}

/// Intersection of two row lattices.
pub fn lattice_intersect<I: LatticeInt>(a: &[Vec<I>], b: &[Vec<I>], cols: usize) -> Vec<Vec<I>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // u·A = w·B  ⇔  (u, w) ∈ ker[(A; -B)]
    let mut rows = a.to_vec();
    for r in b {
        rows.push(neg_vec(r));
    }
    let ker_rows = row_combination_kernel(&rows, cols);
    let mut out = Vec::new();
    for z in ker_rows {
        let u = &z[..a.len()];
        let mut v = vec![I::zero(); cols];
        for (c, row) in u.iter().zip(a) {
            v = add_vec(&v, &scale(row, *c));
        }
        if !is_zero_vec(&v) {
            out.push(v);
        }
    }
    lattice_basis(&out, cols)
}

/// Kernel of the row-combination map `z ↦ Σ z_i · rows_i`.
pub fn row_combination_kernel<I: LatticeInt>(rows: &[Vec<I>], cols: usize) -> Vec<Vec<I>> {
    kernel(&Mat::from_rows(rows, cols))
}

/// Projection of the lattice `{x : x·m ∈ span(target_rows)}` — the full
/// preimage of a row lattice under `x ↦ x·m`.
pub fn preimage_lattice<I: LatticeInt>(
    m: &Mat<I>,
    target_rows: &[Vec<I>],
) -> Vec<Vec<I>> {
    // (x, y) with x·m - y·T = 0; project x.
    let mut rows = m.rows_vec();
    for t in target_rows {
        rows.push(neg_vec(t));
    }
    let ker = row_combination_kernel(&rows, m.cols);
    let mut out = Vec::new();
    for z in ker {
        out.push(z[..m.rows].to_vec());
    }
    lattice_basis(&out, m.rows)
}

/// Saturation of a row lattice: `span_ℚ(rows) ∩ ℤ^cols`.
pub fn lattice_saturation<I: LatticeInt>(rows: &[Vec<I>], cols: usize) -> Vec<Vec<I>> {
    let nz: Vec<Vec<I>> = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    if nz.is_empty() {
        return Vec::new();
    }
    let orth = kernel(&Mat::from_rows(&nz, cols).transpose());
    if orth.is_empty() {
        return Mat::<I>::identity(cols).rows_vec();
    }
    kernel(&Mat::from_rows(&orth, cols).transpose())
}

/// Smith normal form: `s * a * t = d` with `s`, `t` unimodular and `d`
/// diagonal with nonnegative entries in a divisor chain.
pub struct Snf<I> {
    pub d: Mat<I>,
    pub s: Mat<I>,
    pub t: Mat<I>,
    pub rank: usize,
}

impl<I: LatticeInt> Snf<I> {
    /// Diagonal entries `> 0` (the invariant factors, 1s included).
    pub fn diagonal(&self) -> Vec<I> {
        (0..self.rank).map(|i| self.d[(i, i)]).collect()
    }
}

pub fn snf<I: LatticeInt>(a: &Mat<I>) -> Snf<I> {
    let mut d = a.clone();
    let mut s = Mat::identity(a.rows);
    let mut t = Mat::identity(a.cols);
    let n = a.rows.min(a.cols);
    let mut k = 0usize;
    while k < n {
        // find a nonzero pivot in the trailing block
        let mut piv: Option<(usize, usize)> = None;
        for i in k..d.rows {
            for j in k..d.cols {
                if !d[(i, j)].is_zero() {
                    piv = match piv {
                        None => Some((i, j)),
                        Some((pi, pj)) => {
                            if d[(i, j)].abs() < d[(pi, pj)].abs() {
                                Some((i, j))
                            } else {
                                Some((pi, pj))
                            }
                        }
                    };
                }
            }
        }
        let Some((pi, pj)) = piv else { break };
        d.swap_rows(k, pi);
        s.swap_rows(k, pi);
        d.swap_cols(k, pj);
        t.swap_cols(k, pj);
        // clear row and column k
        let mut clean = true;
        for i in (k + 1)..d.rows {
            if !d[(i, k)].is_zero() {
                let q = d[(i, k)].div_floor(&d[(k, k)]);
                d.add_row_mul(i, k, -q);
                s.add_row_mul(i, k, -q);
                if !d[(i, k)].is_zero() {
                    clean = false;
                }
            }
        }
        for j in (k + 1)..d.cols {
            if !d[(k, j)].is_zero() {
                let q = d[(k, j)].div_floor(&d[(k, k)]);
                d.add_col_mul(j, k, -q);
                t.add_col_mul(j, k, -q);
                if !d[(k, j)].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // divisibility: d[k,k] must divide the trailing block
        let piv_val = d[(k, k)];
        let mut offender: Option<usize> = None;
        'outer: for i in (k + 1)..d.rows {
            for j in (k + 1)..d.cols {
                if !d[(i, j)].is_multiple_of(&piv_val) {
                    offender = Some(i);
                    break 'outer;
                }
            }
        }
        if let Some(i) = offender {
            d.add_row_mul(k, i, I::one());
            s.add_row_mul(k, i, I::one());
            continue;
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            s.negate_row(k);
        }
        k += 1;
    }
    let rank = k;
    Snf { d, s, t, rank }
}

/// Inverse of a unimodular matrix.
pub fn unimodular_inverse<I: LatticeInt>(m: &Mat<I>) -> Mat<I> {
    assert_eq!(m.rows, m.cols);
    let hn = hnf(m);
    // h must be the identity for a unimodular matrix
    for i in 0..m.rows {
        for j in 0..m.cols {
            let want = if i == j { I::one() } else { I::zero() };
            assert!(hn.h[(i, j)] == want, "matrix is not unimodular");
        }
    }
    hn.u
}

/// |det| of a square matrix (product of HNF pivots).
pub fn abs_det<I: LatticeInt>(m: &Mat<I>) -> I {
    assert_eq!(m.rows, m.cols);
    let hn = hnf(m);
    if hn.pivots.len() < m.rows {
        return I::zero();
    }
    let mut p = I::one();
    for i in 0..m.rows {
        p *= hn.h[(i, i)];
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = Mat<i64>;

    #[test]
    fn hnf_solves_membership() {
        let lat = Lattice::from_rows(&[vec![2, 0], vec![0, 3]], 2);
        assert!(lat.contains(&[4, 3]));
        assert!(!lat.contains(&[1, 0]));
        assert_eq!(lat.coords(&[4, 3]), Some(vec![2, 1]));
    }

    #[test]
    fn snf_divisor_chain() {
        let m = M::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]], 3);
        let f = snf(&m);
        assert_eq!(f.diagonal(), vec![2, 2, 156]);
        // s * a * t == d
        let lhs = f.s.mul(&m).mul(&f.t);
        assert_eq!(lhs, f.d);
    }

    #[test]
    fn kernel_is_exact() {
        // x + y + z = 0 and x - z = 0 as the kernel of a 3x2 map
        let m = M::from_rows(&[vec![1, 1], vec![1, 0], vec![1, -1]], 2);
        let k = kernel(&m);
        assert_eq!(k.len(), 1);
        assert_eq!(primitive(&k[0]), vec![1, -2, 1]);
    }

    #[test]
    fn intersect_lattices() {
        let a = vec![vec![2, 0], vec![0, 1]];
        let b = vec![vec![1, 0], vec![0, 3]];
        let i = lattice_intersect(&a, &b, 2);
        assert_eq!(i, vec![vec![2, 0], vec![0, 3]]);
    }

    #[test]
    fn unimodular_roundtrip() {
        let m = M::from_rows(&[vec![1, 2], vec![1, 3]], 2);
        let inv = unimodular_inverse(&m);
        assert_eq!(m.mul(&inv), M::identity(2));
    }

    #[test]
    fn det_via_hnf() {
        let m = M::from_rows(&[vec![2, 1], vec![0, 3]], 2);
        assert_eq!(abs_det(&m), 6);
    }
}
