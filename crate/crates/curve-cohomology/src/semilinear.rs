//! Frobenius-semilinear operators on `F_q`-spaces and the dense exact
//! linear algebra (over `F_q` and over the prime field) used throughout.

use crate::fq::{Fq, FqElem};

/// An additive operator `F` with `F(c·v) = c^p·F(v)`.
/// `mat[i][j]` is the coefficient of basis vector `i` in `F(e_j)`.
#[derive(Clone, Debug)]
pub struct SemilinearOp {
    pub fq: Fq,
    pub dim: usize,
    pub mat: Vec<Vec<FqElem>>,
}

impl SemilinearOp {
    pub fn apply(&self, v: &[FqElem]) -> Vec<FqElem> {
        let mut out = vec![0; self.dim];
        for (j, c) in v.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let cp = self.fq.frob(*c);
            for i in 0..self.dim {
                out[i] = self.fq.add(out[i], self.fq.mul(cp, self.mat[i][j]));
            }
        }
        out
    }
}

/// Rank of a matrix over `F_q` (rows are consumed).
pub fn fq_rank(fq: &Fq, mut rows: Vec<Vec<FqElem>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = fq.inv(rows[rank][col]).expect("pivot nonzero");
        for c in col..cols {
            rows[rank][c] = fq.mul(rows[rank][c], inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in col..cols {
                    let t = fq.sub(rows[r][c], fq.mul(f, rows[rank][c]));
                    rows[r][c] = t;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Inverse of a square matrix over `F_q`; `None` when singular.
pub fn fq_invert(fq: &Fq, m: &[Vec<FqElem>]) -> Option<Vec<Vec<FqElem>>> {
    let n = m.len();
    let mut a: Vec<Vec<FqElem>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { 1 } else { 0 }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        let inv = fq.inv(a[col][col]).ok()?;
        for c in 0..2 * n {
            a[col][c] = fq.mul(a[col][c], inv);
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..2 * n {
                    let t = fq.sub(a[r][c], fq.mul(f, a[col][c]));
                    a[r][c] = t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Rank of a matrix over the prime field `F_p`.
pub fn fp_rank(p: u32, mut rows: Vec<Vec<u32>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let inv_mod = |a: u32| -> u32 {
        // p is prime and a ≠ 0
        let mut x = 1u64;
        let mut base = a as u64;
        let mut k = p as u64 - 2;
        while k > 0 {
            if k & 1 == 1 {
                x = x * base % p as u64;
            }
            base = base * base % p as u64;
            k >>= 1;
        }
        x as u32
    };
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col] % p);
        for c in col..cols {
            rows[rank][c] = rows[rank][c] % p * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_multiple_of(p) {
                let f = rows[r][col] % p;
                for c in col..cols {
                    rows[r][c] = (rows[r][c] % p + p - rows[rank][c] % p * f % p) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Flatten a semilinear operator (optionally minus the identity) to an
/// `F_p`-linear matrix on the `dim·e` prime-field coordinates.
pub fn flatten_to_prime_field(op: &SemilinearOp, shift: u32) -> Vec<Vec<u32>> {
    let fq = &op.fq;
    let e = fq.e as usize;
    let n = op.dim * e;
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(n);
    for j in 0..op.dim {
        for k in 0..e {
            // basis element β_k e_j, β_k the k-th power of the generator
            let beta = fq.from_coords(
                &(0..e).map(|t| if t == k { 1 } else { 0 }).collect::<Vec<_>>(),
            );
            let beta_p = fq.frob(beta);
            let mut col = vec![0u32; n];
            for i in 0..op.dim {
                let w = fq.mul(beta_p, op.mat[i][j]);
                for (l, digit) in fq.coords(w).into_iter().enumerate() {
                    col[i * e + l] = digit;
                }
            }
            if shift != 0 {
                // subtract the identity on β_k e_j
                let idx = j * e + k;
                col[idx] = (col[idx] + fq.p - shift % fq.p) % fq.p;
            }
            cols.push(col);
        }
    }
    // transpose columns into rows
    (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
}

/// Exact dimension over `F_p` of `ker(F − shift·id)`: `shift = 0` gives the
/// kernel of the operator itself, `shift = 1` the fixed vectors.
pub fn semilinear_kernel_dim(op: &SemilinearOp, shift: u32) -> usize {
    let e = op.fq.e as usize;
    let n = op.dim * e;
    let flat = flatten_to_prime_field(op, shift);
    n - fp_rank(op.fq.p, flat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fq_rank_and_invert() {
        let f = Fq::new(2, 2).unwrap();
        let m = vec![vec![1, 2], vec![2, 1]];
        assert_eq!(fq_rank(&f, m.clone()), 2);
        let inv = fq_invert(&f, &m).unwrap();
        // m · inv = id
        for i in 0..2 {
            for j in 0..2 {
                let mut s = 0;
                for k in 0..2 {
                    s = f.add(s, f.mul(m[i][k], inv[k][j]));
                }
                assert_eq!(s, if i == j { 1 } else { 0 });
            }
        }
    }

    #[test]
    fn zero_operator_kernel_is_everything() {
        let f = Fq::new(3, 2).unwrap();
        let op = SemilinearOp { fq: f, dim: 2, mat: vec![vec![0, 0], vec![0, 0]] };
        assert_eq!(semilinear_kernel_dim(&op, 0), 4);
        // F − id = −id is invertible
        assert_eq!(semilinear_kernel_dim(&op, 1), 0);
    }

    #[test]
    fn frobenius_twist_of_identity() {
        // op = identity matrix as a semilinear map: F(v) = v^{(p)}; its
        // fixed space is the prime field in each coordinate
        let f = Fq::new(2, 2).unwrap();
        let op = SemilinearOp { fq: f, dim: 1, mat: vec![vec![1]] };
        assert_eq!(semilinear_kernel_dim(&op, 0), 0);
        assert_eq!(semilinear_kernel_dim(&op, 1), 1); // F_2 ⊂ F_4
    }

    #[test]
    fn semilinearity_of_apply() {
        let f = Fq::new(3, 2).unwrap();
        let op = SemilinearOp { fq: f.clone(), dim: 2, mat: vec![vec![4, 1], vec![0, 7]] };
        for c in f.elements() {
            for v0 in f.elements().take(5) {
                let v = vec![v0, 3];
                let cv: Vec<_> = v.iter().map(|x| f.mul(c, *x)).collect();
                let lhs = op.apply(&cv);
                let rhs: Vec<_> = op.apply(&v).iter().map(|x| f.mul(f.frob(c), *x)).collect();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
