//! The coefficient ring for torus actions: `R = F_q[t]/(t^d − 1)` with
//! `d = p^n`. In characteristic `p` this is `F_q[t]/((t−1)^d)`, a local
//! ring; the `d`-th roots of unity in it are exactly `1 + (t−1)·R`.

use crate::error::{CurveError, Result};
use crate::fq::{Fq, FqElem};

/// Element of `F_q[t]/(t^d − 1)`: exactly `d` coefficients, index = power
/// of `t`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrElem {
    pub c: Vec<FqElem>,
}

#[derive(Clone, Debug)]
pub struct GroupRing {
    pub fq: Fq,
    pub d: usize,
}

impl GroupRing {
    pub fn new(fq: Fq, d: usize) -> Self {
        GroupRing { fq, d }
    }

    pub fn zero(&self) -> GrElem {
        GrElem { c: vec![0; self.d] }
    }

    pub fn one(&self) -> GrElem {
        let mut z = self.zero();
        z.c[0] = 1;
        z
    }

    /// The generator `t`.
    pub fn t(&self) -> GrElem {
        let mut z = self.zero();
        if self.d == 1 {
            z.c[0] = 1;
        } else {
            z.c[1] = 1;
        }
        z
    }

    pub fn from_fq(&self, a: FqElem) -> GrElem {
        let mut z = self.zero();
        z.c[0] = a;
        z
    }

    pub fn is_zero(&self, a: &GrElem) -> bool {
        a.c.iter().all(|x| *x == 0)
    }

    fn check(&self, a: &GrElem) {
        assert_eq!(a.c.len(), self.d, "group ring element must store exactly d coefficients");
    }

    pub fn add(&self, a: &GrElem, b: &GrElem) -> GrElem {
        self.check(a);
        self.check(b);
        GrElem {
            c: a.c.iter().zip(&b.c).map(|(x, y)| self.fq.add(*x, *y)).collect(),
        }
    }

    pub fn neg(&self, a: &GrElem) -> GrElem {
        GrElem { c: a.c.iter().map(|x| self.fq.neg(*x)).collect() }
    }

    pub fn sub(&self, a: &GrElem, b: &GrElem) -> GrElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &GrElem, b: &GrElem) -> GrElem {
        self.check(a);
        self.check(b);
        let mut out = self.zero();
        for (i, x) in a.c.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if *y == 0 {
                    continue;
                }
                let k = (i + j) % self.d;
                out.c[k] = self.fq.add(out.c[k], self.fq.mul(*x, *y));
            }
        }
        out
    }

    pub fn pow(&self, a: &GrElem, mut k: u64) -> GrElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// Power with a possibly negative exponent, valid for `d`-th roots of
    /// unity (where `a⁻¹ = a^{d−1}`).
    pub fn root_pow(&self, a: &GrElem, k: i64) -> GrElem {
        let d = self.d as i64;
        let k = ((k % d) + d) % d;
        self.pow(a, k as u64)
    }

    /// Coefficientwise-and-shift Frobenius: `(Σ cᵢ tⁱ)^p = Σ cᵢ^p t^{ip}`.
    pub fn frobenius(&self, a: &GrElem) -> GrElem {
        let p = self.fq.p as usize;
        let mut out = self.zero();
        for (i, x) in a.c.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            let k = (i * p) % self.d;
            out.c[k] = self.fq.add(out.c[k], self.fq.frob(*x));
        }
        out
    }

    /// Units of this local ring are exactly the elements whose coefficient
    /// sum (the evaluation at `t = 1`) is nonzero.
    pub fn is_unit(&self, a: &GrElem) -> bool {
        let mut s = self.fq.zero();
        for x in &a.c {
            s = self.fq.add(s, *x);
        }
        s != 0
    }

    pub fn is_root_of_unity(&self, a: &GrElem) -> bool {
        self.pow(a, self.d as u64) == self.one()
    }

    /// Inverse of a `d`-th root of unity.
    pub fn root_inv(&self, a: &GrElem) -> Result<GrElem> {
        if !self.is_root_of_unity(a) {
            return Err(CurveError::BadScalar(format!("{a:?} is not a d-th root of unity")));
        }
        Ok(self.pow(a, self.d as u64 - 1))
    }
}
