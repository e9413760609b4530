//! Small finite fields `F_q`, `q = p^e`, with table-based arithmetic.
//!
//! Elements are indices `0..q`; the base-`p` digits of an index are the
//! coefficients of a polynomial in the canonical generator, reduced modulo
//! the lexicographically least monic irreducible of degree `e`. This makes
//! element identity, hashing and ordering trivial, and all arithmetic a
//! table lookup.

use crate::error::{CurveError, Result};

pub type FqElem = u16;

#[derive(Clone, Debug)]
pub struct Fq {
    pub p: u32,
    pub e: u32,
    pub q: u32,
    /// canonical irreducible, little-endian, monic of degree e
    pub irreducible: Vec<u32>,
    add_table: Vec<FqElem>,
    mul_table: Vec<FqElem>,
    inv_table: Vec<FqElem>,
}

fn poly_mod_reduce(p: u32, poly: &mut Vec<u32>, modulus: &[u32]) {
    let e = modulus.len() - 1;
    while poly.len() > e {
        let lead = *poly.last().unwrap() % p;
        let deg = poly.len() - 1;
        if lead != 0 {
            for k in 0..=e {
                let idx = deg - e + k;
                poly[idx] = (poly[idx] + p * p - (lead * modulus[k]) % p) % p;
            }
        }
        poly.pop();
    }
    for c in poly.iter_mut() {
        *c %= p;
    }
    while poly.len() > 1 && *poly.last().unwrap() == 0 {
        poly.pop();
    }
}

fn poly_mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Exhaustive irreducibility test by trial division over monic polynomials
/// of degree up to half the degree.
fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let e = poly.len() - 1;
    if e == 1 {
        return true;
    }
    // iterate monic divisors of degree 1..=e/2
    for deg in 1..=(e / 2) {
        let count = p.pow(deg as u32);
        for idx in 0..count {
            let mut div = Vec::with_capacity(deg + 1);
            let mut t = idx;
            for _ in 0..deg {
                div.push(t % p);
                t /= p;
            }
            div.push(1);
            // poly mod div == 0 ?
            let mut rem: Vec<u32> = poly.to_vec();
            poly_mod_reduce(p, &mut rem, &div);
            if rem.iter().all(|c| *c == 0) {
                return false;
            }
        }
    }
    true
}

fn canonical_irreducible(p: u32, e: u32) -> Vec<u32> {
    if e == 1 {
        return vec![0, 1]; // x (any monic linear works; never used for e=1)
    }
    let count = p.pow(e);
    for idx in 0..count {
        let mut poly = Vec::with_capacity(e as usize + 1);
        let mut t = idx;
        for _ in 0..e {
            poly.push(t % p);
            t /= p;
        }
        poly.push(1);
        if is_irreducible(p, &poly) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn digits(p: u32, e: u32, idx: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    let mut t = idx;
    for _ in 0..e {
        out.push(t % p);
        t /= p;
    }
    out
}

fn undigits(p: u32, ds: &[u32]) -> u32 {
    let mut out = 0;
    for &d in ds.iter().rev() {
        out = out * p + d;
    }
    out
}

impl Fq {
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if e == 0 || p < 2 {
            return Err(CurveError::InvalidParams("need p prime and e ≥ 1".into()));
        }
        let q = p
            .checked_pow(e)
            .filter(|q| *q <= 1024)
            .ok_or_else(|| CurveError::ResourceCap(format!("field size p^{e} too large")))?;
        let irreducible = canonical_irreducible(p, e);
        let qs = q as usize;
        let mut add_table = vec![0 as FqElem; qs * qs];
        let mut mul_table = vec![0 as FqElem; qs * qs];
        for a in 0..q {
            for b in 0..q {
                let da = digits(p, e, a);
                let db = digits(p, e, b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add_table[(a * q + b) as usize] = undigits(p, &sum) as FqElem;
                let mut prod = poly_mul(p, &da, &db);
                poly_mod_reduce(p, &mut prod, &irreducible);
                prod.resize(e as usize, 0);
                mul_table[(a * q + b) as usize] = undigits(p, &prod) as FqElem;
            }
        }
        let mut inv_table = vec![0 as FqElem; qs];
        for a in 1..q {
            for b in 1..q {
                if mul_table[(a * q + b) as usize] == 1 {
                    inv_table[a as usize] = b as FqElem;
                    break;
                }
            }
        }
        Ok(Fq { p, e, q, irreducible, add_table, mul_table, inv_table })
    }

    pub fn zero(&self) -> FqElem {
        0
    }

    pub fn one(&self) -> FqElem {
        1
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add_table[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        // digitwise p-complement
        let ds = digits(self.p, self.e, a as u32);
        let nd: Vec<u32> = ds.iter().map(|d| (self.p - d) % self.p).collect();
        undigits(self.p, &nd) as FqElem
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        self.mul_table[a as usize * self.q as usize + b as usize]
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a == 0 {
            return Err(CurveError::InvalidParams("inverse of zero".into()));
        }
        Ok(self.inv_table[a as usize])
    }

    pub fn pow(&self, a: FqElem, mut k: u64) -> FqElem {
        let mut base = a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Frobenius `a ↦ a^p`.
    pub fn frob(&self, a: FqElem) -> FqElem {
        self.pow(a, self.p as u64)
    }

    /// Canonical image of an integer (reduction mod p into the prime field).
    pub fn from_int(&self, v: i64) -> FqElem {
        let p = self.p as i64;
        (((v % p) + p) % p) as FqElem
    }

    /// Base-p digits of an element: coordinates over the prime field in the
    /// power basis of the canonical generator.
    pub fn coords(&self, a: FqElem) -> Vec<u32> {
        digits(self.p, self.e, a as u32)
    }

    pub fn from_coords(&self, ds: &[u32]) -> FqElem {
        undigits(self.p, ds) as FqElem
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        0..self.q as FqElem
    }
}
