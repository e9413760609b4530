//! Laurent polynomials in `s` with coefficients truncated at `ε^d`: the
//! coordinate ring model of the thickened affine line. Generic over the
//! coefficient ring so the same machinery runs over `F_q` and over the
//! torus coefficient ring `F_q[t]/(t^d − 1)`.

use std::collections::BTreeMap;

use crate::fq::{Fq, FqElem};
use crate::groupring::{GrElem, GroupRing};

/// Coefficient arithmetic behind a context value.
pub trait Coefficients {
    type Elem: Clone + PartialEq + Eq + Ord + std::fmt::Debug;
    fn c_zero(&self) -> Self::Elem;
    fn c_one(&self) -> Self::Elem;
    fn c_add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn c_neg(&self, a: &Self::Elem) -> Self::Elem;
    fn c_mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn c_is_zero(&self, a: &Self::Elem) -> bool;
}

impl Coefficients for Fq {
    type Elem = FqElem;
    fn c_zero(&self) -> FqElem {
        0
    }
    fn c_one(&self) -> FqElem {
        1
    }
    fn c_add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.add(*a, *b)
    }
    fn c_neg(&self, a: &FqElem) -> FqElem {
        self.neg(*a)
    }
    fn c_mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.mul(*a, *b)
    }
    fn c_is_zero(&self, a: &FqElem) -> bool {
        *a == 0
    }
}

impl Coefficients for GroupRing {
    type Elem = GrElem;
    fn c_zero(&self) -> GrElem {
        self.zero()
    }
    fn c_one(&self) -> GrElem {
        self.one()
    }
    fn c_add(&self, a: &GrElem, b: &GrElem) -> GrElem {
        self.add(a, b)
    }
    fn c_neg(&self, a: &GrElem) -> GrElem {
        self.neg(a)
    }
    fn c_mul(&self, a: &GrElem, b: &GrElem) -> GrElem {
        self.mul(a, b)
    }
    fn c_is_zero(&self, a: &GrElem) -> bool {
        GroupRing::is_zero(self, a)
    }
}

/// Element: finitely many terms `coeff · s^m ε^i` with `0 ≤ i < d`.
/// No zero coefficients are stored, so structural equality is ring equality.
pub struct Truncated<C: Coefficients> {
    pub terms: BTreeMap<(i64, u32), C::Elem>,
}

impl<C: Coefficients> Clone for Truncated<C> {
    fn clone(&self) -> Self {
        Truncated { terms: self.terms.clone() }
    }
}

impl<C: Coefficients> PartialEq for Truncated<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}
impl<C: Coefficients> Eq for Truncated<C> {}

impl<C: Coefficients> std::fmt::Debug for Truncated<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Truncated{:?}", self.terms)
    }
}

impl<C: Coefficients> Truncated<C> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest ε-degree present (None when zero).
    pub fn eps_degree_min(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, i)| i).min()
    }

    pub fn s_degree_bounds(&self) -> Option<(i64, i64)> {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for &(m, _) in self.terms.keys() {
            lo = lo.min(m);
            hi = hi.max(m);
        }
        if lo == i64::MAX {
            None
        } else {
            Some((lo, hi))
        }
    }
}

/// Ring context: coefficient arithmetic plus the nilpotency order of `ε`.
#[derive(Clone, Debug)]
pub struct TrRing<C: Coefficients> {
    pub coeffs: C,
    pub eps_order: u32,
}

impl<C: Coefficients> TrRing<C> {
    pub fn new(coeffs: C, eps_order: u32) -> Self {
        TrRing { coeffs, eps_order }
    }

    pub fn zero(&self) -> Truncated<C> {
        Truncated { terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Truncated<C> {
        self.monomial(0, 0, self.coeffs.c_one())
    }

    pub fn monomial(&self, s_exp: i64, eps_exp: u32, coeff: C::Elem) -> Truncated<C> {
        let mut terms = BTreeMap::new();
        if eps_exp < self.eps_order && !self.coeffs.c_is_zero(&coeff) {
            terms.insert((s_exp, eps_exp), coeff);
        }
        Truncated { terms }
    }

    pub fn add(&self, a: &Truncated<C>, b: &Truncated<C>) -> Truncated<C> {
        let mut terms = a.terms.clone();
        for (k, v) in &b.terms {
            let nv = match terms.get(k) {
                Some(old) => self.coeffs.c_add(old, v),
                None => v.clone(),
            };
            if self.coeffs.c_is_zero(&nv) {
                terms.remove(k);
            } else {
                terms.insert(*k, nv);
            }
        }
        Truncated { terms }
    }

    pub fn neg(&self, a: &Truncated<C>) -> Truncated<C> {
        Truncated {
            terms: a.terms.iter().map(|(k, v)| (*k, self.coeffs.c_neg(v))).collect(),
        }
    }

    pub fn sub(&self, a: &Truncated<C>, b: &Truncated<C>) -> Truncated<C> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Truncated<C>, c: &C::Elem) -> Truncated<C> {
        let mut out = self.zero();
        for (k, v) in &a.terms {
            let nv = self.coeffs.c_mul(v, c);
            if !self.coeffs.c_is_zero(&nv) {
                out.terms.insert(*k, nv);
            }
        }
        out
    }

    pub fn mul(&self, a: &Truncated<C>, b: &Truncated<C>) -> Truncated<C> {
        let mut out = self.zero();
        for ((ma, ia), va) in &a.terms {
            for ((mb, ib), vb) in &b.terms {
                let i = ia + ib;
                if i >= self.eps_order {
                    continue;
                }
                let key = (ma + mb, i);
                let prod = self.coeffs.c_mul(va, vb);
                if self.coeffs.c_is_zero(&prod) {
                    continue;
                }
                let nv = match out.terms.get(&key) {
                    Some(old) => self.coeffs.c_add(old, &prod),
                    None => prod,
                };
                if self.coeffs.c_is_zero(&nv) {
                    out.terms.remove(&key);
                } else {
                    out.terms.insert(key, nv);
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &Truncated<C>, mut k: u64) -> Truncated<C> {
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

    /// `(1 + x)⁻¹ = Σ (−x)^k` for nilpotent `x` (any element with all terms
    /// of positive ε-degree).
    pub fn neumann_inverse_of_one_plus(&self, x: &Truncated<C>) -> Truncated<C> {
        assert!(
            x.eps_degree_min().is_none_or(|i| i >= 1),
            "neumann inverse needs ε-positive input"
        );
        let mut acc = self.one();
        let mut pw = self.one();
        let neg_x = self.neg(x);
        for _ in 1..self.eps_order {
            pw = self.mul(&pw, &neg_x);
            if pw.is_zero() {
                break;
            }
            acc = self.add(&acc, &pw);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> TrRing<Fq> {
        TrRing::new(Fq::new(3, 1).unwrap(), 3)
    }

    #[test]
    fn eps_truncation() {
        let r = ring();
        let eps = r.monomial(0, 1, 1);
        let e2 = r.mul(&eps, &eps);
        assert!(!e2.is_zero());
        assert!(r.mul(&e2, &eps).is_zero());
    }

    #[test]
    fn laurent_multiplication() {
        let r = ring();
        // (s⁻¹ + 2s²ε)·sε = ε + 2s³ε²
        let a = r.add(&r.monomial(-1, 0, 1), &r.monomial(2, 1, 2));
        let b = r.monomial(1, 1, 1);
        let prod = r.mul(&a, &b);
        assert_eq!(prod, r.add(&r.monomial(0, 1, 1), &r.monomial(3, 2, 2)));
    }

    #[test]
    fn neumann_inverse() {
        let r = ring();
        let x = r.add(&r.monomial(2, 1, 2), &r.monomial(-1, 2, 1));
        let one_plus = r.add(&r.one(), &x);
        let inv = r.neumann_inverse_of_one_plus(&x);
        assert_eq!(r.mul(&one_plus, &inv), r.one());
    }
}
