//! Exact cohomology of the thickened projective lines
//! `X_n = Proj k[x,y,z]/(x+y-z)^{p^n}` over finite fields `F_q`, `q = p^e`.
//!
//! Two models of `H¹(X_n, O)` are maintained side by side:
//!
//! * the monomial model — degree `-p^n` Laurent monomials in three
//!   variables, on which the `μ_{p^n} × μ_{p^n}` torus acts diagonally;
//! * the two-chart Čech model — Laurent polynomials in the affine
//!   coordinate `s` with nilpotent `ε`, where Frobenius, truncated
//!   exponentials and unit cocycles are local and computable.
//!
//! An explicit basis change between the two (a residue pairing computed in
//! closed form) transports operators either way; it is exercised by the
//! equivariance tests. All arithmetic is exact.

// index loops mirror the matrix notation throughout the numeric kernels
#![allow(clippy::needless_range_loop)]

pub mod cech;
pub mod error;
pub mod explog;
pub mod fq;
pub mod groupring;
pub mod monomial;
pub mod picard;
pub mod semilinear;
pub mod truncated;

pub use cech::{cech_h1_thickened, frobenius_operator, CechH1};
pub use error::{CurveError, Result};
pub use explog::{truncated_exp, truncated_log};
pub use fq::{Fq, FqElem};
pub use groupring::{GrElem, GroupRing};
pub use monomial::{fixed_classes, monomial_h1_basis, torus_action, CohomologySpace, DiagOperator};
pub use picard::picard_p_torsion;
pub use semilinear::{semilinear_kernel_dim, SemilinearOp};
pub use truncated::{TrRing, Truncated};

/// Parameters of one curve: characteristic `p`, thickening exponent `n`
/// (the curve is cut out by the `p^n`-th power of a line), coefficient
/// field size `q = p^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CurveParams {
    pub p: u32,
    pub n: u32,
    pub q: u32,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl CurveParams {
    pub fn new(p: u32, n: u32, q: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(CurveError::InvalidParams(format!("{p} is not prime")));
        }
        let mut t = q;
        let mut e = 0;
        while t > 1 {
            if !t.is_multiple_of(p) {
                return Err(CurveError::InvalidParams(format!(
                    "q = {q} is not a power of p = {p}"
                )));
            }
            t /= p;
            e += 1;
        }
        if e == 0 {
            return Err(CurveError::InvalidParams("q must be at least p".into()));
        }
        p.checked_pow(n)
            .filter(|d| *d <= 4096)
            .ok_or_else(|| CurveError::ResourceCap(format!("p^n = {p}^{n} is out of desk scale")))?;
        Ok(CurveParams { p, n, q })
    }

    /// The thickening order `d = p^n`.
    pub fn d(&self) -> u32 {
        self.p.pow(self.n)
    }

    /// Extension degree `e` with `q = p^e`.
    pub fn e(&self) -> u32 {
        let mut t = self.q;
        let mut e = 0;
        while t > 1 {
            t /= self.p;
            e += 1;
        }
        e
    }

    pub fn field(&self) -> Result<Fq> {
        Fq::new(self.p, self.e())
    }

    pub fn group_ring(&self) -> Result<GroupRing> {
        Ok(GroupRing::new(self.field()?, self.d() as usize))
    }

    /// The coordinate ring model of the thickened affine line:
    /// Laurent polynomials in `s` with `ε^{p^n} = 0`.
    pub fn truncated_ring(&self) -> Result<TrRing<Fq>> {
        Ok(TrRing::new(self.field()?, self.d()))
    }
}
