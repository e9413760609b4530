//! Hom groups of the rank-`p` finite group schemes by exhaustive search
//! over Hopf-algebra homomorphisms.
//!
//! A homomorphism of group schemes `G → H` is a Hopf-algebra map
//! `O(H) → O(G)`. All representing algebras here are generated by a single
//! element `x`, so a candidate map is one element `a` of `O(G)`; it is a
//! Hopf map iff it satisfies the defining relation of `x`, the counit
//! value, and the comultiplication type (grouplike or primitive) of `x`.
//! Every candidate is enumerated and every constraint checked exactly;
//! antipode compatibility is automatic for bialgebra maps of commutative
//! Hopf algebras and is not an extra constraint.

use curve_cohomology::{CurveError, Fq, FqElem, Result};

/// Which group scheme, over which field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupSchemeKind {
    /// `μ_{p^m}`: roots of unity; `O = F_q[x]/(x^{p^m} − 1)`, `x` grouplike
    MuPower { m: u32 },
    /// Frobenius kernel of the additive group; `O = F_q[x]/(x^p)`, `x`
    /// primitive
    AlphaP,
    /// the constant group scheme; `O = F_q[x]/(x^p − x)`, `x` primitive
    ZModP,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiniteGroupSchemeTag {
    pub kind: GroupSchemeKind,
    pub q: u32,
}

impl FiniteGroupSchemeTag {
    pub fn mu(m: u32, q: u32) -> Self {
        FiniteGroupSchemeTag { kind: GroupSchemeKind::MuPower { m }, q }
    }
    pub fn alpha_p(q: u32) -> Self {
        FiniteGroupSchemeTag { kind: GroupSchemeKind::AlphaP, q }
    }
    pub fn z_mod_p(q: u32) -> Self {
        FiniteGroupSchemeTag { kind: GroupSchemeKind::ZModP, q }
    }
}

/// The representing algebra with its Hopf data, in the monomial basis
/// `1, x, x², …`.
struct HopfAlgebra {
    fq: Fq,
    dim: usize,
    /// e_i · e_j expanded in the basis
    mult: Vec<Vec<Vec<(usize, FqElem)>>>,
    /// ε(e_i)
    counit: Vec<FqElem>,
    /// Δ(e_i) as a dim×dim tensor-square vector
    comul: Vec<Vec<FqElem>>,
}

fn build_algebra(fq: &Fq, kind: GroupSchemeKind) -> HopfAlgebra {
    let p = fq.p;
    let (dim, reduce_exp): (usize, Box<dyn Fn(usize) -> Option<usize>>) = match kind {
        GroupSchemeKind::MuPower { m } => {
            let n = p.pow(m) as usize;
            (n, Box::new(move |k: usize| Some(k % n)))
        }
        GroupSchemeKind::AlphaP => {
            let n = p as usize;
            (n, Box::new(move |k: usize| if k < n { Some(k) } else { None }))
        }
        GroupSchemeKind::ZModP => {
            let n = p as usize;
            // x^p = x: exponents ≥ n fold back onto 1 + (k−1 mod p−1)
            (n, Box::new(move |k: usize| {
                if k < n {
                    Some(k)
                } else {
                    Some(1 + (k - 1) % (n - 1))
                }
            }))
        }
    };
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    #[allow(clippy::needless_range_loop)]
    for i in 0..dim {
        for j in 0..dim {
            if let Some(k) = reduce_exp(i + j) {
                mult[i][j].push((k, 1));
            }
        }
    }
    let counit: Vec<FqElem> = match kind {
        GroupSchemeKind::MuPower { .. } => vec![1; dim],
        _ => (0..dim).map(|i| if i == 0 { 1 } else { 0 }).collect(),
    };
    // Δ(x): grouplike x⊗x for μ, primitive x⊗1 + 1⊗x otherwise
    let mut gen_comul = vec![0 as FqElem; dim * dim];
    match kind {
        GroupSchemeKind::MuPower { .. } => {
            if dim == 1 {
                gen_comul[0] = 1;
            } else {
                gen_comul[dim + 1] = 1; // x ⊗ x
            }
        }
        _ => {
            gen_comul[dim] = 1; // x ⊗ 1
            gen_comul[1] = fq.add(gen_comul[1], 1); // 1 ⊗ x
        }
    }
    let algebra = HopfAlgebra {
        fq: fq.clone(),
        dim,
        mult,
        counit,
        comul: Vec::new(),
    };
    // Δ is an algebra map, so Δ(x^i) = Δ(x)^i in the tensor square
    let mut comul = Vec::with_capacity(dim);
    let mut unit_tensor = vec![0 as FqElem; dim * dim];
    unit_tensor[0] = 1;
    let mut acc = unit_tensor;
    for i in 0..dim {
        if i > 0 {
            acc = algebra.tensor_mul(&acc, &gen_comul);
        }
        comul.push(acc.clone());
    }
    HopfAlgebra { comul, ..algebra }
}

impl HopfAlgebra {
    fn mul(&self, a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
        let mut out = vec![0; self.dim];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if *y == 0 {
                    continue;
                }
                let xy = self.fq.mul(*x, *y);
                for &(k, c) in &self.mult[i][j] {
                    out[k] = self.fq.add(out[k], self.fq.mul(xy, c));
                }
            }
        }
        out
    }

    fn pow(&self, a: &[FqElem], mut k: u64) -> Vec<FqElem> {
        let mut acc = vec![0; self.dim];
        acc[0] = 1;
        let mut base = a.to_vec();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    fn tensor_mul(&self, a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
        let d = self.dim;
        let mut out = vec![0; d * d];
        for i1 in 0..d {
            for j1 in 0..d {
                let x = a[i1 * d + j1];
                if x == 0 {
                    continue;
                }
                for i2 in 0..d {
                    for j2 in 0..d {
                        let y = b[i2 * d + j2];
                        if y == 0 {
                            continue;
                        }
                        let xy = self.fq.mul(x, y);
                        for &(k1, c1) in &self.mult[i1][i2] {
                            for &(k2, c2) in &self.mult[j1][j2] {
                                let c = self.fq.mul(xy, self.fq.mul(c1, c2));
                                out[k1 * d + k2] = self.fq.add(out[k1 * d + k2], c);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn comul_of(&self, a: &[FqElem]) -> Vec<FqElem> {
        let d = self.dim;
        let mut out = vec![0; d * d];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (k, c) in self.comul[i].iter().enumerate() {
                if *c != 0 {
                    out[k] = self.fq.add(out[k], self.fq.mul(*x, *c));
                }
            }
        }
        out
    }

    fn counit_of(&self, a: &[FqElem]) -> FqElem {
        let mut s = 0;
        for (x, e) in a.iter().zip(&self.counit) {
            s = self.fq.add(s, self.fq.mul(*x, *e));
        }
        s
    }

    fn tensor_of(&self, a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
        let d = self.dim;
        let mut out = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                out[i * d + j] = self.fq.mul(a[i], b[j]);
            }
        }
        out
    }
}

/// A finite abelian group of homomorphisms, with every element listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomGroup {
    pub order: u64,
    /// ascending divisor chain
    pub invariant_factors: Vec<u64>,
    /// image of the target generator under each homomorphism
    pub element_descriptions: Vec<String>,
}

/// Search cap on the candidate space size.
pub const HOM_SEARCH_CAP: u64 = 2_000_000;

/// `Hom(G, H)` of group schemes over `F_q` by exhaustive Hopf search:
/// enumerate elements of `O(G)` and keep those satisfying the relation,
/// counit and comultiplication of the generator of `O(H)`.
pub fn hom_group_schemes(
    g: &FiniteGroupSchemeTag,
    h: &FiniteGroupSchemeTag,
) -> Result<HomGroup> {
    if g.q != h.q {
        return Err(CurveError::InvalidParams(
            "both schemes must live over the same field".into(),
        ));
    }
    let fq = field_of(g.q)?;
    let source_alg = build_algebra(&fq, g.kind);
    let p = fq.p as u64;
    let q = fq.q as u64;
    let space = q
        .checked_pow(source_alg.dim as u32)
        .filter(|s| *s <= HOM_SEARCH_CAP)
        .ok_or_else(|| {
            CurveError::ResourceCap(format!(
                "hom search space q^{} exceeds the cap {HOM_SEARCH_CAP}",
                source_alg.dim
            ))
        })?;
    let grouplike = matches!(h.kind, GroupSchemeKind::MuPower { .. });
    let expected_counit: FqElem = if grouplike { 1 } else { 0 };
    let mut homs: Vec<Vec<FqElem>> = Vec::new();
    for idx in 0..space {
        let mut a = Vec::with_capacity(source_alg.dim);
        let mut t = idx;
        for _ in 0..source_alg.dim {
            a.push((t % q) as FqElem);
            t /= q;
        }
        if source_alg.counit_of(&a) != expected_counit {
            continue;
        }
        let relation_ok = match h.kind {
            GroupSchemeKind::MuPower { m } => {
                let mut one = vec![0; source_alg.dim];
                one[0] = 1;
                source_alg.pow(&a, p.pow(m)) == one
            }
            GroupSchemeKind::AlphaP => source_alg.pow(&a, p).iter().all(|c| *c == 0),
            GroupSchemeKind::ZModP => source_alg.pow(&a, p) == a,
        };
        if !relation_ok {
            continue;
        }
        let lhs = source_alg.comul_of(&a);
        let rhs = if grouplike {
            source_alg.tensor_of(&a, &a)
        } else {
            let mut one = vec![0; source_alg.dim];
            one[0] = 1;
            let t1 = source_alg.tensor_of(&a, &one);
            let t2 = source_alg.tensor_of(&one, &a);
            t1.iter().zip(&t2).map(|(x, y)| fq.add(*x, *y)).collect()
        };
        if lhs != rhs {
            continue;
        }
        homs.push(a);
    }
    // group law: convolution = product (grouplike) or sum (primitive) of
    // the generator images
    let combine = |a: &Vec<FqElem>, b: &Vec<FqElem>| -> Vec<FqElem> {
        if grouplike {
            source_alg.mul(a, b)
        } else {
            a.iter().zip(b).map(|(x, y)| fq.add(*x, *y)).collect()
        }
    };
    let identity: Vec<FqElem> = if grouplike {
        let mut one = vec![0; source_alg.dim];
        one[0] = 1;
        one
    } else {
        vec![0; source_alg.dim]
    };
    // invariant factors from the kernel sizes of multiplication by p^j
    let order = homs.len() as u64;
    let mut kernel_logs = vec![0usize];
    let mut j = 1u32;
    let factors = loop {
        let mut ker = 0u64;
        for a in &homs {
            let mut acc = identity.clone();
            for _ in 0..p.pow(j) {
                acc = combine(&acc, a);
            }
            if acc == identity {
                ker += 1;
            }
        }
        let mut log = 0usize;
        let mut t = ker;
        while t > 1 {
            if !t.is_multiple_of(p) {
                return Err(CurveError::InvalidParams(
                    "hom group is not a p-group".into(),
                ));
            }
            t /= p;
            log += 1;
        }
        kernel_logs.push(log);
        if ker == order {
            let jmax = kernel_logs.len() - 1;
            let ge: Vec<usize> =
                (1..=jmax).map(|j| kernel_logs[j] - kernel_logs[j - 1]).collect();
            let mut factors = Vec::new();
            for jj in (1..=jmax).rev() {
                let count = ge[jj - 1] - if jj < jmax { ge[jj] } else { 0 };
                for _ in 0..count {
                    factors.push(p.pow(jj as u32));
                }
            }
            factors.sort_unstable();
            break factors;
        }
        j += 1;
        if j > 32 {
            return Err(CurveError::ResourceCap("hom order scan runaway".into()));
        }
    };
    let element_descriptions = homs
        .iter()
        .map(|a| describe(&source_alg, a))
        .collect();
    Ok(HomGroup { order, invariant_factors: factors, element_descriptions })
}

fn describe(alg: &HopfAlgebra, a: &[FqElem]) -> String {
    // single monomial x^k prints as such, anything else as coefficients
    let nz: Vec<usize> = (0..alg.dim).filter(|&i| a[i] != 0).collect();
    if nz.len() == 1 && a[nz[0]] == 1 {
        format!("x ↦ x^{}", nz[0])
    } else {
        format!("x ↦ {a:?}")
    }
}

fn field_of(q: u32) -> Result<Fq> {
    // factor q = p^e with p its least prime divisor
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
    Fq::new(p, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_mu2_mu2_over_f2() {
        let g = FiniteGroupSchemeTag::mu(1, 2);
        let h = hom_group_schemes(&g, &g).unwrap();
        assert_eq!(h.order, 2);
        assert_eq!(h.invariant_factors, vec![2]);
        assert!(h.element_descriptions.contains(&"x ↦ x^0".to_string()));
        assert!(h.element_descriptions.contains(&"x ↦ x^1".to_string()));
    }

    #[test]
    fn hom_mu3_alpha3_is_trivial() {
        let mu = FiniteGroupSchemeTag::mu(1, 3);
        let al = FiniteGroupSchemeTag::alpha_p(3);
        let h = hom_group_schemes(&mu, &al).unwrap();
        assert_eq!(h.order, 1);
        assert!(h.invariant_factors.is_empty());
    }

    #[test]
    fn hom_mu2_zmod2_is_trivial() {
        let mu = FiniteGroupSchemeTag::mu(1, 2);
        let zp = FiniteGroupSchemeTag::z_mod_p(2);
        let h = hom_group_schemes(&mu, &zp).unwrap();
        assert_eq!(h.order, 1);
    }

    #[test]
    fn hom_mu_powers_to_mu_p_has_order_p() {
        for (m, p) in [(1u32, 2u32), (2, 2), (1, 3), (2, 3)] {
            let src = FiniteGroupSchemeTag::mu(m, p);
            let dst = FiniteGroupSchemeTag::mu(1, p);
            let h = hom_group_schemes(&src, &dst).unwrap();
            assert_eq!(h.order, p as u64, "Hom(μ_{{{p}^{m}}}, μ_{p})");
            assert_eq!(h.invariant_factors, vec![p as u64]);
        }
    }

    #[test]
    fn alpha_p_has_field_many_endomorphisms() {
        // End(α_p) ⊇ scalars: x ↦ c·x for every c ∈ F_q
        let al = FiniteGroupSchemeTag::alpha_p(2);
        let h = hom_group_schemes(&al, &al).unwrap();
        assert_eq!(h.order, 2);
        let al4 = FiniteGroupSchemeTag::alpha_p(4);
        let h = hom_group_schemes(&al4, &al4).unwrap();
        assert_eq!(h.order, 4);
    }

    #[test]
    fn zmod_p_to_mu_is_trivial_and_dually() {
        let zp = FiniteGroupSchemeTag::z_mod_p(3);
        let mu = FiniteGroupSchemeTag::mu(1, 3);
        // Hom(ℤ/p, μ_p) over F_p: only the trivial map (no p-th roots of
        // unity besides 1 in F_p)
        let h = hom_group_schemes(&zp, &mu).unwrap();
        assert_eq!(h.order, 1);
        // and Hom(α_p, ℤ/p) = 0
        let h = hom_group_schemes(&FiniteGroupSchemeTag::alpha_p(3), &zp).unwrap();
        assert_eq!(h.order, 1);
    }

    #[test]
    fn cap_is_enforced() {
        let big = FiniteGroupSchemeTag::mu(2, 9);
        let mu = FiniteGroupSchemeTag::mu(1, 9);
        assert!(matches!(
            hom_group_schemes(&big, &mu),
            Err(CurveError::ResourceCap(_))
        ));
    }
}
