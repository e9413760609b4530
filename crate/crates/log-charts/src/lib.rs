//! Chart-level certification of log-geometric conditions.
//!
//! A chart is a monoid homomorphism `h: Q → P` together with the prime
//! characteristic of the base. Everything a chart can certify reduces to
//! exact computations on the monoids: smoothness reduces to kernel and
//! cokernel torsion of the induced map of groupifications, Kummer covers to
//! root monoids, fiber products of log structures to sharpened saturated
//! pushouts. Scheme-level conditions (flatness, étaleness of the induced
//! scheme map) have no chart-level shadow; they enter as caller-supplied
//! attestations that are recorded verbatim in the verdict, cleanly separated
//! from what is mechanically checked.

use monoid_core::{
    mat, monoid_isomorphic, pushout_fs, root_monoid, AbelianGroup, AffineMonoid, Caps,
    IsoOutcome, KummerVerdict, LatticeInt, MonoidError, MonoidMap,
};

pub type Result<T> = std::result::Result<T, MonoidError>;

/// Outcome of a chart-level check. `witness` explains a failure and is
/// present exactly when `result` is false; `attested` lists scheme-level
/// conditions the caller vouched for (never checked here).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartVerdict {
    pub condition: String,
    pub result: bool,
    pub witness: Option<String>,
    pub attested: Vec<String>,
}

impl ChartVerdict {
    fn pass(condition: impl Into<String>) -> Self {
        ChartVerdict { condition: condition.into(), result: true, witness: None, attested: Vec::new() }
    }

    fn fail(condition: impl Into<String>, witness: impl Into<String>) -> Self {
        ChartVerdict {
            condition: condition.into(),
            result: false,
            witness: Some(witness.into()),
            attested: Vec::new(),
        }
    }

    fn with_attestations(mut self, attested: &[String]) -> Self {
        self.attested = attested.to_vec();
        self
    }
}

/// A chart `h: Q → P` over a base of prime characteristic `char_p`.
#[derive(Clone, Debug)]
pub struct ChartTriple<I> {
    pub base_monoid: AffineMonoid<I>,
    pub total_monoid: AffineMonoid<I>,
    pub chart_map: MonoidMap<I>,
    pub char_p: u32,
    /// scheme-level facts supplied by the caller (recorded, not checked)
    pub attestations: Vec<String>,
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

impl<I: LatticeInt> ChartTriple<I> {
    pub fn new(chart_map: MonoidMap<I>, char_p: u32) -> Result<Self> {
        if !is_prime(char_p) {
            return Err(MonoidError::InvalidInput(format!(
                "characteristic {char_p} is not prime"
            )));
        }
        Ok(ChartTriple {
            base_monoid: chart_map.source().clone(),
            total_monoid: chart_map.target().clone(),
            chart_map,
            char_p,
            attestations: Vec::new(),
        })
    }

    pub fn attest(mut self, fact: impl Into<String>) -> Self {
        self.attestations.push(fact.into());
        self
    }
}

/// Kernel and cokernel of the induced map of groupifications, as abstract
/// groups.
pub fn groupification_kernel_cokernel<I: LatticeInt>(
    f: &MonoidMap<I>,
) -> (AbelianGroup<I>, AbelianGroup<I>) {
    let nq = f.source().ambient().arity();
    let np = f.target().ambient().arity();
    let wq = f.source().generated_subgroup().lattice;
    let wp = f.target().generated_subgroup().lattice;
    let lq = f.source().ambient().relation_rows();
    let lp = f.target().ambient().relation_rows();

    // cokernel: W_P / (W_Q·M + L_P)
    let mut image_rows: Vec<Vec<I>> = wq
        .basis
        .iter()
        .map(|b| {
            let mut out = vec![I::zero(); np];
            for (i, x) in b.iter().enumerate() {
                for (j, o) in out.iter_mut().enumerate() {
                    *o += *x * f.matrix()[(i, j)];
                }
            }
            out
        })
        .collect();
    image_rows.extend(lp.iter().cloned());
    let coker = monoid_core::group::lattice_quotient(&wp.basis, &image_rows, np)
        .expect("image of the groupification map lands in the target subgroup");

    // kernel: (W_Q ∩ M⁻¹(L̂_P)) / L_Q
    let preim = mat::preimage_lattice(f.matrix(), &lp);
    let khat = mat::lattice_intersect(&wq.basis, &preim, nq);
    let mut big = khat.clone();
    big.extend(lq.iter().cloned());
    let ker = monoid_core::group::lattice_quotient(&big, &lq, nq)
        .expect("ambient relations lie in the kernel lattice");
    (ker, coker)
}

/// Smoothness criterion at chart level: the kernel of `Q^gp → P^gp` is
/// finite of order invertible in the base characteristic and the torsion
/// part of the cokernel has order invertible as well. The étaleness of the
/// induced scheme map is not computable here and must be attested.
pub fn check_log_smooth_chart<I: LatticeInt>(c: &ChartTriple<I>) -> ChartVerdict {
    let condition = "kernel finite and kernel/cokernel-torsion orders invertible in the base characteristic";
    let (ker, coker) = groupification_kernel_cokernel(&c.chart_map);
    let p = I::from_int(c.char_p as i64);
    if ker.free_rank > 0 {
        return ChartVerdict::fail(
            condition,
            format!("kernel has free rank {} (infinite)", ker.free_rank),
        )
        .with_attestations(&c.attestations);
    }
    if let Some(d) = ker.torsion_factors.iter().find(|d| d.is_multiple_of(&p)) {
        return ChartVerdict::fail(
            condition,
            format!("kernel torsion factor {d} is divisible by the characteristic {p}"),
        )
        .with_attestations(&c.attestations);
    }
    if let Some(d) = coker.torsion_factors.iter().find(|d| d.is_multiple_of(&p)) {
        return ChartVerdict::fail(
            condition,
            format!("cokernel torsion factor {d} is divisible by the characteristic {p}"),
        )
        .with_attestations(&c.attestations);
    }
    ChartVerdict::pass(condition).with_attestations(&c.attestations)
}

/// The sharp saturated amalgamated sum — the characteristic monoid of the
/// fiber product of fs log structures at a point.
pub fn stalk_sharp_pushout<I: LatticeInt>(
    to_q2: &MonoidMap<I>,
    to_q3: &MonoidMap<I>,
    caps: &Caps,
) -> Result<AffineMonoid<I>> {
    Ok(pushout_fs(to_q2, to_q3, caps)?.sharpen())
}

/// Is `h` divisible by `n` inside the monoid `m`? Exact: the free part
/// forces the candidate and the torsion coordinates are enumerated.
fn divisible_in<I: LatticeInt>(
    m: &AffineMonoid<I>,
    h: &[I],
    n: u32,
    caps: &Caps,
) -> Result<bool> {
    let amb = m.ambient();
    let c = I::from_int(n as i64);
    let r = amb.free_rank;
    for v in &h[..r] {
        if !v.is_multiple_of(&c) {
            return Ok(false);
        }
    }
    let mut x = vec![I::zero(); amb.arity()];
    for i in 0..r {
        x[i] = h[i] / c;
    }
    let torsion = amb.torsion_factors.clone();
    if torsion.is_empty() {
        return m.contains(&x, caps);
    }
    let mut counter: Vec<i64> = vec![0; torsion.len()];
    loop {
        for (i, t) in counter.iter().enumerate() {
            x[r + i] = I::from_int(*t);
        }
        if amb.scale(&x, c) == amb.reduce(h) && m.contains(&x, caps)? {
            return Ok(true);
        }
        let mut i = 0;
        loop {
            if i == torsion.len() {
                return Ok(false);
            }
            counter[i] += 1;
            if I::from_int(counter[i]) < torsion[i] {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
    }
}

/// Hypotheses and conclusion of the strictness criterion: `to_q2` must be
/// Kummer of some exponent `n`, every generator of the shared source must
/// become `n`-divisible in the third leg, and then the sharpened pushout is
/// the third leg again (checked by explicit isomorphism).
pub fn verify_strictness_criterion<I: LatticeInt>(
    to_q2: &MonoidMap<I>,
    to_q3: &MonoidMap<I>,
    caps: &Caps,
) -> Result<ChartVerdict> {
    let condition = "kummer leg + divisible images ⇒ sharpened pushout is the third leg";
    if to_q2.source() != to_q3.source() {
        return Err(MonoidError::InvalidInput("legs must share their source".into()));
    }
    let n = match to_q2.is_kummer(caps)? {
        KummerVerdict::Kummer { exponent } => exponent,
        KummerVerdict::NotKummer { witness } => {
            return Ok(ChartVerdict::fail(
                condition,
                format!("first leg is not Kummer: {witness:?}"),
            ));
        }
        KummerVerdict::Unknown { reason } => {
            return Err(MonoidError::ResourceCap {
                operation: "verify_strictness_criterion",
                detail: format!("kummer test unknown: {reason}"),
                cap: caps.kummer_exponent as u64,
            });
        }
    };
    for (g, img) in to_q3.source().gens().iter().zip(to_q3.generator_images()) {
        if !divisible_in(to_q3.target(), img, n, caps)? {
            return Ok(ChartVerdict::fail(
                condition,
                format!("image {img:?} of generator {g:?} is not {n}-divisible in the third leg"),
            ));
        }
    }
    let stalk = stalk_sharp_pushout(to_q2, to_q3, caps)?;
    let q3_sharp = to_q3.target().sharpen();
    match monoid_isomorphic(&q3_sharp, &stalk, caps)? {
        IsoOutcome::Isomorphic(_) => Ok(ChartVerdict::pass(condition)),
        IsoOutcome::NotIsomorphic(why) => Ok(ChartVerdict::fail(
            condition,
            format!("sharpened pushout differs from the third leg: {why:?}"),
        )),
    }
}

/// The degree-`n` Kummer root cover of a chart: the new chart is
/// `P → P^{1/n}` and the verdict certifies it is Kummer of exponent
/// dividing `n`.
pub fn build_kummer_cover<I: LatticeInt>(
    c: &ChartTriple<I>,
    n: u32,
    caps: &Caps,
) -> Result<(ChartTriple<I>, ChartVerdict)> {
    let root = root_monoid(&c.total_monoid, n, caps)?;
    let verdict = match root.is_kummer(caps)? {
        KummerVerdict::Kummer { exponent } => {
            if n.is_multiple_of(exponent) {
                ChartVerdict::pass(format!("root cover is Kummer of exponent {exponent} dividing {n}"))
            } else {
                ChartVerdict::fail(
                    "root cover exponent divides the requested degree",
                    format!("exponent {exponent} does not divide {n}"),
                )
            }
        }
        v => ChartVerdict::fail("root cover is Kummer", format!("{v:?}")),
    };
    let cover = ChartTriple {
        base_monoid: c.total_monoid.clone(),
        total_monoid: root.target().clone(),
        chart_map: root,
        char_p: c.char_p,
        attestations: Vec::new(),
    };
    Ok((cover, verdict))
}

/// Chart-level torsor self-product identity: the amalgamated self-sum of
/// ℕ² along multiplication by `p^n` on both legs must be
/// `(ℕ ⊕ ℤ/p^n)²` — the base chart extended by the torsion `(ℤ/p^n)²`
/// that trivializes the self-fiber-product.
pub fn verify_torsor_selfproduct<I: LatticeInt>(
    p: u32,
    n: u32,
    caps: &Caps,
) -> Result<ChartVerdict> {
    let condition = format!(
        "self-amalgamation of ℕ² along multiplication by {p}^{n} is ℕ² ⊕ (ℤ/{p}^{n})²"
    );
    if !is_prime(p) {
        return Err(MonoidError::InvalidInput(format!("{p} is not prime")));
    }
    let d = p
        .checked_pow(n)
        .ok_or_else(|| MonoidError::InvalidInput("p^n overflows".into()))?;
    let plane = AffineMonoid::<I>::free(2);
    let leg = root_monoid(&plane, d, caps)?;
    let push = pushout_fs(&leg, &leg, caps)?;
    let g = push.groupify();
    let dd = I::from_int(d as i64);
    if g.free_rank != 2 || g.torsion_factors != vec![dd, dd] {
        return Ok(ChartVerdict::fail(
            condition,
            format!(
                "groupification is ℤ^{} with torsion {:?}, expected ℤ² with [{d}, {d}]",
                g.free_rank, g.torsion_factors
            ),
        ));
    }
    let ambient = AbelianGroup::new(2, vec![dd, dd])?;
    let mut gens = Vec::new();
    for i in 0..4 {
        let mut v = vec![I::zero(); 4];
        v[i] = I::one();
        gens.push(v);
    }
    let expected = AffineMonoid::new(ambient, gens)?;
    match monoid_isomorphic(&push, &expected, caps)? {
        IsoOutcome::Isomorphic(_) => Ok(ChartVerdict::pass(condition)),
        IsoOutcome::NotIsomorphic(why) => {
            Ok(ChartVerdict::fail(condition, format!("{why:?}")))
        }
    }
}
