//! Additive maps between affine monoids: validation, Kummer verdicts,
//! root constructions and the fine saturated pushout.

use crate::error::{Caps, MonoidError, Result};
use crate::group::present_quotient;
use crate::mat::{self, Lattice, Mat};
use crate::monoid::AffineMonoid;
use crate::scalar::LatticeInt;

/// A monoid homomorphism `source → target` induced by a matrix on the
/// ambient groups (`x ↦ x·matrix`, torsion coordinates reduced in the
/// target). Construction verifies that the matrix is well defined on the
/// ambient torsion and that every generator image lies in the target monoid.
#[derive(Clone, Debug)]
pub struct MonoidMap<I> {
    source: AffineMonoid<I>,
    target: AffineMonoid<I>,
    matrix: Mat<I>,
    generator_images: Vec<Vec<I>>,
}

impl<I: LatticeInt> PartialEq for MonoidMap<I> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.matrix == other.matrix
    }
}
impl<I: LatticeInt> Eq for MonoidMap<I> {}

impl<I: LatticeInt> MonoidMap<I> {
    pub fn new(
        source: AffineMonoid<I>,
        target: AffineMonoid<I>,
        matrix: Mat<I>,
        caps: &Caps,
    ) -> Result<Self> {
        let ns = source.ambient().arity();
        let nt = target.ambient().arity();
        if matrix.rows != ns || matrix.cols != nt {
            return Err(MonoidError::InvalidInput(format!(
                "map matrix is {}x{}, expected {ns}x{nt}",
                matrix.rows, matrix.cols
            )));
        }
        // well-defined on torsion: d_j · (row of the j-th torsion basis
        // vector) must vanish in the target
        for (k, d) in source.ambient().torsion_factors.iter().enumerate() {
            let row = matrix.row_vec(source.ambient().free_rank + k);
            let image = target.ambient().reduce(&mat::scale(&row, *d));
            if !mat::is_zero_vec(&image) {
                return Err(MonoidError::InvalidInput(format!(
                    "matrix does not respect torsion factor {d} of the source"
                )));
            }
        }
        let mut generator_images = Vec::with_capacity(source.gens().len());
        for g in source.gens() {
            let img = apply_matrix(target.ambient(), &matrix, g);
            if !target.contains(&img, caps)? {
                return Err(MonoidError::InvalidInput(format!(
                    "image {img:?} of generator {g:?} is not in the target monoid"
                )));
            }
            generator_images.push(img);
        }
        Ok(MonoidMap { source, target, matrix, generator_images })
    }

    pub fn identity(m: &AffineMonoid<I>, caps: &Caps) -> Result<Self> {
        MonoidMap::new(m.clone(), m.clone(), Mat::identity(m.ambient().arity()), caps)
    }

    pub fn source(&self) -> &AffineMonoid<I> {
        &self.source
    }

    pub fn target(&self) -> &AffineMonoid<I> {
        &self.target
    }

    pub fn matrix(&self) -> &Mat<I> {
        &self.matrix
    }

    pub fn generator_images(&self) -> &[Vec<I>] {
        &self.generator_images
    }

    pub fn apply(&self, x: &[I]) -> Vec<I> {
        apply_matrix(self.target.ambient(), &self.matrix, x)
    }

    /// The image of the source monoid as a submonoid of the target's
    /// ambient group.
    pub fn image_monoid(&self) -> AffineMonoid<I> {
        AffineMonoid::new(self.target.ambient().clone(), self.generator_images.clone())
            .expect("images live in the target ambient")
    }

    /// Kernel test for the induced map on groupifications; returns a
    /// nonzero class witness when the map is not injective.
    pub fn groupification_kernel_witness(&self) -> Option<Vec<I>> {
        let src_sub = self.source.generated_subgroup();
        let tgt_rel = self.target.ambient().relation_rows();
        let preim = mat::preimage_lattice(&self.matrix, &tgt_rel);
        let kernel = mat::lattice_intersect(&src_sub.lattice.basis, &preim, self.matrix.rows);
        let src_rel = Lattice::from_rows(
            &self.source.ambient().relation_rows(),
            self.matrix.rows,
        );
        kernel
            .iter()
            .find(|k| !src_rel.contains(k))
            .map(|k| self.source.ambient().reduce(k))
    }
}

fn apply_matrix<I: LatticeInt>(
    target: &crate::group::AbelianGroup<I>,
    matrix: &Mat<I>,
    x: &[I],
) -> Vec<I> {
    assert_eq!(x.len(), matrix.rows);
    let mut out = vec![I::zero(); matrix.cols];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, oj) in out.iter_mut().enumerate() {
            *oj += *xi * matrix[(i, j)];
        }
    }
    target.reduce(&out)
}

/// Why a map fails to be Kummer.
#[derive(Clone, Debug, PartialEq)]
pub enum KummerFailure<I> {
    /// nonzero class of the source groupification killed by the map
    KernelClass(Vec<I>),
    /// target generator with no multiple in the image monoid
    NoMultipleInImage(Vec<I>),
}

/// Verdict of the Kummer test. `Unknown` is reserved for cap-exhaustion and
/// is distinct from a refutation.
#[derive(Clone, Debug, PartialEq)]
pub enum KummerVerdict<I> {
    Kummer { exponent: u32 },
    NotKummer { witness: KummerFailure<I> },
    Unknown { reason: String },
}

impl<I> KummerVerdict<I> {
    pub fn is_kummer(&self) -> bool {
        matches!(self, KummerVerdict::Kummer { .. })
    }
}

impl<I: LatticeInt> MonoidMap<I> {
    /// Kummer test: the map on groupifications must be injective and some
    /// uniform power of every target element must land in the image. The
    /// least exponent up to `caps.kummer_exponent` is reported.
    ///
    /// Existence of an exponent is decided exactly (each target generator
    /// must lie in the saturation of the image); only the scan for the
    /// least exponent is capped, so "unknown" means "Kummer, exponent above
    /// the cap" or a membership search blew the node budget.
    pub fn is_kummer(&self, caps: &Caps) -> Result<KummerVerdict<I>> {
        if !self.source.is_sharp() || !self.target.is_sharp() {
            return Err(MonoidError::InvalidInput(
                "kummer test expects sharp source and target".into(),
            ));
        }
        if let Some(w) = self.groupification_kernel_witness() {
            return Ok(KummerVerdict::NotKummer { witness: KummerFailure::KernelClass(w) });
        }
        let image = self.image_monoid();
        // a multiple of h lands in the image iff the free part of h lies in
        // the image cone and h lies in the rational saturation of the image
        // subgroup (both decided exactly)
        let hd = image.free_cone();
        let sat_lattice = Lattice::from_rows(
            &mat::lattice_saturation(
                &image.generated_subgroup().lattice.basis,
                self.target.ambient().arity(),
            ),
            self.target.ambient().arity(),
        );
        for h in self.target.gens() {
            let reachable = hd.contains(self.target.ambient().free_part(h))
                && sat_lattice.contains(h);
            if !reachable {
                return Ok(KummerVerdict::NotKummer {
                    witness: KummerFailure::NoMultipleInImage(h.clone()),
                });
            }
        }
        for n in 1..=caps.kummer_exponent {
            let c = I::from_int(n as i64);
            let mut all = true;
            for h in self.target.gens() {
                let nh = self.target.ambient().scale(h, c);
                match image.contains(&nh, caps) {
                    Ok(true) => {}
                    Ok(false) => {
                        all = false;
                        break;
                    }
                    Err(MonoidError::ResourceCap { detail, .. }) => {
                        return Ok(KummerVerdict::Unknown {
                            reason: format!("membership budget exhausted: {detail}"),
                        });
                    }
                    Err(e) => return Err(e),
                }
            }
            if all {
                return Ok(KummerVerdict::Kummer { exponent: n });
            }
        }
        Ok(KummerVerdict::Unknown {
            reason: format!("kummer exponent exceeds cap {}", caps.kummer_exponent),
        })
    }
}

/// The degree-`n` root of a fine sharp saturated monoid: the inclusion
/// `P → P^{1/n}` realized as multiplication by `n` on an isomorphic copy of
/// `P` (so the target copy plays the role of `P^{1/n}` and the map is
/// Kummer of exponent `n`).
pub fn root_monoid<I: LatticeInt>(
    p_monoid: &AffineMonoid<I>,
    n: u32,
    caps: &Caps,
) -> Result<MonoidMap<I>> {
    if n == 0 {
        return Err(MonoidError::InvalidInput("root exponent must be ≥ 1".into()));
    }
    if !p_monoid.is_sharp() {
        return Err(MonoidError::InvalidInput("root_monoid expects a sharp monoid".into()));
    }
    if !p_monoid.is_saturated(caps)? {
        return Err(MonoidError::InvalidInput("root_monoid expects a saturated monoid".into()));
    }
    let arity = p_monoid.ambient().arity();
    let mut matrix = Mat::identity(arity);
    for i in 0..arity {
        matrix[(i, i)] = I::from_int(n as i64);
    }
    MonoidMap::new(p_monoid.clone(), p_monoid.clone(), matrix, caps)
}

/// Pushout in the fine saturated category: the image of `Q2 ⊕ Q3` in the
/// group pushout `(A2 ⊕ A3)/⟨(h2(q), −h3(q))⟩` (the integral pushout),
/// then saturated.
pub fn pushout_fs<I: LatticeInt>(
    left: &MonoidMap<I>,
    right: &MonoidMap<I>,
    caps: &Caps,
) -> Result<AffineMonoid<I>> {
    if left.source() != right.source() {
        return Err(MonoidError::InvalidInput(
            "pushout legs must share their source monoid".into(),
        ));
    }
    let a2 = left.target().ambient();
    let a3 = right.target().ambient();
    let (n2, n3) = (a2.arity(), a3.arity());
    let n = n2 + n3;
    let pad_left = |v: &[I]| -> Vec<I> {
        let mut out = vec![I::zero(); n];
        out[..n2].copy_from_slice(v);
        out
    };
    let pad_right = |v: &[I]| -> Vec<I> {
        let mut out = vec![I::zero(); n];
        out[n2..].copy_from_slice(v);
        out
    };
    let mut relations: Vec<Vec<I>> = Vec::new();
    for r in a2.relation_rows() {
        relations.push(pad_left(&r));
    }
    for r in a3.relation_rows() {
        relations.push(pad_right(&r));
    }
    for q in left.source().gens() {
        let l = left.apply(q);
        let r = right.apply(q);
        // the identification (h2(q), 0) = (0, h3(q))
        relations.push(mat::sub_vec(&pad_left(&l), &pad_right(&r)));
    }
    let qp = present_quotient(n, &relations);
    let mut gens: Vec<Vec<I>> = Vec::new();
    for g in left.target().gens() {
        gens.push(qp.project(&pad_left(g)));
    }
    for g in right.target().gens() {
        gens.push(qp.project(&pad_right(g)));
    }
    let integral = AffineMonoid::new(qp.group.clone(), gens)?;
    integral.saturate(caps)
}
