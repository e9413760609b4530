//! Finitely generated submonoids of finitely generated abelian groups,
//! with exact groupification, saturation, sharpening and membership.

use std::collections::BTreeSet;

use crate::cone::{self, HDesc};
use crate::error::{Caps, MonoidError, Result};
use crate::group::{self, AbelianGroup, Subgroup};
use crate::mat::{self, Lattice};
use crate::scalar::LatticeInt;

/// Cached structural facts. `None` means "not computed"; a `Some` value is
/// trusted by consumers, so constructors only set what they guarantee.
#[derive(Clone, Debug, Default)]
pub struct MonoidFlags {
    pub saturated: Option<bool>,
    pub sharp: Option<bool>,
}

/// A finitely generated submonoid of `ambient`, given by reduced generator
/// vectors (sorted, deduplicated, zero dropped).
///
/// Any submonoid of an abelian group is cancellative, so every value of this
/// type is a fine monoid; saturation and sharpness are properties of the
/// generator set and are computed on demand.
#[derive(Clone, Debug)]
pub struct AffineMonoid<I> {
    ambient: AbelianGroup<I>,
    gens: Vec<Vec<I>>,
    pub flags: MonoidFlags,
}

impl<I: LatticeInt> PartialEq for AffineMonoid<I> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.gens == other.gens
    }
}
impl<I: LatticeInt> Eq for AffineMonoid<I> {}

impl<I: LatticeInt> AffineMonoid<I> {
    pub fn new(ambient: AbelianGroup<I>, gens: Vec<Vec<I>>) -> Result<Self> {
        let n = ambient.arity();
        let mut reduced: Vec<Vec<I>> = Vec::new();
        for g in &gens {
            if g.len() != n {
                return Err(MonoidError::InvalidInput(format!(
                    "generator arity {} does not match ambient arity {n}",
                    g.len()
                )));
            }
            let r = ambient.reduce(g);
            if !mat::is_zero_vec(&r) {
                reduced.push(r);
            }
        }
        reduced.sort();
        reduced.dedup();
        Ok(AffineMonoid { ambient, gens: reduced, flags: MonoidFlags::default() })
    }

    fn with_flags(ambient: AbelianGroup<I>, gens: Vec<Vec<I>>, flags: MonoidFlags) -> Self {
        let mut m = AffineMonoid::new(ambient, gens).expect("internal construction is valid");
        m.flags = flags;
        m
    }

    /// ℕ^k with its standard generators in ℤ^k.
    pub fn free(k: usize) -> Self {
        let ambient = AbelianGroup::free(k);
        let gens = mat::Mat::<I>::identity(k).rows_vec();
        AffineMonoid::with_flags(
            ambient,
            gens,
            MonoidFlags { saturated: Some(true), sharp: Some(true) },
        )
    }

    /// The numerical monoid `⟨gens⟩ ⊂ ℤ`.
    pub fn numerical(gens: &[i64]) -> Self {
        let ambient = AbelianGroup::free(1);
        let gens: Vec<Vec<I>> = gens.iter().map(|&g| vec![I::from_int(g)]).collect();
        AffineMonoid::new(ambient, gens).expect("arity 1")
    }

    /// The zero monoid in the trivial group.
    pub fn trivial() -> Self {
        AffineMonoid::with_flags(
            AbelianGroup::free(0),
            Vec::new(),
            MonoidFlags { saturated: Some(true), sharp: Some(true) },
        )
    }

    pub fn ambient(&self) -> &AbelianGroup<I> {
        &self.ambient
    }

    pub fn gens(&self) -> &[Vec<I>] {
        &self.gens
    }

    pub fn is_trivial_monoid(&self) -> bool {
        self.gens.is_empty()
    }

    /// Monoids of this type are finitely generated submonoids of abelian
    /// groups, hence integral: always fine.
    pub fn is_fine(&self) -> bool {
        true
    }

    pub fn free_parts(&self) -> Vec<Vec<I>> {
        self.gens.iter().map(|g| self.ambient.free_part(g).to_vec()).collect()
    }

    /// H-description of the rational cone spanned by the free parts of the
    /// generators (inside the free quotient of the ambient group).
    pub fn free_cone(&self) -> HDesc<I> {
        cone::hdesc_of_cone(self.ambient.free_rank, &self.free_parts())
    }

    /// The subgroup of the ambient group generated by the monoid.
    pub fn generated_subgroup(&self) -> Subgroup<I> {
        Subgroup::new(&self.ambient, &self.gens)
    }

    /// Presentation of the groupification (the subgroup of the ambient
    /// group generated by differences of monoid elements).
    pub fn groupify(&self) -> AbelianGroup<I> {
        group::subgroup_presentation(&self.ambient, &self.gens)
    }

    /// Indices of the generators that are invertible in the monoid: exactly
    /// those whose free part lies in the lineality space of the cone.
    pub fn unit_generator_indices(&self) -> Vec<usize> {
        let hd = self.free_cone();
        (0..self.gens.len())
            .filter(|&i| hd.in_lineality(self.ambient.free_part(&self.gens[i])))
            .collect()
    }

    /// The unit group as a subgroup of the ambient group.
    pub fn unit_subgroup(&self) -> Subgroup<I> {
        let idx = self.unit_generator_indices();
        let gens: Vec<Vec<I>> = idx.iter().map(|&i| self.gens[i].clone()).collect();
        Subgroup::new(&self.ambient, &gens)
    }

    pub fn is_sharp(&self) -> bool {
        if let Some(s) = self.flags.sharp {
            return s;
        }
        self.unit_generator_indices().is_empty()
    }

    /// Semantic saturation test: every Hilbert-basis element of the
    /// saturation must already be a member.
    pub fn is_saturated(&self, caps: &Caps) -> Result<bool> {
        if let Some(s) = self.flags.saturated {
            return Ok(s);
        }
        let sat = self.saturate(caps)?;
        for g in sat.gens() {
            if !self.contains(g, caps)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact membership: is `g` a nonnegative integer combination of the
    /// generators? Decided by a graded search over the non-unit generators
    /// with a subgroup check for the unit part.
    pub fn contains(&self, g: &[I], caps: &Caps) -> Result<bool> {
        if g.len() != self.ambient.arity() {
            return Err(MonoidError::InvalidInput(
                "membership query outside the ambient group".into(),
            ));
        }
        let g = self.ambient.reduce(g);
        if mat::is_zero_vec(&g) {
            return Ok(true);
        }
        let hd = self.free_cone();
        if !hd.contains(self.ambient.free_part(&g)) {
            return Ok(false);
        }
        let unit_idx: BTreeSet<usize> = self.unit_generator_indices().into_iter().collect();
        let unit_group = self.unit_subgroup();
        let positives: Vec<&Vec<I>> = (0..self.gens.len())
            .filter(|i| !unit_idx.contains(i))
            .map(|i| &self.gens[i])
            .collect();
        let w = hd.positive_grading();
        let deg = |v: &[I]| mat::dot(&w, self.ambient.free_part(v));
        let degrees: Vec<I> = positives.iter().map(|p| deg(p)).collect();
        debug_assert!(degrees.iter().all(|d| d.is_positive()));
        let target = deg(&g);

        let mut nodes: u64 = 0;
        // depth-first over multisets of positive generators, graded by w
        #[allow(clippy::too_many_arguments)]
        fn rec<I: LatticeInt>(
            m: &AffineMonoid<I>,
            positives: &[&Vec<I>],
            degrees: &[I],
            hd: &HDesc<I>,
            unit_group: &Subgroup<I>,
            rem: Vec<I>,
            rem_deg: I,
            from: usize,
            nodes: &mut u64,
            cap: u64,
        ) -> Result<bool> {
            *nodes += 1;
            if *nodes > cap {
                return Err(MonoidError::ResourceCap {
                    operation: "contains",
                    detail: "membership search nodes".into(),
                    cap,
                });
            }
            if rem_deg.is_zero() {
                return Ok(unit_group.contains(&rem));
            }
            if !hd.contains(m.ambient.free_part(&rem)) {
                return Ok(false);
            }
            for i in from..positives.len() {
                if degrees[i] <= rem_deg {
                    let next = m.ambient.add(&rem, &m.ambient.neg(positives[i]));
                    if rec(
                        m, positives, degrees, hd, unit_group, next,
                        rem_deg - degrees[i], i, nodes, cap,
                    )? {
                        return Ok(true);
                    }
                }
            }
            Ok(false)
        }
        rec(
            self,
            &positives,
            &degrees,
            &hd,
            &unit_group,
            g,
            target,
            0,
            &mut nodes,
            caps.membership_nodes,
        )
    }

    /// Saturation inside the groupification: all `g` in the generated
    /// subgroup with `n·g` in the monoid for some `n ≥ 1`, presented by a
    /// canonical Hilbert basis (plus unit directions and the full torsion
    /// part, which is always invertible hence saturated in).
    pub fn saturate(&self, caps: &Caps) -> Result<AffineMonoid<I>> {
        let r = self.ambient.free_rank;
        if self.gens.is_empty() {
            return Ok(AffineMonoid::with_flags(
                self.ambient.clone(),
                Vec::new(),
                MonoidFlags { saturated: Some(true), sharp: Some(true) },
            ));
        }
        let w = self.generated_subgroup();
        // torsion part of the subgroup: basis rows with zero free part
        let torsion_gens: Vec<Vec<I>> = w
            .lattice
            .basis
            .iter()
            .filter(|b| mat::is_zero_vec(&b[..r]))
            .map(|b| self.ambient.reduce(b))
            .filter(|t| !mat::is_zero_vec(t))
            .collect();
        let torsion_elems = enumerate_subgroup(&self.ambient, &torsion_gens, caps)?;

        // free-part lattice and cone
        let fgens = self.free_parts();
        let v_basis = mat::lattice_basis(&fgens, r);
        let v_lat = Lattice::from_rows(&v_basis, r);
        let s = v_lat.rank();
        let mut out_gens: Vec<Vec<I>> = Vec::new();
        for t in &torsion_gens {
            out_gens.push(t.clone());
        }
        if s > 0 {
            let inner: Vec<Vec<I>> = fgens
                .iter()
                .map(|f| v_lat.coords(f).expect("generator free part lies in its lattice"))
                .collect();
            let hb = cone::hilbert_basis(s, &inner, caps)?;
            let back = |z: &[I]| -> Vec<I> {
                let mut outv = vec![I::zero(); r];
                for (c, b) in z.iter().zip(&v_lat.basis) {
                    outv = mat::add_vec(&outv, &mat::scale(b, *c));
                }
                outv
            };
            let mut free_vectors: Vec<Vec<I>> = hb.positives.iter().map(|z| back(z)).collect();
            for u in &hb.unit_directions {
                let v = back(u);
                free_vectors.push(v.clone());
                free_vectors.push(mat::neg_vec(&v));
            }
            for fv in free_vectors {
                let full = complete_with_torsion(self, &w, &fv, &torsion_elems)?;
                out_gens.push(full);
            }
        }
        Ok(AffineMonoid::with_flags(
            self.ambient.clone(),
            out_gens,
            MonoidFlags { saturated: Some(true), sharp: None },
        ))
    }

    /// Quotient by the unit group; the result is sharp. When the monoid is
    /// already sharp it is returned unchanged (so sharpening is idempotent
    /// on the nose, not just up to isomorphism).
    pub fn sharpen(&self) -> AffineMonoid<I> {
        let unit_idx = self.unit_generator_indices();
        if unit_idx.is_empty() {
            let mut m = self.clone();
            m.flags.sharp = Some(true);
            return m;
        }
        let n = self.ambient.arity();
        let mut relations = self.ambient.relation_rows();
        for &i in &unit_idx {
            relations.push(self.gens[i].clone());
        }
        let qp = group::present_quotient(n, &relations);
        let gens: Vec<Vec<I>> = self
            .gens
            .iter()
            .enumerate()
            .filter(|(i, _)| !unit_idx.contains(i))
            .map(|(_, g)| qp.project(g))
            .collect();
        let saturated = self.flags.saturated;
        AffineMonoid::with_flags(
            qp.group.clone(),
            gens,
            MonoidFlags { saturated, sharp: Some(true) },
        )
    }
}

/// All elements of the subgroup of the torsion part generated by `gens`
/// (full vectors, free part zero), capped.
fn enumerate_subgroup<I: LatticeInt>(
    ambient: &AbelianGroup<I>,
    gens: &[Vec<I>],
    caps: &Caps,
) -> Result<Vec<Vec<I>>> {
    let mut seen: BTreeSet<Vec<I>> = BTreeSet::new();
    seen.insert(ambient.zero());
    let mut frontier: Vec<Vec<I>> = vec![ambient.zero()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = ambient.add(&x, g);
            if seen.insert(y.clone()) {
                if seen.len() as u64 > caps.torsion_enumeration {
                    return Err(MonoidError::ResourceCap {
                        operation: "enumerate_subgroup",
                        detail: "torsion subgroup too large".into(),
                        cap: caps.torsion_enumeration,
                    });
                }
                frontier.push(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Find the canonical member of the generated subgroup with the given free
/// part: solve for any preimage, then take the lex-least torsion completion
/// modulo the torsion subgroup.
fn complete_with_torsion<I: LatticeInt>(
    m: &AffineMonoid<I>,
    w: &Subgroup<I>,
    free: &[I],
    torsion_elems: &[Vec<I>],
) -> Result<Vec<I>> {
    let r = m.ambient().free_rank;
    // basis rows with a pivot among the free coordinates biject onto the
    // free-part lattice
    let mut free_rows: Vec<Vec<I>> = Vec::new();
    let mut full_rows: Vec<Vec<I>> = Vec::new();
    for (row, &piv) in w.lattice.basis.iter().zip(&w.lattice.pivots) {
        if piv < r {
            free_rows.push(row[..r].to_vec());
            full_rows.push(row.clone());
        }
    }
    let pivots: Vec<usize> = w.lattice.pivots.iter().copied().filter(|&p| p < r).collect();
    let coeffs = mat::solve_in_basis(&free_rows, &pivots, free).ok_or_else(|| {
        MonoidError::InvalidInput("free part not in the generated lattice".into())
    })?;
    let mut full = vec![I::zero(); m.ambient().arity()];
    for (c, row) in coeffs.iter().zip(&full_rows) {
        full = mat::add_vec(&full, &mat::scale(row, *c));
    }
    let full = m.ambient().reduce(&full);
    // canonical coset representative modulo the torsion subgroup
    let mut best = full.clone();
    for t in torsion_elems {
        let cand = m.ambient().add(&full, t);
        if cand < best {
            best = cand;
        }
    }
    Ok(best)
}
