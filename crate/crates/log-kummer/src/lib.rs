//! Divisor-level log Kummer theory on the line with boundary `{0, 1, ∞}`:
//! the rank-2 lattice of log unit classes, the `p`-th power obstruction,
//! the surjectivity certificate, Hom groups of the rank-`p` group schemes
//! by exhaustive Hopf-algebra search, boundary section groups, and the
//! assembled decomposition check.

pub mod certificate;
pub mod decomposition;
pub mod hopf;
pub mod r1;
pub mod units;

pub use certificate::{surjectivity_certificate, ObstructionCase, SurjectivityCertificate};
pub use curve_cohomology::{CurveError, Result};
pub use decomposition::{mu_p_decomposition_check, DecompositionReport};
pub use hopf::{hom_group_schemes, FiniteGroupSchemeTag, GroupSchemeKind, HomGroup};
pub use r1::{r1_sections, R1Sections};
pub use units::{log_unit_classes, pth_power_test, LogUnitClass, LogUnitLattice};
