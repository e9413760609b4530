//! Exact algebra of finitely generated commutative monoids sitting inside
//! finitely generated abelian groups: groupification, saturation (Hilbert
//! bases), sharpening, amalgamated sums in the fine saturated category,
//! Kummer tests and explicit isomorphism search.
//!
//! Everything is computed over exact integers. The scalar type is generic
//! (any signed integer type satisfying the `num` traits); the crate root
//! exposes concrete aliases over [`Int`] which the rest of the workspace
//! uses. All values are immutable after construction and all operations are
//! pure functions, so values can be shared freely across threads.
//!
//! Potentially unbounded searches (Hilbert basis candidates, membership
//! search, Kummer exponent scan) run under explicit caps from [`Caps`]; when
//! a cap is hit the operation reports [`MonoidError::ResourceCap`] instead of
//! guessing.

// index loops mirror the matrix notation throughout the numeric kernels
#![allow(clippy::needless_range_loop)]

pub mod cone;
pub mod error;
pub mod group;
pub mod iso;
pub mod map;
pub mod mat;
pub mod monoid;
pub mod scalar;

pub use error::{Caps, MonoidError};
pub use group::AbelianGroup;
pub use iso::{monoid_isomorphic, IsoOutcome, MonoidIso, NotIsomorphic};
pub use map::{pushout_fs, root_monoid, KummerVerdict, MonoidMap};
pub use mat::Mat;
pub use monoid::AffineMonoid;
pub use scalar::LatticeInt;

/// Default exact scalar for the workspace. Desk-scale inputs stay far away
/// from the `i64` range (overflow checks stay on in release builds as a
/// guard); instantiate the generic types with `i128` for more headroom.
pub type Int = i64;

pub type AbelianGroupZ = AbelianGroup<Int>;
pub type AffineMonoidZ = AffineMonoid<Int>;
pub type MonoidMapZ = MonoidMap<Int>;
pub type MatZ = Mat<Int>;
