//! Exact arithmetic for vanishing binomial products over `F_p^n`,
//! arithmetic sets, coefficient descent, coset covers and choosability of
//! linear maps.
//!
//! All routines are deterministic; exhaustive ones are bounded by a
//! [`Limits`] value and fail with [`Error::CapExceeded`] rather than run away.

pub mod arithmetic;
pub mod covers;
pub mod cyclotomic;
pub mod decomposition;
pub mod error;
pub mod fp;
pub mod group_ring;
pub mod linear_maps;

pub use arithmetic::{ArithmeticSet, ArithmeticVerdict};
pub use covers::{AbelianGroup, CosetCover, HyperplaneCoverInstance, Subgroup};
pub use cyclotomic::CyclotomicInt;
pub use decomposition::{EpsilonRelation, Representation};
pub use error::{Error, Result};
pub use fp::{FpMultiset, FpVector, Limits, PrimeModulus, SpanDecomposition};
pub use group_ring::{GroupRingCyc, GroupRingFp, TwistAssignment};
pub use linear_maps::{ChoiceSystem, CoverCertificate};
