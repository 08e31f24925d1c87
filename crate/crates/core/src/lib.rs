//! Clean, weakly clean and feebly clean group rings `O_p[G]` for finite
//! abelian `G`, over localisations of the integers of `Q`, `Q(zeta_m)` and
//! `Q(sqrt d)`.

mod error;

pub mod abelian;
pub mod base_rings;
pub mod classifier;
pub mod cli;
pub mod ffpoly;
pub mod ntheory;
pub mod survey;
pub mod verify;

pub use abelian::AbelianGroup;
pub use base_rings::{BaseKind, BaseRing};
pub use classifier::{
    classify_first_principles, classify_theorem, classify_theorem_with, cross_validate,
    Agreement, AgreementRecord, ClassificationReport, CleannessClass, DiscrepancyLedger,
    DivisorWitness, Method, Reading,
};
pub use error::{Error, Result};
