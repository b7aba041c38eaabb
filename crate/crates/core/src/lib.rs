//! Exact arithmetic for the compound basis `W_λ = Q_{λʳ}(x)·S_{λᵈ}(x²)` of the
//! ring of symmetric functions.
//!
//! The crate is layered bottom-up:
//!
//! - [`partition`]: partitions, the bijections φ, ψ and Glaisher, the
//!   three-runner h-abacus and the classical 2-core/2-quotient.
//! - [`symfunc`]: sparse symmetric functions in the power-sum basis with
//!   arbitrary-precision rational coefficients, and the Schur, Q, P, W, V and
//!   Q′ families built on top.
//! - [`linalg`]: dense big-integer matrices, fraction-free elimination and the
//!   Smith normal form.
//! - [`transition`]: the labelled matrices A_n, Γ_n, G_n, ᵗA_nA_n and its
//!   diagonal blocks.
//! - [`verify`]: one check per identity, producing machine-readable reports.
//! - [`format`] and [`cache`]: emitters, parsers and the on-disk cache used by
//!   the `compound` binary.

pub mod cache;
pub mod error;
pub mod format;
pub mod linalg;
pub mod partition;
pub mod symfunc;
pub mod transition;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Partition, PartitionFilter};
pub use symfunc::{InnerProductKind, SymFunc};
pub use transition::{Label, LabelOrder, LabeledIntMatrix};
pub use verify::{VerificationReport, VerifyConfig};
