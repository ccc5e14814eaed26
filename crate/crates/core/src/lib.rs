//! Combinatorial convexity on finite set systems.
//!
//! Computes Radon, Helly and colorful Helly numbers and their graded
//! (`t`-member) profiles, `Z2` homology of cubical closure complexes and the
//! homological shatter profile, explicit extremal constructions, and
//! executable checks of the relations between these parameters.

pub mod bits;
pub mod error;
pub mod format;
pub mod generators;
pub mod graded;
pub mod harness;
pub mod helly;
pub mod homology;
pub mod intersection;
pub mod radon;
pub mod set_system;

pub use bits::{Bits, Subfamily};
pub use error::{Error, Result};
pub use graded::{graded, GradedOptions, GradedProfile, ParameterKind};
pub use harness::{CorpusSpec, PlugTable, PsiTables};
pub use helly::{colorful_check, colorful_helly_number, helly_number, ColorfulVerdict};
pub use homology::{betti, shatter_profile, BettiVector, CubicalSetSystem, ShatterProfile};
pub use radon::{find_radon_partition, is_radon_partition, radon_number, RadonResult};
pub use set_system::{Coloring, Partition2, PointSet, SetSystem};
