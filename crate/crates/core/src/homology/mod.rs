//! Z2 cubical homology for cellular set systems.

pub mod betti;
pub mod cubical;
pub mod gf2;
pub mod nerve;

pub use betti::{betti, shatter_profile, shatter_value, BettiVector, ShatterProfile};
pub use cubical::{build_complex, cell_coords, cell_index, ChainComplex, CubicalSetSystem};
pub use gf2::{gf2_rank, Gf2Matrix, SparseGf2Matrix};
pub use nerve::{nerve, NerveComplex};
