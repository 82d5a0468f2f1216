pub mod basis_map;
pub mod cochain;
pub mod cohomology;
pub mod error;
pub mod ghz;
pub mod group;
pub mod guard;
pub mod lattice;
pub mod phase;
pub mod phases_lambda;
pub mod report;
pub mod snf;
pub mod spt2d;
pub mod spt3d;
pub mod tensor;
pub mod tnu;
pub mod triple_line;
pub mod verdict;

pub use basis_map::BasisMap;
pub use cochain::{carry_four_cocycle, carry_three_cocycle, zxz_four_cocycle, Cochain};
pub use error::{Error, Result};
pub use ghz::{ghz, GhzSum};
pub use group::FiniteGroup;
pub use phase::{Amplitude, PhaseInt};
pub use tensor::Tensor;
