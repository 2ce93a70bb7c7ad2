//! Exact computations for two-row Young tableaux, their stable major index,
//! the fusion filtration on `(C^2)^{⊗N}`, the free-boson Virasoro action on
//! symmetric functions and the homogeneous vertex operator realization of the
//! basic `sl_2`-hat module.
//!
//! Every quantity is computed in exact integer or rational arithmetic, and most
//! statements are checked along two independent routes (see [`harness`]).

pub mod error;
pub mod fusion;
pub mod harness;
pub mod linalg;
pub mod partition;
pub mod qpoly;
pub mod report;
pub mod serpentine;
pub mod symfun;
pub mod table;
pub mod tableau;
pub mod vertex;
pub mod virasoro;

pub use error::{Result, SerpError};
pub use partition::Partition;
pub use qpoly::QPoly;
pub use serpentine::SerpentineTableau;
pub use symfun::{Rational, SymFun};
pub use tableau::TwoRowTableau;
