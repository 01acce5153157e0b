//! Finite-scale Stone duality: distributive lattices and frames, finite
//! spaces, the ideal and open-prime-filter constructions, and a small
//! category engine that checks monad, comonad, adjunction and lifting laws
//! on explicit finite universes.

pub mod bits;
pub mod catengine;
pub mod dlat;
pub mod enumerate;
pub mod frame;
pub mod order;
pub mod stone;
pub mod topspace;

pub use dlat::{DistLattice, Ideal, IdealLattice, LatticeError, LatticeHom, PrimeFilter};
pub use frame::{FrameError, Spectrum};
pub use order::{FinPoset, OrderError};
pub use topspace::{ContinuousMap, FilterSpace, FinSpace, OpenPrimeFilter, OpenSetFrame, TopologyError};
