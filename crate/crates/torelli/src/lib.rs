//! Exact computational algebra around mapping class groups of once-bounded
//! surfaces: free group arithmetic, truncated Magnus expansions and Lyndon
//! bases for the lower central series, free nilpotent groups and their
//! automorphism towers, a calculus of finitely presented FI-modules with a
//! Smith-normal-form backend, boundary-preserving automorphisms of surface
//! groups with their Johnson filtration, and the trivalent-graph generating
//! series of the stable rational cohomology ring.
//!
//! Everything is exact: arbitrary-precision integers throughout, no floating
//! point, no modular shortcuts. Randomised checks are seeded and reproducible.

pub mod error;
pub mod ficalc;
pub mod freelie;
pub mod graphs;
pub mod intmat;
pub mod mcg;
pub mod nilpotent;
pub mod sampling;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
