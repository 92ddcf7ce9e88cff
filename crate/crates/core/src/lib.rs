//! Equidistribution of closed horocycles on the modular surface, computed
//! exactly where the problem is arithmetic and numerically where it is
//! geometric.
//!
//! The crate is organized around the reduction of horocycle/box intersection
//! counts to coprime lattice-point counts in triangles and trapezia:
//!
//! * [`arith`] — sieves, Farey sequences, Franel discrepancies and exact
//!   Möbius-inverted lattice counts with explicit error constants;
//! * [`hyp`] — 2×2 unimodular matrices, the geodesic/horocycle flows,
//!   Iwasawa decompositions, the tangent action and Ford-circle geometry;
//! * [`measures`] — intersection counts `n(t)`, closed-horocycle measures
//!   `m_y` of adapted boxes, Haar comparison and error-term scans;
//! * [`spectral`] — the Mellin transform of `y ↦ m_y(f)`, the scattering
//!   function, truncated Eisenstein series and totient-weighted discrete
//!   measures;
//! * [`cli`] — the `horocycle` command-line front end.

pub mod arith;
pub mod cli;
pub mod error;
pub mod hyp;
pub mod measures;
pub mod output;
pub mod rational;
pub mod report;
pub mod spectral;
pub mod util;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
