//! Exact integer arithmetic: sieves, Farey sequences, Franel–Landau
//! discrepancies, and coprime lattice-point counting in triangles and
//! trapezia.

mod farey;
mod mertens;
mod region;
mod sieve;

pub use farey::{farey, franel_stats, DiscrepancyStats, FareySequence};
pub use mertens::{mertens_scan, MertensRow};
pub use region::{
    count_lattice_all, count_lattice_coprime, coprime_count_up_to, lattice_count_up_to, EdgeRule,
    LatticeRegion, RegionKind, RowTable,
};
pub use sieve::{build_sieves, is_prime, totient_summatory, SieveTables};
