//! Closed-horocycle measures of adapted boxes and their comparison with
//! normalized Haar measure.
//!
//! The measure of a box under the closed horocycle of period 1/y is
//! m_y(C) = n·y·ℓ, where n counts intersections with the base; n reduces to
//! a coprime lattice count over a trapezium, so both an exact fast path and
//! a direct enumeration oracle are provided and must agree.

mod adapted_box;
mod box_function;
mod count;
mod scan;

pub use adapted_box::{haar_measure, AdaptedBox, HAAR_NORMALIZATION};
pub use box_function::BoxFunction;
pub use count::{intersection_count, intersection_count_direct, CountPath, CountReport};
pub use scan::{
    error_scan, geometric_grid, horocycle_measure, required_sieve_bound, MeasureRow, MeasureScan,
};
