//! The hyperbolic substrate: 2×2 unimodular matrices, the geodesic and
//! horocycle flows, Iwasawa decompositions, the tangent-bundle action, box
//! measure and Ford-circle geometry.

mod geometry;
mod iwasawa;
mod matrix;
mod tangent;

pub use geometry::{
    box_haar_measure, ford_apex, psi_jacobian_check, psi_map, rect_hyperbolic_area,
};
pub use iwasawa::{iwasawa_ank, iwasawa_nak, IwasawaAnk, IwasawaNak};
pub use matrix::GroupElement;
pub use tangent::{act_tangent, TangentPoint};
