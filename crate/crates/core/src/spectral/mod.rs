//! Spectral-side numerics: the Mellin transform of y ↦ m_y(f), the
//! scattering function, truncated Eisenstein series, and totient-weighted
//! discrete measures.

mod eisenstein;
mod mellin;
mod nu;
mod scattering;
mod special;

pub use eisenstein::{eisenstein_e, EisensteinSample};
pub use mellin::{mellin_g, MellinSample};
pub use nu::{nu_phi, nu_phi_scan, NuRow, TestFunction1D};
pub use scattering::{in_reference_domain, phi_scattering};
pub use special::{gamma, zeta};
