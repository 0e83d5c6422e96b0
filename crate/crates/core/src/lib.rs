//! Certified `l^p -> l^p` operator norms and their use on group algebras.
//!
//! The crate is organised in three layers:
//!
//! * [`pnorm`]: two-sided estimates of induced matrix `p`-norms. Exact at
//!   `p` in `{1, 2, inf}`, a multistart power iteration for lower bounds and
//!   Riesz-Thorin interpolation for upper bounds elsewhere.
//! * [`groupalg`]: finite groups, their group algebras, the left regular
//!   representation, the `Z_n` Gelfand (DFT) picture, subgroup embeddings and
//!   quotient push-forwards.
//! * [`laurent`]: finite sections of convolution operators on `l^p(Z)`,
//!   Folner averages and the lifting machinery for the quotient `Z -> Z_m`.
//!
//! [`io`] holds the JSON file formats shared by the command line tool and the
//! Python bindings.

pub mod error;
pub mod groupalg;
pub mod io;
pub mod laurent;
pub mod pnorm;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use groupalg::{CirculantElement, CosetDecomposition, FiniteGroup, GroupAlgebraElement, GroupHom};
pub use laurent::{FolnerSequenceZ, LaurentElement, QuotientGap, QuotientSetupZ, TruncationWindow};
pub use pnorm::{CertifiedInterval, ComplexMatrix, Endpoint, PExponent, PowerConfig};
