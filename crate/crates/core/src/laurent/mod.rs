//! Convolution operators on `l^p(Z)` through finite sections, and the
//! Følner approximation of the quotient `Z -> Z_m`.

mod element;
mod folner;
mod quotient;
mod section;

pub use element::{symbol_sup, truncated_rep, LaurentElement, SymbolSup, ToeplitzSection, TruncationWindow};
pub use folner::{
    folner_average, folner_defect, folner_lift, theta_l1, theta_p_bound, FolnerSequenceZ, QuotientSetupZ,
    ThetaOperator,
};
pub use quotient::{default_window, quotient_gap, lift_norm, QuotientGap, SweepRecord};
pub use section::{
    envelope, fpz_norm, fpz_norm_with, fpz_sweep, pad_centered, periodic_start, plane_wave_start, section_config,
};
