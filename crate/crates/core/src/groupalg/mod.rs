//! Finite groups, their group algebras and the regular representation.
//!
//! For a finite group `G` and `f` in `C[G]`, `lambda_p(f)` is the
//! `|G| x |G|` matrix of left convolution by `f` on `l^p(G)`. Its operator
//! norm is the `F^p_lambda(G)` norm (and, `G` being amenable, the universal
//! `F^p(G)` norm). For `Z_n` the same element has a diagonal picture
//! `u_n d(xi) u_n^-1` through the unitary DFT matrix.

mod circulant;
mod element;
mod group;

pub use circulant::{
    circulant_norm, circulant_norm_with, dft_matrix, from_gelfand, root_of_unity, to_gelfand, CirculantElement,
};
pub use element::{
    fp_lambda_norm, fp_lambda_norm_with, positive_norm_check, quotient_push, regular_rep, subgroup_embed,
    CosetDecomposition, GroupAlgebraElement,
};
pub use group::{FiniteGroup, GroupHom};

/// `cyclic_shift` as a free function over Gelfand coordinates.
pub fn cyclic_shift(xi: &CirculantElement) -> CirculantElement {
    xi.cyclic_shift()
}

/// `f -> f_check`, `f_check(s) = f(s^-1)`.
pub fn involution(f: &GroupAlgebraElement) -> GroupAlgebraElement {
    f.involution()
}
