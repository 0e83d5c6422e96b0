use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use super::{FiniteGroup, GroupAlgebraElement};
use crate::error::{Error, Result};
use crate::pnorm::{pnorm_with, CertifiedInterval, ComplexMatrix, PExponent, PowerConfig};

/// `omega_n^k` with `omega_n = exp(2 pi i / n)`; exact at quarter turns.
pub fn root_of_unity(n: usize, k: i64) -> Complex64 {
    let k = k.rem_euclid(n as i64) as usize;
    // Reduce to exact values where the angle is a multiple of pi/2.
    if (4 * k).is_multiple_of(n) {
        return match 4 * k / n {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)
}

/// The unitary `u_n` with entries `omega_n^(jk) / sqrt(n)`.
pub fn dft_matrix(n: usize) -> ComplexMatrix {
    assert!(n >= 1, "dft_matrix needs n >= 1");
    let scale = 1.0 / (n as f64).sqrt();
    ComplexMatrix::from_fn(n, n, |j, k| root_of_unity(n, (j * k) as i64) * scale)
}

/// An element of `F^p(Z_n)` in Gelfand (diagonal) coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct CirculantElement {
    gelfand: Vec<Complex64>,
}

impl CirculantElement {
    pub fn new(gelfand: Vec<Complex64>) -> Result<Self> {
        if gelfand.is_empty() {
            return Err(Error::Shape("empty Gelfand vector".into()));
        }
        if let Some(i) = gelfand.iter().position(|z| !z.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(CirculantElement { gelfand })
    }

    pub fn n(&self) -> usize {
        self.gelfand.len()
    }

    pub fn gelfand(&self) -> &[Complex64] {
        &self.gelfand
    }

    /// `||xi||_inf`, the `F^2(Z_n)` norm.
    pub fn sup_norm(&self) -> f64 {
        self.gelfand.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `u_n d(xi) u_n^-1`.
    pub fn matrix(&self) -> ComplexMatrix {
        let n = self.n();
        let u = dft_matrix(n);
        // (u d u^H)[a][b] = sum_j u[a][j] xi_j conj(u[b][j])
        ComplexMatrix::from_fn(n, n, |a, b| {
            (0..n).map(|j| u[(a, j)] * self.gelfand[j] * u[(b, j)].conj()).sum()
        })
    }

    /// The cyclic forward shift `(x_0, ..., x_{n-1}) -> (x_{n-1}, x_0, ..., x_{n-2})`.
    pub fn cyclic_shift(&self) -> Self {
        let mut g = self.gelfand.clone();
        g.rotate_right(1);
        CirculantElement { gelfand: g }
    }
}

/// `||u_n d(xi) u_n^-1||_p`.
pub fn circulant_norm(xi: &CirculantElement, p: PExponent) -> Result<CertifiedInterval> {
    circulant_norm_with(xi, p, &PowerConfig::default())
}

pub fn circulant_norm_with(xi: &CirculantElement, p: PExponent, config: &PowerConfig) -> Result<CertifiedInterval> {
    pnorm_with(&xi.matrix(), p, config)
}

/// Gelfand coordinates of `f` on the standard `Z_n`:
/// `xi_j = sum_s f(s) omega_n^(-js)`.
///
/// With this orientation `u_n d(xi) u_n^-1` equals the regular
/// representation of `f`, and `delta_1` maps to `(1, conj(omega), ...)`.
pub fn to_gelfand(f: &GroupAlgebraElement) -> Result<CirculantElement> {
    if !f.group().is_standard_cyclic() {
        return Err(Error::NotCyclic);
    }
    let n = f.group().order();
    let gelfand = (0..n)
        .map(|j| {
            (0..n)
                .map(|s| f.coeff(s) * root_of_unity(n, -((j * s) as i64)))
                .sum()
        })
        .collect();
    Ok(CirculantElement { gelfand })
}

/// Inverse of [`to_gelfand`]: `f(s) = (1/n) sum_j xi_j omega_n^(js)`.
pub fn from_gelfand(xi: &CirculantElement) -> GroupAlgebraElement {
    let n = xi.n();
    let coeffs = (0..n)
        .map(|s| {
            (0..n)
                .map(|j| xi.gelfand[j] * root_of_unity(n, (j * s) as i64))
                .sum::<Complex64>()
                / n as f64
        })
        .collect();
    GroupAlgebraElement::new(Arc::new(FiniteGroup::cyclic(n)), coeffs).expect("length matches")
}
