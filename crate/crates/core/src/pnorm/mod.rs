//! Induced `l^p -> l^p` norms of complex matrices.
//!
//! At `p = 1` and `p = inf` the norm is the largest column and row absolute
//! sum; at `p = 2` it is the largest singular value. Anywhere else only a
//! bracket is available: a lower bound from a multistart power iteration
//! (every iterate is a feasible vector, so the bound is attained by a
//! witness) and an upper bound from Riesz-Thorin interpolation between the
//! exact endpoints.

mod exponent;
mod interval;
mod matrix;
mod power;
mod vector;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use exponent::PExponent;
pub use interval::CertifiedInterval;
pub use matrix::{ComplexMatrix, LinearOperator};
pub use power::{multistart, power_iterate, MultistartResult, PowerConfig, PowerRun, MONOTONE_SLACK};
pub use vector::{duality_map, neumaier_sum, normalize, vector_pnorm};

/// Relative slack allowed when a computed lower bound exceeds the upper
/// bound by rounding alone.
const BRACKET_SLACK: f64 = 1e-12;

/// Interpolation endpoints with closed-form norms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Endpoint {
    One,
    Two,
    Infinity,
}

impl Endpoint {
    pub const ALL: [Endpoint; 3] = [Endpoint::One, Endpoint::Two, Endpoint::Infinity];

    pub fn exponent(self) -> PExponent {
        match self {
            Endpoint::One => PExponent::ONE,
            Endpoint::Two => PExponent::TWO,
            Endpoint::Infinity => PExponent::INFINITY,
        }
    }
}

/// The exact norm at `p` in `{1, 2, inf}` together with a witness.
pub fn pnorm_exact_interval(a: &ComplexMatrix, p: PExponent) -> Result<CertifiedInterval> {
    let zero = Complex64::new(0.0, 0.0);
    let (value, witness) = if p == PExponent::ONE {
        let (j, s) = (0..a.cols())
            .map(|j| (j, neumaier_sum((0..a.rows()).map(|i| a[(i, j)].norm()))))
            .fold((0, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        let mut e = vec![zero; a.cols()];
        e[j] = Complex64::new(1.0, 0.0);
        (s, e)
    } else if p.is_infinite() {
        let (i, s) = (0..a.rows())
            .map(|i| (i, neumaier_sum(a.row(i).iter().map(|z| z.norm()))))
            .fold((0, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        // Unimodular vector aligned with the conjugate phases of row i.
        let w = a
            .row(i)
            .iter()
            .map(|z| if z.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { z.conj() / z.norm() })
            .collect();
        (s, w)
    } else if p == PExponent::TWO {
        spectral_norm(a)
    } else {
        return Err(Error::NotExactExponent(p.value()));
    };
    let mut interval = CertifiedInterval {
        lower: value,
        upper: value,
        witness,
        p,
        converged: true,
    };
    // The witness ratio is the certified lower bound; keep the closed-form
    // value as the upper bound.
    let ratio = interval.witness_ratio(a);
    interval.lower = ratio.min(value);
    interval.upper = value.max(ratio);
    Ok(interval)
}

/// Exact `||A||_p` for `p` in `{1, 2, inf}`; rejects any other exponent.
pub fn pnorm_exact(a: &ComplexMatrix, p: PExponent) -> Result<f64> {
    Ok(pnorm_exact_interval(a, p)?.upper)
}

fn spectral_norm(a: &ComplexMatrix) -> (f64, Vec<Complex64>) {
    if a.is_zero() {
        let mut e = vec![Complex64::new(0.0, 0.0); a.cols()];
        e[0] = Complex64::new(1.0, 0.0);
        return (0.0, e);
    }
    // Hermitian eigenproblem of A^H A, solved to machine precision.
    let m = a.to_nalgebra();
    let gram = m.adjoint() * &m;
    let eig = gram.symmetric_eigen();
    let (k, lambda) = eig
        .eigenvalues
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |b, c| if c.1 > b.1 { c } else { b });
    let v: Vec<Complex64> = eig.eigenvectors.column(k).iter().copied().collect();
    let ratio = vector_pnorm(&a.matvec(&v), PExponent::TWO) / vector_pnorm(&v, PExponent::TWO);
    // The eigenvalue of A^H A loses half the digits of small singular values;
    // the witness ratio does not, and both agree at the top of the spectrum.
    (lambda.max(0.0).sqrt().max(ratio), v)
}

/// Multistart power-iteration lower bound for `1 < p < inf`.
///
/// The returned interval has `upper = inf`. `starts` is the number of seeded
/// random starts added to the all-ones vector and the basis vectors.
pub fn pnorm_lower(
    a: &dyn LinearOperator,
    p: PExponent,
    starts: usize,
    seed: u64,
    tol: f64,
) -> Result<CertifiedInterval> {
    let config = PowerConfig {
        random_starts: starts,
        seed,
        tol,
        ..PowerConfig::default()
    };
    pnorm_lower_with(a, p, &config, &[])
}

/// [`pnorm_lower`] with an explicit configuration and extra start vectors.
pub fn pnorm_lower_with(
    a: &dyn LinearOperator,
    p: PExponent,
    config: &PowerConfig,
    extra_starts: &[Vec<Complex64>],
) -> Result<CertifiedInterval> {
    if p.value() <= 1.0 || p.is_infinite() {
        return Err(Error::InvalidArgument(format!(
            "power iteration needs 1 < p < inf, got {p}"
        )));
    }
    let result = multistart(a, p, config, extra_starts);
    Ok(CertifiedInterval {
        lower: result.best.estimate,
        upper: f64::INFINITY,
        witness: result.best.witness,
        p,
        converged: result.best.converged,
    })
}

/// Riesz-Thorin bound `N0^(1-theta) * N1^theta` where
/// `1/p = (1-theta)/p0 + theta/p1` and `N_i` is the norm at `p_i`.
pub fn riesz_thorin(p: PExponent, (p0, n0): (PExponent, f64), (p1, n1): (PExponent, f64)) -> Result<f64> {
    let (r, r0, r1) = (p.reciprocal(), p0.reciprocal(), p1.reciprocal());
    let (lo, hi) = (r0.min(r1), r0.max(r1));
    if r < lo - 1e-15 || r > hi + 1e-15 {
        let (a, b) = (p0.value().min(p1.value()), p0.value().max(p1.value()));
        return Err(Error::OutsideEndpoints { p: p.value(), lo: a, hi: b });
    }
    if r0 == r1 {
        return Ok(n0.max(n1));
    }
    let theta = ((r0 - r) / (r0 - r1)).clamp(0.0, 1.0);
    if theta == 0.0 {
        return Ok(n0);
    }
    if theta == 1.0 {
        return Ok(n1);
    }
    Ok(n0.powf(1.0 - theta) * n1.powf(theta))
}

/// Interpolated upper bound for `||A||_p` between two exact endpoints.
pub fn pnorm_upper_interp(a: &ComplexMatrix, p: PExponent, endpoints: (Endpoint, Endpoint)) -> Result<f64> {
    let (e0, e1) = endpoints;
    let (p0, p1) = (e0.exponent(), e1.exponent());
    // Range check before spending time on the endpoint norms.
    riesz_thorin(p, (p0, 1.0), (p1, 1.0))?;
    riesz_thorin(p, (p0, pnorm_exact(a, p0)?), (p1, pnorm_exact(a, p1)?))
}

/// Smallest interpolation bound over all endpoint pairs that bracket `p`,
/// given the three endpoint norms.
pub fn best_interpolation_bound(p: PExponent, norm_at: impl Fn(Endpoint) -> f64) -> f64 {
    let pairs = [
        (Endpoint::One, Endpoint::Two),
        (Endpoint::Two, Endpoint::Infinity),
        (Endpoint::One, Endpoint::Infinity),
    ];
    pairs
        .iter()
        .filter_map(|&(e0, e1)| {
            riesz_thorin(p, (e0.exponent(), norm_at(e0)), (e1.exponent(), norm_at(e1))).ok()
        })
        .fold(f64::INFINITY, f64::min)
}

/// Certified bracket for `||A||_p` with the default start policy.
pub fn pnorm(a: &ComplexMatrix, p: PExponent) -> Result<CertifiedInterval> {
    pnorm_with(a, p, &PowerConfig::default())
}

pub fn pnorm_with(a: &ComplexMatrix, p: PExponent, config: &PowerConfig) -> Result<CertifiedInterval> {
    if p.is_exact() {
        return pnorm_exact_interval(a, p);
    }
    if a.is_zero() {
        let mut interval = pnorm_exact_interval(a, PExponent::ONE)?;
        interval.p = p;
        return Ok(interval);
    }
    let mut interval = pnorm_lower_with(a, p, config, &[])?;
    let n1 = pnorm_exact(a, PExponent::ONE)?;
    let n2 = pnorm_exact(a, PExponent::TWO)?;
    let ninf = pnorm_exact(a, PExponent::INFINITY)?;
    let upper = best_interpolation_bound(p, |e| match e {
        Endpoint::One => n1,
        Endpoint::Two => n2,
        Endpoint::Infinity => ninf,
    });
    interval.upper = enforce_bracket(interval.lower, upper)?;
    Ok(interval)
}

/// Returns the upper bound to report, allowing `lower` to exceed `upper`
/// by rounding only.
pub(crate) fn enforce_bracket(lower: f64, upper: f64) -> Result<f64> {
    if lower <= upper {
        Ok(upper)
    } else if lower - upper <= BRACKET_SLACK * (1.0 + upper) {
        Ok(lower)
    } else {
        Err(Error::InvalidArgument(format!(
            "lower bound {lower} exceeds upper bound {upper}"
        )))
    }
}

/// Checks `||A||_p == ||A^T||_p'` as overlapping certified brackets.
pub fn transpose_dual_check(a: &ComplexMatrix, p: PExponent, tol: f64) -> Result<bool> {
    if p.value() <= 1.0 || p.is_infinite() {
        return Err(Error::InvalidArgument(format!("duality check needs 1 < p < inf, got {p}")));
    }
    let lhs = pnorm(a, p)?;
    let rhs = pnorm(&a.transpose(), p.conjugate())?;
    Ok(lhs.overlaps(&rhs, tol))
}
