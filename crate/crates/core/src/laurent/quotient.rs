use serde::{Deserialize, Serialize};

use super::element::{LaurentElement, ToeplitzSection, TruncationWindow};
use super::folner::{folner_lift, theta_p_bound};
use super::section::{fpz_norm_with, periodic_start, section_config};
use crate::error::{Error, Result};
use crate::groupalg::{fp_lambda_norm_with, GroupAlgebraElement};
use crate::pnorm::{neumaier_sum, CertifiedInterval, PExponent, PowerConfig};

/// Half-width used when none is given: the support of the lift plus a margin
/// of `500 k m`. The section lower bound of a lift falls short of the quotient
/// norm by roughly `(k m / L)^2`, so the margin keeps that shortfall near
/// `1e-6` for every `k`.
pub fn default_window(k: usize, m: usize) -> usize {
    501 * k * m
}

/// Both sides of the quotient estimate for one lift `f~_k` of `f` in `C[Z_m]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuotientGap {
    pub m: usize,
    pub p: PExponent,
    pub k: usize,
    pub window: usize,
    /// `||f||` in `F^p(Z_m)`.
    pub target: CertifiedInterval,
    /// Bracket for the lift's norm on `l^p(Z)`.
    pub lift: CertifiedInterval,
    pub lift_lower: f64,
    /// `target.upper + (sum |f(s)|) * theta_p_bound(k, m, p)`.
    pub lift_upper_apriori: f64,
    pub l1: f64,
    pub theta_bound: f64,
}

impl QuotientGap {
    /// `target.lower - tol <= lift_lower <= lift_upper_apriori + 1e-8`.
    pub fn sandwich_holds(&self, tol: f64) -> bool {
        self.target.lower - tol <= self.lift_lower && self.lift_lower <= self.lift_upper_apriori + 1e-8
    }

    pub fn apriori_gap(&self) -> f64 {
        self.lift_upper_apriori - self.target.upper
    }

    /// `2 (sum |f(s)|) (2/k)^(1/p)`.
    pub fn gap_bound(&self) -> f64 {
        2.0 * self.l1 * (2.0 / self.k as f64).powf(self.p.reciprocal())
    }

    pub fn to_record(&self) -> SweepRecord {
        SweepRecord {
            m: self.m,
            p: self.p,
            k: self.k,
            window: self.window,
            target_lower: self.target.lower,
            target_upper: self.target.upper,
            lift_lower: self.lift_lower,
            lift_upper_apriori: self.lift_upper_apriori,
        }
    }
}

/// One row of a quotient sweep report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub m: usize,
    pub p: PExponent,
    pub k: usize,
    #[serde(rename = "L")]
    pub window: usize,
    pub target_lower: f64,
    pub target_upper: f64,
    pub lift_lower: f64,
    pub lift_upper_apriori: f64,
}

/// Norm bracket for an element `g` of `C[Z]` lying over a `Z_m` element whose
/// norm bracket is `target`. The target's witness, repeated periodically and
/// tapered, is added to the starts.
pub fn lift_norm(
    g: &LaurentElement,
    target: &CertifiedInterval,
    window: TruncationWindow,
    seed: u64,
) -> Result<CertifiedInterval> {
    let section = ToeplitzSection::new(g, window)?;
    let config = section_config(window.dim(), section.taps(), seed);
    let warm = if target.witness.is_empty() || target.p.value() <= 1.0 || target.p.is_infinite() {
        Vec::new()
    } else {
        vec![periodic_start(&target.witness, window, target.p)]
    };
    fpz_norm_with(g, target.p, window, &config, &warm)
}

/// Target norm of `f` on `Z_m`, the lift `f~_k`, its section lower bound on
/// `[-L, L]` and the a priori upper bound.
pub fn quotient_gap(
    f: &GroupAlgebraElement,
    p: PExponent,
    k: usize,
    window: Option<usize>,
    seed: u64,
) -> Result<QuotientGap> {
    if p.is_infinite() {
        return Err(Error::InvalidArgument("quotient gap needs finite p".into()));
    }
    let m = f.group().order();
    let lift = folner_lift(f, k)?;
    let half_width = window.unwrap_or_else(|| default_window(k, m));
    let window = TruncationWindow::new(half_width)?;
    let target = fp_lambda_norm_with(f, p, &PowerConfig::default().with_seed(seed))?;
    let lift_interval = lift_norm(&lift, &target, window, seed)?;
    let l1 = neumaier_sum(f.coeffs().iter().map(|z| z.norm()));
    let theta_bound = theta_p_bound(k, m as u32, p)?;
    Ok(QuotientGap {
        m,
        p,
        k,
        window: half_width,
        lift_lower: lift_interval.lower,
        lift_upper_apriori: target.upper + l1 * theta_bound,
        target,
        lift: lift_interval,
        l1,
        theta_bound,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::groupalg::FiniteGroup;

    #[test]
    fn unit_lifts_to_average() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let delta = GroupAlgebraElement::delta(z2, 0);
        for p in [1.0, 1.5, 2.0, 3.0] {
            let g = quotient_gap(&delta, PExponent::new(p).unwrap(), 4, None, 1).unwrap();
            assert!((g.target.lower - 1.0).abs() < 1e-6 && (g.target.upper - 1.0).abs() < 1e-6);
            assert!((g.lift_lower - 1.0).abs() < 1e-6, "p={p} {}", g.lift_lower);
            assert!(g.sandwich_holds(1e-6));
        }
    }

    #[test]
    fn record_uses_capital_window_key() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let delta = GroupAlgebraElement::delta(z2, 0);
        let g = quotient_gap(&delta, PExponent::TWO, 2, Some(16), 0).unwrap();
        let json = serde_json::to_string(&g.to_record()).unwrap();
        assert!(json.contains("\"L\":16"), "{json}");
    }
}
