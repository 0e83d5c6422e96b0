use std::f64::consts::PI;

use num_complex::Complex64;

use super::element::{symbol_sup, LaurentElement, ToeplitzSection, TruncationWindow};
use crate::error::{Error, Result};
use crate::pnorm::{
    best_interpolation_bound, enforce_bracket, pnorm_lower_with, CertifiedInterval, Endpoint, PExponent,
    PowerConfig,
};

/// Start policy for the power iteration on a section of dimension `dim`
/// with `taps` nonzero diagonals, scaled so each norm takes about a second at
/// most. A step costs `dim * taps` products plus a few `powf` per entry.
pub fn section_config(dim: usize, taps: usize, seed: u64) -> PowerConfig {
    let base = PowerConfig::default().with_seed(seed);
    if dim <= 64 {
        return base;
    }
    let work = dim * (taps + 16);
    let random_starts = match work {
        0..=100_000 => 2,
        100_001..=1_000_000 => 1,
        _ => 0,
    };
    PowerConfig {
        random_starts,
        max_iter: (3_000_000 / work).clamp(5, 10_000),
        basis_limit: Some(64),
        ..base
    }
}

/// `x[i] = sin(pi (i + 1/2) / n)^(2/p)`, a profile whose `p`-th power is
/// smooth and vanishes at both ends of the window.
pub fn envelope(n: usize, p: PExponent) -> Vec<f64> {
    let e = 2.0 * p.reciprocal();
    (0..n)
        .map(|i| (PI * (i as f64 + 0.5) / n as f64).sin().powf(e))
        .collect()
}

/// Repeats `pattern` with period `pattern.len()` over the window, aligned so
/// the integer `z` carries `pattern[z mod m]`, tapered by [`envelope`].
pub fn periodic_start(pattern: &[Complex64], window: TruncationWindow, p: PExponent) -> Vec<Complex64> {
    let m = pattern.len() as i64;
    envelope(window.dim(), p)
        .into_iter()
        .enumerate()
        .map(|(i, w)| pattern[window.point(i).rem_euclid(m) as usize] * w)
        .collect()
}

/// Tapered plane wave `e^(-i angle z)`; convolution by `f` multiplies it by
/// the symbol at `angle`, up to edge effects.
pub fn plane_wave_start(angle: f64, window: TruncationWindow, p: PExponent) -> Vec<Complex64> {
    envelope(window.dim(), p)
        .into_iter()
        .enumerate()
        .map(|(i, w)| Complex64::from_polar(w, -angle * window.point(i) as f64))
        .collect()
}

/// Certified bracket for the norm of convolution by `f` on `l^p(Z)`.
///
/// The lower bound is attained on the finite section over `window`; the upper
/// bound interpolates `||f||_1` (at `p = 1` and `p = inf`) and the sup of the
/// symbol over the circle (at `p = 2`).
pub fn fpz_norm(f: &LaurentElement, p: PExponent, window: TruncationWindow) -> Result<CertifiedInterval> {
    let section = ToeplitzSection::new(f, window)?;
    let config = section_config(window.dim(), section.taps(), 0);
    fpz_norm_with(f, p, window, &config, &[])
}

pub fn fpz_norm_with(
    f: &LaurentElement,
    p: PExponent,
    window: TruncationWindow,
    config: &PowerConfig,
    warm_starts: &[Vec<Complex64>],
) -> Result<CertifiedInterval> {
    let section = ToeplitzSection::new(f, window)?;
    let n = window.dim();
    let zero = Complex64::new(0.0, 0.0);
    if f.is_zero() {
        let mut witness = vec![zero; n];
        witness[window.half_width()] = Complex64::new(1.0, 0.0);
        return Ok(CertifiedInterval { lower: 0.0, upper: 0.0, witness, p, converged: true });
    }
    let l1 = f.l1_norm();
    let (lower, witness, converged, upper) = if p == PExponent::ONE {
        let (col, value) = section.column_norm();
        let mut e = vec![zero; n];
        e[col] = Complex64::new(1.0, 0.0);
        (value, e, true, l1)
    } else if p.is_infinite() {
        let (row, value) = section.row_norm();
        let x = (0..n)
            .map(|j| {
                let z = f.coeff(row as i64 - j as i64);
                if z.norm() > 0.0 { z.conj() / z.norm() } else { zero }
            })
            .collect();
        (value, x, true, l1)
    } else {
        let sup = symbol_sup(f);
        let mut starts = warm_starts.to_vec();
        starts.push(plane_wave_start(sup.angle, window, p));
        let mut centre = vec![zero; n];
        centre[window.half_width()] = Complex64::new(1.0, 0.0);
        starts.push(centre);
        let run = pnorm_lower_with(&section, p, config, &starts)?;
        let upper = best_interpolation_bound(p, |e| match e {
            Endpoint::Two => sup.upper,
            Endpoint::One | Endpoint::Infinity => l1,
        });
        (run.lower, run.witness, run.converged, upper)
    };
    // The upper bound is closed form; an estimate above it by rounding only
    // is pulled back so that bounds like `||T_k|| <= 1` stay exact.
    enforce_bracket(lower, upper)?;
    let lower = lower.min(upper);
    Ok(CertifiedInterval { lower, upper, witness, p, converged })
}

/// `fpz_norm` over growing windows. Each window is also started from the
/// previous witness padded with zeros, so the lower bounds never decrease.
pub fn fpz_sweep(
    f: &LaurentElement,
    p: PExponent,
    half_widths: &[usize],
    seed: u64,
) -> Result<Vec<CertifiedInterval>> {
    if half_widths.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidArgument("window sweep must be nondecreasing".into()));
    }
    let mut out: Vec<CertifiedInterval> = Vec::with_capacity(half_widths.len());
    for &l in half_widths {
        let window = TruncationWindow::new(l)?;
        let section = ToeplitzSection::new(f, window)?;
        let config = section_config(window.dim(), section.taps(), seed);
        let warm: Vec<Vec<Complex64>> = out
            .last()
            .map(|prev| vec![pad_centered(&prev.witness, window.dim())])
            .unwrap_or_default();
        let mut interval = fpz_norm_with(f, p, window, &config, &warm)?;
        if let Some(prev) = out.last() {
            // The padded witness is among the starts, so this only absorbs
            // rounding in re-evaluating it.
            if interval.lower < prev.lower {
                interval.lower = prev.lower;
                interval.witness = pad_centered(&prev.witness, window.dim());
            }
        }
        out.push(interval);
    }
    Ok(out)
}

/// Embeds a vector on a smaller centered window into one of dimension `n`.
pub fn pad_centered(x: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    let offset = (n.saturating_sub(x.len())) / 2;
    for (o, v) in out[offset..].iter_mut().zip(x) {
        *o = *v;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn p(v: f64) -> PExponent {
        PExponent::new(v).unwrap()
    }

    #[test]
    fn translations_are_isometries() {
        let w = TruncationWindow::new(40).unwrap();
        for s in [-3, 0, 5] {
            for e in [1.0, 1.3, 2.0, 3.5, f64::INFINITY] {
                let r = fpz_norm(&LaurentElement::delta(s), p(e), w).unwrap();
                assert!((r.lower - 1.0).abs() < 1e-15 && (r.upper - 1.0).abs() < 1e-15, "s={s} p={e}");
            }
        }
    }

    #[test]
    fn one_plus_shift_at_two() {
        let f = LaurentElement::new([(0, c(1.0, 0.0)), (1, c(1.0, 0.0))]).unwrap();
        let r = fpz_norm(&f, PExponent::TWO, TruncationWindow::new(50).unwrap()).unwrap();
        assert!(r.lower >= 1.995, "{}", r.lower);
        assert!(r.upper <= 2.0 + 1e-9);
    }

    #[test]
    fn endpoints_are_l1() {
        let f = LaurentElement::new([(-1, c(0.5, 0.5)), (2, c(0.0, -1.0))]).unwrap();
        let w = TruncationWindow::new(10).unwrap();
        for e in [PExponent::ONE, PExponent::INFINITY] {
            let r = fpz_norm(&f, e, w).unwrap();
            assert!((r.lower - f.l1_norm()).abs() < 1e-15);
            assert!((r.upper - f.l1_norm()).abs() < 1e-15);
        }
    }

    #[test]
    fn sweep_is_monotone() {
        let f = LaurentElement::new([(0, c(1.0, 0.0)), (1, c(0.0, 1.0)), (3, c(-0.5, 0.2))]).unwrap();
        let r = fpz_sweep(&f, p(1.5), &[4, 8, 16, 32, 64], 3).unwrap();
        for w in r.windows(2) {
            assert!(w[1].lower >= w[0].lower);
        }
        assert!(r.last().unwrap().lower <= r.last().unwrap().upper);
    }

    #[test]
    fn padding_is_centered() {
        let x = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)];
        let y = pad_centered(&x, 7);
        assert_eq!(y[2..5], x);
        assert_eq!(y[0], c(0.0, 0.0));
    }
}
