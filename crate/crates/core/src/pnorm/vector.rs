use num_complex::Complex64;

use super::PExponent;

/// `(sum |x_i|^p)^(1/p)`, or `max |x_i|` at `p = inf`.
///
/// Entries are rescaled by the largest modulus first so large `p` neither
/// overflows nor underflows.
pub fn vector_pnorm(x: &[Complex64], p: PExponent) -> f64 {
    let max = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if max == 0.0 || p.is_infinite() {
        return max;
    }
    let pv = p.value();
    if pv == 1.0 {
        return neumaier_sum(x.iter().map(|z| z.norm()));
    }
    let s = neumaier_sum(x.iter().map(|z| (z.norm() / max).powf(pv)));
    max * s.powf(1.0 / pv)
}

/// Compensated summation. Used where sums of many equal small terms must
/// land exactly on the representable result (e.g. `k` copies of `1/k`).
pub fn neumaier_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// The duality map `psi_r(v)_i = |v_i|^(r-1) * phase(v_i)`, with `phase(0) = 0`.
///
/// The input is rescaled by its largest modulus; only the direction of the
/// result is meaningful to callers.
pub fn duality_map(v: &[Complex64], r: PExponent) -> Vec<Complex64> {
    let max = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if max == 0.0 {
        return vec![Complex64::new(0.0, 0.0); v.len()];
    }
    let e = r.value() - 1.0;
    v.iter()
        .map(|z| {
            let m = z.norm();
            if m == 0.0 {
                Complex64::new(0.0, 0.0)
            } else {
                (z / m) * (m / max).powf(e)
            }
        })
        .collect()
}

/// Rescales `x` to unit `p`-norm in place. Returns the original norm.
pub fn normalize(x: &mut [Complex64], p: PExponent) -> f64 {
    let n = vector_pnorm(x, p);
    if n > 0.0 {
        for z in x.iter_mut() {
            *z /= n;
        }
    }
    n
}
