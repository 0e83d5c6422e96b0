//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/oracle_matrices.json");
pub const ORACLE_EXPONENTS: [f64; 2] = [1.3, 2.7];

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Plain `(sum |x|^p)^(1/p)` without rescaling.
pub fn lp(x: &[Complex64], p: f64) -> f64 {
    x.iter().map(|z| z.norm().powf(p)).sum::<f64>().powf(1.0 / p)
}

pub fn matvec(a: &[Vec<Complex64>], x: &[Complex64]) -> Vec<Complex64> {
    a.iter().map(|row| row.iter().zip(x).map(|(r, v)| r * v).sum()).collect()
}

fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut r = 0.0;
    while i > 0 {
        r += f * (i % base) as f64;
        i /= base;
        f *= inv;
    }
    r
}

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

/// Point on the unit `l^p` sphere of `C^n` from `2n - 1` parameters in
/// `(0, 1)`: `n` radial weights and `n - 1` phases, the first phase being 0.
fn sphere_point(u: &[f64], n: usize, p: f64) -> Vec<Complex64> {
    let e: Vec<f64> = u[..n].iter().map(|v| -v.clamp(1e-300, 1.0).ln()).collect();
    let total: f64 = e.iter().sum();
    (0..n)
        .map(|j| {
            let r = (e[j] / total).powf(1.0 / p);
            let phase = if j == 0 { 0.0 } else { 2.0 * std::f64::consts::PI * u[n + j - 1] };
            Complex64::from_polar(r, phase)
        })
        .collect()
}

fn ratio(a: &[Vec<Complex64>], u: &[f64], p: f64) -> f64 {
    let n = a[0].len();
    let x = sphere_point(u, n, p);
    lp(&matvec(a, &x), p) / lp(&x, p)
}

/// Brute-force `max ||A x||_p` over the unit sphere: Halton sampling of
/// `samples` points, then coordinate-wise golden-section refinement of the
/// best `keep` of them.
pub fn sphere_oracle(a: &[Vec<Complex64>], p: f64, samples: u64, keep: usize) -> f64 {
    let n = a[0].len();
    let dims = 2 * n - 1;
    let mut best: Vec<(f64, Vec<f64>)> = Vec::with_capacity(keep + 1);
    for i in 1..=samples {
        let u: Vec<f64> = PRIMES[..dims].iter().map(|&b| radical_inverse(i, b)).collect();
        let v = ratio(a, &u, p);
        if best.len() < keep || v > best[best.len() - 1].0 {
            let pos = best.partition_point(|(w, _)| *w >= v);
            best.insert(pos, (v, u));
            best.truncate(keep);
        }
    }
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut top = 0.0f64;
    for (mut v, mut u) in best {
        let mut step = 0.05;
        for _ in 0..40 {
            for d in 0..dims {
                let (mut lo, mut hi) = ((u[d] - step).max(1e-12), (u[d] + step).min(1.0 - 1e-12));
                // Phases wrap around.
                if d >= n {
                    lo = u[d] - step;
                    hi = u[d] + step;
                }
                let eval = |t: f64, u: &Vec<f64>| {
                    let mut w = u.clone();
                    w[d] = if d >= n { t.rem_euclid(1.0) } else { t };
                    ratio(a, &w, p)
                };
                for _ in 0..50 {
                    let x1 = hi - phi * (hi - lo);
                    let x2 = lo + phi * (hi - lo);
                    if eval(x1, &u) > eval(x2, &u) {
                        hi = x2;
                    } else {
                        lo = x1;
                    }
                }
                let t = 0.5 * (lo + hi);
                let cand = eval(t, &u);
                if cand > v {
                    v = cand;
                    u[d] = if d >= n { t.rem_euclid(1.0) } else { t };
                }
            }
            step *= 0.7;
        }
        top = top.max(v);
    }
    top
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OracleCase {
    pub entries: Vec<Vec<[f64; 2]>>,
    /// `(p, oracle value)` pairs.
    pub values: Vec<(f64, f64)>,
}

impl OracleCase {
    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|z| c(z[0], z[1])).collect())
            .collect()
    }
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Complex64>> {
    (0..n)
        .map(|_| (0..n).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect())
        .collect()
}

pub fn fixture_matrices() -> Vec<Vec<Vec<Complex64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_611);
    (0..20).map(|i| random_matrix(&mut rng, if i % 2 == 0 { 2 } else { 3 })).collect()
}

pub fn load_fixture() -> Vec<OracleCase> {
    let text = std::fs::read_to_string(FIXTURE).expect("oracle fixture present");
    serde_json::from_str(&text).expect("oracle fixture parses")
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
