use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{duality_map, normalize, vector_pnorm, LinearOperator, PExponent};

/// Relative drop in the estimate tolerated before a step counts as a
/// monotonicity violation. Covers rounding in the norm evaluation only.
pub const MONOTONE_SLACK: f64 = 1e-12;

/// Multistart policy and stopping rule for the `p`-norm power iteration.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerConfig {
    /// Number of seeded random complex starts.
    pub random_starts: usize,
    pub seed: u64,
    /// Stop when the relative change of the estimate drops below this.
    pub tol: f64,
    pub max_iter: usize,
    /// Start from every standard basis vector when the operator has at most
    /// this many columns; `None` means always.
    pub basis_limit: Option<usize>,
    pub ones_start: bool,
}

impl Default for PowerConfig {
    fn default() -> Self {
        PowerConfig {
            random_starts: 32,
            seed: 0,
            tol: 1e-12,
            max_iter: 10_000,
            basis_limit: None,
            ones_start: true,
        }
    }
}

impl PowerConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    /// The start vectors for an operator with `n` columns, without extras.
    pub fn start_vectors(&self, n: usize) -> Vec<Vec<Complex64>> {
        let zero = Complex64::new(0.0, 0.0);
        let mut starts = Vec::new();
        if self.ones_start {
            starts.push(vec![Complex64::new(1.0, 0.0); n]);
        }
        if self.basis_limit.is_none_or(|limit| n <= limit) {
            for j in 0..n {
                let mut e = vec![zero; n];
                e[j] = Complex64::new(1.0, 0.0);
                starts.push(e);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        for _ in 0..self.random_starts {
            starts.push(
                (0..n)
                    .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                    .collect(),
            );
        }
        starts
    }
}

/// Outcome of the iteration from one start.
#[derive(Clone, Debug)]
pub struct PowerRun {
    /// Best `||A x||_p` seen, with `||x||_p = 1`.
    pub estimate: f64,
    pub witness: Vec<Complex64>,
    pub iterations: usize,
    pub converged: bool,
    /// False if some step lowered the estimate by more than [`MONOTONE_SLACK`].
    pub monotone: bool,
    /// The estimate after each step, starting with the start vector.
    pub trace: Vec<f64>,
}

/// Runs `y = A x; z = A^H psi_p(y); x <- psi_p'(z) / ||.||_p` from `start`.
///
/// Requires `1 < p < inf`. The reported estimate is the best over the
/// trajectory, so it is always attained by the returned witness.
pub fn power_iterate(
    op: &dyn LinearOperator,
    p: PExponent,
    start: &[Complex64],
    config: &PowerConfig,
) -> PowerRun {
    let q = p.conjugate();
    let mut x = start.to_vec();
    if normalize(&mut x, p) == 0.0 {
        return PowerRun {
            estimate: 0.0,
            witness: x,
            iterations: 0,
            converged: true,
            monotone: true,
            trace: vec![0.0],
        };
    }
    let mut y = op.apply(&x);
    let mut est = vector_pnorm(&y, p);
    let mut best = (est, x.clone());
    let mut trace = vec![est];
    let mut monotone = true;
    let mut converged = est == 0.0;
    let mut iterations = 0;

    while !converged && iterations < config.max_iter {
        iterations += 1;
        let z = op.apply_adjoint(&duality_map(&y, p));
        let mut next = duality_map(&z, q);
        if normalize(&mut next, p) == 0.0 {
            converged = true;
            break;
        }
        let y_next = op.apply(&next);
        let e = vector_pnorm(&y_next, p);
        if e < est * (1.0 - MONOTONE_SLACK) {
            monotone = false;
        }
        let rel = (e - est).abs() / e.max(f64::MIN_POSITIVE);
        x = next;
        y = y_next;
        est = e;
        trace.push(e);
        if e > best.0 {
            best = (e, x.clone());
        }
        if rel < config.tol {
            converged = true;
        }
    }

    PowerRun {
        estimate: best.0,
        witness: best.1,
        iterations,
        converged,
        monotone,
        trace,
    }
}

/// Best run over the configured starts plus `extra` caller-supplied starts.
#[derive(Clone, Debug)]
pub struct MultistartResult {
    pub best: PowerRun,
    pub best_start: usize,
    pub starts: usize,
    pub all_monotone: bool,
}

pub fn multistart(
    op: &dyn LinearOperator,
    p: PExponent,
    config: &PowerConfig,
    extra: &[Vec<Complex64>],
) -> MultistartResult {
    let n = op.ncols();
    let mut starts = config.start_vectors(n);
    starts.extend(extra.iter().filter(|s| s.len() == n).cloned());
    if starts.is_empty() {
        starts.push(vec![Complex64::new(1.0, 0.0); n]);
    }
    let runs: Vec<PowerRun> = starts
        .par_iter()
        .map(|s| power_iterate(op, p, s, config))
        .collect();
    let all_monotone = runs.iter().all(|r| r.monotone);
    let mut best_start = 0;
    for (i, r) in runs.iter().enumerate() {
        if r.estimate > runs[best_start].estimate {
            best_start = i;
        }
    }
    let count = runs.len();
    let best = runs.into_iter().nth(best_start).expect("at least one start");
    MultistartResult {
        best,
        best_start,
        starts: count,
        all_monotone,
    }
}
