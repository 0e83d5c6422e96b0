use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::element::{LaurentElement, TruncationWindow};
use crate::error::{Error, Result};
use crate::groupalg::GroupAlgebraElement;
use crate::pnorm::{ComplexMatrix, PExponent};

/// The quotient `Z -> Z_m` with section `sigma(j) = j` on `{0, ..., m-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientSetupZ {
    m: u32,
}

impl QuotientSetupZ {
    pub fn new(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!("modulus must be at least 2, got {m}")));
        }
        Ok(QuotientSetupZ { m })
    }

    pub fn modulus(self) -> u32 {
        self.m
    }

    pub fn section(self, j: u32) -> i64 {
        (j % self.m) as i64
    }

    /// The class of `z` in `Z_m`.
    pub fn project(self, z: i64) -> u32 {
        z.rem_euclid(self.m as i64) as u32
    }

    /// `c(t, r) = sigma(t) + sigma(r) - sigma(t + r)`, an element of `mZ`.
    pub fn cocycle(self, t: u32, r: u32) -> i64 {
        self.section(t) + self.section(r) - self.section((t % self.m + r % self.m) % self.m)
    }

    /// `{c(t, r)}` over all pairs.
    pub fn cocycle_image(self) -> BTreeSet<i64> {
        (0..self.m)
            .flat_map(|t| (0..self.m).map(move |r| self.cocycle(t, r)))
            .collect()
    }

    /// `{c(s, t) : t in Z_m}`, the translates that occur in the columns of
    /// the theta operator for `s`.
    pub fn reachable_image(self, s: u32) -> BTreeSet<i64> {
        (0..self.m).map(|t| self.cocycle(s, t)).collect()
    }

    /// Checks `c(t, r) + sigma(t + r) = sigma(t) + sigma(r)` for all pairs.
    pub fn cocycle_identity_holds(self) -> bool {
        (0..self.m).all(|t| {
            (0..self.m).all(|r| self.cocycle(t, r) + self.section((t + r) % self.m) == self.section(t) + self.section(r))
        })
    }
}

/// Følner sets `F_k = {0, m, ..., (k-1)m}` in `mZ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FolnerSequenceZ {
    m: u32,
}

impl FolnerSequenceZ {
    pub fn new(m: u32) -> Result<Self> {
        QuotientSetupZ::new(m)?;
        Ok(FolnerSequenceZ { m })
    }

    pub fn set(self, k: usize) -> Vec<i64> {
        (0..k as i64).map(|n| n * self.m as i64).collect()
    }

    /// `|F_k sym-diff (F_k + x)| / |F_k|`, exactly.
    pub fn sym_diff_ratio(self, k: usize, x: i64) -> Result<Ratio<i64>> {
        check_k(k)?;
        let a: BTreeSet<i64> = self.set(k).into_iter().collect();
        let b: BTreeSet<i64> = a.iter().map(|n| n + x).collect();
        let count = a.symmetric_difference(&b).count() as i64;
        Ok(Ratio::new(count, k as i64))
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    Ok(())
}

fn check_s(s: u32, m: u32) -> Result<()> {
    if s >= m {
        return Err(Error::InvalidArgument(format!("s = {s} is not in Z_{m}")));
    }
    Ok(())
}

/// `T_k = (1/k) sum_{n in F_k} delta_n`.
pub fn folner_average(k: usize, m: u32) -> Result<LaurentElement> {
    check_k(k)?;
    let weight = Complex64::new(1.0 / k as f64, 0.0);
    LaurentElement::new(FolnerSequenceZ::new(m)?.set(k).into_iter().map(|n| (n, weight)))
}

/// `f~_k = (1/k) sum_s sum_{n in F_k} f(s) delta_(n + sigma(s))`.
pub fn folner_lift(f: &GroupAlgebraElement, k: usize) -> Result<LaurentElement> {
    check_k(k)?;
    if !f.group().is_standard_cyclic() {
        return Err(Error::NotCyclic);
    }
    let m = f.group().order() as u32;
    let setup = QuotientSetupZ::new(m)?;
    let set = FolnerSequenceZ::new(m)?.set(k);
    let scale = 1.0 / k as f64;
    let terms = (0..m).flat_map(|s| {
        let a = f.coeff(s as usize) * scale;
        let shift = setup.section(s);
        set.iter().map(move |n| (n + shift, a))
    });
    LaurentElement::new(terms)
}

/// `max_{x in {c(s,t)}} |F_k sym-diff (F_k + x)| / k`, the `l^1` norm of the
/// theta operator for `s`.
pub fn theta_l1(k: usize, m: u32, s: u32) -> Result<Ratio<i64>> {
    check_k(k)?;
    let setup = QuotientSetupZ::new(m)?;
    check_s(s, m)?;
    let folner = FolnerSequenceZ::new(m)?;
    let mut best = Ratio::zero();
    for x in setup.reachable_image(s) {
        best = best.max(folner.sym_diff_ratio(k, x)?);
    }
    Ok(best)
}

/// `max_{x in Im(c)} |F_k sym-diff (F_k + x)| / k`, which is `2/k`.
pub fn folner_defect(k: usize, m: u32) -> Result<Ratio<i64>> {
    check_k(k)?;
    let setup = QuotientSetupZ::new(m)?;
    let folner = FolnerSequenceZ::new(m)?;
    let mut best = Ratio::zero();
    for x in setup.cocycle_image() {
        best = best.max(folner.sym_diff_ratio(k, x)?);
    }
    Ok(best)
}

/// `2 * folner_defect(k, m)^(1/p)`, the interpolation bound on the `l^p`
/// norm of every theta operator at level `k`.
pub fn theta_p_bound(k: usize, m: u32, p: PExponent) -> Result<f64> {
    if p.is_infinite() {
        return Err(Error::InvalidArgument("theta bound needs finite p".into()));
    }
    let d = folner_defect(k, m)?;
    let d = *d.numer() as f64 / *d.denom() as f64;
    Ok(2.0 * d.powf(p.reciprocal()))
}

/// The operator `(1/k) sum_{n in F_k} (u_(n + sigma(s)) - u_n Phi(v_s (x) 1))`
/// on `l^p(Z)`, with rational entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaOperator {
    setup: QuotientSetupZ,
    k: usize,
    s: u32,
}

impl ThetaOperator {
    pub fn new(k: usize, m: u32, s: u32) -> Result<Self> {
        check_k(k)?;
        let setup = QuotientSetupZ::new(m)?;
        check_s(s, m)?;
        Ok(ThetaOperator { setup, k, s })
    }

    /// The image of `delta_z`, as exact coefficients with zeros dropped.
    pub fn column(&self, z: i64) -> BTreeMap<i64, Ratio<i64>> {
        let t = self.setup.project(z);
        let m = self.setup.modulus();
        let w = Ratio::new(1, self.k as i64);
        let plus = self.setup.section(self.s) + z;
        let minus = self.setup.section((self.s + t) % m) - self.setup.section(t) + z;
        let mut col: BTreeMap<i64, Ratio<i64>> = BTreeMap::new();
        for n in (FolnerSequenceZ { m }).set(self.k) {
            *col.entry(n + plus).or_insert_with(Ratio::zero) += w;
            *col.entry(n + minus).or_insert_with(Ratio::zero) -= w;
        }
        col.retain(|_, v| !v.is_zero());
        col
    }

    /// Largest column `l^1` norm. The operator commutes with translation by
    /// `mZ`, so the columns of `0, ..., m-1` cover all of them.
    pub fn l1_norm(&self) -> Ratio<i64> {
        (0..self.setup.modulus() as i64)
            .map(|z| self.column(z).values().fold(Ratio::zero(), |acc, v| acc + v.abs()))
            .max()
            .unwrap_or_else(Ratio::zero)
    }

    /// Largest column `l^1` norm of the compression to `window`, exactly.
    pub fn window_l1_norm(&self, window: TruncationWindow) -> Ratio<i64> {
        let l = window.half_width() as i64;
        (0..window.dim())
            .map(|j| {
                self.column(window.point(j))
                    .into_iter()
                    .filter(|(row, _)| (-l..=l).contains(row))
                    .fold(Ratio::zero(), |acc, (_, v)| acc + v.abs())
            })
            .max()
            .unwrap_or_else(Ratio::zero)
    }

    /// Compression to `window`.
    pub fn section(&self, window: TruncationWindow) -> ComplexMatrix {
        let n = window.dim();
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for j in 0..n {
            for (row, v) in self.column(window.point(j)) {
                let i = row + window.half_width() as i64;
                if (0..n as i64).contains(&i) {
                    data[i as usize * n + j] = Complex64::new(*v.numer() as f64 / *v.denom() as f64, 0.0);
                }
            }
        }
        ComplexMatrix::new(n, n, data).expect("finite entries")
    }

    /// Smallest window holding the full columns of `0, ..., m-1`.
    pub fn covering_window(&self) -> TruncationWindow {
        let m = self.setup.modulus() as usize;
        TruncationWindow::new(self.k * m + 2 * m).expect("nonzero width")
    }
}
