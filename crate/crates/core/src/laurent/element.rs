use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::groupalg::{FiniteGroup, GroupAlgebraElement};
use crate::pnorm::{neumaier_sum, ComplexMatrix, LinearOperator};

/// A finitely supported function `f: Z -> C`, an element of `C[Z]`.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentElement {
    coeffs: BTreeMap<i64, Complex64>,
}

impl LaurentElement {
    pub fn new(terms: impl IntoIterator<Item = (i64, Complex64)>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (n, z) in terms {
            if !z.is_finite() {
                return Err(Error::NonFinite(n.unsigned_abs() as usize));
            }
            *coeffs.entry(n).or_insert(Complex64::new(0.0, 0.0)) += z;
        }
        coeffs.retain(|_, z| z.re != 0.0 || z.im != 0.0);
        Ok(LaurentElement { coeffs })
    }

    pub fn delta(n: i64) -> Self {
        LaurentElement {
            coeffs: BTreeMap::from([(n, Complex64::new(1.0, 0.0))]),
        }
    }

    pub fn coeff(&self, n: i64) -> Complex64 {
        self.coeffs.get(&n).copied().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.coeffs.iter().map(|(n, z)| (*n, *z))
    }

    pub fn support(&self) -> Vec<i64> {
        self.coeffs.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `max |n|` over the support (0 for the zero element).
    pub fn radius(&self) -> u64 {
        self.coeffs.keys().map(|n| n.unsigned_abs()).max().unwrap_or(0)
    }

    /// `max - min` of the support.
    pub fn diameter(&self) -> u64 {
        match (self.coeffs.keys().next(), self.coeffs.keys().next_back()) {
            (Some(a), Some(b)) => (b - a) as u64,
            _ => 0,
        }
    }

    /// `sum |f(n)|`, the `l^1 -> l^1` and `l^inf -> l^inf` norm.
    pub fn l1_norm(&self) -> f64 {
        neumaier_sum(self.coeffs.values().map(|z| z.norm()))
    }

    /// `sum f(n) e^(i n theta)`.
    pub fn symbol(&self, theta: f64) -> Complex64 {
        self.terms().map(|(n, z)| z * Complex64::from_polar(1.0, theta * n as f64)).sum()
    }

    pub fn convolve(&self, other: &LaurentElement) -> LaurentElement {
        let mut terms = Vec::new();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                terms.push((a + b, x * y));
            }
        }
        LaurentElement::new(terms).expect("finite products")
    }

    /// Fiber sums along `Z -> Z_m`: `g(j) = sum_{n = j mod m} f(n)`.
    pub fn push_to_cyclic(&self, m: usize) -> Result<GroupAlgebraElement> {
        if m == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        let mut out = vec![Complex64::new(0.0, 0.0); m];
        for (n, z) in self.terms() {
            out[n.rem_euclid(m as i64) as usize] += z;
        }
        GroupAlgebraElement::new(Arc::new(FiniteGroup::cyclic(m)), out)
    }
}

/// The window `{-L, ..., L}` of a finite section of `l^p(Z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationWindow {
    half_width: usize,
}

impl TruncationWindow {
    pub fn new(half_width: usize) -> Result<Self> {
        if half_width == 0 {
            return Err(Error::InvalidArgument("window half-width must be at least 1".into()));
        }
        Ok(TruncationWindow { half_width })
    }

    pub fn half_width(self) -> usize {
        self.half_width
    }

    pub fn dim(self) -> usize {
        2 * self.half_width + 1
    }

    /// The integer sitting at position `i` of the window.
    pub fn point(self, i: usize) -> i64 {
        i as i64 - self.half_width as i64
    }

    fn check(self, f: &LaurentElement) -> Result<()> {
        if (self.half_width as u64) < f.radius() {
            return Err(Error::WindowTooSmall {
                window: self.half_width,
                radius: f.radius(),
            });
        }
        Ok(())
    }
}

/// Compression of convolution by `f` to the window: `M[t][s] = f(t - s)`.
pub fn truncated_rep(f: &LaurentElement, window: TruncationWindow) -> Result<ComplexMatrix> {
    window.check(f)?;
    let n = window.dim();
    Ok(ComplexMatrix::from_fn(n, n, |i, j| f.coeff(i as i64 - j as i64)))
}

/// The same compression as [`truncated_rep`], stored as a band.
#[derive(Clone, Debug)]
pub struct ToeplitzSection {
    window: TruncationWindow,
    taps: Vec<(i64, Complex64)>,
}

impl ToeplitzSection {
    pub fn new(f: &LaurentElement, window: TruncationWindow) -> Result<Self> {
        window.check(f)?;
        Ok(ToeplitzSection {
            window,
            taps: f.terms().collect(),
        })
    }

    pub fn window(&self) -> TruncationWindow {
        self.window
    }

    pub fn taps(&self) -> usize {
        self.taps.len()
    }

    /// Largest column absolute sum (the exact section norm at `p = 1`).
    pub fn column_norm(&self) -> (usize, f64) {
        self.abs_sums(false)
    }

    /// Largest row absolute sum (the exact section norm at `p = inf`).
    pub fn row_norm(&self) -> (usize, f64) {
        self.abs_sums(true)
    }

    fn abs_sums(&self, rows: bool) -> (usize, f64) {
        let n = self.window.dim() as i64;
        let mut best = (0, -1.0);
        for i in 0..n {
            // Row i holds f(i - j); column j holds f(i - j) for rows i.
            let s = neumaier_sum(self.taps.iter().filter_map(|(d, z)| {
                let other = if rows { i - d } else { i + d };
                (0..n).contains(&other).then(|| z.norm())
            }));
            if s > best.1 {
                best = (i as usize, s);
            }
        }
        best
    }
}

impl LinearOperator for ToeplitzSection {
    fn nrows(&self) -> usize {
        self.window.dim()
    }

    fn ncols(&self) -> usize {
        self.window.dim()
    }

    fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.window.dim() as i64;
        let mut y = vec![Complex64::new(0.0, 0.0); n as usize];
        for &(d, c) in &self.taps {
            // y[i] += c x[i - d]
            let lo = d.max(0);
            let hi = (n + d).min(n);
            if lo >= hi {
                continue;
            }
            let src = &x[(lo - d) as usize..(hi - d) as usize];
            for (o, v) in y[lo as usize..hi as usize].iter_mut().zip(src) {
                *o += c * v;
            }
        }
        y
    }

    fn apply_adjoint(&self, y: &[Complex64]) -> Vec<Complex64> {
        let n = self.window.dim() as i64;
        let mut x = vec![Complex64::new(0.0, 0.0); n as usize];
        for &(d, c) in &self.taps {
            // x[j] += conj(c) y[j + d]
            let c = c.conj();
            let lo = (-d).max(0);
            let hi = (n - d).min(n);
            if lo >= hi {
                continue;
            }
            let src = &y[(lo + d) as usize..(hi + d) as usize];
            for (o, v) in x[lo as usize..hi as usize].iter_mut().zip(src) {
                *o += c * v;
            }
        }
        x
    }
}

/// Bounds on `sup_{|z|=1} |sum f(n) z^n|`, the `l^2` norm of convolution by `f`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymbolSup {
    /// A value of `|symbol|` actually attained (grid plus refinement).
    pub attained: f64,
    /// An angle where `attained` is reached.
    pub angle: f64,
    /// Certified upper bound: grid maximum of `|symbol|^2` plus the
    /// curvature allowance `h^2/8 * max|g''|`, never above `||f||_1`.
    pub upper: f64,
    pub grid_points: usize,
}

const MIN_GRID: usize = 4096;
const MAX_GRID: usize = 1 << 16;

pub fn symbol_sup(f: &LaurentElement) -> SymbolSup {
    let l1 = f.l1_norm();
    if f.is_zero() {
        return SymbolSup { attained: 0.0, angle: 0.0, upper: 0.0, grid_points: 0 };
    }
    // |symbol|^2 = sum_d g_d e^{i d theta} with g_d the autocorrelation; its
    // second derivative is bounded by sum d^2 |g_d|.
    let terms: Vec<_> = f.terms().collect();
    let mut second = 0.0;
    for &(a, x) in &terms {
        for &(b, y) in &terms {
            let d = (a - b) as f64;
            second += d * d * (x * y.conj()).norm();
        }
    }
    let mut grid = MIN_GRID;
    while grid < MAX_GRID && allowance(grid, second) > 1e-12 * l1 * l1 {
        grid *= 2;
    }
    let h = 2.0 * PI / grid as f64;
    let values: Vec<f64> = (0..grid).map(|k| f.symbol(k as f64 * h).norm_sqr()).collect();
    let (kmax, gmax) = values
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |b, c| if c.1 > b.1 { c } else { b });
    // Golden-section refinement around the best grid point.
    let (mut a, mut b) = ((kmax as f64 - 1.0) * h, (kmax as f64 + 1.0) * h);
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let g = |t: f64| f.symbol(t).norm_sqr();
    let mut refined = (gmax, kmax as f64 * h);
    for _ in 0..80 {
        let c = b - phi * (b - a);
        let d = a + phi * (b - a);
        let (gc, gd) = (g(c), g(d));
        for cand in [(gc, c), (gd, d)] {
            if cand.0 > refined.0 {
                refined = cand;
            }
        }
        if gc > gd {
            b = d;
        } else {
            a = c;
        }
    }
    let rounding = 1e-14 * l1 * l1;
    let upper = (gmax + allowance(grid, second) + rounding).sqrt().min(l1);
    SymbolSup {
        attained: refined.0.sqrt().min(upper),
        angle: refined.1,
        upper,
        grid_points: grid,
    }
}

fn allowance(grid: usize, second: f64) -> f64 {
    let h = 2.0 * PI / grid as f64;
    h * h / 8.0 * second
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn drops_zero_coefficients() {
        let f = LaurentElement::new([(0, c(1.0, 0.0)), (3, c(0.0, 0.0)), (0, c(0.0, 1.0))]).unwrap();
        assert_eq!(f.support(), vec![0]);
        assert_eq!(f.coeff(0), c(1.0, 1.0));
    }

    #[test]
    fn identity_section() {
        let m = truncated_rep(&LaurentElement::delta(0), TruncationWindow::new(3).unwrap()).unwrap();
        assert_eq!(m, ComplexMatrix::identity(7));
    }

    #[test]
    fn shift_section_is_subdiagonal() {
        let m = truncated_rep(&LaurentElement::delta(1), TruncationWindow::new(2).unwrap()).unwrap();
        let expected = ComplexMatrix::from_fn(5, 5, |i, j| if i == j + 1 { c(1.0, 0.0) } else { c(0.0, 0.0) });
        assert_eq!(m, expected);
    }

    #[test]
    fn rejects_small_window() {
        let err = truncated_rep(&LaurentElement::delta(-4), TruncationWindow::new(3).unwrap());
        assert!(matches!(err, Err(Error::WindowTooSmall { window: 3, radius: 4 })));
    }

    #[test]
    fn banded_section_matches_dense() {
        let f = LaurentElement::new([(-2, c(0.5, 1.0)), (0, c(1.0, 0.0)), (3, c(0.0, -2.0))]).unwrap();
        let w = TruncationWindow::new(5).unwrap();
        let dense = truncated_rep(&f, w).unwrap();
        let band = ToeplitzSection::new(&f, w).unwrap();
        let x: Vec<_> = (0..11).map(|i| c(i as f64 * 0.3 - 1.0, 1.0 / (i as f64 + 1.0))).collect();
        for (a, b) in band.apply(&x).iter().zip(dense.matvec(&x)) {
            assert!((a - b).norm() < 1e-14);
        }
        for (a, b) in band.apply_adjoint(&x).iter().zip(dense.adjoint_matvec(&x)) {
            assert!((a - b).norm() < 1e-14);
        }
        let cols = crate::pnorm::pnorm_exact(&dense, crate::PExponent::ONE).unwrap();
        assert!((band.column_norm().1 - cols).abs() < 1e-14);
        let rows = crate::pnorm::pnorm_exact(&dense, crate::PExponent::INFINITY).unwrap();
        assert!((band.row_norm().1 - rows).abs() < 1e-14);
    }

    #[test]
    fn symbol_sup_of_one_plus_z() {
        let f = LaurentElement::new([(0, c(1.0, 0.0)), (1, c(1.0, 0.0))]).unwrap();
        let s = symbol_sup(&f);
        assert!((s.attained - 2.0).abs() < 1e-12);
        assert!(s.upper >= 2.0 && s.upper - 2.0 < 1e-9);
    }

    #[test]
    fn symbol_sup_bounds_a_dense_sample() {
        let f = LaurentElement::new([(-3, c(0.2, -0.7)), (1, c(1.0, 0.4)), (5, c(-0.3, 0.0))]).unwrap();
        let s = symbol_sup(&f);
        let sampled = (0..100_003).map(|k| f.symbol(k as f64 * 2.0 * PI / 100_003.0).norm()).fold(0.0, f64::max);
        assert!(sampled <= s.upper);
        assert!(s.attained >= sampled - 1e-9);
    }

    #[test]
    fn push_to_cyclic_sums_fibers() {
        let f = LaurentElement::new([(-1, c(1.0, 0.0)), (1, c(2.0, 0.0)), (4, c(0.0, 1.0))]).unwrap();
        let g = f.push_to_cyclic(2).unwrap();
        assert_eq!(g.coeffs(), &[c(0.0, 1.0), c(3.0, 0.0)]);
    }
}
