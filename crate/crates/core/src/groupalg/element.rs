use std::sync::Arc;

use num_complex::Complex64;

use super::{FiniteGroup, GroupHom};
use crate::error::{Error, Result};
use crate::pnorm::{pnorm_with, CertifiedInterval, ComplexMatrix, PExponent, PowerConfig};

/// A coefficient function `f: G -> C` on a finite group.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgebraElement {
    group: Arc<FiniteGroup>,
    coeffs: Vec<Complex64>,
}

impl GroupAlgebraElement {
    pub fn new(group: Arc<FiniteGroup>, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::Shape(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.order()
            )));
        }
        if let Some(i) = coeffs.iter().position(|z| !z.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(GroupAlgebraElement { group, coeffs })
    }

    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        GroupAlgebraElement {
            group,
            coeffs: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    /// The point mass `delta_s` (the canonical generator `u_s`).
    pub fn delta(group: Arc<FiniteGroup>, s: usize) -> Self {
        let mut f = Self::zero(group);
        f.coeffs[s] = Complex64::new(1.0, 0.0);
        f
    }

    /// Uniform probability vector `1/|G|` on every element.
    pub fn uniform(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        GroupAlgebraElement {
            group,
            coeffs: vec![Complex64::new(1.0 / n as f64, 0.0); n],
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, s: usize) -> Complex64 {
        self.coeffs[s]
    }

    /// `sum_s |f(s)|`.
    pub fn l1_norm(&self) -> f64 {
        crate::pnorm::neumaier_sum(self.coeffs.iter().map(|z| z.norm()))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|z| z * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Convolution `(f * g)(t) = sum_s f(s) g(s^-1 t)`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let g = &self.group;
        let mut out = vec![Complex64::new(0.0, 0.0); g.order()];
        for (s, a) in self.coeffs.iter().enumerate() {
            for (r, b) in other.coeffs.iter().enumerate() {
                out[g.mul(s, r)] += a * b;
            }
        }
        Ok(GroupAlgebraElement {
            group: g.clone(),
            coeffs: out,
        })
    }

    /// `f_check(s) = f(s^-1)`.
    pub fn involution(&self) -> Self {
        let g = &self.group;
        GroupAlgebraElement {
            group: g.clone(),
            coeffs: (0..g.order()).map(|s| self.coeffs[g.inv(s)]).collect(),
        }
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group == other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }
}

/// Matrix of the left regular representation on the basis `{delta_s}`:
/// `M[t][s] = f(t s^-1)`.
pub fn regular_rep(f: &GroupAlgebraElement) -> ComplexMatrix {
    let g = f.group();
    ComplexMatrix::from_fn(g.order(), g.order(), |t, s| f.coeff(g.mul(t, g.inv(s))))
}

/// Norm of `lambda_p(f)` on `l^p(G)`.
///
/// Finite groups are amenable, so this is also the universal `F^p(G)` norm.
pub fn fp_lambda_norm(f: &GroupAlgebraElement, p: PExponent) -> Result<CertifiedInterval> {
    fp_lambda_norm_with(f, p, &PowerConfig::default())
}

pub fn fp_lambda_norm_with(f: &GroupAlgebraElement, p: PExponent, config: &PowerConfig) -> Result<CertifiedInterval> {
    pnorm_with(&regular_rep(f), p, config)
}

/// Checks that a nonnegative element has the same norm at `p` as at 2.
pub fn positive_norm_check(f: &GroupAlgebraElement, p: PExponent, tol: f64) -> Result<bool> {
    for (i, z) in f.coeffs().iter().enumerate() {
        if z.im != 0.0 || z.re < 0.0 {
            return Err(Error::NotNonnegative { index: i });
        }
    }
    let at_p = fp_lambda_norm(f, p)?;
    let at_2 = fp_lambda_norm(f, PExponent::TWO)?;
    Ok(at_p.overlaps(&at_2, tol))
}

/// Transports `f` along an injective homomorphism `H -> G`, zero elsewhere.
pub fn subgroup_embed(f: &GroupAlgebraElement, iota: &GroupHom) -> Result<GroupAlgebraElement> {
    if f.group().as_ref() != iota.source().as_ref() {
        return Err(Error::GroupMismatch);
    }
    if !iota.is_injective() {
        return Err(Error::NotInjective);
    }
    let mut out = GroupAlgebraElement::zero(iota.target().clone());
    for (h, z) in f.coeffs().iter().enumerate() {
        out.coeffs[iota.image(h)] = *z;
    }
    Ok(out)
}

/// Fiber sums `(psi f)(q) = sum_{pi(s) = q} f(s)` along a surjection `G -> Q`.
pub fn quotient_push(f: &GroupAlgebraElement, pi: &GroupHom) -> Result<GroupAlgebraElement> {
    if f.group().as_ref() != pi.source().as_ref() {
        return Err(Error::GroupMismatch);
    }
    if !pi.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let mut out = GroupAlgebraElement::zero(pi.target().clone());
    for (s, z) in f.coeffs().iter().enumerate() {
        out.coeffs[pi.image(s)] += z;
    }
    Ok(out)
}

/// Reordering of `G` into the right cosets `H x` of an embedded subgroup.
///
/// Left multiplication by `H` preserves each right coset, so in the new
/// order `lambda_G(iota(f))` is block diagonal with one copy of
/// `lambda_H(f)` per coset. Coset representatives are the smallest index in
/// each coset and blocks are ordered by representative.
#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    /// `order[pos]` is the element of `G` placed at position `pos`.
    pub order: Vec<usize>,
    pub representatives: Vec<usize>,
    pub block_size: usize,
}

impl CosetDecomposition {
    pub fn new(iota: &GroupHom) -> Result<Self> {
        if !iota.is_injective() {
            return Err(Error::NotInjective);
        }
        let (h, g) = (iota.source(), iota.target());
        let mut placed = vec![false; g.order()];
        let mut order = Vec::with_capacity(g.order());
        let mut representatives = Vec::new();
        for x in 0..g.order() {
            if placed[x] {
                continue;
            }
            representatives.push(x);
            for k in 0..h.order() {
                let y = g.mul(iota.image(k), x);
                placed[y] = true;
                order.push(y);
            }
        }
        Ok(CosetDecomposition {
            order,
            representatives,
            block_size: h.order(),
        })
    }

    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    /// The permutation matrix `P` with `P M P^-1 = M[order][order]`.
    pub fn permutation(&self) -> ComplexMatrix {
        let n = self.order.len();
        let mut m = ComplexMatrix::zeros(n, n);
        for (pos, &g) in self.order.iter().enumerate() {
            m[(pos, g)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// `P M P^-1`, computed by reindexing so entries are copied exactly.
    pub fn conjugate(&self, m: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix::from_fn(m.rows(), m.cols(), |a, b| m[(self.order[a], self.order[b])])
    }
}
