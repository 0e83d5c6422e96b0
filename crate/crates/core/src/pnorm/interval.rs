use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{vector_pnorm, LinearOperator, PExponent};

/// A two-sided bracket `[lower, upper]` for an operator norm.
///
/// `witness` is a vector attaining `lower`: `||A w||_p / ||w||_p == lower`
/// for the operator the interval was computed from. `upper` may be infinite
/// when only a lower bound is known.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertifiedInterval {
    pub lower: f64,
    #[serde(with = "extended_real")]
    pub upper: f64,
    pub witness: Vec<Complex64>,
    pub p: PExponent,
    /// False when the iteration producing `lower` hit its cap.
    pub converged: bool,
}

impl CertifiedInterval {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    /// Whether `value` lies in the interval, widened by `tol` on both sides.
    pub fn contains(&self, value: f64, tol: f64) -> bool {
        value >= self.lower - tol && value <= self.upper + tol
    }

    /// Certified equality: the two brackets intersect once each is widened
    /// by `tol * (1 + |bound|)`.
    pub fn overlaps(&self, other: &CertifiedInterval, tol: f64) -> bool {
        self.lower <= other.upper + tol * (1.0 + other.upper.abs())
            && other.lower <= self.upper + tol * (1.0 + self.upper.abs())
    }

    /// Recomputes `||A w||_p / ||w||_p` for the stored witness.
    pub fn witness_ratio(&self, op: &dyn LinearOperator) -> f64 {
        let wn = vector_pnorm(&self.witness, self.p);
        if wn == 0.0 {
            return 0.0;
        }
        vector_pnorm(&op.apply(&self.witness), self.p) / wn
    }
}

mod extended_real {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_infinite() {
            s.serialize_str(if *v > 0.0 { "inf" } else { "-inf" })
        } else {
            s.serialize_f64(*v)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(v),
            Repr::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval(lower: f64, upper: f64) -> CertifiedInterval {
        CertifiedInterval {
            lower,
            upper,
            witness: vec![Complex64::new(1.0, 0.0)],
            p: PExponent::TWO,
            converged: true,
        }
    }

    #[test]
    fn overlap_is_symmetric_and_tolerant() {
        let a = interval(1.0, 1.0);
        let b = interval(1.0 + 1e-9, 1.5);
        assert!(a.overlaps(&b, 1e-8));
        assert!(b.overlaps(&a, 1e-8));
        assert!(!a.overlaps(&interval(1.1, 1.2), 1e-8));
    }

    #[test]
    fn infinite_upper_round_trips() {
        let a = interval(0.5, f64::INFINITY);
        let s = serde_json::to_string(&a).unwrap();
        let back: CertifiedInterval = serde_json::from_str(&s).unwrap();
        assert!(back.upper.is_infinite());
    }
}
