use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Hölder exponent `p` in `[1, inf]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct PExponent(f64);

impl PExponent {
    pub const ONE: PExponent = PExponent(1.0);
    pub const TWO: PExponent = PExponent(2.0);
    pub const INFINITY: PExponent = PExponent(f64::INFINITY);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value < 1.0 {
            return Err(Error::InvalidExponent(value));
        }
        Ok(PExponent(value))
    }

    /// The exponent whose reciprocal is `1/r`. `r = 0` gives `inf`.
    pub fn from_reciprocal(r: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::InvalidExponent(1.0 / r));
        }
        if r == 0.0 {
            Ok(Self::INFINITY)
        } else {
            Self::new(1.0 / r)
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `1/p`, with `1/inf = 0`.
    pub fn reciprocal(self) -> f64 {
        if self.is_infinite() {
            0.0
        } else {
            1.0 / self.0
        }
    }

    /// The conjugate exponent `p'` with `1/p + 1/p' = 1`.
    pub fn conjugate(self) -> PExponent {
        if self.0 == 1.0 {
            Self::INFINITY
        } else if self.is_infinite() {
            Self::ONE
        } else {
            PExponent(self.0 / (self.0 - 1.0))
        }
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    /// True for the exponents with closed-form operator norms.
    pub fn is_exact(self) -> bool {
        self.0 == 1.0 || self.0 == 2.0 || self.is_infinite()
    }
}

impl fmt::Display for PExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl TryFrom<f64> for PExponent {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        PExponent::new(value)
    }
}

// JSON has no infinity, so `inf` travels as a string.
impl Serialize for PExponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_infinite() {
            serializer.serialize_str("inf")
        } else {
            serializer.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for PExponent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Text(String),
        }
        let value = match Repr::deserialize(deserializer)? {
            Repr::Num(v) => v,
            Repr::Text(s) => s.parse::<f64>().map_err(serde::de::Error::custom)?,
        };
        PExponent::new(value).map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for PExponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let value = match s {
            "inf" | "infinity" | "Inf" => f64::INFINITY,
            _ => {
                if let Some((num, den)) = s.split_once('/') {
                    let n: f64 = num.trim().parse().map_err(|_| Error::Format {
                        field: "p".into(),
                        reason: format!("cannot parse `{s}`"),
                    })?;
                    let d: f64 = den.trim().parse().map_err(|_| Error::Format {
                        field: "p".into(),
                        reason: format!("cannot parse `{s}`"),
                    })?;
                    n / d
                } else {
                    s.parse().map_err(|_| Error::Format {
                        field: "p".into(),
                        reason: format!("cannot parse `{s}`"),
                    })?
                }
            }
        };
        PExponent::new(value)
    }
}
