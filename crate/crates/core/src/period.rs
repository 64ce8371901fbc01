//! Exact linear combinations over a fixed basis of constants.
//!
//! The basis holds 1, zeta values, log 2, the two conductor-3/4 L-values
//! G3 and G (Catalan), and the two cubic pi constants. A `RationalPeriod`
//! is a map from basis constants to nonzero rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisConstant {
    One,
    /// zeta(k) for k >= 2.
    Zeta(u32),
    Log2,
    /// Catalan's constant, the conductor-4 L-value at 2.
    Catalan,
    /// The conductor-3 analogue of Catalan's constant.
    G3,
    /// pi^3.
    Pi3,
    /// pi^3 / sqrt(3).
    Pi3OverSqrt3,
}

impl BasisConstant {
    /// Degree of the constant as a rational period.
    pub fn degree(&self) -> u32 {
        match self {
            BasisConstant::One => 0,
            BasisConstant::Zeta(k) => *k,
            BasisConstant::Log2 => 1,
            BasisConstant::Catalan | BasisConstant::G3 => 2,
            BasisConstant::Pi3 | BasisConstant::Pi3OverSqrt3 => 3,
        }
    }

    /// Tag used in JSON encodings, e.g. `Zeta(4)`.
    pub fn tag(&self) -> String {
        match self {
            BasisConstant::One => "One".into(),
            BasisConstant::Zeta(k) => format!("Zeta({k})"),
            BasisConstant::Log2 => "Log2".into(),
            BasisConstant::Catalan => "Catalan".into(),
            BasisConstant::G3 => "G3".into(),
            BasisConstant::Pi3 => "Pi3".into(),
            BasisConstant::Pi3OverSqrt3 => "Pi3OverSqrt3".into(),
        }
    }

    pub fn from_tag(tag: &str) -> Result<BasisConstant> {
        let t = tag.trim();
        Ok(match t {
            "One" => BasisConstant::One,
            "Log2" => BasisConstant::Log2,
            "Catalan" => BasisConstant::Catalan,
            "G3" => BasisConstant::G3,
            "Pi3" => BasisConstant::Pi3,
            "Pi3OverSqrt3" => BasisConstant::Pi3OverSqrt3,
            _ => {
                let inner = t
                    .strip_prefix("Zeta(")
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| Error::OutOfRange(format!("unknown constant {tag:?}")))?;
                let k: u32 = inner
                    .parse()
                    .map_err(|_| Error::OutOfRange(format!("bad zeta index {inner:?}")))?;
                if k < 2 {
                    return Err(Error::OutOfRange("zeta index must be >= 2".into()));
                }
                BasisConstant::Zeta(k)
            }
        })
    }

    fn display_name(&self) -> String {
        match self {
            BasisConstant::One => "1".into(),
            BasisConstant::Zeta(k) => format!("zeta({k})"),
            BasisConstant::Log2 => "log(2)".into(),
            BasisConstant::Catalan => "G".into(),
            BasisConstant::G3 => "G3".into(),
            BasisConstant::Pi3 => "pi^3".into(),
            BasisConstant::Pi3OverSqrt3 => "pi^3/sqrt(3)".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalPeriod {
    coeffs: BTreeMap<BasisConstant, Rat>,
}

impl RationalPeriod {
    pub fn zero() -> Self {
        RationalPeriod::default()
    }

    pub fn single(c: BasisConstant, coeff: Rat) -> Self {
        let mut p = RationalPeriod::zero();
        p.add_term(c, coeff);
        p
    }

    pub fn one_times(coeff: Rat) -> Self {
        RationalPeriod::single(BasisConstant::One, coeff)
    }

    /// Adds coeff * c, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, c: BasisConstant, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        if let BasisConstant::Zeta(k) = c {
            assert!(k >= 2, "zeta index must be >= 2");
        }
        let entry = self.coeffs.entry(c).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&c);
        }
    }

    pub fn add(&self, other: &RationalPeriod) -> RationalPeriod {
        let mut out = self.clone();
        for (c, v) in &other.coeffs {
            out.add_term(*c, v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> RationalPeriod {
        if c.is_zero() {
            return RationalPeriod::zero();
        }
        RationalPeriod {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    pub fn negate(&self) -> RationalPeriod {
        self.scale(&Rat::from_int(-1))
    }

    pub fn coeff(&self, c: &BasisConstant) -> Rat {
        self.coeffs.get(c).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisConstant, &Rat)> {
        self.coeffs.iter()
    }

    /// Maximum degree of the constituents (zero for the empty period).
    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(BasisConstant::degree).max().unwrap_or(0)
    }
}

impl fmt::Display for RationalPeriod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // Constant term first, then descending degree.
        let mut terms: Vec<(&BasisConstant, &Rat)> = self.coeffs.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let rank = |c: &BasisConstant| {
                if **c == BasisConstant::One {
                    (0u8, 0u32)
                } else {
                    (1, u32::MAX - c.degree())
                }
            };
            rank(a).cmp(&rank(b)).then_with(|| a.cmp(b))
        });
        let mut out = String::new();
        for (c, v) in terms {
            let neg = v.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = v.abs();
            if *c == BasisConstant::One {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&c.display_name());
            } else {
                out.push_str(&format!("{}*{}", a, c.display_name()));
            }
        }
        write!(f, "{out}")
    }
}

impl Serialize for RationalPeriod {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.coeffs.len()))?;
        for (c, v) in &self.coeffs {
            map.serialize_entry(&c.tag(), &v.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for RationalPeriod {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        let mut out = RationalPeriod::zero();
        for (tag, coeff) in raw {
            let c = BasisConstant::from_tag(&tag).map_err(D::Error::custom)?;
            let v: Rat = coeff.parse().map_err(D::Error::custom)?;
            out.add_term(c, v);
        }
        Ok(out)
    }
}

/// zeta*(m): 0 for m = 0, log 2 for m = 1, (2^(m-1) - 1) zeta(m) for
/// m >= 2. The alternating-sum bookkeeping constant.
pub fn zeta_star(m: u32) -> RationalPeriod {
    match m {
        0 => RationalPeriod::zero(),
        1 => RationalPeriod::single(BasisConstant::Log2, Rat::one()),
        _ => RationalPeriod::single(
            BasisConstant::Zeta(m),
            Rat::from_int(2).pow(m as i32 - 1) - Rat::one(),
        ),
    }
}

/// zeta(m) with the convention zeta(0) = 0 used by the family formulas.
pub fn zeta_or_zero(m: u32) -> RationalPeriod {
    if m == 0 {
        RationalPeriod::zero()
    } else {
        RationalPeriod::single(BasisConstant::Zeta(m), Rat::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_entries() {
        let mut p = RationalPeriod::zero();
        p.add_term(BasisConstant::Zeta(2), Rat::one());
        p.add_term(BasisConstant::Zeta(2), Rat::from_int(-1));
        assert!(p.is_zero());
        assert_eq!(p.degree(), 0);
    }

    #[test]
    fn degrees() {
        let mut p = RationalPeriod::zero();
        p.add_term(BasisConstant::Log2, Rat::from_int(16));
        p.add_term(BasisConstant::Zeta(3), Rat::from_int(3));
        assert_eq!(p.degree(), 3);
        assert_eq!(p.to_string(), "3*zeta(3) + 16*log(2)");
    }

    #[test]
    fn display_with_constant_term() {
        let mut p = RationalPeriod::one_times(Rat::from_int(2));
        p.add_term(BasisConstant::Zeta(2), Rat::from_int(-1));
        assert_eq!(p.to_string(), "2 - zeta(2)");
    }

    #[test]
    fn json_round_trip() {
        let mut p = RationalPeriod::zero();
        p.add_term(BasisConstant::Zeta(4), Rat::one());
        p.add_term(BasisConstant::Zeta(2), Rat::from_int(4));
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"Zeta(2)":"4","Zeta(4)":"1"}"#);
        let back: RationalPeriod = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn zeta_star_values() {
        assert!(zeta_star(0).is_zero());
        assert_eq!(
            zeta_star(1),
            RationalPeriod::single(BasisConstant::Log2, Rat::one())
        );
        assert_eq!(
            zeta_star(5),
            RationalPeriod::single(BasisConstant::Zeta(5), Rat::from_int(15))
        );
    }
}
