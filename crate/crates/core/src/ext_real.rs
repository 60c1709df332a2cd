//! Extended real numbers `R ∪ {±inf}`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A real number, `+inf` or `-inf`. Never NaN.
#[derive(Clone, Copy, PartialEq)]
pub struct ExtendedReal(f64);

impl ExtendedReal {
    pub const INFINITY: Self = ExtendedReal(f64::INFINITY);
    pub const NEG_INFINITY: Self = ExtendedReal(f64::NEG_INFINITY);
    pub const ZERO: Self = ExtendedReal(0.0);

    /// Wraps `value`, rejecting NaN.
    pub fn new(value: f64) -> Option<Self> {
        (!value.is_nan()).then_some(ExtendedReal(value))
    }

    /// Like [`ExtendedReal::new`] but reports `source` in the NaN error.
    pub fn checked(value: f64, source: &'static str) -> Result<Self> {
        Self::new(value).ok_or(Error::NaN(source))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn is_pos_infinity(self) -> bool {
        self.0 == f64::INFINITY
    }

    pub fn is_neg_infinity(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }
}

impl Eq for ExtendedReal {}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedReal {
    fn cmp(&self, other: &Self) -> Ordering {
        // -0.0 and 0.0 compare equal, unlike total_cmp
        self.0
            .partial_cmp(&other.0)
            .expect("ExtendedReal is never NaN")
    }
}

impl fmt::Debug for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_f64(self.0))
    }
}

impl TryFrom<f64> for ExtendedReal {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::checked(value, "conversion")
    }
}

impl From<ExtendedReal> for f64 {
    fn from(v: ExtendedReal) -> f64 {
        v.0
    }
}

/// Finite values serialize as numbers, infinities as the strings `"inf"` / `"-inf"`.
impl Serialize for ExtendedReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            serializer.serialize_f64(self.0)
        } else {
            serializer.serialize_str(&format_f64(self.0))
        }
    }
}

/// Shortest representation that parses back to the same `f64`.
///
/// Plain positional notation in `[1e-5, 1e16)`, scientific notation outside,
/// and the literals `inf` / `-inf`.
pub fn format_f64(v: f64) -> String {
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let a = v.abs();
    if v == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// Returns `value` when `feasible`, `+inf` otherwise.
pub fn extreme_barrier(value: ExtendedReal, feasible: bool) -> ExtendedReal {
    if feasible {
        value
    } else {
        ExtendedReal::INFINITY
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn er(v: f64) -> ExtendedReal {
        ExtendedReal::new(v).unwrap()
    }

    #[test]
    fn barrier_examples() {
        assert_eq!(extreme_barrier(er(3.0), true), er(3.0));
        assert_eq!(extreme_barrier(er(3.0), false), ExtendedReal::INFINITY);
        assert_eq!(
            extreme_barrier(ExtendedReal::NEG_INFINITY, true),
            ExtendedReal::NEG_INFINITY
        );
    }

    #[test]
    fn rejects_nan() {
        assert!(ExtendedReal::new(f64::NAN).is_none());
        assert!(matches!(
            ExtendedReal::checked(f64::NAN, "phi"),
            Err(Error::NaN("phi"))
        ));
    }

    #[test]
    fn order_puts_infinities_at_the_ends() {
        let mut v = vec![
            er(1.0),
            ExtendedReal::INFINITY,
            er(-2.0),
            ExtendedReal::NEG_INFINITY,
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                ExtendedReal::NEG_INFINITY,
                er(-2.0),
                er(1.0),
                ExtendedReal::INFINITY
            ]
        );
    }

    #[test]
    fn formatting_round_trips() {
        for v in [
            0.5,
            101.0,
            1e-10,
            -3.25e20,
            1.0 / 3.0,
            f64::MIN_POSITIVE,
            0.0,
        ] {
            let s = format_f64(v);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
        assert_eq!(format_f64(0.5), "0.5");
        assert_eq!(format_f64(101.0), "101");
        assert_eq!(format_f64(f64::INFINITY), "inf");
        assert_eq!("inf".parse::<f64>().unwrap(), f64::INFINITY);
    }

    #[test]
    fn serializes_infinity_as_string() {
        assert_eq!(
            serde_json::to_string(&ExtendedReal::INFINITY).unwrap(),
            "\"inf\""
        );
        assert_eq!(serde_json::to_string(&er(0.25)).unwrap(), "0.25");
    }
}
