use std::fmt;
use std::ops::Sub;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// An integer time that may also be the absorbing "no feasible start" value.
///
/// `NegInf` compares strictly less than every finite time, subtracting a
/// finite amount from it stays `NegInf`, and `max(NegInf, x) = x`. It encodes
/// to JSON as the literal string `"-inf"`, finite values as plain integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtTime {
    NegInf,
    Finite(i64),
}

impl ExtTime {
    pub const NEG_INF: ExtTime = ExtTime::NegInf;

    pub fn finite(value: i64) -> Self {
        ExtTime::Finite(value)
    }

    pub fn is_neg_inf(self) -> bool {
        matches!(self, ExtTime::NegInf)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtTime::Finite(_))
    }

    /// The finite value, if there is one.
    pub fn value(self) -> Option<i64> {
        match self {
            ExtTime::NegInf => None,
            ExtTime::Finite(v) => Some(v),
        }
    }

    /// Finite value or panic; for contexts that already checked finiteness.
    pub fn expect_finite(self, what: &str) -> i64 {
        match self {
            ExtTime::Finite(v) => v,
            ExtTime::NegInf => panic!("expected finite time for {what}"),
        }
    }
}

impl From<i64> for ExtTime {
    fn from(v: i64) -> Self {
        ExtTime::Finite(v)
    }
}

impl Sub<i64> for ExtTime {
    type Output = ExtTime;

    fn sub(self, rhs: i64) -> ExtTime {
        match self {
            ExtTime::NegInf => ExtTime::NegInf,
            ExtTime::Finite(v) => ExtTime::Finite(v - rhs),
        }
    }
}

impl PartialEq<i64> for ExtTime {
    fn eq(&self, other: &i64) -> bool {
        matches!(self, ExtTime::Finite(v) if v == other)
    }
}

impl PartialOrd<i64> for ExtTime {
    fn partial_cmp(&self, other: &i64) -> Option<std::cmp::Ordering> {
        match self {
            ExtTime::NegInf => Some(std::cmp::Ordering::Less),
            ExtTime::Finite(v) => v.partial_cmp(other),
        }
    }
}

impl fmt::Display for ExtTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtTime::NegInf => write!(f, "-inf"),
            ExtTime::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for ExtTime {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtTime::NegInf => serializer.serialize_str("-inf"),
            ExtTime::Finite(v) => serializer.serialize_i64(*v),
        }
    }
}

struct ExtTimeVisitor;

impl<'de> Visitor<'de> for ExtTimeVisitor {
    type Value = ExtTime;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or the string \"-inf\"")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtTime, E> {
        Ok(ExtTime::Finite(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtTime, E> {
        i64::try_from(v)
            .map(ExtTime::Finite)
            .map_err(|_| E::custom("time out of i64 range"))
    }

    fn visit_str<E: de::Error>(self, s: &str) -> Result<ExtTime, E> {
        if s == "-inf" {
            Ok(ExtTime::NegInf)
        } else {
            Err(E::custom("expected \"-inf\""))
        }
    }
}

impl<'de> Deserialize<'de> for ExtTime {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<ExtTime, D::Error> {
        deserializer.deserialize_any(ExtTimeVisitor)
    }
}
