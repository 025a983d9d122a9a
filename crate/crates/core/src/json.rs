//! JSON helpers shared by the documented wire formats.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};

/// An arbitrary-precision integer in JSON: a number when it fits in `i64`,
/// otherwise a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigNum(pub BigInt);

impl serde::Serialize for BigNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> serde::Deserialize<'de> for BigNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;

        impl Visitor<'_> for V {
            type Value = BigNum;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigNum, E> {
                Ok(BigNum(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigNum, E> {
                Ok(BigNum(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<BigNum, E> {
                v.parse::<BigInt>().map(BigNum).map_err(E::custom)
            }
        }

        d.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_and_large_values() {
        assert_eq!(serde_json::to_string(&BigNum(BigInt::from(-7))).unwrap(), "-7");
        let big = BigInt::from(1) << 80usize;
        let s = serde_json::to_string(&BigNum(big.clone())).unwrap();
        assert_eq!(s, format!("\"{big}\""));
        assert_eq!(serde_json::from_str::<BigNum>(&s).unwrap().0, big);
        assert_eq!(serde_json::from_str::<BigNum>("12").unwrap().0, BigInt::from(12));
    }
}
