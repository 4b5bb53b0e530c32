//! Text and JSON encoding of exact rationals: integers are plain numbers,
//! everything else is a string `"a/b"` in lowest terms with `b > 1`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if s == "-0" {
        return None;
    }
    s.parse().ok()
}

/// Parses `"n"` or `"a/b"`, insisting on the canonical spelling.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::BadRational(s.to_string());
    match s.split_once('/') {
        None => parse_int(s).map(BigRational::from_integer).ok_or_else(bad),
        Some((n, d)) => {
            let n = parse_int(n).ok_or_else(bad)?;
            let d = parse_int(d).ok_or_else(bad)?;
            if d <= BigInt::one() {
                return Err(bad());
            }
            let q = BigRational::new(n.clone(), d.clone());
            if q.numer() != &n || q.denom() != &d {
                return Err(bad());
            }
            Ok(q)
        }
    }
}

pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A rational coefficient as it appears in the JSON file formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonRational(pub BigRational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            if let Some(i) = self.0.numer().to_i64() {
                return s.serialize_i64(i);
            }
        }
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonRational;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a string \"a/b\" in lowest terms")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonRational, E> {
                Ok(JsonRational(BigRational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonRational, E> {
                Ok(JsonRational(BigRational::from_integer(v.into())))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonRational, E> {
                parse_rational(v).map(JsonRational).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_spellings_only() {
        assert_eq!(format_rational(&parse_rational("-3/4").unwrap()), "-3/4");
        assert_eq!(format_rational(&parse_rational("12").unwrap()), "12");
        for bad in ["2/4", "3/1", "1/-2", "1/0", "01", "-0", "", "a", "1/", "+1"] {
            assert!(parse_rational(bad).is_err(), "{bad} accepted");
        }
    }

    #[test]
    fn json_encoding() {
        let v: Vec<JsonRational> = serde_json::from_str(r#"[1, -2, "3/5", "-7/2"]"#).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"[1,-2,"3/5","-7/2"]"#);
        assert!(serde_json::from_str::<JsonRational>("1.5").is_err());
        assert!(serde_json::from_str::<JsonRational>(r#""4/6""#).is_err());
    }
}
