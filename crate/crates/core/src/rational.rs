//! Exact rational numbers and their `"p/q"` text form.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// Parse `"p"`, `"p/q"` or a finite decimal like `"-1.25"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("not a rational: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: i128 = p.trim().parse().map_err(|_| bad())?;
        let q: i128 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 30 {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let i: i128 = if int.is_empty() || int == "-" { 0 } else { int.parse().map_err(|_| bad())? };
        let f: i128 = frac.parse().map_err(|_| bad())?;
        let den = 10i128.pow(frac.len() as u32);
        let mag = i.abs() * den + f;
        return Ok(Rational::new(if neg { -mag } else { mag }, den));
    }
    s.parse::<i128>().map(Rational::from_integer).map_err(|_| bad())
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn unit_weights(n: usize) -> Vec<Rational> {
    vec![Rational::one(); n]
}

pub fn zero() -> Rational {
    Rational::zero()
}

/// Serde adapter writing rationals as strings.
pub mod as_string {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `[start, end]` pairs of rationals.
pub mod pair_as_strings {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(r: &(Rational, Rational), s: S) -> std::result::Result<S::Ok, S::Error> {
        [format_rational(&r.0), format_rational(&r.1)].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<(Rational, Rational), D::Error> {
        let [a, b] = <[String; 2]>::deserialize(d)?;
        let a = parse_rational(&a).map_err(serde::de::Error::custom)?;
        let b = parse_rational(&b).map_err(serde::de::Error::custom)?;
        Ok((a, b))
    }
}
