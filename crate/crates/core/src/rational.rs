//! Exact rational helpers: the [`PositiveRational`] newtype, literal parsing
//! and the byte encoding shared by every instance key.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A strictly positive rational in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRational(BigRational);

impl PositiveRational {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let (n, d) = (numerator.into(), denominator.into());
        if d.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Self::from_rational(BigRational::new(n, d))
    }

    pub fn from_rational(value: BigRational) -> Result<Self> {
        if value.is_positive() {
            Ok(PositiveRational(value))
        } else {
            Err(Error::Domain(format!("{value} is not a positive rational")))
        }
    }

    pub fn integer(n: u64) -> Result<Self> {
        Self::new(BigInt::from(n), BigInt::one())
    }

    pub fn one() -> Self {
        PositiveRational(BigRational::one())
    }

    pub fn numerator(&self) -> BigUint {
        self.0.numer().magnitude().clone()
    }

    pub fn denominator(&self) -> BigUint {
        self.0.denom().magnitude().clone()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        PositiveRational(&self.0 + &other.0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        PositiveRational(&self.0 * &other.0)
    }

    pub fn recip(&self) -> Self {
        PositiveRational(self.0.recip())
    }
}

impl fmt::Display for PositiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.0, f)
    }
}

impl FromStr for PositiveRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let value = parse_rational(s)?;
        PositiveRational::from_rational(value)
            .map_err(|_| Error::parse(s, "expected a positive rational"))
    }
}

/// Formats `n` or `n/d`.
pub(crate) fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rational_string(r: &BigRational) -> String {
    struct Show<'a>(&'a BigRational);
    impl fmt::Display for Show<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            fmt_rational(self.0, f)
        }
    }
    Show(r).to_string()
}

/// Parses `[-]n` or `[-]n/d`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| Error::parse(s, "bad numerator"))?;
    let d = BigInt::from_str(d).map_err(|_| Error::parse(s, "bad denominator"))?;
    if d.is_zero() {
        return Err(Error::parse(s, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

pub(crate) fn parse_integer(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| Error::parse(s, "expected an integer"))
}

/// Append-only writer for canonical element keys.
#[derive(Default)]
pub(crate) struct KeyWriter(Vec<u8>);

impl KeyWriter {
    pub fn new() -> Self {
        KeyWriter(Vec::new())
    }

    pub fn tag(&mut self, t: u8) -> &mut Self {
        self.0.push(t);
        self
    }

    pub fn bytes(&mut self, b: &[u8]) -> &mut Self {
        self.0.extend_from_slice(&(b.len() as u32).to_be_bytes());
        self.0.extend_from_slice(b);
        self
    }

    pub fn int(&mut self, n: &BigInt) -> &mut Self {
        let (sign, mag) = n.to_bytes_be();
        self.tag(match sign {
            Sign::Minus => 0,
            Sign::NoSign => 1,
            Sign::Plus => 2,
        });
        self.bytes(&mag)
    }

    pub fn rational(&mut self, r: &BigRational) -> &mut Self {
        self.int(r.numer()).int(r.denom())
    }

    pub fn finish(&mut self) -> Vec<u8> {
        std::mem::take(&mut self.0)
    }
}
