use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{one_in, sample_positive_rational, sample_rational};
use crate::algebra::{Carrier, CaseRng, Characteristic, Claims, Literal, Positivity, Semifield};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, rational_string, KeyWriter, PositiveRational};

/// A dual number `a + b·ε` with `ε² = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualNumber {
    pub a: BigRational,
    pub b: BigRational,
}

impl DualNumber {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        DualNumber { a, b }
    }

    pub fn zero() -> Self {
        DualNumber::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        DualNumber::new(BigRational::from_integer(1.into()), BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        DualNumber::new(&self.a + &o.a, &self.b + &o.b)
    }

    pub fn sub(&self, o: &Self) -> Self {
        DualNumber::new(&self.a - &o.a, &self.b - &o.b)
    }

    pub fn neg(&self) -> Self {
        DualNumber::new(-&self.a, -&self.b)
    }

    pub fn mul(&self, o: &Self) -> Self {
        DualNumber::new(&self.a * &o.a, &self.a * &o.b + &self.b * &o.a)
    }

    /// Inverse, defined when the real part is nonzero.
    pub fn inv(&self) -> Option<Self> {
        if self.a.is_zero() {
            return None;
        }
        let ai = self.a.recip();
        let b = -(&self.b * &ai * &ai);
        Some(DualNumber::new(ai, b))
    }

    pub(crate) fn key(&self) -> Vec<u8> {
        KeyWriter::new()
            .rational(&self.a)
            .rational(&self.b)
            .finish()
    }

    /// Parses `a`, `a+be`, `a-be` or `be`.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_suffix('e') else {
            return Ok(DualNumber::new(parse_rational(&t)?, BigRational::zero()));
        };
        // Split at the last sign that does not start the string.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (real, eps) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let eps = match eps {
            "" | "+" => "1",
            "-" => "-1",
            e => e.strip_prefix('+').unwrap_or(e),
        };
        let real = parse_rational(real).map_err(|_| Error::parse(s, "bad real part"))?;
        let eps = parse_rational(eps).map_err(|_| Error::parse(s, "bad ε part"))?;
        Ok(DualNumber::new(real, eps))
    }
}

impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = rational_string(&self.a);
        if self.b.is_zero() {
            return write!(f, "{a}");
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        let b = if self.b.abs().is_one() {
            String::new()
        } else {
            rational_string(&self.b.abs())
        };
        if self.a.is_zero() {
            write!(f, "{}{b}e", if self.b.is_negative() { "-" } else { "" })
        } else {
            write!(f, "{a}{sign}{b}e")
        }
    }
}

/// `{0} ∪ {a + bε : a > 0}`, the positive cone of `ℚ[ε]` ordered by the
/// first coordinate.
#[derive(Clone, Copy, Debug, Default)]
pub struct DualPositive;

impl Carrier for DualPositive {
    type Elem = DualNumber;

    fn eq(&self, x: &DualNumber, y: &DualNumber) -> bool {
        x == y
    }

    fn key(&self, x: &DualNumber) -> Vec<u8> {
        x.key()
    }

    fn render(&self, x: &DualNumber) -> String {
        x.to_string()
    }

    fn contains(&self, x: &DualNumber) -> bool {
        x.is_zero() || x.a.is_positive()
    }

    fn sample(&self, rng: &mut CaseRng) -> DualNumber {
        if one_in(rng, 10) {
            DualNumber::zero()
        } else {
            DualNumber::new(sample_positive_rational(rng), sample_rational(rng))
        }
    }
}

impl Literal for DualPositive {
    fn parse(&self, s: &str) -> Result<DualNumber> {
        let x = DualNumber::parse(s)?;
        if self.contains(&x) {
            Ok(x)
        } else {
            Err(Error::parse(s, "real part must be positive"))
        }
    }
}

impl Semifield for DualPositive {
    fn name(&self) -> String {
        "dual-positive".into()
    }

    fn zero(&self) -> DualNumber {
        DualNumber::zero()
    }

    fn one(&self) -> DualNumber {
        DualNumber::one()
    }

    fn add(&self, x: &DualNumber, y: &DualNumber) -> DualNumber {
        x.add(y)
    }

    fn mul(&self, x: &DualNumber, y: &DualNumber) -> DualNumber {
        x.mul(y)
    }

    fn inv(&self, x: &DualNumber) -> Option<DualNumber> {
        x.inv()
    }

    fn claims(&self) -> Claims {
        Claims {
            characteristic: Characteristic::Zero,
            strict: true,
            cancellative: true,
        }
    }

    fn ratio_as_rational(
        &self,
        x: &DualNumber,
        y: &DualNumber,
    ) -> Result<Option<PositiveRational>> {
        if x.is_zero() || y.is_zero() {
            return Err(Error::Domain("ratio of zero".into()));
        }
        let theta = &y.a / &x.a;
        if y.b == &theta * &x.b {
            PositiveRational::from_rational(theta).map(Some)
        } else {
            Ok(None)
        }
    }

    fn subtract(&self, x: &DualNumber, y: &DualNumber) -> Positivity<DualNumber> {
        let d = x.sub(y);
        if self.contains(&d) {
            Positivity::Positive(d)
        } else {
            Positivity::NotPositive
        }
    }
}
