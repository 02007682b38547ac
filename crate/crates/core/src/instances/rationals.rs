use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{one_in, sample_positive_rational};
use crate::algebra::{Carrier, CaseRng, Characteristic, Claims, Literal, Positivity, Semifield};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, rational_string, KeyWriter, PositiveRational};

/// `{0} ∪ ℚ⁺` with the usual operations.
#[derive(Clone, Copy, Debug, Default)]
pub struct PositiveRationals;

impl Carrier for PositiveRationals {
    type Elem = BigRational;

    fn eq(&self, a: &BigRational, b: &BigRational) -> bool {
        a == b
    }

    fn key(&self, a: &BigRational) -> Vec<u8> {
        KeyWriter::new().rational(a).finish()
    }

    fn render(&self, a: &BigRational) -> String {
        rational_string(a)
    }

    fn contains(&self, a: &BigRational) -> bool {
        !a.is_negative()
    }

    fn sample(&self, rng: &mut CaseRng) -> BigRational {
        if one_in(rng, 10) {
            BigRational::zero()
        } else {
            sample_positive_rational(rng)
        }
    }
}

impl Literal for PositiveRationals {
    fn parse(&self, s: &str) -> Result<BigRational> {
        let v = parse_rational(s)?;
        if v.is_negative() {
            Err(Error::parse(s, "negative rational"))
        } else {
            Ok(v)
        }
    }
}

impl Semifield for PositiveRationals {
    fn name(&self) -> String {
        "qplus".into()
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::from_integer(1.into())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
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
        x: &BigRational,
        y: &BigRational,
    ) -> Result<Option<PositiveRational>> {
        if x.is_zero() || y.is_zero() {
            return Err(Error::Domain("ratio of zero".into()));
        }
        PositiveRational::from_rational(y / x).map(Some)
    }

    fn subtract(&self, a: &BigRational, b: &BigRational) -> Positivity<BigRational> {
        let d = a - b;
        if d.is_negative() {
            Positivity::NotPositive
        } else {
            Positivity::Positive(d)
        }
    }
}
