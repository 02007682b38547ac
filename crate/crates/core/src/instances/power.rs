use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{one_in, sample_positive_rational};
use crate::algebra::{Carrier, CaseRng, Characteristic, Claims, Literal, Positivity, Semifield};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, rational_string, KeyWriter};

/// `{0} ∪ (ℚ⁺)^k` with term-to-term operations.
///
/// Nonzero elements have every coordinate strictly positive; the zero is the
/// all-zero tuple.
#[derive(Clone, Copy, Debug)]
pub struct RationalPower {
    k: usize,
}

impl RationalPower {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Descriptor {
                descriptor: format!("qplus-power:{k}"),
                reason: "power must be at least 1".into(),
            });
        }
        Ok(RationalPower { k })
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    fn zip(
        &self,
        a: &[BigRational],
        b: &[BigRational],
        op: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Vec<BigRational> {
        a.iter().zip(b).map(|(x, y)| op(x, y)).collect()
    }
}

impl Carrier for RationalPower {
    type Elem = Vec<BigRational>;

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn key(&self, a: &Self::Elem) -> Vec<u8> {
        let mut w = KeyWriter::new();
        for x in a {
            w.rational(x);
        }
        w.finish()
    }

    fn render(&self, a: &Self::Elem) -> String {
        let parts: Vec<String> = a.iter().map(rational_string).collect();
        format!("({})", parts.join(","))
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        a.len() == self.k && (a.iter().all(Zero::is_zero) || a.iter().all(Signed::is_positive))
    }

    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        if one_in(rng, 10) {
            self.zero()
        } else {
            (0..self.k).map(|_| sample_positive_rational(rng)).collect()
        }
    }
}

impl Literal for RationalPower {
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        let t = s.trim();
        if t == "0" {
            return Ok(self.zero());
        }
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(s, "expected (q1,...,qk)"))?;
        let v = inner
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        if self.contains(&v) {
            Ok(v)
        } else {
            Err(Error::parse(
                s,
                format!("expected {} coordinates, all positive or all zero", self.k),
            ))
        }
    }
}

impl Semifield for RationalPower {
    fn name(&self) -> String {
        format!("qplus-power:{}", self.k)
    }

    fn zero(&self) -> Self::Elem {
        vec![BigRational::zero(); self.k]
    }

    fn one(&self) -> Self::Elem {
        vec![BigRational::from_integer(1.into()); self.k]
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.zip(a, b, |x, y| x + y)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.zip(a, b, |x, y| x * y)
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        (!self.is_zero(a)).then(|| a.iter().map(|x| x.recip()).collect())
    }

    fn claims(&self) -> Claims {
        Claims {
            characteristic: Characteristic::Zero,
            strict: true,
            cancellative: true,
        }
    }

    fn subtract(&self, a: &Self::Elem, b: &Self::Elem) -> Positivity<Self::Elem> {
        let d = self.zip(a, b, |x, y| x - y);
        if self.contains(&d) {
            Positivity::Positive(d)
        } else {
            Positivity::NotPositive
        }
    }
}
