use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{one_in, sample_integer, sample_positive_rational};
use crate::algebra::{Carrier, CaseRng, Characteristic, Claims, Literal, Semifield};
use crate::error::{Error, Result};
use crate::rational::{
    parse_integer, parse_rational, rational_string, KeyWriter, PositiveRational,
};

/// The term `q·X^k` with `q > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeadingTerm {
    pub q: BigRational,
    pub k: BigInt,
}

impl LeadingTerm {
    pub fn new(q: BigRational, k: impl Into<BigInt>) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::Domain(format!(
                "leading coefficient {q} must be positive"
            )));
        }
        Ok(LeadingTerm { q, k: k.into() })
    }
}

impl fmt::Display for LeadingTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = rational_string(&self.q);
        let x = if self.k.is_one() {
            "X".to_string()
        } else {
            format!("X^{}", self.k)
        };
        match (self.k.is_zero(), self.q.is_one()) {
            (true, _) => write!(f, "{q}"),
            (false, true) => write!(f, "{x}"),
            (false, false) => write!(f, "{q}*{x}"),
        }
    }
}

/// Leading terms under max-degree addition: equal exponents add
/// coefficients, otherwise the higher exponent wins. Not cancellative.
#[derive(Clone, Copy, Debug, Default)]
pub struct LeadingTermSemifield;

impl Carrier for LeadingTermSemifield {
    type Elem = Option<LeadingTerm>;

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn key(&self, a: &Self::Elem) -> Vec<u8> {
        match a {
            None => vec![0],
            Some(t) => KeyWriter::new().tag(1).int(&t.k).rational(&t.q).finish(),
        }
    }

    fn render(&self, a: &Self::Elem) -> String {
        match a {
            None => "0".into(),
            Some(t) => t.to_string(),
        }
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        a.as_ref().is_none_or(|t| t.q.is_positive())
    }

    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        if one_in(rng, 10) {
            return None;
        }
        Some(LeadingTerm {
            q: sample_positive_rational(rng),
            k: sample_integer(rng, 2),
        })
    }
}

impl Literal for LeadingTermSemifield {
    /// `0`, `q`, `X`, `X^k`, `q*X`, `q*X^k`.
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "0" {
            return Ok(None);
        }
        let (q, k) = match t.find(['X', 'x']) {
            None => (parse_rational(&t)?, BigInt::zero()),
            Some(i) => {
                let q = match &t[..i] {
                    "" => BigRational::one(),
                    c => parse_rational(
                        c.strip_suffix('*')
                            .ok_or_else(|| Error::parse(s, "expected q*X^k"))?,
                    )?,
                };
                let k = match &t[i + 1..] {
                    "" => BigInt::one(),
                    e => parse_integer(
                        e.strip_prefix('^')
                            .ok_or_else(|| Error::parse(s, "expected X^k"))?,
                    )?,
                };
                (q, k)
            }
        };
        LeadingTerm::new(q, k)
            .map(Some)
            .map_err(|_| Error::parse(s, "coefficient must be positive"))
    }
}

impl Semifield for LeadingTermSemifield {
    fn name(&self) -> String {
        "leading-term".into()
    }

    fn zero(&self) -> Self::Elem {
        None
    }

    fn one(&self) -> Self::Elem {
        Some(LeadingTerm {
            q: BigRational::one(),
            k: BigInt::zero(),
        })
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        match (a, b) {
            (None, x) | (x, None) => x.clone(),
            (Some(s), Some(t)) => Some(match s.k.cmp(&t.k) {
                Ordering::Greater => s.clone(),
                Ordering::Less => t.clone(),
                Ordering::Equal => LeadingTerm {
                    q: &s.q + &t.q,
                    k: s.k.clone(),
                },
            }),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (s, t) = (a.as_ref()?, b.as_ref()?);
        Some(LeadingTerm {
            q: &s.q * &t.q,
            k: &s.k + &t.k,
        })
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        a.as_ref().map(|t| {
            Some(LeadingTerm {
                q: t.q.recip(),
                k: -&t.k,
            })
        })
    }

    fn claims(&self) -> Claims {
        Claims {
            characteristic: Characteristic::Zero,
            strict: true,
            cancellative: false,
        }
    }

    fn ratio_as_rational(
        &self,
        x: &Self::Elem,
        y: &Self::Elem,
    ) -> Result<Option<PositiveRational>> {
        let (Some(s), Some(t)) = (x, y) else {
            return Err(Error::Domain("ratio of zero".into()));
        };
        if s.k == t.k {
            PositiveRational::from_rational(&t.q / &s.q).map(Some)
        } else {
            Ok(None)
        }
    }
}
