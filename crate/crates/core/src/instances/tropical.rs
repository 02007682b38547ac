use num_bigint::BigInt;
use num_traits::Zero;

use super::{one_in, sample_integer};
use crate::algebra::{Carrier, CaseRng, Characteristic, Claims, Literal, Semifield};
use crate::error::Result;
use crate::rational::{parse_integer, KeyWriter};

/// Max-plus integers `(ℤ ∪ {-∞}, max, +)`. `None` is `-∞`.
#[derive(Clone, Copy, Debug, Default)]
pub struct TropicalIntegers;

impl Carrier for TropicalIntegers {
    type Elem = Option<BigInt>;

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn key(&self, a: &Self::Elem) -> Vec<u8> {
        match a {
            None => vec![0],
            Some(n) => KeyWriter::new().tag(1).int(n).finish(),
        }
    }

    fn render(&self, a: &Self::Elem) -> String {
        match a {
            None => "-inf".into(),
            Some(n) => n.to_string(),
        }
    }

    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        if one_in(rng, 10) {
            None
        } else {
            Some(sample_integer(rng, 8))
        }
    }
}

impl Literal for TropicalIntegers {
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        match s.trim() {
            "-inf" => Ok(None),
            t => parse_integer(t).map(Some),
        }
    }
}

impl Semifield for TropicalIntegers {
    fn name(&self) -> String {
        "tropical-z".into()
    }

    fn zero(&self) -> Self::Elem {
        None
    }

    fn one(&self) -> Self::Elem {
        Some(BigInt::zero())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.clone().max(b.clone())
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Some(a.as_ref()? + b.as_ref()?)
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        a.as_ref().map(|n| Some(-n))
    }

    fn claims(&self) -> Claims {
        Claims {
            characteristic: Characteristic::One,
            strict: true,
            cancellative: false,
        }
    }
}
