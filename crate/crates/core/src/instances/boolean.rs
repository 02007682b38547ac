use rand::Rng;

use crate::algebra::{Carrier, CaseRng, Characteristic, Claims, Literal, Semifield};
use crate::error::{Error, Result};

/// The two-element semifield `{0, 1}` with `1 + 1 = 1`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Boolean;

impl Carrier for Boolean {
    type Elem = bool;

    fn eq(&self, a: &bool, b: &bool) -> bool {
        a == b
    }

    fn key(&self, a: &bool) -> Vec<u8> {
        vec![*a as u8]
    }

    fn render(&self, a: &bool) -> String {
        if *a { "1" } else { "0" }.to_string()
    }

    fn sample(&self, rng: &mut CaseRng) -> bool {
        rng.random()
    }

    fn enumerate(&self) -> Option<Vec<bool>> {
        Some(vec![false, true])
    }
}

impl Literal for Boolean {
    fn parse(&self, s: &str) -> Result<bool> {
        match s.trim() {
            "0" => Ok(false),
            "1" => Ok(true),
            _ => Err(Error::parse(s, "boolean literals are 0 and 1")),
        }
    }
}

impl Semifield for Boolean {
    fn name(&self) -> String {
        "boolean".into()
    }

    fn zero(&self) -> bool {
        false
    }

    fn one(&self) -> bool {
        true
    }

    fn add(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }

    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }

    fn inv(&self, a: &bool) -> Option<bool> {
        a.then_some(true)
    }

    fn claims(&self) -> Claims {
        Claims {
            characteristic: Characteristic::One,
            strict: true,
            cancellative: false,
        }
    }
}
