use rand::Rng;

use crate::algebra::{Carrier, CaseRng, Characteristic, Claims, Literal, Semifield};
use crate::axioms::is_prime;
use crate::error::{Error, Result};

/// The prime field `F_p`, elements are residues `0..p`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::Descriptor {
                descriptor: format!("fp:{p}"),
                reason: format!("{p} is not prime"),
            })
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulmod(acc, base);
            }
            base = self.mulmod(base, base);
            e >>= 1;
        }
        acc
    }
}

impl Carrier for PrimeField {
    type Elem = u64;

    fn eq(&self, a: &u64, b: &u64) -> bool {
        a == b
    }

    fn key(&self, a: &u64) -> Vec<u8> {
        a.to_be_bytes().to_vec()
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }

    fn contains(&self, a: &u64) -> bool {
        *a < self.p
    }

    fn sample(&self, rng: &mut CaseRng) -> u64 {
        rng.random_range(0..self.p)
    }

    fn enumerate(&self) -> Option<Vec<u64>> {
        // Large fields are not worth listing.
        (self.p <= 1 << 16).then(|| (0..self.p).collect())
    }
}

impl Literal for PrimeField {
    fn parse(&self, s: &str) -> Result<u64> {
        let v: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::parse(s, "expected a residue"))?;
        if v < self.p {
            Ok(v)
        } else {
            Err(Error::parse(s, format!("residue must be below {}", self.p)))
        }
    }
}

impl Semifield for PrimeField {
    fn name(&self) -> String {
        format!("fp:{}", self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mulmod(*a, *b)
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }

    fn claims(&self) -> Claims {
        Claims {
            characteristic: Characteristic::Prime(self.p),
            strict: false,
            cancellative: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.inv(&0), None);
    }
}
