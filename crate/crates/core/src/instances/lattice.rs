use num_bigint::BigInt;
use num_traits::Zero;

use super::{one_in, sample_integer};
use crate::algebra::{Carrier, CaseRng, Literal};
use crate::char_one::LatticeGroup;
use crate::error::{Error, Result};
use crate::rational::{parse_integer, KeyWriter};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeOrder {
    Coordinatewise,
    /// Total; join is the lexicographic maximum.
    Lexicographic,
}

/// `(ℤⁿ, +)` ordered coordinatewise or lexicographically. Dimension 0 is the
/// trivial group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegerLattice {
    dim: usize,
    order: LatticeOrder,
}

impl IntegerLattice {
    pub fn new(dim: usize, order: LatticeOrder) -> Self {
        IntegerLattice { dim, order }
    }

    pub fn integers() -> Self {
        Self::new(1, LatticeOrder::Coordinatewise)
    }

    pub fn trivial() -> Self {
        Self::new(0, LatticeOrder::Coordinatewise)
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> LatticeOrder {
        self.order
    }

    /// Every point of the box `[lo, hi]^n`, lexicographic enumeration order.
    pub fn box_elements(&self, lo: i64, hi: i64) -> Vec<Vec<BigInt>> {
        let mut out: Vec<Vec<BigInt>> = vec![Vec::new()];
        for _ in 0..self.dim {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (lo..=hi).map(move |v| {
                        let mut p = prefix.clone();
                        p.push(BigInt::from(v));
                        p
                    })
                })
                .collect();
        }
        out
    }
}

impl Carrier for IntegerLattice {
    type Elem = Vec<BigInt>;

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn key(&self, a: &Self::Elem) -> Vec<u8> {
        let mut w = KeyWriter::new();
        for x in a {
            w.int(x);
        }
        w.finish()
    }

    fn render(&self, a: &Self::Elem) -> String {
        match a.as_slice() {
            [x] => x.to_string(),
            xs => format!(
                "({})",
                xs.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        a.len() == self.dim
    }

    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        if one_in(rng, 10) {
            return self.identity();
        }
        (0..self.dim).map(|_| sample_integer(rng, 5)).collect()
    }

    fn enumerate(&self) -> Option<Vec<Self::Elem>> {
        (self.dim == 0).then(|| vec![Vec::new()])
    }
}

impl Literal for IntegerLattice {
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let v = match t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            Some("") => Vec::new(),
            Some(inner) => inner
                .split(',')
                .map(parse_integer)
                .collect::<Result<Vec<_>>>()?,
            None => vec![parse_integer(&t)?],
        };
        if v.len() == self.dim {
            Ok(v)
        } else {
            Err(Error::parse(
                s,
                format!("expected {} coordinates", self.dim),
            ))
        }
    }
}

impl LatticeGroup for IntegerLattice {
    fn name(&self) -> String {
        match (self.dim, self.order) {
            (0, _) => "trivial".into(),
            (1, _) => "z".into(),
            (2, LatticeOrder::Lexicographic) => "z2-lex".into(),
            (n, LatticeOrder::Lexicographic) => format!("zn-lex:{n}"),
            (n, LatticeOrder::Coordinatewise) => format!("zn-coordinatewise:{n}"),
        }
    }

    fn identity(&self) -> Self::Elem {
        vec![BigInt::zero(); self.dim]
    }

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn inverse(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| -x).collect()
    }

    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        match self.order {
            LatticeOrder::Coordinatewise => {
                a.iter().zip(b).map(|(x, y)| x.max(y).clone()).collect()
            }
            LatticeOrder::Lexicographic => a.max(b).clone(),
        }
    }

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        match self.order {
            LatticeOrder::Coordinatewise => a.iter().zip(b).all(|(x, y)| x <= y),
            LatticeOrder::Lexicographic => a <= b,
        }
    }
}
