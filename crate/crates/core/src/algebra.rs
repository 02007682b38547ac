//! The semifield abstraction.
//!
//! A [`Semifield`] bundles the carrier operations (`zero`, `one`, `add`,
//! `mul`, `inv`) with metadata ([`Claims`]) that the checkers verify rather
//! than trust. Elements are plain values owned by the caller; every operation
//! goes through the instance, so two instances of the same Rust type (say
//! `F_3` and `F_5`) never mix silently: [`Carrier::contains`] rejects foreign
//! values at the checker boundary.

use std::fmt;

use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::PositiveRational;

/// Random source handed to samplers. Each checked case gets its own stream.
pub type CaseRng = ChaCha8Rng;

/// A set of values with decidable equality, a byte key, a literal rendering
/// and a sampler.
pub trait Carrier: Send + Sync {
    type Elem: Clone + fmt::Debug + Send + Sync;

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    /// Byte encoding of `a`, used for hashing and deterministic ordering.
    fn key(&self, a: &Self::Elem) -> Vec<u8>;

    /// Literal syntax of `a`.
    fn render(&self, a: &Self::Elem) -> String;

    /// Membership test for values handed in from outside.
    fn contains(&self, _a: &Self::Elem) -> bool {
        true
    }

    /// Draws an element. Samplers hit the distinguished elements (zero, one)
    /// with positive probability.
    fn sample(&self, rng: &mut CaseRng) -> Self::Elem;

    /// The whole carrier, when finite.
    fn enumerate(&self) -> Option<Vec<Self::Elem>> {
        None
    }
}

/// Carriers whose elements can be read back from their literal syntax.
pub trait Literal: Carrier {
    fn parse(&self, s: &str) -> Result<Self::Elem>;
}

/// Characteristic an instance declares about itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Characteristic {
    One,
    Prime(u64),
    Zero,
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::One => write!(f, "one"),
            Characteristic::Prime(p) => write!(f, "p:{p}"),
            Characteristic::Zero => write!(f, "zero"),
        }
    }
}

/// Verdict of the bounded characteristic probe.
///
/// `ZeroUpTo(bound)` only says that `1, 1+1, ...` (bound summands) are
/// pairwise distinct and nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharClass {
    One,
    Prime(u64),
    ZeroUpTo(u64),
}

impl CharClass {
    pub fn agrees_with(&self, declared: Characteristic) -> bool {
        matches!(
            (self, declared),
            (CharClass::One, Characteristic::One) | (CharClass::ZeroUpTo(_), Characteristic::Zero)
        ) || matches!((self, declared), (CharClass::Prime(p), Characteristic::Prime(q)) if *p == q)
    }
}

impl fmt::Display for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharClass::One => write!(f, "char=one"),
            CharClass::Prime(p) => write!(f, "char=p:{p}"),
            CharClass::ZeroUpTo(bound) => write!(f, "char=zero(bound={bound})"),
        }
    }
}

/// Declared metadata of an instance. Checked, never assumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claims {
    pub characteristic: Characteristic,
    /// Not a field: 1 has no additive inverse.
    pub strict: bool,
    pub cancellative: bool,
}

/// Three-valued answer to "is this in the positive part", carrying the
/// certificate when positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Positivity<E> {
    Positive(E),
    NotPositive,
    Unknown,
}

pub trait Semifield: Carrier {
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;

    fn one(&self) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; `None` exactly at zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn claims(&self) -> Claims;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.eq(a, &self.zero())
    }

    /// The rational `θ` with `y = θ·x`, if there is one.
    fn ratio_as_rational(
        &self,
        _x: &Self::Elem,
        _y: &Self::Elem,
    ) -> Result<Option<PositiveRational>> {
        Err(Error::CapabilityMissing {
            instance: self.name(),
            capability: "ratio-as-rational",
        })
    }

    /// Decides whether `a = b + f` for some `f` of the carrier.
    fn subtract(&self, _a: &Self::Elem, _b: &Self::Elem) -> Positivity<Self::Elem> {
        Positivity::Unknown
    }

    /// Whether `key(a) == key(b)` exactly when `eq(a, b)`.
    fn canonical_keys(&self) -> bool {
        true
    }
}

pub(crate) fn require_nonzero<S: Semifield + ?Sized>(f: &S, x: &S::Elem, what: &str) -> Result<()> {
    if f.is_zero(x) {
        Err(Error::Domain(format!(
            "{what}: argument must be nonzero in {}",
            f.name()
        )))
    } else {
        Ok(())
    }
}
