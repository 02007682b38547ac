//! Partially ordered rings and the Grothendieck completion.
//!
//! A cancellative strict semifield `F` of characteristic zero embeds in the
//! ring `A_F` of formal differences `(a, b)`, read `a - b`, with
//! `(a, b) ~ (c, d)` iff `a + d = c + b`. The image of `F` is the positive
//! cone. Conversely the cone of a partially ordered ring in which nonzero
//! positives invert is a cancellative strict semifield.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Carrier, CaseRng, CharClass, Characteristic, Claims, Positivity, Semifield};
use crate::axioms::{cancellativity_probe, characteristic, DEFAULT_CHAR_BOUND};
use crate::check::{run_cases, Report, Sampling, Violation};
use crate::error::{Error, Result};
use crate::instances::{one_in, sample_positive_rational, sample_rational, DualNumber};
use crate::rational::{rational_string, KeyWriter};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeVerdict {
    Positive,
    NotPositive,
    Unknown,
}

/// A commutative ring with a positivity cone.
pub trait OrderedRing: Carrier {
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;

    fn one(&self) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn positivity(&self, a: &Self::Elem) -> ConeVerdict;

    /// Multiplicative inverse, where the ring can produce one.
    fn invert(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// `(p, q)` nonzero positives with `a = p - q`.
    fn decompose(&self, a: &Self::Elem) -> Option<(Self::Elem, Self::Elem)>;

    /// A nonzero element of the cone.
    fn sample_positive(&self, rng: &mut CaseRng) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.eq(a, &self.zero())
    }
}

/// Ring laws, cone closure under `+` and `×`, `P ∩ -P = {0}`, inverses of
/// nonzero positives, and decomposition as a difference of positives, on
/// sampled `(a, b, c)`.
///
/// A cone verdict of [`ConeVerdict::Unknown`] on a sum or product of
/// positives counts as a violation: the cone must be closed on what it
/// certifies.
pub fn check_ordered_ring_axioms<R: OrderedRing>(
    r: &R,
    sampling: &Sampling<'_, R::Elem>,
) -> Result<Report> {
    let zero = r.zero();
    let one = r.one();
    if r.eq(&zero, &one) {
        return Ok(Report::fail(0, "zero-ne-one", vec![r.render(&zero)]));
    }
    run_cases(r, &r.name(), sampling, 3, |t| {
        ring_violation(r, &zero, &one, &t[0], &t[1], &t[2])
    })
}

fn ring_violation<R: OrderedRing>(
    r: &R,
    zero: &R::Elem,
    one: &R::Elem,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
) -> Option<Violation<R::Elem>> {
    let e = |x: &R::Elem, y: &R::Elem| r.eq(x, y);
    let abc = || vec![a.clone(), b.clone(), c.clone()];
    let ab = r.add(a, b);
    let ab_m = r.mul(a, b);
    if !e(&r.add(&ab, c), &r.add(a, &r.add(b, c))) {
        return Some(("add-associative", abc()));
    }
    if !e(&ab, &r.add(b, a)) {
        return Some(("add-commutative", abc()));
    }
    if !e(&r.add(a, zero), a) {
        return Some(("add-neutral", vec![a.clone()]));
    }
    if !r.is_zero(&r.add(a, &r.neg(a))) {
        return Some(("add-inverse", vec![a.clone()]));
    }
    if !e(&r.mul(&ab_m, c), &r.mul(a, &r.mul(b, c))) {
        return Some(("mul-associative", abc()));
    }
    if !e(&ab_m, &r.mul(b, a)) {
        return Some(("mul-commutative", abc()));
    }
    if !e(&r.mul(a, one), a) {
        return Some(("mul-neutral", vec![a.clone()]));
    }
    if !e(&r.mul(a, &r.add(b, c)), &r.add(&ab_m, &r.mul(a, c))) {
        return Some(("distributive", abc()));
    }

    let pa = r.positivity(a) == ConeVerdict::Positive;
    let pb = r.positivity(b) == ConeVerdict::Positive;
    if pa && pb {
        if r.positivity(&ab) != ConeVerdict::Positive {
            return Some(("cone-closed-add", vec![a.clone(), b.clone()]));
        }
        if r.positivity(&ab_m) != ConeVerdict::Positive {
            return Some(("cone-closed-mul", vec![a.clone(), b.clone()]));
        }
    }
    let a_zero = r.is_zero(a);
    if pa && !a_zero && r.positivity(&r.neg(a)) == ConeVerdict::Positive {
        return Some(("cone-pointed", vec![a.clone()]));
    }
    if pa && !a_zero {
        match r.invert(a) {
            Some(ai) if e(&r.mul(a, &ai), one) && r.positivity(&ai) == ConeVerdict::Positive => {}
            _ => return Some(("positive-inverse", vec![a.clone()])),
        }
    }
    if !a_zero {
        let ok = r.decompose(a).is_some_and(|(p, q)| {
            !r.is_zero(&p)
                && !r.is_zero(&q)
                && r.positivity(&p) == ConeVerdict::Positive
                && r.positivity(&q) == ConeVerdict::Positive
                && e(&r.sub(&p, &q), a)
        });
        if !ok {
            return Some(("decomposition", vec![a.clone()]));
        }
    }
    None
}

/// A formal difference `plus - minus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffPair<E> {
    pub plus: E,
    pub minus: E,
}

impl<E> DiffPair<E> {
    pub fn new(plus: E, minus: E) -> Self {
        DiffPair { plus, minus }
    }
}

/// The Grothendieck ring `A_F` of a cancellative strict semifield.
#[derive(Clone, Debug)]
pub struct GrothendieckRing<S> {
    field: S,
}

impl<S: Semifield> GrothendieckRing<S> {
    /// Refuses fields that are not strict, not of characteristic zero up to
    /// the default bound, or in which `sampling` finds a cancellation
    /// witness.
    pub fn new(field: S, sampling: &Sampling<'_, S::Elem>) -> Result<Self> {
        match characteristic(&field, DEFAULT_CHAR_BOUND)? {
            CharClass::ZeroUpTo(_) => {}
            other => {
                return Err(Error::UnsupportedCharacteristic {
                    instance: field.name(),
                    found: other.to_string(),
                })
            }
        }
        if !field.claims().strict {
            return Err(Error::Domain(format!(
                "{} is not declared strict",
                field.name()
            )));
        }
        let report = cancellativity_probe(&field, sampling)?;
        if !report.passed {
            return Err(Error::NonCancellative {
                instance: field.name(),
                report,
            });
        }
        Ok(GrothendieckRing { field })
    }

    pub fn field(&self) -> &S {
        &self.field
    }

    /// `x ↦ (x, 0)`.
    pub fn embed(&self, x: &S::Elem) -> DiffPair<S::Elem> {
        DiffPair::new(x.clone(), self.field.zero())
    }

    /// `f` with `x ~ (f, 0)`, decided by the field's subtraction.
    pub fn recognize_positive(&self, x: &DiffPair<S::Elem>) -> Positivity<S::Elem> {
        self.field.subtract(&x.plus, &x.minus)
    }

    /// `(f, 0)` or `(0, f)` when the field can subtract, else `x` itself.
    pub fn reduce(&self, x: &DiffPair<S::Elem>) -> DiffPair<S::Elem> {
        let f = &self.field;
        match f.subtract(&x.plus, &x.minus) {
            Positivity::Positive(d) => DiffPair::new(d, f.zero()),
            _ => match f.subtract(&x.minus, &x.plus) {
                Positivity::Positive(d) => DiffPair::new(f.zero(), d),
                _ => x.clone(),
            },
        }
    }
}

impl<S: Semifield> Carrier for GrothendieckRing<S> {
    type Elem = DiffPair<S::Elem>;

    fn eq(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        let f = &self.field;
        f.eq(&f.add(&x.plus, &y.minus), &f.add(&y.plus, &x.minus))
    }

    fn key(&self, x: &Self::Elem) -> Vec<u8> {
        let r = self.reduce(x);
        let f = &self.field;
        let tag = match (f.is_zero(&r.plus), f.is_zero(&r.minus)) {
            (_, true) => 0,
            (true, false) => 1,
            (false, false) => 2,
        };
        KeyWriter::new()
            .tag(tag)
            .bytes(&f.key(&r.plus))
            .bytes(&f.key(&r.minus))
            .finish()
    }

    fn render(&self, x: &Self::Elem) -> String {
        format!(
            "({}) - ({})",
            self.field.render(&x.plus),
            self.field.render(&x.minus)
        )
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        self.field.contains(&x.plus) && self.field.contains(&x.minus)
    }

    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        DiffPair::new(self.field.sample(rng), self.field.sample(rng))
    }
}

impl<S: Semifield> OrderedRing for GrothendieckRing<S> {
    fn name(&self) -> String {
        format!("grothendieck({})", self.field.name())
    }

    fn zero(&self) -> Self::Elem {
        DiffPair::new(self.field.zero(), self.field.zero())
    }

    fn one(&self) -> Self::Elem {
        self.embed(&self.field.one())
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let f = &self.field;
        DiffPair::new(f.add(&x.plus, &y.plus), f.add(&x.minus, &y.minus))
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        DiffPair::new(x.minus.clone(), x.plus.clone())
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let f = &self.field;
        let (a, b, c, d) = (&x.plus, &x.minus, &y.plus, &y.minus);
        DiffPair::new(
            f.add(&f.mul(a, c), &f.mul(b, d)),
            f.add(&f.mul(a, d), &f.mul(b, c)),
        )
    }

    fn positivity(&self, x: &Self::Elem) -> ConeVerdict {
        match self.recognize_positive(x) {
            Positivity::Positive(_) => ConeVerdict::Positive,
            Positivity::NotPositive => ConeVerdict::NotPositive,
            Positivity::Unknown => ConeVerdict::Unknown,
        }
    }

    fn invert(&self, x: &Self::Elem) -> Option<Self::Elem> {
        let f = &self.field;
        match self.reduce(x) {
            r if !f.is_zero(&r.plus) && f.is_zero(&r.minus) => Some(self.embed(&f.inv(&r.plus)?)),
            r if f.is_zero(&r.plus) && !f.is_zero(&r.minus) => {
                Some(DiffPair::new(f.zero(), f.inv(&r.minus)?))
            }
            _ => None,
        }
    }

    fn decompose(&self, x: &Self::Elem) -> Option<(Self::Elem, Self::Elem)> {
        let f = &self.field;
        let one = f.one();
        Some((
            self.embed(&f.add(&x.plus, &one)),
            self.embed(&f.add(&x.minus, &one)),
        ))
    }

    fn sample_positive(&self, rng: &mut CaseRng) -> Self::Elem {
        loop {
            let x = self.field.sample(rng);
            if !self.field.is_zero(&x) {
                return self.embed(&x);
            }
        }
    }
}

/// On sampled pairs of the source field: `x ↦ (x, 0)` preserves `+` and `×`,
/// is injective, and lands in the recognized cone with certificate `x`.
pub fn check_embedding<S: Semifield>(
    ring: &GrothendieckRing<S>,
    sampling: &Sampling<'_, S::Elem>,
) -> Result<Report> {
    let f = ring.field();
    run_cases(f, &f.name(), sampling, 2, |t| {
        let (x, y) = (&t[0], &t[1]);
        let (ex, ey) = (ring.embed(x), ring.embed(y));
        if !ring.eq(&ring.embed(&f.add(x, y)), &ring.add(&ex, &ey)) {
            return Some(("embed-additive", t.to_vec()));
        }
        if !ring.eq(&ring.embed(&f.mul(x, y)), &ring.mul(&ex, &ey)) {
            return Some(("embed-multiplicative", t.to_vec()));
        }
        if !f.eq(x, y) && ring.eq(&ex, &ey) {
            return Some(("embed-injective", t.to_vec()));
        }
        match ring.recognize_positive(&ex) {
            Positivity::Positive(c) if f.eq(&c, x) => None,
            _ => Some(("embed-positive", vec![x.clone()])),
        }
    })
}

/// Every sampled element `c` of the extracted cone comes from the source
/// field: the ring recognizes it as positive with a certificate `f` and
/// `(f, 0) ~ c`. With [`check_embedding`] this makes the embedding an
/// isomorphism onto the cone.
pub fn check_cone_recovery<S: Semifield>(
    cone: &PositiveConeSemifield<GrothendieckRing<S>>,
    sampling: &Sampling<'_, DiffPair<S::Elem>>,
) -> Result<Report> {
    let ring = cone.ring();
    run_cases(cone, &cone.name(), sampling, 1, |t| {
        match ring.recognize_positive(&t[0]) {
            Positivity::Positive(f) if ring.eq(&ring.embed(&f), &t[0]) => None,
            _ => Some(("cone-recovery", t.to_vec())),
        }
    })
}

/// `{0} ∪ {x : x positive}` of an ordered ring, with the ring's operations.
#[derive(Clone, Debug)]
pub struct PositiveConeSemifield<R> {
    ring: R,
}

impl<R: OrderedRing> PositiveConeSemifield<R> {
    /// Runs [`check_ordered_ring_axioms`] first and refuses the ring with the
    /// failing report.
    pub fn new(ring: R, sampling: &Sampling<'_, R::Elem>) -> Result<Self> {
        let report = check_ordered_ring_axioms(&ring, sampling)?;
        if !report.passed {
            return Err(Error::ConeViolation { report });
        }
        Ok(PositiveConeSemifield { ring })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }
}

impl<R: OrderedRing> Carrier for PositiveConeSemifield<R> {
    type Elem = R::Elem;

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.ring.eq(a, b)
    }

    fn key(&self, a: &Self::Elem) -> Vec<u8> {
        self.ring.key(a)
    }

    fn render(&self, a: &Self::Elem) -> String {
        self.ring.render(a)
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        self.ring.contains(a)
            && (self.ring.is_zero(a) || self.ring.positivity(a) == ConeVerdict::Positive)
    }

    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        if one_in(rng, 10) {
            self.ring.zero()
        } else {
            self.ring.sample_positive(rng)
        }
    }
}

impl<R: OrderedRing> Semifield for PositiveConeSemifield<R> {
    fn name(&self) -> String {
        format!("cone({})", self.ring.name())
    }

    fn zero(&self) -> Self::Elem {
        self.ring.zero()
    }

    fn one(&self) -> Self::Elem {
        self.ring.one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.add(a, b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.mul(a, b)
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.ring.is_zero(a) {
            None
        } else {
            self.ring.invert(a)
        }
    }

    fn claims(&self) -> Claims {
        Claims {
            characteristic: Characteristic::Zero,
            strict: true,
            cancellative: true,
        }
    }

    fn subtract(&self, a: &Self::Elem, b: &Self::Elem) -> Positivity<Self::Elem> {
        let d = self.ring.sub(a, b);
        if self.ring.is_zero(&d) {
            return Positivity::Positive(self.ring.zero());
        }
        match self.ring.positivity(&d) {
            ConeVerdict::Positive => Positivity::Positive(d),
            ConeVerdict::NotPositive => Positivity::NotPositive,
            ConeVerdict::Unknown => Positivity::Unknown,
        }
    }

    fn canonical_keys(&self) -> bool {
        false
    }
}

/// `ℚ` ordered by `x ≥ 0`.
#[derive(Clone, Copy, Debug, Default)]
pub struct RationalRing {
    everything_positive: bool,
}

impl RationalRing {
    pub fn new() -> Self {
        RationalRing::default()
    }

    /// A deliberately broken cone containing every rational.
    pub fn with_full_cone() -> Self {
        RationalRing {
            everything_positive: true,
        }
    }
}

impl Carrier for RationalRing {
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

    fn sample(&self, rng: &mut CaseRng) -> BigRational {
        sample_rational(rng)
    }
}

impl OrderedRing for RationalRing {
    fn name(&self) -> String {
        if self.everything_positive {
            "q-full-cone".into()
        } else {
            "q".into()
        }
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn positivity(&self, a: &BigRational) -> ConeVerdict {
        if self.everything_positive || !a.is_negative() {
            ConeVerdict::Positive
        } else {
            ConeVerdict::NotPositive
        }
    }

    fn invert(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn decompose(&self, a: &BigRational) -> Option<(BigRational, BigRational)> {
        let one = BigRational::one();
        if a.is_negative() {
            Some((one.clone(), &one - a))
        } else {
            Some((a + &one, one))
        }
    }

    fn sample_positive(&self, rng: &mut CaseRng) -> BigRational {
        sample_positive_rational(rng)
    }
}

/// `ℚ^k` with cone `{0} ∪ {x : every coordinate > 0}`.
#[derive(Clone, Copy, Debug)]
pub struct RationalPowerRing {
    k: usize,
}

impl RationalPowerRing {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("dimension must be at least 1".into()));
        }
        Ok(RationalPowerRing { k })
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

impl Carrier for RationalPowerRing {
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
        a.len() == self.k
    }

    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        (0..self.k).map(|_| sample_rational(rng)).collect()
    }
}

impl OrderedRing for RationalPowerRing {
    fn name(&self) -> String {
        format!("q-power:{}", self.k)
    }

    fn zero(&self) -> Self::Elem {
        vec![BigRational::zero(); self.k]
    }

    fn one(&self) -> Self::Elem {
        vec![BigRational::one(); self.k]
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.zip(a, b, |x, y| x + y)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| -x).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.zip(a, b, |x, y| x * y)
    }

    fn positivity(&self, a: &Self::Elem) -> ConeVerdict {
        if a.iter().all(Zero::is_zero) || a.iter().all(Signed::is_positive) {
            ConeVerdict::Positive
        } else {
            ConeVerdict::NotPositive
        }
    }

    fn invert(&self, a: &Self::Elem) -> Option<Self::Elem> {
        a.iter()
            .map(|x| (!x.is_zero()).then(|| x.recip()))
            .collect()
    }

    fn decompose(&self, a: &Self::Elem) -> Option<(Self::Elem, Self::Elem)> {
        let one = BigRational::one();
        let q: Vec<BigRational> = a
            .iter()
            .map(|x| {
                if x.is_negative() {
                    &one - x
                } else {
                    one.clone()
                }
            })
            .collect();
        let p = self.add(a, &q);
        Some((p, q))
    }

    fn sample_positive(&self, rng: &mut CaseRng) -> Self::Elem {
        (0..self.k).map(|_| sample_positive_rational(rng)).collect()
    }
}

/// `ℚ[ε]` ordered by the sign of the first coordinate.
#[derive(Clone, Copy, Debug, Default)]
pub struct DualNumberRing;

impl Carrier for DualNumberRing {
    type Elem = DualNumber;

    fn eq(&self, a: &DualNumber, b: &DualNumber) -> bool {
        a == b
    }

    fn key(&self, a: &DualNumber) -> Vec<u8> {
        a.key()
    }

    fn render(&self, a: &DualNumber) -> String {
        a.to_string()
    }

    fn sample(&self, rng: &mut CaseRng) -> DualNumber {
        DualNumber::new(sample_rational(rng), sample_rational(rng))
    }
}

impl OrderedRing for DualNumberRing {
    fn name(&self) -> String {
        "dual".into()
    }

    fn zero(&self) -> DualNumber {
        DualNumber::zero()
    }

    fn one(&self) -> DualNumber {
        DualNumber::one()
    }

    fn add(&self, a: &DualNumber, b: &DualNumber) -> DualNumber {
        a.add(b)
    }

    fn neg(&self, a: &DualNumber) -> DualNumber {
        a.neg()
    }

    fn mul(&self, a: &DualNumber, b: &DualNumber) -> DualNumber {
        a.mul(b)
    }

    fn positivity(&self, a: &DualNumber) -> ConeVerdict {
        if a.is_zero() || a.a.is_positive() {
            ConeVerdict::Positive
        } else {
            ConeVerdict::NotPositive
        }
    }

    fn invert(&self, a: &DualNumber) -> Option<DualNumber> {
        a.inv()
    }

    fn decompose(&self, a: &DualNumber) -> Option<(DualNumber, DualNumber)> {
        let shift = if a.a.is_positive() {
            BigRational::one()
        } else {
            BigRational::one() - &a.a
        };
        let q = DualNumber::new(shift, BigRational::zero());
        Some((a.add(&q), q))
    }

    fn sample_positive(&self, rng: &mut CaseRng) -> DualNumber {
        DualNumber::new(sample_positive_rational(rng), sample_rational(rng))
    }
}

impl fmt::Display for ConeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConeVerdict::Positive => "positive",
            ConeVerdict::NotPositive => "not positive",
            ConeVerdict::Unknown => "unknown",
        })
    }
}
