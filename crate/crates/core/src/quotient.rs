//! Formal sums and their fractions.
//!
//! For a strict semifield `F` of characteristic zero, `L_F` is the semiring
//! of finite formal sums of nonzero elements modulo `[x] + [θx] = [(1+θ)x]`
//! for `θ ∈ ℚ⁺`. It is additively cancellative, and its fractions form a
//! cancellative semifield `Q(F)` mapping onto `F` by
//! `φ(n / d) = (Σn)(Σd)⁻¹`.

use num_rational::BigRational;
use num_traits::Signed;

use crate::algebra::{Carrier, CaseRng, CharClass, Characteristic, Claims, Semifield};
use crate::axioms::{characteristic, rational_image, DEFAULT_CHAR_BOUND};
use crate::check::{run_cases, Report, Sampling};
use crate::error::{Error, Result};
use crate::instances::{
    one_in, LeadingTerm, LeadingTermSemifield, PositiveRationalFunctions, RatFn,
};
use crate::rational::{KeyWriter, PositiveRational};

/// A normal-form element of `L_F`: nonzero terms, no two with a rational
/// ratio, sorted by key. The empty sum is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum<E> {
    terms: Vec<E>,
}

impl<E> FormalSum<E> {
    pub fn terms(&self) -> &[E] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The semiring `L_F`.
#[derive(Clone, Debug)]
pub struct FormalSums<S> {
    field: S,
}

impl<S: Semifield> FormalSums<S> {
    /// Requires characteristic zero (up to the default bound), a strict
    /// claim, and the rational-ratio capability.
    pub fn new(field: S) -> Result<Self> {
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
        let one = field.one();
        field.ratio_as_rational(&one, &one)?;
        Ok(FormalSums { field })
    }

    pub fn field(&self) -> &S {
        &self.field
    }

    /// `θ` with `y = θ·x` for nonzero `x`, `y`.
    pub fn ratio(&self, x: &S::Elem, y: &S::Elem) -> Option<PositiveRational> {
        self.field
            .ratio_as_rational(x, y)
            .expect("capability checked at construction, terms nonzero")
    }

    /// Drops zeros, merges each rational-ratio class into one term and sorts
    /// by key.
    pub fn normalize(&self, terms: &[S::Elem]) -> FormalSum<S::Elem> {
        let f = &self.field;
        let mut out: Vec<S::Elem> = Vec::new();
        for x in terms.iter().filter(|x| !f.is_zero(x)) {
            let hit = out
                .iter()
                .enumerate()
                .find_map(|(i, r)| self.ratio(r, x).map(|theta| (i, theta)));
            match hit {
                Some((i, theta)) => {
                    let scale = rational_image(f, &theta.add(&PositiveRational::one()))
                        .expect("characteristic zero");
                    out[i] = f.mul(&scale, &out[i]);
                }
                None => out.push(x.clone()),
            }
        }
        let mut keyed: Vec<(Vec<u8>, S::Elem)> = out.into_iter().map(|t| (f.key(&t), t)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        FormalSum {
            terms: keyed.into_iter().map(|(_, t)| t).collect(),
        }
    }

    pub fn zero(&self) -> FormalSum<S::Elem> {
        FormalSum { terms: Vec::new() }
    }

    /// `[x]`.
    pub fn single(&self, x: &S::Elem) -> FormalSum<S::Elem> {
        self.normalize(std::slice::from_ref(x))
    }

    pub fn one(&self) -> FormalSum<S::Elem> {
        self.single(&self.field.one())
    }

    pub fn add(&self, u: &FormalSum<S::Elem>, v: &FormalSum<S::Elem>) -> FormalSum<S::Elem> {
        let all: Vec<S::Elem> = u.terms.iter().chain(&v.terms).cloned().collect();
        self.normalize(&all)
    }

    pub fn mul(&self, u: &FormalSum<S::Elem>, v: &FormalSum<S::Elem>) -> FormalSum<S::Elem> {
        let f = &self.field;
        let products: Vec<S::Elem> = u
            .terms
            .iter()
            .flat_map(|x| v.terms.iter().map(move |y| f.mul(x, y)))
            .collect();
        self.normalize(&products)
    }

    pub fn eq(&self, u: &FormalSum<S::Elem>, v: &FormalSum<S::Elem>) -> bool {
        u.terms.len() == v.terms.len()
            && u.terms
                .iter()
                .zip(&v.terms)
                .all(|(a, b)| self.field.eq(a, b))
    }

    pub fn keys(&self, u: &FormalSum<S::Elem>) -> Vec<Vec<u8>> {
        u.terms.iter().map(|t| self.field.key(t)).collect()
    }

    /// The sum in `F` of the terms.
    pub fn evaluate(&self, u: &FormalSum<S::Elem>) -> S::Elem {
        let f = &self.field;
        u.terms.iter().fold(f.zero(), |acc, t| f.add(&acc, t))
    }

    /// `[t1 + t2 + ...]` in the field's literal syntax, compound literals
    /// parenthesized.
    pub fn render(&self, u: &FormalSum<S::Elem>) -> String {
        let parts: Vec<String> = u
            .terms
            .iter()
            .map(|t| {
                let r = self.field.render(t);
                if r.char_indices()
                    .skip(1)
                    .any(|(i, c)| c == '+' || (c == '-' && !r[..i].ends_with('^')))
                {
                    format!("({r})")
                } else {
                    r
                }
            })
            .collect();
        format!("[{}]", parts.join(" + "))
    }

    /// One or two nonzero sampled terms, normalized.
    pub fn sample_nonzero(&self, rng: &mut CaseRng) -> FormalSum<S::Elem> {
        let f = &self.field;
        let count = 1 + usize::from(one_in(rng, 2));
        let mut terms = Vec::with_capacity(count);
        while terms.len() < count {
            let x = f.sample(rng);
            if !f.is_zero(&x) {
                terms.push(x);
            }
        }
        self.normalize(&terms)
    }
}

/// `num / den` with `den` nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumFraction<E> {
    pub num: FormalSum<E>,
    pub den: FormalSum<E>,
}

/// The semifield `Q(F)` of fractions of `L_F`.
#[derive(Clone, Debug)]
pub struct FractionSemifield<S> {
    sums: FormalSums<S>,
}

impl<S: Semifield> FractionSemifield<S> {
    pub fn new(field: S) -> Result<Self> {
        Ok(FractionSemifield {
            sums: FormalSums::new(field)?,
        })
    }

    pub fn sums(&self) -> &FormalSums<S> {
        &self.sums
    }

    pub fn field(&self) -> &S {
        self.sums.field()
    }

    pub fn make(
        &self,
        num: FormalSum<S::Elem>,
        den: FormalSum<S::Elem>,
    ) -> Result<SumFraction<S::Elem>> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(SumFraction { num, den })
    }

    /// `[x] / [1]`.
    pub fn embed(&self, x: &S::Elem) -> SumFraction<S::Elem> {
        SumFraction {
            num: self.sums.single(x),
            den: self.sums.one(),
        }
    }

    /// Cross-multiplication, then the same with each nonzero part of either
    /// fraction as an extra multiplier.
    ///
    /// Fractions with different images under [`phi`](Self::phi) are rejected
    /// before any multiplication in `L_F`: evaluation is a semiring map, so
    /// `n₁d₂t = n₂d₁t` forces `φ(a) = φ(b)`.
    pub fn fraction_eq(&self, a: &SumFraction<S::Elem>, b: &SumFraction<S::Elem>) -> bool {
        let l = &self.sums;
        if !self.field().eq(&self.phi(a), &self.phi(b)) {
            return false;
        }
        let left = l.mul(&a.num, &b.den);
        let right = l.mul(&b.num, &a.den);
        if l.eq(&left, &right) {
            return true;
        }
        [&a.num, &b.num, &a.den, &b.den]
            .into_iter()
            .filter(|t| !t.is_zero())
            .any(|t| l.eq(&l.mul(&left, t), &l.mul(&right, t)))
    }

    /// `n₁d₂ = n₂d₁` without saturation.
    pub fn plain_cross_eq(&self, a: &SumFraction<S::Elem>, b: &SumFraction<S::Elem>) -> bool {
        let l = &self.sums;
        l.eq(&l.mul(&a.num, &b.den), &l.mul(&b.num, &a.den))
    }

    pub fn try_inv(&self, a: &SumFraction<S::Elem>) -> Result<SumFraction<S::Elem>> {
        if a.num.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        Ok(SumFraction {
            num: a.den.clone(),
            den: a.num.clone(),
        })
    }

    /// `φ(n / d) = (Σn)·(Σd)⁻¹` in `F`.
    pub fn phi(&self, a: &SumFraction<S::Elem>) -> S::Elem {
        let f = self.field();
        let d = f
            .inv(&self.sums.evaluate(&a.den))
            .expect("denominators are nonzero sums in a strict semifield");
        f.mul(&self.sums.evaluate(&a.num), &d)
    }
}

impl<S: Semifield> Carrier for FractionSemifield<S> {
    type Elem = SumFraction<S::Elem>;

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.fraction_eq(a, b)
    }

    /// Key of the representation; equal fractions may have different keys.
    fn key(&self, a: &Self::Elem) -> Vec<u8> {
        let mut w = KeyWriter::new();
        for part in [&a.num, &a.den] {
            w.tag(part.len() as u8);
            for k in self.sums.keys(part) {
                w.bytes(&k);
            }
        }
        w.finish()
    }

    fn render(&self, a: &Self::Elem) -> String {
        format!(
            "{} / {}",
            self.sums.render(&a.num),
            self.sums.render(&a.den)
        )
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        let f = self.field();
        !a.den.is_zero()
            && a.num
                .terms
                .iter()
                .chain(&a.den.terms)
                .all(|t| f.contains(t) && !f.is_zero(t))
    }

    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        let num = if one_in(rng, 10) {
            self.sums.zero()
        } else {
            self.sums.sample_nonzero(rng)
        };
        let den = if one_in(rng, 2) {
            self.sums.one()
        } else {
            self.sums.sample_nonzero(rng)
        };
        SumFraction { num, den }
    }
}

impl<S: Semifield> Semifield for FractionSemifield<S> {
    fn name(&self) -> String {
        format!("quotient({})", self.field().name())
    }

    fn zero(&self) -> Self::Elem {
        SumFraction {
            num: self.sums.zero(),
            den: self.sums.one(),
        }
    }

    fn one(&self) -> Self::Elem {
        SumFraction {
            num: self.sums.one(),
            den: self.sums.one(),
        }
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let l = &self.sums;
        SumFraction {
            num: l.add(&l.mul(&a.num, &b.den), &l.mul(&b.num, &a.den)),
            den: l.mul(&a.den, &b.den),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let l = &self.sums;
        SumFraction {
            num: l.mul(&a.num, &b.num),
            den: l.mul(&a.den, &b.den),
        }
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.try_inv(a).ok()
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_zero()
    }

    fn claims(&self) -> Claims {
        Claims {
            characteristic: Characteristic::Zero,
            strict: true,
            cancellative: true,
        }
    }

    fn canonical_keys(&self) -> bool {
        false
    }
}

/// `φ(u + v) = φ(u) + φ(v)` and `φ(uv) = φ(u)φ(v)` on sampled pairs of
/// `Q(F)`, with `φ(1) = 1` checked up front.
pub fn check_phi<S: Semifield>(
    qf: &FractionSemifield<S>,
    sampling: &Sampling<'_, SumFraction<S::Elem>>,
) -> Result<Report> {
    let f = qf.field();
    if !f.eq(&qf.phi(&qf.one()), &f.one()) {
        return Ok(Report::fail(0, "phi-one", vec![qf.render(&qf.one())]));
    }
    run_cases(qf, &qf.name(), sampling, 2, |t| {
        let (u, v) = (&t[0], &t[1]);
        if !f.eq(&qf.phi(&qf.add(u, v)), &f.add(&qf.phi(u), &qf.phi(v))) {
            return Some(("phi-additive", t.to_vec()));
        }
        if !f.eq(&qf.phi(&qf.mul(u, v)), &f.mul(&qf.phi(u), &qf.phi(v))) {
            return Some(("phi-multiplicative", t.to_vec()));
        }
        None
    })
}

/// `φ([x] / [1]) = x` on sampled elements of `F`.
pub fn check_retraction<S: Semifield>(
    qf: &FractionSemifield<S>,
    sampling: &Sampling<'_, S::Elem>,
) -> Result<Report> {
    let f = qf.field();
    run_cases(f, &f.name(), sampling, 1, |t| {
        (!f.eq(&qf.phi(&qf.embed(&t[0])), &t[0])).then(|| ("phi-retraction", t.to_vec()))
    })
}

/// Additivity and multiplicativity of [`leading_term_hom`] on sampled pairs.
pub fn check_leading_term_hom(sampling: &Sampling<'_, RatFn>) -> Result<Report> {
    let f = PositiveRationalFunctions;
    let lt = LeadingTermSemifield;
    run_cases(&f, &f.name(), sampling, 2, |t| {
        let (a, b) = (&t[0], &t[1]);
        let (ha, hb) = (leading_term_hom(a), leading_term_hom(b));
        if !lt.eq(&leading_term_hom(&f.add(a, b)), &lt.add(&ha, &hb)) {
            return Some(("hom-additive", t.to_vec()));
        }
        if !lt.eq(&leading_term_hom(&f.mul(a, b)), &lt.mul(&ha, &hb)) {
            return Some(("hom-multiplicative", t.to_vec()));
        }
        None
    })
}

/// `p/q ↦ (lc p / lc q)·X^(deg p − deg q)`, with `0 ↦ 0`.
pub fn leading_term_hom(x: &RatFn) -> Option<LeadingTerm> {
    let v = x.value();
    let (p, q) = (v.numerator(), v.denominator());
    let (lp, lq) = (p.leading()?, q.leading()?);
    let coeff: BigRational = lp / lq;
    debug_assert!(coeff.is_positive());
    let k = p.degree()? as i64 - q.degree()? as i64;
    Some(LeadingTerm {
        q: coeff,
        k: k.into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Literal;
    use crate::instances::{PositiveRationals, TropicalIntegers};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn merges_rational_multiples() {
        let l = FormalSums::new(PositiveRationals).unwrap();
        assert_eq!(l.normalize(&[q(2), q(3)]).terms(), &[q(5)]);
    }

    #[test]
    fn function_sums() {
        let f = PositiveRationalFunctions;
        let l = FormalSums::new(f).unwrap();
        let p = |s: &str| f.parse(s).unwrap();
        let r = |u: &FormalSum<RatFn>| l.render(u);
        assert_eq!(
            r(&l.normalize(&[p("X"), p("1")])),
            r(&l.normalize(&[p("1"), p("X")]))
        );
        assert_eq!(l.normalize(&[p("X"), p("1")]).len(), 2);
        let merged = l.normalize(&[p("X"), p("2*X"), p("1")]);
        assert!(l.eq(&merged, &l.normalize(&[p("3*X"), p("1")])));
        let a = l.normalize(&[p("1"), p("X")]);
        assert!(l.eq(
            &l.add(&a, &l.single(&p("X"))),
            &l.normalize(&[p("1"), p("2*X")])
        ));
        assert!(l.eq(&l.mul(&a, &a), &l.normalize(&[p("1"), p("2*X"), p("X^2")])));
        assert!(l.eq(&l.add(&a, &l.zero()), &a));
    }

    #[test]
    fn fractions() {
        let f = PositiveRationalFunctions;
        let qf = FractionSemifield::new(f).unwrap();
        let l = qf.sums();
        let p = |s: &str| f.parse(s).unwrap();
        let a = qf
            .make(l.normalize(&[p("1"), p("X")]), l.single(&p("X")))
            .unwrap();
        let ai = qf.inv(&a).unwrap();
        assert!(l.eq(&ai.num, &a.den) && l.eq(&ai.den, &a.num));
        assert!(f.eq(&qf.phi(&a), &p("(1+X)/X")));
        let two = qf.add(&qf.one(), &qf.one());
        assert!(qf.eq(&two, &qf.embed(&p("2"))));
        let b = qf.make(l.single(&p("2*X")), l.single(&p("X"))).unwrap();
        assert!(qf.eq(&b, &qf.embed(&p("2"))));
        assert!(qf.make(l.one(), l.zero()).is_err());
        assert!(qf.try_inv(&qf.zero()).is_err());
    }

    #[test]
    fn leading_term_collapse() {
        let f = LeadingTermSemifield;
        let qf = FractionSemifield::new(f).unwrap();
        let l = qf.sums();
        let p = |s: &str| f.parse(s).unwrap();
        let a = qf.make(l.normalize(&[p("1"), p("X")]), l.one()).unwrap();
        let b = qf.make(l.single(&p("X")), l.one()).unwrap();
        assert!(!qf.eq(&a, &b));
        assert!(f.eq(&qf.phi(&a), &qf.phi(&b)));
        assert!(f.eq(&qf.phi(&a), &p("X")));
    }

    #[test]
    fn guards() {
        assert!(matches!(
            FormalSums::new(TropicalIntegers),
            Err(Error::UnsupportedCharacteristic { .. })
        ));
        assert!(matches!(
            FormalSums::new(crate::instances::RationalPower::new(2).unwrap()),
            Err(Error::CapabilityMissing { .. })
        ));
    }

    #[test]
    fn leading_term_spot_values() {
        let f = PositiveRationalFunctions;
        let lt = LeadingTermSemifield;
        let hom = |s: &str| leading_term_hom(&f.parse(s).unwrap());
        assert!(lt.eq(&hom("(X^2+1)/(2*X)"), &lt.parse("1/2*X").unwrap()));
        assert!(lt.eq(&hom("3"), &lt.parse("3").unwrap()));
        assert_eq!(hom("0"), None);
    }
}
