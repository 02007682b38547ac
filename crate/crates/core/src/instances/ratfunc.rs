use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::one_in;
use super::poly::{Poly, RationalFunction};
use crate::algebra::{Carrier, CaseRng, Characteristic, Claims, Literal, Positivity, Semifield};
use crate::error::{Error, Result};
use crate::rational::{KeyWriter, PositiveRational};

/// A rational function together with a representative `num/den` whose
/// coefficients are all nonnegative.
///
/// The reduced form can have negative coefficients even when the function is
/// a ratio of positive polynomials, e.g. `(X^3+1)/(X+1) = X^2-X+1`, so the
/// representative is carried separately as the membership certificate.
#[derive(Clone, Debug)]
pub struct RatFn {
    value: RationalFunction,
    rep_num: Poly,
    rep_den: Poly,
}

impl RatFn {
    /// Builds from a nonnegative representative. `den` must be nonzero.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self> {
        if !num.is_nonnegative() || !den.is_nonnegative() {
            return Err(Error::Domain(
                "representative must have nonnegative coefficients".into(),
            ));
        }
        let value = RationalFunction::new(num.clone(), den.clone())?;
        Ok(Self::certified(value, num, den))
    }

    fn certified(value: RationalFunction, num: Poly, den: Poly) -> Self {
        if value.numerator().is_nonnegative() && value.denominator().is_nonnegative() {
            let (n, d) = (value.numerator().clone(), value.denominator().clone());
            RatFn {
                value,
                rep_num: n,
                rep_den: d,
            }
        } else {
            let (rep_num, rep_den) = strip_content(num, den);
            RatFn {
                value,
                rep_num,
                rep_den,
            }
        }
    }

    pub fn value(&self) -> &RationalFunction {
        &self.value
    }

    pub fn representative(&self) -> (&Poly, &Poly) {
        (&self.rep_num, &self.rep_den)
    }

    pub fn constant(c: BigRational) -> Result<Self> {
        Self::from_parts(Poly::constant(c), Poly::one())
    }

    pub fn x() -> Self {
        Self::from_parts(Poly::x(), Poly::one()).expect("X is positive")
    }
}

/// Divides both polynomials by a common positive integer content.
fn strip_content(num: Poly, den: Poly) -> (Poly, Poly) {
    let all: Vec<&BigRational> = num.coeffs().iter().chain(den.coeffs()).collect();
    let lcm = all.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let content = all.iter().fold(BigInt::zero(), |acc, c| {
        acc.gcd(&(c.numer() * (&lcm / c.denom())))
    });
    if content.is_zero() {
        return (num, den);
    }
    let factor = BigRational::new(lcm, content);
    (num.scale(&factor), den.scale(&factor))
}

/// `{0} ∪ {p/q : p, q ∈ ℚ≥0[X] nonzero}` with the operations of ℚ(X).
#[derive(Clone, Copy, Debug, Default)]
pub struct PositiveRationalFunctions;

fn sample_poly(rng: &mut CaseRng) -> Poly {
    loop {
        let deg = rng.random_range(0..=2);
        let p = Poly::from_ints(
            &(0..=deg)
                .map(|_| rng.random_range(0..=3))
                .collect::<Vec<i64>>(),
        );
        if !p.is_zero() {
            return p;
        }
    }
}

impl Carrier for PositiveRationalFunctions {
    type Elem = RatFn;

    fn eq(&self, a: &RatFn, b: &RatFn) -> bool {
        a.value == b.value
    }

    fn key(&self, a: &RatFn) -> Vec<u8> {
        let mut w = KeyWriter::new();
        a.value.write_key(&mut w);
        w.finish()
    }

    fn render(&self, a: &RatFn) -> String {
        if a.rep_den.is_one_poly() {
            a.rep_num.to_string()
        } else {
            format!("({})/({})", a.rep_num, a.rep_den)
        }
    }

    fn contains(&self, a: &RatFn) -> bool {
        a.rep_num.is_nonnegative()
            && a.rep_den.is_nonnegative()
            && RationalFunction::new(a.rep_num.clone(), a.rep_den.clone())
                .is_ok_and(|v| v == a.value)
    }

    fn sample(&self, rng: &mut CaseRng) -> RatFn {
        if one_in(rng, 10) {
            return self.zero();
        }
        if one_in(rng, 10) {
            return self.one();
        }
        let num = sample_poly(rng);
        let den = if rng.random() {
            Poly::one()
        } else {
            sample_poly(rng)
        };
        RatFn::from_parts(num, den).expect("sampled polynomials are nonnegative")
    }
}

impl Literal for PositiveRationalFunctions {
    /// Expressions in `X` built from nonnegative integers with `+`, `*`,
    /// `/`, `^` and parentheses, e.g. `(X^2+1)/(2*X)`.
    fn parse(&self, s: &str) -> Result<RatFn> {
        let (num, den) = expr::parse(s)?;
        RatFn::from_parts(num, den)
    }
}

impl Semifield for PositiveRationalFunctions {
    fn name(&self) -> String {
        "pos-rational-functions".into()
    }

    fn zero(&self) -> RatFn {
        RatFn {
            value: RationalFunction::zero(),
            rep_num: Poly::zero(),
            rep_den: Poly::one(),
        }
    }

    fn one(&self) -> RatFn {
        RatFn::constant(BigRational::one()).expect("1 is positive")
    }

    fn add(&self, a: &RatFn, b: &RatFn) -> RatFn {
        if a.value.is_zero() {
            return b.clone();
        }
        if b.value.is_zero() {
            return a.clone();
        }
        let num = a.rep_num.mul(&b.rep_den).add(&b.rep_num.mul(&a.rep_den));
        let den = a.rep_den.mul(&b.rep_den);
        RatFn::certified(a.value.add(&b.value), num, den)
    }

    fn mul(&self, a: &RatFn, b: &RatFn) -> RatFn {
        if a.value.is_zero() || b.value.is_zero() {
            return self.zero();
        }
        let num = a.rep_num.mul(&b.rep_num);
        let den = a.rep_den.mul(&b.rep_den);
        RatFn::certified(a.value.mul(&b.value), num, den)
    }

    fn inv(&self, a: &RatFn) -> Option<RatFn> {
        let value = a.value.inv()?;
        Some(RatFn::certified(
            value,
            a.rep_den.clone(),
            a.rep_num.clone(),
        ))
    }

    fn claims(&self) -> Claims {
        Claims {
            characteristic: Characteristic::Zero,
            strict: true,
            cancellative: true,
        }
    }

    fn ratio_as_rational(&self, x: &RatFn, y: &RatFn) -> Result<Option<PositiveRational>> {
        if x.value.is_zero() || y.value.is_zero() {
            return Err(Error::Domain("ratio of zero".into()));
        }
        y.value
            .ratio_from(&x.value)
            .map(PositiveRational::from_rational)
            .transpose()
    }

    /// Only the trivial cases are decided: coefficient positivity of an
    /// arbitrary difference is out of reach here.
    fn subtract(&self, a: &RatFn, b: &RatFn) -> Positivity<RatFn> {
        if b.value.is_zero() {
            Positivity::Positive(a.clone())
        } else if a.value == b.value {
            Positivity::Positive(self.zero())
        } else {
            Positivity::Unknown
        }
    }
}

mod expr {
    //! Recursive-descent evaluation into pairs of nonnegative polynomials.

    use num_rational::BigRational;
    use num_traits::Zero;

    use super::Poly;
    use crate::error::{Error, Result};

    type Frac = (Poly, Poly);

    struct Parser<'a> {
        src: &'a str,
        chars: Vec<char>,
        pos: usize,
    }

    pub(super) fn parse(src: &str) -> Result<Frac> {
        let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { src, chars, pos: 0 };
        let v = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }

    impl Parser<'_> {
        fn err(&self, reason: &str) -> Error {
            Error::parse(self.src, format!("{reason} at offset {}", self.pos))
        }

        fn peek(&self) -> Option<char> {
            self.chars.get(self.pos).copied()
        }

        fn eat(&mut self, c: char) -> bool {
            if self.peek() == Some(c) {
                self.pos += 1;
                true
            } else {
                false
            }
        }

        fn expr(&mut self) -> Result<Frac> {
            let mut acc = self.term()?;
            while self.eat('+') {
                let t = self.term()?;
                acc = (acc.0.mul(&t.1).add(&t.0.mul(&acc.1)), acc.1.mul(&t.1));
            }
            Ok(acc)
        }

        fn term(&mut self) -> Result<Frac> {
            let mut acc = self.factor()?;
            loop {
                if self.eat('*') {
                    let f = self.factor()?;
                    acc = (acc.0.mul(&f.0), acc.1.mul(&f.1));
                } else if self.eat('/') {
                    let f = self.factor()?;
                    if f.0.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = (acc.0.mul(&f.1), acc.1.mul(&f.0));
                } else {
                    return Ok(acc);
                }
            }
        }

        fn factor(&mut self) -> Result<Frac> {
            let base = self.atom()?;
            if !self.eat('^') {
                return Ok(base);
            }
            let negative = self.eat('-');
            let e = self.digits()?;
            let e: u32 = e.parse().map_err(|_| self.err("exponent too large"))?;
            let powered = (base.0.pow(e), base.1.pow(e));
            if negative {
                if powered.0.is_zero() {
                    return Err(self.err("division by zero"));
                }
                Ok((powered.1, powered.0))
            } else {
                Ok(powered)
            }
        }

        fn atom(&mut self) -> Result<Frac> {
            match self.peek() {
                Some('X' | 'x') => {
                    self.pos += 1;
                    Ok((Poly::x(), Poly::one()))
                }
                Some('(') => {
                    self.pos += 1;
                    let v = self.expr()?;
                    if !self.eat(')') {
                        return Err(self.err("expected `)`"));
                    }
                    Ok(v)
                }
                Some(c) if c.is_ascii_digit() => {
                    let d = self.digits()?;
                    let n: num_bigint::BigInt = d.parse().map_err(|_| self.err("bad number"))?;
                    let c = BigRational::from_integer(n);
                    Ok((
                        if c.is_zero() {
                            Poly::zero()
                        } else {
                            Poly::constant(c)
                        },
                        Poly::one(),
                    ))
                }
                _ => Err(self.err("expected a number, X or `(`")),
            }
        }

        fn digits(&mut self) -> Result<String> {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected digits"));
            }
            Ok(self.chars[start..self.pos].iter().collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFn {
        PositiveRationalFunctions.parse(s).unwrap()
    }

    #[test]
    fn equality_is_cross_multiplication() {
        let f = PositiveRationalFunctions;
        assert!(f.eq(&rf("(2*X+2)/(X+1)"), &rf("2")));
        assert!(f.eq(&rf("(X^3+1)/(X+1)"), &rf("(X^4+X)/(X^2+X)")));
        assert!(!f.eq(&rf("X"), &rf("X+1")));
    }

    #[test]
    fn certificate_survives_negative_reduced_form() {
        let f = PositiveRationalFunctions;
        let a = rf("(X^3+1)/(X+1)");
        assert!(!a.value().numerator().is_nonnegative());
        assert!(f.contains(&a));
        let back = f.parse(&f.render(&a)).unwrap();
        assert!(f.eq(&a, &back));
        let ai = f.inv(&a).unwrap();
        assert!(f.contains(&ai));
        assert!(f.eq(&f.mul(&a, &ai), &f.one()));
    }

    #[test]
    fn ratio_examples() {
        let f = PositiveRationalFunctions;
        let third_half = PositiveRational::new(3, 2).unwrap();
        assert_eq!(
            f.ratio_as_rational(&rf("2*X"), &rf("3*X")).unwrap(),
            Some(third_half)
        );
        assert_eq!(f.ratio_as_rational(&rf("X"), &rf("X+1")).unwrap(), None);
        assert!(f.ratio_as_rational(&rf("0"), &rf("X")).is_err());
    }

    #[test]
    fn parser_errors() {
        let f = PositiveRationalFunctions;
        assert!(f.parse("X-1").is_err());
        assert!(f.parse("1/0").is_err());
        assert!(f.parse("(X+1").is_err());
        assert!(f.parse("X^-1").is_ok());
        assert!(f.parse("0^-1").is_err());
    }

    #[test]
    fn renders_parse_back() {
        let f = PositiveRationalFunctions;
        for s in ["X+1", "2*X", "3", "(X^2+1)/(2*X)", "0"] {
            assert_eq!(f.render(&rf(s)), s);
        }
    }
}
