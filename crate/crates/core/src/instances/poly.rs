//! Dense univariate polynomials over ℚ and reduced rational functions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rational_string, KeyWriter};

/// Coefficients in ascending degree; empty for zero, otherwise the last
/// coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Every coefficient is `≥ 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let zero = BigRational::zero();
        Poly::from_coeffs(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + o.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let len = self.coeffs.len() + o.coeffs.len() - 1;
        if let (Some(x), Some(y)) = (self.integer_coeffs(), o.integer_coeffs()) {
            // Integer convolution avoids a gcd per product.
            let mut out = vec![BigInt::zero(); len];
            for (i, a) in x.iter().enumerate() {
                for (j, b) in y.iter().enumerate() {
                    out[i + j] += *a * *b;
                }
            }
            return Poly::from_coeffs(out.into_iter().map(BigRational::from_integer).collect());
        }
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    fn integer_coeffs(&self) -> Option<Vec<&BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.numer()))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_one() {
            return self.clone();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division; `d` must be nonzero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * dc;
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic greatest common divisor (zero when both are zero).
    ///
    /// Each remainder is replaced by its primitive part, which keeps
    /// coefficient growth in check.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return Poly::one();
        }
        let (mut a, mut b) = (a.primitive(), b.primitive());
        if coprime_mod_prime(&a, &b) {
            return Poly::one();
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Poly::one();
            }
            let r = a.div_rem(&b).1.primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The integer multiple with coprime coefficients and positive leading
    /// coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut factor = content_factor(&self.coeffs);
        if self.leading().unwrap().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub(crate) fn is_one_poly(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// `Some(c)` with `self = c·other`, for nonzero `other`.
    pub fn proportional_to(&self, other: &Poly) -> Option<BigRational> {
        if self.degree() != other.degree() {
            return None;
        }
        let c = self.leading()? / other.leading()?;
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| *a == &c * b)
            .then_some(c)
    }

    pub(crate) fn write_key(&self, w: &mut KeyWriter) {
        w.bytes(&(self.coeffs.len() as u64).to_be_bytes());
        for c in &self.coeffs {
            w.rational(c);
        }
    }
}

const MODULUS: u64 = (1 << 61) - 1;

/// `lcm(denominators) / content`, the positive factor that makes the
/// coefficients coprime integers.
fn content_factor(coeffs: &[BigRational]) -> BigRational {
    let mut lcm = BigInt::one();
    for c in coeffs {
        if !c.denom().is_one() {
            lcm = lcm.lcm(c.denom());
        }
    }
    let mut content = BigInt::zero();
    for c in coeffs {
        let n = if c.denom().is_one() {
            c.numer() * &lcm
        } else {
            c.numer() * (&lcm / c.denom())
        };
        content = content.gcd(&n);
        if content.is_one() {
            break;
        }
    }
    BigRational::new(lcm, content)
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    r
}

/// Images mod `2^61 - 1` of integer polynomials, lowest degree first.
fn reduce_mod(p: &Poly) -> Vec<u64> {
    let m = BigInt::from(MODULUS);
    p.coeffs
        .iter()
        .map(|c| {
            let r = c.numer().mod_floor(&m);
            r.iter_u64_digits().next().unwrap_or(0)
        })
        .collect()
}

/// Sufficient test for `gcd(a, b) = 1` on primitive integer polynomials.
///
/// When the prime divides neither leading coefficient, a common factor over
/// `ℤ` survives reduction with its degree intact, so coprime images imply
/// coprime inputs. `false` means "undecided".
fn coprime_mod_prime(a: &Poly, b: &Poly) -> bool {
    let (mut x, mut y) = (reduce_mod(a), reduce_mod(b));
    if x.last() == Some(&0) || y.last() == Some(&0) {
        return false;
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    while !y.is_empty() {
        if y.len() == 1 {
            return true;
        }
        let inv = powmod(*y.last().unwrap(), MODULUS - 2);
        while x.len() >= y.len() {
            let shift = x.len() - y.len();
            let c = mulmod(*x.last().unwrap(), inv);
            for (i, &yc) in y.iter().enumerate() {
                let t = mulmod(c, yc);
                x[shift + i] = (x[shift + i] + MODULUS - t) % MODULUS;
            }
            x.pop();
            trim(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
    }
    false
}

impl fmt::Display for Poly {
    /// Descending degree, `2*X^2+X+1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let a = c.abs();
            let x = match d {
                0 => String::new(),
                1 => "X".into(),
                _ => format!("X^{d}"),
            };
            match (d, a.is_one()) {
                (0, _) => write!(f, "{}", rational_string(&a))?,
                (_, true) => write!(f, "{x}")?,
                (_, false) => write!(f, "{}*{x}", rational_string(&a))?,
            }
        }
        Ok(())
    }
}

/// A rational function `num/den` in canonical form: coprime, integer
/// coefficients with joint content 1, leading coefficient of `den` positive.
/// Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain(
                "rational function with zero denominator".into(),
            ));
        }
        Ok(Self::canonical(num, den))
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::canonical(p, Poly::one())
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = Poly::gcd(&num, &den);
        if g.is_one_poly() {
            return Self::normalized(num, den);
        }
        Self::normalized(num.div_rem(&g).0, den.div_rem(&g).0)
    }

    /// Scales coprime `num/den` to integer coefficients with joint content 1
    /// and positive leading denominator coefficient.
    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let all: Vec<BigRational> = num.coeffs.iter().chain(&den.coeffs).cloned().collect();
        let mut factor = content_factor(&all);
        if den.leading().unwrap().is_negative() {
            factor = -factor;
        }
        RationalFunction {
            num: num.scale(&factor),
            den: den.scale(&factor),
        }
    }

    /// Drops the common factor of `a` and `b`.
    fn cancel(a: &Poly, b: &Poly) -> (Poly, Poly) {
        let g = Poly::gcd(a, b);
        if g.is_one_poly() {
            (a.clone(), b.clone())
        } else {
            (a.div_rem(&g).0, b.div_rem(&g).0)
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let g = Poly::gcd(&self.den, &o.den);
        if g.is_one_poly() {
            // Coprime denominators leave nothing to cancel.
            return Self::normalized(
                self.num.mul(&o.den).add(&o.num.mul(&self.den)),
                self.den.mul(&o.den),
            );
        }
        let (b, d) = (self.den.div_rem(&g).0, o.den.div_rem(&g).0);
        let num = self.num.mul(&d).add(&o.num.mul(&b));
        let (num, g2) = Self::cancel(&num, &g);
        Self::normalized(num, b.mul(&d).mul(&g2))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::canonical(
            self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let (a, d) = Self::cancel(&self.num, &o.den);
        let (c, b) = Self::cancel(&o.num, &self.den);
        Self::normalized(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::normalized(self.den.clone(), self.num.clone()))
    }

    /// The value when `self` is a constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        (self.num.degree() == Some(0) && self.den.degree() == Some(0))
            .then(|| self.num.leading().unwrap() / self.den.leading().unwrap())
    }

    /// `Some(c)` with `self = c·other`, both nonzero.
    ///
    /// Canonical forms of proportional functions have proportional numerators
    /// and proportional denominators, so no division is needed.
    pub fn ratio_from(&self, other: &Self) -> Option<BigRational> {
        let dn = self.den.proportional_to(&other.den)?;
        let nn = self.num.proportional_to(&other.num)?;
        Some(nn / dn)
    }

    pub(crate) fn write_key(&self, w: &mut KeyWriter) {
        self.num.write_key(w);
        self.den.write_key(w);
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
