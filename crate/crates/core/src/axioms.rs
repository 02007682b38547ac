//! Axiom suite, characteristic detection, torsion and cancellation probes,
//! and the action of the positive rationals on a semifield.

use num_bigint::BigUint;

use crate::algebra::{require_nonzero, CharClass, Semifield};
use crate::check::{case_rng, run_cases, Report, Sampling, Violation};
use crate::error::{Error, Result};
use crate::rational::PositiveRational;

pub const DEFAULT_CHAR_BOUND: u64 = 64;

/// Checks the semifield axioms on sampled triples `(a, b, c)`.
///
/// Covered: associativity and commutativity of `+` with neutral `0`;
/// associativity of `×` with neutral `1`; closure of the nonzero elements
/// under `×`; two-sided inverses of nonzero elements (and none at `0`);
/// left and right distributivity; `0` absorbing. Instances claiming to be
/// strict additionally must not produce `a + b = 0` from nonzero `a`, `b`.
pub fn check_semifield_axioms<S: Semifield>(
    f: &S,
    sampling: &Sampling<'_, S::Elem>,
) -> Result<Report> {
    let zero = f.zero();
    let one = f.one();
    if f.eq(&zero, &one) {
        return Ok(Report::fail(
            0,
            "zero-ne-one",
            vec![f.render(&zero), f.render(&one)],
        ));
    }
    let strict = f.claims().strict;
    run_cases(f, &f.name(), sampling, 3, |t| {
        axiom_violation(f, &zero, &one, strict, &t[0], &t[1], &t[2])
    })
}

fn axiom_violation<S: Semifield>(
    f: &S,
    zero: &S::Elem,
    one: &S::Elem,
    strict: bool,
    a: &S::Elem,
    b: &S::Elem,
    c: &S::Elem,
) -> Option<Violation<S::Elem>> {
    let e = |x: &S::Elem, y: &S::Elem| f.eq(x, y);
    let abc = || vec![a.clone(), b.clone(), c.clone()];

    let ab = f.add(a, b);
    let ab_m = f.mul(a, b);
    for r in [&ab, &ab_m] {
        if !f.contains(r) {
            return Some(("closure", abc()));
        }
    }
    if !e(&f.add(&ab, c), &f.add(a, &f.add(b, c))) {
        return Some(("add-associative", abc()));
    }
    if !e(&ab, &f.add(b, a)) {
        return Some(("add-commutative", abc()));
    }
    if !e(&f.add(a, zero), a) || !e(&f.add(zero, a), a) {
        return Some(("add-neutral", vec![a.clone()]));
    }
    if !e(&f.mul(&ab_m, c), &f.mul(a, &f.mul(b, c))) {
        return Some(("mul-associative", abc()));
    }
    if !e(&f.mul(a, one), a) || !e(&f.mul(one, a), a) {
        return Some(("mul-neutral", vec![a.clone()]));
    }
    if !f.is_zero(&f.mul(zero, a)) || !f.is_zero(&f.mul(a, zero)) {
        return Some(("zero-absorbing", vec![a.clone()]));
    }
    let a_zero = f.is_zero(a);
    let b_zero = f.is_zero(b);
    if !a_zero && !b_zero && f.is_zero(&ab_m) {
        return Some(("nonzero-closure", vec![a.clone(), b.clone()]));
    }
    match f.inv(a) {
        None if !a_zero => return Some(("inverse-exists", vec![a.clone()])),
        Some(_) if a_zero => return Some(("inverse-of-zero", vec![a.clone()])),
        Some(ai) if !f.contains(&ai) || !e(&f.mul(a, &ai), one) || !e(&f.mul(&ai, a), one) => {
            return Some(("inverse", vec![a.clone()]));
        }
        _ => {}
    }
    if !e(&f.mul(a, &f.add(b, c)), &f.add(&ab_m, &f.mul(a, c))) {
        return Some(("left-distributive", abc()));
    }
    if !e(&f.mul(&ab, c), &f.add(&f.mul(a, c), &f.mul(b, c))) {
        return Some(("right-distributive", abc()));
    }
    if strict && !a_zero && !b_zero && f.is_zero(&ab) {
        return Some(("strict-no-additive-inverse", vec![a.clone(), b.clone()]));
    }
    None
}

/// `n·1 = 1 + ⋯ + 1` by doubling.
pub fn integer_image<S: Semifield + ?Sized>(f: &S, n: &BigUint) -> S::Elem {
    let one = f.one();
    let mut acc = f.zero();
    for i in (0..n.bits()).rev() {
        acc = f.add(&acc, &acc);
        if n.bit(i) {
            acc = f.add(&acc, &one);
        }
    }
    acc
}

/// Image of `n/d` in the prime sub-semifield, or `None` when `d·1 = 0`.
pub fn rational_image<S: Semifield + ?Sized>(f: &S, q: &PositiveRational) -> Option<S::Elem> {
    let n = integer_image(f, &q.numerator());
    let d = integer_image(f, &q.denominator());
    f.inv(&d).map(|di| f.mul(&n, &di))
}

/// Bounded characteristic probe over the sums `s_n = 1 + ⋯ + 1`.
pub fn characteristic<S: Semifield + ?Sized>(f: &S, bound: u64) -> Result<CharClass> {
    if bound < 2 {
        return Err(Error::Domain(format!(
            "characteristic bound must be at least 2, got {bound}"
        )));
    }
    let one = f.one();
    let mut sums = vec![one.clone()];
    let mut s = one.clone();
    for n in 2..=bound {
        s = f.add(&s, &one);
        if n == 2 && f.eq(&s, &one) {
            return Ok(CharClass::One);
        }
        if f.is_zero(&s) {
            return if is_prime(n) {
                Ok(CharClass::Prime(n))
            } else {
                Err(Error::InconsistentInstance {
                    instance: f.name(),
                    detail: format!("{n}·1 = 0 with {n} composite"),
                })
            };
        }
        if let Some(m) = sums.iter().position(|prev| f.eq(prev, &s)) {
            return Err(Error::InconsistentInstance {
                instance: f.name(),
                detail: format!("{n}·1 = {}·1 without idempotence or zero", m + 1),
            });
        }
        sums.push(s.clone());
    }
    Ok(CharClass::ZeroUpTo(bound))
}

/// Looks for `2 ≤ k ≤ max_order` with `x^k = 1`.
pub fn torsion_probe<S: Semifield>(f: &S, x: &S::Elem, max_order: u64) -> Result<Report> {
    require_nonzero(f, x, "torsion probe")?;
    let one = f.one();
    if f.eq(x, &one) {
        return Err(Error::Domain(
            "torsion probe: argument must differ from 1".into(),
        ));
    }
    let mut power = x.clone();
    for k in 2..=max_order {
        power = f.mul(&power, x);
        if f.eq(&power, &one) {
            return Ok(Report::fail(
                (k - 2) as usize,
                "torsion",
                vec![f.render(x), k.to_string()],
            ));
        }
    }
    Ok(Report::pass(max_order.saturating_sub(1) as usize))
}

/// Runs [`torsion_probe`] on up to `count` elements other than `0` and `1`:
/// the whole carrier when it is finite, otherwise draws from the per-case
/// streams of `seed`. `cases_run` counts the elements probed; the witness
/// is `(x, k)`.
pub fn torsion_sweep<S: Semifield>(
    f: &S,
    seed: u64,
    count: usize,
    max_order: u64,
) -> Result<Report> {
    let one = f.one();
    let usable = |x: &S::Elem| !f.is_zero(x) && !f.eq(x, &one);
    let elements: Vec<S::Elem> = match f.enumerate() {
        Some(all) => all.into_iter().filter(|x| usable(x)).take(count).collect(),
        None => (0..count * 20)
            .map(|i| f.sample(&mut case_rng(seed, i)))
            .filter(|x| usable(x))
            .take(count)
            .collect(),
    };
    for (case, x) in elements.iter().enumerate() {
        let report = torsion_probe(f, x, max_order)?;
        if let Some(w) = report.witness {
            return Ok(Report::fail(case, w.law, w.elements));
        }
    }
    Ok(Report::pass(elements.len()))
}

/// Searches the sampled triples for `x + z = y + z` with `x ≠ y`.
pub fn cancellativity_probe<S: Semifield>(
    f: &S,
    sampling: &Sampling<'_, S::Elem>,
) -> Result<Report> {
    run_cases(f, &f.name(), sampling, 3, |t| {
        let (x, y, z) = (&t[0], &t[1], &t[2]);
        (!f.eq(x, y) && f.eq(&f.add(x, z), &f.add(y, z))).then(|| ("cancellation", t.to_vec()))
    })
}

/// `q·x` where `q` acts through its image in the prime sub-semifield.
pub fn scalar_action<S: Semifield>(f: &S, q: &PositiveRational, x: &S::Elem) -> Result<S::Elem> {
    require_nonzero(f, x, "scalar action")?;
    if let class @ CharClass::Prime(_) = characteristic(f, DEFAULT_CHAR_BOUND)? {
        return Err(Error::UnsupportedCharacteristic {
            instance: f.name(),
            found: class.to_string(),
        });
    }
    let image = rational_image(f, q).ok_or_else(|| Error::UnsupportedCharacteristic {
        instance: f.name(),
        found: format!("{}·1 is not invertible", q.denominator()),
    })?;
    Ok(f.mul(&image, x))
}

/// Deterministic primality for `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_matches_trial_division() {
        let trial = |n: u64| {
            n >= 2
                && (2..n)
                    .take_while(|d| d * d <= n)
                    .all(|d| !n.is_multiple_of(d))
        };
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(18_446_744_073_709_551_555));
    }
}
