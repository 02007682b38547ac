//! Sampled law checking.
//!
//! A check draws tuples of elements, one tuple per case, and evaluates a law
//! on each. Every case owns an independent random stream derived from the
//! seed and the case index, so cases can run in parallel while the report
//! (the first violation by case index) stays reproducible bit for bit.

use std::fmt;

use rand::SeedableRng;
use rayon::prelude::*;

use crate::algebra::{Carrier, CaseRng};
use crate::error::{Error, Result};

/// How a check obtains its tuples.
pub enum Sampling<'a, E> {
    /// Every tuple over the listed elements, first slot most significant.
    Exhaustive(Vec<E>),
    /// `cases` tuples from the carrier's own sampler.
    Random { seed: u64, cases: usize },
    /// `cases` tuples from a caller-supplied sampler.
    Drawn {
        seed: u64,
        cases: usize,
        draw: &'a (dyn Fn(&mut CaseRng) -> E + Sync),
    },
}

impl<E: Clone> Sampling<'_, E> {
    pub fn random(seed: u64, cases: usize) -> Self {
        Sampling::Random { seed, cases }
    }

    pub fn cases(&self, arity: usize) -> usize {
        match self {
            Sampling::Exhaustive(list) => list.len().saturating_pow(arity as u32),
            Sampling::Random { cases, .. } | Sampling::Drawn { cases, .. } => *cases,
        }
    }

    pub(crate) fn tuple<C: Carrier<Elem = E> + ?Sized>(
        &self,
        carrier: &C,
        case: usize,
        arity: usize,
    ) -> Vec<E> {
        match self {
            Sampling::Exhaustive(list) => {
                let n = list.len();
                let mut digits = vec![0usize; arity];
                let mut rest = case;
                for slot in (0..arity).rev() {
                    digits[slot] = rest % n;
                    rest /= n;
                }
                digits.into_iter().map(|i| list[i].clone()).collect()
            }
            Sampling::Random { seed, .. } => {
                let mut rng = case_rng(*seed, case);
                (0..arity).map(|_| carrier.sample(&mut rng)).collect()
            }
            Sampling::Drawn { seed, draw, .. } => {
                let mut rng = case_rng(*seed, case);
                (0..arity).map(|_| draw(&mut rng)).collect()
            }
        }
    }
}

/// Exhaustive over the carrier when it is finite and `n^arity` stays under
/// `limit`, otherwise [`Sampling::Random`].
pub fn default_sampling<'a, C: Carrier>(
    carrier: &C,
    arity: usize,
    limit: usize,
    seed: u64,
    cases: usize,
) -> Sampling<'a, C::Elem> {
    match carrier.enumerate() {
        Some(list) if list.len().saturating_pow(arity as u32) <= limit => {
            Sampling::Exhaustive(list)
        }
        _ => Sampling::Random { seed, cases },
    }
}

pub fn case_rng(seed: u64, case: usize) -> CaseRng {
    let mut rng = CaseRng::seed_from_u64(seed);
    rng.set_stream(case as u64);
    rng
}

/// A counterexample: the case that failed, the law it broke, and the tuple in
/// literal syntax.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub case: usize,
    pub law: String,
    pub elements: Vec<String>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.elements.join(", "))
    }
}

/// Outcome of a check. `witness` is present exactly when `passed` is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub passed: bool,
    pub cases_run: usize,
    pub witness: Option<Witness>,
}

impl Report {
    pub fn pass(cases_run: usize) -> Self {
        Report {
            passed: true,
            cases_run,
            witness: None,
        }
    }

    pub fn fail(case: usize, law: impl Into<String>, elements: Vec<String>) -> Self {
        Report {
            passed: false,
            cases_run: case + 1,
            witness: Some(Witness {
                case,
                law: law.into(),
                elements,
            }),
        }
    }

    /// Law name of the witness, if any.
    pub fn law(&self) -> Option<&str> {
        self.witness.as_ref().map(|w| w.law.as_str())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "PASS cases={}", self.cases_run),
            Some(w) => write!(f, "FAIL case={} witness={}", w.case, w),
        }
    }
}

/// A broken law: its name and the elements to show as witness.
pub(crate) type Violation<E> = (&'static str, Vec<E>);

/// Runs `law` on every case and reports the first violation by case index.
///
/// `law` returns `None` when the tuple satisfies it. Tuples that leave the
/// carrier are reported as [`Error::InputMismatch`].
pub(crate) fn run_cases<C, F>(
    carrier: &C,
    instance: &str,
    sampling: &Sampling<'_, C::Elem>,
    arity: usize,
    law: F,
) -> Result<Report>
where
    C: Carrier + ?Sized,
    F: Fn(&[C::Elem]) -> Option<Violation<C::Elem>> + Sync,
{
    enum Outcome<E> {
        Mismatch(usize, E),
        Broken(usize, &'static str, Vec<E>),
    }

    let total = sampling.cases(arity);
    let first = (0..total).into_par_iter().find_map_first(|case| {
        let tuple = sampling.tuple(carrier, case, arity);
        if let Some(bad) = tuple.iter().find(|x| !carrier.contains(x)) {
            return Some(Outcome::Mismatch(case, bad.clone()));
        }
        law(&tuple).map(|(name, shown)| Outcome::Broken(case, name, shown))
    });

    match first {
        None => Ok(Report::pass(total)),
        Some(Outcome::Mismatch(case, e)) => Err(Error::InputMismatch {
            instance: instance.to_string(),
            case,
            element: format!("{e:?}"),
        }),
        Some(Outcome::Broken(case, name, shown)) => Ok(Report::fail(
            case,
            name,
            shown.iter().map(|x| carrier.render(x)).collect(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_text() {
        assert_eq!(Report::pass(12).to_string(), "PASS cases=12");
        let r = Report::fail(3, "law", vec!["1".into(), "X".into()]);
        assert_eq!(r.to_string(), "FAIL case=3 witness=(1, X)");
        assert_eq!(r.cases_run, 4);
        assert!(!r.passed);
    }

    #[test]
    fn streams_are_independent_of_order() {
        use rand::Rng;
        let a: u64 = case_rng(9, 5).random();
        let _: u64 = case_rng(9, 4).random();
        let b: u64 = case_rng(9, 5).random();
        assert_eq!(a, b);
        assert_ne!(a, case_rng(9, 6).random::<u64>());
    }
}
