//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use semifield::algebra::CaseRng;
use semifield::axioms::torsion_sweep;
use semifield::census::finite_census;
use semifield::char_one::{
    check_cone_laws, check_field_round_trip, check_group_round_trip, check_positivity_forms,
};
use semifield::check::case_rng;
use semifield::grothendieck::{
    check_cone_recovery, check_embedding, check_ordered_ring_axioms, DiffPair, GrothendieckRing,
    OrderedRing, PositiveConeSemifield,
};
use semifield::prelude::*;
use semifield::quotient::{
    check_leading_term_hom, check_phi, check_retraction, leading_term_hom, FormalSums,
    FractionSemifield,
};
use semifield::with_instance;

type Verdict = std::result::Result<String, String>;
type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// A report must pass with exactly `cases` cases.
fn passes(what: &str, r: Result<Report>, cases: usize) -> Check {
    let r = r.map_err(|e| format!("{what}: {e}"))?;
    ensure(r.passed && r.cases_run == cases, || format!("{what}: {r}"))
}

fn instance(s: &str) -> Instance {
    make_instance(&s.parse::<InstanceDescriptor>().unwrap()).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn axiom_suite() -> Verdict {
    let start = Instant::now();
    let mut total = 0;
    for d in registry() {
        let inst = make_instance(&d).unwrap();
        let (report, exhaustive) = with_instance!(&inst, |f| {
            let s = default_sampling(f, 3, 1 << 12, 0, 1000);
            let exhaustive = matches!(s, Sampling::Exhaustive(_));
            (check_semifield_axioms(f, &s), exhaustive)
        });
        let finite = matches!(d.name.as_str(), "boolean" | "fp");
        ensure(exhaustive == finite, || {
            format!("{d}: exhaustive={exhaustive}")
        })?;
        let report = report.map_err(|e| format!("{d}: {e}"))?;
        ensure(
            report.passed && (finite || report.cases_run == 1000),
            || format!("{d}: {report}"),
        )?;
        total += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:.1?}")
    })?;
    Ok(format!(
        "{total} instances in {:.1}s",
        elapsed.as_secs_f64()
    ))
}

fn census() -> Verdict {
    let start = Instant::now();
    let census = finite_census(4).map_err(|e| e.to_string())?;
    let lines: Vec<String> = census.iter().map(|c| c.to_string()).collect();
    ensure(lines == ["n=2: F_2, B", "n=3: F_3", "n=4: F_4"], || {
        format!("{lines:?}")
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:.1?}")
    })?;
    let classes: usize = census.iter().map(|c| c.classes.len()).sum();
    Ok(format!(
        "{classes} classes in {:.2}s",
        elapsed.as_secs_f64()
    ))
}

fn characteristic_table() -> Verdict {
    let expect = [
        ("boolean", CharClass::One),
        ("tropical-z", CharClass::One),
        ("zn-coordinatewise:2", CharClass::One),
        ("zn-coordinatewise:3", CharClass::One),
        ("z2-lex", CharClass::One),
        ("fp:2", CharClass::Prime(2)),
        ("fp:3", CharClass::Prime(3)),
        ("fp:5", CharClass::Prime(5)),
        ("fp:7", CharClass::Prime(7)),
        ("qplus", CharClass::ZeroUpTo(64)),
        ("qplus-power:2", CharClass::ZeroUpTo(64)),
        ("pos-rational-functions", CharClass::ZeroUpTo(64)),
        ("dual-positive", CharClass::ZeroUpTo(64)),
        ("leading-term", CharClass::ZeroUpTo(64)),
    ];
    for (s, want) in expect {
        let inst = instance(s);
        let got =
            with_instance!(&inst, |f| characteristic(f, 64)).map_err(|e| format!("{s}: {e}"))?;
        ensure(got == want, || format!("{s}: {got}, expected {want}"))?;
    }
    Ok(format!("{} instances", expect.len()))
}

fn torsion() -> Verdict {
    let mut probed = 0;
    for d in registry().into_iter().filter(|d| d.strict) {
        let inst = make_instance(&d).unwrap();
        let report = with_instance!(&inst, |f| torsion_sweep(f, 0, 100, 50))
            .map_err(|e| format!("{d}: {e}"))?;
        // Boolean has no element besides 0 and 1.
        let want = if d.name == "boolean" { 0 } else { 100 };
        ensure(report.passed && report.cases_run == want, || {
            format!("{d}: {report}")
        })?;
        probed += report.cases_run;
    }
    let f5 = PrimeField::new(5).unwrap();
    let order = (1..=4u32).find(|&k| 2u64.pow(k) % 5 == 1).unwrap();
    let w = torsion_probe(&f5, &2, 50)
        .map_err(|e| e.to_string())?
        .witness
        .ok_or("fp:5 control found no torsion")?;
    ensure(w.elements == ["2".to_string(), order.to_string()], || {
        format!("fp:5 control witness {w}")
    })?;
    Ok(format!(
        "{probed} elements torsion-free; fp:5 witness (2, {order})"
    ))
}

fn char_one() -> Verdict {
    for g in ["z", "zn:2", "z2-lex", "trivial"] {
        let group = make_lattice_group(g).unwrap();
        let want = if g == "trivial" { 1 } else { 1000 };
        passes(
            &format!("round trip A {g}"),
            check_group_round_trip(&group, &default_sampling(&group, 2, 1 << 12, 0, 1000)),
            want,
        )?;
    }
    passes(
        "round trip B boolean",
        check_field_round_trip(&Boolean, &Sampling::Exhaustive(vec![false, true])),
        4,
    )?;
    passes(
        "round trip B tropical-z",
        check_field_round_trip(&TropicalIntegers, &Sampling::random(0, 1000)),
        1000,
    )?;
    for s in ["tropical-z", "zn-coordinatewise:2", "z2-lex"] {
        let inst = instance(s);
        passes(
            &format!("cone laws {s}"),
            with_instance!(&inst, |f| check_cone_laws(f, &Sampling::random(0, 1000))),
            1000,
        )?;
        passes(
            &format!("positivity forms {s}"),
            with_instance!(&inst, |f| check_positivity_forms(
                f,
                &Sampling::random(0, 1000)
            )),
            1000,
        )?;
    }
    passes(
        "cone laws boolean",
        check_cone_laws(&Boolean, &Sampling::Exhaustive(vec![false, true])),
        8,
    )?;
    Ok("round trips A and B, cone laws, positivity forms".into())
}

fn grothendieck() -> Verdict {
    let qr = GrothendieckRing::new(PositiveRationals, &Sampling::random(0, 1000))
        .map_err(|e| e.to_string())?;
    let pr = GrothendieckRing::new(RationalPower::new(2).unwrap(), &Sampling::random(0, 1000))
        .map_err(|e| e.to_string())?;
    let dr = GrothendieckRing::new(DualPositive, &Sampling::random(0, 1000))
        .map_err(|e| e.to_string())?;
    passes(
        "ring axioms qplus",
        check_ordered_ring_axioms(&qr, &Sampling::random(1, 1000)),
        1000,
    )?;
    passes(
        "ring axioms qplus-power:2",
        check_ordered_ring_axioms(&pr, &Sampling::random(1, 1000)),
        1000,
    )?;
    passes(
        "ring axioms dual-positive",
        check_ordered_ring_axioms(&dr, &Sampling::random(1, 1000)),
        1000,
    )?;

    // (a, b) ↦ a - b onto ℚ.
    let to_q = |x: &DiffPair<BigRational>| &x.plus - &x.minus;
    for i in 0..1000 {
        let mut rng = case_rng(2, i);
        let (x, y) = (qr.sample(&mut rng), qr.sample(&mut rng));
        ensure(to_q(&qr.add(&x, &y)) == to_q(&x) + to_q(&y), || {
            format!("additive at case {i}")
        })?;
        ensure(to_q(&qr.mul(&x, &y)) == to_q(&x) * to_q(&y), || {
            format!("multiplicative at case {i}")
        })?;
        ensure(qr.eq(&x, &y) == (to_q(&x) == to_q(&y)), || {
            format!("injective at case {i}")
        })?;
        let r = to_q(&x) - to_q(&y) * q(2, 1);
        let (p, n) = if r < q(0, 1) {
            (q(0, 1), -r.clone())
        } else {
            (r.clone(), q(0, 1))
        };
        ensure(to_q(&DiffPair::new(p, n)) == r, || {
            format!("surjective at case {i}")
        })?;
    }

    fn recover<S: Semifield + Clone>(ring: GrothendieckRing<S>) -> Check {
        let name = ring.field().name();
        let cone = PositiveConeSemifield::new(ring, &Sampling::random(3, 1000))
            .map_err(|e| e.to_string())?;
        passes(
            &format!("embedding {name}"),
            check_embedding(cone.ring(), &Sampling::random(3, 1000)),
            1000,
        )?;
        passes(
            &format!("cone recovery {name}"),
            check_cone_recovery(&cone, &Sampling::random(3, 1000)),
            1000,
        )
    }
    recover(qr)?;
    recover(pr)?;
    recover(dr.clone())?;

    let f = dr.field();
    let eps = DiffPair::new(f.parse("1+e").unwrap(), f.parse("1").unwrap());
    ensure(!dr.is_zero(&eps) && dr.is_zero(&dr.mul(&eps, &eps)), || {
        "no nilpotent class".into()
    })?;
    Ok("three completions; (1+e) - (1) is nonzero and squares to zero".into())
}

/// Leading terms with exponents in `0..=2` and coefficients in `{1, 2}`.
fn directed_leading_term(rng: &mut CaseRng) -> Option<LeadingTerm> {
    Some(LeadingTerm::new(q(rng.random_range(1..=2), 1), rng.random_range(0..=2)).unwrap())
}

fn quotient() -> Verdict {
    let base = LeadingTermSemifield;
    let qf = FractionSemifield::new(base).map_err(|e| e.to_string())?;
    passes(
        "axioms Q(leading-term)",
        check_semifield_axioms(&qf, &Sampling::random(0, 1000)),
        1000,
    )?;
    passes(
        "cancellation Q(leading-term)",
        cancellativity_probe(&qf, &Sampling::random(0, 1000)),
        1000,
    )?;
    let draw = directed_leading_term;
    let upstream = cancellativity_probe(
        &base,
        &Sampling::Drawn {
            seed: 0,
            cases: 100,
            draw: &draw,
        },
    )
    .map_err(|e| e.to_string())?;
    let w = upstream
        .witness
        .clone()
        .ok_or("no cancellation witness in the base within 100 cases")?;
    let [x, y, z] = [0, 1, 2].map(|i| base.parse(&w.elements[i]).unwrap());
    ensure(
        !base.eq(&x, &y) && base.eq(&base.add(&x, &z), &base.add(&y, &z)),
        || format!("bogus witness {w}"),
    )?;
    passes("phi laws", check_phi(&qf, &Sampling::random(0, 1000)), 1000)?;
    passes(
        "phi retraction",
        check_retraction(&qf, &Sampling::random(0, 1000)),
        1000,
    )?;
    for i in 0..1000 {
        let x = base.sample(&mut case_rng(1, i));
        ensure(qf.phi(&qf.embed(&x)) == x, || {
            format!("phi([x]/[1]) != x at case {i}")
        })?;
    }
    Ok(format!("base witness {w} at case {}", w.case))
}

fn confluence() -> Verdict {
    let f = PositiveRationalFunctions;
    let l = FormalSums::new(f).map_err(|e| e.to_string())?;
    let mut merged = 0;
    for i in 0..1000 {
        let mut rng = case_rng(0, i);
        let len = rng.random_range(1..=6);
        let mut terms: Vec<RatFn> = Vec::new();
        while terms.len() < len {
            if !terms.is_empty() && rng.random_bool(0.5) {
                let base = terms[rng.random_range(0..terms.len())].clone();
                let theta = PositiveRational::new(rng.random_range(1..=5), rng.random_range(1..=3))
                    .unwrap();
                terms.push(scalar_action(&f, &theta, &base).unwrap());
            } else {
                let x = f.sample(&mut rng);
                if !f.is_zero(&x) {
                    terms.push(x);
                }
            }
        }
        let reference = l.keys(&l.normalize(&terms));
        merged += terms.len() - reference.len();
        for _ in 0..5 {
            terms.shuffle(&mut rng);
            ensure(l.keys(&l.normalize(&terms)) == reference, || {
                format!("case {i} depends on order")
            })?;
        }
    }
    Ok(format!("1000 lists x 5 shuffles, {merged} merges"))
}

/// Leading term read straight off the coefficient vectors.
fn leading_oracle(x: &RatFn) -> Option<LeadingTerm> {
    let v = x.value();
    let (p, d) = (v.numerator().coeffs(), v.denominator().coeffs());
    let (lp, ld) = (p.last()?, d.last()?);
    LeadingTerm::new(lp / ld, p.len() as i64 - d.len() as i64).ok()
}

fn leading_term_hom_check() -> Verdict {
    passes(
        "hom laws",
        check_leading_term_hom(&Sampling::random(0, 1000)),
        1000,
    )?;
    let f = PositiveRationalFunctions;
    for i in 0..1000 {
        let x = f.sample(&mut case_rng(1, i));
        ensure(leading_term_hom(&x) == leading_oracle(&x), || {
            format!("oracle disagrees at case {i}")
        })?;
    }
    let spot = f.parse("(X^2+1)/(2*X)").unwrap();
    let want = LeadingTerm::new(q(1, 2), 1).unwrap();
    ensure(leading_term_hom(&spot).as_ref() == Some(&want), || {
        format!("spot value {:?}", leading_term_hom(&spot))
    })?;
    ensure(leading_oracle(&spot).as_ref() == Some(&want), || {
        "oracle spot value".into()
    })?;
    Ok(format!("(X^2+1)/(2*X) -> {want}"))
}

const CLI_SUITE: &[&str] = &[
    "list",
    "census 5",
    "check boolean",
    "check fp:5",
    "check qplus",
    "check qplus-power:2",
    "check tropical-z",
    "check zn-coordinatewise:2",
    "check z2-lex",
    "check pos-rational-functions --cases 200",
    "check dual-positive",
    "check leading-term",
    "check fp:67 --bound 10",
    "char fp:7",
    "char dual-positive --bound 32",
    "hasse tropical-z --range -3..3",
    "hasse zn-coordinatewise:2 --range 0..2",
    "hasse boolean",
    "quotient leading-term",
    "quotient qplus",
    "quotient dual-positive --cases 200",
    "quotient pos-rational-functions --cases 50",
    "quotient tropical-z",
];

fn transcript() -> Vec<u8> {
    let bin = env!("CARGO_BIN_EXE_semifield");
    let mut out = Vec::new();
    for cmd in CLI_SUITE {
        let args: Vec<&str> = cmd
            .split_whitespace()
            .chain(["--seed", "17"].into_iter().filter(|_| has_seed(cmd)))
            .collect();
        let o = Command::new(bin)
            .args(&args)
            .output()
            .expect("run the binary");
        out.extend(format!("$ {} => {:?}\n", args.join(" "), o.status.code()).bytes());
        out.extend(o.stdout);
        out.extend(o.stderr);
    }
    out
}

fn has_seed(cmd: &str) -> bool {
    ["check", "char", "quotient"]
        .iter()
        .any(|c| cmd.starts_with(c))
}

fn determinism() -> Verdict {
    let (a, b) = (transcript(), transcript());
    ensure(a == b, || "transcripts differ".into())?;
    Ok(format!(
        "{} commands, {} bytes each run",
        CLI_SUITE.len(),
        a.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("axiom suite", axiom_suite),
        ("finite census", census),
        ("characteristic", characteristic_table),
        ("torsion", torsion),
        ("char-one round trips", char_one),
        ("grothendieck", grothendieck),
        ("quotient", quotient),
        ("normal-form confluence", confluence),
        ("leading-term homomorphism", leading_term_hom_check),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let verdict =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(detail) => println!("criterion {:>2} {name}: PASS {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
