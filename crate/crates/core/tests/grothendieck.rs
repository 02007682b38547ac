use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use semifield::check::case_rng;
use semifield::grothendieck::*;
use semifield::prelude::*;
use semifield::rational::parse_rational;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn qplus_ring() -> GrothendieckRing<PositiveRationals> {
    GrothendieckRing::new(PositiveRationals, &Sampling::random(0, 1000)).unwrap()
}

fn dual_ring() -> GrothendieckRing<DualPositive> {
    GrothendieckRing::new(DualPositive, &Sampling::random(0, 1000)).unwrap()
}

fn power_ring() -> GrothendieckRing<RationalPower> {
    GrothendieckRing::new(RationalPower::new(2).unwrap(), &Sampling::random(0, 1000)).unwrap()
}

#[test]
fn rational_pair_examples() {
    let r = qplus_ring();
    let p = |a: i64, b: i64| DiffPair::new(q(a), q(b));
    assert!(r.eq(&p(3, 1), &p(5, 3)));
    assert!(!r.eq(&p(3, 1), &p(3, 5)));
    let sq = r.mul(&p(1, 2), &p(1, 2));
    assert_eq!((sq.plus.clone(), sq.minus.clone()), (q(5), q(4)));
    assert!(r.eq(&sq, &p(1, 0)));
    assert_eq!(r.recognize_positive(&p(5, 3)), Positivity::Positive(q(2)));
    assert_eq!(r.recognize_positive(&p(3, 5)), Positivity::NotPositive);
    assert!(r.eq(&r.embed(&q(2)), &p(2, 0)));
    assert_eq!(r.render(&p(3, 1)), "(3) - (1)");
}

#[test]
fn power_pair_example() {
    let ring = RationalPowerRing::new(2).unwrap();
    let d = ring.sub(&vec![q(1), q(7)], &vec![q(0), q(3)]);
    assert_eq!(d, vec![q(1), q(4)]);
    assert_eq!(ring.positivity(&d), ConeVerdict::Positive);
    assert_eq!(
        ring.positivity(&ring.sub(&vec![q(1), q(7)], &vec![q(2), q(3)])),
        ConeVerdict::NotPositive
    );

    let r = power_ring();
    let f = r.field();
    let x = DiffPair::new(f.parse("(2,7)").unwrap(), f.parse("(1,3)").unwrap());
    assert_eq!(
        r.recognize_positive(&x),
        Positivity::Positive(f.parse("(1,4)").unwrap())
    );
    let y = DiffPair::new(f.parse("(1,7)").unwrap(), f.parse("(2,3)").unwrap());
    assert_eq!(r.recognize_positive(&y), Positivity::NotPositive);
}

#[test]
fn construction_guards() {
    let s = Sampling::random(0, 1000);
    assert!(matches!(
        GrothendieckRing::new(TropicalIntegers, &s),
        Err(Error::UnsupportedCharacteristic { .. })
    ));
    assert!(matches!(
        GrothendieckRing::new(Boolean, &Sampling::random(0, 1000)),
        Err(Error::UnsupportedCharacteristic { .. })
    ));
    assert!(matches!(
        GrothendieckRing::new(PrimeField::new(5).unwrap(), &Sampling::random(0, 1000)),
        Err(Error::UnsupportedCharacteristic { .. })
    ));
    match GrothendieckRing::new(LeadingTermSemifield, &Sampling::random(0, 1000)) {
        Err(Error::NonCancellative { report, .. }) => {
            assert!(!report.passed && report.witness.is_some())
        }
        other => panic!("expected a refusal, got {other:?}"),
    }
}

#[test]
fn ordered_ring_axioms_for_completions() {
    let report = check_ordered_ring_axioms(&qplus_ring(), &Sampling::random(1, 1000)).unwrap();
    assert_eq!(report, Report::pass(1000));
    let report = check_ordered_ring_axioms(&power_ring(), &Sampling::random(1, 1000)).unwrap();
    assert_eq!(report, Report::pass(1000));
    let report = check_ordered_ring_axioms(&dual_ring(), &Sampling::random(1, 1000)).unwrap();
    assert_eq!(report, Report::pass(1000));
}

#[test]
fn standalone_rings() {
    for report in [
        check_ordered_ring_axioms(&RationalRing::new(), &Sampling::random(2, 1000)).unwrap(),
        check_ordered_ring_axioms(
            &RationalPowerRing::new(2).unwrap(),
            &Sampling::random(2, 1000),
        )
        .unwrap(),
        check_ordered_ring_axioms(&DualNumberRing, &Sampling::random(2, 1000)).unwrap(),
    ] {
        assert_eq!(report, Report::pass(1000));
    }
    let broken =
        check_ordered_ring_axioms(&RationalRing::with_full_cone(), &Sampling::random(2, 1000))
            .unwrap();
    assert_eq!(broken.law(), Some("cone-pointed"));
    let x = parse_rational(&broken.witness.unwrap().elements[0]).unwrap();
    assert!(!x.is_zero());
    assert!(matches!(
        PositiveConeSemifield::new(RationalRing::with_full_cone(), &Sampling::random(2, 1000)),
        Err(Error::ConeViolation { .. })
    ));
}

#[test]
fn rational_completion_is_q() {
    // (a, b) ↦ a - b against plain rational arithmetic.
    let r = qplus_ring();
    let to_q = |x: &DiffPair<BigRational>| &x.plus - &x.minus;
    for i in 0..1000 {
        let mut rng = case_rng(3, i);
        let (x, y) = (r.sample(&mut rng), r.sample(&mut rng));
        assert_eq!(to_q(&r.add(&x, &y)), to_q(&x) + to_q(&y));
        assert_eq!(to_q(&r.mul(&x, &y)), to_q(&x) * to_q(&y));
        assert_eq!(to_q(&r.neg(&x)), -to_q(&x));
        assert_eq!(r.eq(&x, &y), to_q(&x) == to_q(&y));
        // Surjective: every rational has a preimage.
        let target = to_q(&x) * to_q(&y) - to_q(&y);
        let pre = if target.is_negative() {
            DiffPair::new(q(0), -&target)
        } else {
            DiffPair::new(target.clone(), q(0))
        };
        assert_eq!(to_q(&pre), target);
        let reduced = r.reduce(&x);
        assert_eq!(to_q(&reduced), to_q(&x));
        assert!(reduced.plus.is_zero() || reduced.minus.is_zero());
    }
}

#[test]
fn dual_completion_is_dual_numbers() {
    // (a + bε, c + dε) ↦ (a - c) + (b - d)ε against plain dual-number arithmetic.
    let r = dual_ring();
    let to_d = |x: &DiffPair<DualNumber>| x.plus.sub(&x.minus);
    for i in 0..1000 {
        let mut rng = case_rng(4, i);
        let (x, y) = (r.sample(&mut rng), r.sample(&mut rng));
        assert_eq!(to_d(&r.add(&x, &y)), to_d(&x).add(&to_d(&y)));
        assert_eq!(to_d(&r.mul(&x, &y)), to_d(&x).mul(&to_d(&y)));
        assert_eq!(r.eq(&x, &y), to_d(&x) == to_d(&y));
    }
}

#[test]
fn dual_completion_has_a_nilpotent() {
    let r = dual_ring();
    let f = r.field();
    let eps = DiffPair::new(f.parse("1+e").unwrap(), f.parse("1").unwrap());
    assert!(!r.is_zero(&eps));
    assert!(r.is_zero(&r.mul(&eps, &eps)));
    // The source has none.
    for i in 0..1000 {
        let x = f.sample(&mut case_rng(5, i));
        if !f.is_zero(&x) {
            assert!(!f.is_zero(&f.mul(&x, &x)));
        }
    }
}

#[test]
fn equivalence_is_a_congruence() {
    fn check<S: Semifield>(r: &GrothendieckRing<S>, seed: u64) {
        let f = r.field();
        for i in 0..1000 {
            let mut rng = case_rng(seed, i);
            let (a, b) = (r.sample(&mut rng), r.sample(&mut rng));
            let (s, t) = (f.sample(&mut rng), f.sample(&mut rng));
            let a2 = DiffPair::new(f.add(&a.plus, &s), f.add(&a.minus, &s));
            let b2 = DiffPair::new(f.add(&b.plus, &t), f.add(&b.minus, &t));
            assert!(r.eq(&a, &a2) && r.eq(&b, &b2));
            assert!(r.eq(&r.add(&a, &b), &r.add(&a2, &b2)), "{}", f.name());
            assert!(r.eq(&r.mul(&a, &b), &r.mul(&a2, &b2)), "{}", f.name());
            assert!(r.eq(&r.neg(&a), &r.neg(&a2)));
        }
    }
    check(&qplus_ring(), 6);
    check(&power_ring(), 6);
    check(&dual_ring(), 6);
}

#[test]
fn embedding_laws() {
    assert_eq!(
        check_embedding(&qplus_ring(), &Sampling::random(7, 1000)).unwrap(),
        Report::pass(1000)
    );
    assert_eq!(
        check_embedding(&power_ring(), &Sampling::random(7, 1000)).unwrap(),
        Report::pass(1000)
    );
    assert_eq!(
        check_embedding(&dual_ring(), &Sampling::random(7, 1000)).unwrap(),
        Report::pass(1000)
    );
}

#[test]
fn cone_recovers_the_source() {
    fn check<S: Semifield + Clone>(r: GrothendieckRing<S>) {
        let f = r.field().clone();
        let cone = PositiveConeSemifield::new(r, &Sampling::random(8, 1000)).unwrap();
        assert_eq!(
            check_cone_recovery(&cone, &Sampling::random(8, 1000)).unwrap(),
            Report::pass(1000)
        );
        assert_eq!(
            check_embedding(cone.ring(), &Sampling::random(8, 1000)).unwrap(),
            Report::pass(1000)
        );
        // The cone's operations agree with the source through the embedding.
        let ring = cone.ring();
        for i in 0..1000 {
            let mut rng = case_rng(9, i);
            let (x, y) = (f.sample(&mut rng), f.sample(&mut rng));
            let (ex, ey) = (ring.embed(&x), ring.embed(&y));
            assert!(cone.contains(&ex));
            assert!(cone.eq(&cone.add(&ex, &ey), &ring.embed(&f.add(&x, &y))));
            assert!(cone.eq(&cone.mul(&ex, &ey), &ring.embed(&f.mul(&x, &y))));
            if let Some(xi) = f.inv(&x) {
                assert!(cone.eq(&cone.inv(&ex).unwrap(), &ring.embed(&xi)));
            }
        }
    }
    check(qplus_ring());
    check(power_ring());
    check(dual_ring());
}

#[test]
fn cone_semifields_are_cancellative_semifields() {
    fn check<R: OrderedRing + Clone>(r: R) {
        let cone = PositiveConeSemifield::new(r, &Sampling::random(10, 1000)).unwrap();
        assert_eq!(
            check_semifield_axioms(&cone, &Sampling::random(10, 1000)).unwrap(),
            Report::pass(1000),
            "{}",
            cone.name()
        );
        assert_eq!(
            cancellativity_probe(&cone, &Sampling::random(10, 1000)).unwrap(),
            Report::pass(1000),
            "{}",
            cone.name()
        );
    }
    check(RationalRing::new());
    check(RationalPowerRing::new(2).unwrap());
    check(DualNumberRing);
    check(qplus_ring());
    check(dual_ring());
}

#[test]
fn cones_of_standard_rings_are_the_instances() {
    // ℚ yields ℚ⁺, ℚ² yields ℚ⁺², ℚ[ε] yields dual-positive.
    let c = PositiveConeSemifield::new(RationalRing::new(), &Sampling::random(11, 1000)).unwrap();
    let f = PositiveRationals;
    let c2 = PositiveConeSemifield::new(
        RationalPowerRing::new(2).unwrap(),
        &Sampling::random(11, 1000),
    )
    .unwrap();
    let f2 = RationalPower::new(2).unwrap();
    let c3 = PositiveConeSemifield::new(DualNumberRing, &Sampling::random(11, 1000)).unwrap();
    let f3 = DualPositive;
    for i in 0..1000 {
        let mut rng = case_rng(11, i);
        let (x, y) = (f.sample(&mut rng), f.sample(&mut rng));
        assert!(c.contains(&x));
        assert_eq!(c.add(&x, &y), f.add(&x, &y));
        assert_eq!(c.mul(&x, &y), f.mul(&x, &y));
        let (x, y) = (f2.sample(&mut rng), f2.sample(&mut rng));
        assert!(c2.contains(&x));
        assert!(f2.eq(&c2.add(&x, &y), &f2.add(&x, &y)));
        assert!(f2.eq(&c2.mul(&x, &y), &f2.mul(&x, &y)));
        let (x, y) = (f3.sample(&mut rng), f3.sample(&mut rng));
        assert!(c3.contains(&x));
        assert_eq!(c3.add(&x, &y), f3.add(&x, &y));
        assert_eq!(c3.mul(&x, &y), f3.mul(&x, &y));
    }
    assert!(!c.contains(&q(-1)));
}

#[test]
fn rational_function_positivity_is_three_valued() {
    let f = PositiveRationalFunctions;
    let r = GrothendieckRing::new(f, &Sampling::random(12, 200)).unwrap();
    let x = f.parse("X^2+1").unwrap();
    assert_eq!(r.positivity(&r.embed(&x)), ConeVerdict::Positive);
    let d = DiffPair::new(x, f.parse("2*X").unwrap());
    assert_eq!(r.positivity(&d), ConeVerdict::Unknown);
    assert_eq!(ConeVerdict::Unknown.to_string(), "unknown");
}

proptest! {
    #[test]
    fn rational_pairs_compare_by_difference(a in 0i64..50, b in 0i64..50, c in 0i64..50, d in 0i64..50) {
        let r = qplus_ring();
        let x = DiffPair::new(q(a), q(b));
        let y = DiffPair::new(q(c), q(d));
        prop_assert_eq!(r.eq(&x, &y), a - b == c - d);
        prop_assert_eq!(r.key(&x) == r.key(&y), a - b == c - d);
        let verdict = r.positivity(&x);
        prop_assert_eq!(verdict == ConeVerdict::Positive, a >= b);
    }
}
