use std::collections::BTreeSet;

use semifield::census::{finite_census, MAX_CENSUS_ORDER};
use semifield::prelude::*;

/// Brute force without the `f(x) = 1 + x` reduction: every commutative
/// addition table with neutral 0, every multiplication table with 0
/// absorbing and 1 neutral, full axiom check, classes up to relabelings
/// fixing 0 and 1. Returns `(is_field, is_idempotent)` per class.
fn brute_force(n: usize) -> Vec<(bool, bool)> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let free: Vec<(usize, usize)> = (2..n).flat_map(|a| (2..n).map(move |b| (a, b))).collect();
    let mut classes = BTreeSet::new();
    let mut found = Vec::new();
    for mcode in 0..(n - 1).pow(free.len() as u32) {
        let mut mul = vec![0usize; n * n];
        for a in 1..n {
            mul[n + a] = a;
            mul[a * n + 1] = a;
        }
        let mut c = mcode;
        for &(a, b) in &free {
            mul[a * n + b] = 1 + c % (n - 1);
            c /= n - 1;
        }
        for acode in 0..n.pow(pairs.len() as u32) {
            let mut add = vec![0usize; n * n];
            for a in 0..n {
                add[a] = a;
                add[a * n] = a;
            }
            let mut c = acode;
            for &(a, b) in &pairs {
                add[a * n + b] = c % n;
                add[b * n + a] = c % n;
                c /= n;
            }
            if !is_semifield(n, &add, &mul) {
                continue;
            }
            let key = canonical(n, &add, &mul);
            if classes.insert(key) {
                let field = (1..n).any(|x| add[n + x] == 0);
                found.push((field, add[n + 1] == 1));
            }
        }
    }
    found.sort();
    found
}

fn is_semifield(n: usize, add: &[usize], mul: &[usize]) -> bool {
    let (p, m) = (
        |a: usize, b: usize| add[a * n + b],
        |a: usize, b: usize| mul[a * n + b],
    );
    for a in 1..n {
        if !(1..n).any(|b| m(a, b) == 1) {
            return false;
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if p(p(a, b), c) != p(a, p(b, c)) || m(m(a, b), c) != m(a, m(b, c)) {
                    return false;
                }
                if m(a, p(b, c)) != p(m(a, b), m(a, c)) || m(p(a, b), c) != p(m(a, c), m(b, c)) {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(items: Vec<usize>) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.clone();
        let head = rest.remove(i);
        for mut p in permutations(rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

fn canonical(n: usize, add: &[usize], mul: &[usize]) -> (Vec<usize>, Vec<usize>) {
    permutations((2..n).collect())
        .into_iter()
        .map(|tail| {
            let mut sigma = vec![0, 1];
            sigma.extend(tail);
            let mut inv = vec![0; n];
            for (i, &s) in sigma.iter().enumerate() {
                inv[s] = i;
            }
            let relabel = |t: &[usize]| -> Vec<usize> {
                (0..n * n)
                    .map(|i| sigma[t[inv[i / n] * n + inv[i % n]]])
                    .collect()
            };
            (relabel(add), relabel(mul))
        })
        .min()
        .unwrap()
}

#[test]
fn census_lines() {
    let census = finite_census(4).unwrap();
    let lines: Vec<String> = census.iter().map(|c| c.to_string()).collect();
    assert_eq!(lines, ["n=2: F_2, B", "n=3: F_3", "n=4: F_4"]);
}

#[test]
fn census_agrees_with_brute_force() {
    let census = finite_census(4).unwrap();
    for order in &census {
        let n = order.order as usize;
        let oracle = brute_force(n);
        let mut ours: Vec<(bool, bool)> = order
            .classes
            .iter()
            .map(|t| {
                (
                    !t.claims().strict,
                    characteristic(t, 64).unwrap() == CharClass::One,
                )
            })
            .collect();
        ours.sort();
        assert_eq!(ours, oracle, "order {n}");
    }
    assert_eq!(brute_force(2), vec![(false, true), (true, false)]);
    assert_eq!(brute_force(3), vec![(true, false)]);
    assert_eq!(brute_force(4), vec![(true, false)]);
}

#[test]
fn census_classes_pass_the_axioms() {
    for order in finite_census(MAX_CENSUS_ORDER).unwrap() {
        for class in &order.classes {
            let report =
                check_semifield_axioms(class, &Sampling::Exhaustive(class.enumerate().unwrap()))
                    .unwrap();
            let n = order.order as usize;
            assert_eq!(report, Report::pass(n * n * n), "{}", class.name());
            let declared = class.claims().characteristic;
            assert!(characteristic(class, 64).unwrap().agrees_with(declared));
        }
    }
}

#[test]
fn order_five_is_only_the_field() {
    let census = finite_census(5).unwrap();
    assert_eq!(census.last().unwrap().to_string(), "n=5: F_5");
}

#[test]
fn census_guard() {
    assert!(matches!(finite_census(6), Err(Error::CensusRefused { .. })));
    assert!(finite_census(1).is_err());
}

#[test]
fn boolean_class_matches_the_instance() {
    let census = finite_census(2).unwrap();
    let b = census[0].classes.iter().find(|c| c.name() == "B").unwrap();
    let inst = Boolean;
    for (i, x) in [false, true].into_iter().enumerate() {
        for (j, y) in [false, true].into_iter().enumerate() {
            assert_eq!(b.add_table()[i * 2 + j] == 1, inst.add(&x, &y));
            assert_eq!(b.mul_table()[i * 2 + j] == 1, inst.mul(&x, &y));
        }
    }
}
