//! Finite semifields given by Cayley tables, and the census of all of them
//! up to isomorphism for small orders.
//!
//! The search fixes a multiplicative group on the nonzero elements, then
//! walks every `f` with `f(0) = 1`: distributivity forces
//! `a + b = a · f(a⁻¹ b)` for `a ≠ 0`, so `f(x) = 1 + x` determines the
//! whole addition. Survivors of the exhaustive axiom suite are grouped by
//! the smallest encoding of their tables over all relabelings fixing 0 and 1.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::algebra::{Carrier, CaseRng, CharClass, Characteristic, Claims, Literal, Semifield};
use crate::axioms::{characteristic, check_semifield_axioms};
use crate::check::Sampling;
use crate::error::{Error, Result};

pub const MAX_CENSUS_ORDER: u64 = 5;

/// A semifield on `{0, 1, ..., n-1}` given by its addition and
/// multiplication tables (row-major, `n × n`). `0` and `1` are the neutral
/// elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableSemifield {
    name: String,
    n: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
    claims: Claims,
}

impl TableSemifield {
    pub fn new(
        name: impl Into<String>,
        n: u8,
        add: Vec<u8>,
        mul: Vec<u8>,
        claims: Claims,
    ) -> Result<Self> {
        let name = name.into();
        let size = n as usize * n as usize;
        if n < 2
            || add.len() != size
            || mul.len() != size
            || add.iter().chain(&mul).any(|&v| v >= n)
        {
            return Err(Error::InconsistentInstance {
                instance: name,
                detail: format!("tables must be {n}×{n} with entries below {n}"),
            });
        }
        Ok(TableSemifield {
            name,
            n,
            add,
            mul,
            claims,
        })
    }

    pub fn order(&self) -> u8 {
        self.n
    }

    pub fn add_table(&self) -> &[u8] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u8] {
        &self.mul
    }

    fn idx(&self, a: u8, b: u8) -> usize {
        a as usize * self.n as usize + b as usize
    }
}

impl Carrier for TableSemifield {
    type Elem = u8;

    fn eq(&self, a: &u8, b: &u8) -> bool {
        a == b
    }

    fn key(&self, a: &u8) -> Vec<u8> {
        vec![*a]
    }

    fn render(&self, a: &u8) -> String {
        a.to_string()
    }

    fn contains(&self, a: &u8) -> bool {
        *a < self.n
    }

    fn sample(&self, rng: &mut CaseRng) -> u8 {
        rng.random_range(0..self.n)
    }

    fn enumerate(&self) -> Option<Vec<u8>> {
        Some((0..self.n).collect())
    }
}

impl Literal for TableSemifield {
    fn parse(&self, s: &str) -> Result<u8> {
        match s.trim().parse::<u8>() {
            Ok(v) if v < self.n => Ok(v),
            _ => Err(Error::parse(
                s,
                format!("expected an element index below {}", self.n),
            )),
        }
    }
}

impl Semifield for TableSemifield {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn zero(&self) -> u8 {
        0
    }

    fn one(&self) -> u8 {
        1
    }

    fn add(&self, a: &u8, b: &u8) -> u8 {
        self.add[self.idx(*a, *b)]
    }

    fn mul(&self, a: &u8, b: &u8) -> u8 {
        self.mul[self.idx(*a, *b)]
    }

    fn inv(&self, a: &u8) -> Option<u8> {
        if *a == 0 {
            return None;
        }
        (1..self.n).find(|&b| self.mul(a, &b) == 1 && self.mul(&b, a) == 1)
    }

    fn claims(&self) -> Claims {
        self.claims
    }
}

/// The isomorphism classes found at one order.
#[derive(Clone, Debug)]
pub struct CensusOrder {
    pub order: u8,
    pub classes: Vec<TableSemifield>,
}

impl CensusOrder {
    pub fn names(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.name()).collect()
    }
}

impl fmt::Display for CensusOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.classes.is_empty() {
            write!(f, "n={}: (none)", self.order)
        } else {
            write!(f, "n={}: {}", self.order, self.names().join(", "))
        }
    }
}

/// All semifields of order `2..=max_order` up to isomorphism.
pub fn finite_census(max_order: u64) -> Result<Vec<CensusOrder>> {
    if !(2..=MAX_CENSUS_ORDER).contains(&max_order) {
        return Err(Error::CensusRefused(format!(
            "order must lie in 2..={MAX_CENSUS_ORDER}, got {max_order}"
        )));
    }
    (2..=max_order as u8).map(census_at).collect()
}

fn census_at(n: u8) -> Result<CensusOrder> {
    let placeholder = Claims {
        characteristic: Characteristic::Zero,
        strict: false,
        cancellative: false,
    };
    let mut found: BTreeMap<(Vec<u8>, Vec<u8>), ()> = BTreeMap::new();
    for group in group_tables(n - 1) {
        let mul = with_zero(n, &group);
        for f in functions(n) {
            let Some(add) = addition_from(n, &mul, &f) else {
                continue;
            };
            let candidate = TableSemifield::new("candidate", n, add, mul.clone(), placeholder)?;
            let report =
                check_semifield_axioms(&candidate, &Sampling::Exhaustive((0..n).collect()))?;
            if report.passed {
                found.insert(canonical_form(&candidate), ());
            }
        }
    }

    let mut classes = Vec::new();
    for (add, mul) in found.into_keys() {
        let mut t = TableSemifield::new("", n, add, mul, placeholder)?;
        let class = characteristic(&t, n as u64 + 1)?;
        let strict = !(0..n).any(|b| t.add(&1, &b) == 0);
        let cancellative = (0..n).all(|z| {
            let mut row: Vec<u8> = (0..n).map(|x| t.add(&x, &z)).collect();
            row.sort_unstable();
            row.dedup();
            row.len() == n as usize
        });
        t.claims = Claims {
            characteristic: match class {
                CharClass::One => Characteristic::One,
                CharClass::Prime(p) => Characteristic::Prime(p),
                CharClass::ZeroUpTo(_) => Characteristic::Zero,
            },
            strict,
            cancellative,
        };
        classes.push(t);
    }
    let rank = |t: &TableSemifield| match (t.claims.strict, t.claims.characteristic) {
        (false, _) => 0,
        (true, Characteristic::One) if t.n == 2 => 1,
        _ => 2,
    };
    classes.sort_by(|a, b| {
        rank(a)
            .cmp(&rank(b))
            .then_with(|| (&a.add, &a.mul).cmp(&(&b.add, &b.mul)))
    });
    let mut others = 0;
    for t in &mut classes {
        t.name = match rank(t) {
            0 => format!("F_{n}"),
            1 => "B".into(),
            _ => {
                others += 1;
                format!("S{n}.{others}")
            }
        };
    }
    Ok(CensusOrder { order: n, classes })
}

/// Group tables on `{0, ..., m-1}` with identity `0`, every labeling.
fn group_tables(m: u8) -> Vec<Vec<u8>> {
    let m = m as usize;
    let mut table = vec![u8::MAX; m * m];
    for i in 0..m {
        table[i] = i as u8;
        table[i * m] = i as u8;
    }
    let mut out = Vec::new();
    fill_latin(&mut table, m, 0, &mut out);
    out
}

fn fill_latin(table: &mut Vec<u8>, m: usize, pos: usize, out: &mut Vec<Vec<u8>>) {
    if pos == m * m {
        let associative = (0..m).all(|a| {
            (0..m).all(|b| {
                (0..m).all(|c| {
                    table[table[a * m + b] as usize * m + c]
                        == table[a * m + table[b * m + c] as usize]
                })
            })
        });
        if associative {
            out.push(table.clone());
        }
        return;
    }
    if table[pos] != u8::MAX {
        return fill_latin(table, m, pos + 1, out);
    }
    let (row, col) = (pos / m, pos % m);
    for v in 0..m as u8 {
        let clash = (0..m).any(|k| table[row * m + k] == v || table[k * m + col] == v);
        if !clash {
            table[pos] = v;
            fill_latin(table, m, pos + 1, out);
            table[pos] = u8::MAX;
        }
    }
}

/// Multiplication on `{0} ∪ G` with group element `g` stored as `g + 1`.
fn with_zero(n: u8, group: &[u8]) -> Vec<u8> {
    let n = n as usize;
    let m = n - 1;
    let mut mul = vec![0u8; n * n];
    for a in 1..n {
        for b in 1..n {
            mul[a * n + b] = group[(a - 1) * m + (b - 1)] + 1;
        }
    }
    mul
}

/// Every `f : F → F` with `f(0) = 1`.
fn functions(n: u8) -> impl Iterator<Item = Vec<u8>> {
    let n = n as usize;
    let total = n.pow(n as u32 - 1);
    (0..total).map(move |mut code| {
        let mut f = vec![1u8; n];
        for slot in f.iter_mut().skip(1) {
            *slot = (code % n) as u8;
            code /= n;
        }
        f
    })
}

/// `a + b = a · f(a⁻¹ b)` for `a ≠ 0` and `0 + b = b`; `None` when the
/// result is not symmetric.
fn addition_from(n: u8, mul: &[u8], f: &[u8]) -> Option<Vec<u8>> {
    let n = n as usize;
    let inv: Vec<usize> = (0..n)
        .map(|a| {
            if a == 0 {
                0
            } else {
                (1..n).find(|&b| mul[a * n + b] == 1).unwrap_or(0)
            }
        })
        .collect();
    let mut add = vec![0u8; n * n];
    for (b, slot) in add.iter_mut().take(n).enumerate() {
        *slot = b as u8;
    }
    for a in 1..n {
        for b in 0..n {
            let ratio = mul[inv[a] * n + b] as usize;
            add[a * n + b] = mul[a * n + f[ratio] as usize];
        }
    }
    (0..n)
        .all(|a| (0..n).all(|b| add[a * n + b] == add[b * n + a]))
        .then_some(add)
}

/// Smallest `(add, mul)` encoding over all relabelings fixing 0 and 1.
fn canonical_form(t: &TableSemifield) -> (Vec<u8>, Vec<u8>) {
    let n = t.n as usize;
    let mut best: Option<(Vec<u8>, Vec<u8>)> = None;
    let mut rest: Vec<u8> = (2..t.n).collect();
    permutations(&mut rest, 0, &mut |perm| {
        let mut sigma = vec![0u8, 1];
        sigma.extend_from_slice(perm);
        let mut inverse = vec![0u8; n];
        for (i, &s) in sigma.iter().enumerate() {
            inverse[s as usize] = i as u8;
        }
        let relabel = |table: &[u8]| -> Vec<u8> {
            let mut out = vec![0u8; n * n];
            for a in 0..n {
                for b in 0..n {
                    let (pa, pb) = (inverse[a] as usize, inverse[b] as usize);
                    out[a * n + b] = sigma[table[pa * n + pb] as usize];
                }
            }
            out
        };
        let cand = (relabel(&t.add), relabel(&t.mul));
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    });
    best.expect("at least the identity relabeling")
}

fn permutations(items: &mut [u8], k: usize, visit: &mut dyn FnMut(&[u8])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}
