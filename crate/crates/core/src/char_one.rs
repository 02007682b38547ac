//! Characteristic one: semifields with `1 + 1 = 1` against lattice-ordered
//! groups.
//!
//! From a semifield `F` the nonzero elements form a group under `×`, ordered
//! by the cone `F⁺ = {x : 1 + x = x}`, with `+` as join. Conversely a
//! lattice-ordered group with an absorbing bottom adjoined is a semifield
//! with `+ = join` and `× = op`.

use std::fmt;

use crate::algebra::{
    require_nonzero, Carrier, CaseRng, Characteristic, Claims, Literal, Semifield,
};
use crate::axioms::{characteristic, DEFAULT_CHAR_BOUND};
use crate::check::{run_cases, Report, Sampling};
use crate::error::{Error, Result};

/// A group with a translation-invariant partial order in which every pair
/// has a least upper bound.
pub trait LatticeGroup: Carrier {
    fn name(&self) -> String;

    fn identity(&self) -> Self::Elem;

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn inverse(&self, a: &Self::Elem) -> Self::Elem;

    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
}

pub fn is_char_one<S: Semifield + ?Sized>(f: &S) -> bool {
    let one = f.one();
    f.eq(&f.add(&one, &one), &one)
}

fn require_char_one<S: Semifield + ?Sized>(f: &S) -> Result<()> {
    if is_char_one(f) {
        return Ok(());
    }
    let found = characteristic(f, DEFAULT_CHAR_BOUND)
        .map(|c| c.to_string())
        .unwrap_or_else(|e| e.to_string());
    Err(Error::UnsupportedCharacteristic {
        instance: f.name(),
        found,
    })
}

/// `x ∈ F⁺`, tested as `1 + x = x`.
pub fn is_positive<S: Semifield + ?Sized>(f: &S, x: &S::Elem) -> Result<bool> {
    require_nonzero(f, x, "positivity")?;
    require_char_one(f)?;
    Ok(f.eq(&f.add(&f.one(), x), x))
}

/// The positive cone `F⁺` of a characteristic-one semifield.
pub struct PositiveCone<'a, S> {
    field: &'a S,
}

impl<'a, S: Semifield> PositiveCone<'a, S> {
    pub fn new(field: &'a S) -> Result<Self> {
        require_char_one(field)?;
        Ok(PositiveCone { field })
    }

    /// Nonzero `x` with `1 + x = x`.
    pub fn contains(&self, x: &S::Elem) -> bool {
        let f = self.field;
        !f.is_zero(x) && f.eq(&f.add(&f.one(), x), x)
    }
}

/// The four cone conditions on sampled `(x, y, a)`: `1 ∈ F⁺`; `x, x⁻¹ ∈ F⁺`
/// only for `x = 1`; closure under conjugation `a⁻¹·x·a`; closure under `+`.
pub fn check_cone_laws<S: Semifield>(f: &S, sampling: &Sampling<'_, S::Elem>) -> Result<Report> {
    let cone = PositiveCone::new(f)?;
    let one = f.one();
    if !cone.contains(&one) {
        return Ok(Report::fail(0, "cone-contains-one", vec![f.render(&one)]));
    }
    run_cases(f, &f.name(), sampling, 3, |t| {
        let (x, y, a) = (&t[0], &t[1], &t[2]);
        if f.is_zero(x) {
            return None;
        }
        let xi = f.inv(x)?;
        if cone.contains(x) && cone.contains(&xi) && !f.eq(x, &one) {
            return Some(("cone-antisymmetric", vec![x.clone()]));
        }
        if cone.contains(x) {
            if let Some(ai) = f.inv(a) {
                if !cone.contains(&f.mul(&f.mul(&ai, x), a)) {
                    return Some(("cone-conjugation", vec![x.clone(), a.clone()]));
                }
            }
            if cone.contains(y) && !cone.contains(&f.add(x, y)) {
                return Some(("cone-additive", vec![x.clone(), y.clone()]));
            }
        }
        None
    })
}

/// `(1 + x = x) ⇔ (1 + x⁻¹ = 1)` on sampled nonzero `x`.
pub fn check_positivity_forms<S: Semifield>(
    f: &S,
    sampling: &Sampling<'_, S::Elem>,
) -> Result<Report> {
    require_char_one(f)?;
    let one = f.one();
    run_cases(f, &f.name(), sampling, 1, |t| {
        let x = &t[0];
        let xi = f.inv(x)?;
        let absorbs = f.eq(&f.add(&one, x), x);
        let dual = f.eq(&f.add(&one, &xi), &one);
        (absorbs != dual).then(|| ("positivity-forms", vec![x.clone()]))
    })
}

/// The lattice-ordered group carried by the nonzero elements of a
/// characteristic-one semifield.
#[derive(Clone, Debug)]
pub struct ExtractedGroup<S> {
    field: S,
}

pub fn extract_lgroup<S: Semifield>(field: S) -> Result<ExtractedGroup<S>> {
    require_char_one(&field)?;
    Ok(ExtractedGroup { field })
}

impl<S: Semifield> ExtractedGroup<S> {
    pub fn field(&self) -> &S {
        &self.field
    }
}

impl<S: Semifield> Carrier for ExtractedGroup<S> {
    type Elem = S::Elem;

    fn eq(&self, a: &S::Elem, b: &S::Elem) -> bool {
        self.field.eq(a, b)
    }

    fn key(&self, a: &S::Elem) -> Vec<u8> {
        self.field.key(a)
    }

    fn render(&self, a: &S::Elem) -> String {
        self.field.render(a)
    }

    fn contains(&self, a: &S::Elem) -> bool {
        self.field.contains(a) && !self.field.is_zero(a)
    }

    fn sample(&self, rng: &mut CaseRng) -> S::Elem {
        for _ in 0..64 {
            let x = self.field.sample(rng);
            if !self.field.is_zero(&x) {
                return x;
            }
        }
        self.field.one()
    }

    fn enumerate(&self) -> Option<Vec<S::Elem>> {
        self.field
            .enumerate()
            .map(|all| all.into_iter().filter(|x| !self.field.is_zero(x)).collect())
    }
}

impl<S: Semifield> LatticeGroup for ExtractedGroup<S> {
    fn name(&self) -> String {
        format!("group({})", self.field.name())
    }

    fn identity(&self) -> S::Elem {
        self.field.one()
    }

    fn op(&self, a: &S::Elem, b: &S::Elem) -> S::Elem {
        self.field.mul(a, b)
    }

    fn inverse(&self, a: &S::Elem) -> S::Elem {
        self.field.inv(a).expect("group elements are nonzero")
    }

    fn join(&self, a: &S::Elem, b: &S::Elem) -> S::Elem {
        self.field.add(a, b)
    }

    /// `x ≤ y ⇔ y·x⁻¹ ∈ F⁺`.
    fn leq(&self, x: &S::Elem, y: &S::Elem) -> bool {
        let f = &self.field;
        let ratio = f.mul(y, &self.inverse(x));
        f.eq(&f.add(&f.one(), &ratio), &ratio)
    }
}

/// `{0} ∪ G` with `+ = join` and `× = op`, zero absorbing. `None` is the
/// adjoined zero.
#[derive(Clone, Debug)]
pub struct LatticeSemifield<G> {
    group: G,
}

/// The group should satisfy [`check_lattice_group_axioms`]; nothing is
/// verified here.
pub fn semifield_from_lgroup<G: LatticeGroup>(group: G) -> LatticeSemifield<G> {
    LatticeSemifield { group }
}

impl<G: LatticeGroup> LatticeSemifield<G> {
    pub fn group(&self) -> &G {
        &self.group
    }
}

impl<G: LatticeGroup> Carrier for LatticeSemifield<G> {
    type Elem = Option<G::Elem>;

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        match (a, b) {
            (None, None) => true,
            (Some(x), Some(y)) => self.group.eq(x, y),
            _ => false,
        }
    }

    fn key(&self, a: &Self::Elem) -> Vec<u8> {
        match a {
            None => vec![0],
            Some(x) => {
                let mut k = vec![1];
                k.extend(self.group.key(x));
                k
            }
        }
    }

    fn render(&self, a: &Self::Elem) -> String {
        match a {
            None => "-inf".into(),
            Some(x) => self.group.render(x),
        }
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        a.as_ref().is_none_or(|x| self.group.contains(x))
    }

    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        if crate::instances::one_in(rng, 8) {
            None
        } else {
            Some(self.group.sample(rng))
        }
    }

    fn enumerate(&self) -> Option<Vec<Self::Elem>> {
        let group = self.group.enumerate()?;
        Some(
            std::iter::once(None)
                .chain(group.into_iter().map(Some))
                .collect(),
        )
    }
}

impl<G: LatticeGroup + Literal> Literal for LatticeSemifield<G> {
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        match s.trim() {
            "-inf" => Ok(None),
            t => self.group.parse(t).map(Some),
        }
    }
}

impl<G: LatticeGroup> Semifield for LatticeSemifield<G> {
    fn name(&self) -> String {
        self.group.name()
    }

    fn zero(&self) -> Self::Elem {
        None
    }

    fn one(&self) -> Self::Elem {
        Some(self.group.identity())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        match (a, b) {
            (None, x) | (x, None) => x.clone(),
            (Some(x), Some(y)) => Some(self.group.join(x, y)),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Some(self.group.op(a.as_ref()?, b.as_ref()?))
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        a.as_ref().map(|x| Some(self.group.inverse(x)))
    }

    fn claims(&self) -> Claims {
        Claims {
            characteristic: Characteristic::One,
            strict: true,
            cancellative: false,
        }
    }
}

/// Group laws, partial-order laws, conjugation invariance of positivity,
/// join as least upper bound, and two-sided translation invariance, on
/// sampled `(x, y, z, w)`.
pub fn check_lattice_group_axioms<G: LatticeGroup>(
    g: &G,
    sampling: &Sampling<'_, G::Elem>,
) -> Result<Report> {
    let id = g.identity();
    run_cases(g, &g.name(), sampling, 4, |t| {
        let (x, y, z, w) = (&t[0], &t[1], &t[2], &t[3]);
        let e = |a: &G::Elem, b: &G::Elem| g.eq(a, b);
        let xy = g.op(x, y);
        let j = g.join(x, y);
        let xi = g.inverse(x);
        if [&xy, &j, &xi].iter().any(|r| !g.contains(r)) {
            return Some(("closure", vec![x.clone(), y.clone()]));
        }
        if !e(&g.op(&xy, z), &g.op(x, &g.op(y, z))) {
            return Some(("op-associative", vec![x.clone(), y.clone(), z.clone()]));
        }
        if !e(&g.op(x, &id), x) || !e(&g.op(&id, x), x) {
            return Some(("identity", vec![x.clone()]));
        }
        if !e(&g.op(x, &xi), &id) || !e(&g.op(&xi, x), &id) {
            return Some(("inverse", vec![x.clone()]));
        }
        if !g.leq(x, x) {
            return Some(("reflexive", vec![x.clone()]));
        }
        if g.leq(x, y) && g.leq(y, x) && !e(x, y) {
            return Some(("antisymmetric", vec![x.clone(), y.clone()]));
        }
        if g.leq(x, y) && g.leq(y, z) && !g.leq(x, z) {
            return Some(("transitive", vec![x.clone(), y.clone(), z.clone()]));
        }
        if g.leq(&id, x) && !g.leq(&id, &g.op(&g.op(&g.inverse(z), x), z)) {
            return Some(("conjugation", vec![x.clone(), z.clone()]));
        }
        if !g.leq(x, &j) || !g.leq(y, &j) {
            return Some(("join-upper-bound", vec![x.clone(), y.clone()]));
        }
        for ub in [z, w] {
            if g.leq(x, ub) && g.leq(y, ub) && !g.leq(&j, ub) {
                return Some(("join-least", vec![x.clone(), y.clone(), ub.clone()]));
            }
        }
        if g.leq(x, y) && !g.leq(&g.op(&g.op(z, x), w), &g.op(&g.op(z, y), w)) {
            return Some((
                "translation-invariant",
                vec![x.clone(), y.clone(), z.clone(), w.clone()],
            ));
        }
        None
    })
}

/// Covering relation of the extracted order on a finite set of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    pub nodes: Vec<String>,
    /// `(lower, upper)` pairs.
    pub edges: Vec<(String, String)>,
}

impl fmt::Display for HasseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.nodes {
            writeln!(f, "node {n}")?;
        }
        for (a, b) in &self.edges {
            writeln!(f, "edge {a} {b}")?;
        }
        Ok(())
    }
}

/// Nodes in input order (duplicates dropped); an edge `x → y` when `x < y`
/// and no listed `z` lies strictly between.
pub fn hasse_diagram<S: Semifield>(f: &S, elements: &[S::Elem]) -> Result<HasseDiagram> {
    require_char_one(f)?;
    let mut distinct: Vec<&S::Elem> = Vec::new();
    for x in elements {
        require_nonzero(f, x, "hasse diagram")?;
        if !distinct.iter().any(|y| f.eq(x, y)) {
            distinct.push(x);
        }
    }
    let cone = PositiveCone::new(f)?;
    let below = |x: &S::Elem, y: &S::Elem| {
        let xi = f.inv(x).expect("nonzero");
        !f.eq(x, y) && cone.contains(&f.mul(y, &xi))
    };
    let mut edges = Vec::new();
    for x in &distinct {
        for y in &distinct {
            if below(x, y) && !distinct.iter().any(|z| below(x, z) && below(z, y)) {
                edges.push((f.render(x), f.render(y)));
            }
        }
    }
    Ok(HasseDiagram {
        nodes: distinct.iter().map(|x| f.render(x)).collect(),
        edges,
    })
}

/// Round trip from a group: the group extracted from
/// [`semifield_from_lgroup`] agrees with `g` on `op`, `join` and `leq` for
/// sampled pairs.
pub fn check_group_round_trip<G: LatticeGroup + Clone>(
    g: &G,
    sampling: &Sampling<'_, G::Elem>,
) -> Result<Report> {
    let back = extract_lgroup(semifield_from_lgroup(g.clone()))?;
    run_cases(g, &g.name(), sampling, 2, |t| {
        let (x, y) = (&t[0], &t[1]);
        let (sx, sy) = (Some(x.clone()), Some(y.clone()));
        let same = |a: &Option<G::Elem>, b: &G::Elem| a.as_ref().is_some_and(|a| g.eq(a, b));
        if !same(&back.op(&sx, &sy), &g.op(x, y)) {
            return Some(("round-trip-op", vec![x.clone(), y.clone()]));
        }
        if !same(&back.join(&sx, &sy), &g.join(x, y)) {
            return Some(("round-trip-join", vec![x.clone(), y.clone()]));
        }
        if back.leq(&sx, &sy) != g.leq(x, y) {
            return Some(("round-trip-leq", vec![x.clone(), y.clone()]));
        }
        None
    })
}

/// Round trip from a semifield: the semifield synthesized from the extracted
/// group has the same `+` and `×` as `f` on sampled pairs, with `0` sent to
/// the adjoined zero.
pub fn check_field_round_trip<S: Semifield + Clone>(
    f: &S,
    sampling: &Sampling<'_, S::Elem>,
) -> Result<Report> {
    let back = semifield_from_lgroup(extract_lgroup(f.clone())?);
    let lift = |x: &S::Elem| (!f.is_zero(x)).then(|| x.clone());
    run_cases(f, &f.name(), sampling, 2, |t| {
        let (x, y) = (&t[0], &t[1]);
        let (lx, ly) = (lift(x), lift(y));
        if !back.eq(&back.add(&lx, &ly), &lift(&f.add(x, y))) {
            return Some(("round-trip-add", vec![x.clone(), y.clone()]));
        }
        if !back.eq(&back.mul(&lx, &ly), &lift(&f.mul(x, y))) {
            return Some(("round-trip-mul", vec![x.clone(), y.clone()]));
        }
        None
    })
}

/// `a·join(x, y)·b = join(a·x·b, a·y·b)` on sampled `(a, x, y, b)`.
pub fn check_join_translation<G: LatticeGroup>(
    g: &G,
    sampling: &Sampling<'_, G::Elem>,
) -> Result<Report> {
    run_cases(g, &g.name(), sampling, 4, |t| {
        let (a, x, y, b) = (&t[0], &t[1], &t[2], &t[3]);
        let around = |m: &G::Elem| g.op(&g.op(a, m), b);
        (!g.eq(&around(&g.join(x, y)), &g.join(&around(x), &around(y))))
            .then(|| ("join-translation", t.to_vec()))
    })
}
