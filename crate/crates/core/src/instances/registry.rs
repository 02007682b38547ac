//! Named instances and the `name[:param]` descriptor syntax.

use std::fmt;
use std::str::FromStr;

use super::{
    Boolean, DualPositive, IntegerLattice, LatticeOrder, LeadingTermSemifield,
    PositiveRationalFunctions, PositiveRationals, PrimeField, RationalPower, TropicalIntegers,
};
use crate::algebra::{Characteristic, Semifield};
use crate::char_one::{semifield_from_lgroup, LatticeSemifield};
use crate::error::{Error, Result};

/// A parsed `name[:param]` together with the metadata the instance declares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceDescriptor {
    pub name: String,
    pub param: Option<u64>,
    pub characteristic: Characteristic,
    pub strict: bool,
    pub cancellative: bool,
}

pub const INSTANCE_NAMES: [&str; 10] = [
    "boolean",
    "fp",
    "qplus",
    "qplus-power",
    "tropical-z",
    "zn-coordinatewise",
    "z2-lex",
    "pos-rational-functions",
    "dual-positive",
    "leading-term",
];

impl InstanceDescriptor {
    pub fn parse(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::Descriptor {
            descriptor: s.to_string(),
            reason,
        };
        let (name, param) =
            match s.trim().split_once(':') {
                Some((n, p)) => (
                    n,
                    Some(p.parse::<u64>().map_err(|_| {
                        bad(format!("parameter `{p}` is not a nonnegative integer"))
                    })?),
                ),
                None => (s.trim(), None),
            };
        use Characteristic::{One, Prime, Zero};
        let (characteristic, strict, cancellative, param) = match (name, param) {
            ("boolean", None) => (One, true, false, None),
            ("fp", Some(p)) => {
                PrimeField::new(p).map_err(|_| bad(format!("{p} is not prime")))?;
                (Prime(p), false, true, Some(p))
            }
            ("fp", None) => return Err(bad("fp needs a prime parameter, e.g. fp:5".into())),
            ("qplus", None) => (Zero, true, true, None),
            ("qplus-power" | "zn-coordinatewise", Some(0)) => {
                return Err(bad("parameter must be at least 1".into()))
            }
            ("qplus-power", p) => (Zero, true, true, Some(p.unwrap_or(2))),
            ("tropical-z", None) => (One, true, false, None),
            ("zn-coordinatewise", p) => (One, true, false, Some(p.unwrap_or(2))),
            ("z2-lex", None) => (One, true, false, None),
            ("pos-rational-functions", None) => (Zero, true, true, None),
            ("dual-positive", None) => (Zero, true, true, None),
            ("leading-term", None) => (Zero, true, false, None),
            (n, Some(_)) if INSTANCE_NAMES.contains(&n) => {
                return Err(bad(format!("{n} takes no parameter")))
            }
            (n, _) => {
                return Err(bad(format!(
                    "unknown instance `{n}`; known: {}",
                    INSTANCE_NAMES.join(", ")
                )))
            }
        };
        Ok(InstanceDescriptor {
            name: name.to_string(),
            param,
            characteristic,
            strict,
            cancellative,
        })
    }
}

impl FromStr for InstanceDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for InstanceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param {
            Some(p) => write!(f, "{}:{p}", self.name),
            None => write!(f, "{}", self.name),
        }
    }
}

/// One descriptor per registered name, with default parameters
/// (`fp:5`, `qplus-power:2`, `zn-coordinatewise:2`).
pub fn registry() -> Vec<InstanceDescriptor> {
    [
        "boolean",
        "fp:5",
        "qplus",
        "qplus-power:2",
        "tropical-z",
        "zn-coordinatewise:2",
        "z2-lex",
        "pos-rational-functions",
        "dual-positive",
        "leading-term",
    ]
    .iter()
    .map(|s| InstanceDescriptor::parse(s).expect("registry descriptors are valid"))
    .collect()
}

/// A constructed instance. Use [`with_instance!`](crate::with_instance) to
/// run generic code on whichever variant it holds.
#[derive(Clone, Debug)]
pub enum Instance {
    Boolean(Boolean),
    Prime(PrimeField),
    Rationals(PositiveRationals),
    RationalPower(RationalPower),
    Tropical(TropicalIntegers),
    Coordinatewise(LatticeSemifield<IntegerLattice>),
    Lexicographic(LatticeSemifield<IntegerLattice>),
    RationalFunctions(PositiveRationalFunctions),
    Dual(DualPositive),
    LeadingTerm(LeadingTermSemifield),
}

pub fn make_instance(d: &InstanceDescriptor) -> Result<Instance> {
    let param = || d.param.expect("validated by the descriptor parser");
    let inst = match d.name.as_str() {
        "boolean" => Instance::Boolean(Boolean),
        "fp" => Instance::Prime(PrimeField::new(param())?),
        "qplus" => Instance::Rationals(PositiveRationals),
        "qplus-power" => Instance::RationalPower(RationalPower::new(param() as usize)?),
        "tropical-z" => Instance::Tropical(TropicalIntegers),
        "zn-coordinatewise" => Instance::Coordinatewise(semifield_from_lgroup(
            IntegerLattice::new(param() as usize, LatticeOrder::Coordinatewise),
        )),
        "z2-lex" => Instance::Lexicographic(semifield_from_lgroup(IntegerLattice::new(
            2,
            LatticeOrder::Lexicographic,
        ))),
        "pos-rational-functions" => Instance::RationalFunctions(PositiveRationalFunctions),
        "dual-positive" => Instance::Dual(DualPositive),
        "leading-term" => Instance::LeadingTerm(LeadingTermSemifield),
        other => {
            return Err(Error::Descriptor {
                descriptor: other.to_string(),
                reason: "unknown instance".into(),
            })
        }
    };
    let claims = crate::with_instance!(&inst, |f| f.claims());
    debug_assert_eq!(
        (claims.characteristic, claims.strict, claims.cancellative),
        (d.characteristic, d.strict, d.cancellative),
        "descriptor metadata out of sync with {d}"
    );
    Ok(inst)
}

/// Lattice-ordered groups by name: `trivial`, `z`, `zn:<n>`, `z2-lex`.
pub fn make_lattice_group(s: &str) -> Result<IntegerLattice> {
    match s.trim() {
        "trivial" => Ok(IntegerLattice::trivial()),
        "z" => Ok(IntegerLattice::integers()),
        "z2-lex" => Ok(IntegerLattice::new(2, LatticeOrder::Lexicographic)),
        t => t
            .strip_prefix("zn:")
            .and_then(|n| n.parse::<usize>().ok())
            .map(|n| IntegerLattice::new(n, LatticeOrder::Coordinatewise))
            .ok_or_else(|| Error::Descriptor {
                descriptor: s.to_string(),
                reason: "known groups: trivial, z, zn:<n>, z2-lex".into(),
            }),
    }
}

/// Runs a generic expression on the semifield inside an [`Instance`].
///
/// ```
/// use semifield::instances::{make_instance, InstanceDescriptor};
/// use semifield::algebra::Semifield;
///
/// let inst = make_instance(&"fp:7".parse::<InstanceDescriptor>().unwrap()).unwrap();
/// let name = semifield::with_instance!(&inst, |f| f.name());
/// assert_eq!(name, "fp:7");
/// ```
#[macro_export]
macro_rules! with_instance {
    ($inst:expr, |$f:ident| $body:expr) => {
        match $inst {
            $crate::instances::Instance::Boolean($f) => $body,
            $crate::instances::Instance::Prime($f) => $body,
            $crate::instances::Instance::Rationals($f) => $body,
            $crate::instances::Instance::RationalPower($f) => $body,
            $crate::instances::Instance::Tropical($f) => $body,
            $crate::instances::Instance::Coordinatewise($f) => $body,
            $crate::instances::Instance::Lexicographic($f) => $body,
            $crate::instances::Instance::RationalFunctions($f) => $body,
            $crate::instances::Instance::Dual($f) => $body,
            $crate::instances::Instance::LeadingTerm($f) => $body,
        }
    };
}
