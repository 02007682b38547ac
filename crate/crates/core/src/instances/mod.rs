//! Concrete semifields.

mod boolean;
mod dual;
mod lattice;
mod leading;
mod poly;
mod power;
mod prime;
mod ratfunc;
mod rationals;
mod registry;
mod tropical;

pub use boolean::Boolean;
pub use dual::{DualNumber, DualPositive};
pub use lattice::{IntegerLattice, LatticeOrder};
pub use leading::{LeadingTerm, LeadingTermSemifield};
pub use poly::{Poly, RationalFunction};
pub use power::RationalPower;
pub use prime::PrimeField;
pub use ratfunc::{PositiveRationalFunctions, RatFn};
pub use rationals::PositiveRationals;
pub use registry::{
    make_instance, make_lattice_group, registry, Instance, InstanceDescriptor, INSTANCE_NAMES,
};
pub use tropical::TropicalIntegers;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::algebra::CaseRng;

/// Small positive rational `n/d` with `1 ≤ n ≤ 6`, `1 ≤ d ≤ 4`.
pub(crate) fn sample_positive_rational(rng: &mut CaseRng) -> BigRational {
    BigRational::new(
        BigInt::from(rng.random_range(1..=6)),
        BigInt::from(rng.random_range(1..=4)),
    )
}

/// Small signed rational, zero included.
pub(crate) fn sample_rational(rng: &mut CaseRng) -> BigRational {
    BigRational::new(
        BigInt::from(rng.random_range(-6..=6)),
        BigInt::from(rng.random_range(1..=4)),
    )
}

pub(crate) fn sample_integer(rng: &mut CaseRng, radius: i64) -> BigInt {
    BigInt::from(rng.random_range(-radius..=radius))
}

/// True with probability `1/n`.
pub(crate) fn one_in(rng: &mut CaseRng, n: u32) -> bool {
    rng.random_range(0..n) == 0
}
