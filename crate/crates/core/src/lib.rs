//! Exact-arithmetic semifields: axiom checking, characteristic detection,
//! the characteristic-one correspondence with lattice-ordered groups, the
//! Grothendieck ring of a cancellative semifield, and the formal-sum
//! quotient `Q(F) → F`.
//!
//! ```
//! use semifield::prelude::*;
//!
//! let f = TropicalIntegers;
//! let report = check_semifield_axioms(&f, &Sampling::random(0, 200)).unwrap();
//! assert!(report.passed);
//! assert_eq!(characteristic(&f, 64).unwrap(), CharClass::One);
//! ```

pub mod algebra;
pub mod axioms;
pub mod census;
pub mod char_one;
pub mod check;
pub mod error;
pub mod grothendieck;
pub mod instances;
pub mod quotient;
pub mod rational;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::algebra::{
        Carrier, CharClass, Characteristic, Claims, Literal, Positivity, Semifield,
    };
    pub use crate::axioms::{
        cancellativity_probe, characteristic, check_semifield_axioms, scalar_action, torsion_probe,
        DEFAULT_CHAR_BOUND,
    };
    pub use crate::check::{default_sampling, Report, Sampling, Witness};
    pub use crate::error::{Error, Result};
    pub use crate::instances::*;
    pub use crate::rational::PositiveRational;
}
