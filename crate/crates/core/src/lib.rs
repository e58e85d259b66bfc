//! Interval neutrosophic sets.
//!
//! Every element of a universe carries three independent membership
//! intervals inside `[0, 1]`: truth, indeterminacy and falsity. This crate
//! provides
//!
//! * the value types ([`UnitInterval`], [`NeutrosophicValue`], [`InsSet`])
//!   and the set operators on them ([`ops`]);
//! * randomised checks of the algebraic laws those operators satisfy
//!   ([`laws`]);
//! * membership functions over `R^n` with sampled convexity checks
//!   ([`convexity`]);
//! * a text format for sets and a small expression language ([`dsl`]).
//!
//! ```
//! use ins_core::sample::{example_a, example_b};
//!
//! let a = example_a();
//! let b = example_b();
//! let u = a.union(&b).unwrap();
//! assert!(a.is_contained_in(&u).unwrap());
//! assert!(b.is_contained_in(&u).unwrap());
//! ```

pub mod convexity;
pub mod dsl;
mod error;
mod interval;
pub mod laws;
pub mod ops;
pub mod random;
pub mod sample;
mod set;
mod value;

pub use error::InsError;
pub use interval::UnitInterval;
pub use ops::cartesian_product;
pub use set::{DiscreteIns, InsSet, Label, PairLabel, PairedIns};
pub use value::{Endpoint, NeutrosophicValue};
