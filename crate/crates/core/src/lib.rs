//! Composable optics over a dynamic value universe.
//!
//! The crate provides the concrete optic families (adapters, lenses, prisms,
//! setters, achromatic lenses, optionals), isomorphism optics built from
//! container shapes, profunctor optics built by dictionary passing, the
//! conversions between all three, and executable law suites with
//! exhaustive oracles over finite domains.
//!
//! ```
//! use opticat_core::families::{first, just, OpticFamily};
//! use opticat_core::value::{Either, Value};
//!
//! let first_of_4 = first().compose(&first()).compose(&first());
//! let s: Value = (((1, 2), "hi"), 4).into();
//! assert_eq!(first_of_4.put(&Value::int(42), &s).unwrap(), (((42, 2), "hi"), 4).into());
//!
//! let justjust = just().compose(&just());
//! let nested = Value::just(Value::Nothing);
//! assert_eq!(justjust.matching(&nested).unwrap(), Either::Left(nested.clone()));
//! ```

pub mod encode;
pub mod error;
pub mod families;
pub mod finite;
pub mod functors;
pub mod iso;
pub mod laws;
pub mod prof;
pub mod value;

pub use error::{OpticError, Result};
pub use value::{Either, Func, Value};
