//! Exact arithmetic in rational group algebras `QG` with oriented
//! involutions, and constructions of Cayley unitary elements.
//!
//! * [`groups`]: finite groups as multiplication tables, orientations.
//! * [`algebra`]: elements of `QG`, products, involutions.
//! * [`linalg`]: regular representation and the exact inverse oracle.
//! * [`skew`]: the skew-symmetric generators `L1`, `L2`, `L3`.
//! * [`sequences`]: the coefficient sequences of the closed-form inverses.
//! * [`cayley`]: closed-form and generic Cayley transforms, membership tests.
//! * [`sweep`]: batch closed-form vs. oracle comparison over the catalog.

pub mod algebra;
pub mod cayley;
pub mod error;
pub mod exec;
pub mod groups;
pub mod linalg;
pub mod rational;
pub mod sampling;
pub mod sequences;
pub mod skew;
pub mod sweep;

pub use algebra::AlgebraElement;
pub use cayley::{CayleyResult, Method};
pub use error::{Error, Result};
pub use exec::Exec;
pub use groups::{FiniteGroup, Orientation};
pub use rational::Rational;
pub use skew::{SkewGenerator, SkewKind};
