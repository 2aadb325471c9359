//! Exact computations with extended submodular functions.
//!
//! A function `z : 2^I → ℚ ∪ {∞}` with `z(∅) = 0`, `z(I)` finite and
//! `z(S) + z(T) ≥ z(S ∪ T) + z(S ∩ T)` cuts out a polyhedron `Π(z)`, an
//! extended generalized permutahedron. Its nonempty faces correspond to the
//! preorders on `I` that conform to `z`. This crate enumerates those preorders,
//! builds the faces, realizes the coproducts relating submodular functions,
//! modular functions and preorders as exact formal sums, and computes the
//! canonical polynomial invariant `χ(z)`.
//!
//! ```
//! use egpkit::{conform, generators, value::int};
//!
//! let hexagon = generators::permutahedron(&[int(3), int(2), int(1)]).unwrap();
//! let lattice = conform::enumerate_faces(&hexagon, &Default::default()).unwrap();
//! assert_eq!(lattice.f_vector(), vec![6, 6, 1]);
//! ```

pub mod conform;
pub mod corpus;
pub mod error;
pub mod exec;
pub mod extfun;
pub mod generators;
pub mod geometry;
pub mod ground;
pub mod hopf;
pub mod invariants;
pub mod poly;
pub mod preorder;
pub mod value;

pub use error::{Error, Result};
pub use exec::Exec;
pub use extfun::SubmodFn;
pub use ground::{GroundSet, Limits, Partition, Subset};
pub use poly::RationalPoly;
pub use preorder::Preorder;
pub use value::{ExtValue, Rational};
