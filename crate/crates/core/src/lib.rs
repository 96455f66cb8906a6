//! Demazure products on finite Coxeter groups and the commutative monoid they
//! induce on subsets of the generating set.
//!
//! The group is built from an exact root system (integers, or golden integers
//! for `H3`/`H4`); elements are root permutations. On top of that sit the
//! Demazure product `x * y`, the downward action `x |> y`, and the face
//! monoid product `J1 ⋆ J2` defined by
//! `(w_0^{J1} w_0) * (w_0^{J2} w_0) = w_0^{J1 ⋆ J2} w_0`.
//!
//! ```
//! use coxstar::{CoxeterGroup, SubsetJ, facemonoid};
//!
//! let a3 = CoxeterGroup::parse("A3").unwrap();
//! let j1 = SubsetJ::parse("1,2", 3).unwrap();
//! let j2 = SubsetJ::parse("2,3", 3).unwrap();
//! assert_eq!(facemonoid::star_sets(&a3, j1, j2).unwrap().to_string(), "2");
//! ```

pub mod demazure;
pub mod diagram;
pub mod element;
pub mod emit;
pub mod error;
pub mod facemonoid;
pub mod oracle;
pub mod properties;
pub mod rootsys;
pub mod scalar;
pub mod subset;

pub use diagram::{CoxeterDiagram, IrreducibleType};
pub use element::{CoxeterGroup, Element, Word};
pub use error::{Error, Result};
pub use subset::SubsetJ;
