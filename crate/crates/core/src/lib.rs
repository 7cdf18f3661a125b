//! Exact tools for Horn inequalities and Schubert calculus on Grassmannians.
//!
//! The crate has three layers:
//!
//! * [`combinatorics`] and [`horn`]: subset arithmetic, expected dimensions and
//!   the memoized inductive Horn recursion.
//! * [`field`], [`matrix`], [`flag`], [`hn`]: dense linear algebra over exact
//!   fields, Schubert positions of subspaces, induced flags, cell sampling and
//!   an exhaustive Harder-Narasimhan search over small prime fields.
//! * [`tangent`], [`kirwan`], [`variational`]: randomized certification of
//!   intersecting tuples through the tangent map, the determinant function,
//!   Kirwan-cone membership and Littlewood-Richardson nonvanishing.
//!
//! All subsets are 1-based throughout, in storage as well as on the wire.

pub mod combinatorics;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod flag;
pub mod hn;
pub mod horn;
pub mod io;
pub mod kirwan;
pub mod matrix;
pub mod rng;
pub mod tangent;
pub mod variational;

pub use combinatorics::{enumerate_subsets, enumerate_tuples, slope, CardSubset, PositionTuple, Weight};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals, Sqrt5, Sqrt5Field};
pub use flag::{Flag, SubspaceBasis};
pub use horn::{HornEntry, HornTable, HornVerdict, Violation};
pub use matrix::Mat;
