//! Extended form class groups of imaginary quadratic fields.
//!
//! For a fundamental discriminant `d < -4` and a level `N >= 1`, the
//! primitive positive-definite forms of discriminant `d` with leading
//! coefficient prime to `N`, taken up to substitutions from the congruence
//! subgroup of SL2(Z) that is upper unitriangular mod `N` up to sign, form
//! an abelian group `C_N(d)` isomorphic to the ray class group of the field
//! modulo `N`. This crate enumerates these groups, implements their group
//! law through exact fractional-ideal arithmetic, projects between levels,
//! takes the ring-class quotient, and attaches to every class the integer
//! matrix describing its Galois action on level-`N` modular function values.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals,
//! canonical Hermite normal forms for ideals, and literal equality for every
//! comparison. No floating point anywhere.

pub mod arith;
pub mod classgroup;
pub mod error;
pub mod forms;
pub mod galois;
pub mod quadfield;

pub use arith::{crt, euler_phi, ext_gcd, hnf_lattice, kronecker, sl2_lift, HnfBasis, Mat2Z, ResiduePair};
pub use classgroup::{ClassGroup, FormClassRep, RingClassGroup};
pub use error::{Error, Result};
pub use forms::BQF;
pub use galois::ActionDatum;
pub use quadfield::{Field, FracIdeal, QuadNum};
