//! Exact invariants of isolated hypersurface singularities.
//!
//! The crate is split into four layers:
//!
//! * [`polycore`]: rationals, sparse polynomials, the operators `P` and `P~`,
//!   and closed-form spectra of weighted homogeneous germs.
//! * [`newton`]: Newton polyhedra, filtration orders, non-degeneracy.
//! * [`localalg`]: truncated local algebra (Milnor and Tjurina algebras).
//! * [`hodge`]: Hodge ideals, the `V_HI` filtration and the derived spectra.

pub mod error;
pub mod hodge;
pub mod localalg;
pub mod newton;
pub mod polycore;

pub use error::{Error, Result};
pub use polycore::{Monomial, Polynomial, Rational, Spectrum, WeightSystem};
