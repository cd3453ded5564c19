//! Exact arithmetic: rationals, sparse polynomials, differential operators, spectra.

pub mod ops;
pub mod parse;
mod poly;
mod rational;
pub mod spectrum;

pub use ops::{eval_symbolic, op_p, op_p_symbolic_step, op_p_tilde, op_p_tilde_symbolic};
pub use parse::{infer_variables, parse_polynomial, ParseError};
pub use poly::{Monomial, Polynomial};
pub use rational::{ParseRationalError, Rational};
pub use spectrum::{hilbert_poincare_identity_holds, spectrum_product_formula, spectrum_t, Spectrum, WeightSystem};
