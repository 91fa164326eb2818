//! Construction and certification of Fourier-invariant projections in
//! irrational rotation algebras.
//!
//! Given an irrational `theta` in (0,1) and a rational approximant `p/q` with
//! `|theta - p/q| < 1/q^2`, this crate builds — at exact-integer and
//! floating-point level — every finite object entering the construction of a
//! Fourier-invariant projection of trace `q|q*theta - p|`:
//!
//! * continued-fraction convergents, four-square decompositions, and the
//!   congruence data `(a, b, gamma, Delta)` making the associated diophantine
//!   system uniquely solvable ([`number_theory`]);
//! * the lattices `D`, `D_perp` in `R x Z_q x Z_q x dual`, their cocycle
//!   phase tables, and the exact phase polynomial of the module inner
//!   products ([`lattice`]);
//! * Jacobi theta values with certified truncation error, and the auxiliary
//!   sums entering the invertibility and centrality estimates ([`theta`]);
//! * the discrete Weil-type layer over `Z_q x Z_q`: Gaussian phase functions,
//!   exact lattice inner products, the DFT, and the intertwining unitary `W0`
//!   ([`finite_weil`]);
//! * the noncommutative coefficient series of the projection and JSON
//!   certificates for the invertibility, centrality, and cut-down bounds
//!   ([`projection`]);
//! * independent finite-dimensional spectral and brute-force oracles
//!   ([`oracle`]).
//!
//! All root-of-unity phases are tracked as exact rational exponents; the one
//! irrational phase parameter per series (`beta^2` or `q^2 alpha^2`) is kept
//! symbolic so that congruence and hermiticity claims are decided in integer
//! arithmetic, never in floating point.

pub mod error;
pub mod finite_weil;
pub mod lattice;
pub mod number_theory;
pub mod oracle;
pub mod projection;
pub mod theta;

pub use error::{Error, Result};
