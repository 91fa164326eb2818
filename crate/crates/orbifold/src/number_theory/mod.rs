//! Exact-integer foundations: continued fractions, four squares, Bezout
//! data, and the constructive coprimality selections.

pub mod cf;
pub mod phase;
pub mod real;
pub mod squares;

pub use cf::{
    check_approximation, convergents, gdelta_scan, synthetic_convergent, synthetic_theta_above,
    Convergent, GdeltaHit,
};
pub use phase::{
    coprime_shift, ext_gcd, mod_inverse, quadratic_coprime, select_phase, select_phase_with,
    PhaseSelection, WitnessStrategy,
};
pub use real::{RationalInterval, ThetaSpec};
pub use squares::{abc, abc_identity_holds, four_square, AbcTriple, FourSquare};
