//! Exact root-of-unity phases with one symbolic irrational.
//!
//! A phase is `e(rat + irr * S)` where `e(t) = exp(2 pi i t)`, `rat` is an
//! exact rational reduced mod 1, and `irr` is an exact rational multiplier of
//! the ambient symbolic quantity `S` (`alpha^2` on the `D` side, `beta^2` on
//! the `D_perp` side; which one is fixed by context and never mixed).
//! Identities such as `lambda_12 = e(beta^2) * lambda_34^{c^2}` are checked
//! as exact exponent identities with `S` kept symbolic.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent of a unit phase: value `e(rat + irr * S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseExponent {
    rat: BigRational,
    irr: BigRational,
}

impl PhaseExponent {
    pub fn zero() -> Self {
        PhaseExponent { rat: BigRational::zero(), irr: BigRational::zero() }
    }

    pub fn new(rat: BigRational, irr: BigRational) -> Self {
        PhaseExponent { rat: reduce_mod_one(rat), irr }
    }

    /// `e(num/den)` with no symbolic part.
    pub fn rational(num: i128, den: i128) -> Self {
        assert!(den != 0);
        Self::new(big_ratio(num, den), BigRational::zero())
    }

    /// `e(k * S)` — a pure power of the symbolic irrational.
    pub fn irrational(mult_num: i128, mult_den: i128) -> Self {
        assert!(mult_den != 0);
        PhaseExponent { rat: BigRational::zero(), irr: big_ratio(mult_num, mult_den) }
    }

    pub fn rat(&self) -> &BigRational {
        &self.rat
    }

    pub fn irr(&self) -> &BigRational {
        &self.irr
    }

    /// Product of phases = sum of exponents.
    pub fn add(&self, other: &PhaseExponent) -> Self {
        PhaseExponent {
            rat: reduce_mod_one(&self.rat + &other.rat),
            irr: &self.irr + &other.irr,
        }
    }

    /// Complex conjugate = negated exponent.
    pub fn conj(&self) -> Self {
        PhaseExponent { rat: reduce_mod_one(-&self.rat), irr: -&self.irr }
    }

    /// Integer or rational power of the phase.
    pub fn scale(&self, k: &BigRational) -> Self {
        PhaseExponent { rat: reduce_mod_one(&self.rat * k), irr: &self.irr * k }
    }

    pub fn scale_int(&self, k: i128) -> Self {
        self.scale(&big_ratio(k, 1))
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    /// Numerical value given a numerical `S`.
    pub fn to_complex(&self, symbol_value: f64) -> Complex64 {
        let t = rational_f64(&self.rat) + rational_f64(&self.irr) * symbol_value;
        let ang = 2.0 * std::f64::consts::PI * t;
        Complex64::new(ang.cos(), ang.sin())
    }

    /// Exponent as `rat + irr * S` with `S` evaluated numerically, mod 1.
    pub fn to_f64_exponent(&self, symbol_value: f64) -> f64 {
        (rational_f64(&self.rat) + rational_f64(&self.irr) * symbol_value).rem_euclid(1.0)
    }
}

pub fn big_ratio(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_f64(r: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).expect("finite rational")
}

fn reduce_mod_one(r: BigRational) -> BigRational {
    let f = r.floor();
    let out = r - f;
    debug_assert!(!out.is_negative() && out < BigRational::one());
    out
}
