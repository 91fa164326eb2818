//! Lattice vectors in `G = M x dual(M)` for `M = R x Z_q x Z_q`, and the
//! Heisenberg cocycle.
//!
//! A vector is stored as `(x*s; u, v | y*s; w, z)` where `s` is the ambient
//! real scale (`alpha` for `D`, `beta` for `D_perp`), `x, y` are exact
//! rational multipliers of `s`, and `u, v, w, z` are mod-`q` classes.  The
//! cocycle is
//!
//! `h(a, b) = e( a.x * b.y * s^2  +  (a.u * b.w + a.v * b.z)/q )`,
//!
//! i.e. the pairing of the `M`-part of `a` with the `dual(M)`-part of `b`.
//! The `s^2` contribution stays symbolic in the [`PhaseExponent`].

use super::phase::{big_ratio, PhaseExponent};
use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeVector {
    /// Multiplier of the real scale in the `M`-part.
    pub x: BigRational,
    pub u: i128,
    pub v: i128,
    /// Multiplier of the real scale in the `dual(M)`-part.
    pub y: BigRational,
    pub w: i128,
    pub z: i128,
    pub q: i128,
}

impl LatticeVector {
    pub fn new(q: i128, x: i128, u: i128, v: i128, y: i128, w: i128, z: i128) -> Self {
        LatticeVector {
            x: big_ratio(x, 1),
            u,
            v,
            y: big_ratio(y, 1),
            w,
            z,
            q,
        }
    }

    pub fn scaled(&self, k: i128) -> Self {
        LatticeVector {
            x: &self.x * big_ratio(k, 1),
            u: self.u * k,
            v: self.v * k,
            y: &self.y * big_ratio(k, 1),
            w: self.w * k,
            z: self.z * k,
            q: self.q,
        }
    }

    pub fn add(&self, o: &LatticeVector) -> Self {
        assert_eq!(self.q, o.q);
        LatticeVector {
            x: &self.x + &o.x,
            u: self.u + o.u,
            v: self.v + o.v,
            y: &self.y + &o.y,
            w: self.w + o.w,
            z: self.z + o.z,
            q: self.q,
        }
    }

    /// Equality with the mod-q classes reduced.
    pub fn eq_mod_q(&self, o: &LatticeVector) -> bool {
        let q = self.q;
        self.q == o.q
            && self.x == o.x
            && self.y == o.y
            && (self.u - o.u).rem_euclid(q) == 0
            && (self.v - o.v).rem_euclid(q) == 0
            && (self.w - o.w).rem_euclid(q) == 0
            && (self.z - o.z).rem_euclid(q) == 0
    }
}

/// Heisenberg cocycle `h(a, b)`, exact.
pub fn cocycle(a: &LatticeVector, b: &LatticeVector) -> PhaseExponent {
    assert_eq!(a.q, b.q);
    let finite = big_ratio(a.u * b.w + a.v * b.z, a.q);
    let irr = &a.x * &b.y;
    PhaseExponent::new(finite, irr)
}

/// Commutation phase `h(a,b) * conj(h(b,a))`, the phase in
/// `pi_a pi_b = (this) pi_b pi_a`.
pub fn commutation(a: &LatticeVector, b: &LatticeVector) -> PhaseExponent {
    cocycle(a, b).add(&cocycle(b, a).conj())
}
