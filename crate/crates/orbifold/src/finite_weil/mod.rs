//! The discrete layer over `M0 = Z_q x Z_q`: Gaussian phase functions,
//! exact lattice inner products, the two-dimensional DFT, the intertwining
//! unitary `W0`, and the finite Fourier automorphism.
//!
//! Discrete lattice bases (rows are `(m-part | dual-part)` in `Z_q^4`):
//!
//! ```text
//! D0:      eps1   = ( p1,  p2 |  p3,  p4)      D0_perp: delta3 = (p2, -p1 | -p4,  p3)
//!          eps2   = (-p3, -p4 |  p1,  p2)               delta4 = (p4, -p3 |  p2, -p1)
//! ```
//!
//! Conventions fixed once and used everywhere:
//!
//! * pairing `<(n,m), (s,t)> = e((n s + m t)/q)`;
//! * Heisenberg representation `[pi_{(a,s)} f](n) = <n, s> f(n + a)` on
//!   `L^2(Z_q^2)` with counting measure;
//! * DFT `fhat(s,t) = (1/q) sum_{n,m} e((n s + m t)/q) f(n,m)` (unitary);
//! * right module action of an operator word on a function = apply the
//!   word's operator (see [`operator`] for the order bookkeeping).

pub mod operator;
pub mod rootsum;

pub use operator::{
    clock_shift_rep, finite_projection_probe, inner_d0, inner_d0perp, inner_d0perp_exact,
    right_apply, sigma0_prime, trace_d0, trace_d0perp, w0, D0Operator, D0PerpOperator,
    DiscreteVector, ProbeReport,
};
pub use rootsum::RootSum;

use num_complex::Complex64;

use crate::number_theory::{FourSquare, PhaseSelection};
use crate::{Error, Result};

/// A complex function on `Z_q x Z_q` (row index `n`, column index `m`).
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicFunction {
    pub q: usize,
    values: Vec<Complex64>,
}

impl CyclicFunction {
    pub fn new(q: usize, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != q * q {
            return Err(Error::SizeMismatch(format!(
                "expected {} values for q = {q}, got {}",
                q * q,
                values.len()
            )));
        }
        Ok(CyclicFunction { q, values })
    }

    pub fn zero(q: usize) -> Self {
        CyclicFunction { q, values: vec![Complex64::new(0.0, 0.0); q * q] }
    }

    pub fn delta(q: usize, n: i64, m: i64) -> Self {
        let mut f = Self::zero(q);
        *f.at_mut(n, m) = Complex64::new(1.0, 0.0);
        f
    }

    #[inline]
    pub fn at(&self, n: i64, m: i64) -> Complex64 {
        let q = self.q as i64;
        self.values[(n.rem_euclid(q) * q + m.rem_euclid(q)) as usize]
    }

    #[inline]
    pub fn at_mut(&mut self, n: i64, m: i64) -> &mut Complex64 {
        let q = self.q as i64;
        &mut self.values[(n.rem_euclid(q) * q + m.rem_euclid(q)) as usize]
    }

    pub fn scale(&self, c: Complex64) -> Self {
        CyclicFunction { q: self.q, values: self.values.iter().map(|v| v * c).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.q, o.q);
        CyclicFunction {
            q: self.q,
            values: self.values.iter().zip(&o.values).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.q, o.q);
        CyclicFunction {
            q: self.q,
            values: self.values.iter().zip(&o.values).map(|(a, b)| a - b).collect(),
        }
    }

    /// L2 norm with counting measure.
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `(self, other) = sum conj(self) * other`.
    pub fn dot(&self, o: &Self) -> Complex64 {
        assert_eq!(self.q, o.q);
        self.values.iter().zip(&o.values).map(|(a, b)| a.conj() * b).sum()
    }
}

pub fn root_of_unity(q: usize, exponent: i64) -> Complex64 {
    let ang = 2.0 * std::f64::consts::PI * exponent.rem_euclid(q as i64) as f64 / q as f64;
    Complex64::new(ang.cos(), ang.sin())
}

/// Exponent table of the Gaussian phase function
/// `phi(n,m) = e([a n^2 + b n m + gamma m^2]/q)`, exact mod q.
pub fn gaussian_phi_exponents(a: i128, b: i128, gamma: i128, q: usize) -> Vec<i64> {
    let qi = q as i128;
    let mut t = vec![0i64; q * q];
    for n in 0..q as i128 {
        for m in 0..q as i128 {
            let e = (a * n * n + b * n * m + gamma * m * m).rem_euclid(qi);
            t[(n * qi + m) as usize] = e as i64;
        }
    }
    t
}

/// The Gaussian phase function attached to a phase selection, as a complex
/// table of exact roots of unity.  Values have modulus one; the optional
/// normalization below rescales so that the zero coefficient of
/// `< phi, phi >_{D0_perp}` is one.
pub fn gaussian_phi(ps: &PhaseSelection, q: usize) -> CyclicFunction {
    gaussian_phi_raw(ps.a, ps.b, ps.gamma, q)
}

pub fn gaussian_phi_raw(a: i128, b: i128, gamma: i128, q: usize) -> CyclicFunction {
    let exps = gaussian_phi_exponents(a, b, gamma, q);
    let values = exps.iter().map(|&e| root_of_unity(q, e)).collect();
    CyclicFunction { q, values }
}

/// Rescales so that `< phi, phi >_{D0_perp}` has unit zero coefficient
/// (division by q, since the raw zero coefficient is `q^2`).
pub fn normalize_phi(phi: &CyclicFunction) -> CyclicFunction {
    phi.scale(Complex64::new(1.0 / phi.q as f64, 0.0))
}

/// Two-dimensional DFT with forward kernel `e(+(ns+mt)/q)/q`; unitary on
/// `L^2(Z_q^2)`, fourth power = identity composed with the parity flip
/// squared.
pub fn dft2(f: &CyclicFunction) -> CyclicFunction {
    let q = f.q;
    let mut out = CyclicFunction::zero(q);
    for s in 0..q as i64 {
        for t in 0..q as i64 {
            let mut acc = Complex64::new(0.0, 0.0);
            for n in 0..q as i64 {
                for m in 0..q as i64 {
                    acc += root_of_unity(q, n * s + m * t) * f.at(n, m);
                }
            }
            *out.at_mut(s, t) = acc / q as f64;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number_theory::{four_square, select_phase};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_function(q: usize, rng: &mut StdRng) -> CyclicFunction {
        let values = (0..q * q)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        CyclicFunction::new(q, values).unwrap()
    }

    #[test]
    fn gaussian_phi_trivial_q1() {
        let fs = four_square(0);
        let ps = select_phase(&fs, 1).unwrap();
        let phi = gaussian_phi(&ps, 1);
        assert_eq!(phi.at(0, 0), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn gaussian_phi_unimodular() {
        let fs = four_square(3);
        let ps = select_phase(&fs, 5).unwrap();
        let phi = gaussian_phi(&ps, 5);
        for n in 0..5 {
            for m in 0..5 {
                assert!((phi.at(n, m).norm() - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn gaussian_phi_well_defined_mod_q() {
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..50 {
            let q = rng.gen_range(1..14usize);
            let a = rng.gen_range(-20..20i128);
            let b = rng.gen_range(-20..20i128);
            let g = rng.gen_range(-20..20i128);
            let exps = gaussian_phi_exponents(a, b, g, q);
            let qi = q as i128;
            // Shift invariance: exponent(n+q, m) == exponent(n, m) etc. is
            // automatic from reduction; verify the defining quadratic shifts
            // by multiples of q.
            for n in 0..qi {
                for m in 0..qi {
                    let direct = (a * (n + qi) * (n + qi) + b * (n + qi) * m + g * m * m)
                        .rem_euclid(qi);
                    assert_eq!(direct as i64, exps[(n * qi + m) as usize]);
                }
            }
        }
    }

    #[test]
    fn dft_is_unitary_and_order_four() {
        let mut rng = StdRng::seed_from_u64(8);
        for q in [2usize, 3, 5, 8] {
            let f = random_function(q, &mut rng);
            let fhat = dft2(&f);
            assert!((f.norm() - fhat.norm()).abs() < 1e-12, "Parseval q={q}");
            let f4 = dft2(&dft2(&dft2(&fhat)));
            assert!(f4.sub(&f).norm() < 1e-11, "F^4 = id q={q}");
            // F^2 is the parity flip.
            let f2 = dft2(&fhat);
            for n in 0..q as i64 {
                for m in 0..q as i64 {
                    assert!((f2.at(n, m) - f.at(-n, -m)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn dft_of_delta_is_constant() {
        let d = CyclicFunction::delta(2, 0, 0);
        let dhat = dft2(&d);
        for n in 0..2 {
            for m in 0..2 {
                assert!((dhat.at(n, m) - Complex64::new(0.5, 0.0)).norm() < 1e-15);
            }
        }
    }
}
