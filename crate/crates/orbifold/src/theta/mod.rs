//! Jacobi theta functions with certified truncation error.
//!
//! Conventions (summations over all of `Z`, `Im(t) > 0`):
//!
//! ```text
//! theta2(z,t) = sum_n exp(i pi t (n+1/2)^2) exp(i 2 z (n+1/2))
//! theta3(z,t) = sum_n exp(i pi t n^2)       exp(i 2 z n)
//! theta4(z,t) = sum_n (-1)^n exp(i pi t n^2) exp(i 2 z n)
//! ```
//!
//! Truncation rule: terms are added in pairs `n, -n` until the term-size
//! majorant drops below `tol / 16` and the geometric tail majorant fits in
//! the remaining budget, so "within `tol`" is guaranteed by the bound, not
//! hoped for.

pub mod bounds;
pub mod identities;
pub mod precise;

pub use bounds::{
    energy_bound, gaussian_overlap, psi, raw_bound_64, rho_m_deviation_bound, rho_norms, RawBound,
};
pub use identities::{theta_identities_check, IdentityReport};

use num_complex::Complex64;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaKind {
    Theta2,
    Theta3,
    Theta4,
}

impl ThetaKind {
    pub fn from_index(k: u8) -> Result<Self> {
        match k {
            2 => Ok(ThetaKind::Theta2),
            3 => Ok(ThetaKind::Theta3),
            4 => Ok(ThetaKind::Theta4),
            _ => Err(Error::domain(format!("no theta function of kind {k}"))),
        }
    }
}

const MAX_TERMS: i64 = 4_000_000;

/// Evaluates `theta_kind(z, t)` to within `tol` of the full series.
pub fn theta(kind: ThetaKind, z: Complex64, t: Complex64, tol: f64) -> Result<Complex64> {
    if !(t.im > 0.0) {
        return Err(Error::domain(format!("Im(t) = {} must be positive", t.im)));
    }
    if !(tol > 0.0) {
        return Err(Error::domain("tolerance must be positive"));
    }
    let decay = std::f64::consts::PI * t.im; // |term_nu| ~ exp(-decay nu^2 + 2|Im z| nu)
    let growth = 2.0 * z.im.abs();
    let budget = tol / 16.0;

    let nu = |n: i64| -> f64 {
        match kind {
            ThetaKind::Theta2 => n as f64 + 0.5,
            _ => n as f64,
        }
    };
    let term = |n: i64| -> Complex64 {
        let v = nu(n);
        let iexp = Complex64::i() * (std::f64::consts::PI * t * v * v + 2.0 * z * v);
        let base = iexp.exp();
        match kind {
            ThetaKind::Theta4 => {
                if n.rem_euclid(2) == 1 {
                    -base
                } else {
                    base
                }
            }
            _ => base,
        }
    };
    let majorant = |v: f64| (-decay * v * v + growth * v).exp();

    let mut sum = match kind {
        ThetaKind::Theta2 => Complex64::new(0.0, 0.0),
        _ => term(0),
    };
    let mut n = match kind {
        ThetaKind::Theta2 => 0,
        _ => 1,
    };
    loop {
        // Pair n with its mirror: -n for theta3/4, -n-1 for theta2.
        let mirror = match kind {
            ThetaKind::Theta2 => -n - 1,
            _ => -n,
        };
        sum += term(n) + term(mirror);
        let v_next = nu(n + 1).abs();
        let head = majorant(v_next);
        if head < budget {
            // Geometric tail: ratio of consecutive majorants at v >= v_next.
            let ratio = (-decay * (2.0 * v_next + 1.0) + growth).exp();
            if ratio < 0.5 {
                let tail = 2.0 * head / (1.0 - ratio);
                if tail < tol / 2.0 {
                    return Ok(sum);
                }
            }
        }
        n += 1;
        if n > MAX_TERMS {
            return Err(Error::Truncation(format!(
                "theta series did not meet tol {tol} within {MAX_TERMS} terms"
            )));
        }
    }
}

/// `theta3` as a function of real `z` for grid work.
pub fn theta3_real(z: f64, t_im: f64, tol: f64) -> Result<f64> {
    Ok(theta(ThetaKind::Theta3, Complex64::new(z, 0.0), Complex64::new(0.0, t_im), tol)?.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    const PI: f64 = std::f64::consts::PI;

    fn th(kind: ThetaKind, z: Complex64, t: Complex64) -> Complex64 {
        theta(kind, z, t, 1e-14).unwrap()
    }

    #[test]
    fn theta2_vanishes_at_half_period() {
        for x in [0.5f64, 1.0, 2.0, 3.7] {
            let v = th(ThetaKind::Theta2, Complex64::new(PI / 2.0, 0.0), Complex64::new(0.0, x));
            assert!(v.norm() < 1e-13, "x={x}: {v}");
        }
    }

    #[test]
    fn lemma_constant_identity() {
        // theta3(0, 2i) = (1 + sqrt 2) theta2(0, 2i)
        let t = Complex64::new(0.0, 2.0);
        let t3 = th(ThetaKind::Theta3, Complex64::new(0.0, 0.0), t);
        let t2 = th(ThetaKind::Theta2, Complex64::new(0.0, 0.0), t);
        let resid = (t3 - (1.0 + 2f64.sqrt()) * t2).norm();
        assert!(resid < 1e-12, "residual {resid}");
    }

    #[test]
    fn remark_ratio() {
        // theta3(0, i/2) / theta3(pi/2, i/2) = 1 + sqrt 2
        let t = Complex64::new(0.0, 0.5);
        let a = th(ThetaKind::Theta3, Complex64::new(0.0, 0.0), t);
        let b = th(ThetaKind::Theta3, Complex64::new(PI / 2.0, 0.0), t);
        assert!(((a / b).re - (1.0 + 2f64.sqrt())).abs() < 1e-12);
        assert!((a / b).im.abs() < 1e-13);
    }

    #[test]
    fn rejects_lower_half_plane() {
        let r = theta(
            ThetaKind::Theta3,
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, -0.5),
            1e-10,
        );
        assert!(r.is_err());
    }

    #[test]
    fn truncation_soundness_under_tolerance_halving() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..30 {
            let z = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-0.3..0.3));
            let t = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(0.4..3.0));
            for kind in [ThetaKind::Theta2, ThetaKind::Theta3, ThetaKind::Theta4] {
                let mut tol = 1e-6;
                let mut prev = theta(kind, z, t, tol).unwrap();
                for _ in 0..10 {
                    tol /= 2.0;
                    let next = theta(kind, z, t, tol).unwrap();
                    assert!(
                        (next - prev).norm() <= 2.0 * tol,
                        "kind {kind:?} drifted more than tol"
                    );
                    prev = next;
                }
            }
        }
    }

    #[test]
    fn theta3_monotone_in_z_on_i_axis() {
        // theta3(0,t) >= theta3(pi u, t) >= theta3(pi/2, t) > 0 for t = ix.
        for x in [0.7, 1.0, 2.5] {
            let at0 = theta3_real(0.0, x, 1e-13).unwrap();
            let at_half = theta3_real(PI / 2.0, x, 1e-13).unwrap();
            assert!(at_half > 0.0);
            for k in 0..=40 {
                let u = k as f64 / 40.0 * 0.5;
                let v = theta3_real(PI * u, x, 1e-13).unwrap();
                assert!(v <= at0 + 1e-12 && v >= at_half - 1e-12, "u={u} x={x}");
            }
        }
    }

    #[test]
    fn theta3_period_pi() {
        for x in [0.6, 1.3] {
            for z in [0.0, 0.4, 1.1] {
                let a = theta3_real(z, x, 1e-13).unwrap();
                let b = theta3_real(z + PI, x, 1e-13).unwrap();
                assert!((a - b).abs() < 1e-12);
            }
        }
    }
}
