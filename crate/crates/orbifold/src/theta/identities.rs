//! The theta identity suite: duplication, half-period, and inversion
//! formulas, each verified numerically at a given argument with residuals
//! reported.
//!
//! Checked identities (principal branch of `(-it)^{-1/2}`):
//!
//! ```text
//! theta3(w, u) = theta3(2w, 4u) + theta2(2w, 4u)
//! theta4(v, u) = theta3(2v, 4u) - theta2(2v, 4u)
//! theta2(pi, v) = -theta2(0, v)
//! theta3(z + pi/2, u) = theta4(z, u)
//! theta3(z, t) = (-it)^{-1/2} exp(z^2/(pi i t)) theta3(z/t, -1/t)
//! theta4(z, t) = (-it)^{-1/2} exp(z^2/(pi i t)) theta2(z/t, -1/t)
//! ```

use num_complex::Complex64;

use super::{theta, ThetaKind};
use crate::Result;

const PI: f64 = std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub t: Complex64,
    pub tolerance: f64,
    /// (name, residual) per identity, in a fixed order.
    pub residuals: Vec<(String, f64)>,
    pub pass: bool,
}

fn inv_sqrt_principal(t: Complex64) -> Complex64 {
    // (-it)^{-1/2}; -it has positive real part for Im(t) > 0.
    let w = -Complex64::i() * t;
    1.0 / w.sqrt()
}

/// Runs the identity suite at argument `t` (and fixed probe points in `z`),
/// evaluating both sides to `tol/4` so that a residual above `tol` is a
/// genuine failure.
pub fn theta_identities_check(t: Complex64, tol: f64) -> Result<IdentityReport> {
    let eval_tol = tol / 4.0;
    let th = |kind: ThetaKind, z: Complex64, arg: Complex64| theta(kind, z, arg, eval_tol);
    let probes = [
        Complex64::new(0.0, 0.0),
        Complex64::new(0.37, 0.0),
        Complex64::new(PI / 3.0, 0.11),
    ];
    let mut residuals: Vec<(String, f64)> = Vec::new();

    for (i, &z) in probes.iter().enumerate() {
        // Duplication pair.
        let lhs3 = th(ThetaKind::Theta3, z, t)?;
        let rhs3 =
            th(ThetaKind::Theta3, 2.0 * z, 4.0 * t)? + th(ThetaKind::Theta2, 2.0 * z, 4.0 * t)?;
        residuals.push((format!("theta3_split_z{i}"), (lhs3 - rhs3).norm()));
        let lhs4 = th(ThetaKind::Theta4, z, t)?;
        let rhs4 =
            th(ThetaKind::Theta3, 2.0 * z, 4.0 * t)? - th(ThetaKind::Theta2, 2.0 * z, 4.0 * t)?;
        residuals.push((format!("theta4_split_z{i}"), (lhs4 - rhs4).norm()));
        // Half-period shift theta3(z + pi/2) = theta4(z).
        let s3 = th(ThetaKind::Theta3, z + Complex64::new(PI / 2.0, 0.0), t)?;
        let s4 = th(ThetaKind::Theta4, z, t)?;
        residuals.push((format!("theta3_halfshift_z{i}"), (s3 - s4).norm()));
    }

    // theta2(pi, t) = -theta2(0, t).
    let a = th(ThetaKind::Theta2, Complex64::new(PI, 0.0), t)?;
    let b = th(ThetaKind::Theta2, Complex64::new(0.0, 0.0), t)?;
    residuals.push(("theta2_full_period".into(), (a + b).norm()));

    // Inversion formulas at z = 0 and one nonzero probe.
    for (i, &z) in [Complex64::new(0.0, 0.0), Complex64::new(0.29, 0.05)].iter().enumerate() {
        let pref = inv_sqrt_principal(t) * (z * z / (PI * Complex64::i() * t)).exp();
        let inv3 = pref * th(ThetaKind::Theta3, z / t, -1.0 / t)?;
        let lhs3 = th(ThetaKind::Theta3, z, t)?;
        residuals.push((format!("theta3_inversion_z{i}"), (lhs3 - inv3).norm()));
        let inv4 = pref * th(ThetaKind::Theta2, z / t, -1.0 / t)?;
        let lhs4 = th(ThetaKind::Theta4, z, t)?;
        residuals.push((format!("theta4_inversion_z{i}"), (lhs4 - inv4).norm()));
    }

    let pass = residuals.iter().all(|(_, r)| *r < tol);
    Ok(IdentityReport { t, tolerance: tol, residuals, pass })
}
