//! The auxiliary sums and certified bounds of the invertibility estimate.
//!
//! * `Psi(x) = sum_{k>=1} k exp(-pi x k^2)` for `x > 0`;
//! * the Gaussian overlap
//!   `H(s,t) = (1/sqrt 2) e(-st/2) exp(-(pi/2)(s^2+t^2))`;
//! * the raw bound of the invertibility estimate at `x = beta^2 > 1`:
//!
//!   ```text
//!   raw(x) = (8 pi (x-1) Psi(x/2) Psi(2x) + 2 theta2(0, 2ix)^2)
//!            / theta3(pi/2, ix/2)^2
//!   ```
//!
//! * its closed-form majorant `E(x) = (K(x-1) exp(-5 pi x/2)
//!   + 2 theta2(0,2ix)^2) / theta3(pi/2, ix/2)^2` with `K = 8 pi * 1.018`,
//!   which is `< 1` for all `x > 1`;
//! * the norms `|rho_0| = theta3(0, ix/2)`,
//!   `|rho_0^{-1}| = 1/theta3(pi/2, ix/2)` and the deviation bounds for the
//!   shifted slices `rho_m(t) = theta3(pi t + (pi/2) x m, ix/2)`.

use num_complex::Complex64;

use super::{theta, theta3_real, ThetaKind};
use crate::{Error, Result};

const PI: f64 = std::f64::consts::PI;

/// `Psi(x) = sum_{k>=1} k exp(-pi x k^2)` within `tol`.
pub fn psi(x: f64, tol: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("Psi requires x > 0, got {x}")));
    }
    if !(tol > 0.0) {
        return Err(Error::domain("tolerance must be positive"));
    }
    let mut sum = 0.0;
    let mut k = 1f64;
    loop {
        let term = k * (-PI * x * k * k).exp();
        sum += term;
        // Tail majorant: ratio of consecutive terms is below
        // 2 exp(-pi x (2k+1)) for k >= 1.
        let ratio = 2.0 * (-PI * x * (2.0 * k + 1.0)).exp();
        if term < tol / 16.0 && ratio < 0.5 {
            let tail = term * ratio / (1.0 - ratio);
            if tail < tol / 2.0 {
                return Ok(sum);
            }
        }
        k += 1.0;
        if k > 1e7 {
            return Err(Error::Truncation("Psi did not converge within budget".into()));
        }
    }
}

/// Closed form of the Gaussian overlap integral
/// `int exp(-pi x^2) exp(-pi (x+s)^2) e(t x) dx`.
pub fn gaussian_overlap(s: f64, t: f64) -> Complex64 {
    let phase = -PI * s * t; // e(-st/2) = exp(-i pi s t)
    let modulus = (1.0 / 2f64.sqrt()) * (-(PI / 2.0) * (s * s + t * t)).exp();
    Complex64::new(modulus * phase.cos(), modulus * phase.sin())
}

/// `E(x)` for `x > 1`: the closed-form majorant of the raw bound.
pub fn energy_bound(x: f64, tol: f64) -> Result<f64> {
    if !(x > 1.0) {
        return Err(Error::domain(format!("energy bound requires x > 1, got {x}")));
    }
    let k_const = 8.0 * PI * 1.018;
    let t2 = theta(
        ThetaKind::Theta2,
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 2.0 * x),
        tol,
    )?
    .re;
    let t3 = theta3_real(PI / 2.0, x / 2.0, tol)?;
    Ok((k_const * (x - 1.0) * (-2.5 * PI * x).exp() + 2.0 * t2 * t2) / (t3 * t3))
}

#[derive(Debug, Clone, Copy)]
pub struct RawBound {
    /// The raw right-hand side at `x`.
    pub value: f64,
    /// The closed-form majorant `E(x)` at the same point.
    pub energy: f64,
    /// `value <= energy` (always true for `x > 1`; recorded, not assumed).
    pub raw_le_energy: bool,
}

/// The raw invertibility bound at `x = beta^2 > 1`, together with the
/// comparison against its closed-form majorant.
pub fn raw_bound_64(beta_sq: f64, tol: f64) -> Result<RawBound> {
    if !(beta_sq > 1.0) {
        return Err(Error::domain(format!(
            "raw bound requires beta^2 > 1, got {beta_sq}"
        )));
    }
    let t2 = theta(
        ThetaKind::Theta2,
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 2.0 * beta_sq),
        tol,
    )?
    .re;
    let t3 = theta3_real(PI / 2.0, beta_sq / 2.0, tol)?;
    let value = (8.0 * PI * (beta_sq - 1.0) * psi(beta_sq / 2.0, tol)? * psi(2.0 * beta_sq, tol)?
        + 2.0 * t2 * t2)
        / (t3 * t3);
    let energy = energy_bound(beta_sq, tol)?;
    Ok(RawBound { value, energy, raw_le_energy: value <= energy + tol })
}

/// `(|rho_0|, |rho_0^{-1}|) = (theta3(0, i beta^2/2), 1/theta3(pi/2, i beta^2/2))`.
pub fn rho_norms(beta_sq: f64, tol: f64) -> Result<(f64, f64)> {
    if !(beta_sq > 1.0) {
        return Err(Error::domain(format!(
            "rho norms require beta^2 > 1, got {beta_sq}"
        )));
    }
    let n0 = theta3_real(0.0, beta_sq / 2.0, tol)?;
    let ninv = 1.0 / theta3_real(PI / 2.0, beta_sq / 2.0, tol)?;
    Ok((n0, ninv))
}

/// Certified upper bound on `|rho_m - rho_0|`:
/// `4 pi |k| (beta^2 - 1) Psi(beta^2/2)` for even `m = 2k`, and
/// `2 theta2(0, 2 i beta^2)` for odd `m`.
pub fn rho_m_deviation_bound(beta_sq: f64, m: i64, tol: f64) -> Result<f64> {
    if !(beta_sq > 1.0) {
        return Err(Error::domain(format!(
            "deviation bound requires beta^2 > 1, got {beta_sq}"
        )));
    }
    if m == 0 {
        return Ok(0.0);
    }
    if m % 2 == 0 {
        let k = (m / 2).abs() as f64;
        Ok(4.0 * PI * k * (beta_sq - 1.0) * psi(beta_sq / 2.0, tol)?)
    } else {
        Ok(2.0 * theta(
            ThetaKind::Theta2,
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 2.0 * beta_sq),
            tol,
        )?
        .re)
    }
}

/// `rho_m(t) = theta3(pi t + (pi/2) beta^2 m, i beta^2 / 2)`.
pub fn rho_m_at(beta_sq: f64, m: i64, t: f64, tol: f64) -> Result<f64> {
    theta3_real(PI * t + (PI / 2.0) * beta_sq * m as f64, beta_sq / 2.0, tol)
}

/// Sup of `|rho_m - rho_0|` over a `t`-grid of `points` samples in `[0,1)`.
pub fn rho_m_deviation_grid(beta_sq: f64, m: i64, points: usize, tol: f64) -> Result<f64> {
    let mut sup: f64 = 0.0;
    for i in 0..points {
        let t = i as f64 / points as f64;
        let d = (rho_m_at(beta_sq, m, t, tol)? - rho_m_at(beta_sq, 0, t, tol)?).abs();
        sup = sup.max(d);
    }
    Ok(sup)
}
