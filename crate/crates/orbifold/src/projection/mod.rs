//! Coefficient series of the projection and the certified bounds.
//!
//! Three series are constructed (box truncation `|m|, |n| <= cutoff`, with
//! the omitted tail's l1 mass bounded analytically and reported):
//!
//! * the self inner product
//!   `<f,f> = sum e^{-(pi/2) beta^2 (m^2+n^2)} e(beta^2 m n / 2) W2^n W1^m`
//!   in unitaries with `W1 W2 = e(beta^2) W2 W1`;
//! * the cut-down series for `<f, U1 f>`, carrying the scalar prefactor
//!   `mu0^{1/2} e(K/2q)` and the word `V4^{c4} V3^{c3}`;
//! * the primitive form
//!   `X = (1/beta^2) sum e(q^2 alpha^2 m n/2) e^{-(pi/2) q^2 alpha^2 (m^2+n^2)}
//!        mu_{qm,qn} U2^{qn} U1^{qm}`,
//!   `mu_{qm,qn} = (-1)^{q w (n^2 - m^2)}`, invariant under the order-four
//!   transform at exact coefficient level.

pub mod certificate;
pub mod series;

pub use certificate::{
    centrality_certificate, centrality_helper_inequality, congruence_certificate,
    cutdown_certificate, invertibility_certificate, scalarity_certificate, trace_report,
    w0_certificate, Certificate, CertificateInputs, TraceReport,
};
pub use series::{fourier_map, l1_tail_bound, Coeff, FourierConvention, NcSeries};

use crate::lattice::phase::big_ratio;
use crate::lattice::poly::u_values;
use crate::lattice::{DiophantineSolution, LatticeData, PhaseExponent, PhasePolynomial, TChoice};
use crate::{Error, Result};

/// `<f,f>` as a truncated series in `(W1, W2)`; the returned tail bound
/// covers the omitted l1 mass.
pub fn series_ff(ld: &LatticeData, cutoff: i64) -> Result<(NcSeries, f64)> {
    if cutoff < 1 {
        return Err(Error::domain("cutoff must be >= 1"));
    }
    let beta_sq = ld.beta_sq();
    let mut s = NcSeries::new(
        PhaseExponent::irrational(1, 1),
        Some(FourierConvention::SigmaPrime),
        "W1",
        "W2",
        beta_sq,
    );
    for m in -cutoff..=cutoff {
        for n in -cutoff..=cutoff {
            let magnitude = series::gauss(beta_sq * ((m * m + n * n) as f64));
            let phase = PhaseExponent::new(big_ratio(0, 1), big_ratio((m * n) as i128, 2));
            s.set(m, n, Coeff { magnitude, phase });
        }
    }
    Ok((s, l1_tail_bound(beta_sq, cutoff)))
}

/// Scalar and word prefactor of the cut-down series:
/// `mu0^{1/2} e(K/2q) V4^{c4} V3^{c3}`.
#[derive(Debug, Clone)]
pub struct CutdownPrefactor {
    pub c3: i128,
    pub c4: i128,
    pub k_int: i128,
    /// Exponent of `mu0^{1/2}`: `w/(2q)` on the principal branch.
    pub mu0_half: PhaseExponent,
    /// Combined scalar `mu0^{1/2} e(K/2q)`.
    pub scalar: PhaseExponent,
}

#[derive(Debug, Clone)]
pub struct CutdownSeries {
    pub prefactor: CutdownPrefactor,
    pub series: NcSeries,
    pub tail_bound: f64,
}

/// `<f, U1 f>` as prefactor data plus a truncated series in `(W1, W2)`:
/// coefficients `e^{-(pi/2)[(alpha+beta m)^2 + beta^2 n^2]}
/// e(beta^2 m n/2) e(-n/2q)`.
pub fn series_fu1f(
    ld: &LatticeData,
    ds: &DiophantineSolution,
    pp: &PhasePolynomial,
    cutoff: i64,
) -> Result<CutdownSeries> {
    if cutoff < 1 {
        return Err(Error::domain("cutoff must be >= 1"));
    }
    if pp.t_choice != TChoice::Eps1 {
        return Err(Error::domain("cut-down series needs the eps1 phase polynomial"));
    }
    let (u3, u4) = u_values(ld, TChoice::Eps1);
    if (ds.u3, ds.u4) != (u3, u4) {
        return Err(Error::domain(
            "diophantine solution does not match the eps1 case (u3, u4)",
        ));
    }
    let alpha = ld.alpha();
    let beta = ld.beta();
    let beta_sq = ld.beta_sq();
    let q = ld.q as i128;
    let mut s = NcSeries::new(
        PhaseExponent::irrational(1, 1),
        Some(FourierConvention::SigmaPrime),
        "W1",
        "W2",
        beta_sq,
    );
    for m in -cutoff..=cutoff {
        for n in -cutoff..=cutoff {
            let x = alpha + beta * m as f64;
            let magnitude =
                (-(std::f64::consts::PI / 2.0) * (x * x + beta_sq * (n * n) as f64)).exp();
            let phase = PhaseExponent::new(
                big_ratio(-(n as i128), 2 * q),
                big_ratio((m * n) as i128, 2),
            );
            s.set(m, n, Coeff { magnitude, phase });
        }
    }
    let mu0_half = PhaseExponent::new(big_ratio(ld.w_int(), 2 * q), big_ratio(0, 1));
    let scalar = mu0_half.add(&PhaseExponent::new(big_ratio(pp.k_int, 2 * q), big_ratio(0, 1)));
    Ok(CutdownSeries {
        prefactor: CutdownPrefactor { c3: ds.c3, c4: ds.c4, k_int: pp.k_int, mu0_half, scalar },
        series: s,
        tail_bound: l1_tail_bound(1.0, cutoff),
    })
}

/// The primitive form `X` as a truncated series in `(U1^q, U2^q)`.
pub fn primitive_form(ld: &LatticeData, cutoff: i64) -> Result<(NcSeries, f64)> {
    if cutoff < 1 {
        return Err(Error::domain("cutoff must be >= 1"));
    }
    let beta_sq = ld.beta_sq();
    let x = 1.0 / beta_sq; // q^2 alpha^2
    let q = ld.q as i128;
    let w = ld.w_int();
    let mut s = NcSeries::new(
        PhaseExponent::irrational(1, 1),
        Some(FourierConvention::Sigma),
        "U1^q",
        "U2^q",
        x,
    );
    for m in -cutoff..=cutoff {
        for n in -cutoff..=cutoff {
            let magnitude = series::gauss(x * ((m * m + n * n) as f64)) / beta_sq;
            // mu_{qm,qn} = (-1)^{q w (n^2 - m^2)}
            let sign_num = q * w * ((n * n - m * m) as i128);
            let phase = PhaseExponent::new(big_ratio(sign_num, 2), big_ratio((m * n) as i128, 2));
            s.set(m, n, Coeff { magnitude, phase });
        }
    }
    Ok((s, l1_tail_bound(x, cutoff) / beta_sq))
}
