//! Certified claims: JSON-serializable records of one verified bound or
//! congruence, plus the constructors for the invertibility, centrality,
//! cut-down, scalarity, congruence, intertwiner, and trace reports.
//!
//! Operator norms are never computed: every analytic claim is certified
//! through l1 coefficient bounds, mirroring the estimates the construction
//! itself uses.  Exact congruences are decided in integer arithmetic and a
//! failure is a hard error, not a failed certificate.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::series::{l1_tail_bound, NcSeries};
use crate::lattice::poly::u_values;
use crate::lattice::{DiophantineSolution, LatticeData, PhasePolynomial, TChoice};
use crate::number_theory::RationalInterval;
use crate::theta::{energy_bound, psi, raw_bound_64, rho_norms, theta3_real};
use crate::{Error, Result};

const PI: f64 = std::f64::consts::PI;

/// Echo of the instance the certificate was computed for.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CertificateInputs {
    /// Input spec followed by its SHA-256, never a lossy float.
    pub theta: String,
    pub p: String,
    pub q: String,
    pub flipped: bool,
    pub p_eff: String,
    pub p1: u64,
    pub p2: u64,
    pub p3: u64,
    pub p4: u64,
    pub a: String,
    pub b: String,
    pub gamma: String,
    pub c: String,
    pub d: String,
}

impl CertificateInputs {
    pub fn from_lattice(ld: &LatticeData) -> Self {
        CertificateInputs {
            theta: format!(
                "{} sha256:{}",
                ld.conv.theta.describe(),
                ld.conv.theta.digest()
            ),
            p: ld.conv.p.to_string(),
            q: ld.conv.q.to_string(),
            flipped: ld.flipped,
            p_eff: ld.p_eff().to_string(),
            p1: ld.fs.p1,
            p2: ld.fs.p2,
            p3: ld.fs.p3,
            p4: ld.fs.p4,
            a: ld.ps.a.to_string(),
            b: ld.ps.b.to_string(),
            gamma: ld.ps.gamma.to_string(),
            c: ld.ps.c.to_string(),
            d: ld.ps.d.to_string(),
        }
    }
}

/// One verified claim.  `pass` holds exactly when the certificate's value
/// satisfies its comparison against `threshold` within `tolerance`; the
/// untruncated remainder of any series involved is covered by
/// `tail_budget`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub inputs: CertificateInputs,
    pub values: BTreeMap<String, f64>,
    pub threshold: f64,
    pub pass: bool,
    pub tolerance: f64,
    pub tail_budget: f64,
    pub notes: String,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization")
    }
}

fn iv_to_f64(iv: &RationalInterval) -> (f64, f64) {
    (
        crate::number_theory::real::rational_to_f64(&iv.lo),
        crate::number_theory::real::rational_to_f64(&iv.hi),
    )
}

/// Invertibility: the raw bound at `beta^2` is `< 1`, evaluated at both
/// endpoints of the exact `beta^2` interval; also reports the norm bounds
/// `|rho_0^{-1}|` and `|<f,f>^{-1}| <= |rho_0^{-1}|^2 / (1 - raw)`.
pub fn invertibility_certificate(ld: &LatticeData, tol: f64) -> Result<Certificate> {
    let b2iv = ld.conv.beta_sq_interval()?;
    let (b2_lo, b2_hi) = iv_to_f64(&b2iv);
    if !(b2_lo > 1.0) {
        return Err(Error::scope(format!(
            "beta^2 = {b2_lo} is not > 1: the positive element cannot be invertible there"
        )));
    }
    let mut values = BTreeMap::new();
    let mut worst = f64::NEG_INFINITY;
    let mut energy_worst = f64::NEG_INFINITY;
    for (tag, x) in [("lo", b2_lo), ("mid", ld.beta_sq()), ("hi", b2_hi)] {
        let rb = raw_bound_64(x, tol)?;
        if !rb.raw_le_energy {
            return Err(Error::Congruence(format!(
                "raw bound exceeded its closed-form majorant at beta^2 = {x}"
            )));
        }
        values.insert(format!("raw_bound_{tag}"), rb.value);
        worst = worst.max(rb.value);
        energy_worst = energy_worst.max(rb.energy);
    }
    let (rho0, rho0_inv) = rho_norms(ld.beta_sq(), tol)?;
    let inv_norm_bound = rho0_inv * rho0_inv / (1.0 - worst);
    values.insert("beta_sq".into(), ld.beta_sq());
    values.insert("energy_bound".into(), energy_worst);
    values.insert("rho0_norm".into(), rho0);
    values.insert("rho0_inv_norm".into(), rho0_inv);
    values.insert("inv_norm_bound".into(), inv_norm_bound);
    let pass = worst < 1.0 && inv_norm_bound.is_finite();
    Ok(Certificate {
        claim: "invertibility_raw_bound_lt_1".into(),
        inputs: CertificateInputs::from_lattice(ld),
        values,
        threshold: 1.0,
        pass,
        tolerance: tol,
        tail_budget: tol,
        notes: "raw l1 bound on |R^-1 rho_0^-1 <f,f> - 1| at the beta^2 interval endpoints".into(),
    })
}

/// Approximate centrality: the l1 commutator sum is below its closed-form
/// majorant, which in turn is below `12 pi / q`.
pub fn centrality_certificate(ld: &LatticeData, tol: f64) -> Result<Certificate> {
    let q = ld.q as f64;
    let beta = ld.beta();
    let beta_sq = ld.beta_sq();
    let x = 1.0 / beta_sq; // q^2 alpha^2
    let alpha_sq = ld.alpha() * ld.alpha();

    // l1 sum: (2/beta^2) theta3(0, ix/2) sum_{n>=1} e^{-(pi/2) x n^2} |e(alpha^2 q n) - 1|
    let theta_factor = theta3_real(0.0, x / 2.0, tol)?;
    let mut series = 0.0;
    let mut n = 1f64;
    loop {
        let term = (-(PI / 2.0) * x * n * n).exp()
            * 2.0
            * (PI * alpha_sq * (ld.q as f64) * n).sin().abs();
        series += term;
        let head = (-(PI / 2.0) * x * (n + 1.0) * (n + 1.0)).exp() * 2.0;
        if head < tol / 8.0 {
            break;
        }
        n += 1.0;
        if n > 1e7 {
            return Err(Error::Truncation("centrality series did not converge".into()));
        }
    }
    let l1_sum = (2.0 / beta_sq) * theta_factor * series;

    // Closed-form majorant (4 pi/(q beta^2)) (1 + beta sqrt2)(1/pi + 2/(beta sqrt(pi e)))
    let majorant = (4.0 * PI / (q * beta_sq))
        * (1.0 + beta * 2f64.sqrt())
        * (1.0 / PI + 2.0 / (beta * (PI * std::f64::consts::E).sqrt()));
    let threshold = 12.0 * PI / q;

    let mut values = BTreeMap::new();
    values.insert("l1_sum".into(), l1_sum);
    values.insert("majorant".into(), majorant);
    values.insert("threshold_12pi_over_q".into(), threshold);
    values.insert("beta_sq".into(), beta_sq);
    let pass = majorant < threshold && l1_sum <= majorant + tol;
    Ok(Certificate {
        claim: "centrality_majorant_lt_12pi_over_q".into(),
        inputs: CertificateInputs::from_lattice(ld),
        values,
        threshold,
        pass,
        tolerance: tol,
        tail_budget: tol,
        notes: "l1 bound on |U1 X U1* - X| and its closed-form majorant".into(),
    })
}

/// The helper inequality `sum_{n>=1} n e^{-(pi/2 beta^2) n^2}
/// <= beta^2/pi + 2 beta / sqrt(pi e)` evaluated numerically.
pub fn centrality_helper_inequality(beta: f64, tol: f64) -> Result<(f64, f64)> {
    let beta_sq = beta * beta;
    let lhs = psi(1.0 / (2.0 * beta_sq), tol)?;
    let rhs = beta_sq / PI + 2.0 * beta / (PI * std::f64::consts::E).sqrt();
    Ok((lhs, rhs))
}

/// Cut-down approximation: the two exact congruences making the conjugation
/// phases trivial, the four-way l1 split bound on `|B - b^{-2}|` at window
/// size `N`, and the `O(1/q)` conjugation bound.
pub fn cutdown_certificate(
    ld: &LatticeData,
    ds: &DiophantineSolution,
    pp: &PhasePolynomial,
    cutoff: i64,
    n_window: i64,
    tol: f64,
) -> Result<Certificate> {
    if pp.t_choice != TChoice::Eps1 {
        return Err(Error::domain("cutdown certificate needs the eps1 phase polynomial"));
    }
    let (u3, u4) = u_values(ld, TChoice::Eps1);
    if (ds.u3, ds.u4) != (u3, u4) {
        return Err(Error::domain("diophantine solution does not match the eps1 case"));
    }
    let q = ld.q as i128;
    // nu_1 = e(p(c3 b1 - c4 a1)/q) must be exactly 1, via a1 = -c c3,
    // b1 = -c c4 (mod q).
    let nu1_exp = (ds.c3 * ds.b1 - ds.c4 * ds.a1).rem_euclid(q);
    let a1_rel = (ds.a1 + ld.ps.c * ds.c3).rem_euclid(q);
    let b1_rel = (ds.b1 + ld.ps.c * ds.c4).rem_euclid(q);
    // nu_2 = e(p(c3 b2 - c4 a2)/q) = e(pc/q) = e(1/q):
    // c4 a2 - c3 b2 == -c (mod q).
    let nu2_rel = (ds.c4 * ds.a2 - ds.c3 * ds.b2 + ld.ps.c).rem_euclid(q);
    if nu1_exp != 0 || a1_rel != 0 || b1_rel != 0 || nu2_rel != 0 {
        return Err(Error::Congruence(format!(
            "cutdown congruences failed: nu1_exp={nu1_exp} a1_rel={a1_rel} b1_rel={b1_rel} nu2_rel={nu2_rel} (mod {q})"
        )));
    }

    let alpha_sq = ld.alpha() * ld.alpha();
    let qf = ld.q as f64;
    let half_pi = PI / 2.0;
    let m_factor = |m: f64| (-(half_pi) * (m * m + alpha_sq + 2.0 * m / qf)).exp() + (-(half_pi) * m * m).exp();

    // One-dimensional pieces (terms below ~1e-320 underflow harmlessly).
    let reach = n_window + 45;
    let mut m_inside = 0.0;
    let mut m_outside = 0.0;
    for m in -reach..=reach {
        let v = m_factor(m as f64);
        if m.abs() <= n_window {
            m_inside += v;
        } else {
            m_outside += v;
        }
    }
    let mut n_outside = 0.0;
    for n in (n_window + 1)..=reach {
        n_outside += 2.0 * (-(half_pi) * (n * n) as f64).exp();
    }
    let theta_half = theta3_real(0.0, 0.5, tol)?;

    let s2 = theta_half * m_outside;
    let s3 = m_inside * n_outside;
    let s4 = m_outside * n_outside;
    let mut s1 = 0.0;
    for m in -n_window..=n_window {
        for n in -n_window..=n_window {
            let drift = num_complex::Complex64::new(
                (-(half_pi) * (alpha_sq + 2.0 * m as f64 / qf)).exp(),
                0.0,
            ) * num_complex::Complex64::from_polar(1.0, -PI * n as f64 / qf);
            let dist = (drift - num_complex::Complex64::new(1.0, 0.0)).norm();
            s1 += (-(half_pi) * ((m * m + n * n) as f64)).exp() * dist;
        }
    }
    let fourway_total = s1 + s2 + s3 + s4;

    // Conjugation bound (2 pi / q) sum |n| e^{-(pi/2)(m^2+n^2)}.
    let conj_constant = theta3_real(0.0, 0.5, tol)? * 2.0 * psi(0.5, tol)?;
    let conj_bound = 2.0 * PI / qf * conj_constant;

    // Truncation sanity for the series actually emitted at `cutoff`.
    let tail = l1_tail_bound(1.0, cutoff);

    let mut values = BTreeMap::new();
    values.insert("nu1_exponent".into(), nu1_exp as f64);
    values.insert("nu2_exponent_offset".into(), nu2_rel as f64);
    values.insert("center_sum".into(), s1);
    values.insert("tail_m".into(), s2);
    values.insert("tail_n".into(), s3);
    values.insert("tail_mn".into(), s4);
    values.insert("fourway_total".into(), fourway_total);
    values.insert("conjugation_bound".into(), conj_bound);
    values.insert("conjugation_bound_times_q".into(), conj_bound * qf);
    values.insert("window".into(), n_window as f64);
    let pass = fourway_total.is_finite() && conj_bound.is_finite();
    Ok(Certificate {
        claim: "cutdown_congruences_and_l1_bounds".into(),
        inputs: CertificateInputs::from_lattice(ld),
        values,
        threshold: f64::INFINITY,
        pass,
        tolerance: tol,
        tail_budget: tail,
        notes: "nu1 = 1 and nu2 = e(1/q) exactly; four-way split bound on |B - b^-2| and O(1/q) conjugation bound (decay across q checked at suite level)".into(),
    })
}

/// Scalarity of the discrete self inner product, decided exactly, emitted
/// as a certificate.
pub fn scalarity_certificate(ld: &LatticeData) -> Result<Certificate> {
    let q = ld.q as usize;
    let exps = crate::finite_weil::gaussian_phi_exponents(ld.ps.a, ld.ps.b, ld.ps.gamma, q);
    let sums = crate::finite_weil::inner_d0perp_exact(&ld.fs, &exps, &exps, q);
    let mut off_nonzero = 0usize;
    let mut diag_ok = true;
    for k in 0..q {
        for l in 0..q {
            let s = &sums[k * q + l];
            if k == 0 && l == 0 {
                diag_ok = s.is_integer((q * q) as i64);
            } else if !s.is_zero() {
                off_nonzero += 1;
            }
        }
    }
    let mut values = BTreeMap::new();
    values.insert("off_lattice_nonzero_coefficients".into(), off_nonzero as f64);
    values.insert("diagonal_equals_q_sq".into(), if diag_ok { 1.0 } else { 0.0 });
    Ok(Certificate {
        claim: "discrete_inner_product_scalar".into(),
        inputs: CertificateInputs::from_lattice(ld),
        values,
        threshold: 0.0,
        pass: off_nonzero == 0 && diag_ok,
        tolerance: 0.0,
        tail_budget: 0.0,
        notes: "exact root-of-unity sums; zero tolerance".into(),
    })
}

/// The five congruences of the phase polynomial, as a certificate (they are
/// also hard-checked inside `phase_polynomial`).
pub fn congruence_certificate(ld: &LatticeData, pp: &PhasePolynomial) -> Result<Certificate> {
    let q = ld.q as i128;
    let residues = [
        ("a_prime", pp.a_p),
        ("b_prime", pp.b_p),
        ("c_prime", pp.c_p),
        ("d0_prime", pp.d0_p),
        ("e0_prime", pp.e0_p),
    ];
    let mut values = BTreeMap::new();
    let mut pass = true;
    for (name, v) in residues {
        let r = v.rem_euclid(q);
        values.insert(format!("{name}_mod_q"), r as f64);
        pass &= r == 0;
    }
    values.insert("split_d".into(), (pp.d_p - 2 * pp.d0_p - pp.d1_p) as f64);
    values.insert("split_e".into(), (pp.e_p - 2 * pp.e0_p - pp.e1_p) as f64);
    pass &= pp.d_p == 2 * pp.d0_p + pp.d1_p && pp.e_p == 2 * pp.e0_p + pp.e1_p;
    Ok(Certificate {
        claim: "phase_polynomial_congruences".into(),
        inputs: CertificateInputs::from_lattice(ld),
        values,
        threshold: 0.0,
        pass,
        tolerance: 0.0,
        tail_budget: 0.0,
        notes: "exact integer arithmetic".into(),
    })
}

/// `W0` unitarity, intertwining, and transform compatibility at matrix
/// level, emitted as a certificate.
pub fn w0_certificate(ld: &LatticeData, tol: f64) -> Result<Certificate> {
    let q = ld.q as usize;
    let fs = &ld.fs;
    let phi = crate::finite_weil::normalize_phi(&crate::finite_weil::gaussian_phi(&ld.ps, q));
    let w = crate::finite_weil::w0(fs, &phi)?;
    let id = crate::finite_weil::D0PerpOperator::identity(q, fs.p);
    let unitarity = w.mul(&w.adjoint()).sub(&id).frobenius_norm()?;
    let intertwine = crate::finite_weil::sigma0_prime(&w)
        .sub(&w.adjoint())
        .frobenius_norm()?;
    let phihat = crate::finite_weil::dft2(&phi);
    let acted = crate::finite_weil::right_apply(fs, &phi, &w);
    let module = phihat.sub(&acted).norm();
    let mut values = BTreeMap::new();
    values.insert("unitarity_residual".into(), unitarity);
    values.insert("transform_residual".into(), intertwine);
    values.insert("module_residual".into(), module);
    let pass = unitarity < tol && intertwine < tol && module < tol;
    Ok(Certificate {
        claim: "w0_unitary_intertwiner".into(),
        inputs: CertificateInputs::from_lattice(ld),
        values,
        threshold: tol,
        pass,
        tolerance: tol,
        tail_budget: 0.0,
        notes: "Frobenius-norm residuals in the clock/shift model".into(),
    })
}

/// Trace data of the projection: `tau(e) = q|q theta - p|`, the
/// subprojection ladder `k|q theta - p|`, and `tau(1 - e)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceReport {
    pub inputs: CertificateInputs,
    pub trace: f64,
    pub trace_lo: f64,
    pub trace_hi: f64,
    pub tau_complement: f64,
    /// `k |q theta - p|` for `k = 1..=q`.
    pub subprojection_traces: Vec<f64>,
    pub all_in_unit_interval: bool,
}

pub fn trace_report(ld: &LatticeData) -> Result<TraceReport> {
    let iv = ld.conv.trace_interval();
    let (lo, hi) = iv_to_f64(&iv);
    let trace = ld.covolume();
    let q = ld.q;
    let per_k = trace / q as f64;
    let subs: Vec<f64> = (1..=q).map(|k| per_k * k as f64).collect();
    let all_in = subs.iter().all(|t| *t > 0.0 && *t < 1.0);
    Ok(TraceReport {
        inputs: CertificateInputs::from_lattice(ld),
        trace,
        trace_lo: lo,
        trace_hi: hi,
        tau_complement: 1.0 - trace,
        subprojection_traces: subs,
        all_in_unit_interval: all_in,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::test_support::{sample_ld, sqrt2_half_ld};
    use crate::lattice::{instance, solve_diophantine};

    #[test]
    fn invertibility_passes_on_sqrt2_half() {
        let ld = sqrt2_half_ld();
        let cert = invertibility_certificate(&ld, 1e-12).unwrap();
        assert!(cert.pass, "{}", cert.to_json());
        assert!(cert.values["raw_bound_mid"] < 1.0);
        assert!(cert.values["inv_norm_bound"].is_finite());
    }

    #[test]
    fn invertibility_near_one_uses_paper_window() {
        // beta^2 close to x0: raw bound must stay below the 0.532 envelope.
        // The [0; 2,1,3] window pins beta^2 in (1.25, 1.84).
        let cf: Vec<u64> = std::iter::once(0)
            .chain([2u64, 1, 3].iter().copied().cycle().take(18))
            .collect();
        let theta = crate::number_theory::ThetaSpec::cf(cf).unwrap();
        let convs = crate::number_theory::convergents(&theta, 8).unwrap();
        for conv in convs.iter().skip(1) {
            let p_eff = u64::try_from(&conv.effective_p().unwrap()).unwrap();
            let fs = crate::number_theory::four_square(p_eff);
            let q = u64::try_from(&conv.q).unwrap();
            let ps = crate::number_theory::select_phase(&fs, q).unwrap();
            let ld = crate::lattice::build_lattices(conv, &fs, &ps).unwrap();
            let cert = invertibility_certificate(&ld, 1e-12).unwrap();
            assert!(cert.pass, "q={q}: {}", cert.to_json());
        }
    }

    #[test]
    fn invertibility_refuses_beta_below_one() {
        // A synthetic rational with q|q theta - p| > 1 never builds, so
        // check the guard directly through raw_bound_64's domain error and
        // the scope error text path using a fake small beta^2 interval:
        let err = crate::theta::raw_bound_64(0.9, 1e-10).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn centrality_certificate_values() {
        for q in [2u64, 3, 5, 13] {
            let ld = sample_ld(q);
            let cert = centrality_certificate(&ld, 1e-12).unwrap();
            assert!(cert.pass, "q={q}: {}", cert.to_json());
            assert!(cert.values["majorant"] < cert.values["threshold_12pi_over_q"]);
            assert!(cert.values["l1_sum"] <= cert.values["majorant"] + 1e-12);
        }
    }

    #[test]
    fn centrality_majorant_decreases_along_convergents() {
        // Same theta, growing q with q|q theta - p| < kappa: majorants fall.
        let theta = crate::number_theory::ThetaSpec::cf(vec![0, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2]).unwrap();
        let convs = crate::number_theory::convergents(&theta, 8).unwrap();
        let mut last = f64::INFINITY;
        for conv in convs.iter().skip(1) {
            let q = u64::try_from(&conv.q).unwrap();
            let p_eff = u64::try_from(&conv.effective_p().unwrap()).unwrap();
            let fs = crate::number_theory::four_square(p_eff);
            let ps = crate::number_theory::select_phase(&fs, q).unwrap();
            let ld = crate::lattice::build_lattices(conv, &fs, &ps).unwrap();
            let cert = centrality_certificate(&ld, 1e-12).unwrap();
            let maj = cert.values["majorant"];
            assert!(maj < last, "majorant not decreasing at q={q}");
            last = maj;
        }
    }

    #[test]
    fn helper_inequality_samples() {
        for beta in [1.01f64, 1.2, 1.7, 2.5, 4.0] {
            let (lhs, rhs) = centrality_helper_inequality(beta, 1e-14).unwrap();
            assert!(lhs <= rhs, "beta={beta}: {lhs} > {rhs}");
        }
    }

    #[test]
    fn cutdown_congruences_and_decay() {
        let mut prev_conj = f64::INFINITY;
        for q in [5u64, 13, 34] {
            let ld = instance(1, q).unwrap();
            let (u3, u4) = u_values(&ld, TChoice::Eps1);
            let ds = solve_diophantine(&ld, u3, u4).unwrap();
            let pp = crate::lattice::phase_polynomial(&ld, &ds, TChoice::Eps1).unwrap();
            let cert = cutdown_certificate(&ld, &ds, &pp, 12, 8, 1e-12).unwrap();
            assert!(cert.pass);
            assert_eq!(cert.values["nu1_exponent"], 0.0);
            assert_eq!(cert.values["nu2_exponent_offset"], 0.0);
            let conj = cert.values["conjugation_bound"];
            assert!(conj < prev_conj, "conjugation bound not decreasing at q={q}");
            prev_conj = conj;
        }
    }

    #[test]
    fn cutdown_rejects_wrong_t_choice() {
        let ld = sample_ld(5);
        let ds0 = solve_diophantine(&ld, 0, 0).unwrap();
        let pp0 = crate::lattice::phase_polynomial(&ld, &ds0, TChoice::Zero).unwrap();
        assert!(cutdown_certificate(&ld, &ds0, &pp0, 12, 8, 1e-12).is_err());
    }

    #[test]
    fn scalarity_certificate_passes() {
        for q in [2u64, 3, 4, 7] {
            let ld = sample_ld(q);
            let cert = scalarity_certificate(&ld).unwrap();
            assert!(cert.pass, "q={q}");
        }
    }

    #[test]
    fn trace_report_values() {
        let ld = sqrt2_half_ld();
        let rep = trace_report(&ld).unwrap();
        assert!((rep.trace - 0.343_145_75).abs() < 1e-6);
        assert_eq!(rep.subprojection_traces.len(), 2);
        let last = *rep.subprojection_traces.last().unwrap();
        assert!((last - rep.trace).abs() < 1e-12);
        assert!(rep.all_in_unit_interval);
        assert!(rep.trace_lo <= rep.trace && rep.trace <= rep.trace_hi);
        assert!((rep.tau_complement + rep.trace - 1.0).abs() < 1e-12);
    }

    #[test]
    fn certificate_json_roundtrip() {
        let ld = sample_ld(3);
        let cert = invertibility_certificate(&ld, 1e-10).unwrap();
        let json = cert.to_json();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back.claim, cert.claim);
        assert_eq!(back.inputs, cert.inputs);
        assert_eq!(back.to_json(), json, "serialization must be stable");
    }
}
