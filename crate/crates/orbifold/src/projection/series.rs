//! Finitely supported coefficient series in two unitaries with a symbolic
//! commutation phase.
//!
//! A series is `sum c_{m,n} * second^n * first^m` (normal order: `second`
//! powers to the left), where `first * second = e(S) * second * first` and
//! `S` is the series' irrational unit (`beta^2` for the inner-product
//! series, `q^2 alpha^2` for the primitive form).  Coefficients are stored
//! as `magnitude * e(phase)` with the magnitude a positive double and the
//! phase an exact [`PhaseExponent`], so adjoint and transform identities
//! are decided exactly.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::lattice::phase::big_ratio;
use crate::lattice::PhaseExponent;
use crate::{Error, Result};

/// Which order-four transform matches the series' generator pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourierConvention {
    /// `sigma`: generators from the `D` side (`U1, U2` words).
    Sigma,
    /// `sigma'`: generators from the `D_perp` side (`W/V` words).
    SigmaPrime,
}

/// One coefficient: `magnitude * e(phase)` with exact phase.
#[derive(Debug, Clone, PartialEq)]
pub struct Coeff {
    pub magnitude: f64,
    pub phase: PhaseExponent,
}

impl Coeff {
    pub fn to_complex(&self, symbol_value: f64) -> Complex64 {
        self.phase.to_complex(symbol_value) * self.magnitude
    }
}

#[derive(Debug, Clone)]
pub struct NcSeries {
    /// `first * second = e(commutation) * second * first`; the `irr` slot
    /// counts multiples of the series' own irrational unit.
    pub commutation: PhaseExponent,
    /// Tag for [`fourier_map`]; `None` marks a raw/untagged series.
    pub convention: Option<FourierConvention>,
    pub first_label: String,
    pub second_label: String,
    /// Numerical value of the irrational unit (for complex evaluation).
    pub symbol_value: f64,
    terms: BTreeMap<(i64, i64), Coeff>,
}

impl NcSeries {
    pub fn new(
        commutation: PhaseExponent,
        convention: Option<FourierConvention>,
        first_label: &str,
        second_label: &str,
        symbol_value: f64,
    ) -> Self {
        NcSeries {
            commutation,
            convention,
            first_label: first_label.to_string(),
            second_label: second_label.to_string(),
            symbol_value,
            terms: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, m: i64, n: i64, coeff: Coeff) {
        if coeff.magnitude != 0.0 {
            self.terms.insert((m, n), coeff);
        }
    }

    pub fn get(&self, m: i64, n: i64) -> Option<&Coeff> {
        self.terms.get(&(m, n))
    }

    pub fn support(&self) -> impl Iterator<Item = (&(i64, i64), &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// l1 norm of the stored coefficients.
    pub fn l1(&self) -> f64 {
        self.terms.values().map(|c| c.magnitude.abs()).sum()
    }

    /// Complex coefficient table (for CSV emission and numeric checks).
    pub fn to_complex_table(&self) -> Vec<(i64, i64, Complex64)> {
        self.terms
            .iter()
            .map(|(&(m, n), c)| (m, n, c.to_complex(self.symbol_value)))
            .collect()
    }

    /// Adjoint under normal reordering: the term `c * S^n F^m` maps to
    /// `conj(c) e(commutation * m n) * S^{-n} F^{-m}`.
    pub fn adjoint(&self) -> NcSeries {
        let mut out = NcSeries {
            commutation: self.commutation.clone(),
            convention: self.convention,
            first_label: self.first_label.clone(),
            second_label: self.second_label.clone(),
            symbol_value: self.symbol_value,
            terms: BTreeMap::new(),
        };
        for (&(m, n), c) in &self.terms {
            let phase = c.phase.conj().add(&self.commutation.scale_int(m as i128 * n as i128));
            out.set(-m, -n, Coeff { magnitude: c.magnitude, phase });
        }
        out
    }

    /// Exact equality of supports, magnitudes (bitwise), and phases.
    pub fn exactly_equals(&self, o: &NcSeries) -> bool {
        if self.terms.len() != o.terms.len() {
            return false;
        }
        self.terms.iter().all(|(k, c)| {
            o.terms
                .get(k)
                .map(|d| d.magnitude == c.magnitude && d.phase == c.phase)
                .unwrap_or(false)
        })
    }

    /// Max complex-coefficient distance to another series on the union of
    /// supports.
    pub fn sup_distance(&self, o: &NcSeries) -> f64 {
        let mut keys: Vec<(i64, i64)> = self.terms.keys().cloned().collect();
        keys.extend(o.terms.keys().cloned());
        keys.sort_unstable();
        keys.dedup();
        let zero = Complex64::new(0.0, 0.0);
        keys.into_iter()
            .map(|(m, n)| {
                let a = self.get(m, n).map(|c| c.to_complex(self.symbol_value)).unwrap_or(zero);
                let b = o.get(m, n).map(|c| c.to_complex(o.symbol_value)).unwrap_or(zero);
                (a - b).norm()
            })
            .fold(0.0, f64::max)
    }
}

/// The order-four transform on a tagged series: generators map as
/// `first -> second`, `second -> first^{-1}`, so the term at `(m, n)` moves
/// to `(-n, m)` and picks up `e(-commutation * m n)`.
pub fn fourier_map(s: &NcSeries, convention: FourierConvention) -> Result<NcSeries> {
    match s.convention {
        None => {
            return Err(Error::domain(
                "fourier_map requires a series tagged with its algebra side",
            ))
        }
        Some(c) if c != convention => {
            return Err(Error::domain(format!(
                "series is tagged {c:?}, transform requested {convention:?}"
            )))
        }
        _ => {}
    }
    let mut out = NcSeries {
        commutation: s.commutation.clone(),
        convention: s.convention,
        first_label: s.first_label.clone(),
        second_label: s.second_label.clone(),
        symbol_value: s.symbol_value,
        terms: BTreeMap::new(),
    };
    for (&(m, n), c) in &s.terms {
        let phase = c.phase.add(&s.commutation.scale_int(-(m as i128) * n as i128));
        out.set(-n, m, Coeff { magnitude: c.magnitude, phase });
    }
    Ok(out)
}

/// Gaussian magnitude `exp(-(pi/2) x)`.
pub fn gauss(x: f64) -> f64 {
    (-(std::f64::consts::PI / 2.0) * x).exp()
}

/// Upper bound on the l1 mass outside the box `|m|, |n| <= cutoff` of the
/// Gaussian lattice sum with decay `exp(-(pi/2) s (m^2+n^2))`, `s > 0`:
/// `2 * total_1d * tail_1d + tail_1d^2` with a geometric majorant for the
/// one-dimensional tail.
pub fn l1_tail_bound(s: f64, cutoff: i64) -> f64 {
    assert!(s > 0.0, "decay rate must be positive");
    let pi = std::f64::consts::PI;
    let n0 = cutoff as f64 + 1.0;
    let head = (-(pi / 2.0) * s * n0 * n0).exp();
    let ratio = (-(pi / 2.0) * s * (2.0 * n0 + 1.0)).exp();
    let tail_1d = 2.0 * head / (1.0 - ratio);
    // total_1d <= 1 + 2/(1 - r0) * exp(-(pi/2) s)
    let r0 = (-(pi / 2.0) * s).exp();
    let total_1d = 1.0 + 2.0 * r0 / (1.0 - r0);
    2.0 * total_1d * tail_1d + tail_1d * tail_1d
}
