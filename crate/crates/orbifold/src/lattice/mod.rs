//! The lattices `D`, `D_perp`, their cocycle phase table, the congruence
//! solver, and the exact phase polynomial of the inner-product calculation.
//!
//! Basis data (with `alpha = (theta - p/q)^{1/2}`, `beta = 1/(q alpha)`,
//! `[n]` the mod-q class of `n`, and `c p + d q = 1`):
//!
//! ```text
//! D:      eps1   = ( alpha, [ p1], [ p2] |     0, [ p3], [ p4] )
//!         eps2   = (     0, [-p3], [-p4] | alpha, [ p1], [ p2] )
//!
//! D_perp: delta1 = (  beta, [-c p1], [-c p2] |    0, [-c p3], [-c p4] )
//!         delta2 = (     0, [ c p3], [ c p4] | beta, [-c p1], [-c p2] )
//!         delta3 = (     0, [ p2], [-p1] |        0, [-p4], [ p3] )
//!         delta4 = (     0, [ p4], [-p3] |        0, [ p2], [-p1] )
//! ```
//!
//! When `theta < p/q` the construction first applies the canonical
//! normalization `theta -> 1 - theta`, `p -> q - p` (recorded in
//! [`LatticeData::flipped`]); all contracts below refer to the effective
//! pair.

pub mod phase;
pub mod poly;
pub mod vector;

pub use phase::PhaseExponent;
pub use poly::{phase_polynomial, PhasePolynomial, TChoice};
pub use vector::{cocycle, commutation, LatticeVector};

use crate::number_theory::{Convergent, FourSquare, PhaseSelection};
use crate::{Error, Result};
use phase::big_ratio;

/// Everything downstream constructions consume: the effective convergent
/// data, basis vectors, the 4x4 cocycle table
/// `lambda[j][k] = h(delta_{j+1}, delta_{k+1})`, and `mu0 = e(w/q)` with
/// `w = p1 p3 + p2 p4`.
#[derive(Debug, Clone)]
pub struct LatticeData {
    pub conv: Convergent,
    pub fs: FourSquare,
    pub ps: PhaseSelection,
    /// True when the `theta -> 1 - theta` normalization was applied.
    pub flipped: bool,
    pub q: u64,
    pub eps1: LatticeVector,
    pub eps2: LatticeVector,
    pub delta: [LatticeVector; 4],
    /// `lambda[j][k] = h(delta_{j+1}, delta_{k+1})`, symbol = `beta^2`.
    pub lambda: [[PhaseExponent; 4]; 4],
    /// `e(w/q)`, the self-cocycle of `eps1`.
    pub mu0: PhaseExponent,
}

impl LatticeData {
    pub fn p_eff(&self) -> u64 {
        self.fs.p
    }

    pub fn alpha(&self) -> f64 {
        self.conv.alpha()
    }

    pub fn beta(&self) -> f64 {
        self.conv.beta()
    }

    pub fn beta_sq(&self) -> f64 {
        self.conv.beta_sq()
    }

    /// Covolume `|G/D| = alpha^2 q^2 = q|q theta - p| = 1/beta^2`.
    pub fn covolume(&self) -> f64 {
        1.0 / self.beta_sq()
    }

    /// `theta' = beta^2 + c/q = (c theta + d)/(q theta - p)` (effective).
    pub fn theta_prime(&self) -> f64 {
        self.beta_sq() + (self.ps.c as f64) / (self.q as f64)
    }

    /// `theta'` as an exact exponent pair (rational part, beta^2 multiple).
    pub fn theta_prime_exponent(&self) -> PhaseExponent {
        PhaseExponent::new(big_ratio(self.ps.c, self.q as i128), big_ratio(1, 1))
    }

    /// `w = p1 p3 + p2 p4`.
    pub fn w_int(&self) -> i128 {
        let [p1, p2, p3, p4] = self.fs.parts_i128();
        p1 * p3 + p2 * p4
    }

    /// `w2 = p1^2 + p2^2`.
    pub fn w2_int(&self) -> i128 {
        let [p1, p2, _, _] = self.fs.parts_i128();
        p1 * p1 + p2 * p2
    }
}

/// Builds the lattice bundle after validating mutual consistency and the
/// scope condition `q|q theta - p| < 1`.
pub fn build_lattices(
    conv: &Convergent,
    fs: &FourSquare,
    ps: &PhaseSelection,
) -> Result<LatticeData> {
    let q = u64::try_from(&conv.q).map_err(|_| Error::domain("q too large for lattice layer"))?;
    let p_eff = u64::try_from(&conv.effective_p()?)
        .map_err(|_| Error::domain("p too large for lattice layer"))?;
    if fs.p != p_eff {
        return Err(Error::domain(format!(
            "four-square decomposition is for p = {}, expected effective p = {p_eff}",
            fs.p
        )));
    }
    let trace = conv.trace_interval();
    if !trace
        .strictly_less_than(&num_rational::BigRational::from_integer(1.into()))
        .map_err(|_| Error::precision("q|q theta - p| < 1 undecidable at input precision"))?
    {
        return Err(Error::scope(format!(
            "q|q theta - p| >= 1 for p/q = {}/{}; construction refused",
            conv.p, conv.q
        )));
    }
    if ps.c * p_eff as i128 + ps.d * q as i128 != 1 {
        return Err(Error::domain("Bezout pair does not match effective (p, q)"));
    }

    let flipped = conv.needs_flip()?;
    let qi = q as i128;
    let [p1, p2, p3, p4] = fs.parts_i128();
    let c = ps.c;

    let eps1 = LatticeVector::new(qi, 1, p1, p2, 0, p3, p4);
    let eps2 = LatticeVector::new(qi, 0, -p3, -p4, 1, p1, p2);
    let delta = [
        LatticeVector::new(qi, 1, -c * p1, -c * p2, 0, -c * p3, -c * p4),
        LatticeVector::new(qi, 0, c * p3, c * p4, 1, -c * p1, -c * p2),
        LatticeVector::new(qi, 0, p2, -p1, 0, -p4, p3),
        LatticeVector::new(qi, 0, p4, -p3, 0, p2, -p1),
    ];
    let lambda = std::array::from_fn(|j| std::array::from_fn(|k| cocycle(&delta[j], &delta[k])));
    let mu0 = PhaseExponent::rational(p1 * p3 + p2 * p4, qi);

    Ok(LatticeData {
        conv: conv.clone(),
        fs: *fs,
        ps: *ps,
        flipped,
        q,
        eps1,
        eps2,
        delta,
        lambda,
        mu0,
    })
}

/// The four linear forms of the `D_perp` coordinate change, mod q:
///
/// ```text
/// m1 = -c p1 n1 + c p3 n2 + p2 n3 + p4 n4
/// m2 = -c p2 n1 + c p4 n2 - p1 n3 - p3 n4
/// m3 = -c p3 n1 - c p1 n2 - p4 n3 + p2 n4
/// m4 = -c p4 n1 - c p2 n2 + p3 n3 - p1 n4
/// ```
pub fn m_coeffs(ld: &LatticeData, n: [i128; 4]) -> [i128; 4] {
    let [p1, p2, p3, p4] = ld.fs.parts_i128();
    let c = ld.ps.c;
    let q = ld.q as i128;
    let [n1, n2, n3, n4] = n;
    let m1 = -c * p1 * n1 + c * p3 * n2 + p2 * n3 + p4 * n4;
    let m2 = -c * p2 * n1 + c * p4 * n2 - p1 * n3 - p3 * n4;
    let m3 = -c * p3 * n1 - c * p1 * n2 - p4 * n3 + p2 * n4;
    let m4 = -c * p4 * n1 - c * p2 * n2 + p3 * n3 - p1 * n4;
    [
        m1.rem_euclid(q),
        m2.rem_euclid(q),
        m3.rem_euclid(q),
        m4.rem_euclid(q),
    ]
}

/// The eight linear expressions entering the congruence system:
///
/// ```text
/// r1 = -p1 - 2 gamma p3 + b p4      s1 = p1 - 2 a p3 - b p4
/// r2 =  p2 + 2 a p4     - b p3      s2 = p2 - 2 gamma p4 - b p3
/// r3 =  p3 - 2 gamma p1 + b p2      s3 = p3 + 2 a p1 + b p2
/// r4 = -p4 + 2 a p2     - b p1      s4 = p4 + 2 gamma p2 + b p1
/// ```
///
/// Both determinants `r1 r4 - r2 r3` and `s1 s4 - s2 s3` equal `Delta`
/// as exact integers.
pub fn rs_coeffs(fs: &FourSquare, ps: &PhaseSelection) -> ([i128; 4], [i128; 4]) {
    let [p1, p2, p3, p4] = fs.parts_i128();
    let (a, b, g) = (ps.a, ps.b, ps.gamma);
    let r = [
        -p1 - 2 * g * p3 + b * p4,
        p2 + 2 * a * p4 - b * p3,
        p3 - 2 * g * p1 + b * p2,
        -p4 + 2 * a * p2 - b * p1,
    ];
    let s = [
        p1 - 2 * a * p3 - b * p4,
        p2 - 2 * g * p4 - b * p3,
        p3 + 2 * a * p1 + b * p2,
        p4 + 2 * g * p2 + b * p1,
    ];
    (r, s)
}

/// Closed-form mod-q solution of the congruence system
///
/// ```text
/// r4 n3 + r2 n4 == -u3 + c s3 n1 + c s1 n2
/// r3 n3 + r1 n4 == -u4 + c s4 n1 + c s2 n2   (mod q)
/// ```
///
/// as `n3 = c3 + a1 n1 + a2 n2`, `n4 = c4 + b1 n1 + b2 n2`, with all six
/// coefficients reduced to `0..q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiophantineSolution {
    pub q: u64,
    pub u3: i128,
    pub u4: i128,
    pub c3: i128,
    pub c4: i128,
    pub a1: i128,
    pub a2: i128,
    pub b1: i128,
    pub b2: i128,
    pub r: [i128; 4],
    pub s: [i128; 4],
}

pub fn solve_diophantine(ld: &LatticeData, u3: i128, u4: i128) -> Result<DiophantineSolution> {
    let q = ld.q as i128;
    let (r, s) = rs_coeffs(&ld.fs, &ld.ps);
    let det_r = r[0] * r[3] - r[1] * r[2];
    let det_s = s[0] * s[3] - s[1] * s[2];
    if det_r != det_s {
        return Err(Error::Congruence(format!(
            "determinant mismatch: r-det = {det_r}, s-det = {det_s}"
        )));
    }
    if det_r != ld.ps.delta {
        // The stored Delta comes from the closed form bA + 2(gamma-a)B +
        // (1-b^2+4a gamma)C; any discrepancy with the determinant is
        // reported, never reconciled silently.
        return Err(Error::Congruence(format!(
            "Delta mismatch: determinant = {det_r}, stored = {}",
            ld.ps.delta
        )));
    }
    let dinv = ld.ps.delta_inv;
    let c = ld.ps.c;
    let red = |x: i128| x.rem_euclid(q);
    Ok(DiophantineSolution {
        q: ld.q,
        u3,
        u4,
        c3: red(dinv * (-r[0] * u3 + r[1] * u4)),
        c4: red(dinv * (-r[3] * u4 + r[2] * u3)),
        a1: red(c * dinv * (r[0] * s[2] - r[1] * s[3])),
        a2: red(c * dinv * (r[0] * s[0] - r[1] * s[1])),
        b1: red(c * dinv * (r[3] * s[3] - r[2] * s[2])),
        b2: red(c * dinv * (r[3] * s[1] - r[2] * s[0])),
        r,
        s,
    })
}

impl DiophantineSolution {
    /// Evaluates the closed form at `(n1, n2)`, reduced mod q.
    pub fn solve_at(&self, n1: i128, n2: i128) -> (i128, i128) {
        let q = self.q as i128;
        (
            (self.c3 + self.a1 * n1 + self.a2 * n2).rem_euclid(q),
            (self.c4 + self.b1 * n1 + self.b2 * n2).rem_euclid(q),
        )
    }

    /// Verifies, coefficient by coefficient, that the closed form satisfies
    /// the system identically in `(n1, n2)`.
    pub fn verify_symbolically(&self, c: i128) -> Result<()> {
        let q = self.q as i128;
        let (r, s) = (&self.r, &self.s);
        let checks = [
            // row 1: constant, n1, n2
            r[3] * self.c3 + r[1] * self.c4 + self.u3,
            r[3] * self.a1 + r[1] * self.b1 - c * s[2],
            r[3] * self.a2 + r[1] * self.b2 - c * s[0],
            // row 2
            r[2] * self.c3 + r[0] * self.c4 + self.u4,
            r[2] * self.a1 + r[0] * self.b1 - c * s[3],
            r[2] * self.a2 + r[0] * self.b2 - c * s[1],
        ];
        for (i, v) in checks.iter().enumerate() {
            if v.rem_euclid(q) != 0 {
                return Err(Error::Congruence(format!(
                    "coefficient check {i} fails: {v} != 0 mod {q}"
                )));
            }
        }
        Ok(())
    }
}

/// The exact phase `Lambda_{n1 n2 n3 n4}` of the normal-ordering identity
///
/// `pi*_{sum n_j delta_j} = Lambda * V4^{n4} V3^{n3} V2^{n2} V1^{n1}`,
///
/// namely
/// `lambda_13^{n1 n3} lambda_24^{n2 n4} lambda_12^{n1 n2} lambda_34^{n3 n4}
///  * prod_j lambda_jj^{n_j (n_j + q)/2}`.
///
/// Half powers are exact rational exponents (denominator dividing `2q`);
/// the `beta^2` part of `lambda_12` stays symbolic.
pub fn lambda_capital(ld: &LatticeData, n: [i128; 4]) -> PhaseExponent {
    let l = &ld.lambda;
    let [n1, n2, n3, n4] = n;
    let mut acc = l[0][2].scale_int(n1 * n3);
    acc = acc.add(&l[1][3].scale_int(n2 * n4));
    acc = acc.add(&l[0][1].scale_int(n1 * n2));
    acc = acc.add(&l[2][3].scale_int(n3 * n4));
    let q = ld.q as i128;
    for (j, nj) in [(0usize, n1), (1, n2), (2, n3), (3, n4)] {
        acc = acc.add(&l[j][j].scale(&big_ratio(nj * (nj + q), 2)));
    }
    acc
}

/// Builds the full pipeline bundle for an explicit `(p, q)` instance with a
/// synthetic `theta > p/q`: four squares of `p`, phase selection, lattices.
/// Used by tests, oracles, and bulk certification sweeps.
pub fn instance(p: u64, q: u64) -> Result<LatticeData> {
    let conv = crate::number_theory::synthetic_convergent(p, q)?;
    let fs = crate::number_theory::four_square(p);
    let ps = crate::number_theory::select_phase(&fs, q)?;
    build_lattices(&conv, &fs, &ps)
}
