//! The exact integer phase polynomial of the module inner products.
//!
//! For `g = f` or `g = pi_{eps1} f`, the inner product
//! `< f, g >_{D_perp}` collects into a Gaussian sum whose unit-phase part is
//! `e(S / 2q)` with
//!
//! `S = a' n1^2 + b' n2^2 + 2 c' n1 n2 + d' n1 + e' n2 + K`,
//!
//! all integers.  The congruences `a' = b' = c' = d0' = e0' = 0 (mod q)`
//! hold exactly, `d' = 2 d0' + d1'`, `e' = 2 e0' + e1'`, and `a'' = a'/q`,
//! `b'' = b'/q` are integers; `a'`, `b'`, `c'`, `d1'`, `e1'` do not depend
//! on the choice of `g`.  All of this is computed and verified in exact
//! integer arithmetic.

use super::{DiophantineSolution, LatticeData};
use crate::{Error, Result};

/// Which `g` the polynomial is computed for: `g = f` (all `t` data zero) or
/// `g = pi_{eps1} f` (`t = alpha`, `t_j = p_j`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TChoice {
    Zero,
    Eps1,
}

/// The collected integer coefficients.  Primes are suffixed `_p`; `a''`,
/// `b''` are `app`, `bpp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhasePolynomial {
    pub t_choice: TChoice,
    pub a_p: i128,
    pub b_p: i128,
    pub c_p: i128,
    pub d_p: i128,
    pub e_p: i128,
    pub k_int: i128,
    pub d0_p: i128,
    pub e0_p: i128,
    pub d1_p: i128,
    pub e1_p: i128,
    /// `a'' = a'/q`, `b'' = b'/q` (integers by the congruence lemma).
    pub app: i128,
    pub bpp: i128,
    /// `(d0, d1, d2)`: `m1 + t1 = d0 + d1 n1 + d2 n2`.
    pub d_coeffs: [i128; 3],
    /// `(e0, e1, e2)`: `m2 + t2 = e0 + e1 n1 + e2 n2`.
    pub e_coeffs: [i128; 3],
}

/// Expected `(u3, u4)` for a `t`-choice: `u3 = t3 + 2 a t1 + b t2`,
/// `u4 = t4 + 2 gamma t2 + b t1`.
pub fn u_values(ld: &LatticeData, t_choice: TChoice) -> (i128, i128) {
    match t_choice {
        TChoice::Zero => (0, 0),
        TChoice::Eps1 => {
            let [p1, p2, p3, p4] = ld.fs.parts_i128();
            let (a, b, g) = (ld.ps.a, ld.ps.b, ld.ps.gamma);
            (p3 + 2 * a * p1 + b * p2, p4 + 2 * g * p2 + b * p1)
        }
    }
}

/// Computes the collected coefficients for the stated `t`-choice and
/// verifies the exact congruences.  `ds` must have been solved with the
/// matching `(u3, u4)`.
pub fn phase_polynomial(
    ld: &LatticeData,
    ds: &DiophantineSolution,
    t_choice: TChoice,
) -> Result<PhasePolynomial> {
    let (u3, u4) = u_values(ld, t_choice);
    if (ds.u3, ds.u4) != (u3, u4) {
        return Err(Error::domain(format!(
            "diophantine solution was built for (u3, u4) = ({}, {}), expected ({u3}, {u4})",
            ds.u3, ds.u4
        )));
    }
    let [p1, p2, p3, p4] = ld.fs.parts_i128();
    let (t1, t2, t3, t4) = match t_choice {
        TChoice::Zero => (0, 0, 0, 0),
        TChoice::Eps1 => (p1, p2, p3, p4),
    };
    let (a, b, g) = (ld.ps.a, ld.ps.b, ld.ps.gamma);
    let c = ld.ps.c;
    let q = ld.q as i128;
    let p = ld.fs.p as i128;
    let big_c = crate::number_theory::abc(&ld.fs).c;
    let w = p1 * p3 + p2 * p4;
    let w2 = p1 * p1 + p2 * p2;
    let (c3, c4) = (ds.c3, ds.c4);
    let (a1, a2, b1, b2) = (ds.a1, ds.a2, ds.b1, ds.b2);

    // m1 + t1 = d0 + d1 n1 + d2 n2, m2 + t2 = e0 + e1 n1 + e2 n2.
    let d0 = t1 + p2 * c3 + p4 * c4;
    let d1 = -c * p1 + p2 * a1 + p4 * b1;
    let d2 = c * p3 + p2 * a2 + p4 * b2;
    let e0 = t2 - p1 * c3 - p3 * c4;
    let e1 = -c * p2 - p1 * a1 - p3 * b1;
    let e2 = c * p4 - p1 * a2 - p3 * b2;

    let a_p = 2 * a * d1 * d1 + 2 * b * d1 * e1 + 2 * g * e1 * e1
        + 2 * c * big_c * a1
        + 2 * w2 * a1 * b1
        + w * (c * c - a1 * a1 + b1 * b1)
        - p * a1 * b1;
    let b_p = 2 * a * d2 * d2 + 2 * b * d2 * e2 + 2 * g * e2 * e2 - 2 * c * big_c * b2
        + 2 * w2 * a2 * b2
        + w * (-c * c - a2 * a2 + b2 * b2)
        - p * a2 * b2;
    let c_p = 2 * a * d1 * d2
        + b * (d1 * e2 + d2 * e1)
        + 2 * g * e1 * e2
        + c * big_c * (a2 - b1)
        + w2 * (c * c + a1 * b2 + a2 * b1)
        + w * (b1 * b2 - a1 * a2)
        - p * a2 * b1;
    let d_p = 2 * t3 * d1
        + 2 * t4 * e1
        + 4 * a * d0 * d1
        + 2 * b * (d0 * e1 + d1 * e0)
        + 4 * g * e0 * e1
        + 2 * c * big_c * c3
        + 2 * w2 * (c3 * b1 + c4 * a1)
        + w * (q * c * c - (c3 * a1 + a1 * (c3 + q)) + (c4 * b1 + b1 * (c4 + q)))
        - 2 * p * c3 * b1
        + p * a1 * b1;
    let e_p = 2 * t3 * d2
        + 2 * t4 * e2
        + 4 * a * d0 * d2
        + 2 * b * (d0 * e2 + d2 * e0)
        + 4 * g * e0 * e2
        - 2 * c * big_c * c4
        + 2 * w2 * (c3 * b2 + c4 * a2)
        + w * (-q * c * c - (c3 * a2 + a2 * (c3 + q)) + (c4 * b2 + b2 * (c4 + q)))
        - 2 * p * c3 * b2
        + p * a2 * b2;
    let k_int = -2 * t3 * t1 - 2 * t4 * t2
        + 2 * t3 * d0
        + 2 * t4 * e0
        + 2 * a * d0 * d0
        + 2 * b * d0 * e0
        + 2 * g * e0 * e0
        + 2 * w2 * c3 * c4
        + w * (-c3 * (c3 + q) + c4 * (c4 + q));

    let d0_p = t3 * d1
        + t4 * e1
        + 2 * a * d0 * d1
        + b * (d0 * e1 + d1 * e0)
        + 2 * g * e0 * e1
        + c * big_c * c3
        + w2 * (c3 * b1 + c4 * a1)
        + w * (b1 * c4 - a1 * c3)
        - p * c3 * b1;
    let e0_p = t3 * d2
        + t4 * e2
        + 2 * a * d0 * d2
        + b * (d0 * e2 + d2 * e0)
        + 2 * g * e0 * e2
        - c * big_c * c4
        + w2 * (c3 * b2 + c4 * a2)
        + w * (b2 * c4 - c3 * a2)
        - p * c3 * b2;
    let d1_p = w * (q * c * c - a1 * q + b1 * q) + p * a1 * b1;
    let e1_p = w * (-q * c * c - a2 * q + b2 * q) + p * a2 * b2;

    // Exact split and congruence checks; failures are implementation bugs
    // or corrupted phase data, so they are hard errors.
    if d_p != 2 * d0_p + d1_p || e_p != 2 * e0_p + e1_p {
        return Err(Error::Congruence("d'/e' split identity failed".into()));
    }
    for (name, v) in [("a'", a_p), ("b'", b_p), ("c'", c_p), ("d0'", d0_p), ("e0'", e0_p)] {
        if v.rem_euclid(q) != 0 {
            return Err(Error::Congruence(format!(
                "{name} = {v} is not divisible by q = {q}"
            )));
        }
    }

    Ok(PhasePolynomial {
        t_choice,
        a_p,
        b_p,
        c_p,
        d_p,
        e_p,
        k_int,
        d0_p,
        e0_p,
        d1_p,
        e1_p,
        app: a_p / q,
        bpp: b_p / q,
        d_coeffs: [d0, d1, d2],
        e_coeffs: [e0, e1, e2],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::test_support::sample_ld;
    use crate::lattice::{instance, solve_diophantine};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Quadratic polynomial in (n1, n2) with exact integer coefficients:
    /// `a11 n1^2 + a22 n2^2 + a12 n1 n2 + b1 n1 + b2 n2 + c`.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
    struct Quad {
        a11: i128,
        a22: i128,
        a12: i128,
        b1: i128,
        b2: i128,
        c: i128,
    }

    #[derive(Debug, Clone, Copy)]
    struct Lin {
        c0: i128,
        c1: i128,
        c2: i128,
    }

    impl Lin {
        fn mul(self, o: Lin) -> Quad {
            Quad {
                a11: self.c1 * o.c1,
                a22: self.c2 * o.c2,
                a12: self.c1 * o.c2 + self.c2 * o.c1,
                b1: self.c0 * o.c1 + self.c1 * o.c0,
                b2: self.c0 * o.c2 + self.c2 * o.c0,
                c: self.c0 * o.c0,
            }
        }
    }

    impl Quad {
        fn add(self, o: Quad) -> Quad {
            Quad {
                a11: self.a11 + o.a11,
                a22: self.a22 + o.a22,
                a12: self.a12 + o.a12,
                b1: self.b1 + o.b1,
                b2: self.b2 + o.b2,
                c: self.c + o.c,
            }
        }
        fn scale(self, k: i128) -> Quad {
            Quad {
                a11: k * self.a11,
                a22: k * self.a22,
                a12: k * self.a12,
                b1: k * self.b1,
                b2: k * self.b2,
                c: k * self.c,
            }
        }
    }

    /// Independent route: expand `S = 2G + L - pR` as a polynomial in
    /// `(n1, n2)` directly from the defining displays, without the
    /// hand-collected coefficient formulas.
    fn s_polynomial(ld: &crate::lattice::LatticeData, ds: &DiophantineSolution, t: TChoice) -> Quad {
        let [p1, p2, p3, p4] = ld.fs.parts_i128();
        let (t1, t2, t3, t4) = match t {
            TChoice::Zero => (0, 0, 0, 0),
            TChoice::Eps1 => (p1, p2, p3, p4),
        };
        let (a, b, g) = (ld.ps.a, ld.ps.b, ld.ps.gamma);
        let c = ld.ps.c;
        let q = ld.q as i128;
        let p = ld.fs.p as i128;
        let big_c = crate::number_theory::abc(&ld.fs).c;
        let w = p1 * p3 + p2 * p4;
        let w2 = p1 * p1 + p2 * p2;

        let (c3, c4) = (ds.c3, ds.c4);
        let (a1, a2, b1, b2) = (ds.a1, ds.a2, ds.b1, ds.b2);
        let d_lin = Lin { c0: t1 + p2 * c3 + p4 * c4, c1: -c * p1 + p2 * a1 + p4 * b1, c2: c * p3 + p2 * a2 + p4 * b2 };
        let e_lin = Lin { c0: t2 - p1 * c3 - p3 * c4, c1: -c * p2 - p1 * a1 - p3 * b1, c2: c * p4 - p1 * a2 - p3 * b2 };
        let n1 = Lin { c0: 0, c1: 1, c2: 0 };
        let n2 = Lin { c0: 0, c1: 0, c2: 1 };
        let n3 = Lin { c0: c3, c1: a1, c2: a2 };
        let n4 = Lin { c0: c4, c1: b1, c2: b2 };
        let one = Lin { c0: 1, c1: 0, c2: 0 };
        let shift = |l: Lin, k: i128| Lin { c0: l.c0 + k, c1: l.c1, c2: l.c2 };

        // G = -t3 t1 - t4 t2 + t3 D + t4 E + a D^2 + b D E + g E^2
        let g_poly = one
            .mul(one)
            .scale(-t3 * t1 - t4 * t2)
            .add(one.mul(d_lin).scale(t3))
            .add(one.mul(e_lin).scale(t4))
            .add(d_lin.mul(d_lin).scale(a))
            .add(d_lin.mul(e_lin).scale(b))
            .add(e_lin.mul(e_lin).scale(g));
        // L = 2cC [n1 N3 - n2 N4] + 2 w2 [c^2 n1 n2 + N3 N4]
        //     + w [c^2 n1(n1+q) - c^2 n2(n2+q) - N3(N3+q) + N4(N4+q)]
        let l_poly = n1
            .mul(n3)
            .add(n2.mul(n4).scale(-1))
            .scale(2 * c * big_c)
            .add(n1.mul(n2).scale(2 * w2 * c * c))
            .add(n3.mul(n4).scale(2 * w2))
            .add(n1.mul(shift(n1, q)).scale(w * c * c))
            .add(n2.mul(shift(n2, q)).scale(-w * c * c))
            .add(n3.mul(shift(n3, q)).scale(-w))
            .add(n4.mul(shift(n4, q)).scale(w));
        // R = 2 c3 (b1 n1 + b2 n2) + 2 b1 a2 n1 n2 + a2 b2 n2(n2-1)
        //     + a1 b1 n1(n1-1)
        let r_poly = n1
            .mul(one)
            .scale(2 * c3 * b1)
            .add(n2.mul(one).scale(2 * c3 * b2))
            .add(n1.mul(n2).scale(2 * b1 * a2))
            .add(n2.mul(shift(n2, -1)).scale(a2 * b2))
            .add(n1.mul(shift(n1, -1)).scale(a1 * b1));

        g_poly.scale(2).add(l_poly).add(r_poly.scale(-p))
    }

    fn dual_route_check(p: u64, q: u64) {
        let ld = instance(p, q).unwrap();
        for t in [TChoice::Zero, TChoice::Eps1] {
            let (u3, u4) = u_values(&ld, t);
            let ds = solve_diophantine(&ld, u3, u4).unwrap();
            let pp = phase_polynomial(&ld, &ds, t).unwrap();
            let s = s_polynomial(&ld, &ds, t);
            assert_eq!(s.a11, pp.a_p, "a' p={p} q={q} {t:?}");
            assert_eq!(s.a22, pp.b_p, "b' p={p} q={q} {t:?}");
            assert_eq!(s.a12, 2 * pp.c_p, "2c' p={p} q={q} {t:?}");
            assert_eq!(s.b1, pp.d_p, "d' p={p} q={q} {t:?}");
            assert_eq!(s.b2, pp.e_p, "e' p={p} q={q} {t:?}");
            assert_eq!(s.c, pp.k_int, "K p={p} q={q} {t:?}");
        }
    }

    #[test]
    fn dual_transcription_agreement() {
        for (p, q) in [(1u64, 3u64), (1, 2), (2, 5), (3, 7), (5, 8), (7, 12), (11, 30)] {
            dual_route_check(p, q);
        }
    }

    #[test]
    fn dual_transcription_agreement_random() {
        let mut rng = StdRng::seed_from_u64(23);
        let mut done = 0;
        while done < 40 {
            let q = rng.gen_range(2..200u64);
            let p = rng.gen_range(1..q);
            if num_integer::Integer::gcd(&p, &q) != 1 {
                continue;
            }
            dual_route_check(p, q);
            done += 1;
        }
    }

    #[test]
    fn zero_case_has_no_prefactor() {
        let ld = sample_ld(3);
        let ds = solve_diophantine(&ld, 0, 0).unwrap();
        let pp = phase_polynomial(&ld, &ds, TChoice::Zero).unwrap();
        assert_eq!(pp.k_int, 0);
        assert_eq!((ds.c3, ds.c4), (0, 0));
    }

    #[test]
    fn congruences_hold_on_random_instances() {
        let mut rng = StdRng::seed_from_u64(41);
        let mut done = 0;
        while done < 100 {
            let q = rng.gen_range(2..300u64);
            let p = rng.gen_range(1..q);
            if num_integer::Integer::gcd(&p, &q) != 1 {
                continue;
            }
            let ld = instance(p, q).unwrap();
            for t in [TChoice::Zero, TChoice::Eps1] {
                let (u3, u4) = u_values(&ld, t);
                let ds = solve_diophantine(&ld, u3, u4).unwrap();
                // phase_polynomial re-verifies all congruences internally.
                let pp = phase_polynomial(&ld, &ds, t).unwrap();
                let qi = q as i128;
                assert_eq!(pp.a_p.rem_euclid(qi), 0);
                assert_eq!(pp.b_p.rem_euclid(qi), 0);
                assert_eq!(pp.c_p.rem_euclid(qi), 0);
                assert_eq!(pp.a_p, qi * pp.app);
                assert_eq!(pp.b_p, qi * pp.bpp);
            }
            done += 1;
        }
    }

    #[test]
    fn t_independent_coefficients() {
        for (p, q) in [(1u64, 4u64), (3, 5), (4, 9), (7, 10)] {
            let ld = instance(p, q).unwrap();
            let ds0 = solve_diophantine(&ld, 0, 0).unwrap();
            let pp0 = phase_polynomial(&ld, &ds0, TChoice::Zero).unwrap();
            let (u3, u4) = u_values(&ld, TChoice::Eps1);
            let ds1 = solve_diophantine(&ld, u3, u4).unwrap();
            let pp1 = phase_polynomial(&ld, &ds1, TChoice::Eps1).unwrap();
            assert_eq!(pp0.a_p, pp1.a_p);
            assert_eq!(pp0.b_p, pp1.b_p);
            assert_eq!(pp0.c_p, pp1.c_p);
            assert_eq!(pp0.d1_p, pp1.d1_p);
            assert_eq!(pp0.e1_p, pp1.e1_p);
        }
    }

    #[test]
    fn mismatched_t_choice_rejected() {
        let ld = sample_ld(5);
        let ds = solve_diophantine(&ld, 0, 0).unwrap();
        assert!(phase_polynomial(&ld, &ds, TChoice::Eps1).is_err());
    }
}
