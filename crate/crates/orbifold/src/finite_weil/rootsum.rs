//! Exact integer combinations of q-th roots of unity.
//!
//! A sum `sum_j c_j zeta^j` (`zeta = e(1/q)`, integer counts `c_j`) is zero
//! exactly when the polynomial `sum c_j x^j` is divisible by the q-th
//! cyclotomic polynomial; divisibility is decided by exact polynomial
//! division, so vanishing claims about Gauss-type sums are theorems here,
//! not float comparisons.

use num_complex::Complex64;

/// `sum_{j mod q} counts[j] * e(j/q)` with exact integer counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSum {
    q: usize,
    counts: Vec<i64>,
}

impl RootSum {
    pub fn zero(q: usize) -> Self {
        assert!(q >= 1);
        RootSum { q, counts: vec![0; q] }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Adds one occurrence of `e(exponent/q)`.
    pub fn push(&mut self, exponent: i64) {
        let idx = exponent.rem_euclid(self.q as i64) as usize;
        self.counts[idx] += 1;
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    /// Exact zero test via divisibility by the q-th cyclotomic polynomial.
    pub fn is_zero(&self) -> bool {
        let phi = cyclotomic(self.q);
        poly_rem(&self.counts.iter().map(|&c| c as i128).collect::<Vec<_>>(), &phi)
            .iter()
            .all(|c| *c == 0)
    }

    /// Exact test `self == n` for an integer `n`.
    pub fn is_integer(&self, n: i64) -> bool {
        let mut shifted = self.clone();
        shifted.counts[0] -= n;
        shifted.is_zero()
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &c) in self.counts.iter().enumerate() {
            if c != 0 {
                let ang = 2.0 * std::f64::consts::PI * j as f64 / self.q as f64;
                acc += (c as f64) * Complex64::new(ang.cos(), ang.sin());
            }
        }
        acc
    }
}

/// Coefficients (ascending) of the q-th cyclotomic polynomial, computed by
/// exact division of `x^q - 1` by the cyclotomic polynomials of the proper
/// divisors.
pub fn cyclotomic(q: usize) -> Vec<i128> {
    assert!(q >= 1);
    let mut num = vec![0i128; q + 1];
    num[0] = -1;
    num[q] = 1;
    for d in 1..q {
        if q % d == 0 {
            let phi_d = cyclotomic(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact polynomial division (panics on nonzero remainder, which cannot
/// happen for cyclotomic factors).
fn poly_div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem: Vec<i128> = num.to_vec();
    let dlead = *den.last().unwrap();
    assert_eq!(dlead.abs(), 1, "cyclotomic polynomials are monic");
    let dn = den.len() - 1;
    let mut quot = vec![0i128; rem.len().saturating_sub(dn)];
    for i in (dn..rem.len()).rev() {
        let coef = rem[i] / dlead;
        quot[i - dn] = coef;
        if coef != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i - dn + j] -= coef * dj;
            }
        }
    }
    assert!(rem.iter().all(|c| *c == 0), "non-exact division");
    while quot.len() > 1 && *quot.last().unwrap() == 0 {
        quot.pop();
    }
    quot
}

/// Remainder of `num` modulo monic `den`.
fn poly_rem(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem: Vec<i128> = num.to_vec();
    let dn = den.len() - 1;
    if dn == 0 {
        return vec![0];
    }
    let dlead = *den.last().unwrap();
    debug_assert_eq!(dlead, 1);
    let mut i = rem.len();
    while i > dn {
        i -= 1;
        let coef = rem[i];
        if coef != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i - dn + j] -= coef * dj;
            }
        }
    }
    rem.truncate(dn);
    rem
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn geometric_sum_vanishes() {
        for q in [2usize, 3, 4, 6, 8, 12, 15] {
            let mut s = RootSum::zero(q);
            for j in 0..q as i64 {
                s.push(j);
            }
            assert!(s.is_zero(), "q = {q}");
            assert!(s.to_complex().norm() < 1e-12);
        }
    }

    #[test]
    fn nonzero_sums_detected() {
        let mut s = RootSum::zero(4);
        s.push(0);
        s.push(2); // 1 + (-1) = 0
        assert!(s.is_zero());
        s.push(1); // + i: nonzero
        assert!(!s.is_zero());
        let mut t = RootSum::zero(6);
        t.push(0);
        t.push(1);
        assert!(!t.is_zero());
    }

    #[test]
    fn integer_detection() {
        let mut s = RootSum::zero(5);
        for _ in 0..7 {
            s.push(0);
        }
        assert!(s.is_integer(7));
        assert!(!s.is_integer(6));
        // 1 + zeta + zeta^2 + zeta^3 + zeta^4 + 3 = 3 for q = 5.
        let mut t = RootSum::zero(5);
        for j in 0..5 {
            t.push(j);
        }
        t.push(0);
        t.push(0);
        t.push(0);
        assert!(t.is_integer(3));
    }
}
