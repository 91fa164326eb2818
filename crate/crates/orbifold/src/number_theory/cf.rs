//! Continued-fraction convergents with exact error bookkeeping.
//!
//! Convergents are indexed from zero: `p0/q0 = a0/1 = 0/1`.  For every
//! convergent `|theta - p/q| < 1/q^2`, and `beta^2 = 1/(q|q*theta - p|) > 1`.
//! All quantities derived from `theta` are exact rational intervals; the
//! floating views (`alpha`, `beta`, ...) are midpoint evaluations.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::real::{q_theta_minus_p, rational_to_f64, RationalInterval, ThetaSpec};
use crate::{Error, Result};

/// A rational approximant `p/q` of `theta` together with the exact interval
/// data needed downstream: `alpha = (theta - p/q)^{1/2}` (after the
/// `theta -> 1-theta` normalization when `theta < p/q`), `beta = 1/(q*alpha)`
/// and `beta^2 = 1/(q|q*theta - p|)`.
#[derive(Debug, Clone)]
pub struct Convergent {
    pub theta: ThetaSpec,
    pub p: BigUint,
    pub q: BigUint,
    /// Interval for `q*theta - p` (signed).
    pub qtheta_minus_p: RationalInterval,
}

impl Convergent {
    pub fn new(theta: ThetaSpec, p: BigUint, q: BigUint) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::domain("q must be >= 1"));
        }
        if num_integer::Integer::gcd(&p, &q) != BigUint::one() {
            return Err(Error::domain("p/q must be in lowest terms"));
        }
        let iv = theta.interval();
        let qtp = q_theta_minus_p(&iv, &p, &q);
        Ok(Convergent { theta, p, q, qtheta_minus_p: qtp })
    }

    /// True when `theta < p/q`, i.e. the canonical `theta -> 1 - theta`,
    /// `p -> q - p` normalization applies before building lattices.
    pub fn needs_flip(&self) -> Result<bool> {
        Ok(self.qtheta_minus_p.sign()? < 0)
    }

    /// Numerator after normalization: `p` when `theta > p/q`, else `q - p`.
    pub fn effective_p(&self) -> Result<BigUint> {
        if self.needs_flip()? {
            Ok(&self.q - &self.p)
        } else {
            Ok(self.p.clone())
        }
    }

    /// Interval for `q|q*theta - p|` (the trace of the projection, also the
    /// covolume `alpha^2 q^2`).
    pub fn trace_interval(&self) -> RationalInterval {
        let a = self.qtheta_minus_p.abs();
        let q_r = BigRational::from_integer(BigInt::from(self.q.clone()));
        RationalInterval::new(&a.lo * &q_r, &a.hi * &q_r)
    }

    /// Interval for `beta^2 = 1/(q|q*theta - p|)`.
    pub fn beta_sq_interval(&self) -> Result<RationalInterval> {
        let t = self.trace_interval();
        if !t.lo.is_positive() {
            return Err(Error::precision(
                "q*theta - p interval touches zero; cannot invert",
            ));
        }
        Ok(RationalInterval::new(t.hi.recip(), t.lo.recip()))
    }

    /// Interval for `alpha^2 = |theta - p/q|`.
    pub fn alpha_sq_interval(&self) -> RationalInterval {
        let a = self.qtheta_minus_p.abs();
        let q_r = BigRational::from_integer(BigInt::from(self.q.clone()));
        RationalInterval::new(&a.lo / &q_r, &a.hi / &q_r)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha_sq_interval().midpoint_f64().sqrt()
    }

    pub fn beta(&self) -> f64 {
        1.0 / (self.q_f64() * self.alpha())
    }

    pub fn beta_sq(&self) -> f64 {
        self.beta() * self.beta()
    }

    pub fn q_f64(&self) -> f64 {
        rational_to_f64(&BigRational::from_integer(BigInt::from(self.q.clone())))
    }

    pub fn p_f64(&self) -> f64 {
        rational_to_f64(&BigRational::from_integer(BigInt::from(self.p.clone())))
    }

    /// Checks the two approximation conditions: `|theta - p/q| < 1/q^2`
    /// and `q|q*theta - p| < 1`.
    pub fn check_approximation(&self) -> Result<(bool, bool)> {
        check_approximation(&self.theta, &self.p, &self.q)
    }
}

/// Decides `|theta - p/q| < 1/q^2` and `q|q*theta - p| < 1` with exact
/// interval arithmetic.  Comparisons too close to call raise.
pub fn check_approximation(theta: &ThetaSpec, p: &BigUint, q: &BigUint) -> Result<(bool, bool)> {
    if q.is_zero() {
        return Err(Error::domain("q must be >= 1"));
    }
    if num_integer::Integer::gcd(p, q) != BigUint::one() {
        return Err(Error::domain("p/q must be in lowest terms"));
    }
    let iv = theta.interval();
    let qtp = q_theta_minus_p(&iv, p, q).abs();
    let q_r = BigRational::from_integer(BigInt::from(q.clone()));
    // q|q theta - p| < 1  <=>  |theta - p/q| < 1/q^2
    let scaled = RationalInterval::new(&qtp.lo * &q_r, &qtp.hi * &q_r);
    let eq21 = scaled.strictly_less_than(&BigRational::one())?;
    Ok((eq21, eq21))
}

/// First `count` convergents of `theta`, starting at `p0/q0 = 0/1`.
pub fn convergents(theta: &ThetaSpec, count: usize) -> Result<Vec<Convergent>> {
    if count == 0 {
        return Err(Error::domain("count must be >= 1"));
    }
    let quotients = theta.partial_quotients(count)?;
    let mut out = Vec::with_capacity(count);
    let mut p_prev = BigUint::one(); // p_{-1}
    let mut q_prev = BigUint::zero(); // q_{-1}
    let mut p_cur = BigUint::zero(); // updated to p_0 in the first step
    let mut q_cur = BigUint::one();
    for (n, &a) in quotients.iter().enumerate() {
        let (p_n, q_n) = if n == 0 {
            (BigUint::from(a), BigUint::one())
        } else {
            (BigUint::from(a) * &p_cur + &p_prev, BigUint::from(a) * &q_cur + &q_prev)
        };
        if n > 0 {
            p_prev = p_cur.clone();
            q_prev = q_cur.clone();
        }
        p_cur = p_n.clone();
        q_cur = q_n.clone();
        out.push(Convergent::new(theta.clone(), p_n, q_n)?);
    }
    Ok(out)
}

/// One hit of the continued-fraction window scan: the triple `(N, 1, M)` at
/// positions `(n, n+1, n+2)`, the exact open-interval bounds on
/// `beta^2 = 1/(q_n|q_n theta - p_n|)`, and whether the window condition
/// `1 + 1/(M+1) < beta^2 < 1 + 1/M + 1/N` is certified.
#[derive(Debug, Clone)]
pub struct GdeltaHit {
    pub n: usize,
    pub p: BigUint,
    pub q: BigUint,
    pub beta_sq_lo: BigRational,
    pub beta_sq_hi: BigRational,
    pub lower_bound: BigRational,
    pub upper_bound: BigRational,
    pub satisfied: bool,
}

/// Scans a continued-fraction coefficient list for consecutive triples
/// `(N, 1, M)` at positions `(n, n+1, n+2)`, `n >= 1`, and certifies the
/// window condition at each hit.
///
/// `beta^2 = xi_{n+1} + q_{n-1}/q_n`, where `xi_{n+1} = [a_{n+1}; a_{n+2}, ...]`
/// is enclosed by backward recursion over the known coefficients with the
/// unknown tail in `(a_last, a_last + 1)`.  The resulting bounds are open,
/// so the strict inequalities are certified by `<=` against the hull.
pub fn gdelta_scan(cf: &[u64], big_n: u64, big_m: u64) -> Result<Vec<GdeltaHit>> {
    if cf.is_empty() || cf[0] != 0 {
        return Err(Error::domain("continued fraction must start with a0 = 0"));
    }
    if big_n == 0 || big_m == 0 {
        return Err(Error::domain("window parameters N, M must be positive"));
    }
    // Convergent denominators/numerators q_0..q_last.
    let mut ps: Vec<BigUint> = Vec::with_capacity(cf.len());
    let mut qs: Vec<BigUint> = Vec::with_capacity(cf.len());
    for (n, &a) in cf.iter().enumerate() {
        let (p_n, q_n) = if n == 0 {
            (BigUint::from(a), BigUint::one())
        } else if n == 1 {
            (BigUint::from(a) * &ps[0] + BigUint::one(), BigUint::from(a))
        } else {
            (
                BigUint::from(a) * &ps[n - 1] + &ps[n - 2],
                BigUint::from(a) * &qs[n - 1] + &qs[n - 2],
            )
        };
        ps.push(p_n);
        qs.push(q_n);
    }

    let lower_bound = BigRational::one()
        + BigRational::new(BigInt::one(), BigInt::from(big_m + 1));
    let upper_bound = BigRational::one()
        + BigRational::new(BigInt::one(), BigInt::from(big_m))
        + BigRational::new(BigInt::one(), BigInt::from(big_n));

    let mut hits = Vec::new();
    for n in 1..cf.len().saturating_sub(2) {
        if cf[n] != big_n || cf[n + 1] != 1 || cf[n + 2] != big_m {
            continue;
        }
        // xi_{n+1} from coefficients a_{n+1}..a_last, tail in (0,1) open.
        let (xi_lo, xi_hi) = xi_bounds(&cf[n + 1..]);
        let ratio = BigRational::new(
            BigInt::from(qs[n - 1].clone()),
            BigInt::from(qs[n].clone()),
        );
        let beta_sq_lo = &xi_lo + &ratio;
        let beta_sq_hi = &xi_hi + &ratio;
        let satisfied = beta_sq_lo >= lower_bound && beta_sq_hi <= upper_bound;
        hits.push(GdeltaHit {
            n,
            p: ps[n].clone(),
            q: qs[n].clone(),
            beta_sq_lo,
            beta_sq_hi,
            lower_bound: lower_bound.clone(),
            upper_bound: upper_bound.clone(),
            satisfied,
        });
    }
    Ok(hits)
}

/// Builds a continued-fraction spec for an irrational `theta > p/q` whose
/// convergent at index `m` (even) is exactly `p/q`.
///
/// Every rational has two expansions of opposite parity
/// (`[...; a_m] = [...; a_m - 1, 1]`); the even-length one is chosen so that
/// `q_m theta - p_m > 0`, i.e. the instance needs no normalization flip.
/// A periodic filler tail makes the value irrational.
pub fn synthetic_theta_above(p: u64, q: u64) -> Result<ThetaSpec> {
    if q == 0 || p >= q {
        return Err(Error::domain("need 0 <= p < q"));
    }
    // Euclid quotients of p/q as [0; a1, ..., am].
    let mut cf = vec![0u64];
    let (mut num, mut den) = (q, p);
    while den != 0 {
        cf.push(num / den);
        let r = num % den;
        num = den;
        den = r;
    }
    // cf currently = [0; a1..am] with the canonical last quotient.
    let m = cf.len() - 1;
    if m % 2 == 1 {
        // Switch parity: [..., a_m] -> [..., a_m - 1, 1].
        let last = cf.pop().unwrap();
        if last >= 2 {
            cf.push(last - 1);
            cf.push(1);
        } else {
            // last == 1 only happens for p/q = [0;1] = 1/1, excluded by p<q.
            return Err(Error::domain("unexpected continued fraction shape"));
        }
    }
    for _ in 0..8 {
        cf.extend_from_slice(&[2, 1]);
    }
    ThetaSpec::cf(cf)
}

/// Convenience: the full pipeline entry for a synthetic `(p, q)` instance.
pub fn synthetic_convergent(p: u64, q: u64) -> Result<Convergent> {
    let theta = synthetic_theta_above(p, q)?;
    Convergent::new(theta, BigUint::from(p), BigUint::from(q))
}

/// Open bounds for `xi = [a_k; a_{k+1}, ...]` given the known coefficients
/// `tail = [a_k, ..., a_last]`; the expansion continues past the list.
fn xi_bounds(tail: &[u64]) -> (BigRational, BigRational) {
    // Terminal: xi_last in (a_last, a_last + 1).
    let last = *tail.last().unwrap();
    let mut lo = BigRational::from_integer(BigInt::from(last));
    let mut hi = lo.clone() + BigRational::one();
    for &a in tail[..tail.len() - 1].iter().rev() {
        // xi = a + 1/xi_next; reciprocal swaps bounds.
        let a_r = BigRational::from_integer(BigInt::from(a));
        let new_lo = &a_r + hi.recip();
        let new_hi = &a_r + lo.recip();
        lo = new_lo;
        hi = new_hi;
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec_cf(v: &[u64]) -> ThetaSpec {
        ThetaSpec::cf(v.to_vec()).unwrap()
    }

    fn pq(c: &Convergent) -> (u64, u64) {
        (
            u64::try_from(&c.p).unwrap(),
            u64::try_from(&c.q).unwrap(),
        )
    }

    #[test]
    fn convergents_of_sqrt2_minus_1() {
        let theta = spec_cf(&[0, 2, 2, 2, 2, 2]);
        let cs = convergents(&theta, 5).unwrap();
        let got: Vec<(u64, u64)> = cs.iter().map(pq).collect();
        assert_eq!(got, vec![(0, 1), (1, 2), (2, 5), (5, 12), (12, 29)]);
    }

    #[test]
    fn convergents_of_golden_are_fibonacci() {
        let theta = spec_cf(&[0, 1, 1, 1, 1, 1, 1, 1]);
        let cs = convergents(&theta, 6).unwrap();
        let got: Vec<(u64, u64)> = cs.iter().map(pq).collect();
        assert_eq!(got, vec![(0, 1), (1, 1), (1, 2), (2, 3), (3, 5), (5, 8)]);
    }

    #[test]
    fn convergents_from_decimal() {
        let theta = ThetaSpec::decimal("0.4142135623", 10).unwrap();
        let cs = convergents(&theta, 3).unwrap();
        let got: Vec<(u64, u64)> = cs.iter().map(pq).collect();
        assert_eq!(got, vec![(0, 1), (1, 2), (2, 5)]);
    }

    #[test]
    fn convergent_determinant_is_unimodular() {
        let theta = spec_cf(&[0, 2, 1, 3, 2, 1, 3, 2, 1, 3]);
        let cs = convergents(&theta, 9).unwrap();
        for w in cs.windows(2) {
            let (p0, q0) = pq(&w[0]);
            let (p1, q1) = pq(&w[1]);
            let det = (q1 as i128) * (p0 as i128) - (p1 as i128) * (q0 as i128);
            assert!(det == 1 || det == -1, "det = {det}");
        }
    }

    #[test]
    fn every_convergent_satisfies_eq21() {
        let theta = spec_cf(&[0, 1, 2, 1, 2, 1, 2, 1, 2]);
        for c in convergents(&theta, 7).unwrap() {
            let (a, b) = c.check_approximation().unwrap();
            assert!(a && b);
        }
    }

    #[test]
    fn check_approximation_examples() {
        let theta = ThetaSpec::decimal("0.41421356237309", 14).unwrap();
        // 1/2 is a convergent.
        let r = check_approximation(&theta, &1u32.into(), &2u32.into()).unwrap();
        assert_eq!(r, (true, true));
        // |theta - 1/4| = 0.164... > 1/16.
        let r = check_approximation(&theta, &1u32.into(), &4u32.into()).unwrap();
        assert_eq!(r, (false, false));
        // Degenerate convergent 0/1: |theta| < 1.
        let r = check_approximation(&theta, &0u32.into(), &1u32.into()).unwrap();
        assert_eq!(r, (true, true));
    }

    #[test]
    fn flip_detection() {
        // [0;2,2,...]: p1/q1 = 1/2 > theta, so the flip applies.
        let theta = spec_cf(&[0, 2, 2, 2, 2, 2]);
        let cs = convergents(&theta, 3).unwrap();
        assert!(!cs[0].needs_flip().unwrap()); // 0/1 < theta
        assert!(cs[1].needs_flip().unwrap()); // 1/2 > theta
        assert!(!cs[2].needs_flip().unwrap()); // 2/5 < theta
        assert_eq!(u64::try_from(&cs[1].effective_p().unwrap()).unwrap(), 1);
    }

    #[test]
    fn beta_sq_of_half_convergent() {
        // beta^2 = 1/(2|2 theta - 1|) = 1/(2(3 - 2 sqrt 2)) = 2.9142...
        let theta = ThetaSpec::decimal("0.414213562373095", 15).unwrap();
        let c = Convergent::new(theta, 1u32.into(), 2u32.into()).unwrap();
        let b2 = c.beta_sq_interval().unwrap();
        let mid = b2.midpoint_f64();
        assert!((mid - 2.914_213_56).abs() < 1e-6, "beta^2 = {mid}");
    }

    #[test]
    fn gdelta_scan_periodic_213() {
        let cf: Vec<u64> = std::iter::once(0)
            .chain([2u64, 1, 3].iter().copied().cycle().take(30))
            .collect();
        let hits = gdelta_scan(&cf, 2, 3).unwrap();
        assert!(hits.len() >= 8);
        for h in &hits {
            assert!(h.satisfied, "hit at n = {} failed: [{}, {}]", h.n, h.beta_sq_lo, h.beta_sq_hi);
        }
    }

    #[test]
    fn gdelta_scan_515() {
        let cf: Vec<u64> = std::iter::once(0)
            .chain([5u64, 1, 5].iter().copied().cycle().take(24))
            .collect();
        let hits = gdelta_scan(&cf, 5, 5).unwrap();
        assert!(!hits.is_empty());
        // beta^2 in (7/6, 1.4) for every hit.
        for h in &hits {
            assert!(h.satisfied);
            assert!(h.beta_sq_lo >= BigRational::new(7.into(), 6.into()));
            assert!(h.beta_sq_hi <= BigRational::new(14.into(), 10.into()));
        }
    }

    #[test]
    fn gdelta_scan_no_hits() {
        let cf = vec![0, 4, 4, 4, 4, 4, 4];
        let hits = gdelta_scan(&cf, 2, 3).unwrap();
        assert!(hits.is_empty());
    }
}
