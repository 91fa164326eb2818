//! Exact representations of the input irrational `theta`.
//!
//! Two input modes are supported:
//!
//! * an explicit continued-fraction coefficient list `[a0; a1, a2, ...]`
//!   (exact; `a0 = 0` since `theta` lies in `(0,1)`), or
//! * a decimal string with a stated precision, interpreted as the closed
//!   rational interval `[v - 10^-digits, v + 10^-digits]`.
//!
//! Every derived quantity is an exact rational interval.  Comparisons or
//! digit extractions the interval cannot settle raise
//! [`Error::PrecisionExhausted`](crate::Error) — they never guess.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use sha2::{Digest, Sha256};

use crate::{Error, Result};

/// Closed interval `[lo, hi]` of exact rationals containing `theta`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RationalInterval { lo, hi }
    }

    pub fn point(v: BigRational) -> Self {
        RationalInterval { lo: v.clone(), hi: v }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        rational_to_f64(&mid)
    }

    /// Decides `self < rhs` for a point `rhs`; errors when `rhs` lies inside
    /// the interval.
    pub fn strictly_less_than(&self, rhs: &BigRational) -> Result<bool> {
        if &self.hi < rhs {
            Ok(true)
        } else if &self.lo >= rhs {
            Ok(false)
        } else {
            Err(Error::precision(format!(
                "comparison against {rhs} undecidable on [{}, {}]",
                self.lo, self.hi
            )))
        }
    }

    /// Interval absolute value.
    pub fn abs(&self) -> Self {
        if self.lo.is_negative() && self.hi.is_positive() {
            let m = self.lo.abs().max(self.hi.abs());
            RationalInterval::new(BigRational::zero(), m)
        } else {
            let a = self.lo.abs();
            let b = self.hi.abs();
            RationalInterval::new(a.clone().min(b.clone()), a.max(b))
        }
    }

    /// Sign of the interval if determined: -1, 0 (exactly zero), or +1.
    pub fn sign(&self) -> Result<i32> {
        if self.lo.is_positive() {
            Ok(1)
        } else if self.hi.is_negative() {
            Ok(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Ok(0)
        } else {
            Err(Error::precision("sign undecidable at current precision"))
        }
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).expect("finite rational")
}

/// Input specification of `theta`.
#[derive(Debug, Clone, PartialEq)]
pub enum ThetaSpec {
    /// Continued-fraction coefficients `[a0; a1, a2, ...]` with `a0 = 0` and
    /// `a_i >= 1` for `i >= 1`.  The list is a prefix of the expansion of an
    /// irrational, so the tail is only known to lie in `(0, 1)` past the end.
    CfList(Vec<u64>),
    /// Decimal string plus stated precision (number of trusted decimals).
    Decimal { digits: String, precision: u32 },
}

impl ThetaSpec {
    pub fn cf(coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::domain("empty continued fraction"));
        }
        if coeffs[0] != 0 {
            return Err(Error::domain("theta must lie in (0,1): a0 must be 0"));
        }
        if coeffs[1..].iter().any(|&a| a == 0) {
            return Err(Error::domain("continued fraction coefficients a_i (i>=1) must be >= 1"));
        }
        if coeffs.len() < 2 {
            return Err(Error::domain("need at least one partial quotient beyond a0"));
        }
        Ok(ThetaSpec::CfList(coeffs))
    }

    pub fn decimal(digits: &str, precision: u32) -> Result<Self> {
        parse_decimal(digits)?;
        if precision == 0 {
            return Err(Error::domain("precision must be >= 1 decimal digit"));
        }
        Ok(ThetaSpec::Decimal { digits: digits.to_string(), precision })
    }

    /// Canonical text form, echoed (with its hash) into certificates.
    pub fn describe(&self) -> String {
        match self {
            ThetaSpec::CfList(cs) => {
                let body: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                format!("cf:[{}]", body.join(","))
            }
            ThetaSpec::Decimal { digits, precision } => {
                format!("decimal:{digits}@{precision}")
            }
        }
    }

    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.describe().as_bytes());
        hex_lower(&h.finalize())
    }

    /// Enclosing rational interval for `theta`.
    pub fn interval(&self) -> RationalInterval {
        match self {
            ThetaSpec::CfList(cs) => cf_prefix_interval(cs),
            ThetaSpec::Decimal { digits, precision } => {
                let v = parse_decimal(digits).expect("validated at construction");
                let u = pow10_recip(*precision);
                RationalInterval::new(&v - &u, &v + &u)
            }
        }
    }

    /// Extracts the first `count` partial quotients `[a0; a1, ...]`,
    /// erroring if the interval cannot settle one of them.
    pub fn partial_quotients(&self, count: usize) -> Result<Vec<u64>> {
        match self {
            ThetaSpec::CfList(cs) => {
                if cs.len() >= count {
                    Ok(cs[..count].to_vec())
                } else {
                    Err(Error::precision(format!(
                        "continued fraction list has {} coefficients, {count} requested",
                        cs.len()
                    )))
                }
            }
            ThetaSpec::Decimal { .. } => {
                let iv = self.interval();
                extract_cf(&iv, count)
            }
        }
    }
}

fn hex_lower(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

fn pow10_recip(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u32).pow(k))
}

fn parse_decimal(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let (int_part, frac_part) = match t.split_once('.') {
        Some((a, b)) => (a, b),
        None => (t, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::domain(format!("cannot parse decimal {s:?}")));
    }
    let digits_ok = |p: &str| p.chars().all(|c| c.is_ascii_digit());
    if !digits_ok(int_part) || !digits_ok(frac_part) {
        return Err(Error::domain(format!("cannot parse decimal {s:?}")));
    }
    let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
    let whole: BigInt = if int_part.is_empty() { BigInt::zero() } else { int_part.parse().unwrap() };
    let frac: BigInt = if frac_part.is_empty() { BigInt::zero() } else { frac_part.parse().unwrap() };
    Ok(BigRational::new(whole * &scale + frac, scale))
}

/// Interval enclosing every irrational whose expansion starts with `cs`.
///
/// The value is `[a0; a1, ..., a_m + eta]` for some tail `eta in (0,1)`;
/// evaluating at `eta = 0` and `eta = 1` gives the two endpoints.
fn cf_prefix_interval(cs: &[u64]) -> RationalInterval {
    let at = |tail_one: bool| -> BigRational {
        let mut v: Option<BigRational> = None; // value of [a_k; a_{k+1}, ...]
        for (i, &a) in cs.iter().enumerate().rev() {
            let mut x = BigRational::from_integer(BigInt::from(a));
            if i == cs.len() - 1 && tail_one {
                x += BigRational::one();
            }
            v = Some(match v {
                None => x,
                Some(prev) => x + prev.recip(),
            });
        }
        v.unwrap()
    };
    let (a, b) = (at(false), at(true));
    if a <= b {
        RationalInterval::new(a, b)
    } else {
        RationalInterval::new(b, a)
    }
}

/// Extracts `count` partial quotients from a `theta` interval.
fn extract_cf(iv: &RationalInterval, count: usize) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(count);
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    for idx in 0..count {
        if lo.is_negative() {
            // Only possible for a0 = 0 of a (0,1) interval touching zero.
            lo = BigRational::zero();
        }
        let fl_lo = lo.floor();
        let fl_hi = hi.floor();
        if fl_lo != fl_hi {
            return Err(Error::precision(format!(
                "partial quotient a{idx} undecidable at stated precision"
            )));
        }
        let a = fl_lo.to_integer();
        let a_u64 = u64::try_from(&a)
            .map_err(|_| Error::domain("partial quotient exceeds u64".to_string()))?;
        out.push(a_u64);
        let frac_lo = &lo - BigRational::from_integer(a.clone());
        let frac_hi = &hi - BigRational::from_integer(a);
        if frac_lo.is_zero() || frac_hi.is_zero() {
            return Err(Error::precision(format!(
                "fractional part vanishes after a{idx}: input is rational or precision exhausted"
            )));
        }
        // Reciprocal swaps the endpoints.
        let new_lo = frac_hi.recip();
        let new_hi = frac_lo.recip();
        lo = new_lo;
        hi = new_hi;
    }
    Ok(out)
}

/// Exact interval for `q*theta - p`.
pub fn q_theta_minus_p(theta: &RationalInterval, p: &BigUint, q: &BigUint) -> RationalInterval {
    let q_r = BigRational::from_integer(BigInt::from(q.clone()));
    let p_r = BigRational::from_integer(BigInt::from(p.clone()));
    RationalInterval::new(&q_r * &theta.lo - &p_r, &q_r * &theta.hi - &p_r)
}
