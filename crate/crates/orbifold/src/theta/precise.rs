//! Extended-precision evaluation of real theta values.
//!
//! Backs the identity certificates beyond binary64: theta series at purely
//! imaginary `t = ix` (`x` rational) and `z` in `{0, pi/2}` reduce to real
//! sums of `exp(-pi x r)` with rational `r > 0`, so a small fixed-point
//! layer over `BigInt` (value = mantissa / 2^bits) with argument-reduced
//! `exp`, Machin `pi`, and Newton square roots handles them to any digit
//! count.  Guard bits absorb the rounding of the reduction ladder.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

const GUARD_BITS: u32 = 64;

/// Fixed-point real: `value = mantissa / 2^bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixed {
    mantissa: BigInt,
    bits: u32,
}

impl Fixed {
    pub fn zero(bits: u32) -> Self {
        Fixed { mantissa: BigInt::zero(), bits }
    }

    pub fn one(bits: u32) -> Self {
        Fixed { mantissa: BigInt::one() << bits, bits }
    }

    pub fn from_u64(v: u64, bits: u32) -> Self {
        Fixed { mantissa: BigInt::from(v) << bits, bits }
    }

    pub fn from_rational(r: &BigRational, bits: u32) -> Self {
        let scaled = (r.numer() << bits) / r.denom();
        Fixed { mantissa: scaled, bits }
    }

    pub fn add(&self, o: &Fixed) -> Fixed {
        assert_eq!(self.bits, o.bits);
        Fixed { mantissa: &self.mantissa + &o.mantissa, bits: self.bits }
    }

    pub fn sub(&self, o: &Fixed) -> Fixed {
        assert_eq!(self.bits, o.bits);
        Fixed { mantissa: &self.mantissa - &o.mantissa, bits: self.bits }
    }

    pub fn mul(&self, o: &Fixed) -> Fixed {
        assert_eq!(self.bits, o.bits);
        Fixed { mantissa: (&self.mantissa * &o.mantissa) >> self.bits, bits: self.bits }
    }

    pub fn div(&self, o: &Fixed) -> Fixed {
        assert_eq!(self.bits, o.bits);
        assert!(!o.mantissa.is_zero(), "division by zero");
        Fixed { mantissa: (&self.mantissa << self.bits) / &o.mantissa, bits: self.bits }
    }

    pub fn neg(&self) -> Fixed {
        Fixed { mantissa: -&self.mantissa, bits: self.bits }
    }

    pub fn abs(&self) -> Fixed {
        Fixed { mantissa: self.mantissa.abs(), bits: self.bits }
    }

    pub fn scale_int(&self, k: i64) -> Fixed {
        Fixed { mantissa: &self.mantissa * BigInt::from(k), bits: self.bits }
    }

    pub fn shr(&self, k: u32) -> Fixed {
        Fixed { mantissa: &self.mantissa >> k, bits: self.bits }
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn cmp_abs(&self, o: &Fixed) -> std::cmp::Ordering {
        self.mantissa.abs().cmp(&o.mantissa.abs())
    }

    /// `|self| < 10^-digits`, decided exactly.
    pub fn abs_below_pow10(&self, digits: u32) -> bool {
        let lhs = self.mantissa.abs() * BigInt::from(10u32).pow(digits);
        lhs < (BigInt::one() << self.bits)
    }

    /// Newton square root (requires a nonnegative value).
    pub fn sqrt(&self) -> Result<Fixed> {
        if self.mantissa.is_negative() {
            return Err(Error::domain("sqrt of negative fixed-point value"));
        }
        let shifted: BigUint = (self.mantissa.clone() << self.bits)
            .to_biguint()
            .expect("nonnegative");
        Ok(Fixed { mantissa: BigInt::from(shifted.sqrt()), bits: self.bits })
    }

    pub fn to_f64(&self) -> f64 {
        let r = BigRational::new(self.mantissa.clone(), BigInt::one() << self.bits);
        r.to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with `digits` places (truncated toward zero).
    pub fn to_decimal_string(&self, digits: u32) -> String {
        let neg = self.mantissa.is_negative();
        let scaled = self.mantissa.abs() * BigInt::from(10u32).pow(digits);
        let int = scaled >> self.bits;
        let s = int.to_string();
        let (whole, frac) = if s.len() > digits as usize {
            let split = s.len() - digits as usize;
            (s[..split].to_string(), s[split..].to_string())
        } else {
            ("0".to_string(), format!("{:0>width$}", s, width = digits as usize))
        };
        format!("{}{}.{}", if neg { "-" } else { "" }, whole, frac)
    }
}

/// Working precision for `digits` decimal digits.
fn bits_for(digits: u32) -> u32 {
    // log2(10) < 3.33; guard bits absorb reduction error.
    (digits * 10 + 2) / 3 + GUARD_BITS
}

/// `pi` by Machin's formula, exact to the working precision.
pub fn pi_fixed(bits: u32) -> Fixed {
    // pi = 16 atan(1/5) - 4 atan(1/239), with integer scaled arctans.
    let atan_inv = |x: u64| -> BigInt {
        let one = BigInt::one() << (bits + 8);
        let x2 = BigInt::from(x * x);
        let mut term = one / BigInt::from(x);
        let mut sum = term.clone();
        let mut k = 1u64;
        while !term.is_zero() {
            term = term / &x2;
            let denom = BigInt::from(2 * k + 1);
            let contrib = &term / denom;
            if k % 2 == 1 {
                sum -= &contrib;
            } else {
                sum += &contrib;
            }
            if contrib.is_zero() {
                break;
            }
            k += 1;
        }
        sum
    };
    let v = atan_inv(5) * 16 - atan_inv(239) * 4;
    Fixed { mantissa: v >> 8, bits }
}

/// `exp(-v)` for `v >= 0` by halving reduction and alternating Taylor sum.
pub fn exp_neg(v: &Fixed) -> Result<Fixed> {
    if v.is_negative() {
        return Err(Error::domain("exp_neg expects a nonnegative argument"));
    }
    let bits = v.bits;
    // Reduce v/2^k < 1/2.
    let half = Fixed { mantissa: BigInt::one() << (bits - 1), bits };
    let mut k = 0u32;
    let mut u = v.clone();
    while u.cmp_abs(&half) != std::cmp::Ordering::Less {
        u = u.shr(1);
        k += 1;
        if k > 64 {
            return Err(Error::domain("exp_neg argument too large"));
        }
    }
    // Taylor: exp(-u) = sum (-u)^j / j!.
    let mut term = Fixed::one(bits);
    let mut sum = Fixed::one(bits);
    let mut j = 1u64;
    loop {
        term = term.mul(&u);
        term = Fixed { mantissa: term.mantissa / BigInt::from(j), bits };
        if term.is_zero() {
            break;
        }
        if j % 2 == 1 {
            sum = sum.sub(&term);
        } else {
            sum = sum.add(&term);
        }
        j += 1;
        if j > 10_000 {
            return Err(Error::Truncation("exp_neg Taylor did not terminate".into()));
        }
    }
    // Undo the reduction by squaring.
    for _ in 0..k {
        sum = sum.mul(&sum);
    }
    Ok(sum)
}

/// Which `z` the real-argument series is taken at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZPoint {
    /// `z = 0`.
    Zero,
    /// `z = pi/2` (alternating signs for theta3; theta2 vanishes there).
    HalfPi,
}

/// Extended-precision `theta_kind(z, ix)` for `z` in `{0, pi/2}` and
/// rational `x > 0`; result is exact to roughly `digits` decimals.
pub fn theta_imag(kind: super::ThetaKind, z: ZPoint, x: &BigRational, digits: u32) -> Result<Fixed> {
    if !x.is_positive() {
        return Err(Error::domain("theta_imag requires x > 0"));
    }
    let bits = bits_for(digits);
    let pi = pi_fixed(bits);
    let x_fixed = Fixed::from_rational(x, bits);
    let pix = pi.mul(&x_fixed);
    // Terms decay like exp(-pi x n^2); stop once a term underflows the
    // working precision entirely.
    let mut sum;
    match kind {
        super::ThetaKind::Theta3 | super::ThetaKind::Theta4 => {
            sum = Fixed::one(bits);
            let mut n = 1u64;
            loop {
                let e = exp_neg(&pix.scale_int((n * n) as i64))?;
                if e.is_zero() {
                    break;
                }
                let signed = match (kind, z) {
                    (super::ThetaKind::Theta4, _) if n % 2 == 1 => e.neg(),
                    (_, ZPoint::HalfPi) if n % 2 == 1 => e.neg(),
                    _ => e,
                };
                sum = sum.add(&signed.scale_int(2));
                n += 1;
                if n > 10_000 {
                    return Err(Error::Truncation("theta_imag did not terminate".into()));
                }
            }
        }
        super::ThetaKind::Theta2 => {
            if z == ZPoint::HalfPi {
                return Ok(Fixed::zero(bits)); // terms cancel in pairs
            }
            sum = Fixed::zero(bits);
            let mut n = 0u64;
            loop {
                // exp(-pi x (n + 1/2)^2) = exp(-pi x (4n^2+4n+1)/4)
                let quarter = pix.scale_int((4 * n * n + 4 * n + 1) as i64).shr(2);
                let e = exp_neg(&quarter)?;
                if e.is_zero() {
                    break;
                }
                sum = sum.add(&e.scale_int(2));
                n += 1;
                if n > 10_000 {
                    return Err(Error::Truncation("theta_imag did not terminate".into()));
                }
            }
        }
    }
    Ok(sum)
}

/// `sqrt(2)` at the working precision for `digits`.
pub fn sqrt2(digits: u32) -> Fixed {
    Fixed::from_u64(2, bits_for(digits)).sqrt().expect("nonnegative")
}

/// Residual of the constant identity
/// `theta3(0, 2i) - (1 + sqrt 2) theta2(0, 2i)` at extended precision.
pub fn constant_identity_residual(digits: u32) -> Result<Fixed> {
    let two = BigRational::from_integer(2.into());
    let t3 = theta_imag(super::ThetaKind::Theta3, ZPoint::Zero, &two, digits)?;
    let t2 = theta_imag(super::ThetaKind::Theta2, ZPoint::Zero, &two, digits)?;
    let bits = bits_for(digits);
    let coef = Fixed::one(bits).add(&sqrt2(digits));
    Ok(t3.sub(&coef.mul(&t2)))
}

/// Residual of `theta3(0, i/2)/theta3(pi/2, i/2) - (1 + sqrt 2)`.
pub fn ratio_identity_residual(digits: u32) -> Result<Fixed> {
    let half = BigRational::new(1.into(), 2.into());
    let a = theta_imag(super::ThetaKind::Theta3, ZPoint::Zero, &half, digits)?;
    let b = theta_imag(super::ThetaKind::Theta3, ZPoint::HalfPi, &half, digits)?;
    let bits = bits_for(digits);
    let coef = Fixed::one(bits).add(&sqrt2(digits));
    Ok(a.div(&b).sub(&coef))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::ThetaKind;

    #[test]
    fn pi_digits() {
        let pi = pi_fixed(bits_for(40));
        let s = pi.to_decimal_string(40);
        assert!(s.starts_with("3.1415926535897932384626433832795028841971"), "{s}");
    }

    #[test]
    fn exp_neg_known_values() {
        let bits = bits_for(35);
        let one = Fixed::one(bits);
        let e1 = exp_neg(&one).unwrap();
        let s = e1.to_decimal_string(35);
        // 1/e = 0.36787944117144232159552377016146086...
        assert!(s.starts_with("0.3678794411714423215955237701614608"), "{s}");
        // exp(-10)
        let e10 = exp_neg(&Fixed::from_u64(10, bits)).unwrap();
        let f = e10.to_f64();
        assert!((f - (-10.0f64).exp()).abs() < 1e-18);
    }

    #[test]
    fn sqrt2_digits() {
        let s = sqrt2(40).to_decimal_string(40);
        assert!(s.starts_with("1.414213562373095048801688724209698078569"), "{s}");
    }

    #[test]
    fn theta_imag_matches_binary64() {
        use num_complex::Complex64;
        let x = BigRational::new(3.into(), 2.into());
        let hp = theta_imag(ThetaKind::Theta3, ZPoint::Zero, &x, 30).unwrap().to_f64();
        let bin = crate::theta::theta(
            ThetaKind::Theta3,
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 1.5),
            1e-15,
        )
        .unwrap()
        .re;
        assert!((hp - bin).abs() < 1e-13, "{hp} vs {bin}");
    }

    #[test]
    fn constant_identity_to_twenty_digits() {
        let r = constant_identity_residual(40).unwrap();
        assert!(r.abs_below_pow10(20), "residual = {}", r.to_decimal_string(40));
        // And it survives a raised working precision.
        let r2 = constant_identity_residual(60).unwrap();
        assert!(r2.abs_below_pow10(30));
    }

    #[test]
    fn ratio_identity_extended() {
        let r = ratio_identity_residual(40).unwrap();
        assert!(r.abs_below_pow10(20), "residual = {}", r.to_decimal_string(40));
    }

    #[test]
    fn inversion_instances_extended() {
        // theta4(0, i/2) = sqrt2 theta2(0, 2i);
        // theta3(0, i/2) = sqrt2 theta3(0, 2i).
        let digits = 35;
        let half = BigRational::new(1.into(), 2.into());
        let two = BigRational::from_integer(2.into());
        let s2 = sqrt2(digits);
        let lhs4 = theta_imag(ThetaKind::Theta4, ZPoint::Zero, &half, digits).unwrap();
        let rhs4 = s2.mul(&theta_imag(ThetaKind::Theta2, ZPoint::Zero, &two, digits).unwrap());
        assert!(lhs4.sub(&rhs4).abs_below_pow10(25));
        let lhs3 = theta_imag(ThetaKind::Theta3, ZPoint::Zero, &half, digits).unwrap();
        let rhs3 = s2.mul(&theta_imag(ThetaKind::Theta3, ZPoint::Zero, &two, digits).unwrap());
        assert!(lhs3.sub(&rhs3).abs_below_pow10(25));
    }
}
