//! Four-square decompositions and the quadratic form data `(A, B, C)`.
//!
//! For `p = p1^2 + p2^2 + p3^2 + p4^2` the derived integers
//!
//! * `A = p1^2 - p2^2 + p3^2 - p4^2`
//! * `B = p1 p2 + p3 p4`
//! * `C = p1 p4 - p2 p3`
//!
//! satisfy `A^2 + 4B^2 + 4C^2 = p^2` exactly, so `gcd(A, B, C)` divides `p`.

use crate::{Error, Result};

/// A decomposition `p = p1^2 + p2^2 + p3^2 + p4^2` with
/// `p1 >= p2 >= p3 >= p4 >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourSquare {
    pub p: u64,
    pub p1: u64,
    pub p2: u64,
    pub p3: u64,
    pub p4: u64,
}

impl FourSquare {
    pub fn parts(&self) -> [u64; 4] {
        [self.p1, self.p2, self.p3, self.p4]
    }

    pub fn parts_i128(&self) -> [i128; 4] {
        [self.p1 as i128, self.p2 as i128, self.p3 as i128, self.p4 as i128]
    }

    /// Builds a decomposition from explicit parts, validating the sum.
    pub fn from_parts(p1: u64, p2: u64, p3: u64, p4: u64) -> Result<Self> {
        let p = p1 * p1 + p2 * p2 + p3 * p3 + p4 * p4;
        let mut v = [p1, p2, p3, p4];
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(FourSquare { p, p1: v[0], p2: v[1], p3: v[2], p4: v[3] })
    }
}

/// `A^2 + 4B^2 + 4C^2 = p^2` holds exactly for the output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbcTriple {
    pub a: i128,
    pub b: i128,
    pub c: i128,
}

/// Lexicographically smallest decomposition with `p1 >= p2 >= p3 >= p4 >= 0`
/// ("smallest" on the tuple `(p1, p2, p3, p4)`), found by bounded search.
/// Existence is Lagrange's theorem.
pub fn four_square(p: u64) -> FourSquare {
    let isqrt = |n: u64| -> u64 {
        let mut r = (n as f64).sqrt() as u64;
        while r * r > n {
            r -= 1;
        }
        while (r + 1) * (r + 1) <= n {
            r += 1;
        }
        r
    };
    // p1 must satisfy 4*p1^2 >= p (largest part) and p1^2 <= p.
    let hi = isqrt(p);
    let lo = {
        let mut v = isqrt(p / 4);
        while 4 * v * v < p {
            v += 1;
        }
        v
    };
    for p1 in lo..=hi {
        let r1 = p - p1 * p1;
        let h2 = isqrt(r1);
        let p2_lo = {
            let mut v = isqrt(r1 / 3);
            while 3 * v * v < r1 {
                v += 1;
            }
            v
        };
        for p2 in p2_lo..=p1.min(h2) {
            let r2 = r1 - p2 * p2;
            let h3 = isqrt(r2);
            let p3_lo = {
                let mut v = isqrt(r2 / 2);
                while 2 * v * v < r2 {
                    v += 1;
                }
                v
            };
            for p3 in p3_lo..=p2.min(h3) {
                let r3 = r2 - p3 * p3;
                let p4 = isqrt(r3);
                if p4 * p4 == r3 && p4 <= p3 {
                    return FourSquare { p, p1, p2, p3, p4 };
                }
            }
        }
    }
    unreachable!("Lagrange guarantees a decomposition for p = {p}")
}

/// The `(A, B, C)` data of a decomposition.
pub fn abc(fs: &FourSquare) -> AbcTriple {
    let [p1, p2, p3, p4] = fs.parts_i128();
    AbcTriple {
        a: p1 * p1 - p2 * p2 + p3 * p3 - p4 * p4,
        b: p1 * p2 + p3 * p4,
        c: p1 * p4 - p2 * p3,
    }
}

/// Validates `A^2 + 4B^2 + 4C^2 = p^2` in exact integer arithmetic.
pub fn abc_identity_holds(fs: &FourSquare) -> bool {
    let t = abc(fs);
    let p = fs.p as i128;
    t.a * t.a + 4 * t.b * t.b + 4 * t.c * t.c == p * p
}

pub fn gcd_i128(a: i128, b: i128) -> i128 {
    num_integer::Integer::gcd(&a.abs(), &b.abs())
}

/// Validation helper used by callers that accept externally supplied parts.
pub fn validate_four_square(fs: &FourSquare) -> Result<()> {
    let [p1, p2, p3, p4] = fs.parts();
    if p1 * p1 + p2 * p2 + p3 * p3 + p4 * p4 != fs.p {
        return Err(Error::domain("four-square parts do not sum to p"));
    }
    Ok(())
}
