//! Constructive coprimality witnesses and the phase selection
//! `(a, b, gamma)` with `gcd(Delta, q) = 1`.
//!
//! `Delta = b*A + 2*(gamma - a)*B + (1 - b^2 + 4*a*gamma)*C` is the
//! determinant of the congruence system attached to the lattice data; the
//! selection guarantees it is a unit mod `q`, which is what makes the system
//! uniquely solvable.
//!
//! Witness search order: the default is the smallest witness found by a
//! bounded exhaustive scan (the two lemmas guarantee one exists in range).
//! The prime-divisor construction from the existence proofs is kept as an
//! alternate path for cross-checking.

use super::squares::{abc, gcd_i128, AbcTriple, FourSquare};
use crate::{Error, Result};

/// How coprimality witnesses are searched for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WitnessStrategy {
    /// Smallest k >= 0 satisfying the gcd condition (deterministic default).
    #[default]
    SmallestFirst,
    /// The witness produced by the prime-divisor construction.
    Constructive,
}

/// The integers driving all congruences downstream: `(a, b, gamma)` with
/// `gcd(Delta, q) = 1`, the inverse `Delta'`, and a Bezout pair
/// `c*p + d*q = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhaseSelection {
    pub a: i128,
    pub b: i128,
    pub gamma: i128,
    pub delta: i128,
    /// `Delta' * Delta == 1 (mod q)`, reduced to `0..q`.
    pub delta_inv: i128,
    pub c: i128,
    pub d: i128,
}

impl PhaseSelection {
    /// Recomputes `Delta` from `(a, b, gamma)` and the `(A, B, C)` data;
    /// used by tests and certificates as an independent check.
    pub fn delta_from_formula(&self, t: &AbcTriple) -> i128 {
        self.b * t.a + 2 * (self.gamma - self.a) * t.b
            + (1 - self.b * self.b + 4 * self.a * self.gamma) * t.c
    }
}

/// Smallest `k >= 0` with `gcd(p + k*r, q) = 1`.
///
/// Requires `gcd(p, r, q) = 1`; existence within `0..=q` is guaranteed.
pub fn coprime_shift(p: i128, r: i128, q: i128) -> Result<i128> {
    coprime_shift_with(p, r, q, WitnessStrategy::SmallestFirst)
}

pub fn coprime_shift_with(p: i128, r: i128, q: i128, strategy: WitnessStrategy) -> Result<i128> {
    if q < 1 {
        return Err(Error::domain("q must be >= 1"));
    }
    if gcd_i128(gcd_i128(p, r), q) != 1 {
        return Err(Error::domain("gcd(p, r, q) must be 1"));
    }
    match strategy {
        WitnessStrategy::SmallestFirst => {
            for k in 0..=q {
                if gcd_i128(p + k * r, q) == 1 {
                    return Ok(k);
                }
            }
            unreachable!("witness guaranteed in 0..=q")
        }
        WitnessStrategy::Constructive => {
            // Prime divisors t of q dividing some p + m*r; k_j with t_j | p + k_j r.
            let mut pairs: Vec<(i128, i128)> = Vec::new(); // (t_j, k_j)
            for t in prime_divisors(q) {
                if let Some(kj) = (0..t).find(|&m| (p + m * r).rem_euclid(t) == 0) {
                    pairs.push((t, kj));
                }
            }
            if pairs.is_empty() {
                return Ok(0);
            }
            if pairs.len() == 1 {
                let k = pairs[0].1 + 1;
                debug_assert_eq!(gcd_i128(p + k * r, q), 1);
                return Ok(k);
            }
            let (_, k1) = pairs[0];
            let mut prod = 1i128;
            for &(tj, kj) in &pairs[1..] {
                let dj = gcd_i128(k1 - kj, tj);
                prod *= tj / dj;
            }
            let k = k1 + prod;
            if gcd_i128(p + k * r, q) != 1 {
                return Err(Error::Congruence(
                    "constructive coprime_shift produced a non-witness".into(),
                ));
            }
            Ok(k)
        }
    }
}

/// Smallest `k >= 0` with `gcd(k*X + (k^2 - 1)*Y, Z) = 1`.
///
/// Requires `gcd(X, Y, Z) = 1`.
pub fn quadratic_coprime(x: i128, y: i128, z: i128) -> Result<i128> {
    quadratic_coprime_with(x, y, z, WitnessStrategy::SmallestFirst)
}

pub fn quadratic_coprime_with(
    x: i128,
    y: i128,
    z: i128,
    strategy: WitnessStrategy,
) -> Result<i128> {
    if gcd_i128(gcd_i128(x, y), z) != 1 {
        return Err(Error::domain("gcd(X, Y, Z) must be 1"));
    }
    let zz = z.abs().max(1);
    match strategy {
        WitnessStrategy::SmallestFirst => {
            for k in 0..=zz + 1 {
                if gcd_i128(k * x + (k * k - 1) * y, zz) == 1 {
                    return Ok(k);
                }
            }
            unreachable!("witness guaranteed by the existence proof")
        }
        WitnessStrategy::Constructive => {
            // k = product of the prime divisors of Z that do not divide Y.
            let mut k = 1i128;
            for t in prime_divisors(zz) {
                if y.rem_euclid(t) != 0 {
                    k *= t;
                }
            }
            if gcd_i128(k * x + (k * k - 1) * y, zz) != 1 {
                return Err(Error::Congruence(
                    "constructive quadratic_coprime produced a non-witness".into(),
                ));
            }
            Ok(k)
        }
    }
}

fn prime_divisors(n: i128) -> Vec<i128> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = 2i128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// Inverse of `a` mod `q` (requires `gcd(a, q) = 1`), reduced to `0..q`.
pub fn mod_inverse(a: i128, q: i128) -> Result<i128> {
    if q == 1 {
        return Ok(0);
    }
    let (g, x, _) = ext_gcd(a.rem_euclid(q), q);
    if g != 1 {
        return Err(Error::domain(format!("{a} is not invertible mod {q}")));
    }
    Ok(x.rem_euclid(q))
}

/// Selects `(a, b, gamma)` with `gcd(Delta, q) = 1` following the two parity
/// branches, together with `Delta`, `Delta'`, and a Bezout pair for
/// `c*p + d*q = 1`.
pub fn select_phase(fs: &FourSquare, q: u64) -> Result<PhaseSelection> {
    select_phase_with(fs, q, WitnessStrategy::SmallestFirst)
}

pub fn select_phase_with(
    fs: &FourSquare,
    q: u64,
    strategy: WitnessStrategy,
) -> Result<PhaseSelection> {
    if q == 0 {
        return Err(Error::domain("q must be >= 1"));
    }
    let p = fs.p as i128;
    let qi = q as i128;
    if gcd_i128(p, qi) != 1 {
        return Err(Error::domain("p and q must be coprime"));
    }
    let t = abc(fs);
    let (a, b, gamma, delta);
    if q % 2 == 1 {
        // b = 2ka, gamma = k^2 a, Delta = 2a*beta_k + C with
        // beta_k = k*A + (k^2-1)*B.
        let z = gcd_i128(qi, t.c);
        let k = quadratic_coprime_with(t.a, t.b, z, strategy)?;
        let beta_k = k * t.a + (k * k - 1) * t.b;
        let aa = coprime_shift_with(t.c, 2 * beta_k, qi, strategy)?;
        a = aa;
        b = 2 * k * aa;
        gamma = k * k * aa;
        delta = 2 * aa * beta_k + t.c;
    } else {
        // q even forces p (hence A) odd.  b = 1 + 2ka, gamma = k^2 a,
        // Delta = 2a*beta_k + A with beta_k = k*(A-2C) + (k^2-1)*B.
        let z = gcd_i128(qi, t.a);
        let k = quadratic_coprime_with(t.a - 2 * t.c, t.b, z, strategy)?;
        let beta_k = k * (t.a - 2 * t.c) + (k * k - 1) * t.b;
        let aa = coprime_shift_with(t.a, 2 * beta_k, qi, strategy)?;
        a = aa;
        b = 1 + 2 * k * aa;
        gamma = k * k * aa;
        delta = 2 * aa * beta_k + t.a;
    }
    if gcd_i128(delta, qi) != 1 {
        return Err(Error::Congruence(format!(
            "phase selection failed: gcd(Delta, q) = {} for p = {p}, q = {q}",
            gcd_i128(delta, qi)
        )));
    }
    let delta_inv = mod_inverse(delta, qi)?;
    let (g, c, d) = ext_gcd(p, qi);
    debug_assert_eq!(g, 1);
    // Normalize c to the least nonnegative residue mod q (and adjust d).
    let c_norm = c.rem_euclid(qi);
    let d_norm = if qi == 0 { d } else { (1 - c_norm * p) / qi };
    debug_assert_eq!(c_norm * p + d_norm * qi, 1);
    Ok(PhaseSelection { a, b, gamma, delta, delta_inv, c: c_norm, d: d_norm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number_theory::squares::four_square;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn coprime_shift_examples() {
        assert_eq!(coprime_shift(3, 0, 2).unwrap(), 0);
        assert_eq!(coprime_shift(2, 3, 4).unwrap(), 1);
        assert_eq!(coprime_shift(0, 1, 5).unwrap(), 1);
    }

    #[test]
    fn quadratic_coprime_examples() {
        assert_eq!(quadratic_coprime(1, 0, 6).unwrap(), 1);
        // Smallest witnesses: k=0 gives -3 coprime to 5, and -1 coprime to 3.
        assert_eq!(quadratic_coprime(2, 3, 5).unwrap(), 0);
        assert_eq!(quadratic_coprime(0, 1, 3).unwrap(), 0);
    }

    #[test]
    fn witnesses_verified_by_gcd_never_trusted() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..300 {
            let p = rng.gen_range(-50..50i128);
            let r = rng.gen_range(-50..50i128);
            let q = rng.gen_range(1..60i128);
            if gcd_i128(gcd_i128(p, r), q) != 1 {
                continue;
            }
            for strat in [WitnessStrategy::SmallestFirst, WitnessStrategy::Constructive] {
                let k = coprime_shift_with(p, r, q, strat).unwrap();
                assert_eq!(gcd_i128(p + k * r, q), 1, "p={p} r={r} q={q} {strat:?}");
            }
            let (x, y, z) = (p, r, q);
            if gcd_i128(gcd_i128(x, y), z) == 1 {
                for strat in [WitnessStrategy::SmallestFirst, WitnessStrategy::Constructive] {
                    let k = quadratic_coprime_with(x, y, z, strat).unwrap();
                    assert_eq!(gcd_i128(k * x + (k * k - 1) * y, z), 1);
                }
            }
        }
    }

    #[test]
    fn precondition_violations_rejected() {
        assert!(coprime_shift(2, 2, 4).is_err());
        assert!(quadratic_coprime(2, 2, 4).is_err());
    }

    #[test]
    fn select_phase_p1_even_branch() {
        // p = 1: even q takes k = 0, a = 0, so b = 1 and Delta = A = 1.
        let fs = four_square(1);
        let ps = select_phase(&fs, 4).unwrap();
        assert_eq!((ps.a, ps.b, ps.gamma, ps.delta), (0, 1, 0, 1));
        assert_eq!(ps.delta_from_formula(&abc(&fs)), ps.delta);
        assert_eq!(ps.c * 1 + ps.d * 4, 1);
    }

    #[test]
    fn select_phase_examples() {
        for (p, q) in [(7u64, 3u64), (5, 4), (1, 7), (3, 8)] {
            let fs = four_square(p);
            let ps = select_phase(&fs, q).unwrap();
            assert_eq!(gcd_i128(ps.delta, q as i128), 1);
            assert_eq!(ps.delta_from_formula(&abc(&fs)), ps.delta);
            assert_eq!((ps.delta_inv * ps.delta).rem_euclid(q as i128), 1 % q as i128);
            assert_eq!(ps.c * p as i128 + ps.d * q as i128, 1);
            if q % 2 == 0 {
                assert_eq!(ps.b.rem_euclid(2), 1, "b must be odd in the even branch");
            }
        }
    }

    #[test]
    fn select_phase_bulk_both_parities() {
        let mut rng = StdRng::seed_from_u64(99);
        let mut done = 0;
        while done < 500 {
            let p = rng.gen_range(1..=10_000u64);
            let q = rng.gen_range(1..=10_000u64);
            if gcd_i128(p as i128, q as i128) != 1 {
                continue;
            }
            let fs = four_square(p);
            let ps = select_phase(&fs, q).unwrap();
            assert_eq!(gcd_i128(ps.delta, q as i128), 1, "p={p} q={q}");
            assert_eq!(ps.delta_from_formula(&abc(&fs)), ps.delta, "p={p} q={q}");
            done += 1;
        }
    }
}
