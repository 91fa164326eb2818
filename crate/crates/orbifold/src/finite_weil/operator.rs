//! Operators attached to the discrete lattices: the `D0_perp` word algebra
//! with generators `V3, V4` (`V3 V4 = e(p/q) V4 V3`, `V3^q = V4^q = 1`),
//! lattice inner products on both sides, the unitary `W0`, the finite
//! Fourier automorphism, and the clock/shift matrix model.
//!
//! Normal ordering fixes words as `V4^l V3^k`; the conversion from lattice
//! translations uses
//!
//! `pi*_{k delta3 + l delta4} = Lambda0(k,l) V4^l V3^k`,
//! `Lambda0(k,l) = e( [2 w2 k l - w k(k+q) + w l(l+q)] / 2q )`,
//!
//! with `w = p1 p3 + p2 p4` and `w2 = p1^2 + p2^2`.  The right module
//! action of a word on a function applies the generator operators
//! `Op(V3) = e(w(q+1)/2q) pi*_{delta3}`, `Op(V4) = e(-w(q+1)/2q) pi*_{delta4}`
//! in word order (`V3`-block first); this convention is pinned by the
//! `fhat = phi W0` and module-associativity tests below.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{normalize_phi, root_of_unity, CyclicFunction, RootSum};
use crate::number_theory::{FourSquare, PhaseSelection};
use crate::{Error, Result};

/// A vector in `Z_q^4 = M0 x dual(M0)`: `m`-part `(u, v)`, dual part `(w, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscreteVector {
    pub u: i64,
    pub v: i64,
    pub w: i64,
    pub z: i64,
}

impl DiscreteVector {
    pub fn eps1(fs: &FourSquare) -> Self {
        let [p1, p2, p3, p4] = fs.parts_i128().map(|x| x as i64);
        DiscreteVector { u: p1, v: p2, w: p3, z: p4 }
    }

    pub fn eps2(fs: &FourSquare) -> Self {
        let [p1, p2, p3, p4] = fs.parts_i128().map(|x| x as i64);
        DiscreteVector { u: -p3, v: -p4, w: p1, z: p2 }
    }

    pub fn delta3(fs: &FourSquare) -> Self {
        let [p1, p2, p3, p4] = fs.parts_i128().map(|x| x as i64);
        DiscreteVector { u: p2, v: -p1, w: -p4, z: p3 }
    }

    pub fn delta4(fs: &FourSquare) -> Self {
        let [p1, p2, p3, p4] = fs.parts_i128().map(|x| x as i64);
        DiscreteVector { u: p4, v: -p3, w: p2, z: -p1 }
    }

    pub fn combine(a: Self, ka: i64, b: Self, kb: i64) -> Self {
        DiscreteVector {
            u: ka * a.u + kb * b.u,
            v: ka * a.v + kb * b.v,
            w: ka * a.w + kb * b.w,
            z: ka * a.z + kb * b.z,
        }
    }
}

/// `[pi_x f](n,m) = e((n x.w + m x.z)/q) f(n + x.u, m + x.v)`.
pub fn pi_apply(x: DiscreteVector, f: &CyclicFunction) -> CyclicFunction {
    let q = f.q;
    let mut out = CyclicFunction::zero(q);
    for n in 0..q as i64 {
        for m in 0..q as i64 {
            *out.at_mut(n, m) = root_of_unity(q, n * x.w + m * x.z) * f.at(n + x.u, m + x.v);
        }
    }
    out
}

/// `pi_x^* = pi_x^{-1}`.
pub fn pi_star_apply(x: DiscreteVector, f: &CyclicFunction) -> CyclicFunction {
    let q = f.q;
    let mut out = CyclicFunction::zero(q);
    for n in 0..q as i64 {
        for m in 0..q as i64 {
            *out.at_mut(n, m) =
                root_of_unity(q, -((n - x.u) * x.w + (m - x.v) * x.z)) * f.at(n - x.u, m - x.v);
        }
    }
    out
}

/// `e(num / 2q)`.
fn phase_2q(q: usize, num: i64) -> Complex64 {
    let ang = std::f64::consts::PI * num.rem_euclid(2 * q as i64) as f64 / q as f64;
    Complex64::new(ang.cos(), ang.sin())
}

/// `Lambda0(k, l)`: see module docs.
fn lambda0(fs: &FourSquare, q: usize, k: i64, l: i64) -> Complex64 {
    let [p1, p2, p3, p4] = fs.parts_i128().map(|x| x as i64);
    let w = p1 * p3 + p2 * p4;
    let w2 = p1 * p1 + p2 * p2;
    let qi = q as i64;
    phase_2q(q, 2 * w2 * k * l - w * k * (k + qi) + w * l * (l + qi))
}

/// Element of the `D0_perp` word algebra: `sum coeffs[k][l] V4^l V3^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct D0PerpOperator {
    pub q: usize,
    /// Commutation numerator: `V3 V4 = e(p/q) V4 V3`.
    pub p: u64,
    coeffs: Vec<Complex64>,
}

impl D0PerpOperator {
    pub fn zero(q: usize, p: u64) -> Self {
        D0PerpOperator { q, p, coeffs: vec![Complex64::new(0.0, 0.0); q * q] }
    }

    pub fn identity(q: usize, p: u64) -> Self {
        let mut op = Self::zero(q, p);
        *op.at_mut(0, 0) = Complex64::new(1.0, 0.0);
        op
    }

    /// Single word `c * V4^l V3^k`.
    pub fn word(q: usize, p: u64, k: i64, l: i64, c: Complex64) -> Self {
        let mut op = Self::zero(q, p);
        *op.at_mut(k, l) = c;
        op
    }

    #[inline]
    pub fn at(&self, k: i64, l: i64) -> Complex64 {
        let q = self.q as i64;
        self.coeffs[(k.rem_euclid(q) * q + l.rem_euclid(q)) as usize]
    }

    #[inline]
    pub fn at_mut(&mut self, k: i64, l: i64) -> &mut Complex64 {
        let q = self.q as i64;
        &mut self.coeffs[(k.rem_euclid(q) * q + l.rem_euclid(q)) as usize]
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.q, self.p), (o.q, o.p));
        D0PerpOperator {
            q: self.q,
            p: self.p,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.q, self.p), (o.q, o.p));
        D0PerpOperator {
            q: self.q,
            p: self.p,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        D0PerpOperator {
            q: self.q,
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Product in word order:
    /// `(V4^l V3^k)(V4^l' V3^k') = e(p k l'/q) V4^{l+l'} V3^{k+k'}`.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!((self.q, self.p), (o.q, o.p));
        let q = self.q as i64;
        let mut out = Self::zero(self.q, self.p);
        for k in 0..q {
            for l in 0..q {
                let a = self.at(k, l);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for k2 in 0..q {
                    for l2 in 0..q {
                        let b = o.at(k2, l2);
                        if b.norm_sqr() == 0.0 {
                            continue;
                        }
                        let phase = root_of_unity(self.q, (self.p as i64 % q) * k * l2);
                        *out.at_mut(k + k2, l + l2) += a * b * phase;
                    }
                }
            }
        }
        out
    }

    /// `(V4^l V3^k)^* = e(p k l / q) V4^{-l} V3^{-k}`.
    pub fn adjoint(&self) -> Self {
        let q = self.q as i64;
        let mut out = Self::zero(self.q, self.p);
        for k in 0..q {
            for l in 0..q {
                let c = self.at(k, l);
                if c.norm_sqr() == 0.0 {
                    continue;
                }
                *out.at_mut(-k, -l) += c.conj() * root_of_unity(self.q, (self.p as i64 % q) * k * l);
            }
        }
        out
    }

    /// Matrix under the clock/shift representation.
    pub fn to_matrix(&self) -> Result<DMatrix<Complex64>> {
        let (v3, v4) = clock_shift_rep(self.q, self.p)?;
        let q = self.q;
        let mut acc = DMatrix::<Complex64>::zeros(q, q);
        // Precompute powers.
        let mut v3_pows = Vec::with_capacity(q);
        let mut v4_pows = Vec::with_capacity(q);
        let mut cur = DMatrix::<Complex64>::identity(q, q);
        for _ in 0..q {
            v3_pows.push(cur.clone());
            cur = &cur * &v3;
        }
        let mut cur = DMatrix::<Complex64>::identity(q, q);
        for _ in 0..q {
            v4_pows.push(cur.clone());
            cur = &cur * &v4;
        }
        for k in 0..q {
            for l in 0..q {
                let c = self.at(k as i64, l as i64);
                if c.norm_sqr() > 0.0 {
                    acc += (&v4_pows[l] * &v3_pows[k]).scale_complex(c);
                }
            }
        }
        Ok(acc)
    }

    /// Frobenius norm in the matrix model.
    pub fn frobenius_norm(&self) -> Result<f64> {
        Ok(self.to_matrix()?.norm())
    }
}

trait ScaleComplex {
    fn scale_complex(self, c: Complex64) -> Self;
}

impl ScaleComplex for DMatrix<Complex64> {
    fn scale_complex(mut self, c: Complex64) -> Self {
        for v in self.iter_mut() {
            *v *= c;
        }
        self
    }
}

/// Clock and shift matrices: `V3 = diag(e(p k/q))`, `V4 e_k = e_{k+1}`,
/// satisfying `V3 V4 = e(p/q) V4 V3` and `V3^q = V4^q = 1`.
pub fn clock_shift_rep(q: usize, p: u64) -> Result<(DMatrix<Complex64>, DMatrix<Complex64>)> {
    if q == 0 {
        return Err(Error::domain("q must be >= 1"));
    }
    if num_integer::Integer::gcd(&(p as i64), &(q as i64)) != 1 {
        return Err(Error::domain(format!(
            "clock/shift representation needs gcd(p, q) = 1, got p = {p}, q = {q}"
        )));
    }
    let mut v3 = DMatrix::<Complex64>::zeros(q, q);
    let mut v4 = DMatrix::<Complex64>::zeros(q, q);
    for k in 0..q {
        v3[(k, k)] = root_of_unity(q, (p as i64) * k as i64);
        v4[((k + 1) % q, k)] = Complex64::new(1.0, 0.0);
    }
    Ok((v3, v4))
}

/// `< f, g >_{D0_perp}` as a word-algebra element:
/// coefficient of `V4^l V3^k` is
/// `Lambda0(k,l) * sum_{n,m} conj(f(n,m)) [pi_{k d3 + l d4} g](n,m)`.
pub fn inner_d0perp(fs: &FourSquare, f: &CyclicFunction, g: &CyclicFunction) -> Result<D0PerpOperator> {
    if f.q != g.q {
        return Err(Error::SizeMismatch("inner product of different moduli".into()));
    }
    let q = f.q;
    let d3 = DiscreteVector::delta3(fs);
    let d4 = DiscreteVector::delta4(fs);
    let mut out = D0PerpOperator::zero(q, fs.p);
    for k in 0..q as i64 {
        for l in 0..q as i64 {
            let y = DiscreteVector::combine(d3, k, d4, l);
            let shifted = pi_apply(y, g);
            let raw = f.dot(&shifted);
            *out.at_mut(k, l) = lambda0(fs, q, k, l) * raw;
        }
    }
    Ok(out)
}

/// Exact raw coefficients of `< phi1, phi2 >_{D0_perp}` for phase-table
/// functions, as integer root-of-unity sums (the `Lambda0` unit prefactor
/// does not affect vanishing).
pub fn inner_d0perp_exact(
    fs: &FourSquare,
    exps1: &[i64],
    exps2: &[i64],
    q: usize,
) -> Vec<RootSum> {
    let qi = q as i64;
    assert_eq!(exps1.len(), q * q);
    assert_eq!(exps2.len(), q * q);
    let d3 = DiscreteVector::delta3(fs);
    let d4 = DiscreteVector::delta4(fs);
    let idx = |n: i64, m: i64| (n.rem_euclid(qi) * qi + m.rem_euclid(qi)) as usize;
    let mut out = Vec::with_capacity(q * q);
    for k in 0..qi {
        for l in 0..qi {
            let y = DiscreteVector::combine(d3, k, d4, l);
            let mut sum = RootSum::zero(q);
            for n in 0..qi {
                for m in 0..qi {
                    let e = -exps1[idx(n, m)] + n * y.w + m * y.z + exps2[idx(n + y.u, m + y.v)];
                    sum.push(e);
                }
            }
            out.push(sum);
        }
    }
    out
}

/// `< f, g >_{D0}` as a coefficient table over `x = n1 eps1 + n2 eps2`:
/// `coeff(x) = sum_z f(z) conj([pi_x g](z))` (covolume 1).
#[derive(Debug, Clone)]
pub struct D0Operator {
    pub q: usize,
    pub coeffs: Vec<Complex64>,
    vectors: Vec<DiscreteVector>,
}

pub fn inner_d0(fs: &FourSquare, f: &CyclicFunction, g: &CyclicFunction) -> Result<D0Operator> {
    if f.q != g.q {
        return Err(Error::SizeMismatch("inner product of different moduli".into()));
    }
    let q = f.q;
    let e1 = DiscreteVector::eps1(fs);
    let e2 = DiscreteVector::eps2(fs);
    let mut coeffs = Vec::with_capacity(q * q);
    let mut vectors = Vec::with_capacity(q * q);
    for n1 in 0..q as i64 {
        for n2 in 0..q as i64 {
            let x = DiscreteVector::combine(e1, n1, e2, n2);
            let shifted = pi_apply(x, g);
            // coeff = sum_z f(z) conj([pi_x g](z)) = conj(<f, pi_x g>).
            coeffs.push(f.dot(&shifted).conj());
            vectors.push(x);
        }
    }
    Ok(D0Operator { q, coeffs, vectors })
}

impl D0Operator {
    /// The operator `sum coeff(x) pi_x` on `L^2(Z_q^2)` (dimension `q^2`).
    pub fn to_matrix(&self) -> DMatrix<Complex64> {
        let q = self.q;
        let dim = q * q;
        let mut acc = DMatrix::<Complex64>::zeros(dim, dim);
        for (c, x) in self.coeffs.iter().zip(&self.vectors) {
            if c.norm_sqr() == 0.0 {
                continue;
            }
            for n in 0..q as i64 {
                for m in 0..q as i64 {
                    let row = (n as usize) * q + m as usize;
                    let col = ((n + x.u).rem_euclid(q as i64) as usize) * q
                        + (m + x.v).rem_euclid(q as i64) as usize;
                    acc[(row, col)] += c * root_of_unity(q, n * x.w + m * x.z);
                }
            }
        }
        acc
    }
}

/// Canonical normalized trace on the `D0` side: the zero coefficient.
pub fn trace_d0(op: &D0Operator) -> Complex64 {
    op.coeffs[0]
}

/// Canonical normalized trace on the `D0_perp` side: the zero coefficient.
pub fn trace_d0perp(op: &D0PerpOperator) -> Complex64 {
    op.at(0, 0)
}

/// Right module action `f . op`: generator words act by the operators
/// `Op(V3) = e(w(q+1)/2q) pi*_{delta3}`, `Op(V4) = e(-w(q+1)/2q) pi*_{delta4}`
/// applied in word order (`V3`-block first).
pub fn right_apply(fs: &FourSquare, f: &CyclicFunction, op: &D0PerpOperator) -> CyclicFunction {
    let q = f.q;
    assert_eq!(q, op.q);
    let [p1, p2, p3, p4] = fs.parts_i128().map(|x| x as i64);
    let w = p1 * p3 + p2 * p4;
    let qi = q as i64;
    let d3 = DiscreteVector::delta3(fs);
    let d4 = DiscreteVector::delta4(fs);
    let s3 = phase_2q(q, w * (qi + 1));
    let s4 = phase_2q(q, -w * (qi + 1));

    // g3[k] = Op(V3)^k f
    let mut g3 = Vec::with_capacity(q);
    g3.push(f.clone());
    for k in 1..q {
        g3.push(pi_star_apply(d3, &g3[k - 1]).scale(s3));
    }
    let mut out = CyclicFunction::zero(q);
    for k in 0..q as i64 {
        let mut cur = g3[k as usize].clone();
        for l in 0..q as i64 {
            let c = op.at(k, l);
            if c.norm_sqr() > 0.0 {
                out = out.add(&cur.scale(c));
            }
            if l + 1 < q as i64 {
                cur = pi_star_apply(d4, &cur).scale(s4);
            }
        }
    }
    out
}

/// The finite Fourier automorphism on the word algebra:
/// `V3 -> V4`, `V4 -> V3^*`; on words,
/// `V4^l V3^k -> e(-p k l/q) V4^k V3^{-l}`.  Order four exactly.
pub fn sigma0_prime(op: &D0PerpOperator) -> D0PerpOperator {
    let q = op.q as i64;
    let mut out = D0PerpOperator::zero(op.q, op.p);
    for k in 0..q {
        for l in 0..q {
            let c = op.at(k, l);
            if c.norm_sqr() > 0.0 {
                *out.at_mut(-l, k) += c * root_of_unity(op.q, -(op.p as i64 % q) * k * l);
            }
        }
    }
    out
}

/// `W0 = < phi, phihat >_{D0_perp}` for a normalized `phi`
/// (`< phi, phi >_{D0_perp} = 1`); errors if `phi` is not normalized.
pub fn w0(fs: &FourSquare, phi: &CyclicFunction) -> Result<D0PerpOperator> {
    let q = phi.q;
    let self_inner = inner_d0perp(fs, phi, phi)?;
    let resid = self_inner.sub(&D0PerpOperator::identity(q, fs.p)).frobenius_norm()?;
    if resid > 1e-9 {
        return Err(Error::domain(format!(
            "w0 requires a normalized phi: |<phi,phi> - 1| = {resid:.3e}"
        )));
    }
    let phihat = super::dft2(phi);
    inner_d0perp(fs, phi, &phihat)
}

#[derive(Debug, Clone, Copy)]
pub struct ProbeReport {
    pub q: usize,
    pub p: u64,
    /// `| <phi,phi>_{D0} - 1 |` in Frobenius norm on `L^2(Z_q^2)`.
    pub residual: f64,
}

/// Builds the normalized Gaussian and checks that `< phi, phi >_{D0}` is
/// the identity operator (the trace-one projection statement at the
/// discrete level).
pub fn finite_projection_probe(q: usize, p: u64, ps: &PhaseSelection) -> Result<ProbeReport> {
    let fs = crate::number_theory::four_square(p);
    let phi = normalize_phi(&super::gaussian_phi(ps, q));
    let op = inner_d0(&fs, &phi, &phi)?;
    let m = op.to_matrix();
    let dim = q * q;
    let resid = (&m - DMatrix::<Complex64>::identity(dim, dim)).norm();
    Ok(ProbeReport { q, p, residual: resid })
}
