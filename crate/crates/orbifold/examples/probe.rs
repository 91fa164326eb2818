// Probe: which product side satisfies the module property, under both DFT kernels.
use orbifold::finite_weil::*;
use orbifold::number_theory::four_square;
use num_complex::Complex64;

fn randf(q: usize, seed: u64) -> CyclicFunction {
    let mut s = seed;
    let mut vals = Vec::new();
    for _ in 0..q*q {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let a = ((s >> 33) as f64 / (1u64<<31) as f64) - 1.0;
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let b = ((s >> 33) as f64 / (1u64<<31) as f64) - 1.0;
        vals.push(Complex64::new(a, b));
    }
    CyclicFunction::new(q, vals).unwrap()
}

fn main() {
    for (q, p) in [(3usize, 1u64), (5, 2)] {
        let fs = four_square(p);
        let f = randf(q, 42 + q as u64);
        let g = randf(q, 977 + q as u64);
        for (k, l) in [(1i64, 0i64), (0, 1), (2, 1)] {
            let word = D0PerpOperator::word(q, fs.p, k, l, Complex64::new(1.0, 0.0));
            let acted = right_apply(&fs, &g, &word);
            let lhs = inner_d0perp(&fs, &f, &acted).unwrap();
            let inner = inner_d0perp(&fs, &f, &g).unwrap();
            let right = lhs.sub(&inner.mul(&word)).frobenius_norm().unwrap();
            let left = lhs.sub(&word.mul(&inner)).frobenius_norm().unwrap();
            println!("q={q} p={p} word=({k},{l}): |lhs - inner*word| = {right:.3e}   |lhs - word*inner| = {left:.3e}");
        }
    }
}
