//! Compensated and thread-count-independent summation.
//!
//! All lattice reductions go through [`chunked_sum`], which splits the
//! term stream into fixed-size blocks, sums each block with Neumaier
//! compensation, and combines the block results in index order. The
//! block layout does not depend on the worker count, so results are
//! bit-identical whether the blocks are evaluated serially or on a
//! rayon pool.

use rayon::prelude::*;

/// Neumaier (improved Kahan) accumulator.
#[derive(Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Sum of f(i) for i in 0..n, fixed 8192-element blocks, parallel over
/// blocks, recombined in block order.
pub fn chunked_sum<F: Fn(usize) -> f64 + Sync>(n: usize, f: F) -> f64 {
    const BLOCK: usize = 8192;
    if n == 0 {
        return 0.0;
    }
    let blocks = n.div_ceil(BLOCK);
    let partials: Vec<f64> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let lo = b * BLOCK;
            let hi = (lo + BLOCK).min(n);
            let mut acc = Neumaier::default();
            for i in lo..hi {
                acc.add(f(i));
            }
            acc.value()
        })
        .collect();
    let mut total = Neumaier::default();
    for p in partials {
        total.add(p);
    }
    total.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunked_matches_serial_and_is_pool_independent() {
        let n = 100_000;
        let f = |i: usize| 1.0 / (1.0 + i as f64).powi(2);
        let base = chunked_sum(n, f);
        let one = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| chunked_sum(n, f));
        let four = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap()
            .install(|| chunked_sum(n, f));
        assert_eq!(base.to_bits(), one.to_bits());
        assert_eq!(base.to_bits(), four.to_bits());
    }

    #[test]
    fn neumaier_beats_naive_on_cancellation() {
        let mut acc = Neumaier::default();
        acc.add(1e16);
        acc.add(1.0);
        acc.add(-1e16);
        assert_eq!(acc.value(), 1.0);
    }
}
