//! Seeded generator for deterministic test polynomials.

use num_rational::BigRational;

use kafourier::poly::MultivariatePolynomial;
use kafourier::scalar::ratio;

/// SplitMix64: tiny, deterministic, good enough for corpus generation.
pub struct SplitMix {
    state: u64,
}

impl SplitMix {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn small_rational(&mut self) -> BigRational {
        let numerator = self.below(19) as i64 - 9;
        let denominator = 1 + self.below(4) as i64;
        ratio(numerator, denominator)
    }
}

/// Random polynomial with up to `degree` total degree and small rational
/// coefficients.
pub fn random_polynomial(
    rng: &mut SplitMix,
    dimension: usize,
    degree: u32,
) -> MultivariatePolynomial<BigRational> {
    let mut p = MultivariatePolynomial::zero(dimension);
    let terms = 3 + rng.below(5);
    for _ in 0..terms {
        let mut exps = vec![0u32; dimension];
        let mut budget = degree;
        for e in exps.iter_mut() {
            let take = rng.below(u64::from(budget) + 1) as u32;
            *e = take;
            budget -= take;
        }
        p = p.add(&MultivariatePolynomial::monomial(
            dimension,
            exps,
            rng.small_rational(),
        ));
    }
    p
}

pub fn random_polynomial_float(
    rng: &mut SplitMix,
    dimension: usize,
    degree: u32,
) -> MultivariatePolynomial<f64> {
    random_polynomial(rng, dimension, degree)
        .map_scalars(kafourier::scalar::rational_to_f64)
}
