//! Independent oracles for the integration tests. Everything here is
//! deliberately implemented from first principles (Stirling-series gamma,
//! closed-form moment integrals, Simpson quadrature, exact rational Gram
//! reductions) so that it shares no code path with the library machinery
//! it checks.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use kafourier::radial::{ExpMonomial, RadialKey};
use kafourier::scalar::CoeffField;

/// Gamma via the Stirling series with argument shifting; relative error
/// below 1e-13 for positive arguments.
pub fn stirling_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "oracle gamma needs positive arguments");
    let mut shift = 1.0;
    let mut y = x;
    while y < 12.0 {
        shift *= y;
        y += 1.0;
    }
    // ln Γ(y) for y >= 12.
    let corrections = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
    ];
    let mut series = 0.0;
    let mut power = 1.0 / y;
    for c in corrections {
        series += c * power;
        power /= y * y;
    }
    let ln_gamma = (y - 0.5) * y.ln() - y + 0.5 * (2.0 * std::f64::consts::PI).ln() + series;
    ln_gamma.exp() / shift
}

fn rational_f64(q: &BigRational) -> f64 {
    ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
}

/// Closed form of `∫_0^∞ r^p exp(-q r^s) dr = Γ((p+1)/s) / (s q^{(p+1)/s})`
/// for `s > 0`; negative `s` handled by inversion. Returns `None` when the
/// integral diverges.
pub fn closed_form_moment(power: f64, rate: f64, exponent: f64) -> Option<f64> {
    if rate <= 0.0 || exponent == 0.0 {
        return None;
    }
    if exponent < 0.0 {
        return closed_form_moment(-power - 2.0, rate, -exponent);
    }
    let z = (power + 1.0) / exponent;
    if z <= 0.0 {
        return None;
    }
    Some(stirling_gamma(z) / (exponent * rate.powf(z)))
}

/// Closed-form pairing `∫ f conj(g) r^d dr` for class members whose term
/// products carry a single exponential factor each. `None` when a product
/// term mixes decay exponents (the quadrature path handles those).
pub fn closed_form_inner_product<C: CoeffField>(
    f: &ExpMonomial<C>,
    g: &ExpMonomial<C>,
    d: &BigRational,
) -> Option<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    for (k1, c1) in f.terms() {
        for (k2, c2) in g.terms() {
            let coeff = c1.mul(&c2.conj()).to_complex();
            let power = rational_f64(&(&k1.power + &k2.power + d));
            // Pure powers never integrate; mixed exponents are left to
            // the quadrature path.
            let (rate, exponent) = combined_decay(k1, k2)??;
            total += coeff * closed_form_moment(power, rate, exponent)?;
        }
    }
    Some(total)
}

fn combined_decay(a: &RadialKey, b: &RadialKey) -> Option<Option<(f64, f64)>> {
    match (&a.decay, &b.decay) {
        (None, None) => Some(None),
        (Some(d), None) | (None, Some(d)) => Some(Some((
            rational_f64(&d.rate),
            rational_f64(&d.exponent),
        ))),
        (Some(d1), Some(d2)) => {
            if d1.exponent == d2.exponent {
                Some(Some((
                    rational_f64(&(&d1.rate + &d2.rate)),
                    rational_f64(&d1.exponent),
                )))
            } else {
                None
            }
        }
    }
}

/// Composite Simpson rule on `[a, b]` with `2n` panels.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, half_panels: usize) -> f64 {
    let n = 2 * half_panels;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += weight * f(a + h * i as f64);
    }
    acc * h / 3.0
}

/// Unitary Fourier transform (convention `(2π)^{-1/2} ∫ F(x) e^{-ixξ} dx`)
/// of the even extension of a radial profile.
pub fn fourier_even_extension<F: Fn(f64) -> f64>(profile: F, xi: f64) -> Complex64 {
    let integral = simpson(|r| profile(r) * (r * xi).cos(), 0.0, 14.0, 7000);
    Complex64::new((2.0 / std::f64::consts::PI).sqrt() * integral, 0.0)
}

/// The same transform for the odd (sign) extension.
pub fn fourier_odd_extension<F: Fn(f64) -> f64>(profile: F, xi: f64) -> Complex64 {
    let integral = simpson(|r| profile(r) * (r * xi).sin(), 0.0, 14.0, 7000);
    Complex64::new(0.0, -(2.0 / std::f64::consts::PI).sqrt() * integral)
}

/// Exact rational Gram entry of the Laguerre-type basis in the
/// transformed variable, reduced so that only `sqrt(l! l'! / (R_l R_l'))`
/// leaves the rationals: with `R_n = Π_{i=1}^n (λ+i)`,
/// `G_{ll'} = sqrt(l! l'!/(R_l R_l')) Σ_{j,j'} c_j c_{j'} R_{j+j'}`,
/// where `c_j` are the displayed-sum coefficients. The inner sum is
/// computed exactly.
pub fn exact_gram_entry(lambda: &BigRational, l: u32, l_prime: u32) -> f64 {
    let coeffs_l = displayed_coefficients(lambda, l);
    let coeffs_lp = displayed_coefficients(lambda, l_prime);
    let mut sum = BigRational::zero();
    for (j, cj) in coeffs_l.iter().enumerate() {
        for (jp, cjp) in coeffs_lp.iter().enumerate() {
            sum += cj * cjp * rising(lambda, (j + jp) as u32);
        }
    }
    let ratio = factorial(l) * factorial(l_prime) / (rising(lambda, l) * rising(lambda, l_prime));
    rational_f64(&sum) * rational_f64(&ratio).sqrt()
}

fn factorial(n: u32) -> BigRational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    BigRational::from_integer(acc)
}

/// `Π_{i=1}^{n} (λ + i)`.
fn rising(lambda: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    for i in 1..=n {
        acc *= lambda + BigRational::from_integer(BigInt::from(i));
    }
    acc
}

/// Coefficients of the displayed Laguerre sum,
/// `c_j = (-1)^j/(j!(l-j)!) Π_{i=j+1}^l (λ+i)`, exactly.
fn displayed_coefficients(lambda: &BigRational, l: u32) -> Vec<BigRational> {
    (0..=l)
        .map(|j| {
            let sign = if j % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            let mut product = BigRational::one();
            for i in (j + 1)..=l {
                product *= lambda + BigRational::from_integer(BigInt::from(i));
            }
            sign * product / (factorial(j) * factorial(l - j))
        })
        .collect()
}

/// Deterministic pseudo-random stream for corpus generation.
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
        BigRational::new(BigInt::from(numerator), BigInt::from(denominator))
    }
}

/// Relative gap with a floor, used for scale-aware comparisons.
pub fn relative_gap(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1e-300)
}

fn sanity_checks() {
    // Keep the oracle honest against a couple of hand values.
    assert!((stirling_gamma(1.0) - 1.0).abs() <= 1e-13);
    assert!((stirling_gamma(0.5) - std::f64::consts::PI.sqrt()).abs() <= 1e-13);
}

#[allow(unused)]
pub fn init() {
    sanity_checks();
}
