//! The closed symbolic class of radial functions: finite sums of terms
//! `c · r^γ · exp(-q · r^s)` with rational `γ`, `q > 0`, `s ≠ 0` and
//! complex coefficient `c`.
//!
//! The class is closed under the Euler operator `θ = r d/dr`,
//! multiplication by powers `r^d`, linear combination, and the
//! substitution transforms `κ_{α,β}`, each acting exactly on term data.
//! Inner products against the measures `r^d dr` on `(0, ∞)` are evaluated
//! by generalized Gauss-Laguerre quadrature after an exact substitution
//! that matches the rule parameter to the transformed measure.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::cached_rule;
use crate::scalar::{format_rational, parse_rational, rational_to_f64, CoeffField};

/// Exponential factor `exp(-rate · r^exponent)` with `rate > 0`,
/// `exponent ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Decay {
    pub rate: BigRational,
    pub exponent: BigRational,
}

/// Term signature `(γ, decay)`. Terms sharing a key are merged.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RadialKey {
    pub power: BigRational,
    pub decay: Option<Decay>,
}

/// A finite sum of exponential-monomial terms.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpMonomial<C: CoeffField> {
    terms: BTreeMap<RadialKey, C>,
}

impl<C: CoeffField> Default for ExpMonomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: CoeffField> ExpMonomial<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// Single term `c · r^power · exp(-rate · r^exponent)`; pass
    /// `decay = None` for a pure power (the `q = 0` edge of the class).
    pub fn term(
        c: C,
        power: BigRational,
        decay: Option<(BigRational, BigRational)>,
    ) -> Result<Self> {
        let decay = match decay {
            None => None,
            Some((rate, exponent)) => {
                if rate.is_zero() {
                    None
                } else {
                    if rate.is_negative() {
                        return Err(Error::InvalidParameter {
                            detail: "decay rate must be positive".into(),
                        });
                    }
                    if exponent.is_zero() {
                        return Err(Error::InvalidParameter {
                            detail: "decay exponent must be nonzero".into(),
                        });
                    }
                    Some(Decay { rate, exponent })
                }
            }
        };
        let mut out = Self::zero();
        out.add_term(RadialKey { power, decay }, c);
        Ok(out)
    }

    pub fn pure_power(c: C, power: BigRational) -> Self {
        Self::term(c, power, None).expect("pure powers are always valid")
    }

    fn add_term(&mut self, key: RadialKey, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(existing) => {
                let sum = existing.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RadialKey, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_coeff_abs(&self) -> f64 {
        self.terms.values().map(CoeffField::abs).fold(0.0, f64::max)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.add_term(key.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (key, c) in &self.terms {
            out.terms.insert(key.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, factor: &C) -> Self {
        let mut out = Self::zero();
        if factor.is_zero() {
            return out;
        }
        for (key, c) in &self.terms {
            out.add_term(key.clone(), c.mul(factor));
        }
        out
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        let mut out = Self::zero();
        if q.is_zero() {
            return out;
        }
        for (key, c) in &self.terms {
            out.add_term(key.clone(), c.mul_rational(q));
        }
        out
    }

    pub fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (key, c) in &self.terms {
            out.terms.insert(key.clone(), c.conj());
        }
        out
    }

    /// Multiplication by `r^delta`.
    pub fn mul_power(&self, delta: &BigRational) -> Self {
        let mut out = Self::zero();
        for (key, c) in &self.terms {
            out.add_term(
                RadialKey {
                    power: &key.power + delta,
                    decay: key.decay.clone(),
                },
                c.clone(),
            );
        }
        out
    }

    /// The Euler operator `θ = r d/dr`, exactly:
    /// `θ(c r^γ e^{-q r^s}) = c γ r^γ e^{-q r^s} - c q s r^{γ+s} e^{-q r^s}`.
    pub fn theta(&self) -> Self {
        let mut out = Self::zero();
        for (key, c) in &self.terms {
            out.add_term(key.clone(), c.mul_rational(&key.power));
            if let Some(decay) = &key.decay {
                let factor = -(&decay.rate * &decay.exponent);
                out.add_term(
                    RadialKey {
                        power: &key.power + &decay.exponent,
                        decay: key.decay.clone(),
                    },
                    c.mul_rational(&factor),
                );
            }
        }
        out
    }

    /// The substitution transform `r^β f(r^α)`, exactly:
    /// `c r^γ e^{-q r^s} -> c r^{β + αγ} e^{-q r^{αs}}`.
    pub fn kappa(&self, alpha: &BigRational, beta: &BigRational) -> Self {
        let mut out = Self::zero();
        for (key, c) in &self.terms {
            out.add_term(
                RadialKey {
                    power: beta + alpha * &key.power,
                    decay: key.decay.as_ref().map(|d| Decay {
                        rate: d.rate.clone(),
                        exponent: alpha * &d.exponent,
                    }),
                },
                c.clone(),
            );
        }
        out
    }

    /// Product, defined when every pairwise term product stays in the
    /// single-exponential class (matching decay exponents, or at most one
    /// factor carrying a decay).
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let decay = match (&k1.decay, &k2.decay) {
                    (None, None) => None,
                    (Some(d), None) | (None, Some(d)) => Some(d.clone()),
                    (Some(d1), Some(d2)) => {
                        if d1.exponent == d2.exponent {
                            Some(Decay {
                                rate: &d1.rate + &d2.rate,
                                exponent: d1.exponent.clone(),
                            })
                        } else {
                            return Err(Error::IncompatibleProduct {
                                detail: format!(
                                    "decay exponents {} and {} differ",
                                    format_rational(&d1.exponent),
                                    format_rational(&d2.exponent)
                                ),
                            });
                        }
                    }
                };
                out.add_term(
                    RadialKey {
                        power: &k1.power + &k2.power,
                        decay,
                    },
                    c1.mul(c2),
                );
            }
        }
        Ok(out)
    }

    pub fn eval(&self, r: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (key, c) in &self.terms {
            let mut v = r.powf(rational_to_f64(&key.power));
            if let Some(decay) = &key.decay {
                v *= (-rational_to_f64(&decay.rate) * r.powf(rational_to_f64(&decay.exponent)))
                    .exp();
            }
            acc += c.to_complex() * v;
        }
        acc
    }

    /// Smallest power `γ` appearing (controls the `r -> 0` behavior when
    /// decays have positive exponent).
    pub fn min_power(&self) -> Option<&BigRational> {
        self.terms.keys().map(|k| &k.power).min()
    }

    /// Largest power `γ` appearing (controls the `r -> ∞` behavior when
    /// decays have negative exponent).
    pub fn max_power(&self) -> Option<&BigRational> {
        self.terms.keys().map(|k| &k.power).max()
    }

    pub fn map_coefficients<D: CoeffField>(&self, f: impl Fn(&C) -> D) -> ExpMonomial<D> {
        let mut out = ExpMonomial::zero();
        for (key, c) in &self.terms {
            out.add_term(key.clone(), f(c));
        }
        out
    }

    pub fn to_numeric(&self) -> ExpMonomial<Complex64> {
        self.map_coefficients(|c| c.to_complex())
    }
}

// ---------------------------------------------------------------------------
// Inner products
// ---------------------------------------------------------------------------

/// Quadrature settings for inner products.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig {
    pub nodes: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { nodes: 128 }
    }
}

/// One term of an integrand product: `coeff · r^power · Π exp(-q_i r^{s_i})`,
/// with the decays merged by exponent.
struct ProductTerm {
    coeff: Complex64,
    power: BigRational,
    decays: BTreeMap<BigRational, BigRational>, // exponent -> rate (> 0)
}

impl ProductTerm {
    fn has_positive_decay(&self) -> bool {
        self.decays.keys().any(|s| s.is_positive())
    }

    fn has_negative_decay(&self) -> bool {
        self.decays.keys().any(|s| s.is_negative())
    }

    /// Exact convergence check of `∫_0^∞ r^power Π exp(-q_i r^{s_i}) dr`.
    fn check_convergence(&self) -> Result<()> {
        let minus_one = -BigRational::one();
        if !self.has_positive_decay() && self.power >= minus_one {
            return Err(Error::DivergentIntegrand {
                detail: format!(
                    "power {} with no decay at infinity",
                    format_rational(&self.power)
                ),
            });
        }
        if !self.has_negative_decay() && self.power <= -BigRational::one() {
            return Err(Error::DivergentIntegrand {
                detail: format!(
                    "power {} is not integrable at the origin",
                    format_rational(&self.power)
                ),
            });
        }
        Ok(())
    }

    /// Substitute `u = 1/r`.
    fn invert(&self) -> Self {
        Self {
            coeff: self.coeff,
            power: -&self.power - BigRational::from_integer(2.into()),
            decays: self.decays.iter().map(|(s, q)| (-s, q.clone())).collect(),
        }
    }

    /// Evaluate by Gauss-Laguerre quadrature after the substitution
    /// `t = q* r^{s*}` on the slowest positive decay exponent `s*`, which
    /// turns that factor into the rule weight `e^{-t}` exactly.
    fn integrate(&self, config: &QuadratureConfig) -> Result<Complex64> {
        self.check_convergence()?;
        let term = if self.has_positive_decay() {
            Self {
                coeff: self.coeff,
                power: self.power.clone(),
                decays: self.decays.clone(),
            }
        } else {
            self.invert()
        };

        let (s_star, q_star) = term
            .decays
            .iter()
            .filter(|(s, _)| s.is_positive())
            .min_by(|a, b| a.0.cmp(b.0))
            .map(|(s, q)| (s.clone(), q.clone()))
            .expect("convergence check guarantees a positive decay");

        let s = rational_to_f64(&s_star);
        let q = rational_to_f64(&q_star);
        let p1 = rational_to_f64(&((&term.power + BigRational::one()) / &s_star));
        let alpha_natural = p1 - 1.0;
        let alpha = if term.has_negative_decay() {
            alpha_natural.max(0.0)
        } else {
            alpha_natural
        };
        let residual_power = alpha_natural - alpha;

        let others: Vec<(f64, f64)> = term
            .decays
            .iter()
            .filter(|(exp, _)| **exp != s_star)
            .map(|(exp, rate)| (rational_to_f64(exp) / s, rational_to_f64(rate)))
            .collect();

        let rule = cached_rule(alpha, config.nodes)?;
        let value = rule.integrate(|t| {
            let mut phi = if residual_power == 0.0 {
                1.0
            } else {
                t.powf(residual_power)
            };
            for (rel_exp, rate) in &others {
                phi *= (-rate * (t / q).powf(*rel_exp)).exp();
            }
            phi
        });
        let scale = q.powf(-p1) / s;
        Ok(term.coeff * value * scale)
    }
}

/// The pairing `∫_0^∞ f(r) conj(g(r)) r^d dr`.
///
/// Every term of the product must decay appropriately at both ends of the
/// half-line; otherwise [`Error::DivergentIntegrand`] is returned. Pure
/// powers are admitted in the class for operator algebra but rejected here
/// unless the product integrand decays.
pub fn inner_product<C: CoeffField>(
    f: &ExpMonomial<C>,
    g: &ExpMonomial<C>,
    d: &BigRational,
    config: &QuadratureConfig,
) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    for (k1, c1) in f.terms() {
        for (k2, c2) in g.terms() {
            let coeff = c1.mul(&c2.conj());
            if coeff.is_zero() {
                continue;
            }
            let mut decays: BTreeMap<BigRational, BigRational> = BTreeMap::new();
            for decay in [&k1.decay, &k2.decay].into_iter().flatten() {
                decays
                    .entry(decay.exponent.clone())
                    .and_modify(|q| *q += &decay.rate)
                    .or_insert_with(|| decay.rate.clone());
            }
            let term = ProductTerm {
                coeff: coeff.to_complex(),
                power: &k1.power + &k2.power + d,
                decays,
            };
            total += term.integrate(config)?;
        }
    }
    Ok(total)
}

/// `L²(r^d dr)` norm.
pub fn norm<C: CoeffField>(
    f: &ExpMonomial<C>,
    d: &BigRational,
    config: &QuadratureConfig,
) -> Result<f64> {
    Ok(inner_product(f, f, d, config)?.re.max(0.0).sqrt())
}

// ---------------------------------------------------------------------------
// JSON document form
// ---------------------------------------------------------------------------

/// One serialized term: rationals in `"p/q"` form; `decay_rate` and
/// `decay_exponent` may be omitted together for a pure power.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadialTermDocument {
    #[serde(default = "zero_string")]
    pub re: String,
    #[serde(default = "zero_string")]
    pub im: String,
    pub power: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decay_rate: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decay_exponent: Option<String>,
}

fn zero_string() -> String {
    "0".to_string()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadialFunctionDocument {
    pub terms: Vec<RadialTermDocument>,
}

impl ExpMonomial<Complex64> {
    pub fn from_document(doc: &RadialFunctionDocument) -> Result<Self> {
        let mut out = Self::zero();
        for term in &doc.terms {
            let re = rational_to_f64(&parse_rational(&term.re)?);
            let im = rational_to_f64(&parse_rational(&term.im)?);
            let power = parse_rational(&term.power)?;
            let decay = match (&term.decay_rate, &term.decay_exponent) {
                (None, None) => None,
                (Some(rate), Some(exp)) => Some((parse_rational(rate)?, parse_rational(exp)?)),
                _ => {
                    return Err(Error::InvalidParameter {
                        detail: "decay_rate and decay_exponent must be given together".into(),
                    })
                }
            };
            out = out.add(&Self::term(Complex64::new(re, im), power, decay)?);
        }
        Ok(out)
    }
}
