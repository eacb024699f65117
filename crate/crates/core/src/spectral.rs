//! Spectral models of the generalized Laguerre semigroup and Fourier
//! transform: both operators are diagonal in the Laguerre-type bases, so
//! they act on coefficient vectors by explicit multipliers.
//!
//! On the positive branch the semigroup multiplier on level `l` is
//! `exp(-z(λ + 2l + 1))`, bounded for `Re z >= 0`; on the negative branch
//! it is `exp(-z(λ₋ - 2l - 1))`, bounded for `Re z <= 0`. The Fourier
//! multipliers are `exp(-iπ(m/a + l))` and `-exp(iπ(m/a + l))`
//! respectively, reached from the semigroup at `z = iπ/2` with the
//! normalizing phase `exp(iπ(λ₀ + 1)/2)`.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::kappa::KappaParams;
use crate::laguerre::{basis_function, lambda_param, Branch, LaguerreBasisSpec};
use crate::poly::MultivariatePolynomial;
use crate::radial::{inner_product, norm, ExpMonomial, QuadratureConfig};
use crate::scalar::{format_rational, rational_to_f64, CoeffField};

/// Truncated coefficient vector of a radial function in one basis family.
#[derive(Debug, Clone)]
pub struct SpectralCoefficients {
    pub spec: LaguerreBasisSpec,
    pub coeffs: Vec<Complex64>,
}

impl SpectralCoefficients {
    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient_norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }
}

/// Expansion output: coefficients plus the L² residual of the truncated
/// resynthesis.
#[derive(Debug, Clone)]
pub struct ExpansionResult {
    pub coefficients: SpectralCoefficients,
    pub residual: f64,
}

/// Project a radial function onto the first `truncation` basis elements:
/// `c_l = <f, f_l>` in the branch measure.
///
/// When every term of `f` carries the branch's own decay exponent with a
/// common rate, the projection runs through a single substitution
/// `u = (q_f + 1/a) r^{±a}` with the Laguerre factors evaluated by the
/// stable recurrence at the nodes; otherwise it falls back to the
/// term-by-term pairing.
pub fn expand(
    f: &ExpMonomial<Complex64>,
    spec: &LaguerreBasisSpec,
    truncation: usize,
    config: &QuadratureConfig,
) -> Result<ExpansionResult> {
    spec.check_branch_hypothesis()?;
    let d = spec.measure_exponent();
    let coeffs = match stable_projection(f, spec, truncation, config)? {
        Some(coeffs) => coeffs,
        None => {
            let mut coeffs = Vec::with_capacity(truncation);
            for l in 0..truncation {
                let basis = basis_function(spec, l as u32)?;
                coeffs.push(inner_product(f, &basis, &d, config)?);
            }
            coeffs
        }
    };
    let coefficients = SpectralCoefficients {
        spec: spec.clone(),
        coeffs,
    };
    let synthesized = resynthesize(&coefficients)?;
    let residual = norm(&f.sub(&synthesized), &d, config)?;
    Ok(ExpansionResult {
        coefficients,
        residual,
    })
}

/// The stable projection route. Returns `Ok(None)` when `f` does not have
/// a single decay signature matching the branch.
fn stable_projection(
    f: &ExpMonomial<Complex64>,
    spec: &LaguerreBasisSpec,
    truncation: usize,
    config: &QuadratureConfig,
) -> Result<Option<Vec<Complex64>>> {
    if f.is_zero() {
        return Ok(Some(vec![Complex64::new(0.0, 0.0); truncation]));
    }
    let s = spec.signed_a();
    let mut rate: Option<BigRational> = None;
    for (key, _) in f.terms() {
        match &key.decay {
            Some(decay) if decay.exponent == s => match &rate {
                None => rate = Some(decay.rate.clone()),
                Some(existing) if *existing == decay.rate => {}
                _ => return Ok(None),
            },
            _ => return Ok(None),
        }
    }
    let q_f = rate.expect("nonzero function has terms");

    // Product decay u = Q r^s with Q = q_f + 1/a; the basis factor
    // contributes rate 1/a at the same exponent.
    let q_total = &q_f + spec.a.recip();
    let d = spec.measure_exponent();
    let base_power = match spec.branch {
        Branch::Positive => BigRational::from_integer(i64::from(spec.m).into()),
        Branch::Negative => {
            -(spec.weight_shift() + BigRational::from_integer(i64::from(spec.m).into()))
        }
    };
    // Per input term: exponent (γ + b + d + 1)/s - 1 of the u-variable.
    let exponents: Vec<BigRational> = f
        .terms()
        .map(|(key, _)| (&key.power + &base_power + &d + BigRational::from_integer(1.into())) / &s)
        .collect();
    let alpha_plus_one = exponents
        .iter()
        .min()
        .expect("nonzero function has terms")
        .clone();
    let alpha = rational_to_f64(&alpha_plus_one) - 1.0;
    if alpha.is_nan() || alpha <= -1.0 {
        // Divergent or borderline at the origin: leave it to the generic
        // route and its exact checks.
        return Ok(None);
    }

    let rule = crate::quadrature::cached_rule(alpha, config.nodes)?;
    let q = rational_to_f64(&q_total);
    let s_f64 = rational_to_f64(&s);
    // t (the Laguerre argument) is proportional to u.
    let tau = 2.0 / (rational_to_f64(&spec.a) * q);

    // Pointwise values of the input profile factor at the nodes:
    // Σ_i c_i Q^{-(β_i+1)} u^{β_i - α}.
    let deltas: Vec<f64> = exponents
        .iter()
        .map(|beta_plus_one| rational_to_f64(&(beta_plus_one - &alpha_plus_one)))
        .collect();
    let q_powers: Vec<Complex64> = f
        .terms()
        .zip(exponents.iter())
        .map(|((_, c), beta_plus_one)| c.to_complex() * q.powf(-rational_to_f64(beta_plus_one)))
        .collect();
    let profile_values: Vec<Complex64> = rule
        .nodes
        .iter()
        .map(|&u| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (coeff, delta) in q_powers.iter().zip(deltas.iter()) {
                acc += coeff * if *delta == 0.0 { 1.0 } else { u.powf(*delta) };
            }
            acc
        })
        .collect();

    let lambda = rational_to_f64(&spec.lambda_plus());
    let mut coeffs = vec![Complex64::new(0.0, 0.0); truncation];
    let mut prev: Vec<f64> = vec![1.0; rule.nodes.len()];
    let mut curr: Vec<f64> = rule
        .nodes
        .iter()
        .map(|&u| 1.0 + lambda - tau * u)
        .collect();
    for (l, slot) in coeffs.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &w) in rule.weights.iter().enumerate() {
            let laguerre_value = if l == 0 { 1.0 } else { curr[j] };
            acc += profile_values[j] * (w * laguerre_value);
        }
        *slot = acc * spec.normalization(l as u32) / s_f64.abs();
        if l >= 1 {
            for (j, &u) in rule.nodes.iter().enumerate() {
                let jf = l as f64;
                let next = ((2.0 * jf + 1.0 + lambda - tau * u) * curr[j]
                    - (jf + lambda) * prev[j])
                    / (jf + 1.0);
                prev[j] = curr[j];
                curr[j] = next;
            }
        }
    }
    Ok(Some(coeffs))
}

/// Rebuild the symbolic function `Σ c_l f_l`.
pub fn resynthesize(c: &SpectralCoefficients) -> Result<ExpMonomial<Complex64>> {
    let mut out = ExpMonomial::zero();
    for (l, coeff) in c.coeffs.iter().enumerate() {
        if coeff.re == 0.0 && coeff.im == 0.0 {
            continue;
        }
        out = out.add(&basis_function(&c.spec, l as u32)?.scale(coeff));
    }
    Ok(out)
}

/// `exp(iπ t)` for exact rational `t`, reduced modulo 2 before evaluation;
/// quarter-integer phases are exact.
pub fn unit_phase(t: &BigRational) -> Complex64 {
    let two = BigRational::from_integer(2.into());
    let mut reduced = t % &two;
    if reduced.is_negative() {
        reduced += &two;
    }
    let quarters = &reduced * BigRational::from_integer(2.into());
    if quarters.is_integer() {
        match quarters.to_integer().to_i64().map(|q| q.rem_euclid(4)) {
            Some(0) => return Complex64::new(1.0, 0.0),
            Some(1) => return Complex64::new(0.0, 1.0),
            Some(2) => return Complex64::new(-1.0, 0.0),
            Some(3) => return Complex64::new(0.0, -1.0),
            _ => {}
        }
    }
    let angle = std::f64::consts::PI * rational_to_f64(&reduced);
    Complex64::new(angle.cos(), angle.sin())
}

/// Diagonal multiplier of the Laguerre semigroup at parameter `z` on level
/// `l`: `exp(-z · eigenvalue_l)` with the branch's compact eigenvalue.
pub fn semigroup_multiplier(spec: &LaguerreBasisSpec, z: Complex64, l: u32) -> Complex64 {
    let eigenvalue = rational_to_f64(&spec.compact_eigenvalue(l));
    (-z * eigenvalue).exp()
}

fn check_semigroup_regime(spec: &LaguerreBasisSpec, z: Complex64) -> Result<()> {
    let bounded = match spec.branch {
        Branch::Positive => z.re >= 0.0,
        Branch::Negative => z.re <= 0.0,
    };
    if bounded {
        Ok(())
    } else {
        Err(Error::UnboundedRegime {
            re_z: z.re,
            branch: spec.branch.label().to_string(),
        })
    }
}

/// Apply the semigroup `Λ(z)` to a coefficient vector. The parameter must
/// lie in the branch's boundedness half-plane (`Re z >= 0` on the positive
/// branch, `Re z <= 0` on the negative branch); outside it the multipliers
/// grow without bound in `l`.
pub fn laguerre_semigroup(
    z: Complex64,
    c: &SpectralCoefficients,
) -> Result<SpectralCoefficients> {
    check_semigroup_regime(&c.spec, z)?;
    let coeffs = c
        .coeffs
        .iter()
        .enumerate()
        .map(|(l, coeff)| coeff * semigroup_multiplier(&c.spec, z, l as u32))
        .collect();
    Ok(SpectralCoefficients {
        spec: c.spec.clone(),
        coeffs,
    })
}

/// Diagonal multiplier of the generalized Fourier transform on level `l`:
/// `exp(-iπ(m/a + l))` on the positive branch and `-exp(iπ(m/a + l))` on
/// the negative branch; both are the semigroup at `z = iπ/2` times the
/// normalizing phase `exp(iπ(λ₀ + 1)/2)`.
pub fn ft_multiplier(spec: &LaguerreBasisSpec, l: u32) -> Complex64 {
    let m_over_a = BigRational::from_integer(i64::from(spec.m).into()) / &spec.a;
    let l_rat = BigRational::from_integer(i64::from(l).into());
    match spec.branch {
        Branch::Positive => unit_phase(&-(m_over_a + l_rat)),
        Branch::Negative => -unit_phase(&(m_over_a + l_rat)),
    }
}

/// The same multiplier through the semigroup route, for the internal
/// consistency check.
pub fn ft_multiplier_via_semigroup(spec: &LaguerreBasisSpec, l: u32) -> Complex64 {
    let lambda_zero = match spec.branch {
        Branch::Positive => lambda_param(spec.dimension, &spec.index, &spec.a, 0),
        Branch::Negative => lambda_param(spec.dimension, &spec.index, &-spec.a.clone(), 0),
    }
    .expect("spec construction guarantees a != 0");
    let phase = unit_phase(&((lambda_zero + BigRational::from_integer(1.into()))
        / BigRational::from_integer(2.into())));
    let z = Complex64::new(0.0, std::f64::consts::FRAC_PI_2);
    phase * semigroup_multiplier(spec, z, l)
}

/// Apply the generalized Fourier transform to a coefficient vector.
pub fn generalized_ft(c: &SpectralCoefficients) -> Result<SpectralCoefficients> {
    c.spec.check_branch_hypothesis()?;
    let coeffs = c
        .coeffs
        .iter()
        .enumerate()
        .map(|(l, coeff)| coeff * ft_multiplier(&c.spec, l as u32))
        .collect();
    Ok(SpectralCoefficients {
        spec: c.spec.clone(),
        coeffs,
    })
}

/// One spherical sector: a harmonic degree, a polynomial representative
/// of the k-harmonic space, and the radial coefficients.
#[derive(Debug, Clone)]
pub struct Sector {
    pub m: u32,
    pub harmonic: MultivariatePolynomial<BigRational>,
    pub radial: SpectralCoefficients,
}

/// Hilbert-sum decomposition of a function: a list of spherical sectors
/// all sharing `(N, <k>, a, branch)`.
#[derive(Debug, Clone)]
pub struct SphericalDecomposition {
    pub sectors: Vec<Sector>,
}

impl SphericalDecomposition {
    fn check_compatible(&self) -> Result<()> {
        for pair in self.sectors.windows(2) {
            let a = &pair[0].radial.spec;
            let b = &pair[1].radial.spec;
            if a.dimension != b.dimension
                || a.index != b.index
                || a.a != b.a
                || a.branch != b.branch
            {
                return Err(Error::MixedConfiguration {
                    detail: format!(
                        "sector m={} disagrees with sector m={}",
                        pair[0].m, pair[1].m
                    ),
                });
            }
            if a.m != pair[0].m || b.m != pair[1].m {
                return Err(Error::MixedConfiguration {
                    detail: "sector label does not match its basis spec".into(),
                });
            }
        }
        if let Some(first) = self.sectors.first() {
            if first.radial.spec.m != first.m {
                return Err(Error::MixedConfiguration {
                    detail: "sector label does not match its basis spec".into(),
                });
            }
        }
        Ok(())
    }

    pub fn coefficient_norm_sq(&self) -> f64 {
        self.sectors
            .iter()
            .map(|s| s.radial.coefficient_norm_sq())
            .sum()
    }
}

/// Apply the generalized Fourier transform sector-wise. Unimodular
/// multipliers preserve the coefficient norm.
pub fn ft_full(decomposition: &SphericalDecomposition) -> Result<SphericalDecomposition> {
    decomposition.check_compatible()?;
    let sectors = decomposition
        .sectors
        .iter()
        .map(|sector| {
            Ok(Sector {
                m: sector.m,
                harmonic: sector.harmonic.clone(),
                radial: generalized_ft(&sector.radial)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(SphericalDecomposition { sectors })
}

/// Partial Hilbert-Schmidt sum `Σ_{l < terms} |exp(-z(λ+2l+1))|²` on the
/// positive branch.
pub fn hilbert_schmidt_sum(spec: &LaguerreBasisSpec, re_z: f64, terms: usize) -> f64 {
    (0..terms)
        .map(|l| {
            let eigenvalue = rational_to_f64(&spec.compact_eigenvalue(l as u32));
            (-2.0 * re_z * eigenvalue).exp()
        })
        .sum()
}

/// Closed form of the full geometric series:
/// `exp(-2x(λ+1)) / (1 - exp(-4x))` for `x > 0`.
pub fn hilbert_schmidt_closed_form(spec: &LaguerreBasisSpec, re_z: f64) -> f64 {
    let lambda = rational_to_f64(&spec.lambda());
    match spec.branch {
        Branch::Positive => (-2.0 * re_z * (lambda + 1.0)).exp() / (1.0 - (-4.0 * re_z).exp()),
        // Negative branch eigenvalues are λ₋ - 2l - 1 and the bounded
        // regime is Re z <= 0; the series for x = -Re z > 0 is the mirror.
        Branch::Negative => {
            let x = -re_z;
            (-2.0 * x * (-lambda + 1.0)).exp() / (1.0 - (-4.0 * x).exp())
        }
    }
}

/// Multiplier-level and pointwise verification of the two intertwining
/// identities connecting the branches through the involution:
/// `κ ∘ Λ_{+}(z) = Λ_{-}(-z) ∘ κ` and `κ ∘ F_{+} = -(F_{-})^{-1} ∘ κ`.
#[derive(Debug, Clone)]
pub struct IntertwineFtReport {
    pub semigroup_multiplier_defect: f64,
    pub ft_multiplier_defect: f64,
    pub semigroup_pointwise_defect: f64,
    pub ft_pointwise_defect: f64,
}

pub fn intertwine_check_ft(
    plus: &LaguerreBasisSpec,
    z: Complex64,
    l_max: u32,
    radii: &[f64],
) -> Result<IntertwineFtReport> {
    assert!(matches!(plus.branch, Branch::Positive));
    let minus = LaguerreBasisSpec::new(
        plus.dimension,
        plus.index.clone(),
        plus.a.clone(),
        plus.m,
        Branch::Negative,
    )?;
    let kappa = KappaParams::intertwiner(plus.dimension, &plus.index);

    let mut semigroup_mult_defect: f64 = 0.0;
    let mut ft_mult_defect: f64 = 0.0;
    for l in 0..=l_max {
        // κ maps f_{+,l} to f_{-,l}; both sides act diagonally on it.
        let lhs = semigroup_multiplier(plus, z, l);
        let rhs = semigroup_multiplier(&minus, -z, l);
        semigroup_mult_defect = crate::report::defect_join(
            semigroup_mult_defect,
            (lhs - rhs).norm() / lhs.norm().max(1e-300),
        );

        let ft_lhs = ft_multiplier(plus, l);
        let ft_rhs = -ft_multiplier(&minus, l).inv();
        ft_mult_defect = crate::report::defect_join(ft_mult_defect, (ft_lhs - ft_rhs).norm());
    }

    // Pointwise on finite combinations: f = Σ c_l f_{+,l}.
    let coeffs: Vec<Complex64> = (0..=l_max)
        .map(|l| Complex64::new(1.0 / (1.0 + f64::from(l)), 0.5 * f64::from(l % 3)))
        .collect();
    let plus_coeffs = SpectralCoefficients {
        spec: plus.clone(),
        coeffs: coeffs.clone(),
    };
    let minus_coeffs = SpectralCoefficients {
        spec: minus.clone(),
        coeffs,
    };

    let mut semigroup_pointwise: f64 = 0.0;
    let lhs_fun = resynthesize(&laguerre_semigroup(z, &plus_coeffs)?)?
        .kappa(&kappa.alpha, &kappa.beta);
    let rhs_fun = resynthesize(&laguerre_semigroup(-z, &minus_coeffs)?)?;
    for &r in radii {
        let want = rhs_fun.eval(r);
        let got = lhs_fun.eval(r);
        semigroup_pointwise = crate::report::defect_join(
            semigroup_pointwise,
            (got - want).norm() / want.norm().max(1e-100),
        );
    }

    let mut ft_pointwise: f64 = 0.0;
    let lhs_fun = resynthesize(&generalized_ft(&plus_coeffs)?)?.kappa(&kappa.alpha, &kappa.beta);
    // -(F_-)^{-1} acts diagonally with multiplier -(m_l)^{-1}.
    let inverse_coeffs = SpectralCoefficients {
        spec: minus.clone(),
        coeffs: minus_coeffs
            .coeffs
            .iter()
            .enumerate()
            .map(|(l, c)| -c * ft_multiplier(&minus, l as u32).inv())
            .collect(),
    };
    let rhs_fun = resynthesize(&inverse_coeffs)?;
    for &r in radii {
        let want = rhs_fun.eval(r);
        let got = lhs_fun.eval(r);
        ft_pointwise = crate::report::defect_join(
            ft_pointwise,
            (got - want).norm() / want.norm().max(1e-100),
        );
    }

    Ok(IntertwineFtReport {
        semigroup_multiplier_defect: semigroup_mult_defect,
        ft_multiplier_defect: ft_mult_defect,
        semigroup_pointwise_defect: semigroup_pointwise,
        ft_pointwise_defect: ft_pointwise,
    })
}

/// Configuration echo used in reports.
pub fn describe_spec(spec: &LaguerreBasisSpec) -> String {
    format!(
        "N={} <k>={} a={} m={} branch={}",
        spec.dimension,
        format_rational(&spec.index),
        format_rational(&spec.a),
        spec.m,
        spec.branch.label()
    )
}
