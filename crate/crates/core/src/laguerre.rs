//! Generalized Laguerre polynomials and the Laguerre-type orthonormal
//! bases of `L²((0,∞), r^d dr)` attached to a dimension, multiplicity
//! index, deformation parameter and harmonic degree.
//!
//! On the positive branch the basis functions are
//! `n_l · r^m · L_l^{(λ)}((2/a) r^a) · exp(-r^a/a)` with
//! `λ = (N - 2 + 2<k> + 2m)/a`; the negative branch is their image under
//! the involution `κ_{-1, -(N-2+2<k>)}` and consists of highest-weight
//! rather than lowest-weight vectors.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gamma::{factorial, gamma, gamma_ratio};
use crate::radial::ExpMonomial;
use crate::scalar::{format_rational, rational_to_f64, ratio, GaussianRational};

/// Which sign of the deformation parameter a basis lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Positive,
    Negative,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::Positive => "positive",
            Branch::Negative => "negative",
        }
    }
}

/// Evaluate `L_l^{(lambda)}(t)` by the stable three-term recurrence.
///
/// Errors with [`Error::GammaPole`] when `lambda + j + 1` hits a
/// nonpositive integer for some `0 <= j <= l`, where the coefficient
/// formula degenerates.
pub fn laguerre_poly(lambda: f64, l: usize, t: f64) -> Result<f64> {
    check_gamma_poles(lambda, l)?;
    Ok(laguerre_recurrence(lambda, l, t))
}

fn check_gamma_poles(lambda: f64, l: usize) -> Result<()> {
    for j in 0..=l {
        let arg = lambda + j as f64 + 1.0;
        if arg <= 0.0 && (arg - arg.round()).abs() <= 1e-9 {
            return Err(Error::GammaPole { argument: arg });
        }
    }
    Ok(())
}

fn laguerre_recurrence(lambda: f64, l: usize, t: f64) -> f64 {
    if l == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut curr = 1.0 + lambda - t;
    for j in 1..l {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + lambda - t) * curr - (jf + lambda) * prev) / (jf + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}

/// The displayed finite sum
/// `Σ_j (-1)^j/(j!(l-j)!) · Γ(λ+l+1)/Γ(λ+j+1) · t^j`,
/// kept as an independent route against the recurrence.
pub fn laguerre_poly_sum(lambda: f64, l: usize, t: f64) -> Result<f64> {
    check_gamma_poles(lambda, l)?;
    let mut acc = 0.0;
    for j in 0..=l {
        let mut c = if j % 2 == 0 { 1.0 } else { -1.0 };
        c /= gamma(j as f64 + 1.0) * gamma((l - j) as f64 + 1.0);
        // Γ(λ+l+1)/Γ(λ+j+1) as a finite rising product.
        let mut ratio_part = 1.0;
        for i in (j + 1)..=l {
            ratio_part *= lambda + i as f64;
        }
        acc += c * ratio_part * t.powi(j as i32);
    }
    Ok(acc)
}

/// Exact coefficient list of `L_l^{(lambda)}` in powers of `t`, for
/// rational `lambda`. The arguments `lambda + j + 1` must avoid the gamma
/// poles even though the rising-product form would cancel them.
pub fn laguerre_coefficients(lambda: &BigRational, l: u32) -> Result<Vec<BigRational>> {
    for j in 0..=l {
        let arg = lambda + BigRational::from_integer((i64::from(j) + 1).into());
        if arg.is_integer() && !arg.is_positive() {
            return Err(Error::GammaPole {
                argument: rational_to_f64(&arg),
            });
        }
    }
    let mut coeffs = Vec::with_capacity(l as usize + 1);
    for j in 0..=l {
        let sign = if j % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        let denom = factorial(j) * factorial(l - j);
        let rising = gamma_ratio(lambda, l, j)?;
        coeffs.push(sign * rising / denom);
    }
    Ok(coeffs)
}

/// The spectral parameter `λ = (N - 2 + 2<k> + 2m) / a` (exact).
///
/// `a` is signed; substituting `a -> -a` negates the value.
pub fn lambda_param(dimension: u32, index: &BigRational, a: &BigRational, m: u32) -> Result<BigRational> {
    if a.is_zero() {
        return Err(Error::ZeroDeformation);
    }
    let numerator = BigRational::from_integer((i64::from(dimension) - 2).into())
        + ratio(2, 1) * index
        + BigRational::from_integer((2 * i64::from(m)).into());
    Ok(numerator / a)
}

/// Configuration of one radial basis family.
#[derive(Debug, Clone, PartialEq)]
pub struct LaguerreBasisSpec {
    pub dimension: u32,
    /// Multiplicity index `<k>`.
    pub index: BigRational,
    /// Magnitude of the deformation parameter; must be positive.
    pub a: BigRational,
    /// Harmonic degree of the sector.
    pub m: u32,
    pub branch: Branch,
}

impl LaguerreBasisSpec {
    pub fn new(
        dimension: u32,
        index: BigRational,
        a: BigRational,
        m: u32,
        branch: Branch,
    ) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroDeformation);
        }
        if a.is_negative() {
            return Err(Error::InvalidParameter {
                detail: "the spec stores |a|; select the sign through the branch".into(),
            });
        }
        let spec = Self {
            dimension,
            index,
            a,
            m,
            branch,
        };
        spec.check_branch_hypothesis()?;
        Ok(spec)
    }

    /// `N - 2 + 2<k>`, the weight shift that recurs in every operator.
    pub fn weight_shift(&self) -> BigRational {
        BigRational::from_integer((i64::from(self.dimension) - 2).into()) + ratio(2, 1) * &self.index
    }

    /// The positive-branch spectral parameter `λ = (N-2+2<k>+2m)/|a|`.
    pub fn lambda_plus(&self) -> BigRational {
        lambda_param(self.dimension, &self.index, &self.a, self.m)
            .expect("spec construction guarantees a != 0")
    }

    /// The branch's own spectral parameter (negated on the negative
    /// branch).
    pub fn lambda(&self) -> BigRational {
        match self.branch {
            Branch::Positive => self.lambda_plus(),
            Branch::Negative => -self.lambda_plus(),
        }
    }

    /// Signed deformation parameter.
    pub fn signed_a(&self) -> BigRational {
        match self.branch {
            Branch::Positive => self.a.clone(),
            Branch::Negative => -self.a.clone(),
        }
    }

    /// Exponent `d` of the branch measure `r^d dr`:
    /// `N - 3 + 2<k> ± a`.
    pub fn measure_exponent(&self) -> BigRational {
        BigRational::from_integer((i64::from(self.dimension) - 3).into())
            + ratio(2, 1) * &self.index
            + self.signed_a()
    }

    /// On the positive branch the basis requires `λ > -1`; on the negative
    /// branch the mirrored parameter must satisfy `λ < 1`. The two
    /// conditions coincide under `λ -> -λ`.
    pub fn check_branch_hypothesis(&self) -> Result<()> {
        let ok = match self.branch {
            Branch::Positive => self.lambda() > -BigRational::one(),
            Branch::Negative => self.lambda() < BigRational::one(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BranchHypothesisViolated {
                lambda: format_rational(&self.lambda()),
                branch: self.branch.label().to_string(),
            })
        }
    }

    /// Eigenvalue of the compact generator on basis element `l`:
    /// `λ + 2l + 1` on the positive branch, `λ₋ - 2l - 1` on the negative
    /// branch (exact).
    pub fn compact_eigenvalue(&self, l: u32) -> BigRational {
        let shift = BigRational::from_integer((2 * i64::from(l) + 1).into());
        match self.branch {
            Branch::Positive => self.lambda() + shift,
            Branch::Negative => self.lambda() - shift,
        }
    }

    /// Normalization constant
    /// `n_l = (2^{λ+1} l! / (a^λ Γ(λ+l+1)))^{1/2}` (both branches share it).
    pub fn normalization(&self, l: u32) -> f64 {
        let lambda = rational_to_f64(&self.lambda_plus());
        let a = rational_to_f64(&self.a);
        let squared = 2f64.powf(lambda + 1.0) * gamma(l as f64 + 1.0)
            / (a.powf(lambda) * gamma(lambda + l as f64 + 1.0));
        squared.sqrt()
    }
}

/// Unnormalized basis function on the positive branch, exactly:
/// `r^m · L_l^{(λ)}((2/a) r^a) · exp(-r^a/a)` expanded into the symbolic
/// class. All coefficients are rational.
pub fn basis_function_unnormalized(
    spec: &LaguerreBasisSpec,
    l: u32,
) -> Result<ExpMonomial<GaussianRational>> {
    spec.check_branch_hypothesis()?;
    let lambda = spec.lambda_plus();
    let coeffs = laguerre_coefficients(&lambda, l)?;
    let a = &spec.a;
    let two_over_a = ratio(2, 1) / a;
    let rate = BigRational::one() / a;
    let m = BigRational::from_integer(i64::from(spec.m).into());

    let mut f = ExpMonomial::zero();
    let mut scale = BigRational::one();
    for (j, c) in coeffs.iter().enumerate() {
        let coeff = GaussianRational::from_rational(c * &scale);
        let power = &m + BigRational::from_integer((j as i64).into()) * a;
        f = f.add(&ExpMonomial::term(
            coeff,
            power,
            Some((rate.clone(), a.clone())),
        )?);
        scale *= &two_over_a;
    }
    Ok(match spec.branch {
        Branch::Positive => f,
        Branch::Negative => {
            // Image under the intertwining involution κ_{-1, -(N-2+2<k>)}.
            f.kappa(&-BigRational::one(), &-spec.weight_shift())
        }
    })
}

/// Normalized basis function `f_l` in the numeric backend. Satisfies
/// `∫ f_l² r^d dr = 1` against the branch measure exponent `d`.
pub fn basis_function(spec: &LaguerreBasisSpec, l: u32) -> Result<ExpMonomial<Complex64>> {
    let unnormalized = basis_function_unnormalized(spec, l)?;
    let n = spec.normalization(l);
    Ok(unnormalized
        .to_numeric()
        .scale(&Complex64::new(n, 0.0)))
}

/// Gram matrix of the first `size` basis functions against the branch
/// measure, through the substitution `t = (2/a) r^{±a}`.
///
/// The substitution sends the pairing onto the weight `t^λ e^{-t}` with
/// `λ` of the configuration, leaving the product of two Laguerre
/// polynomials as the integrand; these are evaluated at the nodes by the
/// stable recurrence, so the rule is exact for `nodes >= size` and the
/// result avoids the cancellation of the monomial-expanded form. The
/// inversion `u = 1/r` identifies the two branch pairings, so the matrix
/// does not depend on the branch.
pub fn gram_matrix(
    spec: &LaguerreBasisSpec,
    size: usize,
    config: &crate::radial::QuadratureConfig,
) -> Result<Vec<Vec<f64>>> {
    spec.check_branch_hypothesis()?;
    let lambda = rational_to_f64(&spec.lambda_plus());
    for l in 0..size as u32 {
        // Surface Laguerre-coefficient poles exactly as the pointwise
        // evaluators would.
        laguerre_coefficients(&spec.lambda_plus(), l)?;
    }
    let rule = crate::quadrature::cached_rule(lambda, config.nodes.max(size))?;
    // Rows: per node, values L_0..L_{size-1} by the recurrence.
    let mut node_values: Vec<Vec<f64>> = Vec::with_capacity(rule.nodes.len());
    for &t in &rule.nodes {
        let mut values = Vec::with_capacity(size);
        let mut prev = 1.0;
        let mut curr = 1.0 + lambda - t;
        for l in 0..size {
            if l == 0 {
                values.push(1.0);
            } else if l == 1 {
                values.push(curr);
            } else {
                let jf = (l - 1) as f64;
                let next =
                    ((2.0 * jf + 1.0 + lambda - t) * curr - (jf + lambda) * prev) / (jf + 1.0);
                prev = curr;
                curr = next;
                values.push(curr);
            }
        }
        node_values.push(values);
    }
    // Prefactor n_l n_l' (1/a)(a/2)^{λ+1} collapses to
    // sqrt(l! l'! / (Γ(λ+l+1) Γ(λ+l'+1))).
    let scale: Vec<f64> = (0..size)
        .map(|l| (gamma(l as f64 + 1.0) / gamma(lambda + l as f64 + 1.0)).sqrt())
        .collect();
    let mut out = vec![vec![0.0; size]; size];
    #[allow(clippy::needless_range_loop)] // symmetric fill
    for i in 0..size {
        for j in i..size {
            let mut integral = 0.0;
            for (weights, values) in rule.weights.iter().zip(node_values.iter()) {
                integral += weights * values[i] * values[j];
            }
            let entry = scale[i] * scale[j] * integral;
            out[i][j] = entry;
            out[j][i] = entry;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radial::{inner_product, QuadratureConfig};

    #[test]
    fn degree_zero_is_one() {
        for lambda in [-0.5, 0.0, 1.7] {
            for t in [0.1, 1.0, 5.0] {
                assert_eq!(laguerre_poly(lambda, 0, t).unwrap(), 1.0);
            }
        }
    }

    #[test]
    fn degree_one_half_parameter() {
        // L_1^{(1/2)}(2) = 3/2 - 2 = -1/2
        let got = laguerre_poly(0.5, 1, 2.0).unwrap();
        assert!((got + 0.5).abs() <= 1e-15);
    }

    #[test]
    fn degree_two_sum_oracle() {
        // L_2^{(0)}(1) = 1 - 2 + 1/2 = -1/2 by the displayed sum.
        let via_sum = laguerre_poly_sum(0.0, 2, 1.0).unwrap();
        assert!((via_sum + 0.5).abs() <= 1e-15);
        let via_recurrence = laguerre_poly(0.0, 2, 1.0).unwrap();
        assert!((via_recurrence + 0.5).abs() <= 1e-15);
    }

    #[test]
    fn recurrence_matches_sum_up_to_degree_twenty() {
        // Oracle: the displayed sum evaluated in exact rational
        // arithmetic, converted to f64 at the end.
        for (ln, ld) in [(-1i64, 2i64), (1, 4), (1, 1), (7, 2)] {
            let lambda = ratio(ln, ld);
            let lambda_f = rational_to_f64(&lambda);
            for l in 0..=20u32 {
                let coeffs = laguerre_coefficients(&lambda, l).unwrap();
                for (tn, td) in [(1i64, 20i64), (7, 10), (23, 10), (11, 1)] {
                    let t = ratio(tn, td);
                    let mut exact = BigRational::zero();
                    let mut power = BigRational::one();
                    for c in &coeffs {
                        exact += c * &power;
                        power *= &t;
                    }
                    let want = rational_to_f64(&exact);
                    let got = laguerre_recurrence(lambda_f, l as usize, rational_to_f64(&t));
                    let rel = (got - want).abs() / want.abs().max(1.0);
                    assert!(rel <= 1e-12, "lambda={lambda} l={l} t={t}: {got} vs {want}");
                }
            }
        }
    }

    #[test]
    fn float_sum_route_agrees_on_small_degrees() {
        for lambda in [-0.5, 0.25, 1.0, 3.5] {
            for l in 0..=8usize {
                for t in [0.05, 0.7, 2.3] {
                    let a = laguerre_recurrence(lambda, l, t);
                    let b = laguerre_poly_sum(lambda, l, t).unwrap();
                    let rel = (a - b).abs() / a.abs().max(b.abs()).max(1.0);
                    assert!(rel <= 1e-12, "lambda={lambda} l={l} t={t}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn pole_detection() {
        // lambda = -2: j = 1 gives Γ(0).
        assert!(matches!(
            laguerre_poly(-2.0, 1, 1.0),
            Err(Error::GammaPole { .. })
        ));
        assert!(laguerre_coefficients(&ratio(-2, 1), 1).is_err());
    }

    #[test]
    fn lambda_param_examples() {
        assert_eq!(
            lambda_param(3, &ratio(0, 1), &ratio(2, 1), 0).unwrap(),
            ratio(1, 2)
        );
        assert_eq!(
            lambda_param(1, &ratio(1, 2), &ratio(1, 1), 0).unwrap(),
            ratio(0, 1)
        );
        // a -> -a flips the sign.
        assert_eq!(
            lambda_param(3, &ratio(0, 1), &ratio(-2, 1), 0).unwrap(),
            ratio(-1, 2)
        );
        assert!(matches!(
            lambda_param(3, &ratio(0, 1), &ratio(0, 1), 0),
            Err(Error::ZeroDeformation)
        ));
    }

    #[test]
    fn branch_hypothesis_gate() {
        // N=1, <k>=0, a=1/2, m=0: λ = -2 <= -1 fails.
        assert!(matches!(
            LaguerreBasisSpec::new(1, ratio(0, 1), ratio(1, 2), 0, Branch::Positive),
            Err(Error::BranchHypothesisViolated { .. })
        ));
        assert!(LaguerreBasisSpec::new(1, ratio(0, 1), ratio(2, 1), 0, Branch::Positive).is_ok());
    }

    #[test]
    fn gaussian_ground_state_normalization() {
        // N=1, <k>=0, a=2, m=0: f_0 = c e^{-r²/2} with c² = 2/√π,
        // fixed by ∫_0^∞ e^{-r²} dr = √π / 2.
        let spec = LaguerreBasisSpec::new(1, ratio(0, 1), ratio(2, 1), 0, Branch::Positive).unwrap();
        let c = spec.normalization(0);
        let want = (2.0 / std::f64::consts::PI.sqrt()).sqrt();
        assert!((c - want).abs() <= 1e-14, "{c} vs {want}");

        let f0 = basis_function(&spec, 0).unwrap();
        let d = spec.measure_exponent();
        assert_eq!(d, ratio(0, 1));
        let n = inner_product(&f0, &f0, &d, &QuadratureConfig::default()).unwrap();
        assert!((n.re - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn unit_norms_across_a_grid() {
        // Quadrature oracle for unit norm over a small configuration grid.
        for (n, k_num, k_den, a_num, a_den, m) in [
            (1u32, 0i64, 1i64, 2i64, 1i64, 0u32),
            (2, 1, 2, 1, 1, 1),
            (3, 1, 1, 1, 2, 2),
            (2, 0, 1, 3, 2, 0),
        ] {
            for branch in [Branch::Positive, Branch::Negative] {
                let spec =
                    LaguerreBasisSpec::new(n, ratio(k_num, k_den), ratio(a_num, a_den), m, branch)
                        .unwrap();
                for l in [0u32, 1, 3] {
                    let f = basis_function(&spec, l).unwrap();
                    let d = spec.measure_exponent();
                    let got = inner_product(&f, &f, &d, &QuadratureConfig::default()).unwrap();
                    assert!(
                        (got.re - 1.0).abs() <= 1e-10,
                        "norm {} at N={n} m={m} l={l} {:?}",
                        got.re,
                        branch
                    );
                }
            }
        }
    }

    #[test]
    fn negative_branch_matches_direct_construction() {
        // Dual route: the mirrored basis is defined as the involution
        // image, and must coincide term-by-term with the direct expansion
        // n_l r^{-(N-2+2<k>+m)} L_l^{(λ)}((2/a) r^{-a}) e^{-r^{-a}/a}.
        let spec = LaguerreBasisSpec::new(3, ratio(1, 2), ratio(3, 2), 2, Branch::Negative).unwrap();
        let lambda = spec.lambda_plus();
        let a = spec.a.clone();
        for l in 0..5u32 {
            let via_involution = basis_function_unnormalized(&spec, l).unwrap();
            let coeffs = laguerre_coefficients(&lambda, l).unwrap();
            let mut direct = ExpMonomial::zero();
            let mut scale = BigRational::one();
            let two_over_a = ratio(2, 1) / &a;
            let base = -(spec.weight_shift() + BigRational::from_integer(i64::from(spec.m).into()));
            for (j, c) in coeffs.iter().enumerate() {
                direct = direct
                    .add(
                        &ExpMonomial::term(
                            GaussianRational::from_rational(c * &scale),
                            &base - BigRational::from_integer((j as i64).into()) * &a,
                            Some((a.recip(), -a.clone())),
                        )
                        .unwrap(),
                    );
                scale *= &two_over_a;
            }
            assert_eq!(via_involution, direct, "l={l}");
        }
    }

    #[test]
    fn negative_branch_is_kappa_image_pointwise() {
        let plus = LaguerreBasisSpec::new(2, ratio(1, 2), ratio(3, 2), 1, Branch::Positive).unwrap();
        let minus = LaguerreBasisSpec::new(2, ratio(1, 2), ratio(3, 2), 1, Branch::Negative).unwrap();
        let shift = plus.weight_shift();
        for l in 0..4u32 {
            let f_plus = basis_function(&plus, l).unwrap();
            let f_minus = basis_function(&minus, l).unwrap();
            for r in [0.5f64, 1.0, 2.0] {
                let image = r.powf(-rational_to_f64(&shift)) * f_plus.eval(1.0 / r);
                let got = f_minus.eval(r);
                assert!(
                    (image - got).norm() <= 1e-12 * got.norm().max(1.0),
                    "l={l} r={r}"
                );
            }
        }
    }

    #[test]
    fn leading_behavior_is_structural() {
        let spec = LaguerreBasisSpec::new(3, ratio(1, 2), ratio(2, 1), 2, Branch::Positive).unwrap();
        let f = basis_function_unnormalized(&spec, 3).unwrap();
        // Small-r behavior r^m on the positive branch.
        assert_eq!(f.min_power().unwrap(), &ratio(2, 1));
        for (key, _) in f.terms() {
            assert!(key.decay.as_ref().unwrap().exponent.is_positive());
        }

        let spec_neg = LaguerreBasisSpec::new(3, ratio(1, 2), ratio(2, 1), 2, Branch::Negative).unwrap();
        let g = basis_function_unnormalized(&spec_neg, 3).unwrap();
        // Large-r behavior r^{-(N-2+2<k>+m)} on the negative branch.
        let want = -(spec_neg.weight_shift() + ratio(2, 1));
        assert_eq!(g.max_power().unwrap(), &want);
        for (key, _) in g.terms() {
            assert!(key.decay.as_ref().unwrap().exponent.is_negative());
        }
    }

    #[test]
    fn gram_matrix_is_identity_and_matches_generic_route() {
        let config = QuadratureConfig::default();
        for branch in [Branch::Positive, Branch::Negative] {
            let spec = LaguerreBasisSpec::new(2, ratio(1, 2), ratio(3, 2), 1, branch).unwrap();
            let gram = gram_matrix(&spec, 6, &config).unwrap();
            let d = spec.measure_exponent();
            #[allow(clippy::needless_range_loop)]
            for i in 0..6 {
                for j in 0..6 {
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (gram[i][j] - want).abs() <= 1e-12,
                        "({i},{j}): {}",
                        gram[i][j]
                    );
                    // Cross-route agreement with the generic pairing.
                    let f = basis_function(&spec, i as u32).unwrap();
                    let g = basis_function(&spec, j as u32).unwrap();
                    let generic = inner_product(&f, &g, &d, &config).unwrap();
                    assert!((generic.re - gram[i][j]).abs() <= 1e-9);
                }
            }
        }
    }

    #[test]
    fn gram_matrix_stays_accurate_at_large_parameters() {
        // λ = 10: the monomial-expanded route loses digits here; the
        // node-evaluation route must not.
        let spec = LaguerreBasisSpec::new(3, ratio(1, 1), ratio(1, 2), 2, Branch::Positive).unwrap();
        assert_eq!(spec.lambda(), ratio(14, 1)); // (3-2+2+4)/(1/2)
        let gram = gram_matrix(&spec, 8, &QuadratureConfig::default()).unwrap();
        #[allow(clippy::needless_range_loop)]
        for i in 0..8 {
            for j in 0..8 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (gram[i][j] - want).abs() <= 1e-11,
                    "({i},{j}): {}",
                    gram[i][j]
                );
            }
        }
    }

    #[test]
    fn compact_eigenvalues_are_exact_rationals() {
        let plus = LaguerreBasisSpec::new(1, ratio(1, 2), ratio(2, 1), 0, Branch::Positive).unwrap();
        // λ = 0 here, so eigenvalues are 2l + 1.
        assert_eq!(plus.lambda(), ratio(0, 1));
        assert_eq!(plus.compact_eigenvalue(3), ratio(7, 1));
        let minus = LaguerreBasisSpec::new(1, ratio(1, 2), ratio(2, 1), 0, Branch::Negative).unwrap();
        assert_eq!(minus.compact_eigenvalue(3), ratio(-7, 1));
    }
}
