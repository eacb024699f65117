//! Functions on `R^N \ {0}` in polar-decomposed form: finite sums
//! `Σ p_j(x) · g_j(|x|)` with exact-rational polynomial factors and exact
//! radial symbolic factors.
//!
//! The class is closed under the Dunkl operators (hence the Dunkl
//! Laplacian), the Euler operator, multiplication by powers of the norm,
//! and the transforms `κ_{α,β}`:
//!
//! `T_i (p · g) = (T_i p) · g + (x_i p) · (r^{-2} θ g)`.
//!
//! Equality of two such sums is decided exactly through a normal form.
//! Within a group sharing one exponential factor, collect homogeneous
//! polynomial components against the total ray exponent `γ + deg`: for a
//! fixed exponent the even-degree and odd-degree parts must vanish on the
//! sphere separately (compare antipodal points), and a same-parity sum
//! vanishes on the sphere iff lifting every component by powers of
//! `|x|² = Σ x_i²` to the top degree gives the zero polynomial (a
//! homogeneous polynomial vanishing on the sphere vanishes identically).

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kappa::KappaParams;
use crate::poly::{dunkl_laplacian, dunkl_operator, MultivariatePolynomial};
use crate::radial::{Decay, ExpMonomial};
use crate::roots::{Matrix, MultiplicityFunction, RootSystem};
use crate::scalar::{ratio, GaussianRational};
use crate::sl2::Sl2Element;

type Poly = MultivariatePolynomial<GaussianRational>;
type Radial = ExpMonomial<GaussianRational>;

/// A finite sum of polynomial-times-radial products.
#[derive(Debug, Clone)]
pub struct PolarFunction {
    dimension: usize,
    terms: Vec<(Poly, Radial)>,
}

impl PolarFunction {
    pub fn zero(dimension: usize) -> Self {
        Self {
            dimension,
            terms: Vec::new(),
        }
    }

    /// `F(x) = p(x) · g(|x|)`.
    pub fn from_product(p: Poly, g: Radial) -> Self {
        let dimension = p.dimension();
        let mut out = Self::zero(dimension);
        if !p.is_zero() && !g.is_zero() {
            out.terms.push((p, g));
        }
        out
    }

    pub fn from_radial(dimension: usize, g: Radial) -> Self {
        Self::from_product(
            Poly::constant(dimension, GaussianRational::one()),
            g,
        )
    }

    /// The spherical pairing `p ⊗ f`, i.e. `(rω) -> p(ω) f(r)` for `p`
    /// homogeneous of degree `m`: stored as `p(x) · (r^{-m} f(r))`.
    pub fn spherical_product(p: Poly, f: Radial) -> Result<Self> {
        if !p.is_homogeneous() {
            return Err(Error::InputNotPolarForm {
                detail: "spherical factor must be homogeneous".into(),
            });
        }
        let m = p.degree().unwrap_or(0);
        let g = f.mul_power(&-BigRational::from_integer(i64::from(m).into()));
        Ok(Self::from_product(p, g))
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn terms(&self) -> &[(Poly, Radial)] {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dimension, other.dimension);
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .map(|(p, g)| (p.clone(), g.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .map(|(p, g)| (p.clone(), g.scale(c)))
                .collect(),
        }
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        self.scale(&GaussianRational::from_rational(q.clone()))
    }

    /// Multiplication by `|x|^delta`, absorbed into the radial factors.
    pub fn mul_norm_power(&self, delta: &BigRational) -> Self {
        Self {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .map(|(p, g)| (p.clone(), g.mul_power(delta)))
                .collect(),
        }
    }

    /// The Euler operator `E = Σ x_i ∂_i`:
    /// `E(p · g) = (Ep) · g + p · θg`.
    pub fn euler_apply(&self) -> Self {
        let mut out = Self::zero(self.dimension);
        for (p, g) in &self.terms {
            out.terms.push((p.euler(), g.clone()));
            out.terms.push((p.clone(), g.theta()));
        }
        out.prune()
    }

    /// One Dunkl operator on the mixed class.
    pub fn dunkl_apply(
        &self,
        rs: &RootSystem<GaussianRational>,
        k: &MultiplicityFunction,
        direction: usize,
    ) -> Result<Self> {
        let mut out = Self::zero(self.dimension);
        let minus_two = ratio(-2, 1);
        for (p, g) in &self.terms {
            out.terms.push((dunkl_operator(rs, k, direction, p)?, g.clone()));
            let x_i = Poly::variable(self.dimension, direction);
            out.terms
                .push((x_i.mul(p), g.theta().mul_power(&minus_two)));
        }
        Ok(out.prune())
    }

    /// The Dunkl Laplacian as `Σ_i T_i²` on the mixed class, valid for
    /// arbitrary polynomial factors. This is the route independent of the
    /// radial-part formulas.
    pub fn dunkl_laplacian_apply(
        &self,
        rs: &RootSystem<GaussianRational>,
        k: &MultiplicityFunction,
    ) -> Result<Self> {
        let mut out = Self::zero(self.dimension);
        for i in 0..self.dimension {
            let once = self.dunkl_apply(rs, k, i)?;
            let twice = once.dunkl_apply(rs, k, i)?;
            out = out.add(&twice);
        }
        Ok(out.prune())
    }

    /// `H = (N - 2 + 2<k> + a)/a + (2/a) E`.
    pub fn operator_h(
        &self,
        k: &MultiplicityFunction,
        a: &BigRational,
    ) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroDeformation);
        }
        let shift = BigRational::from_integer((self.dimension as i64 - 2).into())
            + ratio(2, 1) * k.index();
        let constant = (shift + a) / a;
        let two_over_a = ratio(2, 1) / a;
        Ok(self
            .scale_rational(&constant)
            .add(&self.euler_apply().scale_rational(&two_over_a)))
    }

    /// `E⁺ = (i/a) |x|^a`.
    pub fn operator_e_plus(&self, a: &BigRational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroDeformation);
        }
        let i_over_a = GaussianRational::i().mul_rational(&a.recip());
        Ok(self.mul_norm_power(a).scale(&i_over_a))
    }

    /// `E⁻ = (i/a) |x|^{2-a} Δ_k`.
    pub fn operator_e_minus(
        &self,
        rs: &RootSystem<GaussianRational>,
        k: &MultiplicityFunction,
        a: &BigRational,
    ) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroDeformation);
        }
        let i_over_a = GaussianRational::i().mul_rational(&a.recip());
        let two_minus_a = ratio(2, 1) - a;
        Ok(self
            .dunkl_laplacian_apply(rs, k)?
            .mul_norm_power(&two_minus_a)
            .scale(&i_over_a))
    }

    /// Apply the full representation of an sl₂ element.
    pub fn sl2_apply(
        &self,
        rs: &RootSystem<GaussianRational>,
        k: &MultiplicityFunction,
        a: &BigRational,
        x: &Sl2Element,
    ) -> Result<Self> {
        let mut out = Self::zero(self.dimension);
        if !x.h.is_zero() {
            out = out.add(&self.operator_h(k, a)?.scale(&x.h));
        }
        if !x.e_plus.is_zero() {
            out = out.add(&self.operator_e_plus(a)?.scale(&x.e_plus));
        }
        if !x.e_minus.is_zero() {
            out = out.add(&self.operator_e_minus(rs, k, a)?.scale(&x.e_minus));
        }
        Ok(out)
    }

    /// `κ_{α,β} F(x) = |x|^β F(|x|^{α-1} x)`. The dilation of a
    /// homogeneous degree-`d` factor is absorbed as
    /// `p(|x|^{α-1} x) = |x|^{d(α-1)} p(x)`, so each component maps to
    /// `p_d · κ_{α, β + d(α-1)} g`.
    pub fn kappa_full(&self, params: &KappaParams) -> Self {
        let mut out = Self::zero(self.dimension);
        let alpha_minus_one = &params.alpha - BigRational::from_integer(1.into());
        for (p, g) in &self.terms {
            for (d, component) in p.homogeneous_components() {
                let beta = &params.beta + BigRational::from_integer(i64::from(d).into()) * &alpha_minus_one;
                out.terms
                    .push((component, g.kappa(&params.alpha, &beta)));
            }
        }
        out.prune()
    }

    /// Precompose with an orthogonal matrix: `F ∘ h`.
    pub fn compose_orthogonal(&self, h: &Matrix<GaussianRational>) -> Self {
        Self {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .map(|(p, g)| (p.compose_linear(h), g.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &[f64]) -> Complex64 {
        let r = x.iter().map(|c| c * c).sum::<f64>().sqrt();
        let mut acc = Complex64::new(0.0, 0.0);
        for (p, g) in &self.terms {
            acc += eval_poly_complex(p, x) * g.eval(r);
        }
        acc
    }

    fn prune(mut self) -> Self {
        self.terms.retain(|(p, g)| !p.is_zero() && !g.is_zero());
        self
    }

    /// Canonical bucket decomposition; empty iff the function is
    /// identically zero on `R^N \ {0}`.
    pub fn normal_form(&self) -> BTreeMap<NormalFormKey, Poly> {
        let norm_sq = {
            let mut p = Poly::zero(self.dimension);
            for i in 0..self.dimension {
                let v = Poly::variable(self.dimension, i);
                p = p.add(&v.mul(&v));
            }
            p
        };
        // Bucket -> list of (degree, polynomial component).
        let mut buckets: BTreeMap<NormalFormKey, Vec<(u32, Poly)>> = BTreeMap::new();
        for (p, g) in &self.terms {
            for (d, component) in p.homogeneous_components() {
                for (key, coeff) in g.terms() {
                    let exponent = &key.power + BigRational::from_integer(i64::from(d).into());
                    let bucket = NormalFormKey {
                        decay: key.decay.clone(),
                        ray_exponent: exponent,
                        parity: (d % 2) as u8,
                    };
                    let scaled = component.scale(coeff);
                    buckets.entry(bucket).or_default().push((d, scaled));
                }
            }
        }
        let mut out = BTreeMap::new();
        for (bucket, pieces) in buckets {
            let top = pieces.iter().map(|(d, _)| *d).max().unwrap();
            let mut total = Poly::zero(self.dimension);
            for (d, piece) in pieces {
                let mut lifted = piece;
                let mut deficit = (top - d) / 2;
                while deficit > 0 {
                    lifted = lifted.mul(&norm_sq);
                    deficit -= 1;
                }
                total = total.add(&lifted);
            }
            if !total.is_zero() {
                out.insert(bucket, total);
            }
        }
        out
    }

    /// Exact test for the zero function.
    pub fn is_identically_zero(&self) -> bool {
        self.normal_form().is_empty()
    }

    /// Largest coefficient modulus surviving in the normal form; zero for
    /// the zero function.
    pub fn max_defect(&self) -> f64 {
        self.normal_form()
            .values()
            .flat_map(|p| {
                p.terms()
                    .map(|(_, c)| c.to_complex().norm())
                    .collect::<Vec<_>>()
            })
            .fold(0.0, f64::max)
    }
}

/// Bucket signature of the normal form: exponential factor, total ray
/// exponent (`γ + deg p`), and the parity of the polynomial degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NormalFormKey {
    pub decay: Option<Decay>,
    pub ray_exponent: BigRational,
    pub parity: u8,
}

fn eval_poly_complex(p: &Poly, x: &[f64]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (mono, c) in p.terms() {
        let mut v = 1.0;
        for (i, &e) in mono.0.iter().enumerate() {
            v *= x[i].powi(e as i32);
        }
        acc += c.to_complex() * v;
    }
    acc
}

/// Check that `p` is homogeneous of degree `m` and `Δ_k p = 0` (exact).
pub fn check_k_harmonic(
    rs: &RootSystem<GaussianRational>,
    k: &MultiplicityFunction,
    p: &Poly,
    m: u32,
) -> Result<()> {
    if !p.is_homogeneous() || p.degree().unwrap_or(0) != m {
        return Err(Error::NotKHarmonic {
            detail: format!("factor is not homogeneous of degree {m}"),
        });
    }
    let image = dunkl_laplacian(rs, k, p)?;
    if !image.is_zero() {
        return Err(Error::NotKHarmonic {
            detail: "Dunkl Laplacian does not annihilate the factor".into(),
        });
    }
    Ok(())
}

/// Radial factorization route: for `p` k-harmonic of degree `m`, apply the
/// sl₂ element through the radial operator family on the profile `f` of
/// `p ⊗ f` and return the result in the same spherical form.
pub fn sl2_apply_factorized(
    rs: &RootSystem<GaussianRational>,
    k: &MultiplicityFunction,
    a: &BigRational,
    x: &Sl2Element,
    p: &Poly,
    f: &Radial,
) -> Result<PolarFunction> {
    let m = p.degree().unwrap_or(0);
    check_k_harmonic(rs, k, p, m)?;
    let spec = crate::sl2::RadialOperatorSpec::new(
        rs.dimension() as u32,
        k.index().clone(),
        a.clone(),
        m,
    )?;
    let image = crate::sl2::radial_apply(&spec, x, f);
    PolarFunction::spherical_product(p.clone(), image)
}
