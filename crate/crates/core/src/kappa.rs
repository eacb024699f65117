//! The substitution-with-power-twist transforms `κ_{α,β} f(r) = r^β f(r^α)`.
//!
//! These form an action of the one-dimensional affine group:
//! `κ_{α,β} ∘ κ_{α',β'} = κ_{αα', β + αβ'}`. The member
//! `κ_{-1, -(N-2+2<k>)}` is an involution that exchanges the two branch
//! measures and, for zero multiplicity, reduces to the Kelvin transform.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::radial::{inner_product, ExpMonomial, QuadratureConfig};
use crate::scalar::{format_rational, CoeffField};

/// Parameters `(α, β)` with `α ≠ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct KappaParams {
    pub alpha: BigRational,
    pub beta: BigRational,
}

impl KappaParams {
    pub fn new(alpha: BigRational, beta: BigRational) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidParameter {
                detail: "kappa parameter alpha must be nonzero".into(),
            });
        }
        Ok(Self { alpha, beta })
    }

    pub fn identity() -> Self {
        Self {
            alpha: BigRational::one(),
            beta: BigRational::zero(),
        }
    }

    /// The branch-exchanging involution `κ_{-1, -(N-2+2<k>)}`.
    pub fn intertwiner(dimension: u32, index: &BigRational) -> Self {
        let shift = BigRational::from_integer((i64::from(dimension) - 2).into())
            + BigRational::from_integer(2.into()) * index;
        Self {
            alpha: -BigRational::one(),
            beta: -shift,
        }
    }

    /// Group law `(α,β)∘(α',β') = (αα', β + αβ')`, matching operator
    /// composition `κ_{α,β} ∘ κ_{α',β'}`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            alpha: &self.alpha * &other.alpha,
            beta: &self.beta + &self.alpha * &other.beta,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_one() && self.beta.is_zero()
    }

    /// Exponent of the target measure: `κ_{α,β}` maps `L²(r^d dr)`
    /// unitarily onto `L²(|α| r^{αd + α - 2β - 1} dr)`.
    pub fn target_measure_exponent(&self, d: &BigRational) -> BigRational {
        &self.alpha * d + &self.alpha
            - BigRational::from_integer(2.into()) * &self.beta
            - BigRational::one()
    }

    pub fn describe(&self) -> String {
        format!(
            "kappa({}, {})",
            format_rational(&self.alpha),
            format_rational(&self.beta)
        )
    }
}

/// Apply `κ_{α,β}` to a radial symbolic function (exact on the class).
pub fn kappa_radial<C: CoeffField>(params: &KappaParams, f: &ExpMonomial<C>) -> ExpMonomial<C> {
    f.kappa(&params.alpha, &params.beta)
}

/// Report of a unitarity comparison: squared norms on both sides.
#[derive(Debug, Clone)]
pub struct UnitarityReport {
    pub source_norm_sq: f64,
    pub target_norm_sq: f64,
}

impl UnitarityReport {
    pub fn relative_defect(&self) -> f64 {
        (self.source_norm_sq - self.target_norm_sq).abs()
            / self.source_norm_sq.abs().max(1e-300)
    }
}

/// Compare `‖f‖` in `L²(r^d dr)` with `‖κf‖` in
/// `L²(|α| r^{αd + α - 2β - 1} dr)`.
pub fn kappa_unitarity_check<C: CoeffField>(
    params: &KappaParams,
    f: &ExpMonomial<C>,
    d: &BigRational,
    config: &QuadratureConfig,
) -> Result<UnitarityReport> {
    let source = inner_product(f, f, d, config)?.re;
    let image = kappa_radial(params, f);
    let target_exponent = params.target_measure_exponent(d);
    let target = inner_product(&image, &image, &target_exponent, config)?.re
        * crate::scalar::rational_to_f64(&self_abs(&params.alpha));
    Ok(UnitarityReport {
        source_norm_sq: source,
        target_norm_sq: target,
    })
}

fn self_abs(q: &BigRational) -> BigRational {
    if q.is_negative() {
        -q.clone()
    } else {
        q.clone()
    }
}
