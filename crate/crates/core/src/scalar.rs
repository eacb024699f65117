//! Scalar backends for the geometric and symbolic layers.
//!
//! Root systems and polynomials are generic over [`Scalar`], with two
//! backends: exact rationals ([`BigRational`]) for the exact calculus, and
//! `f64` for root systems whose coordinates are irrational (odd dihedral
//! systems). Radial symbolic functions are generic over [`CoeffField`],
//! again with an exact backend ([`GaussianRational`]) and a numeric one
//! ([`Complex64`]).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Parse a rational from the serialized forms `"p/q"`, `"p"`, or an integer
/// string with optional sign.
pub fn parse_rational(input: &str) -> Result<BigRational> {
    let s = input.trim();
    let err = || Error::ParseRational {
        input: input.to_string(),
    };
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| err())?;
        Ok(BigRational::from_integer(n))
    }
}

/// Render a rational in the `"p/q"` form used by the JSON documents
/// (plain integer when the denominator is one).
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Shorthand for a small rational constant.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Convert to `f64`, saturating on overflow.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
}

/// Coefficient field for the geometric layer (vectors, matrices,
/// polynomials).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + 'static
{
    /// Whether arithmetic in this backend is exact.
    const EXACT: bool;

    fn from_rational(q: &BigRational) -> Self;
    fn to_f64(&self) -> f64;

    /// Equality up to `tol` for the float backend; exact equality otherwise.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;

    fn approx_zero(&self, tol: f64) -> bool {
        self.approx_eq(&Self::zero(), tol)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_rational(q: &BigRational) -> Self {
        rational_to_f64(q)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let scale = 1.0_f64.max(self.abs()).max(other.abs());
        (self - other).abs() <= tol * scale
    }
}

/// Exact complex rational `re + im·i`.
///
/// This is the coefficient field of the exact radial calculus: all operator
/// coefficients appearing there are rational multiples of `1` and `i`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn mul_rational(&self, q: &BigRational) -> Self {
        Self {
            re: &self.re * q,
            im: &self.im * q,
        }
    }

    /// Exact inverse; panics on zero.
    pub fn inv(&self) -> Self {
        let norm = &self.re * &self.re + &self.im * &self.im;
        assert!(!norm.is_zero(), "inverse of zero");
        Self {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::add(&self, &rhs)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::sub(&self, &rhs)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        GaussianRational::mul(&self, &rhs)
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        GaussianRational::mul(&self, &rhs.inv())
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::neg(&self)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }

    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::one()
    }
}

/// Complex rationals double as an exact polynomial scalar; the float
/// shadow [`Scalar::to_f64`] is the modulus.
impl Scalar for GaussianRational {
    const EXACT: bool = true;

    fn from_rational(q: &BigRational) -> Self {
        GaussianRational::from_rational(q.clone())
    }

    fn to_f64(&self) -> f64 {
        self.to_complex().norm()
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", format_rational(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}i", format_rational(&self.im))
        } else if self.im.is_negative() {
            write!(
                f,
                "{}{}i",
                format_rational(&self.re),
                format_rational(&self.im)
            )
        } else {
            write!(
                f,
                "{}+{}i",
                format_rational(&self.re),
                format_rational(&self.im)
            )
        }
    }
}

/// Coefficient field for the radial symbolic class.
pub trait CoeffField: Clone + PartialEq + fmt::Debug + 'static {
    /// Whether arithmetic in this backend is exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn i() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn mul_rational(&self, q: &BigRational) -> Self;
    fn from_gaussian(g: &GaussianRational) -> Self;
    fn is_zero(&self) -> bool;
    fn to_complex(&self) -> Complex64;

    /// Modulus, used for defect reporting.
    fn abs(&self) -> f64 {
        self.to_complex().norm()
    }

    fn from_rational(q: &BigRational) -> Self {
        Self::from_gaussian(&GaussianRational::from_rational(q.clone()))
    }

    fn from_i64(n: i64) -> Self {
        Self::from_gaussian(&GaussianRational::from_i64(n))
    }
}

impl CoeffField for GaussianRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        GaussianRational::zero()
    }

    fn one() -> Self {
        GaussianRational::one()
    }

    fn i() -> Self {
        GaussianRational::i()
    }

    fn add(&self, other: &Self) -> Self {
        GaussianRational::add(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        GaussianRational::sub(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        GaussianRational::mul(self, other)
    }

    fn neg(&self) -> Self {
        GaussianRational::neg(self)
    }

    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }

    fn mul_rational(&self, q: &BigRational) -> Self {
        GaussianRational::mul_rational(self, q)
    }

    fn from_gaussian(g: &GaussianRational) -> Self {
        g.clone()
    }

    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }

    fn to_complex(&self) -> Complex64 {
        GaussianRational::to_complex(self)
    }
}

impl CoeffField for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn i() -> Self {
        Complex64::new(0.0, 1.0)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn mul_rational(&self, q: &BigRational) -> Self {
        self * rational_to_f64(q)
    }

    fn from_gaussian(g: &GaussianRational) -> Self {
        g.to_complex()
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }
}
