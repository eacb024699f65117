//! Exact multivariate polynomial calculus: Dunkl operators, the Dunkl
//! Laplacian (two independent routes), the Euler operator, and k-harmonic
//! spaces.
//!
//! The exact backend works over rationals throughout; kernel computations
//! there are exact rank decisions. The float backend exists for root
//! systems with irrational coordinates, where kernels are computed at
//! float precision with singular values below 1e-9 treated as zero.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{reflection_matrix, Matrix, MultiplicityFunction, RootSystem};
use crate::scalar::{format_rational, parse_rational, Scalar};

/// Exponent multi-index with graded lexicographic ordering
/// (degree first, then lexicographic with the first variable largest).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `dimension` variables; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq)]
pub struct MultivariatePolynomial<S: Scalar> {
    dimension: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> MultivariatePolynomial<S> {
    pub fn zero(dimension: usize) -> Self {
        Self {
            dimension,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dimension: usize, value: S) -> Self {
        let mut p = Self::zero(dimension);
        p.add_term(Monomial(vec![0; dimension]), value);
        p
    }

    pub fn variable(dimension: usize, i: usize) -> Self {
        let mut exps = vec![0; dimension];
        exps[i] = 1;
        let mut p = Self::zero(dimension);
        p.add_term(Monomial(exps), S::one());
        p
    }

    pub fn monomial(dimension: usize, exps: Vec<u32>, coeff: S) -> Self {
        assert_eq!(exps.len(), dimension);
        let mut p = Self::zero(dimension);
        p.add_term(Monomial(exps), coeff);
        p
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
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
        self.terms
            .values()
            .map(|c| c.to_f64().abs())
            .fold(0.0, f64::max)
    }

    fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(existing) => {
                let sum = existing + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dimension, other.dimension);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.dimension);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &S) -> Self {
        let mut out = Self::zero(self.dimension);
        if factor.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone() * factor.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dimension, other.dimension);
        let mut out = Self::zero(self.dimension);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let exps: Vec<u32> = m1.0.iter().zip(m2.0.iter()).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(exps), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn partial_derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.dimension);
        for (m, c) in &self.terms {
            if m.0[i] == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            let mut factor = S::zero();
            for _ in 0..m.0[i] {
                factor = factor + S::one();
            }
            out.add_term(Monomial(exps), c.clone() * factor);
        }
        out
    }

    /// The Euler operator `Σ x_i ∂_i`; multiplies each monomial by its
    /// total degree.
    pub fn euler(&self) -> Self {
        let mut out = Self::zero(self.dimension);
        for (m, c) in &self.terms {
            let mut factor = S::zero();
            for _ in 0..m.degree() {
                factor = factor + S::one();
            }
            out.add_term(m.clone(), c.clone() * factor);
        }
        out
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Split into homogeneous components, keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Self::zero(self.dimension))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Substitute `x -> M x`.
    pub fn compose_linear(&self, m: &Matrix<S>) -> Self {
        let n = self.dimension;
        // Linear images of the variables.
        let images: Vec<Self> = (0..n)
            .map(|i| {
                let mut p = Self::zero(n);
                for (j, c) in m[i].iter().enumerate() {
                    let mut exps = vec![0; n];
                    exps[j] = 1;
                    p.add_term(Monomial(exps), c.clone());
                }
                p
            })
            .collect();
        // Power tables per variable.
        let max_exp: Vec<u32> = (0..n)
            .map(|i| self.terms.keys().map(|mono| mono.0[i]).max().unwrap_or(0))
            .collect();
        let mut powers: Vec<Vec<Self>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut table = vec![Self::constant(n, S::one())];
            for e in 1..=max_exp[i] {
                let next = table[(e - 1) as usize].mul(&images[i]);
                table.push(next);
            }
            powers.push(table);
        }
        let mut out = Self::zero(n);
        for (mono, c) in &self.terms {
            let mut term = Self::constant(n, c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&powers[i][e as usize]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Map the coefficients through a ring homomorphism.
    pub fn map_scalars<S2: Scalar>(&self, f: impl Fn(&S) -> S2) -> MultivariatePolynomial<S2> {
        let mut out = MultivariatePolynomial::zero(self.dimension);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_f64();
            for (i, &e) in m.0.iter().enumerate() {
                t *= x[i].powi(e as i32);
            }
            acc += t;
        }
        acc
    }

    /// Exact division by the linear form `Σ form_i x_i`. Errors with
    /// [`Error::InexactDivision`] when a remainder survives (beyond the
    /// closure tolerance on the float backend).
    pub fn divide_by_linear(&self, form: &[S]) -> Result<Self> {
        let pivot = form
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroVector)?;
        let pivot_coeff = form[pivot].clone();
        let mut remainder = self.clone();
        let mut quotient = Self::zero(self.dimension);
        loop {
            // Largest remaining term containing the pivot variable.
            let target = remainder
                .terms
                .iter()
                .rev()
                .find(|(m, _)| m.0[pivot] > 0)
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((mono, coeff)) = target else { break };
            let mut exps = mono.0.clone();
            exps[pivot] -= 1;
            let q_coeff = coeff / pivot_coeff.clone();
            let q_term = Self::monomial(self.dimension, exps, q_coeff);
            quotient = quotient.add(&q_term);
            // remainder -= q_term * form
            let mut form_poly = Self::zero(self.dimension);
            for (j, c) in form.iter().enumerate() {
                let mut e = vec![0; self.dimension];
                e[j] = 1;
                form_poly.add_term(Monomial(e), c.clone());
            }
            remainder = remainder.sub(&q_term.mul(&form_poly));
        }
        let inexact = if S::EXACT {
            !remainder.is_zero()
        } else {
            let tol = crate::roots::FLOAT_CLOSURE_TOL;
            let scale = self.max_coeff_abs().max(1.0);
            remainder
                .terms
                .values()
                .any(|c| c.to_f64().abs() > tol * scale)
        };
        if inexact {
            return Err(Error::InexactDivision {
                remainder: format!("{remainder:?}"),
            });
        }
        Ok(quotient)
    }
}

/// The first-order Dunkl operator in coordinate direction `i`:
/// `T_i p = ∂_i p + Σ_{α>0} k_α α_i (p - p∘r_α) / <α, x>`.
/// The difference is always divisible by the pairing; a surviving
/// remainder signals a root-system or orbit inconsistency.
pub fn dunkl_operator<S: Scalar>(
    rs: &RootSystem<S>,
    k: &MultiplicityFunction,
    direction: usize,
    p: &MultivariatePolynomial<S>,
) -> Result<MultivariatePolynomial<S>> {
    let mut out = p.partial_derivative(direction);
    for &idx in rs.positive_indices() {
        let k_alpha = k.value(idx);
        if k_alpha.is_zero() {
            continue;
        }
        let alpha = &rs.roots()[idx];
        let reflected = p.compose_linear(&reflection_matrix(alpha)?);
        let difference = p.sub(&reflected);
        if difference.is_zero() {
            continue;
        }
        let quotient = difference.divide_by_linear(alpha)?;
        let factor = alpha[direction].clone() * S::from_rational(k_alpha);
        out = out.add(&quotient.scale(&factor));
    }
    Ok(out)
}

/// The Dunkl Laplacian computed as `Σ_i T_i²`. This is the constructive
/// route: every intermediate stays polynomial.
pub fn dunkl_laplacian<S: Scalar>(
    rs: &RootSystem<S>,
    k: &MultiplicityFunction,
    p: &MultivariatePolynomial<S>,
) -> Result<MultivariatePolynomial<S>> {
    let mut out = MultivariatePolynomial::zero(p.dimension());
    for i in 0..p.dimension() {
        let first = dunkl_operator(rs, k, i, p)?;
        let second = dunkl_operator(rs, k, i, &first)?;
        out = out.add(&second);
    }
    Ok(out)
}

/// The Dunkl Laplacian from its difference-quotient form:
/// `Δp + Σ_{α>0} k_α [2 <∇p, α> <α,x> - |α|² (p - p∘r_α)] / <α,x>²`,
/// normalized by two exact divisions per root. Used as an independent
/// cross-check of [`dunkl_laplacian`].
pub fn dunkl_laplacian_difference_quotient<S: Scalar>(
    rs: &RootSystem<S>,
    k: &MultiplicityFunction,
    p: &MultivariatePolynomial<S>,
) -> Result<MultivariatePolynomial<S>> {
    let n = p.dimension();
    let mut out = MultivariatePolynomial::zero(n);
    for i in 0..n {
        out = out.add(&p.partial_derivative(i).partial_derivative(i));
    }
    for &idx in rs.positive_indices() {
        let k_alpha = k.value(idx);
        if k_alpha.is_zero() {
            continue;
        }
        let alpha = &rs.roots()[idx];
        let norm_sq = crate::roots::dot(alpha, alpha);
        // <∇p, α>
        let mut grad_pairing = MultivariatePolynomial::zero(n);
        for (j, aj) in alpha.iter().enumerate() {
            grad_pairing = grad_pairing.add(&p.partial_derivative(j).scale(aj));
        }
        // pairing polynomial <α, x>
        let mut pairing = MultivariatePolynomial::zero(n);
        for (j, aj) in alpha.iter().enumerate() {
            let mut e = vec![0; n];
            e[j] = 1;
            pairing = pairing.add(&MultivariatePolynomial::monomial(n, e, aj.clone()));
        }
        let reflected = p.compose_linear(&reflection_matrix(alpha)?);
        let two = S::one() + S::one();
        let numerator = grad_pairing
            .mul(&pairing)
            .scale(&two)
            .sub(&p.sub(&reflected).scale(&norm_sq));
        let quotient = numerator
            .divide_by_linear(alpha)?
            .divide_by_linear(alpha)?;
        out = out.add(&quotient.scale(&S::from_rational(k_alpha)));
    }
    Ok(out)
}

/// A basis of the k-harmonic polynomials of one degree.
#[derive(Debug, Clone)]
pub struct HarmonicBasis<S: Scalar> {
    pub degree: u32,
    pub basis: Vec<MultivariatePolynomial<S>>,
}

impl<S: Scalar> HarmonicBasis<S> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Monomials of total degree `m` in `n` variables, grlex-descending.
pub fn homogeneous_monomials(n: usize, m: u32) -> Vec<Monomial> {
    fn rec(n: usize, m: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if n == 1 {
            let mut full = prefix.clone();
            full.push(m);
            out.push(Monomial(full));
            return;
        }
        for e in (0..=m).rev() {
            prefix.push(e);
            rec(n - 1, m - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, &mut Vec::new(), &mut out);
    out
}

/// Exact reduced row echelon form; returns the pivot columns.
#[allow(clippy::needless_range_loop)] // simultaneous two-row updates
fn rref(matrix: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = matrix.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = matrix[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot_row) = (row..rows).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(row, pivot_row);
        let inv = matrix[row][col].clone();
        for c in col..cols {
            matrix[row][c] = &matrix[row][c] / &inv;
        }
        for r in 0..rows {
            if r != row && !matrix[r][col].is_zero() {
                let factor = matrix[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &matrix[row][c];
                    matrix[r][c] = &matrix[r][c] - delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    pivots
}

/// Exact kernel of the Dunkl Laplacian on homogeneous degree-`m`
/// polynomials, returned in reduced echelon form over the graded monomial
/// order.
pub fn k_harmonic_basis(
    rs: &RootSystem<BigRational>,
    k: &MultiplicityFunction,
    m: u32,
) -> Result<HarmonicBasis<BigRational>> {
    let n = rs.dimension();
    let domain = homogeneous_monomials(n, m);
    if m < 2 {
        // The Laplacian lands in degree m - 2 < 0: everything is harmonic.
        let basis = domain
            .iter()
            .map(|mono| {
                MultivariatePolynomial::monomial(n, mono.0.clone(), BigRational::from_integer(1.into()))
            })
            .collect();
        return Ok(HarmonicBasis { degree: m, basis });
    }
    let target = homogeneous_monomials(n, m - 2);
    let target_index: BTreeMap<&Monomial, usize> =
        target.iter().enumerate().map(|(i, mono)| (mono, i)).collect();

    // Columns of the operator matrix.
    let mut columns: Vec<Vec<BigRational>> = Vec::with_capacity(domain.len());
    for mono in &domain {
        let p = MultivariatePolynomial::monomial(n, mono.0.clone(), BigRational::from_integer(1.into()));
        let image = dunkl_laplacian(rs, k, &p)?;
        let mut col = vec![BigRational::zero(); target.len()];
        for (t, c) in image.terms() {
            col[target_index[t]] = c.clone();
        }
        columns.push(col);
    }
    // Row-major matrix: rows are target monomials.
    let mut matrix: Vec<Vec<BigRational>> = (0..target.len())
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    let pivots = rref(&mut matrix);

    // Kernel vectors: one per free column.
    let mut kernel_rows: Vec<Vec<BigRational>> = Vec::new();
    for free in 0..domain.len() {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); domain.len()];
        v[free] = BigRational::from_integer(1.into());
        for (prow, &pcol) in pivots.iter().enumerate() {
            v[pcol] = -matrix[prow][free].clone();
        }
        kernel_rows.push(v);
    }
    rref(&mut kernel_rows);

    let basis = kernel_rows
        .into_iter()
        .filter(|v| v.iter().any(|c| !c.is_zero()))
        .map(|v| {
            let mut p = MultivariatePolynomial::zero(n);
            for (mono, c) in domain.iter().zip(v) {
                p.add_term(mono.clone(), c);
            }
            p
        })
        .collect();
    Ok(HarmonicBasis { degree: m, basis })
}

/// Float-precision kernel for float-backed root systems. Based on the
/// spectral decomposition of the normal matrix; singular values below
/// 1e-9 are treated as zero. Not exact.
pub fn k_harmonic_basis_float(
    rs: &RootSystem<f64>,
    k: &MultiplicityFunction,
    m: u32,
) -> Result<HarmonicBasis<f64>> {
    let n = rs.dimension();
    let domain = homogeneous_monomials(n, m);
    if m < 2 {
        let basis = domain
            .iter()
            .map(|mono| MultivariatePolynomial::monomial(n, mono.0.clone(), 1.0))
            .collect();
        return Ok(HarmonicBasis { degree: m, basis });
    }
    let target = homogeneous_monomials(n, m - 2);
    let target_index: BTreeMap<&Monomial, usize> =
        target.iter().enumerate().map(|(i, mono)| (mono, i)).collect();
    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(domain.len());
    for mono in &domain {
        let p = MultivariatePolynomial::monomial(n, mono.0.clone(), 1.0);
        let image = dunkl_laplacian(rs, k, &p)?;
        let mut col = vec![0.0; target.len()];
        for (t, c) in image.terms() {
            col[target_index[t]] = *c;
        }
        columns.push(col);
    }
    let dim = domain.len();
    // Normal matrix AᵀA.
    let mut normal = vec![vec![0.0; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            normal[i][j] = columns[i]
                .iter()
                .zip(columns[j].iter())
                .map(|(a, b)| a * b)
                .sum();
        }
    }
    let (eigenvalues, eigenvectors) = jacobi_eigen(&mut normal);
    let mut basis = Vec::new();
    for (idx, &ev) in eigenvalues.iter().enumerate() {
        if ev.max(0.0).sqrt() < 1e-9 {
            let mut v: Vec<f64> = (0..dim).map(|r| eigenvectors[r][idx]).collect();
            // Deterministic sign: first significant entry positive.
            if let Some(first) = v.iter().find(|c| c.abs() > 1e-9) {
                if *first < 0.0 {
                    v.iter_mut().for_each(|c| *c = -*c);
                }
            }
            let mut p = MultivariatePolynomial::zero(n);
            for (mono, c) in domain.iter().zip(v) {
                if c.abs() > 1e-12 {
                    p.add_term(mono.clone(), c);
                }
            }
            basis.push(p);
        }
    }
    Ok(HarmonicBasis { degree: m, basis })
}

/// Cyclic Jacobi eigenvalue iteration for a symmetric matrix. Returns
/// eigenvalues (ascending) and the matching eigenvector columns.
#[allow(clippy::needless_range_loop)] // paired row/column rotations
fn jacobi_eigen(a: &mut [Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a[i][j] * a[i][j];
            }
        }
        if off.sqrt() < 1e-14 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].partial_cmp(&a[j][j]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i][i]).collect();
    let eigenvectors: Vec<Vec<f64>> = (0..n)
        .map(|r| order.iter().map(|&cidx| v[r][cidx]).collect())
        .collect();
    (eigenvalues, eigenvectors)
}

// ---------------------------------------------------------------------------
// JSON document form
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolynomialTermDocument {
    pub exps: Vec<u32>,
    pub coef: String,
}

/// Serialized polynomial: `{"dim": N, "terms": [{"exps": [..], "coef": "p/q"}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolynomialDocument {
    pub dim: usize,
    pub terms: Vec<PolynomialTermDocument>,
}

impl MultivariatePolynomial<BigRational> {
    pub fn to_document(&self) -> PolynomialDocument {
        PolynomialDocument {
            dim: self.dimension,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| PolynomialTermDocument {
                    exps: m.0.clone(),
                    coef: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn from_document(doc: &PolynomialDocument) -> Result<Self> {
        let mut p = Self::zero(doc.dim);
        for term in &doc.terms {
            if term.exps.len() != doc.dim {
                return Err(Error::DimensionMismatch {
                    expected: doc.dim,
                    found: term.exps.len(),
                });
            }
            p.add_term(Monomial(term.exps.clone()), parse_rational(&term.coef)?);
        }
        Ok(p)
    }
}
