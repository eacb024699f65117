//! Root systems, reflections, Coxeter group generation, multiplicity
//! functions, and the associated weight functions.
//!
//! Two scalar backends are supported. Rational coordinates give the exact
//! path used by the polynomial calculus; `f64` coordinates cover dihedral
//! systems with irrational coordinates, with reflection closure validated
//! to a tolerance (1e-9 by default).

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, rational_to_f64, Scalar};

/// Tolerance used when validating float-backed root systems.
pub const FLOAT_CLOSURE_TOL: f64 = 1e-9;

/// Default bound on generated group size.
pub const DEFAULT_GROUP_BOUND: usize = 10_000;

pub type Matrix<S> = Vec<Vec<S>>;

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    let mut acc = S::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        acc = acc + x.clone() * y.clone();
    }
    acc
}

pub fn dot_f64<S: Scalar>(a: &[S], x: &[f64]) -> f64 {
    a.iter().zip(x.iter()).map(|(c, v)| c.to_f64() * v).sum()
}

fn is_zero_vec<S: Scalar>(v: &[S], tol: f64) -> bool {
    v.iter().all(|c| c.approx_zero(tol))
}

fn vec_approx_eq<S: Scalar>(a: &[S], b: &[S], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b.iter()).all(|(x, y)| x.approx_eq(y, tol))
}

fn fmt_vec<S: Scalar>(v: &[S]) -> String {
    let coords: Vec<String> = v.iter().map(|c| format!("{c}")).collect();
    format!("({})", coords.join(", "))
}

/// Orthogonal reflection of `x` in the hyperplane normal to `alpha`:
/// `x - (2<alpha,x>/|alpha|^2) alpha`. Involutive, fixes the hyperplane,
/// and invariant under rescaling of `alpha`.
pub fn reflect<S: Scalar>(alpha: &[S], x: &[S]) -> Result<Vec<S>> {
    if is_zero_vec(alpha, 0.0) {
        return Err(Error::ZeroRoot);
    }
    let norm_sq = dot(alpha, alpha);
    let factor = (S::one() + S::one()) * dot(alpha, x) / norm_sq;
    Ok(x.iter()
        .zip(alpha.iter())
        .map(|(xi, ai)| xi.clone() - factor.clone() * ai.clone())
        .collect())
}

/// Matrix of the reflection in `alpha` acting on column vectors.
pub fn reflection_matrix<S: Scalar>(alpha: &[S]) -> Result<Matrix<S>> {
    let n = alpha.len();
    let mut mat = Vec::with_capacity(n);
    for i in 0..n {
        let mut basis = vec![S::zero(); n];
        basis[i] = S::one();
        mat.push(reflect(alpha, &basis)?);
    }
    // Columns were built; transpose to row-major action M[i][j] = e_i
    // component of image of e_j.
    Ok(transpose(&mat))
}

pub fn transpose<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    let rows = m.len();
    let cols = m[0].len();
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

pub fn identity_matrix<S: Scalar>(n: usize) -> Matrix<S> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { S::one() } else { S::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let n = a.len();
    let p = b[0].len();
    let mut out = vec![vec![S::zero(); p]; n];
    for i in 0..n {
        for (k, b_row) in b.iter().enumerate() {
            let aik = a[i][k].clone();
            if aik.is_zero() {
                continue;
            }
            for j in 0..p {
                out[i][j] = out[i][j].clone() + aik.clone() * b_row[j].clone();
            }
        }
    }
    out
}

pub fn mat_vec<S: Scalar>(m: &Matrix<S>, v: &[S]) -> Vec<S> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_approx_eq<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>, tol: f64) -> bool {
    a.iter().zip(b.iter()).all(|(r, s)| vec_approx_eq(r, s, tol))
}

pub fn is_orthogonal<S: Scalar>(m: &Matrix<S>, tol: f64) -> bool {
    let mt = transpose(m);
    mat_approx_eq(&mat_mul(&mt, m), &identity_matrix(m.len()), tol)
}

/// A reduced root system: a finite set of nonzero vectors closed under its
/// own reflections, meeting each line in exactly one `±` pair. No
/// crystallographic condition is imposed, and the roots need not span.
#[derive(Debug, Clone)]
pub struct RootSystem<S: Scalar> {
    dimension: usize,
    roots: Vec<Vec<S>>,
    positive: Vec<usize>,
    tol: f64,
}

impl<S: Scalar> RootSystem<S> {
    /// Validate a candidate root list against the reduced-system axioms
    /// and fix a positive subsystem by lexicographic-first-nonzero-coordinate
    /// positivity.
    ///
    /// Coordinates must be real scalars (rational or float); complex
    /// scalars enter through [`RootSystem::map_scalars`] from a validated
    /// real system, since the positivity split is order-based.
    pub fn validate(dimension: usize, roots: Vec<Vec<S>>) -> Result<Self> {
        let tol = if S::EXACT { 0.0 } else { FLOAT_CLOSURE_TOL };
        for r in &roots {
            if r.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: r.len(),
                });
            }
            if is_zero_vec(r, tol) {
                return Err(Error::ZeroRoot);
            }
        }
        // Each line meets the set in exactly {alpha, -alpha}.
        for (i, a) in roots.iter().enumerate() {
            for b in roots.iter().skip(i + 1) {
                if Self::parallel(a, b, tol) {
                    let neg: Vec<S> = a.iter().map(|c| -c.clone()).collect();
                    if !vec_approx_eq(b, &neg, tol) {
                        return Err(Error::ProportionalRootViolation {
                            first: fmt_vec(a),
                            second: fmt_vec(b),
                        });
                    }
                }
            }
        }
        // Reflection closure over all pairs.
        for a in &roots {
            for b in &roots {
                let image = reflect(a, b)?;
                if !roots.iter().any(|r| vec_approx_eq(r, &image, tol)) {
                    return Err(Error::ReflectionClosureViolation {
                        root: fmt_vec(b),
                        mirror: fmt_vec(a),
                        image: fmt_vec(&image),
                    });
                }
            }
        }
        // Every root must have its negative present.
        let mut positive = Vec::new();
        for (i, a) in roots.iter().enumerate() {
            let neg: Vec<S> = a.iter().map(|c| -c.clone()).collect();
            if !roots.iter().any(|r| vec_approx_eq(r, &neg, tol)) {
                return Err(Error::ReflectionClosureViolation {
                    root: fmt_vec(a),
                    mirror: fmt_vec(a),
                    image: fmt_vec(&neg),
                });
            }
            if Self::lex_positive(a, tol) {
                positive.push(i);
            }
        }
        if 2 * positive.len() != roots.len() {
            return Err(Error::InvalidParameter {
                detail: "positive subsystem does not split the roots in half".into(),
            });
        }
        Ok(Self {
            dimension,
            roots,
            positive,
            tol,
        })
    }

    fn parallel(a: &[S], b: &[S], tol: f64) -> bool {
        for i in 0..a.len() {
            for j in (i + 1)..a.len() {
                let cross = a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
                if !cross.approx_zero(tol) {
                    return false;
                }
            }
        }
        true
    }

    fn lex_positive(v: &[S], tol: f64) -> bool {
        for c in v {
            if !c.approx_zero(tol) {
                return c.to_f64() > 0.0;
            }
        }
        false
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn roots(&self) -> &[Vec<S>] {
        &self.roots
    }

    pub fn positive_indices(&self) -> &[usize] {
        &self.positive
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Vec<S>> {
        self.positive.iter().map(|&i| &self.roots[i])
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// Index of the root matching `v`, if present.
    pub fn find_root(&self, v: &[S]) -> Option<usize> {
        self.roots.iter().position(|r| vec_approx_eq(r, v, self.tol))
    }

    /// Generate the finite Coxeter group as orthogonal matrices, by closing
    /// the reflections under composition. Fails with [`Error::GroupTooLarge`]
    /// if more than `bound` elements appear.
    pub fn coxeter_group(&self, bound: usize) -> Result<Vec<Matrix<S>>> {
        let generators: Vec<Matrix<S>> = self
            .positive_roots()
            .map(|alpha| reflection_matrix(alpha))
            .collect::<Result<_>>()?;
        let mut elements: Vec<Matrix<S>> = vec![identity_matrix(self.dimension)];
        let mut frontier: Vec<usize> = vec![0];
        while let Some(idx) = frontier.pop() {
            let current = elements[idx].clone();
            for gen in &generators {
                let next = mat_mul(gen, &current);
                if !elements.iter().any(|m| mat_approx_eq(m, &next, self.tol)) {
                    elements.push(next);
                    frontier.push(elements.len() - 1);
                    if elements.len() > bound {
                        return Err(Error::GroupTooLarge { bound });
                    }
                }
            }
        }
        Ok(elements)
    }

    /// Map the coordinate scalars through an injective ring homomorphism,
    /// preserving the validated structure and the positive split.
    pub fn map_scalars<S2: Scalar>(&self, f: impl Fn(&S) -> S2) -> RootSystem<S2> {
        RootSystem {
            dimension: self.dimension,
            roots: self
                .roots
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
            positive: self.positive.clone(),
            tol: self.tol,
        }
    }

    /// Partition the root indices into orbits of the given group.
    pub fn orbits(&self, group: &[Matrix<S>]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.roots.len()];
        let mut orbits = Vec::new();
        for start in 0..self.roots.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = BTreeSet::new();
            for g in group {
                let image = mat_vec(g, &self.roots[start]);
                if let Some(j) = self.find_root(&image) {
                    orbit.insert(j);
                }
            }
            let orbit: Vec<usize> = orbit.into_iter().collect();
            for &j in &orbit {
                seen[j] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }
}

/// A multiplicity function: a map on roots, constant on every orbit of the
/// Coxeter group. Values are exact rationals regardless of the coordinate
/// backend. Orbit constancy is established at construction, since the
/// downstream formulas silently assume it.
#[derive(Debug, Clone)]
pub struct MultiplicityFunction {
    per_root: Vec<BigRational>,
    index: BigRational,
}

impl MultiplicityFunction {
    /// Assign `k` values by orbit representative. Every orbit must be
    /// covered exactly once.
    pub fn from_assignments<S: Scalar>(
        rs: &RootSystem<S>,
        group: &[Matrix<S>],
        assignments: &[(Vec<S>, BigRational)],
    ) -> Result<Self> {
        let orbits = rs.orbits(group);
        let mut per_root: Vec<Option<BigRational>> = vec![None; rs.roots().len()];
        for (rep, k) in assignments {
            let idx = rs.find_root(rep).ok_or_else(|| Error::InvalidMultiplicity {
                detail: format!("{} is not a root", fmt_vec(rep)),
            })?;
            let orbit = orbits
                .iter()
                .find(|orbit| orbit.contains(&idx))
                .expect("every root lies in an orbit");
            for &j in orbit {
                match &per_root[j] {
                    Some(existing) if existing != k => {
                        return Err(Error::OrbitConstancyViolation {
                            detail: format!(
                                "root {} received both {} and {}",
                                fmt_vec(&rs.roots()[j]),
                                format_rational(existing),
                                format_rational(k)
                            ),
                        });
                    }
                    _ => per_root[j] = Some(k.clone()),
                }
            }
        }
        let per_root: Vec<BigRational> = per_root
            .into_iter()
            .enumerate()
            .map(|(j, v)| {
                v.ok_or_else(|| Error::InvalidMultiplicity {
                    detail: format!("no value assigned to orbit of {}", fmt_vec(&rs.roots()[j])),
                })
            })
            .collect::<Result<_>>()?;
        let index = rs
            .positive_indices()
            .iter()
            .map(|&i| per_root[i].clone())
            .fold(BigRational::zero(), |acc, k| acc + k);
        Ok(Self { per_root, index })
    }

    /// The same `k` on every orbit.
    pub fn uniform<S: Scalar>(rs: &RootSystem<S>, k: BigRational) -> Self {
        let per_root = vec![k.clone(); rs.roots().len()];
        let index = k * BigRational::from_integer(num_bigint::BigInt::from(
            rs.positive_indices().len() as i64,
        ));
        Self { per_root, index }
    }

    pub fn value(&self, root_index: usize) -> &BigRational {
        &self.per_root[root_index]
    }

    /// The index `<k>`: the sum of `k` over the positive roots.
    pub fn index(&self) -> &BigRational {
        &self.index
    }

    pub fn is_zero(&self) -> bool {
        self.per_root.iter().all(|k| k.is_zero())
    }
}

/// Spherical weight `w_k(ω) = Π_{α>0} |<α,ω>|^{2 k_α}`.
///
/// `omega` should lie on the unit sphere (within 1e-12); the formula itself
/// is evaluated as given.
pub fn weight_wk<S: Scalar>(rs: &RootSystem<S>, k: &MultiplicityFunction, omega: &[f64]) -> f64 {
    debug_assert!(
        (omega.iter().map(|c| c * c).sum::<f64>().sqrt() - 1.0).abs() <= 1e-12,
        "weight_wk expects a unit vector"
    );
    let mut acc = 1.0;
    for &i in rs.positive_indices() {
        let pairing = dot_f64(&rs.roots()[i], omega).abs();
        let exponent = 2.0 * rational_to_f64(k.value(i));
        if exponent != 0.0 {
            acc *= pairing.powf(exponent);
        }
    }
    acc
}

/// Full weight `w_{k,a}(x) = |x|^{a-2} Π_{α>0} |<α,x>|^{2 k_α}` on
/// `R^N \ {0}`. Factors over polar coordinates as
/// `w_{k,a}(rω) = r^{a - 2 + 2<k>} w_k(ω)`.
pub fn weight_wka<S: Scalar>(
    rs: &RootSystem<S>,
    k: &MultiplicityFunction,
    a: &BigRational,
    x: &[f64],
) -> Result<f64> {
    let norm = x.iter().map(|c| c * c).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mut acc = norm.powf(rational_to_f64(a) - 2.0);
    for &i in rs.positive_indices() {
        let pairing = dot_f64(&rs.roots()[i], x).abs();
        let exponent = 2.0 * rational_to_f64(k.value(i));
        if exponent != 0.0 {
            acc *= pairing.powf(exponent);
        }
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// JSON document form
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoordinateValue {
    Integer(i64),
    Text(String),
    Float(f64),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiplicityEntry {
    pub orbit_root: Vec<CoordinateValue>,
    pub k: String,
}

/// Serialized root-system document:
/// `{"dimension": N, "roots": [[..]], "multiplicity": [{"orbit_root": [..], "k": "p/q"}]}`.
/// Rational coordinates are strings `"p/q"` or integers; any float
/// coordinate switches the document to the float backend.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootSystemDocument {
    pub dimension: usize,
    pub roots: Vec<Vec<CoordinateValue>>,
    pub multiplicity: Vec<MultiplicityEntry>,
}

/// A validated root system with its multiplicity function, in either
/// backend.
#[derive(Debug, Clone)]
pub enum ConfiguredRoots {
    Exact {
        system: RootSystem<BigRational>,
        group: Vec<Matrix<BigRational>>,
        multiplicity: MultiplicityFunction,
    },
    Float {
        system: RootSystem<f64>,
        group: Vec<Matrix<f64>>,
        multiplicity: MultiplicityFunction,
    },
}

impl ConfiguredRoots {
    pub fn dimension(&self) -> usize {
        match self {
            ConfiguredRoots::Exact { system, .. } => system.dimension(),
            ConfiguredRoots::Float { system, .. } => system.dimension(),
        }
    }

    pub fn index(&self) -> &BigRational {
        match self {
            ConfiguredRoots::Exact { multiplicity, .. } => multiplicity.index(),
            ConfiguredRoots::Float { multiplicity, .. } => multiplicity.index(),
        }
    }

    pub fn group_order(&self) -> usize {
        match self {
            ConfiguredRoots::Exact { group, .. } => group.len(),
            ConfiguredRoots::Float { group, .. } => group.len(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ConfiguredRoots::Exact { .. })
    }
}

fn coordinate_as_rational(c: &CoordinateValue) -> Result<BigRational> {
    match c {
        CoordinateValue::Integer(n) => Ok(BigRational::from_integer((*n).into())),
        CoordinateValue::Text(s) => parse_rational(s),
        CoordinateValue::Float(_) => Err(Error::ParseRational {
            input: "float coordinate in exact context".into(),
        }),
    }
}

fn coordinate_as_f64(c: &CoordinateValue) -> Result<f64> {
    match c {
        CoordinateValue::Integer(n) => Ok(*n as f64),
        CoordinateValue::Text(s) => Ok(rational_to_f64(&parse_rational(s)?)),
        CoordinateValue::Float(x) => Ok(*x),
    }
}

fn build_backend<S: Scalar>(
    doc: &RootSystemDocument,
    convert: impl Fn(&CoordinateValue) -> Result<S>,
    wrap: impl Fn(RootSystem<S>, Vec<Matrix<S>>, MultiplicityFunction) -> ConfiguredRoots,
    bound: usize,
) -> Result<ConfiguredRoots> {
    let roots: Vec<Vec<S>> = doc
        .roots
        .iter()
        .map(|r| r.iter().map(&convert).collect::<Result<Vec<S>>>())
        .collect::<Result<_>>()?;
    let system = RootSystem::validate(doc.dimension, roots)?;
    let group = system.coxeter_group(bound)?;
    let assignments: Vec<(Vec<S>, BigRational)> = doc
        .multiplicity
        .iter()
        .map(|entry| {
            let rep: Vec<S> = entry
                .orbit_root
                .iter()
                .map(&convert)
                .collect::<Result<_>>()?;
            Ok((rep, parse_rational(&entry.k)?))
        })
        .collect::<Result<_>>()?;
    let multiplicity = MultiplicityFunction::from_assignments(&system, &group, &assignments)?;
    Ok(wrap(system, group, multiplicity))
}

/// Load a root system and multiplicity function from its document form,
/// picking the exact backend when every coordinate is rational.
pub fn load_document(doc: &RootSystemDocument, bound: usize) -> Result<ConfiguredRoots> {
    let all_rational = doc
        .roots
        .iter()
        .flatten()
        .chain(doc.multiplicity.iter().flat_map(|m| m.orbit_root.iter()))
        .all(|c| !matches!(c, CoordinateValue::Float(_)));
    if all_rational {
        build_backend(
            doc,
            coordinate_as_rational,
            |system, group, multiplicity| ConfiguredRoots::Exact {
                system,
                group,
                multiplicity,
            },
            bound,
        )
    } else {
        build_backend(
            doc,
            coordinate_as_f64,
            |system, group, multiplicity| ConfiguredRoots::Float {
                system,
                group,
                multiplicity,
            },
            bound,
        )
    }
}

pub fn parse_document(json: &str) -> Result<RootSystemDocument> {
    Ok(serde_json::from_str(json)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn q(n: i64) -> BigRational {
        ratio(n, 1)
    }

    fn a1_in_plane() -> RootSystem<BigRational> {
        RootSystem::validate(2, vec![vec![q(1), q(0)], vec![q(-1), q(0)]]).unwrap()
    }

    fn a1xa1() -> RootSystem<BigRational> {
        RootSystem::validate(
            2,
            vec![
                vec![q(1), q(0)],
                vec![q(-1), q(0)],
                vec![q(0), q(1)],
                vec![q(0), q(-1)],
            ],
        )
        .unwrap()
    }

    fn hexagon() -> Vec<Vec<f64>> {
        (0..6)
            .map(|j| {
                let t = std::f64::consts::PI * j as f64 / 3.0;
                vec![t.cos(), t.sin()]
            })
            .collect()
    }

    #[test]
    fn reflect_coordinate_plane() {
        let alpha = vec![q(1), q(0)];
        let x = vec![q(3), q(4)];
        assert_eq!(reflect(&alpha, &x).unwrap(), vec![q(-3), q(4)]);
    }

    #[test]
    fn reflect_fixes_line_to_negative() {
        let alpha = vec![q(1), q(1)];
        let x = vec![q(1), q(1)];
        assert_eq!(reflect(&alpha, &x).unwrap(), vec![q(-1), q(-1)]);
    }

    #[test]
    fn reflect_scale_invariant() {
        let x = vec![q(3), q(4)];
        assert_eq!(
            reflect(&[q(2), q(0)], &x).unwrap(),
            reflect(&[q(1), q(0)], &x).unwrap()
        );
        assert_eq!(reflect(&[q(2), q(0)], &x).unwrap(), vec![q(-3), q(4)]);
    }

    #[test]
    fn reflect_rejects_zero() {
        assert!(matches!(
            reflect(&[q(0), q(0)], &[q(1), q(0)]),
            Err(Error::ZeroRoot)
        ));
    }

    #[test]
    fn validate_accepts_a1_in_plane() {
        let rs = a1_in_plane();
        assert_eq!(rs.positive_indices(), &[0]);
    }

    #[test]
    fn validate_rejects_proportional_roots() {
        let err = RootSystem::validate(
            2,
            vec![
                vec![q(1), q(0)],
                vec![q(-1), q(0)],
                vec![q(2), q(0)],
                vec![q(-2), q(0)],
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::ProportionalRootViolation { .. }));
    }

    #[test]
    fn validate_rejects_zero_root() {
        let err = RootSystem::validate(2, vec![vec![q(0), q(0)]]).unwrap_err();
        assert!(matches!(err, Error::ZeroRoot));
    }

    #[test]
    fn validate_rejects_broken_closure() {
        // {±e1, ±(1,1)} is not reflection closed.
        let err = RootSystem::validate(
            2,
            vec![
                vec![q(1), q(0)],
                vec![q(-1), q(0)],
                vec![q(1), q(1)],
                vec![q(-1), q(-1)],
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::ReflectionClosureViolation { .. }));
    }

    #[test]
    fn hexagonal_system_validates_with_three_positive_roots() {
        // Oracle: explicit reflection-closure check over all pairs.
        let roots = hexagon();
        for a in &roots {
            for b in &roots {
                let image = reflect(a, b).unwrap();
                assert!(roots
                    .iter()
                    .any(|r| vec_approx_eq(r, &image, FLOAT_CLOSURE_TOL)));
            }
        }
        let rs = RootSystem::validate(2, roots).unwrap();
        assert_eq!(rs.positive_indices().len(), 3);
    }

    #[test]
    fn group_orders_by_brute_force_closure() {
        let line = RootSystem::validate(1, vec![vec![q(1)], vec![q(-1)]]).unwrap();
        assert_eq!(line.coxeter_group(100).unwrap().len(), 2);

        assert_eq!(a1xa1().coxeter_group(100).unwrap().len(), 4);

        let hex = RootSystem::validate(2, hexagon()).unwrap();
        assert_eq!(hex.coxeter_group(100).unwrap().len(), 6);
    }

    #[test]
    fn group_elements_orthogonal_and_permute_roots() {
        let rs = a1xa1();
        let group = rs.coxeter_group(100).unwrap();
        for g in &group {
            assert!(is_orthogonal(g, 0.0));
            for root in rs.roots() {
                let image = mat_vec(g, root);
                assert!(rs.find_root(&image).is_some());
            }
        }
    }

    #[test]
    fn group_closed_under_composition_and_inverse() {
        let rs = a1xa1();
        let group = rs.coxeter_group(100).unwrap();
        let contains = |m: &Matrix<BigRational>| group.iter().any(|g| mat_approx_eq(g, m, 0.0));
        for g in &group {
            // Orthogonal inverse is the transpose.
            assert!(contains(&transpose(g)));
            for h in &group {
                assert!(contains(&mat_mul(g, h)));
            }
        }
        assert!(contains(&identity_matrix(2)));
    }

    #[test]
    fn group_bound_enforced() {
        let rs = a1xa1();
        assert!(matches!(
            rs.coxeter_group(2),
            Err(Error::GroupTooLarge { bound: 2 })
        ));
    }

    #[test]
    fn multiplicity_requires_orbit_constancy() {
        let rs = a1xa1();
        let group = rs.coxeter_group(100).unwrap();
        // e1 and e2 lie in distinct orbits: both needed.
        let err = MultiplicityFunction::from_assignments(
            &rs,
            &group,
            &[(vec![q(1), q(0)], ratio(1, 2))],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidMultiplicity { .. }));

        let k = MultiplicityFunction::from_assignments(
            &rs,
            &group,
            &[
                (vec![q(1), q(0)], ratio(1, 2)),
                (vec![q(0), q(1)], ratio(1, 3)),
            ],
        )
        .unwrap();
        assert_eq!(k.index(), &ratio(5, 6));
    }

    #[test]
    fn multiplicity_conflicting_values_rejected() {
        let hex = RootSystem::validate(2, hexagon()).unwrap();
        let group = hex.coxeter_group(100).unwrap();
        // All six roots are one orbit; two different values must conflict.
        let roots = hex.roots().to_vec();
        let err = MultiplicityFunction::from_assignments(
            &hex,
            &group,
            &[
                (roots[0].clone(), ratio(1, 2)),
                (roots[1].clone(), ratio(1, 3)),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::OrbitConstancyViolation { .. }));
    }

    #[test]
    fn weight_wk_examples() {
        let rs = a1_in_plane();
        let zero = MultiplicityFunction::uniform(&rs, BigRational::zero());
        for t in [0.3_f64, 1.2, 2.9] {
            assert!((weight_wk(&rs, &zero, &[t.cos(), t.sin()]) - 1.0).abs() <= 1e-15);
        }
        let one = MultiplicityFunction::uniform(&rs, q(1));
        for t in [0.3_f64, 1.2, 2.9] {
            let got = weight_wk(&rs, &one, &[t.cos(), t.sin()]);
            assert!((got - t.cos().powi(2)).abs() <= 1e-12);
        }

        let line = RootSystem::validate(1, vec![vec![q(1)], vec![q(-1)]]).unwrap();
        let half = MultiplicityFunction::uniform(&line, ratio(1, 2));
        assert!((weight_wk(&line, &half, &[1.0]) - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn weight_wka_examples() {
        let rs = a1_in_plane();
        let zero = MultiplicityFunction::uniform(&rs, BigRational::zero());
        assert!((weight_wka(&rs, &zero, &q(2), &[0.6, 0.8]).unwrap() - 1.0).abs() <= 1e-15);
        // a = 1, |x| = 4 gives 1/4.
        let got = weight_wka(&rs, &zero, &q(1), &[0.0, 4.0]).unwrap();
        assert!((got - 0.25).abs() <= 1e-15);
        assert!(matches!(
            weight_wka(&rs, &zero, &q(2), &[0.0, 0.0]),
            Err(Error::ZeroVector)
        ));

        // N = 1, k = 1/2, a = 2, x = 3: |x|^0 * |x|^{2*(1/2)} = 3.
        let line = RootSystem::validate(1, vec![vec![q(1)], vec![q(-1)]]).unwrap();
        let half = MultiplicityFunction::uniform(&line, ratio(1, 2));
        let got = weight_wka(&line, &half, &q(2), &[3.0]).unwrap();
        assert!((got - 3.0).abs() <= 1e-14);
    }

    #[test]
    fn weight_polar_factorization() {
        let rs = a1xa1();
        let k = MultiplicityFunction::from_assignments(
            &rs,
            &rs.coxeter_group(100).unwrap(),
            &[
                (vec![q(1), q(0)], ratio(1, 2)),
                (vec![q(0), q(1)], q(1)),
            ],
        )
        .unwrap();
        let a = ratio(3, 2);
        let omega = [0.6, 0.8];
        let wk = weight_wk(&rs, &k, &omega);
        let exponent = rational_to_f64(&a) - 2.0 + 2.0 * rational_to_f64(k.index());
        for r in [0.5_f64, 1.0, 2.0] {
            let x = [r * omega[0], r * omega[1]];
            let lhs = weight_wka(&rs, &k, &a, &x).unwrap();
            let rhs = r.powf(exponent) * wk;
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
        }
    }

    #[test]
    fn weight_group_invariance() {
        let rs = a1xa1();
        let group = rs.coxeter_group(100).unwrap();
        let k = MultiplicityFunction::from_assignments(
            &rs,
            &group,
            &[
                (vec![q(1), q(0)], ratio(1, 2)),
                (vec![q(0), q(1)], q(1)),
            ],
        )
        .unwrap();
        let omega = [0.6, 0.8];
        let base = weight_wk(&rs, &k, &omega);
        for g in &group {
            let image: Vec<f64> = g
                .iter()
                .map(|row| row.iter().zip(omega.iter()).map(|(c, v)| c.to_f64() * v).sum())
                .collect();
            let moved = weight_wk(&rs, &k, &image);
            assert!((moved - base).abs() <= 1e-12 * base.abs().max(1.0));
        }
    }

    #[test]
    fn document_round_trip_and_backend_choice() {
        let json = r#"{
            "dimension": 2,
            "roots": [[1, 0], ["-1", 0], [0, "1"], [0, -1]],
            "multiplicity": [
                {"orbit_root": [1, 0], "k": "1/2"},
                {"orbit_root": [0, 1], "k": "1/3"}
            ]
        }"#;
        let doc = parse_document(json).unwrap();
        let configured = load_document(&doc, DEFAULT_GROUP_BOUND).unwrap();
        assert!(configured.is_exact());
        assert_eq!(configured.index(), &ratio(5, 6));

        let json_float = r#"{
            "dimension": 2,
            "roots": [[1.0, 0.0], [-1.0, 0.0]],
            "multiplicity": [{"orbit_root": [1.0, 0.0], "k": "2"}]
        }"#;
        let doc = parse_document(json_float).unwrap();
        let configured = load_document(&doc, DEFAULT_GROUP_BOUND).unwrap();
        assert!(!configured.is_exact());
        assert_eq!(configured.index(), &q(2));
    }
}
