//! Generalized Gauss–Laguerre quadrature.
//!
//! Nodes and weights come from the Golub–Welsch method: the eigenvalues of
//! the symmetric tridiagonal Jacobi matrix of the weight `t^alpha e^{-t}`
//! are the nodes, and the squared first components of the normalized
//! eigenvectors (times the zeroth moment) are the weights. The tridiagonal
//! eigenproblem is solved by QL iteration with implicit shifts, carrying
//! only the first row of the eigenvector matrix.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::gamma::gamma;

/// A quadrature rule for `∫_0^∞ t^alpha e^{-t} φ(t) dt ≈ Σ w_i φ(t_i)`.
///
/// A rule with `n` nodes integrates polynomials `φ` of degree `2n - 1`
/// exactly.
#[derive(Debug, Clone)]
pub struct GaussLaguerreRule {
    pub alpha: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLaguerreRule {
    pub fn new(alpha: f64, n: usize) -> Result<Self> {
        if alpha.is_nan() || alpha <= -1.0 {
            return Err(Error::InvalidParameter {
                detail: format!("Gauss-Laguerre parameter must exceed -1, got {alpha}"),
            });
        }
        if n == 0 {
            return Err(Error::InvalidParameter {
                detail: "quadrature rule needs at least one node".into(),
            });
        }

        // Jacobi matrix of the generalized Laguerre weight.
        let mut diag: Vec<f64> = (0..n).map(|i| 2.0 * i as f64 + 1.0 + alpha).collect();
        let mut off: Vec<f64> = (0..n)
            .map(|i| {
                let j = (i + 1) as f64;
                (j * (j + alpha)).sqrt()
            })
            .collect();
        off[n - 1] = 0.0;
        let mut first_row = vec![0.0; n];
        first_row[0] = 1.0;

        tridiag_ql_implicit(&mut diag, &mut off, &mut first_row)?;

        let mu0 = gamma(alpha + 1.0);
        let mut pairs: Vec<(f64, f64)> = diag
            .iter()
            .zip(first_row.iter())
            .map(|(&x, &z)| (x, z * z * mu0))
            .collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

        Ok(Self {
            alpha,
            nodes: pairs.iter().map(|p| p.0).collect(),
            weights: pairs.iter().map(|p| p.1).collect(),
        })
    }

    /// Integrate `t^alpha e^{-t} φ(t)` over `[0, ∞)`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, phi: F) -> f64 {
        self.nodes
            .iter()
            .zip(self.weights.iter())
            .map(|(&t, &w)| w * phi(t))
            .sum()
    }
}

/// QL iteration with implicit shifts on a symmetric tridiagonal matrix.
/// `diag` holds the diagonal, `off` the subdiagonal (entry `n-1` unused),
/// and `row` a single eigenvector-matrix row updated by the rotations.
fn tridiag_ql_implicit(diag: &mut [f64], off: &mut [f64], row: &mut [f64]) -> Result<()> {
    let n = diag.len();
    if n <= 1 {
        return Ok(());
    }
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 50 {
                return Err(Error::NonConvergence {
                    detail: format!("QL iteration stalled at row {l} of {n}"),
                });
            }

            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;

            for i in (l..m).rev() {
                let mut f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;

                f = row[i + 1];
                row[i + 1] = s * row[i] + c * f;
                row[i] = c * row[i] - s * f;
            }
            if underflow {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}

type RuleCache = Mutex<HashMap<(u64, usize), Arc<GaussLaguerreRule>>>;

fn rule_cache() -> &'static RuleCache {
    static CACHE: OnceLock<RuleCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared, memoized rule lookup. Rules are immutable once built.
pub fn cached_rule(alpha: f64, n: usize) -> Result<Arc<GaussLaguerreRule>> {
    let key = (alpha.to_bits(), n);
    if let Some(rule) = rule_cache().lock().unwrap().get(&key) {
        return Ok(rule.clone());
    }
    let rule = Arc::new(GaussLaguerreRule::new(alpha, n)?);
    rule_cache().lock().unwrap().insert(key, rule.clone());
    Ok(rule)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn two_nodes_alpha_five() {
        let rule = GaussLaguerreRule::new(5.0, 2).unwrap();
        let nodes = [4.354_248_688_935_409, 9.645_751_311_064_59];
        let weights = [82.677_868_380_553_63, 37.322_131_619_446_37];
        for i in 0..2 {
            assert_close(rule.nodes[i], nodes[i], 1e-12);
            assert_close(rule.weights[i], weights[i], 1e-11);
        }
    }

    #[test]
    fn three_nodes_alpha_zero() {
        let rule = GaussLaguerreRule::new(0.0, 3).unwrap();
        let nodes = [
            0.415_774_556_783_479_1,
            2.294_280_360_279_042,
            6.289_945_082_937_479_4,
        ];
        let weights = [
            0.711_093_009_929_173,
            0.278_517_733_569_240_87,
            0.010_389_256_501_586_135,
        ];
        for i in 0..3 {
            assert_close(rule.nodes[i], nodes[i], 1e-13);
            assert_close(rule.weights[i], weights[i], 1e-13);
        }
    }

    #[test]
    fn five_nodes_negative_alpha() {
        let rule = GaussLaguerreRule::new(-0.9, 5).unwrap();
        let nodes = [
            0.020_777_151_319_288_104,
            0.808_997_536_134_602_1,
            2.674_900_020_624_07,
            5.869_026_089_963_398,
            11.126_299_201_958_641,
        ];
        for (got, want) in rule.nodes.iter().zip(nodes.iter()) {
            assert_close(*got, *want, 1e-12);
        }
        assert_close(rule.weights[0], 8.738_289_241_242_436, 1e-10);
    }

    #[test]
    fn polynomial_exactness() {
        // Degree 2n-1 exactness: moments of t^alpha e^{-t} are gamma ratios.
        let rule = GaussLaguerreRule::new(0.0, 8).unwrap();
        let mut want = 1.0;
        for k in 0..16u32 {
            if k > 0 {
                want *= f64::from(k); // ∫ t^k e^{-t} = k!
            }
            let got = rule.integrate(|t| t.powi(k as i32));
            assert!(
                (got - want).abs() <= 1e-12 * want.max(1.0),
                "moment {k}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn zeroth_moment_matches_gamma() {
        for alpha in [-0.5, 0.25, 1.5, 4.0] {
            let rule = GaussLaguerreRule::new(alpha, 16).unwrap();
            let got = rule.integrate(|_| 1.0);
            let want = gamma(alpha + 1.0);
            assert!((got - want).abs() <= 1e-12 * want.abs());
        }
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(GaussLaguerreRule::new(-1.0, 4).is_err());
        assert!(GaussLaguerreRule::new(0.0, 0).is_err());
    }
}
