//! Continuous inner products over the domains `F^{σ±}` by analytic triangle
//! integration, and the discrete Ξ-transforms on `F_M^{σ±}` / `Λ_M^{σ±}`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{ratio_to_f64, triangle_signed_area, AlgebraKind, IVec2, QVec2};
use crate::domains::{
    grid_points, in_weight_cone, weight_points, Family, GridPoint, Sheet, WeightPoint,
};
use crate::orbitfn::xi_torus;
use crate::weyl::{orbit_size_torus, stab_order_d, stab_order_h};
use crate::{Algebra, Error};

/// Sum with pairwise (cascade) reduction for reproducible rounding.
pub fn pairwise_sum(values: &[Complex64]) -> Complex64 {
    const BLOCK: usize = 16;
    if values.len() <= BLOCK {
        return values.iter().copied().sum();
    }
    let (left, right) = values.split_at(values.len() / 2);
    pairwise_sum(left) + pairwise_sum(right)
}

/// `(e^h − 1)/h`, accurate near zero.
fn phi1(h: Complex64) -> Complex64 {
    if h.norm() < 0.5 {
        // Σ h^n/(n+1)!
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for n in 1..40 {
            term *= h / (n as f64 + 1.0);
            sum += term;
            if term.norm() < 1e-18 {
                break;
            }
        }
        sum
    } else {
        (h.exp() - 1.0) / h
    }
}

/// First divided difference `exp[u, v]`.
fn exp_dd1(u: Complex64, v: Complex64) -> Complex64 {
    u.exp() * phi1(v - u)
}

/// Second divided difference `exp[z0, z1, z2]`.
///
/// For tightly clustered nodes this uses the series
/// `e^c Σ_n h_n(z − c) / (n+2)!` in complete homogeneous symmetric
/// polynomials about the centroid c. Otherwise the two most distant nodes
/// are placed at the ends of the recursion, so the outer division is by a
/// quantity bounded below.
fn exp_dd2(z: [Complex64; 3]) -> Complex64 {
    let dist = |i: usize, j: usize| (z[i] - z[j]).norm();
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let (i, j) = pairs
        .into_iter()
        .max_by(|a, b| dist(a.0, a.1).total_cmp(&dist(b.0, b.1)))
        .expect("three pairs");
    if dist(i, j) < 0.5 {
        let c = (z[0] + z[1] + z[2]) / 3.0;
        let h = [z[0] - c, z[1] - c, z[2] - c];
        // hk[m] holds h_n over the first m+1 variables at the current n.
        let mut hk = [Complex64::new(1.0, 0.0); 3];
        let mut sum = Complex64::zero();
        let mut factorial = 2.0;
        for n in 0..40 {
            if n > 0 {
                hk[0] *= h[0];
                hk[1] = hk[1] * h[1] + hk[0];
                hk[2] = hk[2] * h[2] + hk[1];
                factorial *= (n + 2) as f64;
            }
            let term = hk[2] / factorial;
            sum += term;
            if n > 4 && term.norm() < 1e-18 {
                break;
            }
        }
        return c.exp() * sum;
    }
    let k = 3 - i - j;
    (exp_dd1(z[k], z[j]) - exp_dd1(z[i], z[k])) / (z[j] - z[i])
}

/// `∫_T e^{2πi(p u + q v)} du dv` over a triangle with vertices `tri`.
pub fn triangle_exp_integral(freq: [f64; 2], tri: &[[f64; 2]; 3]) -> Result<Complex64, Error> {
    let [a, b, c] = tri;
    let e1 = [b[0] - a[0], b[1] - a[1]];
    let e2 = [c[0] - a[0], c[1] - a[1]];
    let det = e1[0] * e2[1] - e1[1] * e2[0];
    let scale = (e1[0].hypot(e1[1]) * e2[0].hypot(e2[1])).max(f64::MIN_POSITIVE);
    if !det.is_finite() || det.abs() <= 1e-14 * scale {
        return Err(Error::DegenerateTriangle);
    }
    let tau = std::f64::consts::TAU;
    let phase = |v: [f64; 2]| freq[0] * v[0] + freq[1] * v[1];
    let alpha = tau * phase(e1);
    let beta = tau * phase(e2);
    let offset = crate::orbitfn::cis_turns(phase(*a));
    let dd = exp_dd2([
        Complex64::zero(),
        Complex64::new(0.0, alpha),
        Complex64::new(0.0, beta),
    ]);
    Ok(offset * dd * det.abs())
}

/// [`triangle_exp_integral`] for a triangle with exact vertices.
pub fn triangle_exp_integral_exact(freq: [f64; 2], tri: &[QVec2; 3]) -> Result<Complex64, Error> {
    if triangle_signed_area(&tri[0], &tri[1], &tri[2]).is_zero() {
        return Err(Error::DegenerateTriangle);
    }
    let f = |v: &QVec2| [ratio_to_f64(v[0]), ratio_to_f64(v[1])];
    triangle_exp_integral(freq, &[f(&tri[0]), f(&tri[1]), f(&tri[2])])
}

/// The two triangles (α∨-coordinates) composing `F^{σ±}`.
pub fn domain_triangles(alg: &Algebra, family: Family) -> [[QVec2; 3]; 2] {
    let base = alg.data.fundamental_triangle();
    let r = alg.group.generator(family.sheet_reflection());
    let reflected = [
        r.apply_point(&base[0]),
        r.apply_point(&base[1]),
        r.apply_point(&base[2]),
    ];
    [base, reflected]
}

fn ensure_in_cone(alg: &Algebra, family: Family, lambda: IVec2) -> Result<(), Error> {
    if in_weight_cone(&alg.data, family, lambda) {
        Ok(())
    } else {
        Err(Error::WeightOutsideCone {
            family,
            weight: lambda,
        })
    }
}

/// `∫_{F^{σ±}} Ξ_λ(x) conj(Ξ_λ'(x)) dx` with respect to Euclidean measure.
pub fn continuous_inner(
    alg: &Algebra,
    family: Family,
    lambda: IVec2,
    lambda_prime: IVec2,
) -> Result<Complex64, Error> {
    ensure_in_cone(alg, family, lambda)?;
    ensure_in_cone(alg, family, lambda_prime)?;
    Ok(continuous_inner_unchecked(
        alg,
        family,
        lambda,
        lambda_prime,
    ))
}

/// [`continuous_inner`] without the cone check.
pub fn continuous_inner_unchecked(
    alg: &Algebra,
    family: Family,
    lambda: IVec2,
    lambda_prime: IVec2,
) -> Complex64 {
    let triangles = domain_triangles(alg, family);
    let sub = alg.subgroup(family.kernel());
    // Collect coefficients per frequency so each exponential is integrated once.
    let mut coeffs: BTreeMap<IVec2, i64> = BTreeMap::new();
    for w in &sub.elements {
        for v in &sub.elements {
            let a = w.apply_weight(lambda);
            let b = v.apply_weight(lambda_prime);
            *coeffs.entry([a[0] - b[0], a[1] - b[1]]).or_default() +=
                family.sign(w) * family.sign(v);
        }
    }
    let mut terms = Vec::new();
    for (mu, c) in coeffs {
        if c == 0 {
            continue;
        }
        for tri in &triangles {
            let val = triangle_exp_integral_exact([mu[0] as f64, mu[1] as f64], tri)
                .expect("fundamental triangles are nondegenerate");
            terms.push(val * c as f64);
        }
    }
    pairwise_sum(&terms) * alg.data.alpha_vee_area_element().to_f64()
}

/// The value `K d_λ δ_{λλ'}` predicted by continuous orthogonality.
pub fn continuous_expected(
    alg: &Algebra,
    family: Family,
    lambda: IVec2,
    lambda_prime: IVec2,
) -> f64 {
    if lambda != lambda_prime {
        return 0.0;
    }
    let d = stab_order_d(alg.subgroup(family.kernel()), lambda);
    alg.data.fundamental_volume.to_f64() * d as f64
}

/// Key of a grid point or weight: sheet and `[c, a, b]`.
pub type PointKey = (Sheet, [i64; 3]);

pub fn format_key(key: &PointKey) -> String {
    let [c, a, b] = key.1;
    let sheet = match key.0 {
        Sheet::Base => "base",
        Sheet::Reflected => "reflected",
    };
    format!("[{c},{a},{b}] ({sheet})")
}

/// Whether a vector holds function samples or expansion coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VectorKind {
    Samples,
    Coefficients,
}

/// Complex values indexed by the points of `F_M^{σ±}` (samples) or of
/// `Λ_M^{σ±}` (coefficients).
#[derive(Clone, Debug, PartialEq)]
pub struct DataVector {
    pub kind: VectorKind,
    pub algebra: AlgebraKind,
    pub family: Family,
    pub m: i64,
    pub values: BTreeMap<PointKey, Complex64>,
}

pub type SampleVector = DataVector;
pub type CoeffVector = DataVector;

impl DataVector {
    pub fn get(&self, key: &PointKey) -> Option<Complex64> {
        self.values.get(key).copied()
    }

    /// Checks that the keys are exactly `expected`.
    pub fn check_keys(&self, expected: &[PointKey]) -> Result<(), Error> {
        let missing: Vec<String> = expected
            .iter()
            .filter(|k| !self.values.contains_key(k))
            .map(format_key)
            .collect();
        if !missing.is_empty() {
            const SHOWN: usize = 10;
            let mut listed = missing
                .iter()
                .take(SHOWN)
                .cloned()
                .collect::<Vec<_>>()
                .join(", ");
            if missing.len() > SHOWN {
                listed.push_str(", ...");
            }
            return Err(Error::MissingPoints {
                count: missing.len(),
                listed,
            });
        }
        if self.values.len() != expected.len() {
            let extra = self
                .values
                .keys()
                .find(|k| !expected.contains(k))
                .expect("more keys than expected");
            return Err(Error::UnexpectedPoint(format_key(extra)));
        }
        Ok(())
    }

    pub fn max_abs_diff(&self, other: &DataVector) -> f64 {
        self.values
            .iter()
            .map(|(k, v)| {
                other
                    .values
                    .get(k)
                    .map_or(f64::INFINITY, |w| (v - w).norm())
            })
            .fold(0.0, f64::max)
    }
}

/// Precomputed data for the discrete transform of one family and M.
#[derive(Clone, Debug)]
pub struct DiscreteTransform {
    pub algebra: AlgebraKind,
    pub family: Family,
    pub m: i64,
    pub grid: Vec<GridPoint>,
    pub weights: Vec<WeightPoint>,
    /// `ε(x)` for each grid point.
    pub epsilon: Vec<usize>,
    /// `h∨_λ` for each weight.
    pub h: Vec<usize>,
    /// `Ξ_λ(x)`, rows indexed by weights and columns by grid points.
    pub values: Vec<Vec<Complex64>>,
    /// `k M²`.
    pub norm: f64,
}

impl DiscreteTransform {
    pub fn new(alg: &Algebra, family: Family, m: i64) -> Result<Self, Error> {
        if m < 1 {
            return Err(Error::InvalidM(m));
        }
        let grid = grid_points(&alg.data, family, m);
        let weights = weight_points(&alg.data, family, m);
        if grid.is_empty() {
            return Err(Error::EmptyGrid { family, m });
        }
        let sub = alg.subgroup(family.kernel());
        let tori: Vec<_> = grid.iter().map(|p| p.torus(&alg.data)).collect();
        let epsilon = tori.iter().map(|t| orbit_size_torus(sub, t)).collect();
        let h = weights
            .iter()
            .map(|w| stab_order_h(sub, &alg.data.cartan, w.coords, m))
            .collect();
        let values = weights
            .iter()
            .map(|w| {
                tori.iter()
                    .map(|t| xi_torus(alg, family, w.coords, t))
                    .collect()
            })
            .collect();
        let norm = (alg.data.discrete_constant * m * m) as f64;
        Ok(DiscreteTransform {
            algebra: alg.kind(),
            family,
            m,
            grid,
            weights,
            epsilon,
            h,
            values,
            norm,
        })
    }

    pub fn grid_keys(&self) -> Vec<PointKey> {
        self.grid.iter().map(GridPoint::key).collect()
    }

    pub fn weight_keys(&self) -> Vec<PointKey> {
        self.weights.iter().map(WeightPoint::key).collect()
    }

    fn check_header(&self, v: &DataVector, kind: VectorKind) -> Result<(), Error> {
        let describe = |k: VectorKind, a: AlgebraKind, f: Family, m: i64| {
            let what = match k {
                VectorKind::Samples => "samples",
                VectorKind::Coefficients => "coefficients",
            };
            format!("{what} for {a} {f} M={m}")
        };
        if v.kind != kind || v.algebra != self.algebra || v.family != self.family || v.m != self.m {
            return Err(Error::Mismatch {
                expected: describe(kind, self.algebra, self.family, self.m),
                found: describe(v.kind, v.algebra, v.family, v.m),
            });
        }
        Ok(())
    }

    pub fn samples_from_fn(&self, mut f: impl FnMut(&GridPoint) -> Complex64) -> SampleVector {
        DataVector {
            kind: VectorKind::Samples,
            algebra: self.algebra,
            family: self.family,
            m: self.m,
            values: self.grid.iter().map(|p| (p.key(), f(p))).collect(),
        }
    }

    pub fn coeffs_from_fn(&self, mut f: impl FnMut(&WeightPoint) -> Complex64) -> CoeffVector {
        DataVector {
            kind: VectorKind::Coefficients,
            algebra: self.algebra,
            family: self.family,
            m: self.m,
            values: self.weights.iter().map(|w| (w.key(), f(w))).collect(),
        }
    }

    /// `c_λ = (k M² h_λ)⁻¹ Σ_x ε(x) f(x) conj(Ξ_λ(x))`.
    pub fn forward(&self, samples: &SampleVector) -> Result<CoeffVector, Error> {
        self.check_header(samples, VectorKind::Samples)?;
        samples.check_keys(&self.grid_keys())?;
        let f: Vec<Complex64> = self.grid.iter().map(|p| samples.values[&p.key()]).collect();
        let mut out = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            let terms: Vec<Complex64> = (0..self.grid.len())
                .map(|j| f[j] * self.values[i][j].conj() * self.epsilon[j] as f64)
                .collect();
            out.insert(
                w.key(),
                pairwise_sum(&terms) / (self.norm * self.h[i] as f64),
            );
        }
        Ok(DataVector {
            kind: VectorKind::Coefficients,
            algebra: self.algebra,
            family: self.family,
            m: self.m,
            values: out,
        })
    }

    /// `f(x) = Σ_λ c_λ Ξ_λ(x)`.
    pub fn inverse(&self, coeffs: &CoeffVector) -> Result<SampleVector, Error> {
        self.check_header(coeffs, VectorKind::Coefficients)?;
        coeffs.check_keys(&self.weight_keys())?;
        let c: Vec<Complex64> = self
            .weights
            .iter()
            .map(|w| coeffs.values[&w.key()])
            .collect();
        let mut out = BTreeMap::new();
        for (j, p) in self.grid.iter().enumerate() {
            let terms: Vec<Complex64> = (0..self.weights.len())
                .map(|i| c[i] * self.values[i][j])
                .collect();
            out.insert(p.key(), pairwise_sum(&terms));
        }
        Ok(DataVector {
            kind: VectorKind::Samples,
            algebra: self.algebra,
            family: self.family,
            m: self.m,
            values: out,
        })
    }

    /// `G[λ, λ'] = Σ_x ε(x) Ξ_λ(x) conj(Ξ_λ'(x))`.
    pub fn gram(&self) -> Vec<Vec<Complex64>> {
        let n = self.weights.len();
        let mut g = vec![vec![Complex64::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                let terms: Vec<Complex64> = (0..self.grid.len())
                    .map(|j| self.values[i][j] * self.values[k][j].conj() * self.epsilon[j] as f64)
                    .collect();
                g[i][k] = pairwise_sum(&terms);
            }
        }
        g
    }

    /// The predicted Gram diagonal `k M² h_λ`.
    pub fn expected_diagonal(&self) -> Vec<f64> {
        self.h.iter().map(|&h| self.norm * h as f64).collect()
    }

    /// `Σ_x ε(x) |f(x)|²`.
    pub fn sample_energy(&self, samples: &SampleVector) -> f64 {
        let terms: Vec<Complex64> = self
            .grid
            .iter()
            .zip(&self.epsilon)
            .map(|(p, &e)| Complex64::new(samples.values[&p.key()].norm_sqr() * e as f64, 0.0))
            .collect();
        pairwise_sum(&terms).re
    }

    /// `k M² Σ_λ h_λ |c_λ|²`.
    pub fn coeff_energy(&self, coeffs: &CoeffVector) -> f64 {
        let terms: Vec<Complex64> = self
            .weights
            .iter()
            .zip(&self.h)
            .map(|(w, &h)| Complex64::new(coeffs.values[&w.key()].norm_sqr() * h as f64, 0.0))
            .collect();
        pairwise_sum(&terms).re * self.norm
    }
}

/// Maximum Gram errors: `(relative diagonal error, off-diagonal / kM²)`.
pub fn gram_errors(t: &DiscreteTransform) -> (f64, f64) {
    let g = t.gram();
    let expected = t.expected_diagonal();
    let mut diag: f64 = 0.0;
    let mut off: f64 = 0.0;
    for (i, row) in g.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            if i == k {
                diag = diag.max((v - expected[i]).norm() / expected[i]);
            } else {
                off = off.max(v.norm() / t.norm);
            }
        }
    }
    (diag, off)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};

    fn quad_oracle(freq: [f64; 2], tri: &[[f64; 2]; 3]) -> Complex64 {
        // Tensor Gauss-Legendre on the square mapped by the Duffy transform.
        let n = 40;
        let (nodes, weights) = gauss_legendre(n);
        let [a, b, c] = tri;
        let det = ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])).abs();
        let mut sum = Complex64::zero();
        for i in 0..n {
            for j in 0..n {
                let u = (nodes[i] + 1.0) / 2.0;
                let v = (nodes[j] + 1.0) / 2.0;
                let s = u;
                let t = (1.0 - u) * v;
                let x = [
                    a[0] + s * (b[0] - a[0]) + t * (c[0] - a[0]),
                    a[1] + s * (b[1] - a[1]) + t * (c[1] - a[1]),
                ];
                let ph = std::f64::consts::TAU * (freq[0] * x[0] + freq[1] * x[1]);
                sum += Complex64::from_polar(1.0, ph) * (weights[i] * weights[j] * (1.0 - u) / 4.0);
            }
        }
        sum * det
    }

    fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
        let mut x = vec![0.0; n];
        let mut w = vec![0.0; n];
        for i in 0..n {
            let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, z);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                let dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
                let dz = p1 / dp;
                z -= dz;
                if dz.abs() < 1e-16 {
                    let dp = {
                        let (mut p0, mut p1) = (1.0, z);
                        for k in 2..=n {
                            let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                            p0 = p1;
                            p1 = p2;
                        }
                        n as f64 * (z * p1 - p0) / (z * z - 1.0)
                    };
                    x[i] = z;
                    w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
                    break;
                }
            }
        }
        (x, w)
    }

    #[test]
    fn zero_frequency_gives_area() {
        let tri = [[0.0, 0.0], [2.0, 0.0], [0.0, 3.0]];
        let v = triangle_exp_integral([0.0, 0.0], &tri).unwrap();
        assert!((v - Complex64::new(3.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn unit_triangle_one_frequency() {
        // ∫₀¹ (1 − u) e^{2πiu} du = i/(2π)
        let tri = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
        let v = triangle_exp_integral([1.0, 0.0], &tri).unwrap();
        let expected = Complex64::new(0.0, 1.0 / std::f64::consts::TAU);
        assert!((v - expected).norm() < 1e-14);
        assert!((v - quad_oracle([1.0, 0.0], &tri)).norm() < 1e-12);
    }

    #[test]
    fn against_quadrature() {
        let tris = [
            [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            [[0.1, -0.2], [0.7, 0.3], [-0.4, 0.9]],
            [[0.0, 0.0], [0.5, 0.5], [1.0, 0.0]],
        ];
        let freqs = [
            [1.0, 0.0],
            [0.0, -2.0],
            [3.0, 3.0],
            [1.0, -1.0],
            [2.5, 0.7],
            [1e-9, 0.0],
            [1.0, 1.0 + 1e-10],
        ];
        for tri in &tris {
            for f in freqs {
                let a = triangle_exp_integral(f, tri).unwrap();
                let b = quad_oracle(f, tri);
                assert!((a - b).norm() < 1e-12, "{f:?} {tri:?}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn conjugate_symmetry() {
        let tri = [[0.1, 0.2], [0.9, -0.3], [0.4, 0.8]];
        let a = triangle_exp_integral([2.0, -1.0], &tri).unwrap();
        let b = triangle_exp_integral([-2.0, 1.0], &tri).unwrap();
        assert!((a - b.conj()).norm() < 1e-15);
    }

    #[test]
    fn degenerate_rejected() {
        let tri = [[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]];
        assert!(matches!(
            triangle_exp_integral([1.0, 0.0], &tri),
            Err(Error::DegenerateTriangle)
        ));
        let exact = [[qi(0), qi(0)], [q(1, 2), q(1, 3)], [qi(3), qi(2)]];
        assert!(matches!(
            triangle_exp_integral_exact([0.0, 0.0], &exact),
            Err(Error::DegenerateTriangle)
        ));
    }

    #[test]
    fn pairwise_matches_naive() {
        let v: Vec<Complex64> = (0..1000)
            .map(|i| Complex64::new(i as f64, -(i as f64) / 3.0))
            .collect();
        let naive: Complex64 = v.iter().sum();
        assert!((pairwise_sum(&v) - naive).norm() < 1e-9);
    }

    #[test]
    fn c2_s_plus_continuous_example() {
        let g = Algebra::new(AlgebraKind::C2);
        let v = continuous_inner(&g, Family::SPlus, [3, 0], [3, 0]).unwrap();
        assert!((v - Complex64::new(4.0, 0.0)).norm() < 1e-9, "{v}");
        let w = continuous_inner(&g, Family::LMinus, [2, 1], [2, 1]).unwrap();
        assert!((w - Complex64::new(2.0, 0.0)).norm() < 1e-9, "{w}");
        let z = continuous_inner(&g, Family::SPlus, [3, 0], [1, 1]).unwrap();
        assert!(z.norm() < 1e-9);
    }

    #[test]
    fn outside_cone_is_rejected() {
        let g = Algebra::new(AlgebraKind::C2);
        assert!(matches!(
            continuous_inner(&g, Family::EMinus, [0, 0], [1, 1]),
            Err(Error::WeightOutsideCone { .. })
        ));
    }

    #[test]
    fn gram_examples() {
        let g = Algebra::new(AlgebraKind::C2);
        let t = DiscreteTransform::new(&g, Family::SPlus, 3).unwrap();
        let gram = t.gram();
        let i = t
            .weights
            .iter()
            .position(|w| w.sheet == Sheet::Base && w.cab == [0, 1, 1])
            .unwrap();
        assert!((gram[i][i] - Complex64::new(72.0, 0.0)).norm() < 1e-9);
        let g2 = Algebra::new(AlgebraKind::G2);
        let t = DiscreteTransform::new(&g2, Family::LMinus, 4).unwrap();
        for (i, row) in t.gram().iter().enumerate() {
            assert!((row[i] - Complex64::new(96.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn forward_of_basis_function() {
        let g = Algebra::new(AlgebraKind::G2);
        let t = DiscreteTransform::new(&g, Family::SMinus, 7).unwrap();
        let target = t.weights[t.weights.len() / 2].clone();
        let samples =
            t.samples_from_fn(|p| xi_torus(&g, Family::SMinus, target.coords, &p.torus(&g.data)));
        let c = t.forward(&samples).unwrap();
        for (k, v) in &c.values {
            let want = if *k == target.key() { 1.0 } else { 0.0 };
            assert!((v - Complex64::new(want, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn missing_point_is_reported() {
        let g = Algebra::new(AlgebraKind::C2);
        let t = DiscreteTransform::new(&g, Family::SPlus, 4).unwrap();
        let mut s = t.samples_from_fn(|_| Complex64::zero());
        let key = t.grid[2].key();
        s.values.remove(&key);
        match t.forward(&s) {
            Err(Error::MissingPoints { count: 1, listed }) => assert_eq!(listed, format_key(&key)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_samples_give_zero_coefficients() {
        let g = Algebra::new(AlgebraKind::C2);
        let t = DiscreteTransform::new(&g, Family::EMinus, 5).unwrap();
        let c = t
            .forward(&t.samples_from_fn(|_| Complex64::zero()))
            .unwrap();
        assert!(c.values.values().all(|v| v.is_zero()));
    }
}
