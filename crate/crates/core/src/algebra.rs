//! Exact root-system data for the rank-2 algebras C2 and G2.
//!
//! Every coordinate pair in this crate follows one fixed ordering of the
//! simple roots:
//!
//! * C2: `(α_s, α_l)`, index 0 is the short root, index 1 the long root;
//! * G2: `(α_l, α_s)`, index 0 is the long root, index 1 the short root.
//!
//! The same ordering is used for the coroots `α∨`, the weights `ω` and the
//! coweights `ω∨`. Weights (function labels) are integer vectors in
//! ω-coordinates; points of the torus are rational vectors in α∨-coordinates,
//! so that `⟨λ, x⟩ = λ_0 x_0 + λ_1 x_1`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::Error;

pub type Rational = Ratio<i64>;
pub type IVec2 = [i64; 2];
pub type IMat2 = [[i64; 2]; 2];
pub type QVec2 = [Rational; 2];
pub type QMat2 = [[Rational; 2]; 2];

/// The two algebras with roots of two different lengths in rank 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraKind {
    #[serde(rename = "c2")]
    C2,
    #[serde(rename = "g2")]
    G2,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 2] = [AlgebraKind::C2, AlgebraKind::G2];

    /// Position of the short simple root in the basis ordering.
    pub fn short_index(self) -> usize {
        match self {
            AlgebraKind::C2 => 0,
            AlgebraKind::G2 => 1,
        }
    }

    /// Position of the long simple root in the basis ordering.
    pub fn long_index(self) -> usize {
        1 - self.short_index()
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::C2 => "c2",
            AlgebraKind::G2 => "g2",
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::C2 => write!(f, "C2"),
            AlgebraKind::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "c2" | "b2" => Ok(AlgebraKind::C2),
            "g2" => Ok(AlgebraKind::G2),
            _ => Err(Error::Parse(format!(
                "unknown algebra `{s}` (expected c2 or g2)"
            ))),
        }
    }
}

/// The four coordinate systems of the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Simple roots.
    Alpha,
    /// Simple coroots `α∨ = 2α/⟨α,α⟩`.
    AlphaVee,
    /// Fundamental weights, dual to the coroots.
    Omega,
    /// Fundamental coweights `ω∨ = 2ω/⟨α,α⟩`, dual to the roots.
    OmegaVee,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::Alpha, Basis::AlphaVee, Basis::Omega, Basis::OmegaVee];
}

/// A number of the form `coeff · √radicand` with square-free `radicand`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SqrtRational {
    pub coeff: Rational,
    pub radicand: i64,
}

impl SqrtRational {
    pub fn rational(r: Rational) -> Self {
        SqrtRational {
            coeff: r,
            radicand: 1,
        }
    }

    /// Exact square root of a nonnegative rational.
    pub fn sqrt_of(r: Rational) -> Self {
        assert!(!r.is_negative(), "square root of a negative rational");
        // √(p/q) = √(p q) / q
        let (outside, radicand) = split_square(*r.numer() * *r.denom());
        SqrtRational {
            coeff: Rational::new(outside, *r.denom()),
            radicand,
        }
    }

    pub fn scale(self, r: Rational) -> Self {
        SqrtRational {
            coeff: self.coeff * r,
            radicand: self.radicand,
        }
    }

    pub fn square(self) -> Rational {
        self.coeff * self.coeff * Rational::from_integer(self.radicand)
    }

    pub fn to_f64(self) -> f64 {
        ratio_to_f64(self.coeff) * (self.radicand as f64).sqrt()
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 1 {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "√{}", self.radicand)
        } else {
            write!(f, "{}·√{}", self.coeff, self.radicand)
        }
    }
}

/// Writes `n = outside² · radicand` with `radicand` square-free.
fn split_square(n: i64) -> (i64, i64) {
    let mut outside = 1;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        while rest % (p * p) == 0 {
            rest /= p * p;
            outside *= p;
        }
        p += 1;
    }
    (outside, rest)
}

pub fn ratio_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn to_q(v: IVec2) -> QVec2 {
    [qi(v[0]), qi(v[1])]
}

pub fn mat_to_q(m: IMat2) -> QMat2 {
    [[qi(m[0][0]), qi(m[0][1])], [qi(m[1][0]), qi(m[1][1])]]
}

pub fn q_identity() -> QMat2 {
    [[qi(1), qi(0)], [qi(0), qi(1)]]
}

pub fn q_mul(a: &QMat2, b: &QMat2) -> QMat2 {
    let mut out = [[qi(0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn q_apply(m: &QMat2, v: &QVec2) -> QVec2 {
    [
        m[0][0] * v[0] + m[0][1] * v[1],
        m[1][0] * v[0] + m[1][1] * v[1],
    ]
}

pub fn q_transpose(m: &QMat2) -> QMat2 {
    [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
}

pub fn q_det(m: &QMat2) -> Rational {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

pub fn q_inverse(m: &QMat2) -> QMat2 {
    let det = q_det(m);
    assert!(!det.is_zero(), "singular matrix");
    [
        [m[1][1] / det, -m[0][1] / det],
        [-m[1][0] / det, m[0][0] / det],
    ]
}

pub fn i_mul(a: &IMat2, b: &IMat2) -> IMat2 {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn i_apply(m: &IMat2, v: IVec2) -> IVec2 {
    [
        m[0][0] * v[0] + m[0][1] * v[1],
        m[1][0] * v[0] + m[1][1] * v[1],
    ]
}

pub fn i_transpose(m: &IMat2) -> IMat2 {
    [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
}

pub fn i_det(m: &IMat2) -> i64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Classical adjugate, `adj(m) · m = det(m) · I`.
pub fn i_adjugate(m: &IMat2) -> IMat2 {
    [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]
}

pub const I_IDENTITY: IMat2 = [[1, 0], [0, 1]];

/// Exact constants of one rank-2 root system.
#[derive(Clone, Debug, PartialEq)]
pub struct RootData {
    pub kind: AlgebraKind,
    /// `C_ij = 2⟨α_i, α_j⟩ / ⟨α_j, α_j⟩`.
    pub cartan: IMat2,
    pub coxeter: IMat2,
    /// Squared lengths `⟨α_0,α_0⟩`, `⟨α_1,α_1⟩`.
    pub root_norms: [Rational; 2],
    /// Gram matrix `⟨α_i, α_j⟩` of the simple roots.
    pub gram: QMat2,
    /// Coefficients of the highest root ξ in the α-basis.
    pub highest_root_marks: IVec2,
    /// Coefficients of the highest dual root η in the α∨-basis.
    pub dual_marks: IVec2,
    pub det_cartan: i64,
    pub weyl_order: i64,
    /// `K = |W| · |F|`, the continuous orthogonality constant.
    pub fundamental_volume: SqrtRational,
    /// `k = |W| det C / 2`, the discrete orthogonality constant.
    pub discrete_constant: i64,
    /// Matrices taking coordinates in each basis to α-coordinates, indexed
    /// like [`Basis::ALL`].
    to_alpha: [QMat2; 4],
}

/// Angle data between the two simple roots: `cos²θ` as an exact rational.
fn cos_squared(kind: AlgebraKind) -> Rational {
    match kind {
        // 3π/4
        AlgebraKind::C2 => q(1, 2),
        // 5π/6
        AlgebraKind::G2 => q(3, 4),
    }
}

/// Exact square root of a rational that is a perfect square.
fn exact_sqrt(r: Rational) -> Rational {
    let s = SqrtRational::sqrt_of(r);
    assert_eq!(s.radicand, 1, "{r} is not a rational square");
    s.coeff
}

impl RootData {
    pub fn new(kind: AlgebraKind) -> Self {
        let short = kind.short_index();
        let long = kind.long_index();
        let mut root_norms = [qi(0); 2];
        root_norms[long] = qi(2);
        root_norms[short] = match kind {
            AlgebraKind::C2 => qi(1),
            AlgebraKind::G2 => q(2, 3),
        };
        // The angle is obtuse, so the inner product is the negative root of
        // |α_0|²|α_1|² cos²θ.
        let cross = -exact_sqrt(root_norms[0] * root_norms[1] * cos_squared(kind));
        let gram = [[root_norms[0], cross], [cross, root_norms[1]]];

        let mut cartan = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                let c = qi(2) * gram[i][j] / gram[j][j];
                assert!(c.is_integer());
                cartan[i][j] = c.to_integer();
            }
        }
        // m_ij from the Cartan integers: C_ij C_ji = 4 cos²(π/m_ij).
        let product = cartan[0][1] * cartan[1][0];
        let m_off = match product {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            _ => unreachable!("not a crystallographic rank-2 Cartan matrix"),
        };
        let coxeter = [[1, m_off], [m_off, 1]];
        let det_cartan = i_det(&cartan);
        let weyl_order = 2 * m_off;

        // Basis changes, all through α-coordinates (column vectors).
        let c_q = mat_to_q(cartan);
        let c_inv_t = q_transpose(&q_inverse(&c_q));
        let two_over_norm = [
            [qi(2) / root_norms[0], qi(0)],
            [qi(0), qi(2) / root_norms[1]],
        ];
        let to_alpha = [
            q_identity(),
            two_over_norm,
            c_inv_t,
            q_mul(&c_inv_t, &two_over_norm),
        ];

        let (highest_root_marks, dual_marks) = highest_roots(&cartan, &gram, &root_norms);

        let mut data = RootData {
            kind,
            cartan,
            coxeter,
            root_norms,
            gram,
            highest_root_marks,
            dual_marks,
            det_cartan,
            weyl_order,
            fundamental_volume: SqrtRational::rational(qi(0)),
            discrete_constant: weyl_order * det_cartan / 2,
            to_alpha,
        };
        let area_f = data.fundamental_triangle_coordinate_area();
        data.fundamental_volume = data.alpha_vee_area_element().scale(area_f * qi(weyl_order));
        data
    }

    fn to_alpha_matrix(&self, basis: Basis) -> &QMat2 {
        let idx = Basis::ALL.iter().position(|b| *b == basis).unwrap();
        &self.to_alpha[idx]
    }

    /// Matrix `T` with `v_to = T v_from`.
    pub fn basis_change_matrix(&self, from: Basis, to: Basis) -> QMat2 {
        q_mul(
            &q_inverse(self.to_alpha_matrix(to)),
            self.to_alpha_matrix(from),
        )
    }

    pub fn change_basis(&self, v: &QVec2, from: Basis, to: Basis) -> QVec2 {
        q_apply(&self.basis_change_matrix(from, to), v)
    }

    /// Euclidean inner product of two vectors given in (possibly different)
    /// bases.
    pub fn inner(&self, u: &QVec2, u_basis: Basis, v: &QVec2, v_basis: Basis) -> Rational {
        let ua = self.change_basis(u, u_basis, Basis::Alpha);
        let va = self.change_basis(v, v_basis, Basis::Alpha);
        let gv = q_apply(&self.gram, &va);
        ua[0] * gv[0] + ua[1] * gv[1]
    }

    /// Gram matrix of the α∨-basis.
    pub fn coroot_gram(&self) -> QMat2 {
        let t = self.to_alpha_matrix(Basis::AlphaVee);
        q_mul(&q_transpose(t), &q_mul(&self.gram, t))
    }

    /// Euclidean area of the unit square of α∨-coordinates, `√det(Gram∨)`.
    pub fn alpha_vee_area_element(&self) -> SqrtRational {
        SqrtRational::sqrt_of(q_det(&self.coroot_gram()))
    }

    /// The vertices `0, ω∨_0/m_0, ω∨_1/m_1` of F in α∨-coordinates.
    pub fn fundamental_triangle(&self) -> [QVec2; 3] {
        let mut verts = [[qi(0); 2]; 3];
        for i in 0..2 {
            let mut e = [qi(0); 2];
            e[i] = q(1, self.highest_root_marks[i]);
            verts[i + 1] = self.change_basis(&e, Basis::OmegaVee, Basis::AlphaVee);
        }
        verts
    }

    /// The vertices `0, ω_0/m∨_0, ω_1/m∨_1` of F∨ in ω-coordinates.
    pub fn dual_fundamental_triangle(&self) -> [QVec2; 3] {
        let mut verts = [[qi(0); 2]; 3];
        for i in 0..2 {
            verts[i + 1][i] = q(1, self.dual_marks[i]);
        }
        verts
    }

    fn fundamental_triangle_coordinate_area(&self) -> Rational {
        let [a, b, c] = self.fundamental_triangle();
        triangle_signed_area(&a, &b, &c).abs()
    }

    /// Euclidean area of the fundamental domain F.
    pub fn fundamental_area(&self) -> SqrtRational {
        self.alpha_vee_area_element()
            .scale(self.fundamental_triangle_coordinate_area())
    }

    /// α∨-coordinates → ω∨-coordinates (`y = C x`), exact on integers.
    pub fn alpha_vee_to_omega_vee(&self, x: &QVec2) -> QVec2 {
        q_apply(&mat_to_q(self.cartan), x)
    }

    /// ω∨-coordinates → α∨-coordinates (`x = C⁻¹ y`).
    pub fn omega_vee_to_alpha_vee(&self, y: &QVec2) -> QVec2 {
        q_apply(&q_inverse(&mat_to_q(self.cartan)), y)
    }

    /// The coroot `ξ∨ = 2ξ/⟨ξ,ξ⟩` of the highest root, in ω∨-coordinates.
    pub fn highest_coroot_omega_vee(&self) -> QVec2 {
        let xi = to_q(self.highest_root_marks);
        let norm = self.inner(&xi, Basis::Alpha, &xi, Basis::Alpha);
        let xi_vee = [qi(2) * xi[0] / norm, qi(2) * xi[1] / norm];
        self.change_basis(&xi_vee, Basis::Alpha, Basis::OmegaVee)
    }
}

pub fn root_data(kind: AlgebraKind) -> RootData {
    RootData::new(kind)
}

/// `⟨λ, x⟩` for λ in ω-coordinates and x in α∨-coordinates.
pub fn pairing(lambda: IVec2, x: &QVec2) -> Rational {
    x[0] * lambda[0] + x[1] * lambda[1]
}

pub fn pairing_f64(lambda: IVec2, x: [f64; 2]) -> f64 {
    lambda[0] as f64 * x[0] + lambda[1] as f64 * x[1]
}

pub fn triangle_signed_area(a: &QVec2, b: &QVec2, c: &QVec2) -> Rational {
    ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])) / qi(2)
}

/// Highest root marks (α-basis) and highest dual root marks (α∨-basis),
/// found by closing the simple roots under the simple reflections.
fn highest_roots(cartan: &IMat2, gram: &QMat2, norms: &[Rational; 2]) -> (IVec2, IVec2) {
    // In α-coordinates r_i β = β − ⟨β, α_i∨⟩ α_i, with ⟨α_j, α_i∨⟩ = C_ji.
    let reflect = |beta: IVec2, i: usize| -> IVec2 {
        let coeff = beta[0] * cartan[0][i] + beta[1] * cartan[1][i];
        let mut out = beta;
        out[i] -= coeff;
        out
    };
    let mut roots: Vec<IVec2> = vec![[1, 0], [0, 1]];
    let mut frontier = roots.clone();
    while let Some(beta) = frontier.pop() {
        for i in 0..2 {
            let image = reflect(beta, i);
            if !roots.contains(&image) {
                roots.push(image);
                frontier.push(image);
            }
        }
    }
    let norm = |beta: &IVec2| -> Rational {
        let b = to_q(*beta);
        let gb = q_apply(gram, &b);
        b[0] * gb[0] + b[1] * gb[1]
    };
    let highest = *roots.iter().max_by_key(|b| b[0] + b[1]).unwrap();
    // Coroots β∨ = 2β/|β|², written over the coroot basis α_j∨ = 2α_j/|α_j|².
    let coroot = |beta: &IVec2| -> IVec2 {
        let n = norm(beta);
        let c = [qi(beta[0]) * norms[0] / n, qi(beta[1]) * norms[1] / n];
        assert!(c[0].is_integer() && c[1].is_integer());
        [c[0].to_integer(), c[1].to_integer()]
    };
    let highest_dual = roots
        .iter()
        .map(coroot)
        .max_by_key(|c| c[0] + c[1])
        .unwrap();
    (highest, highest_dual)
}

/// Nonnegative remainder.
pub fn modp(a: i64, m: i64) -> i64 {
    a.mod_floor(&m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_matrices_match_conventions() {
        assert_eq!(RootData::new(AlgebraKind::C2).cartan, [[2, -1], [-2, 2]]);
        assert_eq!(RootData::new(AlgebraKind::G2).cartan, [[2, -3], [-1, 2]]);
    }

    #[test]
    fn constants() {
        let c2 = root_data(AlgebraKind::C2);
        let g2 = root_data(AlgebraKind::G2);
        assert_eq!(c2.discrete_constant, 8);
        assert_eq!(g2.discrete_constant, 6);
        assert_eq!(c2.coxeter, [[1, 4], [4, 1]]);
        assert_eq!(g2.coxeter, [[1, 6], [6, 1]]);
        assert_eq!(c2.det_cartan, 2);
        assert_eq!(g2.det_cartan, 1);
        assert_eq!(c2.fundamental_volume, SqrtRational::rational(qi(2)));
        assert_eq!(
            g2.fundamental_volume,
            SqrtRational {
                coeff: qi(1),
                radicand: 3
            }
        );
        assert_eq!(g2.fundamental_volume.square(), qi(3));
    }

    #[test]
    fn highest_roots_and_marks() {
        let c2 = root_data(AlgebraKind::C2);
        let g2 = root_data(AlgebraKind::G2);
        // ξ = 2α_s + α_l for C2, 2α_l + 3α_s for G2.
        assert_eq!(c2.highest_root_marks, [2, 1]);
        assert_eq!(g2.highest_root_marks, [2, 3]);
        assert_eq!(c2.dual_marks, [1, 2]);
        assert_eq!(g2.dual_marks, [3, 2]);
    }

    #[test]
    fn basis_changes_match_hand_computed_values() {
        let c2 = root_data(AlgebraKind::C2);
        // C⁻¹ = ((1, 1/2), (1, 1)); ω∨ → α∨ is x = C⁻¹ y.
        assert_eq!(
            c2.basis_change_matrix(Basis::OmegaVee, Basis::AlphaVee),
            [[qi(1), q(1, 2)], [qi(1), qi(1)]]
        );
        assert_eq!(
            c2.change_basis(&[qi(1), qi(0)], Basis::OmegaVee, Basis::AlphaVee),
            [qi(1), qi(1)]
        );
        let g2 = root_data(AlgebraKind::G2);
        // α_l in ω-coordinates is the first row of C.
        assert_eq!(
            g2.change_basis(&[qi(1), qi(0)], Basis::Alpha, Basis::Omega),
            [qi(2), qi(-3)]
        );
        assert_eq!(
            g2.change_basis(&[qi(0), qi(1)], Basis::Alpha, Basis::Omega),
            [qi(-1), qi(2)]
        );
        assert_eq!(
            g2.basis_change_matrix(Basis::OmegaVee, Basis::AlphaVee),
            [[qi(2), qi(3)], [qi(1), qi(2)]]
        );
    }

    #[test]
    fn identity_conversion() {
        let d = root_data(AlgebraKind::G2);
        let v = [q(3, 7), q(-2, 5)];
        for b in Basis::ALL {
            assert_eq!(d.change_basis(&v, b, b), v);
        }
    }

    #[test]
    fn duality_of_bases() {
        for kind in AlgebraKind::ALL {
            let d = root_data(kind);
            for i in 0..2 {
                for j in 0..2 {
                    let mut ei = [qi(0); 2];
                    ei[i] = qi(1);
                    let mut ej = [qi(0); 2];
                    ej[j] = qi(1);
                    let delta = if i == j { qi(1) } else { qi(0) };
                    assert_eq!(d.inner(&ei, Basis::Omega, &ej, Basis::AlphaVee), delta);
                    assert_eq!(d.inner(&ei, Basis::OmegaVee, &ej, Basis::Alpha), delta);
                }
            }
        }
    }

    #[test]
    fn gram_reproduces_cartan() {
        for kind in AlgebraKind::ALL {
            let d = root_data(kind);
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(qi(2) * d.gram[i][j] / d.gram[j][j], qi(d.cartan[i][j]));
                }
            }
        }
    }

    #[test]
    fn areas() {
        let c2 = root_data(AlgebraKind::C2);
        assert_eq!(c2.fundamental_area(), SqrtRational::rational(q(1, 4)));
        let g2 = root_data(AlgebraKind::G2);
        assert_eq!(
            g2.fundamental_area(),
            SqrtRational {
                coeff: q(1, 12),
                radicand: 3
            }
        );
        assert!((g2.fundamental_area().to_f64() * 12.0 - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn highest_coroot() {
        // ξ∨ = ω∨_0 in both algebras.
        for kind in AlgebraKind::ALL {
            assert_eq!(root_data(kind).highest_coroot_omega_vee(), [qi(1), qi(0)]);
        }
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing([0, 0], &[q(1, 3), q(2, 7)]), qi(0));
        assert_eq!(pairing([1, 1], &[q(1, 2), q(1, 3)]), q(5, 6));
        assert_eq!(pairing([3, -2], &[q(1, 2), q(1, 4)]), qi(1));
    }

    #[test]
    fn sqrt_rational() {
        assert_eq!(
            SqrtRational::sqrt_of(qi(12)),
            SqrtRational {
                coeff: qi(2),
                radicand: 3
            }
        );
        assert_eq!(
            SqrtRational::sqrt_of(q(1, 3)),
            SqrtRational {
                coeff: q(1, 3),
                radicand: 3
            }
        );
        assert_eq!(SqrtRational::sqrt_of(qi(4)).to_string(), "2");
    }
}
