//! Evaluation of the generic orbit functions ψ^σ and of the six Ξ families,
//! together with explicit closed forms in α∨-coordinates `(x, y)`.
//!
//! The functions with the sign homomorphisms σ^s and σ^l are sometimes
//! called S^l- and S^s-functions respectively (note the crossed letters);
//! this module only exposes the homomorphism-labelled form `psi(σ, …)`.

use num_complex::Complex64;
use num_traits::Zero;

use crate::algebra::{pairing, AlgebraKind, IVec2, QVec2, Rational};
use crate::domains::Family;
use crate::weyl::{SignHom, TorusPoint};
use crate::Algebra;

use std::f64::consts::TAU;

/// A point in α∨-coordinates, exact or floating.
#[derive(Clone, Debug, PartialEq)]
pub enum EvalPoint {
    Exact(QVec2),
    Real([f64; 2]),
}

impl EvalPoint {
    pub fn to_f64(&self) -> [f64; 2] {
        match self {
            EvalPoint::Exact(x) => [
                crate::algebra::ratio_to_f64(x[0]),
                crate::algebra::ratio_to_f64(x[1]),
            ],
            EvalPoint::Real(x) => *x,
        }
    }
}

/// `e^{2πit}` after reducing t to `[-1/2, 1/2]`.
pub fn cis_turns(t: f64) -> Complex64 {
    let r = t - t.round();
    Complex64::from_polar(1.0, TAU * r)
}

/// `e^{2πi t}` for an exact rational t, reduced modulo 1 exactly.
pub fn cis_exact(t: Rational) -> Complex64 {
    let n = *t.numer();
    let d = *t.denom();
    cis_fraction(n, d)
}

/// `e^{2πi n/d}` with `n` reduced modulo `d` in integers.
pub fn cis_fraction(n: i64, d: i64) -> Complex64 {
    let mut r = n.rem_euclid(d);
    if 2 * r > d {
        r -= d;
    }
    // Exact values at multiples of a quarter turn avoid stray 1e-17 terms.
    if r == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if 2 * r == d {
        return Complex64::new(-1.0, 0.0);
    }
    if 4 * r == d {
        return Complex64::new(0.0, 1.0);
    }
    if 4 * r == -d {
        return Complex64::new(0.0, -1.0);
    }
    Complex64::from_polar(1.0, TAU * (r as f64) / (d as f64))
}

fn dot(lambda: IVec2, x: [f64; 2]) -> f64 {
    lambda[0] as f64 * x[0] + lambda[1] as f64 * x[1]
}

/// `ψ^σ_λ(x) = Σ_{w∈W} σ(w) e^{2πi⟨wλ, x⟩}` over the whole Weyl group.
pub fn psi(alg: &Algebra, hom: SignHom, lambda: IVec2, x: [f64; 2]) -> Complex64 {
    alg.group
        .elements()
        .iter()
        .map(|w| cis_turns(dot(w.apply_weight(lambda), x)) * hom.sign(w) as f64)
        .sum()
}

/// `Ξ_λ(x)`: the family's kernel sum, twisted for the − families.
pub fn xi(alg: &Algebra, family: Family, lambda: IVec2, x: [f64; 2]) -> Complex64 {
    alg.subgroup(family.kernel())
        .elements
        .iter()
        .map(|w| cis_turns(dot(w.apply_weight(lambda), x)) * family.sign(w) as f64)
        .sum()
}

/// `Ξ_λ(x)` with exact phase reduction.
pub fn xi_exact(alg: &Algebra, family: Family, lambda: IVec2, x: &QVec2) -> Complex64 {
    alg.subgroup(family.kernel())
        .elements
        .iter()
        .map(|w| cis_exact(pairing(w.apply_weight(lambda), x)) * family.sign(w) as f64)
        .sum()
}

/// `Ξ_λ` at a torus point, with integer phase reduction.
pub fn xi_torus(alg: &Algebra, family: Family, lambda: IVec2, x: &TorusPoint) -> Complex64 {
    alg.subgroup(family.kernel())
        .elements
        .iter()
        .map(|w| {
            cis_fraction(x.phase_numerator(w.apply_weight(lambda)), x.den) * family.sign(w) as f64
        })
        .sum()
}

pub fn xi_at(alg: &Algebra, family: Family, lambda: IVec2, x: &EvalPoint) -> Complex64 {
    match x {
        EvalPoint::Exact(q) => xi_exact(alg, family, lambda, q),
        EvalPoint::Real(r) => xi(alg, family, lambda, *r),
    }
}

/// The sum of two ψ functions equal to `2 Ξ` for the given family.
pub fn sum_identity_homs(family: Family) -> (SignHom, SignHom) {
    match family {
        Family::EPlus => (SignHom::Identity, SignHom::Det),
        Family::EMinus => (SignHom::Short, SignHom::Long),
        Family::SPlus => (SignHom::Identity, SignHom::Short),
        Family::SMinus => (SignHom::Long, SignHom::Det),
        Family::LPlus => (SignHom::Identity, SignHom::Long),
        Family::LMinus => (SignHom::Short, SignHom::Det),
    }
}

fn cos_t(t: f64) -> f64 {
    cis_turns(t).re
}

fn sin_t(t: f64) -> f64 {
    cis_turns(t).im
}

fn e_t(t: f64) -> Complex64 {
    cis_turns(t)
}

/// Reading of the G2 e− closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G2EMinusReading {
    /// Taken literally: the middle term subtracts `(2a+b)x` outside the
    /// factor 2π and the last term has `x` in both places.
    Verbatim,
    /// Middle term regrouped under 2π, last term still with `x` twice.
    Regrouped,
    /// Middle term regrouped and the last variable read as `y`.
    Corrected,
}

/// The G2 e− closed form under a chosen reading.
pub fn g2_e_minus_closed_form(reading: G2EMinusReading, lambda: IVec2, p: [f64; 2]) -> Complex64 {
    let (a, b) = (lambda[0] as f64, lambda[1] as f64);
    let (x, y) = (p[0], p[1]);
    let first = sin_t(a * x + b * y);
    let middle = match reading {
        G2EMinusReading::Verbatim => (TAU * (3.0 * a + b) * y - (2.0 * a + b) * x).sin(),
        _ => sin_t((3.0 * a + b) * y - (2.0 * a + b) * x),
    };
    let last = match reading {
        G2EMinusReading::Corrected => sin_t((a + b) * x - (3.0 * a + 2.0 * b) * y),
        _ => sin_t((a + b) * x - (3.0 * a + 2.0 * b) * x),
    };
    Complex64::new(0.0, 2.0 * (first + middle + last))
}

/// Explicit closed form of `Ξ_{(a,b)}(x, y)` with `(x, y)` in α∨-coordinates.
pub fn xi_closed_form(kind: AlgebraKind, family: Family, lambda: IVec2, p: [f64; 2]) -> Complex64 {
    let (a, b) = (lambda[0] as f64, lambda[1] as f64);
    let (x, y) = (p[0], p[1]);
    let real = |v: f64| Complex64::new(v, 0.0);
    match (kind, family) {
        (AlgebraKind::C2, Family::EPlus) => {
            real(2.0 * (cos_t(a * x + b * y) + cos_t((a + 2.0 * b) * x - (a + b) * y)))
        }
        (AlgebraKind::C2, Family::EMinus) => {
            real(2.0 * (cos_t(a * x + b * y) - cos_t((a + 2.0 * b) * x - (a + b) * y)))
        }
        (AlgebraKind::C2, Family::SPlus) => {
            real(2.0 * (cos_t(a * x + b * y) + cos_t((a + 2.0 * b) * x - b * y)))
        }
        (AlgebraKind::C2, Family::SMinus) => {
            real(2.0 * (cos_t(a * x + b * y) - cos_t((a + 2.0 * b) * x - b * y)))
        }
        (AlgebraKind::C2, Family::LPlus) => {
            real(2.0 * (cos_t(a * x + b * y) + cos_t(a * x - (a + b) * y)))
        }
        (AlgebraKind::C2, Family::LMinus) => {
            real(2.0 * (cos_t(a * x + b * y) - cos_t(a * x - (a + b) * y)))
        }
        (AlgebraKind::G2, Family::EPlus) => real(
            2.0 * (cos_t(a * x + b * y)
                + cos_t(-(2.0 * a + b) * x + (3.0 * a + b) * y)
                + cos_t((a + b) * x - (3.0 * a + 2.0 * b) * y)),
        ),
        (AlgebraKind::G2, Family::EMinus) => {
            g2_e_minus_closed_form(G2EMinusReading::Corrected, lambda, p)
        }
        (AlgebraKind::G2, Family::SPlus | Family::SMinus) => {
            let s = if family == Family::SPlus { 1.0 } else { -1.0 };
            e_t(a * x + b * y)
                + e_t(-a * x + (3.0 * a + b) * y) * s
                + e_t((2.0 * a + b) * x - (3.0 * a + 2.0 * b) * y) * s
                + e_t((a + b) * x - (3.0 * a + 2.0 * b) * y)
                + e_t(-(2.0 * a + b) * x + (3.0 * a + b) * y)
                + e_t(-(a + b) * x + b * y) * s
        }
        (AlgebraKind::G2, Family::LPlus | Family::LMinus) => {
            let s = if family == Family::LPlus { 1.0 } else { -1.0 };
            e_t(a * x + b * y)
                + e_t((a + b) * x - b * y) * s
                + e_t(-(2.0 * a + b) * x + (3.0 * a + 2.0 * b) * y) * s
                + e_t((a + b) * x - (3.0 * a + 2.0 * b) * y)
                + e_t(-(2.0 * a + b) * x + (3.0 * a + b) * y)
                + e_t(a * x - (3.0 * a + b) * y) * s
        }
    }
}

/// Whether a complex value is zero within `tol`.
pub fn is_zero_within(v: Complex64, tol: f64) -> bool {
    v.norm() <= tol || v.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};
    use crate::Algebra;

    #[test]
    fn psi_trivial_values() {
        for kind in AlgebraKind::ALL {
            let g = Algebra::new(kind);
            let x = [0.123, 0.456];
            let v = psi(&g, SignHom::Identity, [0, 0], x);
            assert!((v - Complex64::new(g.group.order() as f64, 0.0)).norm() < 1e-12);
            assert!(psi(&g, SignHom::Det, [0, 0], x).norm() < 1e-12);
        }
        let g = Algebra::new(AlgebraKind::C2);
        assert!(psi(&g, SignHom::Short, [1, 0], [0.0, 0.0]).norm() < 1e-12);
    }

    #[test]
    fn xi_trivial_values() {
        let c2 = Algebra::new(AlgebraKind::C2);
        let g2 = Algebra::new(AlgebraKind::G2);
        assert!(
            (c2.xi(Family::SPlus, [0, 0], [0.3, 0.1]) - Complex64::new(4.0, 0.0)).norm() < 1e-12
        );
        assert!(
            (g2.xi(Family::SPlus, [0, 0], [0.3, 0.1]) - Complex64::new(6.0, 0.0)).norm() < 1e-12
        );
        for g in [&c2, &g2] {
            assert!(g.xi(Family::EMinus, [3, 2], [0.0, 0.0]).norm() < 1e-12);
        }
    }

    #[test]
    fn exact_and_real_agree() {
        let g = Algebra::new(AlgebraKind::G2);
        let x = [q(3, 7), q(-2, 5)];
        let xf = EvalPoint::Exact(x).to_f64();
        for fam in Family::ALL {
            let a = xi_exact(&g, fam, [4, -3], &x);
            let b = xi(&g, fam, [4, -3], xf);
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn cis_fraction_quarter_turns_are_exact() {
        assert_eq!(cis_fraction(0, 5), Complex64::new(1.0, 0.0));
        assert_eq!(cis_fraction(3, 6), Complex64::new(-1.0, 0.0));
        assert_eq!(cis_fraction(-1, 4), Complex64::new(0.0, -1.0));
        assert_eq!(cis_exact(qi(7)), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn c2_s_plus_closed_form_example() {
        let v = xi_closed_form(AlgebraKind::C2, Family::SPlus, [1, 0], [0.25, 0.0]);
        assert!(v.norm() < 1e-12);
        let c2 = Algebra::new(AlgebraKind::C2);
        assert!(c2.xi(Family::SPlus, [1, 0], [0.25, 0.0]).norm() < 1e-12);
        let w = xi_closed_form(AlgebraKind::C2, Family::LPlus, [0, 0], [0.7, -0.2]);
        assert!((w - Complex64::new(4.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn g2_e_minus_is_imaginary() {
        let g = Algebra::new(AlgebraKind::G2);
        for (lam, x) in [([2, 1], [0.13, 0.71]), ([-3, 5], [0.4, 0.05])] {
            assert!(g.xi(Family::EMinus, lam, x).re.abs() < 1e-12);
        }
    }
}
