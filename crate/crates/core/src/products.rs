//! Decomposition of products `Ξ_λ · Ξ_λ'` of functions sharing a kernel into
//! signed sums `Σ_{w} s(w) Ξ_{λ + wλ'}`.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::algebra::IVec2;
use crate::domains::{in_weight_cone, Family};
use crate::orbitfn::xi;
use crate::{Algebra, Error};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Term {
    pub sign: i64,
    pub weight: IVec2,
    pub family: Family,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedWeightSum {
    pub terms: Vec<Term>,
}

impl SignedWeightSum {
    pub fn evaluate(&self, alg: &Algebra, x: [f64; 2]) -> Complex64 {
        self.terms
            .iter()
            .map(|t| xi(alg, t.family, t.weight, x) * t.sign as f64)
            .sum()
    }

    /// Terms as a sorted multiset of `(sign, weight)`.
    pub fn signed_weights(&self) -> Vec<(i64, IVec2)> {
        let mut v: Vec<_> = self.terms.iter().map(|t| (t.sign, t.weight)).collect();
        v.sort();
        v
    }
}

impl fmt::Display for SignedWeightSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let sign = if t.sign < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            if i > 0 {
                f.write_str(" ")?;
            }
            let coeff = if t.sign.abs() == 1 {
                String::new()
            } else {
                format!("{}*", t.sign.abs())
            };
            write!(
                f,
                "{sign}{coeff}Xi^{}_({},{})",
                t.family, t.weight[0], t.weight[1]
            )?;
        }
        Ok(())
    }
}

/// `Ξ^{left}_λ · Ξ^{right}_λ'` as a sum over the shared kernel.
///
/// Both + gives `Σ Ξ^+_{λ+wλ'}`; both − gives `Σ σ(w) Ξ^+_{λ+wλ'}`;
/// `+·−` gives `Σ σ(w) Ξ^−_{λ+wλ'}`; `−·+` gives `Σ Ξ^−_{λ+wλ'}`, where σ is
/// the family's mixing sign.
pub fn decompose(
    alg: &Algebra,
    left: Family,
    right: Family,
    lambda: IVec2,
    lambda_prime: IVec2,
) -> Result<SignedWeightSum, Error> {
    if left.kernel() != right.kernel() {
        return Err(Error::KernelMismatch(left, right));
    }
    let mixing = left.mixing_sign();
    let target = if left.is_plus() == right.is_plus() {
        left.plus()
    } else {
        left.minus()
    };
    let signed = !right.is_plus();
    let terms = alg
        .subgroup(left.kernel())
        .elements
        .iter()
        .map(|w| {
            let image = w.apply_weight(lambda_prime);
            Term {
                sign: if signed { mixing.sign(w) } else { 1 },
                weight: [lambda[0] + image[0], lambda[1] + image[1]],
                family: target,
            }
        })
        .collect();
    Ok(SignedWeightSum { terms })
}

/// Largest deviation `|Ξ_λ Ξ_λ' − Σ|` over `trials` random points of `[0,1)²`
/// in α∨-coordinates.
pub fn verify_decomposition<R: Rng>(
    alg: &Algebra,
    sum: &SignedWeightSum,
    left: Family,
    right: Family,
    lambda: IVec2,
    lambda_prime: IVec2,
    trials: usize,
    rng: &mut R,
) -> f64 {
    (0..trials)
        .map(|_| {
            let x = [rng.gen::<f64>(), rng.gen::<f64>()];
            let product = xi(alg, left, lambda, x) * xi(alg, right, lambda_prime, x);
            (product - sum.evaluate(alg, x)).norm()
        })
        .fold(0.0, f64::max)
}

/// Rewrites each term with a weight in the target family's cone using
/// `Ξ_{wμ} = s(w) Ξ_μ`, drops terms that vanish identically, and merges
/// equal weights.
pub fn normalize(alg: &Algebra, sum: &SignedWeightSum) -> SignedWeightSum {
    let mut merged: BTreeMap<(Family, IVec2), i64> = BTreeMap::new();
    for t in &sum.terms {
        let sub = alg.subgroup(t.family.kernel());
        let vanishes = sub
            .elements
            .iter()
            .any(|w| w.apply_weight(t.weight) == t.weight && t.family.sign(w) == -1);
        if vanishes {
            continue;
        }
        let (w, image) = sub
            .elements
            .iter()
            .map(|w| (w, w.apply_weight(t.weight)))
            .find(|(_, image)| in_weight_cone(&alg.data, t.family, *image))
            .expect("every kernel orbit meets the cone");
        *merged.entry((t.family, image)).or_default() += t.sign * t.family.sign(w);
    }
    SignedWeightSum {
        terms: merged
            .into_iter()
            .filter(|(_, s)| *s != 0)
            .map(|((family, weight), sign)| Term {
                sign,
                weight,
                family,
            })
            .collect(),
    }
}

/// One reference product identity for C2 with `λ = (5,3)`, `λ' = (1,1)`.
#[derive(Clone, Debug)]
pub struct ReferenceProduct {
    pub left: Family,
    pub right: Family,
    pub lambda: IVec2,
    pub lambda_prime: IVec2,
    pub target: Family,
    pub terms: Vec<(i64, IVec2)>,
}

/// Reference identities for C2: three blocks of three lines, one block per
/// kernel. The second `l` line is known to disagree with the computed sum.
pub fn reference_c2_products() -> Vec<ReferenceProduct> {
    use Family::*;
    let row = |left, right, target, terms: [(i64, IVec2); 4]| ReferenceProduct {
        left,
        right,
        lambda: [5, 3],
        lambda_prime: [1, 1],
        target,
        terms: terms.to_vec(),
    };
    vec![
        row(
            EPlus,
            EPlus,
            EPlus,
            [(1, [6, 4]), (1, [2, 5]), (1, [8, 1]), (1, [4, 2])],
        ),
        row(
            EMinus,
            EMinus,
            EPlus,
            [(1, [6, 4]), (-1, [2, 5]), (-1, [8, 1]), (1, [4, 2])],
        ),
        row(
            EPlus,
            EMinus,
            EMinus,
            [(1, [6, 4]), (-1, [2, 5]), (-1, [8, 1]), (1, [4, 2])],
        ),
        row(
            SPlus,
            SPlus,
            SPlus,
            [(1, [6, 4]), (1, [2, 4]), (1, [8, 2]), (1, [4, 2])],
        ),
        row(
            SMinus,
            SMinus,
            SPlus,
            [(1, [6, 4]), (-1, [2, 4]), (-1, [8, 2]), (1, [4, 2])],
        ),
        row(
            SPlus,
            SMinus,
            SMinus,
            [(1, [6, 4]), (-1, [2, 4]), (-1, [8, 2]), (1, [4, 2])],
        ),
        row(
            LPlus,
            LPlus,
            LPlus,
            [(1, [6, 4]), (1, [6, 1]), (1, [4, 5]), (1, [4, 2])],
        ),
        row(
            LMinus,
            LMinus,
            LPlus,
            [(1, [6, 4]), (-1, [2, 4]), (-1, [4, 5]), (1, [4, 2])],
        ),
        row(
            LPlus,
            LMinus,
            LMinus,
            [(1, [6, 4]), (-1, [6, 1]), (-1, [4, 5]), (1, [4, 2])],
        ),
    ]
}

impl ReferenceProduct {
    pub fn as_sum(&self) -> SignedWeightSum {
        SignedWeightSum {
            terms: self
                .terms
                .iter()
                .map(|&(sign, weight)| Term {
                    sign,
                    weight,
                    family: self.target,
                })
                .collect(),
        }
    }

    pub fn signed_weights(&self) -> Vec<(i64, IVec2)> {
        let mut v = self.terms.clone();
        v.sort();
        v
    }
}
