//! Fundamental domains, the six restricted domains `F^{σ±}`, the weight
//! cones `P_{σ±}`, and the finite grids `F_M^{σ±}` and weight sets `Λ_M^{σ±}`.
//!
//! Grid points are parametrized by integer triples `[c, a, b]`:
//!
//! * C2: `x = (a/M) ω∨_s + (b/M) ω∨_l` with `c + 2a + b = M`,
//! * G2: `x = (a/M) ω∨_l + (b/M) ω∨_s` with `c + 2a + 3b = M`,
//!
//! and weights by
//!
//! * C2: `λ = a ω_s + b ω_l` with `c + a + 2b = M`,
//! * G2: `λ = a ω_l + b ω_s` with `c + 3a + 2b = M`.
//!
//! In both cases `(a, b)` are the coordinates in the crate-wide basis order,
//! so the linear relation is `c + m·(a,b) = M` with the highest-root marks
//! `m` for grids and the dual marks `m∨` for weights.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    i_apply, mat_to_q, q_apply, qi, AlgebraKind, IVec2, QVec2, Rational, RootData,
};
use crate::weyl::{
    reflection_on_coweights, reflection_on_weights, weight_class_key, Generator, GroupElement,
    Kernel, SignHom, TorusPoint,
};
use crate::Error;

/// One of the six families of Ξ-functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "e+")]
    EPlus,
    #[serde(rename = "e-")]
    EMinus,
    #[serde(rename = "s+")]
    SPlus,
    #[serde(rename = "s-")]
    SMinus,
    #[serde(rename = "l+")]
    LPlus,
    #[serde(rename = "l-")]
    LMinus,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::EPlus,
        Family::EMinus,
        Family::SPlus,
        Family::SMinus,
        Family::LPlus,
        Family::LMinus,
    ];

    pub fn kernel(self) -> Kernel {
        match self {
            Family::EPlus | Family::EMinus => Kernel::We,
            Family::SPlus | Family::SMinus => Kernel::Ws,
            Family::LPlus | Family::LMinus => Kernel::Wl,
        }
    }

    pub fn is_plus(self) -> bool {
        matches!(self, Family::EPlus | Family::SPlus | Family::LPlus)
    }

    /// The sign character twisting the kernel sum; `None` for the + families.
    ///
    /// On `W^e` the homomorphisms σ^s and σ^l agree, on `W^s` σ^e and σ^l
    /// agree, and on `W^l` σ^e and σ^s agree, so each − family has a single
    /// well-defined twist.
    pub fn twist(self) -> Option<SignHom> {
        match self {
            Family::EMinus => Some(SignHom::Short),
            Family::SMinus => Some(SignHom::Long),
            Family::LMinus => Some(SignHom::Short),
            _ => None,
        }
    }

    /// The mixing sign used for this family's kernel letter, whether or not
    /// this particular family is twisted.
    pub fn mixing_sign(self) -> SignHom {
        match self.kernel() {
            Kernel::We => SignHom::Short,
            Kernel::Ws => SignHom::Long,
            Kernel::Wl => SignHom::Short,
        }
    }

    pub fn sign(self, w: &GroupElement) -> i64 {
        self.twist().map_or(1, |h| h.sign(w))
    }

    pub fn plus(self) -> Family {
        match self.kernel() {
            Kernel::We => Family::EPlus,
            Kernel::Ws => Family::SPlus,
            Kernel::Wl => Family::LPlus,
        }
    }

    pub fn minus(self) -> Family {
        match self.kernel() {
            Kernel::We => Family::EMinus,
            Kernel::Ws => Family::SMinus,
            Kernel::Wl => Family::LMinus,
        }
    }

    /// The simple reflection producing the second sheet of the domain.
    pub fn sheet_reflection(self) -> Generator {
        match self {
            Family::LPlus | Family::LMinus => Generator::Long,
            _ => Generator::Short,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::EPlus => "e+",
            Family::EMinus => "e-",
            Family::SPlus => "s+",
            Family::SMinus => "s-",
            Family::LPlus => "l+",
            Family::LMinus => "l-",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let normalized = s.trim().replace('−', "-").to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.label() == normalized)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown family `{s}` (expected e+, e-, s+, s-, l+ or l-)"
                ))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sheet {
    /// The triangle F itself (or F∨ for weights).
    Base,
    /// The reflected copy `r F`.
    Reflected,
}

/// Whether a coordinate of `[c, a, b]` may vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// `ℤ≥0`
    NonNeg,
    /// `ℕ`
    Pos,
}

impl Bound {
    fn admits_int(self, v: i64) -> bool {
        match self {
            Bound::NonNeg => v >= 0,
            Bound::Pos => v > 0,
        }
    }

    fn admits(self, v: Rational) -> bool {
        match self {
            Bound::NonNeg => !v.is_negative(),
            Bound::Pos => v.is_positive(),
        }
    }
}

/// Conditions on `[c, a, b]` for one sheet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SheetRule {
    pub c: Bound,
    pub a: Bound,
    pub b: Bound,
}

/// A point of the closed triangle removed from a base sheet, given as
/// fractions of M: `(a, b) = M · (num_a, num_b) / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Excluded {
    pub num: IVec2,
    pub den: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyRule {
    pub base: SheetRule,
    pub reflected: SheetRule,
    pub excluded: &'static [Excluded],
}

use Bound::{NonNeg as Z, Pos as N};

const ALL_NONNEG: SheetRule = SheetRule { c: Z, a: Z, b: Z };
const ALL_POS: SheetRule = SheetRule { c: N, a: N, b: N };

const ORIGIN: Excluded = Excluded {
    num: [0, 0],
    den: 1,
};

/// Conditions defining `F_M^{σ±}` (and, dropping the discreteness, `F^{σ±}`).
///
/// Given per algebra in the `[c, a, b]` parametrization. The e+ rows
/// are `F ∪ r_s F°`.
pub fn grid_rule(kind: AlgebraKind, family: Family) -> FamilyRule {
    match (kind, family) {
        (_, Family::EPlus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: ALL_POS,
            excluded: &[],
        },
        (AlgebraKind::C2, Family::SPlus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: SheetRule { c: Z, a: N, b: Z },
            excluded: &[],
        },
        (AlgebraKind::C2, Family::LPlus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: SheetRule { c: N, a: Z, b: N },
            excluded: &[],
        },
        (AlgebraKind::C2, Family::EMinus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: ALL_POS,
            // [M,0,0] and [0,0,M]
            excluded: &[
                ORIGIN,
                Excluded {
                    num: [0, 1],
                    den: 1,
                },
            ],
        },
        (AlgebraKind::C2, Family::SMinus) => FamilyRule {
            base: SheetRule { c: N, a: Z, b: N },
            reflected: ALL_POS,
            excluded: &[],
        },
        (AlgebraKind::C2, Family::LMinus) => FamilyRule {
            base: SheetRule { c: Z, a: N, b: Z },
            reflected: ALL_POS,
            excluded: &[],
        },
        (AlgebraKind::G2, Family::SPlus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: SheetRule { c: Z, a: Z, b: N },
            excluded: &[],
        },
        (AlgebraKind::G2, Family::LPlus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: SheetRule { c: N, a: N, b: Z },
            excluded: &[],
        },
        (AlgebraKind::G2, Family::EMinus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: ALL_POS,
            // (M,0,0) and (0,M/2,0)
            excluded: &[
                ORIGIN,
                Excluded {
                    num: [1, 0],
                    den: 2,
                },
            ],
        },
        (AlgebraKind::G2, Family::SMinus) => FamilyRule {
            base: SheetRule { c: N, a: N, b: Z },
            reflected: ALL_POS,
            excluded: &[],
        },
        (AlgebraKind::G2, Family::LMinus) => FamilyRule {
            base: SheetRule { c: Z, a: Z, b: N },
            reflected: ALL_POS,
            excluded: &[],
        },
    }
}

/// Conditions defining `Λ_M^{σ±}`.
pub fn weight_rule(kind: AlgebraKind, family: Family) -> FamilyRule {
    match (kind, family) {
        (_, Family::EPlus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: ALL_POS,
            excluded: &[],
        },
        (AlgebraKind::C2, Family::SPlus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: SheetRule { c: N, a: N, b: Z },
            excluded: &[],
        },
        (AlgebraKind::C2, Family::LPlus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: SheetRule { c: Z, a: Z, b: N },
            excluded: &[],
        },
        (AlgebraKind::C2, Family::EMinus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: ALL_POS,
            // [M,0,0] and [0,M,0]
            excluded: &[
                ORIGIN,
                Excluded {
                    num: [1, 0],
                    den: 1,
                },
            ],
        },
        (AlgebraKind::C2, Family::SMinus) => FamilyRule {
            base: SheetRule { c: Z, a: Z, b: N },
            reflected: ALL_POS,
            excluded: &[],
        },
        (AlgebraKind::C2, Family::LMinus) => FamilyRule {
            base: SheetRule { c: N, a: N, b: Z },
            reflected: ALL_POS,
            excluded: &[],
        },
        (AlgebraKind::G2, Family::SPlus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: SheetRule { c: N, a: Z, b: N },
            excluded: &[],
        },
        (AlgebraKind::G2, Family::LPlus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: SheetRule { c: Z, a: N, b: Z },
            excluded: &[],
        },
        (AlgebraKind::G2, Family::EMinus) => FamilyRule {
            base: ALL_NONNEG,
            reflected: ALL_POS,
            // [M,0,0] and [0,0,M/2]
            excluded: &[
                ORIGIN,
                Excluded {
                    num: [0, 1],
                    den: 2,
                },
            ],
        },
        (AlgebraKind::G2, Family::SMinus) => FamilyRule {
            base: SheetRule { c: Z, a: N, b: Z },
            reflected: ALL_POS,
            excluded: &[],
        },
        (AlgebraKind::G2, Family::LMinus) => FamilyRule {
            base: SheetRule { c: N, a: Z, b: N },
            reflected: ALL_POS,
            excluded: &[],
        },
    }
}

fn sheet_admits(rule: &SheetRule, cab: [i64; 3]) -> bool {
    rule.c.admits_int(cab[0]) && rule.a.admits_int(cab[1]) && rule.b.admits_int(cab[2])
}

fn is_excluded(excluded: &[Excluded], ab: IVec2, m: i64) -> bool {
    excluded
        .iter()
        .any(|e| ab[0] * e.den == e.num[0] * m && ab[1] * e.den == e.num[1] * m)
}

/// A point of `F_M^{σ±}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridPoint {
    pub cab: [i64; 3],
    pub sheet: Sheet,
    /// Numerators of the ω∨-coordinates over `M`.
    pub coords: IVec2,
    pub m: i64,
}

impl GridPoint {
    pub fn omega_vee(&self) -> QVec2 {
        [
            Rational::new(self.coords[0], self.m),
            Rational::new(self.coords[1], self.m),
        ]
    }

    pub fn alpha_vee(&self, data: &RootData) -> QVec2 {
        data.omega_vee_to_alpha_vee(&self.omega_vee())
    }

    pub fn torus(&self, data: &RootData) -> TorusPoint {
        TorusPoint::from_alpha_vee(&self.alpha_vee(data), self.m * data.det_cartan)
    }

    pub fn key(&self) -> (Sheet, [i64; 3]) {
        (self.sheet, self.cab)
    }
}

/// A weight of `Λ_M^{σ±}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightPoint {
    pub cab: [i64; 3],
    pub sheet: Sheet,
    /// ω-coordinates.
    pub coords: IVec2,
}

impl WeightPoint {
    pub fn key(&self) -> (Sheet, [i64; 3]) {
        (self.sheet, self.cab)
    }
}

/// All `[c, a, b]` with nonnegative entries and `c + marks·(a,b) = M`,
/// ordered by decreasing c, then increasing a.
pub fn cab_triples(marks: IVec2, m: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in 0..=m / marks[0] {
        for b in 0..=(m - marks[0] * a) / marks[1] {
            out.push([m - marks[0] * a - marks[1] * b, a, b]);
        }
    }
    out.sort_by_key(|t| (-t[0], t[1]));
    out
}

/// The grid `F_M^{σ±}`: base sheet first, then the reflected sheet.
pub fn grid_points(data: &RootData, family: Family, m: i64) -> Vec<GridPoint> {
    assert!(m >= 1, "M must be positive");
    let kind = data.kind;
    let rule = grid_rule(kind, family);
    let reflect = reflection_on_coweights(&data.cartan, family.sheet_reflection().index(kind));
    let triples = cab_triples(data.highest_root_marks, m);
    let mut points = Vec::new();
    for cab in &triples {
        if sheet_admits(&rule.base, *cab) && !is_excluded(rule.excluded, [cab[1], cab[2]], m) {
            points.push(GridPoint {
                cab: *cab,
                sheet: Sheet::Base,
                coords: [cab[1], cab[2]],
                m,
            });
        }
    }
    for cab in &triples {
        if sheet_admits(&rule.reflected, *cab) {
            points.push(GridPoint {
                cab: *cab,
                sheet: Sheet::Reflected,
                coords: i_apply(&reflect, [cab[1], cab[2]]),
                m,
            });
        }
    }
    let mut seen = HashSet::new();
    for p in &points {
        assert!(
            seen.insert(p.torus(data)),
            "duplicate torus point {:?} in F_M^{family}",
            p.cab
        );
    }
    points
}

/// The weight set `Λ_M^{σ±}`: base sheet first, then the reflected sheet.
pub fn weight_points(data: &RootData, family: Family, m: i64) -> Vec<WeightPoint> {
    assert!(m >= 1, "M must be positive");
    let kind = data.kind;
    let rule = weight_rule(kind, family);
    let reflect = reflection_on_weights(&data.cartan, family.sheet_reflection().index(kind));
    let triples = cab_triples(data.dual_marks, m);
    let mut points = Vec::new();
    for cab in &triples {
        if sheet_admits(&rule.base, *cab) && !is_excluded(rule.excluded, [cab[1], cab[2]], m) {
            points.push(WeightPoint {
                cab: *cab,
                sheet: Sheet::Base,
                coords: [cab[1], cab[2]],
            });
        }
    }
    for cab in &triples {
        if sheet_admits(&rule.reflected, *cab) {
            points.push(WeightPoint {
                cab: *cab,
                sheet: Sheet::Reflected,
                coords: i_apply(&reflect, [cab[1], cab[2]]),
            });
        }
    }
    let mut seen = HashSet::new();
    for p in &points {
        assert!(
            seen.insert(weight_class_key(&data.cartan, p.coords, m)),
            "duplicate class mod MQ {:?} in Λ_M^{family}",
            p.cab
        );
    }
    points
}

/// The plain grid `F_M` of the fundamental domain.
pub fn plain_grid(data: &RootData, m: i64) -> Vec<GridPoint> {
    cab_triples(data.highest_root_marks, m)
        .into_iter()
        .map(|cab| GridPoint {
            cab,
            sheet: Sheet::Base,
            coords: [cab[1], cab[2]],
            m,
        })
        .collect()
}

/// The plain weight set `Λ_M`.
pub fn plain_weights(data: &RootData, m: i64) -> Vec<WeightPoint> {
    cab_triples(data.dual_marks, m)
        .into_iter()
        .map(|cab| WeightPoint {
            cab,
            sheet: Sheet::Base,
            coords: [cab[1], cab[2]],
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Interior of the base triangle F.
    InteriorBase,
    /// On the boundary of F and included in the family's domain.
    Boundary,
    /// In the reflected sheet.
    Reflected,
    Outside,
}

/// `[c, a, b]` of a point in ω∨-coordinates, as rationals (scaled so that
/// `c + m·(a,b) = 1`).
fn continuous_cab(data: &RootData, y: &QVec2) -> [Rational; 3] {
    let m = data.highest_root_marks;
    [qi(1) - y[0] * m[0] - y[1] * m[1], y[0], y[1]]
}

fn continuous_sheet_admits(rule: &SheetRule, cab: &[Rational; 3]) -> bool {
    rule.c.admits(cab[0]) && rule.a.admits(cab[1]) && rule.b.admits(cab[2])
}

/// Classifies a point (α∨-coordinates) with respect to `F^{σ±}`.
pub fn domain_membership(data: &RootData, family: Family, x: &QVec2) -> Membership {
    let rule = grid_rule(data.kind, family);
    let y = data.alpha_vee_to_omega_vee(x);
    let cab = continuous_cab(data, &y);
    if continuous_sheet_admits(&ALL_NONNEG, &cab) {
        let excluded = rule.excluded.iter().any(|e| {
            y[0] == Rational::new(e.num[0], e.den) && y[1] == Rational::new(e.num[1], e.den)
        });
        if excluded || !continuous_sheet_admits(&rule.base, &cab) {
            return Membership::Outside;
        }
        return if cab.iter().all(|v| v.is_positive()) {
            Membership::InteriorBase
        } else {
            Membership::Boundary
        };
    }
    let reflect = mat_to_q(reflection_on_coweights(
        &data.cartan,
        family.sheet_reflection().index(data.kind),
    ));
    let preimage = q_apply(&reflect, &y);
    if continuous_sheet_admits(&rule.reflected, &continuous_cab(data, &preimage)) {
        Membership::Reflected
    } else {
        Membership::Outside
    }
}

/// Whether λ (ω-coordinates) lies in the weight cone `P_{σ±}`.
///
/// The cone is the dual-domain rule with the affine coordinate dropped: the
/// base sheet is `P⁺` minus the family's mirror conditions (and the origin
/// for e−), the reflected sheet is `r` applied to the admitted part of `P⁺`.
pub fn in_weight_cone(data: &RootData, family: Family, lambda: IVec2) -> bool {
    let rule = weight_rule(data.kind, family);
    let admits = |r: &SheetRule, v: IVec2| r.a.admits_int(v[0]) && r.b.admits_int(v[1]);
    if lambda[0] >= 0 && lambda[1] >= 0 {
        let origin_excluded = rule.excluded.contains(&ORIGIN);
        return admits(&rule.base, lambda) && !(origin_excluded && lambda == [0, 0]);
    }
    let reflect = reflection_on_weights(&data.cartan, family.sheet_reflection().index(data.kind));
    let preimage = i_apply(&reflect, lambda);
    preimage[0] >= 0 && preimage[1] >= 0 && admits(&rule.reflected, preimage)
}

/// The reflections of the affine Weyl group used when folding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reflection {
    Short,
    Long,
    /// Reflection in the affine wall `⟨x, ξ⟩ = 1`.
    Affine,
}

/// Applies one reflection to a point in ω∨-coordinates.
pub fn reflect_omega_vee(data: &RootData, r: Reflection, y: &QVec2) -> QVec2 {
    match r {
        Reflection::Short | Reflection::Long => {
            let g = if r == Reflection::Short {
                Generator::Short
            } else {
                Generator::Long
            };
            let m = mat_to_q(reflection_on_coweights(&data.cartan, g.index(data.kind)));
            q_apply(&m, y)
        }
        Reflection::Affine => {
            // r_0 y = y + (1 − ⟨x, ξ⟩) ξ∨
            let m = data.highest_root_marks;
            let u = data.highest_coroot_omega_vee();
            let t = qi(1) - y[0] * m[0] - y[1] * m[1];
            [y[0] + t * u[0], y[1] + t * u[1]]
        }
    }
}

/// Folds a point (α∨-coordinates) into F by reflecting in violated walls.
///
/// Each reflection removes at least one affine mirror separating the point
/// from the interior of F, so the walk terminates. Returns the folded point
/// and the reflections in the order applied.
pub fn fold_to_f(data: &RootData, x: &QVec2) -> (QVec2, Vec<Reflection>) {
    let kind = data.kind;
    let m = data.highest_root_marks;
    let mut y = data.alpha_vee_to_omega_vee(x);
    let mut applied = Vec::new();
    loop {
        let r = if y[kind.short_index()].is_negative() {
            Reflection::Short
        } else if y[kind.long_index()].is_negative() {
            Reflection::Long
        } else if y[0] * m[0] + y[1] * m[1] > qi(1) {
            Reflection::Affine
        } else {
            break;
        };
        y = reflect_omega_vee(data, r, &y);
        applied.push(r);
    }
    (data.omega_vee_to_alpha_vee(&y), applied)
}

/// Applies the reflections of [`fold_to_f`] in order to a point.
pub fn apply_reflections(data: &RootData, x: &QVec2, rs: &[Reflection]) -> QVec2 {
    let mut y = data.alpha_vee_to_omega_vee(x);
    for r in rs {
        y = reflect_omega_vee(data, *r, &y);
    }
    data.omega_vee_to_alpha_vee(&y)
}

/// Whether a point (α∨-coordinates) lies in the closed triangle F.
pub fn in_closed_f(data: &RootData, x: &QVec2) -> bool {
    let y = data.alpha_vee_to_omega_vee(x);
    continuous_sheet_admits(&ALL_NONNEG, &continuous_cab(data, &y))
}

pub fn is_zero_point(x: &QVec2) -> bool {
    x[0].is_zero() && x[1].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, root_data};

    #[test]
    fn c2_s_plus_m3_counts() {
        let d = root_data(AlgebraKind::C2);
        let pts = grid_points(&d, Family::SPlus, 3);
        let base = pts.iter().filter(|p| p.sheet == Sheet::Base).count();
        let refl = pts.iter().filter(|p| p.sheet == Sheet::Reflected).count();
        // c + 2a + b = 3 has 6 solutions; those with a ≥ 1 are [1,1,0], [0,1,1].
        assert_eq!((base, refl), (6, 2));
        let w = weight_points(&d, Family::SPlus, 3);
        let base = w.iter().filter(|p| p.sheet == Sheet::Base).count();
        let refl = w.iter().filter(|p| p.sheet == Sheet::Reflected).count();
        assert_eq!((base, refl), (6, 2));
    }

    #[test]
    fn c2_e_minus_exclusions() {
        let d = root_data(AlgebraKind::C2);
        let w = weight_points(&d, Family::EMinus, 4);
        assert!(!w
            .iter()
            .any(|p| p.sheet == Sheet::Base && p.cab == [4, 0, 0]));
        assert!(!w
            .iter()
            .any(|p| p.sheet == Sheet::Base && p.cab == [0, 4, 0]));
        let g = grid_points(&d, Family::EMinus, 4);
        assert!(!g
            .iter()
            .any(|p| p.sheet == Sheet::Base && p.cab == [4, 0, 0]));
        assert!(!g
            .iter()
            .any(|p| p.sheet == Sheet::Base && p.cab == [0, 0, 4]));
    }

    #[test]
    fn g2_e_minus_half_exclusion() {
        let d = root_data(AlgebraKind::G2);
        let odd = grid_points(&d, Family::EMinus, 5);
        let full = plain_grid(&d, 5);
        // Only the origin is removed from the base sheet when M is odd.
        assert_eq!(
            odd.iter().filter(|p| p.sheet == Sheet::Base).count(),
            full.len() - 1
        );
        let even = grid_points(&d, Family::EMinus, 6);
        assert!(!even
            .iter()
            .any(|p| p.sheet == Sheet::Base && p.cab == [0, 3, 0]));
        assert_eq!(
            even.iter().filter(|p| p.sheet == Sheet::Base).count(),
            plain_grid(&d, 6).len() - 2
        );
    }

    #[test]
    fn m_one_has_no_interior_reflected_points() {
        for kind in AlgebraKind::ALL {
            let d = root_data(kind);
            for fam in Family::ALL {
                let rule = grid_rule(kind, fam);
                if rule.reflected == ALL_POS {
                    assert!(grid_points(&d, fam, 1)
                        .iter()
                        .all(|p| p.sheet == Sheet::Base));
                }
            }
        }
    }

    #[test]
    fn base_weights_are_dominant() {
        for kind in AlgebraKind::ALL {
            let d = root_data(kind);
            for fam in Family::ALL {
                for w in weight_points(&d, fam, 7) {
                    if w.sheet == Sheet::Base {
                        assert!(w.coords[0] >= 0 && w.coords[1] >= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn reflected_coordinates_match_hand_computed_forms() {
        // C2 s+: −a ω∨_s + (2a+b) ω∨_l; C2 l+: (a+b) ω∨_s − b ω∨_l.
        let d = root_data(AlgebraKind::C2);
        for p in grid_points(&d, Family::SPlus, 9)
            .iter()
            .filter(|p| p.sheet == Sheet::Reflected)
        {
            let [_, a, b] = p.cab;
            assert_eq!(p.coords, [-a, 2 * a + b]);
        }
        for p in grid_points(&d, Family::LPlus, 9)
            .iter()
            .filter(|p| p.sheet == Sheet::Reflected)
        {
            let [_, a, b] = p.cab;
            assert_eq!(p.coords, [a + b, -b]);
        }
        for w in weight_points(&d, Family::LPlus, 9)
            .iter()
            .filter(|p| p.sheet == Sheet::Reflected)
        {
            let [_, a, b] = w.cab;
            assert_eq!(w.coords, [a + 2 * b, -b]);
        }
        // G2 s+: (a+3b) ω∨_l − b ω∨_s; G2 l+: −a ω∨_l + (a+b) ω∨_s.
        let d = root_data(AlgebraKind::G2);
        for p in grid_points(&d, Family::SPlus, 9)
            .iter()
            .filter(|p| p.sheet == Sheet::Reflected)
        {
            let [_, a, b] = p.cab;
            assert_eq!(p.coords, [a + 3 * b, -b]);
        }
        for p in grid_points(&d, Family::LPlus, 9)
            .iter()
            .filter(|p| p.sheet == Sheet::Reflected)
        {
            let [_, a, b] = p.cab;
            assert_eq!(p.coords, [-a, a + b]);
        }
        for w in weight_points(&d, Family::SPlus, 9)
            .iter()
            .filter(|p| p.sheet == Sheet::Reflected)
        {
            let [_, a, b] = w.cab;
            assert_eq!(w.coords, [a + b, -b]);
        }
        for w in weight_points(&d, Family::LPlus, 9)
            .iter()
            .filter(|p| p.sheet == Sheet::Reflected)
        {
            let [_, a, b] = w.cab;
            assert_eq!(w.coords, [-a, 3 * a + b]);
        }
    }

    #[test]
    fn membership_examples() {
        let d = root_data(AlgebraKind::C2);
        let origin = [qi(0), qi(0)];
        assert_eq!(
            domain_membership(&d, Family::SPlus, &origin),
            Membership::Boundary
        );
        assert_eq!(
            domain_membership(&d, Family::EMinus, &origin),
            Membership::Outside
        );
        let inner = d.omega_vee_to_alpha_vee(&[q(1, 7), q(1, 5)]);
        for fam in Family::ALL {
            assert_eq!(domain_membership(&d, fam, &inner), Membership::InteriorBase);
        }
        // Far away.
        assert_eq!(
            domain_membership(&d, Family::SPlus, &[qi(5), qi(-3)]),
            Membership::Outside
        );
        // Reflected sheet of l+ for C2 requires y > 0 and 2x + y < 1.
        let refl = |y: QVec2| q_apply(&mat_to_q(reflection_on_coweights(&d.cartan, 1)), &y);
        let on_affine = d.omega_vee_to_alpha_vee(&refl([q(1, 4), q(1, 2)]));
        assert_eq!(
            domain_membership(&d, Family::LPlus, &on_affine),
            Membership::Outside
        );
        let ok = d.omega_vee_to_alpha_vee(&refl([q(1, 4), q(1, 3)]));
        assert_eq!(
            domain_membership(&d, Family::LPlus, &ok),
            Membership::Reflected
        );
    }

    #[test]
    fn grid_points_are_members() {
        for kind in AlgebraKind::ALL {
            let d = root_data(kind);
            for fam in Family::ALL {
                for m in 1..=9 {
                    for p in grid_points(&d, fam, m) {
                        let mem = domain_membership(&d, fam, &p.alpha_vee(&d));
                        assert_ne!(mem, Membership::Outside, "{kind} {fam} M={m} {:?}", p);
                        assert_eq!(mem == Membership::Reflected, p.sheet == Sheet::Reflected);
                    }
                }
            }
        }
    }

    #[test]
    fn weight_cone_examples() {
        let d = root_data(AlgebraKind::C2);
        assert!(in_weight_cone(&d, Family::SPlus, [0, 0]));
        assert!(!in_weight_cone(&d, Family::EMinus, [0, 0]));
        assert!(in_weight_cone(&d, Family::SPlus, [-2, 5]));
        assert!(!in_weight_cone(&d, Family::SMinus, [3, 0]));
        assert!(in_weight_cone(&d, Family::LMinus, [3, 0]));
        assert!(!in_weight_cone(&d, Family::LMinus, [0, 3]));
        // r_l(1,2) = (5,-2) is in P_{l+}.
        assert!(in_weight_cone(&d, Family::LPlus, [5, -2]));
    }

    #[test]
    fn fold_inside_is_identity() {
        let d = root_data(AlgebraKind::G2);
        let x = d.omega_vee_to_alpha_vee(&[q(1, 8), q(1, 9)]);
        let (y, rs) = fold_to_f(&d, &x);
        assert_eq!(y, x);
        assert!(rs.is_empty());
    }

    #[test]
    fn fold_c2_omega_s_vee() {
        let d = root_data(AlgebraKind::C2);
        let x = d.omega_vee_to_alpha_vee(&[qi(1), qi(0)]);
        let (y, rs) = fold_to_f(&d, &x);
        assert!(in_closed_f(&d, &y));
        assert!(!rs.is_empty());
        assert_eq!(apply_reflections(&d, &x, &rs), y);
        // ω∨_s ≡ 0 mod Q∨ for C2 (ω∨_s = α∨_s + α∨_l), so it folds to the origin.
        assert_eq!(y, [qi(0), qi(0)]);
    }

    #[test]
    fn family_parse_roundtrip() {
        for f in Family::ALL {
            assert_eq!(f.label().parse::<Family>().unwrap(), f);
        }
        assert_eq!("E−".parse::<Family>().unwrap(), Family::EMinus);
        assert!("x+".parse::<Family>().is_err());
    }
}
