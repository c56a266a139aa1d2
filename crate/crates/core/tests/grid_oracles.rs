//! The finite grids and weight sets, and the folding routine, checked
//! against brute-force orbit enumeration.

use std::collections::{BTreeSet, HashMap};

use efunctions::algebra::{q, QVec2, Rational};
use efunctions::domains::{fold_to_f, grid_points, in_closed_f, weight_points};
use efunctions::weyl::{weight_class_key, TorusPoint};
use efunctions::{Algebra, AlgebraKind, Family};

/// All of `(1/M) P∨ / Q∨` as torus points.
fn all_torus_points(g: &Algebra, m: i64) -> Vec<TorusPoint> {
    let d = g.data.det_cartan;
    let den = m * d;
    let c = g.data.cartan;
    let mut out = Vec::new();
    for k0 in 0..den {
        for k1 in 0..den {
            // ω∨-numerators C·k must be multiples of det C.
            let y0 = c[0][0] * k0 + c[0][1] * k1;
            let y1 = c[1][0] * k0 + c[1][1] * k1;
            if y0 % d == 0 && y1 % d == 0 {
                out.push(TorusPoint::new([k0, k1], den));
            }
        }
    }
    out
}

/// Orbits of the family's kernel on which the family does not vanish
/// identically, keyed by their smallest element.
fn admissible_torus_orbits(g: &Algebra, fam: Family, m: i64) -> BTreeSet<TorusPoint> {
    let sub = g.subgroup(fam.kernel());
    let mut out = BTreeSet::new();
    for x in all_torus_points(g, m) {
        let killed = sub
            .elements
            .iter()
            .any(|w| x.apply(w) == x && fam.sign(w) == -1);
        if !killed {
            out.insert(sub.elements.iter().map(|w| x.apply(w)).min().unwrap());
        }
    }
    out
}

fn admissible_weight_orbits(g: &Algebra, fam: Family, m: i64) -> BTreeSet<[i64; 2]> {
    let c = g.data.cartan;
    let sub = g.subgroup(fam.kernel());
    let span = m * g.data.det_cartan;
    let mut out = BTreeSet::new();
    for a in 0..span {
        for b in 0..span {
            let key = |l: [i64; 2]| weight_class_key(&c, l, m);
            let k = key([a, b]);
            let killed = sub
                .elements
                .iter()
                .any(|w| key(w.apply_weight([a, b])) == k && fam.sign(w) == -1);
            if !killed {
                out.insert(
                    sub.elements
                        .iter()
                        .map(|w| key(w.apply_weight([a, b])))
                        .min()
                        .unwrap(),
                );
            }
        }
    }
    out
}

#[test]
fn grid_points_represent_each_admissible_orbit_once() {
    for kind in AlgebraKind::ALL {
        let g = Algebra::new(kind);
        for fam in Family::ALL {
            for m in 1..=9 {
                let sub = g.subgroup(fam.kernel());
                let expected = admissible_torus_orbits(&g, fam, m);
                let mut seen: HashMap<TorusPoint, [i64; 3]> = HashMap::new();
                for p in grid_points(&g.data, fam, m) {
                    let t = p.torus(&g.data);
                    let rep = sub.elements.iter().map(|w| t.apply(w)).min().unwrap();
                    assert!(
                        expected.contains(&rep),
                        "{kind} {fam} M={m}: {:?} lies on a vanishing orbit",
                        p.cab
                    );
                    if let Some(other) = seen.insert(rep, p.cab) {
                        panic!(
                            "{kind} {fam} M={m}: {:?} and {other:?} share an orbit",
                            p.cab
                        );
                    }
                }
                assert_eq!(seen.len(), expected.len(), "{kind} {fam} M={m}");
            }
        }
    }
}

#[test]
fn weight_points_represent_each_admissible_class_once() {
    for kind in AlgebraKind::ALL {
        let g = Algebra::new(kind);
        let c = g.data.cartan;
        for fam in Family::ALL {
            for m in 1..=9 {
                let sub = g.subgroup(fam.kernel());
                let expected = admissible_weight_orbits(&g, fam, m);
                let mut seen = BTreeSet::new();
                for w in weight_points(&g.data, fam, m) {
                    let rep = sub
                        .elements
                        .iter()
                        .map(|e| weight_class_key(&c, e.apply_weight(w.coords), m))
                        .min()
                        .unwrap();
                    assert!(expected.contains(&rep), "{kind} {fam} M={m}: {:?}", w.cab);
                    assert!(
                        seen.insert(rep),
                        "{kind} {fam} M={m}: duplicate class at {:?}",
                        w.cab
                    );
                }
                assert_eq!(seen.len(), expected.len(), "{kind} {fam} M={m}");
            }
        }
    }
}

/// Every `w x + q` with `w ∈ W` and `|q_i| ≤ r` that lies in the closed F.
fn brute_force_fold(g: &Algebra, x: &QVec2, r: i64) -> Vec<QVec2> {
    // Reduce modulo Q∨ first so that the images w x stay bounded.
    let x = x.map(|c| c - c.floor());
    let mut out = Vec::new();
    for w in g.group.elements() {
        let wx = w.apply_point(&x);
        for s0 in -r..=r {
            for s1 in -r..=r {
                let y = [
                    wx[0] + Rational::from_integer(s0),
                    wx[1] + Rational::from_integer(s1),
                ];
                if in_closed_f(&g.data, &y) {
                    out.push(y);
                }
            }
        }
    }
    out
}

#[test]
fn fold_agrees_with_brute_force_search() {
    for kind in AlgebraKind::ALL {
        let g = Algebra::new(kind);
        for n0 in -13..=13 {
            for n1 in -13..=13 {
                let x = [q(n0, 5), q(n1, 7)];
                let (y, _) = fold_to_f(&g.data, &x);
                let candidates = brute_force_fold(&g, &x, 8);
                assert!(
                    candidates.contains(&y),
                    "{kind} {x:?} folded to {y:?}, candidates {candidates:?}"
                );
            }
        }
    }
}
