use efunctions::domains::{grid_points, weight_points};
use efunctions::transform::{gram_errors, DiscreteTransform};
use efunctions::{Algebra, AlgebraKind, Family};

#[test]
fn grid_and_weight_counts_agree() {
    for kind in AlgebraKind::ALL {
        let g = Algebra::new(kind);
        for fam in Family::ALL {
            for m in 1..=16 {
                let n = grid_points(&g.data, fam, m).len();
                let k = weight_points(&g.data, fam, m).len();
                assert_eq!(n, k, "{kind} {fam} M={m}");
            }
        }
    }
}

#[test]
fn discrete_gram_is_diagonal() {
    for kind in AlgebraKind::ALL {
        let g = Algebra::new(kind);
        for fam in Family::ALL {
            for m in 1..=12 {
                let t = match DiscreteTransform::new(&g, fam, m) {
                    Ok(t) => t,
                    Err(_) => continue,
                };
                let (diag, off) = gram_errors(&t);
                assert!(
                    diag < 1e-8 && off < 1e-8,
                    "{kind} {fam} M={m}: diag {diag:e} off {off:e}"
                );
            }
        }
    }
}
