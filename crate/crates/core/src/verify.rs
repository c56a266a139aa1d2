//! Verification suites: group structure, tables, invariances, identities,
//! orthogonality, transforms and product decompositions.
//!
//! Every suite is deterministic for a fixed seed, so reports are
//! reproducible byte for byte.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{i_mul, q, AlgebraKind, IVec2, QVec2, Rational, I_IDENTITY};
use crate::domains::{grid_points, in_weight_cone, weight_points, Family};
use crate::orbitfn::{
    g2_e_minus_closed_form, psi, sum_identity_homs, xi, xi_closed_form, xi_exact, G2EMinusReading,
};
use crate::products::{decompose, reference_c2_products, verify_decomposition, SignedWeightSum};
use crate::tables::{check_table_d, check_torus_tables};
use crate::transform::{continuous_expected, continuous_inner, gram_errors, DiscreteTransform};
use crate::weyl::{orbit_size_torus, stab_order_d, torus_stabilizer, Generator, Kernel, SignHom};
use crate::{Algebra, Error};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Suite {
    Group,
    Tables,
    Invariance,
    Sums,
    ClosedForms,
    Continuous,
    Discrete,
    Transforms,
    Products,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Group,
        Suite::Tables,
        Suite::Invariance,
        Suite::Sums,
        Suite::ClosedForms,
        Suite::Continuous,
        Suite::Discrete,
        Suite::Transforms,
        Suite::Products,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Group => "group",
            Suite::Tables => "tables",
            Suite::Invariance => "invariance",
            Suite::Sums => "sums",
            Suite::ClosedForms => "closed-forms",
            Suite::Continuous => "continuous",
            Suite::Discrete => "discrete",
            Suite::Transforms => "transforms",
            Suite::Products => "products",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::Parse(format!(
                    "unknown suite `{s}` (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub algebra: Option<AlgebraKind>,
    pub status: Status,
    pub name: String,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alg = self.algebra.map_or("--".to_string(), |a| a.to_string());
        write!(
            f,
            "[{}] {:<12} {} {}",
            self.status,
            self.suite.name(),
            alg,
            self.name
        )?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn of_suite(&self, suite: Suite) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(move |c| c.suite == suite)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let fails = self.failures().count();
        let infos = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Info)
            .count();
        writeln!(
            f,
            "{} checks, {} failed, {} informational: {}",
            self.checks.len(),
            fails,
            infos,
            if fails == 0 { "PASS" } else { "FAIL" }
        )
    }
}

/// Parameters of a verification run.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub algebras: Vec<AlgebraKind>,
    /// Largest M for the discrete suites.
    pub max_m: i64,
    pub seed: u64,
    /// Tolerance for pointwise identities (closed forms, products, round trips).
    pub tol_identity: f64,
    /// Relative tolerance for discrete Gram matrices.
    pub tol_gram: f64,
    /// Tolerance for invariances, sum identities and boundary zeros.
    pub tol_invariance: f64,
    /// Absolute tolerance for continuous inner products.
    pub tol_continuous: f64,
    /// Relative tolerance for Parseval's identity.
    pub tol_parseval: f64,
    pub trials_invariance: usize,
    pub trials_sums: usize,
    pub trials_closed: usize,
    pub trials_products: usize,
    pub continuous_pairs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            algebras: AlgebraKind::ALL.to_vec(),
            max_m: 8,
            seed: 0,
            tol_identity: 1e-10,
            tol_gram: 1e-8,
            tol_invariance: 1e-12,
            tol_continuous: 1e-9,
            tol_parseval: 1e-9,
            trials_invariance: 100,
            trials_sums: 200,
            trials_closed: 1000,
            trials_products: 50,
            continuous_pairs: 20,
        }
    }
}

struct Ctx<'a> {
    alg: &'a Algebra,
    cfg: &'a VerifyConfig,
    suite: Suite,
    rng: ChaCha8Rng,
    out: Vec<Check>,
}

impl Ctx<'_> {
    fn push(&mut self, status: Status, name: impl Into<String>, detail: impl Into<String>) {
        self.out.push(Check {
            suite: self.suite,
            algebra: Some(self.alg.kind()),
            status,
            name: name.into(),
            detail: detail.into(),
        });
    }

    fn check(&mut self, ok: bool, name: impl Into<String>, detail: impl Into<String>) {
        self.push(if ok { Status::Pass } else { Status::Fail }, name, detail);
    }

    fn bound(&mut self, err: f64, tol: f64, name: impl Into<String>) {
        self.check(
            err <= tol,
            name,
            format!("max error {err:.3e} (tol {tol:.0e})"),
        );
    }

    fn weight(&mut self, r: i64) -> IVec2 {
        [self.rng.gen_range(-r..=r), self.rng.gen_range(-r..=r)]
    }

    fn point(&mut self) -> [f64; 2] {
        [self.rng.gen_range(-1.0..1.0), self.rng.gen_range(-1.0..1.0)]
    }
}

fn rng_for(seed: u64, suite: Suite, kind: AlgebraKind) -> ChaCha8Rng {
    let salt = (suite as u64) * 16 + kind as u64;
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
}

/// Runs one suite for one algebra.
pub fn run_suite(alg: &Algebra, suite: Suite, cfg: &VerifyConfig) -> Vec<Check> {
    let mut ctx = Ctx {
        alg,
        cfg,
        suite,
        rng: rng_for(cfg.seed, suite, alg.kind()),
        out: Vec::new(),
    };
    match suite {
        Suite::Group => group_suite(&mut ctx),
        Suite::Tables => tables_suite(&mut ctx),
        Suite::Invariance => invariance_suite(&mut ctx),
        Suite::Sums => sums_suite(&mut ctx),
        Suite::ClosedForms => closed_forms_suite(&mut ctx),
        Suite::Continuous => continuous_suite(&mut ctx),
        Suite::Discrete => discrete_suite(&mut ctx),
        Suite::Transforms => transforms_suite(&mut ctx),
        Suite::Products => products_suite(&mut ctx),
    }
    ctx.out
}

/// Runs the selected suites for every configured algebra, in a fixed order.
pub fn run(cfg: &VerifyConfig, suites: &[Suite]) -> Report {
    let algebras: Vec<Algebra> = cfg.algebras.iter().map(|k| Algebra::new(*k)).collect();
    let mut report = Report::default();
    for suite in suites {
        for alg in &algebras {
            report.checks.extend(run_suite(alg, *suite, cfg));
        }
    }
    report
}

fn group_suite(ctx: &mut Ctx) {
    let alg = ctx.alg;
    let g = &alg.group;
    let els = g.elements();
    let expected_order = alg.data.weyl_order as usize;
    ctx.check(
        g.order() == expected_order,
        "order",
        format!("|W| = {}", g.order()),
    );
    let mats: HashSet<_> = els.iter().map(|w| *w.matrix()).collect();
    let closed = els.iter().all(|a| {
        els.iter()
            .all(|b| mats.contains(&i_mul(a.matrix(), b.matrix())))
    });
    ctx.check(
        closed && mats.contains(&I_IDENTITY),
        "closure and identity",
        "",
    );
    let inverses = els.iter().all(|a| {
        els.iter()
            .any(|b| i_mul(a.matrix(), b.matrix()) == I_IDENTITY)
    });
    ctx.check(inverses, "inverses", "");
    let assoc = els.iter().all(|a| {
        els.iter().all(|b| {
            els.iter().all(|c| {
                i_mul(&i_mul(a.matrix(), b.matrix()), c.matrix())
                    == i_mul(a.matrix(), &i_mul(b.matrix(), c.matrix()))
            })
        })
    });
    ctx.check(assoc, "associativity", "");
    let words_ok = els.iter().all(|w| {
        *g.element(w.word()).matrix() == *w.matrix()
            && w.det() == if w.word().len() % 2 == 0 { 1 } else { -1 }
    });
    ctx.check(words_ok, "words reproduce matrices and determinants", "");

    for hom in SignHom::ALL {
        let homomorphic = els.iter().all(|a| {
            els.iter()
                .all(|b| hom.sign(&g.compose(a, b)) == hom.sign(a) * hom.sign(b))
        });
        ctx.check(homomorphic, format!("{} is a homomorphism", hom.name()), "");
        ctx.check(
            hom.is_admissible(&alg.data.coxeter),
            format!("{} is admissible", hom.name()),
            "",
        );
    }
    let det_ok = els.iter().all(|w| SignHom::Det.sign(w) == w.det());
    let product_ok = els
        .iter()
        .all(|w| SignHom::Det.sign(w) == SignHom::Short.sign(w) * SignHom::Long.sign(w));
    ctx.check(det_ok && product_ok, "sigma^e = det = sigma^s sigma^l", "");

    for k in Kernel::ALL {
        let sub = alg.subgroup(k);
        let set: HashSet<_> = sub.elements.iter().map(|w| *w.matrix()).collect();
        let closed = sub.elements.iter().all(|a| {
            sub.elements
                .iter()
                .all(|b| set.contains(&i_mul(a.matrix(), b.matrix())))
        });
        ctx.check(
            sub.order() * 2 == expected_order && closed && set.contains(&I_IDENTITY),
            format!("W^{} is an index-2 subgroup", k.letter()),
            format!("order {}", sub.order()),
        );
    }
    ctx.check(
        matches!(g.kernel(SignHom::Identity), Err(Error::TrivialKernel)),
        "identity homomorphism rejected as kernel",
        "",
    );

    // d_λ = d_{rλ} for dominant λ.
    let mut conj_ok = true;
    for a in 0..6 {
        for b in 0..6 {
            for r in [Generator::Short, Generator::Long] {
                let rl = g.generator(r).apply_weight([a, b]);
                for k in Kernel::ALL {
                    conj_ok &=
                        stab_order_d(alg.subgroup(k), [a, b]) == stab_order_d(alg.subgroup(k), rl);
                }
            }
        }
    }
    ctx.check(
        conj_ok,
        "stabilizers of lambda and r lambda have equal order",
        "",
    );

    // Orbit-stabilizer on the torus.
    let mut os_ok = true;
    let mut count = 0;
    for m in 1..=ctx.cfg.max_m {
        for p in crate::domains::plain_grid(&alg.data, m) {
            let t = p.torus(&alg.data);
            for k in Kernel::ALL {
                let sub = alg.subgroup(k);
                os_ok &= orbit_size_torus(sub, &t) * torus_stabilizer(sub, &t).len() == sub.order();
                count += 1;
            }
        }
    }
    ctx.check(
        os_ok,
        "orbit-stabilizer on the torus",
        format!("{count} cases"),
    );
}

fn tables_suite(ctx: &mut Ctx) {
    let alg = ctx.alg;
    for row in check_table_d(alg, 8) {
        ctx.check(
            row.pass,
            format!("d {}", row.pattern),
            format!(
                "expected {:?} computed {:?} over {} weights",
                row.expected, row.computed, row.instances
            ),
        );
    }
    // 9, 10 and 11 supply the third instance of patterns needing 3 | M.
    let ms: Vec<i64> = (4..=12).collect();
    let mut instances: std::collections::BTreeMap<(String, String), usize> = Default::default();
    for m in &ms {
        for row in check_torus_tables(alg, *m) {
            *instances
                .entry((row.table.symbol().to_string(), row.pattern.clone()))
                .or_default() += row.instances;
            ctx.check(
                row.pass,
                format!("{} {} M={}", row.table.symbol(), row.pattern, m),
                format!(
                    "expected {:?} computed {:?} over {} instance(s)",
                    row.expected, row.computed, row.instances
                ),
            );
        }
    }
    let thin: Vec<String> = instances
        .iter()
        .filter(|(_, n)| **n < 3)
        .map(|((t, p), n)| format!("{t} {p} ({n})"))
        .collect();
    ctx.check(
        thin.is_empty(),
        "at least 3 instances per pattern",
        if thin.is_empty() {
            format!("M in {ms:?}")
        } else {
            thin.join(", ")
        },
    );
}

fn boundary_points(alg: &Algebra, which: &[&str]) -> Vec<QVec2> {
    // Points of the edges of F, parametrized in ω∨-coordinates.
    let kind = alg.kind();
    let m = alg.data.highest_root_marks;
    let (s, l) = (kind.short_index(), kind.long_index());
    let ts = [q(0, 1), q(1, 7), q(1, 3), q(1, 2), q(5, 8), q(1, 1)];
    let mut out = Vec::new();
    for edge in which {
        for t in ts {
            let mut y = [Rational::from_integer(0); 2];
            match *edge {
                // ⟨x, α_s⟩ = 0: move along the long coordinate.
                "s" => y[l] = t / m[l],
                "l" => y[s] = t / m[s],
                // ⟨x, ξ⟩ = 1
                "0" => {
                    y[s] = t / m[s];
                    y[l] = (Rational::from_integer(1) - t) / m[l];
                }
                // (Y_l ∪ Y_0) ∩ Y_s: the two vertices on Y_s.
                "vertices" => {
                    out.push(
                        alg.data
                            .omega_vee_to_alpha_vee(&[Rational::from_integer(0); 2]),
                    );
                    let mut v = [Rational::from_integer(0); 2];
                    v[l] = q(1, m[l]);
                    out.push(alg.data.omega_vee_to_alpha_vee(&v));
                    break;
                }
                _ => unreachable!(),
            }
            out.push(alg.data.omega_vee_to_alpha_vee(&y));
        }
    }
    out
}

fn invariance_suite(ctx: &mut Ctx) {
    let alg = ctx.alg;
    let trials = ctx.cfg.trials_invariance;
    let tol = ctx.cfg.tol_invariance;
    for fam in Family::ALL {
        let sub = alg.subgroup(fam.kernel());
        let (mut e_x, mut e_w, mut e_p) = (0.0f64, 0.0f64, 0.0f64);
        for _ in 0..trials {
            let lambda = ctx.weight(6);
            let x = ctx.point();
            let v = xi(alg, fam, lambda, x);
            let shift = [
                ctx.rng.gen_range(-3..=3) as f64,
                ctx.rng.gen_range(-3..=3) as f64,
            ];
            e_p = e_p.max((xi(alg, fam, lambda, [x[0] + shift[0], x[1] + shift[1]]) - v).norm());
            for w in &sub.elements {
                let s = fam.sign(w) as f64;
                e_x = e_x.max((xi(alg, fam, lambda, w.apply_point_f64(x)) - v * s).norm());
                e_w = e_w.max((xi(alg, fam, w.apply_weight(lambda), x) - v * s).norm());
            }
        }
        let kind = if fam.is_plus() {
            "invariance"
        } else {
            "anti-invariance"
        };
        ctx.bound(e_x, tol, format!("{fam} kernel {kind} in x"));
        ctx.bound(e_w, tol, format!("{fam} kernel {kind} in lambda"));
        ctx.bound(e_p, tol, format!("{fam} periodicity under Q-vee"));
    }
    let zero_sets: [(Family, &[&str], &str); 3] = [
        (Family::EMinus, &["vertices"], "(Y_l u Y_0) n Y_s"),
        (Family::SMinus, &["l", "0"], "Y_l u Y_0"),
        (Family::LMinus, &["s"], "Y_s"),
    ];
    for (fam, edges, label) in zero_sets {
        let pts = boundary_points(alg, edges);
        let mut err = 0.0f64;
        for _ in 0..trials {
            let lambda = ctx.weight(9);
            for p in &pts {
                err = err.max(xi_exact(alg, fam, lambda, p).norm());
            }
        }
        ctx.bound(
            err,
            tol,
            format!("{fam} vanishes on {label} ({} exact points)", pts.len()),
        );
    }
}

fn sums_suite(ctx: &mut Ctx) {
    let alg = ctx.alg;
    for fam in Family::ALL {
        let (h1, h2) = sum_identity_homs(fam);
        let mut err = 0.0f64;
        for _ in 0..ctx.cfg.trials_sums {
            let lambda = ctx.weight(8);
            let x = ctx.point();
            let lhs = xi(alg, fam, lambda, x) * 2.0;
            err = err.max((lhs - psi(alg, h1, lambda, x) - psi(alg, h2, lambda, x)).norm());
        }
        ctx.bound(
            err,
            ctx.cfg.tol_invariance,
            format!("2 Xi^{fam} = psi^{} + psi^{}", h1.name(), h2.name()),
        );
    }
}

fn closed_forms_suite(ctx: &mut Ctx) {
    let alg = ctx.alg;
    let kind = alg.kind();
    let tol = ctx.cfg.tol_identity;
    let n = ctx.cfg.trials_closed;
    let samples: Vec<(IVec2, [f64; 2])> = (0..n).map(|_| (ctx.weight(8), ctx.point())).collect();
    for fam in Family::ALL {
        let err = samples
            .iter()
            .map(|(l, x)| (xi_closed_form(kind, fam, *l, *x) - xi(alg, fam, *l, *x)).norm())
            .fold(0.0, f64::max);
        ctx.bound(err, tol, format!("closed form {fam} vs kernel sum"));
    }
    if kind == AlgebraKind::G2 {
        for (reading, label) in [
            (G2EMinusReading::Verbatim, "verbatim"),
            (G2EMinusReading::Regrouped, "regrouped only"),
        ] {
            let err = samples
                .iter()
                .map(|(l, x)| {
                    (g2_e_minus_closed_form(reading, *l, *x) - xi(alg, Family::EMinus, *l, *x))
                        .norm()
                })
                .fold(0.0, f64::max);
            ctx.check(
                err > 1e3 * tol,
                format!("e- closed form, {label} reading, is not an identity"),
                format!("max deviation {err:.3e}"),
            );
        }
    }
}

fn cone_weights(alg: &Algebra, fam: Family, r: i64) -> Vec<IVec2> {
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            if in_weight_cone(&alg.data, fam, [a, b]) {
                out.push([a, b]);
            }
        }
    }
    out
}

fn continuous_suite(ctx: &mut Ctx) {
    let alg = ctx.alg;
    let tol = ctx.cfg.tol_continuous;
    for fam in Family::ALL {
        let weights = cone_weights(alg, fam, 4);
        let mut pairs: Vec<(IVec2, IVec2)> = Vec::new();
        // Boundary-pattern weights first, then random diagonal and off-diagonal pairs.
        for w in weights
            .iter()
            .filter(|w| (w[0] == 0) != (w[1] == 0))
            .take(4)
        {
            pairs.push((*w, *w));
        }
        while pairs.len() < ctx.cfg.continuous_pairs {
            let a = weights[ctx.rng.gen_range(0..weights.len())];
            let b = if pairs.len().is_multiple_of(2) {
                a
            } else {
                weights[ctx.rng.gen_range(0..weights.len())]
            };
            pairs.push((a, b));
        }
        let mut err = 0.0f64;
        let mut worst = String::new();
        for (a, b) in &pairs {
            let got = continuous_inner(alg, fam, *a, *b).expect("weights are in the cone");
            let want = continuous_expected(alg, fam, *a, *b);
            let e = (got - Complex64::new(want, 0.0)).norm();
            if e >= err {
                err = e;
                worst = format!("{a:?},{b:?}");
            }
        }
        ctx.check(
            err <= tol,
            format!("{fam} continuous orthogonality ({} pairs)", pairs.len()),
            format!("max error {err:.3e} at {worst} (tol {tol:.0e})"),
        );
    }
}

fn discrete_suite(ctx: &mut Ctx) {
    let alg = ctx.alg;
    let kind = alg.kind();
    let tol = ctx.cfg.tol_gram;
    for fam in Family::ALL {
        let mut count_ok = true;
        let mut diag = 0.0f64;
        let mut off = 0.0f64;
        let mut empty = Vec::new();
        let mut eps_const = true;
        let mut h_one = true;
        for m in 1..=ctx.cfg.max_m {
            let np = grid_points(&alg.data, fam, m).len();
            let nw = weight_points(&alg.data, fam, m).len();
            count_ok &= np == nw;
            let t = match DiscreteTransform::new(alg, fam, m) {
                Ok(t) => t,
                Err(Error::EmptyGrid { .. }) => {
                    empty.push(m);
                    continue;
                }
                Err(e) => panic!("{e}"),
            };
            let (d, o) = gram_errors(&t);
            diag = diag.max(d);
            off = off.max(o);
            if fam == Family::SMinus {
                let c = alg.group.order() / 2;
                eps_const &= t.epsilon.iter().all(|e| *e == c);
            }
            if fam == Family::LMinus {
                h_one &= t.h.iter().all(|h| *h == 1);
            }
        }
        ctx.check(
            count_ok,
            format!("{fam} |F_M| = |Lambda_M| for M <= {}", ctx.cfg.max_m),
            "",
        );
        let note = if empty.is_empty() {
            String::new()
        } else {
            format!(", empty for M in {empty:?}")
        };
        ctx.check(
            diag <= tol && off <= tol,
            format!("{fam} Gram = diag(k M^2 h)"),
            format!("diag rel {diag:.3e}, off-diag/kM^2 {off:.3e} (tol {tol:.0e}){note}"),
        );
        if fam == Family::SMinus {
            ctx.check(
                eps_const,
                "s- epsilon is constant",
                format!("{} on every grid point", alg.group.order() / 2),
            );
        }
        if fam == Family::LMinus {
            ctx.check(
                h_one,
                "l- h-vee is identically 1",
                "the normalization k M^2 needs no h factor",
            );
        }
    }
    let _ = kind;
}

fn random_c(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn transforms_suite(ctx: &mut Ctx) {
    let alg = ctx.alg;
    let tol = ctx.cfg.tol_identity;
    for fam in Family::ALL {
        let (mut e_fi, mut e_if, mut e_p) = (0.0f64, 0.0f64, 0.0f64);
        for m in 2..=ctx.cfg.max_m.max(2) {
            let t = match DiscreteTransform::new(alg, fam, m) {
                Ok(t) => t,
                Err(_) => continue,
            };
            let rng = &mut ctx.rng;
            let samples = t.samples_from_fn(|_| random_c(rng));
            let coeffs = t.forward(&samples).expect("complete samples");
            let back = t.inverse(&coeffs).expect("complete coefficients");
            e_fi = e_fi.max(back.max_abs_diff(&samples));
            let es = t.sample_energy(&samples);
            let ec = t.coeff_energy(&coeffs);
            e_p = e_p.max((es - ec).abs() / es);
            let rng = &mut ctx.rng;
            let c = t.coeffs_from_fn(|_| random_c(rng));
            let again = t
                .forward(&t.inverse(&c).expect("complete"))
                .expect("complete");
            e_if = e_if.max(again.max_abs_diff(&c));
        }
        ctx.bound(e_fi, tol, format!("{fam} inverse(forward(f)) = f"));
        ctx.bound(e_if, tol, format!("{fam} forward(inverse(c)) = c"));
        ctx.bound(e_p, ctx.cfg.tol_parseval, format!("{fam} Parseval"));
    }
}

/// All ordered family pairs sharing a kernel.
pub fn product_pairs() -> Vec<(Family, Family)> {
    let mut out = Vec::new();
    for l in Family::ALL {
        for r in Family::ALL {
            if l.kernel() == r.kernel() {
                out.push((l, r));
            }
        }
    }
    out
}

fn products_suite(ctx: &mut Ctx) {
    let alg = ctx.alg;
    let tol = ctx.cfg.tol_identity;
    if alg.kind() == AlgebraKind::C2 {
        for ex in reference_c2_products() {
            let d =
                decompose(alg, ex.left, ex.right, ex.lambda, ex.lambda_prime).expect("same kernel");
            let label = format!(
                "Xi^{}_({},{}) Xi^{}_({},{})",
                ex.left,
                ex.lambda[0],
                ex.lambda[1],
                ex.right,
                ex.lambda_prime[0],
                ex.lambda_prime[1]
            );
            let computed_err = verify_decomposition(
                alg,
                &d,
                ex.left,
                ex.right,
                ex.lambda,
                ex.lambda_prime,
                100,
                &mut ctx.rng,
            );
            let same = d.signed_weights() == ex.signed_weights()
                && d.terms.iter().all(|t| t.family == ex.target);
            if same {
                ctx.check(
                    computed_err <= tol,
                    format!("{label} matches reference"),
                    format!("= {d}; max error {computed_err:.3e}"),
                );
            } else {
                let reference = ex.as_sum();
                let reference_err = verify_decomposition(
                    alg,
                    &reference,
                    ex.left,
                    ex.right,
                    ex.lambda,
                    ex.lambda_prime,
                    100,
                    &mut ctx.rng,
                );
                ctx.check(
                    computed_err <= tol,
                    format!("{label} computed"),
                    format!("= {d}; max error {computed_err:.3e}"),
                );
                ctx.push(
                    Status::Info,
                    format!("{label} reference line differs"),
                    format!("reference {reference} has max error {reference_err:.3e}"),
                );
            }
        }
    }
    for (l, r) in product_pairs() {
        let mut err = 0.0f64;
        let mut comm = 0.0f64;
        for _ in 0..ctx.cfg.trials_products {
            let a = ctx.weight(6);
            let b = ctx.weight(6);
            let d = decompose(alg, l, r, a, b).expect("same kernel");
            err = err.max(verify_decomposition(alg, &d, l, r, a, b, 4, &mut ctx.rng));
            let swapped: SignedWeightSum = decompose(alg, r, l, b, a).expect("same kernel");
            let x = ctx.point();
            comm = comm.max((d.evaluate(alg, x) - swapped.evaluate(alg, x)).norm());
        }
        ctx.bound(err, tol, format!("Xi^{l} Xi^{r} decomposition"));
        ctx.bound(
            comm,
            tol,
            format!("Xi^{l} Xi^{r} commutes with Xi^{r} Xi^{l}"),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn quick_run_passes() {
        let cfg = VerifyConfig {
            max_m: 4,
            trials_invariance: 10,
            trials_sums: 10,
            trials_closed: 50,
            trials_products: 5,
            continuous_pairs: 6,
            ..VerifyConfig::default()
        };
        let report = run(&cfg, &Suite::ALL);
        assert!(report.passed(), "{report}");
    }
}
