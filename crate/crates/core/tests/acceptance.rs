//! Acceptance criteria, one PASS/FAIL line each. Tolerances are fixed here.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use efunctions::algebra::q;
use efunctions::formats::sample_plot;
use efunctions::verify::{run, Check, Status, Suite, VerifyConfig};
use efunctions::{Algebra, AlgebraKind, Family};

struct Outcome {
    pass: bool,
    detail: String,
}

fn config() -> VerifyConfig {
    VerifyConfig {
        algebras: AlgebraKind::ALL.to_vec(),
        max_m: 12,
        seed: 2024,
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

fn suite_outcome(checks: &[Check]) -> Outcome {
    let failed: Vec<&Check> = checks.iter().filter(|c| c.status == Status::Fail).collect();
    let detail = if failed.is_empty() {
        format!("{} checks", checks.len())
    } else {
        failed
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    };
    Outcome {
        pass: failed.is_empty() && !checks.is_empty(),
        detail,
    }
}

fn run_suite(suite: Suite, cfg: VerifyConfig) -> Vec<Check> {
    run(&cfg, &[suite]).checks
}

fn constants() -> Outcome {
    let c2 = efunctions::root_data(AlgebraKind::C2);
    let g2 = efunctions::root_data(AlgebraKind::G2);
    let ok = c2.fundamental_volume.radicand == 1
        && c2.fundamental_volume.coeff == q(2, 1)
        && g2.fundamental_volume.square() == q(3, 1)
        && c2.discrete_constant == 8
        && g2.discrete_constant == 6;
    Outcome {
        pass: ok,
        detail: format!(
            "K(C2) = {}, K(G2) = {}, k(C2) = {}, k(G2) = {}",
            c2.fundamental_volume,
            g2.fundamental_volume,
            c2.discrete_constant,
            g2.discrete_constant
        ),
    }
}

fn tables() -> Outcome {
    suite_outcome(&run_suite(Suite::Tables, config()))
}

fn discrete() -> Outcome {
    suite_outcome(&run_suite(
        Suite::Discrete,
        VerifyConfig {
            max_m: 12,
            ..config()
        },
    ))
}

fn transforms() -> Outcome {
    suite_outcome(&run_suite(
        Suite::Transforms,
        VerifyConfig {
            max_m: 10,
            ..config()
        },
    ))
}

fn continuous() -> Outcome {
    suite_outcome(&run_suite(Suite::Continuous, config()))
}

fn closed_forms() -> Outcome {
    let checks = run_suite(Suite::ClosedForms, config());
    let forms = checks
        .iter()
        .filter(|c| c.name.starts_with("closed form"))
        .count();
    let readings = checks.iter().filter(|c| c.name.contains("reading")).count();
    let mut o = suite_outcome(&checks);
    o.pass &= forms == 12 && readings == 2;
    o.detail = format!(
        "{forms} closed forms, {readings} rejected readings of G2 e-: {}",
        o.detail
    );
    o
}

fn sums() -> Outcome {
    let checks = run_suite(Suite::Sums, config());
    let mut o = suite_outcome(&checks);
    o.pass &= checks.len() == 12;
    o
}

fn products() -> Outcome {
    let checks = run_suite(Suite::Products, config());
    let verbatim = checks
        .iter()
        .filter(|c| c.name.ends_with("matches reference"))
        .count();
    let infos: Vec<&Check> = checks.iter().filter(|c| c.status == Status::Info).collect();
    let discrepancy_reported =
        infos.len() == 1 && infos[0].name.contains("Xi^l-_(5,3) Xi^l-_(1,1)");
    let mut o = suite_outcome(&checks);
    o.pass &= verbatim == 8 && discrepancy_reported;
    o.detail = format!(
        "{verbatim}/9 reference lines verbatim, l-.l- line reported: {discrepancy_reported}; {}",
        o.detail
    );
    o
}

fn invariance() -> Outcome {
    suite_outcome(&run_suite(Suite::Invariance, config()))
}

fn sample_smoke() -> Outcome {
    let g = Algebra::new(AlgebraKind::G2);
    let mut worst = 0.0f64;
    let mut masked = true;
    for weight in [[1, 1], [2, 1], [3, 4]] {
        let s = sample_plot(&g, Family::EMinus, weight, 31).expect("valid resolution");
        worst = s.rows.iter().map(|r| r.re.abs()).fold(worst, f64::max);
        masked &= s.rows.iter().any(|r| r.mask == 0) && s.rows.iter().any(|r| r.mask == 1);
    }
    Outcome {
        pass: worst <= 1e-12 && masked,
        detail: format!("G2 e- max |re| = {worst:.3e}, mask present: {masked}"),
    }
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 constants K and k", constants, None),
        (
            "2 stabilizer and orbit tables",
            tables,
            Some(Duration::from_secs(1)),
        ),
        (
            "3 discrete orthogonality, M <= 12",
            discrete,
            Some(Duration::from_secs(30)),
        ),
        (
            "4 transform round trips and Parseval, M <= 10",
            transforms,
            Some(Duration::from_secs(30)),
        ),
        (
            "5 continuous orthogonality",
            continuous,
            Some(Duration::from_secs(10)),
        ),
        ("6 closed forms", closed_forms, None),
        ("7 sum identities", sums, None),
        ("8 product decompositions", products, None),
        ("9 invariances and zero sets", invariance, None),
        ("sample smoke test", sample_smoke, None),
    ];
    let mut all = true;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let mut o = f();
        let elapsed = start.elapsed();
        if let Some(limit) = limit.filter(|l| elapsed > *l) {
            o.pass = false;
            o.detail = format!("over the {} s limit; {}", limit.as_secs(), o.detail);
        }
        all &= o.pass;
        let secs = elapsed.as_secs_f64();
        println!(
            "{} {name} ({secs:.2} s): {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
