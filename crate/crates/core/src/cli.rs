//! The `efn` command line: plot sampling, table regeneration, transforms on
//! files, verification suites and product decompositions.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{AlgebraKind, IVec2};
use crate::domains::{cab_triples, grid_rule, Family};
use crate::formats::{
    read_vector_csv, read_vector_json, sample_plot, write_plot_csv, write_plot_json,
    write_vector_csv, write_vector_json, Format, GridFile,
};
use crate::orbitfn::xi_torus;
use crate::products::{decompose, normalize, verify_decomposition, SignedWeightSum};
use crate::tables::{check_table_d, check_torus_tables, RowCheck};
use crate::transform::{format_key, DataVector, DiscreteTransform, VectorKind};
use crate::verify::{self, Suite, VerifyConfig};
use crate::{io_error, Algebra, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "efn",
    version,
    about = "E-functions of C2 and G2: sampling, transforms and checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample one function on a uniform lattice over its domain, for plotting.
    Sample(SampleArgs),
    /// Regenerate the stabilizer and orbit tables and compare with reference values.
    Tables(TablesArgs),
    /// Forward or inverse discrete transform of a vector file.
    Transform(TransformArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Decompose a product of two functions sharing a kernel.
    Decompose(DecomposeArgs),
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub algebra: AlgebraKind,
    #[arg(long)]
    pub family: Family,
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    pub weight: IVec2,
    #[arg(long, default_value_t = 101)]
    pub resolution: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    /// Both algebras when omitted.
    #[arg(long)]
    pub algebra: Option<AlgebraKind>,
    #[arg(long = "M", default_value_t = 5)]
    pub m: i64,
    /// Also list `F_M` and `Λ_M` of this family.
    #[arg(long)]
    pub family: Option<Family>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Plain text when omitted.
    #[arg(long)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// Input vector (JSON, or CSV by extension). Without it, samples of
    /// `--weight` (or random samples) on the grid are generated.
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub algebra: Option<AlgebraKind>,
    #[arg(long)]
    pub family: Option<Family>,
    #[arg(long = "M")]
    pub m: Option<i64>,
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    pub weight: Option<IVec2>,
    #[arg(long, value_enum, default_value_t = Direction::Forward)]
    pub direction: Direction,
    /// Apply the transform and its inverse and report the reconstruction error.
    #[arg(long)]
    pub roundtrip: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub format: Option<Format>,
    #[arg(long = "tol-identity", default_value_t = 1e-10)]
    pub tol_identity: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Both algebras when omitted.
    #[arg(long)]
    pub algebra: Option<AlgebraKind>,
    /// Largest M for the discrete suites.
    #[arg(long = "M", default_value_t = 8)]
    pub m: i64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Repeatable or comma separated; all suites when omitted.
    #[arg(long, value_delimiter = ',')]
    pub suite: Vec<Suite>,
    #[arg(long = "tol-identity", default_value_t = 1e-10)]
    pub tol_identity: f64,
    #[arg(long = "tol-gram", default_value_t = 1e-8)]
    pub tol_gram: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Plain text when omitted.
    #[arg(long)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub algebra: AlgebraKind,
    /// Family of the left factor.
    #[arg(long)]
    pub family: Family,
    /// Family of the right factor; defaults to `--family`.
    #[arg(long)]
    pub right: Option<Family>,
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    pub weight: IVec2,
    #[arg(long = "right-weight", value_parser = parse_weight, allow_hyphen_values = true)]
    pub right_weight: IVec2,
    /// Fold every term into the target family's cone and merge.
    #[arg(long)]
    pub normalize: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Plain text when omitted.
    #[arg(long)]
    pub format: Option<Format>,
}

/// Parses `a,b` into a weight.
pub fn parse_weight(s: &str) -> Result<IVec2, Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Error::Parse(format!("expected a weight `a,b`, got `{s}`"));
    match parts.as_slice() {
        [a, b] => Ok([a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?]),
        _ => Err(bad()),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io { .. } | Error::Json(_) | Error::Csv(_) => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

/// Runs a parsed command. `Ok(false)` means a check failed.
pub fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Sample(a) => cmd_sample(&a).map(|_| true),
        Command::Tables(a) => cmd_tables(&a),
        Command::Transform(a) => cmd_transform(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Decompose(a) => cmd_decompose(&a),
    }
}

fn with_output(
    out: Option<&Path>,
    f: impl FnOnce(&mut dyn Write) -> Result<(), Error>,
) -> Result<(), Error> {
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|e| io_error(path, e))?;
            let mut w = BufWriter::new(file);
            f(&mut w)?;
            w.flush().map_err(|e| io_error(path, e))
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            f(&mut lock)?;
            lock.flush().map_err(|e| io_error("<stdout>", e))
        }
    }
}

fn text(w: &mut dyn Write, s: &str) -> Result<(), Error> {
    w.write_all(s.as_bytes())
        .map_err(|e| io_error("<output>", e))
}

fn json<T: Serialize>(w: &mut dyn Write, value: &T) -> Result<(), Error> {
    serde_json::to_writer_pretty(&mut *w, value)?;
    text(w, "\n")
}

pub fn cmd_sample(a: &SampleArgs) -> Result<(), Error> {
    let alg = Algebra::new(a.algebra);
    let s = sample_plot(&alg, a.family, a.weight, a.resolution)?;
    with_output(a.out.as_deref(), |w| match a.format {
        Format::Csv => write_plot_csv(&s, w),
        Format::Json => {
            write_plot_json(&s, &mut *w)?;
            text(w, "\n")
        }
    })
}

#[derive(Serialize)]
struct ExcludedPoint {
    family: Family,
    cab: [i64; 3],
}

#[derive(Serialize)]
struct TablesReport {
    algebra: AlgebraKind,
    #[serde(rename = "M")]
    m: i64,
    rows: Vec<RowCheck>,
    excluded: Vec<ExcludedPoint>,
    grid: Option<GridFile>,
}

/// Points removed from the plain `[c,a,b]` grid by each family's exclusions.
fn excluded_points(kind: AlgebraKind, m: i64, marks: IVec2) -> Vec<ExcludedPoint> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for ex in grid_rule(kind, family).excluded {
            let scaled = ex.num.map(|n| n * m);
            if scaled.iter().any(|v| v % ex.den != 0) {
                continue;
            }
            let [a, b] = scaled.map(|v| v / ex.den);
            let c = m - marks[0] * a - marks[1] * b;
            if cab_triples(marks, m).contains(&[c, a, b]) {
                out.push(ExcludedPoint {
                    family,
                    cab: [c, a, b],
                });
            }
        }
    }
    out
}

fn tables_report(kind: AlgebraKind, m: i64, family: Option<Family>) -> TablesReport {
    let alg = Algebra::new(kind);
    let mut rows = check_table_d(&alg, 8);
    rows.extend(check_torus_tables(&alg, m));
    let grid = family.map(|f| {
        let t = DiscreteTransform::new(&alg, f, m);
        let (grid, weights) = match t {
            Ok(t) => (t.grid, t.weights),
            Err(_) => (Vec::new(), Vec::new()),
        };
        GridFile::new(kind, f, m, &grid, &weights)
    });
    TablesReport {
        algebra: kind,
        m,
        rows,
        excluded: excluded_points(kind, m, alg.data.highest_root_marks),
        grid,
    }
}

fn tables_text(r: &TablesReport) -> String {
    let mut s = String::new();
    for row in &r.rows {
        s.push_str(&format!("{row}\n"));
    }
    for ex in &r.excluded {
        s.push_str(&format!(
            "{} excluded from F_M^{} at M={}: [{},{},{}]\n",
            r.algebra, ex.family, r.m, ex.cab[0], ex.cab[1], ex.cab[2]
        ));
    }
    if let Some(g) = &r.grid {
        s.push_str(&format!(
            "{} F_M^{} M={}: {} points\n",
            g.algebra,
            g.family,
            g.m,
            g.points.len()
        ));
        for p in &g.points {
            s.push_str(&format!(
                "  {} omega-vee ({}/{}, {}/{})\n",
                format_key(&(p.sheet, p.cab)),
                p.coords[0],
                p.denominator,
                p.coords[1],
                p.denominator
            ));
        }
        s.push_str(&format!(
            "{} Lambda_M^{} M={}: {} weights\n",
            g.algebra,
            g.family,
            g.m,
            g.weights.len()
        ));
        for w in &g.weights {
            s.push_str(&format!(
                "  {} omega ({}, {})\n",
                format_key(&(w.sheet, w.cab)),
                w.coords[0],
                w.coords[1]
            ));
        }
    }
    s
}

pub fn cmd_tables(a: &TablesArgs) -> Result<bool, Error> {
    if a.m < 1 {
        return Err(Error::InvalidM(a.m));
    }
    let kinds = a.algebra.map_or(AlgebraKind::ALL.to_vec(), |k| vec![k]);
    let reports: Vec<TablesReport> = kinds
        .iter()
        .map(|k| tables_report(*k, a.m, a.family))
        .collect();
    let pass = reports.iter().all(|r| r.rows.iter().all(|row| row.pass));
    with_output(a.out.as_deref(), |w| match a.format {
        Some(Format::Json) => json(w, &reports),
        Some(Format::Csv) => {
            let mut cw = csv::Writer::from_writer(w);
            cw.write_record([
                "algebra",
                "table",
                "pattern",
                "M",
                "expected",
                "computed",
                "instances",
                "pass",
            ])?;
            for r in &reports {
                for row in &r.rows {
                    cw.write_record([
                        row.algebra.to_string(),
                        row.table.symbol().to_string(),
                        row.pattern.clone(),
                        row.m.map_or(String::new(), |m| m.to_string()),
                        format!("{:?}", row.expected),
                        format!("{:?}", row.computed),
                        row.instances.to_string(),
                        row.pass.to_string(),
                    ])?;
                }
            }
            cw.flush().map_err(|e| io_error("<csv output>", e))
        }
        None => {
            for r in &reports {
                text(w, &tables_text(r))?;
            }
            Ok(())
        }
    })?;
    Ok(pass)
}

fn detect_format(path: &Path, flag: Option<Format>) -> Format {
    flag.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some(e) if e.eq_ignore_ascii_case("csv") => Format::Csv,
        _ => Format::Json,
    })
}

fn read_vector(path: &Path, format: Format) -> Result<DataVector, Error> {
    let file = File::open(path).map_err(|e| io_error(path, e))?;
    let reader = BufReader::new(file);
    match format {
        Format::Json => read_vector_json(reader),
        Format::Csv => read_vector_csv(reader),
    }
}

fn check_flag<T: PartialEq + std::fmt::Display>(
    what: &str,
    flag: Option<T>,
    file: T,
) -> Result<(), Error> {
    match flag {
        Some(f) if f != file => Err(Error::Mismatch {
            expected: format!("{what} {f}"),
            found: format!("{what} {file}"),
        }),
        _ => Ok(()),
    }
}

fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

#[derive(Serialize)]
struct RoundtripReport {
    algebra: AlgebraKind,
    family: Family,
    #[serde(rename = "M")]
    m: i64,
    direction: String,
    max_error: f64,
    tolerance: f64,
    pass: bool,
}

pub fn cmd_transform(a: &TransformArgs) -> Result<bool, Error> {
    let input = match &a.input {
        Some(path) => {
            let v = read_vector(path, detect_format(path, a.format))?;
            check_flag("algebra", a.algebra, v.algebra)?;
            check_flag("family", a.family, v.family)?;
            check_flag("M", a.m, v.m)?;
            Some(v)
        }
        None => None,
    };
    let (kind, family, m) = match &input {
        Some(v) => (v.algebra, v.family, v.m),
        None => {
            let missing =
                |f: &str| Error::Parse(format!("--{f} is required without an input file"));
            (
                a.algebra.ok_or_else(|| missing("algebra"))?,
                a.family.ok_or_else(|| missing("family"))?,
                a.m.ok_or_else(|| missing("M"))?,
            )
        }
    };
    let alg = Algebra::new(kind);
    let t = DiscreteTransform::new(&alg, family, m)?;
    let input = match input {
        Some(v) => v,
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            match (a.direction, a.weight) {
                (Direction::Forward, Some(l)) => {
                    t.samples_from_fn(|p| xi_torus(&alg, family, l, &p.torus(&alg.data)))
                }
                (Direction::Forward, None) => t.samples_from_fn(|_| random_complex(&mut rng)),
                (Direction::Inverse, Some(l)) => t.coeffs_from_fn(|w| {
                    if w.coords == l {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                }),
                (Direction::Inverse, None) => t.coeffs_from_fn(|_| random_complex(&mut rng)),
            }
        }
    };
    let apply = |v: &DataVector| match a.direction {
        Direction::Forward => t.forward(v),
        Direction::Inverse => t.inverse(v),
    };
    let expected_kind = match a.direction {
        Direction::Forward => VectorKind::Samples,
        Direction::Inverse => VectorKind::Coefficients,
    };
    if input.kind != expected_kind {
        return Err(Error::Mismatch {
            expected: format!(
                "{expected_kind:?} input for the {:?} transform",
                a.direction
            )
            .to_lowercase(),
            found: format!("{:?}", input.kind).to_lowercase(),
        });
    }
    let output = apply(&input)?;
    let format = a.format.unwrap_or_else(|| {
        a.out
            .as_deref()
            .map_or(Format::Json, |p| detect_format(p, None))
    });
    if a.roundtrip {
        let back = match a.direction {
            Direction::Forward => t.inverse(&output)?,
            Direction::Inverse => t.forward(&output)?,
        };
        let err = back.max_abs_diff(&input);
        let report = RoundtripReport {
            algebra: kind,
            family,
            m,
            direction: format!("{:?}", a.direction).to_lowercase(),
            max_error: err,
            tolerance: a.tol_identity,
            pass: err <= a.tol_identity,
        };
        if let Some(path) = &a.out {
            with_output(Some(path), |w| write_vector(w, &back, format))?;
        }
        with_output(None, |w| match a.format {
            Some(Format::Json) => json(w, &report),
            _ => text(
                w,
                &format!(
                    "{} {} M={} {} round trip: max error {:.3e} (tol {:.0e}) {}\n",
                    kind,
                    family,
                    m,
                    report.direction,
                    err,
                    a.tol_identity,
                    if report.pass { "PASS" } else { "FAIL" }
                ),
            ),
        })?;
        return Ok(report.pass);
    }
    with_output(a.out.as_deref(), |w| write_vector(w, &output, format))?;
    Ok(true)
}

fn write_vector(w: &mut dyn Write, v: &DataVector, format: Format) -> Result<(), Error> {
    match format {
        Format::Json => {
            write_vector_json(v, &mut *w)?;
            text(w, "\n")
        }
        Format::Csv => write_vector_csv(v, w),
    }
}

pub fn verify_config(a: &VerifyArgs) -> Result<VerifyConfig, Error> {
    if a.m < 1 {
        return Err(Error::InvalidM(a.m));
    }
    Ok(VerifyConfig {
        algebras: a.algebra.map_or(AlgebraKind::ALL.to_vec(), |k| vec![k]),
        max_m: a.m,
        seed: a.seed,
        tol_identity: a.tol_identity,
        tol_gram: a.tol_gram,
        ..VerifyConfig::default()
    })
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<bool, Error> {
    let cfg = verify_config(a)?;
    let suites = if a.suite.is_empty() {
        Suite::ALL.to_vec()
    } else {
        a.suite.clone()
    };
    let report = verify::run(&cfg, &suites);
    with_output(a.out.as_deref(), |w| match a.format {
        Some(Format::Json) => json(w, &report),
        Some(Format::Csv) => {
            let mut cw = csv::Writer::from_writer(w);
            cw.write_record(["status", "suite", "algebra", "check", "detail"])?;
            for c in &report.checks {
                cw.write_record([
                    c.status.to_string(),
                    c.suite.to_string(),
                    c.algebra.map_or(String::new(), |k| k.to_string()),
                    c.name.clone(),
                    c.detail.clone(),
                ])?;
            }
            cw.flush().map_err(|e| io_error("<csv output>", e))
        }
        None => text(w, &report.to_string()),
    })?;
    Ok(report.passed())
}

#[derive(Serialize)]
struct DecomposeReport {
    algebra: AlgebraKind,
    left: Family,
    right: Family,
    lambda: IVec2,
    lambda_prime: IVec2,
    sum: SignedWeightSum,
    text: String,
    max_error: f64,
}

pub fn cmd_decompose(a: &DecomposeArgs) -> Result<bool, Error> {
    let alg = Algebra::new(a.algebra);
    let right = a.right.unwrap_or(a.family);
    let mut sum = decompose(&alg, a.family, right, a.weight, a.right_weight)?;
    if a.normalize {
        sum = normalize(&alg, &sum);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let err = verify_decomposition(
        &alg,
        &sum,
        a.family,
        right,
        a.weight,
        a.right_weight,
        100,
        &mut rng,
    );
    let lhs = format!(
        "Xi^{}_({},{}) Xi^{}_({},{})",
        a.family, a.weight[0], a.weight[1], right, a.right_weight[0], a.right_weight[1]
    );
    let report = DecomposeReport {
        algebra: a.algebra,
        left: a.family,
        right,
        lambda: a.weight,
        lambda_prime: a.right_weight,
        text: format!("{lhs} = {sum}"),
        sum,
        max_error: err,
    };
    with_output(a.out.as_deref(), |w| match a.format {
        Some(Format::Json) | Some(Format::Csv) => json(w, &report),
        None => text(
            w,
            &format!(
                "{}\nmax error over 100 random points: {:.3e}\n",
                report.text, err
            ),
        ),
    })?;
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_parse() {
        assert_eq!(parse_weight("5,3").unwrap(), [5, 3]);
        assert_eq!(parse_weight(" -1, 2 ").unwrap(), [-1, 2]);
        assert!(parse_weight("1").is_err());
        assert!(parse_weight("a,b").is_err());
    }

    #[test]
    fn g2_m6_lists_e_minus_exclusion() {
        let r = tables_report(AlgebraKind::G2, 6, None);
        assert!(r
            .excluded
            .iter()
            .any(|e| e.family == Family::EMinus && e.cab == [0, 3, 0]));
        assert!(r.rows.iter().all(|row| row.pass));
    }

    #[test]
    fn cli_parses_flags() {
        let cli = Cli::try_parse_from([
            "efn",
            "sample",
            "--algebra",
            "g2",
            "--family",
            "e-",
            "--weight",
            "2,1",
            "--resolution",
            "5",
        ])
        .unwrap();
        match cli.command {
            Command::Sample(a) => {
                assert_eq!(a.algebra, AlgebraKind::G2);
                assert_eq!(a.family, Family::EMinus);
                assert_eq!(a.weight, [2, 1]);
            }
            _ => panic!("wrong subcommand"),
        }
        let cli = Cli::try_parse_from(["efn", "verify", "--suite", "products,tables", "--M", "4"])
            .unwrap();
        match cli.command {
            Command::Verify(a) => assert_eq!(a.suite, vec![Suite::Products, Suite::Tables]),
            _ => panic!("wrong subcommand"),
        }
        assert!(Cli::try_parse_from(["efn", "sample", "--algebra", "b2"]).is_err());
    }
}
