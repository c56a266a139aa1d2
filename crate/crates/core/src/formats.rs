//! JSON and CSV encodings of grids, weight sets, data vectors and plot
//! samples. Every file carries the algebra, family and M it belongs to.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{ratio_to_f64, AlgebraKind, IVec2, QVec2, Rational};
use crate::domains::{domain_membership, Family, GridPoint, Membership, Sheet, WeightPoint};
use crate::orbitfn::xi_exact;
use crate::transform::{domain_triangles, DataVector, VectorKind};
use crate::{Algebra, Error};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse(format!(
                "unknown format `{s}` (expected csv or json)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VectorEntry {
    pub cab: [i64; 3],
    pub sheet: Sheet,
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VectorFile {
    pub algebra: AlgebraKind,
    pub family: Family,
    #[serde(rename = "M")]
    pub m: i64,
    pub kind: VectorKind,
    pub entries: Vec<VectorEntry>,
}

impl From<&DataVector> for VectorFile {
    fn from(v: &DataVector) -> Self {
        VectorFile {
            algebra: v.algebra,
            family: v.family,
            m: v.m,
            kind: v.kind,
            entries: v
                .values
                .iter()
                .map(|((sheet, cab), z)| VectorEntry {
                    cab: *cab,
                    sheet: *sheet,
                    re: z.re,
                    im: z.im,
                })
                .collect(),
        }
    }
}

impl TryFrom<VectorFile> for DataVector {
    type Error = Error;

    fn try_from(f: VectorFile) -> Result<Self, Error> {
        let mut values = BTreeMap::new();
        for e in f.entries {
            if values
                .insert((e.sheet, e.cab), Complex64::new(e.re, e.im))
                .is_some()
            {
                return Err(Error::Parse(format!(
                    "duplicate entry {:?} ({:?})",
                    e.cab, e.sheet
                )));
            }
        }
        Ok(DataVector {
            kind: f.kind,
            algebra: f.algebra,
            family: f.family,
            m: f.m,
            values,
        })
    }
}

pub fn write_vector_json<W: Write>(v: &DataVector, out: W) -> Result<(), Error> {
    serde_json::to_writer_pretty(out, &VectorFile::from(v))?;
    Ok(())
}

pub fn read_vector_json<R: Read>(input: R) -> Result<DataVector, Error> {
    let file: VectorFile = serde_json::from_reader(input)?;
    file.try_into()
}

fn sheet_name(s: Sheet) -> &'static str {
    match s {
        Sheet::Base => "base",
        Sheet::Reflected => "reflected",
    }
}

fn kind_name(k: VectorKind) -> &'static str {
    match k {
        VectorKind::Samples => "samples",
        VectorKind::Coefficients => "coefficients",
    }
}

#[derive(Serialize, Deserialize)]
struct CsvVectorRow {
    sheet: String,
    c: i64,
    a: i64,
    b: i64,
    re: f64,
    im: f64,
}

/// CSV with a `# key: value` header block followed by
/// `sheet,c,a,b,re,im` rows.
pub fn write_vector_csv<W: Write>(v: &DataVector, mut out: W) -> Result<(), Error> {
    let io = |e| crate::io_error("<csv output>", e);
    writeln!(out, "# algebra: {}", v.algebra).map_err(io)?;
    writeln!(out, "# family: {}", v.family).map_err(io)?;
    writeln!(out, "# M: {}", v.m).map_err(io)?;
    writeln!(out, "# kind: {}", kind_name(v.kind)).map_err(io)?;
    let mut w = csv::Writer::from_writer(out);
    for ((sheet, cab), z) in &v.values {
        w.serialize(CsvVectorRow {
            sheet: sheet_name(*sheet).to_string(),
            c: cab[0],
            a: cab[1],
            b: cab[2],
            re: z.re,
            im: z.im,
        })?;
    }
    w.flush().map_err(io)?;
    Ok(())
}

pub fn read_vector_csv<R: Read>(mut input: R) -> Result<DataVector, Error> {
    let mut text = String::new();
    input
        .read_to_string(&mut text)
        .map_err(|e| crate::io_error("<csv input>", e))?;
    let mut header: BTreeMap<String, String> = BTreeMap::new();
    for line in text.lines().take_while(|l| l.starts_with('#')) {
        if let Some((k, v)) = line.trim_start_matches('#').split_once(':') {
            header.insert(k.trim().to_string(), v.trim().to_string());
        }
    }
    let field = |k: &str| {
        header
            .get(k)
            .cloned()
            .ok_or_else(|| Error::Parse(format!("CSV header is missing `{k}`")))
    };
    let algebra: AlgebraKind = field("algebra")?.parse()?;
    let family: Family = field("family")?.parse()?;
    let m: i64 = field("M")?
        .parse()
        .map_err(|_| Error::Parse("CSV header `M` is not an integer".into()))?;
    let kind = match field("kind")?.as_str() {
        "samples" => VectorKind::Samples,
        "coefficients" => VectorKind::Coefficients,
        other => return Err(Error::Parse(format!("unknown vector kind `{other}`"))),
    };
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut values = BTreeMap::new();
    for row in reader.deserialize::<CsvVectorRow>() {
        let row = row?;
        let sheet = match row.sheet.as_str() {
            "base" => Sheet::Base,
            "reflected" => Sheet::Reflected,
            other => return Err(Error::Parse(format!("unknown sheet `{other}`"))),
        };
        let key = (sheet, [row.c, row.a, row.b]);
        if values.insert(key, Complex64::new(row.re, row.im)).is_some() {
            return Err(Error::Parse(format!(
                "duplicate entry {:?} ({})",
                key.1, row.sheet
            )));
        }
    }
    Ok(DataVector {
        kind,
        algebra,
        family,
        m,
        values,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridEntry {
    pub cab: [i64; 3],
    pub sheet: Sheet,
    /// ω∨-coordinates are `coords / denominator`.
    pub coords: IVec2,
    pub denominator: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEntry {
    pub cab: [i64; 3],
    pub sheet: Sheet,
    /// ω-coordinates.
    pub coords: IVec2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridFile {
    pub algebra: AlgebraKind,
    pub family: Family,
    #[serde(rename = "M")]
    pub m: i64,
    pub points: Vec<GridEntry>,
    pub weights: Vec<WeightEntry>,
}

impl GridFile {
    pub fn new(
        algebra: AlgebraKind,
        family: Family,
        m: i64,
        grid: &[GridPoint],
        weights: &[WeightPoint],
    ) -> Self {
        GridFile {
            algebra,
            family,
            m,
            points: grid
                .iter()
                .map(|p| GridEntry {
                    cab: p.cab,
                    sheet: p.sheet,
                    coords: p.coords,
                    denominator: p.m,
                })
                .collect(),
            weights: weights
                .iter()
                .map(|w| WeightEntry {
                    cab: w.cab,
                    sheet: w.sheet,
                    coords: w.coords,
                })
                .collect(),
        }
    }
}

/// One row of a plot sample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleRow {
    /// α∨-coordinates.
    pub x: f64,
    pub y: f64,
    pub re: f64,
    pub im: f64,
    /// 1 inside the family's domain, 0 outside.
    pub mask: u8,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlotSample {
    pub algebra: AlgebraKind,
    pub family: Family,
    pub weight: IVec2,
    pub resolution: usize,
    pub rows: Vec<SampleRow>,
}

/// Samples `Ξ_λ` on a uniform `resolution × resolution` lattice over the
/// bounding box (α∨-coordinates) of `F^{σ±}`, masking points outside it.
pub fn sample_plot(
    alg: &Algebra,
    family: Family,
    weight: IVec2,
    resolution: usize,
) -> Result<PlotSample, Error> {
    if resolution < 2 {
        return Err(Error::Parse(format!(
            "resolution must be at least 2, got {resolution}"
        )));
    }
    let vertices: Vec<QVec2> = domain_triangles(alg, family)
        .into_iter()
        .flatten()
        .collect();
    let lo = |i: usize| vertices.iter().map(|v| v[i]).min().expect("vertices");
    let hi = |i: usize| vertices.iter().map(|v| v[i]).max().expect("vertices");
    let (x0, x1, y0, y1) = (lo(0), hi(0), lo(1), hi(1));
    let steps = Rational::from_integer(resolution as i64 - 1);
    let mut rows = Vec::with_capacity(resolution * resolution);
    for j in 0..resolution {
        for i in 0..resolution {
            let x = x0 + (x1 - x0) * Rational::from_integer(i as i64) / steps;
            let y = y0 + (y1 - y0) * Rational::from_integer(j as i64) / steps;
            let p = [x, y];
            let v = xi_exact(alg, family, weight, &p);
            let inside = domain_membership(&alg.data, family, &p) != Membership::Outside;
            rows.push(SampleRow {
                x: ratio_to_f64(x),
                y: ratio_to_f64(y),
                re: v.re,
                im: v.im,
                mask: inside as u8,
            });
        }
    }
    Ok(PlotSample {
        algebra: alg.kind(),
        family,
        weight,
        resolution,
        rows,
    })
}

pub fn write_plot_csv<W: Write>(s: &PlotSample, mut out: W) -> Result<(), Error> {
    let io = |e| crate::io_error("<csv output>", e);
    writeln!(out, "# algebra: {}", s.algebra).map_err(io)?;
    writeln!(out, "# family: {}", s.family).map_err(io)?;
    writeln!(out, "# weight: {},{}", s.weight[0], s.weight[1]).map_err(io)?;
    writeln!(out, "# resolution: {}", s.resolution).map_err(io)?;
    writeln!(out, "# coordinates: alpha-vee").map_err(io)?;
    let mut w = csv::Writer::from_writer(out);
    for row in &s.rows {
        w.serialize(row)?;
    }
    w.flush().map_err(io)?;
    Ok(())
}

pub fn read_plot_csv<R: Read>(input: R) -> Result<Vec<SampleRow>, Error> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(input);
    reader
        .deserialize()
        .map(|r| r.map_err(Error::from))
        .collect()
}

pub fn write_plot_json<W: Write>(s: &PlotSample, out: W) -> Result<(), Error> {
    serde_json::to_writer_pretty(out, s)?;
    Ok(())
}
