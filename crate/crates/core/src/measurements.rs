//! Measurement data model and CSV ingestion.
//!
//! A measurement file holds one row per encode: `(sequence, resolution, qp)`
//! with the achieved bitrate, the decode time, and whichever quality scores
//! were computed. Files may open with `#`-prefixed directive lines that pin
//! the resolution and QP grids the rows are validated against:
//!
//! ```text
//! # resolutions=360,540,720,1080,1440,2160
//! # qps=10,12,...,50
//! sequence,resolution,qp,bitrate_kbps,decode_time_s,psnr_db,xpsnr_db,vmaf
//! 0153,2160,32,4200.5,38.2,41.3,44.1,91.2
//! ```
//!
//! Quality columns may be empty (metric not computed). A companion metadata
//! CSV (`sequence,native_resolution,fps,frame_count`) describes the source
//! clips themselves.

use std::collections::BTreeSet;
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact column order of the measurement CSV.
pub const MEASUREMENT_HEADER: [&str; 8] = [
    "sequence",
    "resolution",
    "qp",
    "bitrate_kbps",
    "decode_time_s",
    "psnr_db",
    "xpsnr_db",
    "vmaf",
];

/// Exact column order of the sequence-metadata CSV.
pub const SEQUENCE_META_HEADER: [&str; 4] = ["sequence", "native_resolution", "fps", "frame_count"];

#[derive(Debug, Error)]
pub enum MeasurementError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("missing header row; expected `{}`", MEASUREMENT_HEADER.join(","))]
    MissingHeader,
    #[error("bad header `{found}`; expected `{expected}`")]
    BadHeader { found: String, expected: String },
    #[error("line {line}: malformed row: {message}")]
    MalformedRow { line: u64, message: String },
    #[error("line {line}: invalid point ({sequence}, {resolution}, {qp}): {message}")]
    InvalidPoint {
        line: u64,
        sequence: String,
        resolution: u32,
        qp: u32,
        message: String,
    },
    #[error("line {line}: duplicate point ({sequence}, {resolution}, {qp})")]
    DuplicateRow {
        line: u64,
        sequence: String,
        resolution: u32,
        qp: u32,
    },
    #[error("duplicate point ({sequence}, {resolution}, {qp})")]
    DuplicatePoint {
        sequence: String,
        resolution: u32,
        qp: u32,
    },
    #[error("line {line}: resolution {resolution} not in declared set")]
    UnknownResolution { line: u64, resolution: u32 },
    #[error("line {line}: qp {qp} not in declared set")]
    UnknownQp { line: u64, qp: u32 },
    #[error("bad directive `{directive}`: {message}")]
    BadDirective { directive: String, message: String },
    #[error("sequence mismatch: `{left}` vs `{right}`")]
    SequenceMismatch { left: String, right: String },
    #[error("invalid point ({sequence}, {resolution}, {qp}): {message}")]
    Invalid {
        sequence: String,
        resolution: u32,
        qp: u32,
        message: String,
    },
    #[error("invalid sequence metadata for `{sequence}`: {message}")]
    InvalidMeta { sequence: String, message: String },
}

/// Quality metric carried by an encode point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QualityMetric {
    Psnr,
    Xpsnr,
    Vmaf,
}

impl QualityMetric {
    pub const ALL: [QualityMetric; 3] = [QualityMetric::Psnr, QualityMetric::Xpsnr, QualityMetric::Vmaf];

    pub fn as_str(self) -> &'static str {
        match self {
            QualityMetric::Psnr => "psnr",
            QualityMetric::Xpsnr => "xpsnr",
            QualityMetric::Vmaf => "vmaf",
        }
    }

    /// Unit suffix used in report tables.
    pub fn unit(self) -> &'static str {
        match self {
            QualityMetric::Psnr | QualityMetric::Xpsnr => "dB",
            QualityMetric::Vmaf => "",
        }
    }
}

impl fmt::Display for QualityMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for QualityMetric {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "psnr" => Ok(QualityMetric::Psnr),
            "xpsnr" => Ok(QualityMetric::Xpsnr),
            "vmaf" => Ok(QualityMetric::Vmaf),
            other => Err(format!("unknown quality metric `{other}`")),
        }
    }
}

/// One measured encode of a sequence at a (resolution, qp) grid cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EncodePoint {
    /// Vertical pixel count of the encode.
    pub resolution: u32,
    /// Quantization parameter.
    pub qp: u32,
    /// Achieved bitrate in kilobits per second. Always positive.
    pub bitrate_kbps: f64,
    /// Wall-clock seconds to decode the full bitstream. Always positive.
    pub decode_time_s: f64,
    pub psnr_db: Option<f64>,
    pub xpsnr_db: Option<f64>,
    /// VMAF score in [0, 100].
    pub vmaf: Option<f64>,
}

impl EncodePoint {
    /// The point's score in the chosen metric, if measured.
    pub fn quality(&self, metric: QualityMetric) -> Option<f64> {
        match metric {
            QualityMetric::Psnr => self.psnr_db,
            QualityMetric::Xpsnr => self.xpsnr_db,
            QualityMetric::Vmaf => self.vmaf,
        }
    }

    /// Checks the per-point invariants: positive finite bitrate and decode
    /// time, at least one quality score, finite scores, VMAF within [0, 100].
    pub fn validate(&self) -> Result<(), String> {
        if !(self.bitrate_kbps.is_finite() && self.bitrate_kbps > 0.0) {
            return Err(format!("bitrate_kbps must be positive, got {}", self.bitrate_kbps));
        }
        if !(self.decode_time_s.is_finite() && self.decode_time_s > 0.0) {
            return Err(format!("decode_time_s must be positive, got {}", self.decode_time_s));
        }
        if self.resolution == 0 {
            return Err("resolution must be positive".to_string());
        }
        if self.psnr_db.is_none() && self.xpsnr_db.is_none() && self.vmaf.is_none() {
            return Err("at least one quality field must be present".to_string());
        }
        for (name, value) in [
            ("psnr_db", self.psnr_db),
            ("xpsnr_db", self.xpsnr_db),
            ("vmaf", self.vmaf),
        ] {
            if let Some(v) = value {
                if !v.is_finite() {
                    return Err(format!("{name} must be finite, got {v}"));
                }
            }
        }
        if let Some(v) = self.vmaf {
            if !(0.0..=100.0).contains(&v) {
                return Err(format!("vmaf must lie in [0, 100], got {v}"));
            }
        }
        Ok(())
    }
}

/// All measured encodes of one sequence. Points are kept sorted by
/// (resolution, qp) and each grid cell appears at most once.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasurementSet {
    sequence: String,
    points: Vec<EncodePoint>,
}

impl MeasurementSet {
    pub fn new(sequence: impl Into<String>, points: Vec<EncodePoint>) -> Result<Self, MeasurementError> {
        let sequence = sequence.into();
        let mut points = points;
        points.sort_by(|a, b| (a.resolution, a.qp).cmp(&(b.resolution, b.qp)));
        for pair in points.windows(2) {
            if pair[0].resolution == pair[1].resolution && pair[0].qp == pair[1].qp {
                return Err(MeasurementError::DuplicatePoint {
                    sequence,
                    resolution: pair[0].resolution,
                    qp: pair[0].qp,
                });
            }
        }
        for point in &points {
            point.validate().map_err(|message| MeasurementError::Invalid {
                sequence: sequence.clone(),
                resolution: point.resolution,
                qp: point.qp,
                message,
            })?;
        }
        Ok(Self { sequence, points })
    }

    pub fn sequence(&self) -> &str {
        &self.sequence
    }

    pub fn points(&self) -> &[EncodePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Union of two sets describing the same sequence. Rejects duplicate
    /// (resolution, qp) cells and mismatched sequences.
    pub fn merge(&self, other: &MeasurementSet) -> Result<MeasurementSet, MeasurementError> {
        if self.sequence != other.sequence {
            return Err(MeasurementError::SequenceMismatch {
                left: self.sequence.clone(),
                right: other.sequence.clone(),
            });
        }
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        MeasurementSet::new(self.sequence.clone(), points)
    }

    /// Highest resolution present in the set.
    pub fn max_resolution(&self) -> Option<u32> {
        self.points.iter().map(|p| p.resolution).max()
    }
}

/// Source-clip metadata from the companion CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceMeta {
    pub sequence: String,
    /// Vertical pixel count of the source.
    pub native_resolution: u32,
    pub fps: f64,
    pub frame_count: u64,
}

impl SequenceMeta {
    pub fn validate(&self) -> Result<(), MeasurementError> {
        let fail = |message: String| MeasurementError::InvalidMeta {
            sequence: self.sequence.clone(),
            message,
        };
        if self.sequence.is_empty() {
            return Err(fail("sequence name must be non-empty".into()));
        }
        if self.native_resolution == 0 {
            return Err(fail("native_resolution must be positive".into()));
        }
        if !(self.fps.is_finite() && self.fps > 0.0) {
            return Err(fail(format!("fps must be positive, got {}", self.fps)));
        }
        if self.frame_count == 0 {
            return Err(fail("frame_count must be positive".into()));
        }
        Ok(())
    }

    /// Clip duration in seconds.
    pub fn duration_s(&self) -> f64 {
        self.frame_count as f64 / self.fps
    }
}

/// Parsed content of one measurement CSV: per-sequence sets plus the
/// optional declared resolution/QP grids and run id from directive lines.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MeasurementCatalog {
    pub resolutions: Option<BTreeSet<u32>>,
    pub qps: Option<BTreeSet<u32>>,
    pub run: Option<String>,
    /// Sets ordered by sequence name.
    pub sets: Vec<MeasurementSet>,
}

impl MeasurementCatalog {
    pub fn from_sets(sets: Vec<MeasurementSet>) -> Self {
        let mut sets = sets;
        sets.sort_by(|a, b| a.sequence.cmp(&b.sequence));
        Self {
            resolutions: None,
            qps: None,
            run: None,
            sets,
        }
    }

    pub fn get(&self, sequence: &str) -> Option<&MeasurementSet> {
        self.sets.iter().find(|s| s.sequence == sequence)
    }

    /// Parses a measurement CSV stream, validating every row against the
    /// point invariants and, when directives declare them, the grids.
    pub fn parse<R: Read>(reader: R) -> Result<Self, MeasurementError> {
        parse_measurements(reader)
    }

    /// Writes the catalog back in the measurement CSV format. Directives are
    /// emitted only when the corresponding field is set.
    pub fn write<W: Write>(&self, mut w: W) -> Result<(), MeasurementError> {
        if let Some(run) = &self.run {
            writeln!(w, "# run={run}")?;
        }
        if let Some(resolutions) = &self.resolutions {
            writeln!(w, "# resolutions={}", join_u32(resolutions.iter()))?;
        }
        if let Some(qps) = &self.qps {
            writeln!(w, "# qps={}", join_u32(qps.iter()))?;
        }
        writeln!(w, "{}", MEASUREMENT_HEADER.join(","))?;
        for set in &self.sets {
            for p in set.points() {
                writeln!(
                    w,
                    "{},{},{},{},{},{},{},{}",
                    set.sequence(),
                    p.resolution,
                    p.qp,
                    p.bitrate_kbps,
                    p.decode_time_s,
                    opt(p.psnr_db),
                    opt(p.xpsnr_db),
                    opt(p.vmaf),
                )?;
            }
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write(&mut buf).expect("write to Vec cannot fail");
        String::from_utf8(buf).expect("csv output is utf-8")
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn join_u32<'a>(it: impl Iterator<Item = &'a u32>) -> String {
    it.map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_u32_list(s: &str, directive: &str) -> Result<BTreeSet<u32>, MeasurementError> {
    let mut out = BTreeSet::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let v: u32 = part.parse().map_err(|_| MeasurementError::BadDirective {
            directive: directive.to_string(),
            message: format!("`{part}` is not an unsigned integer"),
        })?;
        out.insert(v);
    }
    if out.is_empty() {
        return Err(MeasurementError::BadDirective {
            directive: directive.to_string(),
            message: "empty value list".to_string(),
        });
    }
    Ok(out)
}

fn parse_optional_f64(field: &str, name: &str, line: u64) -> Result<Option<f64>, MeasurementError> {
    let field = field.trim();
    if field.is_empty() {
        return Ok(None);
    }
    field
        .parse::<f64>()
        .map(Some)
        .map_err(|_| MeasurementError::MalformedRow {
            line,
            message: format!("column `{name}`: `{field}` is not a number"),
        })
}

fn parse_field<T: FromStr>(field: &str, name: &str, line: u64) -> Result<T, MeasurementError> {
    field
        .trim()
        .parse::<T>()
        .map_err(|_| MeasurementError::MalformedRow {
            line,
            message: format!("column `{name}`: cannot parse `{}`", field.trim()),
        })
}

/// Parses one measurement CSV into per-sequence sets.
///
/// Errors carry the 1-based line number of the offending row.
pub fn parse_measurements<R: Read>(mut reader: R) -> Result<MeasurementCatalog, MeasurementError> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;

    let mut resolutions: Option<BTreeSet<u32>> = None;
    let mut qps: Option<BTreeSet<u32>> = None;
    let mut run: Option<String> = None;

    // Directive lines come before the header.
    let mut line_no: u64 = 0;
    let mut rest = text.as_str();
    loop {
        let Some(eol) = rest.find('\n') else {
            break;
        };
        let line = &rest[..eol];
        if !line.trim_start().starts_with('#') {
            break;
        }
        line_no += 1;
        let body = line.trim_start().trim_start_matches('#').trim();
        if let Some(v) = body.strip_prefix("resolutions=") {
            resolutions = Some(parse_u32_list(v, "resolutions")?);
        } else if let Some(v) = body.strip_prefix("qps=") {
            qps = Some(parse_u32_list(v, "qps")?);
        } else if let Some(v) = body.strip_prefix("run=") {
            run = Some(v.trim().to_string());
        }
        // Unrecognized comments are skipped.
        rest = &rest[eol + 1..];
    }

    let header_offset = line_no; // csv line numbers restart after the directives

    let mut csv_reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(rest.as_bytes());

    {
        let headers = csv_reader.headers().map_err(|_| MeasurementError::MissingHeader)?;
        let found: Vec<&str> = headers.iter().map(str::trim).collect();
        if found != MEASUREMENT_HEADER {
            return Err(MeasurementError::BadHeader {
                found: found.join(","),
                expected: MEASUREMENT_HEADER.join(","),
            });
        }
    }

    // (sequence name -> points), insertion order irrelevant: catalog sorts.
    let mut by_sequence: Vec<(String, Vec<EncodePoint>)> = Vec::new();
    let mut seen: BTreeSet<(String, u32, u32)> = BTreeSet::new();

    for record in csv_reader.records() {
        let record = record?;
        let line = header_offset + record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != MEASUREMENT_HEADER.len() {
            return Err(MeasurementError::MalformedRow {
                line,
                message: format!("expected {} columns, found {}", MEASUREMENT_HEADER.len(), record.len()),
            });
        }
        let sequence = record[0].trim().to_string();
        if sequence.is_empty() {
            return Err(MeasurementError::MalformedRow {
                line,
                message: "empty sequence name".to_string(),
            });
        }
        let resolution: u32 = parse_field(&record[1], "resolution", line)?;
        let qp: u32 = parse_field(&record[2], "qp", line)?;
        if let Some(rs) = &resolutions {
            if !rs.contains(&resolution) {
                return Err(MeasurementError::UnknownResolution { line, resolution });
            }
        }
        if let Some(qs) = &qps {
            if !qs.contains(&qp) {
                return Err(MeasurementError::UnknownQp { line, qp });
            }
        }
        let point = EncodePoint {
            resolution,
            qp,
            bitrate_kbps: parse_field(&record[3], "bitrate_kbps", line)?,
            decode_time_s: parse_field(&record[4], "decode_time_s", line)?,
            psnr_db: parse_optional_f64(&record[5], "psnr_db", line)?,
            xpsnr_db: parse_optional_f64(&record[6], "xpsnr_db", line)?,
            vmaf: parse_optional_f64(&record[7], "vmaf", line)?,
        };
        point.validate().map_err(|message| MeasurementError::InvalidPoint {
            line,
            sequence: sequence.clone(),
            resolution,
            qp,
            message,
        })?;
        if !seen.insert((sequence.clone(), resolution, qp)) {
            return Err(MeasurementError::DuplicateRow {
                line,
                sequence,
                resolution,
                qp,
            });
        }
        match by_sequence.iter_mut().find(|(name, _)| *name == sequence) {
            Some((_, points)) => points.push(point),
            None => by_sequence.push((sequence, vec![point])),
        }
    }

    let mut sets = Vec::with_capacity(by_sequence.len());
    for (name, points) in by_sequence {
        sets.push(MeasurementSet::new(name, points)?);
    }
    let mut catalog = MeasurementCatalog::from_sets(sets);
    catalog.resolutions = resolutions;
    catalog.qps = qps;
    catalog.run = run;
    Ok(catalog)
}

/// Parses the companion sequence-metadata CSV.
pub fn parse_sequence_meta<R: Read>(reader: R) -> Result<Vec<SequenceMeta>, MeasurementError> {
    let mut csv_reader = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
    {
        let headers = csv_reader.headers().map_err(|_| MeasurementError::MissingHeader)?;
        let found: Vec<&str> = headers.iter().map(str::trim).collect();
        if found != SEQUENCE_META_HEADER {
            return Err(MeasurementError::BadHeader {
                found: found.join(","),
                expected: SEQUENCE_META_HEADER.join(","),
            });
        }
    }
    let mut out: Vec<SequenceMeta> = Vec::new();
    for record in csv_reader.records() {
        let record = record?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let meta = SequenceMeta {
            sequence: record[0].trim().to_string(),
            native_resolution: parse_field(&record[1], "native_resolution", line)?,
            fps: parse_field(&record[2], "fps", line)?,
            frame_count: parse_field(&record[3], "frame_count", line)?,
        };
        meta.validate()?;
        if out.iter().any(|m| m.sequence == meta.sequence) {
            return Err(MeasurementError::MalformedRow {
                line,
                message: format!("duplicate sequence `{}`", meta.sequence),
            });
        }
        out.push(meta);
    }
    Ok(out)
}

/// Writes sequence metadata in the companion CSV format.
pub fn write_sequence_meta<W: Write>(mut w: W, metas: &[SequenceMeta]) -> Result<(), MeasurementError> {
    writeln!(w, "{}", SEQUENCE_META_HEADER.join(","))?;
    for m in metas {
        writeln!(w, "{},{},{},{}", m.sequence, m.native_resolution, m.fps, m.frame_count)?;
    }
    Ok(())
}
