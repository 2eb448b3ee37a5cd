//! Composite decode-time/bitrate metric, Pareto dominance, and front
//! extraction.
//!
//! Two objective spaces are supported. The reduced space pairs the composite
//! metric `alpha * log10(decode_time) + (1 - alpha) * log10(bitrate)`
//! (minimized) with quality (maximized). The full space keeps decode time,
//! bitrate, and quality as three separate objectives.
//!
//! Floating-point comparisons in dominance are exact; there is no epsilon.
//! Two points with bitwise-different objectives are never treated as tied,
//! which keeps front membership stable but makes it sensitive to the last
//! ulp of the inputs.

use std::io::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::measurements::{EncodePoint, MeasurementSet, QualityMetric};

#[derive(Debug, Error)]
pub enum ParetoError {
    #[error("alpha must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),
    #[error("sequence `{sequence}`: point ({resolution}, {qp}) is missing {metric}")]
    MissingQuality {
        sequence: String,
        resolution: u32,
        qp: u32,
        metric: QualityMetric,
    },
    #[error("sequence `{0}`: cannot take the Pareto front of an empty set")]
    EmptySet(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Weight on decode time in the composite metric, constrained to [0, 1].
/// Zero reduces the composite to log-bitrate, one to log-decode-time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Alpha(f64);

impl Alpha {
    pub const ZERO: Alpha = Alpha(0.0);
    pub const ONE: Alpha = Alpha(1.0);

    pub fn new(value: f64) -> Result<Self, ParetoError> {
        if value.is_finite() && (0.0..=1.0).contains(&value) {
            Ok(Alpha(value))
        } else {
            Err(ParetoError::AlphaOutOfRange(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Composite objective: `alpha * log10(decode_time_s) + (1 - alpha) *
/// log10(bitrate_kbps)`. Well-defined because both quantities are positive
/// by the measurement invariants.
pub fn composite_metric(point: &EncodePoint, alpha: Alpha) -> f64 {
    alpha.value() * point.decode_time_s.log10() + (1.0 - alpha.value()) * point.bitrate_kbps.log10()
}

/// A point in the reduced (composite, quality) space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectiveVector {
    pub composite: f64,
    pub quality: f64,
}

/// Weak dominance with at least one strict inequality in the reduced space:
/// lower-or-equal composite, higher-or-equal quality, not identical.
pub fn dominates_mv(a: &ObjectiveVector, b: &ObjectiveVector) -> bool {
    a.composite <= b.composite
        && a.quality >= b.quality
        && (a.composite < b.composite || a.quality > b.quality)
}

/// Weak dominance with at least one strict inequality over (decode time,
/// bitrate, quality): lower-or-equal time and bitrate, higher-or-equal
/// quality, not identical in all three.
pub fn dominates_3d(a: &EncodePoint, b: &EncodePoint, metric: QualityMetric) -> Result<bool, ParetoError> {
    let quality = |p: &EncodePoint| {
        p.quality(metric).ok_or_else(|| ParetoError::MissingQuality {
            sequence: String::new(),
            resolution: p.resolution,
            qp: p.qp,
            metric,
        })
    };
    let (qa, qb) = (quality(a)?, quality(b)?);
    Ok(dominates_3d_values(
        (a.decode_time_s, a.bitrate_kbps, qa),
        (b.decode_time_s, b.bitrate_kbps, qb),
    ))
}

fn dominates_3d_values(a: (f64, f64, f64), b: (f64, f64, f64)) -> bool {
    a.0 <= b.0
        && a.1 <= b.1
        && a.2 >= b.2
        && (a.0 < b.0 || a.1 < b.1 || a.2 > b.2)
}

/// Which objective space a front was extracted in.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ObjectiveSpace {
    /// Reduced bi-objective space: minimize the composite, maximize quality.
    Mv { alpha: Alpha, metric: QualityMetric },
    /// Full tri-objective space: decode time, bitrate, quality.
    Tbv { metric: QualityMetric },
}

impl ObjectiveSpace {
    pub fn metric(&self) -> QualityMetric {
        match self {
            ObjectiveSpace::Mv { metric, .. } | ObjectiveSpace::Tbv { metric } => *metric,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            ObjectiveSpace::Mv { .. } => "mv",
            ObjectiveSpace::Tbv { .. } => "3d",
        }
    }
}

/// A front member: the encode point plus its objective values.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontPoint {
    pub point: EncodePoint,
    /// Composite metric value; present only for fronts in the reduced space.
    pub composite: Option<f64>,
    pub quality: f64,
}

/// Non-dominated subset of a measurement set under a chosen objective space.
///
/// Fronts in the reduced space are sorted by strictly increasing composite
/// and strictly increasing quality (the 2-objective staircase); fronts in
/// the full space are sorted by bitrate, then decode time.
#[derive(Debug, Clone, PartialEq)]
pub struct ParetoFront {
    pub sequence: String,
    pub space: ObjectiveSpace,
    pub points: Vec<FrontPoint>,
}

impl ParetoFront {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn require_quality(set: &MeasurementSet, metric: QualityMetric) -> Result<Vec<f64>, ParetoError> {
    set.points()
        .iter()
        .map(|p| {
            p.quality(metric).ok_or_else(|| ParetoError::MissingQuality {
                sequence: set.sequence().to_string(),
                resolution: p.resolution,
                qp: p.qp,
                metric,
            })
        })
        .collect()
}

/// Extracts the Pareto front in the reduced (composite, quality) space.
///
/// Points with identical objective vectors collapse to one representative:
/// lowest QP, then lowest resolution.
pub fn pareto_front_mv(
    set: &MeasurementSet,
    alpha: Alpha,
    metric: QualityMetric,
) -> Result<ParetoFront, ParetoError> {
    if set.is_empty() {
        return Err(ParetoError::EmptySet(set.sequence().to_string()));
    }
    let qualities = require_quality(set, metric)?;
    let mut indexed: Vec<(f64, f64, usize)> = set
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| (composite_metric(p, alpha), qualities[i], i))
        .collect();
    // Sort by composite ascending, quality descending, then the duplicate
    // tie-break (lower qp, lower resolution). A single sweep keeping the
    // running quality maximum then yields exactly the non-dominated set.
    indexed.sort_by(|a, b| {
        let pa = &set.points()[a.2];
        let pb = &set.points()[b.2];
        a.0.total_cmp(&b.0)
            .then(b.1.total_cmp(&a.1))
            .then(pa.qp.cmp(&pb.qp))
            .then(pa.resolution.cmp(&pb.resolution))
    });
    let mut points = Vec::new();
    let mut best_quality = f64::NEG_INFINITY;
    for (composite, quality, idx) in indexed {
        if quality > best_quality {
            best_quality = quality;
            points.push(FrontPoint {
                point: set.points()[idx].clone(),
                composite: Some(composite),
                quality,
            });
        }
    }
    Ok(ParetoFront {
        sequence: set.sequence().to_string(),
        space: ObjectiveSpace::Mv { alpha, metric },
        points,
    })
}

/// Extracts the Pareto front in the full (decode time, bitrate, quality)
/// space. Duplicate objective triples collapse like in the reduced space.
pub fn pareto_front_3d(set: &MeasurementSet, metric: QualityMetric) -> Result<ParetoFront, ParetoError> {
    if set.is_empty() {
        return Err(ParetoError::EmptySet(set.sequence().to_string()));
    }
    let qualities = require_quality(set, metric)?;
    let objectives: Vec<(f64, f64, f64)> = set
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| (p.decode_time_s, p.bitrate_kbps, qualities[i]))
        .collect();

    // Collapse identical triples to the (lowest qp, lowest resolution)
    // representative before the pairwise filter.
    let mut representatives: Vec<usize> = Vec::new();
    'candidates: for i in 0..objectives.len() {
        for &j in &representatives {
            if objectives[i] == objectives[j] {
                let pi = &set.points()[i];
                let pj = &set.points()[j];
                if (pi.qp, pi.resolution) < (pj.qp, pj.resolution) {
                    let slot = representatives.iter().position(|&k| k == j).unwrap();
                    representatives[slot] = i;
                }
                continue 'candidates;
            }
        }
        representatives.push(i);
    }

    let mut kept: Vec<usize> = representatives
        .iter()
        .copied()
        .filter(|&i| {
            !representatives
                .iter()
                .any(|&j| j != i && dominates_3d_values(objectives[j], objectives[i]))
        })
        .collect();
    kept.sort_by(|&a, &b| {
        let (pa, pb) = (&set.points()[a], &set.points()[b]);
        pa.bitrate_kbps
            .total_cmp(&pb.bitrate_kbps)
            .then(pa.decode_time_s.total_cmp(&pb.decode_time_s))
            .then(pa.qp.cmp(&pb.qp))
            .then(pa.resolution.cmp(&pb.resolution))
    });

    Ok(ParetoFront {
        sequence: set.sequence().to_string(),
        space: ObjectiveSpace::Tbv { metric },
        points: kept
            .into_iter()
            .map(|i| FrontPoint {
                point: set.points()[i].clone(),
                composite: None,
                quality: qualities[i],
            })
            .collect(),
    })
}

// Wire format for front files.

#[derive(Serialize, Deserialize)]
struct FrontFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
    quality_metric: QualityMetric,
    objective_space: String,
    sequence: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    run: Option<String>,
    points: Vec<FrontFilePoint>,
}

#[derive(Serialize, Deserialize)]
struct FrontFilePoint {
    resolution: u32,
    qp: u32,
    bitrate_kbps: f64,
    decode_time_s: f64,
    quality: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<f64>,
}

impl ParetoFront {
    /// Serializes the front as JSON: a header (alpha, metric, space) plus
    /// one object per member.
    pub fn write_json<W: Write>(&self, w: W, run: Option<&str>) -> Result<(), ParetoError> {
        let file = FrontFile {
            alpha: match self.space {
                ObjectiveSpace::Mv { alpha, .. } => Some(alpha.value()),
                ObjectiveSpace::Tbv { .. } => None,
            },
            quality_metric: self.space.metric(),
            objective_space: self.space.tag().to_string(),
            sequence: self.sequence.clone(),
            run: run.map(String::from),
            points: self
                .points
                .iter()
                .map(|fp| FrontFilePoint {
                    resolution: fp.point.resolution,
                    qp: fp.point.qp,
                    bitrate_kbps: fp.point.bitrate_kbps,
                    decode_time_s: fp.point.decode_time_s,
                    quality: fp.quality,
                    m: fp.composite,
                })
                .collect(),
        };
        serde_json::to_writer_pretty(w, &file)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measurements::MeasurementSet;

    fn point(resolution: u32, qp: u32, bitrate: f64, decode: f64, quality: f64) -> EncodePoint {
        EncodePoint {
            resolution,
            qp,
            bitrate_kbps: bitrate,
            decode_time_s: decode,
            psnr_db: None,
            xpsnr_db: Some(quality),
            vmaf: None,
        }
    }

    fn set(points: Vec<EncodePoint>) -> MeasurementSet {
        MeasurementSet::new("t", points).unwrap()
    }

    /// O(n^2) brute-force oracle in the reduced space.
    fn brute_force_mv(set: &MeasurementSet, alpha: Alpha, metric: QualityMetric) -> Vec<(u32, u32)> {
        let vec = |p: &EncodePoint| ObjectiveVector {
            composite: composite_metric(p, alpha),
            quality: p.quality(metric).unwrap(),
        };
        let mut keys = Vec::new();
        for (i, p) in set.points().iter().enumerate() {
            let dominated = set
                .points()
                .iter()
                .enumerate()
                .any(|(j, q)| j != i && dominates_mv(&vec(q), &vec(p)));
            if dominated {
                continue;
            }
            // Collapse duplicates to the lowest (qp, resolution).
            let dup_better = set.points().iter().enumerate().any(|(j, q)| {
                j != i
                    && vec(q) == vec(p)
                    && (q.qp, q.resolution) < (p.qp, p.resolution)
            });
            if !dup_better {
                keys.push((p.resolution, p.qp));
            }
        }
        keys.sort_unstable();
        keys
    }

    fn front_keys(front: &ParetoFront) -> Vec<(u32, u32)> {
        let mut keys: Vec<(u32, u32)> = front.points.iter().map(|fp| (fp.point.resolution, fp.point.qp)).collect();
        keys.sort_unstable();
        keys
    }

    #[test]
    fn composite_metric_powers_of_ten() {
        let p = point(1080, 30, 10_000.0, 100.0, 40.0);
        assert_eq!(composite_metric(&p, Alpha::new(0.5).unwrap()), 3.0);
    }

    #[test]
    fn composite_metric_limits_are_exact() {
        let p = point(1080, 30, 123.456, 7.89, 40.0);
        assert_eq!(composite_metric(&p, Alpha::ZERO), 123.456f64.log10());
        assert_eq!(composite_metric(&p, Alpha::ONE), 7.89f64.log10());
    }

    #[test]
    fn alpha_rejects_out_of_range() {
        assert!(Alpha::new(1.5).is_err());
        assert!(Alpha::new(-0.1).is_err());
        assert!(Alpha::new(f64::NAN).is_err());
        assert!(Alpha::new(0.0).is_ok());
        assert!(Alpha::new(1.0).is_ok());
    }

    #[test]
    fn dominance_mv_cases() {
        let a = ObjectiveVector { composite: 1.0, quality: 40.0 };
        let b = ObjectiveVector { composite: 1.5, quality: 39.0 };
        assert!(dominates_mv(&a, &b));
        assert!(!dominates_mv(&b, &a));

        let c = ObjectiveVector { composite: 1.0, quality: 39.0 };
        let d = ObjectiveVector { composite: 1.5, quality: 40.0 };
        assert!(!dominates_mv(&c, &d));
        assert!(!dominates_mv(&d, &c));

        let e = ObjectiveVector { composite: 2.0, quality: 35.0 };
        assert!(!dominates_mv(&e, &e));
    }

    #[test]
    fn dominance_3d_cases() {
        let a = point(720, 30, 100.0, 1.0, 40.0);
        let b = point(1080, 30, 200.0, 2.0, 39.0);
        assert!(dominates_3d(&a, &b, QualityMetric::Xpsnr).unwrap());
        assert!(!dominates_3d(&b, &a, QualityMetric::Xpsnr).unwrap());
        assert!(!dominates_3d(&a, &a, QualityMetric::Xpsnr).unwrap());

        // Bitrate worse blocks dominance even when the rest is better.
        let c = point(720, 30, 300.0, 1.0, 40.0);
        let d = point(1080, 30, 200.0, 2.0, 39.0);
        assert!(!dominates_3d(&c, &d, QualityMetric::Xpsnr).unwrap());
    }

    #[test]
    fn dominance_3d_missing_metric_is_an_error() {
        let a = point(720, 30, 100.0, 1.0, 40.0);
        let b = point(1080, 30, 200.0, 2.0, 39.0);
        assert!(dominates_3d(&a, &b, QualityMetric::Vmaf).is_err());
    }

    #[test]
    fn front_mv_three_point_example() {
        // (m, v) = (1, 30), (2, 40), (3, 35): the last is dominated.
        // Composite with alpha=0 is log10(bitrate), so bitrates 10, 100, 1000
        // produce m = 1, 2, 3.
        let s = set(vec![
            point(360, 40, 10.0, 1.0, 30.0),
            point(720, 35, 100.0, 1.0, 40.0),
            point(1080, 30, 1000.0, 1.0, 35.0),
        ]);
        let front = pareto_front_mv(&s, Alpha::ZERO, QualityMetric::Xpsnr).unwrap();
        assert_eq!(front_keys(&front), vec![(360, 40), (720, 35)]);
        assert_eq!(front_keys(&front), brute_force_mv(&s, Alpha::ZERO, QualityMetric::Xpsnr));
    }

    #[test]
    fn front_mv_identical_points_collapse() {
        let s = set(vec![
            point(720, 35, 100.0, 2.0, 40.0),
            point(720, 30, 100.0, 2.0, 40.0),
            point(1080, 32, 100.0, 2.0, 40.0),
        ]);
        let front = pareto_front_mv(&s, Alpha::new(0.5).unwrap(), QualityMetric::Xpsnr).unwrap();
        assert_eq!(front.len(), 1);
        assert_eq!(front.points[0].point.qp, 30);
    }

    #[test]
    fn front_mv_single_point() {
        let s = set(vec![point(720, 30, 100.0, 1.0, 40.0)]);
        let front = pareto_front_mv(&s, Alpha::new(0.25).unwrap(), QualityMetric::Xpsnr).unwrap();
        assert_eq!(front.len(), 1);
    }

    #[test]
    fn front_mv_staircase_invariant() {
        let s = random_set(77, 120);
        let front = pareto_front_mv(&s, Alpha::new(0.3).unwrap(), QualityMetric::Xpsnr).unwrap();
        for pair in front.points.windows(2) {
            assert!(pair[0].composite.unwrap() < pair[1].composite.unwrap());
            assert!(pair[0].quality < pair[1].quality);
        }
    }

    #[test]
    fn front_3d_pairwise_incomparable_points_all_kept() {
        let s = set(vec![
            point(360, 40, 100.0, 1.0, 30.0),
            point(720, 35, 50.0, 2.0, 30.0),
            point(1080, 30, 200.0, 3.0, 50.0),
        ]);
        let front = pareto_front_3d(&s, QualityMetric::Xpsnr).unwrap();
        assert_eq!(front.len(), 3);

        // A point worse in all three is excluded.
        let s2 = set(vec![
            point(360, 40, 100.0, 1.0, 30.0),
            point(720, 35, 50.0, 2.0, 30.0),
            point(1080, 30, 200.0, 3.0, 50.0),
            point(1440, 28, 300.0, 4.0, 29.0),
        ]);
        let front2 = pareto_front_3d(&s2, QualityMetric::Xpsnr).unwrap();
        assert_eq!(front2.len(), 3);
        assert!(!front2.points.iter().any(|fp| fp.point.resolution == 1440));
    }

    #[test]
    fn front_errors_on_empty_set() {
        let s = MeasurementSet::new("t", vec![]).unwrap();
        assert!(matches!(
            pareto_front_mv(&s, Alpha::ZERO, QualityMetric::Xpsnr),
            Err(ParetoError::EmptySet(_))
        ));
        assert!(matches!(pareto_front_3d(&s, QualityMetric::Xpsnr), Err(ParetoError::EmptySet(_))));
    }

    // Deterministic pseudo-random instance used by the property tests below.
    fn random_set(seed: u64, n: usize) -> MeasurementSet {
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let resolutions = [360u32, 540, 720, 1080, 1440, 2160];
        let mut points = Vec::new();
        let mut qp = 10;
        for i in 0..n {
            let resolution = resolutions[i % resolutions.len()];
            if i % resolutions.len() == 0 {
                qp += 1;
            }
            points.push(point(
                resolution,
                qp,
                10.0 + next() * 50_000.0,
                0.01 + next() * 40.0,
                25.0 + next() * 25.0,
            ));
        }
        set(points)
    }

    #[test]
    fn front_mv_matches_brute_force_on_random_instances() {
        for seed in 0..40 {
            let s = random_set(seed, 60);
            let alpha = Alpha::new((seed % 11) as f64 / 10.0).unwrap();
            let front = pareto_front_mv(&s, alpha, QualityMetric::Xpsnr).unwrap();
            assert_eq!(
                front_keys(&front),
                brute_force_mv(&s, alpha, QualityMetric::Xpsnr),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn front_is_idempotent() {
        for seed in 0..10 {
            let s = random_set(seed + 1000, 80);
            let alpha = Alpha::new(0.5).unwrap();
            let front = pareto_front_mv(&s, alpha, QualityMetric::Xpsnr).unwrap();
            let reduced = MeasurementSet::new("t", front.points.iter().map(|fp| fp.point.clone()).collect()).unwrap();
            let again = pareto_front_mv(&reduced, alpha, QualityMetric::Xpsnr).unwrap();
            assert_eq!(front_keys(&front), front_keys(&again));
        }
    }

    #[test]
    fn removing_non_front_point_preserves_front() {
        for seed in 0..10 {
            let s = random_set(seed + 2000, 50);
            let alpha = Alpha::new(0.75).unwrap();
            let front = pareto_front_mv(&s, alpha, QualityMetric::Xpsnr).unwrap();
            let members = front_keys(&front);
            let non_member = s
                .points()
                .iter()
                .find(|p| !members.contains(&(p.resolution, p.qp)))
                .cloned();
            let Some(victim) = non_member else { continue };
            let remaining: Vec<EncodePoint> = s
                .points()
                .iter()
                .filter(|p| (p.resolution, p.qp) != (victim.resolution, victim.qp))
                .cloned()
                .collect();
            let reduced = MeasurementSet::new("t", remaining).unwrap();
            let again = pareto_front_mv(&reduced, alpha, QualityMetric::Xpsnr).unwrap();
            assert_eq!(members, front_keys(&again), "seed {seed}");
        }
    }

    #[test]
    fn mv_front_members_lie_on_3d_front_for_interior_alpha() {
        for seed in 0..20 {
            let s = random_set(seed + 3000, 70);
            let alpha = Alpha::new(0.25 + 0.5 * ((seed % 5) as f64 / 4.0)).unwrap();
            let mv = pareto_front_mv(&s, alpha, QualityMetric::Xpsnr).unwrap();
            let full = front_keys(&pareto_front_3d(&s, QualityMetric::Xpsnr).unwrap());
            for key in front_keys(&mv) {
                assert!(full.contains(&key), "seed {seed}: {key:?} not on the 3d front");
            }
        }
    }

    #[test]
    fn decode_time_scaling_preserves_front_membership() {
        for seed in 0..10 {
            let s = random_set(seed + 4000, 60);
            let alpha = Alpha::new(0.5).unwrap();
            let before = front_keys(&pareto_front_mv(&s, alpha, QualityMetric::Xpsnr).unwrap());
            let scaled: Vec<EncodePoint> = s
                .points()
                .iter()
                .map(|p| {
                    let mut q = p.clone();
                    q.decode_time_s *= 7.5;
                    q
                })
                .collect();
            let scaled_set = MeasurementSet::new("t", scaled).unwrap();
            let after = front_keys(&pareto_front_mv(&scaled_set, alpha, QualityMetric::Xpsnr).unwrap());
            assert_eq!(before, after, "seed {seed}");
        }
    }

    #[test]
    fn alpha_limits_match_single_objective_fronts() {
        for seed in 0..10 {
            let s = random_set(seed + 5000, 60);
            // alpha = 0: same front as ranking by bitrate directly.
            let zero = front_keys(&pareto_front_mv(&s, Alpha::ZERO, QualityMetric::Xpsnr).unwrap());
            let by_bitrate = brute_force_2d(&s, |p| p.bitrate_kbps);
            assert_eq!(zero, by_bitrate, "seed {seed}");
            // alpha = 1: same front as ranking by decode time directly.
            let one = front_keys(&pareto_front_mv(&s, Alpha::ONE, QualityMetric::Xpsnr).unwrap());
            let by_decode = brute_force_2d(&s, |p| p.decode_time_s);
            assert_eq!(one, by_decode, "seed {seed}");
        }
    }

    /// Brute-force 2-objective front minimizing `cost` and maximizing xpsnr,
    /// with the same duplicate collapse as the implementation.
    fn brute_force_2d(set: &MeasurementSet, cost: impl Fn(&EncodePoint) -> f64) -> Vec<(u32, u32)> {
        let q = |p: &EncodePoint| p.xpsnr_db.unwrap();
        let mut keys = Vec::new();
        for (i, p) in set.points().iter().enumerate() {
            let dominated = set.points().iter().enumerate().any(|(j, o)| {
                j != i
                    && cost(o) <= cost(p)
                    && q(o) >= q(p)
                    && (cost(o) < cost(p) || q(o) > q(p))
            });
            if dominated {
                continue;
            }
            let dup_better = set.points().iter().enumerate().any(|(j, o)| {
                j != i && cost(o) == cost(p) && q(o) == q(p) && (o.qp, o.resolution) < (p.qp, p.resolution)
            });
            if !dup_better {
                keys.push((p.resolution, p.qp));
            }
        }
        keys.sort_unstable();
        keys
    }
}
