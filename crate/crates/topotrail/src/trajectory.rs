//! Trajectory ingestion, daily segmentation, and subsampling.
//!
//! The unit of analysis is one trajectory: the ordered 2-D positions a robot
//! visited during one day inside one patch. Datasets are exchanged as a
//! 5-column CSV (`day,patch,t,x,y`) with an optional maintenance sidecar
//! listing one day identifier per line.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

pub mod synth;

/// One GPS fix: time in seconds plus planar coordinates in meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

impl TrajectoryPoint {
    pub fn new(t: f64, x: f64, y: f64) -> Self {
        Self { t, x, y }
    }
}

/// The positions recorded during one day inside one patch, ordered by time.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub points: Vec<TrajectoryPoint>,
    pub day: i64,
    pub patch_id: u32,
    /// Index of the maintenance interval containing `day`, once assigned.
    pub period_id: Option<usize>,
}

impl Trajectory {
    /// Builds a trajectory, checking the point invariants: non-empty, finite
    /// coordinates, non-decreasing timestamps.
    pub fn new(points: Vec<TrajectoryPoint>, day: i64, patch_id: u32) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::validation(format!(
                "trajectory (day {day}, patch {patch_id}) has no points"
            )));
        }
        for p in &points {
            if !(p.t.is_finite() && p.x.is_finite() && p.y.is_finite()) {
                return Err(Error::validation(format!(
                    "non-finite coordinate in trajectory (day {day}, patch {patch_id})"
                )));
            }
        }
        if points.windows(2).any(|w| w[1].t < w[0].t) {
            return Err(Error::validation(format!(
                "timestamps not monotone in trajectory (day {day}, patch {patch_id})"
            )));
        }
        Ok(Self {
            points,
            day,
            patch_id,
            period_id: None,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// A collection of daily trajectories plus the known maintenance days.
#[derive(Debug, Clone, Default)]
pub struct Dataset {
    pub trajectories: Vec<Trajectory>,
    pub maintenance_dates: Vec<i64>,
}

impl Dataset {
    /// Sorted list of distinct days present.
    pub fn days(&self) -> Vec<i64> {
        let mut days: Vec<i64> = self.trajectories.iter().map(|t| t.day).collect();
        days.sort_unstable();
        days.dedup();
        days
    }

    /// Sorted list of distinct patch ids present.
    pub fn patches(&self) -> Vec<u32> {
        let mut ids: Vec<u32> = self.trajectories.iter().map(|t| t.patch_id).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    pub fn find(&self, day: i64, patch_id: u32) -> Option<&Trajectory> {
        self.trajectories
            .iter()
            .find(|t| t.day == day && t.patch_id == patch_id)
    }
}

const CSV_HEADER: &str = "day,patch,t,x,y";

/// Parses the canonical trajectory CSV (`day,patch,t,x,y`, one record per
/// line) into a dataset with one trajectory per `(day, patch)` group.
///
/// Timestamps must be non-decreasing within each group; coordinates must be
/// finite. Maintenance dates come from a separate sidecar, see
/// [`parse_maintenance_dates`].
pub fn parse_trajectory_csv<R: BufRead>(reader: R) -> Result<Dataset> {
    let mut lines = reader.lines().enumerate();
    let header = match lines.next() {
        Some((_, line)) => line?,
        None => return Err(Error::validation("empty input: missing header")),
    };
    if header.trim() != CSV_HEADER {
        return Err(Error::parse(
            1,
            format!("expected header `{CSV_HEADER}`, got `{}`", header.trim()),
        ));
    }

    // BTreeMap keeps (day, patch) groups in deterministic order.
    let mut groups: BTreeMap<(i64, u32), Vec<TrajectoryPoint>> = BTreeMap::new();
    let mut records = 0usize;
    for (idx, line) in lines {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let fields: Vec<&str> = trimmed.split(',').collect();
        if fields.len() != 5 {
            return Err(Error::parse(
                line_no,
                format!("expected 5 fields, got {}", fields.len()),
            ));
        }
        let day: i64 = fields[0]
            .trim()
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad day `{}`", fields[0])))?;
        let patch: u32 = fields[1]
            .trim()
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad patch `{}`", fields[1])))?;
        let mut nums = [0.0f64; 3];
        for (slot, (name, raw)) in nums
            .iter_mut()
            .zip(["t", "x", "y"].iter().zip(&fields[2..5]))
        {
            let v: f64 = raw
                .trim()
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad {name} `{raw}`")))?;
            if !v.is_finite() {
                return Err(Error::parse(line_no, format!("non-finite {name} `{raw}`")));
            }
            *slot = v;
        }
        groups
            .entry((day, patch))
            .or_default()
            .push(TrajectoryPoint::new(nums[0], nums[1], nums[2]));
        records += 1;
    }
    if records == 0 {
        return Err(Error::validation("empty input: no records"));
    }

    let mut trajectories = Vec::with_capacity(groups.len());
    for ((day, patch_id), points) in groups {
        trajectories.push(Trajectory::new(points, day, patch_id)?);
    }
    Ok(Dataset {
        trajectories,
        maintenance_dates: Vec::new(),
    })
}

/// Parses the maintenance sidecar: one day identifier per line, strictly
/// increasing.
pub fn parse_maintenance_dates<R: BufRead>(reader: R) -> Result<Vec<i64>> {
    let mut dates = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let day: i64 = trimmed
            .parse()
            .map_err(|_| Error::parse(idx + 1, format!("bad maintenance day `{trimmed}`")))?;
        dates.push(day);
    }
    if dates.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::validation(
            "maintenance dates must be strictly increasing",
        ));
    }
    Ok(dates)
}

/// Writes a dataset back to the canonical CSV dialect. Floats use the
/// shortest representation that round-trips, so parse/serialize is lossless.
pub fn write_trajectory_csv<W: Write>(dataset: &Dataset, mut out: W) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for traj in &dataset.trajectories {
        for p in &traj.points {
            writeln!(out, "{},{},{},{},{}", traj.day, traj.patch_id, p.t, p.x, p.y)?;
        }
    }
    Ok(())
}

/// Writes the maintenance sidecar.
pub fn write_maintenance_dates<W: Write>(dates: &[i64], mut out: W) -> Result<()> {
    for d in dates {
        writeln!(out, "{d}")?;
    }
    Ok(())
}

/// Assigns every trajectory the index of the maintenance interval containing
/// its day: period 0 before the first maintenance, period k from maintenance
/// day k onwards. Idempotent.
pub fn segment_periods(mut dataset: Dataset) -> Result<Dataset> {
    if dataset.maintenance_dates.is_empty() {
        return Err(Error::validation(
            "segment_periods requires at least one maintenance date",
        ));
    }
    if dataset.maintenance_dates.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::validation("maintenance dates must be sorted"));
    }
    for traj in &mut dataset.trajectories {
        let period = dataset
            .maintenance_dates
            .partition_point(|&d| d <= traj.day);
        traj.period_id = Some(period);
    }
    Ok(dataset)
}

/// Point-selection strategy for [`subsample`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsampleStrategy {
    /// Every k-th point (k = ceil(n / target)) plus the last point.
    Stride,
    /// Greedy farthest-point landmarks starting from the first point.
    Maxmin,
}

impl std::str::FromStr for SubsampleStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stride" => Ok(SubsampleStrategy::Stride),
            "maxmin" => Ok(SubsampleStrategy::Maxmin),
            other => Err(Error::validation(format!(
                "unknown subsample strategy `{other}` (expected stride or maxmin)"
            ))),
        }
    }
}

/// Reduces a trajectory to at most `target_size` points, preserving the
/// original point order. Trajectories already small enough are returned
/// unchanged.
pub fn subsample(
    trajectory: &Trajectory,
    strategy: SubsampleStrategy,
    target_size: usize,
) -> Result<Trajectory> {
    if target_size < 2 {
        return Err(Error::validation("subsample target must be at least 2"));
    }
    let n = trajectory.points.len();
    if n <= target_size {
        return Ok(trajectory.clone());
    }
    let keep: Vec<usize> = match strategy {
        SubsampleStrategy::Stride => {
            let k = n.div_ceil(target_size);
            let mut idx: Vec<usize> = (0..n).step_by(k).collect();
            if *idx.last().unwrap() != n - 1 {
                idx.push(n - 1);
            }
            idx
        }
        SubsampleStrategy::Maxmin => {
            let pts = &trajectory.points;
            let dist2 = |a: usize, b: usize| -> f64 {
                let dx = pts[a].x - pts[b].x;
                let dy = pts[a].y - pts[b].y;
                dx * dx + dy * dy
            };
            let mut min_d2 = vec![f64::INFINITY; n];
            let mut selected = vec![0usize];
            for i in 0..n {
                min_d2[i] = dist2(0, i);
            }
            while selected.len() < target_size {
                let mut best = 0;
                let mut best_d2 = -1.0;
                for i in 0..n {
                    if min_d2[i] > best_d2 {
                        best = i;
                        best_d2 = min_d2[i];
                    }
                }
                selected.push(best);
                for i in 0..n {
                    let d2 = dist2(best, i);
                    if d2 < min_d2[i] {
                        min_d2[i] = d2;
                    }
                }
            }
            selected.sort_unstable();
            selected
        }
    };
    let points = keep.iter().map(|&i| trajectory.points[i]).collect();
    let mut out = Trajectory::new(points, trajectory.day, trajectory.patch_id)?;
    out.period_id = trajectory.period_id;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn csv(body: &str) -> String {
        format!("{CSV_HEADER}\n{body}")
    }

    #[test]
    fn parse_single_group() {
        let data = csv("1,1,0,0.5,0.5\n1,1,1,1.5,0.5\n1,1,2,1.5,1.5\n");
        let ds = parse_trajectory_csv(Cursor::new(data)).unwrap();
        assert_eq!(ds.trajectories.len(), 1);
        assert_eq!(ds.trajectories[0].points.len(), 3);
        assert_eq!(ds.trajectories[0].day, 1);
        assert_eq!(ds.trajectories[0].patch_id, 1);
    }

    #[test]
    fn parse_groups_by_day() {
        let data = csv("1,1,0,0,0\n2,1,0,1,1\n1,1,1,0.5,0\n");
        let ds = parse_trajectory_csv(Cursor::new(data)).unwrap();
        assert_eq!(ds.trajectories.len(), 2);
        assert_eq!(ds.trajectories[0].points.len(), 2);
        assert_eq!(ds.trajectories[1].points.len(), 1);
    }

    #[test]
    fn parse_rejects_nan() {
        let data = csv("1,1,0,NaN,0\n");
        let err = parse_trajectory_csv(Cursor::new(data)).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_malformed_line() {
        let data = csv("1,1,0,0\n");
        assert!(matches!(
            parse_trajectory_csv(Cursor::new(data)),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn parse_rejects_non_monotone_time() {
        let data = csv("1,1,5,0,0\n1,1,4,1,1\n");
        assert!(matches!(
            parse_trajectory_csv(Cursor::new(data)),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn parse_rejects_empty() {
        assert!(parse_trajectory_csv(Cursor::new(String::new())).is_err());
        assert!(parse_trajectory_csv(Cursor::new(format!("{CSV_HEADER}\n"))).is_err());
    }

    #[test]
    fn round_trip_preserves_records() {
        let data = csv("1,2,0,0.1,0.30000000000000004\n1,2,1.5,-3.25,7\n3,4,0,1e-9,2.5\n");
        let ds = parse_trajectory_csv(Cursor::new(data)).unwrap();
        let mut buf = Vec::new();
        write_trajectory_csv(&ds, &mut buf).unwrap();
        let ds2 = parse_trajectory_csv(Cursor::new(buf)).unwrap();
        assert_eq!(ds.trajectories, ds2.trajectories);
    }

    #[test]
    fn segment_assigns_interval_index() {
        let data = csv("5,1,0,0,0\n15,1,0,1,1\n");
        let mut ds = parse_trajectory_csv(Cursor::new(data)).unwrap();
        ds.maintenance_dates = vec![10];
        let ds = segment_periods(ds).unwrap();
        assert_eq!(ds.trajectories[0].period_id, Some(0));
        assert_eq!(ds.trajectories[1].period_id, Some(1));
    }

    #[test]
    fn segment_is_idempotent() {
        let data = csv("5,1,0,0,0\n10,1,0,1,1\n25,1,0,2,2\n");
        let mut ds = parse_trajectory_csv(Cursor::new(data)).unwrap();
        ds.maintenance_dates = vec![10, 20];
        let once = segment_periods(ds).unwrap();
        let twice = segment_periods(once.clone()).unwrap();
        let ids = |d: &Dataset| d.trajectories.iter().map(|t| t.period_id).collect::<Vec<_>>();
        assert_eq!(ids(&once), ids(&twice));
        assert_eq!(ids(&once), vec![Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn segment_rejects_unsorted_dates() {
        let data = csv("5,1,0,0,0\n");
        let mut ds = parse_trajectory_csv(Cursor::new(data)).unwrap();
        ds.maintenance_dates = vec![20, 10];
        assert!(matches!(segment_periods(ds), Err(Error::Validation(_))));
    }

    fn traj_from_xy(xy: &[(f64, f64)]) -> Trajectory {
        let points = xy
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| TrajectoryPoint::new(i as f64, x, y))
            .collect();
        Trajectory::new(points, 1, 1).unwrap()
    }

    #[test]
    fn stride_keeps_first_and_last() {
        let traj = traj_from_xy(&(0..10).map(|i| (i as f64, 0.0)).collect::<Vec<_>>());
        let out = subsample(&traj, SubsampleStrategy::Stride, 5).unwrap();
        assert!(out.points.len() == 5 || out.points.len() == 6);
        assert_eq!(out.points[0], traj.points[0]);
        assert_eq!(*out.points.last().unwrap(), *traj.points.last().unwrap());
    }

    #[test]
    fn subsample_identity_when_small() {
        let traj = traj_from_xy(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]);
        let out = subsample(&traj, SubsampleStrategy::Maxmin, 5).unwrap();
        assert_eq!(out, traj);
    }

    #[test]
    fn maxmin_picks_square_corners() {
        // Greedy farthest-point from the first corner keeps all corners and
        // drops the center.
        let traj = traj_from_xy(&[
            (0.0, 0.0),
            (1.0, 0.0),
            (1.0, 1.0),
            (0.0, 1.0),
            (0.5, 0.5),
        ]);
        let out = subsample(&traj, SubsampleStrategy::Maxmin, 4).unwrap();
        let xy: Vec<(f64, f64)> = out.points.iter().map(|p| (p.x, p.y)).collect();
        assert_eq!(
            xy,
            vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
        );
    }

    #[test]
    fn subsample_rejects_tiny_target() {
        let traj = traj_from_xy(&[(0.0, 0.0), (1.0, 0.0)]);
        assert!(subsample(&traj, SubsampleStrategy::Stride, 1).is_err());
    }

    #[test]
    fn subsample_output_is_subset() {
        let xy: Vec<(f64, f64)> = (0..37)
            .map(|i| ((i * 7 % 13) as f64, (i * 5 % 11) as f64))
            .collect();
        let traj = traj_from_xy(&xy);
        for strategy in [SubsampleStrategy::Stride, SubsampleStrategy::Maxmin] {
            let out = subsample(&traj, strategy, 9).unwrap();
            assert!(out.points.len() <= 10);
            for p in &out.points {
                assert!(traj.points.contains(p));
            }
        }
    }
}
