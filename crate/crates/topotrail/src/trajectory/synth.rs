//! Synthetic trajectory generator.
//!
//! Emulates the data regime the toolkit targets: one trajectory per day, each
//! a bounded random walk inside a convex patch polygon, with walk parameters
//! switching between regimes at maintenance days. Regimes with different step
//! lengths produce loops of different scales, which is the signal the
//! downstream topological features pick up.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::trajectory::{Dataset, Trajectory, TrajectoryPoint};

/// Convex polygon with counter-clockwise vertices, used as a patch boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<(f64, f64)>,
}

impl Polygon {
    /// Validates convexity and orientation. Vertices must be finite, at
    /// least 3, strictly convex, and counter-clockwise.
    pub fn new(vertices: Vec<(f64, f64)>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::validation("polygon needs at least 3 vertices"));
        }
        if vertices
            .iter()
            .any(|&(x, y)| !(x.is_finite() && y.is_finite()))
        {
            return Err(Error::validation("polygon vertex is not finite"));
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            let cross = (b.0 - a.0) * (c.1 - b.1) - (b.1 - a.1) * (c.0 - b.0);
            if cross <= 0.0 {
                return Err(Error::validation(
                    "polygon must be strictly convex and counter-clockwise",
                ));
            }
        }
        Ok(Self { vertices })
    }

    /// Axis-aligned rectangle helper.
    pub fn rectangle(x_min: f64, y_min: f64, x_max: f64, y_max: f64) -> Result<Self> {
        Self::new(vec![
            (x_min, y_min),
            (x_max, y_min),
            (x_max, y_max),
            (x_min, y_max),
        ])
    }

    pub fn vertices(&self) -> &[(f64, f64)] {
        &self.vertices
    }

    pub fn centroid(&self) -> (f64, f64) {
        let n = self.vertices.len() as f64;
        let (sx, sy) = self
            .vertices
            .iter()
            .fold((0.0, 0.0), |(sx, sy), &(x, y)| (sx + x, sy + y));
        (sx / n, sy / n)
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        // Convex + CCW: inside iff left of (or on) every directed edge.
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            (b.0 - a.0) * (y - a.1) - (b.1 - a.1) * (x - a.0) >= 0.0
        })
    }

    /// Reflects a point across the first edge line it violates, if any.
    fn reflect_once(&self, x: f64, y: f64) -> Option<(f64, f64)> {
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let ex = b.0 - a.0;
            let ey = b.1 - a.1;
            let side = ex * (y - a.1) - ey * (x - a.0);
            if side < 0.0 {
                // Mirror across the infinite line through the edge.
                let len2 = ex * ex + ey * ey;
                let t = ((x - a.0) * ex + (y - a.1) * ey) / len2;
                let px = a.0 + t * ex;
                let py = a.1 + t * ey;
                return Some((2.0 * px - x, 2.0 * py - y));
            }
        }
        None
    }
}

/// Walk parameters for one regime (the stretch between maintenance events).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Regime {
    /// Mean step length in meters.
    pub step_length_mean: f64,
    /// Concentration of the turning-angle noise; the per-step heading change
    /// is Normal(0, 1/sqrt(concentration)).
    pub turning_angle_concentration: f64,
}

/// Everything the generator needs: patch geometry, schedule, and per-regime
/// walk parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthConfig {
    pub patch_polygons: Vec<Polygon>,
    pub days_per_regime: usize,
    pub steps_per_day: usize,
    pub regimes: Vec<Regime>,
    pub seed: u64,
}

impl SynthConfig {
    fn validate(&self) -> Result<()> {
        if self.patch_polygons.is_empty() {
            return Err(Error::validation("at least one patch polygon required"));
        }
        if self.days_per_regime == 0 {
            return Err(Error::validation("days_per_regime must be positive"));
        }
        if self.steps_per_day == 0 {
            return Err(Error::validation("steps_per_day must be positive"));
        }
        if self.regimes.is_empty() {
            return Err(Error::validation("at least one regime required"));
        }
        for r in &self.regimes {
            if !(r.step_length_mean.is_finite() && r.step_length_mean > 0.0) {
                return Err(Error::validation("step_length_mean must be positive"));
            }
            if !(r.turning_angle_concentration.is_finite() && r.turning_angle_concentration > 0.0)
            {
                return Err(Error::validation(
                    "turning_angle_concentration must be positive",
                ));
            }
        }
        Ok(())
    }
}

/// SplitMix64 finalizer; decorrelates the per-day stream seeds.
fn mix_seed(seed: u64, day: u64) -> u64 {
    let mut z = seed ^ day.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

const MAX_REFLECTIONS: usize = 8;

fn walk_day(polygon: &Polygon, regime: Regime, steps: usize, rng: &mut ChaCha8Rng) -> Vec<TrajectoryPoint> {
    let turn_sigma = 1.0 / regime.turning_angle_concentration.sqrt();
    let turn = Normal::new(0.0, turn_sigma).expect("sigma is finite and positive");
    let (mut x, mut y) = polygon.centroid();
    let mut heading = rng.gen_range(0.0..std::f64::consts::TAU);
    let mut points = Vec::with_capacity(steps);
    points.push(TrajectoryPoint::new(0.0, x, y));
    for step in 1..steps {
        heading += turn.sample(rng);
        let length = regime.step_length_mean * (0.5 + rng.gen::<f64>());
        let mut nx = x + length * heading.cos();
        let mut ny = y + length * heading.sin();
        let mut bounces = 0;
        while !polygon.contains(nx, ny) && bounces < MAX_REFLECTIONS {
            match polygon.reflect_once(nx, ny) {
                Some((rx, ry)) => {
                    nx = rx;
                    ny = ry;
                }
                None => break,
            }
            bounces += 1;
        }
        if polygon.contains(nx, ny) {
            x = nx;
            y = ny;
        }
        points.push(TrajectoryPoint::new(step as f64, x, y));
    }
    points
}

/// Generates a dataset of `days_per_regime × regimes` daily trajectories.
///
/// Day `d` (1-based) uses patch `(d−1) mod patches + 1` and the regime
/// `(d−1) / days_per_regime`; maintenance dates sit on the first day of every
/// regime after the first. Each day draws from its own seed-derived stream,
/// so output is bit-identical across runs and thread counts.
pub fn generate_synthetic(config: &SynthConfig) -> Result<Dataset> {
    config.validate()?;
    let num_patches = config.patch_polygons.len();
    let total_days = config.days_per_regime * config.regimes.len();
    let mut trajectories = Vec::with_capacity(total_days);
    for day in 1..=total_days as i64 {
        let regime_idx = (day as usize - 1) / config.days_per_regime;
        let patch_idx = (day as usize - 1) % num_patches;
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(config.seed, day as u64));
        let points = walk_day(
            &config.patch_polygons[patch_idx],
            config.regimes[regime_idx],
            config.steps_per_day,
            &mut rng,
        );
        let mut traj = Trajectory::new(points, day, patch_idx as u32 + 1)?;
        traj.period_id = Some(regime_idx);
        trajectories.push(traj);
    }
    let maintenance_dates = (1..config.regimes.len())
        .map(|k| (k * config.days_per_regime) as i64 + 1)
        .collect();
    Ok(Dataset {
        trajectories,
        maintenance_dates,
    })
}
