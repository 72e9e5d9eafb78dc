//! Exact comparison of persistence diagrams: optimal partial matchings, the
//! Wasserstein distance, Fréchet energy, and the iterative barycenter.
//!
//! Unmatched diagram points pay their distance to the diagonal, so two
//! diagrams of different sizes are always comparable. The matching problem
//! is solved exactly as a diagonal-augmented square assignment.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::persistence::PersistenceDiagram;

pub mod assignment;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// A complete partial matching between two diagrams U and V: matched
/// off-diagonal pairs plus the points of each side sent to the diagonal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub u_to_diagonal: Vec<usize>,
    pub v_to_diagonal: Vec<usize>,
    pub cost: f64,
}

fn point_distance(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

/// Distance from a diagram point to its orthogonal projection onto the
/// diagonal.
fn diagonal_distance(p: (f64, f64)) -> f64 {
    (p.1 - p.0) / SQRT_2
}

fn check_finite(d: &PersistenceDiagram) -> Result<()> {
    if d.pairs
        .iter()
        .any(|p| !(p.0.is_finite() && p.1.is_finite()))
    {
        return Err(Error::validation("diagram has non-finite points"));
    }
    Ok(())
}

/// Total transport cost of a matching: Euclidean distance per matched pair
/// plus the diagonal projection distance per unmatched point. The matching
/// must cover every point of both diagrams exactly once.
pub fn matching_cost(
    u: &PersistenceDiagram,
    v: &PersistenceDiagram,
    matching: &Matching,
) -> Result<f64> {
    let mut u_seen = vec![0usize; u.len()];
    let mut v_seen = vec![0usize; v.len()];
    for &(i, j) in &matching.pairs {
        *u_seen
            .get_mut(i)
            .ok_or_else(|| Error::validation(format!("matching references U point {i}")))? += 1;
        *v_seen
            .get_mut(j)
            .ok_or_else(|| Error::validation(format!("matching references V point {j}")))? += 1;
    }
    for &i in &matching.u_to_diagonal {
        *u_seen
            .get_mut(i)
            .ok_or_else(|| Error::validation(format!("matching references U point {i}")))? += 1;
    }
    for &j in &matching.v_to_diagonal {
        *v_seen
            .get_mut(j)
            .ok_or_else(|| Error::validation(format!("matching references V point {j}")))? += 1;
    }
    if u_seen.iter().any(|&c| c != 1) || v_seen.iter().any(|&c| c != 1) {
        return Err(Error::validation(
            "matching must cover every point of both diagrams exactly once",
        ));
    }
    // Fixed summation order keeps the cost bit-reproducible for any
    // representation of the same matching.
    let mut pairs = matching.pairs.clone();
    pairs.sort_unstable();
    let mut u_diag = matching.u_to_diagonal.clone();
    u_diag.sort_unstable();
    let mut v_diag = matching.v_to_diagonal.clone();
    v_diag.sort_unstable();
    let mut cost = 0.0;
    for (i, j) in pairs {
        cost += point_distance(u.pairs[i], v.pairs[j]);
    }
    for i in u_diag {
        cost += diagonal_distance(u.pairs[i]);
    }
    for j in v_diag {
        cost += diagonal_distance(v.pairs[j]);
    }
    Ok(cost)
}

/// Finds the cost-minimal partial matching between two diagrams.
///
/// The assignment problem is the standard diagonal augmentation: U's points
/// plus |V| diagonal proxies against V's points plus |U| diagonal proxies,
/// with proxy-to-proxy cost 0, solved exactly by the Hungarian algorithm.
pub fn optimal_partial_matching(
    u: &PersistenceDiagram,
    v: &PersistenceDiagram,
) -> Result<Matching> {
    check_finite(u)?;
    check_finite(v)?;
    let nu = u.len();
    let nv = v.len();
    let n = nu + nv;
    if n == 0 {
        return Ok(Matching {
            pairs: Vec::new(),
            u_to_diagonal: Vec::new(),
            v_to_diagonal: Vec::new(),
            cost: 0.0,
        });
    }
    let mut cost = vec![vec![0.0f64; n]; n];
    for (i, row) in cost.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = match (i < nu, j < nv) {
                (true, true) => point_distance(u.pairs[i], v.pairs[j]),
                (true, false) => diagonal_distance(u.pairs[i]),
                (false, true) => diagonal_distance(v.pairs[j]),
                (false, false) => 0.0,
            };
        }
    }
    let row_to_col = assignment::min_cost_assignment(&cost);
    let mut matching = Matching {
        pairs: Vec::new(),
        u_to_diagonal: Vec::new(),
        v_to_diagonal: Vec::new(),
        cost: 0.0,
    };
    for (i, &j) in row_to_col.iter().enumerate() {
        match (i < nu, j < nv) {
            (true, true) => matching.pairs.push((i, j)),
            (true, false) => matching.u_to_diagonal.push(i),
            (false, true) => matching.v_to_diagonal.push(j),
            (false, false) => {}
        }
    }
    matching.cost = matching_cost(u, v, &matching)?;
    Ok(matching)
}

/// 1-Wasserstein distance: the cost of the optimal partial matching.
pub fn wasserstein(u: &PersistenceDiagram, v: &PersistenceDiagram) -> Result<f64> {
    if u.dim != v.dim {
        return Err(Error::validation(format!(
            "cannot compare diagrams of dimension {} and {}",
            u.dim, v.dim
        )));
    }
    Ok(optimal_partial_matching(u, v)?.cost)
}

/// Sum of squared Wasserstein distances from `mu` to each diagram.
pub fn frechet_energy(mu: &PersistenceDiagram, diagrams: &[PersistenceDiagram]) -> Result<f64> {
    if diagrams.is_empty() {
        return Err(Error::validation(
            "Fréchet energy needs at least one diagram",
        ));
    }
    let mut energy = 0.0;
    for d in diagrams {
        let w = wasserstein(mu, d)?;
        energy += w * w;
    }
    Ok(energy)
}

/// Outcome of the iterative barycenter search.
#[derive(Debug, Clone, PartialEq)]
pub struct BarycenterResult {
    pub diagram: PersistenceDiagram,
    pub energy: f64,
    pub iterations: usize,
    pub energy_trace: Vec<f64>,
}

/// One averaging sweep: each point of `mu` moves to the arithmetic mean of
/// its matched images (diagonal matches contribute the point's orthogonal
/// projection); points landing on the diagonal are dropped.
fn mean_update(mu: &PersistenceDiagram, diagrams: &[PersistenceDiagram]) -> Result<PersistenceDiagram> {
    let n = diagrams.len() as f64;
    let mut sums = vec![(0.0f64, 0.0f64); mu.len()];
    for d in diagrams {
        let matching = optimal_partial_matching(mu, d)?;
        for &(i, j) in &matching.pairs {
            sums[i].0 += d.pairs[j].0;
            sums[i].1 += d.pairs[j].1;
        }
        for &i in &matching.u_to_diagonal {
            let (b, dth) = mu.pairs[i];
            let proj = (b + dth) / 2.0;
            sums[i].0 += proj;
            sums[i].1 += proj;
        }
    }
    let pairs = sums
        .into_iter()
        .map(|(sb, sd)| (sb / n, sd / n))
        .filter(|&(b, d)| d > b)
        .collect();
    Ok(PersistenceDiagram::new(mu.dim, pairs))
}

fn median_count_index(diagrams: &[PersistenceDiagram]) -> usize {
    let mut counts: Vec<usize> = diagrams.iter().map(|d| d.len()).collect();
    counts.sort_unstable();
    let median = counts[(counts.len() - 1) / 2];
    diagrams
        .iter()
        .position(|d| d.len() == median)
        .expect("median count comes from the list")
}

/// Iterative Fréchet-mean search over diagrams of one dimension.
///
/// Starting from `diagrams[init_index]` (default: the diagram whose point
/// count is the family's median, ties to the lowest index), alternates
/// matching and averaging. A sweep that fails to lower the energy is
/// discarded and the search stops, so the energy trace is non-increasing by
/// construction.
pub fn barycenter(
    diagrams: &[PersistenceDiagram],
    init_index: Option<usize>,
    tol: f64,
    max_iter: usize,
) -> Result<BarycenterResult> {
    if diagrams.is_empty() {
        return Err(Error::validation("barycenter needs at least one diagram"));
    }
    if diagrams.windows(2).any(|w| w[0].dim != w[1].dim) {
        return Err(Error::validation(
            "barycenter inputs must share one homology dimension",
        ));
    }
    if !(tol > 0.0) {
        return Err(Error::validation("tol must be positive"));
    }
    if max_iter == 0 {
        return Err(Error::validation("max_iter must be at least 1"));
    }
    let init = match init_index {
        Some(i) if i < diagrams.len() => i,
        Some(i) => {
            return Err(Error::validation(format!(
                "init_index {i} out of range for {} diagrams",
                diagrams.len()
            )))
        }
        None => median_count_index(diagrams),
    };
    let mut mu = diagrams[init].clone();
    let mut energy = frechet_energy(&mu, diagrams)?;
    let mut trace = vec![energy];
    let mut iterations = 0;
    for _ in 0..max_iter {
        let candidate = mean_update(&mu, diagrams)?;
        let candidate_energy = frechet_energy(&candidate, diagrams)?;
        if candidate_energy > energy {
            break;
        }
        iterations += 1;
        let improvement = energy - candidate_energy;
        mu = candidate;
        energy = candidate_energy;
        trace.push(energy);
        if improvement < tol * energy.max(1e-300) {
            break;
        }
    }
    Ok(BarycenterResult {
        diagram: mu,
        energy,
        iterations,
        energy_trace: trace,
    })
}

/// Wasserstein distances between consecutive diagrams: element i compares
/// diagram i with diagram i+1.
pub fn wasserstein_series(diagrams: &[PersistenceDiagram]) -> Result<Vec<f64>> {
    if diagrams.len() < 2 {
        return Err(Error::validation("series needs at least 2 diagrams"));
    }
    diagrams
        .windows(2)
        .map(|w| wasserstein(&w[0], &w[1]))
        .collect()
}
