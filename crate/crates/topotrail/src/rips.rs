//! Vietoris-Rips filtration over a 2-D point cloud, up to dimension 2.
//!
//! A simplex enters the filtration at the diameter of its vertex set:
//! vertices at 0, edges at their endpoint distance, triangles at their
//! longest edge. Only dimensions ≤ 2 are built; one-dimensional homology
//! deaths never need anything larger.

use std::io::Write;

use crate::error::{Error, Result};
use crate::trajectory::Trajectory;

/// Symmetric matrix of pairwise Euclidean distances.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<f64>,
}

impl DistanceMatrix {
    /// Builds the matrix from planar points.
    pub fn from_points(points: &[(f64, f64)]) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::validation("distance matrix needs at least 1 point"));
        }
        if points
            .iter()
            .any(|&(x, y)| !(x.is_finite() && y.is_finite()))
        {
            return Err(Error::validation("non-finite point coordinate"));
        }
        let mut d = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let dij = (points[i].0 - points[j].0).hypot(points[i].1 - points[j].1);
                d[i * n + j] = dij;
                d[j * n + i] = dij;
            }
        }
        Ok(Self { n, d })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n + j]
    }

    /// Largest pairwise distance (0 for a single point).
    pub fn diameter(&self) -> f64 {
        self.d.iter().fold(0.0, |acc, &v| acc.max(v))
    }
}

/// Pairwise distances of a trajectory's (x, y) positions.
pub fn distance_matrix(trajectory: &Trajectory) -> Result<DistanceMatrix> {
    let pts: Vec<(f64, f64)> = trajectory.points.iter().map(|p| (p.x, p.y)).collect();
    DistanceMatrix::from_points(&pts)
}

/// One simplex of dimension ≤ 2 with its filtration value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Simplex {
    pub value: f64,
    verts: [u32; 3],
    dim: u8,
}

impl Simplex {
    pub fn vertex(v: u32) -> Self {
        Self {
            value: 0.0,
            verts: [v, u32::MAX, u32::MAX],
            dim: 0,
        }
    }

    pub fn edge(value: f64, i: u32, j: u32) -> Self {
        debug_assert!(i < j);
        Self {
            value,
            verts: [i, j, u32::MAX],
            dim: 1,
        }
    }

    pub fn triangle(value: f64, i: u32, j: u32, k: u32) -> Self {
        debug_assert!(i < j && j < k);
        Self {
            value,
            verts: [i, j, k],
            dim: 2,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    /// Vertex indices, strictly increasing.
    pub fn vertices(&self) -> &[u32] {
        &self.verts[..=self.dim as usize]
    }

    /// Filtration sort key: value, then dimension, then vertex order.
    /// Unused vertex slots hold `u32::MAX`, so comparing the full array is
    /// lexicographic on the actual vertices.
    fn sort_key(&self) -> (f64, u8, [u32; 3]) {
        (self.value, self.dim, self.verts)
    }
}

/// All simplices of the Rips complex at scale `eps_max`, in filtration order.
#[derive(Debug, Clone, PartialEq)]
pub struct Filtration {
    pub simplices: Vec<Simplex>,
    pub eps_max: f64,
}

/// Builds the Rips filtration: every vertex, every edge with length ≤
/// `eps_max`, and (for `max_dim` = 2) every triangle whose longest edge is ≤
/// `eps_max`. `eps_max = None` uses the cloud diameter, so the complex
/// becomes a full simplex skeleton at the final scale.
pub fn rips_filtration(
    dmat: &DistanceMatrix,
    eps_max: Option<f64>,
    max_dim: usize,
) -> Result<Filtration> {
    if !(max_dim == 1 || max_dim == 2) {
        return Err(Error::validation("max_dim must be 1 or 2"));
    }
    if let Some(e) = eps_max {
        if !(e > 0.0) {
            return Err(Error::validation("eps_max must be positive"));
        }
    }
    let eps_max = eps_max.unwrap_or_else(|| dmat.diameter());
    let n = dmat.len();
    let mut simplices: Vec<Simplex> = (0..n as u32).map(Simplex::vertex).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let dij = dmat.get(i, j);
            if dij <= eps_max {
                simplices.push(Simplex::edge(dij, i as u32, j as u32));
            }
        }
    }
    if max_dim == 2 {
        for i in 0..n {
            for j in (i + 1)..n {
                let dij = dmat.get(i, j);
                if dij > eps_max {
                    continue;
                }
                for k in (j + 1)..n {
                    let value = dij.max(dmat.get(i, k)).max(dmat.get(j, k));
                    if value <= eps_max {
                        simplices.push(Simplex::triangle(value, i as u32, j as u32, k as u32));
                    }
                }
            }
        }
    }
    simplices.sort_by(|a, b| {
        let (va, da, ka) = a.sort_key();
        let (vb, db, kb) = b.sort_key();
        va.total_cmp(&vb).then(da.cmp(&db)).then(ka.cmp(&kb))
    });
    Ok(Filtration { simplices, eps_max })
}

/// Writes the filtration as text lines `value dim v0 [v1 [v2]]`, one simplex
/// per line in filtration order.
pub fn export_filtration<W: Write>(filtration: &Filtration, mut out: W) -> Result<()> {
    for s in &filtration.simplices {
        write!(out, "{} {}", s.value, s.dim())?;
        for v in s.vertices() {
            write!(out, " {v}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SQRT_2: f64 = std::f64::consts::SQRT_2;

    fn unit_square() -> DistanceMatrix {
        DistanceMatrix::from_points(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap()
    }

    /// Independent construction of { σ : diam(σ) ≤ eps } by enumerating all
    /// vertex subsets of size ≤ 3. Used to pin the filtration content.
    fn brute_force_simplices(
        points: &[(f64, f64)],
        eps_max: f64,
        max_dim: usize,
    ) -> Vec<(Vec<u32>, f64)> {
        let n = points.len();
        let dist = |i: usize, j: usize| {
            (points[i].0 - points[j].0).hypot(points[i].1 - points[j].1)
        };
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let verts: Vec<u32> = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
            if verts.is_empty() || verts.len() > max_dim + 1 {
                continue;
            }
            let mut diam = 0.0f64;
            for a in 0..verts.len() {
                for b in (a + 1)..verts.len() {
                    diam = diam.max(dist(verts[a] as usize, verts[b] as usize));
                }
            }
            if diam <= eps_max {
                out.push((verts, diam));
            }
        }
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out
    }

    #[test]
    fn distance_three_four_five() {
        let dm = DistanceMatrix::from_points(&[(0.0, 0.0), (3.0, 4.0)]).unwrap();
        assert_eq!(dm.get(0, 1), 5.0);
        assert_eq!(dm.get(1, 0), 5.0);
        assert_eq!(dm.get(0, 0), 0.0);
    }

    #[test]
    fn distance_single_point() {
        let dm = DistanceMatrix::from_points(&[(2.0, 7.0)]).unwrap();
        assert_eq!(dm.len(), 1);
        assert_eq!(dm.get(0, 0), 0.0);
        assert_eq!(dm.diameter(), 0.0);
    }

    #[test]
    fn distance_matches_under_permutation() {
        let pts = [(0.3, 1.7), (-2.0, 0.4), (5.5, -1.1), (0.0, 0.0), (2.2, 2.2)];
        let rev: Vec<(f64, f64)> = pts.iter().rev().copied().collect();
        let a = DistanceMatrix::from_points(&pts).unwrap();
        let b = DistanceMatrix::from_points(&rev).unwrap();
        let n = pts.len();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(a.get(i, j), b.get(n - 1 - i, n - 1 - j));
            }
        }
    }

    #[test]
    fn two_points_edge_within_threshold() {
        let dm = DistanceMatrix::from_points(&[(0.0, 0.0), (1.0, 0.0)]).unwrap();
        let f = rips_filtration(&dm, Some(2.0), 2).unwrap();
        assert_eq!(f.simplices.len(), 3);
        assert_eq!(f.simplices[2].dim(), 1);
        assert_eq!(f.simplices[2].value, 1.0);
    }

    #[test]
    fn two_points_edge_cut_by_threshold() {
        let dm = DistanceMatrix::from_points(&[(0.0, 0.0), (1.0, 0.0)]).unwrap();
        let f = rips_filtration(&dm, Some(0.5), 2).unwrap();
        assert_eq!(f.simplices.len(), 2);
        assert!(f.simplices.iter().all(|s| s.dim() == 0));
    }

    #[test]
    fn unit_square_census() {
        let f = rips_filtration(&unit_square(), Some(2.0), 2).unwrap();
        let by_dim = |d: usize| f.simplices.iter().filter(|s| s.dim() == d).count();
        assert_eq!(by_dim(0), 4);
        assert_eq!(by_dim(1), 6);
        assert_eq!(by_dim(2), 4);
        let side_edges = f
            .simplices
            .iter()
            .filter(|s| s.dim() == 1 && s.value == 1.0)
            .count();
        assert_eq!(side_edges, 4);
        let diag_edges = f
            .simplices
            .iter()
            .filter(|s| s.dim() == 1 && (s.value - SQRT_2).abs() < 1e-15)
            .count();
        assert_eq!(diag_edges, 2);
        assert!(f
            .simplices
            .iter()
            .filter(|s| s.dim() == 2)
            .all(|s| (s.value - SQRT_2).abs() < 1e-15));
    }

    #[test]
    fn rejects_bad_parameters() {
        let dm = unit_square();
        assert!(rips_filtration(&dm, Some(0.0), 2).is_err());
        assert!(rips_filtration(&dm, Some(-1.0), 1).is_err());
        assert!(rips_filtration(&dm, Some(1.0), 3).is_err());
        assert!(rips_filtration(&dm, Some(1.0), 0).is_err());
    }

    #[test]
    fn default_scale_is_diameter() {
        let dm = unit_square();
        let f = rips_filtration(&dm, None, 2).unwrap();
        assert_eq!(f.eps_max, SQRT_2);
        assert_eq!(f.simplices.len(), 4 + 6 + 4);
    }

    #[test]
    fn faces_precede_cofaces() {
        let pts = [(0.0, 0.0), (1.0, 0.2), (0.4, 1.3), (2.0, 2.0), (1.1, 0.9)];
        let dm = DistanceMatrix::from_points(&pts).unwrap();
        let f = rips_filtration(&dm, None, 2).unwrap();
        let position = |verts: &[u32]| {
            f.simplices
                .iter()
                .position(|s| s.vertices() == verts)
                .unwrap()
        };
        for (idx, s) in f.simplices.iter().enumerate() {
            let vs = s.vertices();
            if vs.len() < 2 {
                continue;
            }
            for drop in 0..vs.len() {
                let face: Vec<u32> = vs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, &v)| v)
                    .collect();
                let fpos = position(&face);
                assert!(fpos < idx);
                assert!(f.simplices[fpos].value <= s.value);
            }
        }
    }

    #[test]
    fn export_lines_match_filtration_order() {
        let dm = DistanceMatrix::from_points(&[(0.0, 0.0), (1.0, 0.0)]).unwrap();
        let f = rips_filtration(&dm, Some(2.0), 2).unwrap();
        let mut buf = Vec::new();
        export_filtration(&f, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "0 0 0\n0 0 1\n1 1 0 1\n");
    }

    proptest! {
        #[test]
        fn matches_subset_enumeration(
            pts in proptest::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 1..=7),
            frac in 0.1f64..1.0,
            max_dim in 1usize..=2,
        ) {
            let dm = DistanceMatrix::from_points(&pts).unwrap();
            let diam = dm.diameter();
            let eps = if diam > 0.0 { diam * frac } else { 1.0 };
            let f = rips_filtration(&dm, Some(eps), max_dim).unwrap();
            let mut got: Vec<(Vec<u32>, f64)> = f
                .simplices
                .iter()
                .map(|s| (s.vertices().to_vec(), s.value))
                .collect();
            got.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let expected = brute_force_simplices(&pts, eps, max_dim);
            prop_assert_eq!(got, expected);
        }

        #[test]
        fn full_scale_counts(pts in proptest::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 2..=8)) {
            let dm = DistanceMatrix::from_points(&pts).unwrap();
            prop_assume!(dm.diameter() > 0.0);
            let f = rips_filtration(&dm, None, 2).unwrap();
            let n = pts.len();
            let by_dim = |d: usize| f.simplices.iter().filter(|s| s.dim() == d).count();
            prop_assert_eq!(by_dim(0), n);
            prop_assert_eq!(by_dim(1), n * (n - 1) / 2);
            prop_assert_eq!(by_dim(2), n * (n - 1) * (n - 2) / 6);
        }

        #[test]
        fn values_dominate_faces(pts in proptest::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 3..=7)) {
            let dm = DistanceMatrix::from_points(&pts).unwrap();
            prop_assume!(dm.diameter() > 0.0);
            let f = rips_filtration(&dm, None, 2).unwrap();
            for s in f.simplices.iter().filter(|s| s.dim() == 2) {
                let vs = s.vertices();
                for a in 0..3 {
                    for b in (a + 1)..3 {
                        prop_assert!(dm.get(vs[a] as usize, vs[b] as usize) <= s.value);
                    }
                }
            }
        }
    }
}
