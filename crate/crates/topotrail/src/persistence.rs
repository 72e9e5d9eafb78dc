//! Persistent homology of a filtration by boundary-matrix reduction over the
//! two-element field, plus the diagram, lifetime-diagram, and barcode views.
//!
//! The reduction is the plain left-to-right column algorithm: deterministic,
//! easy to audit, and fast enough for the point counts this crate targets.

use std::collections::HashMap;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rips::Filtration;

/// Output of the matrix reduction: `pairs` holds (birth simplex index,
/// death simplex index); `essential` holds creator indices never paired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pub pairs: Vec<(usize, usize)>,
    pub essential: Vec<usize>,
}

fn simplex_key(vertices: &[u32]) -> [u32; 3] {
    let mut key = [u32::MAX; 3];
    key[..vertices.len()].copy_from_slice(vertices);
    key
}

/// Symmetric difference of two ascending index lists: column addition over
/// the two-element field.
fn add_columns(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Reduces the boundary matrix of the filtration.
///
/// Each column starts as its simplex's facet indices. Scanning left to
/// right, a column repeatedly absorbs the earlier column sharing its lowest
/// nonzero index until it empties (its simplex creates a class) or its
/// lowest index is new (its simplex kills the class born at that index).
pub fn reduce_boundary(filtration: &Filtration) -> Result<Pairing> {
    let m = filtration.simplices.len();
    let mut index_of: HashMap<[u32; 3], usize> = HashMap::with_capacity(m);
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(m);
    for (j, s) in filtration.simplices.iter().enumerate() {
        let vs = s.vertices();
        let mut boundary = Vec::with_capacity(vs.len());
        if vs.len() > 1 {
            for drop in 0..vs.len() {
                let mut face = [u32::MAX; 3];
                let mut w = 0;
                for (i, &v) in vs.iter().enumerate() {
                    if i != drop {
                        face[w] = v;
                        w += 1;
                    }
                }
                match index_of.get(&face) {
                    Some(&fi) => boundary.push(fi),
                    None => {
                        return Err(Error::validation(format!(
                            "filtration not closed under faces at simplex {j}"
                        )))
                    }
                }
            }
        }
        boundary.sort_unstable();
        columns.push(boundary);
        index_of.insert(simplex_key(vs), j);
    }

    let mut low_inverse: Vec<Option<usize>> = vec![None; m];
    let mut pairs = Vec::new();
    let mut is_creator = vec![false; m];
    for j in 0..m {
        let mut col = std::mem::take(&mut columns[j]);
        loop {
            match col.last() {
                None => {
                    is_creator[j] = true;
                    break;
                }
                Some(&low) => match low_inverse[low] {
                    Some(other) => col = add_columns(&col, &columns[other]),
                    None => {
                        low_inverse[low] = Some(j);
                        pairs.push((low, j));
                        break;
                    }
                },
            }
        }
        columns[j] = col;
    }
    let essential = (0..m)
        .filter(|&j| is_creator[j] && low_inverse[j].is_none())
        .collect();
    Ok(Pairing { pairs, essential })
}

/// How classes still alive at `eps_max` enter the diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EssentialPolicy {
    /// Record the class with death = eps_max.
    CapAtEpsMax,
    /// Omit the class.
    Drop,
}

impl EssentialPolicy {
    /// The connected component is kept (capped); unresolved loops are
    /// dropped.
    pub fn default_for(k: usize) -> Self {
        if k == 0 {
            EssentialPolicy::CapAtEpsMax
        } else {
            EssentialPolicy::Drop
        }
    }
}

/// Finite multiset of (birth, death) points for one homology dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct PersistenceDiagram {
    pub dim: usize,
    pub pairs: Vec<(f64, f64)>,
}

impl PersistenceDiagram {
    pub fn new(dim: usize, mut pairs: Vec<(f64, f64)>) -> Self {
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        Self { dim, pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Extracts the dimension-`k` diagram from a pairing, mapping simplex
/// indices to filtration values, removing zero-lifetime pairs, and applying
/// the essential-class policy.
pub fn diagram_from_pairing(
    filtration: &Filtration,
    pairing: &Pairing,
    k: usize,
    policy: EssentialPolicy,
) -> Result<PersistenceDiagram> {
    if k > 1 {
        return Err(Error::validation("homology dimension must be 0 or 1"));
    }
    let simplices = &filtration.simplices;
    let mut pairs = Vec::new();
    for &(i, j) in &pairing.pairs {
        if simplices[i].dim() != k {
            continue;
        }
        let birth = simplices[i].value;
        let death = simplices[j].value;
        if death > birth {
            pairs.push((birth, death));
        }
    }
    for &i in &pairing.essential {
        if simplices[i].dim() != k {
            continue;
        }
        if let EssentialPolicy::CapAtEpsMax = policy {
            let birth = simplices[i].value;
            if filtration.eps_max > birth {
                pairs.push((birth, filtration.eps_max));
            }
        }
    }
    Ok(PersistenceDiagram::new(k, pairs))
}

/// Reduces the filtration and extracts the dimension-`k` diagram.
pub fn persistence_diagram(
    filtration: &Filtration,
    k: usize,
    policy: EssentialPolicy,
) -> Result<PersistenceDiagram> {
    if k > 1 {
        return Err(Error::validation("homology dimension must be 0 or 1"));
    }
    let pairing = reduce_boundary(filtration)?;
    diagram_from_pairing(filtration, &pairing, k, policy)
}

/// Diagram points rewritten as (birth, lifetime), ascending by lifetime.
#[derive(Debug, Clone, PartialEq)]
pub struct LifetimeDiagram {
    pub points: Vec<(f64, f64)>,
}

impl LifetimeDiagram {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The largest lifetime (0 for an empty diagram).
    pub fn max_lifetime(&self) -> f64 {
        self.points.last().map_or(0.0, |p| p.1)
    }
}

/// Applies (a, b) ↦ (a, b − a) pointwise and sorts ascending by lifetime.
pub fn lifetime_diagram(pd: &PersistenceDiagram) -> Result<LifetimeDiagram> {
    if pd.pairs.iter().any(|p| !p.1.is_finite()) {
        return Err(Error::validation(
            "lifetime transform requires finite deaths; apply an essential policy first",
        ));
    }
    let mut points: Vec<(f64, f64)> = pd.pairs.iter().map(|&(a, b)| (a, b - a)).collect();
    points.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.total_cmp(&b.0)));
    Ok(LifetimeDiagram { points })
}

/// Interval view of a diagram: one (dim, birth, death) bar per pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Barcode {
    pub bars: Vec<(usize, f64, f64)>,
}

/// One bar per diagram pair, sorted by (dim, birth, death).
pub fn barcode(diagrams: &[&PersistenceDiagram]) -> Barcode {
    let mut bars: Vec<(usize, f64, f64)> = diagrams
        .iter()
        .flat_map(|d| d.pairs.iter().map(|&(b, dth)| (d.dim, b, dth)))
        .collect();
    bars.sort_by(|a, b| {
        a.0.cmp(&b.0)
            .then(a.1.total_cmp(&b.1))
            .then(a.2.total_cmp(&b.2))
    });
    Barcode { bars }
}

/// JSON record for one diagram point.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DiagramEntry {
    pub dim: usize,
    pub birth: f64,
    pub death: f64,
}

/// Serializes diagrams as a JSON array of `{dim, birth, death}` records.
pub fn write_diagram_json<W: Write>(diagrams: &[&PersistenceDiagram], out: W) -> Result<()> {
    let entries: Vec<DiagramEntry> = diagrams
        .iter()
        .flat_map(|d| {
            d.pairs.iter().map(|&(birth, death)| DiagramEntry {
                dim: d.dim,
                birth,
                death,
            })
        })
        .collect();
    serde_json::to_writer_pretty(out, &entries)
        .map_err(|e| Error::validation(format!("diagram serialization failed: {e}")))
}

/// Reads a JSON diagram array back, splitting by dimension.
pub fn read_diagram_json<R: Read>(reader: R) -> Result<Vec<PersistenceDiagram>> {
    let entries: Vec<DiagramEntry> = serde_json::from_reader(reader)
        .map_err(|e| Error::validation(format!("diagram deserialization failed: {e}")))?;
    let mut dims: Vec<usize> = entries.iter().map(|e| e.dim).collect();
    dims.sort_unstable();
    dims.dedup();
    Ok(dims
        .into_iter()
        .map(|dim| {
            PersistenceDiagram::new(
                dim,
                entries
                    .iter()
                    .filter(|e| e.dim == dim)
                    .map(|e| (e.birth, e.death))
                    .collect(),
            )
        })
        .collect())
}
