//! Persistence images: a lifetime diagram becomes a weighted Gaussian
//! mixture, integrated exactly over an M×M grid to give a fixed-length
//! feature vector.
//!
//! Weights grow linearly with lifetime (the most persistent feature gets
//! weight 1), so long-lived loops dominate the image while near-diagonal
//! noise fades out.

use std::io::Write;

use crate::error::{Error, Result};
use crate::persistence::LifetimeDiagram;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Standard normal CDF.
fn phi(z: f64) -> f64 {
    0.5 * libm::erfc(-z / SQRT_2)
}

/// Mass of a 1-D Gaussian N(center, sigma²) on [lo, hi].
fn gaussian_mass_1d(lo: f64, hi: f64, center: f64, sigma: f64) -> f64 {
    phi((hi - center) / sigma) - phi((lo - center) / sigma)
}

/// Weighted isotropic Gaussian mixture centered at lifetime points.
#[derive(Debug, Clone, PartialEq)]
pub struct PersistenceKernel {
    pub centers: Vec<(f64, f64)>,
    pub weights: Vec<f64>,
    pub sigma: f64,
}

impl PersistenceKernel {
    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }
}

/// Builds the kernel for an M×M image: centers are the lifetime points,
/// weight = lifetime / max lifetime, sigma = max lifetime / m.
pub fn kernel(lt: &LifetimeDiagram, m: usize) -> Result<PersistenceKernel> {
    if m == 0 {
        return Err(Error::validation("image resolution must be at least 1"));
    }
    if lt.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let max_lifetime = lt.max_lifetime();
    if !(max_lifetime > 0.0) {
        return Err(Error::validation(
            "kernel needs a point with positive lifetime",
        ));
    }
    let weights = lt.points.iter().map(|p| p.1 / max_lifetime).collect();
    Ok(PersistenceKernel {
        centers: lt.points.clone(),
        weights,
        sigma: max_lifetime / m as f64,
    })
}

/// Density of the weighted mixture at (x, y), where x is the birth axis and
/// y the lifetime axis.
pub fn eval_density(kernel: &PersistenceKernel, x: f64, y: f64) -> f64 {
    let s2 = kernel.sigma * kernel.sigma;
    let norm = 1.0 / (2.0 * std::f64::consts::PI * s2);
    kernel
        .centers
        .iter()
        .zip(&kernel.weights)
        .map(|(&(cx, cy), &w)| {
            let d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
            w * norm * (-d2 / (2.0 * s2)).exp()
        })
        .sum()
}

/// The integration region Ω: a rectangle in (birth, lifetime) coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub birth_min: f64,
    pub birth_max: f64,
    pub life_min: f64,
    pub life_max: f64,
}

impl Window {
    pub fn union(a: Window, b: Window) -> Window {
        Window {
            birth_min: a.birth_min.min(b.birth_min),
            birth_max: a.birth_max.max(b.birth_max),
            life_min: a.life_min.min(b.life_min),
            life_max: a.life_max.max(b.life_max),
        }
    }
}

fn captured_mass(kernel: &PersistenceKernel, w: &Window) -> f64 {
    kernel
        .centers
        .iter()
        .zip(&kernel.weights)
        .map(|(&(cx, cy), &wt)| {
            wt * gaussian_mass_1d(w.birth_min, w.birth_max, cx, kernel.sigma)
                * gaussian_mass_1d(w.life_min, w.life_max, cy, kernel.sigma)
        })
        .sum()
}

/// Bounding box of the centers padded by r·sigma, with r the smallest
/// integer ≥ 4 capturing at least (1−delta) of the kernel's total weight.
pub fn padded_window(kernel: &PersistenceKernel, delta: f64) -> Result<Window> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::validation("delta must be in (0, 1)"));
    }
    let xs: Vec<f64> = kernel.centers.iter().map(|c| c.0).collect();
    let ys: Vec<f64> = kernel.centers.iter().map(|c| c.1).collect();
    let bbox = Window {
        birth_min: xs.iter().copied().fold(f64::INFINITY, f64::min),
        birth_max: xs.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        life_min: ys.iter().copied().fold(f64::INFINITY, f64::min),
        life_max: ys.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    };
    let target = (1.0 - delta) * kernel.total_weight();
    let mut r = 4.0;
    loop {
        let pad = r * kernel.sigma;
        let w = Window {
            birth_min: bbox.birth_min - pad,
            birth_max: bbox.birth_max + pad,
            life_min: bbox.life_min - pad,
            life_max: bbox.life_max + pad,
        };
        if captured_mass(kernel, &w) >= target {
            return Ok(w);
        }
        r += 1.0;
    }
}

/// Grid of exact cell integrals of the kernel density over a window.
#[derive(Debug, Clone, PartialEq)]
pub struct PersistenceImage {
    pub m: usize,
    /// Row-major cells: row i spans the birth axis, column j the lifetime
    /// axis.
    pub cells: Vec<f64>,
    pub window: Window,
    pub delta: f64,
}

impl PersistenceImage {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.cells[i * self.m + j]
    }

    pub fn total_mass(&self) -> f64 {
        self.cells.iter().sum()
    }

    fn zero(m: usize, window: Window, delta: f64) -> Self {
        Self {
            m,
            cells: vec![0.0; m * m],
            window,
            delta,
        }
    }
}

fn integrate(kernel: &PersistenceKernel, m: usize, window: Window, delta: f64) -> PersistenceImage {
    let mut image = PersistenceImage::zero(m, window, delta);
    let bw = (window.birth_max - window.birth_min) / m as f64;
    let lw = (window.life_max - window.life_min) / m as f64;
    // Per-center 1-D masses along each axis; a cell integral is their
    // product, so the 2-D work is O(centers · m²) with O(centers · m) CDFs.
    let mut birth_mass = vec![0.0; kernel.centers.len() * m];
    let mut life_mass = vec![0.0; kernel.centers.len() * m];
    for (k, &(cx, cy)) in kernel.centers.iter().enumerate() {
        for i in 0..m {
            let lo = window.birth_min + bw * i as f64;
            let hi = if i + 1 == m {
                window.birth_max
            } else {
                window.birth_min + bw * (i + 1) as f64
            };
            birth_mass[k * m + i] = gaussian_mass_1d(lo, hi, cx, kernel.sigma);
        }
        for j in 0..m {
            let lo = window.life_min + lw * j as f64;
            let hi = if j + 1 == m {
                window.life_max
            } else {
                window.life_min + lw * (j + 1) as f64
            };
            life_mass[k * m + j] = gaussian_mass_1d(lo, hi, cy, kernel.sigma);
        }
    }
    for (k, &w) in kernel.weights.iter().enumerate() {
        for i in 0..m {
            let bm = w * birth_mass[k * m + i];
            for j in 0..m {
                image.cells[i * m + j] += bm * life_mass[k * m + j];
            }
        }
    }
    image
}

/// Persistence image over the diagram's own padded window. An empty diagram
/// gives the all-zero image over a unit placeholder window.
pub fn persistence_image(lt: &LifetimeDiagram, m: usize, delta: f64) -> Result<PersistenceImage> {
    if m == 0 {
        return Err(Error::validation("image resolution must be at least 1"));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::validation("delta must be in (0, 1)"));
    }
    if lt.is_empty() {
        return Ok(PersistenceImage::zero(
            m,
            Window {
                birth_min: 0.0,
                birth_max: 1.0,
                life_min: 0.0,
                life_max: 1.0,
            },
            delta,
        ));
    }
    let k = kernel(lt, m)?;
    let window = padded_window(&k, delta)?;
    Ok(integrate(&k, m, window, delta))
}

/// Persistence image over a caller-supplied window, as used when several
/// samples must share one grid. An empty diagram gives the all-zero image.
pub fn persistence_image_in(
    lt: &LifetimeDiagram,
    m: usize,
    delta: f64,
    window: Window,
) -> Result<PersistenceImage> {
    if m == 0 {
        return Err(Error::validation("image resolution must be at least 1"));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::validation("delta must be in (0, 1)"));
    }
    if lt.is_empty() {
        return Ok(PersistenceImage::zero(m, window, delta));
    }
    let k = kernel(lt, m)?;
    Ok(integrate(&k, m, window, delta))
}

/// Row-major feature vector of length m².
pub fn flatten(image: &PersistenceImage) -> Vec<f64> {
    image.cells.clone()
}

/// Writes the image as an M×M CSV matrix.
pub fn write_image_csv<W: Write>(image: &PersistenceImage, mut out: W) -> Result<()> {
    for i in 0..image.m {
        let row: Vec<String> = (0..image.m).map(|j| image.get(i, j).to_string()).collect();
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}

/// Writes the image as a plain-text PGM (P2), max cell scaled to 255.
pub fn write_image_pgm<W: Write>(image: &PersistenceImage, mut out: W) -> Result<()> {
    let max = image.cells.iter().copied().fold(0.0f64, f64::max);
    writeln!(out, "P2")?;
    writeln!(out, "{} {}", image.m, image.m)?;
    writeln!(out, "255")?;
    for i in 0..image.m {
        let row: Vec<String> = (0..image.m)
            .map(|j| {
                let v = if max > 0.0 {
                    (image.get(i, j) / max * 255.0).round() as u32
                } else {
                    0
                };
                v.to_string()
            })
            .collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    Ok(())
}
