//! Molecular cavity construction and the IEF-PCM solvent response.

mod mesh;
mod response;

pub use response::{apparent_charges, calderon_matrices, response_matrix, SolventResponse};

use std::collections::HashMap;
use std::io::Write;

use nalgebra::Vector3;

use crate::constants::BOHR_PER_ANGSTROM;
use crate::error::{Error, Result};
use crate::molint::Molecule;

/// One surface element of the discretized cavity.
#[derive(Debug, Clone)]
pub struct Tessera {
    /// Representative point in bohr.
    pub center: Vector3<f64>,
    /// Exposed area in bohr^2.
    pub area: f64,
    /// Outward unit normal.
    pub normal: Vector3<f64>,
    pub sphere: usize,
}

#[derive(Debug, Clone)]
pub struct Sphere {
    pub center: Vector3<f64>,
    pub radius: f64,
}

/// Union-of-spheres cavity surface.
#[derive(Debug, Clone)]
pub struct Cavity {
    pub tesserae: Vec<Tessera>,
    pub spheres: Vec<Sphere>,
}

/// Sub-sampling depth used to estimate the exposed fraction of a tessera
/// cut by a neighboring sphere (per_edge = 4 gives 16 samples).
const EXPOSURE_SAMPLES_PER_EDGE: usize = 4;

fn is_buried(point: &Vector3<f64>, spheres: &[Sphere], own: usize) -> bool {
    spheres.iter().enumerate().any(|(k, s)| {
        k != own && (point - s.center).norm() < s.radius * (1.0 - 1e-9)
    })
}

fn tessellate(spheres: Vec<Sphere>, level: u32) -> Cavity {
    let unit = mesh::unit_icosphere(level);
    let mut tesserae = Vec::new();
    for (si, sphere) in spheres.iter().enumerate() {
        for tri in &unit {
            let centroid = ((tri.v[0] + tri.v[1] + tri.v[2]) / 3.0).normalize();
            let center = sphere.center + sphere.radius * centroid;
            if is_buried(&center, &spheres, si) {
                continue;
            }
            let mut exposed = 1.0;
            if spheres.len() > 1 {
                let samples = mesh::sample_points(tri, EXPOSURE_SAMPLES_PER_EDGE);
                let outside = samples
                    .iter()
                    .filter(|u| {
                        !is_buried(&(sphere.center + sphere.radius * **u), &spheres, si)
                    })
                    .count();
                exposed = outside as f64 / samples.len() as f64;
            }
            if exposed == 0.0 {
                continue;
            }
            let area = mesh::spherical_area(tri) * sphere.radius * sphere.radius * exposed;
            tesserae.push(Tessera {
                center,
                area,
                normal: centroid,
                sphere: si,
            });
        }
    }
    Cavity { tesserae, spheres }
}

/// Drop spheres wholly contained in (or identical to) another sphere.
fn prune_spheres(mut spheres: Vec<Sphere>) -> Vec<Sphere> {
    let mut keep = vec![true; spheres.len()];
    for i in 0..spheres.len() {
        for j in 0..spheres.len() {
            if i == j || !keep[i] || !keep[j] {
                continue;
            }
            let d = (spheres[i].center - spheres[j].center).norm();
            let contained = d + spheres[i].radius <= spheres[j].radius + 1e-9;
            let identical = d < 1e-9 && (spheres[i].radius - spheres[j].radius).abs() < 1e-9;
            if contained && (!identical || i > j) {
                keep[i] = false;
            }
        }
    }
    let mut it = keep.iter();
    spheres.retain(|_| *it.next().unwrap());
    spheres
}

/// Build the solvent-excluded cavity for a molecule.
///
/// `radii` maps element symbols to radii in angstrom; every radius is
/// multiplied by `scale`. `subdivision_level` in 1..=5 selects the
/// icosphere refinement (20 * 4^(level-1) faces per sphere before burial
/// removal).
pub fn build_cavity(
    molecule: &Molecule,
    radii: &HashMap<String, f64>,
    scale: f64,
    subdivision_level: u32,
) -> Result<Cavity> {
    if !(1..=5).contains(&subdivision_level) {
        return Err(Error::InvalidConfig(format!(
            "cavity subdivision level {subdivision_level} outside 1..=5"
        )));
    }
    if scale <= 0.0 {
        return Err(Error::InvalidConfig("cavity radius scale must be positive".into()));
    }
    let spheres: Vec<Sphere> = molecule
        .atoms
        .iter()
        .map(|atom| {
            let r = radii
                .get(&atom.element)
                .ok_or_else(|| Error::MissingRadius(atom.element.clone()))?;
            Ok(Sphere {
                center: atom.position,
                radius: r * scale * BOHR_PER_ANGSTROM,
            })
        })
        .collect::<Result<_>>()?;
    Ok(tessellate(prune_spheres(spheres), subdivision_level))
}

impl Cavity {
    /// Single-sphere cavity (radius in bohr); the Born-model test surface.
    pub fn single_sphere(center: Vector3<f64>, radius: f64, level: u32) -> Cavity {
        tessellate(vec![Sphere { center, radius }], level)
    }

    pub fn n_tesserae(&self) -> usize {
        self.tesserae.len()
    }

    pub fn total_area(&self) -> f64 {
        self.tesserae.iter().map(|t| t.area).sum()
    }

    pub fn centers(&self) -> Vec<Vector3<f64>> {
        self.tesserae.iter().map(|t| t.center).collect()
    }

    /// Rigidly rotated copy (tesserae and spheres).
    pub fn rotated(&self, rot: &nalgebra::Rotation3<f64>) -> Cavity {
        Cavity {
            tesserae: self
                .tesserae
                .iter()
                .map(|t| Tessera {
                    center: rot * t.center,
                    area: t.area,
                    normal: rot * t.normal,
                    sphere: t.sphere,
                })
                .collect(),
            spheres: self
                .spheres
                .iter()
                .map(|s| Sphere {
                    center: rot * s.center,
                    radius: s.radius,
                })
                .collect(),
        }
    }

    /// CSV dump: index, x, y, z, area, nx, ny, nz (bohr).
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "index,x,y,z,area,nx,ny,nz")?;
        for (i, t) in self.tesserae.iter().enumerate() {
            writeln!(
                w,
                "{},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12}",
                i, t.center.x, t.center.y, t.center.z, t.area, t.normal.x, t.normal.y, t.normal.z
            )?;
        }
        Ok(())
    }
}
