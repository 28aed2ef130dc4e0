//! Molecular geometry input.

use nalgebra::Vector3;

use crate::constants::{nuclear_charge, BOHR_PER_ANGSTROM};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Atom {
    pub element: String,
    /// Nuclear charge Z.
    pub charge: f64,
    /// Position in bohr.
    pub position: Vector3<f64>,
}

/// A closed-shell molecule: nuclear frame plus total charge.
#[derive(Debug, Clone)]
pub struct Molecule {
    pub atoms: Vec<Atom>,
    pub total_charge: i32,
    pub multiplicity: u32,
}

impl Molecule {
    pub fn new(atoms: Vec<Atom>, total_charge: i32, multiplicity: u32) -> Result<Self> {
        let mol = Molecule {
            atoms,
            total_charge,
            multiplicity,
        };
        mol.validate()?;
        Ok(mol)
    }

    fn validate(&self) -> Result<()> {
        if self.atoms.is_empty() {
            return Err(Error::InvalidMolecule("no atoms".into()));
        }
        if self.multiplicity != 1 {
            return Err(Error::InvalidMolecule(format!(
                "only closed-shell singlets are supported (multiplicity {})",
                self.multiplicity
            )));
        }
        let z_sum: f64 = self.atoms.iter().map(|a| a.charge).sum();
        let n_elec = z_sum - self.total_charge as f64;
        if n_elec <= 0.0 || n_elec.fract() != 0.0 || (n_elec as i64) % 2 != 0 {
            return Err(Error::InvalidMolecule(format!(
                "electron count {n_elec} must be even and positive"
            )));
        }
        Ok(())
    }

    pub fn n_electrons(&self) -> usize {
        let z_sum: f64 = self.atoms.iter().map(|a| a.charge).sum();
        (z_sum - self.total_charge as f64) as usize
    }

    /// Parse XYZ text: atom count, a comment line optionally carrying
    /// `charge=<c> mult=<m>`, then `element x y z` with coordinates in
    /// angstrom.
    pub fn from_xyz_str(text: &str) -> Result<Self> {
        let parse_err = |detail: &str| Error::Parse {
            what: "XYZ input".into(),
            detail: detail.into(),
        };
        let mut lines = text.lines();
        let n: usize = lines
            .next()
            .ok_or_else(|| parse_err("empty input"))?
            .trim()
            .parse()
            .map_err(|_| parse_err("first line must be the atom count"))?;
        let comment = lines.next().unwrap_or("");
        let mut charge = 0i32;
        let mut mult = 1u32;
        for tok in comment.split_whitespace() {
            if let Some(v) = tok.strip_prefix("charge=") {
                charge = v
                    .parse()
                    .map_err(|_| parse_err(&format!("bad charge token '{tok}'")))?;
            } else if let Some(v) = tok.strip_prefix("mult=") {
                mult = v
                    .parse()
                    .map_err(|_| parse_err(&format!("bad mult token '{tok}'")))?;
            }
        }
        let mut atoms = Vec::with_capacity(n);
        for line in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(parse_err(&format!("expected 'El x y z', got '{line}'")));
            }
            let element = fields[0].to_string();
            let z = nuclear_charge(&element)
                .ok_or_else(|| Error::UnknownElement(element.clone()))?;
            let coords: Vec<f64> = fields[1..]
                .iter()
                .map(|f| {
                    f.parse::<f64>()
                        .map_err(|_| parse_err(&format!("bad coordinate '{f}'")))
                })
                .collect::<Result<_>>()?;
            atoms.push(Atom {
                element,
                charge: z as f64,
                position: Vector3::new(coords[0], coords[1], coords[2]) * BOHR_PER_ANGSTROM,
            });
        }
        if atoms.len() != n {
            return Err(parse_err(&format!(
                "header says {n} atoms, found {}",
                atoms.len()
            )));
        }
        Molecule::new(atoms, charge, mult)
    }

    pub fn from_xyz_file(path: &std::path::Path) -> Result<Self> {
        Molecule::from_xyz_str(&std::fs::read_to_string(path)?)
    }

    /// Convenience builder with positions already in bohr.
    pub fn from_bohr(
        spec: &[(&str, [f64; 3])],
        total_charge: i32,
    ) -> Result<Self> {
        let atoms = spec
            .iter()
            .map(|(el, pos)| {
                let z = nuclear_charge(el).ok_or_else(|| Error::UnknownElement(el.to_string()))?;
                Ok(Atom {
                    element: el.to_string(),
                    charge: z as f64,
                    position: Vector3::new(pos[0], pos[1], pos[2]),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Molecule::new(atoms, total_charge, 1)
    }

    /// Nuclear repulsion energy in hartree.
    pub fn nuclear_repulsion(&self) -> Result<f64> {
        let mut e = 0.0;
        for i in 0..self.atoms.len() {
            for j in (i + 1)..self.atoms.len() {
                let r = (self.atoms[i].position - self.atoms[j].position).norm();
                if r < 1e-10 {
                    return Err(Error::CoincidentNuclei(i, j));
                }
                e += self.atoms[i].charge * self.atoms[j].charge / r;
            }
        }
        Ok(e)
    }

    /// Rigidly translated copy (displacement in bohr).
    pub fn translated(&self, shift: Vector3<f64>) -> Self {
        let mut m = self.clone();
        for a in &mut m.atoms {
            a.position += shift;
        }
        m
    }

    /// Rigidly rotated copy.
    pub fn rotated(&self, rot: &nalgebra::Rotation3<f64>) -> Self {
        let mut m = self.clone();
        for a in &mut m.atoms {
            a.position = rot * a.position;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_xyz_with_charge() {
        let text = "3\ncharge=+1 mult=1\nH 0.0 0.0 0.0\nH 0.9 0.0 0.0\nH 0.45 0.78 0.0\n";
        let mol = Molecule::from_xyz_str(text).unwrap();
        assert_eq!(mol.atoms.len(), 3);
        assert_eq!(mol.total_charge, 1);
        assert_eq!(mol.n_electrons(), 2);
        // angstrom -> bohr
        assert!((mol.atoms[1].position.x - 0.9 * BOHR_PER_ANGSTROM).abs() < 1e-12);
    }

    #[test]
    fn rejects_odd_electron_count() {
        let text = "1\ncharge=0 mult=1\nH 0.0 0.0 0.0\n";
        assert!(Molecule::from_xyz_str(text).is_err());
    }

    #[test]
    fn coincident_nuclei_fail() {
        let mol = Molecule::from_bohr(&[("H", [0.0; 3]), ("H", [0.0; 3])], 0).unwrap();
        assert!(mol.nuclear_repulsion().is_err());
    }
}
