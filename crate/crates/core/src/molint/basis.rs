//! Contracted Gaussian shells over a molecule.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::basis_data::EMBEDDED_BASIS_TABLES;
use super::md;
use super::Molecule;

/// Angular momentum of a shell. Only s and p are supported; the p shells
/// are Cartesian (x, y, z).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngMom {
    S,
    P,
}

impl AngMom {
    pub fn n_functions(self) -> usize {
        match self {
            AngMom::S => 1,
            AngMom::P => 3,
        }
    }

    pub fn l(self) -> usize {
        match self {
            AngMom::S => 0,
            AngMom::P => 1,
        }
    }
}

/// One contracted shell. `coefficients` include primitive normalization
/// and the overall contraction normalization.
#[derive(Debug, Clone)]
pub struct Shell {
    pub center: usize,
    pub ang: AngMom,
    pub exponents: Vec<f64>,
    pub coefficients: Vec<f64>,
}

/// Cartesian powers (i, j, k) of a basis function.
pub type CartPowers = (u32, u32, u32);

const P_COMPONENTS: [CartPowers; 3] = [(1, 0, 0), (0, 1, 0), (0, 0, 1)];

#[derive(Debug, Clone)]
pub struct BasisSet {
    pub shells: Vec<Shell>,
    pub n_basis: usize,
    /// For each basis function: owning shell index and Cartesian powers.
    pub functions: Vec<(usize, CartPowers)>,
}

impl BasisSet {
    fn from_shells(shells: Vec<Shell>) -> Self {
        let mut functions = Vec::new();
        for (s, shell) in shells.iter().enumerate() {
            match shell.ang {
                AngMom::S => functions.push((s, (0, 0, 0))),
                AngMom::P => {
                    for powers in P_COMPONENTS {
                        functions.push((s, powers));
                    }
                }
            }
        }
        BasisSet {
            n_basis: functions.len(),
            shells,
            functions,
        }
    }

    /// First basis-function index of each shell.
    pub fn shell_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.shells.len());
        let mut acc = 0;
        for shell in &self.shells {
            offsets.push(acc);
            acc += shell.ang.n_functions();
        }
        offsets
    }
}

/// Raw shell as read from a basis table, before normalization.
#[derive(Debug, Clone)]
struct RawShell {
    ang: AngMom,
    /// (exponent, coefficient) pairs; SP rows are split into an S and a P
    /// raw shell sharing exponents.
    primitives: Vec<(f64, f64)>,
}

type BasisTable = HashMap<String, HashMap<String, Vec<RawShell>>>;

fn parse_basis_tables(text: &str) -> Result<BasisTable> {
    let mut table: BasisTable = HashMap::new();
    let mut basis: Option<String> = None;
    let mut element: Option<String> = None;
    let perr = |detail: String| Error::Parse {
        what: "basis table".into(),
        detail,
    };

    let mut lines = text.lines().peekable();
    while let Some(line) = lines.next() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('!') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "basis" => {
                basis = Some(fields.get(1).ok_or_else(|| perr("basis without name".into()))?.to_string());
                element = None;
            }
            "element" => {
                element = Some(
                    fields
                        .get(1)
                        .ok_or_else(|| perr("element without symbol".into()))?
                        .to_string(),
                );
            }
            kind @ ("S" | "SP") => {
                let n: usize = fields
                    .get(1)
                    .and_then(|f| f.parse().ok())
                    .ok_or_else(|| perr(format!("bad primitive count in '{line}'")))?;
                let b = basis.clone().ok_or_else(|| perr("shell before 'basis'".into()))?;
                let e = element
                    .clone()
                    .ok_or_else(|| perr("shell before 'element'".into()))?;
                let mut s_prims = Vec::with_capacity(n);
                let mut p_prims = Vec::with_capacity(n);
                for _ in 0..n {
                    let row = lines
                        .next()
                        .ok_or_else(|| perr("truncated shell block".into()))?;
                    let vals: Vec<f64> = row
                        .split_whitespace()
                        .map(|v| {
                            v.parse::<f64>()
                                .map_err(|_| perr(format!("bad number '{v}'")))
                        })
                        .collect::<Result<_>>()?;
                    let want = if kind == "S" { 2 } else { 3 };
                    if vals.len() != want {
                        return Err(perr(format!("expected {want} columns, got '{row}'")));
                    }
                    s_prims.push((vals[0], vals[1]));
                    if kind == "SP" {
                        p_prims.push((vals[0], vals[2]));
                    }
                }
                let entry = table.entry(b).or_default().entry(e).or_default();
                entry.push(RawShell {
                    ang: AngMom::S,
                    primitives: s_prims,
                });
                if kind == "SP" {
                    entry.push(RawShell {
                        ang: AngMom::P,
                        primitives: p_prims,
                    });
                }
            }
            other => return Err(perr(format!("unrecognized directive '{other}'"))),
        }
    }
    Ok(table)
}

fn double_factorial(n: i64) -> f64 {
    let mut acc = 1.0;
    let mut k = n;
    while k > 1 {
        acc *= k as f64;
        k -= 2;
    }
    acc
}

/// Normalization constant of a primitive Cartesian Gaussian x^i y^j z^k exp(-a r^2).
pub(crate) fn primitive_norm(alpha: f64, powers: CartPowers) -> f64 {
    let (i, j, k) = powers;
    let l = (i + j + k) as i32;
    let dfac = double_factorial(2 * i as i64 - 1)
        * double_factorial(2 * j as i64 - 1)
        * double_factorial(2 * k as i64 - 1);
    (2.0 * alpha / std::f64::consts::PI).powf(0.75) * (4.0 * alpha).powi(l).sqrt() / dfac.sqrt()
}

fn normalized_shell(center: usize, raw: &RawShell) -> Shell {
    // Fold primitive norms into the contraction, then scale the contraction
    // to unit self-overlap. For p shells one Cartesian component fixes the
    // norm of all three.
    let powers = match raw.ang {
        AngMom::S => (0, 0, 0),
        AngMom::P => (1, 0, 0),
    };
    let exponents: Vec<f64> = raw.primitives.iter().map(|p| p.0).collect();
    let mut coefficients: Vec<f64> = raw
        .primitives
        .iter()
        .map(|&(a, c)| c * primitive_norm(a, powers))
        .collect();
    let mut self_overlap = 0.0;
    for (i, &ai) in exponents.iter().enumerate() {
        for (j, &aj) in exponents.iter().enumerate() {
            self_overlap += coefficients[i]
                * coefficients[j]
                * md::primitive_overlap_same_center(ai, aj, powers);
        }
    }
    let scale = self_overlap.sqrt().recip();
    for c in &mut coefficients {
        *c *= scale;
    }
    Shell {
        center,
        ang: raw.ang,
        exponents,
        coefficients,
    }
}

fn build_from_table(molecule: &Molecule, basis_name: &str, table: &BasisTable) -> Result<BasisSet> {
    let per_element = table.get(basis_name).ok_or_else(|| Error::Parse {
        what: "basis lookup".into(),
        detail: format!("basis set '{basis_name}' is not defined"),
    })?;
    let mut shells = Vec::new();
    for (center, atom) in molecule.atoms.iter().enumerate() {
        let raw_shells = per_element
            .get(&atom.element)
            .ok_or_else(|| Error::MissingBasisEntry {
                basis: basis_name.to_string(),
                element: atom.element.clone(),
            })?;
        // Deterministic ordering: table order per atom, which lists every
        // s shell before the p shell it shares exponents with.
        for raw in raw_shells {
            shells.push(normalized_shell(center, raw));
        }
    }
    Ok(BasisSet::from_shells(shells))
}

/// Build a basis set for `molecule` from the embedded tables.
pub fn build_basis(molecule: &Molecule, basis_name: &str) -> Result<BasisSet> {
    let table = parse_basis_tables(EMBEDDED_BASIS_TABLES)?;
    build_from_table(molecule, basis_name, &table)
}

/// Build a basis set from a user-supplied basis table file (same format as
/// the embedded tables).
pub fn build_basis_from_file(
    molecule: &Molecule,
    basis_name: &str,
    path: &std::path::Path,
) -> Result<BasisSet> {
    let table = parse_basis_tables(&std::fs::read_to_string(path)?)?;
    build_from_table(molecule, basis_name, &table)
}
