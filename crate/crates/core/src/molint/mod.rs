//! Gaussian-orbital integral engine.

mod basis;
mod basis_data;
mod boys;
mod md;
mod molecule;

pub use basis::{build_basis, build_basis_from_file, AngMom, BasisSet, CartPowers, Shell};
pub use molecule::{Atom, Molecule};

use nalgebra::{DMatrix, DVector, Vector3};

use crate::error::{Error, Result};

/// Two-electron repulsion integrals in chemist notation (pq|rs), stored
/// once per 8-fold permutational equivalence class.
#[derive(Debug, Clone)]
pub struct Eri {
    n: usize,
    data: Vec<f64>,
}

fn pair_index(i: usize, j: usize) -> usize {
    let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
    hi * (hi + 1) / 2 + lo
}

impl Eri {
    pub fn zeros(n: usize) -> Self {
        let n_pairs = n * (n + 1) / 2;
        Eri {
            n,
            data: vec![0.0; n_pairs * (n_pairs + 1) / 2],
        }
    }

    pub fn n_basis(&self) -> usize {
        self.n
    }

    fn index(&self, p: usize, q: usize, r: usize, s: usize) -> usize {
        pair_index(pair_index(p, q), pair_index(r, s))
    }

    pub fn get(&self, p: usize, q: usize, r: usize, s: usize) -> f64 {
        self.data[self.index(p, q, r, s)]
    }

    pub fn set(&mut self, p: usize, q: usize, r: usize, s: usize, value: f64) {
        let idx = self.index(p, q, r, s);
        self.data[idx] = value;
    }
}

/// All molecular integrals over a basis. The tessera blocks are filled by
/// [`potential_integrals`] and start out empty.
#[derive(Debug, Clone)]
pub struct IntegralSet {
    pub overlap: DMatrix<f64>,
    /// Kinetic + nuclear attraction.
    pub h_core: DMatrix<f64>,
    pub eri: Eri,
    /// Nuclear repulsion energy (hartree).
    pub e_nuc: f64,
    /// Per tessera i, the matrix (v_pq)_i = -⟨χ_p| 1/|r - s_i| |χ_q⟩.
    pub tessera_potential: Vec<DMatrix<f64>>,
    /// Per tessera i, (v_N)_i = Σ_m Z_m / |R_m - s_i|.
    pub v_nuc_tess: DVector<f64>,
}

impl IntegralSet {
    pub fn n_basis(&self) -> usize {
        self.overlap.nrows()
    }

    pub fn has_surface_potentials(&self) -> bool {
        !self.tessera_potential.is_empty()
    }

    /// Attach surface potential blocks produced by [`potential_integrals`].
    pub fn with_surface_potentials(
        mut self,
        tessera_potential: Vec<DMatrix<f64>>,
        v_nuc_tess: DVector<f64>,
    ) -> Self {
        self.tessera_potential = tessera_potential;
        self.v_nuc_tess = v_nuc_tess;
        self
    }
}

struct FunctionView<'a> {
    basis: &'a BasisSet,
}

impl<'a> FunctionView<'a> {
    fn get(&self, idx: usize, molecule: &Molecule) -> (&'a Shell, CartPowers, Vector3<f64>) {
        let (shell_idx, powers) = self.basis.functions[idx];
        let shell = &self.basis.shells[shell_idx];
        (shell, powers, molecule.atoms[shell.center].position)
    }
}

fn contracted<F>(sa: &Shell, sb: &Shell, mut prim: F) -> f64
where
    F: FnMut(f64, f64) -> f64,
{
    let mut total = 0.0;
    for (&ea, &ca) in sa.exponents.iter().zip(&sa.coefficients) {
        for (&eb, &cb) in sb.exponents.iter().zip(&sb.coefficients) {
            total += ca * cb * prim(ea, eb);
        }
    }
    total
}

/// Compute overlap, core Hamiltonian, two-electron integrals, and the
/// nuclear repulsion energy.
pub fn compute_integrals(molecule: &Molecule, basis: &BasisSet) -> Result<IntegralSet> {
    let e_nuc = molecule.nuclear_repulsion()?;
    let n = basis.n_basis;
    let view = FunctionView { basis };

    let mut overlap = DMatrix::zeros(n, n);
    let mut h_core = DMatrix::zeros(n, n);
    for p in 0..n {
        for q in 0..=p {
            let (sp, pp, rp) = view.get(p, molecule);
            let (sq, pq, rq) = view.get(q, molecule);
            let s = contracted(sp, sq, |a, b| md::prim_overlap(a, pp, rp, b, pq, rq));
            let t = contracted(sp, sq, |a, b| md::prim_kinetic(a, pp, rp, b, pq, rq));
            let mut v = 0.0;
            for atom in &molecule.atoms {
                v -= atom.charge
                    * contracted(sp, sq, |a, b| {
                        md::prim_potential(a, pp, rp, b, pq, rq, atom.position)
                    });
            }
            overlap[(p, q)] = s;
            overlap[(q, p)] = s;
            h_core[(p, q)] = t + v;
            h_core[(q, p)] = t + v;
        }
    }

    let mut eri = Eri::zeros(n);
    for p in 0..n {
        for q in 0..=p {
            let pq = pair_index(p, q);
            for r in 0..=p {
                for s in 0..=r {
                    if pair_index(r, s) > pq {
                        continue;
                    }
                    let (sp, ppw, rp) = view.get(p, molecule);
                    let (sq, qpw, rq) = view.get(q, molecule);
                    let (sr, rpw, rr) = view.get(r, molecule);
                    let (ss, spw, rs) = view.get(s, molecule);
                    let mut value = 0.0;
                    for (&ea, &ca) in sp.exponents.iter().zip(&sp.coefficients) {
                        for (&eb, &cb) in sq.exponents.iter().zip(&sq.coefficients) {
                            for (&ec, &cc) in sr.exponents.iter().zip(&sr.coefficients) {
                                for (&ed, &cd) in ss.exponents.iter().zip(&ss.coefficients) {
                                    value += ca
                                        * cb
                                        * cc
                                        * cd
                                        * md::prim_eri(
                                            ea, ppw, rp, eb, qpw, rq, ec, rpw, rr, ed, spw, rs,
                                        );
                                }
                            }
                        }
                    }
                    eri.set(p, q, r, s, value);
                }
            }
        }
    }

    Ok(IntegralSet {
        overlap,
        h_core,
        eri,
        e_nuc,
        tessera_potential: Vec::new(),
        v_nuc_tess: DVector::zeros(0),
    })
}

/// Electrostatic potential blocks at a set of surface points.
///
/// Returns, per point i, the matrix (v_pq)_i = -⟨χ_p|1/|r - s_i||χ_q⟩ and
/// the nuclear potential (v_N)_i = Σ_m Z_m/|R_m - s_i|.
pub fn potential_integrals(
    molecule: &Molecule,
    basis: &BasisSet,
    points: &[Vector3<f64>],
) -> Result<(Vec<DMatrix<f64>>, DVector<f64>)> {
    for (i, pt) in points.iter().enumerate() {
        for (m, atom) in molecule.atoms.iter().enumerate() {
            let dist = (pt - atom.position).norm();
            if dist < 1e-8 {
                return Err(Error::PointOnNucleus {
                    index: i,
                    nucleus: m,
                    dist,
                });
            }
        }
    }
    let n = basis.n_basis;
    let view = FunctionView { basis };
    let mut blocks = Vec::with_capacity(points.len());
    let mut v_nuc = DVector::zeros(points.len());
    for (i, &pt) in points.iter().enumerate() {
        let mut block = DMatrix::zeros(n, n);
        for p in 0..n {
            for q in 0..=p {
                let (sp, pp, rp) = view.get(p, molecule);
                let (sq, pq, rq) = view.get(q, molecule);
                let v = -contracted(sp, sq, |a, b| md::prim_potential(a, pp, rp, b, pq, rq, pt));
                block[(p, q)] = v;
                block[(q, p)] = v;
            }
        }
        blocks.push(block);
        v_nuc[i] = molecule
            .atoms
            .iter()
            .map(|atom| atom.charge / (atom.position - pt).norm())
            .sum();
    }
    Ok((blocks, v_nuc))
}
