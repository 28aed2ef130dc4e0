//! Molecular electronic structure in implicit solvent.
//!
//! The crate covers the full pipeline from raw molecular input to a
//! variational quantum eigensolver whose cost function is the free energy
//! in solution:
//!
//! - [`molint`]: Gaussian-orbital integrals (overlap, kinetic, nuclear
//!   attraction, two-electron repulsion, electrostatic potential at
//!   arbitrary surface points) via McMurchie-Davidson Hermite recursion.
//! - [`cavity`]: molecular cavity tessellation and the IEF-PCM solvent
//!   response matrix built from the Calderon boundary operators.
//! - [`scf`]: restricted Hartree-Fock with DIIS, in gas phase and coupled
//!   self-consistently to the continuum solvent, plus the frozen-core
//!   active-space reduction.
//! - [`ferm2qubit`]: second-quantized Hamiltonians and solute-solvent
//!   interaction tables, mapped to qubit operators by Jordan-Wigner.
//! - [`qsim`]: dense statevector simulator with Givens-rotation and UCCSD
//!   excitation gates, exact and shot-sampled reduced density matrices.
//! - [`solver`]: VQE drivers in vacuum and in solvent, adaptive excitation
//!   selection, parameter-shift gradients, and derived observables.
//! - [`oracle`]: exact-diagonalization references (FCI and its
//!   self-consistent solvated counterpart) used by tests and validation.
//! - [`cli`]: batch front end reading a run configuration and writing
//!   reports, convergence traces, and cavity/state dumps.

pub mod cavity;
pub mod cli;
pub mod config;
pub mod constants;
pub mod error;
pub mod ferm2qubit;
pub mod molint;
pub mod oracle;
pub mod qsim;
pub mod scf;
pub mod solver;

pub use error::{Error, Result};
