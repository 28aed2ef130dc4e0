//! Shared helpers for integration tests.

pub mod quadrature;

use solvq::molint::Molecule;

/// H2 at 1.4 bohr along x.
pub fn h2_molecule() -> Molecule {
    Molecule::from_bohr(&[("H", [0.0, 0.0, 0.0]), ("H", [1.4, 0.0, 0.0])], 0).unwrap()
}

/// STO-3G hydrogen primitives as published: (exponent, coefficient) with
/// coefficients referring to normalized primitives.
pub const STO3G_H: [(f64, f64); 3] = [
    (3.42525091, 0.15432897),
    (0.62391373, 0.53532814),
    (0.16885540, 0.44463454),
];
