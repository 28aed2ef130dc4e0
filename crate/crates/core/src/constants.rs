//! Physical constants and element data.

/// Bohr radii per angstrom (CODATA 2018).
pub const BOHR_PER_ANGSTROM: f64 = 1.889_726_124_565_062;

/// Nuclear charge for the elements the embedded basis tables cover.
pub fn nuclear_charge(element: &str) -> Option<u32> {
    match element {
        "H" => Some(1),
        "He" => Some(2),
        "Li" => Some(3),
        "Be" => Some(4),
        "B" => Some(5),
        "C" => Some(6),
        "N" => Some(7),
        "O" => Some(8),
        "F" => Some(9),
        "Ne" => Some(10),
        _ => None,
    }
}

/// Default cavity radii in angstrom: Bondi van der Waals values where
/// defined (H, He, O); beryllium is absent from Bondi's table and is
/// pinned here explicitly. All values can be overridden per run.
pub fn default_cavity_radius(element: &str) -> Option<f64> {
    match element {
        "H" => Some(1.20),
        "He" => Some(1.40),
        "Be" => Some(1.53),
        "O" => Some(1.52),
        "C" => Some(1.70),
        "N" => Some(1.55),
        _ => None,
    }
}

/// Default scaling applied to cavity radii.
pub const DEFAULT_RADIUS_SCALE: f64 = 1.2;

/// Default solvent dielectric constant (dimethyl sulfoxide).
pub const DEFAULT_EPSILON: f64 = 46.7;
