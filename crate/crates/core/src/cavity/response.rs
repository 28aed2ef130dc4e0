//! Calderon boundary matrices and the IEF-PCM solvent response.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

use super::Cavity;

/// Diagonal factor of the single-layer operator, S_ii = k sqrt(4 pi / a_i).
const S_DIAGONAL_FACTOR: f64 = 1.0694;

/// Solvent response for a fixed cavity and dielectric constant.
///
/// `q_pcm` maps the molecular electrostatic potential on the tesserae to
/// the apparent surface charges. It is kept unsymmetrized unless
/// `symmetrize` was requested when building it.
#[derive(Debug, Clone)]
pub struct SolventResponse {
    pub epsilon: f64,
    pub s: DMatrix<f64>,
    pub d: DMatrix<f64>,
    /// Tessera areas (the diagonal of A).
    pub areas: DVector<f64>,
    pub q_pcm: DMatrix<f64>,
    pub symmetrized: bool,
}

/// Assemble the single-layer (S), double-layer (D) and area (A) matrices.
///
/// S_ij = 1/|s_i - s_j| off the diagonal with the standard self-potential
/// diagonal; D_ij = (s_i - s_j) . n_j / |s_i - s_j|^3, its diagonal fixed by
/// the sum rule sum_j D_ij a_j = -2 pi.
pub fn calderon_matrices(cavity: &Cavity) -> Result<(DMatrix<f64>, DMatrix<f64>, DVector<f64>)> {
    let n = cavity.n_tesserae();
    let mut s = DMatrix::zeros(n, n);
    let mut d = DMatrix::zeros(n, n);
    let areas = DVector::from_iterator(n, cavity.tesserae.iter().map(|t| t.area));

    for i in 0..n {
        let ti = &cavity.tesserae[i];
        s[(i, i)] = S_DIAGONAL_FACTOR * (4.0 * std::f64::consts::PI / ti.area).sqrt();
        for j in 0..n {
            if i == j {
                continue;
            }
            let tj = &cavity.tesserae[j];
            let rij = ti.center - tj.center;
            let dist = rij.norm();
            if dist < 1e-10 {
                return Err(Error::CoincidentTesserae(i, j));
            }
            s[(i, j)] = 1.0 / dist;
            d[(i, j)] = rij.dot(&tj.normal) / (dist * dist * dist);
        }
    }
    for i in 0..n {
        let off_sum: f64 = (0..n)
            .filter(|&j| j != i)
            .map(|j| d[(i, j)] * areas[j])
            .sum();
        d[(i, i)] = -(2.0 * std::f64::consts::PI + off_sum) / areas[i];
    }
    Ok((s, d, areas))
}

/// Build the solvent response matrix
/// Q = -(2 pi (eps+1)/(eps-1) S - D A S)^{-1} (2 pi I - D A)
/// by LU solve against the right-hand block.
pub fn response_matrix(
    s: &DMatrix<f64>,
    d: &DMatrix<f64>,
    areas: &DVector<f64>,
    epsilon: f64,
    symmetrize: bool,
) -> Result<SolventResponse> {
    if epsilon <= 1.0 {
        return Err(Error::InvalidConfig(format!(
            "dielectric constant must exceed 1, got {epsilon}"
        )));
    }
    let n = s.nrows();
    let two_pi = 2.0 * std::f64::consts::PI;
    let factor = two_pi * (epsilon + 1.0) / (epsilon - 1.0);
    // D A with A diagonal: scale columns of D by areas.
    let mut da = d.clone();
    for j in 0..n {
        da.column_mut(j).scale_mut(areas[j]);
    }
    let lhs = s * factor - &da * s;
    let mut rhs = -DMatrix::<f64>::identity(n, n) * two_pi;
    rhs += &da;

    let lu = lhs.lu();
    let diag: Vec<f64> = (0..n).map(|i| lu.u()[(i, i)].abs()).collect();
    let cond_estimate = diag.iter().cloned().fold(0.0, f64::max)
        / diag.iter().cloned().fold(f64::INFINITY, f64::min).max(1e-300);
    let q_pcm = lu
        .solve(&rhs)
        .filter(|q| q.iter().all(|x| x.is_finite()))
        .ok_or(Error::SingularResponse {
            cond: cond_estimate,
        })?;
    let q_pcm = if symmetrize {
        (q_pcm.transpose() + &q_pcm) * 0.5
    } else {
        q_pcm
    };
    Ok(SolventResponse {
        epsilon,
        s: s.clone(),
        d: d.clone(),
        areas: areas.clone(),
        q_pcm,
        symmetrized: symmetrize,
    })
}

/// Polarization charges induced by the potential vector V.
pub fn apparent_charges(response: &SolventResponse, v: &DVector<f64>) -> Result<DVector<f64>> {
    if v.len() != response.q_pcm.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "potential vector has {} entries, response expects {}",
            v.len(),
            response.q_pcm.nrows()
        )));
    }
    Ok(&response.q_pcm * v)
}

impl SolventResponse {
    /// Build directly from a cavity.
    pub fn from_cavity(cavity: &Cavity, epsilon: f64, symmetrize: bool) -> Result<Self> {
        let (s, d, areas) = calderon_matrices(cavity)?;
        response_matrix(&s, &d, &areas, epsilon, symmetrize)
    }

    pub fn n_tesserae(&self) -> usize {
        self.q_pcm.nrows()
    }

    /// Interaction energy 1/2 q^T V of the induced charges with the
    /// generating potential. Only the symmetric part of Q contributes.
    pub fn interaction_energy(&self, v: &DVector<f64>) -> Result<f64> {
        let q = apparent_charges(self, v)?;
        Ok(0.5 * q.dot(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::Vector3;

    fn born_sphere(level: u32) -> Cavity {
        Cavity::single_sphere(Vector3::zeros(), 2.0, level)
    }

    #[test]
    fn off_diagonal_s_is_coulomb_kernel() {
        let cav = born_sphere(2);
        let (s, _, _) = calderon_matrices(&cav).unwrap();
        let d01 = (cav.tesserae[0].center - cav.tesserae[1].center).norm();
        assert!((s[(0, 1)] - 1.0 / d01).abs() < 1e-14);
    }

    #[test]
    fn d_sum_rule_holds_by_construction() {
        let cav = born_sphere(2);
        let (_, d, a) = calderon_matrices(&cav).unwrap();
        for i in 0..cav.n_tesserae() {
            let sum: f64 = (0..cav.n_tesserae()).map(|j| d[(i, j)] * a[j]).sum();
            assert!((sum + 2.0 * std::f64::consts::PI).abs() < 1e-10);
        }
    }

    #[test]
    fn response_vanishes_at_epsilon_one() {
        let cav = born_sphere(2);
        let (s, d, a) = calderon_matrices(&cav).unwrap();
        let weak = response_matrix(&s, &d, &a, 1.0 + 1e-9, false).unwrap();
        let strong = response_matrix(&s, &d, &a, 78.0, false).unwrap();
        assert!(weak.q_pcm.norm() < 1e-6 * strong.q_pcm.norm());
    }

    #[test]
    fn conductor_limit() {
        let cav = born_sphere(2);
        let (s, d, a) = calderon_matrices(&cav).unwrap();
        let huge = response_matrix(&s, &d, &a, 1e9, false).unwrap();
        // Explicit conductor response with unit prefactor.
        let n = cav.n_tesserae();
        let two_pi = 2.0 * std::f64::consts::PI;
        let mut da = d.clone();
        for j in 0..n {
            da.column_mut(j).scale_mut(a[j]);
        }
        let lhs = &s * two_pi - &da * &s;
        let rhs = &da - DMatrix::<f64>::identity(n, n) * two_pi;
        let conductor = lhs.lu().solve(&rhs).unwrap();
        let rel = (huge.q_pcm.clone() - &conductor).norm() / conductor.norm();
        assert!(rel < 1e-6, "relative deviation {rel}");
    }

    #[test]
    fn born_ion_gauss_law_and_energy() {
        // Unit charge centered in a sphere of radius 2 bohr, eps = 46.7.
        let epsilon = 46.7;
        let radius = 2.0;
        let cav = Cavity::single_sphere(Vector3::zeros(), radius, 4);
        let resp = SolventResponse::from_cavity(&cav, epsilon, false).unwrap();
        let v = DVector::from_element(cav.n_tesserae(), 1.0 / radius);
        let q = apparent_charges(&resp, &v).unwrap();
        let q_tot: f64 = q.sum();
        let expected_q = -(epsilon - 1.0) / epsilon;
        assert!(
            (q_tot - expected_q).abs() / expected_q.abs() < 0.02,
            "Gauss law: {q_tot} vs {expected_q}"
        );
        let energy = resp.interaction_energy(&v).unwrap();
        let born = -(1.0 - 1.0 / epsilon) / (2.0 * radius);
        assert!(
            (energy - born).abs() / born.abs() < 0.015,
            "Born energy {energy} vs {born}"
        );
    }

    #[test]
    fn born_energy_error_shrinks_with_refinement() {
        // Off-center unit charge in a dielectric sphere; the analytic
        // reaction energy is the Kirkwood image series
        // W = -1/(2R) sum_l (eps-1)(l+1)/(eps(l+1)+l) (d/R)^{2l}.
        let epsilon = 46.7;
        let radius = 2.0;
        let offset = Vector3::new(0.0, 0.0, 1.0);
        let mut analytic = 0.0;
        for l in 0..200 {
            let lf = l as f64;
            analytic += (epsilon - 1.0) * (lf + 1.0) / (epsilon * (lf + 1.0) + lf)
                * (offset.norm() / radius).powi(2 * l);
        }
        let analytic = -analytic / (2.0 * radius);
        let mut errors = Vec::new();
        for level in [2, 3, 4] {
            let cav = Cavity::single_sphere(Vector3::zeros(), radius, level);
            let resp = SolventResponse::from_cavity(&cav, epsilon, false).unwrap();
            let v = DVector::from_fn(cav.n_tesserae(), |i, _| {
                1.0 / (cav.tesserae[i].center - offset).norm()
            });
            let energy = resp.interaction_energy(&v).unwrap();
            errors.push((energy - analytic).abs());
        }
        assert!(
            errors[0] > errors[1] && errors[1] > errors[2],
            "errors not monotone: {errors:?} (analytic {analytic})"
        );
        assert!(errors[2] / analytic.abs() < 0.015);
    }

    #[test]
    fn charges_linear_in_potential() {
        let cav = born_sphere(2);
        let resp = SolventResponse::from_cavity(&cav, 46.7, false).unwrap();
        let zero = DVector::zeros(cav.n_tesserae());
        assert_eq!(apparent_charges(&resp, &zero).unwrap().norm(), 0.0);
        let v = DVector::from_fn(cav.n_tesserae(), |i, _| (i as f64 * 0.37).sin());
        let q1 = apparent_charges(&resp, &v).unwrap();
        let q2 = apparent_charges(&resp, &(v * 3.5)).unwrap();
        assert!((q2 - q1 * 3.5).norm() < 1e-12);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let cav = born_sphere(1);
        let resp = SolventResponse::from_cavity(&cav, 46.7, false).unwrap();
        let v = DVector::zeros(3);
        assert!(matches!(
            apparent_charges(&resp, &v),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn eigenvalues_of_double_layer_combination_positive() {
        // 2 pi I - D A has positive spectrum on a sphere mesh.
        let cav = born_sphere(3);
        let (_, d, a) = calderon_matrices(&cav).unwrap();
        let n = cav.n_tesserae();
        let mut da = d.clone();
        for j in 0..n {
            da.column_mut(j).scale_mut(a[j]);
        }
        let m = DMatrix::<f64>::identity(n, n) * (2.0 * std::f64::consts::PI) - da;
        // The matrix is not symmetric; check the symmetric part, which
        // controls the quadratic form.
        let sym = (m.transpose() + &m) * 0.5;
        let eig = sym.symmetric_eigen();
        assert!(eig.eigenvalues.iter().all(|&l| l > 0.0));
    }
}
