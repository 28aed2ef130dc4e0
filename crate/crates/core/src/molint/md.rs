//! McMurchie-Davidson evaluation of Gaussian integrals.
//!
//! Cartesian primitive pairs are expanded in Hermite Gaussians through the
//! E_t^{ij} recursion; Coulomb-type integrals contract the expansion with
//! Hermite Coulomb integrals R_{tuv} built on the Boys function. One scheme
//! covers overlap, kinetic, point-charge potential, and two-electron
//! repulsion for s and p shells.

use nalgebra::Vector3;

use super::basis::CartPowers;
use super::boys::boys;

/// Hermite expansion coefficients E_t^{ij} along one axis.
///
/// Returned as `e[i][j][t]` for i ≤ l1, j ≤ l2, t ≤ i + j. The t = 0 slot
/// carries the pair exponential prefactor.
fn hermite_e(l1: usize, l2: usize, a: f64, b: f64, ax: f64, bx: f64) -> Vec<Vec<Vec<f64>>> {
    let p = a + b;
    let mu = a * b / p;
    let xab = ax - bx;
    let px = (a * ax + b * bx) / p;
    let xpa = px - ax;
    let xpb = px - bx;

    let mut e = vec![vec![vec![0.0; l1 + l2 + 1]; l2 + 1]; l1 + 1];
    e[0][0][0] = (-mu * xab * xab).exp();
    for i in 0..l1 {
        for t in 0..=(i + 1) {
            let mut val = xpa * e[i][0][t];
            if t > 0 {
                val += e[i][0][t - 1] / (2.0 * p);
            }
            if t + 1 <= i {
                val += (t as f64 + 1.0) * e[i][0][t + 1];
            }
            e[i + 1][0][t] = val;
        }
    }
    for i in 0..=l1 {
        for j in 0..l2 {
            for t in 0..=(i + j + 1) {
                let mut val = xpb * e[i][j][t];
                if t > 0 {
                    val += e[i][j][t - 1] / (2.0 * p);
                }
                if t + 1 <= i + j {
                    val += (t as f64 + 1.0) * e[i][j][t + 1];
                }
                e[i][j + 1][t] = val;
            }
        }
    }
    e
}

/// Hermite Coulomb integrals R_{tuv} = R^0_{tuv}(p, PC) for t+u+v ≤ l_max.
fn hermite_r(l_max: usize, p: f64, pc: Vector3<f64>) -> Vec<Vec<Vec<f64>>> {
    let f = boys(l_max, p * pc.norm_squared());
    // r[n][t][u][v] with n + t + u + v ≤ l_max
    let dim = l_max + 1;
    let mut r = vec![vec![vec![vec![0.0; dim]; dim]; dim]; dim];
    for (n, rn) in r.iter_mut().enumerate() {
        rn[0][0][0] = (-2.0 * p).powi(n as i32) * f[n];
    }
    for total in 1..=l_max {
        for n in 0..=(l_max - total) {
            for t in 0..=total {
                for u in 0..=(total - t) {
                    let v = total - t - u;
                    let val = if t > 0 {
                        let mut x = pc.x * r[n + 1][t - 1][u][v];
                        if t > 1 {
                            x += (t as f64 - 1.0) * r[n + 1][t - 2][u][v];
                        }
                        x
                    } else if u > 0 {
                        let mut x = pc.y * r[n + 1][t][u - 1][v];
                        if u > 1 {
                            x += (u as f64 - 1.0) * r[n + 1][t][u - 2][v];
                        }
                        x
                    } else {
                        let mut x = pc.z * r[n + 1][t][u][v - 1];
                        if v > 1 {
                            x += (v as f64 - 1.0) * r[n + 1][t][u][v - 2];
                        }
                        x
                    };
                    r[n][t][u][v] = val;
                }
            }
        }
    }
    r[0].clone()
}

/// 1D overlap factors S(i, j) = E_0^{ij} sqrt(pi/p) for i ≤ l1, j ≤ l2.
fn overlap_1d(l1: usize, l2: usize, a: f64, b: f64, ax: f64, bx: f64) -> Vec<Vec<f64>> {
    let p = a + b;
    let pref = (std::f64::consts::PI / p).sqrt();
    let e = hermite_e(l1, l2, a, b, ax, bx);
    (0..=l1)
        .map(|i| (0..=l2).map(|j| e[i][j][0] * pref).collect())
        .collect()
}

pub(crate) fn prim_overlap(
    a: f64,
    pa: CartPowers,
    ra: Vector3<f64>,
    b: f64,
    pb: CartPowers,
    rb: Vector3<f64>,
) -> f64 {
    let sx = overlap_1d(pa.0 as usize, pb.0 as usize, a, b, ra.x, rb.x);
    let sy = overlap_1d(pa.1 as usize, pb.1 as usize, a, b, ra.y, rb.y);
    let sz = overlap_1d(pa.2 as usize, pb.2 as usize, a, b, ra.z, rb.z);
    sx[pa.0 as usize][pb.0 as usize] * sy[pa.1 as usize][pb.1 as usize] * sz[pa.2 as usize][pb.2 as usize]
}

/// Self-overlap building block used for contraction normalization.
pub(crate) fn primitive_overlap_same_center(a: f64, b: f64, powers: CartPowers) -> f64 {
    prim_overlap(a, powers, Vector3::zeros(), b, powers, Vector3::zeros())
}

pub(crate) fn prim_kinetic(
    a: f64,
    pa: CartPowers,
    ra: Vector3<f64>,
    b: f64,
    pb: CartPowers,
    rb: Vector3<f64>,
) -> f64 {
    // -1/2 d²/dx² applied to the ket: 4b² S(i,j+2) - 2b(2j+1) S(i,j) + j(j-1) S(i,j-2)
    let l1 = [pa.0 as usize, pa.1 as usize, pa.2 as usize];
    let l2 = [pb.0 as usize, pb.1 as usize, pb.2 as usize];
    let ax = [ra.x, ra.y, ra.z];
    let bx = [rb.x, rb.y, rb.z];
    let s: Vec<Vec<Vec<f64>>> = (0..3)
        .map(|k| overlap_1d(l1[k], l2[k] + 2, a, b, ax[k], bx[k]))
        .collect();
    let t1d = |k: usize| -> f64 {
        let (i, j) = (l1[k], l2[k]);
        let mut val = 4.0 * b * b * s[k][i][j + 2] - 2.0 * b * (2.0 * j as f64 + 1.0) * s[k][i][j];
        if j >= 2 {
            val += (j * (j - 1)) as f64 * s[k][i][j - 2];
        }
        -0.5 * val
    };
    let s0 = |k: usize| s[k][l1[k]][l2[k]];
    t1d(0) * s0(1) * s0(2) + s0(0) * t1d(1) * s0(2) + s0(0) * s0(1) * t1d(2)
}

/// ⟨a| 1/|r - C| |b⟩ for a unit positive charge at `c` (positive kernel).
pub(crate) fn prim_potential(
    a: f64,
    pa: CartPowers,
    ra: Vector3<f64>,
    b: f64,
    pb: CartPowers,
    rb: Vector3<f64>,
    c: Vector3<f64>,
) -> f64 {
    let p = a + b;
    let cap_p = (a * ra + b * rb) / p;
    let ex = hermite_e(pa.0 as usize, pb.0 as usize, a, b, ra.x, rb.x);
    let ey = hermite_e(pa.1 as usize, pb.1 as usize, a, b, ra.y, rb.y);
    let ez = hermite_e(pa.2 as usize, pb.2 as usize, a, b, ra.z, rb.z);
    let l_total = (pa.0 + pa.1 + pa.2 + pb.0 + pb.1 + pb.2) as usize;
    let r = hermite_r(l_total, p, cap_p - c);
    let mut total = 0.0;
    for t in 0..=(pa.0 + pb.0) as usize {
        for u in 0..=(pa.1 + pb.1) as usize {
            for v in 0..=(pa.2 + pb.2) as usize {
                total += ex[pa.0 as usize][pb.0 as usize][t]
                    * ey[pa.1 as usize][pb.1 as usize][u]
                    * ez[pa.2 as usize][pb.2 as usize][v]
                    * r[t][u][v];
            }
        }
    }
    2.0 * std::f64::consts::PI / p * total
}

/// Two-electron repulsion (ab|cd) over primitives, chemist notation.
#[allow(clippy::too_many_arguments)]
pub(crate) fn prim_eri(
    a: f64,
    pa: CartPowers,
    ra: Vector3<f64>,
    b: f64,
    pb: CartPowers,
    rb: Vector3<f64>,
    c: f64,
    pc: CartPowers,
    rc: Vector3<f64>,
    d: f64,
    pd: CartPowers,
    rd: Vector3<f64>,
) -> f64 {
    let p = a + b;
    let q = c + d;
    let alpha = p * q / (p + q);
    let cap_p = (a * ra + b * rb) / p;
    let cap_q = (c * rc + d * rd) / q;

    let e1x = hermite_e(pa.0 as usize, pb.0 as usize, a, b, ra.x, rb.x);
    let e1y = hermite_e(pa.1 as usize, pb.1 as usize, a, b, ra.y, rb.y);
    let e1z = hermite_e(pa.2 as usize, pb.2 as usize, a, b, ra.z, rb.z);
    let e2x = hermite_e(pc.0 as usize, pd.0 as usize, c, d, rc.x, rd.x);
    let e2y = hermite_e(pc.1 as usize, pd.1 as usize, c, d, rc.y, rd.y);
    let e2z = hermite_e(pc.2 as usize, pd.2 as usize, c, d, rc.z, rd.z);

    let l1 = (pa.0 + pa.1 + pa.2 + pb.0 + pb.1 + pb.2) as usize;
    let l2 = (pc.0 + pc.1 + pc.2 + pd.0 + pd.1 + pd.2) as usize;
    let r = hermite_r(l1 + l2, alpha, cap_p - cap_q);

    let mut total = 0.0;
    for t in 0..=(pa.0 + pb.0) as usize {
        for u in 0..=(pa.1 + pb.1) as usize {
            for v in 0..=(pa.2 + pb.2) as usize {
                let e1 = e1x[pa.0 as usize][pb.0 as usize][t]
                    * e1y[pa.1 as usize][pb.1 as usize][u]
                    * e1z[pa.2 as usize][pb.2 as usize][v];
                if e1 == 0.0 {
                    continue;
                }
                for tau in 0..=(pc.0 + pd.0) as usize {
                    for nu in 0..=(pc.1 + pd.1) as usize {
                        for phi in 0..=(pc.2 + pd.2) as usize {
                            let e2 = e2x[pc.0 as usize][pd.0 as usize][tau]
                                * e2y[pc.1 as usize][pd.1 as usize][nu]
                                * e2z[pc.2 as usize][pd.2 as usize][phi];
                            if e2 == 0.0 {
                                continue;
                            }
                            let sign = if (tau + nu + phi) % 2 == 0 { 1.0 } else { -1.0 };
                            total += e1 * e2 * sign * r[t + tau][u + nu][v + phi];
                        }
                    }
                }
            }
        }
    }
    let pi = std::f64::consts::PI;
    2.0 * pi.powf(2.5) / (p * q * (p + q).sqrt()) * total
}
