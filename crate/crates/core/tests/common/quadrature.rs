//! Numerical-quadrature reference integrals, independent of the Hermite
//! recursion path used by the library.
//!
//! Contracted s functions are integrated either on a composite
//! Gauss-Legendre grid (overlap, kinetic) or through the integral
//! representation 1/r = 2/sqrt(pi) INT_0^inf exp(-t^2 r^2) dt followed by
//! closed-form Gaussian quadratic-form integrals and a 1D quadrature over
//! t (potential, electron repulsion). No Gaussian product theorem and no
//! Boys function are invoked.

/// A contracted s-type Gaussian: sum of c_i exp(-a_i |r - center|^2),
/// coefficients including all normalization.
#[derive(Debug, Clone)]
pub struct SFunction {
    pub center: [f64; 3],
    pub prims: Vec<(f64, f64)>,
}

impl SFunction {
    /// Build from published (exponent, coefficient) pairs, normalizing the
    /// contraction by quadrature.
    pub fn from_table(center: [f64; 3], table: &[(f64, f64)]) -> Self {
        let mut f = SFunction {
            center,
            prims: table
                .iter()
                .map(|&(a, c)| (a, c * (2.0 * a / std::f64::consts::PI).powf(0.75)))
                .collect(),
        };
        let s = overlap(&f, &f);
        for p in &mut f.prims {
            p.1 /= s.sqrt();
        }
        f
    }

    pub fn value(&self, r: [f64; 3]) -> f64 {
        let dr2 = (r[0] - self.center[0]).powi(2)
            + (r[1] - self.center[1]).powi(2)
            + (r[2] - self.center[2]).powi(2);
        self.prims.iter().map(|&(a, c)| c * (-a * dr2).exp()).sum()
    }

    /// Laplacian of the contracted function at r.
    pub fn laplacian(&self, r: [f64; 3]) -> f64 {
        let dr2 = (r[0] - self.center[0]).powi(2)
            + (r[1] - self.center[1]).powi(2)
            + (r[2] - self.center[2]).powi(2);
        self.prims
            .iter()
            .map(|&(a, c)| c * (4.0 * a * a * dr2 - 6.0 * a) * (-a * dr2).exp())
            .sum()
    }
}

/// 10-point Gauss-Legendre nodes/weights on [-1, 1], computed by Newton
/// iteration on the Legendre polynomial.
fn gauss_legendre_10() -> Vec<(f64, f64)> {
    let n = 10;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // Chebyshev-based initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            // Evaluate P_n and P_n' by recurrence.
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let pk = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = pk;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0, x);
        for k in 2..=n {
            let pk = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
            p0 = p1;
            p1 = pk;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Composite Gauss-Legendre integration of f over [lo, hi]^3.
fn integrate_3d<F: Fn([f64; 3]) -> f64>(f: F, lo: f64, hi: f64, panels: usize) -> f64 {
    let gl = gauss_legendre_10();
    let width = (hi - lo) / panels as f64;
    // 1D node/weight list over the whole interval.
    let mut nodes = Vec::with_capacity(panels * gl.len());
    for p in 0..panels {
        let a = lo + p as f64 * width;
        for &(x, w) in &gl {
            nodes.push((a + 0.5 * width * (x + 1.0), 0.5 * width * w));
        }
    }
    let mut total = 0.0;
    for &(x, wx) in &nodes {
        for &(y, wy) in &nodes {
            let mut inner = 0.0;
            for &(z, wz) in &nodes {
                inner += wz * f([x, y, z]);
            }
            total += wx * wy * inner;
        }
    }
    total
}

pub fn overlap(a: &SFunction, b: &SFunction) -> f64 {
    integrate_3d(|r| a.value(r) * b.value(r), -10.0, 11.5, 24)
}

pub fn kinetic(a: &SFunction, b: &SFunction) -> f64 {
    integrate_3d(|r| -0.5 * a.value(r) * b.laplacian(r), -10.0, 11.5, 24)
}

/// Closed-form INT dx1 exp(-(alpha (x1-A)^2 + beta (x1-B)^2 + t2 (x1-C)^2)).
fn gaussian_1d_three(alpha: f64, a: f64, beta: f64, b: f64, t2: f64, c: f64) -> f64 {
    let m = alpha + beta + t2;
    let lin = alpha * a + beta * b + t2 * c;
    let cst = alpha * a * a + beta * b * b + t2 * c * c;
    (std::f64::consts::PI / m).sqrt() * (-(cst - lin * lin / m)).exp()
}

/// Adaptive-ish quadrature over t in [0, inf) via t = u/(1-u).
fn integrate_t<F: Fn(f64) -> f64>(f: F) -> f64 {
    let gl = gauss_legendre_10();
    let panels = 80;
    let mut total = 0.0;
    for p in 0..panels {
        let (u0, u1) = (p as f64 / panels as f64, (p as f64 + 1.0) / panels as f64);
        for &(x, w) in &gl {
            let u = u0 + 0.5 * (u1 - u0) * (x + 1.0);
            let t = u / (1.0 - u);
            let jac = 1.0 / ((1.0 - u) * (1.0 - u));
            total += 0.5 * (u1 - u0) * w * f(t) * jac;
        }
    }
    total
}

/// <a| 1/|r - C| |b> with a positive kernel.
pub fn potential(a: &SFunction, b: &SFunction, c: [f64; 3]) -> f64 {
    let two_over_sqrt_pi = 2.0 / std::f64::consts::PI.sqrt();
    two_over_sqrt_pi
        * integrate_t(|t| {
            let t2 = t * t;
            let mut sum = 0.0;
            for &(aa, ca) in &a.prims {
                for &(ab, cb) in &b.prims {
                    let mut prod = ca * cb;
                    for ax in 0..3 {
                        prod *= gaussian_1d_three(
                            aa,
                            a.center[ax],
                            ab,
                            b.center[ax],
                            t2,
                            c[ax],
                        );
                    }
                    sum += prod;
                }
            }
            sum
        })
}

/// Per-axis two-particle Gaussian integral with the t^2 (x1-x2)^2 coupling.
fn coupled_1d(
    alpha: f64,
    a: f64,
    beta: f64,
    b: f64,
    gamma: f64,
    c: f64,
    delta: f64,
    d: f64,
    t2: f64,
) -> f64 {
    // Quadratic form: x^T M x - 2 k^T x + c0 with x = (x1, x2).
    let m11 = alpha + beta + t2;
    let m22 = gamma + delta + t2;
    let m12 = -t2;
    let det = m11 * m22 - m12 * m12;
    let k1 = alpha * a + beta * b;
    let k2 = gamma * c + delta * d;
    let c0 = alpha * a * a + beta * b * b + gamma * c * c + delta * d * d;
    // k^T M^{-1} k
    let kmk = (m22 * k1 * k1 - 2.0 * m12 * k1 * k2 + m11 * k2 * k2) / det;
    std::f64::consts::PI / det.sqrt() * (-(c0 - kmk)).exp()
}

/// Two-electron repulsion (ab|cd) in chemist notation for s functions.
pub fn eri(a: &SFunction, b: &SFunction, c: &SFunction, d: &SFunction) -> f64 {
    let two_over_sqrt_pi = 2.0 / std::f64::consts::PI.sqrt();
    two_over_sqrt_pi
        * integrate_t(|t| {
            let t2 = t * t;
            let mut sum = 0.0;
            for &(aa, ca) in &a.prims {
                for &(ab, cb) in &b.prims {
                    for &(ac, cc) in &c.prims {
                        for &(ad, cd) in &d.prims {
                            let mut prod = ca * cb * cc * cd;
                            for ax in 0..3 {
                                prod *= coupled_1d(
                                    aa,
                                    a.center[ax],
                                    ab,
                                    b.center[ax],
                                    ac,
                                    c.center[ax],
                                    ad,
                                    d.center[ax],
                                    t2,
                                );
                            }
                            sum += prod;
                        }
                    }
                }
            }
            sum
        })
}
