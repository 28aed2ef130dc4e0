//! Boys function F_n(x) = ∫₀¹ t^{2n} exp(-x t²) dt.

/// Evaluate F_0 .. F_{n_max} at `x`.
///
/// Small arguments use the ascending series at the highest order followed by
/// stable downward recursion; large arguments start from the asymptotic
/// closed form for F_0 and recurse upward (the exp(-x) correction is below
/// machine precision there). Accuracy is ~1e-15 across the switch point.
pub fn boys(n_max: usize, x: f64) -> Vec<f64> {
    debug_assert!(x >= 0.0);
    let mut f = vec![0.0; n_max + 1];
    if x < 1e-14 {
        for (n, slot) in f.iter_mut().enumerate() {
            *slot = 1.0 / (2.0 * n as f64 + 1.0);
        }
        return f;
    }
    if x < 35.0 {
        // F_m(x) = exp(-x) Σ_k (2x)^k / [(2m+1)(2m+3)...(2m+2k+1)]
        let m = n_max;
        let mut term = 1.0 / (2.0 * m as f64 + 1.0);
        let mut sum = term;
        let mut k = 0usize;
        loop {
            k += 1;
            term *= 2.0 * x / (2.0 * (m + k) as f64 + 1.0);
            sum += term;
            if term < sum * 1e-17 || k > 300 {
                break;
            }
        }
        let emx = (-x).exp();
        f[m] = emx * sum;
        for n in (0..m).rev() {
            f[n] = (2.0 * x * f[n + 1] + emx) / (2.0 * n as f64 + 1.0);
        }
    } else {
        let emx = (-x).exp(); // ≤ 6e-16 here
        f[0] = 0.5 * (std::f64::consts::PI / x).sqrt();
        for n in 0..n_max {
            f[n + 1] = ((2.0 * n as f64 + 1.0) * f[n] - emx) / (2.0 * x);
        }
    }
    f
}
