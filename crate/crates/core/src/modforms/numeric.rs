//! Floating-point checks of the modular transformation `tau -> -1/tau`.

use num_complex::Complex64;

use crate::error::Result;
use crate::modforms::eisenstein::eisenstein;
use crate::qseries::QSeries;

/// The two sample points used throughout: `i` and `0.3 + 1.1 i`.
pub fn sample_points() -> [Complex64; 2] {
    [Complex64::new(0.0, 1.0), Complex64::new(0.3, 1.1)]
}

/// `|f(-1/tau) - tau^k f(tau)|`.
pub fn s_residual(f: &QSeries, weight: i32, tau: Complex64) -> Result<f64> {
    let lhs = f.eval_numeric(-tau.inv())?;
    let rhs = tau.powi(weight) * f.eval_numeric(tau)?;
    Ok((lhs - rhs).norm())
}

/// `|E2(-1/tau) - tau^2 E2(tau) - 12 tau / (2 pi i)|`.
pub fn e2_anomaly_residual(order: i64, tau: Complex64) -> Result<f64> {
    let e2 = eisenstein(2, order)?;
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    let lhs = e2.eval_numeric(-tau.inv())?;
    let rhs = tau * tau * e2.eval_numeric(tau)? + tau * 12.0 / two_pi_i;
    Ok((lhs - rhs).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eisenstein_transform_numerically() {
        for tau in sample_points() {
            for k in [4u32, 6] {
                let f = eisenstein(k, 64).unwrap();
                assert!(s_residual(&f, k as i32, tau).unwrap() < 1e-8);
            }
            assert!(e2_anomaly_residual(64, tau).unwrap() < 1e-8);
        }
    }
}
