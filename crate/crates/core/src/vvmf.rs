//! The equivariant matrix `Phi_n = exp(tau E) exp(y F)` on `Sym^n`, its
//! transformation checks, and Hilbert series of vector-valued modular forms.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::liealg::{sym_power, SymRep};
use crate::quasimodular::{
    det_ring, exp_nilpotent, matrix_eval, matrix_shift_tau, NumericPoint, QuasiMatrix, QuasiPoly,
};
use crate::ring::{mat_mul, q, Matrix, Q};

/// `Phi_n` together with the grading it carries: column `j` is really
/// multiplied by `dtau^{weights[j]/2}`, which is kept symbolic.
#[derive(Clone, Debug)]
pub struct PhiOperator {
    pub n: usize,
    pub matrix: QuasiMatrix,
    pub weights: Vec<i64>,
}

pub fn phi(n: usize) -> PhiOperator {
    let rep = SymRep::new(n);
    let a = exp_nilpotent(&rep.e, &QuasiPoly::tau()).expect("E nilpotent");
    let b = exp_nilpotent(&rep.f, &QuasiPoly::y()).expect("F nilpotent");
    PhiOperator { n, matrix: mat_mul(&a, &b), weights: (0..=n).map(|i| rep.weight(i)).collect() }
}

fn int_matrix(m: [[i64; 2]; 2]) -> Matrix<Q> {
    m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

impl PhiOperator {
    pub fn det(&self) -> QuasiPoly {
        det_ring(&self.matrix)
    }

    /// `Phi_n` agrees entrywise with `Sym^n(Phi_1)`.
    pub fn is_sym_power_of_phi1(&self) -> bool {
        sym_power(&phi(1).matrix, self.n) == self.matrix
    }

    /// Last column, `(tau^n, .., tau, 1)`.
    pub fn right_column(&self) -> Vec<QuasiPoly> {
        self.matrix.iter().map(|r| r[self.n].clone()).collect()
    }

    /// Exact check of `Phi(tau + 1) = rho(T) Phi(tau)`.
    pub fn t_equivariant(&self) -> bool {
        let t = sym_power(&int_matrix([[1, 1], [0, 1]]), self.n);
        let t: QuasiMatrix =
            t.iter().map(|r| r.iter().map(|x| QuasiPoly::constant(x.clone())).collect()).collect();
        matrix_shift_tau(&self.matrix) == mat_mul(&t, &self.matrix)
    }

    /// Max-entry residual of `Phi(g tau) (c tau + d)^{-k_j} - rho(g) Phi(tau)`.
    pub fn equivariance_residual(&self, g: [[i64; 2]; 2], tau: Complex64, order: i64) -> Result<f64> {
        let (a, b, c, d) = (g[0][0] as f64, g[0][1] as f64, g[1][0] as f64, g[1][1] as f64);
        let cd = tau * c + d;
        let gtau = (tau * a + b) / cd;
        let lhs = matrix_eval(&self.matrix, &NumericPoint::at(gtau, order)?);
        let at = matrix_eval(&self.matrix, &NumericPoint::at(tau, order)?);
        let rho: Vec<Vec<Complex64>> = sym_power(&int_matrix(g), self.n)
            .iter()
            .map(|r| r.iter().map(|x| Complex64::new(x.to_f64().unwrap(), 0.0)).collect())
            .collect();
        let size = self.n + 1;
        let mut worst = 0.0f64;
        for i in 0..size {
            for j in 0..size {
                let l = lhs[i][j] * cd.powi(-(self.weights[j] as i32));
                let mut r = Complex64::zero();
                for k in 0..size {
                    r += rho[i][k] * at[k][j];
                }
                worst = worst.max((l - r).norm());
            }
        }
        Ok(worst)
    }

    pub fn s_residual(&self, tau: Complex64, order: i64) -> Result<f64> {
        self.equivariance_residual([[0, -1], [1, 0]], tau, order)
    }
}

/// Groups whose rings of modular forms are free on two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// `SL2(Z)`: generators `E4`, `E6`.
    Full,
    /// `Gamma(2)`: two generators of weight 2.
    Two,
}

impl Level {
    pub fn generator_weights(self) -> [i64; 2] {
        match self {
            Level::Full => [4, 6],
            Level::Two => [2, 2],
        }
    }
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "Gamma(1)" | "Gamma1" | "SL2(Z)" | "full" => Ok(Level::Full),
            "2" | "Gamma(2)" | "Gamma2" => Ok(Level::Two),
            _ => Err(Error::InvalidArgument(format!("unsupported group {s:?}"))),
        }
    }
}

/// Rational generating function `numerator(t) / prod (1 - t^w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: BTreeMap<i64, i64>,
    pub generator_weights: Vec<i64>,
}

impl HilbertSeries {
    /// Scalar-valued forms.
    pub fn modular_forms(level: Level) -> Self {
        HilbertSeries {
            numerator: BTreeMap::from([(0, 1)]),
            generator_weights: level.generator_weights().to_vec(),
        }
    }

    /// Forms valued in `Sym^n`: numerator `t^-n + t^(2-n) + .. + t^n`.
    pub fn vector_valued(n: usize, level: Level) -> Self {
        let n = n as i64;
        HilbertSeries {
            numerator: (0..=n).map(|j| (2 * j - n, 1)).collect(),
            generator_weights: level.generator_weights().to_vec(),
        }
    }

    /// Coefficients of `t^k` for `k` in `lo..=hi`, by expanding the product of
    /// geometric series.
    pub fn coefficients(&self, lo: i64, hi: i64) -> Vec<(i64, i64)> {
        let min_num = *self.numerator.keys().next().unwrap_or(&0);
        let span = (hi - min_num).max(0) as usize;
        let mut denom_series = vec![0i64; span + 1];
        denom_series[0] = 1;
        for &w in &self.generator_weights {
            let w = w as usize;
            for i in w..=span {
                denom_series[i] += denom_series[i - w];
            }
        }
        (lo..=hi)
            .map(|k| {
                let total: i64 = self
                    .numerator
                    .iter()
                    .filter(|(m, _)| k - **m >= 0)
                    .map(|(m, c)| c * denom_series[(k - m) as usize])
                    .sum();
                (k, total)
            })
            .collect()
    }

    pub fn coefficient(&self, k: i64) -> i64 {
        self.coefficients(k, k)[0].1
    }
}

/// Number of products `v_j A^a B^b` of weight `k`, where `v_j` (weight
/// `2j - n`) runs over a basis of `Sym^n` forms and `A`, `B` are the ring
/// generators; counted by enumerating exponents.
pub fn monomial_count(n: usize, level: Level, k: i64) -> i64 {
    let [wa, wb] = level.generator_weights();
    let mut count = 0;
    for j in 0..=n as i64 {
        let rest = k - (2 * j - n as i64);
        if rest < 0 {
            continue;
        }
        for a in 0..=rest / wa {
            for b in 0..=rest / wb {
                if a * wa + b * wb == rest {
                    count += 1;
                }
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi1_shape() {
        let p = phi(1);
        let t = QuasiPoly::tau();
        let y = QuasiPoly::y();
        assert_eq!(p.matrix[0][0], t.clone() * y.clone() + QuasiPoly::int(1));
        assert_eq!(p.matrix[0][1], t);
        assert_eq!(p.matrix[1][0], y);
        assert_eq!(p.weights, vec![1, -1]);
    }

    #[test]
    fn right_column_is_powers_of_tau() {
        let p = phi(3);
        let t = QuasiPoly::tau();
        assert_eq!(p.right_column(), vec![t.pow(3), t.pow(2), t, QuasiPoly::int(1)]);
    }

    #[test]
    fn determinant_functoriality_t_check() {
        for n in 0..=4 {
            let p = phi(n);
            assert_eq!(p.det(), QuasiPoly::int(1));
            assert!(p.is_sym_power_of_phi1());
            assert!(p.t_equivariant());
        }
    }

    #[test]
    fn s_check_small() {
        let p = phi(2);
        assert!(p.s_residual(Complex64::new(0.3, 1.1), 40).unwrap() < 1e-8);
    }

    #[test]
    fn scalar_dimensions() {
        let h = HilbertSeries::modular_forms(Level::Full);
        let dims: Vec<i64> = (0..=6).map(|i| h.coefficient(2 * i)).collect();
        assert_eq!(dims, vec![1, 0, 1, 1, 1, 1, 2]);
        let h2 = HilbertSeries::modular_forms(Level::Two);
        assert_eq!(h2.coefficient(4), 3);
    }
}
