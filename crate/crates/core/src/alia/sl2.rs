use num_complex::Complex64;

use crate::quasimodular::{
    inverse, matrix_eval, matrix_from_ints, matrix_serre_d, matrix_shift_tau, NumericPoint,
    QuasiMatrix, QuasiPoly,
};
use crate::ring::{mat_add, mat_commutator, mat_mul, mat_scale, mat_sub, q, qf};
use crate::vvmf::phi;
use crate::error::Result;

/// The sl2-valued forms of weights -2, 0, 2 for the adjoint action of the
/// modular group, and the standard triple built from them.
#[derive(Clone, Debug)]
pub struct Sl2Bundle {
    pub a_minus2: QuasiMatrix,
    pub a0: QuasiMatrix,
    pub a2: QuasiMatrix,
    pub e: QuasiMatrix,
    pub h: QuasiMatrix,
    pub f: QuasiMatrix,
}

pub fn sl2_explicit() -> Sl2Bundle {
    let t = QuasiPoly::tau();
    let a_minus2 = vec![
        vec![t.clone(), -t.pow(2)],
        vec![QuasiPoly::int(1), -t],
    ];
    let a0 = matrix_serre_d(&a_minus2, -2);
    let a2 = matrix_serre_d(&a0, 0);
    let pi2 = QuasiPoly::pi_squared();
    let f = a_minus2.clone();
    let h = mat_scale(&a0, &QuasiPoly::two_pi_i());
    let e = mat_add(
        &mat_scale(&a_minus2, &(pi2.clone() * QuasiPoly::e4()).scale(&qf(1, 36))),
        &mat_scale(&a2, &pi2.scale(&q(2))),
    );
    Sl2Bundle { a_minus2, a0, a2, e, h, f }
}

fn is_zero(m: &QuasiMatrix) -> bool {
    m.iter().all(|r| r.iter().all(num_traits::Zero::is_zero))
}

impl Sl2Bundle {
    /// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn triple_relations(&self) -> [bool; 3] {
        let two = QuasiPoly::int(2);
        [
            mat_commutator(&self.h, &self.e) == mat_scale(&self.e, &two),
            mat_commutator(&self.h, &self.f) == mat_scale(&self.f, &(-two)),
            mat_commutator(&self.e, &self.f) == self.h,
        ]
    }

    /// `Phi_1 X Phi_1^{-1}` equals `h, e, f` for the constant standard triple.
    pub fn conjugation_identities(&self) -> Result<[bool; 3]> {
        let p = phi(1).matrix;
        let p_inv = inverse(&p)?;
        let conj = |x: &[&[i64]]| mat_mul(&mat_mul(&p, &matrix_from_ints(x)), &p_inv);
        Ok([
            conj(&[&[1, 0], &[0, -1]]) == self.h,
            conj(&[&[0, 1], &[0, 0]]) == self.e,
            conj(&[&[0, 0], &[1, 0]]) == self.f,
        ])
    }

    /// Rows of `ad(a0)` in the basis `(a_-2, a0, a2)`: the image of each basis
    /// vector, written in that basis.
    pub fn ad_a0_rows() -> [[QuasiPoly; 3]; 3] {
        let s = QuasiPoly::s_pow(1);
        let zero = QuasiPoly::int(0);
        [
            [s.scale(&q(-2)), zero.clone(), zero.clone()],
            [zero.clone(), zero.clone(), zero.clone()],
            [(s.clone() * QuasiPoly::e4()).scale(&qf(1, 18)), zero, s.scale(&q(2))],
        ]
    }

    /// Checks every row of [`Self::ad_a0_rows`] against the matrix commutators.
    pub fn ad_a0_holds(&self) -> bool {
        let basis = [&self.a_minus2, &self.a0, &self.a2];
        Self::ad_a0_rows().iter().zip(basis).all(|(row, x)| {
            let image = mat_commutator(&self.a0, x);
            let mut expect = mat_scale(&self.a0, &QuasiPoly::int(0));
            for (c, b) in row.iter().zip(basis) {
                expect = mat_add(&expect, &mat_scale(b, c));
            }
            is_zero(&mat_sub(&image, &expect))
        })
    }

    /// Lower-left entry of `h` is `2 pi i E2 / 6 = 2y`.
    pub fn h_lower_left_is_2y(&self) -> bool {
        self.h[1][0] == QuasiPoly::y().scale(&q(2))
    }

    /// `a_-2(tau + 1) = T a_-2(tau) T^{-1}`.
    pub fn a_minus2_t_check(&self) -> bool {
        let t = matrix_from_ints(&[&[1, 1], &[0, 1]]);
        let t_inv = matrix_from_ints(&[&[1, -1], &[0, 1]]);
        matrix_shift_tau(&self.a_minus2) == mat_mul(&mat_mul(&t, &self.a_minus2), &t_inv)
    }

    /// Residual of `a_-2(-1/tau) = tau^-2 S a_-2(tau) S^{-1}` at a point.
    pub fn a_minus2_s_residual(&self, tau: Complex64) -> Result<f64> {
        let at = |z: Complex64| -> Result<Vec<Vec<Complex64>>> {
            Ok(matrix_eval(&self.a_minus2, &NumericPoint::at(z, 8)?))
        };
        let lhs = at(-tau.inv())?;
        let m = at(tau)?;
        // S m S^{-1} with S = [[0,-1],[1,0]]
        let conj = [[m[1][1], -m[1][0]], [-m[0][1], m[0][0]]];
        let scale = tau.powi(-2);
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((lhs[i][j] - conj[i][j] * scale).norm());
            }
        }
        Ok(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_triple_and_conjugation() {
        let b = sl2_explicit();
        assert_eq!(b.triple_relations(), [true; 3]);
        assert_eq!(b.conjugation_identities().unwrap(), [true; 3]);
        assert!(b.h_lower_left_is_2y());
        assert!(b.ad_a0_holds());
        assert!(b.a_minus2_t_check());
        assert!(b.a_minus2_s_residual(Complex64::new(0.3, 1.1)).unwrap() < 1e-12);
    }

    #[test]
    fn e_matches_explicit_entries() {
        // e_11 = pi^2 tau E2^2 / 36 - i pi E2 / 6, with i pi = 1/(2s)
        let b = sl2_explicit();
        let pi2 = QuasiPoly::pi_squared();
        let i_pi = QuasiPoly::s_pow(-1).scale(&qf(1, 2));
        let e2 = QuasiPoly::e2();
        let t = QuasiPoly::tau();
        let e11 = (pi2.clone() * t * e2.pow(2)).scale(&qf(1, 36)) - (i_pi * e2.clone()).scale(&qf(1, 6));
        assert_eq!(b.e[0][0], e11);
        assert_eq!(b.e[1][0], (pi2 * e2.pow(2)).scale(&qf(1, 36)));
    }
}
