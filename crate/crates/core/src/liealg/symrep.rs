use num_bigint::BigInt;
use num_integer::binomial;

use crate::ring::{mat_zero, Matrix, Scalar, Q};

/// The irreducible `(n+1)`-dimensional representation of sl2 on binary forms
/// of degree `n`.
///
/// Basis vector `i` is `C(n, a) x^a y^(n-a)` with `a = n - i`, so `H` is
/// `diag(n, n-2, .., -n)`, `E = x d/dy` is upper triangular, and
/// `exp(tau E)` applied to the lowest vector gives `(tau^n, .., tau, 1)`.
#[derive(Clone, Debug)]
pub struct SymRep {
    pub n: usize,
    pub e: Matrix<Q>,
    pub f: Matrix<Q>,
    pub h: Matrix<Q>,
}

impl SymRep {
    pub fn new(n: usize) -> Self {
        let mut e = mat_zero::<Q>(n + 1, n + 1);
        let mut f = mat_zero::<Q>(n + 1, n + 1);
        let mut h = mat_zero::<Q>(n + 1, n + 1);
        for i in 0..=n {
            h[i][i] = Q::from_integer(BigInt::from(n as i64 - 2 * i as i64));
            if i >= 1 {
                e[i - 1][i] = Q::from_integer(BigInt::from(n - i + 1));
            }
            if i < n {
                f[i + 1][i] = Q::from_integer(BigInt::from(i + 1));
            }
        }
        SymRep { n, e, f, h }
    }

    /// Eigenvalue of `H` on basis vector `i`.
    pub fn weight(&self, i: usize) -> i64 {
        self.n as i64 - 2 * i as i64
    }
}

/// Homogeneous binary form as coefficients of `x^b y^(deg-b)`, indexed by `b`.
fn form_mul<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

/// `Sym^n` of a 2x2 matrix, in the basis of [`SymRep`].
pub fn sym_power<F: Scalar>(g: &Matrix<F>, n: usize) -> Matrix<F> {
    // images of x and y as linear forms [coeff of y, coeff of x]
    let gx = vec![g[1][0].clone(), g[0][0].clone()];
    let gy = vec![g[1][1].clone(), g[0][1].clone()];
    let mut out = mat_zero::<F>(n + 1, n + 1);
    for a in 0..=n {
        let mut form = vec![F::one()];
        for _ in 0..a {
            form = form_mul(&form, &gx);
        }
        for _ in a..n {
            form = form_mul(&form, &gy);
        }
        let col = n - a;
        let scale_in = F::from_rational(&Q::from_integer(binomial(BigInt::from(n), BigInt::from(a))));
        for (b, c) in form.into_iter().enumerate() {
            let row = n - b;
            let scale_out = Q::from_integer(binomial(BigInt::from(n), BigInt::from(b)));
            out[row][col] = c * scale_in.clone() * F::from_rational(&scale_out.recip());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasimodular::{exp_nilpotent, QuasiPoly};
    use crate::ring::{mat_commutator, mat_mul, mat_scale, q};

    #[test]
    fn sl2_relations() {
        for n in 0..6 {
            let r = SymRep::new(n);
            assert_eq!(mat_commutator(&r.e, &r.f), r.h);
            assert_eq!(mat_commutator(&r.h, &r.e), mat_scale(&r.e, &q(2)));
            assert_eq!(mat_commutator(&r.h, &r.f), mat_scale(&r.f, &q(-2)));
        }
    }

    #[test]
    fn sym_power_is_multiplicative() {
        let a = vec![vec![q(2), q(1)], vec![q(3), q(-1)]];
        let b = vec![vec![q(0), q(-1)], vec![q(1), q(4)]];
        for n in 0..5 {
            assert_eq!(
                sym_power(&mat_mul(&a, &b), n),
                mat_mul(&sym_power(&a, n), &sym_power(&b, n))
            );
        }
    }

    #[test]
    fn exponential_of_e_matches_sym_power() {
        let t = QuasiPoly::tau();
        let e1 = SymRep::new(1).e;
        let g1 = exp_nilpotent(&e1, &t).unwrap();
        for n in 0..5 {
            let en = exp_nilpotent(&SymRep::new(n).e, &t).unwrap();
            assert_eq!(sym_power(&g1, n), en);
        }
    }
}
