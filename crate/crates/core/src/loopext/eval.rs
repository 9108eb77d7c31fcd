use num_traits::Zero;

use super::cocycle::{LoopContext, LoopElement};
use super::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::liealg::{LieType, SymRep};
use crate::ring::{kron, mat_add, mat_identity, mat_map, mat_scale, mat_sub, mat_zero, Matrix, Scalar};

type C<const N: u32> = CycloNumber<N>;

/// Evaluation representation of the sl2 map algebra on
/// `Sym^{n_1} (x) .. (x) Sym^{n_k}`: each point acts through its own factor.
pub struct EvaluationRep<const N: u32> {
    pub points: Vec<C<N>>,
    pub dims: Vec<usize>,
    reps: Vec<[Matrix<C<N>>; 3]>,
}

impl<const N: u32> EvaluationRep<N> {
    pub fn new(points: Vec<C<N>>, dims: Vec<usize>) -> Result<Self> {
        if points.len() != dims.len() || points.is_empty() {
            return Err(Error::InvalidArgument("one representation per point".into()));
        }
        let reps = dims
            .iter()
            .map(|&n| {
                let r = SymRep::new(n);
                let lift = |m: &Matrix<crate::ring::Q>| mat_map(m, C::<N>::from_rational);
                // Chevalley basis order for A1 is (h, e, f)
                [lift(&r.h), lift(&r.e), lift(&r.f)]
            })
            .collect();
        Ok(EvaluationRep { points, dims, reps })
    }

    pub fn size(&self) -> usize {
        self.dims.iter().map(|n| n + 1).product()
    }

    /// `Id (x) .. (x) m (x) .. (x) Id` with `m` in slot `i`.
    fn embed(&self, i: usize, m: &Matrix<C<N>>) -> Matrix<C<N>> {
        let mut out = mat_identity::<C<N>>(1);
        for (k, &n) in self.dims.iter().enumerate() {
            let factor = if k == i { m.clone() } else { mat_identity(n + 1) };
            out = kron(&out, &factor);
        }
        out
    }

    pub fn apply(&self, x: &LoopElement<N>) -> Result<Matrix<C<N>>> {
        let size = self.size();
        let mut total = mat_zero::<C<N>>(size, size);
        for (v, f) in &x.terms {
            for (i, a) in self.points.iter().enumerate() {
                let value = f.eval(a)?;
                if value.is_zero() {
                    continue;
                }
                let mut local = mat_zero::<C<N>>(self.dims[i] + 1, self.dims[i] + 1);
                for (b, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        local = mat_add(&local, &mat_scale(&self.reps[i][b], &C::from_rational(c)));
                    }
                }
                total = mat_add(&total, &mat_scale(&self.embed(i, &local), &value));
            }
        }
        Ok(total)
    }

    /// `ev([x, y]) - [ev x, ev y]` is zero.
    pub fn is_homomorphic_on(&self, ctx: &LoopContext, x: &LoopElement<N>, y: &LoopElement<N>) -> Result<bool> {
        assert_eq!(ctx.algebra.ty(), LieType::A1);
        let lhs = self.apply(&ctx.bracket(x, y))?;
        let (ex, ey) = (self.apply(x)?, self.apply(y)?);
        let rhs = mat_sub(&crate::ring::mat_mul(&ex, &ey), &crate::ring::mat_mul(&ey, &ex));
        Ok(mat_sub(&lhs, &rhs).iter().flatten().all(Zero::is_zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loopext::ratfunc::{octahedral, RatFunc};
    use crate::ring::q;
    use rand::SeedableRng;

    #[test]
    fn two_points_homomorphism() {
        let set = octahedral();
        let ctx = LoopContext::new(LieType::A1);
        let pts = vec![C::<4>::from_i64(2), C::<4>::zeta() + C::from_i64(3)];
        let ev = EvaluationRep::new(pts, vec![1, 2]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let mut elt = || LoopElement {
                terms: (0..2)
                    .map(|b| {
                        let v = vec![q(b), q(1), q(-1 - b)];
                        (v, RatFunc::random(&set, &mut rng, 2, 2))
                    })
                    .collect(),
            };
            let (x, y) = (elt(), elt());
            assert!(ev.is_homomorphic_on(&ctx, &x, &y).unwrap());
        }
    }

    #[test]
    fn pole_is_rejected() {
        let set = octahedral();
        let ev = EvaluationRep::new(vec![C::<4>::zeta()], vec![1]).unwrap();
        let x = LoopElement::pure(vec![q(1), q(0), q(0)], RatFunc::pole(&set, 3, 1));
        assert!(matches!(ev.apply(&x), Err(Error::PoleAtEvaluationPoint)));
    }
}
