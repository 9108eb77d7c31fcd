use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::cyclo::CycloNumber;
use super::ratfunc::{loop_set, PoleSet, RatFunc};
use crate::liealg::{ChevalleyAlgebra, LieType};
use crate::ring::{q, rank, Matrix, Scalar, Q};

type C<const N: u32> = CycloNumber<N>;

/// Element of `g (x) C[t, (t - a_i)^{-1}]` as a sum of pure tensors; the Lie
/// algebra part is a coordinate vector in the Chevalley basis.
#[derive(Clone, Debug)]
pub struct LoopElement<const N: u32> {
    pub terms: Vec<(Vec<Q>, RatFunc<N>)>,
}

impl<const N: u32> LoopElement<N> {
    pub fn pure(x: Vec<Q>, f: RatFunc<N>) -> Self {
        LoopElement { terms: vec![(x, f)] }
    }
}

/// Where a residue cocycle is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Place {
    Finite(usize),
    Infinity,
}

/// A Lie algebra with its Killing form, shared by the cocycle computations.
pub struct LoopContext {
    pub algebra: ChevalleyAlgebra,
    pub killing: Matrix<Q>,
}

impl LoopContext {
    pub fn new(ty: LieType) -> Self {
        let algebra = ChevalleyAlgebra::new(ty);
        let killing = algebra.killing_matrix();
        LoopContext { algebra, killing }
    }

    pub fn killing(&self, x: &[Q], y: &[Q]) -> Q {
        let mut s = Q::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    s += xi * yj * &self.killing[i][j];
                }
            }
        }
        s
    }

    pub fn bracket<const N: u32>(&self, a: &LoopElement<N>, b: &LoopElement<N>) -> LoopElement<N> {
        let mut terms = Vec::new();
        for (x, f) in &a.terms {
            for (y, g) in &b.terms {
                let xy = self.algebra.bracket(x, y);
                if xy.iter().any(|c| !c.is_zero()) {
                    terms.push((xy, f.mul(g)));
                }
            }
        }
        LoopElement { terms }
    }

    /// `omega(x f, y g) = K(x, y) res(g df)` at the given place.
    pub fn cocycle<const N: u32>(&self, a: &LoopElement<N>, b: &LoopElement<N>, at: Place) -> C<N> {
        let mut total = C::zero();
        for (x, f) in &a.terms {
            for (y, g) in &b.terms {
                let k = self.killing(x, y);
                if k.is_zero() {
                    continue;
                }
                let form = f.derivative().mul(g);
                let r = match at {
                    Place::Finite(i) => form.residue(i),
                    Place::Infinity => form.residue_at_infinity(),
                };
                total = total + r * C::from_rational(&k);
            }
        }
        total
    }

    fn random_vector<R: rand::Rng>(&self, rng: &mut R) -> Vec<Q> {
        (0..self.algebra.dim()).map(|_| q(rng.gen_range(-2..=2))).collect()
    }
}

pub fn places<const N: u32>(set: &PoleSet<N>) -> Vec<Place> {
    let mut v: Vec<Place> = (0..set.len()).map(Place::Finite).collect();
    v.push(Place::Infinity);
    v
}

/// `omega(x t^m, y t^n) = m K(x, y) delta_{m+n,0}` at `t = 0`, for every pair of
/// basis elements and `|m|, |n| <= bound`.
pub fn monomial_cocycle_check(ty: LieType, bound: i64) -> bool {
    let ctx = LoopContext::new(ty);
    let set = loop_set();
    let dim = ctx.algebra.dim();
    for m in -bound..=bound {
        for n in -bound..=bound {
            let (f, g) = (RatFunc::power(&set, m), RatFunc::power(&set, n));
            for i in 0..dim {
                for j in 0..dim {
                    let a = LoopElement::pure(ctx.algebra.basis_vector(i), f.clone());
                    let b = LoopElement::pure(ctx.algebra.basis_vector(j), g.clone());
                    let got = ctx.cocycle(&a, &b, Place::Finite(0));
                    let want = if m + n == 0 { q(m) * &ctx.killing[i][j] } else { Q::zero() };
                    if got != C::from_rational(&want) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Outcome of the sampled cocycle checks on one pole set.
#[derive(Clone, Debug, Default)]
pub struct CocycleSampleReport {
    pub samples: usize,
    pub cocycle_identity: bool,
    pub antisymmetric: bool,
    pub residue_theorem: bool,
}

impl CocycleSampleReport {
    pub fn holds(&self) -> bool {
        self.cocycle_identity && self.antisymmetric && self.residue_theorem
    }
}

/// For `samples` seeded random triples of pure tensors, checks at every place
/// `omega([a,b],c) + omega([b,c],a) + omega([c,a],b) = 0`, antisymmetry, and
/// that the residues of `g df` over all places sum to zero.
pub fn sampled_cocycle_checks<const N: u32>(
    ty: LieType,
    set: &PoleSet<N>,
    samples: usize,
    seed: u64,
) -> CocycleSampleReport {
    let ctx = LoopContext::new(ty);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report =
        CocycleSampleReport { samples, cocycle_identity: true, antisymmetric: true, residue_theorem: true };
    let places = places(set);
    for _ in 0..samples {
        let mut elt = || {
            let x = ctx.random_vector(&mut rng);
            LoopElement::pure(x, RatFunc::random(set, &mut rng, 2, 2))
        };
        let (a, b, c) = (elt(), elt(), elt());
        let (ab, bc, ca) = (ctx.bracket(&a, &b), ctx.bracket(&b, &c), ctx.bracket(&c, &a));
        let mut residue_sum = C::<N>::zero();
        for &p in &places {
            let s = ctx.cocycle(&ab, &c, p) + ctx.cocycle(&bc, &a, p) + ctx.cocycle(&ca, &b, p);
            report.cocycle_identity &= s.is_zero();
            let anti = ctx.cocycle(&a, &b, p) + ctx.cocycle(&b, &a, p);
            report.antisymmetric &= anti.is_zero();
            residue_sum = residue_sum + ctx.cocycle(&a, &b, p);
        }
        report.residue_theorem &= residue_sum.is_zero();
    }
    report
}

/// Rank of the cocycles at the finite places, evaluated on seeded random
/// pairs: the matrix has one row per pair and one column per finite point.
pub fn finite_cocycle_rank<const N: u32>(ty: LieType, set: &PoleSet<N>, samples: usize, seed: u64) -> usize {
    let ctx = LoopContext::new(ty);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Matrix<C<N>> = Vec::new();
    for _ in 0..samples {
        let mut elt = || {
            let x = ctx.random_vector(&mut rng);
            LoopElement::pure(x, RatFunc::random(set, &mut rng, 2, 2))
        };
        let (a, b) = (elt(), elt());
        rows.push((0..set.len()).map(|i| ctx.cocycle(&a, &b, Place::Finite(i))).collect());
    }
    rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loopext::ratfunc::{dihedral, octahedral};

    #[test]
    fn monomials_on_sl2() {
        assert!(monomial_cocycle_check(LieType::A1, 3));
    }

    #[test]
    fn dihedral_rank_two() {
        assert_eq!(finite_cocycle_rank(LieType::A1, &dihedral(), 12, 7), 2);
    }

    #[test]
    fn octahedral_samples() {
        assert!(sampled_cocycle_checks(LieType::A1, &octahedral(), 5, 1).holds());
    }
}
