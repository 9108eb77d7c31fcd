use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;

use super::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::ring::{q, Field, Poly, Scalar};

/// Finite poles allowed for a map algebra on the sphere; infinity is always
/// allowed as well.
#[derive(Clone, Debug)]
pub struct PoleSet<const N: u32> {
    pub name: &'static str,
    pub points: Arc<Vec<CycloNumber<N>>>,
}

impl<const N: u32> PoleSet<N> {
    pub fn new(name: &'static str, points: Vec<CycloNumber<N>>) -> Self {
        PoleSet { name, points: Arc::new(points) }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// A point of the set, or `None` if `t` is not one.
    pub fn position(&self, t: &CycloNumber<N>) -> Option<usize> {
        self.points.iter().position(|p| p == t)
    }
}

fn rat<const N: u32>(n: i64) -> CycloNumber<N> {
    CycloNumber::from_rational(&q(n))
}

/// `C[t, 1/t]`.
pub fn loop_set() -> PoleSet<1> {
    PoleSet::new("loop", vec![rat(0)])
}

/// `{0, 1, infinity}`.
pub fn dihedral() -> PoleSet<1> {
    PoleSet::new("dihedral", vec![rat(0), rat(1)])
}

/// `{infinity, 1, omega, omega^2}`.
pub fn tetrahedral() -> PoleSet<3> {
    PoleSet::new(
        "tetrahedral",
        vec![rat(1), CycloNumber::zeta(), CycloNumber::zeta_pow(2)],
    )
}

/// `{0, infinity, 1, -1, i, -i}`.
pub fn octahedral() -> PoleSet<4> {
    PoleSet::new(
        "octahedral",
        vec![rat(0), rat(1), rat(-1), CycloNumber::zeta(), CycloNumber::zeta_pow(3)],
    )
}

/// `{0, infinity}` and `e^k (e + e^4)`, `e^k (e^2 + e^3)` for `k = 0..5`,
/// with `e = exp(2 pi i / 5)`.
pub fn icosahedral() -> PoleSet<5> {
    let e = CycloNumber::<5>::zeta_pow;
    let mut points = vec![rat(0)];
    for k in 0..5 {
        points.push(e(k) * (e(1) + e(4)));
    }
    for k in 0..5 {
        points.push(e(k) * (e(2) + e(3)));
    }
    PoleSet::new("icosahedral", points)
}

pub const POLE_SET_NAMES: &[&str] = &["loop", "dihedral", "tetrahedral", "octahedral", "icosahedral"];

/// `num / prod (t - a_i)^{den_i}` over the points `a_i` of a pole set. No
/// cancellation is attempted.
#[derive(Clone, Debug)]
pub struct RatFunc<const N: u32> {
    num: Poly<CycloNumber<N>>,
    den: Vec<u32>,
    points: Arc<Vec<CycloNumber<N>>>,
}

type C<const N: u32> = CycloNumber<N>;

fn linear<const N: u32>(a: &C<N>) -> Poly<C<N>> {
    Poly::linear_root(a.clone())
}

/// Coefficient of `u^m` in `a(u) / b(u)` with `b(0) != 0`.
fn series_quotient_coeff<const N: u32>(a: &Poly<C<N>>, b: &Poly<C<N>>, m: usize) -> C<N> {
    let b0_inv = b.coeff(0).inv().expect("denominator nonzero at the point");
    let mut out: Vec<C<N>> = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let mut acc = a.coeff(k);
        for i in 1..=k {
            let bi = b.coeff(i);
            if !bi.is_zero() {
                acc = acc - bi * out[k - i].clone();
            }
        }
        out.push(acc * b0_inv.clone());
    }
    out.pop().unwrap()
}

impl<const N: u32> RatFunc<N> {
    pub fn from_parts(set: &PoleSet<N>, num: Poly<C<N>>, den: Vec<u32>) -> Self {
        assert_eq!(den.len(), set.len());
        RatFunc { num, den, points: set.points.clone() }
    }

    pub fn polynomial(set: &PoleSet<N>, num: Poly<C<N>>) -> Self {
        Self::from_parts(set, num, vec![0; set.len()])
    }

    pub fn constant(set: &PoleSet<N>, c: C<N>) -> Self {
        Self::polynomial(set, Poly::constant(c))
    }

    /// `(t - a_i)^{-e}`.
    pub fn pole(set: &PoleSet<N>, i: usize, e: u32) -> Self {
        let mut den = vec![0; set.len()];
        den[i] = e;
        Self::from_parts(set, Poly::one(), den)
    }

    /// `t^m` for any integer `m`; needs `0` in the pole set when `m < 0`.
    pub fn power(set: &PoleSet<N>, m: i64) -> Self {
        if m >= 0 {
            return Self::polynomial(set, Poly::x().pow(m as u32));
        }
        let zero = set.position(&C::zero()).expect("0 must be a pole for negative powers");
        Self::pole(set, zero, (-m) as u32)
    }

    /// Random element: numerator of degree at most `deg` with small
    /// coefficients, and poles of order at most `max_order` at up to two
    /// random points.
    pub fn random<R: Rng>(set: &PoleSet<N>, rng: &mut R, deg: usize, max_order: u32) -> Self {
        let num = Poly::new((0..=deg).map(|_| C::random_small(rng, 3)).collect());
        let mut den = vec![0; set.len()];
        for _ in 0..2 {
            let i = rng.gen_range(0..set.len());
            den[i] = rng.gen_range(0..=max_order);
        }
        Self::from_parts(set, num, den)
    }

    pub fn numerator(&self) -> &Poly<C<N>> {
        &self.num
    }

    pub fn pole_orders(&self) -> &[u32] {
        &self.den
    }

    fn den_poly_except(&self, skip: Option<usize>) -> Poly<C<N>> {
        let mut p = Poly::one();
        for (i, (a, e)) in self.points.iter().zip(&self.den).enumerate() {
            if Some(i) != skip && *e > 0 {
                p = p * linear(a).pow(*e);
            }
        }
        p
    }

    pub fn denominator(&self) -> Poly<C<N>> {
        self.den_poly_except(None)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Numerator raised to the denominator `max(self.den, other.den)`.
    fn lift(&self, target: &[u32]) -> Poly<C<N>> {
        let mut p = self.num.clone();
        for ((a, e), t) in self.points.iter().zip(&self.den).zip(target) {
            if t > e {
                p = p * linear(a).pow(t - e);
            }
        }
        p
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let den: Vec<u32> = self.den.iter().zip(&other.den).map(|(a, b)| *a.max(b)).collect();
        let (a, b) = (self.lift(&den), other.lift(&den));
        let num = if sign { a + b } else { a - b };
        RatFunc { num, den, points: self.points.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc {
            num: self.num.clone() * other.num.clone(),
            den: self.den.iter().zip(&other.den).map(|(a, b)| a + b).collect(),
            points: self.points.clone(),
        }
    }

    pub fn scale(&self, c: &C<N>) -> Self {
        RatFunc { num: self.num.scale(c), den: self.den.clone(), points: self.points.clone() }
    }

    /// `d/dt`, raising each existing pole order by one.
    pub fn derivative(&self) -> Self {
        let active: Vec<usize> = (0..self.den.len()).filter(|&i| self.den[i] > 0).collect();
        let mut prod = Poly::one();
        for &i in &active {
            prod = prod * linear(&self.points[i]);
        }
        let mut num = self.num.derivative() * prod;
        for &i in &active {
            let mut others = Poly::one();
            for &k in &active {
                if k != i {
                    others = others * linear(&self.points[k]);
                }
            }
            let e = C::from_i64(self.den[i] as i64);
            num = num - self.num.clone() * others.scale(&e);
        }
        let den = self.den.iter().map(|e| if *e > 0 { e + 1 } else { 0 }).collect();
        RatFunc { num, den, points: self.points.clone() }
    }

    pub fn eval(&self, t: &C<N>) -> Result<C<N>> {
        let d = self.denominator().eval(t);
        let inv = d.inv().ok_or(Error::PoleAtEvaluationPoint)?;
        Ok(self.num.eval(t) * inv)
    }

    /// Residue at the `i`-th finite point.
    pub fn residue(&self, i: usize) -> C<N> {
        let e = self.den[i];
        if e == 0 || self.num.is_zero() {
            return C::zero();
        }
        let a = &self.points[i];
        let shifted_num = self.num.taylor_shift(a);
        let shifted_rest = self.den_poly_except(Some(i)).taylor_shift(a);
        series_quotient_coeff(&shifted_num, &shifted_rest, (e - 1) as usize)
    }

    /// Residue at infinity, via `t = 1/u`.
    pub fn residue_at_infinity(&self) -> C<N> {
        let Some(dn) = self.num.degree() else {
            return C::zero();
        };
        let d = self.denominator();
        let dd = d.degree().unwrap();
        // f(1/u) du/u^2 = u^{dd - dn - 2} rev(num)(u) / rev(den)(u)
        let m = dn as i64 - dd as i64 + 1;
        if m < 0 {
            return C::zero();
        }
        let rev = |p: &Poly<C<N>>| Poly::new(p.coeffs().iter().rev().cloned().collect());
        -series_quotient_coeff(&rev(&self.num), &rev(&d), m as usize)
    }

    /// Residues at every finite point followed by infinity.
    pub fn all_residues(&self) -> Vec<C<N>> {
        let mut v: Vec<C<N>> = (0..self.den.len()).map(|i| self.residue(i)).collect();
        v.push(self.residue_at_infinity());
        v
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_residues() {
        let set = loop_set();
        let inv_t = RatFunc::power(&set, -1);
        assert_eq!(inv_t.residue(0), C::one());
        assert_eq!(inv_t.residue_at_infinity(), -C::<1>::one());
        let d = dihedral();
        assert!(RatFunc::pole(&d, 1, 2).residue(1).is_zero());
    }

    #[test]
    fn derivative_of_inverse_square() {
        let set = loop_set();
        let f = RatFunc::power(&set, -2).derivative();
        assert!(f.equals(&RatFunc::power(&set, -3).scale(&C::from_i64(-2))));
    }

    #[test]
    fn icosahedral_points_are_distinct() {
        let s = icosahedral();
        for i in 0..s.len() {
            for j in 0..i {
                assert_ne!(s.points[i], s.points[j]);
            }
        }
        assert_eq!(s.len(), 11);
    }

    #[test]
    fn octahedral_residues_sum_to_zero() {
        let s = octahedral();
        let f = RatFunc::pole(&s, 3, 1).mul(&RatFunc::pole(&s, 4, 2)).mul(&RatFunc::power(&s, 3));
        let total = f.all_residues().into_iter().fold(C::zero(), |a, b| a + b);
        assert!(total.is_zero());
    }
}
