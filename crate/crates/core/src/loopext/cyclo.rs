use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::ring::{q, Field, Poly, Scalar, Q};

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest first.
pub fn cyclotomic(n: u32) -> Vec<i64> {
    // x^n - 1 divided by every cyclotomic factor of a proper divisor
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let c = cyclotomic(d);
            p = exact_div(&p, &c);
        }
    }
    p
}

fn exact_div(a: &[i64], monic: &[i64]) -> Vec<i64> {
    let d = monic.len() - 1;
    let mut rem = a.to_vec();
    let mut quo = vec![0i64; a.len() - d];
    for i in (d..a.len()).rev() {
        let c = rem[i];
        quo[i - d] = c;
        for (k, m) in monic.iter().enumerate() {
            rem[i - d + k] -= c * m;
        }
    }
    debug_assert!(rem.iter().all(|x| *x == 0));
    quo
}

/// Element of `Q(zeta_n)`, stored as a polynomial in `zeta_n` of degree below
/// `phi(n)`, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycloNumber<const N: u32> {
    coeffs: Vec<Q>,
}

impl<const N: u32> CycloNumber<N> {
    fn reduce(mut c: Vec<Q>) -> Self {
        let m = cyclotomic(N);
        let d = m.len() - 1;
        for i in (d..c.len()).rev() {
            let top = std::mem::replace(&mut c[i], Q::zero());
            if top.is_zero() {
                continue;
            }
            for (k, mk) in m.iter().enumerate().take(d) {
                if *mk != 0 {
                    c[i - d + k] -= &top * q(*mk);
                }
            }
        }
        c.truncate(d.min(c.len()));
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        CycloNumber { coeffs: c }
    }

    pub fn from_coeffs(c: Vec<Q>) -> Self {
        Self::reduce(c)
    }

    pub fn rational(r: Q) -> Self {
        Self::reduce(vec![r])
    }

    /// `exp(2 pi i / N)`.
    pub fn zeta() -> Self {
        Self::reduce(vec![Q::zero(), Q::one()])
    }

    pub fn zeta_pow(k: i64) -> Self {
        Self::reduce({
            let e = k.rem_euclid(N as i64) as usize;
            let mut v = vec![Q::zero(); e + 1];
            v[e] = Q::one();
            v
        })
    }

    pub fn degree() -> usize {
        cyclotomic(N).len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn as_rational(&self) -> Option<Q> {
        match self.coeffs.len() {
            0 => Some(Q::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Coefficients drawn uniformly from `-bound..=bound`.
    pub fn random_small<R: Rng>(rng: &mut R, bound: i64) -> Self {
        Self::reduce((0..Self::degree()).map(|_| q(rng.gen_range(-bound..=bound))).collect())
    }

    fn as_poly(&self) -> Poly<Q> {
        Poly::new(self.coeffs.clone())
    }
}

impl<const N: u32> Zero for CycloNumber<N> {
    fn zero() -> Self {
        CycloNumber { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<const N: u32> One for CycloNumber<N> {
    fn one() -> Self {
        Self::rational(Q::one())
    }
}

impl<const N: u32> Add for CycloNumber<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[Q], i: usize| v.get(i).cloned().unwrap_or_else(Q::zero);
        Self::reduce((0..n).map(|i| get(&self.coeffs, i) + get(&rhs.coeffs, i)).collect())
    }
}

impl<const N: u32> Neg for CycloNumber<N> {
    type Output = Self;
    fn neg(self) -> Self {
        CycloNumber { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<const N: u32> Sub for CycloNumber<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<const N: u32> Mul for CycloNumber<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::reduce(out)
    }
}

impl<const N: u32> Scalar for CycloNumber<N> {
    fn from_rational(r: &Q) -> Self {
        Self::rational(r.clone())
    }
}

impl<const N: u32> Field for CycloNumber<N> {
    /// Extended Euclid against the cyclotomic polynomial.
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let m = Poly::new(cyclotomic(N).into_iter().map(q).collect());
        // invariant: s_i * a == r_i mod m
        let (mut r0, mut r1) = (m, self.as_poly());
        let (mut s0, mut s1) = (Poly::<Q>::zero(), Poly::<Q>::one());
        while !r1.is_zero() {
            let (quo, rem) = r0.div_rem(&r1);
            let s2 = s0 - quo * s1.clone();
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since m is irreducible
        let c = r0.coeff(0).recip();
        Some(Self::reduce(s0.scale(&c).coeffs().to_vec()))
    }
}

impl<const N: u32> fmt::Display for CycloNumber<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, a) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => format!("z{N}"),
                _ => format!("z{N}^{i}"),
            };
            match (mono.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{a}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic(20), vec![1, 0, -1, 0, 1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity() {
        let i = CycloNumber::<4>::zeta();
        assert_eq!(i.clone() * i, CycloNumber::rational(q(-1)));
        let e = CycloNumber::<5>::zeta();
        let mut p = CycloNumber::<5>::one();
        for _ in 0..5 {
            p = p * e.clone();
        }
        assert_eq!(p, CycloNumber::one());
        assert_eq!(CycloNumber::<1>::zeta(), CycloNumber::one());
    }

    #[test]
    fn inverses() {
        let x = CycloNumber::<5>::from_coeffs(vec![q(2), q(-1), q(0), q(3)]);
        assert_eq!(x.clone() * x.inv().unwrap(), CycloNumber::one());
        let w = CycloNumber::<3>::zeta();
        assert_eq!(w.inv().unwrap(), w.clone() * w);
    }
}
