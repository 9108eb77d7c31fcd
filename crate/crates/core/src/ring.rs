//! Small exact-arithmetic toolkit shared by the other modules: a coefficient
//! trait, dense univariate polynomials, and linear algebra over fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Render a rational as `p/q` (denominator always present).
pub fn rat_to_string(r: &Q) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `p` or `p/q`.
pub fn parse_rat(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Commutative ring elements usable as matrix and Lie-algebra coefficients.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_rational(r: &Q) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&q(n))
    }
}

pub trait Field: Scalar {
    fn inv(&self) -> Option<Self>;
}

impl Scalar for Q {
    fn from_rational(r: &Q) -> Self {
        r.clone()
    }
}

impl Field for Q {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

// ---------------------------------------------------------------------------
// Univariate polynomials

/// Dense polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

/// Polynomials in the modular invariant `j`.
pub type JPoly = Poly<Q>;

impl<F: Scalar> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    /// `x - a`
    pub fn linear_root(a: F) -> Self {
        Self::new(vec![-a, F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn eval(&self, t: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    /// `p(x + a)`
    pub fn taylor_shift(&self, a: &F) -> Self {
        let mut acc = Self::zero();
        let lin = Self::new(vec![a.clone(), F::one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc * lin.clone() + Self::constant(c.clone());
        }
        acc
    }

    /// Map coefficients into another ring.
    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> Poly<F> {
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.coeffs[dd].inv().expect("leading coefficient invertible");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quo = vec![F::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (k, dk) in d.coeffs.iter().enumerate() {
                let idx = i - dd + k;
                rem[idx] = rem[idx].clone() - c.clone() * dk.clone();
            }
            quo[i - dd] = c;
        }
        (Self::new(quo), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("field")),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<F: Scalar> Zero for Poly<F> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Scalar> One for Poly<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Scalar> Add for Poly<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<F: Scalar> Sub for Poly<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<F: Scalar> Neg for Poly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<F: Scalar> Mul for Poly<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                out[i + k] = out[i + k].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<F: Scalar> Scalar for Poly<F> {
    fn from_rational(r: &Q) -> Self {
        Self::constant(F::from_rational(r))
    }
}

impl Poly<Q> {
    /// Pretty form in the named variable, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Dense matrices over a scalar ring

pub type Matrix<F> = Vec<Vec<F>>;

pub fn mat_zero<F: Scalar>(rows: usize, cols: usize) -> Matrix<F> {
    vec![vec![F::zero(); cols]; rows]
}

pub fn mat_identity<F: Scalar>(n: usize) -> Matrix<F> {
    let mut m = mat_zero(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = F::one();
    }
    m
}

pub fn mat_mul<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = mat_zero::<F>(n, m);
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if b[l][j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].clone() + a[i][l].clone() * b[l][j].clone();
            }
        }
    }
    out
}

pub fn mat_add<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.clone() + y.clone()).collect())
        .collect()
}

pub fn mat_sub<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.clone() - y.clone()).collect())
        .collect()
}

pub fn mat_scale<F: Scalar>(a: &Matrix<F>, c: &F) -> Matrix<F> {
    a.iter()
        .map(|r| r.iter().map(|x| x.clone() * c.clone()).collect())
        .collect()
}

pub fn mat_commutator<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    mat_sub(&mat_mul(a, b), &mat_mul(b, a))
}

pub fn mat_is_zero<F: Scalar>(a: &Matrix<F>) -> bool {
    a.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

pub fn mat_trace<F: Scalar>(a: &Matrix<F>) -> F {
    let mut t = F::zero();
    for (i, r) in a.iter().enumerate() {
        t = t + r[i].clone();
    }
    t
}

pub fn mat_map<F: Scalar, G: Scalar>(a: &Matrix<F>, f: impl Fn(&F) -> G) -> Matrix<G> {
    a.iter().map(|r| r.iter().map(&f).collect()).collect()
}

/// Kronecker product.
pub fn kron<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let (ar, ac) = (a.len(), a.first().map_or(0, Vec::len));
    let (br, bc) = (b.len(), b.first().map_or(0, Vec::len));
    let mut out = mat_zero::<F>(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[i * br + k][j * bc + l] = a[i][j].clone() * b[k][l].clone();
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Linear algebra over a field

/// In-place reduced row echelon form; returns pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..cols {
                    let v = m[r][k].clone();
                    m[i][k] = m[i][k].clone() - f.clone() * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

pub fn det<F: Field>(m: &Matrix<F>) -> F {
    let n = m.len();
    let mut a = m.clone();
    let mut d = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d = d * a[c][c].clone();
        let inv = a[c][c].inv().expect("nonzero pivot");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() * inv.clone();
            for k in c..n {
                let v = a[c][k].clone();
                a[i][k] = a[i][k].clone() - f.clone() * v;
            }
        }
    }
    d
}

/// Some solution of `a x = b`, if one exists.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix<F> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Basis of the row space (as reduced rows).
pub fn row_space<F: Field>(rows: &[Vec<F>]) -> Matrix<F> {
    let mut m = rows.to_vec();
    let k = rref(&mut m).len();
    m.truncate(k);
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_division_roundtrip() {
        let a = Poly::new(vec![q(-1), q(0), q(0), q(1)]);
        let b = Poly::linear_root(q(1));
        let (quo, rem) = a.div_rem(&b);
        assert!(rem.is_zero());
        assert_eq!(quo, Poly::new(vec![q(1), q(1), q(1)]));
    }

    #[test]
    fn taylor_shift_matches_eval() {
        let p = Poly::new(vec![q(3), q(-2), q(5), q(1)]);
        let s = p.taylor_shift(&q(2));
        for t in -3..4 {
            assert_eq!(s.eval(&q(t)), p.eval(&q(t + 2)));
        }
    }

    #[test]
    fn determinant_and_solve() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        assert_eq!(det(&m), q(5));
        let x = solve(&m, &[q(3), q(4)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        let sing = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(solve(&sing, &[q(1), q(1)]).is_none());
        assert_eq!(rank(&sing), 1);
    }

    #[test]
    fn rational_string_roundtrip() {
        let r = qf(-7, 3);
        assert_eq!(parse_rat(&rat_to_string(&r)), Some(r));
        assert_eq!(parse_rat("5"), Some(q(5)));
        assert_eq!(parse_rat("1/0"), None);
    }
}
