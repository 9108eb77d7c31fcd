//! The polynomial ring `Q[tau, E2, E4, E6, s, 1/s]`, with `s` standing for
//! `1/(2 pi i)`, together with its derivation `D`, Serre derivatives, and
//! matrices over it.
//!
//! `D` is the derivation extending `q d/dq`: `D tau = s`, `D E2 = (E2^2 - E4)/12`,
//! `D E4 = (E2 E4 - E6)/3`, `D E6 = (E2 E6 - E4^2)/2`, `D s = 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modforms::eisenstein;
use crate::qseries::{Exp, QSeries};
use crate::ring::{mat_identity, mat_mul, mat_zero, q, qf, rat_to_string, Matrix, Scalar, Q};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub tau: u32,
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub s: i32,
}

impl Monomial {
    fn times(self, o: Monomial) -> Monomial {
        Monomial {
            tau: self.tau + o.tau,
            p: self.p + o.p,
            q: self.q + o.q,
            r: self.r + o.r,
            s: self.s + o.s,
        }
    }

    /// Weight with `tau` counted as -2 and `s` as 0.
    pub fn weight(&self) -> i64 {
        2 * self.p as i64 + 4 * self.q as i64 + 6 * self.r as i64 - 2 * self.tau as i64
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuasiPoly {
    terms: BTreeMap<Monomial, Q>,
}

pub type QuasiMatrix = Matrix<QuasiPoly>;

impl QuasiPoly {
    pub fn term(c: Q, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        QuasiPoly { terms }
    }

    pub fn constant(c: Q) -> Self {
        Self::term(c, Monomial::default())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(q(n))
    }

    pub fn tau() -> Self {
        Self::term(q(1), Monomial { tau: 1, ..Default::default() })
    }

    /// `E2`, written `P` in Ramanujan's notation.
    pub fn e2() -> Self {
        Self::term(q(1), Monomial { p: 1, ..Default::default() })
    }

    pub fn e4() -> Self {
        Self::term(q(1), Monomial { q: 1, ..Default::default() })
    }

    pub fn e6() -> Self {
        Self::term(q(1), Monomial { r: 1, ..Default::default() })
    }

    /// `s^k` with `s = 1/(2 pi i)`.
    pub fn s_pow(k: i32) -> Self {
        Self::term(q(1), Monomial { s: k, ..Default::default() })
    }

    /// `2 pi i = 1/s`.
    pub fn two_pi_i() -> Self {
        Self::s_pow(-1)
    }

    /// `pi^2 = -1/(4 s^2)`.
    pub fn pi_squared() -> Self {
        Self::s_pow(-2).scale(&qf(-1, 4))
    }

    /// `y = 2 pi i E2 / 12`.
    pub fn y() -> Self {
        Self::e2() * Self::s_pow(-1).scale(&qf(1, 12))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QuasiPoly { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// The derivation `D`.
    pub fn derive(&self) -> Self {
        let dp = (Self::e2() * Self::e2() - Self::e4()).scale(&qf(1, 12));
        let dq = (Self::e2() * Self::e4() - Self::e6()).scale(&qf(1, 3));
        let dr = (Self::e2() * Self::e6() - Self::e4() * Self::e4()).scale(&qf(1, 2));
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let base = |mm: Monomial| Self::term(c.clone(), mm);
            if m.tau > 0 {
                let mm = Monomial { tau: m.tau - 1, s: m.s + 1, ..*m };
                out = out + base(mm).scale(&q(m.tau as i64));
            }
            if m.p > 0 {
                let mm = Monomial { p: m.p - 1, ..*m };
                out = out + (base(mm) * dp.clone()).scale(&q(m.p as i64));
            }
            if m.q > 0 {
                let mm = Monomial { q: m.q - 1, ..*m };
                out = out + (base(mm) * dq.clone()).scale(&q(m.q as i64));
            }
            if m.r > 0 {
                let mm = Monomial { r: m.r - 1, ..*m };
                out = out + (base(mm) * dr.clone()).scale(&q(m.r as i64));
            }
        }
        out
    }

    /// Serre derivative `D_k a = D a - (k/12) E2 a`.
    pub fn serre_d(&self, k: i64) -> Self {
        self.derive() - (Self::e2() * self.clone()).scale(&qf(k, 12))
    }

    /// Substitute `tau -> tau + 1` (the Eisenstein generators are invariant).
    pub fn shift_tau(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut binom = BigInt::one();
            for i in 0..=m.tau {
                let mm = Monomial { tau: i, ..*m };
                out.add_term(mm, c * Q::from_integer(binom.clone()));
                binom = binom * BigInt::from(m.tau - i) / BigInt::from(i + 1);
            }
        }
        out
    }

    pub fn is_tau_free(&self) -> bool {
        self.terms.keys().all(|m| m.tau == 0)
    }

    /// Invertible elements are the nonzero multiples of a power of `s`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if m.tau != 0 || m.p != 0 || m.q != 0 || m.r != 0 {
            return None;
        }
        Some(Self::term(c.recip(), Monomial { s: -m.s, ..Default::default() }))
    }

    /// Components `(tau degree, s degree) -> q-series`, known below `order`.
    pub fn substitute_series(&self, order: i64) -> BTreeMap<(u32, i32), QSeries> {
        let t = Exp::from_integer(order);
        let e2 = eisenstein(2, order).unwrap();
        let e4 = eisenstein(4, order).unwrap();
        let e6 = eisenstein(6, order).unwrap();
        let mut out: BTreeMap<(u32, i32), QSeries> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut s = QSeries::constant(c.clone(), t);
            for _ in 0..m.p {
                s = s * &e2;
            }
            for _ in 0..m.q {
                s = s * &e4;
            }
            for _ in 0..m.r {
                s = s * &e6;
            }
            let key = (m.tau, m.s);
            let acc = out.remove(&key).unwrap_or_else(|| QSeries::zero(t));
            out.insert(key, acc + s);
        }
        out.retain(|_, s| !s.is_zero());
        out
    }

    pub fn eval(&self, at: &NumericPoint) -> Complex64 {
        let s = Complex64::new(0.0, 2.0 * std::f64::consts::PI).inv();
        let mut acc = Complex64::zero();
        for (m, c) in &self.terms {
            let cf = c.to_f64().unwrap_or(f64::NAN);
            acc += at.tau.powu(m.tau)
                * at.e2.powu(m.p)
                * at.e4.powu(m.q)
                * at.e6.powu(m.r)
                * s.powi(m.s)
                * cf;
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct T {
            tau: u32,
            #[serde(rename = "E2")]
            p: u32,
            #[serde(rename = "E4")]
            q: u32,
            #[serde(rename = "E6")]
            r: u32,
            s: i32,
            coeff: String,
        }
        let v: Vec<T> = self
            .terms
            .iter()
            .map(|(m, c)| T { tau: m.tau, p: m.p, q: m.q, r: m.r, s: m.s, coeff: rat_to_string(c) })
            .collect();
        serde_json::to_value(v).unwrap()
    }
}

/// Numerical values of the generators at a point of the upper half-plane.
#[derive(Clone, Copy, Debug)]
pub struct NumericPoint {
    pub tau: Complex64,
    pub e2: Complex64,
    pub e4: Complex64,
    pub e6: Complex64,
}

impl NumericPoint {
    pub fn at(tau: Complex64, order: i64) -> Result<Self> {
        Ok(NumericPoint {
            tau,
            e2: eisenstein(2, order)?.eval_numeric(tau)?,
            e4: eisenstein(4, order)?.eval_numeric(tau)?,
            e6: eisenstein(6, order)?.eval_numeric(tau)?,
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("tau", self.tau), ("E2", self.p), ("E4", self.q), ("E6", self.r)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        match self.s {
            0 => {}
            1 => parts.push("s".into()),
            e => parts.push(format!("s^{e}")),
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Display for QuasiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = m.to_string();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Zero for QuasiPoly {
    fn zero() -> Self {
        QuasiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for QuasiPoly {
    fn one() -> Self {
        Self::int(1)
    }
}

impl Add for QuasiPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for QuasiPoly {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Neg for QuasiPoly {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&q(-1))
    }
}

impl Mul for QuasiPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(*mb), ca * cb);
            }
        }
        out
    }
}

impl Scalar for QuasiPoly {
    fn from_rational(r: &Q) -> Self {
        Self::constant(r.clone())
    }
}

// ---------------------------------------------------------------------------
// Matrices

/// Determinant by cofactor expansion over column subsets (no division).
pub fn det_ring<F: Scalar>(m: &Matrix<F>) -> F {
    let n = m.len();
    // memo[mask] = determinant of the minor using the last popcount(mask) rows
    // and the columns in mask
    let mut memo: Vec<Option<F>> = vec![None; 1 << n];
    memo[0] = Some(F::one());
    for mask in 1usize..(1 << n) {
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = F::zero();
        let mut sign_pos = true;
        for c in 0..n {
            if mask & (1 << c) == 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let minor = memo[mask & !(1 << c)].clone().unwrap();
                let term = m[row][c].clone() * minor;
                acc = if sign_pos { acc + term } else { acc - term };
            }
            sign_pos = !sign_pos;
        }
        memo[mask] = Some(acc);
    }
    memo[(1 << n) - 1].take().unwrap()
}

fn minor<F: Scalar>(m: &Matrix<F>, skip_r: usize, skip_c: usize) -> Matrix<F> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_r)
        .map(|(_, row)| {
            row.iter().enumerate().filter(|(j, _)| *j != skip_c).map(|(_, x)| x.clone()).collect()
        })
        .collect()
}

/// Inverse via the adjugate; the determinant must be a unit.
pub fn inverse(m: &QuasiMatrix) -> Result<QuasiMatrix> {
    let n = m.len();
    let d_inv = det_ring(m).unit_inverse().ok_or(Error::NotInvertible)?;
    let mut out = mat_zero::<QuasiPoly>(n, n);
    for i in 0..n {
        for j in 0..n {
            let cof = det_ring(&minor(m, j, i));
            let signed = if (i + j) % 2 == 0 { cof } else { -cof };
            out[i][j] = signed * d_inv.clone();
        }
    }
    Ok(out)
}

/// `exp(t N)` for a nilpotent rational matrix `N`.
pub fn exp_nilpotent(n_mat: &Matrix<Q>, t: &QuasiPoly) -> Result<QuasiMatrix> {
    let size = n_mat.len();
    let lifted: QuasiMatrix =
        n_mat.iter().map(|r| r.iter().map(QuasiPoly::from_rational).collect()).collect();
    let mut power = mat_identity::<QuasiPoly>(size);
    let mut out = mat_identity::<QuasiPoly>(size);
    let mut fact = Q::one();
    for k in 1..=size {
        power = mat_mul(&power, &lifted);
        if power.iter().all(|r| r.iter().all(Zero::is_zero)) {
            return Ok(out);
        }
        fact *= q(k as i64);
        let coeff = t.pow(k as u32).scale(&fact.recip());
        for (orow, prow) in out.iter_mut().zip(&power) {
            for (o, p) in orow.iter_mut().zip(prow) {
                *o = o.clone() + p.clone() * coeff.clone();
            }
        }
    }
    Err(Error::NotNilpotent)
}

pub fn matrix_shift_tau(m: &QuasiMatrix) -> QuasiMatrix {
    m.iter().map(|r| r.iter().map(QuasiPoly::shift_tau).collect()).collect()
}

pub fn matrix_derive(m: &QuasiMatrix) -> QuasiMatrix {
    m.iter().map(|r| r.iter().map(QuasiPoly::derive).collect()).collect()
}

pub fn matrix_serre_d(m: &QuasiMatrix, k: i64) -> QuasiMatrix {
    m.iter().map(|r| r.iter().map(|x| x.serre_d(k)).collect()).collect()
}

pub fn matrix_eval(m: &QuasiMatrix, at: &NumericPoint) -> Vec<Vec<Complex64>> {
    m.iter().map(|r| r.iter().map(|x| x.eval(at)).collect()).collect()
}

pub fn matrix_from_ints(rows: &[&[i64]]) -> QuasiMatrix {
    rows.iter().map(|r| r.iter().map(|&x| QuasiPoly::int(x)).collect()).collect()
}

pub fn matrix_to_string(m: &QuasiMatrix) -> String {
    m.iter()
        .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .join("\n")
}
