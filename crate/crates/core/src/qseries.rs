//! Truncated Puiseux series in `q = e^{2 pi i tau}` with exact rational
//! coefficients and exponents.
//!
//! A series carries a common exponent denominator `D` and a truncation bound
//! `T`: every term with exponent below `T` is known (absent means zero), and
//! nothing is claimed at or above `T`. Products follow the usual valuation
//! rule `T = min(Ta + vb, Tb + va)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{parse_rat, q, rat_to_string, Q};

/// Exponents and truncation bounds are small exact rationals.
pub type Exp = Rational64;

/// Default truncation used by constructors when the caller has no preference.
pub const DEFAULT_ORDER: i64 = 64;

/// Minimum number of shared lattice positions before two series are
/// considered equal rather than merely consistent.
pub const MIN_SHARED_TERMS: u64 = 16;

pub fn exp(n: i64, d: i64) -> Exp {
    Exp::new(n, d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "QSeriesJson", try_from = "QSeriesJson")]
pub struct QSeries {
    denom: i64,
    // key k stands for exponent k / denom; values are never zero
    terms: BTreeMap<i64, Q>,
    trunc: Exp,
}

/// Result of comparing two series on their common range of validity.
#[derive(Clone, Debug, PartialEq)]
pub enum Agreement {
    Agree { below: Exp, positions: u64 },
    Differ { exponent: Exp, left: Q, right: Q },
    Insufficient { positions: u64 },
}

impl Agreement {
    pub fn holds(&self) -> bool {
        matches!(self, Agreement::Agree { .. })
    }
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Agreement::Agree { below, positions } => {
                write!(f, "agree below q^{below} ({positions} positions)")
            }
            Agreement::Differ { exponent, left, right } => {
                write!(f, "differ at q^{exponent}: {left} vs {right}")
            }
            Agreement::Insufficient { positions } => {
                write!(f, "only {positions} shared positions")
            }
        }
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

fn ceil_to_i64(x: Exp) -> i64 {
    x.ceil().to_integer()
}

impl QSeries {
    /// Build from `(exponent, coefficient)` pairs; later duplicates add up.
    pub fn from_terms<I>(terms: I, trunc: Exp) -> Self
    where
        I: IntoIterator<Item = (Exp, Q)>,
    {
        let items: Vec<(Exp, Q)> = terms.into_iter().collect();
        let denom = items.iter().fold(1i64, |d, (e, _)| lcm(d, *e.denom()));
        let mut map: BTreeMap<i64, Q> = BTreeMap::new();
        for (e, c) in items {
            if e >= trunc {
                continue;
            }
            let key = e.numer() * (denom / e.denom());
            *map.entry(key).or_insert_with(Q::zero) += c;
        }
        Self::normalized(denom, map, trunc)
    }

    /// Integer-exponent series `sum c_n q^n` from a coefficient list starting at `q^0`.
    pub fn from_coeffs(coeffs: &[Q], trunc: Exp) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| (Exp::from_integer(n as i64), c.clone())),
            trunc,
        )
    }

    pub fn monomial(c: Q, e: Exp, trunc: Exp) -> Self {
        Self::from_terms([(e, c)], trunc)
    }

    pub fn constant(c: Q, trunc: Exp) -> Self {
        Self::monomial(c, Exp::zero(), trunc)
    }

    pub fn one(trunc: Exp) -> Self {
        Self::constant(Q::one(), trunc)
    }

    pub fn zero(trunc: Exp) -> Self {
        Self::from_terms([], trunc)
    }

    fn normalized(denom: i64, mut terms: BTreeMap<i64, Q>, trunc: Exp) -> Self {
        terms.retain(|_, c| !c.is_zero());
        let g = terms.keys().fold(denom, |g, k| g.gcd(k));
        let (denom, terms) = if g > 1 {
            (denom / g, terms.into_iter().map(|(k, c)| (k / g, c)).collect())
        } else {
            (denom, terms)
        };
        QSeries { denom, terms, trunc }
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn trunc(&self) -> Exp {
        self.trunc
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exp, &Q)> + '_ {
        self.terms.iter().map(move |(k, c)| (Exp::new(*k, self.denom), c))
    }

    /// Coefficient of `q^e`, or `None` when `e` lies at or beyond the truncation.
    pub fn coeff(&self, e: Exp) -> Option<Q> {
        if e >= self.trunc {
            return None;
        }
        let scaled = e * self.denom;
        if !scaled.is_integer() {
            return Some(Q::zero());
        }
        Some(self.terms.get(&scaled.to_integer()).cloned().unwrap_or_else(Q::zero))
    }

    /// Least exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<Exp> {
        self.terms.keys().next().map(|k| Exp::new(*k, self.denom))
    }

    pub fn leading(&self) -> Option<(Exp, &Q)> {
        self.terms.iter().next().map(|(k, c)| (Exp::new(*k, self.denom), c))
    }

    /// Known to vanish on its whole range.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lower the truncation bound (never raises it).
    pub fn truncate(&self, t: Exp) -> Self {
        let t = t.min(self.trunc);
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| Exp::new(**k, self.denom) < t)
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        Self::normalized(self.denom, terms, t)
    }

    fn rekeyed(&self, denom: i64) -> impl Iterator<Item = (i64, &Q)> + '_ {
        let f = denom / self.denom;
        self.terms.iter().map(move |(k, c)| (k * f, c))
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let denom = lcm(self.denom, other.denom);
        let trunc = self.trunc.min(other.trunc);
        let mut terms: BTreeMap<i64, Q> = BTreeMap::new();
        for (k, c) in self.rekeyed(denom) {
            terms.insert(k, c.clone());
        }
        for (k, c) in other.rekeyed(denom) {
            let e = terms.entry(k).or_insert_with(Q::zero);
            if sign > 0 {
                *e += c;
            } else {
                *e -= c;
            }
        }
        terms.retain(|k, _| Exp::new(*k, denom) < trunc);
        Self::normalized(denom, terms, trunc)
    }

    pub fn scale(&self, c: &Q) -> Self {
        let terms = self.terms.iter().map(|(k, v)| (*k, v * c)).collect();
        Self::normalized(self.denom, terms, self.trunc)
    }

    /// Multiply by `q^e` (shifts the truncation too).
    pub fn shift_exponent(&self, e: Exp) -> Self {
        let denom = lcm(self.denom, *e.denom());
        let shift = e.numer() * (denom / e.denom());
        let terms = self.rekeyed(denom).map(|(k, c)| (k + shift, c.clone())).collect();
        Self::normalized(denom, terms, self.trunc + e)
    }

    /// Valuation used by the truncation rule: a series known to vanish has
    /// valuation at least its own truncation.
    fn effective_valuation(&self) -> Exp {
        self.valuation().unwrap_or(self.trunc)
    }

    pub fn times(&self, other: &Self) -> Self {
        let trunc = (self.trunc + other.effective_valuation())
            .min(other.trunc + self.effective_valuation());
        let denom = lcm(self.denom, other.denom);
        let limit = trunc * denom;
        let a: Vec<(i64, &Q)> = self.rekeyed(denom).collect();
        let b: Vec<(i64, &Q)> = other.rekeyed(denom).collect();
        let mut terms: BTreeMap<i64, Q> = BTreeMap::new();
        for (ka, ca) in &a {
            for (kb, cb) in &b {
                let k = ka + kb;
                if Exp::from_integer(k) >= limit {
                    break;
                }
                let prod = *ca * *cb;
                terms
                    .entry(k)
                    .and_modify(|v| *v += &prod)
                    .or_insert(prod);
            }
        }
        Self::normalized(denom, terms, trunc)
    }

    /// Multiplicative inverse; the result is known below `T - 2v`.
    pub fn inverse(&self) -> Result<Self> {
        let Some((v, lead)) = self.leading() else {
            return Err(Error::DivisionByZeroSeries);
        };
        let lead_inv = lead.recip();
        let v_key = *self.terms.keys().next().unwrap();
        // Relative series u = self / (lead q^v), keys relative to the leading one.
        let rel: Vec<(i64, Q)> = self
            .terms
            .iter()
            .skip(1)
            .map(|(k, c)| (k - v_key, c * &lead_inv))
            .collect();
        let rel_trunc = self.trunc - v;
        let step = rel.iter().fold(0i64, |g, (k, _)| g.gcd(k)).max(1);
        let n_pos = ceil_to_i64(rel_trunc * self.denom / step).max(0) as usize;
        let mut w: Vec<Q> = Vec::with_capacity(n_pos);
        for n in 0..n_pos {
            if n == 0 {
                w.push(Q::one());
                continue;
            }
            let mut acc = Q::zero();
            for (k, c) in &rel {
                let m = (k / step) as usize;
                if m > n {
                    break;
                }
                let prev = &w[n - m];
                if !prev.is_zero() {
                    acc -= c * prev;
                }
            }
            w.push(acc);
        }
        let terms = w
            .into_iter()
            .enumerate()
            .map(|(n, c)| (n as i64 * step - v_key, c * &lead_inv))
            .collect();
        Ok(Self::normalized(self.denom, terms, self.trunc - v - v))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.times(&other.inverse()?))
    }

    pub fn pow_int(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.inverse()?.pow_int(-n);
        }
        if n == 0 {
            let rel = self.trunc - self.effective_valuation();
            return Ok(Self::one(rel));
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.times(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        Ok(acc.unwrap())
    }

    /// Substitute `tau -> m tau` for a positive rational `m`.
    pub fn rescale_tau(&self, m: Exp) -> Result<Self> {
        if !m.is_positive() {
            return Err(Error::InvalidArgument(format!("rescale factor {m} must be positive")));
        }
        let denom = self.denom * m.denom();
        let terms = self.terms.iter().map(|(k, c)| (k * m.numer(), c.clone())).collect();
        Ok(Self::normalized(denom, terms, self.trunc * m))
    }

    /// Substitute `tau -> tau + 1`: the coefficient of `q^e` picks up
    /// `e^{2 pi i e}`, which is rational only for half-integral `e`.
    pub fn shift_tau(&self) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let twice = 2 * k;
            if twice % self.denom != 0 {
                return Err(Error::NeedsCyclotomic {
                    exponent: Exp::new(*k, self.denom).to_string(),
                });
            }
            let sign_odd = (twice / self.denom).rem_euclid(2) == 1;
            terms.insert(*k, if sign_odd { -c.clone() } else { c.clone() });
        }
        Ok(Self::normalized(self.denom, terms, self.trunc))
    }

    /// `q d/dq = (2 pi i)^{-1} d/dtau`.
    pub fn q_derive(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (*k, c * Q::new((*k).into(), self.denom.into())))
            .collect();
        Self::normalized(self.denom, terms, self.trunc)
    }

    /// Sum the known terms at a point of the upper half-plane.
    pub fn eval_numeric(&self, tau: Complex64) -> Result<Complex64> {
        if tau.im <= 0.0 {
            return Err(Error::NotConvergent);
        }
        let two_pi_i_tau = Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau;
        let mut acc = Complex64::zero();
        for (e, c) in self.terms() {
            let cf = c.to_f64().unwrap_or(f64::NAN);
            let ef = e.to_f64().unwrap();
            acc += (two_pi_i_tau * ef).exp() * cf;
        }
        Ok(acc)
    }

    /// Compare on the common range of validity.
    pub fn compare(&self, other: &Self) -> Agreement {
        let trunc = self.trunc.min(other.trunc);
        let denom = lcm(self.denom, other.denom);
        let a: BTreeMap<i64, &Q> = self.rekeyed(denom).collect();
        let b: BTreeMap<i64, &Q> = other.rekeyed(denom).collect();
        let zero = Q::zero();
        let mut keys: Vec<i64> = a.keys().chain(b.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        for k in keys {
            let e = Exp::new(k, denom);
            if e >= trunc {
                break;
            }
            let l = a.get(&k).copied().unwrap_or(&zero);
            let r = b.get(&k).copied().unwrap_or(&zero);
            if l != r {
                return Agreement::Differ { exponent: e, left: l.clone(), right: r.clone() };
            }
        }
        let lo = [self.valuation(), other.valuation(), Some(Exp::zero())]
            .into_iter()
            .flatten()
            .min()
            .unwrap();
        let positions = ceil_to_i64((trunc - lo) * denom).max(0) as u64;
        if positions < MIN_SHARED_TERMS {
            Agreement::Insufficient { positions }
        } else {
            Agreement::Agree { below: trunc, positions }
        }
    }

    pub fn agrees(&self, other: &Self) -> bool {
        self.compare(other).holds()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("series serialise")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidArgument(e.to_string()))
    }
}

fn fmt_exponent(e: Exp) -> String {
    if e.is_integer() {
        if e == Exp::one() {
            "q".into()
        } else {
            format!("q^{e}")
        }
    } else {
        format!("q^({e})")
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if e.is_zero() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", fmt_exponent(e))?;
            } else {
                write!(f, "{a} {}", fmt_exponent(e))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({})", fmt_exponent(self.trunc))
    }
}

#[derive(Serialize, Deserialize)]
struct QSeriesJson {
    denom: i64,
    trunc: String,
    terms: Vec<(String, String)>,
}

impl From<QSeries> for QSeriesJson {
    fn from(s: QSeries) -> Self {
        let trunc = format!("{}/{}", s.trunc.numer(), s.trunc.denom());
        let terms = s
            .terms()
            .map(|(e, c)| (format!("{}/{}", e.numer(), e.denom()), rat_to_string(c)))
            .collect();
        QSeriesJson { denom: s.denom, trunc, terms }
    }
}

fn parse_exp(s: &str) -> std::result::Result<Exp, String> {
    let r = parse_rat(s).ok_or_else(|| format!("bad rational {s:?}"))?;
    let n = r.numer().to_i64().ok_or("exponent too large")?;
    let d = r.denom().to_i64().ok_or("exponent too large")?;
    Ok(Exp::new(n, d))
}

impl TryFrom<QSeriesJson> for QSeries {
    type Error = String;
    fn try_from(j: QSeriesJson) -> std::result::Result<Self, String> {
        if j.denom <= 0 {
            return Err("denom must be positive".into());
        }
        let trunc = parse_exp(&j.trunc)?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for (e, c) in &j.terms {
            let e = parse_exp(e)?;
            if (e * j.denom).denom() != &1 {
                return Err(format!("exponent {e} not a multiple of 1/{}", j.denom));
            }
            let c = parse_rat(c).ok_or_else(|| format!("bad coefficient {c:?}"))?;
            terms.push((e, c));
        }
        Ok(QSeries::from_terms(terms, trunc))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&QSeries> for &QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                $body(self, rhs)
            }
        }
        impl $tr<QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                $body(&self, &rhs)
            }
        }
        impl $tr<&QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &QSeries, b: &QSeries| a.combine(b, 1));
forward_binop!(Sub, sub, |a: &QSeries, b: &QSeries| a.combine(b, -1));
forward_binop!(Mul, mul, |a: &QSeries, b: &QSeries| QSeries::times(a, b));

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        self.scale(&q(-1))
    }
}

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        self.scale(&q(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qf;

    fn t(n: i64) -> Exp {
        Exp::from_integer(n)
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_q = QSeries::from_coeffs(&[q(1), q(-1)], t(20));
        let inv = one_minus_q.inverse().unwrap();
        assert_eq!(inv.trunc(), t(20));
        for n in 0..20 {
            assert_eq!(inv.coeff(t(n)), Some(q(1)));
        }
        assert_eq!(inv.coeff(t(20)), None);
    }

    #[test]
    fn inverse_of_shifted_series_loses_two_valuations() {
        let s = QSeries::from_terms([(t(1), q(2)), (t(2), q(1))], t(30));
        let inv = s.inverse().unwrap();
        assert_eq!(inv.trunc(), t(28));
        assert_eq!(inv.valuation(), Some(t(-1)));
        assert_eq!(inv.coeff(t(-1)), Some(qf(1, 2)));
        assert_eq!(inv.coeff(t(0)), Some(qf(-1, 4)));
    }

    #[test]
    fn product_truncation_rule() {
        let a = QSeries::from_terms([(exp(-1, 2), q(1)), (t(3), q(1))], t(10));
        let b = QSeries::from_terms([(exp(1, 3), q(1))], t(5));
        let c = &a * &b;
        // min(10 + 1/3, 5 - 1/2)
        assert_eq!(c.trunc(), exp(9, 2));
        assert_eq!(c.coeff(exp(-1, 6)), Some(q(1)));
        assert_eq!(c.denom(), 6);
    }

    #[test]
    fn denominator_reduces_after_squaring() {
        let s = QSeries::monomial(q(1), exp(1, 2), t(40));
        let sq = &s * &s;
        assert_eq!(sq.denom(), 1);
        assert_eq!(sq.coeff(t(1)), Some(q(1)));
    }

    #[test]
    fn shift_tau_signs_and_error() {
        let s = QSeries::from_terms([(exp(1, 2), q(3)), (t(1), q(5))], t(10));
        let sh = s.shift_tau().unwrap();
        assert_eq!(sh.coeff(exp(1, 2)), Some(q(-3)));
        assert_eq!(sh.coeff(t(1)), Some(q(5)));
        let bad = QSeries::monomial(q(1), exp(1, 3), t(10));
        assert!(matches!(bad.shift_tau(), Err(Error::NeedsCyclotomic { .. })));
    }

    #[test]
    fn division_by_zero_series() {
        let a = QSeries::one(t(10));
        assert_eq!(a.div(&QSeries::zero(t(10))), Err(Error::DivisionByZeroSeries));
    }

    #[test]
    fn eval_requires_upper_half_plane() {
        let a = QSeries::one(t(10));
        assert_eq!(a.eval_numeric(Complex64::new(0.0, -1.0)), Err(Error::NotConvergent));
        assert_eq!(a.eval_numeric(Complex64::new(0.0, 0.0)), Err(Error::NotConvergent));
    }

    #[test]
    fn comparison_needs_enough_positions() {
        let a = QSeries::one(t(8));
        assert!(matches!(a.compare(&a), Agreement::Insufficient { positions: 8 }));
        let b = QSeries::one(t(64));
        assert!(b.agrees(&b));
        let c = &b + &QSeries::monomial(q(1), t(30), t(64));
        assert!(matches!(b.compare(&c), Agreement::Differ { .. }));
    }

    #[test]
    fn json_shape() {
        let s = QSeries::from_terms([(exp(-1, 2), qf(3, 2)), (t(2), q(-7))], t(5));
        let v: serde_json::Value = serde_json::from_str(&s.to_json_string()).unwrap();
        assert_eq!(v["denom"], 2);
        assert_eq!(v["trunc"], "5/1");
        assert_eq!(v["terms"][0][0], "-1/2");
        assert_eq!(v["terms"][0][1], "3/2");
        assert_eq!(QSeries::from_json_str(&s.to_json_string()).unwrap(), s);
    }

    #[test]
    fn display_form() {
        let s = QSeries::from_terms(
            [(t(-1), q(1)), (t(0), q(744)), (t(1), q(-3)), (exp(3, 2), qf(1, 2))],
            t(3),
        );
        assert_eq!(s.to_string(), "q^-1 + 744 - 3 q + 1/2 q^(3/2) + O(q^3)");
    }
}
