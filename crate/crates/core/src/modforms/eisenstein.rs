//! Level-one forms: Eisenstein series, the discriminant, `j`, the
//! Duke-Jenkins basis, and the derivations acting on them.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::qseries::{Agreement, Exp, QSeries};
use crate::ring::{q, qf, Q};

fn ord(n: i64) -> Exp {
    Exp::from_integer(n)
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Bernoulli number `B_n` (with `B_1 = -1/2`).
pub fn bernoulli(n: u64) -> Q {
    let mut b: Vec<Q> = vec![Q::one()];
    for m in 1..=n {
        let mut acc = Q::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += Q::from_integer(binomial(m + 1, j as u64)) * bj;
        }
        b.push(-acc / Q::from_integer(BigInt::from(m + 1)));
    }
    b.pop().unwrap()
}

/// `sigma_k(n)`, the sum of `d^k` over divisors of `n`.
pub fn divisor_sum(k: u32, n: u64) -> BigInt {
    let mut acc = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            acc += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                acc += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    acc
}

/// Normalised Eisenstein series `E_k` (constant term 1) for even `k >= 2`.
pub fn eisenstein(k: u32, order: i64) -> Result<QSeries> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::Unsupported(format!("Eisenstein series of weight {k}")));
    }
    let factor = -Q::from_integer(BigInt::from(2 * k)) / bernoulli(k as u64);
    let mut coeffs = vec![Q::one()];
    for n in 1..order.max(1) {
        coeffs.push(&factor * Q::from_integer(divisor_sum(k - 1, n as u64)));
    }
    Ok(QSeries::from_coeffs(&coeffs, ord(order)))
}

fn eis(k: u32, order: i64) -> QSeries {
    eisenstein(k, order).expect("even weight")
}

/// `prod_{n>=1} (1 - q^n)` via the pentagonal number theorem.
pub fn euler_product(order: i64) -> QSeries {
    let mut terms = Vec::new();
    let mut k: i64 = 0;
    loop {
        let mut any = false;
        for kk in if k == 0 { vec![0] } else { vec![k, -k] } {
            let e = kk * (3 * kk - 1) / 2;
            if e < order {
                any = true;
                let sign = if kk.rem_euclid(2) == 0 { 1 } else { -1 };
                terms.push((ord(e), q(sign)));
            }
        }
        if !any && k > 0 {
            break;
        }
        k += 1;
    }
    QSeries::from_terms(terms, ord(order))
}

/// `Delta^ell = q^ell prod (1 - q^n)^{24 ell}`, known below `order`.
pub fn delta_power(ell: i64, order: i64) -> QSeries {
    let inner = (order - ell).max(1);
    euler_product(inner)
        .pow_int(24 * ell)
        .expect("unit power series")
        .shift_exponent(ord(ell))
        .truncate(ord(order))
}

/// Discriminant via the product `q prod (1 - q^n)^24`.
pub fn discriminant_product(order: i64) -> QSeries {
    delta_power(1, order)
}

/// Discriminant via `(E4^3 - E6^2) / 1728`.
pub fn discriminant_eisenstein(order: i64) -> QSeries {
    let e4 = eis(4, order);
    let e6 = eis(6, order);
    (&e4 * &e4 * &e4 - &e6 * &e6).scale(&qf(1, 1728))
}

/// Klein's `j = E4^3 / Delta`.
pub fn j_invariant(order: i64) -> QSeries {
    let e4 = eis(4, order + 1);
    (&e4 * &e4 * &e4 * delta_power(-1, order)).truncate(ord(order))
}

/// `j - 1728 = E6^2 / Delta`.
pub fn j_minus_1728(order: i64) -> QSeries {
    let e6 = eis(6, order + 1);
    (&e6 * &e6 * delta_power(-1, order)).truncate(ord(order))
}

/// Exponent data for the Duke-Jenkins form of weight `k`:
/// `F_k = Delta^ell E4^n4 E6^n6` with `k = 12 ell + 4 n4 + 6 n6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DukeJenkins {
    pub weight: i64,
    pub ell: i64,
    pub n4: u32,
    pub n6: u32,
}

/// `(n4, n6)` for an even weight, read off from `k mod 12`.
pub fn residue_exponents(k: i64) -> Result<(u32, u32)> {
    if k.rem_euclid(2) == 1 {
        return Err(Error::OddWeight(k));
    }
    Ok(match k.rem_euclid(12) {
        0 => (0, 0),
        2 => (2, 1),
        4 => (1, 0),
        6 => (0, 1),
        8 => (2, 0),
        10 => (1, 1),
        _ => unreachable!(),
    })
}

pub fn duke_jenkins(k: i64) -> Result<DukeJenkins> {
    let (n4, n6) = residue_exponents(k)?;
    let s = 4 * n4 as i64 + 6 * n6 as i64;
    Ok(DukeJenkins { weight: k, ell: (k - s) / 12, n4, n6 })
}

/// The series of `F_k`, known below `order`.
pub fn duke_jenkins_series(k: i64, order: i64) -> Result<QSeries> {
    let dj = duke_jenkins(k)?;
    let inner = order - dj.ell.min(0) + 1;
    let mut f = delta_power(dj.ell, order);
    if dj.n4 > 0 {
        f = f * eis(4, inner).pow_int(dj.n4 as i64)?;
    }
    if dj.n6 > 0 {
        f = f * eis(6, inner);
    }
    Ok(f.truncate(ord(order)))
}

fn precision_for(f: &QSeries) -> i64 {
    let v = f.valuation().unwrap_or(Exp::zero()).min(Exp::zero());
    (f.trunc() - v).ceil().to_integer() + 1
}

/// Serre derivative `D_k f = q f' - (k/12) E2 f`.
pub fn serre_derivative(k: i64, f: &QSeries) -> QSeries {
    let e2 = eis(2, precision_for(f));
    f.q_derive() - (&e2 * f).scale(&qf(k, 12))
}

/// `q E4 E6 / Delta`, the coefficient of `d/dq` in the weight-zero derivation.
pub fn delta_prefactor(order: i64) -> QSeries {
    let e4 = eis(4, order);
    let e6 = eis(6, order);
    &e4 * &e6 * delta_power(-1, order + 1).shift_exponent(ord(1))
}

/// Weight-zero derivation `delta f = (E4 E6 / Delta) q df/dq`.
pub fn delta_derivation(f: &QSeries) -> QSeries {
    let fp = f.q_derive().shift_exponent(ord(-1));
    let pref = delta_prefactor(precision_for(&fp));
    pref * fp
}

/// One named identity between two series.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: String,
    pub agreement: Agreement,
}

impl IdentityCheck {
    pub fn new(name: &str, lhs: &QSeries, rhs: &QSeries) -> Self {
        IdentityCheck { name: name.to_string(), agreement: lhs.compare(rhs) }
    }

    pub fn holds(&self) -> bool {
        self.agreement.holds()
    }
}

/// Ramanujan's system in Serre-derivative form, plus `D_12 Delta = 0`.
pub fn ramanujan_checks(order: i64) -> Vec<IdentityCheck> {
    let e2 = eis(2, order);
    let e4 = eis(4, order);
    let e6 = eis(6, order);
    let delta = discriminant_product(order);
    vec![
        IdentityCheck::new("D1 E2 = -E4/12", &serre_derivative(1, &e2), &e4.scale(&qf(-1, 12))),
        IdentityCheck::new("D4 E4 = -E6/3", &serre_derivative(4, &e4), &e6.scale(&qf(-1, 3))),
        IdentityCheck::new(
            "D6 E6 = -E4^2/2",
            &serre_derivative(6, &e6),
            &(&e4 * &e4).scale(&qf(-1, 2)),
        ),
        IdentityCheck::new("D12 Delta = 0", &serre_derivative(12, &delta), &QSeries::zero(ord(order))),
    ]
}

/// `E8 = E4^2`, `E10 = E4 E6`, `E14 = E4^2 E6`.
pub fn eisenstein_product_checks(order: i64) -> Vec<IdentityCheck> {
    let e4 = eis(4, order);
    let e6 = eis(6, order);
    vec![
        IdentityCheck::new("E8 = E4^2", &eis(8, order), &(&e4 * &e4)),
        IdentityCheck::new("E10 = E4 E6", &eis(10, order), &(&e4 * &e6)),
        IdentityCheck::new("E14 = E4^2 E6", &eis(14, order), &(&e4 * &e4 * &e6)),
    ]
}

/// `delta j = -j (j - 1728)`.
pub fn delta_j_check(order: i64) -> IdentityCheck {
    let j = j_invariant(order);
    let jm = j_minus_1728(order);
    IdentityCheck::new("delta j = -j(j-1728)", &delta_derivation(&j), &-(&j * &jm))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(f: &QSeries, from: i64, to: i64) -> Vec<Q> {
        (from..to).map(|n| f.coeff(ord(n)).unwrap()).collect()
    }

    fn ints(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&n| q(n)).collect()
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(2), qf(1, 6));
        assert_eq!(bernoulli(4), qf(-1, 30));
        assert_eq!(bernoulli(6), qf(1, 42));
        assert_eq!(bernoulli(12), qf(-691, 2730));
    }

    #[test]
    fn low_eisenstein_coefficients() {
        assert_eq!(coeffs(&eis(2, 6), 0, 6), ints(&[1, -24, -72, -96, -168, -144]));
        assert_eq!(coeffs(&eis(4, 3), 0, 3), ints(&[1, 240, 2160]));
        assert_eq!(coeffs(&eis(6, 3), 0, 3), ints(&[1, -504, -16632]));
        let e10 = &eis(4, 3) * &eis(6, 3);
        assert_eq!(coeffs(&e10, 0, 3), ints(&[1, -264, -135432]));
    }

    #[test]
    fn discriminant_routes_agree() {
        let a = discriminant_product(40);
        let b = discriminant_eisenstein(40);
        assert!(a.agrees(&b));
        assert_eq!(coeffs(&a, 1, 4), ints(&[1, -24, 252]));
    }

    #[test]
    fn j_leading_terms() {
        let j = j_invariant(3);
        assert_eq!(j.coeff(ord(-1)), Some(q(1)));
        assert_eq!(coeffs(&j, 0, 3), ints(&[744, 196884, 21493760]));
        assert_eq!(j.trunc(), ord(3));
    }

    #[test]
    fn duke_jenkins_table() {
        let f2 = duke_jenkins(2).unwrap();
        assert_eq!((f2.ell, f2.n4, f2.n6), (-1, 2, 1));
        let fm2 = duke_jenkins(-2).unwrap();
        assert_eq!((fm2.ell, fm2.n4, fm2.n6), (-1, 1, 1));
        assert_eq!(duke_jenkins(3), Err(Error::OddWeight(3)));
        for k in (-40..=40).step_by(2) {
            let d = duke_jenkins(k).unwrap();
            assert_eq!(12 * d.ell + 4 * d.n4 as i64 + 6 * d.n6 as i64, k);
            let s = duke_jenkins_series(k, 10).unwrap();
            // F_k = q^ell + O(q^{ell+1})
            assert_eq!(s.leading().map(|(e, c)| (e, c.clone())), Some((ord(d.ell), q(1))));
        }
    }

    #[test]
    fn ramanujan_and_products() {
        assert!(ramanujan_checks(40).iter().all(IdentityCheck::holds));
        assert!(eisenstein_product_checks(40).iter().all(IdentityCheck::holds));
    }

    #[test]
    fn prefactor_stream() {
        let p = delta_prefactor(5);
        assert_eq!(coeffs(&p, 0, 5), ints(&[1, -240, -141444, -8529280, -238758390]));
        assert!(delta_j_check(30).holds());
    }
}
