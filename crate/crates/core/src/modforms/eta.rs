//! Dedekind eta, eta quotients, Klein forms, and the level-3/4/5 forms built
//! from them.

use num_traits::{One, Zero};

use crate::modforms::eisenstein::euler_product;
use crate::qseries::{Exp, QSeries};
use crate::ring::q;

fn ord(n: i64) -> Exp {
    Exp::from_integer(n)
}

fn ceil(x: Exp) -> i64 {
    x.ceil().to_integer()
}

/// `eta(m tau)^r = q^{m r / 24} prod (1 - q^{m n})^r`, known below `order`.
pub fn eta_power(m: Exp, r: i64, order: i64) -> QSeries {
    let v = m * r / 24;
    let inner = ceil((ord(order) - v) / m).max(1);
    euler_product(inner)
        .pow_int(r)
        .expect("unit power series")
        .rescale_tau(m)
        .expect("positive scale")
        .shift_exponent(v)
        .truncate(ord(order))
}

pub fn dedekind_eta(order: i64) -> QSeries {
    eta_power(ord(1), 1, order)
}

/// Product of `eta(m tau)^r` over the given `(m, r)` pairs.
pub fn eta_quotient(factors: &[(Exp, i64)], order: i64) -> QSeries {
    let total: Exp = factors.iter().map(|(m, r)| *m * *r / 24).sum();
    let mut acc: Option<QSeries> = None;
    for (m, r) in factors {
        // enough precision that the other factors' valuations cannot eat it
        let need = ceil(ord(order) - total + *m * *r / 24) + 1;
        let f = eta_power(*m, *r, need);
        acc = Some(match acc {
            None => f,
            Some(a) => a * f,
        });
    }
    acc.map_or_else(|| QSeries::one(ord(order)), |a| a.truncate(ord(order)))
}

/// Weight of an eta quotient.
pub fn eta_quotient_weight(factors: &[(Exp, i64)]) -> Exp {
    factors.iter().map(|(_, r)| Exp::new(*r, 2)).sum()
}

/// `prod_{k >= 0} (1 - q^{a + k b})` for positive `a`, `b`, known below `order`.
fn pochhammer(a: Exp, b: Exp, order: Exp) -> QSeries {
    let mut acc = QSeries::one(order);
    let mut e = a;
    while e < order {
        acc = acc * QSeries::from_terms([(ord(0), q(1)), (e, q(-1))], order);
        e += b;
    }
    acc
}

/// Klein form `k_{(r1, 0)}` evaluated at `scale * tau`:
/// `q_z^{(r1-1)/2} (q_z; qt)(qt/q_z; qt) / (qt; qt)^2` with `qt = q^scale`,
/// `q_z = q^{scale r1}`. Weight -1.
pub fn klein_form(r1: Exp, scale: Exp, order: i64) -> QSeries {
    assert!(r1 > Exp::zero() && r1 < Exp::one(), "r1 must lie in (0, 1)");
    let lead = scale * r1 * (r1 - 1) / 2;
    let inner = ord(order) - lead + 1;
    let num = pochhammer(scale * r1, scale, inner) * pochhammer(scale * (Exp::one() - r1), scale, inner);
    let den = pochhammer(scale, scale, inner);
    let body = num.div(&(&den * &den)).expect("unit power series");
    body.shift_exponent(lead).truncate(ord(order))
}

/// Weight-one level-5 form `eta(5 tau)^15 k_{1/5}(5 tau)^5 / eta(tau)^3`.
pub fn gamma5_form(order: i64) -> QSeries {
    let pad = order + 12;
    let eta5 = eta_power(ord(5), 15, pad);
    let eta1 = eta_power(ord(1), -3, pad);
    let k = klein_form(Exp::new(1, 5), ord(5), pad);
    (eta5 * eta1 * k.pow_int(5).unwrap()).truncate(ord(order))
}

/// Weight bookkeeping for [`gamma5_form`]: `15/2 - 3/2 - 5`.
pub fn gamma5_form_weight() -> Exp {
    eta_quotient_weight(&[(ord(5), 15), (ord(1), -3)]) + ord(-5)
}

/// `eta(3 tau)^3 / eta(tau)`.
pub fn gamma3_eta_form(order: i64) -> QSeries {
    eta_quotient(&[(ord(3), 3), (ord(1), -1)], order)
}

/// `eta(4 tau)^4 / eta(2 tau)^2`.
pub fn gamma4_eta_form(order: i64) -> QSeries {
    eta_quotient(&[(ord(4), 4), (ord(2), -2)], order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_leading_and_trunc() {
        let e = dedekind_eta(10);
        assert_eq!(e.valuation(), Some(Exp::new(1, 24)));
        assert_eq!(e.trunc(), ord(10));
        assert_eq!(e.coeff(Exp::new(25, 24)), Some(q(-1)));
    }

    #[test]
    fn eta_quotient_valuations() {
        assert_eq!(gamma3_eta_form(20).valuation(), Some(Exp::new(1, 3)));
        assert_eq!(gamma4_eta_form(20).valuation(), Some(Exp::new(1, 2)));
        assert_eq!(gamma3_eta_form(20).trunc(), ord(20));
    }

    #[test]
    fn klein_form_leading_exponent() {
        let k = klein_form(Exp::new(1, 5), ord(5), 10);
        assert_eq!(k.valuation(), Some(Exp::new(-2, 5)));
        assert_eq!(k.leading().unwrap().1, &q(1));
        assert_eq!(k.trunc(), ord(10));
    }

    #[test]
    fn gamma5_form_data() {
        let f = gamma5_form(12);
        assert_eq!(f.valuation(), Some(ord(1)));
        assert_eq!(gamma5_form_weight(), ord(1));
        assert_eq!(f.trunc(), ord(12));
    }
}
