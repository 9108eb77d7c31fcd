//! Level-3 generators from the hexagonal lattice and the identities they
//! satisfy.

use crate::modforms::eisenstein::{eisenstein, IdentityCheck};
use crate::qseries::{Exp, QSeries};
use crate::ring::q;

fn ord(n: i64) -> Exp {
    Exp::from_integer(n)
}

fn box_bound(order: i64) -> i64 {
    (2.0 * (order.max(1) as f64).sqrt()).ceil() as i64 + 2
}

/// `phi_1 = sum_{x,y} q^{x^2 - xy + y^2}`.
pub fn phi1(order: i64) -> QSeries {
    let b = box_bound(order);
    let mut terms = Vec::new();
    for x in -b..=b {
        for y in -b..=b {
            let e = x * x - x * y + y * y;
            if e < order {
                terms.push((ord(e), q(1)));
            }
        }
    }
    QSeries::from_terms(terms, ord(order))
}

/// `phi_2 = q^{1/3} sum_{x,y} q^{x^2 - xy + y^2 + x - y}`.
pub fn phi2(order: i64) -> QSeries {
    let b = box_bound(order);
    let mut terms = Vec::new();
    for x in -b..=b {
        for y in -b..=b {
            let e = ord(x * x - x * y + y * y + x - y) + Exp::new(1, 3);
            if e < ord(order) {
                terms.push((e, q(1)));
            }
        }
    }
    QSeries::from_terms(terms, ord(order))
}

/// `E4 = u^4 + 8 u v^3` and `E6 = u^6 - 20 u^3 v^3 - 8 v^6` with
/// `u = phi_1`, `v = phi_2`.
pub fn rel3_checks(order: i64) -> Vec<IdentityCheck> {
    let u = phi1(order);
    let v = phi2(order);
    let u3 = &u * &u * &u;
    let v3 = &v * &v * &v;
    let e4 = &u3 * &u + (&u * &v3).scale(&q(8));
    let e6 = &u3 * &u3 - (&u3 * &v3).scale(&q(20)) - (&v3 * &v3).scale(&q(8));
    vec![
        IdentityCheck::new("E4 = phi1^4 + 8 phi1 phi2^3", &eisenstein(4, order).unwrap(), &e4),
        IdentityCheck::new(
            "E6 = phi1^6 - 20 phi1^3 phi2^3 - 8 phi2^6",
            &eisenstein(6, order).unwrap(),
            &e6,
        ),
    ]
}

/// The six monomials of the fourth-order ODE satisfied by `phi_1`, with
/// derivatives taken as `q d/dq`.
pub fn ferapontov_terms(order: i64) -> Vec<QSeries> {
    let g = phi1(order);
    let g1 = g.q_derive();
    let g2 = g1.q_derive();
    let g3 = g2.q_derive();
    let g4 = g3.q_derive();
    let gg = &g * &g;
    vec![
        &g4 * &(&gg * &g2),
        (&g4 * &(&g * &(&g1 * &g1))).scale(&q(-2)),
        (&(&g1 * &g1) * &(&g2 * &g2)).scale(&q(-9)),
        (&(&g * &g1) * &(&g2 * &g3)).scale(&q(2)),
        (&(&g1 * &g1) * &(&g1 * &g3)).scale(&q(8)),
        -(&gg * &(&g3 * &g3)),
    ]
}

pub fn ferapontov_check(order: i64) -> IdentityCheck {
    let terms = ferapontov_terms(order);
    let total = terms.iter().skip(1).fold(terms[0].clone(), |a, t| a + t);
    IdentityCheck::new("Ferapontov ODE on phi1", &total, &QSeries::zero(ord(order)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_leading_coefficients() {
        let p1 = phi1(5);
        let c: Vec<_> = (0..5).map(|n| p1.coeff(ord(n)).unwrap()).collect();
        assert_eq!(c, vec![q(1), q(6), q(0), q(6), q(6)]);
        let p2 = phi2(5);
        assert_eq!(p2.leading().map(|(e, c)| (e, c.clone())), Some((Exp::new(1, 3), q(3))));
    }

    #[test]
    fn rel3_and_ode() {
        assert!(rel3_checks(30).iter().all(IdentityCheck::holds));
        assert!(ferapontov_check(30).holds());
        assert!(ferapontov_terms(30).iter().all(|t| !t.is_zero()));
    }
}
