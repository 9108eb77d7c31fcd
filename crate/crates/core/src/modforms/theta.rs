//! Jacobi theta constants in base `q = e^{2 pi i tau}` and the level-2 and
//! level-4 forms built from them.

use crate::modforms::eisenstein::{discriminant_product, eisenstein, j_invariant, IdentityCheck};
use crate::qseries::{Exp, QSeries};
use crate::ring::{q, qf};

fn ord(n: i64) -> Exp {
    Exp::from_integer(n)
}

/// `theta_2 = sum_{n in Z} q^{(2n+1)^2/8}`.
pub fn theta2(order: i64) -> QSeries {
    let mut terms = Vec::new();
    let mut n = 0i64;
    while Exp::new((2 * n + 1) * (2 * n + 1), 8) < ord(order) {
        terms.push((Exp::new((2 * n + 1) * (2 * n + 1), 8), q(2)));
        n += 1;
    }
    QSeries::from_terms(terms, ord(order))
}

fn theta_half_squares(order: i64, alternating: bool) -> QSeries {
    let mut terms = vec![(ord(0), q(1))];
    let mut n = 1i64;
    while Exp::new(n * n, 2) < ord(order) {
        let sign = if alternating && n % 2 == 1 { -2 } else { 2 };
        terms.push((Exp::new(n * n, 2), q(sign)));
        n += 1;
    }
    QSeries::from_terms(terms, ord(order))
}

/// `theta_3 = sum q^{n^2/2}`.
pub fn theta3(order: i64) -> QSeries {
    theta_half_squares(order, false)
}

/// `theta_4 = sum (-1)^n q^{n^2/2}`.
pub fn theta4(order: i64) -> QSeries {
    theta_half_squares(order, true)
}

fn pow4(f: &QSeries) -> QSeries {
    let sq = f * f;
    &sq * &sq
}

/// `theta_3^4 = theta_2^4 + theta_4^4`.
pub fn jacobi_check(order: i64) -> IdentityCheck {
    let lhs = pow4(&theta3(order));
    let rhs = pow4(&theta2(order)) + pow4(&theta4(order));
    IdentityCheck::new("theta3^4 = theta2^4 + theta4^4", &lhs, &rhs)
}

/// `theta_2^8 theta_3^8 theta_4^8 = 256 Delta`.
pub fn theta_discriminant_check(order: i64) -> IdentityCheck {
    let t2 = pow4(&theta2(order));
    let t3 = pow4(&theta3(order));
    let t4 = pow4(&theta4(order));
    let lhs = {
        let p = &t2 * &t3 * &t4;
        &p * &p
    };
    let rhs = discriminant_product(order).scale(&q(256));
    IdentityCheck::new("theta2^8 theta3^8 theta4^8 = 256 Delta", &lhs, &rhs)
}

/// `F2 = 2 E2(2 tau) - E2(tau)`, a weight-2 form for `Gamma_0(2)`.
pub fn f2(order: i64) -> QSeries {
    let e2 = eisenstein(2, order).unwrap();
    let e2_half = eisenstein(2, (order + 1) / 2 + 1).unwrap();
    let doubled = e2_half.rescale_tau(ord(2)).unwrap();
    (doubled.scale(&q(2)) - e2).truncate(ord(order))
}

/// `H2 = F2(tau / 2)`.
pub fn h2(order: i64) -> QSeries {
    f2(2 * order).rescale_tau(Exp::new(1, 2)).unwrap()
}

/// The three fourth powers of theta written in the `F2, H2` basis.
pub fn gamma2_generator_checks(order: i64) -> Vec<IdentityCheck> {
    let f = f2(order);
    let h = h2(order);
    let comb = |a: Exp, b: Exp| {
        f.scale(&qf(*a.numer(), *a.denom())) + h.scale(&qf(*b.numer(), *b.denom()))
    };
    vec![
        IdentityCheck::new(
            "theta2^4 = -2/3 F2 + 2/3 H2",
            &pow4(&theta2(order)),
            &comb(Exp::new(-2, 3), Exp::new(2, 3)),
        ),
        IdentityCheck::new(
            "theta3^4 = 2/3 F2 + 1/3 H2",
            &pow4(&theta3(order)),
            &comb(Exp::new(2, 3), Exp::new(1, 3)),
        ),
        IdentityCheck::new(
            "theta4^4 = 4/3 F2 - 1/3 H2",
            &pow4(&theta4(order)),
            &comb(Exp::new(4, 3), Exp::new(-1, 3)),
        ),
    ]
}

/// Modular lambda `theta_2^4 / theta_3^4`, a Hauptmodul for `Gamma(2)`.
pub fn lambda(order: i64) -> QSeries {
    pow4(&theta2(order)).div(&pow4(&theta3(order))).unwrap()
}

/// `j lambda^2 (lambda - 1)^2 = 256 (lambda^2 - lambda + 1)^3` and
/// `lambda(tau + 1) = lambda / (lambda - 1)`.
pub fn lambda_checks(order: i64) -> Vec<IdentityCheck> {
    let l = lambda(order + 2);
    let one = QSeries::one(l.trunc());
    let lm1 = &l - &one;
    let j = j_invariant(order + 2);
    let lhs = &j * &(&l * &l) * &(&lm1 * &lm1);
    let inner = &l * &l - &l + &one;
    let rhs = (&inner * &inner * &inner).scale(&q(256));
    let shifted = l.shift_tau().unwrap();
    let moebius = l.div(&lm1).unwrap();
    vec![
        IdentityCheck::new("j lambda^2 (lambda-1)^2 = 256 (lambda^2-lambda+1)^3", &lhs, &rhs),
        IdentityCheck::new("lambda(tau+1) = lambda/(lambda-1)", &shifted, &moebius),
        IdentityCheck::new(
            "theta2^4(tau+1) = -theta2^4",
            &pow4(&theta2(order)).shift_tau().unwrap(),
            &-pow4(&theta2(order)),
        ),
    ]
}

/// `theta_4^2 / (theta_2^2 + theta_3^2)`, a Hauptmodul for `Gamma(4)`.
pub fn mu(order: i64) -> QSeries {
    let t2 = theta2(order);
    let t3 = theta3(order);
    let t4 = theta4(order);
    (&t4 * &t4).div(&(&t2 * &t2 + &t3 * &t3)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_leading_terms() {
        let t2 = theta2(10);
        assert_eq!(t2.leading().map(|(e, c)| (e, c.clone())), Some((Exp::new(1, 8), q(2))));
        let t24 = pow4(&t2);
        assert_eq!(t24.leading().map(|(e, c)| (e, c.clone())), Some((Exp::new(1, 2), q(16))));
        assert_eq!(theta3(10).coeff(Exp::new(1, 2)), Some(q(2)));
        assert_eq!(theta4(10).coeff(Exp::new(1, 2)), Some(q(-2)));
        assert_eq!(theta4(10).coeff(ord(2)), Some(q(2)));
    }

    #[test]
    fn f2_h2_coefficients() {
        let f = f2(4);
        assert_eq!(f.coeff(ord(0)), Some(q(1)));
        assert_eq!(f.coeff(ord(1)), Some(q(24)));
        assert_eq!(f.coeff(ord(2)), Some(q(24)));
        let h = h2(4);
        assert_eq!(h.coeff(Exp::new(1, 2)), Some(q(24)));
        assert_eq!(h.coeff(ord(1)), Some(q(24)));
        assert_eq!(h.coeff(Exp::new(3, 2)), Some(q(96)));
        assert_eq!(h.trunc(), ord(4));
    }

    #[test]
    fn identities_hold() {
        assert!(jacobi_check(30).holds());
        assert!(theta_discriminant_check(30).holds());
        assert!(gamma2_generator_checks(30).iter().all(IdentityCheck::holds));
        assert!(lambda_checks(30).iter().all(IdentityCheck::holds));
    }

    #[test]
    fn mu_constant_term() {
        let m = mu(10);
        assert_eq!(m.coeff(ord(0)), Some(q(1)));
        assert_eq!(m.denom(), 4);
    }
}
