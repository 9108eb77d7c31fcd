use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::alia::{alia_table, AliaTable};
use crate::error::Result;
use crate::ring::{mat_commutator, mat_scale, mat_sub, q, qf, JPoly, Matrix, Scalar, Q};

/// Laurent polynomial in `z` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent {
    terms: BTreeMap<i64, Q>,
}

impl Laurent {
    pub fn monomial(c: Q, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    pub fn z(e: i64) -> Self {
        Self::monomial(Q::one(), e)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).filter(|(_, v)| !v.is_zero()).collect() }
    }

    /// `p(1/z)`.
    pub fn invert_variable(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, v)| (-e, v.clone())).collect() }
    }

    fn add_term(&mut self, e: i64, c: Q) {
        let slot = self.terms.entry(e).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl Zero for Laurent {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Laurent {
    fn one() -> Self {
        Self::z(0)
    }
}

impl Add for Laurent {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for Laurent {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&q(-1))
    }
}

impl Sub for Laurent {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for Laurent {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Laurent::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Scalar for Laurent {
    fn from_rational(r: &Q) -> Self {
        Self::monomial(r.clone(), 0)
    }
}

type LMatrix = Matrix<Laurent>;

fn lmat(rows: [[Laurent; 2]; 2]) -> LMatrix {
    rows.into_iter().map(|r| r.to_vec()).collect()
}

fn zero() -> Laurent {
    Laurent::zero()
}

/// Image of `A_k`.
pub fn phi_a(k: i64) -> LMatrix {
    lmat([[zero(), Laurent::z(k)], [Laurent::z(-k), zero()]])
}

/// Image of `G_m`, any integer `m` (so that `G_{-m} = -G_m`, `G_0 = 0`).
pub fn phi_g(m: i64) -> LMatrix {
    let c = Laurent::z(m) - Laurent::z(-m);
    lmat([[c.clone(), zero()], [zero(), -c]])
}

/// `sigma M(1/z) sigma` with `sigma` the swap matrix.
pub fn involution(m: &LMatrix) -> LMatrix {
    let inv = |x: &Laurent| x.invert_variable();
    lmat([
        [inv(&m[1][1]), inv(&m[1][0])],
        [inv(&m[0][1]), inv(&m[0][0])],
    ])
}

/// The three defining relations for all `|k|, |l| <= bound`, `0 < m, n <= bound`,
/// and that every image is fixed by the involution.
pub fn onsager_relations(bound: i64) -> [bool; 4] {
    let mut ok = [true; 4];
    for m in 1..=bound {
        for n in 1..=bound {
            ok[0] &= mat_commutator(&phi_g(m), &phi_g(n)).iter().flatten().all(Zero::is_zero);
        }
        for k in -bound..=bound {
            let lhs = mat_commutator(&phi_g(m), &phi_a(k));
            let rhs = mat_sub(
                &mat_scale(&phi_a(k + m), &Laurent::from_i64(2)),
                &mat_scale(&phi_a(k - m), &Laurent::from_i64(2)),
            );
            ok[1] &= lhs == rhs;
        }
        ok[3] &= involution(&phi_g(m)) == phi_g(m);
    }
    for k in -bound..=bound {
        for l in -bound..=bound {
            ok[2] &= mat_commutator(&phi_a(k), &phi_a(l)) == phi_g(k - l);
        }
        ok[3] &= involution(&phi_a(k)) == phi_a(k);
    }
    ok
}

/// Hauptmodul `(z^2 + 2 + z^-2) / 4` of the inversion `z -> 1/z`.
pub fn j_hat() -> Laurent {
    (Laurent::z(2) + Laurent::from_i64(2) + Laurent::z(-2)).scale(&qf(1, 4))
}

/// `(h, e, f)` for the fixed-point algebra with the given scalar in front of
/// the nilpotent parts.
pub fn fixed_point_triple(scalar: &Laurent) -> (LMatrix, LMatrix, LMatrix) {
    let c = scalar.scale(&qf(1, 8));
    let one = Laurent::one;
    let h = lmat([[zero(), one()], [one(), zero()]]);
    let e = lmat([[c.clone(), -c.clone()], [c.clone(), -c.clone()]]);
    let f = lmat([[c.clone(), c.clone()], [-c.clone(), -c]]);
    (h, e, f)
}

/// `z^2 - z^-2`, the scalar for which `[e, f] = j(j - 1) h`.
pub fn fixed_point_scalar() -> Laurent {
    Laurent::z(2) - Laurent::z(-2)
}

#[derive(Clone, Debug)]
pub struct FixedPointReport {
    pub he: bool,
    pub hf: bool,
    pub ef_is_j_j_minus_1_h: bool,
    pub fixed_by_involution: bool,
}

impl FixedPointReport {
    pub fn holds(&self) -> bool {
        self.he && self.hf && self.ef_is_j_j_minus_1_h && self.fixed_by_involution
    }
}

pub fn fixed_point_check(scalar: &Laurent) -> FixedPointReport {
    let (h, e, f) = fixed_point_triple(scalar);
    let j = j_hat();
    let jj = j.clone() * (j - Laurent::one());
    FixedPointReport {
        he: mat_commutator(&h, &e) == mat_scale(&e, &Laurent::from_i64(2)),
        hf: mat_commutator(&h, &f) == mat_scale(&f, &Laurent::from_i64(-2)),
        ef_is_j_j_minus_1_h: mat_commutator(&e, &f) == mat_scale(&h, &jj),
        fixed_by_involution: involution(&h) == h && involution(&e) == e && involution(&f) == f,
    }
}

/// The generators `B0 = h`, `B1 = ((2j - 1728) h - 2e + 2f) / 1728` in the
/// weight-zero sl2 table.
pub fn dolan_grady_generators(table: &AliaTable) -> (Vec<JPoly>, Vec<JPoly>) {
    let b0 = table.basis_vector(0);
    let c = qf(1, 1728);
    let b1 = vec![
        JPoly::new(vec![q(-1728), q(2)]).scale(&c),
        JPoly::constant(q(-2) * &c),
        JPoly::constant(q(2) * &c),
    ];
    (b0, b1)
}

#[derive(Clone, Debug)]
pub struct DolanGradyReport {
    pub relation_b1: bool,
    pub relation_b0: bool,
    pub bracket_degree: usize,
}

impl DolanGradyReport {
    pub fn holds(&self) -> bool {
        self.relation_b1 && self.relation_b0 && self.bracket_degree <= 2
    }
}

/// `[x,[x,[x,y]]] = 4 [x,y]` for `(x, y) = (B1, B0)` and `(B0, B1)`.
pub fn dolan_grady_check() -> Result<DolanGradyReport> {
    let t = alia_table("A1:principal")?;
    let (b0, b1) = dolan_grady_generators(&t);
    let rel = |x: &[JPoly], y: &[JPoly]| {
        let xy = t.bracket(x, y);
        let lhs = t.bracket(x, &t.bracket(x, &xy));
        lhs.iter().zip(&xy).all(|(l, r)| *l == r.scale(&q(4)))
    };
    let b10 = t.bracket(&b1, &b0);
    Ok(DolanGradyReport {
        relation_b1: rel(&b1, &b0),
        relation_b0: rel(&b0, &b1),
        bracket_degree: b10.iter().filter_map(|p| p.degree()).max().unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_small_bound() {
        assert_eq!(onsager_relations(4), [true; 4]);
    }

    #[test]
    fn fixed_point_triple_with_squared_scalar() {
        assert!(fixed_point_check(&fixed_point_scalar()).holds());
    }

    #[test]
    fn literal_scalar_gives_quarter_of_j_minus_one() {
        // with (z - 1/z)/8 the bracket [e, f] is (j - 1)/4 h rather than j(j - 1) h
        let literal = Laurent::z(1) - Laurent::z(-1);
        let report = fixed_point_check(&literal);
        assert!(report.he && report.hf && report.fixed_by_involution);
        assert!(!report.ef_is_j_j_minus_1_h);
        let (h, e, f) = fixed_point_triple(&literal);
        let expect = (j_hat() - Laurent::one()).scale(&qf(1, 4));
        assert_eq!(mat_commutator(&e, &f), mat_scale(&h, &expect));
    }

    #[test]
    fn dolan_grady() {
        assert!(dolan_grady_check().unwrap().holds());
    }
}
