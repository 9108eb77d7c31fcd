use num_traits::Zero;

use crate::error::{Error, Result};
use crate::liealg::{orbit_labels, ChevalleyAlgebra, GradedTriple};
use crate::modforms::eta::{gamma3_eta_form, gamma4_eta_form, gamma5_form};
use crate::modforms::theta::{theta2, theta3, theta4};
use crate::qseries::{Exp, QSeries};
use crate::ring::{rank, Q};
use crate::vvmf::{HilbertSeries, Level};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeviDimensions {
    pub radical: usize,
    pub levi: usize,
}

/// Dimensions of the radical and a Levi factor of the holomorphic
/// automorphic Lie algebra for the full modular group, from the grading.
pub fn levi_dimensions(orbit: &str) -> Result<LeviDimensions> {
    let (ty, labels) = orbit_labels(orbit)?;
    let g = ChevalleyAlgebra::new(ty);
    let t = GradedTriple::new(&g, &labels, true)?;
    let grade0: Vec<usize> = (0..g.dim())
        .filter(|&i| g.basis_root(i).is_none_or(|r| t.grade(r) == 0))
        .collect();
    let basis = |i: usize| g.basis_vector::<Q>(i);

    // centre of g0: kernel of x -> ([x, b])_b on g0
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for &b in &grade0 {
        let images: Vec<Vec<Q>> = grade0.iter().map(|&x| g.bracket(&basis(x), &basis(b))).collect();
        for k in 0..g.dim() {
            rows.push(images.iter().map(|v| v[k].clone()).collect());
        }
    }
    let centre = grade0.len() - rank(&rows);

    let mut derived: Vec<Vec<Q>> = Vec::new();
    for &a in &grade0 {
        for &b in &grade0 {
            let v = g.bracket(&basis(a), &basis(b));
            if v.iter().any(|x| !x.is_zero()) {
                derived.push(v);
            }
        }
    }
    let levi = rank(&derived);

    let forms = HilbertSeries::modular_forms(Level::Full);
    let negative: usize = g
        .roots
        .roots
        .iter()
        .filter_map(|r| {
            let k = t.grade(r);
            (k < 0).then(|| forms.coefficient(-k) as usize)
        })
        .sum();
    Ok(LeviDimensions { radical: centre + negative, levi })
}

/// Local invertibility at the cusp of the nonvanishing form used for the
/// weight-zero isomorphism of a principal congruence subgroup.
#[derive(Clone, Debug)]
pub struct WeightZeroCheck {
    pub level: u32,
    pub form: &'static str,
    pub leading_exponent: Exp,
    pub leading_coefficient: Q,
    pub inverse_ok: bool,
    /// Generators of the weight-zero function ring, where recorded.
    pub function_ring: Option<&'static str>,
}

impl WeightZeroCheck {
    pub fn holds(&self) -> bool {
        self.inverse_ok && !self.leading_coefficient.is_zero()
    }
}

pub fn weight_zero_iso_check(level: u32, order: i64) -> Result<Vec<WeightZeroCheck>> {
    let forms: Vec<(&'static str, QSeries)> = match level {
        2 => vec![
            ("theta2^4", theta2(order).pow_int(4)?),
            ("theta3^4", theta3(order).pow_int(4)?),
            ("theta4^4", theta4(order).pow_int(4)?),
        ],
        3 => vec![("eta(3t)^3/eta(t)", gamma3_eta_form(order))],
        4 => vec![("eta(4t)^4/eta(2t)^2", gamma4_eta_form(order))],
        5 => vec![("f_gamma5", gamma5_form(order))],
        _ => return Err(Error::InvalidArgument(format!("no weight-zero check for level {level}"))),
    };
    let function_ring = match level {
        2 => Some("Q[lambda, 1/lambda, 1/(lambda-1)]"),
        4 => Some("Q(i)[mu, 1/mu, 1/(mu-1), 1/(mu+1), 1/(mu-i), 1/(mu+i)]"),
        _ => None,
    };
    forms
        .into_iter()
        .map(|(name, f)| {
            let (e, c) = f.leading().ok_or(Error::NotInvertible)?;
            let (e, c) = (e, c.clone());
            let inv = f.inverse()?;
            let one = f.times(&inv);
            let inverse_ok = one.agrees(&QSeries::one(one.trunc()));
            Ok(WeightZeroCheck {
                level,
                form: name,
                leading_exponent: e,
                leading_coefficient: c,
                inverse_ok,
                function_ring,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_levi() {
        assert_eq!(levi_dimensions("A1:principal").unwrap(), LeviDimensions { radical: 1, levi: 0 });
    }

    #[test]
    fn b2_subregular_has_sl2_in_degree_zero() {
        assert!(levi_dimensions("B2:subregular").unwrap().levi >= 3);
    }

    #[test]
    fn gamma3_leading_term() {
        let c = &weight_zero_iso_check(3, 24).unwrap()[0];
        assert_eq!(c.leading_exponent, Exp::new(1, 3));
        assert_eq!(c.leading_coefficient, crate::ring::q(1));
        assert!(c.holds());
    }
}
