use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mfal::alia::cocycle_values;
use mfal::liealg::{ChevalleyAlgebra, LieType};
use mfal::loopext::{ratfunc, CycloNumber, RatFunc};
use mfal::qseries::{exp, QSeries};
use mfal::ring::{q, qf, Field, Q};
use mfal::suite::parse_tau;
use mfal::vvmf::{monomial_count, HilbertSeries, Level};

fn series(coeffs: Vec<(i64, i64)>, start: i64, trunc: i64) -> QSeries {
    QSeries::from_terms(
        coeffs.into_iter().enumerate().map(|(i, (n, d))| (exp(start + i as i64, 1), qf(n, d))),
        exp(trunc, 1),
    )
}

fn arb_series(start: i64, trunc: i64) -> impl Strategy<Value = QSeries> {
    prop::collection::vec((-9i64..9, 1i64..5), 1..12).prop_map(move |c| series(c, start, trunc))
}

fn cyclo<const N: u32>() -> impl Strategy<Value = CycloNumber<N>> {
    prop::collection::vec((-6i64..6, 1i64..4), 1..6)
        .prop_map(|c| CycloNumber::from_coeffs(c.into_iter().map(|(n, d)| qf(n, d)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn qseries_ring_laws(a in arb_series(-1, 40), b in arb_series(0, 42), c in arb_series(1, 38)) {
        prop_assert!(((&a + &b) * &c).agrees(&(&a * &c + &b * &c)));
        prop_assert!((&a * &b).agrees(&(&b * &a)));
        prop_assert!(((&a * &b) * &c).agrees(&(&a * &(&b * &c))));
    }

    #[test]
    fn qseries_inverse(lead in 1i64..7, rest in arb_series(1, 40)) {
        let a = QSeries::constant(q(lead), exp(40, 1)) + rest;
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).agrees(&QSeries::one(exp(40, 1))));
    }

    #[test]
    fn qseries_product_truncation(a in arb_series(-1, 10), b in arb_series(2, 6)) {
        let (va, vb) = (a.valuation(), b.valuation());
        let p = &a * &b;
        if let (Some(va), Some(vb)) = (va, vb) {
            prop_assert_eq!(p.trunc(), std::cmp::min(a.trunc() + vb, b.trunc() + va));
        }
    }

    #[test]
    fn qseries_json_round_trip(a in arb_series(-3, 8)) {
        let back = QSeries::from_json_str(&a.to_json_string()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn cyclotomic_field_axioms(x in cyclo::<5>(), y in cyclo::<5>(), z in cyclo::<5>()) {
        prop_assert_eq!((x.clone() + y.clone()) * z.clone(), x.clone() * z.clone() + y.clone() * z);
        if !x.is_zero() {
            prop_assert!((x.inv().unwrap() * x).is_one());
        }
    }

    #[test]
    fn eighth_roots_in_degree_four(x in cyclo::<8>()) {
        prop_assert!(x.coeffs().len() <= 4);
        let z = CycloNumber::<8>::zeta();
        prop_assert_eq!(z.clone() * z.clone() * z.clone() * z, CycloNumber::<8>::rational(q(-1)));
    }

    #[test]
    fn residue_theorem_octahedral(seed in any::<u64>()) {
        let set = ratfunc::octahedral();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = RatFunc::random(&set, &mut rng, 3, 3);
        let total = f.all_residues().into_iter().fold(CycloNumber::zero(), |s, r| s + r);
        prop_assert!(total.is_zero());
        // exact differentials have no residues
        prop_assert!(f.derivative().all_residues().iter().all(|r| r.is_zero()));
    }

    #[test]
    fn residue_cocycle_is_symmetric_and_binary(ka in -30i64..0, kb in -30i64..0) {
        let ka = 2 * ka;
        let kb = 2 * kb;
        if let (Ok(ab), Ok(ba)) = (cocycle_values(ka, kb), cocycle_values(kb, ka)) {
            prop_assert_eq!(ab, ba);
            prop_assert!(ab.0 <= 1 && ab.1 <= 1);
        }
    }

    #[test]
    fn hilbert_matches_enumeration(n in 0usize..7, k in -6i64..60, two in any::<bool>()) {
        let level = if two { Level::Two } else { Level::Full };
        prop_assert_eq!(HilbertSeries::vector_valued(n, level).coefficient(k), monomial_count(n, level, k));
    }

    #[test]
    fn tau_parses_what_it_prints(re in -3.0f64..3.0, im in 0.01f64..5.0) {
        let text = format!("{re}{}{im}i", if im >= 0.0 { "+" } else { "" });
        prop_assert_eq!(parse_tau(&text).unwrap(), Complex64::new(re, im));
    }
}

#[test]
fn structure_constant_invariants() {
    // for a + b + c = 0: N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b), and N(-a,-b) = -N(a,b),
    // |N(a,b)| = p + 1 where p is the length of the b-string below a
    for ty in LieType::ALL {
        let g = ChevalleyAlgebra::new(ty);
        let roots = g.roots.roots.clone();
        let norm = |r: &[i64]| g.roots.inner(r, r);
        for a in &roots {
            for b in &roots {
                let c: Vec<i64> = a.iter().zip(b).map(|(x, y)| -x - y).collect();
                let n_ab = g.structure_constant(a, b);
                let neg = |r: &[i64]| r.iter().map(|x| -x).collect::<Vec<_>>();
                assert_eq!(g.structure_constant(&neg(a), &neg(b)), -n_ab, "{ty} {a:?} {b:?}");
                assert_eq!(g.structure_constant(b, a), -n_ab);
                if !g.roots.is_root(&c) {
                    assert_eq!(n_ab, 0);
                    continue;
                }
                assert_eq!(n_ab.abs(), g.roots.string_below(a, b) + 1);
                let ratio = |n: i64, r: &[i64]| Q::new(n.into(), norm(r).into());
                let x = ratio(n_ab, &c);
                assert_eq!(x, ratio(g.structure_constant(b, &c), a), "{ty} {a:?} {b:?}");
                assert_eq!(x, ratio(g.structure_constant(&c, a), b), "{ty} {a:?} {b:?}");
            }
        }
    }
}

#[test]
fn rational_points_of_cyclotomic_fields() {
    assert!(CycloNumber::<3>::rational(q(2)).as_rational() == Some(q(2)));
    let w = CycloNumber::<3>::zeta();
    assert_eq!(w.clone() * w.clone() + w + CycloNumber::one(), CycloNumber::zero());
}
