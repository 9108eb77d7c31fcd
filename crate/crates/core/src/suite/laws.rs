//! Sampled algebraic laws: ring axioms, derivations, homomorphisms.

use num_complex::Complex64;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Check, Outcome, Suite, SAMPLE_SEED};
use crate::error::Result;
use crate::liealg::{orbit_labels, ChevalleyAlgebra, GradedTriple, LieType, SymRep, ORBIT_IDS};
use crate::loopext::{ratfunc, CycloNumber, RatFunc};
use crate::modforms::eisenstein::{self, delta_derivation, residue_exponents};
use crate::qseries::{exp, QSeries};
use crate::quasimodular::{Monomial, QuasiPoly};
use crate::ring::{mat_commutator, mat_scale, q, qf, Q};
use crate::vvmf::phi;

const SAMPLES: usize = 12;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SAMPLE_SEED)
}

/// Random series with exponents in `(1/denom) Z`, starting at `start / denom`.
fn random_series(rng: &mut ChaCha8Rng, start: i64, denom: i64, trunc: i64) -> QSeries {
    let terms = (0..10).map(|i| (exp(start + i, denom), qf(rng.gen_range(-5..=5), rng.gen_range(1..=3))));
    QSeries::from_terms(terms, exp(trunc, 1))
}

fn random_unit(rng: &mut ChaCha8Rng, trunc: i64) -> QSeries {
    QSeries::constant(q(rng.gen_range(1..=4)), exp(trunc, 1)) + random_series(rng, 1, 1, trunc)
}

fn qseries_laws(_: &super::Settings) -> Result<Outcome> {
    let mut r = rng();
    let mut fails = Vec::new();
    for _ in 0..SAMPLES {
        let a = random_series(&mut r, -1, 2, 48);
        let b = random_series(&mut r, 0, 1, 50);
        let c = random_series(&mut r, 1, 2, 46);
        let u = random_unit(&mut r, 50);
        let d = QSeries::q_derive;
        let checks = [
            ("associativity", ((&a * &b) * &c).agrees(&(&a * &(&b * &c)))),
            ("distributivity", ((&a + &b) * &c).agrees(&(&a * &c + &b * &c))),
            ("div after mul", (&a * &u).div(&u)?.agrees(&a)),
            ("mul after div", (a.div(&u)? * &u).agrees(&a)),
            ("Leibniz", d(&(&a * &b)).agrees(&(d(&a) * &b + &a * &d(&b)))),
            ("shift_tau product", (&a * &c).shift_tau()?.agrees(&(a.shift_tau()? * c.shift_tau()?))),
            ("shift_tau sum", (&a + &c).shift_tau()?.agrees(&(a.shift_tau()? + c.shift_tau()?))),
        ];
        fails.extend(checks.iter().filter(|c| !c.1).map(|c| c.0));
    }
    let tau = Complex64::new(0.0, 1.0);
    let mut worst = 0.0f64;
    for _ in 0..SAMPLES {
        let a = random_series(&mut r, 0, 1, 64);
        let b = random_series(&mut r, 0, 2, 64);
        let lhs = (&a * &b).eval_numeric(tau)?;
        worst = worst.max((lhs - a.eval_numeric(tau)? * b.eval_numeric(tau)?).norm());
    }
    fails.sort_unstable();
    fails.dedup();
    Ok((
        fails.is_empty() && worst < 1e-10,
        format!("{SAMPLES} samples; failing laws {fails:?}; eval of product residual {worst:.2e} at tau = i, truncation 64"),
    ))
}

fn delta_leibniz(s: &super::Settings) -> Result<Outcome> {
    let forms = [
        eisenstein::eisenstein(4, s.order)?,
        eisenstein::eisenstein(6, s.order)?,
        eisenstein::discriminant_product(s.order),
        eisenstein::j_invariant(s.order),
    ];
    let mut ok = true;
    for f in &forms {
        for g in &forms {
            let lhs = delta_derivation(&(f * g));
            ok &= lhs.agrees(&(delta_derivation(f) * g + f * &delta_derivation(g)));
        }
    }
    Ok((ok, format!("delta(fg) = delta(f) g + f delta(g) on E4, E6, Delta, j at order {}", s.order)))
}

/// Residue exponents `(n4, n6)` of `F_k` indexed by `k mod 12`.
const RESIDUE_TABLE: [(i64, (u32, u32)); 6] = [(0, (0, 0)), (2, (2, 1)), (4, (1, 0)), (6, (0, 1)), (8, (2, 0)), (10, (1, 1))];

fn residue_table(_: &super::Settings) -> Result<Outcome> {
    let mut bad = Vec::new();
    for k in (-24i64..=24).step_by(2) {
        let want = RESIDUE_TABLE.iter().find(|(m, _)| *m == k.rem_euclid(12)).unwrap().1;
        if residue_exponents(k)? != want {
            bad.push(k);
        }
    }
    Ok((bad.is_empty(), format!("even k in [-24, 24]; mismatches {bad:?}")))
}

fn random_quasi(rng: &mut ChaCha8Rng) -> QuasiPoly {
    let mut out = QuasiPoly::zero();
    for _ in 0..4 {
        let m = Monomial {
            tau: rng.gen_range(0..3),
            p: rng.gen_range(0..3),
            q: rng.gen_range(0..2),
            r: rng.gen_range(0..2),
            s: rng.gen_range(-1..2),
        };
        out = out + QuasiPoly::term(q(rng.gen_range(-4..=4)), m);
    }
    out
}

fn quasimodular_laws(s: &super::Settings) -> Result<Outcome> {
    let mut r = rng();
    let mut leibniz = true;
    let mut series = true;
    for _ in 0..SAMPLES {
        let (a, b) = (random_quasi(&mut r), random_quasi(&mut r));
        leibniz &= (a.clone() * b.clone()).derive() == a.derive() * b.clone() + a.clone() * b.derive();
        let mut free = QuasiPoly::zero();
        for (m, c) in a.terms() {
            if m.tau == 0 {
                free = free + QuasiPoly::term(c.clone(), *m);
            }
        }
        let lhs = free.derive().substitute_series(s.order);
        let rhs = free.substitute_series(s.order);
        let rhs: Vec<_> = rhs.into_iter().map(|(k, v)| (k, v.q_derive())).filter(|(_, v)| !v.is_zero()).collect();
        series &= lhs.len() == rhs.len()
            && lhs.iter().zip(&rhs).all(|((k1, v1), (k2, v2))| k1 == k2 && v1.agrees(v2));
    }
    Ok((leibniz && series, format!("{SAMPLES} samples: Leibniz {leibniz}, D matches q d/dq at order {}: {series}", s.order)))
}

fn lie_laws(_: &super::Settings) -> Result<Outcome> {
    let mut grading = true;
    for id in ORBIT_IDS {
        let (ty, labels) = orbit_labels(id)?;
        let g = ChevalleyAlgebra::new(ty);
        let t = GradedTriple::new(&g, &labels, false)?;
        for a in &g.roots.roots {
            for b in &g.roots.roots {
                let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if g.roots.is_root(&sum) {
                    grading &= t.grade(&sum) == t.grade(a) + t.grade(b);
                }
            }
        }
    }
    let symrep = (0..=8).all(|n| {
        let r = SymRep::new(n);
        mat_commutator(&r.h, &r.e) == mat_scale(&r.e, &q(2))
            && mat_commutator(&r.h, &r.f) == mat_scale(&r.f, &q(-2))
            && mat_commutator(&r.e, &r.f) == r.h
    });
    let mut r = rng();
    let mut killing = true;
    for ty in LieType::ALL {
        let g = ChevalleyAlgebra::new(ty);
        for _ in 0..4 {
            let mut v = || -> Vec<Q> { (0..g.dim()).map(|_| q(r.gen_range(-3..=3))).collect() };
            let (x, y, z) = (v(), v(), v());
            killing &= g.killing(&g.bracket(&x, &y), &z) == g.killing(&x, &g.bracket(&y, &z));
        }
    }
    Ok((
        grading && symrep && killing,
        format!("grading additive {grading}; Sym^n relations n <= 8 {symrep}; Killing invariant {killing}"),
    ))
}

fn phi_determinant(_: &super::Settings) -> Result<Outcome> {
    let ok = (0..=6).all(|n| phi(n).det() == QuasiPoly::int(1));
    Ok((ok, "det Phi_n = 1 for n <= 6".into()))
}

fn residue_linearity(_: &super::Settings) -> Result<Outcome> {
    let set = ratfunc::icosahedral();
    let mut r = rng();
    let mut ok = true;
    for _ in 0..SAMPLES {
        let f = RatFunc::random(&set, &mut r, 2, 2);
        let g = RatFunc::random(&set, &mut r, 2, 2);
        let (a, b) = (CycloNumber::<5>::random_small(&mut r, 3), CycloNumber::<5>::random_small(&mut r, 3));
        let combo = f.scale(&a).add(&g.scale(&b));
        for i in 0..set.len() {
            ok &= combo.residue(i) == a.clone() * f.residue(i) + b.clone() * g.residue(i);
            ok &= f.derivative().residue(i).is_zero();
        }
    }
    Ok((ok, format!("{SAMPLES} pairs on the icosahedral set: linearity and res(f') = 0")))
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check::new(Suite::Core, "qseries_laws", qseries_laws),
        Check::new(Suite::Core, "delta_leibniz", delta_leibniz),
        Check::new(Suite::Core, "duke_jenkins_residue_table", residue_table),
        Check::new(Suite::Core, "quasimodular_laws", quasimodular_laws),
        Check::new(Suite::Core, "phi_determinant", phi_determinant),
        Check::new(Suite::Alia, "lie_laws", lie_laws),
        Check::new(Suite::Loop, "residue_linearity", residue_linearity),
    ]
}
