//! The certification suites run by `mfal verify`.

mod laws;

use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::alia::{self, alia_table, golden, levi_dimensions, scalar_oracle, sl2_explicit, TABLE_ORBITS};
use crate::error::{Error, Result};
use crate::liealg::{orbit_labels, ChevalleyAlgebra, GradedTriple, LieType, ORBIT_IDS};
use crate::loopext::{self, ratfunc, LoopContext, LoopElement, RatFunc};
use crate::modforms::{self, eta, gamma3, numeric, theta, IdentityCheck};
use crate::qseries::{exp, QSeries};
use crate::ring::{q, JPoly, Scalar, Q};
use num_traits::Zero;
use crate::vvmf::{monomial_count, phi, HilbertSeries, Level};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
#[derive(clap::ValueEnum)]
pub enum Suite {
    Core,
    Theta,
    Gamma,
    Alia,
    Loop,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "core" => Suite::Core,
            "theta" => Suite::Theta,
            "gamma" => Suite::Gamma,
            "alia" => Suite::Alia,
            "loop" => Suite::Loop,
            "all" => Suite::All,
            _ => return Err(Error::InvalidArgument(format!("unknown suite {s:?}"))),
        })
    }
}

/// Parameters shared by every check.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub order: i64,
    pub tol: f64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { order: crate::qseries::DEFAULT_ORDER, tol: 1e-8 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub order: i64,
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{tag} {} [{} ms] {}\n", r.id, r.elapsed_ms, r.detail));
        }
        let passed = self.results.iter().filter(|r| r.status == Status::Pass).count();
        out.push_str(&format!("{passed}/{} checks passed at order {}\n", self.results.len(), self.order));
        out
    }
}

type Outcome = (bool, String);
type CheckFn = Box<dyn Fn(&Settings) -> Result<Outcome> + Send + Sync>;

pub struct Check {
    pub id: String,
    pub suite: Suite,
    run: CheckFn,
}

impl Check {
    fn new(suite: Suite, id: &str, run: impl Fn(&Settings) -> Result<Outcome> + Send + Sync + 'static) -> Self {
        let prefix = match suite {
            Suite::Core => "core",
            Suite::Theta => "theta",
            Suite::Gamma => "gamma",
            Suite::Alia => "alia",
            Suite::Loop => "loop",
            Suite::All => "all",
        };
        Check { id: format!("{prefix}.{id}"), suite, run: Box::new(run) }
    }

    pub fn run(&self, s: &Settings) -> CheckResult {
        let start = Instant::now();
        let (ok, detail) = match (self.run)(s) {
            Ok(o) => o,
            Err(e) => (false, format!("error: {e}")),
        };
        CheckResult {
            id: self.id.clone(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
            elapsed_ms: start.elapsed().as_millis(),
        }
    }
}

fn identities(checks: &[IdentityCheck]) -> Outcome {
    let ok = checks.iter().all(IdentityCheck::holds);
    let detail = checks
        .iter()
        .map(|c| format!("{}: {}", c.name, c.agreement))
        .collect::<Vec<_>>()
        .join("; ");
    (ok, detail)
}

fn max_residual(values: impl IntoIterator<Item = Result<f64>>, tol: f64) -> Result<Outcome> {
    let mut worst = 0.0f64;
    for v in values {
        worst = worst.max(v?);
    }
    Ok((worst < tol, format!("max residual {worst:.3e} (tol {tol:.0e})")))
}

fn ints(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&n| q(n)).collect()
}

fn coeffs(f: &QSeries, from: i64, to: i64) -> Vec<Q> {
    (from..to).map(|n| f.coeff(exp(n, 1)).unwrap_or_default()).collect()
}

fn core_checks() -> Vec<Check> {
    use modforms::eisenstein::*;
    let c = Suite::Core;
    vec![
        Check::new(c, "j_expansion", |s| {
            let j = j_invariant(s.order);
            let got = coeffs(&j, -1, 3);
            let ok = got == ints(&[1, 744, 196884, 21493760]);
            Ok((ok, format!("{} at order {}", j.truncate(exp(3, 1)), s.order)))
        }),
        Check::new(c, "delta_two_routes", |s| {
            Ok(identities(&[IdentityCheck::new(
                "(E4^3 - E6^2)/1728 = q prod (1-q^n)^24",
                &discriminant_eisenstein(s.order),
                &discriminant_product(s.order),
            )]))
        }),
        Check::new(c, "ramanujan", |s| Ok(identities(&ramanujan_checks(s.order)))),
        Check::new(c, "eisenstein_products", |s| Ok(identities(&eisenstein_product_checks(s.order)))),
        Check::new(c, "delta_derivation", |s| {
            let pref = delta_prefactor(s.order);
            let want = ints(&[1, -240, -141444, -8529280, -238758390]);
            let ok_pref = coeffs(&pref, 0, 5) == want;
            let dj = delta_j_check(s.order);
            Ok((ok_pref && dj.holds(), format!(
                "prefactor head [{}] ok={ok_pref}; {}: {}",
                coeffs(&pref, 0, 5).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "),
                dj.name,
                dj.agreement
            )))
        }),
        Check::new(c, "duke_jenkins_leading_terms", |s| {
            let mut bad = Vec::new();
            for k in (-24..=24).step_by(2) {
                let dj = duke_jenkins(k)?;
                let f = duke_jenkins_series(k, s.order.min(16))?;
                let lead = f.leading().map(|(e, c)| (e, c.clone()));
                if lead != Some((exp(dj.ell, 1), q(1))) {
                    bad.push(k);
                }
            }
            Ok((bad.is_empty(), format!("weights -24..24, mismatches {bad:?}")))
        }),
        Check::new(c, "eisenstein_s_numeric", |s| {
            let e4 = eisenstein(4, s.order)?;
            let e6 = eisenstein(6, s.order)?;
            let d = discriminant_product(s.order);
            let mut vals = Vec::new();
            for tau in numeric::sample_points() {
                vals.push(numeric::s_residual(&e4, 4, tau));
                vals.push(numeric::s_residual(&e6, 6, tau));
                vals.push(numeric::s_residual(&d, 12, tau));
                vals.push(numeric::e2_anomaly_residual(s.order, tau));
            }
            max_residual(vals, s.tol)
        }),
        Check::new(c, "qseries_json_roundtrip", |s| {
            let j = j_invariant(s.order);
            let back = QSeries::from_json_str(&j.to_json_string())?;
            Ok((back == j, format!("{} terms", j.num_terms())))
        }),
        Check::new(c, "sl2_triple", |_| {
            let b = sl2_explicit();
            let rel = b.triple_relations();
            let conj = b.conjugation_identities()?;
            let ok = rel.iter().chain(&conj).all(|x| *x)
                && b.ad_a0_holds()
                && b.h_lower_left_is_2y()
                && b.a_minus2_t_check();
            Ok((ok, format!("[h,e],[h,f],[e,f] {rel:?}; conjugation {conj:?}; ad(a0), h21 = 2y, T-check")))
        }),
        Check::new(c, "sl2_a_minus2_s_numeric", |s| {
            let b = sl2_explicit();
            max_residual(numeric::sample_points().map(|t| b.a_minus2_s_residual(t)), s.tol)
        }),
        Check::new(c, "phi_structure", |_| {
            let ok = (0..=4).all(|n| {
                let p = phi(n);
                p.det() == crate::quasimodular::QuasiPoly::int(1) && p.is_sym_power_of_phi1()
            });
            Ok((ok, "det = 1 and Phi_n = Sym^n(Phi_1) for n <= 4".into()))
        }),
        Check::new(c, "phi_t_equivariance", |_| {
            let ok = (0..=4).all(|n| phi(n).t_equivariant());
            Ok((ok, "exact for n <= 4".into()))
        }),
        Check::new(c, "phi_s_equivariance", |s| {
            let mut vals = Vec::new();
            for n in 0..=4 {
                let p = phi(n);
                for tau in numeric::sample_points() {
                    vals.push(p.s_residual(tau, s.order));
                }
            }
            max_residual(vals, s.tol)
        }),
        Check::new(c, "hilbert_full_level", |_| {
            let mut bad = Vec::new();
            for n in 0..=4usize {
                let h = HilbertSeries::vector_valued(n, Level::Full);
                for (k, d) in h.coefficients(-(n as i64), 40) {
                    if d != monomial_count(n, Level::Full, k) {
                        bad.push((n, k));
                    }
                }
            }
            let scalar: Vec<i64> = (0..=6).map(|i| monomial_count(0, Level::Full, 2 * i)).collect();
            let ok = bad.is_empty() && scalar == [1, 0, 1, 1, 1, 1, 2];
            Ok((ok, format!("n <= 4, k <= 40; mismatches {bad:?}; scalar dims {scalar:?}")))
        }),
        Check::new(c, "hilbert_gamma2", |_| {
            let mut bad = Vec::new();
            for n in 0..=4usize {
                let h = HilbertSeries::vector_valued(n, Level::Two);
                for (k, d) in h.coefficients(-(n as i64), 40) {
                    if d != monomial_count(n, Level::Two, k) {
                        bad.push((n, k));
                    }
                }
            }
            Ok((bad.is_empty(), format!("n <= 4, k <= 40; mismatches {bad:?}")))
        }),
    ]
}

fn theta_checks() -> Vec<Check> {
    let t = Suite::Theta;
    vec![
        Check::new(t, "jacobi", |s| Ok(identities(&[theta::jacobi_check(s.order)]))),
        Check::new(t, "discriminant", |s| Ok(identities(&[theta::theta_discriminant_check(s.order)]))),
        Check::new(t, "gamma2_generators", |s| Ok(identities(&theta::gamma2_generator_checks(s.order)))),
        Check::new(t, "lambda", |s| Ok(identities(&theta::lambda_checks(s.order)))),
        Check::new(t, "mu_leading_term", |s| {
            let m = theta::mu(s.order);
            let lead = m.leading().map(|(e, c)| format!("{c} q^{e}")).unwrap_or_default();
            Ok((m.inverse().is_ok(), format!("mu starts {lead}; invertible at the cusp")))
        }),
    ]
}

fn gamma_checks() -> Vec<Check> {
    let g = Suite::Gamma;
    let mut v = vec![
        Check::new(g, "rel3", |s| Ok(identities(&gamma3::rel3_checks(s.order)))),
        Check::new(g, "ferapontov", |s| Ok(identities(&[gamma3::ferapontov_check(s.order)]))),
        Check::new(g, "gamma5_form", |s| {
            let f = eta::gamma5_form(s.order);
            let lead = f.leading().map(|(e, c)| (e, c.clone()));
            let ok = lead == Some((exp(1, 1), q(1))) && eta::gamma5_form_weight() == exp(1, 1);
            Ok((ok, format!(
                "leading {}, weight {}",
                lead.map(|(e, c)| format!("{c} q^{e}")).unwrap_or_default(),
                eta::gamma5_form_weight()
            )))
        }),
    ];
    for level in 2..=5u32 {
        v.push(Check::new(g, &format!("weight_zero_iso.level{level}"), move |s| {
            let checks = alia::weight_zero_iso_check(level, s.order)?;
            let ok = checks.iter().all(|c| c.holds());
            let detail = checks
                .iter()
                .map(|c| format!("{}: {} q^{} invertible={}", c.form, c.leading_coefficient, c.leading_exponent, c.inverse_ok))
                .collect::<Vec<_>>()
                .join("; ");
            Ok((ok, detail))
        }));
    }
    v
}

fn alia_checks() -> Vec<Check> {
    let a = Suite::Alia;
    let mut v = vec![
        Check::new(a, "chevalley_jacobi", |_| {
            let bad: Vec<String> = LieType::ALL
                .iter()
                .filter(|t| !ChevalleyAlgebra::new(**t).jacobi_holds())
                .map(|t| t.to_string())
                .collect();
            Ok((bad.is_empty(), format!("A1 A2 B2 G2; failing {bad:?}")))
        }),
        Check::new(a, "graded_triples", |_| {
            let mut bad = Vec::new();
            for id in ORBIT_IDS {
                let (ty, labels) = orbit_labels(id)?;
                let g = ChevalleyAlgebra::new(ty);
                let t = GradedTriple::new(&g, &labels, false)?;
                let two = q(2);
                let ok = g.bracket(&t.e, &t.f) == t.h
                    && g.bracket(&t.h, &t.e) == t.e.iter().map(|x| x * &two).collect::<Vec<_>>()
                    && g.bracket(&t.h, &t.f) == t.f.iter().map(|x| -(x * &two)).collect::<Vec<_>>();
                if !ok {
                    bad.push(*id);
                }
            }
            Ok((bad.is_empty(), format!("{} orbits; failing {bad:?}", ORBIT_IDS.len())))
        }),
        Check::new(a, "odd_grading_rejected", |_| {
            let g = ChevalleyAlgebra::new(LieType::A2);
            let t = GradedTriple::new(&g, &[1, 1], false)?;
            let r = alia::cocycles(&g, &t);
            Ok((matches!(r, Err(Error::OddGrading(_))), "A2 minimal orbit".into()))
        }),
        Check::new(a, "sl2_barrel", |_| {
            let t = alia_table("A1:principal")?;
            let (h, e, f) = (t.basis_vector(0), t.basis_vector(1), t.basis_vector(2));
            let jj = JPoly::new(ints(&[0, -1728, 1]));
            let z = JPoly::zero;
            let ok = t.bracket(&h, &e) == vec![z(), JPoly::constant(q(2)), z()]
                && t.bracket(&h, &f) == vec![z(), z(), JPoly::constant(q(-2))]
                && t.bracket(&e, &f) == vec![jj, z(), z()];
            Ok((ok, "[h,e] = 2e, [h,f] = -2f, [e,f] = j(j-1728) h".into()))
        }),
        Check::new(a, "contraction", |_| {
            let t = alia_table("A1:principal")?;
            let mut detail = Vec::new();
            let mut ok = true;
            for j in [q(0), q(1728)] {
                let series = t.derived_series_at(&j);
                let solvable = series.last() == Some(&0) && series.len() <= 4;
                let ef = t.specialize(&j)[1][2].iter().all(|c| *c == Q::default());
                ok &= solvable && ef && !t.killing_nondegenerate_at(&j);
                detail.push(format!("j={j}: derived dims {series:?}"));
            }
            ok &= t.killing_nondegenerate_at(&q(5));
            Ok((ok, detail.join("; ")))
        }),
        Check::new(a, "levi_dimensions", |_| {
            let a1 = levi_dimensions("A1:principal")?;
            let b2 = levi_dimensions("B2:subregular")?;
            let ok = (a1.radical, a1.levi) == (1, 0) && b2.levi >= 3;
            Ok((ok, format!("A1 principal {a1:?}; B2 subregular {b2:?}")))
        }),
    ];
    for orbit in TABLE_ORBITS {
        v.push(Check::new(a, &format!("cocycles.{orbit}"), move |_| {
            let t = alia_table(orbit)?;
            let c = &t.cocycles;
            let ok = c.is_symmetric() && c.is_binary() && c.cocycle_condition_holds();
            Ok((ok, format!("{} ordered pairs, symmetric, 0/1-valued, 2-cocycle", c.values.len())))
        }));
        v.push(Check::new(a, &format!("jacobi_qj.{orbit}"), move |_| {
            let t = alia_table(orbit)?;
            let ok = t.is_antisymmetric() && t.jacobi_holds() && t.killing_nondegenerate_at(&q(5));
            Ok((ok, format!("dim {}, exact over Q[j]; nondegenerate at j = 5", t.dim())))
        }));
        v.push(Check::new(a, &format!("scalar_oracle.{orbit}"), move |s| {
            let t = alia_table(orbit)?;
            let r = scalar_oracle(&t, s.order)?;
            Ok((r.holds(), format!("{} grade pairs at order {}", r.grade_pairs.len(), s.order)))
        }));
    }
    for g in golden::GRAPHS {
        v.push(Check::new(a, &format!("golden.{}", g.orbit), move |_| {
            let t = alia_table(g.orbit)?;
            let (d4, d6) = golden::compare(g, &t.cocycles);
            Ok((
                d4.is_empty() && d6.is_empty(),
                format!("{} + {} edges; differences {} + {}", g.w4_edges.len(), g.w6_edges.len(), d4.len(), d6.len()),
            ))
        }));
    }
    v
}

const SAMPLE_SEED: u64 = 0x5eed;

fn sample_check<const N: u32>(set: ratfunc::PoleSet<N>, ty: LieType) -> Result<Outcome> {
    let r = loopext::sampled_cocycle_checks(ty, &set, 100, SAMPLE_SEED);
    Ok((r.holds(), format!("{} triples on {} ({ty}): {r:?}", r.samples, set.name)))
}

fn loop_checks() -> Vec<Check> {
    let l = Suite::Loop;
    vec![
        Check::new(l, "monomial_cocycle.A1", |_| {
            Ok((loopext::monomial_cocycle_check(LieType::A1, 6), "|m|,|n| <= 6".into()))
        }),
        Check::new(l, "monomial_cocycle.A2", |_| {
            Ok((loopext::monomial_cocycle_check(LieType::A2, 6), "|m|,|n| <= 6".into()))
        }),
        Check::new(l, "cocycle_samples.dihedral", |_| sample_check(ratfunc::dihedral(), LieType::A2)),
        Check::new(l, "cocycle_samples.tetrahedral", |_| sample_check(ratfunc::tetrahedral(), LieType::A1)),
        Check::new(l, "cocycle_samples.octahedral", |_| sample_check(ratfunc::octahedral(), LieType::A1)),
        Check::new(l, "cocycle_samples.icosahedral", |_| sample_check(ratfunc::icosahedral(), LieType::A1)),
        Check::new(l, "cocycle_rank", |_| {
            let d = loopext::finite_cocycle_rank(LieType::A1, &ratfunc::dihedral(), 12, SAMPLE_SEED);
            let o = loopext::finite_cocycle_rank(LieType::A1, &ratfunc::octahedral(), 20, SAMPLE_SEED);
            Ok((d == 2 && o == 5, format!("dihedral rank {d} (expect 2), octahedral rank {o} (expect 5)")))
        }),
        Check::new(l, "residues", |_| {
            let set = ratfunc::loop_set();
            let d = ratfunc::dihedral();
            let one = loopext::CycloNumber::<1>::from_rational(&q(1));
            let ok = RatFunc::power(&set, -1).residue(0) == one
                && RatFunc::pole(&d, 1, 2).residue(1) == loopext::CycloNumber::zero();
            Ok((ok, "res(1/t, 0) = 1, res(1/(t-1)^2, 1) = 0".into()))
        }),
        Check::new(l, "onsager_relations", |_| {
            let r = loopext::onsager_relations(10);
            Ok((r.iter().all(|x| *x), format!("indices <= 10: [G,G], [G,A], [A,A], fixed points {r:?}")))
        }),
        Check::new(l, "fixed_point_triple", |_| {
            let r = loopext::fixed_point_check(&loopext::fixed_point_scalar());
            Ok((r.holds(), format!("{r:?}")))
        }),
        Check::new(l, "dolan_grady", |_| {
            let r = loopext::dolan_grady_check()?;
            Ok((r.holds(), format!("{r:?}")))
        }),
        Check::new(l, "evaluation_reps", |_| evaluation_check()),
    ]
}

fn evaluation_check() -> Result<Outcome> {
    use rand::SeedableRng;
    type C = loopext::CycloNumber<4>;
    let set = ratfunc::octahedral();
    let ctx = LoopContext::new(LieType::A1);
    let pts = vec![C::from_rational(&q(2)), C::zeta() + C::from_rational(&q(3))];
    let ev = loopext::EvaluationRep::new(pts, vec![1, 2])?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut ok = true;
    for _ in 0..10 {
        let mut elt = || LoopElement {
            terms: (0..2)
                .map(|b| (vec![q(b), q(1), q(-1 - b)], RatFunc::random(&set, &mut rng, 2, 2)))
                .collect(),
        };
        let (x, y) = (elt(), elt());
        ok &= ev.is_homomorphic_on(&ctx, &x, &y)?;
    }
    let at_pole = loopext::EvaluationRep::new(vec![C::zeta()], vec![1])?;
    let x = LoopElement::pure(vec![q(1), q(0), q(0)], RatFunc::pole(&set, 3, 1));
    let rejects = matches!(at_pole.apply(&x), Err(Error::PoleAtEvaluationPoint));
    Ok((ok && rejects, format!("two points, Sym^1 (x) Sym^2, 10 pairs; pole rejected={rejects}")))
}

/// Every registered check, sorted by id.
pub fn all_checks() -> Vec<Check> {
    let mut v = Vec::new();
    v.extend(core_checks());
    v.extend(theta_checks());
    v.extend(gamma_checks());
    v.extend(alia_checks());
    v.extend(loop_checks());
    v.extend(laws::checks());
    v.sort_by(|a, b| a.id.cmp(&b.id));
    v
}

pub fn run_suite(suite: Suite, settings: &Settings) -> SuiteReport {
    let checks: Vec<Check> =
        all_checks().into_iter().filter(|c| suite == Suite::All || c.suite == suite).collect();
    let mut results: Vec<CheckResult> = checks.par_iter().map(|c| c.run(settings)).collect();
    results.sort_by(|a, b| a.id.cmp(&b.id));
    SuiteReport { suite, order: settings.order, results }
}

/// Parse `RE+IMi`, `IMi` or `i`-style points of the upper half-plane.
pub fn parse_tau(s: &str) -> Result<Complex64> {
    let bad = || Error::InvalidArgument(format!("cannot parse tau {s:?}; expected RE+IMi"));
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let body = t.strip_suffix('i').ok_or_else(bad)?;
    // split before the last sign that is not leading and not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        x => x,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.trim_start_matches('+').parse().map_err(|_| bad())?;
    if im <= 0.0 {
        return Err(Error::InvalidArgument(format!("tau {s:?} is not in the upper half-plane")));
    }
    Ok(Complex64::new(re, im))
}
