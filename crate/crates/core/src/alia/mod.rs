//! Weight-zero automorphic Lie algebras: bracket tables over `Q[j]` built from
//! root 2-cocycles, the explicit sl2 case, and structure for other groups.

pub mod golden;
mod levi;
mod sl2;

pub use levi::{levi_dimensions, weight_zero_iso_check, LeviDimensions, WeightZeroCheck};
pub use sl2::{sl2_explicit, Sl2Bundle};

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::liealg::{add_roots, orbit_labels, ChevalleyAlgebra, GradedTriple, LieType, Root};
use crate::modforms::eisenstein::{
    duke_jenkins_series, j_invariant, j_minus_1728, residue_exponents,
};
use crate::qseries::QSeries;
use crate::ring::{q, rank, JPoly, Matrix, Q};

/// `j^w4 (j - 1728)^w6`.
pub fn j_factor(w4: u32, w6: u32) -> JPoly {
    JPoly::x().pow(w4) * JPoly::linear_root(q(1728)).pow(w6)
}

/// The exponent pair for two grades, before integrality is checked:
/// numerators of `n4(-a) - n4(-a-b) + n4(-b)` and the same for `n6`.
fn coboundary(ka: i64, kb: i64) -> Result<(i64, i64)> {
    let (a4, a6) = residue_exponents(-ka)?;
    let (s4, s6) = residue_exponents(-ka - kb)?;
    let (b4, b6) = residue_exponents(-kb)?;
    Ok((
        a4 as i64 - s4 as i64 + b4 as i64,
        a6 as i64 - s6 as i64 + b6 as i64,
    ))
}

/// `(w4, w6)` for a pair of even grades.
pub fn cocycle_values(ka: i64, kb: i64) -> Result<(u32, u32)> {
    let (d4, d6) = coboundary(ka, kb)?;
    if d4.rem_euclid(3) != 0 || d6.rem_euclid(2) != 0 {
        return Err(Error::Unsupported(format!("non-integral cocycle at grades ({ka}, {kb})")));
    }
    Ok(((d4 / 3) as u32, (d6 / 2) as u32))
}

/// The pair of root 2-cocycles `(w4, w6)` attached to a grading, on ordered
/// root pairs whose sum is a root or zero.
#[derive(Clone, Debug)]
pub struct CocyclePair {
    pub values: BTreeMap<(Root, Root), (u32, u32)>,
}

impl CocyclePair {
    pub fn get(&self, a: &[i64], b: &[i64]) -> Option<(u32, u32)> {
        self.values.get(&(a.to_vec(), b.to_vec())).copied()
    }

    pub fn is_symmetric(&self) -> bool {
        self.values.iter().all(|((a, b), v)| self.get(b, a) == Some(*v))
    }

    pub fn is_binary(&self) -> bool {
        self.values.values().all(|(a, b)| *a <= 1 && *b <= 1)
    }

    /// `w(a,b) + w(a+b,c) = w(b,c) + w(a,b+c)` wherever every term is defined.
    pub fn cocycle_condition_holds(&self) -> bool {
        let roots: Vec<&Root> = {
            let mut v: Vec<&Root> = self.values.keys().map(|(a, _)| a).collect();
            v.dedup();
            v
        };
        for a in &roots {
            for b in &roots {
                for c in &roots {
                    let ab = add_roots(a, b);
                    let bc = add_roots(b, c);
                    let terms = (
                        self.get(a, b),
                        self.get(&ab, c),
                        self.get(b, c),
                        self.get(a, &bc),
                    );
                    if let (Some(x), Some(y), Some(z), Some(w)) = terms {
                        if x.0 + y.0 != z.0 + w.0 || x.1 + y.1 != z.1 + w.1 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Unordered pairs `{a, b}` with `w4 = 1` (first) and `w6 = 1` (second).
    pub fn edge_sets(&self) -> (Vec<(Root, Root)>, Vec<(Root, Root)>) {
        let mut w4 = Vec::new();
        let mut w6 = Vec::new();
        for ((a, b), (x, y)) in &self.values {
            if a > b {
                continue;
            }
            if *x == 1 {
                w4.push((a.clone(), b.clone()));
            }
            if *y == 1 {
                w6.push((a.clone(), b.clone()));
            }
        }
        (w4, w6)
    }
}

pub fn cocycles(g: &ChevalleyAlgebra, triple: &GradedTriple) -> Result<CocyclePair> {
    for r in &g.roots.positive {
        let k = triple.grade(r);
        if k % 2 != 0 {
            return Err(Error::OddGrading(k));
        }
    }
    let mut values = BTreeMap::new();
    for a in &g.roots.roots {
        for b in &g.roots.roots {
            let s = add_roots(a, b);
            if s.iter().all(|x| *x == 0) || g.roots.is_root(&s) {
                values.insert((a.clone(), b.clone()), cocycle_values(triple.grade(a), triple.grade(b))?);
            }
        }
    }
    Ok(CocyclePair { values })
}

/// One nonzero bracket of basis elements, for display.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BracketEntry {
    pub x: String,
    pub y: String,
    pub coeff: Coefficient,
    pub target: String,
}

/// `eps * j^w4 (j - 1728)^w6`.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct Coefficient {
    pub eps: i64,
    pub w4: u32,
    pub w6: u32,
}

impl std::fmt::Display for Coefficient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.eps)?;
        match self.w4 {
            0 => {}
            1 => write!(f, " j")?,
            n => write!(f, " j^{n}")?,
        }
        match self.w6 {
            0 => {}
            1 => write!(f, " (j - 1728)")?,
            n => write!(f, " (j - 1728)^{n}")?,
        }
        Ok(())
    }
}

/// Bracket table of the weight-zero algebra as a free `Q[j]`-module on
/// `h_i` and `a_alpha`, in the basis order of the underlying Chevalley algebra.
#[derive(Clone, Debug)]
pub struct AliaTable {
    pub orbit: String,
    pub algebra: ChevalleyAlgebra,
    pub triple: GradedTriple,
    pub cocycles: CocyclePair,
    table: Vec<Vec<Vec<(usize, JPoly)>>>,
}

pub fn alia_table(orbit: &str) -> Result<AliaTable> {
    let (ty, labels) = orbit_labels(orbit)?;
    let g = ChevalleyAlgebra::new(ty);
    let triple = GradedTriple::new(&g, &labels, true)?;
    AliaTable::new(orbit, g, triple)
}

impl AliaTable {
    pub fn new(orbit: &str, algebra: ChevalleyAlgebra, triple: GradedTriple) -> Result<Self> {
        let cocycles = cocycles(&algebra, &triple)?;
        let n = algebra.dim();
        let mut table = vec![vec![Vec::new(); n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let factor = match (algebra.basis_root(i), algebra.basis_root(j)) {
                    (Some(a), Some(b)) => match cocycles.get(a, b) {
                        Some((w4, w6)) => j_factor(w4, w6),
                        None => JPoly::one(),
                    },
                    _ => JPoly::one(),
                };
                *cell = algebra
                    .bracket_basis(i, j)
                    .into_iter()
                    .map(|(k, c)| (k, factor.scale(&q(c))))
                    .collect();
            }
        }
        Ok(AliaTable { orbit: orbit.to_string(), algebra, triple, cocycles, table })
    }

    pub fn ty(&self) -> LieType {
        self.algebra.ty()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `h, e, f` for sl2, otherwise `h1, h2, a(1,0), ..`.
    pub fn basis_label(&self, i: usize) -> String {
        if self.ty() == LieType::A1 {
            return ["h", "e", "f"][i].to_string();
        }
        match self.algebra.basis_root(i) {
            None => format!("h{}", i + 1),
            Some(r) => {
                format!("a({})", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            }
        }
    }

    pub fn basis_labels(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.basis_label(i)).collect()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, JPoly)] {
        &self.table[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<JPoly> {
        let mut v = vec![JPoly::zero(); self.dim()];
        v[i] = JPoly::one();
        v
    }

    pub fn bracket(&self, x: &[JPoly], y: &[JPoly]) -> Vec<JPoly> {
        let mut out = vec![JPoly::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi.clone() * yj.clone();
                for (k, c) in &self.table[i][j] {
                    out[*k] = out[*k].clone() + xy.clone() * c.clone();
                }
            }
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let a = self.bracket(&self.basis_vector(i), &self.basis_vector(j));
                let b = self.bracket(&self.basis_vector(j), &self.basis_vector(i));
                a.iter().zip(&b).all(|(x, y)| (x.clone() + y.clone()).is_zero())
            })
        })
    }

    /// Jacobi identity on every ordered triple of basis elements, exactly in `Q[j]`.
    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim();
        let basis: Vec<Vec<JPoly>> = (0..n).map(|i| self.basis_vector(i)).collect();
        for a in 0..n {
            for b in 0..n {
                let ab = self.bracket(&basis[a], &basis[b]);
                for c in 0..n {
                    let t1 = self.bracket(&ab, &basis[c]);
                    let t2 = self.bracket(&self.bracket(&basis[b], &basis[c]), &basis[a]);
                    let t3 = self.bracket(&self.bracket(&basis[c], &basis[a]), &basis[b]);
                    let ok = t1
                        .into_iter()
                        .zip(t2)
                        .zip(t3)
                        .all(|((x, y), z)| (x + y + z).is_zero());
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Structure constants at a fixed value of `j`: `consts[i][j]` is `[b_i, b_j]`.
    pub fn specialize(&self, j: &Q) -> Vec<Vec<Vec<Q>>> {
        let n = self.dim();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut v = vec![Q::zero(); n];
                        for (k, c) in &self.table[a][b] {
                            v[*k] = c.eval(j);
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    }

    /// Killing form of the specialized algebra.
    pub fn killing_at(&self, j: &Q) -> Matrix<Q> {
        let consts = self.specialize(j);
        let n = self.dim();
        // ad(b_a)[k][c] = consts[a][c][k]
        let ad = |a: usize| -> Matrix<Q> {
            (0..n).map(|k| (0..n).map(|c| consts[a][c][k].clone()).collect()).collect()
        };
        let ads: Vec<Matrix<Q>> = (0..n).map(ad).collect();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut t = Q::zero();
                        for x in 0..n {
                            for y in 0..n {
                                t += &ads[a][x][y] * &ads[b][y][x];
                            }
                        }
                        t
                    })
                    .collect()
            })
            .collect()
    }

    pub fn killing_nondegenerate_at(&self, j: &Q) -> bool {
        rank(&self.killing_at(j)) == self.dim()
    }

    /// Dimensions of the derived series of the specialized algebra, starting
    /// with the full algebra and stopping when it stabilizes.
    pub fn derived_series_at(&self, j: &Q) -> Vec<usize> {
        let consts = self.specialize(j);
        let n = self.dim();
        let bracket = |x: &[Q], y: &[Q]| -> Vec<Q> {
            let mut out = vec![Q::zero(); n];
            for (a, xa) in x.iter().enumerate() {
                if xa.is_zero() {
                    continue;
                }
                for (b, yb) in y.iter().enumerate() {
                    if yb.is_zero() {
                        continue;
                    }
                    for (k, c) in consts[a][b].iter().enumerate() {
                        out[k] += xa * yb * c;
                    }
                }
            }
            out
        };
        let mut span: Vec<Vec<Q>> =
            (0..n).map(|i| (0..n).map(|k| if i == k { Q::one() } else { Q::zero() }).collect()).collect();
        let mut dims = vec![n];
        loop {
            let mut next = Vec::new();
            for x in &span {
                for y in &span {
                    next.push(bracket(x, y));
                }
            }
            let next = crate::ring::row_space(&next);
            let d = next.len();
            if d == *dims.last().unwrap() {
                return dims;
            }
            dims.push(d);
            if d == 0 {
                return dims;
            }
            span = next;
        }
    }

    /// Derived series reaches zero.
    pub fn is_solvable_at(&self, j: &Q) -> bool {
        self.derived_series_at(j).last() == Some(&0)
    }

    fn cartan_label(&self, coeffs: &[(usize, i64)]) -> String {
        let mut out = String::new();
        for (i, c) in coeffs {
            let name = self.basis_label(*i);
            let term = match c {
                1 => name,
                -1 => format!("-{name}"),
                c => format!("{c}{name}"),
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        out
    }

    /// Nonzero brackets `[b_i, b_j]` for `i < j`.
    pub fn entries(&self) -> Vec<BracketEntry> {
        let g = &self.algebra;
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let raw = g.bracket_basis(i, j);
                if raw.is_empty() {
                    continue;
                }
                let (w4, w6) = match (g.basis_root(i), g.basis_root(j)) {
                    (Some(a), Some(b)) => self.cocycles.get(a, b).unwrap_or((0, 0)),
                    _ => (0, 0),
                };
                let (eps, target) = if raw.iter().all(|(k, _)| *k < g.rank()) {
                    (1, self.cartan_label(&raw))
                } else {
                    (raw[0].1, self.basis_label(raw[0].0))
                };
                out.push(BracketEntry {
                    x: self.basis_label(i),
                    y: self.basis_label(j),
                    coeff: Coefficient { eps, w4, w6 },
                    target,
                });
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "orbit": self.orbit,
            "basis": self.basis_labels(),
            "brackets": self.entries(),
        })
    }
}

/// Result of comparing the cocycle exponents with the q-series ratio
/// `F_{-k(a)} F_{-k(b)} / F_{-k(a)-k(b)}` for each distinct pair of grades.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub grade_pairs: Vec<((i64, i64), (u32, u32), bool)>,
}

impl OracleReport {
    pub fn holds(&self) -> bool {
        self.grade_pairs.iter().all(|(_, _, ok)| *ok)
    }
}

/// Independent check of the cocycle exponents through Duke-Jenkins forms.
pub fn scalar_oracle(table: &AliaTable, order: i64) -> Result<OracleReport> {
    let mut forms: HashMap<i64, QSeries> = HashMap::new();
    let mut form = |k: i64| -> Result<QSeries> {
        if let Some(f) = forms.get(&k) {
            return Ok(f.clone());
        }
        let f = duke_jenkins_series(k, order)?;
        forms.insert(k, f.clone());
        Ok(f)
    };
    let j = j_invariant(order);
    let j1728 = j_minus_1728(order);
    let mut seen: BTreeMap<(i64, i64), (u32, u32)> = BTreeMap::new();
    for ((a, b), w) in &table.cocycles.values {
        let key = (table.triple.grade(a), table.triple.grade(b));
        if let Some(prev) = seen.insert(key, *w) {
            if prev != *w {
                return Err(Error::Unsupported("cocycle depends on more than grades".into()));
            }
        }
    }
    let mut grade_pairs = Vec::new();
    for ((ka, kb), (w4, w6)) in seen {
        let ratio = form(-ka)?.times(&form(-kb)?).div(&form(-ka - kb)?)?;
        let mut expected = QSeries::one(j.trunc());
        for _ in 0..w4 {
            expected = expected.times(&j);
        }
        for _ in 0..w6 {
            expected = expected.times(&j1728);
        }
        grade_pairs.push(((ka, kb), (w4, w6), ratio.agrees(&expected)));
    }
    Ok(OracleReport { grade_pairs })
}

/// Orbits whose weight-zero tables are certified.
pub const TABLE_ORBITS: &[&str] = &[
    "A1:principal",
    "A2:principal",
    "B2:principal",
    "B2:subregular",
    "G2:principal",
    "G2:subregular",
];
