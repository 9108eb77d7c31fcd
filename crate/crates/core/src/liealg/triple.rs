use num_traits::Zero;

use super::{ChevalleyAlgebra, LieType, Root};
use crate::error::{Error, Result};
use crate::ring::{q, solve, Matrix, Q};

/// Orbit ids understood by [`orbit_labels`].
pub const ORBIT_IDS: &[&str] = &[
    "A1:principal",
    "A2:principal",
    "A2:minimal",
    "B2:principal",
    "B2:subregular",
    "B2:minimal",
    "G2:principal",
    "G2:subregular",
    "G2:minimal",
];

/// Weighted Dynkin diagram of a named nilpotent orbit.
pub fn orbit_labels(id: &str) -> Result<(LieType, Vec<i64>)> {
    let (ty, name) = id.split_once(':').ok_or_else(|| Error::UnknownOrbit(id.to_string()))?;
    let ty: LieType = ty.parse().map_err(|_| Error::UnknownOrbit(id.to_string()))?;
    let labels = match (ty, name) {
        (LieType::A1, "principal") => vec![2],
        (LieType::A2, "principal") => vec![2, 2],
        (LieType::A2, "minimal") => vec![1, 1],
        (LieType::B2, "principal") => vec![2, 2],
        (LieType::B2, "subregular") => vec![0, 2],
        (LieType::B2, "minimal") => vec![1, 0],
        (LieType::G2, "principal") => vec![2, 2],
        (LieType::G2, "subregular") => vec![2, 0],
        (LieType::G2, "minimal") => vec![1, 0],
        _ => return Err(Error::UnknownOrbit(id.to_string())),
    };
    Ok((ty, labels))
}

/// An sl2-triple `(E, H, F)` together with the grading `k(alpha) = alpha(H)`.
#[derive(Clone, Debug)]
pub struct GradedTriple {
    pub labels: Vec<i64>,
    pub h: Vec<Q>,
    pub e: Vec<Q>,
    pub f: Vec<Q>,
}

impl GradedTriple {
    /// Build the triple for the given labels. With `require_even`, odd labels
    /// are rejected.
    pub fn new(g: &ChevalleyAlgebra, labels: &[i64], require_even: bool) -> Result<Self> {
        let rank = g.rank();
        let shown = format!("{labels:?}");
        if labels.len() != rank || labels.iter().any(|l| !(0..=2).contains(l)) {
            return Err(Error::InvalidArgument(format!("labels {shown} for {}", g.ty())));
        }
        if require_even && labels.iter().any(|l| l % 2 == 1) {
            return Err(Error::OddLabel(shown));
        }
        // H = sum c_j h_j with alpha_i(H) = label_i
        let cartan: Matrix<Q> = (0..rank)
            .map(|i| {
                let simple: Root = (0..rank).map(|k| i64::from(k == i)).collect();
                (0..rank).map(|j| q(g.root_on_cartan(&simple, j))).collect()
            })
            .collect();
        let rhs: Vec<Q> = labels.iter().map(|&l| q(l)).collect();
        let c = solve(&cartan, &rhs).expect("Cartan matrix is invertible");
        let mut h = vec![Q::zero(); g.dim()];
        h[..rank].clone_from_slice(&c);

        let grade = |r: &Root| -> i64 { r.iter().zip(labels).map(|(n, l)| n * l).sum() };
        let grade2: Vec<Root> =
            g.roots.positive.iter().filter(|r| grade(r) == 2).cloned().collect();
        if grade2.is_empty() {
            return Err(Error::NoRationalTriple(shown));
        }
        for x in candidates(grade2.len()) {
            let mut e = vec![Q::zero(); g.dim()];
            for (r, xi) in grade2.iter().zip(&x) {
                e[g.root_basis_index(r).unwrap()] = q(*xi);
            }
            if let Some(f) = solve_for_f(g, &e, &h, &grade2) {
                return Ok(GradedTriple { labels: labels.to_vec(), h, e, f });
            }
        }
        Err(Error::NoRationalTriple(shown))
    }

    /// `k(alpha) = alpha(H)`.
    pub fn grade(&self, r: &[i64]) -> i64 {
        r.iter().zip(&self.labels).map(|(n, l)| n * l).sum()
    }

    pub fn is_even(&self) -> bool {
        self.labels.iter().all(|l| l % 2 == 0)
    }
}

/// Coefficient patterns for `E`: 0/1 vectors by support size, then small
/// integer vectors.
fn candidates(n: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut masks: Vec<usize> = (1..1usize << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for m in masks {
        out.push((0..n).map(|i| i64::from(m & (1 << i) != 0)).collect());
    }
    let vals = [1i64, 2, -1];
    let mut idx = vec![0usize; n];
    loop {
        out.push(idx.iter().map(|&i| vals[i]).collect());
        let mut k = 0;
        while k < n && idx[k] == vals.len() - 1 {
            idx[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        idx[k] += 1;
    }
    out
}

/// Solve `[E, F] = H` for `F` in the span of `e_{-beta}`, `beta` of grade 2.
fn solve_for_f(g: &ChevalleyAlgebra, e: &[Q], h: &[Q], grade2: &[Root]) -> Option<Vec<Q>> {
    let cols: Vec<Vec<Q>> = grade2
        .iter()
        .map(|r| {
            let neg: Root = r.iter().map(|x| -x).collect();
            let basis = g.basis_vector::<Q>(g.root_basis_index(&neg).unwrap());
            g.bracket(e, &basis)
        })
        .collect();
    let n = g.dim();
    let a: Matrix<Q> = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let y = solve(&a, h)?;
    let mut f = vec![Q::zero(); n];
    for (r, yi) in grade2.iter().zip(y) {
        let neg: Root = r.iter().map(|x| -x).collect();
        f[g.root_basis_index(&neg).unwrap()] = yi;
    }
    Some(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_triple(g: &ChevalleyAlgebra, t: &GradedTriple) {
        let two = q(2);
        let he = g.bracket(&t.h, &t.e);
        let hf = g.bracket(&t.h, &t.f);
        let ef = g.bracket(&t.e, &t.f);
        assert!(he.iter().zip(&t.e).all(|(a, b)| *a == b * &two));
        assert!(hf.iter().zip(&t.f).all(|(a, b)| *a == -(b * &two)));
        assert_eq!(ef, t.h);
    }

    #[test]
    fn every_listed_orbit_has_a_rational_triple() {
        for id in ORBIT_IDS {
            let (ty, labels) = orbit_labels(id).unwrap();
            let g = ChevalleyAlgebra::new(ty);
            let t = GradedTriple::new(&g, &labels, false).unwrap();
            check_triple(&g, &t);
        }
    }

    #[test]
    fn odd_labels_rejected_on_request() {
        let g = ChevalleyAlgebra::new(LieType::A2);
        assert!(matches!(GradedTriple::new(&g, &[1, 1], true), Err(Error::OddLabel(_))));
    }

    #[test]
    fn gradings_match_examples() {
        let (ty, l) = orbit_labels("A2:principal").unwrap();
        let g = ChevalleyAlgebra::new(ty);
        let t = GradedTriple::new(&g, &l, true).unwrap();
        assert_eq!(t.grade(&[1, 1]), 4);
        let (ty, l) = orbit_labels("B2:subregular").unwrap();
        let g = ChevalleyAlgebra::new(ty);
        let t = GradedTriple::new(&g, &l, true).unwrap();
        let ks: Vec<i64> = g.roots.positive.iter().map(|r| t.grade(r)).collect();
        assert_eq!(ks, vec![0, 2, 2, 2]);
    }
}
