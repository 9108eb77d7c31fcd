use std::collections::HashMap;

use num_traits::Zero;

use super::{add_roots, neg_root, LieType, Root, RootSystem};
use crate::ring::{mat_mul, mat_trace, q, Matrix, Scalar, Q};

/// A simple Lie algebra in a Chevalley basis `{h_1, .., h_r} u {e_alpha}`.
///
/// Signs of the structure constants are fixed by declaring every
/// extraspecial pair positive, and `N(-a, -b) = -N(a, b)`.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    pub roots: RootSystem,
    consts: HashMap<(usize, usize), i64>,
}

impl ChevalleyAlgebra {
    pub fn new(ty: LieType) -> Self {
        let roots = RootSystem::new(ty);
        let mut solver = Solver { sys: &roots, memo: HashMap::new() };
        let mut consts = HashMap::new();
        for (i, a) in roots.roots.iter().enumerate() {
            for (j, b) in roots.roots.iter().enumerate() {
                let s = add_roots(a, b);
                if roots.is_root(&s) {
                    let n = solver.n(a, b);
                    assert!(n.is_integer(), "structure constant {n} not integral");
                    let n = n.to_integer();
                    let n: i64 = i64::try_from(n).unwrap();
                    assert_eq!(n.abs(), roots.string_below(a, b) + 1, "|N| = p + 1");
                    consts.insert((i, j), n);
                }
            }
        }
        ChevalleyAlgebra { roots, consts }
    }

    pub fn ty(&self) -> LieType {
        self.roots.ty
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn dim(&self) -> usize {
        self.rank() + self.roots.roots.len()
    }

    /// Basis position of `e_alpha`.
    pub fn root_basis_index(&self, r: &[i64]) -> Option<usize> {
        self.roots.index_of(r).map(|i| i + self.rank())
    }

    /// Root of a basis element, `None` for Cartan elements.
    pub fn basis_root(&self, i: usize) -> Option<&Root> {
        i.checked_sub(self.rank()).map(|k| &self.roots.roots[k])
    }

    pub fn basis_label(&self, i: usize) -> String {
        match self.basis_root(i) {
            None => format!("h{}", i + 1),
            Some(r) => format!(
                "e({})",
                r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
        }
    }

    /// `N(a, b)`, zero when `a + b` is not a root.
    pub fn structure_constant(&self, a: &[i64], b: &[i64]) -> i64 {
        match (self.roots.index_of(a), self.roots.index_of(b)) {
            (Some(i), Some(j)) => self.consts.get(&(i, j)).copied().unwrap_or(0),
            _ => 0,
        }
    }

    /// `alpha(h_i) = <alpha, alpha_i^vee>`.
    pub fn root_on_cartan(&self, r: &[i64], i: usize) -> i64 {
        let simple: Vec<i64> = (0..self.rank()).map(|k| i64::from(k == i)).collect();
        self.roots.pairing(r, &simple)
    }

    /// Sparse bracket of two basis elements with integer coefficients.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        match (self.basis_root(i), self.basis_root(j)) {
            (None, None) => vec![],
            (None, Some(b)) => nonzero(vec![(j, self.root_on_cartan(b, i))]),
            (Some(a), None) => nonzero(vec![(i, -self.root_on_cartan(a, j))]),
            (Some(a), Some(b)) => {
                let s = add_roots(a, b);
                if s.iter().all(|&x| x == 0) {
                    self.roots
                        .coroot_coefficients(a)
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| *c != 0)
                        .collect()
                } else if let Some(k) = self.root_basis_index(&s) {
                    vec![(k, self.structure_constant(a, b))]
                } else {
                    vec![]
                }
            }
        }
    }

    pub fn basis_vector<F: Scalar>(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    /// Bracket of general elements over any coefficient ring.
    pub fn bracket<F: Scalar>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (k, c) in self.bracket_basis(i, j) {
                    out[k] = out[k].clone() + xi.clone() * yj.clone() * F::from_i64(c);
                }
            }
        }
        out
    }

    /// Matrix of `ad x`; column `j` holds `[x, b_j]`.
    pub fn ad_matrix(&self, x: &[Q]) -> Matrix<Q> {
        let n = self.dim();
        let mut m = vec![vec![Q::zero(); n]; n];
        for j in 0..n {
            let col = self.bracket(x, &self.basis_vector::<Q>(j));
            for (i, c) in col.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m
    }

    pub fn killing(&self, x: &[Q], y: &[Q]) -> Q {
        mat_trace(&mat_mul(&self.ad_matrix(x), &self.ad_matrix(y)))
    }

    /// Gram matrix of the Killing form on the basis.
    pub fn killing_matrix(&self) -> Matrix<Q> {
        let ads: Vec<Matrix<Q>> =
            (0..self.dim()).map(|i| self.ad_matrix(&self.basis_vector(i))).collect();
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| mat_trace(&mat_mul(&ads[i], &ads[j]))).collect())
            .collect()
    }

    /// Jacobi identity on every triple of basis elements.
    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim();
        let basis: Vec<Vec<Q>> = (0..n).map(|i| self.basis_vector(i)).collect();
        for a in 0..n {
            for b in 0..n {
                let ab = self.bracket(&basis[a], &basis[b]);
                for c in 0..n {
                    let bc = self.bracket(&basis[b], &basis[c]);
                    let ca = self.bracket(&basis[c], &basis[a]);
                    let t1 = self.bracket(&ab, &basis[c]);
                    let t2 = self.bracket(&bc, &basis[a]);
                    let t3 = self.bracket(&ca, &basis[b]);
                    if t1.iter().zip(&t2).zip(&t3).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Extraspecial pair of each non-simple positive root.
    pub fn extraspecial_pairs(&self) -> Vec<(Root, Root)> {
        self.roots
            .positive
            .iter()
            .filter_map(|xi| extraspecial(&self.roots, xi))
            .collect()
    }
}

fn nonzero(v: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    v.into_iter().filter(|(_, c)| *c != 0).collect()
}

impl RootSystem {
    /// Largest `p` with `b - p a` a root.
    pub fn string_below(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut p = 0;
        loop {
            let cand: Root = b.iter().zip(a).map(|(y, x)| y - (p + 1) * x).collect();
            if self.is_root(&cand) {
                p += 1;
            } else {
                return p;
            }
        }
    }
}

fn extraspecial(sys: &RootSystem, xi: &[i64]) -> Option<(Root, Root)> {
    sys.positive.iter().find_map(|a| {
        let b: Root = xi.iter().zip(a).map(|(x, y)| x - y).collect();
        (sys.is_positive(&b) && sys.is_root(&b)).then(|| (a.clone(), b))
    })
}

struct Solver<'a> {
    sys: &'a RootSystem,
    memo: HashMap<(Root, Root), Q>,
}

impl Solver<'_> {
    fn norm(&self, r: &[i64]) -> Q {
        q(self.sys.inner(r, r))
    }

    /// `N(a, b)` for any roots with `a + b` a root.
    fn n(&mut self, a: &[i64], b: &[i64]) -> Q {
        let s = add_roots(a, b);
        if !self.sys.is_root(&s) {
            return Q::zero();
        }
        if let Some(v) = self.memo.get(&(a.to_vec(), b.to_vec())) {
            return v.clone();
        }
        let pa = self.sys.is_positive(a);
        let pb = self.sys.is_positive(b);
        let v = match (pa, pb) {
            (true, true) => self.n_positive(a, b),
            (false, false) => -self.n(&neg_root(a), &neg_root(b)),
            (false, true) => -self.n(b, a),
            (true, false) => {
                let w = s;
                if self.sys.is_positive(&w) {
                    // (-a) + (-b) + w = 0 with -b, w positive
                    let ratio = self.norm(&w) / self.norm(a);
                    -(ratio * self.n(&neg_root(b), &w))
                } else {
                    // a + b + (-w) = 0 with -w, a positive
                    let ratio = self.norm(&w) / self.norm(b);
                    ratio * self.n(&neg_root(&w), a)
                }
            }
        };
        self.memo.insert((a.to_vec(), b.to_vec()), v.clone());
        v
    }

    fn n_positive(&mut self, r: &[i64], s: &[i64]) -> Q {
        let xi = add_roots(r, s);
        let (a0, b0) = extraspecial(self.sys, &xi).expect("non-simple root");
        let p0 = self.sys.string_below(&a0, &b0);
        if r == a0.as_slice() && s == b0.as_slice() {
            return q(p0 + 1);
        }
        if s == a0.as_slice() && r == b0.as_slice() {
            return -q(p0 + 1);
        }
        let t = neg_root(&a0);
        let u = neg_root(&b0);
        let mut acc = Q::zero();
        let st = add_roots(s, &t);
        if self.sys.is_root(&st) {
            acc += self.n(s, &t) * self.n(r, &u) / self.norm(&st);
        }
        let tr = add_roots(&t, r);
        if self.sys.is_root(&tr) {
            acc += self.n(&t, r) * self.n(s, &u) / self.norm(&tr);
        }
        self.norm(&xi) / q(p0 + 1) * acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_in_every_type() {
        for ty in LieType::ALL {
            assert!(ChevalleyAlgebra::new(ty).jacobi_holds(), "{ty}");
        }
    }

    #[test]
    fn killing_form_of_sl2() {
        let g = ChevalleyAlgebra::new(LieType::A1);
        let h = g.basis_vector::<Q>(0);
        assert_eq!(g.killing(&h, &h), q(8));
    }

    #[test]
    fn extraspecial_pairs_positive_and_negation_rule() {
        for ty in LieType::ALL {
            let g = ChevalleyAlgebra::new(ty);
            for (a, b) in g.extraspecial_pairs() {
                assert!(g.structure_constant(&a, &b) > 0);
                assert_eq!(
                    g.structure_constant(&neg_root(&a), &neg_root(&b)),
                    -g.structure_constant(&a, &b)
                );
            }
        }
    }

    #[test]
    fn g2_has_constants_up_to_three() {
        let g = ChevalleyAlgebra::new(LieType::G2);
        let max = g.consts.values().map(|v| v.abs()).max().unwrap();
        assert_eq!(max, 3);
    }
}
