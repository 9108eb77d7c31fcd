//! Rank-one and rank-two simple Lie algebras in a Chevalley basis, graded
//! sl2-triples from weighted Dynkin diagrams, and symmetric-power
//! representations of sl2.

mod chevalley;
mod symrep;
mod triple;

pub use chevalley::ChevalleyAlgebra;
pub use symrep::{sym_power, SymRep};
pub use triple::{orbit_labels, GradedTriple, ORBIT_IDS};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A1,
    A2,
    B2,
    G2,
}

impl LieType {
    pub const ALL: [LieType; 4] = [LieType::A1, LieType::A2, LieType::B2, LieType::G2];

    pub fn rank(self) -> usize {
        match self {
            LieType::A1 => 1,
            _ => 2,
        }
    }

    /// Gram matrix of the simple roots. B2 lists the short root first, G2 the
    /// long root first.
    pub fn gram(self) -> Vec<Vec<i64>> {
        match self {
            LieType::A1 => vec![vec![2]],
            LieType::A2 => vec![vec![2, -1], vec![-1, 2]],
            LieType::B2 => vec![vec![2, -2], vec![-2, 4]],
            LieType::G2 => vec![vec![6, -3], vec![-3, 2]],
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_uppercase().as_str() {
            "A1" => Ok(LieType::A1),
            "A2" => Ok(LieType::A2),
            "B2" => Ok(LieType::B2),
            "G2" => Ok(LieType::G2),
            _ => Err(Error::InvalidArgument(format!("unknown Lie type {s:?}"))),
        }
    }
}

/// Root coordinates in the basis of simple roots.
pub type Root = Vec<i64>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub ty: LieType,
    gram: Vec<Vec<i64>>,
    /// Positive roots by height, then lexicographically.
    pub positive: Vec<Root>,
    /// Positive roots followed by their negatives, in the same order.
    pub roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(ty: LieType) -> Self {
        let gram = ty.gram();
        let rank = ty.rank();
        let simple: Vec<Root> =
            (0..rank).map(|i| (0..rank).map(|j| i64::from(i == j)).collect()).collect();
        let mut positive = simple.clone();
        let mut frontier = simple.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for (i, a) in simple.iter().enumerate() {
                    // p = how far the a-string extends below beta
                    let mut p = 0;
                    loop {
                        let cand: Root = beta.iter().zip(a).map(|(b, x)| b - (p + 1) * x).collect();
                        if positive.contains(&cand) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing = 2 * inner(&gram, beta, a) / gram[i][i];
                    if p - pairing > 0 {
                        let up: Root = beta.iter().zip(a).map(|(b, x)| b + x).collect();
                        if !positive.contains(&up) && !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            positive.extend(next.iter().cloned());
            frontier = next;
        }
        positive.sort_by_key(|r| (r.iter().sum::<i64>(), r.iter().map(|x| -x).collect::<Vec<_>>()));
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|x| -x).collect::<Root>()));
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        RootSystem { ty, gram, positive, roots, index }
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        inner(&self.gram, a, b)
    }

    pub fn index_of(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        self.index.contains_key(r)
    }

    /// `<a, b^vee> = 2 (a, b) / (b, b)`.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        2 * self.inner(a, b) / self.inner(b, b)
    }

    pub fn is_positive(&self, r: &[i64]) -> bool {
        r.iter().any(|&x| x > 0)
    }

    pub fn height(r: &[i64]) -> i64 {
        r.iter().sum()
    }

    /// Coefficients of the coroot `alpha^vee` in the simple coroots.
    pub fn coroot_coefficients(&self, r: &[i64]) -> Vec<i64> {
        let rr = self.inner(r, r);
        r.iter()
            .enumerate()
            .map(|(i, n)| {
                let num = n * self.gram[i][i];
                assert_eq!(num % rr, 0, "coroot coefficients are integral");
                num / rr
            })
            .collect()
    }
}

fn inner(gram: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    let mut s = 0;
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            s += ai * gram[i][j] * bj;
        }
    }
    s
}

pub fn add_roots(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn neg_root(a: &[i64]) -> Root {
    a.iter().map(|x| -x).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        let counts: Vec<usize> = LieType::ALL.iter().map(|t| RootSystem::new(*t).roots.len()).collect();
        assert_eq!(counts, vec![2, 6, 8, 12]);
    }

    #[test]
    fn b2_and_g2_positive_roots() {
        let b2 = RootSystem::new(LieType::B2);
        assert_eq!(b2.positive, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]]);
        let g2 = RootSystem::new(LieType::G2);
        assert!(g2.is_root(&[2, 3]) && g2.is_root(&[1, 3]) && !g2.is_root(&[3, 1]));
        // alpha_1 long in G2, short in B2
        assert!(g2.inner(&[1, 0], &[1, 0]) > g2.inner(&[0, 1], &[0, 1]));
        assert!(b2.inner(&[1, 0], &[1, 0]) < b2.inner(&[0, 1], &[0, 1]));
    }

    #[test]
    fn coroots_of_long_and_short_roots() {
        let b2 = RootSystem::new(LieType::B2);
        assert_eq!(b2.coroot_coefficients(&[2, 1]), vec![1, 1]);
        assert_eq!(b2.coroot_coefficients(&[1, 1]), vec![1, 2]);
    }
}
