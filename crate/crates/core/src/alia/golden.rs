//! Hand-transcribed cocycle graphs for the rank-two tables. Each graph has
//! named nodes (roots in simple-root coordinates) and two edge lists, one per
//! cocycle; an edge joins two roots whose cocycle value is 1.

use std::collections::BTreeSet;

use super::CocyclePair;
use crate::liealg::Root;

pub struct GoldenGraph {
    pub orbit: &'static str,
    pub nodes: &'static [(&'static str, [i64; 2])],
    pub w4_edges: &'static [(&'static str, &'static str)],
    pub w6_edges: &'static [(&'static str, &'static str)],
}

const A2_NODES: &[(&str, [i64; 2])] = &[
    ("one", [1, 0]),
    ("three", [0, 1]),
    ("two", [1, 1]),
    ("four", [-1, 0]),
    ("six", [0, -1]),
    ("five", [-1, -1]),
];

const B2_NODES: &[(&str, [i64; 2])] = &[
    ("m10", [1, 0]),
    ("m01", [0, 1]),
    ("m11", [1, 1]),
    ("m21", [2, 1]),
    ("n10", [-1, 0]),
    ("n01", [0, -1]),
    ("n11", [-1, -1]),
    ("n21", [-2, -1]),
];

const G2_SUBREGULAR_NODES: &[(&str, [i64; 2])] = &[
    ("m10", [1, 0]),
    ("m01", [0, 1]),
    ("m11", [1, 1]),
    ("m12", [1, 2]),
    ("m13", [1, 3]),
    ("m23", [2, 3]),
    ("n10", [-1, 0]),
    ("n01", [0, -1]),
    ("n11", [-1, -1]),
    ("n12", [-1, -2]),
    ("n13", [-1, -3]),
    ("n23", [-2, -3]),
];

const G2_PRINCIPAL_NODES: &[(&str, [i64; 2])] = &[
    ("six", [1, 0]),
    ("one", [0, 1]),
    ("five", [1, 1]),
    ("three", [1, 2]),
    ("two", [1, 3]),
    ("four", [2, 3]),
    ("twelve", [-1, 0]),
    ("seven", [0, -1]),
    ("eleven", [-1, -1]),
    ("nine", [-1, -2]),
    ("eight", [-1, -3]),
    ("ten", [-2, -3]),
];

pub const GRAPHS: &[GoldenGraph] = &[
    GoldenGraph {
        orbit: "A2:principal",
        nodes: A2_NODES,
        w4_edges: &[
            ("two", "five"),
            ("three", "six"),
            ("four", "one"),
            ("two", "four"),
            ("four", "six"),
            ("six", "two"),
        ],
        w6_edges: &[("six", "three"), ("one", "four"), ("six", "four"), ("three", "one")],
    },
    GoldenGraph {
        orbit: "B2:subregular",
        nodes: B2_NODES,
        w4_edges: &[
            ("m01", "n01"),
            ("m11", "n11"),
            ("m21", "n21"),
            ("m01", "n11"),
            ("m11", "n01"),
            ("m11", "n21"),
            ("m21", "n11"),
        ],
        w6_edges: &[
            ("m01", "n01"),
            ("m11", "n11"),
            ("m21", "n21"),
            ("m01", "n11"),
            ("m11", "n01"),
            ("m11", "n21"),
            ("m21", "n11"),
        ],
    },
    GoldenGraph {
        orbit: "B2:principal",
        nodes: B2_NODES,
        w4_edges: &[
            ("m10", "n10"),
            ("m01", "n01"),
            ("m11", "n11"),
            ("m10", "m11"),
            ("n10", "m11"),
            ("n10", "n11"),
            ("m11", "n01"),
            ("n10", "n01"),
        ],
        w6_edges: &[
            ("m10", "n10"),
            ("m01", "n01"),
            ("m21", "n21"),
            ("n10", "n01"),
            ("m01", "m10"),
            ("m21", "n10"),
            ("m10", "n21"),
        ],
    },
    GoldenGraph {
        orbit: "G2:subregular",
        nodes: G2_SUBREGULAR_NODES,
        w4_edges: &[
            ("m11", "n12"),
            ("m12", "n11"),
            ("n11", "n12"),
            ("m23", "n13"),
            ("m23", "n10"),
            ("n10", "n13"),
            ("m10", "n11"),
            ("m23", "n11"),
            ("m23", "n12"),
            ("m13", "n12"),
            ("n10", "m11"),
            ("n13", "m12"),
            ("m10", "n10"),
            ("m11", "n11"),
            ("m12", "n12"),
            ("m13", "n13"),
            ("m23", "n23"),
        ],
        w6_edges: &[
            ("m11", "n12"),
            ("m12", "n11"),
            ("m12", "m11"),
            ("n11", "n12"),
            ("m10", "m13"),
            ("n10", "n13"),
            ("m13", "n12"),
            ("m12", "n13"),
            ("m11", "n10"),
            ("m10", "n11"),
            ("m10", "n10"),
            ("m11", "n11"),
            ("m12", "n12"),
            ("m13", "n13"),
        ],
    },
    GoldenGraph {
        orbit: "G2:principal",
        nodes: G2_PRINCIPAL_NODES,
        w4_edges: &[
            ("one", "five"),
            ("eleven", "seven"),
            ("seven", "five"),
            ("twelve", "four"),
            ("twelve", "eight"),
            ("eight", "four"),
            ("two", "seven"),
            ("twelve", "seven"),
            ("twelve", "five"),
            ("ten", "five"),
            ("eight", "one"),
            ("four", "eleven"),
            ("two", "eight"),
            ("one", "seven"),
            ("eleven", "five"),
            ("ten", "four"),
            ("twelve", "six"),
        ],
        w6_edges: &[
            ("three", "seven"),
            ("one", "nine"),
            ("one", "three"),
            ("nine", "seven"),
            ("four", "twelve"),
            ("ten", "six"),
            ("twelve", "seven"),
            ("one", "six"),
            ("three", "ten"),
            ("four", "nine"),
            ("four", "ten"),
            ("three", "nine"),
            ("one", "seven"),
            ("twelve", "six"),
        ],
    },
];

pub fn graph(orbit: &str) -> Option<&'static GoldenGraph> {
    GRAPHS.iter().find(|g| g.orbit == orbit)
}

pub type EdgeSet = BTreeSet<(Root, Root)>;

fn unordered(a: Root, b: Root) -> (Root, Root) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl GoldenGraph {
    fn root(&self, name: &str) -> Root {
        self.nodes
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, r)| r.to_vec())
            .unwrap_or_else(|| panic!("unknown node {name}"))
    }

    fn edges(&self, list: &[(&str, &str)]) -> EdgeSet {
        list.iter().map(|(a, b)| unordered(self.root(a), self.root(b))).collect()
    }

    pub fn w4(&self) -> EdgeSet {
        self.edges(self.w4_edges)
    }

    pub fn w6(&self) -> EdgeSet {
        self.edges(self.w6_edges)
    }

    pub fn name_of(&self, r: &[i64]) -> &'static str {
        self.nodes.iter().find(|(_, x)| x.as_slice() == r).map(|(n, _)| *n).unwrap_or("?")
    }
}

/// Computed edge sets in the same unordered form.
pub fn computed_edges(c: &CocyclePair) -> (EdgeSet, EdgeSet) {
    let (w4, w6) = c.edge_sets();
    (
        w4.into_iter().map(|(a, b)| unordered(a, b)).collect(),
        w6.into_iter().map(|(a, b)| unordered(a, b)).collect(),
    )
}

/// Symmetric differences `(w4, w6)` between computed and transcribed graphs.
pub fn compare(g: &GoldenGraph, c: &CocyclePair) -> (Vec<(Root, Root)>, Vec<(Root, Root)>) {
    let (w4, w6) = computed_edges(c);
    (
        w4.symmetric_difference(&g.w4()).cloned().collect(),
        w6.symmetric_difference(&g.w6()).cloned().collect(),
    )
}
