//! Named graphs with the facts expected of them.
//!
//! Every vertex of a catalog graph carries a label; the labels of the special
//! vertices (`v`, `u1`, `x`, ...) are what tests and the CLI refer to.

use serde::Serialize;

use super::Multigraph;
use crate::error::{Error, Result};

/// A machine-checkable claim about a catalog graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "fact")]
pub enum KnownFact {
    Order { value: usize },
    Cubic { value: bool },
    MatchingCovered { value: bool },
    Bicritical { value: bool },
    Brick { value: bool },
    Brace { value: bool },
    EssentiallyFourEdgeConnected { value: bool },
    NearBipartite { value: bool },
    Snark { value: bool },
    /// Number of bricks in a tight cut decomposition.
    BCount { value: usize },
    RemovableEdges { value: usize },
    RemovableDoubletons { value: usize },
    /// Every removable edge has `b(G-e) = 1`.
    AllRemovableBInvariant,
    /// Simplified leaves of the decomposition, as catalog names.
    Leaves { names: Vec<&'static str> },
    /// A cut whose shore is given by labels, and whether it is tight.
    CutIsTight { shore: Vec<&'static str>, tight: bool },
    /// The edge between two labelled vertices, deleted.
    DeletionBCount { ends: [&'static str; 2], value: usize },
    DeletionLeaves { ends: [&'static str; 2], names: Vec<&'static str> },
    EdgeClass { ends: [&'static str; 2], class: EdgeClassName },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeClassName {
    DoubletonMember,
    BInvariant,
    QuasiBInvariant,
    NonRemovable,
    RemovableOther,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    #[serde(skip)]
    pub graph: Multigraph,
    pub known_facts: Vec<KnownFact>,
}

pub const NAMES: [&str; 11] = [
    "k4",
    "c6bar",
    "k33",
    "petersen",
    "tricorn",
    "fig1",
    "fig3",
    "fig4",
    "fig5-left",
    "fig5-right",
    "cubeplex",
];

fn named(vertices: &[&str], edges: &[(&str, &str)]) -> Multigraph {
    let index = |name: &str| {
        vertices
            .iter()
            .position(|&v| v == name)
            .unwrap_or_else(|| panic!("catalog vertex {name} undeclared"))
    };
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (index(a), index(b))).collect();
    let mut g = Multigraph::from_edges(vertices.len(), &pairs).expect("catalog edges are loop-free");
    for (i, name) in vertices.iter().enumerate() {
        g.set_label(i, *name);
    }
    g
}

fn numbered(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    let mut g = Multigraph::from_edges(n, edges).expect("catalog edges are loop-free");
    for v in 0..n {
        g.set_label(v, v.to_string());
    }
    g
}

pub fn k4() -> Multigraph {
    numbered(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// Triangular prism: triangles `0 1 2` and `3 4 5` joined by rungs `i, i+3`.
pub fn c6bar() -> Multigraph {
    numbered(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
}

/// `K3,3` with classes `0 1 2` and `3 4 5`.
pub fn k33() -> Multigraph {
    let mut edges = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            edges.push((a, b));
        }
    }
    numbered(6, &edges)
}

/// Outer 5-cycle `0..5`, spokes `i, i+5`, inner pentagram.
pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    numbered(10, &edges)
}

/// A center joined to three hubs; each hub sees two consecutive vertices of
/// an outer hexagon. The hexagon edges inside a hub's pair are the removable
/// edges `o1 o2`, `o3 o4`, `o5 o6`.
pub fn tricorn() -> Multigraph {
    named(
        &["c", "h1", "h2", "h3", "o1", "o2", "o3", "o4", "o5", "o6"],
        &[
            ("c", "h1"),
            ("c", "h2"),
            ("c", "h3"),
            ("h1", "o1"),
            ("h1", "o2"),
            ("h2", "o3"),
            ("h2", "o4"),
            ("h3", "o5"),
            ("h3", "o6"),
            ("o1", "o2"),
            ("o3", "o4"),
            ("o5", "o6"),
            ("o2", "o3"),
            ("o4", "o5"),
            ("o6", "o1"),
        ],
    )
}

/// Triangle `a b c` attached to `p q r`, which are also joined to `s` and `t`.
/// `∂({a, b, c})` is a barrier cut for the barrier `{p, q, r}`.
pub fn fig1() -> Multigraph {
    named(
        &["a", "b", "c", "p", "q", "r", "s", "t"],
        &[
            ("a", "b"),
            ("b", "c"),
            ("c", "a"),
            ("a", "p"),
            ("b", "q"),
            ("c", "r"),
            ("s", "p"),
            ("s", "q"),
            ("s", "r"),
            ("t", "p"),
            ("t", "q"),
            ("t", "r"),
        ],
    )
}

/// Two triangles-with-an-edge sharing the 2-vertex-cut `{x, y}`.
pub fn fig3() -> Multigraph {
    named(
        &["a", "b", "c", "d", "x", "y"],
        &[
            ("a", "b"),
            ("a", "x"),
            ("b", "x"),
            ("a", "y"),
            ("b", "y"),
            ("c", "d"),
            ("c", "x"),
            ("c", "y"),
            ("d", "x"),
            ("d", "y"),
        ],
    )
}

/// 14-vertex cubic brick with a vertex `v` whose edges to `u1`, `u2` are
/// quasi-b-invariant and whose edge to `u3` is b-invariant.
pub fn fig4() -> Multigraph {
    named(
        &[
            "v", "u1", "u2", "u3", "a", "b", "c", "d", "e", "f", "g", "h", "p", "q",
        ],
        &[
            ("a", "e"),
            ("a", "b"),
            ("a", "u2"),
            ("b", "f"),
            ("b", "u3"),
            ("c", "g"),
            ("c", "d"),
            ("c", "u3"),
            ("d", "h"),
            ("d", "u2"),
            ("e", "p"),
            ("e", "q"),
            ("f", "p"),
            ("f", "u1"),
            ("g", "q"),
            ("g", "u1"),
            ("h", "p"),
            ("h", "q"),
            ("v", "u1"),
            ("v", "u2"),
            ("v", "u3"),
        ],
    )
}

const FIG5_COMMON: [(&str, &str); 21] = [
    ("a", "b"),
    ("a", "p1"),
    ("a", "p4"),
    ("p1", "p2"),
    ("p1", "p5"),
    ("p2", "p3"),
    ("p2", "p6"),
    ("p3", "p4"),
    ("p3", "p5"),
    ("p4", "p6"),
    ("b", "q1"),
    ("b", "q4"),
    ("q1", "q2"),
    ("q1", "q5"),
    ("q2", "q3"),
    ("q3", "q4"),
    ("q4", "q6"),
    ("q5", "q6"),
    ("t", "p6"),
    ("t", "q6"),
    ("w", "p5"),
];

const FIG5_VERTICES: [&str; 16] = [
    "a", "b", "p1", "p2", "p3", "p4", "p5", "p6", "q1", "q2", "q3", "q4", "q5", "q6", "t", "w",
];

/// 16-vertex cubic brick whose edge `a b` is removable with three bricks in
/// `G - ab`.
pub fn fig5_left() -> Multigraph {
    let mut edges = FIG5_COMMON.to_vec();
    edges.extend([("t", "q3"), ("w", "q5"), ("w", "q2")]);
    named(&FIG5_VERTICES, &edges)
}

/// Variant of [`fig5_left`] with the attachments of `t` and `w` on `q2`, `q3`
/// swapped.
pub fn fig5_right() -> Multigraph {
    let mut edges = FIG5_COMMON.to_vec();
    edges.extend([("t", "q2"), ("w", "q5"), ("w", "q3")]);
    named(&FIG5_VERTICES, &edges)
}

/// 12-vertex near-bipartite cubic brick with a vertex `v` carrying two
/// quasi-b-invariant edges and one doubleton member.
pub fn cubeplex() -> Multigraph {
    named(
        &[
            "v", "u1", "u2", "u3", "s1", "t1", "s2", "t2", "s3", "t3", "y", "y'",
        ],
        &[
            ("y'", "s1"),
            ("y'", "y"),
            ("y'", "t1"),
            ("t3", "s1"),
            ("s2", "y"),
            ("t1", "s3"),
            ("y", "t2"),
            ("s2", "t3"),
            ("u2", "s2"),
            ("u3", "t3"),
            ("s3", "t2"),
            ("u3", "s3"),
            ("u2", "t2"),
            ("v", "u1"),
            ("v", "u2"),
            ("v", "u3"),
            ("u1", "s1"),
            ("u1", "t1"),
        ],
    )
}

pub fn graph(name: &str) -> Result<Multigraph> {
    Ok(entry(name)?.graph)
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    use EdgeClassName::*;
    use KnownFact::*;
    let brick_basics = |n: usize, efec: bool| {
        vec![
            Order { value: n },
            Cubic { value: true },
            MatchingCovered { value: true },
            Bicritical { value: true },
            Brick { value: true },
            Brace { value: false },
            EssentiallyFourEdgeConnected { value: efec },
            BCount { value: 1 },
        ]
    };
    let e = match name {
        "k4" => CatalogEntry {
            name: "k4",
            description: "complete graph on four vertices",
            graph: k4(),
            known_facts: [
                brick_basics(4, true),
                vec![
                    RemovableEdges { value: 0 },
                    RemovableDoubletons { value: 3 },
                    NearBipartite { value: true },
                    Snark { value: false },
                ],
            ]
            .concat(),
        },
        "c6bar" => CatalogEntry {
            name: "c6bar",
            description: "triangular prism",
            graph: c6bar(),
            known_facts: [
                brick_basics(6, false),
                vec![
                    RemovableEdges { value: 0 },
                    RemovableDoubletons { value: 3 },
                    NearBipartite { value: true },
                    CutIsTight {
                        shore: vec!["0", "1", "2"],
                        tight: false,
                    },
                ],
            ]
            .concat(),
        },
        "k33" => CatalogEntry {
            name: "k33",
            description: "complete bipartite graph K3,3",
            graph: k33(),
            known_facts: vec![
                Order { value: 6 },
                Cubic { value: true },
                MatchingCovered { value: true },
                Bicritical { value: false },
                Brick { value: false },
                Brace { value: true },
                BCount { value: 0 },
            ],
        },
        "petersen" => CatalogEntry {
            name: "petersen",
            description: "Petersen graph",
            graph: petersen(),
            known_facts: [
                brick_basics(10, true),
                vec![
                    RemovableEdges { value: 15 },
                    RemovableDoubletons { value: 0 },
                    NearBipartite { value: false },
                    Snark { value: true },
                    DeletionBCount {
                        ends: ["0", "1"],
                        value: 2,
                    },
                    DeletionLeaves {
                        ends: ["0", "1"],
                        names: vec!["k4", "k4"],
                    },
                    EdgeClass {
                        ends: ["0", "5"],
                        class: QuasiBInvariant,
                    },
                ],
            ]
            .concat(),
        },
        "tricorn" => CatalogEntry {
            name: "tricorn",
            description: "center, three hubs and an outer hexagon",
            graph: tricorn(),
            known_facts: [
                brick_basics(10, false),
                vec![
                    RemovableEdges { value: 3 },
                    AllRemovableBInvariant,
                    EdgeClass {
                        ends: ["o1", "o2"],
                        class: BInvariant,
                    },
                    CutIsTight {
                        shore: vec!["h1", "o1", "o2"],
                        tight: false,
                    },
                ],
            ]
            .concat(),
        },
        "fig1" => CatalogEntry {
            name: "fig1",
            description: "cubic graph with a nontrivial barrier cut",
            graph: fig1(),
            known_facts: vec![
                Order { value: 8 },
                Cubic { value: true },
                MatchingCovered { value: true },
                Brick { value: false },
                Brace { value: false },
                BCount { value: 1 },
                CutIsTight {
                    shore: vec!["a", "b", "c"],
                    tight: true,
                },
                Leaves {
                    names: vec!["k33", "k4"],
                },
            ],
        },
        "fig3" => CatalogEntry {
            name: "fig3",
            description: "bicritical graph that is not a brick",
            graph: fig3(),
            known_facts: vec![
                Order { value: 6 },
                Cubic { value: false },
                MatchingCovered { value: true },
                Bicritical { value: true },
                Brick { value: false },
                Brace { value: false },
                BCount { value: 2 },
                Leaves {
                    names: vec!["k4", "k4"],
                },
            ],
        },
        "fig4" => CatalogEntry {
            name: "fig4",
            description: "cubic brick with quasi-b-invariant edges v-u1, v-u2 and b-invariant v-u3",
            graph: fig4(),
            known_facts: [
                brick_basics(14, true),
                vec![
                    EdgeClass {
                        ends: ["v", "u1"],
                        class: QuasiBInvariant,
                    },
                    EdgeClass {
                        ends: ["v", "u2"],
                        class: QuasiBInvariant,
                    },
                    EdgeClass {
                        ends: ["v", "u3"],
                        class: BInvariant,
                    },
                ],
            ]
            .concat(),
        },
        "fig5-left" | "fig5-right" => CatalogEntry {
            name: if name == "fig5-left" {
                "fig5-left"
            } else {
                "fig5-right"
            },
            description: "cubic brick with a removable edge a-b giving three bricks",
            graph: if name == "fig5-left" {
                fig5_left()
            } else {
                fig5_right()
            },
            known_facts: vec![
                Order { value: 16 },
                Cubic { value: true },
                MatchingCovered { value: true },
                Brick { value: true },
                EssentiallyFourEdgeConnected { value: false },
                DeletionBCount {
                    ends: ["a", "b"],
                    value: 3,
                },
                DeletionLeaves {
                    ends: ["a", "b"],
                    names: vec!["k4", "k4", "k4"],
                },
                EdgeClass {
                    ends: ["a", "b"],
                    class: RemovableOther,
                },
            ],
        },
        "cubeplex" => CatalogEntry {
            name: "cubeplex",
            description: "12-vertex near-bipartite cubic brick",
            graph: cubeplex(),
            known_facts: [
                brick_basics(12, true),
                vec![NearBipartite { value: true }, Snark { value: false }],
            ]
            .concat(),
        },
        other => return Err(Error::UnknownCatalogName(other.to_string())),
    };
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves_to_a_connected_graph() {
        for name in NAMES {
            let e = entry(name).unwrap();
            assert_eq!(e.name, name);
            assert!(e.graph.is_connected(), "{name}");
            assert!(e.graph.vertices().all(|v| e.graph.label(v).is_some()));
        }
        assert_eq!(
            entry("twinplex").unwrap_err(),
            Error::UnknownCatalogName("twinplex".into())
        );
    }

    #[test]
    fn cubic_entries_are_cubic() {
        for name in NAMES {
            let g = graph(name).unwrap();
            assert_eq!(g.is_cubic(), name != "fig3", "{name}");
        }
    }
}
