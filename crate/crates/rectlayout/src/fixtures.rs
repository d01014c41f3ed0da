//! Hand-embedded test graphs used across the crate's tests and the demo.
//!
//! Rotations are clockwise; every fixture's outer face traces `l,t,r,b`.

use std::collections::BTreeMap;

use crate::graph::{ExtendedGraph, PlaneGraph};

pub fn build(rotation: &[(&str, &[&str])], corners: [&str; 4]) -> ExtendedGraph {
    let vertices: Vec<String> = rotation.iter().map(|(v, _)| v.to_string()).collect();
    let mut rot = BTreeMap::new();
    for (v, row) in rotation {
        rot.insert(v.to_string(), row.iter().map(|s| s.to_string()).collect());
    }
    let g = PlaneGraph::new(vertices, &rot).expect("fixture graph is well-formed");
    let c: Vec<_> = corners
        .iter()
        .map(|n| g.vid(n).expect("fixture corner exists"))
        .collect();
    ExtendedGraph::new(g, c[0], c[1], c[2], c[3]).expect("fixture corners distinct")
}

/// Smallest proper graph: one inner vertex adjacent to all four corners.
pub fn fix1() -> ExtendedGraph {
    build(
        &[
            ("l", &["t", "v", "b"]),
            ("t", &["r", "v", "l"]),
            ("r", &["b", "v", "t"]),
            ("b", &["l", "v", "r"]),
            ("v", &["l", "t", "r", "b"]),
        ],
        ["l", "t", "r", "b"],
    )
}

/// FIX-1 with the edge t-v replaced by a chord l-r drawn above v. The cycle
/// (l, v, r) separates t from b.
pub fn fix_chord() -> ExtendedGraph {
    build(
        &[
            ("l", &["t", "r", "v", "b"]),
            ("t", &["r", "l"]),
            ("r", &["b", "v", "l", "t"]),
            ("b", &["l", "v", "r"]),
            ("v", &["l", "r", "b"]),
        ],
        ["l", "t", "r", "b"],
    )
}

/// The 4-wheel: a degree-four center C inside the ring L, T, R, B, drawn as a
/// clockwise pinwheel.
pub fn fix_pin() -> ExtendedGraph {
    build(
        &[
            ("l", &["t", "T", "L", "b"]),
            ("t", &["r", "R", "T", "l"]),
            ("r", &["t", "b", "B", "R"]),
            ("b", &["B", "r", "l", "L"]),
            ("L", &["l", "T", "C", "B", "b"]),
            ("T", &["l", "t", "R", "C", "L"]),
            ("R", &["t", "r", "B", "C", "T"]),
            ("B", &["L", "C", "R", "r", "b"]),
            ("C", &["L", "T", "R", "B"]),
        ],
        ["l", "t", "r", "b"],
    )
}

/// A nontrivial separating four-cycle (L, T, R, B) enclosing the three-vertex
/// blob x, y, z inside a proper host.
pub fn fix_nest() -> ExtendedGraph {
    build(
        &[
            ("l", &["t", "T", "L", "b"]),
            ("t", &["r", "R", "T", "l"]),
            ("r", &["t", "b", "B", "R"]),
            ("b", &["B", "r", "l", "L"]),
            ("L", &["l", "T", "x", "z", "B", "b"]),
            ("T", &["l", "t", "R", "y", "x", "L"]),
            ("R", &["t", "r", "B", "z", "y", "T"]),
            ("B", &["L", "z", "R", "r", "b"]),
            ("x", &["L", "T", "y", "z"]),
            ("y", &["x", "T", "R", "z"]),
            ("z", &["L", "x", "y", "R", "B"]),
        ],
        ["l", "t", "r", "b"],
    )
}

/// Two nested nontrivial separating four-cycles: ring1 encloses ring2 which
/// encloses the blob; decomposition yields a three-piece chain.
pub fn fix_nest2() -> ExtendedGraph {
    build(
        &[
            ("l", &["t", "T", "L", "b"]),
            ("t", &["r", "R", "T", "l"]),
            ("r", &["t", "b", "B", "R"]),
            ("b", &["B", "r", "l", "L"]),
            ("L", &["l", "T", "T2", "L2", "B", "b"]),
            ("T", &["l", "t", "R", "R2", "T2", "L"]),
            ("R", &["t", "r", "B", "B2", "R2", "T"]),
            ("B", &["L", "L2", "B2", "R", "r", "b"]),
            ("L2", &["L", "T2", "x", "z", "B2", "B"]),
            ("T2", &["L", "T", "R2", "y", "x", "L2"]),
            ("R2", &["T", "R", "B2", "z", "y", "T2"]),
            ("B2", &["L2", "z", "R2", "R", "B"]),
            ("x", &["L2", "T2", "y", "z"]),
            ("y", &["x", "T2", "R2", "z"]),
            ("z", &["L2", "x", "y", "R2", "B2"]),
        ],
        ["l", "t", "r", "b"],
    )
}

/// A proper stack of three rectangles on the left wall side: u below v below
/// w, all touching both side walls.
pub fn stack3() -> ExtendedGraph {
    build(
        &[
            ("l", &["t", "w", "v", "u", "b"]),
            ("t", &["r", "w", "l"]),
            ("r", &["t", "b", "u", "v", "w"]),
            ("b", &["u", "r", "l"]),
            ("u", &["l", "v", "r", "b"]),
            ("v", &["l", "w", "r", "u"]),
            ("w", &["l", "t", "r", "v"]),
        ],
        ["l", "t", "r", "b"],
    )
}

/// The four-rectangle staircase: A over B on the left, E over D on the right,
/// B poking under E. One flippable edge (B-E).
pub fn staircase() -> ExtendedGraph {
    build(
        &[
            ("l", &["t", "A", "B", "b"]),
            ("t", &["r", "E", "A", "l"]),
            ("r", &["t", "b", "D", "E"]),
            ("b", &["B", "D", "r", "l"]),
            ("A", &["l", "t", "E", "B"]),
            ("B", &["l", "A", "E", "D", "b"]),
            ("D", &["B", "E", "r", "b"]),
            ("E", &["A", "t", "r", "D", "B"]),
        ],
        ["l", "t", "r", "b"],
    )
}
