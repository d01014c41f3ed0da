//! Independent brute-force reference implementations used by tests and the
//! acceptance suite. Everything here enumerates labelings by backtracking
//! over edge states with local pruning; none of it touches the flip engine,
//! the lattice index, or the constraint machinery it is used to check.

use crate::graph::{EIdx, ExtendedGraph, VId};
use crate::rel::{
    class_from, forced_corner_label, validate_rel, Color, EdgeClass, Label, RegularEdgeLabeling,
};
use std::sync::Arc;

fn class_distance(a: EdgeClass, b: EdgeClass) -> usize {
    let mut c = a;
    for step in 0..4 {
        if c == b {
            return step;
        }
        c = c.next();
    }
    unreachable!()
}

/// Partial feasibility of the block pattern at an inner vertex: consecutive
/// known classes must be reachable within the number of unknown slots between
/// them, and the total forward distance around the vertex must not exceed 4.
fn partial_blocks_feasible(g: &ExtendedGraph, labels: &[Option<Label>], v: VId) -> bool {
    let pg = &g.graph;
    let row = pg.rotation(v);
    let mut known: Vec<(usize, EdgeClass)> = Vec::new();
    for (i, &u) in row.iter().enumerate() {
        let e = pg.edge_index(v, u).unwrap();
        if let Some(l) = labels[e.idx()] {
            known.push((i, class_from(l, v)));
        }
    }
    if known.len() < 2 {
        return true;
    }
    let n = row.len();
    let mut total = 0;
    for k in 0..known.len() {
        let (i, a) = known[k];
        let (j, b) = known[(k + 1) % known.len()];
        let gap = (j + n - i) % n; // edges strictly between plus one boundary
        let gap = if gap == 0 { n } else { gap };
        let d = class_distance(a, b);
        if d > gap {
            return false;
        }
        total += d;
    }
    if known.len() == row.len() {
        total == 4
    } else {
        total <= 4
    }
}

/// Enumerates every regular edge labeling of `g` by assigning edge states in
/// a fixed order with pruning, filtering through [`validate_rel`]. Panics if
/// more than `cap` labelings are found.
pub fn enumerate_rels_bruteforce(g: &ExtendedGraph, cap: usize) -> Vec<RegularEdgeLabeling> {
    let pg = &g.graph;
    let host = Arc::new(g.clone());
    let mut labels: Vec<Option<Label>> = vec![None; pg.edge_count()];
    let mut free: Vec<EIdx> = Vec::new();
    for (i, &(u, v)) in pg.edges().iter().enumerate() {
        let e = EIdx(i as u32);
        let (cu, cv) = (g.corner_of(u), g.corner_of(v));
        match (cu, cv) {
            (Some(_), Some(_)) => {} // quad edge, unlabeled
            (Some(c), None) => labels[e.idx()] = Some(forced_corner_label(c, u, v)),
            (None, Some(c)) => labels[e.idx()] = Some(forced_corner_label(c, v, u)),
            (None, None) => free.push(e),
        }
    }

    let states = |e: EIdx| {
        let (u, v) = pg.edge(e);
        [
            Label { color: Color::Blue, head: u },
            Label { color: Color::Blue, head: v },
            Label { color: Color::Red, head: u },
            Label { color: Color::Red, head: v },
        ]
    };

    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        g: &ExtendedGraph,
        host: &Arc<ExtendedGraph>,
        free: &[EIdx],
        labels: &mut Vec<Option<Label>>,
        k: usize,
        states: &dyn Fn(EIdx) -> [Label; 4],
        out: &mut Vec<RegularEdgeLabeling>,
        cap: usize,
    ) {
        if k == free.len() {
            let rel = RegularEdgeLabeling::from_labels_arc(Arc::clone(host), labels.clone())
                .expect("shape ok");
            if validate_rel(&rel).ok {
                assert!(out.len() < cap, "brute-force labeling cap exceeded");
                out.push(rel);
            }
            return;
        }
        let e = free[k];
        let (u, v) = g.graph.edge(e);
        for s in states(e) {
            labels[e.idx()] = Some(s);
            if partial_blocks_feasible(g, labels, u) && partial_blocks_feasible(g, labels, v) {
                rec(g, host, free, labels, k + 1, states, out, cap);
            }
        }
        labels[e.idx()] = None;
    }
    let _ = &mut stack;
    rec(g, &host, &free, &mut labels, 0, &states, &mut out, cap);
    out.sort();
    out
}

/// True when a layout's labeling respects every forbidden edge label in
/// `forbidden`, given as (edge endpoints, disallowed label) pairs. Used as
/// the direct filter against which compiled constraints are checked.
pub fn satisfies_edge_forbids(
    rel: &RegularEdgeLabeling,
    forbidden: &[((VId, VId), Label)],
) -> bool {
    for &((u, v), lab) in forbidden {
        if rel.label_between(u, v) == Some(lab) {
            return false;
        }
    }
    true
}
