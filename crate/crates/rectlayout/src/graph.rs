//! Plane graphs with a fixed combinatorial embedding, extended graphs with
//! corner assignments, and separating-cycle detection.
//!
//! The embedding is given as a clockwise rotation system per vertex; faces are
//! derived from it. With clockwise rotations the face-tracing rule used here
//! walks every inner face in counterclockwise vertex order and the outer face
//! in clockwise order, so a valid corner assignment reads `l,t,r,b` along the
//! traced outer face.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Internal vertex index, stable within one `PlaneGraph`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VId(pub u32);

impl VId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// Internal edge index into `PlaneGraph::edges`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EIdx(pub u32);

impl EIdx {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("duplicate vertex name {0:?}")]
    DuplicateVertex(String),
    #[error("rotation mentions unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex {0:?} has no rotation entry")]
    MissingRotation(String),
    #[error("self-loop at vertex {0:?}")]
    SelfLoop(String),
    #[error("vertex {1:?} listed twice in rotation of {0:?}")]
    DuplicateNeighbor(String, String),
    #[error("rotation asymmetric: {1:?} in rotation of {0:?} but not vice versa")]
    AsymmetricRotation(String, String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("corner {0:?} is not a vertex of the graph")]
    UnknownCorner(String),
    #[error("corners are not four distinct vertices")]
    CornersNotDistinct,
}

/// A connected simple plane graph, embedded via clockwise rotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    names: Vec<String>,
    lookup: BTreeMap<String, VId>,
    rotation: Vec<Vec<VId>>,
    /// position of `u` in `rotation[v]`, keyed per vertex by neighbor.
    rot_pos: Vec<HashMap<VId, usize>>,
    /// canonical edge list, each pair sorted, list sorted.
    edges: Vec<(VId, VId)>,
    edge_idx: HashMap<(VId, VId), EIdx>,
}

impl PlaneGraph {
    /// Builds a plane graph from vertex names and clockwise neighbor lists.
    /// Checks simplicity, rotation symmetry and connectivity; planarity of the
    /// rotation system is a properness concern and is checked by
    /// [`validate_extended`] via Euler's formula.
    pub fn new(
        mut vertices: Vec<String>,
        rotation_by_name: &BTreeMap<String, Vec<String>>,
    ) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        // vertex ids are assigned in lexicographic name order so that every
        // id-based ordering downstream is deterministic on identifiers
        vertices.sort();
        let mut lookup = BTreeMap::new();
        for (i, name) in vertices.iter().enumerate() {
            if lookup.insert(name.clone(), VId(i as u32)).is_some() {
                return Err(GraphError::DuplicateVertex(name.clone()));
            }
        }
        let mut rotation = vec![Vec::new(); vertices.len()];
        for name in &vertices {
            let row = rotation_by_name
                .get(name)
                .ok_or_else(|| GraphError::MissingRotation(name.clone()))?;
            let v = lookup[name];
            let mut seen = BTreeSet::new();
            for nb in row {
                let u = *lookup
                    .get(nb)
                    .ok_or_else(|| GraphError::UnknownVertex(nb.clone()))?;
                if u == v {
                    return Err(GraphError::SelfLoop(name.clone()));
                }
                if !seen.insert(u) {
                    return Err(GraphError::DuplicateNeighbor(name.clone(), nb.clone()));
                }
                rotation[v.idx()].push(u);
            }
        }
        for name in rotation_by_name.keys() {
            if !lookup.contains_key(name) {
                return Err(GraphError::UnknownVertex(name.clone()));
            }
        }
        // symmetry
        for v in 0..vertices.len() {
            for &u in &rotation[v] {
                if !rotation[u.idx()].contains(&VId(v as u32)) {
                    return Err(GraphError::AsymmetricRotation(
                        vertices[v].clone(),
                        vertices[u.idx()].clone(),
                    ));
                }
            }
        }
        // connectivity
        let mut seen = vec![false; vertices.len()];
        let mut queue = VecDeque::from([VId(0)]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &rotation[v.idx()] {
                if !seen[u.idx()] {
                    seen[u.idx()] = true;
                    queue.push_back(u);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(GraphError::Disconnected);
        }

        let mut edges = BTreeSet::new();
        for v in 0..vertices.len() {
            for &u in &rotation[v] {
                let (a, b) = if VId(v as u32) < u {
                    (VId(v as u32), u)
                } else {
                    (u, VId(v as u32))
                };
                edges.insert((a, b));
            }
        }
        let edges: Vec<_> = edges.into_iter().collect();
        let edge_idx = edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, EIdx(i as u32)))
            .collect();
        let rot_pos = rotation
            .iter()
            .map(|row| row.iter().enumerate().map(|(i, &u)| (u, i)).collect())
            .collect();
        Ok(PlaneGraph {
            names: vertices,
            lookup,
            rotation,
            rot_pos,
            edges,
            edge_idx,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: VId) -> &str {
        &self.names[v.idx()]
    }

    pub fn vid(&self, name: &str) -> Option<VId> {
        self.lookup.get(name).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VId> + '_ {
        (0..self.names.len() as u32).map(VId)
    }

    pub fn rotation(&self, v: VId) -> &[VId] {
        &self.rotation[v.idx()]
    }

    pub fn degree(&self, v: VId) -> usize {
        self.rotation[v.idx()].len()
    }

    pub fn adjacent(&self, u: VId, v: VId) -> bool {
        self.rot_pos[u.idx()].contains_key(&v)
    }

    pub fn edges(&self) -> &[(VId, VId)] {
        &self.edges
    }

    pub fn edge_index(&self, u: VId, v: VId) -> Option<EIdx> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edge_idx.get(&key).copied()
    }

    pub fn edge(&self, e: EIdx) -> (VId, VId) {
        self.edges[e.idx()]
    }

    /// Successor of `u` in the clockwise rotation at `v`.
    fn cw_next(&self, v: VId, u: VId) -> VId {
        let row = &self.rotation[v.idx()];
        let i = self.rot_pos[v.idx()][&u];
        row[(i + 1) % row.len()]
    }

    /// All faces of the embedding, each as the traced cyclic vertex sequence.
    /// Inner faces come out counterclockwise, the outer face clockwise.
    /// Face order and starting vertices are canonical.
    pub fn faces(&self) -> Vec<Vec<VId>> {
        let mut used: BTreeSet<(VId, VId)> = BTreeSet::new();
        let mut faces = Vec::new();
        for v in self.vertices() {
            for &u in self.rotation(v) {
                if used.contains(&(v, u)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (v, u);
                loop {
                    used.insert((a, b));
                    face.push(a);
                    let c = self.cw_next(b, a);
                    a = b;
                    b = c;
                    if (a, b) == (v, u) {
                        break;
                    }
                }
                faces.push(canonical_cycle(face));
            }
        }
        faces.sort();
        faces
    }

    /// Face traced from the directed edge (a, b); the face on the side that
    /// the tracing rule assigns to this dart.
    pub fn face_from(&self, a: VId, b: VId) -> Vec<VId> {
        let mut face = Vec::new();
        let (mut x, mut y) = (a, b);
        loop {
            face.push(x);
            let z = self.cw_next(y, x);
            x = y;
            y = z;
            if (x, y) == (a, b) {
                break;
            }
        }
        face
    }

    /// The third vertex of the triangular face traced from dart (a, b), if
    /// that face is a triangle.
    pub fn triangle_apex(&self, a: VId, b: VId) -> Option<VId> {
        let c = self.cw_next(b, a);
        if c != a && self.cw_next(c, b) == a {
            Some(c)
        } else {
            None
        }
    }

    /// Neighbors of `v` strictly between `from` and `to` in clockwise order.
    pub fn arc_between(&self, v: VId, from: VId, to: VId) -> Vec<VId> {
        let row = &self.rotation[v.idx()];
        let i = self.rot_pos[v.idx()][&from];
        let mut out = Vec::new();
        let mut k = (i + 1) % row.len();
        while row[k] != to {
            out.push(row[k]);
            k = (k + 1) % row.len();
        }
        out
    }
}

/// Rotates a cyclic sequence so the smallest element is first. Direction is
/// preserved; two traversals of the same face in the same direction yield the
/// same canonical form.
pub fn canonical_cycle(mut cycle: Vec<VId>) -> Vec<VId> {
    let min_pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| **v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    cycle.rotate_left(min_pos);
    cycle
}

/// Corner roles in the fixed order used throughout: left, top, right, bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Corner {
    L,
    T,
    R,
    B,
}

pub const CORNERS: [Corner; 4] = [Corner::L, Corner::T, Corner::R, Corner::B];

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Corner::L => "l",
            Corner::T => "t",
            Corner::R => "r",
            Corner::B => "b",
        };
        write!(f, "{s}")
    }
}

/// A plane graph plus a corner assignment: four outer vertices designated
/// left, top, right and bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedGraph {
    pub graph: PlaneGraph,
    /// indexed by [`Corner`] order l, t, r, b.
    corners: [VId; 4],
}

impl ExtendedGraph {
    pub fn new(graph: PlaneGraph, l: VId, t: VId, r: VId, b: VId) -> Result<Self, GraphError> {
        let corners = [l, t, r, b];
        let distinct: BTreeSet<_> = corners.iter().collect();
        if distinct.len() != 4 {
            return Err(GraphError::CornersNotDistinct);
        }
        Ok(ExtendedGraph { graph, corners })
    }

    pub fn corner(&self, c: Corner) -> VId {
        match c {
            Corner::L => self.corners[0],
            Corner::T => self.corners[1],
            Corner::R => self.corners[2],
            Corner::B => self.corners[3],
        }
    }

    pub fn corners(&self) -> [VId; 4] {
        self.corners
    }

    pub fn corner_of(&self, v: VId) -> Option<Corner> {
        CORNERS.into_iter().find(|&c| self.corner(c) == v)
    }

    pub fn is_corner(&self, v: VId) -> bool {
        self.corners.contains(&v)
    }

    pub fn inner_vertices(&self) -> impl Iterator<Item = VId> + '_ {
        self.graph.vertices().filter(move |v| !self.is_corner(*v))
    }

    pub fn inner_count(&self) -> usize {
        self.graph.vertex_count() - 4
    }

    /// The four outer-quadrilateral edges l-t, t-r, r-b, b-l, if present.
    pub fn quad_edges(&self) -> Vec<EIdx> {
        let [l, t, r, b] = self.corners;
        [(l, t), (t, r), (r, b), (b, l)]
            .iter()
            .filter_map(|&(u, v)| self.graph.edge_index(u, v))
            .collect()
    }

    /// True for edges that carry a labeling: every edge except the four
    /// outer-quadrilateral corner-corner edges.
    pub fn is_labeled_edge(&self, e: EIdx) -> bool {
        let (u, v) = self.graph.edge(e);
        !(self.is_corner(u) && self.is_corner(v))
    }
}

/// Machine-readable properness violations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "code")]
pub enum Violation {
    #[serde(rename = "NOT_PLANAR")]
    NotPlanar { vertices: usize, edges: usize, faces: usize },
    #[serde(rename = "OUTER_NOT_QUAD")]
    OuterNotQuad { detail: String },
    #[serde(rename = "CORNER_ORDER")]
    CornerOrder { outer_face: Vec<String> },
    #[serde(rename = "NON_TRIANGULAR_FACE")]
    NonTriangularFace { face: Vec<String> },
    #[serde(rename = "SEPARATING_3_CYCLE")]
    Separating3Cycle { cycle: Vec<String> },
    #[serde(rename = "NO_INNER_VERTICES")]
    NoInnerVertices,
    #[serde(rename = "CORNER_WITHOUT_INNER_NEIGHBOR")]
    CornerWithoutInnerNeighbor { corner: String },
}

impl Violation {
    pub fn code(&self) -> &'static str {
        match self {
            Violation::NotPlanar { .. } => "NOT_PLANAR",
            Violation::OuterNotQuad { .. } => "OUTER_NOT_QUAD",
            Violation::CornerOrder { .. } => "CORNER_ORDER",
            Violation::NonTriangularFace { .. } => "NON_TRIANGULAR_FACE",
            Violation::Separating3Cycle { .. } => "SEPARATING_3_CYCLE",
            Violation::NoInnerVertices => "NO_INNER_VERTICES",
            Violation::CornerWithoutInnerNeighbor { .. } => "CORNER_WITHOUT_INNER_NEIGHBOR",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// A cycle of length 3 or 4 together with the vertices strictly inside it.
/// "Inside" is the side of the cycle not containing the outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleRecord {
    /// cyclic vertex sequence, canonical rotation.
    pub vertices: Vec<VId>,
    /// vertices strictly inside, sorted.
    pub interior: Vec<VId>,
    /// vertices strictly outside, sorted.
    pub exterior: Vec<VId>,
}

impl CycleRecord {
    pub fn interior_size(&self) -> usize {
        self.interior.len()
    }

    pub fn is_separating(&self) -> bool {
        !self.interior.is_empty() && !self.exterior.is_empty()
    }

    /// A separating four-cycle is nontrivial when more than one vertex lies
    /// inside it.
    pub fn is_nontrivial(&self) -> bool {
        self.is_separating() && self.interior.len() > 1
    }
}

fn names(g: &PlaneGraph, vs: &[VId]) -> Vec<String> {
    vs.iter().map(|v| g.name(*v).to_string()).collect()
}

/// Checks every extended-graph invariant and reports all failures.
pub fn validate_extended(g: &ExtendedGraph) -> ValidationReport {
    let mut violations = Vec::new();
    let pg = &g.graph;
    let faces = pg.faces();

    // Euler's formula detects rotation systems of positive genus.
    let (v, e, f) = (pg.vertex_count(), pg.edge_count(), faces.len());
    if v + f != e + 2 {
        violations.push(Violation::NotPlanar { vertices: v, edges: e, faces: f });
        return ValidationReport { ok: false, violations };
    }

    if g.inner_count() == 0 {
        violations.push(Violation::NoInnerVertices);
    }

    // The outer face must be the corner quadrilateral, traced l,t,r,b.
    let [l, t, r, b] = g.corners();
    let corner_set: BTreeSet<VId> = g.corners().iter().copied().collect();
    let outer = faces
        .iter()
        .find(|face| face.len() == 4 && face.iter().all(|v| corner_set.contains(v)));
    match outer {
        None => violations.push(Violation::OuterNotQuad {
            detail: "no quadrilateral face on the four corners".into(),
        }),
        Some(face) => {
            let want = canonical_cycle(vec![l, t, r, b]);
            if *face != want {
                violations.push(Violation::CornerOrder { outer_face: names(pg, face) });
            }
            for other in &faces {
                if other != face && other.len() != 3 {
                    violations.push(Violation::NonTriangularFace { face: names(pg, other) });
                }
            }
        }
    }
    if outer.is_none() {
        // Still report non-triangular faces, skipping the largest face once.
        let mut skipped = false;
        for face in &faces {
            if face.len() != 3 {
                if !skipped && face.len() == 4 {
                    skipped = true;
                    continue;
                }
                violations.push(Violation::NonTriangularFace { face: names(pg, face) });
            }
        }
    }

    for c in CORNERS {
        let cv = g.corner(c);
        if !pg.rotation(cv).iter().any(|&u| !g.is_corner(u)) {
            violations.push(Violation::CornerWithoutInnerNeighbor {
                corner: pg.name(cv).to_string(),
            });
        }
    }

    for cyc in separating_cycles(g, 3) {
        if cyc.is_separating() {
            violations.push(Violation::Separating3Cycle {
                cycle: names(pg, &cyc.vertices),
            });
        }
    }

    let ok = violations.is_empty();
    ValidationReport { ok, violations }
}

/// Enumerates all simple cycles of length `k` (3 or 4) and classifies each
/// side of the cycle. Cycles that fail to split the remaining vertices into
/// well-defined sides (only possible on non-planar input) are skipped.
pub fn separating_cycles(g: &ExtendedGraph, k: usize) -> Vec<CycleRecord> {
    assert!(k == 3 || k == 4);
    let pg = &g.graph;
    let mut seen: BTreeSet<Vec<(VId, VId)>> = BTreeSet::new();
    let mut out = Vec::new();

    let mut consider = |cycle: Vec<VId>, out: &mut Vec<CycleRecord>| {
        let mut key: Vec<(VId, VId)> = cycle
            .iter()
            .zip(cycle.iter().cycle().skip(1))
            .map(|(&a, &b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        key.sort();
        if !seen.insert(key) {
            return;
        }
        if let Some(rec) = classify_cycle(g, cycle) {
            out.push(rec);
        }
    };

    if k == 3 {
        for (u, v) in pg.edges().iter().copied() {
            for &w in pg.rotation(u) {
                if w > v && pg.adjacent(w, v) {
                    consider(vec![u, v, w], &mut out);
                }
            }
        }
    } else {
        // every 4-cycle is determined by an opposite (diagonal) vertex pair
        // plus two of their common neighbors
        let n = pg.vertex_count() as u32;
        for a in 0..n {
            let a = VId(a);
            for c in (a.0 + 1)..n {
                let c = VId(c);
                let common: Vec<VId> = pg
                    .rotation(a)
                    .iter()
                    .copied()
                    .filter(|&x| pg.adjacent(x, c))
                    .collect();
                for i in 0..common.len() {
                    for j in (i + 1)..common.len() {
                        consider(vec![a, common[i], c, common[j]], &mut out);
                    }
                }
            }
        }
    }
    out.sort_by(|x, y| x.vertices.cmp(&y.vertices));
    out
}

/// Splits the graph at `cycle` into the two sides of the embedding and
/// orients them: interior is the side not containing the outer face.
fn classify_cycle(g: &ExtendedGraph, cycle: Vec<VId>) -> Option<CycleRecord> {
    let pg = &g.graph;
    let k = cycle.len();
    let on_cycle: BTreeSet<VId> = cycle.iter().copied().collect();
    if on_cycle.len() != k {
        return None;
    }

    // Seeds for side A: at each cycle vertex, the neighbors strictly between
    // the next and the previous cycle vertex in clockwise order.
    let mut side_a_seeds: BTreeSet<VId> = BTreeSet::new();
    let mut side_b_seeds: BTreeSet<VId> = BTreeSet::new();
    for i in 0..k {
        let prev = cycle[(i + k - 1) % k];
        let v = cycle[i];
        let next = cycle[(i + 1) % k];
        for u in pg.arc_between(v, next, prev) {
            if !on_cycle.contains(&u) {
                side_a_seeds.insert(u);
            }
        }
        for u in pg.arc_between(v, prev, next) {
            if !on_cycle.contains(&u) {
                side_b_seeds.insert(u);
            }
        }
    }

    // Flood each side without crossing the cycle.
    let mut side = vec![0u8; pg.vertex_count()]; // 0 unknown, 1 A, 2 B, 3 cycle
    for &v in &on_cycle {
        side[v.idx()] = 3;
    }
    let mut flood = |seeds: &BTreeSet<VId>, tag: u8, side: &mut Vec<u8>| -> bool {
        let mut queue: VecDeque<VId> = VecDeque::new();
        for &s in seeds {
            if side[s.idx()] == 3 {
                continue;
            }
            if side[s.idx()] != 0 && side[s.idx()] != tag {
                return false;
            }
            if side[s.idx()] == 0 {
                side[s.idx()] = tag;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &u in pg.rotation(v) {
                match side[u.idx()] {
                    0 => {
                        side[u.idx()] = tag;
                        queue.push_back(u);
                    }
                    3 => {}
                    s if s == tag => {}
                    _ => return false,
                }
            }
        }
        true
    };
    if !flood(&side_a_seeds, 1, &mut side) {
        return None;
    }
    if !flood(&side_b_seeds, 2, &mut side) {
        return None;
    }

    let mut a: Vec<VId> = Vec::new();
    let mut b: Vec<VId> = Vec::new();
    for v in pg.vertices() {
        match side[v.idx()] {
            1 => a.push(v),
            2 => b.push(v),
            _ => {}
        }
    }

    // The side containing an off-cycle corner is the exterior. The outer quad
    // itself has an empty exterior.
    let off_corner_side = g
        .corners()
        .iter()
        .find(|c| !on_cycle.contains(c))
        .map(|c| side[c.idx()]);
    let (interior, exterior) = match off_corner_side {
        Some(1) => (b, a),
        Some(2) => (a, b),
        // all four corners on the cycle: the outer quad; everything inside
        _ => {
            if a.is_empty() {
                (b, a)
            } else {
                (a, b)
            }
        }
    };
    Some(CycleRecord {
        vertices: canonical_cycle(cycle),
        interior,
        exterior,
    })
}

/// All separating four-cycles of `g`, trivial and nontrivial, in canonical
/// order.
pub fn find_separating_four_cycles(g: &ExtendedGraph) -> Vec<CycleRecord> {
    separating_cycles(g, 4)
        .into_iter()
        .filter(|c| c.is_separating())
        .collect()
}

/// All corner assignments of a plane graph that pass [`validate_extended`].
///
/// Every quadrilateral face is tried as the outer face; for each, the four
/// cyclic rotations of its traced order are the candidate assignments.
/// Reflections are excluded: flipping the embedding is not consistent with a
/// fixed rotation system.
pub fn enumerate_corner_assignments(g: &PlaneGraph) -> Vec<ExtendedGraph> {
    let mut out = Vec::new();
    for face in g.faces() {
        if face.len() != 4 {
            continue;
        }
        for shift in 0..4 {
            let l = face[shift];
            let t = face[(shift + 1) % 4];
            let r = face[(shift + 2) % 4];
            let b = face[(shift + 3) % 4];
            if let Ok(ext) = ExtendedGraph::new(g.clone(), l, t, r, b) {
                if validate_extended(&ext).ok {
                    out.push(ext);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fix1_is_proper() {
        let g = fixtures::fix1();
        let report = validate_extended(&g);
        assert!(report.ok, "{:?}", report.violations);
    }

    #[test]
    fn fix1_faces() {
        let g = fixtures::fix1();
        let faces = g.graph.faces();
        assert_eq!(faces.len(), 5);
        let quad = faces.iter().filter(|f| f.len() == 4).count();
        let tris = faces.iter().filter(|f| f.len() == 3).count();
        assert_eq!((quad, tris), (1, 4));
    }

    #[test]
    fn single_triangle_has_two_faces() {
        let mut rot = BTreeMap::new();
        rot.insert("a".to_string(), vec!["c".to_string(), "b".to_string()]);
        rot.insert("b".to_string(), vec!["a".to_string(), "c".to_string()]);
        rot.insert("c".to_string(), vec!["b".to_string(), "a".to_string()]);
        let g = PlaneGraph::new(vec!["a".into(), "b".into(), "c".into()], &rot).unwrap();
        assert_eq!(g.faces().len(), 2);
    }

    #[test]
    fn chord_fixture_has_separating_3_cycle() {
        let g = fixtures::fix_chord();
        let report = validate_extended(&g);
        assert!(!report.ok);
        let sep: Vec<_> = report
            .violations
            .iter()
            .filter(|v| v.code() == "SEPARATING_3_CYCLE")
            .collect();
        assert_eq!(sep.len(), 1);
        match sep[0] {
            Violation::Separating3Cycle { cycle } => {
                // the chord l-r closes a triangle with the bottom corner that
                // has v inside and t outside
                let set: BTreeSet<_> = cycle.iter().map(|s| s.as_str()).collect();
                assert_eq!(set, BTreeSet::from(["b", "l", "r"]));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn fix1_corner_assignments() {
        let g = fixtures::fix1();
        let assignments = enumerate_corner_assignments(&g.graph);
        assert_eq!(assignments.len(), 4);
        // all pass validation and are pairwise distinct
        for a in &assignments {
            assert!(validate_extended(a).ok);
        }
        let keys: BTreeSet<_> = assignments.iter().map(|a| a.corners()).collect();
        assert_eq!(keys.len(), 4);
    }

    #[test]
    fn triangle_outer_face_has_no_assignment() {
        let mut rot = BTreeMap::new();
        rot.insert("a".to_string(), vec!["c".to_string(), "b".to_string()]);
        rot.insert("b".to_string(), vec!["a".to_string(), "c".to_string()]);
        rot.insert("c".to_string(), vec!["b".to_string(), "a".to_string()]);
        let g = PlaneGraph::new(vec!["a".into(), "b".into(), "c".into()], &rot).unwrap();
        assert!(enumerate_corner_assignments(&g).is_empty());
    }

    #[test]
    fn fix1_separating_four_cycles_trivial() {
        let g = fixtures::fix1();
        let cycles = find_separating_four_cycles(&g);
        for c in &cycles {
            assert_eq!(c.interior_size(), 1);
            assert!(!c.is_nontrivial());
        }
    }

    #[test]
    fn fix_nest_nontrivial_cycles() {
        let g = fixtures::fix_nest();
        assert!(validate_extended(&g).ok);
        let nontrivial: Vec<_> = find_separating_four_cycles(&g)
            .into_iter()
            .filter(|c| c.is_nontrivial())
            .collect();
        // the designed ring with its 3-vertex interior, plus the inner cycle
        // through z that every 3-vertex interior forces (one of its vertices
        // is adjacent to an opposite ring pair)
        assert_eq!(nontrivial.len(), 2);
        let sizes: Vec<usize> = nontrivial.iter().map(|c| c.interior_size()).collect();
        assert!(sizes.contains(&3));
        assert!(sizes.contains(&2));
        let ring = nontrivial.iter().find(|c| c.interior_size() == 3).unwrap();
        let names: BTreeSet<_> = ring.vertices.iter().map(|v| g.graph.name(*v)).collect();
        assert_eq!(names, BTreeSet::from(["B", "L", "R", "T"]));
    }

    #[test]
    fn fix_pin_is_proper() {
        let g = fixtures::fix_pin();
        let report = validate_extended(&g);
        assert!(report.ok, "{:?}", report.violations);
    }

    #[test]
    fn structural_errors_are_distinct_from_violations() {
        let mut rot = BTreeMap::new();
        rot.insert("a".to_string(), vec!["b".to_string()]);
        rot.insert("b".to_string(), vec![]);
        let err = PlaneGraph::new(vec!["a".into(), "b".into()], &rot);
        assert!(matches!(err, Err(GraphError::AsymmetricRotation(_, _))));
    }
}
