//! Construction of one regular edge labeling of a proper extended graph.
//!
//! The construction works on the angular structure of the embedding. Around
//! an inner vertex a valid labeling has exactly four angles where the edge
//! class advances (incoming blue -> outgoing red -> outgoing blue -> incoming
//! red -> incoming blue); angles of faces that contain a corner are forced to
//! advance, and each inner face with three inner vertices has exactly one
//! angle that does not. Choosing that angle for every such face is a
//! capacitated matching (vertex v absorbs deg(v) - 4 non-advancing angles).
//! Any solution yields class sequences around every vertex; anchoring them at
//! the forced corner-edge labels and propagating across edges produces the
//! labeling, which is then checked by `validate_rel`.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{EIdx, ExtendedGraph, VId};
use crate::oracle::enumerate_rels_bruteforce;
use crate::rel::{
    class_from, forced_corner_label, validate_rel, Color, EdgeClass, Label, RegularEdgeLabeling,
};

#[derive(Debug, Error)]
pub enum InitError {
    #[error("graph fails extended-graph validation; no labeling exists")]
    Improper,
    #[error("internal: angular matching infeasible")]
    Matching,
    #[error("internal: class propagation conflict")]
    Propagation,
    #[error("internal: constructed labeling failed validation")]
    Validation,
}

struct Angles {
    /// face id per dart (v, rotation position of the successor edge).
    face_of_dart: HashMap<(VId, VId), usize>,
    /// for each face: its vertex list.
    faces: Vec<Vec<VId>>,
    outer: usize,
}

fn angles(g: &ExtendedGraph) -> Angles {
    let pg = &g.graph;
    let mut face_of_dart = HashMap::new();
    let mut faces = Vec::new();
    for v in pg.vertices() {
        for &u in pg.rotation(v) {
            if face_of_dart.contains_key(&(v, u)) {
                continue;
            }
            let id = faces.len();
            let face = pg.face_from(v, u);
            let m = face.len();
            for i in 0..m {
                face_of_dart.insert((face[i], face[(i + 1) % m]), id);
            }
            faces.push(face);
        }
    }
    let corner_set = g.corners();
    let outer = faces
        .iter()
        .position(|f| f.len() == 4 && f.iter().all(|v| corner_set.contains(v)))
        .expect("validated host has the corner quadrilateral face");
    Angles { face_of_dart, faces, outer }
}

/// Builds one regular edge labeling of `g`. `g` must pass
/// [`crate::graph::validate_extended`]; on proper graphs a labeling always
/// exists and is found in polynomial time. As a safety net, small graphs fall
/// back to exhaustive search if the angular construction rejects them.
pub fn initial_rel(g: &ExtendedGraph) -> Result<RegularEdgeLabeling, InitError> {
    match initial_rel_angular(g) {
        Ok(rel) => Ok(rel),
        Err(e) => {
            if g.inner_count() <= 10 {
                let all = enumerate_rels_bruteforce(g, 1_000_000);
                if let Some(first) = all.into_iter().next() {
                    return Ok(first);
                }
            }
            Err(e)
        }
    }
}

fn initial_rel_angular(g: &ExtendedGraph) -> Result<RegularEdgeLabeling, InitError> {
    let pg = &g.graph;
    for v in g.inner_vertices() {
        if pg.degree(v) < 4 {
            return Err(InitError::Improper);
        }
    }
    let ang = angles(g);

    // Classify faces; free faces (all three vertices inner) choose one
    // non-advancing angle at one of their vertices.
    let mut free_faces: Vec<usize> = Vec::new();
    for (id, face) in ang.faces.iter().enumerate() {
        if id == ang.outer {
            continue;
        }
        if face.iter().all(|v| !g.is_corner(*v)) {
            free_faces.push(id);
        }
    }

    // Capacitated matching face -> vertex, with each inner vertex expanded
    // into deg(v) - 4 slots and augmenting-path search over slots.
    let mut slot_owner: Vec<VId> = Vec::new();
    let mut slots_of: HashMap<VId, Vec<usize>> = HashMap::new();
    for v in g.inner_vertices() {
        for _ in 0..(pg.degree(v) - 4) {
            slots_of.entry(v).or_default().push(slot_owner.len());
            slot_owner.push(v);
        }
    }
    let mut slot_face: Vec<Option<usize>> = vec![None; slot_owner.len()];
    let mut matched: HashMap<usize, VId> = HashMap::new();
    for &f in &free_faces {
        let mut visited = vec![false; slot_owner.len()];
        if !augment(f, &ang, &slots_of, &mut slot_face, &mut visited) {
            return Err(InitError::Matching);
        }
    }
    for (s, f) in slot_face.iter().enumerate() {
        if let Some(f) = f {
            matched.insert(*f, slot_owner[s]);
        }
    }

    // Transition flags per angle. Angle at v with cw successor position i is
    // keyed by the dart (v, rotation[v][(i+1) % d]) through face_of_dart; we
    // store per vertex a boolean per rotation position meaning "the class
    // advances between edge i and edge i+1".
    let mut advances: HashMap<VId, Vec<bool>> = HashMap::new();
    for v in g.inner_vertices() {
        let d = pg.degree(v);
        let row = pg.rotation(v);
        let mut adv = vec![true; d];
        for i in 0..d {
            let dart = (v, row[(i + 1) % d]);
            let f = ang.face_of_dart[&dart];
            if matched.get(&f) == Some(&v) {
                adv[i] = false;
            }
        }
        if adv.iter().filter(|a| **a).count() != 4 {
            return Err(InitError::Matching);
        }
        advances.insert(v, adv);
    }

    // Class of the edge at rotation position 0, per vertex; propagate from
    // corner-forced edges across inner edges.
    let mut base: HashMap<VId, EdgeClass> = HashMap::new();
    let class_at = |base: EdgeClass, adv: &[bool], pos: usize| -> EdgeClass {
        let mut c = base;
        for i in 0..pos {
            if adv[i] {
                c = c.next();
            }
        }
        c
    };
    let base_from = |class_at_pos: EdgeClass, adv: &[bool], pos: usize| -> EdgeClass {
        // invert: advance from pos 0 to pos equals known
        let mut steps = 0;
        for a in adv.iter().take(pos) {
            if *a {
                steps += 1;
            }
        }
        let mut c = class_at_pos;
        for _ in 0..(4 - steps % 4) % 4 {
            c = c.next();
        }
        c
    };

    let mut queue: VecDeque<VId> = VecDeque::new();
    for v in g.inner_vertices() {
        let row = pg.rotation(v);
        for (pos, &u) in row.iter().enumerate() {
            if let Some(corner) = g.corner_of(u) {
                let forced = forced_corner_label(corner, u, v);
                let cls = class_from(forced, v);
                let b = base_from(cls, &advances[&v], pos);
                if let Some(prev) = base.get(&v) {
                    if *prev != b {
                        return Err(InitError::Propagation);
                    }
                } else {
                    base.insert(v, b);
                    queue.push_back(v);
                }
            }
        }
    }

    while let Some(v) = queue.pop_front() {
        let row = pg.rotation(v).to_vec();
        let bv = base[&v];
        for (pos, &u) in row.iter().enumerate() {
            if g.is_corner(u) {
                continue;
            }
            let cls_v = class_at(bv, &advances[&v], pos);
            // class as seen from the other endpoint
            let cls_u = match cls_v {
                EdgeClass::InBlue => EdgeClass::OutBlue,
                EdgeClass::OutBlue => EdgeClass::InBlue,
                EdgeClass::InRed => EdgeClass::OutRed,
                EdgeClass::OutRed => EdgeClass::InRed,
            };
            let posu = pg
                .rotation(u)
                .iter()
                .position(|&x| x == v)
                .expect("symmetric rotation");
            let bu = base_from(cls_u, &advances[&u], posu);
            if let Some(prev) = base.get(&u) {
                if *prev != bu {
                    return Err(InitError::Propagation);
                }
            } else {
                base.insert(u, bu);
                queue.push_back(u);
            }
        }
    }
    if base.len() != g.inner_count() {
        return Err(InitError::Propagation);
    }

    // materialize labels
    let mut labels: Vec<Option<Label>> = vec![None; pg.edge_count()];
    for (i, &(u, v)) in pg.edges().iter().enumerate() {
        let e = EIdx(i as u32);
        let (cu, cv) = (g.corner_of(u), g.corner_of(v));
        let label = match (cu, cv) {
            (Some(_), Some(_)) => None,
            (Some(c), None) => Some(forced_corner_label(c, u, v)),
            (None, Some(c)) => Some(forced_corner_label(c, v, u)),
            (None, None) => {
                let posu = pg.rotation(u).iter().position(|&x| x == v).unwrap();
                let cls = class_at(base[&u], &advances[&u], posu);
                Some(match cls {
                    EdgeClass::InBlue => Label { color: Color::Blue, head: u },
                    EdgeClass::OutBlue => Label { color: Color::Blue, head: v },
                    EdgeClass::InRed => Label { color: Color::Red, head: u },
                    EdgeClass::OutRed => Label { color: Color::Red, head: v },
                })
            }
        };
        labels[e.idx()] = label;
    }
    let rel = RegularEdgeLabeling::from_labels_arc(Arc::new(g.clone()), labels)
        .map_err(|_| InitError::Validation)?;
    if !validate_rel(&rel).ok {
        return Err(InitError::Validation);
    }
    Ok(rel)
}

fn augment(
    f: usize,
    ang: &Angles,
    slots_of: &HashMap<VId, Vec<usize>>,
    slot_face: &mut Vec<Option<usize>>,
    visited: &mut Vec<bool>,
) -> bool {
    let verts: Vec<VId> = ang.faces[f].clone();
    for v in verts {
        let Some(slots) = slots_of.get(&v) else { continue };
        for &s in slots {
            if visited[s] {
                continue;
            }
            visited[s] = true;
            match slot_face[s] {
                None => {
                    slot_face[s] = Some(f);
                    return true;
                }
                Some(other) => {
                    if augment(other, ang, slots_of, slot_face, visited) {
                        slot_face[s] = Some(f);
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::validate_extended;

    #[test]
    fn angular_construction_succeeds_on_fixtures() {
        for g in [
            fixtures::fix1(),
            fixtures::fix_pin(),
            fixtures::fix_nest(),
            fixtures::fix_nest2(),
            fixtures::stack3(),
            fixtures::staircase(),
        ] {
            assert!(validate_extended(&g).ok);
            let rel = initial_rel_angular(&g).expect("angular construction works");
            assert!(validate_rel(&rel).ok);
        }
    }
}
