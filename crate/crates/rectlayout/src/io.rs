//! JSON document formats for graphs, labelings, geometry, posets and
//! constraints.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{ExtendedGraph, GraphError, PlaneGraph};
use crate::rel::{Color, Label, RegularEdgeLabeling};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("graph: {0}")]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Invalid(String),
}

/// Graph document: vertices, clockwise rotations, optional corner assignment.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    pub rotation: BTreeMap<String, Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corners: Option<BTreeMap<String, String>>,
}

impl GraphDoc {
    pub fn parse(text: &str) -> Result<GraphDoc, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_plane_graph(&self) -> Result<PlaneGraph, IoError> {
        Ok(PlaneGraph::new(self.vertices.clone(), &self.rotation)?)
    }

    pub fn to_extended_graph(&self) -> Result<ExtendedGraph, IoError> {
        let g = self.to_plane_graph()?;
        let corners = self
            .corners
            .as_ref()
            .ok_or_else(|| IoError::Invalid("graph document has no corners".into()))?;
        let mut ids = Vec::new();
        for key in ["l", "t", "r", "b"] {
            let name = corners
                .get(key)
                .ok_or_else(|| IoError::Invalid(format!("missing corner {key:?}")))?;
            let v = g
                .vid(name)
                .ok_or_else(|| GraphError::UnknownCorner(name.clone()))?;
            ids.push(v);
        }
        Ok(ExtendedGraph::new(g, ids[0], ids[1], ids[2], ids[3])?)
    }

    pub fn from_extended(g: &ExtendedGraph) -> GraphDoc {
        let pg = &g.graph;
        let vertices: Vec<String> = pg.vertices().map(|v| pg.name(v).to_string()).collect();
        let rotation = pg
            .vertices()
            .map(|v| {
                (
                    pg.name(v).to_string(),
                    pg.rotation(v).iter().map(|u| pg.name(*u).to_string()).collect(),
                )
            })
            .collect();
        let mut corners = BTreeMap::new();
        for (key, c) in [
            ("l", crate::graph::Corner::L),
            ("t", crate::graph::Corner::T),
            ("r", crate::graph::Corner::R),
            ("b", crate::graph::Corner::B),
        ] {
            corners.insert(key.to_string(), pg.name(g.corner(c)).to_string());
        }
        GraphDoc {
            vertices,
            rotation,
            corners: Some(corners),
        }
    }
}

/// One labeled edge of a regular edge labeling.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeLabelDoc {
    pub u: String,
    pub v: String,
    pub color: String,
    pub head: String,
}

/// Serializes a labeling as the per-edge record list from the spec'd format.
pub fn rel_to_doc(rel: &RegularEdgeLabeling) -> Vec<EdgeLabelDoc> {
    let g = rel.host();
    let pg = &g.graph;
    let mut out = Vec::new();
    for (ei, &(u, v)) in pg.edges().iter().enumerate() {
        if let Some(label) = rel.label(crate::graph::EIdx(ei as u32)) {
            out.push(EdgeLabelDoc {
                u: pg.name(u).to_string(),
                v: pg.name(v).to_string(),
                color: match label.color {
                    Color::Red => "red".to_string(),
                    Color::Blue => "blue".to_string(),
                },
                head: pg.name(label.head).to_string(),
            });
        }
    }
    out
}

/// Reads a labeling document against its host graph.
pub fn rel_from_doc(
    g: &ExtendedGraph,
    doc: &[EdgeLabelDoc],
) -> Result<RegularEdgeLabeling, IoError> {
    let pg = &g.graph;
    let mut labels = vec![None; pg.edge_count()];
    for item in doc {
        let u = pg
            .vid(&item.u)
            .ok_or_else(|| IoError::Invalid(format!("unknown vertex {:?}", item.u)))?;
        let v = pg
            .vid(&item.v)
            .ok_or_else(|| IoError::Invalid(format!("unknown vertex {:?}", item.v)))?;
        let e = pg
            .edge_index(u, v)
            .ok_or_else(|| IoError::Invalid(format!("no edge {}-{}", item.u, item.v)))?;
        let head = pg
            .vid(&item.head)
            .filter(|h| *h == u || *h == v)
            .ok_or_else(|| IoError::Invalid(format!("bad head {:?}", item.head)))?;
        let color = match item.color.as_str() {
            "red" => Color::Red,
            "blue" => Color::Blue,
            other => return Err(IoError::Invalid(format!("bad color {other:?}"))),
        };
        if labels[e.idx()].is_some() {
            return Err(IoError::Invalid(format!(
                "edge {}-{} labeled twice",
                item.u, item.v
            )));
        }
        labels[e.idx()] = Some(Label { color, head });
    }
    RegularEdgeLabeling::from_labels(g.clone(), labels)
        .map_err(|e| IoError::Invalid(e.to_string()))
}

/// Rectangle geometry document: per inner vertex, grid extents.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RectDoc {
    pub x0: i64,
    pub y0: i64,
    pub x1: i64,
    pub y1: i64,
}

pub type GeometryDoc = BTreeMap<String, RectDoc>;
