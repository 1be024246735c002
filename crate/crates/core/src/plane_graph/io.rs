//! JSON graph files.
//!
//! ```text
//! {"vertices":N,"rotations":[[[w,k],...],...],"outer":[u,v,k]}
//! ```
//!
//! `rotations[v]` lists the neighbours of `v` counterclockwise; `[w,k]` is the
//! `k`-th edge between `v` and `w`. `outer` names a dart `u -> v` (occurrence
//! `k`) lying on the outer face; it is `null` for edgeless graphs. Graphs with
//! several components may add `"outer_more"`, one dart per further
//! component; components without a dart get their largest face.
//!
//! The canonical form numbers parallel edges in order of first appearance
//! (vertex order, then rotation order) and is written without whitespace.
//! Parsing a canonical file and writing it again reproduces the same bytes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{DartRef, GraphError, PlaneGraph};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: usize,
    rotations: Vec<Vec<(usize, usize)>>,
    outer: Option<DartRef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    outer_more: Vec<DartRef>,
}

impl PlaneGraph {
    pub fn to_json(&self) -> String {
        let marks: Vec<DartRef> = self.outer_marks().iter().map(|&d| self.dart_ref(d)).collect();
        let file = GraphFile {
            vertices: self.vertex_count(),
            rotations: self.rotation_spec(),
            outer: marks.first().copied(),
            outer_more: marks.iter().skip(1).copied().collect(),
        };
        serde_json::to_string(&file).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<PlaneGraph, ParseError> {
        let file: GraphFile = serde_json::from_str(text)?;
        if file.rotations.len() != file.vertices {
            return Err(ParseError::Format(format!(
                "\"vertices\" is {} but {} rotation lists are given",
                file.vertices,
                file.rotations.len()
            )));
        }
        let has_edges = file.rotations.iter().any(|r| !r.is_empty());
        if has_edges && file.outer.is_none() {
            return Err(ParseError::Format("\"outer\" is required when the graph has edges".into()));
        }
        let hints: Vec<DartRef> = file.outer.into_iter().chain(file.outer_more).collect();
        Ok(PlaneGraph::from_rotations(&file.rotations, &hints)?)
    }
}
