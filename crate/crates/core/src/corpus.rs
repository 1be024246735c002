//! The fixed corpus of generated plane graphs used by the acceptance suite
//! and the `corpus` command.

use serde::Serialize;

use crate::generators::{generate, GenerateError};
use crate::plane_graph::PlaneGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    pub family: &'static str,
    pub params: Vec<u64>,
    /// Known capital chromatic number, where established independently.
    pub expected_chi: Option<u32>,
}

impl CorpusEntry {
    pub fn graph(&self) -> Result<PlaneGraph, GenerateError> {
        generate(self.family, &self.params)
    }
}

fn entry(family: &'static str, params: &[u64], expected_chi: Option<u32>) -> CorpusEntry {
    let name = if family == "apollonian" {
        format!("apollonian-d{}-s{}", params[0], params[1])
    } else if params.is_empty() {
        family.to_string()
    } else {
        let p: Vec<String> = params.iter().map(|p| p.to_string()).collect();
        format!("{family}-{}", p.join("x"))
    };
    CorpusEntry { name, family, params: params.to_vec(), expected_chi }
}

/// All entries, sorted by name.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = vec![
        entry("grid", &[1, 1], Some(1)),
        entry("grid", &[1, 2], Some(2)),
        entry("grid", &[1, 3], None),
        entry("grid", &[2, 2], Some(3)),
        entry("grid", &[3, 3], None),
        entry("grid", &[4, 5], None),
        entry("grid", &[7, 8], None),
        entry("cycle", &[2], None),
        entry("cycle", &[3], Some(3)),
        entry("cycle", &[4], Some(3)),
        entry("cycle", &[5], None),
        entry("cycle", &[7], None),
        entry("cycle", &[12], None),
        entry("wheel", &[3], Some(4)),
        entry("wheel", &[4], None),
        entry("wheel", &[5], None),
        entry("wheel", &[8], None),
        entry("wheel", &[15], None),
        entry("prism", &[3], None),
        entry("prism", &[5], None),
        entry("prism", &[10], None),
        entry("antiprism", &[4], None),
        entry("antiprism", &[8], None),
        entry("antiprism", &[15], None),
        entry("octahedron", &[], None),
        entry("icosahedron", &[], None),
        entry("apollonian", &[3, 1], None),
        entry("apollonian", &[10, 2], None),
        entry("apollonian", &[25, 3], None),
        entry("apollonian", &[57, 4], None),
        entry("nested_2gon", &[1], None),
        entry("nested_2gon", &[2], None),
        entry("nested_2gon", &[4], None),
        entry("nested_2gon", &[10], None),
        entry("stellated_triangles", &[1], None),
        entry("stellated_triangles", &[2], None),
        entry("stellated_triangles", &[3], None),
        entry("stellated_triangles", &[10], None),
        entry("parallel_edge_chain", &[1], None),
        entry("parallel_edge_chain", &[3], None),
        entry("parallel_edge_chain", &[6], None),
    ];
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

pub fn find(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}
