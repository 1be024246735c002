//! Capital colourings: proper colourings in which every face has a unique
//! vertex of maximal colour.
//!
//! Colourings are `Vec<u32>` indexed by vertex; colours are positive and `0`
//! marks an uncoloured vertex.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::grotzsch::{three_colour_adjacency, ThreeColourError};
use crate::plane_graph::io::ParseError;
use crate::plane_graph::{Face, PlaneGraph, Vertex};
use crate::rbb::{self, Rbb, RbbError};

pub type Colouring = Vec<u32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CapitalError {
    #[error("vertex {0} is uncoloured")]
    UncolouredVertex(Vertex),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("no outer vertex leaves a graph without 2-faces when deleted")]
    NoRedVertex,
    #[error(transparent)]
    Rbb(#[from] RbbError),
    #[error(transparent)]
    ThreeColour(#[from] ThreeColourError),
}

/// Largest colour on a set of distinct vertices and how many of them carry it.
fn max_and_count(vertices: &[Vertex], col: &[u32]) -> Result<(u32, usize), CapitalError> {
    let mut best = (0, 0);
    for &v in vertices {
        match col[v] {
            0 => return Err(CapitalError::UncolouredVertex(v)),
            c if c > best.0 => best = (c, 1),
            c if c == best.0 => best.1 += 1,
            _ => {}
        }
    }
    Ok(best)
}

/// Maximal colour on a face and the number of distinct vertices attaining it.
pub fn face_max(g: &PlaneGraph, col: &[u32], face: &Face) -> Result<(u32, usize), CapitalError> {
    max_and_count(&g.face_vertices(face), col)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceViolation {
    pub vertices: Vec<Vertex>,
    pub max: u32,
    pub holders: Vec<Vertex>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CapitalReport {
    pub uncoloured: Vec<Vertex>,
    pub monochromatic_edges: Vec<(Vertex, Vertex)>,
    pub faces: Vec<FaceViolation>,
}

impl CapitalReport {
    pub fn is_valid(&self) -> bool {
        self.uncoloured.is_empty() && self.monochromatic_edges.is_empty() && self.faces.is_empty()
    }
}

/// Checks properness and unique face maxima. The outer face of a
/// disconnected graph is checked as one face.
pub fn validate_capital(g: &PlaneGraph, col: &[u32]) -> CapitalReport {
    let mut report = CapitalReport {
        uncoloured: (0..g.vertex_count()).filter(|&v| col[v] == 0).collect(),
        ..CapitalReport::default()
    };
    if !report.uncoloured.is_empty() {
        return report;
    }
    for (u, list) in g.adjacency().iter().enumerate() {
        for &v in list.iter().filter(|&&v| v > u) {
            if col[u] == col[v] {
                report.monochromatic_edges.push((u, v));
            }
        }
    }
    for region in g.regions() {
        let (max, count) = max_and_count(&region.vertices, col).expect("all coloured");
        if count > 1 {
            let holders = region.vertices.iter().copied().filter(|&v| col[v] == max).collect();
            report.faces.push(FaceViolation { vertices: region.vertices, max, holders });
        }
    }
    report
}

/// Intermediate data of [`colour5_traced`].
#[derive(Clone, Debug)]
pub struct Colour5Trace {
    /// The graph after removing 2-faces.
    pub collapsed: PlaneGraph,
    /// The outer vertex coloured red before the recursion.
    pub red_vertex: Vertex,
    pub rbb: Vec<Rbb>,
}

pub fn colour5(g: &PlaneGraph) -> Result<Colouring, CapitalError> {
    colour5_traced(g).map(|(c, _)| c)
}

/// Collapses 2-faces, colours one outer vertex red and the rest by the
/// recursive red/blue/black construction, 3-colours the black vertices and
/// maps blue to 4 and red to 5.
pub fn colour5_traced(g: &PlaneGraph) -> Result<(Colouring, Colour5Trace), CapitalError> {
    if g.vertex_count() == 0 {
        return Err(CapitalError::EmptyGraph);
    }
    let h = g.collapse_two_faces();
    let (v, sub) = h
        .outer_vertices()
        .into_iter()
        .map(|v| (v, h.delete_vertex(v).expect("vertex exists")))
        .find(|(_, sub)| sub.graph.two_face_count() == 0)
        .ok_or(CapitalError::NoRedVertex)?;
    let sub_col = rbb::lemma3_unrooted(&sub.graph)?;
    let mut rbb_col = vec![Rbb::Black; h.vertex_count()];
    for (local, &p) in sub.to_parent.iter().enumerate() {
        rbb_col[p] = sub_col[local];
    }
    rbb_col[v] = Rbb::Red;
    debug_assert!(faces_have_single_top(&h, &rbb_col));

    let black: Vec<Vertex> = (0..h.vertex_count()).filter(|&u| rbb_col[u] == Rbb::Black).collect();
    let black_graph = h.induced(&black);
    let three = three_colour_adjacency(&black_graph.graph.adjacency())?;
    let mut col = vec![0u32; g.vertex_count()];
    for (u, c) in col.iter_mut().enumerate() {
        *c = match rbb_col[u] {
            Rbb::Red => 5,
            Rbb::Blue => 4,
            Rbb::Black => 0,
        };
    }
    for (local, &p) in black_graph.to_parent.iter().enumerate() {
        col[p] = three[local] as u32;
    }
    Ok((col, Colour5Trace { collapsed: h, red_vertex: v, rbb: rbb_col }))
}

/// Every face has exactly one red vertex, or none and exactly one blue.
pub fn faces_have_single_top(g: &PlaneGraph, col: &[Rbb]) -> bool {
    g.regions().iter().all(|r| {
        let red = r.vertices.iter().filter(|&&v| col[v] == Rbb::Red).count();
        let blue = r.vertices.iter().filter(|&&v| col[v] == Rbb::Blue).count();
        red == 1 || (red == 0 && blue == 1)
    })
}

/// Per-vertex lists of allowed colours, each sorted, deduplicated and
/// nonempty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<u32>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ListError {
    #[error("list of vertex {0} is empty")]
    Empty(Vertex),
    #[error("list of vertex {0} contains 0")]
    ZeroColour(Vertex),
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<u32>>) -> Result<ListAssignment, ListError> {
        let mut lists = lists;
        for (v, l) in lists.iter_mut().enumerate() {
            l.sort_unstable();
            l.dedup();
            if l.is_empty() {
                return Err(ListError::Empty(v));
            }
            if l[0] == 0 {
                return Err(ListError::ZeroColour(v));
            }
        }
        Ok(ListAssignment { lists })
    }

    /// Every vertex gets `1..=k`.
    pub fn uniform(n: usize, k: u32) -> ListAssignment {
        ListAssignment { lists: vec![(1..=k).collect(); n] }
    }

    pub fn list(&self, v: Vertex) -> &[u32] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// `{"0":[1,2],"1":[2,3]}`; every vertex must appear.
    pub fn to_json(&self) -> String {
        let map: BTreeMap<usize, &Vec<u32>> = self.lists.iter().enumerate().collect();
        serde_json::to_string(&map).expect("lists serialize")
    }

    pub fn from_json(text: &str, n: usize) -> Result<ListAssignment, ParseError> {
        let map: BTreeMap<usize, Vec<u32>> = serde_json::from_str(text)?;
        let mut lists = vec![Vec::new(); n];
        for (v, l) in map {
            if v >= n {
                return Err(ParseError::Format(format!("list given for unknown vertex {v}")));
            }
            lists[v] = l;
        }
        ListAssignment::new(lists).map_err(|e| ParseError::Format(e.to_string()))
    }
}

/// `{"0":1,"1":2}`.
pub fn colouring_to_json(col: &[u32]) -> String {
    let map: BTreeMap<usize, u32> = col.iter().copied().enumerate().collect();
    serde_json::to_string(&map).expect("colouring serializes")
}

/// Vertices missing from the map stay uncoloured (`0`).
pub fn colouring_from_json(text: &str, n: usize) -> Result<Colouring, ParseError> {
    let map: BTreeMap<usize, u32> = serde_json::from_str(text)?;
    let mut col = vec![0; n];
    for (v, c) in map {
        if v >= n {
            return Err(ParseError::Format(format!("colour given for unknown vertex {v}")));
        }
        if c == 0 {
            return Err(ParseError::Format(format!("vertex {v} has colour 0; colours are positive")));
        }
        col[v] = c;
    }
    Ok(col)
}
