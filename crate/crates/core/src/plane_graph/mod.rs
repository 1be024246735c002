//! Dart-based combinatorial embeddings of loopless plane multigraphs.
//!
//! Every edge `e` owns the two darts `2e` and `2e + 1`, so `twin(d) = d ^ 1`.
//! Each vertex stores its darts in counterclockwise order. Faces are the
//! orbits of `φ(d) = rot(twin(d))`; with this convention the face of a dart
//! is the face on its right-hand side, bounded faces are traced clockwise
//! and the outer face counterclockwise.
//!
//! Disconnected graphs are drawn with every component in the outer face of
//! the others. One dart per component with edges marks the component's outer
//! orbit; the outer face of the whole graph is the union of those orbits plus
//! all isolated vertices.

mod cycles;
mod edit;
pub mod io;

pub use cycles::{CycleRef, CycleSplit};

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;

/// A half-edge. The two darts of edge `e` are `2e` and `2e + 1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Dart {
    #[inline]
    pub fn twin(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    #[inline]
    pub fn edge(self) -> usize {
        self.0 >> 1
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("inconsistent rotation system: {0}")]
    InconsistentRotation(String),
    #[error("embedding is not planar: component containing vertex {vertex} has V - E + F = {euler}")]
    EulerViolation { vertex: Vertex, euler: i64 },
    #[error("missing element: {0}")]
    MissingElement(String),
    #[error("insertion slots do not lie on a common face")]
    SlotsNotCofacial,
    #[error("cycle is not separating")]
    NotSeparating,
    #[error("bad outer face designation: {0}")]
    BadOuter(String),
}

/// One face orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Darts in orbit order, starting from the smallest dart id.
    pub darts: Vec<Dart>,
    pub outer: bool,
}

impl Face {
    /// Number of edge incidences; bridges count twice.
    pub fn degree(&self) -> usize {
        self.darts.len()
    }
}

/// Faces of a graph together with the dart → face lookup.
#[derive(Clone, Debug)]
pub struct FaceTable {
    pub faces: Vec<Face>,
    pub face_of: Vec<usize>,
}

impl FaceTable {
    pub fn face_of_dart(&self, d: Dart) -> usize {
        self.face_of[d.0]
    }
}

/// Vertex set of a face as seen by colouring constraints. Inner faces map to
/// one region each; all outer orbits and isolated vertices form a single
/// outer region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub vertices: Vec<Vertex>,
    pub outer: bool,
}

/// A graph obtained from a parent by removing vertices, with the map back to
/// parent vertex ids (`to_parent[new] = old`, increasing).
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: PlaneGraph,
    pub to_parent: Vec<Vertex>,
}

impl Subgraph {
    /// Position of a parent vertex in this subgraph, if kept.
    pub fn local(&self, parent: Vertex) -> Option<Vertex> {
        self.to_parent.binary_search(&parent).ok()
    }
}

/// Per-vertex counterclockwise neighbour lists. The pair `(w, k)` in the list
/// of `v` denotes the `k`-th edge joining `v` and `w`.
pub type RotationSpec = Vec<Vec<(Vertex, usize)>>;

/// Names a dart in a [`RotationSpec`]: from `.0` to `.1` along occurrence `.2`.
pub type DartRef = (Vertex, Vertex, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    rotations: Vec<Vec<Dart>>,
    origin: Vec<Vertex>,
    position: Vec<usize>,
    outer: Vec<Dart>,
}

impl PlaneGraph {
    /// The graph with `n` isolated vertices.
    pub fn edgeless(n: usize) -> PlaneGraph {
        PlaneGraph {
            rotations: vec![Vec::new(); n],
            origin: Vec::new(),
            position: Vec::new(),
            outer: Vec::new(),
        }
    }

    /// Builds a graph from counterclockwise neighbour lists.
    ///
    /// `outer` holds at most one hint dart per connected component; the
    /// first one designates the outer face of its component. Components
    /// without a hint get their largest face orbit (ties to the smallest
    /// dart id) as outer.
    pub fn from_rotations(spec: &RotationSpec, outer: &[DartRef]) -> Result<PlaneGraph, GraphError> {
        let n = spec.len();
        // (min, max, occurrence) -> edge id and the dart assigned so far
        let mut seen: std::collections::HashMap<(Vertex, Vertex, usize), (usize, Vertex, bool)> =
            std::collections::HashMap::new();
        let mut origin: Vec<Vertex> = Vec::new();
        let mut rotations: Vec<Vec<Dart>> = vec![Vec::new(); n];
        let mut edge_count = 0usize;
        for (v, list) in spec.iter().enumerate() {
            for &(w, k) in list {
                if w >= n {
                    return Err(GraphError::InconsistentRotation(format!(
                        "vertex {v} names unknown neighbour {w}"
                    )));
                }
                if w == v {
                    return Err(GraphError::InconsistentRotation(format!("loop at vertex {v}")));
                }
                let key = (v.min(w), v.max(w), k);
                let dart = match seen.get_mut(&key) {
                    None => {
                        let e = edge_count;
                        edge_count += 1;
                        origin.push(v);
                        origin.push(w);
                        seen.insert(key, (e, v, false));
                        Dart(2 * e)
                    }
                    Some(entry) => {
                        if entry.2 || entry.1 == v {
                            return Err(GraphError::InconsistentRotation(format!(
                                "edge {{{}, {}}} occurrence {} listed more than once at an endpoint",
                                key.0, key.1, k
                            )));
                        }
                        entry.2 = true;
                        Dart(2 * entry.0 + 1)
                    }
                };
                rotations[v].push(dart);
            }
        }
        if let Some((key, _)) = seen.iter().find(|(_, e)| !e.2) {
            return Err(GraphError::InconsistentRotation(format!(
                "edge {{{}, {}}} occurrence {} is listed at only one endpoint",
                key.0, key.1, key.2
            )));
        }
        let mut g = PlaneGraph::from_parts(rotations, origin);
        let mut hints = Vec::new();
        for &(u, v, k) in outer {
            let d = g.find_dart(u, v, k, spec).ok_or_else(|| {
                GraphError::BadOuter(format!("no dart {u} -> {v} with occurrence {k}"))
            })?;
            hints.push(d);
        }
        g.assign_outer(&hints)?;
        g.check_euler()?;
        Ok(g)
    }

    fn find_dart(&self, u: Vertex, v: Vertex, k: usize, spec: &RotationSpec) -> Option<Dart> {
        let list = spec.get(u)?;
        let pos = list.iter().position(|&(w, occ)| w == v && occ == k)?;
        Some(self.rotations[u][pos])
    }

    /// Assembles a graph from per-vertex dart lists (dart ids `0..2E`).
    fn from_parts(rotations: Vec<Vec<Dart>>, origin: Vec<Vertex>) -> PlaneGraph {
        let mut position = vec![0; origin.len()];
        for list in &rotations {
            for (i, d) in list.iter().enumerate() {
                position[d.0] = i;
            }
        }
        PlaneGraph { rotations, origin, position, outer: Vec::new() }
    }

    /// Installs outer marks: explicit hints first, then a default for every
    /// remaining component with edges.
    fn assign_outer(&mut self, hints: &[Dart]) -> Result<(), GraphError> {
        let comp = self.component_ids();
        let table = self.face_table_unmarked();
        let ncomp = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut mark: Vec<Option<Dart>> = vec![None; ncomp];
        for &h in hints {
            let c = comp[self.origin[h.0]];
            if mark[c].is_some() {
                return Err(GraphError::BadOuter(format!(
                    "two outer hints in the component of vertex {}",
                    self.origin[h.0]
                )));
            }
            mark[c] = Some(h);
        }
        let mut best: Vec<Option<(usize, Dart)>> = vec![None; ncomp];
        for f in &table.faces {
            let c = comp[self.origin[f.darts[0].0]];
            let cand = (f.degree(), f.darts[0]);
            let better = match best[c] {
                None => true,
                Some((deg, d)) => cand.0 > deg || (cand.0 == deg && cand.1 < d),
            };
            if better {
                best[c] = Some(cand);
            }
        }
        self.outer = self.ordered_marks(&comp, |c| mark[c].or(best[c].map(|b| b.1)));
        Ok(())
    }

    /// Collects one mark per component with edges, ordered by component
    /// (components are numbered by smallest vertex).
    fn ordered_marks(&self, comp: &[usize], pick: impl Fn(usize) -> Option<Dart>) -> Vec<Dart> {
        let ncomp = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut has_edges = vec![false; ncomp];
        for v in 0..self.vertex_count() {
            if !self.rotations[v].is_empty() {
                has_edges[comp[v]] = true;
            }
        }
        (0..ncomp).filter(|&c| has_edges[c]).filter_map(pick).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        (0..self.origin.len()).map(Dart)
    }

    #[inline]
    pub fn origin(&self, d: Dart) -> Vertex {
        self.origin[d.0]
    }

    #[inline]
    pub fn head(&self, d: Dart) -> Vertex {
        self.origin[d.twin().0]
    }

    pub fn endpoints(&self, edge: usize) -> (Vertex, Vertex) {
        (self.origin[2 * edge], self.origin[2 * edge + 1])
    }

    /// Darts leaving `v` in counterclockwise order.
    pub fn rotation(&self, v: Vertex) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn position(&self, d: Dart) -> usize {
        self.position[d.0]
    }

    /// Counterclockwise successor of `d` around its origin.
    #[inline]
    pub fn rot_next(&self, d: Dart) -> Dart {
        let list = &self.rotations[self.origin[d.0]];
        list[(self.position[d.0] + 1) % list.len()]
    }

    #[inline]
    pub fn rot_prev(&self, d: Dart) -> Dart {
        let list = &self.rotations[self.origin[d.0]];
        list[(self.position[d.0] + list.len() - 1) % list.len()]
    }

    /// Next dart along the face on the right of `d`.
    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        self.rot_next(d.twin())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotations[v].len()
    }

    /// Distinct neighbours of `v`, sorted.
    pub fn neighbours(&self, v: Vertex) -> Vec<Vertex> {
        let set: BTreeSet<Vertex> = self.rotations[v].iter().map(|&d| self.head(d)).collect();
        set.into_iter().collect()
    }

    /// Simple adjacency lists (parallel edges collapsed).
    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        (0..self.vertex_count()).map(|v| self.neighbours(v)).collect()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rotations[u].iter().any(|&d| self.head(d) == v)
    }

    pub fn has_parallel_edges(&self) -> bool {
        (0..self.vertex_count()).any(|v| self.neighbours(v).len() != self.degree(v))
    }

    /// Vertex triples spanning a 3-cycle, each sorted, in lexicographic order.
    pub fn triangles(&self) -> Vec<[Vertex; 3]> {
        let adj = self.adjacency();
        let mut out = Vec::new();
        for a in 0..self.vertex_count() {
            for &b in adj[a].iter().filter(|&&b| b > a) {
                for &c in adj[b].iter().filter(|&&c| c > b) {
                    if adj[a].binary_search(&c).is_ok() {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Outer marks, one per component with edges.
    pub fn outer_marks(&self) -> &[Dart] {
        &self.outer
    }

    /// The designated outer dart of the first component with edges.
    pub fn outer_dart(&self) -> Option<Dart> {
        self.outer.first().copied()
    }

    fn face_table_unmarked(&self) -> FaceTable {
        let mut face_of = vec![usize::MAX; self.dart_count()];
        let mut faces = Vec::new();
        for start in self.darts() {
            if face_of[start.0] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                face_of[d.0] = id;
                darts.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            faces.push(Face { darts, outer: false });
        }
        FaceTable { faces, face_of }
    }

    /// Face orbits with their outer flags. The edgeless graph has a single
    /// dartless outer face.
    pub fn face_table(&self) -> FaceTable {
        let mut table = self.face_table_unmarked();
        for &m in &self.outer {
            let f = table.face_of[m.0];
            table.faces[f].outer = true;
        }
        if self.dart_count() == 0 {
            table.faces.push(Face { darts: Vec::new(), outer: true });
        }
        table
    }

    pub fn faces(&self) -> Vec<Face> {
        self.face_table().faces
    }

    /// Distinct vertices on a face, in first-visit order.
    pub fn face_vertices(&self, face: &Face) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(face.darts.len());
        for &d in &face.darts {
            let v = self.origin(d);
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    /// Vertex sets of faces for colouring constraints.
    pub fn regions(&self) -> Vec<Region> {
        let table = self.face_table();
        let mut regions = Vec::new();
        let mut outer: BTreeSet<Vertex> = BTreeSet::new();
        for f in &table.faces {
            let vs = self.face_vertices(f);
            if f.outer {
                outer.extend(vs);
            } else {
                regions.push(Region { vertices: vs, outer: false });
            }
        }
        for v in 0..self.vertex_count() {
            if self.degree(v) == 0 {
                outer.insert(v);
            }
        }
        if self.vertex_count() > 0 || self.dart_count() == 0 {
            regions.push(Region { vertices: outer.into_iter().collect(), outer: true });
        }
        regions
    }

    /// Vertices incident with the outer face (isolated vertices included).
    pub fn outer_vertices(&self) -> Vec<Vertex> {
        let mut set = BTreeSet::new();
        for &m in &self.outer {
            let mut d = m;
            loop {
                set.insert(self.origin(d));
                d = self.face_next(d);
                if d == m {
                    break;
                }
            }
        }
        for v in 0..self.vertex_count() {
            if self.degree(v) == 0 {
                set.insert(v);
            }
        }
        set.into_iter().collect()
    }

    /// Darts lying on outer orbits.
    pub fn outer_darts(&self) -> Vec<Dart> {
        let mut out = Vec::new();
        for &m in &self.outer {
            let mut d = m;
            loop {
                out.push(d);
                d = self.face_next(d);
                if d == m {
                    break;
                }
            }
        }
        out.sort();
        out
    }

    /// True if some edge joining `u` and `v` borders the outer face.
    pub fn edge_on_outer_face(&self, u: Vertex, v: Vertex) -> bool {
        self.outer_darts()
            .into_iter()
            .any(|d| (self.origin(d) == u && self.head(d) == v) || (self.origin(d) == v && self.head(d) == u))
    }

    /// Component index per vertex; components are numbered in order of their
    /// smallest vertex.
    pub fn component_ids(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &d in &self.rotations[v] {
                    let w = self.head(d);
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Vertex sets of connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let comp = self.component_ids();
        let k = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); k];
        for (v, &c) in comp.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Checks V - E + F = 2 on every component with edges.
    pub fn check_euler(&self) -> Result<(), GraphError> {
        let comp = self.component_ids();
        let k = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut v = vec![0i64; k];
        let mut e2 = vec![0i64; k];
        let mut f = vec![0i64; k];
        for (x, &c) in comp.iter().enumerate() {
            v[c] += 1;
            e2[c] += self.degree(x) as i64;
        }
        for face in self.face_table_unmarked().faces {
            f[comp[self.origin(face.darts[0])]] += 1;
        }
        for c in 0..k {
            if e2[c] == 0 {
                continue;
            }
            let euler = v[c] - e2[c] / 2 + f[c];
            if euler != 2 {
                let vertex = comp.iter().position(|&x| x == c).unwrap_or(0);
                return Err(GraphError::EulerViolation { vertex, euler });
            }
        }
        Ok(())
    }

    /// Occurrence index of every edge: parallel edges of a vertex pair are
    /// numbered in order of first appearance when scanning vertices in id
    /// order and each rotation counterclockwise from its first dart.
    fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![usize::MAX; self.edge_count()];
        let mut counter: std::collections::HashMap<(Vertex, Vertex), usize> = std::collections::HashMap::new();
        for list in &self.rotations {
            for &d in list {
                if occ[d.edge()] != usize::MAX {
                    continue;
                }
                let (a, b) = (self.origin(d), self.head(d));
                let c = counter.entry((a.min(b), a.max(b))).or_insert(0);
                occ[d.edge()] = *c;
                *c += 1;
            }
        }
        occ
    }

    /// Counterclockwise neighbour lists with occurrence indices; the inverse
    /// of [`PlaneGraph::from_rotations`].
    pub fn rotation_spec(&self) -> RotationSpec {
        let occ = self.occurrences();
        self.rotations
            .iter()
            .map(|list| list.iter().map(|&d| (self.head(d), occ[d.edge()])).collect())
            .collect()
    }

    /// Describes a dart in rotation-spec terms.
    pub fn dart_ref(&self, d: Dart) -> DartRef {
        (self.origin(d), self.head(d), self.occurrences()[d.edge()])
    }
}
