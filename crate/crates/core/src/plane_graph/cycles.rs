use std::collections::VecDeque;

use super::{Dart, GraphError, PlaneGraph, Subgraph, Vertex};

/// A 2- or 3-cycle given by its darts, oriented `darts[i]: vertices[i] -> vertices[i+1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleRef {
    pub vertices: Vec<Vertex>,
    pub darts: Vec<Dart>,
    /// A cycle dart (or its twin) whose face lies on the enclosed side.
    pub inside_dart: Dart,
    /// Vertices strictly inside, sorted.
    pub inside: Vec<Vertex>,
}

/// The two halves of a graph cut along a separating cycle.
#[derive(Clone, Debug)]
pub struct CycleSplit {
    /// Vertices strictly outside plus the cycle. For a 2-cycle only the
    /// edge of `darts[0]` survives from the cycle.
    pub outside: Subgraph,
    /// Vertices strictly inside plus the cycle; its outer face is the one
    /// bounded by the cycle.
    pub inside: Subgraph,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Side {
    Right,
    Left,
}

struct Sides {
    on_cycle: Vec<bool>,
    vertex: Vec<Option<Side>>,
    dart_at_cycle: Vec<Option<Side>>,
    outer: Option<Side>,
}

impl Sides {
    fn count(&self, side: Side) -> usize {
        self.vertex.iter().filter(|&&s| s == Some(side)).count()
    }

    fn vertices(&self, side: Side) -> Vec<Vertex> {
        (0..self.vertex.len()).filter(|&v| self.vertex[v] == Some(side)).collect()
    }
}

impl PlaneGraph {
    /// Splits the neighbourhood of a closed dart walk into its two sides.
    ///
    /// At every cycle vertex the darts strictly counterclockwise between the
    /// reversed incoming dart and the outgoing dart lie on the right of the
    /// walk; the rest lie on the left. Vertices inherit sides by search that
    /// never crosses the cycle.
    fn cycle_sides(&self, darts: &[Dart]) -> Sides {
        let k = darts.len();
        let mut on_cycle = vec![false; self.vertex_count()];
        for &d in darts {
            on_cycle[self.origin(d)] = true;
        }
        let mut dart_at_cycle = vec![None; self.dart_count()];
        for i in 0..k {
            let t = darts[i].twin();
            let o = darts[(i + 1) % k];
            let mut d = self.rot_next(t);
            while d != o {
                dart_at_cycle[d.0] = Some(Side::Right);
                d = self.rot_next(d);
            }
            let mut d = self.rot_next(o);
            while d != t {
                dart_at_cycle[d.0] = Some(Side::Left);
                d = self.rot_next(d);
            }
        }
        let mut vertex = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        for d in self.darts() {
            if let Some(side) = dart_at_cycle[d.0] {
                let h = self.head(d);
                if !on_cycle[h] && vertex[h].is_none() {
                    vertex[h] = Some(side);
                    queue.push_back(h);
                }
            }
        }
        while let Some(v) = queue.pop_front() {
            for &d in self.rotation(v) {
                let w = self.head(d);
                if !on_cycle[w] && vertex[w].is_none() {
                    vertex[w] = vertex[v];
                    queue.push_back(w);
                }
            }
        }
        let comp = self.component_ids();
        let c = comp[self.origin(darts[0])];
        let outer = self.outer.iter().copied().find(|&m| comp[self.origin(m)] == c).and_then(|m| {
            if darts.contains(&m) {
                Some(Side::Right)
            } else if darts.contains(&m.twin()) {
                Some(Side::Left)
            } else if on_cycle[self.origin(m)] {
                dart_at_cycle[m.0]
            } else {
                vertex[self.origin(m)]
            }
        });
        Sides { on_cycle, vertex, dart_at_cycle, outer }
    }

    /// Evaluates a dart cycle; `Some` iff both sides hold a vertex.
    pub fn separating_cycle(&self, darts: &[Dart]) -> Option<CycleRef> {
        let sides = self.cycle_sides(darts);
        let outer = sides.outer?;
        let inner = match outer {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        };
        if sides.count(outer) == 0 || sides.count(inner) == 0 {
            return None;
        }
        Some(CycleRef {
            vertices: darts.iter().map(|&d| self.origin(d)).collect(),
            darts: darts.to_vec(),
            inside_dart: if inner == Side::Right { darts[0] } else { darts[0].twin() },
            inside: sides.vertices(inner),
        })
    }

    /// All 2-cycles (`length == 2`) or 3-cycles as dart sequences, each edge
    /// set listed once.
    pub fn short_cycles(&self, length: usize) -> Vec<Vec<Dart>> {
        let mut out = Vec::new();
        for a in 0..self.vertex_count() {
            for &d1 in self.rotation(a) {
                let b = self.head(d1);
                if b <= a {
                    continue;
                }
                match length {
                    2 => {
                        for &d2 in self.rotation(a) {
                            if self.head(d2) == b && d1.edge() < d2.edge() {
                                out.push(vec![d1, d2.twin()]);
                            }
                        }
                    }
                    3 => {
                        for &d2 in self.rotation(b) {
                            let c = self.head(d2);
                            if c <= b {
                                continue;
                            }
                            for &d3 in self.rotation(c) {
                                if self.head(d3) == a {
                                    out.push(vec![d1, d2, d3]);
                                }
                            }
                        }
                    }
                    _ => {}
                }
            }
        }
        out
    }

    /// An innermost separating cycle of the given length (2 or 3): fewest
    /// enclosed vertices, then smallest sorted vertex tuple, then smallest
    /// darts.
    pub fn find_separating_cycle(&self, length: usize) -> Option<CycleRef> {
        self.short_cycles(length)
            .into_iter()
            .filter_map(|darts| self.separating_cycle(&darts))
            .min_by_key(|c| {
                let mut vs = c.vertices.clone();
                vs.sort();
                (c.inside.len(), vs, c.darts.clone())
            })
    }

    /// Cuts along a separating cycle.
    pub fn split_at_cycle(&self, cycle: &CycleRef) -> Result<CycleSplit, GraphError> {
        let sides = self.cycle_sides(&cycle.darts);
        let outer = sides.outer.ok_or(GraphError::NotSeparating)?;
        let inner = if outer == Side::Right { Side::Left } else { Side::Right };
        if sides.count(outer) == 0 || sides.count(inner) == 0 {
            return Err(GraphError::NotSeparating);
        }
        let n = self.vertex_count();
        let keep_out: Vec<bool> = (0..n).map(|v| sides.on_cycle[v] || sides.vertex[v] == Some(outer)).collect();
        let keep_in: Vec<bool> = (0..n).map(|v| sides.on_cycle[v] || sides.vertex[v] == Some(inner)).collect();

        let cycle_edges: Vec<usize> = cycle.darts.iter().map(|d| d.edge()).collect();
        // which side each edge lies on; cycle edges belong to both
        let edge_side = |e: usize| -> Option<Side> {
            if cycle_edges.contains(&e) {
                return None;
            }
            let d = Dart(2 * e);
            let (a, b) = (self.origin(d), self.head(d));
            if !sides.on_cycle[a] {
                sides.vertex[a]
            } else if !sides.on_cycle[b] {
                sides.vertex[b]
            } else {
                sides.dart_at_cycle[d.0]
            }
        };
        let m = self.edge_count();
        let mut out_edges: Vec<bool> = (0..m).map(|e| edge_side(e) != Some(inner)).collect();
        let mut in_edges: Vec<bool> = (0..m).map(|e| edge_side(e) != Some(outer)).collect();
        if cycle.darts.len() == 2 {
            out_edges[cycle_edges[1]] = false;
            in_edges[cycle_edges[1]] = false;
        }
        let outside = self.restrict(&keep_out, &out_edges, None);
        let facing_out = if outer == Side::Right { cycle.darts[0] } else { cycle.darts[0].twin() };
        let inside = self.restrict(&keep_in, &in_edges, Some(facing_out));
        Ok(CycleSplit { outside, inside })
    }
}
