//! Non-proper red/blue/black colourings with per-face red/blue constraints.
//!
//! [`check_conditions`] reports violations of the seven conditions,
//! [`oracle_rbb`] finds a colouring by constraint search and [`lemma3_rbb`]
//! builds one recursively by cutting along separating 2-cycles and
//! triangles, calling the search only on pieces without them.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::{CycleRef, PlaneGraph, Subgraph, Vertex};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rbb {
    Red,
    Blue,
    Black,
}

impl fmt::Display for Rbb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rbb::Red => "red",
            Rbb::Blue => "blue",
            Rbb::Black => "black",
        })
    }
}

pub type RbbColouring = Vec<Rbb>;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConditionSet {
    /// Conditions 1 to 6.
    Fg6,
    /// Conditions 1 to 7.
    Strong7,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct RbbRequest {
    pub x: Vertex,
    pub y: Vertex,
    pub c: Rbb,
    pub conditions: ConditionSet,
}

impl RbbRequest {
    pub fn strong(x: Vertex, y: Vertex, c: Rbb) -> RbbRequest {
        RbbRequest { x, y, c, conditions: ConditionSet::Strong7 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RbbViolation {
    XColour { x: Vertex, expected: Rbb, found: Rbb },
    YNotBlack { y: Vertex, found: Rbb },
    BlueEdge { u: Vertex, v: Vertex },
    RedOnOuterFace { v: Vertex },
    TwoRedOnFace { face: Vec<Vertex>, red: Vec<Vertex> },
    BlueCount { face: Vec<Vertex>, blue: Vec<Vertex> },
    BlackTriangle { triangle: [Vertex; 3] },
}

impl RbbViolation {
    /// The condition (1 to 7) this violates.
    pub fn condition(&self) -> u8 {
        match self {
            RbbViolation::XColour { .. } => 1,
            RbbViolation::YNotBlack { .. } => 2,
            RbbViolation::BlueEdge { .. } => 3,
            RbbViolation::RedOnOuterFace { .. } => 4,
            RbbViolation::TwoRedOnFace { .. } => 5,
            RbbViolation::BlueCount { .. } => 6,
            RbbViolation::BlackTriangle { .. } => 7,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RbbError {
    #[error("graph has a 2-face")]
    HasTwoFaces,
    #[error("{x}{y} is not an edge on the outer face")]
    XYNotOuter { x: Vertex, y: Vertex },
    #[error("invalid request: {0}")]
    BadRequest(String),
    #[error("no colouring satisfies the conditions")]
    NoColouring,
    #[error("sub-colourings disagree on vertex {0}")]
    GluingMismatch(Vertex),
}

/// Lists every violated condition. Condition 7 is checked only under
/// [`ConditionSet::Strong7`], over all 3-cycles.
pub fn check_conditions(g: &PlaneGraph, col: &[Rbb], req: &RbbRequest) -> Vec<RbbViolation> {
    let mut out = Vec::new();
    if col[req.x] != req.c {
        out.push(RbbViolation::XColour { x: req.x, expected: req.c, found: col[req.x] });
    }
    if col[req.y] != Rbb::Black {
        out.push(RbbViolation::YNotBlack { y: req.y, found: col[req.y] });
    }
    out.extend(free_violations(g, col, req.conditions));
    out
}

/// Conditions 3 to 7, which do not mention `x`, `y` or `c`.
pub fn free_violations(g: &PlaneGraph, col: &[Rbb], set: ConditionSet) -> Vec<RbbViolation> {
    let mut out = Vec::new();
    for (u, list) in g.adjacency().iter().enumerate() {
        for &v in list.iter().filter(|&&v| v > u) {
            if col[u] == Rbb::Blue && col[v] == Rbb::Blue {
                out.push(RbbViolation::BlueEdge { u, v });
            }
        }
    }
    for v in g.outer_vertices() {
        if col[v] == Rbb::Red {
            out.push(RbbViolation::RedOnOuterFace { v });
        }
    }
    for region in g.regions().into_iter().filter(|r| !r.outer) {
        let red: Vec<Vertex> = region.vertices.iter().copied().filter(|&v| col[v] == Rbb::Red).collect();
        let blue: Vec<Vertex> = region.vertices.iter().copied().filter(|&v| col[v] == Rbb::Blue).collect();
        if red.len() > 1 {
            out.push(RbbViolation::TwoRedOnFace { face: region.vertices.clone(), red });
        } else if red.is_empty() && blue.len() != 1 {
            out.push(RbbViolation::BlueCount { face: region.vertices.clone(), blue });
        }
    }
    if set == ConditionSet::Strong7 {
        for t in g.triangles() {
            if t.iter().all(|&v| col[v] == Rbb::Black) {
                out.push(RbbViolation::BlackTriangle { triangle: t });
            }
        }
    }
    out
}

fn validate_request(g: &PlaneGraph, req: &RbbRequest) -> Result<(), RbbError> {
    let n = g.vertex_count();
    if req.x >= n || req.y >= n {
        return Err(RbbError::BadRequest(format!("vertex {} does not exist", req.x.max(req.y))));
    }
    if req.c == Rbb::Red {
        return Err(RbbError::BadRequest("c must be black or blue".into()));
    }
    if req.x == req.y || !g.edge_on_outer_face(req.x, req.y) {
        return Err(RbbError::XYNotOuter { x: req.x, y: req.y });
    }
    if g.two_face_count() > 0 {
        return Err(RbbError::HasTwoFaces);
    }
    Ok(())
}

const RED: u8 = 1;
const BLUE: u8 = 2;
const BLACK: u8 = 4;

fn bit(c: Rbb) -> u8 {
    match c {
        Rbb::Red => RED,
        Rbb::Blue => BLUE,
        Rbb::Black => BLACK,
    }
}

fn from_bit(b: u8) -> Rbb {
    match b {
        RED => Rbb::Red,
        BLUE => Rbb::Blue,
        _ => Rbb::Black,
    }
}

/// Search state for the constraint oracle. Domains are bit sets; a vertex
/// counts as assigned once the search has fixed it.
struct Csp {
    adj: Vec<Vec<Vertex>>,
    faces: Vec<Vec<Vertex>>,
    faces_at: Vec<Vec<usize>>,
    triangles: Vec<[Vertex; 3]>,
    triangles_at: Vec<Vec<usize>>,
    order: Vec<Vertex>,
    nodes: u64,
}

impl Csp {
    fn new(g: &PlaneGraph, set: ConditionSet, start: Vertex) -> Csp {
        let n = g.vertex_count();
        let adj = g.adjacency();
        let faces: Vec<Vec<Vertex>> = g.regions().into_iter().filter(|r| !r.outer).map(|r| r.vertices).collect();
        let mut faces_at = vec![Vec::new(); n];
        for (i, f) in faces.iter().enumerate() {
            for &v in f {
                faces_at[v].push(i);
            }
        }
        let triangles = if set == ConditionSet::Strong7 { g.triangles() } else { Vec::new() };
        let mut triangles_at = vec![Vec::new(); n];
        for (i, t) in triangles.iter().enumerate() {
            for &v in t {
                triangles_at[v].push(i);
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for s in std::iter::once(start).chain(0..n) {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        Csp { adj, faces, faces_at, triangles, triangles_at, order, nodes: 0 }
    }

    /// Whether the face can still be completed, looking at this face alone.
    fn face_feasible(&self, f: usize, dom: &[u8], fixed: &[bool]) -> bool {
        let (mut red, mut blue) = (0, 0);
        let (mut can_red, mut can_blue, mut must_non_red_ok) = (0, 0, true);
        for &v in &self.faces[f] {
            if fixed[v] {
                match dom[v] {
                    RED => red += 1,
                    BLUE => blue += 1,
                    _ => {}
                }
            } else {
                if dom[v] & RED != 0 {
                    can_red += 1;
                }
                if dom[v] & BLUE != 0 {
                    can_blue += 1;
                }
                if dom[v] & !RED == 0 {
                    must_non_red_ok = false;
                }
            }
        }
        match red {
            0 => {
                if can_red > 0 {
                    return true;
                }
                // no red possible: need exactly one blue overall
                match blue {
                    0 => can_blue > 0,
                    1 => true,
                    _ => false,
                }
            }
            1 => must_non_red_ok,
            _ => false,
        }
    }

    /// Fixes `v` to colour bit `b` and prunes neighbouring domains. Returns
    /// false on a wipe-out.
    fn assign(&self, v: Vertex, b: u8, dom: &mut [u8], fixed: &mut [bool]) -> bool {
        dom[v] = b;
        fixed[v] = true;
        let mut touched: BTreeSet<usize> = self.faces_at[v].iter().copied().collect();
        if b == BLUE {
            for &w in &self.adj[v] {
                if !fixed[w] && dom[w] & BLUE != 0 {
                    dom[w] &= !BLUE;
                    if dom[w] == 0 {
                        return false;
                    }
                    touched.extend(self.faces_at[w].iter().copied());
                }
            }
        }
        if b == BLACK {
            for &t in &self.triangles_at[v] {
                let tri = self.triangles[t];
                let open: Vec<Vertex> = tri.iter().copied().filter(|&w| !fixed[w]).collect();
                let blacks = tri.iter().filter(|&&w| fixed[w] && dom[w] == BLACK).count();
                if blacks == 3 {
                    return false;
                }
                if blacks == 2 && open.len() == 1 {
                    let w = open[0];
                    dom[w] &= !BLACK;
                    if dom[w] == 0 {
                        return false;
                    }
                    touched.extend(self.faces_at[w].iter().copied());
                }
            }
        }
        if b == RED {
            for &f in &self.faces_at[v] {
                for &w in &self.faces[f] {
                    if !fixed[w] && dom[w] & RED != 0 {
                        dom[w] &= !RED;
                        if dom[w] == 0 {
                            return false;
                        }
                        touched.extend(self.faces_at[w].iter().copied());
                    }
                }
            }
        }
        touched.into_iter().all(|f| self.face_feasible(f, dom, fixed))
    }

    fn search(&mut self, depth: usize, dom: &mut Vec<u8>, fixed: &mut Vec<bool>) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        if fixed[v] {
            return self.search(depth + 1, dom, fixed);
        }
        for b in [BLACK, BLUE, RED] {
            if dom[v] & b == 0 {
                continue;
            }
            self.nodes += 1;
            let (saved_dom, saved_fixed) = (dom.clone(), fixed.clone());
            if self.assign(v, b, dom, fixed) && self.search(depth + 1, dom, fixed) {
                return true;
            }
            *dom = saved_dom;
            *fixed = saved_fixed;
        }
        false
    }
}

/// Constraint search for a colouring meeting the request's condition set.
/// Vertices are tried in breadth-first order from `x`, colours in the order
/// black, blue, red.
pub fn oracle_rbb(g: &PlaneGraph, req: &RbbRequest) -> Result<RbbColouring, RbbError> {
    validate_request(g, req)?;
    let mut csp = Csp::new(g, req.conditions, req.x);
    let n = g.vertex_count();
    let mut dom = vec![RED | BLUE | BLACK; n];
    for v in g.outer_vertices() {
        dom[v] &= !RED;
    }
    let mut fixed = vec![false; n];
    if !csp.assign(req.x, bit(req.c), &mut dom, &mut fixed) || !csp.assign(req.y, BLACK, &mut dom, &mut fixed) {
        return Err(RbbError::NoColouring);
    }
    if !csp.search(0, &mut dom, &mut fixed) {
        return Err(RbbError::NoColouring);
    }
    Ok(dom.into_iter().map(from_bit).collect())
}

/// Counters describing one run of [`lemma3_rbb_traced`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Lemma3Trace {
    pub max_depth: usize,
    pub two_cycle_red: usize,
    pub two_cycle_black: usize,
    pub temporary_edges: usize,
    pub triangle_all_colours: usize,
    pub triangle_red_black: usize,
    pub triangle_blue_black: usize,
    pub oracle_calls: usize,
    pub outer_triangle_switches: usize,
    pub component_splits: usize,
}

/// Recursive construction satisfying all seven conditions.
pub fn lemma3_rbb(g: &PlaneGraph, req: &RbbRequest) -> Result<RbbColouring, RbbError> {
    lemma3_rbb_traced(g, req).map(|(c, _)| c)
}

pub fn lemma3_rbb_traced(g: &PlaneGraph, req: &RbbRequest) -> Result<(RbbColouring, Lemma3Trace), RbbError> {
    validate_request(g, req)?;
    let mut trace = Lemma3Trace::default();
    let col = solve(g, Some((req.x, req.y, req.c)), 0, &mut trace)?;
    debug_assert!(check_conditions(g, &col, &RbbRequest::strong(req.x, req.y, req.c)).is_empty());
    Ok((col, trace))
}

/// Colouring meeting conditions 3 to 7 with no prescribed edge, for graphs
/// without 2-faces (each component gets its smallest outer edge as `xy`).
pub(crate) fn lemma3_unrooted(g: &PlaneGraph) -> Result<RbbColouring, RbbError> {
    if g.two_face_count() > 0 {
        return Err(RbbError::HasTwoFaces);
    }
    let mut trace = Lemma3Trace::default();
    solve(g, None, 0, &mut trace)
}

fn lift(parent: &mut [Option<Rbb>], sub: &Subgraph, col: &[Rbb]) -> Result<(), RbbError> {
    for (local, &p) in sub.to_parent.iter().enumerate() {
        match parent[p] {
            Some(existing) if existing != col[local] => return Err(RbbError::GluingMismatch(p)),
            _ => parent[p] = Some(col[local]),
        }
    }
    Ok(())
}

fn finish(col: Vec<Option<Rbb>>) -> RbbColouring {
    col.into_iter().map(|c| c.expect("every vertex coloured")).collect()
}

fn local(sub: &Subgraph, v: Vertex) -> Vertex {
    sub.local(v).expect("vertex kept in part")
}

/// The smallest outer edge of a connected graph with edges, as `(x, y)`.
fn default_root(g: &PlaneGraph) -> Option<(Vertex, Vertex)> {
    g.outer_darts().into_iter().map(|d| (g.origin(d), g.head(d))).min()
}

fn solve(g: &PlaneGraph, root: Option<(Vertex, Vertex, Rbb)>, depth: usize, trace: &mut Lemma3Trace) -> Result<RbbColouring, RbbError> {
    trace.max_depth = trace.max_depth.max(depth);
    let n = g.vertex_count();
    let comps = g.components();
    if comps.len() > 1 {
        trace.component_splits += 1;
        let mut col = vec![None; n];
        for comp in comps {
            let sub = g.induced(&comp);
            let sub_root = root
                .filter(|&(x, _, _)| comp.binary_search(&x).is_ok())
                .map(|(x, y, c)| (local(&sub, x), local(&sub, y), c));
            let sub_col = solve(&sub.graph, sub_root, depth + 1, trace)?;
            lift(&mut col, &sub, &sub_col)?;
        }
        return Ok(finish(col));
    }
    let (x, y, c) = match root {
        Some(r) => r,
        None => match default_root(g) {
            Some((x, y)) => (x, y, Rbb::Black),
            None => return Ok(vec![Rbb::Black; n]),
        },
    };
    let glued = if let Some(cycle) = g.find_separating_cycle(2) {
        two_cycle_case(g, &cycle, (x, y, c), depth, trace)?
    } else if let Some(cycle) = g.find_separating_cycle(3) {
        triangle_case(g, &cycle, (x, y, c), depth, trace)?
    } else {
        return base_case(g, (x, y, c), trace);
    };
    debug_assert!(check_conditions(g, &glued, &RbbRequest::strong(x, y, c)).is_empty());
    Ok(glued)
}

fn base_case(g: &PlaneGraph, (x, y, c): (Vertex, Vertex, Rbb), trace: &mut Lemma3Trace) -> Result<RbbColouring, RbbError> {
    assert!(!g.has_parallel_edges(), "parallel edges survive without 2-faces or separating 2-cycles");
    trace.oracle_calls += 1;
    let outer = g.faces().into_iter().find(|f| f.outer).expect("connected graph with edges has an outer face");
    let mut req = RbbRequest::strong(x, y, c);
    if c == Rbb::Black && outer.degree() == 3 {
        let third = g.face_vertices(&outer).into_iter().find(|&v| v != x && v != y);
        if let Some(z) = third {
            trace.outer_triangle_switches += 1;
            req.x = z;
            req.c = Rbb::Blue;
        }
    }
    let col = oracle_rbb(g, &req)?;
    if col[x] != c {
        return Err(RbbError::GluingMismatch(x));
    }
    Ok(col)
}

fn two_cycle_case(
    g: &PlaneGraph,
    cycle: &CycleRef,
    root: (Vertex, Vertex, Rbb),
    depth: usize,
    trace: &mut Lemma3Trace,
) -> Result<RbbColouring, RbbError> {
    let split = g.split_at_cycle(cycle).expect("separating by construction");
    let (u1, u2) = (cycle.vertices[0], cycle.vertices[1]);
    let outside = &split.outside;
    let (x, y, c) = root;
    let out_col = solve(&outside.graph, Some((local(outside, x), local(outside, y), c)), depth + 1, trace)?;
    let mut col = vec![None; g.vertex_count()];
    lift(&mut col, outside, &out_col)?;
    let (c1, c2) = (col[u1].unwrap(), col[u2].unwrap());
    let inside = &split.inside;

    if c1 == Rbb::Red || c2 == Rbb::Red {
        trace.two_cycle_red += 1;
        let (r, w) = if c1 == Rbb::Red { (u1, u2) } else { (u2, u1) };
        let c_prime = col[w].unwrap();
        let h = inside.graph.delete_vertex(local(inside, r)).expect("cycle vertex present");
        let w_h = local(&h, local(inside, w));
        let hg = &h.graph;
        let (graph, v_h) = if hg.degree(w_h) > 0 {
            let v = hg
                .outer_darts()
                .into_iter()
                .filter(|&d| hg.origin(d) == w_h)
                .map(|d| hg.head(d))
                .min()
                .expect("w lies on the outer face");
            (hg.clone(), v)
        } else {
            trace.temporary_edges += 1;
            let v = hg.outer_vertices().into_iter().find(|&v| v != w_h).expect("inside is nonempty");
            let slot = (0..=hg.degree(v))
                .find(|&s| {
                    hg.degree(v) == 0 || {
                        let table = hg.face_table();
                        table.faces[table.face_of[hg.rotation(v)[s % hg.degree(v)].0]].outer
                    }
                })
                .expect("outer vertex has an outer slot");
            (hg.add_edge(w_h, v, 0, slot).expect("both ends on the outer face"), v)
        };
        let sub_col = solve(&graph, Some((w_h, v_h, c_prime)), depth + 1, trace)?;
        let composed = compose(inside, &h);
        lift(&mut col, &composed, &sub_col)?;
    } else {
        trace.two_cycle_black += 1;
        let (b, w) = if c1 == Rbb::Black { (u1, u2) } else { (u2, u1) };
        let c_prime = col[w].unwrap();
        let (lb, lw) = (local(inside, b), local(inside, w));
        let v = inside
            .graph
            .outer_vertices()
            .into_iter()
            .find(|&v| v != lb && v != lw)
            .expect("a separating 2-cycle does not bound a face");
        let h = inside.graph.delete_vertex(v).expect("vertex present");
        let sub_col = solve(&h.graph, Some((local(&h, lw), local(&h, lb), c_prime)), depth + 1, trace)?;
        let composed = compose(inside, &h);
        lift(&mut col, &composed, &sub_col)?;
        col[inside.to_parent[v]] = Some(Rbb::Red);
    }
    Ok(finish(col))
}

/// `inner` is a subgraph of `outer.graph`; maps it back to the root graph.
fn compose(outer: &Subgraph, inner: &Subgraph) -> Subgraph {
    Subgraph {
        graph: inner.graph.clone(),
        to_parent: inner.to_parent.iter().map(|&v| outer.to_parent[v]).collect(),
    }
}

fn triangle_case(
    g: &PlaneGraph,
    cycle: &CycleRef,
    root: (Vertex, Vertex, Rbb),
    depth: usize,
    trace: &mut Lemma3Trace,
) -> Result<RbbColouring, RbbError> {
    let split = g.split_at_cycle(cycle).expect("separating by construction");
    let outside = &split.outside;
    let (x, y, c) = root;
    let out_col = solve(&outside.graph, Some((local(outside, x), local(outside, y), c)), depth + 1, trace)?;
    let mut col = vec![None; g.vertex_count()];
    lift(&mut col, outside, &out_col)?;
    let t = &cycle.vertices;
    let colour = |v: Vertex| col[v].unwrap();
    let find = |want: Rbb| t.iter().copied().find(|&v| colour(v) == want);
    let inside = &split.inside;
    // (sub-instance vertices to drop, x, y, c)
    let (drop, sx, sy, sc) = match (find(Rbb::Red), find(Rbb::Blue)) {
        (Some(r), Some(b)) => {
            trace.triangle_all_colours += 1;
            let k = find(Rbb::Black).ok_or(RbbError::GluingMismatch(r))?;
            (Some(r), b, k, Rbb::Blue)
        }
        (Some(r), None) => {
            trace.triangle_red_black += 1;
            let mut rest = t.iter().copied().filter(|&v| v != r);
            let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
            (Some(r), a, b, Rbb::Black)
        }
        (None, Some(b)) => {
            trace.triangle_blue_black += 1;
            let k = t.iter().copied().filter(|&v| v != b).min().unwrap();
            (None, b, k, Rbb::Blue)
        }
        (None, None) => return Err(RbbError::GluingMismatch(t[0])),
    };
    let part = match drop {
        Some(r) => compose(inside, &inside.graph.delete_vertex(local(inside, r)).expect("vertex present")),
        None => inside.clone(),
    };
    let sub_col = solve(&part.graph, Some((local(&part, sx), local(&part, sy), sc)), depth + 1, trace)?;
    lift(&mut col, &part, &sub_col)?;
    Ok(finish(col))
}
