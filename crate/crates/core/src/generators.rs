//! Deterministic plane-graph families.
//!
//! Most families are straight-line drawings: rotations come from sorting
//! neighbours by angle and the outer face is read off the leftmost vertex.
//! Families with parallel or curved edges give departure angles per edge end
//! directly.

use std::collections::HashMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::plane_graph::{DartRef, GraphError, PlaneGraph, RotationSpec, Vertex};

#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters for `{family}`: {reason}")]
    BadParams { family: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(family: &str, reason: impl Into<String>) -> GenerateError {
    GenerateError::BadParams { family: family.into(), reason: reason.into() }
}

/// An edge with its departure angle (degrees) at each end.
#[derive(Copy, Clone, Debug)]
struct AngledEdge {
    u: Vertex,
    v: Vertex,
    at_u: f64,
    at_v: f64,
}

fn norm(deg: f64) -> f64 {
    deg.rem_euclid(360.0)
}

/// Builds the rotation system by angle sort. `outer` is `(edge index, from u?)`.
fn embed_by_angles(n: usize, edges: &[AngledEdge], outer: Option<(usize, bool)>) -> Result<PlaneGraph, GraphError> {
    let mut occ = Vec::with_capacity(edges.len());
    let mut counter: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    for e in edges {
        let c = counter.entry((e.u.min(e.v), e.u.max(e.v))).or_insert(0);
        occ.push(*c);
        *c += 1;
    }
    let mut ends: Vec<Vec<(f64, Vertex, usize)>> = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        ends[e.u].push((norm(e.at_u), e.v, occ[i]));
        ends[e.v].push((norm(e.at_v), e.u, occ[i]));
    }
    let spec: RotationSpec = ends
        .into_iter()
        .map(|mut list| {
            list.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite angle"));
            list.into_iter().map(|(_, w, k)| (w, k)).collect()
        })
        .collect();
    let hint: Vec<DartRef> = outer
        .map(|(i, from_u)| {
            let e = edges[i];
            if from_u {
                (e.u, e.v, occ[i])
            } else {
                (e.v, e.u, occ[i])
            }
        })
        .into_iter()
        .collect();
    PlaneGraph::from_rotations(&spec, &hint)
}

fn angle(from: (f64, f64), to: (f64, f64)) -> f64 {
    (to.1 - from.1).atan2(to.0 - from.0).to_degrees()
}

/// Straight-line drawing; the outer face is the one containing the ray west
/// of the lexicographically smallest vertex that has an edge.
fn embed_straight(coords: &[(f64, f64)], edges: &[(Vertex, Vertex)]) -> Result<PlaneGraph, GraphError> {
    let angled: Vec<AngledEdge> = edges
        .iter()
        .map(|&(u, v)| AngledEdge { u, v, at_u: angle(coords[u], coords[v]), at_v: angle(coords[v], coords[u]) })
        .collect();
    let outer = leftmost_outer(coords, &angled);
    embed_by_angles(coords.len(), &angled, outer)
}

fn leftmost_outer(coords: &[(f64, f64)], edges: &[AngledEdge]) -> Option<(usize, bool)> {
    let mut used = vec![false; coords.len()];
    for e in edges {
        used[e.u] = true;
        used[e.v] = true;
    }
    let p = (0..coords.len())
        .filter(|&v| used[v])
        .min_by(|&a, &b| coords[a].partial_cmp(&coords[b]).expect("finite coordinates"))?;
    // the face of a dart lies on its right, so the wedge containing the west
    // ray belongs to the first dart counterclockwise past 180 degrees
    edges
        .iter()
        .enumerate()
        .flat_map(|(i, e)| {
            let mut v = Vec::new();
            if e.u == p {
                v.push((norm(e.at_u - 180.0 - 1e-9), (i, true)));
            }
            if e.v == p {
                v.push((norm(e.at_v - 180.0 - 1e-9), (i, false)));
            }
            v
        })
        .min_by(|a, b| a.0.partial_cmp(&b.0).expect("finite"))
        .map(|x| x.1)
}

fn on_circle(r: f64, deg: f64) -> (f64, f64) {
    let t = deg * PI / 180.0;
    (r * t.cos(), r * t.sin())
}

pub fn cycle(n: usize) -> Result<PlaneGraph, GenerateError> {
    match n {
        0 | 1 => Err(bad("cycle", "length must be at least 2")),
        2 => {
            // digon: top 0, bottom 1, arcs bulging west (occurrence 0) and east
            let edges = [
                AngledEdge { u: 0, v: 1, at_u: 200.0, at_v: 160.0 },
                AngledEdge { u: 0, v: 1, at_u: 340.0, at_v: 20.0 },
            ];
            Ok(embed_by_angles(2, &edges, Some((0, true)))?)
        }
        _ => {
            let coords: Vec<_> = (0..n).map(|i| on_circle(1.0, 360.0 * i as f64 / n as f64)).collect();
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok(embed_straight(&coords, &edges)?)
        }
    }
}

/// Hub `0` joined to the rim `1..=n`.
pub fn wheel(n: usize) -> Result<PlaneGraph, GenerateError> {
    if n < 3 {
        return Err(bad("wheel", "rim must have at least 3 vertices"));
    }
    let mut coords = vec![(0.0, 0.0)];
    coords.extend((0..n).map(|i| on_circle(1.0, 360.0 * i as f64 / n as f64)));
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((0, i + 1));
        edges.push((i + 1, (i + 1) % n + 1));
    }
    Ok(embed_straight(&coords, &edges)?)
}

/// `rows × cols` grid; vertex `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Result<PlaneGraph, GenerateError> {
    if rows == 0 || cols == 0 {
        return Err(bad("grid", "dimensions must be positive"));
    }
    let coords: Vec<_> = (0..rows * cols).map(|i| ((i % cols) as f64, (i / cols) as f64)).collect();
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    if edges.is_empty() {
        return Ok(PlaneGraph::edgeless(rows * cols));
    }
    Ok(embed_straight(&coords, &edges)?)
}

/// Two concentric `n`-cycles; `ring_offset` rotates the outer ring by a
/// fraction of a step. Inner ring `0..n`, outer ring `n..2n`.
fn two_rings(n: usize, antiprism: bool) -> Result<PlaneGraph, GraphError> {
    let step = 360.0 / n as f64;
    let off = if antiprism { step / 2.0 } else { 0.0 };
    let mut coords: Vec<_> = (0..n).map(|i| on_circle(1.0, 90.0 + step * i as f64)).collect();
    coords.extend((0..n).map(|i| on_circle(2.5, 90.0 + step * i as f64 + off)));
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
        if antiprism {
            edges.push((n + i, (i + 1) % n));
        }
    }
    embed_straight(&coords, &edges)
}

pub fn prism(n: usize) -> Result<PlaneGraph, GenerateError> {
    if n < 3 {
        return Err(bad("prism", "n must be at least 3"));
    }
    Ok(two_rings(n, false)?)
}

pub fn antiprism(n: usize) -> Result<PlaneGraph, GenerateError> {
    if n < 3 {
        return Err(bad("antiprism", "n must be at least 3"));
    }
    Ok(two_rings(n, true)?)
}

pub fn octahedron() -> Result<PlaneGraph, GenerateError> {
    Ok(two_rings(3, true)?)
}

/// Apex `0` at the centre, rings `1..=5` and `6..=10`, antipode `11` drawn at
/// infinity.
pub fn icosahedron() -> Result<PlaneGraph, GenerateError> {
    let mut coords = vec![(0.0, 0.0)];
    coords.extend((0..5).map(|k| on_circle(1.0, 72.0 * k as f64)));
    coords.extend((0..5).map(|k| on_circle(2.0, 72.0 * k as f64 + 36.0)));
    let mut edges: Vec<AngledEdge> = Vec::new();
    let straight = |u: Vertex, v: Vertex, edges: &mut Vec<AngledEdge>| {
        edges.push(AngledEdge { u, v, at_u: angle(coords[u], coords[v]), at_v: angle(coords[v], coords[u]) })
    };
    for k in 0..5 {
        let (a, a1) = (1 + k, 1 + (k + 1) % 5);
        let (b, b1) = (6 + k, 6 + (k + 1) % 5);
        straight(0, a, &mut edges);
        straight(a, a1, &mut edges);
        straight(a, b, &mut edges);
        straight(b, a1, &mut edges);
        straight(b, b1, &mut edges);
    }
    for k in 0..5 {
        let theta = 72.0 * k as f64 + 36.0;
        // seen from the point at infinity the ring order reverses
        edges.push(AngledEdge { u: 6 + k, v: 11, at_u: theta, at_v: -theta });
    }
    Ok(embed_by_angles(12, &edges, Some((0, true)))?)
}

/// Random stacked triangulation: starting from a triangle, `depth` times
/// insert a vertex into an inner face chosen by a seeded generator and join
/// it to the face's three corners.
pub fn apollonian(depth: usize, seed: u64) -> Result<PlaneGraph, GenerateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coords = vec![on_circle(1.0, 90.0), on_circle(1.0, 210.0), on_circle(1.0, 330.0)];
    let mut edges = vec![(0, 1), (1, 2), (2, 0)];
    let mut faces = vec![[0usize, 1, 2]];
    for _ in 0..depth {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        let v = coords.len();
        coords.push((
            (coords[a].0 + coords[b].0 + coords[c].0) / 3.0,
            (coords[a].1 + coords[b].1 + coords[c].1) / 3.0,
        ));
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
    }
    Ok(embed_straight(&coords, &edges)?)
}

/// `levels` nested 2-gons. Vertex `0` sits outside; level `i` has top `1 + 2i`
/// and bottom `2 + 2i`, joined by a west and an east arc; consecutive levels
/// are joined top-to-top and bottom-to-bottom; the last vertex sits inside
/// the innermost 2-gon. Every 2-gon is a separating 2-cycle and there are no
/// 2-faces.
pub fn nested_2gon(levels: usize) -> Result<PlaneGraph, GenerateError> {
    if levels == 0 {
        return Err(bad("nested_2gon", "need at least one level"));
    }
    let top = |i: usize| 1 + 2 * i;
    let bottom = |i: usize| 2 + 2 * i;
    let centre = 1 + 2 * levels;
    let mut edges = vec![
        AngledEdge { u: 0, v: bottom(0), at_u: 350.0, at_v: 190.0 },
        AngledEdge { u: 0, v: top(0), at_u: 10.0, at_v: 170.0 },
    ];
    for i in 0..levels {
        edges.push(AngledEdge { u: top(i), v: bottom(i), at_u: 200.0, at_v: 160.0 });
        edges.push(AngledEdge { u: top(i), v: bottom(i), at_u: 340.0, at_v: 20.0 });
        let (nt, nb) = if i + 1 < levels { (top(i + 1), bottom(i + 1)) } else { (centre, centre) };
        edges.push(AngledEdge { u: top(i), v: nt, at_u: 270.0, at_v: 90.0 });
        edges.push(AngledEdge { u: bottom(i), v: nb, at_u: 90.0, at_v: 270.0 });
    }
    Ok(embed_by_angles(centre + 1, &edges, Some((0, true)))?)
}

/// `levels + 1` nested triangles with each annulus triangulated and a centre
/// vertex joined to the innermost triangle. Triangle `i` is `3i..3i+3`; the
/// centre is the last vertex.
pub fn stellated_triangles(levels: usize) -> Result<PlaneGraph, GenerateError> {
    let mut coords = Vec::new();
    for i in 0..=levels {
        let r = 3f64.powi((levels - i) as i32 + 1);
        for j in 0..3 {
            coords.push(on_circle(r, 90.0 + 120.0 * j as f64 + 60.0 * i as f64));
        }
    }
    let centre = coords.len();
    coords.push((0.0, 0.0));
    let mut edges = Vec::new();
    for i in 0..=levels {
        for j in 0..3 {
            edges.push((3 * i + j, 3 * i + (j + 1) % 3));
            if i < levels {
                edges.push((3 * (i + 1) + j, 3 * i + j));
                edges.push((3 * (i + 1) + j, 3 * i + (j + 1) % 3));
            }
        }
    }
    for j in 0..3 {
        edges.push((3 * levels + j, centre));
    }
    Ok(embed_straight(&coords, &edges)?)
}

/// Path `0..=k` with every consecutive pair doubled, giving `k` 2-faces.
pub fn parallel_edge_chain(k: usize) -> Result<PlaneGraph, GenerateError> {
    if k == 0 {
        return Err(bad("parallel_edge_chain", "need at least one link"));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push(AngledEdge { u: i, v: i + 1, at_u: 20.0, at_v: 160.0 });
        edges.push(AngledEdge { u: i, v: i + 1, at_u: 340.0, at_v: 200.0 });
    }
    Ok(embed_by_angles(k + 1, &edges, Some((1, true)))?)
}

/// Family names accepted by [`generate`].
pub const FAMILIES: &[&str] = &[
    "cycle",
    "wheel",
    "grid",
    "prism",
    "antiprism",
    "octahedron",
    "icosahedron",
    "apollonian",
    "nested_2gon",
    "stellated_triangles",
    "parallel_edge_chain",
];

/// Dispatches on a family name with integer parameters.
pub fn generate(family: &str, params: &[u64]) -> Result<PlaneGraph, GenerateError> {
    let want = |k: usize| -> Result<Vec<usize>, GenerateError> {
        if params.len() != k {
            return Err(bad(family, format!("expected {k} parameter(s), got {}", params.len())));
        }
        Ok(params.iter().map(|&p| p as usize).collect())
    };
    match family {
        "cycle" => cycle(want(1)?[0]),
        "wheel" => wheel(want(1)?[0]),
        "grid" => {
            let p = want(2)?;
            grid(p[0], p[1])
        }
        "prism" => prism(want(1)?[0]),
        "antiprism" => antiprism(want(1)?[0]),
        "octahedron" => {
            want(0)?;
            octahedron()
        }
        "icosahedron" => {
            want(0)?;
            icosahedron()
        }
        "apollonian" => {
            want(2)?;
            apollonian(params[0] as usize, params[1])
        }
        "nested_2gon" => nested_2gon(want(1)?[0]),
        "stellated_triangles" => stellated_triangles(want(1)?[0]),
        "parallel_edge_chain" => parallel_edge_chain(want(1)?[0]),
        other => Err(GenerateError::UnknownFamily(other.to_string())),
    }
}
