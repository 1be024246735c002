//! Random plane graphs and naive reference implementations shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;

use capcol::generators;
use capcol::plane_graph::{Dart, PlaneGraph, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A connected plane graph on `3 + splits` vertices: a stacked triangulation
/// with a random share of its edges removed.
pub fn random_connected(seed: u64, splits: usize) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = generators::apollonian(splits, seed).unwrap();
    let p: f64 = rng.gen_range(0.0..0.6);
    for _ in 0..g.edge_count() {
        if !rng.gen_bool(p) || g.edge_count() == 0 {
            continue;
        }
        let e = rng.gen_range(0..g.edge_count());
        let h = g.delete_edge(Dart(2 * e)).unwrap();
        if h.is_connected() {
            g = h;
        }
    }
    g
}

/// Adds up to `extra` parallel edges at random cofacial slots.
pub fn with_parallel_edges(g: &PlaneGraph, seed: u64, extra: usize) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37);
    let mut g = g.clone();
    for _ in 0..extra {
        if g.edge_count() == 0 {
            break;
        }
        for _ in 0..20 {
            let e = rng.gen_range(0..g.edge_count());
            let (u, v) = g.endpoints(e);
            let us = rng.gen_range(0..=g.degree(u));
            let vs = rng.gen_range(0..=g.degree(v));
            if let Ok(h) = g.add_edge(u, v, us, vs) {
                g = h;
                break;
            }
        }
    }
    g
}

/// Small named graphs from the generators, all connected.
pub fn small_family_graphs() -> Vec<(String, PlaneGraph)> {
    let mut out = Vec::new();
    let specs: &[(&str, &[u64])] = &[
        ("grid", &[1, 1]),
        ("grid", &[1, 2]),
        ("grid", &[1, 3]),
        ("grid", &[2, 2]),
        ("grid", &[2, 3]),
        ("cycle", &[2]),
        ("cycle", &[3]),
        ("cycle", &[4]),
        ("cycle", &[5]),
        ("cycle", &[6]),
        ("wheel", &[3]),
        ("wheel", &[4]),
        ("wheel", &[5]),
        ("prism", &[3]),
        ("octahedron", &[]),
        ("antiprism", &[3]),
        ("nested_2gon", &[1]),
        ("nested_2gon", &[2]),
        ("stellated_triangles", &[1]),
        ("parallel_edge_chain", &[1]),
        ("parallel_edge_chain", &[3]),
    ];
    for (f, p) in specs {
        out.push((format!("{f}{p:?}"), generators::generate(f, p).unwrap()));
    }
    out
}

/// Faces as vertex sets, traced straight from the rotation lists: the dart
/// after `(v, i)` on its face is the successor of its reverse in the
/// rotation at the far end.
pub fn naive_face_vertex_sets(g: &PlaneGraph) -> Vec<Vec<Vertex>> {
    let spec = g.rotation_spec();
    let n = spec.len();
    if spec.iter().all(|r| r.is_empty()) {
        return (0..n.min(1)).map(|_| (0..n).collect()).collect();
    }
    let reverse = |v: Vertex, i: usize| -> (Vertex, usize) {
        let (w, k) = spec[v][i];
        let j = spec[w].iter().position(|&(x, kk)| x == v && kk == k).expect("reverse entry");
        (w, j)
    };
    let mut seen: Vec<Vec<bool>> = spec.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = Vec::new();
    for v in 0..n {
        for i in 0..spec[v].len() {
            if seen[v][i] {
                continue;
            }
            let mut verts = Vec::new();
            let (mut a, mut b) = (v, i);
            while !seen[a][b] {
                seen[a][b] = true;
                verts.push(a);
                let (w, j) = reverse(a, b);
                (a, b) = (w, (j + 1) % spec[w].len());
            }
            verts.sort();
            verts.dedup();
            faces.push(verts);
        }
    }
    faces
}

/// Proper, and every face has one vertex of its top colour. Connected
/// graphs only.
pub fn naive_is_capital(g: &PlaneGraph, col: &[u32]) -> bool {
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        if col[u] == col[v] {
            return false;
        }
    }
    naive_face_vertex_sets(g).iter().all(|f| {
        let top = f.iter().map(|&v| col[v]).max().unwrap();
        f.iter().filter(|&&v| col[v] == top).count() == 1
    })
}

/// Calls `f` on every colouring in `1..=k` of `n` vertices until it returns
/// `true`.
pub fn any_colouring(n: usize, k: u32, mut f: impl FnMut(&[u32]) -> bool) -> bool {
    let mut col = vec![1u32; n];
    loop {
        if f(&col) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            col[i] += 1;
            if col[i] <= k {
                break;
            }
            col[i] = 1;
            i += 1;
        }
    }
}

pub fn brute_chi_capital(g: &PlaneGraph) -> u32 {
    let n = g.vertex_count();
    (1..=n as u32).find(|&k| any_colouring(n, k, |c| naive_is_capital(g, c))).unwrap()
}

pub fn brute_chromatic(g: &PlaneGraph) -> u32 {
    let n = g.vertex_count();
    let proper = |c: &[u32]| (0..g.edge_count()).all(|e| {
        let (u, v) = g.endpoints(e);
        c[u] != c[v]
    });
    (1..=n as u32).find(|&k| any_colouring(n, k, proper)).unwrap()
}

/// The dart of edge `e` leaving `u`.
pub fn dart_from(g: &PlaneGraph, e: usize, u: Vertex) -> Dart {
    if g.origin(Dart(2 * e)) == u {
        Dart(2 * e)
    } else {
        Dart(2 * e + 1)
    }
}

/// All 2-cycles or 3-cycles as directed dart lists, one per edge set.
pub fn naive_short_cycles(g: &PlaneGraph, length: usize) -> Vec<Vec<Dart>> {
    let m = g.edge_count();
    let mut out = Vec::new();
    match length {
        2 => {
            for a in 0..m {
                for b in a + 1..m {
                    let (u, v) = g.endpoints(a);
                    let (p, q) = g.endpoints(b);
                    if (u, v) == (p, q) || (u, v) == (q, p) {
                        out.push(vec![dart_from(g, a, u), dart_from(g, b, v)]);
                    }
                }
            }
        }
        3 => {
            for a in 0..m {
                for b in a + 1..m {
                    for c in b + 1..m {
                        let (u, v) = g.endpoints(a);
                        for (x, y) in [(u, v), (v, u)] {
                            // x -> y along a, then y -> z along b or c
                            for (e2, e3) in [(b, c), (c, b)] {
                                let (p, q) = g.endpoints(e2);
                                let z = if p == y { q } else if q == y { p } else { continue };
                                let (r, s) = g.endpoints(e3);
                                if z == x || z == y || !((r == z && s == x) || (r == x && s == z)) {
                                    continue;
                                }
                                let cyc = vec![dart_from(g, a, x), dart_from(g, e2, y), dart_from(g, e3, z)];
                                // keep one orientation per edge set
                                if x == u && !out.iter().any(|c: &Vec<Dart>| same_edges(c, &cyc)) {
                                    out.push(cyc);
                                }
                            }
                        }
                    }
                }
            }
        }
        _ => {}
    }
    out
}

fn same_edges(a: &[Dart], b: &[Dart]) -> bool {
    let mut x: Vec<usize> = a.iter().map(|d| d.edge()).collect();
    let mut y: Vec<usize> = b.iter().map(|d| d.edge()).collect();
    x.sort();
    y.sort();
    x == y
}

/// Splits the faces in two classes by a BFS in the dual that never crosses
/// a cycle edge. Returns `(inside, outside)` vertex sets off the cycle, the
/// outside being the class holding the outer face; `None` when the cycle
/// is not separating.
pub fn dual_bfs_sides(g: &PlaneGraph, cycle: &[Dart]) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let table = g.face_table();
    let nf = table.faces.len();
    let on_cycle_edge: Vec<bool> = (0..g.edge_count()).map(|e| cycle.iter().any(|d| d.edge() == e)).collect();
    let cyc_vertices: Vec<Vertex> = cycle.iter().map(|&d| g.origin(d)).collect();
    let mut class = vec![usize::MAX; nf];
    let mut next = 0;
    for start in 0..nf {
        if class[start] != usize::MAX {
            continue;
        }
        class[start] = next;
        let mut q = VecDeque::from([start]);
        while let Some(f) = q.pop_front() {
            for &d in &table.faces[f].darts {
                if on_cycle_edge[d.edge()] {
                    continue;
                }
                let h = table.face_of_dart(d.twin());
                if class[h] == usize::MAX {
                    class[h] = next;
                    q.push_back(h);
                }
            }
        }
        next += 1;
    }
    let outer_class = class[(0..nf).find(|&f| table.faces[f].outer)?];
    let mut inside = Vec::new();
    let mut outside = Vec::new();
    let mut isolated_side = vec![None; g.vertex_count()];
    for (f, face) in table.faces.iter().enumerate() {
        for &d in &face.darts {
            let v = g.origin(d);
            if !cyc_vertices.contains(&v) {
                isolated_side[v] = Some(class[f] == outer_class);
            }
        }
    }
    for (v, s) in isolated_side.iter().enumerate() {
        match s {
            Some(true) => outside.push(v),
            Some(false) => inside.push(v),
            None => {}
        }
    }
    (!inside.is_empty() && !outside.is_empty()).then_some((inside, outside))
}

/// Face vertex sets from the rotation lists, flagged when the face holds
/// the outer dart. Connected graphs only.
pub fn naive_faces_with_outer(g: &PlaneGraph) -> Vec<(Vec<Vertex>, bool)> {
    let spec = g.rotation_spec();
    let n = spec.len();
    let Some(od) = g.outer_dart() else {
        return vec![((0..n).collect(), true)];
    };
    let (ou, ow, ok) = g.dart_ref(od);
    let oi = spec[ou].iter().position(|&e| e == (ow, ok)).unwrap();
    let mut seen: Vec<Vec<bool>> = spec.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = Vec::new();
    for v in 0..n {
        for i in 0..spec[v].len() {
            if seen[v][i] {
                continue;
            }
            let (mut verts, mut outer) = (Vec::new(), false);
            let (mut a, mut b) = (v, i);
            while !seen[a][b] {
                seen[a][b] = true;
                outer |= (a, b) == (ou, oi);
                verts.push(a);
                let (w, k) = spec[a][b];
                let j = spec[w].iter().position(|&(x, kk)| x == a && kk == k).unwrap();
                (a, b) = (w, (j + 1) % spec[w].len());
            }
            verts.sort();
            verts.dedup();
            faces.push((verts, outer));
        }
    }
    faces
}
