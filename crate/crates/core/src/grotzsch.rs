//! Proper 3-colouring of triangle-free graphs by backtracking.

use thiserror::Error;

use crate::plane_graph::{PlaneGraph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ThreeColourError {
    #[error("graph contains the triangle {0:?}")]
    TrianglePresent([Vertex; 3]),
    #[error("no proper 3-colouring found")]
    NoColouring,
}

/// First triangle found by intersecting the neighbourhoods of each edge's ends.
pub fn find_triangle(adj: &[Vec<Vertex>]) -> Option<[Vertex; 3]> {
    for (u, list) in adj.iter().enumerate() {
        for &v in list.iter().filter(|&&v| v > u) {
            let (a, b) = (&adj[u], &adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        let mut t = [u, v, a[i]];
                        t.sort();
                        return Some(t);
                    }
                }
            }
        }
    }
    None
}

pub fn three_colour(g: &PlaneGraph) -> Result<Vec<u8>, ThreeColourError> {
    three_colour_adjacency(&g.adjacency())
}

/// Colours `1..=3` for sorted simple adjacency lists. Vertices are taken in
/// order of decreasing degree (ties to the smaller id); each assignment
/// removes its colour from the neighbours' domains.
pub fn three_colour_adjacency(adj: &[Vec<Vertex>]) -> Result<Vec<u8>, ThreeColourError> {
    if let Some(t) = find_triangle(adj) {
        return Err(ThreeColourError::TrianglePresent(t));
    }
    let n = adj.len();
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    let mut dom = vec![0b111u8; n];
    let mut col = vec![0u8; n];
    if search(adj, &order, 0, &mut dom, &mut col) {
        Ok(col)
    } else {
        Err(ThreeColourError::NoColouring)
    }
}

fn search(adj: &[Vec<Vertex>], order: &[Vertex], i: usize, dom: &mut Vec<u8>, col: &mut Vec<u8>) -> bool {
    let Some(&v) = order.get(i) else {
        return true;
    };
    for c in 1..=3u8 {
        let b = 1 << (c - 1);
        if dom[v] & b == 0 {
            continue;
        }
        let saved = dom.clone();
        col[v] = c;
        let ok = adj[v].iter().all(|&w| {
            if col[w] != 0 {
                return col[w] != c;
            }
            dom[w] &= !b;
            dom[w] != 0
        });
        if ok && search(adj, order, i + 1, dom, col) {
            return true;
        }
        *dom = saved;
        col[v] = 0;
    }
    false
}
