//! Exact search for capital list colourings, the capital chromatic number and
//! bounded-universe choosability probes.

use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::capital::{Colouring, ListAssignment};
use crate::plane_graph::{PlaneGraph, Vertex};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SolveBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SolveBudget {
    fn default() -> SolveBudget {
        SolveBudget { node_limit: 10_000_000, time_limit: Duration::from_secs(60) }
    }
}

impl SolveBudget {
    pub fn nodes(node_limit: u64) -> SolveBudget {
        SolveBudget { node_limit, ..SolveBudget::default() }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("list assignment covers {lists} vertices but the graph has {vertices}")]
    SizeMismatch { lists: usize, vertices: usize },
    #[error("at most 128 distinct colours are supported, got {0}")]
    TooManyColours(usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

/// Shared node and clock accounting across several searches.
struct Meter {
    nodes: u64,
    limit: u64,
    deadline: Instant,
}

impl Meter {
    fn new(budget: SolveBudget) -> Meter {
        Meter { nodes: 0, limit: budget.node_limit, deadline: Instant::now() + budget.time_limit }
    }

    fn tick(&mut self) -> Result<(), ExactError> {
        self.nodes += 1;
        if self.nodes > self.limit || (self.nodes.is_multiple_of(4096) && Instant::now() > self.deadline) {
            return Err(ExactError::BudgetExceeded { nodes: self.nodes });
        }
        Ok(())
    }
}

/// Colour ranks are indices into the sorted union of all lists, so comparing
/// ranks compares colours.
struct Search {
    adj: Vec<Vec<Vertex>>,
    regions: Vec<Vec<Vertex>>,
    regions_at: Vec<Vec<usize>>,
    order: Vec<Vertex>,
    dom: Vec<u128>,
    rank: Vec<Option<u32>>,
    trail: Vec<(Vertex, u128)>,
}

/// Static order: repeatedly take the vertex completing the most faces, then
/// the one with most ordered neighbours, then highest degree, then smallest id.
fn completion_order(adj: &[Vec<Vertex>], regions: &[Vec<Vertex>], regions_at: &[Vec<usize>]) -> Vec<Vertex> {
    let n = adj.len();
    let mut placed = vec![false; n];
    let mut open: Vec<usize> = regions.iter().map(|r| r.len()).collect();
    let mut placed_nbrs = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let completes = regions_at[v].iter().filter(|&&f| open[f] == 1).count();
                (completes, placed_nbrs[v], adj[v].len(), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for &f in &regions_at[v] {
            open[f] -= 1;
        }
        for &w in &adj[v] {
            placed_nbrs[w] += 1;
        }
    }
    order
}

impl Search {
    fn new(g: &PlaneGraph, doms: Vec<u128>) -> Search {
        let adj = g.adjacency();
        let regions: Vec<Vec<Vertex>> = g.regions().into_iter().map(|r| r.vertices).collect();
        let mut regions_at = vec![Vec::new(); g.vertex_count()];
        for (i, r) in regions.iter().enumerate() {
            for &v in r {
                regions_at[v].push(i);
            }
        }
        let order = completion_order(&adj, &regions, &regions_at);
        let n = g.vertex_count();
        Search { adj, regions, regions_at, order, dom: doms, rank: vec![None; n], trail: Vec::new() }
    }

    fn restrict(&mut self, v: Vertex, mask: u128) -> bool {
        let new = self.dom[v] & mask;
        if new != self.dom[v] {
            self.trail.push((v, self.dom[v]));
            self.dom[v] = new;
        }
        new != 0
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (v, d) = self.trail.pop().expect("trail entry");
            self.dom[v] = d;
        }
    }

    fn region_ok(&mut self, f: usize) -> bool {
        let (mut max, mut count) = (0u32, 0usize);
        let mut open = Vec::new();
        for &v in &self.regions[f] {
            match self.rank[v] {
                Some(r) if count == 0 || r > max => (max, count) = (r, 1),
                Some(r) if r == max => count += 1,
                Some(_) => {}
                None => open.push(v),
            }
        }
        if count == 0 {
            return true;
        }
        let above = !0u128 << max << 1;
        match (open.len(), count) {
            (0, c) => c == 1,
            (1, 1) => self.restrict(open[0], !(1u128 << max)),
            (1, _) => self.restrict(open[0], above),
            (_, 1) => true,
            _ => open.iter().any(|&u| self.dom[u] & above != 0),
        }
    }

    fn assign(&mut self, v: Vertex, r: u32) -> bool {
        self.rank[v] = Some(r);
        let bit = 1u128 << r;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            if self.rank[w].is_none() && !self.restrict(w, !bit) {
                return false;
            }
        }
        for i in 0..self.regions_at[v].len() {
            let f = self.regions_at[v][i];
            if !self.region_ok(f) {
                return false;
            }
        }
        true
    }

    fn run(&mut self, depth: usize, meter: &mut Meter) -> Result<bool, ExactError> {
        let Some(&v) = self.order.get(depth) else {
            return Ok(true);
        };
        let mut d = self.dom[v];
        while d != 0 {
            let r = d.trailing_zeros();
            d &= d - 1;
            meter.tick()?;
            let mark = self.trail.len();
            if self.assign(v, r) && self.run(depth + 1, meter)? {
                return Ok(true);
            }
            self.rank[v] = None;
            self.undo(mark);
        }
        Ok(false)
    }
}

fn solve_with_meter(g: &PlaneGraph, lists: &ListAssignment, meter: &mut Meter) -> Result<Option<Colouring>, ExactError> {
    if lists.len() != g.vertex_count() {
        return Err(ExactError::SizeMismatch { lists: lists.len(), vertices: g.vertex_count() });
    }
    let mut palette: Vec<u32> = lists.lists().iter().flatten().copied().collect();
    palette.sort_unstable();
    palette.dedup();
    if palette.len() > 128 {
        return Err(ExactError::TooManyColours(palette.len()));
    }
    let doms: Vec<u128> = lists
        .lists()
        .iter()
        .map(|l| l.iter().fold(0u128, |m, c| m | 1 << palette.binary_search(c).expect("in palette")))
        .collect();
    let mut search = Search::new(g, doms);
    if !search.run(0, meter)? {
        return Ok(None);
    }
    Ok(Some(search.rank.iter().map(|r| palette[r.expect("assigned") as usize]).collect()))
}

/// A capital colouring choosing every colour from the vertex's list, or
/// `Ok(None)` when the search space is exhausted without one.
pub fn capital_list_colouring(
    g: &PlaneGraph,
    lists: &ListAssignment,
    budget: SolveBudget,
) -> Result<Option<Colouring>, ExactError> {
    solve_with_meter(g, lists, &mut Meter::new(budget))
}

/// Least `k` admitting a capital colouring from `1..=k`. The budget is
/// shared by all values of `k` tried.
pub fn chi_capital(g: &PlaneGraph, budget: SolveBudget) -> Result<u32, ExactError> {
    chi_capital_with_colouring(g, budget).map(|(k, _)| k)
}

pub fn chi_capital_with_colouring(g: &PlaneGraph, budget: SolveBudget) -> Result<(u32, Colouring), ExactError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(ExactError::EmptyGraph);
    }
    let mut meter = Meter::new(budget);
    // n distinct colours always work
    for k in 1..=n as u32 {
        if let Some(col) = solve_with_meter(g, &ListAssignment::uniform(n, k), &mut meter)? {
            return Ok((k, col));
        }
    }
    unreachable!("a colouring with all colours distinct is capital")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ProbeOutcome {
    AllSatisfied { assignments: u64 },
    Counterexample { lists: Vec<Vec<u32>> },
}

/// k-subsets of `1..=m` in lexicographic order.
fn subsets(m: u32, k: u32) -> Vec<Vec<u32>> {
    fn rec(start: u32, m: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() as u32 == k {
            out.push(cur.clone());
            return;
        }
        for c in start..=m {
            if m - c + 1 < k - cur.len() as u32 {
                break;
            }
            cur.push(c);
            rec(c + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, m, k, &mut Vec::new(), &mut out);
    out
}

/// Tries every assignment of `k`-subsets of `1..=m`. Only the relative order
/// of colours matters, so assignments whose colours do not form an initial
/// segment `1..=j` are skipped: each is an order-preserving relabelling of
/// one that does.
pub fn probe_choosability(g: &PlaneGraph, k: u32, m: u32, budget: SolveBudget) -> Result<ProbeOutcome, ExactError> {
    let n = g.vertex_count();
    if k == 0 || m < k {
        return Err(ExactError::BadParams(format!("need 1 <= k <= m, got k = {k}, m = {m}")));
    }
    if n == 0 {
        return Err(ExactError::EmptyGraph);
    }
    let choices = subsets(m, k);
    let mut idx = vec![0usize; n];
    let mut meter = Meter::new(budget);
    let mut tried = 0u64;
    loop {
        let lists: Vec<Vec<u32>> = idx.iter().map(|&i| choices[i].clone()).collect();
        let mut used = vec![false; m as usize + 1];
        for l in &lists {
            for &c in l {
                used[c as usize] = true;
            }
        }
        let top = (1..=m as usize).rev().find(|&c| used[c]).unwrap_or(0);
        if (1..=top).all(|c| used[c]) {
            tried += 1;
            let assignment = ListAssignment::new(lists.clone()).expect("k-subsets are nonempty");
            if solve_with_meter(g, &assignment, &mut meter)?.is_none() {
                return Ok(ProbeOutcome::Counterexample { lists });
            }
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(ProbeOutcome::AllSatisfied { assignments: tried });
            }
            idx[pos] += 1;
            if idx[pos] < choices.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// `n` lists of `k` distinct colours drawn uniformly from `1..=m`.
pub fn random_lists(n: usize, k: u32, m: u32, seed: u64) -> Result<ListAssignment, ExactError> {
    if k == 0 || m < k {
        return Err(ExactError::BadParams(format!("need 1 <= k <= m, got k = {k}, m = {m}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lists = (0..n)
        .map(|_| sample(&mut rng, m as usize, k as usize).into_iter().map(|c| c as u32 + 1).collect())
        .collect();
    Ok(ListAssignment::new(lists).expect("samples are nonempty and positive"))
}
