//! Exact acyclic chromatic index by backtracking, for small graphs.
//!
//! Edges are colored in descending order of endpoint degree sum. A color is
//! rejected when an endpoint already sees it, or when it closes a
//! bichromatic cycle: assigning `c` to `ab` can only close a cycle in colors
//! `{c, d}` with `d` seen at both `a` and `b`, so just those pairs are
//! walked. Colors are interchangeable, so the i-th color to appear is at
//! most `i`.

use std::time::{Duration, Instant};

use crate::coloring::{Color, PartialEdgeColoring, MAX_PALETTE};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Limits on a single search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub wall_clock: Option<Duration>,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, wall_clock: Option<Duration>) -> Result<Self> {
        if max_nodes == 0 || wall_clock.is_some_and(|d| d.is_zero()) {
            return Err(Error::Argument("search budget must be positive".into()));
        }
        Ok(SearchBudget { max_nodes, wall_clock })
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes: max_nodes.max(1),
            wall_clock: None,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 50_000_000,
            wall_clock: Some(Duration::from_secs(30)),
        }
    }
}

/// The search ran out of budget before reaching an answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exhausted {
    pub nodes: u64,
}

impl From<Exhausted> for Error {
    fn from(e: Exhausted) -> Self {
        Error::BudgetExhausted { nodes: e.nodes }
    }
}

const NONE: u32 = u32::MAX;

struct Search<'a> {
    k: usize,
    edges: &'a [(u32, u32)],
    /// `at[v * (k + 1) + c]`: far end of the `c`-edge at `v`.
    at: Vec<u32>,
    /// Colors on each vertex, for the shared-color scan.
    seen: Vec<Vec<u16>>,
    assigned: Vec<u16>,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl Search<'_> {
    fn via(&self, v: u32, c: usize) -> u32 {
        self.at[v as usize * (self.k + 1) + c]
    }

    fn link(&mut self, a: u32, b: u32, c: usize, on: bool) {
        let stride = self.k + 1;
        self.at[a as usize * stride + c] = if on { b } else { NONE };
        self.at[b as usize * stride + c] = if on { a } else { NONE };
        for v in [a, b] {
            let list = &mut self.seen[v as usize];
            if on {
                list.push(c as u16);
            } else if let Some(i) = list.iter().rposition(|&x| x as usize == c) {
                list.swap_remove(i);
            }
        }
    }

    /// Walks `d, c, d, ...` from `a`; with `ab` colored `c` this closes a
    /// cycle exactly when the walk stops at `b`.
    fn closes_cycle(&self, a: u32, b: u32, c: usize) -> bool {
        self.seen[a as usize].iter().any(|&d| {
            let d = d as usize;
            if self.via(b, d) == NONE {
                return false;
            }
            let mut at = a;
            let mut want = d;
            loop {
                let next = self.via(at, want);
                if next == NONE {
                    return at == b;
                }
                at = next;
                want = if want == d { c } else { d };
            }
        })
    }

    fn run(&mut self, i: usize, used: usize) -> std::result::Result<bool, Exhausted> {
        if i == self.edges.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Exhausted { nodes: self.nodes - 1 });
        }
        if self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|t| Instant::now() > t) {
            return Err(Exhausted { nodes: self.nodes });
        }
        let (a, b) = self.edges[i];
        let top = self.k.min(used + 1);
        for c in 1..=top {
            if self.via(a, c) != NONE || self.via(b, c) != NONE || self.closes_cycle(a, b, c) {
                continue;
            }
            self.link(a, b, c, true);
            self.assigned[i] = c as u16;
            if self.run(i + 1, used.max(c))? {
                return Ok(true);
            }
            self.link(a, b, c, false);
        }
        self.assigned[i] = 0;
        Ok(false)
    }
}

/// Edges sorted by descending endpoint degree sum, then by edge.
pub fn search_order(g: &Graph) -> Vec<Edge> {
    let mut edges = g.edges();
    edges.sort_by_key(|e| (std::cmp::Reverse(g.deg(e.lo()) + g.deg(e.hi())), *e));
    edges
}

/// An acyclic edge coloring of `g` over `[k]`, or `None` when none exists.
pub fn find_acyclic_coloring(
    g: &Graph,
    k: usize,
    budget: SearchBudget,
) -> std::result::Result<Option<PartialEdgeColoring>, Exhausted> {
    let deadline = budget.wall_clock.map(|d| Instant::now() + d);
    solve(g, k, budget.max_nodes, deadline).0
}

type Outcome = std::result::Result<Option<PartialEdgeColoring>, Exhausted>;

/// Runs one search and reports the nodes it expanded.
fn solve(g: &Graph, k: usize, max_nodes: u64, deadline: Option<Instant>) -> (Outcome, u64) {
    let n = g.vertex_count();
    // All-distinct colors are always acyclic, so `m` colors suffice.
    let k = k.min(g.edge_count().max(1)).min(MAX_PALETTE);
    if g.max_degree() > k {
        return (Ok(None), 0);
    }
    let order = search_order(g);
    let edges: Vec<(u32, u32)> = order.iter().map(|e| (e.lo().0, e.hi().0)).collect();
    let mut search = Search {
        k,
        edges: &edges,
        at: vec![NONE; n * (k + 1)],
        seen: vec![Vec::new(); n],
        assigned: vec![0; edges.len()],
        nodes: 0,
        max_nodes,
        deadline,
    };
    let found = match search.run(0, 0) {
        Ok(found) => found,
        Err(e) => return (Err(e), search.nodes),
    };
    if !found {
        return (Ok(None), search.nodes);
    }
    let mut phi = PartialEdgeColoring::new(n, k).expect("palette within bounds");
    for (e, &c) in order.iter().zip(&search.assigned) {
        phi.set(e.lo(), e.hi(), Color::new(c as usize))
            .expect("search colors stay in the palette");
    }
    (Ok(Some(phi)), search.nodes)
}

/// Whether `g` has an acyclic edge coloring with `k` colors.
pub fn is_acyclically_k_colorable(g: &Graph, k: usize, budget: SearchBudget) -> Result<bool> {
    if k == 0 {
        return Err(Error::Argument("k must be at least 1".into()));
    }
    Ok(find_acyclic_coloring(g, k, budget)?.is_some())
}

/// The least `k` admitting an acyclic edge coloring, searched upward from
/// the maximum degree. One budget covers the whole climb.
pub fn exact_chi_a(g: &Graph, budget: SearchBudget) -> std::result::Result<usize, Exhausted> {
    exact_chi_a_with_witness(g, budget).map(|(k, _)| k)
}

/// As [`exact_chi_a`], with a coloring that attains it.
pub fn exact_chi_a_with_witness(
    g: &Graph,
    budget: SearchBudget,
) -> std::result::Result<(usize, PartialEdgeColoring), Exhausted> {
    if g.edge_count() == 0 {
        let phi = PartialEdgeColoring::new(g.vertex_count(), 0).expect("empty palette");
        return Ok((0, phi));
    }
    let deadline = budget.wall_clock.map(|d| Instant::now() + d);
    let mut spent = 0u64;
    let mut k = g.max_degree();
    loop {
        let (outcome, nodes) = solve(g, k, budget.max_nodes - spent, deadline);
        spent += nodes;
        match outcome {
            Ok(Some(phi)) => return Ok((k, phi)),
            Ok(None) if spent < budget.max_nodes => k += 1,
            Ok(None) => return Err(Exhausted { nodes: spent }),
            Err(_) => return Err(Exhausted { nodes: spent }),
        }
    }
}
