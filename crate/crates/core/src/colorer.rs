//! Acyclic edge coloring with at most `Δ + 10` colors.
//!
//! The graph is taken apart one edge at a time: each step removes an edge
//! `v v1` at a vertex realizing one of A1-A4, with `v1` its lowest-degree
//! neighbor. Edges are then put back in reverse order and colored by the
//! first tier that succeeds:
//!
//! * T1: a color missing at both ends that closes no bichromatic cycle.
//! * T2: one recoloring move at `v` or `v1`, then T1. Moves either recolor a
//!   neighbor edge with a free color (colors seen once in the neighbor
//!   multiset first) or swap the colors of two edges at one endpoint.
//! * T3: up to three single-edge recolorings near `v v1`, then T1, within a
//!   fixed state budget.
//! * T4: recolor the whole component of `v v1` by exhaustive search.
//!
//! The palette is fixed at `Δ(G) + 10` for the original graph throughout.
//! Every move is checked before it is kept.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::coloring::{
    critical_path_unchecked, forbidden_unchecked, safe_to_color, Color, ColorMultiset, ColorSet,
    PartialEdgeColoring, MAX_PALETTE,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::oracle::{find_acyclic_coloring, SearchBudget};
use crate::scanner::{kind_for, ConfigKind, Configuration, NeighborDegree};
use crate::SCHEMA;

/// Extension strategy, cheapest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Tier {
    T1,
    T2,
    T3,
    T4,
}

impl Tier {
    pub const ALL: [Tier; 4] = [Tier::T1, Tier::T2, Tier::T3, Tier::T4];

    pub fn level(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_level(level: u8) -> Option<Tier> {
        Tier::ALL.get(usize::from(level).checked_sub(1)?).copied()
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.level())
    }
}

/// Tuning knobs for [`acolor_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorerOptions {
    /// Highest tier allowed before giving up.
    pub max_tier: Tier,
    /// States T3 may visit per extension.
    pub local_budget: u64,
    /// Budget for each T4 search.
    pub exhaustive_budget: SearchBudget,
}

impl Default for ColorerOptions {
    fn default() -> Self {
        ColorerOptions {
            max_tier: Tier::T4,
            local_budget: 100_000,
            exhaustive_budget: SearchBudget::default(),
        }
    }
}

/// One reduction step: the removed edge `[v, v1]`, the configuration at `v`
/// and the tier that later colored the edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub edge: [VertexId; 2],
    pub config: ConfigKind,
    pub tier: Tier,
}

/// Steps in removal order; extensions ran in the opposite order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub k: usize,
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    /// How many extensions each tier handled, indexed T1..T4.
    pub fn tier_counts(&self) -> [usize; 4] {
        let mut out = [0; 4];
        for s in &self.steps {
            out[usize::from(s.tier.level() - 1)] += 1;
        }
        out
    }

    pub fn max_tier(&self) -> Option<Tier> {
        self.steps.iter().map(|s| s.tier).max()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "k": self.k,
            "steps": self.steps,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Doc {
            k: usize,
            steps: Vec<TraceStep>,
        }
        let doc: Doc = serde_json::from_str(text)?;
        Ok(ReductionTrace {
            k: doc.k,
            steps: doc.steps,
        })
    }
}

/// The state at one extension: `phi` colors `G - v v1` (possibly only part
/// of it) and `v v1` is to be colored.
#[derive(Clone, Debug)]
pub struct ExtensionContext<'g> {
    pub graph: &'g Graph,
    /// The configuration vertex.
    pub v: VertexId,
    pub v1: VertexId,
    pub phi: PartialEdgeColoring,
}

impl<'g> ExtensionContext<'g> {
    /// Checks that `v v1` is an uncolored edge of `graph` and that `phi` is
    /// proper and acyclic.
    pub fn new(graph: &'g Graph, phi: PartialEdgeColoring, v: VertexId, v1: VertexId) -> Result<Self> {
        graph.check_vertex(v)?;
        graph.check_vertex(v1)?;
        if !graph.has_edge(v, v1) {
            return Err(Error::MissingEdge(v.index(), v1.index()));
        }
        if phi.vertex_count() != graph.vertex_count() {
            return Err(Error::Argument("coloring and graph differ in vertex count".into()));
        }
        if phi.color_of(v, v1).is_some() {
            return Err(Error::Argument(format!("edge {v}-{v1} is already colored")));
        }
        if let Some(e) = phi.foreign_edges(graph).first() {
            return Err(Error::Argument(format!("colored pair {e} is not an edge")));
        }
        if let Some((x, c)) = phi.first_conflict() {
            return Err(Error::Argument(format!("coloring is improper at {x} (color {c})")));
        }
        if crate::coloring::first_bichromatic_cycle(&phi).is_some() {
            return Err(Error::Argument("coloring already has a bichromatic cycle".into()));
        }
        Ok(ExtensionContext { graph, v, v1, phi })
    }

    pub fn k(&self) -> usize {
        self.phi.palette_size()
    }

    pub fn seen_v(&self) -> ColorSet {
        self.phi.seen(self.v)
    }

    pub fn seen_v1(&self) -> ColorSet {
        self.phi.seen(self.v1)
    }

    /// `C(v) ∩ C(v1)`.
    pub fn shared(&self) -> ColorSet {
        self.seen_v().intersection(&self.seen_v1())
    }

    /// `T = [k] ∖ (C(v) ∪ C(v1))`.
    pub fn free(&self) -> ColorSet {
        ColorSet::palette(self.k()).difference(&self.seen_v().union(&self.seen_v1()))
    }

    /// `⊎ F(p x)` over the colored edges `p x` with `x` other than the far
    /// end of the uncolored edge; `p` is `v` or `v1`.
    pub fn neighbor_multiset(&self, p: VertexId) -> ColorMultiset {
        let other = self.other(p);
        let mut s = ColorMultiset::new();
        for &(_, x) in self.phi.incident(p) {
            if x != other {
                for c in forbidden_unchecked(&self.phi, p, x).iter() {
                    s.add(c);
                }
            }
        }
        s
    }

    fn other(&self, p: VertexId) -> VertexId {
        if p == self.v {
            self.v1
        } else {
            self.v
        }
    }

    fn with_phi(&self, phi: PartialEdgeColoring) -> Self {
        ExtensionContext {
            graph: self.graph,
            v: self.v,
            v1: self.v1,
            phi,
        }
    }
}

/// Picks the next edge to remove. A vertex of degree 1 or 2 wins outright
/// (A1); otherwise the smallest vertex realizing a configuration is used.
/// The edge runs to that vertex's minimum `(degree, id)` neighbor.
pub fn choose_reduction_edge(g: &Graph) -> Result<((VertexId, VertexId), Configuration)> {
    let adj: Vec<Vec<VertexId>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    choose_on(&adj)
}

fn choose_on(adj: &[Vec<VertexId>]) -> Result<((VertexId, VertexId), Configuration)> {
    let deg = |x: VertexId| adj[x.index()].len();
    let configure = |v: VertexId| -> Option<Configuration> {
        let d = adj[v.index()].len();
        if d == 0 || d > 5 {
            return None;
        }
        let mut neighbors: Vec<NeighborDegree> = adj[v.index()]
            .iter()
            .map(|&w| NeighborDegree { v: w, d: deg(w) })
            .collect();
        neighbors.sort_unstable_by_key(|n| (n.d, n.v));
        let ds: Vec<usize> = neighbors.iter().map(|n| n.d).collect();
        kind_for(d, &ds).map(|kind| Configuration { kind, v, neighbors })
    };
    if adj.iter().all(|a| a.is_empty()) {
        return Err(Error::Argument("graph has no edges".into()));
    }
    let ids = || (0..adj.len()).map(VertexId::from);
    let cfg = ids()
        .find(|&v| (1..=2).contains(&deg(v)))
        .and_then(configure)
        .or_else(|| ids().find_map(configure))
        .ok_or_else(|| {
            Error::NotPlanarEvidence(
                "no vertex of the remaining graph realizes A1-A4".into(),
            )
        })?;
    let v1 = cfg.neighbors[0].v;
    Ok(((cfg.v, v1), cfg))
}

/// T1: the smallest free color that closes no bichromatic cycle through
/// `v v1`.
pub fn try_free_color(ctx: &ExtensionContext) -> Option<Color> {
    let shared = ctx.shared();
    ctx.free().iter().find(|&c| {
        shared
            .iter()
            .all(|d| !critical_path_unchecked(&ctx.phi, d, c, ctx.v, ctx.v1))
    })
}

fn colored_at(phi: &PartialEdgeColoring, e: Edge) -> Result<Color> {
    phi.color(e)
        .ok_or_else(|| Error::Argument(format!("edge {e} is not colored")))
}

/// Exchanges the colors of two colored edges meeting at one vertex.
pub fn move_swap_pair(ctx: &ExtensionContext, e1: Edge, e2: Edge) -> Result<PartialEdgeColoring> {
    let hub = e1
        .common_endpoint(e2)
        .filter(|_| e1 != e2)
        .ok_or_else(|| Error::Argument(format!("{e1} and {e2} do not share exactly one endpoint")))?;
    let (a, b) = (colored_at(&ctx.phi, e1)?, colored_at(&ctx.phi, e2)?);
    let (x1, x2) = (e1.other(hub), e2.other(hub));
    // At the hub the two colors only trade places; the far ends must not
    // already see the incoming color.
    if ctx.phi.via(x1, b).is_some() {
        return Err(Error::MoveRejected(format!("{x1} already sees color {b}")));
    }
    if ctx.phi.via(x2, a).is_some() {
        return Err(Error::MoveRejected(format!("{x2} already sees color {a}")));
    }
    let mut phi = ctx.phi.clone();
    phi.unset(hub, x1);
    phi.unset(hub, x2);
    for (x, c) in [(x1, b), (x2, a)] {
        if !safe_to_color(&phi, hub, x, c) {
            return Err(Error::MoveRejected(format!(
                "swapping {e1} and {e2} closes a bichromatic cycle"
            )));
        }
        phi.set(hub, x, c)?;
    }
    Ok(phi)
}

/// Recolors the colored edge `p x` with `alpha`, where `p` is `v` or `v1`.
/// Needs `alpha ∈ T` and `alpha ∉ F(p x)`; acyclicity is then verified.
pub fn move_recolor_neighbor(ctx: &ExtensionContext, edge: Edge, alpha: Color) -> Result<PartialEdgeColoring> {
    let p = [ctx.v, ctx.v1]
        .into_iter()
        .find(|&p| edge.contains(p))
        .ok_or_else(|| Error::Argument(format!("{edge} does not touch {} or {}", ctx.v, ctx.v1)))?;
    let x = edge.other(p);
    colored_at(&ctx.phi, edge)?;
    if !ctx.free().contains(alpha) {
        return Err(Error::Argument(format!("color {alpha} is not free at both ends")));
    }
    if forbidden_unchecked(&ctx.phi, p, x).contains(alpha) {
        return Err(Error::Argument(format!("color {alpha} is already used at {x}")));
    }
    let mut phi = ctx.phi.clone();
    phi.unset(p, x);
    if !safe_to_color(&phi, p, x, alpha) {
        return Err(Error::MoveRejected(format!(
            "recoloring {edge} with {alpha} closes a bichromatic cycle"
        )));
    }
    phi.set(p, x, alpha)?;
    Ok(phi)
}

fn finish(ctx: &ExtensionContext) -> Option<PartialEdgeColoring> {
    let c = try_free_color(ctx)?;
    let mut phi = ctx.phi.clone();
    phi.set(ctx.v, ctx.v1, c).expect("free colors are in the palette");
    Some(phi)
}

/// Colored edges at `p` except the uncolored one, in color order.
fn edges_at(ctx: &ExtensionContext, p: VertexId) -> Vec<(Color, Edge)> {
    let mut out: Vec<(Color, Edge)> = ctx
        .phi
        .incident(p)
        .iter()
        .map(|&(c, x)| (c, Edge::new(p, x)))
        .collect();
    out.sort_unstable();
    out
}

fn tier2(ctx: &ExtensionContext) -> Option<PartialEdgeColoring> {
    let free = ctx.free();
    for p in [ctx.v, ctx.v1] {
        let s = ctx.neighbor_multiset(p);
        let mut alphas: Vec<Color> = free.iter().collect();
        // Colors seen once in the multiset first, then by rarity.
        alphas.sort_by_key(|&a| (s.mult(a) != 1, s.mult(a), a));
        for &(_, e) in &edges_at(ctx, p) {
            for &alpha in &alphas {
                if let Ok(phi) = move_recolor_neighbor(ctx, e, alpha) {
                    if let Some(done) = finish(&ctx.with_phi(phi)) {
                        return Some(done);
                    }
                }
            }
        }
    }
    for p in [ctx.v, ctx.v1] {
        let edges = edges_at(ctx, p);
        for (i, &(_, e1)) in edges.iter().enumerate() {
            for &(_, e2) in &edges[i + 1..] {
                if let Ok(phi) = move_swap_pair(ctx, e1, e2) {
                    if let Some(done) = finish(&ctx.with_phi(phi)) {
                        return Some(done);
                    }
                }
            }
        }
    }
    None
}

struct LocalSearch<'c, 'g> {
    ctx: &'c ExtensionContext<'g>,
    edges: Vec<Edge>,
    states: u64,
    budget: u64,
}

impl LocalSearch<'_, '_> {
    fn run(&mut self, phi: &mut PartialEdgeColoring, depth: usize) -> Option<PartialEdgeColoring> {
        if depth == 0 {
            return None;
        }
        let k = phi.palette_size();
        for i in 0..self.edges.len() {
            let e = self.edges[i];
            let (x, y) = e.endpoints();
            let old = phi.color(e)?;
            let blocked = phi.seen(x).union(&phi.seen(y));
            for beta in ColorSet::palette(k).difference(&blocked).iter() {
                if self.states >= self.budget {
                    return None;
                }
                phi.unset(x, y);
                if safe_to_color(phi, x, y, beta) {
                    self.states += 1;
                    phi.set(x, y, beta).expect("palette color");
                    let found = finish(&self.ctx.with_phi(phi.clone()))
                        .or_else(|| self.run(phi, depth - 1));
                    if found.is_some() {
                        return found;
                    }
                }
                phi.set(x, y, old).expect("palette color");
            }
        }
        None
    }
}

/// Colored edges with an endpoint in `N[v] ∪ N[v1]`, so within distance 2
/// of the uncolored edge. Edges at `v` or `v1` come first.
fn nearby_edges(ctx: &ExtensionContext) -> Vec<Edge> {
    let mut near: Vec<VertexId> = vec![ctx.v, ctx.v1];
    for p in [ctx.v, ctx.v1] {
        near.extend(ctx.phi.incident(p).iter().map(|&(_, x)| x));
    }
    near.sort_unstable();
    near.dedup();
    let mut edges: Vec<Edge> = near
        .iter()
        .flat_map(|&p| ctx.phi.incident(p).iter().map(move |&(_, x)| Edge::new(p, x)))
        .collect();
    edges.sort_unstable_by_key(|e| (!(e.contains(ctx.v) || e.contains(ctx.v1)), *e));
    edges.dedup();
    edges
}

fn tier3(ctx: &ExtensionContext, budget: u64) -> Option<PartialEdgeColoring> {
    let mut search = LocalSearch {
        ctx,
        edges: nearby_edges(ctx),
        states: 0,
        budget,
    };
    (1..=3).find_map(|depth| {
        let mut phi = ctx.phi.clone();
        search.run(&mut phi, depth)
    })
}

/// The component of `v` in the graph of colored edges plus `v v1`,
/// recolored from scratch.
fn tier4(ctx: &ExtensionContext, budget: SearchBudget) -> Result<PartialEdgeColoring> {
    let n = ctx.phi.vertex_count();
    let mut index = vec![usize::MAX; n];
    let mut members = vec![ctx.v];
    index[ctx.v.index()] = 0;
    let mut edges = Vec::new();
    let mut head = 0;
    while head < members.len() {
        let p = members[head];
        head += 1;
        let mut next: Vec<VertexId> = ctx.phi.incident(p).iter().map(|&(_, x)| x).collect();
        if p == ctx.v {
            next.push(ctx.v1);
        } else if p == ctx.v1 {
            next.push(ctx.v);
        }
        for x in next {
            if index[x.index()] == usize::MAX {
                index[x.index()] = members.len();
                members.push(x);
            }
            if p < x {
                edges.push((index[p.index()], index[x.index()]));
            }
        }
    }
    let local = Graph::from_edges(members.len(), edges)?;
    let found = find_acyclic_coloring(&local, ctx.k(), budget)?.ok_or_else(|| {
        Error::NotPlanarEvidence(format!(
            "the component of {}-{} has no acyclic edge coloring with {} colors",
            ctx.v,
            ctx.v1,
            ctx.k()
        ))
    })?;
    let mut phi = ctx.phi.clone();
    for (e, c) in found.colored_edges() {
        phi.set(members[e.lo().index()], members[e.hi().index()], c)?;
    }
    Ok(phi)
}

/// Colors `v v1`, trying tiers in order up to `opts.max_tier`.
pub fn extend_at_edge(ctx: &ExtensionContext, opts: &ColorerOptions) -> Result<(PartialEdgeColoring, Tier)> {
    if let Some(phi) = finish(ctx) {
        return Ok((phi, Tier::T1));
    }
    let cap = |tier: Tier| -> Result<()> {
        if tier > opts.max_tier {
            return Err(Error::TierCapReached {
                u: ctx.v.index(),
                v: ctx.v1.index(),
                max_tier: opts.max_tier.level(),
            });
        }
        Ok(())
    };
    cap(Tier::T2)?;
    if let Some(phi) = tier2(ctx) {
        return Ok((phi, Tier::T2));
    }
    cap(Tier::T3)?;
    if let Some(phi) = tier3(ctx, opts.local_budget) {
        return Ok((phi, Tier::T3));
    }
    cap(Tier::T4)?;
    Ok((tier4(ctx, opts.exhaustive_budget)?, Tier::T4))
}

/// Palette size used for `g`: `Δ(g) + 10`.
pub fn palette_for(g: &Graph) -> Result<usize> {
    let k = g.max_degree() + 10;
    if k > MAX_PALETTE {
        return Err(Error::PaletteTooLarge {
            requested: k,
            max: MAX_PALETTE,
        });
    }
    Ok(k)
}

/// Acyclic edge coloring of `g` with colors from `[Δ(g) + 10]`. The caller
/// asserts `g` is planar; a failure to reduce or extend is reported as
/// [`Error::NotPlanarEvidence`].
pub fn acolor(g: &Graph) -> Result<(PartialEdgeColoring, ReductionTrace)> {
    acolor_with(g, &ColorerOptions::default())
}

pub fn acolor_with(g: &Graph, opts: &ColorerOptions) -> Result<(PartialEdgeColoring, ReductionTrace)> {
    let k = palette_for(g)?;
    let removals = reduce(g)?;
    let mut phi = PartialEdgeColoring::new(g.vertex_count(), k)?;
    let mut steps: Vec<TraceStep> = Vec::with_capacity(removals.len());
    for &((v, v1), config) in removals.iter().rev() {
        let ctx = ExtensionContext {
            graph: g,
            v,
            v1,
            phi,
        };
        let (next, tier) = extend_at_edge(&ctx, opts)?;
        phi = next;
        steps.push(TraceStep {
            edge: [v, v1],
            config,
            tier,
        });
    }
    steps.reverse();
    Ok((phi, ReductionTrace { k, steps }))
}

/// Removal order for `g`.
fn reduce(g: &Graph) -> Result<Vec<((VertexId, VertexId), ConfigKind)>> {
    let mut adj: Vec<Vec<VertexId>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    let mut out = Vec::with_capacity(g.edge_count());
    for _ in 0..g.edge_count() {
        let ((v, v1), cfg) = choose_on(&adj)?;
        adj[v.index()].retain(|&x| x != v1);
        adj[v1.index()].retain(|&x| x != v);
        out.push(((v, v1), cfg.kind));
    }
    Ok(out)
}

/// Rebuilds a coloring from its trace: the removals must consume every edge
/// of `g` exactly once, and re-extending in reverse must reach the recorded
/// tier at every step.
pub fn replay(g: &Graph, trace: &ReductionTrace, opts: &ColorerOptions) -> Result<PartialEdgeColoring> {
    let mut remaining = g.edges().into_iter().collect::<std::collections::HashSet<_>>();
    for s in &trace.steps {
        let [a, b] = s.edge;
        g.check_vertex(a)?;
        g.check_vertex(b)?;
        if a == b || !remaining.remove(&Edge::new(a, b)) {
            return Err(Error::Structural(format!("trace removes {a}-{b}, which is not present")));
        }
    }
    if !remaining.is_empty() {
        return Err(Error::Structural(format!(
            "trace leaves {} edges in place",
            remaining.len()
        )));
    }
    let mut phi = PartialEdgeColoring::new(g.vertex_count(), trace.k)?;
    for s in trace.steps.iter().rev() {
        let ctx = ExtensionContext {
            graph: g,
            v: s.edge[0],
            v1: s.edge[1],
            phi,
        };
        let (next, tier) = extend_at_edge(&ctx, opts)?;
        if tier != s.tier {
            return Err(Error::Structural(format!(
                "edge {}-{} extended at {tier}, trace says {}",
                s.edge[0], s.edge[1], s.tier
            )));
        }
        phi = next;
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::validate_acyclic;
    use crate::embedding::generate_apollonian;
    use crate::families;

    fn v(i: usize) -> VertexId {
        VertexId::from(i)
    }

    fn c(i: usize) -> Color {
        Color::new(i)
    }

    fn colored(n: usize, k: usize, list: &[(usize, usize, usize)]) -> PartialEdgeColoring {
        let mut phi = PartialEdgeColoring::new(n, k).unwrap();
        for &(a, b, x) in list {
            phi.set(v(a), v(b), c(x)).unwrap();
        }
        phi
    }

    fn check(g: &Graph) -> (PartialEdgeColoring, ReductionTrace) {
        let (phi, trace) = acolor(g).unwrap();
        assert!(validate_acyclic(g, &phi).passes());
        assert!(phi.max_color().map_or(0, |c| c.get()) <= g.max_degree() + 10);
        (phi, trace)
    }

    #[test]
    fn choose_examples() {
        let ((a, b), cfg) = choose_reduction_edge(&families::cycle(4)).unwrap();
        assert_eq!(cfg.kind, ConfigKind::A1);
        assert!(families::cycle(4).has_edge(a, b));

        let ((a, b), cfg) = choose_reduction_edge(&families::complete(4)).unwrap();
        assert_eq!(((a, b), cfg.kind), ((v(0), v(1)), ConfigKind::A2));

        let ico = families::icosahedron();
        let ((a, b), cfg) = choose_reduction_edge(&ico).unwrap();
        assert_eq!(cfg.kind, ConfigKind::A4);
        assert!(ico.has_edge(a, b));
        assert_eq!(ico.deg(b), 5);

        assert!(matches!(
            choose_reduction_edge(&families::complete(7)),
            Err(Error::NotPlanarEvidence(_))
        ));
        assert!(choose_reduction_edge(&Graph::empty(3)).is_err());
    }

    #[test]
    fn free_color_examples() {
        let g = families::cycle(4);
        let phi = PartialEdgeColoring::new(4, 12).unwrap();
        let ctx = ExtensionContext::new(&g, phi, v(0), v(1)).unwrap();
        assert_eq!(try_free_color(&ctx), Some(c(1)));

        // a-b-c-d colored 1,2,1, closing edge da.
        let phi = colored(4, 12, &[(0, 1, 1), (1, 2, 2), (2, 3, 1)]);
        let ctx = ExtensionContext::new(&g, phi, v(3), v(0)).unwrap();
        assert_eq!(ctx.shared().iter().collect::<Vec<_>>(), vec![c(1)]);
        assert_eq!(try_free_color(&ctx), Some(c(3)));

        let phi = colored(4, 2, &[(0, 1, 1), (1, 2, 2), (2, 3, 1)]);
        let ctx = ExtensionContext::new(&g, phi, v(3), v(0)).unwrap();
        assert_eq!(try_free_color(&ctx), None);
    }

    #[test]
    fn free_color_avoids_critical_paths() {
        // Path 0-1-2-3 colored 1,2,1 plus the pendant 0-4 colored 3. Only 2
        // is free for 0-3, and the (1,2,0,3)-critical path blocks it.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let phi = colored(5, 3, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 4, 3)]);
        let ctx = ExtensionContext::new(&g, phi, v(0), v(3)).unwrap();
        assert_eq!(ctx.free().iter().collect::<Vec<_>>(), vec![c(2)]);
        assert_eq!(try_free_color(&ctx), None);
    }

    #[test]
    fn swap_examples() {
        let g = families::star(3);
        let phi = colored(4, 5, &[(0, 1, 1), (0, 2, 2)]);
        let ctx = ExtensionContext::new(&g, phi, v(0), v(3)).unwrap();
        let out = move_swap_pair(&ctx, Edge::from_indices(0, 1), Edge::from_indices(0, 2)).unwrap();
        assert_eq!(out.color_of(v(0), v(1)), Some(c(2)));
        assert_eq!(out.color_of(v(0), v(2)), Some(c(1)));

        // a-b-c with c-d: ab=1, bc=2, cd=1.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let phi = colored(5, 5, &[(0, 1, 1), (1, 2, 2), (2, 3, 1)]);
        let ctx = ExtensionContext::new(&g, phi, v(3), v(4)).unwrap();
        assert!(matches!(
            move_swap_pair(&ctx, Edge::from_indices(0, 1), Edge::from_indices(1, 2)),
            Err(Error::MoveRejected(_))
        ));
        assert!(move_swap_pair(&ctx, Edge::from_indices(0, 1), Edge::from_indices(2, 3)).is_err());
    }

    #[test]
    fn swap_on_k4_minus_edge() {
        // K4 - {2,3}: 0 and 1 are the degree-3 vertices.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let phi = colored(4, 5, &[(0, 2, 1), (0, 3, 2), (1, 2, 3), (1, 3, 4)]);
        let ctx = ExtensionContext::new(&g, phi, v(0), v(1)).unwrap();
        let out = move_swap_pair(&ctx, Edge::from_indices(0, 2), Edge::from_indices(0, 3)).unwrap();
        assert!(validate_acyclic(&g.remove_edge(v(0), v(1)).unwrap(), &out).passes());
    }

    #[test]
    fn recolor_examples() {
        let g = families::path(4);
        let phi = colored(4, 5, &[(0, 1, 1), (2, 3, 2)]);
        let ctx = ExtensionContext::new(&g, phi, v(1), v(2)).unwrap();
        let out = move_recolor_neighbor(&ctx, Edge::from_indices(0, 1), c(4)).unwrap();
        assert_eq!(out.color_of(v(0), v(1)), Some(c(4)));
        // 2 is seen at v1 = 2, so it is not free.
        assert!(matches!(
            move_recolor_neighbor(&ctx, Edge::from_indices(0, 1), c(2)),
            Err(Error::Argument(_))
        ));
        assert!(move_recolor_neighbor(&ctx, Edge::from_indices(2, 3), c(1)).is_err());
    }

    #[test]
    fn recolor_rejects_forbidden_colors() {
        // v = 0 with neighbor 1; 1-2 carries color 3, so F(01) holds 3.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 3)]).unwrap();
        let phi = colored(4, 5, &[(0, 1, 1), (1, 2, 3)]);
        let ctx = ExtensionContext::new(&g, phi, v(0), v(3)).unwrap();
        assert!(matches!(
            move_recolor_neighbor(&ctx, Edge::from_indices(0, 1), c(3)),
            Err(Error::Argument(_))
        ));
        let s = ctx.neighbor_multiset(v(0));
        assert_eq!(s.mult(c(3)), 1);
        let out = move_recolor_neighbor(&ctx, Edge::from_indices(0, 1), c(2)).unwrap();
        assert!(validate_acyclic(&g, &out).proper);
    }

    #[test]
    fn extend_tree_and_cycle() {
        let g = families::path(3);
        let phi = colored(3, 12, &[(0, 1, 1)]);
        let ctx = ExtensionContext::new(&g, phi, v(1), v(2)).unwrap();
        let (out, tier) = extend_at_edge(&ctx, &ColorerOptions::default()).unwrap();
        assert_eq!(tier, Tier::T1);
        assert_eq!(out.color_of(v(1), v(2)), Some(c(2)));

        let g = families::cycle(4);
        let phi = colored(4, 12, &[(0, 1, 1), (1, 2, 2), (2, 3, 1)]);
        let ctx = ExtensionContext::new(&g, phi, v(3), v(0)).unwrap();
        let (out, tier) = extend_at_edge(&ctx, &ColorerOptions::default()).unwrap();
        assert_eq!((tier, out.color_of(v(3), v(0))), (Tier::T1, Some(c(3))));
    }

    #[test]
    fn higher_tiers_when_palette_is_tight() {
        // C4 needs 3 colors, so with 2 every tier fails and T4 proves it.
        let g = families::cycle(4);
        let phi = colored(4, 2, &[(0, 1, 1), (1, 2, 2), (2, 3, 1)]);
        let ctx = ExtensionContext::new(&g, phi, v(3), v(0)).unwrap();
        assert!(matches!(
            extend_at_edge(&ctx, &ColorerOptions::default()),
            Err(Error::NotPlanarEvidence(_))
        ));
        let capped = ColorerOptions {
            max_tier: Tier::T1,
            ..ColorerOptions::default()
        };
        assert!(matches!(
            extend_at_edge(&ctx, &capped),
            Err(Error::TierCapReached { .. })
        ));

    }

    #[test]
    fn wheel_needs_a_move() {
        // W5 over 5 colors: 0 sees {2,3,4,5} and 2 sees {2,4}, so only 1 is
        // free and the (2,1,0,2)-critical path 0-5-1-2 blocks it.
        let g = families::wheel(5);
        let phi = colored(
            6,
            5,
            &[(0, 1, 3), (0, 3, 5), (0, 4, 4), (0, 5, 2), (1, 2, 2), (1, 5, 1), (2, 3, 4), (3, 4, 3), (4, 5, 5)],
        );
        let ctx = ExtensionContext::new(&g, phi, v(0), v(2)).unwrap();
        assert_eq!(ctx.free().iter().collect::<Vec<_>>(), vec![c(1)]);
        assert_eq!(try_free_color(&ctx), None);
        let (out, tier) = extend_at_edge(&ctx, &ColorerOptions::default()).unwrap();
        assert_eq!(tier, Tier::T2);
        assert!(validate_acyclic(&g, &out).passes());
    }

    #[test]
    fn wheel_needs_local_search() {
        let g = families::wheel(5);
        let phi = colored(
            6,
            5,
            &[(0, 1, 1), (0, 3, 3), (0, 4, 5), (0, 5, 4), (1, 2, 3), (1, 5, 2), (2, 3, 2), (3, 4, 1), (4, 5, 3)],
        );
        let ctx = ExtensionContext::new(&g, phi, v(0), v(2)).unwrap();
        let capped = ColorerOptions {
            max_tier: Tier::T2,
            ..ColorerOptions::default()
        };
        assert!(matches!(extend_at_edge(&ctx, &capped), Err(Error::TierCapReached { max_tier: 2, .. })));
        let (out, tier) = extend_at_edge(&ctx, &ColorerOptions::default()).unwrap();
        assert_eq!(tier, Tier::T3);
        assert!(validate_acyclic(&g, &out).passes());
    }

    #[test]
    fn star_uses_one_color_per_edge() {
        let g = families::star(6);
        let (phi, trace) = check(&g);
        assert_eq!(phi.used_colors().len(), 6);
        assert_eq!(phi.max_color(), Some(c(6)));
        assert!(trace.steps.iter().all(|s| s.tier == Tier::T1));
    }

    #[test]
    fn small_families() {
        check(&families::complete(4));
        check(&families::dodecahedron());
        check(&families::icosahedron());
        check(&families::octahedron());
        check(&families::grid(4, 4));
        check(&families::wheel(9));
        let (phi, trace) = check(&Graph::empty(4));
        assert_eq!(phi.colored_count(), 0);
        assert!(trace.steps.is_empty());
        let (phi, _) = check(&families::path(2));
        assert_eq!(phi.color_of(v(0), v(1)), Some(c(1)));
    }

    #[test]
    fn apollonian_run_and_replay() {
        let (g, _) = generate_apollonian(200, 3).unwrap();
        let (phi, trace) = check(&g);
        assert_eq!(trace.steps.len(), g.edge_count());
        assert!(trace.max_tier().unwrap() <= Tier::T3);
        let again = replay(&g, &trace, &ColorerOptions::default()).unwrap();
        assert_eq!(again, phi);
        let json = trace.to_json().to_string();
        assert_eq!(ReductionTrace::from_json(&json).unwrap(), trace);
    }

    #[test]
    fn replay_rejects_bad_traces() {
        let g = families::cycle(5);
        let (_, mut trace) = acolor(&g).unwrap();
        trace.steps.pop();
        assert!(replay(&g, &trace, &ColorerOptions::default()).is_err());
    }

    #[test]
    fn components_are_independent() {
        let w = families::wheel(6);
        let n = w.vertex_count();
        let doubled = Graph::from_edges(
            2 * n,
            w.edges()
                .into_iter()
                .flat_map(|e| [(e.lo().index(), e.hi().index()), (e.lo().index() + n, e.hi().index() + n)]),
        )
        .unwrap();
        let (phi, _) = check(&doubled);
        for e in w.edges() {
            let shifted = phi.color_of(v(e.lo().index() + n), v(e.hi().index() + n));
            assert_eq!(phi.color(e), shifted);
        }
    }

    #[test]
    fn deterministic() {
        let (g, _) = generate_apollonian(120, 11).unwrap();
        let a = acolor(&g).unwrap();
        let b = acolor(&g).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.1, b.1);
    }
}
