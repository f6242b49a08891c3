//! Simple undirected graphs with dense vertex ids.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense vertex identifier, `0 <= index < vertex_count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i as u32)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Unordered vertex pair stored with the smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn from_indices(a: usize, b: usize) -> Self {
        Edge::new(a.into(), b.into())
    }

    pub fn lo(self) -> VertexId {
        self.0
    }

    pub fn hi(self) -> VertexId {
        self.1
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.0, self.1)
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`. Caller guarantees `v` is an endpoint.
    pub fn other(self, v: VertexId) -> VertexId {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }

    /// Shared endpoint of two distinct edges, if they meet in exactly one vertex.
    pub fn common_endpoint(self, other: Edge) -> Option<VertexId> {
        if self == other {
            return None;
        }
        [self.0, self.1].into_iter().find(|&v| other.contains(v))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Finite simple undirected graph.
///
/// Adjacency lists are kept sorted by id; the edge set is kept alongside for
/// constant-time membership tests. Values are immutable: edge removal and
/// vertex deletion return new graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    edges: HashSet<Edge>,
}

impl Graph {
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); vertex_count],
            edges: HashSet::new(),
        }
    }

    /// Builds a graph from an edge list. Self-loops and duplicate edges are
    /// rejected, as are endpoints outside `0..vertex_count`.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(vertex_count);
        for (a, b) in edges {
            g.insert_edge(a, b)?;
        }
        g.sort_adjacency();
        Ok(g)
    }

    fn insert_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.vertex_count();
        if a >= n || b >= n {
            return Err(Error::InvalidVertex {
                vertex: a.max(b),
                vertex_count: n,
            });
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        let e = Edge::from_indices(a, b);
        if !self.edges.insert(e) {
            return Err(Error::DuplicateEdge(a, b));
        }
        self.adjacency[a].push(b.into());
        self.adjacency[b].push(a.into());
        Ok(())
    }

    fn sort_adjacency(&mut self) {
        for list in &mut self.adjacency {
            list.sort_unstable();
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(VertexId::from)
    }

    /// All edges in ascending `(lo, hi)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, list) in self.adjacency.iter().enumerate() {
            for &b in list {
                if a < b.index() {
                    out.push(Edge::from_indices(a, b.index()));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.index() < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v.index(),
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// N(v), sorted by id. Panics on an out-of-range id.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v.index()]
    }

    /// d(v) for a vertex known to be valid.
    #[inline]
    pub fn deg(&self, v: VertexId) -> usize {
        self.adjacency[v.index()].len()
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edges.contains(&Edge::new(a, b))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// N_k(v) and n_k(v): the neighbors of `v` having degree exactly `k`.
    pub fn degree_class_neighbors(&self, v: VertexId, k: usize) -> Result<(Vec<VertexId>, usize)> {
        self.check_vertex(v)?;
        let class: Vec<VertexId> = self
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&x| self.deg(x) == k)
            .collect();
        let count = class.len();
        Ok((class, count))
    }

    /// G - uv.
    pub fn remove_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let e = Edge::new(u, v);
        if !self.edges.contains(&e) {
            return Err(Error::MissingEdge(u.index(), v.index()));
        }
        let mut g = self.clone();
        g.edges.remove(&e);
        g.adjacency[u.index()].retain(|&x| x != v);
        g.adjacency[v.index()].retain(|&x| x != u);
        Ok(g)
    }

    /// G + uv.
    pub fn add_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u.index(), v.index())?;
        g.adjacency[u.index()].sort_unstable();
        g.adjacency[v.index()].sort_unstable();
        Ok(g)
    }

    /// Deletes every vertex of degree exactly 2 in a single pass. Vertices
    /// that become 2-vertices as a result are kept.
    pub fn delete_two_vertices(&self) -> Subgraph {
        let keep: Vec<VertexId> = self.vertices().filter(|&v| self.deg(v) != 2).collect();
        self.induced(&keep)
    }

    /// Subgraph induced by `keep`, relabelled densely in the given order.
    pub fn induced(&self, keep: &[VertexId]) -> Subgraph {
        let mut to_sub = HashMap::with_capacity(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            to_sub.insert(v, VertexId::from(i));
        }
        let mut g = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for w in self.neighbors(v) {
                if let Some(&j) = to_sub.get(w) {
                    if i < j.index() {
                        g.insert_edge(i, j.index())
                            .expect("induced subgraph of a simple graph is simple");
                    }
                }
            }
        }
        g.sort_adjacency();
        Subgraph {
            graph: g,
            original: keep.to_vec(),
        }
    }

    /// Connected components, each sorted by id, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![VertexId::from(s)];
            let mut head = 0;
            while head < comp.len() {
                let x = comp[head];
                head += 1;
                for &y in self.neighbors(x) {
                    if !seen[y.index()] {
                        seen[y.index()] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertices reachable from `start`, in BFS order.
    pub fn component_of(&self, start: VertexId) -> Vec<VertexId> {
        let mut seen = vec![false; self.vertex_count()];
        seen[start.index()] = true;
        let mut order = vec![start];
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &y in self.neighbors(x) {
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    order.push(y);
                }
            }
        }
        order
    }

    /// Parses the edge-list text format: a header line `n m` followed by `m`
    /// lines `u v` with 0-based ids. Blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut g = Graph::empty(n);
        let mut read = 0usize;
        for (lineno, line) in lines {
            let (a, b) = parse_pair(lineno, line)?;
            g.insert_edge(a, b).map_err(|e| Error::Parse {
                line: lineno,
                message: e.to_string(),
            })?;
            read += 1;
        }
        if read != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header declares {m} edges but {read} were given"),
            });
        }
        g.sort_adjacency();
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for e in self.edges() {
            out.push_str(&format!("{} {}\n", e.lo(), e.hi()));
        }
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut field = |name: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("missing {name}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("`{tok}` is not a nonnegative integer"),
        })
    };
    let a = field("first field")?;
    let b = field("second field")?;
    if let Some(extra) = it.next() {
        return Err(Error::Parse {
            line,
            message: format!("unexpected trailing token `{extra}`"),
        });
    }
    Ok((a, b))
}

/// A graph derived from a parent, with each vertex mapped back to its id in
/// the parent.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub original: Vec<VertexId>,
}

impl Subgraph {
    pub fn to_parent(&self, v: VertexId) -> VertexId {
        self.original[v.index()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn v(i: usize) -> VertexId {
        VertexId::from(i)
    }

    #[test]
    fn degree_examples() {
        let c3 = families::cycle(3);
        assert!(c3.vertices().all(|x| c3.degree(x).unwrap() == 2));
        let k4 = families::complete(4);
        assert!(k4.vertices().all(|x| k4.degree(x).unwrap() == 3));
        let star = families::star(6);
        assert_eq!(star.degree(v(0)).unwrap(), 6);
        assert!(matches!(star.degree(v(7)), Err(Error::InvalidVertex { .. })));
    }

    #[test]
    fn degree_classes() {
        let star = families::star(6);
        let (set, count) = star.degree_class_neighbors(v(0), 1).unwrap();
        assert_eq!(count, 6);
        assert_eq!(set, (1..=6).map(v).collect::<Vec<_>>());

        let k4 = families::complete(4);
        assert_eq!(k4.degree_class_neighbors(v(2), 3).unwrap().1, 3);
        assert_eq!(k4.degree_class_neighbors(v(2), 2).unwrap(), (vec![], 0));
        assert!(k4.degree_class_neighbors(v(4), 2).is_err());
    }

    #[test]
    fn delete_two_vertices_examples() {
        assert_eq!(families::cycle(4).delete_two_vertices().graph.vertex_count(), 0);

        // K4 with edge 0-1 subdivided by vertex 4.
        let g = Graph::from_edges(5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 1)]).unwrap();
        let h = g.delete_two_vertices();
        assert_eq!(h.graph.vertex_count(), 4);
        assert_eq!(h.graph.edge_count(), 5);
        assert_eq!(h.original, vec![v(0), v(1), v(2), v(3)]);
        assert!(!h.graph.has_edge(v(0), v(1)));

        let p3 = families::path(3);
        let h = p3.delete_two_vertices();
        assert_eq!(h.graph.vertex_count(), 2);
        assert_eq!(h.graph.edge_count(), 0);
        assert_eq!(h.original, vec![v(0), v(2)]);
    }

    #[test]
    fn delete_two_vertices_is_single_pass() {
        // Path 0-1-2-3-4 plus pendant 5 on 2: vertices 1 and 3 go, leaving 2 with degree 1.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        let h = g.delete_two_vertices();
        assert_eq!(h.original, vec![v(0), v(2), v(4), v(5)]);
        assert_eq!(h.graph.edge_count(), 1);

        // Triangle with a pendant path: removing the 2-vertices creates a new 2-vertex.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let h = g.delete_two_vertices();
        assert_eq!(h.original, vec![v(2), v(4)]);
    }

    #[test]
    fn remove_edge_examples() {
        let k4 = families::complete(4);
        let g = k4.remove_edge(v(0), v(1)).unwrap();
        assert_eq!(g.edge_count(), 5);
        let mut degs: Vec<usize> = g.vertices().map(|x| g.deg(x)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![3, 3, 2, 2]);

        let p3 = families::cycle(3).remove_edge(v(0), v(2)).unwrap();
        assert_eq!(p3, families::path(3));

        let p2 = families::path(2).remove_edge(v(1), v(0)).unwrap();
        assert_eq!(p2.edge_count(), 0);
        assert_eq!(p2.vertex_count(), 2);

        assert!(matches!(p2.remove_edge(v(0), v(1)), Err(Error::MissingEdge(0, 1))));
    }

    #[test]
    fn remove_then_add_restores() {
        let g = families::wheel(6);
        for e in g.edges() {
            let h = g.remove_edge(e.lo(), e.hi()).unwrap();
            assert_eq!(h.add_edge(e.lo(), e.hi()).unwrap(), g);
        }
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let text = "4 3\n0 1\n1 2\n2 3\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g.to_edge_list(), text);

        let dup = Graph::parse_edge_list("3 2\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(dup, Error::Parse { line: 3, .. }), "{dup}");
        let looped = Graph::parse_edge_list("3 1\n2 2\n").unwrap_err();
        assert!(matches!(looped, Error::Parse { line: 2, .. }), "{looped}");
        let count = Graph::parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(count, Error::Parse { line: 1, .. }));
        assert!(Graph::parse_edge_list("3 1\n0 x\n").is_err());
    }

    #[test]
    fn handshake() {
        for g in [families::complete(5), families::grid(3, 4), families::wheel(7)] {
            let total: usize = g.vertices().map(|x| g.deg(x)).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }
}
