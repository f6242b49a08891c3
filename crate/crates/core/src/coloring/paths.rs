//! Bichromatic paths, critical paths and acyclicity checks.

use serde::Serialize;

use super::color::{Color, ColorSet};
use super::partial::PartialEdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// A maximal walk alternating between two colors. When `cycle` is set the
/// walk is closed: the last vertex is joined back to the first by an edge
/// whose color is the final entry of `edge_colors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BichromaticPath {
    pub vertices: Vec<VertexId>,
    pub colors: (Color, Color),
    pub edge_colors: Vec<Color>,
    pub cycle: bool,
}

impl BichromaticPath {
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.vertices.len();
        let mut out: Vec<Edge> = self
            .vertices
            .windows(2)
            .map(|w| Edge::new(w[0], w[1]))
            .collect();
        if self.cycle && n >= 2 {
            out.push(Edge::new(self.vertices[n - 1], self.vertices[0]));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.edge_colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_colors.is_empty()
    }
}

/// Result of following alternating colors from a start vertex.
struct Walk {
    /// Vertices reached after the start, in order.
    vertices: Vec<VertexId>,
    colors: Vec<Color>,
    closed: bool,
}

/// Follows the `first`-edge at `start`, then `second`, `first`, ... until
/// the next edge is missing or the walk returns to `start`.
fn alternate(phi: &PartialEdgeColoring, start: VertexId, first: Color, second: Color) -> Walk {
    let mut vertices = Vec::new();
    let mut colors = Vec::new();
    let mut at = start;
    let mut want = first;
    // Bounds the walk on improper input, where the alternating subgraph can
    // contain a lasso that never returns to `start`.
    let cap = phi.colored_count();
    while colors.len() <= cap {
        let Some(next) = phi.via(at, want) else {
            break;
        };
        colors.push(want);
        if next == start {
            return Walk {
                vertices,
                colors,
                closed: true,
            };
        }
        vertices.push(next);
        at = next;
        want = if want == first { second } else { first };
    }
    Walk {
        vertices,
        colors,
        closed: false,
    }
}

/// C(v).
pub fn seen_colors(phi: &PartialEdgeColoring, v: VertexId) -> ColorSet {
    phi.seen(v)
}

/// F(uv): the colors on edges at `v` other than `vu`. Not symmetric in
/// `u` and `v`.
pub fn forbidden_from(g: &Graph, phi: &PartialEdgeColoring, u: VertexId, v: VertexId) -> Result<ColorSet> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::Argument(format!("{u}{v} is not an edge")));
    }
    Ok(forbidden_unchecked(phi, u, v))
}

pub(crate) fn forbidden_unchecked(phi: &PartialEdgeColoring, u: VertexId, v: VertexId) -> ColorSet {
    phi.incident(v)
        .iter()
        .filter(|&&(_, w)| w != u)
        .map(|&(c, _)| c)
        .collect()
}

fn check_pair(alpha: Color, beta: Color) -> Result<()> {
    if alpha == beta {
        return Err(Error::Argument(format!(
            "bichromatic colors must differ, got {alpha} twice"
        )));
    }
    Ok(())
}

/// The maximal (α,β)-path through `v`, or `None` when `v` has neither an
/// α-edge nor a β-edge. The path is read from the end reached via β through
/// `v` to the end reached via α; a closed walk starts at `v` and leaves it
/// along its α-edge.
pub fn maximal_bichromatic_path(
    g: &Graph,
    phi: &PartialEdgeColoring,
    v: VertexId,
    alpha: Color,
    beta: Color,
) -> Result<Option<BichromaticPath>> {
    check_pair(alpha, beta)?;
    g.check_vertex(v)?;
    Ok(bichromatic_path_unchecked(phi, v, alpha, beta))
}

pub(crate) fn bichromatic_path_unchecked(
    phi: &PartialEdgeColoring,
    v: VertexId,
    alpha: Color,
    beta: Color,
) -> Option<BichromaticPath> {
    let fwd = alternate(phi, v, alpha, beta);
    if fwd.closed {
        let mut vertices = vec![v];
        vertices.extend(fwd.vertices);
        return Some(BichromaticPath {
            vertices,
            colors: (alpha, beta),
            edge_colors: fwd.colors,
            cycle: true,
        });
    }
    let back = alternate(phi, v, beta, alpha);
    if fwd.colors.is_empty() && back.colors.is_empty() {
        return None;
    }
    let mut vertices: Vec<VertexId> = fwd.vertices.into_iter().rev().collect();
    vertices.push(v);
    vertices.extend(back.vertices);
    let mut edge_colors: Vec<Color> = fwd.colors.into_iter().rev().collect();
    edge_colors.extend(back.colors);
    Some(BichromaticPath {
        vertices,
        colors: (alpha, beta),
        edge_colors,
        cycle: false,
    })
}

/// Whether an (α,β,u,v)-critical path exists: the maximal (α,β)-path that
/// has `u` as an end, leaves `u` on an α-edge and ends at `v` on an α-edge.
pub fn exists_critical_path(
    g: &Graph,
    phi: &PartialEdgeColoring,
    alpha: Color,
    beta: Color,
    u: VertexId,
    v: VertexId,
) -> Result<bool> {
    check_pair(alpha, beta)?;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::Argument("critical path endpoints must differ".into()));
    }
    Ok(critical_path_unchecked(phi, alpha, beta, u, v))
}

#[inline]
pub(crate) fn critical_path_unchecked(
    phi: &PartialEdgeColoring,
    alpha: Color,
    beta: Color,
    u: VertexId,
    v: VertexId,
) -> bool {
    if phi.via(u, beta).is_some() || phi.via(v, beta).is_some() || phi.via(v, alpha).is_none() {
        return false;
    }
    let mut at = u;
    let mut want = alpha;
    let mut steps = 0usize;
    let cap = phi.colored_count();
    loop {
        let Some(next) = phi.via(at, want) else {
            return at == v && want == beta;
        };
        steps += 1;
        if next == u || steps > cap {
            return false;
        }
        at = next;
        want = if want == alpha { beta } else { alpha };
    }
}

/// Whether coloring the currently uncolored edge `xy` with `c` keeps the
/// coloring acyclic, assuming it was acyclic before and `c` is missing at
/// both ends. A new bichromatic cycle must use `c` and some `d` seen at both
/// `x` and `y`, closing a (d,c,x,y)-critical path.
pub(crate) fn safe_to_color(phi: &PartialEdgeColoring, x: VertexId, y: VertexId, c: Color) -> bool {
    let shared = phi.seen(x).intersection(&phi.seen(y));
    let safe = shared
        .iter()
        .all(|d| !critical_path_unchecked(phi, d, c, x, y));
    safe
}

/// Finds a cycle whose edges use exactly two colors. Color pairs are scanned
/// in lexicographic order and start vertices in id order; the first cycle
/// found is returned, starting at its smallest vertex and leaving it along
/// the smaller color.
pub fn find_bichromatic_cycle(g: &Graph, phi: &PartialEdgeColoring) -> Result<Option<BichromaticPath>> {
    if let Some((v, c)) = phi.first_conflict() {
        return Err(Error::Structural(format!(
            "coloring is not proper: vertex {v} sees color {c} twice"
        )));
    }
    if phi.vertex_count() < g.vertex_count() {
        return Err(Error::Structural("coloring covers fewer vertices than the graph".into()));
    }
    Ok(first_bichromatic_cycle(phi))
}

pub(crate) fn first_bichromatic_cycle(phi: &PartialEdgeColoring) -> Option<BichromaticPath> {
    let k = phi.palette_size();
    let mut classes: Vec<Vec<VertexId>> = vec![Vec::new(); k + 1];
    for (e, c) in phi.colored_edges() {
        classes[c.get()].push(e.lo());
        classes[c.get()].push(e.hi());
    }
    for class in &mut classes {
        class.sort_unstable();
        class.dedup();
    }
    // Two edges of a color span four vertices.
    let usable: Vec<usize> = (1..=k).filter(|&c| classes[c].len() >= 4).collect();
    let mut stamp = vec![0u32; phi.vertex_count()];
    let mut round = 0u32;
    for (i, &a) in usable.iter().enumerate() {
        for &b in &usable[i + 1..] {
            round += 1;
            let (alpha, beta) = (Color::new(a), Color::new(b));
            for &x in &classes[a] {
                if stamp[x.index()] == round {
                    continue;
                }
                stamp[x.index()] = round;
                let fwd = alternate(phi, x, alpha, beta);
                if fwd.closed {
                    let mut vertices = vec![x];
                    vertices.extend(fwd.vertices);
                    return Some(BichromaticPath {
                        vertices,
                        colors: (alpha, beta),
                        edge_colors: fwd.colors,
                        cycle: true,
                    });
                }
                for w in fwd.vertices {
                    stamp[w.index()] = round;
                }
                for w in alternate(phi, x, beta, alpha).vertices {
                    stamp[w.index()] = round;
                }
            }
        }
    }
    None
}

/// Overall outcome of [`validate_acyclic`], in priority order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Acyclic,
    Improper,
    BichromaticCycle,
    Incomplete,
}

/// Everything [`validate_acyclic`] checks.
#[derive(Clone, Debug, Serialize)]
pub struct AcyclicReport {
    pub complete: bool,
    pub proper: bool,
    pub uncolored: usize,
    /// Colored pairs that are not edges of the graph.
    pub foreign_edges: Vec<Edge>,
    pub conflict: Option<(VertexId, Color)>,
    pub cycle: Option<BichromaticPath>,
    pub max_color: Option<Color>,
}

impl AcyclicReport {
    pub fn passes(&self) -> bool {
        self.verdict() == Verdict::Acyclic
    }

    pub fn verdict(&self) -> Verdict {
        if !self.proper || !self.foreign_edges.is_empty() {
            Verdict::Improper
        } else if self.cycle.is_some() {
            Verdict::BichromaticCycle
        } else if !self.complete {
            Verdict::Incomplete
        } else {
            Verdict::Acyclic
        }
    }
}

/// Checks totality, properness and the absence of bichromatic cycles. The
/// cycle search only runs on proper colorings.
pub fn validate_acyclic(g: &Graph, phi: &PartialEdgeColoring) -> AcyclicReport {
    let uncolored = phi.uncolored(g).len();
    let conflict = phi.first_conflict();
    let proper = conflict.is_none();
    let cycle = if proper { first_bichromatic_cycle(phi) } else { None };
    AcyclicReport {
        complete: uncolored == 0,
        proper,
        uncolored,
        foreign_edges: phi.foreign_edges(g),
        conflict,
        cycle,
        max_color: phi.max_color(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn v(i: usize) -> VertexId {
        VertexId::from(i)
    }

    fn c(x: usize) -> Color {
        Color::new(x)
    }

    /// Colors the edges of `g` in the given `(u, v, color)` list.
    fn colored(g: &Graph, k: usize, list: &[(usize, usize, usize)]) -> PartialEdgeColoring {
        let mut phi = PartialEdgeColoring::new(g.vertex_count(), k).unwrap();
        for &(a, b, x) in list {
            assert!(g.has_edge(v(a), v(b)));
            phi.set(v(a), v(b), c(x)).unwrap();
        }
        phi
    }

    fn set(xs: &[usize]) -> ColorSet {
        xs.iter().map(|&x| c(x)).collect()
    }

    #[test]
    fn seen_colors_examples() {
        let g = families::star(3);
        let phi = colored(&g, 3, &[(0, 1, 1), (0, 2, 2), (0, 3, 3)]);
        assert_eq!(seen_colors(&phi, v(0)), set(&[1, 2, 3]));
        assert_eq!(seen_colors(&phi, v(2)), set(&[2]));
        let empty = colored(&g, 3, &[]);
        assert!(seen_colors(&empty, v(0)).is_empty());
    }

    #[test]
    fn forbidden_from_is_asymmetric() {
        let g = families::path(3);
        let phi = colored(&g, 3, &[(0, 1, 1), (1, 2, 2)]);
        let ab = forbidden_from(&g, &phi, v(0), v(1)).unwrap();
        let ba = forbidden_from(&g, &phi, v(1), v(0)).unwrap();
        assert_eq!(ab, set(&[2]));
        assert!(ba.is_empty());
        assert_ne!(ab, ba);
        assert!(forbidden_from(&g, &phi, v(0), v(2)).is_err());
    }

    #[test]
    fn maximal_path_examples() {
        let g = families::path(4);
        let phi = colored(&g, 3, &[(0, 1, 1), (1, 2, 2), (2, 3, 1)]);
        let p = maximal_bichromatic_path(&g, &phi, v(1), c(1), c(2)).unwrap().unwrap();
        assert_eq!(p.vertices, vec![v(0), v(1), v(2), v(3)]);
        assert_eq!(p.edge_colors, vec![c(1), c(2), c(1)]);
        assert!(!p.cycle);
        assert!(maximal_bichromatic_path(&g, &phi, v(0), c(2), c(3)).unwrap().is_none());
        assert!(maximal_bichromatic_path(&g, &phi, v(0), c(2), c(2)).is_err());

        let c4 = families::cycle(4);
        let phi = colored(&c4, 2, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 0, 2)]);
        for x in 0..4 {
            let p = maximal_bichromatic_path(&c4, &phi, v(x), c(1), c(2)).unwrap().unwrap();
            assert!(p.cycle);
            assert_eq!(p.len(), 4);
            assert_eq!(p.vertices[0], v(x));
        }
    }

    #[test]
    fn critical_path_examples() {
        let g = families::path(4);
        let phi = colored(&g, 3, &[(0, 1, 1), (1, 2, 2), (2, 3, 1)]);
        assert!(exists_critical_path(&g, &phi, c(1), c(2), v(0), v(3)).unwrap());
        assert!(exists_critical_path(&g, &phi, c(1), c(2), v(3), v(0)).unwrap());
        assert!(!exists_critical_path(&g, &phi, c(2), c(1), v(0), v(3)).unwrap());
        assert!(exists_critical_path(&g, &phi, c(1), c(1), v(0), v(3)).is_err());

        let phi = colored(&g, 3, &[(0, 1, 1), (1, 2, 2), (2, 3, 3)]);
        assert!(!exists_critical_path(&g, &phi, c(1), c(2), v(0), v(3)).unwrap());
    }

    #[test]
    fn find_cycle_examples() {
        let c4 = families::cycle(4);
        let bad = colored(&c4, 3, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 0, 2)]);
        let w = find_bichromatic_cycle(&c4, &bad).unwrap().unwrap();
        assert_eq!(w.colors, (c(1), c(2)));
        assert_eq!(w.vertices, vec![v(0), v(1), v(2), v(3)]);

        let good = colored(&c4, 3, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 0, 3)]);
        assert!(find_bichromatic_cycle(&c4, &good).unwrap().is_none());

        let improper = colored(&c4, 3, &[(0, 1, 1), (1, 2, 1)]);
        assert!(matches!(find_bichromatic_cycle(&c4, &improper), Err(Error::Structural(_))));
    }

    #[test]
    fn k4_one_factorization_has_a_two_colored_four_cycle() {
        // Matchings {01,23}, {02,13}, {03,12}; every pair of them is a 4-cycle.
        let k4 = families::complete(4);
        let phi = colored(
            &k4,
            3,
            &[(0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2), (0, 3, 3), (1, 2, 3)],
        );
        let w = find_bichromatic_cycle(&k4, &phi).unwrap().unwrap();
        assert_eq!(w.colors, (c(1), c(2)));
        assert_eq!(w.vertices, vec![v(0), v(1), v(3), v(2)]);
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            let p = maximal_bichromatic_path(&k4, &phi, v(0), c(a), c(b)).unwrap().unwrap();
            assert!(p.cycle && p.len() == 4);
        }
    }

    #[test]
    fn validate_examples() {
        let tree = families::star(4);
        let phi = colored(&tree, 4, &[(0, 1, 1), (0, 2, 2), (0, 3, 3), (0, 4, 4)]);
        assert!(validate_acyclic(&tree, &phi).passes());

        let c4 = families::cycle(4);
        let bad = colored(&c4, 3, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 0, 2)]);
        let r = validate_acyclic(&c4, &bad);
        assert_eq!(r.verdict(), Verdict::BichromaticCycle);
        assert!(r.cycle.is_some());

        let good = colored(&c4, 3, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 0, 3)]);
        let r = validate_acyclic(&c4, &good);
        assert!(r.passes());
        assert_eq!(r.max_color, Some(c(3)));

        let partial = colored(&c4, 3, &[(0, 1, 1)]);
        assert_eq!(validate_acyclic(&c4, &partial).verdict(), Verdict::Incomplete);
        let improper = colored(&c4, 3, &[(0, 1, 1), (1, 2, 1), (2, 3, 2), (3, 0, 3)]);
        assert_eq!(validate_acyclic(&c4, &improper).verdict(), Verdict::Improper);
    }

    #[test]
    fn safe_to_color_matches_full_check() {
        // Closing P4 1,2,1 into C4: color 2 would make a (1,2) cycle, 3 is fine.
        let c4 = families::cycle(4);
        let phi = colored(&c4, 3, &[(0, 1, 1), (1, 2, 2), (2, 3, 1)]);
        assert!(!safe_to_color(&phi, v(3), v(0), c(2)));
        assert!(safe_to_color(&phi, v(3), v(0), c(3)));
    }
}
