use std::collections::HashMap;

use super::color::{Color, ColorSet, MAX_PALETTE};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// Edge coloring over the palette `[k]` in which any edge may be uncolored.
///
/// Colored edges are indexed from both endpoints so that C(v) and "the
/// α-edge at v" are cheap. Improper states can be represented (a vertex may
/// see a color twice); [`PartialEdgeColoring::is_proper`] reports them.
#[derive(Clone, Debug)]
pub struct PartialEdgeColoring {
    k: usize,
    colors: HashMap<Edge, Color>,
    incident: Vec<Vec<(Color, VertexId)>>,
}

impl PartialEdgeColoring {
    /// An all-uncolored coloring of `vertex_count` vertices over `[k]`.
    pub fn new(vertex_count: usize, k: usize) -> Result<Self> {
        if k > MAX_PALETTE {
            return Err(Error::PaletteTooLarge {
                requested: k,
                max: MAX_PALETTE,
            });
        }
        Ok(PartialEdgeColoring {
            k,
            colors: HashMap::new(),
            incident: vec![Vec::new(); vertex_count],
        })
    }

    pub fn palette_size(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.incident.len()
    }

    pub fn colored_count(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, e: Edge) -> Option<Color> {
        self.colors.get(&e).copied()
    }

    pub fn color_of(&self, u: VertexId, v: VertexId) -> Option<Color> {
        self.color(Edge::new(u, v))
    }

    /// Assigns `c` to `uv`, replacing any previous color. Properness is not
    /// enforced here.
    pub fn set(&mut self, u: VertexId, v: VertexId, c: Color) -> Result<()> {
        if c.get() > self.k {
            return Err(Error::Argument(format!("color {c} outside palette [{}]", self.k)));
        }
        let n = self.vertex_count();
        for x in [u, v] {
            if x.index() >= n {
                return Err(Error::InvalidVertex {
                    vertex: x.index(),
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u.index()));
        }
        self.unset(u, v);
        self.colors.insert(Edge::new(u, v), c);
        self.incident[u.index()].push((c, v));
        self.incident[v.index()].push((c, u));
        Ok(())
    }

    /// Uncolors `uv`, returning its previous color.
    pub fn unset(&mut self, u: VertexId, v: VertexId) -> Option<Color> {
        let old = self.colors.remove(&Edge::new(u, v))?;
        self.incident[u.index()].retain(|&(_, w)| w != v);
        self.incident[v.index()].retain(|&(_, w)| w != u);
        Some(old)
    }

    /// C(v): colors on the colored edges at `v`.
    pub fn seen(&self, v: VertexId) -> ColorSet {
        self.incident[v.index()].iter().map(|&(c, _)| c).collect()
    }

    /// Colored edges at `v` as `(color, far endpoint)`.
    pub fn incident(&self, v: VertexId) -> &[(Color, VertexId)] {
        &self.incident[v.index()]
    }

    /// The far endpoint of the `c`-colored edge at `v`, if any.
    #[inline]
    pub fn via(&self, v: VertexId, c: Color) -> Option<VertexId> {
        self.incident[v.index()]
            .iter()
            .find(|&&(x, _)| x == c)
            .map(|&(_, w)| w)
    }

    /// Colored edges in ascending edge order.
    pub fn colored_edges(&self) -> Vec<(Edge, Color)> {
        let mut out: Vec<(Edge, Color)> = self.colors.iter().map(|(&e, &c)| (e, c)).collect();
        out.sort_unstable();
        out
    }

    pub fn max_color(&self) -> Option<Color> {
        self.colors.values().copied().max()
    }

    /// Distinct colors in use.
    pub fn used_colors(&self) -> ColorSet {
        self.colors.values().copied().collect()
    }

    /// No vertex sees a color twice.
    pub fn is_proper(&self) -> bool {
        self.first_conflict().is_none()
    }

    /// Smallest vertex that sees some color twice, with that color.
    pub fn first_conflict(&self) -> Option<(VertexId, Color)> {
        for (v, list) in self.incident.iter().enumerate() {
            let mut seen = ColorSet::EMPTY;
            let mut sorted: Vec<Color> = list.iter().map(|&(c, _)| c).collect();
            sorted.sort_unstable();
            for c in sorted {
                if !seen.insert(c) {
                    return Some((VertexId::from(v), c));
                }
            }
        }
        None
    }

    /// Every edge of `g` is colored.
    pub fn is_complete(&self, g: &Graph) -> bool {
        g.edges().iter().all(|e| self.colors.contains_key(e))
    }

    /// Edges of `g` that are uncolored, ascending.
    pub fn uncolored(&self, g: &Graph) -> Vec<Edge> {
        g.edges()
            .into_iter()
            .filter(|e| !self.colors.contains_key(e))
            .collect()
    }

    /// Colored edges that do not belong to `g`.
    pub fn foreign_edges(&self, g: &Graph) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .colors
            .keys()
            .copied()
            .filter(|&e| !g.contains_edge(e))
            .collect();
        out.sort_unstable();
        out
    }
}

impl PartialEq for PartialEdgeColoring {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k
            && self.vertex_count() == other.vertex_count()
            && self.colors == other.colors
    }
}

impl Eq for PartialEdgeColoring {}
