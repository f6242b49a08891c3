//! JSON form of a (partial) edge coloring:
//! `{"schema": .., "n": .., "k": .., "edges": [{"u": .., "v": .., "color": int|null}]}`.

use serde::{Deserialize, Serialize};

use super::{Color, PartialEdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::SCHEMA;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub u: usize,
    pub v: usize,
    pub color: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDoc {
    #[serde(default = "default_schema")]
    pub schema: String,
    /// Vertex count; inferred from the edge list when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub k: usize,
    pub edges: Vec<EdgeEntry>,
}

fn default_schema() -> String {
    SCHEMA.to_string()
}

impl ColoringDoc {
    /// Every edge of `g` in ascending order, uncolored ones as `null`.
    pub fn new(g: &Graph, phi: &PartialEdgeColoring) -> Self {
        let edges = g
            .edges()
            .into_iter()
            .map(|e| EdgeEntry {
                u: e.lo().index(),
                v: e.hi().index(),
                color: phi.color(e).map(Color::get),
            })
            .collect();
        ColoringDoc {
            schema: SCHEMA.to_string(),
            n: Some(g.vertex_count()),
            k: phi.palette_size(),
            edges,
        }
    }

    /// Rebuilds the graph and the coloring. Duplicate edges, self-loops and
    /// colors outside `1..=k` are rejected.
    pub fn into_parts(&self) -> Result<(Graph, PartialEdgeColoring)> {
        let inferred = self
            .edges
            .iter()
            .map(|e| e.u.max(e.v) + 1)
            .max()
            .unwrap_or(0);
        let n = self.n.unwrap_or(inferred);
        if n < inferred {
            return Err(Error::Argument(format!(
                "declared n = {n} but edges reference vertex {}",
                inferred - 1
            )));
        }
        let g = Graph::from_edges(n, self.edges.iter().map(|e| (e.u, e.v)))?;
        let mut phi = PartialEdgeColoring::new(n, self.k)?;
        for e in &self.edges {
            if let Some(c) = e.color {
                let color = Color::try_new(c)
                    .filter(|c| c.get() <= self.k)
                    .ok_or_else(|| Error::Argument(format!(
                        "edge {}-{} has color {c} outside palette [{}]",
                        e.u, e.v, self.k
                    )))?;
                phi.set(VertexId::from(e.u), VertexId::from(e.v), color)?;
            }
        }
        Ok((g, phi))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn round_trip_with_uncolored_edge() {
        let g = families::cycle(4);
        let mut phi = PartialEdgeColoring::new(4, 3).unwrap();
        phi.set(0.into(), 1.into(), Color::new(1)).unwrap();
        phi.set(1.into(), 2.into(), Color::new(3)).unwrap();
        let doc = ColoringDoc::new(&g, &phi);
        let text = doc.to_json();
        assert!(text.contains("\"color\":null"));
        let back = ColoringDoc::from_json(&text).unwrap();
        let (g2, phi2) = back.into_parts().unwrap();
        assert_eq!(g2, g);
        assert_eq!(phi2, phi);
    }

    #[test]
    fn rejects_bad_colors() {
        let doc = ColoringDoc::from_json(r#"{"k":2,"edges":[{"u":0,"v":1,"color":3}]}"#).unwrap();
        assert!(doc.into_parts().is_err());
        let doc = ColoringDoc::from_json(r#"{"k":2,"edges":[{"u":0,"v":1,"color":0}]}"#).unwrap();
        assert!(doc.into_parts().is_err());
        let doc = ColoringDoc::from_json(r#"{"k":2,"edges":[{"u":0,"v":1,"color":1},{"u":1,"v":0,"color":2}]}"#).unwrap();
        assert!(doc.into_parts().is_err());
    }
}
