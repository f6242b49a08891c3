//! Unavoidable low-degree configurations of planar graphs.
//!
//! Every connected planar graph has a vertex `v` whose neighbors, sorted by
//! degree `d(v1) <= d(v2) <= ...`, satisfy one of
//!
//! * `A1`: `d(v) <= 2`
//! * `A2`: `d(v) = 3` and `d(v1) <= 11`
//! * `A3`: `d(v) = 4`, `d(v1) <= 7` and `d(v2) <= 9`
//! * `A4`: `d(v) = 5`, `d(v1) <= 6`, `d(v2) <= 7` and `d(v3) <= 8`
//!
//! The scanner reports the first such vertex. When none exists the input
//! cannot be planar, which makes the scan a one-sided planarity check.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ConfigKind {
    A1,
    A2,
    A3,
    A4,
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConfigKind::A1 => "A1",
            ConfigKind::A2 => "A2",
            ConfigKind::A3 => "A3",
            ConfigKind::A4 => "A4",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborDegree {
    pub v: VertexId,
    pub d: usize,
}

/// A vertex realizing one of A1-A4, with its neighbors sorted by
/// `(degree, id)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    pub kind: ConfigKind,
    pub v: VertexId,
    pub neighbors: Vec<NeighborDegree>,
}

impl Configuration {
    /// The lowest-degree neighbor `v1`, if `v` has any neighbor.
    pub fn first_neighbor(&self) -> Option<VertexId> {
        self.neighbors.first().map(|n| n.v)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("configurations always serialize")
    }
}

/// Neighbors of `v` sorted by `(degree, id)`.
pub fn sorted_neighbors(g: &Graph, v: VertexId) -> Vec<NeighborDegree> {
    let mut ns: Vec<NeighborDegree> = g
        .neighbors(v)
        .iter()
        .map(|&w| NeighborDegree { v: w, d: g.deg(w) })
        .collect();
    ns.sort_unstable_by_key(|n| (n.d, n.v));
    ns
}

/// Kind realized by a vertex of degree `d` whose sorted neighbor degrees
/// are `ds`.
pub fn kind_for(d: usize, ds: &[usize]) -> Option<ConfigKind> {
    match d {
        0..=2 => Some(ConfigKind::A1),
        3 if ds[0] <= 11 => Some(ConfigKind::A2),
        4 if ds[0] <= 7 && ds[1] <= 9 => Some(ConfigKind::A3),
        5 if ds[0] <= 6 && ds[1] <= 7 && ds[2] <= 8 => Some(ConfigKind::A4),
        _ => None,
    }
}

/// The configuration realized at `v`, checking kinds in order A1..A4.
pub fn classify_vertex(g: &Graph, v: VertexId) -> Result<Option<Configuration>> {
    g.check_vertex(v)?;
    Ok(classify_unchecked(g, v))
}

pub(crate) fn classify_unchecked(g: &Graph, v: VertexId) -> Option<Configuration> {
    let d = g.deg(v);
    if d > 5 {
        return None;
    }
    let neighbors = sorted_neighbors(g, v);
    let ds: Vec<usize> = neighbors.iter().map(|n| n.d).collect();
    kind_for(d, &ds).map(|kind| Configuration { kind, v, neighbors })
}

/// The configuration at the smallest-id qualifying vertex.
///
/// Returns [`Error::NotPlanarEvidence`] when no vertex qualifies: a planar
/// graph always has one.
pub fn find_configuration(g: &Graph) -> Result<Configuration> {
    find_configuration_where(g, |_| true)
}

/// As [`find_configuration`], restricted to vertices accepted by `keep`.
pub fn find_configuration_where(g: &Graph, keep: impl Fn(VertexId) -> bool) -> Result<Configuration> {
    if g.vertex_count() == 0 {
        return Err(Error::Argument("graph has no vertices".into()));
    }
    g.vertices()
        .filter(|&v| keep(v))
        .find_map(|v| classify_unchecked(g, v))
        .ok_or_else(|| {
            Error::NotPlanarEvidence(format!(
                "no vertex of this {}-vertex graph realizes A1-A4 (min degree {})",
                g.vertex_count(),
                g.min_degree()
            ))
        })
}

/// `false` only when `m > 3n - 6` certifies non-planarity.
pub fn cheap_planarity_guard(g: &Graph) -> bool {
    let n = g.vertex_count();
    n < 3 || g.edge_count() + 6 <= 3 * n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::generate_apollonian;
    use crate::families;

    fn v(i: usize) -> VertexId {
        VertexId::from(i)
    }

    #[test]
    fn classify_examples() {
        let c7 = families::cycle(7);
        assert!(c7.vertices().all(|x| classify_vertex(&c7, x).unwrap().unwrap().kind == ConfigKind::A1));

        let k4 = families::complete(4);
        let cfg = classify_vertex(&k4, v(2)).unwrap().unwrap();
        assert_eq!(cfg.kind, ConfigKind::A2);
        assert_eq!(cfg.neighbors.iter().map(|n| n.v).collect::<Vec<_>>(), vec![v(0), v(1), v(3)]);

        let ico = families::icosahedron();
        for x in ico.vertices() {
            let cfg = classify_vertex(&ico, x).unwrap().unwrap();
            assert_eq!(cfg.kind, ConfigKind::A4);
            assert!(cfg.neighbors.iter().all(|n| n.d == 5));
        }
        assert!(classify_vertex(&ico, v(12)).is_err());
    }

    #[test]
    fn thresholds_are_tight() {
        assert_eq!(kind_for(3, &[11, 20, 20]), Some(ConfigKind::A2));
        assert_eq!(kind_for(3, &[12, 12, 12]), None);
        assert_eq!(kind_for(4, &[7, 9, 30, 30]), Some(ConfigKind::A3));
        assert_eq!(kind_for(4, &[7, 10, 10, 10]), None);
        assert_eq!(kind_for(4, &[8, 8, 8, 8]), None);
        assert_eq!(kind_for(5, &[6, 7, 8, 40, 40]), Some(ConfigKind::A4));
        assert_eq!(kind_for(5, &[6, 7, 9, 9, 9]), None);
        assert_eq!(kind_for(5, &[7, 7, 7, 7, 7]), None);
        assert_eq!(kind_for(6, &[1, 1, 1, 1, 1, 1]), None);
        assert_eq!(kind_for(0, &[]), Some(ConfigKind::A1));
    }

    #[test]
    fn find_examples() {
        let cfg = find_configuration(&families::octahedron()).unwrap();
        assert_eq!((cfg.kind, cfg.v), (ConfigKind::A3, v(0)));
        assert_eq!(cfg.neighbors[0].d, 4);
        assert_eq!(cfg.neighbors[1].d, 4);

        // One-sided: K5 is not planar yet every vertex realizes A3.
        let cfg = find_configuration(&families::complete(5)).unwrap();
        assert_eq!(cfg.kind, ConfigKind::A3);

        let (g, _) = generate_apollonian(100, 7).unwrap();
        find_configuration(&g).unwrap();
    }

    #[test]
    fn dense_graphs_are_refuted() {
        // K7 is 6-regular: no vertex of degree <= 5 at all.
        let err = find_configuration(&families::complete(7)).unwrap_err();
        assert!(matches!(err, Error::NotPlanarEvidence(_)));
    }

    #[test]
    fn kind_order_is_respected() {
        // A vertex of degree 2 is A1 even though nothing else is checked.
        let g = families::path(3);
        assert_eq!(classify_vertex(&g, v(1)).unwrap().unwrap().kind, ConfigKind::A1);
    }

    #[test]
    fn guard_examples() {
        assert!(!cheap_planarity_guard(&families::complete(5)));
        assert!(cheap_planarity_guard(&families::complete(4)));
        assert!(cheap_planarity_guard(&families::star(9)));
        assert!(cheap_planarity_guard(&families::path(2)));
    }

    #[test]
    fn json_shape() {
        let cfg = find_configuration(&families::complete(4)).unwrap();
        assert_eq!(
            cfg.to_json(),
            r#"{"kind":"A2","v":0,"neighbors":[{"v":1,"d":3},{"v":2,"d":3},{"v":3,"d":3}]}"#
        );
    }
}
