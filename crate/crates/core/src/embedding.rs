//! Combinatorial embeddings: rotation systems, face tracing and the stacked
//! triangulation generator.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families;
use crate::graph::{Graph, VertexId};

/// Cyclic (clockwise) neighbor order at every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<VertexId>>,
}

/// Directed edge `(tail, head)`.
pub type Dart = (VertexId, VertexId);

impl RotationSystem {
    pub fn new(order: Vec<Vec<VertexId>>) -> Self {
        RotationSystem { order }
    }

    pub fn from_indices(order: &[Vec<usize>]) -> Self {
        RotationSystem {
            order: order
                .iter()
                .map(|ns| ns.iter().map(|&w| VertexId::from(w)).collect())
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn around(&self, v: VertexId) -> &[VertexId] {
        &self.order[v.index()]
    }

    /// Checks that every rotation is a permutation of the adjacency list.
    pub fn check_consistent(&self, g: &Graph) -> Result<()> {
        if self.order.len() != g.vertex_count() {
            return Err(Error::Structural(format!(
                "rotation covers {} vertices, graph has {}",
                self.order.len(),
                g.vertex_count()
            )));
        }
        for v in g.vertices() {
            let mut rot = self.order[v.index()].clone();
            rot.sort_unstable();
            if rot.as_slice() != g.neighbors(v) {
                return Err(Error::Structural(format!(
                    "rotation at vertex {v} is not a permutation of its neighbors"
                )));
            }
        }
        Ok(())
    }

    /// Parses lines of the form `v: u1 u2 ... ud`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<(usize, Vec<VertexId>)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let lineno = i + 1;
            let (head, tail) = line.split_once(':').ok_or_else(|| Error::Parse {
                line: lineno,
                message: "expected `v: u1 u2 ...`".into(),
            })?;
            let v: usize = head.trim().parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("bad vertex id `{}`", head.trim()),
            })?;
            let ns = tail
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map(VertexId::from).map_err(|_| Error::Parse {
                        line: lineno,
                        message: format!("bad neighbor id `{t}`"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            entries.push((v, ns));
        }
        let n = entries.iter().map(|(v, _)| v + 1).max().unwrap_or(0);
        let mut order = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        for (v, ns) in entries {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("vertex {v} listed twice"),
                });
            }
            order[v] = ns;
        }
        Ok(RotationSystem { order })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, ns) in self.order.iter().enumerate() {
            let _ = write!(out, "{v}:");
            for w in ns {
                let _ = write!(out, " {w}");
            }
            out.push('\n');
        }
        out
    }

    fn successor_table(&self) -> Vec<HashMap<VertexId, VertexId>> {
        self.order
            .iter()
            .map(|ns| {
                let d = ns.len();
                (0..d).map(|i| (ns[i], ns[(i + 1) % d])).collect()
            })
            .collect()
    }
}

/// One face as the closed walk of darts that bounds it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    /// d(f), the length of the boundary walk.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.darts.iter().map(|&(t, _)| t)
    }
}

/// F(G) for a fixed embedding.
#[derive(Clone, Debug)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    face_of_dart: HashMap<Dart, usize>,
    rotation: RotationSystem,
    /// n - m + f as traced.
    pub euler: i64,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Index of the face whose boundary contains the dart `tail -> head`.
    pub fn face_of(&self, tail: VertexId, head: VertexId) -> Option<usize> {
        self.face_of_dart.get(&(tail, head)).copied()
    }

    /// The rotation system the faces were traced from.
    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn total_length(&self) -> usize {
        self.faces.iter().map(Face::len).sum()
    }

    /// Faces around `v`, one per outgoing dart in rotation order. A face
    /// that meets `v` more than once is listed once per visit.
    pub fn incident_faces(&self, v: VertexId) -> Vec<usize> {
        self.rotation
            .around(v)
            .iter()
            .map(|&w| self.face_of_dart[&(v, w)])
            .collect()
    }

    pub fn triangulation_witness(&self) -> TriangulationWitness {
        TriangulationWitness {
            all_triangles: !self.faces.is_empty() && self.faces.iter().all(|f| f.len() == 3),
        }
    }
}

/// Whether every traced face is a triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangulationWitness {
    pub all_triangles: bool,
}

/// Traces all faces of the embedding `(g, rot)`. The dart after `u -> v` is
/// `v -> w` where `w` follows `u` in the rotation at `v`.
///
/// Each connected component with at least one edge must satisfy Euler's
/// formula for the sphere; isolated vertices contribute no faces.
pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> Result<FaceSet> {
    rot.check_consistent(g)?;
    let succ = rot.successor_table();
    let mut face_of_dart: HashMap<Dart, usize> = HashMap::with_capacity(2 * g.edge_count());
    let mut faces = Vec::new();
    for u in g.vertices() {
        for &v in rot.around(u) {
            if face_of_dart.contains_key(&(u, v)) {
                continue;
            }
            let id = faces.len();
            let mut darts = Vec::new();
            let mut dart = (u, v);
            loop {
                face_of_dart.insert(dart, id);
                darts.push(dart);
                let (t, h) = dart;
                dart = (h, succ[h.index()][&t]);
                if dart == (u, v) {
                    break;
                }
                if face_of_dart.contains_key(&dart) {
                    return Err(Error::Structural(format!(
                        "face walk from {u}->{v} re-entered another face"
                    )));
                }
            }
            faces.push(Face { darts });
        }
    }
    let n = g.vertex_count() as i64;
    let m = g.edge_count() as i64;
    let euler = n - m + faces.len() as i64;
    let comps = g.components();
    let isolated = comps.iter().filter(|c| c.len() == 1).count() as i64;
    let expected = 2 * (comps.len() as i64 - isolated) + isolated;
    if euler != expected {
        return Err(Error::NonPlanarEmbedding {
            euler: euler - expected + 2,
        });
    }
    Ok(FaceSet {
        faces,
        face_of_dart,
        rotation: rot.clone(),
        euler,
    })
}

/// Stacked (Apollonian) triangulation on `n >= 3` vertices.
///
/// Starts from the triangle `0,1,2` and inserts vertex `x` into a face chosen
/// uniformly among all current faces (outer face included), joining it to
/// the three corners. Deterministic in `(n, seed)`.
pub fn generate_apollonian(n: usize, seed: u64) -> Result<(Graph, RotationSystem)> {
    if n < 3 {
        return Err(Error::Argument(format!(
            "stacked triangulation needs at least 3 vertices, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<Vec<usize>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    // Oriented triangles (a, b, c): the face of dart a->b.
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (0, 2)];
    // Puts `x` right after `after` in the rotation at `at`.
    let insert_after = |order: &mut Vec<Vec<usize>>, at: usize, after: usize, x: usize| {
        let pos = order[at]
            .iter()
            .position(|&w| w == after)
            .expect("corner is adjacent");
        order[at].insert(pos + 1, x);
    };
    for x in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        insert_after(&mut order, a, c, x);
        insert_after(&mut order, b, a, x);
        insert_after(&mut order, c, b, x);
        order.push(vec![a, c, b]);
        faces[i] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);
        edges.extend([(a, x), (b, x), (c, x)]);
    }
    let g = Graph::from_edges(n, edges)?;
    Ok((g, RotationSystem::from_indices(&order)))
}

/// Planar rotation systems for the named families.
pub mod rotations {
    use super::*;

    /// Any tree: sorted adjacency is a valid embedding.
    pub fn tree(g: &Graph) -> RotationSystem {
        RotationSystem::new(g.vertices().map(|v| g.neighbors(v).to_vec()).collect())
    }

    pub fn path(n: usize) -> RotationSystem {
        tree(&families::path(n))
    }

    pub fn star(leaves: usize) -> RotationSystem {
        tree(&families::star(leaves))
    }

    pub fn cycle(n: usize) -> RotationSystem {
        RotationSystem::from_indices(
            &(0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect::<Vec<_>>(),
        )
    }

    pub fn wheel(rim: usize) -> RotationSystem {
        let mut order = vec![(1..=rim).rev().collect::<Vec<_>>()];
        for i in 1..=rim {
            let next = i % rim + 1;
            let prev = if i == 1 { rim } else { i - 1 };
            order.push(vec![0, next, prev]);
        }
        RotationSystem::from_indices(&order)
    }

    pub fn grid(rows: usize, cols: usize) -> RotationSystem {
        let mut order = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                let mut ns = Vec::with_capacity(4);
                if r + 1 < rows {
                    ns.push(v + cols);
                }
                if c > 0 {
                    ns.push(v - 1);
                }
                if r > 0 {
                    ns.push(v - cols);
                }
                if c + 1 < cols {
                    ns.push(v + 1);
                }
                order.push(ns);
            }
        }
        RotationSystem::from_indices(&order)
    }

    pub fn tetrahedron() -> RotationSystem {
        RotationSystem::from_indices(&[vec![3, 2, 1], vec![3, 0, 2], vec![1, 0, 3], vec![2, 0, 1]])
    }

    pub fn octahedron() -> RotationSystem {
        RotationSystem::from_indices(&[
            vec![4, 3, 2, 1],
            vec![4, 0, 2, 5],
            vec![1, 0, 3, 5],
            vec![0, 4, 5, 2],
            vec![5, 3, 0, 1],
            vec![1, 2, 3, 4],
        ])
    }

    pub fn cube() -> RotationSystem {
        RotationSystem::from_indices(&[
            vec![2, 4, 1],
            vec![0, 5, 3],
            vec![3, 6, 0],
            vec![1, 7, 2],
            vec![0, 6, 5],
            vec![1, 4, 7],
            vec![4, 2, 7],
            vec![5, 6, 3],
        ])
    }

    pub fn icosahedron() -> RotationSystem {
        RotationSystem::from_indices(
            &families::ICOSAHEDRON_ROTATION
                .iter()
                .map(|r| r.to_vec())
                .collect::<Vec<_>>(),
        )
    }

    pub fn dodecahedron() -> RotationSystem {
        RotationSystem::from_indices(
            &families::DODECAHEDRON_ROTATION
                .iter()
                .map(|r| r.to_vec())
                .collect::<Vec<_>>(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lengths(fs: &FaceSet) -> Vec<usize> {
        let mut l: Vec<usize> = fs.faces.iter().map(Face::len).collect();
        l.sort_unstable();
        l
    }

    #[test]
    fn triangle_has_two_faces() {
        let fs = trace_faces(&families::cycle(3), &rotations::cycle(3)).unwrap();
        assert_eq!(lengths(&fs), vec![3, 3]);
    }

    #[test]
    fn tetrahedron_faces() {
        let fs = trace_faces(&families::tetrahedron(), &rotations::tetrahedron()).unwrap();
        assert_eq!(lengths(&fs), vec![3; 4]);
        assert!(fs.triangulation_witness().all_triangles);
    }

    #[test]
    fn cube_faces() {
        let g = families::cube();
        let fs = trace_faces(&g, &rotations::cube()).unwrap();
        assert_eq!(lengths(&fs), vec![4; 6]);
        assert_eq!(fs.euler, 8 - 12 + 6);
        assert!(!fs.triangulation_witness().all_triangles);
    }

    #[test]
    fn platonic_and_family_embeddings_are_planar() {
        let cases: Vec<(Graph, RotationSystem, usize)> = vec![
            (families::octahedron(), rotations::octahedron(), 8),
            (families::icosahedron(), rotations::icosahedron(), 20),
            (families::dodecahedron(), rotations::dodecahedron(), 12),
            (families::wheel(7), rotations::wheel(7), 8),
            (families::grid(3, 4), rotations::grid(3, 4), 7),
            (families::cycle(9), rotations::cycle(9), 2),
            (families::star(5), rotations::star(5), 1),
        ];
        for (i, (g, rot, faces)) in cases.into_iter().enumerate() {
            let fs = trace_faces(&g, &rot).unwrap_or_else(|e| panic!("case {i}: {e}"));
            assert_eq!(fs.len(), faces);
            assert_eq!(fs.total_length(), 2 * g.edge_count());
        }
    }

    #[test]
    fn bad_rotations_are_rejected() {
        let g = families::tetrahedron();
        // Swapping two neighbors at one vertex of K4 gives a torus-like walk.
        let rot = RotationSystem::from_indices(&[vec![3, 1, 2], vec![3, 0, 2], vec![1, 0, 3], vec![2, 0, 1]]);
        assert!(matches!(trace_faces(&g, &rot), Err(Error::NonPlanarEmbedding { .. })));

        let missing = RotationSystem::from_indices(&[vec![1, 2], vec![3, 0, 2], vec![1, 0, 3], vec![2, 0, 1]]);
        assert!(matches!(trace_faces(&g, &missing), Err(Error::Structural(_))));
    }

    #[test]
    fn apollonian_small_cases() {
        let (g, _) = generate_apollonian(3, 11).unwrap();
        assert_eq!(g, families::cycle(3));
        for seed in 0..4 {
            let (g, rot) = generate_apollonian(4, seed).unwrap();
            assert_eq!(g, families::complete(4));
            trace_faces(&g, &rot).unwrap();
        }
        assert!(matches!(generate_apollonian(2, 0), Err(Error::Argument(_))));
    }

    #[test]
    fn apollonian_hundred() {
        let (g, rot) = generate_apollonian(100, 7).unwrap();
        assert_eq!(g.edge_count(), 294);
        let fs = trace_faces(&g, &rot).unwrap();
        assert!(fs.triangulation_witness().all_triangles);
        assert_eq!(fs.len(), 2 * 100 - 4);
    }

    #[test]
    fn apollonian_is_deterministic() {
        let a = generate_apollonian(60, 3).unwrap();
        let b = generate_apollonian(60, 3).unwrap();
        assert_eq!(a, b);
        let c = generate_apollonian(60, 4).unwrap();
        assert_ne!(a.0, c.0);
    }

    #[test]
    fn rotation_text_round_trip() {
        let rot = rotations::octahedron();
        assert_eq!(RotationSystem::parse(&rot.to_text()).unwrap(), rot);
        assert!(RotationSystem::parse("0 1 2\n").is_err());
    }

    #[test]
    fn every_dart_in_exactly_one_face() {
        let (g, rot) = generate_apollonian(40, 1).unwrap();
        let fs = trace_faces(&g, &rot).unwrap();
        let mut count = HashMap::new();
        for f in &fs.faces {
            for &d in &f.darts {
                *count.entry(d).or_insert(0) += 1;
            }
        }
        assert_eq!(count.len(), 2 * g.edge_count());
        assert!(count.values().all(|&c| c == 1));
    }
}
