//! Named graph families used by tests, benchmarks and the `gen` subcommand.
//!
//! The planar solids come with their rotation systems (see
//! [`crate::embedding`]); everything here is built with vertex 0 first and
//! deterministic edge order.

use crate::graph::Graph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("family generators produce simple graphs")
}

/// Path on `n` vertices `0-1-...-(n-1)`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star K(1, leaves) with center 0.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// Wheel with hub 0 and rim `1..=rim` (`rim >= 3`).
pub fn wheel(rim: usize) -> Graph {
    assert!(rim >= 3, "wheel rim needs at least 3 vertices");
    let spokes = (1..=rim).map(|i| (0, i));
    let rim_edges = (1..=rim).map(move |i| (i, i % rim + 1));
    build(rim + 1, spokes.chain(rim_edges))
}

/// `rows x cols` grid, vertex `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    build(rows * cols, edges)
}

/// Decodes a Prüfer sequence over `0..seq.len()+2` into a labelled tree.
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&i| degree[i] == 1).expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
    edges.push((rest[0], rest[1]));
    build(n, edges)
}

/// Every labelled tree on `n >= 2` vertices, via all Prüfer sequences.
pub fn all_labelled_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 2);
    if n == 2 {
        return vec![path(2)];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            tree_from_prufer(&seq)
        })
        .collect()
}

/// Non-isomorphic unlabelled trees on `n` vertices.
///
/// Walks every rooted tree as a canonical level sequence (root at level 0,
/// successor found from the last vertex deeper than level 1) and keeps one
/// representative per free-tree canonical form.
pub fn unlabelled_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    if n <= 2 {
        return vec![path(n)];
    }
    let mut levels: Vec<usize> = (0..n).collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    loop {
        let t = tree_from_levels(&levels);
        if seen.insert(tree_canon(&t)) {
            out.push(t);
        }
        let Some(p) = levels.iter().rposition(|&l| l > 1) else {
            break;
        };
        let q = levels[..p]
            .iter()
            .rposition(|&l| l == levels[p] - 1)
            .expect("level sequences are contiguous");
        for i in p..n {
            levels[i] = levels[i - (p - q)];
        }
    }
    out
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut last_at_level: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (i, &l) in levels.iter().enumerate() {
        last_at_level.truncate(l);
        if l > 0 {
            edges.push((last_at_level[l - 1], i));
        }
        last_at_level.push(i);
    }
    build(levels.len(), edges)
}

/// Canonical string for a free tree: minimum rooted encoding over its centers.
fn tree_canon(t: &Graph) -> String {
    fn enc(t: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = t
            .neighbors(v.into())
            .iter()
            .map(|w| w.index())
            .filter(|&w| w != parent)
            .map(|w| enc(t, w, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    let n = t.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| t.deg(v.into())).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for w in t.neighbors(leaf.into()) {
                let w = w.index();
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| enc(t, c, usize::MAX)).min().unwrap()
}

pub fn tetrahedron() -> Graph {
    complete(4)
}

/// Octahedron: vertices 0/5 are the poles, 1..=4 the equator.
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 1..=4 {
        edges.push((0, i));
        edges.push((5, i));
        edges.push((i, i % 4 + 1));
    }
    build(6, edges)
}

/// Cube Q3 with vertex ids as 3-bit strings.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in 0..3 {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    build(8, edges)
}

pub fn icosahedron() -> Graph {
    build(12, ICOSAHEDRON_ROTATION.iter().enumerate().flat_map(|(v, ns)| {
        ns.iter().filter(move |&&w| v < w).map(move |&w| (v, w))
    }))
}

pub fn dodecahedron() -> Graph {
    build(20, DODECAHEDRON_ROTATION.iter().enumerate().flat_map(|(v, ns)| {
        ns.iter().filter(move |&&w| v < w).map(move |&w| (v, w))
    }))
}

/// Clockwise neighbor orders of the icosahedron: north pole 0, upper ring
/// 1..=5, lower ring 6..=10, south pole 11.
pub(crate) const ICOSAHEDRON_ROTATION: [[usize; 5]; 12] = [
    [1, 2, 3, 4, 5],
    [0, 5, 10, 6, 2],
    [0, 1, 6, 7, 3],
    [0, 2, 7, 8, 4],
    [0, 3, 8, 9, 5],
    [0, 4, 9, 10, 1],
    [1, 10, 11, 7, 2],
    [2, 6, 11, 8, 3],
    [3, 7, 11, 9, 4],
    [4, 8, 11, 10, 5],
    [5, 9, 11, 6, 1],
    [6, 10, 9, 8, 7],
];

/// Clockwise neighbor orders of the dodecahedron: outer ring 0..=4, middle
/// ring 5..=14, inner ring 15..=19.
pub(crate) const DODECAHEDRON_ROTATION: [[usize; 3]; 20] = [
    [4, 5, 1],
    [0, 7, 2],
    [1, 9, 3],
    [2, 11, 4],
    [0, 3, 13],
    [0, 14, 6],
    [5, 15, 7],
    [1, 6, 8],
    [7, 16, 9],
    [8, 10, 2],
    [9, 17, 11],
    [12, 3, 10],
    [18, 13, 11],
    [14, 4, 12],
    [5, 13, 19],
    [6, 19, 16],
    [15, 17, 8],
    [16, 18, 10],
    [19, 12, 17],
    [15, 14, 18],
];
