//! Charge bookkeeping for embedded graphs.
//!
//! Vertices start with `2d(v) - 6` and faces with `d(f) - 6`; by Euler's
//! formula the total over a connected plane graph is `-12`. Vertices of
//! degree 4 and up then pass charge to their incident faces:
//!
//! | rule  | vertex | condition (neighbors `v1 <= v2 <= ...` by degree)  | amounts |
//! |-------|--------|----------------------------------------------------|---------|
//! | R1    | `6+`   | always                                             | `(2d-6)/d` to every face |
//! | R2a   | 4      | all neighbors `8+`                                 | `1/2` to every face |
//! | R2b   | 4      | `d(v1) <= 7`                                       | `4/5` to the two faces on `vv1`, `1/5` to the others |
//! | R3.1  | 5      | `d(v1) >= 7`                                       | `4/5` to every face |
//! | R3.2  | 5      | `d(v1) <= 6`, `d(v2) >= 8`                         | `5/4` to faces on `vv1`, `1/2` to the others |
//! | R3.3  | 5      | `d(v1) <= 6`, `d(v2) <= 7`, `d(v3) >= 9`           | see below |
//!
//! Under R3.3, if `vv1` and `vv2` bound a common face that face gets `1`, the
//! faces on exactly one of them get `5/6` and the remaining two get `2/3`
//! ("adjacent"); otherwise faces on `vv1` or `vv2` get `13/15` and the last
//! one `8/15` ("split").
//!
//! A vertex realizing one of A1-A4 is outside the rules' hypotheses and is
//! flagged as a violation.

use std::fmt;

use serde_json::{json, Value};

use crate::embedding::{trace_faces, FaceSet, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::scalar::Charge;
use crate::scanner::{classify_unchecked, find_configuration, sorted_neighbors, Configuration};
use crate::SCHEMA;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleId {
    R1,
    R2a,
    R2b,
    R31,
    R32,
    R33Adjacent,
    R33Split,
    None,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RuleId::R1 => "R1",
            RuleId::R2a => "R2a",
            RuleId::R2b => "R2b",
            RuleId::R31 => "R3.1",
            RuleId::R32 => "R3.2",
            RuleId::R33Adjacent => "R3.3-adjacent",
            RuleId::R33Split => "R3.3-split",
            RuleId::None => "none",
        };
        f.write_str(s)
    }
}

/// Which rule a vertex follows, and whether it sits in a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleApplicability {
    pub vertex: VertexId,
    pub rule: RuleId,
    pub violation: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    Initial,
    Discharged,
}

/// One charge movement from a vertex to an incident face.
#[derive(Clone, Debug, PartialEq)]
pub struct Transfer<S> {
    pub from: VertexId,
    pub to_face: usize,
    pub amount: S,
    pub rule: RuleId,
}

/// Charges on every vertex and face, plus the transfers that produced them.
#[derive(Clone, Debug, PartialEq)]
pub struct ChargeLedger<S> {
    pub phase: Phase,
    pub vertex: Vec<S>,
    pub face: Vec<S>,
    pub transfers: Vec<Transfer<S>>,
}

impl<S: Charge> ChargeLedger<S> {
    /// Sum over every vertex and face.
    pub fn total(&self) -> Result<S> {
        self.vertex
            .iter()
            .chain(&self.face)
            .try_fold(S::zero(), |acc, x| acc.try_add(x).ok_or(Error::Overflow))
    }

    /// Elements with negative charge, vertices first.
    pub fn negatives(&self) -> Vec<(Element, S)> {
        let verts = self
            .vertex
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_negative())
            .map(|(i, c)| (Element::Vertex(VertexId::from(i)), c.clone()));
        let faces = self
            .face
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_negative())
            .map(|(i, c)| (Element::Face(i), c.clone()));
        verts.chain(faces).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Element {
    Vertex(VertexId),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "vertex#{v}"),
            Element::Face(i) => write!(f, "face#{i}"),
        }
    }
}

/// `2d(v) - 6` on vertices, `d(f) - 6` on faces.
pub fn initial_charges<S: Charge>(g: &Graph, faces: &FaceSet) -> ChargeLedger<S> {
    ChargeLedger {
        phase: Phase::Initial,
        vertex: g
            .vertices()
            .map(|v| S::from_int(2 * g.deg(v) as i64 - 6))
            .collect(),
        face: faces
            .faces
            .iter()
            .map(|f| S::from_int(f.len() as i64 - 6))
            .collect(),
        transfers: Vec::new(),
    }
}

/// Rule selection for `v`. Needs the embedding only to tell the two R3.3
/// variants apart.
pub fn classify_rule(g: &Graph, faces: &FaceSet, v: VertexId) -> Result<RuleApplicability> {
    g.check_vertex(v)?;
    let d = g.deg(v);
    let ns = sorted_neighbors(g, v);
    let violation = classify_unchecked(g, v).is_some();
    let rule = match d {
        0..=3 => RuleId::None,
        4 if ns.iter().all(|n| n.d >= 8) => RuleId::R2a,
        4 => RuleId::R2b,
        5 if ns[0].d >= 7 => RuleId::R31,
        5 if ns[1].d >= 8 => RuleId::R32,
        5 => {
            if share_face(faces.rotation(), v, ns[0].v, ns[1].v) {
                RuleId::R33Adjacent
            } else {
                RuleId::R33Split
            }
        }
        _ => RuleId::R1,
    };
    Ok(RuleApplicability { vertex: v, rule, violation })
}

/// Whether `va` and `vb` are consecutive around `v`, i.e. bound a common
/// face at `v`.
fn share_face(rot: &RotationSystem, v: VertexId, a: VertexId, b: VertexId) -> bool {
    let around = rot.around(v);
    let d = around.len();
    (0..d).any(|i| {
        let (x, y) = (around[i], around[(i + 1) % d]);
        (x == a && y == b) || (x == b && y == a)
    })
}

/// The transfers `v` makes under its rule. Each face slot around `v` is the
/// face of the dart `v -> w_i`; it contains the edges `v w_i` and
/// `v w_(i-1)`.
pub fn vertex_transfers<S: Charge>(
    g: &Graph,
    faces: &FaceSet,
    v: VertexId,
) -> Result<(RuleApplicability, Vec<Transfer<S>>)> {
    let app = classify_rule(g, faces, v)?;
    let around = faces.rotation().around(v);
    let d = around.len();
    let ns = sorted_neighbors(g, v);
    let amount = |rule: RuleId, on_v1: bool, on_v2: bool| -> S {
        match rule {
            RuleId::R1 => S::ratio(2 * d as i64 - 6, d as i64),
            RuleId::R2a => S::ratio(1, 2),
            RuleId::R2b if on_v1 => S::ratio(4, 5),
            RuleId::R2b => S::ratio(1, 5),
            RuleId::R31 => S::ratio(4, 5),
            RuleId::R32 if on_v1 => S::ratio(5, 4),
            RuleId::R32 => S::ratio(1, 2),
            RuleId::R33Adjacent => match (on_v1, on_v2) {
                (true, true) => S::one(),
                (true, false) | (false, true) => S::ratio(5, 6),
                (false, false) => S::ratio(2, 3),
            },
            RuleId::R33Split if on_v1 || on_v2 => S::ratio(13, 15),
            RuleId::R33Split => S::ratio(8, 15),
            RuleId::None => S::zero(),
        }
    };
    if app.rule == RuleId::None {
        return Ok((app, Vec::new()));
    }
    let v1 = ns.first().map(|n| n.v);
    let v2 = ns.get(1).map(|n| n.v);
    let mut out = Vec::with_capacity(d);
    for i in 0..d {
        let here = around[i];
        let prev = around[(i + d - 1) % d];
        let on = |x: Option<VertexId>| x.is_some_and(|x| x == here || x == prev);
        let face = faces
            .face_of(v, here)
            .ok_or_else(|| Error::Structural(format!("dart {v}->{here} has no face")))?;
        out.push(Transfer {
            from: v,
            to_face: face,
            amount: amount(app.rule, on(v1), on(v2)),
            rule: app.rule,
        });
    }
    Ok((app, out))
}

/// Applies every vertex's rule once. Refuses if any vertex realizes a
/// configuration.
pub fn apply_discharging<S: Charge>(
    g: &Graph,
    faces: &FaceSet,
    ledger: &ChargeLedger<S>,
) -> Result<ChargeLedger<S>> {
    discharge(g, faces, ledger, true).map(|(l, _)| l)
}

/// As [`apply_discharging`], but vertices realizing a configuration keep
/// their charge instead of failing the run. Returns the skipped vertices.
pub fn apply_discharging_lenient<S: Charge>(
    g: &Graph,
    faces: &FaceSet,
    ledger: &ChargeLedger<S>,
) -> Result<(ChargeLedger<S>, Vec<VertexId>)> {
    discharge(g, faces, ledger, false)
}

fn discharge<S: Charge>(
    g: &Graph,
    faces: &FaceSet,
    ledger: &ChargeLedger<S>,
    strict: bool,
) -> Result<(ChargeLedger<S>, Vec<VertexId>)> {
    if ledger.phase != Phase::Initial {
        return Err(Error::Argument("ledger has already been discharged".into()));
    }
    if ledger.vertex.len() != g.vertex_count() || ledger.face.len() != faces.len() {
        return Err(Error::Argument("ledger does not match the embedded graph".into()));
    }
    let mut out = ledger.clone();
    out.phase = Phase::Discharged;
    let mut skipped = Vec::new();
    for v in g.vertices() {
        let (app, transfers) = vertex_transfers::<S>(g, faces, v)?;
        if app.violation {
            if strict {
                return Err(Error::ConfigurationPresent { vertex: v.index() });
            }
            skipped.push(v);
            continue;
        }
        for t in transfers {
            let src = &mut out.vertex[v.index()];
            *src = src.try_sub(&t.amount).ok_or(Error::Overflow)?;
            let dst = &mut out.face[t.to_face];
            *dst = dst.try_add(&t.amount).ok_or(Error::Overflow)?;
            out.transfers.push(t);
        }
    }
    Ok((out, skipped))
}

/// Outcome of auditing a triangulation.
#[derive(Clone, Debug, PartialEq)]
pub enum AuditOutcome<S> {
    /// A configuration exists; this is what every planar input produces.
    ConfigurationFound(Configuration),
    /// No configuration: the discharged charges, with any negative element.
    Charges {
        ledger: ChargeLedger<S>,
        negatives: Vec<(Element, S)>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditReport<S> {
    pub initial_total: S,
    pub outcome: AuditOutcome<S>,
}

impl<S: Charge> AuditReport<S> {
    pub fn to_json(&self) -> Value {
        match &self.outcome {
            AuditOutcome::ConfigurationFound(cfg) => json!({
                "schema": SCHEMA,
                "outcome": "config",
                "config": cfg,
                "total": self.initial_total.to_string(),
            }),
            AuditOutcome::Charges { ledger, negatives } => json!({
                "schema": SCHEMA,
                "outcome": "charges",
                "total": ledger.total().map_or_else(|_| "overflow".into(), |t| t.to_string()),
                "negatives": negatives
                    .iter()
                    .map(|(e, c)| json!({"elem": e.to_string(), "charge": c.to_string()}))
                    .collect::<Vec<_>>(),
            }),
        }
    }
}

/// Traces the faces of a connected triangulation, computes initial charges
/// and looks for a configuration; only when none exists are the rules run.
pub fn audit_triangulation<S: Charge>(g: &Graph, rot: &RotationSystem) -> Result<AuditReport<S>> {
    if !g.is_connected() {
        return Err(Error::Argument("audit needs a connected graph".into()));
    }
    let faces = trace_faces(g, rot)?;
    if !faces.triangulation_witness().all_triangles {
        return Err(Error::Argument("audit needs a triangulation (every face of length 3)".into()));
    }
    let ledger = initial_charges::<S>(g, &faces);
    let initial_total = ledger.total()?;
    let outcome = match find_configuration(g) {
        Ok(cfg) => AuditOutcome::ConfigurationFound(cfg),
        Err(Error::NotPlanarEvidence(_)) => {
            let (discharged, _) = apply_discharging_lenient(g, &faces, &ledger)?;
            let negatives = discharged.negatives();
            AuditOutcome::Charges {
                ledger: discharged,
                negatives,
            }
        }
        Err(e) => return Err(e),
    };
    Ok(AuditReport {
        initial_total,
        outcome,
    })
}

/// Embedded test patches: a center vertex whose neighbors, listed in
/// rotation order, are joined in a ring so every face at the center is a
/// triangle, and padded with pendant leaves up to prescribed degrees.
pub mod patch {
    use super::*;

    /// Center is vertex 0; ring vertex `i + 1` gets degree `degrees[i]`
    /// (at least 3).
    pub fn wheel(degrees: &[usize]) -> Result<(Graph, RotationSystem)> {
        let k = degrees.len();
        if k < 3 {
            return Err(Error::Argument("a wheel patch needs at least 3 ring vertices".into()));
        }
        if let Some(&d) = degrees.iter().find(|&&d| d < 3) {
            return Err(Error::Argument(format!("ring degree {d} is below 3")));
        }
        let mut edges = Vec::new();
        let mut order: Vec<Vec<usize>> = vec![(1..=k).rev().collect()];
        let mut next_id = k + 1;
        for i in 1..=k {
            let next = i % k + 1;
            let prev = if i == 1 { k } else { i - 1 };
            edges.push((0, i));
            edges.push((i, next));
            let mut rot = vec![0, next];
            for _ in 0..degrees[i - 1] - 3 {
                edges.push((i, next_id));
                rot.push(next_id);
                next_id += 1;
            }
            rot.push(prev);
            order.push(rot);
        }
        for leaf in k + 1..next_id {
            let owner = edges.iter().find(|&&(_, b)| b == leaf).unwrap().0;
            order.push(vec![owner]);
        }
        let g = Graph::from_edges(next_id, edges)?;
        Ok((g, RotationSystem::from_indices(&order)))
    }
}
