//! Charges in integer sixths, the six transfer rules and detectors for the
//! local configurations excluded from a minimal counterexample.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::plane_graph::{Dart, FaceTable, PlaneGraph, Vertex};

/// A charge measured in sixths.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Charge(pub i64);

impl Charge {
    pub const HALF: Charge = Charge(3);
    pub const THIRD: Charge = Charge(2);
    pub const SIXTH: Charge = Charge(1);

    pub fn units(u: i64) -> Charge {
        Charge(6 * u)
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/6", self.0)
    }
}

impl Serialize for Charge {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DischargeError {
    #[error("graph is not connected")]
    Disconnected,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Rule {
    V5,
    V6,
    V7,
    V8,
    E1,
    E2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Element {
    Vertex(Vertex),
    Face(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub rule: Rule,
    pub from: Element,
    pub to: Element,
    pub amount: Charge,
}

/// Charges per vertex and per face; face ids index [`PlaneGraph::face_table`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChargeLedger {
    pub vertex_charge: Vec<Charge>,
    pub face_charge: Vec<Charge>,
}

impl ChargeLedger {
    pub fn total(&self) -> Charge {
        Charge(self.vertex_charge.iter().chain(&self.face_charge).map(|c| c.0).sum())
    }

    pub fn apply(&mut self, t: &Transfer) {
        for (e, sign) in [(t.from, -1), (t.to, 1)] {
            let slot = match e {
                Element::Vertex(v) => &mut self.vertex_charge[v],
                Element::Face(f) => &mut self.face_charge[f],
            };
            slot.0 += sign * t.amount.0;
        }
    }

    pub fn negative(&self) -> Vec<Element> {
        let vs = self.vertex_charge.iter().enumerate().filter(|(_, c)| c.0 < 0).map(|(v, _)| Element::Vertex(v));
        let fs = self.face_charge.iter().enumerate().filter(|(_, c)| c.0 < 0).map(|(f, _)| Element::Face(f));
        vs.chain(fs).collect()
    }
}

/// `d - 4` for every vertex and face.
pub fn initial_charges(g: &PlaneGraph) -> Result<ChargeLedger, DischargeError> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(DischargeError::Disconnected);
    }
    Ok(ChargeLedger {
        vertex_charge: (0..g.vertex_count()).map(|v| Charge::units(g.degree(v) as i64 - 4)).collect(),
        face_charge: g.faces().iter().map(|f| Charge::units(f.degree() as i64 - 4)).collect(),
    })
}

/// Distinct faces incident with each vertex.
fn faces_at(g: &PlaneGraph, table: &FaceTable) -> Vec<BTreeSet<usize>> {
    (0..g.vertex_count())
        .map(|v| g.rotation(v).iter().map(|&d| table.face_of_dart(d)).collect())
        .collect()
}

fn triangle_count(table: &FaceTable, faces: &BTreeSet<usize>) -> usize {
    faces.iter().filter(|&&f| table.faces[f].degree() == 3).count()
}

/// Every transfer made by the rules, vertex rules first (by vertex), then
/// face rules (by dart).
pub fn transfers(g: &PlaneGraph) -> Vec<Transfer> {
    let table = g.face_table();
    let at = faces_at(g, &table);
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        let triangles: Vec<usize> = at[v].iter().copied().filter(|&f| table.faces[f].degree() == 3).collect();
        let t = triangles.len();
        let clause = match g.degree(v) {
            5 if t <= 2 => Some((Rule::V5, Charge::HALF)),
            5 if t == 3 => Some((Rule::V5, Charge::THIRD)),
            6 if t <= 4 => Some((Rule::V6, Charge::HALF)),
            6 if t == 5 => Some((Rule::V6, Charge::THIRD)),
            7 if t <= 6 => Some((Rule::V7, Charge::HALF)),
            7 if t == 7 => Some((Rule::V7, Charge::THIRD)),
            d if d >= 8 => Some((Rule::V8, Charge::HALF)),
            _ => None,
        };
        if let Some((rule, amount)) = clause {
            for &f in &triangles {
                out.push(Transfer { rule, from: Element::Vertex(v), to: Element::Face(f), amount });
            }
        }
    }
    for d in g.darts() {
        let (big, tri) = (table.face_of_dart(d), table.face_of_dart(d.twin()));
        if table.faces[big].degree() < 5 || table.faces[tri].degree() != 3 {
            continue;
        }
        let (a, b) = (g.degree(g.origin(d)), g.degree(g.head(d)));
        let rule = match (a.min(b), a.max(b)) {
            (4, 4) => Some((Rule::E1, Charge::HALF)),
            (4, hi) if hi >= 5 => Some((Rule::E2, Charge::SIXTH)),
            _ => None,
        };
        if let Some((rule, amount)) = rule {
            out.push(Transfer { rule, from: Element::Face(big), to: Element::Face(tri), amount });
        }
    }
    out
}

/// The ledger after all transfers.
pub fn apply_rules(g: &PlaneGraph, ledger: &ChargeLedger) -> ChargeLedger {
    let mut out = ledger.clone();
    for t in transfers(g) {
        out.apply(&t);
    }
    out
}

/// 5- and 6-vertices whose number of incident 3-faces falls outside every
/// clause of their rule, so they send nothing.
pub fn silent_vertices(g: &PlaneGraph) -> Vec<Vertex> {
    let table = g.face_table();
    let at = faces_at(g, &table);
    (0..g.vertex_count())
        .filter(|&v| {
            let t = triangle_count(&table, &at[v]);
            matches!((g.degree(v), t), (5, 4..) | (6, 6..))
        })
        .collect()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ConfigurationKind {
    NotTwoConnected,
    LowKplusL,
    SmallDegreeVertex,
    TwoFace,
    SharedFourVertex,
    #[serde(rename = "P5_edge44")]
    P5Edge44,
    #[serde(rename = "P6_4and5with3")]
    P6FourFiveWithThree,
    #[serde(rename = "P7_4and6with5")]
    P7FourSixWithFive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub role: String,
    pub element: Element,
}

fn wv(role: &str, v: Vertex) -> Witness {
    Witness { role: role.to_string(), element: Element::Vertex(v) }
}

fn wf(role: &str, f: usize) -> Witness {
    Witness { role: role.to_string(), element: Element::Face(f) }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigurationHit {
    pub kind: ConfigurationKind,
    pub witnesses: Vec<Witness>,
}

impl ConfigurationHit {
    pub fn vertex(&self, role: &str) -> Option<Vertex> {
        self.witnesses.iter().find(|w| w.role == role).and_then(|w| match w.element {
            Element::Vertex(v) => Some(v),
            Element::Face(_) => None,
        })
    }

    pub fn face(&self, role: &str) -> Option<usize> {
        self.witnesses.iter().find(|w| w.role == role).and_then(|w| match w.element {
            Element::Face(f) => Some(f),
            Element::Vertex(_) => None,
        })
    }
}

/// Vertices whose removal disconnects a connected graph.
fn cut_vertices(g: &PlaneGraph) -> Vec<Vertex> {
    (0..g.vertex_count())
        .filter(|&v| g.vertex_count() > 2 && !g.delete_vertex(v).expect("vertex exists").graph.is_connected())
        .collect()
}

/// A 3-face on the right of `d` and a 4-face on its left, with vertex
/// names relative to `d = a -> b`.
struct EdgeFrame {
    a: Vertex,
    b: Vertex,
    apex: Vertex,
    /// Neighbours of `a` and `b` along the 4-face.
    qa: Vertex,
    qb: Vertex,
    tri: usize,
    quad: usize,
    /// Darts from `a` (resp. `b`) toward the apex and toward the 4-face.
    a_t: Dart,
    a_q: Dart,
    b_t: Dart,
    b_q: Dart,
}

fn edge_frame(g: &PlaneGraph, table: &FaceTable, d: Dart) -> Option<EdgeFrame> {
    let (tri, quad) = (table.face_of_dart(d), table.face_of_dart(d.twin()));
    if table.faces[tri].degree() != 3 || table.faces[quad].degree() != 4 {
        return None;
    }
    let d2 = g.face_next(d);
    let d3 = g.face_next(d2);
    let e2 = g.face_next(d.twin());
    let e3 = g.face_next(e2);
    let e4 = g.face_next(e3);
    Some(EdgeFrame {
        a: g.origin(d),
        b: g.head(d),
        apex: g.head(d2),
        qa: g.head(e2),
        qb: g.origin(e4),
        tri,
        quad,
        a_t: d3.twin(),
        a_q: e2,
        b_t: d2,
        b_q: e4.twin(),
    })
}

/// For a 4-vertex with darts toward the 3-face and 4-face sides of a shared
/// edge: the remaining neighbour and the corner faces on the 3-face side and
/// the 4-face side of it.
fn four_vertex_corners(g: &PlaneGraph, table: &FaceTable, shared: Dart, toward_t: Dart, toward_q: Dart) -> Option<(Vertex, usize, usize)> {
    let v = g.origin(shared);
    if g.degree(v) != 4 {
        return None;
    }
    let r = *g.rotation(v).iter().find(|&&x| x != shared && x != toward_t && x != toward_q)?;
    // the corner between x and rot_next(x) belongs to the face of rot_next(x)
    let corner = |x: Dart, y: Dart| {
        if g.rot_next(x) == y {
            table.face_of_dart(y)
        } else {
            table.face_of_dart(x)
        }
    };
    Some((g.head(r), corner(toward_t, r), corner(r, toward_q)))
}

/// All reducible-configuration hits, grouped by kind in declaration order.
pub fn detect_reducible(g: &PlaneGraph) -> Vec<ConfigurationHit> {
    let table = g.face_table();
    let at = faces_at(g, &table);
    let n = g.vertex_count();
    let deg = |v: Vertex| g.degree(v);
    let tri_at = |v: Vertex| triangle_count(&table, &at[v]);
    let mut hits = Vec::new();

    if !g.is_connected() {
        let comps = g.components();
        let witnesses = comps.iter().enumerate().map(|(i, c)| wv(&format!("component{}", i + 1), c[0])).collect();
        hits.push(ConfigurationHit { kind: ConfigurationKind::NotTwoConnected, witnesses });
    } else {
        for v in cut_vertices(g) {
            hits.push(ConfigurationHit { kind: ConfigurationKind::NotTwoConnected, witnesses: vec![wv("cut", v)] });
        }
    }
    for v in 0..n {
        let l = at[v].iter().filter(|&&f| table.faces[f].degree() >= 4).count();
        if deg(v) + l <= 6 {
            hits.push(ConfigurationHit { kind: ConfigurationKind::LowKplusL, witnesses: vec![wv("v", v)] });
        }
    }
    for v in 0..n {
        if deg(v) <= 3 {
            hits.push(ConfigurationHit { kind: ConfigurationKind::SmallDegreeVertex, witnesses: vec![wv("v", v)] });
        }
    }
    for (i, f) in table.faces.iter().enumerate() {
        if f.degree() == 2 && f.darts[0].edge() != f.darts[1].edge() {
            hits.push(ConfigurationHit { kind: ConfigurationKind::TwoFace, witnesses: vec![wf("f", i)] });
        }
    }
    for v in (0..n).filter(|&v| deg(v) == 4) {
        let triangles: Vec<usize> = at[v].iter().copied().filter(|&f| table.faces[f].degree() == 3).collect();
        for (i, &f1) in triangles.iter().enumerate() {
            for &f2 in &triangles[i + 1..] {
                hits.push(ConfigurationHit {
                    kind: ConfigurationKind::SharedFourVertex,
                    witnesses: vec![wv("v", v), wf("f1", f1), wf("f2", f2)],
                });
            }
        }
    }

    let frames: Vec<(Dart, EdgeFrame)> = g.darts().filter_map(|d| edge_frame(g, &table, d).map(|e| (d, e))).collect();
    for (d, e) in &frames {
        if deg(e.a) == 4 && deg(e.b) == 4 {
            let (v7, f1, f2) = four_vertex_corners(g, &table, *d, e.a_t, e.a_q).expect("4-vertex");
            let (v6, f4, f3) = four_vertex_corners(g, &table, d.twin(), e.b_t, e.b_q).expect("4-vertex");
            hits.push(ConfigurationHit {
                kind: ConfigurationKind::P5Edge44,
                witnesses: vec![
                    wv("v1", e.a),
                    wv("v2", e.b),
                    wv("v3", e.apex),
                    wv("v4", e.qa),
                    wv("v5", e.qb),
                    wv("v6", v6),
                    wv("v7", v7),
                    wf("triangle", e.tri),
                    wf("quad", e.quad),
                    wf("f1", f1),
                    wf("f2", f2),
                    wf("f3", f3),
                    wf("f4", f4),
                ],
            });
        }
    }
    for (big_deg, big_tri, kind) in [
        (5, 3, ConfigurationKind::P6FourFiveWithThree),
        (6, 5, ConfigurationKind::P7FourSixWithFive),
    ] {
        for (d, e) in &frames {
            // v1 is the big vertex, v2 the 4-vertex
            let (v1, v2, v1_q, v2_q, shared2, v2_t, v2_qd) = if deg(e.a) == big_deg && deg(e.b) == 4 {
                (e.a, e.b, e.qa, e.qb, d.twin(), e.b_t, e.b_q)
            } else if deg(e.b) == big_deg && deg(e.a) == 4 {
                (e.b, e.a, e.qb, e.qa, *d, e.a_t, e.a_q)
            } else {
                continue;
            };
            if tri_at(v1) != big_tri {
                continue;
            }
            let (rest, t_side, q_side) = four_vertex_corners(g, &table, shared2, v2_t, v2_qd).expect("4-vertex");
            let witnesses = if kind == ConfigurationKind::P6FourFiveWithThree {
                vec![
                    wv("v1", v1),
                    wv("v2", v2),
                    wv("v3", e.apex),
                    wv("v6", v1_q),
                    wv("v7", v2_q),
                    wv("v8", rest),
                    wf("triangle", e.tri),
                    wf("quad", e.quad),
                    wf("f1", q_side),
                    wf("f2", t_side),
                ]
            } else {
                vec![
                    wv("v1", v1),
                    wv("v2", v2),
                    wv("v3", e.apex),
                    wv("v7", v1_q),
                    wv("v8", v2_q),
                    wv("v9", rest),
                    wf("triangle", e.tri),
                    wf("quad", e.quad),
                    wf("f1", q_side),
                    wf("f2", t_side),
                ]
            };
            hits.push(ConfigurationHit { kind, witnesses });
        }
    }
    hits
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub initial: ChargeLedger,
    pub final_ledger: ChargeLedger,
    pub transfers: Vec<Transfer>,
    pub initial_total: Charge,
    pub final_total: Charge,
    pub conserved: bool,
    pub hits: Vec<ConfigurationHit>,
    pub silent_vertices: Vec<Vertex>,
    /// Vertices or faces ending with negative charge.
    pub negative: Vec<Element>,
    /// Set when no configuration is present, a state the argument rules out.
    pub alarm: Option<String>,
}

impl AuditReport {
    pub fn ok(&self) -> bool {
        self.conserved && self.alarm.is_none() && self.initial_total == Charge(-48)
    }
}

pub fn audit(g: &PlaneGraph) -> Result<AuditReport, DischargeError> {
    let initial = initial_charges(g)?;
    let transfers = transfers(g);
    let mut final_ledger = initial.clone();
    for t in &transfers {
        final_ledger.apply(t);
    }
    let hits = detect_reducible(g);
    let negative = final_ledger.negative();
    let alarm = hits.is_empty().then(|| {
        if negative.is_empty() {
            "no reducible configuration and every final charge is nonnegative, yet the total is -8".to_string()
        } else {
            format!("no reducible configuration but {} elements end with negative charge", negative.len())
        }
    });
    let (initial_total, final_total) = (initial.total(), final_ledger.total());
    Ok(AuditReport {
        conserved: initial_total == final_total,
        initial_total,
        final_total,
        initial,
        final_ledger,
        transfers,
        hits,
        silent_vertices: silent_vertices(g),
        negative,
        alarm,
    })
}
