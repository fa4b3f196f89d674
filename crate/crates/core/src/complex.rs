//! 1-skeleta of the complexes `X_M` (vertices: label tuples of a Hurwitz
//! orbit) and `X_G` (vertices: graphical objects), and the 2-cells attached
//! along braid relations and liftable powers.
//!
//! `X_G` is usually infinite and is only built as a ball around the
//! canonical object.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use crate::braid::{hurwitz_apply, orbit_with_edges, BraidGenerator, BraidWord, LabelTuple, Sign};
use crate::graphical::{
    apply_generator, apply_morphism, canonical_object, label_of, objects_equal, GraphicalObject,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexKind {
    Xm,
    XgBall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ComplexEdge {
    pub source: usize,
    pub index: usize,
    #[serde(serialize_with = "sign_as_int")]
    pub sign: Sign,
    pub target: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexGraph {
    pub kind: ComplexKind,
    pub degree: usize,
    pub strands: usize,
    /// Serialized vertices.
    pub vertices: Vec<String>,
    /// Label tuple of every vertex.
    #[serde(skip)]
    pub labels: Vec<LabelTuple>,
    pub edges: Vec<ComplexEdge>,
    pub base: usize,
    /// Word distance from `base`.
    pub distances: Vec<usize>,
    pub radius: Option<usize>,
}

impl ComplexGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Target of slot `(index, sign)` at `v`, if the edge is present.
    pub fn follow(&self, v: usize, index: usize, sign: Sign) -> Option<usize> {
        let start = self.edges.partition_point(|e| e.source < v);
        self.edges[start..]
            .iter()
            .take_while(|e| e.source == v)
            .find(|e| e.index == index && e.sign == sign)
            .map(|e| e.target)
    }

    /// Whether every vertex has all `2(n-1)` generator slots.
    pub fn is_regular(&self) -> bool {
        let mut count = vec![0usize; self.vertices.len()];
        for e in &self.edges {
            count[e.source] += 1;
        }
        count.iter().all(|&c| c == 2 * (self.strands - 1))
    }

    pub fn is_connected(&self) -> bool {
        self.distances.iter().all(|&d| d != usize::MAX)
    }
}

fn distances_from(base: usize, count: usize, edges: &[ComplexEdge]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); count];
    for e in edges {
        adj[e.source].push(e.target);
        adj[e.target].push(e.source);
    }
    let mut dist = vec![usize::MAX; count];
    dist[base] = 0;
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// `X¹_M` on the Hurwitz orbit of `tau0`, vertices sorted.
pub fn build_xm(tau0: &LabelTuple) -> ComplexGraph {
    let orbit = orbit_with_edges(tau0);
    let base = orbit.position(tau0).expect("orbit contains its seed");
    let mut edges: Vec<ComplexEdge> = orbit
        .edges
        .iter()
        .map(|e| ComplexEdge {
            source: e.source,
            index: e.index,
            sign: e.sign,
            target: e.target,
        })
        .collect();
    edges.sort();
    let distances = distances_from(base, orbit.vertices.len(), &edges);
    ComplexGraph {
        kind: ComplexKind::Xm,
        degree: tau0.degree(),
        strands: tau0.len(),
        vertices: orbit.vertices.iter().map(ToString::to_string).collect(),
        labels: orbit.vertices,
        edges,
        base,
        distances,
        radius: None,
    }
}

fn generators(n: usize) -> impl Iterator<Item = BraidGenerator> {
    (1..n).flat_map(|i| [BraidGenerator::pos(i), BraidGenerator::neg(i)])
}

/// The ball of the given word radius about `canonical_object(tau0)` in `X¹_G`.
///
/// Vertices are numbered in breadth-first order; edges between ball
/// vertices are kept, edges leaving the ball are dropped.
pub fn build_xg_ball(tau0: &LabelTuple, radius: usize) -> ComplexGraph {
    let n = tau0.len();
    let start = canonical_object(tau0);
    let mut objects = vec![start.clone()];
    let mut index: HashMap<GraphicalObject, usize> = HashMap::from([(start, 0)]);
    let mut distances = vec![0usize];
    let mut next = 0;
    while next < objects.len() {
        let v = next;
        next += 1;
        if distances[v] == radius {
            continue;
        }
        for g in generators(n) {
            let moved = apply_generator(&objects[v], g.index, g.sign).expect("index in range");
            if !index.contains_key(&moved) {
                index.insert(moved.clone(), objects.len());
                objects.push(moved);
                distances.push(distances[v] + 1);
            }
        }
    }
    let mut edges = Vec::new();
    for (v, o) in objects.iter().enumerate() {
        for g in generators(n) {
            let moved = apply_generator(o, g.index, g.sign).expect("index in range");
            if let Some(&target) = index.get(&moved) {
                edges.push(ComplexEdge {
                    source: v,
                    index: g.index,
                    sign: g.sign,
                    target,
                });
            }
        }
    }
    ComplexGraph {
        kind: ComplexKind::XgBall,
        degree: tau0.degree(),
        strands: n,
        vertices: objects.iter().map(ToString::to_string).collect(),
        labels: objects.iter().map(label_of).collect(),
        edges,
        base: 0,
        distances,
        radius: Some(radius),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellFamily {
    BraidRelation,
    FarCommutation,
    Power,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoCell {
    pub vertex: usize,
    pub family: CellFamily,
    #[serde(serialize_with = "word_as_text")]
    pub word: BraidWord,
    /// The attaching word returns to its starting labels.
    pub closed: bool,
}

fn sign_as_int<S: Serializer>(sign: &Sign, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_i8(sign.as_i8())
}

fn word_as_text<S: Serializer>(w: &BraidWord, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

#[derive(Debug, Clone, Serialize)]
pub struct TwoCellInventory {
    pub cells: Vec<TwoCell>,
    /// Cells for relations among mapping classes; not constructed.
    pub mcg_relation_cells: Vec<TwoCell>,
    pub mcg_relation_status: &'static str,
}

impl TwoCellInventory {
    pub fn at(&self, vertex: usize) -> impl Iterator<Item = &TwoCell> {
        self.cells.iter().filter(move |c| c.vertex == vertex)
    }
}

/// Attaching words of the 2-cells at `tau`: braid relations, far
/// commutations, and `σ_i²` / `σ_i³` at disjoint / overlapping labels.
pub fn cells_at(tau: &LabelTuple) -> Vec<(CellFamily, BraidWord)> {
    let n = tau.len();
    let mut cells = Vec::new();
    for i in 1..n.saturating_sub(1) {
        let w = BraidWord::new(vec![
            BraidGenerator::pos(i),
            BraidGenerator::pos(i + 1),
            BraidGenerator::pos(i),
            BraidGenerator::neg(i + 1),
            BraidGenerator::neg(i),
            BraidGenerator::neg(i + 1),
        ]);
        cells.push((CellFamily::BraidRelation, w));
    }
    for i in 1..n {
        for j in i + 2..n {
            let w = BraidWord::new(vec![
                BraidGenerator::pos(i),
                BraidGenerator::pos(j),
                BraidGenerator::neg(i),
                BraidGenerator::neg(j),
            ]);
            cells.push((CellFamily::FarCommutation, w));
        }
    }
    for i in 1..n {
        let (s, t) = (tau.label(i), tau.label(i + 1));
        let k = if s == t {
            continue;
        } else if s.is_disjoint(&t) {
            2
        } else {
            3
        };
        cells.push((
            CellFamily::Power,
            BraidWord::new(vec![BraidGenerator::pos(i)]).power(k),
        ));
    }
    cells
}

pub fn two_cell_inventory(tau0: &LabelTuple) -> TwoCellInventory {
    let xm = build_xm(tau0);
    let cells = xm
        .labels
        .iter()
        .enumerate()
        .flat_map(|(v, tau)| {
            cells_at(tau)
                .into_iter()
                .map(move |(family, word)| TwoCell {
                    vertex: v,
                    closed: hurwitz_apply(tau, &word).as_ref() == Ok(tau),
                    family,
                    word,
                })
        })
        .collect();
    TwoCellInventory {
        cells,
        mcg_relation_cells: Vec::new(),
        mcg_relation_status: "out of scope: relations among mapping classes are not constructed",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LoopLift {
    #[serde(serialize_with = "word_as_text")]
    pub word: BraidWord,
    pub closed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoveringReport {
    /// Ball vertices whose slots were compared with `X_M`.
    pub interior_vertices_checked: usize,
    /// Attaching loops at the base that must lift to closed loops.
    pub closed_lifts: Vec<LoopLift>,
    /// Equal-label generator loops at the base, which must not lift closed.
    pub open_lifts: Vec<LoopLift>,
    pub failures: Vec<String>,
}

impl CoveringReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn lifts_closed(start: &GraphicalObject, word: &BraidWord) -> bool {
    let end = apply_morphism(start, word).expect("word fits the strands");
    objects_equal(&end, start)
}

/// Local checks that the label map from a ball of `X¹_G` to `X¹_M` is a
/// covering onto its image and that 2-cells lift as closed loops.
pub fn check_covering(ball: &ComplexGraph, xm: &ComplexGraph) -> CoveringReport {
    let mut failures = Vec::new();
    let radius = ball.radius.unwrap_or(usize::MAX);
    let n = ball.strands;
    let mut checked = 0;
    for v in 0..ball.vertex_count() {
        if ball.distances[v] >= radius {
            continue;
        }
        checked += 1;
        let Some(image) = xm.labels.binary_search(&ball.labels[v]).ok() else {
            failures.push(format!(
                "(a) vertex {v}: label {} is not in X_M",
                ball.labels[v]
            ));
            continue;
        };
        for g in generators(n) {
            let up = ball.follow(v, g.index, g.sign);
            let down = xm.follow(image, g.index, g.sign);
            match (up, down) {
                (Some(w), Some(x)) if ball.labels[w] == xm.labels[x] => {}
                _ => failures.push(format!("(a) vertex {v}: slot {g} does not match its image")),
            }
        }
    }

    let tau0 = &ball.labels[ball.base];
    let start = canonical_object(tau0);
    let mut closed_lifts = Vec::new();
    for (family, word) in cells_at(tau0) {
        let closed = lifts_closed(&start, &word);
        if !closed {
            failures.push(format!("(b) {family:?} loop {word} lifts to an open path"));
        }
        closed_lifts.push(LoopLift { word, closed });
    }
    let mut open_lifts = Vec::new();
    for i in 1..n {
        if tau0.label(i) != tau0.label(i + 1) {
            continue;
        }
        for g in [BraidGenerator::pos(i), BraidGenerator::neg(i)] {
            let word = BraidWord::new(vec![g]);
            let closed = lifts_closed(&start, &word);
            if closed {
                failures.push(format!("(c) equal-label loop {word} lifts closed"));
            }
            open_lifts.push(LoopLift { word, closed });
        }
    }
    CoveringReport {
        interior_vertices_checked: checked,
        closed_lifts,
        open_lifts,
        failures,
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn export_dot(g: &ComplexGraph) -> String {
    let name = match g.kind {
        ComplexKind::Xm => "XM",
        ComplexKind::XgBall => "XG",
    };
    let mut out = format!("digraph {name} {{\n");
    for (v, label) in g.vertices.iter().enumerate() {
        let shape = if v == g.base { ", peripheries=2" } else { "" };
        let _ = writeln!(out, "  v{v} [label=\"{}\"{shape}];", escape(label));
    }
    for e in &g.edges {
        let gen = BraidGenerator {
            index: e.index,
            sign: e.sign,
        };
        let _ = writeln!(out, "  v{} -> v{} [label=\"{gen}\"];", e.source, e.target);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lt(d: usize, pairs: &[(usize, usize)]) -> LabelTuple {
        LabelTuple::from_pairs(d, pairs).unwrap()
    }

    #[test]
    fn xm_of_disc() {
        let g = build_xm(&lt(3, &[(1, 2), (2, 3)]));
        assert_eq!(g.vertex_count(), 3);
        assert!(g.is_regular() && g.is_connected());
        // σ1 cycles through the three vertices
        let mut v = g.base;
        for _ in 0..3 {
            v = g.follow(v, 1, Sign::Pos).unwrap();
        }
        assert_eq!(v, g.base);
        assert_ne!(g.follow(g.base, 1, Sign::Pos), Some(g.base));
    }

    #[test]
    fn xg_ball_sizes() {
        let disc = lt(3, &[(1, 2), (2, 3)]);
        assert_eq!(build_xg_ball(&disc, 0).vertex_count(), 1);
        let ball = build_xg_ball(&disc, 3);
        assert_eq!(ball.vertex_count(), 3);
        assert!(ball.is_regular());

        let annulus = lt(3, &[(1, 2), (1, 2), (2, 3)]);
        let sizes: Vec<usize> = (0..5)
            .map(|r| build_xg_ball(&annulus, r).vertex_count())
            .collect();
        assert!(sizes.windows(2).all(|w| w[0] < w[1]), "{sizes:?}");
    }

    #[test]
    fn inventory_of_torus_component() {
        let tau = lt(3, &[(1, 2), (2, 3), (2, 3), (2, 3)]);
        let inv = two_cell_inventory(&tau);
        let base = build_xm(&tau).base;
        let words: Vec<String> = inv.at(base).map(|c| c.word.to_string()).collect();
        assert!(words.contains(&"s1 s1 s1".to_string()));
        assert!(words.contains(&"s2 s3 s2 s3^-1 s2^-1 s3^-1".to_string()));
        assert!(words.contains(&"s1 s2 s1 s2^-1 s1^-1 s2^-1".to_string()));
        assert!(!inv
            .at(base)
            .any(|c| c.family == CellFamily::Power && c.word.gens()[0].index == 2));
        assert!(inv.cells.iter().all(|c| c.closed));
        assert!(inv.mcg_relation_cells.is_empty());
    }

    #[test]
    fn covering_checks() {
        for (d, pairs) in [
            (3, vec![(1, 2), (2, 3)]),
            (3, vec![(1, 2), (1, 2), (2, 3)]),
            (3, vec![(1, 2), (2, 3), (2, 3), (2, 3)]),
        ] {
            let tau = lt(d, &pairs);
            let report = check_covering(&build_xg_ball(&tau, 2), &build_xm(&tau));
            assert!(report.passed(), "{:?}", report.failures);
        }
        let annulus = lt(3, &[(1, 2), (1, 2), (2, 3)]);
        let report = check_covering(&build_xg_ball(&annulus, 1), &build_xm(&annulus));
        assert_eq!(report.open_lifts.len(), 2);
    }

    #[test]
    fn dot_output() {
        let g = build_xm(&lt(3, &[(1, 2), (2, 3)]));
        let dot = export_dot(&g);
        assert_eq!(dot.matches(" [label=\"(").count(), 3);
        assert!(dot.contains("[label=\"s1\"]") && dot.contains("[label=\"s1^-1\"]"));
        assert_eq!(dot, export_dot(&g));
        let one = export_dot(&build_xg_ball(&lt(3, &[(1, 2), (2, 3)]), 0));
        assert_eq!(one.matches("label=").count(), 1);
    }
}
