//! Brute-force enumeration of walks and weak walks.
//!
//! A walk `a_0, i_1, a_1, …, i_n, a_n` alternates anchors (vertices and
//! edges) with incidences, where `i_h` contains both `a_{h-1}` and `a_h`.
//! Ordinary walks require `i_{2h-1} ≠ i_{2h}`; nothing constrains `i_{2h}`
//! against `i_{2h+1}`, so a walk may leave an anchor along the incidence it
//! arrived on. Weak walks drop the constraint altogether.
//!
//! Lengths are passed as the incidence count `n` (the walk has length
//! `n / 2`). The enumeration here is independent of every matrix product in
//! [`crate::builders`], which makes it the oracle for the walk-counting
//! identities.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::hypergraph::OrientedHypergraph;
use crate::matrix::LabeledMatrix;
use crate::sign::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Anchor {
    Vertex(usize),
    Edge(usize),
}

impl Anchor {
    pub fn kind(self) -> AnchorKind {
        match self {
            Anchor::Vertex(_) => AnchorKind::Vertex,
            Anchor::Edge(_) => AnchorKind::Edge,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Anchor::Vertex(i) | Anchor::Edge(i) => i,
        }
    }

    pub fn label(self, g: &OrientedHypergraph) -> &str {
        match self {
            Anchor::Vertex(i) => &g.vertices()[i],
            Anchor::Edge(i) => &g.edges()[i],
        }
    }
}

/// Which anchor set a walk matrix ranges over: `V` or `E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnchorKind {
    Vertex,
    Edge,
}

impl AnchorKind {
    pub fn anchor(self, index: usize) -> Anchor {
        match self {
            AnchorKind::Vertex => Anchor::Vertex(index),
            AnchorKind::Edge => Anchor::Edge(index),
        }
    }

    fn labels(self, g: &OrientedHypergraph) -> &[String] {
        match self {
            AnchorKind::Vertex => g.vertices(),
            AnchorKind::Edge => g.edges(),
        }
    }
}

impl fmt::Display for AnchorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AnchorKind::Vertex => "V",
            AnchorKind::Edge => "E",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("unknown anchor label {0:?}")]
    UnknownAnchor(String),
    #[error("{from}-to-{to} walks need an {} incidence count, got {n}", if from == to { "even" } else { "odd" })]
    Parity { from: AnchorKind, to: AnchorKind, n: usize },
    #[error("malformed walk: {0}")]
    Malformed(String),
    #[error("walk length {n} exceeds the enumeration ceiling of {max} incidences")]
    TooLong { n: usize, max: usize },
    #[error("more than {limit} walks generated; raise the walk limit or shrink the instance")]
    TooManyWalks { limit: u64 },
}

/// Enumeration ceilings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkLimits {
    /// Largest incidence count `n` accepted.
    pub max_incidences: usize,
    /// Largest number of complete walks generated from one start anchor.
    pub max_walks: u64,
}

impl Default for WalkLimits {
    fn default() -> Self {
        WalkLimits {
            max_incidences: 12,
            max_walks: 1_000_000,
        }
    }
}

/// An explicit walk; `incidences` are positions in `G.incidences()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    pub anchors: Vec<Anchor>,
    pub incidences: Vec<usize>,
    pub weak: bool,
}

impl Walk {
    /// The trivial walk at one anchor.
    pub fn trivial(at: Anchor) -> Self {
        Walk {
            anchors: vec![at],
            incidences: Vec::new(),
            weak: false,
        }
    }

    /// `n`, the number of incidences; the walk has length `n / 2`.
    pub fn incidence_count(&self) -> usize {
        self.incidences.len()
    }

    /// A weak 1-walk `v, i, e, i, v`.
    pub fn is_backstep(&self) -> bool {
        self.incidences.len() == 2 && self.incidences[0] == self.incidences[1]
    }

    pub fn display(&self, g: &OrientedHypergraph) -> String {
        let mut out = String::from(self.anchors[0].label(g));
        for (pos, anchor) in self.incidences.iter().zip(&self.anchors[1..]) {
            let inc = g.incidences()[*pos];
            out.push_str(&format!(
                ", ({},{},{},{}), {}",
                g.vertices()[inc.vertex],
                g.edges()[inc.edge],
                inc.mult,
                inc.sign,
                anchor.label(g)
            ));
        }
        out
    }
}

/// Aggregated walk counts `w`, `w⁺`, `w⁻` and `w± = w⁺ − w⁻`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WalkCounts {
    pub total: u64,
    pub positive: u64,
    pub negative: u64,
    pub signed_net: i64,
}

impl WalkCounts {
    fn record(&mut self, sign: Sign) {
        self.total += 1;
        match sign {
            Sign::Plus => {
                self.positive += 1;
                self.signed_net += 1;
            }
            Sign::Minus => {
                self.negative += 1;
                self.signed_net -= 1;
            }
        }
    }
}

/// `sgn(W) = (−1)^⌊n/2⌋ ∏ σ(i_h)`, after checking that `W` is a walk of `G`.
pub fn walk_sign(g: &OrientedHypergraph, walk: &Walk) -> Result<Sign, WalkError> {
    check_walk(g, walk)?;
    Ok(sign_of(g, &walk.incidences))
}

fn sign_of(g: &OrientedHypergraph, incidences: &[usize]) -> Sign {
    let parity = if (incidences.len() / 2) % 2 == 0 {
        Sign::Plus
    } else {
        Sign::Minus
    };
    incidences
        .iter()
        .fold(parity, |acc, &p| acc * g.incidences()[p].sign)
}

fn check_walk(g: &OrientedHypergraph, walk: &Walk) -> Result<(), WalkError> {
    let malformed = |msg: String| Err(WalkError::Malformed(msg));
    if walk.anchors.len() != walk.incidences.len() + 1 {
        return malformed(format!(
            "{} anchors for {} incidences",
            walk.anchors.len(),
            walk.incidences.len()
        ));
    }
    for (h, a) in walk.anchors.iter().enumerate() {
        let in_range = match a {
            Anchor::Vertex(i) => *i < g.num_vertices(),
            Anchor::Edge(i) => *i < g.num_edges(),
        };
        if !in_range {
            return malformed(format!("anchor {h} is out of range"));
        }
    }
    for (h, &pos) in walk.incidences.iter().enumerate() {
        let Some(inc) = g.incidences().get(pos) else {
            return malformed(format!("incidence {} is out of range", h + 1));
        };
        let (before, after) = (walk.anchors[h], walk.anchors[h + 1]);
        let joins = match (before, after) {
            (Anchor::Vertex(v), Anchor::Edge(e)) | (Anchor::Edge(e), Anchor::Vertex(v)) => {
                inc.vertex == v && inc.edge == e
            }
            _ => return malformed(format!("anchors {h} and {} do not alternate", h + 1)),
        };
        if !joins {
            return malformed(format!(
                "incidence {} does not contain anchors {h} and {}",
                h + 1,
                h + 1
            ));
        }
        // i_{2h-1} ≠ i_{2h}: 1-based position h+1 even
        if !walk.weak && h % 2 == 1 && walk.incidences[h - 1] == pos {
            return malformed(format!("incidences {h} and {} coincide in a non-weak walk", h + 1));
        }
    }
    Ok(())
}

/// Walk enumeration over one hypergraph.
#[derive(Debug, Clone)]
pub struct WalkEngine<'g> {
    graph: &'g OrientedHypergraph,
    at_vertex: Vec<Vec<usize>>,
    at_edge: Vec<Vec<usize>>,
    limits: WalkLimits,
}

impl<'g> WalkEngine<'g> {
    pub fn new(graph: &'g OrientedHypergraph) -> Self {
        Self::with_limits(graph, WalkLimits::default())
    }

    pub fn with_limits(graph: &'g OrientedHypergraph, limits: WalkLimits) -> Self {
        let mut at_vertex = vec![Vec::new(); graph.num_vertices()];
        let mut at_edge = vec![Vec::new(); graph.num_edges()];
        for (pos, inc) in graph.incidences().iter().enumerate() {
            at_vertex[inc.vertex].push(pos);
            at_edge[inc.edge].push(pos);
        }
        WalkEngine {
            graph,
            at_vertex,
            at_edge,
            limits,
        }
    }

    pub fn graph(&self) -> &'g OrientedHypergraph {
        self.graph
    }

    pub fn limits(&self) -> WalkLimits {
        self.limits
    }

    /// Resolves a vertex or edge label.
    pub fn anchor(&self, label: &str) -> Result<Anchor, WalkError> {
        self.graph
            .vertex_index(label)
            .map(Anchor::Vertex)
            .or_else(|| self.graph.edge_index(label).map(Anchor::Edge))
            .ok_or_else(|| WalkError::UnknownAnchor(label.to_owned()))
    }

    fn check_request(&self, from: AnchorKind, to: AnchorKind, n: usize) -> Result<(), WalkError> {
        if (from == to) != (n % 2 == 0) {
            return Err(WalkError::Parity { from, to, n });
        }
        if n > self.limits.max_incidences {
            return Err(WalkError::TooLong {
                n,
                max: self.limits.max_incidences,
            });
        }
        Ok(())
    }

    /// Depth-first traversal of every (weak) walk with `n` incidences starting
    /// at `start`, in lexicographic order of incidence sequences.
    fn traverse<F>(&self, start: Anchor, n: usize, weak: bool, mut visit: F) -> Result<(), WalkError>
    where
        F: FnMut(&[usize], Anchor),
    {
        let mut path = Vec::with_capacity(n);
        let mut generated = 0u64;
        self.descend(start, n, weak, &mut path, &mut generated, &mut visit)
    }

    fn descend<F>(
        &self,
        at: Anchor,
        n: usize,
        weak: bool,
        path: &mut Vec<usize>,
        generated: &mut u64,
        visit: &mut F,
    ) -> Result<(), WalkError>
    where
        F: FnMut(&[usize], Anchor),
    {
        let depth = path.len();
        if depth == n {
            *generated += 1;
            if *generated > self.limits.max_walks {
                return Err(WalkError::TooManyWalks {
                    limit: self.limits.max_walks,
                });
            }
            visit(path, at);
            return Ok(());
        }
        let choices = match at {
            Anchor::Vertex(v) => &self.at_vertex[v],
            Anchor::Edge(e) => &self.at_edge[e],
        };
        for &pos in choices {
            if !weak && depth % 2 == 1 && path[depth - 1] == pos {
                continue;
            }
            let inc = self.graph.incidences()[pos];
            let next = match at {
                Anchor::Vertex(_) => Anchor::Edge(inc.edge),
                Anchor::Edge(_) => Anchor::Vertex(inc.vertex),
            };
            path.push(pos);
            self.descend(next, n, weak, path, generated, visit)?;
            path.pop();
        }
        Ok(())
    }

    /// Every walk from `from` to `to` with exactly `n` incidences, sorted by
    /// incidence sequence.
    pub fn enumerate_walks(&self, from: &str, to: &str, n: usize, weak: bool) -> Result<Vec<Walk>, WalkError> {
        let (from, to) = (self.anchor(from)?, self.anchor(to)?);
        self.enumerate_between(from, to, n, weak)
    }

    pub fn enumerate_between(&self, from: Anchor, to: Anchor, n: usize, weak: bool) -> Result<Vec<Walk>, WalkError> {
        self.check_request(from.kind(), to.kind(), n)?;
        let mut walks = Vec::new();
        self.traverse(from, n, weak, |path, end| {
            if end == to {
                walks.push(self.rebuild(from, path, weak));
            }
        })?;
        Ok(walks)
    }

    fn rebuild(&self, from: Anchor, path: &[usize], weak: bool) -> Walk {
        let mut anchors = Vec::with_capacity(path.len() + 1);
        anchors.push(from);
        let mut at = from;
        for &pos in path {
            let inc = self.graph.incidences()[pos];
            at = match at {
                Anchor::Vertex(_) => Anchor::Edge(inc.edge),
                Anchor::Edge(_) => Anchor::Vertex(inc.vertex),
            };
            anchors.push(at);
        }
        Walk {
            anchors,
            incidences: path.to_vec(),
            weak,
        }
    }

    /// `w`, `w⁺`, `w⁻`, `w±` (or their weak counterparts) from `from` to `to`.
    pub fn walk_counts(&self, from: &str, to: &str, n: usize, weak: bool) -> Result<WalkCounts, WalkError> {
        let (from, to) = (self.anchor(from)?, self.anchor(to)?);
        self.counts_between(from, to, n, weak)
    }

    pub fn counts_between(&self, from: Anchor, to: Anchor, n: usize, weak: bool) -> Result<WalkCounts, WalkError> {
        self.check_request(from.kind(), to.kind(), n)?;
        let mut counts = WalkCounts::default();
        self.traverse(from, n, weak, |path, end| {
            if end == to {
                counts.record(sign_of(self.graph, path));
            }
        })?;
        Ok(counts)
    }

    /// Counts from one start anchor to every anchor of the opposite or same
    /// kind (as dictated by the parity of `n`), in declared order.
    pub fn counts_from(&self, from: Anchor, n: usize, weak: bool) -> Result<Vec<WalkCounts>, WalkError> {
        let to_kind = if n % 2 == 0 {
            from.kind()
        } else {
            match from.kind() {
                AnchorKind::Vertex => AnchorKind::Edge,
                AnchorKind::Edge => AnchorKind::Vertex,
            }
        };
        self.check_request(from.kind(), to_kind, n)?;
        let mut counts = vec![WalkCounts::default(); to_kind.labels(self.graph).len()];
        self.traverse(from, n, weak, |path, end| {
            counts[end.index()].record(sign_of(self.graph, path));
        })?;
        Ok(counts)
    }

    /// Full table of counts between two anchor sets.
    pub fn count_table(&self, rows: AnchorKind, cols: AnchorKind, n: usize, weak: bool) -> Result<Vec<Vec<WalkCounts>>, WalkError> {
        self.check_request(rows, cols, n)?;
        (0..rows.labels(self.graph).len())
            .into_par_iter()
            .map(|i| self.counts_from(rows.anchor(i), n, weak))
            .collect()
    }

    fn net_matrix(&self, rows: AnchorKind, cols: AnchorKind, n: usize, weak: bool) -> Result<LabeledMatrix, WalkError> {
        let table = self.count_table(rows, cols, n, weak)?;
        let mut m = LabeledMatrix::zeros(
            rows.labels(self.graph).to_vec(),
            cols.labels(self.graph).to_vec(),
        );
        for (i, row) in table.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                m.set(i, j, c.signed_net);
            }
        }
        Ok(m)
    }

    /// The k-walk matrix `X_(G, rows, cols, n/2)` of net signed walk counts.
    pub fn walk_matrix(&self, rows: AnchorKind, cols: AnchorKind, n: usize) -> Result<LabeledMatrix, WalkError> {
        self.net_matrix(rows, cols, n, false)
    }

    /// The weak k-walk matrix `W_(G, rows, cols, n/2)`.
    pub fn weak_walk_matrix(&self, rows: AnchorKind, cols: AnchorKind, n: usize) -> Result<LabeledMatrix, WalkError> {
        self.net_matrix(rows, cols, n, true)
    }

    /// The backsteps `v, i, e, i, v` at a vertex.
    pub fn backsteps(&self, vertex: &str) -> Result<Vec<Walk>, WalkError> {
        let v = match self.anchor(vertex)? {
            a @ Anchor::Vertex(_) => a,
            Anchor::Edge(_) => return Err(WalkError::UnknownAnchor(vertex.to_owned())),
        };
        let weak = self.enumerate_between(v, v, 2, true)?;
        Ok(weak.into_iter().filter(Walk::is_backstep).collect())
    }

    /// Number of weak 1-walks from `v` back to `v` reusing one incidence.
    pub fn backstep_count(&self, vertex: &str) -> Result<u64, WalkError> {
        Ok(self.backsteps(vertex)?.len() as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::HypergraphBuilder;
    use crate::sign::Sign::{Minus, Plus};

    fn two_vertex_edge() -> OrientedHypergraph {
        HypergraphBuilder::new()
            .vertices(["v1", "v2"])
            .edge("e1")
            .incidence("v1", "e1", Plus)
            .incidence("v2", "e1", Plus)
            .build()
            .unwrap()
    }

    fn double_incidence() -> OrientedHypergraph {
        HypergraphBuilder::new()
            .vertex("v1")
            .edge("e1")
            .incidence("v1", "e1", Plus)
            .incidence("v1", "e1", Minus)
            .build()
            .unwrap()
    }

    #[test]
    fn sign_of_trivial_walk_is_positive() {
        let g = two_vertex_edge();
        assert_eq!(walk_sign(&g, &Walk::trivial(Anchor::Vertex(0))).unwrap(), Plus);
    }

    #[test]
    fn sign_of_single_adjacency() {
        let g = two_vertex_edge();
        let w = Walk {
            anchors: vec![Anchor::Vertex(0), Anchor::Edge(0), Anchor::Vertex(1)],
            incidences: vec![0, 1],
            weak: false,
        };
        assert_eq!(walk_sign(&g, &w).unwrap(), Minus);
    }

    #[test]
    fn backstep_is_negative_for_either_orientation() {
        for sign in [Plus, Minus] {
            let g = HypergraphBuilder::new()
                .vertex("v")
                .edge("e")
                .incidence("v", "e", sign)
                .build()
                .unwrap();
            let w = Walk {
                anchors: vec![Anchor::Vertex(0), Anchor::Edge(0), Anchor::Vertex(0)],
                incidences: vec![0, 0],
                weak: true,
            };
            assert_eq!(walk_sign(&g, &w).unwrap(), Minus);
        }
    }

    #[test]
    fn malformed_walks_are_rejected() {
        let g = two_vertex_edge();
        let not_weak_backstep = Walk {
            anchors: vec![Anchor::Vertex(0), Anchor::Edge(0), Anchor::Vertex(0)],
            incidences: vec![0, 0],
            weak: false,
        };
        assert!(matches!(walk_sign(&g, &not_weak_backstep), Err(WalkError::Malformed(_))));
        let wrong_incidence = Walk {
            anchors: vec![Anchor::Vertex(0), Anchor::Edge(0)],
            incidences: vec![1],
            weak: false,
        };
        assert!(walk_sign(&g, &wrong_incidence).is_err());
        let no_alternation = Walk {
            anchors: vec![Anchor::Vertex(0), Anchor::Vertex(1)],
            incidences: vec![0],
            weak: false,
        };
        assert!(walk_sign(&g, &no_alternation).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let g = two_vertex_edge();
        let engine = WalkEngine::new(&g);
        assert_eq!(engine.enumerate_walks("v1", "v2", 2, false).unwrap().len(), 1);
        let weak = engine.enumerate_walks("v1", "v1", 2, true).unwrap();
        assert_eq!(weak.len(), 1);
        assert!(weak[0].is_backstep());
        assert!(engine.enumerate_walks("v1", "v1", 2, false).unwrap().is_empty());

        let d = double_incidence();
        let engine = WalkEngine::new(&d);
        let walks = engine.enumerate_walks("v1", "v1", 2, false).unwrap();
        assert_eq!(walks.len(), 2);
        assert_eq!(walks[0].incidences, vec![0, 1]);
        assert_eq!(walks[1].incidences, vec![1, 0]);
        for w in &walks {
            assert_eq!(walk_sign(&d, w).unwrap(), Plus);
        }
    }

    #[test]
    fn walks_may_leave_along_the_arriving_incidence() {
        // v1 -> v2 -> v1 through the single edge: i_2 = i_3 is allowed
        let g = two_vertex_edge();
        let engine = WalkEngine::new(&g);
        let walks = engine.enumerate_walks("v1", "v1", 4, false).unwrap();
        assert_eq!(walks.len(), 1);
        assert_eq!(walks[0].incidences, vec![0, 1, 1, 0]);
    }

    #[test]
    fn parity_and_limits() {
        let g = two_vertex_edge();
        let engine = WalkEngine::new(&g);
        assert!(matches!(
            engine.enumerate_walks("v1", "v2", 1, false),
            Err(WalkError::Parity { .. })
        ));
        assert!(matches!(
            engine.walk_counts("v1", "e1", 2, false),
            Err(WalkError::Parity { .. })
        ));
        assert!(matches!(
            engine.walk_counts("v1", "v2", 14, false),
            Err(WalkError::TooLong { n: 14, max: 12 })
        ));
        assert!(matches!(
            engine.walk_counts("nope", "v2", 2, false),
            Err(WalkError::UnknownAnchor(_))
        ));
        let tight = WalkEngine::with_limits(
            &g,
            WalkLimits {
                max_incidences: 12,
                max_walks: 0,
            },
        );
        assert!(matches!(
            tight.walk_counts("v1", "v2", 2, false),
            Err(WalkError::TooManyWalks { limit: 0 })
        ));
    }

    #[test]
    fn count_examples() {
        let g = two_vertex_edge();
        let engine = WalkEngine::new(&g);
        assert_eq!(
            engine.walk_counts("v1", "v2", 2, false).unwrap(),
            WalkCounts {
                total: 1,
                positive: 0,
                negative: 1,
                signed_net: -1
            }
        );
        assert_eq!(engine.walk_counts("v1", "v1", 0, false).unwrap().total, 1);
        assert_eq!(engine.walk_counts("v1", "v2", 0, false).unwrap().total, 0);
        assert_eq!(engine.walk_counts("e1", "e1", 0, false).unwrap().total, 1);

        let d = double_incidence();
        let weak = WalkEngine::new(&d).walk_counts("v1", "v1", 2, true).unwrap();
        assert_eq!(weak.total, 4);
        assert_eq!(weak.signed_net, 0);
    }

    #[test]
    fn walk_matrices() {
        let g = two_vertex_edge();
        let engine = WalkEngine::new(&g);
        assert_eq!(
            engine.weak_walk_matrix(AnchorKind::Vertex, AnchorKind::Vertex, 2).unwrap().to_rows(),
            vec![vec![-1, -1], vec![-1, -1]]
        );
        assert_eq!(
            engine.walk_matrix(AnchorKind::Vertex, AnchorKind::Edge, 1).unwrap().to_rows(),
            vec![vec![1], vec![1]]
        );
        assert_eq!(
            engine.walk_matrix(AnchorKind::Vertex, AnchorKind::Vertex, 0).unwrap().to_rows(),
            vec![vec![1, 0], vec![0, 1]]
        );
        let isolated = HypergraphBuilder::new()
            .vertices(["a", "b"])
            .edge("e")
            .incidence("a", "e", Plus)
            .build()
            .unwrap();
        let w = WalkEngine::new(&isolated)
            .weak_walk_matrix(AnchorKind::Vertex, AnchorKind::Vertex, 2)
            .unwrap();
        assert_eq!(w.to_rows(), vec![vec![-1, 0], vec![0, 0]]);
    }

    #[test]
    fn backstep_counts() {
        let g = two_vertex_edge();
        assert_eq!(WalkEngine::new(&g).backstep_count("v1").unwrap(), 1);
        let isolated = HypergraphBuilder::new().vertex("v").build().unwrap();
        assert_eq!(WalkEngine::new(&isolated).backstep_count("v").unwrap(), 0);
        let d = double_incidence();
        assert_eq!(WalkEngine::new(&d).backstep_count("v1").unwrap(), 2);
        assert!(WalkEngine::new(&d).backstep_count("e1").is_err());
    }

    #[test]
    fn walk_display() {
        let g = two_vertex_edge();
        let walks = WalkEngine::new(&g).enumerate_walks("v1", "v2", 2, false).unwrap();
        assert_eq!(walks[0].display(&g), "v1, (v1,e1,1,+1), e1, (v2,e1,1,+1), v2");
    }
}
