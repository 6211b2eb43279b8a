//! Oriented signed graphs as 2-uniform oriented hypergraphs, and their line
//! graphs.
//!
//! Orientations are stored per endpoint slot rather than per `(vertex, edge)`
//! pair so that a loop, whose two incidences may carry different signs,
//! converts back and forth without loss.

use std::collections::HashSet;

use thiserror::Error;

use crate::builders::{adjacency_matrix, degree_matrix, incidence_matrix};
use crate::hypergraph::{HypergraphError, IncidenceSpec, OrientedHypergraph};
use crate::matrix::LabeledMatrix;
use crate::sign::Sign;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SignedGraphError {
    #[error("edge {edge:?} has size {size}, expected 2")]
    NotTwoUniform { edge: String, size: usize },
    #[error("edge {0:?} references an unknown vertex")]
    UnknownEndpoint(String),
    #[error("edge {edge:?}: stored sign {stored} disagrees with orientation-derived sign {derived}")]
    SignatureMismatch { edge: String, stored: Sign, derived: Sign },
    #[error("duplicate or shared label {0:?}")]
    DuplicateLabel(String),
    #[error("line graphs need a simple underlying graph: {0}")]
    NotSimple(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// One endpoint slot: vertex index and orientation `τ(v, e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Endpoint {
    pub vertex: usize,
    pub tau: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedEdge {
    pub label: String,
    /// Sorted by vertex index; a loop keeps its multiplicity order.
    pub ends: [Endpoint; 2],
    pub sign: Sign,
}

impl SignedEdge {
    pub fn is_loop(&self) -> bool {
        self.ends[0].vertex == self.ends[1].vertex
    }
}

/// An oriented signed graph `(Σ, τ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedSignedGraph {
    vertices: Vec<String>,
    edges: Vec<SignedEdge>,
}

impl OrientedSignedGraph {
    /// Builds a graph from `(label, (v, τ(v,e)), (w, τ(w,e)), sgn(e))` tuples;
    /// the signature must satisfy `τ(v,e) τ(w,e) = −sgn(e)`.
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<(String, (String, Sign), (String, Sign), Sign)>,
    ) -> Result<Self, SignedGraphError> {
        let mut seen = HashSet::new();
        for label in vertices.iter().chain(edges.iter().map(|e| &e.0)) {
            if !seen.insert(label.as_str()) {
                return Err(SignedGraphError::DuplicateLabel(label.clone()));
            }
        }
        let index = |label: &str, edge: &str| {
            vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| SignedGraphError::UnknownEndpoint(edge.to_owned()))
        };
        let mut built = Vec::with_capacity(edges.len());
        for (label, (v, tv), (w, tw), sign) in &edges {
            let mut ends = [
                Endpoint {
                    vertex: index(v, label)?,
                    tau: *tv,
                },
                Endpoint {
                    vertex: index(w, label)?,
                    tau: *tw,
                },
            ];
            ends.sort_by_key(|e| e.vertex);
            let derived = -(*tv * *tw);
            if derived != *sign {
                return Err(SignedGraphError::SignatureMismatch {
                    edge: label.clone(),
                    stored: *sign,
                    derived,
                });
            }
            built.push(SignedEdge {
                label: label.clone(),
                ends,
                sign: *sign,
            });
        }
        Ok(OrientedSignedGraph {
            vertices,
            edges: built,
        })
    }

    /// Builds a graph from orientations alone, deriving every edge sign.
    pub fn from_orientations(
        vertices: Vec<String>,
        edges: Vec<(String, (String, Sign), (String, Sign))>,
    ) -> Result<Self, SignedGraphError> {
        let edges = edges
            .into_iter()
            .map(|(l, a, b)| {
                let sign = -(a.1 * b.1);
                (l, a, b, sign)
            })
            .collect();
        Self::new(vertices, edges)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[SignedEdge] {
        &self.edges
    }

    pub fn edge_labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.label.clone()).collect()
    }

    /// `τ(v, e)`; `None` when `v` and `e` are not incident. For a loop the
    /// first slot's orientation is returned.
    pub fn tau(&self, vertex: &str, edge: &str) -> Option<Sign> {
        let v = self.vertices.iter().position(|x| x == vertex)?;
        let e = self.edges.iter().find(|x| x.label == edge)?;
        e.ends.iter().find(|end| end.vertex == v).map(|end| end.tau)
    }

    /// `sgn(e)`.
    pub fn signature(&self, edge: &str) -> Option<Sign> {
        self.edges.iter().find(|e| e.label == edge).map(|e| e.sign)
    }

    /// No loops and no two edges on the same vertex pair.
    pub fn is_simple(&self) -> bool {
        self.simplicity_violation().is_none()
    }

    fn simplicity_violation(&self) -> Option<String> {
        let mut pairs = HashSet::new();
        for e in &self.edges {
            if e.is_loop() {
                return Some(format!("edge {:?} is a loop", e.label));
            }
            if !pairs.insert((e.ends[0].vertex, e.ends[1].vertex)) {
                return Some(format!("edge {:?} is parallel to an earlier edge", e.label));
            }
        }
        None
    }

    /// Reads a 2-uniform oriented hypergraph as an oriented signed graph.
    pub fn from_hypergraph(g: &OrientedHypergraph) -> Result<Self, SignedGraphError> {
        let mut slots: Vec<Vec<Endpoint>> = vec![Vec::new(); g.num_edges()];
        for inc in g.incidences() {
            slots[inc.edge].push(Endpoint {
                vertex: inc.vertex,
                tau: inc.sign,
            });
        }
        let mut edges = Vec::with_capacity(g.num_edges());
        for (label, ends) in g.edges().iter().zip(slots) {
            let [a, b]: [Endpoint; 2] = ends.clone().try_into().map_err(|_| SignedGraphError::NotTwoUniform {
                edge: label.clone(),
                size: ends.len(),
            })?;
            let mut ends = [a, b];
            ends.sort_by_key(|e| e.vertex);
            edges.push(SignedEdge {
                label: label.clone(),
                ends,
                sign: -(a.tau * b.tau),
            });
        }
        Ok(OrientedSignedGraph {
            vertices: g.vertices().to_vec(),
            edges,
        })
    }

    /// The 2-uniform oriented hypergraph with `σ = τ`; a loop becomes a
    /// pair of incidences with multiplicity indices 1 and 2.
    pub fn to_hypergraph(&self) -> OrientedHypergraph {
        let mut incidences = Vec::with_capacity(2 * self.edges.len());
        for e in &self.edges {
            for (slot, end) in e.ends.iter().enumerate() {
                let mult = if e.is_loop() { slot as u32 + 1 } else { 1 };
                incidences.push(IncidenceSpec::new(
                    self.vertices[end.vertex].clone(),
                    e.label.clone(),
                    mult,
                    end.tau,
                ));
            }
        }
        OrientedHypergraph::new(self.vertices.clone(), self.edge_labels(), incidences)
            .expect("a valid signed graph is a valid 2-uniform hypergraph")
    }

    /// The line graph `(Λ(Γ), τ_Λ)`: one vertex per edge of `Σ`, and for two
    /// edges meeting at `v_j` an edge whose orientation at `e_ij` is
    /// `τ(v_j, e_ij)`.
    pub fn line_graph(&self) -> Result<OrientedSignedGraph, SignedGraphError> {
        if let Some(why) = self.simplicity_violation() {
            return Err(SignedGraphError::NotSimple(why));
        }
        let vertices = self.edge_labels();
        let mut used: HashSet<String> = vertices.iter().cloned().collect();
        let mut edges = Vec::new();
        for (i, first) in self.edges.iter().enumerate() {
            for (j, second) in self.edges.iter().enumerate().skip(i + 1) {
                // a simple graph shares at most one vertex between two edges
                let shared = first
                    .ends
                    .iter()
                    .find_map(|a| second.ends.iter().find(|b| b.vertex == a.vertex).map(|b| (a, b)));
                let Some((at_first, at_second)) = shared else {
                    continue;
                };
                let label = fresh_label(&mut used, &format!("{}~{}", first.label, second.label));
                let ends = [
                    Endpoint {
                        vertex: i,
                        tau: at_first.tau,
                    },
                    Endpoint {
                        vertex: j,
                        tau: at_second.tau,
                    },
                ];
                edges.push(SignedEdge {
                    label,
                    ends,
                    sign: -(at_first.tau * at_second.tau),
                });
            }
        }
        Ok(OrientedSignedGraph { vertices, edges })
    }
}

fn fresh_label(used: &mut HashSet<String>, base: &str) -> String {
    let mut label = base.to_owned();
    let mut suffix = 2;
    while used.contains(&label) {
        label = format!("{base}#{suffix}");
        suffix += 1;
    }
    used.insert(label.clone());
    label
}

/// A failed matrix identity: the two sides that should have been equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure {
    pub identity: &'static str,
    pub left: LabeledMatrix,
    pub right: LabeledMatrix,
}

/// Checks `H Hᵀ = D − A = L` and `Hᵀ H = 2I − A_Λ` for a simple oriented
/// signed graph. An empty list means both identities hold.
pub fn signed_graph_identities(s: &OrientedSignedGraph) -> Result<Vec<IdentityFailure>, SignedGraphError> {
    let line = s.line_graph()?;
    let g = s.to_hypergraph();
    let h = incidence_matrix(&g);
    let ht = h.transpose();
    let mut failures = Vec::new();

    let hht = h.checked_mul(&ht).expect("small entries");
    let laplacian = degree_matrix(&g)
        .checked_sub(&adjacency_matrix(&g))
        .expect("small entries");
    if hht != laplacian {
        failures.push(IdentityFailure {
            identity: "H Hᵀ = D − A",
            left: hht,
            right: laplacian,
        });
    }

    let hth = ht.checked_mul(&h).expect("small entries");
    let rhs = LabeledMatrix::identity(s.edge_labels())
        .checked_scale(2)
        .and_then(|two| two.checked_sub(&adjacency_matrix(&line.to_hypergraph())))
        .expect("small entries");
    if hth != rhs {
        failures.push(IdentityFailure {
            identity: "Hᵀ H = 2I − A_Λ",
            left: hth,
            right: rhs,
        });
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::HypergraphBuilder;
    use crate::sign::Sign::{Minus, Plus};

    fn s(x: &str) -> String {
        x.to_owned()
    }

    /// v1 −e1− v2 −e2− v3 with τ(v1,e1)=+1, τ(v2,e1)=−1, τ(v2,e2)=+1, τ(v3,e2)=−1.
    fn path() -> OrientedSignedGraph {
        OrientedSignedGraph::from_orientations(
            vec![s("v1"), s("v2"), s("v3")],
            vec![
                (s("e1"), (s("v1"), Plus), (s("v2"), Minus)),
                (s("e2"), (s("v2"), Plus), (s("v3"), Minus)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn edge_signs_from_hypergraph() {
        let g = HypergraphBuilder::new()
            .vertices(["v1", "v2"])
            .edge("e1")
            .incidence("v1", "e1", Plus)
            .incidence("v2", "e1", Plus)
            .build()
            .unwrap();
        let sg = OrientedSignedGraph::from_hypergraph(&g).unwrap();
        assert_eq!(sg.signature("e1"), Some(Minus));
        assert_eq!(sg.tau("v2", "e1"), Some(Plus));

        let g = HypergraphBuilder::new()
            .vertices(["v1", "v2"])
            .edge("e1")
            .incidence("v1", "e1", Plus)
            .incidence("v2", "e1", Minus)
            .build()
            .unwrap();
        assert_eq!(OrientedSignedGraph::from_hypergraph(&g).unwrap().signature("e1"), Some(Plus));
    }

    #[test]
    fn three_uniform_is_rejected() {
        let g = HypergraphBuilder::new()
            .vertices(["v1", "v2", "v3"])
            .edge("e1")
            .incidence("v1", "e1", Plus)
            .incidence("v2", "e1", Plus)
            .incidence("v3", "e1", Plus)
            .build()
            .unwrap();
        assert_eq!(
            OrientedSignedGraph::from_hypergraph(&g),
            Err(SignedGraphError::NotTwoUniform {
                edge: s("e1"),
                size: 3
            })
        );
    }

    #[test]
    fn to_hypergraph_orientations_and_loops() {
        let sg = OrientedSignedGraph::from_orientations(
            vec![s("v"), s("w")],
            vec![(s("e"), (s("v"), Plus), (s("w"), Minus))],
        )
        .unwrap();
        assert_eq!(sg.signature("e"), Some(Plus));
        let g = sg.to_hypergraph();
        assert_eq!(
            g.incidence_specs(),
            vec![IncidenceSpec::new("v", "e", 1, Plus), IncidenceSpec::new("w", "e", 1, Minus)]
        );

        let looped = OrientedSignedGraph::from_orientations(
            vec![s("v")],
            vec![(s("l"), (s("v"), Plus), (s("v"), Minus))],
        )
        .unwrap();
        let g = looped.to_hypergraph();
        assert!(!g.is_simple());
        assert_eq!(
            g.incidence_specs(),
            vec![IncidenceSpec::new("v", "l", 1, Plus), IncidenceSpec::new("v", "l", 2, Minus)]
        );
        assert_eq!(OrientedSignedGraph::from_hypergraph(&g).unwrap(), looped);
        assert!(matches!(looped.line_graph(), Err(SignedGraphError::NotSimple(_))));
    }

    #[test]
    fn signature_must_match_orientation() {
        let err = OrientedSignedGraph::new(
            vec![s("v"), s("w")],
            vec![(s("e"), (s("v"), Plus), (s("w"), Plus), Plus)],
        );
        assert!(matches!(err, Err(SignedGraphError::SignatureMismatch { .. })));
    }

    #[test]
    fn path_line_graph() {
        let line = path().line_graph().unwrap();
        assert_eq!(line.vertices(), &[s("e1"), s("e2")]);
        assert_eq!(line.edges().len(), 1);
        assert_eq!(line.edges()[0].sign, Plus);
        assert_eq!(line.tau("e1", "e1~e2"), Some(Minus));
        assert_eq!(line.tau("e2", "e1~e2"), Some(Plus));
        assert_eq!(
            adjacency_matrix(&line.to_hypergraph()),
            adjacency_matrix(&path().to_hypergraph().incidence_dual())
        );
    }

    #[test]
    fn matching_has_edgeless_line_graph() {
        let sg = OrientedSignedGraph::from_orientations(
            vec![s("a"), s("b"), s("c"), s("d")],
            vec![
                (s("x"), (s("a"), Plus), (s("b"), Plus)),
                (s("y"), (s("c"), Minus), (s("d"), Plus)),
            ],
        )
        .unwrap();
        let line = sg.line_graph().unwrap();
        assert_eq!(line.vertices().len(), 2);
        assert!(line.edges().is_empty());
    }

    #[test]
    fn parallel_edges_are_unsupported() {
        let sg = OrientedSignedGraph::from_orientations(
            vec![s("a"), s("b")],
            vec![
                (s("x"), (s("a"), Plus), (s("b"), Plus)),
                (s("y"), (s("b"), Minus), (s("a"), Plus)),
            ],
        )
        .unwrap();
        assert!(!sg.is_simple());
        assert!(matches!(sg.line_graph(), Err(SignedGraphError::NotSimple(_))));
    }

    #[test]
    fn line_graph_labels_avoid_collisions() {
        let sg = OrientedSignedGraph::from_orientations(
            vec![s("a"), s("b"), s("c")],
            vec![
                (s("x"), (s("a"), Plus), (s("b"), Plus)),
                (s("y"), (s("b"), Minus), (s("c"), Plus)),
                (s("x~y"), (s("a"), Plus), (s("c"), Plus)),
            ],
        )
        .unwrap();
        let line = sg.line_graph().unwrap();
        let labels: Vec<&str> = line.edges().iter().map(|e| e.label.as_str()).collect();
        assert_eq!(labels, vec!["x~y#2", "x~x~y", "y~x~y"]);
    }

    #[test]
    fn identities_on_small_graphs() {
        assert!(signed_graph_identities(&path()).unwrap().is_empty());

        let single = OrientedSignedGraph::from_orientations(
            vec![s("v"), s("w")],
            vec![(s("e"), (s("v"), Plus), (s("w"), Plus))],
        )
        .unwrap();
        assert!(signed_graph_identities(&single).unwrap().is_empty());
        let h = incidence_matrix(&single.to_hypergraph());
        assert_eq!(h.transpose().checked_mul(&h).unwrap().to_rows(), vec![vec![2]]);

        let empty = OrientedSignedGraph::new(vec![], vec![]).unwrap();
        assert!(signed_graph_identities(&empty).unwrap().is_empty());
    }
}
