//! The oriented hypergraph model: vertices, edges and signed incidences.
//!
//! An incidence `(v, e, k)` records the `k`-th meeting of vertex `v` with edge
//! `e`; the multiplicity of the pair is the number of incidences it owns, so
//! there is no separate multiplicity table. Incidences are kept sorted by
//! `(vertex index, edge index, k)`, which makes structural equality coincide
//! with equality of the underlying quadruple `(V, E, I, σ)`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::sign::Sign;

/// A labeled incidence as it appears in instance files and builders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncidenceSpec {
    pub vertex: String,
    pub edge: String,
    /// Multiplicity index `k >= 1`.
    pub mult: u32,
    pub sign: Sign,
}

impl IncidenceSpec {
    pub fn new(vertex: impl Into<String>, edge: impl Into<String>, mult: u32, sign: Sign) -> Self {
        IncidenceSpec {
            vertex: vertex.into(),
            edge: edge.into(),
            mult,
            sign,
        }
    }
}

/// A resolved incidence; `vertex` and `edge` index into the owning hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Incidence {
    pub vertex: usize,
    pub edge: usize,
    pub mult: u32,
    pub sign: Sign,
}

/// One broken invariant found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateVertex(String),
    DuplicateEdge(String),
    /// A label declared both as a vertex and as an edge.
    SharedLabel(String),
    UnknownVertex { incidence: usize, label: String },
    UnknownEdge { incidence: usize, label: String },
    ZeroMultiplicity { incidence: usize, vertex: String, edge: String },
    DuplicateIncidence { vertex: String, edge: String, mult: u32 },
    MultiplicityGap { vertex: String, edge: String, missing: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateVertex(v) => write!(f, "vertex {v:?} is declared more than once"),
            Violation::DuplicateEdge(e) => write!(f, "edge {e:?} is declared more than once"),
            Violation::SharedLabel(l) => write!(f, "label {l:?} is both a vertex and an edge"),
            Violation::UnknownVertex { incidence, label } => {
                write!(f, "incidence #{incidence} references undeclared vertex {label:?}")
            }
            Violation::UnknownEdge { incidence, label } => {
                write!(f, "incidence #{incidence} references undeclared edge {label:?}")
            }
            Violation::ZeroMultiplicity {
                incidence,
                vertex,
                edge,
            } => write!(
                f,
                "incidence #{incidence} ({vertex:?}, {edge:?}) has multiplicity index 0"
            ),
            Violation::DuplicateIncidence { vertex, edge, mult } => {
                write!(f, "duplicate incidence ({vertex:?}, {edge:?}, {mult})")
            }
            Violation::MultiplicityGap {
                vertex,
                edge,
                missing,
            } => write!(
                f,
                "multiplicity gap for ({vertex:?}, {edge:?}): index {missing} is missing"
            ),
        }
    }
}

/// The outcome of [`validate`]; empty iff every invariant holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("invalid oriented hypergraph: {0}")]
    Invalid(ValidationReport),
    #[error("switching function has no value for vertex {0:?}")]
    MissingSwitchValue(String),
    #[error("switching function assigns a value to unknown vertex {0:?}")]
    UnknownSwitchVertex(String),
}

/// Checks every structural invariant of an oriented hypergraph and lists the
/// violations with the labels involved.
pub fn validate(vertices: &[String], edges: &[String], incidences: &[IncidenceSpec]) -> ValidationReport {
    let mut violations = Vec::new();

    let mut seen = HashSet::new();
    for v in vertices {
        if !seen.insert(v.as_str()) {
            violations.push(Violation::DuplicateVertex(v.clone()));
        }
    }
    let vertex_set = seen;
    let mut edge_set = HashSet::new();
    for e in edges {
        if !edge_set.insert(e.as_str()) {
            violations.push(Violation::DuplicateEdge(e.clone()));
        }
    }
    let mut shared: Vec<&str> = vertex_set.intersection(&edge_set).copied().collect();
    shared.sort_unstable();
    violations.extend(shared.into_iter().map(|l| Violation::SharedLabel(l.to_owned())));

    // (vertex, edge) -> multiplicity indices in order of appearance
    let mut by_pair: BTreeMap<(&str, &str), Vec<u32>> = BTreeMap::new();
    for (idx, inc) in incidences.iter().enumerate() {
        let mut resolvable = true;
        if !vertex_set.contains(inc.vertex.as_str()) {
            violations.push(Violation::UnknownVertex {
                incidence: idx,
                label: inc.vertex.clone(),
            });
            resolvable = false;
        }
        if !edge_set.contains(inc.edge.as_str()) {
            violations.push(Violation::UnknownEdge {
                incidence: idx,
                label: inc.edge.clone(),
            });
            resolvable = false;
        }
        if inc.mult == 0 {
            violations.push(Violation::ZeroMultiplicity {
                incidence: idx,
                vertex: inc.vertex.clone(),
                edge: inc.edge.clone(),
            });
            resolvable = false;
        }
        if resolvable {
            by_pair
                .entry((inc.vertex.as_str(), inc.edge.as_str()))
                .or_default()
                .push(inc.mult);
        }
    }

    for ((v, e), mults) in by_pair {
        let mut present = BTreeSet::new();
        for &k in &mults {
            if !present.insert(k) {
                violations.push(Violation::DuplicateIncidence {
                    vertex: v.to_owned(),
                    edge: e.to_owned(),
                    mult: k,
                });
            }
        }
        let max = present.iter().next_back().copied().unwrap_or(0);
        for missing in (1..=max).filter(|k| !present.contains(k)) {
            violations.push(Violation::MultiplicityGap {
                vertex: v.to_owned(),
                edge: e.to_owned(),
                missing,
            });
        }
    }

    ValidationReport { violations }
}

/// A total map from vertex labels to `±1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SwitchingFunction {
    assignment: BTreeMap<String, Sign>,
}

impl SwitchingFunction {
    pub fn new(assignment: BTreeMap<String, Sign>) -> Self {
        SwitchingFunction { assignment }
    }

    /// The constant function `θ ≡ sign` on the given labels.
    pub fn constant<S: AsRef<str>>(vertices: &[S], sign: Sign) -> Self {
        SwitchingFunction {
            assignment: vertices.iter().map(|v| (v.as_ref().to_owned(), sign)).collect(),
        }
    }

    pub fn get(&self, vertex: &str) -> Option<Sign> {
        self.assignment.get(vertex).copied()
    }

    pub fn set(&mut self, vertex: impl Into<String>, sign: Sign) {
        self.assignment.insert(vertex.into(), sign);
    }

    pub fn assignment(&self) -> &BTreeMap<String, Sign> {
        &self.assignment
    }

    /// Resolves the function against an ordered vertex list.
    pub fn values_for<S: AsRef<str>>(&self, vertices: &[S]) -> Result<Vec<Sign>, HypergraphError> {
        vertices
            .iter()
            .map(|v| {
                self.get(v.as_ref())
                    .ok_or_else(|| HypergraphError::MissingSwitchValue(v.as_ref().to_owned()))
            })
            .collect()
    }
}

impl FromIterator<(String, Sign)> for SwitchingFunction {
    fn from_iter<T: IntoIterator<Item = (String, Sign)>>(iter: T) -> Self {
        SwitchingFunction {
            assignment: iter.into_iter().collect(),
        }
    }
}

/// An oriented hypergraph `G = (V, E, I, σ)`. Always valid once constructed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedHypergraph {
    vertices: Vec<String>,
    edges: Vec<String>,
    incidences: Vec<Incidence>,
    vertex_lookup: HashMap<String, usize>,
    edge_lookup: HashMap<String, usize>,
}

impl OrientedHypergraph {
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<String>,
        incidences: Vec<IncidenceSpec>,
    ) -> Result<Self, HypergraphError> {
        let report = validate(&vertices, &edges, &incidences);
        if !report.is_valid() {
            return Err(HypergraphError::Invalid(report));
        }
        let vertex_lookup = index_of(&vertices);
        let edge_lookup = index_of(&edges);
        let incidences = incidences
            .iter()
            .map(|inc| Incidence {
                vertex: vertex_lookup[&inc.vertex],
                edge: edge_lookup[&inc.edge],
                mult: inc.mult,
                sign: inc.sign,
            })
            .collect();
        Ok(Self::from_resolved(vertices, edges, incidences, vertex_lookup, edge_lookup))
    }

    fn from_resolved(
        vertices: Vec<String>,
        edges: Vec<String>,
        mut incidences: Vec<Incidence>,
        vertex_lookup: HashMap<String, usize>,
        edge_lookup: HashMap<String, usize>,
    ) -> Self {
        incidences.sort_unstable_by_key(|i| (i.vertex, i.edge, i.mult));
        OrientedHypergraph {
            vertices,
            edges,
            incidences,
            vertex_lookup,
            edge_lookup,
        }
    }

    /// The hypergraph with no vertices and no edges.
    pub fn empty() -> Self {
        Self::from_resolved(Vec::new(), Vec::new(), Vec::new(), HashMap::new(), HashMap::new())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[String] {
        &self.edges
    }

    /// Incidences in canonical `(vertex, edge, k)` order.
    pub fn incidences(&self) -> &[Incidence] {
        &self.incidences
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertex_lookup.get(label).copied()
    }

    pub fn edge_index(&self, label: &str) -> Option<usize> {
        self.edge_lookup.get(label).copied()
    }

    /// Position of incidence `(v, e, k)` within [`incidences`](Self::incidences).
    pub fn incidence_position(&self, vertex: &str, edge: &str, mult: u32) -> Option<usize> {
        let key = (self.vertex_index(vertex)?, self.edge_index(edge)?, mult);
        self.incidences
            .binary_search_by_key(&key, |i| (i.vertex, i.edge, i.mult))
            .ok()
    }

    /// Labeled view of the incidences in canonical order.
    pub fn incidence_specs(&self) -> Vec<IncidenceSpec> {
        self.incidences
            .iter()
            .map(|i| IncidenceSpec {
                vertex: self.vertices[i.vertex].clone(),
                edge: self.edges[i.edge].clone(),
                mult: i.mult,
                sign: i.sign,
            })
            .collect()
    }

    /// Always empty: construction already rejected every violation.
    pub fn validate(&self) -> ValidationReport {
        validate(&self.vertices, &self.edges, &self.incidence_specs())
    }

    /// Number of incidences containing each vertex, in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for inc in &self.incidences {
            deg[inc.vertex] += 1;
        }
        deg
    }

    /// Number of incidences containing each edge, in edge order.
    pub fn edge_sizes(&self) -> Vec<usize> {
        let mut size = vec![0; self.edges.len()];
        for inc in &self.incidences {
            size[inc.edge] += 1;
        }
        size
    }

    /// `ι(v, e)` for vertex index `v` and edge index `e`.
    pub fn multiplicity(&self, vertex: usize, edge: usize) -> usize {
        self.incidences
            .iter()
            .filter(|i| i.vertex == vertex && i.edge == edge)
            .count()
    }

    pub fn is_simple(&self) -> bool {
        self.incidences.iter().all(|i| i.mult == 1)
    }

    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.edge_sizes().into_iter().all(|s| s == k)
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.degrees().into_iter().all(|d| d == k)
    }

    /// The incidence dual `G*`: vertices and edges trade places, every
    /// incidence keeps its multiplicity index and sign.
    pub fn incidence_dual(&self) -> OrientedHypergraph {
        let incidences = self
            .incidences
            .iter()
            .map(|i| Incidence {
                vertex: i.edge,
                edge: i.vertex,
                mult: i.mult,
                sign: i.sign,
            })
            .collect();
        Self::from_resolved(
            self.edges.clone(),
            self.vertices.clone(),
            incidences,
            self.edge_lookup.clone(),
            self.vertex_lookup.clone(),
        )
    }

    /// Vertex switching: every incidence sign is multiplied by `θ` of its vertex.
    pub fn switch(&self, theta: &SwitchingFunction) -> Result<OrientedHypergraph, HypergraphError> {
        if let Some(extra) = theta
            .assignment()
            .keys()
            .find(|v| !self.vertex_lookup.contains_key(v.as_str()))
        {
            return Err(HypergraphError::UnknownSwitchVertex(extra.clone()));
        }
        let values = theta.values_for(&self.vertices)?;
        let mut switched = self.clone();
        for inc in &mut switched.incidences {
            inc.sign = values[inc.vertex] * inc.sign;
        }
        Ok(switched)
    }

    /// Returns a copy with the sign of every incidence replaced by `signs[position]`.
    pub fn with_signs(&self, signs: &[Sign]) -> OrientedHypergraph {
        assert_eq!(signs.len(), self.incidences.len(), "one sign per incidence");
        let mut g = self.clone();
        for (inc, &s) in g.incidences.iter_mut().zip(signs) {
            inc.sign = s;
        }
        g
    }

    /// A short human-readable description used in reports.
    pub fn summary(&self) -> String {
        format!(
            "n={} m={} incidences={} {}",
            self.vertices.len(),
            self.edges.len(),
            self.incidences.len(),
            if self.is_simple() { "simple" } else { "non-simple" }
        )
    }
}

fn index_of(labels: &[String]) -> HashMap<String, usize> {
    labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect()
}

/// Incremental construction; `incidence` assigns the next free multiplicity
/// index for the pair.
#[derive(Debug, Clone, Default)]
pub struct HypergraphBuilder {
    vertices: Vec<String>,
    edges: Vec<String>,
    incidences: Vec<IncidenceSpec>,
}

impl HypergraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, label: impl Into<String>) -> Self {
        self.vertices.push(label.into());
        self
    }

    pub fn vertices<I, S>(mut self, labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.vertices.extend(labels.into_iter().map(Into::into));
        self
    }

    pub fn edge(mut self, label: impl Into<String>) -> Self {
        self.edges.push(label.into());
        self
    }

    pub fn edges<I, S>(mut self, labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.edges.extend(labels.into_iter().map(Into::into));
        self
    }

    pub fn incidence(mut self, vertex: &str, edge: &str, sign: Sign) -> Self {
        let mult = self
            .incidences
            .iter()
            .filter(|i| i.vertex == vertex && i.edge == edge)
            .count() as u32
            + 1;
        self.incidences.push(IncidenceSpec::new(vertex, edge, mult, sign));
        self
    }

    pub fn build(self) -> Result<OrientedHypergraph, HypergraphError> {
        OrientedHypergraph::new(self.vertices, self.edges, self.incidences)
    }
}
