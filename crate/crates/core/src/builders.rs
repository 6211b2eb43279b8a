//! Incidence, adjacency, degree, Laplacian and switching matrices.
//!
//! Rows and columns follow the declared vertex and edge order. All entries
//! are bounded in absolute value by the square of the incidence count, so
//! none of these constructors can overflow.

use crate::hypergraph::{HypergraphError, OrientedHypergraph, SwitchingFunction};
use crate::matrix::LabeledMatrix;

/// `H_G`: entry `(i, j)` is the sum of the signs of all incidences of `(v_i, e_j)`.
pub fn incidence_matrix(g: &OrientedHypergraph) -> LabeledMatrix {
    let mut h = LabeledMatrix::zeros(g.vertices().to_vec(), g.edges().to_vec());
    for inc in g.incidences() {
        let cur = h.get(inc.vertex, inc.edge);
        h.set(inc.vertex, inc.edge, cur + inc.sign.to_i64());
    }
    h
}

/// `A_G`: the signed count of adjacencies `(v_i, k1; v_j, k2; e)` over ordered
/// pairs of distinct incidences sharing an edge, each contributing
/// `-σ(v_i, e, k1) σ(v_j, e, k2)`.
///
/// For simple `G` this is `Σ_e sgn_e(v_i, v_j)` with a zero diagonal. For
/// non-simple `G` the repeated incidences of a vertex produce self-adjacencies
/// on the diagonal, which keeps `a_ij = w±(v_i, v_j; 1)` and `L = H Hᵀ` exact.
pub fn adjacency_matrix(g: &OrientedHypergraph) -> LabeledMatrix {
    let mut a = LabeledMatrix::zeros(g.vertices().to_vec(), g.vertices().to_vec());
    for members in incidences_by_edge(g) {
        for (p, first) in members.iter().enumerate() {
            for (q, second) in members.iter().enumerate() {
                if p == q {
                    continue;
                }
                let sign = -(first.sign * second.sign);
                let cur = a.get(first.vertex, second.vertex);
                a.set(first.vertex, second.vertex, cur + sign.to_i64());
            }
        }
    }
    a
}

/// `D_G = diag(deg(v_1), …, deg(v_n))`.
pub fn degree_matrix(g: &OrientedHypergraph) -> LabeledMatrix {
    let degrees: Vec<i64> = g.degrees().into_iter().map(|d| d as i64).collect();
    LabeledMatrix::diagonal(g.vertices().to_vec(), &degrees)
}

/// `L_G = D_G − A_G`.
pub fn laplacian(g: &OrientedHypergraph) -> LabeledMatrix {
    degree_matrix(g)
        .checked_sub(&adjacency_matrix(g))
        .expect("laplacian entries are bounded by the incidence count")
}

/// `L_{G*}`, the Laplacian of the incidence dual; rows and columns are edges of `G`.
pub fn dual_laplacian(g: &OrientedHypergraph) -> LabeledMatrix {
    laplacian(&g.incidence_dual())
}

/// `D(θ) = diag(θ(v_i))` in the given vertex order.
pub fn switching_matrix<S: AsRef<str>>(
    theta: &SwitchingFunction,
    vertex_order: &[S],
) -> Result<LabeledMatrix, HypergraphError> {
    let values: Vec<i64> = theta
        .values_for(vertex_order)?
        .into_iter()
        .map(|s| s.to_i64())
        .collect();
    let labels = vertex_order.iter().map(|v| v.as_ref().to_owned()).collect();
    Ok(LabeledMatrix::diagonal(labels, &values))
}

fn incidences_by_edge(g: &OrientedHypergraph) -> Vec<Vec<crate::hypergraph::Incidence>> {
    let mut groups = vec![Vec::new(); g.num_edges()];
    for inc in g.incidences() {
        groups[inc.edge].push(*inc);
    }
    groups
}
