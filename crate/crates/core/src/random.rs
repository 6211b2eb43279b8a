//! Seeded random instances. Identical seeds and parameters always give
//! identical instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::hypergraph::{HypergraphBuilder, OrientedHypergraph, SwitchingFunction};
use crate::sign::Sign;
use crate::signed_graph::OrientedSignedGraph;

#[derive(Debug, Error, PartialEq)]
pub enum GeneratorError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomParams {
    pub n_vertices: usize,
    pub n_edges: usize,
    /// Edge sizes are drawn uniformly from `1..=max_edge_size`.
    pub max_edge_size: usize,
    pub simple: bool,
    /// For non-simple instances: probability that an incidence slot reuses a
    /// vertex already in the edge, creating a repeated incidence.
    pub non_simple_rate: f64,
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn vertex_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

fn edge_labels(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("e{i}")).collect()
}

pub fn random_instance(seed: u64, params: &RandomParams) -> Result<OrientedHypergraph, GeneratorError> {
    random_instance_with(&mut rng_from_seed(seed), params)
}

pub fn random_instance_with<R: Rng + ?Sized>(
    rng: &mut R,
    params: &RandomParams,
) -> Result<OrientedHypergraph, GeneratorError> {
    let &RandomParams {
        n_vertices,
        n_edges,
        max_edge_size,
        simple,
        non_simple_rate,
    } = params;
    if !(0.0..=1.0).contains(&non_simple_rate) {
        return Err(GeneratorError::Infeasible(format!(
            "non_simple_rate {non_simple_rate} is outside [0, 1]"
        )));
    }
    if n_edges > 0 {
        if max_edge_size == 0 {
            return Err(GeneratorError::Infeasible("max_edge_size must be positive".into()));
        }
        if n_vertices == 0 {
            return Err(GeneratorError::Infeasible("edges need at least one vertex".into()));
        }
        if simple && max_edge_size > n_vertices {
            return Err(GeneratorError::Infeasible(format!(
                "a simple edge of size {max_edge_size} needs at least {max_edge_size} vertices, got {n_vertices}"
            )));
        }
    }

    let vertices = vertex_labels(n_vertices);
    let edges = edge_labels(n_edges);
    let mut builder = HypergraphBuilder::new().vertices(vertices.clone()).edges(edges.clone());
    for edge in &edges {
        let size = rng.gen_range(1..=max_edge_size);
        let members = if simple {
            rand::seq::index::sample(rng, n_vertices, size).into_vec()
        } else {
            let mut members: Vec<usize> = Vec::with_capacity(size);
            for _ in 0..size {
                let fresh: Vec<usize> = (0..n_vertices).filter(|v| !members.contains(v)).collect();
                let reuse = !members.is_empty() && (fresh.is_empty() || rng.gen_bool(non_simple_rate));
                let v = if reuse {
                    *members.choose(rng).expect("non-empty")
                } else {
                    *fresh.choose(rng).expect("non-empty")
                };
                members.push(v);
            }
            members
        };
        for v in members {
            builder = builder.incidence(&vertices[v], edge, random_sign(rng));
        }
    }
    Ok(builder.build().expect("generated instances are valid"))
}

/// A simple `k`-uniform instance with uniformly random signs.
pub fn random_uniform_instance(
    seed: u64,
    n_vertices: usize,
    n_edges: usize,
    k: usize,
) -> Result<OrientedHypergraph, GeneratorError> {
    if n_edges > 0 && (k == 0 || k > n_vertices) {
        return Err(GeneratorError::Infeasible(format!(
            "a simple {k}-edge needs 1 <= k <= {n_vertices}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let vertices = vertex_labels(n_vertices);
    let edges = edge_labels(n_edges);
    let mut builder = HypergraphBuilder::new().vertices(vertices.clone()).edges(edges.clone());
    for edge in &edges {
        for v in rand::seq::index::sample(&mut rng, n_vertices, k) {
            builder = builder.incidence(&vertices[v], edge, random_sign(&mut rng));
        }
    }
    Ok(builder.build().expect("generated instances are valid"))
}

/// A simple oriented signed graph: distinct vertex pairs, random orientations.
pub fn random_signed_graph(seed: u64, n_vertices: usize, n_edges: usize) -> Result<OrientedSignedGraph, GeneratorError> {
    let mut pairs: Vec<(usize, usize)> = (0..n_vertices)
        .flat_map(|a| (a + 1..n_vertices).map(move |b| (a, b)))
        .collect();
    if n_edges > pairs.len() {
        return Err(GeneratorError::Infeasible(format!(
            "{n_vertices} vertices admit at most {} simple edges",
            pairs.len()
        )));
    }
    let mut rng = rng_from_seed(seed);
    pairs.shuffle(&mut rng);
    let vertices = vertex_labels(n_vertices);
    let edges = pairs
        .into_iter()
        .take(n_edges)
        .zip(edge_labels(n_edges))
        .map(|((a, b), label)| {
            (
                label,
                (vertices[a].clone(), random_sign(&mut rng)),
                (vertices[b].clone(), random_sign(&mut rng)),
            )
        })
        .collect();
    Ok(OrientedSignedGraph::from_orientations(vertices, edges).expect("generated graphs are valid"))
}

pub fn random_switching<R: Rng + ?Sized>(rng: &mut R, vertices: &[String]) -> SwitchingFunction {
    vertices.iter().map(|v| (v.clone(), random_sign(rng))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(simple: bool) -> RandomParams {
        RandomParams {
            n_vertices: 6,
            n_edges: 5,
            max_edge_size: 4,
            simple,
            non_simple_rate: 0.5,
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        assert_eq!(random_instance(7, &params(false)), random_instance(7, &params(false)));
        assert_eq!(random_signed_graph(3, 5, 4), random_signed_graph(3, 5, 4));
    }

    #[test]
    fn simple_flag_is_honored() {
        for seed in 0..50 {
            let g = random_instance(seed, &params(true)).unwrap();
            assert!(g.is_simple());
            assert!(g.validate().is_valid());
        }
        let non_simple = (0..50).filter(|&s| !random_instance(s, &params(false)).unwrap().is_simple()).count();
        assert!(non_simple > 0);
    }

    #[test]
    fn edgeless_and_infeasible() {
        let g = random_instance(
            1,
            &RandomParams {
                n_edges: 0,
                ..params(true)
            },
        )
        .unwrap();
        assert_eq!(g.num_edges(), 0);
        assert!(random_instance(
            1,
            &RandomParams {
                n_vertices: 2,
                ..params(true)
            }
        )
        .is_err());
        assert!(random_uniform_instance(1, 2, 1, 3).is_err());
        assert!(random_signed_graph(1, 3, 4).is_err());
    }

    #[test]
    fn uniform_instances() {
        for k in 2..=4 {
            let g = random_uniform_instance(k as u64, 6, 5, k).unwrap();
            assert!(g.is_simple() && g.is_k_uniform(k));
        }
        assert!(random_signed_graph(9, 6, 8).unwrap().is_simple());
    }
}
