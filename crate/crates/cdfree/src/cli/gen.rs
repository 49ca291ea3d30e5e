//! Deterministic instance generators.
//!
//! All models draw from a ChaCha stream seeded with the given value, so a
//! fixed (model, params, seed) triple always yields the same graph.

use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::samples;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenModel {
    /// Uniform m-edge graph on n vertices via a seeded shuffle of all
    /// vertex pairs.
    Gnm { n: usize, m: usize },
    /// Line graph of a random bipartite graph with the given part sizes
    /// and base edge count. Bipartite bases are triangle-free, so the line
    /// graph is {claw, diamond}-free; base edges isolated in the line
    /// graph are dropped.
    LineOfBipartite {
        left: usize,
        right: usize,
        base_edges: usize,
    },
    /// A cd-free base plus `planted` disjoint forbidden subgraphs
    /// (alternating diamonds and claws), each fixable by one deletion.
    Planted {
        left: usize,
        right: usize,
        base_edges: usize,
        planted: usize,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("requested {m} edges but a graph on {n} vertices has at most {max}")]
    TooManyEdges { n: usize, m: usize, max: usize },
    #[error("requested {m} base edges but the bipartite graph has at most {max}")]
    TooManyBaseEdges { m: usize, max: usize },
}

pub fn gen_graph(model: &GenModel, seed: u64) -> Result<Graph, GenError> {
    match *model {
        GenModel::Gnm { n, m } => gnm(n, m, seed),
        GenModel::LineOfBipartite {
            left,
            right,
            base_edges,
        } => line_of_bipartite(left, right, base_edges, seed),
        GenModel::Planted {
            left,
            right,
            base_edges,
            planted,
        } => {
            let mut g = line_of_bipartite(left, right, base_edges, seed)?;
            for i in 0..planted {
                let gadget = if i % 2 == 0 {
                    samples::diamond()
                } else {
                    samples::claw()
                };
                g = samples::disjoint_union(&g, &gadget);
            }
            Ok(g)
        }
    }
}

fn gnm(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(GenError::TooManyEdges { n, m, max });
    }
    let mut pairs: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    pairs.truncate(m);
    Ok(Graph::from_edges(n, &pairs).expect("distinct pairs"))
}

fn line_of_bipartite(
    left: usize,
    right: usize,
    base_edges: usize,
    seed: u64,
) -> Result<Graph, GenError> {
    let max = left * right;
    if base_edges > max {
        return Err(GenError::TooManyBaseEdges { m: base_edges, max });
    }
    let mut pairs: Vec<(usize, usize)> = (0..left)
        .flat_map(|i| (0..right).map(move |j| (i, j)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    pairs.truncate(base_edges);
    pairs.sort_unstable();

    // Line graph: one vertex per base edge, adjacent when the base edges
    // share an endpoint.
    let mut line_edges: Vec<(usize, usize)> = Vec::new();
    for (a, &(i1, j1)) in pairs.iter().enumerate() {
        for (offset, &(i2, j2)) in pairs[a + 1..].iter().enumerate() {
            let b = a + 1 + offset;
            if i1 == i2 || j1 == j2 {
                line_edges.push((a, b));
            }
        }
    }
    let g = Graph::from_edges(pairs.len(), &line_edges).expect("valid line graph");

    // Base edges touching no other base edge become isolated vertices;
    // drop them so the bag decomposition applies directly.
    let keep: std::collections::BTreeSet<VertexId> =
        g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let (cleaned, _) = g.induced_subgraph(&keep).expect("vertices of g");
    Ok(cleaned)
}
