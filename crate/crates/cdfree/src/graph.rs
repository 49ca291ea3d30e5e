//! Simple undirected graphs with dense vertex ids and value semantics.
//!
//! Every edit returns a new graph; search code relies on this for cheap
//! rollback. Vertex ids are dense in `0..vertex_count()` for every graph
//! produced by this module.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Dense vertex index.
pub type VertexId = usize;

/// An unordered pair of distinct vertices. `(u, v)` and `(v, u)` compare
/// and hash equal; the stored order is always `min, max`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Panics on a loop; loops are not representable.
    pub fn new(a: VertexId, b: VertexId) -> Self {
        assert!(a != b, "loop edge ({a},{a})");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn touches(self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// A set of edges; ordered so iteration is lexicographic and deterministic.
pub type EdgeSet = BTreeSet<Edge>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    UnknownVertex(VertexId, usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(VertexId),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {0} not present")]
    MissingEdge(Edge),
    #[error("edge {0} already present")]
    EdgeAlreadyPresent(Edge),
}

/// Simple undirected graph: per-vertex sorted neighbor lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(a, b) in edges {
            g.insert_edge(a, b)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v >= self.adj.len() {
            Err(GraphError::UnknownVertex(v, self.adj.len()))
        } else {
            Ok(())
        }
    }

    fn insert_edge(&mut self, a: VertexId, b: VertexId) -> Result<(), GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::LoopEdge(a));
        }
        if self.has_edge(a, b) {
            return Err(GraphError::DuplicateEdge(Edge::new(a, b)));
        }
        let pos = self.adj[a].binary_search(&b).unwrap_err();
        self.adj[a].insert(pos, b);
        let pos = self.adj[b].binary_search(&a).unwrap_err();
        self.adj[b].insert(pos, a);
        self.edge_count += 1;
        Ok(())
    }

    fn remove_edge(&mut self, e: Edge) -> Result<(), GraphError> {
        let (a, b) = e.endpoints();
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let pa = self.adj[a]
            .binary_search(&b)
            .map_err(|_| GraphError::MissingEdge(e))?;
        self.adj[a].remove(pa);
        let pb = self.adj[b].binary_search(&a).expect("adjacency symmetric");
        self.adj[b].remove(pb);
        self.edge_count -= 1;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        0..self.adj.len()
    }

    /// Neighbors of `v`, sorted ascending. Panics on out-of-range ids.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a != b && a < self.adj.len() && self.adj[a].binary_search(&b).is_ok()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| {
            ns.iter()
                .filter(move |&&v| v > u)
                .map(move |&v| Edge::new(u, v))
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        self.vertices()
            .filter(|&v| self.adj[v].is_empty())
            .collect()
    }

    /// N(u) ∩ N(v), sorted ascending. Requires `u != v`.
    pub fn common_neighbors(&self, u: VertexId, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        Ok(intersect_sorted(&self.adj[u], &self.adj[v]))
    }

    /// True iff every two vertices in `s` are adjacent; vacuously true for
    /// sets of size at most one.
    pub fn is_clique<'a, I>(&self, s: I) -> Result<bool, GraphError>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let vs: Vec<VertexId> = s.into_iter().copied().collect();
        for &v in &vs {
            self.check_vertex(v)?;
        }
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if a != b && !self.has_edge(a, b) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Subgraph induced by `s`, plus the map from new ids to old ids.
    /// New ids follow the ascending order of the old ones.
    pub fn induced_subgraph(
        &self,
        s: &BTreeSet<VertexId>,
    ) -> Result<(Graph, Vec<VertexId>), GraphError> {
        for &v in s {
            self.check_vertex(v)?;
        }
        let map: Vec<VertexId> = s.iter().copied().collect();
        let mut back = vec![usize::MAX; self.adj.len()];
        for (new, &old) in map.iter().enumerate() {
            back[old] = new;
        }
        let mut g = Graph::new(map.len());
        for (new_u, &old_u) in map.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                if old_v > old_u && back[old_v] != usize::MAX {
                    g.insert_edge(new_u, back[old_v]).expect("fresh edge");
                }
            }
        }
        Ok((g, map))
    }

    /// Deletes exactly the edges in `f`; every edge must be present.
    pub fn delete_edges(&self, f: &EdgeSet) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &e in f {
            g.remove_edge(e)?;
        }
        Ok(g)
    }

    /// Adds the edges in `f`; none may already be present.
    pub fn add_edges(&self, f: &EdgeSet) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &e in f {
            let (a, b) = e.endpoints();
            match g.insert_edge(a, b) {
                Ok(()) => {}
                Err(GraphError::DuplicateEdge(e)) => return Err(GraphError::EdgeAlreadyPresent(e)),
                Err(other) => return Err(other),
            }
        }
        Ok(g)
    }

    /// Appends `count` fresh isolated vertices; their ids start at the old
    /// vertex count.
    pub fn add_vertices(&self, count: usize) -> Graph {
        let mut g = self.clone();
        g.adj.extend(std::iter::repeat_with(Vec::new).take(count));
        g
    }

    /// Structural self-check used by tests: sorted symmetric adjacency,
    /// no loops or duplicates, consistent edge count.
    pub fn validate(&self) -> Result<(), String> {
        let mut half_edges = 0;
        for (u, ns) in self.adj.iter().enumerate() {
            if !ns.windows(2).all(|w| w[0] < w[1]) {
                return Err(format!("adjacency of {u} not strictly sorted"));
            }
            for &v in ns {
                if v == u {
                    return Err(format!("loop at {u}"));
                }
                if v >= self.adj.len() {
                    return Err(format!("neighbor {v} of {u} out of range"));
                }
                if self.adj[v].binary_search(&u).is_err() {
                    return Err(format!("asymmetric edge ({u},{v})"));
                }
            }
            half_edges += ns.len();
        }
        if half_edges != 2 * self.edge_count {
            return Err(format!(
                "edge count {} does not match adjacency ({half_edges} half-edges)",
                self.edge_count
            ));
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.vertex_count(),
            self.edge_count(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

fn intersect_sorted(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Convenience constructor for edge sets from endpoint pairs.
pub fn edge_set(pairs: &[(VertexId, VertexId)]) -> EdgeSet {
    pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect()
}
