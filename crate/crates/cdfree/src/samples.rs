//! Small named graphs used throughout tests and examples.

use crate::graph::Graph;

/// K_{1,3}: center 0, leaves 1..=3.
pub fn claw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
}

/// K4 minus the edge 1-3: chord 0-2, degree-2 vertices 1 and 3.
pub fn diamond() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap()
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Cycle 0-1-...-(n-1)-0.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Path 0-1-...-(n-1).
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|u| (u, u + 1)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Two triangles sharing vertex 0: 0-1-2 and 0-3-4.
pub fn bowtie() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
}

/// The Petersen graph: outer cycle 0..5, inner pentagram 5..10.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Disjoint union placing `b` after `a` with shifted ids.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.vertex_count();
    let mut edges: Vec<_> = a.edges().map(|e| e.endpoints()).collect();
    edges.extend(b.edges().map(|e| {
        let (u, v) = e.endpoints();
        (u + shift, v + shift)
    }));
    Graph::from_edges(shift + b.vertex_count(), &edges).unwrap()
}
