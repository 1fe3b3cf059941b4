//! Small named graphs used as forbidden patterns in tests and verification runs.

use crate::hypergraph::{Hypergraph, Pattern};

/// Complete graph K_n as a 2-uniform pattern.
pub fn complete_graph(n: usize) -> Pattern {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push(vec![u, v]);
        }
    }
    Hypergraph::new(2, n, edges).expect("complete graph is well formed")
}

/// Cycle C_n (n >= 3).
pub fn cycle(n: usize) -> Pattern {
    assert!(n >= 3);
    let edges = (0..n).map(|i| vec![i, (i + 1) % n]).collect::<Vec<_>>();
    Hypergraph::new(2, n, edges).expect("cycle is well formed")
}

/// Path on n vertices (n - 1 edges).
pub fn path(n: usize) -> Pattern {
    assert!(n >= 2);
    let edges = (0..n - 1).map(|i| vec![i, i + 1]).collect::<Vec<_>>();
    Hypergraph::new(2, n, edges).expect("path is well formed")
}

/// Star K_{1,t}: center 0 joined to t leaves.
pub fn star(t: usize) -> Pattern {
    let edges = (1..=t).map(|i| vec![0, i]).collect::<Vec<_>>();
    Hypergraph::new(2, t + 1, edges).expect("star is well formed")
}

/// t vertex-disjoint copies of `g`.
pub fn disjoint_copies(g: &Pattern, t: usize) -> Pattern {
    let mut out = Hypergraph::empty(g.k(), 0);
    for _ in 0..t {
        out = out.disjoint_union(g).expect("same uniformity");
    }
    out
}
