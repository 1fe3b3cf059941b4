//! Uniform hypergraph data model: canonical edge storage, text format,
//! and small-instance canonicalization used for isomorphism rejection.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Default vertex-count cap for [`Hypergraph::canonical_form`].
pub const CANONICAL_CAP: usize = 10;

/// A simple k-uniform hypergraph on vertex ids `0..n`.
///
/// Edges are stored sorted within each edge and lexicographically across
/// edges; duplicates are collapsed on construction. Isolated vertices are
/// allowed (constructions leave some).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// An r-uniform forbidden pattern is structurally the same object as a host;
/// the alias marks intent at API boundaries (r = 2 for ordinary graphs).
pub type Pattern = Hypergraph;

impl Hypergraph {
    /// Build a canonical hypergraph. Duplicate input edges collapse to one.
    pub fn new(k: usize, n: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if k < 2 {
            return Err(Error::BadUniformity { k });
        }
        let mut canon: Vec<Vec<usize>> = Vec::new();
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if e.len() != k {
                return Err(Error::WrongEdgeSize {
                    got: e.len(),
                    expected: k,
                    edge: e,
                });
            }
            if let Some(&v) = e.last() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            canon.push(e);
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Hypergraph { k, n, edges: canon })
    }

    /// Hypergraph with no edges.
    pub fn empty(k: usize, n: usize) -> Self {
        Hypergraph { k, n, edges: Vec::new() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Index of `edge` in the canonical edge order, if present.
    pub fn edge_index(&self, edge: &[usize]) -> Option<usize> {
        let mut e = edge.to_vec();
        e.sort_unstable();
        self.edges.binary_search_by(|probe| probe.as_slice().cmp(e.as_slice())).ok()
    }

    pub fn has_edge(&self, edge: &[usize]) -> bool {
        self.edge_index(edge).is_some()
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    /// Per-vertex degrees in one pass.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// Per-vertex incidence lists (edge indices).
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// True iff `v` has no incident edge.
    pub fn is_isolated(&self, v: usize) -> bool {
        self.edges.iter().all(|e| !e.contains(&v))
    }

    /// Returns a copy with `edge` added. Errors on arity/range violations.
    pub fn with_edge(&self, edge: &[usize]) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push(edge.to_vec());
        Hypergraph::new(self.k, self.n, edges)
    }

    /// Disjoint union; `other`'s vertex ids are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::UniformityMismatch { left: self.k, right: other.k });
        }
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .cloned()
            .chain(other.edges.iter().map(|e| e.iter().map(|&v| v + shift).collect()))
            .collect::<Vec<_>>();
        Hypergraph::new(self.k, self.n + other.n, edges)
    }

    /// Subhypergraph induced by `keep`: edges entirely inside `keep`,
    /// vertices relabeled densely. Also returns the order-preserving map
    /// old-id -> new-id for the kept vertices.
    pub fn induced(&self, keep: &[usize]) -> Result<(Self, Vec<(usize, usize)>)> {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.last() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let map: Vec<(usize, usize)> = keep.iter().copied().enumerate().map(|(i, v)| (v, i)).collect();
        let lookup = |v: usize| keep.binary_search(&v).ok();
        let mut edges = Vec::new();
        for e in &self.edges {
            let relabeled: Option<Vec<usize>> = e.iter().map(|&v| lookup(v)).collect();
            if let Some(r) = relabeled {
                edges.push(r);
            }
        }
        let sub = Hypergraph::new(self.k, keep.len(), edges)?;
        Ok((sub, map))
    }

    /// Edges of `self` that are not edges of `other` (same k and n assumed).
    pub fn edge_difference(&self, other: &Hypergraph) -> Self {
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .filter(|e| !other.has_edge(e))
            .cloned()
            .collect();
        Hypergraph { k: self.k, n: self.n, edges }
    }

    /// Minimum over all vertex permutations of the sorted edge list.
    /// Two hypergraphs on the same (k, n) are isomorphic iff the forms are equal.
    /// Refuses n above `cap` (factorial cost).
    pub fn canonical_form_capped(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        if self.n > cap {
            return Err(Error::CanonicalCapExceeded { n: self.n, cap });
        }
        let mut best: Option<Vec<Vec<usize>>> = None;
        let mut perm: Vec<usize> = (0..self.n).collect();
        permute(&mut perm, 0, &mut |p| {
            let mut relabeled: Vec<Vec<usize>> = self
                .edges
                .iter()
                .map(|e| {
                    let mut img: Vec<usize> = e.iter().map(|&v| p[v]).collect();
                    img.sort_unstable();
                    img
                })
                .collect();
            relabeled.sort_unstable();
            match &best {
                Some(b) if *b <= relabeled => {}
                _ => best = Some(relabeled),
            }
        });
        Ok(best.unwrap_or_default())
    }

    pub fn canonical_form(&self) -> Result<Vec<Vec<usize>>> {
        self.canonical_form_capped(CANONICAL_CAP)
    }

    /// Canonical form rendered as the ".khg" edge section (no header).
    pub fn canonical_form_string(&self) -> Result<String> {
        let form = self.canonical_form()?;
        let mut s = String::new();
        for e in form {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        Ok(s)
    }

    /// Serialize to the ".khg" text format: header "k n m", then one edge
    /// per line in canonical order.
    pub fn serialize(&self) -> String {
        let mut s = format!("{} {} {}\n", self.k, self.n, self.edges.len());
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    /// Parse the ".khg" text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let head: Vec<&str> = header.split_whitespace().collect();
        if head.len() != 3 {
            return Err(Error::Parse(format!("header must be \"k n m\", got {header:?}")));
        }
        let parse_int = |s: &str| -> Result<usize> {
            s.parse::<usize>().map_err(|_| Error::Parse(format!("bad integer {s:?}")))
        };
        let k = parse_int(head[0])?;
        let n = parse_int(head[1])?;
        let m = parse_int(head[2])?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let edge: Result<Vec<usize>> = line.split_whitespace().map(parse_int).collect();
            edges.push(edge?);
        }
        if edges.len() != m {
            return Err(Error::Parse(format!("header announced {m} edges, found {}", edges.len())));
        }
        for e in &edges {
            if e.len() != k {
                return Err(Error::Parse(format!("edge {e:?} has arity {}, expected {k}", e.len())));
            }
        }
        Hypergraph::new(k, n, edges)
    }
}

/// All k-subsets of 0..n in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for v in start..=n.saturating_sub(need) {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    if k <= n {
        rec(n, k, 0, &mut cur, &mut out);
    }
    out
}

/// All k-subsets of the given (sorted or not) pool, in lexicographic order
/// of the pool's sorted positions.
pub fn k_subsets_of(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut pool = pool.to_vec();
    pool.sort_unstable();
    k_subsets(pool.len(), k)
        .into_iter()
        .map(|idx| idx.into_iter().map(|i| pool[i]).collect())
        .collect()
}

/// C(n, k) as u128 (exact for the desk-scale arguments used here).
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn permute(items: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        visit(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, visit);
        items.swap(at, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_edges_collapse() {
        let h = Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![2, 1, 0]]).unwrap();
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn single_triple() {
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!((h.k(), h.n(), h.edge_count()), (3, 3, 1));
    }

    #[test]
    fn k3_as_two_uniform() {
        let h = Hypergraph::new(2, 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(h.edge_count(), 3);
        assert_eq!(h.degree(1), 2);
    }

    #[test]
    fn wrong_size_and_range_errors() {
        assert!(matches!(
            Hypergraph::new(3, 4, vec![vec![0, 1]]),
            Err(Error::WrongEdgeSize { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 3, vec![vec![0, 1, 3]]),
            Err(Error::VertexOutOfRange { .. })
        ));
        // repeated vertex inside an edge shrinks it below k
        assert!(Hypergraph::new(3, 4, vec![vec![0, 1, 1]]).is_err());
    }

    #[test]
    fn union_counts_and_identity() {
        let a = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let b = Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let u = a.disjoint_union(&b).unwrap();
        assert_eq!((u.n(), u.edge_count()), (7, 3));
        let e = Hypergraph::empty(3, 0);
        assert_eq!(a.disjoint_union(&e).unwrap(), a);
        let two = a.disjoint_union(&a).unwrap();
        assert_eq!(two.edges(), &[vec![0, 1, 2], vec![3, 4, 5]]);
        let g = Hypergraph::empty(2, 1);
        assert!(a.disjoint_union(&g).is_err());
    }

    #[test]
    fn induced_examples() {
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(h.induced(&[0, 1, 2]).unwrap().0.edge_count(), 1);
        assert_eq!(h.induced(&[0, 1]).unwrap().0.edge_count(), 0);
        let h = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let (sub, map) = h.induced(&[2, 3, 4]).unwrap();
        assert_eq!(sub.edge_count(), 1);
        assert_eq!(map, vec![(2, 0), (3, 1), (4, 2)]);
    }

    #[test]
    fn degrees() {
        let h = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert_eq!(h.degree(2), 2);
        assert_eq!(h.degree(0), 1);
        let star = Hypergraph::new(
            3,
            9,
            vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6], vec![0, 7, 8]],
        )
        .unwrap();
        assert_eq!(star.degree(0), 4);
        let iso = Hypergraph::new(3, 4, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(iso.degree(3), 0);
    }

    #[test]
    fn canonical_form_isomorphism() {
        let a = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let b = Hypergraph::new(3, 5, vec![vec![4, 3, 2], vec![2, 1, 0]]).unwrap();
        assert_eq!(a.canonical_form().unwrap(), b.canonical_form().unwrap());
        let c = Hypergraph::new(3, 6, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let d = Hypergraph::new(3, 6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_ne!(c.canonical_form().unwrap(), d.canonical_form().unwrap());
        let big = Hypergraph::empty(3, 11);
        assert!(matches!(big.canonical_form(), Err(Error::CanonicalCapExceeded { .. })));
    }

    #[test]
    fn khg_round_trip() {
        let s = "3 5 2\n0 1 2\n1 2 3\n";
        let h = Hypergraph::parse(s).unwrap();
        assert_eq!((h.k(), h.n(), h.edge_count()), (3, 5, 2));
        assert_eq!(h.serialize(), s);
        assert!(Hypergraph::parse("2 3 1\n0 3\n").is_err());
        assert!(Hypergraph::parse("3 5\n").is_err());
        assert!(Hypergraph::parse("3 5 1\n0 1\n").is_err());
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(k_subsets(4, 2).len(), 6);
        assert_eq!(k_subsets(4, 2)[0], vec![0, 1]);
        assert_eq!(k_subsets_of(&[5, 2, 9], 2), vec![vec![2, 5], vec![2, 9], vec![5, 9]]);
        assert_eq!(binomial(34, 4), 46376);
        assert_eq!(binomial(0, 2), 0);
    }
}
