//! Exact Berge containment: does a k-uniform host contain a Berge copy of
//! an r-uniform pattern? Backtracking over injective core embeddings with a
//! bipartite-matching feasibility prune, plus the expansion construction.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Pattern};
use serde::{Deserialize, Serialize};

/// A certified Berge copy: an injective core embedding plus a system of
/// distinct representatives mapping pattern edges to host edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeWitness {
    /// Host vertex per pattern vertex.
    pub core_map: Vec<usize>,
    /// (pattern edge index, host edge index) pairs, one per pattern edge,
    /// host indices pairwise distinct. Host indices refer to canonical
    /// edge order.
    pub edge_map: Vec<(usize, usize)>,
}

impl BergeWitness {
    /// Independent validator over raw sets only.
    pub fn validates(&self, host: &Hypergraph, pattern: &Pattern) -> bool {
        if self.core_map.len() != pattern.n() || self.edge_map.len() != pattern.edge_count() {
            return false;
        }
        // injective core
        let mut seen = vec![false; host.n()];
        for &h in &self.core_map {
            if h >= host.n() || seen[h] {
                return false;
            }
            seen[h] = true;
        }
        // bijection onto distinct host edges
        let mut pat_done = vec![false; pattern.edge_count()];
        let mut host_used = vec![false; host.edge_count()];
        for &(pe, he) in &self.edge_map {
            if pe >= pattern.edge_count() || he >= host.edge_count() {
                return false;
            }
            if pat_done[pe] || host_used[he] {
                return false;
            }
            pat_done[pe] = true;
            host_used[he] = true;
            let image = pattern.edges()[pe].iter().map(|&v| self.core_map[v]);
            let hedge = &host.edges()[he];
            for v in image {
                if !hedge.contains(&v) {
                    return false;
                }
            }
        }
        pat_done.iter().all(|&d| d)
    }
}

/// Tunables for the containment search.
#[derive(Debug, Clone, Copy)]
pub struct DetectorConfig {
    /// Maximum number of candidate assignments tried before giving up
    /// with an indeterminate result.
    pub node_budget: u64,
}

impl Default for DetectorConfig {
    fn default() -> Self {
        DetectorConfig { node_budget: 100_000_000 }
    }
}

/// The k-uniform expansion: each pattern edge gains k - r fresh vertices,
/// distinct per edge.
pub fn expansion(pattern: &Pattern, k: usize) -> Result<Hypergraph> {
    let r = pattern.k();
    if k <= r {
        return Err(Error::BadParams(format!("expansion needs k > r, got k={k}, r={r}")));
    }
    let pad = k - r;
    let n = pattern.n() + pad * pattern.edge_count();
    let mut edges = Vec::with_capacity(pattern.edge_count());
    for (i, e) in pattern.edges().iter().enumerate() {
        let mut edge = e.clone();
        edge.extend((0..pad).map(|j| pattern.n() + i * pad + j));
        edges.push(edge);
    }
    Hypergraph::new(k, n, edges)
}

/// Exact containment decision. Returns the first witness under the
/// deterministic search order, or None when the host is Berge-pattern-free.
pub fn contains_berge(
    host: &Hypergraph,
    pattern: &Pattern,
    cfg: &DetectorConfig,
) -> Result<Option<BergeWitness>> {
    let mut search = Search::new(host, pattern, cfg)?;
    search.run()
}

/// Containment with a designated host edge that must appear in the image
/// of the edge bijection. Exact for the same reason the plain search is;
/// used for incremental saturation checks (only copies through a freshly
/// added edge can be new).
pub fn contains_berge_requiring(
    host: &Hypergraph,
    pattern: &Pattern,
    required_host_edge: usize,
    cfg: &DetectorConfig,
) -> Result<Option<BergeWitness>> {
    if required_host_edge >= host.edge_count() {
        return Err(Error::BadParams(format!(
            "required edge index {required_host_edge} out of range"
        )));
    }
    // Branch over which pattern edge maps onto the required host edge: its
    // vertices are then confined to that edge, a strong restriction.
    for pe in 0..pattern.edge_count() {
        let mut search = Search::new(host, pattern, cfg)?;
        search.pin(pe, required_host_edge);
        if let Some(w) = search.run()? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// First pattern (by list order) with a witness.
pub fn contains_any_berge(
    host: &Hypergraph,
    patterns: &[Pattern],
    cfg: &DetectorConfig,
) -> Result<Option<(usize, BergeWitness)>> {
    for (i, p) in patterns.iter().enumerate() {
        if let Some(w) = contains_berge(host, p, cfg)? {
            return Ok(Some((i, w)));
        }
    }
    Ok(None)
}

struct Search<'a> {
    host: &'a Hypergraph,
    pattern: &'a Pattern,
    host_deg: Vec<usize>,
    host_inc: Vec<Vec<usize>>,
    pat_deg: Vec<usize>,
    pat_edges_of: Vec<Vec<usize>>,
    order: Vec<usize>,
    assign: Vec<Option<usize>>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
    /// (pattern edge, host edge) the bijection must pair up, if any.
    pinned: Option<(usize, usize)>,
}

impl<'a> Search<'a> {
    fn new(host: &'a Hypergraph, pattern: &'a Pattern, cfg: &DetectorConfig) -> Result<Self> {
        if pattern.k() > host.k() {
            return Err(Error::BadParams(format!(
                "pattern uniformity {} exceeds host uniformity {}",
                pattern.k(),
                host.k()
            )));
        }
        let pat_deg = pattern.degrees();
        if let Some(v) = (0..pattern.n()).find(|&v| pat_deg[v] == 0) {
            return Err(Error::IsolatedPatternVertex(v));
        }
        let mut s = Search {
            host,
            pattern,
            host_deg: host.degrees(),
            host_inc: host.incidence(),
            pat_edges_of: pattern.incidence(),
            pat_deg,
            order: Vec::new(),
            assign: vec![None; pattern.n()],
            used: vec![false; host.n()],
            nodes: 0,
            budget: cfg.node_budget,
            pinned: None,
        };
        s.order = s.assignment_order();
        Ok(s)
    }

    fn pin(&mut self, pattern_edge: usize, host_edge: usize) {
        self.pinned = Some((pattern_edge, host_edge));
    }

    /// Static assignment order: highest-degree vertex first, then greedily
    /// the vertex sharing the most pattern edges with already-ordered
    /// vertices (ties: degree descending, id ascending). Keeps the partial
    /// embedding connected whenever the pattern is.
    fn assignment_order(&self) -> Vec<usize> {
        let n = self.pattern.n();
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        for _ in 0..n {
            let mut best: Option<(usize, usize, usize)> = None; // (links, deg, v)
            for v in 0..n {
                if placed[v] {
                    continue;
                }
                let links = self.pat_edges_of[v]
                    .iter()
                    .filter(|&&pe| self.pattern.edges()[pe].iter().any(|&w| placed[w]))
                    .count();
                let key = (links, self.pat_deg[v], v);
                let take = match best {
                    None => true,
                    Some((bl, bd, bv)) => (links, self.pat_deg[v]) > (bl, bd)
                        || ((links, self.pat_deg[v]) == (bl, bd) && v < bv),
                };
                if take {
                    best = Some(key);
                }
            }
            let (_, _, v) = best.unwrap();
            placed[v] = true;
            order.push(v);
        }
        order
    }

    fn run(&mut self) -> Result<Option<BergeWitness>> {
        if self.pattern.edge_count() > self.host.edge_count() || self.pattern.n() > self.host.n() {
            return Ok(None);
        }
        self.extend(0)
    }

    fn extend(&mut self, depth: usize) -> Result<Option<BergeWitness>> {
        if depth == self.order.len() {
            return Ok(self.accept());
        }
        let u = self.order[depth];
        for h in 0..self.host.n() {
            if self.used[h] || self.host_deg[h] < self.pat_deg[u] {
                continue;
            }
            if !self.candidate_ok(u, h) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Indeterminate(self.nodes));
            }
            self.assign[u] = Some(h);
            self.used[h] = true;
            let feasible = self.matching_feasible();
            let found = if feasible { self.extend(depth + 1)? } else { None };
            self.assign[u] = None;
            self.used[h] = false;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// Local consistency: if the pin confines u, h must lie in the pinned
    /// host edge; and for every pattern edge through u with other vertices
    /// already embedded, some host edge must contain all those images plus h.
    fn candidate_ok(&self, u: usize, h: usize) -> bool {
        if let Some((pe, he)) = self.pinned {
            if self.pattern.edges()[pe].contains(&u) && !self.host.edges()[he].contains(&h) {
                return false;
            }
        }
        'edges: for &pe in &self.pat_edges_of[u] {
            let mut images = Vec::new();
            for &w in &self.pattern.edges()[pe] {
                if w == u {
                    continue;
                }
                if let Some(img) = self.assign[w] {
                    images.push(img);
                }
            }
            if images.is_empty() {
                continue;
            }
            for &hi in &self.host_inc[h] {
                let hedge = &self.host.edges()[hi];
                if images.iter().all(|v| hedge.contains(v)) {
                    continue 'edges;
                }
            }
            return false;
        }
        true
    }

    /// Candidate host edges for a pattern edge: those containing every
    /// already-embedded vertex of it. Under the pin, the pinned pattern
    /// edge is confined to the pinned host edge.
    fn compat(&self, pe: usize) -> Vec<usize> {
        if let Some((ppe, phe)) = self.pinned {
            if pe == ppe {
                let hedge = &self.host.edges()[phe];
                let ok = self.pattern.edges()[pe]
                    .iter()
                    .filter_map(|&w| self.assign[w])
                    .all(|img| hedge.contains(&img));
                return if ok { vec![phe] } else { Vec::new() };
            }
        }
        let images: Vec<usize> = self.pattern.edges()[pe]
            .iter()
            .filter_map(|&w| self.assign[w])
            .collect();
        (0..self.host.edge_count())
            .filter(|&hi| {
                let hedge = &self.host.edges()[hi];
                images.iter().all(|v| hedge.contains(v))
            })
            .collect()
    }

    /// Hall-type prune: every pattern edge with at least one embedded
    /// vertex must get a distinct compatible host edge. The pinned pattern
    /// edge always participates.
    fn matching_feasible(&self) -> bool {
        let mut left = Vec::new();
        for pe in 0..self.pattern.edge_count() {
            let touched = self.pattern.edges()[pe].iter().any(|&w| self.assign[w].is_some());
            let pinned_here = self.pinned.map(|(p, _)| p == pe).unwrap_or(false);
            if touched || pinned_here {
                left.push(pe);
            }
        }
        self.max_matching(&left).is_some()
    }

    fn accept(&mut self) -> Option<BergeWitness> {
        let all: Vec<usize> = (0..self.pattern.edge_count()).collect();
        let matched = self.max_matching(&all)?;
        let core_map: Vec<usize> = self.assign.iter().map(|a| a.unwrap()).collect();
        let mut edge_map: Vec<(usize, usize)> =
            all.iter().map(|&pe| (pe, matched[&pe])).collect();
        edge_map.sort_unstable();
        Some(BergeWitness { core_map, edge_map })
    }

    /// Deterministic Kuhn matching; returns the full assignment iff every
    /// left vertex (pattern edge) is matched. The pinned pattern edge, when
    /// present in `left`, is processed first so its single candidate sticks.
    fn max_matching(&self, left: &[usize]) -> Option<std::collections::HashMap<usize, usize>> {
        let adj: Vec<(usize, Vec<usize>)> =
            left.iter().map(|&pe| (pe, self.compat(pe))).collect();
        let mut order: Vec<usize> = (0..adj.len()).collect();
        if let Some((ppe, _)) = self.pinned {
            if let Some(pos) = adj.iter().position(|(pe, _)| *pe == ppe) {
                order.retain(|&i| i != pos);
                order.insert(0, pos);
            }
        }
        let mut match_host: std::collections::HashMap<usize, usize> = Default::default();
        let mut match_left: Vec<Option<usize>> = vec![None; adj.len()];
        for &i in &order {
            let mut visited = vec![false; adj.len()];
            if !augment(i, &adj, &mut match_host, &mut match_left, &mut visited) {
                return None;
            }
        }
        let mut out = std::collections::HashMap::new();
        for (i, (pe, _)) in adj.iter().enumerate() {
            out.insert(*pe, match_left[i].expect("all matched"));
        }
        Some(out)
    }
}

fn augment(
    i: usize,
    adj: &[(usize, Vec<usize>)],
    match_host: &mut std::collections::HashMap<usize, usize>,
    match_left: &mut Vec<Option<usize>>,
    visited: &mut Vec<bool>,
) -> bool {
    if visited[i] {
        return false;
    }
    visited[i] = true;
    for &he in &adj[i].1 {
        let holder = match_host.get(&he).copied();
        match holder {
            None => {
                match_host.insert(he, i);
                match_left[i] = Some(he);
                return true;
            }
            Some(j) if j != i && augment(j, adj, match_host, match_left, visited) => {
                match_host.insert(he, i);
                match_left[i] = Some(he);
                return true;
            }
            _ => {}
        }
    }
    false
}
