//! Exact graph invariants the case analysis branches on: vertex cover
//! number, feedback vertex number, component decomposition, forest
//! detection, and the per-uniformity case selection.

use crate::error::{Error, Result};
use crate::hypergraph::Pattern;
use serde::{Deserialize, Serialize};

/// Vertex-count cap for the exact solvers.
pub const SOLVER_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateKind {
    VertexCover,
    FeedbackSet,
}

/// An optimal cover or feedback set, always validated by the producing solver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub vertices: Vec<usize>,
    pub kind: CertificateKind,
}

impl CoverCertificate {
    /// Re-validate against raw edges only.
    pub fn validates(&self, g: &Pattern) -> bool {
        match self.kind {
            CertificateKind::VertexCover => g
                .edges()
                .iter()
                .all(|e| e.iter().any(|v| self.vertices.contains(v))),
            CertificateKind::FeedbackSet => {
                let keep: Vec<usize> =
                    (0..g.n()).filter(|v| !self.vertices.contains(v)).collect();
                match g.induced(&keep) {
                    Ok((sub, _)) => is_forest(&sub),
                    Err(_) => false,
                }
            }
        }
    }
}

/// Case tags of the uniformity-vs-feedback-number table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    /// Some component is a tree.
    F0,
    /// Minimum component feedback number 1.
    F1,
    /// Minimum component feedback number 2.
    F2,
    /// Minimum component feedback number 3 (needs beta <= 5).
    F3,
    /// k = 5, beta = 5, minimum component feedback number 4.
    F4,
    /// beta(F) >= k + 1.
    BetaLarge,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CaseTag::F0 => "F0",
            CaseTag::F1 => "F1",
            CaseTag::F2 => "F2",
            CaseTag::F3 => "F3",
            CaseTag::F4 => "F4",
            CaseTag::BetaLarge => "BETA_LARGE",
        };
        f.write_str(s)
    }
}

fn require_graph(g: &Pattern) -> Result<()> {
    if g.k() != 2 {
        return Err(Error::BadParams(format!("expected a 2-uniform graph, got k={}", g.k())));
    }
    Ok(())
}

fn adjacency(g: &Pattern) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for e in g.edges() {
        adj[e[0]].push(e[1]);
        adj[e[1]].push(e[0]);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    adj
}

/// Maximal connected pieces of `g`, each with its component-local-id ->
/// original-id embedding map. Isolated vertices form singleton components.
/// Components ordered by their smallest original vertex.
pub fn connected_components(g: &Pattern) -> Result<Vec<(Pattern, Vec<usize>)>> {
    require_graph(g)?;
    let adj = adjacency(g);
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut verts = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            verts.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        verts.sort_unstable();
        let (sub, _) = g.induced(&verts)?;
        out.push((sub, verts));
    }
    Ok(out)
}

/// Find a cycle in `g` minus `deleted`, as a vertex list, or None.
fn find_cycle(adj: &[Vec<usize>], deleted: &[bool]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut state = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if deleted[start] || state[start] != 0 {
            continue;
        }
        // iterative DFS with explicit neighbor cursors
        let mut stack = vec![(start, 0usize)];
        state[start] = 1;
        while let Some(&mut (v, ref mut cursor)) = stack.last_mut() {
            if *cursor < adj[v].len() {
                let w = adj[v][*cursor];
                *cursor += 1;
                if deleted[w] || w == parent[v] {
                    // skip parent edge once; a second occurrence cannot exist
                    // in a simple graph
                    continue;
                }
                match state[w] {
                    0 => {
                        state[w] = 1;
                        parent[w] = v;
                        stack.push((w, 0));
                    }
                    1 => {
                        // back edge v -> w closes a cycle along parents
                        let mut cyc = vec![v];
                        let mut x = v;
                        while x != w {
                            x = parent[x];
                            cyc.push(x);
                        }
                        cyc.reverse();
                        return Some(cyc);
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// True iff `g` has no cycle.
pub fn is_forest(g: &Pattern) -> bool {
    let adj = adjacency(g);
    find_cycle(&adj, &vec![false; g.n()]).is_none()
}

fn better(best: &mut Option<(usize, Vec<usize>)>, size: usize, set: Vec<usize>) {
    match best {
        Some((bs, bv)) if (*bs, &*bv) <= (size, &set) => {}
        _ => *best = Some((size, set)),
    }
}

/// Exact vertex cover number with a minimum certificate.
///
/// Branch and bound on the highest-degree uncovered vertex: either it joins
/// the cover, or all of its still-uncovered neighbors do. Ties in optimal
/// covers are broken lexicographically.
pub fn vertex_cover_number(g: &Pattern) -> Result<(usize, CoverCertificate)> {
    require_graph(g)?;
    if g.n() > SOLVER_CAP {
        return Err(Error::SolverCapExceeded { n: g.n(), cap: SOLVER_CAP });
    }
    let adj = adjacency(g);
    let mut in_cover = vec![false; g.n()];
    let mut best: Option<(usize, Vec<usize>)> = None;
    vc_search(&adj, &mut in_cover, 0, &mut best);
    let (size, vertices) = best.expect("search always yields a cover");
    let cert = CoverCertificate { vertices, kind: CertificateKind::VertexCover };
    debug_assert!(cert.validates(g));
    Ok((size, cert))
}

fn vc_search(
    adj: &[Vec<usize>],
    in_cover: &mut Vec<bool>,
    count: usize,
    best: &mut Option<(usize, Vec<usize>)>,
) {
    // remaining degree = neighbors not yet in cover, counted only for
    // vertices outside the cover
    let mut pick = None;
    let mut pick_deg = 0;
    for v in 0..adj.len() {
        if in_cover[v] {
            continue;
        }
        let deg = adj[v].iter().filter(|&&w| !in_cover[w]).count();
        if deg > pick_deg {
            pick_deg = deg;
            pick = Some(v);
        }
    }
    let Some(v) = pick else {
        // every edge covered
        let set: Vec<usize> = (0..adj.len()).filter(|&u| in_cover[u]).collect();
        better(best, count, set);
        return;
    };
    if let Some((bs, _)) = best {
        if count + 1 > *bs {
            return;
        }
    }
    // include v
    in_cover[v] = true;
    vc_search(adj, in_cover, count + 1, best);
    in_cover[v] = false;
    // exclude v: all uncovered neighbors join the cover
    let forced: Vec<usize> = adj[v].iter().copied().filter(|&w| !in_cover[w]).collect();
    if let Some((bs, _)) = best {
        if count + forced.len() > *bs {
            return;
        }
    }
    for &w in &forced {
        in_cover[w] = true;
    }
    vc_search(adj, in_cover, count + forced.len(), best);
    for &w in &forced {
        in_cover[w] = false;
    }
}

/// Exact feedback vertex number with a minimum certificate.
///
/// Branch and bound on cycles: find a cycle in the remaining graph and
/// branch over which of its vertices gets deleted (vertices already marked
/// as kept are skipped). Acyclic remainder is the base case.
pub fn feedback_number(g: &Pattern) -> Result<(usize, CoverCertificate)> {
    require_graph(g)?;
    if g.n() > SOLVER_CAP {
        return Err(Error::SolverCapExceeded { n: g.n(), cap: SOLVER_CAP });
    }
    let adj = adjacency(g);
    let mut deleted = vec![false; g.n()];
    let mut kept = vec![false; g.n()];
    let mut best: Option<(usize, Vec<usize>)> = None;
    fvs_search(&adj, &mut deleted, &mut kept, 0, &mut best);
    let (size, vertices) = best.expect("deleting everything is always feasible");
    let cert = CoverCertificate { vertices, kind: CertificateKind::FeedbackSet };
    debug_assert!(cert.validates(g));
    Ok((size, cert))
}

fn fvs_search(
    adj: &[Vec<usize>],
    deleted: &mut Vec<bool>,
    kept: &mut Vec<bool>,
    count: usize,
    best: &mut Option<(usize, Vec<usize>)>,
) {
    let Some(mut cycle) = find_cycle(adj, deleted) else {
        let set: Vec<usize> = (0..adj.len()).filter(|&u| deleted[u]).collect();
        better(best, count, set);
        return;
    };
    if let Some((bs, _)) = best {
        if count + 1 > *bs {
            return;
        }
    }
    cycle.sort_unstable();
    let mut newly_kept = Vec::new();
    for &v in &cycle {
        if kept[v] {
            continue;
        }
        deleted[v] = true;
        fvs_search(adj, deleted, kept, count + 1, best);
        deleted[v] = false;
        kept[v] = true;
        newly_kept.push(v);
    }
    for v in newly_kept {
        kept[v] = false;
    }
}

fn require_no_isolated(g: &Pattern) -> Result<()> {
    for v in 0..g.n() {
        if g.is_isolated(v) {
            return Err(Error::IsolatedPatternVertex(v));
        }
    }
    Ok(())
}

/// Select the table row handling forbidden graph `F` at uniformity `k`.
///
/// Precedence: `BetaLarge` when beta(F) >= k + 1; otherwise the minimum
/// feedback number over components picks F0..F4. The f = 3 row requires
/// beta <= 5 and the f = 4 row requires k = 5; outside those the selection
/// is unsupported (possible only for k >= 6).
pub fn case_select(f: &Pattern, k: usize) -> Result<CaseTag> {
    require_graph(f)?;
    require_no_isolated(f)?;
    if k < 3 {
        return Err(Error::BadParams(format!("uniformity k={k} must be >= 3")));
    }
    let (beta, _) = vertex_cover_number(f)?;
    if beta > k {
        return Ok(CaseTag::BetaLarge);
    }
    let comps = connected_components(f)?;
    let mut min_f = usize::MAX;
    for (comp, _) in &comps {
        let (fc, _) = feedback_number(comp)?;
        min_f = min_f.min(fc);
    }
    match min_f {
        0 => Ok(CaseTag::F0),
        1 => Ok(CaseTag::F1),
        2 => Ok(CaseTag::F2),
        3 if beta <= 5 => Ok(CaseTag::F3),
        4 if k == 5 => Ok(CaseTag::F4),
        _ => Err(Error::Unsupported(format!(
            "no table row for k={k}, beta={beta}, min component feedback number {min_f}"
        ))),
    }
}
