//! Tight paths and the multiplicity reduction: pick an (r-1)-subset of
//! least multiplicity from each host edge; either all multiplicities stay
//! below the threshold (a size certificate) or a Berge tight path is
//! extracted from the pick history.

use crate::berge::BergeWitness;
use crate::error::{Error, Result};
use crate::hypergraph::{binomial, k_subsets_of, Hypergraph, Pattern};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The tight path P^(r)_l: l ordered vertices, edges are the l - r + 1
/// windows of r consecutive vertices.
pub fn tight_path(r: usize, l: usize) -> Result<Pattern> {
    if r < 2 || l < r {
        return Err(Error::BadParams(format!("tight path needs l >= r >= 2, got r={r}, l={l}")));
    }
    let edges = (0..=l - r).map(|i| (i..i + r).collect()).collect::<Vec<Vec<usize>>>();
    Hypergraph::new(r, l, edges)
}

/// c = (l - r + 1) * C(l, k).
pub fn reduction_threshold(r: usize, k: usize, l: usize) -> Result<u64> {
    if !(r < k && k < l) {
        return Err(Error::BadParams(format!("need r < k < l, got r={r}, k={k}, l={l}")));
    }
    Ok((l - r + 1) as u64 * binomial(l as u64, k as u64) as u64)
}

/// Pick counts and per-set pick history ((r-1)-set -> host edge indices,
/// in processing order).
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct MultiplicityTable {
    pub counts: BTreeMap<Vec<usize>, u64>,
    pub history: BTreeMap<Vec<usize>, Vec<usize>>,
}

impl MultiplicityTable {
    fn pick(&mut self, edge: &[usize], edge_idx: usize, r: usize) -> (Vec<usize>, u64) {
        let mut best: Option<(u64, Vec<usize>)> = None;
        for sub in k_subsets_of(edge, r - 1) {
            let c = self.counts.get(&sub).copied().unwrap_or(0);
            match &best {
                Some((bc, _)) if *bc <= c => {}
                _ => best = Some((c, sub)),
            }
        }
        let (_, set) = best.expect("edge has subsets");
        let c = self.counts.entry(set.clone()).or_insert(0);
        *c += 1;
        let c = *c;
        self.history.entry(set.clone()).or_default().push(edge_idx);
        (set, c)
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.counts.values().copied().max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionKind {
    BoundCertificate,
    ExtractedPath,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReductionOutcome {
    pub kind: ReductionKind,
    pub c: u64,
    pub max_multiplicity: u64,
    /// Validating witness for Berge-P^(r)_l, present iff kind is ExtractedPath.
    pub path_witness: Option<BergeWitness>,
}

/// Process host edges in canonical order, tracking multiplicities. If every
/// (r-1)-set stays below c, the host has at most c * C(n, r-1) edges. If a
/// set reaches c, a Berge tight path on l vertices is extracted from the
/// pick history and certified.
pub fn run_reduction(
    host: &Hypergraph,
    r: usize,
    l: usize,
) -> Result<(ReductionOutcome, MultiplicityTable)> {
    let c = reduction_threshold(r, host.k(), l)?;
    let mut table = MultiplicityTable::default();
    for (idx, edge) in host.edges().iter().enumerate() {
        let (set, count) = table.pick(edge, idx, r);
        if count >= c {
            let witness = extract_path(host, r, l, &table, &set, idx)?;
            let outcome = ReductionOutcome {
                kind: ReductionKind::ExtractedPath,
                c,
                max_multiplicity: table.max_multiplicity(),
                path_witness: Some(witness),
            };
            return Ok((outcome, table));
        }
    }
    let outcome = ReductionOutcome {
        kind: ReductionKind::BoundCertificate,
        c,
        max_multiplicity: table.max_multiplicity(),
        path_witness: None,
    };
    debug_assert!(
        host.edge_count() as u128 <= c as u128 * binomial(host.n() as u64, (r - 1) as u64)
    );
    Ok((outcome, table))
}

/// Walk the pick history backwards: start from the set that reached the
/// threshold and its triggering edge, then repeatedly find, among the last
/// C(l, k) edges where the current (r-1)-window was picked, one containing
/// a vertex not placed yet. Failure here would indicate an implementation
/// bug and is raised, never mapped to a certificate.
fn extract_path(
    host: &Hypergraph,
    r: usize,
    l: usize,
    table: &MultiplicityTable,
    trigger_set: &[usize],
    trigger_edge: usize,
) -> Result<BergeWitness> {
    let window_budget = binomial(l as u64, host.k() as u64) as usize;
    let mut placed: Vec<usize> = trigger_set.to_vec(); // v_1 .. v_{r-1}
    let mut chosen_edges: Vec<usize> = Vec::with_capacity(l - r + 1);

    // position r: the triggering edge supplies v_r
    let vr = host.edges()[trigger_edge]
        .iter()
        .copied()
        .find(|v| !placed.contains(v))
        .ok_or_else(|| Error::ExtractionFailure("triggering edge has no new vertex".into()))?;
    placed.push(vr);
    chosen_edges.push(trigger_edge);

    for _ in (r + 1)..=l {
        let window: Vec<usize> = {
            let mut w = placed[placed.len() - (r - 1)..].to_vec();
            w.sort_unstable();
            w
        };
        let hist = table.history.get(&window).ok_or_else(|| {
            Error::ExtractionFailure(format!("window {window:?} has no pick history"))
        })?;
        let mut found = None;
        for &e in hist.iter().rev().take(window_budget) {
            let fresh = host.edges()[e].iter().copied().find(|v| !placed.contains(v));
            if let Some(v) = fresh {
                found = Some((e, v));
                break;
            }
        }
        let (e, v) = found.ok_or_else(|| {
            Error::ExtractionFailure(format!(
                "no recent pick of {window:?} contains a new vertex"
            ))
        })?;
        placed.push(v);
        chosen_edges.push(e);
    }

    let pattern = tight_path(r, l)?;
    let edge_map: Vec<(usize, usize)> =
        chosen_edges.iter().copied().enumerate().collect();
    let witness = BergeWitness { core_map: placed, edge_map };
    if !witness.validates(host, &pattern) {
        return Err(Error::ExtractionFailure("extracted witness fails validation".into()));
    }
    Ok(witness)
}

/// t(F) = min over edges e of max over other edges e' of |e ∩ e'|: the
/// largest t such that every edge shares at least t vertices with another.
pub fn intersection_level(f: &Pattern) -> Result<usize> {
    if f.edge_count() < 2 {
        return Err(Error::BadParams("intersection level needs at least 2 edges".into()));
    }
    let mut t = usize::MAX;
    for (i, e) in f.edges().iter().enumerate() {
        let mut best = 0;
        for (j, e2) in f.edges().iter().enumerate() {
            if i == j {
                continue;
            }
            best = best.max(e.iter().filter(|v| e2.contains(v)).count());
        }
        t = t.min(best);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berge::expansion;
    use crate::families::complete_graph;
    use crate::hypergraph::k_subsets;

    #[test]
    fn tight_path_shapes() {
        let p = tight_path(3, 5).unwrap();
        assert_eq!(p.edges(), &[vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4]]);
        assert_eq!(tight_path(4, 4).unwrap().edge_count(), 1);
        let p24 = tight_path(2, 4).unwrap();
        assert_eq!(p24.edges(), crate::families::path(4).edges());
        assert!(tight_path(3, 2).is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!(reduction_threshold(3, 4, 5).unwrap(), 15);
        assert_eq!(reduction_threshold(3, 4, 6).unwrap(), 60);
        assert_eq!(reduction_threshold(2, 3, 4).unwrap(), 12);
        assert!(reduction_threshold(4, 3, 5).is_err());
        // monotone in l for fixed r, k
        let mut prev = 0;
        for l in 5..=9 {
            let c = reduction_threshold(3, 4, l).unwrap();
            assert!(c > prev);
            prev = c;
        }
    }

    #[test]
    fn sparse_host_gets_certificate() {
        let host = expansion(&tight_path(3, 5).unwrap(), 4).unwrap();
        let (out, table) = run_reduction(&host, 3, 5).unwrap();
        assert_eq!(out.kind, ReductionKind::BoundCertificate);
        assert_eq!(out.c, 15);
        assert!(out.max_multiplicity < 15);
        // replay: each pick obeyed the least-count rule with lexicographic ties
        let mut picked_by_edge = vec![None; host.edge_count()];
        for (set, hist) in &table.history {
            for &e in hist {
                picked_by_edge[e] = Some(set.clone());
            }
        }
        let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for (e, edge) in host.edges().iter().enumerate() {
            let picked = picked_by_edge[e].clone().expect("every edge picks");
            let pc = counts.get(&picked).copied().unwrap_or(0);
            for sub in k_subsets_of(edge, 2) {
                let c = counts.get(&sub).copied().unwrap_or(0);
                assert!(pc < c || (pc == c && picked <= sub));
            }
            *counts.entry(picked).or_insert(0) += 1;
        }
    }

    #[test]
    fn dense_host_extracts_path() {
        // complete 4-uniform host on 17 vertices: total picks 2380 over 136
        // pairs force some pair to the threshold 15
        let n = 17;
        let edges = k_subsets(n, 4);
        let host = Hypergraph::new(4, n, edges).unwrap();
        let (out, _) = run_reduction(&host, 3, 5).unwrap();
        assert_eq!(out.kind, ReductionKind::ExtractedPath);
        let w = out.path_witness.unwrap();
        assert!(w.validates(&host, &tight_path(3, 5).unwrap()));
    }

    #[test]
    fn intersection_levels() {
        assert_eq!(intersection_level(&tight_path(3, 5).unwrap()).unwrap(), 2);
        assert_eq!(intersection_level(&complete_graph(3)).unwrap(), 1);
        let disjoint = Hypergraph::new(2, 4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(intersection_level(&disjoint).unwrap(), 0);
        let single = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        assert!(intersection_level(&single).is_err());
    }
}
