//! Shared test helpers: an independent brute-force Berge oracle and seeded
//! random host generation. The oracle enumerates all injections and all
//! edge bijections directly and shares no code with the detector's search.
//!
//! Not every test binary uses every helper.
#![allow(dead_code)]

use bergesat::hypergraph::{k_subsets, Hypergraph, Pattern};
use itertools::Itertools;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Brute-force containment: every injection V(F) -> V(H) crossed with
/// every injective, containment-respecting map E(F) -> E(H).
pub fn oracle_contains(host: &Hypergraph, pattern: &Pattern) -> bool {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return false;
    }
    for core in (0..host.n()).permutations(pattern.n()) {
        let mut used = vec![false; host.edge_count()];
        if assign_edges(host, pattern, &core, 0, &mut used) {
            return true;
        }
    }
    false
}

fn assign_edges(
    host: &Hypergraph,
    pattern: &Pattern,
    core: &[usize],
    pe: usize,
    used: &mut Vec<bool>,
) -> bool {
    if pe == pattern.edge_count() {
        return true;
    }
    let image: Vec<usize> = pattern.edges()[pe].iter().map(|&v| core[v]).collect();
    for he in 0..host.edge_count() {
        if used[he] {
            continue;
        }
        if image.iter().all(|v| host.edges()[he].contains(v)) {
            used[he] = true;
            if assign_edges(host, pattern, core, pe + 1, used) {
                used[he] = true;
                return true;
            }
            used[he] = false;
        }
    }
    false
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random k-uniform host: `m` draws from all k-subsets of [0, n);
/// duplicate draws collapse, so the host may have fewer than m edges.
pub fn random_host(rng: &mut ChaCha8Rng, n: usize, k: usize, m: usize) -> Hypergraph {
    let pool = k_subsets(n, k);
    let edges: Vec<Vec<usize>> =
        (0..m).map(|_| pool[rng.random_range(0..pool.len())].clone()).collect();
    Hypergraph::new(k, n, edges).expect("edges drawn from the valid pool")
}

/// All k-uniform hosts on n vertices with at most m_max edges.
pub fn all_hosts(n: usize, k: usize, m_max: usize) -> Vec<Hypergraph> {
    let pool = k_subsets(n, k);
    let mut out = Vec::new();
    for m in 0..=m_max.min(pool.len()) {
        for combo in k_subsets(pool.len(), m) {
            let edges: Vec<Vec<usize>> = combo.iter().map(|&i| pool[i].clone()).collect();
            out.push(Hypergraph::new(k, n, edges).unwrap());
        }
    }
    out
}
