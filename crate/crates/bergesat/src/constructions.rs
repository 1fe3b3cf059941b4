//! The feedback-set construction H_k(n, a, G, S), the per-case base
//! hypergraphs of the uniformity table, and mechanical re-checks of the
//! claimed Berge-freeness at finite n.

use crate::berge::{contains_berge, expansion, DetectorConfig};
use crate::error::{Error, Result};
use crate::hypergraph::{binomial, k_subsets_of, Hypergraph, Pattern};
use crate::invariants::{
    case_select, connected_components, feedback_number, is_forest, vertex_cover_number, CaseTag,
};
use serde::{Deserialize, Serialize};

/// Parameters (k, n, a, G, S) for the construction, with the derived
/// partition sizes available after validation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub k: usize,
    pub n: usize,
    pub a: usize,
    pub g: Pattern,
    /// A feedback set of `g`; vertex layout places |S| spine vertices first.
    pub s: Vec<usize>,
}

/// The generated host together with its deterministic vertex layout.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BuiltConstruction {
    pub host: Hypergraph,
    /// Number of spine edges, |E(G[S])|.
    pub ell: usize,
    /// |V1| = |S|: core vertices of the spine, ids [0, v1).
    pub v1: usize,
    /// |V2| = (k-2) * ell: degree-1 spine fillers, ids [v1, v1+v2).
    pub v2: usize,
    /// |V3| - |V3'|: isolated leftovers, the highest ids.
    pub leftover: usize,
    /// The a-set family M partitioning V3'.
    pub m_sets: Vec<Vec<usize>>,
}

/// Build H_k(n, a, G, S).
///
/// Layout: V1 = [0, |S|), V2 next, V3 the rest with the (|V3| mod a)
/// leftover vertices taking the highest ids; M partitions V3' into
/// consecutive a-blocks. Spine edge j (lexicographic order of G[S]'s
/// edges) takes the j-th (k-2)-block of V2.
pub fn build_construction(p: &ConstructionParams) -> Result<BuiltConstruction> {
    if p.k < 3 {
        return Err(Error::BadConstruction(format!("k = {} must be >= 3", p.k)));
    }
    if p.a < 1 || p.a > p.k - 1 {
        return Err(Error::BadConstruction(format!("a = {} must be in [1, k-1]", p.a)));
    }
    let mut s = p.s.clone();
    s.sort_unstable();
    s.dedup();
    if let Some(&v) = s.last() {
        if v >= p.g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: p.g.n() });
        }
    }
    let keep: Vec<usize> = (0..p.g.n()).filter(|v| !s.contains(v)).collect();
    if !is_forest(&p.g.induced(&keep)?.0) {
        return Err(Error::BadConstruction(format!("S = {s:?} is not a feedback set of G")));
    }
    if s.len() + p.a < p.k {
        return Err(Error::BadConstruction(format!(
            "|S| = {} violates |S| >= k - a = {}",
            s.len(),
            p.k - p.a
        )));
    }
    let (gs, _) = p.g.induced(&s)?;
    let ell = gs.edge_count();
    let v1 = s.len();
    let v2 = (p.k - 2) * ell;
    if p.n < v1 + v2 + p.a {
        return Err(Error::BadConstruction(format!(
            "n = {} too small: need at least |V1| + |V2| + a = {}",
            p.n,
            v1 + v2 + p.a
        )));
    }
    let v3 = p.n - v1 - v2;
    let leftover = v3 % p.a;
    let v3_prime = v3 - leftover;

    let mut edges: Vec<Vec<usize>> = Vec::new();
    // spine: a Berge-G[S] with core in V1, each V2 vertex used once
    for (j, e) in gs.edges().iter().enumerate() {
        let mut edge: Vec<usize> = e.clone(); // G[S] is densely relabeled onto [0, |S|) = V1
        edge.extend((0..p.k - 2).map(|t| v1 + j * (p.k - 2) + t));
        edges.push(edge);
    }
    // M-edges: each a-block of V3' with every (k-a)-subset of V1
    let v1_ids: Vec<usize> = (0..v1).collect();
    let blocks: Vec<Vec<usize>> = (0..v3_prime / p.a)
        .map(|b| {
            let base = v1 + v2 + b * p.a;
            (base..base + p.a).collect()
        })
        .collect();
    for block in &blocks {
        for sub in k_subsets_of(&v1_ids, p.k - p.a) {
            let mut edge = block.clone();
            edge.extend(sub);
            edges.push(edge);
        }
    }
    let host = Hypergraph::new(p.k, p.n, edges)?;
    let expected = ell as u128 + blocks.len() as u128 * binomial(v1 as u64, (p.k - p.a) as u64);
    debug_assert_eq!(host.edge_count() as u128, expected);
    Ok(BuiltConstruction { host, ell, v1, v2, leftover, m_sets: blocks })
}

/// Record of the per-case assembly around a lemma application.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LemmaInstance {
    pub case: CaseTag,
    pub f: Pattern,
    /// The component (or all of F) fed to the construction, densely labeled.
    pub f_star: Pattern,
    /// Feedback set used, in f_star's labels. For BetaLarge this is a
    /// minimum cover minus its largest vertex, re-verified to be acyclic.
    pub s: Vec<usize>,
    pub a: usize,
    /// Berge-(F - F*): the expansion of the remaining components. Empty
    /// when F = F*.
    pub h_star: Hypergraph,
    pub z: usize,
    /// Whether the strict side condition |S| > k - a holds. The f = 1 row
    /// sits exactly on the boundary |S| = k - a; the generator-level
    /// condition |S| >= k - a is what the assembly enforces.
    pub meets_strict_condition: bool,
}

/// Assembly output: the construction part, the attachment, and their union.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LemmaBuild {
    pub instance: LemmaInstance,
    /// H_k(n - z, a, F*, S); empty for the tree case.
    pub construction: BuiltConstruction,
    /// construction ∪ H*.
    pub host: Hypergraph,
}

fn empty_built(k: usize, n: usize) -> BuiltConstruction {
    BuiltConstruction {
        host: Hypergraph::empty(k, n),
        ell: 0,
        v1: 0,
        v2: 0,
        leftover: 0,
        m_sets: Vec::new(),
    }
}

/// Pick the first component whose feedback number equals `want` and return
/// (component, remainder-of-F or None when F is that single component).
fn split_component(f: &Pattern, want: usize) -> Result<(Pattern, Option<Pattern>)> {
    let comps = connected_components(f)?;
    let mut chosen = None;
    for (i, (comp, _)) in comps.iter().enumerate() {
        if feedback_number(comp)?.0 == want {
            chosen = Some(i);
            break;
        }
    }
    let idx = chosen.ok_or_else(|| {
        Error::BadParams(format!("no component with feedback number {want}"))
    })?;
    if comps.len() == 1 {
        return Ok((comps[idx].0.clone(), None));
    }
    let rest_vertices: Vec<usize> = comps
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != idx)
        .flat_map(|(_, (_, verts))| verts.iter().copied())
        .collect();
    let (rest, _) = f.induced(&rest_vertices)?;
    Ok((comps[idx].0.clone(), Some(rest)))
}

/// Assemble the per-case host H_k(n - z, a, F*, S) ∪ H* on `n` vertices.
pub fn build_lemma_instance(f: &Pattern, k: usize, n: usize) -> Result<LemmaBuild> {
    let case = case_select(f, k)?;
    let (f_star, rest, s, a) = match case {
        CaseTag::F0 => {
            let (f_star, _) = split_component(f, 0)?;
            // any a works: the construction with S = {} is empty either way
            let instance = LemmaInstance {
                case,
                f: f.clone(),
                f_star,
                s: Vec::new(),
                a: 1,
                h_star: Hypergraph::empty(k, 0),
                z: 0,
                meets_strict_condition: true,
            };
            return Ok(LemmaBuild {
                instance,
                construction: empty_built(k, n),
                host: Hypergraph::empty(k, n),
            });
        }
        CaseTag::BetaLarge => {
            let (_, cover) = vertex_cover_number(f)?;
            let mut s = cover.vertices.clone();
            s.pop(); // drop the largest cover vertex: |S| = beta - 1
            // the cover argument implies S is a feedback set; verify rather
            // than trust it
            let keep: Vec<usize> = (0..f.n()).filter(|v| !s.contains(v)).collect();
            if !is_forest(&f.induced(&keep)?.0) {
                return Err(Error::BadConstruction(
                    "cover-derived S is not a feedback set".into(),
                ));
            }
            (f.clone(), None, s, 1)
        }
        CaseTag::F1 => {
            let (fs, rest) = split_component(f, 1)?;
            let s = feedback_number(&fs)?.1.vertices;
            (fs, rest, s, k - 1)
        }
        CaseTag::F2 => {
            let (fs, rest) = split_component(f, 2)?;
            let s = feedback_number(&fs)?.1.vertices;
            (fs, rest, s, k - 1)
        }
        CaseTag::F3 => {
            let (fs, rest) = split_component(f, 3)?;
            let s = feedback_number(&fs)?.1.vertices;
            (fs, rest, s, k - 2)
        }
        CaseTag::F4 => {
            // all components have feedback number >= 4 and f(F) = 4, so F
            // is connected
            let s = feedback_number(f)?.1.vertices;
            (f.clone(), None, s, 2)
        }
    };
    let h_star = match &rest {
        Some(r) => expansion(r, k)?,
        None => Hypergraph::empty(k, 0),
    };
    let z = h_star.n();
    if n < z {
        return Err(Error::BadConstruction(format!("n = {n} smaller than z = {z}")));
    }
    let params = ConstructionParams { k, n: n - z, a, g: f_star.clone(), s: s.clone() };
    let construction = build_construction(&params)?;
    let host = construction.host.disjoint_union(&h_star)?;
    let meets_strict_condition = s.len() > k - a;
    let instance =
        LemmaInstance { case, f: f.clone(), f_star, s, a, h_star, z, meets_strict_condition };
    Ok(LemmaBuild { instance, construction, host })
}

/// One line of a freeness report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FreenessCheck {
    pub target: String,
    pub free: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FreenessReport {
    pub case: CaseTag,
    pub free: bool,
    pub checks: Vec<FreenessCheck>,
}

/// Re-check the lemma's freeness claim on a finite instance. A witness here
/// falsifies the implementation, not the underlying statement, and is
/// reported as `free = false`.
pub fn verify_lemma_freeness(build: &LemmaBuild, cfg: &DetectorConfig) -> Result<FreenessReport> {
    let inst = &build.instance;
    let mut checks = Vec::new();
    match inst.case {
        CaseTag::BetaLarge | CaseTag::F4 => {
            let free = contains_berge(&build.host, &inst.f, cfg)?.is_none();
            checks.push(FreenessCheck { target: "Berge-F in full host".into(), free });
        }
        CaseTag::F0 => {
            let free = build.host.edge_count() == 0;
            checks.push(FreenessCheck { target: "empty host".into(), free });
        }
        CaseTag::F1 | CaseTag::F2 | CaseTag::F3 => {
            for (i, (comp, _)) in connected_components(&inst.f)?.iter().enumerate() {
                let free = contains_berge(&build.construction.host, comp, cfg)?.is_none();
                checks.push(FreenessCheck {
                    target: format!("Berge-F_{i} in construction part"),
                    free,
                });
            }
        }
    }
    let free = checks.iter().all(|c| c.free);
    Ok(FreenessReport { case: inst.case, free, checks })
}
