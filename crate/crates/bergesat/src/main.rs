use bergesat::berge::{contains_berge, DetectorConfig};
use bergesat::constructions::{
    build_construction, build_lemma_instance, verify_lemma_freeness, ConstructionParams,
};
use bergesat::error::Error;
use bergesat::hypergraph::Hypergraph;
use bergesat::invariants::{case_select, connected_components, feedback_number, vertex_cover_number};
use bergesat::manifest::{sha256_file, RunManifest};
use bergesat::saturation::{
    degeneracy_bound, degeneracy_order, greedy_complete, is_saturated, sat_bruteforce,
    DegeneracyBoundInputs, SatSearchOptions,
};
use bergesat::tightpath::run_reduction;
use clap::{Parser, Subcommand};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Parser)]
#[command(name = "bergesat", version, about = "Berge saturation verification toolkit")]
struct Cli {
    /// Seed recorded in the manifest and used by any randomized command.
    #[arg(long, global = true, default_value_t = 0xB3A5E)]
    seed: u64,
    /// Node budget for the containment search.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    node_budget: u64,
    /// Worker threads for parallelizable commands (0 = rayon default).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Where to write the run manifest.
    #[arg(long, global = true, default_value = "manifest.json")]
    manifest: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print beta, feedback number, components, and case tags per k in {3,4,5}.
    Invariants { graph: PathBuf },
    /// Generate H_k(n, a, G, S) from a JSON parameter block.
    Construct {
        params: PathBuf,
        #[arg(short, long, default_value = "construction.khg")]
        output: PathBuf,
    },
    /// Decide Berge containment; prints a witness JSON or FREE.
    CheckBerge { host: PathBuf, pattern: PathBuf },
    /// Greedily complete a host to Berge-F-saturation.
    Complete {
        host: PathBuf,
        pattern: PathBuf,
        #[arg(short, long, default_value = "saturated.khg")]
        output: PathBuf,
    },
    /// Brute-force minimum saturation number at tiny n.
    SatNumber {
        n: usize,
        k: usize,
        pattern: PathBuf,
        #[arg(long, default_value_t = 6)]
        m_cap: usize,
        #[arg(long)]
        no_isomorphism_rejection: bool,
        #[arg(short, long, default_value = "sat-certificate.khg")]
        output: PathBuf,
    },
    /// Run the tight-path multiplicity reduction.
    TightReduce { host: PathBuf, r: usize, l: usize },
    /// Full per-lemma pipeline over an n-range: case selection, construction,
    /// freeness, greedy completion, degeneracy and edge-count bounds.
    VerifyPaper {
        pattern: PathBuf,
        k: usize,
        #[arg(long, default_value_t = 8)]
        n_from: usize,
        #[arg(long, default_value_t = 14)]
        n_to: usize,
        /// Skip the completion stage (freeness checks only).
        #[arg(long)]
        freeness_only: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn exit_code_for(e: &Error) -> i32 {
    if e.is_indeterminate() {
        3
    } else {
        2
    }
}

fn run(cli: Cli) -> i32 {
    if cli.jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    let started = Instant::now();
    let cfg = DetectorConfig { node_budget: cli.node_budget };
    let mut inputs: Vec<PathBuf> = Vec::new();
    let result = dispatch(&cli, &cfg, &mut inputs);
    let (outcome, code) = match result {
        Ok((outcome, code)) => (outcome, code),
        Err(e) => {
            eprintln!("error: {e}");
            (json!({ "error": e.to_string() }), exit_code_for(&e))
        }
    };
    let mut digests: Vec<(String, String)> = inputs
        .iter()
        .filter_map(|p| sha256_file(p).ok().map(|d| (p.display().to_string(), d)))
        .collect();
    digests.sort();
    let manifest = RunManifest {
        command_line: std::env::args().collect(),
        input_digests: digests,
        seed: cli.seed,
        node_budget: cli.node_budget,
        outcome,
        wall_time_ms: started.elapsed().as_millis(),
    };
    if let Err(e) = std::fs::write(&cli.manifest, serde_json::to_string_pretty(&manifest).unwrap())
    {
        eprintln!("error: cannot write manifest: {e}");
        return 2;
    }
    code
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph, Error> {
    let text = std::fs::read_to_string(path)?;
    Hypergraph::parse(&text)
}

fn dispatch(
    cli: &Cli,
    cfg: &DetectorConfig,
    inputs: &mut Vec<PathBuf>,
) -> Result<(serde_json::Value, i32), Error> {
    match &cli.command {
        Command::Invariants { graph } => {
            inputs.push(graph.clone());
            let g = load_hypergraph(graph)?;
            let (beta, cover) = vertex_cover_number(&g)?;
            let (f, fset) = feedback_number(&g)?;
            let comps = connected_components(&g)?;
            let mut cases = serde_json::Map::new();
            for k in [3usize, 4, 5] {
                let tag = match case_select(&g, k) {
                    Ok(t) => t.to_string(),
                    Err(Error::Unsupported(_)) => "UNSUPPORTED".into(),
                    Err(e) => return Err(e),
                };
                cases.insert(format!("k{k}"), json!(tag));
            }
            println!(
                "beta={beta} f={f} components={} {}",
                comps.len(),
                cases
                    .iter()
                    .map(|(k, v)| format!("case({k})={}", v.as_str().unwrap()))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            let outcome = json!({
                "beta": beta,
                "cover": cover.vertices,
                "feedback_number": f,
                "feedback_set": fset.vertices,
                "components": comps.len(),
                "cases": cases,
            });
            Ok((outcome, 0))
        }
        Command::Construct { params, output } => {
            inputs.push(params.clone());
            let text = std::fs::read_to_string(params)?;
            let raw: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let get = |key: &str| -> Result<u64, Error> {
                raw.get(key)
                    .and_then(|v| v.as_u64())
                    .ok_or_else(|| Error::Parse(format!("missing integer field {key:?}")))
            };
            let g = match raw.get("G") {
                Some(serde_json::Value::String(s)) if s.contains('\n') => Hypergraph::parse(s)?,
                Some(serde_json::Value::String(s)) => {
                    inputs.push(PathBuf::from(s));
                    load_hypergraph(Path::new(s))?
                }
                _ => return Err(Error::Parse("field \"G\" must be a .khg path or inline text".into())),
            };
            let s: Vec<usize> = raw
                .get("S")
                .and_then(|v| v.as_array())
                .ok_or_else(|| Error::Parse("missing array field \"S\"".into()))?
                .iter()
                .map(|v| v.as_u64().map(|x| x as usize))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Parse("\"S\" must hold integers".into()))?;
            let p = ConstructionParams {
                k: get("k")? as usize,
                n: get("n")? as usize,
                a: get("a")? as usize,
                g,
                s,
            };
            let built = build_construction(&p)?;
            std::fs::write(output, built.host.serialize())?;
            println!("wrote {} ({} edges)", output.display(), built.host.edge_count());
            let outcome = json!({
                "output": output.display().to_string(),
                "edges": built.host.edge_count(),
                "ell": built.ell,
                "v1": built.v1,
                "v2": built.v2,
                "leftover": built.leftover,
                "m_count": built.m_sets.len(),
            });
            Ok((outcome, 0))
        }
        Command::CheckBerge { host, pattern } => {
            inputs.push(host.clone());
            inputs.push(pattern.clone());
            let h = load_hypergraph(host)?;
            let f = load_hypergraph(pattern)?;
            match contains_berge(&h, &f, cfg)? {
                Some(w) => {
                    let j = json!({ "core_map": w.core_map, "edge_map": w.edge_map });
                    println!("{}", serde_json::to_string(&j).unwrap());
                    Ok((json!({ "contains": true, "witness": j }), 0))
                }
                None => {
                    println!("FREE");
                    Ok((json!({ "contains": false }), 0))
                }
            }
        }
        Command::Complete { host, pattern, output } => {
            inputs.push(host.clone());
            inputs.push(pattern.clone());
            let h0 = load_hypergraph(host)?;
            let f = load_hypergraph(pattern)?;
            let (h, added) = greedy_complete(&h0, &f, cfg)?;
            std::fs::write(output, h.serialize())?;
            let log_path = output.with_extension("added.log");
            let mut log = String::new();
            for e in added.edges() {
                let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
                log.push_str(&line.join(" "));
                log.push('\n');
            }
            std::fs::write(&log_path, log)?;
            let (_, d_star) = degeneracy_order(&added);
            println!(
                "saturated host: {} edges ({} added, added part degeneracy {})",
                h.edge_count(),
                added.edge_count(),
                d_star
            );
            let outcome = json!({
                "output": output.display().to_string(),
                "added_log": log_path.display().to_string(),
                "edges": h.edge_count(),
                "added_edges": added.edge_count(),
                "added_degeneracy": d_star,
            });
            Ok((outcome, 0))
        }
        Command::SatNumber { n, k, pattern, m_cap, no_isomorphism_rejection, output } => {
            inputs.push(pattern.clone());
            let f = load_hypergraph(pattern)?;
            let opts = SatSearchOptions {
                m_cap: *m_cap,
                isomorphism_rejection: !no_isomorphism_rejection,
            };
            let (m, cert) = sat_bruteforce(*n, *k, &f, &opts, cfg)?;
            std::fs::write(output, cert.serialize())?;
            println!("{m}");
            let outcome = json!({
                "sat": m,
                "certificate": output.display().to_string(),
            });
            Ok((outcome, 0))
        }
        Command::TightReduce { host, r, l } => {
            inputs.push(host.clone());
            let h = load_hypergraph(host)?;
            let (out, _) = run_reduction(&h, *r, *l)?;
            let j = json!({
                "kind": match out.kind {
                    bergesat::tightpath::ReductionKind::BoundCertificate => "BOUND_CERTIFICATE",
                    bergesat::tightpath::ReductionKind::ExtractedPath => "EXTRACTED_PATH",
                },
                "c": out.c,
                "max_multiplicity": out.max_multiplicity,
                "witness": out.path_witness.as_ref().map(|w| json!({
                    "core_map": w.core_map,
                    "edge_map": w.edge_map,
                })),
            });
            println!("{}", serde_json::to_string(&j).unwrap());
            Ok((j, 0))
        }
        Command::VerifyPaper { pattern, k, n_from, n_to, freeness_only } => {
            inputs.push(pattern.clone());
            let f = load_hypergraph(pattern)?;
            let case = match case_select(&f, *k) {
                Ok(t) => t,
                Err(Error::Unsupported(msg)) => {
                    println!("UNSUPPORTED  {msg}");
                    return Ok((json!({ "case": "UNSUPPORTED", "detail": msg }), 0));
                }
                Err(e) => return Err(e),
            };
            let mut rows = Vec::new();
            let mut all_pass = true;
            for n in *n_from..=*n_to {
                let row = verify_one(&f, *k, n, *freeness_only, cfg);
                match row {
                    Ok(row) => {
                        let pass = row["pass"].as_bool().unwrap_or(false);
                        all_pass &= pass;
                        println!(
                            "n={n:<3} {}  {}",
                            if pass { "PASS" } else { "FAIL" },
                            row["detail"].as_str().unwrap_or("")
                        );
                        rows.push(row);
                    }
                    Err(Error::BadConstruction(msg)) => {
                        println!("n={n:<3} SKIP  {msg}");
                        rows.push(json!({ "n": n, "skip": msg }));
                    }
                    Err(e) => return Err(e),
                }
            }
            let outcome = json!({ "case": case.to_string(), "rows": rows, "pass": all_pass });
            Ok((outcome, if all_pass { 0 } else { 1 }))
        }
    }
}

fn verify_one(
    f: &Hypergraph,
    k: usize,
    n: usize,
    freeness_only: bool,
    cfg: &DetectorConfig,
) -> Result<serde_json::Value, Error> {
    let build = build_lemma_instance(f, k, n)?;
    let report = verify_lemma_freeness(&build, cfg)?;
    let mut pass = report.free;
    let mut detail = format!("case={} free={}", report.case, report.free);
    if !freeness_only && report.free {
        let (h, added) = greedy_complete(&build.host, f, cfg)?;
        let sat = is_saturated(&h, f, cfg)?;
        let bound = degeneracy_bound(&DegeneracyBoundInputs::from_lemma_build(&build));
        let (_, d_star) = degeneracy_order(&added);
        let degenerate_ok = bound.clamped || (d_star as u128) <= bound.d;
        let linear_ok = h.edge_count() as u128
            <= build.host.edge_count() as u128 + bound.d * n as u128;
        pass = pass && sat.saturated && degenerate_ok && linear_ok;
        detail.push_str(&format!(
            " saturated={} edges={} added={} d_star={} d={}{}",
            sat.saturated,
            h.edge_count(),
            added.edge_count(),
            d_star,
            bound.d,
            if bound.clamped { " (clamped)" } else { "" }
        ));
    }
    Ok(json!({ "n": n, "pass": pass, "detail": detail }))
}
