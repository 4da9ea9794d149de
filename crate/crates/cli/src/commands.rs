//! Subcommand implementations. Each returns a [`Report`]; input problems
//! are returned as `Err` and map to exit status 2.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use bks_core::fixtures::{self, reference_bases};
use bks_core::io::{from_json, BasisFile, CatalogFile, ProofFile};
use bks_core::metric::{decimal_distance, format_rational, histogram_with, BasisMetric, DistanceSpectrum};
use bks_core::pauli::{MagicConfiguration, MagicLabel};
use bks_core::proofs::{
    classify, enumerate_parity_proofs, is_basis_critical, is_colorable, is_ray_critical, kernel_gf2,
    odd_kernel_exists, search_4q, verify_bks_proof, SearchParams, DEFAULT_MAX_KERNEL_DIM,
};
use bks_core::symmetry::{aut_order, config_incidence_graph, crossing_graph, proof_family_crossing, Graph};
use bks_core::{Basis, Error, IncidenceStructure, ProofSet, RayCatalog};
use serde_json::{json, Value};

use crate::report::{Report, Status};

pub type CmdResult = Result<Report, String>;

fn fail(e: Error) -> String {
    e.to_string()
}

fn ids(b: &Basis) -> String {
    let parts: Vec<String> = b.ray_ids().iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn coords(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(" "))
}

fn check_qubits(n: usize) -> Result<usize, String> {
    match n {
        2..=4 => Ok(n),
        _ => Err(fail(Error::UnsupportedQubits(n))),
    }
}

/// The reference catalog and its bases (published order for n = 2, 3).
fn incidence(n: usize) -> Result<IncidenceStructure, String> {
    IncidenceStructure::paper(check_qubits(n)?).map_err(fail)
}

/// Catalog-wide spectrum; class labels a1, a2, … follow it.
fn catalog_spectrum(metric: &BasisMetric<'_>, bases: &[Basis]) -> Result<(DistanceSpectrum, Vec<usize>), String> {
    let pairs = metric.pairwise(bases).map_err(fail)?;
    let s = DistanceSpectrum::new(pairs.iter().map(|(_, _, q)| q.clone()).collect());
    let mut counts = vec![0; s.len()];
    for (_, _, q) in &pairs {
        counts[s.class_of(q).map_err(fail)?] += 1;
    }
    Ok((s, counts))
}

/// Where a proof comes from: a JSON file or a named reference proof.
pub enum ProofSource<'a> {
    File(&'a Path),
    Named(&'a str),
}

/// Accepts a bare value or the `result` field of a `bks` JSON report.
fn read_json(path: &Path) -> Result<Value, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let v: Value = from_json(&text).map_err(fail)?;
    Ok(match v {
        Value::Object(mut m) if m.contains_key("result") && m.contains_key("tool") => m.remove("result").unwrap_or_default(),
        other => other,
    })
}

fn proof_from_file(file: ProofFile) -> Result<(RayCatalog, ProofSet), String> {
    let n = file.qubits().map_err(fail)?;
    let catalog = RayCatalog::paper(n).map_err(fail)?;
    if file.catalog != catalog.name {
        return Err(format!("proof refers to catalog {:?}; expected {:?}", file.catalog, catalog.name));
    }
    let p = file.to_proof().map_err(fail)?;
    for b in p.bases() {
        b.validate(&catalog).map_err(fail)?;
    }
    Ok((catalog, p))
}

pub fn load_proof(src: &ProofSource<'_>) -> Result<(RayCatalog, ProofSet), String> {
    match src {
        ProofSource::Named(name) => {
            let n = fixtures::proof_qubits(name).map_err(fail)?;
            Ok((RayCatalog::paper(n).map_err(fail)?, fixtures::paper_proof(name).map_err(fail)?))
        }
        ProofSource::File(path) => {
            let file: ProofFile = serde_json::from_value(read_json(path)?).map_err(|e| e.to_string())?;
            proof_from_file(file)
        }
    }
}

pub fn rays(qubits: usize, generated: bool) -> CmdResult {
    let n = check_qubits(qubits)?;
    let c = if generated { RayCatalog::generated(n) } else { RayCatalog::paper(n) }.map_err(fail)?;
    let mut text = format!("{} ({} rays, dimension {})\n", c.name, c.len(), c.dimension());
    let mut rows = vec![std::iter::once("id".to_string()).chain((1..=c.dimension()).map(|k| format!("x{k}"))).collect()];
    for r in c.rays() {
        let _ = writeln!(text, "{:>3}  {}", r.id, coords(r.coords()));
        rows.push(std::iter::once(r.id.to_string()).chain(r.coords().iter().map(ToString::to_string)).collect());
    }
    let mut v = serde_json::to_value(CatalogFile::from_catalog(&c)).expect("catalog json");
    v["name"] = json!(c.name);
    Ok(Report::new(Status::Ok, text, v).with_csv(rows))
}

pub fn bases(qubits: usize) -> CmdResult {
    let inc = incidence(qubits)?;
    let name = inc.catalog().name.clone();
    let mut text = format!("{} ({} bases)\n", name, inc.bases().len());
    let mut rows = vec![vec!["index".to_string(), "rays".to_string()]];
    for (k, b) in inc.bases().iter().enumerate() {
        let _ = writeln!(text, "{:>3}  {}", k + 1, ids(b));
        let list: Vec<String> = b.ray_ids().iter().map(ToString::to_string).collect();
        rows.push(vec![(k + 1).to_string(), list.join(" ")]);
    }
    let file = BasisFile { catalog: name, bases: inc.bases().to_vec() };
    Ok(Report::new(Status::Ok, text, serde_json::to_value(file).expect("basis json")).with_csv(rows))
}

pub fn distances(qubits: Option<usize>, proof: Option<&Path>) -> CmdResult {
    let loaded = proof.map(|p| load_proof(&ProofSource::File(p))).transpose()?;
    let n = match (&loaded, qubits) {
        (Some((c, _)), Some(q)) if c.n != q => return Err(format!("--qubits {q} disagrees with the {}-qubit proof", c.n)),
        (Some((c, _)), _) => c.n,
        (None, Some(q)) => q,
        (None, None) => return Err("either --qubits or --proof is required".into()),
    };
    let inc = incidence(n)?;
    let metric = BasisMetric::new(inc.catalog());
    let (s, all_counts) = catalog_spectrum(&metric, inc.bases())?;
    let (counts, scope) = match &loaded {
        Some((_, p)) => (histogram_with(&metric, p.bases(), &s).map_err(fail)?.counts, p.type_label()),
        None => (all_counts, format!("all {} bases", inc.bases().len())),
    };
    let mut text = format!("{} ({scope}), {} pairs\n", inc.catalog().name, counts.iter().sum::<usize>());
    let mut rows = vec![["class_label", "dist_sq", "dist", "count"].map(String::from).to_vec()];
    let mut classes = Vec::new();
    for (k, q) in s.classes().iter().enumerate() {
        let label = DistanceSpectrum::label(k);
        let (sq, dist) = (format_rational(q), decimal_distance(q, 6));
        let _ = writeln!(text, "{label:<4} D^2 = {sq:<6} D = {dist}  count {}", counts[k]);
        rows.push(vec![label.clone(), sq.clone(), dist, counts[k].to_string()]);
        classes.push(json!({"label": label, "dist_sq": sq, "count": counts[k]}));
    }
    let v = json!({"catalog": inc.catalog().name, "scope": scope, "classes": classes});
    Ok(Report::new(Status::Ok, text, v).with_csv(rows))
}

fn check_type_filter(t: &str) -> Result<(), String> {
    let bad = || format!("bad proof type {t:?}; expected V-L with an optional subtype letter, e.g. 20-11A");
    let (v, l) = t.split_once('-').ok_or_else(bad)?;
    let l = l.strip_suffix(|c: char| c.is_ascii_uppercase()).unwrap_or(l);
    if v.parse::<usize>().is_err() || l.parse::<usize>().is_err() {
        return Err(bad());
    }
    Ok(())
}

/// Enumerated and classified parity proofs of a two- or three-qubit catalog.
fn census(inc: &IncidenceStructure) -> Result<(Vec<ProofSet>, DistanceSpectrum, BasisMetric<'_>), String> {
    let metric = BasisMetric::new(inc.catalog());
    let (s, _) = catalog_spectrum(&metric, inc.bases())?;
    let mut proofs = enumerate_parity_proofs(inc, DEFAULT_MAX_KERNEL_DIM).map_err(fail)?;
    classify(&mut proofs, &s, &metric).map_err(fail)?;
    Ok((proofs, s, metric))
}

pub fn parity_proofs(qubits: usize, type_filter: Option<&str>) -> CmdResult {
    if let Some(t) = type_filter {
        check_type_filter(t)?;
    }
    let inc = incidence(qubits)?;
    let name = inc.catalog().name.clone();
    if qubits == 4 {
        let dim = kernel_gf2(&inc).len();
        let odd = odd_kernel_exists(&inc);
        let text = format!(
            "{name}: kernel dimension {dim} exceeds the enumeration limit {DEFAULT_MAX_KERNEL_DIM}\nodd-weight kernel vector exists: {}\n",
            if odd { "yes" } else { "no" }
        );
        let v = json!({"catalog": name, "kernel_dim": dim, "enumerated": false, "odd_kernel_exists": odd});
        let rows = vec![vec!["kernel_dim".into(), "odd_kernel_exists".into()], vec![dim.to_string(), odd.to_string()]];
        return Ok(Report::new(Status::Ok, text, v).with_csv(rows));
    }
    let (proofs, _, _) = census(&inc)?;
    let mut counts: BTreeMap<(usize, usize, String), usize> = BTreeMap::new();
    for p in &proofs {
        *counts.entry((p.v(), p.l(), p.type_label())).or_default() += 1;
    }
    let mut text = format!("{name}: {} parity proofs\n", proofs.len());
    let mut rows = vec![vec!["type".to_string(), "count".to_string()]];
    let mut by_type = serde_json::Map::new();
    for ((_, _, label), count) in &counts {
        let _ = writeln!(text, "{label:<8} {count}");
        rows.push(vec![label.clone(), count.to_string()]);
        by_type.insert(label.clone(), json!(count));
    }
    let mut v = json!({"catalog": name, "counts": by_type, "total": proofs.len()});
    let mut status = Status::Ok;
    if let Some(t) = type_filter {
        let selected: Vec<&ProofSet> = proofs.iter().filter(|p| p.type_label() == t).collect();
        let _ = writeln!(text, "\n{t}: {} proofs (basis indices)", selected.len());
        rows = vec![vec!["type".to_string(), "bases".to_string()]];
        let mut list = Vec::new();
        for p in &selected {
            let idx = p.indices.clone().unwrap_or_default();
            let parts: Vec<String> = idx.iter().map(ToString::to_string).collect();
            let _ = writeln!(text, "  {}", parts.join(" "));
            rows.push(vec![t.to_string(), parts.join(" ")]);
            list.push(json!(idx));
        }
        v["type"] = json!(t);
        v["proofs"] = json!(list);
        if selected.is_empty() {
            status = Status::Negative;
        }
    }
    Ok(Report::new(status, text, v).with_csv(rows))
}

pub fn verify(src: &ProofSource<'_>) -> CmdResult {
    let (catalog, p) = load_proof(src)?;
    let rays: Vec<usize> = p.rays().into_iter().collect();
    let witness = is_colorable(&catalog, &rays, p.bases()).map_err(fail)?;
    let verdict = if witness.is_some() { "colorable" } else { "non-colorable" };
    let mut text = format!("{} over {}: {verdict}\n", p.type_label(), catalog.name);
    let mut v = json!({"catalog": catalog.name, "type": p.type_label(), "v": p.v(), "l": p.l(), "verdict": verdict});
    if let Some(w) = &witness {
        let on = w.true_rays();
        let parts: Vec<String> = on.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "witness (true rays): {}", parts.join(" "));
        v["witness"] = json!(on);
    }
    let status = if witness.is_some() { Status::Negative } else { Status::Ok };
    Ok(Report::new(status, text, v))
}

pub fn critical(src: &ProofSource<'_>) -> CmdResult {
    let (catalog, p) = load_proof(src)?;
    if !verify_bks_proof(&p, &catalog).map_err(fail)? {
        let text = format!("{} over {}: colorable, criticality not defined\n", p.type_label(), catalog.name);
        let v = json!({"catalog": catalog.name, "type": p.type_label(), "verdict": "colorable"});
        return Ok(Report::new(Status::Negative, text, v));
    }
    let basis_critical = is_basis_critical(&p, &catalog).map_err(fail)?;
    let ray_critical = is_ray_critical(&p, &catalog).map_err(fail)?;
    let mut survivors = Vec::new();
    for k in 0..p.l() {
        if verify_bks_proof(&p.without_basis(k), &catalog).map_err(fail)? {
            survivors.push(k + 1);
        }
    }
    let mut text = format!(
        "{} over {}: non-colorable\nbasis-critical: {basis_critical}\nray-critical: {ray_critical}\n",
        p.type_label(),
        catalog.name
    );
    for &k in &survivors {
        let _ = writeln!(text, "still non-colorable without basis {k} {}", ids(&p.bases()[k - 1]));
    }
    let v = json!({
        "catalog": catalog.name,
        "type": p.type_label(),
        "verdict": "non-colorable",
        "basis_critical": basis_critical,
        "ray_critical": ray_critical,
        "non_colorable_deletions": survivors,
    });
    Ok(Report::new(Status::Ok, text, v))
}

fn proof_summary(catalog: &RayCatalog, p: &ProofSet) -> Result<Value, String> {
    let mut p = p.clone();
    p.analyze(catalog).map_err(fail)?;
    Ok(serde_json::to_value(ProofFile::from_proof(&catalog.name, &p)).expect("proof json"))
}

pub fn search4q(seed: u64, params: SearchParams, out: Option<&Path>) -> CmdResult {
    let inc = incidence(4)?;
    let catalog = inc.catalog().clone();
    let outcome = match search_4q(&inc, seed, params) {
        Ok(o) => o,
        Err(Error::SearchFailed(restarts)) => {
            let text = format!("no proof found after {restarts} restarts (seed {seed}, budget {})\n", params.budget);
            let v = json!({"found": Value::Null, "restarts": restarts, "budget": params.budget});
            return Ok(Report::new(Status::Negative, text, v));
        }
        Err(e) => return Err(fail(e)),
    };
    let found = proof_summary(&catalog, &outcome.found)?;
    let shrunk = proof_summary(&catalog, &outcome.shrunk)?;
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&found).expect("proof json") + "\n";
        std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    let mut text = format!(
        "seed {seed}: found {} on restart {} ({} partition nodes)\nshrunk to {}\n",
        outcome.found.type_label(),
        outcome.restart,
        outcome.checks,
        outcome.shrunk.type_label()
    );
    for (name, p) in [("found", &outcome.found), ("shrunk", &outcome.shrunk)] {
        let _ = writeln!(text, "{name}:");
        for b in p.bases() {
            let _ = writeln!(text, "  {}", ids(b));
        }
    }
    let v = json!({
        "budget": params.budget,
        "restarts": params.restarts,
        "restart": outcome.restart,
        "checks": outcome.checks,
        "found": found,
        "shrunk": shrunk,
    });
    Ok(Report::new(Status::Ok, text, v))
}

/// Graph selection for `aut`.
pub enum AutTarget<'a> {
    Config(&'a str),
    /// A proof file (bases crossing by shared rays) or an array of proof
    /// files (proofs crossing by shared bases).
    Crossing(&'a Path, usize),
    Named(&'a str, usize),
    Family(&'a str, usize),
}

fn aut_graph(target: &AutTarget<'_>) -> Result<(Graph, String), String> {
    Ok(match target {
        AutTarget::Config(name) => {
            let label: MagicLabel = name.parse().map_err(fail)?;
            (config_incidence_graph(&MagicConfiguration::new(label)), format!("{name} incidence graph"))
        }
        AutTarget::Named(name, k) => {
            let (_, p) = load_proof(&ProofSource::Named(name))?;
            (crossing_graph(p.bases(), *k), format!("{name} bases sharing {k} rays"))
        }
        AutTarget::Family(name, k) => {
            let proofs = match *name {
                "square" => fixtures::proof_square(),
                "proofsbis" => fixtures::proofs_36_11_with_123(),
                _ => return Err(format!("unknown family {name:?}; expected square or proofsbis")),
            }
            .map_err(fail)?;
            (proof_family_crossing(&proofs, *k), format!("{name} family, proofs sharing {k} bases"))
        }
        AutTarget::Crossing(path, k) => match read_json(path)? {
            Value::Array(items) => {
                let proofs = items
                    .into_iter()
                    .map(|item| {
                        let file: ProofFile = serde_json::from_value(item).map_err(|e| e.to_string())?;
                        proof_from_file(file).map(|(_, p)| p)
                    })
                    .collect::<Result<Vec<_>, String>>()?;
                (proof_family_crossing(&proofs, *k), format!("{} proofs sharing {k} bases", proofs.len()))
            }
            other => {
                let file: ProofFile = serde_json::from_value(other).map_err(|e| e.to_string())?;
                let (_, p) = proof_from_file(file)?;
                (crossing_graph(p.bases(), *k), format!("{} bases sharing {k} rays", p.type_label()))
            }
        },
    })
}

pub fn aut(target: &AutTarget<'_>) -> CmdResult {
    let (g, what) = aut_graph(target)?;
    let report = aut_order(&g).map_err(fail)?;
    let mut text = format!(
        "{what}: {} vertices, {} edges\norder: {}\ngenerators: {}\n",
        g.vertex_count(),
        g.edge_count(),
        report.order,
        report.generators.len()
    );
    for p in &report.generators {
        let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "  [{}]", parts.join(" "));
    }
    let mut v = serde_json::to_value(&report).expect("aut json");
    v["graph"] = json!({"description": what, "vertices": g.vertex_count(), "edges": g.edge_count()});
    Ok(Report::new(Status::Ok, text, v))
}

pub fn emit_tables(qubits: usize) -> CmdResult {
    let inc = incidence(qubits)?;
    let mut entries: BTreeMap<(usize, usize, String, Vec<usize>), usize> = BTreeMap::new();
    let classes = if qubits == 4 {
        let metric = BasisMetric::new(inc.catalog());
        let (s, _) = catalog_spectrum(&metric, inc.bases())?;
        for name in ["80-21", "80-22", "80-23"] {
            let p = fixtures::paper_proof(name).map_err(fail)?;
            let h = histogram_with(&metric, p.bases(), &s).map_err(fail)?;
            entries.insert((p.v(), p.l(), p.type_label(), h.counts), 1);
        }
        s.len()
    } else {
        let (proofs, s, metric) = census(&inc)?;
        for p in &proofs {
            let h = histogram_with(&metric, p.bases(), &s).map_err(fail)?;
            *entries.entry((p.v(), p.l(), p.type_label(), h.counts)).or_default() += 1;
        }
        s.len()
    };
    let mut header = vec!["type".to_string(), "count".to_string()];
    header.extend((0..classes).map(DistanceSpectrum::label));
    header.push("total".into());
    let mut text = format!("{}\n", header.join("\t"));
    let mut rows = vec![header];
    let mut list = Vec::new();
    for ((_, _, label, counts), n) in &entries {
        let total: usize = counts.iter().sum();
        let mut row = vec![label.clone(), n.to_string()];
        row.extend(counts.iter().map(ToString::to_string));
        row.push(total.to_string());
        let _ = writeln!(text, "{}", row.join("\t"));
        rows.push(row);
        list.push(json!({"type": label, "count": n, "histogram": counts, "total": total}));
    }
    let v = json!({"catalog": inc.catalog().name, "rows": list});
    Ok(Report::new(Status::Ok, text, v).with_csv(rows))
}

pub fn paper_proof(name: &str) -> CmdResult {
    let n = fixtures::proof_qubits(name).map_err(fail)?;
    let catalog = RayCatalog::paper(n).map_err(fail)?;
    let bases = reference_bases(name).map_err(fail)?;
    let p = ProofSet::from_bases(bases.clone());
    let file = ProofFile {
        catalog: catalog.name.clone(),
        bases: bases.iter().map(|b| b.ray_ids().to_vec()).collect(),
        v: p.v(),
        l: p.l(),
        flags: Default::default(),
    };
    let mut text = format!("{name} over {}: {} rays, {} bases\n", catalog.name, p.v(), p.l());
    for (k, b) in bases.iter().enumerate() {
        let _ = writeln!(text, "{:>3}  {}", k + 1, ids(b));
    }
    Ok(Report::new(Status::Ok, text, serde_json::to_value(file).expect("proof json")))
}

