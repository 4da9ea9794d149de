//! Acceptance criteria, one line per criterion.
//!
//! Runs as a plain binary so every criterion reports even when an earlier
//! one fails. Exit status is non-zero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use bks_core::fixtures::{self, PROOF_SQUARE_INDICES};
use bks_core::metric::{
    decimal_distance, format_rational, histogram_with, rational, spectrum_with, BasisMetric, DistanceSpectrum,
};
use bks_core::pauli::{MagicConfiguration, MagicLabel};
use bks_core::proofs::{
    classify, enumerate_parity_proofs, is_basis_critical, is_colorable, paper_style_check_4q, search_4q,
    verify_bks_proof, SearchParams, DEFAULT_MAX_KERNEL_DIM,
};
use bks_core::rays::{catalogs_equivalent, enumerate_bases, paper_bases, paper_numbering};
use bks_core::symmetry::{aut_order, config_incidence_graph, crossing_graph, proof_family_crossing, Graph};
use bks_core::{Basis, IncidenceStructure, Rational, RayCatalog};
use num_bigint::BigUint;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

// ── Test-side oracles ────────────────────────────────────────────────────────

/// Dense Pauli matrix as a Kronecker product of 2 × 2 factors; `None` if
/// the operator has an odd number of Y factors (not real).
fn kron_matrix(word: &str) -> Option<Vec<Vec<i64>>> {
    let mut m = vec![vec![1i64]];
    let mut ys = 0;
    for ch in word.chars() {
        let f: [[i64; 2]; 2] = match ch {
            'I' => [[1, 0], [0, 1]],
            'X' => [[0, 1], [1, 0]],
            'Z' => [[1, 0], [0, -1]],
            // Y = i·[[0,-1],[1,0]]; the i factors pair up
            'Y' => {
                ys += 1;
                [[0, -1], [1, 0]]
            }
            _ => unreachable!(),
        };
        let n = m.len();
        let mut out = vec![vec![0i64; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                for a in 0..2 {
                    for b in 0..2 {
                        out[2 * i + a][2 * j + b] = m[i][j] * f[a][b];
                    }
                }
            }
        }
        m = out;
    }
    if ys % 2 == 1 {
        return None;
    }
    // i^ys = (−1)^(ys/2)
    if ys % 4 == 2 {
        m.iter_mut().flatten().for_each(|x| *x = -*x);
    }
    Some(m)
}

fn is_eigenvector(m: &[Vec<i64>], v: &[i64]) -> bool {
    let w: Vec<i64> = m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect();
    w == v || w.iter().zip(v).all(|(a, b)| *a == -b)
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Bengtsson D² straight from the overlap definition, in big rationals.
fn naive_distance_sq(c: &RayCatalog, a: &Basis, b: &Basis) -> Rational {
    let d = a.len() as i64;
    let inv_d = rational(1, d);
    let mut sum = rational(0, 1);
    for &i in a.ray_ids() {
        for &j in b.ray_ids() {
            let (u, v) = (c.ray(i).unwrap().coords(), c.ray(j).unwrap().coords());
            let o = rational(dot(u, v) * dot(u, v), dot(u, u) * dot(v, v));
            let t = o - &inv_d;
            sum += &t * &t;
        }
    }
    rational(1, 1) - sum / rational(d - 1, 1)
}

/// Checks a coloring directly against coordinates.
fn valid_coloring(c: &RayCatalog, bases: &[Basis], trues: &BTreeSet<usize>) -> bool {
    let exactly_one = bases.iter().all(|b| b.ray_ids().iter().filter(|r| trues.contains(r)).count() == 1);
    let t: Vec<usize> = trues.iter().copied().collect();
    let no_orth = t.iter().enumerate().all(|(k, &x)| {
        t[k + 1..].iter().all(|&y| dot(c.ray(x).unwrap().coords(), c.ray(y).unwrap().coords()) != 0)
    });
    exactly_one && no_orth
}

fn witness_ok(c: &RayCatalog, bases: &[Basis]) -> Result<bool, String> {
    let rays: Vec<usize> = bases.iter().flat_map(|b| b.ray_ids().iter().copied()).collect::<BTreeSet<_>>().into_iter().collect();
    match is_colorable(c, &rays, bases).map_err(err)? {
        Some(col) => Ok(valid_coloring(c, bases, &col.true_rays().into_iter().collect())),
        None => Ok(false),
    }
}

fn parse_rationals(list: &[&str]) -> Vec<Rational> {
    list.iter().map(|s| bks_core::metric::parse_rational(s).unwrap()).collect()
}

fn spectrum_text(s: &DistanceSpectrum) -> String {
    s.classes().iter().map(format_rational).collect::<Vec<_>>().join(",")
}

// ── Criteria ─────────────────────────────────────────────────────────────────

fn c01_catalog_regeneration() -> Outcome {
    for (n, label) in [(2, MagicLabel::Square2q), (3, MagicLabel::Pentagram3q)] {
        let reference = RayCatalog::paper(n).map_err(err)?;
        let generated = RayCatalog::generated(n).map_err(err)?;
        ensure(catalogs_equivalent(&reference, &generated), format!("n={n}: generated catalog differs"))?;
        // oracle: each context's dense matrices single out exactly d catalog rays
        let config = MagicConfiguration::new(label);
        let mut covered = BTreeSet::new();
        for ctx in &config.contexts {
            let mats: Vec<_> = ctx.iter().map(|op| kron_matrix(&op.to_string().replace('-', "")).unwrap()).collect();
            let eig: Vec<usize> = reference
                .rays()
                .iter()
                .filter(|r| mats.iter().all(|m| is_eigenvector(m, r.coords())))
                .map(|r| r.id)
                .collect();
            ensure(eig.len() == reference.dimension(), format!("n={n}: context {ctx:?} fixes {} rays", eig.len()))?;
            covered.extend(eig);
        }
        ensure(covered.len() == reference.len(), format!("n={n}: contexts cover {} rays", covered.len()))?;
    }
    Ok("24 and 40 rays regenerated".into())
}

fn c02_basis_counts() -> Outcome {
    let mut counts = Vec::new();
    for (n, expected) in [(2, 24), (3, 25), (4, 625)] {
        let c = RayCatalog::paper(n).map_err(err)?;
        let bases = enumerate_bases(&c);
        ensure(bases.len() == expected, format!("n={n}: {} bases", bases.len()))?;
        counts.push(bases.len());
        if n <= 3 {
            let listed = paper_bases(n).map_err(err)?;
            let a: BTreeSet<_> = listed.iter().collect();
            let b: BTreeSet<_> = bases.iter().collect();
            ensure(a == b, format!("n={n}: listed bases differ from enumeration"))?;
            let numbering = paper_numbering(n, &bases).map_err(err)?;
            for (k, &paper_id) in numbering.iter().enumerate() {
                ensure(listed[paper_id - 1] == bases[k], format!("n={n}: numbering map wrong at {k}"))?;
            }
        }
    }
    // oracle: brute-force 4-cliques of the two-qubit catalog
    let c = RayCatalog::paper(2).map_err(err)?;
    let o = |i: usize, j: usize| dot(c.ray(i).unwrap().coords(), c.ray(j).unwrap().coords()) == 0;
    let mut brute = 0;
    for a in 1..=24 {
        for b in a + 1..=24 {
            for x in b + 1..=24 {
                for y in x + 1..=24 {
                    if o(a, b) && o(a, x) && o(a, y) && o(b, x) && o(b, y) && o(x, y) {
                        brute += 1;
                    }
                }
            }
        }
    }
    ensure(brute == 24, format!("brute force found {brute} two-qubit bases"))?;
    let b7 = &paper_bases(2).map_err(err)?[6];
    ensure(b7 == &Basis::new([1, 2, 15, 16]), "basis 7 is not {1,2,15,16}")?;
    Ok(format!("{counts:?}"))
}

fn c03_distance_spectra() -> Outcome {
    let expected: [(usize, &[&str], &[&str]); 3] = [
        (2, &["1/3", "7/12", "2/3", "5/6", "1"], &["0.577", "0.763", "0.816", "0.912", "1.000"]),
        (3, &["3/7", "9/14", "6/7"], &["0.654", "0.801", "0.925"]),
        (4, &["1/5", "3/10", "2/5", "1/2", "3/5", "7/10", "4/5"], &["0.447", "0.547", "0.632", "0.707", "0.774", "0.836", "0.894"]),
    ];
    let mut report = Vec::new();
    for (n, classes, _) in expected {
        let c = RayCatalog::paper(n).map_err(err)?;
        let bases = enumerate_bases(&c);
        let metric = BasisMetric::new(&c);
        let s = spectrum_with(&metric, &bases).map_err(err)?;
        ensure(s.classes() == parse_rationals(classes).as_slice(), format!("n={n}: spectrum {}", spectrum_text(&s)))?;
        // oracle: naive overlap formula over all pairs (n ≤ 3) or a slice of pairs (n = 4)
        let limit = if n == 4 { 40 } else { bases.len() };
        for i in 0..limit {
            for j in i + 1..limit {
                let lib = metric.distance_sq(&bases[i], &bases[j]).map_err(err)?;
                ensure(lib == naive_distance_sq(&c, &bases[i], &bases[j]), format!("n={n}: pair ({i},{j}) disagrees"))?;
            }
        }
        report.push(format!("n={n} {{{}}}", spectrum_text(&s)));
    }
    // the printed three-place decimals are truncations of the square roots
    for (n, classes, decimals) in expected {
        for (q, shown) in parse_rationals(classes).iter().zip(decimals) {
            let six = decimal_distance(q, 6);
            ensure(six.starts_with(shown), format!("n={n}: sqrt({}) = {six} vs {shown}", format_rational(q)))?;
        }
    }
    Ok(report.join("; "))
}

/// Type label → (proof count, distinct histograms).
type CensusRows = BTreeMap<String, (usize, BTreeSet<Vec<usize>>)>;

fn census_rows(n: usize) -> Result<CensusRows, String> {
    let inc = IncidenceStructure::paper(n).map_err(err)?;
    let metric = BasisMetric::new(inc.catalog());
    let s = spectrum_with(&metric, inc.bases()).map_err(err)?;
    let mut proofs = enumerate_parity_proofs(&inc, DEFAULT_MAX_KERNEL_DIM).map_err(err)?;
    classify(&mut proofs, &s, &metric).map_err(err)?;
    let mut rows: BTreeMap<String, (usize, BTreeSet<Vec<usize>>)> = BTreeMap::new();
    for p in &proofs {
        let h = histogram_with(&metric, p.bases(), &s).map_err(err)?;
        ensure(2 * h.total() == p.l() * (p.l() - 1), format!("{}: 2Σ ≠ l(l−1)", p.type_label()))?;
        let row = rows.entry(p.type_label()).or_default();
        row.0 += 1;
        row.1.insert(h.counts.clone());
    }
    Ok(rows)
}

fn check_census(n: usize, table: &[(&str, usize, &[usize])]) -> Outcome {
    let rows = census_rows(n)?;
    ensure(rows.len() == table.len(), format!("types found: {:?}", rows.keys().collect::<Vec<_>>()))?;
    for (label, count, hist) in table {
        let (found, hists) = rows.get(*label).ok_or(format!("missing type {label}"))?;
        ensure(found == count, format!("{label}: {found} proofs, expected {count}"))?;
        let expected: BTreeSet<Vec<usize>> = [hist.to_vec()].into();
        ensure(hists == &expected, format!("{label}: histograms {hists:?}"))?;
    }
    let total: usize = rows.values().map(|r| r.0).sum();
    Ok(rows.iter().map(|(k, v)| format!("{k}:{}", v.0)).collect::<Vec<_>>().join(" ") + &format!(" total {total}"))
}

fn c04_census_two_qubits() -> Outcome {
    check_census(
        2,
        &[
            ("24-15", 16, &[18, 18, 9, 54, 6]),
            ("22-13A", 96, &[12, 18, 3, 42, 3]),
            ("22-13B", 144, &[12, 18, 4, 42, 2]),
            ("20-11A", 96, &[6, 18, 0, 30, 1]),
            ("20-11B", 144, &[6, 18, 1, 30, 0]),
            ("18-9", 16, &[0, 18, 0, 18, 0]),
        ],
    )
}

fn c05_census_three_qubits() -> Outcome {
    let out = check_census(3, &[("36-11", 320, &[4, 30, 21]), ("38-13", 640, &[12, 30, 26]), ("40-15", 64, &[20, 30, 55])])?;
    ensure(out.ends_with("total 1024"), "total is not 2^10")?;
    Ok(out)
}

fn c06_oracle_agreement() -> Outcome {
    let mut proofs = 0;
    for n in [2, 3] {
        let inc = IncidenceStructure::paper(n).map_err(err)?;
        for p in enumerate_parity_proofs(&inc, DEFAULT_MAX_KERNEL_DIM).map_err(err)? {
            ensure(verify_bks_proof(&p, inc.catalog()).map_err(err)?, format!("n={n}: {p} is colorable"))?;
            proofs += 1;
        }
    }
    ensure(proofs == 512 + 1024, format!("{proofs} parity proofs"))?;
    let mut witnesses = 0;
    for n in [2, 3, 4] {
        let c = RayCatalog::paper(n).map_err(err)?;
        for b in enumerate_bases(&c) {
            ensure(witness_ok(&c, std::slice::from_ref(&b))?, format!("n={n}: no witness for {:?}", b.ray_ids()))?;
            witnesses += 1;
        }
    }
    let c2 = RayCatalog::paper(2).map_err(err)?;
    for p in fixtures::proof_square().map_err(err)? {
        for k in 0..p.l() {
            let sub = p.without_basis(k);
            ensure(witness_ok(&c2, sub.bases())?, format!("{p} minus basis {k} has no witness"))?;
            witnesses += 1;
        }
    }
    Ok(format!("{proofs} proofs non-colorable, {witnesses} witnesses checked"))
}

fn c07_eighty_21() -> Outcome {
    let c = RayCatalog::paper(4).map_err(err)?;
    let bases = enumerate_bases(&c);
    let metric = BasisMetric::new(&c);
    let s = spectrum_with(&metric, &bases).map_err(err)?;
    let table: [(&str, [usize; 7]); 3] = [
        ("80-21", [1, 1, 14, 19, 60, 64, 51]),
        ("80-22", [1, 1, 17, 19, 65, 64, 64]),
        ("80-23", [1, 3, 17, 19, 76, 69, 68]),
    ];
    for (name, hist) in table {
        let p = fixtures::paper_proof(name).map_err(err)?;
        ensure(p.v() == 80 && p.l() == name[3..].parse::<usize>().unwrap(), format!("{name}: type {}", p.type_label()))?;
        ensure(verify_bks_proof(&p, &c).map_err(err)?, format!("{name} is colorable"))?;
        let h = histogram_with(&metric, p.bases(), &s).map_err(err)?;
        ensure(h.counts == hist, format!("{name}: histogram {h}"))?;
    }
    let p21 = fixtures::paper_proof("80-21").map_err(err)?;
    let still: Vec<usize> =
        (0..p21.l()).filter(|&k| verify_bks_proof(&p21.without_basis(k), &c).unwrap_or(false)).collect();
    ensure(
        is_basis_critical(&p21, &c).map_err(err)?,
        format!("80-21 not basis-critical: {} of 21 deletions stay non-colorable", still.len()),
    )?;
    Ok("80-21/22/23 non-colorable, histograms match, 80-21 basis-critical".into())
}

fn c08_paper_style_check() -> Outcome {
    let c = RayCatalog::paper(4).map_err(err)?;
    let p = fixtures::paper_proof("80-21").map_err(err)?;
    ensure(paper_style_check_4q(&p, &c).map_err(err)?, "enumeration found a surviving assignment")?;
    Ok("16^4 assignments refuted".into())
}

/// Shared-ray count → set of D² values over every pair of bases.
fn overlap_map(n: usize) -> Result<(BTreeMap<usize, BTreeSet<Rational>>, usize), String> {
    let c = RayCatalog::paper(n).map_err(err)?;
    let bases = enumerate_bases(&c);
    let metric = BasisMetric::new(&c);
    let pairs = metric.pairwise(&bases).map_err(err)?;
    let mut map: BTreeMap<usize, BTreeSet<Rational>> = BTreeMap::new();
    for (i, j, q) in &pairs {
        map.entry(bases[*i].shared(&bases[*j])).or_default().insert(q.clone());
    }
    Ok((map, pairs.len()))
}

fn map_text(map: &BTreeMap<usize, BTreeSet<Rational>>) -> String {
    let parts: Vec<String> = map
        .iter()
        .map(|(k, v)| format!("{k}->{{{}}}", v.iter().map(format_rational).collect::<Vec<_>>().join(",")))
        .collect();
    parts.join(" ")
}

fn c09_overlap_maps() -> Outcome {
    let set = |v: &[&str]| parse_rationals(v).into_iter().collect::<BTreeSet<_>>();
    let a = ["1/5", "3/10", "2/5", "1/2", "3/5", "7/10", "4/5"];
    let expected: [(usize, usize, BTreeMap<usize, BTreeSet<Rational>>); 3] = [
        (2, 276, [(0, set(&["5/6", "1"])), (1, set(&["7/12"])), (2, set(&["1/3"]))].into()),
        (3, 300, [(0, set(&["6/7"])), (2, set(&["9/14"])), (4, set(&["3/7"]))].into()),
        // 2k common rays → a_{7−k}
        (4, 195_000, (0..=6).map(|k| (2 * k, set(&[a[6 - k]]))).collect()),
    ];
    let mut failures = Vec::new();
    let mut report = Vec::new();
    for (n, pairs, want) in &expected {
        let (map, count) = overlap_map(*n)?;
        ensure(count == *pairs, format!("n={n}: {count} pairs"))?;
        if &map != want {
            failures.push(format!("n={n}: computed {} expected {}", map_text(&map), map_text(want)));
        }
        report.push(format!("n={n} {count} pairs"));
    }
    ensure(failures.is_empty(), failures.join("; "))?;
    Ok(report.join(", "))
}

fn c10_automorphisms() -> Outcome {
    let order = |g: &Graph| aut_order(g).map(|r| r.order).map_err(err);
    let checks: Vec<(&str, Graph, u64)> = vec![
        ("square2q", config_incidence_graph(&MagicConfiguration::new(MagicLabel::Square2q)), 72),
        ("pentagram3q", config_incidence_graph(&MagicConfiguration::new(MagicLabel::Pentagram3q)), 120),
        ("18-9 one-point crossing", crossing_graph(fixtures::paper_proof("18-9").map_err(err)?.bases(), 1), 72),
        ("36-11 family, 8 shared", proof_family_crossing(&fixtures::proofs_36_11_with_123().map_err(err)?, 8), 2304),
        ("18-9 square, 3 shared", proof_family_crossing(&fixtures::proof_square().map_err(err)?, 3), 1152),
        ("K6", Graph::complete(6), 720),
        ("C8", Graph::cycle(8), 16),
        ("empty 10", Graph::new(10), 3_628_800),
    ];
    for (name, g, expected) in &checks {
        let o = order(g)?;
        ensure(o == BigUint::from(*expected), format!("{name}: order {o}, expected {expected}"))?;
    }
    Ok(format!("{} orders match", checks.len()))
}

fn c11_structure() -> Outcome {
    let square = fixtures::proof_square().map_err(err)?;
    let mut overlaps = BTreeSet::new();
    for i in 0..square.len() {
        for j in i + 1..square.len() {
            let a: BTreeSet<_> = square[i].bases().iter().collect();
            overlaps.insert(square[j].bases().iter().filter(|b| a.contains(b)).count());
        }
    }
    ensure(overlaps == [3, 5].into(), format!("18-9 overlaps {overlaps:?}"))?;
    let inc = IncidenceStructure::paper(2).map_err(err)?;
    let lines: Vec<Vec<usize>> = (0..4)
        .map(|r| PROOF_SQUARE_INDICES[r].to_vec())
        .chain((0..4).map(|c| (0..4).map(|r| PROOF_SQUARE_INDICES[r][c]).collect()))
        .collect();
    for line in &lines {
        let bases: Vec<&Basis> = line.iter().map(|&i| inc.basis(i)).collect::<Result<_, _>>().map_err(err)?;
        let union: BTreeSet<usize> = bases.iter().flat_map(|b| b.ray_ids().iter().copied()).collect();
        let disjoint = bases.iter().map(|b| b.len()).sum::<usize>() == union.len();
        ensure(
            disjoint && union.len() == 24,
            format!("index bases {line:?} cover {} of 24 rays (disjoint: {disjoint})", union.len()),
        )?;
    }
    Ok("overlaps {3,5}; every index line partitions the 24 rays".into())
}

fn c12_search() -> Outcome {
    let inc = IncidenceStructure::paper(4).map_err(err)?;
    let mut best_shrunk = usize::MAX;
    let mut report = Vec::new();
    for seed in [1u64, 2, 3] {
        let o = search_4q(&inc, seed, SearchParams::default()).map_err(err)?;
        for p in [&o.found, &o.shrunk] {
            ensure(verify_bks_proof(p, inc.catalog()).map_err(err)?, format!("seed {seed}: returned set is colorable"))?;
        }
        ensure(o.found.l() <= 23, format!("seed {seed}: l = {}", o.found.l()))?;
        best_shrunk = best_shrunk.min(o.shrunk.l());
        report.push(format!("seed {seed}: l={} shrunk {}", o.found.l(), o.shrunk.l()));
    }
    ensure(best_shrunk <= 21, format!("best shrink {best_shrunk}"))?;
    Ok(report.join(", "))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("catalog regeneration", c01_catalog_regeneration),
        ("basis counts", c02_basis_counts),
        ("distance spectra", c03_distance_spectra),
        ("parity census n=2", c04_census_two_qubits),
        ("parity census n=3", c05_census_three_qubits),
        ("non-colorability oracle agreement", c06_oracle_agreement),
        ("80-21 verification", c07_eighty_21),
        ("quadruple enumeration check", c08_paper_style_check),
        ("overlap to distance maps", c09_overlap_maps),
        ("automorphism orders", c10_automorphisms),
        ("structural properties", c11_structure),
        ("randomized search", c12_search),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:2} PASS  {name} ({secs:.1}s): {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:2} FAIL  {name} ({secs:.1}s): {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
