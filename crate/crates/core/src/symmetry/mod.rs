//! Crossing graphs, configuration incidence graphs and automorphism orders.

mod graph;
mod schreier;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::MagicConfiguration;
use crate::proofs::ProofSet;
use crate::rays::RayCatalog;

pub use graph::Graph;
pub use schreier::group_order;

/// Practical vertex bound for [`aut_order`].
pub const MAX_AUT_VERTICES: usize = 400;

fn shared_sorted<T: Ord>(a: &[T], b: &[T]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// One vertex per item; an edge joins items sharing exactly `k` elements.
/// Items must be sorted.
pub fn crossing_graph<T: Ord, S: AsRef<[T]>>(items: &[S], k: usize) -> Graph {
    let mut g = Graph::new(items.len());
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if shared_sorted(items[i].as_ref(), items[j].as_ref()) == k {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Crossing graph of proofs by the number of bases they share.
pub fn proof_family_crossing(proofs: &[ProofSet], overlap: usize) -> Graph {
    let items: Vec<&[_]> = proofs.iter().map(|p| p.bases()).collect();
    crossing_graph(&items, overlap)
}

/// Distinct pairwise overlap sizes realized in a proof family.
pub fn realized_overlaps(proofs: &[ProofSet]) -> Vec<usize> {
    let mut seen = std::collections::BTreeSet::new();
    for i in 0..proofs.len() {
        for j in i + 1..proofs.len() {
            seen.insert(shared_sorted(proofs[i].bases(), proofs[j].bases()));
        }
    }
    seen.into_iter().collect()
}

/// Bipartite operator/context membership graph. Operator vertices come
/// first (color 0, one per distinct unsigned operator), then contexts
/// (color 1).
pub fn config_incidence_graph(c: &MagicConfiguration) -> Graph {
    let ops = c.operators();
    let index: BTreeMap<_, _> = ops.iter().enumerate().map(|(i, o)| (o.unsigned(), i)).collect();
    let n = ops.len() + c.contexts.len();
    let mut g = Graph::new(n);
    for (k, ctx) in c.contexts.iter().enumerate() {
        for op in ctx {
            g.add_edge(index[&op.unsigned()], ops.len() + k);
        }
    }
    let colors = (0..n).map(|v| usize::from(v >= ops.len())).collect();
    g.with_colors(colors)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutReport {
    #[serde(serialize_with = "order_string")]
    pub order: BigUint,
    /// Each generator maps vertex `v` to `generator[v]`.
    pub generators: Vec<Vec<usize>>,
}

fn order_string<S: serde::Serializer>(order: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&order.to_string())
}

type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbor counts into every cell until stable. The result
/// depends only on the ordered partition up to isomorphism.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let n = g.vertex_count();
    loop {
        let mut cell_of = vec![0usize; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut next = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<(usize, usize)>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
                    for u in g.neighbors(v).iter() {
                        *counts.entry(cell_of[u]).or_default() += 1;
                    }
                    (counts.into_iter().collect(), v)
                })
                .collect();
            keyed.sort();
            let mut group = vec![keyed[0].1];
            for w in keyed.windows(2) {
                if w[0].0 != w[1].0 {
                    next.push(std::mem::take(&mut group));
                    changed = true;
                }
                group.push(w[1].1);
            }
            next.push(group);
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn initial_partition(g: &Graph) -> Partition {
    let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        by_color.entry(g.colors()[v]).or_default().push(v);
    }
    by_color.into_values().collect()
}

/// First smallest non-singleton cell.
fn target_cell(cells: &Partition) -> Option<usize> {
    (0..cells.len()).filter(|&i| cells[i].len() > 1).min_by_key(|&i| (cells[i].len(), i))
}

fn individualize(g: &Graph, cells: &Partition, t: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..t]);
    out.push(vec![v]);
    out.push(cells[t].iter().copied().filter(|&u| u != v).collect());
    out.extend_from_slice(&cells[t + 1..]);
    refine(g, out)
}

fn shape(cells: &Partition) -> Vec<usize> {
    cells.iter().map(Vec::len).collect()
}

struct AutSearch<'g> {
    g: &'g Graph,
    /// Nodes along the leftmost path; the last one is discrete.
    path: Vec<Partition>,
    targets: Vec<usize>,
}

impl AutSearch<'_> {
    fn leaf_perm(&self, leaf: &Partition) -> Vec<usize> {
        let first = self.path.last().expect("nonempty path");
        let mut perm = vec![0; self.g.vertex_count()];
        for (a, b) in first.iter().zip(leaf) {
            perm[a[0]] = b[0];
        }
        perm
    }

    /// An automorphism mapping the leftmost leaf into the subtree of `cells`.
    fn find(&self, cells: Partition, depth: usize) -> Option<Vec<usize>> {
        if shape(&cells) != shape(&self.path[depth]) {
            return None;
        }
        let Some(t) = target_cell(&cells) else {
            let perm = self.leaf_perm(&cells);
            return self.g.is_automorphism(&perm).then_some(perm);
        };
        cells[t].iter().find_map(|&u| self.find(individualize(self.g, &cells, t, u), depth + 1))
    }
}

fn orbit(n: usize, generators: &[Vec<usize>], v: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for p in generators {
            if !seen[p[x]] {
                seen[p[x]] = true;
                stack.push(p[x]);
            }
        }
    }
    seen
}

/// Exact order of the color-preserving automorphism group, by individualization
/// and refinement with orbit–stabilizer accounting along the leftmost path.
pub fn aut_order(g: &Graph) -> Result<AutReport> {
    let n = g.vertex_count();
    if n > MAX_AUT_VERTICES {
        return Err(Error::GraphTooLarge(n, MAX_AUT_VERTICES));
    }
    let mut search = AutSearch { g, path: vec![refine(g, initial_partition(g))], targets: Vec::new() };
    while let Some(t) = target_cell(search.path.last().expect("nonempty path")) {
        let node = search.path.last().expect("nonempty path");
        let next = individualize(g, node, t, node[t][0]);
        search.targets.push(t);
        search.path.push(next);
    }
    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut order = BigUint::from(1u32);
    for level in (0..search.targets.len()).rev() {
        let node = &search.path[level];
        let cell = &node[search.targets[level]];
        let v = cell[0];
        let mut in_orbit = orbit(n, &generators, v);
        for &w in &cell[1..] {
            if in_orbit[w] {
                continue;
            }
            let child = individualize(g, node, search.targets[level], w);
            if let Some(perm) = search.find(child, level + 1) {
                generators.push(perm);
                in_orbit = orbit(n, &generators, v);
            }
        }
        order *= in_orbit.iter().filter(|&&b| b).count();
    }
    Ok(AutReport { order, generators })
}

/// Ray-id permutations (0-based) induced by signed coordinate permutations
/// that map the catalog onto itself. Supported for dimension at most 4.
pub fn signed_coordinate_symmetries(c: &RayCatalog) -> Result<Vec<Vec<usize>>> {
    let d = c.dimension();
    if d > 4 {
        return Err(Error::Precondition(format!("dimension {d} too large for exhaustive signed permutations")));
    }
    let mut coords: Vec<usize> = (0..d).collect();
    let mut perms = Vec::new();
    permutations(&mut coords, 0, &mut perms);
    let mut out = Vec::new();
    for p in &perms {
        for signs in 0u32..(1 << d) {
            let image: Option<Vec<usize>> = c
                .rays()
                .iter()
                .map(|r| {
                    let mut w = vec![0i64; d];
                    for (i, &x) in r.coords().iter().enumerate() {
                        w[p[i]] = if signs >> i & 1 == 1 { -x } else { x };
                    }
                    c.find(&w).map(|id| id - 1)
                })
                .collect();
            if let Some(img) = image {
                if !out.contains(&img) {
                    out.push(img);
                }
            }
        }
    }
    Ok(out)
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}
