use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::symmetry::Graph;

/// All cliques with exactly `size` vertices, each as an increasing vertex
/// list, in lexicographic order.
pub fn find_cliques(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    let n = g.vertex_count();
    let mut out: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut found = Vec::new();
            let mut stack = vec![v];
            extend(g, size, &mut stack, later_neighbors(g, v, g.neighbors(v)), &mut found);
            found
        })
        .collect();
    out.sort();
    out
}

fn later_neighbors(g: &Graph, v: usize, within: &BitSet) -> BitSet {
    let mut s = within.clone();
    for u in 0..=v.min(g.vertex_count() - 1) {
        s.remove(u);
    }
    s
}

fn extend(g: &Graph, size: usize, stack: &mut Vec<usize>, candidates: BitSet, found: &mut Vec<Vec<usize>>) {
    if stack.len() == size {
        found.push(stack.clone());
        return;
    }
    if stack.len() + candidates.count() < size {
        return;
    }
    for v in candidates.iter() {
        let next = later_neighbors(g, v, &candidates.intersection(g.neighbors(v)));
        stack.push(v);
        extend(g, size, stack, next, found);
        stack.pop();
    }
}
