use crate::bitset::BitSet;

/// Simple undirected graph with bitset adjacency and optional vertex colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
    colors: Vec<usize>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self { adj: vec![BitSet::new(n); n], colors: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::new(n);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|a| (a, (a + 1) % n)))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Self-loops are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a].insert(b);
            self.adj[b].insert(a);
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().filter(move |&b| b > a).map(move |b| (a, b)))
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn set_color(&mut self, v: usize, color: usize) {
        self.colors[v] = color;
    }

    pub fn with_colors(mut self, colors: Vec<usize>) -> Self {
        assert_eq!(colors.len(), self.adj.len());
        self.colors = colors;
        self
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.vertex_count();
        let mut g = Self::new(n);
        for (a, b) in self.edges() {
            g.add_edge(perm[a], perm[b]);
        }
        for (&p, &c) in perm.iter().zip(&self.colors) {
            g.colors[p] = c;
        }
        g
    }

    /// True iff `perm` preserves adjacency and colors.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.vertex_count();
        if perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return false;
            }
        }
        (0..n).all(|v| {
            self.colors[v] == self.colors[perm[v]]
                && self.adj[v].count() == self.adj[perm[v]].count()
                && self.adj[v].iter().all(|u| self.adj[perm[v]].contains(perm[u]))
        })
    }
}
