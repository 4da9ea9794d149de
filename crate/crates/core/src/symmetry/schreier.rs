//! Schreier–Sims: order of a permutation group from generators.

use num_bigint::BigUint;

type Perm = Vec<usize>;

/// `a` then `b`.
fn compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&x| b[x]).collect()
}

fn inverse(a: &Perm) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

fn is_identity(a: &Perm) -> bool {
    a.iter().enumerate().all(|(i, &x)| i == x)
}

struct Level {
    point: usize,
    gens: Vec<Perm>,
    /// `transversal[b]` maps `point` to `b`, for `b` in the orbit.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(n: usize, point: usize) -> Self {
        let mut level = Self { point, gens: Vec::new(), transversal: vec![None; n] };
        level.rebuild();
        level
    }

    fn rebuild(&mut self) {
        let n = self.transversal.len();
        self.transversal = vec![None; n];
        self.transversal[self.point] = Some((0..n).collect());
        let mut queue = vec![self.point];
        while let Some(c) = queue.pop() {
            let uc = self.transversal[c].clone().expect("orbit point");
            for s in &self.gens {
                let d = s[c];
                if self.transversal[d].is_none() {
                    self.transversal[d] = Some(compose(&uc, s));
                    queue.push(d);
                }
            }
        }
    }

    fn orbit(&self) -> Vec<usize> {
        (0..self.transversal.len()).filter(|&b| self.transversal[b].is_some()).collect()
    }
}

/// Residue of `g` and the first level where sifting stopped.
fn strip(levels: &[Level], mut g: Perm) -> (Perm, usize) {
    for (l, level) in levels.iter().enumerate() {
        let x = g[level.point];
        match &level.transversal[x] {
            Some(u) => g = compose(&g, &inverse(u)),
            None => return (g, l),
        }
    }
    (g, levels.len())
}

/// Order of the group generated by permutations of `0..n`.
pub fn group_order(n: usize, generators: &[Vec<usize>]) -> BigUint {
    let gens: Vec<Perm> = generators.iter().filter(|g| !is_identity(g)).cloned().collect();
    let mut levels: Vec<Level> = Vec::new();
    for g in &gens {
        if levels.iter().all(|l| g[l.point] == l.point) {
            let moved = (0..n).find(|&i| g[i] != i).expect("non-identity");
            levels.push(Level::new(n, moved));
        }
    }
    for i in 0..levels.len() {
        let fixed: Vec<usize> = levels[..i].iter().map(|l| l.point).collect();
        levels[i].gens = gens.iter().filter(|g| fixed.iter().all(|&p| g[p] == p)).cloned().collect();
        levels[i].rebuild();
    }

    let mut i = levels.len();
    while i > 0 {
        let lvl = i - 1;
        let mut restart = None;
        'scan: for c in levels[lvl].orbit() {
            let uc = levels[lvl].transversal[c].clone().expect("orbit point");
            for s in levels[lvl].gens.clone() {
                let d = s[c];
                let ud = levels[lvl].transversal[d].clone().expect("orbit point");
                let y = compose(&compose(&uc, &s), &inverse(&ud));
                let (h, j) = strip(&levels, y);
                if j < levels.len() || !is_identity(&h) {
                    if j == levels.len() {
                        let moved = (0..n).find(|&x| h[x] != x).expect("non-identity");
                        levels.push(Level::new(n, moved));
                    }
                    for level in &mut levels[lvl + 1..=j] {
                        level.gens.push(h.clone());
                        level.rebuild();
                    }
                    restart = Some(j + 1);
                    break 'scan;
                }
            }
        }
        i = restart.unwrap_or(i - 1);
    }
    levels.iter().fold(BigUint::from(1u32), |acc, l| acc * l.orbit().len())
}
