//! Dense linear algebra over GF(2).

use crate::bitset::BitSet;

/// Row-major bit matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<BitSet>,
}

impl Gf2Matrix {
    pub fn new(cols: usize, rows: Vec<BitSet>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        Self { cols, rows }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    /// `M·x` over GF(2).
    pub fn mul_vec(&self, x: &BitSet) -> BitSet {
        BitSet::from_indices(
            self.rows.len(),
            self.rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.intersection_count(x) % 2 == 1)
                .map(|(i, _)| i),
        )
    }

    /// Reduced row echelon form; returns the pivot columns in order.
    fn rref(&self) -> (Vec<BitSet>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i].contains(c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.contains(c) {
                    row.xor_with(&pivot);
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{x : M·x = 0}`, one generator per free column.
    pub fn kernel(&self) -> Vec<BitSet> {
        let (rows, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut g = BitSet::new(self.cols);
                g.insert(free);
                for (row, &p) in rows.iter().zip(&pivots) {
                    if row.contains(free) {
                        g.insert(p);
                    }
                }
                g
            })
            .collect()
    }

    /// Whether `v` (a vector over the columns) lies in the row space.
    pub fn row_space_contains(&self, v: &BitSet) -> bool {
        let mut extended = self.rows.clone();
        extended.push(v.clone());
        Gf2Matrix::new(self.cols, extended).rank() == self.rank()
    }
}
