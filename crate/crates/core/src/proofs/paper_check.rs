//! Enumeration-style non-colorability certificate.
//!
//! Fix four mutually disjoint bases of the proof and try every way of making
//! one ray of each true. After propagating those choices, an assignment is
//! refuted if it already contradicts, or if some fifth basis of the proof has
//! no ray that can be made true without a contradiction. The proof is
//! certified when every assignment is refuted.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rays::RayCatalog;

use super::coloring::{ColoringProblem, Orthogonality};
use super::ProofSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaperCheckReport {
    /// Positions (0-based, in the proof's basis order) of the disjoint quadruple.
    pub quadruple: [usize; 4],
    /// Number of quadruple assignments examined.
    pub assignments: u64,
    /// Assignments refuted within the fifth-basis enumeration.
    pub refuted: u64,
}

impl PaperCheckReport {
    pub fn certified(&self) -> bool {
        self.assignments == self.refuted
    }
}

fn disjoint_quadruple(p: &ProofSet) -> Option<[usize; 4]> {
    let b = p.bases();
    let l = b.len();
    for i in 0..l {
        for j in i + 1..l {
            if !b[i].is_disjoint(&b[j]) {
                continue;
            }
            for k in j + 1..l {
                if !b[k].is_disjoint(&b[i]) || !b[k].is_disjoint(&b[j]) {
                    continue;
                }
                for m in k + 1..l {
                    if [i, j, k].iter().all(|&x| b[m].is_disjoint(&b[x])) {
                        return Some([i, j, k, m]);
                    }
                }
            }
        }
    }
    None
}

pub fn paper_style_enumeration(p: &ProofSet, catalog: &RayCatalog) -> Result<PaperCheckReport> {
    let quadruple = disjoint_quadruple(p)
        .ok_or_else(|| Error::Precondition("no four mutually disjoint bases".into()))?;
    let orth = Orthogonality::new(catalog)?;
    let problem = ColoringProblem::from_bases(&orth, p.bases())?;
    let (t0, f0) = problem.initial();
    let rays: Vec<Vec<usize>> = quadruple
        .iter()
        .map(|&q| p.bases()[q].ray_ids().iter().map(|id| id - 1).collect())
        .collect();
    let exact = problem.exact_masks();

    let refuted_by_fifth = |t: u128, f: u128| {
        exact.iter().any(|&m| {
            if m & t != 0 {
                return false;
            }
            let mut cand = m & !f;
            while cand != 0 {
                let r = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                if problem.assume(t, f, &[r]).is_some() {
                    return false;
                }
            }
            true
        })
    };

    let refuted: u64 = rays[0]
        .par_iter()
        .map(|&a| {
            let mut count = 0u64;
            for &b in &rays[1] {
                for &c in &rays[2] {
                    for &d in &rays[3] {
                        match problem.assume(t0, f0, &[a, b, c, d]) {
                            None => count += 1,
                            Some((t, f)) if refuted_by_fifth(t, f) => count += 1,
                            Some(_) => {}
                        }
                    }
                }
            }
            count
        })
        .sum();
    let assignments = rays.iter().map(|r| r.len() as u64).product();
    Ok(PaperCheckReport { quadruple, assignments, refuted })
}

/// True iff the enumeration refutes every assignment of the disjoint quadruple.
pub fn paper_style_check_4q(p: &ProofSet, catalog: &RayCatalog) -> Result<bool> {
    Ok(paper_style_enumeration(p, catalog)?.certified())
}
