//! BKS colorability by backtracking with unit propagation.
//!
//! A coloring marks rays true or false so that every complete basis has
//! exactly one true ray and no two orthogonal rays are both true. The
//! orthogonality constraint ranges over every pair in the ray set, not only
//! pairs sharing a basis.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rays::{inner, Basis, RayCatalog};

use super::ProofSet;

/// Catalogs up to this size are supported by the 128-bit masks.
pub const MAX_COLORING_RAYS: usize = 128;

/// Orthogonality masks over a whole catalog (bit `i` is ray id `i + 1`).
#[derive(Clone, Debug)]
pub struct Orthogonality {
    adj: Vec<u128>,
    dimension: usize,
}

impl Orthogonality {
    pub fn new(catalog: &RayCatalog) -> Result<Self> {
        let rays = catalog.rays();
        if rays.len() > MAX_COLORING_RAYS {
            return Err(Error::Precondition(format!(
                "colorability supports at most {MAX_COLORING_RAYS} rays"
            )));
        }
        let mut adj = vec![0u128; rays.len()];
        for i in 0..rays.len() {
            for j in i + 1..rays.len() {
                if inner(&rays[i], &rays[j])? == 0 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Ok(Self { adj, dimension: catalog.dimension() })
    }

    pub fn mask(ids: impl IntoIterator<Item = usize>) -> u128 {
        ids.into_iter().fold(0, |m, id| m | 1u128 << (id - 1))
    }

    pub fn ray_count(&self) -> usize {
        self.adj.len()
    }

    fn check_ids(&self, ids: &[usize]) -> Result<()> {
        match ids.iter().find(|&&id| id == 0 || id > self.adj.len()) {
            Some(&id) => Err(Error::UnknownRay(id)),
            None => Ok(()),
        }
    }
}

/// A colorability instance over a subset of catalog rays.
#[derive(Clone, Debug)]
pub struct ColoringProblem<'a> {
    orth: &'a Orthogonality,
    present: u128,
    exact: Vec<u128>,
}

impl<'a> ColoringProblem<'a> {
    /// Rays outside `ray_ids` are dropped from every basis; a basis left with
    /// fewer than `d` rays no longer demands a true ray.
    pub fn new(orth: &'a Orthogonality, ray_ids: &[usize], bases: &[Basis]) -> Result<Self> {
        orth.check_ids(ray_ids)?;
        let present = Orthogonality::mask(ray_ids.iter().copied());
        let mut exact = Vec::with_capacity(bases.len());
        for b in bases {
            orth.check_ids(b.ray_ids())?;
            let m = Orthogonality::mask(b.ray_ids().iter().copied()) & present;
            if m.count_ones() as usize == orth.dimension {
                exact.push(m);
            }
        }
        exact.sort_unstable();
        exact.dedup();
        Ok(Self { orth, present, exact })
    }

    /// The ray set is the union of the bases.
    pub fn from_bases(orth: &'a Orthogonality, bases: &[Basis]) -> Result<Self> {
        let rays: BTreeSet<usize> = bases.iter().flat_map(|b| b.ray_ids().iter().copied()).collect();
        Self::new(orth, &rays.into_iter().collect::<Vec<_>>(), bases)
    }

    /// Mask of rays set true in a valid coloring, if one exists.
    pub fn solve(&self) -> Option<u128> {
        self.search(0, !self.present)
    }

    pub fn is_colorable(&self) -> bool {
        self.solve().is_some()
    }

    #[inline]
    fn set_true(&self, t: &mut u128, f: &mut u128, r: usize) -> bool {
        let adj = self.orth.adj[r];
        if adj & *t != 0 || *f & (1 << r) != 0 {
            return false;
        }
        *t |= 1 << r;
        *f |= adj & self.present;
        true
    }

    fn propagate(&self, mut t: u128, mut f: u128) -> Option<(u128, u128)> {
        loop {
            let mut changed = false;
            for &b in &self.exact {
                if b & t != 0 {
                    continue;
                }
                let cand = b & !f;
                match cand.count_ones() {
                    0 => return None,
                    1 => {
                        if !self.set_true(&mut t, &mut f, cand.trailing_zeros() as usize) {
                            return None;
                        }
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return Some((t, f));
            }
        }
    }

    fn search(&self, t: u128, f: u128) -> Option<u128> {
        let (t, f) = self.propagate(t, f)?;
        let branch = self
            .exact
            .iter()
            .filter(|&&b| b & t == 0)
            .map(|&b| b & !f)
            .min_by_key(|c| c.count_ones());
        let Some(mut cand) = branch else {
            return Some(t);
        };
        let mut f = f;
        while cand != 0 {
            let r = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let (mut t2, mut f2) = (t, f);
            if self.set_true(&mut t2, &mut f2, r) {
                if let Some(sol) = self.search(t2, f2) {
                    return Some(sol);
                }
            }
            f |= 1 << r;
        }
        None
    }

    /// Checks a true-mask against every constraint.
    pub fn is_valid(&self, t: u128) -> bool {
        if t & !self.present != 0 {
            return false;
        }
        let exact_ok = self.exact.iter().all(|&b| (b & t).count_ones() == 1);
        let mut rest = t;
        let mut orth_ok = true;
        while rest != 0 {
            let r = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            orth_ok &= self.orth.adj[r] & t == 0;
        }
        exact_ok && orth_ok
    }

    /// Assigns `trues` and propagates; `None` on an immediate contradiction.
    pub(crate) fn assume(&self, t: u128, f: u128, trues: &[usize]) -> Option<(u128, u128)> {
        let (mut t, mut f) = (t, f);
        for &r in trues {
            if !self.set_true(&mut t, &mut f, r) {
                return None;
            }
        }
        self.propagate(t, f)
    }

    pub(crate) fn initial(&self) -> (u128, u128) {
        (0, !self.present)
    }

    pub(crate) fn exact_masks(&self) -> &[u128] {
        &self.exact
    }
}

/// A satisfying truth assignment over a ray set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: BTreeMap<usize, bool>,
}

impl Coloring {
    fn from_mask(ray_ids: impl IntoIterator<Item = usize>, t: u128) -> Self {
        let assignment = ray_ids.into_iter().map(|id| (id, t & (1 << (id - 1)) != 0)).collect();
        Self { assignment }
    }

    pub fn true_rays(&self) -> Vec<usize> {
        self.assignment.iter().filter(|(_, &v)| v).map(|(&k, _)| k).collect()
    }
}

/// A valid coloring of `ray_ids` under `bases`, or `None` when the system is
/// a BKS proof.
pub fn is_colorable(catalog: &RayCatalog, ray_ids: &[usize], bases: &[Basis]) -> Result<Option<Coloring>> {
    let orth = Orthogonality::new(catalog)?;
    let problem = ColoringProblem::new(&orth, ray_ids, bases)?;
    Ok(problem.solve().map(|t| Coloring::from_mask(ray_ids.iter().copied(), t)))
}

/// True iff the bases (over the union of their rays) admit no coloring.
pub fn verify_bases(catalog: &RayCatalog, bases: &[Basis]) -> Result<bool> {
    let orth = Orthogonality::new(catalog)?;
    Ok(!ColoringProblem::from_bases(&orth, bases)?.is_colorable())
}

pub fn verify_bks_proof(p: &ProofSet, catalog: &RayCatalog) -> Result<bool> {
    verify_bases(catalog, p.bases())
}

/// Colorability after deleting one ray from the proof's ray set.
pub fn is_colorable_without_ray(p: &ProofSet, catalog: &RayCatalog, ray: usize) -> Result<Option<Coloring>> {
    let rays: Vec<usize> = p.rays().into_iter().filter(|&r| r != ray).collect();
    is_colorable(catalog, &rays, p.bases())
}

/// Every `(l−1)`-basis subset is colorable.
pub fn is_basis_critical(p: &ProofSet, catalog: &RayCatalog) -> Result<bool> {
    let orth = Orthogonality::new(catalog)?;
    let results: Vec<bool> = (0..p.l())
        .into_par_iter()
        .map(|k| {
            let sub = p.without_basis(k);
            ColoringProblem::from_bases(&orth, sub.bases()).map(|pr| pr.is_colorable())
        })
        .collect::<Result<_>>()?;
    Ok(results.into_iter().all(|c| c))
}

/// Deleting any single covered ray leaves a colorable system.
pub fn is_ray_critical(p: &ProofSet, catalog: &RayCatalog) -> Result<bool> {
    let orth = Orthogonality::new(catalog)?;
    let rays: Vec<usize> = p.rays().into_iter().collect();
    let results: Vec<bool> = rays
        .par_iter()
        .map(|&r| {
            let kept: Vec<usize> = rays.iter().copied().filter(|&x| x != r).collect();
            ColoringProblem::new(&orth, &kept, p.bases()).map(|pr| pr.is_colorable())
        })
        .collect::<Result<_>>()?;
    Ok(results.into_iter().all(|c| c))
}
