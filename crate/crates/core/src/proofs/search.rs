//! Seeded randomized search for small 4-qubit BKS proofs.
//!
//! A candidate basis set `B` must satisfy
//! (a) every distance class of the spectrum occurs between two of its bases,
//! (b) five of its bases partition the ray set,
//! (c) it admits no coloring.
//! Each restart draws a partition, adds random bases until (a) and (c) hold,
//! then deletes bases while (a)–(c) hold. The result is finally shrunk by
//! deletions that only keep (c).

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::metric::{BasisMetric, DistanceSpectrum};
use crate::rays::{Basis, RayCatalog};

use super::coloring::{ColoringProblem, Orthogonality};
use super::{IncidenceStructure, ProofSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchParams {
    /// Maximum number of partial partitions examined per restart.
    pub budget: u64,
    /// Restarts per call; the smallest result is kept.
    pub restarts: usize,
}

impl Default for SearchParams {
    fn default() -> Self {
        Self { budget: 1_000_000, restarts: 8 }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub seed: u64,
    /// Minimal under single deletions preserving (a)–(c).
    pub found: ProofSet,
    /// `found` after deletions preserving only non-colorability.
    pub shrunk: ProofSet,
    /// The restart (0-based) that produced the result.
    pub restart: usize,
    /// Partition nodes examined over all restarts.
    pub checks: u64,
}

struct Context<'a> {
    orth: Orthogonality,
    bases: &'a [Basis],
    masks: Vec<u128>,
    full: u128,
    /// Distance class index per ordered pair of bases.
    class: Vec<u8>,
    classes: usize,
}

impl<'a> Context<'a> {
    fn new(inc: &'a IncidenceStructure) -> Result<Self> {
        let catalog = inc.catalog();
        let bases = inc.bases();
        let orth = Orthogonality::new(catalog)?;
        let masks: Vec<u128> = bases.iter().map(|b| Orthogonality::mask(b.ray_ids().iter().copied())).collect();
        let full = Orthogonality::mask(1..=catalog.len());
        let metric = BasisMetric::new(catalog);
        let pairs = metric.pairwise(bases)?;
        let spectrum = DistanceSpectrum::new(pairs.iter().map(|(_, _, q)| q.clone()).collect());
        let m = bases.len();
        let mut class = vec![0u8; m * m];
        for (i, j, q) in &pairs {
            let c = spectrum.class_of(q)? as u8;
            class[i * m + j] = c;
            class[j * m + i] = c;
        }
        Ok(Self { orth, bases, masks, full, class, classes: spectrum.len() })
    }

    fn colorable(&self, set: &[usize]) -> Result<bool> {
        let bases: Vec<Basis> = set.iter().map(|&i| self.bases[i].clone()).collect();
        Ok(ColoringProblem::from_bases(&self.orth, &bases)?.is_colorable())
    }

    fn all_classes(&self, set: &[usize]) -> bool {
        let m = self.bases.len();
        let mut seen = 0u64;
        for (k, &i) in set.iter().enumerate() {
            for &j in &set[k + 1..] {
                seen |= 1 << self.class[i * m + j];
            }
        }
        seen.count_ones() as usize == self.classes
    }

    /// Some five members partition the ray set.
    fn has_partition(&self, set: &[usize]) -> bool {
        fn rec(ctx: &Context<'_>, set: &[usize], from: usize, covered: u128, depth: usize) -> bool {
            if depth == 5 {
                return covered == ctx.full;
            }
            (from..set.len()).any(|k| {
                let m = ctx.masks[set[k]];
                m & covered == 0 && rec(ctx, set, k + 1, covered | m, depth + 1)
            })
        }
        rec(self, set, 0, 0, 0)
    }

    fn partition(&self, rng: &mut ChaCha8Rng, budget: u64, checks: &mut u64) -> Option<Vec<usize>> {
        fn rec(
            ctx: &Context<'_>,
            rng: &mut ChaCha8Rng,
            chosen: &mut Vec<usize>,
            covered: u128,
            budget: u64,
            checks: &mut u64,
        ) -> bool {
            if chosen.len() == 5 {
                return covered == ctx.full;
            }
            let mut cand: Vec<usize> = (0..ctx.masks.len()).filter(|&i| ctx.masks[i] & covered == 0).collect();
            cand.shuffle(rng);
            for i in cand {
                if *checks >= budget {
                    return false;
                }
                *checks += 1;
                chosen.push(i);
                if rec(ctx, rng, chosen, covered | ctx.masks[i], budget, checks) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let mut chosen = Vec::with_capacity(5);
        rec(self, rng, &mut chosen, 0, budget, checks).then_some(chosen)
    }

    fn satisfies_all(&self, set: &[usize]) -> Result<bool> {
        Ok(self.all_classes(set) && self.has_partition(set) && !self.colorable(set)?)
    }

    /// Repeated random-order single deletions while `keep` holds.
    fn minimize(
        &self,
        set: &mut Vec<usize>,
        rng: &mut ChaCha8Rng,
        keep: impl Fn(&Self, &[usize]) -> Result<bool>,
    ) -> Result<()> {
        loop {
            let mut order = set.clone();
            order.shuffle(rng);
            let mut removed = false;
            for b in order {
                let trial: Vec<usize> = set.iter().copied().filter(|&x| x != b).collect();
                if keep(self, &trial)? {
                    *set = trial;
                    removed = true;
                }
            }
            if !removed {
                return Ok(());
            }
        }
    }

    fn proof(&self, set: &[usize]) -> ProofSet {
        ProofSet::from_bases(set.iter().map(|&i| self.bases[i].clone()).collect())
    }
}

/// Runs the search for one seed; deterministic in `(inc, seed, params)`.
pub fn search_4q(inc: &IncidenceStructure, seed: u64, params: SearchParams) -> Result<SearchOutcome> {
    let ctx = Context::new(inc)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = 0u64;
    let mut best: Option<(Vec<usize>, Vec<usize>, usize)> = None;
    for restart in 0..params.restarts {
        let mut spent = 0u64;
        let Some(mut set) = ctx.partition(&mut rng, params.budget, &mut spent) else {
            checks += spent;
            continue;
        };
        checks += spent;
        let mut rest: Vec<usize> = (0..ctx.bases.len()).filter(|i| !set.contains(i)).collect();
        rest.shuffle(&mut rng);
        let mut ok = false;
        for b in rest {
            set.push(b);
            if ctx.all_classes(&set) && !ctx.colorable(&set)? {
                ok = true;
                break;
            }
        }
        if !ok {
            continue;
        }
        ctx.minimize(&mut set, &mut rng, |c, s| c.satisfies_all(s))?;
        let mut small = set.clone();
        ctx.minimize(&mut small, &mut rng, |c, s| Ok(!c.colorable(s)?))?;
        let better = match &best {
            None => true,
            Some((f, s, _)) => (set.len(), small.len()) < (f.len(), s.len()),
        };
        if better {
            best = Some((set, small, restart));
        }
    }
    let (found, shrunk, restart) = best.ok_or(Error::SearchFailed(checks as usize))?;
    let (mut found, mut shrunk) = (ctx.proof(&found), ctx.proof(&shrunk));
    found.flags.bks_verified = true;
    shrunk.flags.bks_verified = true;
    Ok(SearchOutcome { seed, found, shrunk, restart, checks })
}

/// Greedy random-order basis deletion preserving non-colorability.
pub fn shrink(p: &ProofSet, catalog: &RayCatalog, seed: u64) -> Result<ProofSet> {
    let orth = Orthogonality::new(catalog)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bases = p.bases().to_vec();
    if ColoringProblem::from_bases(&orth, &bases)?.is_colorable() {
        return Err(Error::Precondition("set is colorable".into()));
    }
    loop {
        let mut order = bases.clone();
        order.shuffle(&mut rng);
        let before = bases.len();
        for b in order {
            let trial: Vec<Basis> = bases.iter().filter(|&x| *x != b).cloned().collect();
            if !ColoringProblem::from_bases(&orth, &trial)?.is_colorable() {
                bases = trial;
            }
        }
        if bases.len() == before {
            let mut out = ProofSet::from_bases(bases);
            out.flags.bks_verified = true;
            return Ok(out);
        }
    }
}
