//! BKS proofs: incidence structures, parity proofs, colorability and search.

mod cliques;
mod coloring;
pub mod gf2;
mod paper_check;
mod parity;
mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::rays::{enumerate_bases, paper_bases, Basis, RayCatalog};

pub use cliques::find_cliques;
pub use coloring::{
    is_basis_critical, is_colorable, is_colorable_without_ray, is_ray_critical, verify_bks_proof,
    verify_bases, Coloring, ColoringProblem, Orthogonality,
};
pub use paper_check::{paper_style_check_4q, paper_style_enumeration, PaperCheckReport};
pub use parity::{
    classify, enumerate_parity_proofs, is_parity_proof, kernel_gf2, odd_kernel_exists, subtype_of,
    TypeKey, DEFAULT_MAX_KERNEL_DIM,
};
pub use search::{search_4q, shrink, SearchOutcome, SearchParams};

/// Ray × basis membership over a catalog, with 1-based basis numbering.
#[derive(Clone, Debug)]
pub struct IncidenceStructure {
    catalog: RayCatalog,
    bases: Vec<Basis>,
    columns: Vec<BitSet>,
}

impl IncidenceStructure {
    pub fn new(catalog: RayCatalog, bases: Vec<Basis>) -> Result<Self> {
        for b in &bases {
            b.validate(&catalog)?;
        }
        let columns = bases
            .iter()
            .map(|b| BitSet::from_indices(catalog.len(), b.ray_ids().iter().map(|id| id - 1)))
            .collect();
        Ok(Self { catalog, bases, columns })
    }

    /// Reference catalog and bases; the published basis order for n = 2, 3
    /// and lexicographic order for n = 4.
    pub fn paper(n: usize) -> Result<Self> {
        let catalog = RayCatalog::paper(n)?;
        let bases = match n {
            2 | 3 => paper_bases(n)?,
            _ => enumerate_bases(&catalog),
        };
        Self::new(catalog, bases)
    }

    pub fn catalog(&self) -> &RayCatalog {
        &self.catalog
    }

    pub fn bases(&self) -> &[Basis] {
        &self.bases
    }

    /// Basis by 1-based index.
    pub fn basis(&self, index: usize) -> Result<&Basis> {
        index
            .checked_sub(1)
            .and_then(|i| self.bases.get(i))
            .ok_or_else(|| Error::Precondition(format!("no basis with index {index}")))
    }

    /// 1-based index of a basis.
    pub fn index_of(&self, b: &Basis) -> Option<usize> {
        self.bases.iter().position(|x| x == b).map(|i| i + 1)
    }

    /// Column `j` as a ray bitset (0-based ray positions).
    pub fn column(&self, j: usize) -> &BitSet {
        &self.columns[j]
    }

    /// The incidence matrix with one row per ray.
    pub fn matrix(&self) -> gf2::Gf2Matrix {
        let rows = (0..self.catalog.len())
            .map(|r| {
                BitSet::from_indices(
                    self.bases.len(),
                    self.columns.iter().enumerate().filter(|(_, c)| c.contains(r)).map(|(j, _)| j),
                )
            })
            .collect();
        gf2::Gf2Matrix::new(self.bases.len(), rows)
    }

    /// Builds a proof set from 1-based basis indices.
    pub fn proof(&self, indices: &[usize]) -> Result<ProofSet> {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let bases = idx.iter().map(|&i| self.basis(i).cloned()).collect::<Result<Vec<_>>>()?;
        let mut p = ProofSet::from_bases(bases);
        p.indices = Some(idx);
        Ok(p)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofFlags {
    pub parity: bool,
    pub bks_verified: bool,
    pub ray_critical: bool,
    pub basis_critical: bool,
}

/// A candidate `v-l` proof: `l` bases covering `v` distinct rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofSet {
    bases: Vec<Basis>,
    /// 1-based basis indices in the owning incidence structure, when known.
    pub indices: Option<Vec<usize>>,
    pub flags: ProofFlags,
    pub subtype: Option<String>,
}

impl ProofSet {
    /// A proof given by explicit bases; order is normalised.
    pub fn from_bases(mut bases: Vec<Basis>) -> Self {
        bases.sort();
        bases.dedup();
        Self { bases, indices: None, flags: ProofFlags::default(), subtype: None }
    }

    pub fn bases(&self) -> &[Basis] {
        &self.bases
    }

    pub fn l(&self) -> usize {
        self.bases.len()
    }

    pub fn rays(&self) -> BTreeSet<usize> {
        self.bases.iter().flat_map(|b| b.ray_ids().iter().copied()).collect()
    }

    pub fn v(&self) -> usize {
        self.rays().len()
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for id in self.bases.iter().flat_map(|b| b.ray_ids()) {
            *m.entry(*id).or_default() += 1;
        }
        m
    }

    /// `"v-l"`, with the subtype appended when set.
    pub fn type_label(&self) -> String {
        format!("{}-{}{}", self.v(), self.l(), self.subtype.as_deref().unwrap_or(""))
    }

    /// Key used for deduplication: the sorted list of sorted ray sets.
    pub fn key(&self) -> &[Basis] {
        &self.bases
    }

    pub fn without_basis(&self, k: usize) -> ProofSet {
        let mut bases = self.bases.clone();
        bases.remove(k);
        ProofSet::from_bases(bases)
    }

    pub fn with_basis(&self, b: Basis) -> ProofSet {
        let mut bases = self.bases.clone();
        bases.push(b);
        ProofSet::from_bases(bases)
    }

    /// Positions of the bases within an incidence structure.
    pub fn locate(&self, inc: &IncidenceStructure) -> Result<Vec<usize>> {
        self.bases
            .iter()
            .map(|b| {
                inc.index_of(b).ok_or_else(|| Error::InvalidBasis {
                    ids: b.ray_ids().to_vec(),
                    reason: "not a basis of the incidence structure".into(),
                })
            })
            .collect()
    }

    /// Fills in every flag; criticality is only meaningful for verified proofs.
    pub fn analyze(&mut self, catalog: &RayCatalog) -> Result<()> {
        self.flags.parity = parity::is_parity_proof(self);
        self.flags.bks_verified = verify_bks_proof(self, catalog)?;
        if self.flags.bks_verified {
            self.flags.basis_critical = is_basis_critical(self, catalog)?;
            self.flags.ray_critical = is_ray_critical(self, catalog)?;
        }
        Ok(())
    }
}

impl fmt::Display for ProofSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.indices {
            Some(idx) => write!(f, "{} {:?}", self.type_label(), idx),
            None => write!(f, "{} ({} bases)", self.type_label(), self.l()),
        }
    }
}
