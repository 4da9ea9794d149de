use std::collections::BTreeMap;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::metric::{histogram_with, BasisMetric, DistanceSpectrum, Histogram};

use super::{IncidenceStructure, ProofSet};

/// Kernels larger than this are refused by [`enumerate_parity_proofs`].
pub const DEFAULT_MAX_KERNEL_DIM: usize = 24;

/// Odd number of bases and every ray covered an even number of times.
pub fn is_parity_proof(p: &ProofSet) -> bool {
    p.l() % 2 == 1 && p.multiplicities().values().all(|m| m % 2 == 0)
}

/// Generators of `{χ : M·χ = 0}` where `M` is the ray × basis incidence matrix.
pub fn kernel_gf2(inc: &IncidenceStructure) -> Vec<BitSet> {
    inc.matrix().kernel()
}

/// An odd-weight kernel vector exists iff the all-ones vector is not in the
/// row space of the incidence matrix.
pub fn odd_kernel_exists(inc: &IncidenceStructure) -> bool {
    let m = inc.matrix();
    !m.row_space_contains(&BitSet::full(m.col_count()))
}

/// Every odd-weight kernel vector, as proofs sorted by basis index set.
pub fn enumerate_parity_proofs(inc: &IncidenceStructure, max_dim: usize) -> Result<Vec<ProofSet>> {
    let kernel = kernel_gf2(inc);
    if kernel.len() > max_dim {
        return Err(Error::Capacity { dim: kernel.len(), max: max_dim });
    }
    let mut current = BitSet::new(inc.bases().len());
    let mut out = Vec::new();
    // Gray code walk over all 2^k combinations
    for step in 1u64..(1u64 << kernel.len()) {
        current.xor_with(&kernel[step.trailing_zeros() as usize]);
        if current.count() % 2 == 1 {
            let indices: Vec<usize> = current.iter().map(|j| j + 1).collect();
            let mut p = inc.proof(&indices)?;
            p.flags.parity = true;
            out.push(p);
        }
    }
    out.sort_by(|a, b| a.indices.cmp(&b.indices));
    Ok(out)
}

/// `(v, l, subtype)` key for census tables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeKey {
    pub v: usize,
    pub l: usize,
    pub subtype: Option<String>,
}

impl fmt::Display for TypeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}{}", self.v, self.l, self.subtype.as_deref().unwrap_or(""))
    }
}

/// Subtype label from the histogram signature.
///
/// With the five-class two-qubit spectrum, 20-11 and 22-13 split by the
/// `(a3, a5)` counts: (0,1)/(1,0) and (3,3)/(4,2) give A/B respectively.
pub fn subtype_of(v: usize, l: usize, h: &Histogram) -> Result<Option<String>> {
    if h.counts.len() != 5 {
        return Ok(None);
    }
    let sig = (h.counts[2], h.counts[4]);
    let label = match ((v, l), sig) {
        ((20, 11), (0, 1)) | ((22, 13), (3, 3)) => "A",
        ((20, 11), (1, 0)) | ((22, 13), (4, 2)) => "B",
        ((20, 11), _) | ((22, 13), _) => return Err(Error::Classification(h.counts.clone())),
        _ => return Ok(None),
    };
    Ok(Some(label.to_string()))
}

/// Assigns subtypes in place and counts proofs per `(v, l, subtype)`.
pub fn classify(
    proofs: &mut [ProofSet],
    s: &DistanceSpectrum,
    metric: &BasisMetric<'_>,
) -> Result<BTreeMap<TypeKey, usize>> {
    let mut counts = BTreeMap::new();
    for p in proofs.iter_mut() {
        let h = histogram_with(metric, p.bases(), s)?;
        p.subtype = subtype_of(p.v(), p.l(), &h)?;
        let key = TypeKey { v: p.v(), l: p.l(), subtype: p.subtype.clone() };
        *counts.entry(key).or_default() += 1;
    }
    Ok(counts)
}
