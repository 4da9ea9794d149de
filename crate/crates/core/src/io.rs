//! JSON file schemas for catalogs, basis lists and proofs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::proofs::{ProofFlags, ProofSet};
use crate::rays::{Basis, CatalogSource, RayCatalog};

/// `{n, rays}` with rays in id order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub n: usize,
    pub rays: Vec<Vec<i64>>,
}

impl CatalogFile {
    pub fn from_catalog(c: &RayCatalog) -> Self {
        Self { n: c.n, rays: c.coords() }
    }

    pub fn into_catalog(self, name: &str) -> Result<RayCatalog> {
        RayCatalog::from_coords(self.n, self.rays, CatalogSource::File, name)
    }
}

/// `{catalog, bases}` with bases as ray-id lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisFile {
    pub catalog: String,
    pub bases: Vec<Basis>,
}

/// `{catalog, bases, v, l, flags}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofFile {
    pub catalog: String,
    pub bases: Vec<Vec<usize>>,
    pub v: usize,
    pub l: usize,
    #[serde(default)]
    pub flags: ProofFlags,
}

impl ProofFile {
    pub fn from_proof(catalog: &str, p: &ProofSet) -> Self {
        Self {
            catalog: catalog.to_string(),
            bases: p.bases().iter().map(|b| b.ray_ids().to_vec()).collect(),
            v: p.v(),
            l: p.l(),
            flags: p.flags,
        }
    }

    /// Rebuilds the proof; stored `v` and `l` must agree with the bases.
    pub fn to_proof(&self) -> Result<ProofSet> {
        let mut p = ProofSet::from_bases(self.bases.iter().map(|b| Basis::new(b.iter().copied())).collect());
        if p.v() != self.v || p.l() != self.l {
            return Err(Error::Parse(format!(
                "proof file says {}-{} but its bases give {}-{}",
                self.v,
                self.l,
                p.v(),
                p.l()
            )));
        }
        p.flags = self.flags;
        Ok(p)
    }

    /// Qubit count implied by the basis size.
    pub fn qubits(&self) -> Result<usize> {
        match self.bases.first().map(Vec::len) {
            Some(4) => Ok(2),
            Some(8) => Ok(3),
            Some(16) => Ok(4),
            other => Err(Error::Parse(format!("unsupported basis size {other:?}"))),
        }
    }
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable value")
}
