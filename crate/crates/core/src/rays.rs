//! Ray catalogs, exact orthogonality and maximal orthogonal bases.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures::data;
use crate::metric::Rational;
use crate::pauli::{joint_eigenbasis, MagicConfiguration, MagicLabel};
use crate::proofs::find_cliques;
use crate::symmetry::Graph;

/// Primitive form with the first nonzero entry positive.
pub fn canonical_coords(v: &[i64]) -> Result<Vec<i64>> {
    let first = *v.iter().find(|&&x| x != 0).ok_or(Error::ZeroVector)?;
    let g = v.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    let s = if first < 0 { -g } else { g };
    Ok(v.iter().map(|x| x / s).collect())
}

/// A ray with its 1-based catalog id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ray {
    pub id: usize,
    coords: Vec<i64>,
}

impl Ray {
    pub fn new(id: usize, coords: &[i64]) -> Result<Self> {
        Ok(Self { id, coords: canonical_coords(coords)? })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn norm_sq(&self) -> i64 {
        self.coords.iter().map(|x| x * x).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CatalogSource {
    Paper,
    Generated,
    File,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayCatalog {
    pub n: usize,
    pub name: String,
    pub source: CatalogSource,
    rays: Vec<Ray>,
}

impl RayCatalog {
    /// Builds a catalog from raw coordinates; ids are assigned 1, 2, … in order.
    pub fn from_coords(
        n: usize,
        coords: Vec<Vec<i64>>,
        source: CatalogSource,
        name: impl Into<String>,
    ) -> Result<Self> {
        let d = 1usize << n;
        let mut seen = BTreeSet::new();
        let mut rays = Vec::with_capacity(coords.len());
        for (i, c) in coords.iter().enumerate() {
            if c.len() != d {
                return Err(Error::Dimension(c.len(), d));
            }
            let ray = Ray::new(i + 1, c)?;
            if !seen.insert(ray.coords.clone()) {
                return Err(Error::Parse(format!("ray {} duplicates an earlier ray", i + 1)));
            }
            rays.push(ray);
        }
        Ok(Self { n, name: name.into(), source, rays })
    }

    /// The verbatim 24-, 40- or 80-ray catalog for `n` = 2, 3 or 4.
    pub fn paper(n: usize) -> Result<Self> {
        fn rows<const W: usize>(r: &[[i8; W]]) -> Vec<Vec<i64>> {
            r.iter().map(|row| row.iter().map(|&x| i64::from(x)).collect()).collect()
        }
        let (coords, name) = match n {
            2 => (rows(&data::RAYS_24), "rays24"),
            3 => (rows(&data::RAYS_40), "rays40"),
            4 => (rows(&data::RAYS_80), "rays80"),
            _ => return Err(Error::UnsupportedQubits(n)),
        };
        Self::from_coords(n, coords, CatalogSource::Paper, name)
    }

    /// Rays regenerated from the joint eigenbases of the magic square (n=2)
    /// or pentagram (n=3) contexts, sorted by coordinates.
    pub fn generated(n: usize) -> Result<Self> {
        let label = match n {
            2 => MagicLabel::Square2q,
            3 => MagicLabel::Pentagram3q,
            // the rectangle row is not a maximal commuting set
            _ => return Err(Error::UnsupportedQubits(n)),
        };
        let config = MagicConfiguration::new(label);
        let mut all = BTreeSet::new();
        for ctx in &config.contexts {
            all.extend(joint_eigenbasis(ctx)?);
        }
        let mut coords: Vec<_> = all.into_iter().collect();
        coords.sort_by(|a, b| b.cmp(a));
        Self::from_coords(n, coords, CatalogSource::Generated, format!("generated{n}"))
    }

    pub fn dimension(&self) -> usize {
        1 << self.n
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn ray(&self, id: usize) -> Result<&Ray> {
        id.checked_sub(1).and_then(|i| self.rays.get(i)).ok_or(Error::UnknownRay(id))
    }

    pub fn coords(&self) -> Vec<Vec<i64>> {
        self.rays.iter().map(|r| r.coords.clone()).collect()
    }

    /// Looks up the id of a ray given in any scaling or sign.
    pub fn find(&self, coords: &[i64]) -> Option<usize> {
        let c = canonical_coords(coords).ok()?;
        self.rays.iter().find(|r| r.coords == c).map(|r| r.id)
    }
}

pub fn inner(a: &Ray, b: &Ray) -> Result<i64> {
    if a.coords.len() != b.coords.len() {
        return Err(Error::Dimension(a.coords.len(), b.coords.len()));
    }
    Ok(a.coords.iter().zip(&b.coords).map(|(x, y)| x * y).sum())
}

/// `(a·b)² / (|a|²|b|²)`.
pub fn overlap_sq(a: &Ray, b: &Ray) -> Result<Rational> {
    let dot = inner(a, b)?;
    let (na, nb) = (a.norm_sq(), b.norm_sq());
    if na == 0 || nb == 0 {
        return Err(Error::ZeroVector);
    }
    Ok(Rational::new(BigInt::from(dot * dot), BigInt::from(na * nb)))
}

/// Vertex `i` is ray id `i + 1`; edges join orthogonal rays.
pub fn orthogonality_graph(c: &RayCatalog) -> Graph {
    let rays = c.rays();
    let mut g = Graph::new(rays.len());
    for (i, a) in rays.iter().enumerate() {
        for (j, b) in rays.iter().enumerate().skip(i + 1) {
            if inner(a, b).unwrap_or(1) == 0 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// A maximal orthogonal basis as a sorted set of ray ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Basis {
    ray_ids: Vec<usize>,
}

impl AsRef<[usize]> for Basis {
    fn as_ref(&self) -> &[usize] {
        &self.ray_ids
    }
}

impl Basis {
    pub fn new(ids: impl IntoIterator<Item = usize>) -> Self {
        let mut ray_ids: Vec<usize> = ids.into_iter().collect();
        ray_ids.sort_unstable();
        ray_ids.dedup();
        Self { ray_ids }
    }

    pub fn ray_ids(&self) -> &[usize] {
        &self.ray_ids
    }

    pub fn len(&self) -> usize {
        self.ray_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ray_ids.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.ray_ids.binary_search(&id).is_ok()
    }

    pub fn shared(&self, other: &Basis) -> usize {
        self.ray_ids.iter().filter(|&&id| other.contains(id)).count()
    }

    pub fn is_disjoint(&self, other: &Basis) -> bool {
        self.shared(other) == 0
    }

    /// Checks size `d` and pairwise orthogonality within `c`.
    pub fn validate(&self, c: &RayCatalog) -> Result<()> {
        let bad = |reason: String| Error::InvalidBasis { ids: self.ray_ids.clone(), reason };
        if self.len() != c.dimension() {
            return Err(bad(format!("expected {} rays", c.dimension())));
        }
        for (i, &a) in self.ray_ids.iter().enumerate() {
            for &b in &self.ray_ids[i + 1..] {
                if inner(c.ray(a)?, c.ray(b)?)? != 0 {
                    return Err(bad(format!("rays {a} and {b} are not orthogonal")));
                }
            }
        }
        Ok(())
    }
}

/// All maximal orthogonal bases (`d`-cliques of the orthogonality graph),
/// sorted lexicographically by ray-id tuple.
pub fn enumerate_bases(c: &RayCatalog) -> Vec<Basis> {
    let g = orthogonality_graph(c);
    let mut out: Vec<Basis> = find_cliques(&g, c.dimension())
        .into_iter()
        .map(|ids| Basis::new(ids.into_iter().map(|i| i + 1)))
        .collect();
    out.sort();
    out
}

/// The reference basis lists for `n` = 2 and 3, in their published numbering.
pub fn paper_bases(n: usize) -> Result<Vec<Basis>> {
    match n {
        2 => Ok(data::BASES_24.iter().map(|b| Basis::new(b.iter().copied())).collect()),
        3 => Ok(data::BASES_25.iter().map(|b| Basis::new(b.iter().copied())).collect()),
        _ => Err(Error::UnsupportedQubits(n)),
    }
}

/// For each basis in `bases`, its 1-based position in the reference numbering.
pub fn paper_numbering(n: usize, bases: &[Basis]) -> Result<Vec<usize>> {
    let reference = paper_bases(n)?;
    bases
        .iter()
        .map(|b| {
            reference
                .iter()
                .position(|r| r == b)
                .map(|p| p + 1)
                .ok_or_else(|| Error::InvalidBasis {
                    ids: b.ray_ids().to_vec(),
                    reason: "not in the reference list".into(),
                })
        })
        .collect()
}

/// True iff both catalogs contain the same rays up to scaling and order.
pub fn catalogs_equivalent(a: &RayCatalog, b: &RayCatalog) -> bool {
    let set = |c: &RayCatalog| c.rays().iter().map(|r| r.coords.clone()).collect::<BTreeSet<_>>();
    a.n == b.n && set(a) == set(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two() -> RayCatalog {
        RayCatalog::paper(2).unwrap()
    }

    #[test]
    fn paper_catalog_entries() {
        assert_eq!(two().ray(5).unwrap().coords(), &[1, 1, 1, 1]);
        let three = RayCatalog::paper(3).unwrap();
        assert_eq!(three.len(), 40);
        assert_eq!(three.ray(17).unwrap().coords(), &[1, 1, 0, 0, 1, 1, 0, 0]);
        let four = RayCatalog::paper(4).unwrap();
        assert_eq!(four.len(), 80);
        assert_eq!(four.ray(61).unwrap().coords(), &[1; 16]);
        assert_eq!(RayCatalog::paper(5), Err(Error::UnsupportedQubits(5)));
        assert_eq!(two().ray(25), Err(Error::UnknownRay(25)));
    }

    #[test]
    fn inner_products() {
        let c = two();
        let r = |i| c.ray(i).unwrap();
        assert_eq!(inner(r(1), r(2)).unwrap(), 0);
        assert_eq!(inner(r(5), r(5)).unwrap(), 4);
        assert_eq!(inner(r(5), r(9)).unwrap(), -2);
        let long = Ray::new(1, &[1, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(inner(r(1), &long), Err(Error::Dimension(4, 8)));
    }

    #[test]
    fn overlaps() {
        let c = two();
        let r = |i| c.ray(i).unwrap();
        let q = |a: i64, b: i64| Rational::new(a.into(), b.into());
        assert_eq!(overlap_sq(r(1), r(5)).unwrap(), q(1, 4));
        assert_eq!(overlap_sq(r(1), r(1)).unwrap(), q(1, 1));
        assert_eq!(overlap_sq(r(13), r(5)).unwrap(), q(1, 2));
        assert_eq!(Ray::new(1, &[0, 0]), Err(Error::ZeroVector));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(canonical_coords(&[0, -2, 4, 0]).unwrap(), vec![0, 1, -2, 0]);
        assert_eq!(canonical_coords(&[3, 3, -3, 3]).unwrap(), vec![1, 1, -1, 1]);
    }

    #[test]
    fn orthogonality_graph_two_qubits() {
        let g = orthogonality_graph(&two());
        assert_eq!(g.vertex_count(), 24);
        assert!((0..24).all(|v| g.degree(v) >= 3));
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(4, 8));
    }

    #[test]
    fn basis_seven_and_count() {
        let c = two();
        let bases = enumerate_bases(&c);
        assert_eq!(bases.len(), 24);
        let numbering = paper_numbering(2, &bases).unwrap();
        let seventh = bases[numbering.iter().position(|&p| p == 7).unwrap()].clone();
        assert_eq!(seventh, Basis::new([1, 2, 15, 16]));
        // each ray lies in exactly four bases
        for id in 1..=24 {
            assert_eq!(bases.iter().filter(|b| b.contains(id)).count(), 4);
        }
    }

    #[test]
    fn invalid_basis_is_reported() {
        let c = two();
        assert!(Basis::new([1, 2, 3, 5]).validate(&c).is_err());
        assert!(Basis::new([1, 2, 3]).validate(&c).is_err());
        Basis::new([1, 2, 15, 16]).validate(&c).unwrap();
    }

    #[test]
    fn equivalence_absorbs_sign() {
        let c = two();
        let mut coords = c.coords();
        coords[4] = coords[4].iter().map(|x| -x).collect();
        coords.swap(0, 7);
        let d = RayCatalog::from_coords(2, coords, CatalogSource::File, "neg").unwrap();
        assert!(catalogs_equivalent(&c, &d));
        assert!(!catalogs_equivalent(&c, &RayCatalog::paper(3).unwrap()));
    }

    #[test]
    fn duplicate_rays_rejected() {
        let coords = vec![vec![1, 0], vec![-1, 0]];
        assert!(RayCatalog::from_coords(1, coords, CatalogSource::File, "dup").is_err());
    }
}
