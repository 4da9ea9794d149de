//! Exact squared Bengtsson distances between maximal orthogonal bases.
//!
//! For bases `a`, `b` of dimension `d`:
//!
//! ```text
//! D²(a, b) = 1 − 1/(d−1) · Σ_{i,j} (|⟨a_i|b_j⟩|² − 1/d)²
//! ```
//!
//! Everything is kept as an exact rational. Square roots only appear in
//! [`decimal_distance`] for display.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rays::{Basis, RayCatalog};

pub type Rational = num_rational::BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// `sqrt(q)` rounded to `places` decimals, half-to-even, computed exactly.
pub fn decimal_distance(q: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    // floor(sqrt(q) * 10^p) via integer sqrt of the scaled value, with
    // two guard digits for rounding
    let guard = BigInt::from(100u32);
    let num = q.numer() * &scale * &scale * &guard * &guard;
    let v = (num / q.denom()).sqrt();
    let (int_part, rem) = v.div_rem(&guard);
    let mut digits = int_part;
    let half = BigInt::from(50u32);
    // ties are only exact when the square root is exact
    let exact_tie = rem == half && {
        let sq = &v * &v * q.denom();
        sq == q.numer() * &scale * &scale * &guard * &guard
    };
    if rem > half || (rem == half && (!exact_tie || digits.is_odd())) {
        digits += 1;
    }
    let s = format!("{:0>width$}", digits.to_string(), width = places as usize + 1);
    let (a, b) = s.split_at(s.len() - places as usize);
    if places == 0 {
        a.to_string()
    } else {
        format!("{a}.{b}")
    }
}

/// Precomputed inner products and norms of a catalog, for fast pair scans.
pub struct BasisMetric<'a> {
    catalog: &'a RayCatalog,
    dots: Vec<i64>,
    norms: Vec<i64>,
}

impl<'a> BasisMetric<'a> {
    pub fn new(catalog: &'a RayCatalog) -> Self {
        let rays = catalog.rays();
        let m = rays.len();
        let mut dots = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                dots[i * m + j] =
                    rays[i].coords().iter().zip(rays[j].coords()).map(|(x, y)| x * y).sum();
            }
        }
        let norms = rays.iter().map(|r| r.norm_sq()).collect();
        Self { catalog, dots, norms }
    }

    pub fn catalog(&self) -> &RayCatalog {
        self.catalog
    }

    fn check(&self, b: &Basis) -> Result<()> {
        for &id in b.ray_ids() {
            if id == 0 || id > self.norms.len() {
                return Err(Error::UnknownRay(id));
            }
        }
        Ok(())
    }

    /// Exact `D²(a, b)`.
    pub fn distance_sq(&self, a: &Basis, b: &Basis) -> Result<Rational> {
        if a.len() != b.len() {
            return Err(Error::Dimension(a.len(), b.len()));
        }
        self.check(a)?;
        self.check(b)?;
        let d = a.len() as i128;
        let m = self.norms.len();
        // common denominators: lcm of |a_i|² (and squares) over each basis
        let lcm_of = |ids: &[usize], pow: u32| {
            ids.iter().fold(1i128, |l, &id| l.lcm(&(self.norms[id - 1] as i128).pow(pow)))
        };
        let (la1, lb1) = (lcm_of(a.ray_ids(), 1), lcm_of(b.ray_ids(), 1));
        let (la2, lb2) = (lcm_of(a.ray_ids(), 2), lcm_of(b.ray_ids(), 2));
        // per-ray scale factors so every term shares the denominators
        let scale = |ids: &[usize], l1: i128, l2: i128| -> Vec<(usize, i128, i128)> {
            ids.iter()
                .map(|&id| {
                    let n = self.norms[id - 1] as i128;
                    (id - 1, l1 / n, l2 / (n * n))
                })
                .collect()
        };
        let fb = scale(b.ray_ids(), lb1, lb2);
        let (mut s1, mut s2) = (0i128, 0i128);
        for (i, fa1, fa2) in scale(a.ray_ids(), la1, la2) {
            let row = &self.dots[i * m..(i + 1) * m];
            let (mut r1, mut r2) = (0i128, 0i128);
            for &(j, fb1, fb2) in &fb {
                let dot = row[j] as i128;
                let o = dot * dot;
                r1 += o * fb1;
                r2 += o * o * fb2;
            }
            s1 += r1 * fa1;
            s2 += r2 * fa2;
        }
        // Σ (o − 1/d)² = Σo² − (2/d)Σo + 1, over the denominator d·L1·L2
        let (l1, l2) = (la1 * lb1, la2 * lb2);
        let spread = s2 * d * l1 - 2 * s1 * l2 + d * l1 * l2;
        let den = d * l1 * l2 * (d - 1);
        let num = den - spread;
        let g = num.gcd(&den);
        Ok(Rational::new_raw((num / g).into(), (den / g).into()))
    }

    /// All unordered pairs `(i, j, D²)` with `i < j`, in index order.
    pub fn pairwise(&self, bases: &[Basis]) -> Result<Vec<(usize, usize, Rational)>> {
        let pairs: Vec<(usize, usize)> = (0..bases.len())
            .flat_map(|i| (i + 1..bases.len()).map(move |j| (i, j)))
            .collect();
        pairs
            .par_iter()
            .map(|&(i, j)| Ok((i, j, self.distance_sq(&bases[i], &bases[j])?)))
            .collect()
    }
}

pub fn distance_sq(a: &Basis, b: &Basis, c: &RayCatalog) -> Result<Rational> {
    BasisMetric::new(c).distance_sq(a, b)
}

/// Sorted distinct squared distances, labelled `a1 < a2 < …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceSpectrum {
    classes: Vec<Rational>,
}

impl DistanceSpectrum {
    pub fn new(mut classes: Vec<Rational>) -> Self {
        classes.sort();
        classes.dedup();
        Self { classes }
    }

    pub fn classes(&self) -> &[Rational] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// 0-based class index of `q`.
    pub fn class_of(&self, q: &Rational) -> Result<usize> {
        self.classes
            .binary_search(q)
            .map_err(|_| Error::OutOfSpectrum(format_rational(q)))
    }

    pub fn label(index: usize) -> String {
        format!("a{}", index + 1)
    }
}

pub fn spectrum(bases: &[Basis], c: &RayCatalog) -> Result<DistanceSpectrum> {
    spectrum_with(&BasisMetric::new(c), bases)
}

pub fn spectrum_with(metric: &BasisMetric<'_>, bases: &[Basis]) -> Result<DistanceSpectrum> {
    if bases.len() < 2 {
        return Err(Error::Precondition("a spectrum needs at least two bases".into()));
    }
    let values = metric.pairwise(bases)?;
    Ok(DistanceSpectrum::new(values.into_iter().map(|(_, _, q)| q).collect()))
}

/// Pair counts per spectrum class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Histogram {
    pub counts: Vec<usize>,
}

impl Histogram {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl fmt::Display for Histogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Histogram of pairwise distance classes within one set of bases.
pub fn histogram(bases: &[Basis], s: &DistanceSpectrum, c: &RayCatalog) -> Result<Histogram> {
    histogram_with(&BasisMetric::new(c), bases, s)
}

pub fn histogram_with(
    metric: &BasisMetric<'_>,
    bases: &[Basis],
    s: &DistanceSpectrum,
) -> Result<Histogram> {
    let mut counts = vec![0; s.len()];
    for i in 0..bases.len() {
        for j in i + 1..bases.len() {
            counts[s.class_of(&metric.distance_sq(&bases[i], &bases[j])?)?] += 1;
        }
    }
    Ok(Histogram { counts })
}

/// Number of shared rays and the 0-based spectrum class of the pair distance.
pub fn overlap_to_distance(
    a: &Basis,
    b: &Basis,
    metric: &BasisMetric<'_>,
    s: &DistanceSpectrum,
) -> Result<(usize, usize)> {
    Ok((a.shared(b), s.class_of(&metric.distance_sq(a, b)?)?))
}

/// For every shared-ray count realised among `bases`, the set of classes it maps to.
pub fn overlap_class_map(
    bases: &[Basis],
    metric: &BasisMetric<'_>,
    s: &DistanceSpectrum,
) -> Result<BTreeMap<usize, std::collections::BTreeSet<usize>>> {
    let mut map: BTreeMap<usize, std::collections::BTreeSet<usize>> = BTreeMap::new();
    for (i, j, q) in metric.pairwise(bases)? {
        map.entry(bases[i].shared(&bases[j])).or_default().insert(s.class_of(&q)?);
    }
    Ok(map)
}

/// Rounded decimal of a rational, used by text reports.
pub fn to_f64(q: &Rational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

pub fn is_unit_interval(q: &Rational) -> bool {
    !q.is_negative() && q <= &Rational::one()
}
