//! Real n-qubit Pauli operators in symplectic form.
//!
//! An operator is stored as `i^phase · ⊗_k X^{x_k} Z^{z_k}`. Qubit 1 is the
//! leftmost tensor factor and acts on the most significant bit of a basis
//! index, so `Z1 = Z ⊗ I ⊗ …` in the usual notation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::rays::canonical_coords;

/// Largest qubit count supported by the operator representation.
pub const MAX_QUBITS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    n: u8,
    x: u8,
    z: u8,
    phase: u8,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Result<Self> {
        Self::from_parts(n, 0, 0, 0)
    }

    /// Builds an operator from index-space bit masks (bit `n - k` is qubit `k`).
    pub fn from_parts(n: usize, x: u8, z: u8, phase: u8) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::UnsupportedQubits(n));
        }
        let mask = ((1u16 << n) - 1) as u8;
        Ok(Self { n: n as u8, x: x & mask, z: z & mask, phase: phase % 4 })
    }

    /// A single-qubit factor `kind` on qubit `qubit` (1-based), identity elsewhere.
    pub fn single(n: usize, qubit: usize, kind: char) -> Result<Self> {
        if qubit == 0 || qubit > n {
            return Err(Error::Parse(format!("qubit {qubit} out of range for n={n}")));
        }
        let mut s = vec!['I'; n];
        s[qubit - 1] = kind;
        s.into_iter().collect::<String>().parse()
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn x_bits(&self) -> u8 {
        self.x
    }

    pub fn z_bits(&self) -> u8 {
        self.z
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0 && self.phase == 0
    }

    /// True when the operator is `±I`.
    pub fn is_scalar(&self) -> bool {
        self.x == 0 && self.z == 0 && self.phase.is_multiple_of(2)
    }

    /// The matrix has integer entries iff the `i` power is even.
    pub fn is_real(&self) -> bool {
        self.phase.is_multiple_of(2)
    }

    /// `O² = I`, i.e. the operator is Hermitian with eigenvalues ±1.
    pub fn is_involution(&self) -> bool {
        (self.phase as u32 + (self.x & self.z).count_ones()).is_multiple_of(2)
    }

    /// The operator with its overall phase dropped (the projective class).
    pub fn unsigned(&self) -> (u8, u8) {
        (self.x, self.z)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension(self.n(), other.n()));
        }
        Ok(())
    }

    /// Operator product `self · other`.
    ///
    /// Moving `Z^{z1}` past `X^{x2}` contributes `(-1)^{z1·x2}`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let swap = (self.z & other.x).count_ones() as u8;
        Ok(Self {
            n: self.n,
            x: self.x ^ other.x,
            z: self.z ^ other.z,
            phase: (self.phase + other.phase + 2 * swap) % 4,
        })
    }

    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.check_dim(other)?;
        Ok(((self.x & other.z) ^ (self.z & other.x)).count_ones().is_multiple_of(2))
    }

    pub fn negate(&self) -> Self {
        Self { phase: (self.phase + 2) % 4, ..*self }
    }

    /// Dense integer matrix, row-major, `2^n × 2^n`.
    pub fn matrix(&self) -> Result<Vec<Vec<i64>>> {
        let d = 1usize << self.n;
        let perm = self.signed_permutation()?;
        let mut m = vec![vec![0i64; d]; d];
        for (col, &(row, sign)) in perm.iter().enumerate() {
            m[row][col] = sign;
        }
        Ok(m)
    }

    /// Column `i` of the matrix has its single nonzero entry at `(row, sign)`.
    pub fn signed_permutation(&self) -> Result<Vec<(usize, i64)>> {
        if !self.is_real() {
            return Err(Error::NotReal(self.to_string()));
        }
        let global = if self.phase == 2 { -1 } else { 1 };
        let d = 1usize << self.n;
        Ok((0..d)
            .map(|i| {
                let sign = if (self.z as usize & i).count_ones().is_multiple_of(2) { 1 } else { -1 };
                (i ^ self.x as usize, global * sign)
            })
            .collect())
    }

    /// Matrix-vector product for a real operator.
    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>> {
        let perm = self.signed_permutation()?;
        if v.len() != perm.len() {
            return Err(Error::Dimension(v.len(), perm.len()));
        }
        let mut out = vec![0; v.len()];
        for (col, &(row, sign)) in perm.iter().enumerate() {
            out[row] += sign * v[col];
        }
        Ok(out)
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let ys = (self.x & self.z).count_ones() as u8;
        // each written Y absorbs one factor of i
        let rest = (self.phase + 4 - ys % 4) % 4;
        let prefix = ["", "i", "-", "-i"][rest as usize];
        let body: String = (1..=n)
            .map(|k| {
                let bit = 1u8 << (n - k);
                match (self.x & bit != 0, self.z & bit != 0) {
                    (false, false) => 'I',
                    (true, false) => 'X',
                    (false, true) => 'Z',
                    (true, true) => 'Y',
                }
            })
            .collect();
        write!(f, "{prefix}{body}")
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    /// Parses strings such as `"ZXZX"`, `"-XXXX"` or `"+YY"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (mut phase, body) = match s.as_bytes().first() {
            Some(b'-') => (2u8, &s[1..]),
            Some(b'+') => (0u8, &s[1..]),
            _ => (0u8, s),
        };
        let n = body.chars().count();
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::Parse(format!("bad operator length in {s:?}")));
        }
        let (mut x, mut z) = (0u8, 0u8);
        for (k, c) in body.chars().enumerate() {
            let bit = 1u8 << (n - 1 - k);
            match c.to_ascii_uppercase() {
                'I' => {}
                'X' => x |= bit,
                'Z' => z |= bit,
                'Y' => {
                    x |= bit;
                    z |= bit;
                    phase += 1;
                }
                other => return Err(Error::Parse(format!("unexpected {other:?} in {s:?}"))),
            }
        }
        Self::from_parts(n, x, z, phase)
    }
}

/// Which of the three operator configurations a [`MagicConfiguration`] is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MagicLabel {
    Square2q,
    Pentagram3q,
    Rectangle4q,
}

impl MagicLabel {
    pub fn name(&self) -> &'static str {
        match self {
            MagicLabel::Square2q => "square2q",
            MagicLabel::Pentagram3q => "pentagram3q",
            MagicLabel::Rectangle4q => "rectangle4q",
        }
    }
}

impl FromStr for MagicLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "square2q" => Ok(MagicLabel::Square2q),
            "pentagram3q" => Ok(MagicLabel::Pentagram3q),
            "rectangle4q" => Ok(MagicLabel::Rectangle4q),
            _ => Err(Error::Parse(format!("unknown configuration {s:?}"))),
        }
    }
}

/// A set of contexts of commuting operators whose products are `±I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagicConfiguration {
    pub label: MagicLabel,
    pub n: usize,
    pub contexts: Vec<Vec<PauliOperator>>,
}

/// Outcome of [`verify_magic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagicReport {
    /// `+1` or `-1` per context, in context order.
    pub signs: Vec<i8>,
    pub parity_obstruction: bool,
}

fn ops(list: &[&str]) -> Vec<PauliOperator> {
    list.iter().map(|s| s.parse().expect("static operator")).collect()
}

impl MagicConfiguration {
    pub fn new(label: MagicLabel) -> Self {
        match label {
            // rows, then columns
            MagicLabel::Square2q => Self {
                label,
                n: 2,
                contexts: vec![
                    ops(&["ZI", "IZ", "ZZ"]),
                    ops(&["IX", "XI", "XX"]),
                    ops(&["ZX", "XZ", "YY"]),
                    ops(&["ZI", "IX", "ZX"]),
                    ops(&["IZ", "XI", "XZ"]),
                    ops(&["ZZ", "XX", "YY"]),
                ],
            },
            // four columns, then the row of three-qubit products
            MagicLabel::Pentagram3q => Self {
                label,
                n: 3,
                contexts: vec![
                    ops(&["ZII", "IZI", "IIZ", "ZZZ"]),
                    ops(&["ZII", "IXI", "IIX", "ZXX"]),
                    ops(&["XII", "IZI", "IIX", "XZX"]),
                    ops(&["XII", "IXI", "IIZ", "XXZ"]),
                    ops(&["ZZZ", "ZXX", "XZX", "XXZ"]),
                ],
            },
            MagicLabel::Rectangle4q => Self {
                label,
                n: 4,
                contexts: vec![
                    ops(&["ZIII", "IXII", "IIZI", "IIIX", "ZXZX"]),
                    ops(&["ZIII", "IXII", "IIXI", "IIIZ", "ZXXZ"]),
                    ops(&["XIII", "IXII", "IIZI", "IIIZ", "XXZZ"]),
                    ops(&["XIII", "IXII", "IIXI", "IIIX", "XXXX"]),
                    ops(&["ZXZX", "ZXXZ", "XXZZ", "XXXX"]),
                ],
            },
        }
    }

    /// Distinct operators in first-appearance order.
    pub fn operators(&self) -> Vec<PauliOperator> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for op in self.contexts.iter().flatten() {
            if seen.insert(op.unsigned()) {
                out.push(*op);
            }
        }
        out
    }
}

/// Checks each context and decides whether the sign pattern forbids a
/// noncontextual ±1 value assignment.
pub fn verify_magic(config: &MagicConfiguration) -> Result<MagicReport> {
    let mut signs = Vec::with_capacity(config.contexts.len());
    for ctx in &config.contexts {
        for (i, a) in ctx.iter().enumerate() {
            if !a.is_real() || !a.is_involution() {
                return Err(Error::InvalidConfiguration(format!("{a} is not a real observable")));
            }
            for b in &ctx[i + 1..] {
                if !a.commutes(b)? {
                    return Err(Error::NotCommuting(a.to_string(), b.to_string()));
                }
            }
        }
        let mut product = PauliOperator::identity(config.n)?;
        for op in ctx {
            product = product.multiply(op)?;
        }
        if !product.is_scalar() {
            return Err(Error::InvalidConfiguration(format!(
                "context product is {product}, not ±I"
            )));
        }
        signs.push(if product.phase_exp() == 0 { 1 } else { -1 });
    }
    let mut counts: BTreeMap<(u8, u8), usize> = BTreeMap::new();
    for op in config.contexts.iter().flatten() {
        *counts.entry(op.unsigned()).or_default() += 1;
    }
    let even = counts.values().all(|c| c % 2 == 0);
    let negative = signs.iter().filter(|&&s| s < 0).count();
    Ok(MagicReport { signs, parity_obstruction: even && negative % 2 == 1 })
}

/// The projective closure (signs dropped) of a set of commuting operators,
/// excluding the identity.
pub fn closure(generators: &[PauliOperator]) -> Result<BTreeSet<(u8, u8)>> {
    let mut set: BTreeSet<(u8, u8)> = BTreeSet::new();
    let mut frontier: Vec<(u8, u8)> = generators.iter().map(|g| g.unsigned()).collect();
    while let Some(p) = frontier.pop() {
        if p == (0, 0) || !set.insert(p) {
            continue;
        }
        let snapshot: Vec<_> = set.iter().copied().collect();
        for q in snapshot {
            frontier.push((p.0 ^ q.0, p.1 ^ q.1));
        }
    }
    Ok(set)
}

/// Joint ±1 eigenbasis of a maximal set of commuting real Pauli operators.
///
/// Each operator splits every current eigenspace with the integer projectors
/// `I ± O`. The result is a sorted list of `2^n` canonical primitive rays.
pub fn joint_eigenbasis(ops: &[PauliOperator]) -> Result<Vec<Vec<i64>>> {
    let n = ops.first().map(|o| o.n()).ok_or(Error::Degenerate(0))?;
    for (i, a) in ops.iter().enumerate() {
        if a.n() != n {
            return Err(Error::Dimension(a.n(), n));
        }
        if !a.is_real() {
            return Err(Error::NotReal(a.to_string()));
        }
        if !a.is_involution() {
            return Err(Error::InvalidConfiguration(format!("{a} does not square to I")));
        }
        for b in &ops[i + 1..] {
            if !a.commutes(b)? {
                return Err(Error::NotCommuting(a.to_string(), b.to_string()));
            }
        }
    }
    let d = 1usize << n;
    let identity: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![identity];
    for op in ops {
        if op.is_scalar() {
            continue;
        }
        let mut next = Vec::with_capacity(spaces.len() * 2);
        for space in &spaces {
            for sign in [1i64, -1] {
                let mut images = Vec::with_capacity(space.len());
                for v in space {
                    let ov = op.apply(v)?;
                    images.push(v.iter().zip(&ov).map(|(a, b)| a + sign * b).collect());
                }
                let span = independent_subset(images);
                if !span.is_empty() {
                    next.push(span);
                }
            }
        }
        spaces = next;
    }
    if let Some(big) = spaces.iter().find(|s| s.len() > 1) {
        return Err(Error::Degenerate(big.len()));
    }
    let mut rays: Vec<Vec<i64>> = spaces
        .into_iter()
        .map(|s| canonical_coords(&s[0]))
        .collect::<Result<_>>()?;
    rays.sort();
    Ok(rays)
}

/// Keeps a linearly independent subset of nonzero integer vectors spanning
/// the same space (fraction-free elimination on a working copy).
fn independent_subset(vectors: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut echelon: Vec<(usize, Vec<i64>)> = Vec::new();
    let mut kept = Vec::new();
    for v in vectors {
        let mut r = v.clone();
        for (pivot, row) in &echelon {
            if r[*pivot] != 0 {
                let (a, b) = (row[*pivot], r[*pivot]);
                for (x, y) in r.iter_mut().zip(row) {
                    *x = a * *x - b * y;
                }
                reduce_gcd(&mut r);
            }
        }
        if let Some(p) = r.iter().position(|&x| x != 0) {
            echelon.push((p, r));
            kept.push(v);
        }
    }
    kept
}

fn reduce_gcd(v: &mut [i64]) {
    let g = v.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

/// Number of maximal commuting sets in the n-qubit Pauli group, `∏ (1 + 2^i)`.
pub fn count_max_commuting(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * (BigUint::from(1u32) + (BigUint::from(1u32) << i)))
}

/// Number of real joint eigenstates, `∏ (2 + 2^i)`.
pub fn count_real_rays(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * (BigUint::from(2u32) + (BigUint::from(1u32) << i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let d = a.len();
        (0..d)
            .map(|i| (0..d).map(|j| (0..d).map(|k| a[i][k] * b[k][j]).sum()).collect())
            .collect()
    }

    fn eye(d: usize) -> Vec<Vec<i64>> {
        (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect()
    }

    #[test]
    fn involution_and_xz_rule() {
        assert!(op("ZI").multiply(&op("ZI")).unwrap().is_identity());
        let xz = op("XI").multiply(&op("ZI")).unwrap();
        assert_eq!((xz.x_bits(), xz.z_bits(), xz.phase_exp()), (0b10, 0b10, 0));
        // X·Z = [[0,-1],[1,0]]
        let m = xz.matrix().unwrap();
        let expected = matmul(&op("XI").matrix().unwrap(), &op("ZI").matrix().unwrap());
        assert_eq!(m, expected);
        assert_eq!(xz.to_string(), "-iYI");
    }

    #[test]
    fn rectangle_column_multiplies_to_identity() {
        let col = ["ZIII", "IXII", "IIZI", "IIIX", "ZXZX"];
        let p = col
            .iter()
            .fold(PauliOperator::identity(4).unwrap(), |acc, s| acc.multiply(&op(s)).unwrap());
        assert!(p.is_identity());
    }

    #[test]
    fn commutation() {
        assert!(!op("XI").commutes(&op("ZI")).unwrap());
        assert!(op("ZZ").commutes(&op("XX")).unwrap());
        assert_eq!(op("ZZ").commutes(&op("ZZZ")), Err(Error::Dimension(2, 3)));
        let sq = MagicConfiguration::new(MagicLabel::Square2q);
        for ctx in &sq.contexts {
            for a in ctx {
                for b in ctx {
                    assert!(a.commutes(b).unwrap());
                }
            }
        }
    }

    #[test]
    fn matrices() {
        assert_eq!(op("II").matrix().unwrap(), eye(4));
        let x1 = op("XI").matrix().unwrap();
        assert_eq!(x1[2][0], 1);
        assert_eq!(x1[0][2], 1);
        assert_eq!(x1[3][1], 1);
        let zz_xx = matmul(&op("ZZ").matrix().unwrap(), &op("XX").matrix().unwrap());
        let prod = matmul(&zz_xx, &op("YY").matrix().unwrap());
        let neg: Vec<Vec<i64>> = eye(4).iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        assert_eq!(prod, neg);
        assert!(matches!(op("YI").matrix(), Err(Error::NotReal(_))));
    }

    #[test]
    fn parse_and_display() {
        for s in ["ZXZX", "-XXXX", "YY", "-YY", "IZI"] {
            assert_eq!(op(s).to_string(), s);
        }
        assert!("ZQ".parse::<PauliOperator>().is_err());
        assert!("".parse::<PauliOperator>().is_err());
        assert!("XXXXX".parse::<PauliOperator>().is_err());
    }

    #[test]
    fn magic_reports() {
        let sq = verify_magic(&MagicConfiguration::new(MagicLabel::Square2q)).unwrap();
        assert_eq!(sq.signs, vec![1, 1, 1, 1, 1, -1]);
        assert!(sq.parity_obstruction);
        let pg = verify_magic(&MagicConfiguration::new(MagicLabel::Pentagram3q)).unwrap();
        assert_eq!(pg.signs, vec![1, 1, 1, 1, -1]);
        assert!(pg.parity_obstruction);
        let rc = verify_magic(&MagicConfiguration::new(MagicLabel::Rectangle4q)).unwrap();
        assert_eq!(rc.signs, vec![1, 1, 1, 1, -1]);
        assert!(rc.parity_obstruction);
    }

    #[test]
    fn magic_rejects_noncommuting_context() {
        let bad = MagicConfiguration {
            label: MagicLabel::Square2q,
            n: 2,
            contexts: vec![vec![op("ZI"), op("XI")]],
        };
        assert!(matches!(verify_magic(&bad), Err(Error::NotCommuting(..))));
    }

    #[test]
    fn eigenbasis_computational() {
        let rays = joint_eigenbasis(&[op("ZI"), op("IZ")]).unwrap();
        assert_eq!(
            rays,
            vec![vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![1, 0, 0, 0]]
        );
    }

    #[test]
    fn eigenbasis_errors() {
        assert_eq!(joint_eigenbasis(&[op("ZI")]), Err(Error::Degenerate(2)));
        assert!(matches!(
            joint_eigenbasis(&[op("ZI"), op("XI")]),
            Err(Error::NotCommuting(..))
        ));
        // the rectangle row generates only 3 independent operators
        let row = MagicConfiguration::new(MagicLabel::Rectangle4q).contexts[4].clone();
        assert_eq!(joint_eigenbasis(&row), Err(Error::Degenerate(2)));
    }

    #[test]
    fn closure_sizes() {
        assert_eq!(closure(&[op("ZI"), op("IZ")]).unwrap().len(), 3);
        let pent = MagicConfiguration::new(MagicLabel::Pentagram3q);
        assert_eq!(closure(&pent.contexts[4]).unwrap().len(), 7);
        let rect = MagicConfiguration::new(MagicLabel::Rectangle4q);
        assert_eq!(closure(&rect.contexts[4]).unwrap().len(), 7);
        assert_eq!(closure(&rect.contexts[0]).unwrap().len(), 15);
    }

    #[test]
    fn counting_formulas() {
        let l: Vec<u64> = (1..=4).map(|n| count_max_commuting(n).try_into().unwrap()).collect();
        assert_eq!(l, vec![3, 15, 135, 2295]);
        let lr: Vec<u64> = (1..=4).map(|n| count_real_rays(n).try_into().unwrap()).collect();
        assert_eq!(lr, vec![4, 24, 240, 4320]);
    }
}
