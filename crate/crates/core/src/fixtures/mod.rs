//! Reference proofs and layouts, addressable by name.

pub(crate) mod data;

use crate::error::{Error, Result};
use crate::proofs::{IncidenceStructure, ProofSet};
use crate::rays::Basis;

/// The sixteen two-qubit 18-9 proofs as a 4 × 4 square (row-major, basis
/// indices). Horizontally or vertically adjacent proofs share three bases.
pub const PROOF_SQUARE_18_9: [[[usize; 9]; 4]; 4] = [
    [
        [7, 8, 10, 13, 14, 16, 22, 23, 24],
        [7, 9, 11, 14, 15, 18, 19, 20, 22],
        [8, 9, 12, 16, 17, 18, 20, 21, 24],
        [10, 11, 12, 13, 15, 17, 19, 21, 23],
    ],
    [
        [7, 9, 11, 16, 17, 18, 19, 21, 23],
        [7, 8, 10, 13, 15, 17, 20, 21, 24],
        [10, 11, 12, 13, 14, 16, 19, 20, 22],
        [8, 9, 12, 14, 15, 18, 22, 23, 24],
    ],
    [
        [8, 9, 12, 13, 15, 17, 19, 20, 22],
        [10, 11, 12, 16, 17, 18, 22, 23, 24],
        [7, 8, 10, 14, 15, 18, 19, 21, 23],
        [7, 9, 11, 13, 14, 16, 20, 21, 24],
    ],
    [
        [10, 11, 12, 14, 15, 18, 20, 21, 24],
        [8, 9, 12, 13, 14, 16, 19, 21, 23],
        [7, 9, 11, 13, 15, 17, 22, 23, 24],
        [7, 8, 10, 16, 17, 18, 19, 20, 22],
    ],
];

/// Shared-basis index below each proof of the square (toroidal rows).
pub const PROOF_SQUARE_INDICES: [[usize; 4]; 4] =
    [[7, 20, 12, 23], [17, 10, 14, 9], [12, 23, 7, 20], [14, 9, 17, 10]];

/// A two-qubit 20-11 proof of subtype A drawn as a diagram.
pub const PROOF_20_11A: [usize; 11] = [1, 2, 7, 8, 9, 13, 14, 15, 22, 23, 24];

/// Names accepted by [`paper_proof`].
pub const PROOF_NAMES: [&str; 6] = ["18-9", "20-11A", "36-11", "80-21", "80-22", "80-23"];

fn ray_sets<const D: usize>(sets: &[[usize; D]]) -> Vec<Basis> {
    sets.iter().map(|s| Basis::new(s.iter().copied())).collect()
}

/// Number of qubits of a named reference proof.
pub fn proof_qubits(name: &str) -> Result<usize> {
    match name {
        "18-9" | "20-11A" => Ok(2),
        "36-11" => Ok(3),
        "80-21" | "80-22" | "80-23" => Ok(4),
        _ => Err(Error::Parse(format!("unknown proof {name:?}; expected one of {PROOF_NAMES:?}"))),
    }
}

/// A reference proof by name. Two- and three-qubit proofs carry basis
/// indices; four-qubit proofs are explicit ray sets.
pub fn paper_proof(name: &str) -> Result<ProofSet> {
    let n = proof_qubits(name)?;
    match name {
        "18-9" => IncidenceStructure::paper(n)?.proof(&PROOF_SQUARE_18_9[0][0]),
        "20-11A" => IncidenceStructure::paper(n)?.proof(&PROOF_20_11A),
        "36-11" => IncidenceStructure::paper(n)?.proof(&data::PROOFS_36_11_WITH_123[0]),
        "80-21" => Ok(ProofSet::from_bases(ray_sets(&data::PROOF_80_21))),
        "80-22" => Ok(ProofSet::from_bases(ray_sets(&data::PROOF_80_21)).with_basis(ray_sets(&data::PROOF_80_EXTRA)[1].clone())),
        _ => {
            let mut bases = ray_sets(&data::PROOF_80_21);
            bases.extend(ray_sets(&data::PROOF_80_EXTRA));
            Ok(ProofSet::from_bases(bases))
        }
    }
}

/// Bases of a reference proof in the printed order (extensions appended).
pub fn reference_bases(name: &str) -> Result<Vec<Basis>> {
    let n = proof_qubits(name)?;
    let by_index = |idx: &[usize]| -> Result<Vec<Basis>> {
        let inc = IncidenceStructure::paper(n)?;
        idx.iter().map(|&k| inc.basis(k).cloned()).collect()
    };
    let mut bases = match name {
        "18-9" => return by_index(&PROOF_SQUARE_18_9[0][0]),
        "20-11A" => return by_index(&PROOF_20_11A),
        "36-11" => return by_index(&data::PROOFS_36_11_WITH_123[0]),
        _ => ray_sets(&data::PROOF_80_21),
    };
    let extra = ray_sets(&data::PROOF_80_EXTRA);
    match name {
        "80-22" => bases.push(extra[1].clone()),
        "80-23" => bases.extend(extra),
        _ => {}
    }
    Ok(bases)
}

/// The sixteen 18-9 proofs of the square, row-major.
pub fn proof_square() -> Result<Vec<ProofSet>> {
    let inc = IncidenceStructure::paper(2)?;
    PROOF_SQUARE_18_9.iter().flatten().map(|idx| inc.proof(idx)).collect()
}

/// The sixteen three-qubit 36-11 proofs containing bases 1, 2 and 3.
pub fn proofs_36_11_with_123() -> Result<Vec<ProofSet>> {
    let inc = IncidenceStructure::paper(3)?;
    data::PROOFS_36_11_WITH_123.iter().map(|idx| inc.proof(idx)).collect()
}

/// The first 36-11 proof written out as eleven ray sets.
pub fn proof_36_11_rays() -> Vec<Basis> {
    ray_sets(&data::PROOF_36_11_ELEVEN)
}

/// Ids of the four-qubit rays present in the printed listing.
pub fn printed_rays_80() -> &'static [usize] {
    &data::RAYS_80_PRINTED
}

/// The two bases appended to 80-21, in reference order.
pub fn extra_bases_80() -> Vec<Basis> {
    ray_sets(&data::PROOF_80_EXTRA)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_order_matches_sorted_proofs() {
        for name in PROOF_NAMES {
            let printed = reference_bases(name).unwrap();
            assert_eq!(ProofSet::from_bases(printed).key(), paper_proof(name).unwrap().key());
        }
        assert_eq!(reference_bases("80-21").unwrap()[0], ray_sets(&data::PROOF_80_21)[0]);
        assert_eq!(reference_bases("80-23").unwrap().len(), 23);
    }

    #[test]
    fn unknown_name_rejected() {
        assert!(paper_proof("12-5").is_err());
        assert!(reference_bases("12-5").is_err());
    }
}
