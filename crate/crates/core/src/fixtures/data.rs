// Generated from the reference ray and basis listings. Do not edit by hand.

/// Two-qubit rays, ids 1..=24.
pub(crate) const RAYS_24: [[i8; 4]; 24] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 1, 1, 1],
    [1, 1, -1, -1],
    [1, -1, 1, -1],
    [1, -1, -1, 1],
    [1, -1, -1, -1],
    [1, -1, 1, 1],
    [1, 1, -1, 1],
    [1, 1, 1, -1],
    [1, 1, 0, 0],
    [1, -1, 0, 0],
    [0, 0, 1, 1],
    [0, 0, 1, -1],
    [0, 1, 0, 1],
    [0, 1, 0, -1],
    [1, 0, 1, 0],
    [1, 0, -1, 0],
    [1, 0, 0, -1],
    [1, 0, 0, 1],
    [0, 1, -1, 0],
    [0, 1, 1, 0],
];

/// Three-qubit rays, ids 1..=40.
pub(crate) const RAYS_40: [[i8; 8]; 40] = [
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [1, 1, 1, 1, 0, 0, 0, 0],
    [1, 1, -1, -1, 0, 0, 0, 0],
    [1, -1, 1, -1, 0, 0, 0, 0],
    [1, -1, -1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 1, -1, -1],
    [0, 0, 0, 0, 1, -1, 1, -1],
    [0, 0, 0, 0, 1, -1, -1, 1],
    [1, 1, 0, 0, 1, 1, 0, 0],
    [1, 1, 0, 0, -1, -1, 0, 0],
    [1, -1, 0, 0, 1, -1, 0, 0],
    [1, -1, 0, 0, -1, 1, 0, 0],
    [0, 0, 1, 1, 0, 0, 1, 1],
    [0, 0, 1, 1, 0, 0, -1, -1],
    [0, 0, 1, -1, 0, 0, 1, -1],
    [0, 0, 1, -1, 0, 0, -1, 1],
    [1, 0, 1, 0, 1, 0, 1, 0],
    [1, 0, 1, 0, -1, 0, -1, 0],
    [1, 0, -1, 0, 1, 0, -1, 0],
    [1, 0, -1, 0, -1, 0, 1, 0],
    [0, 1, 0, 1, 0, 1, 0, 1],
    [0, 1, 0, 1, 0, -1, 0, -1],
    [0, 1, 0, -1, 0, 1, 0, -1],
    [0, 1, 0, -1, 0, -1, 0, 1],
    [1, 0, 0, 1, 0, 1, -1, 0],
    [1, 0, 0, -1, 0, 1, 1, 0],
    [1, 0, 0, 1, 0, -1, 1, 0],
    [1, 0, 0, -1, 0, -1, -1, 0],
    [0, 1, 1, 0, -1, 0, 0, 1],
    [0, 1, -1, 0, 1, 0, 0, 1],
    [0, 1, -1, 0, -1, 0, 0, -1],
    [0, 1, 1, 0, 1, 0, 0, -1],
];

/// Four-qubit rays, ids 1..=80.
///
/// Ids 9..=16, 25..=32 and 41..=48 are absent from the printed listing. They
/// are the remaining product eigenvectors of the magic rectangle columns, and
/// this is the only assignment under which every listed four-qubit proof
/// basis is orthogonal (see `tests/catalog_completion.rs`).
pub(crate) const RAYS_80: [[i8; 16]; 80] = [
    [1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, -1, 0, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 1, 0, -1, 0],
    [0, 1, 0, -1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, -1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, -1, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1],
    [0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, -1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, -1, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 1, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, -1, 0, -1],
    [1, 0, -1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, -1],
    [0, 1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, -1],
    [1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, -1, 0],
    [1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, -1, 0],
    [1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, -1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, -1, -1, 0, 0],
    [1, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, -1, -1],
    [0, 0, 1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 1, -1],
    [1, 1, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, -1, 1, 0, 0],
    [1, -1, 1, -1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1],
    [1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1],
    [1, 1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1],
    [1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1],
    [1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1],
    [1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1, -1, -1, 1],
    [1, -1, 1, -1, -1, 1, -1, 1, -1, 1, -1, 1, 1, -1, 1, -1],
    [1, -1, -1, 1, 1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1],
    [1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1, 1, 1, -1, -1],
    [1, -1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1, -1, 1],
    [1, -1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1, -1],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1],
    [1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1],
    [1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1],
    [1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1, 1],
    [1, -1, 1, 1, -1, 1, -1, -1, 1, 1, -1, 1, -1, -1, 1, -1],
    [1, -1, -1, -1, -1, 1, 1, 1, -1, -1, -1, 1, 1, 1, 1, -1],
    [1, 1, -1, 1, 1, 1, -1, 1, -1, 1, -1, -1, -1, 1, -1, -1],
    [1, 1, -1, 1, -1, -1, 1, -1, -1, 1, -1, -1, 1, -1, 1, 1],
    [1, -1, -1, -1, 1, -1, -1, -1, 1, 1, 1, -1, 1, 1, 1, -1],
    [1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1, 1, -1, 1, -1, -1],
    [1, 1, -1, 1, 1, 1, -1, 1, 1, -1, 1, 1, 1, -1, 1, 1],
    [1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, 1],
    [1, -1, 1, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, 1, -1, 1],
    [1, -1, 1, 1, -1, 1, -1, -1, -1, -1, 1, -1, 1, 1, -1, 1],
    [1, 1, 1, -1, 1, 1, 1, -1, -1, 1, 1, 1, -1, 1, 1, 1],
    [1, -1, -1, -1, 1, -1, -1, -1, -1, -1, -1, 1, -1, -1, -1, 1],
    [1, 1, 1, -1, 1, 1, 1, -1, 1, -1, -1, -1, 1, -1, -1, -1],
    [1, -1, 1, 1, 1, -1, 1, 1, -1, -1, 1, -1, -1, -1, 1, -1],
    [1, 1, 1, -1, -1, -1, -1, 1, -1, 1, 1, 1, 1, -1, -1, -1],
];

/// Ids of the four-qubit rays that appear in the printed listing.
pub(crate) const RAYS_80_PRINTED: [usize; 56] = [1, 2, 3, 4, 5, 6, 7, 8, 17, 18, 19, 20, 21, 22, 23, 24, 33, 34, 35, 36, 37, 38, 39, 40, 49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 64, 65, 66, 67, 68, 69, 70, 71, 72, 73, 74, 75, 76, 77, 78, 79, 80];

/// The 24 two-qubit bases in reference order.
pub(crate) const BASES_24: [[usize; 4]; 24] = [
    [1, 2, 3, 4],
    [5, 6, 7, 8],
    [9, 10, 11, 12],
    [13, 14, 15, 16],
    [17, 18, 19, 20],
    [21, 22, 23, 24],
    [1, 2, 15, 16],
    [1, 3, 17, 18],
    [1, 4, 23, 24],
    [2, 3, 21, 22],
    [2, 4, 19, 20],
    [3, 4, 13, 14],
    [5, 6, 14, 16],
    [5, 7, 18, 20],
    [5, 8, 21, 23],
    [6, 7, 22, 24],
    [6, 8, 17, 19],
    [7, 8, 13, 15],
    [9, 10, 13, 16],
    [9, 11, 18, 19],
    [9, 12, 22, 23],
    [10, 11, 21, 24],
    [10, 12, 17, 20],
    [11, 12, 14, 15],
];

/// The 25 three-qubit bases in reference order.
pub(crate) const BASES_25: [[usize; 8]; 25] = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [1, 2, 3, 4, 13, 14, 15, 16],
    [1, 2, 5, 6, 21, 22, 23, 24],
    [1, 3, 5, 7, 29, 30, 31, 32],
    [1, 4, 6, 7, 37, 38, 39, 40],
    [5, 6, 7, 8, 9, 10, 11, 12],
    [9, 10, 11, 12, 13, 14, 15, 16],
    [9, 10, 13, 14, 19, 20, 23, 24],
    [9, 11, 13, 15, 27, 28, 31, 32],
    [9, 12, 14, 15, 34, 36, 38, 39],
    [10, 11, 13, 16, 33, 35, 37, 40],
    [10, 12, 14, 16, 25, 26, 29, 30],
    [11, 12, 15, 16, 17, 18, 21, 22],
    [3, 4, 7, 8, 17, 18, 19, 20],
    [17, 18, 19, 20, 21, 22, 23, 24],
    [17, 19, 21, 23, 26, 28, 30, 32],
    [17, 20, 22, 23, 35, 36, 37, 39],
    [18, 19, 21, 24, 33, 34, 38, 40],
    [18, 20, 22, 24, 25, 27, 29, 31],
    [2, 4, 6, 8, 25, 26, 27, 28],
    [25, 26, 27, 28, 29, 30, 31, 32],
    [25, 28, 30, 31, 33, 36, 37, 38],
    [26, 27, 29, 32, 34, 35, 39, 40],
    [2, 3, 5, 8, 33, 34, 35, 36],
    [33, 34, 35, 36, 37, 38, 39, 40],
];

/// The 16 three-qubit 36-11 proofs containing bases 1, 2 and 3 (basis indices).
pub(crate) const PROOFS_36_11_WITH_123: [[usize; 11]; 16] = [
    [1, 2, 3, 4, 8, 9, 11, 16, 17, 23, 24],
    [1, 2, 3, 4, 8, 9, 11, 18, 19, 22, 24],
    [1, 2, 3, 4, 8, 10, 12, 16, 17, 22, 24],
    [1, 2, 3, 4, 8, 10, 12, 18, 19, 23, 24],
    [1, 2, 3, 4, 9, 10, 13, 16, 18, 23, 24],
    [1, 2, 3, 4, 9, 10, 13, 17, 19, 22, 24],
    [1, 2, 3, 4, 11, 12, 13, 16, 18, 22, 24],
    [1, 2, 3, 4, 11, 12, 13, 17, 19, 23, 24],
    [1, 2, 3, 5, 8, 9, 11, 16, 17, 20, 22],
    [1, 2, 3, 5, 8, 9, 11, 18, 19, 20, 23],
    [1, 2, 3, 5, 8, 10, 12, 16, 17, 20, 23],
    [1, 2, 3, 5, 8, 10, 12, 18, 19, 20, 22],
    [1, 2, 3, 5, 9, 10, 13, 16, 18, 20, 22],
    [1, 2, 3, 5, 9, 10, 13, 17, 19, 20, 23],
    [1, 2, 3, 5, 11, 12, 13, 16, 18, 20, 23],
    [1, 2, 3, 5, 11, 12, 13, 17, 19, 20, 22],
];

/// The first of those proofs, written out as ray sets.
pub(crate) const PROOF_36_11_ELEVEN: [[usize; 8]; 11] = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [10, 11, 13, 16, 33, 35, 37, 40],
    [17, 19, 21, 23, 26, 28, 30, 32],
    [17, 20, 22, 23, 35, 36, 37, 39],
    [9, 11, 13, 15, 27, 28, 31, 32],
    [1, 3, 5, 7, 29, 30, 31, 32],
    [2, 3, 5, 8, 33, 34, 35, 36],
    [1, 2, 3, 4, 13, 14, 15, 16],
    [1, 2, 5, 6, 21, 22, 23, 24],
    [26, 27, 29, 32, 34, 35, 39, 40],
    [9, 10, 13, 14, 19, 20, 23, 24],
];

/// The four-qubit 80-21 proof as ray sets.
pub(crate) const PROOF_80_21: [[usize; 16]; 21] = [
    [35, 37, 43, 45, 51, 53, 54, 57, 65, 69, 71, 72, 74, 76, 77, 80],
    [17, 18, 25, 26, 35, 37, 39, 40, 43, 45, 47, 48, 51, 52, 57, 59],
    [35, 40, 43, 48, 50, 52, 58, 59, 61, 62, 63, 64, 68, 70, 78, 79],
    [1, 2, 4, 5, 7, 11, 12, 16, 21, 22, 25, 26, 35, 37, 39, 48],
    [3, 7, 8, 16, 18, 19, 20, 21, 24, 25, 30, 31, 33, 42, 44, 46],
    [1, 2, 3, 4, 6, 7, 8, 9, 10, 12, 14, 16, 19, 20, 24, 31],
    [1, 6, 10, 12, 23, 24, 31, 32, 33, 34, 36, 46, 49, 60, 62, 64],
    [17, 18, 20, 21, 22, 25, 26, 27, 29, 30, 31, 32, 37, 43, 47, 48],
    [20, 27, 31, 32, 33, 34, 36, 37, 38, 41, 42, 43, 44, 46, 47, 48],
    [1, 2, 9, 10, 20, 27, 31, 32, 37, 43, 47, 48, 52, 53, 57, 63],
    [3, 7, 11, 15, 33, 34, 41, 42, 54, 55, 57, 58, 59, 60, 63, 64],
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16],
    [2, 3, 10, 11, 12, 13, 14, 16, 65, 66, 74, 75, 76, 78, 79, 80],
    [33, 36, 41, 44, 56, 58, 60, 62, 65, 69, 70, 73, 74, 75, 77, 79],
    [4, 6, 12, 14, 51, 54, 56, 58, 59, 60, 61, 62, 65, 69, 73, 75],
    [18, 21, 26, 29, 49, 50, 55, 64, 66, 67, 68, 71, 76, 77, 79, 80],
    [5, 11, 13, 15, 21, 22, 23, 27, 28, 29, 30, 32, 53, 54, 61, 63],
    [5, 11, 13, 15, 17, 18, 23, 25, 26, 27, 28, 32, 51, 52, 57, 59],
    [33, 34, 36, 38, 41, 42, 44, 46, 65, 66, 67, 69, 71, 73, 75, 80],
    [17, 18, 20, 21, 22, 24, 25, 26, 28, 29, 30, 32, 67, 69, 75, 80],
    [1, 6, 10, 12, 33, 34, 36, 39, 40, 46, 47, 48, 66, 67, 73, 75],
];

/// The two bases appended to 80-21 to obtain the 80-23 proof, in reference order.
pub(crate) const PROOF_80_EXTRA: [[usize; 16]; 2] = [
    [2, 10, 12, 14, 35, 37, 43, 45, 65, 69, 71, 74, 76, 78, 79, 80],
    [49, 50, 55, 56, 58, 60, 62, 64, 68, 70, 72, 74, 76, 77, 78, 79],
];

