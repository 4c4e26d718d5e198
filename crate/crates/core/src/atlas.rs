//! Pinned generators: the standard icosahedral embedding, its distinguished
//! subgroups, the second rotation-class representative, and the explicit
//! normalizer example.
//!
//! The twelve-point permutations come from labelling icosahedron vertices
//! 1..12 with vertex `i` opposite vertex `i+6`; pulling them back through
//! the antipodal embedding yields signed 6×6 matrices.

use crate::group::{closure, GroupSet};
use crate::perm::{IntMat6, Perm12, SignedPerm};
use crate::qf::QfElem;
use crate::qfmat::QfMat;

fn from_cycles(s: &str) -> SignedPerm {
    SignedPerm::from_s12(&Perm12::parse(s).expect("pinned cycle string parses"))
        .expect("pinned permutation respects the antipodal pairing")
}

/// Standard rotation generators as twelve-point permutations: the order-2
/// and order-3 generators of the icosahedral embedding, the "diagonal"
/// variants used by its subgroups, and a five-fold rotation.
pub fn sigma_g2() -> SignedPerm {
    from_cycles("(1,6)(2,5)(3,9)(4,10)(7,12)(8,11)")
}

pub fn sigma_g2d() -> SignedPerm {
    from_cycles("(1,12)(2,8)(3,4)(5,11)(6,7)(9,10)")
}

pub fn sigma_g3() -> SignedPerm {
    from_cycles("(1,5,6)(2,9,4)(7,11,12)(3,10,8)")
}

pub fn sigma_g3d() -> SignedPerm {
    from_cycles("(1,10,2)(3,5,12)(4,8,7)(6,9,11)")
}

pub fn sigma_g5() -> SignedPerm {
    from_cycles("(1,2,3,4,5)(7,8,9,10,11)")
}

pub fn sigma_g5d() -> SignedPerm {
    from_cycles("(1,10,11,3,6)(4,5,9,12,7)")
}

/// The matrix images of the standard icosahedral generator pair.
pub fn ihat_generator_matrices() -> (IntMat6, IntMat6) {
    let g2 = IntMat6 {
        entries: [
            [0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, 1, 0],
            [0, 0, -1, 0, 0, 0],
            [0, 0, 0, -1, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [1, 0, 0, 0, 0, 0],
        ],
    };
    let g3 = IntMat6 {
        entries: [
            [0, 0, 0, 0, 0, 1],
            [0, 0, 0, 1, 0, 0],
            [0, -1, 0, 0, 0, 0],
            [0, 0, -1, 0, 0, 0],
            [1, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0],
        ],
    };
    (g2, g3)
}

/// Generator pair for the representative of the second rotation-subgroup
/// class: conjugate to the standard embedding in the full group but not in
/// the rotation subgroup.
pub fn second_class_generators() -> (SignedPerm, SignedPerm) {
    let a = IntMat6 {
        entries: [
            [0, 1, 0, 0, 0, 0],
            [1, 0, 0, 0, 0, 0],
            [0, 0, -1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, -1, 0],
            [0, 0, 0, 1, 0, 0],
        ],
    };
    let b = IntMat6 {
        entries: [
            [0, 0, 0, 1, 0, 0],
            [1, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, -1],
            [0, 1, 0, 0, 0, 0],
            [0, 0, -1, 0, 0, 0],
            [0, 0, 0, 0, 1, 0],
        ],
    };
    (
        SignedPerm::from_matrix(&a).expect("pinned matrix is a signed permutation"),
        SignedPerm::from_matrix(&b).expect("pinned matrix is a signed permutation"),
    )
}

/// Generator pair of the partner representation that shares a ten-element
/// dihedral subgroup with the standard embedding.
pub fn d10_partner_generators() -> (SignedPerm, SignedPerm) {
    let a = IntMat6 {
        entries: [
            [0, 0, 0, 0, -1, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, -1, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [-1, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, -1],
        ],
    };
    let b = IntMat6 {
        entries: [
            [0, 0, 0, 0, -1, 0],
            [0, 0, -1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1],
            [1, 0, 0, 0, 0, 0],
            [0, 0, 0, -1, 0, 0],
            [0, -1, 0, 0, 0, 0],
        ],
    };
    (
        SignedPerm::from_matrix(&a).expect("pinned matrix is a signed permutation"),
        SignedPerm::from_matrix(&b).expect("pinned matrix is a signed permutation"),
    )
}

/// `diag(1, -1, 1, 1, 1, 1)`: normalizes the shared dihedral subgroup and
/// conjugates the standard embedding onto its partner; determinant -1.
pub fn reflection_witness() -> SignedPerm {
    "[010000|()]".parse().expect("pinned notation parses")
}

/// Twelve-point generators of the whole hyperoctahedral group.
pub fn b6_s12_generators() -> Vec<SignedPerm> {
    ["(1,2)(7,8)", "(1,2,3,4,5,6)(7,8,9,10,11,12)", "(6,12)"]
        .iter()
        .map(|s| from_cycles(s))
        .collect()
}

/// Twelve-point generators of the rotation (determinant +1) subgroup.
pub fn b6_plus_s12_generators() -> Vec<SignedPerm> {
    [
        "(1,2,6,4,3)(7,8,12,10,9)",
        "(5,11)(6,12)",
        "(1,2,6,5,3)(7,8,12,11,9)",
        "(5,12,11,6)",
    ]
    .iter()
    .map(|s| from_cycles(s))
    .collect()
}

/// Generator pairs (or singletons) of the distinguished subgroups of the
/// standard embedding, keyed by type.
pub fn subgroup_generators(name: crate::chartab::SubgroupName) -> Vec<SignedPerm> {
    use crate::chartab::SubgroupName::*;
    match name {
        T => vec![sigma_g2(), sigma_g3d()],
        D10 => vec![sigma_g2d(), sigma_g5d()],
        D6 => vec![sigma_g2d(), sigma_g3()],
        D4 => vec![sigma_g2d(), sigma_g2()],
        C5 => vec![sigma_g5d()],
        C3 => vec![sigma_g3()],
        C2 => vec![sigma_g2()],
        Trivial => vec![SignedPerm::identity()],
    }
}

/// The subgroup itself, as a closed group set.
pub fn subgroup_group(name: crate::chartab::SubgroupName) -> GroupSet {
    closure(&subgroup_generators(name))
}

// ---------------------------------------------------------------------------
// Reference projection data for the standard embedding.
// ---------------------------------------------------------------------------

/// Off-diagonal sign pattern of the projector onto the physical subspace;
/// the projector itself has 1/2 on the diagonal and ±√5/10 elsewhere.
const PARALLEL_SIGNS: [[i64; 6]; 6] = [
    [0, 1, -1, -1, 1, 1],
    [1, 0, 1, -1, -1, 1],
    [-1, 1, 0, 1, -1, 1],
    [-1, -1, 1, 0, 1, 1],
    [1, -1, -1, 1, 0, 1],
    [1, 1, 1, 1, 1, 0],
];

fn projector_from_signs(flip: bool) -> QfMat {
    QfMat::from_fn(6, 6, |i, j| {
        if i == j {
            QfElem::from_ratio(1, 2)
        } else {
            let s = if flip { -PARALLEL_SIGNS[i][j] } else { PARALLEL_SIGNS[i][j] };
            QfElem::sqrt5_ratio(s, 10)
        }
    })
}

/// The reference projector onto the physical (parallel) subspace of the
/// standard embedding, entrywise exact.
pub fn reference_parallel_projector() -> QfMat {
    projector_from_signs(false)
}

/// Its complement, projecting onto the orthogonal subspace.
pub fn reference_perpendicular_projector() -> QfMat {
    projector_from_signs(true)
}

/// Entry code `(a, b)` meaning `a + b·τ`.
type TauEntry = (i64, i64);

fn tau_matrix(rows: usize, cols: usize, entries: &[&[TauEntry]], denom: i64) -> QfMat {
    let tau = QfElem::tau();
    QfMat::from_fn(rows, cols, |i, j| {
        let (a, b) = entries[i][j];
        let v = &QfElem::from_int(a) + &(&QfElem::from_int(b) * &tau);
        &v * &QfElem::from_ratio(1, denom)
    })
}

/// Integer/τ column pattern of the reducing matrix for the standard
/// embedding: the reference form up to one global positive scale.
pub fn reference_reducing_pattern() -> QfMat {
    let z: TauEntry = (0, 0);
    let o: TauEntry = (1, 0);
    let no: TauEntry = (-1, 0);
    let t: TauEntry = (0, 1);
    let nt: TauEntry = (0, -1);
    let rows: [[TauEntry; 6]; 6] = [
        [t, o, z, t, z, o],
        [z, t, o, no, t, z],
        [no, z, t, z, no, t],
        [z, nt, o, o, t, z],
        [t, no, z, nt, z, o],
        [o, z, t, z, no, nt],
    ];
    let refs: Vec<&[TauEntry]> = rows.iter().map(|r| r.as_slice()).collect();
    tau_matrix(6, 6, &refs, 1)
}

/// Integer/τ pattern of the 3×6 physical-space projection map for the
/// standard embedding, up to one global positive scale.
pub fn reference_parallel_map_pattern() -> QfMat {
    let rows: [[TauEntry; 6]; 3] = [
        [(0, 1), (0, 0), (-1, 0), (0, 0), (0, 1), (1, 0)],
        [(1, 0), (0, 1), (0, 0), (0, -1), (-1, 0), (0, 0)],
        [(0, 0), (1, 0), (0, 1), (1, 0), (0, 0), (0, 1)],
    ];
    let refs: Vec<&[TauEntry]> = rows.iter().map(|r| r.as_slice()).collect();
    tau_matrix(3, 6, &refs, 1)
}

/// The reduced 3×3 generator images of the standard embedding: the pair of
/// inequivalent triplet irreps evaluated at the two generators. Returned as
/// ((T₁(g₂), T₁(g₃)), (T₂(g₂), T₂(g₃))).
pub fn reference_irrep_blocks() -> ((QfMat, QfMat), (QfMat, QfMat)) {
    let t1_g2: [[TauEntry; 3]; 3] = [
        [(-1, 1), (1, 0), (0, 1)],
        [(1, 0), (0, -1), (-1, 1)],
        [(0, 1), (-1, 1), (-1, 0)],
    ];
    let t2_g2: [[TauEntry; 3]; 3] = [
        [(-1, 1), (0, -1), (-1, 0)],
        [(0, -1), (-1, 0), (-1, 1)],
        [(-1, 0), (-1, 1), (0, -1)],
    ];
    let t1_g3: [[TauEntry; 3]; 3] = [
        [(0, 1), (-1, 1), (1, 0)],
        [(1, -1), (-1, 0), (0, 1)],
        [(1, 0), (0, -1), (1, -1)],
    ];
    let t2_g3: [[TauEntry; 3]; 3] = [
        [(-1, 0), (1, -1), (0, -1)],
        [(-1, 1), (0, 1), (-1, 0)],
        [(0, 1), (-1, 0), (1, -1)],
    ];
    let build = |block: &[[TauEntry; 3]; 3]| {
        let refs: Vec<&[TauEntry]> = block.iter().map(|r| r.as_slice()).collect();
        tau_matrix(3, 3, &refs, 2)
    };
    ((build(&t1_g2), build(&t1_g3)), (build(&t2_g2), build(&t2_g3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::SubgroupName;

    #[test]
    fn standard_pair_matches_pinned_matrices() {
        let (m2, m3) = ihat_generator_matrices();
        assert_eq!(sigma_g2().to_matrix(), m2);
        assert_eq!(sigma_g3().to_matrix(), m3);
    }

    #[test]
    fn generator_orders() {
        assert_eq!(sigma_g2().order(), 2);
        assert_eq!(sigma_g2d().order(), 2);
        assert_eq!(sigma_g3().order(), 3);
        assert_eq!(sigma_g3d().order(), 3);
        assert_eq!(sigma_g5().order(), 5);
        assert_eq!(sigma_g5d().order(), 5);
        assert_eq!(sigma_g2().multiply(&sigma_g3()).order(), 5);
    }

    #[test]
    fn subgroup_orders_match_their_types() {
        for name in SubgroupName::ALL {
            assert_eq!(subgroup_group(name).len(), name.order(), "{name}");
        }
    }

    #[test]
    fn dihedral_relations() {
        // |g2d·g5d| = 2 in the ten-element dihedral; |g3·g2d| = 2 in the six.
        assert_eq!(sigma_g5d().multiply(&sigma_g2d()).order(), 2);
        assert_eq!(sigma_g3().multiply(&sigma_g2d()).order(), 2);
        // |g2·g3d| = 3 closes the tetrahedral presentation.
        assert_eq!(sigma_g2().multiply(&sigma_g3d()).order(), 3);
        // |g2·g2d| = 2 closes the Klein four group.
        assert_eq!(sigma_g2().multiply(&sigma_g2d()).order(), 2);
    }

    #[test]
    fn witness_has_negative_determinant() {
        assert_eq!(reflection_witness().determinant(), -1);
        assert_eq!(reflection_witness().order(), 2);
    }

    #[test]
    fn pinned_second_class_pair_is_a_valid_icosahedral_pair() {
        let (a, b) = second_class_generators();
        assert_eq!(a.order(), 2);
        assert_eq!(b.order(), 3);
        assert_eq!(a.multiply(&b).order(), 5);
        assert_eq!(a.determinant(), 1);
        assert_eq!(b.determinant(), 1);
    }

    #[test]
    fn pinned_partner_pair_is_a_valid_icosahedral_pair() {
        let (a, b) = d10_partner_generators();
        assert_eq!(a.order(), 2);
        assert_eq!(b.order(), 3);
        assert_eq!(a.multiply(&b).order(), 5);
    }
}
