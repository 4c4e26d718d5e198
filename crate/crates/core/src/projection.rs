//! Projection of a crystallographic representation onto its two invariant
//! 3D subspaces: character-weighted group averages, the reducing matrix,
//! block-diagonal reduction, the commutation property, the projected
//! icosahedron orbit, and the three invariant-lattice membership tests.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::icosa::{IcosaRep, IsoType};
use crate::perm::SignedPerm;
use crate::qf::QfElem;
use crate::qfmat::{dot, gram_schmidt, QfMat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectionError {
    /// Neither the column recipe nor greedy selection produced six
    /// independent columns.
    #[error("DegenerateBasis: projector columns do not span a 6-dimensional space")]
    DegenerateBasis,
    /// Conjugation by the reducing matrix left nonzero off-diagonal blocks.
    #[error("NotReduced: conjugation left nonzero off-diagonal blocks")]
    NotReduced,
}

/// Which invariant subspace a projector targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Parallel,
    Perpendicular,
}

/// Splits the sixty elements into trace classes and accumulates the
/// character-weighted average `(3/60) Σ_g χ(g) Γ(g)`; the two order-5
/// classes are told apart by conjugacy with the canonical five-fold
/// element g₂g₃.
pub fn projector(rep: &IcosaRep, which: Space) -> QfMat {
    assert_eq!(rep.iso_type, IsoType::Cryst, "projectors need the T1+T2 type");
    let tau = QfElem::tau();
    let one_minus_tau = &QfElem::one() - &tau;
    let (chi_c5, chi_c5sq) = match which {
        Space::Parallel => (tau.clone(), one_minus_tau.clone()),
        Space::Perpendicular => (one_minus_tau, tau),
    };

    let g5 = rep.g2.multiply(&rep.g3);
    let c5_class: HashSet<SignedPerm> =
        rep.group.elements().iter().map(|g| g5.conjugate(g)).collect();
    debug_assert_eq!(c5_class.len(), 12);
    debug_assert!(!c5_class.contains(&g5.multiply(&g5)));

    let mut acc = QfMat::zero(6, 6);
    for g in rep.group.elements() {
        let chi = match g.order() {
            1 => QfElem::from_int(3),
            2 => QfElem::from_int(-1),
            3 => continue, // character vanishes on the order-3 class
            5 => {
                if c5_class.contains(g) {
                    chi_c5.clone()
                } else {
                    chi_c5sq.clone()
                }
            }
            o => unreachable!("element of order {o} in an icosahedral group"),
        };
        let m = g.to_matrix();
        for i in 0..6 {
            for j in 0..6 {
                let e = m.entries[i][j];
                if e == 0 {
                    continue;
                }
                let term = if e == 1 { chi.clone() } else { -&chi };
                acc[(i, j)] += &term;
            }
        }
    }
    acc.scale(&QfElem::from_ratio(1, 20))
}

/// The reference column recipe: three half-sum/half-difference combinations
/// of projector columns per subspace.
fn recipe_columns(p1: &QfMat, p2: &QfMat) -> Vec<Vec<QfElem>> {
    let half = QfElem::from_ratio(1, 2);
    let comb = |p: &QfMat, a: usize, b: usize, sub: bool| -> Vec<QfElem> {
        let ca = p.column(a);
        let cb = p.column(b);
        ca.iter()
            .zip(&cb)
            .map(|(x, y)| {
                let s = if sub { x - y } else { x + y };
                &s * &half
            })
            .collect()
    };
    vec![
        comb(p1, 0, 4, false),
        comb(p1, 1, 3, true),
        comb(p1, 2, 5, false),
        comb(p2, 0, 4, true),
        comb(p2, 1, 3, false),
        comb(p2, 2, 5, true),
    ]
}

fn is_diagonal(m: &QfMat) -> bool {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if i != j && !m[(i, j)].is_zero() {
                return false;
            }
        }
    }
    true
}

/// A reducing matrix whose first three columns span the parallel subspace
/// and last three the perpendicular one, with pairwise orthogonal columns
/// (so its inverse is a diagonal rescaling of its transpose). The column
/// recipe is used when it already comes out orthogonal; otherwise columns
/// are picked greedily from the projector images and orthogonalized.
pub fn reducing_matrix(rep: &IcosaRep) -> Result<QfMat, ProjectionError> {
    let p1 = projector(rep, Space::Parallel);
    let p2 = projector(rep, Space::Perpendicular);

    let recipe = recipe_columns(&p1, &p2);
    let r = QfMat::from_columns(&recipe);
    if r.rank() == 6 && is_diagonal(&r.transpose().multiply(&r)) {
        return Ok(r);
    }
    greedy_reducing_matrix(&p1, &p2)
}

/// The fallback basis: greedy rank-revealing column selection from the
/// projector images, orthogonalized exactly. Column norms are generally
/// unequal here, unlike the recipe's.
pub fn greedy_reducing_matrix(p1: &QfMat, p2: &QfMat) -> Result<QfMat, ProjectionError> {
    let mut cols: Vec<Vec<QfElem>> = Vec::with_capacity(6);
    for p in [p1, p2] {
        let basis = gram_schmidt(&(0..6).map(|j| p.column(j)).collect::<Vec<_>>());
        if basis.len() != 3 {
            return Err(ProjectionError::DegenerateBasis);
        }
        cols.extend(basis);
    }
    let r = QfMat::from_columns(&cols);
    if r.rank() != 6 {
        return Err(ProjectionError::DegenerateBasis);
    }
    debug_assert!(is_diagonal(&r.transpose().multiply(&r)));
    Ok(r)
}

/// `R⁻¹ = D⁻¹ Rᵀ` for a matrix with orthogonal columns, `D = RᵀR`.
fn orthogonal_inverse(r: &QfMat) -> QfMat {
    let d = r.transpose().multiply(r);
    debug_assert!(is_diagonal(&d));
    QfMat::from_fn(r.cols(), r.rows(), |i, j| &r[(j, i)] / &d[(i, i)])
}

/// The reduced generator images: two 3×3 blocks per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrepPair {
    pub t1_g2: QfMat,
    pub t1_g3: QfMat,
    pub t2_g2: QfMat,
    pub t2_g3: QfMat,
}

/// Conjugates both generators by the reducing matrix and extracts the
/// diagonal blocks, demanding exactly zero off-diagonal blocks.
pub fn reduce_rep(rep: &IcosaRep) -> Result<IrrepPair, ProjectionError> {
    let r = reducing_matrix(rep)?;
    reduce_with(rep, &r)
}

/// Like [`reduce_rep`] but with a caller-supplied reducing matrix (used to
/// check that one matrix reduces a whole family into the same blocks).
pub fn reduce_with(rep: &IcosaRep, r: &QfMat) -> Result<IrrepPair, ProjectionError> {
    let rinv = orthogonal_inverse(r);
    let mut blocks = Vec::with_capacity(2);
    for g in [&rep.g2, &rep.g3] {
        let h = QfMat::from_int_mat(&g.to_matrix());
        let reduced = rinv.multiply(&h).multiply(r);
        if !reduced.block(0, 3, 3, 6).is_zero() || !reduced.block(3, 6, 0, 3).is_zero() {
            return Err(ProjectionError::NotReduced);
        }
        blocks.push((reduced.block(0, 3, 0, 3), reduced.block(3, 6, 3, 6)));
    }
    let (t1_g2, t2_g2) = blocks.remove(0);
    let (t1_g3, t2_g3) = blocks.remove(0);
    Ok(IrrepPair { t1_g2, t1_g3, t2_g2, t2_g3 })
}

/// Verifies the intertwining property: the parallel map commutes the 6D
/// action into the first reduced block and the perpendicular map into the
/// second, exactly, for both generators.
pub fn commutation_check(rep: &IcosaRep) -> bool {
    let r = match reducing_matrix(rep) {
        Ok(r) => r,
        Err(_) => return false,
    };
    let pair = match reduce_with(rep, &r) {
        Ok(p) => p,
        Err(_) => return false,
    };
    let rinv = orthogonal_inverse(&r);
    let pi_par = rinv.block(0, 3, 0, 6);
    let pi_perp = rinv.block(3, 6, 0, 6);
    let checks = [
        (&rep.g2, &pair.t1_g2, &pair.t2_g2),
        (&rep.g3, &pair.t1_g3, &pair.t2_g3),
    ];
    checks.iter().all(|(g, t1, t2)| {
        let h = QfMat::from_int_mat(&g.to_matrix());
        pi_par.multiply(&h) == t1.multiply(&pi_par)
            && pi_perp.multiply(&h) == t2.multiply(&pi_perp)
    })
}

/// The parallel projection map: the first three rows of the inverse of the
/// reducing matrix.
pub fn parallel_map(rep: &IcosaRep) -> Result<QfMat, ProjectionError> {
    let r = reducing_matrix(rep)?;
    Ok(orthogonal_inverse(&r).block(0, 3, 0, 6))
}

/// The projected images of the six basis vectors and their negatives:
/// twelve exact points in the physical subspace.
pub fn icosahedron_orbit(rep: &IcosaRep) -> Result<Vec<[QfElem; 3]>, ProjectionError> {
    let pi = parallel_map(rep)?;
    let mut points = Vec::with_capacity(12);
    for j in 0..6 {
        let col = pi.column(j);
        let p: [QfElem; 3] = [col[0].clone(), col[1].clone(), col[2].clone()];
        let n: [QfElem; 3] = [-&p[0], -&p[1], -&p[2]];
        points.push(p);
        points.push(n);
    }
    Ok(points)
}

/// Geometry summary of a projected orbit: the common squared norm and the
/// two off-diagonal Gram values of the six defining vectors.
pub struct OrbitGeometry {
    pub norm_sq: QfElem,
    pub gram_values: Vec<QfElem>,
}

/// Checks that all points share one squared norm and that the Gram matrix
/// of the six distinct directions takes exactly two opposite off-diagonal
/// values.
pub fn orbit_geometry(points: &[[QfElem; 3]]) -> Option<OrbitGeometry> {
    let as_vec = |p: &[QfElem; 3]| vec![p[0].clone(), p[1].clone(), p[2].clone()];
    let norm_sq = dot(&as_vec(&points[0]), &as_vec(&points[0]));
    if points.iter().any(|p| dot(&as_vec(p), &as_vec(p)) != norm_sq) {
        return None;
    }
    // Unsigned directions: every second point is a negative.
    let six: Vec<Vec<QfElem>> = points.iter().step_by(2).map(as_vec).collect();
    let mut values: Vec<QfElem> = Vec::new();
    for i in 0..six.len() {
        for j in i + 1..six.len() {
            let v = dot(&six[i], &six[j]);
            if !values.contains(&v) {
                values.push(v);
            }
        }
    }
    if values.len() != 2 {
        return None;
    }
    if values[0] != -&values[1] {
        return None;
    }
    Some(OrbitGeometry { norm_sq, gram_values: values })
}

/// A rational point of 6-space, tested against the three invariant lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePoint {
    pub coords: [BigRational; 6],
}

impl LatticePoint {
    pub fn from_ratios(coords: [(i64, i64); 6]) -> Self {
        LatticePoint {
            coords: coords
                .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }
}

/// The three lattice families left invariant by the crystallographic
/// representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeKind {
    /// All-integer coordinates.
    Sc,
    /// Half-integers with all doubled coordinates of equal parity.
    Bcc,
    /// Half-integers whose doubled coordinates have even sum.
    Fcc,
}

pub fn lattice_membership(p: &LatticePoint, kind: LatticeKind) -> bool {
    let doubled: Option<Vec<BigInt>> = p
        .coords
        .iter()
        .map(|c| {
            let d = c * BigRational::from_integer(BigInt::from(2));
            d.is_integer().then(|| d.to_integer())
        })
        .collect();
    let doubled = match doubled {
        Some(d) => d,
        None => return false,
    };
    let parity = |x: &BigInt| -> BigInt { ((x % 2) + 2) % 2 };
    match kind {
        LatticeKind::Sc => p.coords.iter().all(|c| c.is_integer()),
        LatticeKind::Bcc => {
            let p0 = parity(&doubled[0]);
            doubled.iter().all(|x| parity(x) == p0)
        }
        LatticeKind::Fcc => {
            parity(&doubled.iter().fold(BigInt::zero(), |acc, x| acc + x)).is_zero()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;
    use crate::icosa::build_ihat;

    #[test]
    fn projectors_match_reference_entries() {
        let ihat = build_ihat();
        assert_eq!(projector(&ihat, Space::Parallel), atlas::reference_parallel_projector());
        assert_eq!(
            projector(&ihat, Space::Perpendicular),
            atlas::reference_perpendicular_projector()
        );
    }

    #[test]
    fn projector_algebra() {
        let ihat = build_ihat();
        let p1 = projector(&ihat, Space::Parallel);
        let p2 = projector(&ihat, Space::Perpendicular);
        assert_eq!(p1.multiply(&p1), p1);
        assert_eq!(p2.multiply(&p2), p2);
        assert_eq!(p1.add(&p2), QfMat::identity(6));
        assert!(p1.multiply(&p2).is_zero());
        assert_eq!(p1.transpose(), p1);
        assert_eq!(p1.rank(), 3);
        assert_eq!(p2.rank(), 3);
    }

    #[test]
    fn projectors_commute_with_the_action() {
        let ihat = build_ihat();
        let p1 = projector(&ihat, Space::Parallel);
        for g in [&ihat.g2, &ihat.g3] {
            let h = QfMat::from_int_mat(&g.to_matrix());
            assert_eq!(p1.multiply(&h), h.multiply(&p1));
        }
    }

    #[test]
    fn recipe_reducing_matrix_is_proportional_to_reference() {
        let ihat = build_ihat();
        let r = reducing_matrix(&ihat).unwrap();
        let pattern = atlas::reference_reducing_pattern();
        // One global positive ratio relates our recipe columns to the
        // reference pattern.
        let ratio = &pattern[(0, 0)] / &r[(0, 0)];
        assert!(ratio.is_positive());
        assert_eq!(r.scale(&ratio), pattern);
    }

    #[test]
    fn gram_of_reducing_matrix_is_scalar() {
        let ihat = build_ihat();
        let r = reducing_matrix(&ihat).unwrap();
        let d = r.transpose().multiply(&r);
        let first = d[(0, 0)].clone();
        assert!(first.is_positive());
        for i in 0..6 {
            for j in 0..6 {
                let expected = if i == j { first.clone() } else { QfElem::zero() };
                assert_eq!(d[(i, j)], expected);
            }
        }
        // Columns 1-3 are fixed by the parallel projector.
        let p1 = projector(&ihat, Space::Parallel);
        let fixed = p1.multiply(&r.block(0, 6, 0, 3));
        assert_eq!(fixed, r.block(0, 6, 0, 3));
    }

    #[test]
    fn reduction_reproduces_reference_blocks() {
        let ihat = build_ihat();
        let pair = reduce_rep(&ihat).unwrap();
        let ((t1_g2, t1_g3), (t2_g2, t2_g3)) = atlas::reference_irrep_blocks();
        assert_eq!(pair.t1_g2, t1_g2);
        assert_eq!(pair.t1_g3, t1_g3);
        assert_eq!(pair.t2_g2, t2_g2);
        assert_eq!(pair.t2_g3, t2_g3);
    }

    #[test]
    fn reduced_blocks_are_orthogonal_and_have_reference_traces() {
        let ihat = build_ihat();
        let pair = reduce_rep(&ihat).unwrap();
        let tau = QfElem::tau();
        for b in [&pair.t1_g2, &pair.t1_g3, &pair.t2_g2, &pair.t2_g3] {
            assert_eq!(b.transpose().multiply(b), QfMat::identity(3));
        }
        assert_eq!(pair.t1_g2.trace(), QfElem::from_int(-1));
        assert_eq!(pair.t1_g3.trace(), QfElem::zero());
        let t1_g5 = pair.t1_g2.multiply(&pair.t1_g3);
        let t2_g5 = pair.t2_g2.multiply(&pair.t2_g3);
        assert_eq!(t1_g5.trace(), tau);
        assert_eq!(t2_g5.trace(), &QfElem::one() - &tau);
    }

    #[test]
    fn greedy_fallback_also_block_diagonalizes() {
        // The fallback basis spans the same invariant subspaces, so it must
        // reduce the generators even though its column norms differ.
        let ihat = build_ihat();
        let p1 = projector(&ihat, Space::Parallel);
        let p2 = projector(&ihat, Space::Perpendicular);
        let r = greedy_reducing_matrix(&p1, &p2).unwrap();
        let d = r.transpose().multiply(&r);
        for i in 0..6 {
            assert!(d[(i, i)].is_positive());
            for j in 0..6 {
                if i != j {
                    assert!(d[(i, j)].is_zero());
                }
            }
        }
        let pair = reduce_with(&ihat, &r).unwrap();
        assert_eq!(pair.t1_g2.trace(), QfElem::from_int(-1));
        assert_eq!(pair.t1_g3.trace(), QfElem::zero());
    }

    #[test]
    fn wrong_basis_is_rejected() {
        let ihat = build_ihat();
        assert_eq!(reduce_with(&ihat, &QfMat::identity(6)), Err(ProjectionError::NotReduced));
    }

    #[test]
    fn commutation_holds_and_swapped_blocks_fail() {
        let ihat = build_ihat();
        assert!(commutation_check(&ihat));

        // Swapping the two blocks breaks the intertwining identity.
        let r = reducing_matrix(&ihat).unwrap();
        let pair = reduce_with(&ihat, &r).unwrap();
        let rinv = orthogonal_inverse(&r);
        let pi_par = rinv.block(0, 3, 0, 6);
        let h = QfMat::from_int_mat(&ihat.g2.to_matrix());
        assert_ne!(pi_par.multiply(&h), pair.t2_g2.multiply(&pi_par));
    }

    #[test]
    fn orbit_geometry_matches_reference_ratio() {
        let ihat = build_ihat();
        let points = icosahedron_orbit(&ihat).unwrap();
        assert_eq!(points.len(), 12);
        let geom = orbit_geometry(&points).expect("regular orbit");

        // Same norm²-to-|gram| ratio as the reference parallel map pattern.
        let pattern = atlas::reference_parallel_map_pattern();
        let pat_points: Vec<[QfElem; 3]> = (0..6)
            .map(|j| {
                let c = pattern.column(j);
                [c[0].clone(), c[1].clone(), c[2].clone()]
            })
            .flat_map(|p| {
                let n = [-&p[0], -&p[1], -&p[2]];
                [p, n]
            })
            .collect();
        let pat_geom = orbit_geometry(&pat_points).expect("pattern orbit is regular");

        let abs = |v: &QfElem| if v.is_positive() { v.clone() } else { -v };
        let ours_off = abs(&geom.gram_values[0]);
        let pat_off = abs(&pat_geom.gram_values[0]);
        assert_eq!(&geom.norm_sq * &pat_off, &pat_geom.norm_sq * &ours_off);
    }

    #[test]
    fn lattice_membership_cases() {
        let origin = LatticePoint::from_ratios([(0, 1); 6]);
        for kind in [LatticeKind::Sc, LatticeKind::Bcc, LatticeKind::Fcc] {
            assert!(lattice_membership(&origin, kind));
        }

        let halves = LatticePoint::from_ratios([(1, 2); 6]);
        assert!(!lattice_membership(&halves, LatticeKind::Sc));
        assert!(lattice_membership(&halves, LatticeKind::Bcc));
        assert!(lattice_membership(&halves, LatticeKind::Fcc));

        let two_halves =
            LatticePoint::from_ratios([(1, 2), (1, 2), (0, 1), (0, 1), (0, 1), (0, 1)]);
        assert!(!lattice_membership(&two_halves, LatticeKind::Sc));
        assert!(!lattice_membership(&two_halves, LatticeKind::Bcc));
        assert!(lattice_membership(&two_halves, LatticeKind::Fcc));

        let third = LatticePoint::from_ratios([(1, 3), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]);
        for kind in [LatticeKind::Sc, LatticeKind::Bcc, LatticeKind::Fcc] {
            assert!(!lattice_membership(&third, kind));
        }
    }
}
