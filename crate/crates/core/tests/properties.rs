//! Randomized property suites, each run for at least 1,000 cases: group
//! axioms, the two faithful views as homomorphisms, projector algebra, and
//! orbit-stabilizer counting.

use std::sync::LazyLock;

use proptest::prelude::*;

use hexoct::group::{closure, conjugacy_class_of_subgroup, normalizer};
use hexoct::icosa::build_ihat;
use hexoct::perm::{IntMat6, Perm6, SignedPerm};
use hexoct::projection::{projector, Space};
use hexoct::qfmat::QfMat;

/// Unranks one of the 46,080 elements without enumerating them all.
fn element_from_rank(i: usize) -> SignedPerm {
    let bits = i / 720;
    let mut signs = [0u8; 6];
    for (k, s) in signs.iter_mut().enumerate() {
        *s = ((bits >> (5 - k)) & 1) as u8;
    }
    let mut rank = i % 720;
    let mut pool: Vec<u8> = (0..6).collect();
    let mut images = [0u8; 6];
    let mut fact = 120;
    for (k, img) in images.iter_mut().enumerate() {
        let idx = rank / fact;
        rank %= fact;
        *img = pool.remove(idx);
        if k < 5 {
            fact /= 5 - k;
        }
    }
    SignedPerm::new(signs, Perm6::from_images(images).unwrap())
}

fn arb_elem() -> impl Strategy<Value = SignedPerm> {
    (0usize..46_080).prop_map(element_from_rank)
}

fn thousand_cases() -> ProptestConfig {
    ProptestConfig { cases: 1000, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(thousand_cases())]

    #[test]
    fn group_axioms(x in arb_elem(), y in arb_elem(), z in arb_elem()) {
        prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
        prop_assert_eq!(x.multiply(&SignedPerm::identity()), x);
        prop_assert_eq!(SignedPerm::identity().multiply(&x), x);
        prop_assert_eq!(x.multiply(&x.inverse()), SignedPerm::identity());
        prop_assert_eq!(x.inverse().multiply(&x), SignedPerm::identity());
    }

    #[test]
    fn matrix_view_homomorphism(x in arb_elem(), y in arb_elem()) {
        // The matrix view must carry multiplication to the integer matrix
        // product, stay orthogonal, and be invertible back to the element.
        let prod = x.multiply(&y);
        prop_assert_eq!(prod.to_matrix(), x.to_matrix().multiply(&y.to_matrix()));
        let m = x.to_matrix();
        prop_assert_eq!(m.transpose().multiply(&m), IntMat6::identity());
        prop_assert_eq!(SignedPerm::from_matrix(&m).unwrap(), x);
        prop_assert_eq!(prod.determinant(), x.determinant() * y.determinant());
    }

    #[test]
    fn twelve_point_view_homomorphism(x in arb_elem(), y in arb_elem()) {
        let lhs = x.multiply(&y).to_s12();
        let rhs = x.to_s12().compose(&y.to_s12());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(SignedPerm::from_s12(&x.to_s12()).unwrap(), x);
    }
}

struct ProjectorFixture {
    elements: Vec<SignedPerm>,
    p1: QfMat,
    p2: QfMat,
}

static PROJECTORS: LazyLock<ProjectorFixture> = LazyLock::new(|| {
    let ihat = build_ihat();
    ProjectorFixture {
        elements: ihat.group.elements().to_vec(),
        p1: projector(&ihat, Space::Parallel),
        p2: projector(&ihat, Space::Perpendicular),
    }
});

proptest! {
    #![proptest_config(thousand_cases())]

    #[test]
    fn projector_algebra(i in 0usize..60, j in 0usize..60) {
        // Idempotence, complementarity, and invariance of both images under
        // the action of arbitrary products of group elements.
        let fx = &*PROJECTORS;
        let g = fx.elements[i].multiply(&fx.elements[j]);
        let h = QfMat::from_int_mat(&g.to_matrix());
        prop_assert_eq!(fx.p1.multiply(&h), h.multiply(&fx.p1));
        prop_assert_eq!(fx.p2.multiply(&h), h.multiply(&fx.p2));
        prop_assert_eq!(fx.p1.multiply(&fx.p1), fx.p1.clone());
        prop_assert_eq!(fx.p1.add(&fx.p2), QfMat::identity(6));
        prop_assert!(fx.p1.multiply(&fx.p2).is_zero());
    }
}

static ICOSA_ELEMENTS: LazyLock<Vec<SignedPerm>> =
    LazyLock::new(|| build_ihat().group.elements().to_vec());

proptest! {
    #![proptest_config(thousand_cases())]

    #[test]
    fn orbit_stabilizer_counting(picks in proptest::collection::vec(0usize..60, 1..=3)) {
        // |conjugacy class of H| × |normalizer of H| = |ambient| inside the
        // 60-element representation, for subgroups generated by random picks.
        let ambient = &*ICOSA_ELEMENTS;
        let gens: Vec<SignedPerm> = picks.iter().map(|&i| ambient[i]).collect();
        let h = closure(&gens);
        let class = conjugacy_class_of_subgroup(&h, ambient);
        let norm = normalizer(&h, ambient);
        prop_assert_eq!(class.len() * norm.len(), ambient.len());
        // The class member sets are conjugation-invariant in size.
        prop_assert!(class.members.iter().all(|m| m.len() == h.len()));
        // The normalizer contains the subgroup itself.
        prop_assert!(h.is_subset_of(&norm));
    }
}
