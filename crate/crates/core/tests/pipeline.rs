//! Cross-module integration: classification cross-validation failures,
//! conjugacy witnesses inside the rotation subgroup, and the pinned
//! ten-element-dihedral example.

use std::sync::LazyLock;

use hexoct::group::{conjugate_subgroup, intersect};
use hexoct::icosa::{
    build_d10_partner, build_ihat, build_second_class_rep, classify, equivalence_witness,
    find_all_icosahedral_subgroups, ClassifyError, IcosaRep,
};
use hexoct::perm::{enumerate_b6, enumerate_b6_plus, SignedPerm};

struct Groups {
    b6: Vec<SignedPerm>,
    b6_plus: Vec<SignedPerm>,
    reps: Vec<IcosaRep>,
}

static GROUPS: LazyLock<Groups> = LazyLock::new(|| {
    let b6 = enumerate_b6();
    let b6_plus = enumerate_b6_plus();
    let reps = find_all_icosahedral_subgroups(&b6, None);
    Groups { b6, b6_plus, reps }
});

#[test]
fn truncated_search_results_are_rejected() {
    let g = &*GROUPS;
    let mut truncated = g.reps.clone();
    truncated.pop();
    let err = classify(truncated, &g.b6, &g.b6_plus).unwrap_err();
    assert!(matches!(err, ClassifyError::IncompleteInput(_)));
}

#[test]
fn second_class_rep_is_not_conjugate_in_the_rotation_subgroup() {
    let g = &*GROUPS;
    let ihat = build_ihat();
    let second = build_second_class_rep();
    assert_eq!(
        equivalence_witness(&ihat, &second, &g.b6_plus),
        Err(ClassifyError::NotConjugate)
    );
    // In the full group they are conjugate, by a reflection.
    let w = equivalence_witness(&ihat, &second, &g.b6).unwrap();
    assert_eq!(conjugate_subgroup(&ihat.group, &w), second.group);
    assert_eq!(w.determinant(), -1);
}

#[test]
fn dihedral_partner_is_only_reachable_through_reflections() {
    let g = &*GROUPS;
    let ihat = build_ihat();
    let partner = build_d10_partner();
    assert_eq!(intersect(&ihat.group, &partner.group).len(), 10);
    assert_eq!(
        equivalence_witness(&ihat, &partner, &g.b6_plus),
        Err(ClassifyError::NotConjugate)
    );
    let w = equivalence_witness(&ihat, &partner, &g.b6).unwrap();
    assert_eq!(conjugate_subgroup(&ihat.group, &w), partner.group);
    assert_eq!(w.determinant(), -1);
}
