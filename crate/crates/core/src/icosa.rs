//! Classification of the icosahedral subgroups of the hyperoctahedral group:
//! exhaustive generator-pair search, character typing, the 192-member
//! conjugacy class, its rotation-subgroup split, and full-icosahedral
//! (order 120) extensions.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::atlas;
use crate::chartab::{character_vector, decompose_character, CharacterVector};
use crate::group::{
    a5_census, closure, closure_bounded, conjugacy_class_of_subgroup, icosahedral_pair,
    GroupSet,
};
use crate::perm::SignedPerm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    /// Conjugacy verification failed: the pair search and the conjugation
    /// sweep disagree, so one of them missed members.
    #[error("IncompleteInput: {0}")]
    IncompleteInput(String),
    /// No conjugating element exists in the given ambient group.
    #[error("NotConjugate: no conjugating element in the ambient group")]
    NotConjugate,
    /// A subgroup decomposed into an unexpected irrep combination.
    #[error("UnexpectedCharacter: {0}")]
    UnexpectedCharacter(String),
}

/// The three character types of 60-element subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IsoType {
    /// T₁ ⊕ T₂ — the crystallographic type.
    Cryst,
    /// 2A ⊕ G — the coordinate-permutation type.
    Perm,
    /// A ⊕ H — the type arising from the six-point transitive action.
    Exotic,
}

impl std::fmt::Display for IsoType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            IsoType::Cryst => "T1+T2",
            IsoType::Perm => "2A+G",
            IsoType::Exotic => "A+H",
        };
        f.write_str(s)
    }
}

/// An icosahedral subgroup with its canonical generating pair and character
/// data. The pair is the least (x, y) with |x| = 2, |y| = 3, |xy| = 5
/// generating the group, so it does not depend on how the group was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IcosaRep {
    pub group: GroupSet,
    pub g2: SignedPerm,
    pub g3: SignedPerm,
    pub character: CharacterVector,
    pub iso_type: IsoType,
}

impl IcosaRep {
    /// Builds the representation data for a verified 60-element subgroup,
    /// choosing the canonical generating pair.
    pub fn from_group(group: GroupSet) -> Result<IcosaRep, ClassifyError> {
        let (g2, g3) = icosahedral_pair(&group).ok_or_else(|| {
            ClassifyError::IncompleteInput("group has no (2,3,5) generating pair".into())
        })?;
        IcosaRep::with_pair(group, g2, g3)
    }

    /// Builds the representation data around a caller-chosen generating
    /// pair. The pair fixes which invariant subspace counts as parallel,
    /// so pinned representatives keep their reference generators.
    pub fn from_generators(g2: SignedPerm, g3: SignedPerm) -> Result<IcosaRep, ClassifyError> {
        let group = closure(&[g2, g3]);
        IcosaRep::with_pair(group, g2, g3)
    }

    fn with_pair(
        group: GroupSet,
        g2: SignedPerm,
        g3: SignedPerm,
    ) -> Result<IcosaRep, ClassifyError> {
        let character = character_vector(&group, &g2, &g3)
            .map_err(|e| ClassifyError::UnexpectedCharacter(e.to_string()))?;
        let mults = decompose_character(&character)
            .map_err(|e| ClassifyError::UnexpectedCharacter(e.to_string()))?;
        let iso_type = if mults.is_crystallographic() {
            IsoType::Cryst
        } else if (mults.a, mults.g, mults.t1, mults.t2, mults.h) == (2, 1, 0, 0, 0) {
            IsoType::Perm
        } else if (mults.a, mults.h, mults.t1, mults.t2, mults.g) == (1, 1, 0, 0, 0) {
            IsoType::Exotic
        } else {
            return Err(ClassifyError::UnexpectedCharacter(mults.to_string()));
        };
        Ok(IcosaRep { group, g2, g3, character, iso_type })
    }
}

/// The standard crystallographic representative, with its reference
/// generator pair.
pub fn build_ihat() -> IcosaRep {
    let rep = IcosaRep::from_generators(atlas::sigma_g2(), atlas::sigma_g3())
        .expect("standard embedding is icosahedral");
    debug_assert_eq!(rep.iso_type, IsoType::Cryst);
    rep
}

/// The pinned representative of the second rotation-subgroup class.
pub fn build_second_class_rep() -> IcosaRep {
    let (a, b) = atlas::second_class_generators();
    IcosaRep::from_generators(a, b).expect("pinned second-class group is icosahedral")
}

/// The partner representation sharing a ten-element dihedral subgroup with
/// the standard embedding.
pub fn build_d10_partner() -> IcosaRep {
    let (a, b) = atlas::d10_partner_generators();
    IcosaRep::from_generators(a, b).expect("pinned partner group is icosahedral")
}

/// Every subgroup isomorphic to the 60-element icosahedral group, found by
/// exhaustive search over pairs (x, y) with |x| = 2, |y| = 3, |xy| = 5.
/// Every such group contains a pair of this shape, so the search is
/// complete. Results are canonically sorted and independent of the
/// iteration order; `shuffle_seed` reorders the candidate lists to make
/// that property testable.
pub fn find_all_icosahedral_subgroups(
    ambient: &[SignedPerm],
    shuffle_seed: Option<u64>,
) -> Vec<IcosaRep> {
    let mut twos: Vec<SignedPerm> =
        ambient.iter().filter(|x| x.order() == 2).copied().collect();
    let mut threes: Vec<SignedPerm> =
        ambient.iter().filter(|x| x.order() == 3).copied().collect();
    if let Some(seed) = shuffle_seed {
        shuffle(&mut twos, seed);
        shuffle(&mut threes, seed ^ 0x9e37_79b9_7f4a_7c15);
    }

    let chunk = (twos.len() / (8 * rayon::current_num_threads().max(1))).max(1);
    let found: Vec<HashSet<GroupSet>> = twos
        .par_chunks(chunk)
        .map(|xs| {
            let mut groups: Vec<GroupSet> = Vec::new();
            let mut index: HashMap<SignedPerm, Vec<usize>> = HashMap::new();
            for x in xs {
                for y in &threes {
                    if x.multiply(y).order() != 5 {
                        continue;
                    }
                    if let Some(ids) = index.get(x) {
                        if ids.iter().any(|&i| groups[i].contains(y)) {
                            // Both generators sit inside a known group; an
                            // order-60 group has no proper subgroup with
                            // elements of orders 2, 3 and 5, so the closure
                            // is that group.
                            continue;
                        }
                    }
                    let c = match closure_bounded(&[*x, *y], 60) {
                        Some(c) if c.len() == 60 => c,
                        _ => continue,
                    };
                    if c.order_census() != a5_census() {
                        continue;
                    }
                    let id = groups.len();
                    for e in c.elements() {
                        index.entry(*e).or_default().push(id);
                    }
                    groups.push(c);
                }
            }
            groups.into_iter().collect()
        })
        .collect();

    let mut all: HashSet<GroupSet> = HashSet::new();
    for part in found {
        all.extend(part);
    }
    let mut groups: Vec<GroupSet> = all.into_iter().collect();
    groups.sort();
    groups
        .into_iter()
        .map(|g| IcosaRep::from_group(g).expect("census-checked group is icosahedral"))
        .collect()
}

fn shuffle<T>(v: &mut [T], seed: u64) {
    // splitmix64-driven Fisher-Yates; reproducible, dependency-free.
    let mut state = seed;
    let mut next = move || {
        state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    };
    for i in (1..v.len()).rev() {
        let j = (next() % (i as u64 + 1)) as usize;
        v.swap(i, j);
    }
}

/// A non-crystallographic class: a representative plus its full conjugacy
/// class size in the ambient group.
#[derive(Debug, Clone)]
pub struct NonCrystClass {
    pub representative: IcosaRep,
    pub class_size: usize,
}

/// The classified landscape: the crystallographic class with all 192
/// members, its split into two rotation-subgroup classes, and the
/// representatives of the two non-crystallographic types.
#[derive(Debug, Clone)]
pub struct RepCatalog {
    /// All crystallographic representations, canonically ordered.
    pub members: Vec<IcosaRep>,
    /// Index of the standard representative in `members`.
    pub ihat_index: usize,
    /// For each member, which rotation-subgroup class it belongs to (0 for
    /// the class of the standard representative, 1 for the other).
    pub plus_class: Vec<u8>,
    pub noncryst: Vec<NonCrystClass>,
}

impl RepCatalog {
    pub fn ihat(&self) -> &IcosaRep {
        &self.members[self.ihat_index]
    }

    pub fn index_of(&self, group: &GroupSet) -> Option<usize> {
        self.members.binary_search_by(|m| m.group.cmp(group)).ok()
    }

    pub fn split_sizes(&self) -> (usize, usize) {
        let ones = self.plus_class.iter().filter(|&&c| c == 1).count();
        (self.plus_class.len() - ones, ones)
    }

    /// Member indices of each rotation-subgroup class.
    pub fn split_indices(&self) -> (Vec<usize>, Vec<usize>) {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (i, &c) in self.plus_class.iter().enumerate() {
            if c == 0 {
                a.push(i)
            } else {
                b.push(i)
            }
        }
        (a, b)
    }
}

/// Sorts the complete list of icosahedral subgroups into the catalog,
/// cross-validating the pair search against conjugation sweeps.
pub fn classify(
    reps: Vec<IcosaRep>,
    b6: &[SignedPerm],
    b6_plus: &[SignedPerm],
) -> Result<RepCatalog, ClassifyError> {
    let mut cryst: Vec<IcosaRep> = Vec::new();
    let mut perm: Vec<IcosaRep> = Vec::new();
    let mut exotic: Vec<IcosaRep> = Vec::new();
    for r in reps {
        match r.iso_type {
            IsoType::Cryst => cryst.push(r),
            IsoType::Perm => perm.push(r),
            IsoType::Exotic => exotic.push(r),
        }
    }

    // Independent route to the crystallographic class: sweep conjugation of
    // the standard representative over the whole ambient group.
    let ihat = build_ihat();
    let sweep = conjugacy_class_of_subgroup(&ihat.group, b6);
    let from_search: Vec<&GroupSet> = cryst.iter().map(|r| &r.group).collect();
    if sweep.members.len() != from_search.len()
        || !sweep.members.iter().zip(&from_search).all(|(a, b)| a == *b)
    {
        return Err(ClassifyError::IncompleteInput(format!(
            "conjugation sweep found {} crystallographic members, pair search found {}",
            sweep.members.len(),
            from_search.len()
        )));
    }

    // Non-crystallographic classes, verified the same way.
    let mut noncryst = Vec::new();
    for bucket in [perm, exotic] {
        if bucket.is_empty() {
            continue;
        }
        let class = conjugacy_class_of_subgroup(&bucket[0].group, b6);
        if class.members.len() != bucket.len()
            || !class.members.iter().zip(bucket.iter()).all(|(a, b)| *a == b.group)
        {
            return Err(ClassifyError::IncompleteInput(format!(
                "non-crystallographic class of type {} has {} sweep members vs {} search members",
                bucket[0].iso_type,
                class.members.len(),
                bucket.len()
            )));
        }
        noncryst.push(NonCrystClass {
            representative: bucket[0].clone(),
            class_size: bucket.len(),
        });
    }

    // Rotation-subgroup split: sweep both pinned representatives over the
    // rotation subgroup and demand a partition.
    let second = build_second_class_rep();
    let class_a = conjugacy_class_of_subgroup(&ihat.group, b6_plus);
    let class_b = conjugacy_class_of_subgroup(&second.group, b6_plus);
    let mut plus_class = vec![u8::MAX; cryst.len()];
    for (i, r) in cryst.iter().enumerate() {
        let in_a = class_a.contains(&r.group);
        let in_b = class_b.contains(&r.group);
        match (in_a, in_b) {
            (true, false) => plus_class[i] = 0,
            (false, true) => plus_class[i] = 1,
            _ => {
                return Err(ClassifyError::IncompleteInput(format!(
                    "member {i} is in {} rotation-subgroup classes",
                    u8::from(in_a) + u8::from(in_b)
                )))
            }
        }
    }

    let ihat_index = cryst
        .iter()
        .position(|r| r.group == ihat.group)
        .ok_or_else(|| ClassifyError::IncompleteInput("standard representative missing".into()))?;

    Ok(RepCatalog { members: cryst, ihat_index, plus_class, noncryst })
}

/// First ambient element conjugating `h1` onto `h2`, in canonical order.
/// Conjugating the two generators into the target suffices: they generate,
/// and the groups have equal size.
pub fn equivalence_witness(
    h1: &IcosaRep,
    h2: &IcosaRep,
    ambient: &[SignedPerm],
) -> Result<SignedPerm, ClassifyError> {
    ambient
        .iter()
        .find(|g| {
            let gi = g.inverse();
            h2.group.contains(&g.multiply(&h1.g2).multiply(&gi))
                && h2.group.contains(&g.multiply(&h1.g3).multiply(&gi))
        })
        .copied()
        .ok_or(ClassifyError::NotConjugate)
}

/// An order-120 full-icosahedral representation stored as (rotation, sign)
/// pairs with componentwise multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IhRep {
    pairs: Vec<(SignedPerm, i8)>,
}

impl IhRep {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(SignedPerm, i8)] {
        &self.pairs
    }

    pub fn multiply(a: &(SignedPerm, i8), b: &(SignedPerm, i8)) -> (SignedPerm, i8) {
        (a.0.multiply(&b.0), a.1 * b.1)
    }

    /// The matrix view of a pair: the rotation scaled by the sign.
    pub fn to_signed_perm(pair: &(SignedPerm, i8)) -> SignedPerm {
        if pair.1 == 1 {
            pair.0
        } else {
            pair.0.negate()
        }
    }

    /// trace(m ⊗ s) = s · trace(m).
    pub fn trace(pair: &(SignedPerm, i8)) -> i32 {
        i32::from(pair.1) * pair.0.trace()
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<(SignedPerm, i8)> {
        self.pairs
            .iter()
            .filter(|z| {
                self.pairs.iter().all(|x| IhRep::multiply(z, x) == IhRep::multiply(x, z))
            })
            .copied()
            .collect()
    }

    /// First components, deduplicated: recovers the rotation subgroup.
    pub fn rotation_part(&self) -> GroupSet {
        GroupSet::from_elements(self.pairs.iter().map(|p| p.0).collect())
    }
}

/// The order-120 extension `{m ⊗ s : m ∈ h, s = ±1}` of a rotation
/// representation; isomorphic to the direct product with a two-element
/// group.
pub fn build_ih_rep(h: &IcosaRep) -> IhRep {
    let mut pairs = Vec::with_capacity(2 * h.group.len());
    for m in h.group.elements() {
        pairs.push((*m, 1i8));
        pairs.push((*m, -1i8));
    }
    pairs.sort();
    IhRep { pairs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::intersect;
    use crate::perm::enumerate_b6_plus;

    #[test]
    fn standard_rep_has_crystallographic_character() {
        let ihat = build_ihat();
        assert_eq!(ihat.group.len(), 60);
        assert_eq!(ihat.iso_type, IsoType::Cryst);
        assert_eq!(ihat.character.c2, -2);
        assert_eq!(ihat.character.c3, 0);
        assert_eq!(ihat.character.c5, 1);
        assert_eq!(ihat.character.c5sq, 1);
    }

    #[test]
    fn standard_rep_is_recognized_as_icosahedral() {
        let ihat = build_ihat();
        assert!(crate::group::is_icosahedral(&ihat.group));
        assert_eq!(ihat.group.order_census(), crate::group::a5_census());
    }

    #[test]
    fn standard_rep_is_inside_the_rotation_subgroup() {
        let ihat = build_ihat();
        assert!(ihat.group.elements().iter().all(|x| x.determinant() == 1));
    }

    #[test]
    fn ih_extension_has_order_120_and_small_center() {
        let ihat = build_ihat();
        let ih = build_ih_rep(&ihat);
        assert_eq!(ih.len(), 120);
        let center = ih.center();
        assert_eq!(center.len(), 2);
        assert!(center.contains(&(SignedPerm::identity(), -1)));
        assert_eq!(ih.rotation_part(), ihat.group);
        let big_traces =
            ih.pairs().iter().filter(|p| IhRep::trace(p).abs() == 6).count();
        assert_eq!(big_traces, 2);
        // The sign-scaled matrices form a closed 120-element subgroup.
        let materialized =
            GroupSet::from_elements(ih.pairs().iter().map(IhRep::to_signed_perm).collect());
        assert_eq!(materialized.len(), 120);
        assert!(materialized.is_subgroup());
    }

    #[test]
    fn witness_to_itself_accepts_identity() {
        let ihat = build_ihat();
        let b6_plus = enumerate_b6_plus();
        let w = equivalence_witness(&ihat, &ihat, &b6_plus).unwrap();
        assert_eq!(conjugate_by(&ihat.group, &w), ihat.group);
    }

    #[test]
    fn d10_partner_shares_a_ten_element_subgroup() {
        let ihat = build_ihat();
        let partner = build_d10_partner();
        assert_eq!(partner.iso_type, IsoType::Cryst);
        let shared = intersect(&ihat.group, &partner.group);
        assert_eq!(shared.len(), 10);
        assert_eq!(shared, atlas::subgroup_group(crate::chartab::SubgroupName::D10));
    }

    #[test]
    fn reflection_witness_conjugates_standard_onto_partner() {
        let ihat = build_ihat();
        let partner = build_d10_partner();
        let m = atlas::reflection_witness();
        assert_eq!(conjugate_by(&ihat.group, &m), partner.group);
    }

    fn conjugate_by(h: &GroupSet, g: &SignedPerm) -> GroupSet {
        crate::group::conjugate_subgroup(h, g)
    }
}
