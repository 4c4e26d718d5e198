//! Subgroup-level machinery: closure, conjugation, conjugacy classes of
//! subgroups, normalizers, intersections, and small-group structure probes.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::perm::SignedPerm;

/// A finite subgroup stored as a canonically sorted, deduplicated element
/// vector. Canonical order is the lexicographic order on (signs, images),
/// which `SignedPerm`'s derived `Ord` provides; all subgroup hashing and
/// class deduplication rely on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSet {
    elems: Vec<SignedPerm>,
}

impl GroupSet {
    /// Wraps an element list, sorting and deduplicating. Does not check the
    /// subgroup axioms; see [`GroupSet::is_subgroup`].
    pub fn from_elements(mut elems: Vec<SignedPerm>) -> Self {
        elems.sort();
        elems.dedup();
        GroupSet { elems }
    }

    pub fn trivial() -> Self {
        GroupSet { elems: vec![SignedPerm::identity()] }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[SignedPerm] {
        &self.elems
    }

    pub fn contains(&self, x: &SignedPerm) -> bool {
        self.elems.binary_search(x).is_ok()
    }

    pub fn is_subset_of(&self, other: &GroupSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        // Both sides sorted: single merge pass.
        let mut it = other.elems.iter();
        'outer: for x in &self.elems {
            for y in it.by_ref() {
                match y.cmp(x) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// Closure under multiplication, identity and inverses.
    pub fn is_subgroup(&self) -> bool {
        if !self.contains(&SignedPerm::identity()) {
            return false;
        }
        self.elems.iter().all(|x| self.contains(&x.inverse()))
            && self
                .elems
                .iter()
                .all(|x| self.elems.iter().all(|y| self.contains(&x.multiply(y))))
    }

    /// Multiset of element orders, e.g. `{1:1, 2:15, 3:20, 5:24}`.
    pub fn order_census(&self) -> HashMap<u32, usize> {
        let mut census = HashMap::new();
        for x in &self.elems {
            *census.entry(x.order()).or_insert(0) += 1;
        }
        census
    }

    /// Newline-delimited canonical serialization.
    pub fn serialize_lines(&self) -> String {
        let mut s = String::new();
        for x in &self.elems {
            s.push_str(&x.to_string());
            s.push('\n');
        }
        s
    }

    pub fn parse_lines(s: &str) -> Result<GroupSet, crate::perm::PermError> {
        let elems = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.parse())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupSet::from_elements(elems))
    }
}

/// Smallest subgroup containing `generators`; plain breadth-first orbit
/// closure under right multiplication.
pub fn closure(generators: &[SignedPerm]) -> GroupSet {
    assert!(!generators.is_empty(), "closure needs at least one generator");
    closure_bounded(generators, usize::MAX).expect("unbounded closure cannot abort")
}

/// Closure that gives up (returns `None`) once more than `cap` elements have
/// been found. The icosahedral pair search only cares about closures of size
/// 60, so candidates that blow past the cap are discarded cheaply.
pub fn closure_bounded(generators: &[SignedPerm], cap: usize) -> Option<GroupSet> {
    let mut seen: HashSet<SignedPerm> = HashSet::new();
    seen.insert(SignedPerm::identity());
    let mut frontier: Vec<SignedPerm> = vec![SignedPerm::identity()];
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = x.multiply(g);
            if seen.insert(y) {
                if seen.len() > cap {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    Some(GroupSet::from_elements(seen.into_iter().collect()))
}

/// `{g·x·g⁻¹ : x ∈ h}`, re-canonicalized.
pub fn conjugate_subgroup(h: &GroupSet, g: &SignedPerm) -> GroupSet {
    let ginv = g.inverse();
    GroupSet::from_elements(
        h.elements().iter().map(|x| g.multiply(x).multiply(&ginv)).collect(),
    )
}

/// True iff `g · h · g⁻¹ = h`. Tests membership element by element, bailing
/// at the first conjugate that escapes.
pub fn normalizes(h: &GroupSet, g: &SignedPerm) -> bool {
    let ginv = g.inverse();
    h.elements().iter().all(|x| h.contains(&g.multiply(x).multiply(&ginv)))
}

/// A conjugacy class of subgroups: all distinct `g·h·g⁻¹` over the ambient
/// group, canonically ordered, with the class representative kept alongside.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub representative: GroupSet,
    pub members: Vec<GroupSet>,
}

impl SubgroupClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, h: &GroupSet) -> bool {
        self.members.binary_search(h).is_ok()
    }
}

/// Brute conjugation sweep over every ambient element, deduplicating by
/// canonical form.
pub fn conjugacy_class_of_subgroup(h: &GroupSet, ambient: &[SignedPerm]) -> SubgroupClass {
    let chunks: Vec<HashSet<GroupSet>> = ambient
        .par_chunks(2048.max(ambient.len() / 256).max(1))
        .map(|chunk| {
            let mut local = HashSet::new();
            for g in chunk {
                local.insert(conjugate_subgroup(h, g));
            }
            local
        })
        .collect();
    let mut all: HashSet<GroupSet> = HashSet::new();
    for c in chunks {
        all.extend(c);
    }
    let mut members: Vec<GroupSet> = all.into_iter().collect();
    members.sort();
    SubgroupClass { representative: h.clone(), members }
}

/// `N_G(H) = {g ∈ G : gHg⁻¹ = H}` by sweep.
pub fn normalizer(h: &GroupSet, ambient: &[SignedPerm]) -> GroupSet {
    let elems: Vec<SignedPerm> = ambient
        .par_iter()
        .filter(|g| normalizes(h, g))
        .copied()
        .collect();
    GroupSet::from_elements(elems)
}

/// Set intersection of two subgroups (itself a subgroup).
pub fn intersect(h1: &GroupSet, h2: &GroupSet) -> GroupSet {
    let (small, large) = if h1.len() <= h2.len() { (h1, h2) } else { (h2, h1) };
    GroupSet::from_elements(
        small.elements().iter().filter(|x| large.contains(x)).copied().collect(),
    )
}

/// Size of the intersection without materializing it; both element lists are
/// sorted, so a single merge pass suffices.
pub fn intersection_size(h1: &GroupSet, h2: &GroupSet) -> usize {
    let a = h1.elements();
    let b = h2.elements();
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// The order census of the alternating group on five letters: its class
/// equation 1+15+20+12+12 puts 15 elements at order 2, 20 at order 3 and
/// 24 at order 5.
pub fn a5_census() -> HashMap<u32, usize> {
    HashMap::from([(1, 1), (2, 15), (3, 20), (5, 24)])
}

/// True iff `h` is isomorphic to the 60-element icosahedral rotation group:
/// correct order census plus a generating pair (x, y) with |x| = 2, |y| = 3,
/// |xy| = 5 whose closure is all of `h`.
pub fn is_icosahedral(h: &GroupSet) -> bool {
    h.len() == 60 && h.order_census() == a5_census() && icosahedral_pair(h).is_some()
}

/// The canonical generating pair of an icosahedral subgroup: the least
/// (by element order) pair (x, y) with |x| = 2, |y| = 3, |xy| = 5 and
/// closure {x, y} = h. Deterministic because the element list is canonical.
pub fn icosahedral_pair(h: &GroupSet) -> Option<(SignedPerm, SignedPerm)> {
    let twos: Vec<SignedPerm> =
        h.elements().iter().filter(|x| x.order() == 2).copied().collect();
    let threes: Vec<SignedPerm> =
        h.elements().iter().filter(|x| x.order() == 3).copied().collect();
    for x in &twos {
        for y in &threes {
            if x.multiply(y).order() != 5 {
                continue;
            }
            if let Some(c) = closure_bounded(&[*x, *y], h.len()) {
                if c == *h {
                    return Some((*x, *y));
                }
            }
        }
    }
    None
}

/// Conjugacy classes of elements within `h` (not of subgroups).
pub fn element_classes(h: &GroupSet) -> Vec<Vec<SignedPerm>> {
    let mut assigned: HashSet<SignedPerm> = HashSet::new();
    let mut classes = Vec::new();
    for x in h.elements() {
        if assigned.contains(x) {
            continue;
        }
        let mut class: Vec<SignedPerm> =
            h.elements().iter().map(|g| x.conjugate(g)).collect();
        class.sort();
        class.dedup();
        for y in &class {
            assigned.insert(*y);
        }
        classes.push(class);
    }
    classes
}

/// Every subgroup of a small group, by closure of incremental extensions.
/// Intended for groups of order ≤ 60; the lattice is built breadth-first
/// from the trivial subgroup.
pub fn enumerate_subgroups(h: &GroupSet) -> Vec<GroupSet> {
    let mut found: HashSet<GroupSet> = HashSet::new();
    found.insert(GroupSet::trivial());
    let mut frontier: Vec<GroupSet> = vec![GroupSet::trivial()];
    while let Some(k) = frontier.pop() {
        for x in h.elements() {
            if k.contains(x) {
                continue;
            }
            let mut gens: Vec<SignedPerm> = k.elements().to_vec();
            gens.push(*x);
            let ext = closure(&gens);
            if found.insert(ext.clone()) {
                frontier.push(ext);
            }
        }
    }
    let mut out: Vec<GroupSet> = found.into_iter().collect();
    out.sort();
    out
}
