//! Character tables and exact decomposition of 6D characters.
//!
//! The icosahedral rotation group has five conjugacy classes (sizes 1, 12,
//! 12, 15, 20) and five irreducibles A, T₁, T₂, G, H; the two order-5
//! columns carry the golden ratio, so the table is stored over Q(√5) and
//! every inner product is exact. Restrictions to the seven proper subgroup
//! types are decomposed against their own tables, with complex-conjugate
//! irreps folded into real pairs (their characters then live in Q(√5) too).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{element_classes, GroupSet};
use crate::perm::SignedPerm;
use crate::qf::QfElem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    /// The supplied pair does not have orders (2, 3) with product of order 5.
    #[error("BadGenerators: pair does not satisfy |x|=2, |y|=3, |xy|=5")]
    BadGenerators,
    /// Inner products did not come out as nonnegative integers.
    #[error("NotACharacter: {0}")]
    NotACharacter(String),
    /// A computed class layout does not match the stored table.
    #[error("ClassMismatch: conjugacy classes do not match the {0} table")]
    ClassMismatch(&'static str),
}

/// Conjugacy classes of the icosahedral group, in table column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IcosaClass {
    E,
    C5,
    C5Sq,
    C2,
    C3,
}

pub const ICOSA_CLASS_SIZES: [u32; 5] = [1, 12, 12, 15, 20];

/// Irreducible representations of the icosahedral group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IcosaIrrep {
    A,
    T1,
    T2,
    G,
    H,
}

impl fmt::Display for IcosaIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IcosaIrrep::A => "A",
            IcosaIrrep::T1 => "T1",
            IcosaIrrep::T2 => "T2",
            IcosaIrrep::G => "G",
            IcosaIrrep::H => "H",
        };
        f.write_str(s)
    }
}

/// One row of the icosahedral character table, exact over Q(√5).
pub fn icosa_character_row(irrep: IcosaIrrep) -> [QfElem; 5] {
    let i = |n: i64| QfElem::from_int(n);
    let tau = QfElem::tau();
    let one_minus_tau = &QfElem::one() - &tau;
    match irrep {
        IcosaIrrep::A => [i(1), i(1), i(1), i(1), i(1)],
        IcosaIrrep::T1 => [i(3), tau, one_minus_tau, i(-1), i(0)],
        IcosaIrrep::T2 => [i(3), one_minus_tau, tau, i(-1), i(0)],
        IcosaIrrep::G => [i(4), i(-1), i(-1), i(0), i(1)],
        IcosaIrrep::H => [i(5), i(0), i(0), i(1), i(-1)],
    }
}

pub const ICOSA_IRREPS: [IcosaIrrep; 5] =
    [IcosaIrrep::A, IcosaIrrep::T1, IcosaIrrep::T2, IcosaIrrep::G, IcosaIrrep::H];

/// Integer traces of a 6D representation at the five class representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharacterVector {
    pub e: i32,
    pub c5: i32,
    pub c5sq: i32,
    pub c2: i32,
    pub c3: i32,
}

impl CharacterVector {
    pub fn value(&self, class: IcosaClass) -> i32 {
        match class {
            IcosaClass::E => self.e,
            IcosaClass::C5 => self.c5,
            IcosaClass::C5Sq => self.c5sq,
            IcosaClass::C2 => self.c2,
            IcosaClass::C3 => self.c3,
        }
    }

    pub fn as_tuple(&self) -> (i32, i32, i32, i32, i32) {
        (self.e, self.c5, self.c5sq, self.c2, self.c3)
    }
}

/// Traces of the matrix view at class representatives E, g₂g₃, (g₂g₃)²,
/// g₂, g₃ for a subgroup generated by a standard (2, 3, 5) pair.
pub fn character_vector(
    h: &GroupSet,
    g2: &SignedPerm,
    g3: &SignedPerm,
) -> Result<CharacterVector, CharError> {
    let g5 = g2.multiply(g3);
    if g2.order() != 2 || g3.order() != 3 || g5.order() != 5 {
        return Err(CharError::BadGenerators);
    }
    debug_assert!(h.contains(g2) && h.contains(g3));
    Ok(CharacterVector {
        e: 6,
        c5: g5.trace(),
        c5sq: g5.multiply(&g5).trace(),
        c2: g2.trace(),
        c3: g3.trace(),
    })
}

/// Nonnegative multiplicities of the five irreducibles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IcosaMultiplicities {
    pub a: u32,
    pub t1: u32,
    pub t2: u32,
    pub g: u32,
    pub h: u32,
}

impl IcosaMultiplicities {
    pub fn value(&self, irrep: IcosaIrrep) -> u32 {
        match irrep {
            IcosaIrrep::A => self.a,
            IcosaIrrep::T1 => self.t1,
            IcosaIrrep::T2 => self.t2,
            IcosaIrrep::G => self.g,
            IcosaIrrep::H => self.h,
        }
    }

    /// True for the T₁ ⊕ T₂ signature that defines a crystallographic
    /// representation: m(T₁) = m(T₂) = 1 and everything else zero.
    pub fn is_crystallographic(&self) -> bool {
        *self == IcosaMultiplicities { a: 0, t1: 1, t2: 1, g: 0, h: 0 }
    }
}

impl fmt::Display for IcosaMultiplicities {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for irrep in ICOSA_IRREPS {
            let m = self.value(irrep);
            match m {
                0 => {}
                1 => parts.push(irrep.to_string()),
                _ => parts.push(format!("{m}{irrep}")),
            }
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `m_i = (1/60) Σ_classes size · χ(class) · χ_i(class)`, demanded to come
/// out as nonnegative rational integers.
pub fn decompose_character(cv: &CharacterVector) -> Result<IcosaMultiplicities, CharError> {
    let classes =
        [IcosaClass::E, IcosaClass::C5, IcosaClass::C5Sq, IcosaClass::C2, IcosaClass::C3];
    let mut out = [0u32; 5];
    for (slot, irrep) in ICOSA_IRREPS.iter().enumerate() {
        let row = icosa_character_row(*irrep);
        let mut acc = QfElem::zero();
        for (k, class) in classes.iter().enumerate() {
            let term = &QfElem::from_int(i64::from(ICOSA_CLASS_SIZES[k]))
                * &QfElem::from_int(i64::from(cv.value(*class)));
            acc += &(&term * &row[k]);
        }
        let m = &acc * &QfElem::from_ratio(1, 60);
        let int = m
            .to_integer()
            .ok_or_else(|| CharError::NotACharacter(format!("m({irrep}) = {m}")))?;
        let small: i64 = int
            .try_into()
            .map_err(|_| CharError::NotACharacter(format!("m({irrep}) out of range")))?;
        if small < 0 {
            return Err(CharError::NotACharacter(format!("m({irrep}) = {small} < 0")));
        }
        out[slot] = small as u32;
    }
    Ok(IcosaMultiplicities { a: out[0], t1: out[1], t2: out[2], g: out[3], h: out[4] })
}

/// Re-sums table rows with given multiplicities; inverse of
/// [`decompose_character`] on genuine characters.
pub fn compose_character(m: &IcosaMultiplicities) -> [QfElem; 5] {
    let mut acc = [QfElem::zero(), QfElem::zero(), QfElem::zero(), QfElem::zero(), QfElem::zero()];
    for irrep in ICOSA_IRREPS {
        let row = icosa_character_row(irrep);
        let mult = QfElem::from_int(i64::from(m.value(irrep)));
        for k in 0..5 {
            acc[k] += &(&mult * &row[k]);
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// Character tables of the proper subgroup types.
// ---------------------------------------------------------------------------

/// A real character table of one of the small subgroup types. Rows whose
/// complex irreducibles come in conjugate pairs are stored folded (their
/// self inner product is then 2 rather than 1), which keeps every entry
/// inside Q(√5).
pub struct SmallTable {
    pub name: &'static str,
    pub class_sizes: Vec<u32>,
    pub irreps: Vec<(&'static str, Vec<QfElem>)>,
}

/// Subgroup types of the icosahedral group, in the conventional order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubgroupName {
    T,
    D10,
    D6,
    D4,
    C5,
    C3,
    C2,
    Trivial,
}

impl SubgroupName {
    pub const NON_TRIVIAL: [SubgroupName; 7] = [
        SubgroupName::T,
        SubgroupName::D10,
        SubgroupName::D6,
        SubgroupName::D4,
        SubgroupName::C5,
        SubgroupName::C3,
        SubgroupName::C2,
    ];

    pub const ALL: [SubgroupName; 8] = [
        SubgroupName::T,
        SubgroupName::D10,
        SubgroupName::D6,
        SubgroupName::D4,
        SubgroupName::C5,
        SubgroupName::C3,
        SubgroupName::C2,
        SubgroupName::Trivial,
    ];

    pub fn order(&self) -> usize {
        match self {
            SubgroupName::T => 12,
            SubgroupName::D10 => 10,
            SubgroupName::D6 => 6,
            SubgroupName::D4 => 4,
            SubgroupName::C5 => 5,
            SubgroupName::C3 => 3,
            SubgroupName::C2 => 2,
            SubgroupName::Trivial => 1,
        }
    }

    /// The three maximal subgroup types.
    pub fn is_maximal(&self) -> bool {
        matches!(self, SubgroupName::T | SubgroupName::D10 | SubgroupName::D6)
    }

    pub fn parse(s: &str) -> Option<SubgroupName> {
        match s.to_ascii_uppercase().as_str() {
            "T" => Some(SubgroupName::T),
            "D10" => Some(SubgroupName::D10),
            "D6" => Some(SubgroupName::D6),
            "D4" => Some(SubgroupName::D4),
            "C5" => Some(SubgroupName::C5),
            "C3" => Some(SubgroupName::C3),
            "C2" => Some(SubgroupName::C2),
            "E" | "TRIVIAL" | "1" => Some(SubgroupName::Trivial),
            _ => None,
        }
    }
}

impl fmt::Display for SubgroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SubgroupName::T => "T",
            SubgroupName::D10 => "D10",
            SubgroupName::D6 => "D6",
            SubgroupName::D4 => "D4",
            SubgroupName::C5 => "C5",
            SubgroupName::C3 => "C3",
            SubgroupName::C2 => "C2",
            SubgroupName::Trivial => "e",
        };
        f.write_str(s)
    }
}

/// `γ = 2cos(2π/5) = τ - 1` and `γ' = 2cos(4π/5) = -τ`.
fn gammas() -> (QfElem, QfElem) {
    let tau = QfElem::tau();
    (&tau - &QfElem::one(), -&tau)
}

pub fn small_table(name: SubgroupName) -> Option<SmallTable> {
    let i = |n: i64| QfElem::from_int(n);
    let (g, gp) = gammas();
    let table = match name {
        SubgroupName::T => SmallTable {
            name: "T",
            class_sizes: vec![1, 4, 4, 3],
            irreps: vec![
                ("A", vec![i(1), i(1), i(1), i(1)]),
                ("E", vec![i(2), i(-1), i(-1), i(2)]),
                ("T", vec![i(3), i(0), i(0), i(-1)]),
            ],
        },
        SubgroupName::D10 => SmallTable {
            name: "D10",
            class_sizes: vec![1, 2, 2, 5],
            irreps: vec![
                ("A1", vec![i(1), i(1), i(1), i(1)]),
                ("A2", vec![i(1), i(1), i(1), i(-1)]),
                ("E1", vec![i(2), g.clone(), gp.clone(), i(0)]),
                ("E2", vec![i(2), gp.clone(), g.clone(), i(0)]),
            ],
        },
        SubgroupName::D6 => SmallTable {
            name: "D6",
            class_sizes: vec![1, 3, 2],
            irreps: vec![
                ("A1", vec![i(1), i(1), i(1)]),
                ("A2", vec![i(1), i(-1), i(1)]),
                ("E", vec![i(2), i(0), i(-1)]),
            ],
        },
        SubgroupName::D4 => SmallTable {
            name: "D4",
            class_sizes: vec![1, 1, 1, 1],
            irreps: vec![
                ("A", vec![i(1), i(1), i(1), i(1)]),
                ("B1", vec![i(1), i(1), i(-1), i(-1)]),
                ("B2", vec![i(1), i(-1), i(1), i(-1)]),
                ("B3", vec![i(1), i(-1), i(-1), i(1)]),
            ],
        },
        SubgroupName::C5 => SmallTable {
            name: "C5",
            class_sizes: vec![1, 1, 1, 1, 1],
            irreps: vec![
                ("A", vec![i(1), i(1), i(1), i(1), i(1)]),
                ("E1", vec![i(2), g.clone(), gp.clone(), gp.clone(), g.clone()]),
                ("E2", vec![i(2), gp.clone(), g.clone(), g.clone(), gp.clone()]),
            ],
        },
        SubgroupName::C3 => SmallTable {
            name: "C3",
            class_sizes: vec![1, 1, 1],
            irreps: vec![
                ("A", vec![i(1), i(1), i(1)]),
                ("E", vec![i(2), i(-1), i(-1)]),
            ],
        },
        SubgroupName::C2 => SmallTable {
            name: "C2",
            class_sizes: vec![1, 1],
            irreps: vec![("A", vec![i(1), i(1)]), ("B", vec![i(1), i(-1)])],
        },
        SubgroupName::Trivial => return None,
    };
    Some(table)
}

/// Orders the element conjugacy classes of `h` to match the stored table
/// columns for the given subgroup type. Power-conjugate column pairs (the
/// two order-5 columns of D10, the order-3 columns of T, the four columns
/// of C5) are anchored at the least element of the relevant order, so the
/// layout is deterministic.
fn table_columns(
    name: SubgroupName,
    h: &GroupSet,
) -> Result<Vec<Vec<SignedPerm>>, CharError> {
    let classes = element_classes(h);
    let class_of = |x: &SignedPerm| -> Option<Vec<SignedPerm>> {
        classes.iter().find(|c| c.contains(x)).cloned()
    };
    let least_of_order = |ord: u32| -> Option<SignedPerm> {
        h.elements().iter().find(|x| x.order() == ord).copied()
    };
    let identity_class = vec![SignedPerm::identity()];
    let mismatch = || CharError::ClassMismatch(name_str(name));

    let cols: Vec<Vec<SignedPerm>> = match name {
        SubgroupName::T => {
            let y = least_of_order(3).ok_or_else(mismatch)?;
            let c3 = class_of(&y).ok_or_else(mismatch)?;
            let c3sq = class_of(&y.multiply(&y)).ok_or_else(mismatch)?;
            let x = least_of_order(2).ok_or_else(mismatch)?;
            let c2 = class_of(&x).ok_or_else(mismatch)?;
            vec![identity_class, c3, c3sq, c2]
        }
        SubgroupName::D10 => {
            let z = least_of_order(5).ok_or_else(mismatch)?;
            let c5 = class_of(&z).ok_or_else(mismatch)?;
            let c5sq = class_of(&z.multiply(&z)).ok_or_else(mismatch)?;
            let x = least_of_order(2).ok_or_else(mismatch)?;
            let c2 = class_of(&x).ok_or_else(mismatch)?;
            vec![identity_class, c5, c5sq, c2]
        }
        SubgroupName::D6 => {
            let x = least_of_order(2).ok_or_else(mismatch)?;
            let y = least_of_order(3).ok_or_else(mismatch)?;
            vec![
                identity_class,
                class_of(&x).ok_or_else(mismatch)?,
                class_of(&y).ok_or_else(mismatch)?,
            ]
        }
        SubgroupName::D4 => {
            let mut invs: Vec<SignedPerm> =
                h.elements().iter().filter(|x| x.order() == 2).copied().collect();
            invs.sort();
            if invs.len() != 3 {
                return Err(mismatch());
            }
            let mut cols = vec![identity_class];
            cols.extend(invs.into_iter().map(|x| vec![x]));
            cols
        }
        SubgroupName::C5 => {
            let z = least_of_order(5).ok_or_else(mismatch)?;
            let mut cols = vec![identity_class];
            let mut p = z;
            for _ in 0..4 {
                cols.push(vec![p]);
                p = p.multiply(&z);
            }
            cols
        }
        SubgroupName::C3 => {
            let z = least_of_order(3).ok_or_else(mismatch)?;
            vec![identity_class, vec![z], vec![z.multiply(&z)]]
        }
        SubgroupName::C2 => {
            let z = least_of_order(2).ok_or_else(mismatch)?;
            vec![identity_class, vec![z]]
        }
        SubgroupName::Trivial => vec![identity_class],
    };

    // The columns must exhaust the group with the advertised sizes.
    let total: usize = cols.iter().map(Vec::len).sum();
    if total != h.len() {
        return Err(mismatch());
    }
    Ok(cols)
}

fn name_str(name: SubgroupName) -> &'static str {
    match name {
        SubgroupName::T => "T",
        SubgroupName::D10 => "D10",
        SubgroupName::D6 => "D6",
        SubgroupName::D4 => "D4",
        SubgroupName::C5 => "C5",
        SubgroupName::C3 => "C3",
        SubgroupName::C2 => "C2",
        SubgroupName::Trivial => "e",
    }
}

/// Decomposes the restriction of the 6D matrix representation to a subgroup
/// of the stated type. Returns irrep-name → multiplicity (zeros omitted).
pub fn decompose_restriction(
    name: SubgroupName,
    h: &GroupSet,
) -> Result<BTreeMap<String, u32>, CharError> {
    let table = match small_table(name) {
        Some(t) => t,
        None => {
            // Restriction to the trivial group: six copies of the unit irrep.
            let mut out = BTreeMap::new();
            out.insert("A".to_string(), 6);
            return Ok(out);
        }
    };
    let cols = table_columns(name, h)?;
    if cols.len() != table.class_sizes.len() {
        return Err(CharError::ClassMismatch(table.name));
    }
    for (col, &size) in cols.iter().zip(&table.class_sizes) {
        if col.len() != size as usize {
            return Err(CharError::ClassMismatch(table.name));
        }
        // Traces are constant on a class.
        let t0 = col[0].trace();
        if col.iter().any(|x| x.trace() != t0) {
            return Err(CharError::ClassMismatch(table.name));
        }
    }
    let order = QfElem::from_int(h.len() as i64);
    let chi: Vec<QfElem> =
        cols.iter().map(|c| QfElem::from_int(i64::from(c[0].trace()))).collect();

    let mut out = BTreeMap::new();
    for (irrep_name, row) in &table.irreps {
        let mut num = QfElem::zero();
        let mut den = QfElem::zero();
        for k in 0..row.len() {
            let size = QfElem::from_int(i64::from(table.class_sizes[k]));
            num += &(&(&size * &chi[k]) * &row[k]);
            den += &(&(&size * &row[k]) * &row[k]);
        }
        let m = &(&num / &order) / &(&den / &order);
        let int = m
            .to_integer()
            .ok_or_else(|| CharError::NotACharacter(format!("m({irrep_name}) = {m}")))?;
        let small: i64 = int
            .try_into()
            .map_err(|_| CharError::NotACharacter(format!("m({irrep_name}) out of range")))?;
        if small < 0 {
            return Err(CharError::NotACharacter(format!("m({irrep_name}) = {small} < 0")));
        }
        if small > 0 {
            out.insert((*irrep_name).to_string(), small as u32);
        }
    }
    Ok(out)
}

/// Formats a decomposition map like `2A2 + E1 + E2`.
pub fn format_decomposition(m: &BTreeMap<String, u32>) -> String {
    let parts: Vec<String> = m
        .iter()
        .map(|(name, mult)| if *mult == 1 { name.clone() } else { format!("{mult}{name}") })
        .collect();
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_columns_cancel_in_the_sum_of_the_two_triplets() {
        // χ(T₁) + χ(T₂) at an order-5 class is τ + (1-τ) = 1 exactly.
        let t1 = icosa_character_row(IcosaIrrep::T1);
        let t2 = icosa_character_row(IcosaIrrep::T2);
        assert_eq!(&t1[1] + &t2[1], QfElem::one());
        assert_eq!(&t1[2] + &t2[2], QfElem::one());
    }

    #[test]
    fn rows_are_orthonormal() {
        for (i, a) in ICOSA_IRREPS.iter().enumerate() {
            for (j, b) in ICOSA_IRREPS.iter().enumerate() {
                let ra = icosa_character_row(*a);
                let rb = icosa_character_row(*b);
                let mut acc = QfElem::zero();
                for k in 0..5 {
                    let size = QfElem::from_int(i64::from(ICOSA_CLASS_SIZES[k]));
                    acc += &(&(&size * &ra[k]) * &rb[k]);
                }
                let ip = &acc * &QfElem::from_ratio(1, 60);
                let expected = if i == j { QfElem::one() } else { QfElem::zero() };
                assert_eq!(ip, expected, "<{a},{b}>");
            }
        }
    }

    fn cv(e: i32, c5: i32, c5sq: i32, c2: i32, c3: i32) -> CharacterVector {
        CharacterVector { e, c5, c5sq, c2, c3 }
    }

    #[test]
    fn crystallographic_signature_decomposes_as_two_triplets() {
        let m = decompose_character(&cv(6, 1, 1, -2, 0)).unwrap();
        assert_eq!(m, IcosaMultiplicities { a: 0, t1: 1, t2: 1, g: 0, h: 0 });
        assert!(m.is_crystallographic());
    }

    #[test]
    fn permutation_signature_decomposes_as_2a_plus_g() {
        let m = decompose_character(&cv(6, 1, 1, 2, 3)).unwrap();
        assert_eq!(m, IcosaMultiplicities { a: 2, t1: 0, t2: 0, g: 1, h: 0 });
        assert_eq!(m.to_string(), "2A + G");
    }

    #[test]
    fn exotic_signature_decomposes_as_a_plus_h() {
        let m = decompose_character(&cv(6, 1, 1, 2, 0)).unwrap();
        assert_eq!(m, IcosaMultiplicities { a: 1, t1: 0, t2: 0, g: 0, h: 1 });
        assert_eq!(m.to_string(), "A + H");
    }

    #[test]
    fn bad_generator_pairs_are_rejected() {
        let g = crate::atlas::sigma_g2();
        let h = crate::group::closure(&[g, crate::atlas::sigma_g3()]);
        // Wrong orders in either slot.
        assert_eq!(
            character_vector(&h, &crate::perm::SignedPerm::identity(), &crate::atlas::sigma_g3()),
            Err(CharError::BadGenerators)
        );
        assert_eq!(
            character_vector(&h, &g, &g),
            Err(CharError::BadGenerators)
        );
        // A (2, 3) pair whose product has order 3 rather than 5.
        assert_eq!(
            character_vector(&h, &crate::atlas::sigma_g2(), &crate::atlas::sigma_g3d()),
            Err(CharError::BadGenerators)
        );
    }

    #[test]
    fn non_characters_are_rejected() {
        assert!(matches!(
            decompose_character(&cv(6, 1, 1, 1, 0)),
            Err(CharError::NotACharacter(_))
        ));
        // Unequal order-5 traces leave a √5 residue in the multiplicity.
        assert!(matches!(
            decompose_character(&cv(6, 2, 0, -2, 0)),
            Err(CharError::NotACharacter(_))
        ));
    }

    #[test]
    fn decomposition_inverts_by_resummation() {
        for tuple in [(6, 1, 1, -2, 0), (6, 1, 1, 2, 3), (6, 1, 1, 2, 0)] {
            let v = cv(tuple.0, tuple.1, tuple.2, tuple.3, tuple.4);
            let m = decompose_character(&v).unwrap();
            let resummed = compose_character(&m);
            let classes =
                [IcosaClass::E, IcosaClass::C5, IcosaClass::C5Sq, IcosaClass::C2, IcosaClass::C3];
            for (k, class) in classes.iter().enumerate() {
                assert_eq!(resummed[k], QfElem::from_int(i64::from(v.value(*class))));
            }
        }
    }

    #[test]
    fn subgroup_names_parse_and_display() {
        for name in SubgroupName::ALL {
            assert_eq!(SubgroupName::parse(&name.to_string()), Some(name));
        }
        assert_eq!(SubgroupName::parse("d10"), Some(SubgroupName::D10));
        assert_eq!(SubgroupName::parse("bogus"), None);
    }

    #[test]
    fn small_tables_have_orthogonal_rows() {
        for name in SubgroupName::NON_TRIVIAL {
            let t = small_table(name).unwrap();
            let order: u32 = t.class_sizes.iter().sum();
            assert_eq!(order as usize, name.order());
            for (i, (_, ra)) in t.irreps.iter().enumerate() {
                for (_, rb) in t.irreps.iter().skip(i + 1) {
                    let mut acc = QfElem::zero();
                    for k in 0..ra.len() {
                        let size = QfElem::from_int(i64::from(t.class_sizes[k]));
                        acc += &(&(&size * &ra[k]) * &rb[k]);
                    }
                    assert!(acc.is_zero(), "rows of {} not orthogonal", t.name);
                }
            }
        }
    }
}
