//! Element arithmetic of the 6D hyperoctahedral group.
//!
//! The working representation is the wreath-product pair form: a sign vector
//! over Z₂⁶ together with a permutation of six letters, multiplied by
//! `(a, π)(b, σ) = (a_σ + b, πσ)` with `(a_σ)_k = a_{σ(k)}` and
//! `(πσ)(k) = π(σ(k))`. Two faithful views are provided: the signed 6×6
//! permutation matrix `T(a, π)_{ij} = (-1)^{a_j} δ_{i,π(j)}` and the
//! permutation of twelve points that sends `k` to `π(k) + 6a_k` (antipodal
//! pairs `k ↔ k+6` encode the signs).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from conversions into the pair form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    /// A 12-point permutation that does not respect the antipodal pairing
    /// `k ↔ k+6` lies outside the embedded copy of the group.
    #[error("NotInImage: permutation does not respect the antipodal pairing k <-> k+6")]
    NotInImage,
    /// A 6×6 integer matrix that is not a signed permutation matrix.
    #[error("matrix is not a signed permutation matrix")]
    NotSignedPermutation,
    /// Malformed element notation.
    #[error("cannot parse element notation: {0}")]
    BadNotation(String),
}

/// A permutation of `{1..6}`, stored 0-based: `images[i]` is the image of `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm6 {
    images: [u8; 6],
}

impl Perm6 {
    pub fn identity() -> Self {
        Perm6 { images: [0, 1, 2, 3, 4, 5] }
    }

    /// Builds from 0-based images; `None` unless they form a bijection.
    pub fn from_images(images: [u8; 6]) -> Option<Self> {
        let mut seen = [false; 6];
        for &i in &images {
            if i >= 6 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Perm6 { images })
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k] as usize
    }

    pub fn images(&self) -> &[u8; 6] {
        &self.images
    }

    /// Composition `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Perm6) -> Perm6 {
        let mut images = [0u8; 6];
        for k in 0..6 {
            images[k] = self.images[other.images[k] as usize];
        }
        Perm6 { images }
    }

    pub fn inverse(&self) -> Perm6 {
        let mut images = [0u8; 6];
        for k in 0..6 {
            images[self.images[k] as usize] = k as u8;
        }
        Perm6 { images }
    }

    /// +1 for even permutations, -1 for odd.
    pub fn sign(&self) -> i32 {
        let mut seen = [false; 6];
        let mut sign = 1;
        for start in 0..6 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] as usize;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Disjoint cycles on 1-based labels, each starting at its least element,
    /// fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        cycles_of(&self.images)
    }
}

fn cycles_of(images: &[u8]) -> Vec<Vec<u8>> {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] || images[start] as usize == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = Vec::new();
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            cycle.push(k as u8 + 1);
            k = images[k] as usize;
        }
        out.push(cycle);
    }
    out
}

fn cycles_to_string(cycles: &[Vec<u8>]) -> String {
    if cycles.is_empty() {
        return "()".to_string();
    }
    let mut s = String::new();
    for c in cycles {
        s.push('(');
        for (i, v) in c.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&v.to_string());
        }
        s.push(')');
    }
    s
}

/// Parses cycle notation like `(1 2)(3 4 5)` or `(1,2,6,4,3)`; `()` is the
/// identity. Labels are 1-based and must stay within `n`.
fn parse_cycles(s: &str, n: usize) -> Result<Vec<u8>, PermError> {
    let bad = |msg: &str| PermError::BadNotation(format!("{msg}: {s}"));
    let mut images: Vec<u8> = (0..n as u8).collect();
    let mut used = vec![false; n];
    let t = s.trim();
    if t.is_empty() {
        return Err(bad("empty cycle string"));
    }
    let mut rest = t;
    let mut any = false;
    while !rest.is_empty() {
        let open = rest.find('(').ok_or_else(|| bad("expected '('"))?;
        if !rest[..open].trim().is_empty() {
            return Err(bad("junk between cycles"));
        }
        let close = rest.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let body = &rest[open + 1..close];
        rest = &rest[close + 1..];
        any = true;
        let labels: Vec<usize> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<usize>().map_err(|_| bad("bad label")))
            .collect::<Result<_, _>>()?;
        if labels.is_empty() {
            continue; // "()" — identity cycle
        }
        for &l in &labels {
            if l == 0 || l > n {
                return Err(bad("label out of range"));
            }
            if used[l - 1] {
                return Err(bad("repeated label"));
            }
            used[l - 1] = true;
        }
        for w in 0..labels.len() {
            let from = labels[w] - 1;
            let to = labels[(w + 1) % labels.len()] - 1;
            images[from] = to as u8;
        }
    }
    if !any {
        return Err(bad("no cycles"));
    }
    Ok(images)
}

/// A signed permutation: the pair (sign vector, permutation).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPerm {
    signs: [u8; 6],
    perm: Perm6,
}

impl SignedPerm {
    pub fn new(signs: [u8; 6], perm: Perm6) -> Self {
        debug_assert!(signs.iter().all(|&s| s <= 1));
        SignedPerm { signs, perm }
    }

    pub fn identity() -> Self {
        SignedPerm { signs: [0; 6], perm: Perm6::identity() }
    }

    pub fn signs(&self) -> &[u8; 6] {
        &self.signs
    }

    pub fn perm(&self) -> &Perm6 {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        *self == SignedPerm::identity()
    }

    /// Wreath-product multiplication `(a, π)(b, σ) = (a_σ + b, πσ)`.
    #[inline]
    pub fn multiply(&self, rhs: &SignedPerm) -> SignedPerm {
        let mut signs = [0u8; 6];
        let mut images = [0u8; 6];
        for k in 0..6 {
            let sk = rhs.perm.images[k] as usize;
            signs[k] = self.signs[sk] ^ rhs.signs[k];
            images[k] = self.perm.images[sk];
        }
        SignedPerm { signs, perm: Perm6 { images } }
    }

    /// Inverse `(a_{π⁻¹}, π⁻¹)`.
    #[inline]
    pub fn inverse(&self) -> SignedPerm {
        let pinv = self.perm.inverse();
        let mut signs = [0u8; 6];
        for k in 0..6 {
            signs[k] = self.signs[pinv.images[k] as usize];
        }
        SignedPerm { signs, perm: pinv }
    }

    /// `g · x · g⁻¹`.
    #[inline]
    pub fn conjugate(&self, by: &SignedPerm) -> SignedPerm {
        by.multiply(self).multiply(&by.inverse())
    }

    /// Multiplicative order.
    pub fn order(&self) -> u32 {
        let mut acc = *self;
        let mut n = 1;
        while !acc.is_identity() {
            acc = acc.multiply(self);
            n += 1;
            debug_assert!(n <= 64, "element order exceeds the group exponent");
        }
        n
    }

    pub fn pow(&self, mut e: u32) -> SignedPerm {
        let mut acc = SignedPerm::identity();
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base);
            }
            base = base.multiply(&base);
            e >>= 1;
        }
        acc
    }

    /// `det = sign(π) · (-1)^{#negative signs}`.
    pub fn determinant(&self) -> i32 {
        let flips: u32 = self.signs.iter().map(|&s| s as u32).sum();
        self.perm.sign() * if flips % 2 == 0 { 1 } else { -1 }
    }

    /// The signed permutation matrix `T(a, π)_{ij} = (-1)^{a_j} δ_{i,π(j)}`.
    pub fn to_matrix(&self) -> IntMat6 {
        let mut m = [[0i32; 6]; 6];
        for j in 0..6 {
            let i = self.perm.images[j] as usize;
            m[i][j] = if self.signs[j] == 0 { 1 } else { -1 };
        }
        IntMat6 { entries: m }
    }

    /// Inverts `to_matrix`.
    pub fn from_matrix(m: &IntMat6) -> Result<SignedPerm, PermError> {
        let mut signs = [0u8; 6];
        let mut images = [0u8; 6];
        for j in 0..6 {
            let mut hit = None;
            for i in 0..6 {
                match m.entries[i][j] {
                    0 => {}
                    1 | -1 if hit.is_none() => hit = Some((i, m.entries[i][j])),
                    _ => return Err(PermError::NotSignedPermutation),
                }
            }
            let (i, v) = hit.ok_or(PermError::NotSignedPermutation)?;
            images[j] = i as u8;
            signs[j] = if v == 1 { 0 } else { 1 };
        }
        let perm = Perm6::from_images(images).ok_or(PermError::NotSignedPermutation)?;
        Ok(SignedPerm { signs, perm })
    }

    /// The faithful 12-point permutation: `k ↦ π(k) + 6a_k` on the first six
    /// points and the antipodal rule on the last six.
    pub fn to_s12(&self) -> Perm12 {
        let mut images = [0u8; 12];
        for k in 0..6 {
            let base = self.perm.images[k];
            images[k] = base + 6 * self.signs[k];
            images[k + 6] = base + 6 * (1 - self.signs[k]);
        }
        Perm12 { images }
    }

    /// Inverts `to_s12`; fails with [`PermError::NotInImage`] when the
    /// permutation does not respect the antipodal pairing.
    pub fn from_s12(p: &Perm12) -> Result<SignedPerm, PermError> {
        let mut signs = [0u8; 6];
        let mut images = [0u8; 6];
        for k in 0..6 {
            let img = p.images[k];
            if img < 6 {
                images[k] = img;
                signs[k] = 0;
            } else {
                images[k] = img - 6;
                signs[k] = 1;
            }
        }
        let perm = Perm6::from_images(images).ok_or(PermError::NotInImage)?;
        let rebuilt = SignedPerm { signs, perm };
        if rebuilt.to_s12() == *p {
            Ok(rebuilt)
        } else {
            Err(PermError::NotInImage)
        }
    }

    /// `-x`: every entry of the matrix view negated.
    pub fn negate(&self) -> SignedPerm {
        let mut signs = self.signs;
        for s in &mut signs {
            *s ^= 1;
        }
        SignedPerm { signs, perm: self.perm }
    }

    /// trace of the matrix view, without building it.
    pub fn trace(&self) -> i32 {
        let mut t = 0;
        for k in 0..6 {
            if self.perm.images[k] as usize == k {
                t += if self.signs[k] == 0 { 1 } else { -1 };
            }
        }
        t
    }
}

/// The three standard generators: a transposition, a 6-cycle, and a single
/// sign flip on the last coordinate.
pub fn standard_generators() -> (SignedPerm, SignedPerm, SignedPerm) {
    let alpha = SignedPerm::new([0; 6], Perm6::from_images([1, 0, 2, 3, 4, 5]).unwrap());
    let beta = SignedPerm::new([0; 6], Perm6::from_images([1, 2, 3, 4, 5, 0]).unwrap());
    let gamma = SignedPerm::new([0, 0, 0, 0, 0, 1], Perm6::identity());
    (alpha, beta, gamma)
}

/// A 6×6 integer matrix; the matrix view of group elements and the carrier
/// for exact integer products and traces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntMat6 {
    pub entries: [[i32; 6]; 6],
}

impl IntMat6 {
    pub fn identity() -> Self {
        let mut m = [[0; 6]; 6];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        IntMat6 { entries: m }
    }

    pub fn multiply(&self, rhs: &IntMat6) -> IntMat6 {
        let mut out = [[0i32; 6]; 6];
        for i in 0..6 {
            for k in 0..6 {
                let a = self.entries[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..6 {
                    out[i][j] += a * rhs.entries[k][j];
                }
            }
        }
        IntMat6 { entries: out }
    }

    pub fn transpose(&self) -> IntMat6 {
        let mut out = [[0i32; 6]; 6];
        for i in 0..6 {
            for j in 0..6 {
                out[j][i] = self.entries[i][j];
            }
        }
        IntMat6 { entries: out }
    }

    pub fn trace(&self) -> i32 {
        (0..6).map(|i| self.entries[i][i]).sum()
    }
}

/// A permutation of `{1..12}`, stored 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm12 {
    images: [u8; 12],
}

impl Perm12 {
    pub fn identity() -> Self {
        let mut images = [0u8; 12];
        for (k, v) in images.iter_mut().enumerate() {
            *v = k as u8;
        }
        Perm12 { images }
    }

    pub fn from_images(images: [u8; 12]) -> Option<Self> {
        let mut seen = [false; 12];
        for &i in &images {
            if i >= 12 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Perm12 { images })
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k] as usize
    }

    pub fn images(&self) -> &[u8; 12] {
        &self.images
    }

    /// `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Perm12) -> Perm12 {
        let mut images = [0u8; 12];
        for k in 0..12 {
            images[k] = self.images[other.images[k] as usize];
        }
        Perm12 { images }
    }

    pub fn cycles(&self) -> Vec<Vec<u8>> {
        cycles_of(&self.images)
    }

    /// Parses 1-based cycle notation such as `(1,2,6,4,3)(7,8,12,10,9)`.
    pub fn parse(s: &str) -> Result<Perm12, PermError> {
        let v = parse_cycles(s, 12)?;
        let mut images = [0u8; 12];
        images.copy_from_slice(&v);
        Ok(Perm12 { images })
    }
}

impl fmt::Display for Perm12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", cycles_to_string(&self.cycles()))
    }
}

/// Textual element notation `[a1..a6|cycles]`, e.g. `[000001|(1 2)]`.
impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: String = self.signs.iter().map(|&s| if s == 0 { '0' } else { '1' }).collect();
        write!(f, "[{}|{}]", signs, cycles_to_string(&self.perm.cycles()))
    }
}

impl FromStr for SignedPerm {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| PermError::BadNotation(format!("{msg}: {s}"));
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("expected [signs|cycles]"))?;
        let (sign_part, cycle_part) = inner.split_once('|').ok_or_else(|| bad("missing '|'"))?;
        if sign_part.len() != 6 {
            return Err(bad("expected 6 sign bits"));
        }
        let mut signs = [0u8; 6];
        for (i, c) in sign_part.chars().enumerate() {
            signs[i] = match c {
                '0' => 0,
                '1' => 1,
                _ => return Err(bad("sign bits must be 0 or 1")),
            };
        }
        let v = parse_cycles(cycle_part, 6)?;
        let mut images = [0u8; 6];
        images.copy_from_slice(&v);
        let perm = Perm6::from_images(images).ok_or_else(|| bad("not a permutation"))?;
        Ok(SignedPerm::new(signs, perm))
    }
}

impl Serialize for SignedPerm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignedPerm {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All 46,080 group elements in canonical (lexicographic) order.
pub fn enumerate_b6() -> Vec<SignedPerm> {
    let mut perms = Vec::with_capacity(720);
    let mut images: [u8; 6] = [0, 1, 2, 3, 4, 5];
    permute_rec(&mut images, 0, &mut perms);
    perms.sort();

    let mut out = Vec::with_capacity(46_080);
    for bits in 0u32..64 {
        let mut signs = [0u8; 6];
        for (k, s) in signs.iter_mut().enumerate() {
            *s = ((bits >> (5 - k)) & 1) as u8;
        }
        for p in &perms {
            out.push(SignedPerm::new(signs, *p));
        }
    }
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    out
}

fn permute_rec(images: &mut [u8; 6], k: usize, out: &mut Vec<Perm6>) {
    if k == 6 {
        out.push(Perm6 { images: *images });
        return;
    }
    for i in k..6 {
        images.swap(k, i);
        permute_rec(images, k + 1, out);
        images.swap(k, i);
    }
}

/// The index-2 rotation subgroup: all elements of determinant +1.
pub fn enumerate_b6_plus() -> Vec<SignedPerm> {
    enumerate_b6().into_iter().filter(|x| x.determinant() == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sp(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    #[test]
    fn multiply_by_identity() {
        let x = sp("[010110|(1 3 5)(2 6)]");
        assert_eq!(x.multiply(&SignedPerm::identity()), x);
        assert_eq!(SignedPerm::identity().multiply(&x), x);
    }

    #[test]
    fn generator_relations() {
        let (alpha, beta, gamma) = standard_generators();
        let id = SignedPerm::identity();
        assert_eq!(alpha.multiply(&alpha), id);
        assert_eq!(gamma.multiply(&gamma), id);
        assert_eq!(beta.pow(6), id);
        assert_eq!(beta.order(), 6);
    }

    #[test]
    fn multiply_agrees_with_matrix_product() {
        // Oracle: multiply in the 6×6 integer matrix view, pull back.
        let (alpha, beta, _) = standard_generators();
        let prod = alpha.multiply(&beta);
        let m = alpha.to_matrix().multiply(&beta.to_matrix());
        assert_eq!(SignedPerm::from_matrix(&m).unwrap(), prod);
    }

    #[test]
    fn identity_matrix_roundtrip() {
        assert_eq!(SignedPerm::identity().to_matrix(), IntMat6::identity());
        assert_eq!(
            SignedPerm::from_matrix(&IntMat6::identity()).unwrap(),
            SignedPerm::identity()
        );
    }

    #[test]
    fn sign_flip_maps_to_transposition_of_antipodes() {
        // Direct evaluation: k=6 ↦ 6+6·1=12 and k=12 ↦ 6+6(1-1)=6.
        let gamma = standard_generators().2;
        assert_eq!(gamma.to_s12(), Perm12::parse("(6 12)").unwrap());
    }

    #[test]
    fn six_cycle_maps_to_double_six_cycle() {
        let beta = standard_generators().1;
        assert_eq!(beta.to_s12(), Perm12::parse("(1,2,3,4,5,6)(7,8,9,10,11,12)").unwrap());
    }

    #[test]
    fn transposition_maps_to_paired_transpositions() {
        let alpha = standard_generators().0;
        assert_eq!(alpha.to_s12(), Perm12::parse("(1 2)(7 8)").unwrap());
    }

    #[test]
    fn s12_identity_roundtrip() {
        assert_eq!(SignedPerm::from_s12(&Perm12::identity()).unwrap(), SignedPerm::identity());
    }

    #[test]
    fn unpaired_permutation_is_rejected() {
        let p = Perm12::parse("(1 2)(3 4)").unwrap();
        assert_eq!(SignedPerm::from_s12(&p), Err(PermError::NotInImage));
    }

    #[test]
    fn determinant_examples() {
        let (_, _, gamma) = standard_generators();
        assert_eq!(SignedPerm::identity().determinant(), 1);
        assert_eq!(gamma.determinant(), -1); // det diag(1,1,1,1,1,-1)
        let m = sp("[010000|()]"); // diag(1,-1,1,1,1,1)
        assert_eq!(m.determinant(), -1);
    }

    #[test]
    fn enumeration_size_and_membership() {
        let all = enumerate_b6();
        assert_eq!(all.len(), 46_080);
        assert!(all.binary_search(&SignedPerm::identity()).is_ok());
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rotation_subgroup_is_index_two() {
        let plus = enumerate_b6_plus();
        assert_eq!(plus.len(), 23_040);
        assert!(plus.iter().all(|x| x.determinant() == 1));
    }

    #[test]
    fn notation_roundtrip() {
        for s in ["[000000|()]", "[000001|(1 2)]", "[110101|(1 4)(2 6 3)]"] {
            assert_eq!(sp(s).to_string(), s);
        }
    }

    #[test]
    fn bad_notation_is_rejected() {
        assert!("[00000|()]".parse::<SignedPerm>().is_err());
        assert!("[000000|(1 1)]".parse::<SignedPerm>().is_err());
        assert!("[000000|(1 7)]".parse::<SignedPerm>().is_err());
        assert!("000000|()".parse::<SignedPerm>().is_err());
        assert!("[000002|()]".parse::<SignedPerm>().is_err());
    }

    fn arb_elem() -> impl Strategy<Value = SignedPerm> {
        (0usize..46_080).prop_map(|i| {
            // Unrank without materializing the full enumeration.
            let bits = i / 720;
            let mut signs = [0u8; 6];
            for (k, s) in signs.iter_mut().enumerate() {
                *s = ((bits >> (5 - k)) & 1) as u8;
            }
            let mut rank = i % 720;
            let mut pool: Vec<u8> = (0..6).collect();
            let mut images = [0u8; 6];
            let mut fact = 120; // 5!
            for (k, img) in images.iter_mut().enumerate() {
                let idx = rank / fact;
                rank %= fact;
                *img = pool.remove(idx);
                if k < 5 {
                    fact /= 5 - k;
                }
            }
            SignedPerm::new(signs, Perm6::from_images(images).unwrap())
        })
    }

    proptest! {
        #[test]
        fn group_axioms(x in arb_elem(), y in arb_elem(), z in arb_elem()) {
            prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
            prop_assert_eq!(x.multiply(&x.inverse()), SignedPerm::identity());
            prop_assert_eq!(x.inverse().multiply(&x), SignedPerm::identity());
        }

        #[test]
        fn matrix_view_is_a_homomorphism(x in arb_elem(), y in arb_elem()) {
            let lhs = x.multiply(&y).to_matrix();
            let rhs = x.to_matrix().multiply(&y.to_matrix());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn matrix_view_is_orthogonal(x in arb_elem()) {
            let m = x.to_matrix();
            prop_assert_eq!(m.transpose().multiply(&m), IntMat6::identity());
        }

        #[test]
        fn twelve_point_view_is_a_homomorphism(x in arb_elem(), y in arb_elem()) {
            let lhs = x.multiply(&y).to_s12();
            let rhs = x.to_s12().compose(&y.to_s12());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn views_roundtrip(x in arb_elem()) {
            prop_assert_eq!(SignedPerm::from_matrix(&x.to_matrix()).unwrap(), x);
            prop_assert_eq!(SignedPerm::from_s12(&x.to_s12()).unwrap(), x);
            let shown = x.to_string();
            prop_assert_eq!(shown.parse::<SignedPerm>().unwrap(), x);
        }

        #[test]
        fn determinant_is_multiplicative(x in arb_elem(), y in arb_elem()) {
            prop_assert_eq!(
                x.multiply(&y).determinant(),
                x.determinant() * y.determinant()
            );
        }

        #[test]
        fn trace_matches_matrix(x in arb_elem()) {
            prop_assert_eq!(x.trace(), x.to_matrix().trace());
        }
    }
}
