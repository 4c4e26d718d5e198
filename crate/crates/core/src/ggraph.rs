//! Intersection graphs on the 192 crystallographic representations: one
//! graph per subgroup type, with adjacency when two representations meet in
//! exactly a copy of that subgroup. Includes the subgroup catalog, exact
//! spectra, connected components, triangle tests, the Klein-four clique
//! partition, and normalizer witnesses.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::atlas;
use crate::chartab::{decompose_restriction, SubgroupName};
use crate::group::{
    conjugacy_class_of_subgroup, enumerate_subgroups, intersect, intersection_size, normalizer,
    normalizes, GroupSet,
};
use crate::icosa::{IcosaRep, RepCatalog};
use crate::intlin::{exact_integer_spectrum, SpectrumError};
use crate::perm::SignedPerm;

pub const VERTEX_COUNT: usize = 192;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// A recomputed catalog quantity differs from its pinned expectation.
    #[error("CatalogMismatch: {0}")]
    CatalogMismatch(String),
    #[error(transparent)]
    NonIntegralSpectrum(#[from] SpectrumError),
    /// The Klein-four graph does not tile into complete blocks.
    #[error("NoPartition: clique blocks do not tile the vertex set: {0}")]
    NoPartition(String),
    /// No conjugating element inside the required normalizer.
    #[error("WitnessNotFound: no conjugating element inside the normalizer")]
    WitnessNotFound,
}

/// Pinned expectations for one subgroup type: its conjugacy-class size in
/// the full hyperoctahedral group, the number of copies inside one
/// icosahedral representation, and the irrep content of the restricted 6D
/// representation.
pub fn expected_catalog_row(name: SubgroupName) -> (usize, usize, &'static str) {
    match name {
        SubgroupName::T => (480, 5, "2T"),
        SubgroupName::D10 => (576, 6, "2A2 + E1 + E2"),
        SubgroupName::D6 => (960, 10, "2A2 + 2E"),
        SubgroupName::D4 => (120, 5, "2B1 + 2B2 + 2B3"),
        SubgroupName::C5 => (576, 6, "2A + E1 + E2"),
        SubgroupName::C3 => (320, 10, "2A + 2E"),
        SubgroupName::C2 => (180, 15, "2A + 4B"),
        SubgroupName::Trivial => (1, 1, "6A"),
    }
}

/// The regular degree of each intersection graph.
pub fn expected_degree(name: SubgroupName) -> usize {
    match name {
        SubgroupName::T => 5,
        SubgroupName::D10 => 6,
        SubgroupName::D6 => 10,
        SubgroupName::C5 => 0,
        SubgroupName::D4 => 30,
        SubgroupName::C3 => 20,
        SubgroupName::C2 => 60,
        SubgroupName::Trivial => 60,
    }
}

/// One subgroup type of the standard representation, fully verified: the
/// pinned generators close to a subgroup of the standard embedding, the
/// conjugacy class is recomputed by sweep, the copy count inside the
/// representation is recounted from the subgroup lattice, and the 6D
/// restriction is decomposed against the type's character table.
#[derive(Debug, Clone)]
pub struct SubgroupCatalogEntry {
    pub name: SubgroupName,
    pub generators: Vec<SignedPerm>,
    pub group: GroupSet,
    pub order: usize,
    pub n_in_icosa: usize,
    pub class_size_b6: usize,
    /// All conjugates in the full group; kept for containment counting.
    pub class_members: Vec<GroupSet>,
    pub decomposition: BTreeMap<String, u32>,
}

/// Builds and cross-checks all eight catalog entries.
pub fn build_subgroup_catalog(
    ihat: &IcosaRep,
    b6: &[SignedPerm],
) -> Result<Vec<SubgroupCatalogEntry>, GraphError> {
    // Subgroup lattice of the standard representation, used both for the
    // per-type counts and for the friendliness check below.
    let lattice = enumerate_subgroups(&ihat.group);

    let mut entries = Vec::with_capacity(SubgroupName::ALL.len());
    for name in SubgroupName::ALL {
        let generators = atlas::subgroup_generators(name);
        let group = atlas::subgroup_group(name);
        let (expected_class, expected_count, expected_decomp) = expected_catalog_row(name);

        if group.len() != name.order() {
            return Err(GraphError::CatalogMismatch(format!(
                "{name}: generators close to order {} instead of {}",
                group.len(),
                name.order()
            )));
        }
        if !group.is_subset_of(&ihat.group) {
            return Err(GraphError::CatalogMismatch(format!(
                "{name}: not a subgroup of the standard representation"
            )));
        }

        let same_order: Vec<&GroupSet> =
            lattice.iter().filter(|s| s.len() == name.order()).collect();
        let n_in_icosa = same_order.len();
        if n_in_icosa != expected_count {
            return Err(GraphError::CatalogMismatch(format!(
                "{name}: found {n_in_icosa} copies inside the representation, expected {expected_count}"
            )));
        }
        // Friendliness: every same-order subgroup is conjugate to the pinned
        // one within the representation, which is what justifies testing
        // adjacency by intersection size alone.
        for other in &same_order {
            if !ihat.group.elements().iter().any(|g| {
                crate::group::conjugate_subgroup(other, g) == group
            }) {
                return Err(GraphError::CatalogMismatch(format!(
                    "{name}: order-{} subgroup not conjugate to the pinned copy",
                    name.order()
                )));
            }
        }

        let class = conjugacy_class_of_subgroup(&group, b6);
        if class.members.len() != expected_class {
            return Err(GraphError::CatalogMismatch(format!(
                "{name}: sweep found a class of size {}, expected {expected_class}",
                class.members.len()
            )));
        }

        let decomposition = decompose_restriction(name, &group)
            .map_err(|e| GraphError::CatalogMismatch(format!("{name}: {e}")))?;
        let formatted = crate::chartab::format_decomposition(&decomposition);
        if formatted != expected_decomp {
            return Err(GraphError::CatalogMismatch(format!(
                "{name}: restriction decomposes as {formatted}, expected {expected_decomp}"
            )));
        }

        entries.push(SubgroupCatalogEntry {
            name,
            generators,
            group,
            order: name.order(),
            n_in_icosa,
            class_size_b6: class.members.len(),
            class_members: class.members,
            decomposition,
        });
    }
    Ok(entries)
}

/// The symmetric matrix of pairwise intersection sizes over the catalog
/// members; diagonal entries are the full order 60.
pub fn subgroup_matrix(members: &[IcosaRep]) -> Vec<Vec<u8>> {
    let n = members.len();
    let mut rows: Vec<Vec<u8>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![0u8; n];
            for j in 0..n {
                row[j] = if i == j {
                    members[i].group.len() as u8
                } else {
                    intersection_size(&members[i].group, &members[j].group) as u8
                };
            }
            row
        })
        .collect();
    // Symmetry is structural; make it explicit for the cheap price of a pass.
    for i in 0..n {
        for j in 0..i {
            let v = rows[j][i];
            rows[i][j] = v;
        }
    }
    rows
}

/// One intersection graph: vertices are the 192 representations, an edge
/// joins two of them when their intersection has exactly the order of the
/// chosen subgroup type.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GGraph {
    pub name: SubgroupName,
    pub g_order: usize,
    /// Row-major 0/1, `VERTEX_COUNT` × `VERTEX_COUNT`.
    pub adjacency: Vec<u8>,
}

impl GGraph {
    pub fn n(&self) -> usize {
        VERTEX_COUNT
    }

    pub fn at(&self, i: usize, j: usize) -> u8 {
        self.adjacency[i * VERTEX_COUNT + j]
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..VERTEX_COUNT).filter(|&j| self.at(i, j) == 1).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..VERTEX_COUNT)
            .map(|i| (0..VERTEX_COUNT).filter(|&j| self.at(i, j) == 1).count())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.adjacency.iter().all(|&x| x == 0)
    }
}

/// Builds the graph for one subgroup type from the intersection-size matrix.
pub fn build_ggraph(sizes: &[Vec<u8>], name: SubgroupName) -> GGraph {
    let order = name.order() as u8;
    let mut adjacency = vec![0u8; VERTEX_COUNT * VERTEX_COUNT];
    for i in 0..VERTEX_COUNT {
        for j in 0..VERTEX_COUNT {
            if i != j && sizes[i][j] == order {
                adjacency[i * VERTEX_COUNT + j] = 1;
            }
        }
    }
    GGraph { name, g_order: name.order(), adjacency }
}

/// All representations meeting representation `i` in exactly a subgroup of
/// order `g_order`.
pub fn vertex_star(sizes: &[Vec<u8>], i: usize, g_order: usize) -> Vec<usize> {
    (0..sizes.len()).filter(|&j| j != i && sizes[i][j] as usize == g_order).collect()
}

/// Exact spectrum, components, and triangle census of one graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<(i64, usize)>,
    pub degree: usize,
    pub components: Vec<Vec<usize>>,
    pub triangle_free: bool,
    /// (1/n) Σ λ²·mult equals the degree exactly (regularity criterion).
    pub regular_by_spectrum: bool,
    /// Multiplicity of the largest eigenvalue equals the component count.
    pub index_multiplicity_matches_components: bool,
    /// Spectrum symmetric about zero.
    pub symmetric: bool,
    /// Per component, whether a proper 2-coloring exists (reported, not
    /// asserted anywhere).
    pub bipartite_components: Vec<bool>,
}

pub fn connected_components(g: &GGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([start]);
        seen[start] = true;
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// True iff the diagonal of A³ vanishes.
pub fn triangle_free(g: &GGraph) -> bool {
    cube_diagonal(g).iter().all(|&x| x == 0)
}

fn square(g: &GGraph) -> Vec<i64> {
    let n = g.n();
    let mut sq = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            if g.at(i, k) == 0 {
                continue;
            }
            for j in 0..n {
                sq[i * n + j] += i64::from(g.at(k, j));
            }
        }
    }
    sq
}

/// Diagonal of A²: closed walks of length two (equals the degree sequence).
pub fn square_diagonal(g: &GGraph) -> Vec<i64> {
    let n = g.n();
    let sq = square(g);
    (0..n).map(|i| sq[i * n + i]).collect()
}

/// Diagonal of A³: closed walks of length three (twice the triangle count
/// through each vertex... six times per triangle overall).
pub fn cube_diagonal(g: &GGraph) -> Vec<i64> {
    let n = g.n();
    let sq = square(g);
    (0..n)
        .map(|i| (0..n).map(|k| sq[i * n + k] * i64::from(g.at(k, i))).sum())
        .collect()
}

fn two_colorable(g: &GGraph, comp: &[usize]) -> bool {
    let mut color: std::collections::HashMap<usize, u8> = std::collections::HashMap::new();
    let start = comp[0];
    color.insert(start, 0);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let cv = color[&v];
        for w in g.neighbors(v) {
            match color.get(&w) {
                None => {
                    color.insert(w, 1 - cv);
                    queue.push_back(w);
                }
                Some(&cw) if cw == cv => return false,
                _ => {}
            }
        }
    }
    true
}

/// Full spectral and structural analysis of one graph. The eigenvalue scan
/// range is the maximum degree, a valid bound on the spectral radius of an
/// adjacency matrix.
pub fn analyze(g: &GGraph) -> Result<SpectrumReport, GraphError> {
    let degrees = g.degrees();
    let degree = degrees.iter().copied().max().unwrap_or(0);
    let eigenvalues = exact_integer_spectrum(g.n(), &g.adjacency, degree as i64)?;

    let n = g.n() as i64;
    let sum_sq: i64 = eigenvalues.iter().map(|&(l, m)| l * l * m as i64).sum();
    let regular_by_spectrum = sum_sq == n * degree as i64;

    let components = connected_components(g);
    let index_mult = eigenvalues.first().map(|&(_, m)| m).unwrap_or(0);
    let index_multiplicity_matches_components = index_mult == components.len();

    let symmetric = {
        let set: std::collections::HashMap<i64, usize> = eigenvalues.iter().copied().collect();
        eigenvalues.iter().all(|&(l, m)| set.get(&(-l)) == Some(&m))
    };

    let bipartite_components = components.iter().map(|c| two_colorable(g, c)).collect();

    Ok(SpectrumReport {
        eigenvalues,
        degree,
        components,
        triangle_free: triangle_free(g),
        regular_by_spectrum,
        index_multiplicity_matches_components,
        symmetric,
        bipartite_components,
    })
}

/// For a maximal subgroup type: every class member must be contained in
/// exactly two of the 192 representations, and the graph degree must equal
/// the copy count inside one representation.
pub fn maximal_pairing_check(
    entry: &SubgroupCatalogEntry,
    members: &[IcosaRep],
    graph: &GGraph,
) -> bool {
    if !entry.name.is_maximal() {
        return false;
    }
    let degrees = graph.degrees();
    if degrees.iter().any(|&d| d != entry.n_in_icosa) {
        return false;
    }
    entry
        .class_members
        .par_iter()
        .all(|p| members.iter().filter(|m| p.is_subset_of(&m.group)).count() == 2)
}

/// Greedy clique partition of the Klein-four graph: each unassigned vertex
/// must sit in exactly one 16-clique inside its closed neighborhood, and
/// the cliques must tile all 192 vertices into 12 blocks.
pub fn d4_clique_decomposition(g: &GGraph) -> Result<Vec<Vec<usize>>, GraphError> {
    let n = g.n();
    let mut assigned = vec![false; n];
    let mut blocks = Vec::new();
    for v in 0..n {
        if assigned[v] {
            continue;
        }
        let mut hood = g.neighbors(v);
        hood.push(v);
        hood.sort_unstable();
        let cliques = maximal_cliques(g, &hood);
        let sixteens: Vec<&Vec<usize>> =
            cliques.iter().filter(|c| c.len() == 16 && c.contains(&v)).collect();
        if sixteens.len() != 1 {
            return Err(GraphError::NoPartition(format!(
                "vertex {v} lies in {} sixteen-vertex cliques",
                sixteens.len()
            )));
        }
        let block = sixteens[0].clone();
        if block.iter().any(|&w| assigned[w]) {
            return Err(GraphError::NoPartition(format!(
                "clique at vertex {v} overlaps an earlier block"
            )));
        }
        for &w in &block {
            assigned[w] = true;
        }
        blocks.push(block);
    }
    if blocks.len() != 12 || !assigned.iter().all(|&a| a) {
        return Err(GraphError::NoPartition(format!("{} blocks found", blocks.len())));
    }
    // Completeness inside each block, stated directly.
    for b in &blocks {
        for (i, &x) in b.iter().enumerate() {
            for &y in &b[i + 1..] {
                if g.at(x, y) != 1 {
                    return Err(GraphError::NoPartition(format!(
                        "block containing {x} and {y} is not complete"
                    )));
                }
            }
        }
    }
    Ok(blocks)
}

/// Bron-Kerbosch with pivoting on the subgraph induced by `verts`;
/// returns all maximal cliques, each sorted.
fn maximal_cliques(g: &GGraph, verts: &[usize]) -> Vec<Vec<usize>> {
    fn bk(
        g: &GGraph,
        r: &mut Vec<usize>,
        mut p: Vec<usize>,
        mut x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = p.iter().chain(x.iter()).copied().max_by_key(|&u| {
            p.iter().filter(|&&w| g.at(u, w) == 1).count()
        });
        let cands: Vec<usize> = match pivot {
            Some(u) => p.iter().copied().filter(|&v| g.at(u, v) == 0).collect(),
            None => p.clone(),
        };
        for v in cands {
            r.push(v);
            let p2: Vec<usize> = p.iter().copied().filter(|&w| g.at(v, w) == 1).collect();
            let x2: Vec<usize> = x.iter().copied().filter(|&w| g.at(v, w) == 1).collect();
            bk(g, r, p2, x2, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    bk(g, &mut Vec::new(), verts.to_vec(), Vec::new(), &mut out);
    out
}

/// For the rotation-subgroup split: within each of the two 96-member
/// classes, the graph of a maximal subgroup type must have no edges at all.
pub fn b6plus_nullgraph_check(
    catalog: &RepCatalog,
    sizes: &[Vec<u8>],
    name: SubgroupName,
) -> bool {
    assert!(name.is_maximal());
    let order = name.order() as u8;
    for i in 0..VERTEX_COUNT {
        for j in i + 1..VERTEX_COUNT {
            if sizes[i][j] == order && catalog.plus_class[i] == catalog.plus_class[j] {
                return false;
            }
        }
    }
    true
}

/// A witness inside the normalizer of the shared subgroup `p` that
/// conjugates `h1` onto `h2`. Existence is guaranteed when `p = h1 ∩ h2`;
/// absence is a hard failure.
pub fn normalizer_witness(
    h1: &IcosaRep,
    h2: &IcosaRep,
    p: &GroupSet,
    b6: &[SignedPerm],
) -> Result<SignedPerm, GraphError> {
    debug_assert_eq!(intersect(&h1.group, &h2.group), *p);
    let norm = normalizer(p, b6);
    norm.elements()
        .iter()
        .find(|m| {
            let mi = m.inverse();
            h2.group.contains(&m.multiply(&h1.g2).multiply(&mi))
                && h2.group.contains(&m.multiply(&h1.g3).multiply(&mi))
        })
        .copied()
        .ok_or(GraphError::WitnessNotFound)
}

/// Verifies one specific witness candidate: normalizes `p` and conjugates
/// `h1` onto `h2`.
pub fn verify_witness(
    candidate: &SignedPerm,
    h1: &IcosaRep,
    h2: &IcosaRep,
    p: &GroupSet,
) -> bool {
    normalizes(p, candidate)
        && crate::group::conjugate_subgroup(&h1.group, candidate) == h2.group
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(edges: &[(usize, usize)]) -> GGraph {
        let mut adjacency = vec![0u8; VERTEX_COUNT * VERTEX_COUNT];
        for &(a, b) in edges {
            adjacency[a * VERTEX_COUNT + b] = 1;
            adjacency[b * VERTEX_COUNT + a] = 1;
        }
        GGraph { name: SubgroupName::Trivial, g_order: 1, adjacency }
    }

    #[test]
    fn components_of_small_graphs() {
        let g = path_graph(&[(0, 1), (1, 2), (5, 6)]);
        let comps = connected_components(&g);
        assert_eq!(comps[0], vec![0, 1, 2]);
        assert!(comps.contains(&vec![5, 6]));
        // All remaining vertices are isolated.
        assert_eq!(comps.len(), 2 + (VERTEX_COUNT - 5));
    }

    #[test]
    fn triangle_detection() {
        let no_triangle = path_graph(&[(0, 1), (1, 2), (2, 3)]);
        assert!(triangle_free(&no_triangle));
        let with_triangle = path_graph(&[(0, 1), (1, 2), (2, 0)]);
        assert!(!triangle_free(&with_triangle));
        assert_eq!(cube_diagonal(&with_triangle)[0], 2);
    }

    #[test]
    fn square_diagonal_is_degree() {
        let g = path_graph(&[(0, 1), (0, 2), (0, 3), (2, 3)]);
        let sq = square_diagonal(&g);
        assert_eq!(sq[0], 3);
        assert_eq!(sq[2], 2);
    }

    #[test]
    fn sparse_graph_has_no_clique_partition() {
        let g = path_graph(&[(0, 1), (1, 2)]);
        assert!(matches!(d4_clique_decomposition(&g), Err(GraphError::NoPartition(_))));
    }

    #[test]
    fn clique_search_finds_blocks() {
        // Two disjoint triangles.
        let g = path_graph(&[(0, 1), (1, 2), (2, 0), (10, 11), (11, 12), (12, 10)]);
        let cliques = maximal_cliques(&g, &[0, 1, 2, 10, 11, 12]);
        let mut sizes: Vec<usize> = cliques.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3]);
    }
}
