//! The verification checklist: every structural claim the toolkit
//! reproduces, evaluated against a computed [`Pipeline`] and rendered as
//! one PASS/FAIL line each.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::atlas;
use crate::chartab::SubgroupName;
use crate::ggraph::{
    b6plus_nullgraph_check, d4_clique_decomposition, expected_catalog_row, expected_degree,
    maximal_pairing_check, square_diagonal, vertex_star, GGraph, SpectrumReport,
};
use crate::group::{closure, intersect, normalizer};
use crate::icosa::{
    build_d10_partner, build_ihat, build_second_class_rep, equivalence_witness, build_ih_rep,
    IhRep, IsoType,
};
use crate::perm::standard_generators;
use crate::pipeline::Pipeline;
use crate::projection::{
    commutation_check, icosahedron_orbit, lattice_membership, orbit_geometry, projector,
    reduce_rep, reduce_with, reducing_matrix, LatticeKind, LatticePoint, Space,
};
use crate::qf::QfElem;
use crate::qfmat::QfMat;

/// One verified claim.
#[derive(Debug, Clone)]
pub struct ClaimOutcome {
    pub id: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn claim(id: &'static str, pass: bool, detail: impl Into<String>) -> ClaimOutcome {
    ClaimOutcome { id, pass, detail: detail.into() }
}

/// Expected exact spectra of the eight intersection graphs.
pub fn expected_spectrum(name: SubgroupName) -> Vec<(i64, usize)> {
    match name {
        SubgroupName::T => vec![(5, 1), (3, 45), (1, 50), (-1, 50), (-3, 45), (-5, 1)],
        SubgroupName::D10 => vec![(6, 6), (2, 90), (-2, 90), (-6, 6)],
        SubgroupName::D6 => vec![(10, 6), (2, 90), (-2, 90), (-10, 6)],
        SubgroupName::C5 => vec![(0, 192)],
        SubgroupName::D4 => vec![
            (30, 1),
            (18, 5),
            (12, 5),
            (6, 15),
            (2, 45),
            (0, 31),
            (-2, 30),
            (-4, 45),
            (-8, 15),
        ],
        SubgroupName::C3 => vec![(20, 2), (4, 90), (-4, 100)],
        SubgroupName::C2 => vec![(60, 2), (4, 90), (-4, 90), (-12, 10)],
        SubgroupName::Trivial => {
            vec![(60, 1), (12, 5), (4, 90), (-4, 90), (-12, 5), (-60, 1)]
        }
    }
}

/// Expected component structure: (count, size of each).
pub fn expected_components(name: SubgroupName) -> (usize, usize) {
    match name {
        SubgroupName::T | SubgroupName::D4 | SubgroupName::Trivial => (1, 192),
        SubgroupName::D10 | SubgroupName::D6 => (6, 32),
        SubgroupName::C3 | SubgroupName::C2 => (2, 96),
        SubgroupName::C5 => (192, 1),
    }
}

/// External determinism evidence gathered by the caller.
#[derive(Debug, Default)]
pub struct ExtraChecks {
    /// Pair search rerun with shuffled iteration produced identical
    /// canonical members.
    pub search_order_invariant: Option<bool>,
    /// Catalog artifact bytes identical across independent runs.
    pub artifacts_deterministic: Option<bool>,
}

/// Runs the whole checklist. `graphs` must hold all eight analyzed graphs.
pub fn evaluate(
    p: &Pipeline,
    graphs: &BTreeMap<SubgroupName, (GGraph, SpectrumReport)>,
    extra: &ExtraChecks,
) -> Vec<ClaimOutcome> {
    let mut out = Vec::new();
    let members = &p.catalog.members;

    // Group enumeration.
    let (alpha, beta, gamma) = standard_generators();
    let generated = closure(&[alpha, beta, gamma]);
    out.push(claim(
        "group-order",
        generated.len() == 46_080 && generated.elements() == &p.b6[..],
        format!("closure of the three standard generators has {} elements", generated.len()),
    ));

    let plus_generated = closure(&atlas::b6_plus_s12_generators());
    out.push(claim(
        "rotation-subgroup",
        plus_generated.len() == 23_040
            && plus_generated.elements() == &p.b6_plus[..]
            && p.b6_plus.iter().all(|x| x.determinant() == 1),
        format!(
            "determinant-positive subgroup has {} elements and matches its generators",
            p.b6_plus.len()
        ),
    ));

    // Classification of icosahedral subgroups.
    let signatures: BTreeMap<(i32, i32), (usize, IsoType)> = {
        let mut m: BTreeMap<(i32, i32), (usize, IsoType)> = BTreeMap::new();
        for nc in &p.catalog.noncryst {
            let c = nc.representative.character;
            m.insert((c.c2, c.c3), (nc.class_size, nc.representative.iso_type));
        }
        let c = members[p.catalog.ihat_index].character;
        m.insert((c.c2, c.c3), (members.len(), IsoType::Cryst));
        m
    };
    let sig_ok = signatures.get(&(2, 3)).map(|&(_, t)| t == IsoType::Perm) == Some(true)
        && signatures.get(&(-2, 0)).map(|&(_, t)| t == IsoType::Cryst) == Some(true)
        && signatures.get(&(2, 0)).map(|&(_, t)| t == IsoType::Exotic) == Some(true)
        && signatures.len() == 3;
    out.push(claim(
        "icosahedral-types",
        sig_ok,
        format!(
            "three conjugacy classes with trace signatures {:?}",
            signatures.keys().collect::<Vec<_>>()
        ),
    ));

    out.push(claim(
        "crystallographic-class",
        members.len() == 192,
        format!("the T1+T2 class has {} members (search and sweep agree)", members.len()),
    ));

    out.push(claim(
        "crystallographic-in-rotation",
        members
            .iter()
            .all(|m| m.group.elements().iter().all(|x| x.determinant() == 1)),
        "every member consists of determinant +1 matrices",
    ));

    out.push(claim(
        "uniform-characters",
        members.iter().all(|m| m.character.as_tuple() == (6, 1, 1, -2, 0)),
        "all 192 members share the character (6, 1, 1, -2, 0)",
    ));

    // Rotation-subgroup split.
    let (a, b) = p.catalog.split_sizes();
    let second = build_second_class_rep();
    let ihat_class = p.catalog.plus_class[p.catalog.ihat_index];
    let second_class = p
        .catalog
        .index_of(&second.group)
        .map(|i| p.catalog.plus_class[i]);
    out.push(claim(
        "rotation-split",
        a == 96 && b == 96 && second_class.is_some() && second_class != Some(ihat_class),
        format!("split sizes {a} + {b}; pinned representatives fall in different classes"),
    ));

    // Witness determinants across the split.
    let norm = normalizer(&p.ihat.group, &p.b6);
    let norm_positive = norm.elements().iter().all(|x| x.determinant() == 1);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for name in [SubgroupName::T, SubgroupName::D10, SubgroupName::D6] {
        let order = name.order() as u8;
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if p.sizes[i][j] == order {
                    pairs.push((i, j));
                }
            }
        }
    }
    let witness_dets: Vec<i32> = pairs
        .par_iter()
        .map(|&(i, j)| {
            equivalence_witness(&members[i], &members[j], &p.b6)
                .map(|w| w.determinant())
                .unwrap_or(0)
        })
        .collect();
    let all_neg = witness_dets.iter().all(|&d| d == -1);
    // The witness set for a pair is one coset of the normalizer, and
    // normalizers of class members are conjugate; with the normalizer
    // inside the rotation subgroup, one negative witness per pair settles
    // every witness of that pair.
    out.push(claim(
        "cross-class-witness-determinants",
        norm_positive && all_neg && norm.len() == 240,
        format!(
            "normalizer of the standard member has order {} with all determinants +1; \
             {} maximal-sharing pairs each have a determinant -1 witness",
            norm.len(),
            pairs.len()
        ),
    ));

    // Subgroup catalog rows.
    let ordered = [
        SubgroupName::T,
        SubgroupName::D10,
        SubgroupName::D6,
        SubgroupName::D4,
        SubgroupName::C5,
        SubgroupName::C3,
        SubgroupName::C2,
    ];
    let class_sizes: Vec<usize> = ordered.iter().map(|&n| p.entry(n).class_size_b6).collect();
    out.push(claim(
        "subgroup-class-sizes",
        class_sizes == vec![480, 576, 960, 120, 576, 320, 180],
        format!("conjugacy-class sizes {class_sizes:?}"),
    ));

    let counts: Vec<usize> = ordered.iter().map(|&n| p.entry(n).n_in_icosa).collect();
    out.push(claim(
        "subgroup-counts",
        counts == vec![5, 6, 10, 5, 6, 10, 15],
        format!("copies inside one representation {counts:?}"),
    ));

    let decomp_ok = SubgroupName::ALL.iter().all(|&n| {
        crate::chartab::format_decomposition(&p.entry(n).decomposition)
            == expected_catalog_row(n).2
    });
    out.push(claim(
        "subgroup-restrictions",
        decomp_ok,
        "restricted 6D characters decompose as pinned for all eight types",
    ));

    // Projection suite for the standard representative.
    let ihat = build_ihat();
    let p1 = projector(&ihat, Space::Parallel);
    let p2 = projector(&ihat, Space::Perpendicular);
    let proj_ok = p1 == atlas::reference_parallel_projector()
        && p2 == atlas::reference_perpendicular_projector()
        && p1.multiply(&p1) == p1
        && p2.multiply(&p2) == p2
        && p1.add(&p2) == QfMat::identity(6)
        && p1.multiply(&p2).is_zero()
        && p1.transpose() == p1
        && p1.rank() == 3
        && p2.rank() == 3;
    out.push(claim(
        "projector-entries",
        proj_ok,
        "both projectors match the reference entrywise and satisfy the projector algebra",
    ));

    let r = reducing_matrix(&ihat).ok();
    let reducing_ok = r.as_ref().is_some_and(|r| {
        let pattern = atlas::reference_reducing_pattern();
        let ratio = &pattern[(0, 0)] / &r[(0, 0)];
        let d = r.transpose().multiply(r);
        let first = d[(0, 0)].clone();
        let scalar = (0..6).all(|i| {
            (0..6).all(|j| {
                if i == j {
                    d[(i, j)] == first
                } else {
                    d[(i, j)].is_zero()
                }
            })
        });
        ratio.is_positive() && r.scale(&ratio) == pattern && scalar && first.is_positive()
    });
    out.push(claim(
        "reducing-matrix",
        reducing_ok,
        "column recipe matches the reference pattern up to one positive scale; Gram is scalar",
    ));

    let blocks_ok = reduce_rep(&ihat).is_ok_and(|pair| {
        let ((t1_g2, t1_g3), (t2_g2, t2_g3)) = atlas::reference_irrep_blocks();
        pair.t1_g2 == t1_g2 && pair.t1_g3 == t1_g3 && pair.t2_g2 == t2_g2 && pair.t2_g3 == t2_g3
    });
    out.push(claim(
        "reduced-blocks",
        blocks_ok,
        "reduced generator blocks equal the reference forms exactly (no residual ambiguity)",
    ));

    out.push(claim(
        "intertwining",
        commutation_check(&ihat),
        "projection maps intertwine the 6D action with the reduced blocks",
    ));

    // Per-member reduction properties.
    let member_checks: Vec<(bool, bool)> = members
        .par_iter()
        .map(|m| {
            let own = commutation_check(m);
            let transported = equivalence_witness(&ihat, m, &p.b6).is_ok_and(|w| {
                let s = QfMat::from_int_mat(&w.to_matrix())
                    .multiply(&reducing_matrix(&ihat).expect("standard reduction exists"));
                reduce_with(m, &s).is_ok()
            });
            (own, transported)
        })
        .collect();
    out.push(claim(
        "member-commutation",
        member_checks.iter().all(|&(own, _)| own),
        "every member block-diagonalizes and intertwines through its own reducing matrix",
    ));
    out.push(claim(
        "shared-irreps",
        member_checks.iter().all(|&(_, t)| t),
        "every member is carried to block form by a witness times the standard reducing matrix",
    ));

    let orbit_ok = icosahedron_orbit(&ihat).is_ok_and(|points| {
        points.len() == 12
            && orbit_geometry(&points).is_some_and(|geom| {
                let pattern = atlas::reference_parallel_map_pattern();
                let pat_cols: Vec<[QfElem; 3]> = (0..6)
                    .flat_map(|j| {
                        let c = pattern.column(j);
                        let pt: [QfElem; 3] = [c[0].clone(), c[1].clone(), c[2].clone()];
                        let neg: [QfElem; 3] = [-&pt[0], -&pt[1], -&pt[2]];
                        [pt, neg]
                    })
                    .collect();
                let pat = orbit_geometry(&pat_cols).expect("reference orbit is regular");
                let abs = |v: &QfElem| if v.is_positive() { v.clone() } else { -v };
                &geom.norm_sq * &abs(&pat.gram_values[0])
                    == &pat.norm_sq * &abs(&geom.gram_values[0])
            })
    });
    out.push(claim(
        "orbit-geometry",
        orbit_ok,
        "twelve projected points with one norm and a two-valued Gram matrix, \
         matching the reference shape ratio",
    ));

    let lp = |coords: [(i64, i64); 6]| LatticePoint::from_ratios(coords);
    let lattice_ok = {
        let origin = lp([(0, 1); 6]);
        let halves = lp([(1, 2); 6]);
        let two_halves = lp([(1, 2), (1, 2), (0, 1), (0, 1), (0, 1), (0, 1)]);
        [LatticeKind::Sc, LatticeKind::Bcc, LatticeKind::Fcc]
            .iter()
            .all(|&k| lattice_membership(&origin, k))
            && !lattice_membership(&halves, LatticeKind::Sc)
            && lattice_membership(&halves, LatticeKind::Bcc)
            && lattice_membership(&halves, LatticeKind::Fcc)
            && !lattice_membership(&two_halves, LatticeKind::Sc)
            && !lattice_membership(&two_halves, LatticeKind::Bcc)
            && lattice_membership(&two_halves, LatticeKind::Fcc)
    };
    out.push(claim(
        "lattice-membership",
        lattice_ok,
        "the three invariant-lattice predicates classify the probe points",
    ));

    let ih = build_ih_rep(&ihat);
    let ih_ok = ih.len() == 120
        && ih.center().len() == 2
        && ih.rotation_part() == ihat.group
        && ih.pairs().iter().filter(|pr| IhRep::trace(pr).abs() == 6).count() == 2;
    out.push(claim(
        "full-icosahedral-extension",
        ih_ok,
        "the order-120 extension has a two-element center and recovers its rotation part",
    ));

    // Graphs: spectra, regularity, components, triangles.
    let mut spectra_ok = true;
    let mut regular_ok = true;
    let mut components_ok = true;
    let mut detail_spectra = Vec::new();
    for name in SubgroupName::ALL {
        let (graph, report) = &graphs[&name];
        let expected = expected_spectrum(name);
        if report.eigenvalues != expected {
            spectra_ok = false;
            detail_spectra.push(format!("{name}: got {:?}", report.eigenvalues));
        }
        let degrees = graph.degrees();
        let degree_uniform = degrees.iter().all(|&d| d == expected_degree(name));
        let trace_zero: i64 =
            report.eigenvalues.iter().map(|&(l, m)| l * m as i64).sum();
        if !(degree_uniform
            && report.regular_by_spectrum
            && report.degree == expected_degree(name)
            && trace_zero == 0)
        {
            regular_ok = false;
        }
        let (count, size) = expected_components(name);
        if report.components.len() != count
            || report.components.iter().any(|c| c.len() != size)
            || !report.index_multiplicity_matches_components
        {
            components_ok = false;
        }
    }
    out.push(claim(
        "graph-spectra",
        spectra_ok,
        if detail_spectra.is_empty() {
            "all eight spectra match the pinned integer tables".to_string()
        } else {
            detail_spectra.join("; ")
        },
    ));
    out.push(claim(
        "graph-regularity",
        regular_ok,
        "row sums are uniform, eigenvalues sum to zero, and the mean-square \
         eigenvalue equals the degree on every graph",
    ));
    out.push(claim(
        "graph-components",
        components_ok,
        "component counts and sizes match, and each index multiplicity counts the components",
    ));

    let sym_ok = [SubgroupName::T, SubgroupName::D10, SubgroupName::D6]
        .iter()
        .all(|n| graphs[n].1.symmetric);
    out.push(claim(
        "maximal-spectra-symmetric",
        sym_ok,
        "the three maximal-subgroup spectra are symmetric about zero",
    ));

    let triangle_ok = [SubgroupName::T, SubgroupName::D10, SubgroupName::D6]
        .iter()
        .all(|n| graphs[n].1.triangle_free)
        && !graphs[&SubgroupName::D4].1.triangle_free;
    out.push(claim(
        "triangle-census",
        triangle_ok,
        "maximal-subgroup graphs are triangle-free; the Klein-four graph is not",
    ));

    let walk_ok = {
        let t_graph = &graphs[&SubgroupName::T].0;
        square_diagonal(t_graph).iter().all(|&w| w == 5)
    };
    out.push(claim(
        "closed-walk-counts",
        walk_ok,
        "every vertex of the tetrahedral graph has exactly five closed walks of length two",
    ));

    // Subgroup matrix row structure.
    let row_ok = {
        let expected_row: BTreeMap<u8, usize> =
            BTreeMap::from([(12, 5), (10, 6), (6, 10), (4, 30), (3, 20), (2, 60), (1, 60)]);
        (0..members.len()).all(|i| {
            let mut histo: BTreeMap<u8, usize> = BTreeMap::new();
            for j in 0..members.len() {
                if i != j {
                    *histo.entry(p.sizes[i][j]).or_insert(0) += 1;
                }
            }
            histo == expected_row && p.sizes[i][i] == 60
        }) && (0..members.len())
            .all(|i| (0..members.len()).all(|j| p.sizes[i][j] == p.sizes[j][i]))
    };
    out.push(claim(
        "intersection-matrix-rows",
        row_ok,
        "every row shows intersections {12:5, 10:6, 6:10, 4:30, 3:20, 2:60, 1:60} and 60 on the diagonal",
    ));

    // Maximal pairing and the double-count identity.
    let pairing_ok = [SubgroupName::T, SubgroupName::D10, SubgroupName::D6].iter().all(|&n| {
        let entry = p.entry(n);
        maximal_pairing_check(entry, members, &graphs[&n].0)
            && 192 * entry.n_in_icosa == 2 * entry.class_size_b6
    });
    out.push(claim(
        "maximal-pairing",
        pairing_ok,
        "each maximal-type subgroup lies in exactly two representations; \
         double counting matches the class sizes",
    ));

    // Klein-four clique partition.
    let clique_ok = d4_clique_decomposition(&graphs[&SubgroupName::D4].0)
        .map(|blocks| blocks.len() == 12 && blocks.iter().all(|b| b.len() == 16))
        .unwrap_or(false);
    out.push(claim(
        "clique-partition",
        clique_ok,
        "the Klein-four graph splits into 12 pairwise-complete blocks of 16",
    ));

    // Null graphs inside the rotation-subgroup classes.
    let null_ok = [SubgroupName::T, SubgroupName::D10, SubgroupName::D6]
        .iter()
        .all(|&n| b6plus_nullgraph_check(&p.catalog, &p.sizes, n));
    out.push(claim(
        "split-null-graphs",
        null_ok,
        "within each 96-member class no two members share a maximal subgroup",
    ));

    // The explicit normalizer example.
    let witness_ok = {
        let partner = build_d10_partner();
        let shared = intersect(&ihat.group, &partner.group);
        let pinned = atlas::reflection_witness();
        shared.len() == 10
            && shared == atlas::subgroup_group(SubgroupName::D10)
            && crate::ggraph::normalizer_witness(&ihat, &partner, &shared, &p.b6)
                .is_ok_and(|w| w.determinant() == -1)
            && crate::ggraph::verify_witness(&pinned, &ihat, &partner, &shared)
            && pinned.determinant() == -1
            && vertex_star(&p.sizes, p.catalog.ihat_index, 10).len() == 6
    };
    out.push(claim(
        "normalizer-witness",
        witness_ok,
        "a normalizer element of the shared ten-element subgroup conjugates the standard \
         member onto its partner; the pinned reflection verifies with determinant -1",
    ));

    // Sanity for the degenerate graph: isolated vertices everywhere.
    let c5_ok = {
        let (graph, report) = &graphs[&SubgroupName::C5];
        graph.is_zero()
            && report.eigenvalues == vec![(0, 192)]
            && (0..members.len()).all(|i| vertex_star(&p.sizes, i, 5).is_empty())
    };
    out.push(claim(
        "five-cycle-null-graph",
        c5_ok,
        "no two representations intersect in exactly a five-element cyclic subgroup",
    ));

    if let Some(inv) = extra.search_order_invariant {
        out.push(claim(
            "search-order-invariance",
            inv,
            "shuffled pair-search iteration reproduces identical canonical members",
        ));
    }
    if let Some(det) = extra.artifacts_deterministic {
        out.push(claim(
            "artifact-determinism",
            det,
            "independent recomputation produced byte-identical catalog artifacts",
        ));
    }

    out
}

/// Renders report.md: a fixed checklist with one PASS/FAIL line per claim,
/// followed by the recomputed subgroup table. Normalizer orders are implied
/// by orbit-stabilizer from the swept class sizes, so they are reported
/// rather than asserted.
pub fn render_report(outcomes: &[ClaimOutcome], p: Option<&Pipeline>) -> String {
    let passed = outcomes.iter().filter(|o| o.pass).count();
    let mut s = String::new();
    s.push_str("# Verification report\n\n");
    s.push_str(&format!("{passed}/{} claims pass.\n\n", outcomes.len()));
    for o in outcomes {
        let status = if o.pass { "PASS" } else { "FAIL" };
        s.push_str(&format!("- {status} `{}` — {}\n", o.id, o.detail));
    }
    if let Some(p) = p {
        s.push_str("\n## Subgroup catalog (recomputed)\n\n");
        s.push_str(
            "| type | order | copies in one rep | class size | implied normalizer order | restriction |\n",
        );
        s.push_str("|------|-------|-------------------|------------|--------------------------|-------------|\n");
        for name in SubgroupName::ALL {
            let e = p.entry(name);
            s.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} |\n",
                e.name,
                e.order,
                e.n_in_icosa,
                e.class_size_b6,
                46_080 / e.class_size_b6,
                crate::chartab::format_decomposition(&e.decomposition),
            ));
        }
        s.push_str(&format!(
            "\nGraph degrees: {}.\n",
            SubgroupName::ALL
                .iter()
                .map(|&n| format!("{n}: {}", crate::ggraph::expected_degree(n)))
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    s
}

/// Helper used by subgroup-specific commands: checks one graph against its
/// expected spectrum and component structure.
pub fn check_graph(name: SubgroupName, report: &SpectrumReport) -> Result<(), String> {
    if report.eigenvalues != expected_spectrum(name) {
        return Err(format!(
            "spectrum mismatch for {name}: got {:?}",
            report.eigenvalues
        ));
    }
    let (count, size) = expected_components(name);
    if report.components.len() != count || report.components.iter().any(|c| c.len() != size) {
        return Err(format!(
            "component mismatch for {name}: got {} components",
            report.components.len()
        ));
    }
    Ok(())
}
