//! End-to-end computation: enumeration, pair search, classification,
//! subgroup catalog, and the pairwise intersection matrix, with optional
//! artifact caching keyed by content hashes.

use std::path::Path;

use thiserror::Error;

use crate::ggraph::{
    analyze, build_ggraph, build_subgroup_catalog, subgroup_matrix, GGraph, GraphError,
    SpectrumReport, SubgroupCatalogEntry,
};
use crate::chartab::SubgroupName;
use crate::icosa::{
    build_ihat, classify, find_all_icosahedral_subgroups, ClassifyError, IcosaRep, RepCatalog,
};
use crate::perm::{enumerate_b6, enumerate_b6_plus, SignedPerm};
use crate::store::{self, Layout, StoreError};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Store(#[from] StoreError),
}

/// Everything the verification claims need, computed once.
pub struct Pipeline {
    pub b6: Vec<SignedPerm>,
    pub b6_plus: Vec<SignedPerm>,
    /// The standard representative with its reference generator pair.
    pub ihat: IcosaRep,
    pub catalog: RepCatalog,
    pub entries: Vec<SubgroupCatalogEntry>,
    /// 192×192 pairwise intersection sizes.
    pub sizes: Vec<Vec<u8>>,
}

impl Pipeline {
    /// Full recomputation; `shuffle_seed` only reorders the pair search
    /// iteration (the result is canonical either way).
    pub fn compute(shuffle_seed: Option<u64>) -> Result<Pipeline, PipelineError> {
        let b6 = enumerate_b6();
        let b6_plus = enumerate_b6_plus();
        let reps = find_all_icosahedral_subgroups(&b6, shuffle_seed);
        let catalog = classify(reps, &b6, &b6_plus)?;
        let ihat = build_ihat();
        let entries = build_subgroup_catalog(&ihat, &b6)?;
        let sizes = subgroup_matrix(&catalog.members);
        Ok(Pipeline { b6, b6_plus, ihat, catalog, entries, sizes })
    }

    /// Reuses `catalog.json` when its embedded enumeration hash matches the
    /// current enumeration; recomputes and rewrites otherwise. The catalog
    /// entries and intersection matrix are always rebuilt (they are cheap
    /// next to the pair search and serve as cross-checks).
    pub fn load_or_compute(layout: &Layout) -> Result<Pipeline, PipelineError> {
        let b6 = enumerate_b6();
        let b6_plus = enumerate_b6_plus();
        let b6_hash = store::content_hash(store::b6_lines(&b6).as_bytes());

        let catalog = match load_catalog_if_fresh(layout, &b6_hash) {
            Some(catalog) => catalog,
            None => {
                let reps = find_all_icosahedral_subgroups(&b6, None);
                let catalog = classify(reps, &b6, &b6_plus)?;
                write_catalog(layout, &catalog, &b6_hash)?;
                catalog
            }
        };

        let ihat = build_ihat();
        let entries = build_subgroup_catalog(&ihat, &b6)?;
        let sizes = subgroup_matrix(&catalog.members);
        Ok(Pipeline { b6, b6_plus, ihat, catalog, entries, sizes })
    }

    pub fn entry(&self, name: SubgroupName) -> &SubgroupCatalogEntry {
        self.entries.iter().find(|e| e.name == name).expect("catalog covers all types")
    }

    /// Builds and analyzes one intersection graph.
    pub fn graph(&self, name: SubgroupName) -> Result<(GGraph, SpectrumReport), PipelineError> {
        let g = build_ggraph(&self.sizes, name);
        let report = analyze(&g)?;
        Ok((g, report))
    }

    pub fn catalog_json(&self) -> String {
        let b6_hash = store::content_hash(store::b6_lines(&self.b6).as_bytes());
        let file = store::catalog_to_file(&self.catalog, &b6_hash);
        serde_json::to_string_pretty(&file).expect("catalog serializes")
    }
}

fn load_catalog_if_fresh(layout: &Layout, b6_hash: &str) -> Option<RepCatalog> {
    let path = layout.catalog();
    let text = std::fs::read_to_string(&path).ok()?;
    let file: store::CatalogFile = serde_json::from_str(&text).ok()?;
    if file.b6_hash != b6_hash {
        return None;
    }
    store::catalog_from_file(file, &path).ok()
}

fn write_catalog(
    layout: &Layout,
    catalog: &RepCatalog,
    b6_hash: &str,
) -> Result<(), StoreError> {
    let file = store::catalog_to_file(catalog, b6_hash);
    let json = serde_json::to_string_pretty(&file).expect("catalog serializes");
    store::write_text(&layout.catalog(), &json)
}

/// Writes the enumeration artifact and returns its content hash.
pub fn write_b6_artifact(layout: &Layout, b6: &[SignedPerm]) -> Result<String, StoreError> {
    let text = store::b6_lines(b6);
    store::write_text(&layout.b6(), &text)?;
    Ok(store::content_hash(text.as_bytes()))
}

/// Writes one graph artifact, keyed by the catalog hash.
pub fn write_graph_artifact(
    layout: &Layout,
    graph: &GGraph,
    report: &SpectrumReport,
    catalog_hash: &str,
) -> Result<(), StoreError> {
    let file = store::graph_to_file(graph, report, catalog_hash);
    let json = serde_json::to_string_pretty(&file).expect("graph serializes");
    store::write_text(&layout.graph(graph.name), &json)
}

/// Loads a cached graph artifact when its catalog hash matches.
pub fn load_graph_if_fresh(
    layout: &Layout,
    name: SubgroupName,
    catalog_hash: &str,
) -> Option<(GGraph, SpectrumReport)> {
    let path = layout.graph(name);
    let text = std::fs::read_to_string(&path).ok()?;
    let file: store::GraphFile = serde_json::from_str(&text).ok()?;
    if file.catalog_hash != catalog_hash {
        return None;
    }
    store::graph_from_file(&file, Path::new(&path)).ok()
}
