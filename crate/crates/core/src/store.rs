//! On-disk artifacts: canonical element lists, the classification catalog,
//! per-graph analyses, and projection data. Three cache layers are keyed by
//! content hash — the enumeration hash is embedded in the catalog and the
//! catalog hash in every graph file, so stale caches are detected and
//! recomputed rather than trusted.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chartab::{CharacterVector, SubgroupName};
use crate::ggraph::{GGraph, SpectrumReport, VERTEX_COUNT};
use crate::group::GroupSet;
use crate::icosa::{IcosaRep, IsoType, NonCrystClass, RepCatalog};
use crate::perm::SignedPerm;
use crate::qf::QfWire;
use crate::qfmat::QfMat;

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("io error on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("malformed artifact {path}: {message}")]
    Malformed { path: PathBuf, message: String },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> StoreError + '_ {
    move |source| StoreError::Io { path: path.to_path_buf(), source }
}

/// FNV-1a over the artifact bytes; hex-encoded. Content addressing only,
/// nothing adversarial.
pub fn content_hash(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

pub fn write_text(path: &Path, text: &str) -> Result<(), StoreError> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(io_err(path))?;
    }
    fs::write(path, text).map_err(io_err(path))
}

pub fn read_text(path: &Path) -> Result<String, StoreError> {
    fs::read_to_string(path).map_err(io_err(path))
}

/// Serializes the whole group in canonical order, one element per line.
pub fn b6_lines(b6: &[SignedPerm]) -> String {
    let mut s = String::with_capacity(b6.len() * 20);
    for x in b6 {
        s.push_str(&x.to_string());
        s.push('\n');
    }
    s
}

// ---------------------------------------------------------------------------
// Catalog file.
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct CatalogFile {
    pub b6_hash: String,
    pub ihat_index: usize,
    pub members: Vec<MemberEntry>,
    pub noncryst: Vec<NonCrystEntry>,
}

#[derive(Serialize, Deserialize)]
pub struct MemberEntry {
    pub elements: Vec<SignedPerm>,
    pub g2: SignedPerm,
    pub g3: SignedPerm,
    pub character: CharacterVector,
    pub iso_type: IsoType,
    pub generator_determinants: (i32, i32),
    pub rotation_class: u8,
}

#[derive(Serialize, Deserialize)]
pub struct NonCrystEntry {
    pub elements: Vec<SignedPerm>,
    pub g2: SignedPerm,
    pub g3: SignedPerm,
    pub character: CharacterVector,
    pub iso_type: IsoType,
    pub class_size: usize,
}

pub fn catalog_to_file(catalog: &RepCatalog, b6_hash: &str) -> CatalogFile {
    CatalogFile {
        b6_hash: b6_hash.to_string(),
        ihat_index: catalog.ihat_index,
        members: catalog
            .members
            .iter()
            .zip(&catalog.plus_class)
            .map(|(m, &c)| MemberEntry {
                elements: m.group.elements().to_vec(),
                g2: m.g2,
                g3: m.g3,
                character: m.character,
                iso_type: m.iso_type,
                generator_determinants: (m.g2.determinant(), m.g3.determinant()),
                rotation_class: c,
            })
            .collect(),
        noncryst: catalog
            .noncryst
            .iter()
            .map(|nc| NonCrystEntry {
                elements: nc.representative.group.elements().to_vec(),
                g2: nc.representative.g2,
                g3: nc.representative.g3,
                character: nc.representative.character,
                iso_type: nc.representative.iso_type,
                class_size: nc.class_size,
            })
            .collect(),
    }
}

pub fn catalog_from_file(file: CatalogFile, path: &Path) -> Result<RepCatalog, StoreError> {
    let malformed = |message: String| StoreError::Malformed { path: path.to_path_buf(), message };
    let mut members = Vec::with_capacity(file.members.len());
    let mut plus_class = Vec::with_capacity(file.members.len());
    for e in file.members {
        let group = GroupSet::from_elements(e.elements);
        if group.len() != 60 {
            return Err(malformed(format!("member of size {}", group.len())));
        }
        members.push(IcosaRep {
            group,
            g2: e.g2,
            g3: e.g3,
            character: e.character,
            iso_type: e.iso_type,
        });
        plus_class.push(e.rotation_class);
    }
    if !members.windows(2).all(|w| w[0].group < w[1].group) {
        return Err(malformed("members not in canonical order".into()));
    }
    let noncryst = file
        .noncryst
        .into_iter()
        .map(|e| NonCrystClass {
            representative: IcosaRep {
                group: GroupSet::from_elements(e.elements),
                g2: e.g2,
                g3: e.g3,
                character: e.character,
                iso_type: e.iso_type,
            },
            class_size: e.class_size,
        })
        .collect();
    Ok(RepCatalog { members, ihat_index: file.ihat_index, plus_class, noncryst })
}

// ---------------------------------------------------------------------------
// Graph file.
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct GraphFile {
    pub catalog_hash: String,
    pub subgroup: String,
    pub subgroup_order: usize,
    pub degree: usize,
    /// Row-major 0/1, one string of 192 digits per row.
    pub adjacency: Vec<String>,
    pub spectrum: Vec<(i64, usize)>,
    pub components: Vec<Vec<usize>>,
    pub triangle_free: bool,
    pub regular_by_spectrum: bool,
    pub index_multiplicity_matches_components: bool,
    pub symmetric_spectrum: bool,
    pub bipartite_components: Vec<bool>,
}

pub fn graph_to_file(
    graph: &GGraph,
    report: &SpectrumReport,
    catalog_hash: &str,
) -> GraphFile {
    let adjacency = (0..VERTEX_COUNT)
        .map(|i| {
            (0..VERTEX_COUNT)
                .map(|j| if graph.at(i, j) == 1 { '1' } else { '0' })
                .collect()
        })
        .collect();
    GraphFile {
        catalog_hash: catalog_hash.to_string(),
        subgroup: graph.name.to_string(),
        subgroup_order: graph.g_order,
        degree: report.degree,
        adjacency,
        spectrum: report.eigenvalues.clone(),
        components: report.components.clone(),
        triangle_free: report.triangle_free,
        regular_by_spectrum: report.regular_by_spectrum,
        index_multiplicity_matches_components: report.index_multiplicity_matches_components,
        symmetric_spectrum: report.symmetric,
        bipartite_components: report.bipartite_components.clone(),
    }
}

pub fn graph_from_file(
    file: &GraphFile,
    path: &Path,
) -> Result<(GGraph, SpectrumReport), StoreError> {
    let malformed = |message: String| StoreError::Malformed { path: path.to_path_buf(), message };
    let name = SubgroupName::parse(&file.subgroup)
        .ok_or_else(|| malformed(format!("unknown subgroup {}", file.subgroup)))?;
    let mut adjacency = vec![0u8; VERTEX_COUNT * VERTEX_COUNT];
    if file.adjacency.len() != VERTEX_COUNT {
        return Err(malformed("wrong adjacency row count".into()));
    }
    for (i, row) in file.adjacency.iter().enumerate() {
        if row.len() != VERTEX_COUNT {
            return Err(malformed(format!("row {i} has length {}", row.len())));
        }
        for (j, ch) in row.chars().enumerate() {
            adjacency[i * VERTEX_COUNT + j] = match ch {
                '0' => 0,
                '1' => 1,
                other => return Err(malformed(format!("adjacency digit {other}"))),
            };
        }
    }
    let graph = GGraph { name, g_order: file.subgroup_order, adjacency };
    let report = SpectrumReport {
        eigenvalues: file.spectrum.clone(),
        degree: file.degree,
        components: file.components.clone(),
        triangle_free: file.triangle_free,
        regular_by_spectrum: file.regular_by_spectrum,
        index_multiplicity_matches_components: file.index_multiplicity_matches_components,
        symmetric: file.symmetric_spectrum,
        bipartite_components: file.bipartite_components.clone(),
    };
    Ok((graph, report))
}

// ---------------------------------------------------------------------------
// Projection file.
// ---------------------------------------------------------------------------

pub type MatWire = Vec<Vec<QfWire>>;

pub fn mat_to_wire(m: &QfMat) -> MatWire {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_wire()).collect())
        .collect()
}

pub fn mat_to_floats(m: &QfMat) -> Vec<Vec<f64>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_f64()).collect())
        .collect()
}

#[derive(Serialize, Deserialize)]
pub struct ProjectionFile {
    pub catalog_hash: String,
    pub rep_index: Option<usize>,
    pub generators: (SignedPerm, SignedPerm),
    pub parallel_projector: MatWire,
    pub perpendicular_projector: MatWire,
    pub reducing_matrix: MatWire,
    pub parallel_map: MatWire,
    pub perpendicular_map: MatWire,
    pub t1_g2: MatWire,
    pub t1_g3: MatWire,
    pub t2_g2: MatWire,
    pub t2_g3: MatWire,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub float_view: Option<ProjectionFloats>,
}

#[derive(Serialize, Deserialize)]
pub struct ProjectionFloats {
    pub parallel_projector: Vec<Vec<f64>>,
    pub reducing_matrix: Vec<Vec<f64>>,
    pub parallel_map: Vec<Vec<f64>>,
}

/// orbit.csv: twelve projected points, one `x,y,z` float row per line.
pub fn orbit_csv(points: &[[crate::qf::QfElem; 3]]) -> String {
    let mut s = String::from("x,y,z\n");
    for p in points {
        s.push_str(&format!("{},{},{}\n", p[0].to_f64(), p[1].to_f64(), p[2].to_f64()));
    }
    s
}

/// Standard artifact paths under one cache/output directory.
pub struct Layout {
    pub dir: PathBuf,
}

impl Layout {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Layout { dir: dir.into() }
    }

    pub fn b6(&self) -> PathBuf {
        self.dir.join("b6.txt")
    }

    pub fn catalog(&self) -> PathBuf {
        self.dir.join("catalog.json")
    }

    pub fn graph(&self, name: SubgroupName) -> PathBuf {
        self.dir.join(format!("ggraph-{name}.json"))
    }

    pub fn projection(&self) -> PathBuf {
        self.dir.join("projection.json")
    }

    pub fn orbit(&self) -> PathBuf {
        self.dir.join("orbit.csv")
    }

    pub fn report(&self) -> PathBuf {
        self.dir.join("report.md")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_is_stable() {
        assert_eq!(content_hash(b""), "cbf29ce484222325");
        assert_eq!(content_hash(b"hexoct"), content_hash(b"hexoct"));
        assert_ne!(content_hash(b"a"), content_hash(b"b"));
    }
}
