//! Command-line driver: enumeration, classification, projection, graph
//! analysis, and the full verification run with its claim report.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::chartab::SubgroupName;
use crate::claims::{self, ExtraChecks};
use crate::ggraph::VERTEX_COUNT;
use crate::icosa::{build_ihat, classify, find_all_icosahedral_subgroups, IcosaRep};
use crate::pipeline::{self, Pipeline};
use crate::projection::{
    icosahedron_orbit, projector, reduce_rep, reducing_matrix, Space,
};
use crate::qfmat::QfMat;
use crate::store::{self, Layout};

/// Exit codes: 0 all pass, 1 claim or computation failure, 2 usage error.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hexoct",
    about = "Exact toolkit for the 6D hyperoctahedral group: icosahedral subgroup \
             classification, golden-ratio projections, and intersection-graph spectra",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Artifact cache directory (env HEXOCT_CACHE_DIR overrides the default).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Output directory for reports and projection artifacts
    /// (defaults to the cache directory).
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Stdout rendering for summaries.
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    pub format: Format,

    /// Worker threads (0 = library default). Results are identical for any
    /// value.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Seed for the shuffled re-verification pass in verify-all.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Include non-authoritative float renderings in projection output.
    #[arg(long, global = true)]
    pub float: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate the whole group and write the canonical element list.
    Enumerate,
    /// Find and classify all icosahedral subgroups; write catalog.json.
    Classify,
    /// Exact projection data for one representation; write projection.json
    /// and orbit.csv.
    Project {
        /// Catalog index of the representation (default: the standard
        /// representative with its reference generators).
        #[arg(long)]
        rep_index: Option<usize>,
    },
    /// Build and analyze one intersection graph; write ggraph-<name>.json.
    Graph {
        /// Subgroup type: T, D10, D6, D4, C5, C3, C2, or e.
        #[arg(long, value_parser = parse_subgroup)]
        subgroup: SubgroupName,
        /// Verify the spectrum against the pinned table.
        #[arg(long)]
        check_spectrum: bool,
        /// Verify component count and sizes.
        #[arg(long)]
        check_components: bool,
    },
    /// Run the claim checklist and write report.md.
    Report,
    /// Full pipeline, all artifacts, determinism passes, and report.md;
    /// exit 0 only when every claim passes.
    VerifyAll,
}

fn parse_subgroup(s: &str) -> Result<SubgroupName, String> {
    SubgroupName::parse(s)
        .ok_or_else(|| format!("unknown subgroup {s} (expected T, D10, D6, D4, C5, C3, C2, or e)"))
}

fn cache_dir(cli: &Cli) -> PathBuf {
    cli.cache_dir
        .clone()
        .or_else(|| std::env::var_os("HEXOCT_CACHE_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(".hexoct-cache"))
}

pub fn run(cli: &Cli) -> i32 {
    if cli.jobs > 0 {
        // Ignore failure: the global pool can only be set once per process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    let cache = Layout::new(cache_dir(cli));
    let output = Layout::new(cli.output.clone().unwrap_or_else(|| cache.dir.clone()));

    let result = match &cli.command {
        Command::Enumerate => cmd_enumerate(cli, &cache),
        Command::Classify => cmd_classify(cli, &cache),
        Command::Project { rep_index } => cmd_project(cli, &cache, &output, *rep_index),
        Command::Graph { subgroup, check_spectrum, check_components } => {
            cmd_graph(cli, &cache, *subgroup, *check_spectrum, *check_components)
        }
        Command::Report => cmd_report(cli, &cache, &output, false),
        Command::VerifyAll => cmd_report(cli, &cache, &output, true),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_FAIL
        }
    }
}

fn cmd_enumerate(cli: &Cli, cache: &Layout) -> Result<i32, String> {
    let b6 = crate::perm::enumerate_b6();
    let hash = pipeline::write_b6_artifact(cache, &b6).map_err(|e| e.to_string())?;
    match cli.format {
        Format::Json => println!(
            "{}",
            serde_json::json!({"order": b6.len(), "hash": hash, "artifact": cache.b6()})
        ),
        _ => println!(
            "enumerated {} elements -> {} (hash {hash})",
            b6.len(),
            cache.b6().display()
        ),
    }
    Ok(EXIT_OK)
}

fn cmd_classify(cli: &Cli, cache: &Layout) -> Result<i32, String> {
    let p = Pipeline::load_or_compute(cache).map_err(|e| e.to_string())?;
    pipeline::write_b6_artifact(cache, &p.b6).map_err(|e| e.to_string())?;
    let (a, b) = p.catalog.split_sizes();
    match cli.format {
        Format::Json => {
            let noncryst: Vec<_> = p
                .catalog
                .noncryst
                .iter()
                .map(|nc| {
                    serde_json::json!({
                        "type": nc.representative.iso_type.to_string(),
                        "class_size": nc.class_size,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "crystallographic_members": p.catalog.members.len(),
                    "rotation_split": [a, b],
                    "noncrystallographic": noncryst,
                    "artifact": cache.catalog(),
                })
            );
        }
        _ => {
            println!(
                "crystallographic class: {} members (rotation split {a} + {b})",
                p.catalog.members.len()
            );
            for nc in &p.catalog.noncryst {
                println!(
                    "non-crystallographic {}: class of {}",
                    nc.representative.iso_type, nc.class_size
                );
            }
            println!("catalog -> {}", cache.catalog().display());
        }
    }
    Ok(EXIT_OK)
}

fn projection_file(
    rep: &IcosaRep,
    rep_index: Option<usize>,
    catalog_hash: &str,
    with_floats: bool,
) -> Result<(store::ProjectionFile, Vec<[crate::qf::QfElem; 3]>), String> {
    let p1 = projector(rep, Space::Parallel);
    let p2 = projector(rep, Space::Perpendicular);
    let r = reducing_matrix(rep).map_err(|e| e.to_string())?;
    let pair = reduce_rep(rep).map_err(|e| e.to_string())?;
    let d = r.transpose().multiply(&r);
    let rinv = QfMat::from_fn(6, 6, |i, j| &r[(j, i)] / &d[(i, i)]);
    let pi_par = rinv.block(0, 3, 0, 6);
    let pi_perp = rinv.block(3, 6, 0, 6);
    let orbit = icosahedron_orbit(rep).map_err(|e| e.to_string())?;

    let float_view = with_floats.then(|| store::ProjectionFloats {
        parallel_projector: store::mat_to_floats(&p1),
        reducing_matrix: store::mat_to_floats(&r),
        parallel_map: store::mat_to_floats(&pi_par),
    });

    Ok((
        store::ProjectionFile {
            catalog_hash: catalog_hash.to_string(),
            rep_index,
            generators: (rep.g2, rep.g3),
            parallel_projector: store::mat_to_wire(&p1),
            perpendicular_projector: store::mat_to_wire(&p2),
            reducing_matrix: store::mat_to_wire(&r),
            parallel_map: store::mat_to_wire(&pi_par),
            perpendicular_map: store::mat_to_wire(&pi_perp),
            t1_g2: store::mat_to_wire(&pair.t1_g2),
            t1_g3: store::mat_to_wire(&pair.t1_g3),
            t2_g2: store::mat_to_wire(&pair.t2_g2),
            t2_g3: store::mat_to_wire(&pair.t2_g3),
            float_view,
        },
        orbit,
    ))
}

fn cmd_project(
    cli: &Cli,
    cache: &Layout,
    output: &Layout,
    rep_index: Option<usize>,
) -> Result<i32, String> {
    let p = Pipeline::load_or_compute(cache).map_err(|e| e.to_string())?;
    let catalog_hash = store::content_hash(p.catalog_json().as_bytes());
    let standard;
    let rep = match rep_index {
        Some(i) => p
            .catalog
            .members
            .get(i)
            .ok_or_else(|| format!("rep index {i} out of range 0..{}", VERTEX_COUNT))?,
        None => {
            standard = build_ihat();
            &standard
        }
    };
    let (file, orbit) = projection_file(rep, rep_index, &catalog_hash, cli.float)?;
    let json = serde_json::to_string_pretty(&file).map_err(|e| e.to_string())?;
    store::write_text(&output.projection(), &json).map_err(|e| e.to_string())?;
    store::write_text(&output.orbit(), &store::orbit_csv(&orbit)).map_err(|e| e.to_string())?;
    match cli.format {
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "projection": output.projection(),
                "orbit": output.orbit(),
                "generators": [file.generators.0.to_string(), file.generators.1.to_string()],
            })
        ),
        _ => {
            println!("projection -> {}", output.projection().display());
            println!("orbit -> {}", output.orbit().display());
        }
    }
    Ok(EXIT_OK)
}

fn cmd_graph(
    cli: &Cli,
    cache: &Layout,
    name: SubgroupName,
    check_spectrum: bool,
    check_components: bool,
) -> Result<i32, String> {
    let p = Pipeline::load_or_compute(cache).map_err(|e| e.to_string())?;
    let catalog_hash = store::content_hash(p.catalog_json().as_bytes());

    let (graph, report) = match pipeline::load_graph_if_fresh(cache, name, &catalog_hash) {
        Some(cached) => cached,
        None => {
            let built = p.graph(name).map_err(|e| e.to_string())?;
            pipeline::write_graph_artifact(cache, &built.0, &built.1, &catalog_hash)
                .map_err(|e| e.to_string())?;
            built
        }
    };

    match cli.format {
        Format::Json => {
            let file = store::graph_to_file(&graph, &report, &catalog_hash);
            println!("{}", serde_json::to_string(&file).map_err(|e| e.to_string())?);
        }
        Format::Csv => {
            println!("eigenvalue,multiplicity");
            for (l, m) in &report.eigenvalues {
                println!("{l},{m}");
            }
        }
        Format::Md => {
            println!(
                "{name}-graph: degree {}, {} components, triangle-free {}",
                report.degree,
                report.components.len(),
                report.triangle_free
            );
            println!("spectrum: {:?}", report.eigenvalues);
            println!("artifact -> {}", cache.graph(name).display());
        }
    }

    if check_spectrum || check_components {
        if let Err(msg) = claims::check_graph(name, &report) {
            let spectral = msg.contains("spectrum");
            if (check_spectrum && spectral) || (check_components && !spectral) {
                eprintln!("FAIL {msg}");
                return Ok(EXIT_FAIL);
            }
        }
        println!("checks passed for {name}");
    }
    Ok(EXIT_OK)
}

fn cmd_report(
    cli: &Cli,
    cache: &Layout,
    output: &Layout,
    full_verify: bool,
) -> Result<i32, String> {
    let p = Pipeline::compute(None).map_err(|e| e.to_string())?;

    let mut extra = ExtraChecks::default();
    if full_verify {
        // Shuffled re-search plus an independent classification: the
        // canonical members and the serialized artifact must both agree.
        let seed = cli.seed.unwrap_or(1);
        let reshuffled = find_all_icosahedral_subgroups(&p.b6, Some(seed));
        let same_groups = {
            let mut cryst: Vec<_> = reshuffled
                .iter()
                .filter(|r| r.iso_type == crate::icosa::IsoType::Cryst)
                .map(|r| r.group.clone())
                .collect();
            cryst.sort();
            cryst == p.catalog.members.iter().map(|m| m.group.clone()).collect::<Vec<_>>()
        };
        extra.search_order_invariant = Some(same_groups);

        let catalog_bytes_match = classify(reshuffled, &p.b6, &p.b6_plus)
            .map(|second| {
                let b6_hash = store::content_hash(store::b6_lines(&p.b6).as_bytes());
                let a = serde_json::to_string(&store::catalog_to_file(&p.catalog, &b6_hash));
                let b = serde_json::to_string(&store::catalog_to_file(&second, &b6_hash));
                match (a, b) {
                    (Ok(a), Ok(b)) => a == b,
                    _ => false,
                }
            })
            .unwrap_or(false);
        extra.artifacts_deterministic = Some(catalog_bytes_match);
    }

    let mut graphs = BTreeMap::new();
    for name in SubgroupName::ALL {
        let built = p.graph(name).map_err(|e| e.to_string())?;
        graphs.insert(name, built);
    }

    if full_verify {
        let b6_hash = pipeline::write_b6_artifact(cache, &p.b6).map_err(|e| e.to_string())?;
        let catalog_json = p.catalog_json();
        store::write_text(&cache.catalog(), &catalog_json).map_err(|e| e.to_string())?;
        let catalog_hash = store::content_hash(catalog_json.as_bytes());
        let _ = b6_hash;
        for name in SubgroupName::ALL {
            let (graph, report) = &graphs[&name];
            pipeline::write_graph_artifact(cache, graph, report, &catalog_hash)
                .map_err(|e| e.to_string())?;
        }
        let standard = build_ihat();
        let (file, orbit) = projection_file(&standard, None, &catalog_hash, cli.float)?;
        let json = serde_json::to_string_pretty(&file).map_err(|e| e.to_string())?;
        store::write_text(&output.projection(), &json).map_err(|e| e.to_string())?;
        store::write_text(&output.orbit(), &store::orbit_csv(&orbit))
            .map_err(|e| e.to_string())?;
    }

    let outcomes = claims::evaluate(&p, &graphs, &extra);
    for o in &outcomes {
        println!("{} {} — {}", if o.pass { "PASS" } else { "FAIL" }, o.id, o.detail);
    }
    let report = claims::render_report(&outcomes, Some(&p));
    store::write_text(&output.report(), &report).map_err(|e| e.to_string())?;
    println!("report -> {}", output.report().display());

    let all_pass = outcomes.iter().all(|o| o.pass);
    Ok(if all_pass { EXIT_OK } else { EXIT_FAIL })
}
