//! CLI surface: artifact determinism, cache coherence, graph checks, and
//! exit codes, driving the built binary.

use std::path::Path;
use std::process::Command;

fn hexoct(cache: &Path, args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_hexoct"))
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn artifacts_and_checks() {
    let dir = tempdir();
    let cache = dir.as_path();

    // Enumeration twice: byte-identical artifact.
    let out = hexoct(cache, &["enumerate"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let first = std::fs::read(cache.join("b6.txt")).unwrap();
    assert!(hexoct(cache, &["enumerate"]).status.success());
    let second = std::fs::read(cache.join("b6.txt")).unwrap();
    assert_eq!(first, second);
    assert_eq!(first.iter().filter(|&&b| b == b'\n').count(), 46_080);

    // Classification writes the catalog.
    let out = hexoct(cache, &["classify"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let catalog_bytes = std::fs::read(cache.join("catalog.json")).unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("192 members"), "{stdout}");

    // A stale catalog (wrong enumeration hash) is refused and rebuilt.
    let tampered = String::from_utf8(catalog_bytes.clone())
        .unwrap()
        .replacen("\"b6_hash\": \"", "\"b6_hash\": \"0000", 1);
    std::fs::write(cache.join("catalog.json"), &tampered).unwrap();
    assert!(hexoct(cache, &["classify"]).status.success());
    let rebuilt = std::fs::read(cache.join("catalog.json")).unwrap();
    assert_eq!(rebuilt, catalog_bytes);

    // Degenerate case: the five-cycle graph has empty adjacency
    // and an all-zero spectrum.
    let out = hexoct(cache, &["graph", "--subgroup", "C5", "--format", "json"]);
    assert!(out.status.success());
    let json = String::from_utf8_lossy(&out.stdout);
    assert!(json.contains("\"spectrum\":[[0,192]]"), "{json}");
    let file: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    let rows = file["adjacency"].as_array().unwrap();
    assert_eq!(rows.len(), 192);
    assert!(rows.iter().all(|r| r.as_str().unwrap().chars().all(|c| c == '0')));

    let out = hexoct(
        cache,
        &["graph", "--subgroup", "D10", "--check-spectrum", "--check-components"],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    // Projection artifacts.
    let out = hexoct(cache, &["project", "--float"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let projection = std::fs::read_to_string(cache.join("projection.json")).unwrap();
    assert!(projection.contains("\"float_view\""));
    let orbit = std::fs::read_to_string(cache.join("orbit.csv")).unwrap();
    assert_eq!(orbit.lines().count(), 13); // header + 12 points

    // Usage errors exit with 2.
    let out = hexoct(cache, &["graph", "--subgroup", "Q8"]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::remove_dir_all(dir).ok();
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "hexoct-cli-test-{}-{}",
        std::process::id(),
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .unwrap()
            .as_nanos()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
