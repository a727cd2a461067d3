use kolam_core::table::render_table;
use kolam_core::{
    build_closed_path, build_graph, build_matrix, generate_sequence, make_spec, render_kolam,
    ConnectionStyle, KolamSpec, RenderConfig,
};

const TABLE: &str = include_str!("fixtures/table1.tsv");

/// Regenerate frozen snapshots with `UPDATE_SNAPSHOTS=1 cargo test`.
fn snapshot(name: &str, actual: &[u8]) {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    if std::env::var_os("UPDATE_SNAPSHOTS").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected =
        std::fs::read(&path).unwrap_or_else(|_| panic!("missing snapshot {}", path.display()));
    assert!(expected == actual, "snapshot {name} differs");
}

#[test]
fn reference_table_matches_transcription() {
    let generated = render_table();
    for (got, want) in generated.lines().zip(TABLE.lines()) {
        assert_eq!(got, want);
    }
    assert_eq!(generated, TABLE);
}

#[test]
fn every_printed_cycle_is_generated_by_its_leading_arm_count() {
    for line in TABLE.lines() {
        let cols: Vec<&str> = line.split('\t').collect();
        let m: i64 = cols[0].parse().unwrap();
        let n: i64 = cols[1].split(", ").next().unwrap().parse().unwrap();
        let seq = generate_sequence(&KolamSpec::new(m, n).unwrap());
        assert_eq!(seq.cycle_string(), cols[2]);
    }
}

#[test]
fn matrix_dumps() {
    let spec = KolamSpec::new(4, 3).unwrap();
    let m = build_matrix(&generate_sequence(&spec), 3);
    snapshot("matrix_m4_n3.txt", m.to_text().as_bytes());
    snapshot("matrix_m4_n3.json", m.to_json().as_bytes());
}

#[test]
fn graph_and_path_dumps() {
    let path = build_closed_path(&KolamSpec::new(4, 3).unwrap());
    snapshot("graph_m4_n3.json", build_graph(&path).to_json().as_bytes());
    snapshot("path_m4_n3.json", path.to_json().as_bytes());
}

#[test]
fn svg_snapshots() {
    for style in ConnectionStyle::ALL {
        let spec = make_spec(4, 5, style, None).unwrap();
        let svg = render_kolam(&spec, &RenderConfig::default()).unwrap();
        snapshot(&format!("kolam_m4_n5_{style}.svg"), &svg);
    }
}
