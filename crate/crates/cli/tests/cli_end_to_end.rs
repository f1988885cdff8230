//! End-to-end runs of the atlas binary over temp files.

use std::path::Path;
use std::process::{Command, Output};

fn atlas(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_atlas"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn compute_skeleton_on_a_star() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("star.gr"), "5 4\n0 1 1\n0 2 1\n0 3 1\n0 4 1\n").unwrap();
    let out = atlas(&["compute", "--param", "skeleton", "star.gr"], dir.path());
    let v = stdout_json(&out);
    assert_eq!(v["kappa"], 4);
    assert_eq!(v["witness_source"], 0);
    assert_eq!(v["witness_radius"], "1/3");
    assert_eq!(v["had_ties"], false);
}

#[test]
fn compute_all_emits_report() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("k4.gr"), "4 6\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n")
        .unwrap();
    let out = atlas(&["compute", "--all", "k4.gr"], dir.path());
    let v = stdout_json(&out);
    assert_eq!(v["parameters"]["ml"]["value"], 3);
    assert_eq!(v["parameters"]["bw"]["value"], 3);
    assert!(v["relationship_checks"].as_array().unwrap().len() >= 10);
}

#[test]
fn compute_anchored_highway_instance() {
    let dir = tempfile::tempdir().unwrap();
    // vc-reduction of a single edge: originals 0,1; starred 2,3; hub 4.
    std::fs::write(
        dir.path().join("red.gr"),
        "5 5\n0 1 1\n0 2 1\n1 3 1\n2 4 5\n3 4 5\n",
    )
    .unwrap();
    let out = atlas(
        &["compute", "--param", "hd3", "--anchor", "4", "--radius", "5/2", "red.gr"],
        dir.path(),
    );
    let v = stdout_json(&out);
    // |C| + n + 1 = 1 + 2 + 1.
    assert_eq!(v["value"], 4);
}

#[test]
fn gadget_writes_graph_and_claims_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = atlas(
        &["gadget", "caterpillar", "--params", "b=4,variant=skel-3", "--out", "cat.gr", "--check"],
        dir.path(),
    );
    let v = stdout_json(&out);
    assert!(v["claims"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    let text = std::fs::read_to_string(dir.path().join("cat.gr")).unwrap();
    assert!(text.starts_with("10 9\n"));
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("cat.gr.claims.json")).unwrap())
            .unwrap();
    assert_eq!(sidecar["family"], "caterpillar");
    assert_eq!(sidecar["variant"], "skel-3");
}

#[test]
fn embed_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("m.txt"),
        "4\n0 1 2 4\n1 0 1 3\n2 1 0 2\n4 3 2 0\n",
    )
    .unwrap();
    let out = atlas(
        &["embed", "--metric", "m.txt", "--epsilon", "1/2", "--out", "g.gr"],
        dir.path(),
    );
    let v = stdout_json(&out);
    assert_eq!(v["distortion_ok"], true);
    assert_eq!(v["pruning_preserves_distances"], true);
    assert_eq!(v["long_edges_in_hub_sets"], true);
    assert_eq!(v["kappa_bound"]["holds"], true);
    // The embedded graph parses back.
    let text = std::fs::read_to_string(dir.path().join("g.gr")).unwrap();
    assert!(atlas_core::io::parse_graph(&text).is_ok());
}

#[test]
fn kcenter_ratio() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("p5.gr"), "5 4\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n").unwrap();
    let out = atlas(&["kcenter", "--k", "1", "--ratio", "p5.gr"], dir.path());
    let v = stdout_json(&out);
    assert_eq!(v["exact"]["radius"], "2");
    assert_eq!(v["exact"]["centers"], serde_json::json!([2]));
}

#[test]
fn verify_directory_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("a.gr"), "3 2\n0 1 1\n1 2 1\n").unwrap();
    std::fs::write(dir.path().join("b.gr"), "4 3\n0 1 1\n0 2 1\n0 3 1\n").unwrap();
    let out = atlas(&["verify", "."], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 2);

    let csv = atlas(&["verify", "--format", "csv", "--jobs", "2", "."], dir.path());
    let text = String::from_utf8_lossy(&csv.stdout);
    assert!(text.starts_with("graph_id,kind,name,status,detail"));
    assert!(text.lines().count() > 10);
}

#[test]
fn verify_empty_directory_is_empty_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = atlas(&["verify", "."], dir.path());
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 0);
}

#[test]
fn ddim_param_alias() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("k4.gr"), "4 6\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n")
        .unwrap();
    let out = atlas(&["compute", "--param", "ddim", "k4.gr"], dir.path());
    let v = stdout_json(&out);
    assert_eq!(v["value"], 4);
    assert_eq!(v["witness"]["ddim_log2"], 2.0);
}

#[test]
fn config_overrides_caps() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("tiny.toml"), "[caps]\nhd3 = 2\n").unwrap();
    std::fs::write(dir.path().join("p3.gr"), "3 2\n0 1 1\n1 2 1\n").unwrap();
    let out = atlas(
        &["--config", "tiny.toml", "compute", "--param", "hd3", "p3.gr"],
        dir.path(),
    );
    let v = stdout_json(&out);
    assert_eq!(v["status"], "skipped-cap");
}

#[test]
fn dimacs_input_accepted() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("road.gr"),
        "c tiny road\np sp 3 4\na 1 2 2\na 2 1 2\na 2 3 1\na 3 2 1\n",
    )
    .unwrap();
    let out = atlas(&["compute", "--param", "skeleton", "road.gr"], dir.path());
    let v = stdout_json(&out);
    assert_eq!(v["kappa"], 2);
}

#[test]
fn degenerate_empty_graph_report() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("empty.gr"), "0 0\n").unwrap();
    let out = atlas(&["compute", "--all", "empty.gr"], dir.path());
    let v = stdout_json(&out);
    assert_eq!(v["n"], 0);
    assert_eq!(v["parameters"]["kappa"]["value"], 0);
}

#[test]
fn gadget_families_with_inputs() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("c5.gr"), "5 5\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n4 0 1\n").unwrap();
    let out = atlas(
        &["gadget", "vc-reduction", "--input", "c5.gr", "--out", "red.gr", "--check"],
        dir.path(),
    );
    let v = stdout_json(&out);
    assert!(v["claims"][0]["status"] == "pass");
    assert_eq!(v["claims"][0]["actual"], 9);

    let out = atlas(
        &["gadget", "tight-weights", "--input", "c5.gr", "--params", "metric=true", "--out", "t.gr", "--check"],
        dir.path(),
    );
    let v = stdout_json(&out);
    assert!(v["claims"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));

    let out = atlas(
        &["gadget", "subdivided-grid", "--params", "q=2", "--out", "grid.gr", "--check"],
        dir.path(),
    );
    let v = stdout_json(&out);
    assert!(v["claims"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}
