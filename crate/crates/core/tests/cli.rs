use std::process::{Command, Output};

fn loctime(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loctime")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_reports_known_values() {
    let o = loctime(&["solve", "--family", "star", "--params", "4", "--cops", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["capture_time"], 3);
    assert_eq!(v["schema_version"], 1);

    let o = loctime(&["solve", "--family", "heawood", "--cops", "3", "--format", "csv"]);
    assert!(stdout(&o).lines().nth(1).unwrap().contains(",finite,2,"));

    let o = loctime(&["solve", "--family", "cycle", "--params", "4", "--cops", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["outcome"], "robber_wins");
}

#[test]
fn json_output_is_byte_identical() {
    let args = ["locnum", "--family", "random_connected", "--params", "8", "0.3", "--seed", "5"];
    assert_eq!(stdout(&loctime(&args)), stdout(&loctime(&args)));
}

#[test]
fn exit_codes() {
    assert_eq!(loctime(&["solve", "--family", "star", "--params", "6", "--cops", "1", "--budget-states", "2"]).status.code(), Some(3));
    assert_eq!(loctime(&["eval", "--family", "star", "--params", "3", "--strategy", "nope"]).status.code(), Some(2));
    assert_eq!(loctime(&["solve", "--family", "star", "--params", "3"]).status.code(), Some(2));
    assert_eq!(loctime(&["solve", "--family", "random_tree", "--params", "5", "--cops", "2"]).status.code(), Some(2));
    assert_eq!(loctime(&["verify", "other"]).status.code(), Some(2));
    assert_eq!(loctime(&["mdim", "--graph", "/nonexistent/edges.txt"]).status.code(), Some(2));
}

#[test]
fn gen_writes_edge_lists() {
    let o = loctime(&["gen", "star", "5"]);
    assert!(stdout(&o).starts_with("6 5\n"));
    let o = loctime(&["gen", "pg2", "2"]);
    assert!(stdout(&o).starts_with("14 21\n"));
    let o = loctime(&["gen", "mary", "3", "2"]);
    assert!(stdout(&o).starts_with("13 12\n"));
    let dir = std::env::temp_dir().join(format!("loctime-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("h.txt");
    assert!(loctime(&["gen", "fig2", "--out", file.to_str().unwrap()]).status.success());
    let o = loctime(&["solve", "--graph", file.to_str().unwrap(), "--cops", "1", "--format", "text"]);
    assert!(stdout(&o).contains("capture time 3"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn eval_reports_worst_case() {
    let o = loctime(&["eval", "--family", "pg2", "--params", "2", "--strategy", "scripted:probes=0-3-5/1-2-4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["worst_case"]["rounds"], 2);
    let o = loctime(&["eval", "--family", "cycle", "--params", "4", "--strategy", "scripted:probes=0", "--max-rounds", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["worst_case"]["status"], "exceeded");
}

#[test]
fn decompose_and_mdim() {
    let o = loctime(&["decompose", "--family", "interval", "--params", "0:1", "1:2", "2:3", "3:4", "--method", "interval"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "path");
    assert_eq!(v["bags"].as_array().unwrap().len(), 3);
    let o = loctime(&["mdim", "--family", "grid", "--params", "8", "8"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["beta"], 2);
}

#[test]
fn verify_filter_gives_two_rows() {
    let o = loctime(&["verify", "--only", "heawood"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("1,heawood_locnum,") && rows[1].starts_with("1,heawood_capture,"));
    assert!(rows.iter().all(|r| r.contains(",pass,")));
}
