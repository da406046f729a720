use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hspectrum::format::{to_edge_list, to_graph6};
use hspectrum::Graph;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hspectrum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_g6(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, to_graph6(g) + "\n").unwrap();
    p
}

fn write_edges(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, to_edge_list(g)).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn upper_hamiltonian_number_of_the_path() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_g6(dir.path(), "path.g6", &Graph::path(4).unwrap());
    for method in ["exhaustive", "bnb"] {
        let o = bin(&["number", "--h", "cycle", "--g", s(&p), "--sense", "max", "--method", method]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), "8");
    }
    let o = bin(&["number", "--h", "path", "--g", s(&p), "--sense", "max"]);
    assert_eq!(stdout(&o).trim(), "7");
    let o = bin(&["--format", "json", "number", "--h", "path", "--g", s(&p), "--sense", "min"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 3);
}

#[test]
fn iso_on_cycles_and_paths() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = Graph::cycle(4).unwrap();
    let a = write_g6(dir.path(), "a.g6", &c4);
    let b = write_g6(dir.path(), "b.g6", &c4.relabel(&[2, 0, 3, 1]).unwrap());
    let o = bin(&["iso", s(&a), s(&b)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "isomorphic\n");
    let star = write_edges(dir.path(), "star.edges", &Graph::star(3).unwrap());
    let p = write_edges(dir.path(), "p.edges", &Graph::path(4).unwrap());
    let o = bin(&["iso", s(&star), s(&p)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "not isomorphic\n");
    let o = bin(&["iso", s(&a), s(&p)]);
    assert_eq!(stdout(&o), "not isomorphic\n");
}

#[test]
fn spider_trace_ends_in_a_path() {
    let dir = tempfile::tempdir().unwrap();
    let spider = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
    let t = write_edges(dir.path(), "spider.edges", &spider);
    let h = write_edges(dir.path(), "h.edges", &Graph::cycle(7).unwrap());
    let o = bin(&[
        "--format", "json", "transform", "--tree", s(&t), "--h", s(&h), "--f", "0,1,2,3,4,5,6", "--trace",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let edges = v["final"]["edges"].as_array().unwrap();
    let fin = Graph::new(7, edges.iter().map(|e| {
        (e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize)
    }))
    .unwrap();
    assert!(fin.is_path());
    assert!(v["final_sum"].as_u64() >= v["initial_sum"].as_u64());
    assert!(!v["steps"].as_array().unwrap().is_empty());

    let o = bin(&["transform", "--tree", s(&t), "--h", "path"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("f: 0,1,2,3,4,5,6"));
}

#[test]
fn spectrum_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_g6(dir.path(), "c4.g6", &Graph::cycle(4).unwrap());
    let a = bin(&["--format", "json", "spectrum", "--h", "cycle", "--g", s(&g)]);
    let b = bin(&["--format", "json", "spectrum", "--h", "cycle", "--g", s(&g)]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["min"], 4);
    assert_eq!(v["max"], 6);
    assert_eq!(v["enumerated"], 24);
    let t = bin(&["spectrum", "--h", "cycle", "--g", s(&g)]);
    assert!(stdout(&t).starts_with("values: 4x8 6x16\n"));
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = bin(&["verify", "closed-forms", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("passed: true"));
    let o = bin(&["--format", "json", "verify", "upper-bound", "--n", "5", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["instances_checked"], 42);

    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("progress");
    let args = ["verify", "upper-bound", "--n", "4", "--family", "all", "--resume", s(&log)];
    let first = bin(&args);
    let second = bin(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(fs::read_to_string(&log).unwrap().lines().count(), 36);

    for claim in ["spanning-trees", "articulation"] {
        assert_eq!(bin(&["verify", claim, "--n", "5"]).status.code(), Some(0));
    }
    // past the exhaustive range
    assert_eq!(bin(&["verify", "articulation", "--n", "9"]).status.code(), Some(1));
}

#[test]
fn domain_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let disconnected = dir.path().join("two.edges");
    fs::write(&disconnected, "n 4\n0 1\n2 3\n").unwrap();
    let o = bin(&["number", "--h", "path", "--g", s(&disconnected), "--sense", "max"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));

    let missing = dir.path().join("nope.g6");
    assert_eq!(bin(&["iso", s(&missing), s(&missing)]).status.code(), Some(1));

    let bad = dir.path().join("bad.g6");
    fs::write(&bad, "!!!\n").unwrap();
    assert_eq!(bin(&["iso", s(&bad), s(&bad)]).status.code(), Some(1));

    let p = write_edges(dir.path(), "p.edges", &Graph::path(3).unwrap());
    let o = bin(&["transform", "--tree", s(&p), "--h", "path", "--f", "0,0,1"]);
    assert_eq!(o.status.code(), Some(1));

    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bin(&["number", "--h", "path"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", "closed-forms", "--n", "x"]).status.code(), Some(2));
    assert_eq!(bin(&["--format", "xml", "iso", "a", "b"]).status.code(), Some(2));
}
