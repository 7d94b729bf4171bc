use std::fs;
use std::process::{Command, Output};

use tempfile::TempDir;

fn chern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chern"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

const TRIANGLE: &str = r#"{
  "vertices": ["a", "b", "c"],
  "simplices": [
    { "simplex": ["a", "b", "c"], "word": ["a", "b", "c", "a", "b", "c"] },
    { "simplex": ["a", "b"], "word": ["a", "b", "a", "b"] }
  ]
}"#;

const TETRA_BOUNDARY: &str = r#"{
  "vertices": ["a", "b", "c", "d"],
  "simplices": [
    { "simplex": ["b", "c", "d"] },
    { "simplex": ["a", "d", "c"] },
    { "simplex": ["a", "b", "d"] },
    { "simplex": ["a", "c", "b"] }
  ]
}"#;

#[test]
fn curv_reproduces_sample_session() {
    for (word, alphabet, expected) in [
        ("bcabbccacb", "abc", "-1/8\n"),
        ("ddbbccdbc", "cbd", "5/18\n"),
        ("papaspaspsa", "aps", "1/24\n"),
    ] {
        let out = chern(&["curv", word, alphabet]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), expected);
        for method in ["mnev", "sections"] {
            let out = chern(&["curv", word, alphabet, "--method", method]);
            assert_eq!(stdout(&out), expected, "{method}");
        }
    }
}

#[test]
fn curv_all_methods_and_names() {
    let out = chern(&["curv", "bcabbccacb", "abc", "--method", "all"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "mnev -1/8\ntriangles -1/8\nsections -1/8\n");
    let out = chern(&["curv", "v1 v2 v3 v1 v2 v3", "v1 v2 v3"]);
    assert_eq!(stdout(&out), "-1/4\n");
}

#[test]
fn curv_errors_exit_two() {
    for args in [
        &["curv", "abab", "abc"][..],
        &["curv", "abcd", "abc"],
        &["curv", "abc", "aab"],
        &["curv", "abc", "ab"],
        &["curv"],
        &["curv", "abc", "abc", "--method", "nope"],
        &["frobnicate"],
    ] {
        let out = chern(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn validate_cochain_on_triangle() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "tri.json", TRIANGLE);
    let out = chern(&["validate", &file]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "PASS\n");
    let out = chern(&["cochain", &file]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "a b c -> -1/4\n");
}

#[test]
fn validate_reports_violations() {
    let dir = TempDir::new().unwrap();
    let bad = TRIANGLE.replace(r#"["a", "b", "a", "b"]"#, r#"["a", "a", "b", "b"]"#);
    let file = write(&dir, "bad.json", &bad);
    let out = chern(&["validate", &file]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stdout(&out).contains("[a b c] -> [a b]"),
        "{}",
        stdout(&out)
    );
    let out = chern(&["cochain", &file]);
    assert_eq!(out.status.code(), Some(1));

    let once = r#"{"vertices": ["a","b","c"], "simplices": [{"simplex": ["a","b","c"], "word": ["a","b","c"]}]}"#;
    let file = write(&dir, "once.json", once);
    let out = chern(&["validate", &file]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("occurs 1 time"));
}

#[test]
fn parse_failures_exit_two() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "broken.json", "{ not json");
    for cmd in ["validate", "cochain", "chern"] {
        assert_eq!(chern(&[cmd, &file]).status.code(), Some(2), "{cmd}");
    }
    assert_eq!(
        chern(&["validate", "/nonexistent/file.json"]).status.code(),
        Some(2)
    );
    assert_eq!(chern(&["extract", &file]).status.code(), Some(2));
    assert_eq!(chern(&["product", &file, "2"]).status.code(), Some(2));
}

#[test]
fn product_then_chern_is_zero() {
    let dir = TempDir::new().unwrap();
    let base = write(&dir, "base.json", TETRA_BOUNDARY);
    for r in ["2", "3", "4"] {
        let out_path = dir.path().join(format!("product{r}.json"));
        let out = chern(&["product", &base, r, "-o", out_path.to_str().unwrap()]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let file = out_path.to_str().unwrap();
        assert_eq!(stdout(&chern(&["validate", file])), "PASS\n");
        let out = chern(&["chern", file]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), "0\n");
        let cochain = stdout(&chern(&["cochain", file]));
        assert_eq!(cochain.lines().count(), 4);
    }
    let out = chern(&["product", &base, "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn product_to_stdout_round_trips() {
    let dir = TempDir::new().unwrap();
    let base = write(
        &dir,
        "edge.json",
        r#"{"vertices": ["b", "a"], "simplices": [{"simplex": ["a", "b"]}]}"#,
    );
    let out = chern(&["product", &base, "2"]);
    assert!(out.status.success());
    let file = write(&dir, "product.json", &stdout(&out));
    assert_eq!(stdout(&chern(&["validate", &file])), "PASS\n");
    let compact: String = stdout(&out).split_whitespace().collect();
    assert!(compact.contains(r#""word":["b","a","b","a"]"#), "{compact}");
}

#[test]
fn chern_refuses_non_surfaces() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "tri.json", TRIANGLE);
    let out = chern(&["chern", &file]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a closed oriented surface"));

    let twisted = TETRA_BOUNDARY.replace(r#"["a", "c", "b"]"#, r#"["a", "b", "c"]"#);
    let base = write(&dir, "twisted.json", &twisted);
    let product = dir.path().join("twisted-product.json");
    assert!(
        chern(&["product", &base, "2", "-o", product.to_str().unwrap()])
            .status
            .success()
    );
    assert_eq!(
        chern(&["chern", product.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn chern_of_twisted_sphere() {
    let dir = TempDir::new().unwrap();
    let hopf = r#"{
      "vertices": ["a", "b", "c", "d"],
      "simplices": [
        { "simplex": ["b", "c", "d"], "word": ["b","b","b","d","d","d","c","c","c"] },
        { "simplex": ["a", "d", "c"], "word": ["a","a","a","c","c","c","d","d","d"] },
        { "simplex": ["a", "b", "d"], "word": ["a","a","a","b","b","b","d","d","d"] },
        { "simplex": ["a", "c", "b"], "word": ["a","a","a","b","b","b","c","c","c"] }
      ]
    }"#;
    let file = write(&dir, "hopf.json", hopf);
    let out = chern(&["chern", &file]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
}

fn staircase_edge_fibration() -> &'static str {
    r#"{
      "total_vertices": ["a0", "a1", "b0", "b1"],
      "total_simplices": [
        ["a0", "a1", "b0"], ["a1", "b0", "b1"],
        ["a1", "a0", "b1"], ["a0", "b1", "b0"]
      ],
      "projection": { "a0": "a", "a1": "a", "b0": "b", "b1": "b" },
      "fiber_orders": { "a": ["a0", "a1"], "b": ["b0", "b1"] }
    }"#
}

#[test]
fn extract_matches_product() {
    let dir = TempDir::new().unwrap();
    let fib = write(&dir, "fib.json", staircase_edge_fibration());
    let extracted = dir.path().join("extracted.json");
    let out = chern(&["extract", &fib, "-o", extracted.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let base = write(
        &dir,
        "edge.json",
        r#"{"vertices": ["a", "b"], "simplices": [{"simplex": ["a", "b"]}]}"#,
    );
    let product = chern(&["product", &base, "2"]);
    assert_eq!(fs::read_to_string(&extracted).unwrap(), stdout(&product));
    assert_eq!(
        stdout(&chern(&["validate", extracted.to_str().unwrap()])),
        "PASS\n"
    );
}

#[test]
fn extract_malformed_exits_one() {
    let dir = TempDir::new().unwrap();
    let broken = staircase_edge_fibration().replace(r#"["a0", "b1", "b0"]"#, "");
    let broken = broken.replace(r#"["a1", "a0", "b1"], "#, r#"["a1", "a0", "b1"]"#);
    let fib = write(&dir, "broken.json", &broken);
    let out = chern(&["extract", &fib]);
    assert_eq!(
        out.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn crosscheck_is_deterministic() {
    let a = chern(&["crosscheck", "200", "12", "7"]);
    let b = chern(&["crosscheck", "200", "12", "7"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), "200/200 OK\n");
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&chern(&["crosscheck", "1", "6", "1"])), "1/1 OK\n");
    assert_eq!(stdout(&chern(&["crosscheck", "0", "6", "1"])), "0/0 OK\n");
    assert_eq!(chern(&["crosscheck", "1", "5", "1"]).status.code(), Some(2));
}
