use std::io::Write;
use std::process::{Command, Output, Stdio};

fn lmpoly(args: &[&str]) -> Output {
    run(args, &[], None)
}

fn run(args: &[&str], env: &[(&str, &str)], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lmpoly"));
    cmd.args(args)
        .env_remove("LMPOLY_FORMAT")
        .env_remove("LMPOLY_TOL")
        .env_remove("LMPOLY_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    {
        let mut pipe = child.stdin.take().expect("piped");
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn generate(kind: &str, n: &str) -> String {
    let o = lmpoly(&["generate", kind, "-n", n]);
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn compute_from_edge_list() {
    let o = lmpoly(&["compute", "--edges", "3;0 1;1 2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("LM(G, x)   = x^3 - 4x^2 + 3x\n"), "{s}");
    assert!(s.contains("M(G, x)    = x^3 - 2x\n"));
    assert!(s.contains("roots of LM(G, x):\n  0 (×1)\n  1 (×1)\n  3 (×1)\n"), "{s}");
}

#[test]
fn compute_inputs_agree() {
    let edges = stdout(&lmpoly(&["compute", "--edges", "3;0 1;1 2"]));
    assert_eq!(stdout(&lmpoly(&["compute", "--graph6", "Bg"])), edges);
    assert_eq!(stdout(&lmpoly(&["compute", "--family", "path:3"])), edges);
    assert_eq!(stdout(&run(&["compute", "--file", "-"], &[], Some("3\n0 1\n1 2\n"))), edges);
    assert_eq!(stdout(&run(&["compute", "--file", "-"], &[], Some("Bg\n"))), edges);
}

#[test]
fn graph6_b_underscore_is_one_edge_plus_isolated_vertex() {
    let s = stdout(&lmpoly(&["compute", "--graph6", "B_"]));
    assert!(s.contains("(n = 3, m = 1)"), "{s}");
    assert!(s.contains("LM(G, x)   = x^3 - 2x^2\n"), "{s}");
}

#[test]
fn compute_cycle_four() {
    let o = lmpoly(&["compute", "--family", "cycle:4", "--subdivision", "--oracle"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("LM(G, x)   = x^4 - 8x^3 + 20x^2 - 16x + 2\n"), "{s}");
    assert!(s.contains("M(S(G), x) = x^8 - 8x^6 + 20x^4 - 16x^2 + 2\n"), "{s}");
    assert!(s.contains("  3.847759065 (×1)\n"), "{s}");
    assert!(s.contains("enumeration oracle: agrees"));
}

#[test]
fn compute_jsonl() {
    let o = lmpoly(&["compute", "--family", "star:4", "--format", "jsonl"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["laplacian_matching"], "x^4 - 6x^3 + 9x^2 - 4x");
    assert_eq!(v["roots"][1]["value"], "1");
    assert_eq!(v["roots"][1]["multiplicity"], 2);
    assert_eq!(v["roots"][2]["value"], "4");
}

#[test]
fn verify_cycle_flags_upper_equality() {
    let o = lmpoly(&["verify", "--family", "cycle:3"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("pass    largest-zero-bounds [cycle equality attained]"), "{s}");
    assert!(!s.lines().any(|l| l.starts_with("fail")));
    assert!(s.contains("summary: 10 pass, 0 fail, 0 skipped"), "{s}");
}

#[test]
fn verify_star_flags_lower_equality() {
    let o = lmpoly(&["verify", "--family", "star:4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("[star equality attained]"));
}

#[test]
fn verify_single_check() {
    let o = lmpoly(&["verify", "--edges", "2;0 1", "--check", "zero-iff-tree"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("pass    zero-iff-tree"));
    assert!(s.contains("summary: 1 pass, 0 fail, 0 skipped"));

    let o = lmpoly(&["verify", "--edges", "2;0 1", "--check", "zero-iff-tree", "--format", "jsonl"]);
    assert_eq!(
        stdout(&o),
        "{\"graph\":\"A_\",\"check\":\"zero-iff-tree\",\"verdict\":\"pass\",\"witnesses\":{\"constant term\":\"0\",\"tree\":\"true\"}}\n"
    );
}

#[test]
fn verify_reports_guard_skips() {
    let o = lmpoly(&["verify", "--family", "complete:7", "--check", "path-tree", "--path-tree-limit", "100"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("skipped path-tree (root 0)"), "{s}");
    assert!(s.contains("reason: path-tree exceeds 100 vertices"), "{s}");
}

#[test]
fn bad_input_exits_with_usage_error() {
    let o = lmpoly(&["compute", "--edges", "3;0 5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error:"));
    assert_eq!(lmpoly(&["compute", "--family", "wheel:5"]).status.code(), Some(2));
    assert_eq!(lmpoly(&["verify", "--family", "path:3", "--check", "bogus"]).status.code(), Some(2));
    assert_eq!(lmpoly(&["compute", "--family", "path:3", "--tol", "2"]).status.code(), Some(2));
    assert_eq!(lmpoly(&["compute", "--family", "path:3", "--charpoly-gate", "0"]).status.code(), Some(2));
    assert_eq!(lmpoly(&["compute"]).status.code(), Some(2));
}

#[test]
fn scan_connected_five_has_no_failures() {
    let input = generate("connected", "5");
    assert_eq!(input.lines().count(), 21);
    let o = run(&["scan", "-"], &[], Some(&input));
    assert!(o.status.success(), "{}", stderr(&o));
    let e = stderr(&o);
    assert!(e.contains("scanned 21 graphs, 0 parse errors skipped"), "{e}");
    assert!(e.contains(" 0 fail,"), "{e}");
}

#[test]
fn scan_skips_malformed_lines() {
    let mut input = generate("connected", "4");
    input.insert_str(0, "C~\nnot graph6\n");
    let o = run(&["scan", "--check", "zero-iff-tree"], &[], Some(&input));
    assert!(o.status.success());
    let e = stderr(&o);
    assert!(e.contains("line 2: malformed graph6"), "{e}");
    assert!(e.contains("scanned 7 graphs, 1 parse error skipped"), "{e}");

    let o = run(&["scan", "--check", "zero-iff-tree", "--strict"], &[], Some(&input));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn scan_all_edges_covers_every_pair() {
    let input = generate("connected", "6");
    let edges: usize = input
        .lines()
        .map(|l| lmpoly_core::Graph::from_graph6(l).unwrap().m())
        .sum();
    let o = run(&["scan", "--check", "interlacing", "--all-edges", "--format", "jsonl"], &[], Some(&input));
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), edges);
    assert!(out.lines().all(|l| l.contains("\"verdict\":\"pass\"")));
}

#[test]
fn scan_output_is_stable_across_worker_counts() {
    let input = generate("connected", "5");
    let args = ["scan", "--check", "path-tree", "--check", "largest-zero-bounds", "--all-roots", "--format", "jsonl"];
    let one = run(&args, &[("LMPOLY_JOBS", "1")], Some(&input));
    let four = run(&args, &[("LMPOLY_JOBS", "4")], Some(&input));
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stderr, four.stderr);
}

#[test]
fn environment_overrides() {
    let o = run(&["compute", "--family", "path:3"], &[("LMPOLY_FORMAT", "jsonl")], None);
    assert!(stdout(&o).starts_with('{'));
    let o = run(&["compute", "--family", "cycle:3"], &[("LMPOLY_TOL", "1e-3")], None);
    assert!(stdout(&o).contains("  3.732 (×1)\n"), "{}", stdout(&o));
    let o = run(&["compute", "--family", "path:3"], &[("LMPOLY_TOL", "0")], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn generate_is_seeded() {
    let a = stdout(&lmpoly(&["generate", "random-connected", "-n", "8", "--count", "5", "--seed", "9"]));
    let b = stdout(&lmpoly(&["generate", "random-connected", "-n", "8", "--count", "5", "--seed", "9"]));
    let c = stdout(&lmpoly(&["generate", "random-connected", "-n", "8", "--count", "5", "--seed", "10"]));
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert_eq!(a.lines().count(), 5);
    assert_eq!(stdout(&lmpoly(&["generate", "--family", "path:3"])), "Bg\n");
}
