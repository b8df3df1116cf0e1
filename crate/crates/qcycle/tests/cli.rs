use std::path::{Path, PathBuf};

use qcycle::json::{parse_structure, QcsJson};
use qcycle_core::fixtures;
use qcycle_core::iso::are_isomorphic;
use qcycle_core::QCycleSet;
use tempfile::TempDir;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Out {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("qcycle").chain(args.iter().copied());
    let code = qcycle::run(argv, &mut stdout, &mut stderr);
    Out {
        code,
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn show(dir: &TempDir, fixture: &str) -> PathBuf {
    let out = run(&["fixtures", "show", fixture]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    write(dir, &format!("{fixture}.json"), &out.stdout)
}

#[test]
fn verify_simple_four_fixture() {
    let dir = TempDir::new().unwrap();
    let f = show(&dir, "simple-four");
    let out = run(&["verify", s(&f)]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "qcs: ok\n"));
    let out = run(&["--json", "verify", s(&f)]);
    assert_eq!(out.stdout, "{\"kind\":\"qcs\",\"ok\":true,\"violations\":[]}\n");
}

#[test]
fn verify_reports_broken_row() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.json", r#"{"n":2,"dot":[[0,0],[0,1]],"colon":[[0,1],[0,1]]}"#);
    let out = run(&["verify", s(&f)]);
    assert_eq!(out.code, 1);
    assert_eq!(out.stdout, "qcs: 1 violation(s)\n  row-bijectivity at (0): (0, 0)\n");
    let out = run(&["--json", "verify", s(&f)]);
    assert_eq!(
        out.stdout,
        "{\"kind\":\"qcs\",\"ok\":false,\"violations\":[{\"law\":\"row-bijectivity\",\"witness\":[0],\"lhs\":[0,0],\"rhs\":[]}]}\n"
    );
}

#[test]
fn verify_axiom_violation_prints_both_sides() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ax.json", r#"{"n":2,"dot":[[1,0],[0,1]],"colon":[[0,0],[0,0]]}"#);
    let out = run(&["verify", s(&f)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("axiom-"), "{}", out.stdout);
    assert!(out.stdout.contains("lhs (") && out.stdout.contains("!= rhs ("));
}

#[test]
fn malformed_and_ambiguous_inputs() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "m.json", "{\"n\": 2,\n \"dot\": [[0,1],[0,1]\n");
    let out = run(&["verify", s(&f)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("malformed JSON at line"), "{}", out.stderr);
    let f = write(&dir, "a.json", r#"{"n":1,"dot":[[0]],"colon":[[0]],"r":[[[0,0]]]}"#);
    let out = run(&["verify", s(&f)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("ambiguous"));
    let out = run(&["verify", "/nonexistent/file.json"]);
    assert_eq!(out.code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
}

#[test]
fn verify_solution_and_convert() {
    let dir = TempDir::new().unwrap();
    let x = show(&dir, "z3-transposition");
    let out = run(&["convert", "--to", "solution", s(&x)]);
    assert_eq!(out.stdout, "{\"n\":3,\"r\":[[[1,0],[0,0],[2,1]],[[1,1],[0,1],[2,0]],[[0,2],[1,2],[2,2]]]}\n");
    let sol = write(&dir, "sol.json", &out.stdout);
    assert_eq!(run(&["verify", s(&sol)]).stdout, "solution: ok\n");
    let back = run(&["convert", "--to", "qcs", s(&sol)]);
    assert_eq!(back.stdout, std::fs::read_to_string(&x).unwrap());
    let broken = write(&dir, "b.json", r#"{"n":2,"r":[[[1,0],[1,1]],[[0,0],[0,1]]]}"#);
    let out = run(&["verify", s(&broken)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("braid at ("));
}

#[test]
fn analyze_z3_reports_fourth_power() {
    let dir = TempDir::new().unwrap();
    let x = show(&dir, "z3-transposition");
    let out = run(&["analyze", s(&x)]);
    assert_eq!(out.code, 0);
    for line in [
        "regular: true",
        "non-degenerate: true",
        "group order: 2",
        "orbits: [[0, 1], [2]]",
        "retract classes: 2",
        "r^4 = id: true",
        "r^2 = id: false",
    ] {
        assert!(out.stdout.lines().any(|l| l == line), "missing {line:?} in\n{}", out.stdout);
    }
    let json = run(&["--json", "analyze", "--max-power", "2", s(&x)]);
    assert!(json.stdout.starts_with("{\"n\":3,\"regular\":true,\"nondegenerate\":true,"));
    // irregular structures have no group
    let c = show(&dir, "constant-k");
    let out = run(&["analyze", s(&c)]);
    assert!(out.stdout.contains("group order: n/a"));
    assert!(out.stdout.contains("r^3 = r^2: true"));
}

#[test]
fn retract_and_tower() {
    let dir = TempDir::new().unwrap();
    let x = show(&dir, "z3-transposition");
    let out = run(&["--json", "retract", s(&x)]);
    assert_eq!(out.stdout, "{\"n\":2,\"dot\":[[0,1],[0,1]],\"colon\":[[0,1],[0,1]],\"classes\":[[0,1],[2]]}\n");
    let out = run(&["retract", "--tower", s(&x)]);
    assert_eq!(out.stdout, "sizes: 3 -> 2 -> 1\nstabilized: true\n");
    let c = show(&dir, "constant-k");
    let out = run(&["retract", s(&c)]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("delta_"));
}

#[test]
fn extend_pair_matches_library() {
    let dir = TempDir::new().unwrap();
    let p = show(&dir, "gxg");
    let out = run(&["extend", "--pair", s(&p)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("\"base\":{\"n\":2,") && out.stdout.contains("\"m\":9}"));
    let e = parse_extension(&out.stdout);
    let f = fixtures::fixture("gxg").unwrap();
    assert_eq!(Some(e), f.qcycle_set());
    assert_eq!(run(&["verify", s(&p)]).stdout, "pair: ok\n");
}

fn parse_extension(line: &str) -> QCycleSet {
    let v: serde_json::Value = serde_json::from_str(line).unwrap();
    let q = QcsJson {
        n: v["n"].as_u64().unwrap() as usize,
        dot: serde_json::from_value(v["dot"].clone()).unwrap(),
        colon: serde_json::from_value(v["colon"].clone()).unwrap(),
    };
    q.to_qcs().unwrap()
}

#[test]
fn extend_rejects_invalid_pair() {
    let dir = TempDir::new().unwrap();
    let body = r#"{"base":{"n":1,"dot":[[0]],"colon":[[0]]},"m":2,
        "alpha":[[[[0,1],[0,1]]]],"alpha_prime":[[[[1,1],[0,0]]]]}"#;
    let p = write(&dir, "p.json", body);
    let out = run(&["extend", "--pair", s(&p)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("pair: "), "{}", out.stdout);
    assert!(out.stdout.contains("ugd-"));
}

#[test]
fn extend_semidirect_nine() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.json", r#"{"n":3,"dot":[[0,1,2],[0,1,2],[0,1,2]],"colon":[[0,0,2],[0,0,2],[0,0,2]]}"#);
    let sfile = write(&dir, "s.json", &qcycle::json::to_line(&QcsJson::from(&QCycleSet::trivial(3))));
    let theta = write(&dir, "t.json", "[[1,0,2],[1,0,2],[0,1,2]]");
    let out = run(&["extend", "--semidirect", s(&x), s(&sfile), s(&theta)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let e = parse_extension(&out.stdout);
    assert_eq!(e, fixtures::semidirect_nine());
    assert!(!e.is_regular());
    let bad = write(&dir, "bad.json", "[[1,2,0],[0,1,2],[0,1,2]]");
    let out = run(&["extend", "--semidirect", s(&x), s(&sfile), s(&bad)]);
    assert_eq!(out.code, 1, "{}", out.stderr);
}

#[test]
fn cover_check_and_factor() {
    let dir = TempDir::new().unwrap();
    let t4 = QcsJson::from(&QCycleSet::trivial(4));
    let t2 = QcsJson::from(&QCycleSet::trivial(2));
    let body = format!(
        "{{\"source\":{},\"target\":{},\"p\":[0,1,0,1]}}",
        qcycle::json::to_line(&t4),
        qcycle::json::to_line(&t2)
    );
    let c = write(&dir, "c.json", &body);
    assert_eq!(run(&["cover", "--check", s(&c)]).stdout, "cover: ok\n");
    assert_eq!(run(&["verify", s(&c)]).stdout, "cover: ok\n");
    let out = run(&["--json", "cover", "--factor", s(&c)]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("{\"m\":2,\"pair\":{\"base\":"));
    assert!(out.stdout.ends_with("\"phi\":[0,2,1,3]}\n"), "{}", out.stdout);
    let body = body.replace("[0,1,0,1]", "[0,0,0,1]");
    let c = write(&dir, "c2.json", &body);
    let out = run(&["cover", "--check", s(&c)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("uniform-fibers"));
}

#[test]
fn simplicity() {
    let dir = TempDir::new().unwrap();
    let x = show(&dir, "simple-four");
    assert_eq!(run(&["simple", s(&x)]).code, 0);
    let t = write(&dir, "t.json", &qcycle::json::to_line(&QcsJson::from(&QCycleSet::trivial(4))));
    let out = run(&["--json", "simple", s(&t)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("{\"simple\":false,\"congruences\":15,\"witness\":[["));
}

#[test]
fn enumerate_output_shape() {
    let out = run(&["enumerate", "--n", "2", "--cycle-set", "--up-to-iso"]);
    assert_eq!(
        out.stdout,
        concat!(
            "{\"n\":2,\"dot\":[[0,1],[0,1]],\"colon\":[[0,1],[0,1]]}\n",
            "{\"n\":2,\"dot\":[[1,0],[1,0]],\"colon\":[[1,0],[1,0]]}\n",
            "{\"summary\":{\"n\":2,\"kind\":\"qcs\",\"filter\":{\"regular\":false,\"nondegenerate\":false,",
            "\"cycle_set_only\":true,\"up_to_iso\":true},\"count\":2,\"stats\":{\"nodes\":4,\"dot_prunes\":2,",
            "\"colon_prunes\":0,\"filtered\":0,\"labeled\":2}}}\n"
        )
    );
    for line in run(&["enumerate", "--n", "3", "--regular"]).stdout.lines() {
        if !line.starts_with("{\"summary\"") {
            assert!(parse_structure(line).unwrap().is_regular());
        }
    }
}

#[test]
fn enumerate_threads_are_byte_identical() {
    let one = run(&["enumerate", "--n", "3", "--up-to-iso", "--threads", "1"]).stdout;
    for k in ["2", "8"] {
        assert_eq!(run(&["enumerate", "--n", "3", "--up-to-iso", "--threads", k]).stdout, one);
    }
}

#[test]
fn enumerate_caps_and_oracle() {
    assert_eq!(run(&["enumerate", "--n", "5"]).code, 2);
    assert_eq!(run(&["enumerate", "--n", "5", "--cap", "5"]).code, 2);
    assert_eq!(run(&["enumerate", "--n", "7", "--cap", "7", "--ack-long-run"]).code, 2);
    let out = run(&["enumerate", "--n", "2", "--cap", "3", "--up-to-iso"]);
    assert_eq!(out.code, 0);
    let out = run(&["--json", "enumerate", "--oracle", "--n", "3"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("\"labeled\":354,\"up_to_iso\":90,\"engine_labeled\":354"));
    let out = run(&["enumerate", "--oracle", "--n", "2", "--solutions", "--bijective"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("matches: true"));
}

#[test]
fn enumerate_solutions() {
    let out = run(&["enumerate", "--n", "2", "--solutions", "--bijective"]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[4].contains("\"kind\":\"solution\"") && lines[4].contains("\"count\":4"));
}

#[test]
fn sample_is_seeded() {
    let a = run(&["--json", "--seed", "5", "sample", "--count", "30"]);
    let b = run(&["--json", "--seed", "5", "sample", "--count", "30"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.contains("\"equivalence_failures\":0,\"regularity_failures\":0"));
    assert_eq!(run(&["sample", "--n", "4"]).code, 2);
}

#[test]
fn fixtures_commands() {
    let out = run(&["fixtures", "list"]);
    assert!(out.stdout.lines().count() >= 12);
    let out = run(&["fixtures", "check"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(!out.stdout.contains("FAIL"));
    let out = run(&["fixtures", "check", "z3-transposition"]);
    assert!(out.stdout.contains("pass: r^4 = id expected true observed true"));
    assert_eq!(run(&["fixtures", "check", "nope"]).code, 2);
    let out = run(&["fixtures", "show", "z-example-witness"]);
    assert!(out.stdout.starts_with("{\"square_of_minus_two\":"));
}

#[test]
fn output_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("out.json");
    let out = run(&["-o", s(&target), "fixtures", "show", "simple-four"]);
    assert_eq!(out.stdout, "");
    let written = std::fs::read_to_string(&target).unwrap();
    let x = parse_structure(&written).unwrap();
    assert!(are_isomorphic(&x, &fixtures::simple_four()).is_some());
}
