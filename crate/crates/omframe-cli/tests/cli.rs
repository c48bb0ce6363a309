use std::io::Write;
use std::process::{Command, Output, Stdio};

const RUNNING: &str = "2+s+s^4, 3+s^2+s^4, 6+2*s^3+s^4";

fn omframe(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_omframe"))
        .args(args)
        .env_remove("OMFRAME_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn frame_prints_the_running_example() {
    let out = omframe(&["frame", RUNNING], None);
    assert_eq!(out.status.code(), Some(0));
    let expected = "\
field:  q
input:  [s^4+s+2, s^4+s^2+3, s^4+2*s^3+6]
gcd:    1
beta:   1
mu:     (2, 2)
pivots: 1 2 3 4 5 6 7 10 13
basic:  8 9
frame:
  [-s+2, -s^2-3*s+3, -s^2-12*s+9]
  [2*s+1, s^2+5*s+2, 15*s+8]
  [-s-1, -2*s-2, s^2-5*s-7]
verification: all 7 checks passed
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn json_output_is_versioned_and_byte_stable() {
    let a = omframe(&["--json", "--no-timing", "frame", RUNNING], None);
    let b = omframe(&["--json", "--no-timing", "frame", RUNNING], None);
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["command"], "frame");
    assert_eq!(doc["frame"][0][1], serde_json::json!(["3", "-3", "-1"]));
    assert!(doc.get("timing").is_none());
    let timed = omframe(&["--json", "frame", RUNNING], None);
    let doc: serde_json::Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(doc["timing"]["total_ms"].is_number());
}

#[test]
fn frame_output_verifies() {
    for field in ["q", "gf:101"] {
        let frame = omframe(&["--field", field, "--json", "frame", "s^3+2, s^2-s, 4*s+1"], None);
        assert!(frame.status.success());
        let out = omframe(&["--field", field, "verify", "--frame", "-"], Some(&stdout(&frame)));
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
        assert!(stdout(&out).ends_with("OK\n"));
    }
}

#[test]
fn identity_is_not_a_frame() {
    let identity = r#"[[["1"], []], [[], ["1"]]]"#;
    let out = omframe(&["verify", "--frame", "-", "s, s+1"], Some(identity));
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAIL  product"), "{}", stdout(&out));
}

#[test]
fn bare_frame_needs_a_vector() {
    let out = omframe(&["verify", "--frame", "-"], Some(r#"[[["1"]]]"#));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_prints_witnesses() {
    let out = omframe(&["gen", "--kind", "beta-mu", "--n", "3", "--mu", "1,2", "--j", "1"], None);
    assert_eq!(stdout(&out), "[s, s^2, s^3+1]\n");
    let out = omframe(&["gen", "--kind", "upper-bound", "--n", "3", "--d", "4"], None);
    assert_eq!(stdout(&out), "[1, 0, s^4]\n");
    let out = omframe(&["gen", "--kind", "detC"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = omframe(&["gen", "--kind", "beta-mu", "--mu", "1,2", "--j", "2"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("E009"));
}

#[test]
fn input_errors_exit_two_with_a_code() {
    let cases = [
        (vec!["frame", "2s"], "E011"),
        (vec!["frame", "0, 0"], "E001"),
        (vec!["frame", "s"], "E002"),
        (vec!["--field", "gf:10", "frame", "s, 1"], ""),
        (vec!["eframe", "s, 2*s"], "E007"),
    ];
    for (args, code) in cases {
        let out = omframe(&args, None);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains(code), "{args:?}");
    }
}

#[test]
fn reads_the_vector_from_stdin() {
    let out = omframe(&["mubasis", "-"], Some("[s, s+1]\n"));
    assert_eq!(stdout(&out), "mu: (1)\nu1: [-s-1, s]\n");
}

#[test]
fn bezout_and_oracle() {
    let out = omframe(&["bezout", "s, s+1"], None);
    assert_eq!(stdout(&out), "beta: 0\nbezout: [-1, 1]\n");
    let out = omframe(&["oracle", RUNNING], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("agree\n"));
}

#[test]
fn eframe_reports_its_section() {
    let out = omframe(&["eframe", RUNNING], None);
    assert!(out.status.success());
    assert!(stdout(&out).contains("section indices: (0, 1, 2)"));
}

#[test]
fn bench_reports_its_seed() {
    let args = ["--json", "bench", "--n", "3", "--d", "2,4", "--samples", "2"];
    let out = omframe(&[&["--seed", "7"][..], &args].concat(), None);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["seed"], 7);
    assert_eq!(doc["cells"].as_array().unwrap().len(), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_omframe")).args(args).env("OMFRAME_SEED", "11").output().unwrap();
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["seed"], 11);
    assert_eq!(omframe(&["bench", "--n", "1"], None).status.code(), Some(2));
}
