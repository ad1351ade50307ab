use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn ldend(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ldend"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn check_exit_codes() {
    let ok = ldend(&["check", "--class", "pre_lie", p(&fixture("p2.alg.json"))]);
    assert_eq!(code(&ok), 0);
    assert_eq!(stdout(&ok), "pre_lie: PASS\n");

    let bad = ldend(&["check", "--class", "pre_lie", p(&fixture("n2.alg.json"))]);
    assert_eq!(code(&bad), 1);
    let text = stdout(&bad);
    assert!(
        text.lines().nth(1).unwrap().contains("eq-2.2 at (1,2,1)"),
        "{text}"
    );

    let missing = ldend(&["check", "--class", "pre_lie", "missing.json"]);
    assert_eq!(code(&missing), 2);
    assert!(String::from_utf8_lossy(&missing.stderr).contains("missing.json"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&ldend(&[])), 2);
    assert_eq!(
        code(&ldend(&[
            "check",
            "--class",
            "nope",
            p(&fixture("p2.alg.json"))
        ])),
        2
    );
    assert_eq!(code(&ldend(&["frobnicate"])), 2);
}

#[test]
fn malformed_files_report_position_and_field() {
    let dir = tempfile::tempdir().unwrap();
    let truncated = dir.path().join("t.json");
    fs::write(&truncated, "{\"dim\":2,\n").unwrap();
    let out = ldend(&["check", "--class", "pre_lie", p(&truncated)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let bad_entry = dir.path().join("e.json");
    fs::write(&bad_entry, r#"{"dim":2,"ops":{"circ":[[1,3,1,"1"]]}}"#).unwrap();
    let out = ldend(&["check", "--class", "pre_lie", p(&bad_entry)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("ops.circ[1][2]"));
}

#[test]
fn catalog_matches_shipped_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let out = ldend(&["catalog", "all", "--out", p(dir.path())]);
    assert_eq!(code(&out), 0);
    let mut written: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    written.sort();
    let mut shipped: Vec<_> = fs::read_dir(fixture(""))
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    shipped.sort();
    assert_eq!(written, shipped);
    for name in written {
        let a = fs::read(dir.path().join(&name)).unwrap();
        let b = fs::read(fixture(name.to_str().unwrap())).unwrap();
        assert_eq!(a, b, "{name:?}");
    }
}

#[test]
fn catalog_verifies_every_fixture() {
    let names = stdout(&ldend(&["catalog"]));
    assert_eq!(names.lines().count(), 11);
    for name in names.lines() {
        let out = ldend(&["catalog", name]);
        assert_eq!(code(&out), 0, "{name}");
        let _: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    }
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for i in 0..2 {
        let target = dir.path().join(format!("h{i}.json"));
        let out = ldend(&[
            "derive",
            "--functor",
            "horizontal",
            "--out",
            p(&target),
            p(&fixture("ld2.alg.json")),
        ]);
        assert_eq!(code(&out), 0);
        texts.push((
            stdout(&out).replace(p(&target), ""),
            fs::read(&target).unwrap(),
        ));
    }
    assert_eq!(texts[0], texts[1]);
    let a = stdout(&ldend(&[
        "--json",
        "search-rb",
        "--entry-set=-1,0,1",
        p(&fixture("p2.alg.json")),
    ]));
    let b = stdout(&ldend(&[
        "--json",
        "search-rb",
        "--entry-set=-1,0,1",
        p(&fixture("p2.alg.json")),
    ]));
    assert_eq!(a, b);
}

#[test]
fn search_rb_finds_nine_on_p2() {
    let out = ldend(&[
        "search-rb",
        "--entry-set=-1,0,1",
        p(&fixture("p2.alg.json")),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("9 Rota-Baxter operator(s)\n"));
    let capped = ldend(&[
        "search-rb",
        "--entry-set=-1,0,1",
        "--cap",
        "80",
        p(&fixture("p2.alg.json")),
    ]);
    assert_eq!(code(&capped), 2);
}

#[test]
fn json_reports_parse() {
    let out = ldend(&[
        "--json",
        "check",
        "--class",
        "pre_lie",
        p(&fixture("n2.alg.json")),
    ]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["failures"][0]["indices"], serde_json::json!([1, 2, 1]));
}

#[test]
fn build_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let module = fixture("p2-regular.mod.json");
    let good = dir.path().join("good");
    let out = ldend(&[
        "build-solution",
        "--module",
        p(&module),
        "--map",
        p(&fixture("rb2.map.json")),
        "--out",
        p(&good),
    ]);
    assert_eq!(code(&out), 0);
    let alg = good.with_extension("alg.json");
    let tensor = good.with_extension("tensor.json");
    let out = ldend(&["verify-eq", "--equation", "eq-2.9", p(&alg), p(&tensor)]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    let id = dir.path().join("id.map.json");
    fs::write(
        &id,
        r#"{"rows":2,"cols":2,"entries":[[1,1,"1"],[2,2,"1"]]}"#,
    )
    .unwrap();
    let bad = dir.path().join("bad");
    let refused = ldend(&[
        "build-solution",
        "--module",
        p(&module),
        "--map",
        p(&id),
        "--out",
        p(&bad),
    ]);
    assert_eq!(code(&refused), 1);
    let forced = ldend(&[
        "build-solution",
        "--force",
        "--module",
        p(&module),
        "--map",
        p(&id),
        "--out",
        p(&bad),
    ]);
    assert_eq!(code(&forced), 0);
    let out = ldend(&[
        "verify-eq",
        "--equation",
        "eq-2.9",
        p(&bad.with_extension("alg.json")),
        p(&bad.with_extension("tensor.json")),
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("norm0 = 6"));
}

#[test]
fn rb_and_lift_round_trip() {
    let out = ldend(&[
        "rb-check",
        "--map",
        p(&fixture("rb2.map.json")),
        p(&fixture("p2.alg.json")),
    ]);
    assert_eq!(code(&out), 0);
    let dir = tempfile::tempdir().unwrap();
    let lifted = dir.path().join("lift.alg.json");
    let out = ldend(&[
        "lift",
        "--form",
        p(&fixture("p2-ext-cocycle.form.json")),
        "--out",
        p(&lifted),
        p(&fixture("p2-ext.alg.json")),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = ldend(&["check", "--class", "l_dendriform", p(&lifted)]);
    assert_eq!(code(&out), 0);
    let vertical = dir.path().join("v.alg.json");
    let out = ldend(&[
        "derive",
        "--functor",
        "vertical",
        "--out",
        p(&vertical),
        p(&lifted),
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&vertical).unwrap()).unwrap();
    let base: serde_json::Value =
        serde_json::from_slice(&fs::read(fixture("p2-ext.alg.json")).unwrap()).unwrap();
    assert_eq!(v["ops"]["circ"], base["ops"]["circ"]);
}
