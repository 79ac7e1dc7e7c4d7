use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn shipped_table() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/rankone.tbl")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wonder-systems"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_exit_codes() {
    let a1 = fixture("a1_rank_one.sys");
    let out = run(&["validate", path_str(&a1)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 8);
    assert!(stdout(&out).lines().all(|l| l.starts_with("AXIOM ") && l.ends_with(": PASS")));

    let dir = tempfile::tempdir().unwrap();
    let broken = write_temp(&dir, "broken.sys", "group: A1\nsp: -\nsigma:\n  1\nA:\n  D+: 1\n");
    let out = run(&["validate", &broken]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("AXIOM A2: FAIL"), "{}", stdout(&out));

    let malformed = write_temp(&dir, "malformed.sys", "group: A1\nsp: -\nsigma:\n  1 2\nA:\n");
    let out = run(&["validate", &malformed]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));

    let out = run(&["validate", "/nonexistent/system.sys"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_reports() {
    let table = shipped_table();
    let report = |name: &str| {
        let out = run(&["classify", "--table", path_str(&table), path_str(&fixture(name))]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        stdout(&out)
    };
    let a1 = report("a1_rank_one.sys");
    for line in ["cuspidal: true", "decomposable: false", "primitive-1-combs: D+, D-", "defect: 1", "strict: false"] {
        assert!(a1.contains(line), "{line}\n{a1}");
    }
    let product = report("a1xa1_product.sys");
    assert!(product.contains("decomposable: true {D1+,D1-} {D2+,D2-}"), "{product}");
    assert!(product.contains("defect: 2"), "{product}");
    let tail = report("b4_tail.sys");
    assert!(tail.contains("cuspidal: false"), "{tail}");
    assert!(tail.contains("tails: b(2) witness {D+,D-}"), "{tail}");
    let keys: Vec<&str> = tail.lines().map(|l| l.split(':').next().unwrap()).collect();
    assert_eq!(
        keys,
        [
            "cuspidal",
            "decomposable",
            "combs",
            "tails",
            "primitive",
            "primitive-1-combs",
            "defect",
            "reductive",
            "strict",
            "spherically-closed"
        ]
    );
}

#[test]
fn classify_rejects_invalid_systems() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write_temp(&dir, "broken.sys", "group: A2\nsp: 1\nsigma:\n  1 1\nA:\n");
    assert_eq!(run(&["classify", &broken]).status.code(), Some(1));
}

#[test]
fn quotients_listing_and_single_quotient() {
    let a1 = fixture("a1_rank_one.sys");
    let out = run(&["quotients", path_str(&a1)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4, "{text}");
    assert_eq!(lines[0], "{} rank 1");
    assert!(lines[1].starts_with("{D+} rank 0 minimal"));
    assert!(lines[3].starts_with("{D+,D-} rank 0"));

    let out = run(&["quotients", path_str(&a1), "--by", "D+"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "group: A1\nsp: -\nsigma:\nA:\n");

    let dir = tempfile::tempdir().unwrap();
    // D2 pairs negatively with α2 and is alone in the subset.
    let shared = write_temp(
        &dir,
        "shared.sys",
        "group: A2\nsp: -\nsigma:\n  1 0\n  0 1\nA:\n  D1: 1 1\n  D2: 1 -2\n  D3: -2 1\n",
    );
    let out = run(&["quotients", &shared, "--by", "D2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not distinguished"));
    assert_eq!(run(&["quotients", &shared, "--by", "Q"]).status.code(), Some(2));
}

#[test]
fn localize_at_roots() {
    let tail = fixture("b4_tail.sys");
    let out = run(&["localize", path_str(&tail), "--roots", "3,4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "group: B2\nsp: 2\nsigma:\n  1 1\nA:\n");
    assert_eq!(run(&["localize", path_str(&tail), "--roots", "9"]).status.code(), Some(2));
}

#[test]
fn enumerate_prints_documents_with_keys() {
    let out = run(&["enumerate", "--group", "A1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("group: A1").count(), 4);
    assert_eq!(text.matches("# key ").count(), 4);

    let out = run(&["enumerate", "--group", "A2", "--cuspidal", "true", "--jobs", "2"]);
    assert_eq!(stdout(&out).matches("group: A2").count(), 4);
    let out = run(&["enumerate", "--group", "A2", "--partition", "1"]);
    assert!(stdout(&out).lines().all(|l| !l.starts_with("sp:") || l == "sp: 1"));
    assert_eq!(run(&["enumerate", "--group", "A2", "--partition", "4"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--group", "Q7"]).status.code(), Some(2));
}

#[test]
fn enumerate_output_parses_back() {
    let out = run(&["enumerate", "--group", "B2"]);
    let systems = wonder_systems::format::parse_systems(&stdout(&out)).unwrap();
    assert!(!systems.is_empty());
    let table = wonder_systems::RankOneTable::builtin();
    assert!(systems.iter().all(|s| s.validate(&table).is_valid()));
}

#[test]
fn render_matches_golden_file() {
    let out = run(&["render", path_str(&fixture("a1_rank_one.sys"))]);
    assert_eq!(out.status.code(), Some(0));
    let golden = std::fs::read_to_string(fixture("a1_rank_one.render")).unwrap();
    assert_eq!(stdout(&out), golden);
}

#[test]
fn bad_table_file_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let table = write_temp(&dir, "bad.tbl", "entry x support=Q(1..1) coeffs=ones sp=default\n");
    let a1 = fixture("a1_rank_one.sys");
    let out = run(&["validate", "--table", &table, path_str(&a1)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}
