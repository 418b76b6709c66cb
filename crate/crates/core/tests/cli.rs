use dihedral_cayley::cli::{run, EXIT_OK, EXIT_USAGE};

fn dcay(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dcay").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn verify_words_k11() {
    let (code, out, _) = dcay(&["verify-words", "--k", "11"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("22/22 pass"), "{out}");
}

#[test]
fn verify_words_json() {
    let (code, out, _) = dcay(&["verify-words", "--k", "6", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], 6);
    assert_eq!(v["total"], 6);
}

#[test]
fn diameter_report() {
    let (code, out, _) = dcay(&["diameter", "--n", "3", "--k", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "order=162 degree=6 diameter=3 certified=true");
}

#[test]
fn diameter_json() {
    let (code, out, _) = dcay(&["diameter", "--n", "2", "--k", "5", "--bipartite", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 128);
    assert_eq!(v["diameter_measured"], 5);
}

#[test]
fn diameter_budget_is_a_failure() {
    let (code, _, err) = dcay(&["diameter", "--n", "3", "--k", "5", "--budget", "100"]);
    assert_ne!(code, EXIT_OK);
    assert!(!err.is_empty());
}

#[test]
fn verify_cover() {
    let (code, out, _) = dcay(&["verify-cover", "--k", "3", "--n", "3"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("6/6 pass"), "{out}");
}

#[test]
fn bounds_single_row() {
    let (code, out, _) = dcay(&["bounds", "--d", "26", "--k", "5", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order_construction"].to_string(), "3712930");
    assert_eq!(v["exact_diameter_certified"], true);
    assert_eq!(v["threshold_met"], true);
}

#[test]
fn table_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.csv");
    let (code, _, _) = dcay(&[
        "table",
        "--k",
        "3",
        "--k",
        "5",
        "--d-max",
        "30",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("d,k,order,moore_prev,certified,threshold_met")
    );
    assert_eq!(lines.count(), 2 * 29);
    assert!(!csv.contains('\r'));
    assert!(csv.contains("\n26,5,3712930,"));
}

#[test]
fn generate_formats() {
    let (code, out, _) = dcay(&["generate", "--n", "1", "--k", "3", "--format", "edges"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("# order=6"));
    assert_eq!(out.lines().filter(|l| !l.starts_with('#')).count(), 12);

    let (code, out, _) = dcay(&["generate", "--n", "1", "--k", "3", "--format", "dot"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("digraph"));
    assert_eq!(out.matches("->").count(), 12);

    let (code, out, _) = dcay(&["generate", "--n", "2", "--k", "3", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 48);
}

#[test]
fn runs_are_deterministic() {
    for args in [
        &[
            "generate",
            "--n",
            "2",
            "--k",
            "5",
            "--bipartite",
            "--odd-degree",
        ][..],
        &["verify-words", "--k", "9", "--json"][..],
        &["table", "--k", "7", "--d-max", "12"][..],
    ] {
        assert_eq!(dcay(args), dcay(args));
    }
}

#[test]
fn usage_errors() {
    assert_eq!(dcay(&[]).0, EXIT_USAGE);
    assert_eq!(dcay(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(dcay(&["diameter", "--n", "0", "--k", "3"]).0, EXIT_USAGE);
    assert_eq!(dcay(&["diameter", "--n", "2", "--k", "4"]).0, EXIT_USAGE);
    assert_eq!(
        dcay(&["bounds", "--d", "4", "--k", "3", "--bipartite"]).0,
        EXIT_USAGE
    );
    assert_eq!(dcay(&["--help"]).0, EXIT_OK);
}
