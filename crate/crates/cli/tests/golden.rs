mod common;

#[test]
fn outputs_match_golden_files() {
    let (n, bad) = common::check_goldens();
    assert!(n >= 20);
    assert!(bad.is_empty(), "mismatching cases: {bad:?}");
}

#[test]
fn exit_codes() {
    let bad = common::check_exit_codes();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn parse_errors_point_at_the_input() {
    let out = common::run(&["structure", "malformed.json"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: malformed.json:2:"), "{err}");
}

#[test]
fn smith_inf_writes_factors() {
    let dir = std::env::temp_dir().join(format!("infmod-smith-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    let out = common::run(&["smith-inf", "w_wide.json", "--out-dir", d]);
    assert!(out.status.success());
    for f in ["P.json", "Sigma.json", "Q.json"] {
        assert!(dir.join(f).exists(), "{f}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
