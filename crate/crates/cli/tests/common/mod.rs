use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_infmod"))
        .args(args)
        .current_dir(root().join("fixtures"))
        .output()
        .expect("binary runs")
}

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

pub fn cases() -> Vec<Case> {
    let text = std::fs::read_to_string(root().join("golden/cases.txt")).expect("case list");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, args) = l.split_once('|').expect("name | args");
            Case { name: name.trim().to_string(), args: args.split_whitespace().map(String::from).collect() }
        })
        .collect()
}

pub fn golden_path(case: &Case) -> PathBuf {
    root().join("golden").join(format!("{}.json", case.name))
}

/// Compare each case's stdout with its golden file; `INFMOD_BLESS=1` rewrites them.
/// Returns the names of mismatching cases.
pub fn check_goldens() -> (usize, Vec<String>) {
    let bless = std::env::var_os("INFMOD_BLESS").is_some();
    let all = cases();
    let mut bad = Vec::new();
    for case in &all {
        let args: Vec<&str> = case.args.iter().map(String::as_str).collect();
        let out = run(&args);
        let path = golden_path(case);
        if bless && out.status.success() {
            std::fs::write(&path, &out.stdout).expect("write golden");
        }
        let want = std::fs::read(&path).unwrap_or_default();
        if !out.status.success() || out.stdout != want {
            bad.push(case.name.clone());
        }
    }
    (all.len(), bad)
}

/// Exit codes for a parse error, a singular input and a forced verification failure.
pub fn check_exit_codes() -> Vec<String> {
    let expect = [
        (vec!["structure", "malformed.json"], 1),
        (vec!["structure", "zero_den.json"], 1),
        (vec!["structure", "missing.json"], 1),
        (vec!["--field", "GF:100", "structure", "worked_l.json"], 1),
        (vec!["structure", "singular.json"], 2),
        (vec!["basis", "singular.json"], 2),
        (vec!["exists-hom", "singular.json", "worked_l.json", "--direction", "surj"], 2),
        (vec!["--fail-verification", "structure", "worked_l.json"], 3),
        (vec!["--fail-verification", "realize", "g_s.json"], 3),
        (vec!["structure", "worked_l.json"], 0),
    ];
    let mut bad = Vec::new();
    for (args, code) in expect {
        let got = run(&args).status.code();
        if got != Some(code) {
            bad.push(format!("{} -> {got:?}, want {code}", args.join(" ")));
        }
    }
    bad
}
