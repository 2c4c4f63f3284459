//! Shared golden-file corpus for the CLI tests and the acceptance suite.

use std::path::PathBuf;
use std::process::Command;

pub fn fixture(rel: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(rel);
    p.to_str().expect("utf-8 path").to_string()
}

/// Every golden case: (name, argv after the program name).
pub fn golden_cases() -> Vec<(String, Vec<String>)> {
    let specs = [
        "diag2", "six", "chain3", "boolean2", "grid3a", "grid3b", "trivial", "diag3", "quarter",
        "grid3c",
    ];
    let mut cases = Vec::new();
    for s in specs {
        let spec = fixture(&format!("specs/{s}.toml"));
        for sub in ["generate", "spectrum", "hull"] {
            cases.push((
                format!("{s}_{sub}"),
                vec![sub.to_string(), "--spec".into(), spec.clone()],
            ));
        }
        cases.push((
            format!("{s}_adjoint"),
            vec![
                "adjoint".into(),
                "--spec".into(),
                spec.clone(),
                "--seed".into(),
                "0".into(),
            ],
        ));
    }
    let vector_cases = [
        ("diag2", "member", "1/3,1/3"),
        ("diag2", "member", "1/3,1/2"),
        ("diag2", "divhull", "1/3,1/3"),
        ("six", "essential", "1/3,0"),
        ("six", "essential", "1/5,1/5"),
        ("six", "member", "2/7,1"),
        ("quarter", "divhull", "1/8,1/4"),
        ("diag3", "essential", "1/2,1/2"),
        ("grid3b", "member", "1/3,2/3,0"),
        ("chain3", "divhull", "1/5"),
    ];
    for (i, (s, sub, v)) in vector_cases.iter().enumerate() {
        cases.push((
            format!("{s}_{sub}_v{i}"),
            vec![
                sub.to_string(),
                "--spec".into(),
                fixture(&format!("specs/{s}.toml")),
                "--vector".into(),
                v.to_string(),
            ],
        ));
    }
    let map_cases = [
        ("extend", "diag2", "one", "diag_to_one"),
        ("functor", "diag2", "one", "diag_to_one"),
        ("extend", "chain3", "diag3", "chain_to_diag3"),
        ("functor", "chain3", "diag3", "chain_to_diag3"),
        ("extend", "six", "six", "six_id"),
        ("functor", "six", "six", "six_id"),
    ];
    for (sub, a, b, m) in map_cases {
        cases.push((
            format!("{a}_to_{b}_{sub}"),
            vec![
                sub.to_string(),
                "--spec-a".into(),
                fixture(&format!("specs/{a}.toml")),
                "--spec-b".into(),
                fixture(&format!("specs/{b}.toml")),
                "--map".into(),
                fixture(&format!("maps/{m}.txt")),
            ],
        ));
    }
    let pwl_cases = [
        ("pwl_mcnaughton_doubling", vec!["pwl", "mcnaughton", "x (+) x"]),
        ("pwl_eval_doubling", vec!["pwl", "eval", "x (+) x"]),
        ("pwl_eval_neg", vec!["pwl", "eval", "~(x (.) x)"]),
        ("pwl_eval_scalar", vec!["pwl", "eval", "1/2 # (x \\/ ~x)"]),
        ("pwl_decompose_halfscale", vec!["pwl", "decompose", "1/2 # x"]),
        (
            "pwl_decompose_lattice",
            vec!["pwl", "decompose", "(x (+) x) /\\ ~x"],
        ),
        ("pwl_mcnaughton_scalar", vec!["pwl", "mcnaughton", "1/3 # x"]),
    ];
    for (name, argv) in pwl_cases {
        cases.push((
            name.to_string(),
            argv.into_iter().map(str::to_string).collect(),
        ));
    }
    cases
}

/// Runs the compiled binary with the given arguments; returns (stdout, ok).
pub fn run_binary(args: &[String]) -> (String, bool) {
    let out = Command::new(env!("CARGO_BIN_EXE_rieszhull"))
        .args(args)
        .output()
        .expect("spawn rieszhull binary");
    (
        String::from_utf8(out.stdout).expect("utf-8 output"),
        out.status.success(),
    )
}
