//! Golden outputs for every subcommand. Regenerate with `UPDATE_GOLDEN=1`.

mod common;

use std::process::Command;

use common::{golden_cases, golden_dir, run_cli};

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let dir = golden_dir();
    let mut mismatches = Vec::new();
    for (name, argv) in golden_cases() {
        let args: Vec<&str> = argv.iter().map(String::as_str).collect();
        let actual = run_cli(&args, None);
        let path = dir.join(&name);
        if update {
            std::fs::write(&path, &actual).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == actual => {}
            Ok(expected) => mismatches.push(format!(
                "{name}:\n--- expected\n{expected}\n--- actual\n{actual}"
            )),
            Err(_) => mismatches.push(format!("{name}: missing golden file")),
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn outputs_ignore_thread_count() {
    for args in [
        &["oracle", "-n", "3", "--json", "(x^2 y^5, x^4 y^3, x^5 y)"][..],
        &["compute", "-n", "5", "(x y, z^2)"][..],
    ] {
        let one = run_cli(args, Some("1"));
        assert_eq!(one, run_cli(args, Some("4")));
        assert_eq!(one, run_cli(args, None));
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_diffpow"))
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(
        code(&["compute", "-n", "6", "(x^2 y^5, x^4 y^3, x^5 y)"]),
        Some(0)
    );
    assert_eq!(code(&["principality", "(x^2 y, x^3)"]), Some(2));
    assert_eq!(code(&["compute", "-n", "0", "(x)"]), Some(1));
    assert_eq!(code(&["bogus"]), Some(1));
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["compute", "-n", "2", "(x^2"]), Some(1));
    assert_eq!(code(&["radical", "--vars", "1", "(x y)"]), Some(1));
}
