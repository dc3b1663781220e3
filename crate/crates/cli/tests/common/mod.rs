//! Helpers shared by the golden and acceptance targets.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use diffpow_core::{ExponentVector, MonomialIdeal};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const IDEALS: [(&str, &str); 4] = [
    ("pure", "(x^2, y^3)"),
    ("split", "(x y, z^2)"),
    ("staircase", "(x^2 y^5, x^4 y^3, x^5 y)"),
    ("figure", "(x y^2, x^3)"),
];

pub const SUBCOMMANDS: [(&str, &[&str]); 12] = [
    ("compute", &["compute", "-n", "3"]),
    ("power", &["power", "-n", "2"]),
    ("decompose", &["decompose"]),
    ("radical", &["radical"]),
    ("closure", &["closure"]),
    ("witness", &["witness", "--nmax", "8"]),
    ("principality", &["principality"]),
    ("nmin", &["nmin", "--cap", "32"]),
    ("contain-up", &["contain", "--dir", "up", "-n", "2"]),
    ("contain-down", &["contain", "--dir", "down", "-n", "2"]),
    ("oracle", &["oracle", "-n", "2"]),
    ("staircase", &["staircase", "--overlay", "2,3"]),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn run_cli(args: &[&str], threads: Option<&str>) -> String {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_diffpow"));
    cmd.args(args);
    if let Some(t) = threads {
        cmd.env("RAYON_NUM_THREADS", t);
    }
    let out = cmd.output().expect("binary runs");
    format!(
        "$ diffpow {}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        args.join(" "),
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

pub fn golden_cases() -> Vec<(String, Vec<String>)> {
    let mut cases = Vec::new();
    for (slug, ideal) in IDEALS {
        for (name, args) in SUBCOMMANDS {
            for json in [false, true] {
                let mut argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
                if json {
                    argv.push("--json".into());
                }
                argv.push(ideal.into());
                let suffix = if json { "json" } else { "txt" };
                cases.push((format!("{name}.{slug}.{suffix}"), argv));
            }
        }
    }
    let extra: [(&str, &[&str]); 9] = [
        ("no-uniform.n.txt", &["no-uniform", "--poly", "0,1"]),
        ("no-uniform.2n.txt", &["no-uniform", "--poly", "0,2"]),
        ("no-uniform.n+3.txt", &["no-uniform", "--poly", "3,1"]),
        (
            "no-uniform.2n.json",
            &["no-uniform", "--json", "--poly", "0,2"],
        ),
        (
            "compute-trace.split.txt",
            &["compute", "--trace", "-n", "3", "(x y, z^2)"],
        ),
        (
            "oracle-witness.pure.txt",
            &["oracle", "-n", "3", "--witness", "x^2 y^3", "(x^2, y^3)"],
        ),
        (
            "staircase-svg.figure.txt",
            &["staircase", "--svg", "--extent", "6,6", "(x y^2, x^3)"],
        ),
        ("usage-zero-power.txt", &["compute", "-n", "0", "(x)"]),
        ("usage-parse.txt", &["compute", "-n", "2", "(x, q)"]),
    ];
    for (name, args) in extra {
        cases.push((name.into(), args.iter().map(|s| s.to_string()).collect()));
    }
    cases
}

/// Seeded corpus of proper nonzero ideals with `dim <= max_dim`, at most
/// `max_gens` generators and exponents at most `max_exp`.
pub fn corpus(
    seed: u64,
    count: usize,
    max_dim: usize,
    max_gens: usize,
    max_exp: u32,
) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let d = rng.gen_range(1..=max_dim);
        let m = rng.gen_range(1..=max_gens);
        let gens = (0..m).map(|_| {
            ExponentVector::new((0..d).map(|_| rng.gen_range(0..=max_exp)).collect()).unwrap()
        });
        let ideal = MonomialIdeal::new(d, gens).unwrap();
        if !ideal.is_unit() {
            out.push(ideal);
        }
    }
    out
}
