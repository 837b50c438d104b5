//! End-to-end checks of the command-line surface: outputs and exit codes.

use std::path::{Path, PathBuf};
use std::process::Command;

fn flock_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_flock"))
}

fn data(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = flock_bin().args(args).output().expect("spawn flock");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn diagram_prints_regions_and_crossings() {
    let (code, stdout, _) = run(&["diagram", "--braid", "1 1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("strands 2  crossings 2  regions 4  components 2"));
    let (code, stdout, _) = run(&["diagram", "--braid", "1 1", "--dump"]);
    assert_eq!(code, 0);
    // one machine line per crossing: sign a b c d rs rm rt
    let dump_lines: Vec<&str> = stdout
        .lines()
        .filter(|l| l.starts_with('1') || l.starts_with('-'))
        .collect();
    assert_eq!(dump_lines.len(), 2);
    assert_eq!(dump_lines[0].split_whitespace().count(), 8);
}

#[test]
fn color_counts_match_reference() {
    let flock = data("flock12/flock12.flock");
    let (code, stdout, _) = run(&[
        "color",
        "--braid",
        "1 1",
        "--flock",
        flock.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("864 colorings"));
}

#[test]
fn invariant_prints_polynomial() {
    let flock = data("flock12/flock12.flock");
    let cocycle = data("flock12/phi.cocycle1");
    let (code, stdout, _) = run(&[
        "invariant",
        "--braid",
        "1 1",
        "--flock",
        flock.to_str().unwrap(),
        "--cocycle",
        cocycle.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "480 + 264t + 120t^2");
}

#[test]
fn orbits_histogram() {
    let flock = data("flock12/flock12.flock");
    let (code, stdout, _) = run(&[
        "orbits",
        "--braid",
        "1 1 1 2 1 1 2",
        "--flock",
        flock.to_str().unwrap(),
        "--action",
        "conj",
        "--subgroup",
        "4",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("1440 colorings, 624 orbits"));
    assert!(stdout.contains("orbit size 1: 216"));
    assert!(stdout.contains("orbit size 3: 408"));
}

#[test]
fn validation_errors_exit_with_2() {
    // malformed braid letter
    let flock = data("flock12/flock12.flock");
    let (code, _, stderr) = run(&[
        "color",
        "--braid",
        "1 x",
        "--flock",
        flock.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("bad braid token"));
    // missing file
    let (code, _, _) = run(&["check", "--flock", "/nonexistent.flock"]);
    assert_eq!(code, 2);
}

#[test]
fn cocycle_verify_catches_perturbation() {
    let dir = std::env::temp_dir().join(format!("flock-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = std::fs::read_to_string(data("flock12/phi.cocycle1")).unwrap();
    // flip one digit in the first value row
    let mut lines: Vec<String> = good.lines().map(String::from).collect();
    let row = lines.iter().position(|l| l.chars().all(|c| c.is_ascii_digit()) && l.len() == 12).unwrap();
    let mut chars: Vec<char> = lines[row].chars().collect();
    chars[0] = if chars[0] == '0' { '1' } else { '0' };
    lines[row] = chars.into_iter().collect();
    let bad_path = dir.join("bad.cocycle1");
    std::fs::write(&bad_path, lines.join("\n")).unwrap();
    let flock = data("flock12/flock12.flock");
    let (code, _, stderr) = run(&[
        "cocycle",
        "verify",
        "--flock",
        flock.to_str().unwrap(),
        "--cocycle",
        bad_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("condition"));
    // the bundled file passes
    let (code, stdout, _) = run(&[
        "cocycle",
        "verify",
        "--flock",
        flock.to_str().unwrap(),
        "--cocycle",
        data("flock12/phi.cocycle1").to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("cocycle conditions hold"));
}

#[test]
fn classify_reports_incomplete_coverage() {
    let catalog = data("catalog");
    let (code, _, stderr) = run(&[
        "classify",
        "--orders",
        "32",
        "--catalog",
        catalog.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("does not cover order 32"));
}

#[test]
fn classify_prints_zero_rows_for_covered_orders_without_groups() {
    let catalog = data("catalog");
    let (code, stdout, _) = run(&[
        "classify",
        "--orders",
        "4,5,6",
        "--catalog",
        catalog.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert!(lines.iter().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["4", "0", "0"]));
    assert!(lines.iter().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["6", "1", "1"]));
}

#[test]
fn homology_command_runs_small_degrees() {
    let dir = std::env::temp_dir().join(format!("flock-cli-hom-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z2.flock");
    std::fs::write(&path, "flock\norder 2\nb 2\n1 2\n2 1\n").unwrap();
    let (code, stdout, _) = run(&[
        "homology",
        "--flock",
        path.to_str().unwrap(),
        "--degree",
        "1",
        "--normalized",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("H_1 = "));
}

#[test]
fn cocycle_search_writes_verified_basis() {
    let dir = std::env::temp_dir().join(format!("flock-cli-search-{}", std::process::id()));
    let out = dir.join("basis");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z4.flock");
    std::fs::write(&path, "flock\norder 4\nb 3\n1 2 3 4\n2 3 4 1\n3 4 1 2\n4 1 2 3\n").unwrap();
    let (code, stdout, _) = run(&[
        "cocycle",
        "search",
        "--flock",
        path.to_str().unwrap(),
        "--modulus",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("cocycle space dimension"));
    // every emitted basis vector passes verify
    for entry in std::fs::read_dir(&out).unwrap() {
        let p = entry.unwrap().path();
        let (code, _, _) = run(&[
            "cocycle",
            "verify",
            "--flock",
            path.to_str().unwrap(),
            "--cocycle",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code, 0, "{p:?}");
    }
}

#[test]
fn batch_csv_has_expected_shape() {
    let dir = std::env::temp_dir().join(format!("flock-cli-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let braids = dir.join("two.braids");
    std::fs::write(&braids, "1 1\nstrands=2\n").unwrap();
    let csv = dir.join("out.csv");
    let (code, stdout, _) = run(&[
        "batch",
        "--braids",
        braids.to_str().unwrap(),
        "--flock",
        data("flock12/flock12.flock").to_str().unwrap(),
        "--cocycle",
        data("flock12/phi.cocycle1").to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("2 braids, 2 distinct polynomials, 2 distinct coloring counts"));
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "braid,p,c0,c1,c2");
    assert_eq!(lines[1], "\"1 1\",3,480,264,120");
    assert_eq!(lines[2], "\"strands=2\",3,1728,0,0");
}

#[test]
fn check_runs_battery_on_bundled_flock() {
    let (code, stdout, _) = run(&[
        "check",
        "--flock",
        data("flock12/flock12.flock").to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("quasigroup: ok"));
    assert!(stdout.contains("para-associativity: ok"));
    assert!(stdout.contains("left nesting: ok"));
    assert!(stdout.contains("colorable: true"));
}
