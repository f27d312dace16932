use std::process::Command;

use ncsurf::cli::{main_with_args, parse_family};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["ncsurf"];
    full.extend_from_slice(args);
    let code = main_with_args(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn rees_table_for_the_triple_point_family() {
    let (code, out, _) = run(&[
        "--task",
        "rees-report",
        "--family",
        "x*y, x^m, y^m",
        "--max-degree",
        "20",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("rees new generators m=1"));
    assert!(out.contains("{x, y}"));
    assert!(out.contains("rees new generators m=20"));
    assert!(out
        .lines()
        .any(|l| l.starts_with("rees witness") && l.contains("true") && l.ends_with("PASS")));
}

#[test]
fn gluing_ideal_rows() {
    let (code, out, _) = run(&[
        "--task",
        "gluing-ideal",
        "--max-degree",
        "10",
        "--format",
        "structured",
    ]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().filter(|l| l.starts_with("record ")).collect();
    assert_eq!(rows.len(), 10);
    assert!(rows[9]
        .contains("expected=\"(x*y, x^10, y^10)\" computed=\"(x*y, x^10, y^10)\" verdict=PASS"));
    assert!(out.ends_with("summary records=10 failed=0 verdict=PASS\n"));
}

#[test]
fn example_two_report() {
    let (code, out, _) = run(&["--task", "example2-checks", "--format", "structured"]);
    assert_eq!(code, 0);
    for needle in [
        "name=\"nodes\" inputs=\"C x E / involutions\" expected=\"24\"",
        "name=\"nodes on D_p\"",
        "name=\"sigma moves nodes off nodes\"",
        "expected=\"(2, 2)\"",
        "name=\"h0(P1, O(-4m)) m=5\"",
        "note text=\"node count discrepancy",
    ] {
        assert!(out.contains(needle), "{needle}");
    }
}

#[test]
fn other_tasks_pass() {
    for task in [
        "glue-check",
        "cone-restrict",
        "pole-bounds",
        "embed-search",
        "example1-checks",
    ] {
        let (code, out, err) = run(&["--task", task, "--max-degree", "6"]);
        assert_eq!(code, 0, "{task}: {err}\n{out}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["--frobnicate"]).0, 2);
    assert_eq!(run(&["--task", "nope"]).0, 2);
    assert_eq!(run(&["--max-degree", "0"]).0, 2);
    assert_eq!(run(&["--task", "rees-report"]).0, 2);
    let (code, _, err) = run(&["--task", "rees-report", "--family", "x^(m-2)"]);
    assert_eq!(code, 2);
    assert!(err.contains("negative"));
    let (code, _, err) = run(&["--task", "rees-report", "--family", "x^"]);
    assert_eq!(code, 2);
    assert!(err.contains("byte 2"));
    assert_eq!(run(&["--task", "gluing-ideal", "--family", "x^m"]).0, 2);
    assert_eq!(
        run(&["--task", "rees-report", "--family", "x^(2*m-1)"]).0,
        2
    );
}

#[test]
fn help_exits_0() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("--max-degree"));
}

#[test]
fn report_written_to_file() {
    let path = std::env::temp_dir().join(format!("ncsurf-report-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&[
        "--task",
        "embed-search",
        "--format",
        "structured",
        "--out",
        p,
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.ends_with("verdict=PASS\n"));
}

#[test]
fn binary_matches_library_output() {
    let args = [
        "--task",
        "pole-bounds",
        "--max-degree",
        "3",
        "--format",
        "structured",
    ];
    let bin = Command::new(env!("CARGO_BIN_EXE_ncsurf"))
        .args(args)
        .output()
        .unwrap();
    assert_eq!(bin.status.code(), Some(0));
    let (_, lib, _) = run(&args);
    assert_eq!(String::from_utf8(bin.stdout).unwrap(), lib);
}

#[test]
fn family_round_trip() {
    for src in [
        "x*y, x^m, y^m",
        "x^m",
        "x^(2*m+3)*y^4",
        "a*b*c, a^(3*m), b^(m+1)*c^2",
    ] {
        let f = parse_family(src).unwrap();
        let printed = f.to_string();
        assert_eq!(printed, src);
        assert_eq!(parse_family(&printed).unwrap(), f);
    }
    // non-canonical spellings normalize
    assert_eq!(
        parse_family("x ^ 1*m , y^(m+0)").unwrap().to_string(),
        "x^m, y^m"
    );
}
