use std::path::PathBuf;

use assert_cmd::Command;
use lieprop_core::examples_gen::{ExampleRecord, ListReport, RecordSource};
use lieprop_core::proper::{Admits, Criterion, ProperVerdict, Witness};
use lieprop_core::realforms::{lookup, RealForm};

fn lieprop() -> Command {
    let mut c = Command::cargo_bin("lieprop").unwrap();
    c.env_remove("LIEPROP_ORBIT_CAP");
    c
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = lieprop().args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn stdout_ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

/// Compares with `tests/golden/<name>`; set `LIEPROP_BLESS=1` to rewrite.
fn golden(name: &str, args: &[&str]) {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    let got = stdout_ok(args);
    if std::env::var_os("LIEPROP_BLESS").is_some() {
        std::fs::write(&path, &got).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(got, want, "golden {name}");
}

#[test]
fn golden_orbit_tables() {
    golden("orbits_sl4.txt", &["orbits", "sl4"]);
    golden("orbits_sp6.txt", &["orbits", "sp6"]);
    golden("orbits_so7.txt", &["orbits", "so7"]);
    golden("orbits_so8.txt", &["orbits", "so8"]);
    golden("orbits_sl4.tex", &["orbits", "sl4", "--format", "latex"]);
    golden("orbits_sp6.tex", &["orbits", "sp6", "--format", "latex"]);
}

#[test]
fn golden_diagrams_and_ranks() {
    golden("forms_show_su10.txt", &["forms", "show", "su*10"]);
    golden("forms_show_e6_ii.txt", &["forms", "show", "E6^II"]);
    golden("forms_show_so55.dot", &["forms", "show", "so5,5", "--format", "dot"]);
    golden("ahyp_e6_iv.txt", &["ahyp", "E6^IV"]);
    golden("ahyp_sl4r.txt", &["ahyp", "sl4R"]);
    golden("ahyp_sp6r.txt", &["ahyp", "sp6R"]);
}

#[test]
fn orbit_tables_have_the_right_rows() {
    // header plus one row per orbit
    for (alg, rows) in [("sl4", 5), ("sp6", 8), ("so7", 7), ("so8", 12)] {
        assert_eq!(stdout_ok(&["orbits", alg]).lines().count(), rows + 1, "{alg}");
    }
    let so8 = stdout_ok(&["orbits", "so8"]);
    assert_eq!(so8.lines().filter(|l| l.contains("]^I")).count(), 4);
    let sl4 = stdout_ok(&["orbits", "sl4"]);
    let diagrams: Vec<&str> = sl4.lines().skip(1).map(|l| l.split_whitespace().last().unwrap()).collect();
    assert_eq!(diagrams, ["222", "202", "020", "101", "000"]);
}

#[test]
fn exceptional_orbits_are_rejected() {
    let (code, _, err) = run(&["orbits", "E6"]);
    assert_eq!(code, 2);
    assert!(err.contains("classical"), "{err}");
}

#[test]
fn su_star_ten_diagram_alternates() {
    let out = stdout_ok(&["forms", "show", "su*10"]);
    assert_eq!(out.lines().nth(1).unwrap(), "●───○───●───○───●───○───●───○───●");
}

#[test]
fn forms_list_and_unknown_form() {
    let out = stdout_ok(&["forms", "list"]);
    assert!(out.lines().count() > 20);
    let (code, out, err) = run(&["forms", "show", "bogus"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("bogus"));
}

#[test]
fn forms_json_and_records_round_trip() {
    let out = stdout_ok(&["forms", "show", "E6^IV", "--format", "json"]);
    let f: RealForm = serde_json::from_str(&out).unwrap();
    assert_eq!(f, lookup("E6^IV").unwrap());
    let out = stdout_ok(&["forms", "list", "--format", "json"]);
    let all: Vec<RealForm> = serde_json::from_str(&out).unwrap();
    assert_eq!(all, lieprop_core::realforms::catalog());
    let rec = stdout_ok(&["forms", "show", "su(2,4)", "--format", "record"]);
    let back = lieprop_core::realforms::parse_record(rec.trim()).unwrap();
    assert_eq!(back, lookup("su(2,4)").unwrap());
}

#[test]
fn ahyp_examples() {
    let out = stdout_ok(&["ahyp", "E6^IV"]);
    assert!(out.starts_with("E6^IV: a-hyperbolic rank 1\n"));
    assert!(out.contains("generator (1,0,0,0,1,0)"));
    assert!(stdout_ok(&["ahyp", "sl4R"]).contains("rank 2\n"));
    assert!(stdout_ok(&["ahyp", "sp6R"]).contains("rank 3\n"));
}

fn verdict(args: &[&str]) -> (i32, ProperVerdict) {
    let mut full = vec!["proper", "check"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--format", "json"]);
    let (code, out, err) = run(&full);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}: {err}"));
    (code, v)
}

#[test]
fn proper_check_exit_codes() {
    let (code, v) = verdict(&["--g", "su*6", "--h-rank1"]);
    assert_eq!((code, v.admits, v.criterion), (3, Admits::No, Criterion::RankOne));

    let (code, v) = verdict(&["--g", "su*10", "--h-white", "l2,l3"]);
    assert_eq!((code, v.admits), (0, Admits::Yes));
    match v.witness {
        Some(Witness::OrthogonalRoot { label, .. }) => assert_eq!(label, "l0"),
        w => panic!("{w:?}"),
    }

    let (code, v) = verdict(&["--g", "sl3R", "--h-subsystem", "A1:l1"]);
    assert_eq!((code, v.admits), (4, Admits::Undetermined));

    let (code, v) = verdict(&["--g", "sl4R", "--h-rank1"]);
    assert_eq!((code, v.admits), (0, Admits::Yes));
}

#[test]
fn white_flag_accepts_satake_nodes() {
    // a4,a6 are the white nodes over l2,l3 in su*(10)
    let (code, a) = verdict(&["--g", "su*10", "--h-white", "a4,a6"]);
    let (_, b) = verdict(&["--g", "su*10", "--h-white", "l2,l3"]);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    let (code, _, err) = run(&["proper", "check", "--g", "su*10", "--h-white", "a3"]);
    assert_eq!(code, 2);
    assert!(err.contains("not a white node"), "{err}");
}

#[test]
fn malformed_specs_are_usage_errors() {
    for args in [
        vec!["--g", "sl4R", "--h-subsystem", "A2:l1"],
        vec!["--g", "sl4R", "--h-subsystem", "l9"],
        vec!["--g", "sl4R", "--h-subsystem", "[1,1]"],
        vec!["--g", "sl4R", "--h-white", "l7"],
        vec!["--g", "sl4R"],
        vec!["--g", "sl4R", "--h-rank1", "--h-white", "l1"],
    ] {
        let mut full = vec!["proper", "check"];
        full.extend(args.iter().copied());
        let (code, _, _) = run(&full);
        assert_eq!(code, 2, "{args:?}");
    }
}

#[test]
fn orbit_cap_env_is_honoured() {
    // span(α1, α3) lies in no root wall, so the orbit test decides
    let args = ["proper", "check", "--g", "sl4R", "--h-subspace", "1,0,0;0,0,1", "--format", "json"];
    let out = lieprop().args(args).env("LIEPROP_ORBIT_CAP", "2").output().unwrap();
    let v: ProperVerdict = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.admits, Admits::Undetermined, "{v:?}");
    assert_eq!(out.status.code(), Some(4));
    let out = lieprop().args(args).output().unwrap();
    let v: ProperVerdict = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((v.admits, v.criterion), (Admits::No, Criterion::Okuda), "{v:?}");
    assert_eq!(out.status.code(), Some(3));
    let out = lieprop().args(args).env("LIEPROP_ORBIT_CAP", "lots").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn examples_generate_routes_by_form() {
    let out = stdout_ok(&["examples", "generate", "--g", "su*10", "--format", "json"]);
    let recs: Vec<ExampleRecord> = serde_json::from_str(&out).unwrap();
    assert!(recs.iter().any(|r| r.h == "SU(2)×SU(2)×SU*(6)"));
    assert!(recs.iter().all(|r| r.reverify().unwrap().is_yes()));

    let out = stdout_ok(&["examples", "generate", "--g", "su33", "--format", "json"]);
    let recs: Vec<ExampleRecord> = serde_json::from_str(&out).unwrap();
    assert!(!recs.is_empty());
    assert!(recs.iter().all(|r| matches!(r.source, RecordSource::Parabolic { .. })));

    let out = stdout_ok(&["examples", "generate", "--g", "sl4R", "--format", "json"]);
    let recs: Vec<ExampleRecord> = serde_json::from_str(&out).unwrap();
    assert!(recs.iter().any(|r| r.source == RecordSource::Split));
}

#[test]
fn verify_lists_report() {
    let out = stdout_ok(&["examples", "verify-lists", "--format", "json"]);
    let report: ListReport = serde_json::from_str(&out).unwrap();
    assert!(report.failures().is_empty());
    assert!(report.classical_families_passing() >= 15);
    let text = stdout_ok(&["examples", "verify-lists"]);
    assert!(text.contains("classical families passing: 16/16"), "{text}");
}

#[test]
fn unsupported_format_is_an_error() {
    let (code, _, err) = run(&["ahyp", "sl4R", "--format", "dot"]);
    assert_eq!(code, 2);
    assert!(err.contains("dot"));
}
