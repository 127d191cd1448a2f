use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use inertia_core::CertificateResult;

fn inertia(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inertia")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn gen(dir: &Path, name: &str, spec: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut args = vec!["gen"];
    args.extend_from_slice(spec);
    args.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let o = inertia(&args);
    assert!(o.status.success(), "{}", stderr(&o));
    path
}

#[test]
fn gen_headers() {
    for (spec, header) in [
        (&["paley", "17"][..], "17 68"),
        (&["polarity", "2"], "7 9"),
        (&["cycle", "5"], "5 5"),
        (&["petersen"], "10 15"),
        (&["bipartite", "2", "3"], "5 6"),
    ] {
        let mut args = vec!["gen"];
        args.extend_from_slice(spec);
        let o = inertia(&args);
        assert!(o.status.success());
        assert_eq!(stdout(&o).lines().next().unwrap(), header, "{spec:?}");
    }
    let o = inertia(&["gen", "paley", "19"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("mod 4"));
    let o = inertia(&["gen", "polarity", "9"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("not prime"));
}

#[test]
fn gen_summary_reports_girth() {
    let o = inertia(&["gen", "cycle", "5"]);
    assert!(stderr(&o).contains("girth 5 c4_free true"));
    let o = inertia(&["gen", "tree", "12", "--seed", "4"]);
    assert!(stderr(&o).contains("m 11 girth inf"));
}

#[test]
fn bounds_rows() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = gen(dir.path(), "c5.txt", &["cycle", "5"]);
    let o = inertia(&["bounds", c5.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().nth(1).unwrap(), "5,5,2,2.236067977,false,3,,2,3");

    let p = gen(dir.path(), "p17.txt", &["paley", "17"]);
    let o = inertia(&["bounds", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("17,68,3,4.123105626,false,9,"));

    let r = gen(dir.path(), "r3.txt", &["remark", "3"]);
    let o = inertia(&["bounds", r.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("18,"));
    assert!(stdout(&o).contains(",9.000000000,false,"));
}

#[test]
fn irregular_ratio_needs_force() {
    let dir = tempfile::tempdir().unwrap();
    let s = gen(dir.path(), "s.txt", &["star", "4"]);
    let o = inertia(&["bounds", s.to_str().unwrap()]);
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("5,4,4,,,"));
    let o = inertia(&["bounds", s.to_str().unwrap(), "--force-ratio"]);
    assert!(stdout(&o).lines().nth(1).unwrap().contains(",true,"));
}

fn certify(args: &[&str]) -> (CertificateResult, String) {
    let mut full = vec!["certify"];
    full.extend_from_slice(args);
    let o = inertia(&full);
    assert!(o.status.success(), "{}", stderr(&o));
    let cert = CertificateResult::from_json(&stdout(&o)).unwrap();
    cert.validate().unwrap();
    (cert, stderr(&o))
}

#[test]
fn certify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = gen(dir.path(), "c5.txt", &["cycle", "5"]);
    let (cert, verdict) = certify(&[c5.to_str().unwrap()]);
    assert_eq!(cert.bound, 2);
    assert!(verdict.contains("certificate bound 2 n>=0 3"));

    let s = gen(dir.path(), "s.txt", &["star", "9"]);
    let (cert, verdict) = certify(&[s.to_str().unwrap()]);
    assert_eq!(cert.bound, 9);
    assert!(verdict.contains("n>=0 9"));

    let pol = gen(dir.path(), "pol7.txt", &["polarity", "7"]);
    let (cert, _) = certify(&[pol.to_str().unwrap(), "--random", "42"]);
    assert_eq!(cert.n, 57);
    assert!(cert.bound >= 12);
}

#[test]
fn certify_refuses_four_cycles() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen(dir.path(), "p.txt", &["paley", "17"]);
    let o = inertia(&["certify", p.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("4-cycle ["));
}

#[test]
fn certify_with_weights_file() {
    let dir = tempfile::tempdir().unwrap();
    let g = inertia_core::graph::cycle(7).unwrap();
    let w = inertia_core::spectral::random_weighting(&g, 9, inertia_core::WeightLaw::UnitComplex);
    let gp = dir.path().join("g.txt");
    let wp = dir.path().join("w.txt");
    std::fs::write(&gp, inertia_core::io::write_edge_list(&g)).unwrap();
    std::fs::write(&wp, inertia_core::io::write_weighting(&w)).unwrap();
    let (cert, _) = certify(&[gp.to_str().unwrap(), "--weights", wp.to_str().unwrap()]);
    assert_eq!(cert, inertia_core::certify_inertia(&w).unwrap());

    let o = inertia(&["spectrum", "--weights", wp.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 7);
}

#[test]
fn spectrum_of_c5() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = gen(dir.path(), "c5.txt", &["cycle", "5"]);
    let o = inertia(&["spectrum", c5.to_str().unwrap()]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], "2.000000000000");
    assert_eq!(lines[4], "-1.618033988750");
}

#[test]
fn runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen(dir.path(), "a.txt", &["gnp", "30", "0.3", "--seed", "7"]);
    let b = gen(dir.path(), "b.txt", &["gnp", "30", "0.3", "--seed", "7"]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let args = ["experiment-gap", "--q", "3,5", "--restarts", "4", "--steps", "50"];
    let first = inertia(&args);
    let second = inertia(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let rows: Vec<&str> = std::str::from_utf8(&first.stdout).unwrap().lines().collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[1].starts_with("polarity3-girth5,13,"));
    assert!(rows[2].starts_with("polarity5-girth5,31,"));
}

#[test]
fn gnuplot_script_names_the_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("gap.csv");
    let gp = dir.path().join("gap.gp");
    let o = inertia(&[
        "experiment-gap", "--q", "3", "--restarts", "2", "--steps", "10",
        "-o", csv.to_str().unwrap(), "--gnuplot", gp.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let script = std::fs::read_to_string(gp).unwrap();
    assert!(script.contains(csv.to_str().unwrap()));
    assert!(std::fs::read_to_string(csv).unwrap().starts_with("graph_id,"));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 1\n0 5\n").unwrap();
    let o = inertia(&["bounds", bad.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}
