use std::path::Path;
use std::process::{Command, Output};

use qschur_hh::cli::{Report, ReportBody};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschur-hh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn report(args: &[&str]) -> Report {
    let o = bin(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn hh_json() {
    let r = report(&["hh", "--e", "3", "--field", "rational", "--format", "json"]);
    assert_eq!(r.tool, "qschur-hh");
    assert_eq!(r.version, env!("CARGO_PKG_VERSION"));
    let ReportBody::Hh(h) = &r.result else {
        panic!("wrong body")
    };
    assert_eq!(h.hh_dims.as_slice(), &[3, 1, 1, 1, 1]);
    // re-serialising gives the same document
    let again = serde_json::to_string_pretty(&r).unwrap() + "\n";
    assert_eq!(again, stdout(&bin(&["hh", "--e", "3", "--format", "json"])));
}

#[test]
fn resolution_verify_e4() {
    let o = bin(&["resolution", "--e", "4", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for needle in ["d∘d = 0", "exact", "minimal"] {
        assert!(text.contains(needle), "missing {needle:?} in\n{text}");
    }
    let r = report(&["resolution", "--e", "4", "--verify", "--format", "json"]);
    let ReportBody::Resolution(res) = &r.result else {
        panic!("wrong body")
    };
    assert!(res.verification.as_ref().unwrap().passed());
    assert!(!res.repair.candidates.is_empty());
    assert_eq!(res.length, 6);
}

#[test]
fn kernel_pi_witness() {
    let r = report(&[
        "kernel-pi",
        "--e",
        "2",
        "--w",
        "2",
        "--max-degree",
        "6",
        "--format",
        "json",
    ]);
    let ReportBody::KernelPi(k) = &r.result else {
        panic!("wrong body")
    };
    assert_eq!(k.listed_generators, ["p3", "p4", "p5"]);
    let d2 = &k.degrees[2];
    assert_eq!(d2.ideal_dim, 0);
    assert!(d2.kernel_outside_ideal.iter().any(|w| w.starts_with("p2")));
    assert!(stdout(&bin(&["kernel-pi", "--e", "2", "--w", "2", "--max-degree", "6"])).contains("p2"));
}

#[test]
fn usage_errors() {
    for args in [
        &["hh", "--e", "1"][..],
        &["hh", "--e", "3", "--field", "4"],
        &["hh", "--e", "3", "--format", "xml"],
        &["hh"],
        &["kernel-pi", "--e", "2", "--w", "2", "--max-degree", "3"],
        &["blocks", "--e", "1", "--n", "3"],
        &["quotient", "--w", "2", "--max-degree", "4", "--generators", "q7"],
    ] {
        let o = bin(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn csv_has_header() {
    let text = stdout(&bin(&["hh", "--e", "2", "--format", "csv"]));
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("degree_convention,degree,hh_dim"));
    assert_eq!(lines.count(), 3);
    let text = stdout(&bin(&["blocks", "--e", "3", "--n", "5", "--format", "csv"]));
    assert_eq!(text.lines().next(), Some("weight,core,partition"));
    assert_eq!(text.lines().count(), 1 + 7);
    let text = stdout(&bin(&["wreath", "--e", "2", "--w", "2", "--format", "csv"]));
    assert!(text.lines().next().unwrap().contains("degree_convention"));
}

fn cached(args: &[&str], path: &Path) -> Output {
    let mut v: Vec<&str> = args.to_vec();
    v.extend(["--cache", path.to_str().unwrap()]);
    bin(&v)
}

#[test]
fn cache_hit_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a3.json");
    for args in [
        &["hh", "--e", "3", "--format", "json"][..],
        &["ring", "--e", "3", "--format", "json"],
    ] {
        let _ = std::fs::remove_file(&path);
        let cold = cached(args, &path);
        let warm = cached(args, &path);
        assert!(path.exists());
        assert_eq!(cold.status.code(), Some(0));
        assert_eq!(cold.stdout, warm.stdout, "{args:?}");
        assert!(String::from_utf8_lossy(&warm.stderr).contains("cache"));
        assert_eq!(cold.stdout, bin(args).stdout);
    }
}

#[test]
fn corrupted_cache_is_a_verification_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a3.json");
    assert_eq!(cached(&["resolution", "--e", "3"], &path).status.code(), Some(0));
    let mut doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let entry = &mut doc["degrees"][2]["entries"][0];
    let n = entry[2].as_i64().unwrap();
    entry[2] = serde_json::json!(-n);
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = cached(&["hh", "--e", "3"], &path);
    assert_eq!(o.status.code(), Some(3));
    assert!(
        String::from_utf8_lossy(&o.stderr).contains("d∘d"),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn every_command_renders_every_format() {
    let commands: [&[&str]; 8] = [
        &["algebra", "--e", "3"],
        &["resolution", "--e", "3", "--verify"],
        &["hh", "--e", "3", "--field", "5"],
        &["ring", "--e", "3"],
        &["wreath", "--e", "2", "--w", "3", "--convention", "signed"],
        &["kernel-pi", "--e", "3", "--w", "2", "--max-degree", "7"],
        &["quotient", "--w", "2", "--max-degree", "8", "--generators", "p2,p3"],
        &["blocks", "--e", "3", "--partition", "4,2", "--w", "2"],
    ];
    for c in commands {
        for fmt in ["table", "json", "csv"] {
            let mut args = c.to_vec();
            args.extend(["--format", fmt]);
            let o = bin(&args);
            assert_eq!(
                o.status.code(),
                Some(0),
                "{args:?}: {}",
                String::from_utf8_lossy(&o.stderr)
            );
            assert!(!o.stdout.is_empty());
            if fmt == "json" {
                let r: Report = serde_json::from_slice(&o.stdout).unwrap();
                let back: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
                assert_eq!(r, back);
            }
        }
    }
}
