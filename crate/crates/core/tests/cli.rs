//! The `witt` binary: subcommands, config files and exit codes.

use std::process::{Command, Output};

fn witt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_witt"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn check_axioms_reports() {
    let out = witt(&["check-axioms", "--family", "qwitt_poly", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["all_zero"] == true));
    assert_eq!(v["verdicts"]["verdict"], "Simple");
    assert!(v.get("timing").is_none());

    let out = witt(&[
        "check-axioms",
        "--family",
        "qwitt_poly",
        "--param",
        "q=zeta(5)",
        "--json",
    ]);
    assert_eq!(json(&out)["verdicts"]["witness"]["generator"], "t^5");
}

#[test]
fn reports_are_byte_identical() {
    for family in [
        "qwitt_poly",
        "qwitt_laurent",
        "power_twist",
        "multi_laurent",
    ] {
        let args = ["check-axioms", "--family", family, "--seed", "42", "--json"];
        assert_eq!(witt(&args).stdout, witt(&args).stdout, "{family}");
        let text = ["simplicity", "--family", family];
        assert_eq!(witt(&text).stdout, witt(&text).stdout, "{family}");
    }
    let a = witt(&[
        "check-axioms",
        "--family",
        "qwitt_poly",
        "--seed",
        "1",
        "--json",
    ]);
    let b = witt(&[
        "check-axioms",
        "--family",
        "qwitt_poly",
        "--seed",
        "2",
        "--json",
    ]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempdir();
    let path = dir.join("scenario.json");
    std::fs::write(
        &path,
        r#"{"family": "qwitt_poly", "params": {"q": "zeta(3)"}, "output": "json"}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let out = witt(&["simplicity", "--config", p]);
    assert_eq!(json(&out)["verdicts"]["witness"]["generator"], "t^3");
    let out = witt(&["simplicity", "--config", p, "--param", "q=zeta(6)"]);
    assert_eq!(json(&out)["verdicts"]["witness"]["generator"], "t^6");

    std::fs::write(
        &path,
        r#"{"family": "qwitt_poly", "windows": {"gcd_window": -1}}"#,
    )
    .unwrap();
    assert_eq!(witt(&["simplicity", "--config", p]).status.code(), Some(2));
    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(witt(&["simplicity", "--config", p]).status.code(), Some(2));
    assert_eq!(
        witt(&["simplicity", "--config", "/nonexistent/witt.json"])
            .status
            .code(),
        Some(2)
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn custom_sigma_from_config() {
    let dir = tempdir();
    let path = dir.join("custom.json");
    std::fs::write(
        &path,
        r#"{"custom": {"parameters": ["q"], "variables": ["t"], "polynomial": ["t"],
            "sigma": ["t -> q*t"]}, "output": "json"}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let out = witt(&["check-axioms", "--config", p]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["algebra"]["g"], "t");
    assert_eq!(v["hypotheses"]["partial_surjective"]["result"], "yes");
    let out = witt(&["partial", "--config", p, "--a", "t^2"]);
    assert_eq!(json(&out)["result"]["partial"], "(1 - q^2)*t");
    assert_eq!(witt(&["simplicity", "--config", p]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    let ok = witt(&[
        "ideal-stable",
        "--family",
        "power_twist",
        "--gen",
        "1 + q*t^2",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let text = String::from_utf8(ok.stdout).unwrap();
    assert!(
        text.contains("stable: true") && text.contains("oracle_agrees: true"),
        "{text}"
    );

    let not_stable = witt(&[
        "ideal-stable",
        "--family",
        "qwitt_poly",
        "--gen",
        "t^2",
        "--json",
    ]);
    assert_eq!(not_stable.status.code(), Some(0));
    assert_eq!(
        json(&not_stable)["result"]["counterexample"]["element"],
        "(1 + q)*t"
    );

    for args in [
        &["partial", "--family", "qwitt_poly", "--a", "t^-1"][..],
        &["partial", "--family", "qwitt_poly", "--a", "1 +"],
        &["partial", "--family", "qwitt_poly", "--a", "s"],
        &["simplicity", "--family", "power_twist", "--param", "s=2"],
        &["simplicity", "--family", "nope"],
        &["simplicity", "--family", "qwitt_poly", "--param", "q"],
        &["ideal-stable", "--family", "qwitt_poly", "--gen", "0"],
        &["bracket", "--family", "qwitt_poly", "--a", "t"],
        &["unknown-subcommand"],
    ] {
        let out = witt(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let err = witt(&["partial", "--family", "qwitt_poly", "--a", "1 + * t"]);
    assert!(String::from_utf8(err.stderr)
        .unwrap()
        .contains("position 4"));
}

#[test]
fn timing_is_opt_in() {
    let out = witt(&["simplicity", "--family", "qwitt_poly", "--json", "--timing"]);
    assert!(json(&out)["timing"]["total_ms"].is_u64());
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "witt-it-{}-{:?}",
        std::process::id(),
        std::thread::current().id()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
